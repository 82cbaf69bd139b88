//! Leveled slab graphs and unique-loop analysis.
//!
//! A tube specification records the critical heights of a solid torus
//! boundary and the components of the torus between consecutive critical
//! levels: each component is a vertex tagged with its slab index (slab 0 is
//! below the first critical value, slab `q` above the last), and edges join
//! components separated by a single critical level, so every edge spans
//! adjacent slabs. A connected graph of this kind has cycle rank
//! `E - V + 1`; the analysis succeeds exactly when the rank is 1, extracts
//! the unique cycle, classifies vertices relative to it, and reads off the
//! Morse word of the loop.
//!
//! The loop word orders the loop's extrema by snapped height: a minimal
//! vertex in slab `s` snaps up to critical value `s + 1`, a maximal vertex
//! in slab `s` snaps down to critical value `s`. Extrema snapping to the
//! same critical value cannot occur when the heights come from a Morse
//! function with distinct critical levels; if an abstract input produces
//! such a tie it is broken by vertex id and reported as a warning.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{Letter, MorseWord};

/// A component of the sliced solid torus: an id and the slab it lies in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TubeVertex {
    pub id: String,
    pub slab: usize,
}

/// Slab-graph model of a sliced solid torus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TubeSpec {
    /// Heights of the boundary-critical levels, strictly increasing.
    pub critical_values: Vec<f64>,
    pub vertices: Vec<TubeVertex>,
    /// Unordered pairs of vertex ids in adjacent slabs.
    pub edges: Vec<(String, String)>,
}

/// Position of a vertex relative to the unique loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    /// Loop vertex whose cyclic neighbors both lie one slab higher.
    Minimal,
    /// Loop vertex whose cyclic neighbors both lie one slab lower.
    Maximal,
    /// Loop vertex between one lower and one higher neighbor.
    Vertical,
    /// Vertex not on the loop.
    Irrelevant,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexClass::Minimal => "minimal",
            VertexClass::Maximal => "maximal",
            VertexClass::Vertical => "vertical",
            VertexClass::Irrelevant => "irrelevant",
        };
        write!(f, "{s}")
    }
}

/// Result of a successful unique-loop analysis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LoopAnalysis {
    /// The unique cycle in canonical order: starting at the minimal-slab
    /// vertex with smallest id, proceeding toward its smaller-id neighbor.
    #[serde(rename = "loop")]
    pub loop_vertices: Vec<String>,
    pub classification: BTreeMap<String, VertexClass>,
    /// Morse word of the loop's extrema ordered by snapped height.
    pub loop_word: MorseWord,
    /// `E - V + 1`; always 1 for a successful analysis.
    pub cycle_rank: usize,
    /// Diagnostics for snapped-height ties broken by vertex id.
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GammaError {
    #[error("invalid document: {0}")]
    Parse(String),
    #[error(
        "critical values must be strictly increasing and finite (violation at position {position})"
    )]
    CriticalValuesNotIncreasing { position: usize },
    #[error("specification has no vertices")]
    EmptyGraph,
    #[error("duplicate vertex id {id:?}")]
    DuplicateId { id: String },
    #[error("slab {slab} of vertex {id:?} exceeds the top slab {max_slab}")]
    SlabOutOfRange {
        id: String,
        slab: usize,
        max_slab: usize,
    },
    #[error("edge ({a:?}, {b:?}) references unknown vertex {missing:?}")]
    UnknownVertex {
        a: String,
        b: String,
        missing: String,
    },
    #[error("edge ({a:?}, {b:?}) joins slabs {slab_a} and {slab_b}, which are not adjacent")]
    NonAdjacentEdge {
        a: String,
        b: String,
        slab_a: usize,
        slab_b: usize,
    },
    #[error("duplicate edge ({a:?}, {b:?})")]
    DuplicateEdge { a: String, b: String },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no loop (cycle rank 0); the input does not model a knotted tube")]
    NoLoop,
    #[error("graph has cycle rank {rank}; a knotted-tube graph has exactly one loop")]
    MultipleLoops { rank: usize },
    #[error("not a cycle: {reason}")]
    NotACycle { reason: String },
}

/// Parse and validate a tube specification from JSON text.
pub fn load_spec(document: &str) -> Result<TubeSpec, GammaError> {
    let spec: TubeSpec =
        serde_json::from_str(document).map_err(|e| GammaError::Parse(e.to_string()))?;
    spec.validate()?;
    Ok(spec)
}

impl TubeSpec {
    /// Check every structural invariant: strictly increasing critical
    /// values, unique ids, slabs in range, edges between adjacent slabs
    /// with no duplicates, and connectivity.
    pub fn validate(&self) -> Result<(), GammaError> {
        Graph::build(self).map(|_| ())
    }
}

/// Validated adjacency view over a spec. Vertex indices follow
/// `spec.vertices` order.
struct Graph<'a> {
    spec: &'a TubeSpec,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl<'a> Graph<'a> {
    fn build(spec: &'a TubeSpec) -> Result<Graph<'a>, GammaError> {
        for (k, pair) in spec.critical_values.windows(2).enumerate() {
            // NaN compares as incomparable and is rejected here too.
            if pair[0].partial_cmp(&pair[1]) != Some(std::cmp::Ordering::Less) {
                return Err(GammaError::CriticalValuesNotIncreasing { position: k + 2 });
            }
        }
        if let Some(first) = spec.critical_values.first() {
            if first.is_nan() {
                return Err(GammaError::CriticalValuesNotIncreasing { position: 1 });
            }
        }
        if spec.vertices.is_empty() {
            return Err(GammaError::EmptyGraph);
        }

        // Id lookup via an index vector sorted by id.
        let mut order: Vec<usize> = (0..spec.vertices.len()).collect();
        order.sort_by(|&x, &y| spec.vertices[x].id.cmp(&spec.vertices[y].id));
        for pair in order.windows(2) {
            if spec.vertices[pair[0]].id == spec.vertices[pair[1]].id {
                return Err(GammaError::DuplicateId {
                    id: spec.vertices[pair[0]].id.clone(),
                });
            }
        }
        let lookup = |id: &str| -> Option<usize> {
            order
                .binary_search_by(|&k| spec.vertices[k].id.as_str().cmp(id))
                .ok()
                .map(|pos| order[pos])
        };

        let max_slab = spec.critical_values.len();
        for v in &spec.vertices {
            if v.slab > max_slab {
                return Err(GammaError::SlabOutOfRange {
                    id: v.id.clone(),
                    slab: v.slab,
                    max_slab,
                });
            }
        }

        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); spec.vertices.len()];
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(spec.edges.len());
        for (a, b) in &spec.edges {
            let ia = lookup(a).ok_or_else(|| GammaError::UnknownVertex {
                a: a.clone(),
                b: b.clone(),
                missing: a.clone(),
            })?;
            let ib = lookup(b).ok_or_else(|| GammaError::UnknownVertex {
                a: a.clone(),
                b: b.clone(),
                missing: b.clone(),
            })?;
            let (sa, sb) = (spec.vertices[ia].slab, spec.vertices[ib].slab);
            if sa.abs_diff(sb) != 1 {
                return Err(GammaError::NonAdjacentEdge {
                    a: a.clone(),
                    b: b.clone(),
                    slab_a: sa,
                    slab_b: sb,
                });
            }
            let key = (ia.min(ib), ia.max(ib));
            if seen.contains(&key) {
                return Err(GammaError::DuplicateEdge {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
            seen.push(key);
            adj[ia].push(ib);
            adj[ib].push(ia);
        }

        let graph = Graph {
            spec,
            adj,
            edge_count: spec.edges.len(),
        };
        if !graph.is_connected() {
            return Err(GammaError::Disconnected);
        }
        Ok(graph)
    }

    fn is_connected(&self) -> bool {
        let v = self.adj.len();
        let mut visited = vec![false; v];
        let mut stack = vec![0usize];
        visited[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == v
    }

    fn slab(&self, v: usize) -> usize {
        self.spec.vertices[v].slab
    }

    fn id(&self, v: usize) -> &str {
        &self.spec.vertices[v].id
    }

    /// Vertices of the 2-core, found by repeatedly stripping leaves. For a
    /// connected graph of cycle rank 1 this is exactly the unique cycle.
    fn two_core(&self) -> Vec<bool> {
        let v = self.adj.len();
        let mut degree: Vec<usize> = self.adj.iter().map(|a| a.len()).collect();
        let mut on_core = vec![true; v];
        let mut stack: Vec<usize> = (0..v).filter(|&k| degree[k] <= 1).collect();
        while let Some(u) = stack.pop() {
            if !on_core[u] {
                continue;
            }
            on_core[u] = false;
            for &w in &self.adj[u] {
                if on_core[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        on_core
    }

    /// Walk the unique cycle in canonical order: start at the minimal-slab
    /// core vertex with smallest id, step toward its smaller-id neighbor.
    fn canonical_cycle(&self, on_core: &[bool]) -> Vec<usize> {
        let start = (0..self.adj.len())
            .filter(|&v| on_core[v])
            .min_by(|&x, &y| (self.slab(x), self.id(x)).cmp(&(self.slab(y), self.id(y))))
            .expect("core is nonempty for rank 1");
        let mut core_neighbors: Vec<usize> = self.adj[start]
            .iter()
            .copied()
            .filter(|&w| on_core[w])
            .collect();
        core_neighbors.sort_by(|&x, &y| self.id(x).cmp(self.id(y)));

        let mut cycle = vec![start];
        let mut prev = start;
        let mut current = core_neighbors[0];
        while current != start {
            cycle.push(current);
            let next = self.adj[current]
                .iter()
                .copied()
                .find(|&w| on_core[w] && w != prev)
                .expect("core vertices have degree 2");
            prev = current;
            current = next;
        }
        cycle
    }

    fn classify_cycle(&self, cycle: &[usize]) -> Vec<VertexClass> {
        let v = self.adj.len();
        let mut classes = vec![VertexClass::Irrelevant; v];
        let n = cycle.len();
        for (p, &u) in cycle.iter().enumerate() {
            let before = self.slab(cycle[(p + n - 1) % n]);
            let after = self.slab(cycle[(p + 1) % n]);
            let here = self.slab(u);
            classes[u] = if before > here && after > here {
                VertexClass::Minimal
            } else if before < here && after < here {
                VertexClass::Maximal
            } else {
                VertexClass::Vertical
            };
        }
        classes
    }

    /// Morse word of the cycle's extrema, ordered by snapped critical
    /// value. Returns the word and any tie warnings.
    fn snap_word(&self, cycle: &[usize], classes: &[VertexClass]) -> (MorseWord, Vec<String>) {
        // (snap index, vertex id, letter)
        let mut extrema: Vec<(usize, &str, Letter)> = Vec::new();
        for &u in cycle {
            match classes[u] {
                VertexClass::Minimal => extrema.push((self.slab(u) + 1, self.id(u), Letter::Min)),
                VertexClass::Maximal => extrema.push((self.slab(u), self.id(u), Letter::Max)),
                _ => {}
            }
        }
        extrema.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        let mut warnings = Vec::new();
        for pair in extrema.windows(2) {
            if pair[0].0 == pair[1].0 {
                warnings.push(format!(
                    "extrema {:?} and {:?} snap to the same critical value c{}; ordered by id",
                    pair[0].1, pair[1].1, pair[0].0
                ));
            }
        }
        let word = MorseWord::from_vec_unchecked(extrema.iter().map(|e| e.2).collect());
        (word, warnings)
    }
}

/// Analyze a validated spec: confirm the cycle rank is exactly 1, extract
/// the unique cycle, classify every vertex, and read off the loop word.
pub fn find_unique_loop(spec: &TubeSpec) -> Result<LoopAnalysis, GammaError> {
    let graph = Graph::build(spec)?;
    let rank = graph.edge_count + 1 - graph.adj.len();
    match rank {
        0 => return Err(GammaError::NoLoop),
        1 => {}
        r => return Err(GammaError::MultipleLoops { rank: r }),
    }

    let on_core = graph.two_core();
    let cycle = graph.canonical_cycle(&on_core);
    let classes = graph.classify_cycle(&cycle);
    let (loop_word, warnings) = graph.snap_word(&cycle, &classes);

    let loop_vertices = cycle.iter().map(|&u| graph.id(u).to_string()).collect();
    let classification = graph
        .spec
        .vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.id.clone(), classes[k]))
        .collect();

    Ok(LoopAnalysis {
        loop_vertices,
        classification,
        loop_word,
        cycle_rank: 1,
        warnings,
    })
}

/// Classify every vertex of `spec` relative to the given cycle, which must
/// be a genuine cycle of the graph (distinct vertices, consecutive pairs
/// joined by edges, closing up).
pub fn classify(
    spec: &TubeSpec,
    cycle_ids: &[String],
) -> Result<BTreeMap<String, VertexClass>, GammaError> {
    let graph = Graph::build(spec)?;
    if cycle_ids.len() < 3 {
        return Err(GammaError::NotACycle {
            reason: format!("a cycle needs at least 3 vertices, got {}", cycle_ids.len()),
        });
    }
    let mut cycle = Vec::with_capacity(cycle_ids.len());
    for id in cycle_ids {
        let idx = graph
            .spec
            .vertices
            .iter()
            .position(|v| &v.id == id)
            .ok_or_else(|| GammaError::NotACycle {
                reason: format!("unknown vertex {id:?}"),
            })?;
        if cycle.contains(&idx) {
            return Err(GammaError::NotACycle {
                reason: format!("vertex {id:?} repeats"),
            });
        }
        cycle.push(idx);
    }
    let n = cycle.len();
    for p in 0..n {
        let (u, w) = (cycle[p], cycle[(p + 1) % n]);
        if !graph.adj[u].contains(&w) {
            return Err(GammaError::NotACycle {
                reason: format!(
                    "consecutive vertices {:?} and {:?} are not joined by an edge",
                    graph.id(u),
                    graph.id(w)
                ),
            });
        }
    }

    let classes = graph.classify_cycle(&cycle);
    Ok(graph
        .spec
        .vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.id.clone(), classes[k]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(
        critical_values: &[f64],
        vertices: &[(&str, usize)],
        edges: &[(&str, &str)],
    ) -> TubeSpec {
        TubeSpec {
            critical_values: critical_values.to_vec(),
            vertices: vertices
                .iter()
                .map(|&(id, slab)| TubeVertex {
                    id: id.to_string(),
                    slab,
                })
                .collect(),
            edges: edges
                .iter()
                .map(|&(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    fn diamond() -> TubeSpec {
        spec(
            &[1.0, 2.0],
            &[("A", 0), ("B", 1), ("C", 1), ("D", 2)],
            &[("A", "B"), ("A", "C"), ("B", "D"), ("C", "D")],
        )
    }

    #[test]
    fn diamond_loads_and_analyzes() {
        let s = diamond();
        s.validate().unwrap();
        let analysis = find_unique_loop(&s).unwrap();
        assert_eq!(analysis.loop_vertices, vec!["A", "B", "D", "C"]);
        assert_eq!(analysis.cycle_rank, 1);
        assert_eq!(analysis.loop_word, MorseWord::parse("ab").unwrap());
        assert_eq!(analysis.classification["A"], VertexClass::Minimal);
        assert_eq!(analysis.classification["B"], VertexClass::Vertical);
        assert_eq!(analysis.classification["C"], VertexClass::Vertical);
        assert_eq!(analysis.classification["D"], VertexClass::Maximal);
        assert!(analysis.warnings.is_empty());
    }

    #[test]
    fn load_spec_parses_json() {
        let doc = r#"{
            "critical_values": [1.0, 2.0],
            "vertices": [
                {"id": "A", "slab": 0}, {"id": "B", "slab": 1},
                {"id": "C", "slab": 1}, {"id": "D", "slab": 2}
            ],
            "edges": [["A","B"], ["A","C"], ["B","D"], ["C","D"]]
        }"#;
        let s = load_spec(doc).unwrap();
        assert_eq!(s, diamond());
        assert!(matches!(load_spec("{"), Err(GammaError::Parse(_))));
    }

    #[test]
    fn validation_rejections() {
        let s = spec(&[1.0, 2.0], &[("A", 0), ("D", 2)], &[("A", "D")]);
        assert_eq!(
            s.validate(),
            Err(GammaError::NonAdjacentEdge {
                a: "A".into(),
                b: "D".into(),
                slab_a: 0,
                slab_b: 2,
            })
        );

        let s = spec(
            &[1.0],
            &[("A", 0), ("B", 1), ("C", 0), ("D", 1)],
            &[("A", "B"), ("C", "D")],
        );
        assert_eq!(s.validate(), Err(GammaError::Disconnected));

        let s = spec(&[1.0], &[("A", 0), ("A", 1)], &[("A", "A")]);
        assert_eq!(
            s.validate(),
            Err(GammaError::DuplicateId { id: "A".into() })
        );

        let s = spec(&[1.0], &[("A", 0), ("B", 2)], &[]);
        assert_eq!(
            s.validate(),
            Err(GammaError::SlabOutOfRange {
                id: "B".into(),
                slab: 2,
                max_slab: 1,
            })
        );

        let s = spec(&[2.0, 1.0], &[("A", 0)], &[]);
        assert_eq!(
            s.validate(),
            Err(GammaError::CriticalValuesNotIncreasing { position: 2 })
        );

        let s = spec(&[1.0], &[("A", 0), ("B", 1)], &[("A", "B"), ("B", "A")]);
        assert_eq!(
            s.validate(),
            Err(GammaError::DuplicateEdge {
                a: "B".into(),
                b: "A".into(),
            })
        );

        let s = spec(&[1.0], &[("A", 0), ("B", 1)], &[("A", "X")]);
        assert!(matches!(
            s.validate(),
            Err(GammaError::UnknownVertex { .. })
        ));
    }

    #[test]
    fn path_has_no_loop() {
        let s = spec(
            &[1.0, 2.0],
            &[("A", 0), ("B", 1), ("C", 2)],
            &[("A", "B"), ("B", "C")],
        );
        assert_eq!(find_unique_loop(&s), Err(GammaError::NoLoop));
    }

    #[test]
    fn double_diamond_has_two_loops() {
        let s = spec(
            &[1.0, 2.0],
            &[("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 2)],
            &[
                ("A", "B"),
                ("A", "C"),
                ("B", "D"),
                ("C", "D"),
                ("B", "E"),
                ("C", "E"),
            ],
        );
        assert_eq!(
            find_unique_loop(&s),
            Err(GammaError::MultipleLoops { rank: 2 })
        );
    }

    #[test]
    fn pendant_vertex_is_irrelevant() {
        let mut s = diamond();
        s.vertices.push(TubeVertex {
            id: "E".into(),
            slab: 0,
        });
        s.edges.push(("B".into(), "E".into()));
        let analysis = find_unique_loop(&s).unwrap();
        assert_eq!(analysis.classification["E"], VertexClass::Irrelevant);
        assert_eq!(analysis.loop_vertices, vec!["A", "B", "D", "C"]);

        // Dropping the irrelevant vertex leaves the loop and word unchanged.
        let trimmed = find_unique_loop(&diamond()).unwrap();
        assert_eq!(trimmed.loop_vertices, analysis.loop_vertices);
        assert_eq!(trimmed.loop_word, analysis.loop_word);
    }

    #[test]
    fn loop_below_a_hanging_tail_still_starts_at_its_own_minimum() {
        // The graph minimum P is off the loop; the canonical start is the
        // loop's own lowest vertex.
        let s = spec(
            &[1.0, 2.0, 3.0],
            &[("P", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 2)],
            &[("P", "B"), ("B", "C"), ("C", "D"), ("D", "E"), ("E", "B")],
        );
        let analysis = find_unique_loop(&s).unwrap();
        assert_eq!(analysis.loop_vertices, vec!["B", "C", "D", "E"]);
        assert_eq!(analysis.classification["P"], VertexClass::Irrelevant);
        assert_eq!(analysis.classification["B"], VertexClass::Minimal);
        assert_eq!(analysis.classification["D"], VertexClass::Maximal);
        // Minimum at slab 1 snaps to c2, maximum at slab 3 snaps to c3.
        assert_eq!(analysis.loop_word, MorseWord::parse("ab").unwrap());
        assert!(analysis.warnings.is_empty());
    }

    #[test]
    fn classify_accepts_any_cycle_orientation() {
        let s = diamond();
        for ids in [
            ["A", "C", "D", "B"],
            ["D", "B", "A", "C"],
            ["C", "D", "B", "A"],
        ] {
            let cycle: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
            let map = classify(&s, &cycle).unwrap();
            assert_eq!(map["A"], VertexClass::Minimal);
            assert_eq!(map["B"], VertexClass::Vertical);
            assert_eq!(map["C"], VertexClass::Vertical);
            assert_eq!(map["D"], VertexClass::Maximal);
        }
    }

    #[test]
    fn classify_mirrors_analysis_and_rejects_non_cycles() {
        let s = diamond();
        let loop_ids: Vec<String> = ["A", "B", "D", "C"].iter().map(|s| s.to_string()).collect();
        let map = classify(&s, &loop_ids).unwrap();
        assert_eq!(map["A"], VertexClass::Minimal);
        assert_eq!(map["D"], VertexClass::Maximal);

        let two: Vec<String> = ["A", "B"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(
            classify(&s, &two),
            Err(GammaError::NotACycle { .. })
        ));

        let broken: Vec<String> = ["A", "B", "C", "D"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(
            classify(&s, &broken),
            Err(GammaError::NotACycle { .. })
        ));

        let repeated: Vec<String> = ["A", "B", "A", "C"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(
            classify(&s, &repeated),
            Err(GammaError::NotACycle { .. })
        ));
    }

    #[test]
    fn shared_snap_values_warn_and_break_ties_by_id() {
        // Eight-cycle with slabs 0,1,2,1,0,1,2,1: two minima snap to c1 and
        // two maxima snap to c2.
        let s = spec(
            &[1.0, 2.0],
            &[
                ("V1", 0),
                ("V2", 1),
                ("V3", 2),
                ("V4", 1),
                ("V5", 0),
                ("V6", 1),
                ("V7", 2),
                ("V8", 1),
            ],
            &[
                ("V1", "V2"),
                ("V2", "V3"),
                ("V3", "V4"),
                ("V4", "V5"),
                ("V5", "V6"),
                ("V6", "V7"),
                ("V7", "V8"),
                ("V8", "V1"),
            ],
        );
        let analysis = find_unique_loop(&s).unwrap();
        assert_eq!(analysis.loop_word, MorseWord::parse("aabb").unwrap());
        assert_eq!(analysis.warnings.len(), 2);
        assert_eq!(analysis.classification["V1"], VertexClass::Minimal);
        assert_eq!(analysis.classification["V5"], VertexClass::Minimal);
        assert_eq!(analysis.classification["V3"], VertexClass::Maximal);
        assert_eq!(analysis.classification["V7"], VertexClass::Maximal);
    }

    #[test]
    fn distinct_snap_values_order_the_word() {
        // Heights 0..4..2..5..back: extrema snap to c1 < c3 < c4 < c5, so
        // the word is read straight off the sorted snaps with no warnings.
        let slabs = [0, 1, 2, 3, 4, 3, 2, 3, 4, 5, 4, 3, 2, 1];
        let vertices: Vec<(String, usize)> = slabs
            .iter()
            .enumerate()
            .map(|(k, &s)| (format!("N{k:02}"), s))
            .collect();
        let vertex_refs: Vec<(&str, usize)> =
            vertices.iter().map(|(id, s)| (id.as_str(), *s)).collect();
        let edges: Vec<(String, String)> = (0..slabs.len())
            .map(|k| (format!("N{k:02}"), format!("N{:02}", (k + 1) % slabs.len())))
            .collect();
        let edge_refs: Vec<(&str, &str)> = edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let s = spec(&[1.0, 2.0, 3.0, 4.0, 5.0], &vertex_refs, &edge_refs);
        let analysis = find_unique_loop(&s).unwrap();
        assert_eq!(analysis.loop_word, MorseWord::parse("aabb").unwrap());
        assert!(analysis.warnings.is_empty());
        assert!(analysis.loop_word.is_balanced());
    }

    #[test]
    fn analysis_json_shape() {
        let analysis = find_unique_loop(&diamond()).unwrap();
        let json = serde_json::to_value(&analysis).unwrap();
        assert_eq!(json["loop"], serde_json::json!(["A", "B", "D", "C"]));
        assert_eq!(json["classification"]["A"], "minimal");
        assert_eq!(json["loop_word"], "ab");
        assert_eq!(json["cycle_rank"], 1);
    }
}
