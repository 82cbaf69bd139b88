//! Exhaustive enumeration and verification suites.
//!
//! `enumerate_knot_words` lists every knot-valid word with a given bridge
//! number by backtracking over prefix states (prune when an interior prefix
//! would fall below 2, or could no longer return to 0). `run_property_suite`
//! checks one of four invariant families over every instance within the
//! given size limits and reports the first counterexample in canonical
//! order, independent of how many worker threads scanned the space.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gamma::{self, GammaError, TubeSpec, TubeVertex, VertexClass};
use crate::ops;
use crate::satellite;
use crate::word::{Letter, MorseWord, Validity};

/// Default cap on the bridge number for enumeration.
pub const DEFAULT_MAX_BRIDGE: u32 = 14;

/// Caps on suite limits; beyond these the scans stop being desk-scale.
pub const MAX_SUITE_WORD_LEN: usize = 20;
pub const MAX_SUITE_WINDING: u32 = 1_000_000;
pub const MAX_SUITE_VERTICES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("bridge number {b} outside the supported range 1..={max}")]
    LimitExceeded { b: u32, max: u32 },
    #[error("unknown suite {name:?} (expected lemma45, blowup, bound, or graph)")]
    UnknownSuite { name: String },
    #[error("suite limit {what}={value} exceeds the supported maximum {max}")]
    SuiteLimitExceeded {
        what: &'static str,
        value: u64,
        max: u64,
    },
}

/// All knot-valid words with a fixed bridge number, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationResult {
    pub bridge: u32,
    pub words: Vec<MorseWord>,
    pub count: u64,
    pub min_width: i64,
    pub witnesses: Vec<MorseWord>,
}

/// One row of the minimum-width table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub bridge: u32,
    pub count: u64,
    pub min_width: i64,
    pub witness: MorseWord,
}

/// Enumerate every knot-valid word of bridge number `b` (length `2b`,
/// final prefix 0, interior prefixes at least 2) in lexicographic order.
pub fn enumerate_knot_words(b: u32, max_bridge: u32) -> Result<EnumerationResult, EnumerateError> {
    if b == 0 || b > max_bridge {
        return Err(EnumerateError::LimitExceeded { b, max: max_bridge });
    }
    let words = knot_words_of_bridge(b);
    let min_width = words.iter().map(|w| w.width()).min().expect("nonempty");
    let witnesses = words
        .iter()
        .filter(|w| w.width() == min_width)
        .cloned()
        .collect();
    Ok(EnumerationResult {
        bridge: b,
        count: words.len() as u64,
        min_width,
        witnesses,
        words,
    })
}

/// Minimum-width table for bridge numbers `1..=b_max`. The witness is the
/// lexicographically first word attaining the minimum.
pub fn min_width_table(b_max: u32, max_bridge: u32) -> Result<Vec<TableRow>, EnumerateError> {
    if b_max > max_bridge {
        return Err(EnumerateError::LimitExceeded {
            b: b_max,
            max: max_bridge,
        });
    }
    (1..=b_max)
        .map(|b| {
            let r = enumerate_knot_words(b, max_bridge)?;
            Ok(TableRow {
                bridge: b,
                count: r.count,
                min_width: r.min_width,
                witness: r.witnesses[0].clone(),
            })
        })
        .collect()
}

fn knot_words_of_bridge(b: u32) -> Vec<MorseWord> {
    let t = 2 * b as usize;
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(t);
    descend(&mut letters, 0, t, &mut out);
    out
}

fn descend(letters: &mut Vec<Letter>, prefix: i64, t: usize, out: &mut Vec<MorseWord>) {
    let next_pos = letters.len() + 1;
    for letter in [Letter::Min, Letter::Max] {
        let p = prefix + letter.phi();
        let feasible = if next_pos == t {
            p == 0
        } else {
            // Interior prefixes stay >= 2 and must be able to return to 0.
            p >= 2 && p <= 2 * (t - next_pos) as i64
        };
        if feasible {
            letters.push(letter);
            if next_pos == t {
                out.push(MorseWord::from_vec_unchecked(letters.clone()));
            } else {
                descend(letters, p, t, out);
            }
            letters.pop();
        }
    }
}

/// The four invariant families the verifier can scan exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// The word operations: exact drop formulas, width monotonicity on
    /// nonnegative inputs, and nonnegativity preservation exactly when the
    /// straddled levels are thick (at least two strands).
    Lemma45,
    /// The blowup width identity `w(x^n) = n^2 w(x)` on balanced words,
    /// knot-validity preservation, bridge multiplicativity, and
    /// composition.
    Blowup,
    /// The per-critical-point bound totals equal `n^2 w` and the blowup
    /// width.
    Bound,
    /// Unique-loop analysis agrees with cycle rank and brute-force cycle
    /// enumeration on every connected slab graph.
    Graph,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Lemma45 => "lemma45",
            Suite::Blowup => "blowup",
            Suite::Bound => "bound",
            Suite::Graph => "graph",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Suite {
    type Err = EnumerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lemma45" => Ok(Suite::Lemma45),
            "blowup" => Ok(Suite::Blowup),
            "bound" => Ok(Suite::Bound),
            "graph" => Ok(Suite::Graph),
            _ => Err(EnumerateError::UnknownSuite {
                name: s.to_string(),
            }),
        }
    }
}

/// Size limits for the suites. Word suites scan all words up to `max_len`
/// letters; winding suites take `n` up to `max_n`; the graph suite scans
/// all connected slab graphs with up to `max_vertices` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteLimits {
    pub max_len: usize,
    pub max_n: u32,
    pub max_vertices: usize,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits {
            max_len: 12,
            max_n: 5,
            max_vertices: 7,
        }
    }
}

/// First failing instance in canonical scan order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub witness: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Property instances checked (operation applications, (word, n)
    /// pairs, or connected graphs, depending on the suite).
    pub instances: u64,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

/// Exhaustively check one invariant family within `limits`, scanning with
/// `jobs` worker threads. The report is identical for every `jobs` value:
/// instance counts are full scans and the counterexample, if any, is the
/// first in canonical (length, lexicographic) order.
pub fn run_property_suite(
    suite: Suite,
    limits: &SuiteLimits,
    jobs: usize,
) -> Result<SuiteReport, EnumerateError> {
    check_limit("max_len", limits.max_len as u64, MAX_SUITE_WORD_LEN as u64)?;
    check_limit(
        "max_n",
        u64::from(limits.max_n),
        u64::from(MAX_SUITE_WINDING),
    )?;
    check_limit(
        "max_vertices",
        limits.max_vertices as u64,
        MAX_SUITE_VERTICES as u64,
    )?;
    let (instances, counterexample) = match suite {
        Suite::Lemma45 => scan_all_words(limits.max_len, jobs, check_lemma45_word),
        Suite::Blowup => {
            let max_n = limits.max_n;
            scan_all_words(limits.max_len, jobs, move |w| check_blowup_word(w, max_n))
        }
        Suite::Bound => {
            let max_n = limits.max_n;
            scan_all_words(limits.max_len, jobs, move |w| check_bound_word(w, max_n))
        }
        Suite::Graph => scan_all_graphs(limits.max_vertices, jobs),
    };
    Ok(SuiteReport {
        suite,
        instances,
        pass: counterexample.is_none(),
        counterexample,
    })
}

fn check_limit(what: &'static str, value: u64, max: u64) -> Result<(), EnumerateError> {
    if value > max {
        return Err(EnumerateError::SuiteLimitExceeded { what, value, max });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Sharded scanning
// ---------------------------------------------------------------------------

/// Run `scan(shard, jobs)` on `jobs` threads and merge: instance counts are
/// summed, and the surviving counterexample is the one with the smallest
/// canonical sequence number.
fn run_sharded<F>(jobs: usize, scan: F) -> (u64, Option<Counterexample>)
where
    F: Fn(usize, usize) -> (u64, Option<(u64, Counterexample)>) + Sync,
{
    let jobs = jobs.max(1);
    let results: Vec<(u64, Option<(u64, Counterexample)>)> = if jobs == 1 {
        vec![scan(0, 1)]
    } else {
        std::thread::scope(|scope| {
            let scan = &scan;
            let handles: Vec<_> = (0..jobs)
                .map(|shard| scope.spawn(move || scan(shard, jobs)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite worker panicked"))
                .collect()
        })
    };
    let instances = results.iter().map(|r| r.0).sum();
    let counterexample = results
        .into_iter()
        .filter_map(|r| r.1)
        .min_by_key(|c| c.0)
        .map(|c| c.1);
    (instances, counterexample)
}

/// Scan every letter sequence of length `0..=max_len` in (length, lex)
/// order, partitioned across shards by word index. `check` returns the
/// number of instances it verified, or the failure detail.
fn scan_all_words<F>(max_len: usize, jobs: usize, check: F) -> (u64, Option<Counterexample>)
where
    F: Fn(&MorseWord) -> Result<u64, String> + Sync,
{
    run_sharded(jobs, |shard, stride| {
        let mut instances = 0u64;
        let mut failure: Option<(u64, Counterexample)> = None;
        let mut seq = 0u64;
        'scan: for len in 0..=max_len {
            for code in 0u64..(1u64 << len) {
                let this = seq;
                seq += 1;
                if this % stride as u64 != shard as u64 {
                    continue;
                }
                let word = word_from_code(len, code);
                match check(&word) {
                    Ok(n) => instances += n,
                    Err(detail) => {
                        failure = Some((
                            this,
                            Counterexample {
                                witness: word.to_string(),
                                detail,
                            },
                        ));
                        break 'scan;
                    }
                }
            }
        }
        (instances, failure)
    })
}

fn word_from_code(len: usize, code: u64) -> MorseWord {
    let letters = (0..len)
        .map(|k| {
            if code >> (len - 1 - k) & 1 == 0 {
                Letter::Min
            } else {
                Letter::Max
            }
        })
        .collect();
    MorseWord::from_vec_unchecked(letters)
}

// ---------------------------------------------------------------------------
// Word suites
// ---------------------------------------------------------------------------

fn check_lemma45_word(word: &MorseWord) -> Result<u64, String> {
    let t = word.len();
    let prefix = word.prefix_sums();
    let width = word.width();
    let nonnegative = word.is_nonnegative();
    let mut instances = 0u64;

    for i in 1..=t {
        if word.letter(i) != Some(Letter::Min) {
            continue;
        }
        for j in (i + 1)..=t {
            if word.letter(j) != Some(Letter::Max) {
                continue;
            }
            let result = ops::type1_delete(word, i, j)
                .map_err(|e| format!("legal type1 ({i},{j}) rejected: {e}"))?;
            let drop = width - result.width();
            let formula = prefix[i - 1] + prefix[j - 1] + 2 * (j - i - 1) as i64;
            if drop != formula {
                return Err(format!(
                    "type1 ({i},{j}): recomputed drop {drop} != formula {formula}"
                ));
            }
            if nonnegative {
                if drop < 0 {
                    return Err(format!("type1 ({i},{j}) raised width of nonnegative word"));
                }
                // Nonnegativity survives exactly when every straddled level
                // carries at least two strands (always true for knot words).
                let thick = ((i + 1)..j).all(|p| prefix[p - 1] >= 2);
                if result.is_nonnegative() != thick {
                    return Err(format!(
                        "type1 ({i},{j}): preservation mismatch (straddled levels {}thick)",
                        if thick { "" } else { "not " }
                    ));
                }
                if word.validity() == Validity::Knot && !result.is_nonnegative() {
                    return Err(format!(
                        "type1 ({i},{j}) broke nonnegativity of a knot word"
                    ));
                }
            }
            instances += 1;
        }
    }

    for i in 1..t {
        let pair = (word.letter(i).unwrap(), word.letter(i + 1).unwrap());
        if pair == (Letter::Max, Letter::Min) {
            if ops::type2_swap(word, i).is_ok() {
                return Err(format!("excluded swap at {i} was accepted"));
            }
            continue;
        }
        let result =
            ops::type2_swap(word, i).map_err(|e| format!("legal type2 {i} rejected: {e}"))?;
        let drop = width - result.width();
        let expected = if pair == (Letter::Min, Letter::Max) {
            4
        } else {
            0
        };
        if drop != expected {
            return Err(format!("type2 {i}: drop {drop}, expected {expected}"));
        }
        let after = result.prefix_sums();
        for k in 0..t {
            let want = if k == i - 1 {
                prefix[k] - drop
            } else {
                prefix[k]
            };
            if after[k] != want {
                return Err(format!("type2 {i}: prefix {k} changed unexpectedly"));
            }
        }
        instances += 1;
    }

    Ok(instances)
}

fn check_blowup_word(word: &MorseWord, max_n: u32) -> Result<u64, String> {
    if !word.is_balanced() {
        return Ok(0);
    }
    let width = word.width();
    let bridge = word.bridge_number().expect("balanced");
    let is_knot = word.validity() == Validity::Knot;
    let mut instances = 0u64;

    for n in 1..=max_n {
        let y = satellite::blowup(word, n).map_err(|e| format!("blowup by {n} failed: {e}"))?;
        let expected = i64::from(n) * i64::from(n) * width;
        if y.width() != expected {
            return Err(format!(
                "blowup by {n}: width {} != {n}^2 * {width} = {expected}",
                y.width()
            ));
        }
        if is_knot && y.validity() != Validity::Knot {
            return Err(format!("blowup by {n} lost knot validity"));
        }
        if y.bridge_number() != Ok(n * bridge) {
            return Err(format!("blowup by {n}: bridge is not {n} * {bridge}"));
        }
        instances += 1;
    }

    // Composition: repeating in two stages equals one stage.
    for n in 1..=max_n {
        for m in 1..=max_n {
            if n * m > max_n {
                continue;
            }
            let two = satellite::blowup(&satellite::blowup(word, n).unwrap(), m).unwrap();
            let one = satellite::blowup(word, n * m).unwrap();
            if two != one {
                return Err(format!("blowup {n} then {m} differs from blowup {}", n * m));
            }
            instances += 1;
        }
    }

    Ok(instances)
}

fn check_bound_word(word: &MorseWord, max_n: u32) -> Result<u64, String> {
    if !word.is_balanced() {
        return Ok(0);
    }
    let width = word.width();
    let mut instances = 0u64;
    for n in 1..=max_n {
        let report =
            satellite::lower_bound(word, n).map_err(|e| format!("bound at n={n} failed: {e}"))?;
        let expected = i64::from(n) * i64::from(n) * width;
        if report.total != expected {
            return Err(format!(
                "bound at n={n}: total {} != {n}^2 * {width} = {expected}",
                report.total
            ));
        }
        if !report.identity_holds {
            return Err(format!("bound at n={n}: identity flag is false"));
        }
        let blown = satellite::blowup(word, n).unwrap();
        if report.total != blown.width() {
            return Err(format!(
                "bound at n={n}: total {} != blowup width {}",
                report.total,
                blown.width()
            ));
        }
        instances += 1;
    }
    Ok(instances)
}

// ---------------------------------------------------------------------------
// Graph suite
// ---------------------------------------------------------------------------

/// All slab assignments for `k` labeled vertices: functions onto an initial
/// interval `0..levels` for each `levels <= k`. Any connected slab graph
/// has interval slab support, so up to a constant height shift this family
/// is exhaustive.
fn slab_assignments(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for levels in 1..=k as u8 {
        let mut digits = vec![0u8; k];
        loop {
            let mut seen = [false; 8];
            for &d in &digits {
                seen[d as usize] = true;
            }
            if seen[..levels as usize].iter().all(|&s| s) {
                out.push(digits.clone());
            }
            if !next_counter(&mut digits, levels) {
                break;
            }
        }
    }
    out
}

fn next_counter(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn scan_all_graphs(max_vertices: usize, jobs: usize) -> (u64, Option<Counterexample>) {
    // Flattened deterministic universe: (vertex count, slab assignment).
    let mut universe: Vec<(usize, Vec<u8>)> = Vec::new();
    for k in 1..=max_vertices {
        for slabs in slab_assignments(k) {
            universe.push((k, slabs));
        }
    }
    let universe = &universe;

    run_sharded(jobs, move |shard, stride| {
        let mut instances = 0u64;
        let mut failure: Option<(u64, Counterexample)> = None;
        'scan: for (flat, (k, slabs)) in universe.iter().enumerate() {
            if flat % stride != shard {
                continue;
            }
            let k = *k;
            let pairs: Vec<(usize, usize)> = (0..k)
                .flat_map(|a| ((a + 1)..k).map(move |b| (a, b)))
                .filter(|&(a, b)| slabs[a].abs_diff(slabs[b]) == 1)
                .collect();
            debug_assert!(pairs.len() <= 16);
            for mask in 0u32..(1u32 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| mask >> p & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                if !is_connected(k, &edges) {
                    continue;
                }
                instances += 1;
                if let Err(detail) = check_graph(k, slabs, &edges) {
                    let seq = (flat as u64) << 24 | u64::from(mask);
                    failure = Some((
                        seq,
                        Counterexample {
                            witness: format!("slabs {slabs:?}, edges {edges:?}"),
                            detail,
                        },
                    ));
                    break 'scan;
                }
            }
        }
        (instances, failure)
    })
}

fn is_connected(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
    fn root(parent: &mut [usize; 8], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = k;
    for &(a, b) in edges {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}

fn check_graph(k: usize, slabs: &[u8], edges: &[(usize, usize)]) -> Result<(), String> {
    let spec = TubeSpec {
        critical_values: (1..=slabs.iter().copied().max().unwrap_or(0))
            .map(f64::from)
            .collect(),
        vertices: (0..k)
            .map(|v| TubeVertex {
                id: format!("v{v}"),
                slab: slabs[v] as usize,
            })
            .collect(),
        edges: edges
            .iter()
            .map(|&(a, b)| (format!("v{a}"), format!("v{b}")))
            .collect(),
    };

    let rank = edges.len() + 1 - k;
    let oracle_cycles = all_simple_cycles(k, edges);
    let analysis = gamma::find_unique_loop(&spec);

    match (rank, analysis) {
        (0, Err(GammaError::NoLoop)) => {
            if !oracle_cycles.is_empty() {
                return Err(format!(
                    "rank 0 but oracle found {} cycles",
                    oracle_cycles.len()
                ));
            }
            Ok(())
        }
        (1, Ok(analysis)) => {
            if oracle_cycles.len() != 1 {
                return Err(format!(
                    "rank 1 but oracle found {} cycles",
                    oracle_cycles.len()
                ));
            }
            let got = cycle_edge_set_ids(&analysis.loop_vertices);
            let want = cycle_edge_set(&oracle_cycles[0]);
            if got != want {
                return Err(format!(
                    "analysis cycle {:?} differs from oracle cycle {:?}",
                    analysis.loop_vertices, oracle_cycles[0]
                ));
            }
            if !analysis.loop_word.is_balanced() {
                return Err("loop word is not balanced".to_string());
            }
            let minima = analysis
                .classification
                .values()
                .filter(|&&c| c == VertexClass::Minimal)
                .count();
            let maxima = analysis
                .classification
                .values()
                .filter(|&&c| c == VertexClass::Maximal)
                .count();
            if minima != maxima {
                return Err(format!("{minima} minima but {maxima} maxima"));
            }
            if analysis.loop_word.len() != 2 * minima {
                return Err("loop word length does not match extrema count".to_string());
            }
            // Dropping off-loop vertices must leave the loop and its word
            // unchanged.
            let stripped = TubeSpec {
                critical_values: spec.critical_values.clone(),
                vertices: spec
                    .vertices
                    .iter()
                    .filter(|v| analysis.loop_vertices.contains(&v.id))
                    .cloned()
                    .collect(),
                edges: spec
                    .edges
                    .iter()
                    .filter(|(a, b)| {
                        analysis.loop_vertices.contains(a) && analysis.loop_vertices.contains(b)
                    })
                    .cloned()
                    .collect(),
            };
            let again = gamma::find_unique_loop(&stripped)
                .map_err(|e| format!("re-analysis without irrelevant vertices failed: {e}"))?;
            if again.loop_vertices != analysis.loop_vertices
                || again.loop_word != analysis.loop_word
            {
                return Err("dropping irrelevant vertices changed the loop".to_string());
            }
            Ok(())
        }
        (r, Err(GammaError::MultipleLoops { rank })) if r >= 2 && rank == r => {
            if oracle_cycles.len() < 2 {
                return Err(format!(
                    "rank {r} but oracle found {} cycles",
                    oracle_cycles.len()
                ));
            }
            Ok(())
        }
        (r, outcome) => Err(format!("rank {r} but analysis returned {outcome:?}")),
    }
}

/// Every simple cycle, each reported once: rooted at its smallest vertex,
/// oriented toward the smaller of the root's two cycle neighbors.
fn all_simple_cycles(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut cycles = Vec::new();
    let mut path = Vec::new();
    let mut visited = vec![false; k];
    for root in 0..k {
        visited[root] = true;
        path.push(root);
        cycle_dfs(root, root, &adj, &mut visited, &mut path, &mut cycles);
        path.pop();
        visited[root] = false;
    }
    cycles
}

fn cycle_dfs(
    root: usize,
    at: usize,
    adj: &[Vec<usize>],
    visited: &mut Vec<bool>,
    path: &mut Vec<usize>,
    cycles: &mut Vec<Vec<usize>>,
) {
    for &next in &adj[at] {
        if next == root && path.len() >= 3 && path[1] < path[path.len() - 1] {
            cycles.push(path.clone());
        } else if next > root && !visited[next] {
            visited[next] = true;
            path.push(next);
            cycle_dfs(root, next, adj, visited, path, cycles);
            path.pop();
            visited[next] = false;
        }
    }
}

fn cycle_edge_set(cycle: &[usize]) -> Vec<(usize, usize)> {
    let mut set: Vec<(usize, usize)> = (0..cycle.len())
        .map(|p| {
            let (a, b) = (cycle[p], cycle[(p + 1) % cycle.len()]);
            (a.min(b), a.max(b))
        })
        .collect();
    set.sort_unstable();
    set
}

fn cycle_edge_set_ids(cycle_ids: &[String]) -> Vec<(usize, usize)> {
    let numbers: Vec<usize> = cycle_ids
        .iter()
        .map(|id| id[1..].parse().expect("generated id"))
        .collect();
    cycle_edge_set(&numbers)
}
