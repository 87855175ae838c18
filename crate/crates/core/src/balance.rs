//! Distance-balance quantities.
//!
//! For vertices `x, y`, `W_xy` is the set of vertices strictly closer to `x`
//! than to `y`; vertices at equal distance belong to neither side. The pair is
//! balanced when `|W_xy| = |W_yx|`. A connected graph is `l`-distance-balanced
//! when every pair at distance exactly `l` is balanced, and highly
//! distance-balanced when that holds for every `l` from 1 to the diameter.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{DistanceMatrix, UNREACHABLE};
use crate::SCHEMA_VERSION;

/// Below this many vertices the pair sweep stays on the calling thread.
const PARALLEL_SWEEP_MIN_VERTICES: usize = 192;

/// Side counts for one vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairBalance {
    pub x: usize,
    pub y: usize,
    pub ell: usize,
    pub w_xy: usize,
    pub w_yx: usize,
    pub equidistant: usize,
}

impl PairBalance {
    pub fn is_balanced(&self) -> bool {
        self.w_xy == self.w_yx
    }
}

/// How many unbalanced witness pairs to keep per distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCap {
    Limit(usize),
    All,
}

impl Default for WitnessCap {
    fn default() -> Self {
        WitnessCap::Limit(16)
    }
}

impl WitnessCap {
    fn admits(self, have: usize) -> bool {
        match self {
            WitnessCap::Limit(k) => have < k,
            WitnessCap::All => true,
        }
    }
}

/// Counts of vertices closer to `x` and closer to `y` over rows `d(x, .)`, `d(y, .)`.
#[inline]
fn tally(row_x: &[u16], row_y: &[u16]) -> (usize, usize) {
    let mut closer_x = 0u32;
    let mut closer_y = 0u32;
    for (&a, &b) in row_x.iter().zip(row_y) {
        closer_x += u32::from(a < b);
        closer_y += u32::from(a > b);
    }
    (closer_x as usize, closer_y as usize)
}

fn pair_from_rows(x: usize, y: usize, ell: usize, row_x: &[u16], row_y: &[u16]) -> PairBalance {
    let (w_xy, w_yx) = tally(row_x, row_y);
    PairBalance {
        x,
        y,
        ell,
        w_xy,
        w_yx,
        equidistant: row_x.len() - w_xy - w_yx,
    }
}

/// `|W_xy|`, `|W_yx|` and the equidistant count in one pass over the vertices.
pub fn w_set_sizes(d: &DistanceMatrix, x: usize, y: usize) -> Result<PairBalance> {
    if x == y {
        return Err(Error::DegeneratePair(x));
    }
    // Vertices outside the common component are unreachable from both and
    // land in the equidistant count.
    let ell = d.get(x, y).ok_or(Error::UnreachablePair { x, y })?;
    Ok(pair_from_rows(x, y, ell, d.row(x), d.row(y)))
}

/// Membership lists `(W_xy, W_yx)`, each sorted by vertex index.
pub fn w_sets(d: &DistanceMatrix, x: usize, y: usize) -> (Vec<usize>, Vec<usize>) {
    let (rx, ry) = (d.row(x), d.row(y));
    let closer_x = (0..d.vertex_count()).filter(|&w| rx[w] < ry[w]).collect();
    let closer_y = (0..d.vertex_count()).filter(|&w| rx[w] > ry[w]).collect();
    (closer_x, closer_y)
}

/// Verdict for a single distance `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelVerdict {
    pub ell: usize,
    pub balanced: bool,
    /// Unordered pairs at distance `ell`.
    pub pairs: u64,
    pub unbalanced_pairs: u64,
    /// Unbalanced pairs in `(x, y)` order, truncated to the witness cap.
    pub witnesses: Vec<PairBalance>,
}

/// Per-distance verdicts for a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceProfile {
    pub vertex_count: usize,
    pub diameter: usize,
    pub levels: Vec<LevelVerdict>,
    pub highly_distance_balanced: bool,
}

impl BalanceProfile {
    pub fn level(&self, ell: usize) -> Option<&LevelVerdict> {
        ell.checked_sub(1).and_then(|i| self.levels.get(i))
    }

    /// One mark per distance, `✓` balanced and `✗` not.
    pub fn pattern(&self) -> String {
        verdict_pattern(self.levels.iter().map(|l| l.balanced))
    }

    pub fn is_ell_balanced(&self, ell: usize) -> Option<bool> {
        self.level(ell).map(|l| l.balanced)
    }
}

pub fn verdict_pattern(verdicts: impl IntoIterator<Item = bool>) -> String {
    verdicts
        .into_iter()
        .map(|b| if b { '✓' } else { '✗' })
        .collect()
}

/// Tallies for pairs `(x, y)` with `y > x`, restricted to distances in `range`.
struct RowTally {
    pairs: Vec<u64>,
    unbalanced: Vec<u64>,
    witnesses: Vec<Vec<PairBalance>>,
}

fn sweep_row(d: &DistanceMatrix, x: usize, lo: usize, hi: usize, cap: WitnessCap) -> RowTally {
    let width = hi - lo + 1;
    let mut t = RowTally {
        pairs: vec![0; width],
        unbalanced: vec![0; width],
        witnesses: vec![Vec::new(); width],
    };
    let row_x = d.row(x);
    for y in x + 1..d.vertex_count() {
        let ell = usize::from(row_x[y]);
        if ell < lo || ell > hi {
            continue;
        }
        let slot = ell - lo;
        t.pairs[slot] += 1;
        let p = pair_from_rows(x, y, ell, row_x, d.row(y));
        if !p.is_balanced() {
            t.unbalanced[slot] += 1;
            if cap.admits(t.witnesses[slot].len()) {
                t.witnesses[slot].push(p);
            }
        }
    }
    t
}

/// Sweeps all unordered pairs with distance in `lo..=hi` in `(x, y)` order.
fn sweep(d: &DistanceMatrix, lo: usize, hi: usize, cap: WitnessCap) -> Vec<LevelVerdict> {
    let n = d.vertex_count();
    let rows: Vec<RowTally> = if n >= PARALLEL_SWEEP_MIN_VERTICES {
        (0..n)
            .into_par_iter()
            .map(|x| sweep_row(d, x, lo, hi, cap))
            .collect()
    } else {
        (0..n).map(|x| sweep_row(d, x, lo, hi, cap)).collect()
    };

    (lo..=hi)
        .enumerate()
        .map(|(slot, ell)| {
            let mut witnesses = Vec::new();
            for r in &rows {
                for w in &r.witnesses[slot] {
                    if !cap.admits(witnesses.len()) {
                        break;
                    }
                    witnesses.push(*w);
                }
            }
            let unbalanced_pairs: u64 = rows.iter().map(|r| r.unbalanced[slot]).sum();
            LevelVerdict {
                ell,
                // vacuously balanced when no pair sits at this distance
                balanced: unbalanced_pairs == 0,
                pairs: rows.iter().map(|r| r.pairs[slot]).sum(),
                unbalanced_pairs,
                witnesses,
            }
        })
        .collect()
}

fn require_connected(d: &DistanceMatrix) -> Result<()> {
    if d.is_connected() {
        return Ok(());
    }
    for x in 0..d.vertex_count() {
        if let Some(y) = d.row(x).iter().position(|&v| v == UNREACHABLE) {
            return Err(Error::UnreachablePair { x, y });
        }
    }
    unreachable!("disconnected matrix has an unreachable entry")
}

/// Whether every pair at distance exactly `ell` is balanced.
pub fn is_ell_balanced(d: &DistanceMatrix, ell: usize, cap: WitnessCap) -> Result<LevelVerdict> {
    require_connected(d)?;
    if ell == 0 || ell > d.diameter() {
        return Err(Error::EllOutOfRange {
            ell,
            diameter: d.diameter(),
        });
    }
    Ok(sweep(d, ell, ell, cap).pop().expect("one level requested"))
}

/// Verdicts for every `l` in `1..=diameter`.
pub fn full_profile(d: &DistanceMatrix, cap: WitnessCap) -> Result<BalanceProfile> {
    require_connected(d)?;
    let levels = if d.diameter() == 0 {
        Vec::new()
    } else {
        sweep(d, 1, d.diameter(), cap)
    };
    Ok(BalanceProfile {
        vertex_count: d.vertex_count(),
        diameter: d.diameter(),
        highly_distance_balanced: levels.iter().all(|l| l.balanced),
        levels,
    })
}

/// Sum over edges `uv` of `| |W_uv| - |W_vu| |`.
pub fn mostar_index(graph: &Graph, d: &DistanceMatrix) -> Result<u64> {
    require_connected(d)?;
    Ok(graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = tally(d.row(u), d.row(v));
            a.abs_diff(b) as u64
        })
        .sum())
}

/// What a serialized profile is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDescriptor {
    pub description: String,
    pub group: String,
    pub order: usize,
    pub generators: Vec<String>,
    pub degree: usize,
}

impl GraphDescriptor {
    pub fn of(cayley: &CayleyGraph) -> Self {
        Self {
            description: cayley.describe(),
            group: cayley.group().to_string(),
            order: cayley.group().order(),
            generators: cayley.generator_labels(),
            degree: cayley.generators().len(),
        }
    }
}

/// A balance profile plus context, in the shape written by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub schema_version: &'static str,
    pub graph: GraphDescriptor,
    pub vertex_count: usize,
    pub diameter: usize,
    pub mostar_index: u64,
    pub verdict_pattern: String,
    pub highly_distance_balanced: bool,
    pub levels: Vec<LevelVerdict>,
}

impl ProfileReport {
    pub fn new(cayley: &CayleyGraph, profile: BalanceProfile, mostar_index: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            graph: GraphDescriptor::of(cayley),
            vertex_count: profile.vertex_count,
            diameter: profile.diameter,
            mostar_index,
            verdict_pattern: profile.pattern(),
            highly_distance_balanced: profile.highly_distance_balanced,
            levels: profile.levels,
        }
    }

    /// Builds the graph's distance matrix, profile and Mostar index.
    pub fn compute(cayley: &CayleyGraph, cap: WitnessCap) -> Result<Self> {
        let d = crate::metric::all_pairs(cayley.graph());
        let profile = full_profile(&d, cap)?;
        let mostar = mostar_index(cayley.graph(), &d)?;
        Ok(Self::new(cayley, profile, mostar))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per distance: `ell,pairs,unbalanced_pairs,balanced,first_witness`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "ell",
            "pairs",
            "unbalanced_pairs",
            "balanced",
            "first_witness",
        ])?;
        for l in &self.levels {
            let witness = l
                .witnesses
                .first()
                .map(|p| format!("{}:{}|{}:{}", p.x, p.y, p.w_xy, p.w_yx))
                .unwrap_or_default();
            w.write_record([
                l.ell.to_string(),
                l.pairs.to_string(),
                l.unbalanced_pairs.to_string(),
                l.balanced.to_string(),
                witness,
            ])?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Serialize(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_text(&self, labels: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.graph.description);
        let _ = writeln!(
            out,
            "vertices {}  degree {}  diameter {}  mostar {}",
            self.vertex_count, self.graph.degree, self.diameter, self.mostar_index
        );
        for l in &self.levels {
            let mark = if l.balanced { "balanced" } else { "UNBALANCED" };
            let _ = writeln!(
                out,
                "  l={:<3} {:<10} pairs {:<8} unbalanced {}",
                l.ell, mark, l.pairs, l.unbalanced_pairs
            );
            for p in &l.witnesses {
                let _ = writeln!(
                    out,
                    "        {} / {}: |W_xy| = {}, |W_yx| = {}, equidistant {}",
                    labels[p.x], labels[p.y], p.w_xy, p.w_yx, p.equidistant
                );
            }
        }
        let _ = writeln!(
            out,
            "pattern {}  highly distance-balanced: {}",
            self.verdict_pattern,
            if self.highly_distance_balanced {
                "yes"
            } else {
                "no"
            }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::all_pairs;

    #[test]
    fn complete_graph_pair() {
        let d = all_pairs(&Graph::complete(4));
        let p = w_set_sizes(&d, 0, 1).unwrap();
        assert_eq!((p.w_xy, p.w_yx, p.equidistant, p.ell), (1, 1, 2, 1));
    }

    #[test]
    fn path_midpoint_ties() {
        let d = all_pairs(&Graph::path(3));
        let p = w_set_sizes(&d, 0, 2).unwrap();
        assert_eq!((p.w_xy, p.w_yx, p.equidistant, p.ell), (1, 1, 1, 2));
    }

    #[test]
    fn degenerate_and_unreachable_pairs() {
        let d = all_pairs(&Graph::complete(3));
        assert_eq!(w_set_sizes(&d, 1, 1), Err(Error::DegeneratePair(1)));
        let split = all_pairs(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert!(matches!(
            w_set_sizes(&split, 0, 2),
            Err(Error::UnreachablePair { .. })
        ));
        assert!(matches!(
            full_profile(&split, WitnessCap::default()),
            Err(Error::UnreachablePair { .. })
        ));
        assert!(mostar_index(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(), &split).is_err());
    }

    #[test]
    fn ell_range_checked() {
        let d = all_pairs(&Graph::cycle(6));
        assert_eq!(
            is_ell_balanced(&d, 4, WitnessCap::All),
            Err(Error::EllOutOfRange {
                ell: 4,
                diameter: 3
            })
        );
        assert!(is_ell_balanced(&d, 0, WitnessCap::All).is_err());
        assert!(is_ell_balanced(&d, 3, WitnessCap::All).unwrap().balanced);
    }

    #[test]
    fn k2_profile() {
        let d = all_pairs(&Graph::complete(2));
        let p = full_profile(&d, WitnessCap::default()).unwrap();
        assert_eq!(p.levels.len(), 1);
        assert!(p.highly_distance_balanced);
        assert_eq!(p.pattern(), "✓");
        assert_eq!(mostar_index(&Graph::complete(2), &d).unwrap(), 0);
    }

    #[test]
    fn path_p4_mostar() {
        let g = Graph::path(4);
        let d = all_pairs(&g);
        assert_eq!(mostar_index(&g, &d).unwrap(), 4);
        let p = full_profile(&d, WitnessCap::All).unwrap();
        assert!(!p.levels[0].balanced);
        // end edges are unbalanced, middle edge is not
        assert_eq!(p.levels[0].unbalanced_pairs, 2);
        assert_eq!(
            p.levels[0]
                .witnesses
                .iter()
                .map(|w| (w.x, w.y))
                .collect::<Vec<_>>(),
            vec![(0, 1), (2, 3)]
        );
    }

    #[test]
    fn witness_cap_truncates_in_order() {
        let g = Graph::path(7);
        let d = all_pairs(&g);
        let all = is_ell_balanced(&d, 1, WitnessCap::All).unwrap();
        let two = is_ell_balanced(&d, 1, WitnessCap::Limit(2)).unwrap();
        assert_eq!(all.unbalanced_pairs, two.unbalanced_pairs);
        assert_eq!(&all.witnesses[..2], &two.witnesses[..]);
        assert!(all
            .witnesses
            .windows(2)
            .all(|w| (w[0].x, w[0].y) < (w[1].x, w[1].y)));
    }

    #[test]
    fn single_vertex_profile_is_vacuous() {
        let d = all_pairs(&Graph::complete(1));
        let p = full_profile(&d, WitnessCap::default()).unwrap();
        assert!(p.levels.is_empty());
        assert!(p.highly_distance_balanced);
    }
}
