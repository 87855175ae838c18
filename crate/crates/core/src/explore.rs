//! Enumeration of dihedral generating-set families and balance censuses.
//!
//! Families:
//!
//! | name    | connection set                         | parameters                   |
//! |---------|----------------------------------------|------------------------------|
//! | `s1`    | `{a, a^-1, b a^r}`                     | `0 <= r < n`                 |
//! | `s2`    | `{a^k, a^-k, b a^t}`                   | `1 <= k < n/2` unit, `t`     |
//! | `half`  | `{a^(n/2), b a^k1, b a^k2}`            | even `n`, `k1 < k2`          |
//! | `refl3` | `{b a^k1, b a^k2, b a^k3}`             | `k1 < k2 < k3`               |
//! | `general` | every symmetric identity-free set up to a size bound | |
//!
//! Emission is deterministic: by `n`, then lexicographically by the sorted
//! vertex-index vector of the set. Under [`Dedupe::Shift`] sets related by the
//! automorphism `a -> a, b -> b a^c` are collapsed to their least representative.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::balance::{full_profile, WitnessCap};
use crate::cayley::{gcd, CayleyGraph, Mode};
use crate::error::{Error, Result};
use crate::group::DihedralElement;
use crate::metric::all_pairs;
use crate::SCHEMA_VERSION;

/// Graphs evaluated per parallel batch while streaming a census.
const CENSUS_BATCH: usize = 256;

/// Hard cap on `general` sets per `n`.
const GENERAL_MAX_SETS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    S1,
    S2,
    Half,
    Refl3,
    /// All symmetric identity-free subsets of `D_n` with at most `max_size` elements.
    General {
        max_size: usize,
    },
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::S1 => "s1",
            Family::S2 => "s2",
            Family::Half => "half",
            Family::Refl3 => "refl3",
            Family::General { .. } => "general",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dedupe {
    #[default]
    None,
    /// Identify sets that differ by a common shift of all reflection exponents.
    Shift,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub ns: RangeInclusive<usize>,
    pub dedupe: Dedupe,
    /// Strict drops non-generating sets; permissive keeps them, tagged.
    pub mode: Mode,
}

impl FamilySpec {
    pub fn new(family: Family, ns: RangeInclusive<usize>) -> Self {
        Self {
            family,
            ns,
            dedupe: Dedupe::None,
            mode: Mode::Strict,
        }
    }
}

/// One emitted generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub family: &'static str,
    pub n: usize,
    pub params: String,
    pub elements: Vec<DihedralElement>,
    pub generates: bool,
}

fn validate_spec(spec: &FamilySpec) -> Result<()> {
    if spec.ns.is_empty() {
        return Err(Error::Parameter("empty n range".into()));
    }
    if spec.family == Family::Half && !spec.ns.clone().any(|n| n % 2 == 0) {
        return Err(Error::Parameter(format!(
            "family half needs even n; range {}..={} has none",
            spec.ns.start(),
            spec.ns.end()
        )));
    }
    if let Family::General { max_size: 0 } = spec.family {
        return Err(Error::Parameter(
            "general family needs a size bound >= 1".into(),
        ));
    }
    Ok(())
}

/// Raw `(params, sorted index vector)` candidates for one `n`, in emission order.
fn raw_sets(family: Family, n: usize) -> Result<Vec<(String, Vec<usize>)>> {
    let rot = |i: usize| i % n;
    let refl = |i: usize| n + i % n;
    let mut out: Vec<(String, Vec<usize>)> = Vec::new();
    match family {
        Family::S1 if n >= 3 => {
            for r in 0..n {
                out.push((format!("r={r}"), vec![rot(1), rot(n - 1), refl(r)]));
            }
        }
        Family::S2 if n >= 3 => {
            for k in (1..n)
                .take_while(|&k| 2 * k < n)
                .filter(|&k| gcd(k, n) == 1)
            {
                for t in 0..n {
                    out.push((format!("k={k} t={t}"), vec![rot(k), rot(n - k), refl(t)]));
                }
            }
        }
        Family::Half if n.is_multiple_of(2) && n >= 2 => {
            for k1 in 0..n {
                for k2 in k1 + 1..n {
                    out.push((
                        format!("k1={k1} k2={k2}"),
                        vec![rot(n / 2), refl(k1), refl(k2)],
                    ));
                }
            }
        }
        Family::Refl3 if n >= 3 => {
            for k1 in 0..n {
                for k2 in k1 + 1..n {
                    for k3 in k2 + 1..n {
                        out.push((
                            format!("k1={k1} k2={k2} k3={k3}"),
                            vec![refl(k1), refl(k2), refl(k3)],
                        ));
                    }
                }
            }
        }
        Family::General { max_size } => {
            // inverse-closed units: {a^i, a^-i}, a^(n/2), and each reflection
            let mut units: Vec<Vec<usize>> = Vec::new();
            for i in (1..n).take_while(|&i| 2 * i <= n) {
                if 2 * i == n {
                    units.push(vec![i]);
                } else {
                    units.push(vec![i, n - i]);
                }
            }
            units.extend((0..n).map(|i| vec![refl(i)]));
            let mut sets = Vec::new();
            general_subsets(&units, 0, max_size, &mut Vec::new(), &mut sets)?;
            sets.sort();
            for set in sets {
                let labels: Vec<String> = set
                    .iter()
                    .map(|&v| DihedralElement::from_index(v, n).to_string())
                    .collect();
                out.push((format!("{{{}}}", labels.join(", ")), set));
            }
        }
        _ => {}
    }
    for (_, v) in &mut out {
        v.sort_unstable();
    }
    Ok(out)
}

fn general_subsets(
    units: &[Vec<usize>],
    from: usize,
    budget: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    for u in from..units.len() {
        if units[u].len() > budget {
            continue;
        }
        let before = current.len();
        current.extend(&units[u]);
        let mut set = current.clone();
        set.sort_unstable();
        out.push(set);
        if out.len() > GENERAL_MAX_SETS {
            return Err(Error::ResourceLimit(format!(
                "general family exceeds {GENERAL_MAX_SETS} sets; lower the size bound or n"
            )));
        }
        general_subsets(units, u + 1, budget - units[u].len(), current, out)?;
        current.truncate(before);
    }
    Ok(())
}

/// Least image of a set under all shifts `b a^i -> b a^(i+c)`.
fn shift_canonical(set: &[usize], n: usize) -> Vec<usize> {
    (0..n)
        .map(|c| {
            let mut img: Vec<usize> = set
                .iter()
                .map(|&v| if v < n { v } else { n + (v - n + c) % n })
                .collect();
            img.sort_unstable();
            img
        })
        .min()
        .expect("n >= 1")
}

fn members_for(spec: &FamilySpec, n: usize) -> Result<Vec<FamilyMember>> {
    let group = crate::group::FiniteGroup::dihedral(n)?;
    let mut out = Vec::new();
    for (params, set) in raw_sets(spec.family, n)? {
        if spec.dedupe == Dedupe::Shift && shift_canonical(&set, n) != set {
            continue;
        }
        let generates = group.closure(&set).len() == group.order();
        if !generates && spec.mode == Mode::Strict {
            continue;
        }
        out.push(FamilyMember {
            family: spec.family.name(),
            n,
            params,
            elements: set
                .iter()
                .map(|&v| DihedralElement::from_index(v, n))
                .collect(),
            generates,
        });
    }
    Ok(out)
}

/// Deterministic stream of the family's generating sets, one `n` at a time.
pub fn enumerate_family(spec: &FamilySpec) -> Result<impl Iterator<Item = Result<FamilyMember>>> {
    validate_spec(spec)?;
    let spec = spec.clone();
    let ns = spec.ns.clone();
    Ok(ns.flat_map(move |n| match members_for(&spec, n) {
        Ok(v) => v.into_iter().map(Ok).collect::<Vec<_>>(),
        Err(e) => vec![Err(e)],
    }))
}

/// One census line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub family: String,
    pub n: usize,
    pub params: String,
    pub order: usize,
    /// Diameter of the graph, or of each component when disconnected.
    pub diameter: usize,
    /// `✓`/`✗` per distance, or `disconnected`.
    pub verdict_pattern: String,
    pub highly: Option<bool>,
}

pub fn evaluate(member: &FamilyMember) -> Result<CensusRow> {
    let g = CayleyGraph::dihedral(member.n, &member.elements, Mode::Permissive)?;
    let d = all_pairs(g.graph());
    let (pattern, highly) = if d.is_connected() {
        let p = full_profile(&d, WitnessCap::Limit(0))?;
        (p.pattern(), Some(p.highly_distance_balanced))
    } else {
        ("disconnected".to_string(), None)
    };
    Ok(CensusRow {
        family: member.family.to_string(),
        n: member.n,
        params: member.params.clone(),
        order: g.group().order(),
        diameter: d.diameter(),
        verdict_pattern: pattern,
        highly,
    })
}

/// Evaluates the family in parallel batches and yields rows in emission order.
pub fn census_stream(spec: &FamilySpec) -> Result<impl Iterator<Item = Result<CensusRow>>> {
    let mut members = enumerate_family(spec)?.peekable();
    let mut pending: std::vec::IntoIter<Result<CensusRow>> = Vec::new().into_iter();
    Ok(std::iter::from_fn(move || loop {
        if let Some(row) = pending.next() {
            return Some(row);
        }
        members.peek()?;
        let batch: Vec<Result<FamilyMember>> = members.by_ref().take(CENSUS_BATCH).collect();
        let rows: Vec<Result<CensusRow>> = batch
            .into_par_iter()
            .map(|m| m.and_then(|m| evaluate(&m)))
            .collect();
        pending = rows.into_iter();
    }))
}

/// A finished census with per-pattern counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub schema_version: &'static str,
    pub family: String,
    pub rows: Vec<CensusRow>,
    pub summary: BTreeMap<String, usize>,
}

pub fn census(spec: &FamilySpec) -> Result<Census> {
    let rows: Vec<CensusRow> = census_stream(spec)?.collect::<Result<_>>()?;
    let summary = summarize(&rows);
    Ok(Census {
        schema_version: SCHEMA_VERSION,
        family: spec.family.name().to_string(),
        rows,
        summary,
    })
}

pub fn summarize(rows: &[CensusRow]) -> BTreeMap<String, usize> {
    let mut summary = BTreeMap::new();
    for r in rows {
        *summary.entry(r.verdict_pattern.clone()).or_insert(0) += 1;
    }
    summary
}

pub const CSV_HEADER: [&str; 7] = [
    "family",
    "n",
    "params",
    "order",
    "diameter",
    "verdict_pattern",
    "highly",
];

impl CensusRow {
    pub fn csv_record(&self) -> [String; 7] {
        [
            self.family.clone(),
            self.n.to_string(),
            self.params.clone(),
            self.order.to_string(),
            self.diameter.to_string(),
            self.verdict_pattern.clone(),
            self.highly.map(|h| h.to_string()).unwrap_or_default(),
        ]
    }

    pub fn text_line(&self) -> String {
        let mut s = String::new();
        let _ = write!(
            s,
            "{:<8} n={:<4} {:<28} order {:<5} diam {:<3} {:<12} {}",
            self.family,
            self.n,
            self.params,
            self.order,
            self.diameter,
            self.verdict_pattern,
            match self.highly {
                Some(true) => "highly",
                Some(false) => "-",
                None => "",
            }
        );
        s.trim_end().to_string()
    }
}

impl Census {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            w.write_record(r.csv_record())?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Serialize(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}
