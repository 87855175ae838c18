use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{run_cases, CaseOutcome, Failure, SweepReport};
use crate::balance::{full_profile, verdict_pattern, WitnessCap};
use crate::cayley::{gcd, CayleyGraph, Mode};
use crate::error::Result;
use crate::group::{parse_elements, parse_permutations, FiniteGroup, DEFAULT_CLOSURE_CAP};
use crate::metric::all_pairs;

/// A Cayley graph with a known diameter and per-distance verdicts.
#[derive(Debug, Clone)]
pub struct NamedFixture {
    pub name: &'static str,
    pub graph: CayleyGraph,
    pub diameter: usize,
    /// Expected verdict for `l = 1, 2, ..`.
    pub expected: Vec<bool>,
}

fn dihedral_fixture(n: usize, gens: &str) -> Result<CayleyGraph> {
    let group = FiniteGroup::dihedral(n)?;
    let idx = parse_elements(&group, gens)?;
    CayleyGraph::new(group, &idx, Mode::Strict)
}

/// Cayley graph on the permutation group generated by `gens` itself.
fn permutation_fixture(gens: &str) -> Result<CayleyGraph> {
    let perms = parse_permutations(gens, None)?;
    let group = FiniteGroup::permutation_closure(&perms, DEFAULT_CLOSURE_CAP)?;
    let idx: Vec<usize> = perms
        .iter()
        .map(|p| {
            group
                .index_of(&crate::group::GroupElement::Permutation(p.clone()))
                .expect("generator lies in its own closure")
        })
        .collect();
    CayleyGraph::new(group, &idx, Mode::Strict)
}

/// The three non-highly-balanced examples: a quintic graph on `D_9` and cubic
/// graphs on `A_4` and `S_4`.
pub fn named_fixtures() -> Result<Vec<NamedFixture>> {
    Ok(vec![
        NamedFixture {
            name: "D9 {a^3, a^6, b, b*a^2, b*a^3}",
            graph: dihedral_fixture(9, "a^3, a^6, b, b*a^2, b*a^3")?,
            diameter: 3,
            expected: vec![true, false, false],
        },
        NamedFixture {
            name: "A4 {(1 2 3), (1 3 2), (1 2)(3 4)}",
            graph: permutation_fixture("(1 2 3), (1 3 2), (1 2)(3 4)")?,
            diameter: 3,
            expected: vec![true, false, true],
        },
        NamedFixture {
            name: "S4 {(1 2), (2 4), (1 2)(3 4)}",
            graph: permutation_fixture("(1 2), (2 4), (1 2)(3 4)")?,
            diameter: 4,
            expected: vec![true, true, false, false],
        },
    ])
}

pub fn check_named_examples() -> Result<SweepReport> {
    let fixtures = named_fixtures()?;
    let count = fixtures.len() as u64;
    Ok(run_cases(
        "named-examples",
        "D9, A4 and S4 fixtures".into(),
        count,
        fixtures,
        |f| {
            let params = [("order", f.graph.group().order())];
            let d = all_pairs(f.graph.graph());
            let failure = match full_profile(&d, WitnessCap::Limit(0)) {
                Err(e) => Some(Failure::new(&params, format!("{}: {e}", f.name))),
                Ok(p) => {
                    let got: Vec<bool> = p.levels.iter().map(|l| l.balanced).collect();
                    (p.diameter != f.diameter || got != f.expected).then(|| {
                        Failure::new(
                            &params,
                            format!(
                                "{}: diameter {} pattern {}, expected diameter {} pattern {}",
                                f.name,
                                p.diameter,
                                p.pattern(),
                                f.diameter,
                                verdict_pattern(f.expected.iter().copied())
                            ),
                        )
                    })
                }
            };
            CaseOutcome::single(failure)
        },
    ))
}

/// Draws a symmetric connection set `{+-c}` for `Z_n` that generates `Z_n`.
fn sample_connection(rng: &mut ChaCha8Rng, ns: &RangeInclusive<usize>) -> (usize, Vec<usize>) {
    loop {
        let n = rng.gen_range(ns.clone());
        let chosen: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect();
        if chosen.is_empty() || chosen.iter().fold(n, |g, &c| gcd(g, c)) != 1 {
            continue;
        }
        let mut set: Vec<usize> = chosen.iter().flat_map(|&c| [c, n - c]).collect();
        set.sort_unstable();
        set.dedup();
        return (n, set);
    }
}

/// Samples `samples` connected circulants `Cay(Z_n; S)` with `n` in `ns` and
/// checks that each is highly distance-balanced.
pub fn check_circulants(ns: RangeInclusive<usize>, samples: usize, seed: u64) -> SweepReport {
    let ns = (*ns.start()).max(3)..=(*ns.end()).max(3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: Vec<(usize, Vec<usize>)> = (0..samples)
        .map(|_| sample_connection(&mut rng, &ns))
        .collect();
    run_cases(
        "circulant",
        format!(
            "{samples} connected circulants, n in [{}, {}], seed {seed}",
            ns.start(),
            ns.end()
        ),
        samples as u64,
        drawn,
        |(n, set)| {
            let params = [("n", *n)];
            let failure = match CayleyGraph::circulant(*n, set, Mode::Strict) {
                Err(e) => Some(Failure::new(&params, e.to_string())),
                Ok(g) => match full_profile(&all_pairs(g.graph()), WitnessCap::Limit(0)) {
                    Ok(p) if p.highly_distance_balanced => None,
                    Ok(p) => Some(Failure::new(
                        &params,
                        format!("{} has pattern {}", g.describe(), p.pattern()),
                    )),
                    Err(e) => Some(Failure::new(&params, e.to_string())),
                },
            };
            CaseOutcome::single(failure)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_reproduce_expected_patterns() {
        let r = check_named_examples().unwrap();
        assert_eq!(r.cases_run, 3);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn fixture_groups_have_expected_orders() {
        let f = named_fixtures().unwrap();
        let orders: Vec<usize> = f.iter().map(|f| f.graph.group().order()).collect();
        assert_eq!(orders, vec![18, 12, 24]);
        assert_eq!(f[0].graph.graph().regular_degree(), Some(5));
        assert_eq!(f[1].graph.graph().regular_degree(), Some(3));
        assert_eq!(f[2].graph.graph().regular_degree(), Some(3));
    }

    #[test]
    fn circulant_sampling_is_seeded() {
        let a = check_circulants(3..=20, 10, 7);
        let b = check_circulants(3..=20, 10, 7);
        assert_eq!(
            a,
            SweepReport {
                elapsed: a.elapsed,
                ..b
            }
        );
        assert!(a.passed());
    }

    #[test]
    fn fixed_circulants() {
        for (n, set) in [(6, vec![1, 5]), (10, vec![1, 3, 7, 9])] {
            let g = CayleyGraph::circulant(n, &set, Mode::Strict).unwrap();
            let p = full_profile(&all_pairs(g.graph()), WitnessCap::Limit(0)).unwrap();
            assert!(p.highly_distance_balanced);
        }
    }
}
