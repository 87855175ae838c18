//! Cayley graphs `Cay(G; S)`: vertices are group elements and `g ~ h` iff
//! `g^-1 h` lies in the symmetric, identity-free set `S`.
//!
//! Also provides closed-form neighbor formulas for the two cubic dihedral
//! families `{a, a^-1, b a^r}` and `{a^k, a^-k, b a^t}`. They are computed
//! from exponent arithmetic alone and serve as an oracle for [`build_cayley`].

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{DihedralElement, FiniteGroup};
use crate::SCHEMA_VERSION;

/// Whether non-generating sets are rejected or built as disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Permissive,
}

/// A validated connection set: symmetric, identity-free, sorted, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    elements: Vec<usize>,
    subgroup_order: usize,
    group_order: usize,
}

impl GeneratingSet {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Order of the subgroup `<S>`.
    pub fn subgroup_order(&self) -> usize {
        self.subgroup_order
    }

    pub fn generates(&self) -> bool {
        self.subgroup_order == self.group_order
    }
}

/// Checks `S` against `G`. In strict mode a set that does not generate `G` is
/// an error; in permissive mode the result just reports it.
pub fn validate_generating_set(
    group: &FiniteGroup,
    elements: &[usize],
    mode: Mode,
) -> Result<GeneratingSet> {
    let mut set: Vec<usize> = elements.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&x) = set.iter().find(|&&x| x >= group.order()) {
        return Err(Error::NotInGroup(format!("#{x}")));
    }
    if set.contains(&group.identity()) {
        return Err(Error::IdentityInSet);
    }
    for &s in &set {
        let inv = group.inverse(s);
        if set.binary_search(&inv).is_err() {
            return Err(Error::NotSymmetric {
                element: group.label(s),
                inverse: group.label(inv),
            });
        }
    }
    let subgroup_order = group.closure(&set).len();
    if mode == Mode::Strict && subgroup_order != group.order() {
        return Err(Error::NotGenerating {
            subgroup_order,
            group_order: group.order(),
        });
    }
    Ok(GeneratingSet {
        elements: set,
        subgroup_order,
        group_order: group.order(),
    })
}

/// An immutable Cayley graph together with the group and set it came from.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    group: FiniteGroup,
    gens: GeneratingSet,
    graph: Graph,
}

/// Builds `Cay(G; S)`; the neighbors of `g` are `g*s` for `s` in `S`.
pub fn build_cayley(group: FiniteGroup, gens: GeneratingSet) -> CayleyGraph {
    assert_eq!(
        gens.group_order,
        group.order(),
        "generating set was validated against a different group"
    );
    let adjacency = (0..group.order())
        .map(|g| {
            let mut nbrs: Vec<usize> = gens.elements.iter().map(|&s| group.mul(g, s)).collect();
            nbrs.sort_unstable();
            nbrs
        })
        .collect();
    CayleyGraph {
        graph: Graph::from_sorted_unchecked(adjacency),
        group,
        gens,
    }
}

impl CayleyGraph {
    /// Validates `elements` and builds the graph in one step.
    pub fn new(group: FiniteGroup, elements: &[usize], mode: Mode) -> Result<Self> {
        let gens = validate_generating_set(&group, elements, mode)?;
        Ok(build_cayley(group, gens))
    }

    /// `Cay(D_n; S)` for dihedral elements `S`.
    pub fn dihedral(n: usize, elements: &[DihedralElement], mode: Mode) -> Result<Self> {
        let group = FiniteGroup::dihedral(n)?;
        let idx: Vec<usize> = elements.iter().map(|e| e.index(n)).collect();
        Self::new(group, &idx, mode)
    }

    /// The circulant `Cay(Z_n; S)` with `S` given as residues.
    pub fn circulant(n: usize, connection: &[usize], mode: Mode) -> Result<Self> {
        let group = FiniteGroup::cyclic(n)?;
        let idx: Vec<usize> = connection.iter().map(|&c| c % n).collect();
        Self::new(group, &idx, mode)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn generators(&self) -> &GeneratingSet {
        &self.gens
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn is_connected(&self) -> bool {
        self.gens.generates()
    }

    pub fn generator_labels(&self) -> Vec<String> {
        self.gens
            .elements
            .iter()
            .map(|&s| self.group.label(s))
            .collect()
    }

    /// `Cay(D6; {a, a^5, b*a^2})`.
    pub fn describe(&self) -> String {
        format!(
            "Cay({}; {{{}}})",
            self.group,
            self.generator_labels().join(", ")
        )
    }

    /// Vertex permutation `x -> g*x`.
    pub fn left_translation(&self, g: usize) -> Vec<usize> {
        (0..self.group.order())
            .map(|x| self.group.mul(g, x))
            .collect()
    }

    /// One `u v` line per edge with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.graph.edges() {
            writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Export<'a> {
            schema_version: &'a str,
            group: String,
            order: usize,
            n: Option<usize>,
            generators: Vec<String>,
            connected: bool,
            labels: Vec<String>,
            adjacency: Vec<&'a [usize]>,
        }
        let export = Export {
            schema_version: SCHEMA_VERSION,
            group: self.group.to_string(),
            order: self.group.order(),
            n: self.group.dihedral_n().or(self.group.cyclic_n()),
            generators: self.generator_labels(),
            connected: self.is_connected(),
            labels: self.group.labels(),
            adjacency: (0..self.vertex_count())
                .map(|u| self.graph.neighbors(u))
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&export)?)
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `k` mod `n`, if `gcd(k, n) = 1`.
pub fn mod_inverse(k: usize, n: usize) -> Option<usize> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i64, (k % n) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n as i64) as usize)
}

/// Checks the cubic-family constraints `1 <= k < n/2`, `gcd(k, n) = 1`.
pub fn check_s2_params(n: usize, k: usize, t: usize) -> Result<()> {
    if k == 0 || 2 * k >= n {
        return Err(Error::Parameter(format!(
            "need 1 <= k < n/2, got k = {k}, n = {n}"
        )));
    }
    if gcd(k, n) != 1 {
        return Err(Error::Parameter(format!(
            "gcd({k}, {n}) = {} != 1",
            gcd(k, n)
        )));
    }
    if t >= n {
        return Err(Error::Parameter(format!("t = {t} must be below n = {n}")));
    }
    Ok(())
}

/// The `r` with `k*r = t (mod n)`, so that `b a^t = b (a^k)^r`.
pub fn shift_for(n: usize, k: usize, t: usize) -> Result<usize> {
    let k_inv = mod_inverse(k, n)
        .ok_or_else(|| Error::Parameter(format!("{k} is not invertible mod {n}")))?;
    let r = (k_inv * t) % n;
    debug_assert_eq!((k * r) % n, t % n);
    Ok(r)
}

/// `{a, a^(n-1), b a^r}`.
pub fn s1_generators(n: usize, r: usize) -> Vec<DihedralElement> {
    vec![
        DihedralElement::rotation(1, n),
        DihedralElement::rotation(-1, n),
        DihedralElement::reflection(r as i64, n),
    ]
}

/// `{a^k, a^(n-k), b a^t}`.
pub fn s2_generators(n: usize, k: usize, t: usize) -> Vec<DihedralElement> {
    vec![
        DihedralElement::rotation(k as i64, n),
        DihedralElement::rotation(-(k as i64), n),
        DihedralElement::reflection(t as i64, n),
    ]
}

/// The cubic dihedral family whose neighbor formulas are known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicFamily {
    /// `{a, a^(n-1), b a^r}`
    S1 { n: usize, r: usize },
    /// `{a^k, a^(n-k), b a^t}`
    S2 { n: usize, k: usize, t: usize },
}

impl CubicFamily {
    pub fn n(self) -> usize {
        match self {
            CubicFamily::S1 { n, .. } | CubicFamily::S2 { n, .. } => n,
        }
    }

    pub fn generators(self) -> Vec<DihedralElement> {
        match self {
            CubicFamily::S1 { n, r } => s1_generators(n, r),
            CubicFamily::S2 { n, k, t } => s2_generators(n, k, t),
        }
    }
}

/// Neighbors of `vertex` predicted by exponent arithmetic alone.
///
/// For `{a, a^-1, b a^r}`: `a^i ~ a^(i-1), a^(i+1), b a^(r-i)` and
/// `b a^i ~ b a^(i-1), b a^(i+1), a^(r-i)`.
///
/// For `{a^k, a^-k, b a^t}` the vertex is written `a^(ik)` or `b a^(ik)` (possible
/// since `k` is a unit), `t` as `k r`, and the neighbors are `a^((i-1)k)`,
/// `a^((i+1)k)`, `b a^((r-i)k)` (mirrored for reflections).
pub fn dihedral_adjacency_oracle(
    family: CubicFamily,
    vertex: DihedralElement,
) -> Result<[DihedralElement; 3]> {
    let (n, k, r) = match family {
        CubicFamily::S1 { n, r } => (n, 1, r % n),
        CubicFamily::S2 { n, k, t } => {
            check_s2_params(n, k, t)?;
            let r = shift_for(n, k, t)?;
            // b (a^k)^r must be the same element as b a^t.
            if DihedralElement::reflection((k * r) as i64, n)
                != DihedralElement::reflection(t as i64, n)
            {
                return Err(Error::Parameter(format!(
                    "shift r = {r} does not reproduce t = {t}"
                )));
            }
            (n, k, r)
        }
    };
    if vertex.exp >= n {
        return Err(Error::NotInGroup(vertex.to_string()));
    }
    let k_inv = mod_inverse(k, n).expect("k validated as a unit");
    let i = ((vertex.exp * k_inv) % n) as i64;
    let (r_i, k_i) = (r as i64, k as i64);
    let same = |j: i64| DihedralElement {
        reflect: vertex.reflect,
        exp: crate::group::reduce(j * k_i, n),
    };
    let across = DihedralElement {
        reflect: !vertex.reflect,
        exp: crate::group::reduce((r_i - i) * k_i, n),
    };
    Ok([same(i - 1), same(i + 1), across])
}
