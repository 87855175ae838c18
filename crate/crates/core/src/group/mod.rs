//! Finite groups with elements indexed `0..order`, index 0 being the identity.
//!
//! Four realizations are supported: dihedral `D_n` and cyclic `Z_n` by direct
//! modular arithmetic, permutation groups given as the closure of a generator
//! list, and arbitrary groups given by a validated multiplication table.

mod dihedral;
mod parse;
mod permutation;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dihedral::{conjugate_b, dihedral_inverse, dihedral_mul, reduce, DihedralElement};
pub use parse::{parse_elements, parse_permutations};
pub use permutation::Permutation;

/// Default cap on permutation-group closures.
pub const DEFAULT_CLOSURE_CAP: usize = 50_000;

/// Tables above this order get sampled rather than exhaustive associativity checks.
const EXHAUSTIVE_ASSOCIATIVITY_MAX: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 1000;

/// A group element in whichever realization its group uses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupElement {
    Dihedral(DihedralElement),
    /// `a^i` in the cyclic group `Z_n`.
    Cyclic(usize),
    Permutation(Permutation),
    /// Row index in a table-backed group.
    Table(usize),
}

#[derive(Debug, Clone)]
enum Realization {
    Dihedral {
        n: usize,
    },
    Cyclic {
        n: usize,
    },
    Permutation {
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
    },
    Table {
        table: Vec<usize>,
        labels: Vec<String>,
    },
}

/// A finite group whose elements are addressed by index.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    realization: Realization,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// The dihedral group `D_n` of order `2n`. Element `b^e a^i` has index `e*n + i`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("dihedral group needs n >= 1".into()));
        }
        let inverses = (0..2 * n)
            .map(|i| dihedral_inverse(DihedralElement::from_index(i, n), n).index(n))
            .collect();
        Ok(Self {
            order: 2 * n,
            realization: Realization::Dihedral { n },
            inverses,
        })
    }

    /// The cyclic group `Z_n`, with `a^i` at index `i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("cyclic group needs n >= 1".into()));
        }
        Ok(Self {
            order: n,
            realization: Realization::Cyclic { n },
            inverses: (0..n).map(|i| (n - i) % n).collect(),
        })
    }

    /// The permutation group generated by `generators`.
    ///
    /// Elements are ordered lexicographically by image array, which puts the
    /// identity first.
    pub fn permutation_closure(generators: &[Permutation], cap: usize) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(Error::Parameter("empty generator list".into())),
        };
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Parameter(format!(
                "generator {g} acts on {} points, expected {degree}",
                g.degree()
            )));
        }

        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::SizeLimit { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }

        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        debug_assert!(elements[0].is_identity());
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        Ok(Self {
            order: elements.len(),
            realization: Realization::Permutation { elements, index },
            inverses,
        })
    }

    /// A group from its multiplication table, `table[i][j]` being the index of
    /// `g_i * g_j`. Index 0 must be the identity.
    ///
    /// The Latin-square property, identity row/column and inverses are checked
    /// eagerly. Associativity is checked exhaustively up to order 64 and on
    /// 1000 sampled triples beyond that.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let m = table.len();
        if m == 0 {
            return Err(Error::MalformedGroup("empty table".into()));
        }
        if let Some((i, row)) = table.iter().enumerate().find(|(_, row)| row.len() != m) {
            return Err(Error::MalformedGroup(format!(
                "row {i} has {} entries, expected {m}",
                row.len()
            )));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        if let Some(&x) = flat.iter().find(|&&x| x >= m) {
            return Err(Error::MalformedGroup(format!("entry {x} out of range")));
        }
        for i in 0..m {
            if flat[i] != i || flat[i * m] != i {
                return Err(Error::MalformedGroup(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        for i in 0..m {
            let mut row_seen = vec![false; m];
            let mut col_seen = vec![false; m];
            for j in 0..m {
                if std::mem::replace(&mut row_seen[flat[i * m + j]], true)
                    || std::mem::replace(&mut col_seen[flat[j * m + i]], true)
                {
                    return Err(Error::MalformedGroup(format!(
                        "table is not a Latin square at element {i}"
                    )));
                }
            }
        }
        let mut inverses = Vec::with_capacity(m);
        for i in 0..m {
            let inv = (0..m).find(|&j| flat[i * m + j] == 0 && flat[j * m + i] == 0);
            match inv {
                Some(j) => inverses.push(j),
                None => {
                    return Err(Error::MalformedGroup(format!(
                        "element {i} has no two-sided inverse"
                    )))
                }
            }
        }
        let mul = |x: usize, y: usize| flat[x * m + y];
        let assoc = |(x, y, z): (usize, usize, usize)| mul(mul(x, y), z) == mul(x, mul(y, z));
        let bad = if m <= EXHAUSTIVE_ASSOCIATIVITY_MAX {
            (0..m)
                .flat_map(|x| (0..m).flat_map(move |y| (0..m).map(move |z| (x, y, z))))
                .find(|&t| !assoc(t))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(m as u64);
            (0..ASSOCIATIVITY_SAMPLES)
                .map(|_| {
                    (
                        rng.gen_range(0..m),
                        rng.gen_range(0..m),
                        rng.gen_range(0..m),
                    )
                })
                .find(|&t| !assoc(t))
        };
        if let Some((x, y, z)) = bad {
            return Err(Error::MalformedGroup(format!(
                "associativity fails on ({x}, {y}, {z})"
            )));
        }

        let labels = match labels {
            Some(l) if l.len() != m => {
                return Err(Error::MalformedGroup(format!(
                    "{} labels for {m} elements",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..m).map(|i| format!("g{i}")).collect(),
        };
        Ok(Self {
            order: m,
            realization: Realization::Table {
                table: flat,
                labels,
            },
            inverses,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    /// `Some(n)` when this is `D_n`.
    pub fn dihedral_n(&self) -> Option<usize> {
        match self.realization {
            Realization::Dihedral { n } => Some(n),
            _ => None,
        }
    }

    /// `Some(n)` when this is `Z_n`.
    pub fn cyclic_n(&self) -> Option<usize> {
        match self.realization {
            Realization::Cyclic { n } => Some(n),
            _ => None,
        }
    }

    /// Degree of the permutation realization, if any.
    pub fn permutation_degree(&self) -> Option<usize> {
        match &self.realization {
            Realization::Permutation { elements, .. } => Some(elements[0].degree()),
            _ => None,
        }
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        match &self.realization {
            Realization::Dihedral { n } => dihedral_mul(
                DihedralElement::from_index(x, *n),
                DihedralElement::from_index(y, *n),
                *n,
            )
            .index(*n),
            Realization::Cyclic { n } => (x + y) % n,
            Realization::Permutation { elements, index } => index[&elements[x].then(&elements[y])],
            Realization::Table { table, .. } => table[x * self.order + y],
        }
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn element(&self, x: usize) -> GroupElement {
        match &self.realization {
            Realization::Dihedral { n } => {
                GroupElement::Dihedral(DihedralElement::from_index(x, *n))
            }
            Realization::Cyclic { .. } => GroupElement::Cyclic(x),
            Realization::Permutation { elements, .. } => {
                GroupElement::Permutation(elements[x].clone())
            }
            Realization::Table { .. } => GroupElement::Table(x),
        }
    }

    pub fn index_of(&self, element: &GroupElement) -> Option<usize> {
        match (&self.realization, element) {
            (Realization::Dihedral { n }, GroupElement::Dihedral(d)) if d.exp < *n => {
                Some(d.index(*n))
            }
            (Realization::Cyclic { n }, GroupElement::Cyclic(i)) if i < n => Some(*i),
            (Realization::Permutation { index, .. }, GroupElement::Permutation(p)) => {
                index.get(p).copied()
            }
            (Realization::Table { .. }, GroupElement::Table(i)) if *i < self.order => Some(*i),
            _ => None,
        }
    }

    /// Human-readable name of an element: `b*a^2`, `7` (cyclic), `(1 2 3)`, `g5`.
    pub fn label(&self, x: usize) -> String {
        match &self.realization {
            Realization::Dihedral { n } => DihedralElement::from_index(x, *n).to_string(),
            Realization::Cyclic { .. } => x.to_string(),
            Realization::Permutation { elements, .. } => elements[x].to_string(),
            Realization::Table { labels, .. } => labels[x].clone(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order).map(|x| self.label(x)).collect()
    }

    /// Index of the element carrying `label`, for table-backed groups.
    pub(crate) fn table_lookup(&self, label: &str) -> Option<usize> {
        match &self.realization {
            Realization::Table { labels, .. } => labels.iter().position(|l| l == label),
            _ => None,
        }
    }

    /// The subgroup generated by `generators`, as a sorted index list.
    pub fn closure(&self, generators: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut seen[y], true) {
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn is_abelian(&self) -> bool {
        match self.realization {
            Realization::Cyclic { .. } => true,
            Realization::Dihedral { n } => n <= 2,
            _ => (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x))),
        }
    }
}

/// Short descriptor such as `D6`, `Z10`, `Perm(4)` or `Table(8)`.
impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.realization {
            Realization::Dihedral { n } => write!(f, "D{n}"),
            Realization::Cyclic { n } => write!(f, "Z{n}"),
            Realization::Permutation { elements, .. } => {
                write!(f, "Perm({}; order {})", elements[0].degree(), self.order)
            }
            Realization::Table { .. } => write!(f, "Table({})", self.order),
        }
    }
}
