//! Arithmetic in the dihedral group `D_n = <a, b | a^n = b^2 = 1, bab = a^-1>`.
//!
//! Every element has the unique normal form `b^e a^i` with `e` in {0, 1} and
//! `0 <= i < n`. Rotations are `a^i` and reflections are `b a^i`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// An element `b^e a^i` of `D_n` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElement {
    /// `true` for reflections `b a^i`.
    pub reflect: bool,
    /// The exponent of `a`, always reduced mod n.
    pub exp: usize,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self {
        reflect: false,
        exp: 0,
    };

    /// The rotation `a^i`, with `i` reduced mod `n`.
    pub fn rotation(i: i64, n: usize) -> Self {
        Self {
            reflect: false,
            exp: reduce(i, n),
        }
    }

    /// The reflection `b a^i`, with `i` reduced mod `n`.
    pub fn reflection(i: i64, n: usize) -> Self {
        Self {
            reflect: true,
            exp: reduce(i, n),
        }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Vertex index `e*n + i`: rotations occupy `0..n`, reflections `n..2n`.
    pub fn index(self, n: usize) -> usize {
        debug_assert!(self.exp < n);
        usize::from(self.reflect) * n + self.exp
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        debug_assert!(index < 2 * n);
        Self {
            reflect: index >= n,
            exp: index % n,
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflect, self.exp) {
            (false, 0) => f.write_str("1"),
            (false, 1) => f.write_str("a"),
            (false, i) => write!(f, "a^{i}"),
            (true, 0) => f.write_str("b"),
            (true, 1) => f.write_str("b*a"),
            (true, i) => write!(f, "b*a^{i}"),
        }
    }
}

/// Reduces a signed exponent into `0..n`.
pub fn reduce(i: i64, n: usize) -> usize {
    assert!(n >= 1, "dihedral modulus must be positive");
    i.rem_euclid(n as i64) as usize
}

/// Product in `D_n` using `b^e1 a^i1 * b^e2 a^i2 = b^(e1 xor e2) a^((-1)^e2 i1 + i2)`.
pub fn dihedral_mul(x: DihedralElement, y: DihedralElement, n: usize) -> DihedralElement {
    debug_assert!(x.exp < n && y.exp < n);
    // a^i b = b a^-i, so the left rotation is negated when y carries a b.
    let left = if y.reflect { (n - x.exp) % n } else { x.exp };
    DihedralElement {
        reflect: x.reflect ^ y.reflect,
        exp: (left + y.exp) % n,
    }
}

/// Inverse in `D_n`: `(a^i)^-1 = a^(n-i)` and every reflection is an involution.
pub fn dihedral_inverse(x: DihedralElement, n: usize) -> DihedralElement {
    if x.reflect {
        x
    } else {
        DihedralElement {
            reflect: false,
            exp: (n - x.exp) % n,
        }
    }
}

/// Exponent of `b a^i b`, which equals `a^(n-i)`.
pub fn conjugate_b(i: usize, n: usize) -> usize {
    debug_assert!(i < n);
    (n - i) % n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(i: i64, n: usize) -> DihedralElement {
        DihedralElement::rotation(i, n)
    }

    fn refl(i: i64, n: usize) -> DihedralElement {
        DihedralElement::reflection(i, n)
    }

    #[test]
    fn identity_is_neutral() {
        let x = refl(3, 6);
        assert_eq!(dihedral_mul(DihedralElement::IDENTITY, x, 6), x);
        assert_eq!(dihedral_mul(x, DihedralElement::IDENTITY, 6), x);
    }

    #[test]
    fn reflections_square_to_identity() {
        assert!(dihedral_mul(refl(2, 6), refl(2, 6), 6).is_identity());
    }

    #[test]
    fn reflection_times_rotation() {
        assert_eq!(dihedral_mul(refl(2, 6), rot(3, 6), 6), refl(5, 6));
    }

    #[test]
    fn inverses() {
        assert_eq!(dihedral_inverse(rot(2, 6), 6), rot(4, 6));
        assert_eq!(
            dihedral_inverse(DihedralElement::IDENTITY, 6),
            DihedralElement::IDENTITY
        );
        assert_eq!(dihedral_inverse(refl(5, 7), 7), refl(5, 7));
    }

    #[test]
    fn conjugation_by_b() {
        assert_eq!(conjugate_b(0, 9), 0);
        assert_eq!(conjugate_b(2, 6), 4);
        assert_eq!(conjugate_b(5, 7), 2);
        // cross-check through the product: b * a^5 * b
        let b = refl(0, 7);
        let bab = dihedral_mul(dihedral_mul(b, rot(5, 7), 7), b, 7);
        assert_eq!(bab, rot(2, 7));
    }

    #[test]
    fn defining_relations_hold() {
        for n in 1..=20 {
            let a = rot(1, n);
            let b = refl(0, n);
            let mut p = DihedralElement::IDENTITY;
            for _ in 0..n {
                p = dihedral_mul(p, a, n);
            }
            assert!(p.is_identity());
            assert!(dihedral_mul(b, b, n).is_identity());
            let bab = dihedral_mul(dihedral_mul(b, a, n), b, n);
            assert_eq!(bab, dihedral_inverse(a, n));
        }
    }

    #[test]
    fn index_round_trip_and_display() {
        assert_eq!(refl(2, 6).index(6), 8);
        assert_eq!(DihedralElement::from_index(8, 6), refl(2, 6));
        assert_eq!(rot(-1, 6).to_string(), "a^5");
        assert_eq!(refl(1, 6).to_string(), "b*a");
        assert_eq!(DihedralElement::IDENTITY.to_string(), "1");
    }
}
