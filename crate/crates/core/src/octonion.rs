//! Integer octonions whose imaginary units multiply along an oriented Fano plane.
//!
//! Unit `e_u` (`u = 1..7`) sits on plane point `u mod 7`, so `e7` is point 0.
//! For a block oriented `i → j → k`, `e_i e_j = e_k` and `e_j e_i = -e_k`.

use std::fmt::{self, Write as _};
use std::ops::{Add, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orient::OrientedFano;
use crate::perm::Permutation;

/// Seed used when callers do not supply one.
pub const DEFAULT_SEED: u64 = 0x0c70_2024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OctonionError {
    #[error("unit index {0} outside 1..=7")]
    IndexOutOfRange(usize),
    #[error("expected a permutation of 8 units fixing the real unit")]
    NotUnitPermutation,
}

/// Plane point carrying unit `e_u`.
pub fn unit_to_point(u: usize) -> usize {
    u % 7
}

/// Unit sitting on plane point `p`.
pub fn point_to_unit(p: usize) -> usize {
    if p == 0 {
        7
    } else {
        p
    }
}

/// `±e_index`; index 0 is the real unit, so `(-1, 0)` is `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "(i8, usize)", from = "(i8, usize)")]
pub struct SignedBasis {
    pub sign: i8,
    pub index: usize,
}

impl SignedBasis {
    pub const NEG_ONE: SignedBasis = SignedBasis { sign: -1, index: 0 };

    pub fn negate(self) -> SignedBasis {
        SignedBasis {
            sign: -self.sign,
            index: self.index,
        }
    }
}

impl From<SignedBasis> for (i8, usize) {
    fn from(b: SignedBasis) -> Self {
        (b.sign, b.index)
    }
}

impl From<(i8, usize)> for SignedBasis {
    fn from((sign, index): (i8, usize)) -> Self {
        SignedBasis { sign, index }
    }
}

impl fmt::Display for SignedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { '-' } else { '+' };
        if self.index == 0 {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}e{}", self.index)
        }
    }
}

/// `e_i e_j` for units `i, j ∈ 1..=7`.
pub fn basis_product(i: usize, j: usize, o: &OrientedFano) -> Result<SignedBasis, OctonionError> {
    for u in [i, j] {
        if !(1..=7).contains(&u) {
            return Err(OctonionError::IndexOutOfRange(u));
        }
    }
    if i == j {
        return Ok(SignedBasis::NEG_ONE);
    }
    let (p, q) = (unit_to_point(i), unit_to_point(j));
    let k = point_to_unit(o.plane().third_point(p, q));
    let sign = if o.orientation().beats(p, q) { 1 } else { -1 };
    Ok(SignedBasis { sign, index: k })
}

/// The 7×7 table of products of imaginary units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CartanTable {
    entries: [[SignedBasis; 7]; 7],
}

pub fn cartan_table(o: &OrientedFano) -> CartanTable {
    let mut entries = [[SignedBasis::NEG_ONE; 7]; 7];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = basis_product(i + 1, j + 1, o).expect("indices in range");
        }
    }
    CartanTable { entries }
}

impl CartanTable {
    /// `e_i e_j`, 1-based. Panics outside `1..=7`.
    pub fn get(&self, i: usize, j: usize) -> SignedBasis {
        self.entries[i - 1][j - 1]
    }

    /// The table of the algebra after renaming `e_u` to `e_{σ(u)}`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<CartanTable, OctonionError> {
        check_unit_permutation(sigma)?;
        let mut entries = [[SignedBasis::NEG_ONE; 7]; 7];
        for i in 1..=7 {
            for j in 1..=7 {
                let b = self.get(i, j);
                entries[sigma.apply(i) - 1][sigma.apply(j) - 1] = SignedBasis {
                    sign: b.sign,
                    index: sigma.apply(b.index),
                };
            }
        }
        Ok(CartanTable { entries })
    }

    /// Aligned text grid with a header row and column.
    pub fn to_text(&self) -> String {
        let mut out = String::from("    ");
        for j in 1..=7 {
            write!(out, " {:>4}", format!("e{j}")).unwrap();
        }
        out.push('\n');
        for i in 1..=7 {
            write!(out, "{:>4}", format!("e{i}")).unwrap();
            for j in 1..=7 {
                write!(out, " {:>4}", self.get(i, j).to_string()).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn check_unit_permutation(sigma: &Permutation) -> Result<(), OctonionError> {
    if sigma.degree() != 8 || sigma.apply(0) != 0 {
        return Err(OctonionError::NotUnitPermutation);
    }
    Ok(())
}

/// Octonion with integer coefficients on `1, e1, .., e7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Octonion {
    pub coeffs: [i64; 8],
}

impl Octonion {
    pub fn new(coeffs: [i64; 8]) -> Octonion {
        Octonion { coeffs }
    }

    pub fn zero() -> Octonion {
        Octonion::default()
    }

    pub fn one() -> Octonion {
        Octonion::unit(0)
    }

    /// `e_u`, with `e_0 = 1`.
    pub fn unit(u: usize) -> Octonion {
        let mut coeffs = [0; 8];
        coeffs[u] = 1;
        Octonion { coeffs }
    }

    pub fn scale(self, k: i64) -> Octonion {
        Octonion {
            coeffs: self.coeffs.map(|c| c * k),
        }
    }
}

impl Add for Octonion {
    type Output = Octonion;

    fn add(self, rhs: Octonion) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|i| self.coeffs[i] + rhs.coeffs[i]),
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;

    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;

    fn neg(self) -> Octonion {
        self.scale(-1)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            let mag = c.unsigned_abs();
            let body = match (i, mag) {
                (0, _) => mag.to_string(),
                (_, 1) => format!("e{i}"),
                _ => format!("{mag}e{i}"),
            };
            match (first, c < 0) {
                (true, false) => f.write_str(&body)?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Bilinear extension of the table; `1` is the identity.
pub fn multiply(a: &Octonion, b: &Octonion, table: &CartanTable) -> Octonion {
    let mut out = [0i64; 8];
    for (i, &x) in a.coeffs.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.coeffs.iter().enumerate().filter(|(_, &y)| y != 0) {
            let (sign, k) = match (i, j) {
                (0, _) => (1, j),
                (_, 0) => (1, i),
                _ => {
                    let p = table.get(i, j);
                    (i64::from(p.sign), p.index)
                }
            };
            out[k] += sign * x * y;
        }
    }
    Octonion { coeffs: out }
}

/// Sum of squared coefficients.
pub fn norm(a: &Octonion) -> i64 {
    a.coeffs.iter().map(|c| c * c).sum()
}

/// Whether `e_u ↦ e_{σ(u)}` (fixing 1) preserves every product of imaginary units.
/// `σ` has degree 8 and fixes 0.
pub fn is_algebra_automorphism(sigma: &Permutation, table: &CartanTable) -> Result<bool, OctonionError> {
    Ok(table.relabel(sigma)? == *table)
}

/// The unit permutation induced by a permutation of the 7 plane points.
pub fn unit_permutation(point_perm: &Permutation) -> Permutation {
    assert_eq!(point_perm.degree(), 7, "expected a permutation of the plane points");
    Permutation::from_fn(8, |u| {
        if u == 0 {
            0
        } else {
            point_to_unit(point_perm.apply(unit_to_point(u)))
        }
    })
}

/// `n` octonions with coefficients drawn uniformly from `-bound..=bound`.
pub fn random_octonions(n: usize, bound: i64, seed: u64) -> Vec<Octonion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Octonion::new(std::array::from_fn(|_| rng.gen_range(-bound..=bound))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::all_permutations;
    use crate::orient::{map_orientation, oriented_automorphism_group, qr_orientation};

    fn table() -> CartanTable {
        cartan_table(&qr_orientation())
    }

    fn e(u: usize) -> Octonion {
        Octonion::unit(u)
    }

    fn mul(a: &Octonion, b: &Octonion) -> Octonion {
        multiply(a, b, &table())
    }

    fn plus(k: usize) -> SignedBasis {
        SignedBasis { sign: 1, index: k }
    }

    #[test]
    fn basic_products() {
        let o = qr_orientation();
        assert_eq!(basis_product(1, 2, &o).unwrap(), plus(4));
        assert_eq!(basis_product(2, 1, &o).unwrap(), SignedBasis { sign: -1, index: 4 });
        assert_eq!(basis_product(3, 3, &o).unwrap(), SignedBasis::NEG_ONE);
        assert_eq!(basis_product(0, 3, &o), Err(OctonionError::IndexOutOfRange(0)));
        assert_eq!(basis_product(1, 8, &o), Err(OctonionError::IndexOutOfRange(8)));
    }

    #[test]
    fn cyclic_rule() {
        // e_i e_{i+1} = e_{i+3}, indices taken in 1..=7.
        let wrap = |x: usize| (x - 1) % 7 + 1;
        let t = table();
        for i in 1..=7 {
            assert_eq!(t.get(i, wrap(i + 1)), plus(wrap(i + 3)));
            assert_eq!(t.get(wrap(i + 1), wrap(i + 3)), plus(i));
            assert_eq!(t.get(wrap(i + 3), i), plus(wrap(i + 1)));
        }
        assert_eq!(t.get(2, 3), plus(5));
    }

    #[test]
    fn antisymmetry_and_squares() {
        let t = table();
        for i in 1..=7 {
            assert_eq!(t.get(i, i), SignedBasis::NEG_ONE);
            for j in (1..=7).filter(|&j| j != i) {
                assert_eq!(t.get(j, i), t.get(i, j).negate());
                assert_eq!(mul(&e(i), &e(j)) + mul(&e(j), &e(i)), Octonion::zero());
            }
        }
        let positives = (1..=7)
            .flat_map(|i| (1..=7).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && t.get(i, j).sign > 0)
            .count();
        assert_eq!(positives, 21);
    }

    #[test]
    fn worked_products() {
        let lhs = e(0) + e(1);
        let rhs = e(2) + e(4);
        let prod = mul(&lhs, &rhs);
        assert_eq!(prod, e(4).scale(2));
        assert_eq!(norm(&prod), norm(&lhs) * norm(&rhs));
        assert_eq!(norm(&lhs), 2);
        assert_eq!(norm(&Octonion::zero()), 0);
        assert_eq!(mul(&mul(&e(1), &e(2)), &e(3)), -e(6));
        assert_eq!(mul(&e(1), &mul(&e(2), &e(3))), e(6));
        let a = Octonion::new([3, -1, 0, 2, 0, 0, 7, -4]);
        assert_eq!(mul(&Octonion::one(), &a), a);
        assert_eq!(mul(&a, &Octonion::one()), a);
    }

    #[test]
    fn display() {
        assert_eq!(e(4).scale(2).to_string(), "2e4");
        assert_eq!((e(0) - e(3)).to_string(), "1 - e3");
        assert_eq!(Octonion::zero().to_string(), "0");
        assert_eq!(SignedBasis::NEG_ONE.to_string(), "-1");
    }

    #[test]
    fn table_exports() {
        let t = table();
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with("[[[-1,0],[1,4],"));
        assert_eq!(serde_json::from_str::<CartanTable>(&json).unwrap(), t);
        let text = t.to_text();
        assert_eq!(text.lines().count(), 8);
        assert!(text.lines().nth(1).unwrap().starts_with("  e1   -1  +e4"));
    }

    #[test]
    fn automorphism_examples() {
        let t = table();
        let lambda2 = unit_permutation(&Permutation::from_fn(7, |p| 2 * p % 7));
        assert!(is_algebra_automorphism(&lambda2, &t).unwrap());
        let swap = Permutation::from_cycles(8, &[&[1, 2]]).unwrap();
        assert!(!is_algebra_automorphism(&swap, &t).unwrap());
        assert!(is_algebra_automorphism(&Permutation::identity(8), &t).unwrap());
        assert_eq!(
            is_algebra_automorphism(&Permutation::identity(7), &t),
            Err(OctonionError::NotUnitPermutation)
        );
    }

    #[test]
    fn exactly_21_unit_automorphisms() {
        let t = table();
        let found: Vec<Permutation> = all_permutations(7)
            .map(|p| Permutation::from_fn(8, |u| if u == 0 { 0 } else { p.apply(u - 1) + 1 }))
            .filter(|s| is_algebra_automorphism(s, &t).unwrap())
            .collect();
        assert_eq!(found.len(), 21);
        let mut lifted: Vec<Permutation> = oriented_automorphism_group(&qr_orientation())
            .iter()
            .map(unit_permutation)
            .collect();
        lifted.sort();
        assert_eq!(found, lifted);
    }

    #[test]
    fn table_invariance_under_oriented_automorphisms() {
        let o = qr_orientation();
        let t = cartan_table(&o);
        for sigma in &oriented_automorphism_group(&o) {
            let mapped = cartan_table(&map_orientation(sigma, &o).unwrap());
            assert_eq!(mapped, t.relabel(&unit_permutation(sigma)).unwrap());
        }
    }

    #[test]
    fn sampled_identities() {
        let t = table();
        let left = random_octonions(1000, 9, DEFAULT_SEED);
        let right = random_octonions(1000, 9, DEFAULT_SEED + 1);
        assert!(left.iter().flat_map(|a| a.coeffs).all(|c| (-9..=9).contains(&c)));
        for (a, b) in left.iter().zip(&right) {
            let ab = multiply(a, b, &t);
            assert_eq!(multiply(&multiply(a, a, &t), b, &t), multiply(a, &ab, &t));
            assert_eq!(multiply(&ab, b, &t), multiply(a, &multiply(b, b, &t), &t));
            assert_eq!(norm(&ab), norm(a) * norm(b));
        }
        assert_eq!(random_octonions(5, 9, 7), random_octonions(5, 9, 7));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_octonion() -> impl Strategy<Value = Octonion> {
            prop::array::uniform8(-9i64..=9).prop_map(Octonion::new)
        }

        proptest! {
            #[test]
            fn alternative_and_normed(a in arb_octonion(), b in arb_octonion()) {
                let t = table();
                let ab = multiply(&a, &b, &t);
                prop_assert_eq!(multiply(&multiply(&a, &a, &t), &b, &t), multiply(&a, &ab, &t));
                prop_assert_eq!(multiply(&ab, &b, &t), multiply(&a, &multiply(&b, &b, &t), &t));
                prop_assert_eq!(norm(&ab), norm(&a) * norm(&b));
            }
        }
    }
}
