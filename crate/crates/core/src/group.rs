//! Finite permutation groups stored exhaustively.
//!
//! Every group here has at most `7! = 5040` elements, so elements are kept as a
//! sorted list (lexicographic on image lists) and membership is a binary search.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::perm::{PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus {0} is not prime")]
    NotPrime(usize),
    #[error("multiplier set is empty")]
    EmptyMultipliers,
    #[error("multiplier {0} is not a unit modulo {1}")]
    NotAUnit(usize, usize),
    #[error("multipliers not closed under multiplication: {0}*{1} = {2} (mod {3})")]
    MultipliersNotClosed(usize, usize, usize, usize),
    #[error("expected a group of order 21, found order {0}")]
    WrongOrder(usize),
    #[error("element set is not closed under composition")]
    NotClosed,
    #[error("element set does not contain the identity")]
    MissingIdentity,
}

/// The two isomorphism types of groups of order 21.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Order21Kind {
    Cyclic21,
    Frobenius21,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Closure of `generators` under composition. The trivial group when empty.
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<PermGroup, GroupError> {
        check_degrees(degree, generators)?;
        let identity = Permutation::identity(degree);
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h = s.compose(&g)?;
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: seen.into_iter().collect(),
        })
    }

    /// Checks the group axioms on an explicit element set.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<PermGroup, GroupError> {
        check_degrees(degree, &elements)?;
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        if !set.contains(&Permutation::identity(degree)) {
            return Err(GroupError::MissingIdentity);
        }
        for a in &set {
            for b in &set {
                if !set.contains(&a.compose(b)?) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements: set.into_iter().collect(),
        })
    }

    /// Wraps elements already known to form a group (e.g. a full automorphism
    /// set returned by a search). Sorts and deduplicates.
    pub(crate) fn from_trusted(degree: usize, mut elements: Vec<Permutation>) -> PermGroup {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.first().is_some_and(Permutation::is_identity));
        PermGroup { degree, elements }
    }

    /// The affine maps `x ↦ a·x + b (mod p)` with `a` in `multipliers`.
    pub fn affine(modulus: usize, multipliers: &[usize]) -> Result<PermGroup, GroupError> {
        if !is_prime(modulus) {
            return Err(GroupError::NotPrime(modulus));
        }
        let units: BTreeSet<usize> = multipliers.iter().map(|&a| a % modulus).collect();
        if units.is_empty() {
            return Err(GroupError::EmptyMultipliers);
        }
        if units.contains(&0) {
            return Err(GroupError::NotAUnit(0, modulus));
        }
        for &a in &units {
            for &b in &units {
                let c = a * b % modulus;
                if !units.contains(&c) {
                    return Err(GroupError::MultipliersNotClosed(a, b, c, modulus));
                }
            }
        }
        let elements = units
            .iter()
            .flat_map(|&a| {
                (0..modulus).map(move |b| Permutation::from_fn(modulus, |x| (a * x + b) % modulus))
            })
            .collect();
        Ok(PermGroup::from_trusted(modulus, elements))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, a)| {
            self.elements[i + 1..]
                .iter()
                .all(|b| a.compose(b).ok() == b.compose(a).ok())
        })
    }

    /// Distinguishes `C21` from the Frobenius group `F21`.
    pub fn classify_order21(&self) -> Result<Order21Kind, GroupError> {
        if self.order() != 21 {
            return Err(GroupError::WrongOrder(self.order()));
        }
        Ok(if self.is_abelian() {
            Order21Kind::Cyclic21
        } else {
            Order21Kind::Frobenius21
        })
    }
}

impl<'a> IntoIterator for &'a PermGroup {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

fn check_degrees(degree: usize, perms: &[Permutation]) -> Result<(), GroupError> {
    if degree == 0 {
        return Err(PermError::EmptyDegree.into());
    }
    match perms.iter().find(|p| p.degree() != degree) {
        Some(p) => Err(GroupError::DegreeMismatch {
            expected: degree,
            found: p.degree(),
        }),
        None => Ok(()),
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// All permutations of degree `n` in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|images| Permutation::new(images).expect("itertools yields bijections"))
}
