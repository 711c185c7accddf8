//! Steiner triple systems: validation, cyclic construction, orthogonality,
//! isomorphism search and orthogonal mates of Fano planes.
//!
//! Blocks are kept in canonical form (sorted within each triple, triples sorted
//! lexicographically), so two systems are equal iff their block lists are equal.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{all_permutations, PermGroup};
use crate::perm::Permutation;

/// Largest order the backtracking isomorphism search accepts.
pub const MAX_SEARCH_ORDER: usize = 15;
/// Largest order for which the exhaustive permutation sweep is allowed.
pub const MAX_SWEEP_ORDER: usize = 8;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("point {point} out of range for v = {v}")]
    PointOutOfRange { point: usize, v: usize },
    #[error("triple {0:?} has repeated points")]
    DegenerateTriple([usize; 3]),
    #[error("no Steiner triple system of order {0} exists")]
    InvalidOrder(usize),
    #[error("expected {expected} blocks, found {found}")]
    BadBlockCount { expected: usize, found: usize },
    #[error("pair {{{0}, {1}}} is covered by more than one block")]
    PairCoveredTwice(usize, usize),
    #[error("pair {{{0}, {1}}} is not covered by any block")]
    PairUncovered(usize, usize),
    #[error("point sets differ: v = {0} vs v = {1}")]
    PointSetMismatch(usize, usize),
    #[error("operation needs a Fano plane (v = 7), got v = {0}")]
    NotFanoPlane(usize),
    #[error("search is not supported for v = {0}")]
    UnsupportedOrder(usize),
    #[error("the two systems are not orthogonal")]
    NotOrthogonal,
    #[error("permutation degree {degree} does not match v = {v}")]
    PermutationDegree { degree: usize, v: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Three distinct points, stored ascending.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 3]", into = "[usize; 3]")]
pub struct Triple([usize; 3]);

impl Triple {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Triple, DesignError> {
        let mut pts = [a, b, c];
        pts.sort_unstable();
        if pts[0] == pts[1] || pts[1] == pts[2] {
            return Err(DesignError::DegenerateTriple([a, b, c]));
        }
        Ok(Triple(pts))
    }

    pub fn points(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    pub fn is_disjoint(&self, other: &Triple) -> bool {
        self.0.iter().all(|x| !other.contains(*x))
    }

    /// The point of the triple other than `x` and `y`, if both belong to it.
    pub fn third(&self, x: usize, y: usize) -> Option<usize> {
        if x == y || !self.contains(x) || !self.contains(y) {
            return None;
        }
        self.0.iter().copied().find(|&z| z != x && z != y)
    }

    pub fn map(&self, p: &Permutation) -> Triple {
        let [a, b, c] = self.0;
        Triple::new(p.apply(a), p.apply(b), p.apply(c)).expect("permutations are injective")
    }
}

impl TryFrom<[usize; 3]> for Triple {
    type Error = DesignError;

    fn try_from([a, b, c]: [usize; 3]) -> Result<Self, Self::Error> {
        Triple::new(a, b, c)
    }
}

impl From<Triple> for [usize; 3] {
    fn from(t: Triple) -> Self {
        t.0
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorthand for literals in tests and builtins. Panics on repeated points.
pub fn triple(a: usize, b: usize, c: usize) -> Triple {
    Triple::new(a, b, c).expect("triple literal with repeated points")
}

/// Outcome of [`are_orthogonal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Orthogonality {
    pub disjoint: bool,
    pub orthogonal: bool,
}

/// A validated Steiner triple system on points `0..v`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "DesignJson", into = "DesignJson")]
pub struct TripleSystem {
    v: usize,
    blocks: Vec<Triple>,
    /// `third[x * v + y]` is the third point of the block through `x` and `y`.
    third: Vec<usize>,
}

impl PartialEq for TripleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.blocks == other.blocks
    }
}

impl Eq for TripleSystem {}

impl Hash for TripleSystem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
        self.blocks.hash(state);
    }
}

impl PartialOrd for TripleSystem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TripleSystem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.v, &self.blocks).cmp(&(other.v, &other.blocks))
    }
}

impl fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "STS({}) {:?}", self.v, self.blocks)
    }
}

/// Wire format: `{"v": 7, "blocks": [[0,1,3], ...]}`.
#[derive(Serialize, Deserialize)]
struct DesignJson {
    v: usize,
    blocks: Vec<[usize; 3]>,
}

impl TryFrom<DesignJson> for TripleSystem {
    type Error = DesignError;

    fn try_from(json: DesignJson) -> Result<Self, Self::Error> {
        let blocks = json
            .blocks
            .into_iter()
            .map(|[a, b, c]| Triple::new(a, b, c))
            .collect::<Result<Vec<_>, _>>()?;
        validate_sts(json.v, blocks)
    }
}

impl From<TripleSystem> for DesignJson {
    fn from(s: TripleSystem) -> Self {
        DesignJson {
            v: s.v,
            blocks: s.blocks.into_iter().map(Into::into).collect(),
        }
    }
}

/// Checks that every pair of `0..v` lies in exactly one block and returns the
/// canonical system. Pairs are checked in input order, so the first repeated
/// pair reported is the first one encountered while scanning `blocks`.
pub fn validate_sts(v: usize, blocks: Vec<Triple>) -> Result<TripleSystem, DesignError> {
    for t in &blocks {
        if let Some(&point) = t.0.iter().find(|&&x| x >= v) {
            return Err(DesignError::PointOutOfRange { point, v });
        }
    }
    if v == 0 || v % 6 != 1 && v % 6 != 3 {
        return Err(DesignError::InvalidOrder(v));
    }
    let expected = v * (v - 1) / 6;
    if blocks.len() != expected {
        return Err(DesignError::BadBlockCount {
            expected,
            found: blocks.len(),
        });
    }
    let mut third = vec![NONE; v * v];
    for t in &blocks {
        let [a, b, c] = t.0;
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            if third[x * v + y] != NONE {
                return Err(DesignError::PairCoveredTwice(x, y));
            }
            third[x * v + y] = z;
            third[y * v + x] = z;
        }
    }
    for x in 0..v {
        for y in x + 1..v {
            if third[x * v + y] == NONE {
                return Err(DesignError::PairUncovered(x, y));
            }
        }
    }
    let mut blocks = blocks;
    blocks.sort_unstable();
    Ok(TripleSystem { v, blocks, third })
}

/// All translates `base + z (mod v)` of the base blocks, validated.
pub fn cyclic_sts(v: usize, base_blocks: &[Triple]) -> Result<TripleSystem, DesignError> {
    let mut blocks = Vec::with_capacity(v * base_blocks.len());
    for base in base_blocks {
        for z in 0..v {
            let [a, b, c] = base.0;
            if let Some(&point) = base.0.iter().find(|&&x| x >= v) {
                return Err(DesignError::PointOutOfRange { point, v });
            }
            let t = Triple::new((a + z) % v, (b + z) % v, (c + z) % v)?;
            if !blocks.contains(&t) {
                blocks.push(t);
            }
        }
    }
    validate_sts(v, blocks)
}

impl TripleSystem {
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Triple] {
        &self.blocks
    }

    pub fn is_fano(&self) -> bool {
        self.v == 7
    }

    pub fn contains_block(&self, t: &Triple) -> bool {
        self.blocks.binary_search(t).is_ok()
    }

    /// Third point of the unique block through distinct `x` and `y`.
    #[inline]
    pub fn third_point(&self, x: usize, y: usize) -> usize {
        debug_assert!(x != y);
        self.third[x * self.v + y]
    }

    pub fn block_through(&self, x: usize, y: usize) -> Triple {
        triple(x, y, self.third_point(x, y))
    }

    pub fn blocks_through(&self, x: usize) -> impl Iterator<Item = &Triple> + '_ {
        self.blocks.iter().filter(move |t| t.contains(x))
    }

    /// Image of the system under a permutation of its points.
    pub fn image(&self, p: &Permutation) -> Result<TripleSystem, DesignError> {
        if p.degree() != self.v {
            return Err(DesignError::PermutationDegree {
                degree: p.degree(),
                v: self.v,
            });
        }
        validate_sts(self.v, self.blocks.iter().map(|t| t.map(p)).collect())
    }

    /// Whether `p` maps every block of `self` onto a block of `other`.
    pub fn maps_onto(&self, other: &TripleSystem, p: &Permutation) -> bool {
        self.v == other.v
            && p.degree() == self.v
            && self.blocks.iter().all(|t| other.contains_block(&t.map(p)))
    }

    /// Every block negated mod v.
    pub fn negate(&self) -> TripleSystem {
        let v = self.v;
        let neg = Permutation::from_fn(v, |x| (v - x) % v);
        self.image(&neg).expect("negation is a permutation")
    }
}

pub fn negate_sts(s: &TripleSystem) -> TripleSystem {
    s.negate()
}

pub fn are_orthogonal(s1: &TripleSystem, s2: &TripleSystem) -> Result<Orthogonality, DesignError> {
    if s1.v != s2.v {
        return Err(DesignError::PointSetMismatch(s1.v, s2.v));
    }
    let disjoint = s1.blocks.iter().all(|t| !s2.contains_block(t));
    let orthogonal = disjoint && quadruple_condition(s1, s2);
    Ok(Orthogonality {
        disjoint,
        orthogonal,
    })
}

/// For blocks `xyz`, `uvz` of `s1` and blocks `xya`, `uvb` of `s2`, require `a ≠ b`.
fn quadruple_condition(s1: &TripleSystem, s2: &TripleSystem) -> bool {
    (0..s1.v).all(|z| {
        let through: Vec<[usize; 2]> = s1
            .blocks_through(z)
            .map(|t| {
                let mut rest = t.0.iter().copied().filter(|&p| p != z);
                [rest.next().unwrap(), rest.next().unwrap()]
            })
            .collect();
        through.iter().enumerate().all(|(i, &[x, y])| {
            through[i + 1..]
                .iter()
                .all(|&[u, w]| s2.third_point(x, y) != s2.third_point(u, w))
        })
    })
}

fn check_search_order(s1: &TripleSystem, s2: &TripleSystem, max: usize) -> Result<(), DesignError> {
    if s1.v != s2.v {
        return Err(DesignError::PointSetMismatch(s1.v, s2.v));
    }
    if s1.v > max {
        return Err(DesignError::UnsupportedOrder(s1.v));
    }
    Ok(())
}

/// All block-preserving bijections from `s1` to `s2`, sorted by image list.
///
/// Backtracking over point images: once two points are mapped, the image of the
/// third point of their block is forced, and forced assignments propagate until
/// a fixpoint or a conflict.
pub fn isomorphisms(s1: &TripleSystem, s2: &TripleSystem) -> Result<Vec<Permutation>, DesignError> {
    check_search_order(s1, s2, MAX_SEARCH_ORDER)?;
    let v = s1.v;
    let mut out = Vec::new();
    let mut search = IsoSearch {
        s1,
        s2,
        map: vec![NONE; v],
        used: vec![false; v],
    };
    search.descend(&mut out);
    out.sort();
    Ok(out)
}

/// The same set as [`isomorphisms`], computed by testing all `v!` permutations.
pub fn isomorphisms_by_sweep(
    s1: &TripleSystem,
    s2: &TripleSystem,
) -> Result<Vec<Permutation>, DesignError> {
    check_search_order(s1, s2, MAX_SWEEP_ORDER)?;
    Ok(all_permutations(s1.v)
        .filter(|p| s1.maps_onto(s2, p))
        .collect())
}

struct IsoSearch<'a> {
    s1: &'a TripleSystem,
    s2: &'a TripleSystem,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn descend(&mut self, out: &mut Vec<Permutation>) {
        let Some(x) = self.map.iter().position(|&y| y == NONE) else {
            out.push(Permutation::new(self.map.clone()).expect("search keeps the map injective"));
            return;
        };
        for y in 0..self.s1.v {
            if self.used[y] {
                continue;
            }
            let (saved_map, saved_used) = (self.map.clone(), self.used.clone());
            if self.assign(x, y) {
                self.descend(out);
            }
            self.map = saved_map;
            self.used = saved_used;
        }
    }

    /// Assigns `x ↦ y` and propagates forced images. Returns false on conflict.
    fn assign(&mut self, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            if self.map[a] != NONE {
                if self.map[a] != b {
                    return false;
                }
                continue;
            }
            if self.used[b] {
                return false;
            }
            self.map[a] = b;
            self.used[b] = true;
            for w in 0..self.s1.v {
                let image = self.map[w];
                if w == a || image == NONE {
                    continue;
                }
                queue.push((self.s1.third_point(a, w), self.s2.third_point(b, image)));
            }
        }
        true
    }
}

pub fn automorphism_group(s: &TripleSystem) -> Result<PermGroup, DesignError> {
    Ok(PermGroup::from_trusted(s.v, isomorphisms(s, s)?))
}

/// Permutations preserving both block sets.
pub fn common_automorphism_group(
    s1: &TripleSystem,
    s2: &TripleSystem,
) -> Result<PermGroup, DesignError> {
    if s1.v != s2.v {
        return Err(DesignError::PointSetMismatch(s1.v, s2.v));
    }
    let elements = isomorphisms(s1, s1)?
        .into_iter()
        .filter(|p| s2.maps_onto(s2, p))
        .collect();
    Ok(PermGroup::from_trusted(s1.v, elements))
}

/// Every Fano plane on the points `0..7`, sorted.
///
/// Exact cover of the 21 pairs by triples, branching on the lowest uncovered pair.
pub fn all_fano_planes() -> Vec<TripleSystem> {
    fn cover(covered: &mut [[bool; 7]; 7], chosen: &mut Vec<Triple>, out: &mut Vec<TripleSystem>) {
        let next = (0..7)
            .flat_map(|a| (a + 1..7).map(move |b| (a, b)))
            .find(|&(a, b)| !covered[a][b]);
        let Some((a, b)) = next else {
            out.push(validate_sts(7, chosen.clone()).expect("exact cover of pairs is an STS"));
            return;
        };
        for c in 0..7 {
            if c == a || c == b || covered[a][c] || covered[b][c] {
                continue;
            }
            for (x, y) in [(a, b), (a, c), (b, c)] {
                covered[x][y] = true;
                covered[y][x] = true;
            }
            chosen.push(triple(a, b, c));
            cover(covered, chosen, out);
            chosen.pop();
            for (x, y) in [(a, b), (a, c), (b, c)] {
                covered[x][y] = false;
                covered[y][x] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut covered = [[false; 7]; 7];
    for (x, row) in covered.iter_mut().enumerate() {
        row[x] = true;
    }
    cover(&mut covered, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All Fano planes on the same points that share no block with `f`.
pub fn orthogonal_mates(f: &TripleSystem) -> Result<Vec<TripleSystem>, DesignError> {
    if !f.is_fano() {
        return Err(DesignError::NotFanoPlane(f.v));
    }
    Ok(all_fano_planes()
        .into_iter()
        .filter(|s| s.blocks.iter().all(|t| !f.contains_block(t)))
        .collect())
}

fn require_orthogonal_fano(f: &TripleSystem, s: &TripleSystem) -> Result<(), DesignError> {
    if !f.is_fano() {
        return Err(DesignError::NotFanoPlane(f.v));
    }
    if !are_orthogonal(f, s)?.orthogonal {
        return Err(DesignError::NotOrthogonal);
    }
    Ok(())
}

/// The unique block of `s` disjoint from `block`.
pub fn disjoint_block(
    f: &TripleSystem,
    s: &TripleSystem,
    block: &Triple,
) -> Result<Triple, DesignError> {
    require_orthogonal_fano(f, s)?;
    let mut hits = s.blocks.iter().filter(|t| t.is_disjoint(block));
    match (hits.next(), hits.next()) {
        (Some(t), None) => Ok(*t),
        _ => Err(DesignError::Internal(format!(
            "block {block} does not have exactly one disjoint block"
        ))),
    }
}

/// The unique `(T_F, T_S)` with `{p} ∪ T_F ∪ T_S` a partition of the seven points.
pub fn orthogonal_partition(
    f: &TripleSystem,
    s: &TripleSystem,
    p: usize,
) -> Result<(Triple, Triple), DesignError> {
    require_orthogonal_fano(f, s)?;
    if p >= 7 {
        return Err(DesignError::PointOutOfRange { point: p, v: 7 });
    }
    let mut found = f
        .blocks
        .iter()
        .filter(|tf| !tf.contains(p))
        .flat_map(|tf| {
            s.blocks
                .iter()
                .filter(move |ts| !ts.contains(p) && ts.is_disjoint(tf))
                .map(move |ts| (*tf, *ts))
        });
    match (found.next(), found.next()) {
        (Some(pair), None) => Ok(pair),
        _ => Err(DesignError::Internal(format!(
            "point {p} does not have exactly one partitioning block pair"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn b1() -> TripleSystem {
        cyclic_sts(7, &[triple(0, 1, 3)]).unwrap()
    }

    pub(crate) fn b2() -> TripleSystem {
        cyclic_sts(7, &[triple(0, 1, 5)]).unwrap()
    }

    fn sts13() -> TripleSystem {
        cyclic_sts(13, &[triple(1, 3, 9), triple(2, 5, 6)]).unwrap()
    }

    #[test]
    fn translates_of_013_are_valid() {
        let blocks = (0..7)
            .map(|i| triple(i, (i + 1) % 7, (i + 3) % 7))
            .collect();
        assert_eq!(validate_sts(7, blocks).unwrap(), b1());
    }

    #[test]
    fn forced_double_cover_reports_first_pair() {
        let mut blocks: Vec<Triple> = (0..7)
            .map(|i| triple(i, (i + 1) % 7, (i + 3) % 7))
            .collect();
        blocks[0] = triple(0, 1, 4);
        assert_eq!(
            validate_sts(7, blocks),
            Err(DesignError::PairCoveredTwice(1, 4))
        );
    }

    #[test]
    fn wrong_block_count() {
        let blocks = b1().blocks()[..6].to_vec();
        assert_eq!(
            validate_sts(7, blocks),
            Err(DesignError::BadBlockCount {
                expected: 7,
                found: 6
            })
        );
    }

    #[test]
    fn other_validation_errors() {
        assert_eq!(
            validate_sts(7, vec![triple(0, 1, 9)]),
            Err(DesignError::PointOutOfRange { point: 9, v: 7 })
        );
        assert_eq!(validate_sts(8, vec![]), Err(DesignError::InvalidOrder(8)));
        assert_eq!(
            Triple::new(1, 1, 2),
            Err(DesignError::DegenerateTriple([1, 1, 2]))
        );
    }

    #[test]
    fn cyclic_constructions() {
        let expected_b2 = [[0, 1, 5], [1, 2, 6], [0, 2, 3], [1, 3, 4], [2, 4, 5], [3, 5, 6], [0, 4, 6]];
        let blocks = expected_b2.iter().map(|&[a, b, c]| triple(a, b, c)).collect();
        assert_eq!(validate_sts(7, blocks).unwrap(), b2());
        assert_eq!(sts13().blocks().len(), 26);
    }

    #[test]
    fn orthogonality_examples() {
        let both = Orthogonality {
            disjoint: true,
            orthogonal: true,
        };
        let neither = Orthogonality {
            disjoint: false,
            orthogonal: false,
        };
        assert_eq!(are_orthogonal(&b1(), &b2()).unwrap(), both);
        assert_eq!(are_orthogonal(&b1(), &b1()).unwrap(), neither);
        assert_eq!(are_orthogonal(&sts13(), &sts13().negate()).unwrap(), both);
        assert_eq!(
            are_orthogonal(&b1(), &sts13()),
            Err(DesignError::PointSetMismatch(7, 13))
        );
    }

    #[test]
    fn negation() {
        let s = sts13();
        assert_eq!(s.negate().negate(), s);
        assert_eq!(b1().negate(), cyclic_sts(7, &[triple(0, 4, 6)]).unwrap());
    }

    #[test]
    fn fano_automorphisms() {
        let auts = isomorphisms(&b1(), &b1()).unwrap();
        assert_eq!(auts.len(), 168);
        let lambda2 = Permutation::from_fn(7, |x| 2 * x % 7);
        assert!(isomorphisms(&b2(), &b2()).unwrap().contains(&lambda2));
        assert!(!isomorphisms(&b1(), &b2()).unwrap().is_empty());
    }

    #[test]
    fn search_rejects_large_orders() {
        let s = sts13();
        assert_eq!(isomorphisms_by_sweep(&s, &s), Err(DesignError::UnsupportedOrder(13)));
        assert_eq!(isomorphisms(&b1(), &s), Err(DesignError::PointSetMismatch(7, 13)));
    }

    #[test]
    fn common_groups() {
        let g = common_automorphism_group(&b1(), &b2()).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        assert_eq!(g, PermGroup::affine(7, &[1, 2, 4]).unwrap());
        assert_eq!(common_automorphism_group(&b1(), &b1()).unwrap().order(), 168);
        let s = sts13();
        let g13 = common_automorphism_group(&s, &s.negate()).unwrap();
        assert_eq!(g13.order(), 39);
        assert_eq!(g13, automorphism_group(&s).unwrap());
    }

    #[test]
    fn thirty_fano_planes() {
        let planes = all_fano_planes();
        assert_eq!(planes.len(), 30);
        assert!(planes.contains(&b1()) && planes.contains(&b2()));
    }

    #[test]
    fn mates_of_b1() {
        let mates = orthogonal_mates(&b1()).unwrap();
        assert_eq!(mates.len(), 8);
        assert!(mates.contains(&b2()));
        let with_015_356 = mates
            .iter()
            .find(|m| m.contains_block(&triple(0, 1, 5)) && m.contains_block(&triple(3, 5, 6)))
            .unwrap();
        for t in [[2, 4, 5], [0, 4, 6], [0, 2, 3], [1, 2, 6], [1, 3, 4]] {
            assert!(with_015_356.contains_block(&triple(t[0], t[1], t[2])));
        }
        assert_eq!(
            orthogonal_mates(&sts13()),
            Err(DesignError::NotFanoPlane(13))
        );
    }

    #[test]
    fn partitions() {
        assert_eq!(
            orthogonal_partition(&b1(), &b2(), 0).unwrap(),
            (triple(1, 2, 4), triple(3, 5, 6))
        );
        assert_eq!(
            disjoint_block(&b1(), &b2(), &triple(0, 1, 3)).unwrap(),
            triple(2, 4, 5)
        );
        for p in 0..7 {
            let (tf, ts) = orthogonal_partition(&b1(), &b2(), p).unwrap();
            assert!(tf.is_disjoint(&ts) && !tf.contains(p) && !ts.contains(p));
        }
        assert_eq!(
            orthogonal_partition(&b1(), &b1(), 0),
            Err(DesignError::NotOrthogonal)
        );
    }

    #[test]
    fn design_json() {
        let json = serde_json::to_string(&b1()).unwrap();
        assert_eq!(
            json,
            r#"{"v":7,"blocks":[[0,1,3],[0,2,6],[0,4,5],[1,2,4],[1,5,6],[2,3,5],[3,4,6]]}"#
        );
        let shuffled = r#"{"v":7,"blocks":[[6,4,3],[0,1,3],[6,0,2],[1,2,4],[5,6,1],[2,3,5],[4,5,0]]}"#;
        assert_eq!(serde_json::from_str::<TripleSystem>(shuffled).unwrap(), b1());
        let bad = r#"{"v":7,"blocks":[[0,1,3]]}"#;
        assert!(serde_json::from_str::<TripleSystem>(bad).is_err());
    }
}
