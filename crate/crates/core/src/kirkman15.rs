//! The Steiner triple system STS(15) #61 and its Kirkman resolution.
//!
//! Points are encoded as integers: `i ↦ i`, `i' ↦ i + 7`, `∞ ↦ 14`. The
//! finite points `P = {0..6}` carry the unique Fano subplane; the primed points
//! and `∞` form its complement.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{all_permutations, GroupError, PermGroup};
use crate::perm::Permutation;
use crate::steiner::{automorphism_group, validate_sts, DesignError, Triple, TripleSystem};

pub const POINTS: usize = 15;
pub const INFINITY: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KirkmanError {
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("expected a system on 15 points, found {0}")]
    WrongOrder(usize),
    #[error("{0} points cannot be split into parallel classes")]
    NotDivisibleBy3(usize),
    #[error("expected a unique Fano subplane, found {0}")]
    NoUniqueFanoSubplane(usize),
    #[error("pair {0},{1} outside the subplane meets it in no block")]
    NotShadowShape(usize, usize),
    #[error("{0} does not fix infinity and stabilise the finite points")]
    NotStabilizing(Permutation),
    #[error("restriction to the finite points is not injective")]
    RestrictionNotInjective,
    #[error("class {0} is not a parallel class")]
    ClassNotParallel(usize),
    #[error("block {0} is not covered exactly once by the classes")]
    BlocksNotPartitioned(Triple),
    #[error("block index {0} out of range")]
    BadBlockIndex(usize),
    #[error("bad point {0:?}")]
    BadPoint(String),
}

/// A point of STS(15) #61.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedPoint {
    Finite(usize),
    Primed(usize),
    Infinity,
}

impl ExtendedPoint {
    pub fn encode(self) -> usize {
        match self {
            ExtendedPoint::Finite(i) => i,
            ExtendedPoint::Primed(i) => i + 7,
            ExtendedPoint::Infinity => INFINITY,
        }
    }

    pub fn decode(x: usize) -> Option<ExtendedPoint> {
        match x {
            0..=6 => Some(ExtendedPoint::Finite(x)),
            7..=13 => Some(ExtendedPoint::Primed(x - 7)),
            INFINITY => Some(ExtendedPoint::Infinity),
            _ => None,
        }
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedPoint::Finite(i) => write!(f, "{i}"),
            ExtendedPoint::Primed(i) => write!(f, "{i}'"),
            ExtendedPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedPoint {
    type Err = KirkmanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || KirkmanError::BadPoint(s.to_string());
        if s == "inf" || s == "∞" {
            return Ok(ExtendedPoint::Infinity);
        }
        let (digits, primed) = match s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        match (i < 7, primed) {
            (true, false) => Ok(ExtendedPoint::Finite(i)),
            (true, true) => Ok(ExtendedPoint::Primed(i)),
            _ => Err(bad()),
        }
    }
}

/// Encoded point rendered as `3`, `3'` or `inf`.
pub fn point_label(x: usize) -> String {
    ExtendedPoint::decode(x).map_or_else(|| x.to_string(), |p| p.to_string())
}

/// Triple rendered with primed labels, e.g. `{0,0',inf}`.
pub fn triple_label(t: &Triple) -> String {
    format!("{{{}}}", t.points().iter().map(|&x| point_label(x)).join(","))
}

/// `n ↦ n + 1`, `n' ↦ (n + 1)'`, `∞ ↦ ∞`.
pub fn translation() -> Permutation {
    lift(&Permutation::from_fn(7, |x| (x + 1) % 7))
}

/// Extends a permutation of `P` to all 15 points by `σ(n') = σ(n)'`, `σ(∞) = ∞`.
pub fn lift(sigma: &Permutation) -> Permutation {
    assert_eq!(sigma.degree(), 7, "lift expects a permutation of 7 points");
    Permutation::from_fn(POINTS, |x| match x {
        0..=6 => sigma.apply(x),
        7..=13 => sigma.apply(x - 7) + 7,
        _ => INFINITY,
    })
}

fn encoded(a: ExtendedPoint, b: ExtendedPoint, c: ExtendedPoint) -> Triple {
    Triple::new(a.encode(), b.encode(), c.encode()).expect("distinct points")
}

/// STS(15) #61, generated mod 7 from the base blocks `00'∞`, `013`, `01'6'`,
/// `02'5'`, `03'4'`.
pub fn sts15_61() -> TripleSystem {
    use ExtendedPoint::{Finite as F, Infinity as Inf, Primed as Pr};
    let base = [
        encoded(F(0), Pr(0), Inf),
        encoded(F(0), F(1), F(3)),
        encoded(F(0), Pr(1), Pr(6)),
        encoded(F(0), Pr(2), Pr(5)),
        encoded(F(0), Pr(3), Pr(4)),
    ];
    let blocks = translates(&base).flatten().collect();
    validate_sts(POINTS, blocks).expect("the base blocks develop into an STS(15)")
}

/// The seven translates of a family of triples, in translation order.
fn translates(base: &[Triple]) -> impl Iterator<Item = Vec<Triple>> + '_ {
    let shift = translation();
    (0..7).scan(base.to_vec(), move |current, _| {
        let out = current.clone();
        *current = current.iter().map(|t| t.map(&shift)).collect();
        Some(out)
    })
}

/// Every 7-point subset whose induced blocks form a Fano plane. Each plane is
/// relabelled onto `0..7` by the order of its (sorted) point set.
pub fn fano_subplanes(s: &TripleSystem) -> Result<Vec<(Vec<usize>, TripleSystem)>, KirkmanError> {
    if s.v() != POINTS {
        return Err(KirkmanError::WrongOrder(s.v()));
    }
    let mut out = Vec::new();
    for subset in (0..POINTS).combinations(7) {
        let mut index = [usize::MAX; POINTS];
        for (i, &x) in subset.iter().enumerate() {
            index[x] = i;
        }
        let induced: Vec<Triple> = s
            .blocks()
            .iter()
            .filter(|t| t.points().iter().all(|&x| index[x] != usize::MAX))
            .map(|t| {
                let [a, b, c] = t.points();
                Triple::new(index[a], index[b], index[c]).expect("distinct points")
            })
            .collect();
        if induced.len() == 7 {
            if let Ok(plane) = validate_sts(7, induced) {
                out.push((subset, plane));
            }
        }
    }
    Ok(out)
}

/// For each 3-subset `{x,y,z}` outside the Fano subplane `P`, the triple
/// `{a,b,c} ⊂ P` with `axy`, `bxz`, `cyz` blocks; plus the inverse multimap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shadow {
    pub subplane: Vec<usize>,
    pub forward: BTreeMap<Triple, Triple>,
    pub preimages: BTreeMap<Triple, Vec<Triple>>,
}

pub fn outside_shadow(s: &TripleSystem) -> Result<Shadow, KirkmanError> {
    let subplanes = fano_subplanes(s)?;
    let [(subplane, _)] = subplanes.as_slice() else {
        return Err(KirkmanError::NoUniqueFanoSubplane(subplanes.len()));
    };
    let inside: BTreeSet<usize> = subplane.iter().copied().collect();
    let outside: Vec<usize> = (0..POINTS).filter(|x| !inside.contains(x)).collect();
    let apex = |x: usize, y: usize| {
        let w = s.third_point(x, y);
        if inside.contains(&w) {
            Ok(w)
        } else {
            Err(KirkmanError::NotShadowShape(x, y))
        }
    };
    let mut forward = BTreeMap::new();
    let mut preimages: BTreeMap<Triple, Vec<Triple>> = BTreeMap::new();
    for xyz in outside.iter().combinations(3) {
        let (x, y, z) = (*xyz[0], *xyz[1], *xyz[2]);
        let image = Triple::new(apex(x, y)?, apex(x, z)?, apex(y, z)?)?;
        let source = Triple::new(x, y, z)?;
        forward.insert(source, image);
        preimages.entry(image).or_default().push(source);
    }
    Ok(Shadow {
        subplane: subplane.clone(),
        forward,
        preimages,
    })
}

/// All parallel classes, each sorted, found by exact cover branching on the
/// lowest uncovered point.
pub fn parallel_classes(s: &TripleSystem) -> Result<Vec<Vec<Triple>>, KirkmanError> {
    if !s.v().is_multiple_of(3) {
        return Err(KirkmanError::NotDivisibleBy3(s.v()));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cover(s, &mut vec![false; s.v()], &mut chosen, &mut out);
    Ok(out)
}

fn cover(s: &TripleSystem, covered: &mut Vec<bool>, chosen: &mut Vec<Triple>, out: &mut Vec<Vec<Triple>>) {
    let Some(x) = covered.iter().position(|&c| !c) else {
        let mut class = chosen.clone();
        class.sort();
        out.push(class);
        return;
    };
    let candidates: Vec<Triple> = s
        .blocks_through(x)
        .filter(|t| t.points().iter().all(|&p| !covered[p]))
        .copied()
        .collect();
    for t in candidates {
        for p in t.points() {
            covered[p] = true;
        }
        chosen.push(t);
        cover(s, covered, chosen, out);
        chosen.pop();
        for p in t.points() {
            covered[p] = false;
        }
    }
}

/// An STS together with a partition of its blocks into parallel classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    sts: TripleSystem,
    classes: Vec<Vec<Triple>>,
}

/// Checks that every class partitions the points and the classes partition the
/// blocks. Each class is sorted; class order is kept.
pub fn validate_resolution(sts: TripleSystem, classes: Vec<Vec<Triple>>) -> Result<Resolution, KirkmanError> {
    if !sts.v().is_multiple_of(3) {
        return Err(KirkmanError::NotDivisibleBy3(sts.v()));
    }
    let mut seen: BTreeMap<Triple, usize> = BTreeMap::new();
    let mut classes = classes;
    for (i, class) in classes.iter_mut().enumerate() {
        class.sort();
        let mut hit = vec![false; sts.v()];
        for t in class.iter() {
            for p in t.points() {
                if p >= sts.v() || std::mem::replace(&mut hit[p], true) {
                    return Err(KirkmanError::ClassNotParallel(i));
                }
            }
            if !sts.contains_block(t) {
                return Err(KirkmanError::BlocksNotPartitioned(*t));
            }
            *seen.entry(*t).or_default() += 1;
        }
        if hit.contains(&false) {
            return Err(KirkmanError::ClassNotParallel(i));
        }
    }
    if let Some(t) = sts.blocks().iter().find(|t| seen.get(t) != Some(&1)) {
        return Err(KirkmanError::BlocksNotPartitioned(*t));
    }
    Ok(Resolution { sts, classes })
}

impl Resolution {
    pub fn sts(&self) -> &TripleSystem {
        &self.sts
    }

    pub fn classes(&self) -> &[Vec<Triple>] {
        &self.classes
    }

    /// Index of the class equal to `class` as a block set.
    pub fn class_index(&self, class: &[Triple]) -> Option<usize> {
        let mut sorted = class.to_vec();
        sorted.sort();
        self.classes.iter().position(|c| *c == sorted)
    }

    /// The permutation of class indices induced by a point permutation, if any.
    pub fn class_permutation(&self, g: &Permutation) -> Option<Permutation> {
        let images = self
            .classes
            .iter()
            .map(|c| self.class_index(&c.iter().map(|t| t.map(g)).collect::<Vec<_>>()))
            .collect::<Option<Vec<_>>>()?;
        Permutation::new(images).ok()
    }
}

/// The seven translates of the base class `{00'∞, 124, 31'5', 54'6', 62'3'}`.
pub fn resolution_61() -> Resolution {
    use ExtendedPoint::{Finite as F, Infinity as Inf, Primed as Pr};
    let base = [
        encoded(F(0), Pr(0), Inf),
        encoded(F(1), F(2), F(4)),
        encoded(F(3), Pr(1), Pr(5)),
        encoded(F(5), Pr(4), Pr(6)),
        encoded(F(6), Pr(2), Pr(3)),
    ];
    validate_resolution(sts15_61(), translates(&base).collect()).expect("translates of the base class resolve #61")
}

#[derive(Serialize, Deserialize)]
struct ResolutionJson {
    v: usize,
    blocks: Vec<Triple>,
    classes: Vec<Vec<usize>>,
}

impl Serialize for Resolution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let blocks = self.sts.blocks().to_vec();
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().map(|t| blocks.binary_search(t).expect("class blocks belong to the STS")).collect())
            .collect();
        ResolutionJson {
            v: self.sts.v(),
            blocks,
            classes,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Resolution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let json = ResolutionJson::deserialize(deserializer)?;
        let classes = json
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| json.blocks.get(i).copied().ok_or(KirkmanError::BadBlockIndex(i)))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        let sts = validate_sts(json.v, json.blocks).map_err(D::Error::custom)?;
        validate_resolution(sts, classes).map_err(D::Error::custom)
    }
}

/// Full automorphism group of a 15-point STS by generic incidence backtracking.
pub fn sts_automorphism_group15(s: &TripleSystem) -> Result<PermGroup, KirkmanError> {
    if s.v() != POINTS {
        return Err(KirkmanError::WrongOrder(s.v()));
    }
    Ok(automorphism_group(s)?)
}

/// Automorphisms of the form `lift(σ)`, found by sweeping all 5040 `σ`.
/// Agrees with [`sts_automorphism_group15`] exactly when every automorphism
/// fixes `∞` and satisfies `σ(n') = σ(n)'`.
pub fn lifted_automorphism_group(s: &TripleSystem) -> Result<PermGroup, KirkmanError> {
    if s.v() != POINTS {
        return Err(KirkmanError::WrongOrder(s.v()));
    }
    let elements = all_permutations(7).map(|p| lift(&p)).filter(|g| s.maps_onto(s, g)).collect();
    Ok(PermGroup::from_elements(POINTS, elements)?)
}

/// Restricts a group fixing `∞` and stabilising `{0..6}` to those 7 points.
pub fn restriction_to_p(g: &PermGroup) -> Result<PermGroup, KirkmanError> {
    if g.degree() != POINTS {
        return Err(KirkmanError::WrongOrder(g.degree()));
    }
    let mut restricted = BTreeSet::new();
    for sigma in g {
        if sigma.apply(INFINITY) != INFINITY || (0..7).any(|x| sigma.apply(x) >= 7) {
            return Err(KirkmanError::NotStabilizing(sigma.clone()));
        }
        restricted.insert(Permutation::from_fn(7, |x| sigma.apply(x)));
    }
    if restricted.len() != g.order() {
        return Err(KirkmanError::RestrictionNotInjective);
    }
    Ok(PermGroup::from_elements(7, restricted.into_iter().collect())?)
}

/// STS automorphisms mapping every parallel class of `r` onto a class.
pub fn kts_automorphism_group(r: &Resolution) -> Result<PermGroup, KirkmanError> {
    let elements = automorphism_group(&r.sts)?
        .iter()
        .filter(|g| r.class_permutation(g).is_some())
        .cloned()
        .collect();
    Ok(PermGroup::from_elements(r.sts.v(), elements)?)
}
