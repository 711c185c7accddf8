//! Orientations of a Fano plane and Fano circuits.
//!
//! An orientation is a tournament on the seven points that runs cyclically
//! around every block and whose out-neighbourhood of each point is a block.
//! The in-neighbourhoods form the derived plane, an orthogonal mate; this gives
//! a bijection between the eight orientations and the eight mates.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{all_permutations, PermGroup};
use crate::perm::Permutation;
use crate::steiner::{
    automorphism_group, cyclic_sts, orthogonal_partition, triple, validate_sts, DesignError, Triple,
    TripleSystem,
};

const N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientError {
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error("point {0} out of range 0..7")]
    PointOutOfRange(usize),
    #[error("arc ({0}, {0}) is a loop")]
    SelfLoop(usize),
    #[error("pair {{{0}, {1}}} is not oriented exactly once")]
    NotTournament(usize, usize),
    #[error("block {0} is not oriented cyclically")]
    BlockNotCyclic(Triple),
    #[error("out-neighbours of {0} do not form a block")]
    OutNeighborsNotBlock(usize),
    #[error("permutation {0} is not an automorphism of the plane")]
    NotAutomorphism(Permutation),
    #[error("circuit must list 7 points, got {0}")]
    WrongLength(usize),
    #[error("point {0} repeated in circuit")]
    RepeatedPoint(usize),
    #[error("block {0} not covered by consecutive circuit points")]
    BlockNotCovered(Triple),
}

/// A tournament on `0..7`, stored as out-neighbour bitmasks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OrientationJson", into = "OrientationJson")]
pub struct Orientation {
    out: [u8; N],
}

#[derive(Serialize, Deserialize)]
struct OrientationJson {
    points: usize,
    arcs: Vec<[usize; 2]>,
}

impl TryFrom<OrientationJson> for Orientation {
    type Error = OrientError;

    fn try_from(json: OrientationJson) -> Result<Self, Self::Error> {
        if json.points != N {
            return Err(OrientError::PointOutOfRange(json.points));
        }
        Orientation::from_arcs(json.arcs.into_iter().map(|[x, y]| (x, y)))
    }
}

impl From<Orientation> for OrientationJson {
    fn from(o: Orientation) -> Self {
        OrientationJson {
            points: N,
            arcs: o.arcs().into_iter().map(|(x, y)| [x, y]).collect(),
        }
    }
}

impl Orientation {
    /// Builds a tournament from arcs `(x, y)` meaning `x → y`.
    pub fn from_arcs(arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, OrientError> {
        let mut out = [0u8; N];
        for (x, y) in arcs {
            if x >= N || y >= N {
                return Err(OrientError::PointOutOfRange(x.max(y)));
            }
            if x == y {
                return Err(OrientError::SelfLoop(x));
            }
            out[x] |= 1 << y;
        }
        for x in 0..N {
            for y in x + 1..N {
                let forward = out[x] >> y & 1 == 1;
                let backward = out[y] >> x & 1 == 1;
                if forward == backward {
                    return Err(OrientError::NotTournament(x, y));
                }
            }
        }
        Ok(Orientation { out })
    }

    /// `x → y` iff `beats(x, y)`, for every pair `x < y` decided by the closure.
    pub fn from_relation(beats: impl Fn(usize, usize) -> bool) -> Self {
        let mut out = [0u8; N];
        for x in 0..N {
            for y in x + 1..N {
                if beats(x, y) {
                    out[x] |= 1 << y;
                } else {
                    out[y] |= 1 << x;
                }
            }
        }
        Orientation { out }
    }

    #[inline]
    pub fn beats(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }

    pub fn out_neighbors(&self, x: usize) -> Vec<usize> {
        (0..N).filter(|&y| self.beats(x, y)).collect()
    }

    pub fn in_neighbors(&self, x: usize) -> Vec<usize> {
        (0..N).filter(|&y| self.beats(y, x)).collect()
    }

    /// All arcs, sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..N)
            .flat_map(|x| (0..N).map(move |y| (x, y)))
            .filter(|&(x, y)| self.beats(x, y))
            .collect()
    }

    pub fn reversed(&self) -> Orientation {
        Orientation::from_relation(|x, y| self.beats(y, x))
    }

    /// `σ(x) → σ(y)` iff `x → y`.
    pub fn relabel(&self, sigma: &Permutation) -> Orientation {
        let inv = sigma.inverse();
        Orientation::from_relation(|x, y| self.beats(inv.apply(x), inv.apply(y)))
    }

    /// Whether the arcs run around the block as a directed 3-cycle.
    pub fn is_cyclic_on(&self, t: &Triple) -> bool {
        let [a, b, c] = t.points();
        self.beats(a, b) == self.beats(b, c) && self.beats(b, c) == self.beats(c, a)
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation{:?}", self.arcs())
    }
}

/// A Fano plane together with an orientation on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrientedFano {
    plane: TripleSystem,
    orientation: Orientation,
}

impl OrientedFano {
    pub fn plane(&self) -> &TripleSystem {
        &self.plane
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }
}

fn require_fano(f: &TripleSystem) -> Result<(), OrientError> {
    if f.is_fano() {
        Ok(())
    } else {
        Err(DesignError::NotFanoPlane(f.v()).into())
    }
}

fn check_orientation(f: &TripleSystem, o: &Orientation) -> Result<(), OrientError> {
    if let Some(t) = f.blocks().iter().find(|t| !o.is_cyclic_on(t)) {
        return Err(OrientError::BlockNotCyclic(*t));
    }
    for x in 0..N {
        let outs = o.out_neighbors(x);
        let closed = outs.len() == 3 && f.contains_block(&triple(outs[0], outs[1], outs[2]));
        if !closed {
            return Err(OrientError::OutNeighborsNotBlock(x));
        }
    }
    Ok(())
}

pub fn validate_orientation(
    f: &TripleSystem,
    arcs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<OrientedFano, OrientError> {
    require_fano(f)?;
    orient(f, Orientation::from_arcs(arcs)?)
}

/// Checks both orientation axioms for an already-built tournament.
pub fn orient(f: &TripleSystem, orientation: Orientation) -> Result<OrientedFano, OrientError> {
    require_fano(f)?;
    check_orientation(f, &orientation)?;
    Ok(OrientedFano {
        plane: f.clone(),
        orientation,
    })
}

/// The plane generated by `{0,1,3}` mod 7, with `x → y` iff `y − x ∈ {1, 2, 4}`.
pub fn qr_orientation() -> OrientedFano {
    let plane = cyclic_sts(N, &[triple(0, 1, 3)]).expect("013 generates a Fano plane");
    let o = Orientation::from_relation(|x, y| matches!((y + N - x) % N, 1 | 2 | 4));
    orient(&plane, o).expect("quadratic residues orient the cyclic plane")
}

/// Blocks `T(v)` made of the three in-neighbours of each point.
pub fn derived_plane(o: &OrientedFano) -> TripleSystem {
    let blocks = (0..N)
        .map(|v| {
            let ins = o.orientation.in_neighbors(v);
            triple(ins[0], ins[1], ins[2])
        })
        .collect();
    validate_sts(N, blocks).expect("in-neighbour triples of an orientation form a Fano plane")
}

/// The orientation whose derived plane is `s`: each point beats the `F`-block
/// and is beaten by the `S`-block of its partition.
pub fn orientation_from_mate(f: &TripleSystem, s: &TripleSystem) -> Result<OrientedFano, OrientError> {
    require_fano(f)?;
    let mut arcs = Vec::with_capacity(42);
    for v in 0..N {
        let (tf, ts) = orthogonal_partition(f, s, v)?;
        arcs.extend(tf.points().map(|x| (v, x)));
        arcs.extend(ts.points().map(|x| (x, v)));
    }
    arcs.sort_unstable();
    arcs.dedup();
    validate_orientation(f, arcs)
}

/// All orientations of `f`, found by testing every cyclic direction choice per block.
pub fn all_orientations(f: &TripleSystem) -> Result<Vec<OrientedFano>, OrientError> {
    require_fano(f)?;
    let mut out: Vec<OrientedFano> = (0u32..1 << 7)
        .filter_map(|signs| {
            let o = orientation_from_block_signs(f, signs);
            orient(f, o).ok()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Bit `i` of `signs` picks the direction on block `i`: clear gives `a→b→c→a`,
/// set gives `a→c→b→a`, with `a < b < c`.
fn orientation_from_block_signs(f: &TripleSystem, signs: u32) -> Orientation {
    let mut arcs = Vec::with_capacity(21);
    for (i, t) in f.blocks().iter().enumerate() {
        let [a, b, c] = t.points();
        let cycle = if signs >> i & 1 == 0 { [a, b, c] } else { [a, c, b] };
        for k in 0..3 {
            arcs.push((cycle[k], cycle[(k + 1) % 3]));
        }
    }
    Orientation::from_arcs(arcs).expect("one 3-cycle per block gives a tournament")
}

/// The oriented plane `(σ(F), σ(→))` for an automorphism `σ` of `F`.
pub fn map_orientation(sigma: &Permutation, o: &OrientedFano) -> Result<OrientedFano, OrientError> {
    if !o.plane.maps_onto(&o.plane, sigma) {
        return Err(OrientError::NotAutomorphism(sigma.clone()));
    }
    Ok(orient(&o.plane, o.orientation.relabel(sigma)).expect("automorphisms carry orientations"))
}

pub fn oriented_automorphism_group(o: &OrientedFano) -> PermGroup {
    let auts = automorphism_group(&o.plane).expect("Fano planes are searchable");
    let keep = auts
        .iter()
        .filter(|s| o.orientation.relabel(s) == o.orientation)
        .cloned()
        .collect();
    PermGroup::from_trusted(N, keep)
}

/// The reversed arcs, which orient the derived plane rather than the original one.
pub fn reverse(o: &OrientedFano) -> OrientedFano {
    orient(&derived_plane(o), o.orientation.reversed())
        .expect("reversed orientation orients the derived plane")
}

/// A cyclic ordering of the seven points whose consecutive pairs meet every block once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FanoCircuit {
    points: [usize; N],
}

impl FanoCircuit {
    pub fn points(&self) -> [usize; N] {
        self.points
    }

    /// The backward circuit `(x7, x6, .., x1)`.
    pub fn backward(&self) -> FanoCircuit {
        let mut points = self.points;
        points.reverse();
        FanoCircuit { points }
    }

    /// Rotated to start at 0, then the smaller of the sequence and its reversal.
    pub fn canonical(&self) -> FanoCircuit {
        let rotate = |p: [usize; N]| {
            let start = p.iter().position(|&x| x == 0).expect("circuits contain 0");
            let mut r = p;
            r.rotate_left(start);
            r
        };
        let forward = rotate(self.points);
        let mut back = self.points;
        back.reverse();
        let back = rotate(back);
        FanoCircuit {
            points: forward.min(back),
        }
    }
}

impl fmt::Display for FanoCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.points;
        write!(f, "({}, {}, {}, {}, {}, {}, {})", p[0], p[1], p[2], p[3], p[4], p[5], p[6])
    }
}

pub fn validate_circuit(f: &TripleSystem, seq: &[usize]) -> Result<FanoCircuit, OrientError> {
    require_fano(f)?;
    if seq.len() != N {
        return Err(OrientError::WrongLength(seq.len()));
    }
    let mut seen = [false; N];
    for &x in seq {
        if x >= N {
            return Err(OrientError::PointOutOfRange(x));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(OrientError::RepeatedPoint(x));
        }
    }
    let hit: Vec<Triple> = (0..N)
        .map(|i| f.block_through(seq[i], seq[(i + 1) % N]))
        .collect();
    if let Some(t) = f.blocks().iter().find(|t| !hit.contains(t)) {
        return Err(OrientError::BlockNotCovered(*t));
    }
    let mut points = [0; N];
    points.copy_from_slice(seq);
    Ok(FanoCircuit { points })
}

/// Relation with `x_i → x_{i+1}`, extended cyclically over the block through them.
fn circuit_relation(f: &TripleSystem, c: &FanoCircuit) -> Orientation {
    let p = c.points;
    let mut arcs = Vec::with_capacity(21);
    for i in 0..N {
        let (x, y) = (p[i], p[(i + 1) % N]);
        let z = f.third_point(x, y);
        arcs.extend([(x, y), (y, z), (z, x)]);
    }
    Orientation::from_arcs(arcs).expect("a Fano circuit meets each block in one pair")
}

/// The orientation induced by `c`, or by its backward circuit when the forward
/// relation is not an orientation of `f`.
pub fn circuit_to_orientation(f: &TripleSystem, c: &FanoCircuit) -> Result<OrientedFano, OrientError> {
    let c = validate_circuit(f, &c.points)?;
    match orient(f, circuit_relation(f, &c)) {
        Ok(o) => Ok(o),
        Err(OrientError::OutNeighborsNotBlock(_)) => orient(f, circuit_relation(f, &c.backward())),
        Err(e) => Err(e),
    }
}

/// The three circuits from point 0 inducing `o`, one for each out-neighbour of 0.
///
/// Each next point is the unique out-neighbour of the current point that does
/// not close a block of the plane or of the derived plane with the previous one.
pub fn circuits_of_orientation(o: &OrientedFano) -> Vec<FanoCircuit> {
    let derived = derived_plane(o);
    let arcs = &o.orientation;
    arcs.out_neighbors(0)
        .into_iter()
        .map(|second| {
            let mut seq = vec![0, second];
            while seq.len() < N {
                let (prev, cur) = (seq[seq.len() - 2], seq[seq.len() - 1]);
                let candidates: Vec<usize> = arcs
                    .out_neighbors(cur)
                    .into_iter()
                    .filter(|&x| {
                        let t = triple(prev, cur, x);
                        !o.plane.contains_block(&t) && !derived.contains_block(&t)
                    })
                    .collect();
                assert_eq!(candidates.len(), 1, "successor step must be unique");
                seq.push(candidates[0]);
            }
            validate_circuit(&o.plane, &seq).expect("successor walk yields a Fano circuit")
        })
        .collect()
}

/// All Fano circuits of `f`, each identified with its backward circuit.
pub fn all_circuits(f: &TripleSystem) -> Result<Vec<FanoCircuit>, OrientError> {
    let mut out: Vec<FanoCircuit> = anchored_circuits(f)?
        .into_iter()
        .map(|c| c.canonical())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every circuit starting at point 0, without identifying reversals.
pub fn anchored_circuits(f: &TripleSystem) -> Result<Vec<FanoCircuit>, OrientError> {
    require_fano(f)?;
    Ok(all_permutations(N - 1)
        .filter_map(|p| {
            let seq: Vec<usize> = std::iter::once(0)
                .chain(p.images().iter().map(|&x| x + 1))
                .collect();
            validate_circuit(f, &seq).ok()
        })
        .collect())
}
