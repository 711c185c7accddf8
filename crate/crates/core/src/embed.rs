//! Rotation systems of the complete graph `K_n` and their faces.
//!
//! A rotation assigns every vertex `x` a cyclic order `ρ_x` of its neighbours.
//! Faces are the orbits of the successor map `(a, b) ↦ (b, ρ_b(a))` on oriented
//! edges. Isomorphism searches sweep all `n!` vertex permutations, which is
//! instant for `n = 7`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{all_permutations, PermGroup};
use crate::perm::{parse_cycle_list, Permutation};
use crate::steiner::{validate_sts, DesignError, TripleSystem};

/// Largest vertex count accepted by the permutation sweeps.
pub const MAX_SWEEP_VERTICES: usize = 8;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("K_{0} is too small for a rotation system")]
    TooSmall(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("no rotation given for vertex {0}")]
    MissingVertex(usize),
    #[error("rotation at {0} lists invalid neighbour {1}")]
    InvalidNeighbor(usize, usize),
    #[error("rotation at {0} lists neighbour {1} twice")]
    RepeatedNeighbor(usize, usize),
    #[error("rotation at {0} omits neighbour {1}")]
    MissingNeighbor(usize, usize),
    #[error("rotation at {0} is not a single cycle")]
    NotSingleCycle(usize),
    #[error("malformed cycle notation at vertex {0}: {1}")]
    Parse(usize, String),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("isomorphism sweep not supported for {0} vertices")]
    UnsupportedOrder(usize),
    #[error("faces are not 2-colourable")]
    NotTwoColorable,
    #[error("rotation system is not triangular")]
    NotTriangular,
    #[error("no isomorphism to the classical embedding")]
    NoIsomorphism,
    #[error(transparent)]
    Design(#[from] DesignError),
}

/// A rotation system of `K_n`; `succ[x * n + y] = ρ_x(y)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationSystem {
    n: usize,
    succ: Vec<usize>,
}

/// Validates per-vertex cycle lists. Vertex `x` must map to exactly one cycle
/// through all other vertices.
pub fn validate_rotation(
    n: usize,
    rotation: &BTreeMap<usize, Vec<Vec<usize>>>,
) -> Result<RotationSystem, EmbedError> {
    if n < 3 {
        return Err(EmbedError::TooSmall(n));
    }
    if let Some(&x) = rotation.keys().find(|&&x| x >= n) {
        return Err(EmbedError::VertexOutOfRange(x));
    }
    let mut succ = vec![NONE; n * n];
    for x in 0..n {
        let cycles = rotation.get(&x).ok_or(EmbedError::MissingVertex(x))?;
        let mut seen = vec![false; n];
        for &y in cycles.iter().flatten() {
            if y >= n || y == x {
                return Err(EmbedError::InvalidNeighbor(x, y));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(EmbedError::RepeatedNeighbor(x, y));
            }
        }
        if let Some(y) = (0..n).find(|&y| y != x && !seen[y]) {
            return Err(EmbedError::MissingNeighbor(x, y));
        }
        let nontrivial: Vec<&Vec<usize>> = cycles.iter().filter(|c| !c.is_empty()).collect();
        if nontrivial.len() != 1 {
            return Err(EmbedError::NotSingleCycle(x));
        }
        let cycle = nontrivial[0];
        for (i, &y) in cycle.iter().enumerate() {
            succ[x * n + y] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(RotationSystem { n, succ })
}

impl RotationSystem {
    /// One cycle per vertex, indexed by vertex.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<RotationSystem, EmbedError> {
        let map = cycles
            .iter()
            .enumerate()
            .map(|(x, c)| (x, vec![c.clone()]))
            .collect();
        validate_rotation(cycles.len(), &map)
    }

    /// Builds `ρ_x(y) = rho(x, y)`; fails if any `ρ_x` is not a full cycle.
    pub fn from_fn(n: usize, rho: impl Fn(usize, usize) -> usize) -> Result<RotationSystem, EmbedError> {
        let cycles: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let start = if x == 0 { 1 } else { 0 };
                let mut cycle = vec![start];
                let mut y = rho(x, start);
                while y != start && cycle.len() < n {
                    cycle.push(y);
                    y = rho(x, y);
                }
                cycle
            })
            .collect();
        RotationSystem::from_cycles(&cycles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `ρ_x(y)`.
    #[inline]
    pub fn rho(&self, x: usize, y: usize) -> usize {
        self.succ[x * self.n + y]
    }

    /// `ρ_x^{-1}(y)`.
    pub fn rho_inv(&self, x: usize, y: usize) -> usize {
        (0..self.n)
            .find(|&w| w != x && self.rho(x, w) == y)
            .expect("ρ_x is a bijection of the neighbours")
    }

    /// `ρ_x` as a cycle starting at the smallest neighbour of `x`.
    pub fn cycle(&self, x: usize) -> Vec<usize> {
        let start = if x == 0 { 1 } else { 0 };
        let mut cycle = vec![start];
        let mut y = self.rho(x, start);
        while y != start {
            cycle.push(y);
            y = self.rho(x, y);
        }
        cycle
    }

    /// `σρσ⁻¹`: the rotation with `ρ'_{σx}(σy) = σ(ρ_x(y))`.
    pub fn relabel(&self, sigma: &Permutation) -> RotationSystem {
        let n = self.n;
        let mut succ = vec![NONE; n * n];
        for x in 0..n {
            for y in (0..n).filter(|&y| y != x) {
                succ[sigma.apply(x) * n + sigma.apply(y)] = sigma.apply(self.rho(x, y));
            }
        }
        RotationSystem { n, succ }
    }

    /// Oriented edges `(x, y)`, `x ≠ y`, in lexicographic order.
    fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
    }
}

impl fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RotationSystem{")?;
        for x in 0..self.n {
            write!(f, " {x}:{:?}", self.cycle(x))?;
        }
        f.write_str(" }")
    }
}

/// Wire format: `{"n": 7, "rotation": {"0": [1,5,4,6,2,3], ...}}`. Inputs may
/// also give a vertex's rotation in cycle notation, e.g. `"(1 5 4)(6 2 3)"`.
#[derive(Serialize, Deserialize)]
struct RotationJson {
    n: usize,
    rotation: BTreeMap<String, CycleSpec>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CycleSpec {
    List(Vec<usize>),
    Notation(String),
}

impl Serialize for RotationSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rotation = (0..self.n)
            .map(|x| (x.to_string(), CycleSpec::List(self.cycle(x))))
            .collect();
        RotationJson {
            n: self.n,
            rotation,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RotationSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let json = RotationJson::deserialize(deserializer)?;
        let mut map = BTreeMap::new();
        for (key, spec) in json.rotation {
            let x: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("vertex key {key:?} is not an integer")))?;
            let cycles = match spec {
                CycleSpec::List(list) => vec![list],
                CycleSpec::Notation(text) => parse_cycle_list(&text)
                    .map_err(|e| D::Error::custom(EmbedError::Parse(x, e.to_string())))?,
            };
            map.insert(x, cycles);
        }
        validate_rotation(json.n, &map).map_err(D::Error::custom)
    }
}

/// `ρ_x(y) = 5y − 4x (mod 7)`, the rotation of the toroidal embedding of `K_7`.
pub fn classical_rotation() -> RotationSystem {
    RotationSystem::from_fn(7, |x, y| (5 * y + 7 * 4 - 4 * x) % 7).expect("affine rotation is valid")
}

/// A closed walk, rotated to start at its lexicographically smallest oriented edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face(Vec<usize>);

impl Face {
    fn from_walk(mut walk: Vec<usize>) -> Face {
        let len = walk.len();
        let best = (0..len)
            .min_by_key(|&i| (walk[i], walk[(i + 1) % len]))
            .expect("faces are non-empty");
        walk.rotate_left(best);
        Face(walk)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted vertex list (with multiplicity).
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Undirected edges of the walk, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.0.len();
        (0..len).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % len]);
            (a.min(b), a.max(b))
        })
    }

    /// Key identifying the walk up to rotation and reversal.
    fn undirected_key(&self) -> Vec<usize> {
        let forward = Face::from_walk(self.0.clone()).0;
        let mut rev = self.0.clone();
        rev.reverse();
        let backward = Face::from_walk(rev).0;
        forward.min(backward)
    }

    fn map(&self, sigma: &Permutation) -> Face {
        Face::from_walk(self.0.iter().map(|&x| sigma.apply(x)).collect())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Orbits of `(a, b) ↦ (b, ρ_b(a))`; each face lists the tails of its darts.
pub fn trace_faces(r: &RotationSystem) -> Vec<Face> {
    let n = r.n;
    let mut visited = vec![false; n * n];
    let mut faces = Vec::new();
    for (x, y) in r.darts() {
        if visited[x * n + y] {
            continue;
        }
        let mut walk = Vec::new();
        let (mut a, mut b) = (x, y);
        while !visited[a * n + b] {
            visited[a * n + b] = true;
            walk.push(a);
            (a, b) = (b, r.rho(b, a));
        }
        faces.push(Face::from_walk(walk));
    }
    faces.sort();
    faces
}

/// `F + V − E` for `K_n`.
pub fn euler_characteristic(r: &RotationSystem) -> i64 {
    let n = r.n as i64;
    trace_faces(r).len() as i64 + n - n * (n - 1) / 2
}

pub fn is_triangular(r: &RotationSystem) -> bool {
    trace_faces(r).iter().all(|f| f.len() == 3)
}

/// Local form of triangularity: `ρ_x(y) = z` forces `ρ_z(x) = y` and `ρ_y(z) = x`.
pub fn satisfies_triangle_rule(r: &RotationSystem) -> bool {
    r.darts().all(|(x, y)| {
        let z = r.rho(x, y);
        r.rho(z, x) == y && r.rho(y, z) == x
    })
}

/// The two colour classes of a face 2-colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredFaceSet {
    pub class_a: Vec<Face>,
    pub class_b: Vec<Face>,
}

impl ColoredFaceSet {
    fn family(faces: &[Face]) -> Vec<Vec<usize>> {
        let mut sets: Vec<_> = faces.iter().map(Face::vertex_set).collect();
        sets.sort();
        sets
    }

    pub fn class_a_sets(&self) -> Vec<Vec<usize>> {
        Self::family(&self.class_a)
    }

    pub fn class_b_sets(&self) -> Vec<Vec<usize>> {
        Self::family(&self.class_b)
    }

    /// A class of triangles read as a block design on the vertices.
    pub fn class_as_design(faces: &[Face], n: usize) -> Result<TripleSystem, EmbedError> {
        let blocks = faces
            .iter()
            .map(|f| match f.vertices() {
                &[a, b, c] => Ok(crate::steiner::Triple::new(a, b, c)?),
                _ => Err(EmbedError::NotTriangular),
            })
            .collect::<Result<Vec<_>, EmbedError>>()?;
        Ok(validate_sts(n, blocks)?)
    }
}

/// Bipartition of the face-adjacency graph. Each component is seeded from its
/// face with the smallest vertex set, which goes to class A.
pub fn two_coloring(r: &RotationSystem) -> Result<ColoredFaceSet, EmbedError> {
    let faces = trace_faces(r);
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for e in f.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut adj = vec![Vec::new(); faces.len()];
    for sides in by_edge.values() {
        let &[p, q] = sides.as_slice() else {
            return Err(EmbedError::NotTwoColorable);
        };
        if p == q {
            return Err(EmbedError::NotTwoColorable);
        }
        adj[p].push(q);
        adj[q].push(p);
    }
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by_key(|&i| (faces[i].vertex_set(), i));
    let mut color: Vec<Option<bool>> = vec![None; faces.len()];
    for &seed in &order {
        if color[seed].is_some() {
            continue;
        }
        color[seed] = Some(false);
        let mut queue = VecDeque::from([seed]);
        while let Some(f) = queue.pop_front() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!c);
                        queue.push_back(g);
                    }
                    Some(d) if d == c => return Err(EmbedError::NotTwoColorable),
                    Some(_) => {}
                }
            }
        }
    }
    let (a, b): (Vec<_>, Vec<_>) = faces.into_iter().zip(color).partition(|(_, c)| *c == Some(false));
    Ok(ColoredFaceSet {
        class_a: a.into_iter().map(|(f, _)| f).collect(),
        class_b: b.into_iter().map(|(f, _)| f).collect(),
    })
}

/// Which of the two commutation rules an embedding isomorphism satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IsoKind {
    /// `σ ∘ ρ = ρ' ∘ σ`.
    Preserving,
    /// `σ ∘ ρ = ρ'⁻¹ ∘ σ`.
    Reversing,
    /// Both rules; impossible on `K_n` for `n ≥ 4`.
    Both,
}

fn check_sweep(r1: &RotationSystem, r2: &RotationSystem) -> Result<(), EmbedError> {
    if r1.n != r2.n {
        return Err(EmbedError::VertexCountMismatch(r1.n, r2.n));
    }
    if r1.n > MAX_SWEEP_VERTICES {
        return Err(EmbedError::UnsupportedOrder(r1.n));
    }
    Ok(())
}

/// Classifies `σ` as an embedding isomorphism from `r1` to `r2`, if it is one.
pub fn isomorphism_kind(r1: &RotationSystem, r2: &RotationSystem, sigma: &Permutation) -> Option<IsoKind> {
    let s = |x| sigma.apply(x);
    let preserving = r1.darts().all(|(x, y)| s(r1.rho(x, y)) == r2.rho(s(x), s(y)));
    let reversing = r1.darts().all(|(x, y)| r2.rho(s(x), s(r1.rho(x, y))) == s(y));
    match (preserving, reversing) {
        (true, true) => Some(IsoKind::Both),
        (true, false) => Some(IsoKind::Preserving),
        (false, true) => Some(IsoKind::Reversing),
        (false, false) => None,
    }
}

/// Every vertex permutation satisfying either commutation rule, in lexicographic order.
pub fn embedding_isomorphisms(
    r1: &RotationSystem,
    r2: &RotationSystem,
) -> Result<Vec<(Permutation, IsoKind)>, EmbedError> {
    check_sweep(r1, r2)?;
    let found: Vec<_> = all_permutations(r1.n)
        .filter_map(|p| isomorphism_kind(r1, r2, &p).map(|k| (p, k)))
        .collect();
    assert!(
        r1.n < 4 || found.iter().all(|(_, k)| *k != IsoKind::Both),
        "an isomorphism of K_n rotations with n >= 4 cannot both preserve and reverse"
    );
    Ok(found)
}

/// Vertex permutations carrying the faces of `r1` onto the faces of `r2`,
/// comparing faces as closed walks up to rotation and reversal.
pub fn face_isomorphisms(r1: &RotationSystem, r2: &RotationSystem) -> Result<Vec<Permutation>, EmbedError> {
    check_sweep(r1, r2)?;
    let key_set = |faces: &[Face]| {
        let mut keys: Vec<_> = faces.iter().map(Face::undirected_key).collect();
        keys.sort();
        keys
    };
    let faces1 = trace_faces(r1);
    let target = key_set(&trace_faces(r2));
    Ok(all_permutations(r1.n)
        .filter(|p| {
            let mapped: Vec<Face> = faces1.iter().map(|f| f.map(p)).collect();
            key_set(&mapped) == target
        })
        .collect())
}

pub fn embedding_automorphism_group(r: &RotationSystem) -> Result<PermGroup, EmbedError> {
    let elements = embedding_isomorphisms(r, r)?.into_iter().map(|(p, _)| p).collect();
    Ok(PermGroup::from_trusted(r.n, elements))
}

/// Embedding automorphisms that map each colour class onto itself.
pub fn color_automorphism_group(r: &RotationSystem) -> Result<PermGroup, EmbedError> {
    let coloring = two_coloring(r)?;
    let (a, b) = (coloring.class_a_sets(), coloring.class_b_sets());
    let image = |family: &[Vec<usize>], p: &Permutation| {
        let mut out: Vec<Vec<usize>> = family
            .iter()
            .map(|set| {
                let mut s: Vec<usize> = set.iter().map(|&x| p.apply(x)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        out.sort();
        out
    };
    let elements = embedding_isomorphisms(r, r)?
        .into_iter()
        .map(|(p, _)| p)
        .filter(|p| image(&a, p) == a && image(&b, p) == b)
        .collect();
    Ok(PermGroup::from_trusted(r.n, elements))
}

/// Partial rotation of `K_7` used by the completion search.
#[derive(Clone)]
struct Partial {
    succ: [[usize; 7]; 7],
    pred: [[usize; 7]; 7],
}

impl Partial {
    /// Sets `ρ_x(y) = z` and everything the triangle rule forces from it.
    fn assign(&mut self, x: usize, y: usize, z: usize) -> bool {
        let mut queue = vec![(x, y, z)];
        while let Some((x, y, z)) = queue.pop() {
            if x == y || x == z || y == z {
                return false;
            }
            match (self.succ[x][y], self.pred[x][z]) {
                (s, _) if s == z => continue,
                (NONE, NONE) => {}
                _ => return false,
            }
            self.succ[x][y] = z;
            self.pred[x][z] = y;
            if self.closes_short_cycle(x, y) {
                return false;
            }
            queue.push((z, x, y));
            queue.push((y, z, x));
        }
        true
    }

    /// Whether following `ρ_x` from `y` returns to `y` in fewer than six steps.
    fn closes_short_cycle(&self, x: usize, y: usize) -> bool {
        let mut w = self.succ[x][y];
        for _ in 1..6 {
            if w == NONE {
                return false;
            }
            if w == y {
                return true;
            }
            w = self.succ[x][w];
        }
        false
    }

    fn first_open(&self) -> Option<(usize, usize)> {
        (0..7)
            .flat_map(|x| (0..7).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && self.succ[x][y] == NONE)
    }
}

/// All triangular rotations of `K_7` whose rotation at vertex 0 is `rho0`.
pub fn triangular_completions(rho0: &[usize]) -> Result<Vec<RotationSystem>, EmbedError> {
    let mut start = Partial {
        succ: [[NONE; 7]; 7],
        pred: [[NONE; 7]; 7],
    };
    let mut seen = [false; 7];
    for &y in rho0 {
        if y == 0 || y >= 7 {
            return Err(EmbedError::InvalidNeighbor(0, y));
        }
        if std::mem::replace(&mut seen[y], true) {
            return Err(EmbedError::RepeatedNeighbor(0, y));
        }
    }
    if let Some(y) = (1..7).find(|&y| !seen[y]) {
        return Err(EmbedError::MissingNeighbor(0, y));
    }
    for i in 0..6 {
        if !start.assign(0, rho0[i], rho0[(i + 1) % 6]) {
            return Ok(Vec::new());
        }
    }
    let mut out = Vec::new();
    complete(start, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

fn complete(partial: Partial, out: &mut Vec<RotationSystem>) {
    let Some((x, y)) = partial.first_open() else {
        let succ = partial
            .succ
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().enumerate().map(move |(y, &z)| if x == y { NONE } else { z }))
            .collect();
        let r = RotationSystem { n: 7, succ };
        debug_assert!(is_triangular(&r));
        out.push(r);
        return;
    };
    for z in 0..7 {
        if z == x || z == y || partial.pred[x][z] != NONE {
            continue;
        }
        let mut next = partial.clone();
        if next.assign(x, y, z) {
            complete(next, out);
        }
    }
}

/// A witness isomorphism from `r` to the classical rotation (the first in
/// lexicographic order), with its kind.
pub fn classify_triangular(r: &RotationSystem) -> Result<(Permutation, IsoKind), EmbedError> {
    if r.n != 7 || !is_triangular(r) {
        return Err(EmbedError::NotTriangular);
    }
    let classical = classical_rotation();
    all_permutations(7)
        .find_map(|p| isomorphism_kind(r, &classical, &p).map(|k| (p, k)))
        .ok_or(EmbedError::NoIsomorphism)
}

/// Graphviz rendering of `K_n` with the traced faces (and colour classes, when
/// they exist) listed as comments.
pub fn to_dot(r: &RotationSystem) -> String {
    let mut out = String::new();
    let faces = trace_faces(r);
    let coloring = two_coloring(r).ok();
    writeln!(out, "graph K{} {{", r.n).unwrap();
    writeln!(out, "  // euler characteristic: {}", euler_characteristic(r)).unwrap();
    for (i, f) in faces.iter().enumerate() {
        let class = match &coloring {
            Some(c) if c.class_a.contains(f) => " class A",
            Some(_) => " class B",
            None => "",
        };
        writeln!(out, "  // face {i}: {f}{class}").unwrap();
    }
    for x in 0..r.n {
        writeln!(out, "  {x} [label=\"{x}\"]; // rotation {:?}", r.cycle(x)).unwrap();
    }
    for x in 0..r.n {
        for y in x + 1..r.n {
            writeln!(out, "  {x} -- {y};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steiner::{cyclic_sts, triple};

    fn cycles_map(entries: &[(usize, Vec<Vec<usize>>)]) -> BTreeMap<usize, Vec<Vec<usize>>> {
        entries.iter().cloned().collect()
    }

    fn classical_map() -> BTreeMap<usize, Vec<Vec<usize>>> {
        let r = classical_rotation();
        (0..7).map(|x| (x, vec![r.cycle(x)])).collect()
    }

    #[test]
    fn classical_cycles() {
        let r = classical_rotation();
        assert_eq!(r.cycle(0), vec![1, 5, 4, 6, 2, 3]);
        // (0 2 5 6 4 1) starts at 0 already.
        assert_eq!(r.cycle(3), vec![0, 2, 5, 6, 4, 1]);
        assert!(validate_rotation(7, &classical_map()).is_ok());
    }

    #[test]
    fn affine_formula_by_hand() {
        // 5y - 4x mod 7 evaluated directly at x = 0 and x = 3.
        let at = |x: i64, y: i64| (5 * y - 4 * x).rem_euclid(7) as usize;
        let r = classical_rotation();
        for x in [0usize, 3] {
            for y in (0..7).filter(|&y| y != x) {
                assert_eq!(r.rho(x, y), at(x as i64, y as i64));
            }
        }
    }

    #[test]
    fn rotation_errors() {
        let mut map = classical_map();
        map.insert(0, vec![vec![1, 5, 4], vec![6, 2, 3]]);
        assert_eq!(validate_rotation(7, &map), Err(EmbedError::NotSingleCycle(0)));
        map.insert(0, vec![vec![1, 5, 4, 2, 3]]);
        assert_eq!(validate_rotation(7, &map), Err(EmbedError::MissingNeighbor(0, 6)));
        map.insert(0, vec![vec![1, 5, 4, 6, 2, 3, 0]]);
        assert_eq!(validate_rotation(7, &map), Err(EmbedError::InvalidNeighbor(0, 0)));
        map.insert(0, vec![vec![1, 5, 4, 6, 2, 3, 5]]);
        assert_eq!(validate_rotation(7, &map), Err(EmbedError::RepeatedNeighbor(0, 5)));
        map.remove(&0);
        assert_eq!(validate_rotation(7, &map), Err(EmbedError::MissingVertex(0)));
        assert_eq!(
            validate_rotation(3, &cycles_map(&[(0, vec![vec![1, 2]])])),
            Err(EmbedError::MissingVertex(1))
        );
    }

    #[test]
    fn classical_faces() {
        let r = classical_rotation();
        let faces = trace_faces(&r);
        assert_eq!(faces.len(), 14);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(faces.contains(&Face(vec![0, 1, 3])));
        let b1 = cyclic_sts(7, &[triple(0, 1, 3)]).unwrap();
        let b2 = cyclic_sts(7, &[triple(0, 1, 5)]).unwrap();
        let mut sets: Vec<Vec<usize>> = faces.iter().map(Face::vertex_set).collect();
        sets.sort();
        let mut expected: Vec<Vec<usize>> = b1
            .blocks()
            .iter()
            .chain(b2.blocks())
            .map(|t| t.points().to_vec())
            .collect();
        expected.sort();
        assert_eq!(sets, expected);
        assert_eq!(euler_characteristic(&r), 0);
    }

    #[test]
    fn darts_are_conserved() {
        let r = classical_rotation();
        let total: usize = trace_faces(&r).iter().map(Face::len).sum();
        assert_eq!(total, 42);
    }

    #[test]
    fn swapped_entries_break_triangularity() {
        let mut map = classical_map();
        map.insert(0, vec![vec![5, 1, 4, 6, 2, 3]]);
        let r = validate_rotation(7, &map).unwrap();
        assert!(!is_triangular(&r));
        assert!(!satisfies_triangle_rule(&r));
        let faces = trace_faces(&r);
        assert_eq!(euler_characteristic(&r), faces.len() as i64 + 7 - 21);
    }

    #[test]
    fn classical_coloring() {
        let r = classical_rotation();
        let c = two_coloring(&r).unwrap();
        assert_eq!(c.class_a.len(), 7);
        assert_eq!(c.class_b.len(), 7);
        let a = ColoredFaceSet::class_as_design(&c.class_a, 7).unwrap();
        let b = ColoredFaceSet::class_as_design(&c.class_b, 7).unwrap();
        assert_eq!(a, cyclic_sts(7, &[triple(0, 1, 3)]).unwrap());
        assert_eq!(b, cyclic_sts(7, &[triple(0, 1, 5)]).unwrap());
    }

    #[test]
    fn classical_automorphisms() {
        let r = classical_rotation();
        for z in 0..7 {
            let tau = Permutation::from_fn(7, |x| (x + z) % 7);
            assert_eq!(isomorphism_kind(&r, &r, &tau), Some(IsoKind::Preserving));
        }
        for c in 1..7 {
            let lambda = Permutation::from_fn(7, |x| c * x % 7);
            assert_eq!(isomorphism_kind(&r, &r, &lambda), Some(IsoKind::Preserving));
        }
        let sigma = Permutation::parse_cycles(7, "(2 4)(3 5)").unwrap();
        assert_eq!(isomorphism_kind(&r, &r, &sigma), None);
    }

    #[test]
    fn color_group() {
        let r = classical_rotation();
        let g = color_automorphism_group(&r).unwrap();
        assert_eq!(g.order(), 21);
        assert_eq!(g, PermGroup::affine(7, &[1, 2, 4]).unwrap());
        let sigma = Permutation::parse_cycles(7, "(2 4)(3 5)").unwrap();
        assert!(!g.contains(&sigma));
        assert_eq!(triple(0, 1, 3).map(&sigma), triple(0, 1, 5));
    }

    #[test]
    fn two_completions_of_classical_rho0() {
        let completions = triangular_completions(&[1, 5, 4, 6, 2, 3]).unwrap();
        assert_eq!(completions.len(), 2);
        let classical = classical_rotation();
        assert!(completions.contains(&classical));
        let other = completions.iter().find(|r| **r != classical).unwrap();
        assert_eq!(other.cycle(5), vec![0, 1, 2, 6, 3, 4]);
        let expected = RotationSystem::from_cycles(&[
            vec![1, 5, 4, 6, 2, 3],
            vec![2, 5, 0, 3, 6, 4],
            vec![3, 0, 6, 5, 1, 4],
            vec![1, 0, 2, 4, 5, 6],
            vec![2, 1, 6, 0, 5, 3],
            vec![4, 0, 1, 2, 6, 3],
            vec![1, 3, 5, 2, 0, 4],
        ])
        .unwrap();
        assert_eq!(other, &expected);
        let sigma = Permutation::parse_cycles(7, "(2 4)(3 5)").unwrap();
        assert_eq!(isomorphism_kind(other, &classical, &sigma), Some(IsoKind::Reversing));
        assert_eq!(classify_triangular(other).unwrap(), (sigma, IsoKind::Reversing));
    }

    #[test]
    fn classify_classical_is_identity() {
        assert_eq!(
            classify_triangular(&classical_rotation()).unwrap(),
            (Permutation::identity(7), IsoKind::Preserving)
        );
        let mut map = classical_map();
        map.insert(0, vec![vec![5, 1, 4, 6, 2, 3]]);
        let r = validate_rotation(7, &map).unwrap();
        assert_eq!(classify_triangular(&r), Err(EmbedError::NotTriangular));
    }

    #[test]
    fn completion_rejects_bad_rho0() {
        assert_eq!(
            triangular_completions(&[1, 2, 3]),
            Err(EmbedError::MissingNeighbor(0, 4))
        );
        assert_eq!(
            triangular_completions(&[0, 1, 2, 3, 4, 5]),
            Err(EmbedError::InvalidNeighbor(0, 0))
        );
    }

    #[test]
    fn rotation_json() {
        let r = classical_rotation();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"n":7,"rotation":{"0":[1,5,4,6,2,3],"1":"#));
        assert_eq!(serde_json::from_str::<RotationSystem>(&json).unwrap(), r);
        let notation = json.replace("[1,5,4,6,2,3]", "\"(1 5 4)(6 2 3)\"");
        let err = serde_json::from_str::<RotationSystem>(&notation).unwrap_err();
        assert!(err.to_string().contains("rotation at 0 is not a single cycle"));
    }

    #[test]
    fn dot_lists_faces() {
        let dot = to_dot(&classical_rotation());
        assert!(dot.starts_with("graph K7 {"));
        assert!(dot.contains("// face 0: (0 1 3) class A"));
        assert_eq!(dot.matches(" -- ").count(), 21);
    }

    #[test]
    fn full_group_of_classical() {
        let r = classical_rotation();
        let isos = embedding_isomorphisms(&r, &r).unwrap();
        assert_eq!(isos.len(), 42);
        assert!(isos.iter().all(|(_, k)| *k == IsoKind::Preserving));
        let g = embedding_automorphism_group(&r).unwrap();
        assert!(PermGroup::from_elements(7, g.elements().to_vec()).is_ok());
        let minus = Permutation::from_fn(7, |x| (7 - x) % 7);
        assert!(g.contains(&minus));
        assert!(!color_automorphism_group(&r).unwrap().contains(&minus));
    }

    #[test]
    fn face_maps_agree_with_rotation_maps() {
        let classical = classical_rotation();
        let completions = triangular_completions(&classical.cycle(0)).unwrap();
        for r in &completions {
            let by_rotation: Vec<Permutation> = embedding_isomorphisms(r, &classical)
                .unwrap()
                .into_iter()
                .map(|(p, _)| p)
                .collect();
            assert_eq!(face_isomorphisms(r, &classical).unwrap(), by_rotation);
        }
    }

    #[test]
    fn every_rho0_completes_to_the_classical_class() {
        use itertools::Itertools;
        let mut total = 0;
        for tail in (2..7).permutations(5) {
            let rho0: Vec<usize> = std::iter::once(1).chain(tail).collect();
            for r in triangular_completions(&rho0).unwrap() {
                assert_eq!(r.cycle(0)[0], 1);
                assert!(satisfies_triangle_rule(&r));
                let (sigma, kind) = classify_triangular(&r).unwrap();
                assert_eq!(isomorphism_kind(&r, &classical_rotation(), &sigma), Some(kind));
                total += 1;
            }
        }
        assert!(total > 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_rotation() -> impl Strategy<Value = RotationSystem> {
            let per_vertex = |x: usize| {
                Just((0..7).filter(|&y| y != x).collect::<Vec<_>>()).prop_shuffle()
            };
            (0..7usize)
                .map(per_vertex)
                .collect::<Vec<_>>()
                .prop_map(|cycles| RotationSystem::from_cycles(&cycles).unwrap())
        }

        fn arb_perm() -> impl Strategy<Value = Permutation> {
            Just((0..7).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(v).unwrap())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn local_rule_matches_face_lengths(r in arb_rotation()) {
                prop_assert_eq!(is_triangular(&r), satisfies_triangle_rule(&r));
                let total: usize = trace_faces(&r).iter().map(Face::len).sum();
                prop_assert_eq!(total, 42);
            }

            #[test]
            fn relabelled_classical_is_triangular(sigma in arb_perm()) {
                let r = classical_rotation().relabel(&sigma);
                prop_assert!(is_triangular(&r));
                prop_assert!(satisfies_triangle_rule(&r));
                prop_assert_eq!(euler_characteristic(&r), 0);
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]

            #[test]
            fn relabelled_classical_classifies(sigma in arb_perm()) {
                let r = classical_rotation().relabel(&sigma);
                let (witness, kind) = classify_triangular(&r).unwrap();
                prop_assert_eq!(isomorphism_kind(&r, &classical_rotation(), &witness), Some(kind));
            }
        }
    }
}
