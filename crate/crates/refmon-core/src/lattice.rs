//! The finite graded atomic join-semilattices used as idempotent parts:
//! Boolean lattices, face lattices of simplices, polygons, cubes,
//! cross-polytopes and permutohedra, and the intersection lattices of the
//! type A, B and D reflection arrangements.
//!
//! Faces are ordered by reverse inclusion, so the whole polytope is the
//! bottom `0` and the empty face is the top. Subspaces are likewise ordered
//! by reverse inclusion with join = intersection.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::SignedPerm;
use crate::subspace;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LatticeKind {
    /// Subsets of `{1..n}`.
    Boolean(usize),
    /// Faces of the `d`-simplex on vertices `{1..d+1}`.
    Simplex(usize),
    /// Faces of the `m`-gon.
    Polygon(usize),
    /// Faces of the `d`-cube.
    Cube(usize),
    /// Faces of the `d`-dimensional cross-polytope.
    Octa(usize),
    /// Faces of the `d`-permutohedron (vertices `{1..d+1}`).
    Permutohedron(usize),
    /// Set partitions of `{1..n}`: the type A arrangement.
    Partition(usize),
    /// Coupled partitions: the type B arrangement.
    CoupledT(usize),
    /// Coupled partitions with `|Δ| ≠ 1`: the type D arrangement.
    CoupledTo(usize),
}

pub const KIND_NAMES: [&str; 9] =
    ["boolean", "simplex", "polygon", "cube", "octahedron", "permutohedron", "partition", "coupled-b", "coupled-d"];

impl LatticeKind {
    pub fn parse(name: &str, param: usize) -> Result<Self> {
        let k = match name {
            "boolean" | "bool" => LatticeKind::Boolean(param),
            "simplex" => LatticeKind::Simplex(param),
            "polygon" | "poly" => LatticeKind::Polygon(param),
            "cube" => LatticeKind::Cube(param),
            "octahedron" | "octa" | "oct" => LatticeKind::Octa(param),
            "permutohedron" | "perm" => LatticeKind::Permutohedron(param),
            "partition" | "part" | "pi" => LatticeKind::Partition(param),
            "coupled-b" | "tb" | "t" => LatticeKind::CoupledT(param),
            "coupled-d" | "td" | "t0" => LatticeKind::CoupledTo(param),
            _ => return Err(Error::Parse(format!("unknown lattice kind {name}"))),
        };
        k.check()?;
        Ok(k)
    }

    pub fn name(self) -> &'static str {
        KIND_NAMES[self.tag()]
    }

    fn tag(self) -> usize {
        match self {
            LatticeKind::Boolean(_) => 0,
            LatticeKind::Simplex(_) => 1,
            LatticeKind::Polygon(_) => 2,
            LatticeKind::Cube(_) => 3,
            LatticeKind::Octa(_) => 4,
            LatticeKind::Permutohedron(_) => 5,
            LatticeKind::Partition(_) => 6,
            LatticeKind::CoupledT(_) => 7,
            LatticeKind::CoupledTo(_) => 8,
        }
    }

    pub fn param(self) -> usize {
        match self {
            LatticeKind::Boolean(p)
            | LatticeKind::Simplex(p)
            | LatticeKind::Polygon(p)
            | LatticeKind::Cube(p)
            | LatticeKind::Octa(p)
            | LatticeKind::Permutohedron(p)
            | LatticeKind::Partition(p)
            | LatticeKind::CoupledT(p)
            | LatticeKind::CoupledTo(p) => p,
        }
    }

    /// The triangle is the 2-simplex.
    pub fn normalized(self) -> Self {
        match self {
            LatticeKind::Polygon(3) => LatticeKind::Simplex(2),
            k => k,
        }
    }

    pub fn check(self) -> Result<()> {
        let p = self.param();
        let (lo, hi) = match self {
            LatticeKind::Boolean(_) => (1, 7),
            LatticeKind::Simplex(_) => (1, 6),
            LatticeKind::Polygon(_) => (3, 64),
            LatticeKind::Cube(_) => (1, 6),
            LatticeKind::Octa(_) => (1, 6),
            LatticeKind::Permutohedron(_) => (1, 5),
            LatticeKind::Partition(_) => (1, 7),
            LatticeKind::CoupledT(_) => (1, 6),
            LatticeKind::CoupledTo(_) => (2, 6),
        };
        if p < lo || p > hi {
            return Err(Error::OutOfRange(format!("{} needs {lo} <= param <= {hi}, got {p}", self.name())));
        }
        Ok(())
    }

    /// Intersection lattices of reflection arrangements satisfy the
    /// semimodular rank inequality.
    pub fn is_geometric(self) -> bool {
        matches!(self, LatticeKind::Partition(_) | LatticeKind::CoupledT(_) | LatticeKind::CoupledTo(_))
    }

    /// Face lattices of simple polytopes (Boolean lattices are simplices).
    pub fn is_simple(self) -> bool {
        match self {
            LatticeKind::Boolean(_)
            | LatticeKind::Simplex(_)
            | LatticeKind::Polygon(_)
            | LatticeKind::Cube(_)
            | LatticeKind::Permutohedron(_) => true,
            LatticeKind::Octa(d) => d <= 2,
            _ => false,
        }
    }

    /// Size of the ground set `X` the elements are built on.
    pub fn ground(self) -> usize {
        match self {
            LatticeKind::Simplex(d) | LatticeKind::Permutohedron(d) => d + 1,
            k => k.param(),
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.param())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolyFace {
    Full,
    Edge(u8),
    /// The vertex shared by edges `i` and `i + 1 (mod m)`.
    Vertex(u8),
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Payload {
    /// Sorted subset of `{1..n}`.
    Subset(Vec<u8>),
    Poly(PolyFace),
    /// Admissible subset of `±X` sorted by absolute value. For the cube `None`
    /// is the empty face; for the cross-polytope `None` is the whole polytope.
    Signed(Option<Vec<i8>>),
    /// Block index of each vertex of an ordered partition; `None` is the
    /// formal top `1`.
    Orient(Option<Vec<u8>>),
    /// Canonical symbolic generic point of a subspace.
    Sub(Vec<i8>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeElement {
    pub kind: LatticeKind,
    pub payload: Payload,
}

fn sorted_by_abs(mut v: Vec<i8>) -> Vec<i8> {
    v.sort_by_key(|x| (x.abs(), x.signum()));
    v
}

fn is_admissible(j: &[i8]) -> bool {
    let mut seen = [false; 128];
    for &x in j {
        let a = x.unsigned_abs() as usize;
        if seen[a] {
            return false;
        }
        seen[a] = true;
    }
    true
}

fn intersect(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

/// Ordered partition `(Λ_1, …, Λ_p)` of the vertices from block indices.
fn blocks_of(idx: &[u8]) -> Vec<Vec<u8>> {
    let p = idx.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut out = vec![Vec::new(); p];
    for (v, &b) in idx.iter().enumerate() {
        out[b as usize].push(v as u8 + 1);
    }
    out
}

/// Common refinement of two ordered partitions, or `None` when some pair of
/// vertices is oriented both ways.
fn orient_join(x: &[u8], y: &[u8]) -> Option<Vec<u8>> {
    let n = x.len();
    for i in 0..n {
        for j in 0..n {
            if x[i] < x[j] && y[i] > y[j] {
                return None;
            }
        }
    }
    let mut keys: Vec<(u8, u8)> = x.iter().copied().zip(y.iter().copied()).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for k in keys.iter_mut() {
        k.0 = distinct.binary_search(k).unwrap() as u8;
    }
    Some(keys.into_iter().map(|k| k.0).collect())
}

impl Payload {
    fn join(&self, other: &Payload, kind: LatticeKind) -> Payload {
        match (self, other) {
            (Payload::Subset(a), Payload::Subset(b)) => Payload::Subset(intersect(a, b)),
            (Payload::Poly(a), Payload::Poly(b)) => Payload::Poly(poly_join(*a, *b, kind.param() as u8)),
            (Payload::Signed(a), Payload::Signed(b)) => match kind {
                LatticeKind::Cube(_) => match (a, b) {
                    (Some(a), Some(b)) => {
                        let mut u = a.clone();
                        for &x in b {
                            if !u.contains(&x) {
                                u.push(x);
                            }
                        }
                        if is_admissible(&u) {
                            Payload::Signed(Some(sorted_by_abs(u)))
                        } else {
                            Payload::Signed(None)
                        }
                    }
                    _ => Payload::Signed(None),
                },
                _ => match (a, b) {
                    (None, x) | (x, None) => Payload::Signed(x.clone()),
                    (Some(a), Some(b)) => Payload::Signed(Some(a.iter().copied().filter(|x| b.contains(x)).collect())),
                },
            },
            (Payload::Orient(a), Payload::Orient(b)) => match (a, b) {
                (Some(a), Some(b)) => Payload::Orient(orient_join(a, b)),
                _ => Payload::Orient(None),
            },
            (Payload::Sub(a), Payload::Sub(b)) => Payload::Sub(subspace::meet(a, b)),
            _ => unreachable!("payloads of one lattice share a variant"),
        }
    }

    fn rank(&self, kind: LatticeKind) -> usize {
        let n = kind.ground();
        match self {
            Payload::Subset(y) => n - y.len(),
            Payload::Poly(f) => match f {
                PolyFace::Full => 0,
                PolyFace::Edge(_) => 1,
                PolyFace::Vertex(_) => 2,
                PolyFace::Empty => 3,
            },
            Payload::Signed(j) => match kind {
                LatticeKind::Cube(d) => j.as_ref().map_or(d + 1, |j| j.len()),
                _ => j.as_ref().map_or(0, |j| n + 1 - j.len()),
            },
            Payload::Orient(o) => match o {
                Some(o) => o.iter().copied().max().unwrap_or(0) as usize,
                None => n,
            },
            Payload::Sub(v) => n - subspace::dim(v),
        }
    }

    /// Image under a signed permutation of the ground set; `None` when the
    /// family carries no such action.
    fn act(&self, g: &SignedPerm) -> Option<Payload> {
        Some(match self {
            Payload::Subset(y) => {
                let mut out: Vec<u8> = y.iter().map(|&i| g.apply(i as i8).unsigned_abs()).collect();
                out.sort_unstable();
                Payload::Subset(out)
            }
            Payload::Signed(j) => Payload::Signed(j.as_ref().map(|j| sorted_by_abs(j.iter().map(|&x| g.apply(x)).collect()))),
            Payload::Orient(o) => Payload::Orient(o.as_ref().map(|o| {
                let mut out = vec![0u8; o.len()];
                for (i, &b) in o.iter().enumerate() {
                    out[g.apply(i as i8 + 1).unsigned_abs() as usize - 1] = b;
                }
                out
            })),
            Payload::Sub(v) => Payload::Sub(subspace::act(v, g)),
            Payload::Poly(_) => return None,
        })
    }
}

fn poly_join(a: PolyFace, b: PolyFace, m: u8) -> PolyFace {
    use PolyFace::*;
    let edges = |f: PolyFace| -> Option<(u8, u8)> {
        match f {
            Edge(i) => Some((i, i)),
            Vertex(i) => Some((i, i % m + 1)),
            _ => None,
        }
    };
    match (a, b) {
        (Full, x) | (x, Full) => x,
        (Empty, _) | (_, Empty) => Empty,
        _ => {
            let (ea, eb) = (edges(a).unwrap(), edges(b).unwrap());
            let mut es: Vec<u8> = vec![ea.0, ea.1, eb.0, eb.1];
            es.sort_unstable();
            es.dedup();
            match es.len() {
                1 => Edge(es[0]),
                2 => {
                    let (i, j) = (es[0], es[1]);
                    if j == i + 1 {
                        Vertex(i)
                    } else if i == 1 && j == m {
                        Vertex(m)
                    } else {
                        Empty
                    }
                }
                _ => Empty,
            }
        }
    }
}

fn subsets_by_size(n: usize) -> Vec<Vec<u8>> {
    let mut all: Vec<Vec<u8>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i as u8 + 1).collect())
        .collect();
    all.sort_by(|a: &Vec<u8>, b: &Vec<u8>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

/// `a(J) = J ∪ −(X∖J)`, the facet of the cross-polytope opposite `−J`.
pub fn octa_atom(d: usize, j: &[u8]) -> Vec<i8> {
    (1..=d as u8).map(|i| if j.contains(&i) { i as i8 } else { -(i as i8) }).collect()
}

/// Bottom and atoms in family order.
fn bottom_and_atoms(kind: LatticeKind) -> (Payload, Vec<Payload>) {
    let n = kind.ground();
    match kind {
        LatticeKind::Boolean(_) | LatticeKind::Simplex(_) => {
            let all: Vec<u8> = (1..=n as u8).collect();
            let atoms = (1..=n as u8).map(|i| Payload::Subset(all.iter().copied().filter(|&x| x != i).collect())).collect();
            (Payload::Subset(all), atoms)
        }
        LatticeKind::Polygon(m) => (Payload::Poly(PolyFace::Full), (1..=m as u8).map(|i| Payload::Poly(PolyFace::Edge(i))).collect()),
        LatticeKind::Cube(d) => {
            let mut atoms = Vec::new();
            for i in 1..=d as i8 {
                atoms.push(Payload::Signed(Some(vec![i])));
                atoms.push(Payload::Signed(Some(vec![-i])));
            }
            (Payload::Signed(Some(Vec::new())), atoms)
        }
        LatticeKind::Octa(d) => {
            let atoms = subsets_by_size(d).iter().map(|j| Payload::Signed(Some(octa_atom(d, j)))).collect();
            (Payload::Signed(None), atoms)
        }
        LatticeKind::Permutohedron(_) => {
            let atoms = subsets_by_size(n)
                .into_iter()
                .filter(|j| !j.is_empty() && j.len() < n)
                .map(|j| Payload::Orient(Some((1..=n as u8).map(|v| j.contains(&v) as u8).collect())))
                .collect();
            (Payload::Orient(Some(vec![0; n])), atoms)
        }
        LatticeKind::Partition(_) | LatticeKind::CoupledT(_) | LatticeKind::CoupledTo(_) => {
            let mut atoms = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    atoms.push(Payload::Sub(subspace::diff_hyperplane(n, i, j)));
                }
            }
            if !matches!(kind, LatticeKind::Partition(_)) {
                for i in 1..=n {
                    for j in i + 1..=n {
                        atoms.push(Payload::Sub(subspace::sum_hyperplane(n, i, j)));
                    }
                }
            }
            if matches!(kind, LatticeKind::CoupledT(_)) {
                for i in 1..=n {
                    atoms.push(Payload::Sub(subspace::coord_hyperplane(n, i)));
                }
            }
            (Payload::Sub(subspace::whole(n)), atoms)
        }
    }
}

/// A fully enumerated lattice with its join table.
#[derive(Debug, Clone)]
pub struct Lattice {
    kind: LatticeKind,
    elems: Vec<Payload>,
    index: BTreeMap<Payload, usize>,
    join: Vec<u32>,
    rank: Vec<u32>,
    natoms: usize,
}

impl Lattice {
    /// Builds the lattice breadth-first from the bottom by joining atoms, so
    /// index 0 is the bottom and `1..=natoms` are the atoms in family order.
    pub fn new(kind: LatticeKind) -> Result<Lattice> {
        kind.check()?;
        let kind = kind.normalized();
        let (bottom, atoms) = bottom_and_atoms(kind);
        let natoms = atoms.len();
        let mut elems = vec![bottom];
        let mut index = BTreeMap::new();
        index.insert(elems[0].clone(), 0);
        for a in &atoms {
            index.insert(a.clone(), elems.len());
            elems.push(a.clone());
        }
        let mut i = 1;
        while i < elems.len() {
            for a in &atoms {
                let z = elems[i].join(a, kind);
                if !index.contains_key(&z) {
                    index.insert(z.clone(), elems.len());
                    elems.push(z);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut join = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let z = index[&elems[x].join(&elems[y], kind)] as u32;
                join[x * n + y] = z;
                join[y * n + x] = z;
            }
        }
        let rank = elems.iter().map(|e| e.rank(kind) as u32).collect();
        Ok(Lattice { kind, elems, index, join, rank, natoms })
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        (0..self.len()).max_by_key(|&x| self.rank[x]).unwrap()
    }

    pub fn natoms(&self) -> usize {
        self.natoms
    }

    /// Element index of atom `i` (0-based in family order).
    pub fn atom(&self, i: usize) -> usize {
        i + 1
    }

    pub fn atoms(&self) -> Vec<LatticeElement> {
        (1..=self.natoms).map(|i| self.element(i)).collect()
    }

    pub fn payload(&self, x: usize) -> &Payload {
        &self.elems[x]
    }

    pub fn element(&self, x: usize) -> LatticeElement {
        LatticeElement { kind: self.kind, payload: self.elems[x].clone() }
    }

    pub fn index_of(&self, e: &LatticeElement) -> Result<usize> {
        if e.kind.normalized() != self.kind {
            return Err(Error::KindMismatch);
        }
        self.index_of_payload(&e.payload)
    }

    pub fn index_of_payload(&self, p: &Payload) -> Result<usize> {
        self.index.get(p).copied().ok_or_else(|| Error::NotAdmissible(format!("{p:?} is not in {}", self.kind)))
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(0, |acc, x| self.join(acc, x))
    }

    /// Join of a set of atoms given by 0-based atom numbers.
    pub fn join_atoms(&self, atoms: &[usize]) -> usize {
        self.join_all(atoms.iter().map(|&a| self.atom(a)))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join(x, y) == y
    }

    /// Meet as the join of all common lower bounds.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.join_all((0..self.len()).filter(|&z| self.leq(z, x) && self.leq(z, y)))
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x] as usize
    }

    /// Lattice rank: rank of the top.
    pub fn height(&self) -> usize {
        self.rank(self.top())
    }

    /// 0-based atom numbers below `x`.
    pub fn atoms_below(&self, x: usize) -> Vec<usize> {
        (0..self.natoms).filter(|&a| self.leq(self.atom(a), x)).collect()
    }

    /// Literal definition: dropping any atom strictly lowers the join.
    pub fn is_independent(&self, atoms: &[usize]) -> bool {
        let full = self.join_atoms(atoms);
        let mut rest = Vec::with_capacity(atoms.len());
        (0..atoms.len()).all(|i| {
            rest.clear();
            rest.extend(atoms.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a));
            self.join_atoms(&rest) != full
        })
    }

    pub fn is_minimally_dependent(&self, atoms: &[usize]) -> bool {
        if self.is_independent(atoms) {
            return false;
        }
        let mut rest = Vec::with_capacity(atoms.len());
        (0..atoms.len()).all(|i| {
            rest.clear();
            rest.extend(atoms.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a));
            self.is_independent(&rest)
        })
    }

    /// All independent atom sets of size `k`, as sorted atom numbers in
    /// lexicographic order.
    pub fn independent_sets(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_subset(self.natoms, k, |s| {
            if self.is_independent(s) {
                out.push(s.to_vec());
            }
        });
        out
    }

    /// Brute-force minimally dependent sets (sizes up to `height + 1`).
    pub fn minimally_dependent_brute(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for k in 1..=(self.height() + 1).min(self.natoms) {
            for_each_subset(self.natoms, k, |s| {
                if self.is_minimally_dependent(s) {
                    out.push(s.to_vec());
                }
            });
        }
        out
    }

    /// Image of element `x` under a signed permutation of the ground set.
    pub fn act(&self, x: usize, g: &SignedPerm) -> Result<usize> {
        let p = self.elems[x].act(g).ok_or_else(|| Error::UnsupportedKind(format!("no group action on {}", self.kind)))?;
        self.index_of_payload(&p)
    }

    pub fn render(&self, x: usize) -> String {
        self.element(x).to_string()
    }

    pub fn parse(&self, s: &str) -> Result<usize> {
        let e = LatticeElement::parse(self.kind, s)?;
        self.index_of(&e)
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // rightmost position that can still advance
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Ordered partition `(Λ_1, …, Λ_p)` of a permutohedron face.
pub fn orientation_to_ordered_partition(e: &LatticeElement) -> Result<Vec<Vec<u8>>> {
    match &e.payload {
        Payload::Orient(Some(o)) => Ok(blocks_of(o)),
        _ => Err(Error::NotAdmissible(format!("{e} is not a proper orientation"))),
    }
}

/// Directed edges `i → j` of the orientation (`i` in an earlier block).
pub fn orientation_edges(e: &LatticeElement) -> Result<Vec<(u8, u8)>> {
    let blocks = orientation_to_ordered_partition(e)?;
    let mut out = Vec::new();
    for (p, bp) in blocks.iter().enumerate() {
        for bq in &blocks[p + 1..] {
            for &i in bp {
                for &j in bq {
                    out.push((i, j));
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Builds a permutohedron face from a set of directed edges on `{1..d+1}`,
/// checking transitivity and incomparability.
pub fn orientation_from_edges(d: usize, edges: &[(u8, u8)]) -> Result<LatticeElement> {
    let n = d + 1;
    let mut rel = vec![vec![false; n + 1]; n + 1];
    for &(i, j) in edges {
        if i == 0 || j == 0 || i as usize > n || j as usize > n || i == j {
            return Err(Error::NotAdmissible(format!("bad edge {i}->{j}")));
        }
        rel[i as usize][j as usize] = true;
    }
    let bad = || Error::NotAdmissible("orientation is not transitive with transitive incomparability".to_string());
    for i in 1..=n {
        for j in 1..=n {
            if rel[i][j] && rel[j][i] {
                return Err(bad());
            }
            for k in 1..=n {
                if rel[i][j] && rel[j][k] && !rel[i][k] {
                    return Err(bad());
                }
                // incomparability is transitive
                let inc = |a: usize, b: usize| a == b || (!rel[a][b] && !rel[b][a]);
                if inc(i, j) && inc(j, k) && !inc(i, k) {
                    return Err(bad());
                }
            }
        }
    }
    // block of v = number of distinct predecessor-classes below it
    let mut level = vec![0u8; n];
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| (1..=n).filter(|&u| rel[u][v]).count());
    let mut b = 0u8;
    for (pos, &v) in order.iter().enumerate() {
        if pos > 0 && rel[order[pos - 1]][v] {
            b += 1;
        }
        level[v - 1] = b;
    }
    Ok(LatticeElement { kind: LatticeKind::Permutohedron(d), payload: Payload::Orient(Some(level)) })
}

fn fmt_set<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "}}")
}

/// Blocks `(positive part, negative part)` of a subspace generic point,
/// sorted by minimum, plus the zero set.
fn sub_blocks(v: &[i8]) -> (Vec<u8>, Vec<(Vec<u8>, Vec<u8>)>) {
    let zero = subspace::zero_set(v).into_iter().map(|i| i as u8).collect();
    let labels = subspace::dim(v);
    let mut blocks = vec![(Vec::new(), Vec::new()); labels];
    for (i, &x) in v.iter().enumerate() {
        if x > 0 {
            blocks[x as usize - 1].0.push(i as u8 + 1);
        } else if x < 0 {
            blocks[(-x) as usize - 1].1.push(i as u8 + 1);
        }
    }
    (zero, blocks)
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.payload) {
            (LatticeKind::Boolean(_), Payload::Subset(y)) => {
                write!(f, "bool:")?;
                fmt_set(f, y)
            }
            (_, Payload::Subset(y)) => {
                write!(f, "simplex:")?;
                fmt_set(f, y)
            }
            (_, Payload::Poly(p)) => match p {
                PolyFace::Full => write!(f, "poly:full"),
                PolyFace::Edge(i) => write!(f, "poly:e{i}"),
                PolyFace::Vertex(i) => write!(f, "poly:v{i}"),
                PolyFace::Empty => write!(f, "poly:empty"),
            },
            (LatticeKind::Cube(_), Payload::Signed(j)) => match j {
                Some(j) => {
                    write!(f, "cube:")?;
                    fmt_set(f, j)
                }
                None => write!(f, "cube:empty"),
            },
            (_, Payload::Signed(j)) => match j {
                Some(j) => {
                    write!(f, "oct:")?;
                    fmt_set(f, j)
                }
                None => write!(f, "oct:full"),
            },
            (_, Payload::Orient(o)) => match o {
                Some(o) => {
                    write!(f, "perm:")?;
                    for (i, b) in blocks_of(o).iter().enumerate() {
                        if i > 0 {
                            write!(f, "<")?;
                        }
                        fmt_set(f, b)?;
                    }
                    Ok(())
                }
                None => write!(f, "perm:1"),
            },
            (LatticeKind::Partition(_), Payload::Sub(v)) => {
                write!(f, "part:")?;
                let (_, blocks) = sub_blocks(v);
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    fmt_set(f, &b.0)?;
                }
                Ok(())
            }
            (k, Payload::Sub(v)) => {
                let tag = if matches!(k, LatticeKind::CoupledT(_)) { "tb" } else { "td" };
                write!(f, "{tag}:Z")?;
                let (zero, blocks) = sub_blocks(v);
                fmt_set(f, &zero)?;
                for b in &blocks {
                    write!(f, "|")?;
                    fmt_set(f, &b.0)?;
                    if !b.1.is_empty() {
                        write!(f, "+")?;
                        fmt_set(f, &b.1)?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn parse_set<T: core::str::FromStr>(s: &str) -> Result<Vec<T>> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected {{…}}, got {s}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad entry {t}")))).collect()
}

impl LatticeElement {
    /// Parses the one-line text form produced by `Display`. The element is
    /// checked for well-formedness but not for membership in the lattice.
    pub fn parse(kind: LatticeKind, s: &str) -> Result<LatticeElement> {
        let kind = kind.normalized();
        let (tag, body) = s.split_once(':').ok_or_else(|| Error::Parse(format!("missing tag in {s}")))?;
        let n = kind.ground();
        let in_range = |i: i64| i >= 1 && i <= n as i64;
        let payload = match (kind, tag) {
            (LatticeKind::Boolean(_), "bool") | (LatticeKind::Simplex(_), "simplex") => {
                let mut y: Vec<u8> = parse_set(body)?;
                y.sort_unstable();
                y.dedup();
                if y.iter().any(|&i| !in_range(i as i64)) {
                    return Err(Error::Parse(format!("point out of range in {s}")));
                }
                Payload::Subset(y)
            }
            (LatticeKind::Polygon(m), "poly") => {
                let face = match body {
                    "full" => PolyFace::Full,
                    "empty" => PolyFace::Empty,
                    _ => {
                        let i: u8 = body[1..].parse().map_err(|_| Error::Parse(format!("bad polygon face {body}")))?;
                        if i == 0 || i as usize > m {
                            return Err(Error::Parse(format!("polygon index out of range in {s}")));
                        }
                        match &body[..1] {
                            "e" => PolyFace::Edge(i),
                            "v" => PolyFace::Vertex(i),
                            _ => return Err(Error::Parse(format!("bad polygon face {body}"))),
                        }
                    }
                };
                Payload::Poly(face)
            }
            (LatticeKind::Cube(_), "cube") | (LatticeKind::Octa(_), "oct") => {
                let none_word = if tag == "cube" { "empty" } else { "full" };
                if body == none_word {
                    Payload::Signed(None)
                } else {
                    let j: Vec<i8> = parse_set(body)?;
                    if j.iter().any(|&x| !in_range(x.abs() as i64)) || !is_admissible(&j) {
                        return Err(Error::NotAdmissible(s.into()));
                    }
                    Payload::Signed(Some(sorted_by_abs(j)))
                }
            }
            (LatticeKind::Permutohedron(_), "perm") => {
                if body == "1" {
                    Payload::Orient(None)
                } else {
                    let mut level = vec![u8::MAX; n];
                    for (b, part) in body.split('<').enumerate() {
                        let blk: Vec<u8> = parse_set(part)?;
                        if blk.is_empty() {
                            return Err(Error::Parse(format!("empty block in {s}")));
                        }
                        for v in blk {
                            if !in_range(v as i64) || level[v as usize - 1] != u8::MAX {
                                return Err(Error::NotAdmissible(s.into()));
                            }
                            level[v as usize - 1] = b as u8;
                        }
                    }
                    if level.contains(&u8::MAX) {
                        return Err(Error::NotAdmissible(format!("{s} does not cover every vertex")));
                    }
                    Payload::Orient(Some(level))
                }
            }
            (LatticeKind::Partition(_), "part") => {
                let mut raw = vec![0i8; n];
                for (b, part) in body.split('|').enumerate() {
                    for v in parse_set::<u8>(part)? {
                        if !in_range(v as i64) || raw[v as usize - 1] != 0 {
                            return Err(Error::NotAdmissible(s.into()));
                        }
                        raw[v as usize - 1] = b as i8 + 1;
                    }
                }
                if raw.contains(&0) {
                    return Err(Error::NotAdmissible(format!("{s} is not a partition")));
                }
                Payload::Sub(subspace::canonical(&raw))
            }
            (LatticeKind::CoupledT(_), "tb") | (LatticeKind::CoupledTo(_), "td") => {
                let body = body.strip_prefix('Z').ok_or_else(|| Error::Parse(format!("missing Z in {s}")))?;
                let mut parts = body.split('|');
                let zero: Vec<u8> = parse_set(parts.next().unwrap_or("{}"))?;
                let mut raw = vec![i8::MAX; n];
                let mut place = |v: u8, val: i8| -> Result<()> {
                    if !in_range(v as i64) || raw[v as usize - 1] != i8::MAX {
                        return Err(Error::NotAdmissible(s.into()));
                    }
                    raw[v as usize - 1] = val;
                    Ok(())
                };
                for v in zero {
                    place(v, 0)?;
                }
                for (b, part) in parts.enumerate() {
                    let label = b as i8 + 1;
                    let (pos, neg) = match part.split_once('+') {
                        Some((p, q)) => (parse_set::<u8>(p)?, parse_set::<u8>(q)?),
                        None => (parse_set::<u8>(part)?, Vec::new()),
                    };
                    if pos.is_empty() {
                        return Err(Error::NotAdmissible(s.into()));
                    }
                    for v in pos {
                        place(v, label)?;
                    }
                    for v in neg {
                        place(v, -label)?;
                    }
                }
                if raw.contains(&i8::MAX) {
                    return Err(Error::NotAdmissible(format!("{s} does not cover every coordinate")));
                }
                if matches!(kind, LatticeKind::CoupledTo(_)) && raw.iter().filter(|&&x| x == 0).count() == 1 {
                    return Err(Error::NotAdmissible(format!("{s} has a single zero coordinate")));
                }
                Payload::Sub(subspace::canonical(&raw))
            }
            _ => return Err(Error::Parse(format!("tag {tag} does not match {kind}"))),
        };
        Ok(LatticeElement { kind, payload })
    }

    pub fn rank(&self) -> usize {
        self.payload.rank(self.kind)
    }

    /// Join of two elements of the same kind.
    pub fn join(&self, other: &LatticeElement) -> Result<LatticeElement> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        Ok(LatticeElement { kind: self.kind, payload: self.payload.join(&other.payload, self.kind) })
    }
}

/// Independent `k`-sets of cross-polytope atoms (as subsets `J ⊆ X`, each
/// tuple sorted by atom order, the list sorted).
///
/// For `k >= 3` this is [`octahedron_constructed`]. For `k <= 2` every set of
/// distinct atoms is independent, while the construction only reaches pairs
/// whose witnesses are distinct, so all `k`-subsets are listed instead.
pub fn octahedron_independent_k(d: usize, k: usize) -> Result<Vec<Vec<Vec<u8>>>> {
    if k >= 3 {
        return octahedron_constructed(d, k);
    }
    if d < 1 || k < 1 || k > d || d > 6 {
        return Err(Error::OutOfRange(format!("need 1 <= k <= d <= 6, got d={d}, k={k}")));
    }
    let atoms = subsets_by_size(d);
    let mut out = Vec::new();
    for_each_subset(atoms.len(), k, |s| out.push(s.iter().map(|&i| atoms[i].clone()).collect()));
    Ok(out)
}

/// Tuples built by choosing distinct points `x_1..x_k`, base sets avoiding
/// them, and for each `j` either `x_j ∉ J_j` and `x_j ∈` every other `J`
/// (option 0) or the reverse (option 1).
pub fn octahedron_constructed(d: usize, k: usize) -> Result<Vec<Vec<Vec<u8>>>> {
    if d < 1 || k < 1 || k > d || d > 6 {
        return Err(Error::OutOfRange(format!("need 1 <= k <= d <= 6, got d={d}, k={k}")));
    }
    let key = |j: &Vec<u8>| (j.len(), j.clone());
    let mut out: Vec<Vec<Vec<u8>>> = Vec::new();
    for_each_subset(d, k, |xs| {
        let xs: Vec<u8> = xs.iter().map(|&x| x as u8 + 1).collect();
        let rest: Vec<u8> = (1..=d as u8).filter(|v| !xs.contains(v)).collect();
        let nb = 1usize << rest.len();
        let total = nb.pow(k as u32) << k;
        for code in 0..total {
            let options = code & ((1 << k) - 1);
            let mut c = code >> k;
            let mut tuple = Vec::with_capacity(k);
            for j in 0..k {
                let mask = c % nb;
                c /= nb;
                let mut set: Vec<u8> = rest.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
                for (l, &x) in xs.iter().enumerate() {
                    let opt1 = options >> l & 1 == 1;
                    // option 0: x_l ∉ J_l, x_l ∈ J_i (i ≠ l); option 1 reversed
                    let member = if l == j { opt1 } else { !opt1 };
                    if member {
                        set.push(x);
                    }
                }
                set.sort_unstable();
                tuple.push(set);
            }
            tuple.sort_by_key(key);
            out.push(tuple);
        }
    });
    out.sort_by(|a, b| a.iter().map(key).cmp(b.iter().map(key)));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(l: &Lattice, s: &str) -> usize {
        l.parse(s).unwrap()
    }

    #[test]
    fn sizes() {
        let size = |k| Lattice::new(k).unwrap().len();
        assert_eq!(size(LatticeKind::Boolean(3)), 8);
        assert_eq!(size(LatticeKind::Simplex(2)), 8);
        assert_eq!(size(LatticeKind::Polygon(5)), 12);
        assert_eq!(size(LatticeKind::Cube(2)), 10);
        assert_eq!(size(LatticeKind::Cube(3)), 28);
        assert_eq!(size(LatticeKind::Octa(3)), 28);
        assert_eq!(size(LatticeKind::Permutohedron(2)), 14);
        assert_eq!(size(LatticeKind::Partition(3)), 5);
        assert_eq!(size(LatticeKind::Partition(4)), 15);
        assert_eq!(size(LatticeKind::CoupledT(2)), 6);
        assert_eq!(Lattice::new(LatticeKind::Polygon(3)).unwrap().kind(), LatticeKind::Simplex(2));
    }

    #[test]
    fn join_examples() {
        let b = Lattice::new(LatticeKind::Boolean(3)).unwrap();
        assert_eq!(b.join(el(&b, "bool:{1,3}"), el(&b, "bool:{2,3}")), el(&b, "bool:{3}"));
        let c = Lattice::new(LatticeKind::Cube(2)).unwrap();
        assert_eq!(c.join(el(&c, "cube:{1}"), el(&c, "cube:{-1}")), c.top());
        assert_eq!(c.render(c.top()), "cube:empty");
        let p = Lattice::new(LatticeKind::Partition(3)).unwrap();
        assert_eq!(p.join(el(&p, "part:{1,2}|{3}"), el(&p, "part:{1}|{2,3}")), el(&p, "part:{1,2,3}"));
    }

    #[test]
    fn rank_examples() {
        let p = Lattice::new(LatticeKind::Partition(4)).unwrap();
        assert_eq!(p.rank(el(&p, "part:{1,2}|{3,4}")), 2);
        let t = Lattice::new(LatticeKind::CoupledT(3)).unwrap();
        assert_eq!(t.rank(el(&t, "tb:Z{1}|{2}+{3}")), 2);
        let q = Lattice::new(LatticeKind::Permutohedron(2)).unwrap();
        for a in 1..=q.natoms() {
            assert_eq!(q.rank(a), 1);
        }
    }

    #[test]
    fn atom_lists() {
        let o = Lattice::new(LatticeKind::Octa(3)).unwrap();
        assert_eq!(o.natoms(), 8);
        assert_eq!(o.render(1), "oct:{-1,-2,-3}");
        let q = Lattice::new(LatticeKind::Permutohedron(2)).unwrap();
        assert_eq!(q.natoms(), 6);
        assert_eq!(q.render(1), "perm:{2,3}<{1}");
        let t = Lattice::new(LatticeKind::CoupledT(2)).unwrap();
        assert_eq!(t.natoms(), 4);
        let names: Vec<String> = (1..=4).map(|a| t.render(a)).collect();
        assert_eq!(names, ["tb:Z{}|{1,2}", "tb:Z{}|{1}+{2}", "tb:Z{1}|{2}", "tb:Z{2}|{1}"]);
    }

    #[test]
    fn independence_examples() {
        let b = Lattice::new(LatticeKind::Boolean(3)).unwrap();
        assert!(b.is_independent(&[0, 1, 2]));
        let p = Lattice::new(LatticeKind::Partition(3)).unwrap();
        assert!(!p.is_independent(&[0, 1, 2]));
        assert_eq!(p.minimally_dependent_brute(), vec![vec![0, 1, 2]]);
        let o = Lattice::new(LatticeKind::Octa(3)).unwrap();
        let a = |s: &str| el(&o, s) - 1;
        assert!(o.is_independent(&[a("oct:{1,-2,-3}"), a("oct:{-1,2,-3}"), a("oct:{-1,-2,3}")]));
    }

    #[test]
    fn coupled_t2_min_dep() {
        let t = Lattice::new(LatticeKind::CoupledT(2)).unwrap();
        let md = t.minimally_dependent_brute();
        assert_eq!(md.len(), 4);
        assert!(md.iter().all(|s| s.len() == 3));
        assert!(t.is_independent(&[0, 1]));
    }

    #[test]
    fn octa_independent_tuples() {
        let t3 = octahedron_independent_k(3, 3).unwrap();
        assert_eq!(t3.len(), 8);
        assert!(t3.contains(&vec![vec![1], vec![2], vec![3]]));
        assert_eq!(octahedron_independent_k(3, 2).unwrap().len(), 28);
        // pairs like a({1}), a({1,2}) need the same witness twice
        assert_eq!(octahedron_constructed(3, 2).unwrap().len(), 16);
        // agrees with the literal definition
        let o = Lattice::new(LatticeKind::Octa(3)).unwrap();
        let atom_no = |j: &Vec<u8>| o.index_of_payload(&Payload::Signed(Some(octa_atom(3, j)))).unwrap() - 1;
        let literal = o.independent_sets(3);
        let mut built: Vec<Vec<usize>> = t3
            .iter()
            .map(|t| {
                let mut v: Vec<usize> = t.iter().map(atom_no).collect();
                v.sort_unstable();
                v
            })
            .collect();
        built.sort();
        assert_eq!(built, literal);
        // and at d = 4 for k = 3, 4
        let o4 = Lattice::new(LatticeKind::Octa(4)).unwrap();
        for k in 3..=4 {
            let atom_no = |j: &Vec<u8>| o4.index_of_payload(&Payload::Signed(Some(octa_atom(4, j)))).unwrap() - 1;
            let mut built: Vec<Vec<usize>> = octahedron_independent_k(4, k)
                .unwrap()
                .iter()
                .map(|t| {
                    let mut v: Vec<usize> = t.iter().map(atom_no).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            built.sort();
            assert_eq!(built, o4.independent_sets(k));
        }
    }

    #[test]
    fn orientations() {
        let q = Lattice::new(LatticeKind::Permutohedron(2)).unwrap();
        let bottom = q.element(0);
        assert_eq!(orientation_to_ordered_partition(&bottom).unwrap(), vec![vec![1, 2, 3]]);
        let oj = LatticeElement::parse(LatticeKind::Permutohedron(2), "perm:{2}<{1,3}").unwrap();
        assert_eq!(orientation_to_ordered_partition(&oj).unwrap(), vec![vec![2], vec![1, 3]]);
        let total = LatticeElement::parse(LatticeKind::Permutohedron(2), "perm:{3}<{1}<{2}").unwrap();
        let edges = orientation_edges(&total).unwrap();
        assert_eq!(orientation_from_edges(2, &edges).unwrap(), total);
        assert!(orientation_from_edges(2, &[(1, 2)]).is_err());
        assert!(orientation_from_edges(2, &[(1, 2), (2, 1)]).is_err());
        // inconsistent orientations join to the top
        let x = el(&q, "perm:{1}<{2,3}");
        let y = el(&q, "perm:{2}<{1,3}");
        assert_eq!(q.render(q.join(x, y)), "perm:1");
    }

    #[test]
    fn round_trip_all_kinds() {
        for kind in [
            LatticeKind::Boolean(3),
            LatticeKind::Simplex(3),
            LatticeKind::Polygon(6),
            LatticeKind::Cube(3),
            LatticeKind::Octa(3),
            LatticeKind::Permutohedron(3),
            LatticeKind::Partition(4),
            LatticeKind::CoupledT(3),
            LatticeKind::CoupledTo(4),
        ] {
            let l = Lattice::new(kind).unwrap();
            for x in 0..l.len() {
                assert_eq!(l.parse(&l.render(x)).unwrap(), x, "{}", l.render(x));
            }
        }
    }

    #[test]
    fn subsets_enumerate_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut n0 = 0;
        for_each_subset(3, 0, |_| n0 += 1);
        assert_eq!(n0, 1);
    }
}
