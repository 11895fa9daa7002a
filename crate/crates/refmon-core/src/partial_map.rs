//! Partial injections on a finite (optionally signed) ground set.
//!
//! Maps are applied left to right: `compose(f, g)` is "first `f`, then `g`",
//! matching right actions `x·f·g`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSet {
    pub size: usize,
    pub signed: bool,
}

impl GroundSet {
    pub fn new(size: usize, signed: bool) -> Result<Self> {
        if size == 0 {
            return Err(Error::OutOfRange("ground set size must be positive".into()));
        }
        Ok(GroundSet { size, signed })
    }

    pub fn points(&self) -> Vec<i32> {
        let n = self.size as i32;
        let mut pts: Vec<i32> = (1..=n).collect();
        if self.signed {
            pts.extend((1..=n).map(|p| -p));
        }
        pts
    }

    pub fn contains(&self, p: i32) -> bool {
        let a = p.unsigned_abs() as usize;
        a >= 1 && a <= self.size && (p > 0 || self.signed)
    }
}

/// A partial injection stored as its sorted `(source, target)` pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialMap {
    ground: GroundSet,
    pairs: Vec<(i32, i32)>,
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", a, b)?;
        }
        write!(f, "}}")
    }
}

impl PartialMap {
    /// Builds a map from pairs, checking injectivity, the ground set and (for
    /// signed ground sets) the `±` pairing.
    pub fn new(ground: GroundSet, pairs: impl IntoIterator<Item = (i32, i32)>) -> Result<Self> {
        let mut pairs: Vec<(i32, i32)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::NotAdmissible("source repeated".into()));
            }
        }
        let mut targets: Vec<i32> = pairs.iter().map(|p| p.1).collect();
        targets.sort_unstable();
        if targets.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAdmissible("target repeated".into()));
        }
        if pairs.iter().any(|&(a, b)| !ground.contains(a) || !ground.contains(b)) {
            return Err(Error::NotAdmissible("point outside ground set".into()));
        }
        if ground.signed
            && pairs
                .iter()
                .any(|&(a, b)| pairs.binary_search(&(-a, -b)).is_err())
        {
            return Err(Error::NotAdmissible("signed map without its negative".into()));
        }
        Ok(PartialMap { ground, pairs })
    }

    /// Signed maps given on positive points only; negatives are filled in.
    pub fn signed_from_positive(n: usize, pairs: &[(i32, i32)]) -> Result<Self> {
        let ground = GroundSet::new(n, true)?;
        let all = pairs.iter().flat_map(|&(a, b)| [(a, b), (-a, -b)]);
        PartialMap::new(ground, all)
    }

    pub fn identity(ground: GroundSet) -> Self {
        let pairs = sorted(ground.points().into_iter().map(|p| (p, p)).collect());
        PartialMap { ground, pairs }
    }

    /// Partial identity on `dom` (and `-dom` on signed ground sets).
    pub fn partial_identity(ground: GroundSet, dom: &[i32]) -> Result<Self> {
        let pts = dom.iter().flat_map(|&p| {
            if ground.signed {
                [Some((p, p)), Some((-p, -p))]
            } else {
                [Some((p, p)), None]
            }
        });
        PartialMap::new(ground, pts.flatten())
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn pairs(&self) -> &[(i32, i32)] {
        &self.pairs
    }

    pub fn apply(&self, x: i32) -> Option<i32> {
        self.pairs
            .binary_search_by_key(&x, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn domain(&self) -> Vec<i32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| a == b)
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }
}

fn sorted(mut v: Vec<(i32, i32)>) -> Vec<(i32, i32)> {
    v.sort_unstable();
    v
}

/// First `f`, then `g`.
pub fn compose(f: &PartialMap, g: &PartialMap) -> Result<PartialMap> {
    if f.ground != g.ground {
        return Err(Error::GroundMismatch(f.ground.size, g.ground.size));
    }
    let pairs = sorted(
        f.pairs
            .iter()
            .filter_map(|&(x, y)| g.apply(y).map(|z| (x, z)))
            .collect(),
    );
    Ok(PartialMap { ground: f.ground, pairs })
}

pub fn inverse(f: &PartialMap) -> PartialMap {
    let pairs = sorted(f.pairs.iter().map(|&(a, b)| (b, a)).collect());
    PartialMap { ground: f.ground, pairs }
}

/// Elements in breadth-first order together with the right Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedMonoid<T> {
    pub elements: Vec<T>,
    pub ngens: usize,
    /// `cayley[i * ngens + g]` is the index of `elements[i] · gen[g]`.
    pub cayley: Vec<u32>,
}

impl<T> EnumeratedMonoid<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn right(&self, elem: usize, gen: usize) -> usize {
        self.cayley[elem * self.ngens + gen] as usize
    }

    /// Index reached from the identity by reading `word`.
    pub fn evaluate(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |e, &g| self.right(e, g))
    }
}

/// Breadth-first closure of `{1} ∪ ⟨generators⟩` using `mul` for the right
/// action of a generator. Ties are broken by generator index.
pub fn closure_by<T, F>(identity: T, generators: &[T], cap: usize, mut mul: F) -> Result<EnumeratedMonoid<T>>
where
    T: Ord + Clone,
    F: FnMut(&T, &T) -> T,
{
    let ngens = generators.len();
    let mut index: BTreeMap<T, u32> = BTreeMap::new();
    let mut elements = Vec::new();
    let mut cayley = Vec::new();
    index.insert(identity.clone(), 0);
    elements.push(identity);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let p = mul(&elements[i], g);
            let j = match index.get(&p) {
                Some(&j) => j,
                None => {
                    let j = elements.len() as u32;
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(p.clone(), j);
                    elements.push(p);
                    queue.push_back(j as usize);
                    j
                }
            };
            cayley.push(j);
        }
    }
    Ok(EnumeratedMonoid { elements, ngens, cayley })
}

/// Closure of the monoid generated by partial maps (identity adjoined).
pub fn enumerate_closure(generators: &[PartialMap], cap: usize) -> Result<EnumeratedMonoid<PartialMap>> {
    let first = generators
        .first()
        .ok_or_else(|| Error::OutOfRange("empty generator list".into()))?;
    let ground = first.ground;
    if let Some(g) = generators.iter().find(|g| g.ground != ground) {
        return Err(Error::GroundMismatch(ground.size, g.ground.size));
    }
    closure_by(PartialMap::identity(ground), generators, cap, |a, b| {
        compose(a, b).expect("common ground set")
    })
}
