//! Weyl groups of types A, B and D as (signed) permutation groups.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::presentation::Word;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoxeterType {
    A,
    B,
    D,
}

impl CoxeterType {
    pub fn letter(self) -> char {
        match self {
            CoxeterType::A => 'a',
            CoxeterType::B => 'b',
            CoxeterType::D => 'd',
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(CoxeterType::A),
            "b" | "B" => Ok(CoxeterType::B),
            "d" | "D" => Ok(CoxeterType::D),
            _ => Err(Error::Parse(format!("unknown Coxeter type {s}"))),
        }
    }

    fn has_s0(self) -> bool {
        self != CoxeterType::A
    }
}

/// Images of `1..n` in `±{1..n}`; `img[i]` is the image of `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    img: Vec<i8>,
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.img.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { img: (1..=n as i8).collect() }
    }

    pub fn from_images(img: Vec<i8>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n + 1];
        for &x in &img {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::NotAdmissible(format!("not a signed permutation: {img:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { img })
    }

    /// The involution swapping `p ↔ q` and `-p ↔ -q` (points may be negative).
    pub fn swap(n: usize, p: i8, q: i8) -> Self {
        let mut img: Vec<i8> = (1..=n as i8).collect();
        let set = |img: &mut Vec<i8>, from: i8, to: i8| {
            if from > 0 {
                img[from as usize - 1] = to;
            } else {
                img[(-from) as usize - 1] = -to;
            }
        };
        set(&mut img, p, q);
        set(&mut img, q, p);
        SignedPerm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[i8] {
        &self.img
    }

    /// Image of a signed point.
    pub fn apply(&self, p: i8) -> i8 {
        let v = self.img[p.unsigned_abs() as usize - 1];
        if p > 0 {
            v
        } else {
            -v
        }
    }

    /// `self` then `other`.
    pub fn then(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm { img: self.img.iter().map(|&x| other.apply(x)).collect() }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut img = vec![0i8; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            let p = i as i8 + 1;
            if x > 0 {
                img[x as usize - 1] = p;
            } else {
                img[(-x) as usize - 1] = -p;
            }
        }
        SignedPerm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| x == i as i8 + 1)
    }

    pub fn negations(&self) -> usize {
        self.img.iter().filter(|&&x| x < 0).count()
    }

    /// Magnitudes first, then signs (`+` before `-`).
    pub fn order_cmp(&self, other: &SignedPerm) -> Ordering {
        let mags = |p: &SignedPerm| p.img.iter().map(|x| x.unsigned_abs()).collect::<Vec<_>>();
        let sgns = |p: &SignedPerm| p.img.iter().map(|&x| x < 0).collect::<Vec<_>>();
        mags(self).cmp(&mags(other)).then_with(|| sgns(self).cmp(&sgns(other)))
    }

    fn dense_rank(&self) -> usize {
        let n = self.img.len();
        let mut rank = 0usize;
        let mut used = 0u32;
        for (i, &x) in self.img.iter().enumerate() {
            let a = x.unsigned_abs() as u32 - 1;
            let smaller_unused = (0..a).filter(|b| used & (1 << b) == 0).count();
            rank = rank * (n - i) + smaller_unused;
            used |= 1 << a;
        }
        let mut signs = 0usize;
        for &x in &self.img {
            signs = signs * 2 + usize::from(x < 0);
        }
        rank * (1 << n) + signs
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Coxeter generators `s0 (B, D), s1, …, s_{n-1}` as signed permutations.
pub fn generators(ty: CoxeterType, n: usize) -> Result<Vec<SignedPerm>> {
    check_rank(ty, n)?;
    let mut gens = Vec::new();
    match ty {
        CoxeterType::A => {}
        CoxeterType::B => gens.push(SignedPerm::swap(n, 1, -1)),
        CoxeterType::D => gens.push(SignedPerm::swap(n, 1, -2)),
    }
    for i in 1..n as i8 {
        gens.push(SignedPerm::swap(n, i, i + 1));
    }
    Ok(gens)
}

pub fn generator_names(ty: CoxeterType, n: usize) -> Vec<String> {
    let start = if ty.has_s0() { 0 } else { 1 };
    (start..n).map(|i| format!("s{i}")).collect()
}

fn check_rank(ty: CoxeterType, n: usize) -> Result<()> {
    if n < 2 || n > 7 {
        return Err(Error::OutOfRange(format!("type {} needs 2 <= n <= 7, got {n}", ty.letter())));
    }
    Ok(())
}

/// Position of `s_i` in the generator list.
pub fn gen_pos(ty: CoxeterType, i: usize) -> usize {
    if ty.has_s0() {
        i
    } else {
        i - 1
    }
}

/// `m[i][j]` indexed by generator position.
pub fn coxeter_matrix(ty: CoxeterType, n: usize) -> Result<Vec<Vec<u32>>> {
    check_rank(ty, n)?;
    let names: Vec<usize> = if ty.has_s0() { (0..n).collect() } else { (1..n).collect() };
    let k = names.len();
    let mut m = vec![vec![2u32; k]; k];
    for (p, &i) in names.iter().enumerate() {
        for (q, &j) in names.iter().enumerate() {
            m[p][q] = if i == j {
                1
            } else {
                let (lo, hi) = (i.min(j), i.max(j));
                match (ty, lo, hi) {
                    (CoxeterType::B, 0, 1) => 4,
                    (CoxeterType::D, 0, 1) => 2,
                    (CoxeterType::D, 0, 2) => 3,
                    (_, 0, _) => 2,
                    (_, a, b) if b == a + 1 => 3,
                    _ => 2,
                }
            };
        }
    }
    Ok(m)
}

/// Left-to-right product of generators.
pub fn evaluate_word(word: &[usize], ty: CoxeterType, n: usize) -> Result<SignedPerm> {
    let gens = generators(ty, n)?;
    let mut g = SignedPerm::identity(n);
    for &i in word {
        let s = gens.get(i).ok_or(Error::BadIndex(i))?;
        g = g.then(s);
    }
    Ok(g)
}

/// Generator positions, one per component of the Coxeter graph with the even
/// labelled edges dropped. Within a component `s1` is preferred, otherwise the
/// smallest position.
pub fn hyperplane_orbit_reps(ty: CoxeterType, n: usize) -> Result<Vec<usize>> {
    let m = coxeter_matrix(ty, n)?;
    let k = m.len();
    let mut comp: Vec<usize> = (0..k).collect();
    fn find(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && m[i][j] % 2 == 1 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a.max(b)] = a.min(b);
            }
        }
    }
    let preferred = gen_pos(ty, 1);
    let mut reps = Vec::new();
    for i in 0..k {
        if find(&mut comp, i) == i {
            let root = i;
            if find(&mut comp, preferred) == root {
                reps.push(preferred);
            } else {
                reps.push(root);
            }
        }
    }
    reps.sort_unstable();
    Ok(reps)
}

/// A finite group given by generating signed permutations, fully enumerated
/// and sorted by [`SignedPerm::order_cmp`] (so the identity is index 0).
#[derive(Debug, Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<SignedPerm>,
    gen_names: Vec<String>,
    elems: Vec<SignedPerm>,
    dense: Vec<u32>,
    right_gen: Vec<u32>,
    inv: Vec<u32>,
    words: Vec<Word>,
    /// Element indices in breadth-first (shortlex word) order.
    bfs: Vec<u32>,
    /// Full multiplication table for small groups.
    table: Option<Vec<u32>>,
    coxeter: Option<(CoxeterType, Vec<Vec<u32>>)>,
}

const TABLE_LIMIT: usize = 1024;

impl Group {
    pub fn coxeter(ty: CoxeterType, n: usize) -> Result<Group> {
        let gens = generators(ty, n)?;
        let mut g = Group::generated(n, gens, generator_names(ty, n))?;
        g.coxeter = Some((ty, coxeter_matrix(ty, n)?));
        Ok(g)
    }

    pub fn generated(degree: usize, gens: Vec<SignedPerm>, gen_names: Vec<String>) -> Result<Group> {
        if degree == 0 || degree > 7 {
            return Err(Error::OutOfRange(format!("degree {degree}")));
        }
        let unset = u32::MAX;
        let mut dense = vec![unset; factorial(degree) << degree];
        // closure
        let mut elems = vec![SignedPerm::identity(degree)];
        dense[elems[0].dense_rank()] = 0;
        let mut i = 0;
        while i < elems.len() {
            for s in &gens {
                let p = elems[i].then(s);
                let r = p.dense_rank();
                if dense[r] == unset {
                    dense[r] = elems.len() as u32;
                    elems.push(p);
                }
            }
            i += 1;
        }
        elems.sort_by(|a, b| a.order_cmp(b));
        for (idx, e) in elems.iter().enumerate() {
            dense[e.dense_rank()] = idx as u32;
        }
        let k = gens.len();
        let mut right_gen = vec![0u32; elems.len() * k];
        for (idx, e) in elems.iter().enumerate() {
            for (j, s) in gens.iter().enumerate() {
                right_gen[idx * k + j] = dense[e.then(s).dense_rank()];
            }
        }
        let inv = elems.iter().map(|e| dense[e.inverse().dense_rank()]).collect();
        // breadth-first words, ties by generator index
        let mut words: Vec<Option<Word>> = vec![None; elems.len()];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for j in 0..k {
                let y = right_gen[x * k + j] as usize;
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(j);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        let words: Vec<Word> = words.into_iter().map(|w| w.unwrap()).collect();
        let mut bfs: Vec<u32> = (0..elems.len() as u32).collect();
        bfs.sort_by(|&a, &b| {
            let (wa, wb) = (&words[a as usize], &words[b as usize]);
            wa.len().cmp(&wb.len()).then_with(|| wa.cmp(wb))
        });
        let table = (elems.len() <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(elems.len() * elems.len());
            for x in &elems {
                for y in &elems {
                    t.push(dense[x.then(y).dense_rank()]);
                }
            }
            t
        });
        Ok(Group { degree, gens, gen_names, elems, dense, right_gen, inv, words, bfs, table, coxeter: None })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[SignedPerm] {
        &self.gens
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn coxeter_type(&self) -> Option<CoxeterType> {
        self.coxeter.as_ref().map(|c| c.0)
    }

    pub fn coxeter_matrix(&self) -> Option<&Vec<Vec<u32>>> {
        self.coxeter.as_ref().map(|c| &c.1)
    }

    pub fn elem(&self, i: usize) -> &SignedPerm {
        &self.elems[i]
    }

    pub fn elems(&self) -> &[SignedPerm] {
        &self.elems
    }

    pub fn index_of(&self, p: &SignedPerm) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        match self.dense[p.dense_rank()] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// Group index of generator `j`.
    pub fn gen_index(&self, j: usize) -> usize {
        self.right_gen(0, j)
    }

    /// Index of `elem(x) · gens[j]`.
    pub fn right_gen(&self, x: usize, j: usize) -> usize {
        self.right_gen[x * self.gens.len() + j] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        if let Some(t) = &self.table {
            return t[x * self.elems.len() + y] as usize;
        }
        let p = self.elems[x].then(&self.elems[y]);
        self.dense[p.dense_rank()] as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// Element indices in breadth-first order (shortlex on their words).
    pub fn bfs_order(&self) -> &[u32] {
        &self.bfs
    }

    /// Breadth-first word for element `x`.
    pub fn word(&self, x: usize) -> &Word {
        &self.words[x]
    }

    pub fn eval(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |x, &j| self.right_gen(x, j))
    }

    /// All conjugates `w⁻¹ s w` of the generators, sorted by index.
    pub fn reflections(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for j in 0..self.gens.len() {
            let s = self.gen_index(j);
            for w in 0..self.order() {
                out.push(self.mul(self.mul(self.inv(w), s), w));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}
