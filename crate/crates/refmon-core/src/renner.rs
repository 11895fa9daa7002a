//! Renner monoids of the classical algebraic monoids and of Solomon's
//! permutohedral example, as reflection monoids of signed/unsigned
//! permutation systems, with their explicit presentations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::charmap::char_maps;
use crate::closed::{present_boolean, WordScheme};
use crate::coxeter::{coxeter_matrix, generator_names, CoxeterType};
use crate::lattice::{for_each_subset, octa_atom, Lattice, LatticeKind, Payload};
use crate::pipeline::push_units;
use crate::presentation::{GenKind, Presentation, RelFamily, Relation, Word};
use crate::system::SystemKind;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    /// `M_n`, parameter `n`.
    GeneralLinear,
    /// `MSp_{2ℓ}`.
    Symplectic,
    /// `MSO_{2ℓ+1}`.
    OrthogonalOdd,
    /// `MSO_{2ℓ}`.
    OrthogonalEven,
    /// The closure of `k^×ρ(SL_n)` on `⊗_p Λ^p`, parameter `n`.
    Solomon,
}

/// One row of the table of classical data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalData {
    pub monoid: &'static str,
    pub group: &'static str,
    /// Root system letter; the Weyl group of `C` is that of `B`.
    pub roots: char,
    pub weyl: CoxeterType,
    pub polytope: &'static str,
}

impl ClassicalFamily {
    pub const ALL: [ClassicalFamily; 5] = [
        ClassicalFamily::GeneralLinear,
        ClassicalFamily::OrthogonalOdd,
        ClassicalFamily::Symplectic,
        ClassicalFamily::OrthogonalEven,
        ClassicalFamily::Solomon,
    ];

    pub fn data(self) -> ClassicalData {
        use ClassicalFamily::*;
        let row = |monoid, group, roots, weyl, polytope| ClassicalData { monoid, group, roots, weyl, polytope };
        match self {
            GeneralLinear => row("M_n", "SL_n", 'A', CoxeterType::A, "simplex"),
            OrthogonalOdd => row("MSO_{2l+1}", "SO_{2l+1}", 'B', CoxeterType::B, "cross-polytope"),
            Symplectic => row("MSp_{2l}", "Sp_{2l}", 'C', CoxeterType::B, "cross-polytope"),
            OrthogonalEven => row("MSO_{2l}", "SO_{2l}", 'D', CoxeterType::D, "cross-polytope"),
            Solomon => row("Solomon", "SL_n", 'A', CoxeterType::A, "permutohedron"),
        }
    }

    pub fn cli_name(self) -> &'static str {
        use ClassicalFamily::*;
        match self {
            GeneralLinear => "renner-gl",
            Symplectic => "renner-sp",
            OrthogonalOdd => "renner-so-odd",
            OrthogonalEven => "renner-so-even",
            Solomon => "renner-solomon",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.cli_name() == s || f.cli_name().trim_start_matches("renner-") == s)
            .ok_or_else(|| Error::Parse(format!("unknown classical family {s:?}")))
    }
}

/// The system whose reflection monoid is the Renner monoid of `f` with
/// parameter `n` (or `ℓ`).
pub fn family_system(f: ClassicalFamily, param: usize) -> Result<SystemKind> {
    use ClassicalFamily::*;
    let kind = match f {
        GeneralLinear => SystemKind::Boolean(CoxeterType::A, param),
        Symplectic | OrthogonalOdd => SystemKind::Octa { even: false, ell: param },
        OrthogonalEven => SystemKind::Octa { even: true, ell: param },
        Solomon => {
            if param < 3 {
                return Err(Error::OutOfRange(format!("Solomon's example needs n >= 3, got {param}")));
            }
            SystemKind::Permutohedron(param)
        }
    };
    kind.check()?;
    Ok(kind)
}

/// Conjugating words for the cross-polytope atoms `a(I)`, `I ⊆ {1..ℓ}`
/// sorted, in a presentation whose first `ℓ` generators are `s_0…s_{ℓ-1}`.
#[derive(Debug, Clone, Copy)]
pub struct OctaWords {
    pub even: bool,
    pub ell: usize,
    /// Position of `a = a(∅)` (and of `a(1)` right after it when even).
    pub first: usize,
}

impl OctaWords {
    fn scheme(&self) -> WordScheme {
        WordScheme { ty: if self.even { CoxeterType::D } else { CoxeterType::B }, n: self.ell }
    }

    /// `ω_i = s_{i-1}…s_1 s_0 s_1…s_{i-1}`, which swaps `±i`.
    pub fn omega(&self, i: usize) -> Word {
        let w = self.scheme();
        w.single(i, &[w.s(0)])
    }

    /// `ω_ij = (s_{i-1}…s_1)(s_{j-1}…s_2) s_0 (s_2…s_{j-1})(s_1…s_{i-1})`,
    /// which is `(i,-j)(-i,j)` in the even group.
    pub fn omega_pair(&self, i: usize, j: usize) -> Word {
        let w = self.scheme();
        w.pair(i, j, &[w.s(0)])
    }

    pub fn alpha(&self, set: &[u8]) -> Word {
        let idx: Vec<usize> = set.iter().map(|&i| i as usize).collect();
        let mut prefix = Word::new();
        let core: Word;
        if !self.even {
            for &i in &idx {
                prefix.extend(self.omega(i));
            }
            core = vec![self.first];
        } else {
            let pairs = idx.len() / 2;
            for p in 0..pairs {
                prefix.extend(self.omega_pair(idx[2 * p], idx[2 * p + 1]));
            }
            if idx.len() % 2 == 0 {
                core = vec![self.first];
            } else {
                // a(1) moved to the last index
                let last = *idx.last().unwrap();
                prefix.extend(self.scheme().down(last - 1, 1));
                core = vec![self.first + 1];
            }
        }
        WordScheme::conj(&prefix, &core)
    }

    /// Word for an admissible `J ⊆ ±X` (entries sorted by absolute value):
    /// with `i_1…i_k` the coordinates missing from `J`, the product of the
    /// `α(i_1…î_m…i_k, J⁺)` when `k > 1`, and `α(J⁺)α(i_1, J⁺)` when `k = 1`.
    pub fn epsilon(&self, j: &[i8]) -> Word {
        let plus: Vec<u8> = j.iter().filter(|&&x| x > 0).map(|&x| x as u8).collect();
        let missing: Vec<u8> = (1..=self.ell as u8).filter(|&i| !j.iter().any(|&x| x.unsigned_abs() == i)).collect();
        let with = |extra: &[u8]| {
            let mut s: Vec<u8> = plus.iter().chain(extra).copied().collect();
            s.sort_unstable();
            self.alpha(&s)
        };
        match missing.len() {
            0 => self.alpha(&plus),
            1 => [with(&[]), with(&missing)].concat(),
            _ => (0..missing.len())
                .flat_map(|m| {
                    let rest: Vec<u8> = missing.iter().enumerate().filter(|&(i, _)| i != m).map(|(_, &x)| x).collect();
                    with(&rest)
                })
                .collect(),
        }
    }
}

/// Sorted subsets of `{1..n}`, by size then lexicographically.
fn subsets(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for k in 0..=n {
        for_each_subset(n, k, |s| out.push(s.iter().map(|&i| i as u8 + 1).collect()));
    }
    out
}

fn range(lo: usize, hi: usize) -> Vec<u8> {
    (lo..=hi).map(|i| i as u8).collect()
}

fn union(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut u: Vec<u8> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

fn units(ty: CoxeterType, n: usize, family: &str, param: &str) -> Result<Presentation> {
    let mut p = Presentation::new(family, vec![(String::from(param), n as i64)]);
    for name in generator_names(ty, n) {
        p.add_generator(name, GenKind::Unit);
    }
    push_units(&mut p, &coxeter_matrix(ty, n)?);
    Ok(p)
}

fn rel(p: &mut Presentation, family: RelFamily, lhs: Word, rhs: Word) {
    p.push(Relation::new(family, lhs, rhs));
}

pub fn present_renner(f: ClassicalFamily, param: usize) -> Result<Presentation> {
    family_system(f, param)?;
    match f {
        ClassicalFamily::GeneralLinear => {
            let mut p = present_boolean(CoxeterType::A, param)?;
            p.family = String::from(f.cli_name());
            Ok(p)
        }
        ClassicalFamily::Symplectic | ClassicalFamily::OrthogonalOdd => octa(false, param, "renner-sp"),
        ClassicalFamily::OrthogonalEven => {
            // for ℓ = 2 the even group is A1×A1: s_0 and s_1 are not
            // conjugate and one Iso family is not enough
            if param < 3 {
                return Err(Error::OutOfRange(format!("even orthogonal presentation needs l >= 3, got {param}")));
            }
            octa(true, param, f.cli_name())
        }
        ClassicalFamily::Solomon => solomon(param),
    }
}

/// Image of `a(I)` under a Coxeter generator of the signed group.
fn act_signed(even: bool, set: &[u8], gen: usize) -> Vec<u8> {
    let has = |i: u8| set.contains(&i);
    let mut out: Vec<u8> = match gen {
        0 if !even => {
            if has(1) {
                set.iter().copied().filter(|&x| x != 1).collect()
            } else {
                union(set, &[1])
            }
        }
        0 => match (has(1), has(2)) {
            (true, true) => set.iter().copied().filter(|&x| x > 2).collect(),
            (false, false) => union(set, &[1, 2]),
            _ => set.to_vec(),
        },
        i => set.iter().map(|&x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x }).collect(),
    };
    out.sort_unstable();
    out
}

fn octa(even: bool, ell: usize, family: &str) -> Result<Presentation> {
    use RelFamily::*;
    let ty = if even { CoxeterType::D } else { CoxeterType::B };
    let mut p = units(ty, ell, family, "l")?;
    let l = Lattice::new(LatticeKind::Octa(ell))?;
    let atom_of = |set: &[u8]| l.index_of_payload(&Payload::Signed(Some(octa_atom(ell, set))));
    let first = p.generators.len();
    if even {
        p.add_idempotent("a1", l.render(atom_of(&[])?));
        p.add_idempotent("a2", l.render(atom_of(&[1])?));
    } else {
        p.add_idempotent("a", l.render(atom_of(&[])?));
    }
    let w = OctaWords { even, ell, first };
    let al = |s: &[u8]| w.alpha(s);
    for g in first..p.generators.len() {
        rel(&mut p, Idem1, vec![g, g], vec![g]);
    }

    // commuting orbit representatives: {1..j1} against {j1+ε..j2}
    let shifts: &[usize] = if even { &[0, 1] } else { &[1] };
    for j2 in 1..=ell {
        for j1 in 0..j2 {
            for &e in shifts {
                let (x, y) = (al(&range(1, j1)), al(&range((j1 + e).max(1), j2)));
                rel(&mut p, Idem2, [x.clone(), y.clone()].concat(), [y, x].concat());
            }
        }
    }

    // absorption: (I_1…I_{k-1}, I) realized from a characteristic map,
    // the first k-1 independent, a(I) below their join
    for k in 3..=ell + 1 {
        for f in char_maps(ell, k)? {
            let t = f.realize();
            let (head, last) = t.split_at(k - 1);
            let atoms: Option<Vec<usize>> = head.iter().map(|s| atom_of(s).ok().map(|x| x - 1)).collect();
            let Some(atoms) = atoms else { continue };
            if !f.has_distinct_components() || !l.is_independent(&atoms) {
                continue;
            }
            if !l.leq(atom_of(&last[0])?, l.join_atoms(&atoms)) {
                continue;
            }
            let lhs: Word = head.iter().flat_map(|s| al(s)).collect();
            let rhs = [lhs.clone(), al(&last[0])].concat();
            rel(&mut p, Idem3, lhs, rhs);
        }
    }

    // s α(I) = α(I·s) s; the s_0 relations that reduce to Units are left out
    let all = subsets(ell);
    for gen in 0..ell {
        for set in &all {
            let image = act_signed(even, set, gen);
            if gen == 0 && (!even || image != *set) {
                continue;
            }
            rel(&mut p, RefIdem, [vec![gen], al(set)].concat(), [al(&image), vec![gen]].concat());
        }
    }

    // (α(1,I)α(2,I), s_1), and for the full signed group (α(I)α(1,I), s_0)
    let s1 = WordScheme { ty, n: ell }.s(1);
    for set in subsets(ell).iter().filter(|s| !s.contains(&1) && !s.contains(&2)) {
        let e = [al(&union(&[1], set)), al(&union(&[2], set))].concat();
        rel(&mut p, Iso, [e.clone(), vec![s1]].concat(), e);
    }
    if !even {
        for set in subsets(ell).iter().filter(|s| !s.contains(&1)) {
            let e = [al(set), al(&union(&[1], set))].concat();
            rel(&mut p, Iso, [e.clone(), vec![0]].concat(), e);
        }
    }
    Ok(p)
}

/// Word `u` with `J·u = {1..|J|}`: adjacent transpositions pushing the
/// elements of `J` down.
pub fn solomon_omega(j: &[u8]) -> Word {
    let k = j.len() as u8;
    let mut cur = j.to_vec();
    let mut word = Word::new();
    while cur.iter().any(|&x| x > k) {
        let i = (1..).find(|&i: &u8| cur.contains(&(i + 1)) && !cur.contains(&i)).unwrap();
        for x in cur.iter_mut().filter(|x| **x == i + 1) {
            *x = i;
        }
        word.push(i as usize - 1);
    }
    word
}

/// `α_J = ω_J a_{|J|} ω_J⁻¹`, with `a_k` at position `first + k - 1`.
pub fn solomon_alpha(first: usize, j: &[u8]) -> Word {
    WordScheme::conj(&solomon_omega(j), &[first + j.len() - 1])
}

fn solomon(n: usize) -> Result<Presentation> {
    use RelFamily::*;
    let mut p = units(CoxeterType::A, n, "renner-solomon", "n")?;
    let l = Lattice::new(LatticeKind::Permutohedron(n - 1))?;
    let atom_of = |j: &[u8]| {
        let blocks = (1..=n as u8).map(|v| j.contains(&v) as u8).collect();
        l.index_of_payload(&Payload::Orient(Some(blocks)))
    };
    let first = p.generators.len();
    for k in 1..n {
        p.add_idempotent(format!("a{k}"), l.render(atom_of(&range(1, k))?));
    }
    let al = |j: &[u8]| solomon_alpha(first, j);
    let proper: Vec<Vec<u8>> = subsets(n).into_iter().filter(|j| !j.is_empty() && j.len() < n).collect();
    for g in first..p.generators.len() {
        rel(&mut p, Idem1, vec![g, g], vec![g]);
    }

    for n0 in 0..n {
        for n1 in n0.max(1)..n {
            for n2 in n0.max(1)..n {
                if n1 + n2 - n0 > n {
                    continue;
                }
                let j = range(1, n1);
                let k = union(&range(1, n0), &range(n1 + 1, n1 + n2 - n0));
                rel(&mut p, Idem2, [al(&j), al(&k)].concat(), [al(&k), al(&j)].concat());
            }
        }
    }

    let proper_set = |s: &Vec<u8>| !s.is_empty() && s.len() < n;
    for f in char_maps(n, 3)? {
        let t = f.realize();
        if !t.iter().all(proper_set) || !f.has_distinct_components() {
            continue;
        }
        let inter: Vec<u8> = t[0].iter().copied().filter(|x| t[1].contains(x)).collect();
        if inter == t[0] || inter == t[1] {
            continue;
        }
        let lhs = [al(&t[0]), al(&t[1])].concat();
        rel(&mut p, Idem3, lhs.clone(), [lhs, al(&t[2])].concat());
    }

    for i in 1..n {
        for j in &proper {
            let mut js: Vec<u8> =
                j.iter().map(|&x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x }).collect();
            js.sort_unstable();
            rel(&mut p, RefIdem, [vec![i - 1], al(j)].concat(), [al(&js), vec![i - 1]].concat());
        }
    }

    let top: Word = proper.iter().flat_map(|j| al(j)).collect();
    rel(&mut p, Iso, [top.clone(), vec![0]].concat(), top);
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport {
    pub n: usize,
    /// Number of tuples `τ = (J_1…J_{n-1})`, `|J_i| = i`.
    pub tuples: usize,
    /// `v_τ` for `J_i = {1..i}`.
    pub v_tau0: Vec<u32>,
    /// `v` of the complementary tuple.
    pub v_tau0_bar: Vec<u32>,
    /// Every `v_τ` satisfies the prefix-sum bounds of the permutohedron.
    pub inside: bool,
    /// Every permutation of `(0,…,n-1)` occurs as some `v_τ`.
    pub all_vertices: bool,
    /// Distinct points `v_τ`.
    pub points: usize,
}

impl VertexReport {
    pub fn ok(&self) -> bool {
        self.inside && self.all_vertices && self.v_tau0_bar == (0..self.n as u32).collect::<Vec<_>>()
    }
}

/// Enumerates the tuples `τ`, their occurrence vectors `v_τ`, and checks
/// that the `v_τ` span exactly the permutohedron with parameters `0…n-1`.
pub fn solomon_vertex_check(n: usize) -> Result<VertexReport> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("vertex check needs 2 <= n <= 5, got {n}")));
    }
    let by_size: Vec<Vec<Vec<u8>>> =
        (1..n).map(|i| subsets(n).into_iter().filter(|s| s.len() == i).collect()).collect();
    let mut points = alloc::collections::BTreeSet::new();
    let mut tuples = 0usize;
    let mut inside = true;
    let mut choice = vec![0usize; n - 1];
    loop {
        let mut v = vec![0u32; n];
        for (i, &c) in choice.iter().enumerate() {
            for &x in &by_size[i][c] {
                v[x as usize - 1] += 1;
            }
        }
        tuples += 1;
        let mut sorted = v.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut acc = 0;
        for (k, &x) in sorted.iter().enumerate() {
            acc += x;
            let bound: u32 = (0..=k as u32).map(|m| n as u32 - 1 - m).sum();
            inside &= acc <= bound;
        }
        inside &= acc == (n * (n - 1) / 2) as u32;
        points.insert(v);
        // odometer
        let mut i = 0;
        loop {
            if i == choice.len() {
                let v_of = |sets: &[Vec<u8>]| {
                    let mut v = vec![0u32; n];
                    for s in sets {
                        for &x in s {
                            v[x as usize - 1] += 1;
                        }
                    }
                    v
                };
                let tau0: Vec<Vec<u8>> = (1..n).map(|i| range(1, i)).collect();
                let bar: Vec<Vec<u8>> = (1..n).map(|i| range(n - i + 1, n)).collect();
                let mut all_vertices = true;
                let mut perm: Vec<u32> = (0..n as u32).collect();
                permutations(&mut perm, 0, &mut |q| all_vertices &= points.contains(q));
                return Ok(VertexReport {
                    n,
                    tuples,
                    v_tau0: v_of(&tau0),
                    v_tau0_bar: v_of(&bar),
                    inside,
                    all_vertices,
                    points: points.len(),
                });
            }
            choice[i] += 1;
            if choice[i] < by_size[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn permutations(v: &mut [u32], k: usize, f: &mut dyn FnMut(&[u32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}
