//! Hand-written presentations of the Boolean and arrangement monoids of
//! types A, B and D, with the explicit conjugating words for the atoms.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{coxeter_matrix, gen_pos, generator_names, CoxeterType};
use crate::graph::Edge;
use crate::idem::find_edge;
use crate::lattice::{Lattice, LatticeKind};
use crate::pipeline::{present_general, push_units, Mode};
use crate::presentation::{GenKind, Presentation, RelFamily, Relation, Word};
use crate::system::SystemKind;
use crate::{Error, Result};

/// Builds the conjugates used in the closed forms. Indices are the
/// Coxeter indices (`s_1…` for A, `s_0…` for B/D); `core` words are
/// already in presentation positions.
#[derive(Debug, Clone, Copy)]
pub struct WordScheme {
    pub ty: CoxeterType,
    pub n: usize,
}

impl WordScheme {
    pub fn s(&self, i: usize) -> usize {
        gen_pos(self.ty, i)
    }

    /// `s_hi s_{hi-1} … s_lo`, empty when `hi < lo`.
    pub fn down(&self, hi: usize, lo: usize) -> Word {
        if hi < lo {
            return Word::new();
        }
        (lo..=hi).rev().map(|i| self.s(i)).collect()
    }

    /// `prefix · core · reverse(prefix)`.
    pub fn conj(prefix: &[usize], core: &[usize]) -> Word {
        let mut w: Word = prefix.to_vec();
        w.extend_from_slice(core);
        w.extend(prefix.iter().rev());
        w
    }

    /// `(s_{i-1}…s_1)(s_{j-1}…s_2) core (s_2…s_{j-1})(s_1…s_{i-1})`, `i < j`.
    pub fn pair(&self, i: usize, j: usize, core: &[usize]) -> Word {
        let mut pre = self.down(i - 1, 1);
        pre.extend(self.down(j - 1, 2));
        Self::conj(&pre, core)
    }

    /// `(s_{i-1}…s_1) core (s_1…s_{i-1})`.
    pub fn single(&self, i: usize, core: &[usize]) -> Word {
        Self::conj(&self.down(i - 1, 1), core)
    }
}

fn cat(parts: &[&[usize]]) -> Word {
    parts.iter().flat_map(|w| w.iter().copied()).collect()
}

fn units(ty: CoxeterType, n: usize, family: &str) -> Result<Presentation> {
    let mut p = Presentation::new(family, vec![(String::from("n"), n as i64)]);
    for name in generator_names(ty, n) {
        p.add_generator(name, GenKind::Unit);
    }
    push_units(&mut p, &coxeter_matrix(ty, n)?);
    Ok(p)
}

fn rel(p: &mut Presentation, family: RelFamily, lhs: Word, rhs: Word) {
    p.push(Relation::new(family, lhs, rhs));
}

/// `x y = y x`.
fn commute(p: &mut Presentation, family: RelFamily, x: &[usize], y: &[usize]) {
    rel(p, family, cat(&[x, y]), cat(&[y, x]));
}

/// `w0 = w1 = …` with a family per link.
fn chain(p: &mut Presentation, first: Word, rest: &[(RelFamily, Word)]) {
    let mut prev = first;
    for (f, w) in rest {
        rel(p, *f, prev, w.clone());
        prev = w.clone();
    }
}

fn arrangement_atom(l: &Lattice, e: Edge) -> String {
    l.render(l.atom(find_edge(l, e).expect("edge is an atom of the arrangement lattice")))
}

/// Boolean reflection monoid of type A (n ≥ 2), B (n ≥ 2) or D (n ≥ 4) on
/// one idempotent `a = X({2,…,n})`.
pub fn present_boolean(ty: CoxeterType, n: usize) -> Result<Presentation> {
    use RelFamily::*;
    SystemKind::Boolean(ty, n).check()?;
    if ty == CoxeterType::D && n < 4 {
        return Err(Error::OutOfRange(format!("closed type D Boolean presentation needs n >= 4, got {n}")));
    }
    let mut p = units(ty, n, &format!("boolean-{}", ty.letter()))?;
    let value = format!("bool:{{{}}}", (2..=n).map(|i| format!("{i}")).collect::<Vec<_>>().join(","));
    let a = vec![p.add_idempotent("a", value)];
    let w = WordScheme { ty, n };
    let s = |i: usize| vec![w.s(i)];
    let s1as1 = cat(&[&s(1), &a, &s(1)]);

    rel(&mut p, Idem1, cat(&[&a, &a]), a.clone());
    let lo = if ty == CoxeterType::B { 0 } else { 2 };
    for i in (lo..n).filter(|&i| i != 1) {
        commute(&mut p, RefIdem, &s(i), &a);
    }
    match ty {
        CoxeterType::A => {}
        CoxeterType::B => {
            rel(&mut p, Iso, cat(&[&a, &s(0)]), a.clone());
            commute(&mut p, RefIdem, &s(0), &s1as1);
        }
        CoxeterType::D => {
            rel(&mut p, RefIdem, cat(&[&s(0), &a]), cat(&[&s1as1, &s(0)]));
        }
    }
    chain(&mut p, cat(&[&a, &s(1), &a]), &[(Iso, cat(&[&a, &s1as1])), (Idem2, cat(&[&s1as1, &a]))]);
    if ty == CoxeterType::D {
        commute(&mut p, RefIdem, &s(0), &WordScheme::conj(&s(2), &s1as1));
    }
    Ok(p)
}

/// Arrangement monoid of type A (n ≥ 4), B (n ≥ 4) or D (n ≥ 4). Smaller
/// A and B cases have no closed form of this shape and go through the
/// general pipeline.
pub fn present_arrangement(ty: CoxeterType, n: usize) -> Result<Presentation> {
    SystemKind::Arrangement(ty, n).check()?;
    if n < 4 {
        if ty == CoxeterType::D {
            return Err(Error::OutOfRange(format!("closed type D arrangement presentation needs n >= 4, got {n}")));
        }
        return present_general(SystemKind::Arrangement(ty, n), Mode::Thinned);
    }
    let family = format!("arr-{}", ty.letter());
    let mut p = units(ty, n, &family)?;
    let w = WordScheme { ty, n };
    match ty {
        CoxeterType::A => arrangement_a(&mut p, w),
        CoxeterType::B => arrangement_b(&mut p, w),
        CoxeterType::D => arrangement_d(&mut p, w),
    }
    Ok(p)
}

fn arrangement_a(p: &mut Presentation, w: WordScheme) {
    use RelFamily::*;
    let l = Lattice::new(LatticeKind::Partition(w.n)).expect("partition lattice");
    let a = vec![p.add_idempotent("a", arrangement_atom(&l, Edge::Plain(1, 2)))];
    let al = |i, j| w.pair(i, j, &a);
    let s = |i: usize| vec![w.s(i)];

    rel(p, Idem1, cat(&[&a, &a]), a.clone());
    rel(p, Iso, cat(&[&a, &s(1)]), a.clone());
    for i in (1..w.n).filter(|&i| i != 2) {
        commute(p, RefIdem, &s(i), &a);
    }
    commute(p, Idem2, &a, &al(2, 3));
    commute(p, Idem2, &a, &al(3, 4));
    chain(p, cat(&[&a, &al(1, 3)]), &[(Idem3a, cat(&[&a, &al(2, 3)])), (Idem3a, cat(&[&al(1, 3), &al(2, 3)]))]);
}

fn arrangement_b(p: &mut Presentation, w: WordScheme) {
    use RelFamily::*;
    let l = Lattice::new(LatticeKind::CoupledT(w.n)).expect("type B arrangement lattice");
    let a1 = vec![p.add_idempotent("a1", arrangement_atom(&l, Edge::Plain(1, 2)))];
    let a2 = vec![p.add_idempotent("a2", arrangement_atom(&l, Edge::Loop(1)))];
    let s = |i: usize| vec![w.s(i)];
    let d12 = WordScheme::conj(&s(0), &a1);
    let al = |i, j| w.pair(i, j, &a1);
    let de = |i, j| w.pair(i, j, &d12);
    let ep = |i| w.single(i, &a2);

    rel(p, Idem1, cat(&[&a1, &a1]), a1.clone());
    rel(p, Idem1, cat(&[&a2, &a2]), a2.clone());
    rel(p, Iso, cat(&[&a1, &s(1)]), a1.clone());
    rel(p, Iso, cat(&[&a2, &s(0)]), a2.clone());
    for i in (0..w.n).filter(|&i| i != 0 && i != 2) {
        commute(p, RefIdem, &s(i), &a1);
    }
    for i in (0..w.n).filter(|&i| i != 1) {
        commute(p, RefIdem, &s(i), &a2);
    }
    for j in 3..=w.n {
        commute(p, RefIdem, &s(0), &al(2, j));
    }
    for j in 3..=w.n {
        commute(p, RefIdem, &s(0), &de(2, j));
    }
    commute(p, RefIdem, &s(1), &d12);
    commute(p, RefIdem, &s(0), &ep(2));

    commute(p, Idem2, &a1, &al(2, 3));
    commute(p, Idem2, &a2, &al(2, 3));
    commute(p, Idem2, &a1, &al(3, 4));
    commute(p, Idem2, &a1, &d12);
    chain(
        p,
        cat(&[&a1, &a2]),
        &[
            (Idem2, cat(&[&a2, &a1])),
            (Idem3a, cat(&[&a2, &ep(2)])),
            (Idem2, cat(&[&ep(2), &a2])),
            (Idem3a, cat(&[&d12, &a1])),
        ],
    );
    chain(p, cat(&[&a1, &al(1, 3)]), &[(Idem3a, cat(&[&a1, &al(2, 3)])), (Idem3a, cat(&[&al(1, 3), &al(2, 3)]))]);
    chain(p, cat(&[&a1, &de(1, 3)]), &[(Idem3a, cat(&[&de(1, 3), &de(2, 3)])), (Idem3a, cat(&[&a1, &de(2, 3)]))]);
    rel(p, Idem3a, cat(&[&a1, &al(2, 3), &de(1, 3)]), cat(&[&a2, &ep(2), &ep(3)]));
}

fn arrangement_d(p: &mut Presentation, w: WordScheme) {
    use RelFamily::*;
    let l = Lattice::new(LatticeKind::CoupledTo(w.n)).expect("type D arrangement lattice");
    let a = vec![p.add_idempotent("a", arrangement_atom(&l, Edge::Plain(1, 2)))];
    let s = |i: usize| vec![w.s(i)];
    // g⁻¹ a g with g = s2 s1 s0 s2
    let core = WordScheme::conj(&[w.s(2), w.s(0), w.s(1), w.s(2)], &a);
    let al = |i, j| w.pair(i, j, &a);
    let de = |i, j| w.pair(i, j, &core);

    rel(p, Idem1, cat(&[&a, &a]), a.clone());
    rel(p, Iso, cat(&[&a, &s(1)]), a.clone());
    for i in (0..w.n).filter(|&i| i != 2) {
        commute(p, RefIdem, &s(i), &a);
    }
    for j in 4..=w.n {
        commute(p, RefIdem, &s(0), &al(3, j));
    }
    for j in 4..=w.n {
        commute(p, RefIdem, &s(0), &de(3, j));
    }
    commute(p, RefIdem, &s(3), &de(1, 2));

    commute(p, Idem2, &a, &al(3, 4));
    commute(p, Idem2, &a, &de(1, 2));
    if w.n == 4 {
        commute(p, Idem2, &a, &de(3, 4));
    }
    chain(
        p,
        cat(&[&a, &al(1, 3)]),
        &[
            (Idem3a, cat(&[&a, &al(2, 3)])),
            (Idem2, cat(&[&al(2, 3), &a])),
            (Idem3a, cat(&[&al(1, 3), &al(2, 3)])),
        ],
    );
    chain(p, cat(&[&a, &de(1, 3)]), &[(Idem3a, cat(&[&de(1, 3), &de(2, 3)])), (Idem3a, cat(&[&a, &de(2, 3)]))]);
    chain(
        p,
        cat(&[&a, &al(2, 3), &de(2, 3)]),
        &[(Idem3a, cat(&[&a, &de(1, 2), &de(2, 3)])), (Idem3a, cat(&[&a, &al(2, 3), &de(1, 2), &de(2, 3)]))],
    );
    rel(p, Idem3a, cat(&[&a, &al(2, 3), &de(1, 3)]), cat(&[&a, &al(1, 3), &al(2, 3), &de(1, 3)]));
    rel(
        p,
        Idem3a,
        cat(&[&a, &al(2, 3), &al(3, 4), &de(1, 2), &de(2, 3), &de(3, 4)]),
        cat(&[&a, &al(3, 4), &de(1, 2), &de(3, 4)]),
    );
}
