//! Certification: relation soundness by evaluation, presented orders by
//! Todd–Coxeter enumeration, and brute-force oracles used by the tests.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::{CoxeterType, Group};
use crate::lattice::{for_each_subset, Lattice};
use crate::presentation::{GenKind, Generator, Presentation, RelFamily, Word};
use crate::system::System;
use crate::{Error, Result};

const UNDEF: u32 = u32::MAX;

/// Complete right-multiplication table of a finitely presented monoid.
/// Class 0 is the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceTable {
    ngens: usize,
    table: Vec<u32>,
}

impl CongruenceTable {
    pub fn order(&self) -> usize {
        if self.ngens == 0 {
            1
        } else {
            self.table.len() / self.ngens
        }
    }

    pub fn right(&self, class: usize, gen: usize) -> usize {
        self.table[class * self.ngens + gen] as usize
    }

    /// Class of a word.
    pub fn trace(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |c, &g| self.right(c, g))
    }
}

struct Enumerator<'a> {
    p: &'a Presentation,
    ng: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
}

impl Enumerator<'_> {
    fn find(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn define(&mut self, c: u32, g: usize) -> Result<u32> {
        if self.live >= self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        let n = self.parent.len() as u32;
        self.parent.push(n);
        self.table.extend(core::iter::repeat(UNDEF).take(self.ng));
        self.table[c as usize * self.ng + g] = n;
        self.live += 1;
        Ok(n)
    }

    fn scan_define(&mut self, c: u32, word: &[usize]) -> Result<u32> {
        let mut cur = self.find(c);
        for &g in word {
            let t = self.table[cur as usize * self.ng + g];
            let t = if t == UNDEF { self.define(cur, g)? } else { t };
            cur = self.find(t);
        }
        Ok(cur)
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            for g in 0..self.ng {
                let t = self.table[kill as usize * self.ng + g];
                if t == UNDEF {
                    continue;
                }
                let u = self.table[keep as usize * self.ng + g];
                if u == UNDEF {
                    self.table[keep as usize * self.ng + g] = t;
                } else {
                    stack.push((u, t));
                }
            }
        }
    }

    fn run(&mut self) -> Result<()> {
        let mut c = 0usize;
        while c < self.parent.len() {
            let cc = c as u32;
            if self.find(cc) == cc {
                for r in &self.p.relations {
                    if self.find(cc) != cc {
                        break;
                    }
                    let a = self.scan_define(cc, &r.lhs)?;
                    let b = self.scan_define(cc, &r.rhs)?;
                    self.coincidence(a, b);
                }
                if self.find(cc) == cc {
                    for g in 0..self.ng {
                        if self.table[c * self.ng + g] == UNDEF {
                            self.define(cc, g)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn compact(mut self) -> CongruenceTable {
        let n = self.parent.len();
        let mut index = vec![UNDEF; n];
        let mut next = 0u32;
        for c in 0..n {
            if self.find(c as u32) == c as u32 {
                index[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ng);
        for c in 0..n {
            if index[c] == UNDEF {
                continue;
            }
            for g in 0..self.ng {
                let t = self.table[c * self.ng + g];
                let t = self.find(t);
                table.push(index[t as usize]);
            }
        }
        CongruenceTable { ngens: self.ng, table }
    }
}

/// Enumerates the classes of the monoid presented by `p`, processing classes
/// in creation order (HLT strategy); coincidences keep the smaller class.
/// Fails with `CapExceeded` when more than `cap` live classes are needed,
/// which says nothing about the presentation itself.
pub fn todd_coxeter(p: &Presentation, cap: usize) -> Result<CongruenceTable> {
    p.check_indices()?;
    let ng = p.generators.len();
    let mut e = Enumerator { p, ng, table: vec![UNDEF; ng], parent: vec![0], live: 1, cap: cap.max(1) };
    e.run()?;
    Ok(e.compact())
}

/// For each pair of words, whether the congruence of `p` identifies them.
/// Needs the presented monoid to be finite under `cap`.
pub fn entails(p: &Presentation, pairs: &[(Word, Word)], cap: usize) -> Result<Vec<bool>> {
    let t = todd_coxeter(p, cap)?;
    let ng = p.generators.len();
    pairs
        .iter()
        .map(|(u, v)| match u.iter().chain(v).find(|&&g| g >= ng) {
            Some(&g) => Err(Error::BadIndex(g)),
            None => Ok(t.trace(u) == t.trace(v)),
        })
        .collect()
}

/// Rewrites relations over another generating set through `images`
/// (one word per generator of `q`).
pub fn substitute(q: &Presentation, images: &[Word]) -> Vec<(Word, Word)> {
    let sub = |w: &Word| -> Word { w.iter().flat_map(|&g| images[g].iter().copied()).collect() };
    q.relations.iter().map(|r| (sub(&r.lhs), sub(&r.rhs))).collect()
}

/// A finite monoid in which generators of a presentation can be evaluated.
pub trait Concrete {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn image(&self, g: &Generator) -> Result<usize>;
    fn render(&self, e: usize) -> String;

    fn images(&self, p: &Presentation) -> Result<Vec<usize>> {
        p.generators.iter().map(|g| self.image(g)).collect()
    }

    fn evaluate(&self, images: &[usize], word: &[usize]) -> usize {
        word.iter().fold(self.identity(), |acc, &g| self.mul(acc, images[g]))
    }
}

fn idempotent_value(l: &Lattice, g: &Generator) -> Result<usize> {
    match (&g.kind, &g.value) {
        (GenKind::Idempotent, Some(v)) => l.parse(v),
        _ => Err(Error::UnmappedGenerator(g.name.clone())),
    }
}

impl Concrete for System {
    fn order(&self) -> usize {
        System::order(self)
    }

    fn identity(&self) -> usize {
        System::identity(self)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.multiply(a, b)
    }

    fn image(&self, g: &Generator) -> Result<usize> {
        match g.kind {
            GenKind::Unit => {
                let pos = self.group().gen_names().iter().position(|n| *n == g.name);
                pos.map(|j| self.unit(j)).ok_or_else(|| Error::UnmappedGenerator(g.name.clone()))
            }
            GenKind::Idempotent => Ok(self.idempotent(idempotent_value(self.lattice(), g)?)),
        }
    }

    fn render(&self, e: usize) -> String {
        let (x, g) = self.decode(e);
        format!("{}·{}", self.lattice().render(x), render_group_word(self.group(), g))
    }
}

fn render_group_word(w: &Group, g: usize) -> String {
    let word = w.word(g);
    if word.is_empty() {
        return "1".into();
    }
    let names: Vec<&str> = word.iter().map(|&j| w.gen_names()[j].as_str()).collect();
    names.join(" ")
}

/// The lattice as a commutative monoid of idempotents under join.
impl Concrete for Lattice {
    fn order(&self) -> usize {
        self.len()
    }

    fn identity(&self) -> usize {
        self.bottom()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.join(a, b)
    }

    fn image(&self, g: &Generator) -> Result<usize> {
        idempotent_value(self, g)
    }

    fn render(&self, e: usize) -> String {
        Lattice::render(self, e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Per-relation soundness in a concrete monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub families: Vec<RelFamily>,
    pub ok: Vec<bool>,
    pub first_failure: Option<Failure>,
}

impl RelationReport {
    pub fn all_ok(&self) -> bool {
        self.ok.iter().all(|&b| b)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (fam, ok)) in self.families.iter().zip(&self.ok).enumerate() {
            writeln!(f, "{} {} {}", fam.as_str(), i, if *ok { "OK" } else { "FAIL" })?;
        }
        if let Some(x) = &self.first_failure {
            writeln!(f, "first failure: relation {}: {} != {}", x.index, x.lhs, x.rhs)?;
        }
        Ok(())
    }
}

pub fn check_relations(p: &Presentation, m: &impl Concrete) -> Result<RelationReport> {
    p.check_indices()?;
    let images = m.images(p)?;
    let mut report = RelationReport { families: Vec::new(), ok: Vec::new(), first_failure: None };
    for (i, r) in p.relations.iter().enumerate() {
        let (a, b) = (m.evaluate(&images, &r.lhs), m.evaluate(&images, &r.rhs));
        report.families.push(r.family);
        report.ok.push(a == b);
        if a != b && report.first_failure.is_none() {
            report.first_failure = Some(Failure { index: i, lhs: m.render(a), rhs: m.render(b) });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    Refuted(String),
    Inconclusive(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Certified => write!(f, "Certified"),
            Verdict::Refuted(r) => write!(f, "Refuted({r})"),
            Verdict::Inconclusive(r) => write!(f, "Inconclusive({r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub relations: RelationReport,
    pub presented: Option<usize>,
    pub concrete: usize,
    /// Order of the submonoid generated by the generator images.
    pub generated: Option<usize>,
    pub verdict: Verdict,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.relations)?;
        let presented = self.presented.map_or("?".to_string(), |n| n.to_string());
        writeln!(f, "ORDER presented={} concrete={} VERDICT={}", presented, self.concrete, self.verdict)
    }
}

/// Certified iff every relation holds, the generator images generate the
/// concrete monoid, and the presented order equals the concrete order: the
/// evaluation map is then a bijective homomorphism.
pub fn certify(p: &Presentation, m: &impl Concrete, cap: usize) -> Result<Certificate> {
    let relations = check_relations(p, m)?;
    let concrete = m.order();
    let images = m.images(p)?;
    let generated = generated_order(m, &images, cap);
    let presented = match todd_coxeter(p, cap) {
        Ok(t) => Some(t.order()),
        Err(Error::CapExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let verdict = if let Some(x) = &relations.first_failure {
        Verdict::Refuted(format!("relation {} fails", x.index))
    } else if generated != Some(concrete) {
        match generated {
            Some(g) => Verdict::Refuted(format!("generators reach {g} of {concrete} elements")),
            None => Verdict::Inconclusive("generated submonoid exceeds cap".into()),
        }
    } else {
        match presented {
            None => Verdict::Inconclusive(format!("congruence enumeration exceeded {cap} classes")),
            Some(n) if n == concrete => Verdict::Certified,
            Some(n) => Verdict::Refuted(format!("presented order {n} != {concrete}")),
        }
    };
    Ok(Certificate { relations, presented, concrete, generated, verdict })
}

fn generated_order(m: &impl Concrete, images: &[usize], cap: usize) -> Option<usize> {
    let mut seen = BTreeSet::new();
    seen.insert(m.identity());
    let mut queue = vec![m.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &g in images {
            let y = m.mul(x, g);
            if seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                queue.push(y);
            }
        }
    }
    Some(queue.len())
}

/// Orbits of the Weyl group on ordered `k`-tuples of subsets of the ground
/// set (`{1..n}` for type A, `±{1..n}` otherwise), each represented by its
/// least tuple of bitmasks.
pub fn brute_orbits(ty: CoxeterType, n: usize, k: usize) -> Result<Vec<Vec<u32>>> {
    let w = Group::coxeter(ty, n)?;
    let signed = ty != CoxeterType::A;
    let npts = if signed { 2 * n } else { n };
    if npts * k > 24 {
        return Err(Error::CapExceeded(1 << 24));
    }
    let bit = |p: i8| -> usize { if p > 0 { p as usize - 1 } else { n + (-p) as usize - 1 } };
    let point = |b: usize| -> i8 { if b < n { b as i8 + 1 } else { -((b - n) as i8 + 1) } };
    let act = |mask: u32, gi: usize| -> u32 {
        (0..npts).filter(|&b| mask >> b & 1 == 1).fold(0, |m, b| m | 1 << bit(w.elem(gi).apply(point(b))))
    };
    let total = 1usize << (npts * k);
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    let unpack = |code: usize| -> Vec<u32> { (0..k).map(|i| (code >> (i * npts) & ((1 << npts) - 1)) as u32).collect() };
    let pack = |t: &[u32]| -> usize { t.iter().enumerate().fold(0, |c, (i, &m)| c | (m as usize) << (i * npts)) };
    for code in 0..total {
        if seen[code] {
            continue;
        }
        let t = unpack(code);
        for g in 0..w.order() {
            let img: Vec<u32> = t.iter().map(|&m| act(m, g)).collect();
            seen[pack(&img)] = true;
        }
        reps.push(t);
    }
    Ok(reps)
}

/// Every independent atom set (literal definition), by size.
pub fn brute_independent(l: &Lattice) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 0..=l.natoms().min(l.height() + 1) {
        for_each_subset(l.natoms(), k, |s| {
            if l.is_independent(s) {
                out.push(s.to_vec());
            }
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Relation;
    use crate::system::SystemKind;
    use crate::lattice::LatticeKind;

    fn commuting(g: usize) -> Presentation {
        let mut p = Presentation::new("free", Vec::new());
        for i in 0..g {
            p.add_generator(format!("a{i}"), GenKind::Idempotent);
        }
        for i in 0..g {
            p.push(Relation::new(RelFamily::Idem1, vec![i, i], vec![i]));
            for j in i + 1..g {
                p.push(Relation::new(RelFamily::Idem2, vec![i, j], vec![j, i]));
            }
        }
        p
    }

    #[test]
    fn small_orders() {
        assert_eq!(todd_coxeter(&commuting(1), 100).unwrap().order(), 2);
        assert_eq!(todd_coxeter(&commuting(3), 100).unwrap().order(), 8);
        assert_eq!(todd_coxeter(&commuting(5), 100).unwrap().order(), 32);
        let t = todd_coxeter(&commuting(2), 100).unwrap();
        assert_eq!(t.trace(&[0, 1, 0]), t.trace(&[1, 0]));
    }

    #[test]
    fn symmetric_group_and_cap() {
        // s1, s2 with s_i² = 1 and (s1 s2)³ = 1: order 6
        let mut p = Presentation::new("s3", Vec::new());
        p.add_generator("s1", GenKind::Unit);
        p.add_generator("s2", GenKind::Unit);
        p.push(Relation::new(RelFamily::Units, vec![0, 0], vec![]));
        p.push(Relation::new(RelFamily::Units, vec![1, 1], vec![]));
        p.push(Relation::new(RelFamily::Units, vec![0, 1, 0, 1, 0, 1], vec![]));
        assert_eq!(todd_coxeter(&p, 100).unwrap().order(), 6);
        assert_eq!(todd_coxeter(&p, 3), Err(Error::CapExceeded(3)));
        // the free monoid on one generator never closes
        let mut q = Presentation::new("free", Vec::new());
        q.add_generator("x", GenKind::Unit);
        assert!(todd_coxeter(&q, 50).is_err());
    }

    #[test]
    fn lattice_certification_and_negative_control() {
        let l = Lattice::new(LatticeKind::Boolean(2)).unwrap();
        let mut p = Presentation::new("boolean", Vec::new());
        for a in 0..l.natoms() {
            p.add_idempotent(format!("a{}", a + 1), l.render(l.atom(a)));
        }
        p.push(Relation::new(RelFamily::Idem1, vec![0, 0], vec![0]));
        p.push(Relation::new(RelFamily::Idem1, vec![1, 1], vec![1]));
        p.push(Relation::new(RelFamily::Idem2, vec![0, 1], vec![1, 0]));
        let c = certify(&p, &l, 1000).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
        // without commutation the presented monoid is infinite
        let c = certify(&p.without(2), &l, 1000).unwrap();
        assert!(matches!(c.verdict, Verdict::Inconclusive(_)));
        let mut bad = p.clone();
        bad.push(Relation::new(RelFamily::Idem3, vec![0], vec![0, 1]));
        let r = check_relations(&bad, &l).unwrap();
        assert_eq!(r.ok, vec![true, true, true, false]);
        assert_eq!(r.first_failure.unwrap().index, 3);
        assert!(matches!(certify(&bad, &l, 1000).unwrap().verdict, Verdict::Refuted(_)));
    }

    #[test]
    fn unmapped_generator() {
        let s = System::new(SystemKind::Boolean(CoxeterType::A, 2)).unwrap();
        let mut p = Presentation::new("x", Vec::new());
        p.add_generator("t7", GenKind::Unit);
        assert_eq!(check_relations(&p, &s), Err(Error::UnmappedGenerator("t7".into())));
    }

    #[test]
    fn orbit_oracle() {
        // Burnside: (16 + 4) / 2
        assert_eq!(brute_orbits(CoxeterType::A, 2, 2).unwrap().len(), 10);
        assert_eq!(brute_orbits(CoxeterType::A, 3, 1).unwrap().len(), 4);
    }

    #[test]
    fn independence_oracle() {
        let l = Lattice::new(LatticeKind::Boolean(3)).unwrap();
        assert_eq!(brute_independent(&l).len(), 8);
        let o = Lattice::new(LatticeKind::Octa(3)).unwrap();
        assert_eq!(brute_independent(&o).iter().filter(|s| s.len() == 3).count(), 8);
    }
}
