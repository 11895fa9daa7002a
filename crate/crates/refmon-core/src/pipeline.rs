//! Presentations of a reflection monoid `M(W, S)` read off from its system:
//! Coxeter relations for the units, one idempotent generator per orbit of
//! atoms, and the families relating them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::idem::atom_name;
use crate::presentation::{GenKind, Presentation, RelFamily, Relation, Word};
use crate::system::{System, SystemKind};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// One idempotent generator per atom orbit, thinned relation families.
    Thinned,
    /// Every atom a generator, every conjugation and every fixing reflection.
    Full,
}

/// Largest orbit size `k` for the absorption relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Idem3Bound {
    /// `k ≤ rk + 1`: a dependent set can have one atom more than the rank.
    Natural,
    /// `k ≤ rk`, which misses e.g. the triangle `{a12, a13, a23}` in rank 2.
    Rank,
}

/// Coxeter relations `(s_i s_j)^{m_ij} = 1`, `i ≤ j`, on generators `0..m.len()`.
pub fn push_units(p: &mut Presentation, m: &[Vec<u32>]) {
    for i in 0..m.len() {
        for j in i..m.len() {
            let lhs: Word = if i == j {
                vec![i, i]
            } else {
                (0..m[i][j]).flat_map(|_| [i, j]).collect()
            };
            p.push(Relation::new(RelFamily::Units, lhs, Word::new()));
        }
    }
}

fn unit_generators(sys: &System, family: &str, params: Vec<(String, i64)>) -> Presentation {
    let mut p = Presentation::new(family, params);
    for name in sys.group().gen_names() {
        p.add_generator(name.clone(), GenKind::Unit);
    }
    push_units(&mut p, sys.group().coxeter_matrix().expect("Weyl groups carry their Coxeter matrix"));
    p
}

fn params_of(kind: SystemKind) -> Vec<(String, i64)> {
    vec![(String::from("n"), kind.degree() as i64)]
}

/// Word for every atom in the thinned generators: `ω⁻¹ a' ω` where `a'`
/// is the orbit representative, `a = a'·w` and `ω` the shortlex word of `w`.
pub fn alpha_words(sys: &System) -> Vec<Word> {
    let ng = sys.group().ngens();
    let reps = sys.atom_orbit_reps();
    (0..sys.lattice().natoms())
        .map(|a| {
            let (rep, w) = sys.atom_witness(a);
            let omega = sys.group().word(w);
            let mut out: Word = omega.iter().rev().copied().collect();
            out.push(ng + reps.iter().position(|&r| r == rep).unwrap());
            out.extend_from_slice(omega);
            out
        })
        .collect()
}

fn product(words: &[Word], atoms: &[usize]) -> Word {
    atoms.iter().flat_map(|&a| words[a].iter().copied()).collect()
}

/// Thinned presentation with the natural absorption bound.
pub fn present_general(kind: SystemKind, mode: Mode) -> Result<Presentation> {
    present_system(&System::new(kind)?, mode, Idem3Bound::Natural)
}

pub fn present_system(sys: &System, mode: Mode, bound: Idem3Bound) -> Result<Presentation> {
    match mode {
        Mode::Thinned => Ok(thinned(sys, bound)),
        Mode::Full => Ok(full(sys)),
    }
}

fn thinned(sys: &System, bound: Idem3Bound) -> Presentation {
    let l = sys.lattice();
    let ng = sys.group().ngens();
    let mut p = unit_generators(sys, &sys.kind().name(), params_of(sys.kind()));
    let reps = sys.atom_orbit_reps();
    for (i, &a) in reps.iter().enumerate() {
        let name = if reps.len() == 1 { String::from("a") } else { format!("a{}", i + 1) };
        p.add_idempotent(name, l.render(l.atom(a)));
    }
    let alpha = alpha_words(sys);
    for i in 0..reps.len() {
        p.push(Relation::new(RelFamily::Idem1, vec![ng + i, ng + i], vec![ng + i]));
    }
    for s in sys.orbit_reps_k(2, |_| true) {
        let (x, y) = (&alpha[s[0]], &alpha[s[1]]);
        p.push(Relation::new(RelFamily::Idem2, [x.as_slice(), y].concat(), [y.as_slice(), x].concat()));
    }
    let top_k = match bound {
        Idem3Bound::Natural => l.height() + 1,
        Idem3Bound::Rank => l.height(),
    }
    .min(l.natoms());
    let geometric = l.kind().is_geometric();
    for k in 3..=top_k {
        if geometric {
            for s in sys.orbit_reps_k(k, |s| l.is_minimally_dependent(s)) {
                let chain: Vec<Word> = (0..k)
                    .rev()
                    .map(|i| {
                        let rest: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).collect();
                        product(&alpha, &rest)
                    })
                    .collect();
                p.push_chain(RelFamily::Idem3a, &chain);
            }
        } else {
            let absorbed = |s: &[usize], i: usize| -> bool {
                let rest: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).collect();
                l.is_independent(&rest) && l.leq(l.atom(s[i]), l.join_atoms(&rest))
            };
            for s in sys.orbit_reps_k(k, |s| (0..s.len()).any(|i| absorbed(s, i))) {
                for i in 0..k {
                    if absorbed(&s, i) {
                        let rest: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).collect();
                        let lhs = product(&alpha, &rest);
                        let rhs = [lhs.as_slice(), &alpha[s[i]]].concat();
                        p.push(Relation::new(RelFamily::Idem3, lhs, rhs));
                    }
                }
            }
        }
    }
    for j in 0..ng {
        let sg = sys.group().gen_index(j);
        for a in 0..l.natoms() {
            let lhs = [&[j][..], &alpha[a]].concat();
            let rhs = [alpha[sys.atom_act(a, sg)].as_slice(), &[j]].concat();
            p.push(Relation::new(RelFamily::RefIdem, lhs, rhs));
        }
    }
    for (x, s) in sys.iso_pairs().expect("Weyl group data is consistent") {
        let eps = product(&alpha, &sys.greedy_basis(x));
        p.push(Relation::new(RelFamily::Iso, [eps.as_slice(), &[s]].concat(), eps));
    }
    p
}

/// Generators for every atom, with all commutations, absorptions,
/// conjugations and fixing reflections.
fn full(sys: &System) -> Presentation {
    let l = sys.lattice();
    let g = sys.group();
    let ng = g.ngens();
    let mut p = unit_generators(sys, &format!("{}-full", sys.kind().name()), params_of(sys.kind()));
    for a in 0..l.natoms() {
        p.add_idempotent(atom_name(l, a), l.render(l.atom(a)));
    }
    let na = l.natoms();
    for a in 0..na {
        p.push(Relation::new(RelFamily::Idem1, vec![ng + a, ng + a], vec![ng + a]));
    }
    for a in 0..na {
        for b in a + 1..na {
            p.push(Relation::new(RelFamily::Idem2, vec![ng + a, ng + b], vec![ng + b, ng + a]));
        }
    }
    for k in 2..=l.height().min(na) {
        for s in l.independent_sets(k) {
            let join = l.join_atoms(&s);
            let lhs: Word = s.iter().map(|&a| ng + a).collect();
            for b in l.atoms_below(join) {
                if !s.contains(&b) {
                    let mut rhs = lhs.clone();
                    rhs.push(ng + b);
                    p.push(Relation::new(RelFamily::Idem3, lhs.clone(), rhs));
                }
            }
        }
    }
    for j in 0..ng {
        let sg = g.gen_index(j);
        for a in 0..na {
            p.push(Relation::new(RelFamily::RefIdem, vec![j, ng + a], vec![ng + sys.atom_act(a, sg), j]));
        }
    }
    for x in 1..l.len() {
        let eps: Word = sys.greedy_basis(x).iter().map(|&a| ng + a).collect();
        for t in sys.fixed_hyperplane_atoms(x) {
            p.push(Relation::new(RelFamily::Iso, [eps.as_slice(), g.word(t)].concat(), eps.clone()));
        }
    }
    p
}

/// Images of the full presentation's generators as thinned words.
pub fn full_to_thinned(sys: &System) -> Vec<Word> {
    let ng = sys.group().ngens();
    (0..ng).map(|j| vec![j]).chain(alpha_words(sys)).collect()
}
