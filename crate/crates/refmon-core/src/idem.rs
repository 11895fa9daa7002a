//! Presentations of the idempotent lattices as commutative monoids of
//! idempotents: the general graded atomic one, the simple-polytope and
//! geometric refinements, the cross-polytope closed form, and the reduced
//! graphical relations of the type A/B/D intersection lattices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{atom_edge, minimally_dependent_sets, Edge};
use crate::lattice::{octa_atom, octahedron_independent_k, Lattice, LatticeKind, Payload};
use crate::presentation::{Presentation, RelFamily, Relation, Word};
use crate::{Error, Result};

/// Short generator name for an atom: `a12`/`d12`/`e1` for hyperplanes,
/// `a` + the positive part for cross-polytope facets, `a` + the subset for
/// permutohedron facets, `p1`/`m1` for cube facets, `a<k>` otherwise.
pub fn atom_name(l: &Lattice, a: usize) -> String {
    let p = l.payload(l.atom(a));
    if let Some(e) = atom_edge(p) {
        return match e {
            Edge::Plain(i, j) => format!("a{i}{j}"),
            Edge::Double(i, j) => format!("d{i}{j}"),
            Edge::Loop(i) => format!("e{i}"),
        };
    }
    let digits = |xs: &mut dyn Iterator<Item = u8>| xs.map(|x| format!("{x}")).collect::<String>();
    match (l.kind(), p) {
        (LatticeKind::Octa(_), Payload::Signed(Some(j))) => {
            format!("a{}", digits(&mut j.iter().filter(|&&x| x > 0).map(|&x| x as u8)))
        }
        (LatticeKind::Cube(_), Payload::Signed(Some(j))) => {
            let x = j[0];
            format!("{}{}", if x > 0 { 'p' } else { 'm' }, x.unsigned_abs())
        }
        (LatticeKind::Permutohedron(_), Payload::Orient(Some(o))) => {
            let mut it = o.iter().enumerate().filter(|(_, &b)| b == 1).map(|(v, _)| v as u8 + 1);
            format!("a{}", digits(&mut it))
        }
        _ => format!("a{}", a + 1),
    }
}

/// Atom generators with (Idem1) and (Idem2) for every pair.
fn commuting_atoms(l: &Lattice, family: &str) -> Presentation {
    let kind = l.kind();
    let mut p = Presentation::new(family, alloc::vec![(String::from(kind.name()), kind.param() as i64)]);
    for a in 0..l.natoms() {
        p.add_idempotent(atom_name(l, a), l.render(l.atom(a)));
    }
    for a in 0..l.natoms() {
        p.push(Relation::new(RelFamily::Idem1, alloc::vec![a, a], alloc::vec![a]));
    }
    for a in 0..l.natoms() {
        for b in a + 1..l.natoms() {
            p.push(Relation::new(RelFamily::Idem2, alloc::vec![a, b], alloc::vec![b, a]));
        }
    }
    p
}

/// `a_1…a_k = a_1…a_k b` for every atom `b ≤ ⋁a_i` outside `set`.
fn push_absorptions(p: &mut Presentation, l: &Lattice, set: &[usize]) {
    let join = l.join_atoms(set);
    for b in l.atoms_below(join) {
        if !set.contains(&b) {
            let mut rhs: Word = set.to_vec();
            rhs.push(b);
            p.push(Relation::new(RelFamily::Idem3, set.to_vec(), rhs));
        }
    }
}

/// Generators the atoms; `a² = a`, `ab = ba`, and `a_1…a_k = a_1…a_k b` for
/// every independent set `{a_i}` and atom `b ≤ ⋁a_i` not among them.
pub fn present_graded_atomic(kind: LatticeKind) -> Result<Presentation> {
    let l = Lattice::new(kind)?;
    let mut p = commuting_atoms(&l, "lattice-graded");
    for k in 2..=l.height().min(l.natoms()) {
        for s in l.independent_sets(k) {
            push_absorptions(&mut p, &l, &s);
        }
    }
    p.canonicalize_idempotent();
    Ok(p)
}

/// For a simple polytope an independent facet set meeting in a nonempty face
/// contains every facet through that face, so only the sets meeting in the
/// empty face contribute absorptions.
pub fn present_simple_polytope(kind: LatticeKind) -> Result<Presentation> {
    if !kind.is_simple() {
        return Err(Error::NotSimple(format!("{kind}")));
    }
    let l = Lattice::new(kind)?;
    let mut p = commuting_atoms(&l, "lattice-simple");
    let top = l.top();
    for k in 2..=l.height().min(l.natoms()) {
        for s in l.independent_sets(k) {
            if l.join_atoms(&s) == top {
                push_absorptions(&mut p, &l, &s);
            }
        }
    }
    p.canonicalize_idempotent();
    Ok(p)
}

/// Single-deletion products of a minimally dependent set, in order.
fn hatted(set: &[usize]) -> Vec<Word> {
    (0..set.len())
        .rev()
        .map(|i| set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| a).collect())
        .collect()
}

/// Geometric lattices: for each minimally dependent `{a_1..a_k}` all the
/// products with one atom deleted are equal.
pub fn present_geometric(kind: LatticeKind) -> Result<Presentation> {
    if !kind.is_geometric() {
        return Err(Error::UnsupportedKind(format!("{kind} is not geometric")));
    }
    let l = Lattice::new(kind)?;
    let mut p = commuting_atoms(&l, "lattice-geometric");
    for s in minimally_dependent_sets(&l)? {
        p.push_chain(RelFamily::Idem3a, &hatted(&s));
    }
    p.canonicalize_idempotent();
    Ok(p)
}

/// Cross-polytope faces for `d ≥ 3`, with the independent tuples taken from
/// the explicit construction rather than a search.
pub fn present_octahedron(d: usize) -> Result<Presentation> {
    if d < 3 {
        return Err(Error::OutOfRange(format!("octahedron closed form needs d >= 3 (got {d}); use the graded presentation")));
    }
    let kind = LatticeKind::Octa(d);
    let l = Lattice::new(kind)?;
    let mut p = commuting_atoms(&l, "lattice-octahedron");
    for k in 2..=d {
        for tuple in octahedron_independent_k(d, k)? {
            let set: Vec<usize> = tuple
                .iter()
                .map(|j| l.index_of_payload(&Payload::Signed(Some(octa_atom(d, j)))).map(|x| x - 1))
                .collect::<Result<_>>()?;
            push_absorptions(&mut p, &l, &set);
        }
    }
    p.canonicalize_idempotent();
    Ok(p)
}

/// Calls `f` on every ordered tuple of `k` distinct indices from `1..=n`.
fn for_each_injection(n: usize, k: usize, f: &mut impl FnMut(&[u8])) {
    fn go(n: usize, k: usize, cur: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in 1..=n as u8 {
            if !cur.contains(&i) {
                cur.push(i);
                go(n, k, cur, f);
                cur.pop();
            }
        }
    }
    go(n, k, &mut Vec::with_capacity(k), f);
}

#[derive(Clone, Copy)]
enum Sym {
    A(usize, usize),
    D(usize, usize),
    E(usize),
}

/// One graphical relation pattern: a chain of atom products on symbolic
/// indices `0..arity`.
struct Pattern {
    arity: usize,
    chain: &'static [&'static [Sym]],
}

use Sym::{A, D, E};

const A1: Pattern = Pattern { arity: 3, chain: &[&[A(0, 1), A(0, 2)], &[A(0, 1), A(1, 2)], &[A(0, 2), A(1, 2)]] };
const B2: Pattern = Pattern { arity: 3, chain: &[&[A(0, 1), D(0, 2)], &[D(0, 2), D(1, 2)], &[A(0, 1), D(1, 2)]] };
const B3: Pattern = Pattern {
    arity: 2,
    chain: &[
        &[A(0, 1), D(0, 1)],
        &[E(0), A(0, 1)],
        &[E(1), A(0, 1)],
        &[E(0), D(0, 1)],
        &[E(1), D(0, 1)],
        &[E(0), E(1)],
    ],
};
const B4: Pattern = Pattern { arity: 3, chain: &[&[A(0, 1), A(1, 2), D(0, 2)], &[E(0), E(1), E(2)]] };
const D1: Pattern =
    Pattern { arity: 3, chain: &[&[A(0, 1), A(1, 2), D(0, 2)], &[A(0, 1), A(1, 2), A(0, 2), D(0, 2)]] };
const D2: Pattern = Pattern {
    arity: 4,
    chain: &[
        &[A(0, 1), A(1, 2), A(2, 3), D(0, 1), D(1, 2), D(2, 3)],
        &[A(0, 1), A(2, 3), D(0, 1), D(2, 3)],
    ],
};
const D3: Pattern = Pattern {
    arity: 3,
    chain: &[&[A(0, 1), A(1, 2), D(1, 2)], &[A(0, 1), D(0, 1), D(1, 2)], &[A(0, 1), D(0, 1), A(1, 2), D(1, 2)]],
};

pub(crate) fn find_edge(l: &Lattice, e: Edge) -> Option<usize> {
    (0..l.natoms()).find(|&a| atom_edge(l.payload(l.atom(a))) == Some(e))
}

fn resolve(l: &Lattice, s: Sym, idx: &[u8]) -> Option<usize> {
    let pair = |i: usize, j: usize| (idx[i].min(idx[j]), idx[i].max(idx[j]));
    let e = match s {
        A(i, j) => {
            let (x, y) = pair(i, j);
            Edge::Plain(x, y)
        }
        D(i, j) => {
            let (x, y) = pair(i, j);
            Edge::Double(x, y)
        }
        E(i) => Edge::Loop(idx[i]),
    };
    find_edge(l, e)
}

/// The reduced relations of the intersection lattice of the type `A`, `B`
/// or `D` arrangement on `n` coordinates: commuting idempotents, the
/// triangle relation on plain edges, and for B/D the mixed triangle, the
/// 2-circuit/loop chain and the odd-triangle and path relations. Every
/// instantiated relation is evaluated in the lattice and kept only if sound.
pub fn present_arrangement_reduced(ty: crate::coxeter::CoxeterType, n: usize) -> Result<Presentation> {
    use crate::coxeter::CoxeterType as T;
    let (kind, patterns): (LatticeKind, &[Pattern]) = match ty {
        T::A if n >= 2 => (LatticeKind::Partition(n), &[A1]),
        T::B if n >= 2 => (LatticeKind::CoupledT(n), &[A1, B2, B3, B4]),
        T::D if n >= 4 => (LatticeKind::CoupledTo(n), &[A1, B2, D1, D2, D3]),
        _ => return Err(Error::OutOfRange(format!("reduced type {} presentation: n = {n} too small", ty.letter()))),
    };
    let l = Lattice::new(kind)?;
    let mut p = commuting_atoms(&l, "arrangement-reduced");
    p.params = alloc::vec![(format!("type-{}", ty.letter()), n as i64)];
    for pat in patterns {
        if pat.arity > n {
            continue;
        }
        for_each_injection(n, pat.arity, &mut |idx| {
            let words: Option<Vec<Word>> =
                pat.chain.iter().map(|w| w.iter().map(|&s| resolve(&l, s, idx)).collect()).collect();
            let Some(words) = words else { return };
            for w in words.windows(2) {
                if l.join_atoms(&w[0]) == l.join_atoms(&w[1]) {
                    p.push(Relation::new(RelFamily::Reduced, w[0].clone(), w[1].clone()));
                }
            }
        });
    }
    p.canonicalize_idempotent();
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;
    use crate::presentation::parse_word;
    use crate::verify::{certify, check_relations, entails, Verdict};

    const CAP: usize = 200_000;

    fn rel(p: &Presentation, f: RelFamily, lhs: &str, rhs: &str) -> (RelFamily, Word, Word) {
        let r = Relation::new(f, parse_word(p, lhs).unwrap(), parse_word(p, rhs).unwrap()).oriented();
        (r.family, r.lhs, r.rhs)
    }

    #[test]
    fn boolean_is_free_commutative() {
        let p = present_graded_atomic(LatticeKind::Boolean(3)).unwrap();
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.count(RelFamily::Idem1), 3);
        assert_eq!(p.count(RelFamily::Idem2), 3);
        assert_eq!(p.relations.len(), 6);
    }

    #[test]
    fn pentagon_absorbs_non_adjacent_pairs() {
        let p = present_graded_atomic(LatticeKind::Polygon(5)).unwrap();
        // 5 non-adjacent pairs, each absorbing the 3 other edges
        assert_eq!(p.count(RelFamily::Idem3), 15);
        let set = p.relation_set();
        assert!(set.contains(&rel(&p, RelFamily::Idem3, "a1 a3", "a1 a3 a4")));
        assert!(!set.iter().any(|r| r.0 == RelFamily::Idem3 && r.1 == parse_word(&p, "a1 a2").unwrap()));
    }

    #[test]
    fn triangle_in_partition_lattice() {
        let p = present_graded_atomic(LatticeKind::Partition(3)).unwrap();
        assert!(p.relation_set().contains(&rel(&p, RelFamily::Idem3, "a12 a13", "a12 a13 a23")));
        let g = present_geometric(LatticeKind::Partition(3)).unwrap();
        assert_eq!(g.count(RelFamily::Idem3a), 2);
        let set = g.relation_set();
        assert!(set.contains(&rel(&g, RelFamily::Idem3a, "a13 a23", "a12 a23")));
        assert!(set.contains(&rel(&g, RelFamily::Idem3a, "a12 a23", "a12 a13")));
    }

    #[test]
    fn coupled_two_has_four_chains() {
        let l = Lattice::new(LatticeKind::CoupledT(2)).unwrap();
        assert_eq!(minimally_dependent_sets(&l).unwrap().len(), 4);
        let g = present_geometric(LatticeKind::CoupledT(2)).unwrap();
        assert_eq!(g.count(RelFamily::Idem3a), 8);
    }

    #[test]
    fn simple_polytope_examples() {
        let c = present_simple_polytope(LatticeKind::Cube(2)).unwrap();
        let set = c.relation_set();
        for j in ["p2", "m2"] {
            assert!(set.contains(&rel(&c, RelFamily::Idem3, "p1 m1", &format!("p1 m1 {j}"))));
        }
        assert_eq!(c.count(RelFamily::Idem3), 4);
        let s = present_simple_polytope(LatticeKind::Simplex(3)).unwrap();
        assert_eq!(s.count(RelFamily::Idem3), 0);
        assert!(matches!(present_simple_polytope(LatticeKind::Octa(3)), Err(Error::NotSimple(_))));
        let perm = present_simple_polytope(LatticeKind::Permutohedron(2)).unwrap();
        for r in perm.relations.iter().filter(|r| r.family == RelFamily::Idem3) {
            assert_eq!(r.lhs.len(), 2);
        }
    }

    #[test]
    fn desk_scale_certification() {
        let kinds = [
            LatticeKind::Boolean(3),
            LatticeKind::Simplex(3),
            LatticeKind::Polygon(6),
            LatticeKind::Cube(3),
            LatticeKind::Octa(3),
            LatticeKind::Permutohedron(3),
            LatticeKind::Partition(4),
            LatticeKind::CoupledT(3),
            LatticeKind::CoupledTo(4),
        ];
        for k in kinds {
            let l = Lattice::new(k).unwrap();
            let mut ps = alloc::vec![present_graded_atomic(k).unwrap()];
            if k.is_simple() {
                ps.push(present_simple_polytope(k).unwrap());
            }
            if k.is_geometric() {
                ps.push(present_geometric(k).unwrap());
            }
            if let LatticeKind::Octa(d) = k {
                ps.push(present_octahedron(d).unwrap());
            }
            for p in ps {
                let c = certify(&p, &l, CAP).unwrap();
                assert_eq!(c.verdict, Verdict::Certified, "{k} {}", p.family);
                assert_eq!(c.presented, Some(l.len()));
            }
        }
    }

    #[test]
    fn octahedron_three_has_28_faces() {
        let p = present_octahedron(3).unwrap();
        let l = Lattice::new(LatticeKind::Octa(3)).unwrap();
        assert_eq!(l.len(), 28);
        assert_eq!(certify(&p, &l, CAP).unwrap().presented, Some(28));
        assert!(present_octahedron(2).is_err());
    }

    #[test]
    fn reduced_relations_are_sound_and_sufficient() {
        for (ty, n, kind) in [
            (CoxeterType::A, 3, LatticeKind::Partition(3)),
            (CoxeterType::A, 4, LatticeKind::Partition(4)),
            (CoxeterType::B, 2, LatticeKind::CoupledT(2)),
            (CoxeterType::B, 3, LatticeKind::CoupledT(3)),
            (CoxeterType::D, 4, LatticeKind::CoupledTo(4)),
        ] {
            let l = Lattice::new(kind).unwrap();
            let reduced = present_arrangement_reduced(ty, n).unwrap();
            assert!(check_relations(&reduced, &l).unwrap().all_ok());
            let full = present_geometric(kind).unwrap();
            assert_eq!(reduced.generators, full.generators);
            let idem3a: Vec<(Word, Word)> = full
                .relations
                .iter()
                .filter(|r| r.family == RelFamily::Idem3a)
                .map(|r| (r.lhs.clone(), r.rhs.clone()))
                .collect();
            let got = entails(&reduced, &idem3a, CAP).unwrap();
            assert!(got.iter().all(|&b| b), "{} {n}", ty.letter());
        }
    }

    #[test]
    fn reduced_anchor_relations() {
        let a = present_arrangement_reduced(CoxeterType::A, 3).unwrap();
        let set = a.relation_set();
        assert!(set.contains(&rel(&a, RelFamily::Reduced, "a12 a13", "a12 a23")));
        assert!(set.contains(&rel(&a, RelFamily::Reduced, "a12 a23", "a13 a23")));
        let b = present_arrangement_reduced(CoxeterType::B, 2).unwrap();
        let set = b.relation_set();
        assert!(set.contains(&rel(&b, RelFamily::Reduced, "a12 e1", "a12 e2")));
        assert!(set.contains(&rel(&b, RelFamily::Reduced, "d12 e2", "e1 e2")));
        assert!(present_arrangement_reduced(CoxeterType::D, 3).is_err());
    }
}
