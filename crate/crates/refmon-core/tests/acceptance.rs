//! One line per acceptance criterion. The test fails if any line is FAIL,
//! except for the criteria in `KNOWN_FAILURES`, which must still fail (so a
//! fix shows up as a test failure too).
//!
//! Run with `cargo test -p refmon-core --test acceptance -- --nocapture`.

use std::collections::BTreeSet;

use refmon_core::charmap::char_maps;
use refmon_core::closed::{present_arrangement, present_boolean};
use refmon_core::coxeter::CoxeterType::{A, B, D};
use refmon_core::graph::{atom_edge, minimally_dependent_sets, AtomGraph, GraphClass};
use refmon_core::idem::{
    present_arrangement_reduced, present_geometric, present_graded_atomic, present_octahedron,
    present_simple_polytope,
};
use refmon_core::lattice::{for_each_subset, Lattice, LatticeKind};
use refmon_core::pipeline::{present_general, Mode};
use refmon_core::presentation::{Presentation, RelFamily};
use refmon_core::renner::{present_renner, ClassicalFamily};
use refmon_core::system::{System, SystemKind, DEFAULT_CAP};
use refmon_core::verify::{brute_orbits, certify, todd_coxeter, Concrete, Verdict};
use refmon_core::Error;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Certifies and returns the common order.
fn certified(p: &Presentation, m: &impl Concrete, what: &str) -> Result<usize, String> {
    certified_with(p, m, what, DEFAULT_CAP)
}

fn certified_with(p: &Presentation, m: &impl Concrete, what: &str, cap: usize) -> Result<usize, String> {
    let c = certify(p, m, cap).map_err(|e| format!("{what}: {e}"))?;
    match (&c.verdict, c.presented, c.concrete) {
        (Verdict::Certified, Some(a), b) if a == b => Ok(a),
        (v, a, b) => Err(format!("{what}: {v:?} presented={a:?} concrete={b}")),
    }
}

fn system(kind: SystemKind) -> Result<System, String> {
    System::new(kind).map_err(|e| format!("{}: {e}", kind.name()))
}

/// The relation lines of a presentation, as a sorted multiset.
fn relation_lines(p: &Presentation) -> Vec<String> {
    let mut v: Vec<String> = p.to_string().lines().skip(2).map(|l| l.split_whitespace().collect::<Vec<_>>().join(" ")).collect();
    v.sort();
    v
}

fn same_body(p: &Presentation, q: &Presentation) -> bool {
    p.generators == q.generators && p.relations == q.relations
}

fn popova_lines(n: usize) -> Vec<String> {
    let s = |i: usize| format!("s{i}");
    let mut v = Vec::new();
    for i in 1..n {
        v.push(format!("Units {} {} = 1", s(i), s(i)));
        for j in i + 1..n {
            let m = if j == i + 1 { 3 } else { 2 };
            let w: Vec<String> = (0..m).flat_map(|_| [s(i), s(j)]).collect();
            v.push(format!("Units {} = 1", w.join(" ")));
        }
    }
    v.push("Idem1 a a = a".into());
    for i in 2..n {
        v.push(format!("RefIdem {} a = a {}", s(i), s(i)));
    }
    v.push("Iso a s1 a = a s1 a s1".into());
    v.push("Idem2 a s1 a s1 = s1 a s1 a".into());
    v.sort();
    v
}

fn c1_popova() -> Outcome {
    let mut orders = Vec::new();
    for (n, want) in [(2, 7), (3, 34), (4, 209)] {
        let p = present_boolean(A, n).map_err(|e| e.to_string())?;
        ensure(relation_lines(&p) == popova_lines(n), || format!("n={n}: relations differ: {:?}", relation_lines(&p)))?;
        let got = certified(&p, &system(SystemKind::Boolean(A, n))?, &format!("boolean-a({n})"))?;
        ensure(got == want, || format!("n={n}: order {got}, want {want}"))?;
        orders.push(got);
    }
    Ok(format!("boolean-a n=2,3,4 relation multisets exact; orders {orders:?} == [7, 34, 209]"))
}

fn closed_vs_pipeline(kind: SystemKind, closed: &Presentation) -> Result<usize, String> {
    let s = system(kind)?;
    let a = certified(closed, &s, &format!("{} closed", kind.name()))?;
    let pipe = present_general(kind, Mode::Thinned).map_err(|e| e.to_string())?;
    let b = certified(&pipe, &s, &format!("{} pipeline", kind.name()))?;
    ensure(a == b, || format!("{}: closed {a} vs pipeline {b}", kind.name()))?;
    Ok(a)
}

fn c2_boolean_bd() -> Outcome {
    let mut notes = Vec::new();
    for (ty, n) in [(B, 2), (B, 3), (D, 4)] {
        let p = present_boolean(ty, n).map_err(|e| e.to_string())?;
        let order = closed_vs_pipeline(SystemKind::Boolean(ty, n), &p)?;
        if (ty, n) == (B, 2) {
            ensure(order == 17, || format!("B2 order {order}, want 17"))?;
        }
        notes.push(format!("{}{n}={order}", ty.letter()));
    }
    Ok(format!("closed == pipeline, Certified: {}", notes.join(" ")))
}

fn c3_arrangements() -> Outcome {
    let mut notes = Vec::new();
    for (ty, n) in [(A, 3), (A, 4), (B, 2), (B, 3), (B, 4), (D, 4)] {
        let kind = SystemKind::Arrangement(ty, n);
        let order = if n >= 4 {
            closed_vs_pipeline(kind, &present_arrangement(ty, n).map_err(|e| e.to_string())?)?
        } else {
            let p = present_general(kind, Mode::Thinned).map_err(|e| e.to_string())?;
            certified(&p, &system(kind)?, &kind.name())?
        };
        if (ty, n) == (A, 3) {
            ensure(order == 16, || format!("A3 order {order}, want 16"))?;
        }
        notes.push(format!("{}{n}={order}", ty.letter()));
    }
    Ok(format!("Certified (n>=4 closed == pipeline): {}", notes.join(" ")))
}

fn desk_lattices() -> Vec<LatticeKind> {
    let mut v = Vec::new();
    v.extend((1..=4).map(LatticeKind::Boolean));
    v.extend((1..=4).map(LatticeKind::Simplex));
    v.extend((3..=6).map(LatticeKind::Polygon));
    v.extend((1..=3).map(LatticeKind::Cube));
    v.push(LatticeKind::Octa(3));
    v.extend((1..=3).map(LatticeKind::Permutohedron));
    v.extend((2..=4).map(LatticeKind::Partition));
    v.extend((1..=3).map(LatticeKind::CoupledT));
    v.push(LatticeKind::CoupledTo(4));
    v.into_iter().filter(|k| k.check().is_ok()).collect()
}

fn c4_lattices() -> Outcome {
    let mut count = 0;
    for k in desk_lattices() {
        let l = Lattice::new(k).map_err(|e| format!("{k}: {e}"))?;
        let mut ps = vec![present_graded_atomic(k)];
        if k.is_simple() {
            ps.push(present_simple_polytope(k));
        }
        if k.is_geometric() {
            ps.push(present_geometric(k));
        }
        match k {
            LatticeKind::Octa(d) => ps.push(present_octahedron(d)),
            LatticeKind::Partition(n) => ps.push(present_arrangement_reduced(A, n)),
            // the reduced type B form starts at rank two
            LatticeKind::CoupledT(n) if n >= 2 => ps.push(present_arrangement_reduced(B, n)),
            LatticeKind::CoupledTo(n) => ps.push(present_arrangement_reduced(D, n)),
            _ => {}
        }
        for p in ps {
            let p = p.map_err(|e| format!("{k}: {e}"))?;
            let got = certified(&p, &l, &format!("{k} {}", p.family))?;
            ensure(got == l.len(), || format!("{k}: order {got} != |E| {}", l.len()))?;
            count += 1;
        }
    }
    let octa = Lattice::new(LatticeKind::Octa(3)).map_err(|e| e.to_string())?.len();
    let perm = Lattice::new(LatticeKind::Permutohedron(2)).map_err(|e| e.to_string())?.len();
    ensure(octa == 28 && perm == 14, || format!("|F(octahedron 3)|={octa}, |E(perm d=2)|={perm}"))?;
    Ok(format!("{count} presentations Certified with order |E|; octahedron 28, hexagon 14"))
}

fn classes(l: &Lattice, sets: &[Vec<usize>]) -> Result<BTreeSet<String>, String> {
    let n = l.kind().ground();
    let mut out = BTreeSet::new();
    for s in sets {
        let edges = s.iter().map(|&a| atom_edge(l.payload(l.atom(a))).ok_or("not a hyperplane atom")).collect::<Result<_, _>>()?;
        out.insert(format!("{:?}", AtomGraph::new(n, edges).classify()));
    }
    Ok(out)
}

fn c5_classification() -> Outcome {
    let mut notes = Vec::new();
    let kinds = [
        LatticeKind::Partition(3),
        LatticeKind::Partition(4),
        LatticeKind::CoupledT(2),
        LatticeKind::CoupledT(3),
        LatticeKind::CoupledTo(4),
    ];
    for k in kinds {
        let l = Lattice::new(k).map_err(|e| e.to_string())?;
        let brute: BTreeSet<Vec<usize>> = l.minimally_dependent_brute().into_iter().collect();
        let graph: BTreeSet<Vec<usize>> = minimally_dependent_sets(&l).map_err(|e| e.to_string())?.into_iter().collect();
        ensure(brute == graph, || format!("{k}: brute {} vs graph {}", brute.len(), graph.len()))?;
        let forms = classes(&l, &graph.iter().cloned().collect::<Vec<_>>())?;
        let allowed: &[GraphClass] = match k {
            LatticeKind::Partition(_) => &[GraphClass::EvenCircuit],
            LatticeKind::CoupledTo(_) => &[GraphClass::EvenCircuit, GraphClass::TwoOddCircuits, GraphClass::Line],
            _ => &[GraphClass::EvenCircuit, GraphClass::OddCircuitWithLoop, GraphClass::TwoOddCircuits, GraphClass::Line],
        };
        let allowed: BTreeSet<String> = allowed.iter().map(|c| format!("{c:?}")).collect();
        ensure(forms.is_subset(&allowed), || format!("{k}: unexpected forms {forms:?}"))?;
        notes.push(format!("{k}:{}", graph.len()));
    }
    Ok(format!("brute == graph classification: {}", notes.join(" ")))
}

fn c6_renner() -> Outcome {
    use ClassicalFamily::*;
    let mut notes = Vec::new();
    for n in [2, 3] {
        let gl = present_renner(GeneralLinear, n).map_err(|e| e.to_string())?;
        let pop = present_boolean(A, n).map_err(|e| e.to_string())?;
        ensure(same_body(&gl, &pop), || format!("gl{n} differs from boolean-a({n})"))?;
    }
    let sp = present_renner(Symplectic, 2).map_err(|e| e.to_string())?;
    let so = present_renner(OrthogonalOdd, 2).map_err(|e| e.to_string())?;
    ensure(same_body(&sp, &so), || "so-odd(2) differs from sp(2)".into())?;
    for (f, n) in [(GeneralLinear, 2), (GeneralLinear, 3), (Symplectic, 2), (OrthogonalOdd, 2), (OrthogonalEven, 4), (Solomon, 3)] {
        let p = present_renner(f, n).map_err(|e| e.to_string())?;
        let kind = refmon_core::renner::family_system(f, n).map_err(|e| e.to_string())?;
        // coset enumeration for so-even(4) peaks well above its final 10625 classes
        let cap = if f == OrthogonalEven { 8 * DEFAULT_CAP } else { DEFAULT_CAP };
        let order = certified_with(&p, &system(kind)?, f.cli_name(), cap)?;
        notes.push(format!("{}({n})={order}", f.cli_name()));
    }
    ensure(matches!(present_renner(OrthogonalEven, 2), Err(Error::OutOfRange(_))), || {
        "so-even(2) should be rejected".into()
    })?;
    Ok(format!("gl==boolean-a, so-odd==sp; Certified {}; so-even(2) rejected", notes.join(" ")))
}

fn c7_char_maps() -> Outcome {
    for ell in 1..=6 {
        let c = char_maps(ell, 1).map_err(|e| e.to_string())?;
        ensure(c.len() == ell + 1, || format!("|Char_1({ell})| = {}", c.len()))?;
    }
    let mut checked = 0;
    for ell in 1..=4 {
        for k in 1..=3 {
            let maps = char_maps(ell, k).map_err(|e| e.to_string())?;
            // the trivial group has one orbit per tuple
            let orbits = if ell == 1 { 1 << k } else { brute_orbits(A, ell, k).map_err(|e| e.to_string())?.len() };
            ensure(maps.len() == orbits, || format!("ell={ell} k={k}: {} maps vs {orbits} orbits", maps.len()))?;
            for f in &maps {
                let back = refmon_core::charmap::CharMap::of_tuple(ell, &f.realize()).map_err(|e| e.to_string())?;
                ensure(&back == f, || format!("ell={ell} k={k}: round trip fails"))?;
            }
            checked += maps.len();
        }
    }
    Ok(format!("|Char_1(l)| = l+1 for l<=6; |Char_k(l)| == orbit counts for l<=4, k<=3 ({checked} maps round-trip)"))
}

fn is_dependent(l: &Lattice, s: &[usize]) -> bool {
    !l.is_independent(s)
}

/// (I1)–(I5) on every atom subset.
fn axioms_general(l: &Lattice) -> Result<(), String> {
    let k = l.kind();
    let na = l.natoms();
    let rk = l.rank(l.top());
    let mut err = None;
    for size in 0..=na {
        for_each_subset(na, size, |s| {
            if err.is_some() {
                return;
            }
            let dep = is_dependent(l, s);
            let join = l.join_atoms(s);
            if s.len() <= 2 && dep {
                err = Some(format!("{k}: I1 fails at {s:?}"));
            }
            if dep {
                // I2: greedy removal reaches an independent set with the same join
                let mut t = s.to_vec();
                while let Some(i) = (0..t.len()).find(|&i| {
                    let mut u = t.clone();
                    u.remove(i);
                    l.join_atoms(&u) == join
                }) {
                    t.remove(i);
                }
                if !l.is_independent(&t) {
                    err = Some(format!("{k}: I2 fails at {s:?}"));
                }
                // I3: supersets by one atom stay dependent
                for b in 0..na {
                    if !s.contains(&b) {
                        let mut u = s.to_vec();
                        u.push(b);
                        u.sort_unstable();
                        if l.is_independent(&u) {
                            err = Some(format!("{k}: I3 fails at {u:?}"));
                        }
                    }
                }
                // I4: s = T ∪ {b}, T independent ⇒ a minimally dependent T' ∪ {b}
                for (i, &b) in s.iter().enumerate() {
                    let mut t = s.to_vec();
                    t.remove(i);
                    if l.is_independent(&t) {
                        let mut found = false;
                        for m in 0..=t.len() {
                            for_each_subset(t.len(), m, |idx| {
                                let mut u: Vec<usize> = idx.iter().map(|&j| t[j]).collect();
                                u.push(b);
                                u.sort_unstable();
                                found |= l.is_minimally_dependent(&u);
                            });
                        }
                        if !found {
                            err = Some(format!("{k}: I4 fails at {s:?}"));
                        }
                    }
                }
            } else {
                // I5: T ↦ ∨T is injective on subsets, and |S| ≤ rk E
                let mut joins = BTreeSet::new();
                for mask in 0u32..1 << s.len() {
                    let t: Vec<usize> = (0..s.len()).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                    joins.insert(l.join_atoms(&t));
                }
                if joins.len() != 1 << s.len() || s.len() > rk {
                    err = Some(format!("{k}: I5 fails at {s:?}"));
                }
            }
        });
    }
    err.map_or(Ok(()), Err)
}

/// (I6), (I7) and rank submodularity.
fn axioms_geometric(l: &Lattice) -> Result<(), String> {
    let k = l.kind();
    let na = l.natoms();
    let mut err = None;
    for size in 0..=(l.height() + 1).min(na) {
        for_each_subset(na, size, |s| {
            let r = l.rank(l.join_atoms(s));
            if r > s.len() || (r == s.len()) != l.is_independent(s) {
                err = Some(format!("{k}: I6 fails at {s:?}"));
            }
            if l.is_minimally_dependent(s) {
                let j = l.join_atoms(s);
                for i in 0..s.len() {
                    let mut u = s.to_vec();
                    u.remove(i);
                    if l.join_atoms(&u) != j {
                        err = Some(format!("{k}: I7 fails at {s:?}"));
                    }
                }
            }
        });
    }
    err.map_or(Ok(()), Err)?;
    let bad = submodular_violation(l);
    ensure(bad.is_none(), || format!("{k}: submodularity fails at {bad:?}"))
}

fn submodular_violation(l: &Lattice) -> Option<(usize, usize)> {
    for x in 0..l.len() {
        for y in 0..l.len() {
            if l.rank(l.join(x, y)) + l.rank(l.meet(x, y)) > l.rank(x) + l.rank(y) {
                return Some((x, y));
            }
        }
    }
    None
}

fn steinberg(s: &System) -> Result<(), String> {
    let g = s.group();
    for x in 0..s.lattice().len() {
        let refl = s.fixed_hyperplane_atoms(x);
        let mut sub = vec![0usize];
        let mut i = 0;
        while i < sub.len() {
            for &t in &refl {
                let y = g.mul(sub[i], t);
                if !sub.contains(&y) {
                    sub.push(y);
                }
            }
            i += 1;
        }
        sub.sort_unstable();
        let stab: Vec<usize> = s.isotropy(x).iter().map(|&v| v as usize).collect();
        ensure(sub == stab, || format!("{}: isotropy of {} not reflection-generated", s.kind().name(), s.lattice().render(x)))?;
    }
    Ok(())
}

fn c8_structure() -> Outcome {
    let mut general = 0;
    let mut geometric = 0;
    for k in desk_lattices() {
        let l = Lattice::new(k).map_err(|e| e.to_string())?;
        axioms_general(&l)?;
        general += 1;
        if k.is_geometric() {
            axioms_geometric(&l)?;
            geometric += 1;
        }
    }
    for n in 2..=3 {
        let l = Lattice::new(LatticeKind::Cube(n)).map_err(|e| e.to_string())?;
        ensure(submodular_violation(&l).is_some(), || format!("cube({n}) unexpectedly submodular"))?;
    }
    let kinds = [
        SystemKind::Boolean(A, 3),
        SystemKind::Boolean(A, 4),
        SystemKind::Boolean(B, 3),
        SystemKind::Boolean(D, 4),
        SystemKind::Arrangement(A, 4),
        SystemKind::Arrangement(B, 3),
        SystemKind::Arrangement(D, 4),
        SystemKind::Octa { even: false, ell: 3 },
        SystemKind::Octa { even: true, ell: 3 },
        SystemKind::Permutohedron(3),
    ];
    for kind in kinds {
        let s = system(kind)?;
        for e in 0..s.order() {
            let (x, g) = s.decode(e);
            ensure(s.multiply(s.idempotent(x), s.element(0, g)) == e, || format!("{}: {e} not in EG", kind.name()))?;
        }
        steinberg(&s)?;
    }
    // Iso pairs of the Boolean systems: (a1 ∨ a2, s1) always, plus (a1, s0) in type B
    for (ty, n) in [(A, 3), (A, 4), (B, 2), (B, 3), (B, 4), (D, 4)] {
        let s = system(SystemKind::Boolean(ty, n))?;
        let l = s.lattice();
        let a12 = l.join(l.atom(0), l.atom(1));
        let s1 = if ty == A { 0 } else { 1 };
        let mut want = vec![(a12, s1)];
        if ty == B {
            want.insert(0, (l.atom(0), 0));
        }
        let got = s.iso_pairs().map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{}: iso pairs {got:?}, want {want:?}", s.kind().name()))?;
    }
    Ok(format!(
        "I1-I5 on {general} lattices, I6/I7/submodularity on {geometric} geometric, cube counterexample; \
         M=EG and Steinberg on {} systems; Boolean iso tables",
        kinds.len()
    ))
}

fn c9_negative_controls() -> Outcome {
    const CAP: usize = 200_000;
    let mut cases: Vec<(SystemKind, Presentation)> = Vec::new();
    for (ty, n) in [(A, 2), (A, 3), (B, 2), (B, 3)] {
        cases.push((SystemKind::Boolean(ty, n), present_boolean(ty, n).map_err(|e| e.to_string())?));
        let kind = SystemKind::Arrangement(ty, n);
        if kind.check().is_ok() {
            cases.push((kind, present_arrangement(ty, n).map_err(|e| e.to_string())?));
        }
    }
    for (f, n) in [(ClassicalFamily::Symplectic, 2), (ClassicalFamily::Solomon, 3)] {
        let kind = refmon_core::renner::family_system(f, n).map_err(|e| e.to_string())?;
        cases.push((kind, present_renner(f, n).map_err(|e| e.to_string())?));
    }
    let mut deleted = 0;
    let mut redundant = Vec::new();
    for (kind, p) in &cases {
        let order = certified(p, &system(*kind)?, &kind.name())?;
        for (i, r) in p.relations.iter().enumerate() {
            if !matches!(r.family, RelFamily::Iso | RelFamily::Idem3a) {
                continue;
            }
            let q = p.without(i);
            let verdict = certify(&q, &system(*kind)?, CAP).map_err(|e| e.to_string())?.verdict;
            let grew = match todd_coxeter(&q, CAP) {
                Ok(t) => t.order() > order,
                Err(Error::CapExceeded(_)) => true,
                Err(e) => return Err(e.to_string()),
            };
            if !(matches!(verdict, Verdict::Refuted(_)) || grew) {
                redundant.push(format!("{}#{i}:{}", kind.name(), r.family.as_str()));
            }
            deleted += 1;
        }
    }
    ensure(redundant.is_empty(), || {
        format!("{} of {deleted} single deletions leave the order unchanged: {}", redundant.len(), redundant.join(" "))
    })?;
    Ok(format!("{deleted} single deletions over {} presentations each Refuted or strictly larger", cases.len()))
}

/// Negative controls: the presentations built by the general construction keep
/// redundant orbit representatives, so single Idem3a links in the arrangement
/// presentations (A3, B2, B3) are implied by conjugate chains; in sp(2) two of
/// the three Iso relations follow from the third. Every Iso deletion in the
/// Boolean closed forms and in Solomon(3) does enlarge the monoid.
const KNOWN_FAILURES: &[usize] = &[9];

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("boolean type A reproduction", c1_popova),
        ("boolean types B and D", c2_boolean_bd),
        ("arrangement monoids", c3_arrangements),
        ("idempotent lattices", c4_lattices),
        ("geometric classification", c5_classification),
        ("renner monoids", c6_renner),
        ("characteristic maps", c7_char_maps),
        ("structural properties", c8_structure),
        ("negative controls", c9_negative_controls),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert_eq!(failed, KNOWN_FAILURES, "failed criteria differ from the known failures");
}
