use proptest::prelude::*;
use refmon_core::charmap::CharMap;
use refmon_core::coxeter::CoxeterType::{A, B, D};
use refmon_core::lattice::{Lattice, LatticeKind};
use refmon_core::partial_map::{compose, inverse, GroundSet, PartialMap};
use refmon_core::pipeline::{alpha_words, present_general, Mode};
use refmon_core::presentation::RelFamily;
use refmon_core::system::{System, SystemKind};
use refmon_core::verify::{todd_coxeter, Concrete};
use refmon_core::Error;

/// A partial injection of `{1..n}` (or `±{1..n}`): a shuffled image list,
/// signs, and a domain mask.
fn partial_map(n: usize, signed: bool) -> impl Strategy<Value = PartialMap> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n), 0u32..1 << n)
        .prop_map(move |(img, neg, mask)| {
            let pairs: Vec<(i32, i32)> = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| (i as i32 + 1, if signed && neg[i] { -img[i] } else { img[i] }))
                .collect();
            if signed {
                PartialMap::signed_from_positive(n, &pairs).unwrap()
            } else {
                PartialMap::new(GroundSet::new(n, false).unwrap(), pairs).unwrap()
            }
        })
}

fn maps(signed: bool) -> impl Strategy<Value = (PartialMap, PartialMap, PartialMap)> {
    (1usize..=4).prop_flat_map(move |n| (partial_map(n, signed), partial_map(n, signed), partial_map(n, signed)))
}

const KINDS: [SystemKind; 8] = [
    SystemKind::Boolean(A, 3),
    SystemKind::Boolean(B, 3),
    SystemKind::Boolean(D, 4),
    SystemKind::Arrangement(A, 4),
    SystemKind::Arrangement(B, 3),
    SystemKind::Octa { even: false, ell: 3 },
    SystemKind::Octa { even: true, ell: 3 },
    SystemKind::Permutohedron(4),
];

fn systems() -> Vec<System> {
    KINDS.iter().map(|&k| System::new(k).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn compose_is_associative((f, g, h) in maps(false)) {
        let l = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let r = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inverse_monoid_laws((f, _, _) in maps(false)) {
        let fi = inverse(&f);
        prop_assert_eq!(compose(&compose(&f, &fi).unwrap(), &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&compose(&fi, &f).unwrap(), &fi).unwrap(), fi);
    }

    #[test]
    fn signed_maps_stay_signed((f, g, _) in maps(true)) {
        let fg = compose(&f, &g).unwrap();
        for &(a, b) in fg.pairs() {
            prop_assert_eq!(fg.apply(-a), Some(-b));
        }
        let fi = inverse(&f);
        prop_assert!(fi.pairs().iter().all(|&(a, b)| fi.apply(-a) == Some(-b)));
    }

    #[test]
    fn char_map_round_trip(ell in 1usize..=4, k in 1usize..=3, seed in prop::collection::vec(0u32..16, 3)) {
        let tuple: Vec<Vec<u8>> = (0..k)
            .map(|i| (1..=ell as u8).filter(|&x| seed[i] >> (x - 1) & 1 == 1).collect())
            .collect();
        let f = CharMap::of_tuple(ell, &tuple).unwrap();
        let back = CharMap::of_tuple(ell, &f.realize()).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn system_multiplication_is_associative(which in 0usize..KINDS.len(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let s = System::new(KINDS[which]).unwrap();
        let [x, y, z] = [0, 1, 2].map(|i| picks[i].index(s.order()));
        prop_assert_eq!(s.multiply(s.multiply(x, y), z), s.multiply(x, s.multiply(y, z)));
    }

    /// Every element is its domain idempotent times its unit.
    #[test]
    fn factorizable(which in 0usize..KINDS.len(), pick in any::<prop::sample::Index>()) {
        let s = System::new(KINDS[which]).unwrap();
        let e = pick.index(s.order());
        let (x, g) = s.decode(e);
        prop_assert_eq!(s.multiply(s.idempotent(x), s.element(0, g)), e);
    }
}

#[test]
fn lattices_are_atomic_semilattices() {
    let kinds = [
        LatticeKind::Boolean(4),
        LatticeKind::Cube(3),
        LatticeKind::Octa(3),
        LatticeKind::Permutohedron(3),
        LatticeKind::Partition(4),
        LatticeKind::CoupledT(3),
        LatticeKind::CoupledTo(4),
    ];
    for kind in kinds {
        let l = Lattice::new(kind).unwrap();
        for x in 0..l.len() {
            assert_eq!(l.join(x, x), x);
            assert_eq!(l.join_atoms(&l.atoms_below(x)), x, "{kind:?}");
            for y in 0..l.len() {
                assert_eq!(l.join(x, y), l.join(y, x));
            }
        }
    }
}

#[test]
fn alpha_words_name_their_atoms() {
    for s in systems() {
        let p = present_general(s.kind(), Mode::Thinned).unwrap();
        let images = s.images(&p).unwrap();
        for (a, w) in alpha_words(&s).iter().enumerate() {
            assert_eq!(s.evaluate(&images, w), s.idempotent(s.lattice().atom(a)));
        }
    }
}

/// Dropping relations other than the Units never shrinks the presented monoid.
#[test]
fn todd_coxeter_is_monotone() {
    let p = present_general(SystemKind::Arrangement(A, 3), Mode::Thinned).unwrap();
    let full = todd_coxeter(&p, 100_000).unwrap().order();
    for i in 0..p.relations.len() {
        if p.relations[i].family == RelFamily::Units {
            continue;
        }
        match todd_coxeter(&p.without(i), 100_000) {
            Ok(t) => assert!(t.order() >= full),
            Err(Error::CapExceeded(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}
