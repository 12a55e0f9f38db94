//! Randomized invariance and consistency properties.

mod common;

use common::{cabled_mutant_pair, is_planar, random_diagram, random_knot, rng, string_preserving};
use mutknot::coloredjones::jw_projector;
use mutknot::diagram::{canonical_dt, realize_dt, signature, DtCode};
use mutknot::khovanov::{jones_to_euler, khovanov_with, KhOptions};
use mutknot::mutation::random::{random_closure, random_tangle};
use mutknot::mutation::{close, Involution};
use mutknot::skein::{alexander, bracket_state_sum, homfly, jones, kauffman_bracket, kauffman_poly, mirror_homfly, mirror_jones, mirror_kauffman};
use mutknot::PlanarDiagram;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn bracket_matches_state_sum(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 9);
        prop_assert_eq!(kauffman_bracket(&d).unwrap(), bracket_state_sum(&d));
    }

    #[test]
    fn pd_text_round_trips(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 10);
        let again = PlanarDiagram::parse(&d.to_pd_string()).unwrap();
        prop_assert_eq!(again.crossings(), d.crossings());
        prop_assert!(is_planar(&d));
    }

    #[test]
    fn mirror_negates_writhe_and_signature(seed in any::<u64>()) {
        let d = random_knot(&mut rng(seed), 8);
        let m = d.mirror();
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!(signature(&m).unwrap(), -signature(&d).unwrap());
        prop_assert_eq!(jones(&m).unwrap(), mirror_jones(&jones(&d).unwrap()));
        prop_assert_eq!(homfly(&m).unwrap(), mirror_homfly(&homfly(&d).unwrap()));
        prop_assert_eq!(kauffman_poly(&m).unwrap(), mirror_kauffman(&kauffman_poly(&d).unwrap()));
    }

    #[test]
    fn dt_code_realizes_the_same_knot(seed in any::<u64>()) {
        let d = random_knot(&mut rng(seed), 8);
        let dt = canonical_dt(&d).unwrap();
        let again = realize_dt(&DtCode::new("k", dt.clone()).unwrap()).unwrap();
        prop_assert_eq!(canonical_dt(&again).unwrap(), dt);
        let (v, w) = (jones(&d).unwrap(), jones(&again).unwrap());
        prop_assert!(v == w || v == mirror_jones(&w));
    }

    #[test]
    fn conway_mutants_share_invariants(seed in any::<u64>(), which in 0usize..3) {
        let mut r = rng(seed);
        let t = random_tangle(&mut r, 6);
        let c = random_closure(&mut r);
        let s = Involution::ALL[which];
        let (a, b) = (close(&t, &c).unwrap().diagram, close(&t.mutate(s), &c).unwrap().diagram);
        prop_assume!(a.is_knot() && b.is_knot());
        prop_assert_eq!(jones(&a).unwrap(), jones(&b).unwrap());
        prop_assert_eq!(homfly(&a).unwrap(), homfly(&b).unwrap());
        prop_assert_eq!(kauffman_poly(&a).unwrap(), kauffman_poly(&b).unwrap());
        prop_assert_eq!(alexander(&a).unwrap(), alexander(&b).unwrap());
        prop_assert_eq!(signature(&a).unwrap(), signature(&b).unwrap());
    }

    #[test]
    fn euler_characteristic_is_jones(seed in any::<u64>()) {
        let d = random_knot(&mut rng(seed), 7);
        for reduced in [false, true] {
            let (g, stats) = khovanov_with(&d, KhOptions { reduced, ..KhOptions::default() }).unwrap();
            prop_assert!(stats.d_squared_checked > 0 || d.n_crossings() < 2);
            prop_assert_eq!(g.euler_characteristic(), jones_to_euler(&jones(&d).unwrap(), reduced));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn cabled_mutants_share_homfly_and_kauffman(seed in any::<u64>()) {
        let (a, b) = cabled_mutant_pair(&mut rng(seed), 4, 3, 10);
        prop_assert_eq!(homfly(&a).unwrap(), homfly(&b).unwrap());
        prop_assert_eq!(kauffman_poly(&a).unwrap(), kauffman_poly(&b).unwrap());
    }
}

#[test]
fn jones_wenzl_identities() {
    for n in 1..=6 {
        let p = jw_projector(n).unwrap();
        assert!(p.is_idempotent(), "f_{n} idempotent");
        assert!(p.is_annihilated(), "f_{n} killed by cups and caps");
        assert!(p.has_expected_trace(), "trace of f_{n}");
    }
}

#[test]
fn string_preserving_involution_is_unique() {
    let mut r = rng(3);
    for _ in 0..50 {
        let t = random_tangle(&mut r, 6);
        let s = string_preserving(&t);
        let others = Involution::ALL.into_iter().filter(|&o| o != s && t.is_string_preserving(o)).count();
        assert_eq!(others, 0);
    }
}
