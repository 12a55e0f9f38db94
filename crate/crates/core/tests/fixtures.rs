//! Cheap consistency checks on the ten fixture knots.

mod common;

use common::{all_fixtures, fixture, PAIRS};
use mutknot::diagram::{canonical_dt, signature};
use mutknot::skein::{alexander_from_homfly, jones_from_homfly};

#[test]
fn pairs_share_signature() {
    for (a, b) in PAIRS {
        let (fa, fb) = (fixture(a), fixture(b));
        assert_eq!(signature(&fa.diagram).unwrap(), signature(&fb.diagram).unwrap(), "{a} {b}");
    }
}

#[test]
fn tables_specialize_consistently() {
    for f in all_fixtures() {
        assert_eq!(jones_from_homfly(&f.homfly).unwrap(), f.jones, "{}", f.name);
        assert_eq!(alexander_from_homfly(&f.homfly).unwrap(), f.alexander, "{}", f.name);
        assert_eq!(f.kh.euler_characteristic(), mutknot::khovanov::jones_to_euler(&f.jones, false), "{}", f.name);
    }
}

#[test]
fn pair_members_are_distinct_diagrams() {
    for (a, b) in PAIRS {
        let (fa, fb) = (fixture(a), fixture(b));
        assert!(fa.diagram.n_crossings() == 14 || fa.diagram.n_crossings() == 15);
        assert_ne!(canonical_dt(&fa.diagram).unwrap(), canonical_dt(&fb.diagram).unwrap());
        assert_ne!(canonical_dt(&fa.diagram).unwrap(), canonical_dt(&fb.diagram.mirror()).unwrap());
    }
}
