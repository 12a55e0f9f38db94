//! Stored tangles and closures.
//!
//! The Kinoshita–Terasaka knot is kept as a PD diagram together with the
//! six crossings that form its famous tangle; the rest of the diagram
//! serves as a closure. Mutating the tangle gives the Conway knot.

use super::{extract_tangle, Closure, Tangle};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// The Kinoshita–Terasaka knot 11n42.
pub const KINOSHITA_TERASAKA_PD: &str = "X(22,3,1,4) X(2,7,3,8) X(4,12,5,11) X(6,1,7,2) X(17,9,18,8) X(19,10,20,11) \
     X(12,6,13,5) X(9,15,10,14) X(21,17,22,16) X(13,18,14,19) X(15,21,16,20)";

/// Crossings of [`KINOSHITA_TERASAKA_PD`] forming the tangle.
pub const KT_REGION: [usize; 6] = [4, 5, 7, 8, 9, 10];

/// Closure names reserved for the five cabled-mutant fixture pairs. No
/// closure data for them has been verified, so they are rejected.
pub const CABLED_PAIR_CLOSURES: [&str; 5] = ["pair-a", "pair-b", "pair-c", "pair-d", "pair-e"];

pub fn kinoshita_terasaka() -> PlanarDiagram {
    PlanarDiagram::parse(KINOSHITA_TERASAKA_PD).expect("stored diagram is valid")
}

/// The six-crossing tangle of the Kinoshita–Terasaka knot.
pub fn kt_tangle() -> Tangle {
    extract_tangle(&kinoshita_terasaka(), &KT_REGION).expect("stored region is a tangle").0
}

/// The rest of the Kinoshita–Terasaka diagram, as a closure: closing
/// [`kt_tangle`] with it gives the knot back.
pub fn kt_closure() -> Closure {
    let (_, ctx) = extract_tangle(&kinoshita_terasaka(), &KT_REGION).expect("stored region is a tangle");
    ctx.to_closure("kt-context")
}

/// `kt`, `zero`, `infinity`, or `twist<k>` for a row of `k` half twists.
pub fn builtin_tangle(name: &str) -> Option<Tangle> {
    match name {
        "kt" => Some(kt_tangle()),
        "zero" => Some(Tangle::zero()),
        "infinity" => Some(Tangle::infinity()),
        _ => name.strip_prefix("twist").and_then(|k| k.parse().ok()).map(Tangle::horizontal_twists),
    }
}

/// Built-in closure by name, `Ok(None)` when the name is not reserved.
pub fn builtin_closure(name: &str) -> Result<Option<Closure>> {
    if CABLED_PAIR_CLOSURES.contains(&name) {
        return Err(Error::Tangle(format!("closure {name} has no verified transcription")));
    }
    Ok(match name {
        "kt-context" => Some(kt_closure()),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::canonical_dt;
    use crate::mutation::{close_knot, Involution};
    use crate::skein::{alexander, jones};

    #[test]
    fn kt_round_trip() {
        let t = kt_tangle();
        assert_eq!(t.n_crossings(), 6);
        let k = close_knot(&t, &kt_closure()).unwrap();
        assert_eq!(canonical_dt(&k).unwrap(), canonical_dt(&kinoshita_terasaka()).unwrap());
    }

    #[test]
    fn conway_knot_is_a_mutant() {
        let t = kt_tangle();
        let kt = kinoshita_terasaka();
        let base = canonical_dt(&kt).unwrap();
        let mut distinct = 0;
        for s in Involution::ALL {
            let m = close_knot(&t.mutate(s), &kt_closure()).unwrap();
            assert_eq!(jones(&m).unwrap(), jones(&kt).unwrap());
            assert!(alexander(&m).unwrap().is_one());
            if canonical_dt(&m).unwrap() != base {
                distinct += 1;
            }
        }
        assert!(distinct > 0);
        // the crossingless closures are small knots with nontrivial Alexander
        for c in [Closure::Numerator, Closure::Denominator] {
            let k = close_knot(&t, &c).unwrap();
            assert_eq!(k.n_crossings(), 6);
            assert!(!alexander(&k).unwrap().is_one());
        }
    }

    #[test]
    fn names() {
        assert_eq!(builtin_tangle("twist3").unwrap().n_crossings(), 3);
        assert!(builtin_tangle("nope").is_none());
        assert!(builtin_closure("pair-a").is_err());
        assert!(builtin_closure("kt-context").unwrap().is_some());
    }
}
