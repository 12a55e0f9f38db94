//! Conway mutation: the Kinoshita-Terasaka knot and its mutant, the Conway
//! knot. They share every polynomial invariant computed here.
//!
//! `cargo run --example conway_mutation`

use mutknot::diagram::{canonical_dt, signature};
use mutknot::mutation::{close_knot, data, Closure, Involution};
use mutknot::skein::{alexander, homfly, jones, kauffman_poly};
use mutknot::Result;

fn main() -> Result<()> {
    let tangle = data::kt_tangle();
    let closure = data::kt_closure();
    println!("KT tangle ({} crossings):\n{tangle}", tangle.n_crossings());

    let kt = close_knot(&tangle, &closure)?;
    println!("closing it back gives 11n42: {}", canonical_dt(&kt)? == canonical_dt(&data::kinoshita_terasaka())?);

    for s in Involution::ALL {
        let m = close_knot(&tangle.mutate(s), &closure)?;
        println!(
            "{:>5}: same diagram {:5}  jones {}  homfly {}  kauffman {}  alexander {}  signature {}",
            s.name(),
            canonical_dt(&m)? == canonical_dt(&kt)?,
            jones(&m)? == jones(&kt)?,
            homfly(&m)? == homfly(&kt)?,
            kauffman_poly(&m)? == kauffman_poly(&kt)?,
            alexander(&m)?,
            signature(&m)? == signature(&kt)?,
        );
    }

    let n = close_knot(&tangle, &Closure::Numerator)?;
    println!("numerator closure: {} crossings, alexander {}", n.n_crossings(), alexander(&n)?);
    Ok(())
}
