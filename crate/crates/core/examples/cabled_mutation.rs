//! Cabling tangle strings and cabled mutation. A (1,2)-cable of a tangle is
//! glued into a knot, then replaced by the cable of the mutant tangle; the
//! HOMFLY-PT and Kauffman polynomials do not change.
//!
//! `cargo run --example cabled_mutation`

use mutknot::mutation::{cable, close, CableSpec, Closure, Endpoint, Involution, Tangle};
use mutknot::skein::{homfly, jones, kauffman_poly};
use mutknot::Result;

fn main() -> Result<()> {
    // a two-crossing clasp with diagonal strings, and its (1,2) cable
    let t = Tangle::from_pd(vec![[3, 4, 2, 1], [5, 6, 4, 3]], 1, 2, 5, 6)?;
    let s = Involution::ALL.into_iter().find(|&s| t.is_string_preserving(s)).expect("string preserving");
    let spec = CableSpec::new(1, 2)?;
    let inner = cable(&t, spec);
    println!("tangle:\n{t}\n(1,2) cable, {} crossings:\n{inner}", inner.n_crossings());

    // a three-half-twist tangle cabled the other way closes the six ends
    let outer = cable(&Tangle::horizontal_twists(3), CableSpec::new(2, 1)?);
    let mutant = inner.mutate(s);
    let knots = [glue(&inner, &outer), glue(&mutant, &outer)];
    for (label, k) in ["cable", "mutant"].iter().zip(&knots) {
        match k {
            Some(d) => println!("{label}: {} crossings, jones {}", d.n_crossings(), jones(d)?),
            None => println!("{label}: gluing does not give a knot"),
        }
    }
    if let [Some(a), Some(b)] = &knots {
        println!("HOMFLY-PT equal: {}", homfly(a)? == homfly(b)?);
        println!("Kauffman equal:  {}", kauffman_poly(a)? == kauffman_poly(b)?);
    }
    Ok(())
}

/// Joins the six ends of `inner` to those of `outer` by planar arcs, trying
/// each rotation until the result is a knot.
fn glue(inner: &Tangle, outer: &Tangle) -> Option<mutknot::PlanarDiagram> {
    use Endpoint::*;
    let ports = |t: &Tangle| -> Vec<(Endpoint, usize)> {
        [NW, SW, SE, NE].into_iter().flat_map(|e| (0..t.cable_at(e).len()).map(move |i| (e, i))).collect()
    };
    let (a, b) = (ports(inner), ports(outer));
    let n = a.len();
    (0..n).find_map(|rot| {
        let joins = (0..n).map(|k| (a[k], outer.port_label(b[(rot + n - k) % n]))).collect();
        let c = Closure::Outer { name: "outer".into(), crossings: outer.crossings().to_vec(), ports: joins };
        close(inner, &c).ok().filter(|k| k.is_knot()).map(|k| k.diagram)
    })
}
