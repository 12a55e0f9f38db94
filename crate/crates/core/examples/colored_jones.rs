//! Jones-Wenzl projectors and coloured Jones polynomials.
//!
//! `cargo run --example colored_jones`

use mutknot::coloredjones::{colored_jones, colored_jones_with, jw_projector, ColoredJonesOptions};
use mutknot::{Error, PlanarDiagram, Result};

fn main() -> Result<()> {
    for n in 1..=4 {
        let p = jw_projector(n)?;
        println!(
            "f_{n}: {} diagram terms, idempotent {}, killed by cups {}, trace ok {}",
            p.element.n_terms(),
            p.is_idempotent(),
            p.is_annihilated(),
            p.has_expected_trace()
        );
    }

    let trefoil = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")?;
    for n in 2..=4 {
        println!("J_{n}(3_1) = {}", colored_jones(&trefoil, n)?);
    }

    // colours above the budget are refused rather than attempted
    match colored_jones_with(&trefoil, 9, ColoredJonesOptions::default()) {
        Err(Error::Budget { what, limit }) => println!("J_9 refused: {what} > {limit}"),
        other => println!("J_9: {other:?}"),
    }
    Ok(())
}
