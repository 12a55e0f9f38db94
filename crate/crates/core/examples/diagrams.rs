//! Planar diagrams: parsing PD codes, crossing signs, DT codes and mirrors.
//!
//! `cargo run --example diagrams`

use mutknot::diagram::moves::add_kink;
use mutknot::diagram::{canonical_dt, realize_dt, DtCode};
use mutknot::{PlanarDiagram, Result};

fn main() -> Result<()> {
    let trefoil = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")?;
    println!("trefoil: {} crossings, writhe {}, signs {:?}", trefoil.n_crossings(), trefoil.writhe(), trefoil.signs());
    println!("canonical DT code: {:?}", canonical_dt(&trefoil)?);

    let mirror = trefoil.mirror();
    println!("mirror: {} (writhe {})", mirror.to_pd_string(), mirror.writhe());

    // a DT code from a census listing, realized as a planar diagram
    let code = DtCode::parse("4_1 4 6 8 2")?;
    let fig8 = realize_dt(&code)?;
    println!("{} from DT: {}", code.name, fig8.to_pd_string());

    // a Reidemeister I kink adds a crossing but keeps the knot type
    let kinked = add_kink(&fig8, 1, 0)?;
    println!("with a kink: {} crossings, writhe {}", kinked.n_crossings(), kinked.writhe());

    // malformed input is reported with a position
    if let Err(e) = PlanarDiagram::parse("X(1,2,3)") {
        println!("rejected: {e}");
    }
    Ok(())
}
