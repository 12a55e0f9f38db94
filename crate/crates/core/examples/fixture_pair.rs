//! The 14-crossing pair from the fixture directory: equal polynomials,
//! equal J_3, different Khovanov homology.
//!
//! `cargo run --release --example fixture_pair`

use std::path::Path;

use mutknot::coloredjones::colored_jones;
use mutknot::khovanov::kh_diff;
use mutknot::pipeline::resolve_knot;
use mutknot::Result;

fn main() -> Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../knots");
    let a = resolve_knot("14n22185", &[&dir])?;
    let b = resolve_knot("14n22589", &[&dir])?;
    println!("jones equal     {}", a.jones()? == b.jones()?);
    println!("homfly equal    {}", a.homfly()? == b.homfly()?);
    println!("kauffman equal  {}", a.kauffman()? == b.kauffman()?);
    println!("signatures      {} {}", a.signature()?, b.signature()?);
    println!("J_3 equal       {}", colored_jones(&a.diagram, 3)? == colored_jones(&b.diagram, 3)?);
    let diff = kh_diff(a.khovanov()?, b.khovanov()?);
    println!("Khovanov homology differs in {} bidegrees:", diff.len());
    for d in diff.iter().take(5) {
        println!("  (i={}, j={}): {} vs {}", d.i, d.j, d.left, d.right);
    }
    println!("computed by {:?}", a.provenance());
    Ok(())
}
