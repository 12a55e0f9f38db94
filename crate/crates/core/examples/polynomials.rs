//! Polynomial invariants of small knots: Kauffman bracket and Jones,
//! HOMFLY-PT, the Kauffman polynomial, Alexander and the signature.
//!
//! `cargo run --example polynomials`

use mutknot::diagram::signature;
use mutknot::skein::{alexander, homfly, jones, jones_from_homfly, kauffman_bracket, kauffman_poly};
use mutknot::{PlanarDiagram, Result};

fn main() -> Result<()> {
    let knots = [
        ("3_1", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
        ("4_1", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"),
    ];
    for (name, pd) in knots {
        let d = PlanarDiagram::parse(pd)?;
        println!("== {name}");
        println!("bracket   {}", kauffman_bracket(&d)?);
        println!("jones     {}", jones(&d)?);
        println!("alexander {}", alexander(&d)?);
        println!("signature {}", signature(&d)?);
        let p = homfly(&d)?;
        println!("homfly    {p}");
        println!("{}", p.table(2));
        println!("jones from homfly agrees: {}", jones_from_homfly(&p)? == jones(&d)?);
        let f = kauffman_poly(&d)?;
        println!("kauffman  {f}");
        println!("{}", f.table(1));
    }
    Ok(())
}
