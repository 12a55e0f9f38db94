//! Integral Khovanov homology: tables in `a_{j}^{i}` notation, the graded
//! Euler characteristic and reduced homology.
//!
//! `cargo run --example khovanov`

use mutknot::khovanov::{format_kh, jones_to_euler, khovanov, khovanov_with, odd_torsion, KhOptions};
use mutknot::skein::jones;
use mutknot::{PlanarDiagram, Result};

fn main() -> Result<()> {
    let knots = [
        ("3_1", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
        ("4_1", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"),
    ];
    for (name, pd) in knots {
        let d = PlanarDiagram::parse(pd)?;
        let (kh, stats) = khovanov_with(&d, KhOptions::default())?;
        let text = format_kh(&kh);
        println!("== {name}: total rank {}, d∘d checked on {} blocks", kh.total_rank(), stats.d_squared_checked);
        println!("ranks:   {}", text.ranks);
        println!("torsion: {}", text.torsion);
        println!("odd torsion: {:?}", odd_torsion(&kh));
        let v = jones(&d)?;
        println!("Euler characteristic {} = (q+1/q)·V(q²): {}", kh.euler_characteristic(), kh.euler_characteristic() == jones_to_euler(&v, false));
        let reduced = khovanov(&d, true)?;
        println!("reduced ranks: {}", format_kh(&reduced).ranks);
    }
    Ok(())
}
