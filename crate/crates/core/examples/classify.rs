//! Almost-mutant classification of a small census with volumes, followed by
//! a Khovanov comparison inside each class.
//!
//! `cargo run --release --example classify [DIR]`

use std::path::PathBuf;

use mutknot::pipeline::{classify, ingest, report, ClassifyOptions, ReportMode};
use mutknot::Result;

fn main() -> Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../knots"));
    let records = ingest(&[dir])?;
    println!("{} records", records.len());
    let classes = classify(&records, &ClassifyOptions::default())?;
    for c in &classes {
        println!("{:?} signature {} volume {}", c.members, c.signature, c.volume);
    }
    print!("{}", report(&classes, &records, ReportMode::Khovanov)?);
    Ok(())
}
