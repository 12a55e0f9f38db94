//! Reading PD files, DT lists and volume tables into records.
//!
//! * `*.pd`: one diagram in PD grammar; the record is named after the file
//!   stem.
//! * `*.dt`: one `<name> <k1> ... <kn>` code per line.
//! * `*.vol` or `volumes.txt`: `<name> <decimal-volume> <sig-digits>` per
//!   line. Volumes for names not otherwise ingested are ignored.
//!
//! Directories are expanded to the files they contain, in name order.
//! Blank lines and `#` comments are skipped everywhere.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use super::{KnotRecord, Volume};
use crate::diagram::{DtCode, PlanarDiagram};
use crate::error::{Error, Result};

enum Kind {
    Pd,
    Dt,
    Volumes,
    Other,
}

fn kind(p: &Path) -> Kind {
    let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
    match p.extension().and_then(|e| e.to_str()) {
        Some("pd") => Kind::Pd,
        Some("dt") => Kind::Dt,
        Some("vol") => Kind::Volumes,
        _ if name == "volumes.txt" => Kind::Volumes,
        _ => Kind::Other,
    }
}

fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut inner: Vec<PathBuf> = std::fs::read_dir(p)?.map(|e| e.map(|e| e.path())).collect::<std::io::Result<_>>()?;
            inner.sort();
            out.extend(inner.into_iter().filter(|q| !matches!(kind(q), Kind::Other)));
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn err(file: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::Ingest { file: file.to_string(), line, msg: msg.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// A PD diagram named after the file stem of `file`.
pub fn ingest_pd_text(file: &str, text: &str) -> Result<KnotRecord> {
    let name = Path::new(file).file_stem().and_then(|s| s.to_str()).unwrap_or(file).to_string();
    let d = PlanarDiagram::parse(text).map_err(|e| err(file, 0, e.to_string()))?;
    Ok(KnotRecord::new(name, d))
}

/// One record per line of DT codes.
pub fn ingest_dt_text(file: &str, text: &str) -> Result<Vec<KnotRecord>> {
    content_lines(text)
        .map(|(n, line)| {
            let code = DtCode::parse(line).map_err(|e| err(file, n, e.to_string()))?;
            KnotRecord::from_dt(&code).map_err(|e| err(file, n, e.to_string()))
        })
        .collect()
}

/// Volume table, by knot name.
pub fn read_volumes(file: &str, text: &str) -> Result<BTreeMap<String, (usize, Volume)>> {
    let mut out = BTreeMap::new();
    for (n, line) in content_lines(text) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [name, vol, digits] = parts[..] else {
            return Err(err(file, n, "expected '<name> <volume> <sig-digits>'"));
        };
        let digits: u32 = digits.parse().map_err(|_| err(file, n, format!("record {name}: malformed digit count '{digits}'")))?;
        let v = Volume::parse(vol, digits).ok_or_else(|| err(file, n, format!("record {name}: malformed volume '{vol}'")))?;
        if out.insert(name.to_string(), (n, v)).is_some() {
            return Err(err(file, n, format!("record {name}: volume given twice")));
        }
    }
    Ok(out)
}

/// Reads every file (or directory of files) into records, attaching
/// volumes. Duplicate names are rejected.
pub fn ingest<P: AsRef<Path>>(paths: &[P]) -> Result<Vec<KnotRecord>> {
    let paths: Vec<PathBuf> = paths.iter().map(|p| p.as_ref().to_path_buf()).collect();
    let mut records: Vec<KnotRecord> = Vec::new();
    let mut origin: Vec<(String, usize)> = Vec::new();
    let mut volumes = Vec::new();
    for p in expand(&paths)? {
        let file = p.to_string_lossy().to_string();
        let text = std::fs::read_to_string(&p).map_err(|e| err(&file, 0, e.to_string()))?;
        match kind(&p) {
            Kind::Pd => {
                records.push(ingest_pd_text(&file, &text)?);
                origin.push((file, 0));
            }
            Kind::Dt => {
                let lines: Vec<usize> = content_lines(&text).map(|(n, _)| n).collect();
                for (r, n) in ingest_dt_text(&file, &text)?.into_iter().zip(lines) {
                    records.push(r);
                    origin.push((file.clone(), n));
                }
            }
            Kind::Volumes => volumes.push(read_volumes(&file, &text)?),
            Kind::Other => return Err(err(&file, 0, "unknown file type (expected .pd, .dt, .vol or volumes.txt)")),
        }
    }
    let mut seen = HashSet::new();
    for (r, (file, line)) in records.iter().zip(&origin) {
        if !seen.insert(r.name.clone()) {
            return Err(err(file, *line, format!("duplicate record {}", r.name)));
        }
    }
    for table in volumes {
        for r in records.iter_mut() {
            if let Some((_, v)) = table.get(&r.name) {
                r.volume = Some(v.clone());
            }
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dt_lines_and_errors() {
        let rs = ingest_dt_text("t.dt", "# two knots\n3_1 4 6 2\n4_1 4 6 8 2\n").unwrap();
        assert_eq!(rs.len(), 2);
        assert_eq!(rs[1].name, "4_1");
        assert_eq!(rs[1].diagram.n_crossings(), 4);
        let e = ingest_dt_text("t.dt", "3_1 4 6 2\nbad 4 x 2\n").unwrap_err();
        assert!(matches!(e, Error::Ingest { line: 2, .. }), "{e}");
    }

    #[test]
    fn volume_table() {
        let v = read_volumes("v", "14n22185 8.878159662 10\n").unwrap();
        assert_eq!(v["14n22185"].1.text, "8.878159662");
        assert_eq!(v["14n22185"].1.sig_digits, 10);
        let e = read_volumes("v", "a 1.0 3\nk 8.87x 10\n").unwrap_err();
        assert!(e.to_string().contains("record k"), "{e}");
        assert!(e.to_string().contains(":2:"), "{e}");
        assert!(read_volumes("v", "a 1.0\n").is_err());
        assert!(read_volumes("v", "a 1.0 3\na 2.0 3\n").is_err());
    }

    #[test]
    fn pd_named_by_stem() {
        let r = ingest_pd_text("dir/3_1.pd", "# comment\nX(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n").unwrap();
        assert_eq!(r.name, "3_1");
        assert!(matches!(ingest_pd_text("x.pd", "X(1,2,3,1)"), Err(Error::Ingest { .. })));
    }
}
