//! Knot records, census ingestion, almost-mutant classification and
//! reports.
//!
//! Invariants on a record are computed on first use and cached together
//! with the engine that produced them. Hyperbolic volumes are only ever
//! read from files.

mod classify;
mod ingest;
mod report;

use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

pub use classify::{classify, AlmostMutantClass, ClassifyOptions};
pub use ingest::{ingest, ingest_dt_text, ingest_pd_text, read_volumes};
pub use report::{report, ClassReport, Report, ReportMode};

use crate::diagram::{realize_dt, signature, DtCode, PlanarDiagram};
use crate::error::{Error, Result};
use crate::khovanov::{khovanov, BigradedGroups};
use crate::poly::{LaurentPoly, LaurentPoly2};
use crate::skein::{alexander, homfly, jones, kauffman_poly, mirror_homfly, mirror_jones, mirror_kauffman};

/// Name and version of the engine that computes invariants.
pub const ENGINE: &str = concat!("mutknot ", env!("CARGO_PKG_VERSION"));

/// Suffix marking the mirror image of a named knot.
pub const MIRROR_SUFFIX: &str = "*";

/// An ingested volume: the decimal text as given, its exact value and the
/// number of significant digits the source claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Volume {
    pub text: String,
    pub value: BigRational,
    pub sig_digits: u32,
}

impl Volume {
    pub fn parse(text: &str, sig_digits: u32) -> Option<Volume> {
        let value = parse_decimal(text)?;
        Some(Volume { text: text.to_string(), value, sig_digits })
    }
}

impl fmt::Display for Volume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// Exact value of a decimal such as `12.569864535`, `-3`, `1e-9` or `2.5E3`.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("0{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -value } else { value })
}

/// An invariant value with the engine that computed it.
#[derive(Debug, Clone, Serialize)]
pub struct Computed<T> {
    pub value: T,
    pub engine: String,
}

fn computed<T>(value: T) -> Computed<T> {
    Computed { value, engine: ENGINE.to_string() }
}

#[derive(Debug, Clone, Default)]
struct Cache {
    jones: OnceLock<Computed<LaurentPoly>>,
    homfly: OnceLock<Computed<LaurentPoly2>>,
    kauffman: OnceLock<Computed<LaurentPoly2>>,
    alexander: OnceLock<Computed<LaurentPoly>>,
    signature: OnceLock<Computed<i32>>,
    khovanov: OnceLock<Computed<BigradedGroups>>,
}

fn cached<T>(cell: &OnceLock<Computed<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(c) = cell.get() {
        return Ok(&c.value);
    }
    let v = f()?;
    Ok(&cell.get_or_init(|| computed(v)).value)
}

/// A named knot with its diagram, optional volume and lazily computed
/// invariants.
#[derive(Debug, Clone)]
pub struct KnotRecord {
    pub name: String,
    pub diagram: PlanarDiagram,
    pub volume: Option<Volume>,
    cache: Cache,
}

impl KnotRecord {
    pub fn new(name: impl Into<String>, diagram: PlanarDiagram) -> KnotRecord {
        KnotRecord { name: name.into(), diagram, volume: None, cache: Cache::default() }
    }

    pub fn from_dt(code: &DtCode) -> Result<KnotRecord> {
        Ok(KnotRecord::new(code.name.clone(), realize_dt(code)?))
    }

    pub fn with_volume(mut self, v: Volume) -> KnotRecord {
        self.volume = Some(v);
        self
    }

    pub fn jones(&self) -> Result<&LaurentPoly> {
        cached(&self.cache.jones, || jones(&self.diagram))
    }

    pub fn homfly(&self) -> Result<&LaurentPoly2> {
        cached(&self.cache.homfly, || homfly(&self.diagram))
    }

    pub fn kauffman(&self) -> Result<&LaurentPoly2> {
        cached(&self.cache.kauffman, || kauffman_poly(&self.diagram))
    }

    pub fn alexander(&self) -> Result<&LaurentPoly> {
        cached(&self.cache.alexander, || alexander(&self.diagram))
    }

    pub fn signature(&self) -> Result<i32> {
        cached(&self.cache.signature, || signature(&self.diagram)).copied()
    }

    pub fn khovanov(&self) -> Result<&BigradedGroups> {
        cached(&self.cache.khovanov, || khovanov(&self.diagram, false))
    }

    /// Engine tags of the invariants computed so far, by name.
    pub fn provenance(&self) -> Vec<(&'static str, &str)> {
        let c = &self.cache;
        [
            ("jones", c.jones.get().map(|x| x.engine.as_str())),
            ("homfly", c.homfly.get().map(|x| x.engine.as_str())),
            ("kauffman", c.kauffman.get().map(|x| x.engine.as_str())),
            ("alexander", c.alexander.get().map(|x| x.engine.as_str())),
            ("signature", c.signature.get().map(|x| x.engine.as_str())),
            ("khovanov", c.khovanov.get().map(|x| x.engine.as_str())),
        ]
        .into_iter()
        .filter_map(|(n, e)| e.map(|e| (n, e)))
        .collect()
    }

    /// The mirror image, named with [`MIRROR_SUFFIX`] toggled. Polynomial
    /// invariants already known are carried over by their mirror formulas.
    pub fn mirrored(&self) -> KnotRecord {
        let name = match self.name.strip_suffix(MIRROR_SUFFIX) {
            Some(base) => base.to_string(),
            None => format!("{}{MIRROR_SUFFIX}", self.name),
        };
        let m = KnotRecord { name, diagram: self.diagram.mirror(), volume: self.volume.clone(), cache: Cache::default() };
        let c = &self.cache;
        if let Some(v) = c.jones.get() {
            let _ = m.cache.jones.set(computed(mirror_jones(&v.value)));
        }
        if let Some(v) = c.homfly.get() {
            let _ = m.cache.homfly.set(computed(mirror_homfly(&v.value)));
        }
        if let Some(v) = c.kauffman.get() {
            let _ = m.cache.kauffman.set(computed(mirror_kauffman(&v.value)));
        }
        if let Some(v) = c.alexander.get() {
            let _ = m.cache.alexander.set(computed(v.value.clone()));
        }
        if let Some(v) = c.signature.get() {
            let _ = m.cache.signature.set(computed(-v.value));
        }
        m
    }
}

/// Resolves a knot argument: an inline PD string, a path to a `.pd` file, or
/// a name looked up as `<dir>/<name>.pd` in each search directory. A name
/// ending in [`MIRROR_SUFFIX`] resolves to the mirror image.
pub fn resolve_knot(arg: &str, search: &[&Path]) -> Result<KnotRecord> {
    let arg = arg.trim();
    if arg.starts_with("X(") || arg.starts_with("X (") {
        return Ok(KnotRecord::new("input", PlanarDiagram::parse(arg)?));
    }
    let path = Path::new(arg);
    if path.is_file() {
        return ingest_pd_text(&path.to_string_lossy(), &std::fs::read_to_string(path)?);
    }
    if let Some(base) = arg.strip_suffix(MIRROR_SUFFIX) {
        return Ok(resolve_knot(base, search)?.mirrored());
    }
    for dir in search {
        let p = dir.join(format!("{arg}.pd"));
        if p.is_file() {
            let mut r = ingest_pd_text(&p.to_string_lossy(), &std::fs::read_to_string(&p)?)?;
            r.name = arg.to_string();
            return Ok(r);
        }
    }
    Err(Error::Ingest { file: arg.to_string(), line: 0, msg: "not a PD string, file or known knot name".into() })
}

/// `|a - b| <= tol`.
pub(crate) fn within(a: &BigRational, b: &BigRational, tol: &BigRational) -> bool {
    let d = a - b;
    let d = if d < BigRational::zero() { -d } else { d };
    d <= *tol
}

/// Default volume tolerance, `10⁻⁹`.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), 9))
}
