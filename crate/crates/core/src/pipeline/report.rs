//! Class-size histograms and per-class Khovanov comparison.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{AlmostMutantClass, KnotRecord, MIRROR_SUFFIX};
use crate::error::{Error, Result};
use crate::khovanov::kh_diff;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    /// Class sizes only.
    Summary,
    /// Also compare Khovanov homology inside every class with two or more
    /// members.
    Khovanov,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub members: Vec<String>,
    /// Whether two members have different Khovanov homology; absent in
    /// summary mode and for singletons.
    pub kh_differs: Option<bool>,
    /// Number of bidegrees where the first two differing members disagree.
    pub kh_differences: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub classes: Vec<ClassReport>,
    /// Class size → number of classes of that size.
    pub histogram: BTreeMap<usize, usize>,
}

fn lookup(records: &[KnotRecord], name: &str) -> Result<KnotRecord> {
    if let Some(r) = records.iter().find(|r| r.name == name) {
        return Ok(r.clone());
    }
    if let Some(base) = name.strip_suffix(MIRROR_SUFFIX) {
        if let Some(r) = records.iter().find(|r| r.name == base) {
            return Ok(r.mirrored());
        }
    }
    Err(Error::MissingInvariant { record: name.to_string(), invariant: "diagram" })
}

pub fn report(classes: &[AlmostMutantClass], records: &[KnotRecord], mode: ReportMode) -> Result<Report> {
    let mut histogram = BTreeMap::new();
    for c in classes {
        *histogram.entry(c.members.len()).or_insert(0) += 1;
    }
    let class_reports = classes
        .par_iter()
        .map(|c| {
            if mode == ReportMode::Summary || c.members.len() < 2 {
                return Ok(ClassReport { members: c.members.clone(), kh_differs: None, kh_differences: 0 });
            }
            let rs: Vec<KnotRecord> = c.members.iter().map(|m| lookup(records, m)).collect::<Result<_>>()?;
            let first = rs[0].khovanov()?;
            let mut differences = 0;
            for r in &rs[1..] {
                let d = kh_diff(first, r.khovanov()?);
                if !d.is_empty() {
                    differences = d.len();
                    break;
                }
            }
            Ok(ClassReport { members: c.members.clone(), kh_differs: Some(differences > 0), kh_differences: differences })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report { classes: class_reports, histogram })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return Ok(());
        }
        writeln!(f, "class sizes (size: count)")?;
        for (size, count) in &self.histogram {
            writeln!(f, "  {size}: {count}")?;
        }
        writeln!(f, "classes")?;
        for c in &self.classes {
            let kh = match c.kh_differs {
                Some(true) => format!("  Kh differs ({} bidegrees)", c.kh_differences),
                Some(false) => "  Kh equal".to_string(),
                None => String::new(),
            };
            writeln!(f, "  {}{kh}", c.members.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{classify, ClassifyOptions, Volume};
    use crate::PlanarDiagram;

    #[test]
    fn empty_and_histogram() {
        let r = report(&[], &[], ReportMode::Khovanov).unwrap();
        assert!(r.classes.is_empty());
        assert_eq!(r.to_string(), "");
        let t = |n: &str, v: &str| {
            KnotRecord::new(n, PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap())
                .with_volume(Volume::parse(v, 3).unwrap())
        };
        let rs = vec![t("a", "1.0"), t("b", "1.0"), t("c", "2.0")];
        let classes = classify(&rs, &ClassifyOptions::default()).unwrap();
        let rep = report(&classes, &rs, ReportMode::Khovanov).unwrap();
        assert_eq!(rep.histogram, BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(rep.classes[0].kh_differs, Some(false));
        assert_eq!(rep.classes[1].kh_differs, None);
        assert!(rep.to_string().contains("  2: 1"));
    }
}
