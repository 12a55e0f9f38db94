//! Almost-mutant classes: equal HOMFLY-PT and Kauffman polynomials, equal
//! signature and volumes within a tolerance.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{default_tolerance, within, KnotRecord, Volume};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub volume_tol: BigRational,
    /// Also classify the mirror image of every record.
    pub mirrors: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { volume_tol: default_tolerance(), mirrors: false }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AlmostMutantClass {
    /// Member names, sorted.
    pub members: Vec<String>,
    #[serde(serialize_with = "poly2_json")]
    pub homfly: LaurentPoly2,
    #[serde(serialize_with = "poly2_json")]
    pub kauffman: LaurentPoly2,
    pub signature: i32,
    /// Volume of the first member.
    #[serde(serialize_with = "volume_json")]
    pub volume: Volume,
}

fn poly2_json<S: serde::Serializer>(p: &LaurentPoly2, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_json().serialize(s)
}

fn volume_json<S: serde::Serializer>(v: &Volume, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.text)
}

struct Keyed<'a> {
    record: &'a KnotRecord,
    volume: &'a Volume,
    homfly: &'a LaurentPoly2,
    kauffman: &'a LaurentPoly2,
    signature: i32,
}

/// Partitions `records` (with their mirrors when asked) into almost-mutant
/// classes. Classes and members come out sorted by name, so the result does
/// not depend on input order. Volumes closer than the tolerance are chained
/// together after sorting.
pub fn classify(records: &[KnotRecord], opts: &ClassifyOptions) -> Result<Vec<AlmostMutantClass>> {
    for r in records {
        if r.volume.is_none() {
            return Err(Error::MissingInvariant { record: r.name.clone(), invariant: "volume" });
        }
    }
    records.par_iter().try_for_each(|r| -> Result<()> {
        r.homfly()?;
        r.kauffman()?;
        r.signature()?;
        Ok(())
    })?;
    // mirrors inherit the invariants through the mirror formulas
    let mirrors: Vec<KnotRecord> = if opts.mirrors { records.iter().map(KnotRecord::mirrored).collect() } else { Vec::new() };
    let keyed: Vec<Keyed> = records
        .iter()
        .chain(mirrors.iter())
        .map(|r| {
            Ok(Keyed {
                record: r,
                volume: r.volume.as_ref().expect("checked"),
                homfly: r.homfly()?,
                kauffman: r.kauffman()?,
                signature: r.signature()?,
            })
        })
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<(String, String, i32), Vec<&Keyed>> = BTreeMap::new();
    for k in &keyed {
        groups.entry((k.homfly.to_string(), k.kauffman.to_string(), k.signature)).or_default().push(k);
    }
    let mut classes = Vec::new();
    for (_, mut g) in groups {
        g.sort_by(|a, b| a.volume.value.cmp(&b.volume.value).then_with(|| a.record.name.cmp(&b.record.name)));
        let mut start = 0;
        for i in 1..=g.len() {
            if i == g.len() || !within(&g[i - 1].volume.value, &g[i].volume.value, &opts.volume_tol) {
                let chunk = &g[start..i];
                let mut members: Vec<String> = chunk.iter().map(|k| k.record.name.clone()).collect();
                members.sort();
                let first = chunk.iter().min_by(|a, b| a.record.name.cmp(&b.record.name)).expect("nonempty");
                classes.push(AlmostMutantClass {
                    members,
                    homfly: first.homfly.clone(),
                    kauffman: first.kauffman.clone(),
                    signature: first.signature,
                    volume: first.volume.clone(),
                });
                start = i;
            }
        }
    }
    classes.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PlanarDiagram;

    fn rec(name: &str, pd: &str, vol: &str) -> KnotRecord {
        KnotRecord::new(name, PlanarDiagram::parse(pd).unwrap()).with_volume(Volume::parse(vol, 10).unwrap())
    }

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIG8: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn partition_and_tolerance() {
        let a = rec("a", TREFOIL, "1.0000000000");
        let b = rec("b", TREFOIL, "1.0000000001");
        let c = rec("c", FIG8, "2.0298832128");
        let rs = vec![a.clone(), b.clone(), c.clone()];
        let classes = classify(&rs, &ClassifyOptions::default()).unwrap();
        let names: Vec<Vec<String>> = classes.iter().map(|c| c.members.clone()).collect();
        assert_eq!(names, vec![vec!["a".to_string(), "b".into()], vec!["c".into()]]);
        let strict = ClassifyOptions { volume_tol: BigRational::from_integer(0.into()), mirrors: false };
        assert_eq!(classify(&rs, &strict).unwrap().len(), 3);
        let shuffled = vec![c, a, b];
        let again: Vec<Vec<String>> = classify(&shuffled, &ClassifyOptions::default()).unwrap().into_iter().map(|c| c.members).collect();
        assert_eq!(again, names);
    }

    #[test]
    fn mirrors_respect_chirality() {
        let rs = vec![rec("t", TREFOIL, "0.5"), rec("e", FIG8, "2.0298832128")];
        let opts = ClassifyOptions { mirrors: true, ..ClassifyOptions::default() };
        let names: Vec<Vec<String>> = classify(&rs, &opts).unwrap().into_iter().map(|c| c.members).collect();
        // the trefoil is chiral, the figure eight amphichiral
        assert!(names.contains(&vec!["e".to_string(), "e*".into()]));
        assert!(names.contains(&vec!["t".to_string()]));
        assert!(names.contains(&vec!["t*".to_string()]));
    }

    #[test]
    fn missing_volume() {
        let r = KnotRecord::new("x", PlanarDiagram::parse(TREFOIL).unwrap());
        assert!(matches!(classify(&[r], &ClassifyOptions::default()), Err(Error::MissingInvariant { .. })));
        assert!(classify(&[], &ClassifyOptions::default()).unwrap().is_empty());
    }
}
