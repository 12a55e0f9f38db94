//! Cutting a tangle out of a diagram and gluing a replacement back in.

use std::collections::{BTreeSet, HashMap};

use super::{CableSpec, Closure, Endpoint, Involution, Tangle};
use crate::diagram::{PlanarDiagram, Slot, UnionFind};
use crate::error::{Error, Result};

/// What remains of a diagram once a tangle is removed.
#[derive(Debug, Clone)]
pub struct Context {
    /// Crossings outside the region, oriented as in the source diagram.
    crossings: Vec<[u32; 4]>,
    /// Outside label at each boundary point, cables counterclockwise.
    boundary: [Vec<u32>; 4],
    /// Arc directions to keep: label and the (context) slot it enters.
    seeds: Vec<(u32, Slot)>,
    free_loops: u32,
}

impl Context {
    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// The outside diagram as a closure for tangles with these cable sizes.
    pub fn to_closure(&self, name: &str) -> Closure {
        let mut ports = Vec::new();
        for e in Endpoint::ALL {
            for (i, &l) in self.boundary[e.index()].iter().enumerate() {
                ports.push(((e, i), l));
            }
        }
        Closure::Outer { name: name.to_string(), crossings: self.crossings.clone(), ports }
    }

    /// Glues `t` into the hole. Cable sizes must match.
    pub fn embed(&self, t: &Tangle) -> Result<PlanarDiagram> {
        for e in Endpoint::ALL {
            if t.cable_at(e).len() != self.boundary[e.index()].len() {
                return Err(Error::Tangle(format!("replacement cable {e} has the wrong size")));
            }
        }
        let base = self.crossings.iter().flatten().chain(self.boundary.iter().flatten()).copied().max().unwrap_or(0);
        let t = t.map_labels(|l| l + base);
        let top = t.max_label().max(base) as usize;
        let mut uf = UnionFind::new(top + 1);
        for e in Endpoint::ALL {
            for (i, &l) in t.cable_at(e).iter().enumerate() {
                uf.union(self.boundary[e.index()][i] as usize, l as usize);
            }
        }
        // label classes are represented by their smallest member, which is
        // the context label whenever one exists
        let roots: Vec<usize> = (0..=top).map(|l| uf.find(l)).collect();
        let mut rep: HashMap<usize, u32> = HashMap::new();
        for (l, &r) in roots.iter().enumerate() {
            rep.entry(r).or_insert(l as u32);
        }
        let find = |l: u32| rep[&roots[l as usize]];
        // tangle crossings first, so the region keeps its indices
        let shift = t.n_crossings();
        let mut crossings: Vec<[u32; 4]> = t.crossings().iter().map(|x| x.map(find)).collect();
        crossings.extend(self.crossings.iter().map(|x| x.map(find)));
        let seeds: Vec<(u32, Slot)> = self.seeds.iter().map(|&(l, (c, p))| (find(l), (c + shift, p))).collect();
        let mut in_crossing: BTreeSet<u32> = crossings.iter().flatten().copied().collect();
        let mut free = self.free_loops;
        for e in Endpoint::ALL {
            for &l in &self.boundary[e.index()] {
                if in_crossing.insert(find(l)) {
                    free += 1;
                }
            }
        }
        if crossings.is_empty() {
            return if free == 1 { Ok(PlanarDiagram::unknot()) } else { PlanarDiagram::new(vec![], free) };
        }
        PlanarDiagram::from_unoriented(crossings, free, &seeds)
    }
}

/// Cuts out the crossings in `region`, which must meet the rest of the
/// diagram in exactly four arcs.
pub fn extract_tangle(d: &PlanarDiagram, region: &[usize]) -> Result<(Tangle, Context)> {
    extract_with(d, region, CableSpec { n: 1, m: 1 })
}

/// Like [`extract_tangle`] for a region holding a cabled tangle `T(n, m)`:
/// the boundary arcs are grouped into four cables whose strands pair up as
/// `n` and `m` parallel copies.
pub fn extract_with(d: &PlanarDiagram, region: &[usize], spec: CableSpec) -> Result<(Tangle, Context)> {
    let n = d.n_crossings();
    let inside: BTreeSet<usize> = region.iter().copied().collect();
    if let Some(&c) = inside.iter().find(|&&c| c >= n) {
        return Err(Error::Region(format!("crossing {c} does not exist")));
    }
    let index = d.arc_index();
    let xs = d.crossings();
    // boundary arcs: (label, inner slot, outer slot)
    let mut cut: Vec<(u32, Slot, Slot)> = Vec::new();
    for l in index.labels() {
        let [a, b] = index.ends(l);
        match (inside.contains(&a.0), inside.contains(&b.0)) {
            (true, false) => cut.push((l, a, b)),
            (false, true) => cut.push((l, b, a)),
            _ => {}
        }
    }
    let want = 2 * (spec.n + spec.m);
    if cut.len() != want {
        return Err(Error::Region(format!("boundary arc count {} (expected {want})", cut.len())));
    }
    // counterclockwise successor: the face right of the inward dart of e
    // is the face right of the outward dart of the next arc
    let mut face_of: HashMap<Slot, usize> = HashMap::new();
    for (f, darts) in d.faces().iter().enumerate() {
        for &s in darts {
            face_of.insert(s, f);
        }
    }
    let mut by_out_face: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, &(_, inner, _)) in cut.iter().enumerate() {
        by_out_face.entry(face_of[&inner]).or_default().push(k);
    }
    let mut order = vec![0usize];
    while order.len() < cut.len() {
        let (_, _, outer) = cut[*order.last().expect("nonempty")];
        let next = match by_out_face.get(&face_of[&outer]).map(Vec::as_slice) {
            Some([k]) => *k,
            _ => return Err(Error::Region("region is not a disk in the diagram".into())),
        };
        if next == order[0] {
            return Err(Error::Region("region is not a disk in the diagram".into()));
        }
        order.push(next);
    }
    let (_, _, last_outer) = cut[*order.last().expect("nonempty")];
    if by_out_face.get(&face_of[&last_outer]).map(Vec::as_slice) != Some(&[order[0]][..]) {
        return Err(Error::Region("region is not a disk in the diagram".into()));
    }
    // start the cyclic order at the smallest label
    let labels: Vec<u32> = order.iter().map(|&k| cut[k].0).collect();
    let start = (0..labels.len()).min_by_key(|&i| labels[i]).expect("nonempty");
    let ring: Vec<u32> = (0..labels.len()).map(|i| labels[(start + i) % labels.len()]).collect();

    let tangle_xs: Vec<[u32; 4]> = inside.iter().map(|&c| xs[c]).collect();
    let tangle = group_cables(&tangle_xs, &ring, spec)
        .ok_or_else(|| Error::Region("boundary does not split into cables of the requested sizes".into()))?;

    let outside: Vec<usize> = (0..n).filter(|c| !inside.contains(c)).collect();
    let new_index: HashMap<usize, usize> = outside.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let crossings: Vec<[u32; 4]> = outside.iter().map(|&c| xs[c]).collect();
    let mut seeds = Vec::new();
    for l in index.labels() {
        let h = d.head_of(&index, l);
        if let Some(&c) = new_index.get(&h.0) {
            seeds.push((l, (c, h.1)));
        }
    }
    seeds.sort_unstable();
    let boundary = tangle.boundary().clone();
    let ctx = Context { crossings, boundary, seeds, free_loops: d.free_loops() };
    Ok((tangle, ctx))
}

/// Splits a counterclockwise ring of boundary labels into NW, SW, SE, NE
/// cables that make a valid tangle with the requested strand counts.
fn group_cables(xs: &[[u32; 4]], ring: &[u32], spec: CableSpec) -> Option<Tangle> {
    let b = ring.len();
    for r in 0..b {
        for a in 1..b {
            for s in 1..b - a {
                for e in 1..b - a - s {
                    let sizes = [a, s, e, b - a - s - e];
                    let mut cables: Vec<Vec<u32>> = Vec::new();
                    let mut at = r;
                    for &k in &sizes {
                        cables.push((0..k).map(|i| ring[(at + i) % b]).collect());
                        at += k;
                    }
                    // ccw order NW, SW, SE, NE into index order NW, NE, SW, SE
                    let boundary = [cables[0].clone(), cables[3].clone(), cables[1].clone(), cables[2].clone()];
                    let Some(t) = try_strings(xs, boundary) else { continue };
                    let [(p, _), (q, _)] = t.strings();
                    if t.cable_at(p).len() == spec.n && t.cable_at(q).len() == spec.m {
                        return Some(t);
                    }
                }
            }
        }
    }
    None
}

fn try_strings(xs: &[[u32; 4]], boundary: [Vec<u32>; 4]) -> Option<Tangle> {
    use Endpoint::*;
    for strings in [[(NW, NE), (SW, SE)], [(NW, SW), (NE, SE)], [(NW, SE), (NE, SW)]] {
        if let Ok(t) = Tangle::new(xs.to_vec(), boundary.clone(), strings) {
            return Some(t);
        }
    }
    None
}

/// Replaces the cabled tangle `T(n, m)` sitting at `region` by its image
/// under `s`.
pub fn cabled_mutate(d: &PlanarDiagram, region: &[usize], s: Involution, spec: CableSpec) -> Result<PlanarDiagram> {
    let (t, ctx) = extract_with(d, region, spec)?;
    if !t.is_string_preserving(s) {
        return Err(Error::NotStringPreserving(s.name()));
    }
    let out = ctx.embed(&t.mutate(s))?;
    debug_assert_eq!(out.n_components(), d.n_components());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::canonical_dt;
    use crate::skein::jones;

    fn trefoil() -> PlanarDiagram {
        PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    #[test]
    fn trefoil_two_crossing_tangle() {
        let d = trefoil();
        let (t, ctx) = extract_tangle(&d, &[0, 1]).unwrap();
        assert_eq!(t.n_crossings(), 2);
        assert_eq!(ctx.n_crossings(), 1);
        let back = ctx.embed(&t).unwrap();
        assert_eq!(canonical_dt(&back).unwrap(), canonical_dt(&d).unwrap());
    }

    #[test]
    fn whole_diagram_is_rejected() {
        let d = trefoil();
        let err = extract_tangle(&d, &[0, 1, 2]).unwrap_err();
        assert!(err.to_string().contains("boundary arc count 0"));
    }

    #[test]
    fn conway_mutation_of_trefoil_region() {
        let d = trefoil();
        let (t, ctx) = extract_tangle(&d, &[0, 1]).unwrap();
        for s in Involution::ALL {
            let m = ctx.embed(&t.mutate(s)).unwrap();
            assert_eq!(jones(&m).unwrap(), jones(&d).unwrap());
        }
    }

    #[test]
    fn cabled_mutation_with_unit_spec() {
        let d = trefoil();
        let spec = CableSpec::new(1, 1).unwrap();
        let (t, _) = extract_tangle(&d, &[0, 1]).unwrap();
        let s = Involution::ALL.into_iter().find(|&s| t.is_string_preserving(s)).unwrap();
        let once = cabled_mutate(&d, &[0, 1], s, spec).unwrap();
        let twice = cabled_mutate(&once, &[0, 1], s, spec).unwrap();
        assert_eq!(jones(&once).unwrap(), jones(&d).unwrap());
        assert_eq!(canonical_dt(&twice).unwrap(), canonical_dt(&d).unwrap());
        let bad = Involution::ALL.into_iter().find(|&s| !t.is_string_preserving(s)).unwrap();
        assert!(matches!(cabled_mutate(&d, &[0, 1], bad, spec), Err(Error::NotStringPreserving(_))));
    }
}
