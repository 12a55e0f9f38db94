//! Fixture loading, independent oracles and randomized property checks
//! shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use mutknot::khovanov::{parse_kh, BigradedGroups};
use mutknot::mutation::random::{random_closure, random_tangle};
use mutknot::mutation::{cable, close, CableSpec, Closure, Endpoint, Involution, Tangle};
use mutknot::poly::{LaurentPoly, LaurentPoly2, Var};
use mutknot::skein::jones;
use mutknot::PlanarDiagram;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The five pairs, in listing order.
pub const PAIRS: [(&str, &str); 5] = [
    ("14n22185", "14n22589"),
    ("15n115375", "15n51748"),
    ("15n133697", "15n135711"),
    ("15n148673", "15n151500M"),
    ("15n57436", "15n57606"),
];

pub fn knots_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../knots")
}

pub struct Fixture {
    pub name: String,
    pub diagram: PlanarDiagram,
    pub jones: LaurentPoly,
    pub alexander: LaurentPoly,
    pub homfly: LaurentPoly2,
    pub kauffman: LaurentPoly2,
    pub kh: BigradedGroups,
}

pub fn fixture(name: &str) -> Fixture {
    let dir = knots_dir();
    let read = |ext: &str| std::fs::read_to_string(dir.join(format!("{name}.{ext}"))).unwrap();
    let diagram = PlanarDiagram::parse(&read("pd")).unwrap();
    let inv: HashMap<String, String> = read("inv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once(':'))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect();
    let kh_text = read("kh");
    let mut lines = kh_text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#'));
    let ranks = lines.next().unwrap_or("");
    let torsion = lines.next().unwrap_or("");
    Fixture {
        name: name.to_string(),
        diagram,
        jones: LaurentPoly::parse(Var::T, &inv["jones"]).unwrap(),
        alexander: LaurentPoly::parse(Var::T, &inv["alexander"]).unwrap(),
        homfly: LaurentPoly2::parse((Var::L, Var::M), &inv["homfly"]).unwrap(),
        kauffman: LaurentPoly2::parse((Var::Fa, Var::Z), &inv["kauffman"]).unwrap(),
        kh: parse_kh(ranks, torsion).unwrap(),
    }
}

pub fn all_fixtures() -> Vec<Fixture> {
    PAIRS.iter().flat_map(|(a, b)| [fixture(a), fixture(b)]).collect()
}

/// Number of faces of the 4-valent graph, or `None` when a label does not
/// occur exactly twice.
pub fn face_count(d: &PlanarDiagram) -> Option<usize> {
    let xs = d.crossings();
    let mut ends: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in xs.iter().enumerate() {
        for (s, &l) in x.iter().enumerate() {
            ends.entry(l).or_default().push((c, s));
        }
    }
    if ends.values().any(|v| v.len() != 2) {
        return None;
    }
    let other = |c: usize, s: usize| {
        let v = &ends[&xs[c][s]];
        if v[0] == (c, s) {
            v[1]
        } else {
            v[0]
        }
    };
    let mut seen = vec![[false; 4]; xs.len()];
    let mut faces = 0;
    for c in 0..xs.len() {
        for s in 0..4 {
            if seen[c][s] {
                continue;
            }
            faces += 1;
            let (mut cc, mut ss) = (c, s);
            while !seen[cc][ss] {
                seen[cc][ss] = true;
                let (oc, os) = other(cc, ss);
                cc = oc;
                ss = (os + 1) % 4;
            }
        }
    }
    Some(faces)
}

/// Connected components of the underlying graph.
pub fn graph_components(d: &PlanarDiagram) -> usize {
    let xs = d.crossings();
    let mut parent: Vec<usize> = (0..xs.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    let mut first: HashMap<u32, usize> = HashMap::new();
    for (c, x) in xs.iter().enumerate() {
        for &l in x {
            if let Some(&o) = first.get(&l) {
                let (a, b) = (find(&mut parent, o), find(&mut parent, c));
                parent[a] = b;
            } else {
                first.insert(l, c);
            }
        }
    }
    (0..xs.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Face tracing treats each of the `k` components as its own surface, so
/// the diagram is planar iff `V - E + F = 2k`.
pub fn is_planar(d: &PlanarDiagram) -> bool {
    let n = d.n_crossings();
    n == 0 || face_count(d) == Some(n + 2 * graph_components(d))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random link diagram: a random tangle closed by a random closure.
pub fn random_diagram<R: Rng>(rng: &mut R, max_crossings: usize) -> PlanarDiagram {
    loop {
        let t = random_tangle(rng, max_crossings);
        let c = random_closure(rng);
        if let Ok(closed) = close(&t, &c) {
            if closed.diagram.n_crossings() <= max_crossings + 3 {
                return closed.diagram;
            }
        }
    }
}

/// A random knot diagram with at least one crossing.
pub fn random_knot<R: Rng>(rng: &mut R, max_crossings: usize) -> PlanarDiagram {
    loop {
        let d = random_diagram(rng, max_crossings);
        if d.is_knot() && d.n_crossings() > 0 {
            return d;
        }
    }
}

/// The involution that keeps each string of `t`.
pub fn string_preserving(t: &Tangle) -> Involution {
    Involution::ALL.into_iter().find(|&s| t.is_string_preserving(s)).expect("one involution keeps the strings")
}

/// Boundary ports in counterclockwise order, starting at NW; `reverse`
/// flips the order inside each endpoint.
fn ccw_ports(t: &Tangle, reverse: bool) -> Vec<(Endpoint, usize)> {
    use Endpoint::*;
    let mut out = Vec::new();
    for e in [NW, SW, SE, NE] {
        let k = t.cable_at(e).len();
        let mut idx: Vec<usize> = (0..k).collect();
        if reverse {
            idx.reverse();
        }
        out.extend(idx.into_iter().map(|i| (e, i)));
    }
    out
}

/// Joins `inner` to a second tangle `outer` lying beside it: the port at
/// counterclockwise position `k` of `inner` meets position `rot - k` of
/// `outer`. Returns the diagram only when it is a planar knot.
pub fn glue(inner: &Tangle, outer: &Tangle, rot: usize, flips: (bool, bool)) -> Option<PlanarDiagram> {
    let a = ccw_ports(inner, flips.0);
    let b = ccw_ports(outer, flips.1);
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let ports = (0..n).map(|k| (a[k], outer.port_label(b[(rot + n - k) % n]))).collect();
    let c = Closure::Outer { name: "outer".into(), crossings: outer.crossings().to_vec(), ports };
    let closed = close(inner, &c).ok()?;
    (closed.is_knot() && is_planar(&closed.diagram)).then_some(closed.diagram)
}

/// A T(1,2) cabled-mutant pair. A random tangle with its second string
/// doubled is glued to a random cabled outer tangle; the result must be a
/// knot with at least `min_crossings` crossings and nontrivial Jones
/// polynomial. The partner uses the inner tangle mutated by its
/// string-preserving involution.
pub fn cabled_mutant_pair<R: Rng>(rng: &mut R, inner_max: usize, outer_max: usize, min_crossings: usize) -> (PlanarDiagram, PlanarDiagram) {
    let spec = CableSpec::new(1, 2).unwrap();
    loop {
        let t = random_tangle(rng, inner_max);
        let inner = cable(&t, spec);
        let mutant = inner.mutate(string_preserving(&t));
        let o = random_tangle(rng, outer_max);
        let os = if rng.gen_bool(0.5) { (1, 2) } else { (2, 1) };
        let outer = cable(&o, CableSpec::new(os.0, os.1).unwrap());
        let rot = rng.gen_range(0..6);
        for flips in [(false, false), (false, true), (true, false), (true, true)] {
            if let (Some(a), Some(b)) = (glue(&inner, &outer, rot, flips), glue(&mutant, &outer, rot, flips)) {
                if a.n_crossings() >= min_crossings && !jones(&a).unwrap().is_one() {
                    return (a, b);
                }
            }
        }
    }
}
