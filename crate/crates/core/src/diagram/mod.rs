//! Oriented knot and link diagrams in planar-diagram (PD) notation.
//!
//! A crossing is a quadruple `X(a,b,c,d)` of arc labels read
//! counterclockwise, starting from the incoming under-strand. So `a -> c` is
//! the under-strand and `b`/`d` carry the over-strand:
//!
//! ```text
//!            c
//!            ^
//!            |
//!     d -----|----- b        over-strand b--d
//!            |
//!            a               under-strand enters at a, leaves at c
//! ```
//!
//! A crossing is positive when the over-strand runs `d -> b` (the standard
//! right-handed crossing), negative when it runs `b -> d`.

mod dt;
mod goeritz;
pub mod moves;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub use dt::{canonical_dt, dt_from, realize_dt, DtCode};
pub use goeritz::{goeritz, signature, GoeritzData};

/// A crossing slot: `(crossing index, position 0..4)`.
pub type Slot = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    /// Crossingless unknotted circles (the 0-crossing unknot has one).
    free_loops: u32,
    /// `true` when the over-strand of crossing `i` runs slot 3 -> slot 1.
    positive: Vec<bool>,
    n_components: usize,
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarDiagram[{}]", self.to_pd_string())
    }
}

/// Where each arc label sits: its two slots, tail first when oriented.
#[derive(Debug, Clone)]
pub struct ArcIndex {
    ends: HashMap<u32, [Slot; 2]>,
}

impl ArcIndex {
    fn build(crossings: &[[u32; 4]]) -> Result<ArcIndex> {
        let mut seen: HashMap<u32, Vec<Slot>> = HashMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for (p, &l) in x.iter().enumerate() {
                if l == 0 {
                    return Err(Error::Parse { pos: 0, msg: "arc labels must be positive".into() });
                }
                seen.entry(l).or_default().push((c, p));
            }
        }
        let mut ends = HashMap::with_capacity(seen.len());
        let mut bad: Vec<(u32, usize)> =
            seen.iter().filter(|(_, v)| v.len() != 2).map(|(l, v)| (*l, v.len())).collect();
        if !bad.is_empty() {
            bad.sort_unstable();
            return Err(Error::Label { label: bad[0].0, count: bad[0].1 });
        }
        for (l, v) in seen {
            ends.insert(l, [v[0], v[1]]);
        }
        Ok(ArcIndex { ends })
    }

    pub fn ends(&self, label: u32) -> [Slot; 2] {
        self.ends[&label]
    }

    /// The slot at the other end of the arc leaving `slot`.
    pub fn other_end(&self, crossings: &[[u32; 4]], slot: Slot) -> Slot {
        let l = crossings[slot.0][slot.1];
        let [a, b] = self.ends[&l];
        if a == slot {
            b
        } else {
            a
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.ends.keys().copied()
    }
}

impl PlanarDiagram {
    /// Validates an oriented PD code.
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: u32) -> Result<PlanarDiagram> {
        let index = ArcIndex::build(&crossings)?;
        let (positive, cycles) = orient_over_strands(&crossings, &index)?;
        let d = PlanarDiagram { n_components: cycles + free_loops as usize, crossings, free_loops, positive };
        d.check_planar(&index)?;
        Ok(d)
    }

    /// Builds a diagram from crossings whose under-strand is `slot 0 - slot 2`
    /// but whose orientation is unknown. Each component is oriented so that
    /// the arc listed in `seeds` (label, head slot) points the given way;
    /// components without a seed run away from the first slot, in crossing
    /// order, of their smallest label.
    pub fn from_unoriented(crossings: Vec<[u32; 4]>, free_loops: u32, seeds: &[(u32, Slot)]) -> Result<PlanarDiagram> {
        let index = ArcIndex::build(&crossings)?;
        let n = crossings.len();
        // head slot of each arc once oriented
        let mut head: HashMap<u32, Slot> = HashMap::with_capacity(2 * n);
        let mut labels: Vec<u32> = index.labels().collect();
        labels.sort_unstable();
        let seed_map: HashMap<u32, Slot> = seeds.iter().copied().collect();
        let mut start_order: Vec<u32> = seeds.iter().map(|s| s.0).filter(|l| index.ends.contains_key(l)).collect();
        start_order.extend(labels.iter().copied());
        for l in start_order {
            if head.contains_key(&l) {
                continue;
            }
            let [e0, e1] = index.ends(l);
            let first_head = match seed_map.get(&l) {
                Some(h) if *h == e0 || *h == e1 => *h,
                Some(_) => return Err(Error::Tangle(format!("seed for arc {l} does not name one of its ends"))),
                None => e1.max(e0),
            };
            // walk the component: arrive at `h`, continue out the opposite slot
            let mut label = l;
            let mut h = first_head;
            loop {
                head.insert(label, h);
                let out = (h.0, (h.1 + 2) % 4);
                let next = crossings[out.0][out.1];
                if head.contains_key(&next) {
                    break;
                }
                let [a, b] = index.ends(next);
                h = if a == out { b } else { a };
                label = next;
            }
        }
        let crossings: Vec<[u32; 4]> = crossings
            .iter()
            .enumerate()
            .map(|(c, x)| {
                if head[&x[0]] == (c, 0) {
                    *x
                } else {
                    [x[2], x[3], x[0], x[1]]
                }
            })
            .collect();
        PlanarDiagram::new(crossings, free_loops)
    }

    pub fn unknot() -> PlanarDiagram {
        PlanarDiagram { crossings: vec![], free_loops: 1, positive: vec![], n_components: 1 }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> u32 {
        self.free_loops
    }

    pub fn n_components(&self) -> usize {
        self.n_components
    }

    pub fn is_knot(&self) -> bool {
        self.n_components == 1
    }

    pub fn require_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::MultiComponent { components: self.n_components })
        }
    }

    pub fn arc_index(&self) -> ArcIndex {
        ArcIndex::build(&self.crossings).expect("validated diagram")
    }

    /// Sign of crossing `i`: +1 right-handed, -1 left-handed.
    pub fn sign(&self, i: usize) -> i32 {
        if self.positive[i] {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i32> {
        (0..self.crossings.len()).map(|i| self.sign(i)).collect()
    }

    /// Whether the over-strand of crossing `i` enters at slot 3 (and leaves at 1).
    pub fn over_enters_at_3(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn writhe(&self) -> i32 {
        self.signs().iter().sum()
    }

    pub fn n_positive(&self) -> usize {
        self.positive.iter().filter(|p| **p).count()
    }

    pub fn n_negative(&self) -> usize {
        self.crossings.len() - self.n_positive()
    }

    /// Every crossing's over/under role swapped.
    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.positive)
            .map(|(x, &pos)| if pos { [x[3], x[0], x[1], x[2]] } else { [x[1], x[2], x[3], x[0]] })
            .collect();
        PlanarDiagram {
            crossings,
            free_loops: self.free_loops,
            positive: self.positive.iter().map(|p| !p).collect(),
            n_components: self.n_components,
        }
    }

    /// Component traversals as sequences of arc labels in orientation order.
    /// Free loops are not listed.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let index = self.arc_index();
        let mut labels: Vec<u32> = index.labels().collect();
        labels.sort_unstable();
        let mut done: HashMap<u32, ()> = HashMap::new();
        let mut out = Vec::new();
        for l in labels {
            if done.contains_key(&l) {
                continue;
            }
            let mut comp = Vec::new();
            let mut label = l;
            loop {
                done.insert(label, ());
                comp.push(label);
                let h = self.head_of(&index, label);
                let out_slot = self.exit_slot(h);
                label = self.crossings[out_slot.0][out_slot.1];
                if label == l {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Slot where the oriented arc `label` ends.
    pub fn head_of(&self, index: &ArcIndex, label: u32) -> Slot {
        let [a, b] = index.ends(label);
        if self.is_incoming(a) {
            a
        } else {
            b
        }
    }

    /// Whether the arc in `slot` points into the crossing.
    pub fn is_incoming(&self, slot: Slot) -> bool {
        match slot.1 {
            0 => true,
            2 => false,
            1 => !self.positive[slot.0],
            _ => self.positive[slot.0],
        }
    }

    /// Slot through which the strand entering at `slot` leaves.
    pub fn exit_slot(&self, slot: Slot) -> Slot {
        (slot.0, (slot.1 + 2) % 4)
    }

    /// Faces of the planar embedding, each a cycle of darts. Dart `(c, p)`
    /// leaves crossing `c` through slot `p` with the face on its right, so the
    /// face owns the corner between slots `p - 1` and `p` of `c`.
    pub fn faces(&self) -> Vec<Vec<Slot>> {
        faces_of(&self.crossings, &self.arc_index())
    }

    fn check_planar(&self, index: &ArcIndex) -> Result<()> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(());
        }
        let f = faces_of(&self.crossings, index).len() as i64;
        let pieces = self.connected_pieces(index) as i64;
        let euler = n as i64 - 2 * n as i64 + f;
        if euler != 2 * pieces {
            return Err(Error::NonPlanar { euler, expected: 2 * pieces });
        }
        Ok(())
    }

    fn connected_pieces(&self, index: &ArcIndex) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        for l in index.labels() {
            let [a, b] = index.ends(l);
            uf.union(a.0, b.0);
        }
        (0..n).filter(|&i| uf.find(i) == i).count()
    }

    /// Component index (into [`components`](Self::components)) of every arc.
    pub fn component_of_arcs(&self) -> HashMap<u32, usize> {
        let mut m = HashMap::new();
        for (i, comp) in self.components().iter().enumerate() {
            for l in comp {
                m.insert(*l, i);
            }
        }
        m
    }

    /// Relabels arcs `1..=2n` in traversal order, components taken in order
    /// of their smallest original label.
    pub fn relabeled(&self) -> PlanarDiagram {
        let mut map = HashMap::new();
        let mut next = 1u32;
        for comp in self.components() {
            for l in comp {
                map.insert(l, next);
                next += 1;
            }
        }
        self.map_labels(|l| map[&l])
    }

    pub fn map_labels(&self, f: impl Fn(u32) -> u32) -> PlanarDiagram {
        PlanarDiagram {
            crossings: self.crossings.iter().map(|x| [f(x[0]), f(x[1]), f(x[2]), f(x[3])]).collect(),
            free_loops: self.free_loops,
            positive: self.positive.clone(),
            n_components: self.n_components,
        }
    }

    pub fn max_label(&self) -> u32 {
        self.crossings.iter().flat_map(|x| x.iter().copied()).max().unwrap_or(0)
    }

    /// PD text, e.g. `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`. Extra crossingless
    /// components are written as `O` terms; the bare unknot is `O`.
    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> =
            self.crossings.iter().map(|x| format!("X({},{},{},{})", x[0], x[1], x[2], x[3])).collect();
        for _ in 0..self.free_loops {
            parts.push("O".to_string());
        }
        parts.join(" ")
    }

    /// Parses PD text: whitespace-separated `X(a,b,c,d)` terms with positive
    /// integer labels, optional `O` terms for crossingless circles, `#`
    /// comments. Empty input is the 0-crossing unknot.
    pub fn parse(text: &str) -> Result<PlanarDiagram> {
        let (crossings, free_loops) = parse_pd_terms(text)?;
        if crossings.is_empty() && free_loops == 0 {
            return Ok(PlanarDiagram::unknot());
        }
        PlanarDiagram::new(crossings, free_loops)
    }

    /// The diagram with a different starting arc label offset; handy to
    /// disjointly combine diagrams.
    pub fn offset_labels(&self, by: u32) -> PlanarDiagram {
        self.map_labels(|l| l + by)
    }

    /// Structural key invariant under relabeling (but not under rotation of
    /// the crossing list beyond traversal order).
    pub fn canonical_key(&self) -> Vec<u32> {
        let r = self.relabeled();
        let mut xs: Vec<[u32; 4]> = r.crossings.clone();
        xs.sort_unstable();
        let mut key = vec![r.free_loops];
        for x in xs {
            key.extend_from_slice(&x);
        }
        key
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

pub(crate) fn faces_of(crossings: &[[u32; 4]], index: &ArcIndex) -> Vec<Vec<Slot>> {
    let n = crossings.len();
    let mut seen = vec![[false; 4]; n];
    let mut faces = Vec::new();
    for c in 0..n {
        for p in 0..4 {
            if seen[c][p] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = (c, p);
            while !seen[d.0][d.1] {
                seen[d.0][d.1] = true;
                face.push(d);
                let (c2, p2) = index.other_end(crossings, d);
                d = (c2, (p2 + 1) % 4);
            }
            faces.push(face);
        }
    }
    faces
}

/// Decides the direction of every over-strand by walking components from
/// their under passages. Returns per-crossing positivity and the number of
/// traversal cycles.
fn orient_over_strands(crossings: &[[u32; 4]], index: &ArcIndex) -> Result<(Vec<bool>, usize)> {
    let n = crossings.len();
    // head[label] = slot where the arc ends
    let mut head: HashMap<u32, Slot> = HashMap::with_capacity(2 * n);
    let mut labels: Vec<u32> = index.labels().collect();
    labels.sort_unstable();
    // arcs entering at slot 0 or leaving at slot 2 have a forced direction
    let mut forced: BTreeMap<u32, Slot> = BTreeMap::new();
    for (c, x) in crossings.iter().enumerate() {
        let h0 = (c, 0);
        if let Some(prev) = forced.insert(x[0], h0) {
            if prev != h0 {
                return Err(Error::Parse { pos: 0, msg: format!("arc {} enters two under-crossings", x[0]) });
            }
        }
        let [a, b] = index.ends(x[2]);
        let h2 = if a == (c, 2) { b } else { a };
        if let Some(prev) = forced.insert(x[2], h2) {
            if prev != h2 {
                return Err(Error::Parse { pos: 0, msg: format!("arc {} leaves two under-crossings", x[2]) });
            }
        }
    }
    let mut cycles = 0;
    let starts: Vec<(u32, Slot)> = forced
        .iter()
        .map(|(l, s)| (*l, *s))
        .chain(labels.iter().map(|&l| {
            let [a, b] = index.ends(l);
            (l, a.max(b))
        }))
        .collect();
    for (l, h0) in starts {
        if head.contains_key(&l) {
            continue;
        }
        cycles += 1;
        let mut label = l;
        let mut h = h0;
        loop {
            if let Some(f) = forced.get(&label) {
                if *f != h {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("orientation of arc {label} is inconsistent along its component"),
                    });
                }
            }
            head.insert(label, h);
            let out = (h.0, (h.1 + 2) % 4);
            let next = crossings[out.0][out.1];
            let [a, b] = index.ends(next);
            let nh = if a == out { b } else { a };
            if let Some(&prev) = head.get(&next) {
                if prev != nh {
                    return Err(Error::Parse { pos: 0, msg: format!("arc {next} traversed in both directions") });
                }
                break;
            }
            label = next;
            h = nh;
        }
    }
    let positive = crossings
        .iter()
        .enumerate()
        .map(|(c, x)| {
            // over-strand enters at slot 3 => runs d -> b
            head[&x[3]] == (c, 3)
        })
        .collect();
    Ok((positive, cycles))
}

pub(crate) fn parse_pd_terms(text: &str) -> Result<(Vec<[u32; 4]>, u32)> {
    let mut crossings = Vec::new();
    let mut free_loops = 0u32;
    let bytes = text.as_bytes();
    let mut i = 0;
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
    while i < bytes.len() {
        let ch = bytes[i];
        if ch.is_ascii_whitespace() || ch == b',' || ch == b';' {
            i += 1;
            continue;
        }
        if ch == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if ch == b'O' {
            free_loops += 1;
            i += 1;
            continue;
        }
        if ch != b'X' {
            return Err(err(i, "expected 'X(' or 'O'"));
        }
        i += 1;
        if i >= bytes.len() || bytes[i] != b'(' {
            return Err(err(i, "expected '(' after X"));
        }
        i += 1;
        let mut vals = [0u32; 4];
        for (k, v) in vals.iter_mut().enumerate() {
            while i < bytes.len() && bytes[i] == b' ' {
                i += 1;
            }
            let s = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if s == i {
                return Err(err(i, "expected a positive integer label"));
            }
            *v = text[s..i].parse().map_err(|_| err(s, "label out of range"))?;
            if *v == 0 {
                return Err(err(s, "labels must be positive"));
            }
            while i < bytes.len() && bytes[i] == b' ' {
                i += 1;
            }
            let want = if k < 3 { b',' } else { b')' };
            if i >= bytes.len() || bytes[i] != want {
                return Err(err(i, if k < 3 { "expected ','" } else { "expected ')'" }));
            }
            i += 1;
        }
        crossings.push(vals);
    }
    Ok((crossings, free_loops))
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEFT_TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn one_crossing_kink() {
        let d = PlanarDiagram::parse("X(1,2,2,1)").unwrap();
        assert_eq!(d.n_crossings(), 1);
        assert_eq!(d.n_components(), 1);
        assert_eq!(d.writhe(), -1);
        let e = PlanarDiagram::parse("X(1,1,2,2)").unwrap();
        assert_eq!(e.writhe(), 1);
    }

    #[test]
    fn trefoil_basics() {
        let d = PlanarDiagram::parse(LEFT_TREFOIL).unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.n_components(), 1);
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.mirror().writhe(), 3);
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(d.faces().len(), 5);
    }

    #[test]
    fn label_errors() {
        match PlanarDiagram::parse("X(1,2,3,1)") {
            Err(Error::Label { .. }) => {}
            other => panic!("expected label error, got {other:?}"),
        }
        assert!(matches!(PlanarDiagram::parse("X(1,2,3"), Err(Error::Parse { .. })));
        assert!(matches!(PlanarDiagram::parse("X(0,1,1,0)"), Err(Error::Parse { .. })));
        match PlanarDiagram::parse("Y(1,2,2,1)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        // trefoil with one crossing's rotation reversed
        let r = PlanarDiagram::parse("X(1,5,2,4) X(3,6,4,1) X(5,2,6,3)");
        assert!(matches!(r, Err(Error::NonPlanar { .. })), "{r:?}");
    }

    #[test]
    fn empty_text_is_unknot() {
        let d = PlanarDiagram::parse("# nothing\n").unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.n_components(), 1);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.mirror(), d);
        assert_eq!(PlanarDiagram::parse(&d.to_pd_string()).unwrap(), d);
    }

    #[test]
    fn hopf_link_components() {
        let d = PlanarDiagram::parse("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert_eq!(d.n_components(), 2);
        assert_eq!(d.writhe().abs(), 2);
        assert!(d.require_knot().is_err());
    }

    #[test]
    fn unoriented_input_is_reoriented() {
        // left trefoil with the first crossing written from the outgoing end
        let d = PlanarDiagram::from_unoriented(vec![[2, 5, 1, 4], [3, 6, 4, 1], [5, 2, 6, 3]], 0, &[]).unwrap();
        assert_eq!(d.writhe(), -3);
        assert_eq!(d.n_components(), 1);
    }

    #[test]
    fn relabel_preserves_structure() {
        let d = PlanarDiagram::parse("X(11,14,12,15) X(13,16,14,11) X(15,12,16,13)").unwrap();
        let r = d.relabeled();
        assert_eq!(r.max_label(), 6);
        assert_eq!(r.writhe(), d.writhe());
        assert_eq!(r.canonical_key(), PlanarDiagram::parse(LEFT_TREFOIL).unwrap().canonical_key());
    }
}
