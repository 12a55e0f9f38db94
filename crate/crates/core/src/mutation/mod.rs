//! 2-2 tangles, Conway mutation, cabling of tangle strings and cabled
//! mutation.
//!
//! A [`Tangle`] lives in a disk whose boundary, read counterclockwise, meets
//! the four positions NW, SW, SE, NE. Each position carries a *cable*: one
//! boundary point for an ordinary tangle, several after cabling. Crossings
//! use the PD convention of [`crate::diagram`] except that the strands of a
//! tangle carry no orientation; only the rule "slots 0 and 2 are the
//! under-strand" is required.

mod cable;
mod closure;
pub mod data;
mod extract;
pub mod random;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cable::{cable, CableSpec};
pub use closure::{close, close_knot, Closed, Closure};
pub use extract::{cabled_mutate, extract_tangle, extract_with, Context};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Endpoint {
    NW,
    NE,
    SW,
    SE,
}

impl Endpoint {
    pub const ALL: [Endpoint; 4] = [Endpoint::NW, Endpoint::NE, Endpoint::SW, Endpoint::SE];
    /// Counterclockwise order around the tangle disk.
    pub const CCW: [Endpoint; 4] = [Endpoint::NW, Endpoint::SW, Endpoint::SE, Endpoint::NE];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Endpoint::NW => "NW",
            Endpoint::NE => "NE",
            Endpoint::SW => "SW",
            Endpoint::SE => "SE",
        }
    }
}

impl FromStr for Endpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Endpoint> {
        match s.trim() {
            "NW" => Ok(Endpoint::NW),
            "NE" => Ok(Endpoint::NE),
            "SW" => Ok(Endpoint::SW),
            "SE" => Ok(Endpoint::SE),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown endpoint '{other}'") }),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three π-rotations of the four-punctured sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Involution {
    /// NW↔NE, SW↔SE: rotation about the vertical axis in the plane.
    RhoX,
    /// NW↔SW, NE↔SE: rotation about the horizontal axis in the plane.
    RhoY,
    /// NW↔SE, NE↔SW: rotation about the axis normal to the plane.
    RhoZ,
}

impl Involution {
    pub const ALL: [Involution; 3] = [Involution::RhoX, Involution::RhoY, Involution::RhoZ];

    pub fn apply(self, e: Endpoint) -> Endpoint {
        use Endpoint::*;
        match (self, e) {
            (Involution::RhoX, NW) => NE,
            (Involution::RhoX, NE) => NW,
            (Involution::RhoX, SW) => SE,
            (Involution::RhoX, SE) => SW,
            (Involution::RhoY, NW) => SW,
            (Involution::RhoY, SW) => NW,
            (Involution::RhoY, NE) => SE,
            (Involution::RhoY, SE) => NE,
            (Involution::RhoZ, NW) => SE,
            (Involution::RhoZ, SE) => NW,
            (Involution::RhoZ, NE) => SW,
            (Involution::RhoZ, SW) => NE,
        }
    }

    /// Rotations about an in-plane axis reflect the projection and swap
    /// over with under.
    pub fn flips_plane(self) -> bool {
        self != Involution::RhoZ
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::RhoX => "rho-x",
            Involution::RhoY => "rho-y",
            Involution::RhoZ => "rho-z",
        }
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Involution> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" | "rx" | "rhox" | "rho-x" | "ρx" => Ok(Involution::RhoX),
            "y" | "ry" | "rhoy" | "rho-y" | "ρy" => Ok(Involution::RhoY),
            "z" | "rz" | "rhoz" | "rho-z" | "ρz" => Ok(Involution::RhoZ),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown involution '{other}'") }),
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A boundary point: cable position and index within the cable
/// (counterclockwise).
pub type Port = (Endpoint, usize);

/// Path of one strand through a tangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub start: Port,
    pub end: Port,
    /// Arc labels in travel order.
    pub labels: Vec<u32>,
    /// Underlying string (0 contains NW).
    pub string: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    crossings: Vec<[u32; 4]>,
    /// Labels at each cable, indexed by [`Endpoint::index`], counterclockwise.
    boundary: [Vec<u32>; 4],
    /// Endpoint pairs joined by the two strings; string 0 starts at NW.
    strings: [(Endpoint, Endpoint); 2],
    /// Per-string framing relative to the blackboard, in full twists.
    framing: [i32; 2],
}

impl Tangle {
    /// Validates crossings, cables and the string partition.
    pub fn new(crossings: Vec<[u32; 4]>, boundary: [Vec<u32>; 4], strings: [(Endpoint, Endpoint); 2]) -> Result<Tangle> {
        let t = Tangle { crossings, boundary, strings: normalize_strings(strings)?, framing: [0, 0] };
        t.validate()?;
        Ok(t)
    }

    /// A 2-2 tangle with one label per endpoint; the string partition is read
    /// off the arc connectivity.
    pub fn from_pd(crossings: Vec<[u32; 4]>, nw: u32, ne: u32, sw: u32, se: u32) -> Result<Tangle> {
        let boundary = [vec![nw], vec![ne], vec![sw], vec![se]];
        let partner = trace_partner(&crossings, &boundary, (Endpoint::NW, 0))?;
        let strings = match partner.0 {
            Endpoint::NE => [(Endpoint::NW, Endpoint::NE), (Endpoint::SW, Endpoint::SE)],
            Endpoint::SW => [(Endpoint::NW, Endpoint::SW), (Endpoint::NE, Endpoint::SE)],
            Endpoint::SE => [(Endpoint::NW, Endpoint::SE), (Endpoint::NE, Endpoint::SW)],
            Endpoint::NW => return Err(Error::Tangle("string returns to NW".into())),
        };
        Tangle::new(crossings, boundary, strings)
    }

    pub fn with_framing(mut self, framing: [i32; 2]) -> Tangle {
        self.framing = framing;
        self
    }

    /// Two arcs NW–SW and NE–SE with no crossings.
    pub fn zero() -> Tangle {
        Tangle::from_pd(vec![], 1, 2, 1, 2).expect("zero tangle")
    }

    /// Two arcs NW–NE and SW–SE with no crossings.
    pub fn infinity() -> Tangle {
        Tangle::from_pd(vec![], 1, 1, 2, 2).expect("infinity tangle")
    }

    /// `|k|` half twists of the two right endpoints of [`Tangle::infinity`],
    /// arranged in a horizontal row; the sign picks the handedness.
    pub fn horizontal_twists(k: i32) -> Tangle {
        if k == 0 {
            return Tangle::infinity();
        }
        // strands run right to left; crossing i joins top/bottom labels
        // t_i, b_i on its right with t_{i+1}, b_{i+1} on its left
        let n = k.unsigned_abs();
        let top = |i: u32| 2 * i + 1;
        let bot = |i: u32| 2 * i + 2;
        let mut xs = Vec::new();
        let mut cur = (top(0), bot(0));
        for i in 0..n {
            let (t, b) = cur;
            let (lt, lb) = (top(i + 1), bot(i + 1));
            // ccw from the bottom-right: b, t, lt, lb; the strands swap
            // b -> lt and t -> lb
            if k > 0 {
                xs.push([b, t, lt, lb]);
            } else {
                xs.push([t, lt, lb, b]);
            }
            cur = (lt, lb);
        }
        let (t_end, b_end) = cur;
        Tangle::from_pd(xs, t_end, top(0), b_end, bot(0)).expect("twist tangle")
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn cable_at(&self, e: Endpoint) -> &[u32] {
        &self.boundary[e.index()]
    }

    pub fn boundary(&self) -> &[Vec<u32>; 4] {
        &self.boundary
    }

    pub fn strings(&self) -> [(Endpoint, Endpoint); 2] {
        self.strings
    }

    pub fn framing(&self) -> [i32; 2] {
        self.framing
    }

    /// Boundary points in counterclockwise order.
    pub fn ports(&self) -> Vec<Port> {
        Endpoint::CCW.iter().flat_map(|&e| (0..self.boundary[e.index()].len()).map(move |i| (e, i))).collect()
    }

    pub fn port_label(&self, p: Port) -> u32 {
        self.boundary[p.0.index()][p.1]
    }

    pub fn max_label(&self) -> u32 {
        self.crossings.iter().flatten().chain(self.boundary.iter().flatten()).copied().max().unwrap_or(0)
    }

    pub fn string_of(&self, e: Endpoint) -> usize {
        usize::from(self.strings[0].0 != e && self.strings[0].1 != e)
    }

    /// Strands, each starting in the cable of its string's first endpoint.
    pub fn strands(&self) -> Vec<Strand> {
        let mut out = Vec::new();
        for (s, &(from, _)) in self.strings.iter().enumerate() {
            for i in 0..self.boundary[from.index()].len() {
                let (labels, end) = walk(&self.crossings, &self.boundary, (from, i)).expect("validated tangle");
                out.push(Strand { start: (from, i), end, labels, string: s });
            }
        }
        out
    }

    /// Sum of the signs of the crossings a strand makes with itself.
    pub fn self_writhe(&self, strand: &Strand) -> i32 {
        let dir = Directions::of(self);
        let own: BTreeSet<u32> = strand.labels.iter().copied().collect();
        self.crossings
            .iter()
            .enumerate()
            .filter(|(_, x)| x.iter().all(|l| own.contains(l)))
            .map(|(c, _)| dir.sign(&self.crossings, c))
            .sum()
    }

    /// Self-writhe of each underlying string (of its first strand).
    pub fn string_writhes(&self) -> [i32; 2] {
        let strands = self.strands();
        let mut w = [0; 2];
        for s in 0..2 {
            if let Some(st) = strands.iter().find(|st| st.string == s) {
                w[s] = self.self_writhe(st);
            }
        }
        w
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Tangle(m));
        let mut count: HashMap<u32, (usize, usize)> = HashMap::new();
        for x in &self.crossings {
            for &l in x {
                count.entry(l).or_default().0 += 1;
            }
        }
        for cable in &self.boundary {
            if cable.is_empty() {
                return bad("every endpoint needs at least one boundary point".into());
            }
            for &l in cable {
                count.entry(l).or_default().1 += 1;
            }
        }
        for (&l, &(inner, outer)) in &count {
            if inner + outer != 2 {
                return Err(Error::Label { label: l, count: inner + outer });
            }
        }
        let [(a, b), (c, d)] = self.strings;
        if [a, b, c, d].iter().collect::<BTreeSet<_>>().len() != 4 {
            return bad("string partition must use each endpoint once".into());
        }
        for (s, &(from, to)) in self.strings.iter().enumerate() {
            if self.boundary[from.index()].len() != self.boundary[to.index()].len() {
                return bad(format!("cables of string {} have different sizes", s + 1));
            }
        }
        let mut covered = 0usize;
        for e in Endpoint::ALL {
            for i in 0..self.boundary[e.index()].len() {
                let (labels, end) = walk(&self.crossings, &self.boundary, (e, i))?;
                let s = self.string_of(e);
                let partner = if self.strings[s].0 == e { self.strings[s].1 } else { self.strings[s].0 };
                if end.0 != partner {
                    return bad(format!("strand from {e}{i} ends at {}, not at {partner}", end.0));
                }
                covered += labels.len();
            }
        }
        // each strand was walked from both ends
        if covered / 2 != count.len() {
            return bad("tangle has a closed component".into());
        }
        if !planar_disk(&self.crossings, &self.boundary) {
            return Err(Error::NonPlanar { euler: 0, expected: 2 });
        }
        Ok(())
    }

    pub fn is_string_preserving(&self, s: Involution) -> bool {
        self.strings.iter().all(|&(a, b)| s.apply(a) == b)
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Tangle {
        let mut t = self.clone();
        t.crossings = self.crossings.iter().map(|&[a, b, c, d]| [b, c, d, a]).collect();
        t.framing = self.framing.map(|f| -f);
        t
    }

    /// The image of the tangle under `s`.
    pub fn mutate(&self, s: Involution) -> Tangle {
        let crossings = if s.flips_plane() {
            self.crossings.iter().map(|&[a, b, c, d]| [b, a, d, c]).collect()
        } else {
            self.crossings.clone()
        };
        let mut boundary: [Vec<u32>; 4] = Default::default();
        for e in Endpoint::ALL {
            let mut cable = self.boundary[e.index()].clone();
            if s.flips_plane() {
                cable.reverse();
            }
            boundary[s.apply(e).index()] = cable;
        }
        let mapped = self.strings.map(|(a, b)| (s.apply(a), s.apply(b)));
        let mut framing = self.framing;
        if mapped[1].0 == Endpoint::NW || mapped[1].1 == Endpoint::NW {
            framing.swap(0, 1);
        }
        Tangle { crossings, boundary, strings: normalize_strings(mapped).expect("permuted partition"), framing }
    }

    /// Tangle text: a `B` line naming the boundary labels, an `S` line with
    /// the string partition, optional `F` framing line, then PD terms.
    pub fn parse(text: &str) -> Result<Tangle> {
        let mut boundary: Option<[Vec<u32>; 4]> = None;
        let mut strings: Option<[(Endpoint, Endpoint); 2]> = None;
        let mut framing = [0, 0];
        let mut pd = String::new();
        let mut offset = 0usize;
        for line in text.lines() {
            let body = line.split('#').next().unwrap_or("").trim();
            let perr = |msg: String| Error::Parse { pos: offset, msg };
            if let Some(rest) = body.strip_prefix("B ") {
                let mut b: [Vec<u32>; 4] = Default::default();
                for item in rest.split_whitespace() {
                    let (k, v) = item.split_once('=').ok_or_else(|| perr(format!("expected NAME=label, got '{item}'")))?;
                    let e: Endpoint = k.parse().map_err(|_| perr(format!("unknown endpoint '{k}'")))?;
                    let labels: Vec<u32> = v
                        .split(',')
                        .map(|s| s.parse::<u32>().map_err(|_| perr(format!("bad label '{s}'"))))
                        .collect::<Result<_>>()?;
                    b[e.index()] = labels;
                }
                if b.iter().any(|c| c.is_empty()) {
                    return Err(perr("B line must name all four endpoints".into()));
                }
                boundary = Some(b);
            } else if let Some(rest) = body.strip_prefix("S ") {
                let pairs: Vec<(Endpoint, Endpoint)> = rest
                    .split(')')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        let inner = s.trim_start_matches('(');
                        let (a, b) = inner.split_once(',').ok_or_else(|| perr(format!("bad string '{s}'")))?;
                        Ok((a.parse()?, b.parse()?))
                    })
                    .collect::<Result<_>>()?;
                if pairs.len() != 2 {
                    return Err(perr("S line needs two strings".into()));
                }
                strings = Some([pairs[0], pairs[1]]);
            } else if let Some(rest) = body.strip_prefix("F ") {
                let v: Vec<i32> = rest
                    .split_whitespace()
                    .map(|s| s.parse::<i32>().map_err(|_| perr(format!("bad framing '{s}'"))))
                    .collect::<Result<_>>()?;
                if v.len() != 2 {
                    return Err(perr("F line needs two integers".into()));
                }
                framing = [v[0], v[1]];
            } else {
                pd.push_str(body);
                pd.push(' ');
            }
            offset += line.len() + 1;
        }
        let boundary = boundary.ok_or_else(|| Error::Parse { pos: 0, msg: "missing B line".into() })?;
        let (crossings, loops) = crate::diagram::parse_pd_terms(&pd)?;
        if loops > 0 {
            return Err(Error::Tangle("closed components are not allowed".into()));
        }
        let t = match strings {
            Some(s) => Tangle::new(crossings, boundary, s)?,
            None if boundary.iter().all(|c| c.len() == 1) => {
                Tangle::from_pd(crossings, boundary[0][0], boundary[1][0], boundary[2][0], boundary[3][0])?
            }
            None => return Err(Error::Parse { pos: 0, msg: "missing S line".into() }),
        };
        Ok(t.with_framing(framing))
    }

    /// Relabels arcs `1..` so that two tangles can be compared.
    pub fn relabeled(&self) -> Tangle {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 1;
        for st in self.strands() {
            for l in st.labels {
                map.entry(l).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            }
        }
        self.map_labels(|l| map[&l])
    }

    pub(crate) fn map_labels(&self, f: impl Fn(u32) -> u32) -> Tangle {
        Tangle {
            crossings: self.crossings.iter().map(|x| x.map(&f)).collect(),
            boundary: self.boundary.clone().map(|c| c.into_iter().map(&f).collect()),
            strings: self.strings,
            framing: self.framing,
        }
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cable = |e: Endpoint| self.boundary[e.index()].iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        writeln!(f, "B NW={} NE={} SW={} SE={}", cable(Endpoint::NW), cable(Endpoint::NE), cable(Endpoint::SW), cable(Endpoint::SE))?;
        let [(a, b), (c, d)] = self.strings;
        writeln!(f, "S ({a},{b}) ({c},{d})")?;
        if self.framing != [0, 0] {
            writeln!(f, "F {} {}", self.framing[0], self.framing[1])?;
        }
        let pd: Vec<String> = self.crossings.iter().map(|x| format!("X({},{},{},{})", x[0], x[1], x[2], x[3])).collect();
        writeln!(f, "{}", pd.join(" "))
    }
}

impl FromStr for Tangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tangle> {
        Tangle::parse(s)
    }
}

fn normalize_strings(s: [(Endpoint, Endpoint); 2]) -> Result<[(Endpoint, Endpoint); 2]> {
    let flip = |(a, b): (Endpoint, Endpoint)| if b == Endpoint::NW { (b, a) } else { (a, b) };
    let [p, q] = s.map(flip);
    let mut out = if q.0 == Endpoint::NW { [q, p] } else { [p, q] };
    if out[1].0 > out[1].1 {
        out[1] = (out[1].1, out[1].0);
    }
    if out[0].0 != Endpoint::NW {
        return Err(Error::Tangle("no string ends at NW".into()));
    }
    Ok(out)
}

/// Follows a strand from a boundary point; returns its labels, the slot each
/// label enters (none for the last), and the far end.
fn walk_slots(crossings: &[[u32; 4]], boundary: &[Vec<u32>; 4], from: Port) -> Result<(Vec<(u32, Option<(usize, usize)>)>, Port)> {
    let mut at: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in crossings.iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            at.entry(l).or_default().push((c, p));
        }
    }
    let port_of = |l: u32, not: Option<Port>| -> Option<Port> {
        Endpoint::ALL.iter().find_map(|&e| {
            boundary[e.index()].iter().enumerate().find_map(|(i, &m)| (m == l && Some((e, i)) != not).then_some((e, i)))
        })
    };
    let dangling = |l: u32| Error::Tangle(format!("arc {l} is dangling"));
    let first = boundary[from.0.index()][from.1];
    if let Some(p) = port_of(first, Some(from)) {
        return Ok((vec![(first, None)], p));
    }
    let mut out = Vec::new();
    let mut label = first;
    let mut slot = *at.get(&first).and_then(|v| v.first()).ok_or_else(|| dangling(first))?;
    for _ in 0..=2 * crossings.len() {
        out.push((label, Some(slot)));
        let exit = (slot.0, (slot.1 + 2) % 4);
        label = crossings[exit.0][exit.1];
        if let Some(p) = port_of(label, None) {
            out.push((label, None));
            return Ok((out, p));
        }
        slot = *at[&label].iter().find(|&&s| s != exit).ok_or_else(|| dangling(label))?;
    }
    Err(Error::Tangle("strand does not reach the boundary".into()))
}

fn walk(crossings: &[[u32; 4]], boundary: &[Vec<u32>; 4], from: Port) -> Result<(Vec<u32>, Port)> {
    walk_slots(crossings, boundary, from).map(|(v, p)| (v.into_iter().map(|x| x.0).collect(), p))
}

fn trace_partner(crossings: &[[u32; 4]], boundary: &[Vec<u32>; 4], from: Port) -> Result<Port> {
    walk(crossings, boundary, from).map(|(_, p)| p)
}

/// Travel direction of every arc once each strand runs from its start.
pub(crate) struct Directions {
    /// Slot at which each arc enters a crossing (absent when it leaves the tangle).
    head: HashMap<u32, (usize, usize)>,
}

impl Directions {
    pub(crate) fn of(t: &Tangle) -> Directions {
        let mut head = HashMap::new();
        for &(from, _) in &t.strings {
            for i in 0..t.boundary[from.index()].len() {
                let (path, _) = walk_slots(&t.crossings, &t.boundary, (from, i)).expect("validated tangle");
                head.extend(path.into_iter().filter_map(|(l, h)| h.map(|h| (l, h))));
            }
        }
        Directions { head }
    }

    /// Whether the arc in `slot` enters its crossing there.
    pub(crate) fn enters(&self, crossings: &[[u32; 4]], slot: (usize, usize)) -> bool {
        self.head.get(&crossings[slot.0][slot.1]) == Some(&slot)
    }

    /// Crossing sign under the strand orientations.
    pub(crate) fn sign(&self, crossings: &[[u32; 4]], c: usize) -> i32 {
        let under_from_0 = self.enters(crossings, (c, 0));
        let over_from_3 = self.enters(crossings, (c, 3));
        if under_from_0 == over_from_3 {
            1
        } else {
            -1
        }
    }
}

/// Euler characteristic test for a tangle drawn in a disk: crossings and
/// boundary points are vertices, the boundary circle contributes edges.
fn planar_disk(crossings: &[[u32; 4]], boundary: &[Vec<u32>; 4]) -> bool {
    // half-edges: 4 per crossing, 3 per boundary point (next, strand, prev)
    let n = crossings.len();
    let ports: Vec<u32> = Endpoint::CCW.iter().flat_map(|e| boundary[e.index()].iter().copied()).collect();
    let b = ports.len();
    let he_cross = |c: usize, p: usize| 4 * c + p;
    let he_port = |i: usize, k: usize| 4 * n + 3 * i + k;
    let total = 4 * n + 3 * b;
    let mut twin = vec![usize::MAX; total];
    let mut ends: HashMap<u32, Vec<usize>> = HashMap::new();
    for (c, x) in crossings.iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            ends.entry(l).or_default().push(he_cross(c, p));
        }
    }
    for (i, &l) in ports.iter().enumerate() {
        ends.entry(l).or_default().push(he_port(i, 1));
        let j = (i + 1) % b;
        twin[he_port(i, 0)] = he_port(j, 2);
        twin[he_port(j, 2)] = he_port(i, 0);
    }
    for hs in ends.values() {
        if hs.len() != 2 {
            return false;
        }
        twin[hs[0]] = hs[1];
        twin[hs[1]] = hs[0];
    }
    // rotation: next half-edge counterclockwise at the same vertex
    let rot = |h: usize| -> usize {
        if h < 4 * n {
            4 * (h / 4) + (h % 4 + 1) % 4
        } else {
            let i = (h - 4 * n) / 3;
            4 * n + 3 * i + ((h - 4 * n) % 3 + 1) % 3
        }
    };
    let mut seen = vec![false; total];
    let mut faces = 0i64;
    for s in 0..total {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut h = s;
        while !seen[h] {
            seen[h] = true;
            h = rot(twin[h]);
        }
    }
    let v = (n + b) as i64;
    let e = (total / 2) as i64;
    v - e + faces == 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_preservation() {
        let t = Tangle::infinity();
        assert_eq!(t.strings(), [(Endpoint::NW, Endpoint::NE), (Endpoint::SW, Endpoint::SE)]);
        assert!(t.is_string_preserving(Involution::RhoX));
        assert!(!t.is_string_preserving(Involution::RhoY));
        assert!(!t.is_string_preserving(Involution::RhoZ));
        let x = Tangle::horizontal_twists(1);
        assert_eq!(x.strings(), [(Endpoint::NW, Endpoint::SE), (Endpoint::NE, Endpoint::SW)]);
        assert!(x.is_string_preserving(Involution::RhoZ));
    }

    #[test]
    fn mutation_is_an_involution() {
        let t = Tangle::horizontal_twists(3);
        for s in Involution::ALL {
            assert_eq!(t.mutate(s).mutate(s), t);
        }
    }

    #[test]
    fn text_round_trip() {
        let t = Tangle::horizontal_twists(-2).with_framing([1, 0]);
        let back = Tangle::parse(&t.to_string()).unwrap();
        assert_eq!(back, t);
        let plain = Tangle::parse("B NW=1 NE=2 SW=3 SE=4\nX(3,4,2,1)").unwrap();
        assert_eq!(plain.n_crossings(), 1);
    }

    #[test]
    fn rejects_bad_tangles() {
        assert!(Tangle::parse("B NW=1 NE=2 SW=3\n").is_err());
        assert!(Tangle::parse("B NW=1 NE=1 SW=2 SE=2\nS (NW,SW) (NE,SE)").is_err());
        // closed loop inside
        assert!(Tangle::parse("B NW=1 NE=1 SW=2 SE=2\nX(3,4,4,3)").is_err());
        // boundary order incompatible with the crossing
        assert!(Tangle::from_pd(vec![[1, 2, 3, 4]], 1, 3, 2, 4).is_err());
    }

    #[test]
    fn twist_writhe() {
        let t = Tangle::horizontal_twists(2);
        // both crossings are between the two strings
        assert_eq!(t.string_writhes(), [0, 0]);
    }
}
