//! Parallel copies of tangle strings in the blackboard framing.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Directions, Endpoint, Tangle};
use crate::error::{Error, Result};

/// `n` copies of string 0 (the one through NW) and `m` of string 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableSpec {
    pub n: usize,
    pub m: usize,
}

impl CableSpec {
    pub fn new(n: usize, m: usize) -> Result<CableSpec> {
        if n == 0 || m == 0 {
            return Err(Error::Tangle("cable multiplicities must be positive".into()));
        }
        Ok(CableSpec { n, m })
    }

    fn copies(&self, string: usize) -> usize {
        if string == 0 {
            self.n
        } else {
            self.m
        }
    }
}

struct Fresh(u32);

impl Fresh {
    fn next(&mut self) -> u32 {
        self.0 += 1;
        self.0
    }
}

/// Replaces every strand by parallel copies. Each crossing becomes a grid;
/// each strand gets `framing - self_writhe` full twists next to its start so
/// that the copies have the requested framing.
pub fn cable(t: &Tangle, spec: CableSpec) -> Tangle {
    if spec.n == 1 && spec.m == 1 {
        return t.clone();
    }
    let dir = Directions::of(t);
    let strands = t.strands();
    let mut fresh = Fresh(0);
    // copies[label][i], copy 0 on the right of the direction of travel
    let mut copies: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut mult: HashMap<u32, usize> = HashMap::new();
    for st in &strands {
        let k = spec.copies(st.string);
        for &l in &st.labels {
            mult.insert(l, k);
            copies.insert(l, (0..k).map(|_| fresh.next()).collect());
        }
    }
    let mut crossings = Vec::new();
    for (c, x) in t.crossings().iter().enumerate() {
        let x = if dir.enters(t.crossings(), (c, 0)) { *x } else { [x[2], x[3], x[0], x[1]] };
        let [a, b, cc, d] = x;
        let over_east = dir.enters(t.crossings(), (c, 0)) == dir.enters(t.crossings(), (c, 3));
        let (ku, ko) = (mult[&a], mult[&b]);
        // under copies run north at x = ku-1-i; over copies run along rows y
        let row_copy = |y: usize| if over_east { y } else { ko - 1 - y };
        let mut v = vec![vec![0u32; ko + 1]; ku];
        for (xi, col) in v.iter_mut().enumerate() {
            col[0] = copies[&a][ku - 1 - xi];
            col[ko] = copies[&cc][ku - 1 - xi];
            for cell in col.iter_mut().take(ko).skip(1) {
                *cell = fresh.next();
            }
        }
        let mut h = vec![vec![0u32; ku + 1]; ko];
        for (y, row) in h.iter_mut().enumerate() {
            row[0] = copies[&d][row_copy(y)];
            row[ku] = copies[&b][row_copy(y)];
            for cell in row.iter_mut().take(ku).skip(1) {
                *cell = fresh.next();
            }
        }
        for xi in 0..ku {
            for y in 0..ko {
                crossings.push([v[xi][y], h[y][xi + 1], v[xi][y + 1], h[y][xi]]);
            }
        }
    }
    // boundary: copies listed counterclockwise; a strand entering the disk
    // has its leftmost copy first
    let mut start_of: HashMap<(Endpoint, usize), bool> = HashMap::new();
    for st in &strands {
        start_of.insert(st.start, true);
        start_of.insert(st.end, false);
    }
    let mut boundary: [Vec<u32>; 4] = Default::default();
    let mut twisted: HashMap<(Endpoint, usize), Vec<u32>> = HashMap::new();
    for st in &strands {
        let k = spec.copies(st.string);
        let turns = t.framing()[st.string] - t.self_writhe(st);
        if k > 1 && turns != 0 {
            let first = st.labels[0];
            // positions x = 0..k from the strand's right, looking inward
            let inner: Vec<u32> = (0..k).map(|xi| copies[&first][k - 1 - xi]).collect();
            // bottom labels west to east are already counterclockwise
            let outer = full_twists(&inner, turns, &mut fresh, &mut crossings);
            twisted.insert(st.start, outer);
        }
    }
    for e in Endpoint::ALL {
        for (i, &l) in t.cable_at(e).iter().enumerate() {
            if let Some(ls) = twisted.get(&(e, i)) {
                boundary[e.index()].extend(ls);
                continue;
            }
            let cs = &copies[&l];
            if start_of[&(e, i)] {
                boundary[e.index()].extend(cs.iter().rev());
            } else {
                boundary[e.index()].extend(cs.iter());
            }
        }
    }
    Tangle::new(crossings, boundary, t.strings()).expect("cable of a valid tangle").with_framing(t.framing())
}

/// Inserts `turns` full twists on parallel strands running north, whose
/// labels at the top are `top[x]` (x increasing eastward). Returns the new
/// labels at the bottom.
fn full_twists(top: &[u32], turns: i32, fresh: &mut Fresh, out: &mut Vec<[u32; 4]>) -> Vec<u32> {
    let k = top.len();
    let bottom: Vec<u32> = (0..k).map(|_| fresh.next()).collect();
    let mut cur = bottom.clone();
    let mut made: Vec<[u32; 4]> = Vec::new();
    for _ in 0..turns.unsigned_abs() as usize * k {
        for x in 0..k - 1 {
            let (tl, tr) = (fresh.next(), fresh.next());
            if turns > 0 {
                made.push([cur[x + 1], tr, tl, cur[x]]);
            } else {
                made.push([cur[x], cur[x + 1], tr, tl]);
            }
            cur[x] = tl;
            cur[x + 1] = tr;
        }
    }
    // the full twist is a pure braid: position x ends where it started
    let rename: HashMap<u32, u32> = cur.iter().copied().zip(top.iter().copied()).collect();
    out.extend(made.into_iter().map(|x| x.map(|l| *rename.get(&l).unwrap_or(&l))));
    bottom
}
