//! The Khovanov cube of resolutions, one homological degree at a time.
//!
//! A crossing `X(a,b,c,d)` has its 0-smoothing joining `a–b` and `c–d` and its
//! 1-smoothing joining `a–d` and `b–c`. Generators are a resolution state
//! together with a bit per loop (1 = `v₊`, 0 = `v₋`). The differential out of
//! a state sums over its 0-bits `c` with sign `(-1)^(1-bits before c)`.

use std::collections::{BTreeMap, HashMap};

use crate::diagram::{PlanarDiagram, UnionFind};
use crate::linalg::SparseMatrix;

/// One resolution of the diagram: which loop every arc lies on.
#[derive(Debug, Clone)]
pub struct ResolutionState {
    pub bits: u32,
    pub loops: u8,
    /// Loop of each arc, loops numbered by their smallest arc.
    pub arc_loop: Vec<u8>,
}

impl ResolutionState {
    pub fn generators(&self) -> u64 {
        1 << self.loops
    }
}

pub(crate) struct Cube {
    n: usize,
    n_arcs: usize,
    /// Crossings over compacted arc ids `0..2n`.
    xs: Vec<[u16; 4]>,
    pub n_plus: i32,
    pub n_minus: i32,
    /// Marked arc for the reduced theory.
    base: Option<u16>,
    binom: Vec<Vec<usize>>,
}

/// Generators of one homological level, grouped by `q`-degree.
pub(crate) struct Level {
    pub states: Vec<ResolutionState>,
    /// `index[state bits]` = position in `states`.
    index: HashMap<u32, u32>,
    /// Per state: `q`-degree block and offset for each count of free `v₊` labels.
    offsets: Vec<Vec<(i32, usize)>>,
    /// Block sizes by `q`-degree.
    pub sizes: BTreeMap<i32, usize>,
}

impl Cube {
    pub fn new(d: &PlanarDiagram, reduced: bool) -> Cube {
        let mut labels: Vec<u32> = d.crossings().iter().flat_map(|x| x.iter().copied()).collect();
        labels.sort_unstable();
        labels.dedup();
        let id = |l: u32| labels.binary_search(&l).expect("label") as u16;
        let xs: Vec<[u16; 4]> = d.crossings().iter().map(|x| x.map(id)).collect();
        let n = xs.len();
        let max_loops = n + 2;
        let mut binom = vec![vec![0usize; max_loops + 1]; max_loops + 1];
        for i in 0..=max_loops {
            binom[i][0] = 1;
            for k in 1..=i {
                binom[i][k] = binom[i - 1][k - 1] + if k < i { binom[i - 1][k] } else { 0 };
            }
        }
        Cube {
            n,
            n_arcs: labels.len(),
            xs,
            n_plus: d.n_positive() as i32,
            n_minus: d.n_negative() as i32,
            base: if reduced { Some(0) } else { None },
            binom,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn resolve(&self, bits: u32) -> ResolutionState {
        let mut uf = UnionFind::new(self.n_arcs);
        for (i, x) in self.xs.iter().enumerate() {
            let [a, b, c, d] = x.map(usize::from);
            if bits >> i & 1 == 0 {
                uf.union(a, b);
                uf.union(c, d);
            } else {
                uf.union(a, d);
                uf.union(b, c);
            }
        }
        let mut root_loop: HashMap<usize, u8> = HashMap::new();
        let mut arc_loop = Vec::with_capacity(self.n_arcs);
        for a in 0..self.n_arcs {
            let r = uf.find(a);
            let next = root_loop.len() as u8;
            arc_loop.push(*root_loop.entry(r).or_insert(next));
        }
        ResolutionState { bits, loops: root_loop.len() as u8, arc_loop }
    }

    fn marked_loop(&self, s: &ResolutionState) -> Option<u8> {
        self.base.map(|b| s.arc_loop[b as usize])
    }

    fn free_loops(&self, s: &ResolutionState) -> usize {
        s.loops as usize - usize::from(self.base.is_some())
    }

    /// `q`-degree of a generator with `k` of its `free` loops labelled `v₊` at
    /// level `r`. In the reduced theory the marked `v₋` loop and the `+1`
    /// shift cancel.
    fn q_degree(&self, r: usize, free: usize, k: usize) -> i32 {
        2 * k as i32 - free as i32 + r as i32 + self.n_plus - 2 * self.n_minus
    }

    pub fn level(&self, r: usize) -> Level {
        let states: Vec<ResolutionState> =
            (0u32..1 << self.n).filter(|s| s.count_ones() as usize == r).map(|s| self.resolve(s)).collect();
        let index = states.iter().enumerate().map(|(i, s)| (s.bits, i as u32)).collect();
        let mut sizes: BTreeMap<i32, usize> = BTreeMap::new();
        let mut offsets = Vec::with_capacity(states.len());
        for s in &states {
            let free = self.free_loops(s);
            let per: Vec<(i32, usize)> = (0..=free)
                .map(|k| {
                    let q = self.q_degree(r, free, k);
                    let slot = sizes.entry(q).or_insert(0);
                    let off = *slot;
                    *slot += self.binom[free][k];
                    (q, off)
                })
                .collect();
            offsets.push(per);
        }
        Level { states, index, offsets, sizes }
    }

    /// Drops the marked loop's bit (always `v₋` in the reduced theory).
    fn free_label(&self, s: &ResolutionState, label: u32) -> u32 {
        match self.marked_loop(s) {
            None => label,
            Some(p) => ((label >> (p + 1)) << p) | (label & ((1 << p) - 1)),
        }
    }

    /// Rank of `label` among the masks of the same width and popcount.
    fn comb_rank(&self, label: u32) -> usize {
        let mut rank = 0;
        let mut k = 0;
        let mut bits = label;
        let mut pos = 0;
        while bits != 0 {
            if bits & 1 == 1 {
                k += 1;
                rank += self.binom[pos][k];
            }
            bits >>= 1;
            pos += 1;
        }
        rank
    }

    fn position(&self, lvl: &Level, si: usize, label: u32) -> (i32, usize) {
        let s = &lvl.states[si];
        let fl = self.free_label(s, label);
        let (q, off) = lvl.offsets[si][fl.count_ones() as usize];
        (q, off + self.comb_rank(fl))
    }

    fn labels_of<'a>(&self, s: &'a ResolutionState) -> impl Iterator<Item = u32> + 'a {
        let marked = self.marked_loop(s);
        (0u32..1 << s.loops).filter(move |l| marked.is_none_or(|p| l >> p & 1 == 0))
    }

    /// Differential from level `r` to level `r + 1`, one matrix per `q`-degree;
    /// row `x` holds `d(x)`.
    pub fn differential(&self, from: &Level, to: &Level) -> BTreeMap<i32, SparseMatrix> {
        let mut mats: BTreeMap<i32, SparseMatrix> = from
            .sizes
            .iter()
            .map(|(&q, &rows)| (q, SparseMatrix::new(rows, to.sizes.get(&q).copied().unwrap_or(0))))
            .collect();
        for (si, s) in from.states.iter().enumerate() {
            for c in 0..self.n {
                if s.bits >> c & 1 == 1 {
                    continue;
                }
                let sign: i64 = if (s.bits & ((1 << c) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                let ti = to.index[&(s.bits | 1 << c)] as usize;
                let t = &to.states[ti];
                let [a, _, cc, _] = self.xs[c].map(usize::from);
                let (la, lc) = (s.arc_loop[a], s.arc_loop[cc]);
                // where each loop of s goes in t
                let mut rep = vec![usize::MAX; s.loops as usize];
                for (arc, &l) in s.arc_loop.iter().enumerate() {
                    if rep[l as usize] == usize::MAX {
                        rep[l as usize] = arc;
                    }
                }
                let image: Vec<u8> = rep.iter().map(|&arc| t.arc_loop[arc]).collect();
                if la != lc {
                    // merge
                    let merged = t.arc_loop[a];
                    for label in self.labels_of(s) {
                        let (ba, bc) = (label >> la & 1, label >> lc & 1);
                        if ba == 0 && bc == 0 {
                            continue;
                        }
                        let mut out = 0u32;
                        for l in 0..s.loops {
                            if l != la && l != lc && label >> l & 1 == 1 {
                                out |= 1 << image[l as usize];
                            }
                        }
                        if ba & bc == 1 {
                            out |= 1 << merged;
                        }
                        self.push(&mut mats, from, si, label, to, ti, out, sign);
                    }
                } else {
                    // split of loop la into the loops of arcs a and b
                    let b = self.xs[c][1] as usize;
                    let (ta, tb) = (t.arc_loop[a], t.arc_loop[b]);
                    for label in self.labels_of(s) {
                        let mut out = 0u32;
                        for l in 0..s.loops {
                            if l != la && label >> l & 1 == 1 {
                                out |= 1 << image[l as usize];
                            }
                        }
                        if label >> la & 1 == 1 {
                            for x in [ta, tb] {
                                self.push(&mut mats, from, si, label, to, ti, out | 1 << x, sign);
                            }
                        } else {
                            self.push(&mut mats, from, si, label, to, ti, out, sign);
                        }
                    }
                }
            }
        }
        for m in mats.values_mut() {
            m.normalize();
        }
        mats
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &self,
        mats: &mut BTreeMap<i32, SparseMatrix>,
        from: &Level,
        si: usize,
        label: u32,
        to: &Level,
        ti: usize,
        out: u32,
        sign: i64,
    ) {
        let (q, row) = self.position(from, si, label);
        let (q2, col) = self.position(to, ti, out);
        debug_assert_eq!(q, q2, "differential preserves the q-degree");
        mats.get_mut(&q).expect("block").push(row, col, sign);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_cube_shape() {
        let d = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let cube = Cube::new(&d, false);
        let loops: Vec<u8> = (0..8).map(|s| cube.resolve(s).loops).collect();
        // the all-A state carries the top bracket degree A^7 = A^3·δ²
        assert_eq!(loops[0], 3);
        assert_eq!(loops[7], 2);
        let total: u64 = (0..8).map(|s| cube.resolve(s).generators()).sum();
        let levels: Vec<Level> = (0..=3).map(|r| cube.level(r)).collect();
        assert_eq!(levels.iter().map(|l| l.sizes.values().sum::<usize>() as u64).sum::<u64>(), total);
    }
}
