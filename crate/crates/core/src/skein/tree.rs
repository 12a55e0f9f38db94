//! Skein-tree evaluation shared by HOMFLY-PT and the Kauffman polynomial.
//!
//! Diagrams are kept in a compact working form (arc labels `1..=2n`). At each
//! node the diagram is simplified by Reidemeister I/II removals, base points
//! are chosen to make it as close to descending as possible, and one
//! non-descending crossing is resolved by the skein relation. The measure
//! (crossings, non-descending crossings) drops at every step.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;

use crate::diagram::{PlanarDiagram, UnionFind};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly2;

/// Working diagram: oriented crossings (slot 0 = incoming under) and
/// over-strand directions, plus crossingless circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Pd {
    pub xs: Vec<[u32; 4]>,
    /// Over-strand enters at slot 3 (positive crossing).
    pub pos: Vec<bool>,
    pub loops: u32,
}

type Passage = (usize, usize);

impl Pd {
    pub fn from_diagram(d: &PlanarDiagram) -> Pd {
        let pos = (0..d.n_crossings()).map(|i| d.sign(i) > 0).collect();
        let pd = Pd { xs: d.crossings().to_vec(), pos, loops: d.free_loops() };
        pd.compacted()
    }

    fn n(&self) -> usize {
        self.xs.len()
    }

    fn max_label(&self) -> usize {
        self.xs.iter().flat_map(|x| x.iter()).copied().max().unwrap_or(0) as usize
    }

    fn sign(&self, c: usize) -> i32 {
        if self.pos[c] {
            1
        } else {
            -1
        }
    }

    fn is_incoming(&self, c: usize, p: usize) -> bool {
        match p {
            0 => true,
            2 => false,
            1 => !self.pos[c],
            _ => self.pos[c],
        }
    }

    /// `ends[label]`: its two slots.
    fn ends(&self) -> Vec<[(usize, usize); 2]> {
        let mut e = vec![[(usize::MAX, 0); 2]; self.max_label() + 1];
        for (c, x) in self.xs.iter().enumerate() {
            for (p, &l) in x.iter().enumerate() {
                let slot = &mut e[l as usize];
                if slot[0].0 == usize::MAX {
                    slot[0] = (c, p);
                } else {
                    slot[1] = (c, p);
                }
            }
        }
        e
    }

    fn head(&self, ends: &[[(usize, usize); 2]], l: u32) -> Passage {
        let [a, b] = ends[l as usize];
        if self.is_incoming(a.0, a.1) {
            a
        } else {
            b
        }
    }

    /// Components as arc sequences in orientation order.
    fn components(&self, ends: &[[(usize, usize); 2]]) -> Vec<Vec<u32>> {
        let m = self.max_label();
        let mut seen = vec![false; m + 1];
        let mut comps = Vec::new();
        for start in 1..=m as u32 {
            if seen[start as usize] || ends[start as usize][0].0 == usize::MAX {
                continue;
            }
            let mut comp = Vec::new();
            let mut l = start;
            while !seen[l as usize] {
                seen[l as usize] = true;
                comp.push(l);
                let (c, p) = self.head(ends, l);
                l = self.xs[c][(p + 2) % 4];
            }
            comps.push(comp);
        }
        comps
    }

    /// Relabels arcs in the given traversal order (all arcs must appear).
    fn relabel(&self, order: &[u32]) -> Pd {
        let mut map = vec![0u32; self.max_label() + 1];
        for (i, &l) in order.iter().enumerate() {
            map[l as usize] = i as u32 + 1;
        }
        Pd {
            xs: self.xs.iter().map(|x| [map[x[0] as usize], map[x[1] as usize], map[x[2] as usize], map[x[3] as usize]]).collect(),
            pos: self.pos.clone(),
            loops: self.loops,
        }
    }

    fn compacted(&self) -> Pd {
        let ends = self.ends();
        let order: Vec<u32> = self.components(&ends).concat();
        self.relabel(&order)
    }

    /// Removes crossings `removed`, identifies the label pairs in `unions` and
    /// counts classes that vanish as new free circles.
    fn contract(&self, removed: &[usize], unions: &[(u32, u32)]) -> Pd {
        let m = self.max_label() + 1;
        let mut uf = UnionFind::new(m);
        for &(a, b) in unions {
            uf.union(a as usize, b as usize);
        }
        let mut xs = Vec::with_capacity(self.n());
        let mut pos = Vec::with_capacity(self.n());
        let mut present = vec![false; m];
        for (c, x) in self.xs.iter().enumerate() {
            if removed.contains(&c) {
                continue;
            }
            let y = x.map(|l| uf.find(l as usize) as u32);
            for &l in &y {
                present[l as usize] = true;
            }
            xs.push(y);
            pos.push(self.pos[c]);
        }
        let mut reps: Vec<usize> = unions.iter().flat_map(|&(a, b)| [a, b]).map(|l| uf.find(l as usize)).collect();
        reps.sort_unstable();
        reps.dedup();
        let new_loops = reps.iter().filter(|&&r| !present[r]).count() as u32;
        Pd { xs, pos, loops: self.loops + new_loops }
    }

    fn over_in(&self, c: usize) -> usize {
        if self.pos[c] {
            3
        } else {
            1
        }
    }

    pub fn switched(&self, c: usize) -> Pd {
        let mut pd = self.clone();
        let x = pd.xs[c];
        pd.xs[c] = if pd.pos[c] { [x[3], x[0], x[1], x[2]] } else { [x[1], x[2], x[3], x[0]] };
        pd.pos[c] = !pd.pos[c];
        pd
    }

    /// Orientation-respecting smoothing.
    pub fn smoothed_oriented(&self, c: usize) -> Pd {
        let x = self.xs[c];
        let (oi, oo) = (self.over_in(c), (self.over_in(c) + 2) % 4);
        self.contract(&[c], &[(x[0], x[oo]), (x[oi], x[2])])
    }

    /// The two unoriented smoothings, reoriented arbitrarily.
    pub fn smoothed_unoriented(&self, c: usize) -> (Pd, Pd) {
        let x = self.xs[c];
        let a = self.contract(&[c], &[(x[0], x[1]), (x[2], x[3])]);
        let b = self.contract(&[c], &[(x[0], x[3]), (x[1], x[2])]);
        (a.reoriented(), b.reoriented())
    }

    /// Chooses a consistent orientation, keeping each crossing's over/under
    /// data (slot 0/2 stays the under-strand).
    fn reoriented(&self) -> Pd {
        let ends = self.ends();
        let m = self.max_label();
        let mut head: Vec<Option<Passage>> = vec![None; m + 1];
        for start in 1..=m {
            if ends[start][0].0 == usize::MAX || head[start].is_some() {
                continue;
            }
            let mut l = start;
            let mut h = ends[start][1];
            while head[l].is_none() {
                head[l] = Some(h);
                let out = (h.0, (h.1 + 2) % 4);
                l = self.xs[out.0][out.1] as usize;
                let [a, b] = ends[l];
                h = if a == out { b } else { a };
            }
        }
        let mut xs = self.xs.clone();
        let mut pos = self.pos.clone();
        for (c, x) in self.xs.iter().enumerate() {
            let forward = head[x[0] as usize] == Some((c, 0));
            // the label that ends up in slot 3, and where it sits now
            let (l3, orig3) = if forward { (x[3], 3) } else { (x[1], 1) };
            if !forward {
                xs[c] = [x[2], x[3], x[0], x[1]];
            }
            pos[c] = head[l3 as usize] == Some((c, orig3));
        }
        Pd { xs, pos, loops: self.loops }.compacted()
    }

    /// One Reidemeister I or II removal, if any applies. Returns the new
    /// diagram and the summed sign of removed kinks.
    fn reduce_once(&self) -> Option<(Pd, i32)> {
        for (c, x) in self.xs.iter().enumerate() {
            for p in 0..4 {
                if x[p] == x[(p + 1) % 4] {
                    let unions = [(x[p], x[(p + 2) % 4]), (x[p], x[(p + 3) % 4])];
                    return Some((self.contract(&[c], &unions), self.sign(c)));
                }
            }
        }
        let ends = self.ends();
        let other = |(c, p): Passage| {
            let [a, b] = ends[self.xs[c][p] as usize];
            if a == (c, p) {
                b
            } else {
                a
            }
        };
        for c1 in 0..self.n() {
            for p1 in 0..4 {
                let (c2, q1) = other((c1, p1));
                if c2 == c1 {
                    continue;
                }
                let p2 = (q1 + 1) % 4;
                let (c3, q2) = other((c2, p2));
                if c3 != c1 || (q2 + 1) % 4 != p1 {
                    continue;
                }
                if p1 % 2 != q1 % 2 {
                    continue;
                }
                let xs = &self.xs;
                let unions = [
                    (xs[c1][(p1 + 2) % 4], xs[c1][p1]),
                    (xs[c1][p1], xs[c2][(q1 + 2) % 4]),
                    (xs[c2][(p2 + 2) % 4], xs[c2][p2]),
                    (xs[c2][p2], xs[c1][(q2 + 2) % 4]),
                ];
                return Some((self.contract(&[c1, c2], &unions), 0));
            }
        }
        None
    }

    /// Fully reduces; returns the reduced diagram and total kink sign.
    pub fn reduced(&self) -> (Pd, i32) {
        let mut cur = self.clone();
        let mut kinks = 0;
        while let Some((next, k)) = cur.reduce_once() {
            cur = next;
            kinks += k;
        }
        (cur.compacted(), kinks)
    }

    /// Crossings that belong to a two-sided face with another crossing.
    fn in_bigon(&self, ends: &[[(usize, usize); 2]]) -> Vec<bool> {
        let mut out = vec![false; self.n()];
        for c1 in 0..self.n() {
            for p1 in 0..4 {
                let [a, b] = ends[self.xs[c1][p1] as usize];
                let (c2, q1) = if a == (c1, p1) { b } else { a };
                let p2 = (q1 + 1) % 4;
                let [a2, b2] = ends[self.xs[c2][p2] as usize];
                let (c3, q2) = if a2 == (c2, p2) { b2 } else { a2 };
                if c2 != c1 && c3 == c1 && (q2 + 1) % 4 == p1 {
                    out[c1] = true;
                }
            }
        }
        out
    }

    /// Picks base points and a component order; returns the crossings that
    /// are first met as under-crossings, in traversal order, and the
    /// diagram relabeled along that traversal.
    fn descending_plan(&self) -> (Pd, Vec<usize>) {
        let base = self;
        let ends = base.ends();
        let comps = base.components(&ends);
        let k = comps.len();
        // component of each arc
        let mut comp_of = vec![usize::MAX; base.max_label() + 1];
        for (i, comp) in comps.iter().enumerate() {
            for &l in comp {
                comp_of[l as usize] = i;
            }
        }
        // per component: best rotation minimizing self-crossing badness
        let mut rotated: Vec<Vec<u32>> = Vec::with_capacity(k);
        for comp in &comps {
            let len = comp.len();
            let mut best = (usize::MAX, 0);
            for s in 0..len {
                let mut first: HashMap<usize, bool> = HashMap::new();
                let mut bad = 0;
                for t in 0..len {
                    let (c, p) = base.head(&ends, comp[(s + t) % len]);
                    let x = base.xs[c];
                    let self_crossing = comp_of[x[0] as usize] == comp_of[x[1] as usize];
                    if !self_crossing {
                        continue;
                    }
                    if let std::collections::hash_map::Entry::Vacant(e) = first.entry(c) {
                        e.insert(true);
                        if p == 0 {
                            bad += 1;
                        }
                    }
                }
                if bad < best.0 {
                    best = (bad, s);
                }
            }
            let mut r = comp.clone();
            r.rotate_left(best.1);
            rotated.push(r);
        }
        // component order: component i above j costs the under-passages of i
        // at crossings shared with j
        let mut under_against = vec![vec![0usize; k]; k];
        for x in &base.xs {
            let (cu, co) = (comp_of[x[0] as usize], comp_of[x[1] as usize]);
            if cu != co {
                under_against[cu][co] += 1;
            }
        }
        let order: Vec<usize> = if k <= 6 {
            let mut perm: Vec<usize> = (0..k).collect();
            let mut best = (usize::MAX, perm.clone());
            permute(&mut perm, 0, &mut |p| {
                let mut cost = 0;
                for i in 0..k {
                    for j in i + 1..k {
                        cost += under_against[p[i]][p[j]];
                    }
                }
                if cost < best.0 {
                    best = (cost, p.to_vec());
                }
            });
            best.1
        } else {
            let mut o: Vec<usize> = (0..k).collect();
            o.sort_by_key(|&i| under_against[i].iter().sum::<usize>());
            o
        };
        let traversal: Vec<u32> = order.iter().flat_map(|&i| rotated[i].iter().copied()).collect();
        let pd = base.relabel(&traversal);
        let ends = pd.ends();
        let mut seen = vec![false; pd.n()];
        let mut bad = Vec::new();
        for l in 1..=traversal.len() as u32 {
            let (c, p) = pd.head(&ends, l);
            if !seen[c] {
                seen[c] = true;
                if p == 0 {
                    bad.push(c);
                }
            }
        }
        (pd, bad)
    }

    /// Sum of self-crossing signs (orientation independent).
    pub fn self_writhe(&self) -> i32 {
        let ends = self.ends();
        let comps = self.components(&ends);
        let mut comp_of = vec![usize::MAX; self.max_label() + 1];
        for (i, comp) in comps.iter().enumerate() {
            for &l in comp {
                comp_of[l as usize] = i;
            }
        }
        self.xs
            .iter()
            .enumerate()
            .filter(|(_, x)| comp_of[x[0] as usize] == comp_of[x[1] as usize])
            .map(|(c, _)| self.sign(c))
            .sum()
    }

    fn n_components(&self) -> u32 {
        let ends = self.ends();
        self.components(&ends).len() as u32 + self.loops
    }

    /// Memo key: the lexicographically least relabeling over all base
    /// points of single-component diagrams; multi-component diagrams use
    /// their traversal order as is.
    fn key(&self) -> Vec<u32> {
        let ends = self.ends();
        let comps = self.components(&ends);
        let encode = |pd: &Pd| {
            let mut rows: Vec<[u32; 5]> =
                pd.xs.iter().zip(&pd.pos).map(|(x, &p)| [x[0], x[1], x[2], x[3], p as u32]).collect();
            rows.sort_unstable();
            let mut key = vec![pd.loops, comps.len() as u32];
            key.extend(rows.iter().flatten());
            key
        };
        if comps.len() != 1 {
            return encode(self);
        }
        let comp = &comps[0];
        let mut best: Option<Vec<u32>> = None;
        for s in 0..comp.len() {
            let mut order = comp.clone();
            order.rotate_left(s);
            let k = encode(&self.relabel(&order));
            if best.as_ref().is_none_or(|b| k < *b) {
                best = Some(k);
            }
        }
        best.unwrap_or_else(|| encode(self))
    }
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

/// One skein theory: how to evaluate descending diagrams and how to resolve
/// a crossing.
pub(crate) trait Theory: Sync {
    fn unknot_kink(&self, sign: i32) -> LaurentPoly2;
    fn descending(&self, pd: &Pd, components: u32) -> LaurentPoly2;
    /// Expresses `pd` through the diagram with crossing `c` switched and
    /// its smoothing(s): returns `(coefficient of switched, [(coefficient,
    /// smoothing)])`.
    fn resolve(&self, pd: &Pd, c: usize) -> (LaurentPoly2, Vec<(LaurentPoly2, Pd)>);
}

pub(crate) struct SkeinTree<'t, T: Theory> {
    theory: &'t T,
    memo: DashMap<Vec<u32>, LaurentPoly2>,
    nodes: AtomicU64,
    limit: u64,
}

impl<'t, T: Theory> SkeinTree<'t, T> {
    pub fn new(theory: &'t T, limit: u64) -> Self {
        SkeinTree { theory, memo: DashMap::new(), nodes: AtomicU64::new(0), limit }
    }

    pub fn eval(&self, pd: &Pd) -> Result<LaurentPoly2> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::Budget { what: "skein tree nodes", limit: self.limit });
        }
        let (pd, kinks) = pd.reduced();
        let factor = self.theory.unknot_kink(kinks);
        let key = pd.key();
        if let Some(v) = self.memo.get(&key) {
            return Ok(&factor * v.value());
        }
        let (plan, bad) = pd.descending_plan();
        let value = if bad.is_empty() {
            self.theory.descending(&plan, plan.n_components())
        } else {
            let bigon = plan.in_bigon(&plan.ends());
            let c = bad.iter().copied().find(|&c| bigon[c]).unwrap_or(bad[0]);
            let (sw_coeff, smooths) = self.theory.resolve(&plan, c);
            let switched = plan.switched(c);
            let (a, rest) = if plan.n() >= 9 {
                rayon::join(|| self.eval(&switched), || self.eval_all(&smooths))
            } else {
                (self.eval(&switched), self.eval_all(&smooths))
            };
            let mut total = &sw_coeff * &a?;
            total += &rest?;
            total
        };
        self.memo.insert(key, value.clone());
        Ok(&factor * &value)
    }

    fn eval_all(&self, smooths: &[(LaurentPoly2, Pd)]) -> Result<LaurentPoly2> {
        let mut total = LaurentPoly2::zero(self.theory.unknot_kink(0).vars());
        for (coeff, pd) in smooths {
            total += &(coeff * &self.eval(pd)?);
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> Pd {
        Pd::from_diagram(&PlanarDiagram::parse(s).unwrap())
    }

    #[test]
    fn kinks_reduce_to_circles() {
        let (r, k) = pd("X(1,2,2,1)").reduced();
        assert_eq!((r.n(), r.loops, k), (0, 1, -1));
        let (r, k) = pd("X(1,1,2,2)").reduced();
        assert_eq!((r.n(), r.loops, k), (0, 1, 1));
    }

    #[test]
    fn bigon_reduces() {
        // two-crossing unknot made by a Reidemeister II on a circle
        let d = crate::diagram::moves::add_bigon(
            &crate::diagram::moves::add_kink(&PlanarDiagram::unknot(), 0, 0).unwrap(),
            (0, 0),
            (0, 2),
            true,
        );
        if let Ok(d) = d {
            let (r, _) = Pd::from_diagram(&d).reduced();
            assert_eq!(r.n(), 0);
        }
        let hopf = pd("X(1,3,2,4) X(3,1,4,2)");
        assert_eq!(hopf.reduced().0.n(), 2);
    }

    #[test]
    fn switch_is_involution() {
        let t = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        for c in 0..3 {
            assert_eq!(t.switched(c).switched(c), t);
            assert_ne!(t.switched(c).pos[c], t.pos[c]);
        }
    }

    #[test]
    fn trefoil_plan_has_one_bad_crossing() {
        let t = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let (_, bad) = t.descending_plan();
        assert_eq!(bad.len(), 1);
    }
}
