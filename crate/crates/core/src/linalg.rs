//! Exact integer linear algebra: Smith normal form invariants of sparse
//! matrices, ranks modulo a prime and signatures of symmetric forms.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse integer matrix in row form. Columns are `0..ncols`.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    /// Each row sorted by column, no explicit zeros.
    pub rows: Vec<Vec<(u32, i64)>>,
}

/// Rank and nontrivial invariant factors (all > 1, ascending, each dividing
/// the next) of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SmithInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    /// Adds `v` at `(r, c)`; rows must be finished with [`SparseMatrix::normalize`].
    pub fn push(&mut self, r: usize, c: usize, v: i64) {
        self.rows[r].push((c as u32, v));
    }

    /// Sorts rows and merges duplicate entries.
    pub fn normalize(&mut self) {
        for row in &mut self.rows {
            row.sort_unstable_by_key(|e| e.0);
            let mut out: Vec<(u32, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match out.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => out.push((c, v)),
                }
            }
            out.retain(|e| e.1 != 0);
            *row = out;
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut m = vec![vec![BigInt::zero(); self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                m[r][c as usize] += v;
            }
        }
        m
    }

    /// `self * other` (used to check `d∘d = 0`).
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = SparseMatrix::new(self.nrows, other.ncols);
        let mut acc: std::collections::HashMap<u32, i64> = std::collections::HashMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            acc.clear();
            for &(k, a) in row {
                for &(c, b) in &other.rows[k as usize] {
                    *acc.entry(c).or_insert(0) += a * b;
                }
            }
            out.rows[r] = acc.iter().filter(|e| *e.1 != 0).map(|(c, v)| (*c, *v)).collect();
            out.rows[r].sort_unstable();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Rank over the field with `p` elements, by sparse elimination that
    /// always pivots in the shortest remaining row.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let mut rows: Vec<Vec<(u32, u64)>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
                    .filter(|e| e.1 != 0)
                    .collect()
            })
            .collect();
        let mut alive = vec![true; self.nrows];
        let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); self.ncols];
        for (r, row) in rows.iter().enumerate() {
            for &(c, _) in row {
                col_rows[c as usize].push(r as u32);
            }
        }
        let mut heap: BinaryHeap<Reverse<(usize, u32)>> =
            rows.iter().enumerate().filter(|(_, r)| !r.is_empty()).map(|(i, r)| Reverse((r.len(), i as u32))).collect();
        let mut rank = 0;
        while let Some(Reverse((len, r))) = heap.pop() {
            let r = r as usize;
            if !alive[r] || rows[r].len() != len || len == 0 {
                continue;
            }
            let (pc, pv) = *rows[r].iter().min_by_key(|e| col_rows[e.0 as usize].len()).expect("nonempty row");
            alive[r] = false;
            rank += 1;
            let prow = std::mem::take(&mut rows[r]);
            let inv = inv_mod(pv, p);
            for o in std::mem::take(&mut col_rows[pc as usize]) {
                let o = o as usize;
                if !alive[o] {
                    continue;
                }
                let Ok(k) = rows[o].binary_search_by_key(&pc, |e| e.0) else { continue };
                let f = p - mul_mod(rows[o][k].1, inv, p);
                let new = axpy_mod(&rows[o], &prow, f, p);
                for &(c, _) in &new {
                    if rows[o].binary_search_by_key(&c, |e| e.0).is_err() {
                        col_rows[c as usize].push(o as u32);
                    }
                }
                rows[o] = new;
                if !rows[o].is_empty() {
                    heap.push(Reverse((rows[o].len(), o as u32)));
                }
            }
        }
        rank
    }

    /// Smith invariants by unit-pivot sparse elimination followed by a dense
    /// big-integer reduction of whatever is left.
    pub fn smith(&self) -> SmithInvariants {
        match sparse_unit_reduce(self) {
            Some((rank, residual)) => {
                let mut inv = dense_smith(residual);
                inv.rank += rank;
                inv
            }
            None => dense_smith(self.to_dense()),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let (mut base, mut e, mut r) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    r
}

/// `x + f*y` over F_p for sorted sparse rows.
fn axpy_mod(x: &[(u32, u64)], y: &[(u32, u64)], f: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i]);
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, mul_mod(y[j].1, f, p)));
            j += 1;
        } else {
            let v = (x[i].1 + mul_mod(y[j].1, f, p)) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `x - f*y` with overflow detection.
fn axpy_i64(x: &[(u32, i64)], y: &[(u32, i64)], f: i64) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i]);
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, y[j].1.checked_mul(f)?.checked_neg()?));
            j += 1;
        } else {
            let v = x[i].1.checked_sub(y[j].1.checked_mul(f)?)?;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates unit pivots (Markowitz-style: shortest row first, then the
/// sparsest column among its unit entries). Returns the number of pivots
/// and the dense residual, or `None` on `i64` overflow.
fn sparse_unit_reduce(m: &SparseMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows = m.rows.clone();
    let mut alive = vec![true; m.nrows];
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c as usize].push(r as u32);
        }
    }
    let mut col_dead = vec![false; m.ncols];
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> =
        rows.iter().enumerate().filter(|(_, r)| !r.is_empty()).map(|(i, r)| Reverse((r.len(), i as u32))).collect();
    let mut rank = 0;
    while let Some(Reverse((len, r))) = heap.pop() {
        let r = r as usize;
        if !alive[r] || rows[r].len() != len || len == 0 {
            continue;
        }
        let pivot = rows[r]
            .iter()
            .filter(|e| e.1.abs() == 1)
            .min_by_key(|e| col_rows[e.0 as usize].len())
            .copied();
        let Some((pc, pv)) = pivot else { continue };
        alive[r] = false;
        col_dead[pc as usize] = true;
        rank += 1;
        let prow = std::mem::take(&mut rows[r]);
        let others = std::mem::take(&mut col_rows[pc as usize]);
        for &o in &others {
            let o = o as usize;
            if !alive[o] {
                continue;
            }
            let Ok(k) = rows[o].binary_search_by_key(&pc, |e| e.0) else { continue };
            let f = rows[o][k].1 * pv; // pv = ±1 so a/pv = a*pv
            let new = axpy_i64(&rows[o], &prow, f)?;
            for &(c, _) in &new {
                if rows[o].binary_search_by_key(&c, |e| e.0).is_err() {
                    col_rows[c as usize].push(o as u32);
                }
            }
            rows[o] = new;
            if !rows[o].is_empty() {
                heap.push(Reverse((rows[o].len(), o as u32)));
            }
        }
    }
    // residual: live rows with entries, live columns
    let live_rows: Vec<usize> = (0..m.nrows).filter(|&r| alive[r] && !rows[r].is_empty()).collect();
    let mut col_map = vec![usize::MAX; m.ncols];
    let mut ncols = 0;
    for &r in &live_rows {
        for &(c, _) in &rows[r] {
            if col_map[c as usize] == usize::MAX {
                col_map[c as usize] = ncols;
                ncols += 1;
            }
        }
    }
    let mut dense = vec![vec![BigInt::zero(); ncols]; live_rows.len()];
    for (i, &r) in live_rows.iter().enumerate() {
        for &(c, v) in &rows[r] {
            debug_assert!(!col_dead[c as usize]);
            dense[i][col_map[c as usize]] = BigInt::from(v);
        }
    }
    Some((rank, dense))
}

/// Smith invariants of a dense integer matrix.
pub fn dense_smith(mut a: Vec<Vec<BigInt>>) -> SmithInvariants {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // turn the diagonal into a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    let rank = diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    SmithInvariants { rank, torsion }
}

/// Signature (positive minus negative eigenvalue count) of a symmetric
/// integer matrix, by exact rational congruence diagonalization.
pub fn symmetric_signature(m: &[Vec<BigInt>]) -> i32 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = 0;
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all diagonal zero: add a row/column with a nonzero
                // off-diagonal partner to create a nonzero diagonal entry
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[p][p].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                let v = &f * &a[p][j];
                a[i][j] -= v;
            }
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_i(m: &[&[i64]]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn sparse(m: &[&[i64]]) -> SparseMatrix {
        let mut s = SparseMatrix::new(m.len(), m.first().map_or(0, |r| r.len()));
        for (i, r) in m.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                if v != 0 {
                    s.push(i, j, v);
                }
            }
        }
        s.normalize();
        s
    }

    #[test]
    fn smith_small() {
        let s = sparse(&[&[2, 0], &[0, 3]]).smith();
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigInt::from(6)]);
        let s = sparse(&[&[1, 1], &[1, -1]]).smith();
        assert_eq!((s.rank, s.torsion), (2, vec![BigInt::from(2)]));
        let s = sparse(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]).smith();
        assert_eq!(s.rank, 3);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn sparse_and_dense_agree() {
        let m: &[&[i64]] = &[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1], &[1, 0, 0, 1]];
        assert_eq!(sparse(m).smith(), dense_smith(dense_i(m)));
        assert_eq!(sparse(m).smith().torsion, vec![BigInt::from(2)]);
        assert_eq!(sparse(m).rank_mod_p(1_000_000_007), 4);
        assert_eq!(sparse(m).rank_mod_p(2), 3);
    }

    #[test]
    fn signatures() {
        assert_eq!(symmetric_signature(&dense_i(&[&[0, 1], &[1, 0]])), 0);
        assert_eq!(symmetric_signature(&dense_i(&[&[-2, 1], &[1, -2]])), -2);
        assert_eq!(symmetric_signature(&dense_i(&[&[3]])), 1);
        assert_eq!(symmetric_signature(&dense_i(&[&[0, 0], &[0, 0]])), 0);
    }
}
