//! Dowker–Thistlethwaite codes and their realization as planar diagrams.
//!
//! Points along the knot are labelled `1..=2n`; crossing `i` joins the odd
//! point `2i-1` with the even point `|a_i|`. A positive entry means the odd
//! passage is the under-strand.

use std::fmt;

use super::PlanarDiagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DtCode {
    pub name: String,
    pub pairs: Vec<i32>,
}

impl DtCode {
    pub fn new(name: impl Into<String>, pairs: Vec<i32>) -> Result<DtCode> {
        let code = DtCode { name: name.into(), pairs };
        code.validate()?;
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.pairs.len();
        if n == 0 {
            return Err(Error::InvalidDt("empty code".into()));
        }
        let mut seen = vec![false; n];
        for &a in &self.pairs {
            let m = a.unsigned_abs() as usize;
            if a == 0 || m % 2 == 1 || m > 2 * n {
                return Err(Error::InvalidDt(format!("entry {a} is not a nonzero even number up to {}", 2 * n)));
            }
            if std::mem::replace(&mut seen[m / 2 - 1], true) {
                return Err(Error::InvalidDt(format!("entry {m} repeated")));
            }
        }
        Ok(())
    }

    /// `<name> <k1> ... <kn>`.
    pub fn parse(text: &str) -> Result<DtCode> {
        let mut it = text.split_whitespace();
        let name = it.next().ok_or_else(|| Error::InvalidDt("missing name".into()))?;
        let pairs = it
            .map(|t| t.parse::<i32>().map_err(|_| Error::InvalidDt(format!("bad entry '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        DtCode::new(name, pairs)
    }

    /// Knotscape's alphabetical form, e.g. `nanceHfLaJkBmNiDG` (an optional
    /// `.flips` suffix is ignored): crossing count, component count, component
    /// lengths, then one letter per even label (`a` = 2, uppercase negative).
    pub fn parse_alpha(name: impl Into<String>, text: &str) -> Result<DtCode> {
        let body = text.split('.').next().unwrap_or("");
        let letters: Vec<char> = body.chars().collect();
        let idx = |c: char| -> Result<usize> {
            if c.is_ascii_alphabetic() {
                Ok((c.to_ascii_lowercase() as u8 - b'a') as usize + 1)
            } else {
                Err(Error::InvalidDt(format!("unexpected character '{c}'")))
            }
        };
        if letters.len() < 3 {
            return Err(Error::InvalidDt("alphabetical code too short".into()));
        }
        let n = idx(letters[0])?;
        let comps = idx(letters[1])?;
        if comps != 1 {
            return Err(Error::InvalidDt(format!("{comps} components; only knots are supported")));
        }
        let rest = &letters[2 + comps..];
        if rest.len() != n {
            return Err(Error::InvalidDt(format!("expected {n} letters, found {}", rest.len())));
        }
        let pairs = rest
            .iter()
            .map(|&c| {
                let v = 2 * idx(c)? as i32;
                Ok(if c.is_ascii_uppercase() { -v } else { v })
            })
            .collect::<Result<Vec<_>>>()?;
        DtCode::new(name, pairs)
    }

    /// The same code read from a different starting point: labels shifted by
    /// an even amount `2k` (mod `2n`).
    pub fn shifted(&self, k: usize) -> DtCode {
        let n = self.n();
        let two_n = 2 * n as i32;
        let shift = |p: i32| ((p - 1 + 2 * k as i32).rem_euclid(two_n)) + 1;
        let mut pairs = vec![0; n];
        for (i, &a) in self.pairs.iter().enumerate() {
            let odd = shift(2 * i as i32 + 1);
            let even = shift(a.abs());
            pairs[(odd as usize - 1) / 2] = even * a.signum();
        }
        DtCode { name: self.name.clone(), pairs }
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for a in &self.pairs {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// Counterclockwise arc quadruples for a choice of flips. Arc `k` runs from
/// point `k` to point `k+1`; crossing `i` sees arcs `o-1, e-1` arriving and
/// `o, e` leaving. Unflipped: `in_o, in_e, out_o, out_e`.
fn rotations(code: &DtCode, flips: u64) -> Vec<[u32; 4]> {
    let n = code.n() as u32;
    let prev = |p: u32| if p == 1 { 2 * n } else { p - 1 };
    code.pairs
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let o = 2 * i as u32 + 1;
            let e = a.unsigned_abs();
            if flips >> i & 1 == 0 {
                [prev(o), prev(e), o, e]
            } else {
                [prev(o), e, o, prev(e)]
            }
        })
        .collect()
}

fn face_count(rot: &[[u32; 4]], n: usize) -> usize {
    // ends[label] = two (crossing, slot)
    let mut ends = vec![[(usize::MAX, 0usize); 2]; 2 * n + 1];
    for (c, x) in rot.iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            let e = &mut ends[l as usize];
            if e[0].0 == usize::MAX {
                e[0] = (c, p);
            } else {
                e[1] = (c, p);
            }
        }
    }
    let mut seen = vec![[false; 4]; rot.len()];
    let mut faces = 0;
    for c in 0..rot.len() {
        for p in 0..4 {
            if seen[c][p] {
                continue;
            }
            faces += 1;
            let mut d = (c, p);
            while !seen[d.0][d.1] {
                seen[d.0][d.1] = true;
                let e = ends[rot[d.0][d.1] as usize];
                let o = if e[0] == d { e[1] } else { e[0] };
                d = (o.0, (o.1 + 1) % 4);
            }
        }
    }
    faces
}

/// Finds a planar embedding of the code by searching over rotation-system
/// flips (the first crossing's rotation is fixed to break the reflection
/// symmetry) and accepts the first one with `n + 2` faces.
pub fn realize_dt(code: &DtCode) -> Result<PlanarDiagram> {
    code.validate()?;
    let n = code.n();
    if n > 40 {
        return Err(Error::Budget { what: "DT realization crossing count", limit: 40 });
    }
    let mut found = None;
    for flips in 0..(1u64 << (n - 1)) {
        let rot = rotations(code, flips << 1);
        if face_count(&rot, n) == n + 2 {
            found = Some(rot);
            break;
        }
    }
    let rot = found.ok_or_else(|| Error::NonRealizable(code.to_string()))?;
    let crossings = rot
        .iter()
        .zip(&code.pairs)
        .map(|(x, &a)| {
            // under-strand enters at the odd arrival (slot 0) when a > 0,
            // otherwise at the even arrival
            if a > 0 {
                *x
            } else {
                let k = x.iter().position(|&l| l == prev_label(a.unsigned_abs(), n)).expect("even arrival");
                [x[k], x[(k + 1) % 4], x[(k + 2) % 4], x[(k + 3) % 4]]
            }
        })
        .collect();
    PlanarDiagram::new(crossings, 0)
}

fn prev_label(p: u32, n: usize) -> u32 {
    if p == 1 {
        2 * n as u32
    } else {
        p - 1
    }
}

/// DT code of a knot diagram, traversing from the head of `start` arc in its
/// own direction (`forward`) or against it.
pub fn dt_from(d: &PlanarDiagram, start: u32, forward: bool) -> Result<Vec<i32>> {
    d.require_knot()?;
    let n = d.n_crossings();
    if n == 0 {
        return Ok(vec![]);
    }
    let mut comp = d.components().remove(0);
    if !forward {
        comp.reverse();
    }
    let k = comp.iter().position(|&l| l == start).ok_or_else(|| Error::InvalidDt(format!("no arc {start}")))?;
    comp.rotate_left(k);
    // point j (1-based) is the crossing at the end of comp[j-1] when forward,
    // or at the start of comp[j-1] when reversed
    let index = d.arc_index();
    let mut visits: Vec<Vec<(usize, bool)>> = vec![vec![]; n];
    for (j, &l) in comp.iter().enumerate() {
        let h = d.head_of(&index, l);
        let slot = if forward {
            h
        } else {
            let [a, b] = index.ends(l);
            if a == h {
                b
            } else {
                a
            }
        };
        let under = slot.1 % 2 == 0;
        visits[slot.0].push((j + 1, under));
    }
    let mut pairs = vec![0i32; n];
    for v in &visits {
        let (a, b) = (v[0], v[1]);
        let (odd, even) = if a.0 % 2 == 1 { (a, b) } else { (b, a) };
        if odd.0 % 2 == 0 || even.0 % 2 == 1 {
            return Err(Error::InvalidDt("traversal does not alternate odd/even".into()));
        }
        pairs[(odd.0 - 1) / 2] = if odd.1 { even.0 as i32 } else { -(even.0 as i32) };
    }
    Ok(pairs)
}

/// Lexicographically smallest DT code over all starting arcs and both
/// directions, compared by absolute values first and then signs.
pub fn canonical_dt(d: &PlanarDiagram) -> Result<Vec<i32>> {
    d.require_knot()?;
    let comp = d.components().into_iter().next().unwrap_or_default();
    let key = |v: &Vec<i32>| (v.iter().map(|a| a.abs()).collect::<Vec<_>>(), v.clone());
    let mut best: Option<Vec<i32>> = None;
    for &l in &comp {
        for fwd in [true, false] {
            if let Ok(c) = dt_from(d, l, fwd) {
                if best.as_ref().is_none_or(|b| key(&c) < key(b)) {
                    best = Some(c);
                }
            }
        }
    }
    Ok(best.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_and_figure_eight() {
        let t = realize_dt(&DtCode::parse("3_1 4 6 2").unwrap()).unwrap();
        assert_eq!(t.n_crossings(), 3);
        assert_eq!(t.writhe().abs(), 3);
        let f = realize_dt(&DtCode::parse("4_1 4 6 8 2").unwrap()).unwrap();
        assert_eq!(f.writhe(), 0);
    }

    #[test]
    fn realized_code_reads_back() {
        for s in ["k 4 6 2", "k 4 8 10 2 6", "k 6 8 10 2 4", "k 4 -8 10 -2 6"] {
            let c = DtCode::parse(s).unwrap();
            let d = realize_dt(&c).unwrap();
            // arc 2n arrives at point 1
            assert_eq!(dt_from(&d, d.max_label(), true).unwrap(), c.pairs, "{s}");
        }
    }

    #[test]
    fn alpha_format() {
        let c = DtCode::parse_alpha("14n22185", "nanceHfLaJkBmNiDG.01101001010000").unwrap();
        assert_eq!(c.pairs, vec![6, 10, -16, 12, -24, 2, -20, 22, -4, 26, -28, 18, -8, -14]);
    }

    #[test]
    fn invalid_codes() {
        assert!(matches!(DtCode::parse("x 4 4 2"), Err(Error::InvalidDt(_))));
        assert!(matches!(DtCode::parse("x 3 6 2"), Err(Error::InvalidDt(_))));
        // 4 8 10 2 6 with its second and third entries swapped
        assert!(realize_dt(&DtCode::parse("x 4 8 10 2 6").unwrap()).is_ok());
        let bad = DtCode::parse("x 4 10 8 2 6").unwrap();
        assert!(matches!(realize_dt(&bad), Err(Error::NonRealizable(_))));
    }
}
