//! Temperley–Lieb algebra over rational functions in `A`, and the
//! Jones–Wenzl projectors.
//!
//! A basis element of `TL_n` is a non-crossing matching of `2n` points:
//! bottom points `0..n` and top points `n..2n`, both left to right. Closed
//! loops evaluate to `δ = -A² - A⁻²`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use super::ratfunc::{quantum_int, theta_loop, RatFunc};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Var};
use crate::skein::delta;

/// Partner of every point.
pub type Matching = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalTL {
    width: usize,
    terms: BTreeMap<Matching, RatFunc>,
}

fn identity_matching(n: usize) -> Matching {
    (0..2 * n).map(|p| ((p + n) % (2 * n)) as u8).collect()
}

/// Stacks `top` over `bottom`, returning the outer matching and the number
/// of closed loops.
fn stack(top: &[u8], bottom: &[u8], n: usize) -> (Matching, usize) {
    // nodes 0..2n: bottom element; 2n..4n: top element
    let glue = |x: usize| -> Option<usize> {
        if (n..2 * n).contains(&x) {
            Some(2 * n + (x - n))
        } else if (2 * n..3 * n).contains(&x) {
            Some(n + (x - 2 * n))
        } else {
            None
        }
    };
    let inner = |x: usize| -> usize {
        if x < 2 * n {
            bottom[x] as usize
        } else {
            2 * n + top[x - 2 * n] as usize
        }
    };
    // outer points: bottom of `bottom` and top of `top`
    let outer = |x: usize| -> Option<usize> {
        if x < n {
            Some(x)
        } else if x >= 3 * n {
            Some(x - 2 * n)
        } else {
            None
        }
    };
    let mut out = vec![0u8; 2 * n];
    let mut seen = vec![false; 4 * n];
    for s in (0..n).chain(3 * n..4 * n) {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut cur = inner(s);
        loop {
            seen[cur] = true;
            if let Some(o) = outer(cur) {
                out[outer(s).expect("outer start")] = o as u8;
                out[o] = outer(s).expect("outer start") as u8;
                break;
            }
            let g = glue(cur).expect("inner point is glued");
            seen[g] = true;
            cur = inner(g);
        }
    }
    let mut loops = 0;
    for s in n..3 * n {
        if seen[s] {
            continue;
        }
        loops += 1;
        let mut cur = s;
        while !seen[cur] {
            seen[cur] = true;
            let g = glue(cur).expect("inner point is glued");
            seen[g] = true;
            cur = inner(g);
        }
    }
    (out, loops)
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let g = a.gcd(b);
    (a * b).div_exact(&g).expect("gcd divides")
}

impl RationalTL {
    pub fn zero(n: usize) -> RationalTL {
        RationalTL { width: n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> RationalTL {
        let mut t = Self::zero(n);
        t.terms.insert(identity_matching(n), RatFunc::one());
        t
    }

    /// The cup-cap generator `e_i` joining strands `i-1` and `i`, for
    /// `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> RationalTL {
        assert!(i >= 1 && i < n, "generator index out of range");
        let mut m = identity_matching(n);
        m[i - 1] = i as u8;
        m[i] = (i - 1) as u8;
        m[n + i - 1] = (n + i) as u8;
        m[n + i] = (n + i - 1) as u8;
        let mut t = Self::zero(n);
        t.terms.insert(m, RatFunc::one());
        t
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &RatFunc)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Matching) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn add_term(&mut self, m: Matching, c: RatFunc) {
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> RationalTL {
        let mut out = Self::zero(self.width);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(m.clone(), x * c);
        }
        out
    }

    /// Least common multiple of the coefficient denominators.
    pub fn common_denominator(&self) -> LaurentPoly {
        self.terms.values().fold(LaurentPoly::one(Var::A), |l, c| lcm(&l, c.den()))
    }

    /// Numerators over the common denominator `D`: `self = Σ n_m·m / D`.
    pub fn over_common_denominator(&self) -> (Vec<(Matching, LaurentPoly)>, LaurentPoly) {
        let d = self.common_denominator();
        let nums = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.num() * &d.div_exact(c.den()).expect("lcm is a multiple")))
            .collect();
        (nums, d)
    }

    /// Adds a vertical strand on the right.
    pub fn tensor_id(&self) -> RationalTL {
        let n = self.width;
        let w = n + 1;
        let map = |p: usize| if p < n { p } else { p + 1 };
        let mut out = Self::zero(w);
        for (m, c) in &self.terms {
            let mut m2 = vec![0u8; 2 * w];
            for p in 0..2 * n {
                m2[map(p)] = map(m[p] as usize) as u8;
            }
            m2[n] = (2 * w - 1) as u8;
            m2[2 * w - 1] = n as u8;
            out.terms.insert(m2, c.clone());
        }
        out
    }

    /// Joins each top point to the bottom point below it; loops count `δ`.
    pub fn trace(&self) -> RatFunc {
        let n = self.width;
        let d = delta();
        let mut num = LaurentPoly::zero(Var::A);
        let (nums, den) = self.over_common_denominator();
        for (m, c) in nums {
            let mut seen = vec![false; 2 * n];
            let mut loops = 0u32;
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                loops += 1;
                let mut cur = s;
                while !seen[cur] {
                    seen[cur] = true;
                    let p = m[cur] as usize;
                    seen[p] = true;
                    cur = if p < n { p + n } else { p - n };
                }
            }
            num += &(&c * &d.pow(loops));
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl Add for &RationalTL {
    type Output = RationalTL;
    fn add(self, o: &RationalTL) -> RationalTL {
        assert_eq!(self.width, o.width, "width mismatch");
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RationalTL {
    type Output = RationalTL;
    fn sub(self, o: &RationalTL) -> RationalTL {
        self + &o.scale(&-RatFunc::one())
    }
}

/// `a * b` stacks `a` on top of `b`.
impl Mul for &RationalTL {
    type Output = RationalTL;
    fn mul(self, o: &RationalTL) -> RationalTL {
        assert_eq!(self.width, o.width, "width mismatch");
        let n = self.width;
        let (na, da) = self.over_common_denominator();
        let (nb, db) = o.over_common_denominator();
        let d = delta();
        let mut acc: BTreeMap<Matching, LaurentPoly> = BTreeMap::new();
        for (ma, ca) in &na {
            for (mb, cb) in &nb {
                let (m, loops) = stack(ma, mb, n);
                let term = &(ca * cb) * &d.pow(loops as u32);
                *acc.entry(m).or_insert_with(|| LaurentPoly::zero(Var::A)) += &term;
            }
        }
        let den = &da * &db;
        let mut out = RationalTL::zero(n);
        for (m, c) in acc {
            if !c.is_zero() {
                out.terms.insert(m, RatFunc::new(c, den.clone()).expect("nonzero denominator"));
            }
        }
        out
    }
}

/// The Jones–Wenzl idempotent `f_n`.
#[derive(Debug, Clone)]
pub struct JwProjector {
    pub n: usize,
    pub element: RationalTL,
}

/// Largest projector width built by default.
pub const DEFAULT_MAX_PROJECTOR: usize = 8;

/// `f_n` by Wenzl's recursion, `f_k = g + ([k-1]/[k])·g e_(k-1) g` with
/// `g = f_(k-1) ⊗ 1`. The sign follows from loops valued `-[2]`.
pub fn jw_projector(n: usize) -> Result<JwProjector> {
    jw_projector_with(n, DEFAULT_MAX_PROJECTOR)
}

pub fn jw_projector_with(n: usize, max: usize) -> Result<JwProjector> {
    if n == 0 {
        return Err(Error::Tangle("projector width must be positive".into()));
    }
    if n > max {
        return Err(Error::Budget { what: "Jones-Wenzl projector width", limit: max as u64 });
    }
    let mut f = RationalTL::identity(1);
    for k in 2..=n {
        let g = f.tensor_id();
        let e = RationalTL::generator(k, k - 1);
        let geg = &(&g * &e) * &g;
        let c = RatFunc::new(quantum_int(k as u32 - 1), quantum_int(k as u32)).expect("nonzero");
        f = &g + &geg.scale(&c);
    }
    Ok(JwProjector { n, element: f })
}

impl JwProjector {
    pub fn is_idempotent(&self) -> bool {
        &self.element * &self.element == self.element
    }

    /// `e_i f = f e_i = 0` for every generator.
    pub fn is_annihilated(&self) -> bool {
        (1..self.n).all(|i| {
            let e = RationalTL::generator(self.n, i);
            (&e * &self.element).is_zero() && (&self.element * &e).is_zero()
        })
    }

    /// Whether the closed trace is `(-1)^n [n+1]`.
    pub fn has_expected_trace(&self) -> bool {
        self.element.trace() == RatFunc::from_poly(theta_loop(self.n as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_satisfy_tl_relations() {
        let n = 4;
        let d = RatFunc::from_poly(delta());
        for i in 1..n {
            let e = RationalTL::generator(n, i);
            assert_eq!(&e * &e, e.scale(&d));
            if i + 1 < n {
                let f = RationalTL::generator(n, i + 1);
                assert_eq!(&(&e * &f) * &e, e);
            }
        }
        let id = RationalTL::identity(n);
        assert_eq!(id.trace(), RatFunc::from_poly(delta().pow(n as u32)));
    }

    #[test]
    fn second_projector_explicit() {
        let f2 = jw_projector(2).unwrap();
        let inv_delta = RatFunc::from_poly(delta()).inv().unwrap();
        let want = &RationalTL::identity(2) - &RationalTL::generator(2, 1).scale(&inv_delta);
        assert_eq!(f2.element, want);
        assert!(f2.is_idempotent());
    }

    #[test]
    fn small_projectors() {
        for n in 1..=4 {
            let f = jw_projector(n).unwrap();
            assert!(f.is_idempotent(), "f_{n} idempotent");
            assert!(f.is_annihilated(), "f_{n} killed by e_i");
            assert!(f.has_expected_trace(), "trace of f_{n}");
        }
    }

    #[test]
    fn budget() {
        assert!(matches!(jw_projector_with(5, 4), Err(Error::Budget { .. })));
        assert!(jw_projector(0).is_err());
    }
}
