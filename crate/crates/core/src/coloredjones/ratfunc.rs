//! Exact rational functions in `A`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::poly::{LaurentPoly, Var};

/// `num / den` in lowest terms; `den` has lowest exponent 0 and a positive
/// leading coefficient, so equal functions compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    /// `None` when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num.with_var(Var::A), den.with_var(Var::A)))
    }

    pub fn from_poly(p: LaurentPoly) -> RatFunc {
        Self::reduce(p.with_var(Var::A), LaurentPoly::one(Var::A))
    }

    pub fn zero() -> RatFunc {
        RatFunc { num: LaurentPoly::zero(Var::A), den: LaurentPoly::one(Var::A) }
    }

    pub fn one() -> RatFunc {
        RatFunc { num: LaurentPoly::one(Var::A), den: LaurentPoly::one(Var::A) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if any.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let m = den.min_exp().expect("nonzero");
        num = num.shift(-m);
        den = den.shift(-m);
        let top = den.max_exp().expect("nonzero");
        if den.coeff(top) < 0.into() {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::reduce(&self.num + &o.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o.clone())
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -self.num, den: self.den }
    }
}

/// Quantum integer `[k] = (A^2k - A^-2k)/(A^2 - A^-2)`.
pub fn quantum_int(k: u32) -> LaurentPoly {
    let k = k as i32;
    LaurentPoly::from_terms(Var::A, (0..k).map(|j| (2 * (k - 1) - 4 * j, 1)))
}

/// Value of the closed `n`-projector loop, `Δ_n = (-1)^n [n+1]`.
pub fn theta_loop(n: u32) -> LaurentPoly {
    let q = quantum_int(n + 1);
    if n.is_multiple_of(2) {
        q
    } else {
        -q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Var::A, s).unwrap()
    }

    #[test]
    fn arithmetic_cancels() {
        let x = RatFunc::new(p("A^2-A^-2"), p("A^4-A^-4")).unwrap();
        assert_eq!(x, RatFunc::new(p("1"), p("A^2+A^-2")).unwrap());
        let y = &x + &x;
        assert_eq!(&y / &x, RatFunc::from_poly(p("2")));
        assert!((&x - &x).is_zero());
        assert_eq!((&x * &x.inv().unwrap()), RatFunc::one());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_int(1), p("1"));
        assert_eq!(quantum_int(2), p("A^2+A^-2"));
        assert_eq!(quantum_int(3), p("A^4+1+A^-4"));
        // Δ_1 is the loop value -A² - A⁻²
        assert_eq!(theta_loop(1), p("-A^2-A^-2"));
        assert!(RatFunc::new(p("1"), p("0")).is_none());
    }
}
