//! Sparse Laurent polynomials in one and two variables with exact integer
//! coefficients.
//!
//! Every polynomial invariant in the crate is one of these two types. Zero
//! coefficients are never stored and terms are kept ordered by exponent, so
//! structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Symbolic variable tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    /// Kauffman bracket variable.
    A,
    /// Jones / Alexander variable.
    T,
    /// Khovanov quantum grading.
    Q,
    /// HOMFLY-PT framing variable.
    L,
    /// HOMFLY-PT skein variable.
    M,
    /// Kauffman polynomial framing variable (`a`).
    Fa,
    /// Kauffman polynomial skein variable.
    Z,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::T => "t",
            Var::Q => "q",
            Var::L => "l",
            Var::M => "m",
            Var::Fa => "a",
            Var::Z => "z",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "A" => Var::A,
            "t" => Var::T,
            "q" => Var::Q,
            "l" => Var::L,
            "m" => Var::M,
            "a" => Var::Fa,
            "z" => Var::Z,
            _ => return None,
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i32, BigInt>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn monomial(var: Var, exp: i32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(var: Var, terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `var -> new_var^k`.
    pub fn substitute_power(&self, new_var: Var, k: i32) -> Self {
        LaurentPoly {
            var: new_var,
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Replaces `var^e` by `new_var^(e / d)`; `None` if some exponent is not
    /// divisible by `d`.
    pub fn divide_exponents(&self, new_var: Var, d: i32) -> Option<Self> {
        let mut out = Self::zero(new_var);
        for (e, c) in &self.terms {
            if e % d != 0 {
                return None;
            }
            out.terms.insert(e / d, c.clone());
        }
        Some(out)
    }

    /// `p(var^-1)`.
    pub fn invert_var(&self) -> Self {
        self.substitute_power(self.var, -1)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Integer value at `var = x` (requires a Laurent-free polynomial or x = ±1).
    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            if *e < 0 && x.abs() != 1 {
                return None;
            }
            let base = BigInt::from(x);
            let v = if *e >= 0 {
                num_traits::pow(base, *e as usize)
            } else {
                num_traits::pow(base, (-*e) as usize)
            };
            total += c * v;
        }
        Some(total)
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.var));
        }
        let dmin = d.min_exp().unwrap();
        let dmax = d.max_exp().unwrap();
        let dlead = d.terms[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        while let Some(rmax) = rem.max_exp() {
            if rem.min_exp().unwrap() - dmin > rmax - dmax {
                return None;
            }
            let rlead = &rem.terms[&rmax];
            let (q, r) = rlead.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let shift = rmax - dmax;
            let sub = d.shift(shift).scale(&q);
            rem = &rem - &sub;
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    /// Greatest common divisor in `Z[var, var^-1]`, normalized to have lowest
    /// exponent 0 and positive leading coefficient.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let mut a = self.to_ordinary().primitive();
        let mut b = other.to_ordinary().primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // primitive polynomial remainder sequence
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        let g = a.primitive().scale(&c);
        g.normalize_unit()
    }

    fn to_ordinary(&self) -> LaurentPoly {
        match self.min_exp() {
            Some(m) => self.shift(-m),
            None => self.clone(),
        }
    }

    fn primitive(&self) -> LaurentPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, x)| (*e, x / &c)).collect(),
        }
    }

    fn degree(&self) -> i32 {
        self.max_exp().unwrap_or(-1)
    }

    fn pseudo_rem(&self, d: &LaurentPoly) -> LaurentPoly {
        let dd = d.degree();
        let lc = d.terms[&dd].clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let rd = r.degree();
            let rl = r.terms[&rd].clone();
            r = &r.scale(&lc) - &d.shift(rd - dd).scale(&rl);
        }
        r
    }

    /// Removes the unit ambiguity `±var^k`: lowest exponent 0, positive
    /// leading coefficient.
    pub fn normalize_unit(&self) -> LaurentPoly {
        let mut p = self.to_ordinary();
        if let Some(m) = p.max_exp() {
            if p.terms[&m].is_negative() {
                p = -p;
            }
        }
        p
    }

    /// Parses strings like `-t^-6+t^-5+2-3t^2` in the given variable.
    pub fn parse(var: Var, s: &str) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero(var);
        for (e, c) in parse_terms(s, &[var])? {
            p.add_term(e[0], c);
        }
        Ok(p)
    }
}

fn parse_terms(s: &str, vars: &[Var]) -> Result<Vec<(Vec<i32>, BigInt)>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("polynomial '{s}': {msg}") };
    if cleaned.is_empty() {
        return Err(bad("empty"));
    }
    if cleaned == "0" {
        return Ok(Vec::new());
    }
    let bytes = cleaned.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: BigInt = if i > start {
            cleaned[start..i].parse().map_err(|_| bad("bad coefficient"))?
        } else {
            BigInt::one()
        };
        let mut exps = vec![0i32; vars.len()];
        let mut saw_var = false;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            let ch = &cleaned[i..i + 1];
            let vi = vars
                .iter()
                .position(|v| v.name() == ch)
                .ok_or_else(|| bad(&format!("unknown variable '{ch}'")))?;
            i += 1;
            let mut e = 1i32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let (neg, brace) = {
                    let brace = i < bytes.len() && bytes[i] == b'{';
                    if brace {
                        i += 1;
                    }
                    let neg = i < bytes.len() && bytes[i] == b'-';
                    if neg {
                        i += 1;
                    }
                    (neg, brace)
                };
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(bad("missing exponent"));
                }
                e = cleaned[es..i].parse().map_err(|_| bad("bad exponent"))?;
                if neg {
                    e = -e;
                }
                if brace {
                    if i < bytes.len() && bytes[i] == b'}' {
                        i += 1;
                    } else {
                        return Err(bad("unclosed brace"));
                    }
                }
            }
            exps[vi] += e;
            saw_var = true;
        }
        if !saw_var && i == start {
            return Err(bad("dangling sign"));
        }
        out.push((exps, sign * coeff));
    }
    Ok(out)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, vars: &[(Var, i32)]) -> fmt::Result {
    let all_zero = vars.iter().all(|(_, e)| *e == 0);
    if c.is_negative() {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let a = c.abs();
    if !a.is_one() || all_zero {
        write!(f, "{a}")?;
    }
    for (v, e) in vars {
        match *e {
            0 => {}
            1 => write!(f, "{v}")?,
            e => write!(f, "{v}^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_monomial(f, i == 0, c, &[(self.var, *e)])?;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Two-variable Laurent polynomial; exponent pairs are ordered
/// lexicographically `(first, second)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    vars: (Var, Var),
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl LaurentPoly2 {
    pub fn zero(vars: (Var, Var)) -> Self {
        LaurentPoly2 { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: (Var, Var)) -> Self {
        Self::monomial(vars, (0, 0), 1)
    }

    pub fn monomial(vars: (Var, Var), exp: (i32, i32), coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(vars: (Var, Var), terms: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: (i32, i32)) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: (i32, i32), coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by the monomial `x^a y^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        LaurentPoly2 {
            vars: self.vars,
            terms: self.terms.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly2 {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Maps every exponent pair through `f` (e.g. `x -> x^-1`).
    pub fn map_exponents(&self, f: impl Fn(i32, i32) -> (i32, i32)) -> Self {
        let mut out = Self::zero(self.vars);
        for ((x, y), c) in &self.terms {
            out.add_term(f(*x, *y), c.clone());
        }
        out
    }

    /// Multiplies each coefficient by `sign(x, y)`.
    pub fn map_signs(&self, sign: impl Fn(i32, i32) -> bool) -> Self {
        LaurentPoly2 {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((*x, *y), if sign(*x, *y) { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Distinct exponents of the first (column) and second (row) variable.
    pub fn exponent_ranges(&self) -> (Vec<i32>, Vec<i32>) {
        let mut cols: Vec<i32> = self.terms.keys().map(|(x, _)| *x).collect();
        let mut rows: Vec<i32> = self.terms.keys().map(|(_, y)| *y).collect();
        cols.sort_unstable();
        cols.dedup();
        rows.sort_unstable();
        rows.dedup();
        (cols, rows)
    }

    /// Coefficient table: one row per power of the second variable, one
    /// column per power of the first variable, spanning every exponent that
    /// occurs with the given parity step (2 for HOMFLY-PT, 1 for Kauffman).
    pub fn table(&self, col_step: i32) -> CoefficientTable {
        let (cols, rows) = self.exponent_ranges();
        if cols.is_empty() {
            return CoefficientTable { vars: self.vars, col_exps: vec![], row_exps: vec![], cells: vec![] };
        }
        let lo = cols[0];
        let hi = *cols.last().unwrap();
        let col_exps: Vec<i32> = (0..).map(|k| lo + k * col_step).take_while(|e| *e <= hi).collect();
        let cells = rows
            .iter()
            .map(|r| col_exps.iter().map(|c| self.coeff((*c, *r))).collect())
            .collect();
        CoefficientTable { vars: self.vars, col_exps, row_exps: rows, cells }
    }

    /// Parses strings like `-3l^-4+8l^-2-5+l^4-4l^-4m^2`.
    pub fn parse(vars: (Var, Var), s: &str) -> Result<LaurentPoly2> {
        let mut p = LaurentPoly2::zero(vars);
        for (e, c) in parse_terms(s, &[vars.0, vars.1])? {
            p.add_term((e[0], e[1]), c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // grouped by the second variable, matching the table layout
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|((x, y), _)| (*y, *x));
        for (i, ((x, y), c)) in ordered.into_iter().enumerate() {
            write_monomial(f, i == 0, c, &[(self.vars.0, *x), (self.vars.1, *y)])?;
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(mut self) -> LaurentPoly2 {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero(self.vars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

/// Row/column view of a two-variable polynomial, laid out like published
/// knot tables: rows are powers of the skein variable (`m` or `z`), columns
/// powers of the framing variable (`l` or `a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    pub vars: (Var, Var),
    pub col_exps: Vec<i32>,
    pub row_exps: Vec<i32>,
    pub cells: Vec<Vec<BigInt>>,
}

fn power_label(v: Var, e: i32) -> String {
    match e {
        0 => "1".to_string(),
        1 => v.name().to_string(),
        e => format!("{v}^{e}"),
    }
}

impl fmt::Display for CoefficientTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = 6;
        write!(f, "{:>w$}|", "")?;
        for c in &self.col_exps {
            write!(f, "{:>w$}", power_label(self.vars.0, *c))?;
        }
        writeln!(f)?;
        for (r, row) in self.row_exps.iter().zip(&self.cells) {
            write!(f, "{:>w$}|", power_label(self.vars.1, *r))?;
            for c in row {
                if c.is_zero() {
                    write!(f, "{:>w$}", "")?;
                } else {
                    write!(f, "{c:>w$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// JSON form shared by every polynomial invariant:
/// `{"variables": [..], "terms": [[exp.., coeff], ..]}` with exponents sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variables: Vec<String>,
    pub terms: Vec<Vec<serde_json::Value>>,
}

fn coeff_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

fn json_coeff(v: &serde_json::Value) -> Result<BigInt> {
    let bad = || Error::Parse { pos: 0, msg: format!("bad JSON coefficient {v}") };
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    v.as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)
}

fn json_exp(v: &serde_json::Value) -> Result<i32> {
    v.as_i64()
        .and_then(|e| i32::try_from(e).ok())
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("bad JSON exponent {v}") })
}

fn json_var(s: &str) -> Result<Var> {
    Var::from_name(s).ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown variable '{s}'") })
}

impl LaurentPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            variables: vec![self.var.name().to_string()],
            terms: self
                .terms
                .iter()
                .map(|(e, c)| vec![serde_json::Value::from(*e), coeff_json(c)])
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        if j.variables.len() != 1 {
            return Err(Error::Parse { pos: 0, msg: "expected one variable".into() });
        }
        let mut p = LaurentPoly::zero(json_var(&j.variables[0])?);
        for t in &j.terms {
            if t.len() != 2 {
                return Err(Error::Parse { pos: 0, msg: "expected [exp, coeff]".into() });
            }
            p.add_term(json_exp(&t[0])?, json_coeff(&t[1])?);
        }
        Ok(p)
    }
}

impl LaurentPoly2 {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            variables: vec![self.vars.0.name().to_string(), self.vars.1.name().to_string()],
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| vec![serde_json::Value::from(*a), serde_json::Value::from(*b), coeff_json(c)])
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        if j.variables.len() != 2 {
            return Err(Error::Parse { pos: 0, msg: "expected two variables".into() });
        }
        let mut p = LaurentPoly2::zero((json_var(&j.variables[0])?, json_var(&j.variables[1])?));
        for t in &j.terms {
            if t.len() != 3 {
                return Err(Error::Parse { pos: 0, msg: "expected [exp, exp, coeff]".into() });
            }
            p.add_term((json_exp(&t[0])?, json_exp(&t[1])?), json_coeff(&t[2])?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p = LaurentPoly::parse(Var::T, "-t^-6 + t^-5 + t^-2 - t^-1 + 2 - t - t^4 + t^5").unwrap();
        assert_eq!(p.num_terms(), 8);
        assert_eq!(p.coeff(-6), BigInt::from(-1));
        assert_eq!(p.to_string(), "-t^-6+t^-5+t^-2-t^-1+2-t-t^4+t^5");
        assert_eq!(LaurentPoly::parse(Var::T, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly::parse(Var::T, "t - t + 3").unwrap();
        assert_eq!(p, LaurentPoly::monomial(Var::T, 0, 3));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::parse(Var::A, "A^2 + A^-2").unwrap();
        let b = LaurentPoly::parse(Var::A, "A^4 - A^-4").unwrap();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let c = LaurentPoly::parse(Var::A, "A + 1").unwrap();
        assert!(a.div_exact(&c).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let f = LaurentPoly::parse(Var::A, "A^2 + A^-2").unwrap();
        let g = LaurentPoly::parse(Var::A, "A^2 - 1").unwrap();
        let h = LaurentPoly::parse(Var::A, "A^6 + 3").unwrap();
        let x = &(&f * &g).shift(-5) * &LaurentPoly::monomial(Var::A, 0, 6);
        let y = &(&f * &h).scale(&BigInt::from(-4));
        assert_eq!(x.gcd(y), f.normalize_unit().scale(&BigInt::from(2)));
    }

    #[test]
    fn two_variable_table_layout() {
        let p = LaurentPoly2::parse((Var::L, Var::M), "-3l^-4 + 8l^-2 - 5 + l^4 - 4l^-4m^2").unwrap();
        let t = p.table(2);
        assert_eq!(t.col_exps, vec![-4, -2, 0, 2, 4]);
        assert_eq!(t.row_exps, vec![0, 2]);
        assert_eq!(t.cells[0][3], BigInt::zero());
        assert_eq!(t.cells[1][0], BigInt::from(-4));
        let rendered = t.to_string();
        assert!(rendered.contains("l^-4"));
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly2::parse((Var::Fa, Var::Z), "a^-4 - 5 + 5a^-3z + 123456789012345678901234a^2z^3").unwrap();
        let j = p.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(LaurentPoly2::from_json(&back).unwrap(), p);
        let q = LaurentPoly::parse(Var::T, "-t^-2+3-t^2").unwrap();
        assert_eq!(LaurentPoly::from_json(&q.to_json()).unwrap(), q);
    }
}
