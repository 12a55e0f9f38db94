//! Polynomial invariants: Kauffman bracket and Jones, HOMFLY-PT, the
//! Kauffman polynomial and the Alexander polynomial.
//!
//! Conventions (fixed once, checked by tests):
//!
//! * `⟨X(a,b,c,d)⟩ = A⟨(a b)(c d)⟩ + A⁻¹⟨(a d)(b c)⟩`, `V(t) = (-A)^(-3w)⟨D⟩`
//!   at `t = A⁻⁴`;
//! * `l⁻¹·P(L₊) - l·P(L₋) + m·P(L₀) = 0`;
//! * `Λ(L₊) + Λ(L₋) = z(Λ(L₀) + Λ(L∞))`, positive kink `= a`, `F = a^(-w)Λ`.

mod alexander;
mod bracket;
mod homfly;
mod kauffman;
pub(crate) mod tree;

use num_bigint::BigInt;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, LaurentPoly2, Var};

pub use alexander::{alexander, alexander_matrix, conway_normalize, determinant};
pub use bracket::{
    bracket_state_sum, delta, evaluate_items, kauffman_bracket, kauffman_bracket_with, sweep_order, BracketOptions,
    Item,
};
pub use homfly::{homfly, homfly_with};
pub use kauffman::{kauffman_lambda, kauffman_poly, kauffman_poly_with};

#[derive(Debug, Clone, Copy)]
pub struct SkeinOptions {
    /// Maximum number of skein-tree nodes before giving up.
    pub node_limit: u64,
}

impl Default for SkeinOptions {
    fn default() -> Self {
        SkeinOptions { node_limit: 100_000_000 }
    }
}

/// Converts a bracket-normalized polynomial in `A` to `t = A⁻⁴`.
pub fn bracket_to_jones(bracket: &LaurentPoly, writhe: i32) -> Option<LaurentPoly> {
    let sign: BigInt = if writhe % 2 == 0 { 1.into() } else { (-1).into() };
    bracket.shift(-3 * writhe).scale(&sign).divide_exponents(Var::T, -4)
}

/// Jones polynomial of a knot.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPoly> {
    d.require_knot()?;
    let b = kauffman_bracket(d)?;
    Ok(bracket_to_jones(&b, d.writhe()).expect("knot brackets have exponents divisible by 4"))
}

/// `(t - 2 + t⁻¹)^k`.
fn z2_power(k: u32) -> LaurentPoly {
    LaurentPoly::from_terms(Var::T, [(1, 1), (0, -2), (-1, 1)]).pow(k)
}

fn even_half(e: i32) -> Result<u32> {
    if e % 2 != 0 || e < 0 {
        return Err(Error::MultiComponent { components: 2 });
    }
    Ok((e / 2) as u32)
}

/// Jones polynomial of a knot from its HOMFLY-PT polynomial: `l = t`,
/// `m = t^½ - t^-½`.
pub fn jones_from_homfly(p: &LaurentPoly2) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(Var::T);
    for ((a, b), c) in p.terms() {
        out += &z2_power(even_half(b)?).shift(a).scale(c);
    }
    Ok(out)
}

/// Alexander polynomial of a knot from its HOMFLY-PT polynomial: `l = 1`,
/// `m = t^½ - t^-½`.
pub fn alexander_from_homfly(p: &LaurentPoly2) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero(Var::T);
    for ((_, b), c) in p.terms() {
        out += &z2_power(even_half(b)?).scale(c);
    }
    Ok(out)
}

/// `V(t⁻¹)`.
pub fn mirror_jones(v: &LaurentPoly) -> LaurentPoly {
    v.invert_var()
}

/// `P(-l⁻¹, m)`; the sign only matters for links with an even number of
/// components.
pub fn mirror_homfly(p: &LaurentPoly2) -> LaurentPoly2 {
    p.map_exponents(|a, b| (-a, b)).map_signs(|a, _| a.rem_euclid(2) == 1)
}

/// `F(a⁻¹, z)`.
pub fn mirror_kauffman(f: &LaurentPoly2) -> LaurentPoly2 {
    f.map_exponents(|a, b| (-a, b))
}
