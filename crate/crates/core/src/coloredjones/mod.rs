//! Coloured Jones polynomials `J_N` by cabling with a Jones–Wenzl projector.
//!
//! The knot is replaced by `N-1` parallel copies in the blackboard framing,
//! `f_(N-1)` is spliced into one arc, and the result is evaluated by the
//! same frontier sweep as the bracket. The projector's rational
//! coefficients are cleared by their common denominator first, so the sweep
//! stays in Laurent polynomials.

mod ratfunc;
mod tl;

use std::collections::HashMap;

use num_bigint::BigInt;

pub use ratfunc::{quantum_int, theta_loop, RatFunc};
pub use tl::{jw_projector, jw_projector_with, JwProjector, Matching, RationalTL, DEFAULT_MAX_PROJECTOR};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Var};
use crate::skein::{evaluate_items, BracketOptions, Item};

#[derive(Debug, Clone, Copy)]
pub struct ColoredJonesOptions {
    /// Largest colour `N` accepted.
    pub max_color: usize,
    /// Largest sweep frontier for the cabled diagram.
    pub max_width: usize,
}

impl Default for ColoredJonesOptions {
    fn default() -> Self {
        ColoredJonesOptions { max_color: 5, max_width: 20 }
    }
}

/// `J_N(K)` in `t = A⁻⁴`, normalized so the unknot is 1. `J_2` is the Jones
/// polynomial.
pub fn colored_jones(d: &PlanarDiagram, color: usize) -> Result<LaurentPoly> {
    colored_jones_with(d, color, ColoredJonesOptions::default())
}

pub fn colored_jones_with(d: &PlanarDiagram, color: usize, opts: ColoredJonesOptions) -> Result<LaurentPoly> {
    d.require_knot()?;
    if color < 2 {
        return Err(Error::Tangle("colour must be at least 2".into()));
    }
    if color > opts.max_color {
        return Err(Error::Budget { what: "coloured Jones colour", limit: opts.max_color as u64 });
    }
    if d.n_crossings() == 0 {
        return Ok(LaurentPoly::one(Var::T));
    }
    let n = color - 1;
    let projector = jw_projector_with(n, n.max(DEFAULT_MAX_PROJECTOR))?;
    let (mut items, tail, head) = cabled_items(d, n);
    let (nums, den) = projector.element.over_common_denominator();
    let mut labels = tail;
    labels.extend(head);
    let terms = nums.into_iter().map(|(m, c)| (pairs(&m), c)).collect();
    items.push(Item { labels, terms });
    let raw = evaluate_items(&items, 0, BracketOptions { max_width: opts.max_width })?;
    let unframed = raw.div_exact(&(&den * &theta_loop(n as u32))).expect("coloured bracket is a Laurent polynomial");
    // each unit of blackboard framing on an n-coloured strand costs
    // (-1)^n A^(n(n+2))
    let w = d.writhe();
    let sign: BigInt = if (n as i32 * w) % 2 == 0 { 1.into() } else { (-1).into() };
    let framed = unframed.shift(-((n * (n + 2)) as i32) * w).scale(&sign);
    framed
        .divide_exponents(Var::T, -4)
        .ok_or_else(|| Error::Tangle("coloured Jones exponents not divisible by 4".into()))
}

fn pairs(m: &Matching) -> Vec<(u8, u8)> {
    (0..m.len()).filter(|&p| (m[p] as usize) > p).map(|p| (p as u8, m[p])).collect()
}

/// Bracket items for the `n`-parallel blackboard cable of `d`, with the arc
/// of smallest label cut open. Returns the items and the copy labels on the
/// two sides of the cut, tail side then head side, copy 0 on the right of
/// the direction of travel in both.
fn cabled_items(d: &PlanarDiagram, n: usize) -> (Vec<Item>, Vec<u32>, Vec<u32>) {
    let index = d.arc_index();
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        next
    };
    let mut copies: HashMap<u32, Vec<u32>> = HashMap::new();
    for l in index.labels() {
        copies.insert(l, (0..n).map(|_| fresh()).collect());
    }
    let cut = index.labels().min().expect("diagram has arcs");
    let head_slot = d.head_of(&index, cut);
    let head: Vec<u32> = (0..n).map(|_| fresh()).collect();
    let tail = copies[&cut].clone();
    let mut items = Vec::with_capacity(d.n_crossings() * n * n);
    for (c, x) in d.crossings().iter().enumerate() {
        let at = |slot: usize| -> &Vec<u32> {
            if (c, slot) == head_slot {
                &head
            } else {
                &copies[&x[slot]]
            }
        };
        let over_east = d.over_enters_at_3(c);
        // under copies run north at column xi, over copies along rows y
        let row_copy = |y: usize| if over_east { y } else { n - 1 - y };
        let mut v = vec![vec![0u32; n + 1]; n];
        for (xi, col) in v.iter_mut().enumerate() {
            col[0] = at(0)[n - 1 - xi];
            col[n] = at(2)[n - 1 - xi];
            for cell in col.iter_mut().take(n).skip(1) {
                *cell = fresh();
            }
        }
        let mut h = vec![vec![0u32; n + 1]; n];
        for (y, row) in h.iter_mut().enumerate() {
            row[0] = at(3)[row_copy(y)];
            row[n] = at(1)[row_copy(y)];
            for cell in row.iter_mut().take(n).skip(1) {
                *cell = fresh();
            }
        }
        for xi in 0..n {
            for y in 0..n {
                items.push(Item::crossing([v[xi][y], h[y][xi + 1], v[xi][y + 1], h[y][xi]]));
            }
        }
    }
    (items, tail, head)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::jones;

    fn trefoil() -> PlanarDiagram {
        PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    #[test]
    fn unknots() {
        let kink = PlanarDiagram::parse("X(1,2,2,1)").unwrap();
        for n in 2..=5 {
            assert!(colored_jones(&PlanarDiagram::unknot(), n).unwrap().is_one());
            assert!(colored_jones(&kink, n).unwrap().is_one());
        }
    }

    #[test]
    fn color_two_is_jones() {
        let d = trefoil();
        assert_eq!(colored_jones(&d, 2).unwrap(), jones(&d).unwrap());
        let fig8 = PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(colored_jones(&fig8, 2).unwrap(), jones(&fig8).unwrap());
    }

    /// Cyclotomic expansion for one trefoil chirality:
    /// `Σ_k q^k Π_(j<k) (1 - q^(1-N+j))(1 - q^(1+N+j))`.
    fn trefoil_oracle(color: i32) -> LaurentPoly {
        let one = LaurentPoly::one(Var::T);
        let mut total = LaurentPoly::zero(Var::T);
        for k in 0..color {
            let mut term = LaurentPoly::monomial(Var::T, k, 1);
            for j in 0..k {
                term = &term * &(&one - &LaurentPoly::monomial(Var::T, 1 - color + j, 1));
                term = &term * &(&one - &LaurentPoly::monomial(Var::T, 1 + color + j, 1));
            }
            total += &term;
        }
        total
    }

    #[test]
    fn trefoil_matches_cyclotomic_oracle() {
        let d = trefoil();
        let flip = trefoil_oracle(2) != jones(&d).unwrap();
        for color in 2..=4 {
            let want = if flip { trefoil_oracle(color).invert_var() } else { trefoil_oracle(color) };
            assert_eq!(colored_jones(&d, color as usize).unwrap(), want, "colour {color}");
        }
        let m = d.mirror();
        assert_eq!(colored_jones(&m, 3).unwrap(), colored_jones(&d, 3).unwrap().invert_var());
    }

    #[test]
    fn rejects_links_and_big_colors() {
        let hopf = PlanarDiagram::parse("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert!(matches!(colored_jones(&hopf, 2), Err(Error::MultiComponent { .. })));
        assert!(matches!(colored_jones(&trefoil(), 9), Err(Error::Budget { .. })));
    }
}
