//! HOMFLY-PT polynomial `P(l, m)`: `l⁻¹·P(L₊) - l·P(L₋) + m·P(L₀) = 0`,
//! `P(unknot) = 1`. This is the normalization used by the published census
//! tables; `P(t, t^½ - t^-½)` is the Jones polynomial.

use super::tree::{Pd, SkeinTree, Theory};
use super::SkeinOptions;
use crate::diagram::PlanarDiagram;
use crate::error::Result;
use crate::poly::{LaurentPoly2, Var};

const VARS: (Var, Var) = (Var::L, Var::M);

struct Homfly;

fn mono(l: i32, m: i32, c: i64) -> LaurentPoly2 {
    LaurentPoly2::monomial(VARS, (l, m), c)
}

/// `(l - l⁻¹)/m`, the value of a split unknotted circle.
fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms(VARS, [((1, -1), 1), ((-1, -1), -1)])
}

impl Theory for Homfly {
    fn unknot_kink(&self, _sign: i32) -> LaurentPoly2 {
        LaurentPoly2::one(VARS)
    }

    fn descending(&self, _pd: &Pd, components: u32) -> LaurentPoly2 {
        delta().pow(components.saturating_sub(1))
    }

    fn resolve(&self, pd: &Pd, c: usize) -> (LaurentPoly2, Vec<(LaurentPoly2, Pd)>) {
        let smooth = pd.smoothed_oriented(c);
        if pd.pos[c] {
            (mono(2, 0, 1), vec![(mono(1, 1, -1), smooth)])
        } else {
            (mono(-2, 0, 1), vec![(mono(-1, 1, 1), smooth)])
        }
    }
}

pub fn homfly(d: &PlanarDiagram) -> Result<LaurentPoly2> {
    homfly_with(d, SkeinOptions::default())
}

pub fn homfly_with(d: &PlanarDiagram, opts: SkeinOptions) -> Result<LaurentPoly2> {
    let tree = SkeinTree::new(&Homfly, opts.node_limit);
    tree.eval(&Pd::from_diagram(d))
}
