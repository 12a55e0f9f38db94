//! Kauffman polynomial `F(a, z) = a^(-w) Λ`, where the regular isotopy
//! invariant `Λ` satisfies `Λ(L₊) + Λ(L₋) = z (Λ(L₀) + Λ(L∞))` and a positive
//! kink contributes a factor `a`.

use super::tree::{Pd, SkeinTree, Theory};
use super::SkeinOptions;
use crate::diagram::PlanarDiagram;
use crate::error::Result;
use crate::poly::{LaurentPoly2, Var};

const VARS: (Var, Var) = (Var::Fa, Var::Z);

struct Kauffman;

/// `(a + a⁻¹)/z - 1`.
fn delta() -> LaurentPoly2 {
    LaurentPoly2::from_terms(VARS, [((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)])
}

impl Theory for Kauffman {
    fn unknot_kink(&self, sign: i32) -> LaurentPoly2 {
        LaurentPoly2::monomial(VARS, (sign, 0), 1)
    }

    fn descending(&self, pd: &Pd, components: u32) -> LaurentPoly2 {
        &self.unknot_kink(pd.self_writhe()) * &delta().pow(components.saturating_sub(1))
    }

    fn resolve(&self, pd: &Pd, c: usize) -> (LaurentPoly2, Vec<(LaurentPoly2, Pd)>) {
        let z = LaurentPoly2::monomial(VARS, (0, 1), 1);
        let (a, b) = pd.smoothed_unoriented(c);
        (LaurentPoly2::monomial(VARS, (0, 0), -1), vec![(z.clone(), a), (z, b)])
    }
}

/// The regular isotopy invariant `Λ` of the diagram.
pub fn kauffman_lambda(d: &PlanarDiagram, opts: SkeinOptions) -> Result<LaurentPoly2> {
    let tree = SkeinTree::new(&Kauffman, opts.node_limit);
    tree.eval(&Pd::from_diagram(d))
}

pub fn kauffman_poly(d: &PlanarDiagram) -> Result<LaurentPoly2> {
    kauffman_poly_with(d, SkeinOptions::default())
}

pub fn kauffman_poly_with(d: &PlanarDiagram, opts: SkeinOptions) -> Result<LaurentPoly2> {
    Ok(kauffman_lambda(d, opts)?.shift(-d.writhe(), 0))
}
