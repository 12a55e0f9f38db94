//! Integral Khovanov homology and its reduced version.
//!
//! Gradings: `i = r - n₋` and `j = (#v₊ - #v₋) + r + n₊ - 2n₋`, where `r` is
//! the number of 1-smoothings. The graded Euler characteristic is
//! `(q + q⁻¹)·V(q²)`; the reduced theory marks the loop through the
//! smallest arc label, keeps it `v₋`, shifts `j` by one and has Euler
//! characteristic `V(q²)`.

mod complex;
mod notation;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use complex::ResolutionState;
use complex::Cube;
pub use notation::{format_kh, parse_kh, KhText};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::linalg::{SmithInvariants, SparseMatrix};
use crate::poly::{LaurentPoly, Var};

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/t`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Group {
    pub rank: u64,
    /// Orders of the cyclic torsion summands, ascending.
    pub torsion: Vec<BigInt>,
}

impl Group {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// `Z^2 + Z/2 + Z/2`, or `0`.
impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Homology groups indexed by `(i, j)`; trivial groups are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BigradedGroups {
    pub groups: BTreeMap<(i32, i32), Group>,
}

impl BigradedGroups {
    pub fn get(&self, i: i32, j: i32) -> Group {
        self.groups.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn rank(&self, i: i32, j: i32) -> u64 {
        self.groups.get(&(i, j)).map_or(0, |g| g.rank)
    }

    /// Multiplicity of `ℤ/order` at `(i, j)`.
    pub fn torsion_count(&self, i: i32, j: i32, order: u32) -> usize {
        self.groups.get(&(i, j)).map_or(0, |g| g.torsion.iter().filter(|t| **t == BigInt::from(order)).count())
    }

    pub(crate) fn insert(&mut self, i: i32, j: i32, g: Group) {
        if !g.is_trivial() {
            self.groups.insert((i, j), g);
        }
    }

    /// `Σ (-1)^i q^j rank(i, j)`.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(Var::Q);
        for (&(i, j), g) in &self.groups {
            let c = BigInt::from(g.rank);
            p.add_term(j, if i.rem_euclid(2) == 0 { c } else { -c });
        }
        p
    }

    /// Free ranks reflected through the origin, as for the mirror image.
    pub fn mirrored_ranks(&self) -> BTreeMap<(i32, i32), u64> {
        self.groups.iter().filter(|(_, g)| g.rank > 0).map(|(&(i, j), g)| ((-i, -j), g.rank)).collect()
    }

    pub fn total_rank(&self) -> u64 {
        self.groups.values().map(|g| g.rank).sum()
    }
}

/// One bidegree where two homology tables disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KhDifference {
    pub i: i32,
    pub j: i32,
    pub left: Group,
    pub right: Group,
}

/// Bidegrees where rank or torsion differ, in `(i, j)` order.
pub fn kh_diff(a: &BigradedGroups, b: &BigradedGroups) -> Vec<KhDifference> {
    let mut keys: Vec<(i32, i32)> = a.groups.keys().chain(b.groups.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(i, j)| {
            let (l, r) = (a.get(i, j), b.get(i, j));
            (l != r).then_some(KhDifference { i, j, left: l, right: r })
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct KhOptions {
    pub reduced: bool,
    /// Largest number of crossings accepted.
    pub max_crossings: usize,
    /// Verify `d∘d = 0` on every pair of consecutive differentials.
    pub check_d_squared: bool,
}

impl Default for KhOptions {
    fn default() -> Self {
        KhOptions { reduced: false, max_crossings: 16, check_d_squared: true }
    }
}

/// Per-bidegree data of a computed complex, kept for cross-checks.
#[derive(Debug, Clone, Default)]
pub struct ComplexStats {
    /// `(i, j)` → dimension of the chain group.
    pub dims: BTreeMap<(i32, i32), usize>,
    /// `(i, j)` → rank over `𝔽_p` of the differential leaving `(i, j)`.
    pub ranks_mod_p: BTreeMap<(i32, i32), usize>,
    /// Number of differential blocks checked for `d∘d = 0`.
    pub d_squared_checked: usize,
}

pub fn khovanov(d: &PlanarDiagram, reduced: bool) -> Result<BigradedGroups> {
    Ok(khovanov_with(d, KhOptions { reduced, ..KhOptions::default() })?.0)
}

/// Khovanov homology together with complex statistics. With
/// `check_d_squared`, a nonzero `d∘d` is reported as a panic: it can only
/// come from a sign or grading bug.
pub fn khovanov_with(d: &PlanarDiagram, opts: KhOptions) -> Result<(BigradedGroups, ComplexStats)> {
    d.require_knot()?;
    if d.n_crossings() > opts.max_crossings {
        return Err(Error::Budget { what: "Khovanov crossing count", limit: opts.max_crossings as u64 });
    }
    let mut out = BigradedGroups::default();
    let mut stats = ComplexStats::default();
    if d.n_crossings() == 0 {
        let unknots = d.free_loops();
        debug_assert_eq!(unknots, 1);
        let one = Group { rank: 1, torsion: vec![] };
        if opts.reduced {
            out.insert(0, 0, one);
        } else {
            out.insert(0, -1, one.clone());
            out.insert(0, 1, one);
        }
        return Ok((out, stats));
    }
    let cube = Cube::new(d, opts.reduced);
    let n = cube.n();
    let nm = cube.n_minus;
    // smith[r][q] for the differential leaving level r
    let mut smith: Vec<BTreeMap<i32, SmithInvariants>> = Vec::with_capacity(n + 1);
    let mut sizes: Vec<BTreeMap<i32, usize>> = Vec::with_capacity(n + 1);
    let mut prev: Option<BTreeMap<i32, SparseMatrix>> = None;
    let mut level = cube.level(0);
    for r in 0..=n {
        sizes.push(level.sizes.clone());
        if r == n {
            smith.push(BTreeMap::new());
            break;
        }
        let next = cube.level(r + 1);
        let mats = cube.differential(&level, &next);
        if opts.check_d_squared {
            if let Some(p) = &prev {
                for (q, a) in p {
                    if let Some(b) = mats.get(q) {
                        assert!(a.mul(b).is_zero(), "d∘d ≠ 0 at level {r}, q = {q}");
                        stats.d_squared_checked += 1;
                    }
                }
            }
        }
        let results: Vec<(i32, SmithInvariants, usize)> =
            mats.par_iter().map(|(&q, m)| (q, m.smith(), m.rank_mod_p(PRIME))).collect();
        let mut by_q = BTreeMap::new();
        for (q, s, rp) in results {
            stats.ranks_mod_p.insert((r as i32 - nm, q), rp);
            by_q.insert(q, s);
        }
        smith.push(by_q);
        prev = Some(mats);
        level = next;
    }
    for r in 0..=n {
        for (&q, &dim) in &sizes[r] {
            let i = r as i32 - nm;
            stats.dims.insert((i, q), dim);
            let out_rank = smith[r].get(&q).map_or(0, |s| s.rank);
            let incoming = if r > 0 { smith[r - 1].get(&q) } else { None };
            let in_rank = incoming.map_or(0, |s| s.rank);
            let torsion = incoming.map_or_else(Vec::new, |s| prime_power_parts(&s.torsion));
            let rank = (dim - out_rank - in_rank) as u64;
            out.insert(i, q, Group { rank, torsion });
        }
    }
    Ok((out, stats))
}

/// Splits invariant factors into their prime-power cyclic summands.
fn prime_power_parts(factors: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    for f in factors {
        let mut rest = f.clone();
        let mut p = BigInt::from(2);
        while &p * &p <= rest {
            let mut q = BigInt::one();
            while (&rest % &p).is_zero() {
                rest /= &p;
                q *= &p;
            }
            if !q.is_one() {
                out.push(q);
            }
            p += 1;
        }
        if !rest.is_one() {
            out.push(rest);
        }
    }
    out.sort();
    out
}

/// Prime for the independent rank check.
pub const PRIME: u64 = 2_305_843_009_213_693_951;

/// Unnormalized Jones polynomial `(q + q⁻¹)·V(q²)`, or `V(q²)` when reduced,
/// for comparison with [`BigradedGroups::euler_characteristic`].
pub fn jones_to_euler(v: &LaurentPoly, reduced: bool) -> LaurentPoly {
    let vq = v.substitute_power(Var::Q, 2);
    if reduced {
        vq
    } else {
        &vq * &LaurentPoly::from_terms(Var::Q, [(1, BigInt::one()), (-1, BigInt::one())])
    }
}

/// Torsion orders other than 2 anywhere in the table.
pub fn odd_torsion(g: &BigradedGroups) -> Vec<(i32, i32, BigInt)> {
    g.groups
        .iter()
        .flat_map(|(&(i, j), gr)| gr.torsion.iter().filter(|t| **t != BigInt::from(2)).map(move |t| (i, j, t.clone())))
        .filter(|(_, _, t)| !t.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::jones;

    fn pd(s: &str) -> PlanarDiagram {
        PlanarDiagram::parse(s).unwrap()
    }

    #[test]
    fn unknot_anchor() {
        let u = khovanov(&PlanarDiagram::unknot(), false).unwrap();
        assert_eq!(u.rank(0, -1), 1);
        assert_eq!(u.rank(0, 1), 1);
        assert_eq!(u.groups.len(), 2);
        let r = khovanov(&PlanarDiagram::unknot(), true).unwrap();
        assert_eq!(r.rank(0, 0), 1);
        assert_eq!(r.groups.len(), 1);
        for kink in ["X(1,2,2,1)", "X(1,1,2,2)"] {
            assert_eq!(khovanov(&pd(kink), false).unwrap(), u);
            assert_eq!(khovanov(&pd(kink), true).unwrap(), r);
        }
    }

    /// Left trefoil: ℤ at (0,-1), (0,-3), (-2,-5), (-3,-9) and ℤ/2 at (-2,-7).
    #[test]
    fn left_trefoil() {
        let d = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let (kh, stats) = khovanov_with(&d, KhOptions::default()).unwrap();
        let ranks: Vec<((i32, i32), u64)> = kh.groups.iter().filter(|g| g.1.rank > 0).map(|(k, g)| (*k, g.rank)).collect();
        assert_eq!(ranks, vec![((-3, -9), 1), ((-2, -5), 1), ((0, -3), 1), ((0, -1), 1)]);
        assert_eq!(kh.torsion_count(-2, -7, 2), 1);
        assert!(stats.d_squared_checked > 0);
        assert_eq!(kh.euler_characteristic(), jones_to_euler(&jones(&d).unwrap(), false));
        let red = khovanov(&d, true).unwrap();
        assert_eq!(red.euler_characteristic(), jones_to_euler(&jones(&d).unwrap(), true));
        assert_eq!(red.total_rank(), 3);
    }

    #[test]
    fn mirror_ranks() {
        let d = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let a = khovanov(&d, false).unwrap();
        let b = khovanov(&d.mirror(), false).unwrap();
        let rb: BTreeMap<(i32, i32), u64> = b.groups.iter().filter(|g| g.1.rank > 0).map(|(k, g)| (*k, g.rank)).collect();
        assert_eq!(a.mirrored_ranks(), rb);
    }

    #[test]
    fn prime_powers() {
        let parts = prime_power_parts(&[BigInt::from(12), BigInt::from(2)]);
        assert_eq!(parts, vec![BigInt::from(2), BigInt::from(3), BigInt::from(4)]);
    }

    #[test]
    fn group_display() {
        let g = Group { rank: 2, torsion: vec![BigInt::from(2), BigInt::from(2)] };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/2");
        assert_eq!(Group::default().to_string(), "0");
    }

    #[test]
    fn diff_of_equal_is_empty() {
        let d = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let a = khovanov(&d, false).unwrap();
        assert!(kh_diff(&a, &a).is_empty());
        let b = khovanov(&d.mirror(), false).unwrap();
        assert!(!kh_diff(&a, &b).is_empty());
    }

    #[test]
    fn links_and_budget_rejected() {
        assert!(matches!(khovanov(&pd("X(1,3,2,4) X(3,1,4,2)"), false), Err(Error::MultiComponent { .. })));
        let d = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let opts = KhOptions { max_crossings: 2, ..KhOptions::default() };
        assert!(matches!(khovanov_with(&d, opts), Err(Error::Budget { .. })));
    }
}
