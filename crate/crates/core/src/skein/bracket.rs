//! Kauffman bracket by a frontier sweep over crossings and boxes.
//!
//! The sweep keeps, for every non-crossing matching of the open arcs on the
//! current frontier, a Laurent polynomial coefficient. Absorbing an item
//! (a crossing or any Temperley–Lieb box) merges its matchings into the
//! frontier and closes loops into factors of `δ = -A² - A⁻²`.

use std::collections::HashMap;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Var};

/// A local piece of diagram: boundary arc labels and a formal combination of
/// pairings of its boundary points. A label may occur twice when an arc runs
/// from the item back into itself.
#[derive(Debug, Clone)]
pub struct Item {
    pub labels: Vec<u32>,
    pub terms: Vec<(Vec<(u8, u8)>, LaurentPoly)>,
}

impl Item {
    /// `⟨X(a,b,c,d)⟩ = A⟨(a b)(c d)⟩ + A⁻¹⟨(a d)(b c)⟩`.
    pub fn crossing(x: [u32; 4]) -> Item {
        Item {
            labels: x.to_vec(),
            terms: vec![
                (vec![(0, 1), (2, 3)], LaurentPoly::monomial(Var::A, 1, 1)),
                (vec![(0, 3), (1, 2)], LaurentPoly::monomial(Var::A, -1, 1)),
            ],
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BracketOptions {
    /// Largest frontier (number of open arcs) allowed during the sweep.
    pub max_width: usize,
}

impl Default for BracketOptions {
    fn default() -> Self {
        BracketOptions { max_width: 20 }
    }
}

pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, [(2, -1), (-2, -1)])
}

fn open_labels(it: &Item) -> Vec<u32> {
    let mut ls: Vec<u32> = it.labels.iter().copied().filter(|l| it.labels.iter().filter(|m| *m == l).count() == 1).collect();
    ls.sort_unstable();
    ls
}

/// Orders items greedily: always take an item touching the frontier (when
/// there is one) that grows it least.
pub fn sweep_order(items: &[Item]) -> Vec<usize> {
    let n = items.len();
    let open_of: Vec<Vec<u32>> = items.iter().map(open_labels).collect();
    let mut done = vec![false; n];
    let mut open: std::collections::HashSet<u32> = std::collections::HashSet::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(bool, i64, i64, usize)> = None;
        for i in (0..n).filter(|&i| !done[i]) {
            let closed = open_of[i].iter().filter(|l| open.contains(l)).count() as i64;
            let opened = open_of[i].len() as i64 - closed;
            let key = (closed == 0, opened - closed, -closed, i);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let i = best.expect("an item remains").3;
        done[i] = true;
        order.push(i);
        for &l in &open_of[i] {
            if !open.remove(&l) {
                open.insert(l);
            }
        }
    }
    order
}

/// Unnormalized evaluation: a diagram made only of `items` plus `free_loops`
/// circles, each closed loop weighted by `δ`. Returns `⟨D⟩·δ` in the
/// normalization where the empty diagram is 1.
pub fn evaluate_items(items: &[Item], free_loops: u32, opts: BracketOptions) -> Result<LaurentPoly> {
    let d = delta();
    let order = sweep_order(items);
    // frontier: sorted open labels; state: partner index per frontier slot
    let mut frontier: Vec<u32> = Vec::new();
    let mut states: HashMap<Vec<u8>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one(Var::A));
    let mut loop_count_total = free_loops;
    let mut delta_pows: Vec<LaurentPoly> = vec![LaurentPoly::one(Var::A)];
    for &ix in &order {
        let it = &items[ix];
        let m = it.labels.len();
        // classify the item's points
        let mut pos_in_frontier: Vec<Option<usize>> = vec![None; m];
        let mut twin: Vec<Option<usize>> = vec![None; m];
        for p in 0..m {
            if let Ok(k) = frontier.binary_search(&it.labels[p]) {
                pos_in_frontier[p] = Some(k);
            }
            for q in 0..m {
                if q != p && it.labels[q] == it.labels[p] {
                    twin[p] = Some(q);
                }
            }
        }
        let mut new_frontier: Vec<u32> = frontier
            .iter()
            .copied()
            .filter(|l| !it.labels.contains(l))
            .chain((0..m).filter(|&p| pos_in_frontier[p].is_none() && twin[p].is_none()).map(|p| it.labels[p]))
            .collect();
        new_frontier.sort_unstable();
        if new_frontier.len() > opts.max_width {
            return Err(Error::Budget { what: "bracket sweep width", limit: opts.max_width as u64 });
        }
        let f = frontier.len();
        // node ids: 0..f frontier slots, f..f+m item points
        let mut next_states: HashMap<Vec<u8>, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        let new_index = |l: u32| new_frontier.binary_search(&l).expect("label on new frontier");
        // endpoint ids for the new frontier, in node space
        let mut frontier_to_new: Vec<Option<usize>> = vec![None; f];
        for (k, l) in frontier.iter().enumerate() {
            if !it.labels.contains(l) {
                frontier_to_new[k] = Some(new_index(*l));
            }
        }
        let mut point_to_new: Vec<Option<usize>> = vec![None; m];
        for p in 0..m {
            if pos_in_frontier[p].is_none() && twin[p].is_none() {
                point_to_new[p] = Some(new_index(it.labels[p]));
            }
        }
        let total = f + m;
        let mut partner_a = vec![usize::MAX; total]; // state or term matching
        let mut partner_b = vec![usize::MAX; total]; // label identification
        for p in 0..m {
            if let Some(k) = pos_in_frontier[p] {
                partner_b[f + p] = k;
                partner_b[k] = f + p;
            }
            if let Some(q) = twin[p] {
                partner_b[f + p] = f + q;
            }
        }
        let mut visited = vec![false; total];
        for (state, coeff) in &states {
            for (k, &pk) in state.iter().enumerate() {
                partner_a[k] = pk as usize;
            }
            for (pairs, tc) in &it.terms {
                for &(a, b) in pairs {
                    partner_a[f + a as usize] = f + b as usize;
                    partner_a[f + b as usize] = f + a as usize;
                }
                visited.iter_mut().for_each(|v| *v = false);
                let mut out = vec![0u8; new_frontier.len()];
                let endpoint = |x: usize| if x < f { frontier_to_new[x] } else { point_to_new[x - f] };
                // paths from endpoints
                for s in 0..total {
                    if visited[s] {
                        continue;
                    }
                    let Some(ns) = endpoint(s) else { continue };
                    // walk: from an endpoint, first step along partner_a
                    visited[s] = true;
                    let mut cur = partner_a[s];
                    let mut use_a = false;
                    loop {
                        visited[cur] = true;
                        if let Some(ne) = endpoint(cur) {
                            out[ns] = ne as u8;
                            out[ne] = ns as u8;
                            break;
                        }
                        cur = if use_a { partner_a[cur] } else { partner_b[cur] };
                        use_a = !use_a;
                    }
                }
                // remaining unvisited nodes form closed loops
                let mut loops = 0usize;
                for s in 0..total {
                    if visited[s] {
                        continue;
                    }
                    loops += 1;
                    let mut cur = s;
                    let mut use_a = true;
                    while !visited[cur] {
                        visited[cur] = true;
                        cur = if use_a { partner_a[cur] } else { partner_b[cur] };
                        use_a = !use_a;
                    }
                }
                while delta_pows.len() <= loops {
                    let next = delta_pows.last().expect("nonempty") * &d;
                    delta_pows.push(next);
                }
                let term = &(coeff * tc) * &delta_pows[loops];
                next_states
                    .entry(out)
                    .and_modify(|v| *v += &term)
                    .or_insert(term);
            }
        }
        next_states.retain(|_, v| !v.is_zero());
        states = next_states;
        frontier = new_frontier;
    }
    debug_assert!(frontier.is_empty());
    let mut result = states.remove(&Vec::new()).unwrap_or_else(|| LaurentPoly::zero(Var::A));
    while loop_count_total > 0 {
        result = &result * &d;
        loop_count_total -= 1;
    }
    Ok(result)
}

/// Kauffman bracket normalized so the crossingless unknot is 1.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_with(d, BracketOptions::default())
}

pub fn kauffman_bracket_with(d: &PlanarDiagram, opts: BracketOptions) -> Result<LaurentPoly> {
    let items: Vec<Item> = d.crossings().iter().map(|&x| Item::crossing(x)).collect();
    let raw = evaluate_items(&items, d.free_loops(), opts)?;
    Ok(raw.div_exact(&delta()).expect("bracket of a nonempty diagram is divisible by δ"))
}

/// Reference state sum over all `2ⁿ` smoothings.
pub fn bracket_state_sum(d: &PlanarDiagram) -> LaurentPoly {
    let xs = d.crossings();
    let n = xs.len();
    assert!(n <= 24, "state sum limited to 24 crossings");
    let mut labels: Vec<u32> = xs.iter().flat_map(|x| x.iter().copied()).collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |l: u32| labels.binary_search(&l).expect("label");
    let mut total = LaurentPoly::zero(Var::A);
    let dl = delta();
    for s in 0u64..(1u64 << n) {
        let mut uf = crate::diagram::UnionFind::new(labels.len());
        let mut a_count = 0i32;
        for (i, x) in xs.iter().enumerate() {
            if s >> i & 1 == 0 {
                a_count += 1;
                uf.union(id(x[0]), id(x[1]));
                uf.union(id(x[2]), id(x[3]));
            } else {
                uf.union(id(x[0]), id(x[3]));
                uf.union(id(x[1]), id(x[2]));
            }
        }
        let loops = (0..labels.len()).filter(|&i| uf.find(i) == i).count() as u32 + d.free_loops();
        let exp = a_count - (n as i32 - a_count);
        total += &(&LaurentPoly::monomial(Var::A, exp, 1) * &dl.pow(loops - 1));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_and_kinks() {
        assert!(kauffman_bracket(&PlanarDiagram::unknot()).unwrap().is_one());
        let neg = PlanarDiagram::parse("X(1,2,2,1)").unwrap();
        let pos = PlanarDiagram::parse("X(1,1,2,2)").unwrap();
        assert_eq!(kauffman_bracket(&neg).unwrap(), LaurentPoly::monomial(Var::A, -3, -1));
        assert_eq!(kauffman_bracket(&pos).unwrap(), LaurentPoly::monomial(Var::A, 3, -1));
    }

    #[test]
    fn trefoil_matches_state_sum() {
        let d = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = kauffman_bracket(&d).unwrap();
        assert_eq!(b, bracket_state_sum(&d));
        assert_eq!(b, LaurentPoly::parse(Var::A, "A^7-A^3-A^-5").unwrap());
    }

    #[test]
    fn width_budget() {
        let d = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert!(matches!(kauffman_bracket_with(&d, BracketOptions { max_width: 1 }), Err(Error::Budget { .. })));
    }
}
