//! Random small tangles and closures for invariance suites.
//!
//! Tangles are drawn as Morse diagrams: a frontier of strands sweeps down
//! from the NW/NE boundary points through crossings, cups and caps to SW/SE.

use rand::Rng;

use super::{Closure, Tangle};
use crate::diagram::UnionFind;

/// A random 2-2 tangle with between 1 and `max_crossings` crossings and no
/// closed components.
pub fn random_tangle<R: Rng>(rng: &mut R, max_crossings: usize) -> Tangle {
    loop {
        if let Some(t) = attempt(rng, max_crossings.max(1)) {
            return t;
        }
    }
}

fn attempt<R: Rng>(rng: &mut R, max_crossings: usize) -> Option<Tangle> {
    let target = rng.gen_range(1..=max_crossings);
    let mut next = 2u32;
    let mut fresh = || {
        next += 1;
        next
    };
    let mut frontier: Vec<u32> = vec![1, 2];
    let mut xs: Vec<[u32; 4]> = Vec::new();
    let mut caps: Vec<(u32, u32)> = Vec::new();
    let mut made = 0;
    let mut steps = 0;
    while made < target || frontier.len() > 2 {
        steps += 1;
        if steps > 20 * max_crossings + 40 {
            return None;
        }
        let w = frontier.len();
        let roll = rng.gen_range(0..10);
        if made < target && roll < 6 {
            let i = rng.gen_range(0..w - 1);
            let (f0, f1) = (frontier[i], frontier[i + 1]);
            let (g0, g1) = (fresh(), fresh());
            // ccw from the top-left: f0, g0, g1, f1; strands f0-g1 and f1-g0
            if rng.gen_bool(0.5) {
                xs.push([f0, g0, g1, f1]);
            } else {
                xs.push([g0, g1, f1, f0]);
            }
            frontier[i] = g0;
            frontier[i + 1] = g1;
            made += 1;
        } else if made < target && roll < 8 && w < 6 {
            let i = rng.gen_range(0..=w);
            let l = fresh();
            frontier.insert(i, l);
            frontier.insert(i, l);
        } else if w > 2 {
            let i = rng.gen_range(0..w - 1);
            if frontier[i] == frontier[i + 1] {
                continue;
            }
            caps.push((frontier[i], frontier[i + 1]));
            frontier.drain(i..i + 2);
        }
    }
    let mut uf = UnionFind::new(next as usize + 1);
    for (a, b) in caps {
        uf.union(a as usize, b as usize);
    }
    let roots: Vec<u32> = (0..=next as usize).map(|l| uf.find(l) as u32).collect();
    let f = |l: u32| roots[l as usize];
    let xs: Vec<[u32; 4]> = xs.iter().map(|x| x.map(f)).collect();
    let (sw, se) = (f(frontier[0]), f(frontier[1]));
    Tangle::from_pd(xs, f(1), f(2), sw, se).ok()
}

/// A closure for a 2-2 tangle: numerator, denominator, or the numerator
/// through a short row of twists.
pub fn random_closure<R: Rng>(rng: &mut R) -> Closure {
    match rng.gen_range(0..4) {
        0 => Closure::Numerator,
        1 => Closure::Denominator,
        _ => {
            let k = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            Closure::through(&format!("twist{k}"), &Tangle::horizontal_twists(k))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tangles_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t = random_tangle(&mut rng, 6);
            assert!((1..=6).contains(&t.n_crossings()));
            assert_eq!(Tangle::parse(&t.to_string()).unwrap(), t);
        }
    }
}
