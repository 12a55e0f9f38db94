//! Reidemeister moves that add crossings, used to produce equivalent
//! diagrams for invariance checks.

use rand::Rng;

use super::{PlanarDiagram, Slot};
use crate::error::{Error, Result};

/// Inserts a Reidemeister I kink on arc `arc`. The four `kind`s cover both
/// crossing signs and both sides of the strand.
pub fn add_kink(d: &PlanarDiagram, arc: u32, kind: u8) -> Result<PlanarDiagram> {
    if d.n_crossings() == 0 {
        let x = match kind % 4 {
            0 | 2 => [1, 2, 2, 1],
            _ => [1, 1, 2, 2],
        };
        return PlanarDiagram::new(vec![x], d.free_loops() - 1);
    }
    let index = d.arc_index();
    if !index.ends.contains_key(&arc) {
        return Err(Error::Tangle(format!("no arc {arc}")));
    }
    let head = d.head_of(&index, arc);
    let (y, z) = (d.max_label() + 1, d.max_label() + 2);
    let mut xs = d.crossings().to_vec();
    xs[head.0][head.1] = z;
    xs.push(match kind % 4 {
        0 => [arc, y, y, z],
        1 => [arc, z, y, y],
        2 => [y, y, z, arc],
        _ => [y, arc, z, y],
    });
    PlanarDiagram::new(xs, d.free_loops())
}

/// Reidemeister II: pushes the arc of dart `dx` across the arc of dart `dy`
/// through the face both darts bound. A dart `(c, p)` is the arc leaving
/// crossing `c` through slot `p`, with the face on its right.
pub fn add_bigon(d: &PlanarDiagram, dx: Slot, dy: Slot, x_over: bool) -> Result<PlanarDiagram> {
    let faces = d.faces();
    if !faces.iter().any(|f| f.contains(&dx) && f.contains(&dy)) {
        return Err(Error::Tangle("darts do not bound a common face".into()));
    }
    let xs0 = d.crossings();
    let (x, y) = (xs0[dx.0][dx.1], xs0[dy.0][dy.1]);
    if x == y {
        return Err(Error::Tangle("darts lie on the same arc".into()));
    }
    let index = d.arc_index();
    let (px, qx) = (dx, index.other_end(xs0, dx));
    let (py, qy) = (dy, index.other_end(xs0, dy));
    let x_forward = d.head_of(&index, x) == qx;
    let y_forward = d.head_of(&index, y) == qy;
    let m = d.max_label();
    // pieces in orientation order: tail piece keeps the old label
    let (xa, xb, xc) = (x, m + 1, m + 2);
    let (ya, yb, yc) = (y, m + 3, m + 4);
    let (x1, x2, x3) = if x_forward { (xa, xb, xc) } else { (xc, xb, xa) };
    let (y1, y2, y3) = if y_forward { (ya, yb, yc) } else { (yc, yb, ya) };
    let mut xs = xs0.to_vec();
    xs[px.0][px.1] = x1;
    xs[qx.0][qx.1] = x3;
    xs[py.0][py.1] = y1;
    xs[qy.0][qy.1] = y3;
    let rot2 = |q: [u32; 4]| [q[2], q[3], q[0], q[1]];
    if x_over {
        let (c1, c2) = ([y2, x1, y3, x2], [y1, x3, y2, x2]);
        if y_forward {
            xs.extend([c1, c2]);
        } else {
            xs.extend([rot2(c1), rot2(c2)]);
        }
    } else {
        let (c1, c2) = ([x1, y3, x2, y2], [x2, y1, x3, y2]);
        if x_forward {
            xs.extend([c1, c2]);
        } else {
            xs.extend([rot2(c1), rot2(c2)]);
        }
    }
    PlanarDiagram::new(xs, d.free_loops())
}

/// Applies `steps` random crossing-adding moves and a random relabeling.
pub fn scramble<R: Rng>(d: &PlanarDiagram, steps: usize, rng: &mut R) -> PlanarDiagram {
    let mut cur = d.clone();
    for _ in 0..steps {
        let next = if cur.n_crossings() == 0 || rng.gen_bool(0.4) {
            let arc = if cur.n_crossings() == 0 {
                0
            } else {
                let labels: Vec<u32> = cur.crossings().iter().flat_map(|x| x.iter().copied()).collect();
                labels[rng.gen_range(0..labels.len())]
            };
            add_kink(&cur, arc, rng.gen_range(0..4))
        } else {
            let faces = cur.faces();
            let f = &faces[rng.gen_range(0..faces.len())];
            if f.len() < 2 {
                continue;
            }
            let i = rng.gen_range(0..f.len());
            let j = (i + rng.gen_range(1..f.len())) % f.len();
            add_bigon(&cur, f[i], f[j], rng.gen_bool(0.5))
        };
        if let Ok(n) = next {
            cur = n;
        }
    }
    relabel_randomly(&cur, rng)
}

/// Random injective relabeling of the arcs.
pub fn relabel_randomly<R: Rng>(d: &PlanarDiagram, rng: &mut R) -> PlanarDiagram {
    use rand::seq::SliceRandom;
    let m = d.max_label() as usize;
    let mut perm: Vec<u32> = (1..=(2 * m as u32 + 2)).collect();
    perm.shuffle(rng);
    d.map_labels(|l| perm[l as usize - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn kinks_change_writhe_by_one() {
        let d = PlanarDiagram::parse(TREFOIL).unwrap();
        let signs: Vec<i32> = (0..4).map(|k| add_kink(&d, 3, k).unwrap().writhe() - d.writhe()).collect();
        assert_eq!(signs, vec![-1, 1, 1, -1]);
        assert_eq!(add_kink(&PlanarDiagram::unknot(), 0, 0).unwrap().n_crossings(), 1);
    }

    #[test]
    fn bigons_preserve_writhe() {
        let d = PlanarDiagram::parse(TREFOIL).unwrap();
        let mut done = 0;
        for face in d.faces() {
            for &a in &face {
                for &b in &face {
                    if a == b {
                        continue;
                    }
                    for over in [true, false] {
                        if let Ok(e) = add_bigon(&d, a, b, over) {
                            assert_eq!(e.n_crossings(), 5);
                            assert_eq!(e.writhe(), d.writhe());
                            assert_eq!(e.n_components(), 1);
                            done += 1;
                        }
                    }
                }
            }
        }
        assert!(done > 0);
    }

    #[test]
    fn scramble_keeps_a_valid_knot() {
        let d = PlanarDiagram::parse(TREFOIL).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let e = scramble(&d, 4, &mut rng);
            assert!(e.is_knot());
            assert!(PlanarDiagram::new(e.crossings().to_vec(), 0).is_ok());
        }
    }
}
