//! Goeritz matrices and the Gordon–Litherland signature formula.

use std::collections::VecDeque;

use num_bigint::BigInt;

use super::PlanarDiagram;
use crate::error::{Error, Result};
use crate::linalg::symmetric_signature;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzData {
    /// Goeritz matrix over the unshaded regions, one region omitted.
    pub matrix: Vec<Vec<i64>>,
    /// Sum of the crossing indices over type II crossings.
    pub correction: i32,
}

impl GoeritzData {
    pub fn signature(&self) -> i32 {
        let m: Vec<Vec<BigInt>> = self.matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        symmetric_signature(&m) - self.correction
    }
}

/// Checkerboard colouring of the faces (`false` = colour of face 0) and the
/// face owning each crossing corner. Corner `k` lies between slots `k` and
/// `k + 1`.
fn checkerboard(d: &PlanarDiagram) -> (Vec<bool>, Vec<[usize; 4]>) {
    let faces = d.faces();
    let n = d.n_crossings();
    let mut dart_face = vec![[0usize; 4]; n];
    for (f, face) in faces.iter().enumerate() {
        for &(c, p) in face {
            dart_face[c][p] = f;
        }
    }
    let corner: Vec<[usize; 4]> =
        (0..n).map(|c| [dart_face[c][1], dart_face[c][2], dart_face[c][3], dart_face[c][0]]).collect();
    let index = d.arc_index();
    let mut adj = vec![Vec::new(); faces.len()];
    for c in 0..n {
        for p in 0..4 {
            // the faces on either side of the arc leaving (c, p)
            let (c2, p2) = index.other_end(d.crossings(), (c, p));
            let (f1, f2) = (dart_face[c][p], dart_face[c2][p2]);
            adj[f1].push(f2);
            adj[f2].push(f1);
        }
    }
    let mut color = vec![None; faces.len()];
    let mut queue = VecDeque::new();
    for s in 0..faces.len() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(f) = queue.pop_front() {
            let cf = color[f].expect("queued faces are coloured");
            for &g in &adj[f] {
                if color[g].is_none() {
                    color[g] = Some(!cf);
                    queue.push_back(g);
                }
            }
        }
    }
    (color.into_iter().map(|c| c.unwrap_or(false)).collect(), corner)
}

/// Goeritz data with face 0's colour class unshaded and the last unshaded
/// region omitted.
pub fn goeritz(d: &PlanarDiagram) -> Result<GoeritzData> {
    goeritz_with(d, false, None)
}

/// Goeritz data for an explicit choice: `swap_colors` shades face 0's class
/// instead; `omit` picks which unshaded region (by position) to drop.
pub fn goeritz_with(d: &PlanarDiagram, swap_colors: bool, omit: Option<usize>) -> Result<GoeritzData> {
    d.require_knot()?;
    let n = d.n_crossings();
    if n == 0 {
        return Ok(GoeritzData { matrix: vec![], correction: 0 });
    }
    let (color, corner) = checkerboard(d);
    let white: Vec<usize> = (0..color.len()).filter(|&f| color[f] == swap_colors).collect();
    let pos = |f: usize| white.iter().position(|&w| w == f);
    let w = white.len();
    let mut g = vec![vec![0i64; w]; w];
    let mut correction = 0;
    for c in 0..n {
        // shaded corners are {1,3} or {0,2}
        let shaded_13 = color[corner[c][1]] != swap_colors;
        let eta: i64 = if shaded_13 { 1 } else { -1 };
        let (a, b) = if shaded_13 { (corner[c][0], corner[c][2]) } else { (corner[c][1], corner[c][3]) };
        let (i, j) = (pos(a).expect("white corner"), pos(b).expect("white corner"));
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
        // in-in and out-out corners: {1,3} at positive crossings, {0,2} at negative
        let type_two = shaded_13 == (d.sign(c) > 0);
        if type_two {
            correction += eta as i32;
        }
    }
    let drop = omit.unwrap_or(w - 1).min(w - 1);
    let matrix: Vec<Vec<i64>> = g
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != drop).map(|(_, v)| *v).collect())
        .collect();
    Ok(GoeritzData { matrix, correction })
}

/// Knot signature; positive knots (e.g. the right-handed trefoil) have
/// negative signature.
pub fn signature(d: &PlanarDiagram) -> Result<i32> {
    if !d.is_knot() {
        return Err(Error::MultiComponent { components: d.n_components() });
    }
    Ok(goeritz(d)?.signature())
}
