//! Link signature from a checkerboard coloring: the Goeritz form of the
//! white regions, corrected by the type II crossings of the shaded surface.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::OrientedDiagram;

/// Signature (positive minus negative eigenvalue count) of a symmetric
/// integer matrix, by exact congruence diagonalization.
#[allow(clippy::needless_range_loop)]
pub fn matrix_signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    for i in 0..n {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                // row/col i += row/col j makes the pivot 2 a_ij
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
            } else {
                continue;
            }
        }
        let pivot = a[i][i].clone();
        if pivot.is_positive() {
            sig += 1;
        } else {
            sig -= 1;
        }
        for j in i + 1..n {
            if a[j][i].is_zero() {
                continue;
            }
            let f = &a[j][i] / &pivot;
            for k in i..n {
                let v = &f * &a[i][k];
                a[j][k] -= v;
            }
            for k in i..n {
                let v = &f * &a[k][i];
                a[k][j] -= v;
            }
        }
    }
    sig
}

/// Gordon–Litherland signature of an oriented diagram, summed over the
/// connected pieces of the diagram. Free loops contribute nothing.
pub fn signature_of(o: &OrientedDiagram) -> i64 {
    signature_with_shading(o, 0)
}

/// The same computation with the opposite checkerboard color shaded; the
/// result must not depend on `flip`.
pub(crate) fn signature_with_shading(o: &OrientedDiagram, flip: u8) -> i64 {
    let d = &o.diagram;
    let (face, nfaces) = d.faces();
    let mut total = 0;
    for piece in d.pieces() {
        // checkerboard: adjacent corners at a crossing get opposite colors
        let mut color = vec![u8::MAX; nfaces];
        let first = face[piece[0]][0];
        color[first] = 0;
        let mut changed = true;
        while changed {
            changed = false;
            for &c in &piece {
                for i in 0..4 {
                    let (f, g) = (face[c][i], face[c][(i + 1) % 4]);
                    if color[f] != u8::MAX && color[g] == u8::MAX {
                        color[g] = 1 - color[f];
                        changed = true;
                    } else if color[g] != u8::MAX && color[f] == u8::MAX {
                        color[f] = 1 - color[g];
                        changed = true;
                    }
                }
            }
        }
        let shaded = |f: usize| color[f] ^ flip == 1;

        let mut white: Vec<usize> = Vec::new();
        for &c in &piece {
            for i in 0..4 {
                let f = face[c][i];
                assert!(color[f] != u8::MAX && color[face[c][(i + 1) % 4]] != color[f]);
                if !shaded(f) && !white.contains(&f) {
                    white.push(f);
                }
            }
        }
        white.sort_unstable();
        let idx = |f: usize| white.binary_search(&f).unwrap();
        let m = white.len();
        let mut g = vec![vec![0i64; m]; m];
        let mut mu = 0i64;
        for &c in &piece {
            let over = d.crossings[c].over as usize;
            let eta = if shaded(face[c][over]) { 1 } else { -1 };
            // white corners sit at i and i + 2 for the unshaded parity
            let wi = (0..4).find(|&i| !shaded(face[c][i])).unwrap();
            let (a, b) = (idx(face[c][wi]), idx(face[c][wi + 2]));
            if a != b {
                g[a][b] -= eta;
                g[b][a] -= eta;
                g[a][a] += eta;
                g[b][b] += eta;
            }
            // oriented smoothing joins the incoming end of one strand to the
            // outgoing end of the other; it cuts off corners s and s + 2
            let i_over = o.incoming(c, over as u8) as usize;
            let out_under = (o.incoming(c, 1 - over as u8) as usize + 2) % 4;
            let s = if (i_over + 1) % 4 == out_under {
                i_over
            } else {
                out_under
            };
            if shaded(face[c][(s + 1) % 4]) {
                mu += eta;
            }
        }
        let reduced: Vec<Vec<i64>> = g[1..].iter().map(|row| row[1..].to_vec()).collect();
        total += matrix_signature(&reduced) - mu;
    }
    total
}
