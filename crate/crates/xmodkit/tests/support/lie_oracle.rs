//! Dimension oracle for the Lie centre: assembles the defining linear
//! conditions in its own variable order (xi block first, then x) over
//! all ordered base pairs, and row-reduces with a naive rational
//! Gauss-Jordan. No code shared with the library's kernel pipeline.

use num::rational::BigRational;
use num::{BigInt, Zero};
use xmodkit::lie::LieCrossedModule;

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn centre_dimension(xm: &LieCrossedModule) -> usize {
    let n0 = xm.l0.dim;
    let n1 = xm.l1.dim;
    let sc0 = xm.l0.sc_as_integers().expect("corpus constants are integral");
    let boundary = xm.boundary_as_integers().expect("corpus boundary is integral");
    let action = xm.action_as_integers().expect("corpus action is integral");

    let vars = n0 * n1 + n0;
    let xi = |i: usize, j: usize| i * n1 + j;
    let xv = |i: usize| n0 * n1 + i;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();

    // xi(boundary(a)) = x . a, coordinatewise.
    for a in 0..n1 {
        for m in 0..n1 {
            let mut row = vec![BigRational::zero(); vars];
            for i in 0..n0 {
                row[xi(i, m)] += rat(boundary[a][i]);
                row[xv(i)] -= rat(action[i][a][m]);
            }
            rows.push(row);
        }
    }
    // boundary(xi(t)) = [x, t], coordinatewise.
    for t in 0..n0 {
        for r in 0..n0 {
            let mut row = vec![BigRational::zero(); vars];
            for j in 0..n1 {
                row[xi(t, j)] += rat(boundary[j][r]);
            }
            for i in 0..n0 {
                row[xv(i)] -= rat(sc0[i][t][r]);
            }
            rows.push(row);
        }
    }
    // xi([s,t]) = s . xi(t) - t . xi(s) over every ordered pair.
    for s in 0..n0 {
        for t in 0..n0 {
            for m in 0..n1 {
                let mut row = vec![BigRational::zero(); vars];
                for r in 0..n0 {
                    row[xi(r, m)] += rat(sc0[s][t][r]);
                }
                for j in 0..n1 {
                    row[xi(t, j)] -= rat(action[s][j][m]);
                    row[xi(s, j)] += rat(action[t][j][m]);
                }
                rows.push(row);
            }
        }
    }

    vars - rank(rows, vars)
}

fn rank(mut rows: Vec<Vec<BigRational>>, vars: usize) -> usize {
    let mut rank = 0;
    for col in 0..vars {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let lead = rows[rank][col].clone();
        for entry in rows[rank].iter_mut() {
            *entry /= lead.clone();
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..vars {
                    let sub = factor.clone() * rows[rank][c].clone();
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}
