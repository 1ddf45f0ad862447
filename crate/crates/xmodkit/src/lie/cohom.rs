//! Cohomology of a Lie algebra with coefficients in a
//! finite-dimensional module, in degrees zero, one and two: invariant
//! vectors, derivations modulo inner ones, and classes of alternating
//! 2-cocycles. Representatives are chosen deterministically and every
//! class can be located in the chosen coordinates exactly.

use super::algebra::LieAlgebra;
use super::mat::{
    coords_in_span, extend_basis, kzeros, nullspace, vec_add, vec_is_zero, vec_scale, vec_sub,
    KVec,
};
use super::scalar::{Field, K};
use super::{internal, LieError};

#[derive(Debug, Clone)]
pub struct LieModule {
    pub algebra: LieAlgebra,
    pub dim: usize,
    /// Entry [i][a] holds algebra basis i acting on module basis a.
    pub action: Vec<Vec<KVec>>,
}

impl LieModule {
    /// Validates shapes and the module law: bracketed elements act as
    /// the commutator of operators.
    pub fn new(
        algebra: &LieAlgebra,
        dim: usize,
        action: Vec<Vec<KVec>>,
    ) -> Result<Self, LieError> {
        let n = algebra.dim;
        if action.len() != n
            || action
                .iter()
                .any(|p| p.len() != dim || p.iter().any(|v| v.len() != dim))
        {
            return Err(LieError::Shape(format!(
                "module action must be a {n}x{dim}x{dim} tensor"
            )));
        }
        let m = LieModule {
            algebra: algebra.clone(),
            dim,
            action,
        };
        for i in 0..n {
            for j in 0..n {
                for a in 0..dim {
                    let ea = m.basis_vec(a);
                    let lhs = m.act(&algebra.sc[i][j], &ea);
                    let ij = m.act(&algebra.basis_vec(i), &m.action[j][a]);
                    let ji = m.act(&algebra.basis_vec(j), &m.action[i][a]);
                    if lhs != vec_sub(&ij, &ji) {
                        return Err(super::axiom(
                            "action-module",
                            format!("algebra pair ({i}, {j}) on module basis {a}"),
                        ));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn trivial(algebra: &LieAlgebra, dim: usize) -> Self {
        let action = vec![vec![kzeros(algebra.field, dim); dim]; algebra.dim];
        LieModule {
            algebra: algebra.clone(),
            dim,
            action,
        }
    }

    pub fn basis_vec(&self, a: usize) -> KVec {
        let mut v = kzeros(self.algebra.field, self.dim);
        v[a] = self.algebra.field.one();
        v
    }

    /// Action of an arbitrary algebra vector on an arbitrary module
    /// vector.
    pub fn act(&self, x: &[K], v: &[K]) -> KVec {
        let mut out = kzeros(self.algebra.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (a, va) in v.iter().enumerate() {
                if va.is_zero() {
                    continue;
                }
                out = vec_add(&out, &vec_scale(&xi.mul(va), &self.action[i][a]));
            }
        }
        out
    }
}

#[derive(Debug)]
pub struct LieCohomology {
    pub degree: usize,
    pub dim: usize,
    /// Chosen cocycle representatives in cochain coordinates: degree
    /// zero uses module coordinates, degree one uses algebra-major
    /// rows, degree two uses ordered-pair-major rows.
    pub representatives: Vec<KVec>,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    field: Field,
    vars: usize,
    cocycle_rows: Vec<KVec>,
    coboundary_basis: Vec<KVec>,
}

/// Index of the ordered pair (s, t) with s < t among all such pairs
/// over n elements, pairs sorted lexicographically.
pub fn pair_index(n: usize, s: usize, t: usize) -> usize {
    debug_assert!(s < t && t < n);
    // Pairs with first coordinate < s, then the offset inside block s.
    s * n - s * (s + 1) / 2 + (t - s - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Cohomology of `m` in the given degree, which must be at most two.
pub fn lie_cohomology(m: &LieModule, degree: usize) -> Result<LieCohomology, LieError> {
    let field = m.algebra.field;
    field.validate()?;
    let n = m.algebra.dim;
    let md = m.dim;
    let (vars, cocycle_rows, coboundary_basis) = match degree {
        0 => {
            // Invariants: every basis action vanishes.
            let mut rows = Vec::new();
            for i in 0..n {
                for c in 0..md {
                    let mut row = kzeros(field, md);
                    for a in 0..md {
                        row[a] = m.action[i][a][c].clone();
                    }
                    rows.push(row);
                }
            }
            (md, rows, Vec::new())
        }
        1 => {
            let vars = n * md;
            let mut rows = Vec::new();
            for s in 0..n {
                for t in s + 1..n {
                    for c in 0..md {
                        let mut row = kzeros(field, vars);
                        for a in 0..md {
                            row[t * md + a] = row[t * md + a].add(&m.action[s][a][c]);
                            row[s * md + a] = row[s * md + a].sub(&m.action[t][a][c]);
                        }
                        for r in 0..n {
                            row[r * md + c] = row[r * md + c].sub(&m.algebra.sc[s][t][r]);
                        }
                        rows.push(row);
                    }
                }
            }
            // Inner derivations: x maps to x acting on a fixed module
            // vector.
            let mut inner = Vec::new();
            for a in 0..md {
                let mut v = kzeros(field, vars);
                for i in 0..n {
                    for c in 0..md {
                        v[i * md + c] = m.action[i][a][c].clone();
                    }
                }
                inner.push(v);
            }
            (vars, rows, inner)
        }
        2 => {
            let np = pair_count(n);
            let vars = np * md;
            // Alternating evaluation: adds coeff times the (r, w) slot
            // of a pair-major row.
            let add_slot = |row: &mut KVec, r: usize, w: usize, c: usize, coeff: &K| {
                if r == w || coeff.is_zero() {
                    return;
                }
                if r < w {
                    let idx = pair_index(n, r, w) * md + c;
                    row[idx] = row[idx].add(coeff);
                } else {
                    let idx = pair_index(n, w, r) * md + c;
                    row[idx] = row[idx].sub(coeff);
                }
            };
            let mut rows = Vec::new();
            for x in 0..n {
                for y in x + 1..n {
                    for z in y + 1..n {
                        for c in 0..md {
                            let mut row = kzeros(field, vars);
                            // Action terms: x on (y,z) slot, minus y on
                            // (x,z), plus z on (x,y), traced on c.
                            for cc in 0..md {
                                add_slot(&mut row, y, z, cc, &m.action[x][cc][c]);
                                add_slot(&mut row, x, z, cc, &m.action[y][cc][c].neg());
                                add_slot(&mut row, x, y, cc, &m.action[z][cc][c]);
                            }
                            // Bracket terms.
                            for r in 0..n {
                                add_slot(&mut row, r, z, c, &m.algebra.sc[x][y][r].neg());
                                add_slot(&mut row, r, y, c, &m.algebra.sc[x][z][r]);
                                add_slot(&mut row, r, x, c, &m.algebra.sc[y][z][r].neg());
                            }
                            rows.push(row);
                        }
                    }
                }
            }
            // Coboundaries of all basis one-cochains, evaluated
            // numerically.
            let mut inner = Vec::new();
            for i in 0..n {
                for a in 0..md {
                    let mut v = kzeros(field, vars);
                    for s in 0..n {
                        for t in s + 1..n {
                            // phi sends basis i to module basis a.
                            let phi = |r: usize| -> KVec {
                                if r == i {
                                    m.basis_vec(a)
                                } else {
                                    kzeros(field, md)
                                }
                            };
                            let mut val = m.act(&m.algebra.basis_vec(s), &phi(t));
                            val = vec_sub(&val, &m.act(&m.algebra.basis_vec(t), &phi(s)));
                            let mut br = kzeros(field, md);
                            for r in 0..n {
                                if !m.algebra.sc[s][t][r].is_zero() {
                                    br = vec_add(&br, &vec_scale(&m.algebra.sc[s][t][r], &phi(r)));
                                }
                            }
                            val = vec_sub(&val, &br);
                            let base = pair_index(n, s, t) * md;
                            for (c, entry) in val.iter().enumerate() {
                                v[base + c] = entry.clone();
                            }
                        }
                    }
                    inner.push(v);
                }
            }
            (vars, rows, inner)
        }
        _ => {
            return Err(LieError::Shape(format!(
                "cohomology degree {degree} is out of range; supported degrees are 0, 1 and 2"
            )))
        }
    };

    let z_basis = nullspace(field, &cocycle_rows, vars);
    // Coboundaries must be cocycles.
    for b in &coboundary_basis {
        for row in &cocycle_rows {
            let mut dot = field.zero();
            for (x, y) in row.iter().zip(b) {
                if !x.is_zero() && !y.is_zero() {
                    dot = dot.add(&x.mul(y));
                }
            }
            if !dot.is_zero() {
                return Err(internal("a coboundary fails the cocycle equations"));
            }
        }
    }
    let b_independent = extend_basis(field, &[], &coboundary_basis, vars);
    let representatives = extend_basis(field, &b_independent, &z_basis, vars);
    let cocycle_dim = z_basis.len();
    let coboundary_dim = b_independent.len();
    Ok(LieCohomology {
        degree,
        dim: representatives.len(),
        representatives,
        cocycle_dim,
        coboundary_dim,
        field,
        vars,
        cocycle_rows,
        coboundary_basis: b_independent,
    })
}

impl LieCohomology {
    /// Coordinates of the class of `v` against the chosen
    /// representatives; None when `v` is not a cocycle.
    pub fn class_coords(&self, v: &[K]) -> Option<KVec> {
        if v.len() != self.vars {
            return None;
        }
        for row in &self.cocycle_rows {
            let mut dot = self.field.zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    dot = dot.add(&x.mul(y));
                }
            }
            if !dot.is_zero() {
                return None;
            }
        }
        let mut basis = self.coboundary_basis.clone();
        basis.extend(self.representatives.iter().cloned());
        let coords = coords_in_span(self.field, &basis, v)
            .expect("every cocycle decomposes over coboundaries and representatives");
        Some(coords[self.coboundary_basis.len()..].to_vec())
    }

    pub fn is_zero_class(&self, v: &[K]) -> Option<bool> {
        self.class_coords(v).map(|c| vec_is_zero(&c))
    }
}
