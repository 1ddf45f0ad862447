//! Finite-dimensional Lie algebras presented by structure constants,
//! validated for antisymmetry and the Jacobi identity, plus quotient
//! algebras by an ideal.

use super::mat::{
    coords_in_span, in_span, kzeros, rank, vec_add, vec_is_zero, vec_scale, KVec,
};
use super::scalar::{Field, K};
use super::{internal, LieError};

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    pub field: Field,
    pub dim: usize,
    /// sc[i][j] holds the coordinates of the bracket of basis i with
    /// basis j.
    pub sc: Vec<Vec<KVec>>,
    pub labels: Vec<String>,
}

/// Builds and validates a Lie algebra from integer structure
/// constants.
pub fn make_lie(
    field: Field,
    dim: usize,
    sc: &[Vec<Vec<i64>>],
    labels: &[&str],
) -> Result<LieAlgebra, LieError> {
    if sc.len() != dim || sc.iter().any(|p| p.len() != dim || p.iter().any(|v| v.len() != dim)) {
        return Err(LieError::Shape(format!(
            "structure constants must form a {dim}x{dim}x{dim} tensor"
        )));
    }
    let sck: Vec<Vec<KVec>> = sc
        .iter()
        .map(|plane| {
            plane
                .iter()
                .map(|v| v.iter().map(|&n| field.from_i64(n)).collect())
                .collect()
        })
        .collect();
    let names: Vec<String> = if labels.is_empty() {
        (0..dim).map(|i| format!("e{i}")).collect()
    } else {
        labels.iter().map(|s| s.to_string()).collect()
    };
    LieAlgebra::from_sc_k(field, dim, sck, names)
}

impl LieAlgebra {
    pub fn from_sc_k(
        field: Field,
        dim: usize,
        sc: Vec<Vec<KVec>>,
        labels: Vec<String>,
    ) -> Result<Self, LieError> {
        field.validate()?;
        if sc.len() != dim
            || sc.iter().any(|p| p.len() != dim || p.iter().any(|v| v.len() != dim))
            || labels.len() != dim
        {
            return Err(LieError::Shape(
                "structure constants or labels do not match the dimension".into(),
            ));
        }
        let alg = LieAlgebra { field, dim, sc, labels };
        for i in 0..dim {
            for j in 0..dim {
                let anti = vec_add(&alg.sc[i][j], &alg.sc[j][i]);
                if !vec_is_zero(&anti) {
                    return Err(LieError::NotLie { what: "antisymmetry", i, j, k: 0 });
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut jac = alg.bracket(&alg.basis_vec(i), &alg.sc[j][k]);
                    jac = vec_add(&jac, &alg.bracket(&alg.basis_vec(k), &alg.sc[i][j]));
                    jac = vec_add(&jac, &alg.bracket(&alg.basis_vec(j), &alg.sc[k][i]));
                    if !vec_is_zero(&jac) {
                        return Err(LieError::NotLie { what: "jacobi", i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn basis_vec(&self, i: usize) -> KVec {
        let mut v = kzeros(self.field, self.dim);
        v[i] = self.field.one();
        v
    }

    pub fn zero_vec(&self) -> KVec {
        kzeros(self.field, self.dim)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[K], v: &[K]) -> KVec {
        let mut out = kzeros(self.field, self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let c = u[i].mul(&v[j]);
                out = vec_add(&out, &vec_scale(&c, &self.sc[i][j]));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().all(|p| p.iter().all(|v| vec_is_zero(v)))
    }

    /// Integer structure constants when every entry is integral.
    pub fn sc_as_integers(&self) -> Option<Vec<Vec<Vec<i64>>>> {
        self.sc
            .iter()
            .map(|p| {
                p.iter()
                    .map(|v| v.iter().map(K::as_i64).collect::<Option<Vec<i64>>>())
                    .collect::<Option<Vec<Vec<i64>>>>()
            })
            .collect()
    }

    pub fn abelian(field: Field, dim: usize) -> Self {
        let sc = vec![vec![kzeros(field, dim); dim]; dim];
        let labels = (0..dim).map(|i| format!("e{i}")).collect();
        LieAlgebra::from_sc_k(field, dim, sc, labels).expect("zero bracket is a Lie bracket")
    }

    /// Basis (e, f, h) with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    pub fn sl2(field: Field) -> Self {
        let mut sc = vec![vec![vec![0i64; 3]; 3]; 3];
        sc[2][0][0] = 2;
        sc[0][2][0] = -2;
        sc[2][1][1] = -2;
        sc[1][2][1] = 2;
        sc[0][1][2] = 1;
        sc[1][0][2] = -1;
        make_lie(field, 3, &sc, &["e", "f", "h"]).expect("standard presentation")
    }

    /// Basis (h, n) with [h,n] = 2n: the upper-triangular trace-zero
    /// two-by-two matrices.
    pub fn borel2(field: Field) -> Self {
        let mut sc = vec![vec![vec![0i64; 2]; 2]; 2];
        sc[0][1][1] = 2;
        sc[1][0][1] = -2;
        make_lie(field, 2, &sc, &["h", "n"]).expect("solvable two-dimensional algebra")
    }
}

/// A quotient of a Lie algebra by an ideal, with chosen coset
/// representatives and exact projection.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub algebra: LieAlgebra,
    /// Ideal basis in parent coordinates.
    pub ideal: Vec<KVec>,
    /// Representative vectors in parent coordinates, one per quotient
    /// basis element.
    pub reps: Vec<KVec>,
}

impl QuotientAlgebra {
    /// Quotients `parent` by the span of `ideal_gens`, verifying the
    /// ideal property.
    pub fn new(parent: &LieAlgebra, ideal_gens: &[KVec]) -> Result<Self, LieError> {
        let field = parent.field;
        let n = parent.dim;
        // Canonical ideal basis, then verify [parent, ideal] stays inside.
        let ideal: Vec<KVec> = {
            let pool = ideal_gens.to_vec();
            super::mat::extend_basis(field, &[], &pool, n)
        };
        for i in 0..n {
            for w in &ideal {
                let br = parent.bracket(&parent.basis_vec(i), w);
                if !in_span(field, &ideal, &br) {
                    return Err(internal(format!(
                        "quotient by a non-ideal: bracket of basis {i} leaves the subspace"
                    )));
                }
            }
        }
        let pool: Vec<KVec> = (0..n).map(|i| parent.basis_vec(i)).collect();
        let reps = super::mat::extend_basis(field, &ideal, &pool, n);
        let q = reps.len();
        debug_assert_eq!(q + ideal.len(), rank(field, &pool, n));
        // Quotient structure constants by projecting representative
        // brackets.
        let mut sc = vec![vec![kzeros(field, q); q]; q];
        for a in 0..q {
            for b in 0..q {
                let br = parent.bracket(&reps[a], &reps[b]);
                sc[a][b] = project_onto_reps(&br, &ideal, &reps, field)?;
            }
        }
        let labels = (0..q).map(|i| format!("q{i}")).collect();
        let algebra = LieAlgebra::from_sc_k(field, q, sc, labels)?;
        Ok(QuotientAlgebra { algebra, ideal, reps })
    }

    /// Coordinates of the class of `v` in the quotient basis.
    pub fn project(&self, v: &[K]) -> Result<KVec, LieError> {
        project_onto_reps(v, &self.ideal, &self.reps, self.algebra.field)
    }
}

fn project_onto_reps(
    v: &[K],
    ideal: &[KVec],
    reps: &[KVec],
    field: Field,
) -> Result<KVec, LieError> {
    let mut basis: Vec<KVec> = ideal.to_vec();
    basis.extend(reps.iter().cloned());
    let coords = coords_in_span(field, &basis, v)
        .ok_or_else(|| internal("projection target outside ideal + representatives"))?;
    Ok(coords[ideal.len()..].to_vec())
}
