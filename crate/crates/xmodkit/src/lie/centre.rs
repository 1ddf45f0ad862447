//! The centre of a crossed module of Lie algebras: pairs of a base
//! element x and a linear map xi from the base to the source, cut out
//! by three families of linear equations. The centre carries a Lie
//! bracket, receives a boundary from the source, is braided, and is
//! acted on by the base; every piece of that structure is rebuilt
//! here and verified against the axiom checkers.

use super::algebra::{LieAlgebra, QuotientAlgebra};
use super::mat::{
    coords_in_span, kzeros, nullspace, same_span, vec_add, vec_is_zero, vec_scale, vec_sub, KVec,
};
use super::scalar::K;
use super::xmod::{verify_lie_bcm, LieCrossedModule};
use super::{internal, LieError};

#[derive(Debug, Clone)]
pub struct LieCentre {
    pub xmod: LieCrossedModule,
    /// Ambient coordinates: the base part first, then the map entries
    /// row by row (base index major, source index minor).
    pub ambient_dim: usize,
    /// Canonical kernel basis of the defining equations, in ambient
    /// coordinates.
    pub basis: Vec<KVec>,
    /// The centre as a Lie algebra in basis coordinates.
    pub algebra: LieAlgebra,
    /// Row c holds the boundary of source basis c, in basis
    /// coordinates.
    pub delta_matrix: Vec<KVec>,
    /// Entry [i][p] holds base basis i acting on centre basis p, in
    /// basis coordinates.
    pub action_tensor: Vec<Vec<KVec>>,
    /// Entry [p][q] holds the brace of centre basis p with centre
    /// basis q, in source coordinates.
    pub braiding: Vec<Vec<KVec>>,
}

impl LieCentre {
    /// Base component of an ambient vector.
    pub fn x_part(&self, v: &[K]) -> KVec {
        v[..self.xmod.l0.dim].to_vec()
    }

    /// Applies the map component of an ambient vector to a base
    /// vector, yielding a source vector.
    pub fn xi_apply(&self, v: &[K], w: &[K]) -> KVec {
        let (n0, n1) = (self.xmod.l0.dim, self.xmod.l1.dim);
        let mut out = kzeros(self.xmod.field(), n1);
        for (t, wt) in w.iter().enumerate().take(n0) {
            if wt.is_zero() {
                continue;
            }
            let row = &v[n0 + t * n1..n0 + (t + 1) * n1];
            out = vec_add(&out, &vec_scale(wt, row));
        }
        out
    }

    /// Ambient vector of a linear combination of centre basis
    /// elements.
    pub fn ambient_of(&self, coords: &[K]) -> KVec {
        let mut out = kzeros(self.xmod.field(), self.ambient_dim);
        for (p, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = vec_add(&out, &vec_scale(c, &self.basis[p]));
            }
        }
        out
    }
}

/// Computes the centre and installs its bracket, boundary, braiding
/// and base action, verifying each piece.
pub fn lie_centre(xm: &LieCrossedModule) -> Result<LieCentre, LieError> {
    let field = xm.field();
    let (n0, n1) = (xm.l0.dim, xm.l1.dim);
    let vars = n0 + n0 * n1;
    let xi_at = |t: usize, j: usize| n0 + t * n1 + j;

    let mut rows: Vec<KVec> = Vec::new();
    // Boundary of the map recovers the adjoint bracket: for every base
    // t and coordinate r.
    for t in 0..n0 {
        for r in 0..n0 {
            let mut row = kzeros(field, vars);
            for j in 0..n1 {
                row[xi_at(t, j)] = row[xi_at(t, j)].add(&xm.boundary[j][r]);
            }
            for i in 0..n0 {
                row[i] = row[i].sub(&xm.l0.sc[i][t][r]);
            }
            rows.push(row);
        }
    }
    // The map on boundary images is the action: for every source a and
    // coordinate m.
    for a in 0..n1 {
        for m in 0..n1 {
            let mut row = kzeros(field, vars);
            for i in 0..n0 {
                row[xi_at(i, m)] = row[xi_at(i, m)].add(&xm.boundary[a][i]);
                row[i] = row[i].sub(&xm.action[i][a][m]);
            }
            rows.push(row);
        }
    }
    // The map is a derivation-like cocycle on brackets: for every base
    // pair s < t and coordinate m.
    for s in 0..n0 {
        for t in s + 1..n0 {
            for m in 0..n1 {
                let mut row = kzeros(field, vars);
                for r in 0..n0 {
                    row[xi_at(r, m)] = row[xi_at(r, m)].add(&xm.l0.sc[s][t][r]);
                }
                for j in 0..n1 {
                    row[xi_at(t, j)] = row[xi_at(t, j)].sub(&xm.action[s][j][m]);
                    row[xi_at(s, j)] = row[xi_at(s, j)].add(&xm.action[t][j][m]);
                }
                rows.push(row);
            }
        }
    }

    let basis = nullspace(field, &rows, vars);
    let zdim = basis.len();
    // Re-substitution guard on the elimination.
    for v in &basis {
        for row in &rows {
            let mut dot = field.zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    dot = dot.add(&a.mul(b));
                }
            }
            if !dot.is_zero() {
                return Err(internal("kernel basis fails a defining equation"));
            }
        }
    }

    let centre = LieCentre {
        xmod: xm.clone(),
        ambient_dim: vars,
        basis: basis.clone(),
        algebra: LieAlgebra::abelian(field, 0),
        delta_matrix: Vec::new(),
        action_tensor: Vec::new(),
        braiding: Vec::new(),
    };

    // Bracket of two centre elements in ambient coordinates: base
    // brackets, and the map sends t to minus t acting on the brace.
    let bracket_ambient = |u: &[K], v: &[K]| -> KVec {
        let xu = centre.x_part(u);
        let xv = centre.x_part(v);
        let brace = centre.xi_apply(u, &xv);
        let mut out = kzeros(field, vars);
        let xb = xm.l0.bracket(&xu, &xv);
        out[..n0].clone_from_slice(&xb);
        for t in 0..n0 {
            let minus = xm.act_vec(&xm.l0.basis_vec(t), &brace);
            for j in 0..n1 {
                out[xi_at(t, j)] = minus[j].neg();
            }
        }
        out
    };

    let mut sc_z = vec![vec![kzeros(field, zdim); zdim]; zdim];
    for p in 0..zdim {
        for q in 0..zdim {
            let br = bracket_ambient(&basis[p], &basis[q]);
            sc_z[p][q] = coords_in_span(field, &basis, &br)
                .ok_or_else(|| internal("centre bracket leaves the centre"))?;
        }
    }
    let labels: Vec<String> = (0..zdim).map(|p| format!("z{p}")).collect();
    let algebra = LieAlgebra::from_sc_k(field, zdim, sc_z, labels)
        .map_err(|e| internal(format!("centre bracket is not a Lie bracket: {e}")))?;

    // Boundary from the source: base part is the old boundary, map
    // part sends t to minus t acting on the source element.
    let mut delta_matrix = Vec::with_capacity(n1);
    for c in 0..n1 {
        let mut amb = kzeros(field, vars);
        amb[..n0].clone_from_slice(&xm.boundary[c]);
        let ec = xm.l1.basis_vec(c);
        for t in 0..n0 {
            let minus = xm.act_vec(&xm.l0.basis_vec(t), &ec);
            for j in 0..n1 {
                amb[xi_at(t, j)] = minus[j].neg();
            }
        }
        let coords = coords_in_span(field, &basis, &amb)
            .ok_or_else(|| internal("boundary image leaves the centre"))?;
        delta_matrix.push(coords);
    }
    // The boundary is a Lie algebra map into the centre.
    for c in 0..n1 {
        for d in 0..n1 {
            let mut lhs = kzeros(field, zdim);
            for r in 0..n1 {
                if !xm.l1.sc[c][d][r].is_zero() {
                    lhs = vec_add(&lhs, &vec_scale(&xm.l1.sc[c][d][r], &delta_matrix[r]));
                }
            }
            let rhs = algebra.bracket(&delta_matrix[c], &delta_matrix[d]);
            if lhs != rhs {
                return Err(internal("boundary into the centre is not a homomorphism"));
            }
        }
    }

    // Braiding: the brace of p and q is the map of p applied to the
    // base part of q.
    let mut braiding = vec![vec![kzeros(field, n1); zdim]; zdim];
    for p in 0..zdim {
        for q in 0..zdim {
            braiding[p][q] = centre.xi_apply(&basis[p], &centre.x_part(&basis[q]));
        }
    }
    let bcm = verify_lie_bcm(&xm.l1, &algebra, &delta_matrix, &braiding)
        .map_err(|e| internal(format!("braided structure of the centre fails: {e}")))?;
    if !bcm.pi0_abelian || !bcm.pi1_action_trivial {
        return Err(internal("braided consequences fail on the centre"));
    }

    // The base acts on the centre: z sends (x, xi) to ([z,x], t maps
    // to t acting on xi(z)).
    let act_ambient = |i: usize, v: &[K]| -> KVec {
        let ei = xm.l0.basis_vec(i);
        let xv = centre.x_part(v);
        let hold = centre.xi_apply(v, &ei);
        let mut out = kzeros(field, vars);
        let xb = xm.l0.bracket(&ei, &xv);
        out[..n0].clone_from_slice(&xb);
        for t in 0..n0 {
            let plus = xm.act_vec(&xm.l0.basis_vec(t), &hold);
            for j in 0..n1 {
                out[xi_at(t, j)] = plus[j].clone();
            }
        }
        out
    };
    let mut action_tensor = vec![vec![kzeros(field, zdim); zdim]; n0];
    for (i, plane) in action_tensor.iter_mut().enumerate() {
        for (p, slot) in plane.iter_mut().enumerate() {
            let amb = act_ambient(i, &basis[p]);
            *slot = coords_in_span(field, &basis, &amb)
                .ok_or_else(|| internal("base action leaves the centre"))?;
        }
    }
    // The projection to the base is itself a crossed module for this
    // action.
    let projection_rows: Vec<KVec> = basis.iter().map(|v| centre.x_part(v)).collect();
    LieCrossedModule::make_k(
        algebra.clone(),
        xm.l0.clone(),
        projection_rows,
        action_tensor.clone(),
    )
    .map_err(|e| internal(format!("projection from the centre fails validation: {e}")))?;

    // Triple identity tying the brace to both maps: minus t acting on
    // the brace of p and q equals the difference of maps on moved base
    // parts, and equals t acting on the opposite brace.
    for p in 0..zdim {
        for q in 0..zdim {
            for t in 0..n0 {
                let et = xm.l0.basis_vec(t);
                let neg_act: KVec = xm
                    .act_vec(&et, &braiding[p][q])
                    .iter()
                    .map(K::neg)
                    .collect();
                let mid = vec_sub(
                    &centre.xi_apply(
                        &basis[p],
                        &xm.l0.bracket(&centre.x_part(&basis[q]), &et),
                    ),
                    &centre.xi_apply(
                        &basis[q],
                        &xm.l0.bracket(&centre.x_part(&basis[p]), &et),
                    ),
                );
                let opposite = xm.act_vec(&et, &braiding[q][p]);
                if neg_act != mid || neg_act != opposite {
                    return Err(internal("brace transport identity fails"));
                }
            }
        }
    }

    Ok(LieCentre {
        algebra,
        delta_matrix,
        action_tensor,
        braiding,
        ..centre
    })
}

#[derive(Debug)]
pub struct LieHomotopy {
    /// The centre modulo boundary images.
    pub pi0: LieAlgebra,
    /// Representatives of the quotient basis, in centre coordinates.
    pub pi0_reps: Vec<KVec>,
    /// The kernel of the boundary into the centre, as an abelian
    /// algebra.
    pub pi1: LieAlgebra,
    /// Kernel basis in source coordinates.
    pub pi1_vectors: Vec<KVec>,
}

/// Kernel and cokernel of the boundary into the centre, with the
/// kernel identified against the invariant part of the kernel of the
/// original boundary.
pub fn lie_homotopy(z: &LieCentre) -> Result<LieHomotopy, LieError> {
    let xm = &z.xmod;
    let field = xm.field();
    let (n0, n1) = (xm.l0.dim, xm.l1.dim);
    let zdim = z.algebra.dim;

    // Kernel of the boundary in source coordinates.
    let mut rows = Vec::with_capacity(zdim);
    for r in 0..zdim {
        let mut row = kzeros(field, n1);
        for a in 0..n1 {
            row[a] = z.delta_matrix[a][r].clone();
        }
        rows.push(row);
    }
    let pi1_vectors = nullspace(field, &rows, n1);
    // The kernel is abelian in the source.
    for u in &pi1_vectors {
        for v in &pi1_vectors {
            if !vec_is_zero(&xm.l1.bracket(u, v)) {
                return Err(internal("boundary kernel is not abelian"));
            }
        }
    }
    let pi1 = LieAlgebra::abelian(field, pi1_vectors.len());

    // The same subspace must be the invariant part of the kernel of
    // the original boundary.
    let mut inv_rows = Vec::new();
    for r in 0..n0 {
        let mut row = kzeros(field, n1);
        for a in 0..n1 {
            row[a] = xm.boundary[a][r].clone();
        }
        inv_rows.push(row);
    }
    for i in 0..n0 {
        for m in 0..n1 {
            let mut row = kzeros(field, n1);
            for a in 0..n1 {
                row[a] = xm.action[i][a][m].clone();
            }
            inv_rows.push(row);
        }
    }
    let invariants = nullspace(field, &inv_rows, n1);
    if !same_span(field, &pi1_vectors, &invariants, n1) {
        return Err(internal(
            "boundary kernel differs from the invariant original kernel",
        ));
    }

    // Cokernel: quotient by the boundary image, which the braided
    // structure makes an ideal.
    let quotient = QuotientAlgebra::new(&z.algebra, &z.delta_matrix)?;
    Ok(LieHomotopy {
        pi0: quotient.algebra.clone(),
        pi0_reps: quotient.reps.clone(),
        pi1,
        pi1_vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::scalar::Field;

    #[test]
    fn solvable_pair_centre_bracket_matches_hand_computation() {
        let xm = LieCrossedModule::borel_ideal(Field::Q).unwrap();
        let z = lie_centre(&xm).unwrap();
        assert_eq!(z.algebra.dim, 2);
        assert!(!z.algebra.is_abelian());
        // The boundary image of the source generator lands on the
        // centre element over the nilpotent direction.
        let amb = z.ambient_of(&z.delta_matrix[0]);
        assert!(amb[0].is_zero());
        assert_eq!(amb[1], Field::Q.one());
        assert_eq!(amb[2], Field::Q.from_i64(-2));
        assert!(amb[3].is_zero());
    }

    #[test]
    fn adjoint_centre_of_simple_algebra_is_the_algebra_itself() {
        let s = LieAlgebra::sl2(Field::Q);
        let xm = LieCrossedModule::id_xmod(&s).unwrap();
        let z = lie_centre(&xm).unwrap();
        assert_eq!(z.algebra.dim, 3);
        assert!(!z.algebra.is_abelian());
        let h = lie_homotopy(&z).unwrap();
        assert_eq!(h.pi0.dim, 0);
        assert_eq!(h.pi1.dim, 0);
    }

    #[test]
    fn zero_source_centre_is_the_base_centre_with_empty_braiding() {
        let s = LieAlgebra::sl2(Field::Q);
        let xm = LieCrossedModule::zero_to(&s).unwrap();
        let z = lie_centre(&xm).unwrap();
        assert_eq!(z.algebra.dim, 0);
        let plane = LieAlgebra::abelian(Field::Q, 2);
        let xm2 = LieCrossedModule::zero_to(&plane).unwrap();
        let z2 = lie_centre(&xm2).unwrap();
        assert_eq!(z2.algebra.dim, 2);
        assert!(z2.braiding.iter().all(|row| row.iter().all(|v| v.is_empty())));
    }
}
