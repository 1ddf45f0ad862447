//! The four-term exact sequence of a crossed module of Lie algebras:
//! derivation classes of the base cokernel inject into the centre
//! cokernel, which maps onto part of the stable centre, whose
//! obstruction lands in degree-two cohomology of the base. Every map
//! is built from first principles and each exactness statement is
//! verified, never assumed.

use super::algebra::QuotientAlgebra;
use super::centre::lie_centre;
use super::cohom::{lie_cohomology, pair_count, pair_index, LieModule};
use super::mat::{
    coords_in_span, kzeros, nullspace, rank, same_span, solve_particular, vec_add, vec_is_zero,
    vec_scale, vec_sub, KVec,
};
use super::scalar::K;
use super::xmod::LieCrossedModule;
use super::{internal, LieError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSequenceReport {
    pub h1_dim: usize,
    pub pi0_centre_dim: usize,
    pub stable_dim: usize,
    pub h2_dim: usize,
    pub image_f_dim: usize,
    pub image_omega_dim: usize,
    pub kernel_g_dim: usize,
}

fn check(position: &'static str, witness: impl Into<String>) -> LieError {
    LieError::CheckFailure {
        position,
        witness: witness.into(),
    }
}

/// Builds the centre, both homotopy quotients, the two cohomology
/// groups and the three comparison maps, then verifies injectivity and
/// both exactness statements.
pub fn lie_exact_sequence_check(xm: &LieCrossedModule) -> Result<LieSequenceReport, LieError> {
    let field = xm.field();
    let (n0, n1) = (xm.l0.dim, xm.l1.dim);

    let z = lie_centre(xm)?;
    let pi0z = QuotientAlgebra::new(&z.algebra, &z.delta_matrix)?;
    let pz = pi0z.algebra.dim;

    let pi0l = QuotientAlgebra::new(&xm.l0, &xm.boundary)?;
    let p0 = pi0l.algebra.dim;
    let pi1_vecs = xm.ker_boundary();
    let k1 = pi1_vecs.len();

    // The base cokernel acts on the boundary kernel through chosen
    // representatives; boundary images act trivially there, so the
    // choice does not matter.
    let mut action_pi0 = vec![vec![kzeros(field, k1); k1]; p0];
    for (i, plane) in action_pi0.iter_mut().enumerate() {
        for (a, slot) in plane.iter_mut().enumerate() {
            let moved = xm.act_vec(&pi0l.reps[i], &pi1_vecs[a]);
            *slot = coords_in_span(field, &pi1_vecs, &moved)
                .ok_or_else(|| internal("cokernel action leaves the boundary kernel"))?;
        }
    }
    let module_pi0 = LieModule::new(&pi0l.algebra, k1, action_pi0.clone())?;
    let h1 = lie_cohomology(&module_pi0, 1)?;

    // The full base acts on the boundary kernel for the degree-two
    // group.
    let mut action_l0 = vec![vec![kzeros(field, k1); k1]; n0];
    for (i, plane) in action_l0.iter_mut().enumerate() {
        let ei = xm.l0.basis_vec(i);
        for (a, slot) in plane.iter_mut().enumerate() {
            let moved = xm.act_vec(&ei, &pi1_vecs[a]);
            *slot = coords_in_span(field, &pi1_vecs, &moved)
                .ok_or_else(|| internal("base action leaves the boundary kernel"))?;
        }
    }
    let module_l0 = LieModule::new(&xm.l0, k1, action_l0)?;
    let h2 = lie_cohomology(&module_l0, 2)?;

    // Map one: a derivation class lifts to a centre element with zero
    // base part, then passes to the centre cokernel.
    let mut image_f: Vec<KVec> = Vec::new();
    for phi in &h1.representatives {
        let mut amb = kzeros(field, z.ambient_dim);
        for t in 0..n0 {
            let cls = pi0l.project(&xm.l0.basis_vec(t))?;
            let mut val = kzeros(field, n1);
            for (i, ci) in cls.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                for a in 0..k1 {
                    let coeff = ci.mul(&phi[i * k1 + a]);
                    if !coeff.is_zero() {
                        val = vec_add(&val, &vec_scale(&coeff, &pi1_vecs[a]));
                    }
                }
            }
            for j in 0..n1 {
                amb[n0 + t * n1 + j] = val[j].clone();
            }
        }
        let zc = coords_in_span(field, &z.basis, &amb).ok_or_else(|| {
            check(
                "derivation lift",
                "a lifted derivation class is not a centre element",
            )
        })?;
        image_f.push(pi0z.project(&zc)?);
    }
    let image_f_dim = rank(field, &image_f, pz);
    if image_f_dim != h1.dim {
        return Err(check(
            "injectivity",
            format!(
                "derivation classes of dimension {} map to an image of dimension {}",
                h1.dim, image_f_dim
            ),
        ));
    }

    // Stable centre: cokernel classes that bracket to zero and act
    // trivially on the boundary kernel.
    let mut stable_rows: Vec<KVec> = Vec::new();
    for j in 0..p0 {
        for r in 0..p0 {
            let mut row = kzeros(field, p0);
            for i in 0..p0 {
                row[i] = pi0l.algebra.sc[i][j][r].clone();
            }
            stable_rows.push(row);
        }
    }
    for a in 0..k1 {
        for c in 0..k1 {
            let mut row = kzeros(field, p0);
            for i in 0..p0 {
                row[i] = action_pi0[i][a][c].clone();
            }
            stable_rows.push(row);
        }
    }
    let stable_basis = nullspace(field, &stable_rows, p0);
    let stable_dim = stable_basis.len();

    // Map two: a centre class forgets its map part and lands in the
    // stable centre.
    let mut omega_rows: Vec<KVec> = Vec::new();
    for p in 0..pz {
        let amb = z.ambient_of(&pi0z.reps[p]);
        let projected = pi0l.project(&z.x_part(&amb))?;
        let coords = coords_in_span(field, &stable_basis, &projected).ok_or_else(|| {
            check(
                "stable centre",
                "a centre class projects outside the stable centre",
            )
        })?;
        omega_rows.push(coords);
    }
    let image_omega_dim = rank(field, &omega_rows, stable_dim);

    // Exactness at the centre cokernel.
    let mut ker_omega_rows = Vec::new();
    for r in 0..stable_dim {
        let mut row = kzeros(field, pz);
        for p in 0..pz {
            row[p] = omega_rows[p][r].clone();
        }
        ker_omega_rows.push(row);
    }
    let ker_omega = nullspace(field, &ker_omega_rows, pz);
    if !same_span(field, &image_f, &ker_omega, pz) {
        return Err(check(
            "exactness at the centre cokernel",
            format!(
                "image of dimension {} against kernel of dimension {}",
                image_f_dim,
                ker_omega.len()
            ),
        ));
    }

    // Map three: each stable class obstructs through a section of the
    // boundary.
    let transgress = |x: &[K]| -> Result<KVec, LieError> {
        let (psi, hom_basis) = solve_section(xm, x)?;
        let class = section_class(xm, &pi1_vecs, &h2, &psi)?;
        // The class must not depend on the section.
        for h in &hom_basis {
            let shifted = vec_add(&psi, h);
            let other = section_class(xm, &pi1_vecs, &h2, &shifted)?;
            if other != class {
                return Err(check(
                    "section independence",
                    "two sections give different obstruction classes",
                ));
            }
        }
        Ok(class)
    };
    let mut g_rows: Vec<KVec> = Vec::new();
    for sb in &stable_basis {
        let mut x = kzeros(field, n0);
        for (i, c) in sb.iter().enumerate() {
            if !c.is_zero() {
                x = vec_add(&x, &vec_scale(c, &pi0l.reps[i]));
            }
        }
        g_rows.push(transgress(&x)?);
    }
    // Additivity across fresh sections.
    for p in 0..stable_dim {
        for q in p + 1..stable_dim {
            let mut x = kzeros(field, n0);
            for (i, c) in stable_basis[p].iter().enumerate() {
                if !c.is_zero() {
                    x = vec_add(&x, &vec_scale(c, &pi0l.reps[i]));
                }
            }
            for (i, c) in stable_basis[q].iter().enumerate() {
                if !c.is_zero() {
                    x = vec_add(&x, &vec_scale(c, &pi0l.reps[i]));
                }
            }
            let combined = transgress(&x)?;
            if combined != vec_add(&g_rows[p], &g_rows[q]) {
                return Err(check(
                    "transgression additivity",
                    format!("stable classes {p} and {q}"),
                ));
            }
        }
    }

    let h2_dim = h2.dim;
    let mut ker_g_rows = Vec::new();
    for r in 0..h2_dim {
        let mut row = kzeros(field, stable_dim);
        for (s, g) in g_rows.iter().enumerate() {
            row[s] = g[r].clone();
        }
        ker_g_rows.push(row);
    }
    let kernel_g = nullspace(field, &ker_g_rows, stable_dim);
    let kernel_g_dim = kernel_g.len();
    if !same_span(field, &omega_rows, &kernel_g, stable_dim) {
        return Err(check(
            "exactness at the stable centre",
            format!(
                "image of dimension {} against kernel of dimension {}",
                image_omega_dim, kernel_g_dim
            ),
        ));
    }

    Ok(LieSequenceReport {
        h1_dim: h1.dim,
        pi0_centre_dim: pz,
        stable_dim,
        h2_dim,
        image_f_dim,
        image_omega_dim,
        kernel_g_dim,
    })
}

/// Solves for a linear section psi with psi of a boundary image equal
/// to the action of x, and boundary of psi equal to the bracket with
/// x. Returns a particular solution and a basis of the homogeneous
/// solutions, both in base-major layout.
fn solve_section(
    xm: &LieCrossedModule,
    x: &[K],
) -> Result<(KVec, Vec<KVec>), LieError> {
    let field = xm.field();
    let (n0, n1) = (xm.l0.dim, xm.l1.dim);
    let vars = n0 * n1;
    let mut rows: Vec<KVec> = Vec::new();
    let mut homogeneous: Vec<KVec> = Vec::new();
    // psi(boundary of a) = x acting on a, coordinatewise.
    for a in 0..n1 {
        let rhs = xm.act_vec(x, &xm.l1.basis_vec(a));
        for j in 0..n1 {
            let mut row = kzeros(field, vars + 1);
            for r in 0..n0 {
                row[r * n1 + j] = xm.boundary[a][r].clone();
            }
            row[vars] = rhs[j].clone();
            homogeneous.push(row[..vars].to_vec());
            rows.push(row);
        }
    }
    // boundary of psi(t) = bracket of x with t, coordinatewise.
    for t in 0..n0 {
        let rhs = xm.l0.bracket(x, &xm.l0.basis_vec(t));
        for r0 in 0..n0 {
            let mut row = kzeros(field, vars + 1);
            for j in 0..n1 {
                row[t * n1 + j] = xm.boundary[j][r0].clone();
            }
            row[vars] = rhs[r0].clone();
            homogeneous.push(row[..vars].to_vec());
            rows.push(row);
        }
    }
    let psi = solve_particular(field, &rows, vars).ok_or_else(|| check(
        "transgression section",
        "the section constraints are inconsistent for a stable class",
    ))?;
    let hom_basis = nullspace(field, &homogeneous, vars);
    Ok((psi, hom_basis))
}

/// Obstruction cocycle of a section: the failure of psi to be
/// equivariant, taken as a kernel-valued alternating 2-cochain, then
/// located in cohomology.
fn section_class(
    xm: &LieCrossedModule,
    pi1_vecs: &[KVec],
    h2: &super::cohom::LieCohomology,
    psi: &[K],
) -> Result<KVec, LieError> {
    let field = xm.field();
    let (n0, n1) = (xm.l0.dim, xm.l1.dim);
    let k1 = pi1_vecs.len();
    let vars2 = pair_count(n0) * k1;
    let mut cochain = kzeros(field, vars2);
    for s in 0..n0 {
        for t in s + 1..n0 {
            let psi_t = &psi[t * n1..(t + 1) * n1];
            let psi_s = &psi[s * n1..(s + 1) * n1];
            let mut theta = vec_sub(
                &xm.act_vec(&xm.l0.basis_vec(s), psi_t),
                &xm.act_vec(&xm.l0.basis_vec(t), psi_s),
            );
            let mut br = kzeros(field, n1);
            for r in 0..n0 {
                if !xm.l0.sc[s][t][r].is_zero() {
                    let psi_r = &psi[r * n1..(r + 1) * n1];
                    br = vec_add(&br, &vec_scale(&xm.l0.sc[s][t][r], psi_r));
                }
            }
            theta = vec_sub(&theta, &br);
            if !vec_is_zero(&xm.boundary_vec(&theta)) {
                return Err(check(
                    "transgression values",
                    "an obstruction value escapes the boundary kernel",
                ));
            }
            let coords = coords_in_span(field, pi1_vecs, &theta).ok_or_else(|| {
                check(
                    "transgression values",
                    "an obstruction value cannot be written in the kernel basis",
                )
            })?;
            let base = pair_index(n0, s, t) * k1;
            for (c, entry) in coords.iter().enumerate() {
                cochain[base + c] = entry.clone();
            }
        }
    }
    h2.class_coords(&cochain).ok_or_else(|| {
        check(
            "transgression cocycle",
            "the obstruction cochain fails the cocycle equations",
        )
    })
}
