//! Crossed modules of finite groups: a boundary homomorphism
//! ∂: G₁ → G₀ together with a left G₀-action on G₁ by automorphisms,
//! subject to
//!
//! - CM1: ∂(ˣa) = x·∂(a)·x⁻¹ for all x ∈ G₀, a ∈ G₁;
//! - CM2: ^∂(b)a = b·a·b⁻¹ for all a, b ∈ G₁.
//!
//! Both axioms are verified exhaustively at construction time, so a
//! `CrossedModule` value is a checked witness. The homotopy invariants
//! are π₀ = G₀/Im ∂ (the image is normal by CM1) and π₁ = Ker ∂,
//! which is central in G₁ and carries a π₀-action.

use thiserror::Error;

use crate::group::{AutGroup, FiniteGroup, GroupAction, GroupError, GroupHom, Quotient, Subgroup};

/// Errors raised by crossed-module construction and morphism checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XmodError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("CM1 fails at x={x}, a={a}: boundary of the action differs from conjugation")]
    CM1Violation { x: usize, a: usize },
    #[error("CM2 fails at a={a}, b={b}: action along the boundary differs from conjugation")]
    CM2Violation { a: usize, b: usize },
    #[error("map tables do not match the group orders")]
    ShapeMismatch,
    #[error("boundary square fails at a={a}")]
    SquareFails { a: usize },
    #[error("equivariance fails at x={x}, a={a}")]
    NotEquivariant { x: usize, a: usize },
}

/// A verified crossed module ∂: G₁ → G₀ with G₀-action on G₁.
#[derive(Debug, Clone)]
pub struct CrossedModule {
    pub g1: FiniteGroup,
    pub g0: FiniteGroup,
    /// The boundary ∂ as a verified homomorphism G₁ → G₀.
    pub boundary: GroupHom,
    /// The action of G₀ on G₁ by automorphisms.
    pub action: GroupAction,
}

/// The homotopy invariants of a crossed module.
#[derive(Debug, Clone)]
pub struct Homotopy {
    /// π₀ = G₀ / Im ∂ with its projection.
    pub pi0: Quotient,
    /// π₁ = Ker ∂ as a subgroup of G₁ (always abelian).
    pub pi1: Subgroup,
    /// The induced π₀-action on π₁.
    pub action: GroupAction,
}

/// A verified morphism of crossed modules: component homs commuting
/// with the boundaries and compatible with the actions.
#[derive(Debug, Clone)]
pub struct XmodMorphism {
    pub f1: GroupHom,
    pub f0: GroupHom,
}

impl CrossedModule {
    /// Validates tables into a crossed module. `boundary[a]` is ∂(a);
    /// `action[x][a]` is ˣa.
    pub fn make(
        g1: FiniteGroup,
        g0: FiniteGroup,
        boundary: Vec<usize>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self, XmodError> {
        let boundary = GroupHom::new(g1.clone(), g0.clone(), boundary)?;
        let action = GroupAction::new(g0.clone(), g1.clone(), action)?;
        for x in 0..g0.order {
            for a in 0..g1.order {
                if boundary.apply(action.act(x, a)) != g0.conj(x, boundary.apply(a)) {
                    return Err(XmodError::CM1Violation { x, a });
                }
            }
        }
        for b in 0..g1.order {
            let db = boundary.apply(b);
            for a in 0..g1.order {
                if action.act(db, a) != g1.conj(b, a) {
                    return Err(XmodError::CM2Violation { a, b });
                }
            }
        }
        Ok(CrossedModule { g1, g0, boundary, action })
    }

    /// The automorphism crossed module of a group: conjugation
    /// G → Aut(G) with the evaluation action of Aut(G) on G.
    pub fn aut_xmod(g: &FiniteGroup) -> Result<(Self, AutGroup), XmodError> {
        let aut = g.automorphism_group()?;
        let inner = aut.inner_hom(g)?;
        let action_table: Vec<Vec<usize>> = aut.tables.clone();
        let xm = CrossedModule::make(g.clone(), aut.group.clone(), inner.map.clone(), action_table)?;
        Ok((xm, aut))
    }

    /// The identity crossed module id: G → G with conjugation action.
    pub fn identity_xmod(g: &FiniteGroup) -> Result<Self, XmodError> {
        let boundary: Vec<usize> = (0..g.order).collect();
        let action: Vec<Vec<usize>> = (0..g.order)
            .map(|x| (0..g.order).map(|a| g.conj(x, a)).collect())
            .collect();
        CrossedModule::make(g.clone(), g.clone(), boundary, action)
    }

    /// The trivial-boundary crossed module 1 → G.
    pub fn trivial_boundary(g: &FiniteGroup) -> Result<Self, XmodError> {
        let one = FiniteGroup::trivial();
        CrossedModule::make(one.clone(), g.clone(), vec![g.id], vec![vec![0]; g.order])
    }

    /// ˣa.
    pub fn act(&self, x: usize, a: usize) -> usize {
        self.action.act(x, a)
    }

    /// Sorted Im ∂ ⊆ G₀; normal by CM1.
    pub fn boundary_image(&self) -> Vec<usize> {
        self.boundary.image()
    }

    /// Sorted Ker ∂ ⊆ G₁.
    pub fn pi1_elements(&self) -> Vec<usize> {
        self.boundary.kernel()
    }

    /// Computes π₀, π₁ and the induced π₀-action on π₁.
    ///
    /// Asserts the structural facts this relies on: Im ∂ is normal,
    /// π₁ is central in G₁ (hence abelian), and the induced action is
    /// independent of the chosen coset representative.
    pub fn homotopy(&self) -> Result<Homotopy, XmodError> {
        let image = self.boundary_image();
        let pi0 = self.g0.quotient(&image)?;
        let ker = self.pi1_elements();
        let pi1 = self.g1.subgroup(&ker)?;
        for &a in &ker {
            for b in 0..self.g1.order {
                assert_eq!(
                    self.g1.mul(a, b),
                    self.g1.mul(b, a),
                    "kernel of the boundary must be central in G1"
                );
            }
        }
        // Each coset must act uniformly on π₁, and the action must
        // keep π₁ stable.
        let mut table: Vec<Vec<usize>> = Vec::with_capacity(pi0.group.order);
        for (c, members) in pi0.cosets.iter().enumerate() {
            let rep = pi0.reps[c];
            let mut row = Vec::with_capacity(pi1.group.order);
            for (i, &a) in pi1.elements.iter().enumerate() {
                let image_elt = self.act(rep, a);
                let j = pi1
                    .elements
                    .binary_search(&image_elt)
                    .unwrap_or_else(|_| panic!("action must preserve the kernel (element {i})"));
                for &m in members {
                    assert_eq!(
                        self.act(m, a),
                        image_elt,
                        "induced action must not depend on the coset representative"
                    );
                }
                row.push(j);
            }
            table.push(row);
        }
        let action = GroupAction::new(pi0.group.clone(), pi1.group.clone(), table)?;
        Ok(Homotopy { pi0, pi1, action })
    }

    /// Verifies a pair of maps as a crossed-module morphism.
    pub fn check_morphism(
        &self,
        cod: &CrossedModule,
        f1: Vec<usize>,
        f0: Vec<usize>,
    ) -> Result<XmodMorphism, XmodError> {
        if f1.len() != self.g1.order || f0.len() != self.g0.order {
            return Err(XmodError::ShapeMismatch);
        }
        let f1 = GroupHom::new(self.g1.clone(), cod.g1.clone(), f1)?;
        let f0 = GroupHom::new(self.g0.clone(), cod.g0.clone(), f0)?;
        for a in 0..self.g1.order {
            if f0.apply(self.boundary.apply(a)) != cod.boundary.apply(f1.apply(a)) {
                return Err(XmodError::SquareFails { a });
            }
        }
        for x in 0..self.g0.order {
            for a in 0..self.g1.order {
                if f1.apply(self.act(x, a)) != cod.act(f0.apply(x), f1.apply(a)) {
                    return Err(XmodError::NotEquivariant { x, a });
                }
            }
        }
        Ok(XmodMorphism { f1, f0 })
    }
}
