//! Norrie's centre of a crossed module and its comparison with the
//! full centre: the inclusion morphism, the induced isomorphism on π₁,
//! the induced monomorphism on π₀, and the weak-equivalence verdict.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::centre::{delta_xmod, Centre, CentreError};
use crate::group::{GroupError, Subgroup};
use crate::xmod::{CrossedModule, XmodError, XmodMorphism};

#[derive(Debug, Error)]
pub enum NorrieError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Xmod(#[from] XmodError),
    #[error(transparent)]
    Centre(#[from] CentreError),
    #[error("{what} failed: {detail}")]
    CheckFailure { what: &'static str, detail: String },
}

fn check_failure(what: &'static str, detail: String) -> NorrieError {
    NorrieError::CheckFailure { what, detail }
}

/// Norrie's centre: the boundary restricted to the fully invariant
/// part of G₁, landing in the elements of G₀ that are both central
/// and act trivially, with the trivial action between them.
#[derive(Debug, Clone)]
pub struct NorrieCentre {
    pub xmod: CrossedModule,
    /// {a ∈ G₁ : ˣa = a for all x}, as a subgroup of G₁.
    pub top: Subgroup,
    /// Z(G₀) ∩ {x : ˣa = a for all a}, as a subgroup of G₀.
    pub bottom: Subgroup,
}

pub fn norrie_centre(xm: &CrossedModule) -> Result<NorrieCentre, NorrieError> {
    let g0 = &xm.g0;
    let g1 = &xm.g1;
    let invariant: Vec<usize> = (0..g1.order)
        .filter(|&a| (0..g0.order).all(|x| xm.act(x, a) == a))
        .collect();
    let top = g1.subgroup(&invariant)?;
    let stabilizing: Vec<usize> = g0
        .centre_elements()
        .into_iter()
        .filter(|&x| (0..g1.order).all(|a| xm.act(x, a) == a))
        .collect();
    let bottom = g0.subgroup(&stabilizing)?;
    let bpos: BTreeMap<usize, usize> =
        bottom.elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let boundary: Vec<usize> = top
        .elements
        .iter()
        .map(|&a| {
            bpos.get(&xm.boundary.apply(a)).copied().ok_or_else(|| {
                check_failure(
                    "norrie boundary",
                    format!("the boundary of invariant element {a} is not central-stabilizing"),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    let action = vec![(0..top.group.order).collect::<Vec<usize>>(); bottom.group.order];
    let xmod = CrossedModule::make(top.group.clone(), bottom.group.clone(), boundary, action)?;
    Ok(NorrieCentre { xmod, top, bottom })
}

/// What the comparison of the two centres found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NorrieReport {
    pub top_order: usize,
    pub bottom_order: usize,
    pub pi0_order: usize,
    pub pi0_centre_order: usize,
    pub pi1_order: usize,
    /// The inclusion is a weak equivalence exactly when the (always
    /// injective) π₀ comparison is also surjective.
    pub weak_equivalence: bool,
}

/// The verified inclusion of Norrie's centre into the centre crossed
/// module δ: G₁ → Z₀, with its effect on homotopy groups.
#[derive(Debug)]
pub struct NorrieComparison {
    pub norrie: NorrieCentre,
    pub morphism: XmodMorphism,
    pub report: NorrieReport,
}

/// Builds j = (j₁, j₀) with j₁ the inclusion into G₁ and j₀(x) = (x, 𝟙),
/// verifies it is a crossed-module morphism Norrie → centre, that it is
/// an isomorphism on π₁ and a monomorphism on π₀, and reports whether it
/// is a weak equivalence.
pub fn norrie_compare(xm: &CrossedModule, z: &Centre) -> Result<NorrieComparison, NorrieError> {
    let norrie = norrie_centre(xm)?;
    let (_, delta_xm) = delta_xmod(xm, z)?;

    let f1 = norrie.top.elements.clone();
    let trivial_map = vec![xm.g1.id; xm.g0.order];
    let f0: Vec<usize> = norrie
        .bottom
        .elements
        .iter()
        .map(|&x| {
            z.find_parts(x, &trivial_map).ok_or_else(|| {
                check_failure(
                    "norrie inclusion",
                    format!("({x}, 1) is not a centre element"),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    let morphism = norrie.xmod.check_morphism(&delta_xm, f1, f0)?;

    // π₁ comparison: j₁ carries Ker(norrie boundary) bijectively onto
    // Ker δ.
    let nor_pi1: Vec<usize> = norrie
        .xmod
        .pi1_elements()
        .into_iter()
        .map(|i| norrie.top.elements[i])
        .collect();
    let centre_pi1 = delta_xm.pi1_elements();
    if nor_pi1 != centre_pi1 {
        return Err(check_failure(
            "pi1 comparison",
            format!("norrie π₁ {nor_pi1:?} differs from centre π₁ {centre_pi1:?}"),
        ));
    }

    // π₀ comparison: the induced map must be well defined and
    // injective; it is a weak equivalence when also surjective.
    let nor_h = norrie.xmod.homotopy()?;
    let cen_h = delta_xm.homotopy()?;
    let mut induced = vec![usize::MAX; nor_h.pi0.group.order];
    for (c, coset) in nor_h.pi0.cosets.iter().enumerate() {
        for &b in coset {
            let img = cen_h.pi0.projection.apply(morphism.f0.apply(b));
            if induced[c] == usize::MAX {
                induced[c] = img;
            } else if induced[c] != img {
                return Err(check_failure(
                    "pi0 comparison",
                    format!("coset {c} maps to both {} and {img}", induced[c]),
                ));
            }
        }
    }
    for c1 in 0..induced.len() {
        for c2 in 0..induced.len() {
            if induced[nor_h.pi0.group.mul(c1, c2)]
                != cen_h.pi0.group.mul(induced[c1], induced[c2])
            {
                return Err(check_failure(
                    "pi0 comparison",
                    format!("not a homomorphism at cosets ({c1},{c2})"),
                ));
            }
        }
    }
    let distinct: std::collections::BTreeSet<usize> = induced.iter().copied().collect();
    if distinct.len() != induced.len() {
        return Err(check_failure(
            "pi0 comparison",
            "the induced map on π₀ is not injective".into(),
        ));
    }

    let report = NorrieReport {
        top_order: norrie.top.group.order,
        bottom_order: norrie.bottom.group.order,
        pi0_order: nor_h.pi0.group.order,
        pi0_centre_order: cen_h.pi0.group.order,
        pi1_order: nor_pi1.len(),
        weak_equivalence: distinct.len() == cen_h.pi0.group.order,
    };
    Ok(NorrieComparison { norrie, morphism, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centre::enumerate_centre;
    use crate::group::FiniteGroup;

    #[test]
    fn norrie_centre_of_automorphism_crossed_module_of_d4() {
        // Invariant elements of D4 under all automorphisms are 1 and
        // the central rotation; no nontrivial automorphism stabilizes
        // everything, so the bottom group is trivial.
        let (xm, _) = CrossedModule::aut_xmod(&FiniteGroup::dihedral(4)).unwrap();
        let n = norrie_centre(&xm).unwrap();
        assert_eq!(n.top.elements, vec![0, 2]);
        assert_eq!(n.bottom.elements, vec![xm.g0.id]);
        // The restricted boundary is trivial: a2 is central, so its
        // inner automorphism is the identity.
        assert!(n.xmod.boundary.map.iter().all(|&v| v == 0));
    }

    #[test]
    fn comparison_is_not_a_weak_equivalence_for_aut_d4() {
        let (xm, _) = CrossedModule::aut_xmod(&FiniteGroup::dihedral(4)).unwrap();
        let z = enumerate_centre(&xm).unwrap();
        let cmp = norrie_compare(&xm, &z).unwrap();
        assert_eq!(cmp.report.pi1_order, 2);
        assert_eq!(cmp.report.pi0_order, 1);
        assert_eq!(cmp.report.pi0_centre_order, 4);
        assert!(!cmp.report.weak_equivalence);
    }

    #[test]
    fn comparison_is_a_weak_equivalence_for_identity_on_c2() {
        let xm = CrossedModule::identity_xmod(&FiniteGroup::cyclic(2)).unwrap();
        let z = enumerate_centre(&xm).unwrap();
        let cmp = norrie_compare(&xm, &z).unwrap();
        assert_eq!(cmp.report.top_order, 2);
        assert_eq!(cmp.report.bottom_order, 2);
        assert!(cmp.report.weak_equivalence);
    }

    #[test]
    fn comparison_on_trivial_top_group_matches_group_centre() {
        // For 1 -> G both centres reduce to Z(G) in degree zero.
        let d4 = FiniteGroup::dihedral(4);
        let xm = CrossedModule::trivial_boundary(&d4).unwrap();
        let z = enumerate_centre(&xm).unwrap();
        let cmp = norrie_compare(&xm, &z).unwrap();
        assert_eq!(cmp.report.bottom_order, d4.centre_elements().len());
        assert_eq!(cmp.report.pi1_order, 1);
        assert!(cmp.report.weak_equivalence);
    }

    #[test]
    fn norrie_centre_respects_crossed_module_axioms() {
        for g in [FiniteGroup::dihedral(3), FiniteGroup::quaternion8()] {
            let (xm, _) = CrossedModule::aut_xmod(&g).unwrap();
            let n = norrie_centre(&xm).unwrap();
            // make() already validated CM1/CM2; sanity-check the shape.
            assert_eq!(n.xmod.g1.order, n.top.group.order);
            assert_eq!(n.xmod.g0.order, n.bottom.group.order);
        }
    }
}
