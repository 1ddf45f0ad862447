//! The monoidal groupoid of a crossed module and its Drinfeld centre,
//! enumerated directly from the categorical definitions (naturality
//! plus the triangle identity for half-braidings). This is the oracle
//! side of the main comparison: it shares no search code with the
//! centre enumeration, only the raw crossed-module tables.

use thiserror::Error;

use crate::centre::{braiding, delta_xmod, Centre, CentreError};
use crate::group::{FiniteGroup, GroupError};
use crate::xmod::{CrossedModule, XmodError};

#[derive(Debug, Error)]
pub enum CatError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Xmod(#[from] XmodError),
    #[error(transparent)]
    Centre(#[from] CentreError),
    #[error("half-braiding enumeration needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("stage {stage} failed: {witness}")]
    CheckFailure { stage: &'static str, witness: String },
}

fn stage_failure(stage: &'static str, witness: String) -> CatError {
    CatError::CheckFailure { stage, witness }
}

pub const DEFAULT_DRINFELD_BUDGET: u128 = 10_000_000;

/// The strict monoidal groupoid of a crossed module: objects are the
/// base elements, an arrow x → ∂(a)·x is labelled by a ∈ G₁, arrows
/// compose by multiplying labels, and the tensor is the base product
/// on objects and (a, b) ↦ a·ˣb on arrows at (x, y).
#[derive(Debug, Clone)]
pub struct MonoidalGroupoid {
    pub objects: usize,
    pub labels: FiniteGroup,
    boundary: Vec<usize>,
    obj_group: FiniteGroup,
    act: Vec<Vec<usize>>,
}

impl MonoidalGroupoid {
    /// Target of the arrow labelled `a` leaving object `x`.
    pub fn target(&self, x: usize, a: usize) -> usize {
        self.obj_group.mul(self.boundary[a], x)
    }

    /// Labels of all arrows x → y (a fiber of the boundary).
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.labels.order)
            .filter(|&a| self.target(x, a) == y)
            .collect()
    }

    /// Composite of a: x → · followed by b out of a's target. Labels
    /// multiply contravariantly; the source argument documents intent.
    pub fn compose(&self, _source: usize, a: usize, b: usize) -> usize {
        self.labels.mul(b, a)
    }

    pub fn tensor_obj(&self, x: usize, y: usize) -> usize {
        self.obj_group.mul(x, y)
    }

    /// Tensor of arrows a (out of x) and b (out of y): a·ˣb.
    pub fn tensor_mor(&self, x: usize, a: usize, _y: usize, b: usize) -> usize {
        self.labels.mul(a, self.act[x][b])
    }

    /// Interchange: (b∘a) ⊗ (d∘c) = (b⊗d) ∘ (a⊗c) for all composable
    /// pairs, checked exhaustively.
    pub fn check_interchange(&self) -> Result<(), CatError> {
        for x in 0..self.objects {
            for y in 0..self.objects {
                for a in 0..self.labels.order {
                    let xa = self.target(x, a);
                    for c in 0..self.labels.order {
                        let yc = self.target(y, c);
                        for b in 0..self.labels.order {
                            for d in 0..self.labels.order {
                                let left = self.tensor_mor(
                                    x,
                                    self.compose(x, a, b),
                                    y,
                                    self.compose(y, c, d),
                                );
                                let right = self.compose(
                                    self.tensor_obj(x, y),
                                    self.tensor_mor(x, a, y, c),
                                    self.tensor_mor(xa, b, yc, d),
                                );
                                if left != right {
                                    return Err(stage_failure(
                                        "interchange",
                                        format!("at objects ({x},{y}), arrows ({a},{b},{c},{d})"),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the groupoid and verifies its homotopy invariants against
/// the crossed module: one connected component per π₀ element, and the
/// automorphisms of the unit object are exactly π₁.
pub fn build_cat(xm: &CrossedModule) -> Result<MonoidalGroupoid, CatError> {
    let cat = MonoidalGroupoid {
        objects: xm.g0.order,
        labels: xm.g1.clone(),
        boundary: xm.boundary.map.clone(),
        obj_group: xm.g0.clone(),
        act: (0..xm.g0.order)
            .map(|x| (0..xm.g1.order).map(|a| xm.act(x, a)).collect())
            .collect(),
    };
    let h = xm.homotopy()?;
    // Components: objects are connected exactly when some arrow joins
    // them; count maximal classes by sweeping.
    let mut component = vec![usize::MAX; cat.objects];
    let mut count = 0;
    for x in 0..cat.objects {
        if component[x] != usize::MAX {
            continue;
        }
        for a in 0..cat.labels.order {
            component[cat.target(x, a)] = count;
        }
        if component[x] == usize::MAX {
            return Err(stage_failure(
                "groupoid components",
                format!("object {x} has no identity arrow"),
            ));
        }
        count += 1;
    }
    if count != h.pi0.group.order {
        return Err(stage_failure(
            "groupoid components",
            format!("{count} components but pi0 has order {}", h.pi0.group.order),
        ));
    }
    let unit_aut = cat.hom(cat.obj_group.id, cat.obj_group.id);
    if unit_aut != xm.pi1_elements() {
        return Err(stage_failure(
            "unit automorphisms",
            format!("hom(1,1) = {unit_aut:?} but pi1 = {:?}", xm.pi1_elements()),
        ));
    }
    Ok(cat)
}

/// An object with a half-braiding: components[y] is an arrow
/// y⊗x → x⊗y, natural in y and compatible with the tensor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfBraiding {
    pub object: usize,
    pub components: Vec<usize>,
}

/// Exhaustively enumerates the objects of the Drinfeld centre of the
/// groupoid: for every object x, every assignment of arrows
/// ξ_y: y⊗x → x⊗y is tried and kept when the naturality square holds
/// for every arrow of the category and the triangle
/// ξ_{y⊗z} = (ξ_y ⊗ 1_z) ∘ (1_y ⊗ ξ_z) holds for every pair.
pub fn drinfeld_objects(
    cat: &MonoidalGroupoid,
    budget: u128,
) -> Result<Vec<HalfBraiding>, CatError> {
    let n = cat.objects;
    // Budget the odometer before running it.
    let mut required: u128 = 0;
    for x in 0..n {
        let mut per_object: u128 = 1;
        let mut possible = true;
        for y in 0..n {
            let fiber = cat.hom(cat.tensor_obj(y, x), cat.tensor_obj(x, y));
            if fiber.is_empty() {
                possible = false;
                break;
            }
            per_object = per_object
                .checked_mul(fiber.len() as u128)
                .unwrap_or(u128::MAX);
        }
        if possible {
            required = required.saturating_add(per_object);
        }
    }
    if required > budget {
        return Err(CatError::BudgetExceeded { required, budget });
    }

    let mut out = Vec::new();
    for x in 0..n {
        let fibers: Vec<Vec<usize>> = (0..n)
            .map(|y| cat.hom(cat.tensor_obj(y, x), cat.tensor_obj(x, y)))
            .collect();
        if fibers.iter().any(|f| f.is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; n];
        'odometer: loop {
            let xi: Vec<usize> = (0..n).map(|y| fibers[y][choice[y]]).collect();
            if half_braiding_valid(cat, x, &xi) {
                out.push(HalfBraiding { object: x, components: xi });
            }
            // Advance, last object fastest.
            let mut i = n;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < fibers[i].len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }
    out.sort();
    Ok(out)
}

fn half_braiding_valid(cat: &MonoidalGroupoid, x: usize, xi: &[usize]) -> bool {
    let n = cat.objects;
    let id = cat.labels.id;
    // Naturality: for every arrow c: y → y', the square
    // ξ_{y'} ∘ (c ⊗ 1_x) = (1_x ⊗ c) ∘ ξ_y commutes.
    for y in 0..n {
        for c in 0..cat.labels.order {
            let y2 = cat.target(y, c);
            let yx = cat.tensor_obj(y, x);
            let left = cat.compose(yx, cat.tensor_mor(y, c, x, id), xi[y2]);
            let right = cat.compose(yx, xi[y], cat.tensor_mor(x, id, y, c));
            if left != right {
                return false;
            }
        }
    }
    // Triangle: ξ_{y⊗z} = (ξ_y ⊗ 1_z) ∘ (1_y ⊗ ξ_z).
    for y in 0..n {
        for z in 0..n {
            let yzx = cat.tensor_obj(cat.tensor_obj(y, z), x);
            let first = cat.tensor_mor(y, id, cat.tensor_obj(z, x), xi[z]);
            let second = cat.tensor_mor(cat.tensor_obj(y, x), xi[y], z, id);
            let composite = cat.compose(yzx, first, second);
            if xi[cat.tensor_obj(y, z)] != composite {
                return false;
            }
        }
    }
    true
}

/// What the four-stage comparison verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub centre_count: usize,
    pub drinfeld_count: usize,
    pub objects: usize,
}

/// Checks the equivalence between the computed centre and the Drinfeld
/// centre of the groupoid, in four stages:
/// (a) (x,ξ) ↦ (x, ξ̄) is a bijection onto the enumerated half-braidings;
/// (b) arrows a: (x,ξ) → (y,η) in the Drinfeld centre exist exactly
///     when (y,η) = δ(a)·(x,ξ);
/// (c) the categorical tensor of half-braidings transports the centre
///     multiplication;
/// (d) the bracket equals the categorical braiding: {P,Q} is the
///     component of P's half-braiding at Q's object, a morphism
///     Q⊗P → P⊗Q in the Drinfeld centre.
pub fn bijection_check(
    xm: &CrossedModule,
    z: &Centre,
    budget: u128,
) -> Result<BijectionReport, CatError> {
    let cat = build_cat(xm)?;
    cat.check_interchange()?;
    let objs = drinfeld_objects(&cat, budget)?;

    // Stage (a): the transport map is a bijection.
    if objs.len() != z.elements.len() {
        return Err(stage_failure(
            "a",
            format!("{} half-braidings but |Z0| = {}", objs.len(), z.elements.len()),
        ));
    }
    let mut matched = vec![usize::MAX; z.elements.len()];
    for (i, e) in z.elements.iter().enumerate() {
        let probe = HalfBraiding { object: e.x, components: e.xi.clone() };
        match objs.binary_search(&probe) {
            Ok(j) => matched[i] = j,
            Err(_) => {
                return Err(stage_failure(
                    "a",
                    format!("centre element {i} is not a half-braiding"),
                ))
            }
        }
    }
    let mut seen = vec![false; objs.len()];
    for &j in &matched {
        if seen[j] {
            return Err(stage_failure("a", format!("half-braiding {j} hit twice")));
        }
        seen[j] = true;
    }

    // Centre-morphism condition on the categorical side:
    // a: (x,ξ) → (y,η) iff a ∈ hom(x,y) and η_w ∘ (1_w ⊗ a) = (a ⊗ 1_w) ∘ ξ_w.
    let is_centre_morphism = |p: &HalfBraiding, q: &HalfBraiding, a: usize| -> bool {
        if cat.target(p.object, a) != q.object {
            return false;
        }
        (0..cat.objects).all(|w| {
            let wx = cat.tensor_obj(w, p.object);
            let left = cat.compose(wx, cat.tensor_mor(w, cat.labels.id, p.object, a), q.components[w]);
            let right = cat.compose(wx, p.components[w], cat.tensor_mor(p.object, a, w, cat.labels.id));
            left == right
        })
    };

    // Stage (b): morphisms correspond to the δ-translation.
    let (delta, delta_xm) = delta_xmod(xm, z)?;
    for i in 0..z.elements.len() {
        for j in 0..z.elements.len() {
            for a in 0..xm.g1.order {
                let cat_side = is_centre_morphism(&objs[matched[i]], &objs[matched[j]], a);
                let alg_side = z.group.mul(delta.apply(a), i) == j;
                if cat_side != alg_side {
                    return Err(stage_failure(
                        "b",
                        format!(
                            "arrow {a} between centre elements {i} and {j}: categorical {cat_side}, algebraic {alg_side}"
                        ),
                    ));
                }
            }
        }
    }

    // Stage (c): tensor transport. The half-braiding of a tensor is
    // ζ_w = (1_x ⊗ η_w) ∘ (ξ_w ⊗ 1_y): w·x·y → x·w·y → x·y·w.
    for i in 0..z.elements.len() {
        for j in 0..z.elements.len() {
            let p = &objs[matched[i]];
            let q = &objs[matched[j]];
            let tensor_obj = cat.tensor_obj(p.object, q.object);
            let components: Vec<usize> = (0..cat.objects)
                .map(|w| {
                    let first = cat.tensor_mor(
                        cat.tensor_obj(w, p.object),
                        p.components[w],
                        q.object,
                        cat.labels.id,
                    );
                    let second = cat.tensor_mor(
                        p.object,
                        cat.labels.id,
                        cat.tensor_obj(w, q.object),
                        q.components[w],
                    );
                    cat.compose(cat.tensor_obj(w, tensor_obj), first, second)
                })
                .collect();
            let product = HalfBraiding { object: tensor_obj, components };
            let k = z.group.mul(i, j);
            if product != objs[matched[k]] {
                return Err(stage_failure(
                    "c",
                    format!("tensor of centre elements {i} and {j} does not transport to their product {k}"),
                ));
            }
        }
    }

    // Stage (d): the bracket is the categorical braiding.
    let br = braiding(z, &delta_xm);
    for i in 0..z.elements.len() {
        for j in 0..z.elements.len() {
            let p = &objs[matched[i]];
            let q = &objs[matched[j]];
            let b = br.bracket[i][j];
            if b != p.components[q.object] {
                return Err(stage_failure(
                    "d",
                    format!("bracket of ({i},{j}) is not P's half-braiding at Q's object"),
                ));
            }
            // It must be an arrow Q⊗P → P⊗Q…
            let src = cat.tensor_obj(q.object, p.object);
            let dst = cat.tensor_obj(p.object, q.object);
            if cat.target(src, b) != dst {
                return Err(stage_failure(
                    "d",
                    format!("bracket of ({i},{j}) is not an arrow QP → PQ"),
                ));
            }
            // …and a morphism in the Drinfeld centre between the two
            // tensor objects.
            let qp = &objs[matched[z.group.mul(j, i)]];
            let pq = &objs[matched[z.group.mul(i, j)]];
            if !is_centre_morphism(qp, pq, b) {
                return Err(stage_failure(
                    "d",
                    format!("bracket of ({i},{j}) is not a centre morphism"),
                ));
            }
        }
    }

    Ok(BijectionReport {
        centre_count: z.elements.len(),
        drinfeld_count: objs.len(),
        objects: cat.objects,
    })
}
