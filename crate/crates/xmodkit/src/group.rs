//! Exact finite-group arithmetic on dense Cayley tables.
//!
//! Groups are stored as element indices `0..order` with a full
//! multiplication table, an inverse table and a distinguished identity
//! index. All constructors validate the group axioms exhaustively, so a
//! `FiniteGroup` value is a proof that the table is a group. Everything
//! here is desk-scale by design: searches (automorphisms, isomorphisms)
//! are guarded at order 64.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Hard ceiling for generator-image searches (automorphisms,
/// isomorphism testing). Tables stay exact and exhaustive below it.
pub const SEARCH_ORDER_BOUND: usize = 64;

/// Errors raised by group construction and search operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not square or has out-of-range entries")]
    BadShape,
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("supplied generators do not generate the group")]
    GensDontGenerate,
    #[error("search budget exceeded (order {0} > {SEARCH_ORDER_BOUND})")]
    SearchBudgetExceeded(usize),
    #[error("subset is not a subgroup (not closed at ({0}, {1}))")]
    NotClosed(usize, usize),
    #[error("subgroup is not normal: conjugate of {1} by {0} escapes")]
    NotNormal(usize, usize),
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotAHom(usize, usize),
    #[error("map does not preserve the identity")]
    IdentityNotPreserved,
    #[error("action of {0} is not an automorphism of the target")]
    NotAnAutomorphism(usize),
    #[error("action is not a left action at ({0}, {1})")]
    NotAnAction(usize, usize),
    #[error("unsupported group construction: {0}")]
    UnsupportedSpec(String),
}

/// A finite group on dense indices `0..order` with full lookup tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub order: usize,
    /// Identity index. Constructed groups always place it at 0.
    pub id: usize,
    /// Ordered generating set; empty exactly for the trivial group.
    pub gens: Vec<usize>,
    /// Optional human-readable element names.
    pub labels: Option<Vec<String>>,
    /// Optional group name for reports.
    pub name: Option<String>,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup(order={}, name={:?}, gens={:?})",
            self.order, self.name, self.gens
        )
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and wraps it as a group.
    ///
    /// If `gens` is absent, a greedy generating sequence is computed:
    /// repeatedly adjoin the smallest index outside the current closure.
    pub fn from_cayley(table: Vec<Vec<usize>>, gens: Option<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::BadShape);
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&v| v >= order) {
                return Err(GroupError::BadShape);
            }
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let mul_at = |a: usize, b: usize| flat[a * order + b];

        let id = (0..order)
            .find(|&e| (0..order).all(|a| mul_at(e, a) == a && mul_at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            inv[a] = (0..order)
                .find(|&b| mul_at(a, b) == id && mul_at(b, a) == id)
                .ok_or(GroupError::NoInverse(a))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul_at(mul_at(a, b), c) != mul_at(a, mul_at(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }

        let mut g = FiniteGroup {
            order,
            id,
            gens: Vec::new(),
            labels: None,
            name: None,
            mul: flat,
            inv,
        };
        match gens {
            Some(gs) => {
                if gs.iter().any(|&x| x >= order) {
                    return Err(GroupError::BadShape);
                }
                if g.generated_subgroup(&gs).len() != order {
                    return Err(GroupError::GensDontGenerate);
                }
                g.gens = gs;
            }
            None => g.gens = g.greedy_gens(),
        }
        Ok(g)
    }

    fn greedy_gens(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closure = self.generated_subgroup(&gens);
        while closure.len() < self.order {
            let next = (0..self.order)
                .find(|i| closure.binary_search(i).is_err())
                .expect("closure is proper, so some index is missing");
            gens.push(next);
            closure = self.generated_subgroup(&gens);
        }
        gens
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Human-readable name of element `i` (index as fallback).
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// x y x⁻¹ y⁻¹.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    /// x y x⁻¹.
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inv(x))
    }

    pub fn pow(&self, a: usize, n: i64) -> usize {
        let mut base = if n >= 0 { a } else { self.inv(a) };
        let mut k = n.unsigned_abs();
        let mut acc = self.id;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.id {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with everything, sorted ascending.
    pub fn centre_elements(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|a| self.mul(z, a) == self.mul(a, z)))
            .collect()
    }

    /// Sorted closure of `seed` under multiplication (identity included).
    pub fn generated_subgroup(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[self.id] = true;
        let mut stack: Vec<usize> = vec![self.id];
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                stack.push(s);
            }
        }
        while let Some(a) = stack.pop() {
            for &s in seed {
                let p = self.mul(a, s);
                if !in_set[p] {
                    in_set[p] = true;
                    stack.push(p);
                }
                let q = self.mul(s, a);
                if !in_set[q] {
                    in_set[q] = true;
                    stack.push(q);
                }
            }
        }
        (0..self.order).filter(|&i| in_set[i]).collect()
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for x in 0..self.order {
            for y in 0..self.order {
                comms.push(self.commutator(x, y));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated_subgroup(&comms)
    }

    /// Length of the lower central series until it stabilises at the
    /// trivial subgroup; `None` if the group is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let mut gamma: Vec<usize> = (0..self.order).collect();
        let mut class = 0;
        loop {
            if gamma == [self.id] {
                return Some(class);
            }
            let mut comms = Vec::new();
            for x in 0..self.order {
                for &y in &gamma {
                    comms.push(self.commutator(x, y));
                }
            }
            comms.sort_unstable();
            comms.dedup();
            let next = self.generated_subgroup(&comms);
            if next == gamma {
                return None;
            }
            gamma = next;
            class += 1;
        }
    }

    /// Checks `sub` (a sorted subgroup element list) for normality;
    /// returns the conjugation witness `(g, n)` on failure.
    pub fn is_normal(&self, sub: &[usize]) -> Result<(), (usize, usize)> {
        for g in 0..self.order {
            for &n in sub {
                if sub.binary_search(&self.conj(g, n)).is_err() {
                    return Err((g, n));
                }
            }
        }
        Ok(())
    }

    /// Realises a sorted, closed subset as a group of its own, paired
    /// with the inclusion (new index → parent index).
    pub fn subgroup(&self, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let elems = elements.to_vec();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut table = vec![vec![0; elems.len()]; elems.len()];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = self.mul(a, b);
                match pos.get(&p) {
                    Some(&k) => table[i][j] = k,
                    None => return Err(GroupError::NotClosed(a, b)),
                }
            }
        }
        let mut group = FiniteGroup::from_cayley(table, None)?;
        if let Some(labels) = &self.labels {
            group = group.with_labels(elems.iter().map(|&e| labels[e].clone()).collect());
        }
        Ok(Subgroup { group, elements: elems })
    }

    /// Quotient by a normal subgroup, with the projection hom.
    /// Cosets are ordered by their minimal element; the identity coset
    /// comes first because it contains the identity of a constructed
    /// group (index 0).
    pub fn quotient(&self, normal: &[usize]) -> Result<Quotient, GroupError> {
        let nsorted = {
            let mut v = normal.to_vec();
            v.sort_unstable();
            v
        };
        // Closure check by way of subgroup construction.
        self.subgroup(&nsorted)?;
        if let Err((g, n)) = self.is_normal(&nsorted) {
            return Err(GroupError::NotNormal(g, n));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<usize> = Vec::new();
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.order {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = nsorted.iter().map(|&n| self.mul(a, n)).collect();
            coset.sort_unstable();
            let idx = reps.len();
            for &c in &coset {
                coset_of[c] = idx;
            }
            reps.push(coset[0]);
            cosets.push(coset);
        }
        // Identity coset first: swap it into position 0 if needed.
        let id_coset = coset_of[self.id];
        if id_coset != 0 {
            reps.swap(0, id_coset);
            cosets.swap(0, id_coset);
            for c in coset_of.iter_mut() {
                if *c == 0 {
                    *c = id_coset;
                } else if *c == id_coset {
                    *c = 0;
                }
            }
        }
        let k = reps.len();
        let mut table = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                table[i][j] = coset_of[self.mul(reps[i], reps[j])];
            }
        }
        let group = FiniteGroup::from_cayley(table, None)?;
        let projection = GroupHom::new(self.clone(), group.clone(), coset_of.clone())?;
        Ok(Quotient { group, projection, reps, cosets })
    }

    /// All automorphisms, found by backtracking over generator images
    /// constrained by element order, each candidate extended along the
    /// generators and then fully verified.
    pub fn automorphism_group(&self) -> Result<AutGroup, GroupError> {
        if self.order > SEARCH_ORDER_BOUND {
            return Err(GroupError::SearchBudgetExceeded(self.order));
        }
        let gens = &self.gens;
        let orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..self.order).filter(|&h| orders[h] == orders[g]).collect())
            .collect();
        let mut tables: Vec<Vec<usize>> = Vec::new();
        let mut images = vec![0; gens.len()];
        collect_hom_tables(self, self, &candidates, 0, &mut images, &mut |t| {
            if is_bijective(t) {
                tables.push(t.to_vec());
            }
        });
        tables.sort_unstable();
        tables.dedup();
        let index: HashMap<&[usize], usize> =
            tables.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let k = tables.len();
        let mut table = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                let composed: Vec<usize> = (0..self.order).map(|a| tables[i][tables[j][a]]).collect();
                table[i][j] = *index
                    .get(composed.as_slice())
                    .expect("composition of automorphisms is an automorphism");
            }
        }
        let group = FiniteGroup::from_cayley(table, None)?;
        debug_assert_eq!(group.id, 0, "the identity table is lexicographically least");
        Ok(AutGroup { group, tables })
    }

    /// Searches for an isomorphism onto `other`; `None` is exhaustive.
    pub fn iso_test(&self, other: &FiniteGroup) -> Result<Option<GroupHom>, GroupError> {
        if self.order > SEARCH_ORDER_BOUND || other.order > SEARCH_ORDER_BOUND {
            return Err(GroupError::SearchBudgetExceeded(self.order.max(other.order)));
        }
        if self.order != other.order {
            return Ok(None);
        }
        let mut prof_a: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        let orders_b: Vec<usize> = (0..other.order).map(|b| other.element_order(b)).collect();
        let mut prof_b = orders_b.clone();
        prof_a.sort_unstable();
        prof_b.sort_unstable();
        if prof_a != prof_b {
            return Ok(None);
        }
        let candidates: Vec<Vec<usize>> = self
            .gens
            .iter()
            .map(|&g| {
                let og = self.element_order(g);
                (0..other.order).filter(|&h| orders_b[h] == og).collect()
            })
            .collect();
        let mut found: Option<Vec<usize>> = None;
        let mut images = vec![0; self.gens.len()];
        collect_hom_tables(self, other, &candidates, 0, &mut images, &mut |t| {
            if found.is_none() && is_bijective(t) {
                found = Some(t.to_vec());
            }
        });
        match found {
            Some(map) => Ok(Some(GroupHom::new(self.clone(), other.clone(), map)?)),
            None => Ok(None),
        }
    }

    /// Invariant-factor style decomposition of an abelian group:
    /// a list of `(generator, order)` with orders descending, the first
    /// generator of maximal order, realizing the group as a direct
    /// product of the cyclic subgroups they generate.
    pub fn cyclic_decomposition(&self) -> Vec<(usize, usize)> {
        assert!(self.is_abelian(), "cyclic decomposition needs an abelian group");
        if self.order == 1 {
            return Vec::new();
        }
        let exponent = (0..self.order).map(|a| self.element_order(a)).max().unwrap();
        let g = (0..self.order).find(|&a| self.element_order(a) == exponent).unwrap();
        let sub = self.generated_subgroup(&[g]);
        let quo = self.quotient(&sub).expect("abelian subgroups are normal");
        let mut dec = vec![(g, exponent)];
        for (qgen, q) in quo.group.cyclic_decomposition() {
            // Lift a quotient generator of order q to an element of
            // order q: h^q lands in ⟨g⟩ as g^s with q | s, and
            // h·g^(-s/q) projects to the same class with order q.
            let h = (0..self.order).find(|&a| quo.projection.map[a] == qgen).unwrap();
            let hq = self.pow(h, q as i64);
            let s = (0..exponent).find(|&s| self.pow(g, s as i64) == hq).unwrap();
            assert_eq!(s % q, 0, "maximal-order generator admits corrected lifts");
            let lifted = self.mul(h, self.pow(g, -((s / q) as i64)));
            debug_assert_eq!(self.element_order(lifted), q);
            debug_assert_eq!(quo.projection.map[lifted], qgen);
            dec.push((lifted, q));
        }
        dec
    }

    /// Abelian groups get a canonical name from the decomposition;
    /// small nonabelian groups are matched against a catalog.
    pub fn identify(&self) -> Option<String> {
        if self.is_abelian() {
            if self.order == 1 {
                return Some("C1".to_string());
            }
            let parts: Vec<String> = self
                .cyclic_decomposition()
                .iter()
                .map(|&(_, n)| format!("C{n}"))
                .collect();
            return Some(parts.join(" x "));
        }
        let mut catalog: Vec<(String, FiniteGroup)> = Vec::new();
        if self.order % 2 == 0 {
            catalog.push((format!("D{}", self.order / 2), FiniteGroup::dihedral(self.order / 2)));
        }
        if self.order == 8 {
            catalog.push(("Q8".to_string(), FiniteGroup::quaternion8()));
        }
        // Products C_m x (dihedral | quaternion) cover the small
        // nonabelian groups this toolkit reports on.
        let mut m = 2;
        while m * 4 <= self.order {
            if self.order % m == 0 {
                let rest = self.order / m;
                if rest % 2 == 0 {
                    catalog.push((
                        format!("C{m} x D{}", rest / 2),
                        FiniteGroup::direct_product(&FiniteGroup::cyclic(m), &FiniteGroup::dihedral(rest / 2)),
                    ));
                }
                if rest == 8 {
                    catalog.push((
                        format!("C{m} x Q8"),
                        FiniteGroup::direct_product(&FiniteGroup::cyclic(m), &FiniteGroup::quaternion8()),
                    ));
                }
            }
            m += 1;
        }
        for (name, h) in catalog {
            if let Ok(Some(_)) = self.iso_test(&h) {
                return Some(name);
            }
        }
        None
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_cayley(vec![vec![0]], None)
            .expect("the one-element table is a group")
            .with_labels(vec!["1".to_string()])
            .with_name("C1")
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let gens = if n == 1 { Some(vec![]) } else { Some(vec![1]) };
        FiniteGroup::from_cayley(table, gens)
            .expect("cyclic table is a group")
            .with_labels(labels)
            .with_name(format!("C{n}"))
    }

    /// Dihedral group of order 2n: indices `i` = aⁱ and `n+i` = aⁱb,
    /// with relations aⁿ = b² = 1 and b a b = a⁻¹.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let order = 2 * n;
        let idx = |rot: usize, flip: usize| flip * n + rot.rem_euclid(n);
        let mut table = vec![vec![0; order]; order];
        for i in 0..n {
            for j in 0..n {
                table[idx(i, 0)][idx(j, 0)] = idx((i + j) % n, 0);
                table[idx(i, 0)][idx(j, 1)] = idx((i + j) % n, 1);
                table[idx(i, 1)][idx(j, 0)] = idx((n + i - j) % n, 1);
                table[idx(i, 1)][idx(j, 1)] = idx((n + i - j) % n, 0);
            }
        }
        let rot_label = |i: usize| match i {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        };
        let labels: Vec<String> = (0..order)
            .map(|k| {
                let (i, f) = (k % n, k / n);
                let s = format!("{}{}", rot_label(i), if f == 1 { "b" } else { "" });
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s
                }
            })
            .collect();
        let gens = if n == 1 { Some(vec![1]) } else { Some(vec![1, n]) };
        FiniteGroup::from_cayley(table, gens)
            .expect("dihedral table is a group")
            .with_labels(labels)
            .with_name(format!("D{n}"))
    }

    /// Quaternion group: indices `i + 4j` = xⁱyʲ with x⁴ = 1, x² = y²,
    /// y x y⁻¹ = x⁻¹.
    pub fn quaternion8() -> Self {
        let idx = |i: usize, j: usize| (i % 4) + 4 * (j % 2);
        let mut table = vec![vec![0; 8]; 8];
        for i in 0..4 {
            for j in 0..2 {
                for k in 0..4 {
                    for l in 0..2 {
                        let cell = if j == 0 {
                            idx(i + k, l)
                        } else if l == 0 {
                            idx(4 + i - k, 1)
                        } else {
                            idx(4 + i - k + 2, 0)
                        };
                        table[idx(i, j)][idx(k, l)] = cell;
                    }
                }
            }
        }
        let labels = ["1", "x", "x2", "x3", "y", "xy", "x2y", "x3y"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_cayley(table, Some(vec![1, 4]))
            .expect("quaternion table is a group")
            .with_labels(labels)
            .with_name("Q8")
    }

    /// Direct product with index `g·|H| + h` and componentwise tables.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let order = g.order * h.order;
        let idx = |a: usize, b: usize| a * h.order + b;
        let mut table = vec![vec![0; order]; order];
        for a in 0..g.order {
            for b in 0..h.order {
                for c in 0..g.order {
                    for d in 0..h.order {
                        table[idx(a, b)][idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
                    }
                }
            }
        }
        let mut gens: Vec<usize> = g.gens.iter().map(|&a| idx(a, h.id)).collect();
        gens.extend(h.gens.iter().map(|&b| idx(g.id, b)));
        let labels: Vec<String> = (0..order)
            .map(|k| format!("({},{})", g.label(k / h.order), h.label(k % h.order)))
            .collect();
        let name = format!(
            "{} x {}",
            g.name.clone().unwrap_or_else(|| "?".into()),
            h.name.clone().unwrap_or_else(|| "?".into())
        );
        FiniteGroup::from_cayley(table, Some(gens))
            .expect("product of group tables is a group")
            .with_labels(labels)
            .with_name(name)
    }

    /// Builds a named construction.
    pub fn construct_named(spec: &GroupConstruction) -> Result<Self, GroupError> {
        match spec {
            GroupConstruction::Cyclic(n) => {
                if *n < 1 {
                    return Err(GroupError::UnsupportedSpec("cyclic n must be >= 1".into()));
                }
                Ok(FiniteGroup::cyclic(*n))
            }
            GroupConstruction::Dihedral(n) => {
                if *n < 1 {
                    return Err(GroupError::UnsupportedSpec("dihedral n must be >= 1".into()));
                }
                Ok(FiniteGroup::dihedral(*n))
            }
            GroupConstruction::Quaternion8 => Ok(FiniteGroup::quaternion8()),
            GroupConstruction::DirectProduct(a, b) => {
                let g = FiniteGroup::construct_named(a)?;
                let h = FiniteGroup::construct_named(b)?;
                Ok(FiniteGroup::direct_product(&g, &h))
            }
        }
    }
}

/// Named small-group constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupConstruction {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    DirectProduct(Box<GroupConstruction>, Box<GroupConstruction>),
}

/// A subgroup realised as a group with its inclusion.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// `elements[i]` is the parent index of subgroup element `i`.
    pub elements: Vec<usize>,
}

/// A quotient group with its projection hom and coset data.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
    /// Minimal-element representative of each coset.
    pub reps: Vec<usize>,
    /// Full sorted member list of each coset.
    pub cosets: Vec<Vec<usize>>,
}

/// The automorphism group of a group, with concrete permutation tables.
#[derive(Debug, Clone)]
pub struct AutGroup {
    pub group: FiniteGroup,
    /// `tables[i][a]` is the image of `a` under automorphism `i`;
    /// composition in `group` matches composition of tables.
    pub tables: Vec<Vec<usize>>,
}

impl AutGroup {
    pub fn index_of(&self, table: &[usize]) -> Option<usize> {
        self.tables.iter().position(|t| t == table)
    }

    /// The inner-automorphism hom g ↦ conjugation by g.
    pub fn inner_hom(&self, g: &FiniteGroup) -> Result<GroupHom, GroupError> {
        let map: Vec<usize> = (0..g.order)
            .map(|x| {
                let conj_table: Vec<usize> = (0..g.order).map(|a| g.conj(x, a)).collect();
                self.index_of(&conj_table)
                    .expect("conjugation is an automorphism")
            })
            .collect();
        GroupHom::new(g.clone(), self.group.clone(), map)
    }
}

/// A verified homomorphism between two finite groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub dom: FiniteGroup,
    pub cod: FiniteGroup,
    pub map: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: FiniteGroup, cod: FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != dom.order || map.iter().any(|&v| v >= cod.order) {
            return Err(GroupError::BadShape);
        }
        if map[dom.id] != cod.id {
            return Err(GroupError::IdentityNotPreserved);
        }
        for a in 0..dom.order {
            for b in 0..dom.order {
                if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
                    return Err(GroupError::NotAHom(a, b));
                }
            }
        }
        Ok(GroupHom { dom, cod, map })
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Sorted kernel element list.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.dom.order).filter(|&a| self.map[a] == self.cod.id).collect()
    }

    /// Sorted image element list.
    pub fn image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_injective(&self) -> bool {
        self.kernel() == [self.dom.id]
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.cod.order
    }
}

/// A verified left action of `actor` on `target` by automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub actor: FiniteGroup,
    pub target: FiniteGroup,
    act: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(actor: FiniteGroup, target: FiniteGroup, act: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if act.len() != actor.order || act.iter().any(|row| row.len() != target.order) {
            return Err(GroupError::BadShape);
        }
        for (x, row) in act.iter().enumerate() {
            if row.iter().any(|&v| v >= target.order) {
                return Err(GroupError::BadShape);
            }
            if !is_bijective(row) {
                return Err(GroupError::NotAnAutomorphism(x));
            }
            for a in 0..target.order {
                for b in 0..target.order {
                    if row[target.mul(a, b)] != target.mul(row[a], row[b]) {
                        return Err(GroupError::NotAnAutomorphism(x));
                    }
                }
            }
        }
        if (0..target.order).any(|a| act[actor.id][a] != a) {
            return Err(GroupError::NotAnAction(actor.id, actor.id));
        }
        for x in 0..actor.order {
            for y in 0..actor.order {
                for a in 0..target.order {
                    if act[actor.mul(x, y)][a] != act[x][act[y][a]] {
                        return Err(GroupError::NotAnAction(x, y));
                    }
                }
            }
        }
        Ok(GroupAction { actor, target, act })
    }

    /// Trivial action: every actor element acts as the identity.
    pub fn trivial(actor: FiniteGroup, target: FiniteGroup) -> Self {
        let row: Vec<usize> = (0..target.order).collect();
        let act = vec![row; actor.order];
        GroupAction::new(actor, target, act).expect("the trivial action is an action")
    }

    /// Conjugation action of a group on itself.
    pub fn conjugation(g: &FiniteGroup) -> Self {
        let act: Vec<Vec<usize>> = (0..g.order)
            .map(|x| (0..g.order).map(|a| g.conj(x, a)).collect())
            .collect();
        GroupAction::new(g.clone(), g.clone(), act).expect("conjugation is an action")
    }

    /// ˣa.
    pub fn act(&self, x: usize, a: usize) -> usize {
        self.act[x][a]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.act[x]
    }
}

/// All crossed homomorphisms ξ: actor → target for the action `act`,
/// i.e. maps with ξ(st) = ξ(s)·ˢξ(t). Candidate values on each
/// generator come from `gen_candidates`; every candidate assignment is
/// extended along a breadth-first spanning tree of the Cayley graph and
/// then verified on all pairs. Returned tables are sorted and unique.
pub fn crossed_homomorphisms(
    actor: &FiniteGroup,
    target: &FiniteGroup,
    act: impl Fn(usize, usize) -> usize,
    gen_candidates: impl Fn(usize) -> Vec<usize>,
) -> Vec<Vec<usize>> {
    let gens = &actor.gens;
    let candidate_lists: Vec<Vec<usize>> = gens.iter().map(|&s| gen_candidates(s)).collect();
    // Spanning tree: order[i] lists (known element u, generator position
    // k) producing the new element u·gens[k].
    let mut seen = vec![false; actor.order];
    seen[actor.id] = true;
    let mut frontier = VecDeque::from([actor.id]);
    let mut tree: Vec<(usize, usize, usize)> = Vec::new(); // (u, gen pos, u·gen)
    while let Some(u) = frontier.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let w = actor.mul(u, s);
            if !seen[w] {
                seen[w] = true;
                tree.push((u, k, w));
                frontier.push_back(w);
            }
        }
    }
    assert!(seen.iter().all(|&b| b), "generators generate the group");

    let mut results: Vec<Vec<usize>> = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    enumerate_assignments(&candidate_lists, 0, &mut assignment, &mut |assigned| {
        let mut xi = vec![usize::MAX; actor.order];
        xi[actor.id] = target.id;
        for &(u, k, w) in &tree {
            // ξ(u·s) = ξ(u)·ᵘξ(s)
            xi[w] = target.mul(xi[u], act(u, assigned[k]));
        }
        // Generators must be consistent with the tree-extended table.
        for (k, &s) in gens.iter().enumerate() {
            if xi[s] != assigned[k] {
                return;
            }
        }
        for s in 0..actor.order {
            for t in 0..actor.order {
                if xi[actor.mul(s, t)] != target.mul(xi[s], act(s, xi[t])) {
                    return;
                }
            }
        }
        results.push(xi);
    });
    results.sort_unstable();
    results.dedup();
    results
}

fn enumerate_assignments(
    lists: &[Vec<usize>],
    pos: usize,
    current: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == lists.len() {
        visit(current);
        return;
    }
    for &v in &lists[pos] {
        current[pos] = v;
        enumerate_assignments(lists, pos + 1, current, visit);
    }
}

/// Extends generator images to a full hom table by breadth-first
/// closure; returns `None` when the images are inconsistent.
fn extend_hom(dom: &FiniteGroup, cod: &FiniteGroup, images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; dom.order];
    map[dom.id] = cod.id;
    let mut frontier = VecDeque::from([dom.id]);
    while let Some(u) = frontier.pop_front() {
        for (k, &s) in dom.gens.iter().enumerate() {
            let w = dom.mul(u, s);
            let img = cod.mul(map[u], images[k]);
            if map[w] == usize::MAX {
                map[w] = img;
                frontier.push_back(w);
            } else if map[w] != img {
                return None;
            }
        }
    }
    for a in 0..dom.order {
        for b in 0..dom.order {
            if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}

fn collect_hom_tables(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    candidates: &[Vec<usize>],
    pos: usize,
    images: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == candidates.len() {
        if let Some(table) = extend_hom(dom, cod, images) {
            visit(&table);
        }
        return;
    }
    for &c in &candidates[pos] {
        images[pos] = c;
        collect_hom_tables(dom, cod, candidates, pos + 1, images, visit);
    }
}

fn is_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    for &v in map {
        if v >= map.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}
