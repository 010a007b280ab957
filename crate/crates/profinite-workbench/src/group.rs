use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on exhaustive group enumeration (overridable per call,
/// via `--cap`, or via the `WORKBENCH_CAP` environment variable in the CLI).
pub const DEFAULT_CAP: usize = 100_000;

/// An explicitly enumerated finite group of permutations on a fixed domain.
///
/// The element list is duplicate-free and sorted lexicographically on image
/// arrays; this canonical order makes every set-valued result deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    domain_size: usize,
    elements: Vec<Perm>,
    identity_index: usize,
    generator_indices: Vec<usize>,
}

/// Enumerates the closure of `generators` as a BTreeSet (sorted, deduplicated).
fn closure_set(generators: &[Perm], domain_size: usize, cap: usize) -> Result<BTreeSet<Perm>> {
    let mut known: BTreeSet<Perm> = BTreeSet::new();
    known.insert(Perm::identity(domain_size));
    let mut queue: Vec<Perm> = vec![Perm::identity(domain_size)];
    while let Some(current) = queue.pop() {
        for g in generators {
            let next = g.compose(&current);
            if known.insert(next.clone()) {
                if known.len() > cap {
                    return Err(Error::CapExceeded {
                        cap,
                        reached: known.len(),
                    });
                }
                queue.push(next);
            }
        }
    }
    Ok(known)
}

/// Greedy minimal-ish generating set, scanned in canonical element order.
fn greedy_generator_indices(domain_size: usize, elements: &[Perm]) -> Vec<usize> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut known: BTreeSet<Perm> = BTreeSet::new();
    known.insert(Perm::identity(domain_size));
    let mut indices = Vec::new();
    for (i, e) in elements.iter().enumerate() {
        if !known.contains(e) {
            gens.push(e.clone());
            indices.push(i);
            known = closure_set(&gens, domain_size, elements.len())
                .expect("closure of a subset cannot exceed the subset's group");
        }
    }
    indices
}

impl FiniteGroup {
    /// The smallest group containing `generators`, enumerated exhaustively.
    ///
    /// The empty generating set yields the trivial group. Enumeration aborts
    /// with `CapExceeded` as soon as more than `cap` elements are reached.
    pub fn closure(generators: &[Perm], domain_size: usize, cap: usize) -> Result<FiniteGroup> {
        if cap == 0 {
            return Err(Error::InvalidArgument("cap must be at least 1".into()));
        }
        for g in generators {
            if g.degree() != domain_size {
                return Err(Error::BadPerm(format!(
                    "generator acts on {} points, expected {}",
                    g.degree(),
                    domain_size
                )));
            }
        }
        let known = closure_set(generators, domain_size, cap)?;
        let elements: Vec<Perm> = known.into_iter().collect();
        let identity_index = elements
            .binary_search(&Perm::identity(domain_size))
            .expect("closure contains the identity");
        let generator_indices = generators
            .iter()
            .map(|g| elements.binary_search(g).expect("closure contains its generators"))
            .collect();
        Ok(FiniteGroup {
            domain_size,
            elements,
            identity_index,
            generator_indices,
        })
    }

    pub fn trivial(domain_size: usize) -> FiniteGroup {
        FiniteGroup {
            domain_size,
            elements: vec![Perm::identity(domain_size)],
            identity_index: 0,
            generator_indices: vec![],
        }
    }

    /// Builds a group from an explicit element list, verifying every group
    /// invariant exhaustively: identity present, closure under composition
    /// and inverse. Intended for file ingestion.
    pub fn from_elements(domain_size: usize, elements: Vec<Perm>) -> Result<FiniteGroup> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        for e in &set {
            if e.degree() != domain_size {
                return Err(Error::BadPerm(format!(
                    "element acts on {} points, expected {}",
                    e.degree(),
                    domain_size
                )));
            }
        }
        if !set.contains(&Perm::identity(domain_size)) {
            return Err(Error::InvalidArgument(
                "element list does not contain the identity".into(),
            ));
        }
        for a in &set {
            if !set.contains(&a.inverse()) {
                return Err(Error::InvalidArgument(format!(
                    "element list is not closed under inverse: {a} lacks its inverse"
                )));
            }
            for b in &set {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::InvalidArgument(format!(
                        "element list is not closed under composition: {a} * {b} missing"
                    )));
                }
            }
        }
        Ok(Self::from_closed_elements(domain_size, set))
    }

    /// Builds a group from a set already known to be closed (internal use by
    /// operations whose output is a subgroup by construction).
    pub(crate) fn from_closed_elements(domain_size: usize, set: BTreeSet<Perm>) -> FiniteGroup {
        let elements: Vec<Perm> = set.into_iter().collect();
        let identity_index = elements
            .binary_search(&Perm::identity(domain_size))
            .expect("a subgroup contains the identity");
        let generator_indices = greedy_generator_indices(domain_size, &elements);
        FiniteGroup {
            domain_size,
            elements,
            identity_index,
            generator_indices,
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Perm {
        &self.elements[index]
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn identity(&self) -> &Perm {
        &self.elements[self.identity_index]
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn generators(&self) -> Vec<Perm> {
        self.generator_indices
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.domain_size == other.domain_size && self.elements.iter().all(|e| other.contains(e))
    }

    /// The conjugacy class `{aga⁻¹ : a ∈ G}`, as a canonically sorted list.
    ///
    /// Computed as the orbit of `g` under conjugation by the generators,
    /// which enumerates exactly the same set.
    pub fn conjugacy_class(&self, g: &Perm) -> Result<Vec<Perm>> {
        if !self.contains(g) {
            return Err(Error::NotMember);
        }
        let gens = self.generators();
        let mut orbit: BTreeSet<Perm> = BTreeSet::new();
        orbit.insert(g.clone());
        let mut queue = vec![g.clone()];
        while let Some(current) = queue.pop() {
            for a in &gens {
                let conj = current.conjugated_by(a);
                if orbit.insert(conj.clone()) {
                    queue.push(conj);
                }
            }
        }
        Ok(orbit.into_iter().collect())
    }

    /// The centralizer `{a ∈ G : ag = ga}` by exhaustive commutation test.
    pub fn centralizer(&self, g: &Perm) -> Result<FiniteGroup> {
        if !self.contains(g) {
            return Err(Error::NotMember);
        }
        let set: BTreeSet<Perm> = self
            .elements
            .iter()
            .filter(|a| a.compose(g) == g.compose(a))
            .cloned()
            .collect();
        Ok(Self::from_closed_elements(self.domain_size, set))
    }

    /// One representative per conjugacy class, in canonical order of the
    /// least element of each class.
    pub fn class_representatives(&self) -> Vec<Perm> {
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut reps = Vec::new();
        for e in &self.elements {
            if !seen.contains(e) {
                let class = self
                    .conjugacy_class(e)
                    .expect("element of the group is a member");
                reps.push(e.clone());
                seen.extend(class);
            }
        }
        reps
    }

    /// Least `n ≥ 1` with `gⁿ = identity`.
    pub fn element_order(&self, g: &Perm) -> Result<u64> {
        if !self.contains(g) {
            return Err(Error::NotMember);
        }
        Ok(g.order())
    }

    /// The subgroup of `self` generated by `perms` (all must be members).
    pub fn subgroup_generated(&self, perms: &[Perm]) -> Result<FiniteGroup> {
        for p in perms {
            if !self.contains(p) {
                return Err(Error::NotMember);
            }
        }
        // Bounded by |self|, so the cap can never trip here.
        let set = closure_set(perms, self.domain_size, self.order())?;
        Ok(Self::from_closed_elements(self.domain_size, set))
    }

    /// The subgroup generated by all commutators `[a,b] = a⁻¹b⁻¹ab`.
    pub fn commutator_subgroup(&self) -> FiniteGroup {
        let mut commutators: BTreeSet<Perm> = BTreeSet::new();
        for a in &self.elements {
            let a_inv = a.inverse();
            for b in &self.elements {
                let comm = a_inv.compose(&b.inverse()).compose(a).compose(b);
                commutators.insert(comm);
            }
        }
        let gens: Vec<Perm> = commutators.into_iter().collect();
        let set = closure_set(&gens, self.domain_size, self.order())
            .expect("commutator subgroup is bounded by the group order");
        Self::from_closed_elements(self.domain_size, set)
    }

    /// The subgroup generated by `{gᵖ : g ∈ G}` for a prime `p`.
    pub fn power_subgroup(&self, p: u64) -> Result<FiniteGroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let powers: BTreeSet<Perm> = self.elements.iter().map(|g| perm_pow(g, p)).collect();
        let gens: Vec<Perm> = powers.into_iter().collect();
        let set = closure_set(&gens, self.domain_size, self.order())
            .expect("power subgroup is bounded by the group order");
        Ok(Self::from_closed_elements(self.domain_size, set))
    }

    /// Whether `n` is a normal subgroup of `self` (checked exhaustively).
    pub fn check_normal(&self, n: &FiniteGroup) -> Result<()> {
        if n.domain_size != self.domain_size || !n.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        for (i, a) in self.elements.iter().enumerate() {
            for x in n.elements() {
                if !n.contains(&x.conjugated_by(a)) {
                    return Err(Error::NotNormal { by: i });
                }
            }
        }
        Ok(())
    }

    /// The quotient `G/N` as a permutation group acting on the cosets of `N`
    /// (left regular action on the coset list in canonical order), together
    /// with the projection homomorphism.
    pub fn quotient(&self, n: &FiniteGroup) -> Result<(FiniteGroup, crate::hom::GroupHom)> {
        self.check_normal(n)?;
        let order = self.order();
        // Assign coset ids; scanning in canonical order makes the first
        // unassigned element the least representative of its coset.
        let mut coset_of = vec![usize::MAX; order];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..order {
            if coset_of[i] == usize::MAX {
                let id = reps.len();
                reps.push(i);
                for x in n.elements() {
                    let member = self.elements[i].compose(x);
                    let j = self
                        .index_of(&member)
                        .expect("coset member lies in the group");
                    coset_of[j] = id;
                }
            }
        }
        let k = reps.len();
        debug_assert_eq!(k * n.order(), order);
        // Left regular action of each coset on the coset list.
        let mut action_perms: Vec<Perm> = Vec::with_capacity(k);
        for &rep in &reps {
            let images: Vec<usize> = reps
                .iter()
                .map(|&other| {
                    let product = self.elements[rep].compose(&self.elements[other]);
                    coset_of[self.index_of(&product).expect("product lies in the group")]
                })
                .collect();
            action_perms.push(Perm::from_images(images).expect("coset action is a bijection"));
        }
        let quotient =
            Self::from_closed_elements(k, action_perms.iter().cloned().collect::<BTreeSet<_>>());
        if quotient.order() != k {
            return Err(Error::EngineInconsistency(
                "coset action is not faithful".into(),
            ));
        }
        let table: Vec<usize> = (0..order)
            .map(|i| {
                quotient
                    .index_of(&action_perms[coset_of[i]])
                    .expect("every coset action is a quotient element")
            })
            .collect();
        let hom = crate::hom::GroupHom::new(self.clone(), quotient.clone(), table)?;
        Ok((quotient, hom))
    }

    /// The direct product acting on the disjoint union of the two domains.
    pub fn direct_product(&self, other: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        let order = self.order().checked_mul(other.order()).unwrap_or(usize::MAX);
        if order > cap {
            return Err(Error::CapExceeded {
                cap,
                reached: order,
            });
        }
        let domain = self.domain_size + other.domain_size;
        let offset = self.domain_size;
        // Nested iteration in canonical order yields a canonically sorted
        // product list, because the left factor occupies the leading entries.
        let mut elements: Vec<Perm> = Vec::with_capacity(order);
        for g in &self.elements {
            for h in other.elements() {
                let mut images: Vec<usize> = Vec::with_capacity(domain);
                images.extend(g.images().iter().map(|&x| x as usize));
                images.extend(h.images().iter().map(|&x| x as usize + offset));
                elements.push(Perm::from_images(images).expect("product of bijections"));
            }
        }
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let identity_index = elements
            .binary_search(&Perm::identity(domain))
            .expect("product contains the identity");
        let mut generator_indices = Vec::new();
        for g in self.generators() {
            let embedded = embed_pair(&g, &Perm::identity(other.domain_size));
            generator_indices.push(
                elements
                    .binary_search(&embedded)
                    .expect("embedded generator is a product element"),
            );
        }
        for h in other.generators() {
            let embedded = embed_pair(&Perm::identity(self.domain_size), &h);
            generator_indices.push(
                elements
                    .binary_search(&embedded)
                    .expect("embedded generator is a product element"),
            );
        }
        Ok(FiniteGroup {
            domain_size: domain,
            elements,
            identity_index,
            generator_indices,
        })
    }
}

/// The permutation acting as `g` on the first block and `h` on the second.
pub fn embed_pair(g: &Perm, h: &Perm) -> Perm {
    let offset = g.degree();
    let mut images: Vec<usize> = Vec::with_capacity(offset + h.degree());
    images.extend(g.images().iter().map(|&x| x as usize));
    images.extend(h.images().iter().map(|&x| x as usize + offset));
    Perm::from_images(images).expect("blockwise bijection")
}

/// `g` raised to the `e`-th power by binary exponentiation.
pub fn perm_pow(g: &Perm, e: u64) -> Perm {
    let mut result = Perm::identity(g.degree());
    let mut base = g.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = base.compose(&result);
        }
        base = base.compose(&base);
        e >>= 1;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
