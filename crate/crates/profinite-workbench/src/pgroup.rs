//! Frattini subgroups of finite p-groups, computed along two independent
//! routes (the power-commutator formula and the maximal-subgroup
//! intersection), plus the non-generator and commutator-containment checks.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// Default bound on the group order for brute-force subgroup enumeration.
pub const SUBGROUP_ENUM_CAP: usize = 512;

/// Outcome of prime detection on a group order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeDetection {
    Prime(u64),
    /// The trivial group: a p-group for every p, with no designated prime.
    NoPrime,
}

/// Returns the prime `p` when `|U| = pᵏ` with `k ≥ 1`, `NoPrime` for the
/// trivial group, and an error otherwise.
pub fn detect_prime(group: &FiniteGroup) -> Result<PrimeDetection> {
    let order = group.order() as u64;
    if order == 1 {
        return Ok(PrimeDetection::NoPrime);
    }
    let mut p = 2;
    while p * p <= order {
        if order % p == 0 {
            let mut rest = order;
            while rest % p == 0 {
                rest /= p;
            }
            return if rest == 1 {
                Ok(PrimeDetection::Prime(p))
            } else {
                Err(Error::NotPGroup(order))
            };
        }
        p += 1;
    }
    // Order is prime.
    Ok(PrimeDetection::Prime(order))
}

/// Frattini subgroup of a p-group via `Φ(U) = Uᵖ[U,U]`.
pub fn frattini_pgroup(group: &FiniteGroup) -> Result<FiniteGroup> {
    let p = match detect_prime(group)? {
        PrimeDetection::NoPrime => return Ok(FiniteGroup::trivial(group.domain_size())),
        PrimeDetection::Prime(p) => p,
    };
    let powers = group.power_subgroup(p)?;
    let derived = group.commutator_subgroup();
    let mut gens: Vec<Perm> = powers.elements().to_vec();
    gens.extend(derived.elements().iter().cloned());
    group.subgroup_generated(&gens)
}

/// Every subgroup of `group`, enumerated by closing the set of cyclic
/// subgroups under pairwise joins. Sorted canonically by element list.
pub fn all_subgroups(group: &FiniteGroup, cap: usize) -> Result<Vec<FiniteGroup>> {
    if group.order() > cap {
        return Err(Error::CapExceeded {
            cap,
            reached: group.order(),
        });
    }
    // Subgroups represented as sorted element-index vectors.
    let index_set = |sub: &FiniteGroup| -> Vec<usize> {
        sub.elements()
            .iter()
            .map(|e| group.index_of(e).expect("subgroup element lies in the group"))
            .collect()
    };
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(vec![group.identity_index()]);
    let mut frontier: Vec<Vec<usize>> = Vec::new();
    for e in group.elements() {
        let cyclic = group.subgroup_generated(std::slice::from_ref(e))?;
        let ix = index_set(&cyclic);
        if seen.insert(ix.clone()) {
            frontier.push(ix);
        }
    }
    let mut all: Vec<Vec<usize>> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut new_subs: Vec<Vec<usize>> = Vec::new();
        for a in &frontier {
            for b in &all {
                if a == b {
                    continue;
                }
                let mut gens: Vec<Perm> =
                    a.iter().map(|&i| group.element(i).clone()).collect();
                gens.extend(b.iter().map(|&i| group.element(i).clone()));
                let join = group.subgroup_generated(&gens)?;
                let ix = index_set(&join);
                if seen.insert(ix.clone()) {
                    new_subs.push(ix);
                }
            }
        }
        all = seen.iter().cloned().collect();
        frontier = new_subs;
    }
    Ok(seen
        .into_iter()
        .map(|ix| {
            let elems: BTreeSet<Perm> = ix.into_iter().map(|i| group.element(i).clone()).collect();
            FiniteGroup::from_closed_elements(group.domain_size(), elems)
        })
        .collect())
}

/// Frattini subgroup by definition: the intersection of all maximal proper
/// subgroups. Serves as the independent oracle for `frattini_pgroup`.
pub fn frattini_bruteforce(group: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    if group.order() == 1 {
        return Ok(FiniteGroup::trivial(group.domain_size()));
    }
    let subgroups = all_subgroups(group, cap)?;
    let proper: Vec<&FiniteGroup> = subgroups
        .iter()
        .filter(|s| s.order() < group.order())
        .collect();
    let maximal: Vec<&FiniteGroup> = proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.order() > s.order() && s.is_subgroup_of(t))
        })
        .cloned()
        .collect();
    let mut intersection: BTreeSet<Perm> = maximal[0].elements().iter().cloned().collect();
    for m in &maximal[1..] {
        intersection.retain(|e| m.contains(e));
    }
    Ok(FiniteGroup::from_closed_elements(
        group.domain_size(),
        intersection,
    ))
}

/// Witness data for one instance of the non-generator property
/// (`HΦ(U) = U` forces `H = U`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NongenCheck {
    pub h_order: usize,
    pub phi_order: usize,
    pub h_phi_order: usize,
    pub h_phi_equals_group: bool,
    pub h_equals_group: bool,
    /// False only on an engine bug: the property is a theorem.
    pub consistent: bool,
}

/// Checks the non-generator property for the pair `(U, H)`: computes the
/// product set `HΦ(U)` and verifies that `HΦ(U) = U` implies `H = U`.
pub fn nongenerator_check(group: &FiniteGroup, h: &FiniteGroup) -> Result<NongenCheck> {
    if !h.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    let phi = frattini_bruteforce(group, SUBGROUP_ENUM_CAP)?;
    let mut product: BTreeSet<Perm> = BTreeSet::new();
    for a in h.elements() {
        for f in phi.elements() {
            product.insert(a.compose(f));
        }
    }
    let h_phi_equals_group = product.len() == group.order();
    let h_equals_group = h.order() == group.order();
    Ok(NongenCheck {
        h_order: h.order(),
        phi_order: phi.order(),
        h_phi_order: product.len(),
        h_phi_equals_group,
        h_equals_group,
        consistent: !h_phi_equals_group || h_equals_group,
    })
}

/// Verifies `{h⁻¹x : x ∈ h^U} ⊆ [U,U]`. Always true for a correct engine;
/// a false return signals a bug.
pub fn commutator_containment_check(group: &FiniteGroup, h: &Perm) -> Result<bool> {
    let class = group.conjugacy_class(h)?;
    let derived = group.commutator_subgroup();
    let h_inv = h.inverse();
    Ok(class.iter().all(|x| derived.contains(&h_inv.compose(x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stock;

    #[test]
    fn detect_prime_outcomes() {
        assert_eq!(
            detect_prime(&stock::quaternion8()).unwrap(),
            PrimeDetection::Prime(2)
        );
        assert_eq!(
            detect_prime(&stock::cyclic(9)).unwrap(),
            PrimeDetection::Prime(3)
        );
        assert!(matches!(
            detect_prime(&stock::symmetric(3)),
            Err(Error::NotPGroup(6))
        ));
        assert_eq!(
            detect_prime(&FiniteGroup::trivial(1)).unwrap(),
            PrimeDetection::NoPrime
        );
    }

    #[test]
    fn frattini_of_cyclic_nine_has_order_three() {
        let c9 = stock::cyclic(9);
        let phi = frattini_pgroup(&c9).unwrap();
        assert_eq!(phi.order(), 3);
        assert_eq!(phi, frattini_bruteforce(&c9, SUBGROUP_ENUM_CAP).unwrap());
    }

    #[test]
    fn frattini_of_elementary_abelian_is_trivial() {
        for (p, rank) in [(2, 2), (3, 2), (2, 3)] {
            let g = stock::elementary_abelian(p, rank);
            assert_eq!(frattini_pgroup(&g).unwrap().order(), 1);
        }
    }

    #[test]
    fn frattini_of_q8_is_center() {
        let q8 = stock::quaternion8();
        let phi = frattini_pgroup(&q8).unwrap();
        assert_eq!(phi.order(), 2);
        let oracle = frattini_bruteforce(&q8, SUBGROUP_ENUM_CAP).unwrap();
        assert_eq!(phi, oracle);
    }

    #[test]
    fn frattini_of_d4_by_both_routes() {
        let d4 = stock::dihedral(4);
        let phi = frattini_pgroup(&d4).unwrap();
        let oracle = frattini_bruteforce(&d4, SUBGROUP_ENUM_CAP).unwrap();
        assert_eq!(phi, oracle);
        assert_eq!(phi.order(), 2);
        // The Frattini subgroup is generated by the square of the rotation.
        let r2 = crate::perm::Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        assert!(phi.contains(&r2));
    }

    #[test]
    fn frattini_of_prime_cyclic_is_trivial() {
        let c5 = stock::cyclic(5);
        assert_eq!(frattini_bruteforce(&c5, SUBGROUP_ENUM_CAP).unwrap().order(), 1);
    }

    #[test]
    fn frattini_rejects_non_p_groups() {
        assert!(matches!(
            frattini_pgroup(&stock::symmetric(3)),
            Err(Error::NotPGroup(6))
        ));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&stock::quaternion8(), 512).unwrap().len(), 6);
        assert_eq!(all_subgroups(&stock::dihedral(4), 512).unwrap().len(), 10);
        assert_eq!(all_subgroups(&stock::klein_four(), 512).unwrap().len(), 5);
        assert_eq!(all_subgroups(&stock::cyclic(9), 512).unwrap().len(), 3);
    }

    #[test]
    fn subgroup_enum_respects_cap() {
        assert!(matches!(
            all_subgroups(&stock::symmetric(5), 64),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn nongenerator_property_on_q8() {
        let q8 = stock::quaternion8();
        let full = nongenerator_check(&q8, &q8).unwrap();
        assert!(full.consistent);
        assert!(full.h_phi_equals_group && full.h_equals_group);

        // H = ⟨i⟩ of order 4 absorbs Φ = {±1}: HΦ = H ≠ U, vacuously consistent.
        let i = q8.generators()[0].clone();
        let h = q8.subgroup_generated(&[i]).unwrap();
        let check = nongenerator_check(&q8, &h).unwrap();
        assert!(check.consistent);
        assert_eq!(check.h_phi_order, 4);
        assert!(!check.h_phi_equals_group);
    }

    #[test]
    fn nongenerator_exhaustive_on_d4() {
        let d4 = stock::dihedral(4);
        for h in all_subgroups(&d4, 512).unwrap() {
            let check = nongenerator_check(&d4, &h).unwrap();
            assert!(check.consistent, "subgroup of order {} failed", h.order());
        }
    }

    #[test]
    fn commutator_containment_universal() {
        for g in [stock::symmetric(3), stock::quaternion8()] {
            for h in g.elements() {
                assert!(commutator_containment_check(&g, h).unwrap());
            }
        }
        let g = stock::symmetric(3);
        assert!(commutator_containment_check(&g, g.identity()).unwrap());
    }
}
