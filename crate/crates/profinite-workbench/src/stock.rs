//! Stock finite groups used by the example towers, the p-group checks, and
//! the test suites. All are built by exhaustive closure from explicit
//! generator permutations.

use crate::group::{FiniteGroup, DEFAULT_CAP};
use crate::perm::Perm;

/// Sym(n) on `n` points.
pub fn symmetric(n: usize) -> FiniteGroup {
    if n <= 1 {
        return FiniteGroup::trivial(n.max(1));
    }
    let transposition = Perm::from_cycles(n, &[&[0, 1]]).expect("valid cycle");
    let cycle: Vec<usize> = (0..n).collect();
    let rotation = Perm::from_cycles(n, &[&cycle]).expect("valid cycle");
    FiniteGroup::closure(&[transposition, rotation], n, DEFAULT_CAP)
        .expect("Sym(n) fits under the default cap for stock sizes")
}

/// Alt(n) on `n` points.
pub fn alternating(n: usize) -> FiniteGroup {
    if n <= 2 {
        return FiniteGroup::trivial(n.max(1));
    }
    let three_cycle = Perm::from_cycles(n, &[&[0, 1, 2]]).expect("valid cycle");
    let gens = if n == 3 {
        vec![three_cycle]
    } else if n % 2 == 1 {
        let cycle: Vec<usize> = (0..n).collect();
        vec![three_cycle, Perm::from_cycles(n, &[&cycle]).expect("valid cycle")]
    } else {
        // An n-cycle is odd for even n; use the (n-1)-cycle fixing point 0.
        let cycle: Vec<usize> = (1..n).collect();
        vec![three_cycle, Perm::from_cycles(n, &[&cycle]).expect("valid cycle")]
    };
    FiniteGroup::closure(&gens, n, DEFAULT_CAP)
        .expect("Alt(n) fits under the default cap for stock sizes")
}

/// The cyclic group of order `n`, acting on `n` points by rotation.
pub fn cyclic(n: usize) -> FiniteGroup {
    if n <= 1 {
        return FiniteGroup::trivial(n.max(1));
    }
    let cycle: Vec<usize> = (0..n).collect();
    let rotation = Perm::from_cycles(n, &[&cycle]).expect("valid cycle");
    FiniteGroup::closure(&[rotation], n, DEFAULT_CAP).expect("cyclic group fits under the cap")
}

/// (ℤ/p)^rank acting on `p·rank` points, one p-cycle per coordinate block.
pub fn elementary_abelian(p: usize, rank: usize) -> FiniteGroup {
    if rank == 0 {
        return FiniteGroup::trivial(1);
    }
    let domain = p * rank;
    let gens: Vec<Perm> = (0..rank)
        .map(|block| {
            let cycle: Vec<usize> = (0..p).map(|i| block * p + i).collect();
            Perm::from_cycles(domain, &[&cycle]).expect("valid cycle")
        })
        .collect();
    FiniteGroup::closure(&gens, domain, DEFAULT_CAP).expect("elementary abelian fits under the cap")
}

/// The dihedral group of the regular n-gon (order 2n) on `n` points.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3, "dihedral group needs at least 3 vertices");
    let cycle: Vec<usize> = (0..n).collect();
    let rotation = Perm::from_cycles(n, &[&cycle]).expect("valid cycle");
    let reflection =
        Perm::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection is a bijection");
    FiniteGroup::closure(&[rotation, reflection], n, DEFAULT_CAP)
        .expect("dihedral group fits under the cap")
}

/// The quaternion group Q₈ in its regular representation on 8 points
/// labelled 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion8() -> FiniteGroup {
    let left_i = Perm::from_images(vec![2, 3, 1, 0, 6, 7, 5, 4]).expect("valid permutation");
    let left_j = Perm::from_images(vec![4, 5, 7, 6, 1, 0, 2, 3]).expect("valid permutation");
    FiniteGroup::closure(&[left_i, left_j], 8, DEFAULT_CAP).expect("Q8 has order 8")
}

/// The Klein four-group on 4 points.
pub fn klein_four() -> FiniteGroup {
    let a = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).expect("valid cycles");
    let b = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).expect("valid cycles");
    FiniteGroup::closure(&[a, b], 4, DEFAULT_CAP).expect("Klein four-group has order 4")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_orders() {
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(3).order(), 3);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(cyclic(9).order(), 9);
        assert_eq!(elementary_abelian(3, 2).order(), 9);
        assert_eq!(elementary_abelian(2, 3).order(), 8);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion8().order(), 8);
        assert_eq!(klein_four().order(), 4);
    }

    #[test]
    fn quaternion_relations() {
        let q8 = quaternion8();
        let i = q8.generators()[0].clone();
        let j = q8.generators()[1].clone();
        let i2 = i.compose(&i);
        let j2 = j.compose(&j);
        assert_eq!(i2, j2);
        assert!(!i2.is_identity());
        assert!(i2.compose(&i2).is_identity());
        // j⁻¹ i j = i⁻¹
        assert_eq!(j.inverse().compose(&i).compose(&j), i.inverse());
    }

    #[test]
    fn klein_four_has_exponent_two() {
        let k = klein_four();
        assert!(k.elements().iter().all(|e| e.compose(e).is_identity()));
    }
}
