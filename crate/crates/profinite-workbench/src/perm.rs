use crate::error::{Error, Result};

/// Index of a point in the finite domain a permutation acts on.
pub type Point = u32;

/// A permutation of `{0, …, d-1}`, stored as its image array:
/// the permutation maps `i` to `images[i]`.
///
/// The derived `Ord` is lexicographic on the image array, which is the
/// canonical element order used everywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<Point>,
}

impl Perm {
    /// The identity on a domain of `degree` points.
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as Point).collect(),
        }
    }

    /// Builds a permutation from its image array, verifying it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &img in &images {
            if img >= d {
                return Err(Error::BadPerm(format!(
                    "image {img} out of range for domain of size {d}"
                )));
            }
            if seen[img] {
                return Err(Error::BadPerm(format!("image {img} appears twice")));
            }
            seen[img] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as Point).collect(),
        })
    }

    /// Builds a permutation on `degree` points from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return Err(Error::BadPerm(format!(
                        "cycle point out of range for domain of size {degree}"
                    )));
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`,
    /// i.e. `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0 as Point; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as Point;
        }
        Perm { images }
    }

    /// The conjugate `a · self · a⁻¹`.
    pub fn conjugated_by(&self, a: &Perm) -> Perm {
        a.compose(self).compose(&a.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as Point == img)
    }

    /// Least `n ≥ 1` with `selfⁿ = identity`.
    pub fn order(&self) -> u64 {
        let mut power = self.clone();
        let mut n = 1;
        while !power.is_identity() {
            power = self.compose(&power);
            n += 1;
        }
        n
    }

    /// Whether the permutation maps the point set `block` onto itself.
    pub fn stabilizes(&self, block: &[usize]) -> bool {
        block.iter().all(|&p| block.contains(&self.apply(p)))
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 2]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
        assert!(Perm::from_images(vec![1, 2, 0]).is_ok());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // r = (0 1 2), s = (0 1); s∘r maps 0 -> r(0)=1 -> s(1)=0.
        let r = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let s = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let sr = s.compose(&r);
        assert_eq!(sr.apply(0), 0);
        assert_eq!(sr.apply(1), 2);
        assert_eq!(sr.apply(2), 1);
    }

    #[test]
    fn inverse_and_order() {
        let r = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(r.compose(&r.inverse()).is_identity());
        assert_eq!(r.order(), 5);
        assert_eq!(Perm::identity(4).order(), 1);
        let t = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(t.order(), 2);
    }

    #[test]
    fn dihedral_relations_hold_in_sym3() {
        // D6 realized on 3 points: r = (0 1 2), s = (0 1).
        let r = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let s = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let id = Perm::identity(3);
        assert_eq!(r.compose(&r).compose(&r), id);
        assert_eq!(s.compose(&s), id);
        assert_eq!(s.compose(&r), r.inverse().compose(&s));
    }
}
