//! Finite prefixes of inverse systems of finite groups with surjective
//! connecting maps, and compatible element threads through them. A tower is
//! the computational stand-in for a second-countable profinite group
//! presented by a normal basis at the identity.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::perm::Perm;

/// Levels `G₀, …, G_n` and connecting maps `πᵢ₊₁ : Gᵢ₊₁ → Gᵢ`
/// (so `maps[i]` goes from `levels[i+1]` to `levels[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    levels: Vec<FiniteGroup>,
    maps: Vec<GroupHom>,
}

/// A compatible element sequence: one entry per level with
/// `πᵢ₊₁(gᵢ₊₁) = gᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    entries: Vec<Perm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerViolation {
    NoLevels,
    MapCount { expected: usize, got: usize },
    SourceMismatch { level: usize },
    TargetMismatch { level: usize },
    HomIdentity { level: usize, detail: String },
    NotSurjective { level: usize },
    UnequalFibers { level: usize },
}

impl fmt::Display for TowerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerViolation::NoLevels => write!(f, "tower has no levels"),
            TowerViolation::MapCount { expected, got } => {
                write!(f, "expected {expected} connecting maps, got {got}")
            }
            TowerViolation::SourceMismatch { level } => write!(
                f,
                "map into level {level} does not have level {} as source",
                level + 1
            ),
            TowerViolation::TargetMismatch { level } => {
                write!(f, "map into level {level} does not have level {level} as target")
            }
            TowerViolation::HomIdentity { level, detail } => {
                write!(f, "map into level {level} is not a homomorphism: {detail}")
            }
            TowerViolation::NotSurjective { level } => {
                write!(f, "map into level {level} is not surjective")
            }
            TowerViolation::UnequalFibers { level } => {
                write!(f, "map into level {level} has fibers of unequal size")
            }
        }
    }
}

/// Everything `validate` found wrong; empty means the tower is valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<TowerViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Tower {
    /// Builds a tower and verifies every invariant; rejects invalid input.
    pub fn new(levels: Vec<FiniteGroup>, maps: Vec<GroupHom>) -> Result<Tower> {
        let tower = Tower::from_parts(levels, maps);
        let report = tower.validate();
        if report.is_valid() {
            Ok(tower)
        } else {
            Err(Error::InvalidTower(report.to_string()))
        }
    }

    /// Builds without validation. Callers are expected to run `validate`;
    /// the file-ingestion path relies on this to report defects precisely.
    pub fn from_parts(levels: Vec<FiniteGroup>, maps: Vec<GroupHom>) -> Tower {
        Tower { levels, maps }
    }

    /// The quotient tower of `ambient` along a decreasing chain of normal
    /// subgroups `N₀ ⊇ N₁ ⊇ …`: levels are `G/Nᵢ` with the natural
    /// connecting maps. Also returns the projections `G → G/Nᵢ`, from which
    /// any ambient element yields a thread.
    pub fn from_quotient_chain(
        ambient: &FiniteGroup,
        normals: &[FiniteGroup],
    ) -> Result<(Tower, Vec<GroupHom>)> {
        if normals.is_empty() {
            return Err(Error::InvalidArgument("empty normal chain".into()));
        }
        for window in normals.windows(2) {
            if !window[1].is_subgroup_of(&window[0]) {
                return Err(Error::InvalidArgument(
                    "normal chain is not decreasing".into(),
                ));
            }
        }
        let mut levels = Vec::with_capacity(normals.len());
        let mut projections = Vec::with_capacity(normals.len());
        for n in normals {
            let (quotient, projection) = ambient.quotient(n)?;
            levels.push(quotient);
            projections.push(projection);
        }
        let mut maps = Vec::with_capacity(normals.len() - 1);
        for i in 0..normals.len() - 1 {
            let source = &levels[i + 1];
            let target = &levels[i];
            let table: Vec<usize> = (0..source.order())
                .map(|j| {
                    // Any preimage works: N_{i+1} ⊆ N_i makes this well defined.
                    let preimage_index = projections[i + 1]
                        .table()
                        .iter()
                        .position(|&t| t == j)
                        .expect("projection is surjective");
                    projections[i].apply_index(preimage_index)
                })
                .collect();
            maps.push(GroupHom::new(source.clone(), target.clone(), table)?);
        }
        Ok((Tower::new(levels, maps)?, projections))
    }

    /// Checks every tower invariant exhaustively; violations are report
    /// content, not errors.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.levels.is_empty() {
            violations.push(TowerViolation::NoLevels);
            return ValidationReport { violations };
        }
        if self.maps.len() + 1 != self.levels.len() {
            violations.push(TowerViolation::MapCount {
                expected: self.levels.len() - 1,
                got: self.maps.len(),
            });
            return ValidationReport { violations };
        }
        for (i, map) in self.maps.iter().enumerate() {
            if map.source() != &self.levels[i + 1] {
                violations.push(TowerViolation::SourceMismatch { level: i });
                continue;
            }
            if map.target() != &self.levels[i] {
                violations.push(TowerViolation::TargetMismatch { level: i });
                continue;
            }
            let hom_violations = map.violations(3);
            if !hom_violations.is_empty() {
                violations.push(TowerViolation::HomIdentity {
                    level: i,
                    detail: hom_violations.join("; "),
                });
                continue;
            }
            if !map.is_surjective() {
                violations.push(TowerViolation::NotSurjective { level: i });
                continue;
            }
            let expected_fiber = map.source().order() / map.target().order();
            let mut counts = vec![0usize; map.target().order()];
            for &t in map.table() {
                counts[t] += 1;
            }
            if counts.iter().any(|&c| c != expected_fiber) {
                violations.push(TowerViolation::UnequalFibers { level: i });
            }
        }
        ValidationReport { violations }
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn top(&self) -> &FiniteGroup {
        self.levels.last().expect("tower has at least one level")
    }

    /// The preimage set `{h ∈ G_{level+1} : π(h) = g}`.
    pub fn fiber(&self, level: usize, g: &Perm) -> Result<Vec<Perm>> {
        if level + 1 >= self.levels.len() {
            return Err(Error::BadLevel { level });
        }
        if !self.levels[level].contains(g) {
            return Err(Error::NotMember);
        }
        self.maps[level].fiber(g)
    }

    /// Orders of the kernels of the composite maps `G_n → G_i` for
    /// `i = n, n-1, …, 0`. Starts at 1 and is non-decreasing.
    pub fn kernel_chain(&self) -> Vec<usize> {
        let top = self.levels.len() - 1;
        let mut chain = Vec::with_capacity(self.levels.len());
        // composite[j] = index in level `level` of the image of top element j.
        let mut composite: Vec<usize> = (0..self.levels[top].order()).collect();
        let mut level = top;
        loop {
            let identity = self.levels[level].identity_index();
            chain.push(composite.iter().filter(|&&t| t == identity).count());
            if level == 0 {
                break;
            }
            let table = self.maps[level - 1].table();
            for entry in composite.iter_mut() {
                *entry = table[*entry];
            }
            level -= 1;
        }
        chain
    }

    /// The unique thread generated by pushing a top-level element down.
    pub fn thread_from_top(&self, g: &Perm) -> Result<Thread> {
        let top = self.levels.len() - 1;
        if !self.levels[top].contains(g) {
            return Err(Error::NotMember);
        }
        let mut entries = vec![g.clone()];
        let mut current = g.clone();
        for level in (0..top).rev() {
            current = self.maps[level].apply(&current)?;
            entries.push(current.clone());
        }
        entries.reverse();
        Ok(Thread { entries })
    }

    /// True iff `πᵢ₊₁(gᵢ₊₁) = gᵢ` holds at every level (membership of every
    /// entry in its level included).
    pub fn thread_validate(&self, thread: &Thread) -> Result<bool> {
        if thread.entries.len() != self.levels.len() {
            return Err(Error::LengthMismatch {
                expected: self.levels.len(),
                got: thread.entries.len(),
            });
        }
        for (i, entry) in thread.entries.iter().enumerate() {
            if !self.levels[i].contains(entry) {
                return Ok(false);
            }
        }
        for (i, map) in self.maps.iter().enumerate() {
            let pushed = map.apply(&thread.entries[i + 1])?;
            if pushed != thread.entries[i] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Thread {
    pub fn new(entries: Vec<Perm>) -> Thread {
        Thread { entries }
    }

    pub fn entries(&self) -> &[Perm] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stock;

    /// Quotient-chain tower of Sym(4): levels of order 2, 6, 24.
    fn sym4_tower() -> Tower {
        let g = stock::symmetric(4);
        let a4 = stock::alternating(4);
        let v4 = a4.commutator_subgroup(); // Klein group inside Alt(4)
        let trivial = FiniteGroup::trivial(4);
        let (tower, _) = Tower::from_quotient_chain(&g, &[a4, v4, trivial]).unwrap();
        tower
    }

    #[test]
    fn single_level_tower_is_valid() {
        let t = Tower::new(vec![stock::symmetric(3)], vec![]).unwrap();
        assert!(t.validate().is_valid());
        assert_eq!(t.kernel_chain(), vec![1]);
    }

    #[test]
    fn quotient_chain_tower_is_valid() {
        let t = sym4_tower();
        assert!(t.validate().is_valid());
        assert_eq!(
            t.levels().iter().map(|l| l.order()).collect::<Vec<_>>(),
            vec![2, 6, 24]
        );
        assert_eq!(t.kernel_chain(), vec![1, 4, 12]);
    }

    #[test]
    fn constant_tower_has_all_one_kernels() {
        let c5 = stock::cyclic(5);
        let trivial = FiniteGroup::trivial(5);
        let (t, _) =
            Tower::from_quotient_chain(&c5, &[trivial.clone(), trivial.clone(), trivial]).unwrap();
        assert_eq!(t.kernel_chain(), vec![1, 1, 1]);
        // Isomorphism levels have singleton fibers.
        let g = t.levels()[0].elements()[2].clone();
        assert_eq!(t.fiber(0, &g).unwrap().len(), 1);
    }

    #[test]
    fn planted_defect_is_reported_with_level() {
        let t = sym4_tower();
        let good = &t.maps()[0];
        let mut bad_table = good.table().to_vec();
        // Send a non-identity element to the identity, inconsistently.
        let src_identity = good.source().identity_index();
        let tgt_identity = good.target().identity_index();
        let culprit = (0..bad_table.len())
            .find(|&i| i != src_identity && bad_table[i] != tgt_identity)
            .unwrap();
        bad_table[culprit] = tgt_identity;
        let bad_map =
            GroupHom::new_unchecked(good.source().clone(), good.target().clone(), bad_table);
        let forged = Tower::from_parts(
            vec![t.levels()[0].clone(), t.levels()[1].clone()],
            vec![bad_map],
        );
        let report = forged.validate();
        assert!(!report.is_valid());
        assert!(matches!(
            report.violations[0],
            TowerViolation::HomIdentity { level: 0, .. }
        ));
        assert!(Tower::new(
            forged.levels().to_vec(),
            forged.maps().to_vec()
        )
        .is_err());
    }

    #[test]
    fn identity_thread_validates() {
        let t = sym4_tower();
        let identities: Vec<Perm> = t.levels().iter().map(|l| l.identity().clone()).collect();
        assert!(t.thread_validate(&Thread::new(identities)).unwrap());
    }

    #[test]
    fn corrupted_thread_fails_validation() {
        let t = sym4_tower();
        let g = t
            .top()
            .elements()
            .iter()
            .find(|e| !e.is_identity())
            .unwrap()
            .clone();
        let mut entries = t.thread_from_top(&g).unwrap().entries().to_vec();
        // Replace the bottom entry by the other element of the 2-element level.
        let bottom = &t.levels()[0];
        let other = bottom
            .elements()
            .iter()
            .find(|e| *e != &entries[0])
            .unwrap()
            .clone();
        entries[0] = other;
        assert!(!t.thread_validate(&Thread::new(entries)).unwrap());
    }

    #[test]
    fn thread_length_mismatch_is_an_error() {
        let t = sym4_tower();
        let short = Thread::new(vec![t.levels()[0].identity().clone()]);
        assert!(matches!(
            t.thread_validate(&short),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn fiber_over_identity_is_the_kernel() {
        let t = sym4_tower();
        let fiber = t.fiber(0, t.levels()[0].identity()).unwrap();
        assert_eq!(fiber.len(), t.levels()[1].order() / t.levels()[0].order());
        assert!(matches!(
            t.fiber(2, t.levels()[2].identity()),
            Err(Error::BadLevel { level: 2 })
        ));
        let outsider = Perm::from_cycles(2, &[&[0, 1]]).unwrap();
        assert!(matches!(t.fiber(0, &outsider), Err(Error::NotMember)));
    }

    #[test]
    fn every_top_element_generates_a_valid_thread() {
        let t = sym4_tower();
        for g in t.top().elements() {
            let thread = t.thread_from_top(g).unwrap();
            assert!(t.thread_validate(&thread).unwrap());
        }
    }

    #[test]
    fn projections_yield_compatible_threads() {
        let g = stock::symmetric(4);
        let a4 = stock::alternating(4);
        let v4 = a4.commutator_subgroup();
        let (tower, projections) =
            Tower::from_quotient_chain(&g, &[a4, v4, FiniteGroup::trivial(4)]).unwrap();
        for e in g.elements() {
            let entries: Vec<Perm> = projections
                .iter()
                .map(|p| p.apply(e).unwrap())
                .collect();
            assert!(tower.thread_validate(&Thread::new(entries)).unwrap());
        }
    }
}
