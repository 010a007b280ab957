use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Perm;

/// A homomorphism between two enumerated groups, stored as a full table:
/// `table[i]` is the target element index of the `i`-th source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    table: Vec<usize>,
}

impl GroupHom {
    /// Builds a homomorphism and verifies `table(xy) = table(x)·table(y)`
    /// exhaustively over all pairs.
    pub fn new(source: FiniteGroup, target: FiniteGroup, table: Vec<usize>) -> Result<GroupHom> {
        let hom = GroupHom {
            source,
            target,
            table,
        };
        if let Some(violation) = hom.violations(1).into_iter().next() {
            return Err(Error::InvalidArgument(violation));
        }
        Ok(hom)
    }

    /// Builds without verification; callers must run `violations` themselves.
    /// Used by file ingestion, where defects become report content.
    pub(crate) fn new_unchecked(
        source: FiniteGroup,
        target: FiniteGroup,
        table: Vec<usize>,
    ) -> GroupHom {
        GroupHom {
            source,
            target,
            table,
        }
    }

    /// Collects up to `limit` violations of the homomorphism contract
    /// (table shape, range, and the identity `table(xy) = table(x)·table(y)`
    /// over all pairs). An empty result means the table is a verified
    /// homomorphism.
    pub fn violations(&self, limit: usize) -> Vec<String> {
        let mut found = Vec::new();
        if self.table.len() != self.source.order() {
            found.push(format!(
                "table has {} entries for a source of order {}",
                self.table.len(),
                self.source.order()
            ));
            return found;
        }
        for (i, &t) in self.table.iter().enumerate() {
            if t >= self.target.order() {
                found.push(format!(
                    "table entry {i} points at target index {t}, order is {}",
                    self.target.order()
                ));
                if found.len() >= limit {
                    return found;
                }
            }
        }
        if !found.is_empty() {
            return found;
        }
        let n = self.source.order();
        for i in 0..n {
            for j in 0..n {
                let product = self.source.element(i).compose(self.source.element(j));
                let product_index = self
                    .source
                    .index_of(&product)
                    .expect("source is closed under composition");
                let mapped = self
                    .target
                    .element(self.table[i])
                    .compose(self.target.element(self.table[j]));
                let mapped_index = self
                    .target
                    .index_of(&mapped)
                    .expect("target is closed under composition");
                if self.table[product_index] != mapped_index {
                    found.push(format!(
                        "homomorphism identity fails at pair ({i}, {j}): \
                         table(xy) = {}, table(x)·table(y) = {mapped_index}",
                        self.table[product_index]
                    ));
                    if found.len() >= limit {
                        return found;
                    }
                }
            }
        }
        found
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply_index(&self, source_index: usize) -> usize {
        self.table[source_index]
    }

    pub fn apply(&self, g: &Perm) -> Result<Perm> {
        let i = self.source.index_of(g).ok_or(Error::NotMember)?;
        Ok(self.target.element(self.table[i]).clone())
    }

    /// Distinct target indices hit by the table, sorted.
    pub fn image_indices(&self) -> Vec<usize> {
        let mut image: Vec<usize> = self.table.clone();
        image.sort_unstable();
        image.dedup();
        image
    }

    pub fn is_surjective(&self) -> bool {
        self.image_indices().len() == self.target.order()
    }

    /// Source indices mapping to the target identity.
    pub fn kernel_indices(&self) -> Vec<usize> {
        let id = self.target.identity_index();
        (0..self.table.len())
            .filter(|&i| self.table[i] == id)
            .collect()
    }

    /// The fiber over a target element: all source elements mapping onto it.
    pub fn fiber(&self, over: &Perm) -> Result<Vec<Perm>> {
        let t = self.target.index_of(over).ok_or(Error::NotMember)?;
        Ok((0..self.table.len())
            .filter(|&i| self.table[i] == t)
            .map(|i| self.source.element(i).clone())
            .collect())
    }

    /// Composes `self : A → B` with `next : B → C` into `A → C`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom> {
        if next.source.order() != self.target.order() {
            return Err(Error::LengthMismatch {
                expected: self.target.order(),
                got: next.source.order(),
            });
        }
        let table = self.table.iter().map(|&i| next.table[i]).collect();
        Ok(GroupHom {
            source: self.source.clone(),
            target: next.target.clone(),
            table,
        })
    }
}
