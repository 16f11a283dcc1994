use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::FiniteGroup;

#[derive(Debug, Clone)]
pub struct CyclicSubgroup {
    /// Smallest element index generating the subgroup.
    pub generator: usize,
    pub elements: FixedBitSet,
}

impl CyclicSubgroup {
    pub fn order(&self) -> usize {
        self.elements.count_ones(..)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }
}

/// All cyclic subgroups, the inclusion-maximal ones, and which maximal
/// cyclic subgroups contain each element.
#[derive(Debug, Clone)]
pub struct CyclicLattice {
    pub cyclics: Vec<CyclicSubgroup>,
    /// `generated[x]` is the index of `<x>` in `cyclics`.
    pub generated: Vec<usize>,
    /// Indices into `cyclics`, ascending.
    pub maximals: Vec<usize>,
    /// `membership[x]` has bit `i` set iff `x` lies in `maximals[i]`.
    pub membership: Vec<FixedBitSet>,
}

impl CyclicLattice {
    pub fn new(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut cyclics: Vec<CyclicSubgroup> = Vec::new();
        let mut by_set: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut generated = Vec::with_capacity(n);
        for g in group.elements() {
            let mut elements = FixedBitSet::with_capacity(n);
            for x in group.powers(g) {
                elements.insert(x);
            }
            let id = *by_set.entry(elements.clone()).or_insert_with(|| {
                cyclics.push(CyclicSubgroup {
                    generator: g,
                    elements,
                });
                cyclics.len() - 1
            });
            generated.push(id);
        }

        let maximals: Vec<usize> = (0..cyclics.len())
            .filter(|&i| {
                let c = &cyclics[i].elements;
                !cyclics
                    .iter()
                    .any(|d| d.elements != *c && c.is_subset(&d.elements))
            })
            .collect();

        let mut membership = vec![FixedBitSet::with_capacity(maximals.len()); n];
        for (slot, &m) in maximals.iter().enumerate() {
            for x in cyclics[m].elements.ones() {
                membership[x].insert(slot);
            }
        }

        CyclicLattice {
            cyclics,
            generated,
            maximals,
            membership,
        }
    }

    pub fn cyclic_of(&self, x: usize) -> &CyclicSubgroup {
        &self.cyclics[self.generated[x]]
    }

    pub fn maximal(&self, slot: usize) -> &CyclicSubgroup {
        &self.cyclics[self.maximals[slot]]
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &CyclicSubgroup> {
        self.maximals.iter().map(|&i| &self.cyclics[i])
    }

    /// `<x>` is a proper subgroup of `<y>`.
    pub fn strictly_below(&self, x: usize, y: usize) -> bool {
        let (cx, cy) = (self.generated[x], self.generated[y]);
        cx != cy
            && self.cyclics[cx]
                .elements
                .is_subset(&self.cyclics[cy].elements)
    }

    /// `x` and `y` lie in a common cyclic subgroup.
    pub fn share_maximal(&self, x: usize, y: usize) -> bool {
        !self.membership[x].is_disjoint(&self.membership[y])
    }

    /// Elements of the maximal cyclic subgroups containing `x`, unioned.
    pub fn union_of_memberships(&self, x: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.generated.len());
        for slot in self.membership[x].ones() {
            out.union_with(&self.maximal(slot).elements);
        }
        out
    }
}
