//! Subgroup lattices and Hall's Möbius function.

mod closed_form;

pub use closed_form::{
    gaussian_binomial, moebius_cyclic_closed_form, moebius_elementary_abelian_closed_form,
    number_theoretic_moebius,
};

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, SubgroupHandle};
use crate::limits::Limits;
use crate::par;

/// One conjugacy class of subgroups, as indices into [`SubgroupLattice::subgroups`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub order: usize,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Every subgroup of a group, with upper covers and conjugacy classes.
///
/// Subgroups are sorted by order and then by member list, so index 0 is the
/// trivial subgroup and the last index is the whole group.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group_order: usize,
    subgroups: Vec<SubgroupHandle>,
    bits: Vec<FixedBitSet>,
    covers: Vec<Vec<usize>>,
    classes: Vec<SubgroupClass>,
    class_of: Vec<usize>,
}

/// Hall's Möbius function on a lattice, one value per subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusTable {
    pub mu: Vec<i128>,
}

impl MoebiusTable {
    pub fn get(&self, subgroup: usize) -> i128 {
        self.mu[subgroup]
    }
}

fn conjugate_generators(g: &FiniteGroup, gens: &[usize], by: usize) -> Vec<usize> {
    gens.iter().map(|&x| g.conjugate(x, by)).collect()
}

/// Conjugacy orbit of a subgroup, keeping a generating list for each conjugate.
fn orbit(g: &FiniteGroup, bits: FixedBitSet, gens: Vec<usize>) -> Vec<(FixedBitSet, Vec<usize>)> {
    let mut seen: HashSet<FixedBitSet> = HashSet::from([bits.clone()]);
    let mut out = vec![(bits, gens)];
    let mut i = 0;
    while i < out.len() {
        for &t in g.generator_indices() {
            let c = g.conjugate_bits(&out[i].0, t);
            if seen.insert(c.clone()) {
                let cg = conjugate_generators(g, &out[i].1, t);
                out.push((c, cg));
            }
        }
        i += 1;
    }
    out
}

impl SubgroupLattice {
    /// Enumerates all subgroups by cyclic extension of class representatives.
    pub fn build(g: &FiniteGroup, limits: &Limits) -> Result<Self> {
        let n = g.order();
        if n > limits.lattice_cap {
            return Err(Error::SizeLimit {
                what: "subgroup lattice group order",
                limit: limits.lattice_cap as u128,
                reached: n as u128,
            });
        }

        // one generator per cyclic subgroup
        let mut cyclic_seen: HashSet<FixedBitSet> = HashSet::new();
        let mut cyclic_gens = Vec::new();
        for x in 1..n {
            if cyclic_seen.insert(g.closure_bits(&[x])) {
                cyclic_gens.push(x);
            }
        }

        let mut known: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
        let mut class_lists: Vec<Vec<FixedBitSet>> = Vec::new();
        let trivial = g.closure_bits(&[]);
        known.insert(trivial.clone(), Vec::new());
        class_lists.push(vec![trivial.clone()]);
        let mut frontier: Vec<(FixedBitSet, Vec<usize>)> = vec![(trivial, Vec::new())];

        while !frontier.is_empty() {
            let jobs: Vec<(usize, usize)> = (0..frontier.len())
                .flat_map(|r| cyclic_gens.iter().map(move |&x| (r, x)))
                .collect();
            let joins = par::map_slice(limits, &jobs, |&(r, x)| {
                let (bits, gens) = &frontier[r];
                if bits.contains(x) {
                    return None;
                }
                let mut gens = gens.clone();
                gens.push(x);
                Some((g.closure_bits(&gens), gens))
            });
            let mut next = Vec::new();
            for (bits, gens) in joins.into_iter().flatten() {
                if known.contains_key(&bits) {
                    continue;
                }
                let orb = orbit(g, bits.clone(), gens.clone());
                class_lists.push(orb.iter().map(|(b, _)| b.clone()).collect());
                for (b, gs) in orb {
                    known.insert(b, gs);
                }
                next.push((bits, gens));
            }
            frontier = next;
        }

        let mut entries: Vec<(usize, Vec<usize>, FixedBitSet)> = known.into_keys().map(|b| (b.count_ones(..), b.ones().collect(), b))
            .collect();
        entries.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let index: HashMap<&FixedBitSet, usize> =
            entries.iter().enumerate().map(|(i, e)| (&e.2, i)).collect();

        let mut class_of = vec![usize::MAX; entries.len()];
        let mut classes: Vec<SubgroupClass> = class_lists
            .iter()
            .map(|list| {
                let mut members: Vec<usize> = list.iter().map(|b| index[b]).collect();
                members.sort_unstable();
                SubgroupClass {
                    representative: members[0],
                    order: entries[members[0]].0,
                    members,
                }
            })
            .collect();
        classes.sort_by_key(|c| (c.order, c.representative));
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::Internal("subgroup missing from class partition".into()));
        }

        let subgroups: Vec<SubgroupHandle> = entries
            .iter()
            .map(|(_, members, bits)| {
                let gens = small_generating_list(g, members);
                SubgroupHandle::from_bits(bits, gens)
            })
            .collect();
        let bits: Vec<FixedBitSet> = entries.into_iter().map(|e| e.2).collect();
        let covers = par::map_range(limits, bits.len(), |h| upper_covers(&bits, h));

        Ok(SubgroupLattice {
            group_order: n,
            subgroups,
            bits,
            covers,
            classes,
            class_of,
        })
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn subgroups(&self) -> &[SubgroupHandle] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &SubgroupHandle {
        &self.subgroups[i]
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_of(&self, subgroup: usize) -> usize {
        self.class_of[subgroup]
    }

    /// Minimal subgroups strictly containing `subgroup`.
    pub fn covers(&self, subgroup: usize) -> &[usize] {
        &self.covers[subgroup]
    }

    /// Whether subgroup `a` is contained in subgroup `b`.
    pub fn contains(&self, b: usize, a: usize) -> bool {
        self.bits[a].is_subset(&self.bits[b])
    }

    pub fn index_of(&self, h: &SubgroupHandle) -> Option<usize> {
        let key = (h.order(), h.members());
        self.subgroups
            .binary_search_by(|s| (s.order(), s.members()).cmp(&key))
            .ok()
    }

    /// Maximal subgroups of the whole group.
    pub fn maximal_subgroups(&self) -> Vec<usize> {
        let top = self.whole_index();
        (0..top).filter(|&h| self.covers[h].contains(&top)).collect()
    }

    /// Intersection of all maximal subgroups containing `subgroup`, as an index.
    /// Equals the whole group when none exist.
    pub fn maximal_closure(&self, subgroup: usize) -> usize {
        let mut acc = self.bits[self.whole_index()].clone();
        for m in self.maximal_subgroups() {
            if self.contains(m, subgroup) {
                acc.intersect_with(&self.bits[m]);
            }
        }
        let members: Vec<usize> = acc.ones().collect();
        self.subgroups
            .binary_search_by(|s| (s.order(), s.members()).cmp(&(members.len(), &members[..])))
            .expect("intersection of subgroups is a subgroup")
    }

    /// Hall's Möbius function, evaluated top-down one subgroup class at a time.
    pub fn moebius(&self, limits: &Limits) -> Result<MoebiusTable> {
        let mut by_class = vec![0i128; self.classes.len()];
        let top = self.whole_index();
        for ci in (0..self.classes.len()).rev() {
            let rep = self.classes[ci].representative;
            if rep == top {
                by_class[ci] = 1;
                continue;
            }
            let order = self.subgroups[rep].order();
            let above: Vec<usize> = par::map_range(limits, self.len() - rep - 1, |off| {
                let k = rep + 1 + off;
                if self.subgroups[k].order() > order && self.contains(k, rep) {
                    Some(self.class_of[k])
                } else {
                    None
                }
            })
            .into_iter()
            .flatten()
            .collect();
            let mut sum: i128 = 0;
            for c in above {
                sum = sum
                    .checked_add(by_class[c])
                    .ok_or_else(|| Error::Internal("Möbius value overflow".into()))?;
            }
            by_class[ci] = -sum;
        }
        Ok(MoebiusTable {
            mu: self.class_of.iter().map(|&c| by_class[c]).collect(),
        })
    }
}

fn small_generating_list(g: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = g.closure_bits(&gens);
    let target = members.len();
    // prefer high-order elements so few generators are needed
    let mut order_sorted: Vec<usize> = members.iter().copied().filter(|&e| e != 0).collect();
    order_sorted.sort_by_key(|&e| (std::cmp::Reverse(g.element_order(e)), e));
    for e in order_sorted {
        if span.count_ones(..) == target {
            break;
        }
        if !span.contains(e) {
            gens.push(e);
            span = g.closure_bits(&gens);
        }
    }
    gens
}

fn upper_covers(bits: &[FixedBitSet], h: usize) -> Vec<usize> {
    let size = bits[h].count_ones(..);
    let mut covers: Vec<usize> = Vec::new();
    for k in h + 1..bits.len() {
        let ksize = bits[k].count_ones(..);
        if ksize == size || !ksize.is_multiple_of(size) || !bits[h].is_subset(&bits[k]) {
            continue;
        }
        if covers.iter().all(|&c| !bits[c].is_subset(&bits[k])) {
            covers.push(k);
        }
    }
    covers
}

/// All subgroups of `g`.
pub fn all_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
    SubgroupLattice::build(g, limits)
}

pub fn moebius(lattice: &SubgroupLattice, limits: &Limits) -> Result<MoebiusTable> {
    lattice.moebius(limits)
}

/// Intersection of the maximal subgroups.
pub fn frattini(lattice: &SubgroupLattice) -> SubgroupHandle {
    lattice.subgroups[lattice.maximal_closure(0)].clone()
}

/// Number of conjugacy classes of subgroups with trivial core.
pub fn corefree_class_count(g: &FiniteGroup, lattice: &SubgroupLattice) -> usize {
    lattice
        .classes
        .iter()
        .filter(|c| g.core(&lattice.subgroups[c.representative]).is_trivial())
        .count()
}

#[cfg(test)]
mod tests;
