use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use super::aut::{self, Automorphism};
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Order constraint attached to a generator: finite `m` or no constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Period {
    Finite(u64),
    Infinite,
}

impl Period {
    /// Whether an element of order `order` satisfies `x^m = 1`.
    pub fn admits(self, order: u64) -> bool {
        match self {
            Period::Finite(m) => m % order == 0,
            Period::Infinite => true,
        }
    }

    /// Whether an element of order `order` has exactly this period.
    pub fn is_exact(self, order: u64) -> bool {
        match self {
            Period::Finite(m) => m == order,
            Period::Infinite => true,
        }
    }
}

impl std::fmt::Display for Period {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Period::Finite(m) => write!(f, "{m}"),
            Period::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A subgroup given by its sorted member indices and a small generating list.
/// Equality and hashing look at the members only.
#[derive(Debug, Clone)]
pub struct SubgroupHandle {
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for SubgroupHandle {}

impl std::hash::Hash for SubgroupHandle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl SubgroupHandle {
    pub(crate) fn from_bits(bits: &FixedBitSet, generators: Vec<usize>) -> Self {
        SubgroupHandle {
            members: bits.ones().collect(),
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.members.iter().all(|&e| other.contains(e))
    }

    pub(crate) fn bits(&self, n: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(n);
        for &e in &self.members {
            b.insert(e);
        }
        b
    }
}

struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
}

/// A finite permutation group with every element materialised.
///
/// Elements are sorted lexicographically by image array, so index 0 is the
/// identity and indices are stable across runs.
pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    table_cap: usize,
    table: OnceLock<Option<Vec<u16>>>,
    classes: OnceLock<ClassData>,
    automorphisms: OnceLock<Vec<Automorphism>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl FiniteGroup {
    /// Closes `generators` under composition.
    pub fn generate(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        limits: &Limits,
    ) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::Argument(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= limits.closure_cap {
                        return Err(Error::SizeLimit {
                            what: "group order",
                            limit: limits.closure_cap as u128,
                            reached: seen.len() as u128,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        let locate = |p: &Permutation| elements.binary_search(p).expect("closed set");
        let inverses = elements
            .iter()
            .map(|p| locate(&p.inverse()) as u32)
            .collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let generator_indices = generators.iter().map(locate).collect();
        Ok(FiniteGroup {
            name: name.into(),
            degree,
            generators,
            generator_indices,
            elements,
            inverses,
            orders,
            table_cap: limits.table_cap,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            automorphisms: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    fn table(&self) -> Option<&[u16]> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                (n <= self.table_cap && n <= u16::MAX as usize + 1).then(|| self.build_table())
            })
            .as_deref()
    }

    fn build_table(&self) -> Vec<u16> {
        let n = self.order();
        let gens = &self.generator_indices;
        let mut right = vec![0usize; n * gens.len()];
        for a in 0..n {
            for (j, &g) in gens.iter().enumerate() {
                right[a * gens.len() + j] = self.mul_slow(a, g);
            }
        }
        // BFS tree: every b != 1 is parent(b) * generator(b).
        let mut tree: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for j in 0..gens.len() {
                let y = right[x * gens.len() + j];
                if !seen[y] {
                    seen[y] = true;
                    tree.push((y, x, j));
                    queue.push_back(y);
                }
            }
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u16;
            for &(b, parent, j) in &tree {
                row[b] = right[row[parent] as usize * gens.len() + j] as u16;
            }
        }
        table
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.elements[a].then(&self.elements[b]))
            .expect("group is closed")
    }

    /// Product `a * b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let ord = self.element_order(a);
        let mut e = k.unsigned_abs() % ord;
        let (mut acc, mut sq) = (0usize, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 a g`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    pub fn count_elements_of_order(&self, m: Period) -> usize {
        match m {
            Period::Infinite => self.order(),
            Period::Finite(m) => self.orders.iter().filter(|&&o| o as u64 == m).count(),
        }
    }

    /// Number of elements with `x^m = 1`.
    pub fn count_elements_dividing(&self, m: Period) -> usize {
        self.orders.iter().filter(|&&o| m.admits(o as u64)).count()
    }

    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_indices;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u32::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = raw.len() as u32;
                class_of[x] = id;
                let mut members = vec![x];
                let mut i = 0;
                while i < members.len() {
                    let y = members[i];
                    for &g in &self.generator_indices {
                        let z = self.conjugate(y, g);
                        if class_of[z] == u32::MAX {
                            class_of[z] = id;
                            members.push(z);
                        }
                    }
                    i += 1;
                }
                members.sort_unstable();
                raw.push(members);
            }
            let mut classes: Vec<ConjugacyClass> = raw
                .into_iter()
                .map(|members| ConjugacyClass {
                    representative: members[0],
                    element_order: self.element_order(members[0]),
                    members,
                })
                .collect();
            classes.sort_by_key(|c| (c.element_order, c.size(), c.representative));
            for (i, c) in classes.iter().enumerate() {
                for &m in &c.members {
                    class_of[m] = i as u32;
                }
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes ordered by element order, then size, then least member.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_data().class_of[e] as usize
    }

    /// For each class, the class containing the squares of its members.
    pub fn square_class_map(&self) -> Vec<usize> {
        self.conjugacy_classes()
            .iter()
            .map(|c| self.class_of(self.mul(c.representative, c.representative)))
            .collect()
    }

    pub(crate) fn closure_bits(&self, gens: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    stack.push(y);
                }
            }
        }
        set
    }

    /// Size of the subgroup generated by `gens`.
    pub fn generated_order(&self, gens: &[usize]) -> usize {
        self.closure_bits(gens).count_ones(..)
    }

    /// Whether `gens` generate the whole group. Stops as soon as the closure
    /// passes half the group, since no proper subgroup is that large.
    pub fn generates(&self, gens: &[usize]) -> bool {
        let n = self.order();
        if n == 1 {
            return true;
        }
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(0);
        let mut count = 1;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.put(y) {
                    count += 1;
                    if 2 * count > n {
                        return true;
                    }
                    stack.push(y);
                }
            }
        }
        false
    }

    pub fn subgroup_generated(&self, elems: &[usize]) -> SubgroupHandle {
        let mut gens: Vec<usize> = elems.iter().copied().filter(|&e| e != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        let bits = self.closure_bits(&gens);
        SubgroupHandle::from_bits(&bits, gens)
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        self.subgroup_generated(&[])
    }

    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle {
            members: (0..self.order()).collect(),
            generators: self.generator_indices.iter().copied().filter(|&e| e != 0).collect(),
        }
    }

    pub(crate) fn conjugate_bits(&self, set: &FixedBitSet, g: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for h in set.ones() {
            out.insert(self.conjugate(h, g));
        }
        out
    }

    /// All conjugates of a subgroup, found by conjugating with generators.
    pub(crate) fn conjugates_bits(&self, set: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut orbit = vec![set.clone()];
        let mut seen: HashSet<FixedBitSet> = HashSet::from([set.clone()]);
        let mut i = 0;
        while i < orbit.len() {
            for &g in &self.generator_indices {
                let c = self.conjugate_bits(&orbit[i], g);
                if seen.insert(c.clone()) {
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Largest normal subgroup of `self` inside `h`.
    pub fn core(&self, h: &SubgroupHandle) -> SubgroupHandle {
        let bits = h.bits(self.order());
        let mut core = bits.clone();
        for c in self.conjugates_bits(&bits) {
            core.intersect_with(&c);
        }
        let gens: Vec<usize> = core.ones().filter(|&e| e != 0).collect();
        SubgroupHandle::from_bits(&core, gens)
    }

    pub fn is_normal(&self, h: &SubgroupHandle) -> bool {
        h.generators().iter().all(|&x| {
            self.generator_indices
                .iter()
                .all(|&g| h.contains(self.conjugate(x, g)))
        })
    }

    /// Elements commuting with every generator.
    pub fn centre(&self) -> SubgroupHandle {
        let members: Vec<usize> = (0..self.order())
            .filter(|&z| {
                self.generator_indices
                    .iter()
                    .all(|&g| self.mul(z, g) == self.mul(g, z))
            })
            .collect();
        let gens = members.iter().copied().filter(|&e| e != 0).collect();
        SubgroupHandle { members, generators: gens }
    }

    /// Simple and not abelian: every nontrivial class generates the whole group.
    pub fn is_nonabelian_simple(&self) -> bool {
        if self.order() == 1 || self.is_abelian() {
            return false;
        }
        self.conjugacy_classes()
            .iter()
            .skip(1)
            .all(|c| self.generates(&c.members))
    }

    /// Realises a subgroup as a group in its own right.
    pub fn subgroup_as_group(
        &self,
        h: &SubgroupHandle,
        name: impl Into<String>,
        limits: &Limits,
    ) -> Result<FiniteGroup> {
        let gens = h
            .generators()
            .iter()
            .map(|&e| self.elements[e].clone())
            .collect();
        FiniteGroup::generate(name, self.degree, gens, limits)
    }

    /// Complete automorphism group, computed once and cached.
    pub fn automorphisms(&self, limits: &Limits) -> Result<&[Automorphism]> {
        if let Some(a) = self.automorphisms.get() {
            return Ok(a);
        }
        if self.order() > limits.automorphism_cap {
            return Err(Error::SizeLimit {
                what: "automorphism search group order",
                limit: limits.automorphism_cap as u128,
                reached: self.order() as u128,
            });
        }
        let found = aut::search(self, limits)?;
        Ok(self.automorphisms.get_or_init(|| found))
    }

    /// Lexicographically first shortest generating tuple.
    pub fn minimal_generating_tuple(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        for k in 1.. {
            let mut tuple = Vec::with_capacity(k);
            if self.first_generating(&mut tuple, 1, k) {
                return tuple;
            }
        }
        unreachable!()
    }

    fn first_generating(&self, tuple: &mut Vec<usize>, start: usize, k: usize) -> bool {
        if tuple.len() == k {
            return self.generates(tuple);
        }
        for e in start..self.order() {
            tuple.push(e);
            if self.first_generating(tuple, e + 1, k) {
                return true;
            }
            tuple.pop();
        }
        false
    }
}

/// Direct product acting on disjoint point sets.
pub fn direct_product(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    limits: &Limits,
) -> Result<FiniteGroup> {
    let predicted = g1.order() as u128 * g2.order() as u128;
    if predicted > limits.closure_cap as u128 {
        return Err(Error::SizeLimit {
            what: "direct product order",
            limit: limits.closure_cap as u128,
            reached: predicted,
        });
    }
    let degree = g1.degree() + g2.degree();
    let gens = g1
        .generators()
        .iter()
        .map(|p| p.shifted(0, degree))
        .chain(g2.generators().iter().map(|p| p.shifted(g1.degree(), degree)))
        .collect();
    FiniteGroup::generate(format!("{}x{}", g1.name(), g2.name()), degree, gens, limits)
}
