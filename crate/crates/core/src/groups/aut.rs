use std::collections::VecDeque;

use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::par;

/// An automorphism stored as its action on element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    image_table: Vec<u32>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            image_table: (0..order as u32).collect(),
        }
    }

    /// Checks bijectivity and multiplicativity before accepting the table.
    pub fn from_table(g: &FiniteGroup, table: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if table.len() != n {
            return Err(Error::Argument("automorphism table has wrong length".into()));
        }
        let mut seen = vec![false; n];
        for &t in &table {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::Argument("automorphism table is not a bijection".into()));
            }
        }
        for a in 0..n {
            for &s in g.generator_indices() {
                if table[g.mul(a, s)] != g.mul(table[a], table[s]) {
                    return Err(Error::Argument("table is not multiplicative".into()));
                }
            }
        }
        Ok(Automorphism {
            image_table: table.into_iter().map(|t| t as u32).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, e: usize) -> usize {
        self.image_table[e] as usize
    }

    pub fn image_table(&self) -> &[u32] {
        &self.image_table
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image_table: self
                .image_table
                .iter()
                .map(|&i| other.image_table[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut t = vec![0u32; self.image_table.len()];
        for (i, &j) in self.image_table.iter().enumerate() {
            t[j as usize] = i as u32;
        }
        Automorphism { image_table: t }
    }

    pub fn is_identity(&self) -> bool {
        self.image_table
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }
}

struct Search<'a> {
    group: &'a FiniteGroup,
    gens: Vec<usize>,
    tree: Vec<(usize, usize, usize)>,
    candidates: Vec<Vec<usize>>,
    pair_orders: Vec<Vec<u64>>,
}

impl Search<'_> {
    fn extend(&self, images: &mut Vec<usize>, out: &mut Vec<Automorphism>) {
        let i = images.len();
        if i == self.gens.len() {
            if let Some(a) = self.build(images) {
                out.push(a);
            }
            return;
        }
        let g = self.group;
        for &c in &self.candidates[i] {
            let consistent = (0..i).all(|j| {
                g.element_order(g.mul(images[j], c)) == self.pair_orders[j][i]
            });
            if consistent {
                images.push(c);
                self.extend(images, out);
                images.pop();
            }
        }
    }

    fn build(&self, images: &[usize]) -> Option<Automorphism> {
        let g = self.group;
        let n = g.order();
        let mut phi = vec![usize::MAX; n];
        phi[0] = 0;
        for &(b, parent, j) in &self.tree {
            phi[b] = g.mul(phi[parent], images[j]);
        }
        let mut seen = vec![false; n];
        for &p in &phi {
            if std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        for a in 0..n {
            for (j, &s) in self.gens.iter().enumerate() {
                if phi[g.mul(a, s)] != g.mul(phi[a], images[j]) {
                    return None;
                }
            }
        }
        Some(Automorphism {
            image_table: phi.into_iter().map(|p| p as u32).collect(),
        })
    }
}

/// Backtracking over images of a minimal generating tuple, pruned by element
/// orders and by orders of pairwise products.
pub(crate) fn search(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Automorphism>> {
    let n = g.order();
    let gens = g.minimal_generating_tuple();
    if gens.is_empty() {
        return Ok(vec![Automorphism::identity(n)]);
    }
    let mut tree = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (j, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                tree.push((y, x, j));
                queue.push_back(y);
            }
        }
    }
    let candidates = gens
        .iter()
        .map(|&s| {
            (0..n)
                .filter(|&e| g.element_order(e) == g.element_order(s))
                .collect()
        })
        .collect();
    let pair_orders = gens
        .iter()
        .map(|&a| gens.iter().map(|&b| g.element_order(g.mul(a, b))).collect())
        .collect();
    let search = Search {
        group: g,
        gens,
        tree,
        candidates,
        pair_orders,
    };
    let chunks = par::map_slice(limits, &search.candidates[0], |&c| {
        let mut out = Vec::new();
        search.extend(&mut vec![c], &mut out);
        out
    });
    let mut all: Vec<Automorphism> = chunks.into_iter().flatten().collect();
    all.sort_unstable();
    if all.first().map(Automorphism::is_identity) != Some(true) {
        return Err(Error::Internal("automorphism search lost the identity".into()));
    }
    Ok(all)
}
