use crate::groups::{Automorphism, FiniteGroup};

/// Lexicographically least representatives of `Aut G`-orbits on tuples.
///
/// Only automorphisms that send the first entry to the least element of its
/// orbit can produce the minimum, so those are listed per element up front.
#[derive(Debug, Clone)]
pub struct Canonicalizer {
    auts: Vec<Automorphism>,
    to_min: Vec<Vec<u32>>,
}

impl Canonicalizer {
    pub fn new(g: &FiniteGroup, auts: &[Automorphism]) -> Self {
        let n = g.order();
        let mut orbit_min = vec![usize::MAX; n];
        for e in 0..n {
            orbit_min[e] = auts.iter().map(|a| a.apply(e)).min().unwrap_or(e);
        }
        let to_min = (0..n)
            .map(|e| {
                (0..auts.len() as u32)
                    .filter(|&i| auts[i as usize].apply(e) == orbit_min[e])
                    .collect()
            })
            .collect();
        Canonicalizer {
            auts: auts.to_vec(),
            to_min,
        }
    }

    pub fn canonical(&self, tuple: &[usize]) -> Vec<usize> {
        let Some(&first) = tuple.first() else {
            return Vec::new();
        };
        let mut best: Option<Vec<usize>> = None;
        for &i in &self.to_min[first] {
            let a = &self.auts[i as usize];
            let image: Vec<usize> = tuple.iter().map(|&x| a.apply(x)).collect();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
        best.expect("identity automorphism is always present")
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.auts
    }
}
