//! Brute-force homomorphism counts, independent of character theory.
//!
//! Product relations are handled by element-indexed convolution vectors:
//! entry `g` counts the partial products equal to `g`. Everything else is a
//! plain scan over generator tuples.

use num_bigint::BigUint;

use super::presentation::{ParentPresentation, Relations};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Period};
use crate::limits::Limits;
use crate::par;

fn budget(needed: u128, limits: &Limits) -> Result<()> {
    if needed > limits.oracle_budget {
        return Err(Error::Budget {
            needed,
            budget: limits.oracle_budget,
        });
    }
    Ok(())
}

/// Members `x` with `x^m = 1` (or of order exactly `m`), found by powering.
fn solutions_of_period(g: &FiniteGroup, members: &[usize], p: Period, exact: bool) -> Vec<usize> {
    match p {
        Period::Infinite => members.to_vec(),
        Period::Finite(m) => members
            .iter()
            .copied()
            .filter(|&x| {
                g.pow(x, m as i64) == 0
                    && (!exact || crate::cyclotomic::prime_factors(m).iter().all(|&q| g.pow(x, (m / q) as i64) != 0))
            })
            .collect(),
    }
}

/// `out[a·x] = Σ dist[a]` over `x` in `step`.
fn convolve(g: &FiniteGroup, dist: &[u128], support: &[usize], step: &[usize], limits: &Limits) -> Vec<u128> {
    let live: Vec<usize> = support.iter().copied().filter(|&a| dist[a] != 0).collect();
    par::sum_vectors(limits, live.len(), dist.len(), |i, acc| {
        let a = live[i];
        let w = dist[a];
        for &x in step {
            acc[g.mul(a, x)] += w;
        }
    })
}

/// Tuples `(x_1..x_k)` with `x_i ∈ sets[i]` and `x_1...x_k = 1`.
pub(crate) fn product_count(
    g: &FiniteGroup,
    members: &[usize],
    sets: &[Vec<usize>],
    limits: &Limits,
) -> Result<u128> {
    let k = sets.len();
    let cost: u128 = sets[..k - 1].iter().map(|s| (s.len() * members.len()) as u128).sum();
    budget(cost, limits)?;
    let mut dist = vec![0u128; g.order()];
    dist[0] = 1;
    for s in &sets[..k - 1] {
        dist = convolve(g, &dist, members, s, limits);
    }
    Ok(sets[k - 1].iter().map(|&x| dist[g.inv(x)]).sum())
}

/// Solutions of `x_1...x_k = 1` with each `x_i` in a given conjugacy class.
pub fn class_product_oracle(g: &FiniteGroup, classes: &[usize], limits: &Limits) -> Result<u128> {
    if classes.len() < 2 {
        return Err(Error::Argument("need at least two classes".into()));
    }
    let cc = g.conjugacy_classes();
    let sets: Vec<Vec<usize>> = classes.iter().map(|&c| cc[c].members.clone()).collect();
    let members: Vec<usize> = (0..g.order()).collect();
    product_count(g, &members, &sets, limits)
}

fn self_convolve(g: &FiniteGroup, base: &[u128], times: u32, members: &[usize], limits: &Limits) -> Vec<u128> {
    let mut dist = base.to_vec();
    for _ in 1..times {
        let live: Vec<usize> = members.iter().copied().filter(|&a| dist[a] != 0).collect();
        let step: Vec<usize> = members.iter().copied().filter(|&b| base[b] != 0).collect();
        dist = par::sum_vectors(limits, live.len(), dist.len(), |i, acc| {
            let a = live[i];
            for &b in &step {
                acc[g.mul(a, b)] += dist[a] * base[b];
            }
        });
    }
    dist
}

fn surface_count(g: &FiniteGroup, members: &[usize], genus: u32, limits: &Limits) -> Result<u128> {
    let h = members.len() as u128;
    budget(h * h * genus as u128, limits)?;
    let comm = par::sum_vectors(limits, members.len(), g.order(), |i, acc| {
        let a = members[i];
        for &b in members {
            acc[g.commutator(a, b)] += 1;
        }
    });
    Ok(self_convolve(g, &comm, genus, members, limits)[0])
}

fn nonorientable_count(g: &FiniteGroup, members: &[usize], genus: u32, limits: &Limits) -> Result<u128> {
    let h = members.len() as u128;
    budget(h * h * genus as u128, limits)?;
    let mut squares = vec![0u128; g.order()];
    for &a in members {
        squares[g.mul(a, a)] += 1;
    }
    Ok(self_convolve(g, &squares, genus, members, limits)[0])
}

/// Scans generator tuples, calling `visit` on each one that satisfies the
/// relations. Parallel over the first generator's image.
pub(crate) fn scan_tuples<T, F>(
    g: &FiniteGroup,
    members: &[usize],
    relations: &Relations,
    exact: bool,
    limits: &Limits,
    visit: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[usize]) -> Option<T> + Sync + Send,
{
    let k = relations.generator_count();
    let free = if relations.solved_last.is_some() { k - 1 } else { k };
    let candidates: Vec<Vec<usize>> = relations
        .periods
        .iter()
        .map(|&p| solutions_of_period(g, members, p, exact))
        .collect();
    let cost = candidates[..free]
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    budget(cost, limits)?;
    if candidates.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    if free == 0 {
        let images: Vec<usize> = match &relations.solved_last {
            Some(w) => vec![w.evaluate(g, &[])],
            None => Vec::new(),
        };
        let ok = relations.satisfied(g, &images, exact);
        return Ok(if ok { visit(&images).into_iter().collect() } else { Vec::new() });
    }
    let per_first = par::map_slice(limits, &candidates[0], |&first| {
        let mut out = Vec::new();
        let mut images = vec![0usize; k];
        images[0] = first;
        let mut idx = vec![0usize; free];
        loop {
            for i in 1..free {
                images[i] = candidates[i][idx[i]];
            }
            if let Some(w) = &relations.solved_last {
                images[k - 1] = w.evaluate(g, &images[..k - 1]);
            }
            if relations.satisfied(g, &images, exact) {
                if let Some(t) = visit(&images) {
                    out.push(t);
                }
            }
            // odometer over generators 1..free
            let mut i = free;
            loop {
                if i == 1 {
                    return out;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < candidates[i].len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    });
    Ok(per_first.into_iter().flatten().collect())
}

/// Tuples satisfying the relations, counted by direct scan.
pub(crate) fn tuple_scan_count(
    g: &FiniteGroup,
    members: &[usize],
    relations: &Relations,
    exact: bool,
    limits: &Limits,
) -> Result<u128> {
    Ok(scan_tuples(g, members, relations, exact, limits, |_| Some(()))?.len() as u128)
}

/// Oracle count inside the subgroup with the given members.
pub(crate) fn relation_count_in(
    g: &FiniteGroup,
    members: &[usize],
    presentation: &ParentPresentation,
    exact: bool,
    limits: &Limits,
) -> Result<u128> {
    match presentation {
        ParentPresentation::FreeProductCyclic { orders } => {
            let mut total: u128 = 1;
            for &p in orders {
                let c = solutions_of_period(g, members, p, exact).len() as u128;
                total = total
                    .checked_mul(c)
                    .ok_or(Error::Budget { needed: u128::MAX, budget: limits.oracle_budget })?;
            }
            Ok(total)
        }
        ParentPresentation::Polygonal { periods } => {
            let sets: Vec<Vec<usize>> = periods
                .iter()
                .map(|&m| solutions_of_period(g, members, Period::Finite(m), exact))
                .collect();
            product_count(g, members, &sets, limits)
        }
        ParentPresentation::OrientableSurface { genus } => surface_count(g, members, *genus, limits),
        ParentPresentation::NonorientableSurface { genus } => nonorientable_count(g, members, *genus, limits),
        ParentPresentation::Flag { .. } => {
            if exact {
                return Err(Error::NoRoute("smooth counts are only defined for free products of cyclic groups, polygonal groups and surface groups".into()));
            }
            tuple_scan_count(g, members, &presentation.relations(), false, limits)
        }
    }
}

/// Direct count of homomorphisms from the parent group into `h`; with
/// `exact_orders` only those embedding each finite cyclic factor.
pub fn brute_force_relation_count(
    h: &FiniteGroup,
    presentation: &ParentPresentation,
    exact_orders: bool,
    limits: &Limits,
) -> Result<BigUint> {
    let members: Vec<usize> = (0..h.order()).collect();
    relation_count_in(h, &members, presentation, exact_orders, limits).map(BigUint::from)
}
