use std::fmt;
use std::hash::{BuildHasher, Hash};

use hashbrown::{DefaultHashBuilder, HashTable};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use super::{genus_from_euler, opt_decimal};
use crate::enumerate::{Context, RegularObjectSet};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::homcount::Category;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderMethod {
    /// Closure of the diagonal generator tuples inside `G^r`.
    DirectClosure,
    /// `G^r`, valid when `G` is non-abelian simple.
    SimplePower,
    /// `C_e × C_e` for an abelian group of exponent `e` and parent `F_2`.
    AbelianRule,
    /// Only the divisor bound `|G|^r` is known.
    BoundOnly,
}

impl fmt::Display for OrderMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderMethod::DirectClosure => "direct-closure",
            OrderMethod::SimplePower => "simple-power",
            OrderMethod::AbelianRule => "abelian-rule",
            OrderMethod::BoundOnly => "bound-only",
        })
    }
}

/// The smallest object covering every regular object with group `G`.
#[derive(Debug, Clone, Serialize)]
pub struct UniversalCoverSummary {
    pub parent: String,
    #[serde(serialize_with = "decimal")]
    pub r: BigUint,
    /// Exact unless the method is `BoundOnly`, when it is a multiple of the true order.
    #[serde(serialize_with = "decimal")]
    pub cover_group_order: BigUint,
    pub order_method: OrderMethod,
    /// Every exact method that ran; they all gave the same order.
    pub agreeing_methods: Vec<OrderMethod>,
    pub type_periods: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub petrie_length: Option<u64>,
    pub orientable: Option<bool>,
    #[serde(serialize_with = "opt_decimal")]
    pub euler_characteristic: Option<BigInt>,
    #[serde(serialize_with = "opt_decimal")]
    pub genus: Option<BigInt>,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl UniversalCoverSummary {
    pub fn is_exact(&self) -> bool {
        self.order_method != OrderMethod::BoundOnly
    }
}

trait Digit: Copy + Eq + Hash {
    fn from_index(i: usize) -> Self;
    fn index(self) -> usize;
}

impl Digit for u8 {
    fn from_index(i: usize) -> Self {
        i as u8
    }
    fn index(self) -> usize {
        self as usize
    }
}

impl Digit for u16 {
    fn from_index(i: usize) -> Self {
        i as u16
    }
    fn index(self) -> usize {
        self as usize
    }
}

/// Order of the subgroup of `G^r` generated by `gens` (each of length `r`),
/// or `None` once it exceeds `cap`.
pub(crate) fn power_closure_order(g: &FiniteGroup, gens: &[Vec<usize>], cap: usize) -> Option<usize> {
    if g.order() <= 1 << 8 {
        closure_in::<u8>(g, gens, cap)
    } else if g.order() <= 1 << 16 {
        closure_in::<u16>(g, gens, cap)
    } else {
        None
    }
}

fn closure_in<D: Digit>(g: &FiniteGroup, gens: &[Vec<usize>], cap: usize) -> Option<usize> {
    let r = gens.first().map_or(0, Vec::len);
    let gens: Vec<Vec<D>> = gens.iter().map(|t| t.iter().map(|&x| D::from_index(x)).collect()).collect();
    let state = DefaultHashBuilder::default();
    let mut arena: Vec<D> = vec![D::from_index(g.identity()); r];
    let mut table: HashTable<u32> = HashTable::new();
    table.insert_unique(state.hash_one(&arena[..r]), 0, |_| 0);
    let mut count = 1usize;
    let mut next = 0usize;
    let mut scratch: Vec<D> = vec![D::from_index(0); r];
    while next < count {
        for s in &gens {
            let base = next * r;
            for i in 0..r {
                scratch[i] = D::from_index(g.mul(arena[base + i].index(), s[i].index()));
            }
            let h = state.hash_one(&scratch[..]);
            let found = table
                .find(h, |&e| arena[e as usize * r..(e as usize + 1) * r] == scratch[..])
                .is_some();
            if !found {
                if count >= cap {
                    return None;
                }
                arena.extend_from_slice(&scratch);
                let arena_ref = &arena;
                table.insert_unique(h, count as u32, |&e| {
                    state.hash_one(&arena_ref[e as usize * r..(e as usize + 1) * r])
                });
                count += 1;
            }
        }
        next += 1;
    }
    Some(count)
}

fn lcm_orders(g: &FiniteGroup, xs: impl IntoIterator<Item = usize>) -> u64 {
    xs.into_iter().fold(1, |acc, x| acc.lcm(&g.element_order(x)))
}

/// Diagonal tuples: entry `i` lists the image of generator `i` in every object.
fn diagonals(set: &RegularObjectSet, k: usize) -> Vec<Vec<usize>> {
    (0..k).map(|i| set.classes.iter().map(|c| c.images[i]).collect()).collect()
}

fn zip_mul(g: &FiniteGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(&x, &y)| g.mul(x, y)).collect()
}

/// Order of the subgroup generated by two diagonal involutions.
fn diagonal_dihedral(g: &FiniteGroup, a: &[usize], b: &[usize]) -> u64 {
    let id = g.identity();
    let trivial = |t: &[usize]| t.iter().all(|&x| x == id);
    match (trivial(a), trivial(b)) {
        (true, true) => 1,
        (true, false) | (false, true) => 2,
        _ if a == b => 2,
        _ => 2 * lcm_orders(g, zip_mul(g, a, b)),
    }
}

/// Universal cover of the listed regular objects.
pub fn universal_cover_summary(ctx: &Context, set: &RegularObjectSet) -> Result<UniversalCoverSummary> {
    let g = &ctx.group;
    let cap = ctx.limits.cover_closure_cap;
    let r = set.classes.len();
    let k = set.parent.presentation.generator_count();
    let diag = diagonals(set, k);
    let power_bound = BigUint::from(g.order()).pow(r);
    let feasible = power_bound <= BigUint::from(cap);
    let category = set.parent.category;

    let simple = g.is_nonabelian_simple();
    let abelian = g.is_abelian() && category == Category::OrientedHypermap;
    let mut found: Vec<(OrderMethod, BigUint)> = Vec::new();
    let mut closure_tried = false;
    if feasible {
        closure_tried = true;
        let n = power_closure_order(g, &diag, cap)
            .ok_or_else(|| Error::Internal("closure exceeded a bound it should meet".into()))?;
        found.push((OrderMethod::DirectClosure, BigUint::from(n)));
    }
    if simple {
        found.push((OrderMethod::SimplePower, power_bound.clone()));
    }
    if abelian {
        let e = BigUint::from(g.exponent());
        found.push((OrderMethod::AbelianRule, &e * &e));
    }
    if found.is_empty() && !closure_tried {
        if let Some(n) = power_closure_order(g, &diag, cap) {
            found.push((OrderMethod::DirectClosure, BigUint::from(n)));
        }
    }
    if let Some((m0, n0)) = found.first() {
        for (m, n) in &found[1..] {
            if n != n0 {
                return Err(Error::CrossCheck {
                    what: format!("universal cover order for {} over {}", g.name(), set.parent.name),
                    left: format!("{m0} = {n0}"),
                    right: format!("{m} = {n}"),
                });
            }
        }
    }
    let (order_method, order) = match found.first() {
        Some((m, n)) => (*m, n.clone()),
        None => (OrderMethod::BoundOnly, power_bound),
    };
    let agreeing_methods: Vec<OrderMethod> = found.iter().map(|(m, _)| *m).collect();
    let exact = order_method != OrderMethod::BoundOnly;
    let closure_known = agreeing_methods.contains(&OrderMethod::DirectClosure);

    // Whether even words in the generators fill a subgroup of index 2.
    let even_index_two = |even: Vec<Vec<usize>>| -> Option<bool> {
        if closure_known {
            let n: usize = order.clone().try_into().ok()?;
            let half = power_closure_order(g, &even, n / 2);
            Some(half.is_some_and(|h| 2 * h == n))
        } else if simple {
            // G^r is perfect, so it has no subgroup of index 2.
            Some(false)
        } else {
            None
        }
    };

    let big_order = BigInt::from(order.clone());
    let over = |d: u64| &big_order / BigInt::from(d);
    let mut summary = UniversalCoverSummary {
        parent: set.parent.name.clone(),
        r: BigUint::from(r),
        cover_group_order: order.clone(),
        order_method,
        agreeing_methods,
        type_periods: Vec::new(),
        petrie_length: None,
        orientable: None,
        euler_characteristic: None,
        genus: None,
    };
    match category {
        Category::OrientedHypermap | Category::Triangle | Category::OrientedMap { .. } => {
            let z: Vec<usize> = zip_mul(g, &diag[0], &diag[1]).into_iter().map(|x| g.inv(x)).collect();
            let t = [
                lcm_orders(g, diag[0].iter().copied()),
                lcm_orders(g, diag[1].iter().copied()),
                lcm_orders(g, z),
            ];
            summary.type_periods = match category {
                Category::OrientedMap { .. } => vec![t[2], t[0]],
                _ => t.to_vec(),
            };
            summary.orientable = Some(true);
            if exact {
                let euler = over(t[0]) + over(t[1]) + over(t[2]) - &big_order;
                summary.genus = Some(genus_from_euler(&euler, true)?);
                summary.euler_characteristic = Some(euler);
            }
        }
        Category::Map { .. } | Category::Hypermap => {
            let (r0, r1, r2) = (&diag[0], &diag[1], &diag[2]);
            let rot = |a: &[usize], b: &[usize]| lcm_orders(g, zip_mul(g, a, b));
            summary.type_periods = if matches!(category, Category::Map { .. }) {
                summary.petrie_length = Some(lcm_orders(g, zip_mul(g, &zip_mul(g, r0, r1), r2)));
                vec![rot(r0, r1), rot(r1, r2)]
            } else {
                vec![rot(r1, r2), rot(r0, r2), rot(r0, r1)]
            };
            summary.orientable = even_index_two(vec![zip_mul(g, r0, r1), zip_mul(g, r1, r2)]);
            if exact {
                let mut euler = over(diagonal_dihedral(g, r1, r2))
                    + over(diagonal_dihedral(g, r0, r2))
                    + over(diagonal_dihedral(g, r0, r1))
                    + &big_order;
                let mut boundary = false;
                for d in [r0, r1, r2] {
                    let o = lcm_orders(g, d.iter().copied());
                    boundary |= o == 1;
                    euler -= over(o);
                }
                if !boundary {
                    if let Some(o) = summary.orientable {
                        summary.genus = Some(genus_from_euler(&euler, o)?);
                    }
                }
                summary.euler_characteristic = Some(euler);
            }
        }
        Category::OrientableSurface { genus } => {
            summary.orientable = Some(true);
            if exact {
                summary.genus = Some(BigInt::one() + &big_order * (BigInt::from(genus) - 1));
                summary.euler_characteristic = Some(&big_order * (BigInt::from(2) - 2 * BigInt::from(genus)));
            }
        }
        Category::NonorientableSurface { genus } => {
            let even = diag.iter().flat_map(|a| [zip_mul(g, &diag[0], a), zip_mul(g, a, &diag[0])]).collect();
            summary.orientable = even_index_two(even);
            if exact {
                let euler = &big_order * (BigInt::from(2) - BigInt::from(genus));
                if let Some(o) = summary.orientable {
                    summary.genus = Some(genus_from_euler(&euler, o)?);
                }
                summary.euler_characteristic = Some(euler);
            }
        }
        Category::Generic => {
            summary.type_periods = diag.iter().map(|d| lcm_orders(g, d.iter().copied())).collect();
        }
    }
    Ok(summary)
}

/// `⌊|G| |Z(G)| / |Out G|⌋`, an upper bound for the number of regular
/// oriented hypermaps with group `G`.
pub fn epi_upper_bound(ctx: &Context) -> Result<BigUint> {
    let g = &ctx.group;
    let n = BigUint::from(g.order());
    let z = BigUint::from(g.centre().order());
    let aut = BigUint::from(ctx.automorphisms()?.len());
    let inn = &n / &z;
    // |Out| = |Aut| / |Inn|
    Ok(n * z * inn / aut)
}
