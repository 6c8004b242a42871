//! Counting homomorphisms from a parent group into a finite group.

mod character;
mod oracle;
mod presentation;
mod table;

pub use character::{
    frobenius_class_solution_count, hom_count_nonorientable_surface, hom_count_orientable_surface,
    hom_count_polygonal,
};
pub use oracle::{brute_force_relation_count, class_product_oracle};
pub(crate) use oracle::scan_tuples;
pub use presentation::{Category, Parent, ParentPresentation, Relations, Word};
pub use table::{CharacterTable, ClassData};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Period};
use crate::limits::Limits;

/// Which counting routes to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Formula when one applies, cross-checked by the oracle when it fits the budget.
    #[default]
    Auto,
    /// Closed form or character sum only.
    Character,
    /// Brute-force oracle only.
    Oracle,
    /// Both, which must agree.
    Both,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "character" => Ok(Method::Character),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            _ => Err(Error::Argument(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    Character,
    Oracle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ClosedForm => "closed-form",
            Route::Character => "character",
            Route::Oracle => "oracle",
        })
    }
}

/// A count with the value each route produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCount {
    pub value: BigUint,
    pub routes: Vec<(Route, BigUint)>,
}

/// `Π_i Σ_{m | m_i} |H|_m`: images of order dividing each factor order.
pub fn hom_count_free_product_cyclic(h: &FiniteGroup, orders: &[Period]) -> BigUint {
    orders
        .iter()
        .map(|&p| BigUint::from(h.count_elements_dividing(p)))
        .product()
}

/// As above with exact orders, i.e. embedding every finite factor.
pub fn smooth_hom_count_free_product_cyclic(h: &FiniteGroup, orders: &[Period]) -> BigUint {
    orders
        .iter()
        .map(|&p| BigUint::from(h.count_elements_of_order(p)))
        .product()
}

fn formula(
    h: &FiniteGroup,
    members: &[usize],
    presentation: &ParentPresentation,
    table: Option<&CharacterTable>,
    smooth: bool,
) -> Option<Result<(Route, BigUint)>> {
    let whole = members.len() == h.order();
    if let ParentPresentation::FreeProductCyclic { orders } = presentation {
        let count = |p: Period| {
            members
                .iter()
                .filter(|&&x| {
                    let o = h.element_order(x);
                    if smooth { p.is_exact(o) } else { p.admits(o) }
                })
                .count()
        };
        let v = if whole {
            if smooth {
                smooth_hom_count_free_product_cyclic(h, orders)
            } else {
                hom_count_free_product_cyclic(h, orders)
            }
        } else {
            orders.iter().map(|&p| BigUint::from(count(p))).product()
        };
        return Some(Ok((Route::ClosedForm, v)));
    }
    let table = table.filter(|_| whole)?;
    if table.order() != h.order() as u64 {
        return Some(Err(Error::CrossCheck {
            what: format!("table {} against group {}", table.group, h.name()),
            left: format!("order {}", table.order()),
            right: format!("order {}", h.order()),
        }));
    }
    let v = match presentation {
        ParentPresentation::Polygonal { periods } => hom_count_polygonal(table, periods, smooth),
        // surface groups are torsion free, so every homomorphism is smooth
        ParentPresentation::OrientableSurface { genus } => hom_count_orientable_surface(table, *genus),
        ParentPresentation::NonorientableSurface { genus } => {
            hom_count_nonorientable_surface(table, *genus)
        }
        _ => return None,
    };
    Some(v.map(|v| (Route::Character, v)))
}

/// Counts homomorphisms into the subgroup of `h` with the given members.
/// A table is only used when the members are the whole group.
pub(crate) fn hom_count_in(
    h: &FiniteGroup,
    members: &[usize],
    presentation: &ParentPresentation,
    table: Option<&CharacterTable>,
    smooth: bool,
    method: Method,
    limits: &Limits,
) -> Result<HomCount> {
    if smooth && matches!(presentation, ParentPresentation::Flag { .. }) {
        return Err(Error::NoRoute(
            "smooth counts are only defined for free products of cyclic groups, polygonal groups and surface groups".into(),
        ));
    }
    let mut routes = Vec::new();
    let want_formula = method != Method::Oracle;
    let want_oracle = method != Method::Character;
    if want_formula {
        match formula(h, members, presentation, table, smooth) {
            Some(r) => routes.push(r?),
            None if method == Method::Character || method == Method::Both => {
                return Err(Error::NoRoute(format!(
                    "no formula for {presentation} without a character table"
                )))
            }
            None => {}
        }
    }
    if want_oracle {
        match oracle::relation_count_in(h, members, presentation, smooth, limits) {
            Ok(v) => routes.push((Route::Oracle, BigUint::from(v))),
            // in auto mode an oversized oracle is skipped when a formula answered
            Err(Error::Budget { .. }) if method == Method::Auto && !routes.is_empty() => {}
            Err(e) => return Err(e),
        }
    }
    let value = routes
        .first()
        .map(|r| r.1.clone())
        .ok_or_else(|| Error::NoRoute(format!("no route for {presentation}")))?;
    if let Some((route, other)) = routes.iter().find(|r| r.1 != value) {
        return Err(Error::CrossCheck {
            what: format!("homomorphism count for {presentation} into {}", h.name()),
            left: format!("{} = {}", routes[0].0, value),
            right: format!("{route} = {other}"),
        });
    }
    Ok(HomCount { value, routes })
}

/// Counts homomorphisms (or smooth homomorphisms) from the parent group into `h`.
pub fn hom_count(
    h: &FiniteGroup,
    presentation: &ParentPresentation,
    table: Option<&CharacterTable>,
    smooth: bool,
    method: Method,
    limits: &Limits,
) -> Result<HomCount> {
    let members: Vec<usize> = (0..h.order()).collect();
    hom_count_in(h, &members, presentation, table, smooth, method, limits)
}
