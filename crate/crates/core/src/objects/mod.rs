//! Geometric invariants of regular objects, the outer automorphism group
//! actions on them, and their universal covers.

mod cover;
mod ops;

pub use cover::{epi_upper_bound, universal_cover_summary, OrderMethod, UniversalCoverSummary};
pub use ops::{
    apply_operation, commutator_order, h_operations, invariance_report, omega_generators, omega_orbits,
    InvarianceTarget, OperationSpec,
};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use serde::Serialize;

use crate::enumerate::EpimorphismClass;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::homcount::{Category, Parent};

/// Type, counts and surface data of one regular object.
///
/// Counts use the flag (or dart) complex: for flag categories the Euler
/// characteristic is `V + E + F - Σ |G|/|⟨r_i⟩| + |G|`, which is `V - E + F`
/// whenever no generator is trivial. Oriented categories count
/// `V + E + F - |G|` with `E` the number of hyperedges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObjectInvariants {
    pub category: String,
    pub type_periods: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub petrie_length: Option<u64>,
    #[serde(serialize_with = "opt_decimal")]
    pub vertices: Option<BigUint>,
    #[serde(serialize_with = "opt_decimal")]
    pub edges: Option<BigUint>,
    #[serde(serialize_with = "opt_decimal")]
    pub faces: Option<BigUint>,
    #[serde(serialize_with = "opt_decimal")]
    pub euler_characteristic: Option<BigInt>,
    pub orientable: Option<bool>,
    /// `None` when the surface has boundary or nothing geometric is attached.
    #[serde(serialize_with = "opt_decimal")]
    pub genus: Option<BigInt>,
}

pub(crate) fn opt_decimal<T: std::fmt::Display, S: serde::Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl ObjectInvariants {
    fn empty(category: &str) -> Self {
        ObjectInvariants {
            category: category.to_string(),
            type_periods: Vec::new(),
            petrie_length: None,
            vertices: None,
            edges: None,
            faces: None,
            euler_characteristic: None,
            orientable: None,
            genus: None,
        }
    }
}

/// Genus from the Euler characteristic: `(2 - χ)/2` orientable, `2 - χ` otherwise.
pub fn genus_from_euler(euler: &BigInt, orientable: bool) -> Result<BigInt> {
    let two = BigInt::from(2);
    let d = &two - euler;
    if !orientable {
        return Ok(d);
    }
    let (q, rem) = d.div_rem(&two);
    if rem != BigInt::from(0) {
        return Err(Error::Consistency(format!("odd Euler characteristic {euler} on an orientable surface")));
    }
    Ok(q)
}

/// Order of `⟨a, b⟩` for elements of order at most 2.
pub(crate) fn dihedral_order(g: &FiniteGroup, a: usize, b: usize) -> u64 {
    let id = g.identity();
    match (a == id, b == id) {
        (true, true) => 1,
        (true, false) | (false, true) => 2,
        _ if a == b => 2,
        _ => 2 * g.element_order(g.mul(a, b)),
    }
}

fn whole(n: usize, d: u64) -> BigUint {
    BigUint::from(n as u64 / d)
}

/// Invariants of an oriented hypermap given by `(x, y)`, or `(x, y, z)` with `xyz = 1`.
pub fn hypermap_invariants(g: &FiniteGroup, images: &[usize]) -> Result<ObjectInvariants> {
    let (x, y) = match images {
        [x, y] | [x, y, _] => (*x, *y),
        _ => return Err(Error::Argument("a hypermap needs two or three generator images".into())),
    };
    let z = g.inv(g.mul(x, y));
    let n = g.order();
    let t = [g.element_order(x), g.element_order(y), g.element_order(z)];
    let [v, e, f] = t.map(|o| whole(n, o));
    let euler = BigInt::from(v.clone()) + BigInt::from(e.clone()) + BigInt::from(f.clone()) - BigInt::from(n);
    Ok(ObjectInvariants {
        type_periods: t.to_vec(),
        vertices: Some(v),
        edges: Some(e),
        faces: Some(f),
        orientable: Some(true),
        genus: Some(genus_from_euler(&euler, true)?),
        euler_characteristic: Some(euler),
        ..ObjectInvariants::empty("H+")
    })
}

/// Invariants of a map. Flag form `(r0, r1, r2)` gives type `{p, q}` with
/// `p = o(r0 r1)` the face length and `q = o(r1 r2)` the valency; dart form
/// `(x, y)` has `x` rotating darts about a vertex and `y` reversing them.
pub fn map_invariants(g: &FiniteGroup, images: &[usize]) -> Result<ObjectInvariants> {
    match *images {
        [x, y] => {
            let mut inv = hypermap_invariants(g, &[x, y])?;
            let [q, _, p] = [inv.type_periods[0], inv.type_periods[1], inv.type_periods[2]];
            inv.category = "M+".into();
            inv.type_periods = vec![p, q];
            Ok(inv)
        }
        [r0, r1, r2] => {
            let mut inv = flag_invariants(g, r0, r1, r2)?;
            inv.category = "M".into();
            let p = g.element_order(g.mul(r0, r1));
            let q = g.element_order(g.mul(r1, r2));
            inv.type_periods = vec![p, q];
            inv.petrie_length = Some(g.element_order(g.mul(g.mul(r0, r1), r2)));
            Ok(inv)
        }
        _ => Err(Error::Argument("a map needs two or three generator images".into())),
    }
}

/// Counts for three involutions acting on flags; vertices, edges and faces
/// are the orbits of `⟨r1, r2⟩`, `⟨r0, r2⟩` and `⟨r0, r1⟩`.
fn flag_invariants(g: &FiniteGroup, r0: usize, r1: usize, r2: usize) -> Result<ObjectInvariants> {
    let n = g.order();
    let v = whole(n, dihedral_order(g, r1, r2));
    let e = whole(n, dihedral_order(g, r0, r2));
    let f = whole(n, dihedral_order(g, r0, r1));
    let mut euler = BigInt::from(&v + &e + &f) + BigInt::from(n);
    let mut boundary = false;
    for r in [r0, r1, r2] {
        let o = g.element_order(r);
        boundary |= o == 1;
        euler -= BigInt::from(n as u64 / o);
    }
    let even = g.generated_order(&[g.mul(r0, r1), g.mul(r1, r2)]);
    let orientable = even * 2 == n;
    let genus = if boundary { None } else { Some(genus_from_euler(&euler, orientable)?) };
    Ok(ObjectInvariants {
        vertices: Some(v),
        edges: Some(e),
        faces: Some(f),
        euler_characteristic: Some(euler),
        orientable: Some(orientable),
        genus,
        ..ObjectInvariants::empty("H")
    })
}

/// Invariants of a hypermap given by three involutions; type is
/// `(o(r1 r2), o(r0 r2), o(r0 r1))`.
pub fn flag_hypermap_invariants(g: &FiniteGroup, images: &[usize]) -> Result<ObjectInvariants> {
    let &[r0, r1, r2] = images else {
        return Err(Error::Argument("a hypermap needs three involutions".into()));
    };
    let mut inv = flag_invariants(g, r0, r1, r2)?;
    inv.type_periods = [(r1, r2), (r0, r2), (r0, r1)]
        .map(|(a, b)| g.element_order(g.mul(a, b)))
        .to_vec();
    Ok(inv)
}

/// An unbranched regular covering of the orientable surface of genus `g`
/// has genus `1 + |G|(g - 1)`.
pub fn covering_invariants(g: &FiniteGroup, base_genus: u32) -> ObjectInvariants {
    let genus = BigInt::from(1) + BigInt::from(g.order()) * (BigInt::from(base_genus) - 1);
    ObjectInvariants {
        orientable: Some(true),
        genus: Some(genus),
        ..ObjectInvariants::empty(&format!("surface:{base_genus}"))
    }
}

/// An unbranched regular covering of the non-orientable surface with
/// `base_genus` crosscaps. It is orientable exactly when even words in the
/// generators map onto a subgroup of index 2.
pub fn nonorientable_covering_invariants(g: &FiniteGroup, base_genus: u32, images: &[usize]) -> Result<ObjectInvariants> {
    let euler = BigInt::from(g.order()) * (BigInt::from(2) - BigInt::from(base_genus));
    let even: Vec<usize> = images
        .iter()
        .flat_map(|&a| [g.mul(images[0], a), g.mul(a, images[0])])
        .collect();
    let orientable = g.generated_order(&even) * 2 == g.order();
    Ok(ObjectInvariants {
        orientable: Some(orientable),
        genus: Some(genus_from_euler(&euler, orientable)?),
        euler_characteristic: Some(euler),
        ..ObjectInvariants::empty(&format!("nonorientable:{base_genus}"))
    })
}

/// Invariants appropriate to the parent's category.
pub fn object_invariants(g: &FiniteGroup, parent: &Parent, class: &EpimorphismClass) -> Result<ObjectInvariants> {
    let images = &class.images;
    let mut inv = match parent.category {
        Category::OrientedHypermap | Category::Triangle => hypermap_invariants(g, images)?,
        Category::OrientedMap { .. } | Category::Map { .. } => map_invariants(g, images)?,
        Category::Hypermap => flag_hypermap_invariants(g, images)?,
        Category::OrientableSurface { genus } => covering_invariants(g, genus),
        Category::NonorientableSurface { genus } => nonorientable_covering_invariants(g, genus, images)?,
        Category::Generic => ObjectInvariants {
            type_periods: images.iter().map(|&x| g.element_order(x)).collect(),
            ..ObjectInvariants::empty("")
        },
    };
    inv.category = parent.name.clone();
    Ok(inv)
}

#[cfg(test)]
mod tests;
