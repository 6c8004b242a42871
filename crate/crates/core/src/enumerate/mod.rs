//! Counting and listing regular objects with a given automorphism group.
//!
//! Regular objects with group `G` correspond to normal subgroups of the
//! parent with quotient `G`, i.e. to epimorphisms onto `G` up to `Aut G`.

mod canonical;

pub use canonical::Canonicalizer;

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{Automorphism, FiniteGroup};
use crate::homcount::{self, CharacterTable, Method, Parent, ParentPresentation};
use crate::lattice::{self, MoebiusTable, SubgroupLattice};
use crate::limits::Limits;
use crate::par;

/// A group with its optional character table and lazily computed lattice data.
pub struct Context {
    pub group: FiniteGroup,
    pub table: Option<CharacterTable>,
    pub limits: Limits,
    lattice: OnceLock<SubgroupLattice>,
    moebius: OnceLock<MoebiusTable>,
    canonicalizer: OnceLock<Canonicalizer>,
}

impl Context {
    pub fn new(group: FiniteGroup, table: Option<CharacterTable>, limits: Limits) -> Self {
        Context {
            group,
            table,
            limits,
            lattice: OnceLock::new(),
            moebius: OnceLock::new(),
            canonicalizer: OnceLock::new(),
        }
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        if let Some(l) = self.lattice.get() {
            return Ok(l);
        }
        let l = lattice::all_subgroups(&self.group, &self.limits)?;
        Ok(self.lattice.get_or_init(|| l))
    }

    pub fn moebius(&self) -> Result<&MoebiusTable> {
        if let Some(m) = self.moebius.get() {
            return Ok(m);
        }
        let m = self.lattice()?.moebius(&self.limits)?;
        Ok(self.moebius.get_or_init(|| m))
    }

    pub fn automorphisms(&self) -> Result<&[Automorphism]> {
        self.group.automorphisms(&self.limits)
    }

    pub fn canonicalizer(&self) -> Result<&Canonicalizer> {
        if let Some(c) = self.canonicalizer.get() {
            return Ok(c);
        }
        let c = Canonicalizer::new(&self.group, self.automorphisms()?);
        Ok(self.canonicalizer.get_or_init(|| c))
    }

    /// Number of conjugacy classes of core-free subgroups.
    pub fn corefree_class_count(&self) -> Result<usize> {
        Ok(lattice::corefree_class_count(&self.group, self.lattice()?))
    }
}

/// `|Epi(Γ, G)| = Σ_{H ≤ G} µ_G(H) |Hom(Γ, H)|`, summed one subgroup class at a time.
pub fn epi_count(ctx: &Context, presentation: &ParentPresentation, method: Method) -> Result<BigUint> {
    let g = &ctx.group;
    let lattice = ctx.lattice()?;
    let mu = ctx.moebius()?;
    let top = lattice.whole_index();
    let jobs: Vec<usize> = (0..lattice.classes().len())
        .filter(|&c| mu.get(lattice.classes()[c].representative) != 0)
        .collect();
    let sub_method = if method == Method::Oracle { Method::Oracle } else { Method::Auto };
    let terms = par::map_slice(&ctx.limits, &jobs, |&c| -> Result<BigInt> {
        let class = &lattice.classes()[c];
        let rep = class.representative;
        let (table, m) = if rep == top {
            (ctx.table.as_ref(), method)
        } else {
            (None, sub_method)
        };
        let members = lattice.subgroup(rep).members();
        let hom = homcount::hom_count_in(g, members, presentation, table, false, m, &ctx.limits)?;
        Ok(BigInt::from(mu.get(rep)) * BigInt::from(class.size()) * BigInt::from(hom.value))
    });
    let mut total = BigInt::zero();
    for t in terms {
        total += t?;
    }
    if total.is_negative() {
        return Err(Error::Consistency(format!("negative epimorphism count {total}")));
    }
    let aut = ctx.automorphisms()?.len();
    if !total.is_multiple_of(&BigInt::from(aut)) {
        return Err(Error::Consistency(format!(
            "epimorphism count {total} is not divisible by |Aut G| = {aut}"
        )));
    }
    Ok(total.magnitude().clone())
}

/// Number of regular objects: `|Epi(Γ, G)| / |Aut G|`.
pub fn r_count(ctx: &Context, presentation: &ParentPresentation, method: Method) -> Result<BigUint> {
    let epi = epi_count(ctx, presentation, method)?;
    Ok(epi / BigUint::from(ctx.automorphisms()?.len()))
}

/// Number of objects with monodromy group `G`: `r(G) c(G)`.
pub fn m_count(ctx: &Context, presentation: &ParentPresentation, method: Method) -> Result<BigUint> {
    Ok(r_count(ctx, presentation, method)? * BigUint::from(ctx.corefree_class_count()?))
}

/// One regular object: an epimorphism onto `G`, given by generator images,
/// in its lexicographically least form under `Aut G`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpimorphismClass {
    pub images: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RegularObjectSet {
    pub parent: Parent,
    pub classes: Vec<EpimorphismClass>,
    pub epi_count: BigUint,
    pub aut_order: usize,
}

impl RegularObjectSet {
    pub fn r(&self) -> usize {
        self.classes.len()
    }

    pub fn position(&self, images: &[usize]) -> Option<usize> {
        self.classes.binary_search_by(|c| c.images.as_slice().cmp(images)).ok()
    }
}

/// Lists every regular object by scanning generator tuples. With
/// `cross_check` the count is compared against the Möbius route.
pub fn enumerate_regular_objects(ctx: &Context, parent: &Parent, cross_check: bool) -> Result<RegularObjectSet> {
    let g = &ctx.group;
    let canon = ctx.canonicalizer()?;
    let relations = parent.presentation.relations();
    let mut found = homcount::scan_tuples(g, &(0..g.order()).collect::<Vec<_>>(), &relations, false, &ctx.limits, |t| {
        g.generates(t).then(|| canon.canonical(t))
    })?;
    let epis = found.len();
    found.sort_unstable();
    found.dedup();
    let aut = ctx.automorphisms()?.len();
    if found.len() * aut != epis {
        return Err(Error::Consistency(format!(
            "{} classes times |Aut G| = {aut} does not match {epis} epimorphisms",
            found.len()
        )));
    }
    if cross_check {
        let r = r_count(ctx, &parent.presentation, Method::Auto)?;
        if r != BigUint::from(found.len()) {
            return Err(Error::CrossCheck {
                what: format!("number of regular objects for {} with group {}", parent.name, g.name()),
                left: format!("enumeration = {}", found.len()),
                right: format!("Möbius inversion = {r}"),
            });
        }
    }
    Ok(RegularObjectSet {
        parent: parent.clone(),
        classes: found.into_iter().map(|images| EpimorphismClass { images }).collect(),
        epi_count: BigUint::from(epis),
        aut_order: aut,
    })
}

/// The number of regular oriented hypermaps with group `L_2(p)`:
/// `(p+1)(p²-2p-1)/4 - ε`, with `ε` fixed by `p` mod 5 and mod 8.
pub fn l2p_formula(p: u64) -> Result<BigInt> {
    let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if p < 5 || !prime {
        return Err(Error::Argument(format!("{p} is not a prime at least 5")));
    }
    let plus_minus_one_5 = matches!(p % 5, 1 | 4);
    let plus_minus_one_8 = matches!(p % 8, 1 | 7);
    let eps = if p == 5 {
        2
    } else {
        match (plus_minus_one_5, plus_minus_one_8) {
            (true, true) => 49,
            (true, false) => 40,
            (false, true) => 11,
            (false, false) => 2,
        }
    };
    let p = BigInt::from(p);
    let main = (&p + 1u32) * (&p * &p - 2u32 * &p - 1u32);
    Ok(main / 4u32 - eps)
}

#[cfg(test)]
mod tests;
