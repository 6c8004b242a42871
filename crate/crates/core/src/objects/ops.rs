use std::collections::VecDeque;
use std::mem::discriminant;

use crate::enumerate::{Context, EpimorphismClass, RegularObjectSet};
use crate::error::{Error, Result};
use crate::homcount::{Category, Parent, Word};

/// An operation on regular objects, induced by an automorphism of the
/// parent group: the new image of generator `i` is `words[i]` evaluated
/// on the old images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationSpec {
    pub name: String,
    pub category: Category,
    pub words: Vec<Word>,
}

impl OperationSpec {
    pub fn new(name: impl Into<String>, category: Category, words: &[&str]) -> Self {
        OperationSpec {
            name: name.into(),
            category,
            words: words.iter().map(|w| Word::parse(w).expect("operation word")).collect(),
        }
    }

    fn from_words(name: String, category: Category, words: Vec<Word>) -> Self {
        OperationSpec { name, category, words }
    }
}

fn units(k: u64) -> impl Iterator<Item = u64> {
    (1..=k.max(1)).filter(move |&j| num_integer::gcd(j, k) == 1)
}

/// Wilson's operations `H_j` for `j` a unit mod `k`: the rotation about
/// each vertex is raised to the `j`th power.
pub fn h_operations(category: Category, k: u64) -> Result<Vec<OperationSpec>> {
    // H_j needs the relevant generator to have order dividing k.
    match category {
        Category::OrientedMap { valency: Some(v) } | Category::Map { valency: Some(v) } if k % v != 0 => {
            return Err(Error::Argument(format!(
                "H_j with k = {k} needs k to be a multiple of the valency {v}"
            )))
        }
        _ => {}
    }
    let a = Word::parse("a")?;
    let b = Word::parse("b")?;
    let c = Word::parse("c")?;
    let bc = Word::parse("bc")?;
    units(k)
        .map(|j| {
            let words = match category {
                Category::OrientedMap { .. } => vec![a.power(j), b.clone()],
                Category::Map { .. } => vec![a.clone(), bc.power(j).concat(&c), c.clone()],
                _ => return Err(Error::NoRoute(format!("H_j operations on {category:?}"))),
            };
            Ok(OperationSpec::from_words(format!("H{j}"), category, words))
        })
        .collect()
}

fn is_h_operation(name: &str) -> bool {
    name.strip_prefix('H').is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

/// Generators of the group of operations for the parent's category.
pub fn omega_generators(parent: &Parent) -> Result<Vec<OperationSpec>> {
    let cat = parent.category;
    Ok(match cat {
        Category::OrientedHypermap => vec![
            OperationSpec::new("swap", cat, &["b", "a"]),
            OperationSpec::new("invert-first", cat, &["A", "b"]),
            OperationSpec::new("multiply", cat, &["ab", "b"]),
        ],
        Category::OrientedMap { valency: None } => vec![
            OperationSpec::new("dual", cat, &["Ab", "b"]),
            OperationSpec::new("reversal", cat, &["A", "b"]),
        ],
        Category::OrientedMap { valency: Some(k) } => h_operations(cat, k)?,
        Category::Map { valency: None } => vec![
            OperationSpec::new("dual", cat, &["c", "b", "a"]),
            OperationSpec::new("petrie", cat, &["ac", "b", "c"]),
        ],
        Category::Map { valency: Some(k) } => {
            let mut ops = h_operations(cat, k)?;
            ops.push(OperationSpec::new("petrie", cat, &["ac", "b", "c"]));
            ops
        }
        Category::Hypermap => vec![
            OperationSpec::new("swap-01", cat, &["b", "a", "c"]),
            OperationSpec::new("swap-12", cat, &["a", "c", "b"]),
            OperationSpec::new("conjugate-0-by-1", cat, &["bab", "b", "c"]),
        ],
        _ => return Err(Error::NoRoute(format!("operations on {}", parent.name))),
    })
}

/// Rewrites the images of a class and returns the resulting class.
pub fn apply_operation(
    ctx: &Context,
    parent: &Parent,
    class: &EpimorphismClass,
    op: &OperationSpec,
) -> Result<EpimorphismClass> {
    if discriminant(&op.category) != discriminant(&parent.category) || op.words.len() != class.images.len() {
        return Err(Error::Argument(format!("operation {} does not act on {}", op.name, parent.name)));
    }
    let g = &ctx.group;
    let images: Vec<usize> = op.words.iter().map(|w| w.evaluate(g, &class.images)).collect();
    if !parent.presentation.relations().satisfied(g, &images, false) || !g.generates(&images) {
        if is_h_operation(&op.name) {
            return Err(Error::Argument(format!(
                "{} does not act on these {} objects: k must be a multiple of every vertex valency",
                op.name, parent.name
            )));
        }
        return Err(Error::Internal(format!(
            "operation {} sends {:?} outside the epimorphisms of {}",
            op.name, class.images, parent.name
        )));
    }
    Ok(EpimorphismClass {
        images: ctx.canonicalizer()?.canonical(&images),
    })
}

/// Index in `set` of each class after applying `op`.
fn permutation(ctx: &Context, set: &RegularObjectSet, op: &OperationSpec) -> Result<Vec<usize>> {
    set.classes
        .iter()
        .map(|c| {
            let image = apply_operation(ctx, &set.parent, c, op)?;
            set.position(&image.images)
                .ok_or_else(|| Error::Internal(format!("operation {} leaves the listed objects", op.name)))
        })
        .collect()
}

/// Orbits of the group generated by `ops`, each sorted, ordered by least member.
pub fn omega_orbits(ctx: &Context, set: &RegularObjectSet, ops: &[OperationSpec]) -> Result<Vec<Vec<usize>>> {
    let perms: Vec<Vec<usize>> = ops.iter().map(|op| permutation(ctx, set, op)).collect::<Result<_>>()?;
    let n = set.classes.len();
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for p in &perms {
                let j = p[i];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// What an invariance check is asked about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvarianceTarget {
    Class(usize),
    /// The universal cover is invariant under an operation exactly when the
    /// operation permutes the listed objects.
    UniversalCover,
}

/// For each operation, whether the target is fixed by it.
pub fn invariance_report(
    ctx: &Context,
    set: &RegularObjectSet,
    target: InvarianceTarget,
    ops: &[OperationSpec],
) -> Result<Vec<(String, bool)>> {
    ops.iter()
        .map(|op| {
            let fixed = match target {
                InvarianceTarget::Class(i) => {
                    let class = set
                        .classes
                        .get(i)
                        .ok_or_else(|| Error::Argument(format!("no object with index {i}")))?;
                    apply_operation(ctx, &set.parent, class, op)? == *class
                }
                InvarianceTarget::UniversalCover => {
                    let mut p = permutation(ctx, set, op)?;
                    p.sort_unstable();
                    p.dedup();
                    p.len() == set.classes.len()
                }
            };
            Ok((op.name.clone(), fixed))
        })
        .collect()
}

/// Order of the commutator `[x, y]` of a two-generator class.
pub fn commutator_order(ctx: &Context, class: &EpimorphismClass) -> Result<u64> {
    match class.images[..] {
        [x, y] => Ok(ctx.group.element_order(ctx.group.commutator(x, y))),
        _ => Err(Error::Argument("the commutator invariant needs two generators".into())),
    }
}
