//! Small constructors for the standard families used in tests and tools.

use super::group::FiniteGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::limits::Limits;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    Permutation::from_cycles(degree, &[points.into_iter().collect()]).expect("valid cycle")
}

pub fn trivial() -> FiniteGroup {
    FiniteGroup::generate("1", 1, vec![], &Limits::default()).expect("trivial group")
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Argument("cyclic group of order 0".into()));
    }
    FiniteGroup::generate(format!("C{n}"), n, vec![cycle(n, 0..n)], &Limits::default())
}

/// Dihedral group of order `2n` on `n` points (`n >= 3`).
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::Argument(format!("dihedral group D{n} needs n >= 3")));
    }
    let reflection: Vec<Vec<usize>> = (1..n)
        .filter(|&i| i < n - i)
        .map(|i| vec![i, n - i])
        .collect();
    let s = Permutation::from_cycles(n, &reflection)?;
    FiniteGroup::generate(format!("D{n}"), n, vec![cycle(n, 0..n), s], &Limits::default())
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let gens = if n < 2 {
        vec![]
    } else {
        vec![cycle(n, 0..n), cycle(n, [0, 1])]
    };
    FiniteGroup::generate(format!("S{n}"), n.max(1), gens, &Limits::default())
}

pub fn alternating(n: usize) -> Result<FiniteGroup> {
    let gens = if n < 3 {
        vec![]
    } else if n % 2 == 1 {
        vec![cycle(n, 0..n), cycle(n, [0, 1, 2])]
    } else {
        vec![cycle(n, 1..n), cycle(n, [0, 1, 2])]
    };
    FiniteGroup::generate(format!("A{n}"), n.max(1), gens, &Limits::default())
}

pub fn klein_four() -> FiniteGroup {
    let a = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let b = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    FiniteGroup::generate("V4", 4, vec![a, b], &Limits::default()).unwrap()
}

/// `PSL(2, p)` acting on the projective line `{0, …, p-1, ∞ = p}`.
pub fn psl2(p: usize) -> Result<FiniteGroup> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    let inf = p;
    let translate: Vec<usize> = (0..=p).map(|z| if z == inf { inf } else { (z + 1) % p }).collect();
    // z -> -1/z
    let invert: Vec<usize> = (0..=p)
        .map(|z| {
            if z == inf {
                0
            } else if z == 0 {
                inf
            } else {
                let zi = (1..p).find(|&y| (y * z) % p == 1).unwrap();
                (p - zi) % p
            }
        })
        .collect();
    FiniteGroup::generate(
        format!("L2({p})"),
        p + 1,
        vec![Permutation::from_images(translate)?, Permutation::from_images(invert)?],
        &Limits::default(),
    )
}
