//! Homomorphism counts from character sums.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Signed;

use super::table::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::Period;

fn to_count(table: &CharacterTable, v: &Cyclotomic) -> Result<BigUint> {
    let corrupt = |reason: String| Error::CorruptTable {
        table: table.group.clone(),
        reason,
    };
    let i = v
        .as_rational_integer()
        .map_err(|_| corrupt(format!("character sum {v} is not an integer")))?;
    if i.is_negative() {
        return Err(corrupt(format!("character sum {i} is negative")));
    }
    Ok(i.magnitude().clone())
}

fn rational(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Number of solutions of `x_1 ... x_k = 1` with `x_i` in the given classes:
/// `|C_1|...|C_k|/|H| Σ_χ χ(x_1)...χ(x_k)/χ(1)^{k-2}`.
pub fn frobenius_class_solution_count(table: &CharacterTable, classes: &[usize]) -> Result<BigUint> {
    let k = classes.len();
    if k < 2 {
        return Err(Error::Argument("need at least two classes".into()));
    }
    if let Some(&c) = classes.iter().find(|&&c| c >= table.class_count()) {
        return Err(Error::Argument(format!("class index {c} out of range")));
    }
    let degrees = table.degrees();
    let mut sum = Cyclotomic::zero();
    for (row, d) in table.chars.iter().zip(&degrees) {
        let mut term = Cyclotomic::one();
        for &c in classes {
            term = &term * &row[c];
        }
        sum = &sum + &term.scale(&rational(1, BigInt::from(*d).pow(k as u32 - 2)));
    }
    let mut factor = rational(1, table.order());
    for &c in classes {
        factor *= BigRational::from_integer(table.classes[c].size.into());
    }
    to_count(table, &sum.scale(&factor))
}

/// Homomorphisms from the polygonal group with the given periods, summing the
/// class formula over all admissible class tuples. With `exact`, each
/// generator must have order exactly its period.
pub fn hom_count_polygonal(table: &CharacterTable, periods: &[u64], exact: bool) -> Result<BigUint> {
    let k = periods.len();
    if k < 2 {
        return Err(Error::Argument("need at least two periods".into()));
    }
    let degrees = table.degrees();
    let admissible = |m: u64, order: u64| {
        if exact {
            Period::Finite(m).is_exact(order)
        } else {
            Period::Finite(m).admits(order)
        }
    };
    let mut sum = Cyclotomic::zero();
    for (row, d) in table.chars.iter().zip(&degrees) {
        // the sum over class tuples factors into one class sum per period
        let mut term = Cyclotomic::one();
        for &m in periods {
            let s: Cyclotomic = table
                .classes
                .iter()
                .enumerate()
                .filter(|(_, c)| admissible(m, c.order))
                .map(|(i, c)| row[i].scale(&BigRational::from_integer(c.size.into())))
                .sum();
            term = &term * &s;
        }
        sum = &sum + &term.scale(&rational(1, BigInt::from(*d).pow(k as u32 - 2)));
    }
    to_count(table, &sum.scale(&rational(1, table.order())))
}

/// `|H|^{2g-1} Σ_χ χ(1)^{2-2g}`.
pub fn hom_count_orientable_surface(table: &CharacterTable, genus: u32) -> Result<BigUint> {
    if genus == 0 {
        return Err(Error::Argument("genus must be at least 1".into()));
    }
    let n = BigInt::from(table.order());
    let mut sum = BigRational::from_integer(0.into());
    for d in table.degrees() {
        sum += rational(1, BigInt::from(d).pow(2 * genus - 2));
    }
    let v = sum * BigRational::from_integer(n.pow(2 * genus - 1));
    to_count(table, &Cyclotomic::from_rational(v))
}

/// `|H|^{g-1} Σ_χ c_χ^g χ(1)^{2-g}` with `c_χ` the Frobenius–Schur indicator.
pub fn hom_count_nonorientable_surface(table: &CharacterTable, genus: u32) -> Result<BigUint> {
    if genus == 0 {
        return Err(Error::Argument("genus must be at least 1".into()));
    }
    let n = BigInt::from(table.order());
    let mut sum = BigRational::from_integer(0.into());
    for (row, d) in table.degrees().into_iter().enumerate() {
        let c = table.fs_indicator(row)?;
        if c == 0 {
            continue;
        }
        let sign = if c < 0 && genus % 2 == 1 { -1 } else { 1 };
        let d = BigRational::from_integer(d.into());
        let power = if genus <= 2 {
            num_traits::pow(d, (2 - genus) as usize)
        } else {
            num_traits::pow(d.recip(), (genus - 2) as usize)
        };
        sum += power * BigRational::from_integer(sign.into());
    }
    let scale = BigRational::from_integer(n.pow(genus - 1));
    to_count(table, &Cyclotomic::from_rational(sum * scale))
}
