use crate::error::{Error, Result};

/// The classical Möbius function of elementary number theory.
pub fn number_theoretic_moebius(mut n: u64) -> i64 {
    assert!(n > 0, "Möbius function is defined on positive integers");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Möbius value of the subgroup of order `m` in a cyclic group of order `n`.
pub fn moebius_cyclic_closed_form(n: u64, m: u64) -> Result<i64> {
    if n == 0 || m == 0 || !n.is_multiple_of(m) {
        return Err(Error::Argument(format!("{m} does not divide {n}")));
    }
    Ok(number_theoretic_moebius(n / m))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Möbius value of a codimension-`k` subgroup of the elementary abelian group of
/// order `p^d`: `(-1)^k p^(k(k-1)/2)`.
pub fn moebius_elementary_abelian_closed_form(p: u64, d: u32, k: u32) -> Result<i128> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    if k > d {
        return Err(Error::Argument(format!("codimension {k} exceeds dimension {d}")));
    }
    let exp = k * (k.saturating_sub(1)) / 2;
    let mag = (p as i128)
        .checked_pow(exp)
        .ok_or_else(|| Error::Argument("value exceeds 128 bits".into()))?;
    Ok(if k.is_multiple_of(2) { mag } else { -mag })
}

/// Number of subgroups of codimension `k` in the elementary abelian group of
/// order `p^d`, the Gaussian binomial coefficient.
pub fn gaussian_binomial(p: u64, d: u32, k: u32) -> Result<u128> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    if k > d {
        return Err(Error::Argument(format!("codimension {k} exceeds dimension {d}")));
    }
    let p = p as u128;
    let overflow = || Error::Argument("value exceeds 128 bits".into());
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = p.checked_pow(d - i).ok_or_else(overflow)? - 1;
        let b = p.checked_pow(i + 1).ok_or_else(overflow)? - 1;
        num = num.checked_mul(a).ok_or_else(overflow)?;
        den = den.checked_mul(b).ok_or_else(overflow)?;
    }
    Ok(num / den)
}
