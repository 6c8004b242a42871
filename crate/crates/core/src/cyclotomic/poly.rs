//! Cyclotomic polynomials and reduction modulo them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn compute(n: u64) -> Vec<i128> {
    // x^n - 1 divided by every Phi_d with d a proper divisor of n
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        let dd = den.len() - 1;
        let mut quot = vec![0i128; num.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = num[i + dd];
            quot[i] = c;
            for (j, &b) in den.iter().enumerate() {
                num[i + j] -= c * b;
            }
        }
        debug_assert!(num.iter().all(|&c| c == 0));
        num = quot;
    }
    num
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub(crate) fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i128>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i128>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(compute(n));
    cache.write().unwrap().insert(n, p.clone());
    p
}

/// Reduces a polynomial in place modulo the `n`-th cyclotomic polynomial.
pub(crate) fn reduce(mut a: Vec<BigRational>, n: u64) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    if a.len() > d {
        for i in (d..a.len()).rev() {
            if a[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut a[i], BigRational::zero());
            for (j, &b) in phi.iter().enumerate().take(d) {
                if b != 0 {
                    a[i - d + j] -= &c * BigRational::from_integer(b.into());
                }
            }
        }
    }
    a.resize(d, BigRational::zero());
    a
}
