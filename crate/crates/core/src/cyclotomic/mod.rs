//! Exact arithmetic in cyclotomic fields.
//!
//! A value of conductor `n` is a polynomial in `ζ_n` of degree below `φ(n)`,
//! reduced modulo the `n`-th cyclotomic polynomial. Conductors are always
//! minimal, so two values are equal exactly when their representations are.

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) use poly::{euler_phi, prime_factors};
use poly::reduce;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n > 0, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        Self::from_polynomial(n, v)
    }

    /// Reduces an arbitrary polynomial in `ζ_n` and makes the conductor minimal.
    pub fn from_polynomial(n: u64, coeffs: Vec<BigRational>) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut c = Cyclotomic {
            conductor: n,
            coeffs: reduce(coeffs, n),
        };
        c.minimize();
        c
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// The value as an integer, or an integrality error carrying the residual.
    pub fn as_rational_integer(&self) -> Result<BigInt> {
        match self.as_rational() {
            Some(q) if q.is_integer() => Ok(q.to_integer()),
            _ => Err(Error::Integrality {
                residual: self.to_string(),
            }),
        }
    }

    /// Rewrites the value over conductor `m`, a multiple of the current one.
    fn lifted(&self, m: u64) -> Vec<BigRational> {
        debug_assert_eq!(m % self.conductor, 0);
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        reduce(v, m)
    }

    fn minimize(&mut self) {
        'outer: loop {
            if self.conductor == 1 {
                return;
            }
            if self.coeffs[1..].iter().all(Zero::is_zero) {
                self.coeffs.truncate(1);
                self.conductor = 1;
                return;
            }
            for p in prime_factors(self.conductor) {
                if let Some(c) = self.descend(p) {
                    *self = c;
                    continue 'outer;
                }
            }
            return;
        }
    }

    /// The same value over conductor `n/p`, if it lies in that subfield.
    fn descend(&self, p: u64) -> Option<Cyclotomic> {
        let n = self.conductor;
        let m = n / p;
        if m.is_multiple_of(p) {
            // Phi_n(x) = Phi_m(x^p): the subfield is spanned by powers x^{pj}
            if self
                .coeffs
                .iter()
                .enumerate()
                .any(|(i, c)| !(i as u64).is_multiple_of(p) && !c.is_zero())
            {
                return None;
            }
            let coeffs = self.coeffs.iter().step_by(p as usize).cloned().collect();
            return Some(Cyclotomic { conductor: m, coeffs });
        }
        // express the value in the columns reduce_n(x^{pj}), j < phi(m)
        let width = euler_phi(m) as usize;
        let rows = self.coeffs.len();
        let mut mat: Vec<Vec<BigRational>> = vec![Vec::with_capacity(width + 1); rows];
        for j in 0..width {
            let mut col = vec![BigRational::zero(); p as usize * j + 1];
            col[p as usize * j] = BigRational::one();
            for (r, v) in reduce(col, n).into_iter().enumerate() {
                mat[r].push(v);
            }
        }
        for (r, c) in self.coeffs.iter().enumerate() {
            mat[r].push(c.clone());
        }
        let sol = solve(mat, width)?;
        Some(Cyclotomic {
            conductor: m,
            coeffs: sol,
        })
    }

    fn combine(&self, other: &Self, f: impl Fn(&[BigRational], &[BigRational], u64) -> Vec<BigRational>) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lifted(m);
        let b = other.lifted(m);
        Self::from_polynomial(m, f(&a, &b, m))
    }

    /// Complex conjugate, via the Galois action `ζ → ζ^{n-1}`.
    pub fn conj(&self) -> Self {
        self.galois(self.conductor as i64 - 1)
    }

    /// Image under `ζ_n → ζ_n^k` for `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(n as i64) as u64;
        assert_eq!(k.gcd(&n), 1, "Galois exponent must be a unit");
        let mut v = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(i as u64 * k % n) as usize] += c;
        }
        Self::from_polynomial(n, v)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Solves a consistent linear system given as an augmented matrix with
/// `width` unknowns; `None` if inconsistent.
fn solve(mut mat: Vec<Vec<BigRational>>, width: usize) -> Option<Vec<BigRational>> {
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].recip();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..=width {
                    let t = &f * &mat[r][j];
                    mat[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if mat[r..].iter().any(|row| !row[width].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); width];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = mat[i][width].clone();
    }
    Some(sol)
}

fn convolve(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, |a, b, _| a.iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.combine(rhs, |a, b, _| a.iter().zip(b).map(|(x, y)| x - y).collect())
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        self.combine(rhs, |a, b, _| convolve(a, b))
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let z = match i {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{}", self.conductor, i),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{z}")?;
            } else {
                write!(f, "{mag}*{z}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Big(String),
}

impl Num {
    fn from_big(b: &BigInt) -> Num {
        b.to_i64().map(Num::Int).unwrap_or_else(|| Num::Big(b.to_string()))
    }

    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            Num::Int(i) => Ok((*i).into()),
            Num::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    conductor: u64,
    coeffs: Vec<(Num, Num)>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Input {
    Int(i64),
    Full(Repr),
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| (Num::from_big(c.numer()), Num::from_big(c.denom())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    /// Accepts a plain integer or `{ "conductor": n, "coeffs": [[num, den], ...] }`;
    /// coefficient lists up to length `n` are reduced on load.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = match Input::deserialize(d)? {
            Input::Int(i) => return Ok(Cyclotomic::from_integer(i)),
            Input::Full(r) => r,
        };
        if repr.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        if repr.coeffs.len() as u64 > repr.conductor.max(1) {
            return Err(D::Error::custom("more coefficients than the conductor"));
        }
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for (n, d) in &repr.coeffs {
            let n = n.to_big().map_err(D::Error::custom)?;
            let d = d.to_big().map_err(D::Error::custom)?;
            if d.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n, d));
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Ok(Cyclotomic::from_polynomial(repr.conductor, coeffs))
    }
}

#[cfg(test)]
mod tests;
