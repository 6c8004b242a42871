//! Ingested character tables and their validation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    pub size: u64,
    pub order: u64,
    /// Index of the class containing the squares of this class.
    pub square: usize,
    /// Optional representative, as cycles on the points of the matching
    /// group definition; lets the table be bound to a concrete group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representative: Option<Vec<Vec<usize>>>,
}

/// A character table: class data plus one row of exact values per
/// irreducible character, the first column being the degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub group: String,
    pub classes: Vec<ClassData>,
    pub chars: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    /// Parses and validates a table.
    pub fn from_json(text: &str) -> Result<Self> {
        let t: CharacterTable = serde_json::from_str(text).map_err(|e| Error::Schema {
            path: "<table>".into(),
            reason: e.to_string(),
        })?;
        t.validate()?;
        Ok(t)
    }

    fn corrupt(&self, reason: impl Into<String>) -> Error {
        Error::CorruptTable {
            table: self.group.clone(),
            reason: reason.into(),
        }
    }

    pub fn order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Degrees `χ(1)`, as integers.
    pub fn degrees(&self) -> Vec<u64> {
        self.chars
            .iter()
            .map(|row| row[0].as_rational_integer().unwrap().to_u64().unwrap())
            .collect()
    }

    fn inner(&self, a: usize, b: usize) -> Cyclotomic {
        let sum: Cyclotomic = self
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (&self.chars[a][i] * &self.chars[b][i].conj()).scale(&BigRational::from_integer(c.size.into())))
            .sum();
        sum.scale(&BigRational::new(BigInt::one(), self.order().into()))
    }

    /// Checks shape, degrees, orthogonality and the square map.
    pub fn validate(&self) -> Result<()> {
        let k = self.classes.len();
        if k == 0 {
            return Err(self.corrupt("no classes"));
        }
        if self.chars.len() != k {
            return Err(self.corrupt(format!("{} characters for {k} classes", self.chars.len())));
        }
        if self.chars.iter().any(|r| r.len() != k) {
            return Err(self.corrupt("ragged character rows"));
        }
        let first = &self.classes[0];
        if first.size != 1 || first.order != 1 {
            return Err(self.corrupt("first class must be the identity"));
        }
        let n = self.order();
        for (i, c) in self.classes.iter().enumerate() {
            if c.size == 0 || !n.is_multiple_of(c.size) || c.order == 0 || !n.is_multiple_of(c.order) {
                return Err(self.corrupt(format!("class {i} has impossible size or order")));
            }
            let sq = self
                .classes
                .get(c.square)
                .ok_or_else(|| self.corrupt(format!("class {i} squares to a missing class")))?;
            let expected = if c.order % 2 == 0 { c.order / 2 } else { c.order };
            if sq.order != expected {
                return Err(self.corrupt(format!("class {i} squares into a class of order {}", sq.order)));
            }
        }
        let mut degree_squares = BigInt::zero();
        for (j, row) in self.chars.iter().enumerate() {
            match row[0].as_rational_integer() {
                Ok(d) if d > BigInt::zero() => degree_squares += &d * &d,
                _ => return Err(self.corrupt(format!("character {j} has degree {}", row[0]))),
            }
        }
        if degree_squares != n.into() {
            return Err(self.corrupt(format!("squared degrees sum to {degree_squares}, not {n}")));
        }
        for a in 0..k {
            for b in a..k {
                let v = self.inner(a, b);
                let want = Cyclotomic::from_integer(i64::from(a == b));
                if v != want {
                    return Err(self.corrupt(format!("rows {a} and {b} have inner product {v}")));
                }
            }
        }
        for i in 0..k {
            let s: Cyclotomic = self.chars.iter().map(|row| &row[i] * &row[i].conj()).sum();
            let centralizer = Cyclotomic::from_integer(n / self.classes[i].size);
            if s != centralizer {
                return Err(self.corrupt(format!("column {i} has norm {s}")));
            }
        }
        for j in 0..k {
            self.fs_indicator(j)?;
        }
        Ok(())
    }

    /// Frobenius–Schur indicator of a row: `|H|^{-1} Σ_h χ(h²)`.
    pub fn fs_indicator(&self, row: usize) -> Result<i32> {
        let sum: Cyclotomic = self
            .classes
            .iter()
            .map(|c| self.chars[row][c.square].scale(&BigRational::from_integer(c.size.into())))
            .sum();
        let v = sum.scale(&BigRational::new(BigInt::one(), self.order().into()));
        match v.as_rational_integer().ok().and_then(|i| i.to_i32()) {
            Some(i @ -1..=1) => Ok(i),
            _ => Err(self.corrupt(format!("character {row} has indicator {v}"))),
        }
    }

    /// For each table class, the matching conjugacy class of `g`.
    ///
    /// Uses the stored representatives when present; otherwise classes are
    /// matched by (order, size), which must then be unambiguous.
    pub fn bind(&self, g: &FiniteGroup) -> Result<Vec<usize>> {
        let gc = g.conjugacy_classes();
        if gc.len() != self.classes.len() || g.order() as u64 != self.order() {
            return Err(Error::CrossCheck {
                what: format!("table {} against group {}", self.group, g.name()),
                left: format!("{} classes, order {}", self.classes.len(), self.order()),
                right: format!("{} classes, order {}", gc.len(), g.order()),
            });
        }
        let mut map = Vec::with_capacity(self.classes.len());
        for (i, c) in self.classes.iter().enumerate() {
            let target = match &c.representative {
                Some(cycles) => {
                    let p = Permutation::from_cycles(g.degree(), cycles)?;
                    let e = g
                        .index_of(&p)
                        .ok_or_else(|| self.corrupt(format!("representative of class {i} is not in {}", g.name())))?;
                    g.class_of(e)
                }
                None => {
                    let hits: Vec<usize> = (0..gc.len())
                        .filter(|&j| gc[j].element_order == c.order && gc[j].size() as u64 == c.size)
                        .collect();
                    if hits.len() != 1 {
                        return Err(self.corrupt(format!(
                            "class {i} cannot be matched without a representative"
                        )));
                    }
                    hits[0]
                }
            };
            let t = &gc[target];
            if t.element_order != c.order || t.size() as u64 != c.size {
                return Err(self.corrupt(format!("class {i} does not match its representative")));
            }
            map.push(target);
        }
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != map.len() {
            return Err(self.corrupt("two table classes bound to one group class"));
        }
        let sq = g.square_class_map();
        for (i, c) in self.classes.iter().enumerate() {
            if sq[map[i]] != map[c.square] {
                return Err(self.corrupt(format!("square map of class {i} disagrees with the group")));
            }
        }
        Ok(map)
    }
}
