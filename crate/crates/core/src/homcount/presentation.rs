//! Parent groups: finite presentations and the named categories built on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Period};

/// A word in the generators: `(generator, exponent)` letters, freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for (g, e) in letters {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.0).max()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn power(&self, k: u64) -> Word {
        Word::new((0..k).flat_map(|_| self.0.iter().copied()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.0.iter().chain(&other.0).copied())
    }

    /// Value of the word at an assignment of group elements to generators.
    pub fn evaluate(&self, g: &FiniteGroup, images: &[usize]) -> usize {
        self.0
            .iter()
            .fold(g.identity(), |acc, &(x, e)| g.mul(acc, g.pow(images[x], e)))
    }

    /// Parses letters `a`-`z` as generators and upper case as inverses, with
    /// parenthesised groups and `^n` powers, e.g. `(ac)^2` or `abAB`.
    pub fn parse(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_seq(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Argument(format!("unexpected {:?} in word {s:?}", chars[pos])));
        }
        Ok(w)
    }
}

fn parse_seq(c: &[char], pos: &mut usize) -> Result<Word> {
    let mut letters = Vec::new();
    while *pos < c.len() && c[*pos] != ')' {
        let atom = match c[*pos] {
            '(' => {
                *pos += 1;
                let inner = parse_seq(c, pos)?;
                if c.get(*pos) != Some(&')') {
                    return Err(Error::Argument("unbalanced parenthesis in word".into()));
                }
                *pos += 1;
                inner
            }
            ch if ch.is_ascii_lowercase() => {
                *pos += 1;
                Word::new([(ch as usize - 'a' as usize, 1)])
            }
            ch if ch.is_ascii_uppercase() => {
                *pos += 1;
                Word::new([(ch as usize - 'A' as usize, -1)])
            }
            ch => return Err(Error::Argument(format!("unexpected {ch:?} in word"))),
        };
        let atom = if c.get(*pos) == Some(&'^') {
            *pos += 1;
            let start = *pos;
            if c.get(*pos) == Some(&'-') {
                *pos += 1;
            }
            while *pos < c.len() && c[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let text: String = c[start..*pos].iter().collect();
            let k: i64 = text
                .parse()
                .map_err(|_| Error::Argument(format!("bad exponent {text:?}")))?;
            let base = if k < 0 { atom.inverse() } else { atom };
            base.power(k.unsigned_abs())
        } else {
            atom
        };
        letters.extend(atom.0);
    }
    Ok(Word::new(letters))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &(g, e) in &self.0 {
            let ch = (b'a' + g as u8) as char;
            let ch = if e < 0 { ch.to_ascii_uppercase() } else { ch };
            if e.abs() == 1 {
                write!(f, "{ch}")?;
            } else {
                write!(f, "{ch}^{}", e.abs())?;
            }
        }
        Ok(())
    }
}

/// A finite presentation of the parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParentPresentation {
    /// Free product of cyclic groups of the given orders.
    FreeProductCyclic { orders: Vec<Period> },
    /// `⟨x_1..x_k | x_i^{m_i}, x_1...x_k⟩`; a period of 1 forces the identity.
    Polygonal { periods: Vec<u64> },
    /// `⟨a_1,b_1..a_g,b_g | [a_1,b_1]...[a_g,b_g]⟩`.
    OrientableSurface { genus: u32 },
    /// `⟨a_1..a_g | a_1^2...a_g^2⟩`.
    NonorientableSurface { genus: u32 },
    /// Generators, some declared involutions, and extra relators.
    Flag {
        generators: usize,
        involutions: Vec<bool>,
        relators: Vec<Word>,
    },
}

impl ParentPresentation {
    pub fn free_product(orders: Vec<Period>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::Argument("free product needs at least one factor".into()));
        }
        if orders.contains(&Period::Finite(0)) {
            return Err(Error::Argument("factor orders must be positive".into()));
        }
        Ok(ParentPresentation::FreeProductCyclic { orders })
    }

    pub fn polygonal(periods: Vec<u64>) -> Result<Self> {
        if periods.len() < 2 {
            return Err(Error::Argument("polygonal groups need at least two periods".into()));
        }
        if periods.contains(&0) {
            return Err(Error::Argument("periods must be positive".into()));
        }
        Ok(ParentPresentation::Polygonal { periods })
    }

    pub fn orientable_surface(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Argument("surface genus must be at least 1".into()));
        }
        Ok(ParentPresentation::OrientableSurface { genus })
    }

    pub fn nonorientable_surface(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Argument("surface genus must be at least 1".into()));
        }
        Ok(ParentPresentation::NonorientableSurface { genus })
    }

    pub fn flag(generators: usize, involutions: Vec<bool>, relators: Vec<Word>) -> Result<Self> {
        if generators == 0 || generators > 26 {
            return Err(Error::Argument("flag presentations need 1 to 26 generators".into()));
        }
        if involutions.len() != generators {
            return Err(Error::Argument("one involution flag per generator".into()));
        }
        if relators
            .iter()
            .any(|w| w.max_generator().is_some_and(|m| m >= generators))
        {
            return Err(Error::Argument("relator uses an undeclared generator".into()));
        }
        Ok(ParentPresentation::Flag {
            generators,
            involutions,
            relators,
        })
    }

    pub fn generator_count(&self) -> usize {
        match self {
            Self::FreeProductCyclic { orders } => orders.len(),
            Self::Polygonal { periods } => periods.len(),
            Self::OrientableSurface { genus } => 2 * *genus as usize,
            Self::NonorientableSurface { genus } => *genus as usize,
            Self::Flag { generators, .. } => *generators,
        }
    }

    /// The presentation as per-generator period constraints plus relators.
    pub fn relations(&self) -> Relations {
        match self {
            Self::FreeProductCyclic { orders } => Relations {
                periods: orders.clone(),
                relators: Vec::new(),
                solved_last: None,
            },
            Self::Polygonal { periods } => {
                let k = periods.len();
                let head = Word::new((0..k - 1).map(|i| (i, 1)));
                Relations {
                    periods: periods.iter().map(|&m| Period::Finite(m)).collect(),
                    relators: Vec::new(),
                    solved_last: Some(head.inverse()),
                }
            }
            Self::OrientableSurface { genus } => {
                let g = *genus as usize;
                let word = Word::new((0..g).flat_map(|i| {
                    let (a, b) = (2 * i, 2 * i + 1);
                    [(a, -1), (b, -1), (a, 1), (b, 1)]
                }));
                Relations {
                    periods: vec![Period::Infinite; 2 * g],
                    relators: vec![word],
                    solved_last: None,
                }
            }
            Self::NonorientableSurface { genus } => {
                let g = *genus as usize;
                let head = Word::new((0..g - 1).map(|i| (i, 2)));
                // a_g^2 = (a_1^2 ... a_{g-1}^2)^{-1} does not determine a_g, so keep a relator
                Relations {
                    periods: vec![Period::Infinite; g],
                    relators: vec![head.concat(&Word::new([(g - 1, 2)]))],
                    solved_last: None,
                }
            }
            Self::Flag {
                involutions,
                relators,
                ..
            } => Relations {
                periods: involutions
                    .iter()
                    .map(|&i| if i { Period::Finite(2) } else { Period::Infinite })
                    .collect(),
                relators: relators.clone(),
                solved_last: None,
            },
        }
    }
}

impl fmt::Display for ParentPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let period = |p: &Period| match p {
            Period::Finite(m) => m.to_string(),
            Period::Infinite => "inf".to_string(),
        };
        match self {
            Self::FreeProductCyclic { orders } => {
                let o: Vec<String> = orders.iter().map(period).collect();
                write!(f, "free product of cyclic groups ({})", o.join(","))
            }
            Self::Polygonal { periods } => {
                let p: Vec<String> = periods.iter().map(u64::to_string).collect();
                write!(f, "polygonal group ({})", p.join(","))
            }
            Self::OrientableSurface { genus } => write!(f, "orientable surface group of genus {genus}"),
            Self::NonorientableSurface { genus } => {
                write!(f, "non-orientable surface group of genus {genus}")
            }
            Self::Flag {
                generators,
                involutions,
                relators,
            } => {
                let inv: String = (0..*generators)
                    .filter(|&i| involutions[i])
                    .map(|i| (b'a' + i as u8) as char)
                    .collect();
                let rel: Vec<String> = relators.iter().map(Word::to_string).collect();
                write!(f, "flag presentation on {generators} generators, involutions {inv:?}, relators [{}]", rel.join(", "))
            }
        }
    }
}

/// Presentation data in the form the counting and scanning code uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relations {
    /// Each generator image must have order dividing this period.
    pub periods: Vec<Period>,
    /// Words that must evaluate to the identity.
    pub relators: Vec<Word>,
    /// When set, the last generator equals this word in the others.
    pub solved_last: Option<Word>,
}

impl Relations {
    pub fn generator_count(&self) -> usize {
        self.periods.len()
    }

    /// Whether a complete image tuple satisfies every relation.
    pub fn satisfied(&self, g: &FiniteGroup, images: &[usize], exact: bool) -> bool {
        let orders_ok = self.periods.iter().zip(images).all(|(p, &x)| {
            let o = g.element_order(x);
            if exact {
                p.is_exact(o)
            } else {
                p.admits(o)
            }
        });
        orders_ok
            && self.relators.iter().all(|w| w.evaluate(g, images) == 0)
            && self.solved_last.as_ref().is_none_or(|w| {
                let k = images.len() - 1;
                w.evaluate(g, &images[..k]) == images[k]
            })
    }
}

/// The permutational category a parent group describes, which fixes how
/// regular objects are measured and which operations act on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    /// Oriented hypermaps: parent `F_2 = ⟨x, y⟩`.
    OrientedHypermap,
    /// Oriented maps: parent `C_∞ * C_2` (or `C_k * C_2`).
    OrientedMap { valency: Option<u64> },
    /// Maps: parent `⟨r0, r1, r2⟩` with `(r0 r2)^2 = 1`, optionally `(r1 r2)^k = 1`.
    Map { valency: Option<u64> },
    /// Hypermaps: three free involutions.
    Hypermap,
    /// Oriented hypermaps of type dividing a triangle signature.
    Triangle,
    /// Unbranched coverings of an orientable surface.
    OrientableSurface { genus: u32 },
    /// Unbranched coverings of a non-orientable surface.
    NonorientableSurface { genus: u32 },
    /// Anything without a geometric interpretation attached.
    Generic,
}

/// A parent group together with its category and a short name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parent {
    pub name: String,
    pub category: Category,
    pub presentation: ParentPresentation,
}

fn parse_list(s: &str) -> Result<Vec<Period>> {
    s.split(',')
        .map(|t| match t.trim() {
            "inf" | "oo" | "∞" => Ok(Period::Infinite),
            t => t
                .parse::<u64>()
                .ok()
                .filter(|&m| m > 0)
                .map(Period::Finite)
                .ok_or_else(|| Error::Argument(format!("bad period {t:?}"))),
        })
        .collect()
}

fn finite_list(s: &str) -> Result<Vec<u64>> {
    parse_list(s)?
        .into_iter()
        .map(|p| match p {
            Period::Finite(m) => Ok(m),
            Period::Infinite => Err(Error::Argument("polygonal periods must be finite".into())),
        })
        .collect()
}

fn count(s: &str) -> Result<u64> {
    s.parse::<u64>()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| Error::Argument(format!("bad positive integer {s:?}")))
}

impl Parent {
    pub fn new(name: impl Into<String>, category: Category, presentation: ParentPresentation) -> Self {
        Parent {
            name: name.into(),
            category,
            presentation,
        }
    }

    pub fn oriented_hypermaps() -> Self {
        let p = ParentPresentation::free_product(vec![Period::Infinite; 2]).unwrap();
        Parent::new("H+", Category::OrientedHypermap, p)
    }

    pub fn oriented_maps(valency: Option<u64>) -> Self {
        let first = valency.map_or(Period::Infinite, Period::Finite);
        let p = ParentPresentation::free_product(vec![first, Period::Finite(2)]).unwrap();
        let name = valency.map_or("M+".to_string(), |k| format!("M+:{k}"));
        Parent::new(name, Category::OrientedMap { valency }, p)
    }

    /// Generators `r0, r1, r2` are the letters `a, b, c`.
    pub fn maps(valency: Option<u64>) -> Self {
        let mut relators = vec![Word::parse("(ac)^2").unwrap()];
        if let Some(k) = valency {
            relators.push(Word::parse("bc").unwrap().power(k));
        }
        let p = ParentPresentation::flag(3, vec![true; 3], relators).unwrap();
        let name = valency.map_or("M".to_string(), |k| format!("M:{k}"));
        Parent::new(name, Category::Map { valency }, p)
    }

    pub fn hypermaps() -> Self {
        let p = ParentPresentation::flag(3, vec![true; 3], Vec::new()).unwrap();
        Parent::new("H", Category::Hypermap, p)
    }

    pub fn surface(genus: u32) -> Result<Self> {
        Ok(Parent::new(
            format!("surface:{genus}"),
            Category::OrientableSurface { genus },
            ParentPresentation::orientable_surface(genus)?,
        ))
    }

    pub fn nonorientable_surface(genus: u32) -> Result<Self> {
        Ok(Parent::new(
            format!("nonorientable:{genus}"),
            Category::NonorientableSurface { genus },
            ParentPresentation::nonorientable_surface(genus)?,
        ))
    }

    pub fn triangle(l: u64, m: u64, n: u64) -> Result<Self> {
        Ok(Parent::new(
            format!("triangle:{l},{m},{n}"),
            Category::Triangle,
            ParentPresentation::polygonal(vec![l, m, n])?,
        ))
    }

    /// Parses a preset name or an inline presentation.
    ///
    /// Accepted forms: `H+`, `M+`, `M+:k`, `M`, `M:k`, `H`, `free:k`,
    /// `fpc:2,3,inf`, `triangle:l,m,n`, `polygon:m1,..,mk`, `surface:g`,
    /// `genusG`, `nonorientable:g`, `ext-triangle:l,m,n` and
    /// `flag:K:INVOLUTIONS:REL;REL` with generators named `a`, `b`, ...
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let parent = match (head, rest) {
            ("H+", "") => Parent::oriented_hypermaps(),
            ("M+", "") => Parent::oriented_maps(None),
            ("M+", k) => Parent::oriented_maps(Some(count(k)?)),
            ("M", "") => Parent::maps(None),
            ("M", k) => Parent::maps(Some(count(k)?)),
            ("H", "") => Parent::hypermaps(),
            ("free", k) => Parent::new(
                spec,
                Category::Generic,
                ParentPresentation::free_product(vec![Period::Infinite; count(k)? as usize])?,
            ),
            ("fpc", list) => Parent::new(spec, Category::Generic, ParentPresentation::free_product(parse_list(list)?)?),
            ("triangle", list) => {
                let p = finite_list(list)?;
                if p.len() != 3 {
                    return Err(Error::Argument("a triangle group has three periods".into()));
                }
                Parent::triangle(p[0], p[1], p[2])?
            }
            ("polygon", list) => {
                Parent::new(spec, Category::Generic, ParentPresentation::polygonal(finite_list(list)?)?)
            }
            ("surface", g) => Parent::surface(count(g)? as u32)?,
            ("nonorientable", g) => Parent::nonorientable_surface(count(g)? as u32)?,
            ("ext-triangle", list) => {
                let p = finite_list(list)?;
                if p.len() != 3 {
                    return Err(Error::Argument("an extended triangle group has three periods".into()));
                }
                let relators = vec![
                    Word::parse("bc")?.power(p[0]),
                    Word::parse("ca")?.power(p[1]),
                    Word::parse("ab")?.power(p[2]),
                ];
                Parent::new(spec, Category::Generic, ParentPresentation::flag(3, vec![true; 3], relators)?)
            }
            ("flag", body) => {
                let mut parts = body.splitn(3, ':');
                let k = count(parts.next().unwrap_or(""))? as usize;
                let inv_spec = parts.next().unwrap_or("");
                let mut involutions = vec![false; k];
                for ch in inv_spec.chars() {
                    let i = (ch as usize).wrapping_sub('a' as usize);
                    if i >= k {
                        return Err(Error::Argument(format!("unknown generator {ch:?}")));
                    }
                    involutions[i] = true;
                }
                let relators = parts
                    .next()
                    .unwrap_or("")
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(Word::parse)
                    .collect::<Result<Vec<_>>>()?;
                Parent::new(spec, Category::Generic, ParentPresentation::flag(k, involutions, relators)?)
            }
            (h, "") if h.starts_with("genus") => Parent::surface(count(&h[5..])? as u32)?,
            _ => return Err(Error::Argument(format!("unknown parent group {spec:?}"))),
        };
        Ok(parent)
    }
}
