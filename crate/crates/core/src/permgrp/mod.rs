//! Permutations of `{1..n}`, subgroup closure, and the catalog of the four
//! transitive groups G1..G4 of degree 6 studied here.
//!
//! Composition applies the right factor first: `(a ∘ b)(x) = a(b(x))`.

mod catalog;

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::algebra::Rational;
use crate::error::{Error, Result};

pub use catalog::{catalog, Catalog};

/// Largest degree accepted by [`Group::elements`].
pub const MAX_CLOSURE_DEGREE: usize = 12;
/// Default cap on the number of elements enumerated by a closure.
pub const CLOSURE_BUDGET: usize = 1_000_000;

/// A permutation; `images[i]` is the image of point `i + 1`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[i - 1] = true;
        }
        Ok(Perm { images: images.iter().map(|i| i - 1).collect() })
    }

    /// From 1-based cycles on `{1..n}`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = HashSet::new();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n || !touched.insert(a) {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cyc:?} in degree {n}")));
                }
                let b = cyc[(k + 1) % cyc.len()];
                images[a - 1] = b - 1;
            }
        }
        Ok(Perm { images })
    }

    /// Parse cycle notation such as `(1425)(36)`, `(1,4,2,5)(3,6)` or `()`.
    pub fn parse(n: usize, s: &str) -> Result<Perm> {
        let bad = || Error::InvalidPermutation(format!("cannot parse `{s}`"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let end = body.find(')').ok_or_else(bad)?;
            let inner = &body[..end];
            rest = &body[end + 1..];
            if inner.is_empty() {
                continue;
            }
            let points: Vec<usize> = if inner.contains(',') {
                inner.split(',').map(|t| t.parse().map_err(|_| bad())).collect::<Result<_>>()?
            } else {
                inner.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
            };
            cycles.push(points);
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// 0-based image vector.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    /// Cycles of length ≥ 2, each starting at its smallest point, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.images[j];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat(1).take(self.degree() - moved));
        CycleType::new(lens)
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Mul for &Perm {
    type Output = Perm;
    /// Composition `self ∘ rhs`; panics on degree mismatch.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("composition of permutations of different degree")
    }
}

/// Partition of the degree into cycle lengths, descending, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lens: Vec<usize>) -> CycleType {
        lens.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lens)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl std::str::FromStr for CycleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<CycleType> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad cycle type `{s}`")))?;
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad cycle type `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleType::new(parts))
    }
}

/// A finitely generated permutation group with lazily enumerated elements.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    name: Option<String>,
    elements: OnceLock<Vec<Perm>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("gens", &self.gens)
            .finish()
    }
}

impl Group {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Group> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(Group { degree, gens, name: None, elements: OnceLock::new() })
    }

    pub fn named(mut self, name: &str) -> Group {
        self.name = Some(name.to_string());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// All elements, sorted by image vector.
    pub fn elements(&self) -> Result<&[Perm]> {
        self.elements_with_budget(CLOSURE_BUDGET)
    }

    pub fn elements_with_budget(&self, budget: usize) -> Result<&[Perm]> {
        if let Some(v) = self.elements.get() {
            return Ok(v);
        }
        if self.degree > MAX_CLOSURE_DEGREE {
            return Err(Error::Unsupported(format!(
                "closure limited to degree {MAX_CLOSURE_DEGREE}, got {}",
                self.degree
            )));
        }
        let v = closure(self.degree, &self.gens, budget)?;
        let _ = self.elements.set(v);
        Ok(self.elements.get().expect("just set"))
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        Ok(self.elements()?.binary_search(p).is_ok())
    }

    pub fn is_subgroup_of(&self, g: &Group) -> Result<bool> {
        if self.degree != g.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree));
        }
        for h in &self.gens {
            if !g.contains(h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Normality of `self` in `g`; requires `self ≤ g`.
    pub fn is_normal_in(&self, g: &Group) -> Result<bool> {
        if !self.is_subgroup_of(g)? {
            return Ok(false);
        }
        for x in &g.gens {
            let xi = x.inverse();
            for h in &self.gens {
                if !self.contains(&(&(x * h) * &xi))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return true;
        }
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &self.gens {
                let j = g.apply(i);
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Intersection, with a small generating set picked greedily.
    pub fn intersect(&self, other: &Group) -> Result<Group> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let b: BTreeSet<&Perm> = other.elements()?.iter().collect();
        let common: Vec<Perm> = self.elements()?.iter().filter(|p| b.contains(p)).cloned().collect();
        let mut gens: Vec<Perm> = Vec::new();
        let mut span: BTreeSet<Perm> = BTreeSet::from([Perm::identity(self.degree)]);
        for p in &common {
            if !span.contains(p) {
                gens.push(p.clone());
                span = closure(self.degree, &gens, CLOSURE_BUDGET)?.into_iter().collect();
            }
        }
        let g = Group::new(self.degree, gens)?;
        let _ = g.elements.set(common);
        Ok(g)
    }

    /// Frequency of each cycle type among the elements, as exact fractions.
    pub fn cycle_census(&self) -> Result<BTreeMap<CycleType, Rational>> {
        let els = self.elements()?;
        let mut counts: BTreeMap<CycleType, i64> = BTreeMap::new();
        for e in els {
            *counts.entry(e.cycle_type()).or_default() += 1;
        }
        let n = els.len() as i64;
        counts
            .into_iter()
            .map(|(k, c)| Ok((k, Rational::new(c, n)?)))
            .collect()
    }
}

fn closure(degree: usize, gens: &[Perm], budget: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= budget {
                    return Err(Error::ClosureBudgetExceeded(budget));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    // finite group: closure under products is closure under inverses
    let mut v: Vec<Perm> = seen.into_iter().collect();
    v.sort();
    Ok(v)
}

#[cfg(test)]
mod tests;
