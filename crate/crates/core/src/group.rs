//! Finite abelian groups given as products of cyclic factors.
//!
//! Elements are residue tuples written additively: the group product is
//! componentwise addition and the inverse is componentwise negation. Every
//! element also has a linear index in mixed radix with the last factor varying
//! fastest, which is what the array-backed structures in this crate use.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{gcd, lcm};
use crate::{Error, Result};

/// A finite abelian group `Z_{m_1} × … × Z_{m_r}`.
///
/// No normalization to invariant factors is performed: `[2, 3]` and `[6]` are
/// different presentations of isomorphic groups and compare unequal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    factors: Vec<u64>,
    strides: Vec<u64>,
    order: u64,
    exponent: u64,
}

/// An element of a [`Group`], stored as its residue tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub Vec<u64>);

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for Element {
    fn from(v: Vec<u64>) -> Self {
        Element(v)
    }
}

impl Group {
    /// Builds `Z_{factors[0]} × … × Z_{factors[r-1]}`.
    pub fn new(factors: &[u64]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::NoFactors);
        }
        let mut order: u64 = 1;
        let mut exponent: u64 = 1;
        for &m in factors {
            if m < 2 {
                return Err(Error::FactorTooSmall(m));
            }
            order = order.checked_mul(m).ok_or(Error::OrderOverflow)?;
            exponent = lcm(exponent, m).ok_or(Error::OrderOverflow)?;
        }
        if order > i64::MAX as u64 || usize::try_from(order).is_err() {
            return Err(Error::OrderOverflow);
        }
        let mut strides = alloc::vec![1u64; factors.len()];
        for j in (0..factors.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * factors[j + 1];
        }
        Ok(Group {
            factors: factors.to_vec(),
            strides,
            order,
            exponent,
        })
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The order `v`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `v` as a `usize`, for sizing arrays.
    pub fn size(&self) -> usize {
        self.order as usize
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn identity(&self) -> Element {
        Element(alloc::vec![0; self.factors.len()])
    }

    /// Builds an element from coordinates, checking arity and residue bounds.
    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        let e = Element(coords.to_vec());
        self.validate(&e)?;
        Ok(e)
    }

    pub fn validate(&self, g: &Element) -> Result<()> {
        if g.0.len() != self.factors.len() {
            return Err(Error::ArityMismatch {
                expected: self.factors.len(),
                found: g.0.len(),
            });
        }
        for (&value, &modulus) in g.0.iter().zip(&self.factors) {
            if value >= modulus {
                return Err(Error::CoordinateOutOfRange { value, modulus });
            }
        }
        Ok(())
    }

    /// The group product (componentwise addition).
    pub fn mul(&self, g: &Element, h: &Element) -> Result<Element> {
        self.validate(g)?;
        self.validate(h)?;
        Ok(Element(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.factors)
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect(),
        ))
    }

    pub fn inv(&self, g: &Element) -> Result<Element> {
        self.validate(g)?;
        Ok(Element(
            g.0.iter()
                .zip(&self.factors)
                .map(|(&a, &m)| (m - a) % m)
                .collect(),
        ))
    }

    /// Least `n ≥ 1` with `g^n` equal to the identity.
    pub fn elem_order(&self, g: &Element) -> Result<u64> {
        self.validate(g)?;
        Ok(self.order_of_coords(&g.0))
    }

    pub(crate) fn order_of_coords(&self, coords: &[u64]) -> u64 {
        coords
            .iter()
            .zip(&self.factors)
            .map(|(&a, &m)| m / gcd(a, m))
            .fold(1, |acc, o| lcm(acc, o).expect("divides the exponent"))
    }

    /// Mixed-radix index of `g` (last factor fastest).
    pub fn index_of(&self, g: &Element) -> Result<usize> {
        self.validate(g)?;
        Ok(self.index_unchecked(&g.0))
    }

    fn index_unchecked(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&a, &s)| a * s)
            .sum::<u64>() as usize
    }

    pub fn element_at(&self, index: usize) -> Result<Element> {
        if index >= self.size() {
            return Err(Error::IndexOutOfRange(index));
        }
        Ok(Element(self.coords_of(index)))
    }

    pub(crate) fn coords_of(&self, index: usize) -> Vec<u64> {
        let index = index as u64;
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (index / s) % m)
            .collect()
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size()).map(move |i| Element(self.coords_of(i)))
    }

    /// Index of `a + b` given indices of `a` and `b`.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        self.combine_index(a, b, false)
    }

    /// Index of `a - b` given indices of `a` and `b`.
    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        self.combine_index(a, b, true)
    }

    pub fn neg_index(&self, a: usize) -> usize {
        self.combine_index(0, a, true)
    }

    fn combine_index(&self, a: usize, b: usize, subtract: bool) -> usize {
        let (a, b) = (a as u64, b as u64);
        let mut out = 0u64;
        for (&m, &s) in self.factors.iter().zip(&self.strides) {
            let x = (a / s) % m;
            let y = (b / s) % m;
            let z = if subtract {
                (x + m - y) % m
            } else {
                (x + y) % m
            };
            out += z * s;
        }
        out as usize
    }

    /// Indices of the subgroup `{g : g^d = identity}`.
    pub fn torsion_subgroup(&self, d: u64) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| d % self.order_of_coords(&self.coords_of(i)) == 0)
            .collect()
    }

    /// Partitions the group into cosets of `subgroup`.
    ///
    /// Each coset is sorted by index and the cosets are listed in order of their
    /// smallest element. Fails unless `subgroup` is closed under products and
    /// inverses (and has no repeated elements).
    pub fn cosets(&self, subgroup: &[Element]) -> Result<Vec<Vec<Element>>> {
        let mut members = alloc::vec![false; self.size()];
        let mut idx = Vec::with_capacity(subgroup.len());
        for h in subgroup {
            let i = self.index_of(h)?;
            if members[i] {
                return Err(Error::NotSubgroup);
            }
            members[i] = true;
            idx.push(i);
        }
        if !members[0] {
            return Err(Error::NotSubgroup);
        }
        for &a in &idx {
            if !members[self.neg_index(a)] {
                return Err(Error::NotSubgroup);
            }
            for &b in &idx {
                if !members[self.add_index(a, b)] {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        Ok(self
            .coset_indices(&idx)
            .into_iter()
            .map(|c| c.into_iter().map(|i| Element(self.coords_of(i))).collect())
            .collect())
    }

    /// Coset partition on indices; `subgroup` must already be a subgroup.
    pub(crate) fn coset_indices(&self, subgroup: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.size()];
        let mut out = Vec::new();
        for g in 0..self.size() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = subgroup.iter().map(|&h| self.add_index(g, h)).collect();
            coset.sort_unstable();
            for &c in &coset {
                seen[c] = true;
            }
            out.push(coset);
        }
        out
    }
}

impl fmt::Display for Group {
    /// Writes the `Z5` / `Z3xZ3` form accepted by [`Group::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.trim().split(['x', 'X', '*']) {
            let digits = part
                .trim()
                .strip_prefix('Z')
                .or_else(|| part.trim().strip_prefix('C'))
                .ok_or_else(|| Error::InvalidParameters(group_spec_error(s)))?;
            let m: u64 = digits
                .parse()
                .map_err(|_| Error::InvalidParameters(group_spec_error(s)))?;
            factors.push(m);
        }
        Group::new(&factors)
    }
}

fn group_spec_error(s: &str) -> String {
    alloc::format!("malformed group spec {s:?}, expected e.g. Z5 or Z3xZ3")
}
