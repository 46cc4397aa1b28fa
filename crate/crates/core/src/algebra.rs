//! Integer group-algebra arithmetic and the definition-level SEDF verifier.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::group::{Element, Group};
use crate::{Error, Result};

/// An element `Σ_g n_g g` of the integer group algebra `Z[G]`, stored densely by
/// element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElem {
    group: Group,
    coeffs: Vec<i64>,
}

impl AlgElem {
    pub fn zero(group: &Group) -> Self {
        AlgElem {
            group: group.clone(),
            coeffs: alloc::vec![0; group.size()],
        }
    }

    /// The unit of the algebra (indicator of the identity).
    pub fn identity(group: &Group) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[0] = 1;
        e
    }

    pub fn from_coeffs(group: &Group, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != group.size() {
            return Err(Error::InvalidParameters(alloc::format!(
                "expected {} coefficients, got {}",
                group.size(),
                coeffs.len()
            )));
        }
        Ok(AlgElem {
            group: group.clone(),
            coeffs,
        })
    }

    /// Indicator element of a set (repeated elements are counted once).
    pub fn from_set(group: &Group, set: &[Element]) -> Result<Self> {
        let mut e = Self::zero(group);
        for g in set {
            e.coeffs[group.index_of(g)?] = 1;
        }
        Ok(e)
    }

    /// Indicator element of a set of element indices.
    pub fn from_indices(group: &Group, set: &[usize]) -> Result<Self> {
        let mut e = Self::zero(group);
        for &i in set {
            *e.coeffs.get_mut(i).ok_or(Error::IndexOutOfRange(i))? = 1;
        }
        Ok(e)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, g: &Element) -> Result<i64> {
        Ok(self.coeffs[self.group.index_of(g)?])
    }

    /// Image under the principal character: the coefficient sum.
    pub fn augmentation(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Iterator over `(index, coefficient)` with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
    }

    fn check_same_group(&self, other: &AlgElem) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &AlgElem) -> Result<AlgElem> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &AlgElem) -> Result<AlgElem> {
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &AlgElem, op: fn(i64, i64) -> Option<i64>) -> Result<AlgElem> {
        self.check_same_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b).ok_or(Error::CoefficientOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgElem {
            group: self.group.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, factor: i64) -> Result<AlgElem> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(factor).ok_or(Error::CoefficientOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(AlgElem {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// The algebra product: coefficient of `g` is `Σ_h A[h]·B[h^{-1}g]`.
    pub fn convolve(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check_same_group(other)?;
        let mut out = alloc::vec![0i64; self.coeffs.len()];
        let rhs: Vec<(usize, i64)> = other.support().collect();
        for (h, a) in self.support() {
            for &(x, b) in &rhs {
                let slot = &mut out[self.group.add_index(h, x)];
                let term = a.checked_mul(b).ok_or(Error::CoefficientOverflow)?;
                *slot = slot.checked_add(term).ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(AlgElem {
            group: self.group.clone(),
            coeffs: out,
        })
    }

    /// `Σ n_g g ↦ Σ n_g g^{-1}`.
    pub fn invert_support(&self) -> AlgElem {
        let mut out = alloc::vec![0i64; self.coeffs.len()];
        for (i, c) in self.support() {
            out[self.group.neg_index(i)] = c;
        }
        AlgElem {
            group: self.group.clone(),
            coeffs: out,
        }
    }
}

/// An ordered list of pairwise disjoint, equally sized subsets of a group.
///
/// Elements are held as sorted index lists; the order of the sets is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    group: Group,
    sets: Vec<Vec<usize>>,
    k: usize,
}

impl SetFamily {
    pub fn new(group: &Group, sets: &[Vec<Element>]) -> Result<Self> {
        let idx = sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|g| group.index_of(g))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(group, idx)
    }

    pub fn from_indices(group: &Group, mut sets: Vec<Vec<usize>>) -> Result<Self> {
        let m = sets.len();
        if m == 0 {
            return Err(Error::InvalidFamily(
                "a family needs at least one set".to_string(),
            ));
        }
        let k = sets[0].len();
        if k == 0 {
            return Err(Error::InvalidFamily("sets must be nonempty".to_string()));
        }
        let mut owner = alloc::vec![usize::MAX; group.size()];
        for (j, set) in sets.iter_mut().enumerate() {
            if set.len() != k {
                return Err(Error::InvalidFamily(alloc::format!(
                    "set {} has {} elements, expected {}",
                    j + 1,
                    set.len(),
                    k
                )));
            }
            set.sort_unstable();
            for &g in set.iter() {
                let slot = owner.get_mut(g).ok_or(Error::IndexOutOfRange(g))?;
                if *slot != usize::MAX {
                    let msg = if *slot == j {
                        alloc::format!("set {} repeats an element", j + 1)
                    } else {
                        alloc::format!("sets {} and {} are not disjoint", *slot + 1, j + 1)
                    };
                    return Err(Error::InvalidFamily(msg));
                }
                *slot = j;
            }
        }
        Ok(SetFamily {
            group: group.clone(),
            sets,
            k,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The sets as sorted element-index lists.
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set_elements(&self, j: usize) -> Vec<Element> {
        self.sets[j]
            .iter()
            .map(|&i| self.group.element_at(i).expect("valid index"))
            .collect()
    }

    pub fn indicator(&self, j: usize) -> Result<AlgElem> {
        let set = self.sets.get(j).ok_or(Error::SetIndexOutOfRange {
            index: j,
            m: self.m(),
        })?;
        AlgElem::from_indices(&self.group, set)
    }

    /// Indicator of the union `𝒟` of all sets.
    pub fn union_indicator(&self) -> AlgElem {
        let mut e = AlgElem::zero(&self.group);
        for &g in self.sets.iter().flatten() {
            e.coeffs[g] = 1;
        }
        e
    }

    /// The family translated by the element with index `t`.
    pub fn translate(&self, t: usize) -> SetFamily {
        let sets = self
            .sets
            .iter()
            .map(|s| {
                let mut s: Vec<usize> = s.iter().map(|&g| self.group.add_index(g, t)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        SetFamily {
            group: self.group.clone(),
            sets,
            k: self.k,
        }
    }

    /// `D_j 𝒟^{-1} − D_j D_j^{-1}`, i.e. `Σ_{ℓ≠j} D_j D_ℓ^{-1}` (0-based `j`).
    pub fn external_sum(&self, j: usize) -> Result<AlgElem> {
        let dj = self.indicator(j)?;
        let union_inv = self.union_indicator().invert_support();
        let internal = dj.convolve(&dj.invert_support())?;
        dj.convolve(&union_inv)?.checked_sub(&internal)
    }
}

/// Outcome of [`verify_sedf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Valid,
    /// `k²(m−1) ≠ λ(v−1)`.
    ParameterMismatch {
        lhs: u128,
        rhs: u128,
    },
    /// The external sum of set `set` (0-based) has coefficient `found` at
    /// `element` where `expected` was required.
    Invalid {
        set: usize,
        element: Element,
        expected: i64,
        found: i64,
    },
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verification::Valid)
    }
}

/// `k²(m−1) = λ(v−1)` for the given family.
pub fn parameters_hold(family: &SetFamily, lambda: u64) -> (bool, u128, u128) {
    let k = family.k() as u128;
    let lhs = k * k * (family.m() as u128 - 1);
    let rhs = lambda as u128 * (family.group().order() as u128 - 1);
    (lhs == rhs, lhs, rhs)
}

/// Checks the defining equations of a `(v, m, k, λ)`-SEDF.
///
/// The parameter equation is tested first. Otherwise each external sum is
/// compared with `λ(G − 1)`; on failure the first coefficient exceeding `λ` is
/// reported (one always exists once the parameter equation holds), and the first
/// mismatch in index order otherwise.
pub fn verify_sedf(family: &SetFamily, lambda: i64) -> Result<Verification> {
    if lambda <= 0 {
        return Err(Error::NonPositiveLambda);
    }
    let (ok, lhs, rhs) = parameters_hold(family, lambda as u64);
    if !ok {
        return Ok(Verification::ParameterMismatch { lhs, rhs });
    }
    for j in 0..family.m() {
        let sum = family.external_sum(j)?;
        let expected = |g: usize| if g == 0 { 0 } else { lambda };
        let coeffs = sum.coeffs();
        let bad = coeffs
            .iter()
            .enumerate()
            .find(|&(g, &c)| c > expected(g))
            .or_else(|| coeffs.iter().enumerate().find(|&(g, &c)| c != expected(g)));
        if let Some((g, &found)) = bad {
            return Ok(Verification::Invalid {
                set: j,
                element: family.group().element_at(g)?,
                expected: expected(g),
                found,
            });
        }
    }
    Ok(Verification::Valid)
}

/// Example-1 family `({0,…,k−1}, {k, 2k, …, k²})` in `Z_{k²+1}`.
pub fn consecutive_pair_family(k: u64) -> Result<SetFamily> {
    let v = k
        .checked_mul(k)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::OrderOverflow)?;
    let group = Group::cyclic(v)?;
    let first = (0..k as usize).collect();
    let second = (1..=k as usize).map(|i| i * k as usize).collect();
    SetFamily::from_indices(&group, alloc::vec![first, second])
}

/// The all-singletons family `({g})_{g ∈ G}`.
pub fn singleton_family(group: &Group) -> SetFamily {
    SetFamily::from_indices(group, (0..group.size()).map(|g| alloc::vec![g]).collect())
        .expect("singletons are disjoint")
}
