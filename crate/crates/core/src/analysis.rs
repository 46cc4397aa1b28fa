//! Character-theoretic analysis of set families.
//!
//! Applying a non-principal character `χ` to the defining equation of an SEDF
//! gives, for every set `D_j`,
//!
//! ```text
//! χ(D_j)·conj(χ(𝒟)) − |χ(D_j)|² = −λ
//! ```
//!
//! where `𝒟` is the union of the sets. When `X = χ(𝒟) ≠ 0` every `χ(D_j)` is a
//! real multiple `α_j X`, the `α_j` take at most two values once `m > 3`, and the
//! sizes `(A, B)` of the two classes (the *split*) are heavily restricted. These
//! reports compute all of that exactly where equality matters and numerically
//! for display.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::{parameters_hold, verify_sedf, AlgElem, SetFamily};
use crate::arith::two_distinct_primes;
use crate::character::{all_characters, Character};
use crate::cyclotomic::{exponent_profile, profile_is_zero, ExponentProfile};
use crate::group::{Element, Group};
use crate::{Error, Result, FLOAT_TOLERANCE};

/// A character value: exact zero flag plus a floating-point approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharValue {
    pub zero: bool,
    pub value: Complex64,
}

/// `χ(D_j)` and, when `χ(𝒟) ≠ 0`, the ratio `α_j = |x_j|²/(|x_j|² − λ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SetValue {
    pub zero: bool,
    pub value: Complex64,
    pub alpha: Option<f64>,
}

/// Necessary conditions that fail for one split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SplitViolation {
    /// More than two distinct values of `χ(D_j)`.
    TooManyClasses(usize),
    /// All `χ(D_j)` equal: split `(0, m)`.
    AllEqual,
    /// Split `(1, m − 1)`.
    OneVersusRest,
    /// Split `(m/2, m/2)`.
    EvenHalves,
    /// `m = 5` requires split `(2, 3)`.
    FiveSetSplit(usize, usize),
    /// `m = 6` requires split `(2, 4)`.
    SixSetSplit(usize, usize),
    /// `αA + βB` differs from 1 by `residual`.
    AlphaSum { residual: f64 },
}

impl SplitViolation {
    pub fn code(&self) -> &'static str {
        match self {
            SplitViolation::TooManyClasses(_) => "too-many-classes",
            SplitViolation::AllEqual => "split-all-equal",
            SplitViolation::OneVersusRest => "split-one-vs-rest",
            SplitViolation::EvenHalves => "split-even-halves",
            SplitViolation::FiveSetSplit(..) => "split-m5",
            SplitViolation::SixSetSplit(..) => "split-m6",
            SplitViolation::AlphaSum { .. } => "alpha-sum",
        }
    }
}

/// Anything in a [`CharReport`] that contradicts a necessary SEDF condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    /// `χ(D_j) = 0` for the 0-based set index.
    ZeroSetSum(usize),
    /// `χ(𝒟) = 0` but `|χ(D_j)|² ≠ λ`.
    SetModulus(usize),
    Split(SplitViolation),
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::ZeroSetSum(_) => "zero-set-sum",
            Violation::SetModulus(_) => "set-modulus",
            Violation::Split(s) => s.code(),
        }
    }
}

/// Analysis of one non-principal character against a family.
#[derive(Debug, Clone, PartialEq)]
pub struct CharReport {
    pub character: Character,
    /// `X = χ(𝒟)`.
    pub total: CharValue,
    pub sets: Vec<SetValue>,
    /// Partition of the 0-based set indices by exact equality of `χ(D_j)`,
    /// each class sorted, classes ordered by first member.
    pub classes: Vec<Vec<usize>>,
    /// `(A, B)` with `A ≤ B`, present when `X ≠ 0` and there are at most two
    /// classes.
    pub split: Option<(usize, usize)>,
    /// `max_j |χ(D_j)·conj(X) − |χ(D_j)|² + λ|`, only for verified SEDFs.
    pub identity_residual: Option<f64>,
    pub violations: Vec<Violation>,
    /// For `m = 5` with split `(2, 3)`, the value of `2|X|²` (to be compared
    /// with `λ`). Informational only.
    pub five_set_norm: Option<f64>,
}

struct FamilyProfiles {
    total: ExponentProfile,
    sets: Vec<ExponentProfile>,
}

fn profiles(family: &SetFamily, chi: &Character) -> Result<FamilyProfiles> {
    let total = exponent_profile(chi, &family.union_indicator())?;
    let sets = (0..family.m())
        .map(|j| exponent_profile(chi, &family.indicator(j)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyProfiles { total, sets })
}

fn difference(a: &ExponentProfile, b: &ExponentProfile) -> ExponentProfile {
    let counts = a
        .counts()
        .iter()
        .zip(b.counts())
        .map(|(x, y)| x - y)
        .collect();
    ExponentProfile::new(a.modulus(), counts).expect("same modulus")
}

/// Exact test of `|x|² = λ` for `x` given by its profile.
fn norm_equals(chi: &Character, x: &ExponentProfile, lambda: i64) -> Result<bool> {
    let mut n = x.product(&x.conjugate())?;
    n.add_constant(-lambda)?;
    Ok(profile_is_zero(chi, &n))
}

/// Builds the report for `chi`, which must be non-principal.
pub fn char_report(family: &SetFamily, lambda: i64, chi: &Character) -> Result<CharReport> {
    let is_sedf = verify_sedf(family, lambda)?.is_valid();
    report_with(family, lambda, chi, is_sedf)
}

/// Reports for every non-principal character, in label order.
pub fn char_reports(family: &SetFamily, lambda: i64) -> Result<Vec<CharReport>> {
    let is_sedf = verify_sedf(family, lambda)?.is_valid();
    all_characters(family.group())?
        .iter()
        .filter(|c| !c.is_principal())
        .map(|chi| report_with(family, lambda, chi, is_sedf))
        .collect()
}

pub(crate) fn report_with(
    family: &SetFamily,
    lambda: i64,
    chi: &Character,
    is_sedf: bool,
) -> Result<CharReport> {
    if chi.is_principal() {
        return Err(Error::PrincipalCharacter);
    }
    if chi.group() != family.group() {
        return Err(Error::GroupMismatch);
    }
    let m = family.m();
    let p = profiles(family, chi)?;
    let total = CharValue {
        zero: profile_is_zero(chi, &p.total),
        value: p.total.approx(),
    };

    let mut sets = Vec::with_capacity(m);
    let mut violations = Vec::new();
    for (j, prof) in p.sets.iter().enumerate() {
        let zero = profile_is_zero(chi, prof);
        let value = prof.approx();
        let alpha = if total.zero || norm_equals(chi, prof, lambda)? {
            None
        } else {
            let n = value.norm_sqr();
            Some(n / (n - lambda as f64))
        };
        if zero {
            violations.push(Violation::ZeroSetSum(j));
        }
        sets.push(SetValue { zero, value, alpha });
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for j in 0..m {
        let home = classes
            .iter()
            .position(|c| profile_is_zero(chi, &difference(&p.sets[c[0]], &p.sets[j])));
        match home {
            Some(c) => classes[c].push(j),
            None => classes.push(alloc::vec![j]),
        }
    }

    let split = if !total.zero && classes.len() <= 2 {
        let a = if classes.len() == 1 {
            0
        } else {
            classes[0].len().min(classes[1].len())
        };
        Some((a, m - a))
    } else {
        None
    };

    let identity_residual = is_sedf.then(|| {
        let x = total.value;
        sets.iter()
            .map(|s| (s.value * x.conj() - s.value.norm_sqr() + lambda as f64).norm())
            .fold(0.0, f64::max)
    });

    let mut report = CharReport {
        character: chi.clone(),
        total,
        sets,
        classes,
        split,
        identity_residual,
        violations: Vec::new(),
        five_set_norm: None,
    };

    if total.zero {
        for (j, prof) in p.sets.iter().enumerate() {
            if !norm_equals(chi, prof, lambda)? {
                violations.push(Violation::SetModulus(j));
            }
        }
    } else if m > 3 {
        violations.extend(split_filter(&report, m)?.into_iter().map(Violation::Split));
        if m == 5 && split == Some((2, 3)) {
            report.five_set_norm = Some(2.0 * total.value.norm_sqr());
        }
    }
    report.violations = violations;
    Ok(report)
}

/// Checks the split of a report with `χ(𝒟) ≠ 0` against the split laws.
pub fn split_filter(report: &CharReport, m: usize) -> Result<Vec<SplitViolation>> {
    if report.total.zero {
        return Err(Error::VanishingTotal);
    }
    if m <= 3 {
        return Err(Error::TooFewSets(m));
    }
    let mut out = Vec::new();
    let classes = &report.classes;
    if classes.len() > 2 {
        out.push(SplitViolation::TooManyClasses(classes.len()));
        return Ok(out);
    }
    let (a, b) = if classes.len() == 1 {
        (0, m)
    } else {
        let (x, y) = (classes[0].len(), classes[1].len());
        (x.min(y), x.max(y))
    };
    if a == 0 {
        out.push(SplitViolation::AllEqual);
    }
    if a == 1 {
        out.push(SplitViolation::OneVersusRest);
    }
    if a == b {
        out.push(SplitViolation::EvenHalves);
    }
    if m == 5 && (a, b) != (2, 3) {
        out.push(SplitViolation::FiveSetSplit(a, b));
    }
    if m == 6 && (a, b) != (2, 4) {
        out.push(SplitViolation::SixSetSplit(a, b));
    }
    if classes.len() == 2 {
        let alpha_of = |c: &Vec<usize>| report.sets.get(c[0]).and_then(|s| s.alpha);
        if let (Some(x), Some(y)) = (alpha_of(&classes[0]), alpha_of(&classes[1])) {
            let residual = (x * classes[0].len() as f64 + y * classes[1].len() as f64 - 1.0).abs();
            if residual.is_nan() || residual > FLOAT_TOLERANCE {
                out.push(SplitViolation::AlphaSum { residual });
            }
        }
    }
    Ok(out)
}

/// How the "some character does not vanish on 𝒟" condition was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonVanishing {
    /// `𝒟` is empty or all of `G`.
    Vacuous,
    /// Label index of a non-principal character with `χ(𝒟) ≠ 0`.
    Witness(usize),
    Missing,
}

/// Outcome of [`check_basics`]. Set indices are 0-based; characters are given
/// by label index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicsReport {
    pub is_sedf: bool,
    /// Characters with `χ(𝒟) ≠ Σ_j χ(D_j)`.
    pub linearity_failures: Vec<usize>,
    /// `(character, set)` with `χ(D_j) = 0`; only checked for SEDFs.
    pub zero_set_failures: Vec<(usize, usize)>,
    /// `(character, set)` with `χ(𝒟) = 0` and `||χ(D_j)|² − λ| > 1e-9`; only
    /// checked for SEDFs.
    pub modulus_failures: Vec<(usize, usize)>,
    pub nonvanishing: NonVanishing,
}

impl BasicsReport {
    pub fn passed(&self) -> bool {
        self.linearity_failures.is_empty()
            && self.zero_set_failures.is_empty()
            && self.modulus_failures.is_empty()
            && self.nonvanishing != NonVanishing::Missing
    }
}

/// Basic character facts for a family.
pub fn check_basics(family: &SetFamily, lambda: i64) -> Result<BasicsReport> {
    let is_sedf = verify_sedf(family, lambda)?.is_valid();
    let group = family.group();
    let mut sum = AlgElem::zero(group);
    for j in 0..family.m() {
        sum = sum.checked_add(&family.indicator(j)?)?;
    }
    let mut out = BasicsReport {
        is_sedf,
        linearity_failures: Vec::new(),
        zero_set_failures: Vec::new(),
        modulus_failures: Vec::new(),
        nonvanishing: NonVanishing::Missing,
    };
    let covered = family.m() * family.k();
    if covered == 0 || covered == group.size() {
        out.nonvanishing = NonVanishing::Vacuous;
    }
    for chi in all_characters(group)?.iter().filter(|c| !c.is_principal()) {
        let p = profiles(family, chi)?;
        let summed = exponent_profile(chi, &sum)?;
        if !profile_is_zero(chi, &difference(&p.total, &summed)) {
            out.linearity_failures.push(chi.label_index());
        }
        let total_zero = profile_is_zero(chi, &p.total);
        if !total_zero && out.nonvanishing == NonVanishing::Missing {
            out.nonvanishing = NonVanishing::Witness(chi.label_index());
        }
        if is_sedf {
            for (j, prof) in p.sets.iter().enumerate() {
                if profile_is_zero(chi, prof) {
                    out.zero_set_failures.push((chi.label_index(), j));
                }
                if total_zero && (prof.approx().norm_sqr() - lambda as f64).abs() > FLOAT_TOLERANCE
                {
                    out.modulus_failures.push((chi.label_index(), j));
                }
            }
        }
    }
    Ok(out)
}

/// Whether every character satisfies the transformed defining equation:
/// `k²(m−1) = λ(v−1)` for the principal character and
/// `χ(D_j)·conj(χ(𝒟) − χ(D_j)) = −λ` exactly for all others.
///
/// Products are formed on exponent profiles (cyclic convolution in `Z_L`), so
/// this never touches group-algebra multiplication.
pub fn character_criterion(family: &SetFamily, lambda: i64) -> Result<bool> {
    if lambda <= 0 {
        return Err(Error::NonPositiveLambda);
    }
    if !parameters_hold(family, lambda as u64).0 {
        return Ok(false);
    }
    for chi in all_characters(family.group())?
        .iter()
        .filter(|c| !c.is_principal())
    {
        let p = profiles(family, chi)?;
        for prof in &p.sets {
            let others = difference(&p.total, prof);
            let mut lhs = prof.product(&others.conjugate())?;
            lhs.add_constant(lambda)?;
            if !profile_is_zero(chi, &lhs) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A vanishing subset written as a disjoint union of cosets of `subgroup`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub subgroup: Vec<Element>,
    pub cosets: Vec<Vec<Element>>,
}

/// Index-level form of [`CosetDecomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetIndices {
    pub subgroup: Vec<usize>,
    pub cosets: Vec<Vec<usize>>,
}

/// Writes a subset `S` with `χ(S) = 0` of a group of order `pq` as a union of
/// cosets of the subgroup of order `p` or `q` on which `χ` is nontrivial.
///
/// `Ok(None)` means no such decomposition exists. For a character of order
/// `pq` (injective on `G`) a vanishing sum always decomposes. For characters of
/// order `p` or `q` it need not: `{0, 1, 2}` in `Z_15` vanishes under any
/// character of order 3 but is a union of cosets of neither proper subgroup.
/// Its size is still a multiple of `p` or `q`.
pub fn coset_decompose(
    group: &Group,
    set: &[Element],
    chi: &Character,
) -> Result<Option<CosetDecomposition>> {
    let idx = set
        .iter()
        .map(|g| group.index_of(g))
        .collect::<Result<Vec<_>>>()?;
    let elems = |v: &[usize]| -> Vec<Element> {
        v.iter()
            .map(|&i| group.element_at(i).expect("valid index"))
            .collect()
    };
    Ok(
        coset_decompose_indices(group, &idx, chi)?.map(|d| CosetDecomposition {
            subgroup: elems(&d.subgroup),
            cosets: d.cosets.iter().map(|c| elems(c)).collect(),
        }),
    )
}

pub fn coset_decompose_indices(
    group: &Group,
    set: &[usize],
    chi: &Character,
) -> Result<Option<CosetIndices>> {
    let (p, q) = two_distinct_primes(group.order()).ok_or(Error::NotTwoPrimes(group.order()))?;
    if chi.is_principal() {
        return Err(Error::PrincipalCharacter);
    }
    if chi.group() != group {
        return Err(Error::GroupMismatch);
    }
    let indicator = AlgElem::from_indices(group, set)?;
    if !profile_is_zero(chi, &exponent_profile(chi, &indicator)?) {
        return Err(Error::NotVanishing);
    }
    let member: Vec<bool> = indicator.coeffs().iter().map(|&c| c != 0).collect();
    for r in [p, q] {
        let subgroup = group.torsion_subgroup(r);
        if subgroup.iter().all(|&h| chi.exponent_at(h) == 0) {
            continue;
        }
        let closed = set
            .iter()
            .all(|&s| subgroup.iter().all(|&h| member[group.add_index(s, h)]));
        if !closed {
            continue;
        }
        let mut cosets: Vec<Vec<usize>> = group
            .coset_indices(&subgroup)
            .into_iter()
            .filter(|c| member[c[0]])
            .collect();
        cosets.sort();
        return Ok(Some(CosetIndices { subgroup, cosets }));
    }
    Ok(None)
}

/// Human-readable one-line summary of a violation list.
pub fn describe(violations: &[Violation]) -> String {
    let mut s = String::new();
    for (i, v) in violations.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(v.code());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{consecutive_pair_family, singleton_family};
    use alloc::vec;

    fn z(n: u64) -> Group {
        Group::cyclic(n).unwrap()
    }

    fn fam(g: &Group, sets: &[&[usize]]) -> SetFamily {
        SetFamily::from_indices(g, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn chi(g: &Group, label: usize) -> Character {
        all_characters(g).unwrap().swap_remove(label)
    }

    #[test]
    fn example_one_reports() {
        let g = z(5);
        let f = fam(&g, &[&[0, 1], &[2, 4]]);
        let r = char_report(&f, 1, &chi(&g, 1)).unwrap();
        assert!(!r.total.zero);
        assert!(r.sets.iter().all(|s| !s.zero));
        assert!(r.identity_residual.unwrap() < FLOAT_TOLERANCE);
        assert!(r.violations.is_empty());
        for s in &r.sets {
            // α_j·X = χ(D_j) for an SEDF
            let a = s.alpha.unwrap();
            assert!((r.total.value * a - s.value).norm() < 1e-9);
        }
        let reports = char_reports(&f, 1).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| !r.total.zero));
    }

    #[test]
    fn full_union_vanishes() {
        let g = z(3);
        for r in char_reports(&singleton_family(&g), 1).unwrap() {
            assert!(r.total.zero);
            assert!(r.split.is_none());
            assert!(r.violations.is_empty());
            assert!(r.sets.iter().all(|s| s.alpha.is_none()));
        }
    }

    #[test]
    fn non_sedf_classes() {
        let g = z(5);
        let f = fam(&g, &[&[0, 1], &[2, 3]]);
        let r = char_report(&f, 1, &chi(&g, 1)).unwrap();
        assert_eq!(r.classes, vec![vec![0], vec![1]]);
        assert!(r.identity_residual.is_none());
        // oracle: direct complex evaluation
        let w = |e: f64| Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI * e / 5.0);
        assert!((r.sets[0].value - (w(0.0) + w(1.0))).norm() < 1e-12);
        assert!((r.sets[1].value - (w(2.0) + w(3.0))).norm() < 1e-12);
    }

    #[test]
    fn principal_character_rejected() {
        let g = z(5);
        let f = fam(&g, &[&[0, 1], &[2, 4]]);
        assert_eq!(
            char_report(&f, 1, &chi(&g, 0)),
            Err(Error::PrincipalCharacter)
        );
    }

    #[test]
    fn zero_set_sum_is_a_violation() {
        let g = z(6);
        let f = fam(&g, &[&[0, 3], &[1, 2]]);
        let r = char_report(&f, 1, &chi(&g, 3)).unwrap();
        assert!(r.violations.contains(&Violation::ZeroSetSum(0)));
    }

    #[test]
    fn basics_on_known_families() {
        let ex1 = consecutive_pair_family(3).unwrap();
        let b = check_basics(&ex1, 1).unwrap();
        assert!(b.is_sedf && b.passed());
        assert!(matches!(b.nonvanishing, NonVanishing::Witness(_)));

        let ex2 = singleton_family(&z(4));
        let b = check_basics(&ex2, 1).unwrap();
        assert!(b.is_sedf && b.passed());
        assert_eq!(b.nonvanishing, NonVanishing::Vacuous);

        let partial = fam(&z(5), &[&[0], &[1], &[2]]);
        let b = check_basics(&partial, 1).unwrap();
        assert!(!b.is_sedf);
        assert_eq!(b.nonvanishing, NonVanishing::Witness(1));
    }

    fn synthetic(m: usize, class_sizes: &[usize], alphas: &[f64]) -> CharReport {
        let g = z(7);
        let mut classes = Vec::new();
        let mut sets = vec![
            SetValue {
                zero: false,
                value: Complex64::new(1.0, 0.0),
                alpha: None
            };
            m
        ];
        let mut next = 0;
        for (&size, &a) in class_sizes.iter().zip(alphas) {
            let members: Vec<usize> = (next..next + size).collect();
            for &j in &members {
                sets[j].alpha = Some(a);
            }
            next += size;
            classes.push(members);
        }
        CharReport {
            character: chi(&g, 1),
            total: CharValue {
                zero: false,
                value: Complex64::new(1.0, 0.0),
            },
            sets,
            classes,
            split: None,
            identity_residual: None,
            violations: Vec::new(),
            five_set_norm: None,
        }
    }

    #[test]
    fn split_laws() {
        let codes = |r: &CharReport, m| -> Vec<&'static str> {
            split_filter(r, m)
                .unwrap()
                .iter()
                .map(|v| v.code())
                .collect()
        };
        assert!(codes(&synthetic(5, &[2, 3], &[2.0, -1.0]), 5).is_empty());
        assert!(codes(&synthetic(6, &[2, 4], &[1.5, -0.5]), 6).is_empty());
        assert_eq!(
            codes(&synthetic(4, &[1, 3], &[-2.0, 1.0]), 4),
            vec!["split-one-vs-rest"]
        );
        assert_eq!(
            codes(&synthetic(6, &[3, 3], &[1.0, -2.0 / 3.0]), 6),
            vec!["split-even-halves", "split-m6"]
        );
        assert_eq!(
            codes(&synthetic(4, &[4], &[0.25]), 4),
            vec!["split-all-equal"]
        );
        assert_eq!(
            codes(&synthetic(7, &[2, 2, 3], &[1.0, 1.0, 1.0]), 7),
            vec!["too-many-classes"]
        );
        assert_eq!(
            codes(&synthetic(7, &[3, 4], &[1.0, 1.0]), 7),
            vec!["alpha-sum"]
        );
    }

    #[test]
    fn split_filter_preconditions() {
        let mut r = synthetic(5, &[2, 3], &[2.0, -1.0]);
        assert_eq!(split_filter(&r, 3), Err(Error::TooFewSets(3)));
        r.total.zero = true;
        assert_eq!(split_filter(&r, 5), Err(Error::VanishingTotal));
    }

    #[test]
    fn coset_decompositions_in_z15() {
        let g = z(15);
        let d = coset_decompose_indices(&g, &[0, 5, 10], &chi(&g, 5))
            .unwrap()
            .unwrap();
        assert_eq!(d.subgroup, vec![0, 5, 10]);
        assert_eq!(d.cosets, vec![vec![0, 5, 10]]);
        let d = coset_decompose_indices(&g, &[0, 3, 6, 9, 12], &chi(&g, 3))
            .unwrap()
            .unwrap();
        assert_eq!(d.subgroup.len(), 5);
        assert_eq!(d.cosets.len(), 1);
        let d = coset_decompose_indices(&g, &[], &chi(&g, 1))
            .unwrap()
            .unwrap();
        assert!(d.cosets.is_empty());
        let els: Vec<Element> = [1u64, 6, 11].iter().map(|&i| Element(vec![i])).collect();
        let d = coset_decompose(&g, &els, &chi(&g, 5)).unwrap().unwrap();
        assert_eq!(d.cosets, vec![els]);
    }

    #[test]
    fn coset_decompose_errors() {
        let g = z(15);
        assert_eq!(
            coset_decompose_indices(&g, &[0], &chi(&g, 1)),
            Err(Error::NotVanishing)
        );
        assert_eq!(
            coset_decompose_indices(&g, &[], &chi(&g, 0)),
            Err(Error::PrincipalCharacter)
        );
        let g9 = z(9);
        assert_eq!(
            coset_decompose_indices(&g9, &[], &chi(&g9, 1)),
            Err(Error::NotTwoPrimes(9))
        );
    }

    #[test]
    fn criterion_matches_verifier_on_examples() {
        let g = z(5);
        assert!(character_criterion(&fam(&g, &[&[0, 1], &[2, 4]]), 1).unwrap());
        assert!(!character_criterion(&fam(&g, &[&[0, 1], &[2, 3]]), 1).unwrap());
        assert!(character_criterion(&singleton_family(&Group::new(&[2, 2]).unwrap()), 1).unwrap());
    }
}
