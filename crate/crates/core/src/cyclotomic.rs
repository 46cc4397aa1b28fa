//! Integer polynomials, cyclotomic polynomials and exact zero tests for sums of
//! roots of unity.
//!
//! A character value `χ(A)` is a sum `Σ_e c_e ω_L^e` where `L` is the order of
//! `χ`. It vanishes iff the minimal polynomial `Φ_L` of `ω_L` divides
//! `Σ_e c_e x^e`. Two exact routes are provided: long division by the monic
//! `Φ_L` (the default), and a reduction to the power basis of `Q(ω_L)` obtained
//! from the Chinese remainder decomposition of `Z_L`. The second route cannot
//! overflow and backs up the first one when intermediate remainders outgrow
//! 128-bit integers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::AlgElem;
use crate::arith::{divisors, factorize};
use crate::character::Character;
use crate::{Error, Result};

/// Largest `n` accepted by [`cyclotomic_poly`].
pub const CYCLOTOMIC_MAX: u64 = 1_000_000;

/// A polynomial with integer coefficients; `coeffs[i]` multiplies `x^i`.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = alloc::vec![0i64; n + 1];
        c[0] = -1;
        c[n] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = alloc::vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::PolynomialOverflow)?;
                out[i + j] = out[i + j].checked_add(t).ok_or(Error::PolynomialOverflow)?;
            }
        }
        Ok(Self::new(out))
    }

    /// Long division by a monic divisor, returning `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let (q, r) = long_division(&self.coeffs, divisor)?;
        let narrow = |v: Vec<i128>| -> Result<IntPolynomial> {
            v.into_iter()
                .map(|c| i64::try_from(c).map_err(|_| Error::PolynomialOverflow))
                .collect::<Result<Vec<_>>>()
                .map(IntPolynomial::new)
        };
        Ok((narrow(q)?, narrow(r)?))
    }

    /// Whether the monic `divisor` divides `self` in `Z[x]`.
    pub fn is_divisible_by(&self, divisor: &IntPolynomial) -> Result<bool> {
        let (_, r) = long_division(&self.coeffs, divisor)?;
        Ok(r.iter().all(|&c| c == 0))
    }
}

/// Classical long division over `i128`; the divisor must be monic.
fn long_division(dividend: &[i64], divisor: &IntPolynomial) -> Result<(Vec<i128>, Vec<i128>)> {
    assert!(divisor.is_monic(), "divisor must be monic");
    let d = divisor.coeffs.len() - 1;
    let mut rem: Vec<i128> = dividend.iter().map(|&c| c as i128).collect();
    while rem.last() == Some(&0) {
        rem.pop();
    }
    if rem.len() <= d {
        return Ok((Vec::new(), rem));
    }
    let mut quot = alloc::vec![0i128; rem.len() - d];
    for top in (d..rem.len()).rev() {
        let lead = rem[top];
        if lead == 0 {
            continue;
        }
        let shift = top - d;
        quot[shift] = lead;
        for (i, &c) in divisor.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let t = lead
                .checked_mul(c as i128)
                .ok_or(Error::PolynomialOverflow)?;
            rem[shift + i] = rem[shift + i]
                .checked_sub(t)
                .ok_or(Error::PolynomialOverflow)?;
        }
    }
    rem.truncate(d);
    Ok((quot, rem))
}

/// Memo of cyclotomic polynomials. Filled ahead of use and read-only afterwards,
/// so a populated table can be shared between threads.
#[derive(Debug, Clone, Default)]
pub struct CyclotomicTable {
    polys: BTreeMap<u64, IntPolynomial>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table holding `Φ_d` for every divisor `d` of `n`.
    pub fn for_divisors_of(n: u64) -> Result<Self> {
        let mut t = Self::new();
        t.ensure(n)?;
        Ok(t)
    }

    pub fn get(&self, n: u64) -> Option<&IntPolynomial> {
        self.polys.get(&n)
    }

    /// Computes (if needed) and returns `Φ_n`, filling in `Φ_d` for all `d | n`.
    pub fn ensure(&mut self, n: u64) -> Result<&IntPolynomial> {
        if n == 0 || n > CYCLOTOMIC_MAX {
            return Err(Error::CyclotomicOutOfRange(n));
        }
        if !self.polys.contains_key(&n) {
            let divs = divisors(n);
            for &d in &divs {
                if self.polys.contains_key(&d) {
                    continue;
                }
                let mut p = IntPolynomial::x_pow_minus_one(d as usize);
                for e in divisors(d).into_iter().filter(|&e| e < d) {
                    let (q, r) = p.div_rem_monic(&self.polys[&e])?;
                    debug_assert!(r.is_zero());
                    p = q;
                }
                self.polys.insert(d, p);
            }
        }
        Ok(&self.polys[&n])
    }
}

/// The `n`-th cyclotomic polynomial, as `(x^n − 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_poly(n: u64) -> Result<IntPolynomial> {
    Ok(CyclotomicTable::new().ensure(n)?.clone())
}

/// Signed multiplicities of the `L`-th roots of unity making up a character sum:
/// `χ(A) = Σ_e counts[e]·ω_L^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentProfile {
    modulus: u64,
    counts: Vec<i64>,
}

impl ExponentProfile {
    pub fn new(modulus: u64, counts: Vec<i64>) -> Result<Self> {
        if modulus == 0 || counts.len() as u64 != modulus {
            return Err(Error::InvalidParameters(alloc::format!(
                "profile over Z_{modulus} needs {modulus} counts, got {}",
                counts.len()
            )));
        }
        Ok(ExponentProfile { modulus, counts })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.counts.clone())
    }

    /// Complex conjugate: `e ↦ −e`.
    pub fn conjugate(&self) -> ExponentProfile {
        let l = self.counts.len();
        let mut counts = alloc::vec![0i64; l];
        for (e, &c) in self.counts.iter().enumerate() {
            counts[(l - e) % l] = c;
        }
        ExponentProfile {
            modulus: self.modulus,
            counts,
        }
    }

    /// Product of two character values, as a cyclic convolution over `Z_L`.
    pub fn product(&self, other: &ExponentProfile) -> Result<ExponentProfile> {
        if self.modulus != other.modulus {
            return Err(Error::GroupMismatch);
        }
        let l = self.counts.len();
        let mut counts = alloc::vec![0i64; l];
        for (a, &x) in self.counts.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (b, &y) in other.counts.iter().enumerate().filter(|(_, &y)| y != 0) {
                let t = x.checked_mul(y).ok_or(Error::CoefficientOverflow)?;
                let slot = &mut counts[(a + b) % l];
                *slot = slot.checked_add(t).ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(ExponentProfile {
            modulus: self.modulus,
            counts,
        })
    }

    /// Adds `c` copies of the root `ω_L^0 = 1`.
    pub fn add_constant(&mut self, c: i64) -> Result<()> {
        self.counts[0] = self.counts[0]
            .checked_add(c)
            .ok_or(Error::CoefficientOverflow)?;
        Ok(())
    }

    /// Exact zero test by dividing by `phi`, which must be `Φ_L`.
    pub fn is_zero_by_division(&self, phi: &IntPolynomial) -> Result<bool> {
        if self.counts.iter().all(|&c| c == 0) {
            return Ok(true);
        }
        self.polynomial().is_divisible_by(phi)
    }

    /// Exact zero test by reduction to a `Q`-basis of `Q(ω_L)`.
    ///
    /// With `L = rad(L)·t`, the powers `1, x, …, x^{t−1}` form a basis of
    /// `Q(ω_L)` over `Q(ω_rad)`, so the sum splits into `t` sums of
    /// `rad`-th roots. For squarefree `rad = p_1⋯p_s`, `Z_rad ≅ ∏ Z_{p_i}`
    /// identifies each such sum with an `s`-dimensional array, and reducing
    /// every axis modulo `1 + y + ⋯ + y^{p−1}` lands in a tensor basis.
    pub fn is_zero_by_basis(&self) -> bool {
        let l = self.modulus as usize;
        let primes: Vec<usize> = factorize(self.modulus)
            .iter()
            .map(|&(p, _)| p as usize)
            .collect();
        let rad: usize = primes.iter().product();
        let t = l / rad;
        // exponent e ≡ Σ_i a_i·(rad/p_i)·u_i (mod rad) with u_i = (rad/p_i)^{-1} mod p_i
        let unit: Vec<usize> = primes
            .iter()
            .map(|&p| mod_inverse((rad / p) % p, p))
            .collect();
        // mixed-radix layout over (a_1, …, a_s), last axis fastest
        let mut strides = alloc::vec![1usize; primes.len()];
        for i in (0..primes.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * primes[i + 1];
        }
        for r in 0..t {
            let mut grid = alloc::vec![0i128; rad];
            for q in 0..rad {
                let c = self.counts[r + t * q];
                if c == 0 {
                    continue;
                }
                let cell: usize = primes
                    .iter()
                    .zip(&unit)
                    .zip(&strides)
                    .map(|((&p, &u), &s)| ((q % p) * u % p) * s)
                    .sum();
                grid[cell] += c as i128;
            }
            for (axis, &p) in primes.iter().enumerate() {
                let s = strides[axis];
                for cell in 0..rad {
                    let a = (cell / s) % p;
                    if a == p - 1 {
                        let top = grid[cell];
                        if top != 0 {
                            for b in 0..p - 1 {
                                grid[cell - (p - 1 - b) * s] -= top;
                            }
                            grid[cell] = 0;
                        }
                    }
                }
            }
            if grid.iter().any(|&c| c != 0) {
                return false;
            }
        }
        true
    }

    /// Floating-point value `Σ_e counts[e]·exp(2πi e/L)`.
    pub fn approx(&self) -> Complex64 {
        let l = self.modulus as f64;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(Complex64::new(0.0, 0.0), |acc, (e, &c)| {
                let theta = 2.0 * PI * e as f64 / l;
                acc + Complex64::new(c as f64 * libm::cos(theta), c as f64 * libm::sin(theta))
            })
    }
}

fn mod_inverse(a: usize, p: usize) -> usize {
    if p == 1 {
        return 0;
    }
    (1..p).find(|&x| a * x % p == 1).expect("coprime to p")
}

/// `counts[e]` = total coefficient of `A` over the elements `b` with
/// `χ(b) = ω_L^e`, where `L` is the order of `χ`.
pub fn exponent_profile(chi: &Character, a: &AlgElem) -> Result<ExponentProfile> {
    if chi.group() != a.group() {
        return Err(Error::GroupMismatch);
    }
    let mut counts = alloc::vec![0i64; chi.order() as usize];
    for (b, c) in a.support() {
        let slot = &mut counts[chi.exponent_at(b) as usize];
        *slot = slot.checked_add(c).ok_or(Error::CoefficientOverflow)?;
    }
    ExponentProfile::new(chi.order(), counts)
}

/// Exact test of `χ(A) = 0`.
pub fn is_zero_sum(chi: &Character, a: &AlgElem) -> Result<bool> {
    Ok(profile_is_zero(chi, &exponent_profile(chi, a)?))
}

/// Exact zero test of a profile taken under `chi`.
pub(crate) fn profile_is_zero(chi: &Character, profile: &ExponentProfile) -> bool {
    match profile.is_zero_by_division(chi.min_poly()) {
        Ok(z) => z,
        Err(_) => profile.is_zero_by_basis(),
    }
}

/// Floating-point `χ(A)`, for reporting and cross-checks only.
pub fn char_value_approx(chi: &Character, a: &AlgElem) -> Result<Complex64> {
    Ok(exponent_profile(chi, a)?.approx())
}
