//! Parameter enumeration and nonexistence filters.
//!
//! Every admissible quadruple `(v, m, k, λ)` (with `k²(m−1) = λ(v−1)` and
//! `mk ≤ v`) is classified by running the filters below in a fixed order; the
//! first one that fires is the primary reason.
//!
//! | code            | rules out                                              |
//! |-----------------|--------------------------------------------------------|
//! | `F-mk`          | `v = mk`, `k > 1`                                      |
//! | `F-lambda1`     | `λ = 1`, `m ≥ 3`, `k > 1`                              |
//! | `F-m34`         | `m ∈ {3, 4}`, `v > m`                                  |
//! | `F-prime`       | `v` prime, `k > 1`, `m > 2`                            |
//! | `F-pq`          | `v = pq` with no prime passing the case analysis below |
//!
//! For `v = pq` (`k > 1`, `m > 2`) some prime `r ∈ {p, q}` must divide
//! `k(m−2)`. A prime with `r | m−2` always passes. A prime with only `r | k`
//! passes when, writing `o` for the other prime, `s = k/r` and `t = λ/r²` are
//! integers with `s²(m−1) = t(v−1)`, `sm < o`, `s·o > t(v−1)`, `k·o > r(v−1)`
//! and `r/o ≤ v/(5(v−1))`.

use alloc::vec::Vec;

use crate::arith::{gcd, is_prime, two_distinct_primes};
use crate::{Error, Result};

/// Largest `v` accepted by [`enumerate`].
pub const SIEVE_MAX_ORDER: u64 = 1_000_000;

/// Quadruples with a known construction beyond the two infinite families.
pub const KNOWN_REGISTRY: &[ParameterSet] = &[ParameterSet {
    v: 243,
    m: 11,
    k: 22,
    lambda: 20,
}];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParameterSet {
    pub v: u64,
    pub m: u64,
    pub k: u64,
    pub lambda: u64,
}

impl ParameterSet {
    pub fn new(v: u64, m: u64, k: u64, lambda: u64) -> Self {
        ParameterSet { v, m, k, lambda }
    }

    /// `k²(m−1) = λ(v−1)`.
    pub fn is_admissible(&self) -> bool {
        let k = self.k as u128;
        k * k * (self.m as u128).saturating_sub(1)
            == self.lambda as u128 * (self.v as u128).saturating_sub(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    KnownFamily,
    RuledOut,
    Open,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::KnownFamily => "KNOWN_FAMILY",
            Status::RuledOut => "RULED_OUT",
            Status::Open => "OPEN",
        }
    }
}

/// Why a quadruple got its status. Variants are listed in filter priority
/// order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reason {
    /// `(k²+1, 2, k, 1)`: `{0,…,k−1}` and `{k,2k,…,k²}` in `Z_{k²+1}`.
    KnownPair,
    /// `(v, v, 1, 1)`: all singletons.
    KnownSingletons,
    /// A quadruple in [`KNOWN_REGISTRY`].
    KnownRegistry,
    EqualPartition,
    LambdaOne,
    ThreeOrFourSets,
    PrimeOrder,
    TwoPrimes,
    /// No filter fired.
    None,
}

impl Reason {
    pub fn code(&self) -> &'static str {
        match self {
            Reason::KnownPair => "KNOWN-PAIR",
            Reason::KnownSingletons => "KNOWN-SINGLETONS",
            Reason::KnownRegistry => "KNOWN-REGISTRY",
            Reason::EqualPartition => "F-mk",
            Reason::LambdaOne => "F-lambda1",
            Reason::ThreeOrFourSets => "F-m34",
            Reason::PrimeOrder => "F-prime",
            Reason::TwoPrimes => "F-pq",
            Reason::None => "NONE",
        }
    }

    pub fn text(&self) -> &'static str {
        match self {
            Reason::KnownPair => "(k^2+1,2,k,1) family: {0..k-1} and {k,2k,..,k^2} in Z_(k^2+1)",
            Reason::KnownSingletons => "(v,v,1,1) family: all singletons",
            Reason::KnownRegistry => "registered construction",
            Reason::EqualPartition => "v = mk with k > 1 forces k^2 | lambda, impossible",
            Reason::LambdaOne => "no SEDF with lambda = 1, m >= 3, k > 1",
            Reason::ThreeOrFourSets => "no SEDF with m in {3,4} and v > m",
            Reason::PrimeOrder => "no SEDF in a group of prime order with k > 1, m > 2",
            Reason::TwoPrimes => "v = pq: no prime passes the k(m-2) divisibility analysis",
            Reason::None => "all filters passed",
        }
    }
}

/// Case-1 bookkeeping for a prime `r` dividing `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DividesK {
    /// `s = k / r`.
    pub s: u64,
    /// `t = λ / r²` when `r² | λ`.
    pub t: Option<u64>,
    /// `s²(m−1) = t(v−1)`.
    pub reduced_equation: bool,
    /// `sm < o`.
    pub sm_below_other: bool,
    /// `s > t(v−1)/o`.
    pub s_bound: bool,
    /// `k > r(v−1)/o`.
    pub k_bound: bool,
    /// `r/o ≤ v/(5(v−1))`.
    pub ratio_bound: bool,
}

impl DividesK {
    pub fn consistent(&self) -> bool {
        self.t.is_some()
            && self.reduced_equation
            && self.sm_below_other
            && self.s_bound
            && self.k_bound
            && self.ratio_bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeCase {
    pub prime: u64,
    pub other: u64,
    /// `r | m − 2`.
    pub divides_m_minus_2: bool,
    /// Present when `r | k`.
    pub divides_k: Option<DividesK>,
}

impl PrimeCase {
    pub fn passes(&self) -> bool {
        self.divides_m_minus_2 || self.divides_k.is_some_and(|c| c.consistent())
    }
}

/// The `v = pq` analysis attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqAnalysis {
    pub p: u64,
    pub q: u64,
    pub cases: [PrimeCase; 2],
}

impl PqAnalysis {
    pub fn survives(&self) -> bool {
        self.cases.iter().any(PrimeCase::passes)
    }

    /// One of the primes is 2.
    pub fn has_even_prime(&self) -> bool {
        self.p == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub params: ParameterSet,
    pub status: Status,
    /// Primary reason: the first filter (or known family) that matched.
    pub reason: Reason,
    /// Every filter that fires, in priority order.
    pub fired: Vec<Reason>,
    pub pq: Option<PqAnalysis>,
}

/// `λ = k²(m−1)/(v−1)` when the division is exact and positive.
pub fn admissible_lambda(v: u64, m: u64, k: u64) -> Result<Option<u64>> {
    if v < 2 || m < 1 || k < 1 || (m as u128) * (k as u128) > v as u128 {
        return Err(Error::InvalidParameters(alloc::format!(
            "need v >= 2, m >= 1, k >= 1 and mk <= v (got v={v}, m={m}, k={k})"
        )));
    }
    let num = (k as u128) * (k as u128) * (m as u128 - 1);
    let den = v as u128 - 1;
    if num == 0 || num % den != 0 {
        return Ok(None);
    }
    Ok(u64::try_from(num / den).ok())
}

fn known_family(p: &ParameterSet) -> Option<Reason> {
    if p.m == 2 && p.lambda == 1 && p.k.checked_mul(p.k).and_then(|x| x.checked_add(1)) == Some(p.v)
    {
        Some(Reason::KnownPair)
    } else if p.m == p.v && p.k == 1 && p.lambda == 1 {
        Some(Reason::KnownSingletons)
    } else if KNOWN_REGISTRY.contains(p) {
        Some(Reason::KnownRegistry)
    } else {
        None
    }
}

fn divides_k_case(p: &ParameterSet, r: u64, o: u64) -> DividesK {
    let (v, m, k, lambda) = (p.v as u128, p.m as u128, p.k as u128, p.lambda as u128);
    let (r128, o128) = (r as u128, o as u128);
    let s = k / r128;
    let t = (lambda % (r128 * r128) == 0).then(|| lambda / (r128 * r128));
    let tv = t.map(|t| t * (v - 1));
    DividesK {
        s: s as u64,
        t: t.map(|t| t as u64),
        reduced_equation: tv == Some(s * s * (m - 1)),
        sm_below_other: s * m < o128,
        s_bound: tv.is_some_and(|tv| s * o128 > tv),
        k_bound: k * o128 > r128 * (v - 1),
        ratio_bound: r128 * 5 * (v - 1) <= o128 * v,
    }
}

fn pq_analysis(params: &ParameterSet) -> Option<PqAnalysis> {
    if params.k <= 1 || params.m <= 2 {
        return None;
    }
    let (p, q) = two_distinct_primes(params.v)?;
    let case = |r: u64, o: u64| PrimeCase {
        prime: r,
        other: o,
        divides_m_minus_2: (params.m - 2) % r == 0,
        divides_k: (params.k % r == 0).then(|| divides_k_case(params, r, o)),
    };
    Some(PqAnalysis {
        p,
        q,
        cases: [case(p, q), case(q, p)],
    })
}

/// Classifies an admissible quadruple.
pub fn classify(params: ParameterSet) -> Result<Verdict> {
    let ParameterSet { v, m, k, lambda } = params;
    if v < 2 || m < 1 || k < 1 || lambda < 1 || (m as u128) * (k as u128) > v as u128 {
        return Err(Error::InvalidParameters(alloc::format!(
            "need v >= 2, m, k, lambda >= 1 and mk <= v (got {v},{m},{k},{lambda})"
        )));
    }
    if !params.is_admissible() {
        return Err(Error::Inadmissible { v, m, k, lambda });
    }

    let mut fired = Vec::new();
    if (m as u128) * (k as u128) == v as u128 && k > 1 {
        fired.push(Reason::EqualPartition);
    }
    if lambda == 1 && m >= 3 && k > 1 {
        fired.push(Reason::LambdaOne);
    }
    if (m == 3 || m == 4) && v > m {
        fired.push(Reason::ThreeOrFourSets);
    }
    if is_prime(v) && k > 1 && m > 2 {
        fired.push(Reason::PrimeOrder);
    }
    let pq = pq_analysis(&params);
    if pq.as_ref().is_some_and(|a| !a.survives()) {
        fired.push(Reason::TwoPrimes);
    }

    let (status, reason) = if let Some(known) = known_family(&params) {
        (Status::KnownFamily, known)
    } else if let Some(&first) = fired.first() {
        (Status::RuledOut, first)
    } else {
        (Status::Open, Reason::None)
    };
    Ok(Verdict {
        params,
        status,
        reason,
        fired,
        pq,
    })
}

/// Filters applied by [`enumerate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub status: Option<Status>,
    pub k_min: u64,
    pub m_min: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            status: None,
            k_min: 1,
            m_min: 2,
        }
    }
}

/// Verdicts for one group order, ordered by `(m, k)`.
pub fn verdicts_for_order(v: u64, options: &EnumerateOptions) -> Vec<Verdict> {
    if v < 2 {
        return Vec::new();
    }
    let mut params = Vec::new();
    let n = v - 1;
    for k in options.k_min.max(1)..=v / 2 {
        // (m − 1) must be a multiple of (v − 1)/gcd(k², v − 1)
        let k2_mod = ((k as u128 * k as u128) % n as u128) as u64;
        let step = n / gcd(k2_mod, n);
        let m_max = v / k;
        let mut m = 1 + step;
        while m <= m_max {
            if m >= options.m_min {
                let lambda = ((k as u128 * k as u128 * (m as u128 - 1)) / n as u128) as u64;
                params.push(ParameterSet::new(v, m, k, lambda));
            }
            m += step;
        }
    }
    params.sort_unstable();
    params
        .into_iter()
        .map(|p| classify(p).expect("enumerated parameters are admissible"))
        .filter(|verdict| options.status.is_none_or(|s| verdict.status == s))
        .collect()
}

/// All verdicts with `2 ≤ v ≤ v_max`, in lexicographic `(v, m, k)` order.
pub fn enumerate(v_max: u64, options: EnumerateOptions) -> Result<impl Iterator<Item = Verdict>> {
    if v_max > SIEVE_MAX_ORDER {
        return Err(Error::BoundExceeded {
            value: v_max,
            bound: SIEVE_MAX_ORDER,
        });
    }
    Ok((2..=v_max).flat_map(move |v| verdicts_for_order(v, &options)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn verdict(v: u64, m: u64, k: u64, l: u64) -> Verdict {
        classify(ParameterSet::new(v, m, k, l)).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(admissible_lambda(217, 9, 9).unwrap(), Some(3));
        assert_eq!(admissible_lambda(5, 2, 2).unwrap(), Some(1));
        assert_eq!(admissible_lambda(7, 3, 2).unwrap(), None);
        assert_eq!(admissible_lambda(7, 1, 2).unwrap(), None);
        assert!(admissible_lambda(7, 4, 2).is_err());
        assert!(admissible_lambda(1, 1, 1).is_err());
    }

    #[test]
    fn open_case_217() {
        let v = verdict(217, 9, 9, 3);
        assert_eq!(v.status, Status::Open);
        assert_eq!(v.reason, Reason::None);
        let pq = v.pq.unwrap();
        assert_eq!((pq.p, pq.q), (7, 31));
        assert!(pq.cases[0].divides_m_minus_2);
        assert!(pq.cases[0].divides_k.is_none());
        assert!(!pq.cases[1].passes());
    }

    #[test]
    fn classification_examples() {
        let v = verdict(13, 4, 2, 1);
        assert_eq!(v.status, Status::RuledOut);
        assert_eq!(v.reason, Reason::LambdaOne);
        assert_eq!(
            v.fired,
            vec![
                Reason::LambdaOne,
                Reason::ThreeOrFourSets,
                Reason::PrimeOrder
            ]
        );

        let v = verdict(10, 2, 3, 1);
        assert_eq!(
            (v.status, v.reason),
            (Status::KnownFamily, Reason::KnownPair)
        );

        let v = verdict(33, 7, 4, 3);
        assert_eq!((v.status, v.reason), (Status::RuledOut, Reason::TwoPrimes));

        let v = verdict(243, 11, 22, 20);
        assert_eq!(
            (v.status, v.reason),
            (Status::KnownFamily, Reason::KnownRegistry)
        );

        let v = verdict(7, 7, 1, 1);
        assert_eq!(
            (v.status, v.reason),
            (Status::KnownFamily, Reason::KnownSingletons)
        );
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert!(matches!(
            classify(ParameterSet::new(7, 3, 2, 1)),
            Err(Error::Inadmissible { .. })
        ));
        assert!(classify(ParameterSet::new(7, 4, 2, 1)).is_err());
        assert!(classify(ParameterSet::new(7, 2, 2, 0)).is_err());
    }

    #[test]
    fn divides_k_case_arithmetic() {
        let mut found = false;
        for verdict in enumerate(
            400,
            EnumerateOptions {
                k_min: 2,
                m_min: 5,
                status: None,
            },
        )
        .unwrap()
        {
            let Some(pq) = &verdict.pq else { continue };
            for case in &pq.cases {
                if let Some(c) = case.divides_k {
                    found = true;
                    let p = verdict.params;
                    assert_eq!(c.s * case.prime, p.k);
                    // gcd(r, v − 1) = 1 forces r² | λ
                    let t = c.t.unwrap();
                    assert_eq!(t * case.prime * case.prime, p.lambda);
                    assert!(c.reduced_equation);
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn enumeration_order_and_filters() {
        let all: Vec<Verdict> = enumerate(30, EnumerateOptions::default())
            .unwrap()
            .collect();
        let keys: Vec<(u64, u64, u64)> = all
            .iter()
            .map(|v| (v.params.v, v.params.m, v.params.k))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for v in &all {
            let p = v.params;
            assert!(p.is_admissible() && p.m * p.k <= p.v && p.m >= 2);
        }
        let small: Vec<Verdict> = enumerate(5, EnumerateOptions::default()).unwrap().collect();
        assert!(small
            .iter()
            .any(|v| v.params == ParameterSet::new(5, 5, 1, 1) && v.status == Status::KnownFamily));
        assert!(small
            .iter()
            .any(|v| v.params == ParameterSet::new(5, 2, 2, 1) && v.status == Status::KnownFamily));
        let open = EnumerateOptions {
            status: Some(Status::Open),
            k_min: 2,
            m_min: 3,
        };
        assert_eq!(enumerate(10, open).unwrap().count(), 0);
        assert!(enumerate(217, open)
            .unwrap()
            .any(|v| v.params == ParameterSet::new(217, 9, 9, 3)));
        assert!(enumerate(SIEVE_MAX_ORDER + 1, open).is_err());
    }

    /// Brute force over every (v, m, k) triple.
    #[test]
    fn enumeration_matches_brute_force() {
        let mut brute = Vec::new();
        for v in 2u64..=60 {
            for m in 2..=v {
                for k in 1..=v / m {
                    if let Some(l) = admissible_lambda(v, m, k).unwrap() {
                        brute.push(ParameterSet::new(v, m, k, l));
                    }
                }
            }
        }
        let fast: Vec<ParameterSet> = enumerate(60, EnumerateOptions::default())
            .unwrap()
            .map(|v| v.params)
            .collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn known_families_never_ruled_out() {
        for k in 1..=30u64 {
            assert_eq!(verdict(k * k + 1, 2, k, 1).status, Status::KnownFamily);
        }
        for v in 2..=100u64 {
            assert_eq!(verdict(v, v, 1, 1).status, Status::KnownFamily);
        }
    }

    #[test]
    fn prime_orders_ruled_out() {
        let opts = EnumerateOptions {
            status: None,
            k_min: 2,
            m_min: 3,
        };
        for verdict in enumerate(200, opts)
            .unwrap()
            .filter(|v| is_prime(v.params.v))
        {
            assert_eq!(verdict.status, Status::RuledOut);
            assert!(verdict.fired.contains(&Reason::PrimeOrder));
        }
    }
}
