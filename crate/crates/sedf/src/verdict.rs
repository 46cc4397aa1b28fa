//! Verdict serialization: CSV rows and JSON lines.

use std::io::Write;

use sedf_core::sieve::{DividesK, PqAnalysis, PrimeCase};
use sedf_core::Verdict;
use serde::Serialize;

pub const CSV_HEADER: [&str; 7] = ["v", "m", "k", "lambda", "status", "reason", "detail_json"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DividesKJson {
    pub s: u64,
    pub t: Option<u64>,
    pub reduced_equation: bool,
    pub sm_below_other: bool,
    pub s_bound: bool,
    pub k_bound: bool,
    pub ratio_bound: bool,
    pub consistent: bool,
}

impl From<&DividesK> for DividesKJson {
    fn from(d: &DividesK) -> Self {
        DividesKJson {
            s: d.s,
            t: d.t,
            reduced_equation: d.reduced_equation,
            sm_below_other: d.sm_below_other,
            s_bound: d.s_bound,
            k_bound: d.k_bound,
            ratio_bound: d.ratio_bound,
            consistent: d.consistent(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeCaseJson {
    pub prime: u64,
    pub other: u64,
    /// 2 when `r | m − 2`, 1 when only `r | k`, absent otherwise.
    pub case: Option<u8>,
    pub divides_m_minus_2: bool,
    pub divides_k: Option<DividesKJson>,
    pub passes: bool,
}

impl From<&PrimeCase> for PrimeCaseJson {
    fn from(c: &PrimeCase) -> Self {
        let case = if c.divides_m_minus_2 {
            Some(2)
        } else if c.divides_k.is_some() {
            Some(1)
        } else {
            None
        };
        PrimeCaseJson {
            prime: c.prime,
            other: c.other,
            case,
            divides_m_minus_2: c.divides_m_minus_2,
            divides_k: c.divides_k.as_ref().map(Into::into),
            passes: c.passes(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PqJson {
    pub p: u64,
    pub q: u64,
    pub survives: bool,
    pub cases: Vec<PrimeCaseJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<&'static str>,
}

impl From<&PqAnalysis> for PqJson {
    fn from(a: &PqAnalysis) -> Self {
        PqJson {
            p: a.p,
            q: a.q,
            survives: a.survives(),
            cases: a.cases.iter().map(Into::into).collect(),
            warning: a
                .has_even_prime()
                .then_some("v = 2q: the two-prime analysis is applied with an even prime"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub fired: Vec<&'static str>,
    pub note: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pq: Option<PqJson>,
}

impl From<&Verdict> for Detail {
    fn from(v: &Verdict) -> Self {
        Detail {
            fired: v.fired.iter().map(|r| r.code()).collect(),
            note: v.reason.text(),
            pq: v.pq.as_ref().map(Into::into),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub v: u64,
    pub m: u64,
    pub k: u64,
    pub lambda: u64,
    pub status: &'static str,
    pub reason: &'static str,
    pub detail: Detail,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            v: v.params.v,
            m: v.params.m,
            k: v.params.k,
            lambda: v.params.lambda,
            status: v.status.as_str(),
            reason: v.reason.code(),
            detail: v.into(),
        }
    }
}

pub fn detail_json(v: &Verdict) -> String {
    serde_json::to_string(&Detail::from(v)).expect("details serialize")
}

pub fn json_line(v: &Verdict) -> String {
    serde_json::to_string(&VerdictJson::from(v)).expect("verdicts serialize")
}

pub fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out)
}

pub fn write_csv_header<W: Write>(w: &mut csv::Writer<W>) -> csv::Result<()> {
    w.write_record(CSV_HEADER)
}

pub fn write_csv_row<W: Write>(w: &mut csv::Writer<W>, v: &Verdict) -> csv::Result<()> {
    let p = &v.params;
    w.write_record([
        p.v.to_string(),
        p.m.to_string(),
        p.k.to_string(),
        p.lambda.to_string(),
        v.status.as_str().to_string(),
        v.reason.code().to_string(),
        detail_json(v),
    ])
}
