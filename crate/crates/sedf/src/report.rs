//! JSON-lines serialization of character reports.

use std::collections::BTreeMap;

use sedf_core::analysis::{char_reports, CharValue};
use sedf_core::{CharReport, SetFamily};
use serde::Serialize;

/// Values are rounded to this many decimal places so that output is stable.
const DIGITS: i32 = 12;

fn clean(x: f64) -> f64 {
    let scale = 10f64.powi(DIGITS);
    let r = (x * scale).round() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueJson {
    pub zero: bool,
    pub re: f64,
    pub im: f64,
}

impl From<&CharValue> for ValueJson {
    fn from(v: &CharValue) -> Self {
        ValueJson {
            zero: v.zero,
            re: if v.zero { 0.0 } else { clean(v.value.re) },
            im: if v.zero { 0.0 } else { clean(v.value.im) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SetJson {
    pub zero: bool,
    pub re: f64,
    pub im: f64,
    pub alpha: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportJson {
    pub label: Vec<u64>,
    pub order: u64,
    #[serde(rename = "X")]
    pub x: ValueJson,
    pub sets: Vec<SetJson>,
    pub classes: Vec<Vec<usize>>,
    pub split: Option<[usize; 2]>,
    pub violations: Vec<&'static str>,
}

impl From<&CharReport> for ReportJson {
    fn from(r: &CharReport) -> Self {
        ReportJson {
            label: r.character.label().0,
            order: r.character.order(),
            x: (&r.total).into(),
            sets: r
                .sets
                .iter()
                .map(|s| SetJson {
                    zero: s.zero,
                    re: if s.zero { 0.0 } else { clean(s.value.re) },
                    im: if s.zero { 0.0 } else { clean(s.value.im) },
                    alpha: s.alpha.map(clean),
                })
                .collect(),
            classes: r.classes.clone(),
            split: r.split.map(|(a, b)| [a, b]),
            violations: r.violations.iter().map(|v| v.code()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub characters: usize,
    pub lambda: u64,
    pub x_zero: usize,
    /// Keyed by `"A,B"`.
    pub splits: BTreeMap<String, usize>,
    pub violations: BTreeMap<&'static str, usize>,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

pub fn summarize(reports: &[CharReport], lambda: u64, mut annotations: Vec<String>) -> Summary {
    let mut splits = BTreeMap::new();
    let mut violations = BTreeMap::new();
    for r in reports {
        if let Some((a, b)) = r.split {
            *splits.entry(format!("{a},{b}")).or_insert(0) += 1;
        }
        for v in &r.violations {
            *violations.entry(v.code()).or_insert(0) += 1;
        }
        if let Some(norm) = r.five_set_norm {
            annotations.push(format!(
                "character {:?}: m = 5 with split (2,3) gives 2|X|^2 = {} against lambda = {lambda}",
                r.character.label().0,
                clean(norm)
            ));
        }
    }
    Summary {
        characters: reports.len(),
        lambda,
        x_zero: reports.iter().filter(|r| r.total.zero).count(),
        splits,
        violations,
        annotations,
    }
}

/// One JSON line per non-principal character followed by a summary line.
pub fn render(
    family: &SetFamily,
    lambda: u64,
    annotations: Vec<String>,
) -> sedf_core::Result<String> {
    let reports = char_reports(family, lambda as i64)?;
    let mut out = String::new();
    for r in &reports {
        out.push_str(&serde_json::to_string(&ReportJson::from(r)).expect("reports serialize"));
        out.push('\n');
    }
    let summary = summarize(&reports, lambda, annotations);
    out.push_str(
        &serde_json::to_string(&SummaryLine { summary: &summary }).expect("summary serializes"),
    );
    out.push('\n');
    Ok(out)
}
