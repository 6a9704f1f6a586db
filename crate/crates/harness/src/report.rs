//! Text, record and JSON renderings of suite reports.
//!
//! Records and JSON omit wall-clock timings unless asked for, so that two
//! runs with the same flags produce byte-identical output.

use std::fmt::Write as _;

use braid_core::BraidWord;
use serde::Serializer;

use crate::boundary::BoundaryReport;
use crate::nonmerging::{SuiteReport, TrialReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Records,
    Json,
}

pub(crate) fn word_text<S: Serializer>(w: &BraidWord, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(w)
}

pub(crate) fn optional_word_text<S: Serializer>(w: &Option<BraidWord>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.collect_str(w),
        None => s.serialize_none(),
    }
}

fn strip_timings(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("micros");
            map.values_mut().for_each(strip_timings);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

fn to_json<T: serde::Serialize>(value: &T, timings: bool) -> String {
    let mut v = serde_json::to_value(value).expect("reports serialize");
    if !timings {
        strip_timings(&mut v);
    }
    let mut out = serde_json::to_string_pretty(&v).expect("reports serialize");
    out.push('\n');
    out
}

/// One tab-separated line per trial: trial, mode, verdict in `B_m`, verdict
/// in `B_n`, general-embedding verdict (`-` if not run), consistency flag,
/// then the three decision times in microseconds when `timings` is set.
pub fn trial_record(t: &TrialReport, timings: bool) -> String {
    let general = t.general.as_ref().map_or("-".to_string(), |g| g.verdict.to_string());
    let mut line = format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        t.trial,
        t.mode,
        t.small.verdict,
        t.embedded.verdict,
        general,
        t.consistent() && t.general_agrees()
    );
    if timings {
        let g = t.general.as_ref().map_or("-".to_string(), |g| g.micros.to_string());
        write!(line, "\t{}\t{}\t{}", t.small.micros, t.embedded.micros, g).unwrap();
    }
    line
}

pub fn render_suite(report: &SuiteReport, format: Format, timings: bool) -> String {
    match format {
        Format::Json => to_json(report, timings),
        Format::Records => {
            let mut out = String::new();
            for t in &report.trials {
                out.push_str(&trial_record(t, timings));
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let cfg = &report.config;
            let s = &report.summary;
            let mut out = String::new();
            for t in &report.trials {
                if !(t.consistent() && t.general_agrees() && t.certificates_ok()) || t.theorem_violation {
                    writeln!(out, "VIOLATION trial {}: a = {}, b = {} ({})", t.trial, t.a, t.b, trial_record(t, true)).unwrap();
                }
            }
            let total_us: u64 = report
                .trials
                .iter()
                .map(|t| t.small.micros + t.embedded.micros + t.general.as_ref().map_or(0, |g| g.micros))
                .sum();
            writeln!(out, "non-merging B_{} -> B_{}: {} trials, seed {}, maxlen {}", cfg.m, cfg.n, s.trials, cfg.seed, cfg.max_len).unwrap();
            writeln!(out, "  conjugate pairs      {}", s.conjugate).unwrap();
            writeln!(out, "  non-conjugate pairs  {}", s.not_conjugate).unwrap();
            writeln!(out, "  inconsistent         {}", s.inconsistent).unwrap();
            if cfg.general_conj_len.is_some() {
                writeln!(out, "  general disagreements {}", s.general_disagreements).unwrap();
            }
            writeln!(out, "  theorem violations   {}", s.theorem_violations).unwrap();
            writeln!(out, "  certificates checked {} ({} failed)", s.certificates, s.certificate_failures).unwrap();
            writeln!(out, "  skipped              {} ({:.1}%)", s.skipped, 100.0 * s.skip_rate()).unwrap();
            if timings {
                writeln!(out, "  decision time        {:.3} ms total", total_us as f64 / 1000.0).unwrap();
            }
            out
        }
    }
}

pub fn render_boundary(report: &BoundaryReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report, false),
        Format::Records => {
            let mut out = String::new();
            for f in &report.failures {
                writeln!(out, "{}\t{}\t{}", f.trial, f.word, f.reason).unwrap();
            }
            writeln!(
                out,
                "summary\t{}\t{}\t{}\t{}\t{}",
                report.trials, report.preserved, report.nontrivial, report.non_periodic, report.failures.len()
            )
            .unwrap();
            out
        }
        Format::Text => {
            let mut out = String::new();
            for f in &report.failures {
                writeln!(out, "FAIL trial {}: {} ({})", f.trial, f.word, f.reason).unwrap();
            }
            writeln!(out, "boundary B_{} -> B_{}: {} trials, seed {}", report.m, report.n, report.trials, report.seed).unwrap();
            writeln!(out, "  boundary preserved   {}/{}", report.preserved, report.trials).unwrap();
            writeln!(out, "  non-periodic         {}/{} nontrivial", report.non_periodic, report.nontrivial).unwrap();
            out
        }
    }
}
