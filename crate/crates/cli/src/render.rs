use std::fmt::Write as _;

use clap::ValueEnum;
use eulersum::verify::{weight_report, Bucket, Parity, Summary};
use eulersum::VerificationRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn parity(p: Option<Parity>) -> &'static str {
    match p {
        Some(Parity::Odd) => "odd",
        Some(Parity::Even) => "even",
        None => "",
    }
}

fn bucket(b: Bucket) -> &'static str {
    match b {
        Bucket::Odd => "odd weight",
        Bucket::Even => "even weight",
        Bucket::Exact => "exact",
    }
}

pub fn records_text(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status} {} {}", r.identity, r.params);
        if let Some(w) = r.weight {
            let _ = write!(out, " w={w} {}", parity(r.parity));
        }
        if let (Some(res), Some(tol)) = (&r.residual, &r.tolerance) {
            let _ = write!(out, " residual={res} tol={tol}");
        }
        if r.marginal {
            out.push_str(" [marginal]");
        }
        if r.retried {
            out.push_str(" [retried]");
        }
        if let Some(ms) = r.elapsed_ms {
            let _ = write!(out, " {ms:.1}ms");
        }
        if let Some(e) = &r.error {
            let _ = write!(out, " error: {e}");
        }
        out.push('\n');
        if let Some(label) = &r.label {
            let _ = writeln!(out, "     {label}");
        }
    }
    out
}

pub fn summary_text(s: &Summary) -> String {
    let mut out = format!(
        "{} records: {} passed, {} failed ({} marginal, {} retried)\n",
        s.total, s.passed, s.failed, s.marginal, s.retried
    );
    for g in &s.groups {
        let _ = writeln!(out, "  {} {}: {}/{}", g.identity, bucket(g.bucket), g.passed, g.total);
    }
    out
}

pub fn records_csv(records: &[VerificationRecord], timings: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![
        "identity",
        "params",
        "label",
        "kind",
        "weight",
        "parity",
        "lhs",
        "rhs",
        "residual",
        "tolerance",
        "passed",
        "marginal",
        "retried",
        "precision_bits",
        "error",
    ];
    if timings {
        header.push("elapsed_ms");
    }
    w.write_record(&header).expect("in-memory write");
    let opt = |v: &Option<String>| v.clone().unwrap_or_default();
    for r in records {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let kind = serde_json::to_value(r.kind)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
            .unwrap_or_default();
        let mut row = vec![
            r.identity.to_string(),
            params.join(";"),
            opt(&r.label),
            kind,
            r.weight.map(|w| w.to_string()).unwrap_or_default(),
            parity(r.parity).to_string(),
            opt(&r.lhs),
            opt(&r.rhs),
            opt(&r.residual),
            opt(&r.tolerance),
            r.passed.to_string(),
            r.marginal.to_string(),
            r.retried.to_string(),
            r.precision_bits.map(|b| b.to_string()).unwrap_or_default(),
            opt(&r.error),
        ];
        if timings {
            row.push(r.elapsed_ms.map(|t| format!("{t:.3}")).unwrap_or_default());
        }
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Rendered report plus the summary used to pick the exit status.
pub fn report(records: &[VerificationRecord], format: Format, timings: bool) -> (String, Summary) {
    let summary = weight_report(records);
    let body = match format {
        Format::Text => records_text(records) + &summary_text(&summary),
        Format::Json => eulersum::verify::to_jsonl(records),
        Format::Csv => records_csv(records, timings),
    };
    (body, summary)
}
