//! JSON document builders. All maps are serde_json's default BTreeMap, so
//! keys serialize sorted and identical inputs give byte-identical output.
//! Arbitrary-precision integers are emitted as strings, exact rationals as
//! "num/den" strings; indices and vertices are 1-based in reports.

use num_bigint::BigInt;
use serde_json::{json, Value};
use symtrace_core::harness::{CampaignReport, Dedupe, EnumSpec};
use symtrace_core::matrices::{ClassificationReport, IntMatrix, RatMatrix, TriState, Witness};
use symtrace_core::measures::BoundReport;
use symtrace_core::numerics::{approx, Rational};
use symtrace_core::screener::{ObstructionVerdict, ScreenVerdict};
use symtrace_core::symmetry::ScalingCertificate;

use crate::formats::format_rational;

pub fn tri(value: TriState) -> Value {
    Value::String(
        match value {
            TriState::Yes => "yes",
            TriState::No => "no",
            TriState::NotApplicable => "not-applicable",
        }
        .into(),
    )
}

fn rational(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

fn witness(w: &Option<Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(Witness::Pair(i, j)) => json!({"kind": "pair", "indices": [i + 1, j + 1]}),
        Some(Witness::Cycle(vs)) => json!({
            "kind": "cycle",
            "vertices": vs.iter().map(|v| v + 1).collect::<Vec<usize>>(),
        }),
        Some(Witness::Diagonal(i)) => json!({"kind": "diagonal", "index": i + 1}),
    }
}

pub fn classification(report: &ClassificationReport) -> Value {
    json!({
        "n": report.n,
        "symmetric": tri(report.symmetric),
        "sign_symmetric": tri(report.sign_symmetric),
        "cycle_condition": tri(report.cycle_condition),
        "rational_cycle_condition": tri(report.rational_cycle_condition),
        "connected": tri(report.connected),
        "superdiagonal_nonzero": tri(report.superdiagonal_nonzero),
        "subdiagonal_nonzero": tri(report.subdiagonal_nonzero),
        "positive_definite": tri(report.positive_definite),
        "in_s_n": tri(report.in_s_n),
        "in_t_n": tri(report.in_t_n),
        "witness": witness(&report.witness),
    })
}

pub fn trace_value(n: usize, k: u32, trace: &Rational, human: bool) -> Value {
    let abs_trace = trace / Rational::from(BigInt::from(n));
    let mut doc = json!({
        "n": n,
        "k": k,
        "trace": rational(trace),
        "abs_trace": rational(&abs_trace),
    });
    if human {
        doc["trace_approx"] = json!(approx(trace));
        doc["abs_trace_approx"] = json!(approx(&abs_trace));
    }
    doc
}

pub fn bounds(report: &BoundReport, human: bool) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|rec| {
            let mut doc = json!({
                "k": rec.k,
                "trace": rational(&rec.trace),
                "bound": rec.bound.to_string(),
                "margin": rational(&rec.margin),
            });
            if human {
                doc["margin_approx"] = json!(approx(&rec.margin));
            }
            doc
        })
        .collect();
    json!({
        "n": report.n,
        "applicable": report.applicable,
        "trace": rational(&report.trace),
        "trace_bound": report.trace_bound.to_string(),
        "trace_margin": rational(&report.trace_margin),
        "records": records,
        "has_violation": report.has_violation(),
    })
}

pub fn matrix_rows(m: &IntMatrix) -> Value {
    let n = m.n();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array((0..n).map(|j| Value::String(m.get(i, j).to_string())).collect())
            })
            .collect(),
    )
}

fn rat_matrix_rows(m: &RatMatrix) -> Value {
    let n = m.n();
    Value::Array(
        (0..n)
            .map(|i| Value::Array((0..n).map(|j| rational(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn rationalization(n: usize, matrix: &RatMatrix, cert: &ScalingCertificate) -> Value {
    json!({
        "n": n,
        "matrix": rat_matrix_rows(matrix),
        "certificate": {
            "identity": cert.is_identity(),
            "tree_edges": cert
                .tree_edges()
                .iter()
                .map(|&(parent, child)| vec![parent + 1, child + 1])
                .collect::<Vec<Vec<usize>>>(),
            "ratios": cert.ratios().iter().map(rational).collect::<Vec<Value>>(),
        },
    })
}

fn enum_spec(spec: &EnumSpec) -> Value {
    json!({
        "n": spec.n,
        "diag_max": spec.diag_max,
        "off_max": spec.off_max,
        "dedupe": match spec.dedupe {
            Dedupe::None => "none",
            Dedupe::PermutationCanonical => "permutation-canonical",
        },
        "require_connected": spec.require_connected,
        "require_pd": spec.require_pd,
        "budget": spec.budget,
    })
}

pub fn campaign(report: &CampaignReport) -> Value {
    let extremum = |e: &Option<symtrace_core::harness::Extremum>| match e {
        None => Value::Null,
        Some(e) => json!({
            "trace": e.trace.to_string(),
            "trace2": e.trace2.to_string(),
            "matrix": matrix_rows(&e.matrix),
        }),
    };
    json!({
        "spec": enum_spec(&report.spec),
        "k_max": report.k_max,
        "count": report.count,
        "min_trace": extremum(&report.min_trace),
        "min_trace2": extremum(&report.min_trace2),
        "violations": report
            .violations
            .iter()
            .map(|v| json!({
                "k": v.k,
                "trace": v.trace.to_string(),
                "bound": v.bound.to_string(),
                "matrix": matrix_rows(&v.matrix),
            }))
            .collect::<Vec<Value>>(),
        "spectrum": report
            .spectrum
            .iter()
            .map(|(t, t2)| json!([rational(t), rational(t2)]))
            .collect::<Vec<Value>>(),
    })
}

pub fn screen(verdict: &ScreenVerdict, degree: usize) -> Value {
    json!({
        "degree": degree,
        "excluded": verdict.excluded,
        "violated_k": verdict.violated_k,
        "trace_violated": verdict.excluded && verdict.trace_violated(),
        "trace": rational(verdict.s_values.s(1)),
        "trace_bound": verdict.trace_bound.to_string(),
        "levels": verdict
            .bounds
            .iter()
            .map(|(k, bound)| json!({
                "k": k,
                "s": rational(verdict.s_values.s(1usize << k)),
                "bound": bound.to_string(),
            }))
            .collect::<Vec<Value>>(),
        "e2": verdict.e2.as_ref().map(rational).unwrap_or(Value::Null),
        "e2_threshold": verdict
            .e2_threshold
            .as_ref()
            .map(|t| Value::String(t.to_string()))
            .unwrap_or(Value::Null),
        "note": verdict.note,
    })
}

pub fn obstruction(verdict: &ObstructionVerdict) -> Value {
    json!({
        "excluded": verdict.excluded,
        "factors": verdict
            .factors
            .iter()
            .map(|f| json!({
                "degree": f.degree,
                "trace": f.trace.to_string(),
                "deficit": f.deficit.to_string(),
                "totally_positive": f.totally_positive,
            }))
            .collect::<Vec<Value>>(),
        "note": verdict.note,
    })
}
