//! Output rendering: canonical single-line JSON, flat CSV, and a
//! human-readable text form.
//!
//! The JSON writer is deliberately hand-rolled so the output is
//! canonical: fixed key order per object kind, floats always printed
//! with 12 significant digits (trailing zeros trimmed, `e` exponent
//! notation), no locale dependence, one line per document.

use crate::args::Format;
use bhix_core::bounds::BoundReport;
use bhix_core::scan::{
    BoundSweepReport, ConjectureScanReport, Diameter2Report, DiameterThresholdReport,
    FamiliesScanReport, TreeWitness,
};
use bhix_core::IndexReport;

/// Formats a float with 12 significant digits in exponent notation,
/// trimming trailing mantissa zeros: `8.25e0`, `1e-8`, `-4.114e0`.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        // Should never reach serialized output; keep valid JSON anyway.
        return "null".to_string();
    }
    let s = format!("{v:.11e}");
    let (mantissa, exponent) = s.split_once('e').expect("exponent notation");
    let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
    format!("{mantissa}e{exponent}")
}

/// JSON string literal with escaping (graph6 bytes include `\`).
pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Ordered JSON object builder; keys appear in insertion order.
#[derive(Default)]
pub struct JsonObj {
    parts: Vec<String>,
}

impl JsonObj {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn raw(mut self, key: &str, raw_value: impl Into<String>) -> Self {
        self.parts
            .push(format!("{}:{}", json_string(key), raw_value.into()));
        self
    }

    pub fn str(self, key: &str, value: &str) -> Self {
        let v = json_string(value);
        self.raw(key, v)
    }

    pub fn opt_str(self, key: &str, value: Option<&str>) -> Self {
        match value {
            Some(v) => self.str(key, v),
            None => self.raw(key, "null"),
        }
    }

    pub fn f64(self, key: &str, value: f64) -> Self {
        let v = fmt_f64(value);
        self.raw(key, v)
    }

    pub fn opt_f64(self, key: &str, value: Option<f64>) -> Self {
        match value {
            Some(v) => self.f64(key, v),
            None => self.raw(key, "null"),
        }
    }

    pub fn int(self, key: &str, value: impl Into<u128>) -> Self {
        let v = value.into().to_string();
        self.raw(key, v)
    }

    pub fn bool(self, key: &str, value: bool) -> Self {
        self.raw(key, if value { "true" } else { "false" })
    }

    pub fn str_array(self, key: &str, values: &[String]) -> Self {
        let inner: Vec<String> = values.iter().map(|s| json_string(s)).collect();
        self.raw(key, format!("[{}]", inner.join(",")))
    }

    pub fn f64_array(self, key: &str, values: &[f64]) -> Self {
        let inner: Vec<String> = values.iter().map(|&v| fmt_f64(v)).collect();
        self.raw(key, format!("[{}]", inner.join(",")))
    }

    pub fn int_array(self, key: &str, values: &[u32]) -> Self {
        let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        self.raw(key, format!("[{}]", inner.join(",")))
    }

    pub fn obj_array(self, key: &str, values: Vec<String>) -> Self {
        self.raw(key, format!("[{}]", values.join(",")))
    }

    pub fn finish(self) -> String {
        format!("{{{}}}", self.parts.join(","))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_doc(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&csv_line(&row));
        out.push('\n');
    }
    out
}

fn text_doc(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:width$}  {v}\n"));
    }
    out
}

// ---------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------

/// Full index report for a connected graph.
pub fn render_index_report(r: &IndexReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .int("n", r.n as u128)
                .int("m", r.m as u128)
                .f64("bh_spectral", r.bh_spectral)
                .f64("bh_distance", r.bh_distance)
                .f64("kirchhoff", r.kirchhoff)
                .int("wiener", r.wiener)
                .int("zagreb_m1", r.zagreb_m1)
                .int("forgotten_f", r.forgotten_f)
                .int("triangles", r.triangles)
                .str("tau", &r.tau.to_string())
                .f64("spectral_ratio", r.spectral_ratio)
                .f64("sbi", r.sbi)
                .f64("gbi", r.gbi)
                .f64("xi_b", r.xi_b)
                .f64("xi_b_star", r.xi_b_star)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "n",
                "m",
                "bh_spectral",
                "bh_distance",
                "kirchhoff",
                "wiener",
                "zagreb_m1",
                "forgotten_f",
                "triangles",
                "tau",
                "spectral_ratio",
                "sbi",
                "gbi",
                "xi_b",
                "xi_b_star",
            ],
            vec![vec![
                r.n.to_string(),
                r.m.to_string(),
                fmt_f64(r.bh_spectral),
                fmt_f64(r.bh_distance),
                fmt_f64(r.kirchhoff),
                r.wiener.to_string(),
                r.zagreb_m1.to_string(),
                r.forgotten_f.to_string(),
                r.triangles.to_string(),
                r.tau.to_string(),
                fmt_f64(r.spectral_ratio),
                fmt_f64(r.sbi),
                fmt_f64(r.gbi),
                fmt_f64(r.xi_b),
                fmt_f64(r.xi_b_star),
            ]],
        ),
        Format::Text => text_doc(&[
            ("n", r.n.to_string()),
            ("m", r.m.to_string()),
            ("bh_spectral", format!("{}", r.bh_spectral)),
            ("bh_distance", format!("{}", r.bh_distance)),
            ("kirchhoff", format!("{}", r.kirchhoff)),
            ("wiener", r.wiener.to_string()),
            ("zagreb_m1", r.zagreb_m1.to_string()),
            ("forgotten_f", r.forgotten_f.to_string()),
            ("triangles", r.triangles.to_string()),
            ("tau", r.tau.to_string()),
            ("spectral_ratio", format!("{}", r.spectral_ratio)),
            ("sbi", format!("{}", r.sbi)),
            ("gbi", format!("{}", r.gbi)),
            ("xi_b", format!("{}", r.xi_b)),
            ("xi_b_star", format!("{}", r.xi_b_star)),
        ]),
    }
}

/// The degree-local subset still defined for a disconnected graph.
pub struct PartialReport {
    pub n: usize,
    pub m: usize,
    pub zagreb_m1: u64,
    pub forgotten_f: u64,
    pub triangles: u64,
}

pub fn render_partial_report(r: &PartialReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .int("n", r.n as u128)
                .int("m", r.m as u128)
                .bool("connected", false)
                .int("zagreb_m1", r.zagreb_m1)
                .int("forgotten_f", r.forgotten_f)
                .int("triangles", r.triangles)
                .str("tau", "0")
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "n",
                "m",
                "connected",
                "zagreb_m1",
                "forgotten_f",
                "triangles",
                "tau",
            ],
            vec![vec![
                r.n.to_string(),
                r.m.to_string(),
                "false".to_string(),
                r.zagreb_m1.to_string(),
                r.forgotten_f.to_string(),
                r.triangles.to_string(),
                "0".to_string(),
            ]],
        ),
        Format::Text => text_doc(&[
            ("n", r.n.to_string()),
            ("m", r.m.to_string()),
            ("connected", "false".to_string()),
            ("zagreb_m1", r.zagreb_m1.to_string()),
            ("forgotten_f", r.forgotten_f.to_string()),
            ("triangles", r.triangles.to_string()),
            ("tau", "0".to_string()),
        ]),
    }
}

// ---------------------------------------------------------------------
// verify-bounds (single graph)
// ---------------------------------------------------------------------

pub struct SingleBoundsOutput {
    /// graph6 form when the order permits one (`n < 63`).
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub p_grid: Vec<f64>,
    pub reports: Vec<BoundReport>,
    pub all_hold: bool,
}

fn bound_report_json(r: &BoundReport) -> String {
    JsonObj::new()
        .str("bound_id", r.bound_id.as_str())
        .opt_f64("p", r.p)
        .str("direction", r.direction.as_str())
        .f64("lhs", r.lhs)
        .f64("rhs", r.rhs)
        .f64("slack", r.slack)
        .bool("holds", r.holds)
        .bool("equality", r.equality)
        .opt_f64("rhs_alt", r.rhs_alt)
        .opt_str("note", r.note.as_deref())
        .finish()
}

pub fn render_single_bounds(out: &SingleBoundsOutput, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let reports: Vec<String> = out.reports.iter().map(bound_report_json).collect();
            let json = JsonObj::new()
                .opt_str("graph6", out.graph6.as_deref())
                .int("n", out.n as u128)
                .int("m", out.m as u128)
                .f64_array("p_grid", &out.p_grid)
                .obj_array("reports", reports)
                .bool("all_hold", out.all_hold)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => {
            let rows = out
                .reports
                .iter()
                .map(|r| {
                    vec![
                        out.graph6.clone().unwrap_or_default(),
                        out.n.to_string(),
                        out.m.to_string(),
                        r.bound_id.as_str().to_string(),
                        r.p.map(fmt_f64).unwrap_or_default(),
                        r.direction.as_str().to_string(),
                        fmt_f64(r.lhs),
                        fmt_f64(r.rhs),
                        fmt_f64(r.slack),
                        r.holds.to_string(),
                        r.equality.to_string(),
                        r.rhs_alt.map(fmt_f64).unwrap_or_default(),
                        r.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_doc(
                &[
                    "graph6", "n", "m", "bound_id", "p", "direction", "lhs", "rhs", "slack",
                    "holds", "equality", "rhs_alt", "note",
                ],
                rows,
            )
        }
        Format::Text => {
            let mut s = format!(
                "graph: {} (n={}, m={})\n",
                out.graph6.as_deref().unwrap_or("<order too large for graph6>"),
                out.n,
                out.m
            );
            for r in &out.reports {
                let id = match r.p {
                    Some(p) => format!("{}(p={:.4})", r.bound_id.as_str(), p),
                    None => r.bound_id.as_str().to_string(),
                };
                s.push_str(&format!(
                    "{:18} {:5} lhs {:<22} rhs {:<22} {}{}{}\n",
                    id,
                    r.direction.as_str(),
                    r.lhs,
                    r.rhs,
                    if r.holds { "holds" } else { "VIOLATED" },
                    if r.equality { " (equality)" } else { "" },
                    r.note
                        .as_deref()
                        .map(|n| format!("  note: {n}"))
                        .unwrap_or_default(),
                ));
            }
            s.push_str(&format!(
                "all_hold: {}\n",
                if out.all_hold { "true" } else { "false" }
            ));
            s
        }
    }
}

// ---------------------------------------------------------------------
// verify-bounds --exhaustive
// ---------------------------------------------------------------------

pub fn render_bound_sweep(r: &BoundSweepReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let counts: Vec<String> = r
                .equality_counts
                .iter()
                .map(|(bound, count)| {
                    JsonObj::new()
                        .str("bound", bound)
                        .int("count", *count)
                        .finish()
                })
                .collect();
            let json = JsonObj::new()
                .int("n", r.n as u128)
                .int("masks_total", r.masks_total)
                .int("connected_graphs", r.connected_graphs)
                .int("reports_evaluated", r.reports_evaluated)
                .obj_array("equality_counts", counts)
                .str_array("violations", &r.violations)
                .bool("holds_all", r.holds_all)
                .bool("equality_certification_ok", r.equality_certification_ok)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "n",
                "masks_total",
                "connected_graphs",
                "reports_evaluated",
                "violations",
                "holds_all",
                "equality_certification_ok",
            ],
            vec![vec![
                r.n.to_string(),
                r.masks_total.to_string(),
                r.connected_graphs.to_string(),
                r.reports_evaluated.to_string(),
                r.violations.len().to_string(),
                r.holds_all.to_string(),
                r.equality_certification_ok.to_string(),
            ]],
        ),
        Format::Text => {
            let mut rows = vec![
                ("n", r.n.to_string()),
                ("masks_total", r.masks_total.to_string()),
                ("connected_graphs", r.connected_graphs.to_string()),
                ("reports_evaluated", r.reports_evaluated.to_string()),
                ("violations", r.violations.len().to_string()),
                ("holds_all", r.holds_all.to_string()),
                (
                    "equality_certification_ok",
                    r.equality_certification_ok.to_string(),
                ),
            ];
            for (bound, count) in &r.equality_counts {
                if *count > 0 {
                    rows.push(("equalities", format!("{bound}: {count}")));
                }
            }
            let mut s = text_doc(&rows);
            for v in r.violations.iter().take(20) {
                s.push_str(&format!("violation: {v}\n"));
            }
            s
        }
    }
}

// ---------------------------------------------------------------------
// scans
// ---------------------------------------------------------------------

fn witness_json(w: &TreeWitness) -> String {
    JsonObj::new()
        .int_array("level_sequence", &w.level_sequence)
        .str("graph6", &w.graph6)
        .f64("value", w.value)
        .finish()
}

pub fn render_tree_scan(r: &ConjectureScanReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .str("scan", "trees")
                .int("n", r.n as u128)
                .int("tree_count", r.tree_count)
                .f64("min_value", r.min_value)
                .raw("min_witness", witness_json(&r.min_witness))
                .f64("max_value", r.max_value)
                .raw("max_witness", witness_json(&r.max_witness))
                .f64("min_runner_up", r.min_runner_up)
                .f64("max_runner_up", r.max_runner_up)
                .str_array("counterexamples", &r.counterexamples)
                .bool("conjecture_verified", r.conjecture_verified)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "scan",
                "n",
                "tree_count",
                "min_value",
                "min_graph6",
                "max_value",
                "max_graph6",
                "min_runner_up",
                "max_runner_up",
                "counterexamples",
                "conjecture_verified",
            ],
            vec![vec![
                "trees".to_string(),
                r.n.to_string(),
                r.tree_count.to_string(),
                fmt_f64(r.min_value),
                r.min_witness.graph6.clone(),
                fmt_f64(r.max_value),
                r.max_witness.graph6.clone(),
                fmt_f64(r.min_runner_up),
                fmt_f64(r.max_runner_up),
                r.counterexamples.len().to_string(),
                r.conjecture_verified.to_string(),
            ]],
        ),
        Format::Text => text_doc(&[
            ("scan", "trees".to_string()),
            ("n", r.n.to_string()),
            ("tree_count", r.tree_count.to_string()),
            (
                "minimum",
                format!("{} at {}", r.min_value, r.min_witness.graph6),
            ),
            (
                "maximum",
                format!("{} at {}", r.max_value, r.max_witness.graph6),
            ),
            ("min_runner_up", format!("{}", r.min_runner_up)),
            ("max_runner_up", format!("{}", r.max_runner_up)),
            ("counterexamples", r.counterexamples.len().to_string()),
            ("conjecture_verified", r.conjecture_verified.to_string()),
        ]),
    }
}

pub fn render_threshold_scan(r: &DiameterThresholdReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .str("scan", "t52")
                .int("n", r.n as u128)
                .f64("threshold", r.threshold)
                .int("trees_total", r.trees_total)
                .int("trees_meeting_hypothesis", r.trees_meeting_hypothesis)
                .f64("star_value", r.star_value)
                .f64("min_excess", r.min_excess)
                .str_array("violations", &r.violations)
                .bool("verified", r.verified)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "scan",
                "n",
                "threshold",
                "trees_total",
                "trees_meeting_hypothesis",
                "star_value",
                "min_excess",
                "violations",
                "verified",
            ],
            vec![vec![
                "t52".to_string(),
                r.n.to_string(),
                fmt_f64(r.threshold),
                r.trees_total.to_string(),
                r.trees_meeting_hypothesis.to_string(),
                fmt_f64(r.star_value),
                fmt_f64(r.min_excess),
                r.violations.len().to_string(),
                r.verified.to_string(),
            ]],
        ),
        Format::Text => text_doc(&[
            ("scan", "t52".to_string()),
            ("n", r.n.to_string()),
            ("threshold", format!("{}", r.threshold)),
            ("trees_total", r.trees_total.to_string()),
            (
                "trees_meeting_hypothesis",
                r.trees_meeting_hypothesis.to_string(),
            ),
            ("star_value", format!("{}", r.star_value)),
            ("min_excess", format!("{}", r.min_excess)),
            ("violations", r.violations.len().to_string()),
            ("verified", r.verified.to_string()),
        ]),
    }
}

pub fn render_diameter2_scan(r: &Diameter2Report, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .str("scan", "diameter2")
                .int("n", r.n as u128)
                .int("masks_total", r.masks_total)
                .int("diameter2_graphs", r.diameter2_graphs)
                .f64("star_value", r.star_value)
                .f64("max_non_star_value", r.max_non_star_value)
                .str("max_non_star_graph6", &r.max_non_star_graph6)
                .f64("gap", r.gap)
                .f64("min_lambda2", r.min_lambda2)
                .str_array("violations", &r.violations)
                .bool("verified", r.verified)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "scan",
                "n",
                "masks_total",
                "diameter2_graphs",
                "star_value",
                "max_non_star_value",
                "max_non_star_graph6",
                "gap",
                "min_lambda2",
                "violations",
                "verified",
            ],
            vec![vec![
                "diameter2".to_string(),
                r.n.to_string(),
                r.masks_total.to_string(),
                r.diameter2_graphs.to_string(),
                fmt_f64(r.star_value),
                fmt_f64(r.max_non_star_value),
                r.max_non_star_graph6.clone(),
                fmt_f64(r.gap),
                fmt_f64(r.min_lambda2),
                r.violations.len().to_string(),
                r.verified.to_string(),
            ]],
        ),
        Format::Text => text_doc(&[
            ("scan", "diameter2".to_string()),
            ("n", r.n.to_string()),
            ("masks_total", r.masks_total.to_string()),
            ("diameter2_graphs", r.diameter2_graphs.to_string()),
            ("star_value", format!("{}", r.star_value)),
            (
                "max_non_star",
                format!("{} at {}", r.max_non_star_value, r.max_non_star_graph6),
            ),
            ("gap", format!("{}", r.gap)),
            ("min_lambda2", format!("{}", r.min_lambda2)),
            ("violations", r.violations.len().to_string()),
            ("verified", r.verified.to_string()),
        ]),
    }
}

pub fn render_families_scan(r: &FamiliesScanReport, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .str("scan", "families")
                .int("n_max", r.n_max as u128)
                .int("double_stars_checked", r.double_stars_checked as u128)
                .int("fireflies_checked", r.fireflies_checked as u128)
                .bool("factorizations_exact", r.factorizations_exact)
                .bool("vieta_matches", r.vieta_matches)
                .f64("max_rel_error", r.max_rel_error)
                .bool("closed_forms_match", r.closed_forms_match)
                .bool("product_range_ok", r.product_range_ok)
                .str_array("failures", &r.failures)
                .bool("verified", r.verified)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "scan",
                "n_max",
                "double_stars_checked",
                "fireflies_checked",
                "factorizations_exact",
                "vieta_matches",
                "max_rel_error",
                "closed_forms_match",
                "product_range_ok",
                "failures",
                "verified",
            ],
            vec![vec![
                "families".to_string(),
                r.n_max.to_string(),
                r.double_stars_checked.to_string(),
                r.fireflies_checked.to_string(),
                r.factorizations_exact.to_string(),
                r.vieta_matches.to_string(),
                fmt_f64(r.max_rel_error),
                r.closed_forms_match.to_string(),
                r.product_range_ok.to_string(),
                r.failures.len().to_string(),
                r.verified.to_string(),
            ]],
        ),
        Format::Text => text_doc(&[
            ("scan", "families".to_string()),
            ("n_max", r.n_max.to_string()),
            ("double_stars_checked", r.double_stars_checked.to_string()),
            ("fireflies_checked", r.fireflies_checked.to_string()),
            ("factorizations_exact", r.factorizations_exact.to_string()),
            ("vieta_matches", r.vieta_matches.to_string()),
            ("max_rel_error", format!("{}", r.max_rel_error)),
            ("closed_forms_match", r.closed_forms_match.to_string()),
            ("product_range_ok", r.product_range_ok.to_string()),
            ("failures", r.failures.len().to_string()),
            ("verified", r.verified.to_string()),
        ]),
    }
}

// ---------------------------------------------------------------------
// product
// ---------------------------------------------------------------------

pub struct ProductOutput {
    pub op: String,
    pub result_n: usize,
    pub result_m: usize,
    /// graph6 of the constructed graph, when its order permits one.
    pub result_graph6: Option<String>,
    pub predicted_bh: f64,
    pub direct_bh: f64,
    pub tolerance: f64,
    pub agree: bool,
}

pub fn render_product(r: &ProductOutput, fmt: Format) -> String {
    match fmt {
        Format::Json => {
            let json = JsonObj::new()
                .str("op", &r.op)
                .int("result_n", r.result_n as u128)
                .int("result_m", r.result_m as u128)
                .opt_str("result_graph6", r.result_graph6.as_deref())
                .f64("predicted_bh", r.predicted_bh)
                .f64("direct_bh", r.direct_bh)
                .f64("tolerance", r.tolerance)
                .bool("agree", r.agree)
                .finish();
            format!("{json}\n")
        }
        Format::Csv => csv_doc(
            &[
                "op",
                "result_n",
                "result_m",
                "result_graph6",
                "predicted_bh",
                "direct_bh",
                "tolerance",
                "agree",
            ],
            vec![vec![
                r.op.clone(),
                r.result_n.to_string(),
                r.result_m.to_string(),
                r.result_graph6.clone().unwrap_or_default(),
                fmt_f64(r.predicted_bh),
                fmt_f64(r.direct_bh),
                fmt_f64(r.tolerance),
                r.agree.to_string(),
            ]],
        ),
        Format::Text => text_doc(&[
            ("op", r.op.clone()),
            ("result_n", r.result_n.to_string()),
            ("result_m", r.result_m.to_string()),
            (
                "result_graph6",
                r.result_graph6.clone().unwrap_or_else(|| "-".to_string()),
            ),
            ("predicted_bh", format!("{}", r.predicted_bh)),
            ("direct_bh", format!("{}", r.direct_bh)),
            ("tolerance", format!("{}", r.tolerance)),
            ("agree", r.agree.to_string()),
        ]),
    }
}
