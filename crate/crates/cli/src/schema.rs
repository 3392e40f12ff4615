//! Structural validation of the JSON documents this tool emits.
//!
//! Each output kind has a fixed key set with fixed types; the validator
//! rejects missing keys, unknown keys, and type mismatches, so
//! downstream consumers can rely on the wire shape. Integers must be
//! integer-valued JSON numbers; floats accept any JSON number.

use serde_json::Value;

/// Expected type of one field.
#[derive(Debug, Clone, Copy)]
pub enum Ty {
    Int,
    Float,
    Str,
    Bool,
    /// Float or null.
    OptFloat,
    /// String or null.
    OptStr,
    StrArray,
    FloatArray,
    IntArray,
    Obj(&'static [Field]),
    ObjArray(&'static [Field]),
}

/// One required field of an output object.
#[derive(Debug, Clone, Copy)]
pub struct Field {
    pub key: &'static str,
    pub ty: Ty,
}

const fn f(key: &'static str, ty: Ty) -> Field {
    Field { key, ty }
}

/// Output document kinds, one per CLI result shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputKind {
    Compute,
    ComputeDisconnected,
    BoundsSingle,
    BoundsSweep,
    ScanTrees,
    ScanT52,
    ScanDiameter2,
    ScanFamilies,
    Product,
}

pub const COMPUTE_FIELDS: &[Field] = &[
    f("n", Ty::Int),
    f("m", Ty::Int),
    f("bh_spectral", Ty::Float),
    f("bh_distance", Ty::Float),
    f("kirchhoff", Ty::Float),
    f("wiener", Ty::Int),
    f("zagreb_m1", Ty::Int),
    f("forgotten_f", Ty::Int),
    f("triangles", Ty::Int),
    f("tau", Ty::Str),
    f("spectral_ratio", Ty::Float),
    f("sbi", Ty::Float),
    f("gbi", Ty::Float),
    f("xi_b", Ty::Float),
    f("xi_b_star", Ty::Float),
];

pub const COMPUTE_DISCONNECTED_FIELDS: &[Field] = &[
    f("n", Ty::Int),
    f("m", Ty::Int),
    f("connected", Ty::Bool),
    f("zagreb_m1", Ty::Int),
    f("forgotten_f", Ty::Int),
    f("triangles", Ty::Int),
    f("tau", Ty::Str),
];

pub const BOUND_REPORT_FIELDS: &[Field] = &[
    f("bound_id", Ty::Str),
    f("p", Ty::OptFloat),
    f("direction", Ty::Str),
    f("lhs", Ty::Float),
    f("rhs", Ty::Float),
    f("slack", Ty::Float),
    f("holds", Ty::Bool),
    f("equality", Ty::Bool),
    f("rhs_alt", Ty::OptFloat),
    f("note", Ty::OptStr),
];

pub const BOUNDS_SINGLE_FIELDS: &[Field] = &[
    f("graph6", Ty::OptStr),
    f("n", Ty::Int),
    f("m", Ty::Int),
    f("p_grid", Ty::FloatArray),
    f("reports", Ty::ObjArray(BOUND_REPORT_FIELDS)),
    f("all_hold", Ty::Bool),
];

pub const EQUALITY_COUNT_FIELDS: &[Field] = &[f("bound", Ty::Str), f("count", Ty::Int)];

pub const BOUNDS_SWEEP_FIELDS: &[Field] = &[
    f("n", Ty::Int),
    f("masks_total", Ty::Int),
    f("connected_graphs", Ty::Int),
    f("reports_evaluated", Ty::Int),
    f("equality_counts", Ty::ObjArray(EQUALITY_COUNT_FIELDS)),
    f("violations", Ty::StrArray),
    f("holds_all", Ty::Bool),
    f("equality_certification_ok", Ty::Bool),
];

pub const WITNESS_FIELDS: &[Field] = &[
    f("level_sequence", Ty::IntArray),
    f("graph6", Ty::Str),
    f("value", Ty::Float),
];

pub const SCAN_TREES_FIELDS: &[Field] = &[
    f("scan", Ty::Str),
    f("n", Ty::Int),
    f("tree_count", Ty::Int),
    f("min_value", Ty::Float),
    f("min_witness", Ty::Obj(WITNESS_FIELDS)),
    f("max_value", Ty::Float),
    f("max_witness", Ty::Obj(WITNESS_FIELDS)),
    f("min_runner_up", Ty::Float),
    f("max_runner_up", Ty::Float),
    f("counterexamples", Ty::StrArray),
    f("conjecture_verified", Ty::Bool),
];

pub const SCAN_T52_FIELDS: &[Field] = &[
    f("scan", Ty::Str),
    f("n", Ty::Int),
    f("threshold", Ty::Float),
    f("trees_total", Ty::Int),
    f("trees_meeting_hypothesis", Ty::Int),
    f("star_value", Ty::Float),
    f("min_excess", Ty::Float),
    f("violations", Ty::StrArray),
    f("verified", Ty::Bool),
];

pub const SCAN_DIAMETER2_FIELDS: &[Field] = &[
    f("scan", Ty::Str),
    f("n", Ty::Int),
    f("masks_total", Ty::Int),
    f("diameter2_graphs", Ty::Int),
    f("star_value", Ty::Float),
    f("max_non_star_value", Ty::Float),
    f("max_non_star_graph6", Ty::Str),
    f("gap", Ty::Float),
    f("min_lambda2", Ty::Float),
    f("violations", Ty::StrArray),
    f("verified", Ty::Bool),
];

pub const SCAN_FAMILIES_FIELDS: &[Field] = &[
    f("scan", Ty::Str),
    f("n_max", Ty::Int),
    f("double_stars_checked", Ty::Int),
    f("fireflies_checked", Ty::Int),
    f("factorizations_exact", Ty::Bool),
    f("vieta_matches", Ty::Bool),
    f("max_rel_error", Ty::Float),
    f("closed_forms_match", Ty::Bool),
    f("product_range_ok", Ty::Bool),
    f("failures", Ty::StrArray),
    f("verified", Ty::Bool),
];

pub const PRODUCT_FIELDS: &[Field] = &[
    f("op", Ty::Str),
    f("result_n", Ty::Int),
    f("result_m", Ty::Int),
    f("result_graph6", Ty::OptStr),
    f("predicted_bh", Ty::Float),
    f("direct_bh", Ty::Float),
    f("tolerance", Ty::Float),
    f("agree", Ty::Bool),
];

impl OutputKind {
    pub fn fields(self) -> &'static [Field] {
        match self {
            OutputKind::Compute => COMPUTE_FIELDS,
            OutputKind::ComputeDisconnected => COMPUTE_DISCONNECTED_FIELDS,
            OutputKind::BoundsSingle => BOUNDS_SINGLE_FIELDS,
            OutputKind::BoundsSweep => BOUNDS_SWEEP_FIELDS,
            OutputKind::ScanTrees => SCAN_TREES_FIELDS,
            OutputKind::ScanT52 => SCAN_T52_FIELDS,
            OutputKind::ScanDiameter2 => SCAN_DIAMETER2_FIELDS,
            OutputKind::ScanFamilies => SCAN_FAMILIES_FIELDS,
            OutputKind::Product => PRODUCT_FIELDS,
        }
    }
}

fn check_type(path: &str, value: &Value, ty: Ty) -> Result<(), String> {
    let fail = |want: &str| Err(format!("{path}: expected {want}, got {value}"));
    match ty {
        Ty::Int => {
            if value.as_i64().is_some() || value.as_u64().is_some() {
                Ok(())
            } else {
                fail("integer")
            }
        }
        Ty::Float => {
            if value.is_number() {
                Ok(())
            } else {
                fail("number")
            }
        }
        Ty::Str => {
            if value.is_string() {
                Ok(())
            } else {
                fail("string")
            }
        }
        Ty::Bool => {
            if value.is_boolean() {
                Ok(())
            } else {
                fail("boolean")
            }
        }
        Ty::OptFloat => {
            if value.is_number() || value.is_null() {
                Ok(())
            } else {
                fail("number or null")
            }
        }
        Ty::OptStr => {
            if value.is_string() || value.is_null() {
                Ok(())
            } else {
                fail("string or null")
            }
        }
        Ty::StrArray => match value.as_array() {
            Some(items) if items.iter().all(Value::is_string) => Ok(()),
            _ => fail("array of strings"),
        },
        Ty::FloatArray => match value.as_array() {
            Some(items) if items.iter().all(Value::is_number) => Ok(()),
            _ => fail("array of numbers"),
        },
        Ty::IntArray => match value.as_array() {
            Some(items)
                if items
                    .iter()
                    .all(|v| v.as_i64().is_some() || v.as_u64().is_some()) =>
            {
                Ok(())
            }
            _ => fail("array of integers"),
        },
        Ty::Obj(fields) => validate_object_at(path, value, fields),
        Ty::ObjArray(fields) => match value.as_array() {
            Some(items) => {
                for (i, item) in items.iter().enumerate() {
                    validate_object_at(&format!("{path}[{i}]"), item, fields)?;
                }
                Ok(())
            }
            None => fail("array of objects"),
        },
    }
}

fn validate_object_at(path: &str, value: &Value, fields: &[Field]) -> Result<(), String> {
    let obj = value
        .as_object()
        .ok_or_else(|| format!("{path}: expected object, got {value}"))?;
    for field in fields {
        let child = obj
            .get(field.key)
            .ok_or_else(|| format!("{path}: missing key {:?}", field.key))?;
        check_type(&format!("{path}.{}", field.key), child, field.ty)?;
    }
    for key in obj.keys() {
        if !fields.iter().any(|f| f.key == key) {
            return Err(format!("{path}: unknown key {key:?}"));
        }
    }
    Ok(())
}

/// Validates one emitted JSON document against the schema of its kind.
pub fn validate(kind: OutputKind, document: &str) -> Result<(), String> {
    let value: Value =
        serde_json::from_str(document).map_err(|e| format!("invalid JSON: {e}"))?;
    validate_object_at("$", &value, kind.fields())
}
