//! Turning command-line input descriptions into graphs.

use crate::args::InputArgs;
use bhix_core::{Error, FamilySpec, Graph};
use std::path::Path;

/// Relative tolerance used for cross-route agreement checks, overridable
/// through the `BHIX_TOLERANCE` environment variable.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Reads the agreement tolerance, honouring `BHIX_TOLERANCE` when set.
pub fn tolerance_from_env() -> Result<f64, Error> {
    match std::env::var("BHIX_TOLERANCE") {
        Ok(raw) => {
            let v: f64 = raw.trim().parse().map_err(|_| {
                Error::InvalidInput(format!("BHIX_TOLERANCE is not a number: {raw:?}"))
            })?;
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "BHIX_TOLERANCE must be a positive finite number, got {raw:?}"
                )));
            }
            Ok(v)
        }
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_TOLERANCE),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::InvalidInput(
            "BHIX_TOLERANCE is not valid unicode".into(),
        )),
    }
}

fn require(opt: Option<usize>, flag: &str, family: &str) -> Result<usize, Error> {
    opt.ok_or_else(|| Error::InvalidInput(format!("--family {family} requires --{flag}")))
}

/// Parses `--family NAME` plus its parameter flags into a family spec.
pub fn family_from_args(name: &str, args: &InputArgs) -> Result<FamilySpec, Error> {
    let lname = name.to_ascii_lowercase();
    match lname.as_str() {
        "star" => Ok(FamilySpec::Star {
            n: require(args.n, "n", &lname)?,
        }),
        "path" => Ok(FamilySpec::Path {
            n: require(args.n, "n", &lname)?,
        }),
        "complete" => Ok(FamilySpec::Complete {
            n: require(args.n, "n", &lname)?,
        }),
        "cycle" => Ok(FamilySpec::Cycle {
            n: require(args.n, "n", &lname)?,
        }),
        "double-star" | "double_star" | "doublestar" => Ok(FamilySpec::DoubleStar {
            a: require(args.a, "a", &lname)?,
            b: require(args.b, "b", &lname)?,
        }),
        "firefly" => Ok(FamilySpec::Firefly {
            s: args.s.unwrap_or(0),
            t: args.t.unwrap_or(0),
            q: args.q.unwrap_or(0),
        }),
        other => Err(Error::InvalidInput(format!(
            "unknown family {other:?}; expected star, path, complete, cycle, double-star, or firefly"
        ))),
    }
}

/// Materialises the single graph described by the input flags. Exactly
/// one of `--family`, `--graph6`, `--edges` must be present.
pub fn graph_from_input(args: &InputArgs) -> Result<Graph, Error> {
    let sources = [
        args.family.is_some(),
        args.graph6.is_some(),
        args.edges.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if sources != 1 {
        return Err(Error::InvalidInput(
            "exactly one of --family, --graph6, --edges must be given".into(),
        ));
    }
    if let Some(name) = &args.family {
        return family_from_args(name, args)?.generate();
    }
    if let Some(g6) = &args.graph6 {
        return Graph::from_graph6(g6);
    }
    let path = args.edges.as_ref().expect("one source guaranteed above");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_edge_list_text(&text)
}

/// Loads a product operand: if the argument names a readable file, its
/// first non-empty, non-comment line is parsed as graph6 (falling back
/// to interpreting the whole file as an edge list); otherwise the
/// argument itself is parsed as a literal graph6 string.
pub fn load_operand(arg: &str) -> Result<Graph, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {arg}: {e}")))?;
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        if let Some(line) = first {
            if let Ok(g) = Graph::from_graph6(line) {
                return Ok(g);
            }
        }
        return Graph::from_edge_list_text(&text);
    }
    Graph::from_graph6(arg)
}

/// Parses the `--p` exponent grid: comma-separated positive numbers,
/// with `a/b` fractions accepted.
pub fn parse_p_grid(raw: &str) -> Result<Vec<f64>, Error> {
    let mut grid = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let value = if let Some((num, den)) = token.split_once('/') {
            let num: f64 = num
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad exponent {token:?}")))?;
            let den: f64 = den
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad exponent {token:?}")))?;
            num / den
        } else {
            token
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad exponent {token:?}")))?
        };
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::NonPositiveP(value));
        }
        grid.push(value);
    }
    if grid.is_empty() {
        return Err(Error::InvalidInput("--p grid is empty".into()));
    }
    Ok(grid)
}
