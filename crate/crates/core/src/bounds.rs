//! Inequalities relating the biharmonic index of a connected graph to
//! degree sums, the Kirchhoff index, the spanning-tree count, and the
//! extreme nonzero Laplacian eigenvalues.
//!
//! Each check evaluates one published-style inequality `BH <= rhs` or
//! `BH >= rhs` numerically and reports the slack (non-negative exactly
//! when the inequality is satisfied) plus an equality flag. The bound
//! identifiers (`T3_1`, ..., `T4_3`) are the stable wire names used by the
//! JSON output contract.
//!
//! With `r = l_max / l_2 >= 1`, `M1 = sum deg^2`, `F = sum deg^3`,
//! `t = triangle count`, `Kf` the Kirchhoff index, and `tau` the
//! spanning-tree count:
//!
//! * `T3_1` (upper):  `BH <= n(n-1)^2 / (4(2m + M1)) * (r + 1/r)^2`
//! * `T3_2` (upper):  `BH <= n(n-1)^2 / (4(2m + M1)) * (4 + (r - 1/r)^2)`
//!   (algebraically the same right-hand side as `T3_1`)
//! * `T3_3` (lower, exponent `p > 0`):
//!   `BH >= n ((2m)^(p+1) / sum l^(3p+1))^(1/p)`, equality on complete
//!   graphs; `p = 1/3` and `p = 2/3` specialize to `C3_1` and `C3_2`
//! * `C3_1` (lower):  `BH >= 16 n m^4 / (2m + M1)^3`
//! * `C3_2` (lower):  `BH >= sqrt(32 n^2 m^5 / (sum l^3)^3)` where the
//!   cubic trace is the exact integer `sum l^3 = 3 M1 + F - 6t`; a
//!   sign-flipped variant (`+6t`) of that trace circulates, so its value
//!   is reported alongside for comparison whenever it differs
//! * `T4_1` (upper):  `BH <= (1/l_2 + 1/l_max) Kf - n(n-1) / (l_2 l_max)`,
//!   equality when the nonzero spectrum takes at most two distinct values
//! * `T4_2` (two-sided, `n >= 3`): with `X = (1/(n tau))^(2/(n-1))`,
//!   `Kf^2/(n(n-2)) - (n(n-1)/(n-2)) X <= BH <= Kf^2/n - n(n-1)(n-2) X`
//! * `T4_3` (deviation): `|n(n-1) BH - Kf^2|` is at most
//!   `(n^2(n-1)^2/4) (1 - (1 + (-1)^(n+1))/(2n^2)) (1/l_2 - 1/l_max)^2`

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices;
use crate::polynomial::big_to_f64;
use crate::spectra::{spectrum, Spectrum};

/// An inequality is reported as holding when its signed slack is at least
/// `-HOLDS_SLACK_REL_TOL * max(1, |rhs|)`; the margin absorbs floating
/// round-off on genuinely tight cases.
pub const HOLDS_SLACK_REL_TOL: f64 = 1e-9;

/// Equality is flagged when `|lhs - rhs| <= EQUALITY_REL_TOL * max(1, |rhs|)`.
pub const EQUALITY_REL_TOL: f64 = 1e-7;

/// Exponents at which the power-mean lower-bound family is evaluated when
/// no explicit grid is given.
pub const DEFAULT_P_GRID: [f64; 4] = [1.0 / 3.0, 2.0 / 3.0, 1.0, 2.0];

/// Stable identifiers for the bound checks (also the JSON wire names).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundId {
    T3_1,
    T3_2,
    T3_3,
    C3_1,
    C3_2,
    T4_1,
    T4_2Lower,
    T4_2Upper,
    T4_3,
}

impl BoundId {
    /// Wire name used in serialized reports.
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::T3_1 => "T3_1",
            BoundId::T3_2 => "T3_2",
            BoundId::T3_3 => "T3_3",
            BoundId::C3_1 => "C3_1",
            BoundId::C3_2 => "C3_2",
            BoundId::T4_1 => "T4_1",
            BoundId::T4_2Lower => "T4_2_lower",
            BoundId::T4_2Upper => "T4_2_upper",
            BoundId::T4_3 => "T4_3",
        }
    }
}

impl std::fmt::Display for BoundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which way the inequality points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `lhs <= rhs`.
    Upper,
    /// `lhs >= rhs`.
    Lower,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
        }
    }
}

/// Outcome of evaluating one inequality on one graph.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub bound_id: BoundId,
    /// Exponent for the power-mean family; `None` elsewhere.
    pub p: Option<f64>,
    /// The bounded quantity (the biharmonic index, except for the
    /// deviation bound where it is `|n(n-1) BH - Kf^2|`).
    pub lhs: f64,
    pub rhs: f64,
    pub direction: Direction,
    /// Signed margin, non-negative when the inequality is satisfied:
    /// `rhs - lhs` for upper bounds, `lhs - rhs` for lower bounds.
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    /// Value of the sign-flipped cubic-trace variant of `C3_2`'s
    /// right-hand side; `None` for every other bound and when the variant
    /// coincides (triangle-free graphs).
    pub rhs_alt: Option<f64>,
    /// Human-readable annotation (e.g. which trace variant `rhs_alt` is).
    pub note: Option<String>,
}

impl BoundReport {
    fn build(
        bound_id: BoundId,
        p: Option<f64>,
        direction: Direction,
        lhs: f64,
        rhs: f64,
    ) -> Self {
        let slack = match direction {
            Direction::Upper => rhs - lhs,
            Direction::Lower => lhs - rhs,
        };
        let scale = rhs.abs().max(1.0);
        BoundReport {
            bound_id,
            p,
            lhs,
            rhs,
            direction,
            slack,
            holds: slack >= -HOLDS_SLACK_REL_TOL * scale,
            equality: (lhs - rhs).abs() <= EQUALITY_REL_TOL * scale,
            rhs_alt: None,
            note: None,
        }
    }
}

/// Everything the bound formulas need, computed once per graph.
pub struct BoundContext {
    pub n: usize,
    pub m: usize,
    pub zagreb_m1: u64,
    pub forgotten_f: u64,
    pub triangles: u64,
    pub bh: f64,
    pub kirchhoff: f64,
    pub lambda_2: f64,
    pub lambda_max: f64,
    /// Spanning-tree count as a float (enters only through
    /// `(1/(n tau))^(2/(n-1))`).
    pub tau: f64,
    spectrum: Spectrum,
}

impl BoundContext {
    /// Computes the context for a connected graph on at least 2 vertices.
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected("bound checks need a connected graph"));
        }
        if g.n() < 2 {
            return Err(Error::TooSmall("bound checks need at least 2 vertices".into()));
        }
        let sp = spectrum(g)?;
        let n = g.n();
        Ok(BoundContext {
            n,
            m: g.m(),
            zagreb_m1: indices::zagreb_m1(g),
            forgotten_f: indices::forgotten_f(g),
            triangles: g.triangle_count(),
            bh: indices::bh_from_spectrum(&sp),
            kirchhoff: n as f64 * sp.sum_nonzero(|l| 1.0 / l),
            lambda_2: sp.lambda_2(),
            lambda_max: sp.lambda_max(),
            tau: big_to_f64(&indices::spanning_tree_count(g)),
            spectrum: sp,
        })
    }

    fn ratio_scaled_upper(&self, id: BoundId, angular: f64) -> BoundReport {
        let n = self.n as f64;
        let rhs = n * (n - 1.0) * (n - 1.0) / (4.0 * (2.0 * self.m as f64 + self.zagreb_m1 as f64))
            * angular;
        BoundReport::build(id, None, Direction::Upper, self.bh, rhs)
    }

    /// Upper bound scaled by `(r + 1/r)^2`.
    pub fn t3_1(&self) -> BoundReport {
        let r = self.lambda_max / self.lambda_2;
        self.ratio_scaled_upper(BoundId::T3_1, (r + 1.0 / r) * (r + 1.0 / r))
    }

    /// Upper bound scaled by `4 + (r - 1/r)^2`; same value as `t3_1`.
    pub fn t3_2(&self) -> BoundReport {
        let r = self.lambda_max / self.lambda_2;
        self.ratio_scaled_upper(BoundId::T3_2, 4.0 + (r - 1.0 / r) * (r - 1.0 / r))
    }

    /// Power-mean lower bound at exponent `p > 0`.
    pub fn t3_3(&self, p: f64) -> Result<BoundReport> {
        if p <= 0.0 || p.is_nan() {
            return Err(Error::NonPositiveP(p));
        }
        let n = self.n as f64;
        let two_m = 2.0 * self.m as f64;
        let s: f64 = self.spectrum.sum_nonzero(|l| l.powf(3.0 * p + 1.0));
        let rhs = n * (two_m.powf(p + 1.0) / s).powf(1.0 / p);
        Ok(BoundReport::build(BoundId::T3_3, Some(p), Direction::Lower, self.bh, rhs))
    }

    /// Degree-sum lower bound `16 n m^4 / (2m + M1)^3`.
    pub fn c3_1(&self) -> BoundReport {
        let n = self.n as f64;
        let m = self.m as f64;
        let denom = 2.0 * m + self.zagreb_m1 as f64;
        let rhs = 16.0 * n * m.powi(4) / denom.powi(3);
        BoundReport::build(BoundId::C3_1, None, Direction::Lower, self.bh, rhs)
    }

    /// Cubic-trace lower bound `sqrt(32 n^2 m^5 / (sum l^3)^3)`, with the
    /// exact trace `sum l^3 = 3 M1 + F - 6t`. When the graph has
    /// triangles, the sign-flipped trace variant (`+6t`) gives a different
    /// right-hand side, reported in `rhs_alt` for comparison; `holds` and
    /// `slack` always refer to the exact-trace form.
    pub fn c3_2(&self) -> BoundReport {
        let n = self.n as f64;
        let m = self.m as f64;
        let trace3 = 3.0 * self.zagreb_m1 as f64 + self.forgotten_f as f64
            - 6.0 * self.triangles as f64;
        let rhs = (32.0 * n * n * m.powi(5) / trace3.powi(3)).sqrt();
        let mut report = BoundReport::build(BoundId::C3_2, None, Direction::Lower, self.bh, rhs);
        if self.triangles > 0 {
            let trace3_flipped = trace3 + 12.0 * self.triangles as f64;
            report.rhs_alt = Some((32.0 * n * n * m.powi(5) / trace3_flipped.powi(3)).sqrt());
            report.note = Some(format!(
                "cubic trace 3*M1 + F - 6t = {trace3}; rhs_alt uses the sign-flipped \
                 variant 3*M1 + F + 6t = {trace3_flipped}, which disagrees with \
                 trace(L^3) on graphs with triangles"
            ));
        }
        report
    }

    /// Extreme-eigenvalue upper bound
    /// `(1/l_2 + 1/l_max) Kf - n(n-1)/(l_2 l_max)`.
    pub fn t4_1(&self) -> BoundReport {
        let n = self.n as f64;
        let rhs = (1.0 / self.lambda_2 + 1.0 / self.lambda_max) * self.kirchhoff
            - n * (n - 1.0) / (self.lambda_2 * self.lambda_max);
        BoundReport::build(BoundId::T4_1, None, Direction::Upper, self.bh, rhs)
    }

    /// Two-sided Kirchhoff/spanning-tree bound; needs `n >= 3`.
    pub fn t4_2(&self) -> Result<(BoundReport, BoundReport)> {
        if self.n < 3 {
            return Err(Error::TooSmall(format!(
                "two-sided Kirchhoff bound needs n >= 3, got {}",
                self.n
            )));
        }
        let n = self.n as f64;
        let x = (1.0 / (n * self.tau)).powf(2.0 / (n - 1.0));
        let kf2 = self.kirchhoff * self.kirchhoff;
        let lower_rhs = kf2 / (n * (n - 2.0)) - n * (n - 1.0) / (n - 2.0) * x;
        let upper_rhs = kf2 / n - n * (n - 1.0) * (n - 2.0) * x;
        Ok((
            BoundReport::build(BoundId::T4_2Lower, None, Direction::Lower, self.bh, lower_rhs),
            BoundReport::build(BoundId::T4_2Upper, None, Direction::Upper, self.bh, upper_rhs),
        ))
    }

    /// Deviation bound on `|n(n-1) BH - Kf^2|`.
    pub fn t4_3(&self) -> BoundReport {
        let n = self.n as f64;
        let lhs = (n * (n - 1.0) * self.bh - self.kirchhoff * self.kirchhoff).abs();
        // n(n-1)BH - Kf^2 = n^2 * sum over pairs of reciprocal nonzero
        // eigenvalues of their squared differences, so the pair sum is
        // maximized by splitting the n-1 reciprocals evenly between the
        // extremes: floor((n-1)/2) * ceil((n-1)/2) pairs contribute. The
        // parity correction therefore acts on n-1: for even n the
        // classical (n-1)^2/4 prefactor shrinks by 1 - 1/(n-1)^2, for
        // odd n it is exact (and the sweep finds spectra attaining it).
        let split = ((self.n - 1) / 2) * (self.n / 2);
        let gap = 1.0 / self.lambda_2 - 1.0 / self.lambda_max;
        let rhs = n * n * split as f64 * gap * gap;
        BoundReport::build(BoundId::T4_3, None, Direction::Upper, lhs, rhs)
    }

    /// Every bound in a fixed order: the two ratio-scaled upper bounds,
    /// the power-mean family over `p_grid`, the two degree/trace lower
    /// bounds, and the three Kirchhoff-linked bounds. The two-sided bound
    /// is skipped (not failed) when `n < 3`.
    pub fn all(&self, p_grid: &[f64]) -> Result<Vec<BoundReport>> {
        let mut out = vec![self.t3_1(), self.t3_2()];
        for &p in p_grid {
            out.push(self.t3_3(p)?);
        }
        out.push(self.c3_1());
        out.push(self.c3_2());
        out.push(self.t4_1());
        if self.n >= 3 {
            let (lo, hi) = self.t4_2()?;
            out.push(lo);
            out.push(hi);
        }
        out.push(self.t4_3());
        Ok(out)
    }
}

/// Evaluates one inequality on `g` (building a fresh context).
pub fn check_t3_1(g: &Graph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.t3_1())
}
pub fn check_t3_2(g: &Graph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.t3_2())
}
pub fn check_t3_3(g: &Graph, p: f64) -> Result<BoundReport> {
    BoundContext::new(g)?.t3_3(p)
}
pub fn check_c3_1(g: &Graph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.c3_1())
}
pub fn check_c3_2(g: &Graph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.c3_2())
}
pub fn check_t4_1(g: &Graph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.t4_1())
}
pub fn check_t4_2(g: &Graph) -> Result<(BoundReport, BoundReport)> {
    BoundContext::new(g)?.t4_2()
}
pub fn check_t4_3(g: &Graph) -> Result<BoundReport> {
    Ok(BoundContext::new(g)?.t4_3())
}

/// Evaluates every bound on `g` with the given exponent grid
/// (or [`DEFAULT_P_GRID`] when `None`).
pub fn check_all(g: &Graph, p_grid: Option<&[f64]>) -> Result<Vec<BoundReport>> {
    BoundContext::new(g)?.all(p_grid.unwrap_or(&DEFAULT_P_GRID))
}
