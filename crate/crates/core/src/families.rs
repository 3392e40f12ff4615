//! Exact closed forms for the biharmonic index of stars, double stars,
//! and fireflies, together with the factored characteristic polynomials
//! those formulas come from.
//!
//! The firefly `F(s,t,q)` (a hub carrying `s` triangles, `t` pendant
//! paths of length two, and `q` pendant edges, `n = 2s + 2t + q + 1`)
//! satisfies one master identity covering every parameter choice:
//!
//! ```text
//! BH(F(s,t,q)) = n² − (8/9)·s·n − 2n + (9t² + (5n² − 16n − 6)t + 1) / n
//! ```
//!
//! specializing to the star (`s = t = 0`, `BH = n² − 2n + 1/n`), to
//! `n² + 3n − 16 + 4/n` at `s = 0, t = 1`, and so on. The double star
//! `S(a,b)` (`n = a + b + 2`) satisfies
//!
//! ```text
//! BH(S(a,b)) = n² − 2n + 4ab + (ab + 1)² / n.
//! ```
//!
//! Both families have fully factored Laplacian characteristic
//! polynomials, reproduced by [`factored_char_poly`] and checked against
//! the exact [`char_poly`] expansion by [`verify_family_factorizations`].
//! Everything here is exact integer/rational arithmetic; floating-point
//! enters only when callers compare against spectral values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::polynomial::IntPoly;

/// An exact rational biharmonic value for one family member, tagged with
/// the parameter regime (`case_label`) whose published formula applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    /// The family member the value belongs to.
    pub family: FamilySpec,
    /// The exact biharmonic index.
    pub value: BigRational,
    /// Which parameter regime produced the value: `star`,
    /// `one_pendant_path`, `pendant_paths_only`, `triangles_only`,
    /// `triangles_and_paths`, or `double_star`.
    pub case_label: &'static str,
}

impl ClosedForm {
    /// The value as a float, for comparison against spectral routes.
    pub fn value_f64(&self) -> f64 {
        ratio_to_f64(&self.value)
    }
}

/// Converts an exact rational to the nearest `f64`.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    crate::polynomial::big_to_f64(r.numer()) / crate::polynomial::big_to_f64(r.denom())
}

fn br(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn br_usize(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The master firefly identity
/// `n² − (8/9)sn − 2n + (9t² + (5n² − 16n − 6)t + 1)/n`.
fn firefly_master(s: usize, t: usize, n: usize) -> BigRational {
    let n = br_usize(n);
    let s = br_usize(s);
    let t = br_usize(t);
    let n2 = &n * &n;
    let head = &n2 - br(8) / br(9) * &s * &n - br(2) * &n;
    let tail_num = br(9) * &t * &t + (br(5) * &n2 - br(16) * &n - br(6)) * &t + br(1);
    head + tail_num / n
}

/// Exact biharmonic index for a star, double star, or firefly.
///
/// Paths, cycles, and complete graphs are rejected with
/// [`Error::UnsupportedFamily`]; their indices are computed spectrally.
pub fn closed_form_bh(spec: &FamilySpec) -> Result<ClosedForm> {
    let n = spec.order()?;
    let (value, case_label) = match *spec {
        FamilySpec::Star { .. } => (firefly_master(0, 0, n), "star"),
        FamilySpec::DoubleStar { a, b } => {
            let nq = br_usize(n);
            let ab = br_usize(a * b);
            let value = &nq * &nq - br(2) * &nq
                + br(4) * &ab
                + (&ab + br(1)) * (&ab + br(1)) / &nq;
            (value, "double_star")
        }
        FamilySpec::Firefly { s, t, .. } => {
            let label = match (s, t) {
                (0, 0) => "star",
                (0, 1) => "one_pendant_path",
                (0, _) => "pendant_paths_only",
                (_, 0) => "triangles_only",
                _ => "triangles_and_paths",
            };
            (firefly_master(s, t, n), label)
        }
        FamilySpec::Path { .. } | FamilySpec::Complete { .. } | FamilySpec::Cycle { .. } => {
            return Err(Error::UnsupportedFamily(format!("{spec:?}")));
        }
    };
    Ok(ClosedForm { family: *spec, value, case_label })
}

/// The cubic factor `x³ − (n+2)x² + (2n + ab + 1)x − n` of the double
/// star's characteristic polynomial.
pub fn double_star_cubic(a: usize, b: usize) -> IntPoly {
    let n = (a + b + 2) as i64;
    let ab = (a * b) as i64;
    IntPoly::from_i64(&[-n, 2 * n + ab + 1, -(n + 2), 1])
}

/// The cubic factor `x³ − (n−t+3)x² + (3n − 3t + 1)x − n` of the firefly
/// characteristic polynomial when `t >= 1`.
pub fn firefly_cubic(n: usize, t: usize) -> IntPoly {
    let n = n as i64;
    let t = t as i64;
    IntPoly::from_i64(&[-n, 3 * n - 3 * t + 1, -(n - t + 3), 1])
}

/// Fully factored Laplacian characteristic polynomial for stars, double
/// stars, and fireflies:
///
/// - star: `x (x−1)^{n−2} (x−n)`;
/// - double star: `x (x−1)^{a+b−2} · [cubic]`;
/// - firefly, `t = 0`: `x (x−n) (x−3)^s (x−1)^{s+q−1}`;
/// - firefly, `t >= 1`: `x (x−3)^s (x−1)^{s+q−1} (x²−3x+1)^{t−1} · [cubic]`,
///   where for `s = q = 0` the `(x−1)^{-1}` is realized by dividing the
///   cubic (which then has root 1) exactly by `x − 1`.
pub fn factored_char_poly(spec: &FamilySpec) -> Result<IntPoly> {
    let n = spec.order()?;
    let x = IntPoly::x();
    match *spec {
        FamilySpec::Star { .. } => {
            if n == 1 {
                return Ok(x);
            }
            Ok(x.mul(&IntPoly::x_minus(1).pow(n - 2)).mul(&IntPoly::x_minus(n as i64)))
        }
        FamilySpec::DoubleStar { a, b } => {
            Ok(x.mul(&IntPoly::x_minus(1).pow(a + b - 2)).mul(&double_star_cubic(a, b)))
        }
        FamilySpec::Firefly { s, t, q } => {
            if t == 0 {
                if n == 1 {
                    return Ok(x);
                }
                Ok(x
                    .mul(&IntPoly::x_minus(n as i64))
                    .mul(&IntPoly::x_minus(3).pow(s))
                    .mul(&IntPoly::x_minus(1).pow(s + q - 1)))
            } else {
                let cubic = firefly_cubic(n, t);
                let golden = IntPoly::from_i64(&[1, -3, 1]).pow(t - 1);
                let base = x.mul(&IntPoly::x_minus(3).pow(s)).mul(&golden);
                if s + q == 0 {
                    let reduced = cubic
                        .exact_div(&IntPoly::x_minus(1))
                        .expect("the cubic has root 1 when s = q = 0");
                    Ok(base.mul(&reduced))
                } else {
                    Ok(base.mul(&IntPoly::x_minus(1).pow(s + q - 1)).mul(&cubic))
                }
            }
        }
        FamilySpec::Path { .. } | FamilySpec::Complete { .. } | FamilySpec::Cycle { .. } => {
            Err(Error::UnsupportedFamily(format!("{spec:?}")))
        }
    }
}

/// Biharmonic index of the double star from its cubic factor alone, via
/// the elementary symmetric functions of the cubic's roots: with
/// `x³ − Bx² + Cx − D` and eigenvalue 1 carrying multiplicity `n − 4`,
/// `BH = n(n−4) + n(C² − 2BD)/D²` exactly.
pub fn double_star_bh_vieta(a: usize, b: usize) -> BigRational {
    let n = a + b + 2;
    let cubic = double_star_cubic(a, b);
    let b_sum = -cubic.coeff(2);
    let c_sym = cubic.coeff(1);
    let d_prod = -cubic.coeff(0);
    let nq = br_usize(n);
    let sum_inv_sq = BigRational::new(
        &c_sym * &c_sym - BigInt::from(2) * &b_sum * &d_prod,
        &d_prod * &d_prod,
    );
    &nq * br_usize(n - 4) + &nq * sum_inv_sq
}

/// Outcome of sweeping every double star and firefly up to `n_max`
/// vertices: exact factored-polynomial equality and the exact agreement
/// of the cubic-root route with the closed form.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    /// Largest order swept.
    pub n_max: usize,
    /// Double stars checked (unordered `a <= b`).
    pub double_stars_checked: usize,
    /// Fireflies checked (all valid `(s,t,q)`).
    pub fireflies_checked: usize,
    /// Every factored polynomial equals the directly expanded one.
    pub factorizations_exact: bool,
    /// Every double star's cubic-root value equals its closed form.
    pub vieta_matches: bool,
    /// Human-readable descriptions of any failures.
    pub failures: Vec<String>,
}

impl FactorizationReport {
    /// True when the sweep found no discrepancies.
    pub fn all_ok(&self) -> bool {
        self.factorizations_exact && self.vieta_matches && self.failures.is_empty()
    }
}

/// Expands the factored characteristic polynomial of every double star
/// and firefly with at most `n_max` vertices and compares it, coefficient
/// by coefficient, with the exact characteristic polynomial of the
/// generated graph; also re-derives each double star's closed form
/// through the cubic's root symmetric functions.
pub fn verify_family_factorizations(n_max: usize) -> Result<FactorizationReport> {
    const SWEEP_MAX: usize = 40;
    if n_max > SWEEP_MAX {
        return Err(Error::TooLarge { n: n_max, max: SWEEP_MAX, what: "family factorization sweep" });
    }
    let mut report = FactorizationReport {
        n_max,
        double_stars_checked: 0,
        fireflies_checked: 0,
        factorizations_exact: true,
        vieta_matches: true,
        failures: Vec::new(),
    };
    let check_one = |spec: FamilySpec, report: &mut FactorizationReport| -> Result<()> {
        let g = spec.generate()?;
        let direct = char_poly(&g)?;
        let factored = factored_char_poly(&spec)?;
        if direct != factored {
            report.factorizations_exact = false;
            report.failures.push(format!("factored polynomial mismatch for {spec:?}"));
        }
        Ok(())
    };
    for a in 1..=n_max.saturating_sub(2) {
        for b in a..=n_max.saturating_sub(2) {
            let n = a + b + 2;
            if n > n_max {
                break;
            }
            let spec = FamilySpec::DoubleStar { a, b };
            check_one(spec, &mut report)?;
            if double_star_bh_vieta(a, b) != closed_form_bh(&spec)?.value {
                report.vieta_matches = false;
                report.failures.push(format!("cubic-root value mismatch for {spec:?}"));
            }
            report.double_stars_checked += 1;
        }
    }
    for s in 0..=n_max / 2 {
        for t in 0..=(n_max - 2 * s) / 2 {
            for q in 0..=n_max.saturating_sub(2 * s + 2 * t + 1) {
                let n = 2 * s + 2 * t + q + 1;
                if n > n_max {
                    break;
                }
                check_one(FamilySpec::Firefly { s, t, q }, &mut report)?;
                report.fireflies_checked += 1;
            }
        }
    }
    Ok(report)
}

/// True when `value` is positive and its reduced denominator divides
/// `9n` — the shape every closed form here takes (`n` alone when the
/// firefly has no triangles, up to `9n` otherwise).
pub fn closed_form_denominator_ok(cf: &ClosedForm) -> bool {
    let n = match cf.family.order() {
        Ok(n) => n,
        Err(_) => return false,
    };
    let bound = BigInt::from(9 * n);
    cf.value.is_positive() && (&bound % cf.value.denom()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::biharmonic_index;

    fn frac(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn star_closed_forms() {
        let s4 = closed_form_bh(&FamilySpec::Star { n: 4 }).unwrap();
        assert_eq!(s4.value, frac(33, 4));
        assert_eq!(s4.case_label, "star");
        let s5 = closed_form_bh(&FamilySpec::Star { n: 5 }).unwrap();
        assert_eq!(s5.value, frac(76, 5));
        // The same star through its firefly parameters.
        let f = closed_form_bh(&FamilySpec::Firefly { s: 0, t: 0, q: 4 }).unwrap();
        assert_eq!(f.value, frac(76, 5));
        assert_eq!(f.case_label, "star");
    }

    #[test]
    fn double_star_closed_forms() {
        let p4 = closed_form_bh(&FamilySpec::DoubleStar { a: 1, b: 1 }).unwrap();
        assert_eq!(p4.value, frac(13, 1));
        assert_eq!(p4.case_label, "double_star");
        let ds21 = closed_form_bh(&FamilySpec::DoubleStar { a: 2, b: 1 }).unwrap();
        assert_eq!(ds21.value, frac(124, 5));
    }

    #[test]
    fn firefly_closed_forms() {
        let k3 = closed_form_bh(&FamilySpec::Firefly { s: 1, t: 0, q: 0 }).unwrap();
        assert_eq!(k3.value, frac(2, 3));
        assert_eq!(k3.case_label, "triangles_only");
        // One pendant path plus two pendant edges matches the double star
        // S(2,1) vertex for vertex.
        let f012 = closed_form_bh(&FamilySpec::Firefly { s: 0, t: 1, q: 2 }).unwrap();
        assert_eq!(f012.value, frac(124, 5));
        assert_eq!(f012.case_label, "one_pendant_path");
        // Two triangles: the denominator grows to 9n.
        let f200 = closed_form_bh(&FamilySpec::Firefly { s: 2, t: 0, q: 0 }).unwrap();
        assert_eq!(f200.value, frac(284, 45));
        assert!(closed_form_denominator_ok(&f200));
        let mixed = closed_form_bh(&FamilySpec::Firefly { s: 1, t: 2, q: 1 }).unwrap();
        assert_eq!(mixed.case_label, "triangles_and_paths");
        let paths = closed_form_bh(&FamilySpec::Firefly { s: 0, t: 2, q: 0 }).unwrap();
        assert_eq!(paths.case_label, "pendant_paths_only");
    }

    #[test]
    fn unsupported_families_are_rejected() {
        for spec in [
            FamilySpec::Path { n: 5 },
            FamilySpec::Cycle { n: 5 },
            FamilySpec::Complete { n: 5 },
        ] {
            assert!(matches!(closed_form_bh(&spec), Err(Error::UnsupportedFamily(_))));
            assert!(matches!(factored_char_poly(&spec), Err(Error::UnsupportedFamily(_))));
        }
    }

    #[test]
    fn closed_forms_match_spectral_values() {
        for spec in [
            FamilySpec::Star { n: 9 },
            FamilySpec::DoubleStar { a: 3, b: 4 },
            FamilySpec::Firefly { s: 2, t: 1, q: 3 },
            FamilySpec::Firefly { s: 0, t: 3, q: 2 },
            FamilySpec::Firefly { s: 3, t: 0, q: 0 },
        ] {
            let cf = closed_form_bh(&spec).unwrap();
            let spectral = biharmonic_index(&spec.generate().unwrap()).unwrap();
            let exact = cf.value_f64();
            assert!(
                (spectral - exact).abs() <= 1e-8 * exact.max(1.0),
                "{spec:?}: closed form {exact} vs spectral {spectral}"
            );
            assert!(closed_form_denominator_ok(&cf), "{spec:?}");
        }
    }

    #[test]
    fn factored_polynomial_fixtures() {
        // Double star S(2,2): cubic x^3 - 8x^2 + 17x - 6.
        assert_eq!(double_star_cubic(2, 2), IntPoly::from_i64(&[-6, 17, -8, 1]));
        let ds = factored_char_poly(&FamilySpec::DoubleStar { a: 2, b: 2 }).unwrap();
        let expected = IntPoly::x()
            .mul(&IntPoly::x_minus(1).pow(2))
            .mul(&IntPoly::from_i64(&[-6, 17, -8, 1]));
        assert_eq!(ds, expected);

        // Firefly with two triangles: x (x-5) (x-3)^2 (x-1).
        let f200 = factored_char_poly(&FamilySpec::Firefly { s: 2, t: 0, q: 0 }).unwrap();
        let expected = IntPoly::x()
            .mul(&IntPoly::x_minus(5))
            .mul(&IntPoly::x_minus(3).pow(2))
            .mul(&IntPoly::x_minus(1));
        assert_eq!(f200, expected);

        // Firefly with one triangle and one pendant path:
        // x (x-3) [x^3 - 7x^2 + 13x - 5].
        let f110 = factored_char_poly(&FamilySpec::Firefly { s: 1, t: 1, q: 0 }).unwrap();
        let expected = IntPoly::x()
            .mul(&IntPoly::x_minus(3))
            .mul(&IntPoly::from_i64(&[-5, 13, -7, 1]));
        assert_eq!(f110, expected);
    }

    #[test]
    fn degenerate_firefly_divides_cubic_by_x_minus_one() {
        // Two pendant paths and nothing else is the 5-vertex path; the
        // closed factorization divides the cubic by (x - 1).
        let spec = FamilySpec::Firefly { s: 0, t: 2, q: 0 };
        let factored = factored_char_poly(&spec).unwrap();
        let expected = IntPoly::x()
            .mul(&IntPoly::from_i64(&[1, -3, 1]))
            .mul(&IntPoly::from_i64(&[5, -5, 1]));
        assert_eq!(factored, expected);
        assert_eq!(factored, char_poly(&spec.generate().unwrap()).unwrap());
        // Deeper degenerate case: three pendant paths.
        let spec = FamilySpec::Firefly { s: 0, t: 3, q: 0 };
        assert_eq!(
            factored_char_poly(&spec).unwrap(),
            char_poly(&spec.generate().unwrap()).unwrap()
        );
    }

    #[test]
    fn vieta_route_matches_closed_form() {
        assert_eq!(double_star_bh_vieta(1, 1), frac(13, 1));
        assert_eq!(double_star_bh_vieta(2, 2), frac(265, 6));
        for (a, b) in [(1, 5), (2, 3), (4, 4), (1, 9)] {
            assert_eq!(
                double_star_bh_vieta(a, b),
                closed_form_bh(&FamilySpec::DoubleStar { a, b }).unwrap().value,
                "S({a},{b})"
            );
        }
    }

    #[test]
    fn factorization_sweep_is_clean_at_small_orders() {
        let report = verify_family_factorizations(12).unwrap();
        assert!(report.all_ok(), "failures: {:?}", report.failures);
        assert_eq!(report.double_stars_checked, 25);
        assert!(report.fireflies_checked > 100);
        assert!(verify_family_factorizations(41).is_err());
    }

    #[test]
    fn pendant_path_extremes_match_published_polynomials() {
        // Odd order, all pendant paths: BH = 7n²/2 − 41n/4 + 1/2 + 25/(4n).
        for n in [5usize, 7, 9, 11, 13, 15] {
            let t = (n - 1) / 2;
            let cf = closed_form_bh(&FamilySpec::Firefly { s: 0, t, q: 0 }).unwrap();
            let nq = br_usize(n);
            let expected = frac(7, 2) * &nq * &nq - frac(41, 4) * &nq
                + frac(1, 2)
                + frac(25, 4) / &nq;
            assert_eq!(cf.value, expected, "odd n = {n}");
        }
        // Even order, one pendant edge left over:
        // BH = 7n²/2 − 51n/4 + 4 + 16/n.
        for n in [6usize, 8, 10, 12, 14] {
            let t = (n - 2) / 2;
            let cf = closed_form_bh(&FamilySpec::Firefly { s: 0, t, q: 1 }).unwrap();
            let nq = br_usize(n);
            let expected = frac(7, 2) * &nq * &nq - frac(51, 4) * &nq
                + frac(4, 1)
                + frac(16, 1) / &nq;
            assert_eq!(cf.value, expected, "even n = {n}");
        }
    }

    #[test]
    fn one_pendant_path_specialization() {
        // s = 0, t = 1 collapses to n² + 3n − 16 + 4/n.
        for q in [1usize, 2, 5, 10] {
            let n = 2 + q + 1;
            let cf = closed_form_bh(&FamilySpec::Firefly { s: 0, t: 1, q }).unwrap();
            let nq = br_usize(n);
            let expected = &nq * &nq + br(3) * &nq - br(16) + br(4) / &nq;
            assert_eq!(cf.value, expected, "q = {q}");
        }
    }
}
