//! The epsilon multiplicity pipeline: Hilbert-series difference of the
//! saturated Rees algebra and the Rees algebra, quasi-polynomial extraction,
//! and the closed-form routes through mixed multiplicities.

use num_traits::{One, Signed, Zero};

use crate::blowup::{self, SaturatedReesOptions};
use crate::error::{Error, Result};
use crate::hilbert::{self, RationalSeries};
use crate::ideal_ops;
use crate::linalg;
use crate::mixed::{self, Convention, MixedMultiplicities};
use crate::poly::{format_q, Q};
use crate::ring::Ideal;

/// Periodic-coefficient polynomial: for `n >= n0` with `n = r (mod period)`,
/// the value is `sum_k table[r][k] n^k`.
#[derive(Clone, Debug)]
pub struct QuasiPolynomial {
    pub degree: usize,
    pub period: usize,
    pub table: Vec<Vec<Q>>,
    pub n0: i64,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: i64) -> Q {
        let r = (n.rem_euclid(self.period as i64)) as usize;
        let coeffs = &self.table[r];
        let mut acc = Q::zero();
        let qn = Q::from_integer(n.into());
        for c in coeffs.iter().rev() {
            acc = acc * &qn + c;
        }
        acc
    }

    /// Coefficient of `n^k`, required to be identical across residues.
    pub fn uniform_coefficient(&self, k: usize) -> Result<Q> {
        let first = self
            .table
            .first()
            .and_then(|c| c.get(k))
            .cloned()
            .unwrap_or_else(Q::zero);
        for row in &self.table {
            let c = row.get(k).cloned().unwrap_or_else(Q::zero);
            if c != first {
                return Err(Error::NonConstantLeadingCoefficient);
            }
        }
        Ok(first)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "period": self.period,
            "n0": self.n0,
            "table": self.table.iter().map(|row| {
                row.iter().map(format_q).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Series,
    Veronese,
    Dim2,
    PrimePoint,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Veronese => "veronese",
            Method::Dim2 => "dim2",
            Method::PrimePoint => "prime-point",
            Method::Oracle => "oracle",
        }
    }
}

/// Full result record of an epsilon computation.
#[derive(Clone, Debug)]
pub struct EpsilonReport {
    pub dimension: usize,
    pub series: RationalSeries,
    pub quasi: Option<QuasiPolynomial>,
    pub epsilon: Q,
    pub method: Method,
    /// Power step the series indexes (1 for the plain pipeline, v0 for
    /// Veronese-indexed series).
    pub scale: u32,
    pub warnings: Vec<String>,
}

impl EpsilonReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dimension": self.dimension,
            "series": self.series.to_json(),
            "series_text": self.series.to_text(),
            "quasipolynomial": self.quasi.as_ref().map(|q| q.to_json()),
            "epsilon": format_q(&self.epsilon),
            "method": self.method.as_str(),
            "scale": self.scale,
            "warnings": self.warnings,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EpsilonOptions {
    /// Reproduce the hard error of the reference computer-algebra script when
    /// the analytic spread is not maximal.
    pub script_parity: bool,
    /// Verify the supplied generation bound by one extra saturation.
    pub check_bound: bool,
}

impl Default for EpsilonOptions {
    fn default() -> Self {
        EpsilonOptions {
            script_parity: false,
            check_bound: false,
        }
    }
}

/// The generating function `sum_v length(sat(I^v)/I^v) t0^v` computed from
/// the bigraded Hilbert series of the saturated Rees and Rees presentations,
/// given that the saturated Rees algebra is generated in t-degrees <= n.
pub fn epsilon_series(ideal: &Ideal, n: u32, check_bound: bool) -> Result<RationalSeries> {
    let (series, _) = epsilon_series_full(ideal, n, check_bound)?;
    Ok(series)
}

pub fn epsilon_series_full(
    ideal: &Ideal,
    n: u32,
    check_bound: bool,
) -> Result<(RationalSeries, Vec<String>)> {
    let sat_pres = blowup::saturated_rees_presentation(
        ideal,
        n,
        SaturatedReesOptions { check_bound },
    )?;
    let rees_pres = blowup::rees_presentation(ideal)?;
    let hs = sat_pres.hilbert_series()?;
    let hr = rees_pres.hilbert_series()?;
    let series = hilbert::bigraded_difference_specialized(&hs, &hr)?;
    Ok((series, sat_pres.warnings))
}

/// Same series with the saturations supplied externally (closed-form graded
/// parts, e.g. determinantal symbolic powers).
pub fn epsilon_series_with_parts(
    ideal: &Ideal,
    parts: &[Ideal],
) -> Result<RationalSeries> {
    let sat_pres = blowup::saturated_rees_with_supplied_parts(
        ideal,
        parts,
        SaturatedReesOptions::default(),
    )?;
    let rees_pres = blowup::rees_presentation(ideal)?;
    let hs = sat_pres.hilbert_series()?;
    let hr = rees_pres.hilbert_series()?;
    hilbert::bigraded_difference_specialized(&hs, &hr)
}

/// Eventual quasi-polynomial of a univariate rational series whose
/// denominator is a product of `(1 - t^e)` factors: period `lcm(e_i)`,
/// degree bounded by the factor count minus one, coefficients interpolated
/// per residue class and cross-validated on a disjoint window.
pub fn quasi_polynomial(series: &RationalSeries) -> Result<QuasiPolynomial> {
    if series.den_rest.0.len() > 1 {
        return Err(Error::NotEventuallyQuasiPolynomial);
    }
    let exps: Vec<usize> = series.den.iter().map(|d| d.0[0] as usize).collect();
    let num_deg = series
        .num
        .terms()
        .map(|(m, _)| m.0[0] as i64)
        .max()
        .unwrap_or(0);
    let den_deg: i64 = exps.iter().map(|&e| e as i64).sum();
    if exps.is_empty() {
        // finite polynomial: eventually zero
        return Ok(QuasiPolynomial {
            degree: 0,
            period: 1,
            table: vec![vec![Q::zero()]],
            n0: num_deg + 1,
        });
    }
    let degree = exps.len() - 1;
    let period = exps.iter().fold(1usize, |a, &e| num_integer::lcm(a, e));
    let n0 = (num_deg - den_deg + 1).max(0);
    let window = 2 * period;
    let needed = n0 as usize + (degree + 1) * period + window + period;
    let coeffs = series.expand1(needed);

    let mut table: Vec<Vec<Q>> = Vec::with_capacity(period);
    for r in 0..period {
        // first sample index >= n0 congruent to r
        let mut first = n0;
        while (first.rem_euclid(period as i64)) as usize != r {
            first += 1;
        }
        let points: Vec<i64> = (0..=degree as i64)
            .map(|k| first + k * period as i64)
            .collect();
        let rows: Vec<Vec<Q>> = points
            .iter()
            .map(|&n| {
                (0..=degree)
                    .map(|k| {
                        let mut acc = Q::one();
                        for _ in 0..k {
                            acc *= Q::from_integer(n.into());
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<Q> = points
            .iter()
            .map(|&n| coeffs[n as usize].clone())
            .collect();
        let sol = linalg::solve(&rows, &rhs).ok_or(Error::NotEventuallyQuasiPolynomial)?;
        table.push(sol);
    }
    let qp = QuasiPolynomial {
        degree,
        period,
        table,
        n0,
    };
    // validate on a fresh window of 2*period consecutive indices
    let start = n0 as usize + (degree + 1) * period;
    for n in start..start + window {
        if qp.eval(n as i64) != coeffs[n] {
            return Err(Error::NotEventuallyQuasiPolynomial);
        }
    }
    // the top coefficient must not depend on the residue
    qp.uniform_coefficient(degree)?;
    Ok(qp)
}

/// The coefficient of `1/(1-t)^(d+1)` in the partial fraction decomposition,
/// divided by `scale^d`: with `H = N/((1-t)^p E)`, `E(1) != 0`, this is
/// `N(1)/E(1)` when `p = d+1`, `0` when `p <= d`, and an error when `p > d+1`.
pub fn epsilon_from_series(series: &RationalSeries, d: usize, scale: u32) -> Result<Q> {
    let (num, den) = series.reduced_fraction();
    if num.is_zero() {
        return Ok(Q::zero());
    }
    let pole = den.order_at_one();
    if pole > d + 1 {
        return Err(Error::PoleTooHigh {
            found: pole,
            bound: d + 1,
        });
    }
    if pole < d + 1 {
        return Ok(Q::zero());
    }
    let mut unit = den;
    for _ in 0..pole {
        unit = unit
            .div_exact(&crate::unipoly::UniPoly::one_minus_power(1))
            .expect("pole order divides");
    }
    let c = num.eval_one() / unit.eval_one();
    let mut scale_pow = Q::one();
    for _ in 0..d {
        scale_pow *= Q::from_integer((scale as i64).into());
    }
    Ok(c / scale_pow)
}

/// `sum_v length(outer^v / inner^v) t0^v` for a cofinal pair `inner ⊆ outer`,
/// from the difference of the two Rees-algebra Hilbert series.
pub fn pair_length_series(inner: &Ideal, outer: &Ideal) -> Result<RationalSeries> {
    assert_eq!(inner.ring(), outer.ring());
    // finite length requires the saturation of the small ideal to swallow the big one
    let sat_inner = ideal_ops::saturate(inner, None)?;
    if !sat_inner.contains_ideal(outer) {
        return Err(Error::NotCofinal);
    }
    if inner.equals(outer) {
        return Ok(RationalSeries::zero(1));
    }
    let h_outer = blowup::rees_presentation(outer)?.hilbert_series()?;
    let h_inner = blowup::rees_presentation(inner)?.hilbert_series()?;
    hilbert::bigraded_difference_specialized(&h_outer, &h_inner)
}

/// Epsilon multiplicity through the Veronese route: with `sat(I^v0)` powers
/// computing all high saturations, epsilon is the normalized difference of
/// the top mixed multiplicities of the truncated extensions.
pub fn epsilon_via_veronese(ideal: &Ideal, v0: u32) -> Result<EpsilonReport> {
    let (tilde, power, witness) = blowup::veronese_pair(ideal, v0)?;
    let mut warnings = Vec::new();
    if !witness {
        return Err(Error::Other(format!(
            "powers of sat(I^{}) do not compute the higher saturations; \
             the Veronese step {} is not usable",
            v0, v0
        )));
    }
    let d = mixed::relevant_dimension(ideal)?;
    let beta = max_min_generator_degree(&tilde)?.max(max_min_generator_degree(&power)?);
    let mm_tilde = mixed::mixed_in_extension(&tilde, beta)?;
    let mm_power = mixed::mixed_in_extension(&power, beta)?;
    warnings.extend(mm_tilde.warnings.iter().cloned());
    let e_top_tilde = *mm_tilde.values.last().expect("nonempty");
    let e_top_power = *mm_power.values.last().expect("nonempty");
    let mut v0_pow = Q::one();
    for _ in 0..d {
        v0_pow *= Q::from_integer((v0 as i64).into());
    }
    let eps = Q::from_integer((e_top_tilde - e_top_power).into()) / &v0_pow;

    // Independent cross-check through the Veronese-indexed length series.
    let series = pair_length_series(&power, &tilde)?;
    let eps_series = epsilon_from_series(&series, d, v0)?;
    if eps_series != eps {
        return Err(Error::Other(format!(
            "mixed-multiplicity route ({}) and series route ({}) disagree",
            eps, eps_series
        )));
    }
    let quasi = quasi_polynomial(&series).ok();
    Ok(EpsilonReport {
        dimension: d,
        series,
        quasi,
        epsilon: eps,
        method: Method::Veronese,
        scale: v0,
        warnings,
    })
}

fn max_min_generator_degree(ideal: &Ideal) -> Result<i64> {
    let ring = ideal.ring().clone();
    let mins = ideal_ops::minimal_generators(ideal);
    Ok(mins
        .iter()
        .map(|g| ring.multidegree(g).map(|d| d.0[0]).unwrap_or(0))
        .max()
        .unwrap_or(0))
}

/// Dimension-two closed form from mixed multiplicities.
///
/// For associated-graded values of the truncated extension:
/// `eps = e_1^2/e_0 - e_2`; for Rees-grading values of `S[Jt]`:
/// `eps = e_1^2/e_2 - e_0`.
pub fn epsilon_dim2(mm: &MixedMultiplicities) -> Result<Q> {
    if mm.values.len() < 3 {
        return Err(Error::Other(
            "dimension-two formula needs indices 0..2".into(),
        ));
    }
    let (e0, e1, e2) = (mm.values[0], mm.values[1], mm.values[2]);
    match mm.convention {
        Convention::AssociatedGraded => {
            if e0 == 0 {
                if e1 == 0 {
                    return Ok(Q::from_integer((-e2).into()));
                }
                return Err(Error::ZeroDenominator("e_0 of the truncation".into()));
            }
            Ok(Q::new((e1 * e1).into(), e0.into()) - Q::from_integer(e2.into()))
        }
        Convention::ReesGrading => {
            if e2 == 0 {
                if e1 == 0 {
                    return Ok(Q::from_integer((-e0).into()));
                }
                return Err(Error::ZeroDenominator("e_2 of the Rees grading".into()));
            }
            Ok(Q::new((e1 * e1).into(), e2.into()) - Q::from_integer(e0.into()))
        }
    }
}

/// Epsilon of a height-one prime at a point on a projective curve:
/// `(e(R) - e(local))^2 / e(R)`.
pub fn epsilon_prime_point(e_ring: i64, e_local: i64) -> Result<Q> {
    if !(e_ring >= e_local && e_local >= 1) {
        return Err(Error::BadMultiplicityPair(e_ring, e_local));
    }
    let diff = e_ring - e_local;
    Ok(Q::new((diff * diff).into(), e_ring.into()))
}

/// Full pipeline driver: analytic spread gate, series, quasi-polynomial, and
/// the partial-fraction value, with the two epsilon routes reconciled.
pub fn epsilon_report(ideal: &Ideal, sat_bound: u32, opts: EpsilonOptions) -> Result<EpsilonReport> {
    let ring = ideal.ring().clone();
    let d = ideal_ops::krull_dim_ring(&ring);
    let spread = ideal_ops::analytic_spread(ideal)?;
    let mut warnings = Vec::new();
    if spread != d {
        if opts.script_parity {
            return Err(Error::AnalyticSpreadNotMaximal);
        }
        warnings.push(format!(
            "analytic spread {} is below the ring dimension {}; epsilon vanishes",
            spread, d
        ));
    }
    let (series, pres_warnings) = epsilon_series_full(ideal, sat_bound, opts.check_bound)?;
    warnings.extend(pres_warnings);
    let quasi = quasi_polynomial(&series)?;
    let eps = epsilon_from_series(&series, d, 1)?;
    let lead = quasi.uniform_coefficient(d)?;
    let mut dfact = Q::one();
    for k in 1..=d {
        dfact *= Q::from_integer((k as i64).into());
    }
    let eps_qp = lead * dfact;
    if eps_qp != eps {
        return Err(Error::Other(format!(
            "epsilon from the quasi-polynomial ({}) and from the partial fraction ({}) disagree",
            eps_qp, eps
        )));
    }
    if eps.is_positive() != (spread == d) {
        warnings.push(
            "epsilon positivity does not match maximality of the analytic spread; \
             the generation bound may be too small"
                .into(),
        );
    }
    Ok(EpsilonReport {
        dimension: d,
        series,
        quasi: Some(quasi),
        epsilon: eps,
        method: Method::Series,
        scale: 1,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q_frac, q_int, DegreeVector};
    use crate::ring::GradedRing;
    use crate::unipoly::UniPoly;

    fn series_from(num: UniPoly, den: UniPoly) -> RationalSeries {
        RationalSeries::canonical_univariate(num, den)
    }

    #[test]
    fn quasi_polynomial_of_geometric_series() {
        // 1/(1-t): constant 1, period 1.
        let s = series_from(UniPoly::one(), UniPoly::one_minus_power(1));
        let qp = quasi_polynomial(&s).unwrap();
        assert_eq!(qp.period, 1);
        for n in 0..5 {
            assert_eq!(qp.eval(n), q_int(1));
        }
    }

    #[test]
    fn quasi_polynomial_with_period_two() {
        // 1/((1-t)^2 (1+t)) = 1/((1-t)(1-t^2)): a_n = (2n+3+(-1)^n)/4.
        let den = UniPoly::one_minus_power(1)
            .mul(&UniPoly::one_minus_power(1))
            .mul(&UniPoly::from_coeffs(vec![q_int(1), q_int(1)]));
        let s = series_from(UniPoly::one(), den);
        let qp = quasi_polynomial(&s).unwrap();
        assert_eq!(qp.period, 2);
        for n in 0..12i64 {
            let expect = q_frac(2 * n + 3 + if n % 2 == 0 { 1 } else { -1 }, 4);
            assert_eq!(qp.eval(n), expect, "n = {}", n);
        }
        // agreement with direct expansion over two periods past n0
        let coeffs = s.expand1(qp.n0 as usize + 2 * qp.period + 1);
        for n in qp.n0..(qp.n0 + 2 * qp.period as i64) {
            assert_eq!(qp.eval(n), coeffs[n as usize]);
        }
    }

    #[test]
    fn epsilon_from_series_examples() {
        // t^2/((1-t)^4 (1+t)), d = 3 -> 1/2.
        let num = UniPoly::from_coeffs(vec![q_int(0), q_int(0), q_int(1)]);
        let mut den = UniPoly::one();
        for _ in 0..4 {
            den = den.mul(&UniPoly::one_minus_power(1));
        }
        den = den.mul(&UniPoly::from_coeffs(vec![q_int(1), q_int(1)]));
        let s = series_from(num, den);
        assert_eq!(epsilon_from_series(&s, 3, 1).unwrap(), q_frac(1, 2));

        // zero series
        assert_eq!(
            epsilon_from_series(&RationalSeries::zero(1), 3, 1).unwrap(),
            q_int(0)
        );

        // Veronese-indexed: (4t^3 + 82t^2 + 22t)/(1-t)^4 with d=3, scale=3 -> 4.
        let num = UniPoly::from_coeffs(vec![q_int(0), q_int(22), q_int(82), q_int(4)]);
        let mut den = UniPoly::one();
        for _ in 0..4 {
            den = den.mul(&UniPoly::one_minus_power(1));
        }
        let s = series_from(num, den);
        assert_eq!(epsilon_from_series(&s, 3, 3).unwrap(), q_int(4));
    }

    #[test]
    fn prime_point_formula() {
        assert_eq!(epsilon_prime_point(3, 1).unwrap(), q_frac(4, 3));
        assert_eq!(epsilon_prime_point(3, 1).unwrap(), q_frac(4, 3));
        assert_eq!(epsilon_prime_point(5, 5).unwrap(), q_int(0));
        assert!(epsilon_prime_point(1, 2).is_err());
        // (q, q-p) -> p^2/q
        assert_eq!(epsilon_prime_point(7, 4).unwrap(), q_frac(9, 7));
    }

    #[test]
    fn pipeline_on_max_ideal_of_plane() {
        // I = m in k[x,y]: sat(m^v) = R, epsilon function v(v+1)/2, epsilon 1? No:
        // lengths grow like v^2/2, d = 2, so epsilon = 2! * 1/2 = 1.
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let report = epsilon_report(&m, 1, EpsilonOptions::default()).unwrap();
        assert_eq!(report.dimension, 2);
        for v in 0..6i64 {
            assert_eq!(
                report
                    .series
                    .coefficient(&DegreeVector::single(v))
                    .unwrap(),
                (v * (v + 1) / 2).into()
            );
        }
        assert_eq!(report.epsilon, q_int(1));
    }

    #[test]
    fn dim2_formula_routes() {
        let kv = MixedMultiplicities {
            convention: Convention::AssociatedGraded,
            values: vec![18, 14, 0],
            beta: Some(1),
            ring: String::new(),
            ideal: String::new(),
            warnings: vec![],
        };
        assert_eq!(epsilon_dim2(&kv).unwrap(), q_frac(98, 9));
        let ht = MixedMultiplicities {
            convention: Convention::ReesGrading,
            values: vec![0, 2, 2],
            beta: None,
            ring: String::new(),
            ideal: String::new(),
            warnings: vec![],
        };
        assert_eq!(epsilon_dim2(&ht).unwrap(), q_int(2));
    }
}
