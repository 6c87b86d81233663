//! Mixed multiplicities of graded ideals in two normalizations, extracted by
//! exact interpolation of bivariate Hilbert polynomials from Rees-algebra
//! Hilbert series.
//!
//! Conventions:
//! - `ReesGrading` (after Hoang-Trung): `dim (I^v)_u` fits a polynomial of
//!   total degree d-1 on the cone `u >= b_s v + u0`; `e_i` sits on `u^i
//!   v^(d-1-i)` with normalization `i!(d-1-i)!`.
//! - `AssociatedGraded` (after Katz-Verma): `dim (I^v)_(b v + u)` fits a
//!   polynomial with `e_i` on `u^(d-1-i) v^i`.

use num_traits::One;

use crate::blowup::{self, BigradedPresentation};
use crate::error::{Error, Result};
use crate::fit;
use crate::ideal_ops;
use crate::poly::{DegreeVector, Q};
use crate::ring::Ideal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `e_i(R[It])`: Rees-grading normalization, indices 0..d-1.
    ReesGrading,
    /// `e_i(m|I)`: associated-graded normalization, indices 0..d-1 (or 0..d
    /// for extension ideals in `S = R[U]`).
    AssociatedGraded,
}

#[derive(Clone, Debug)]
pub struct MixedMultiplicities {
    pub convention: Convention,
    pub values: Vec<i64>,
    pub beta: Option<i64>,
    pub ring: String,
    pub ideal: String,
    pub warnings: Vec<String>,
}

impl MixedMultiplicities {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "convention": match self.convention {
                Convention::ReesGrading => "rees-grading",
                Convention::AssociatedGraded => "associated-graded",
            },
            "values": self.values,
            "beta": self.beta,
            "ring": self.ring,
            "ideal": self.ideal,
            "warnings": self.warnings,
        })
    }
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product::<i64>().max(1)
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n as i64 - j as i64) / (j as i64 + 1);
    }
    acc
}

fn q_to_i64(c: &Q, what: &str) -> Result<i64> {
    if !c.denom().is_one() {
        return Err(Error::Other(format!(
            "{} came out non-integer: {}",
            what, c
        )));
    }
    i64::try_from(c.numer()).map_err(|_| Error::Other(format!("{} overflows i64", what)))
}

/// Dimension `d = dim R/(0 : I^infinity)` controlling the degree of the
/// bivariate Hilbert polynomial.
pub fn relevant_dimension(ideal: &Ideal) -> Result<usize> {
    let ring = ideal.ring().clone();
    let ann = ideal_ops::saturate_with(
        &Ideal::zero(ring.clone()),
        Some(ideal),
        ideal_ops::SaturationMethod::IteratedColon,
    )?;
    Ok(ideal_ops::krull_dim(&ann))
}

/// Classical mixed multiplicities `e_i(m|I)` of an ideal equigenerated in
/// degree `b`, through the standard bigrading `(u, v) -> dim (I^v)_(bv+u)`.
pub fn classical_mixed(ideal: &Ideal, b: i64) -> Result<MixedMultiplicities> {
    let mingens = ideal_ops::minimal_generators(ideal);
    let ring = ideal.ring().clone();
    let degrees: Vec<i64> = mingens
        .iter()
        .map(|g| ring.multidegree(g).map(|d| d.0[0]).unwrap_or(0))
        .collect();
    if degrees.iter().any(|&d| d != b) {
        return Err(Error::NotEquigenerated(degrees));
    }
    let minimal = Ideal::new(ring.clone(), mingens);
    let d = relevant_dimension(&minimal)?;
    let series = blowup::rees_presentation(&minimal)?.hilbert_series()?;
    let degree = d - 1;
    let start = ((2 * b.max(1) * degree as i64).max(2), (2 * degree as i64).max(2));
    let mut f = |u: i64, v: i64| -> Result<Q> {
        let z = series.coefficient(&DegreeVector::pair(v, b * v + u))?;
        Ok(Q::from_integer(z))
    };
    let fit = fit::fit_bivariate(&mut f, degree, start)?;
    let mut values = Vec::with_capacity(d);
    for i in 0..d {
        let norm = factorial(i) * factorial(degree - i);
        let c = fit.coefficient(degree - i, i) * Q::from_integer(norm.into());
        values.push(q_to_i64(&c, "mixed multiplicity")?);
    }
    Ok(MixedMultiplicities {
        convention: Convention::AssociatedGraded,
        values,
        beta: None,
        ring: format!("{:?}", ring),
        ideal: format!("{:?}", ideal),
        warnings: vec![],
    })
}

/// Mixed multiplicities `e_i(n | <(I S)_beta>)` of the degree-`beta`
/// truncation of the extension of `I` to `S = R[U]`, for `beta` at least the
/// maximal generator degree of `I`.
///
/// Because `S` is standard graded and the truncation is equigenerated in
/// degree `beta`, the bigraded Hilbert function of the truncated extension
/// collapses to partial sums over the internal degree:
/// `dim (<(IS)_beta>^v)_(beta v + u) = sum_(m <= beta v + u) dim (I^v)_m`,
/// so one Rees series of `I` in `R` drives the whole fit.
pub fn mixed_in_extension(ideal: &Ideal, beta: i64) -> Result<MixedMultiplicities> {
    let ring = ideal.ring().clone();
    if !ring.is_standard_graded() {
        return Err(Error::NotStandardGraded);
    }
    let mingens = ideal_ops::minimal_generators(ideal);
    let maxdeg = mingens
        .iter()
        .map(|g| ring.multidegree(g).map(|d| d.0[0]).unwrap_or(0))
        .max()
        .unwrap_or(0);
    if beta < maxdeg {
        return Err(Error::Other(format!(
            "truncation degree {} is below the maximal generator degree {}",
            beta, maxdeg
        )));
    }
    let minimal = Ideal::new(ring.clone(), mingens);
    let d = relevant_dimension(&minimal)?;
    let series = blowup::rees_presentation(&minimal)?.hilbert_series()?;

    // cached expansion grid with prefix sums over the internal degree
    let mut grid: Vec<Vec<Q>> = Vec::new();
    let mut grid_v = 0usize;
    let mut grid_u = 0usize;
    let big_degree = d; // total degree of the fit in S

    let mut warnings = Vec::new();
    {
        // generator count of the truncation: dim (IS)_beta
        let mut probe = series.expand2(1, beta as usize);
        let count: Q = probe.remove(1).into_iter().take(beta as usize + 1).sum();
        let count = q_to_i64(&count, "truncation generator count")?;
        if count > 80 {
            warnings.push(format!(
                "truncation at degree {} has {} generators; expect slow downstream use",
                beta, count
            ));
        }
    }

    let start = (
        (2 * beta.max(1) * big_degree as i64).max(2),
        (2 * big_degree as i64).max(2),
    );
    let mut f = |u: i64, v: i64| -> Result<Q> {
        let need_v = v as usize;
        let need_u = (beta * v + u) as usize;
        if need_v > grid_v || need_u > grid_u || grid.is_empty() {
            grid_v = grid_v.max(need_v + 2);
            grid_u = grid_u.max(need_u + 2);
            grid = series.expand2(grid_v, grid_u);
            // prefix sums along the internal degree
            for row in grid.iter_mut() {
                for m in 1..row.len() {
                    let prev = row[m - 1].clone();
                    row[m] += prev;
                }
            }
        }
        Ok(grid[need_v][need_u].clone())
    };
    let fit = fit::fit_bivariate(&mut f, big_degree, start)?;
    let mut values = Vec::with_capacity(big_degree + 1);
    for i in 0..=big_degree {
        let norm = factorial(i) * factorial(big_degree - i);
        let c = fit.coefficient(big_degree - i, i) * Q::from_integer(norm.into());
        values.push(q_to_i64(&c, "mixed multiplicity")?);
    }
    Ok(MixedMultiplicities {
        convention: Convention::AssociatedGraded,
        values,
        beta: Some(beta),
        ring: format!("{:?} extended by one variable", ring),
        ideal: format!("{:?}", ideal),
        warnings,
    })
}

/// Truncation-based mixed multiplicities for a possibly non-equigenerated
/// ideal: extend to `S = R[U]`, truncate at `beta`, and read off the full
/// vector including index `d`.
pub fn truncated_mixed(ideal: &Ideal, beta: i64) -> Result<MixedMultiplicities> {
    mixed_in_extension(ideal, beta)
}

/// Rees-grading mixed multiplicities `e_i(R[It])` from a Rees presentation.
pub fn bigraded_mixed(pres: &BigradedPresentation) -> Result<MixedMultiplicities> {
    let source = Ideal::new(
        pres.source_ring.clone(),
        pres.algebra_gens.iter().map(|(_, f)| f.clone()).collect(),
    );
    let d = relevant_dimension(&source)?;
    let series = pres.hilbert_series()?;
    let fit = fit::fit_hilbert_polynomial(&series, d - 1)?;
    let degree = d - 1;
    let mut values = Vec::with_capacity(d);
    for i in 0..d {
        let norm = factorial(i) * factorial(degree - i);
        let c = fit.coefficient(i, degree - i) * Q::from_integer(norm.into());
        values.push(q_to_i64(&c, "mixed multiplicity")?);
    }
    Ok(MixedMultiplicities {
        convention: Convention::ReesGrading,
        values,
        beta: None,
        ring: format!("{:?}", pres.source_ring),
        ideal: "rees presentation source".into(),
        warnings: vec![],
    })
}

/// Convert Rees-grading values to associated-graded values for an ideal
/// equigenerated in degree `b`:
/// `e_i(m|I) = sum_j C(i,j) b^j e_(d-1-i+j)(R[It])`.
pub fn convert_mixed(rees_values: &[i64], b: i64, d: usize) -> Result<Vec<i64>> {
    if rees_values.len() != d {
        return Err(Error::Other(format!(
            "expected {} Rees-grading values, got {}",
            d,
            rees_values.len()
        )));
    }
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let mut acc: i64 = 0;
        for j in 0..=i {
            let idx = d - 1 - i + j;
            acc += binomial(i, j) * b.pow(j as u32) * rees_values[idx];
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradedRing;

    #[test]
    fn classical_mixed_of_max_ideal_in_plane() {
        // e_0(m|m) = e_1(m|m) = 1 in k[x,y].
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let mm = classical_mixed(&m, 1).unwrap();
        assert_eq!(mm.values, vec![1, 1]);
    }

    #[test]
    fn rees_grading_mixed_of_max_ideal_in_plane() {
        // dim (m^v)_u = u + 1 on u >= v: e_1 = 1, e_0 = 0.
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let pres = blowup::rees_presentation(&m).unwrap();
        let mm = bigraded_mixed(&pres).unwrap();
        assert_eq!(mm.values, vec![0, 1]);
    }

    #[test]
    fn conversion_identities() {
        // i = 0: e_0(m|I) = e_(d-1)(R[It]).
        let ht = vec![-1, 3];
        let kv = convert_mixed(&ht, 1, 2).unwrap();
        assert_eq!(kv[0], 3);
        // dim-2, i=1, b=1: e_1(m|P) = e_0 + e_1 of the Rees grading.
        assert_eq!(kv[1], 2);
        // all zero input stays zero for any b
        assert_eq!(convert_mixed(&[0, 0, 0], 7, 3).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn not_equigenerated_is_rejected() {
        let r = GradedRing::standard(&["x", "y"]);
        let x = r.var(0);
        let y = r.var(1);
        let i = Ideal::new(r.clone(), vec![x.clone(), y.pow(2)]);
        assert!(matches!(
            classical_mixed(&i, 1),
            Err(Error::NotEquigenerated(_))
        ));
    }
}
