//! Exact interpolation of Hilbert polynomials from series coefficients on a
//! probed stable region, with cross-validation on a larger disjoint grid.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hilbert::RationalSeries;
use crate::linalg;
use crate::poly::{DegreeVector, Monomial, Polynomial, Q};

/// A fitted numerical polynomial together with the offsets at which the
/// validation grid first agreed with the series.
#[derive(Clone, Debug)]
pub struct HilbertPolynomialFit {
    pub total_degree: usize,
    /// Polynomial in (u, v) (or just (n) for univariate sources).
    pub poly: Polynomial,
    pub offsets: (i64, i64),
}

impl HilbertPolynomialFit {
    pub fn eval2(&self, u: i64, v: i64) -> Q {
        eval_poly2(&self.poly, u, v)
    }

    pub fn eval1(&self, n: i64) -> Q {
        eval_poly1(&self.poly, n)
    }

    /// Coefficient of `u^a v^b`.
    pub fn coefficient(&self, a: usize, b: usize) -> Q {
        match self.poly.nvars() {
            2 => self.poly.coeff(&Monomial(vec![a as u16, b as u16])),
            1 => {
                assert_eq!(b, 0);
                self.poly.coeff(&Monomial(vec![a as u16]))
            }
            _ => unreachable!(),
        }
    }
}

pub fn eval_poly2(p: &Polynomial, u: i64, v: i64) -> Q {
    let mut acc = Q::zero();
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for _ in 0..m.0[0] {
            t *= Q::from_integer(u.into());
        }
        for _ in 0..m.0[1] {
            t *= Q::from_integer(v.into());
        }
        acc += t;
    }
    acc
}

pub fn eval_poly1(p: &Polynomial, n: i64) -> Q {
    let mut acc = Q::zero();
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for _ in 0..m.0[0] {
            t *= Q::from_integer(n.into());
        }
        acc += t;
    }
    acc
}

/// Interpolate a bivariate polynomial of total degree <= `degree` agreeing
/// with `f` on the triangle at offsets `(u0, v0)`, then cross-validate on a
/// strictly larger disjoint triangle. Retries once with doubled offsets.
pub fn fit_bivariate(
    f: &mut dyn FnMut(i64, i64) -> Result<Q>,
    degree: usize,
    start: (i64, i64),
) -> Result<HilbertPolynomialFit> {
    let mut offsets = start;
    for attempt in 0..2 {
        match try_fit_bivariate(f, degree, offsets) {
            Ok(fit) => return Ok(fit),
            Err(_) if attempt == 0 => {
                offsets = ((2 * offsets.0).max(2), (2 * offsets.1).max(2));
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoStablePolynomial(offsets.0, offsets.1))
}

fn try_fit_bivariate(
    f: &mut dyn FnMut(i64, i64) -> Result<Q>,
    degree: usize,
    (u0, v0): (i64, i64),
) -> Result<HilbertPolynomialFit> {
    // Unknowns c_{ab}, a + b <= degree, on monomials u^a v^b.
    let monos: Vec<(usize, usize)> = (0..=degree)
        .flat_map(|a| (0..=(degree - a)).map(move |b| (a, b)))
        .collect();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    for i in 0..=(degree as i64) {
        for j in 0..=(degree as i64 - i) {
            let (u, v) = (u0 + i, v0 + j);
            let mut row = Vec::with_capacity(monos.len());
            for &(a, b) in &monos {
                row.push(int_pow(u, a) * int_pow(v, b));
            }
            rows.push(row);
            rhs.push(f(u, v)?);
        }
    }
    let sol =
        linalg::solve(&rows, &rhs).ok_or(Error::NoStablePolynomial(u0, v0))?;
    let mut poly = Polynomial::zero(2);
    for (&(a, b), c) in monos.iter().zip(sol) {
        poly.add_term(Monomial(vec![a as u16, b as u16]), c);
    }
    // Validate on a disjoint, strictly larger triangle.
    let shift = degree as i64 + 1;
    for i in 0..=(degree as i64 + 1) {
        for j in 0..=(degree as i64 + 1 - i) {
            let (u, v) = (u0 + shift + i, v0 + shift + j);
            if eval_poly2(&poly, u, v) != f(u, v)? {
                return Err(Error::NoStablePolynomial(u0, v0));
            }
        }
    }
    Ok(HilbertPolynomialFit {
        total_degree: degree,
        poly,
        offsets: (u0, v0),
    })
}

/// Univariate version: polynomial of degree <= `degree` in n.
pub fn fit_univariate(
    f: &mut dyn FnMut(i64) -> Result<Q>,
    degree: usize,
    start: i64,
) -> Result<HilbertPolynomialFit> {
    let mut n0 = start;
    for attempt in 0..2 {
        match try_fit_univariate(f, degree, n0) {
            Ok(fit) => return Ok(fit),
            Err(_) if attempt == 0 => n0 = (2 * n0).max(2),
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoStablePolynomial(n0, 0))
}

fn try_fit_univariate(
    f: &mut dyn FnMut(i64) -> Result<Q>,
    degree: usize,
    n0: i64,
) -> Result<HilbertPolynomialFit> {
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    for i in 0..=(degree as i64) {
        let n = n0 + i;
        rows.push((0..=degree).map(|a| int_pow(n, a)).collect());
        rhs.push(f(n)?);
    }
    let sol = linalg::solve(&rows, &rhs).ok_or(Error::NoStablePolynomial(n0, 0))?;
    let mut poly = Polynomial::zero(1);
    for (a, c) in sol.into_iter().enumerate() {
        poly.add_term(Monomial(vec![a as u16]), c);
    }
    for i in 1..=(degree as i64 + 2) {
        let n = n0 + degree as i64 + i;
        if eval_poly1(&poly, n) != f(n)? {
            return Err(Error::NoStablePolynomial(n0, 0));
        }
    }
    Ok(HilbertPolynomialFit {
        total_degree: degree,
        poly,
        offsets: (n0, 0),
    })
}

fn int_pow(x: i64, k: usize) -> Q {
    let mut acc = Q::one();
    for _ in 0..k {
        acc *= Q::from_integer(x.into());
    }
    acc
}

/// Fit the coefficient function of a rational series on its stable region.
///
/// For a bivariate series the probe points follow the cone `u >= s*v + u0`
/// with `s` the largest internal-degree slope among the denominator factors;
/// the fitted polynomial is returned in the sheared coordinates `(u, v) ->
/// coefficient(v, s*v + u)` composed back, i.e. as a polynomial `P(u, v)`
/// with `P(u, v) = dim` at bidegree `(v, u)`.
pub fn fit_hilbert_polynomial(
    series: &RationalSeries,
    total_degree_bound: usize,
) -> Result<HilbertPolynomialFit> {
    match series.rank {
        1 => {
            let maxdeg = series
                .den
                .iter()
                .map(|d| d.0[0])
                .max()
                .unwrap_or(1)
                .max(1);
            let start = 2 * maxdeg * total_degree_bound as i64;
            let num_deg = series.num.total_degree().unwrap_or(0) as i64;
            let mut f = |n: i64| -> Result<Q> {
                let z = series.coefficient(&DegreeVector::single(n))?;
                Ok(Q::from_integer(z))
            };
            fit_univariate(&mut f, total_degree_bound, start.max(num_deg + 1).max(2))
        }
        2 => {
            // slope of the stable cone in the (u = internal, v = t) plane
            let slope = series
                .den
                .iter()
                .filter(|d| d.0[0] > 0)
                .map(|d| (d.0[1] + d.0[0] - 1) / d.0[0])
                .max()
                .unwrap_or(0);
            let d = total_degree_bound as i64;
            let start_u = 2 * slope.max(1) * d;
            let start_v = 2 * d;
            // Fit in sheared coordinates (excess, v).
            let mut f = |excess: i64, v: i64| -> Result<Q> {
                let u = slope * v + excess;
                let z = series.coefficient(&DegreeVector::pair(v, u))?;
                Ok(Q::from_integer(z))
            };
            let fit = fit_bivariate(&mut f, total_degree_bound, (start_u.max(2), start_v.max(2)))?;
            // Un-shear: substitute excess = u - slope*v.
            let u_var = Polynomial::var(2, 0);
            let v_var = Polynomial::var(2, 1);
            let excess = u_var.sub(&v_var.scalar_mul(&Q::from_integer(slope.into())));
            let unsheared = fit.poly.substitute(&[excess, v_var]);
            Ok(HilbertPolynomialFit {
                total_degree: fit.total_degree,
                poly: unsheared,
                offsets: fit.offsets,
            })
        }
        _ => Err(Error::Other("unsupported series rank".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    #[test]
    fn univariate_fit_of_binomial_series() {
        // 1/(1-t)^2: coefficients n+1, a degree-1 polynomial with offsets (0).
        let s = RationalSeries::new(
            1,
            Polynomial::one(1),
            vec![DegreeVector::single(1), DegreeVector::single(1)],
        );
        let fit = fit_hilbert_polynomial(&s, 1).unwrap();
        for n in 0..8 {
            assert_eq!(fit.eval1(n), q_int(n + 1));
        }
    }

    #[test]
    fn bivariate_fit_of_standard_rees_series() {
        // Standard-bigraded Rees series of m=(x,y) in k[x,y] in coordinates
        // coefficient(v, u) = dim (m^v)_(v+u) = u + v + 1 for u >= 0.
        // H = (1 - t0 t1) / ((1-t1)^2 (1-t0)^2).
        let num = Polynomial::one(2).sub(&Polynomial::from_term(
            Monomial(vec![1, 1]),
            Q::one(),
        ));
        let s = RationalSeries::new(
            2,
            num,
            vec![
                DegreeVector::pair(0, 1),
                DegreeVector::pair(0, 1),
                DegreeVector::pair(1, 0),
                DegreeVector::pair(1, 0),
            ],
        );
        let fit = fit_hilbert_polynomial(&s, 1).unwrap();
        // P(u, v) = u + v + 1
        for (u, v) in [(3, 5), (10, 2), (7, 7)] {
            assert_eq!(fit.eval2(u, v), q_int(u + v + 1));
        }
        assert_eq!(fit.coefficient(1, 0), q_int(1));
        assert_eq!(fit.coefficient(0, 1), q_int(1));
        assert_eq!(fit.coefficient(0, 0), q_int(1));
    }
}
