//! Multigraded Hilbert series of presented graded quotients, exact series
//! expansion, multiplicity extraction and the bivariate-to-univariate
//! specializations used by the epsilon pipeline.
//!
//! A series is kept as `N(t) / prod (1 - t^delta)` with the denominator a
//! multiset of degree vectors that is never expanded; cancellation happens by
//! exact division in the numerator ring.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal_ops;
use crate::poly::{format_q, DegreeVector, Monomial, MonomialOrder, Polynomial, Q, Z};
use crate::ring::{GradedRing, Ideal};
use crate::unipoly::UniPoly;

/// A multivariate rational generating function `num / prod (1 - t^delta)`,
/// with an extra univariate polynomial factor `den_rest` for the specialized
/// univariate forms (1 whenever the denominator is a clean product).
#[derive(Clone, Debug)]
pub struct RationalSeries {
    pub rank: usize,
    pub num: Polynomial,
    pub den: Vec<DegreeVector>,
    pub den_rest: UniPoly,
}

impl RationalSeries {
    pub fn new(rank: usize, num: Polynomial, mut den: Vec<DegreeVector>) -> Self {
        assert!(den.iter().all(|d| !d.is_zero()), "zero denominator degree");
        den.sort();
        let mut s = RationalSeries {
            rank,
            num,
            den,
            den_rest: UniPoly::one(),
        };
        s.cancel_common_factors();
        s
    }

    pub fn zero(rank: usize) -> Self {
        RationalSeries {
            rank,
            num: Polynomial::zero(rank),
            den: vec![],
            den_rest: UniPoly::one(),
        }
    }

    /// Remove denominator factors that divide the numerator exactly.
    fn cancel_common_factors(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let order = MonomialOrder::DegRevLex;
        let mut remaining = Vec::new();
        for delta in std::mem::take(&mut self.den) {
            let factor = one_minus_t(self.rank, &delta);
            match self.num.divide_exact(&factor, &order) {
                Some(q) => self.num = q,
                None => remaining.push(delta),
            }
        }
        self.den = remaining;
        self.den.sort();
    }

    /// Exact Taylor coefficient at `degree`.
    pub fn coefficient(&self, degree: &DegreeVector) -> Result<Z> {
        if degree.0.iter().any(|&d| d < 0) {
            return Err(Error::Other("negative degree component".into()));
        }
        match self.rank {
            1 => {
                let v = self.expand1(degree.0[0] as usize);
                let c = v[degree.0[0] as usize].clone();
                q_to_int(&c)
            }
            2 => {
                let grid = self.expand2(degree.0[0] as usize, degree.0[1] as usize);
                let c = grid[degree.0[0] as usize][degree.0[1] as usize].clone();
                q_to_int(&c)
            }
            _ => Err(Error::Other("series rank not supported".into())),
        }
    }

    /// Univariate expansion: coefficients of t^0..t^n.
    pub fn expand1(&self, n: usize) -> Vec<Q> {
        assert_eq!(self.rank, 1);
        let mut den = self.den_rest.clone();
        for d in &self.den {
            den = den.mul(&UniPoly::one_minus_power(d.0[0] as usize));
        }
        let num = self.num_as_unipoly();
        num.series_div(&den, n + 1)
    }

    pub fn num_as_unipoly(&self) -> UniPoly {
        assert_eq!(self.rank, 1);
        let deg = self
            .num
            .terms()
            .map(|(m, _)| m.0[0] as usize)
            .max()
            .unwrap_or(0);
        let mut c = vec![Q::zero(); deg + 1];
        for (m, q) in self.num.terms() {
            c[m.0[0] as usize] = q.clone();
        }
        UniPoly::from_coeffs(c)
    }

    pub fn from_unipoly_fraction(num: &UniPoly, den_factors: &[usize]) -> RationalSeries {
        let mut p = Polynomial::zero(1);
        for (i, c) in num.0.iter().enumerate() {
            p.add_term(Monomial(vec![i as u16]), c.clone());
        }
        RationalSeries::new(
            1,
            p,
            den_factors
                .iter()
                .map(|&e| DegreeVector::single(e as i64))
                .collect(),
        )
    }

    /// Bivariate expansion: `grid[v][u]` is the coefficient of `t0^v t1^u`.
    pub fn expand2(&self, n0: usize, n1: usize) -> Vec<Vec<Q>> {
        assert_eq!(self.rank, 2);
        assert!(self.den_rest.0.len() <= 1, "rank-2 series keep clean denominators");
        let mut grid = vec![vec![Q::zero(); n1 + 1]; n0 + 1];
        for (m, c) in self.num.terms() {
            let (v, u) = (m.0[0] as usize, m.0[1] as usize);
            if v <= n0 && u <= n1 {
                grid[v][u] += c;
            }
        }
        for d in &self.den {
            let (dv, du) = (d.0[0] as usize, d.0[1] as usize);
            for v in dv..=n0 {
                for u in du..=n1 {
                    let prev = grid[v - dv][u - du].clone();
                    grid[v][u] += prev;
                }
            }
        }
        if let Some(c0) = self.den_rest.0.first() {
            let inv = c0.recip();
            for row in grid.iter_mut() {
                for c in row.iter_mut() {
                    *c *= &inv;
                }
            }
        }
        grid
    }

    /// Equality as rational functions.
    pub fn equals_function(&self, other: &RationalSeries) -> bool {
        assert_eq!(self.rank, other.rank);
        let da = self.expanded_denominator();
        let db = other.expanded_denominator();
        self.num.mul(&db) == other.num.mul(&da)
    }

    fn expanded_denominator(&self) -> Polynomial {
        let mut d = Polynomial::one(self.rank);
        for delta in &self.den {
            d = d.mul(&one_minus_t(self.rank, delta));
        }
        if self.rank == 1 {
            let mut rest = Polynomial::zero(1);
            for (i, c) in self.den_rest.0.iter().enumerate() {
                rest.add_term(Monomial(vec![i as u16]), c.clone());
            }
            if !rest.is_zero() {
                d = d.mul(&rest);
            }
        }
        d
    }

    /// Reduced num/den pair (univariate), denominator normalized to den(0)=1.
    pub fn reduced_fraction(&self) -> (UniPoly, UniPoly) {
        assert_eq!(self.rank, 1);
        let mut den = self.den_rest.clone();
        for d in &self.den {
            den = den.mul(&UniPoly::one_minus_power(d.0[0] as usize));
        }
        reduce_fraction(self.num_as_unipoly(), den)
    }

    /// Pole order at t = 1 of the reduced univariate function.
    pub fn pole_order_at_one(&self) -> usize {
        let (num, den) = self.reduced_fraction();
        if num.is_zero() {
            return 0;
        }
        den.order_at_one()
    }

    /// Canonical univariate form: reduced fraction with the denominator
    /// re-factored into `(1 - t^e)` pieces, largest exponents first.
    pub fn canonical_univariate(num: UniPoly, den: UniPoly) -> RationalSeries {
        let (num, den) = reduce_fraction(num, den);
        let (num, exps, rest) = refactor_denominator(num, den);
        let mut p = Polynomial::zero(1);
        for (i, c) in num.0.iter().enumerate() {
            p.add_term(Monomial(vec![i as u16]), c.clone());
        }
        let mut s = RationalSeries {
            rank: 1,
            num: p,
            den: exps
                .into_iter()
                .map(|e| DegreeVector::single(e as i64))
                .collect(),
            den_rest: rest,
        };
        s.den.sort();
        s
    }

    /// Plain-text form, e.g. `(t0^2) / (1-t0)^3 (1-t0^2)`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = match self.rank {
            1 => vec!["t0".into()],
            2 => vec!["t0".into(), "t1".into()],
            r => (0..r).map(|i| format!("t{}", i)).collect(),
        };
        let num = self.num.display(&names, &MonomialOrder::DegRevLex);
        if self.den.is_empty() && self.den_rest.0.len() <= 1 {
            return num;
        }
        let mut factors: Vec<String> = Vec::new();
        let mut counted: Vec<(DegreeVector, usize)> = Vec::new();
        for d in &self.den {
            match counted.iter_mut().find(|(dd, _)| dd == d) {
                Some((_, k)) => *k += 1,
                None => counted.push((d.clone(), 1)),
            }
        }
        for (d, k) in counted {
            let mono = d
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            let f = format!("(1-{})", mono);
            if k == 1 {
                factors.push(f);
            } else {
                factors.push(format!("{}^{}", f, k));
            }
        }
        if self.den_rest.0.len() > 1 {
            let rest: Vec<String> = self
                .den_rest
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| match i {
                    0 => format_q(c),
                    _ => {
                        let t = if i == 1 {
                            names[0].clone()
                        } else {
                            format!("{}^{}", names[0], i)
                        };
                        if c.is_one() {
                            t
                        } else {
                            format!("{}*{}", format_q(c), t)
                        }
                    }
                })
                .collect();
            factors.push(format!("({})", rest.join(" + ")).replace("+ -", "- "));
        }
        format!("({}) / {}", num, factors.join(" "))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names: Vec<String> = (0..self.rank).map(|i| format!("t{}", i)).collect();
        let terms: Vec<serde_json::Value> = self
            .num
            .sorted_terms(&MonomialOrder::DegRevLex)
            .into_iter()
            .map(|(m, c)| {
                serde_json::json!({
                    "coefficient": format_q(&c),
                    "exponents": m.0,
                })
            })
            .collect();
        let den: Vec<Vec<i64>> = self.den.iter().map(|d| d.0.clone()).collect();
        let mut v = serde_json::json!({
            "variables": names,
            "numerator": terms,
            "denominator_factors": den,
        });
        if self.den_rest.0.len() > 1 {
            v["denominator_rest"] = serde_json::Value::Array(
                self.den_rest.0.iter().map(|c| format_q(c).into()).collect(),
            );
        }
        v
    }
}

fn q_to_int(c: &Q) -> Result<Z> {
    if c.denom().is_one() {
        Ok(c.numer().clone())
    } else {
        Err(Error::Other(format!("non-integer series coefficient {}", c)))
    }
}

/// The polynomial `1 - t^delta`.
pub fn one_minus_t(rank: usize, delta: &DegreeVector) -> Polynomial {
    let mut p = Polynomial::one(rank);
    let expo: Vec<u16> = delta.0.iter().map(|&d| d as u16).collect();
    p.add_term(Monomial(expo), -Q::one());
    p
}

pub fn reduce_fraction(num: UniPoly, den: UniPoly) -> (UniPoly, UniPoly) {
    assert!(!den.is_zero());
    if num.is_zero() {
        return (UniPoly::zero(), UniPoly::one());
    }
    let g = num.gcd(&den);
    let mut n = num.div_exact(&g).unwrap();
    let mut d = den.div_exact(&g).unwrap();
    // normalize den(0) = 1
    let c0 = d.coeff(0);
    if c0.is_zero() {
        // denominator divisible by t means the series is not a power series;
        // normalize by leading coefficient instead
        let lead = d.0.last().unwrap().recip();
        d = d.scale(&lead);
        n = n.scale(&lead);
    } else {
        let inv = c0.recip();
        d = d.scale(&inv);
        n = n.scale(&inv);
    }
    (n, d)
}

/// Rewrite `num/den` with denominator a product of `(1 - t^e)` factors,
/// greedily splitting off the largest exact factors and completing stray
/// cyclotomic parts by multiplying them up into the numerator. Any part that
/// resists (roots that are not roots of unity) stays in the returned rest.
fn refactor_denominator(num: UniPoly, den: UniPoly) -> (UniPoly, Vec<usize>, UniPoly) {
    let mut num = num;
    let mut den = den;
    let mut exps: Vec<usize> = Vec::new();
    'outer: loop {
        if den.degree() == 0 {
            let c = den.coeff(0);
            if !c.is_one() {
                let inv = c.recip();
                num = num.scale(&inv);
            }
            return (num, exps, UniPoly::one());
        }
        for e in (1..=den.degree()).rev() {
            let f = UniPoly::one_minus_power(e);
            if let Some(q) = den.div_exact(&f) {
                exps.push(e);
                den = q;
                continue 'outer;
            }
        }
        // Complete a cyclotomic remainder: with g = gcd(den, 1-t^e) nontrivial,
        // num/den = num*((1-t^e)/g) / ((den/g)*(1-t^e)).
        const PERIOD_BOUND: usize = 400;
        let mut completed = false;
        for e in 1..=PERIOD_BOUND {
            let f = UniPoly::one_minus_power(e);
            let g = den.gcd(&f);
            if g.degree() >= 1 {
                num = num.mul(&f.div_exact(&g).unwrap());
                den = den.div_exact(&g).unwrap();
                exps.push(e);
                completed = true;
                break;
            }
        }
        if !completed {
            return (num, exps, den);
        }
    }
}

/// Hilbert series of the presented quotient `ring / (relations)` under the
/// ring's own grading.
pub fn hilbert_series(ring: &GradedRing) -> Result<RationalSeries> {
    hilbert_series_of_quotient(&Ideal::zero(ring.clone()))
}

/// Hilbert series of `R / I` (with the ring relations adjoined to `I`).
pub fn hilbert_series_of_quotient(ideal: &Ideal) -> Result<RationalSeries> {
    let ring = ideal.ring();
    for g in ideal.generators().iter().chain(ring.relations()) {
        if !g.is_homogeneous(ring.degrees()) {
            return Err(Error::Inhomogeneous);
        }
    }
    let rank = ring.grading_rank();
    let gb = ideal.groebner_basis(&MonomialOrder::DegRevLex);
    let order = MonomialOrder::DegRevLex;
    let leads: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_term(&order).unwrap().0.clone())
        .collect();
    let num = monomial_numerator(&leads, ring.degrees(), rank);
    let den: Vec<DegreeVector> = ring.degrees().to_vec();
    Ok(RationalSeries::new(rank, num, den))
}

/// Numerator `N(t)` of the Hilbert series of `k[X]/M` for a monomial ideal,
/// over the common denominator `prod_vars (1 - t^deg)`; computed by the pivot
/// recursion `N(M) = N(M + (x)) + t^deg(x) N(M : x)`.
pub fn monomial_numerator(
    gens: &[Monomial],
    grading: &[DegreeVector],
    rank: usize,
) -> Polynomial {
    let mut min = minimalize_monomials(gens.to_vec());
    min.sort();
    numerator_rec(&min, grading, rank)
}

fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn t_power(m: &Monomial, grading: &[DegreeVector], rank: usize) -> Polynomial {
    let d = m.multidegree(grading);
    debug_assert_eq!(d.rank(), rank);
    debug_assert!(d.0.iter().all(|&x| x >= 0));
    Polynomial::from_term(Monomial(d.0.iter().map(|&x| x as u16).collect()), Q::one())
}

fn numerator_rec(gens: &[Monomial], grading: &[DegreeVector], rank: usize) -> Polynomial {
    if gens.is_empty() {
        return Polynomial::one(rank);
    }
    if gens.iter().any(|m| m.is_one()) {
        return Polynomial::zero(rank);
    }
    if gens.len() == 1 {
        return Polynomial::one(rank).sub(&t_power(&gens[0], grading, rank));
    }
    // Split into support-connected components; the numerator is multiplicative.
    let comps = support_components(gens);
    if comps.len() > 1 {
        let mut acc = Polynomial::one(rank);
        for comp in comps {
            acc = acc.mul(&numerator_rec(&comp, grading, rank));
        }
        return acc;
    }
    // Pivot on the most frequent variable.
    let nvars = gens[0].nvars();
    let mut count = vec![0usize; nvars];
    for g in gens {
        for i in g.support() {
            count[i] += 1;
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| count[i]).unwrap();

    // M + (x): generators not involving x, together with x itself.
    let without: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.0[pivot] == 0)
        .cloned()
        .collect();
    let x_deg = t_power(&Monomial::var(nvars, pivot), grading, rank);
    let plus = Polynomial::one(rank)
        .sub(&x_deg)
        .mul(&numerator_rec(&without, grading, rank));

    // M : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut e = g.0.clone();
            if e[pivot] > 0 {
                e[pivot] -= 1;
            }
            Monomial(e)
        })
        .collect();
    let colon_min = minimalize_monomials(colon);
    let shifted = x_deg.mul(&numerator_rec(&colon_min, grading, rank));
    plus.add(&shifted)
}

fn support_components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let n = gens.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !gens[i].is_coprime(&gens[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::HashMap<usize, Vec<Monomial>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(gens[i].clone());
    }
    let mut out: Vec<Vec<Monomial>> = groups.into_values().collect();
    out.sort();
    out
}

/// Hilbert-Samuel multiplicity `e(R)` of a standard graded quotient:
/// with `H_R = N(t)/(1-t)^dim`, this is `N(1)`.
pub fn multiplicity(ring: &GradedRing) -> Result<i64> {
    if !ring.is_standard_graded() {
        return Err(Error::NotStandardGraded);
    }
    let h = hilbert_series(ring)?;
    let (num, den) = h.reduced_fraction();
    let d = ideal_ops::krull_dim_ring(ring);
    let pole = den.order_at_one();
    if pole != d {
        return Err(Error::Other(format!(
            "pole order {} does not match dimension {}",
            pole, d
        )));
    }
    let unit = den
        .div_exact(&power_of_one_minus_t(pole))
        .expect("pole order divides");
    let val = num.eval_one() / unit.eval_one();
    let z = q_to_int(&val)?;
    i64::try_from(&z).map_err(|_| Error::Other("multiplicity overflow".into()))
}

fn power_of_one_minus_t(k: usize) -> UniPoly {
    let mut p = UniPoly::one();
    for _ in 0..k {
        p = p.mul(&UniPoly::one_minus_power(1));
    }
    p
}

/// Difference `a - b` of two bigraded series, with every pure-`t1` denominator
/// factor cancelled by exact division and then `t1 := 1` substituted.
/// Fails with [`Error::PoleAtOne`] when a pure factor does not divide out.
pub fn bigraded_difference_specialized(
    a: &RationalSeries,
    b: &RationalSeries,
) -> Result<RationalSeries> {
    assert_eq!(a.rank, 2);
    assert_eq!(b.rank, 2);
    // Common denominator: multiset max.
    let mut common = a.den.clone();
    for d in &b.den {
        let have = common.iter().filter(|x| *x == d).count();
        let need = b.den.iter().filter(|x| *x == d).count();
        for _ in have..need {
            common.push(d.clone());
        }
    }
    common.sort();
    let extra_factors = |own: &[DegreeVector]| -> Polynomial {
        let mut missing = common.clone();
        for d in own {
            if let Some(pos) = missing.iter().position(|x| x == d) {
                missing.remove(pos);
            }
        }
        let mut p = Polynomial::one(2);
        for d in &missing {
            p = p.mul(&one_minus_t(2, d));
        }
        p
    };
    let mut numerator = a
        .num
        .mul(&extra_factors(&a.den))
        .sub(&b.num.mul(&extra_factors(&b.den)));

    let order = MonomialOrder::DegRevLex;
    let mut t0_factors: Vec<usize> = Vec::new();
    for d in &common {
        if d.0[0] == 0 {
            // pure t1 factor: must divide the numerator exactly
            let f = one_minus_t(2, d);
            numerator = numerator.divide_exact(&f, &order).ok_or(Error::PoleAtOne)?;
        } else {
            t0_factors.push(d.0[0] as usize);
        }
    }
    // substitute t1 = 1
    let mut uni = UniPoly::zero();
    for (m, c) in numerator.terms() {
        let v = m.0[0] as usize;
        let mut coeffs = vec![Q::zero(); v + 1];
        coeffs[v] = c.clone();
        uni = uni.add(&UniPoly::from_coeffs(coeffs));
    }
    let mut den = UniPoly::one();
    for &e in &t0_factors {
        den = den.mul(&UniPoly::one_minus_power(e));
    }
    Ok(RationalSeries::canonical_univariate(uni, den))
}

/// Brute-force count of standard monomials (test oracle): monomials of the
/// given degree not divisible by any lead monomial.
pub fn count_standard_monomials(
    ring: &GradedRing,
    leads: &[Monomial],
    degree: &DegreeVector,
) -> usize {
    assert_eq!(ring.grading_rank(), degree.rank());
    // enumerate all monomials with the given multidegree (rank 1 or 2)
    let n = ring.nvars();
    let degs = ring.degrees();
    assert!(
        degs.iter().all(|d| d.0.iter().any(|&x| x > 0)),
        "every variable needs a positive degree component"
    );
    let mut count = 0usize;
    let mut exps = vec![0u16; n];
    fn rec(
        i: usize,
        remaining: &DegreeVector,
        degs: &[DegreeVector],
        exps: &mut Vec<u16>,
        leads: &[Monomial],
        count: &mut usize,
    ) {
        if i == degs.len() {
            if remaining.0.iter().all(|&r| r == 0) {
                let m = Monomial(exps.clone());
                if !leads.iter().any(|l| l.divides(&m)) {
                    *count += 1;
                }
            }
            return;
        }
        let mut e: u16 = 0;
        loop {
            let used: Vec<i64> = degs[i].0.iter().map(|&d| d * e as i64).collect();
            if used.iter().zip(&remaining.0).any(|(u, r)| u > r) {
                break;
            }
            exps[i] = e;
            let rem2 = DegreeVector(
                remaining
                    .0
                    .iter()
                    .zip(&used)
                    .map(|(r, u)| r - u)
                    .collect(),
            );
            rec(i + 1, &rem2, degs, exps, leads, count);
            exps[i] = 0;
            e += 1;
        }
    }
    rec(0, degree, degs, &mut exps, leads, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    #[test]
    fn free_algebra_series() {
        let r = GradedRing::standard(&["x", "y"]);
        let h = hilbert_series(&r).unwrap();
        // 1/(1-t)^2: coefficient n+1
        for n in 0..6 {
            assert_eq!(
                h.coefficient(&DegreeVector::single(n)).unwrap(),
                Z::from(n + 1)
            );
        }
        let w = GradedRing::weighted(&["x", "y", "z"], &[3, 4, 5]);
        let hw = hilbert_series(&w).unwrap();
        assert_eq!(hw.den.len(), 3);
        assert!(hw.num.is_zero() == false);
        // dimension in degree 12: x^4, xyz? 3+4+5=12 yes, y^3
        assert_eq!(hw.coefficient(&DegreeVector::single(12)).unwrap(), Z::from(3));
    }

    #[test]
    fn complete_intersection_series() {
        // k[X,Y,Z,W]/(Y^2 W - X^3, Z^2 W^4 - X^5 Y): H = (1-t^3)(1-t^6)/(1-t)^4.
        let r0 = GradedRing::standard(&["x", "y", "z", "w"]);
        let (x, y, z, w) = (r0.var(0), r0.var(1), r0.var(2), r0.var(3));
        let f = y.pow(2).mul(&w).sub(&x.pow(3));
        let g = z.pow(2).mul(&w.pow(4)).sub(&x.pow(5).mul(&y));
        let r = r0.with_relations(vec![f, g]);
        let h = hilbert_series(&r).unwrap();

        let expect_num = one_minus_t(1, &DegreeVector::single(3))
            .mul(&one_minus_t(1, &DegreeVector::single(6)));
        let expect = RationalSeries::new(
            1,
            expect_num,
            vec![DegreeVector::single(1); 4],
        );
        assert!(h.equals_function(&expect));
        // dim R_1 = 4
        assert_eq!(h.coefficient(&DegreeVector::single(1)).unwrap(), Z::from(4));
        assert_eq!(multiplicity(&r).unwrap(), 18);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&GradedRing::standard(&["x", "y"])).unwrap(), 1);
        let r0 = GradedRing::standard(&["x", "y", "z"]);
        let (x, y, z) = (r0.var(0), r0.var(1), r0.var(2));
        let fermat = r0.with_relations(vec![x.pow(3).add(&y.pow(3)).add(&z.pow(3))]);
        assert_eq!(multiplicity(&fermat).unwrap(), 3);
    }

    #[test]
    fn series_coefficients_match_standard_monomial_counts() {
        let r0 = GradedRing::standard(&["x", "y", "z"]);
        let (x, y, z) = (r0.var(0), r0.var(1), r0.var(2));
        let ideal = Ideal::new(
            r0.clone(),
            vec![x.mul(&y), y.pow(2).mul(&z)],
        );
        let h = hilbert_series_of_quotient(&ideal).unwrap();
        let gb = ideal.groebner_basis(&MonomialOrder::DegRevLex);
        let leads: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_term(&MonomialOrder::DegRevLex).unwrap().0.clone())
            .collect();
        for n in 0..=8 {
            let d = DegreeVector::single(n);
            let count = count_standard_monomials(&r0, &leads, &d);
            assert_eq!(h.coefficient(&d).unwrap(), Z::from(count as i64));
        }
    }

    #[test]
    fn pole_order_equals_dimension() {
        let r0 = GradedRing::standard(&["x", "y", "z"]);
        let (x, y, _z) = (r0.var(0), r0.var(1), r0.var(2));
        let i = Ideal::new(r0.clone(), vec![x.mul(&y)]);
        let h = hilbert_series_of_quotient(&i).unwrap();
        assert_eq!(h.pole_order_at_one(), ideal_ops::krull_dim(&i));
    }

    #[test]
    fn canonical_univariate_matches_displayed_shapes() {
        // t^2 / ((1-t)^4 (1+t)) == t^2 / ((1-t)^3 (1-t^2))
        let num = UniPoly::from_coeffs(vec![q_int(0), q_int(0), q_int(1)]);
        let mut den = UniPoly::one();
        for _ in 0..4 {
            den = den.mul(&UniPoly::one_minus_power(1));
        }
        den = den.mul(&UniPoly::from_coeffs(vec![q_int(1), q_int(1)]));
        let s = RationalSeries::canonical_univariate(num, den);
        assert!(s.den_rest.0.len() <= 1, "denominator resolves into (1-t^e) factors");
        let mut exps: Vec<i64> = s.den.iter().map(|d| d.0[0]).collect();
        exps.sort();
        assert_eq!(exps, vec![1, 1, 1, 2]);
        assert_eq!(s.pole_order_at_one(), 4);
    }

    #[test]
    fn bigraded_specialization_of_rees_difference() {
        // Saturated Rees vs Rees of m in k[x,y]: sum lambda(R/m^v) t0^v = t0/(1-t0)^3.
        // H_S = 1/((1-t1)^2 (1-t0)), H_R = (1 - t0 t1^2)/((1-t1)^2 (1-t0 t1)^2).
        let one = Polynomial::one(2);
        let hs = RationalSeries::new(
            2,
            one.clone(),
            vec![
                DegreeVector::pair(0, 1),
                DegreeVector::pair(0, 1),
                DegreeVector::pair(1, 0),
            ],
        );
        let hr_num = one.clone().sub(&Polynomial::from_term(
            Monomial(vec![1, 2]),
            Q::one(),
        ));
        let hr = RationalSeries::new(
            2,
            hr_num,
            vec![
                DegreeVector::pair(0, 1),
                DegreeVector::pair(0, 1),
                DegreeVector::pair(1, 1),
                DegreeVector::pair(1, 1),
            ],
        );
        let diff = bigraded_difference_specialized(&hs, &hr).unwrap();
        // expect t0/(1-t0)^3: coefficients v(v+1)/2
        for v in 0..7i64 {
            assert_eq!(
                diff.coefficient(&DegreeVector::single(v)).unwrap(),
                Z::from(v * (v + 1) / 2)
            );
        }
        assert_eq!(diff.pole_order_at_one(), 3);
    }
}
