//! Brute-force epsilon tables: `length(sat(I^v)/I^v)` computed power by
//! power through univariate Hilbert series only, independently of the
//! bigraded pipeline, so the two paths can act as witnesses for each other.

use num_traits::One;

use crate::error::{Error, Result};
use crate::hilbert;
use crate::ideal_ops::{self, SaturationMethod};
use crate::poly::Z;
use crate::ring::Ideal;

/// `(v, length(sat(I^v)/I^v))` for `v = 1..=v_max`. Every saturation is
/// computed from scratch; no graded parts are reused between powers.
pub fn epsilon_table(ideal: &Ideal, v_max: u32) -> Result<Vec<(u32, Z)>> {
    if v_max == 0 {
        return Err(Error::ZeroBound);
    }
    let mut out = Vec::with_capacity(v_max as usize);
    for v in 1..=v_max {
        let power = ideal.power(v);
        let sat = ideal_ops::saturate_with(&power, None, SaturationMethod::IteratedColon)?;
        out.push((v, quotient_length(&power, &sat)?));
    }
    Ok(out)
}

/// `length(big/small)` for nested homogeneous ideals via the difference of
/// the univariate Hilbert series of the two quotient rings.
pub fn quotient_length(small: &Ideal, big: &Ideal) -> Result<Z> {
    let h_small = hilbert::hilbert_series_of_quotient(small)?;
    let h_big = hilbert::hilbert_series_of_quotient(big)?;
    let (n_small, d_small) = h_small.reduced_fraction();
    let (n_big, d_big) = h_big.reduced_fraction();
    // H_small - H_big must be a polynomial when the lengths are finite.
    let num = n_small.mul(&d_big).sub(&n_big.mul(&d_small));
    let den = d_small.mul(&d_big);
    let diff = num.div_exact(&den).ok_or(Error::InfiniteLength)?;
    let total = diff.eval_one();
    if !total.denom().is_one() {
        return Err(Error::Other("length must be an integer".into()));
    }
    Ok(total.numer().clone())
}

/// Eventual linear form `a v + b` of a table: the least window on which the
/// successive differences stabilize.
pub fn fit_linear(table: &[(u32, Z)]) -> Result<(Z, Z)> {
    if table.len() < 3 {
        return Err(Error::NotYetStable);
    }
    let diffs: Vec<Z> = table
        .windows(2)
        .map(|w| &w[1].1 - &w[0].1)
        .collect();
    // need at least the last two differences equal
    let a = diffs.last().unwrap().clone();
    let mut start = diffs.len();
    while start > 0 && diffs[start - 1] == a {
        start -= 1;
    }
    if diffs.len() - start < 2 {
        return Err(Error::NotYetStable);
    }
    let (v, val) = &table[table.len() - 1];
    let b = val - &a * Z::from(*v);
    // consistency over the stable window
    for (v, val) in &table[start..] {
        if val != &(&a * Z::from(*v) + &b) {
            return Err(Error::NotYetStable);
        }
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradedRing;

    #[test]
    fn table_for_max_ideal_in_plane() {
        // sat(m^v) = R: length R/m^v = v(v+1)/2.
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let table = epsilon_table(&m, 5).unwrap();
        for (v, l) in table {
            assert_eq!(l, Z::from((v * (v + 1) / 2) as i64));
        }
    }

    #[test]
    fn face_ring_vertex_ideal_grows_linearly() {
        // R = k[x1,x2,x3]/(xi xj), P = (x2, x3): length = 2(v-1), fit (2, -2).
        let base = GradedRing::standard(&["x1", "x2", "x3"]);
        let (x1, x2, x3) = (base.var(0), base.var(1), base.var(2));
        let r = base.with_relations(vec![x1.mul(&x2), x1.mul(&x3), x2.mul(&x3)]);
        let p = Ideal::new(r.clone(), vec![r.var(1), r.var(2)]);
        let table = epsilon_table(&p, 8).unwrap();
        for (v, l) in &table {
            assert_eq!(*l, Z::from(2 * (*v as i64 - 1)), "v = {}", v);
        }
        let (a, b) = fit_linear(&table).unwrap();
        assert_eq!((a, b), (Z::from(2), Z::from(-2)));
    }

    #[test]
    fn principal_ideal_in_domain_has_zero_table() {
        let r = GradedRing::standard(&["x", "y"]);
        let f = r.var(0).pow(2).add(&r.var(1).pow(2));
        let i = Ideal::new(r.clone(), vec![f]);
        let table = epsilon_table(&i, 4).unwrap();
        for (_, l) in &table {
            assert_eq!(*l, Z::from(0));
        }
        let (a, b) = fit_linear(&table).unwrap();
        assert_eq!((a, b), (Z::from(0), Z::from(0)));
    }

    #[test]
    fn dim1_primary_table_is_linear() {
        // I = (x^2) in k[x]: sat = (1), length R/I^v = 2v -> (2, 0).
        let r = GradedRing::standard(&["x"]);
        let i = Ideal::new(r.clone(), vec![r.var(0).pow(2)]);
        let table = epsilon_table(&i, 5).unwrap();
        for (v, l) in &table {
            assert_eq!(*l, Z::from(2 * *v as i64));
        }
        assert_eq!(fit_linear(&table).unwrap(), (Z::from(2), Z::from(0)));
    }

    #[test]
    fn short_table_is_not_stable() {
        let table = vec![(1u32, Z::from(1)), (2, Z::from(4))];
        assert!(matches!(fit_linear(&table), Err(Error::NotYetStable)));
    }
}
