//! Dense univariate polynomials over QQ, used for series denominators,
//! partial-fraction work and quotient Hilbert series in one variable.

use num_traits::{One, Zero};

use crate::poly::Q;

/// Coefficients ascending by degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly(pub Vec<Q>);

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly(vec![])
    }

    pub fn one() -> Self {
        UniPoly(vec![Q::one()])
    }

    pub fn constant(c: Q) -> Self {
        let mut p = UniPoly(vec![c]);
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<Q>) -> Self {
        let mut p = UniPoly(c);
        p.trim();
        p
    }

    /// `1 - t^e`
    pub fn one_minus_power(e: usize) -> Self {
        let mut c = vec![Q::zero(); e + 1];
        c[0] = Q::one();
        c[e] = -Q::one();
        UniPoly(c)
    }

    /// `1 + t + ... + t^(e-1)`
    pub fn cyclotomic_sum(e: usize) -> Self {
        UniPoly(vec![Q::one(); e])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.0.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_one(&self) -> Q {
        self.0.iter().fold(Q::zero(), |a, c| a + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let mut c = vec![Q::zero(); n];
        for (i, v) in self.0.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.0.iter().enumerate() {
            c[i] += v;
        }
        UniPoly::from_coeffs(c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let mut c = vec![Q::zero(); n];
        for (i, v) in self.0.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.0.iter().enumerate() {
            c[i] -= v;
        }
        UniPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(c)
    }

    pub fn scale(&self, k: &Q) -> UniPoly {
        UniPoly::from_coeffs(self.0.iter().map(|c| c * k).collect())
    }

    /// Multiply by `t^e`.
    pub fn shift_up(&self, e: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Q::zero(); e];
        c.extend(self.0.iter().cloned());
        UniPoly(c)
    }

    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero");
        let mut rem = self.0.clone();
        let dn = d.0.len();
        if rem.len() < dn {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dn + 1];
        let lead = d.0.last().unwrap().clone();
        for i in (0..quot.len()).rev() {
            let top = rem[i + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &lead;
            quot[i] = q.clone();
            for (j, dc) in d.0.iter().enumerate() {
                let delta = dc * &q;
                rem[i + j] -= delta;
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            // normalize monic
            let inv = a.0.last().unwrap().recip();
            a.scale(&inv)
        }
    }

    /// Multiplicity of the root t = 1.
    pub fn order_at_one(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UniPoly::one_minus_power(1);
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Power series expansion of `self / den` to `order` coefficients
    /// (`den(0)` must be nonzero).
    pub fn series_div(&self, den: &UniPoly, order: usize) -> Vec<Q> {
        assert!(!den.coeff(0).is_zero(), "denominator must be a unit at 0");
        let inv0 = den.coeff(0).recip();
        let mut out = vec![Q::zero(); order];
        for n in 0..order {
            let mut acc = self.coeff(n);
            for k in 1..=n.min(den.degree()) {
                let d = den.coeff(k);
                if !d.is_zero() {
                    acc -= d * &out[n - k];
                }
            }
            out[n] = acc * &inv0;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    #[test]
    fn division_and_gcd() {
        // (1-t)^2 (1+t) and (1-t)(1+t): gcd (1-t)(1+t) up to scale
        let a = UniPoly::one_minus_power(1)
            .mul(&UniPoly::one_minus_power(1))
            .mul(&UniPoly::from_coeffs(vec![q_int(1), q_int(1)]));
        let b = UniPoly::one_minus_power(2);
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 2);
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn order_at_one() {
        let p = UniPoly::one_minus_power(3); // (1-t)(1+t+t^2)
        assert_eq!(p.order_at_one(), 1);
        let q = p.mul(&UniPoly::one_minus_power(1));
        assert_eq!(q.order_at_one(), 2);
    }

    #[test]
    fn series_expansion() {
        // 1/(1-t)^2 -> n+1
        let den = UniPoly::one_minus_power(1).mul(&UniPoly::one_minus_power(1));
        let c = UniPoly::one().series_div(&den, 6);
        for (n, v) in c.iter().enumerate() {
            assert_eq!(v, &q_int(n as i64 + 1));
        }
    }
}
