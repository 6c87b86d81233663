//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! - [`Monomial`]: exponent vector, positional variable identity
//! - [`MonomialOrder`]: lex, degrevlex, weighted degrevlex and block (elimination) orders
//! - [`DegreeVector`]: multidegree with respect to a grading of rank g
//! - [`Polynomial`]: term map `Monomial -> Q`, no zero coefficients stored
//!
//! Term storage is order-agnostic; a `MonomialOrder` is applied at comparison
//! and serialization time, so one polynomial value can be used under several
//! orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient type used throughout.
pub type Q = BigRational;
/// Exact integer type.
pub type Z = BigInt;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(Z::from(num), Z::from(den))
}

/// A monomial as a vector of non-negative exponents, one per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    /// Exact division; `None` if some exponent of `other` exceeds `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|&e| e * k as u16).collect())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Multidegree of this monomial under a per-variable grading.
    pub fn multidegree(&self, grading: &[DegreeVector]) -> DegreeVector {
        let rank = grading.first().map_or(0, |d| d.0.len());
        let mut out = DegreeVector::zero(rank);
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                for (o, g) in out.0.iter_mut().zip(&grading[i].0) {
                    *o += e as i64 * g;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.0)
    }
}

/// Element of ZZ^g recording a multidegree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(rank: usize) -> Self {
        DegreeVector(vec![0; rank])
    }

    pub fn single(d: i64) -> Self {
        DegreeVector(vec![d])
    }

    pub fn pair(a: i64, b: i64) -> Self {
        DegreeVector(vec![a, b])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg{:?}", self.0)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, d) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", d)?;
            }
            write!(f, ")")
        }
    }
}

/// A total order on monomials of a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degrevlex refined by a strictly positive weight vector.
    WeightedDegRevLex(Vec<i64>),
    /// Block order eliminating the first `k` variables: compares the first
    /// block under `outer`, ties broken on the remaining variables by `inner`.
    Block {
        k: usize,
        outer: Box<MonomialOrder>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order eliminating the first `k` variables, degrevlex inside both blocks.
    pub fn elim_first(k: usize) -> MonomialOrder {
        MonomialOrder::Block {
            k,
            outer: Box::new(MonomialOrder::DegRevLex),
            inner: Box::new(MonomialOrder::DegRevLex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(&a.0, &b.0)
    }

    fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => revlex_tie(a, b),
                    ord => ord,
                }
            }
            MonomialOrder::WeightedDegRevLex(w) => {
                let da: i64 = a.iter().zip(w).map(|(&e, &w)| e as i64 * w).sum();
                let db: i64 = b.iter().zip(w).map(|(&e, &w)| e as i64 * w).sum();
                match da.cmp(&db) {
                    Ordering::Equal => revlex_tie(a, b),
                    ord => ord,
                }
            }
            MonomialOrder::Block { k, outer, inner } => {
                match outer.cmp_slices(&a[..*k], &b[..*k]) {
                    Ordering::Equal => inner.cmp_slices(&a[*k..], &b[*k..]),
                    ord => ord,
                }
            }
        }
    }
}

/// Compare by the reverse-lexicographic tie-break: the monomial whose last
/// differing exponent is smaller is the larger one.
fn revlex_tie(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Sparse polynomial over Q. Invariant: no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        Polynomial::from_term(Monomial::var(nvars, idx), Q::one())
    }

    pub fn from_term(m: Monomial, c: Q) -> Self {
        let nvars = m.nvars();
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m0, c0)| (m0.mul(m), c0 * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Q)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Q)> {
        let mut v: Vec<(Monomial, Q)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }

    /// Divide all coefficients so the leading coefficient becomes 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scalar_mul(&inv)
            }
        }
    }

    /// Clear denominators and divide by the integer content; sign chosen so
    /// the leading coefficient under `order` is positive.
    pub fn primitive_integer(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = Z::one();
        for c in self.terms.values() {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = Z::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_integer::gcd(num_gcd, scaled);
        }
        let scale = Q::new(den_lcm, num_gcd);
        let out = self.scalar_mul(&scale);
        let (_, lc) = out.leading_term(order).unwrap();
        if lc.is_negative() {
            out.neg()
        } else {
            out
        }
    }

    /// The common multidegree of all terms under `grading`.
    pub fn multidegree(&self, grading: &[DegreeVector]) -> Result<DegreeVector, DegreeError> {
        let mut iter = self.terms.keys();
        let first = iter.next().ok_or(DegreeError::ZeroPolynomial)?;
        let deg = first.multidegree(grading);
        for m in iter {
            if m.multidegree(grading) != deg {
                return Err(DegreeError::Inhomogeneous);
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self, grading: &[DegreeVector]) -> bool {
        self.is_zero() || self.multidegree(grading).is_ok()
    }

    /// Total degree (maximum over terms).
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Substitute polynomials for each variable (images indexed by variable).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let out_vars = images
            .first()
            .map_or(0, |p| p.nvars());
        let mut out = Polynomial::zero(out_vars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(out_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as u32));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Reinterpret in a ring with `extra` new trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        let nvars = self.nvars + extra;
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.extend(std::iter::repeat(0).take(extra));
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Permute variables: new exponent `i` comes from old position `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        Polynomial {
            nvars: perm.len(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let e = perm.iter().map(|&j| m.0[j]).collect();
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Keep only the first `n` variables; requires all terms free of the rest.
    pub fn restrict_vars(&self, n: usize) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[n..].iter().any(|&e| e > 0) {
                return None;
            }
            terms.insert(Monomial(m.0[..n].to_vec()), c.clone());
        }
        Some(Polynomial { nvars: n, terms })
    }

    /// Attempt exact division by `d`; returns `None` when not divisible.
    pub fn divide_exact(&self, d: &Polynomial, order: &MonomialOrder) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let d_terms = d.sorted_terms(order);
        let (dm, dc) = &d_terms[0];
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((lm, lc)) = rem.leading_term(order) {
            let qm = lm.checked_div(dm)?;
            let qc = lc / dc;
            quot.add_term(qm.clone(), qc.clone());
            let piece = d.mul_term(&qm, &qc);
            rem = rem.sub(&piece);
        }
        Some(quot)
    }

    /// Render with the given variable names, terms descending under `order`.
    pub fn display(&self, names: &[String], order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_q(&abs));
            }
            for (j, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names[j].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[j], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Render a rational as `p` or `p/q`.
pub fn format_q(c: &Q) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}*{:?}", format_q(c), m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("polynomial is zero; multidegree undefined")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous under the given grading")]
    Inhomogeneous,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_vars() -> (Polynomial, Polynomial) {
        (Polynomial::var(2, 0), Polynomial::var(2, 1))
    }

    #[test]
    fn product_of_sum_and_difference() {
        let (x, y) = xy_vars();
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiply_by_zero_gives_empty_term_map() {
        let (x, y) = xy_vars();
        let f = x.add(&y.scalar_mul(&q_int(3)));
        let z = f.mul(&Polynomial::zero(2));
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn cube_of_binomial_expands_by_binomial_theorem() {
        // (x+y)^3 = x^3 + 3x^2y + 3xy^2 + y^3, coefficients from Pascal row 3.
        let (x, y) = xy_vars();
        let cube = x.add(&y).pow(3);
        let mut expected = Polynomial::zero(2);
        expected.add_term(Monomial(vec![3, 0]), q_int(1));
        expected.add_term(Monomial(vec![2, 1]), q_int(3));
        expected.add_term(Monomial(vec![1, 2]), q_int(3));
        expected.add_term(Monomial(vec![0, 3]), q_int(1));
        assert_eq!(cube, expected);
    }

    #[test]
    fn multidegree_standard_and_weighted() {
        let std_grading = vec![DegreeVector::single(1), DegreeVector::single(1)];
        let f = Polynomial::from_term(Monomial(vec![2, 1]), q_int(1));
        assert_eq!(f.multidegree(&std_grading).unwrap(), DegreeVector::single(3));

        // weights (3,4,5): x^3 - y*z is homogeneous of weight 9,
        // x^3*y - x*z^2 of weight 13; y^2*z - x^3 (13 vs 9) is not.
        let w = vec![
            DegreeVector::single(3),
            DegreeVector::single(4),
            DegreeVector::single(5),
        ];
        let mut g = Polynomial::zero(3);
        g.add_term(Monomial(vec![3, 0, 0]), q_int(1));
        g.add_term(Monomial(vec![0, 1, 1]), -q_int(1));
        assert_eq!(g.multidegree(&w).unwrap(), DegreeVector::single(9));
        let mut h = Polynomial::zero(3);
        h.add_term(Monomial(vec![3, 1, 0]), q_int(1));
        h.add_term(Monomial(vec![1, 0, 2]), -q_int(1));
        assert_eq!(h.multidegree(&w).unwrap(), DegreeVector::single(13));
        let mut bad = Polynomial::zero(3);
        bad.add_term(Monomial(vec![0, 2, 1]), q_int(1));
        bad.add_term(Monomial(vec![3, 0, 0]), -q_int(1));
        assert_eq!(bad.multidegree(&w), Err(DegreeError::Inhomogeneous));
    }

    #[test]
    fn multidegree_bigraded_generator() {
        // Y with bidegree (1,2) next to x,y,z of bidegree (0,1):
        // the term x*Y has bidegree (1,3).
        let grading = vec![
            DegreeVector::pair(0, 1),
            DegreeVector::pair(0, 1),
            DegreeVector::pair(0, 1),
            DegreeVector::pair(1, 2),
        ];
        let f = Polynomial::from_term(Monomial(vec![0, 0, 0, 1]), q_int(1));
        assert_eq!(f.multidegree(&grading).unwrap(), DegreeVector::pair(1, 2));
        let g = Polynomial::from_term(Monomial(vec![1, 0, 0, 1]), q_int(1));
        assert_eq!(g.multidegree(&grading).unwrap(), DegreeVector::pair(1, 3));
    }

    #[test]
    fn multidegree_errors() {
        let std_grading = vec![DegreeVector::single(1), DegreeVector::single(1)];
        let (x, y) = xy_vars();
        assert_eq!(
            Polynomial::zero(2).multidegree(&std_grading),
            Err(DegreeError::ZeroPolynomial)
        );
        assert_eq!(
            x.add(&y.mul(&y)).multidegree(&std_grading),
            Err(DegreeError::Inhomogeneous)
        );
    }

    #[test]
    fn monomial_cmp_examples() {
        let lex = MonomialOrder::Lex;
        let x = Monomial(vec![1, 0]);
        let y = Monomial(vec![0, 1]);
        assert_eq!(lex.cmp(&x, &y), Ordering::Greater);

        let drl = MonomialOrder::DegRevLex;
        let x2 = Monomial(vec![2, 0]);
        let xy = Monomial(vec![1, 1]);
        assert_eq!(drl.cmp(&x2, &xy), Ordering::Greater);
        assert_eq!(drl.cmp(&xy, &xy), Ordering::Equal);
    }

    #[test]
    fn order_compatible_with_multiplication() {
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::WeightedDegRevLex(vec![3, 4, 5]),
            MonomialOrder::elim_first(1),
        ];
        let monos: Vec<Monomial> = (0..3u16)
            .flat_map(|a| (0..3u16).flat_map(move |b| (0..3u16).map(move |c| Monomial(vec![a, b, c]))))
            .collect();
        for order in &orders {
            for a in &monos {
                for b in &monos {
                    let ord = order.cmp(a, b);
                    for m in &monos {
                        assert_eq!(order.cmp(&a.mul(m), &b.mul(m)), ord);
                    }
                }
            }
        }
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy_vars();
        let f = x.add(&y).mul(&x.sub(&y));
        let q = f.divide_exact(&x.add(&y), &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(q, x.sub(&y));
        assert!(f
            .divide_exact(&x.add(&Polynomial::one(2)), &MonomialOrder::DegRevLex)
            .is_none());
    }

    #[test]
    fn display_canonical_text() {
        let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        let mut f = Polynomial::zero(3);
        f.add_term(Monomial(vec![2, 1, 0]), q_int(3));
        f.add_term(Monomial(vec![0, 0, 3]), q_frac(-1, 2));
        assert_eq!(
            f.display(&names, &MonomialOrder::DegRevLex),
            "3*x^2*y - 1/2*z^3"
        );
    }
}
