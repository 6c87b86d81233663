//! Presented graded rings and homogeneous ideals.
//!
//! A [`GradedRing`] is a polynomial ring `k[X]` over QQ together with a
//! ZZ^g-grading on the variables and a list of homogeneous relations, so it
//! presents the quotient `k[X]/(relations)`. An [`Ideal`] holds generators
//! lifted to the ambient polynomial ring and caches reduced Groebner bases of
//! (generators + relations) per monomial order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::poly::{DegreeVector, Monomial, MonomialOrder, Polynomial};

#[derive(Debug)]
struct RingData {
    names: Vec<String>,
    degrees: Vec<DegreeVector>,
    relations: Vec<Polynomial>,
    default_order: MonomialOrder,
    rank: usize,
}

/// A presented graded quotient algebra `QQ[X]/(relations)`.
#[derive(Clone)]
pub struct GradedRing {
    data: Arc<RingData>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.names == other.data.names
                && self.data.degrees == other.data.degrees
                && self.data.relations == other.data.relations)
    }
}
impl Eq for GradedRing {}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.data.names.join(","))?;
        if !self.data.relations.is_empty() {
            write!(f, "/({} relations)", self.data.relations.len())?;
        }
        Ok(())
    }
}

impl GradedRing {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<DegreeVector>,
        relations: Vec<Polynomial>,
        default_order: MonomialOrder,
    ) -> GradedRing {
        assert_eq!(names.len(), degrees.len());
        let rank = degrees.first().map_or(1, |d| d.rank());
        assert!(degrees.iter().all(|d| d.rank() == rank));
        for r in &relations {
            assert_eq!(r.nvars(), names.len(), "relation in wrong ring");
            assert!(
                r.is_homogeneous(&degrees),
                "ring relations must be homogeneous"
            );
        }
        GradedRing {
            data: Arc::new(RingData {
                names,
                degrees,
                relations,
                default_order,
                rank,
            }),
        }
    }

    /// Standard graded polynomial ring: every variable has degree 1.
    pub fn standard(names: &[&str]) -> GradedRing {
        GradedRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            names.iter().map(|_| DegreeVector::single(1)).collect(),
            vec![],
            MonomialOrder::DegRevLex,
        )
    }

    /// Weighted polynomial ring with single-graded weights.
    pub fn weighted(names: &[&str], weights: &[i64]) -> GradedRing {
        GradedRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            weights.iter().map(|&w| DegreeVector::single(w)).collect(),
            vec![],
            MonomialOrder::WeightedDegRevLex(weights.to_vec()),
        )
    }

    /// Same ring with additional relations adjoined.
    pub fn with_relations(&self, relations: Vec<Polynomial>) -> GradedRing {
        let mut rels = self.data.relations.clone();
        rels.extend(relations);
        GradedRing::new(
            self.data.names.clone(),
            self.data.degrees.clone(),
            rels,
            self.data.default_order.clone(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.data.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    pub fn degrees(&self) -> &[DegreeVector] {
        &self.data.degrees
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.data.relations
    }

    pub fn default_order(&self) -> &MonomialOrder {
        &self.data.default_order
    }

    pub fn grading_rank(&self) -> usize {
        self.data.rank
    }

    pub fn var(&self, idx: usize) -> Polynomial {
        Polynomial::var(self.nvars(), idx)
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Index of a variable by name.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.data.names.iter().position(|n| n == name)
    }

    /// First-component weights of the grading (the usual degrees in
    /// single-graded use).
    pub fn weights(&self) -> Vec<i64> {
        self.data.degrees.iter().map(|d| d.0[0]).collect()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.data.rank == 1 && self.data.degrees.iter().all(|d| d.0[0] == 1)
    }

    /// The irrelevant maximal ideal (all variables).
    pub fn max_ideal(&self) -> Ideal {
        Ideal::new(self.clone(), self.vars())
    }

    pub fn multidegree(&self, f: &Polynomial) -> Option<DegreeVector> {
        f.multidegree(self.degrees()).ok()
    }

    /// All monomials of the given single-graded weighted degree.
    pub fn monomials_of_weighted_degree(&self, deg: i64) -> Vec<Monomial> {
        let w = self.weights();
        let n = self.nvars();
        let mut out = Vec::new();
        let mut exps = vec![0u16; n];
        fn rec(i: usize, rem: i64, w: &[i64], exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if rem == 0 {
                    out.push(Monomial(exps.clone()));
                }
                return;
            }
            if i == w.len() - 1 {
                if rem >= 0 && rem % w[i] == 0 && rem / w[i] <= u16::MAX as i64 {
                    exps[i] = (rem / w[i]) as u16;
                    out.push(Monomial(exps.clone()));
                    exps[i] = 0;
                }
                return;
            }
            let mut e = 0i64;
            while e * w[i] <= rem {
                exps[i] = e as u16;
                rec(i + 1, rem - e * w[i], w, exps, out);
                e += 1;
            }
            exps[i] = 0;
        }
        if deg >= 0 {
            rec(0, deg, &w, &mut exps, &mut out);
        }
        out
    }
}

/// A homogeneous ideal in a graded quotient ring, with a per-order cache of
/// reduced Groebner bases of (generators + ring relations).
#[derive(Clone)]
pub struct Ideal {
    ring: GradedRing,
    gens: Vec<Polynomial>,
    cache: Arc<RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal({} gens in {:?})", self.gens.len(), self.ring)
    }
}

impl Ideal {
    pub fn new(ring: GradedRing, gens: Vec<Polynomial>) -> Ideal {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.nvars(), ring.nvars(), "generator in wrong ring");
            assert!(
                g.is_homogeneous(ring.degrees()),
                "ideal generators must be homogeneous"
            );
        }
        Ideal {
            ring,
            gens,
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn zero(ring: GradedRing) -> Ideal {
        Ideal::new(ring, vec![])
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators together with the ring relations (the lift to the ambient
    /// polynomial ring used by every Groebner computation).
    pub fn lifted_generators(&self) -> Vec<Polynomial> {
        let mut v = self.gens.clone();
        v.extend(self.ring.relations().iter().cloned());
        v
    }

    /// Reduced Groebner basis of (generators + relations) under `order`,
    /// computed once per order and shared.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(gb) = self.cache.read().unwrap().get(order) {
            return gb.clone();
        }
        let gb = Arc::new(crate::groebner::buchberger(&self.lifted_generators(), order));
        let mut w = self.cache.write().unwrap();
        w.entry(order.clone()).or_insert(gb).clone()
    }

    /// Pre-populate the basis cache with an externally computed reduced basis.
    pub(crate) fn with_cached_basis(ring: GradedRing, gens: Vec<Polynomial>, order: MonomialOrder, gb: Vec<Polynomial>) -> Ideal {
        let ideal = Ideal::new(ring, gens);
        ideal
            .cache
            .write()
            .unwrap()
            .insert(order, Arc::new(gb));
        ideal
    }

    pub fn default_basis(&self) -> Arc<Vec<Polynomial>> {
        self.groebner_basis(&self.ring.default_order().clone())
    }

    /// Normal form of `f` modulo this ideal (and the ring relations).
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let order = self.ring.default_order().clone();
        let gb = self.groebner_basis(&order);
        crate::groebner::normal_form(f, &gb, &order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Ideal equality through reduced-basis equality under the default order.
    pub fn equals(&self, other: &Ideal) -> bool {
        assert_eq!(self.ring, other.ring, "ideals in different rings");
        *self.default_basis() == *other.groebner_basis(self.ring.default_order())
    }

    /// Product ideal I*J (all pairwise generator products).
    pub fn product(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring);
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        dedup_generators(&mut gens);
        Ideal::new(self.ring.clone(), gens)
    }

    /// I^k with monomial-level deduplication of the generator products.
    pub fn power(&self, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::new(self.ring.clone(), vec![Polynomial::one(self.ring.nvars())]);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Sum ideal I + J.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        dedup_generators(&mut gens);
        Ideal::new(self.ring.clone(), gens)
    }

    /// Maximum single-graded degree among minimal generators.
    pub fn max_generator_degree(&self) -> i64 {
        self.gens
            .iter()
            .filter_map(|g| self.ring.multidegree(g))
            .map(|d| d.0[0])
            .max()
            .unwrap_or(0)
    }
}

fn dedup_generators(gens: &mut Vec<Polynomial>) {
    gens.sort_by(|a, b| {
        a.num_terms()
            .cmp(&b.num_terms())
            .then_with(|| format!("{:?}", a).cmp(&format!("{:?}", b)))
    });
    gens.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    #[test]
    fn ring_and_ideal_basics() {
        let r = GradedRing::standard(&["x", "y"]);
        assert!(r.is_standard_graded());
        let x = r.var(0);
        let y = r.var(1);
        let i = Ideal::new(r.clone(), vec![x.clone(), y.clone()]);
        assert_eq!(i.generators().len(), 2);
        assert!(i.contains(&x.mul(&y)));
        assert!(!i.contains(&Polynomial::one(2)));
    }

    #[test]
    fn power_of_ideal_dedups_products() {
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let m2 = m.power(2);
        // x^2, xy, y^2 with xy counted once
        assert_eq!(m2.generators().len(), 3);
    }

    #[test]
    fn monomials_of_weighted_degree() {
        let r = GradedRing::weighted(&["x", "y", "z"], &[3, 4, 5]);
        let ms = r.monomials_of_weighted_degree(12);
        // degree 12 = 3*4 (x^4) or 3+4+5 (xyz) or 4*3 (y^3)
        assert_eq!(ms.len(), 3);
        let r2 = GradedRing::standard(&["x", "y"]);
        assert_eq!(r2.monomials_of_weighted_degree(3).len(), 4);
    }

    #[test]
    fn homogeneity_enforced() {
        let r = GradedRing::standard(&["x", "y"]);
        let x = r.var(0);
        let bad = x.add(&Polynomial::constant(2, q_int(1)));
        let result = std::panic::catch_unwind(|| Ideal::new(r.clone(), vec![bad]));
        assert!(result.is_err());
    }
}
