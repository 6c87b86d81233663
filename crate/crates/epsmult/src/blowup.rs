//! Presentations of Rees algebras and saturated Rees algebras, truncation
//! ideals and Veronese pair inputs.
//!
//! A blowup algebra `R[It]` (or its saturation-by-degrees analogue) is
//! presented as a bigraded polynomial ring `k[X, Y]` modulo the kernel of
//! `Y -> f T^i`, with `deg X_t = (0, d_t)` and `deg Y = (i, deg f)`.

use crate::error::{Error, Result};
use crate::ideal_ops::{self, AlgebraMap, SaturationMethod};
use crate::linalg::RowSpace;
use crate::poly::{DegreeVector, Monomial, MonomialOrder, Polynomial, Q};
use crate::ring::{GradedRing, Ideal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationKind {
    Rees,
    SaturatedRees,
    Fiber,
}

/// A presented bigraded algebra: ambient ring, defining ideal and the algebra
/// generators it was built from (level i means the generator maps to `f T^i`).
#[derive(Clone, Debug)]
pub struct BigradedPresentation {
    pub ring: GradedRing,
    pub defining: Vec<Polynomial>,
    pub kind: PresentationKind,
    /// (t-degree, generator in the source ring)
    pub algebra_gens: Vec<(u32, Polynomial)>,
    pub source_ring: GradedRing,
    pub bound: u32,
    pub warnings: Vec<String>,
}

impl BigradedPresentation {
    /// Largest internal degree among the degree-one algebra generators (the
    /// classical `b_s` when this is a Rees presentation).
    pub fn max_gen_degree(&self) -> i64 {
        self.algebra_gens
            .iter()
            .map(|(_, f)| {
                self.source_ring
                    .multidegree(f)
                    .map(|d| d.0[0])
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Hilbert series of the presented quotient under its bigrading.
    pub fn hilbert_series(&self) -> Result<crate::hilbert::RationalSeries> {
        let ideal = Ideal::with_cached_basis(
            self.ring.clone(),
            self.defining.clone(),
            MonomialOrder::DegRevLex,
            self.defining.clone(),
        );
        crate::hilbert::hilbert_series_of_quotient(&ideal)
    }

    /// Substitute the algebra generators back: every defining generator must
    /// map to zero in `R[T]` modulo the ring relations.
    pub fn substitution_check(&self) -> bool {
        let src = &self.source_ring;
        let n = src.nvars();
        // target: R[T]
        let mut names: Vec<String> = src.names().to_vec();
        names.push(fresh_name(src, &["T", "tt", "T0"]));
        let mut degrees: Vec<DegreeVector> = src
            .degrees()
            .iter()
            .map(|d| DegreeVector::pair(0, d.0[0]))
            .collect();
        degrees.push(DegreeVector::pair(1, 0));
        let relations: Vec<Polynomial> = src
            .relations()
            .iter()
            .map(|r| r.extend_vars(1))
            .collect();
        let target = GradedRing::new(names, degrees, relations.clone(), MonomialOrder::DegRevLex);
        let t = target.var(n);
        let mut images: Vec<Polynomial> = (0..n).map(|i| target.var(i)).collect();
        for (lvl, f) in &self.algebra_gens {
            images.push(f.extend_vars(1).mul(&t.pow(*lvl)));
        }
        let rel_ideal = Ideal::new(target.clone(), relations);
        self.defining.iter().all(|g| {
            let image = g.substitute(&images);
            rel_ideal.normal_form(&image).is_zero()
        })
    }
}

fn fresh_name(ring: &GradedRing, candidates: &[&str]) -> String {
    for c in candidates {
        if ring.var_index(c).is_none() {
            return c.to_string();
        }
    }
    let mut i = 0;
    loop {
        let name = format!("aux{}", i);
        if ring.var_index(&name).is_none() {
            return name;
        }
        i += 1;
    }
}

/// Kernel presentation of a blowup algebra from explicit level/generator
/// pairs: `k[X, Y] -> R[T]`, `Y -> f T^level`.
fn blowup_presentation(
    base: &GradedRing,
    gens: &[(u32, Polynomial)],
    kind: PresentationKind,
    bound: u32,
) -> Result<BigradedPresentation> {
    let n = base.nvars();
    assert!(base.grading_rank() == 1, "base ring must be single graded");

    // Target R[T], bigraded.
    let t_name = fresh_name(base, &["T", "tt", "T0"]);
    let mut tgt_names: Vec<String> = base.names().to_vec();
    tgt_names.push(t_name);
    let mut tgt_degrees: Vec<DegreeVector> = base
        .degrees()
        .iter()
        .map(|d| DegreeVector::pair(0, d.0[0]))
        .collect();
    tgt_degrees.push(DegreeVector::pair(1, 0));
    let tgt_relations: Vec<Polynomial> = base
        .relations()
        .iter()
        .map(|r| r.extend_vars(1))
        .collect();
    let target = GradedRing::new(
        tgt_names,
        tgt_degrees,
        tgt_relations,
        MonomialOrder::DegRevLex,
    );
    let t = target.var(n);

    // Source k[X, Y..], bigraded.
    let mut src_names: Vec<String> = base.names().to_vec();
    let mut src_degrees: Vec<DegreeVector> = base
        .degrees()
        .iter()
        .map(|d| DegreeVector::pair(0, d.0[0]))
        .collect();
    let mut images: Vec<Polynomial> = (0..n).map(|i| target.var(i)).collect();
    for (k, (lvl, f)) in gens.iter().enumerate() {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let fdeg = f
            .multidegree(base.degrees())
            .map_err(|_| Error::Inhomogeneous)?;
        src_names.push(format!("Y{}_{}", lvl, k));
        src_degrees.push(DegreeVector::pair(*lvl as i64, fdeg.0[0]));
        images.push(f.extend_vars(1).mul(&t.pow(*lvl)));
    }
    let source = GradedRing::new(src_names, src_degrees, vec![], MonomialOrder::DegRevLex);
    let map = AlgebraMap::new(source.clone(), target, images)?;
    let kernel = ideal_ops::kernel_of_algebra_map(&map)?;
    Ok(BigradedPresentation {
        ring: source,
        defining: kernel.generators().to_vec(),
        kind,
        algebra_gens: gens.to_vec(),
        source_ring: base.clone(),
        bound,
        warnings: vec![],
    })
}

/// Rees algebra presentation: kernel of `Z_i -> g_i T` over the given
/// generators of `I`.
pub fn rees_presentation(ideal: &Ideal) -> Result<BigradedPresentation> {
    if ideal.is_zero_ideal() {
        return Err(Error::ZeroPolynomial);
    }
    let gens: Vec<(u32, Polynomial)> = ideal
        .generators()
        .iter()
        .map(|g| (1u32, g.clone()))
        .collect();
    blowup_presentation(ideal.ring(), &gens, PresentationKind::Rees, 1)
}

/// Options for the saturated Rees presentation.
#[derive(Clone, Copy, Debug)]
pub struct SaturatedReesOptions {
    /// Run the extra saturation of `I^(n+1)` and test membership in the
    /// algebra generated so far, recording a warning on failure.
    pub check_bound: bool,
}

impl Default for SaturatedReesOptions {
    fn default() -> Self {
        SaturatedReesOptions { check_bound: false }
    }
}

/// Presentation of the saturated Rees algebra from the saturations
/// `sat(I^i)`, `i = 1..n`, assuming the algebra is generated in t-degrees
/// at most `n` (the caller's warranty).
pub fn saturated_rees_presentation(
    ideal: &Ideal,
    n: u32,
    opts: SaturatedReesOptions,
) -> Result<BigradedPresentation> {
    if n == 0 {
        return Err(Error::ZeroBound);
    }
    let mut saturations: Vec<Ideal> = Vec::new();
    for i in 1..=n {
        let power = ideal.power(i);
        saturations.push(ideal_ops::saturate(&power, None)?);
    }
    saturated_rees_from_parts(ideal, &saturations, opts)
}

/// Same presentation with the graded parts supplied externally (useful when
/// the saturations are known in closed form, e.g. for determinantal ideals).
pub fn saturated_rees_with_supplied_parts(
    ideal: &Ideal,
    parts: &[Ideal],
    opts: SaturatedReesOptions,
) -> Result<BigradedPresentation> {
    if parts.is_empty() {
        return Err(Error::ZeroBound);
    }
    saturated_rees_from_parts(ideal, parts, opts)
}

fn saturated_rees_from_parts(
    ideal: &Ideal,
    parts: &[Ideal],
    opts: SaturatedReesOptions,
) -> Result<BigradedPresentation> {
    let base = ideal.ring().clone();
    let n = parts.len() as u32;
    let mut gens: Vec<(u32, Polynomial)> = Vec::new();
    for (idx, p) in parts.iter().enumerate() {
        let mins = if p.contains(&Polynomial::one(base.nvars())) {
            vec![Polynomial::one(base.nvars())]
        } else {
            ideal_ops::minimal_generators(p)
        };
        for f in mins {
            gens.push((idx as u32 + 1, f));
        }
    }
    let mut pres = blowup_presentation(&base, &gens, PresentationKind::SaturatedRees, n)?;
    if opts.check_bound {
        let next = ideal_ops::saturate(&ideal.power(n + 1), None)?;
        let mut algebra_piece: Option<Ideal> = None;
        for i in 1..=n {
            let j = n + 1 - i;
            if j < 1 || j > n {
                continue;
            }
            let prod = parts[(i - 1) as usize].product(&parts[(j - 1) as usize]);
            algebra_piece = Some(match algebra_piece {
                None => prod,
                Some(acc) => acc.sum(&prod),
            });
        }
        if let Some(piece) = algebra_piece {
            if !piece.contains_ideal(&next) {
                pres.warnings.push(format!(
                    "saturation of I^{} is not generated by the degree <= {} parts; \
                     the supplied generation bound looks too small",
                    n + 1,
                    n
                ));
            }
        }
    }
    Ok(pres)
}

/// Adjoin one degree-1 variable: `S = R[U]`, `J = I S`, and the maximal ideal
/// of `S`.
pub fn extend_ring(ring: &GradedRing, ideal: &Ideal) -> Result<(GradedRing, Ideal, Ideal)> {
    if !ring.is_standard_graded() {
        return Err(Error::NotStandardGraded);
    }
    assert_eq!(ideal.ring(), ring);
    let mut names = ring.names().to_vec();
    names.push(fresh_name(ring, &["U", "u", "U0"]));
    let mut degrees = ring.degrees().to_vec();
    degrees.push(DegreeVector::single(1));
    let relations: Vec<Polynomial> = ring.relations().iter().map(|r| r.extend_vars(1)).collect();
    let s = GradedRing::new(names, degrees, relations, ring.default_order().clone());
    let j = Ideal::new(
        s.clone(),
        ideal.generators().iter().map(|g| g.extend_vars(1)).collect(),
    );
    let n = s.max_ideal();
    Ok((s, j, n))
}

/// The ideal generated by the degree-`beta` graded piece of `J`, as an exact
/// vector-space basis on normal-form coordinates.
pub fn truncation_ideal(ideal: &Ideal, beta: i64) -> Result<Ideal> {
    let ring = ideal.ring().clone();
    if !ring.is_standard_graded() {
        return Err(Error::NotStandardGraded);
    }
    if beta < 1 {
        return Err(Error::ZeroBound);
    }
    let rel = Ideal::new(ring.clone(), ring.relations().to_vec());
    let mut cols: std::collections::HashMap<Monomial, usize> = Default::default();
    let mut space = RowSpace::new();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let d = ring
            .multidegree(g)
            .ok_or(Error::Inhomogeneous)?
            .0[0];
        if d > beta {
            continue;
        }
        for m in ring.monomials_of_weighted_degree(beta - d) {
            let prod = g.mul_term(&m, &Q::from_integer(1.into()));
            let nf = rel.normal_form(&prod);
            if nf.is_zero() {
                continue;
            }
            let mut row: Vec<(usize, Q)> = nf
                .terms()
                .map(|(mon, c)| {
                    let next = cols.len();
                    let idx = *cols.entry(mon.clone()).or_insert(next);
                    (idx, c.clone())
                })
                .collect();
            row.sort_by_key(|(i, _)| *i);
            if space.insert(row) {
                basis.push(nf.primitive_integer(ring.default_order()));
            }
        }
    }
    Ok(Ideal::new(ring, basis))
}

/// Check the degree-cut identity `<J_beta> = J ∩ n^beta` (valid once beta is
/// at least the maximal generator degree).
pub fn truncation_equals_degree_cut(ideal: &Ideal, beta: i64) -> Result<bool> {
    let trunc = truncation_ideal(ideal, beta)?;
    let ring = ideal.ring().clone();
    let n_beta = ring.max_ideal().power(beta as u32);
    let cut = ideal_ops::intersect(ideal, &n_beta);
    Ok(trunc.equals(&cut))
}

/// `(sat(I^r), I^r)` together with a finite witness check that powers of the
/// saturation stay saturated: `sat(I^(r v)) = sat(I^r)^v` for v = 2, 3.
pub fn veronese_pair(ideal: &Ideal, r: u32) -> Result<(Ideal, Ideal, bool)> {
    if r == 0 {
        return Err(Error::ZeroBound);
    }
    let power = ideal.power(r);
    let tilde = ideal_ops::saturate(&power, None)?;
    let mut witness = true;
    for v in [2u32, 3] {
        let lhs = ideal_ops::saturate(&ideal.power(r * v), None)?;
        let rhs = tilde.power(v);
        if !lhs.equals(&rhs) {
            witness = false;
            break;
        }
    }
    Ok((tilde, power, witness))
}

/// Saturation method shared by the pipeline (kept here so callers can make
/// the oracle use an independent configuration).
pub fn pipeline_saturate(ideal: &Ideal) -> Result<Ideal> {
    ideal_ops::saturate_with(ideal, None, SaturationMethod::Auto)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rees_of_max_ideal_in_two_variables() {
        // Defining ideal of R[mt] for m=(x,y) is the Koszul syzygy (x Z2 - y Z1).
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let pres = rees_presentation(&m).unwrap();
        assert_eq!(pres.defining.len(), 1);
        let g = &pres.defining[0];
        assert_eq!(g.num_terms(), 2);
        assert_eq!(
            g.multidegree(pres.ring.degrees()).unwrap(),
            DegreeVector::pair(1, 2)
        );
        assert!(pres.substitution_check());
    }

    #[test]
    fn rees_of_principal_ideal_is_free() {
        let r = GradedRing::standard(&["x", "y"]);
        let f = r.var(0).pow(2).add(&r.var(1).pow(2));
        let i = Ideal::new(r.clone(), vec![f]);
        let pres = rees_presentation(&i).unwrap();
        assert!(pres.defining.is_empty());
    }

    #[test]
    fn saturated_rees_of_max_ideal_is_polynomial_ring_over_t() {
        // sat(m) = (1): single generator of bidegree (1,0), kernel (0).
        let r = GradedRing::standard(&["x", "y"]);
        let m = r.max_ideal();
        let pres =
            saturated_rees_presentation(&m, 1, SaturatedReesOptions::default()).unwrap();
        assert_eq!(pres.algebra_gens.len(), 1);
        let (lvl, f) = &pres.algebra_gens[0];
        assert_eq!(*lvl, 1);
        assert!(f.total_degree() == Some(0));
        assert!(pres.defining.is_empty());
    }

    #[test]
    fn saturated_rees_bidegrees_for_square_of_triangle_ideal() {
        // I = (xy, yz, zx), n=2: generator bidegrees {(1,2)x3, (2,3), (2,4)x3}.
        let r = GradedRing::standard(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let i = Ideal::new(r.clone(), vec![x.mul(&y), y.mul(&z), z.mul(&x)]);
        let pres =
            saturated_rees_presentation(&i, 2, SaturatedReesOptions { check_bound: true })
                .unwrap();
        let mut bidegrees: Vec<(i64, i64)> = pres
            .algebra_gens
            .iter()
            .map(|(lvl, f)| (*lvl as i64, r.multidegree(f).unwrap().0[0]))
            .collect();
        bidegrees.sort();
        assert_eq!(
            bidegrees,
            vec![(1, 2), (1, 2), (1, 2), (2, 3), (2, 4), (2, 4), (2, 4)]
        );
        assert!(pres.warnings.is_empty(), "witness holds for this ideal");
        assert!(pres.substitution_check());
    }

    #[test]
    fn truncation_of_principal_ideal() {
        // J = (x) in k[x,y], beta = 2 -> (x^2, xy)
        let r = GradedRing::standard(&["x", "y"]);
        let x = r.var(0);
        let i = Ideal::new(r.clone(), vec![x.clone()]);
        let t = truncation_ideal(&i, 2).unwrap();
        assert_eq!(t.generators().len(), 2);
        let expect = Ideal::new(
            r.clone(),
            vec![x.pow(2), x.mul(&r.var(1))],
        );
        assert!(t.equals(&expect));
        assert!(truncation_equals_degree_cut(&i, 2).unwrap());
    }

    #[test]
    fn truncation_at_generator_degree_is_identity_for_equigenerated() {
        let r = GradedRing::standard(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let i = Ideal::new(r.clone(), vec![x.mul(&y), y.mul(&z), z.mul(&x)]);
        let t = truncation_ideal(&i, 2).unwrap();
        assert!(t.equals(&i));
    }

    #[test]
    fn extend_ring_basics() {
        let r = GradedRing::standard(&["x", "y"]);
        let i = r.max_ideal();
        let (s, j, n) = extend_ring(&r, &i).unwrap();
        assert_eq!(s.nvars(), 3);
        assert_eq!(j.generators().len(), 2);
        assert_eq!(n.generators().len(), 3);
        assert_eq!(
            crate::ideal_ops::krull_dim_ring(&s),
            crate::ideal_ops::krull_dim_ring(&r) + 1
        );
    }

    #[test]
    fn veronese_pair_witness_for_triangle_ideal() {
        let r = GradedRing::standard(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let i = Ideal::new(r.clone(), vec![x.mul(&y), y.mul(&z), z.mul(&x)]);
        let (tilde, power, witness) = veronese_pair(&i, 2).unwrap();
        assert!(witness);
        assert!(tilde.contains_ideal(&power));
        let expect = Ideal::new(
            r.clone(),
            vec![
                x.mul(&y).mul(&z),
                x.pow(2).mul(&y.pow(2)),
                y.pow(2).mul(&z.pow(2)),
                x.pow(2).mul(&z.pow(2)),
            ],
        );
        assert!(tilde.equals(&expect));
    }

    #[test]
    fn veronese_pair_witness_trivial_for_max_ideal() {
        let r = GradedRing::standard(&["x", "y"]);
        let (_, _, witness) = veronese_pair(&r.max_ideal(), 1).unwrap();
        assert!(witness);
    }
}
