//! Buchberger-based Groebner engine: reduced bases, normal forms, elimination.
//!
//! Polynomials enter and leave as the order-agnostic [`Polynomial`]; inside
//! the engine terms are integer-coefficient vectors sorted descending under
//! the active order, and reduction is fraction-free: the remainder is scaled
//! by reducer lead coefficients and a single running denominator tracks the
//! exact value. S-pairs are processed by ascending lcm degree (normal
//! strategy) with the Gebauer-Moeller criteria pruning the pair set.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, MonomialOrder, Polynomial, Q, Z};

/// Integer terms sorted descending under the active order.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, Z)>,
}

impl IPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> IPoly {
        // clear denominators and strip content
        let prim = p.primitive_integer(order);
        let terms = prim
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| {
                debug_assert!(c.denom().is_one());
                (m, c.numer().clone())
            })
            .collect();
        IPoly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, Z) {
        &self.terms[0]
    }

    fn strip_content(&mut self) {
        let mut g = Z::zero();
        for (_, c) in &self.terms {
            g = num_integer::gcd(g, c.clone());
            if g.is_one() {
                return;
            }
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        for (_, c) in self.terms.iter_mut() {
            *c = &*c / &g;
        }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Q::from_integer(c.clone()))),
        )
    }
}

/// `a * f[start..] - b * x^q * g`, both inputs sorted descending.
fn combine(
    f: &[(Monomial, Z)],
    a: &Z,
    g: &[(Monomial, Z)],
    b: &Z,
    q: &Monomial,
    order: &MonomialOrder,
) -> Vec<(Monomial, Z)> {
    let a_is_one = a.is_one();
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() && j < g.len() {
        let gm = g[j].0.mul(q);
        match order.cmp(&f[i].0, &gm) {
            Ordering::Greater => {
                let c = if a_is_one { f[i].1.clone() } else { &f[i].1 * a };
                out.push((f[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, -(&g[j].1 * b)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if a_is_one {
                    &f[i].1 - &g[j].1 * b
                } else {
                    &f[i].1 * a - &g[j].1 * b
                };
                if !c.is_zero() {
                    out.push((f[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (m, c) in &f[i..] {
        let c = if a_is_one { c.clone() } else { c * a };
        out.push((m.clone(), c));
    }
    for (m, c) in &g[j..] {
        out.push((m.mul(q), -(c * b)));
    }
    out
}

/// Fully reduce `f` (divided by `denom`) against the active basis elements.
/// Returns exact rational terms sorted descending.
fn reduce_full(
    f: Vec<(Monomial, Z)>,
    denom: Q,
    basis: &[IPoly],
    active: &[bool],
    order: &MonomialOrder,
) -> Vec<(Monomial, Q)> {
    let mut rem = f;
    let mut start = 0usize;
    let mut denom = denom;
    let mut out: Vec<(Monomial, Q)> = Vec::new();
    let mut steps = 0usize;
    while start < rem.len() {
        let (lm, lc) = &rem[start];
        // cheapest reducer: fewest terms among dividing leads
        let mut best: Option<usize> = None;
        for (k, g) in basis.iter().enumerate() {
            if !active[k] || g.is_zero() {
                continue;
            }
            let (gm, _) = g.lead();
            if gm.divides(lm) {
                match best {
                    None => best = Some(k),
                    Some(prev) => {
                        if g.terms.len() < basis[prev].terms.len() {
                            best = Some(k);
                        }
                    }
                }
            }
        }
        match best {
            Some(k) => {
                let g = &basis[k];
                let (gm, gc) = g.lead();
                let g0 = num_integer::gcd(lc.clone(), gc.clone());
                let a = gc / &g0;
                let b = lc / &g0;
                let q = lm.checked_div(gm).unwrap();
                let combined = combine(&rem[start..], &a, &g.terms, &b, &q, order);
                debug_assert!(
                    combined.is_empty() || order.cmp(&combined[0].0, lm) == Ordering::Less
                );
                rem = combined;
                start = 0;
                denom = denom * Q::from_integer(a);
                steps += 1;
                if steps % 24 == 0 {
                    // keep coefficients small: pull out the integer content
                    let mut g = Z::zero();
                    for (_, c) in &rem {
                        g = num_integer::gcd(g, c.clone());
                        if g.is_one() {
                            break;
                        }
                    }
                    if !g.is_one() && !g.is_zero() {
                        for (_, c) in rem.iter_mut() {
                            *c = &*c / &g;
                        }
                        denom = denom / Q::from_integer(g);
                    }
                }
            }
            None => {
                out.push((lm.clone(), Q::from_integer(lc.clone()) / &denom));
                start += 1;
            }
        }
    }
    out
}

fn reduce_ipoly(f: IPoly, basis: &[IPoly], active: &[bool], order: &MonomialOrder) -> Vec<(Monomial, Q)> {
    reduce_full(f.terms, Q::one(), basis, active, order)
}

fn qterms_to_ipoly(terms: &[(Monomial, Q)]) -> IPoly {
    if terms.is_empty() {
        return IPoly { terms: vec![] };
    }
    let mut den = Z::one();
    for (_, c) in terms {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let mut out: Vec<(Monomial, Z)> = terms
        .iter()
        .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
        .collect();
    let mut g = Z::zero();
    for (_, c) in &out {
        g = num_integer::gcd(g, c.clone());
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() && !g.is_zero() {
        for (_, c) in out.iter_mut() {
            *c = &*c / &g;
        }
    }
    if out[0].1.is_negative() {
        for (_, c) in out.iter_mut() {
            *c = -(&*c);
        }
    }
    IPoly { terms: out }
}

/// Normal form of `f` with respect to a Groebner basis under `order`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let nvars = f.nvars();
    if f.is_zero() {
        return f.clone();
    }
    let b: Vec<IPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_poly(g, order))
        .collect();
    let active = vec![true; b.len()];
    // scale f to integer terms, remembering the factor
    let mut den = Z::one();
    for (_, c) in f.terms() {
        den = num_integer::lcm(den, c.denom().clone());
    }
    let terms: Vec<(Monomial, Z)> = f
        .sorted_terms(order)
        .into_iter()
        .map(|(m, c)| {
            let v = c.numer() * (&den / c.denom());
            (m, v)
        })
        .collect();
    let out = reduce_full(terms, Q::from_integer(den), &b, &active, order);
    Polynomial::from_terms(nvars, out)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

struct PairEntry(Pair);

impl PartialEq for PairEntry {
    fn eq(&self, other: &Self) -> bool {
        self.0.degree == other.0.degree && self.0.i == other.0.i && self.0.j == other.0.j
    }
}
impl Eq for PairEntry {}
impl PartialOrd for PairEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PairEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert for min-degree-first.
        other
            .0
            .degree
            .cmp(&self.0.degree)
            .then_with(|| other.0.j.cmp(&self.0.j))
            .then_with(|| other.0.i.cmp(&self.0.i))
    }
}

struct GbState {
    basis: Vec<IPoly>,
    /// usable as a reducer (lead not superseded by a later, smaller lead)
    active: Vec<bool>,
    queue: BinaryHeap<PairEntry>,
    alive: Vec<(usize, usize, Monomial)>,
    pair_weights: Option<Vec<i64>>,
}

impl GbState {
    fn pair_degree(&self, lcm: &Monomial) -> u64 {
        match &self.pair_weights {
            Some(w) => lcm.weighted_degree(w) as u64,
            None => lcm.total_degree(),
        }
    }

    fn add_element(&mut self, h: IPoly, _order: &MonomialOrder) {
        let t = self.basis.len();
        let lead_t = h.lead().0.clone();

        // Gebauer-Moeller update of the pair set.
        let mut fresh: Vec<Pair> = Vec::new();
        for (i, g) in self.basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let lcm = g.lead().0.lcm(&lead_t);
            let degree = match &self.pair_weights {
                Some(w) => lcm.weighted_degree(w) as u64,
                None => lcm.total_degree(),
            };
            fresh.push(Pair {
                i,
                j: t,
                degree,
                lcm,
            });
        }
        // Criterion M: drop (i,t) when some (j,t) has a strictly smaller lcm
        // dividing it.
        let mut keep_new = vec![true; fresh.len()];
        for a in 0..fresh.len() {
            for b in 0..fresh.len() {
                if a != b
                    && keep_new[a]
                    && keep_new[b]
                    && fresh[b].lcm.divides(&fresh[a].lcm)
                    && fresh[b].lcm != fresh[a].lcm
                {
                    keep_new[a] = false;
                }
            }
        }
        // Criterion F: among equal lcms keep a single representative.
        for a in 0..fresh.len() {
            if !keep_new[a] {
                continue;
            }
            for b in (a + 1)..fresh.len() {
                if keep_new[b] && fresh[a].lcm == fresh[b].lcm {
                    keep_new[b] = false;
                }
            }
        }
        // Criterion B (product criterion): coprime leads never contribute.
        for (a, p) in fresh.iter().enumerate() {
            if keep_new[a] && self.basis[p.i].lead().0.is_coprime(&lead_t) {
                keep_new[a] = false;
            }
        }
        // Chain criterion on old pairs: (i,j) dies when lead_t divides
        // lcm(i,j) strictly inside both new lcms.
        let basis = &self.basis;
        self.alive.retain(|(i, j, lcm)| {
            if !lead_t.divides(lcm) {
                return true;
            }
            let li = basis[*i].lead().0.lcm(&lead_t);
            let lj = basis[*j].lead().0.lcm(&lead_t);
            !(li != *lcm && lj != *lcm)
        });
        for (a, p) in fresh.into_iter().enumerate() {
            if keep_new[a] {
                self.alive.push((p.i, p.j, p.lcm.clone()));
                self.queue.push(PairEntry(p));
            }
        }
        // Newly superseded reducers drop out of the reduction scans.
        for (i, g) in self.basis.iter().enumerate() {
            if self.active[i] && !g.is_zero() && lead_t.divides(&g.lead().0) {
                self.active[i] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
///
/// The result is unique for (ideal, order): monic generators, no lead divides
/// another, tails fully reduced, sorted ascending by lead monomial.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    buchberger_weighted(gens, order, None)
}

/// Variant with an explicit positive weight vector steering the S-pair
/// selection (useful when the ideal is homogeneous for those weights).
pub fn buchberger_weighted(
    gens: &[Polynomial],
    order: &MonomialOrder,
    pair_weights: Option<&[i64]>,
) -> Vec<Polynomial> {
    let nvars = match gens.iter().find(|g| !g.is_zero()) {
        Some(g) => g.nvars(),
        None => return vec![],
    };

    let mut state = GbState {
        basis: Vec::new(),
        active: Vec::new(),
        queue: BinaryHeap::new(),
        alive: Vec::new(),
        pair_weights: pair_weights.map(|w| w.to_vec()),
    };

    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_poly(g, order))
        .collect();
    // Feed smaller inputs first; redundant inputs then reduce to zero quickly.
    inputs.sort_by(|p, q| {
        p.lead()
            .0
            .total_degree()
            .cmp(&q.lead().0.total_degree())
            .then_with(|| p.terms.len().cmp(&q.terms.len()))
            .then_with(|| order.cmp(&p.lead().0, &q.lead().0))
    });

    for f in inputs {
        let red = reduce_ipoly(f, &state.basis, &state.active, order);
        if !red.is_empty() {
            state.add_element(qterms_to_ipoly(&red), order);
        }
    }

    while let Some(PairEntry(pair)) = state.queue.pop() {
        if !state
            .alive
            .iter()
            .any(|(i, j, _)| *i == pair.i && *j == pair.j)
        {
            continue;
        }
        state
            .alive
            .retain(|(i, j, _)| !(*i == pair.i && *j == pair.j));

        let (fi, fj) = (&state.basis[pair.i], &state.basis[pair.j]);
        let (mi, ci) = fi.lead();
        let (mj, cj) = fj.lead();
        let qi = pair.lcm.checked_div(mi).unwrap();
        let qj = pair.lcm.checked_div(mj).unwrap();
        // S(f,g) = (c_g/d) x^(lcm/lt f) f - (c_f/d) x^(lcm/lt g) g
        let g0 = num_integer::gcd(ci.clone(), cj.clone());
        let a = cj / &g0;
        let b = ci / &g0;
        let scaled_i: Vec<(Monomial, Z)> = fi
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&qi), c * &a))
            .collect();
        let s = combine(&scaled_i, &Z::one(), &fj.terms, &b, &qj, order);
        let red = reduce_full(s, Q::one(), &state.basis, &state.active, order);
        if !red.is_empty() {
            let mut h = qterms_to_ipoly(&red);
            h.strip_content();
            state.add_element(h, order);
        }
    }

    // Minimalize: drop elements whose lead is divisible by another kept lead.
    let basis = state.basis;
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a != b && keep[b] && basis[b].lead().0.divides(&basis[a].lead().0) {
                let strictly = basis[b].lead().0 != basis[a].lead().0 || b < a;
                if strictly {
                    keep[a] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<IPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // Tail-reduce each element against the others, then normalize monic.
    let mut reduced: Vec<(Monomial, Vec<(Monomial, Q)>)> = Vec::with_capacity(minimal.len());
    for a in 0..minimal.len() {
        let mut active = vec![true; minimal.len()];
        active[a] = false;
        let r = reduce_ipoly(minimal[a].clone(), &minimal, &active, order);
        if !r.is_empty() {
            let inv = r[0].1.recip();
            let monic: Vec<(Monomial, Q)> =
                r.into_iter().map(|(m, c)| (m, c * &inv)).collect();
            reduced.push((monic[0].0.clone(), monic));
        }
    }
    reduced.sort_by(|(a, _), (b, _)| order.cmp(a, b));
    reduced
        .into_iter()
        .map(|(_, terms)| Polynomial::from_terms(nvars, terms))
        .collect()
}

/// Generators of the elimination ideal `I ∩ k[x_k..x_n]` given generators of
/// an ideal in a ring whose first `k` variables are to be eliminated.
/// The returned polynomials live in the smaller ring (variables re-indexed).
pub fn eliminate_first(gens: &[Polynomial], k: usize) -> Vec<Polynomial> {
    eliminate_first_weighted(gens, k, None)
}

/// Elimination with a weight hint for the S-pair selection.
pub fn eliminate_first_weighted(
    gens: &[Polynomial],
    k: usize,
    pair_weights: Option<&[i64]>,
) -> Vec<Polynomial> {
    if gens.iter().all(|g| g.is_zero()) {
        return vec![];
    }
    let nvars = gens.iter().find(|g| !g.is_zero()).unwrap().nvars();
    let order = MonomialOrder::elim_first(k);
    let gb = buchberger_weighted(gens, &order, pair_weights);
    let perm: Vec<usize> = (k..nvars).chain(0..k).collect();
    gb.into_iter()
        .filter_map(|g| g.permute_vars(&perm).restrict_vars(nvars - k))
        .collect()
}

/// Check that every S-polynomial of `basis` reduces to zero (confluence).
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let b: Vec<IPoly> = basis.iter().map(|g| IPoly::from_poly(g, order)).collect();
    let active = vec![true; b.len()];
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            let (mi, ci) = b[i].lead();
            let (mj, cj) = b[j].lead();
            let lcm = mi.lcm(mj);
            let qi = lcm.checked_div(mi).unwrap();
            let qj = lcm.checked_div(mj).unwrap();
            let g0 = num_integer::gcd(ci.clone(), cj.clone());
            let a = cj / &g0;
            let bb = ci / &g0;
            let scaled_i: Vec<(Monomial, Z)> = b[i]
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&qi), c * &a))
                .collect();
            let s = combine(&scaled_i, &Z::one(), &b[j].terms, &bb, &qj, order);
            if !reduce_full(s, Q::one(), &b, &active, order).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_int;

    fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn linear_pair_reduces_to_variables() {
        // {x+y, x-y} under lex -> {x, y}
        let x = var(2, 0);
        let y = var(2, 1);
        let gb = buchberger(&[x.add(&y), x.sub(&y)], &MonomialOrder::Lex);
        assert_eq!(gb, vec![y.clone(), x.clone()]);
    }

    #[test]
    fn single_generator_already_reduced() {
        let x = var(2, 0);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            assert_eq!(buchberger(&[x.clone()], &order), vec![x.clone()]);
        }
    }

    #[test]
    fn circle_pair_gains_y_cubed() {
        // {x^2+y^2, xy} degrevlex(x>y) -> {x^2+y^2, xy, y^3}
        let x = var(2, 0);
        let y = var(2, 1);
        let f = x.mul(&x).add(&y.mul(&y));
        let g = x.mul(&y);
        let gb = buchberger(&[f.clone(), g.clone()], &MonomialOrder::DegRevLex);
        let y3 = y.pow(3);
        assert_eq!(gb.len(), 3);
        assert!(gb.contains(&f) && gb.contains(&g) && gb.contains(&y3));
        // membership of y^3 and confluence
        assert!(normal_form(&y3, &gb, &MonomialOrder::DegRevLex).is_zero());
        assert!(is_groebner_basis(&gb, &MonomialOrder::DegRevLex));
    }

    #[test]
    fn normal_form_examples() {
        let x = var(2, 0);
        let y = var(2, 1);
        let gb = vec![x.clone()];
        assert!(normal_form(&x.mul(&x), &gb, &MonomialOrder::DegRevLex).is_zero());
        let f = x.mul(&y).add(&y.mul(&y));
        assert_eq!(
            normal_form(&f, &gb, &MonomialOrder::DegRevLex),
            y.mul(&y)
        );
    }

    #[test]
    fn normal_form_idempotent_and_rational_inputs() {
        let x = var(2, 0);
        let y = var(2, 1);
        let gb = buchberger(
            &[x.mul(&x).add(&y.mul(&y)), x.mul(&y)],
            &MonomialOrder::DegRevLex,
        );
        let f = x
            .pow(3)
            .add(&y.pow(2).scalar_mul(&crate::poly::q_frac(2, 3)))
            .add(&x.mul(&y).scalar_mul(&q_int(5)));
        let n1 = normal_form(&f, &gb, &MonomialOrder::DegRevLex);
        let n2 = normal_form(&n1, &gb, &MonomialOrder::DegRevLex);
        assert_eq!(n1, n2);
    }

    #[test]
    fn reduced_basis_unique_under_permutation() {
        let x = var(3, 0);
        let y = var(3, 1);
        let z = var(3, 2);
        let f1 = x.mul(&y).sub(&z.mul(&z));
        let f2 = x.mul(&x).sub(&y.mul(&z));
        let f3 = y.pow(3).sub(&x.mul(&z).mul(&z));
        let gb1 = buchberger(&[f1.clone(), f2.clone(), f3.clone()], &MonomialOrder::DegRevLex);
        let gb2 = buchberger(&[f3, f1, f2], &MonomialOrder::DegRevLex);
        assert_eq!(gb1, gb2);
        for g in &gb1 {
            assert!(normal_form(g, &gb2, &MonomialOrder::DegRevLex).is_zero());
        }
    }

    #[test]
    fn eliminate_twisted_cusp() {
        // In k[t, x, y]: (x - t^2, y - t^3); eliminating t leaves (x^3 - y^2).
        let t = var(3, 0);
        let x = var(3, 1);
        let y = var(3, 2);
        let gens = [x.sub(&t.pow(2)), y.sub(&t.pow(3))];
        let elim = eliminate_first(&gens, 1);
        assert_eq!(elim.len(), 1);
        let expected = Polynomial::var(2, 0)
            .pow(3)
            .sub(&Polynomial::var(2, 1).pow(2));
        let got = elim[0].primitive_integer(&MonomialOrder::DegRevLex);
        assert_eq!(got, expected.primitive_integer(&MonomialOrder::DegRevLex));
    }

    #[test]
    fn eliminate_trivial_cases() {
        // (x) in k[t, x]: no t present -> (x)
        let t = var(2, 0);
        let x = var(2, 1);
        let elim = eliminate_first(&[x.clone()], 1);
        assert_eq!(elim, vec![Polynomial::var(1, 0)]);
        // (t) in k[t, x] -> (0)
        let elim2 = eliminate_first(&[t], 1);
        assert!(elim2.is_empty());
    }

    #[test]
    fn input_generators_reduce_to_zero() {
        let x = var(3, 0);
        let y = var(3, 1);
        let z = var(3, 2);
        let gens = [
            x.mul(&y).sub(&z.mul(&z)),
            x.pow(3).sub(&y.pow(3)),
            y.mul(&z).add(&x.mul(&x)),
        ];
        let gb = buchberger(&gens, &MonomialOrder::DegRevLex);
        for g in &gens {
            assert!(normal_form(g, &gb, &MonomialOrder::DegRevLex).is_zero());
        }
        assert!(is_groebner_basis(&gb, &MonomialOrder::DegRevLex));
    }

    #[test]
    fn katsura_like_inhomogeneous_system() {
        // an inhomogeneous system exercises the fraction-free reduction
        let x = var(3, 0);
        let y = var(3, 1);
        let z = var(3, 2);
        let one = Polynomial::one(3);
        let f1 = x.add(&y.scalar_mul(&q_int(2))).add(&z.scalar_mul(&q_int(2))).sub(&one);
        let f2 = x.pow(2).add(&y.pow(2).scalar_mul(&q_int(2))).add(&z.pow(2).scalar_mul(&q_int(2))).sub(&x);
        let f3 = x.mul(&y).scalar_mul(&q_int(2)).add(&y.mul(&z).scalar_mul(&q_int(2))).sub(&y);
        let gb = buchberger(&[f1, f2, f3], &MonomialOrder::DegRevLex);
        assert!(is_groebner_basis(&gb, &MonomialOrder::DegRevLex));
        // dimension 0: finitely many solutions, so the basis is nontrivial
        assert!(gb.len() >= 3);
    }
}
