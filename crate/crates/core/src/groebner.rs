//! Buchberger's algorithm producing reduced Gröbner bases.
//!
//! Pairs are scheduled by the normal strategy (smallest lcm first, with the
//! degree taken from [`MonomialOrder::sugar`]) and filtered with the
//! Gebauer–Möller installation of Buchberger's product and chain criteria.

use std::sync::Arc;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'a> {
    ring: &'a Arc<PolyRing>,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a> State<'a> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    /// Gebauer–Möller update after appending a new basis element `h`.
    fn insert(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        let lm_h = self.lm(hi).clone();

        let candidates: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, lm_h.lcm(self.lm(g))))
            .collect();

        // chain criterion among the new pairs: keep (h, g) unless another new
        // pair has a strictly dividing lcm; coprime pairs always survive this step
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, lcm)) in candidates.iter().enumerate() {
            let coprime = lm_h.is_coprime(self.lm(*g));
            let dominated = candidates.iter().enumerate().any(|(other, (_, l2))| {
                other != idx && l2.divides(lcm) && (l2 != lcm || other < idx)
            });
            if coprime || !dominated {
                kept.push((*g, lcm.clone()));
            }
        }
        // product criterion
        let kept: Vec<(usize, Monomial)> = kept.into_iter().filter(|(g, _)| !lm_h.is_coprime(self.lm(*g))).collect();

        // chain criterion on old pairs
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm) && lm(p.i).lcm(&lm_h) != p.lcm && lm(p.j).lcm(&lm_h) != p.lcm)
        });
        for (g, lcm) in kept {
            self.pairs.push(Pair { i: g, j: hi, lcm });
        }

        for g in 0..hi {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order
                .sugar(&pa.lcm)
                .cmp(&order.sugar(&pb.lcm))
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = self.lm(pair.i).quotient_of(&pair.lcm).unwrap();
        let mg = self.lm(pair.j).quotient_of(&pair.lcm).unwrap();
        let field = self.ring.field();
        // both are monic
        f.mul_term(&field.one(), &mf).sub_scaled_shifted(&field.one(), &mg, g)
    }
}

/// Full reduction of `f` modulo `basis`; the result has no term divisible by
/// a leading monomial of the basis.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some(head) = rest.leading_term().cloned() {
        let reducer = basis.iter().find_map(|g| {
            let lt = g.leading_term()?;
            lt.monomial.quotient_of(&head.monomial).map(|m| (g, lt, m))
        });
        match reducer {
            Some((g, lt, m)) => {
                let c = field.div(&head.coeff, &lt.coeff).expect("leading coefficient is nonzero");
                rest = rest.sub_scaled_shifted(&c, &m, g);
            }
            None => {
                remainder.push(head);
                rest = Polynomial::from_sorted_terms(&ring, rest.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// descending leading monomial. Every element is monic.
pub fn reduced_groebner_basis(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(Polynomial::monic).collect();
    if input.iter().any(|g| g.is_constant()) {
        return vec![Polynomial::one(ring)];
    }
    let order = ring.order();
    input.sort_by(|a, b| {
        order
            .sugar(a.leading_monomial().unwrap())
            .cmp(&order.sugar(b.leading_monomial().unwrap()))
            .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });

    let mut state = State { ring, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for g in input {
        let current: Vec<Polynomial> = active_basis(&state);
        let h = reduce(&g, &current);
        if !h.is_zero() {
            state.insert(h.monic());
        }
    }
    while let Some(pair) = state.next_pair() {
        let s = state.s_polynomial(&pair);
        let current = active_basis(&state);
        let h = reduce(&s, &current);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(ring)];
        }
        state.insert(h.monic());
    }
    interreduce(active_basis(&state))
}

fn active_basis(state: &State<'_>) -> Vec<Polynomial> {
    state.polys.iter().zip(&state.active).filter(|(_, &a)| a).map(|(p, _)| p.clone()).collect()
}

/// Makes a minimal Gröbner basis reduced, then sorts it.
fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = basis.first() else { return basis };
    let order = first.ring().order();
    basis.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    for i in 0..basis.len() {
        let others: Vec<Polynomial> =
            basis.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
        let head = basis[i].leading_term().unwrap().clone();
        let ring = basis[i].ring().clone();
        let tail = Polynomial::from_sorted_terms(&ring, basis[i].terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        let mut terms = vec![head];
        terms.extend(tail.terms().iter().cloned());
        basis[i] = Polynomial::from_sorted_terms(&ring, terms);
    }
    basis
}

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let (lf, lg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
            let lcm = lf.monomial.lcm(&lg.monomial);
            let field = f.ring().field();
            let cf = field.inv(&lf.coeff).unwrap();
            let cg = field.inv(&lg.coeff).unwrap();
            let s = f
                .mul_term(&cf, &lf.monomial.quotient_of(&lcm).unwrap())
                .sub_scaled_shifted(&cg, &lg.monomial.quotient_of(&lcm).unwrap(), g);
            if !reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::Term;
    use proptest::prelude::*;

    fn homogeneous(r: &Arc<PolyRing>, deg: u32, coeffs: &[i64]) -> Polynomial {
        let mons = crate::monomial::monomials_of_degree(r.nvars(), deg);
        let terms = mons
            .into_iter()
            .zip(coeffs)
            .map(|(m, &c)| Term { coeff: r.field().from_i64(c), monomial: m })
            .collect();
        Polynomial::from_terms(r, terms)
    }

    fn vars(r: &Arc<PolyRing>) -> Vec<Polynomial> {
        (0..r.nvars()).map(|k| Polynomial::var(r, k)).collect()
    }

    #[test]
    fn maximal_ideal_from_redundant_generators() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y"]).unwrap();
        let v = vars(&r);
        let gb = reduced_groebner_basis(&r, &[v[0].clone(), &v[0] + &v[1]]);
        assert_eq!(gb, vec![v[0].clone(), v[1].clone()]);
    }

    #[test]
    fn difference_and_sum_of_squares() {
        // (x^2 - y^2, x^2 + y^2) = (x^2, y^2) in characteristic != 2
        for field in [FieldSpec::default(), FieldSpec::rationals()] {
            let r = PolyRing::new(field, &["x", "y"]).unwrap();
            let v = vars(&r);
            let (x2, y2) = (&v[0] * &v[0], &v[1] * &v[1]);
            let gb = reduced_groebner_basis(&r, &[&x2 - &y2, &x2 + &y2]);
            assert_eq!(gb, vec![x2.clone(), y2.clone()]);
        }
    }

    #[test]
    fn reduced_basis_is_idempotent_and_satisfies_criterion() {
        let r = PolyRing::new(FieldSpec::rationals(), &["x", "y", "z"]).unwrap();
        let v = vars(&r);
        let f = &(&v[0] * &v[0]) - &(&v[1] * &v[2]);
        let g = &v[0] * &v[1];
        let gb = reduced_groebner_basis(&r, &[f, g]);
        assert!(is_groebner_basis(&gb));
        assert_eq!(reduced_groebner_basis(&r, &gb), gb);
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y"]).unwrap();
        let v = vars(&r);
        let gb = reduced_groebner_basis(&r, &[&v[0] - &Polynomial::one(&r), v[0].clone()]);
        assert_eq!(gb, vec![Polynomial::one(&r)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn random_homogeneous_inputs(
            rational in any::<bool>(),
            gens in prop::collection::vec((1u32..4, prop::collection::vec(-2i64..3, 10)), 1..5),
        ) {
            let field = if rational { FieldSpec::rationals() } else { FieldSpec::default() };
            let r = PolyRing::new(field, &["x", "y", "z"]).unwrap();
            let polys: Vec<Polynomial> = gens.iter().map(|(d, c)| homogeneous(&r, *d, c)).collect();
            let gb = reduced_groebner_basis(&r, &polys);
            prop_assert!(is_groebner_basis(&gb));
            for f in &polys {
                prop_assert!(reduce(f, &gb).is_zero());
            }
            for g in &gb {
                prop_assert!(g.is_homogeneous());
                prop_assert!(r.field().is_one(g.leading_coeff().unwrap()));
            }
            prop_assert_eq!(reduced_groebner_basis(&r, &gb), gb);
        }
    }
}
