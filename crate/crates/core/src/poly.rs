//! Sparse multivariate polynomials.
//!
//! A [`Polynomial`] is an immutable, normalized list of terms sorted strictly
//! descending under the ring's monomial order. Every operation returns a fresh
//! value. The arithmetic operator impls panic when the operands come from
//! different rings; the `try_*` methods report [`AlgebraError::RingMismatch`]
//! instead.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::ring::{check_same, same_ring, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn var(ring: &Arc<PolyRing>, k: usize) -> Self {
        Self::term(ring, ring.field().one(), Monomial::var(ring.nvars(), k))
    }

    pub fn term(ring: &Arc<PolyRing>, coeff: Scalar, monomial: Monomial) -> Self {
        debug_assert_eq!(monomial.nvars(), ring.nvars());
        let terms = if ring.field().is_zero(&coeff) { Vec::new() } else { vec![Term { coeff, monomial }] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_monomial(ring: &Arc<PolyRing>, monomial: Monomial) -> Self {
        Self::term(ring, ring.field().one(), monomial)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zero coefficients.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let field = ring.field();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms already sorted and normalized for `ring`.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Maximum total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.monomial.degree() == t.monomial.degree()),
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.neg(&t.coeff), monomial: t.monomial.clone() })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(&t.coeff, c), monomial: t.monomial.clone() })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplies by the term `c * m`; sortedness is preserved because monomial
    /// orders are multiplicative.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: field.mul(&t.coeff, c), monomial: t.monomial.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.ring.field().is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.ring.field().inv(lc).expect("leading coefficient is nonzero")),
        }
    }

    /// `self - c * m * g`, computed by a single merge.
    pub(crate) fn sub_scaled_shifted(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|t| (field.neg(&field.mul(&t.coeff, c)), t.monomial.mul(m))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some((_, mb))) => order.cmp(&x.monomial, mb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (coeff, monomial) = b.next().unwrap();
                    out.push(Term { coeff, monomial });
                }
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let (cb, _) = b.next().unwrap();
                    let s = field.add(&x.coeff, &cb);
                    if !field.is_zero(&s) {
                        out.push(Term { coeff: s, monomial: x.monomial.clone() });
                    }
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.sub_scaled_shifted(&self.ring.field().neg(&self.ring.field().one()), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.sub_scaled_shifted(&self.ring.field().one(), &Monomial::one(self.ring.nvars()), other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for s in &self.terms {
            for t in &other.terms {
                let m = s.monomial.mul(&t.monomial);
                let c = field.mul(&s.coeff, &t.coeff);
                acc.entry(m).and_modify(|e| *e = field.add(e, &c)).or_insert(c);
            }
        }
        let terms = acc.into_iter().map(|(monomial, coeff)| Term { coeff, monomial }).collect();
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism `x_k -> images[k]` into the ring of the images.
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::Structural(format!(
                "expected {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        for img in images {
            check_same(img.ring(), target)?;
        }
        if self.ring.field() != target.field() {
            return Err(AlgebraError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|img| vec![Polynomial::one(target), img.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (k, e) in t.monomial.exponents().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                prod = &prod * &cache[e as usize];
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    /// Linear change of coordinates `x_k -> sum_t M[k][t] x_t`. `M` must be
    /// invertible.
    pub fn apply_linear_change(&self, m: &Matrix) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if m.nrows() != n || m.ncols() != n {
            return Err(AlgebraError::Structural(format!("expected a {n}x{n} matrix")));
        }
        if m.field() != self.ring.field() {
            return Err(AlgebraError::RingMismatch);
        }
        if m.rank() < n {
            return Err(AlgebraError::SingularMatrix);
        }
        self.substitute(&self.ring, &linear_images(&self.ring, m))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        check_same(&self.ring, divisor.ring())?;
        let Some(lt) = divisor.leading_term() else {
            return Err(AlgebraError::DivisionByZero);
        };
        let field = self.ring.field();
        let lc_inv = field.inv(&lt.coeff)?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(head) = rest.leading_term() {
            let Some(m) = lt.monomial.quotient_of(&head.monomial) else {
                return Ok(None);
            };
            let c = field.mul(&head.coeff, &lc_inv);
            rest = rest.sub_scaled_shifted(&c, &m, divisor);
            quotient.push(Term { coeff: c, monomial: m });
        }
        // quotient terms were produced in strictly descending order
        Ok(Some(Polynomial::from_sorted_terms(&self.ring, quotient)))
    }

    /// Reinterprets the polynomial in another ring with the same variables
    /// (e.g. a different monomial order).
    pub fn reorder_into(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.ring.field() {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }
}

/// The images `x_k -> sum_t M[k][t] x_t` as polynomials.
pub(crate) fn linear_images(ring: &Arc<PolyRing>, m: &Matrix) -> Vec<Polynomial> {
    let n = ring.nvars();
    (0..n)
        .map(|k| {
            let terms = (0..n)
                .map(|t| Term { coeff: m.get(k, t).clone(), monomial: Monomial::var(n, t) })
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, t) in self.terms.iter().enumerate() {
            let int = field.to_integer(&t.coeff);
            let (negative, body) = match &int {
                Some(v) if v.sign() == num_bigint::Sign::Minus => (true, (-v).to_string()),
                Some(v) => (false, v.to_string()),
                None => (false, format!("({})", t.coeff)),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for (k, e) in t.monomial.exponents().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_names()[k].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.var_names()[k], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", body, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use proptest::prelude::*;

    fn ring(field: FieldSpec) -> Arc<PolyRing> {
        PolyRing::new(field, &["x", "y", "z"]).unwrap()
    }

    fn xyz(r: &Arc<PolyRing>) -> (Polynomial, Polynomial, Polynomial) {
        (Polynomial::var(r, 0), Polynomial::var(r, 1), Polynomial::var(r, 2))
    }

    #[test]
    fn basic_identities() {
        let r = ring(FieldSpec::default());
        let (x, y, _) = xyz(&r);
        let f = &(&x * &x) + &y;
        assert_eq!(&f + &Polynomial::zero(&r), f);
        assert!((&f - &f).is_zero());
        assert_eq!(&f * &Polynomial::one(&r), f);
        let two_x = &(&x + &y) + &(&x - &y);
        assert_eq!(two_x, x.scale(&r.field().from_i64(2)));
        assert_eq!(&(&x + &y) * &(&x - &y), &(&x * &x) - &(&y * &y));
    }

    #[test]
    fn grading_of_products() {
        let r = ring(FieldSpec::rationals());
        let (x, y, z) = xyz(&r);
        let f = &(&x * &y) + &(&z * &z);
        let g = &(&x * &(&y * &z)) - &(&z * &(&z * &z));
        let h = &f * &g;
        assert!(h.is_homogeneous());
        assert_eq!(h.total_degree(), Some(5));
        assert!(!(&f + &x).is_homogeneous());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r1 = ring(FieldSpec::default());
        let r2 = PolyRing::new(FieldSpec::default(), &["a", "b"]).unwrap();
        assert_eq!(Polynomial::var(&r1, 0).try_add(&Polynomial::var(&r2, 0)), Err(AlgebraError::RingMismatch));
        assert_eq!(Polynomial::var(&r1, 0).try_mul(&Polynomial::var(&r2, 0)), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn linear_change_identity_swap_and_inverse() {
        let r = ring(FieldSpec::rationals());
        let (x, y, z) = xyz(&r);
        let f = &(&(&x * &x) * &y) + &(&z * &y).scale(&r.field().from_i64(3));
        let id = Matrix::identity(r.field(), 3);
        assert_eq!(f.apply_linear_change(&id).unwrap(), f);

        let swap = Matrix::from_i64(r.field(), &[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let x2y = &(&x * &x) * &y;
        assert_eq!(x2y.apply_linear_change(&swap).unwrap(), &(&y * &y) * &x);

        let m = Matrix::from_i64(r.field(), &[vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let minv = m.inverse().unwrap();
        // x -> M x then x -> M^{-1} x composes to the identity substitution
        let there = f.apply_linear_change(&m).unwrap();
        let back = there.apply_linear_change(&minv).unwrap();
        assert_eq!(back, f);

        let singular = Matrix::from_i64(r.field(), &[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(f.apply_linear_change(&singular), Err(AlgebraError::SingularMatrix));
    }

    #[test]
    fn exact_division() {
        let r = ring(FieldSpec::default());
        let (x, y, z) = xyz(&r);
        let f = &(&x + &y) * &(&(&x * &z) - &(&y * &y));
        assert_eq!(f.div_exact(&(&x + &y)).unwrap().unwrap(), &(&x * &z) - &(&y * &y));
        assert_eq!((&f + &z).div_exact(&(&x + &y)).unwrap(), None);
    }

    #[test]
    fn display_uses_variable_names() {
        let r = ring(FieldSpec::default());
        let (x, y, _) = xyz(&r);
        let f = &(&x * &x) - &y.scale(&r.field().from_i64(3));
        assert_eq!(f.to_string(), "x^2 - 3*y");
    }

    fn arb_poly(field: FieldSpec) -> impl Strategy<Value = Polynomial> {
        let r = ring(field);
        prop::collection::vec((-20i64..20, prop::collection::vec(0u32..3, 3)), 0..6).prop_map(move |ts| {
            let terms = ts
                .into_iter()
                .map(|(c, e)| Term { coeff: r.field().from_i64(c), monomial: Monomial::new(&e).unwrap() })
                .collect();
            Polynomial::from_terms(&r, terms)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_prime(f in arb_poly(FieldSpec::default()), g in arb_poly(FieldSpec::default()), h in arb_poly(FieldSpec::default())) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn ring_axioms_rational(f in arb_poly(FieldSpec::rationals()), g in arb_poly(FieldSpec::rationals()), h in arb_poly(FieldSpec::rationals())) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
        }
    }
}
