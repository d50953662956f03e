//! Homogeneous ideals and the ideal-level operations built on Gröbner bases.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::groebner::{reduce, reduced_groebner_basis};
use crate::linalg::Matrix;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::{linear_images, Polynomial, Term};
use crate::ring::{check_same, PolyRing};

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis. The zero ideal (no generators) is representable because images
/// and truncations can vanish.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    gb: OnceLock<Vec<Polynomial>>,
}

/// A nonzero linear form `sum_k coeffs[k] * x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(ring: &PolyRing, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(AlgebraError::Structural(format!(
                "linear form needs {} coefficients, got {}",
                ring.nvars(),
                coeffs.len()
            )));
        }
        if coeffs.iter().all(|c| ring.field().is_zero(c)) {
            return Err(AlgebraError::ZeroLinearForm);
        }
        Ok(LinearForm { coeffs })
    }

    /// The variable `x_k`.
    pub fn variable(ring: &PolyRing, k: usize) -> Self {
        let f = ring.field();
        let coeffs = (0..ring.nvars()).map(|i| if i == k { f.one() } else { f.zero() }).collect();
        LinearForm { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn to_polynomial(&self, ring: &Arc<PolyRing>) -> Polynomial {
        let n = ring.nvars();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Term { coeff: c.clone(), monomial: Monomial::var(n, k) })
            .collect();
        Polynomial::from_terms(ring, terms)
    }
}

/// Serializable view of an ideal: ring description plus generator strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
}

impl Ideal {
    /// Builds an ideal from a nonempty list of nonzero generators.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(AlgebraError::EmptyIdeal);
        }
        for g in &gens {
            check_same(ring, g.ring())?;
            if g.is_zero() {
                return Err(AlgebraError::ZeroGenerator);
            }
        }
        Ok(Self::from_gens_unchecked(ring, gens))
    }

    /// Like [`Ideal::new`] but silently drops zero generators; an empty
    /// result is the zero ideal.
    pub fn from_generators(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            check_same(ring, g.ring())?;
        }
        Ok(Self::from_gens_unchecked(ring, gens.into_iter().filter(|g| !g.is_zero()).collect()))
    }

    pub(crate) fn from_gens_unchecked(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        Ideal { ring: ring.clone(), gens, homogeneous, gb: OnceLock::new() }
    }

    /// Ideal whose generators are already a reduced Gröbner basis.
    pub(crate) fn from_reduced_basis(ring: &Arc<PolyRing>, gb: Vec<Polynomial>) -> Self {
        let ideal = Self::from_gens_unchecked(ring, gb.clone());
        let _ = ideal.gb.set(gb);
        ideal
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::from_gens_unchecked(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::from_gens_unchecked(ring, vec![Polynomial::one(ring)])
    }

    pub fn from_monomials(ring: &Arc<PolyRing>, mons: Vec<Monomial>) -> Self {
        Self::from_gens_unchecked(ring, mons.into_iter().map(|m| Polynomial::from_monomial(ring, m)).collect())
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        Self::from_gens_unchecked(ring, (0..ring.nvars()).map(|k| Polynomial::var(ring, k)).collect())
    }

    /// `m^t`, generated by all monomials of degree `t`.
    pub fn maximal_power(ring: &Arc<PolyRing>, t: u32) -> Result<Self> {
        if t < 1 {
            return Err(AlgebraError::InvalidArgument("power of the maximal ideal must be >= 1".into()));
        }
        Ok(Self::from_monomials(ring, monomials_of_degree(ring.nvars(), t)))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.reduced_gb().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.reduced_gb().iter().any(Polynomial::is_constant)
    }

    /// Every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn summary(&self) -> IdealSummary {
        IdealSummary {
            vars: self.ring.var_names().to_vec(),
            generators: self.gens.iter().map(ToString::to_string).collect(),
        }
    }

    /// The reduced Gröbner basis, computed once and cached.
    pub fn reduced_gb(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| reduced_groebner_basis(&self.ring, &self.gens))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.reduced_gb().iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, f.ring())?;
        Ok(reduce(f, self.reduced_gb()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Monomial `m` is outside the initial ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.reduced_gb().iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        for g in other.reduced_gb() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals: the reduced Gröbner bases coincide.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.reduced_gb() == other.reduced_gb())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_gens_unchecked(&self.ring, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                let p = f * g;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ok(Self::from_gens_unchecked(&self.ring, gens))
    }

    /// `I + (f)`.
    pub fn add_generator(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        let mut gens = self.gens.clone();
        if !f.is_zero() {
            gens.push(f.clone());
        }
        Ok(Self::from_gens_unchecked(&self.ring, gens))
    }

    /// `I ∩ J`, by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let ext = self.ring.with_tag_variable();
        let lift = |f: &Polynomial, t_exp: u8| {
            let terms = f
                .terms()
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), monomial: t.monomial.insert_var(0, t_exp) })
                .collect();
            Polynomial::from_terms(&ext, terms)
        };
        let mut gens = Vec::new();
        for f in self.reduced_gb() {
            gens.push(lift(f, 1));
        }
        for g in other.reduced_gb() {
            gens.push(&lift(g, 0) - &lift(g, 1));
        }
        let gb = reduced_groebner_basis(&ext, &gens);
        let mut out = Vec::new();
        for g in gb {
            if g.terms().iter().all(|t| t.monomial.exponent(0) == 0) {
                let terms = g
                    .terms()
                    .iter()
                    .map(|t| Term { coeff: t.coeff.clone(), monomial: t.monomial.drop_var(0).unwrap() })
                    .collect();
                out.push(Polynomial::from_terms(&self.ring, terms));
            }
        }
        if self.ring.order() != MonomialOrder::Degrevlex {
            return Ok(Self::from_gens_unchecked(&self.ring, out));
        }
        // the elimination order restricts to degrevlex, so `out` is already
        // the reduced basis of the intersection
        out.sort_by(|a, b| self.ring.order().cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        Ok(Self::from_reduced_basis(&self.ring, out))
    }

    /// `I : f = { g : g f ∈ I }`, computed as `(I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Err(AlgebraError::InvalidArgument("colon by the zero polynomial".into()));
        }
        let principal = Self::from_gens_unchecked(&self.ring, vec![f.clone()]);
        let inter = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for g in inter.generators() {
            let q = g.div_exact(f)?.expect("elements of (f) are divisible by f");
            gens.push(q);
        }
        Ok(Self::from_gens_unchecked(&self.ring, gens))
    }

    /// `I : J = ∩_{g ∈ gens(J)} (I : g)`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut acc: Option<Ideal> = None;
        for g in other.generators() {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ring)))
    }

    /// Monomial ideal of leading monomials of the reduced Gröbner basis.
    pub fn initial_ideal(&self) -> Ideal {
        let mons = self.leading_monomials();
        let gb: Vec<Polynomial> = mons.into_iter().map(|m| Polynomial::from_monomial(&self.ring, m)).collect();
        Self::from_reduced_basis(&self.ring, gb)
    }

    /// Applies `x_k -> sum_t M[k][t] x_t` to every generator.
    pub fn apply_linear_change(&self, m: &Matrix) -> Result<Ideal> {
        let n = self.ring.nvars();
        if m.nrows() != n || m.ncols() != n {
            return Err(AlgebraError::Structural(format!("expected a {n}x{n} matrix")));
        }
        if m.rank() < n {
            return Err(AlgebraError::SingularMatrix);
        }
        let images = linear_images(&self.ring, m);
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute(&self.ring, &images))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens_unchecked(&self.ring, gens))
    }

    /// Image of the ideal in `R / xR`, realized in the polynomial ring on the
    /// remaining `n - 1` variables. The pivot is the last variable with a
    /// nonzero coefficient in `x`; it is eliminated through
    /// `x_pivot -> -(sum_{k != pivot} a_k x_k) / a_pivot`.
    pub fn quotient_by_linear_form(&self, x: &LinearForm) -> Result<Ideal> {
        let n = self.ring.nvars();
        let field = self.ring.field();
        if x.coeffs().len() != n {
            return Err(AlgebraError::Structural("linear form has the wrong length".into()));
        }
        let pivot = (0..n).rev().find(|&k| !field.is_zero(&x.coeffs()[k])).ok_or(AlgebraError::ZeroLinearForm)?;
        let target = self.ring.without_var(pivot);
        let inv = field.inv(&x.coeffs()[pivot])?;
        let images: Vec<Polynomial> = (0..n)
            .map(|k| {
                if k == pivot {
                    let terms = (0..n)
                        .filter(|&t| t != pivot)
                        .map(|t| Term {
                            coeff: field.neg(&field.mul(&x.coeffs()[t], &inv)),
                            monomial: Monomial::var(n - 1, if t < pivot { t } else { t - 1 }),
                        })
                        .collect();
                    Polynomial::from_terms(&target, terms)
                } else {
                    Polynomial::var(&target, if k < pivot { k } else { k - 1 })
                }
            })
            .collect();
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute(&target, &images))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens_unchecked(&target, gens.into_iter().filter(|g| !g.is_zero()).collect()))
    }

    /// Minimal degree of a generator of the reduced Gröbner basis.
    pub fn initial_degree(&self) -> Option<u32> {
        self.reduced_gb().iter().filter_map(Polynomial::total_degree).min()
    }

    /// Maximal degree of a reduced Gröbner basis element.
    pub fn max_gb_degree(&self) -> Option<u32> {
        self.reduced_gb().iter().filter_map(Polynomial::total_degree).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::is_groebner_basis;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::new(FieldSpec::default(), &["x", "y"]).unwrap()
    }

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(FieldSpec::default(), &["x", "y", "z"]).unwrap()
    }

    fn mono(r: &Arc<PolyRing>, e: &[u32]) -> Polynomial {
        Polynomial::from_monomial(r, Monomial::new(e).unwrap())
    }

    fn mono_ideal(r: &Arc<PolyRing>, gens: &[&[u32]]) -> Ideal {
        Ideal::new(r, gens.iter().map(|e| mono(r, e)).collect()).unwrap()
    }

    #[test]
    fn construction_errors() {
        let r = ring2();
        assert_eq!(Ideal::new(&r, vec![]).unwrap_err(), AlgebraError::EmptyIdeal);
        assert_eq!(Ideal::new(&r, vec![Polynomial::zero(&r)]).unwrap_err(), AlgebraError::ZeroGenerator);
        let other = ring3();
        assert_eq!(Ideal::new(&r, vec![Polynomial::var(&other, 0)]).unwrap_err(), AlgebraError::RingMismatch);
    }

    #[test]
    fn normal_forms() {
        let r = ring2();
        let i = mono_ideal(&r, &[&[2, 0]]);
        assert!(i.normal_form(&mono(&r, &[2, 1])).unwrap().is_zero());
        assert_eq!(i.normal_form(&Polynomial::one(&r)).unwrap(), Polynomial::one(&r));
        assert!(i.normal_form(&mono(&r, &[2, 0])).unwrap().is_zero());
    }

    #[test]
    fn equality_of_ideals() {
        let r = ring2();
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let a = Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap();
        let b = Ideal::new(&r, vec![&x + &y, y.clone()]).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(!mono_ideal(&r, &[&[2, 0]]).equals(&mono_ideal(&r, &[&[1, 0]])).unwrap());
        let m = Ideal::maximal(&r);
        let m2 = Ideal::maximal_power(&r, 2).unwrap();
        let m3 = Ideal::maximal_power(&r, 3).unwrap();
        assert!(m.product(&m2).unwrap().equals(&m3).unwrap());
    }

    #[test]
    fn sums_products_and_powers() {
        let r = ring2();
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(i.sum(&i).unwrap().equals(&i).unwrap());
        let x = mono_ideal(&r, &[&[1, 0]]);
        let y = mono_ideal(&r, &[&[0, 1]]);
        assert!(x.product(&y).unwrap().equals(&mono_ideal(&r, &[&[1, 1]])).unwrap());
        let mi = Ideal::maximal(&r).product(&i).unwrap();
        assert!(mi.equals(&mono_ideal(&r, &[&[3, 0], &[2, 1], &[1, 2]])).unwrap());

        assert_eq!(Ideal::maximal_power(&r, 2).unwrap().generators().len(), 3);
        let r1 = PolyRing::new(FieldSpec::default(), &["x"]).unwrap();
        assert!(Ideal::maximal_power(&r1, 3).unwrap().equals(&mono_ideal(&r1, &[&[3]])).unwrap());
        assert!(Ideal::maximal_power(&r, 0).is_err());
        assert_eq!(Ideal::maximal_power(&ring3(), 4).unwrap().generators().len(), 15);
    }

    #[test]
    fn intersections() {
        let r = ring2();
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
        let x = mono_ideal(&r, &[&[1, 0]]);
        let y = mono_ideal(&r, &[&[0, 1]]);
        assert!(x.intersect(&y).unwrap().equals(&mono_ideal(&r, &[&[1, 1]])).unwrap());
        let m2 = Ideal::maximal_power(&r, 2).unwrap();
        assert!(m2.intersect(&x).unwrap().equals(&mono_ideal(&r, &[&[2, 0], &[1, 1]])).unwrap());
    }

    #[test]
    fn colon_by_elements() {
        let r = ring2();
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(i.colon_poly(&Polynomial::one(&r)).unwrap().equals(&i).unwrap());
        let x2 = mono_ideal(&r, &[&[2, 0]]);
        assert!(x2.colon_poly(&Polynomial::var(&r, 0)).unwrap().equals(&mono_ideal(&r, &[&[1, 0]])).unwrap());
        // mI : y = I for I = (x^2, xy)
        let mi = Ideal::maximal(&r).product(&i).unwrap();
        assert!(mi.colon_poly(&Polynomial::var(&r, 1)).unwrap().equals(&i).unwrap());
        assert!(i.colon_poly(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn colon_by_ideals() {
        let r = ring2();
        let m = Ideal::maximal(&r);
        let m3 = Ideal::maximal_power(&r, 3).unwrap();
        assert!(m3.colon_ideal(&m).unwrap().equals(&Ideal::maximal_power(&r, 2).unwrap()).unwrap());
        let ci = mono_ideal(&r, &[&[2, 0], &[0, 2]]);
        let expected = mono_ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(ci.colon_ideal(&m).unwrap().equals(&expected).unwrap());
        assert!(ci.colon_ideal(&Ideal::unit(&r)).unwrap().equals(&ci).unwrap());
    }

    #[test]
    fn initial_ideals() {
        let r = ring2();
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(i.initial_ideal().equals(&i).unwrap());
        let lin = Ideal::new(&r, vec![&Polynomial::var(&r, 0) + &Polynomial::var(&r, 1)]).unwrap();
        assert!(lin.initial_ideal().equals(&mono_ideal(&r, &[&[1, 0]])).unwrap());

        // (x^2 - yz, xy) in degrevlex: the reduced basis is
        // {x^2 - yz, xy, y^2 z}, so in = (x^2, xy, y^2 z).
        let r = ring3();
        let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
        let i = Ideal::new(&r, vec![&(&x * &x) - &(&y * &z), &x * &y]).unwrap();
        assert!(is_groebner_basis(i.reduced_gb()));
        let expected = mono_ideal(&r, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 1]]);
        assert!(i.initial_ideal().equals(&expected).unwrap());
    }

    #[test]
    fn quotients_by_linear_forms() {
        let r = ring3();
        let z = LinearForm::variable(&r, 2);
        let i = mono_ideal(&r, &[&[0, 0, 1]]);
        assert!(i.quotient_by_linear_form(&z).unwrap().is_zero());

        let m = Ideal::maximal(&r);
        let form = LinearForm::new(&r, vec![r.field().from_i64(3), r.field().from_i64(5), r.field().from_i64(7)]).unwrap();
        let image = m.quotient_by_linear_form(&form).unwrap();
        assert_eq!(image.ring().nvars(), 2);
        assert!(image.equals(&Ideal::maximal(image.ring())).unwrap());

        let zero = LinearForm::new(&r, vec![r.field().zero(); 3]);
        assert_eq!(zero.unwrap_err(), AlgebraError::ZeroLinearForm);

        let r1 = PolyRing::new(FieldSpec::default(), &["x"]).unwrap();
        let img = mono_ideal(&r1, &[&[3]]).quotient_by_linear_form(&LinearForm::variable(&r1, 0)).unwrap();
        assert_eq!(img.ring().nvars(), 0);
        assert!(img.is_zero());
    }
}
