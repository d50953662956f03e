//! Random ideal families for property suites.

use rand::Rng;

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{Polynomial, Term};
use crate::props::genericity::GenericityPolicy;
use crate::props::mfull::is_m_full;
use crate::props::stable::first_unstable_exchange;
use crate::ring::PolyRing;
use std::sync::Arc;

fn random_monomial<R: Rng + ?Sized>(n: usize, degree: u32, rng: &mut R) -> Monomial {
    let all = monomials_of_degree(n, degree);
    all[rng.gen_range(0..all.len())].clone()
}

/// `m^max_deg` plus `extra` random monomials of lower degree, closed under
/// the exchanges `u -> x_i u / x_{m(u)}` until stable.
pub fn random_stable_ideal_with<R: Rng + ?Sized>(
    ring: &Arc<PolyRing>,
    max_deg: u32,
    extra: usize,
    rng: &mut R,
) -> Result<Ideal> {
    if max_deg < 1 {
        return Err(AlgebraError::InvalidArgument("max_deg must be >= 1".into()));
    }
    let n = ring.nvars();
    let mut gens = monomials_of_degree(n, max_deg);
    if max_deg >= 2 {
        for _ in 0..extra {
            let d = rng.gen_range(1..max_deg);
            gens.push(random_monomial(n, d, rng));
        }
    }
    loop {
        let minimal = Ideal::from_monomials(ring, gens.clone()).leading_monomials();
        match first_unstable_exchange(&minimal) {
            Some(missing) => gens.push(missing),
            None => return Ok(Ideal::from_monomials(ring, minimal)),
        }
    }
}

/// Stable m-primary ideal with a random number (0 to n + 1) of extra seeds.
pub fn random_stable_ideal<R: Rng + ?Sized>(ring: &Arc<PolyRing>, max_deg: u32, rng: &mut R) -> Result<Ideal> {
    let extra = rng.gen_range(0..=ring.nvars() + 1);
    random_stable_ideal_with(ring, max_deg, extra, rng)
}

/// A homogeneous form of the given degree with random coefficients.
pub fn random_form<R: Rng + ?Sized>(ring: &Arc<PolyRing>, degree: u32, rng: &mut R) -> Polynomial {
    let terms = monomials_of_degree(ring.nvars(), degree)
        .into_iter()
        .map(|m| Term { coeff: ring.field().random(rng), monomial: m })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `num_forms` random forms of degrees in `1..=max_deg` plus `m^{max_deg+1}`.
pub fn random_m_primary_ideal<R: Rng + ?Sized>(
    ring: &Arc<PolyRing>,
    max_deg: u32,
    num_forms: usize,
    rng: &mut R,
) -> Result<Ideal> {
    if max_deg < 1 {
        return Err(AlgebraError::InvalidArgument("max_deg must be >= 1".into()));
    }
    let mut gens: Vec<Polynomial> = (0..num_forms)
        .map(|_| random_form(ring, rng.gen_range(1..=max_deg), rng))
        .filter(|f| !f.is_zero())
        .collect();
    gens.extend(
        monomials_of_degree(ring.nvars(), max_deg + 1)
            .into_iter()
            .map(|m| Polynomial::from_monomial(ring, m)),
    );
    Ideal::new(ring, gens)
}

/// A few random monomials of degrees `2..max_deg` plus `m^max_deg`.
pub fn random_monomial_ideal<R: Rng + ?Sized>(ring: &Arc<PolyRing>, max_deg: u32, rng: &mut R) -> Result<Ideal> {
    if max_deg < 1 {
        return Err(AlgebraError::InvalidArgument("max_deg must be >= 1".into()));
    }
    let n = ring.nvars();
    let mut gens = monomials_of_degree(n, max_deg);
    if max_deg > 2 {
        let density: f64 = rng.gen_range(0.1..0.7);
        gens.extend(monomials_of_degree(n, max_deg - 1).into_iter().filter(|_| rng.gen_bool(density)));
        for _ in 0..rng.gen_range(0..=n) {
            gens.push(random_monomial(n, rng.gen_range(2..max_deg), rng));
        }
    }
    Ok(Ideal::from_monomials(ring, Ideal::from_monomials(ring, gens).leading_monomials()))
}

/// Rejection sampling from [`random_monomial_ideal`] until an m-full ideal
/// appears; with `scramble` the result is moved by a random change of
/// coordinates, which preserves m-fullness.
pub fn random_m_full_ideal<R: Rng + ?Sized>(
    ring: &Arc<PolyRing>,
    max_deg: u32,
    scramble: bool,
    rng: &mut R,
) -> Result<Ideal> {
    for attempt in 0..1000u64 {
        let candidate = random_monomial_ideal(ring, max_deg, rng)?;
        let policy = GenericityPolicy::with_seed(rng.gen()).child("family", attempt);
        if is_m_full(&candidate, &policy)?.decision.value {
            if !scramble {
                return Ok(candidate);
            }
            let g = Matrix::random_invertible(ring.field(), ring.nvars(), rng);
            return candidate.apply_linear_change(&g);
        }
    }
    Err(AlgebraError::InvalidArgument("no m-full ideal found in 1000 draws".into()))
}
