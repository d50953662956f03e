//! Randomized genericity: seeded draws of "general" linear forms and
//! coordinate changes, and agreement voting across independent draws.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::ideal::LinearForm;
use crate::ring::PolyRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityPolicy {
    /// Independent random draws per decision; at least 2.
    pub trials: u32,
    /// Fresh rounds of draws after a disagreement before giving up.
    pub max_retries: u32,
    pub seed: u64,
}

impl Default for GenericityPolicy {
    fn default() -> Self {
        GenericityPolicy { trials: 3, max_retries: 5, seed: 0 }
    }
}

impl GenericityPolicy {
    pub fn new(trials: u32, max_retries: u32, seed: u64) -> Result<Self> {
        if trials < 2 {
            return Err(AlgebraError::InvalidArgument("at least two trials are required".into()));
        }
        Ok(GenericityPolicy { trials, max_retries, seed })
    }

    pub fn with_seed(seed: u64) -> Self {
        GenericityPolicy { seed, ..Self::default() }
    }

    /// Policy for a sub-computation, with a seed derived from `label`.
    pub fn child(&self, label: &str, index: u64) -> Self {
        GenericityPolicy { seed: derive_seed(self.seed, label, index), ..*self }
    }

    /// Generator for round `round` of the computation named `label`.
    pub fn rng(&self, label: &str, round: u32) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(derive_seed(self.seed, label, round as u64))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic, platform-independent seed derivation.
pub fn derive_seed(seed: u64, label: &str, index: u64) -> u64 {
    // FNV-1a over the label
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(splitmix64(seed ^ h).wrapping_add(index))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    /// Backed by an exhibited witness or a deterministic computation.
    Exact,
    /// Agreement of independent random draws.
    Probabilistic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub value: bool,
    pub certainty: Certainty,
}

impl Decision {
    pub fn exact(value: bool) -> Self {
        Decision { value, certainty: Certainty::Exact }
    }

    pub fn probabilistic(value: bool) -> Self {
        Decision { value, certainty: Certainty::Probabilistic }
    }
}

/// A linear form with independent random coefficients, redrawn if zero.
pub fn random_linear_form<R: rand::Rng + ?Sized>(ring: &PolyRing, rng: &mut R) -> LinearForm {
    let field = ring.field();
    loop {
        let coeffs = (0..ring.nvars()).map(|_| field.random(rng)).collect();
        if let Ok(x) = LinearForm::new(ring, coeffs) {
            return x;
        }
    }
}

/// Runs `draw` `policy.trials` times per round until all values agree,
/// retrying with fresh draws at most `policy.max_retries` times.
pub fn vote<T, F>(policy: &GenericityPolicy, label: &str, mut draw: F) -> Result<T>
where
    T: PartialEq,
    F: FnMut(&mut ChaCha8Rng) -> Result<T>,
{
    for round in 0..=policy.max_retries {
        let mut rng = policy.rng(label, round);
        let first = draw(&mut rng)?;
        let mut agree = true;
        for _ in 1..policy.trials {
            if draw(&mut rng)? != first {
                agree = false;
                break;
            }
        }
        if agree {
            return Ok(first);
        }
    }
    Err(AlgebraError::Genericity { what: label.to_string(), retries: policy.max_retries })
}
