#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use lefschetz_core::props::families::{random_m_full_ideal, random_stable_ideal};
use lefschetz_core::props::minimal_monomial_generators;
use lefschetz_core::{parse_ideal_file, FieldSpec, Ideal, PolyRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn header(field: &FieldSpec) -> String {
    match field {
        FieldSpec::PrimeField { p } => format!("p={p}"),
        FieldSpec::Rationals => "Q".into(),
    }
}

/// `(x^3, x^2 y, x^2 z, y^3) + m^4` in `K[x,y,z]`.
pub fn xyz_cubics(field: &FieldSpec) -> Ideal {
    parse_ideal_file(&format!("ring {} vars=x,y,z\nx^3\nx^2*y\nx^2*z\ny^3\npow m 4\n", header(field))).unwrap()
}

/// `(w^3, x^3, x^2 y) + m^4` in `K[w,x,y,z]`.
pub fn wxyz(field: &FieldSpec) -> Ideal {
    parse_ideal_file(&format!("ring {} vars=w,x,y,z\nw^3\nx^3\nx^2*y\npow m 4\n", header(field))).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti numbers of a stable ideal from its minimal generators:
/// `β_{i,i+j} = Σ_{deg u = j} C(m(u) - 1, i)` with `m(u)` the largest
/// (1-based) index of a variable dividing `u`.
pub fn eliahou_kervaire(ideal: &Ideal) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    for u in minimal_monomial_generators(ideal).unwrap() {
        let exps: Vec<u32> = u.exponents().collect();
        let m = exps.iter().rposition(|&e| e > 0).unwrap() as u64 + 1;
        let j: u32 = exps.iter().sum();
        for i in 0..m {
            *out.entry((i as u32, i as u32 + j)).or_insert(0) += binomial(m - 1, i);
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(field: &FieldSpec, n: usize) -> Arc<PolyRing> {
    PolyRing::standard(field.clone(), n)
}

/// `count` stable ideals with `n` in `2..=4` and top degree in `2..=5`.
pub fn stable_family(field: &FieldSpec, count: usize, seed: u64) -> Vec<Ideal> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let max_deg = rng.gen_range(2..=5);
            random_stable_ideal(&ring(field, n), max_deg, &mut rng).unwrap()
        })
        .collect()
}

/// `count` m-primary m-full ideals with `n` in `2..=4`; every other one is
/// moved by a random change of coordinates.
pub fn m_full_family(field: &FieldSpec, count: usize, seed: u64) -> Vec<Ideal> {
    let mut rng = rng(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(2..=4);
            let max_deg = rng.gen_range(3..=5);
            random_m_full_ideal(&ring(field, n), max_deg, k % 2 == 1, &mut rng).unwrap()
        })
        .collect()
}
