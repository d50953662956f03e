//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use lefschetz_core::props::{
    check_invariants, gin, has_wlp, is_completely_m_full, is_componentwise_linear, is_m_full, is_stable,
    verify_betti_splitting, verify_cmfull_cwl_equivalence, verify_wlp_betti_criterion,
    verify_wlp_criterion_with_mfull_quotient, GenericityPolicy,
};
use lefschetz_core::{
    betti_table, delta_invariant, hilbert_function, socle_profile, FieldSpec, Ideal, ModuleTag,
};

use common::{eliahou_kervaire, m_full_family, stable_family, wxyz, xyz_cubics};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn policy(seed: u64) -> GenericityPolicy {
    GenericityPolicy::with_seed(seed)
}

fn fp() -> FieldSpec {
    FieldSpec::default()
}

fn describe(i: &Ideal) -> String {
    lefschetz_core::format_ideal_file(i).replace('\n', "; ")
}

fn xyz_cubics_golden() -> Outcome {
    let i = xyz_cubics(&fp());
    let p = policy(1);
    ensure!(hilbert_function(&i).unwrap().values == [1, 3, 6, 6], "hilbert function");
    let x = is_m_full(&i, &p).unwrap().witness.ok_or("m_full = false")?;
    let bar = i.quotient_by_linear_form(&x).unwrap();
    ensure!(hilbert_function(&bar).unwrap().values == [1, 2, 3, 1], "quotient hilbert function");
    let betti = betti_table(&i, ModuleTag::Ideal).unwrap();
    let expected = BTreeMap::from([((0, 3), 4), ((0, 4), 6), ((1, 4), 3), ((1, 5), 13), ((2, 5), 1), ((2, 6), 6)]);
    ensure!(betti.entries == expected, "betti table {:?}", betti.entries);
    ensure!(socle_profile(&i).unwrap().initial_degree + 1 == 3, "d");
    ensure!(delta_invariant(&i, &x).unwrap() == 4, "delta");
    let wlp = has_wlp(&i, &p).unwrap().decision.value;
    ensure!(!wlp, "wlp");
    ensure!(!is_completely_m_full(&i, &p).unwrap().value, "completely m-full");
    ensure!(betti.at(2, 6) == 6 && betti.at(0, 4) == 6, "beta_(2,6) = beta_(0,4) = 6");
    ensure!(betti.at(1, 5) == 13 && 13 > 2 * betti.at(0, 4), "beta_(1,5) > 2 beta_(0,4)");
    Ok(())
}

fn wxyz_golden() -> Outcome {
    let i = wxyz(&fp());
    let p = policy(2);
    let x = is_m_full(&i, &p).unwrap().witness.ok_or("m_full = false")?;
    let bar = i.quotient_by_linear_form(&x).unwrap();
    ensure!(is_m_full(&bar, &p).unwrap().decision.value, "reduction not m-full");
    ensure!(!is_componentwise_linear(&i).unwrap(), "componentwise linear");
    let r = verify_wlp_criterion_with_mfull_quotient(&i, &p).unwrap();
    ensure!(r.hypothesis && r.equivalence_asserted, "hypothesis not met");
    ensure!(r.wlp.value == r.betti_last && r.betti_last == r.betti_all, "booleans differ: {r:?}");
    Ok(())
}

fn betti_splitting() -> Outcome {
    let mut ideals = vec![xyz_cubics(&fp()), wxyz(&fp())];
    ideals.extend(stable_family(&fp(), 120, 3));
    for (k, i) in ideals.iter().enumerate() {
        let r = verify_betti_splitting(i, &policy(1000 + k as u64)).map_err(|e| format!("{}: {e}", describe(i)))?;
        ensure!(r.passed, "{}: {:?} {:?}", describe(i), r.mismatches, r.checks);
    }
    Ok(())
}

fn wlp_betti_equivalences() -> Outcome {
    let mut ideals = stable_family(&fp(), 110, 4);
    ideals.extend(m_full_family(&fp(), 150, 5));
    ideals.push(xyz_cubics(&fp()));
    ideals.push(wxyz(&fp()));
    let (mut asserted, mut cmfull, mut wlp_false) = (0, 0, 0);
    for (k, i) in ideals.iter().enumerate() {
        let p = policy(2000 + k as u64);
        let a = verify_wlp_betti_criterion(i, &p).map_err(|e| format!("{}: {e}", describe(i)))?;
        ensure!(a.passed, "{}: {:?}", describe(i), a.checks);
        let b = verify_wlp_criterion_with_mfull_quotient(i, &p).map_err(|e| format!("{}: {e}", describe(i)))?;
        ensure!(b.passed, "{}: {:?}", describe(i), b.checks);
        ensure!(a.wlp == b.wlp, "{}: wlp differs between suites", describe(i));
        if is_completely_m_full(i, &p).unwrap().value {
            cmfull += 1;
            ensure!(b.hypothesis, "{}: completely m-full but the reduction is not m-full", describe(i));
        }
        asserted += b.equivalence_asserted as usize;
        wlp_false += !a.wlp.value as usize;
    }
    println!(
        "    {} instances, {} with m-full reduction, {} completely m-full, {} without wlp",
        ideals.len(),
        asserted,
        cmfull,
        wlp_false
    );
    Ok(())
}

fn fullness_implications() -> Outcome {
    let mut instances: Vec<Ideal> = stable_family(&fp(), 100, 6);
    instances.extend(m_full_family(&fp(), 60, 7));
    instances.push(xyz_cubics(&fp()));
    instances.push(wxyz(&fp()));
    let q = FieldSpec::rationals();
    let mut rational = stable_family(&q, 20, 8);
    rational.extend(m_full_family(&q, 10, 9));
    rational.push(xyz_cubics(&q));
    rational.push(wxyz(&q));
    let mut asserted = 0;
    for (k, i) in instances.iter().chain(&rational).enumerate() {
        let p = policy(3000 + k as u64);
        let r = verify_cmfull_cwl_equivalence(i, &p).map_err(|e| format!("{}: {e}", describe(i)))?;
        ensure!(r.passed, "{}: {:?}", describe(i), r.checks);
        if i.is_monomial() && is_stable(i).unwrap() {
            ensure!(r.completely_m_full.value, "{}: stable but not completely m-full", describe(i));
        }
        if k >= instances.len() {
            ensure!(r.gin_stable, "{}: gin over Q is not stable", describe(i));
            ensure!(r.equivalence_asserted, "{}", describe(i));
            asserted += 1;
        }
    }
    println!("    {} instances, {} over Q with the equivalence asserted", instances.len() + rational.len(), asserted);
    Ok(())
}

fn koszul_against_eliahou_kervaire() -> Outcome {
    let ideals = stable_family(&fp(), 60, 10);
    for i in &ideals {
        let table = betti_table(i, ModuleTag::Ideal).unwrap();
        let oracle = eliahou_kervaire(i);
        ensure!(table.entries == oracle, "{}: {:?} vs {:?}", describe(i), table.entries, oracle);
    }
    Ok(())
}

fn invariant_cross_checks() -> Outcome {
    let mut ideals = vec![xyz_cubics(&fp()), wxyz(&fp())];
    ideals.extend(stable_family(&fp(), 40, 11));
    ideals.extend(m_full_family(&fp(), 40, 12));
    let mut rng = common::rng(13);
    for _ in 0..20 {
        use rand::Rng;
        let n = rng.gen_range(2..=3);
        let forms = rng.gen_range(1..=4);
        let r = common::ring(&fp(), n);
        ideals.push(lefschetz_core::props::families::random_m_primary_ideal(&r, 3, forms, &mut rng).unwrap());
    }
    for (k, i) in ideals.iter().enumerate() {
        let p = policy(4000 + k as u64);
        let r = check_invariants(i, &p).map_err(|e| format!("{}: {e}", describe(i)))?;
        ensure!(r.passed, "{}: {:?}", describe(i), r.checks);
        let j = gin(i, &p).unwrap();
        ensure!(hilbert_function(&j).unwrap() == hilbert_function(i).unwrap(), "gin hilbert function");
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        ("1 xyz cubics golden values", xyz_cubics_golden),
        ("2 wxyz golden values", wxyz_golden),
        ("3 betti splitting for m-full ideals", betti_splitting),
        ("4 wlp and betti equivalences", wlp_betti_equivalences),
        ("5 stable and componentwise linear imply completely m-full", fullness_implications),
        ("6 koszul betti numbers match eliahou-kervaire", koszul_against_eliahou_kervaire),
        ("7 invariant cross-checks", invariant_cross_checks),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("PASS criterion {name} ({secs:.1}s)"),
            Err(e) => {
                println!("FAIL criterion {name} ({secs:.1}s): {e}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
