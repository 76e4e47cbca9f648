//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p flagchar --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use flagchar::flag_cohomology::{rho_character_squared, FlagVariety};
use flagchar::*;
use num_bigint::BigInt;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), String> {
    let took = start.elapsed();
    check(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn decomposition(parts: &[(&[i64], i64)]) -> Decomposition {
    Decomposition::from_parts(parts.iter().map(|(c, m)| (w(c), *m))).unwrap()
}

fn sl3_golden() -> Outcome {
    let start = Instant::now();
    let a2 = rs(TypeLabel::A, 2);
    let got = FlagVariety::new(&a2).unwrap().polyvector_euler_decomposition().unwrap();
    within(start, Duration::from_secs(1), "A2")?;
    let expected = decomposition(&[(&[0, 0], 1), (&[1, 1], 2), (&[3, 0], 1), (&[0, 3], 1), (&[2, 2], 1)]);
    check(got == expected, || format!("got {got:?}"))?;
    Ok(format!("A2 Euler decomposition matches, {:.2?}", start.elapsed()))
}

fn d4_golden() -> Outcome {
    let start = Instant::now();
    let d4 = rs(TypeLabel::D, 4);
    let fv = FlagVariety::new(&d4).unwrap();
    let tensor = fv.rho_tensor_square().unwrap();
    check(tensor.total_multiplicity() == BigInt::from(648), || {
        format!("multiplicity sum {}", tensor.total_multiplicity())
    })?;
    let euler = fv.polyvector_euler_decomposition().unwrap();
    check(euler == tensor, || "Euler decomposition differs from V(ρ)⊗V(ρ)".into())?;
    within(start, Duration::from_secs(300), "D4")?;
    Ok(format!("648 components, Euler = tensor, {:.2?}", start.elapsed()))
}

fn kostant() -> Outcome {
    let cases = [
        (TypeLabel::A, 1),
        (TypeLabel::A, 2),
        (TypeLabel::A, 3),
        (TypeLabel::A, 4),
        (TypeLabel::G, 2),
        (TypeLabel::B, 2),
        (TypeLabel::B, 3),
        (TypeLabel::C, 3),
        (TypeLabel::D, 4),
        (TypeLabel::F, 4),
    ];
    let mut notes = Vec::new();
    for (label, rank) in cases {
        let r = rs(label, rank);
        let start = Instant::now();
        let report = FlagVariety::new(&r).unwrap().verify_kostant().unwrap();
        let limit = if label == TypeLabel::F { 3600 } else { 300 };
        within(start, Duration::from_secs(limit), &r.name())?;
        check(report.conjecture_holds, || {
            format!("{}: counterexamples {:?}", r.name(), report.counterexamples)
        })?;
        notes.push(format!("{} ({})", r.name(), report.support_order.len()));
    }
    Ok(format!("holds for {}", notes.join(", ")))
}

fn wedge_n_identity() -> Outcome {
    let types = types_up_to_rank(4);
    for r in &types {
        let fv = FlagVariety::new(r).unwrap();
        let lhs = fv.demazure_of_wedge_n().unwrap();
        let rhs = rho_character_squared(r).unwrap();
        check(lhs == rhs, || format!("{}: D_w0(ch ∧•n) ≠ ch V(ρ)²", r.name()))?;
    }
    Ok(format!("{} types of rank ≤ 4", types.len()))
}

fn demazure_suite() -> Outcome {
    let mut g = rng(2024);
    let mut count = 0;
    for (label, rank) in [
        (TypeLabel::A, 2),
        (TypeLabel::B, 2),
        (TypeLabel::G, 2),
        (TypeLabel::A, 3),
        (TypeLabel::B, 3),
        (TypeLabel::C, 3),
    ] {
        let r = rs(label, rank);
        for _ in 0..100 {
            let a = random_character(&mut g, rank);
            for i in 1..=rank {
                let d = demazure_apply(&r, i, &a).unwrap();
                check(demazure_apply(&r, i, &d).unwrap() == d, || {
                    format!("{}: D_{i}² ≠ D_{i} on {a}", r.name())
                })?;
                check(quotient_defect(&r, i, &a, &d).is_empty(), || {
                    format!("{}: quotient identity fails for D_{i} on {a}", r.name())
                })?;
            }
            count += 1;
        }
    }
    for label in [TypeLabel::A, TypeLabel::B, TypeLabel::G] {
        let r = rs(label, 2);
        let [u, v] = rank_two_longest_words(&r);
        for _ in 0..100 {
            let a = random_character(&mut g, 2);
            check(
                demazure_word(&r, &u, &a).unwrap() == demazure_word(&r, &v, &a).unwrap(),
                || format!("{}: braid relation fails on {a}", r.name()),
            )?;
        }
    }
    Ok(format!("{count} random characters, braid relations in A2, B2, G2"))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for (label, rank) in [
        (TypeLabel::A, 1),
        (TypeLabel::A, 2),
        (TypeLabel::B, 2),
        (TypeLabel::G, 2),
        (TypeLabel::A, 3),
    ] {
        let r = rs(label, rank);
        let mut c = vec![0i64; rank];
        loop {
            let lambda = Weight::from(c.clone());
            check(
                irreducible_character(&r, &lambda).unwrap() == freudenthal_character(&r, &lambda).unwrap(),
                || format!("{}: mismatch at {lambda}", r.name()),
            )?;
            count += 1;
            let mut k = 0;
            while k < rank && c[k] == 2 {
                c[k] = 0;
                k += 1;
            }
            if k == rank {
                break;
            }
            c[k] += 1;
        }
    }
    Ok(format!("{count} highest weights"))
}

fn bwb_suite() -> Outcome {
    let a1 = rs(TypeLabel::A, 1);
    let triple = [
        (
            bwb_line_bundle(&a1, &w(&[2])).unwrap(),
            BwbResult::Cohomology {
                degree: 0,
                dual_highest_weight: w(&[2]),
            },
        ),
        (bwb_line_bundle(&a1, &w(&[-1])).unwrap(), BwbResult::Vanishes),
        (
            bwb_line_bundle(&a1, &w(&[-2])).unwrap(),
            BwbResult::Cohomology {
                degree: 1,
                dual_highest_weight: w(&[0]),
            },
        ),
    ];
    for (got, expected) in &triple {
        check(got == expected, || format!("A1: got {got:?}, expected {expected:?}"))?;
    }
    let mut g = rng(7);
    let types = types_up_to_rank(3);
    for r in &types {
        for _ in 0..1000 {
            let lambda = random_weight(&mut g, r.rank(), 6);
            let chi = euler_characteristic(r, &CharacterElt::monomial(lambda.checked_neg().unwrap())).unwrap();
            let expected = match bwb_line_bundle(r, &lambda).unwrap() {
                BwbResult::Vanishes => CharacterElt::zero(r.rank()),
                BwbResult::Cohomology {
                    degree,
                    dual_highest_weight,
                } => {
                    let sign = if degree % 2 == 0 { 1 } else { -1 };
                    diamond(&irreducible_character(r, &dual_highest_weight).unwrap())
                        .unwrap()
                        .scale(sign)
                        .unwrap()
                }
            };
            check(chi == expected, || {
                format!("{}: Euler/BWB mismatch at {lambda}", r.name())
            })?;
        }
    }
    Ok(format!("A1 triple, 1000 weights in each of {} types", types.len()))
}

fn wahl() -> Outcome {
    for (label, rank) in [(TypeLabel::A, 2), (TypeLabel::B, 2), (TypeLabel::A, 3)] {
        let r = rs(label, rank);
        let fv = FlagVariety::new(&r).unwrap();
        let h0 = fv.wahl_h0().unwrap();
        let u = fv.exterior_character(false).unwrap();
        let chi = fv.euler_characteristic(u.degree(u.top_degree() - 1).unwrap()).unwrap();
        check(h0.character(&r).unwrap() == chi, || {
            format!("{}: wahl_h0 ≠ χ(∧^(n-1) u)", r.name())
        })?;
        if r.name() == "A2" {
            let expected = decomposition(&[(&[1, 1], 1), (&[3, 0], 1), (&[0, 3], 1)]);
            check(h0 == expected, || format!("A2: got {h0:?}"))?;
        }
    }
    Ok("A2, B2, A3; A2 is V(ρ) ⊕ V(3ϖ1) ⊕ V(3ϖ2)".into())
}

fn bott_echo() -> Outcome {
    let types = types_up_to_rank(4);
    for r in &types {
        let fv = FlagVariety::new(r).unwrap();
        let u = fv.exterior_character(false).unwrap();
        let dec = decompose(r, &fv.euler_characteristic(u.degree(1).unwrap()).unwrap()).unwrap();
        let expected = Decomposition::from_parts([(r.highest_root().clone(), 1)]).unwrap();
        check(dec == expected, || format!("{}: got {dec:?}", r.name()))?;
    }
    Ok(format!("adjoint in {} types of rank ≤ 4", types.len()))
}

fn dimension_identities() -> Outcome {
    let mut types = types_up_to_rank(8);
    for (label, rank) in [
        (TypeLabel::A, 12),
        (TypeLabel::B, 10),
        (TypeLabel::C, 10),
        (TypeLabel::D, 10),
    ] {
        types.push(rs(label, rank));
    }
    for r in &types {
        let expected = BigInt::from(2u8).pow(r.num_positive_roots() as u32);
        check(weyl_dimension(r, r.rho()).unwrap() == expected, || {
            format!("{}: dim V(ρ)", r.name())
        })?;
    }
    for (label, rank, expected) in [
        (TypeLabel::A, 2, BigInt::from(64)),
        (TypeLabel::D, 4, BigInt::from(4096u64 * 4096)),
    ] {
        let r = rs(label, rank);
        let dim = FlagVariety::new(&r)
            .unwrap()
            .rho_tensor_square()
            .unwrap()
            .dimension(&r)
            .unwrap();
        check(dim == expected, || format!("{}: Σ m·dim = {dim}", r.name()))?;
    }
    Ok(format!(
        "dim V(ρ) = 2^|Φ⁺| in {} types; A2 = 64, D4 = 4096²",
        types.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("SL3 golden decomposition", sl3_golden),
        ("D4 golden decomposition", d4_golden),
        ("Kostant verification", kostant),
        ("D_w0(ch ∧•n) = ch V(ρ)²", wedge_n_identity),
        ("Demazure properties", demazure_suite),
        ("Freudenthal oracle", oracle_equivalence),
        ("Borel-Weil-Bott", bwb_suite),
        ("Wahl cross-check", wahl),
        ("Bott echo", bott_echo),
        ("Dimension identities", dimension_identities),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  criterion {:>2}: {name}: {detail} [{took:.2?}]", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name}: {detail} [{took:.2?}]", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
