//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braid3::census::{knot_forms, CensusBounds};
use braid3::coefficients::{alternating_word, coefficient_grid, observe, predict};
use braid3::invariants::{
    alexander, alexander_product, jones_closure, jones_generic_shift, product_identity_rhs,
    torus_knot_alexander,
};
use braid3::lspace::{classify_form, Status};
use braid3::selfcheck::{random_alternating, random_word};
use braid3::{burau, normalize, BraidWord, BurauMatrix, HalfLaurentPoly, SchreierForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(s: &str) -> BraidWord {
    s.parse().expect("fixture word")
}

fn p(s: &str) -> HalfLaurentPoly {
    s.parse().expect("fixture polynomial")
}

fn expect_eq(what: &str, got: &HalfLaurentPoly, want: &HalfLaurentPoly) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, want {want}"))
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn figure_eight_jones() -> Outcome {
    let word = w("1 -2 1 -2");
    let start = Instant::now();
    let j = jones_closure(&word);
    let elapsed = start.elapsed();
    expect_eq("J", &j, &p("t^-2 - t^-1 + 1 - t + t^2"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("exact, {elapsed:?}"))
}

fn trefoil_sum_jones() -> Outcome {
    let j = jones_closure(&w("s1^3 s2^-3"));
    expect_eq("J", &j, &p("3 - t^-3 + t^-2 - t^-1 - t + t^2 - t^3"))?;
    Ok("exact".into())
}

fn trefoil_sum_alexander() -> Outcome {
    let delta = alexander(&w("s1^3 s2^-3")).map_err(|e| e.to_string())?;
    expect_eq("Δ", &delta, &p("3 + t^-2 - 2t^-1 - 2t + t^2"))?;
    Ok("exact".into())
}

fn unknot_and_unlink() -> Outcome {
    expect_eq(
        "J(σ1σ2)",
        &jones_closure(&w("1 2")),
        &HalfLaurentPoly::one(),
    )?;
    let unlink = p("-t^(1/2) - t^(-1/2)").pow(2);
    expect_eq("J(e)", &jones_closure(&BraidWord::empty()), &unlink)?;
    expect_eq("J(e)", &unlink, &p("t + 2 + t^-1"))?;
    Ok("exact".into())
}

fn grid_agreement() -> Outcome {
    let start = Instant::now();
    let grid = coefficient_grid(3, 4);
    for syl in &grid {
        let predicted = predict(syl).map_err(|e| format!("{syl:?}: {e}"))?;
        let observed =
            observe(&jones_closure(&alternating_word(syl))).map_err(|e| format!("{syl:?}: {e}"))?;
        if predicted != observed {
            return Err(format!(
                "{syl:?}: fields {:?} differ; predicted {predicted}, observed {observed}",
                predicted.mismatches(&observed)
            ));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("{} cases, {elapsed:?}", grid.len()))
}

fn twist_sample() -> Vec<(BraidWord, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..200)
        .map(|_| {
            let a = alternating_word(&random_alternating(&mut rng, 12));
            (a, rng.gen_range(-4..=4))
        })
        .collect()
}

fn generic_shift() -> Outcome {
    let sample = twist_sample();
    for (a, k) in &sample {
        let got = jones_generic_shift(&jones_closure(a), a.exponent_sum(), *k);
        let want = jones_closure(&BraidWord::full_twist_power(*k).concat(a));
        expect_eq(&format!("a = {a}, k = {k}"), &got, &want)?;
    }
    Ok(format!("{} words", sample.len()))
}

fn product_identity() -> Outcome {
    let sample = twist_sample();
    let mut checked = 0;
    for (a, k) in sample.iter().filter(|(a, _)| a.exponent_sum() % 2 == 0) {
        let what = format!("a = {a}, k = {k}");
        let got = product_identity_rhs(&jones_closure(a), a.exponent_sum(), *k)
            .map_err(|e| format!("{what}: {e}"))?;
        let want = alexander_product(&BraidWord::full_twist_power(*k).concat(a))
            .map_err(|e| format!("{what}: {e}"))?;
        expect_eq(&what, &got, &want)?;
        checked += 1;
    }
    Ok(format!("{checked} even-exponent words"))
}

fn normal_form() -> Outcome {
    let fixture = normalize(&w("1 2 1 1 2 1 s1^3 -2"));
    let want = SchreierForm::Generic {
        k: 1,
        syllables: vec![(3, 1)],
    };
    if fixture != want {
        return Err(format!("fixture normalised to {fixture:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let word = random_word(&mut rng, 20);
        let conj = random_word(&mut rng, 6);
        let form = normalize(&word);
        let rep = form.to_word();
        let fail = |why: &str| Err(format!("{why}: w = {word}, c = {conj}, form {form}"));
        if normalize(&rep) != form {
            return fail("not idempotent");
        }
        if normalize(&word.conjugate_by(&conj)) != form {
            return fail("not conjugation invariant");
        }
        if rep.exponent_sum() != word.exponent_sum() {
            return fail("exponent sum changed");
        }
        if burau(&rep).trace() != burau(&word).trace() {
            return fail("Burau trace changed");
        }
    }
    Ok("500 words".into())
}

fn soundness() -> Outcome {
    let start = Instant::now();
    let bounds = CensusBounds {
        k_min: -3,
        k_max: 3,
        max_s: 3,
        max_sum: 10,
    };
    let forms: Vec<SchreierForm> = knot_forms(&bounds)
        .into_iter()
        .filter(|f| matches!(f, SchreierForm::Generic { .. }))
        .collect();
    let (mut lspace, mut overruled) = (0, 0);
    for form in &forms {
        let v = classify_form(form);
        let report = v
            .obstructions
            .as_ref()
            .ok_or_else(|| format!("{form}: no report"))?;
        match v.status {
            Status::NotLSpaceKnot if report.all_pass() => {
                return Err(format!(
                    "{form} classified not L-space but passes every condition"
                ));
            }
            Status::LSpaceKnot if !(report.ono_pass && report.hedden_pass) => {
                return Err(format!("{form} classified L-space but fails: {report}"));
            }
            Status::LSpaceKnot => lspace += 1,
            _ => {}
        }
        if v.discrepancy.is_some() {
            overruled += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{} knots, {lspace} L-space, {overruled} twisted-torus entries overruled, {elapsed:?}",
        forms.len()
    ))
}

fn torus_oracle() -> Outcome {
    for k in -3..=3i64 {
        let c = BraidWord::full_twist_power(k);
        for (tail, n) in [("1 2", 3 * k + 1), ("1 2 1 2", 3 * k + 2)] {
            let word = c.concat(&w(tail));
            let got = alexander(&word).map_err(|e| e.to_string())?;
            let want = torus_knot_alexander(3, n).map_err(|e| e.to_string())?;
            expect_eq(&format!("{word}"), &got, &want)?;
        }
    }
    Ok("k in [-3, 3]".into())
}

fn burau_sanity() -> Outcome {
    if burau(&w("1 2 1")) != burau(&w("2 1 2")) {
        return Err("braid relation fails".into());
    }
    if burau(&BraidWord::full_twist()).as_scalar().is_none() {
        return Err("image of the full twist is not scalar".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let word = random_word(&mut rng, 20);
        if &burau(&word) * &burau(&word.inverse()) != BurauMatrix::identity() {
            return Err(format!("ψ(w)ψ(w⁻¹) ≠ I for {word}"));
        }
    }
    Ok("500 words".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("figure-eight Jones", figure_eight_jones),
        ("trefoil-sum Jones", trefoil_sum_jones),
        ("trefoil-sum Alexander", trefoil_sum_alexander),
        ("unknot and unlink", unknot_and_unlink),
        ("coefficient grid", grid_agreement),
        ("generic shift identity", generic_shift),
        ("product identity", product_identity),
        ("normal form", normal_form),
        ("classification soundness", soundness),
        ("torus knot oracle", torus_oracle),
        ("Burau sanity", burau_sanity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
