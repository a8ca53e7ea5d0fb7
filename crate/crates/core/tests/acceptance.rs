//! One line per acceptance criterion, with wall-clock time against its budget.
//! Runs without the test harness so the lines are always shown.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use loop_schubert::affine::{lambda_hat, min_coset_rep, shimozono_lambda_hat, AffineElement, AffineWord, Coweight};
use loop_schubert::affschubert::{basis_check, theorem_a_pairs, verify_theorem_a, Pipeline, SchubertCache};
use loop_schubert::alcove::{max_antidominant_factor, word_to_transform, CartanType, RootSystem};
use loop_schubert::demazure::{divided_diff, double_schubert, flag_env, single_schubert, Axis, DividedDiffSpec};
use loop_schubert::polyring::{Monomial, PresetName, QuotientPreset, VarEnv};
use loop_schubert::weyl::Permutation;
use loop_schubert::QPoly;
use num_rational::BigRational;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(env: &Arc<VarEnv>, text: &str) -> QPoly {
    QPoly::parse(env, text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Product of factors, each in the linear text format.
fn product(env: &Arc<VarEnv>, factors: &[&str]) -> QPoly {
    factors.iter().fold(QPoly::one(env), |acc, f| &acc * &poly(env, f))
}

fn word(sigma: usize, letters: &[usize]) -> AffineWord {
    AffineWord { sigma_power: sigma, letters: letters.to_vec() }
}

fn cw(n: usize, c: &[i64]) -> Coweight {
    Coweight::new(n, c.to_vec()).unwrap()
}

fn criterion_1() -> Check {
    let env = flag_env(3);
    // Windows; the printed s1s2 and s2s1 labels compose in the opposite order.
    let double: [([usize; 3], &[&str]); 6] = [
        // printed with x2 - y2 as the last factor
        ([3, 2, 1], &["x1 - y1", "x1 - y2", "x2 - y1"]),
        ([3, 1, 2], &["x1 - y1", "x1 - y2"]),
        ([2, 3, 1], &["x1 - y1", "x2 - y1"]),
        ([2, 1, 3], &["x1 - y1"]),
        ([1, 3, 2], &["x1 + x2 - y1 - y2"]),
        ([1, 2, 3], &[]),
    ];
    let single = ["x1^2 * x2", "x1^2", "x1 * x2", "x1", "x1 + x2", "1"];
    for ((w, factors), s) in double.iter().zip(single) {
        let w = Permutation::new(w.to_vec()).unwrap();
        let got: QPoly = double_schubert(&w);
        ensure(got == product(&env, factors), || format!("double {w}: {got}"))?;
        let got: QPoly = single_schubert(&w);
        ensure(got == poly(&got.env().clone(), s), || format!("single {w}: {got}"))?;
    }
    Ok(())
}

struct Sl3Case {
    lambda: [i64; 2],
    m_word: AffineWord,
    tilde_xy: Vec<&'static str>,
    tilde_xy_sign: i64,
    tilde_x: Vec<&'static str>,
    tilde_x_sign: i64,
    schubert: &'static str,
}

fn criterion_2() -> Check {
    let cases = [
        Sl3Case {
            lambda: [1, 1],
            m_word: word(0, &[0]),
            tilde_xy: vec!["x1 - y1", "x1 - y2", "x3 - y2", "x2 - y3", "x2 - y1"],
            tilde_xy_sign: 1,
            tilde_x: vec!["x1^2 * x2^2 * x3"],
            tilde_x_sign: 1,
            schubert: "h1",
        },
        Sl3Case {
            lambda: [-1, 0],
            m_word: word(2, &[2, 0]),
            // printed with x1 - y2 as the first factor
            tilde_xy: vec!["x1 - y1", "x2 - y1", "x1*x2 - x1*x3 + x2*x3 - x2*y2 - x2*y3 + y2*y3"],
            tilde_xy_sign: 1,
            // printed with x2 * x2^2 * x3 as the last term
            tilde_x: vec!["x1^2*x2^2 - x1^2*x2*x3 + x1*x2^2*x3"],
            tilde_x_sign: 1,
            schubert: "h2",
        },
        Sl3Case {
            lambda: [0, -1],
            m_word: word(1, &[1, 0]),
            tilde_xy: vec!["x2 - x3", "x2 - y3", "x1 - y1", "x1 - y2"],
            tilde_xy_sign: -1,
            tilde_x: vec!["x1^2*x2*x3 - x1^2*x2^2"],
            tilde_x_sign: 1,
            schubert: "h1^2 - h2",
        },
        Sl3Case {
            lambda: [0, -2],
            m_word: word(2, &[0, 2, 1, 0]),
            tilde_xy: vec![],
            tilde_xy_sign: 0,
            tilde_x: vec!["x1^2*x2^2*x3", "x3 - x4", "x5 - x6", "x4 - x5"],
            tilde_x_sign: -1,
            schubert: "h1^4 - 2*h1^2*h2 + h2^2",
        },
    ];
    for case in cases {
        let lambda = cw(3, &case.lambda);
        let printed = AffineElement::from_word(3, &case.m_word).unwrap();
        ensure(min_coset_rep(&lambda) == printed, || format!("m^{lambda} differs from {}", case.m_word))?;
        let p = Pipeline::from_word(3, &case.m_word).unwrap();
        let sign = |s: i64, f: QPoly| if s < 0 { -&f } else { f };
        if !case.tilde_xy.is_empty() {
            let ideal = QuotientPreset::<BigRational>::new(PresetName::JpiMulti(3, p.m())).unwrap();
            let got = p.tilde_xy::<BigRational>().unwrap();
            let expect = ideal.normal_form(
                &sign(case.tilde_xy_sign, product(ideal.env(), &case.tilde_xy)).embed_by_name(ideal.env()).unwrap(),
            );
            ensure(ideal.normal_form(&got.embed_by_name(ideal.env()).unwrap()) == expect, || {
                format!("S~(x,y) for {lambda}: {got}")
            })?;
        }
        let ideal = QuotientPreset::<BigRational>::new(PresetName::Jpi0Multi(3, p.m())).unwrap();
        let got = p.tilde_x::<BigRational>().unwrap().embed_by_name(ideal.env()).unwrap();
        let expect = sign(case.tilde_x_sign, product(ideal.env(), &case.tilde_x));
        ensure(ideal.normal_form(&got) == ideal.normal_form(&expect), || format!("S~(x) for {lambda}: {got}"))?;
        let h = p.schubert_h::<BigRational>().unwrap();
        ensure(h == poly(&VarEnv::h(3), case.schubert), || format!("S^ for {lambda}: {h}"))?;
        ensure(p.schubert_h_literal::<BigRational>().unwrap() == h, || format!("literal route for {lambda}"))?;
    }
    Ok(())
}

/// Coweight if printed, sigma power, letters, polynomial.
type Sl4Case = (Option<[i64; 3]>, usize, &'static [usize], &'static str);

fn criterion_3() -> Check {
    let cases: [Sl4Case; 8] = [
        (Some([-1, 0, 0]), 3, &[2, 3, 0], "h3"),
        (Some([0, -1, 0]), 2, &[0, 3, 1, 0], "h2^2 - h1*h3"),
        (Some([0, 0, -1]), 1, &[2, 1, 0], "h1^3 - 2*h1*h2 + h3"),
        (Some([1, 1, 1]), 2, &[2, 1, 3, 0], "h1^2*h2 - h2^2"),
        (None, 2, &[1, 3, 0], "h1*h2 - h3"),
        (None, 2, &[3, 0], "h2"),
        (None, 2, &[1, 0], "h1^2 - h2"),
        (None, 2, &[0], "h1"),
    ];
    let henv = VarEnv::h(4);
    for (lambda, sigma, letters, expect) in cases {
        let w = word(sigma, letters);
        let x = AffineElement::from_word(4, &w).unwrap();
        ensure(x.is_right_minimal() && x.length() == letters.len(), || {
            format!("{w} is not a reduced coset representative")
        })?;
        if let Some(l) = lambda {
            ensure(min_coset_rep(&cw(4, &l)) == x, || format!("m^lambda for {l:?}"))?;
        }
        let h = Pipeline::from_word(4, &w).unwrap().schubert_h::<BigRational>().unwrap();
        ensure(h == poly(&henv, expect), || format!("{w}: {h}"))?;
    }
    Ok(())
}

fn closed_form_hat(n: usize, i: usize) -> Vec<i64> {
    let k = i.min(n - i);
    let mut a = vec![0i64; n - 1];
    a[i - 1] = k as i64;
    for j in 1..k {
        a[i - 1 - j] += (k - j) as i64;
        a[i - 1 + j] += (k - j) as i64;
    }
    a
}

fn criterion_4() -> Check {
    for n in 2..=8 {
        for i in 1..n {
            let mut c = vec![0i64; n - 1];
            c[i - 1] = -1;
            let hat = lambda_hat(&cw(n, &c)).to_alpha();
            ensure(hat.as_deref() == Some(&closed_form_hat(n, i)[..]), || format!("n={n} i={i}: {hat:?}"))?;
            let s = shimozono_lambda_hat(n, i).unwrap().to_alpha();
            ensure(s == hat, || format!("closed form n={n} i={i}: {s:?}"))?;
        }
    }
    let table: [[i64; 5]; 5] = [[1, 0, 0, 0, 0], [1, 2, 1, 0, 0], [1, 2, 3, 2, 1], [0, 0, 1, 2, 1], [0, 0, 0, 0, 1]];
    for (i, row) in table.iter().enumerate() {
        let mut c = vec![0i64; 5];
        c[i] = -1;
        let hat = lambda_hat(&cw(6, &c)).to_alpha().unwrap();
        ensure(hat == row, || format!("n=6 row {}: {hat:?}", i + 1))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    for n in [3, 4] {
        let cache = SchubertCache::<BigRational>::new(usize::MAX);
        let pairs = theorem_a_pairs(n, 8);
        ensure(!pairs.is_empty(), || format!("no pairs for n={n}"))?;
        for (l, m) in pairs {
            let r = verify_theorem_a(&l, &m, &cache).map_err(|e| e.to_string())?;
            ensure(r.identity_holds == Some(true), || format!("n={n} lambda={l} mu={m}: {r:?}"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    catch_unwind(common::closed_form_for_finite_times_translation).map_err(|_| "closed form".to_string())?;
    for (t, letters) in [("A2", vec![1, 0]), ("C2", vec![0, 1, 0])] {
        let rs = RootSystem::of_type(t.parse::<CartanType>().unwrap());
        let x = word_to_transform(&letters, &rs).unwrap();
        let f = max_antidominant_factor(&x, &rs).map_err(|e| e.to_string())?;
        ensure(f.lambda == [0, 1], || format!("{t}: {:?}", f.lambda))?;
    }
    Ok(())
}

fn dd(f: &QPoly, axis: Axis, i: usize) -> QPoly {
    divided_diff(f, DividedDiffSpec::simple(axis, i, false)).unwrap()
}

fn operator_identities() {
    let ideal = QuotientPreset::<BigRational>::new(PresetName::J(4)).unwrap();
    for w in Permutation::all(4) {
        let s: QPoly = double_schubert(&w);
        for e in [[0u16, 0, 0, 0], [1, 0, 0, 0], [2, 1, 0, 0], [0, 1, 0, 2]] {
            let mut exps = vec![0u16; 8];
            exps[4..].copy_from_slice(&e);
            let f = s.mul_monomial(&Monomial::from_exps(&exps), &BigRational::from_integer(1.into()));
            for axis in [Axis::X, Axis::Y] {
                for i in 1..4 {
                    assert!(dd(&dd(&f, axis, i), axis, i).is_zero());
                }
                for i in 1..3 {
                    let a = dd(&dd(&dd(&f, axis, i), axis, i + 1), axis, i);
                    let b = dd(&dd(&dd(&f, axis, i + 1), axis, i), axis, i + 1);
                    assert_eq!(a, b);
                }
            }
            let g = f.embed_by_name(ideal.env()).unwrap();
            let nf = ideal.normal_form(&g);
            assert_eq!(ideal.normal_form(&nf), nf);
        }
    }
}

fn criterion_7() -> Check {
    let suites: [(&str, fn()); 10] = [
        ("operator identities", operator_identities),
        ("recurrences and transpose", common::schubert_recurrences_and_transpose),
        ("buchberger", common::buchberger_all_presets),
        ("reduced-word independence", common::reduced_word_independence),
        ("length definitions", common::length_definitions_agree),
        ("maximality oracle", common::maximal_factor_matches_brute_force),
        ("box partition", common::box_partition_and_counts),
        ("weak order and boxes", common::weak_order_and_boxes_rank_two),
        ("inversion sets", common::inversion_sets_give_left_weak_order),
        ("finite weak order", common::finite_weak_order_matches_affine_module),
    ];
    for (name, f) in suites {
        catch_unwind(f).map_err(|_| name.to_string())?;
    }
    Ok(())
}

fn partitions_bounded(l: usize, k: usize) -> usize {
    fn go(l: usize, k: usize) -> usize {
        if l == 0 {
            return 1;
        }
        (1..=k.min(l)).map(|p| go(l - p, p)).sum()
    }
    go(l, k)
}

fn criterion_8() -> Check {
    let counts = basis_check::<BigRational>(3, 6).map_err(|e| e.to_string())?;
    for c in counts {
        let expect = partitions_bounded(c.length, 2);
        ensure(c.rank == c.classes && c.classes == expect && c.dimension == expect, || {
            format!("{c:?}, expected {expect}")
        })?;
    }
    Ok(())
}

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

fn main() {
    let criteria: [Criterion; 8] = [
        ("SL3 double and single Schubert tables", 1, criterion_1),
        ("SL3 affine Schubert table", 5, criterion_2),
        ("SL4 table", 60, criterion_3),
        ("lambda-hat closed form", 5, criterion_4),
        ("factorization theorem closure", 600, criterion_5),
        ("alcove examples", 10, criterion_6),
        ("property suites", 900, criterion_7),
        ("Bott basis check", 120, criterion_8),
    ];
    let mut failed = Vec::new();
    for (k, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome =
            outcome.and_then(|()| ensure(took <= Duration::from_secs(budget), || format!("over budget of {budget} s")));
        match &outcome {
            Ok(()) => println!("criterion {}: PASS ({:.2} s) {name}", k + 1, took.as_secs_f64()),
            Err(e) => {
                println!("criterion {}: FAIL ({:.2} s) {name}: {e}", k + 1, took.as_secs_f64());
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
