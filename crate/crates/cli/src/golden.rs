//! Reference values for `verify-paper`.

use std::sync::Arc;

use loop_schubert::affine::{lambda_hat, min_coset_rep, AffineElement, AffineWord, Coweight};
use loop_schubert::affschubert::Pipeline;
use loop_schubert::alcove::{
    enumerate_finite, inversion_set, max_antidominant_factor, word_to_transform, AffineTransform, CartanType,
    RootSystem,
};
use loop_schubert::demazure::{double_schubert, flag_env, single_schubert};
use loop_schubert::polyring::{PresetName, QuotientPreset, VarEnv};
use loop_schubert::weyl::Permutation;
use loop_schubert::{QPoly, Result};
use num_rational::BigRational;

pub struct Check {
    pub group: &'static str,
    pub name: String,
    pub run: Box<dyn Fn() -> Result<bool> + Send + Sync>,
}

fn check(
    group: &'static str,
    name: impl Into<String>,
    run: impl Fn() -> Result<bool> + Send + Sync + 'static,
) -> Check {
    Check { group, name: name.into(), run: Box::new(run) }
}

fn product(env: &Arc<VarEnv>, factors: &[&str]) -> Result<QPoly> {
    factors.iter().try_fold(QPoly::one(env), |acc, f| Ok(&acc * &QPoly::parse(env, f)?))
}

fn word(sigma: usize, letters: &[usize]) -> AffineWord {
    AffineWord { sigma_power: sigma, letters: letters.to_vec() }
}

fn sl3_flag() -> Vec<Check> {
    let double: [(&str, [usize; 3], &[&str]); 6] = [
        ("w0", [3, 2, 1], &["x1 - y1", "x1 - y2", "x2 - y1"]),
        ("s1s2", [3, 1, 2], &["x1 - y1", "x1 - y2"]),
        ("s2s1", [2, 3, 1], &["x1 - y1", "x2 - y1"]),
        ("s1", [2, 1, 3], &["x1 - y1"]),
        ("s2", [1, 3, 2], &["x1 + x2 - y1 - y2"]),
        ("1", [1, 2, 3], &[]),
    ];
    let single = ["x1^2 * x2", "x1^2", "x1 * x2", "x1", "x1 + x2", "1"];
    let mut out = Vec::new();
    for ((label, window, factors), s) in double.into_iter().zip(single) {
        let w = Permutation::new(window.to_vec()).expect("valid window");
        let w2 = w.clone();
        out.push(check("SL3 flag variety", format!("double {label}"), move || {
            Ok(double_schubert::<BigRational>(&w) == product(&flag_env(3), factors)?)
        }));
        out.push(check("SL3 flag variety", format!("single {label}"), move || {
            let got: QPoly = single_schubert(&w2);
            Ok(got == QPoly::parse(got.env(), s)?)
        }));
    }
    out
}

struct LoopCase {
    label: &'static str,
    lambda: [i64; 2],
    m_word: AffineWord,
    tilde_xy: Option<(i64, &'static [&'static str])>,
    tilde_x: (i64, &'static [&'static str]),
    schubert: &'static str,
}

fn signed(s: i64, f: QPoly) -> QPoly {
    if s < 0 {
        -&f
    } else {
        f
    }
}

fn sl3_loop() -> Vec<Check> {
    let cases = [
        LoopCase {
            label: "rho",
            lambda: [1, 1],
            m_word: word(0, &[0]),
            tilde_xy: Some((1, &["x1 - y1", "x1 - y2", "x3 - y2", "x2 - y3", "x2 - y1"])),
            tilde_x: (1, &["x1^2 * x2^2 * x3"]),
            schubert: "h1",
        },
        LoopCase {
            label: "-w1",
            lambda: [-1, 0],
            m_word: word(2, &[2, 0]),
            tilde_xy: Some((1, &["x1 - y1", "x2 - y1", "x1*x2 - x1*x3 + x2*x3 - x2*y2 - x2*y3 + y2*y3"])),
            tilde_x: (1, &["x1^2*x2^2 - x1^2*x2*x3 + x1*x2^2*x3"]),
            schubert: "h2",
        },
        LoopCase {
            label: "-w2",
            lambda: [0, -1],
            m_word: word(1, &[1, 0]),
            tilde_xy: Some((-1, &["x2 - x3", "x2 - y3", "x1 - y1", "x1 - y2"])),
            tilde_x: (1, &["x1^2*x2*x3 - x1^2*x2^2"]),
            schubert: "h1^2 - h2",
        },
        LoopCase {
            label: "-2w2",
            lambda: [0, -2],
            m_word: word(2, &[0, 2, 1, 0]),
            tilde_xy: None,
            tilde_x: (-1, &["x1^2*x2^2*x3", "x3 - x4", "x5 - x6", "x4 - x5"]),
            schubert: "h1^4 - 2*h1^2*h2 + h2^2",
        },
    ];
    let mut out = Vec::new();
    for case in cases {
        let case = Arc::new(case);
        let c = case.clone();
        out.push(check("SL3 loop group", format!("{} m^lambda", case.label), move || {
            let lambda = Coweight::new(3, c.lambda.to_vec())?;
            Ok(min_coset_rep(&lambda) == AffineElement::from_word(3, &c.m_word)?)
        }));
        if let Some((sign, factors)) = case.tilde_xy {
            let c = case.clone();
            out.push(check("SL3 loop group", format!("{} S~(x,y)", case.label), move || {
                let p = Pipeline::from_word(3, &c.m_word)?;
                let ideal = QuotientPreset::<BigRational>::new(PresetName::JpiMulti(3, p.m()))?;
                let got = p.tilde_xy::<BigRational>()?.embed_by_name(ideal.env())?;
                let expect = signed(sign, product(ideal.env(), factors)?);
                Ok(ideal.normal_form(&got) == ideal.normal_form(&expect))
            }));
        }
        let c = case.clone();
        out.push(check("SL3 loop group", format!("{} S~(x)", case.label), move || {
            let p = Pipeline::from_word(3, &c.m_word)?;
            let ideal = QuotientPreset::<BigRational>::new(PresetName::Jpi0Multi(3, p.m()))?;
            let got = p.tilde_x::<BigRational>()?.embed_by_name(ideal.env())?;
            let expect = signed(c.tilde_x.0, product(ideal.env(), c.tilde_x.1)?);
            Ok(ideal.normal_form(&got) == ideal.normal_form(&expect))
        }));
        let c = case.clone();
        out.push(check("SL3 loop group", format!("{} S^(h)", case.label), move || {
            let lambda = Coweight::new(3, c.lambda.to_vec())?;
            let got: QPoly = Pipeline::for_coweight(&lambda_hat(&lambda))?.schubert_h()?;
            Ok(got == QPoly::parse(&VarEnv::h(3), c.schubert)?)
        }));
    }
    out
}

/// Label, coweight if printed, sigma power, letters, polynomial.
type Sl4Case = (&'static str, Option<[i64; 3]>, usize, &'static [usize], &'static str);

fn sl4_loop() -> Vec<Check> {
    let cases: [Sl4Case; 8] = [
        ("-w1", Some([-1, 0, 0]), 3, &[2, 3, 0], "h3"),
        ("-w2", Some([0, -1, 0]), 2, &[0, 3, 1, 0], "h2^2 - h1*h3"),
        ("-w3", Some([0, 0, -1]), 1, &[2, 1, 0], "h1^3 - 2*h1*h2 + h3"),
        ("rho", Some([1, 1, 1]), 2, &[2, 1, 3, 0], "h1^2*h2 - h2^2"),
        ("sigma^2 s1 s3 s0", None, 2, &[1, 3, 0], "h1*h2 - h3"),
        ("sigma^2 s3 s0", None, 2, &[3, 0], "h2"),
        ("sigma^2 s1 s0", None, 2, &[1, 0], "h1^2 - h2"),
        ("sigma^2 s0", None, 2, &[0], "h1"),
    ];
    cases
        .into_iter()
        .map(|(label, lambda, sigma, letters, expect)| {
            check("SL4 loop group", label, move || {
                let w = word(sigma, letters);
                if let Some(l) = lambda {
                    if min_coset_rep(&Coweight::new(4, l.to_vec())?) != AffineElement::from_word(4, &w)? {
                        return Ok(false);
                    }
                }
                let got: QPoly = Pipeline::from_word(4, &w)?.schubert_h()?;
                Ok(got == QPoly::parse(&VarEnv::h(4), expect)?)
            })
        })
        .collect()
}

fn lambda_hat_table() -> Vec<Check> {
    let table: [[i64; 5]; 5] = [[1, 0, 0, 0, 0], [1, 2, 1, 0, 0], [1, 2, 3, 2, 1], [0, 0, 1, 2, 1], [0, 0, 0, 0, 1]];
    table
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            check("lambda-hat at n = 6", format!("-w{}", i + 1), move || {
                let mut c = vec![0; 5];
                c[i] = -1;
                Ok(lambda_hat(&Coweight::new(6, c)?).to_alpha().as_deref() == Some(&row[..]))
            })
        })
        .collect()
}

fn alcoves() -> Vec<Check> {
    let mut out = vec![check("alcove factorization", "(a) finite times translation", || {
        for t in [CartanType::A(2), CartanType::A(3), CartanType::B(2), CartanType::C(2)] {
            if !closed_form_holds(&RootSystem::of_type(t))? {
                return Ok(false);
            }
        }
        Ok(true)
    })];
    for (label, t, letters) in
        [("(b) A2 s1 s0", CartanType::A(2), vec![1, 0]), ("(c) C2 s0 s1 s0", CartanType::C(2), vec![0, 1, 0])]
    {
        out.push(check("alcove factorization", label, move || {
            let rs = RootSystem::of_type(t);
            let x = word_to_transform(&letters, &rs)?;
            Ok(max_antidominant_factor(&x, &rs)?.lambda == [0, 1])
        }));
    }
    out
}

/// `x = w t_{-mu}` with `mu` dominant, coefficients at most 2: the factor is
/// `mu - sum_{w alpha_i < 0} varpi_i` whenever `x` is minimal in its coset.
fn closed_form_holds(rs: &RootSystem) -> Result<bool> {
    let r = rs.rank();
    for (w, _) in enumerate_finite(rs, usize::MAX) {
        let inv = inversion_set(&w, rs);
        let descents: Vec<usize> = (0..r)
            .filter(|&i| {
                inv.iter().any(|&k| rs.positive_roots()[k].iter().enumerate().all(|(j, &c)| c == i64::from(i == j)))
            })
            .collect();
        let mut mu = vec![0i64; r];
        loop {
            let minimal = descents.iter().all(|&i| mu[i] > 0);
            if minimal {
                let neg: Vec<i64> = mu.iter().map(|v| -v).collect();
                let x = w.compose(&AffineTransform::translation(&neg));
                let mut expect = mu.clone();
                for &i in &descents {
                    expect[i] -= 1;
                }
                if max_antidominant_factor(&x, rs)?.lambda != expect {
                    return Ok(false);
                }
            }
            if !next_box(&mut mu, 2) {
                break;
            }
        }
    }
    Ok(true)
}

fn next_box(v: &mut [i64], max: i64) -> bool {
    for c in v.iter_mut() {
        if *c < max {
            *c += 1;
            return true;
        }
        *c = 0;
    }
    false
}

pub fn suite() -> Vec<Check> {
    let mut out = sl3_flag();
    out.extend(sl3_loop());
    out.extend(sl4_loop());
    out.extend(lambda_hat_table());
    out.extend(alcoves());
    out
}
