//! Exhaustive checks shared by the property suite and the acceptance target.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use loop_schubert::affine::{grassmannian_elements, reduced_words, AffineElement, AffineWord};
use loop_schubert::affschubert::{word_independence_check, Pipeline};
use loop_schubert::alcove::{
    box_membership, enumerate_affine, enumerate_finite, inversion_set, is_minimal_in_coset, length_by_separation,
    max_antidominant_factor, translation_length, AffineTransform, CartanType, RootSystem,
};
use loop_schubert::demazure::{divided_diff, double_schubert, double_schubert_left, Axis, DividedDiffSpec};
use loop_schubert::polyring::{PresetName, QuotientPreset};
use loop_schubert::weyl::{Permutation, Side};
use loop_schubert::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn dd(f: &QPoly, axis: Axis, i: usize) -> QPoly {
    divided_diff(f, DividedDiffSpec::simple(axis, i, false)).unwrap()
}

pub fn schubert_recurrences_and_transpose() {
    for n in 2..=4 {
        let swap: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
        for w in Permutation::all(n) {
            let s = double_schubert::<BigRational>(&w);
            assert_eq!(s, double_schubert_left(&w), "{w}");
            let t = double_schubert::<BigRational>(&w.inverse()).rename(&swap);
            assert_eq!(s, if w.length() % 2 == 1 { -&t } else { t }, "{w}");
            for i in 1..n {
                let d = dd(&s, Axis::X, i);
                let ws = w.right_mul_simple(i);
                if ws.length() < w.length() {
                    assert_eq!(d, double_schubert(&ws));
                } else {
                    assert!(d.is_zero());
                }
            }
        }
    }
}

pub fn buchberger_all_presets() {
    for n in 2..=5 {
        let mut names = vec![PresetName::J(n), PresetName::J0(n), PresetName::Jpi(n), PresetName::Jpi0(n)];
        for m in 1..=6 {
            names.push(PresetName::JpiMulti(n, m));
            names.push(PresetName::Jpi0Multi(n, m));
        }
        for name in names {
            let ideal = QuotientPreset::<BigRational>::new(name).unwrap();
            assert!(ideal.buchberger_failures().is_empty(), "{name}");
        }
    }
}

pub fn reduced_word_independence() {
    for (n, max_len) in [(3, 6), (4, 6)] {
        for v in grassmannian_elements(n, max_len) {
            let words = reduced_words(&v, 200);
            let mut outputs = BTreeSet::new();
            for letters in &words {
                let p = Pipeline::from_word(n, &AffineWord { sigma_power: 0, letters: letters.clone() }).unwrap();
                outputs.insert(p.schubert_h::<BigRational>().unwrap().to_string());
            }
            assert_eq!(outputs.len(), 1, "{v}: {words:?}");
            let lambda = v.translation_part();
            assert!(word_independence_check::<BigRational>(&lambda, 20).unwrap());
        }
    }
}

pub fn length_definitions_agree() {
    for n in 3..=4 {
        let rs = RootSystem::of_type(CartanType::A(n - 1));
        let bfs = enumerate_affine(&rs, 6);
        let mut seen = 0;
        for (x, depth) in &bfs {
            let word = bfs_word(x, &rs, &bfs);
            let v = AffineElement::from_word(n, &AffineWord { sigma_power: 0, letters: word.clone() }).unwrap();
            assert_eq!(v.length(), *depth);
            assert_eq!(v.reduced_word().letters.len(), *depth);
            assert_eq!(length_by_separation(x, &rs), *depth);
            seen += 1;
        }
        assert!(seen > 50);
    }
}

/// A reduced word for `x`, found by descending through the BFS lengths.
fn bfs_word(x: &AffineTransform, rs: &RootSystem, bfs: &[(AffineTransform, usize)]) -> Vec<usize> {
    let depth: HashMap<&AffineTransform, usize> = bfs.iter().map(|(t, d)| (t, *d)).collect();
    let mut cur = x.clone();
    let mut word = Vec::new();
    while depth[&cur] > 0 {
        let i = (0..=rs.rank())
            .find(|&i| {
                let y = cur.compose(&AffineTransform::simple(rs, i).unwrap());
                depth.get(&y).is_some_and(|&d| d + 1 == depth[&cur])
            })
            .unwrap();
        word.push(i);
        cur = cur.compose(&AffineTransform::simple(rs, i).unwrap());
    }
    word.reverse();
    word
}

fn rank_le3_types() -> Vec<CartanType> {
    vec![
        CartanType::A(2),
        CartanType::B(2),
        CartanType::C(2),
        CartanType::G2,
        CartanType::A(3),
        CartanType::B(3),
        CartanType::C(3),
    ]
}

/// Lengths of alcoves by BFS depth, keyed by the image of the barycenter.
fn alcove_lengths(rs: &RootSystem, max_len: usize) -> HashMap<Vec<BigRational>, usize> {
    let p = loop_schubert::alcove::alcove_barycenter(rs);
    enumerate_affine(rs, max_len).into_iter().map(|(x, d)| (x.apply(&p), d)).collect()
}

pub fn maximal_factor_matches_brute_force() {
    for t in rank_le3_types() {
        let rs = RootSystem::of_type(t);
        let p = loop_schubert::alcove::alcove_barycenter(&rs);
        let lengths = alcove_lengths(&rs, 12);
        let len_of = |x: &AffineTransform| lengths.get(&x.apply(&p)).copied();
        let mut checked = 0;
        for (x, lx) in enumerate_affine(&rs, 6) {
            if !is_minimal_in_coset(&x, &rs) {
                continue;
            }
            let f = max_antidominant_factor(&x, &rs).unwrap();
            let mut valid = Vec::new();
            let mut mu = vec![0i64; rs.rank()];
            'outer: loop {
                let neg: Vec<i64> = mu.iter().map(|v| -v).collect();
                let y = x.compose(&AffineTransform::translation(&mu));
                if let (Some(ly), Some(lt)) = (len_of(&y), len_of(&AffineTransform::translation(&neg))) {
                    if ly + lt == lx {
                        valid.push(mu.clone());
                    }
                }
                for c in mu.iter_mut() {
                    *c += 1;
                    if *c <= lx as i64 {
                        continue 'outer;
                    }
                    *c = 0;
                }
                break;
            }
            assert!(valid.contains(&f.lambda), "{t} {x:?}");
            for mu in &valid {
                assert!(mu.iter().zip(&f.lambda).all(|(a, b)| a <= b), "{t}: {mu:?} vs {:?}", f.lambda);
            }
            checked += 1;
        }
        assert!(checked > 3, "{t}");
    }
}

pub fn closed_form_for_finite_times_translation() {
    for t in [CartanType::A(2), CartanType::A(3), CartanType::B(2), CartanType::C(2)] {
        let rs = RootSystem::of_type(t);
        let n = rs.rank();
        for (w, _) in enumerate_finite(&rs, 100) {
            let inv = inversion_set(&w, &rs);
            let simple_inv: Vec<usize> =
                (0..n).filter(|&i| inv.iter().any(|&k| rs.positive_roots()[k] == unit(n, i))).collect();
            for mu in boxes(n, 2) {
                let neg: Vec<i64> = mu.iter().map(|v| -v).collect();
                let x = w.compose(&AffineTransform::translation(&neg));
                if simple_inv.iter().any(|&i| mu[i] == 0) {
                    assert!(!is_minimal_in_coset(&x, &rs));
                    continue;
                }
                let mut expect = mu.clone();
                for &i in &simple_inv {
                    expect[i] -= 1;
                }
                assert_eq!(max_antidominant_factor(&x, &rs).unwrap().lambda, expect, "{t}");
            }
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

fn boxes(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..=max).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

pub fn box_partition_and_counts() {
    for t in [CartanType::A(2), CartanType::B(2), CartanType::C(2), CartanType::G2, CartanType::A(3)] {
        let rs = RootSystem::of_type(t);
        let order = enumerate_finite(&rs, 100).len() as i64;
        let per_box = order / rs.connection_index();
        let mut in_origin = 0;
        for (y, _) in enumerate_affine(&rs, 12) {
            let lam = box_membership(&y, &rs);
            let q = y.apply(&loop_schubert::alcove::alcove_barycenter(&rs));
            for (l, v) in lam.iter().zip(&q) {
                assert!(rat(*l) < *v && *v < rat(l + 1));
            }
            if q.iter().all(|v| *v > BigRational::zero()) {
                assert!(lam.iter().all(|&l| l >= 0));
            }
            if lam.iter().all(|&l| l == 0) {
                in_origin += 1;
            }
        }
        assert_eq!(in_origin, per_box, "{t}");
    }
}

pub fn weak_order_and_boxes_rank_two() {
    for t in [CartanType::A(2), CartanType::B(2), CartanType::G2] {
        let rs = RootSystem::of_type(t);
        let p = loop_schubert::alcove::alcove_barycenter(&rs);
        let lengths = alcove_lengths(&rs, 14);
        let len_of = |x: &AffineTransform| lengths[&x.apply(&p)];
        for (y, ly) in enumerate_affine(&rs, 6) {
            if !y.apply(&p).iter().all(|v| *v > BigRational::zero()) {
                continue;
            }
            let lam = box_membership(&y, &rs);
            for mu in boxes(rs.rank(), 3) {
                let t_mu = AffineTransform::translation(&mu);
                let lt = translation_length(&mu, &rs);
                let below = lt <= ly && lt + len_of(&t_mu.inverse().compose(&y)) == ly;
                let dominated = mu.iter().zip(&lam).all(|(a, b)| a <= b);
                assert_eq!(below, dominated, "{t} {mu:?} {lam:?}");
            }
        }
    }
}

pub fn inversion_sets_give_left_weak_order() {
    for t in [CartanType::A(2), CartanType::B(2), CartanType::G2, CartanType::A(3), CartanType::B(3)] {
        let rs = RootSystem::of_type(t);
        let group = enumerate_finite(&rs, 100);
        let len: HashMap<&AffineTransform, usize> = group.iter().map(|(w, l)| (w, *l)).collect();
        for (y, ly) in &group {
            let iy: BTreeSet<usize> = inversion_set(y, &rs).into_iter().collect();
            assert_eq!(iy.len(), *ly);
            for (w, lw) in &group {
                let iw: BTreeSet<usize> = inversion_set(w, &rs).into_iter().collect();
                let u = w.compose(&y.inverse());
                let left = len[&u] + ly == *lw;
                assert_eq!(iy.is_subset(&iw), left, "{t}");
            }
        }
    }
}

pub fn finite_weak_order_matches_affine_module() {
    for n in 3..=4 {
        for v in grassmannian_elements(n, 4) {
            for u in grassmannian_elements(n, 4) {
                let leq = loop_schubert::affine::weak_order_leq(&u, &v, Side::Left);
                let rest = v.compose(&u.inverse()).unwrap();
                assert_eq!(leq, rest.length() + u.length() == v.length());
            }
        }
    }
}
