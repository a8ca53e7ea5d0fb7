use std::collections::BTreeSet;

use super::AffineElement;
use crate::weyl::Side;

/// Right-minimal elements of the affine Weyl group with length at most `max_len`,
/// sorted by length then window.
pub fn grassmannian_elements(n: usize, max_len: usize) -> Vec<AffineElement> {
    let mut out = vec![AffineElement::identity(n)];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for v in &frontier {
            for i in 0..n {
                if v.has_descent(i, Side::Left) {
                    continue;
                }
                let u = v.left_mul_simple(i);
                if u.is_right_minimal() {
                    next.insert(u);
                }
            }
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Right-minimal elements of the extended affine Weyl group: `sigma^k v` for
/// every `k` and every `v` from [`grassmannian_elements`].
pub fn extended_grassmannian(n: usize, max_len: usize) -> Vec<AffineElement> {
    let base = grassmannian_elements(n, max_len);
    let mut out = Vec::with_capacity(base.len() * n);
    for v in &base {
        for k in 0..n {
            out.push(AffineElement::sigma_pow(n, k as i64).compose(v).expect("same rank"));
        }
    }
    out
}

/// Up to `cap` reduced words of the affine Weyl part of `v`, found by
/// backtracking over left descents in increasing order.
pub fn reduced_words(v: &AffineElement, cap: usize) -> Vec<Vec<usize>> {
    let (_, hat) = v.sigma_decompose();
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    walk(&hat, &mut prefix, &mut out, cap);
    out
}

fn walk(v: &AffineElement, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) {
    if out.len() >= cap {
        return;
    }
    let descents = v.descent_set(Side::Left);
    if descents.is_empty() {
        out.push(prefix.clone());
        return;
    }
    for i in descents {
        prefix.push(i);
        walk(&v.left_mul_simple(i), prefix, out, cap);
        prefix.pop();
        if out.len() >= cap {
            return;
        }
    }
}
