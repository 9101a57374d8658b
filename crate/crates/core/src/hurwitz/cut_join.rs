//! Cut-and-join recursion for connected simple Hurwitz numbers.
//!
//! For a fixed `σ` of cycle type `η`, let `W(η, r)` be the number of
//! transposition words `(τ_1, .., τ_r)` with `τ_r ··· τ_1 σ = e` and
//! `<σ, τ_i>` transitive. Peeling off `τ_1` and setting `σ' = τ_1 σ`:
//!
//! * join: `τ_1` links cycles of lengths `i` and `j`, in `i j` ways, and
//!   `σ'` has the merged cycle. Transitivity is unaffected.
//! * cut: `τ_1` splits a `k`-cycle into `m` and `k - m` (in `k` ways, or
//!   `k/2` when `m = k/2`). Either the remaining word is still transitive
//!   for `σ'`, or it has exactly two orbits, one through each new cycle,
//!   and the word is a shuffle of two independent transitive words.
//!
//! The connected Hurwitz number is `W(η, r) / z_η` with `z_η` the
//! centralizer order, i.e. the class count `|C_η| W(η, r)` over `d!`.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::rational::binomial;

type Key = (Vec<usize>, usize);

static MEMO: LazyLock<RwLock<HashMap<Key, BigUint>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn canonical(mut parts: Vec<usize>) -> Vec<usize> {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// `W(η, r)` for `parts` sorted non-increasing.
pub(crate) fn words_for_representative(parts: &[usize], r: usize) -> BigUint {
    let d: usize = parts.iter().sum();
    let l = parts.len();
    // Riemann–Hurwitz: r = 2g + d - 2 + l with g >= 0
    if r + 2 < d + l || (r + d - l) % 2 == 1 {
        return BigUint::zero();
    }
    if r == 0 {
        // only d = 1, l = 1 survives the bound above
        return BigUint::from(1u32);
    }
    let key = (parts.to_vec(), r);
    if let Some(v) = MEMO.read().expect("memo lock").get(&key) {
        return v.clone();
    }
    let value = recurse(parts, r);
    MEMO.write()
        .expect("memo lock")
        .entry(key)
        .or_insert_with(|| value.clone());
    value
}

fn recurse(parts: &[usize], r: usize) -> BigUint {
    let l = parts.len();
    let mut total = BigUint::zero();

    for p in 0..l {
        for q in p + 1..l {
            let (i, j) = (parts[p], parts[q]);
            let mut merged: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|&(idx, _)| idx != p && idx != q)
                .map(|(_, &x)| x)
                .collect();
            merged.push(i + j);
            total += words_for_representative(&canonical(merged), r - 1) * (i * j);
        }
    }

    for p in 0..l {
        let k = parts[p];
        let others: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != p)
            .map(|(_, &x)| x)
            .collect();
        for m in 1..=k / 2 {
            let ways = if 2 * m == k { k / 2 } else { k };

            let mut split = others.clone();
            split.push(m);
            split.push(k - m);
            let mut term = words_for_representative(&canonical(split), r - 1);

            // two orbits: the m-cycle with the cycles in `mask`, the rest with k - m
            for mask in 0u32..(1 << others.len()) {
                let mut left = vec![m];
                let mut right = vec![k - m];
                for (idx, &x) in others.iter().enumerate() {
                    if mask & (1 << idx) != 0 {
                        left.push(x);
                    } else {
                        right.push(x);
                    }
                }
                let left = canonical(left);
                let right = canonical(right);
                for r_left in 0..r {
                    let wl = words_for_representative(&left, r_left);
                    if wl.is_zero() {
                        continue;
                    }
                    let wr = words_for_representative(&right, r - 1 - r_left);
                    if wr.is_zero() {
                        continue;
                    }
                    term += binomial(r - 1, r_left) * wl * wr;
                }
            }
            total += term * ways;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(words_for_representative(&[1], 0), BigUint::from(1u32));
        assert_eq!(words_for_representative(&[1], 2), BigUint::zero());
        assert_eq!(words_for_representative(&[2], 1), BigUint::from(1u32));
        assert_eq!(words_for_representative(&[2], 3), BigUint::from(1u32));
        assert_eq!(words_for_representative(&[1, 1], 2), BigUint::from(1u32));
        // 3 factorizations of a 3-cycle into two transpositions
        assert_eq!(words_for_representative(&[3], 2), BigUint::from(3u32));
        // 24 tuples over a class of 3 transpositions
        assert_eq!(words_for_representative(&[2, 1], 3), BigUint::from(8u32));
    }

    #[test]
    fn minimal_factorizations_of_a_cycle() {
        // a d-cycle has d^{d-2} minimal transitive factorizations
        for d in 1..=8usize {
            assert_eq!(
                words_for_representative(&[d], d - 1),
                BigUint::from(d).pow((d as u32).saturating_sub(2)),
                "d = {d}"
            );
        }
    }
}
