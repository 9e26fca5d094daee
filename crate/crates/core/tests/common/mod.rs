//! Independent brute-force oracles used by the integration tests. Nothing
//! here calls into the library except to read partition parts.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashMap;

pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|c| parts.iter().filter(|&&x| x >= c).count() as u32).collect()
}

pub fn chi(parts: &[u32]) -> u64 {
    match (parts.first(), parts.last()) {
        (Some(&a), Some(&b)) => (a - b) as u64 + parts.len() as u64,
        _ => 0,
    }
}

pub fn is_p_regular(parts: &[u32], p: u32) -> bool {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &x in parts {
        *counts.entry(x).or_default() += 1;
    }
    counts.values().all(|&c| c < p)
}

pub fn hook_lengths(parts: &[u32]) -> Vec<u32> {
    let conj = conjugate(parts);
    let mut out = Vec::new();
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len as usize {
            out.push(len - c as u32 + conj[c] - r as u32 - 1);
        }
    }
    out
}

/// Removable rim p-hooks correspond to cells of hook length `p`.
pub fn is_big(parts: &[u32], p: u32) -> bool {
    chi(parts) <= p as u64 && parts.len() >= 2 && hook_lengths(parts).contains(&p)
}

/// Standard tableaux as rows of entries `1..=m`, filled in increasing order.
pub fn standard_tableaux(parts: &[u32]) -> Vec<Vec<Vec<u8>>> {
    fn fill(parts: &[u32], next: u8, m: u8, rows: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if next > m {
            out.push(rows.clone());
            return;
        }
        for r in 0..parts.len() {
            let len = rows[r].len();
            if len < parts[r] as usize && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                fill(parts, next + 1, m, rows, out);
                rows[r].pop();
            }
        }
    }
    let m: u32 = parts.iter().sum();
    let mut out = Vec::new();
    fill(parts, 1, m as u8, &mut vec![Vec::new(); parts.len()], &mut out);
    out
}

fn signed_permutations(items: &[u8]) -> Vec<(Vec<u8>, i64)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1)];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for (mut tail, s) in signed_permutations(&rest) {
            tail.insert(0, head);
            out.push((tail, s * sign));
        }
    }
    out
}

/// Polytabloid of `t` as a map from tabloid (row of each entry) to coefficient.
pub fn polytabloid(t: &[Vec<u8>]) -> HashMap<Vec<u8>, i64> {
    let m: usize = t.iter().map(Vec::len).sum();
    let width = t.first().map(Vec::len).unwrap_or(0);
    let columns: Vec<Vec<u8>> = (0..width).map(|c| t.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect();
    let mut acc: Vec<(Vec<u8>, i64)> = vec![(vec![0u8; m], 1)];
    for col in &columns {
        let mut next = Vec::new();
        for (rows, sign) in &acc {
            for (perm, s) in signed_permutations(col) {
                let mut rows = rows.clone();
                for (r, &x) in perm.iter().enumerate() {
                    rows[x as usize - 1] = r as u8;
                }
                next.push((rows, sign * s));
            }
        }
        acc = next;
    }
    let mut out = HashMap::new();
    for (k, s) in acc {
        *out.entry(k).or_insert(0) += s;
    }
    out
}

pub fn rank_mod_p(mut a: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = a.first().map(Vec::len).unwrap_or(0);
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let s = inv(a[rank][c]);
        for x in a[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `(dim S^lambda, rank of the Gram matrix over GF(p))`.
pub fn specht_gram_rank(parts: &[u32], p: u32) -> (usize, usize) {
    let polys: Vec<_> = standard_tableaux(parts).iter().map(|t| polytabloid(t)).collect();
    let gram: Vec<Vec<i64>> = polys
        .iter()
        .map(|a| polys.iter().map(|b| a.iter().map(|(k, v)| v * b.get(k).copied().unwrap_or(0)).sum()).collect())
        .collect();
    (polys.len(), rank_mod_p(gram, p as i64))
}

pub fn factorial(n: u128) -> u128 {
    (1..=n).product()
}
