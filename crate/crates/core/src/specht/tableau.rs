//! Tableaux, tabloids and polytabloids.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::ffla::{FpMatrix, Modulus};

use super::DegreeCap;

/// A filling of a Young diagram by `1..=m`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    /// Validates that `rows` is a bijective filling of a partition shape.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let shape: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        Partition::new(shape.clone())?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidPartition(shape));
        }
        let m: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; m + 1];
        for &x in rows.iter().flatten() {
            let x = x as usize;
            if x == 0 || x > m || seen[x] {
                return Err(Error::Dimension(format!("tableau entries must be a permutation of 1..={m}")));
            }
            seen[x] = true;
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("valid shape")
    }

    pub fn degree(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        rows_ok && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    /// Row index of every entry: `out[k - 1]` is the row containing `k`.
    pub fn tabloid(&self) -> Tabloid {
        let mut row_of = vec![0u8; self.degree()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                row_of[x as usize - 1] = r as u8;
            }
        }
        Tabloid(row_of)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u8::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// A row-equivalence class of tableaux, recorded as the row of each entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tabloid(pub Vec<u8>);

impl Tabloid {
    /// The tabloid `s_i {t}` for the transposition `(i, i+1)`, 1-based.
    pub fn swap(&self, i: usize) -> Tabloid {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Tabloid(v)
    }
}

fn check_cap(lambda: &Partition, cap: DegreeCap) -> Result<()> {
    if lambda.degree() > cap.get() {
        Err(Error::DegreeCap { degree: lambda.degree(), cap: cap.get() })
    } else {
        Ok(())
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `m! / prod(hook lengths)`.
pub fn hook_length_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut hooks = 1u128;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len as usize {
            let arm = len as usize - c - 1;
            let leg = conj.parts()[c] as usize - r - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(lambda.degree()) / hooks
}

/// `m! / prod(lambda_i!)`.
pub fn tabloid_count(lambda: &Partition) -> u128 {
    let denom: u128 = lambda.parts().iter().map(|&x| factorial(x as usize)).product();
    factorial(lambda.degree()) / denom
}

/// All standard tableaux of shape `lambda`.
///
/// Entries `1, 2, …` are placed in turn, trying rows from top to bottom, so
/// the list starts with the row-reading tableau.
pub fn standard_tableaux(lambda: &Partition, cap: DegreeCap) -> Result<Vec<Tableau>> {
    check_cap(lambda, cap)?;
    fn go(shape: &[u32], next: u8, m: u8, rows: &mut Vec<Vec<u8>>, out: &mut Vec<Tableau>) {
        if next > m {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape[r] as usize && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                go(shape, next + 1, m, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.height()];
    go(lambda.parts(), 1, lambda.degree() as u8, &mut rows, &mut out);
    assert_eq!(out.len() as u128, hook_length_count(lambda), "hook length cross-check for {lambda}");
    Ok(out)
}

/// The tabloids of shape `lambda` in lexicographic order of their row
/// vectors, with a reverse index.
#[derive(Clone, Debug)]
pub struct TabloidBasis {
    shape: Partition,
    tabloids: Vec<Tabloid>,
    index: HashMap<Tabloid, usize>,
}

impl TabloidBasis {
    pub fn new(lambda: &Partition, cap: DegreeCap) -> Result<Self> {
        check_cap(lambda, cap)?;
        fn go(left: &mut [u32], m: usize, cur: &mut Vec<u8>, out: &mut Vec<Tabloid>) {
            if cur.len() == m {
                out.push(Tabloid(cur.clone()));
                return;
            }
            for r in 0..left.len() {
                if left[r] > 0 {
                    left[r] -= 1;
                    cur.push(r as u8);
                    go(left, m, cur, out);
                    cur.pop();
                    left[r] += 1;
                }
            }
        }
        let mut tabloids = Vec::new();
        let mut left = lambda.parts().to_vec();
        go(&mut left, lambda.degree(), &mut Vec::new(), &mut tabloids);
        debug_assert_eq!(tabloids.len() as u128, tabloid_count(lambda));
        let index = tabloids.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        Ok(TabloidBasis { shape: lambda.clone(), tabloids, index })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.tabloids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tabloids.is_empty()
    }

    pub fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    pub fn index_of(&self, t: &Tabloid) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Permutation of tabloid indices induced by `s_i`: `perm[old] = new`.
    pub fn swap_permutation(&self, i: usize) -> Result<Vec<usize>> {
        let m = self.shape.degree();
        if i == 0 || i >= m {
            return Err(Error::GeneratorIndex { index: i, degree: m });
        }
        Ok(self.tabloids.iter().map(|t| self.index[&t.swap(i)]).collect())
    }

    /// `e_t = sum over the column group of t of sgn(pi) {pi t}`.
    pub fn polytabloid(&self, t: &Tableau, p: Modulus) -> Result<Vec<u8>> {
        if t.shape() != self.shape {
            return Err(Error::Dimension(format!("tableau shape {} vs basis shape {}", t.shape(), self.shape)));
        }
        let per_column: Vec<Vec<(Vec<u8>, bool)>> =
            t.columns().iter().map(|c| signed_arrangements(c)).collect();
        let mut acc = vec![0i64; self.len()];
        let mut row_of = vec![0u8; self.shape.degree()];
        fn go(
            cols: &[Vec<(Vec<u8>, bool)>],
            k: usize,
            odd: bool,
            row_of: &mut [u8],
            basis: &TabloidBasis,
            acc: &mut [i64],
        ) {
            if k == cols.len() {
                let idx = basis.index[&Tabloid(row_of.to_vec())];
                acc[idx] += if odd { -1 } else { 1 };
                return;
            }
            for (arrangement, sign) in &cols[k] {
                for (r, &x) in arrangement.iter().enumerate() {
                    row_of[x as usize - 1] = r as u8;
                }
                go(cols, k + 1, odd ^ sign, row_of, basis, acc);
            }
        }
        go(&per_column, 0, false, &mut row_of, self, &mut acc);
        Ok(acc.into_iter().map(|x| p.reduce(x)).collect())
    }
}

/// All orderings of `items` with their parity (`true` = odd), generated by
/// Heap's algorithm so consecutive orderings differ by one transposition.
fn signed_arrangements(items: &[u8]) -> Vec<(Vec<u8>, bool)> {
    let mut a = items.to_vec();
    let n = a.len();
    let mut out = vec![(a.clone(), false)];
    let mut odd = false;
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            odd = !odd;
            out.push((a.clone(), odd));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Permutation matrix of `s_i` on the tabloid basis of `M^lambda`.
pub fn gen_action_on_tabloids(lambda: &Partition, i: usize, p: Modulus, cap: DegreeCap) -> Result<FpMatrix> {
    let basis = TabloidBasis::new(lambda, cap)?;
    let perm = basis.swap_permutation(i)?;
    let mut m = FpMatrix::zeros(p, basis.len(), basis.len());
    for (old, &new) in perm.iter().enumerate() {
        m.set(new, old, 1);
    }
    Ok(m)
}
