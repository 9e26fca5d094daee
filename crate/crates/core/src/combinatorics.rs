//! Partitions, weights and the combinatorial invariants attached to them.
//!
//! Partitions are finite weakly decreasing lists of positive parts (the
//! trailing zeros of the infinite sequence are implicit). Weights are
//! integer tuples of a fixed length `n`, i.e. elements of `X(n)`.
//!
//! Row indices exposed through [`RemovableRows`] are 1-based, matching the
//! usual way removable rows are written down by hand.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ScopeError};

/// A prime characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

fn parse_list<T: FromStr>(s: &str) -> std::result::Result<Vec<T>, String> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<T>().map_err(|_| format!("invalid entry `{tok}`"))
        })
        .collect()
}

/// `(a)_m`: truncate `a` to length `m`, or extend it by zeros to length `m`.
///
/// Fails if truncation would drop a nonzero entry.
pub fn pad<T: Copy + Default + PartialEq>(a: &[T], m: usize) -> Result<Vec<T>> {
    if m < a.len() {
        if let Some(pos) = a[m..].iter().position(|x| *x != T::default()) {
            return Err(Error::PadTruncation { len: m, position: m + pos + 1 });
        }
        Ok(a[..m].to_vec())
    } else {
        let mut out = a.to_vec();
        out.resize(m, T::default());
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, discarding trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// `lambda_i` with 1-based `i`; zero past the height.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.0.iter().take_while(|&&x| x >= c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `self ⊵ other`, applying the prefix-sum test literally.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.0.len().max(other.0.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// `self ⊳ other`.
    pub fn strictly_dominates(&self, other: &Partition) -> bool {
        self != other && self.dominates(other)
    }

    pub fn is_p_regular(&self, p: Prime) -> bool {
        let p = p.get() as usize;
        let mut run = 0usize;
        for (k, &x) in self.0.iter().enumerate() {
            run = if k > 0 && self.0[k - 1] == x { run + 1 } else { 1 };
            if run >= p {
                return false;
            }
        }
        true
    }

    /// `lambda_1 - lambda_h + h`, or 0 for the zero partition.
    pub fn chi(&self) -> u64 {
        match (self.0.first(), self.0.last()) {
            (Some(&first), Some(&last)) => (first - last) as u64 + self.height() as u64,
            _ => 0,
        }
    }

    /// First-column hook lengths `lambda_i + h - i`.
    pub fn beta_set(&self) -> Vec<u64> {
        let h = self.height() as u64;
        self.0
            .iter()
            .enumerate()
            .map(|(k, &x)| x as u64 + h - (k as u64 + 1))
            .collect()
    }

    /// Whether some rim `p`-hook can be removed.
    ///
    /// Removing a rim `p`-hook corresponds to replacing a bead `b >= p` of
    /// the beta-set by `b - p`, which is possible iff `b - p` is unoccupied.
    pub fn has_rim_p_hook(&self, p: Prime) -> bool {
        let p = p.get() as u64;
        let beta = self.beta_set();
        beta.iter().any(|&b| b >= p && !beta.contains(&(b - p)))
    }

    /// `chi <= p`. Whether `D^lambda` exists at all (p-regularity) is for
    /// the caller to check.
    pub fn is_completely_splittable(&self, p: Prime) -> bool {
        self.chi() <= p.get() as u64
    }

    pub fn is_big(&self, p: Prime) -> bool {
        self.is_completely_splittable(p) && self.height() >= 2 && self.has_rim_p_hook(p)
    }

    /// The partition-side partner of [`Weight::hat`]: conjugate, view as a
    /// weight of rank `m = degree`, apply `hat`, conjugate back.
    pub fn tilde(&self, p: Prime) -> Result<Partition> {
        if !self.is_p_regular(p) {
            return Err(ScopeError::NotPRegular.into());
        }
        if !self.is_big(p) {
            return Err(ScopeError::NotBig.into());
        }
        let m = self.degree();
        let hatted = self.conjugate().to_weight(m)?.hat(p)?;
        Ok(hatted.to_partition()?.conjugate())
    }

    /// `(lambda)_n` as a weight of `X(n)`.
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        let entries: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        Ok(Weight(pad(&entries, n)?))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts = parse_list::<u32>(s)?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

/// Removable rows of a dominant weight (1-based), with the smallest and
/// largest one singled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovableRows {
    pub rows: Vec<usize>,
    pub i_min: Option<usize>,
    pub j_max: Option<usize>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The ambient rank `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `lambda_k` with 1-based `k`.
    #[inline]
    fn at(&self, k: usize) -> i64 {
        self.0[k - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(ScopeError::NonDominant.into())
        }
    }

    /// `self + c·(1,…,1)`.
    pub fn translate(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|&x| x + c).collect())
    }

    /// The nonzero entries as a partition; requires a dominant weight with
    /// nonnegative entries.
    pub fn to_partition(&self) -> Result<Partition> {
        self.require_dominant()?;
        if self.0.iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(Vec::new()));
        }
        Partition::new(self.0.iter().map(|&x| x as u32).collect())
    }

    pub fn is_p_restricted(&self, p: Prime) -> Result<bool> {
        self.require_dominant()?;
        let p = p.get() as i64;
        Ok(self.0.windows(2).all(|w| w[0] - w[1] < p))
    }

    pub fn removable_rows(&self) -> Result<RemovableRows> {
        self.require_dominant()?;
        let rows: Vec<usize> = (1..self.len()).filter(|&r| self.at(r) > self.at(r + 1)).collect();
        Ok(RemovableRows {
            i_min: rows.first().copied(),
            j_max: rows.last().copied(),
            rows,
        })
    }

    /// `psi_n = j - i + lambda_i - lambda_{j+1}`, or 0 without removable rows.
    pub fn psi(&self) -> Result<u64> {
        let rr = self.removable_rows()?;
        Ok(match (rr.i_min, rr.j_max) {
            (Some(i), Some(j)) => (j - i) as u64 + (self.at(i) - self.at(j + 1)) as u64,
            _ => 0,
        })
    }

    fn require_p_restricted(&self, p: Prime) -> Result<()> {
        if self.is_p_restricted(p)? {
            Ok(())
        } else {
            Err(ScopeError::NotPRestricted.into())
        }
    }

    /// Complete splittability of a p-restricted weight: `psi <= p`.
    pub fn is_completely_splittable(&self, p: Prime) -> Result<bool> {
        self.require_p_restricted(p)?;
        Ok(self.psi()? <= p.get() as u64)
    }

    /// Bigness of a p-restricted weight.
    #[allow(clippy::int_plus_one)]
    pub fn is_big(&self, p: Prime) -> Result<bool> {
        self.require_p_restricted(p)?;
        let rr = self.removable_rows()?;
        let (Some(i), Some(j)) = (rr.i_min, rr.j_max) else {
            return Ok(false);
        };
        let (i, j, n, p) = (i as i64, j as i64, self.len() as i64, p.get() as i64);
        let drop = self.at(i as usize) - self.at(j as usize + 1);
        let splittable = j - i + drop <= p;
        let movable = drop > 1 && j - 1 + drop >= p && i - drop + p + 1 <= n;
        Ok(splittable && movable)
    }

    /// `hat(lambda)`: subtract the roots `alpha_{a+k, j+k}` for
    /// `k = 1..=i - j - drop + p + 1`, where `a = j + drop - p - 1` and
    /// `drop = lambda_i - lambda_{j+1}`.
    pub fn hat(&self, p: Prime) -> Result<Weight> {
        if !self.is_big(p)? {
            return Err(ScopeError::NotBig.into());
        }
        let rr = self.removable_rows()?;
        let (i, j) = (rr.i_min.unwrap() as i64, rr.j_max.unwrap() as i64);
        let p = p.get() as i64;
        let drop = self.at(i as usize) - self.at(j as usize + 1);
        let count = i - j - drop + p + 1;
        let offset = j + drop - p - 1;
        let mut out = self.0.clone();
        for k in 1..=count {
            let (lo, hi) = ((offset + k) as usize, (j + k) as usize);
            out[lo - 1] -= 1;
            out[hi - 1] += 1;
        }
        Ok(Weight(out))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for Weight {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_list::<i64>(s).map(Weight)
    }
}

fn check_lengths(a: &Weight, b: &Weight) -> Result<()> {
    if a.len() == b.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left: a.len(), right: b.len() })
    }
}

/// `mu <= lambda`: `lambda - mu` is a nonnegative combination of positive
/// roots, i.e. equal totals and nonnegative prefix sums of `lambda - mu`.
pub fn weight_leq(mu: &Weight, lambda: &Weight) -> Result<bool> {
    check_lengths(mu, lambda)?;
    let mut acc = 0i64;
    for (l, m) in lambda.0.iter().zip(&mu.0) {
        acc += l - m;
        if acc < 0 {
            return Ok(false);
        }
    }
    Ok(acc == 0)
}

/// `mu < lambda`.
pub fn weight_lt(mu: &Weight, lambda: &Weight) -> Result<bool> {
    Ok(mu != lambda && weight_leq(mu, lambda)?)
}

/// Shifts both weights by `-lambda_n` so that the last entry of `lambda`
/// becomes zero.
pub fn normalize_pair(lambda: &Weight, mu: &Weight) -> Result<(Weight, Weight)> {
    check_lengths(lambda, mu)?;
    lambda.require_dominant()?;
    let shift = lambda.0.last().copied().unwrap_or(0);
    Ok((lambda.translate(-shift), mu.translate(-shift)))
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All partitions of `m`, in reverse-lexicographic order.
pub fn enum_partitions(m: usize) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            go(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m as u32, m as u32, &mut Vec::new(), &mut out);
    out
}

/// `Lambda^+(n, m)` in lexicographic order.
pub fn enum_dominant_weights(n: usize, m: usize) -> Vec<Weight> {
    let mut out: Vec<Weight> = enum_partitions(m)
        .into_iter()
        .filter(|p| p.height() <= n)
        .map(|p| p.to_weight(n).expect("height fits"))
        .collect();
    out.sort();
    out
}

/// Dominant weights of length `n` with entries in `[0, max_entry]`, in
/// lexicographic order.
pub fn enum_box_weights(n: usize, max_entry: i64) -> Vec<Weight> {
    fn go(n: usize, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        for x in 0..=hi {
            cur.push(x);
            go(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_entry, &mut Vec::new(), &mut out);
    out.sort();
    out
}
