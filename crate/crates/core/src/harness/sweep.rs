//! Exhaustive sweeps comparing closed forms with brute force.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enum_box_weights, enum_partitions, weight_lt, Partition, Prime, Weight};
use crate::error::{Error, Result, ScopeError};
use crate::oracle::{ext1_sym, rad_specht_prediction, RadSpechtPrediction};
use crate::specht::SpechtEngine;

use super::report::{Report, SweepConfig, SweepRow};
use super::{map_ordered, Parallelism};

const SHIFTS: [i64; 3] = [-3, 1, 4];

/// Weight-side invariants for one weight at one prime.
fn comb_weight_row(p: Prime, lam: &Weight) -> Result<SweepRow> {
    let n = lam.len();
    let last = lam.entries().last().copied().unwrap_or(0);
    let norm = lam.translate(-last);
    let conj = norm.to_partition()?.conjugate();
    let mut violations: Vec<String> = Vec::new();
    let mut predicted = Vec::new();
    let mut observed = Vec::new();

    let psi = lam.psi()?;
    let chi = conj.chi();
    predicted.push(format!("psi={psi}"));
    observed.push(format!("chi(conj)={chi}"));
    if psi != chi {
        violations.push("psi differs from chi of the conjugate".into());
    }

    let restricted = lam.is_p_restricted(p)?;
    let regular = conj.is_p_regular(p);
    predicted.push(format!("restricted={restricted}"));
    observed.push(format!("conj_regular={regular}"));
    if restricted != regular {
        violations.push("p-restricted differs from p-regularity of the conjugate".into());
    }

    for c in SHIFTS {
        if lam.translate(c).psi()? != psi {
            violations.push(format!("psi not invariant under shift {c}"));
        }
    }

    if restricted {
        let big = lam.is_big(p)?;
        predicted.push(format!("big={big}"));
        if big && !lam.is_completely_splittable(p)? {
            violations.push("big but not completely splittable".into());
        }
        let hat = if big { Some(lam.hat(p)?) } else { None };
        if let Some(h) = &hat {
            predicted.push(format!("hat={h}"));
            // reported only; nothing guarantees hat is p-restricted
            predicted.push(format!("hat_restricted={}", h.is_p_restricted(p)?));
            if !h.is_dominant() {
                violations.push(format!("hat {h} not dominant"));
            }
            if h.sum() != lam.sum() {
                violations.push(format!("hat {h} changes the sum"));
            }
            if !weight_lt(h, lam)? {
                violations.push(format!("hat {h} not strictly below"));
            }
        }
        for c in SHIFTS {
            let shifted = lam.translate(c);
            if shifted.is_big(p)? != big {
                violations.push(format!("bigness not invariant under shift {c}"));
            } else if let Some(h) = &hat {
                if shifted.hat(p)? != h.translate(c) {
                    violations.push(format!("hat not equivariant under shift {c}"));
                }
            }
        }

        // conjugation identities need n >= m
        let m = norm.sum() as usize;
        if n >= m {
            let big_part = conj.is_big(p);
            observed.push(format!("conj_big={big_part}"));
            if big != big_part {
                violations.push("big weight differs from big conjugate partition".into());
            }
            if big && big_part {
                let hat_t = norm.hat(p)?.to_partition()?.conjugate();
                match conj.tilde(p) {
                    Ok(t) => {
                        observed.push(format!("tilde(conj)={t}"));
                        if t != hat_t {
                            violations.push(format!("conjugate of hat is {hat_t}"));
                        }
                    }
                    Err(e) => violations.push(format!("tilde failed: {e}")),
                }
            }
        }
    }

    let predicted = predicted.join(" ");
    let mut observed = observed.join(" ");
    let ok = violations.is_empty();
    if !ok {
        observed.push_str(&format!(" violations=[{}]", violations.join("; ")));
    }
    Ok(SweepRow::compare(Some(p.get()), n, "weight", lam.to_string(), None, predicted, observed, ok))
}

/// Conjugation and dominance checks for one partition against all
/// partitions of its degree.
fn comb_partition_row(lam: &Partition, same_degree: &[Partition]) -> SweepRow {
    let mut violations = Vec::new();
    let conj = lam.conjugate();
    if conj.conjugate() != *lam {
        violations.push("conjugation is not an involution".to_string());
    }
    if conj.degree() != lam.degree() {
        violations.push("conjugation changes the degree".to_string());
    }
    for mu in same_degree {
        if lam.dominates(mu) != mu.conjugate().dominates(&conj) {
            violations.push(format!("dominance flip fails against {mu}"));
        }
    }
    let observed = if violations.is_empty() {
        "consistent".to_string()
    } else {
        violations.join("; ")
    };
    SweepRow::compare(
        None,
        lam.degree(),
        "partition",
        lam.to_string(),
        None,
        "consistent".into(),
        observed,
        violations.is_empty(),
    )
}

/// Rows for every combinatorial invariant over weights of rank `1..=n_max`
/// with entries in `[0, max_entry]`, and partitions of degree `<= n_max`.
pub fn sweep_comb(primes: &[Prime], n_max: usize, max_entry: i64, mode: Parallelism) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for m in 0..=n_max {
        let parts = enum_partitions(m);
        rows.extend(map_ordered(&parts, mode, |lam| comb_partition_row(lam, &parts)));
    }
    for &p in primes {
        for n in 1..=n_max {
            let weights = enum_box_weights(n, max_entry);
            let chunk: Result<Vec<SweepRow>> = map_ordered(&weights, mode, |w| comb_weight_row(p, w)).into_iter().collect();
            rows.extend(chunk?);
        }
    }
    Ok(rows)
}

pub fn run_comb(primes: &[Prime], n_max: usize, max_entry: i64, mode: Parallelism) -> Result<Report> {
    let start = Instant::now();
    let rows = sweep_comb(primes, n_max, max_entry, mode)?;
    let config = SweepConfig::Comb { primes: primes.iter().map(|p| p.get()).collect(), n_max, max_entry };
    Ok(Report::new(config, rows, Some(start.elapsed())))
}

fn sym_rows_for(engine: &SpechtEngine, p: Prime, lam: &Partition, all: &[Partition]) -> Result<Vec<SweepRow>> {
    let m = lam.degree();
    let pv = p.get();
    let prediction = match rad_specht_prediction(lam, p) {
        Ok(pred) => pred,
        Err(Error::OutOfScope(s)) => return Ok(vec![SweepRow::skipped(pv, m, "radical", lam.to_string(), None, s)]),
        Err(e) => return Err(e),
    };
    let mut rows = Vec::new();
    let rad = engine.rad_dim(lam, p)?;
    let predicted_nonzero = matches!(prediction, RadSpechtPrediction::NonzeroImageOfTilde(_));
    rows.push(SweepRow::compare(
        Some(pv),
        m,
        "radical",
        lam.to_string(),
        None,
        prediction.to_string(),
        format!("rad_dim={rad}"),
        predicted_nonzero == (rad > 0),
    ));

    if let RadSpechtPrediction::NonzeroImageOfTilde(tilde) = &prediction {
        let homs = engine.hom_specht(tilde, lam, p)?;
        let image = engine.image_equals_rad(tilde, lam, p)?;
        rows.push(SweepRow::compare(
            Some(pv),
            m,
            "image",
            lam.to_string(),
            Some(tilde.to_string()),
            "hom>=1 image=rad".into(),
            format!("hom={homs} image={}", if image { "rad" } else { "other" }),
            homs >= 1 && image,
        ));
    }

    for mu in all {
        match ext1_sym(lam, mu, p) {
            Ok(answer) => {
                let observed = engine.hom_rad_to_simple(lam, mu, p)?;
                rows.push(SweepRow::compare(
                    Some(pv),
                    m,
                    "ext",
                    lam.to_string(),
                    Some(mu.to_string()),
                    answer.dim.to_string(),
                    observed.to_string(),
                    answer.dim as usize == observed,
                ));
            }
            Err(Error::OutOfScope(s)) => {
                rows.push(SweepRow::skipped(pv, m, "ext", lam.to_string(), Some(mu.to_string()), s));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(rows)
}

/// Radical, image and `Ext^1`-shadow rows for every partition of `m`.
pub fn sweep_sym(engine: &SpechtEngine, p: Prime, m: usize, mode: Parallelism) -> Result<Vec<SweepRow>> {
    if p.get() == 2 {
        return Err(ScopeError::CharTwo.into());
    }
    if m > engine.cap().get() {
        return Err(Error::DegreeCap { degree: m, cap: engine.cap().get() });
    }
    let all = enum_partitions(m);
    let per_shape: Result<Vec<Vec<SweepRow>>> =
        map_ordered(&all, mode, |lam| sym_rows_for(engine, p, lam, &all)).into_iter().collect();
    Ok(per_shape?.into_iter().flatten().collect())
}

pub fn run_sym(engine: &SpechtEngine, primes: &[Prime], degrees: &[usize], mode: Parallelism) -> Result<Report> {
    let start = Instant::now();
    let mut rows = Vec::new();
    for &p in primes {
        for &m in degrees {
            rows.extend(sweep_sym(engine, p, m, mode)?);
        }
    }
    let config = SweepConfig::Sym {
        primes: primes.iter().map(|p| p.get()).collect(),
        degrees: degrees.to_vec(),
        cap: engine.cap().get(),
    };
    Ok(Report::new(config, rows, Some(start.elapsed())))
}

/// One line of the completely-splittable listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub partition: Partition,
    pub chi: u64,
    pub p_regular: bool,
    pub completely_splittable: bool,
    pub big: bool,
    pub tilde: Option<Partition>,
}

/// Every partition of `m` with its `chi`, regularity, splittability,
/// bigness and `tilde`.
pub fn table(p: Prime, m: usize) -> Vec<TableRow> {
    enum_partitions(m)
        .into_iter()
        .map(|lam| {
            let big = lam.is_big(p);
            TableRow {
                chi: lam.chi(),
                p_regular: lam.is_p_regular(p),
                completely_splittable: lam.is_completely_splittable(p),
                big,
                tilde: if big { lam.tilde(p).ok() } else { None },
                partition: lam,
            }
        })
        .collect()
}
