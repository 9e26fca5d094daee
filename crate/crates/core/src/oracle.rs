//! Closed-form `Ext^1` answers and radical predictions.
//!
//! Every entry point checks the hypotheses of the corresponding statement
//! first and refuses with a [`ScopeError`] when one fails.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{normalize_pair, weight_lt, Partition, Prime, Weight};
use crate::error::{Error, Result, ScopeError};

/// Witness of a one-dimensional `Ext^1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Weight(Weight),
    Partition(Partition),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Weight(w) => w.fmt(f),
            Witness::Partition(p) => p.fmt(f),
        }
    }
}

/// Dimension over `K` of an `Ext^1` group; `witness` is present iff `dim == 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtAnswer {
    pub dim: u32,
    pub witness: Option<Witness>,
}

impl ExtAnswer {
    fn zero() -> Self {
        ExtAnswer { dim: 0, witness: None }
    }

    fn one(witness: Witness) -> Self {
        ExtAnswer { dim: 1, witness: Some(witness) }
    }
}

impl fmt::Display for ExtAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => write!(f, "dim={} witness={}", self.dim, w),
            None => write!(f, "dim={}", self.dim),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadWeylPrediction {
    Zero,
    NonzeroImageOfHat(Weight),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadSpechtPrediction {
    Zero,
    NonzeroImageOfTilde(Partition),
}

impl fmt::Display for RadSpechtPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadSpechtPrediction::Zero => write!(f, "rad=0"),
            RadSpechtPrediction::NonzeroImageOfTilde(t) => write!(f, "rad=image of S^{t}"),
        }
    }
}

/// Checks that `lambda` is a dominant, p-restricted, completely splittable
/// weight.
fn gate_weight(lambda: &Weight, p: Prime) -> Result<()> {
    if !lambda.is_dominant() {
        return Err(ScopeError::NonDominant.into());
    }
    if !lambda.is_p_restricted(p)? {
        return Err(ScopeError::NotPRestricted.into());
    }
    if !lambda.is_completely_splittable(p)? {
        return Err(ScopeError::NotCompletelySplittable.into());
    }
    Ok(())
}

/// `dim Ext^1_{GL(n)}(L(lambda), L(mu))` for completely splittable
/// p-restricted `lambda` and dominant `mu` with `lambda ⊀ mu`.
pub fn ext1_gl(lambda: &Weight, mu: &Weight, p: Prime) -> Result<ExtAnswer> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch { left: lambda.len(), right: mu.len() });
    }
    if !lambda.is_dominant() || !mu.is_dominant() {
        return Err(ScopeError::NonDominant.into());
    }
    let (lam, mu_n) = normalize_pair(lambda, mu)?;
    gate_weight(&lam, p)?;
    if weight_lt(&lam, &mu_n)? {
        return Err(ScopeError::OrderHypothesisFails.into());
    }
    if lam.is_big(p)? {
        let hat = lam.hat(p)?;
        if hat == mu_n {
            // report the witness in the caller's (unnormalized) coordinates
            let shift = lambda.entries().last().copied().unwrap_or(0);
            return Ok(ExtAnswer::one(Witness::Weight(hat.translate(shift))));
        }
    }
    Ok(ExtAnswer::zero())
}

/// Checks `p > 2` and that `lambda` is completely splittable and p-regular.
fn gate_partition(lambda: &Partition, p: Prime) -> Result<()> {
    if p.get() == 2 {
        return Err(ScopeError::CharTwo.into());
    }
    if !lambda.is_p_regular(p) {
        return Err(ScopeError::NotPRegular.into());
    }
    if !lambda.is_completely_splittable(p) {
        return Err(ScopeError::NotCompletelySplittable.into());
    }
    Ok(())
}

/// `dim Ext^1_{Σ_m}(D^lambda, D^mu)` for `p > 2`, completely splittable
/// `lambda`, p-regular `mu` of the same degree with `lambda ⋫ mu`.
pub fn ext1_sym(lambda: &Partition, mu: &Partition, p: Prime) -> Result<ExtAnswer> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch(lambda.degree(), mu.degree()));
    }
    gate_partition(lambda, p)?;
    if !mu.is_p_regular(p) {
        return Err(ScopeError::NotPRegular.into());
    }
    if lambda.strictly_dominates(mu) {
        return Err(ScopeError::OrderHypothesisFails.into());
    }
    if lambda.is_big(p) {
        let tilde = lambda.tilde(p)?;
        if &tilde == mu {
            return Ok(ExtAnswer::one(Witness::Partition(tilde)));
        }
    }
    Ok(ExtAnswer::zero())
}

/// Shape of `rad Δ_n(lambda)`: zero, or a nonzero image of `Δ_n(hat)`.
pub fn rad_weyl_prediction(lambda: &Weight, p: Prime) -> Result<RadWeylPrediction> {
    gate_weight(lambda, p)?;
    if lambda.is_big(p)? {
        Ok(RadWeylPrediction::NonzeroImageOfHat(lambda.hat(p)?))
    } else {
        Ok(RadWeylPrediction::Zero)
    }
}

/// Shape of `rad S^lambda`: zero, or a nonzero image of `S^tilde`.
pub fn rad_specht_prediction(lambda: &Partition, p: Prime) -> Result<RadSpechtPrediction> {
    gate_partition(lambda, p)?;
    if lambda.is_big(p) {
        Ok(RadSpechtPrediction::NonzeroImageOfTilde(lambda.tilde(p)?))
    } else {
        Ok(RadSpechtPrediction::Zero)
    }
}
