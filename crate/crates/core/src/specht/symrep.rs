//! Representations of `Σ_m` given by the matrices of `s_1, …, s_{m-1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{FpMatrix, Modulus};

/// A `Σ_m`-module over GF(p). `gens[k]` is the matrix of `s_{k+1}` acting
/// on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymRep {
    pub degree: usize,
    pub modulus: Modulus,
    pub dim: usize,
    pub gens: Vec<FpMatrix>,
}

impl SymRep {
    pub fn new(degree: usize, modulus: Modulus, dim: usize, gens: Vec<FpMatrix>) -> Result<Self> {
        if gens.len() != degree.saturating_sub(1) {
            return Err(Error::Dimension(format!("{} generators for degree {degree}", gens.len())));
        }
        if gens.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::Dimension("generator shape".into()));
        }
        Ok(SymRep { degree, modulus, dim, gens })
    }

    pub fn trivial(modulus: Modulus, degree: usize) -> Self {
        let gens = (1..degree).map(|_| FpMatrix::identity(modulus, 1)).collect();
        SymRep { degree, modulus, dim: 1, gens }
    }

    pub fn sign(modulus: Modulus, degree: usize) -> Self {
        let minus_one = FpMatrix::from_rows(modulus, &[[-1i64]]).expect("1x1");
        let gens = (1..degree).map(|_| minus_one.clone()).collect();
        SymRep { degree, modulus, dim: 1, gens }
    }

    /// Checks `s_i^2 = 1`, the braid relations and far commutation.
    pub fn check_relations(&self) -> std::result::Result<(), String> {
        let id = FpMatrix::identity(self.modulus, self.dim);
        let mul = |a: &FpMatrix, b: &FpMatrix| a.mul(b).expect("square generators");
        for (k, g) in self.gens.iter().enumerate() {
            if mul(g, g) != id {
                return Err(format!("s_{} is not an involution", k + 1));
            }
        }
        for k in 0..self.gens.len() {
            for l in k + 1..self.gens.len() {
                let (a, b) = (&self.gens[k], &self.gens[l]);
                if l == k + 1 {
                    if mul(&mul(a, b), a) != mul(&mul(b, a), b) {
                        return Err(format!("braid relation fails for s_{} s_{}", k + 1, l + 1));
                    }
                } else if mul(a, b) != mul(b, a) {
                    return Err(format!("s_{} and s_{} do not commute", k + 1, l + 1));
                }
            }
        }
        Ok(())
    }

    /// Splits along the invariant subspace spanned by the independent
    /// columns of `sub`, returning the submodule and the quotient.
    ///
    /// Errors if the subspace is not invariant.
    pub fn split(&self, sub: &FpMatrix) -> Result<(SymRep, SymRep)> {
        let p = self.modulus;
        let r = sub.cols();
        if sub.rows() != self.dim {
            return Err(Error::Dimension("subspace basis has the wrong length".into()));
        }
        // complete `sub` by standard basis vectors to a basis of the whole space
        let pivots = sub.hstack(&FpMatrix::identity(p, self.dim))?.rref().1;
        if pivots.iter().take_while(|&&c| c < r).count() < r {
            return Err(Error::DependentColumns);
        }
        let complement: Vec<usize> = pivots.iter().filter(|&&c| c >= r).map(|&c| c - r).collect();
        let change = sub.hstack(&FpMatrix::identity(p, self.dim).select_columns(&complement))?;
        let change_inv = change.inverse()?;
        let sub_idx: Vec<usize> = (0..r).collect();
        let quo_idx: Vec<usize> = (r..self.dim).collect();
        let mut sub_gens = Vec::with_capacity(self.gens.len());
        let mut quo_gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let conj = change_inv.mul(&g.mul(&change)?)?;
            let lower_left = conj.select_rows(&quo_idx).select_columns(&sub_idx);
            if !lower_left.is_zero() {
                return Err(Error::Dimension("subspace is not invariant".into()));
            }
            sub_gens.push(conj.select_rows(&sub_idx).select_columns(&sub_idx));
            quo_gens.push(conj.select_rows(&quo_idx).select_columns(&quo_idx));
        }
        Ok((
            SymRep { degree: self.degree, modulus: p, dim: r, gens: sub_gens },
            SymRep { degree: self.degree, modulus: p, dim: self.dim - r, gens: quo_gens },
        ))
    }
}
