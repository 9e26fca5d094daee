//! Intertwiners between two `Σ_m`-modules.

use crate::error::{Error, Result};
use crate::ffla::FpMatrix;

use super::SymRep;

/// A basis of `Hom_{Σ_m}(V, W)`; each map is a `dim W × dim V` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<FpMatrix>,
}

/// Solves `X A_i = B_i X` for every generator.
///
/// `X` is flattened row-major into `dim W · dim V` unknowns. The kernel of
/// the stacked system is found one generator block at a time: the first
/// block is row reduced directly, every later block only on the current
/// kernel basis, which keeps the systems small once the first few
/// generators have cut the space down.
pub fn hom_space(v: &SymRep, w: &SymRep) -> Result<HomSpace> {
    if v.degree != w.degree {
        return Err(Error::DegreeMismatch(v.degree, w.degree));
    }
    if v.modulus != w.modulus {
        return Err(Error::Dimension("representations over different fields".into()));
    }
    let p = v.modulus;
    let (dv, dw) = (v.dim, w.dim);
    let unknowns = dv * dw;
    let mut kernel: Option<FpMatrix> = None;

    for (a, b) in v.gens.iter().zip(&w.gens) {
        let next = match &kernel {
            None => {
                // (X A - B X)[r][c] = sum_t X[r][t] A[t][c] - sum_t B[r][t] X[t][c]
                let mut eq = FpMatrix::zeros(p, unknowns, unknowns);
                for r in 0..dw {
                    for c in 0..dv {
                        let row = r * dv + c;
                        for t in 0..dv {
                            let x = a.get(t, c);
                            if x != 0 {
                                let col = r * dv + t;
                                eq.set(row, col, p.add(eq.get(row, col), x));
                            }
                        }
                        for t in 0..dw {
                            let x = b.get(r, t);
                            if x != 0 {
                                let col = t * dv + c;
                                eq.set(row, col, p.add(eq.get(row, col), p.neg(x)));
                            }
                        }
                    }
                }
                eq.nullspace()
            }
            Some(basis) => {
                let residuals: Vec<Vec<u8>> = (0..basis.cols())
                    .map(|k| {
                        let x = unflatten(basis, k, dw, dv);
                        let lhs = x.mul(a).expect("shapes");
                        let rhs = b.mul(&x).expect("shapes");
                        (0..dw * dv)
                            .map(|idx| {
                                let (r, c) = (idx / dv, idx % dv);
                                p.add(lhs.get(r, c), p.neg(rhs.get(r, c)))
                            })
                            .collect()
                    })
                    .collect();
                let system = FpMatrix::from_columns(p, unknowns, &residuals);
                basis.mul(&system.nullspace())?
            }
        };
        let done = next.cols() == 0;
        kernel = Some(next);
        if done {
            break;
        }
    }

    let kernel = kernel.unwrap_or_else(|| FpMatrix::identity(p, unknowns));
    let basis: Vec<FpMatrix> = (0..kernel.cols()).map(|k| unflatten(&kernel, k, dw, dv)).collect();
    Ok(HomSpace { dim: basis.len(), basis })
}

fn unflatten(kernel: &FpMatrix, k: usize, rows: usize, cols: usize) -> FpMatrix {
    let mut x = FpMatrix::zeros(kernel.modulus(), rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            x.set(r, c, kernel.get(r * cols + c, k));
        }
    }
    x
}
