//! Brute-force Specht modules over GF(p).
//!
//! `S^lambda` is realised inside the tabloid permutation module `M^lambda`
//! as the span of the standard polytabloids. The action of each `s_i` is
//! obtained by permuting tabloid coordinates and solving back into the
//! standard basis, and the invariant form is the restriction of the form
//! in which tabloids are orthonormal. Everything downstream (radical,
//! simple head, intertwiners) is plain linear algebra on these matrices.

mod hom;
mod symrep;
mod tableau;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use log::warn;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, Prime};
use crate::error::{Error, Result, ScopeError};
use crate::ffla::{FpMatrix, Modulus, SpanSolver};

pub use hom::{hom_space, HomSpace};
pub use symrep::SymRep;
pub use tableau::{
    gen_action_on_tabloids, hook_length_count, standard_tableaux, tabloid_count, Tableau, Tabloid, TabloidBasis,
};

/// Largest degree the engine will build. Dense permutation data grows like
/// `m!`, so 7 is the default and 8 the hard limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCap(usize);

impl DegreeCap {
    pub const DEFAULT: DegreeCap = DegreeCap(7);
    pub const MAX: usize = 8;

    pub fn new(cap: usize) -> Result<Self> {
        if cap > Self::MAX {
            return Err(Error::DegreeCap { degree: cap, cap: Self::MAX });
        }
        if cap == Self::MAX {
            warn!("degree cap raised to {cap}: permutation modules of dimension up to {} will be built", 40320);
        }
        Ok(DegreeCap(cap))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl Default for DegreeCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `S^lambda` over GF(p) in the standard polytabloid basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpechtData {
    pub shape: Partition,
    pub modulus: Modulus,
    pub std_tableaux: Vec<Tableau>,
    /// Standard polytabloids as columns, in tabloid coordinates.
    pub basis: FpMatrix,
    pub gram: FpMatrix,
    pub rep: SymRep,
}

impl SpechtData {
    pub fn dim(&self) -> usize {
        self.std_tableaux.len()
    }

    /// Basis of `rad S^lambda = S^lambda ∩ (S^lambda)^⊥` as columns in
    /// polytabloid coordinates.
    pub fn rad_basis(&self) -> FpMatrix {
        self.gram.nullspace()
    }

    pub fn rad_dim(&self) -> usize {
        self.dim() - self.gram.rank()
    }

    pub fn rad_subrep(&self) -> Result<SymRep> {
        Ok(self.rep.split(&self.rad_basis())?.0)
    }

    /// `S^lambda / rad S^lambda`.
    pub fn head(&self) -> Result<SymRep> {
        Ok(self.rep.split(&self.rad_basis())?.1)
    }
}

pub fn specht_data(lambda: &Partition, p: Prime, cap: DegreeCap) -> Result<SpechtData> {
    let modulus = Modulus::new(p)?;
    let tabloids = TabloidBasis::new(lambda, cap)?;
    let std_tableaux = standard_tableaux(lambda, cap)?;
    let m = lambda.degree();

    let columns: Vec<Vec<u8>> = std_tableaux
        .iter()
        .map(|t| tabloids.polytabloid(t, modulus))
        .collect::<Result<_>>()?;
    let basis = FpMatrix::from_columns(modulus, tabloids.len(), &columns);
    let solver = SpanSolver::new(basis.clone())?;

    let mut gens = Vec::with_capacity(m.saturating_sub(1));
    for i in 1..m {
        let perm = tabloids.swap_permutation(i)?;
        let mut images = Vec::with_capacity(columns.len());
        for col in &columns {
            let mut moved = vec![0u8; col.len()];
            for (old, &new) in perm.iter().enumerate() {
                moved[new] = col[old];
            }
            let coords = solver
                .solve(&moved)?
                .ok_or_else(|| Error::Dimension(format!("s_{i} moved a polytabloid of {lambda} out of the span")))?;
            images.push(coords);
        }
        gens.push(FpMatrix::from_columns(modulus, columns.len(), &images));
    }

    let gram = basis.transpose().mul(&basis)?;
    let rep = SymRep::new(m, modulus, columns.len(), gens)?;
    Ok(SpechtData { shape: lambda.clone(), modulus, std_tableaux, basis, gram, rep })
}

/// Whether some intertwiner `S^nu -> S^lambda` has image exactly
/// `rad S^lambda`. False whenever the radical is zero.
pub fn image_equals_rad(source: &SpechtData, target: &SpechtData) -> Result<bool> {
    let rad = target.rad_basis();
    let r = rad.cols();
    if r == 0 {
        return Ok(false);
    }
    let hom = hom_space(&source.rep, &target.rep)?;
    let hits = |x: &FpMatrix| -> Result<bool> { Ok(x.rank() == r && x.hstack(&rad)?.rank() == r) };

    let q = target.modulus.get() as u64;
    let exhaustive = (q as f64).powi(hom.dim as i32) <= 4096.0;
    if !exhaustive {
        for x in &hom.basis {
            if hits(x)? {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    // every nonzero combination up to scalars: leading nonzero coefficient 1
    let total = q.pow(hom.dim as u32);
    for code in 1..total {
        let mut coeffs = Vec::with_capacity(hom.dim);
        let mut c = code;
        for _ in 0..hom.dim {
            coeffs.push((c % q) as u8);
            c /= q;
        }
        if coeffs.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let mut x = FpMatrix::zeros(target.modulus, target.dim(), source.dim());
        for (coef, b) in coeffs.iter().zip(&hom.basis) {
            if *coef == 0 {
                continue;
            }
            for row in 0..x.rows() {
                for col in 0..x.cols() {
                    let v = target.modulus.add(x.get(row, col), target.modulus.mul(*coef, b.get(row, col)));
                    x.set(row, col, v);
                }
            }
        }
        if hits(&x)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Persistence backend for [`SpechtData`].
pub trait SpechtStore: Send + Sync {
    fn load(&self, shape: &Partition, p: Prime) -> Result<Option<SpechtData>>;
    fn store(&self, data: &SpechtData) -> Result<()>;
}

type Slot = Arc<Mutex<Option<Arc<SpechtData>>>>;

/// Builds Specht modules on demand and memoizes them per `(shape, p)`.
///
/// Lookups take a shared lock; the first request for a key builds it while
/// holding that key's slot, so each module is built (and persisted) once.
pub struct SpechtEngine {
    cap: DegreeCap,
    slots: RwLock<HashMap<(Partition, Prime), Slot>>,
    store: Option<Box<dyn SpechtStore>>,
}

impl SpechtEngine {
    pub fn new(cap: DegreeCap) -> Self {
        SpechtEngine { cap, slots: RwLock::new(HashMap::new()), store: None }
    }

    pub fn with_store(cap: DegreeCap, store: Box<dyn SpechtStore>) -> Self {
        SpechtEngine { cap, slots: RwLock::new(HashMap::new()), store: Some(store) }
    }

    pub fn cap(&self) -> DegreeCap {
        self.cap
    }

    fn slot(&self, key: (Partition, Prime)) -> Slot {
        if let Some(slot) = self.slots.read().expect("cache lock").get(&key) {
            return slot.clone();
        }
        self.slots.write().expect("cache lock").entry(key).or_default().clone()
    }

    pub fn data(&self, lambda: &Partition, p: Prime) -> Result<Arc<SpechtData>> {
        if lambda.degree() > self.cap.get() {
            return Err(Error::DegreeCap { degree: lambda.degree(), cap: self.cap.get() });
        }
        let slot = self.slot((lambda.clone(), p));
        let mut guard = slot.lock().expect("slot lock");
        if let Some(data) = guard.as_ref() {
            return Ok(data.clone());
        }
        let data = Arc::new(self.load_or_build(lambda, p)?);
        *guard = Some(data.clone());
        Ok(data)
    }

    fn load_or_build(&self, lambda: &Partition, p: Prime) -> Result<SpechtData> {
        let Some(store) = &self.store else {
            return specht_data(lambda, p, self.cap);
        };
        match store.load(lambda, p) {
            Ok(Some(data)) if data.shape == *lambda && data.modulus.get() == p.get() => return Ok(data),
            Ok(Some(_)) => warn!("cache entry for {lambda} at p={p} describes a different key; rebuilding"),
            Ok(None) => {}
            Err(e) => warn!("{e}; rebuilding"),
        }
        let data = specht_data(lambda, p, self.cap)?;
        store.store(&data)?;
        Ok(data)
    }

    pub fn rad_dim(&self, lambda: &Partition, p: Prime) -> Result<usize> {
        Ok(self.data(lambda, p)?.rad_dim())
    }

    pub fn rad_subrep(&self, lambda: &Partition, p: Prime) -> Result<SymRep> {
        self.data(lambda, p)?.rad_subrep()
    }

    /// `D^mu`, the head of `S^mu` for p-regular `mu`.
    pub fn simple_head(&self, mu: &Partition, p: Prime) -> Result<SymRep> {
        if !mu.is_p_regular(p) {
            return Err(ScopeError::NotPRegular.into());
        }
        self.data(mu, p)?.head()
    }

    /// `dim Hom(rad S^lambda, D^mu)`.
    pub fn hom_rad_to_simple(&self, lambda: &Partition, mu: &Partition, p: Prime) -> Result<usize> {
        let simple = self.simple_head(mu, p)?;
        let rad = self.rad_subrep(lambda, p)?;
        Ok(hom_space(&rad, &simple)?.dim)
    }

    /// `dim Hom(S^nu, S^lambda)`.
    pub fn hom_specht(&self, nu: &Partition, lambda: &Partition, p: Prime) -> Result<usize> {
        Ok(hom_space(&self.data(nu, p)?.rep, &self.data(lambda, p)?.rep)?.dim)
    }

    pub fn image_equals_rad(&self, nu: &Partition, lambda: &Partition, p: Prime) -> Result<bool> {
        image_equals_rad(&*self.data(nu, p)?, &*self.data(lambda, p)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enum_partitions;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }
    fn md(p: u32) -> Modulus {
        Modulus::new(pr(p)).unwrap()
    }
    const CAP: DegreeCap = DegreeCap::DEFAULT;

    #[test]
    fn cap_limits() {
        assert_eq!(DegreeCap::new(8).unwrap().get(), 8);
        assert!(DegreeCap::new(9).is_err());
    }

    #[test]
    fn trivial_and_sign_modules() {
        let d = specht_data(&part(&[4]), pr(3), CAP).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(d.rep, SymRep::trivial(md(3), 4));
        assert_eq!(d.gram, FpMatrix::identity(md(3), 1));

        let d = specht_data(&part(&[1, 1, 1, 1]), pr(5), CAP).unwrap();
        assert_eq!(d.dim(), 1);
        assert_eq!(d.rep, SymRep::sign(md(5), 4));
    }

    #[test]
    fn two_two_over_gf3() {
        let d = specht_data(&part(&[2, 2]), pr(3), CAP).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.gram.rank(), 1);
        assert_eq!(d.rad_dim(), 1);
    }

    #[test]
    fn three_three() {
        assert_eq!(specht_data(&part(&[3, 3]), pr(5), CAP).unwrap().rad_dim(), 0);
        let d = specht_data(&part(&[3, 3]), pr(3), CAP).unwrap();
        assert_eq!(d.dim(), 5);
        assert_eq!(d.rad_dim(), 4);
    }

    #[test]
    fn reps_satisfy_relations_and_preserve_form() {
        for p in [2, 3, 5] {
            for m in 0..=6 {
                for lam in enum_partitions(m) {
                    let d = specht_data(&lam, pr(p), CAP).unwrap();
                    d.rep.check_relations().unwrap();
                    assert_eq!(d.gram, d.gram.transpose());
                    for g in &d.rep.gens {
                        let moved = g.transpose().mul(&d.gram).unwrap().mul(g).unwrap();
                        assert_eq!(moved, d.gram, "{lam} p={p}");
                    }
                    assert_eq!(d.gram.rank() + d.rad_dim(), d.dim());
                }
            }
        }
    }

    #[test]
    fn simple_heads() {
        let engine = SpechtEngine::new(CAP);
        assert_eq!(engine.simple_head(&part(&[5]), pr(3)).unwrap().dim, 1);
        assert_eq!(engine.simple_head(&part(&[2, 2]), pr(3)).unwrap().dim, 1);
        assert_eq!(engine.simple_head(&part(&[4, 1]), pr(3)).unwrap().dim, 4);
        assert!(matches!(
            engine.simple_head(&part(&[1, 1, 1]), pr(3)),
            Err(Error::OutOfScope(ScopeError::NotPRegular))
        ));
    }

    #[test]
    fn simple_heads_are_absolutely_irreducible() {
        let engine = SpechtEngine::new(CAP);
        for p in [2, 3, 5] {
            for m in 1..=6 {
                let mut square_sum = 0usize;
                for mu in enum_partitions(m).into_iter().filter(|mu| mu.is_p_regular(pr(p))) {
                    let d = engine.simple_head(&mu, pr(p)).unwrap();
                    d.check_relations().unwrap();
                    assert!(d.dim > 0);
                    assert_eq!(hom_space(&d, &d).unwrap().dim, 1, "{mu} p={p}");
                    square_sum += d.dim * d.dim;
                }
                assert!(square_sum <= (1..=m).product::<usize>());
            }
        }
    }

    #[test]
    fn intertwiner_examples() {
        let engine = SpechtEngine::new(CAP);
        let three = pr(3);
        assert_eq!(engine.hom_specht(&part(&[4]), &part(&[2, 2]), three).unwrap(), 1);
        assert_eq!(engine.hom_rad_to_simple(&part(&[2, 2]), &part(&[4]), three).unwrap(), 1);
        assert_eq!(engine.hom_rad_to_simple(&part(&[2, 2]), &part(&[2, 2]), three).unwrap(), 0);
        assert_eq!(engine.hom_rad_to_simple(&part(&[3, 3]), &part(&[4, 2]), pr(5)).unwrap(), 0);
    }

    #[test]
    fn image_examples() {
        let engine = SpechtEngine::new(CAP);
        assert!(engine.image_equals_rad(&part(&[4]), &part(&[2, 2]), pr(3)).unwrap());
        assert!(engine.image_equals_rad(&part(&[5, 1]), &part(&[3, 3]), pr(3)).unwrap());
        assert!(!engine.image_equals_rad(&part(&[4]), &part(&[4]), pr(3)).unwrap());
    }

    #[test]
    fn engine_memoizes() {
        let engine = SpechtEngine::new(CAP);
        let a = engine.data(&part(&[3, 2]), pr(3)).unwrap();
        let b = engine.data(&part(&[3, 2]), pr(3)).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert!(matches!(engine.data(&part(&[8]), pr(3)), Err(Error::DegreeCap { .. })));
    }
}
