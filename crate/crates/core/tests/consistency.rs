//! The two closed forms agree through conjugation, and reports are
//! byte-deterministic.

use csext::combinatorics::enum_partitions;
use csext::harness::{run_comb, run_sym, DiskCache, Parallelism};
use csext::oracle::{ext1_gl, ext1_sym, Witness};
use csext::specht::{DegreeCap, SpechtEngine};
use csext::{Error, Prime};

#[test]
fn gl_and_sym_agree_on_conjugates() {
    let (mut both, mut ones) = (0, 0);
    for p in [3, 5, 7].map(|p| Prime::new(p).unwrap()) {
        for m in 1..=9 {
            let all = enum_partitions(m);
            for n in [m, m + 2] {
                for lam in &all {
                    for mu in &all {
                        let gl = ext1_gl(&lam.conjugate().to_weight(n).unwrap(), &mu.conjugate().to_weight(n).unwrap(), p);
                        let sym = ext1_sym(lam, mu, p);
                        let (Ok(gl), Ok(sym)) = (&gl, &sym) else {
                            if let (Ok(_), Err(Error::OutOfScope(s))) = (&gl, &sym) {
                                // the sym side additionally asks for mu p-regular
                                assert!(!mu.is_p_regular(p), "{lam} {mu} p={p}: {s}");
                            }
                            continue;
                        };
                        assert_eq!(gl.dim, sym.dim, "{lam} {mu} p={p} n={n}");
                        if let (Some(Witness::Weight(h)), Some(Witness::Partition(t))) = (&gl.witness, &sym.witness) {
                            assert_eq!(h.to_partition().unwrap().conjugate(), *t);
                        }
                        both += 1;
                        ones += gl.dim;
                    }
                }
            }
        }
    }
    assert!(both > 1000 && ones > 10, "{both} {ones}");
}

#[test]
fn reports_are_byte_deterministic() {
    let primes: Vec<Prime> = [2, 3].map(|p| Prime::new(p).unwrap()).to_vec();
    let a = run_comb(&primes, 6, 4, Parallelism::Parallel).unwrap().without_timing();
    let b = run_comb(&primes, 6, 4, Parallelism::Sequential).unwrap().without_timing();
    assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    assert_eq!(a.to_csv(), b.to_csv());

    let dir = tempfile::tempdir().unwrap();
    let p3 = [Prime::new(3).unwrap()];
    let fresh = SpechtEngine::new(DegreeCap::DEFAULT);
    let cached = || SpechtEngine::with_store(DegreeCap::DEFAULT, Box::new(DiskCache::new(dir.path()).unwrap()));
    let x = run_sym(&fresh, &p3, &[5, 6], Parallelism::Parallel).unwrap().without_timing();
    let y = run_sym(&cached(), &p3, &[5, 6], Parallelism::Sequential).unwrap().without_timing();
    let z = run_sym(&cached(), &p3, &[5, 6], Parallelism::Parallel).unwrap().without_timing();
    assert_eq!(x.to_json().unwrap(), y.to_json().unwrap());
    assert_eq!(y.to_json().unwrap(), z.to_json().unwrap());
}
