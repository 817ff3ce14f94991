//! Deterministic inputs for the kernel benchmarks: dense multivectors
//! and structured forms built without randomness so every run measures
//! the same work.

use gfc_core::*;

/// Fully dense multivector: every basis blade carries a small nonzero
/// coefficient derived from its mask (and a salt, so two inputs to a
/// binary operation differ).
pub fn dense_mv<S: Scalar>(dim: Dim, salt: i64) -> Multivector<S> {
    let mut m = Multivector::zero(dim);
    for b in blades(dim) {
        let raw = (b.0 as i64 + salt) % 7 - 3;
        let c = if raw == 0 { 1 } else { raw };
        m.add_term(b, S::from_int(c));
    }
    m
}

/// Non-symmetric generator form with entries in −3..=3.
pub fn dense_form<S: Scalar>(dim: Dim) -> BilinearForm<S> {
    let n = dim.get() as usize;
    let mut f = BilinearForm::zero(dim);
    for i in 0..n {
        for j in 0..n {
            let raw = (3 * i + 5 * j + 1) as i64 % 7 - 3;
            f.set(i, j, S::from_int(raw));
        }
    }
    f
}
