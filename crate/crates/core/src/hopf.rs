//! Hopf structure on the exterior algebra: coproduct, counit,
//! antipode, integral, cointegral, and the bracket built from them.
//!
//! The coproduct of a blade runs over all ordered two-part splits of
//! its index set; each split carries the sign that reorders the
//! concatenation back into ascending order, so e.g.
//! Δ(e12) = 1⊗e12 + e1⊗e2 − e2⊗e1 + e12⊗1.

use crate::blade::{wedge_sign, Blade};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

/// Reordering sign of the split (s1, s2) of a blade: the sign that
/// sorts e_s1 ∧ e_s2 back into e_(s1∪s2). Legs of a split are always
/// disjoint, so this never vanishes.
pub fn split_sign(s1: Blade, s2: Blade) -> i8 {
    debug_assert!(s1.disjoint(s2));
    wedge_sign(s1, s2)
}

/// Coproduct of a single blade: 2^grade signed split terms.
pub fn coproduct_blade<S: Scalar>(x: &Multivector<S>, blade: Blade) -> Tensor2<S> {
    let mut out = Tensor2::zero(x.dim());
    let c = x.coeff(blade);
    if c.is_zero() {
        return out;
    }
    for s1 in blade.subsets() {
        let s2 = blade.minus(s1);
        let v = if split_sign(s1, s2) < 0 { c.neg() } else { c.clone() };
        out.add_term(s1, s2, v);
    }
    out
}

/// Coproduct, extended linearly.
pub fn coproduct<S: Scalar>(x: &Multivector<S>) -> Tensor2<S> {
    let mut out = Tensor2::zero(x.dim());
    for (blade, c) in x.terms() {
        for s1 in blade.subsets() {
            let s2 = blade.minus(s1);
            let v = if split_sign(s1, s2) < 0 { c.neg() } else { c.clone() };
            out.add_term(s1, s2, v);
        }
    }
    out
}

/// Counit: the coefficient of the empty blade.
pub fn counit<S: Scalar>(x: &Multivector<S>) -> S {
    x.coeff(Blade::UNIT)
}

/// Antipode: the grade involution x ↦ (−1)^∂x x.
pub fn antipode<S: Scalar>(x: &Multivector<S>) -> Multivector<S> {
    x.grade_involution()
}

/// Integral: the coefficient of the top blade.
pub fn integral<S: Scalar>(x: &Multivector<S>) -> S {
    x.coeff(Blade::top(x.dim()))
}

/// Cointegral: the top blade itself.
pub fn cointegral<S: Scalar>(dim: crate::blade::Dim) -> Multivector<S> {
    Multivector::basis_blade(dim, Blade::top(dim))
}

/// n-ary bracket [x1, …, xk] = ∫ x1 ∧ … ∧ xk.
pub fn bracket<S: Scalar>(args: &[Multivector<S>]) -> Result<S, crate::error::AlgebraError> {
    let mut it = args.iter();
    let first = it.next().ok_or(crate::error::AlgebraError::EmptyBracket)?;
    let mut acc = first.clone();
    for x in it {
        acc = acc.wedge(x)?;
    }
    Ok(integral(&acc))
}
