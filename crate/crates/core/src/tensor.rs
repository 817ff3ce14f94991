//! Rank-2 and rank-3 tensors over the exterior algebra.
//!
//! `Tensor2` stores elements of V^∧ ⊗ V^∧ canonically as blade⊗blade
//! terms (sorted by the pair of masks), so equality is semantic tensor
//! equality. The pair view used for rendering folds each term's
//! coefficient into the right factor. The product on V^∧ ⊗ V^∧ is the
//! graded one: crossing the inner legs costs (−1)^(grade·grade).

use std::collections::BTreeMap;

use crate::blade::{wedge_sign, Blade, Dim};
use crate::error::AlgebraError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2<S: Scalar> {
    dim: Dim,
    terms: BTreeMap<(Blade, Blade), S>,
}

impl<S: Scalar> Tensor2<S> {
    pub fn zero(dim: Dim) -> Self {
        Tensor2 {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms ascending by (left mask, right mask).
    pub fn terms(&self) -> impl Iterator<Item = (Blade, Blade, &S)> {
        self.terms.iter().map(|((a, b), c)| (*a, *b, c))
    }

    pub fn coeff(&self, left: Blade, right: Blade) -> S {
        self.terms
            .get(&(left, right))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, left: Blade, right: Blade, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_dim(&self, dim: Dim) -> Result<(), AlgebraError> {
        if self.dim == dim {
            Ok(())
        } else {
            Err(AlgebraError::DimMismatch(self.dim.get(), dim.get()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(other.dim)?;
        let mut out = self.clone();
        for (a, b, c) in other.terms() {
            out.add_term(a, b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Tensor2::zero(self.dim);
        }
        Tensor2 {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (*k, x.mul(c)))
                .collect(),
        }
    }

    /// Graded swap τ̂(a⊗b) = (−1)^(∂a·∂b) b⊗a.
    pub fn graded_switch(&self) -> Self {
        let mut out = Tensor2::zero(self.dim);
        for (a, b, c) in self.terms() {
            let flip = (a.grade() * b.grade()) % 2 == 1;
            out.add_term(b, a, if flip { c.neg() } else { c.clone() });
        }
        out
    }

    /// Componentwise graded product:
    /// (a⊗b)·(a'⊗b') = (−1)^(∂b·∂a') (a∧a')⊗(b∧b').
    pub fn graded_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(other.dim)?;
        let mut out = Tensor2::zero(self.dim);
        for (a, b, c) in self.terms() {
            for (a2, b2, c2) in other.terms() {
                let s1 = wedge_sign(a, a2);
                let s2 = wedge_sign(b, b2);
                if s1 == 0 || s2 == 0 {
                    continue;
                }
                let mut neg = s1 < 0;
                if s2 < 0 {
                    neg = !neg;
                }
                if (b.grade() * a2.grade()) % 2 == 1 {
                    neg = !neg;
                }
                let v = c.mul(c2);
                out.add_term(a.union(a2), b.union(b2), if neg { v.neg() } else { v });
            }
        }
        Ok(out)
    }

    /// m ∧ (left leg), leaving the right leg alone.
    pub fn prepend_left(&self, m: &Multivector<S>) -> Result<Self, AlgebraError> {
        self.leg_wedge(m, true, true)
    }

    /// (left leg) ∧ m.
    pub fn append_left(&self, m: &Multivector<S>) -> Result<Self, AlgebraError> {
        self.leg_wedge(m, true, false)
    }

    /// m ∧ (right leg).
    pub fn prepend_right(&self, m: &Multivector<S>) -> Result<Self, AlgebraError> {
        self.leg_wedge(m, false, true)
    }

    /// (right leg) ∧ m.
    pub fn append_right(&self, m: &Multivector<S>) -> Result<Self, AlgebraError> {
        self.leg_wedge(m, false, false)
    }

    fn leg_wedge(
        &self,
        m: &Multivector<S>,
        left_leg: bool,
        m_first: bool,
    ) -> Result<Self, AlgebraError> {
        self.check_dim(m.dim())?;
        let mut out = Tensor2::zero(self.dim);
        for (a, b, c) in self.terms() {
            let leg = if left_leg { a } else { b };
            for (x, cx) in m.terms() {
                let s = if m_first {
                    wedge_sign(x, leg)
                } else {
                    wedge_sign(leg, x)
                };
                if s == 0 {
                    continue;
                }
                let joined = leg.union(x);
                let v = c.mul(cx);
                let v = if s < 0 { v.neg() } else { v };
                if left_leg {
                    out.add_term(joined, b, v);
                } else {
                    out.add_term(a, joined, v);
                }
            }
        }
        Ok(out)
    }

    /// Collapse the left leg through a scalar-valued map:
    /// Σ f(a)·c · e_b.
    pub fn fold_left<F: FnMut(Blade) -> S>(&self, mut f: F) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim);
        for (a, b, c) in self.terms() {
            out.add_term(b, f(a).mul(c));
        }
        out
    }

    /// Collapse the right leg: Σ c·f(b) · e_a.
    pub fn fold_right<F: FnMut(Blade) -> S>(&self, mut f: F) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim);
        for (a, b, c) in self.terms() {
            out.add_term(a, c.mul(&f(b)));
        }
        out
    }

    /// Expand the left leg blade-by-blade through a tensor-valued map.
    pub fn map_left<F: FnMut(Blade) -> Tensor2<S>>(&self, mut f: F) -> Tensor3<S> {
        let mut out = Tensor3::zero(self.dim);
        for (a, b, c) in self.terms() {
            for (a1, a2, c2) in f(a).terms() {
                out.add_term(a1, a2, b, c.mul(c2));
            }
        }
        out
    }

    /// Expand the right leg blade-by-blade through a tensor-valued map.
    pub fn map_right<F: FnMut(Blade) -> Tensor2<S>>(&self, mut f: F) -> Tensor3<S> {
        let mut out = Tensor3::zero(self.dim);
        for (a, b, c) in self.terms() {
            for (b1, b2, c2) in f(b).terms() {
                out.add_term(a, b1, b2, c.mul(c2));
            }
        }
        out
    }

    /// Pair view for rendering: one (left, right) multivector pair per
    /// stored term, the coefficient folded into the right factor.
    pub fn pairs(&self) -> Vec<(Multivector<S>, Multivector<S>)> {
        self.terms()
            .map(|(a, b, c)| {
                let left = Multivector::basis_blade(self.dim, a);
                let mut right = Multivector::zero(self.dim);
                right.add_term(b, c.clone());
                (left, right)
            })
            .collect()
    }
}

/// Canonical element of V^∧ ⊗ V^∧ ⊗ V^∧; used by the coassociativity
/// and mixed-identity checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3<S: Scalar> {
    dim: Dim,
    terms: BTreeMap<(Blade, Blade, Blade), S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn zero(dim: Dim) -> Self {
        Tensor3 {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, Blade, Blade, &S)> {
        self.terms.iter().map(|((a, b, c), v)| (*a, *b, *c, v))
    }

    pub fn add_term(&mut self, a: Blade, b: Blade, c: Blade, v: S) {
        if v.is_zero() {
            return;
        }
        match self.terms.entry((a, b, c)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&v);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}
