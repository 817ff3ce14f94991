//! Scalar cochains on the exterior algebra, their convolution algebra,
//! and the coboundary pairing they induce.
//!
//! A cochain here is a scalar value per basis blade with p(1) = 1,
//! generated from an antisymmetric-in-use matrix: only the upper
//! triangle (i < j) is ever read. Even-grade values extend the 2-blade
//! values by peeling the pair that contains the lowest generator,
//! with the coproduct split signs:
//! p(e_S) = Σ_b sign({min,b}, S∖{min,b}) · p(e_{min,b}) · p(e_{S∖{min,b}}),
//! so p(e1234) = p12 p34 − p13 p24 + p14 p23. Odd grades get 0. The
//! same table results from peeling the highest generator instead.
//!
//! The convolution inverse p⁻¹ (p ⋆ p⁻¹ = p⁻¹ ⋆ p = ε) exists because
//! p(1) = 1; the sandwich operator 𝒫 = Σ p(x(1)) x(2) is then
//! invertible, giving the conjugated product
//! x ∘ y = 𝒫⁻¹(𝒫x ∧ 𝒫y) and its coboundary pairing
//! ∂p(u, v) = Σ p(u(1)) p(v(2)) p⁻¹(u(2) ∧ v(1)), which is exactly the
//! pairing whose deformed product reproduces x ∘ y.

use crate::blade::{blades, Blade, Dim};
use crate::error::AlgebraError;
use crate::form::{BilinearForm, GeneralPairing};
use crate::hopf::{coproduct, split_sign};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Scalar-per-blade table with value 1 on the empty blade.
#[derive(Clone, PartialEq, Debug)]
pub struct Cochain<S: Scalar> {
    dim: Dim,
    values: Vec<S>,
}

impl<S: Scalar> Cochain<S> {
    /// Build from explicit per-blade values (indexed by mask).
    pub fn from_values(dim: Dim, values: Vec<S>) -> Result<Self, AlgebraError> {
        if values.len() != dim.blade_count() {
            return Err(AlgebraError::BadMatrixShape { dim: dim.get() });
        }
        if !values[0].is_one() {
            return Err(AlgebraError::CochainUnitNotOne);
        }
        Ok(Cochain { dim, values })
    }

    /// Extend a matrix of 2-blade values (upper triangle only) to the
    /// whole blade table by the lowest-generator peel.
    pub fn from_matrix(m: &BilinearForm<S>) -> Self {
        let dim = m.dim();
        let count = dim.blade_count();
        let mut values = vec![S::zero(); count];
        values[0] = S::one();
        for mask in 1..count as u16 {
            let grade = mask.count_ones();
            if grade % 2 == 1 {
                continue;
            }
            if grade == 2 {
                let i = mask.trailing_zeros() as usize;
                let j = 15 - mask.leading_zeros() as usize;
                values[mask as usize] = m.get(i, j).clone();
                continue;
            }
            let lo = mask.trailing_zeros();
            let mut tot = S::zero();
            let mut rest_bits = mask & !(1 << lo);
            while rest_bits != 0 {
                let b = rest_bits.trailing_zeros();
                let pair = (1 << lo) | (1 << b);
                let rest = mask & !pair;
                let term = values[pair as usize].mul(&values[rest as usize]);
                tot = if split_sign(Blade(pair), Blade(rest)) < 0 {
                    tot.sub(&term)
                } else {
                    tot.add(&term)
                };
                rest_bits &= rest_bits - 1;
            }
            values[mask as usize] = tot;
        }
        Cochain { dim, values }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn value(&self, b: Blade) -> &S {
        &self.values[b.0 as usize]
    }

    /// Linear extension to multivectors.
    pub fn eval(&self, x: &Multivector<S>) -> S {
        let mut acc = S::zero();
        for (b, c) in x.terms() {
            let v = self.value(b);
            if !v.is_zero() {
                acc = acc.add(&c.mul(v));
            }
        }
        acc
    }

    /// The ⋆-inverse: p⁻¹(1) = 1 and
    /// p⁻¹(e_S) = −Σ_{∅≠S1} sign · p(e_S1) p⁻¹(e_S2) over splits of S.
    pub fn convolution_inverse(&self) -> Cochain<S> {
        let count = self.dim.blade_count();
        let mut inv = vec![S::zero(); count];
        inv[0] = S::one();
        for mask in 1..count as u16 {
            let blade = Blade(mask);
            let mut tot = S::zero();
            for s1 in blade.subsets() {
                if s1.is_unit() {
                    continue;
                }
                let s2 = blade.minus(s1);
                let term = self.values[s1.0 as usize].mul(&inv[s2.0 as usize]);
                tot = if split_sign(s1, s2) < 0 {
                    tot.sub(&term)
                } else {
                    tot.add(&term)
                };
            }
            inv[mask as usize] = tot.neg();
        }
        Cochain {
            dim: self.dim,
            values: inv,
        }
    }

    /// Sandwich operator Σ p(x(1)) x(2).
    pub fn operator(&self, x: &Multivector<S>) -> Result<Multivector<S>, AlgebraError> {
        if self.dim != x.dim() {
            return Err(AlgebraError::DimMismatch(self.dim.get(), x.dim().get()));
        }
        Ok(coproduct(x).fold_left(|s1| self.value(s1).clone()))
    }

    /// Mirrored operator Σ x(1) p(x(2)); agrees with `operator` because
    /// the cochain vanishes on odd grades.
    pub fn operator_mirror(&self, x: &Multivector<S>) -> Result<Multivector<S>, AlgebraError> {
        if self.dim != x.dim() {
            return Err(AlgebraError::DimMismatch(self.dim.get(), x.dim().get()));
        }
        Ok(coproduct(x).fold_right(|s2| self.value(s2).clone()))
    }
}

/// Convolution of two cochains evaluated on x: Σ f(x(1)) g(x(2)).
pub fn convolve<S: Scalar>(f: &Cochain<S>, g: &Cochain<S>, x: &Multivector<S>) -> S {
    let mut tot = S::zero();
    for (x1, x2, c) in coproduct(x).terms() {
        let a = f.value(x1);
        if a.is_zero() {
            continue;
        }
        let b = g.value(x2);
        if b.is_zero() {
            continue;
        }
        tot = tot.add(&c.mul(a).mul(b));
    }
    tot
}

/// Conjugated product x ∘ y = 𝒫⁻¹(𝒫x ∧ 𝒫y); pass the precomputed
/// inverse cochain.
pub fn circle_product<S: Scalar>(
    p: &Cochain<S>,
    p_inv: &Cochain<S>,
    x: &Multivector<S>,
    y: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    let px = p.operator(x)?;
    let py = p.operator(y)?;
    p_inv.operator(&px.wedge(&py)?)
}

/// Coboundary pairing ∂p(u, v) = Σ p(u(1)) p(v(2)) p⁻¹(u(2) ∧ v(1)).
pub fn coboundary<S: Scalar>(
    p: &Cochain<S>,
    p_inv: &Cochain<S>,
    u: &Multivector<S>,
    v: &Multivector<S>,
) -> Result<S, AlgebraError> {
    if p.dim() != u.dim() {
        return Err(AlgebraError::DimMismatch(p.dim().get(), u.dim().get()));
    }
    if p.dim() != v.dim() {
        return Err(AlgebraError::DimMismatch(p.dim().get(), v.dim().get()));
    }
    let dim = p.dim();
    let mut tot = S::zero();
    for (u1, u2, cu) in coproduct(u).terms() {
        let pu = p.value(u1);
        if pu.is_zero() {
            continue;
        }
        for (v1, v2, cv) in coproduct(v).terms() {
            let pv = p.value(v2);
            if pv.is_zero() {
                continue;
            }
            let w = Multivector::basis_blade(dim, u2)
                .wedge(&Multivector::basis_blade(dim, v1))?;
            let q = p_inv.eval(&w);
            if q.is_zero() {
                continue;
            }
            tot = tot.add(&cu.mul(cv).mul(pu).mul(pv).mul(&q));
        }
    }
    Ok(tot)
}

/// Materialize ∂p on every blade pair (small dimensions).
pub fn coboundary_pairing<S: Scalar>(
    p: &Cochain<S>,
    p_inv: &Cochain<S>,
) -> Result<GeneralPairing<S>, AlgebraError> {
    let dim = p.dim();
    let mut g = GeneralPairing::new(dim);
    for a in blades(dim) {
        let ea = Multivector::basis_blade(dim, a);
        for b in blades(dim) {
            let eb = Multivector::basis_blade(dim, b);
            g.set(a, b, coboundary(p, p_inv, &ea, &eb)?);
        }
    }
    Ok(g)
}

/// The generator block of ∂p as a matrix: F[i][j] = ∂p(e_(i+1), e_(j+1)).
pub fn coboundary_vector_block<S: Scalar>(
    p: &Cochain<S>,
    p_inv: &Cochain<S>,
) -> Result<BilinearForm<S>, AlgebraError> {
    let dim = p.dim();
    let n = dim.get() as usize;
    let mut m = BilinearForm::zero(dim);
    for i in 0..n {
        for j in 0..n {
            let ei = Multivector::basis_blade(dim, Blade(1 << i));
            let ej = Multivector::basis_blade(dim, Blade(1 << j));
            m.set(i, j, coboundary(p, p_inv, &ei, &ej)?);
        }
    }
    Ok(m)
}
