//! Bilinear forms on generators and their two extensions: the
//! determinant extension to blade pairs, and the coscalar (exponential)
//! extension to a 2-tensor.
//!
//! No symmetry or non-degeneracy is assumed anywhere; the matrix is an
//! arbitrary square array of scalars.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::blade::{blades, Blade, Dim};
use crate::error::AlgebraError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

/// n×n matrix of scalars, row-major; `get(i, j)` is 0-based.
#[derive(Clone, PartialEq, Debug)]
pub struct BilinearForm<S: Scalar> {
    dim: Dim,
    entries: Vec<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(dim: Dim, rows: Vec<Vec<S>>) -> Result<Self, AlgebraError> {
        let n = dim.get() as usize;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::BadMatrixShape { dim: dim.get() });
        }
        Ok(BilinearForm {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(dim: Dim) -> Self {
        let n = dim.get() as usize;
        BilinearForm {
            dim,
            entries: (0..n * n).map(|_| S::zero()).collect(),
        }
    }

    pub fn identity(dim: Dim) -> Self {
        let mut f = Self::zero(dim);
        for i in 0..dim.get() as usize {
            f.set(i, i, S::one());
        }
        f
    }

    pub fn diagonal(dim: Dim, diag: &[S]) -> Result<Self, AlgebraError> {
        if diag.len() != dim.get() as usize {
            return Err(AlgebraError::BadMatrixShape { dim: dim.get() });
        }
        let mut f = Self::zero(dim);
        for (i, v) in diag.iter().enumerate() {
            f.set(i, i, v.clone());
        }
        Ok(f)
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim.get() as usize + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.entries[i * self.dim.get() as usize + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// Scalar-valued pairing on blades; the hook shared by the determinant
/// extension of a form and an arbitrary pairing table.
pub trait BladePairing<S: Scalar> {
    fn dim(&self) -> Dim;
    fn pair(&self, a: Blade, b: Blade) -> S;

    /// Bilinear evaluation on multivectors.
    fn eval(&self, u: &Multivector<S>, v: &Multivector<S>) -> S {
        let mut acc = S::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                let p = self.pair(a, b);
                if !p.is_zero() {
                    acc = acc.add(&ca.mul(cb).mul(&p));
                }
            }
        }
        acc
    }
}

/// Determinant extension of a generator form to blade pairs, memoized.
///
/// For blades I, J of equal grade the value is the determinant of the
/// matrix whose rows are indexed by I in descending order and columns
/// by J in ascending order; unequal grades pair to 0 and the empty
/// pair to 1. Computed by expanding along the row of max(I):
/// det(I, J) = Σ_l (−1)^l B[max I][j_l] det(I∖max, J∖j_l).
pub struct ExtendedForm<S: Scalar> {
    form: BilinearForm<S>,
    memo: RwLock<HashMap<(u16, u16), S>>,
}

impl<S: Scalar> ExtendedForm<S> {
    pub fn new(form: BilinearForm<S>) -> Self {
        ExtendedForm {
            form,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn form(&self) -> &BilinearForm<S> {
        &self.form
    }
}

impl<S: Scalar> BladePairing<S> for ExtendedForm<S> {
    fn dim(&self) -> Dim {
        self.form.dim
    }

    fn pair(&self, a: Blade, b: Blade) -> S {
        if a.grade() != b.grade() {
            return S::zero();
        }
        if a.is_unit() {
            return S::one();
        }
        if let Some(v) = self.memo.read().unwrap().get(&(a.0, b.0)) {
            return v.clone();
        }
        let imax = 15 - a.0.leading_zeros() as usize;
        let rest = Blade(a.0 & !(1 << imax));
        let mut tot = S::zero();
        let mut m = b.0;
        let mut l = 0u32;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            let entry = self.form.get(imax, j);
            if !entry.is_zero() {
                let sub = self.pair(rest, Blade(b.0 & !(1 << j)));
                let term = entry.mul(&sub);
                tot = if l % 2 == 0 {
                    tot.add(&term)
                } else {
                    tot.sub(&term)
                };
            }
            l += 1;
            m &= m - 1;
        }
        self.memo
            .write()
            .unwrap()
            .entry((a.0, b.0))
            .or_insert_with(|| tot.clone());
        tot
    }
}

/// Arbitrary pairing table on blades; entries default to 0. Lets the
/// deformed product run against pairings that are not determinant
/// extensions of any generator form.
#[derive(Clone, PartialEq, Debug)]
pub struct GeneralPairing<S: Scalar> {
    dim: Dim,
    table: HashMap<(u16, u16), S>,
}

impl<S: Scalar> GeneralPairing<S> {
    pub fn new(dim: Dim) -> Self {
        GeneralPairing {
            dim,
            table: HashMap::new(),
        }
    }

    /// Materialize every blade pair of another pairing (meant for small
    /// dimensions), so single entries can then be perturbed.
    pub fn tabulate<P: BladePairing<S>>(p: &P) -> Self {
        let dim = p.dim();
        let mut g = GeneralPairing::new(dim);
        for a in blades(dim) {
            for b in blades(dim) {
                g.set(a, b, p.pair(a, b));
            }
        }
        g
    }

    pub fn set(&mut self, a: Blade, b: Blade, v: S) {
        if v.is_zero() {
            self.table.remove(&(a.0, b.0));
        } else {
            self.table.insert((a.0, b.0), v);
        }
    }
}

impl<S: Scalar> BladePairing<S> for GeneralPairing<S> {
    fn dim(&self) -> Dim {
        self.dim
    }

    fn pair(&self, a: Blade, b: Blade) -> S {
        self.table
            .get(&(a.0, b.0))
            .cloned()
            .unwrap_or_else(S::zero)
    }
}

/// Exponential extension of a generator form to a 2-tensor:
/// C^∧ = Σ_k (1/k!) C^(·k) under the graded tensor product, where
/// C = Σ C[i][j] e_(i+1) ⊗ e_(j+1). Needs exact scalars for the 1/k!.
pub fn coscalar_extension<S: Scalar>(c: &BilinearForm<S>) -> Result<Tensor2<S>, AlgebraError> {
    if !S::EXACT {
        return Err(AlgebraError::ExactScalarRequired);
    }
    let dim = c.dim();
    let n = dim.get() as usize;
    let mut base = Tensor2::zero(dim);
    for i in 0..n {
        for j in 0..n {
            base.add_term(Blade(1 << i), Blade(1 << j), c.get(i, j).clone());
        }
    }
    let mut acc = Tensor2::zero(dim);
    acc.add_term(Blade::UNIT, Blade::UNIT, S::one());
    let mut power = acc.clone();
    let mut factorial = 1u64;
    for k in 1..=n as u64 {
        power = power.graded_mul(&base)?;
        if power.is_zero() {
            break;
        }
        factorial *= k;
        acc = acc.add(&power.scale(&S::ratio(1, factorial)))?;
    }
    Ok(acc)
}
