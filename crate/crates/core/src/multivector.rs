//! Sparse multivectors over an exterior algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::blade::{wedge_sign, Blade, Dim};
use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// Finite linear combination of basis blades; zero coefficients are
/// never stored, and terms iterate ascending by blade mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector<S: Scalar> {
    dim: Dim,
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: Dim) -> Self {
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The algebra unit Id (empty blade, coefficient 1).
    pub fn unit(dim: Dim) -> Self {
        Multivector::scalar(dim, S::one())
    }

    pub fn scalar(dim: Dim, c: S) -> Self {
        let mut mv = Multivector::zero(dim);
        mv.add_term(Blade::UNIT, c);
        mv
    }

    /// Single generator e_index (1-based).
    pub fn generator(dim: Dim, index: usize) -> Result<Self, AlgebraError> {
        Ok(Multivector::basis_blade(dim, Blade::generator(dim, index)?))
    }

    /// Basis blade with coefficient 1. Panics if the blade does not fit
    /// the dimension (a programmer error; user input goes through
    /// [`Blade::from_indices`]).
    pub fn basis_blade(dim: Dim, b: Blade) -> Self {
        assert!(b.fits(dim), "blade does not fit dimension {dim}");
        let mut mv = Multivector::zero(dim);
        mv.add_term(b, S::one());
        mv
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

    /// Terms ascending by blade mask.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    /// Coefficient of a blade (zero when absent).
    pub fn coeff(&self, b: Blade) -> S {
        self.terms.get(&b).cloned().unwrap_or_else(S::zero)
    }

    /// Accumulate `c` onto blade `b`, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: Blade, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    fn check_dim(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimMismatch(self.dim.get(), other.dim.get()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, x)| (*b, x.mul(c))).collect(),
        }
    }

    /// Exterior product. Bilinear over the blade products
    /// e_a ∧ e_b = wedge_sign(a,b) · e_{a∪b}.
    pub fn wedge(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dim(other)?;
        let mut out = Multivector::zero(self.dim);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                match wedge_sign(a, b) {
                    0 => {}
                    1 => out.add_term(a.union(b), ca.mul(cb)),
                    _ => out.add_term(a.union(b), ca.mul(cb).neg()),
                }
            }
        }
        Ok(out)
    }

    /// Terms of grade k only.
    pub fn grade_project(&self, k: usize) -> Result<Self, AlgebraError> {
        if k > self.dim.get() as usize {
            return Err(AlgebraError::GradeOutOfRange {
                grade: k,
                dim: self.dim.get(),
            });
        }
        Ok(Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() as usize == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        })
    }

    /// Main involution: each grade-k term picks up (−1)^k.
    pub fn grade_involution(&self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.grade() % 2 == 0 { c.clone() } else { c.neg() }))
                .collect(),
        }
    }
}

/// Canonical text form: terms ascending by mask, coefficient 1 elided,
/// the empty blade printed as a bare number. A leading negative sign
/// sits flush against a number ("-3/4 e12") but is spaced off a blade
/// label ("- e12"); later terms always join with " + " / " - ".
impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (b, c) in self.terms() {
            let body = term_text(self.dim, b, &c.abs());
            if first {
                if c.is_negative() {
                    if body.starts_with(|ch: char| ch.is_ascii_digit()) {
                        write!(f, "-{body}")?;
                    } else {
                        write!(f, "- {body}")?;
                    }
                } else {
                    f.write_str(&body)?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

fn term_text<S: Scalar>(dim: Dim, b: Blade, magnitude: &S) -> String {
    if b.is_unit() {
        magnitude.to_string()
    } else if magnitude.is_one() {
        b.label(dim)
    } else {
        format!("{} {}", magnitude, b.label(dim))
    }
}
