//! Cayley algebra: join, meet, and their co-operations.
//!
//! The meet is built from the join and the split of its right operand:
//! A ∨ B = Σ ∫(B(1) ∧ A) · B(2). The top blade ω is its exact
//! two-sided unit, and for blades of grades r, s it lands in grade
//! r + s − n when the factors jointly span.
//!
//! The comeet is the coproduct of ω with the argument wedged onto the
//! right leg from the left: Λ(x) = Σ ω(1) ⊗ (x ∧ ω(2)). Wedging onto
//! the left leg from the right gives the same operation (see the
//! mirror test); this ordering is the one that satisfies
//! coassociativity and both counit laws with ∫ as counit.

use crate::blade::Dim;
use crate::error::AlgebraError;
use crate::hopf::{coproduct, cointegral, counit, integral};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

/// Join: alias for the wedge product.
pub fn join<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    a.wedge(b)
}

/// Meet A ∨ B = Σ ∫(B(1) ∧ A) · B(2).
pub fn meet<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimMismatch(a.dim().get(), b.dim().get()));
    }
    let dim = a.dim();
    Ok(coproduct(b).fold_left(|b1| match Multivector::basis_blade(dim, b1).wedge(a) {
        Ok(w) => integral(&w),
        Err(_) => unreachable!(),
    }))
}

/// Cojoin: the coproduct (split along the join).
pub fn cojoin<S: Scalar>(x: &Multivector<S>) -> Tensor2<S> {
    coproduct(x)
}

/// Comeet Λ(x) = Σ ω(1) ⊗ (x ∧ ω(2)).
pub fn comeet<S: Scalar>(x: &Multivector<S>) -> Result<Tensor2<S>, AlgebraError> {
    coproduct(&cointegral::<S>(x.dim())).prepend_right(x)
}

/// The left-leg mirror Σ (ω(1) ∧ x) ⊗ ω(2); identical to `comeet`.
pub fn comeet_mirror<S: Scalar>(x: &Multivector<S>) -> Result<Tensor2<S>, AlgebraError> {
    coproduct(&cointegral::<S>(x.dim())).append_left(x)
}

/// Structure transpose of the meet: Δ∨(e_T) picks up e_a ⊗ e_b with
/// the coefficient of e_T in e_a ∨ e_b.
pub fn meet_coproduct<S: Scalar>(x: &Multivector<S>) -> Tensor2<S> {
    let dim = x.dim();
    let mut out = Tensor2::zero(dim);
    for a in crate::blade::blades(dim) {
        let ea = Multivector::basis_blade(dim, a);
        for b in crate::blade::blades(dim) {
            let m = meet(&ea, &Multivector::basis_blade(dim, b)).unwrap();
            for (t, mc) in m.terms() {
                let c = x.coeff(t);
                if !c.is_zero() {
                    out.add_term(a, b, c.mul(mc));
                }
            }
        }
    }
    out
}

/// Meet-against-meet-splits: Σ ε(B⟨1⟩ ∨ A) · B⟨2⟩ over the
/// structure-transpose splits of B. At n = 3 this lands back on the
/// join: double_meet(A, B) = A ∧ B.
pub fn double_meet<S: Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimMismatch(a.dim().get(), b.dim().get()));
    }
    let dim = a.dim();
    Ok(meet_coproduct(b).fold_left(|b1| {
        match meet(&Multivector::basis_blade(dim, b1), a) {
            Ok(m) => counit(&m),
            Err(_) => unreachable!(),
        }
    }))
}

/// The meet's unit: ω.
pub fn meet_unit<S: Scalar>(dim: Dim) -> Multivector<S> {
    cointegral(dim)
}

/// Expected meet grade for blade factors of grades r and s when the
/// union spans: r + s − n (None when that is negative).
pub fn meet_grade(dim: Dim, r: u32, s: u32) -> Option<u32> {
    (r + s).checked_sub(dim.get() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::Blade;
    use crate::scalar::{Rational, Scalar};

    fn d(n: usize) -> Dim {
        Dim::new(n).unwrap()
    }

    fn q(n: i64) -> Rational {
        <Rational as Scalar>::from_int(n)
    }

    fn blade_mv(dim: Dim, mask: u16) -> Multivector<Rational> {
        Multivector::basis_blade(dim, Blade(mask))
    }

    #[test]
    fn meet_of_planes_is_their_common_line() {
        let dim = d(3);
        let e12 = blade_mv(dim, 0b011);
        let e23 = blade_mv(dim, 0b110);
        let m = meet(&e12, &e23).unwrap();
        assert_eq!(m, blade_mv(dim, 0b010).neg()); // −e2
    }

    #[test]
    fn omega_is_a_two_sided_meet_unit() {
        let dim = d(3);
        let w = meet_unit::<Rational>(dim);
        for mask in 0..8u16 {
            let x = blade_mv(dim, mask);
            assert_eq!(meet(&w, &x).unwrap(), x);
            assert_eq!(meet(&x, &w).unwrap(), x);
        }
    }

    #[test]
    fn meet_is_associative_n3() {
        let dim = d(3);
        for a in 0..8u16 {
            for b in 0..8u16 {
                for c in 0..8u16 {
                    let (x, y, z) = (blade_mv(dim, a), blade_mv(dim, b), blade_mv(dim, c));
                    let l = meet(&meet(&x, &y).unwrap(), &z).unwrap();
                    let r = meet(&x, &meet(&y, &z).unwrap()).unwrap();
                    assert_eq!(l, r, "({a:#b},{b:#b},{c:#b})");
                }
            }
        }
    }

    #[test]
    fn meet_grade_law() {
        let dim = d(4);
        let e123 = blade_mv(dim, 0b0111);
        let e234 = blade_mv(dim, 0b1110);
        let m = meet(&e123, &e234).unwrap();
        assert!(!m.is_zero());
        for (b, _) in m.terms() {
            assert_eq!(b.grade(), meet_grade(dim, 3, 3).unwrap());
        }
    }

    #[test]
    fn comeet_mirror_agrees_and_counits_hold() {
        for n in 1..=3usize {
            let dim = d(n);
            for mask in 0..(1u16 << n) {
                let x = blade_mv(dim, mask);
                let t = comeet(&x).unwrap();
                assert_eq!(t, comeet_mirror(&x).unwrap(), "n={n} mask={mask:#b}");
                // (∫⊗id)Λ = id and (id⊗∫)Λ = id.
                let top = Blade::top(dim);
                let l = t.fold_left(|a| if a == top { q(1) } else { q(0) });
                let r = t.fold_right(|b| if b == top { q(1) } else { q(0) });
                assert_eq!(l, x);
                assert_eq!(r, x);
            }
        }
    }

    #[test]
    fn comeet_fixed_points() {
        let dim = d(2);
        // Λ(1) = Δ(ω)
        let unit = Multivector::unit(dim);
        assert_eq!(comeet(&unit).unwrap(), coproduct(&meet_unit::<Rational>(dim)));
        // Λ(ω) = ω⊗ω
        let w = meet_unit::<Rational>(dim);
        let mut ww = Tensor2::zero(dim);
        ww.add_term(Blade::top(dim), Blade::top(dim), q(1));
        assert_eq!(comeet(&w).unwrap(), ww);
    }

    #[test]
    fn double_meet_reproduces_the_join_n3() {
        let dim = d(3);
        for a in 0..8u16 {
            for b in 0..8u16 {
                let (x, y) = (blade_mv(dim, a), blade_mv(dim, b));
                let dm = double_meet(&x, &y).unwrap();
                let w = x.wedge(&y).unwrap();
                assert_eq!(dm, w, "({a:#b},{b:#b})");
            }
        }
    }
}
