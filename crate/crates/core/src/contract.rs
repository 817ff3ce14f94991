//! Contractions along a blade pairing, the deformed (Clifford-style)
//! product built from them, and the dual operations driven by a
//! coscalar 2-tensor.
//!
//! Everything is split-based: a ⌟ x = Σ ⟨a, x(1)⟩ x(2) and
//! a ⌞ x = Σ a(1) ⟨a(2), x⟩, with ⟨,⟩ the blade pairing. The deformed
//! product sandwiches the pairing between the outer split legs:
//! u ∘ v = Σ ⟨u(2), v(1)⟩ u(1) ∧ v(2), with no extra crossing sign.
//! `generator_contract`/`recursive_contract` compute the left
//! contraction by peeling one generator at a time straight off the
//! matrix — an independent route to the same values, handy as a
//! cross-check and as the cheaper path for vector contractions.

use crate::blade::{wedge_sign, Blade};
use crate::error::AlgebraError;
use crate::form::{BilinearForm, BladePairing};
use crate::hopf::coproduct;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

fn check_dims<S: Scalar>(
    d: crate::blade::Dim,
    x: &Multivector<S>,
) -> Result<(), AlgebraError> {
    if d == x.dim() {
        Ok(())
    } else {
        Err(AlgebraError::DimMismatch(d.get(), x.dim().get()))
    }
}

/// Left contraction a ⌟ x = Σ ⟨a, x(1)⟩ x(2).
pub fn left_contract<S: Scalar, P: BladePairing<S>>(
    p: &P,
    a: &Multivector<S>,
    x: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    check_dims(p.dim(), a)?;
    check_dims(p.dim(), x)?;
    let dim = p.dim();
    Ok(coproduct(x).fold_left(|x1| p.eval(a, &Multivector::basis_blade(dim, x1))))
}

/// Right contraction a ⌞ x = Σ a(1) ⟨a(2), x⟩.
pub fn right_contract<S: Scalar, P: BladePairing<S>>(
    p: &P,
    a: &Multivector<S>,
    x: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    check_dims(p.dim(), a)?;
    check_dims(p.dim(), x)?;
    let dim = p.dim();
    Ok(coproduct(a).fold_right(|a2| p.eval(&Multivector::basis_blade(dim, a2), x)))
}

/// Contraction by the single generator e_(i+1) straight off the matrix:
/// e_i ⌟ e_S = Σ_k (−1)^k B[i][j_k] e_(S∖j_k), k the position of j_k
/// in S.
pub fn generator_contract<S: Scalar>(
    form: &BilinearForm<S>,
    i: usize,
    x: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    check_dims(form.dim(), x)?;
    if i >= form.dim().get() as usize {
        return Err(AlgebraError::BadGenerator {
            index: i + 1,
            dim: form.dim().get(),
        });
    }
    let mut out = Multivector::zero(form.dim());
    for (b, c) in x.terms() {
        let mut m = b.0;
        let mut pos = 0u32;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            let val = form.get(i, j);
            if !val.is_zero() {
                let term = val.mul(c);
                out.add_term(
                    Blade(b.0 & !(1 << j)),
                    if pos % 2 == 0 { term } else { term.neg() },
                );
            }
            pos += 1;
            m &= m - 1;
        }
    }
    Ok(out)
}

/// Left contraction computed by peeling the left factor one generator
/// at a time, highest index applied first:
/// (e_a ∧ e_b ∧ …) ⌟ x = e_a ⌟ (e_b ⌟ (… ⌟ x)).
pub fn recursive_contract<S: Scalar>(
    form: &BilinearForm<S>,
    u: &Multivector<S>,
    x: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    check_dims(form.dim(), u)?;
    check_dims(form.dim(), x)?;
    let mut out = Multivector::zero(form.dim());
    for (a, ca) in u.terms() {
        let mut cur = x.clone();
        let idxs: Vec<usize> = (0..16).filter(|i| a.0 & (1 << i) != 0).collect();
        for &i in idxs.iter().rev() {
            cur = generator_contract(form, i, &cur)?;
            if cur.is_zero() {
                break;
            }
        }
        out = out.add(&cur.scale(ca))?;
    }
    Ok(out)
}

/// Deformed product u ∘ v = Σ ⟨u(2), v(1)⟩ u(1) ∧ v(2).
pub fn clifford_product<S: Scalar, P: BladePairing<S>>(
    p: &P,
    u: &Multivector<S>,
    v: &Multivector<S>,
) -> Result<Multivector<S>, AlgebraError> {
    check_dims(p.dim(), u)?;
    check_dims(p.dim(), v)?;
    let mut out = Multivector::zero(p.dim());
    for (u1, u2, cu) in coproduct(u).terms() {
        for (v1, v2, cv) in coproduct(v).terms() {
            let s = p.pair(u2, v1);
            if s.is_zero() {
                continue;
            }
            let w = wedge_sign(u1, v2);
            if w == 0 {
                continue;
            }
            let val = s.mul(cu).mul(cv);
            out.add_term(u1.union(v2), if w < 0 { val.neg() } else { val });
        }
    }
    Ok(out)
}

/// Left cocontraction Δ⌟(x) = Σ C(1) ⊗ (C(2) ∧ x), C the coscalar.
pub fn left_cocontract<S: Scalar>(
    coscalar: &Tensor2<S>,
    x: &Multivector<S>,
) -> Result<Tensor2<S>, AlgebraError> {
    coscalar.append_right(x)
}

/// Right cocontraction Δ⌞(x) = Σ (x ∧ C(1)) ⊗ C(2).
pub fn right_cocontract<S: Scalar>(
    coscalar: &Tensor2<S>,
    x: &Multivector<S>,
) -> Result<Tensor2<S>, AlgebraError> {
    coscalar.prepend_left(x)
}

/// Deformed coproduct Δc(x) = Σ (x(1) ∧ C(1)) ⊗ (C(2) ∧ x(2)), no
/// extra crossing sign; equals Δ at C = 1⊗1 and hits C itself at
/// x = 1.
pub fn clifford_coproduct<S: Scalar>(
    coscalar: &Tensor2<S>,
    x: &Multivector<S>,
) -> Result<Tensor2<S>, AlgebraError> {
    if coscalar.dim() != x.dim() {
        return Err(AlgebraError::DimMismatch(
            coscalar.dim().get(),
            x.dim().get(),
        ));
    }
    let mut out = Tensor2::zero(x.dim());
    for (x1, x2, cx) in coproduct(x).terms() {
        for (c1, c2, cc) in coscalar.terms() {
            let s1 = wedge_sign(x1, c1);
            let s2 = wedge_sign(c2, x2);
            if s1 == 0 || s2 == 0 {
                continue;
            }
            let mut v = cx.mul(cc);
            if s1 * s2 < 0 {
                v = v.neg();
            }
            out.add_term(x1.union(c1), c2.union(x2), v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::Dim;
    use crate::form::{coscalar_extension, ExtendedForm};
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

    fn quaternion_form() -> ExtendedForm<Rational> {
        ExtendedForm::new(BilinearForm::diagonal(d(2), &[q(-1), q(-1)]).unwrap())
    }

    #[test]
    fn quaternion_multiplication_table() {
        let f = quaternion_form();
        let dim = d(2);
        let e1 = blade_mv(dim, 0b01);
        let e2 = blade_mv(dim, 0b10);
        let e12 = blade_mv(dim, 0b11);
        let one = Multivector::unit(dim);
        let cases: Vec<(&Multivector<Rational>, &Multivector<Rational>, Multivector<Rational>)> = vec![
            (&e1, &e1, one.neg()),
            (&e2, &e2, one.neg()),
            (&e12, &e12, one.neg()),
            (&e1, &e2, e12.clone()),
            (&e2, &e1, e12.neg()),
            (&e1, &e12, e2.neg()),
            (&e12, &e1, e2.clone()),
            (&e2, &e12, e1.clone()),
            (&e12, &e2, e1.neg()),
        ];
        for (u, v, want) in cases {
            assert_eq!(clifford_product(&f, u, v).unwrap(), want);
        }
    }

    #[test]
    fn quaternion_product_is_associative() {
        let f = quaternion_form();
        let dim = d(2);
        for a in 0..4u16 {
            for b in 0..4u16 {
                for c in 0..4u16 {
                    let (x, y, z) = (blade_mv(dim, a), blade_mv(dim, b), blade_mv(dim, c));
                    let l = clifford_product(&f, &clifford_product(&f, &x, &y).unwrap(), &z)
                        .unwrap();
                    let r = clifford_product(&f, &x, &clifford_product(&f, &y, &z).unwrap())
                        .unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn contraction_by_a_vector_follows_the_matrix() {
        // B = [[1,2],[3,4]]: e1 ⌟ e12 = B11·e2 − B12·e1.
        let form = BilinearForm::new(d(2), vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        let f = ExtendedForm::new(form.clone());
        let dim = d(2);
        let got = left_contract(&f, &blade_mv(dim, 0b01), &blade_mv(dim, 0b11)).unwrap();
        let want = blade_mv(dim, 0b10).add(&blade_mv(dim, 0b01).scale(&q(-2))).unwrap();
        assert_eq!(got, want);
        assert_eq!(
            recursive_contract(&form, &blade_mv(dim, 0b01), &blade_mv(dim, 0b11)).unwrap(),
            want
        );
    }

    #[test]
    fn anticommutation_with_wedge_left() {
        // x ⌟ (y ∧ u) + y ∧ (x ⌟ u) = B(x, y) u for vectors x, y.
        let form = BilinearForm::new(d(3), vec![
            vec![q(1), q(2), q(0)],
            vec![q(5), q(-1), q(1)],
            vec![q(0), q(3), q(2)],
        ])
        .unwrap();
        let f = ExtendedForm::new(form.clone());
        let dim = d(3);
        for i in 0..3 {
            for j in 0..3 {
                let x = blade_mv(dim, 1 << i);
                let y = blade_mv(dim, 1 << j);
                for mask in 0..8u16 {
                    let u = blade_mv(dim, mask);
                    let lhs = left_contract(&f, &x, &y.wedge(&u).unwrap())
                        .unwrap()
                        .add(&y.wedge(&left_contract(&f, &x, &u).unwrap()).unwrap())
                        .unwrap();
                    assert_eq!(lhs, u.scale(form.get(i, j)));
                }
            }
        }
    }

    #[test]
    fn right_contraction_splits_the_left_argument() {
        // e12 ⌞ e2 with B = id: Σ e12(1) ⟨e12(2), e2⟩ = −e1... check by
        // the recursion e12 ⌞ e2 = ⟨e2, e2⟩-weighted split, expect −e1? It
        // is e1 ⟨e2,e2⟩ from split (e1, e2): sign +1 ⇒ +e1.
        let f = ExtendedForm::new(BilinearForm::<Rational>::identity(d(2)));
        let dim = d(2);
        let got = right_contract(&f, &blade_mv(dim, 0b11), &blade_mv(dim, 0b10)).unwrap();
        assert_eq!(got, blade_mv(dim, 0b01));
    }

    #[test]
    fn cocontraction_examples() {
        // C with the single entry C[0][1] = c: C^∧ = 1⊗1 + c e1⊗e2.
        let dim = d(2);
        let c = q(7);
        let mut m = BilinearForm::zero(dim);
        m.set(0, 1, c.clone());
        let cx = coscalar_extension(&m).unwrap();
        let left = left_cocontract(&cx, &blade_mv(dim, 0b01)).unwrap();
        // 1⊗e1 − c e1⊗e12
        assert_eq!(left.coeff(Blade::UNIT, Blade(0b01)), q(1));
        assert_eq!(left.coeff(Blade(0b01), Blade(0b11)), c.neg());
        assert_eq!(left.num_terms(), 2);
        let right = right_cocontract(&cx, &blade_mv(dim, 0b10)).unwrap();
        // e2⊗1 − c e12⊗e2
        assert_eq!(right.coeff(Blade(0b10), Blade::UNIT), q(1));
        assert_eq!(right.coeff(Blade(0b11), Blade(0b10)), c.neg());
        assert_eq!(right.num_terms(), 2);
    }

    #[test]
    fn deformed_coproduct_fixed_points() {
        let dim = d(2);
        let m = BilinearForm::new(dim, vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        let cx = coscalar_extension(&m).unwrap();
        // Δc(1) = C^∧
        assert_eq!(
            clifford_coproduct(&cx, &Multivector::unit(dim)).unwrap(),
            cx
        );
        // C = 0 ⇒ Δc = Δ
        let zero = coscalar_extension(&BilinearForm::<Rational>::zero(dim)).unwrap();
        for mask in 0..4u16 {
            let x = blade_mv(dim, mask);
            assert_eq!(clifford_coproduct(&zero, &x).unwrap(), coproduct(&x));
        }
    }

    #[test]
    fn counit_of_deformed_product_is_the_pairing() {
        let f = ExtendedForm::new(
            BilinearForm::new(d(2), vec![vec![q(2), q(-3)], vec![q(1), q(5)]]).unwrap(),
        );
        let dim = d(2);
        for a in 0..4u16 {
            for b in 0..4u16 {
                let u = blade_mv(dim, a);
                let v = blade_mv(dim, b);
                let prod = clifford_product(&f, &u, &v).unwrap();
                assert_eq!(crate::hopf::counit(&prod), f.pair(Blade(a), Blade(b)));
            }
        }
    }
}
