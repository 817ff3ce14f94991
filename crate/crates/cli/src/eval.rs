//! Expression evaluation against a session (dimension, optional form,
//! coscalar, cochain). Values are multivectors, 2-tensors, or bare
//! scalars; tensors are terminal — no operator or function accepts one.

use gfc_core::*;

use crate::parser::{BinOp, Expr};

pub struct Session<S: Scalar> {
    pub dim: Dim,
    pub form: Option<ExtendedForm<S>>,
    pub coscalar: Option<Tensor2<S>>,
    /// The cochain and its precomputed convolution inverse.
    pub cochain: Option<(Cochain<S>, Cochain<S>)>,
}

impl<S: Scalar> Session<S> {
    pub fn bare(dim: Dim) -> Self {
        Session {
            dim,
            form: None,
            coscalar: None,
            cochain: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Value<S: Scalar> {
    Mv(Multivector<S>),
    Tensor(Tensor2<S>),
    Num(S),
}

#[derive(Debug)]
pub struct EvalError(pub String);

impl From<AlgebraError> for EvalError {
    fn from(e: AlgebraError) -> Self {
        EvalError(e.to_string())
    }
}

fn as_mv<S: Scalar>(v: Value<S>, dim: Dim, what: &str) -> Result<Multivector<S>, EvalError> {
    match v {
        Value::Mv(m) => Ok(m),
        Value::Num(c) => Ok(Multivector::unit(dim).scale(&c)),
        Value::Tensor(_) => Err(EvalError(format!(
            "{what} cannot take a tensor operand; tensors are terminal"
        ))),
    }
}

pub fn eval<S: Scalar>(e: &Expr, s: &Session<S>) -> Result<Value<S>, EvalError> {
    match e {
        Expr::Rational(lit) => S::parse(lit)
            .map(Value::Num)
            .ok_or_else(|| EvalError(format!("bad numeric literal `{lit}`"))),
        Expr::Blade(idx) => {
            let b = Blade::from_indices(s.dim, idx)?;
            Ok(Value::Mv(Multivector::basis_blade(s.dim, b)))
        }
        Expr::Unit => Ok(Value::Mv(Multivector::unit(s.dim))),
        Expr::Neg(inner) => match eval(inner, s)? {
            Value::Num(c) => Ok(Value::Num(c.neg())),
            Value::Mv(m) => Ok(Value::Mv(m.neg())),
            Value::Tensor(_) => Err(EvalError(
                "`-` cannot take a tensor operand; tensors are terminal".into(),
            )),
        },
        Expr::Bin(op, l, r) => {
            let lv = eval(l, s)?;
            let rv = eval(r, s)?;
            apply_bin(*op == BinOp::Add, op, lv, rv, s)
        }
        Expr::Grade { arg, k } => {
            let m = as_mv(eval(arg, s)?, s.dim, "grade")?;
            Ok(Value::Mv(m.grade_project(*k as usize)?))
        }
        Expr::Call { name, args, .. } => {
            let vals: Vec<Value<S>> = args
                .iter()
                .map(|a| eval(a, s))
                .collect::<Result<_, _>>()?;
            call(name, vals, s)
        }
    }
}

fn apply_bin<S: Scalar>(
    _is_add: bool,
    op: &BinOp,
    lv: Value<S>,
    rv: Value<S>,
    s: &Session<S>,
) -> Result<Value<S>, EvalError> {
    let dim = s.dim;
    match op {
        BinOp::Add | BinOp::Sub => {
            if let (Value::Num(a), Value::Num(b)) = (&lv, &rv) {
                return Ok(Value::Num(if *op == BinOp::Add {
                    a.add(b)
                } else {
                    a.sub(b)
                }));
            }
            let a = as_mv(lv, dim, "`+`/`-`")?;
            let b = as_mv(rv, dim, "`+`/`-`")?;
            Ok(Value::Mv(if *op == BinOp::Add {
                a.add(&b)?
            } else {
                a.sub(&b)?
            }))
        }
        BinOp::Wedge => {
            if let (Value::Num(a), Value::Num(b)) = (&lv, &rv) {
                return Ok(Value::Num(a.mul(b)));
            }
            let a = as_mv(lv, dim, "`^`")?;
            let b = as_mv(rv, dim, "`^`")?;
            Ok(Value::Mv(a.wedge(&b)?))
        }
        BinOp::Meet => {
            let a = as_mv(lv, dim, "`v`")?;
            let b = as_mv(rv, dim, "`v`")?;
            Ok(Value::Mv(meet(&a, &b)?))
        }
        BinOp::Clifford => {
            let f = s
                .form
                .as_ref()
                .ok_or_else(|| EvalError("form required for `*` (pass --form)".into()))?;
            let a = as_mv(lv, dim, "`*`")?;
            let b = as_mv(rv, dim, "`*`")?;
            Ok(Value::Mv(clifford_product(f, &a, &b)?))
        }
        BinOp::LeftContr | BinOp::RightContr => {
            let name = if *op == BinOp::LeftContr { "`_|`" } else { "`|_`" };
            let f = s.form.as_ref().ok_or_else(|| {
                EvalError(format!("form required for {name} (pass --form)"))
            })?;
            let a = as_mv(lv, dim, name)?;
            let b = as_mv(rv, dim, name)?;
            Ok(Value::Mv(if *op == BinOp::LeftContr {
                left_contract(f, &a, &b)?
            } else {
                right_contract(f, &a, &b)?
            }))
        }
    }
}

fn call<S: Scalar>(
    name: &str,
    vals: Vec<Value<S>>,
    s: &Session<S>,
) -> Result<Value<S>, EvalError> {
    let dim = s.dim;
    let need_coscalar = || {
        s.coscalar
            .as_ref()
            .ok_or_else(|| EvalError(format!("coscalar required for `{name}` (pass --coform)")))
    };
    let need_cochain = || {
        s.cochain
            .as_ref()
            .ok_or_else(|| EvalError(format!("cochain required for `{name}` (pass --p)")))
    };
    let mut vals = vals.into_iter();
    let mut arg = |what: &str| -> Result<Multivector<S>, EvalError> {
        as_mv(vals.next().expect("arity checked at parse"), dim, what)
    };
    match name {
        "delta" => Ok(Value::Tensor(coproduct(&arg("delta")?))),
        "cojoin" => Ok(Value::Tensor(cojoin(&arg("cojoin")?))),
        "comeet" => Ok(Value::Tensor(comeet(&arg("comeet")?)?)),
        "cdelta" => {
            let c = need_coscalar()?;
            Ok(Value::Tensor(clifford_coproduct(c, &arg("cdelta")?)?))
        }
        "lcocon" => {
            let c = need_coscalar()?;
            Ok(Value::Tensor(left_cocontract(c, &arg("lcocon")?)?))
        }
        "rcocon" => {
            let c = need_coscalar()?;
            Ok(Value::Tensor(right_cocontract(c, &arg("rcocon")?)?))
        }
        "eps" => Ok(Value::Num(counit(&arg("eps")?))),
        "mu" => Ok(Value::Num(integral(&arg("mu")?))),
        "S" => Ok(Value::Mv(antipode(&arg("S")?))),
        "bracket" => {
            let mvs: Vec<Multivector<S>> = vals
                .map(|v| as_mv(v, dim, "bracket"))
                .collect::<Result<_, _>>()?;
            Ok(Value::Num(bracket(&mvs)?))
        }
        "meet" => {
            let a = arg("meet")?;
            let b = arg("meet")?;
            Ok(Value::Mv(meet(&a, &b)?))
        }
        "join" => {
            let a = arg("join")?;
            let b = arg("join")?;
            Ok(Value::Mv(join(&a, &b)?))
        }
        "circ" => {
            let (p, p_inv) = need_cochain()?;
            let a = arg("circ")?;
            let b = arg("circ")?;
            Ok(Value::Mv(circle_product(p, p_inv, &a, &b)?))
        }
        "inv_p" => {
            let (_, p_inv) = need_cochain()?;
            Ok(Value::Mv(p_inv.operator(&arg("inv_p")?)?))
        }
        "P" => {
            let (p, _) = need_cochain()?;
            Ok(Value::Mv(p.operator(&arg("P")?)?))
        }
        other => Err(EvalError(format!("unknown function `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    type R = Rational;

    fn q(n: i64) -> R {
        <R as Scalar>::from_int(n)
    }

    fn sess(n: usize) -> Session<R> {
        Session::bare(Dim::new(n).unwrap())
    }

    fn run(input: &str, s: &Session<R>) -> Value<R> {
        eval(&parse(input, s.dim).unwrap(), s).unwrap()
    }

    fn run_mv(input: &str, s: &Session<R>) -> Multivector<R> {
        match run(input, s) {
            Value::Mv(m) => m,
            other => panic!("wanted multivector, got {other:?}"),
        }
    }

    fn quaternion_session() -> Session<R> {
        let dim = Dim::new(2).unwrap();
        let mut s = Session::bare(dim);
        s.form = Some(ExtendedForm::new(
            BilinearForm::diagonal(dim, &[q(-1), q(-1)]).unwrap(),
        ));
        s
    }

    #[test]
    fn quaternion_squares() {
        let s = quaternion_session();
        let minus_one = Multivector::unit(s.dim).neg();
        assert_eq!(run_mv("e1*e1", &s), minus_one);
        assert_eq!(run_mv("e2*e2", &s), minus_one);
        assert_eq!(run_mv("(e1^e2)*(e1^e2)", &s), minus_one);
        // i·j·i·j = k·k = −1
        assert_eq!(run_mv("e1*e2*e1*e2", &s), minus_one);
    }

    #[test]
    fn wedge_of_a_generator_with_itself_vanishes() {
        let s = sess(3);
        assert!(run_mv("e1 ^ e1", &s).is_zero());
    }

    #[test]
    fn bracket_reads_the_volume_form() {
        let s = sess(3);
        match run("bracket(e1, e2^e3)", &s) {
            Value::Num(c) => assert_eq!(c, q(1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn meet_example() {
        let s = sess(3);
        let m = run_mv("meet(e1^e2, e2^e3)", &s);
        let e2 = Multivector::basis_blade(s.dim, Blade(0b010));
        assert_eq!(m, e2.neg());
        assert_eq!(run_mv("e1^e2 v e2^e3", &s), e2.neg());
    }

    #[test]
    fn scalar_arithmetic_stays_scalar() {
        let s = sess(2);
        match run("1/2 + 1/3", &s) {
            Value::Num(c) => assert_eq!(c, <R as Scalar>::ratio(5, 6)),
            other => panic!("{other:?}"),
        }
        match run("2 ^ 3", &s) {
            Value::Num(c) => assert_eq!(c, q(6)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn form_gated_operators_report_the_missing_form() {
        let s = sess(2);
        for e in ["e1*e2", "e1 _| e12", "e12 |_ e1"] {
            let err = eval(&parse(e, s.dim).unwrap(), &s).unwrap_err();
            assert!(err.0.contains("form required"), "{e}: {}", err.0);
        }
    }

    #[test]
    fn coscalar_and_cochain_gates() {
        let s = sess(2);
        let err = eval(&parse("cdelta(e1)", s.dim).unwrap(), &s).unwrap_err();
        assert!(err.0.contains("coscalar required"));
        let err = eval(&parse("circ(e1, e2)", s.dim).unwrap(), &s).unwrap_err();
        assert!(err.0.contains("cochain required"));
    }

    #[test]
    fn tensors_are_terminal() {
        let s = sess(2);
        let err = eval(&parse("delta(e1) + Id", s.dim).unwrap(), &s).unwrap_err();
        assert!(err.0.contains("tensor"));
        let err = eval(&parse("-delta(e1)", s.dim).unwrap(), &s).unwrap_err();
        assert!(err.0.contains("tensor"));
        let err = eval(&parse("eps(delta(e1))", s.dim).unwrap(), &s).unwrap_err();
        assert!(err.0.contains("tensor"));
    }

    #[test]
    fn grade_projection_and_its_range() {
        let s = sess(2);
        let got = run_mv("grade(Id + e1 + e12, 1)", &s);
        assert_eq!(got, Multivector::basis_blade(s.dim, Blade(0b01)));
        let err = eval(&parse("grade(e1, 3)", s.dim).unwrap(), &s).unwrap_err();
        assert!(err.0.contains("grade"), "{}", err.0);
    }

    #[test]
    fn cochain_operators_roundtrip() {
        let dim = Dim::new(2).unwrap();
        let mut m = BilinearForm::zero(dim);
        m.set(0, 1, q(7));
        let p = Cochain::from_matrix(&m);
        let inv = p.convolution_inverse();
        let mut s = Session::bare(dim);
        s.cochain = Some((p, inv));
        assert_eq!(
            run_mv("inv_p(P(e1^e2))", &s),
            Multivector::basis_blade(dim, Blade(0b11))
        );
        // e1 ∘ e2 = e12 − 7
        let want = Multivector::basis_blade(dim, Blade(0b11))
            .add(&Multivector::unit(dim).scale(&q(-7)))
            .unwrap();
        assert_eq!(run_mv("circ(e1, e2)", &s), want);
    }

    #[test]
    fn antipode_and_counit() {
        let s = sess(3);
        assert_eq!(
            run_mv("S(e1 + e12)", &s),
            run_mv("-e1 + e12", &s)
        );
        match run("eps(3/4 Id + e1)", &s) {
            Value::Num(c) => assert_eq!(c, <R as Scalar>::ratio(3, 4)),
            other => panic!("{other:?}"),
        }
    }
}
