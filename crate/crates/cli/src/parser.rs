//! Recursive-descent parser. Binding strength, tightest first: unary
//! minus; `_|` / `|_`; `^`; `*`; `v`; `+` / `-` — all binaries
//! left-associative. A number directly followed by a blade atom is a
//! coefficient (so the text renderer's `3/4 e12` reads back), and
//! `p/q` assembles a rational literal since `/` has no other meaning.

use gfc_core::Dim;

use crate::lexer::{lex, Spanned, Tok};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BinOp {
    Add,
    Sub,
    Meet,
    Clifford,
    Wedge,
    LeftContr,
    RightContr,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Expr {
    Rational(String),
    Blade(Vec<usize>),
    Unit,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call {
        name: String,
        args: Vec<Expr>,
        col: usize,
    },
    Grade {
        arg: Box<Expr>,
        k: u32,
    },
}

#[derive(Debug)]
pub struct ParseError {
    pub msg: String,
    pub col: usize,
}

/// (min arity, max arity) per function name.
fn arity(name: &str) -> Option<(usize, usize)> {
    Some(match name {
        "delta" | "cdelta" | "eps" | "S" | "mu" | "comeet" | "cojoin" | "lcocon" | "rcocon"
        | "inv_p" | "P" => (1, 1),
        "meet" | "join" | "circ" | "grade" => (2, 2),
        "bracket" => (1, usize::MAX),
        _ => return None,
    })
}

pub fn parse(input: &str, dim: Dim) -> Result<Expr, ParseError> {
    let toks = lex(input, dim).map_err(|e| ParseError {
        msg: e.msg,
        col: e.col,
    })?;
    let end_col = input.chars().count() + 1;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col,
    };
    let e = p.additive()?;
    if let Some(s) = p.peek() {
        return Err(ParseError {
            msg: format!("unexpected {}", describe(&s.tok)),
            col: s.col,
        });
    }
    Ok(e)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) => format!("number `{s}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Blade(_) => "blade".into(),
        Tok::Unit => "`Id`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Vee => "`v`".into(),
        Tok::LeftContr => "`_|`".into(),
        Tok::RightContr => "`|_`".into(),
        Tok::Slash => "`/`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next_col(&self) -> usize {
        self.peek().map(|s| s.col).unwrap_or(self.end_col)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek().map(|s| &s.tok) == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(ParseError {
                msg: format!(
                    "expected {}, found {}",
                    describe(&t),
                    self.peek()
                        .map(|s| describe(&s.tok))
                        .unwrap_or_else(|| "end of input".into())
                ),
                col: self.next_col(),
            })
        }
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.meet_level()?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.meet_level()?;
                lhs = Expr::Bin(BinOp::Add, Box::new(lhs), Box::new(rhs));
            } else if self.eat(&Tok::Minus) {
                let rhs = self.meet_level()?;
                lhs = Expr::Bin(BinOp::Sub, Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn meet_level(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.clifford_level()?;
        while self.eat(&Tok::Vee) {
            let rhs = self.clifford_level()?;
            lhs = Expr::Bin(BinOp::Meet, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn clifford_level(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.wedge_level()?;
        while self.eat(&Tok::Star) {
            let rhs = self.wedge_level()?;
            lhs = Expr::Bin(BinOp::Clifford, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn wedge_level(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.contraction_level()?;
        while self.eat(&Tok::Caret) {
            let rhs = self.contraction_level()?;
            lhs = Expr::Bin(BinOp::Wedge, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn contraction_level(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::LeftContr) {
                let rhs = self.unary()?;
                lhs = Expr::Bin(BinOp::LeftContr, Box::new(lhs), Box::new(rhs));
            } else if self.eat(&Tok::RightContr) {
                let rhs = self.unary()?;
                lhs = Expr::Bin(BinOp::RightContr, Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let Some(s) = self.peek().cloned() else {
            return Err(ParseError {
                msg: "expected expression, found end of input".into(),
                col: self.end_col,
            });
        };
        match s.tok {
            Tok::Int(num) => {
                self.pos += 1;
                let lit = if self.eat(&Tok::Slash) {
                    let den_col = self.next_col();
                    match self.peek().map(|s| s.tok.clone()) {
                        Some(Tok::Int(den)) => {
                            self.pos += 1;
                            if den.chars().all(|c| c == '0') {
                                return Err(ParseError {
                                    msg: "zero denominator".into(),
                                    col: den_col,
                                });
                            }
                            format!("{num}/{den}")
                        }
                        _ => {
                            return Err(ParseError {
                                msg: "expected denominator after `/`".into(),
                                col: den_col,
                            })
                        }
                    }
                } else {
                    num
                };
                // number immediately followed by a blade atom (or `Id`) scales it
                match self.peek().map(|s| s.tok.clone()) {
                    Some(Tok::Blade(idx)) => {
                        self.pos += 1;
                        Ok(Expr::Bin(
                            BinOp::Wedge,
                            Box::new(Expr::Rational(lit)),
                            Box::new(Expr::Blade(idx)),
                        ))
                    }
                    Some(Tok::Unit) => {
                        self.pos += 1;
                        Ok(Expr::Bin(
                            BinOp::Wedge,
                            Box::new(Expr::Rational(lit)),
                            Box::new(Expr::Unit),
                        ))
                    }
                    _ => Ok(Expr::Rational(lit)),
                }
            }
            Tok::Blade(idx) => {
                self.pos += 1;
                Ok(Expr::Blade(idx))
            }
            Tok::Unit => {
                self.pos += 1;
                Ok(Expr::Unit)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                let col = s.col;
                let Some((min, max)) = arity(&name) else {
                    return Err(ParseError {
                        msg: format!("unknown function `{name}`"),
                        col,
                    });
                };
                self.expect(Tok::LParen)?;
                let mut args = Vec::new();
                if !self.eat(&Tok::RParen) {
                    loop {
                        args.push(self.additive()?);
                        if self.eat(&Tok::Comma) {
                            continue;
                        }
                        self.expect(Tok::RParen)?;
                        break;
                    }
                }
                if args.len() < min || args.len() > max {
                    let want = if min == max {
                        format!("{min}")
                    } else if max == usize::MAX {
                        format!("at least {min}")
                    } else {
                        format!("{min}..{max}")
                    };
                    return Err(ParseError {
                        msg: format!(
                            "`{name}` takes {want} argument(s), got {}",
                            args.len()
                        ),
                        col,
                    });
                }
                if name == "grade" {
                    let k = match &args[1] {
                        Expr::Rational(lit) if !lit.contains('/') => {
                            lit.parse::<u32>().ok()
                        }
                        _ => None,
                    };
                    let Some(k) = k else {
                        return Err(ParseError {
                            msg: "grade selector must be a nonnegative integer literal".into(),
                            col,
                        });
                    };
                    let arg = args.into_iter().next().unwrap();
                    return Ok(Expr::Grade {
                        arg: Box::new(arg),
                        k,
                    });
                }
                Ok(Expr::Call { name, args, col })
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.additive()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            other => Err(ParseError {
                msg: format!("expected expression, found {}", describe(&other)),
                col: s.col,
            }),
        }
    }
}
