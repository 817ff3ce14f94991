//! Tokenizer for the expression language. Dimension-aware: below ten
//! generators a blade atom like `e12` means e_1∧e_2 (one digit per
//! index); from ten on the digits after `e` form a single index and
//! multi-index blades use the braced form `e{1,12}`. Columns are
//! 1-based character positions for error reporting.

use gfc_core::Dim;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Int(String),
    Ident(String),
    Blade(Vec<usize>),
    Unit,
    Plus,
    Minus,
    Star,
    Caret,
    Vee,
    LeftContr,
    RightContr,
    Slash,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub col: usize,
}

#[derive(Debug)]
pub struct LexError {
    pub msg: String,
    pub col: usize,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    dim: Dim,
}

pub fn lex(input: &str, dim: Dim) -> Result<Vec<Spanned>, LexError> {
    Lexer {
        chars: input.chars().collect(),
        pos: 0,
        dim,
    }
    .run()
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err<T>(&self, msg: impl Into<String>, col: usize) -> Result<T, LexError> {
        Err(LexError {
            msg: msg.into(),
            col,
        })
    }

    fn run(mut self) -> Result<Vec<Spanned>, LexError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let col = self.col();
            match c {
                c if c.is_whitespace() => {
                    self.pos += 1;
                }
                '+' => out.push(self.take(Tok::Plus)),
                '-' => out.push(self.take(Tok::Minus)),
                '*' => out.push(self.take(Tok::Star)),
                '^' => out.push(self.take(Tok::Caret)),
                '/' => out.push(self.take(Tok::Slash)),
                '(' => out.push(self.take(Tok::LParen)),
                ')' => out.push(self.take(Tok::RParen)),
                ',' => out.push(self.take(Tok::Comma)),
                '_' => {
                    if self.peek2() == Some('|') {
                        self.pos += 2;
                        out.push(Spanned {
                            tok: Tok::LeftContr,
                            col,
                        });
                    } else {
                        return self.err("expected `_|`", col);
                    }
                }
                '|' => {
                    if self.peek2() == Some('_') {
                        self.pos += 2;
                        out.push(Spanned {
                            tok: Tok::RightContr,
                            col,
                        });
                    } else {
                        return self.err("expected `|_`", col);
                    }
                }
                '0'..='9' => {
                    let mut digits = String::new();
                    while let Some(d) = self.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d);
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    out.push(Spanned {
                        tok: Tok::Int(digits),
                        col,
                    });
                }
                'e' if matches!(self.peek2(), Some('0'..='9') | Some('{')) => {
                    let tok = self.blade_atom()?;
                    out.push(Spanned { tok, col });
                }
                c if c.is_alphabetic() => {
                    let mut name = String::new();
                    while let Some(d) = self.peek() {
                        let continues = d.is_alphanumeric()
                            || (d == '_'
                                && self
                                    .peek2()
                                    .map(|n| n.is_alphanumeric())
                                    .unwrap_or(false));
                        if continues {
                            name.push(d);
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    let tok = match name.as_str() {
                        "Id" => Tok::Unit,
                        "v" => Tok::Vee,
                        _ => Tok::Ident(name),
                    };
                    out.push(Spanned { tok, col });
                }
                other => return self.err(format!("unexpected character `{other}`"), col),
            }
        }
        Ok(out)
    }

    fn take(&mut self, tok: Tok) -> Spanned {
        let col = self.col();
        self.pos += 1;
        Spanned { tok, col }
    }

    fn blade_atom(&mut self) -> Result<Tok, LexError> {
        let start = self.col();
        self.pos += 1; // past 'e'
        let mut indices: Vec<usize> = Vec::new();
        if self.peek() == Some('{') {
            self.pos += 1;
            loop {
                let col = self.col();
                let mut digits = String::new();
                while let Some(d) = self.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return self.err("expected generator index", col);
                }
                indices.push(self.index(&digits, col)?);
                match self.peek() {
                    Some(',') => {
                        self.pos += 1;
                    }
                    Some('}') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err("expected `,` or `}`", self.col()),
                }
            }
        } else if self.dim.get() <= 9 {
            while let Some(d) = self.peek() {
                if d.is_ascii_digit() {
                    let col = self.col();
                    self.pos += 1;
                    indices.push(self.index(&d.to_string(), col)?);
                } else {
                    break;
                }
            }
        } else {
            let col = self.col();
            let mut digits = String::new();
            while let Some(d) = self.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    self.pos += 1;
                } else {
                    break;
                }
            }
            indices.push(self.index(&digits, col)?);
        }
        for w in indices.windows(2) {
            if w[1] <= w[0] {
                return self.err(
                    format!("blade indices must be strictly ascending, got {} after {}", w[1], w[0]),
                    start,
                );
            }
        }
        Ok(Tok::Blade(indices))
    }

    fn index(&self, digits: &str, col: usize) -> Result<usize, LexError> {
        let k: usize = digits
            .parse()
            .map_err(|_| LexError {
                msg: format!("bad generator index `{digits}`"),
                col,
            })?;
        if k == 0 || k > self.dim.get() as usize {
            return Err(LexError {
                msg: format!("generator index {k} outside 1..={}", self.dim.get()),
                col,
            });
        }
        Ok(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Dim {
        Dim::new(n).unwrap()
    }

    fn kinds(input: &str, n: usize) -> Vec<Tok> {
        lex(input, d(n)).unwrap().into_iter().map(|s| s.tok).collect()
    }

    #[test]
    fn contraction_after_ident() {
        assert_eq!(
            kinds("mu_|e1", 3),
            vec![
                Tok::Ident("mu".into()),
                Tok::LeftContr,
                Tok::Blade(vec![1])
            ]
        );
    }

    #[test]
    fn underscore_inside_names() {
        assert_eq!(kinds("inv_p", 3), vec![Tok::Ident("inv_p".into())]);
    }

    #[test]
    fn blade_digits_split_below_ten() {
        assert_eq!(kinds("e12", 3), vec![Tok::Blade(vec![1, 2])]);
        assert_eq!(kinds("e{1,2}", 3), vec![Tok::Blade(vec![1, 2])]);
    }

    #[test]
    fn blade_digits_joined_from_ten() {
        assert_eq!(kinds("e12", 12), vec![Tok::Blade(vec![12])]);
        assert_eq!(kinds("e{1,12}", 12), vec![Tok::Blade(vec![1, 12])]);
    }

    #[test]
    fn eps_is_an_ident_not_a_blade() {
        assert_eq!(
            kinds("eps(e1)", 3),
            vec![
                Tok::Ident("eps".into()),
                Tok::LParen,
                Tok::Blade(vec![1]),
                Tok::RParen
            ]
        );
    }

    #[test]
    fn descending_blade_indices_are_rejected() {
        assert!(lex("e21", d(3)).is_err());
        assert!(lex("e11", d(3)).is_err());
    }

    #[test]
    fn out_of_range_generator_reports_its_column() {
        let e = lex("e1 ^ e4", d(3)).unwrap_err();
        assert_eq!(e.col, 7);
    }

    #[test]
    fn vee_and_unit_are_keywords() {
        assert_eq!(kinds("Id v Id", 3), vec![Tok::Unit, Tok::Vee, Tok::Unit]);
    }

    #[test]
    fn columns_are_one_based() {
        let toks = lex(" e1 + e2", d(2)).unwrap();
        assert_eq!(toks[0].col, 2);
        assert_eq!(toks[1].col, 5);
        assert_eq!(toks[2].col, 7);
    }

    #[test]
    fn stray_pipe_is_an_error() {
        assert!(lex("e1 | e2", d(2)).is_err());
        assert!(lex("e1 _ e2", d(2)).is_err());
    }
}
