use num_bigint::BigInt;

use super::{BinOp, Expr, MapWord, NamedConst, ParseError};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        let (l0, c0) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if ch.is_whitespace() {
            col += 1;
            k += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            col += k - start;
            toks.push((Tok::Int(s.parse().expect("digits")), l0, c0));
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_' || chars[k] == '\'') {
                k += 1;
            }
            col += k - start;
            toks.push((Tok::Ident(chars[start..k].iter().collect()), l0, c0));
            continue;
        }
        if "+-*/^(),".contains(ch) {
            toks.push((Tok::Sym(ch), l0, c0));
            col += 1;
            k += 1;
            continue;
        }
        return Err(ParseError {
            line,
            col,
            msg: format!("unexpected character '{ch}'"),
        });
    }
    toks.push((Tok::End, line, col));
    Ok(Lexer { toks })
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (_, line, col) = self.toks[self.pos];
        Err(ParseError {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::Int(n) => format!("'{n}'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            let found = self.describe();
            self.err(format!("expected '{c}', found {found}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::bin(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::bin(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Sym('^') {
            self.bump();
            let e = self.exponent()?;
            if *self.peek() == Tok::Sym('^') {
                return self.err("chained powers need parentheses");
            }
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = *self.peek() == Tok::Sym('(');
        if paren {
            self.bump();
        }
        let neg = *self.peek() == Tok::Sym('-');
        if neg {
            self.bump();
        }
        let n = match self.peek().clone() {
            Tok::Int(n) => n,
            _ => {
                let found = self.describe();
                return self.err(format!("expected an integer exponent, found {found}"));
            }
        };
        let Ok(mut k) = i64::try_from(&n) else {
            return self.err("exponent out of range");
        };
        self.bump();
        if neg {
            k = -k;
        }
        if paren {
            self.expect(')')?;
        }
        Ok(k)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                if s == "apply" && self.toks[self.pos + 1].0 == Tok::Sym('(') {
                    self.bump();
                    self.bump();
                    let w = self.word()?;
                    self.expect(',')?;
                    let e = self.expr()?;
                    self.expect(')')?;
                    return Ok(Expr::Apply(w, Box::new(e)));
                }
                self.bump();
                Ok(match NamedConst::from_name(&s) {
                    Some(c) => Expr::Const(c),
                    None => Expr::Name(s),
                })
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => {
                let found = self.describe();
                self.err(format!("expected a number, name or '(', found {found}"))
            }
        }
    }

    fn word(&mut self) -> Result<MapWord, ParseError> {
        let mut w = Vec::new();
        loop {
            let name = match self.peek().clone() {
                Tok::Ident(s) => s,
                _ => {
                    let found = self.describe();
                    return self.err(format!("expected a map name, found {found}"));
                }
            };
            self.bump();
            let e = if *self.peek() == Tok::Sym('^') {
                self.bump();
                self.exponent()?
            } else {
                1
            };
            if name != "id" {
                w.push((name, e));
            }
            if *self.peek() == Tok::Sym('*') {
                self.bump();
            } else {
                return Ok(w);
            }
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            let found = self.describe();
            self.err(format!("unexpected {found}"))
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?.toks,
        pos: 0,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a map word such as `b*aprime*b^-1`; `id` is the empty word.
pub fn parse_word(src: &str) -> Result<MapWord, ParseError> {
    let mut p = Parser {
        toks: lex(src)?.toks,
        pos: 0,
    };
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}
