//! Reader for the textual polynomial and 1-form syntax used in data tables:
//! `dz - p0*dy1 + 1/2*p1^2*dx`.

use super::form::PolyForm;
use super::poly::{Polynomial, Space};
use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| Error::Parse(format!("bad number {text}")))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    space: &'a Space,
}

/// One product term: polynomial factor and optional differential index.
struct Term<F: Field> {
    coef: Polynomial<F>,
    diff: Option<usize>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<F: Field>(&mut self, allow_diff: bool) -> Result<Vec<Term<F>>> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let mut t = self.term::<F>(allow_diff)?;
            if sign < 0 {
                t.coef = -&t.coef;
            }
            terms.push(t);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(terms)
    }

    fn term<F: Field>(&mut self, allow_diff: bool) -> Result<Term<F>> {
        let mut t = Term {
            coef: Polynomial::one(self.space),
            diff: None,
        };
        loop {
            self.factor(&mut t, allow_diff)?;
            if !self.eat('*') {
                break;
            }
        }
        Ok(t)
    }

    fn factor<F: Field>(&mut self, t: &mut Term<F>, allow_diff: bool) -> Result<()> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => {
                let mut c = F::from_int(n);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != 0 => {
                            self.pos += 1;
                            c = c / F::from_int(d);
                        }
                        _ => return Err(Error::Parse("expected denominator".into())),
                    }
                }
                t.coef = t.coef.scale(&c);
            }
            Tok::Ident(name) => {
                let exp = if self.eat('^') {
                    match self.peek().cloned() {
                        Some(Tok::Num(e)) => {
                            self.pos += 1;
                            e as u32
                        }
                        _ => return Err(Error::Parse("expected exponent".into())),
                    }
                } else {
                    1
                };
                if let Some(i) = self.space.index_of(&name) {
                    t.coef = &t.coef * &Polynomial::var(self.space, i).pow(exp);
                } else if let Some(i) = name.strip_prefix('d').and_then(|r| self.space.index_of(r)) {
                    if !allow_diff || t.diff.is_some() || exp != 1 {
                        return Err(Error::Parse(format!("misplaced differential {name}")));
                    }
                    t.diff = Some(i);
                } else {
                    return Err(Error::Parse(format!("unknown symbol {name}")));
                }
            }
            Tok::Sym('(') => {
                let inner = self.expr::<F>(false)?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected )".into()));
                }
                let mut sum = Polynomial::zero(self.space);
                for it in inner {
                    sum = &sum + &it.coef;
                }
                t.coef = &t.coef * &sum;
            }
            Tok::Sym(c) => return Err(Error::Parse(format!("unexpected {c:?}"))),
        }
        Ok(())
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(Error::Parse(format!("trailing input at token {}", self.pos)))
        }
    }
}

pub fn parse_polynomial<F: Field>(space: &Space, s: &str) -> Result<Polynomial<F>> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        space,
    };
    let terms = p.expr::<F>(false)?;
    p.finish()?;
    let mut out = Polynomial::zero(space);
    for t in terms {
        out = &out + &t.coef;
    }
    Ok(out)
}

pub fn parse_one_form<F: Field>(space: &Space, s: &str) -> Result<PolyForm<F>> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        space,
    };
    let terms = p.expr::<F>(true)?;
    p.finish()?;
    let mut out = PolyForm::zero(space, 1);
    for t in terms {
        let i = t
            .diff
            .ok_or_else(|| Error::Parse("term without differential in a 1-form".into()))?;
        out = out.add(&PolyForm::dvar(space, i).mul_function(&t.coef));
    }
    Ok(out)
}
