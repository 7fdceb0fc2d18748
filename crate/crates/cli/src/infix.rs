//! Small infix reader for generator strings like `x^4 + 3/2*x*y^2 - y`.
//!
//! Terms are products of an optional rational coefficient and variable
//! powers, joined by `+` and `-`. `*` between factors is optional. When
//! every variable name is a single letter, `xy^2` reads as `x*y^2`.

use newtonpoly::series::{ExponentVector, LocalElement};
use newtonpoly::{parse_rational, Element, Rational};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn lex(src: &str, single_letters: bool) -> Result<Vec<(usize, Tok)>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => out.push((col, Tok::Plus)),
            '-' => out.push((col, Tok::Minus)),
            '*' => out.push((col, Tok::Star)),
            '^' => out.push((col, Tok::Caret)),
            '/' => out.push((col, Tok::Slash)),
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((col, Tok::Num(chars[start..i].iter().collect())));
                continue;
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                if single_letters {
                    i += 1;
                } else {
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                }
                out.push((col, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            _ => return Err(format!("column {col}: unexpected character '{c}'")),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    names: &'a [String],
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len + 1, |(c, _)| *c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn integer(&mut self) -> Result<String, String> {
        let col = self.col();
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            _ => Err(format!("column {col}: expected an integer")),
        }
    }

    fn term(&mut self) -> Result<(Rational, Vec<u32>), String> {
        let mut coeff = Rational::one();
        let mut exp = vec![0u32; self.names.len()];
        let mut factors = 0;
        loop {
            let col = self.col();
            match self.peek() {
                Some(Tok::Num(_)) => {
                    let mut text = self.integer()?;
                    if self.peek() == Some(&Tok::Slash) {
                        self.next();
                        text = format!("{text}/{}", self.integer()?);
                    }
                    let q = parse_rational(&text).ok_or_else(|| format!("column {col}: bad coefficient '{text}'"))?;
                    coeff *= q;
                }
                Some(Tok::Ident(_)) => {
                    let Some(Tok::Ident(name)) = self.next() else { unreachable!() };
                    let axis = self
                        .names
                        .iter()
                        .position(|n| *n == name)
                        .ok_or_else(|| format!("column {col}: unknown variable '{name}'"))?;
                    let mut power = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.next();
                        let pcol = self.col();
                        power = self
                            .integer()?
                            .parse()
                            .map_err(|_| format!("column {pcol}: exponent out of range"))?;
                    }
                    exp[axis] += power;
                }
                _ if factors == 0 => return Err(format!("column {col}: expected a coefficient or variable")),
                _ => return Ok((coeff, exp)),
            }
            factors += 1;
            if self.peek() == Some(&Tok::Star) {
                self.next();
                if !matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_))) {
                    return Err(format!("column {}: expected a factor after '*'", self.col()));
                }
            }
        }
    }
}

/// Parses `src` over the variables `names`.
pub fn parse_infix(src: &str, names: &[String]) -> Result<Element, String> {
    let single = names.iter().all(|n| n.chars().count() == 1);
    let toks = lex(src, single)?;
    let mut p = Parser {
        toks,
        pos: 0,
        names,
        len: src.chars().count(),
    };
    let mut terms: Vec<(Rational, ExponentVector)> = Vec::new();
    let mut sign = Rational::one();
    match p.peek() {
        Some(Tok::Minus) => {
            p.next();
            sign = -sign;
        }
        Some(Tok::Plus) => {
            p.next();
        }
        None => return Err("empty expression".into()),
        _ => {}
    }
    loop {
        let (c, e) = p.term()?;
        terms.push((c * sign.clone(), ExponentVector::new(e)));
        let col = p.col();
        match p.next() {
            None => break,
            Some(Tok::Plus) => sign = Rational::one(),
            Some(Tok::Minus) => sign = -Rational::one(),
            Some(_) => return Err(format!("column {col}: expected '+' or '-'")),
        }
    }
    let terms = terms.into_iter().filter(|(c, _)| !c.is_zero());
    LocalElement::from_terms(names.len(), terms).map_err(|e| e.to_string())
}
