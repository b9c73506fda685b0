//! Expression language for spaces.
//!
//! ```text
//! expr   := term ('v' term)*
//! term   := factor ('^' factor)*
//! factor := atom | 'susp(' expr ')' | 'cone(' expr ')' | '(' expr ')'
//! atom   := 'S^' int | 'RP^' (int | 'inf') | 'pt' | identifier
//! ```
//!
//! `^` (smash) binds tighter than `v` (wedge); both associate to the left.
//! Whitespace is ignored. Identifiers name catalog entries.

use std::fmt;

use crate::error::{Error, Result};
use crate::spaces::{Catalog, ProjDim, SpaceProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceExpr {
    Point,
    Sphere(u32),
    Projective(ProjDim),
    Named(String),
    Wedge(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    Susp(Box<SpaceExpr>),
    Cone(Box<SpaceExpr>),
}

impl SpaceExpr {
    pub fn wedge(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Wedge(Box::new(a), Box::new(b))
    }

    pub fn smash(a: SpaceExpr, b: SpaceExpr) -> Self {
        SpaceExpr::Smash(Box::new(a), Box::new(b))
    }

    /// Builds the space profile. Named atoms are looked up in `catalog`.
    pub fn evaluate(&self, catalog: &Catalog) -> Result<SpaceProfile> {
        let profile = match self {
            SpaceExpr::Point => SpaceProfile::point(),
            SpaceExpr::Sphere(n) => SpaceProfile::sphere(*n)?,
            SpaceExpr::Projective(d) => SpaceProfile::projective(*d)?,
            SpaceExpr::Named(name) => catalog
                .get(name)
                .cloned()
                .ok_or_else(|| Error::UnknownName { name: name.clone(), offset: 0 })?,
            SpaceExpr::Wedge(a, b) => a.evaluate(catalog)?.wedge(&b.evaluate(catalog)?),
            SpaceExpr::Smash(a, b) => a.evaluate(catalog)?.smash(&b.evaluate(catalog)?),
            SpaceExpr::Susp(a) => a.evaluate(catalog)?.suspend(),
            SpaceExpr::Cone(a) => a.evaluate(catalog)?.cone(),
        };
        Ok(profile.renamed(self.to_string()))
    }

    fn precedence(&self) -> u8 {
        match self {
            SpaceExpr::Wedge(..) => 1,
            SpaceExpr::Smash(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let paren = self.precedence() < min_prec;
        if paren {
            f.write_str("(")?;
        }
        match self {
            SpaceExpr::Point => f.write_str("pt")?,
            SpaceExpr::Sphere(n) => write!(f, "S^{n}")?,
            SpaceExpr::Projective(ProjDim::Finite(n)) => write!(f, "RP^{n}")?,
            SpaceExpr::Projective(ProjDim::Infinite) => f.write_str("RP^inf")?,
            SpaceExpr::Named(name) => f.write_str(name)?,
            SpaceExpr::Wedge(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" v ")?;
                b.fmt_at(f, 2)?;
            }
            SpaceExpr::Smash(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str(" ^ ")?;
                b.fmt_at(f, 3)?;
            }
            SpaceExpr::Susp(a) => {
                f.write_str("susp(")?;
                a.fmt_at(f, 0)?;
                f.write_str(")")?;
            }
            SpaceExpr::Cone(a) => {
                f.write_str("cone(")?;
                a.fmt_at(f, 0)?;
                f.write_str(")")?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Canonical text with the fewest parentheses; reparses to the same tree.
impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Parses `text`, resolving identifiers against `catalog`.
pub fn parse_space(text: &str, catalog: &Catalog) -> Result<SpaceExpr> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0, catalog };
    let expr = parser.expr(None)?;
    match parser.peek() {
        (Tok::End, _) => Ok(expr),
        (_, offset) => Err(Error::Parse {
            offset,
            expected: vec!["`v`".into(), "`^`".into(), "end of input".into()],
        }),
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_space(text: &str, catalog: &Catalog) -> Result<SpaceProfile> {
    parse_space(text, catalog)?.evaluate(catalog)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'^' => {
                out.push((Tok::Caret, start));
                i += 1;
            }
            b'(' => {
                out.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, start));
                i += 1;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_owned()), start));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_owned()), start));
            }
            _ => {
                return Err(Error::Parse {
                    offset: start,
                    expected: factor_starts(),
                })
            }
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

fn factor_starts() -> Vec<String> {
    ["`S^n`", "`RP^n`", "`pt`", "`susp(`", "`cone(`", "`(`", "identifier"]
        .map(String::from)
        .to_vec()
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    catalog: &'a Catalog,
}

impl Parser<'_> {
    fn peek(&self) -> (Tok, usize) {
        self.tokens[self.pos].clone()
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.peek();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let (t, offset) = self.peek();
        if t == tok {
            self.bump();
            Ok(())
        } else {
            Err(Error::Parse { offset, expected: vec![what.into()] })
        }
    }

    fn is_wedge(tok: &Tok) -> bool {
        matches!(tok, Tok::Ident(s) if s == "v")
    }

    // `operator` is the offset of the infix operator whose operand this is;
    // a missing operand is reported there.
    fn expr(&mut self, operator: Option<usize>) -> Result<SpaceExpr> {
        let mut lhs = self.term(operator)?;
        while Self::is_wedge(&self.peek().0) {
            let (_, at) = self.bump();
            let rhs = self.term(Some(at))?;
            lhs = SpaceExpr::wedge(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self, operator: Option<usize>) -> Result<SpaceExpr> {
        let mut lhs = self.factor(operator)?;
        while self.peek().0 == Tok::Caret {
            let (_, at) = self.bump();
            let rhs = self.factor(Some(at))?;
            lhs = SpaceExpr::smash(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self, operator: Option<usize>) -> Result<SpaceExpr> {
        let (tok, offset) = self.peek();
        let name = match tok {
            Tok::LParen => {
                self.bump();
                let inner = self.expr(None)?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(inner);
            }
            Tok::Ident(name) if !Self::is_wedge(&Tok::Ident(name.clone())) => name,
            _ => {
                return Err(Error::Parse {
                    offset: operator.unwrap_or(offset),
                    expected: factor_starts(),
                })
            }
        };
        self.bump();
        match name.as_str() {
            "S" => {
                self.expect(Tok::Caret, "`^` after `S`")?;
                Ok(SpaceExpr::Sphere(self.int()?))
            }
            "RP" => {
                self.expect(Tok::Caret, "`^` after `RP`")?;
                match self.peek() {
                    (Tok::Ident(s), _) if s == "inf" => {
                        self.bump();
                        Ok(SpaceExpr::Projective(ProjDim::Infinite))
                    }
                    _ => Ok(SpaceExpr::Projective(ProjDim::Finite(self.int()?))),
                }
            }
            "pt" => Ok(SpaceExpr::Point),
            "susp" | "cone" => {
                self.expect(Tok::LParen, "`(`")?;
                let inner = Box::new(self.expr(None)?);
                self.expect(Tok::RParen, "`)`")?;
                Ok(if name == "susp" {
                    SpaceExpr::Susp(inner)
                } else {
                    SpaceExpr::Cone(inner)
                })
            }
            _ => {
                if self.catalog.get(&name).is_none() {
                    return Err(Error::UnknownName { name, offset });
                }
                Ok(SpaceExpr::Named(name))
            }
        }
    }

    fn int(&mut self) -> Result<u32> {
        match self.peek() {
            (Tok::Int(digits), offset) => {
                self.bump();
                digits.parse().map_err(|_| Error::Parse {
                    offset,
                    expected: vec!["integer that fits in 32 bits".into()],
                })
            }
            (_, offset) => Err(Error::Parse {
                offset,
                expected: vec!["integer".into()],
            }),
        }
    }
}
