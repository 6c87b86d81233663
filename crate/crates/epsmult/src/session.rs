//! The CLI input language: named rings and ideals in a small declarative
//! grammar.
//!
//! ```text
//! session   := (decl ';')+
//! decl      := ringdecl | idealdecl
//! ringdecl  := 'ring' NAME '=' 'QQ' '[' var (',' var)* ']'
//!              ('/' '(' poly (',' poly)* ')')?
//! var       := NAME ('(' INT (',' INT)* ')')?          -- default weight 1
//! idealdecl := 'ideal' NAME '=' '(' poly (',' poly)* ')' 'in' NAME
//! ```
//!
//! Polynomials use `+ - * ^`, integer and `p/q` literals and parentheses;
//! multiplication is always explicit.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::poly::{format_q, DegreeVector, MonomialOrder, Polynomial, Q, Z};
use crate::ring::{GradedRing, Ideal};

#[derive(Debug, Clone)]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' {
            while let Some(&c2) = chars.peek() {
                if c2 == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
            continue;
        }
        let (start_line, start_col) = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    s.push(c2);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: start_line,
                col: start_col,
            });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_digit() {
                    s.push(c2);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Int(s),
                line: start_line,
                col: start_col,
            });
        } else if "=[](),;/+-*^".contains(c) {
            chars.next();
            col += 1;
            out.push(Spanned {
                tok: Tok::Punct(c),
                line: start_line,
                col: start_col,
            });
        } else {
            return Err(ParseError {
                message: format!("unexpected character '{}'", c),
                line,
                col,
            });
        }
    }
    Ok(out)
}

/// Expression tree for polynomials, kept name-based until the ring is known.
#[derive(Debug, Clone)]
enum Expr {
    Num(Q),
    Var(String, usize, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn eval(&self, ring: &GradedRing) -> Result<Polynomial, ParseError> {
        let n = ring.nvars();
        Ok(match self {
            Expr::Num(q) => Polynomial::constant(n, q.clone()),
            Expr::Var(name, line, col) => match ring.var_index(name) {
                Some(i) => ring.var(i),
                None => {
                    return Err(ParseError {
                        message: format!("unknown name '{}'", name),
                        line: *line,
                        col: *col,
                    })
                }
            },
            Expr::Neg(e) => e.eval(ring)?.neg(),
            Expr::Add(a, b) => a.eval(ring)?.add(&b.eval(ring)?),
            Expr::Sub(a, b) => a.eval(ring)?.sub(&b.eval(ring)?),
            Expr::Mul(a, b) => a.eval(ring)?.mul(&b.eval(ring)?),
            Expr::Pow(a, k) => a.eval(ring)?.pow(*k),
        })
    }
}

#[derive(Debug, Clone)]
struct RingDecl {
    name: String,
    vars: Vec<(String, Vec<i64>)>,
    relations: Vec<Expr>,
}

#[derive(Debug, Clone)]
struct IdealDecl {
    name: String,
    gens: Vec<Expr>,
    ring: String,
    ring_pos: (usize, usize),
}

/// A parsed session: named rings and named ideals over them.
#[derive(Clone, Debug)]
pub struct Session {
    pub rings: BTreeMap<String, GradedRing>,
    pub ideals: BTreeMap<String, (String, Ideal)>,
    decl_order: Vec<(bool, String)>,
}

impl Session {
    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.get(name).map(|(_, i)| i)
    }

    pub fn ring(&self, name: &str) -> Option<&GradedRing> {
        self.rings.get(name)
    }

    /// Canonical text form; reparsing yields an identical session.
    pub fn format(&self) -> String {
        let mut out = String::new();
        for (is_ring, name) in &self.decl_order {
            if *is_ring {
                let ring = &self.rings[name];
                let vars: Vec<String> = ring
                    .names()
                    .iter()
                    .zip(ring.degrees())
                    .map(|(n, d)| {
                        if d.rank() == 1 && d.0[0] == 1 {
                            n.clone()
                        } else {
                            let ws: Vec<String> =
                                d.0.iter().map(|w| w.to_string()).collect();
                            format!("{}({})", n, ws.join(","))
                        }
                    })
                    .collect();
                out.push_str(&format!("ring {} = QQ[{}]", name, vars.join(", ")));
                if !ring.relations().is_empty() {
                    let rels: Vec<String> = ring
                        .relations()
                        .iter()
                        .map(|r| r.display(ring.names(), ring.default_order()))
                        .collect();
                    out.push_str(&format!(" / ({})", rels.join(", ")));
                }
                out.push_str(";\n");
            } else {
                let (ring_name, ideal) = &self.ideals[name];
                let ring = &self.rings[ring_name];
                let gens: Vec<String> = ideal
                    .generators()
                    .iter()
                    .map(|g| g.display(ring.names(), ring.default_order()))
                    .collect();
                out.push_str(&format!(
                    "ideal {} = ({}) in {};\n",
                    name,
                    gens.join(", "),
                    ring_name
                ));
            }
        }
        out
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn err_here(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self
            .peek()
            .map(|s| (s.line, s.col))
            .unwrap_or((0, 0));
        ParseError {
            message: message.into(),
            line,
            col,
        }
    }

    fn next(&mut self) -> Result<Spanned, ParseError> {
        let s = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| ParseError {
                message: "unexpected end of input".into(),
                line: 0,
                col: 0,
            })?;
        self.pos += 1;
        Ok(s)
    }

    fn expect_punct(&mut self, c: char) -> Result<(), ParseError> {
        let s = self.next()?;
        if s.tok == Tok::Punct(c) {
            Ok(())
        } else {
            Err(ParseError {
                message: format!("expected '{}'", c),
                line: s.line,
                col: s.col,
            })
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(s) if s.tok == Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        let s = self.next()?;
        match s.tok {
            Tok::Ident(name) => Ok((name, s.line, s.col)),
            _ => Err(ParseError {
                message: "expected a name".into(),
                line: s.line,
                col: s.col,
            }),
        }
    }

    fn expect_int(&mut self) -> Result<i64, ParseError> {
        let s = self.next()?;
        match s.tok {
            Tok::Int(v) => v.parse().map_err(|_| ParseError {
                message: "integer out of range".into(),
                line: s.line,
                col: s.col,
            }),
            _ => Err(ParseError {
                message: "expected an integer".into(),
                line: s.line,
                col: s.col,
            }),
        }
    }

    fn parse_poly(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.eat_punct('-') {
            Expr::Neg(Box::new(self.parse_term()?))
        } else {
            self.parse_term()?
        };
        loop {
            if self.eat_punct('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.parse_term()?));
            } else if self.eat_punct('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.parse_term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.eat_punct('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.parse_factor()?));
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.parse_base()?;
        if self.eat_punct('^') {
            let e = self.expect_int()?;
            if e < 0 {
                return Err(self.err_here("exponent must be non-negative"));
            }
            return Ok(Expr::Pow(Box::new(base), e as u32));
        }
        Ok(base)
    }

    fn parse_base(&mut self) -> Result<Expr, ParseError> {
        let s = self.next()?;
        match s.tok {
            Tok::Ident(name) => Ok(Expr::Var(name, s.line, s.col)),
            Tok::Int(v) => {
                let numer: Z = v.parse().unwrap();
                if self.eat_punct('/') {
                    let d = self.expect_int()?;
                    if d == 0 {
                        return Err(self.err_here("zero denominator"));
                    }
                    Ok(Expr::Num(Q::new(numer, Z::from(d))))
                } else {
                    Ok(Expr::Num(Q::from_integer(numer)))
                }
            }
            Tok::Punct('(') => {
                let e = self.parse_poly()?;
                self.expect_punct(')')?;
                Ok(e)
            }
            _ => Err(ParseError {
                message: "expected a name, number or '('".into(),
                line: s.line,
                col: s.col,
            }),
        }
    }

    fn parse_ring_decl(&mut self) -> Result<RingDecl, ParseError> {
        let (name, _, _) = self.expect_ident()?;
        self.expect_punct('=')?;
        let (field, line, col) = self.expect_ident()?;
        if field != "QQ" {
            return Err(ParseError {
                message: "only the field QQ is supported".into(),
                line,
                col,
            });
        }
        self.expect_punct('[')?;
        let mut vars = Vec::new();
        loop {
            let (vname, vline, vcol) = self.expect_ident()?;
            let weights = if self.eat_punct('(') {
                let mut w = vec![self.expect_int()?];
                while self.eat_punct(',') {
                    w.push(self.expect_int()?);
                }
                self.expect_punct(')')?;
                w
            } else {
                vec![1]
            };
            if weights.iter().all(|&x| x <= 0) || weights.iter().any(|&x| x < 0) {
                return Err(ParseError {
                    message: format!("variable '{}' needs positive weight", vname),
                    line: vline,
                    col: vcol,
                });
            }
            vars.push((vname, weights));
            if !self.eat_punct(',') {
                break;
            }
        }
        self.expect_punct(']')?;
        let mut relations = Vec::new();
        if self.eat_punct('/') {
            self.expect_punct('(')?;
            loop {
                relations.push(self.parse_poly()?);
                if !self.eat_punct(',') {
                    break;
                }
            }
            self.expect_punct(')')?;
        }
        Ok(RingDecl {
            name,
            vars,
            relations,
        })
    }

    fn parse_ideal_decl(&mut self) -> Result<IdealDecl, ParseError> {
        let (name, _, _) = self.expect_ident()?;
        self.expect_punct('=')?;
        self.expect_punct('(')?;
        let mut gens = Vec::new();
        loop {
            gens.push(self.parse_poly()?);
            if !self.eat_punct(',') {
                break;
            }
        }
        self.expect_punct(')')?;
        let (kw, line, col) = self.expect_ident()?;
        if kw != "in" {
            return Err(ParseError {
                message: "expected 'in'".into(),
                line,
                col,
            });
        }
        let (ring, rline, rcol) = self.expect_ident()?;
        Ok(IdealDecl {
            name,
            gens,
            ring,
            ring_pos: (rline, rcol),
        })
    }
}

/// Parse a session from text.
pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut session = Session {
        rings: BTreeMap::new(),
        ideals: BTreeMap::new(),
        decl_order: Vec::new(),
    };
    while p.peek().is_some() {
        let (kw, line, col) = p.expect_ident()?;
        match kw.as_str() {
            "ring" => {
                let decl = p.parse_ring_decl()?;
                if session.rings.contains_key(&decl.name)
                    || session.ideals.contains_key(&decl.name)
                {
                    return Err(ParseError {
                        message: format!("name '{}' already declared", decl.name),
                        line,
                        col,
                    });
                }
                let rank = decl.vars.first().map(|(_, w)| w.len()).unwrap_or(1);
                if decl.vars.iter().any(|(_, w)| w.len() != rank) {
                    return Err(ParseError {
                        message: "all variables must share the grading rank".into(),
                        line,
                        col,
                    });
                }
                let names: Vec<String> = decl.vars.iter().map(|(n, _)| n.clone()).collect();
                let degrees: Vec<DegreeVector> = decl
                    .vars
                    .iter()
                    .map(|(_, w)| DegreeVector(w.clone()))
                    .collect();
                let order = if rank == 1 && degrees.iter().any(|d| d.0[0] != 1) {
                    MonomialOrder::WeightedDegRevLex(degrees.iter().map(|d| d.0[0]).collect())
                } else {
                    MonomialOrder::DegRevLex
                };
                let bare = GradedRing::new(names, degrees, vec![], order);
                let mut relations = Vec::new();
                for expr in &decl.relations {
                    let poly = expr.eval(&bare)?;
                    if poly.is_zero() {
                        continue;
                    }
                    if !poly.is_homogeneous(bare.degrees()) {
                        return Err(ParseError {
                            message: "ring relations must be homogeneous".into(),
                            line,
                            col,
                        });
                    }
                    relations.push(poly);
                }
                let ring = bare.with_relations(relations);
                session.rings.insert(decl.name.clone(), ring);
                session.decl_order.push((true, decl.name));
            }
            "ideal" => {
                let decl = p.parse_ideal_decl()?;
                if session.rings.contains_key(&decl.name)
                    || session.ideals.contains_key(&decl.name)
                {
                    return Err(ParseError {
                        message: format!("name '{}' already declared", decl.name),
                        line,
                        col,
                    });
                }
                let ring = session.rings.get(&decl.ring).ok_or_else(|| ParseError {
                    message: format!("unknown ring '{}'", decl.ring),
                    line: decl.ring_pos.0,
                    col: decl.ring_pos.1,
                })?;
                let mut gens = Vec::new();
                for expr in &decl.gens {
                    let poly = expr.eval(ring)?;
                    if poly.is_zero() {
                        continue;
                    }
                    if !poly.is_homogeneous(ring.degrees()) {
                        return Err(ParseError {
                            message: "ideal generators must be homogeneous".into(),
                            line,
                            col,
                        });
                    }
                    gens.push(poly);
                }
                let ideal = Ideal::new(ring.clone(), gens);
                session
                    .ideals
                    .insert(decl.name.clone(), (decl.ring.clone(), ideal));
                session.decl_order.push((false, decl.name));
            }
            _ => {
                return Err(ParseError {
                    message: format!("expected 'ring' or 'ideal', found '{}'", kw),
                    line,
                    col,
                })
            }
        }
        p.expect_punct(';')?;
    }
    if session.decl_order.is_empty() {
        return Err(ParseError {
            message: "empty session".into(),
            line: 1,
            col: 1,
        });
    }
    Ok(session)
}

pub fn format_rational(q: &Q) -> String {
    format_q(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_weighted_ring_and_ideal() {
        let text = "ring R = QQ[x(3), y(4), z(5)];\n\
                    ideal I = (y^2 - x*z, x^2*y - z^2, x^3 - y*z) in R;";
        let s = parse_session(text).unwrap();
        let r = s.ring("R").unwrap();
        assert_eq!(r.weights(), vec![3, 4, 5]);
        let i = s.ideal("I").unwrap();
        assert_eq!(i.generators().len(), 3);
    }

    #[test]
    fn parse_quotient_ring() {
        let text = "ring R = QQ[x, y, z] / (x^3 + y^3 + z^3);\n\
                    ideal I = (x*y, y*z, z*x) in R;";
        let s = parse_session(text).unwrap();
        assert_eq!(s.ring("R").unwrap().relations().len(), 1);
        assert_eq!(s.ideal("I").unwrap().generators().len(), 3);
    }

    #[test]
    fn roundtrip_format_parse() {
        let text = "ring R = QQ[x, y] / (x^2 - y^2);\n\
                    ideal I = (x*y, 1/2*y^2) in R;";
        let s1 = parse_session(text).unwrap();
        let formatted = s1.format();
        let s2 = parse_session(&formatted).unwrap();
        assert_eq!(formatted, s2.format());
        let (i1, i2) = (s1.ideal("I").unwrap(), s2.ideal("I").unwrap());
        assert!(i1.equals(i2));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_session("ring R = QQ[x(0)];").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("positive weight"));
        let err2 = parse_session("ideal I = (q) in R;").unwrap_err();
        assert!(err2.message.contains("unknown ring"));
        let err3 =
            parse_session("ring R = QQ[x];\nideal I = (x + q) in R;").unwrap_err();
        assert_eq!(err3.line, 2);
        assert!(err3.message.contains("unknown name 'q'"));
    }

    #[test]
    fn fraction_literals_and_parens() {
        let text = "ring R = QQ[x, y];\nideal I = (1/3*x^2 - (x + y)*y) in R;";
        let s = parse_session(text).unwrap();
        let i = s.ideal("I").unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].num_terms(), 3);
    }
}
