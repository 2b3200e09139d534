use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::cyclotomic::CycInt;
use super::laurent::LaurentPoly;
use super::ring::{CoeffRing, Monomial, Ring, ROOT_NAME};
use super::PolyError;

/// Terms grouped by the named-variable part of the monomial, each with its coefficient.
fn grouped(p: &LaurentPoly) -> Vec<(Monomial, CycInt)> {
    let ring = p.ring();
    let (order, phi) = match ring.coeff_ring() {
        CoeffRing::Integer => (1, 1),
        CoeffRing::Cyclotomic(n) => (n, ring.phi_deg()),
    };
    let mut map: BTreeMap<Monomial, Vec<i64>> = BTreeMap::new();
    for &(m, c) in p.terms() {
        match ring.w_slot() {
            None => map.entry(m).or_insert_with(|| vec![0; 1])[0] += c,
            Some(ws) => map.entry(m.with_slot(ws, 0)).or_insert_with(|| vec![0; phi])[m.exp(ws) as usize] += c,
        }
    }
    map.into_iter().map(|(m, v)| (m, CycInt::from_coeffs(order, v))).collect()
}

/// Slots of the named variables in alphabetical order of their names.
fn alpha_slots(ring: &Ring) -> Vec<usize> {
    let mut slots: Vec<usize> = (0..ring.vars().len()).collect();
    slots.sort_by(|&a, &b| ring.vars()[a].cmp(&ring.vars()[b]));
    slots
}

/// Serialization order: total degree ascending, then exponents in alphabetical variable
/// order, larger exponent first.
pub(crate) fn serial_order(p: &LaurentPoly) -> Vec<(Monomial, CycInt)> {
    let slots = alpha_slots(p.ring());
    let mut g = grouped(p);
    g.sort_by_key(|(m, _)| {
        let total: i32 = slots.iter().map(|&s| m.exp(s)).sum();
        let key: Vec<i32> = slots.iter().map(|&s| -m.exp(s)).collect();
        (total, key)
    });
    g
}

fn mono_string(ring: &Ring, m: &Monomial) -> String {
    alpha_slots(ring)
        .into_iter()
        .filter(|&s| m.exp(s) != 0)
        .map(|s| {
            let e = m.exp(s);
            let name = &ring.vars()[s];
            if e == 1 {
                name.clone()
            } else {
                format!("{}^{}", name, e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = serial_order(self);
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in terms.iter().enumerate() {
            let mono = mono_string(self.ring(), m);
            let (neg, body) = match c.to_int() {
                Some(v) => {
                    let a = v.unsigned_abs();
                    let body = if mono.is_empty() {
                        a.to_string()
                    } else if a == 1 {
                        mono.clone()
                    } else {
                        format!("{}*{}", a, mono)
                    };
                    (v < 0, body)
                }
                None => {
                    let body = if mono.is_empty() { format!("({})", c) } else { format!("({})*{}", c, mono) };
                    (false, body)
                }
            };
            match (i == 0, neg) {
                (true, true) => write!(f, "-{}", body)?,
                (true, false) => write!(f, "{}", body)?,
                (false, true) => write!(f, " - {}", body)?,
                (false, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, PolyError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[st..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| PolyError::Parse(format!("bad number {}", text)))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[st..i].iter().collect()));
        } else if "+-*^(){}".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else if c == '−' {
            out.push(Tok::Sym('-'));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character {:?}", c)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Arc<Ring>,
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

    fn expr(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = LaurentPoly::zero(self.ring);
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')))
    }

    fn term(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<i32, PolyError> {
        let close = if self.eat('(') {
            Some(')')
        } else if self.eat('{') {
            Some('}')
        } else {
            None
        };
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let v = match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                v
            }
            other => return Err(PolyError::Parse(format!("expected exponent, got {:?}", other))),
        };
        if let Some(c) = close {
            if !self.eat(c) {
                return Err(PolyError::Parse(format!("expected {}", c)));
            }
        }
        let v = i32::try_from(v).map_err(|_| PolyError::Parse("exponent too large".into()))?;
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self) -> Result<LaurentPoly, PolyError> {
        let base = match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                LaurentPoly::constant(self.ring, v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == ROOT_NAME && self.ring.order().is_some() {
                    LaurentPoly::omega(self.ring)?
                } else {
                    LaurentPoly::var(self.ring, &name)?
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(PolyError::Parse("expected )".into()));
                }
                e
            }
            other => return Err(PolyError::Parse(format!("unexpected token {:?}", other))),
        };
        if self.eat('^') {
            let e = self.exponent()?;
            return base.powi(e);
        }
        Ok(base)
    }
}

impl LaurentPoly {
    /// Parse an expression such as `1 + 4u + u^2 + v`, `(1 + 2u)(1 + 18u)` or `t^-1 - 1 + t`.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<LaurentPoly, PolyError> {
        let toks = tokenize(text)?;
        let mut p = Parser { toks, pos: 0, ring };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(PolyError::Parse(format!("trailing input at token {}", p.pos)));
        }
        Ok(e)
    }

    /// Parse with an integer ring whose variables are the identifiers found in the text.
    pub fn parse_auto(text: &str) -> Result<LaurentPoly, PolyError> {
        let mut names: Vec<String> = tokenize(text)?
            .into_iter()
            .filter_map(|t| if let Tok::Ident(n) = t { Some(n) } else { None })
            .collect();
        names.sort();
        names.dedup();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ring = Ring::new(&refs, CoeffRing::Integer)?;
        Self::parse(&ring, text)
    }

    /// Display with terms collected by powers of `var`, e.g. `1 + (q + 2*q^3)*u + q^2*u^2`.
    pub fn to_string_collected(&self, var: &str) -> Result<String, PolyError> {
        LaurentPoly::var(self.ring(), var)?;
        let slot = self.ring().var_index(var).expect("variable checked above");
        let mut groups: BTreeMap<i32, Vec<(Monomial, i64)>> = BTreeMap::new();
        for &(m, c) in self.terms() {
            groups.entry(m.exp(slot)).or_default().push((m.with_slot(slot, 0), c));
        }
        if groups.is_empty() {
            return Ok("0".into());
        }
        let mut out = String::new();
        for (i, (e, terms)) in groups.into_iter().enumerate() {
            let coeff = LaurentPoly::from_terms(self.ring(), terms).to_string();
            let power = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, e),
            };
            let single = !coeff[1..].contains([' ', '(']);
            let (neg, body) = match (coeff.as_str(), power.is_empty()) {
                (c, true) => (c.starts_with('-') && single, if single { c.trim_start_matches('-').to_string() } else { c.to_string() }),
                ("1", false) => (false, power),
                ("-1", false) => (true, power),
                (c, false) if single => (c.starts_with('-'), format!("{}*{}", c.trim_start_matches('-'), power)),
                (c, false) => (false, format!("({})*{}", c, power)),
            };
            out.push_str(match (i == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            });
            out.push_str(&body);
        }
        Ok(out)
    }
}
