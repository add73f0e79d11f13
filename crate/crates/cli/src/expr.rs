//! Umbral expressions: syntax tree, parser and canonical printer.
//!
//! ```text
//! expr    := dot (("+" | ".+" | ".-") dot)*
//! dot     := left "." dot | primary
//! left    := INT | "poly(" P ")" | primary
//! primary := atom | func "(" args ")" | "(" expr ")"
//! atom    := eps | u | chi | beta | uinv | bern | unif01
//!          | poisson(P) | bernoulli(P) | binomial(INT, P) | gamma(P, P)
//!          | moments[P, P, ...]
//! func    := inv(e) | cinv(e) | ppow(e, INT) | central(e) | shift(e, P)
//!          | mix(P: e, P: e, ...)
//! ```
//!
//! `P` is a polynomial, scanned up to the next top-level `,`, `:`, `)` or `]`.
//! Dots associate to the right and bind tighter than sums.

use std::fmt;

use umbral::coefficients::as_nonnegative_integer;
use umbral::{Canonical, Polynomial, UmbralError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Canonical(Canonical),
    Model(ModelAtom),
    Moments(Vec<Polynomial>),
    Sum(Box<Expr>, Box<Expr>),
    DisjointSum(Box<Expr>, Box<Expr>),
    DisjointDiff(Box<Expr>, Box<Expr>),
    IntDot(u64, Box<Expr>),
    PolyDot(Polynomial, Box<Expr>),
    Dot(Box<Expr>, Box<Expr>),
    Inv(Box<Expr>),
    Cinv(Box<Expr>),
    ProductPower(Box<Expr>, u32),
    Central(Box<Expr>),
    Shift(Box<Expr>, Polynomial),
    Mixture(Vec<(Polynomial, Expr)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelAtom {
    Poisson(Polynomial),
    Bernoulli(Polynomial),
    Binomial(u32, Polynomial),
    Gamma(Polynomial, Polynomial),
}

pub const ATOMS: [(&str, Canonical); 7] = [
    ("eps", Canonical::Epsilon),
    ("u", Canonical::Unity),
    ("chi", Canonical::Singleton),
    ("beta", Canonical::Bell),
    ("uinv", Canonical::UnityInverse),
    ("bern", Canonical::BernoulliNumbers),
    ("unif01", Canonical::Uniform01),
];

const FUNCTIONS: [&str; 11] = [
    "poisson", "bernoulli", "binomial", "gamma", "moments", "inv", "cinv", "ppow", "central",
    "shift", "mix",
];

fn atom_name(c: Canonical) -> &'static str {
    ATOMS.iter().find(|(_, k)| *k == c).expect("every canonical umbra has a name").0
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {pos}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<String>,
    pub found: String,
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(&["`+`", "`.+`", "`.-`", "`.`", "end of input"]));
    }
    Ok(e)
}

impl std::str::FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn found(&self) -> String {
        match self.rest().chars().next() {
            None => "end of input".to_string(),
            Some(c) => format!("`{c}`"),
        }
    }

    fn error(&mut self, expected: &[&str]) -> ParseError {
        self.skip_ws();
        ParseError {
            pos: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[&format!("`{token}`")]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.dot()?;
        loop {
            let op: fn(Box<Expr>, Box<Expr>) -> Expr = if self.eat(".+") {
                Expr::DisjointSum
            } else if self.eat(".-") {
                Expr::DisjointDiff
            } else if self.eat("+") {
                Expr::Sum
            } else {
                return Ok(lhs);
            };
            let rhs = self.dot()?;
            lhs = op(Box::new(lhs), Box::new(rhs));
        }
    }

    /// A `.` that is not the start of `.+` or `.-`.
    fn eat_dot(&mut self) -> bool {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with('.') && !r.starts_with(".+") && !r.starts_with(".-") {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn dot(&mut self) -> Result<Expr, ParseError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.integer()?;
            if !self.eat_dot() {
                return Err(self.error(&["`.` after an integer"]));
            }
            return Ok(Expr::IntDot(n, Box::new(self.dot()?)));
        }
        if self.rest().starts_with("poly") && self.ident_at_cursor() == "poly" {
            self.pos += 4;
            self.expect("(")?;
            let x = self.polynomial()?;
            self.expect(")")?;
            if !self.eat_dot() {
                return Err(self.error(&["`.` after poly(...)"]));
            }
            return Ok(Expr::PolyDot(x, Box::new(self.dot()?)));
        }
        let lhs = self.primary()?;
        if self.eat_dot() {
            Ok(Expr::Dot(Box::new(lhs), Box::new(self.dot()?)))
        } else {
            Ok(lhs)
        }
    }

    fn ident_at_cursor(&self) -> &'a str {
        let r = self.rest();
        let end = r
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(r.len());
        &r[..end]
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let r = self.rest();
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if end == 0 {
            return Err(self.error(&["integer"]));
        }
        let n = r[..end].parse().map_err(|_| self.error(&["integer below 2^64"]))?;
        self.pos += end;
        Ok(n)
    }

    /// Scans a polynomial up to the first top-level `,`, `:`, `)` or `]`.
    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let r = self.rest();
        let mut depth = 0usize;
        let mut end = r.len();
        for (i, c) in r.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth > 0 => depth -= 1,
                _ if depth == 0 && matches!(c, ',' | ':' | ')' | ']') => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        let text = &r[..end];
        if text.trim().is_empty() {
            return Err(self.error(&["polynomial"]));
        }
        let p = text.parse::<Polynomial>().map_err(|e| match e {
            UmbralError::PolynomialSyntax { pos, message } => ParseError {
                pos: self.pos + pos,
                expected: vec![message],
                found: text[pos.min(text.len())..]
                    .chars()
                    .next()
                    .map_or("end of argument".to_string(), |c| format!("`{c}`")),
            },
            other => ParseError {
                pos: self.pos,
                expected: vec!["polynomial".to_string()],
                found: other.to_string(),
            },
        })?;
        self.pos += end;
        Ok(p)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        self.skip_ws();
        let name = self.ident_at_cursor();
        if let Some((_, c)) = ATOMS.iter().find(|(n, _)| *n == name) {
            self.pos += name.len();
            return Ok(Expr::Canonical(*c));
        }
        if !FUNCTIONS.contains(&name) {
            let mut expected: Vec<&str> = vec!["`(`", "integer", "`poly(`"];
            expected.extend(ATOMS.iter().map(|(n, _)| *n));
            expected.extend(FUNCTIONS);
            return Err(self.error(&expected));
        }
        self.pos += name.len();
        if name == "moments" {
            self.expect("[")?;
            let mut values = vec![self.polynomial()?];
            while self.eat(",") {
                values.push(self.polynomial()?);
            }
            self.expect("]")?;
            return Ok(Expr::Moments(values));
        }
        self.expect("(")?;
        let e = match name {
            "poisson" => Expr::Model(ModelAtom::Poisson(self.polynomial()?)),
            "bernoulli" => Expr::Model(ModelAtom::Bernoulli(self.polynomial()?)),
            "binomial" => {
                let at = self.pos;
                let n = self.polynomial()?;
                let n = as_nonnegative_integer(&n)
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| ParseError {
                        pos: at,
                        expected: vec!["nonnegative integer trial count".to_string()],
                        found: format!("`{n}`"),
                    })?;
                self.expect(",")?;
                Expr::Model(ModelAtom::Binomial(n, self.polynomial()?))
            }
            "gamma" => {
                let a = self.polynomial()?;
                self.expect(",")?;
                Expr::Model(ModelAtom::Gamma(a, self.polynomial()?))
            }
            "inv" => Expr::Inv(Box::new(self.expr()?)),
            "cinv" => Expr::Cinv(Box::new(self.expr()?)),
            "central" => Expr::Central(Box::new(self.expr()?)),
            "ppow" => {
                let e = self.expr()?;
                self.expect(",")?;
                let n = self.integer()?;
                let n = u32::try_from(n).map_err(|_| self.error(&["exponent below 2^32"]))?;
                Expr::ProductPower(Box::new(e), n)
            }
            "shift" => {
                let e = self.expr()?;
                self.expect(",")?;
                Expr::Shift(Box::new(e), self.polynomial()?)
            }
            "mix" => {
                let mut parts = Vec::new();
                loop {
                    let w = self.polynomial()?;
                    self.expect(":")?;
                    parts.push((w, self.expr()?));
                    if !self.eat(",") {
                        break;
                    }
                }
                Expr::Mixture(parts)
            }
            _ => unreachable!("{name} is listed in FUNCTIONS"),
        };
        self.expect(")")?;
        Ok(e)
    }
}

impl Expr {
    fn is_sum_level(&self) -> bool {
        matches!(self, Expr::Sum(..) | Expr::DisjointSum(..) | Expr::DisjointDiff(..))
    }

    fn is_dot_level(&self) -> bool {
        matches!(self, Expr::Dot(..) | Expr::IntDot(..) | Expr::PolyDot(..))
    }
}

/// Writes `e` in parentheses when `wrap` holds.
fn operand(f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Canonical(c) => f.write_str(atom_name(*c)),
            Expr::Model(ModelAtom::Poisson(x)) => write!(f, "poisson({x})"),
            Expr::Model(ModelAtom::Bernoulli(p)) => write!(f, "bernoulli({p})"),
            Expr::Model(ModelAtom::Binomial(n, p)) => write!(f, "binomial({n}, {p})"),
            Expr::Model(ModelAtom::Gamma(a, c)) => write!(f, "gamma({a}, {c})"),
            Expr::Moments(values) => {
                let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "moments[{}]", items.join(", "))
            }
            Expr::Sum(l, r) | Expr::DisjointSum(l, r) | Expr::DisjointDiff(l, r) => {
                let op = match self {
                    Expr::Sum(..) => "+",
                    Expr::DisjointSum(..) => ".+",
                    _ => ".-",
                };
                operand(f, l, false)?;
                write!(f, " {op} ")?;
                operand(f, r, r.is_sum_level())
            }
            Expr::Dot(l, r) => {
                operand(f, l, l.is_sum_level() || l.is_dot_level())?;
                f.write_str(" . ")?;
                operand(f, r, r.is_sum_level())
            }
            Expr::IntDot(n, r) => {
                write!(f, "{n} . ")?;
                operand(f, r, r.is_sum_level())
            }
            Expr::PolyDot(x, r) => {
                write!(f, "poly({x}) . ")?;
                operand(f, r, r.is_sum_level())
            }
            Expr::Inv(e) => write!(f, "inv({e})"),
            Expr::Cinv(e) => write!(f, "cinv({e})"),
            Expr::ProductPower(e, n) => write!(f, "ppow({e}, {n})"),
            Expr::Central(e) => write!(f, "central({e})"),
            Expr::Shift(e, c) => write!(f, "shift({e}, {c})"),
            Expr::Mixture(parts) => {
                f.write_str("mix(")?;
                for (i, (w, e)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{w}: {e}")?;
                }
                f.write_str(")")
            }
        }
    }
}
