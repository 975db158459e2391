//! Expression language for the `eval` and `inverse` verbs.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := rational | symbol | "-" factor | "(" expr ")"
//!         | "conj(" expr ")" | "norm(" expr ")" | "inv(" expr ")"
//!         | "dot(" expr "," expr ")"
//! ```
//!
//! `*` associates to the left. Symbols are `e<k>` or, up to level 4, the
//! unit names `i j k l I J K L iL jL kL lL IL JL KL`.

use std::fmt;

use cayley_core::element::basis_index_of;
use cayley_core::scalar::rat_normalize;
use cayley_core::{Element, Error, ProductVariant, Rational};
use num_bigint::BigInt;
use num_traits::Zero;

/// Highest level an expression may live at.
pub const MAX_EXPR_LEVEL: usize = 6;

/// Highest level at which unit names are accepted.
pub const MAX_ALIAS_LEVEL: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error(transparent)]
    Core(#[from] Error),
}

pub type ExprResult<T> = std::result::Result<T, ExprError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Basis(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Conj(Box<Expr>),
    Norm(Box<Expr>),
    Inv(Box<Expr>),
    Dot(Box<Expr>, Box<Expr>),
}

/// Parse result plus what the source looked like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub expr: Expr,
    /// A term had three or more factors with no parentheses between them.
    pub product_chain: bool,
}

/// Parses `src` for an algebra at `level`.
pub fn parse_expr(src: &str, level: usize) -> ExprResult<Expr> {
    parse(src, Some(level)).map(|p| p.expr)
}

/// Parses `src`; with `level == None` any symbol up to the maximum level is
/// accepted.
pub fn parse(src: &str, level: Option<usize>) -> ExprResult<Parsed> {
    if let Some(l) = level {
        if l > MAX_EXPR_LEVEL {
            return Err(Error::Usage(format!("level {l} exceeds maximum {MAX_EXPR_LEVEL}")).into());
        }
    }
    let tokens = lex(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        level,
        product_chain: false,
    };
    let expr = p.expr()?;
    let tok = p.peek();
    if tok.kind != Tok::End {
        return Err(syntax(tok.start, "unexpected input after expression"));
    }
    Ok(Parsed {
        expr,
        product_chain: p.product_chain,
    })
}

/// Smallest level whose basis contains every symbol of `expr`.
pub fn infer_level(expr: &Expr) -> usize {
    let mut max_index = 0;
    expr.visit(&mut |e| {
        if let Expr::Basis(k) = e {
            max_index = max_index.max(*k);
        }
    });
    let mut level = 0;
    while (1usize << level) <= max_index {
        level += 1;
    }
    level
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Element(Element),
}

impl Value {
    pub fn to_text(&self, pretty: bool) -> String {
        match self {
            Value::Scalar(r) => r.to_string(),
            Value::Element(e) => e.to_text(pretty),
        }
    }

    /// The value as an element of the algebra at `level`.
    pub fn into_element(self, level: usize) -> Element {
        match self {
            Value::Scalar(r) => Element::scalar(level, r),
            Value::Element(e) => e,
        }
    }
}

/// Evaluates `expr` in the algebra at `level`.
///
/// Literals stay rational until they meet an element, where `r` becomes
/// `r*e0`. `norm` and `dot` always return rationals. `variant` selects the
/// pair product used by `*` at level 1 and above.
pub fn eval_expr(expr: &Expr, level: usize, variant: ProductVariant) -> ExprResult<Value> {
    use Value::{Element as E, Scalar as S};
    let ev = |e: &Expr| eval_expr(e, level, variant);
    let lift = |v: Value| v.into_element(level);
    Ok(match expr {
        Expr::Rational(r) => S(r.clone()),
        Expr::Basis(k) => E(Element::basis(level, *k)?),
        Expr::Neg(x) => match ev(x)? {
            S(r) => S(-r),
            E(e) => E(-e),
        },
        Expr::Add(a, b) => match (ev(a)?, ev(b)?) {
            (S(x), S(y)) => S(x + y),
            (x, y) => E(lift(x).try_add(&lift(y))?),
        },
        Expr::Sub(a, b) => match (ev(a)?, ev(b)?) {
            (S(x), S(y)) => S(x - y),
            (x, y) => E(lift(x).try_sub(&lift(y))?),
        },
        Expr::Mul(a, b) => match (ev(a)?, ev(b)?) {
            (S(x), S(y)) => S(x * y),
            (S(x), E(y)) => E(y.scale(&x)),
            (E(x), S(y)) => E(x.scale(&y)),
            (E(x), E(y)) if level == 0 => E(x.try_mul(&y)?),
            (E(x), E(y)) => E(x.mul_variant(variant, &y)?),
        },
        Expr::Conj(x) => match ev(x)? {
            S(r) => S(r),
            E(e) => E(e.conj()),
        },
        Expr::Norm(x) => match ev(x)? {
            S(r) => S(&r * &r),
            E(e) => S(e.norm()),
        },
        Expr::Inv(x) => match ev(x)? {
            S(r) if r.is_zero() => return Err(Error::DivisionByZero.into()),
            S(r) => S(r.recip()),
            E(e) => E(e.inverse()?),
        },
        Expr::Dot(a, b) => match (ev(a)?, ev(b)?) {
            (S(x), S(y)) => S(x * y),
            (x, y) => S(lift(x).try_dot(&lift(y))?),
        },
    })
}

impl Expr {
    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Rational(_) | Expr::Basis(_) => {}
            Expr::Neg(x) | Expr::Conj(x) | Expr::Norm(x) | Expr::Inv(x) => x.visit(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Dot(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            _ => 2,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Rational(r) => write!(f, "{r}"),
            Expr::Basis(k) => write!(f, "e{k}"),
            Expr::Neg(x) => {
                f.write_str("-")?;
                if matches!(**x, Expr::Rational(_)) {
                    write!(f, "({x})")
                } else {
                    x.write_at(f, 2)
                }
            }
            Expr::Add(a, b) => {
                a.write_at(f, 0)?;
                f.write_str(" + ")?;
                b.write_at(f, 1)
            }
            Expr::Sub(a, b) => {
                a.write_at(f, 0)?;
                f.write_str(" - ")?;
                b.write_at(f, 1)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 1)?;
                f.write_str("*")?;
                b.write_at(f, 2)
            }
            Expr::Conj(x) => write!(f, "conj({x})"),
            Expr::Norm(x) => write!(f, "norm({x})"),
            Expr::Inv(x) => write!(f, "inv({x})"),
            Expr::Dot(a, b) => write!(f, "dot({a}, {b})"),
        }
    }
}

/// Prints with the minimal parentheses needed to re-parse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    kind: Tok,
    start: usize,
    end: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(src: &str) -> ExprResult<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_end = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let num_end = digits_end(i);
                let num: BigInt = src[i..num_end].parse().expect("ascii digits");
                i = num_end;
                let mut den = BigInt::from(1);
                if i < bytes.len() && bytes[i] == b'/' {
                    let den_end = digits_end(i + 1);
                    if den_end == i + 1 {
                        return Err(syntax(i + 1, "expected a positive integer denominator"));
                    }
                    den = src[i + 1..den_end].parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(syntax(i + 1, "denominator must be positive"));
                    }
                    i = den_end;
                }
                out.push(Token {
                    kind: Tok::Num(rat_normalize(num, den)?),
                    start,
                    end: i,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token {
                    kind: Tok::Ident(src[start..i].to_string()),
                    start,
                    end: i,
                });
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        i += 1;
        out.push(Token {
            kind,
            start,
            end: i,
        });
    }
    out.push(Token {
        kind: Tok::End,
        start: src.len(),
        end: src.len(),
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    level: Option<usize>,
    product_chain: bool,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: Tok, what: &str) -> ExprResult<()> {
        let t = self.bump();
        if t.kind == kind {
            Ok(())
        } else {
            Err(syntax(t.start, format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> ExprResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().kind {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> ExprResult<Expr> {
        let mut lhs = self.factor()?;
        let mut factors = 1;
        while self.peek().kind == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            factors += 1;
        }
        if factors >= 3 {
            self.product_chain = true;
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> ExprResult<Expr> {
        let t = self.bump();
        match t.kind {
            Tok::Num(r) => Ok(Expr::Rational(r)),
            Tok::Minus => {
                let next = self.peek().clone();
                if let (Tok::Num(r), true) = (&next.kind, next.start == t.end) {
                    self.bump();
                    return Ok(Expr::Rational(-r.clone()));
                }
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if self.peek().kind == Tok::LParen {
                    return self.call(&name, t.start);
                }
                self.symbol(&name, t.start)
            }
            Tok::End => Err(syntax(t.start, "unexpected end of input")),
            _ => Err(syntax(t.start, "expected a number, symbol or '('")),
        }
    }

    fn call(&mut self, name: &str, start: usize) -> ExprResult<Expr> {
        let wrap: fn(Box<Expr>) -> Expr = match name {
            "conj" => Expr::Conj,
            "norm" => Expr::Norm,
            "inv" => Expr::Inv,
            "dot" => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(Expr::Dot(Box::new(a), Box::new(b)));
            }
            _ => return Err(syntax(start, format!("unknown function {name:?}"))),
        };
        self.bump();
        let e = self.expr()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(wrap(Box::new(e)))
    }

    fn symbol(&self, name: &str, start: usize) -> ExprResult<Expr> {
        let index = if let Some(digits) = name.strip_prefix('e') {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(start, format!("unknown symbol {name:?}")));
            }
            digits
                .parse::<usize>()
                .map_err(|_| syntax(start, "index too large"))?
        } else {
            let k = basis_index_of(name)
                .filter(|&k| k > 0)
                .ok_or_else(|| syntax(start, format!("unknown symbol {name:?}")))?;
            if let Some(l) = self.level.filter(|&l| l > MAX_ALIAS_LEVEL) {
                return Err(Error::Dimension(format!(
                    "unit name {name} is only available up to level {MAX_ALIAS_LEVEL}, not {l}"
                ))
                .into());
            }
            k
        };
        let limit = self.level.unwrap_or(MAX_EXPR_LEVEL);
        if index >= 1 << limit {
            return Err(Error::Dimension(format!(
                "{name} is outside the level-{limit} basis (dimension {})",
                1usize << limit
            ))
            .into());
        }
        Ok(Expr::Basis(index))
    }
}
