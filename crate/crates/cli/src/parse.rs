//! Recursive-descent parsers for algebra words and polynomial-representation
//! elements. Errors carry the 1-based line and column of the offending token.

use std::fmt;

use cherednik_core::arith::{ParamPoly, Q};
use cherednik_core::rep::element::reduce_texp;
use cherednik_core::rep::{standard_gen_word, Gen, PolyRepElement, StdKind, Word};
use cherednik_core::Setting;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    /// Letters, optionally followed by a decimal index: `sig`, `t12`.
    Ident(String, Option<u64>),
    Num(u64),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let digits = |i: &mut usize, col: &mut usize| -> Result<u64, String> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
            *col += 1;
        }
        chars[start..*i].iter().collect::<String>().parse::<u64>().map_err(|_| "number too large".to_string())
    };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let err = |message: String| ParseError { line: tl, col: tc, message };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
                col += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let index = if i < chars.len() && chars[i].is_ascii_digit() {
                Some(digits(&mut i, &mut col).map_err(err)?)
            } else {
                None
            };
            out.push(Token { tok: Tok::Ident(name, index), line: tl, col: tc });
        } else if c.is_ascii_digit() {
            let v = digits(&mut i, &mut col).map_err(err)?;
            out.push(Token { tok: Tok::Num(v), line: tl, col: tc });
        } else if "*^()+-/".contains(c) {
            out.push(Token { tok: Tok::Sym(c), line: tl, col: tc });
            i += 1;
            col += 1;
        } else {
            return Err(err(format!("unexpected character '{c}'")));
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Cursor {
    toks: Vec<Token>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Result<Cursor, ParseError> {
        Ok(Cursor { toks: tokenize(src)?, pos: 0 })
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_at(t: &Token, message: impl Into<String>) -> ParseError {
        ParseError { line: t.line, col: t.col, message: message.into() }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match &self.peek().tok {
            Tok::End => Ok(()),
            other => Err(Cursor::error_at(self.peek(), format!("unexpected {}", describe(other)))),
        }
    }

    /// `^<int>` after a factor, if present.
    fn power(&mut self) -> Result<Option<u64>, ParseError> {
        if !self.eat('^') {
            return Ok(None);
        }
        let t = self.next();
        match t.tok {
            Tok::Num(v) => Ok(Some(v)),
            _ => Err(Cursor::error_at(&t, "malformed power: expected a nonnegative integer after '^'")),
        }
    }

    /// Juxtaposition or `*` continues a product.
    fn continues_product(&mut self) -> bool {
        if self.eat('*') {
            return true;
        }
        matches!(self.peek().tok, Tok::Ident(..) | Tok::Num(_) | Tok::Sym('('))
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(name, Some(i)) => format!("'{name}{i}'"),
        Tok::Ident(name, None) => format!("'{name}'"),
        Tok::Num(v) => format!("number {v}"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

const MAX_POWER: u64 = 64;

fn check_index(t: &Token, i: Option<u64>, lo: u64, hi: u64) -> Result<usize, ParseError> {
    match i {
        None => Err(Cursor::error_at(t, format!("{} needs an index", describe(&t.tok)))),
        Some(i) if i < lo || i > hi => {
            Err(Cursor::error_at(t, format!("index out of range in {}: expected {lo}..={hi}", describe(&t.tok))))
        }
        Some(i) => Ok(i as usize),
    }
}

/// Parse a word in t<i>, u<i>, s<i>, sig, tau, x<i>, y<i> for rank `n`.
/// The leftmost factor acts last; `x`/`y` are expanded into alternate
/// generators. The literal `1` is the empty word.
pub fn parse_word(src: &str, n: usize) -> Result<Word, ParseError> {
    let mut c = Cursor::new(src)?;
    let w = word_product(&mut c, n)?;
    c.expect_end()?;
    Ok(w)
}

fn word_product(c: &mut Cursor, n: usize) -> Result<Word, ParseError> {
    let mut w = word_factor(c, n)?;
    while c.continues_product() {
        w = w.then(&word_factor(c, n)?);
    }
    Ok(w)
}

fn word_factor(c: &mut Cursor, n: usize) -> Result<Word, ParseError> {
    let t = c.next();
    let base = match &t.tok {
        Tok::Sym('(') => {
            let inner = word_product(c, n)?;
            if !c.eat(')') {
                return Err(Cursor::error_at(c.peek(), "expected ')'"));
            }
            inner
        }
        Tok::Num(1) => Word::empty(),
        Tok::Ident(name, idx) => {
            let n64 = n as u64;
            match name.as_str() {
                "t" => Word::of(&[Gen::T(check_index(&t, *idx, 1, n64)?)]),
                "u" => Word::of(&[Gen::U(check_index(&t, *idx, 1, n64)?)]),
                "s" => Word::of(&[Gen::Swap(check_index(&t, *idx, 1, n64 - 1)?)]),
                "x" | "y" => {
                    let kind = if name == "x" { StdKind::X } else { StdKind::Y };
                    standard_gen_word(kind, check_index(&t, *idx, 1, n64)?, n)
                        .map_err(|e| Cursor::error_at(&t, e.to_string()))?
                }
                "sig" | "tau" if idx.is_none() => Word::of(&[if name == "sig" { Gen::Sigma } else { Gen::Tau }]),
                _ => return Err(Cursor::error_at(&t, format!("unknown atom {}", describe(&t.tok)))),
            }
        }
        other => return Err(Cursor::error_at(&t, format!("expected a generator, found {}", describe(other)))),
    };
    match c.power()? {
        None => Ok(base),
        Some(e) if e > MAX_POWER => Err(Cursor::error_at(&t, format!("power {e} exceeds {MAX_POWER}"))),
        Some(e) => Ok(base.pow(e as usize)),
    }
}

/// Inverse of [`parse_word`] on words in alternate generators.
pub fn print_word(w: &Word) -> String {
    w.to_string()
}

/// Parse a combination of U<i>, T<i>, h, k, s<m>, z (a primitive ℓ-th root
/// of unity) and rational numbers, with `+ - * / ^` and parentheses.
/// `/` is only allowed between integer literals.
pub fn parse_element(src: &str, st: &Setting) -> Result<PolyRepElement, ParseError> {
    let mut c = Cursor::new(src)?;
    let e = sum(&mut c, st)?;
    c.expect_end()?;
    Ok(e)
}

fn sum(c: &mut Cursor, st: &Setting) -> Result<PolyRepElement, ParseError> {
    let mut acc = if c.eat('-') { -&product(c, st)? } else { product(c, st)? };
    loop {
        if c.eat('+') {
            acc = &acc + &product(c, st)?;
        } else if c.eat('-') {
            acc = &acc - &product(c, st)?;
        } else {
            return Ok(acc);
        }
    }
}

fn product(c: &mut Cursor, st: &Setting) -> Result<PolyRepElement, ParseError> {
    let mut acc = power(c, st)?;
    while c.continues_product() {
        acc = acc.mul(st, &power(c, st)?);
    }
    Ok(acc)
}

fn power(c: &mut Cursor, st: &Setting) -> Result<PolyRepElement, ParseError> {
    let start = c.peek().clone();
    let base = atom(c, st)?;
    match c.power()? {
        None => Ok(base),
        Some(e) if e > MAX_POWER => Err(Cursor::error_at(&start, format!("power {e} exceeds {MAX_POWER}"))),
        Some(e) => {
            let mut out = PolyRepElement::one(st.field);
            for _ in 0..e {
                out = out.mul(st, &base);
            }
            Ok(out)
        }
    }
}

fn atom(c: &mut Cursor, st: &Setting) -> Result<PolyRepElement, ParseError> {
    let t = c.next();
    let poly = |f: ParamPoly| Ok(PolyRepElement::from_poly(f));
    match &t.tok {
        Tok::Sym('(') => {
            let inner = sum(c, st)?;
            if !c.eat(')') {
                return Err(Cursor::error_at(c.peek(), "expected ')'"));
            }
            Ok(inner)
        }
        Tok::Sym('-') => Ok(-&power(c, st)?),
        Tok::Num(v) => {
            let num = i64::try_from(*v).map_err(|_| Cursor::error_at(&t, "number too large"))?;
            if c.eat('/') {
                let d = c.next();
                match d.tok {
                    Tok::Num(0) => Err(Cursor::error_at(&d, "division by zero")),
                    Tok::Num(den) => {
                        let den = i64::try_from(den).map_err(|_| Cursor::error_at(&d, "number too large"))?;
                        poly(st.rational(Q::new(num, den)))
                    }
                    _ => Err(Cursor::error_at(&d, "expected an integer denominator")),
                }
            } else {
                poly(st.int(num))
            }
        }
        Tok::Ident(name, idx) => match (name.as_str(), *idx) {
            ("U", _) => poly(st.u(check_index(&t, *idx, 1, st.n as u64)?)),
            ("T", _) => {
                let i = check_index(&t, *idx, 1, st.n as u64)?;
                let mut b = vec![0i64; st.n];
                b[i - 1] = 1;
                Ok(PolyRepElement::monomial(st.one(), reduce_texp(st, &b)))
            }
            ("h", None) => poly(st.hbar()),
            ("k", None) => poly(st.kappa()),
            ("s", Some(m)) => poly(st.s(m as i64)),
            ("z", None) => poly(ParamPoly::constant(st.zeta(1))),
            _ => Err(Cursor::error_at(&t, format!("unknown symbol {}", describe(&t.tok)))),
        },
        other => Err(Cursor::error_at(&t, format!("expected a term, found {}", describe(other)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_examples() {
        assert_eq!(parse_word("s1*s1", 2).unwrap(), Word::of(&[Gen::Swap(1), Gen::Swap(1)]));
        assert_eq!(parse_word("tau^2", 2).unwrap(), Word::of(&[Gen::Tau, Gen::Tau]));
        assert_eq!(parse_word("x1^1 * sig", 2).unwrap(), Word::of(&[Gen::Sigma, Gen::Swap(1), Gen::Sigma]));
        assert_eq!(parse_word("u1 u2", 2).unwrap(), Word::of(&[Gen::U(1), Gen::U(2)]));
        assert_eq!(parse_word("(s1 t2)^2", 2).unwrap().len(), 4);
        assert_eq!(parse_word("1", 2).unwrap(), Word::empty());
    }

    #[test]
    fn word_errors_have_positions() {
        let e = parse_word("s1 *\n  foo", 2).unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        assert!(e.message.contains("unknown atom"));
        let e = parse_word("s2", 2).unwrap_err();
        assert!(e.message.contains("out of range"), "{e}");
        let e = parse_word("tau^", 2).unwrap_err();
        assert!(e.message.contains("malformed power"), "{e}");
        assert!(parse_word("t", 2).is_err());
    }

    #[test]
    fn element_parsing() {
        let st = Setting::new(2, 1, 2).unwrap();
        let e = parse_element("U1*T1 - 3/2 h + (U2)^2", &st).unwrap();
        let expect = &(&PolyRepElement::monomial(st.u(1), reduce_texp(&st, &[1, 0]))
            - &PolyRepElement::from_poly(st.hbar().scale_q(&Q::new(3, 2))))
            + &PolyRepElement::from_poly(&st.u(2) * &st.u(2));
        assert_eq!(e, expect);
        // T_1^2 = 1 when ℓ = 2
        assert_eq!(parse_element("T1^2", &st).unwrap(), PolyRepElement::one(st.field));
        assert!(parse_element("U3", &st).is_err());
        assert!(parse_element("1/0", &st).is_err());
    }
}
