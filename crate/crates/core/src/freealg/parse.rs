use num_bigint::BigInt;

use super::FreePoly;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<FreePoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreePoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FreePoly> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Minus => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Tok::Num(n) => {
                self.pos += 1;
                let mut value = Rational::from(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            value = &value / &Rational::from(d);
                        }
                        Some(Tok::Num(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected denominator"),
                    }
                }
                Ok(FreePoly::constant(value))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.pos += 1;
                match name.as_str() {
                    "jord" | "comm" => {
                        self.expect(Tok::LParen, "`(`")?;
                        let f = self.expr()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let g = self.expr()?;
                        self.expect(Tok::RParen, "`)`")?;
                        Ok(if name == "jord" {
                            f.jordan(&g)
                        } else {
                            f.lie(&g)
                        })
                    }
                    _ => generator_index(&name)
                        .map(FreePoly::generator)
                        .ok_or(Error::UnknownGenerator(name)),
                }
            }
            _ => self.err("expected a generator, literal, function or `(`"),
        }
    }
}

fn generator_index(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Parses an expression over `x1, x2, ...` with `+ - *`, rational literals
/// `p/q`, `jord(f,g)`, `comm(f,g)` and parentheses.
pub fn parse_poly(text: &str) -> Result<FreePoly> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    if p.toks.is_empty() {
        return p.err("empty expression");
    }
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;

    #[test]
    fn parses_spec_examples() {
        let c = parse_poly("x1*x2 - x2*x1").unwrap();
        assert_eq!(c.num_terms(), 2);
        assert_eq!(c, FreePoly::generator(1).lie(&FreePoly::generator(2)));
        assert_eq!(
            parse_poly("jord(x1,x2)").unwrap().to_string(),
            "x1*x2 + x2*x1"
        );
        let cube = parse_poly("x1*x1*x1").unwrap();
        assert_eq!(cube.num_terms(), 1);
        assert_eq!(cube.coefficient(&Word::new(vec![1, 1, 1])), Rational::ONE);
    }

    #[test]
    fn literals_and_nesting() {
        let f = parse_poly(" 2/4 * comm(x1, -x2) + (x3) ").unwrap();
        assert_eq!(f.to_string(), "x3 - 1/2*x1*x2 + 1/2*x2*x1");
        assert_eq!(parse_poly("--x1").unwrap(), FreePoly::generator(1));
        assert_eq!(parse_poly("x12").unwrap(), FreePoly::generator(12));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("x1 + y2"),
            Err(Error::UnknownGenerator("y2".into()))
        );
        assert!(matches!(parse_poly("x0"), Err(Error::UnknownGenerator(_))));
        assert!(matches!(
            parse_poly("x1 + "),
            Err(Error::Parse { position: 5, .. })
        ));
        assert!(matches!(
            parse_poly("x1 x2"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(parse_poly("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poly("x1 # x2"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_poly("comm(x1 x2)"),
            Err(Error::Parse { .. })
        ));
    }
}
