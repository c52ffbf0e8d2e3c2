//! Text syntax for polynomials.
//!
//! Grammar: `+`/`-` sums of products; `*` or juxtaposition for the product;
//! `[f,g]` for the commutator; `^` for powers; integer or rational
//! (`p/q`) coefficients; variables `x1`, `x2`, ... Parentheses group.
//! The printer and parser round-trip.

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::Polynomial;
use crate::word::Word;
use crate::{Rat, RatPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected} at byte {pos}")]
    Expected { pos: usize, expected: &'static str },
    #[error("variable index must be between 1 and 255, got {text}")]
    BadVariableIndex { text: String },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("exponent too large: {text}")]
    BadExponent { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    Var(u8),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn tokenize(input: &str, var_prefix: char) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut tokens = Vec::new();
    let bytes: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let pos = i;
        match ch {
            c if c.is_whitespace() => {
                i += 1;
            }
            '+' => {
                tokens.push((pos, Token::Plus));
                i += 1;
            }
            '-' | '−' => {
                tokens.push((pos, Token::Minus));
                i += 1;
            }
            '*' | '·' => {
                tokens.push((pos, Token::Star));
                i += 1;
            }
            '/' => {
                tokens.push((pos, Token::Slash));
                i += 1;
            }
            '^' => {
                tokens.push((pos, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                i += 1;
            }
            '[' => {
                tokens.push((pos, Token::LBracket));
                i += 1;
            }
            ']' => {
                tokens.push((pos, Token::RBracket));
                i += 1;
            }
            ',' => {
                tokens.push((pos, Token::Comma));
                i += 1;
            }
            c if c == var_prefix => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                let index: u32 = text
                    .parse()
                    .map_err(|_| ParseError::BadVariableIndex { text: text.clone() })?;
                if index == 0 || index > 255 {
                    return Err(ParseError::BadVariableIndex { text });
                }
                tokens.push((pos, Token::Var(index as u8)));
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                let value = BigInt::from_str(&text).expect("digit string");
                tokens.push((pos, Token::Number(value)));
            }
            c => return Err(ParseError::UnexpectedChar { pos, ch: c }),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, what: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&token) {
            self.cursor += 1;
            Ok(())
        } else if self.peek().is_none() {
            Err(ParseError::UnexpectedEnd)
        } else {
            Err(ParseError::Expected { pos: self.pos(), expected: what })
        }
    }

    fn expr(&mut self) -> Result<RatPoly, ParseError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some(Token::Minus) => {
                    negate = !negate;
                    self.cursor += 1;
                }
                Some(Token::Plus) => {
                    self.cursor += 1;
                }
                _ => break,
            }
        }
        let mut sum = self.term()?;
        if negate {
            sum = -sum;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.cursor += 1;
                    sum = sum + self.term()?;
                }
                Some(Token::Minus) => {
                    self.cursor += 1;
                    sum = sum - self.term()?;
                }
                _ => return Ok(sum),
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly, ParseError> {
        let mut product = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.cursor += 1;
                    product = product * self.factor()?;
                }
                // Juxtaposition: a factor can start right after another.
                Some(Token::Number(_))
                | Some(Token::Var(_))
                | Some(Token::LParen)
                | Some(Token::LBracket) => {
                    product = product * self.factor()?;
                }
                _ => return Ok(product),
            }
        }
    }

    fn factor(&mut self) -> Result<RatPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.cursor += 1;
            match self.bump() {
                Some(Token::Number(e)) => {
                    let exp = u32::try_from(e.clone())
                        .map_err(|_| ParseError::BadExponent { text: e.to_string() })?;
                    Ok(base.pow(exp))
                }
                Some(_) => Err(ParseError::Expected { pos: self.pos(), expected: "exponent" }),
                None => Err(ParseError::UnexpectedEnd),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatPoly, ParseError> {
        match self.bump() {
            Some(Token::Number(numer)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.cursor += 1;
                    match self.bump() {
                        Some(Token::Number(denom)) => {
                            if denom == BigInt::from(0) {
                                return Err(ParseError::ZeroDenominator);
                            }
                            Ok(RatPoly::constant(Rat::new(numer, denom)))
                        }
                        Some(_) => {
                            Err(ParseError::Expected { pos: self.pos(), expected: "denominator" })
                        }
                        None => Err(ParseError::UnexpectedEnd),
                    }
                } else {
                    Ok(RatPoly::constant(Rat::from_integer(numer)))
                }
            }
            Some(Token::Var(index)) => Ok(RatPoly::monomial(Word::var(index), Rat::from_integer(1.into()))),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::LBracket) => {
                let left = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let right = self.expr()?;
                self.expect(Token::RBracket, "']'")?;
                Ok(left.commutator(&right))
            }
            Some(_) => Err(ParseError::Expected {
                pos: self.tokens[self.cursor - 1].0,
                expected: "number, variable, '(' or '['",
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parses polynomial text over variables written `<prefix>1 <prefix>2 ...`.
pub fn parse_with_prefix(input: &str, var_prefix: char) -> Result<RatPoly, ParseError> {
    let tokens = tokenize(input, var_prefix)?;
    if tokens.is_empty() {
        return Err(ParseError::UnexpectedEnd);
    }
    let mut parser = Parser { tokens, cursor: 0 };
    let poly = parser.expr()?;
    if parser.cursor != parser.tokens.len() {
        return Err(ParseError::Expected { pos: parser.pos(), expected: "end of input" });
    }
    Ok(poly)
}

/// Parses polynomial text over the variables `x1, x2, ...`.
pub fn parse_polynomial(input: &str) -> Result<RatPoly, ParseError> {
    parse_with_prefix(input, 'x')
}

impl FromStr for RatPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integer;

    #[test]
    fn parses_commutators_and_powers() {
        let f: RatPoly = "[[x2,x1],x1]".parse().unwrap();
        let by_hand = RatPoly::var(2)
            .commutator(&RatPoly::var(1))
            .commutator(&RatPoly::var(1));
        assert_eq!(f, by_hand);

        let g: RatPoly = "(x2*x1)^2-(x1*x2)^2".parse().unwrap();
        let p21 = RatPoly::var(2) * RatPoly::var(1);
        let p12 = RatPoly::var(1) * RatPoly::var(2);
        assert_eq!(g, p21.pow(2) - p12.pow(2));
    }

    #[test]
    fn parses_coefficients_and_juxtaposition() {
        let f: RatPoly = "3/2*x1*x2 - x2x1 + 2".parse().unwrap();
        let expected = (RatPoly::var(1) * RatPoly::var(2)).scale(&crate::rational(3, 2))
            - RatPoly::var(2) * RatPoly::var(1)
            + RatPoly::constant(integer(2));
        assert_eq!(f, expected);
    }

    #[test]
    fn printer_output_parses_back() {
        let f: RatPoly = "[x3,[x2,x1]] - 1/3*[x2,x1]*x3 + 7".parse().unwrap();
        let printed = f.to_string();
        let reparsed: RatPoly = printed.parse().unwrap();
        assert_eq!(reparsed, f);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!("".parse::<RatPoly>().is_err());
        assert!("x0".parse::<RatPoly>().is_err());
        assert!("x1 +".parse::<RatPoly>().is_err());
        assert!("[x1 x2]".parse::<RatPoly>().is_err());
        assert!("1/0".parse::<RatPoly>().is_err());
        assert!("x1)".parse::<RatPoly>().is_err());
    }
}
