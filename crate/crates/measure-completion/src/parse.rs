//! Parser for interval-set literals.
//!
//! Grammar:
//!
//! ```text
//! setexpr  := "∅" | term ("∪" term)*
//! term     := "[" rational "," rational ")"
//! rational := integer "/" positive-integer | integer
//! ```
//!
//! ASCII spellings are accepted: `U` for `∪` and `empty` for `∅`.
//! Whitespace is insignificant. The parsed set is normalized, so printing
//! with [`IntervalSet`]'s `Display` and re-parsing round-trips.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::rational::Rational;

pub fn parse_setexpr(text: &str) -> Result<IntervalSet> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.eat("∅") || p.eat("empty") {
        p.skip_ws();
        return if p.at_end() {
            Ok(IntervalSet::empty())
        } else {
            Err(p.error("unexpected input after the empty set"))
        };
    }
    let mut pairs = vec![p.term()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !(p.eat("∪") || p.eat("U")) {
            return Err(p.error("expected '∪' between terms"));
        }
        pairs.push(p.term()?);
    }
    IntervalSet::from_endpoints(pairs)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn term(&mut self) -> Result<(Rational, Rational)> {
        self.expect("[")?;
        let lo = self.rational()?;
        self.expect(",")?;
        let hi = self.rational()?;
        self.expect(")")?;
        Ok((lo, hi))
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.integer()?;
        self.skip_ws();
        if self.eat("/") {
            let denom_pos = self.pos;
            let denom = self.integer()?;
            if denom <= BigInt::from(0) {
                return Err(Error::Parse {
                    pos: denom_pos,
                    msg: "denominator must be a positive integer".to_string(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::new(numer, 1))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let _ = self.eat("-");
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += digits;
        Ok(self.src[start..self.pos]
            .parse()
            .expect("scanned digits parse as an integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_unions() {
        let s = parse_setexpr("[0,1/2) U [2/3,1)").unwrap();
        assert_eq!(s.parts().len(), 2);
        assert_eq!(s.measure(), Rational::ratio(5, 6));
        let same = parse_setexpr(" [ 0 , 1/2 ) ∪ [ 2/3 , 1 ) ").unwrap();
        assert_eq!(same, s);
    }

    #[test]
    fn parses_empty_forms() {
        assert!(parse_setexpr("empty").unwrap().is_empty());
        assert!(parse_setexpr(" ∅ ").unwrap().is_empty());
    }

    #[test]
    fn normalizes_while_parsing() {
        let s = parse_setexpr("[1/4,3/4) U [0,1/2)").unwrap();
        assert_eq!(s.parts().len(), 1);
        assert_eq!(s.to_string(), "[0,3/4)");
    }

    #[test]
    fn reversed_bounds_are_malformed_not_parse_errors() {
        let out = parse_setexpr("[1/2,1/3)");
        assert!(matches!(out, Err(Error::MalformedInterval { .. })));
    }

    #[test]
    fn reports_positions() {
        match parse_setexpr("[0,1/2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_setexpr("[0,x)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_setexpr("[0,1/2) [1/2,1)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_setexpr("[1/2,2/0)"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for text in ["∅", "[0,1)", "[0,1/8) ∪ [1/4,1/2) ∪ [5/6,1)"] {
            let parsed = parse_setexpr(text).unwrap();
            let reparsed = parse_setexpr(&parsed.to_string()).unwrap();
            assert_eq!(parsed, reparsed);
        }
    }
}
