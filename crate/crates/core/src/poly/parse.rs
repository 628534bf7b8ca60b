//! Text syntax for polynomials.
//!
//! ```text
//! poly := term ('+' term)*
//! term := '1' | 'x' | 'x' '^' uint
//! ```
//!
//! Whitespace is ignored and repeated terms cancel. `0b...` and `0x...`
//! literals give the coefficients most significant bit first. A lone `0`
//! is the zero polynomial.

use std::str::FromStr;

use super::Poly;
use crate::error::Error;

/// Exponents above this are rejected while parsing.
const MAX_EXPONENT: usize = u32::MAX as usize;

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn parse_literal(digits: &[(usize, char)], radix: u32, start: usize) -> Result<Poly, Error> {
    if digits.is_empty() {
        return Err(err(start, "literal has no digits"));
    }
    let bits_per_digit = if radix == 16 { 4 } else { 1 };
    let mut words = vec![0u64; (digits.len() * bits_per_digit) / 64 + 1];
    for (k, &(pos, c)) in digits.iter().rev().enumerate() {
        let v = c
            .to_digit(radix)
            .ok_or_else(|| err(pos, format!("'{c}' is not a base-{radix} digit")))? as u64;
        let bit = k * bits_per_digit;
        words[bit / 64] |= v << (bit % 64);
    }
    Ok(Poly::from_words(words))
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        if chars.len() >= 2 && chars[0].1 == '0' {
            match chars[1].1 {
                'x' | 'X' => return parse_literal(&chars[2..], 16, chars[1].0 + 1),
                'b' | 'B' => return parse_literal(&chars[2..], 2, chars[1].0 + 1),
                _ => {}
            }
        }
        if chars.len() == 1 && chars[0].1 == '0' {
            return Ok(Poly::zero());
        }

        let mut exps = Vec::new();
        let mut i = 0;
        loop {
            let Some(&(pos, c)) = chars.get(i) else {
                return Err(err(text.len(), "expected a term"));
            };
            match c {
                '1' => {
                    exps.push(0);
                    i += 1;
                }
                'x' => {
                    i += 1;
                    if chars.get(i).map(|&(_, c)| c) == Some('^') {
                        i += 1;
                        let start = i;
                        while chars.get(i).is_some_and(|(_, c)| c.is_ascii_digit()) {
                            i += 1;
                        }
                        if start == i {
                            let at = chars.get(i).map_or(text.len(), |&(p, _)| p);
                            return Err(err(at, "expected an exponent after '^'"));
                        }
                        let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                        let e: usize = digits
                            .parse()
                            .ok()
                            .filter(|&e| e <= MAX_EXPONENT)
                            .ok_or_else(|| err(chars[start].0, format!("exponent {digits} is too large")))?;
                        exps.push(e);
                    } else {
                        exps.push(1);
                    }
                }
                _ => return Err(err(pos, format!("unexpected '{c}', expected '1' or 'x'"))),
            }
            match chars.get(i) {
                None => break,
                Some(&(_, '+')) => i += 1,
                Some(&(pos, c)) => return Err(err(pos, format!("unexpected '{c}', expected '+'"))),
            }
        }
        Ok(Poly::from_exponents(exps))
    }
}
