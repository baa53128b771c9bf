//! Textual polynomial input and output.
//!
//! Accepted forms:
//!   - expression strings in one variable with integer or fraction
//!     literals and `^` powers, e.g. `x^8 - 4x^7 + 3/2` or `128/25*x^5`;
//!   - `@path` references to a JSON array of coefficient strings, highest
//!     degree first, e.g. `["1", "-4", "0", "3/2"]`.
//!
//! Printing produces an expression string that parses back to the same
//! polynomial.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use recsubres::{Poly, Rational};

/// Parses either an expression string or an `@file` coefficient array.
pub fn parse_input(text: &str) -> Result<Poly, String> {
    if let Some(path) = text.strip_prefix('@') {
        let body = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read polynomial file {path}: {e}"))?;
        return parse_coeff_json(&body);
    }
    parse_expr(text)
}

/// Parses a JSON array of coefficient strings, highest degree first.
pub fn parse_coeff_json(body: &str) -> Result<Poly, String> {
    let raw: Vec<String> = serde_json::from_str(body)
        .map_err(|e| format!("coefficient file must be a JSON array of strings: {e}"))?;
    let mut coeffs = Vec::with_capacity(raw.len());
    for (idx, s) in raw.iter().enumerate() {
        let c = Rational::from_str(s.trim())
            .map_err(|e| format!("bad coefficient {s:?} at position {idx}: {e}"))?;
        coeffs.push(c);
    }
    coeffs.reverse();
    Ok(Poly::new(coeffs))
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.chars.next()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let mut text = String::new();
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            text.push(self.bump().expect("digit"));
        }
        if text.is_empty() {
            None
        } else {
            Some(BigInt::from_str(&text).expect("digits form an integer"))
        }
    }

    fn ident(&mut self) -> Option<String> {
        let mut name = String::new();
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            name.push(self.bump().expect("ident char"));
        }
        if name.is_empty() {
            None
        } else {
            Some(name)
        }
    }
}

/// Parses a sum-of-monomials expression in a single variable.
pub fn parse_expr(text: &str) -> Result<Poly, String> {
    let mut sc = Scanner::new(text);
    let mut var: Option<String> = None;
    let mut acc = Poly::zero();
    let mut first = true;
    loop {
        sc.skip_ws();
        if sc.peek().is_none() {
            if first {
                return Err("empty polynomial expression".into());
            }
            break;
        }
        // sign
        let mut negative = false;
        let mut saw_sign = false;
        while let Some(c) = sc.peek() {
            match c {
                '+' => {
                    sc.bump();
                    saw_sign = true;
                }
                '-' => {
                    sc.bump();
                    negative = !negative;
                    saw_sign = true;
                }
                c if c.is_whitespace() => {
                    sc.bump();
                }
                _ => break,
            }
        }
        if !first && !saw_sign {
            return Err(format!("expected '+' or '-' before {:?}", sc.peek()));
        }
        sc.skip_ws();
        // coefficient
        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if sc.peek().is_some_and(|c| c.is_ascii_digit()) {
            let numer = sc.digits().expect("digit checked");
            let mut denom = BigInt::one();
            if sc.peek() == Some('/') {
                sc.bump();
                denom = sc
                    .digits()
                    .ok_or_else(|| "expected digits after '/'".to_string())?;
                if denom.is_zero() {
                    return Err("zero denominator in coefficient".into());
                }
            }
            coeff = Rational::new(numer, denom);
            have_coeff = true;
            sc.skip_ws();
            if sc.peek() == Some('*') {
                sc.bump();
                sc.skip_ws();
            }
        }
        // variable part
        let mut power = 0usize;
        if sc.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            let name = sc.ident().expect("ident checked");
            match &var {
                None => var = Some(name),
                Some(v) if *v == name => {}
                Some(v) => {
                    return Err(format!(
                        "polynomial must use a single variable: found {v:?} and {name:?}"
                    ))
                }
            }
            power = 1;
            sc.skip_ws();
            if sc.peek() == Some('^') {
                sc.bump();
                sc.skip_ws();
                let e = sc
                    .digits()
                    .ok_or_else(|| "expected an integer exponent after '^'".to_string())?;
                power = u32::try_from(&e).map_err(|_| "exponent too large".to_string())? as usize;
            }
        } else if !have_coeff {
            return Err(format!(
                "expected a coefficient or variable, found {:?}",
                sc.peek()
            ));
        }
        if negative {
            coeff = -coeff;
        }
        acc = &acc + &Poly::monomial(coeff, power);
        first = false;
    }
    Ok(acc)
}

/// Renders a polynomial as an expression string that [`parse_expr`] maps
/// back to the same value.
pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let deg = p.degree().finite().expect("nonzero");
    let mut out = String::new();
    for power in (0..=deg).rev() {
        let c = p.coeff(power);
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = c.abs();
        let show_coeff = power == 0 || !abs.is_one();
        if show_coeff {
            out.push_str(&abs.to_string());
        }
        if power > 0 {
            if show_coeff {
                out.push('*');
            }
            out.push('x');
            if power > 1 {
                out.push_str(&format!("^{power}"));
            }
        }
    }
    out
}
