use super::{Scalar, ScalarError, Var};

/// Parser for the plain-text scalar grammar used by renders and CLI inputs:
/// sums and products of integers, `s`, `a`, `a1`, `a2`, `xi`, with `^`
/// exponents that are integers or halves like `(3/2)`, and parentheses.
pub fn parse_scalar(input: &str) -> Result<Scalar, ScalarError> {
    let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                acc = divide(&acc, &d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let half = self.exponent_half()?;
            return pow_half(&base, half).ok_or_else(|| {
                ScalarError::NonMonomialDivisor(format!("{} ^ ({}/2)", base, half))
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::from_int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric())
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match name {
                    "s" => Ok(Scalar::s_pow(1)),
                    "q" => Ok(Scalar::s_pow(2)),
                    "z" => Ok(Scalar::z()),
                    "a" => Ok(Scalar::var(Var::A)),
                    "a1" => Ok(Scalar::var(Var::A1)),
                    "a2" => Ok(Scalar::var(Var::A2)),
                    "xi" => Ok(Scalar::var(Var::Xi)),
                    _ => Err(self.err("unknown variable")),
                }
            }
            _ => Err(self.err("expected a value")),
        }
    }

    /// Exponent in half units: `3` -> 6, `-2` -> -4, `(3/2)` -> 3.
    fn exponent_half(&mut self) -> Result<i64, ScalarError> {
        if self.eat(b'(') {
            let sign = if self.eat(b'-') { -1 } else { 1 };
            let n = self.integer()?;
            let half = if self.eat(b'/') {
                let d = self.integer()?;
                if d != 2 {
                    return Err(self.err("only halves allowed in exponents"));
                }
                n
            } else {
                2 * n
            };
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(sign * half)
        } else {
            let sign = if self.eat(b'-') { -1 } else { 1 };
            let n = self.integer()?;
            Ok(sign * 2 * n)
        }
    }

    fn integer(&mut self) -> Result<i64, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }
}

fn divide(x: &Scalar, d: &Scalar) -> Result<Scalar, ScalarError> {
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero(d.to_string()));
    }
    if let Some(c) = d.as_qfield() {
        return Ok(x.scale(&c.inverse()));
    }
    Ok(x * &d.try_inverse()?)
}

/// `base^(half/2)`; integer powers work for any single-term or pure-field
/// base, half powers need an exact monomial square root.
fn pow_half(base: &Scalar, half: i64) -> Option<Scalar> {
    if half % 2 == 0 {
        let e = half / 2;
        if e >= 0 {
            return Some(base.pow(e as u32));
        }
        let inv = if let Some(c) = base.as_qfield() {
            if c.is_zero() {
                return None;
            }
            Scalar::from_qfield(c.inverse())
        } else {
            base.try_inverse().ok()?
        };
        return Some(inv.pow((-e) as u32));
    }
    let root = base.monomial_sqrt()?;
    pow_half(&root, 2 * half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QField;

    #[test]
    fn parses_unknot_form() {
        let v = parse_scalar("(a - a^-1)/(s - s^-1)").unwrap();
        let expect = (Scalar::var(Var::A) - Scalar::var_pow(Var::A, -1))
            .scale(&QField::z().inverse());
        assert_eq!(v, expect);
    }

    #[test]
    fn parses_halves_and_q() {
        let v = parse_scalar("a^(1/2) * a^(1/2)").unwrap();
        assert_eq!(v, Scalar::var(Var::A));
        let v = parse_scalar("q^(1/2)").unwrap();
        assert_eq!(v, Scalar::s_pow(1));
        let v = parse_scalar("a^(-3/2)").unwrap();
        assert_eq!(v, Scalar::var_half_pow(Var::A, -3));
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            "(a - a^-1)/(s - s^-1)",
            "1/2 * xi^2 * a1^(1/2) - 3*s^4/(s^2 - 1)",
            "a1*a2 + q - q^-1 + xi",
            "0",
        ];
        for src in samples {
            let v = parse_scalar(src).unwrap();
            let rendered = v.to_string();
            let back = parse_scalar(&rendered).unwrap();
            assert_eq!(v, back, "render {rendered:?} of {src:?} did not round-trip");
        }
    }

    #[test]
    fn random_scalars_round_trip() {
        use crate::scalars::Mono;
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..60 {
            let mut v = Scalar::zero();
            for _ in 0..rng.gen_range(0..4) {
                let m = Mono {
                    a_half: rng.gen_range(-5..=5),
                    a1_half: rng.gen_range(-3..=3),
                    a2_half: rng.gen_range(-3..=3),
                    xi: rng.gen_range(-2..=2),
                };
                let c = QField::brace(rng.gen_range(1..4))
                    * QField::rational(rng.gen_range(-4..=4), rng.gen_range(1..4))
                    * QField::s_pow(rng.gen_range(-4..=4));
                v = &v + &Scalar::term(m, c);
            }
            let rendered = v.to_string();
            let back = parse_scalar(&rendered).unwrap();
            assert_eq!(v, back, "round trip failed for {rendered}");
        }
    }

    #[test]
    fn division_errors() {
        assert!(parse_scalar("1/(a + a1)").is_err());
        assert!(parse_scalar("1/0").is_err());
    }
}
