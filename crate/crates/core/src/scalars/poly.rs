use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense integer polynomial in `s`, lowest degree first, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ZPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        ZPoly::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn from_big(c: BigInt) -> Self {
        ZPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    /// The monomial `c * s^k` for `k >= 0`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        ZPoly::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Largest `k` with `s^k` dividing `self`; 0 for the zero polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Quotient by `s^k`; panics unless `s^k` divides `self`.
    pub fn unshift(&self, k: usize) -> Self {
        if self.is_zero() {
            return ZPoly::zero();
        }
        assert!(self.low_order() >= k, "unshift of a poly not divisible by s^k");
        ZPoly::from_coeffs(self.coeffs[k..].to_vec())
    }

    /// gcd of all integer coefficients (nonnegative); 0 for the zero poly.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division by an integer; panics if any coefficient is not divisible.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero());
        ZPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "non-exact integer division of polynomial");
                    q
                })
                .collect(),
        )
    }

    /// Pseudo-remainder: repeatedly cancels the leading term of `self`
    /// against `other` after scaling by the leading coefficient of `other`.
    fn pseudo_rem(&self, other: &ZPoly) -> ZPoly {
        assert!(!other.is_zero());
        let d = other.degree();
        let lc = other.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let rl = r.leading();
            r = r.scale(&lc) - other.shift(k).scale(&rl);
        }
        r
    }

    /// True when the polynomial is a single term `c * s^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// Primitive gcd via the primitive polynomial remainder sequence, with
    /// a fast path for monomial arguments (the common case: denominators
    /// here are almost always powers of `s`). Result is primitive with
    /// positive leading coefficient (or zero).
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.is_monomial() || b.is_monomial() {
            let k = a.low_order().min(b.low_order());
            return ZPoly::monomial(1, k);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// `self` divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_int_exact(&c)
    }

    /// Exact polynomial division; panics if `other` does not divide `self`.
    pub fn div_exact(&self, other: &ZPoly) -> ZPoly {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return ZPoly::zero();
        }
        let d = other.degree();
        assert!(self.degree() >= d, "non-exact polynomial division");
        let lc = other.leading();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.degree() - d + 1];
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let (c, rem) = r.leading().div_rem(&lc);
            assert!(rem.is_zero(), "non-exact polynomial division");
            q[k] = c.clone();
            r = r - other.shift(k).scale(&c);
            if r.degree() < d && !r.is_zero() {
                break;
            }
        }
        assert!(r.is_zero(), "non-exact polynomial division");
        ZPoly::from_coeffs(q)
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `s -> s^-1` and clear denominators: returns `(p', k)` with
    /// `p(1/s) = p'(s) / s^k`.
    pub fn reverse(&self) -> (ZPoly, usize) {
        if self.is_zero() {
            return (ZPoly::zero(), 0);
        }
        let k = self.degree();
        let coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        (ZPoly::from_coeffs(coeffs), k)
    }
}

impl Add for ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: ZPoly) -> ZPoly {
        &self + &rhs
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Sub for ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: ZPoly) -> ZPoly {
        &self - &rhs
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Mul for ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: ZPoly) -> ZPoly {
        &self * &rhs
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if k == 1 {
                    write!(f, "s")?;
                } else {
                    write!(f, "s^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_quantum_brackets() {
        // s^4 - 1 and s^6 - 1 have gcd s^2 - 1
        let a = ZPoly::monomial(1, 4) - ZPoly::one();
        let b = ZPoly::monomial(1, 6) - ZPoly::one();
        let g = a.gcd(&b);
        assert_eq!(g, ZPoly::monomial(1, 2) - ZPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = ZPoly::monomial(1, 6) - ZPoly::one();
        let b = ZPoly::monomial(1, 2) - ZPoly::one();
        let q = a.div_exact(&b);
        assert_eq!(q, ZPoly::from_coeffs(vec![1.into(), 0.into(), 1.into(), 0.into(), 1.into()]));
    }

    #[test]
    fn gcd_sign_normalization() {
        let a = ZPoly::from_coeffs(vec![BigInt::from(-2), BigInt::from(2)]);
        let g = a.gcd(&a);
        assert_eq!(g, ZPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)]));
        assert!(g.leading() > BigInt::zero());
    }
}
