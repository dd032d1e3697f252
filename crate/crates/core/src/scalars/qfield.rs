use super::poly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A rational function in `s = q^(1/2)` with integer-polynomial numerator
/// and denominator, kept reduced: the denominator is nonzero with positive
/// leading coefficient, numerator and denominator share no polynomial
/// factor, and the integer content of the pair is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QField {
    num: ZPoly,
    den: ZPoly,
}

impl QField {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "QField with zero denominator");
        let mut q = QField { num, den };
        q.reduce();
        q
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = ZPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_zero() && g != ZPoly::one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        // overall integer content 1, denominator leading coefficient > 0
        let mut c = self.num.content().gcd(&self.den.content());
        if self.den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            self.num = self.num.div_int_exact(&c);
            self.den = self.den.div_int_exact(&c);
        }
    }

    pub fn zero() -> Self {
        QField { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        QField { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        QField { num: ZPoly::constant(n), den: ZPoly::one() }
    }

    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0);
        QField::new(ZPoly::constant(p), ZPoly::constant(q))
    }

    pub fn from_poly(p: ZPoly) -> Self {
        QField { num: p, den: ZPoly::one() }
    }

    /// `s^k` for any integer `k` (negative powers become denominators).
    pub fn s_pow(k: i64) -> Self {
        if k >= 0 {
            QField { num: ZPoly::monomial(1, k as usize), den: ZPoly::one() }
        } else {
            QField { num: ZPoly::one(), den: ZPoly::monomial(1, (-k) as usize) }
        }
    }

    /// `q^(h/2)` where `h` is given in half units of `q`, i.e. `s^h`.
    pub fn q_half_pow(h: i64) -> Self {
        QField::s_pow(h)
    }

    /// The quantum bracket `{n} = s^n - s^(-n)`.
    pub fn brace(n: i64) -> Self {
        QField::s_pow(n) - QField::s_pow(-n)
    }

    /// `z = s - s^(-1)`.
    pub fn z() -> Self {
        QField::brace(1)
    }

    /// The quantum integer `[n] = {n}/{1}`; always a Laurent polynomial.
    pub fn quantum_integer(n: i64) -> Self {
        if n == 0 {
            return QField::zero();
        }
        let m = n.unsigned_abs() as i64;
        // [m] = s^(m-1) + s^(m-3) + ... + s^(1-m)
        let mut acc = QField::zero();
        let mut e = 1 - m;
        while e <= m - 1 {
            acc = acc + QField::s_pow(e);
            e += 2;
        }
        if n < 0 {
            acc = -acc;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == ZPoly::one() && self.den == ZPoly::one()
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    pub fn inverse(&self) -> QField {
        assert!(!self.is_zero(), "inverse of zero");
        QField::new(self.den.clone(), self.num.clone())
    }

    /// Substitute `s -> s^-1`. Exact: `f(1/s)` as a reduced fraction.
    pub fn bar(&self) -> QField {
        let (n, kn) = self.num.reverse();
        let (d, kd) = self.den.reverse();
        // f(1/s) = (n/s^kn)/(d/s^kd) = n*s^kd / (d*s^kn)
        QField::new(n.shift(kd), d.shift(kn))
    }

    /// True if the value is a single term `(p/q) * s^k`.
    pub fn is_monomial(&self) -> bool {
        self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && self.den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// For a monomial `(p/q) s^k`, return `(p, q, k)`.
    pub fn as_monomial(&self) -> Option<(BigInt, BigInt, i64)> {
        if !self.is_monomial() || self.is_zero() {
            return None;
        }
        let kn = self.num.low_order();
        let kd = self.den.low_order();
        Some((
            self.num.coeff(kn),
            self.den.coeff(kd),
            kn as i64 - kd as i64,
        ))
    }

    /// Square root of a monomial `c * s^(2k)` with `c` a perfect rational
    /// square; returns the positive root.
    pub fn monomial_sqrt(&self) -> Option<QField> {
        let (p, q, k) = self.as_monomial()?;
        if k % 2 != 0 || p.is_negative() {
            return None;
        }
        let ps = p.sqrt();
        let qs = q.sqrt();
        if &ps * &ps != p || &qs * &qs != q {
            return None;
        }
        Some(
            QField::new(ZPoly::from_big(ps), ZPoly::from_big(qs)) * QField::s_pow(k / 2),
        )
    }

    pub fn pow(&self, e: i64) -> QField {
        if e == 0 {
            return QField::one();
        }
        let base = if e > 0 { self.clone() } else { self.inverse() };
        let mut acc = QField::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }
}

impl Add for QField {
    type Output = QField;
    fn add(self, rhs: QField) -> QField {
        QField::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for QField {
    type Output = QField;
    fn sub(self, rhs: QField) -> QField {
        QField::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for QField {
    type Output = QField;
    fn neg(self) -> QField {
        QField { num: -self.num, den: self.den }
    }
}

impl Mul for QField {
    type Output = QField;
    fn mul(self, rhs: QField) -> QField {
        // cross-cancel before multiplying to keep intermediates small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_zero() || g1 == ZPoly::one() {
            (self.num, rhs.den)
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_zero() || g2 == ZPoly::one() {
            (rhs.num, self.den)
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        QField::new(&a * &c, &b * &d)
    }
}

impl Div for QField {
    type Output = QField;
    fn div(self, rhs: QField) -> QField {
        assert!(!rhs.is_zero(), "division by zero");
        self * rhs.inverse()
    }
}

impl fmt::Display for QField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == ZPoly::one() {
            if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brace_and_quantum_integer() {
        // {2} = s^2 - s^-2, [2] = s + s^-1, and {2} = z*[2]
        let b2 = QField::brace(2);
        let i2 = QField::quantum_integer(2);
        assert_eq!(b2, QField::z() * i2.clone());
        assert_eq!(i2, QField::s_pow(1) + QField::s_pow(-1));
    }

    #[test]
    fn quantum_integer_division() {
        // [3] = {3}/{1} = s^2 + 1 + s^-2
        let i3 = QField::brace(3) / QField::brace(1);
        assert_eq!(i3, QField::quantum_integer(3));
        assert_eq!(
            i3,
            QField::s_pow(2) + QField::one() + QField::s_pow(-2)
        );
    }

    #[test]
    fn negative_and_zero() {
        assert_eq!(QField::brace(-3), -QField::brace(3));
        assert!(QField::brace(0).is_zero());
        assert!(QField::quantum_integer(0).is_zero());
        assert_eq!(QField::quantum_integer(-2), -QField::quantum_integer(2));
    }

    #[test]
    fn canonical_rational_content() {
        // 2/4 reduces to 1/2
        let half = QField::rational(2, 4);
        assert_eq!(half, QField::rational(1, 2));
        // half + half = 1
        assert!(
            (half.clone() + half).is_one()
        );
    }

    #[test]
    fn bar_involution() {
        let x = QField::brace(3) / QField::brace(2) + QField::s_pow(5);
        assert_eq!(x.bar().bar(), x);
        // {n} is antisymmetric under s -> 1/s
        assert_eq!(QField::brace(4).bar(), -QField::brace(4));
    }

    #[test]
    fn monomial_sqrt() {
        let x = QField::rational(9, 4) * QField::s_pow(6);
        let r = x.monomial_sqrt().unwrap();
        assert_eq!(r, QField::rational(3, 2) * QField::s_pow(3));
        assert!(QField::s_pow(3).monomial_sqrt().is_none());
        assert!((QField::s_pow(2) + QField::one()).monomial_sqrt().is_none());
    }
}
