use super::qfield::QField;
use super::ScalarError;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Variables carrying Laurent-monomial exponents over the `s`-field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    A1,
    A2,
    Xi,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A => write!(f, "a"),
            Var::A1 => write!(f, "a1"),
            Var::A2 => write!(f, "a2"),
            Var::Xi => write!(f, "xi"),
        }
    }
}

/// Monomial in `a, a1, a2, xi`. Exponents of `a`, `a1`, `a2` are stored in
/// half units so framing factors like `a^(1/2)` are exact; `xi` exponents
/// are whole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono {
    pub a_half: i64,
    pub a1_half: i64,
    pub a2_half: i64,
    pub xi: i64,
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn is_one(&self) -> bool {
        *self == Mono::default()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono {
            a_half: self.a_half + other.a_half,
            a1_half: self.a1_half + other.a1_half,
            a2_half: self.a2_half + other.a2_half,
            xi: self.xi + other.xi,
        }
    }

    fn inv(&self) -> Mono {
        Mono {
            a_half: -self.a_half,
            a1_half: -self.a1_half,
            a2_half: -self.a2_half,
            xi: -self.xi,
        }
    }

    fn exponent_half(&self, v: Var) -> i64 {
        match v {
            Var::A => self.a_half,
            Var::A1 => self.a1_half,
            Var::A2 => self.a2_half,
            Var::Xi => 2 * self.xi,
        }
    }

    fn clear(&self, v: Var) -> Mono {
        let mut m = *self;
        match v {
            Var::A => m.a_half = 0,
            Var::A1 => m.a1_half = 0,
            Var::A2 => m.a2_half = 0,
            Var::Xi => m.xi = 0,
        }
        m
    }

    fn write_var(f: &mut fmt::Formatter<'_>, name: &str, half: i64) -> fmt::Result {
        if half == 0 {
            return Ok(());
        }
        if half == 2 {
            write!(f, "*{}", name)
        } else if half % 2 == 0 {
            write!(f, "*{}^{}", name, half / 2)
        } else {
            write!(f, "*{}^({}/2)", name, half)
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        write!(f, "1")?;
        Mono::write_var(f, "a", self.a_half)?;
        Mono::write_var(f, "a1", self.a1_half)?;
        Mono::write_var(f, "a2", self.a2_half)?;
        Mono::write_var(f, "xi", 2 * self.xi)?;
        Ok(())
    }
}

/// Element of the coefficient ring: a finitely supported map from Laurent
/// monomials in `a, a1, a2, xi` to `QField` values. Zero coefficients are
/// never stored, so the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    terms: BTreeMap<Mono, QField>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_qfield(QField::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_qfield(QField::from_int(n))
    }

    pub fn rational(p: i64, q: i64) -> Self {
        Scalar::from_qfield(QField::rational(p, q))
    }

    pub fn from_qfield(c: QField) -> Self {
        Scalar::term(Mono::one(), c)
    }

    pub fn term(m: Mono, c: QField) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    /// `s^k` as a scalar.
    pub fn s_pow(k: i64) -> Self {
        Scalar::from_qfield(QField::s_pow(k))
    }

    /// `q^(h/2)` with `h` in half units of `q`.
    pub fn q_half_pow(h: i64) -> Self {
        Scalar::from_qfield(QField::q_half_pow(h))
    }

    /// `z = s - s^(-1)`.
    pub fn z() -> Self {
        Scalar::from_qfield(QField::z())
    }

    /// `v^(half/2)`, e.g. `var_half_pow(Var::A, 2)` is `a` itself.
    pub fn var_half_pow(v: Var, half: i64) -> Self {
        let mut m = Mono::one();
        match v {
            Var::A => m.a_half = half,
            Var::A1 => m.a1_half = half,
            Var::A2 => m.a2_half = half,
            Var::Xi => {
                assert!(half % 2 == 0, "xi carries integer exponents only");
                m.xi = half / 2;
            }
        }
        Scalar::term(m, QField::one())
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        Scalar::var_half_pow(v, 2 * e)
    }

    pub fn var(v: Var) -> Self {
        Scalar::var_pow(v, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &QField)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The `QField` coefficient of the unit monomial.
    pub fn constant_part(&self) -> QField {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(QField::zero)
    }

    /// If the scalar is a pure `QField` value (no variables), return it.
    pub fn as_qfield(&self) -> Option<QField> {
        if self.terms.is_empty() {
            return Some(QField::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_add(terms: &mut BTreeMap<Mono, QField>, m: Mono, c: QField) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &QField) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse of a single-term scalar.
    pub fn try_inverse(&self) -> Result<Scalar, ScalarError> {
        if self.terms.len() != 1 {
            return Err(ScalarError::NonMonomialDivisor(self.to_string()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Ok(Scalar::term(m.inv(), c.inverse()))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute scalars for variables. Substituted values must be
    /// single-term scalars; a half-integer exponent additionally requires
    /// the value to have an exact monomial square root.
    pub fn specialize(&self, bindings: &[(Var, Scalar)]) -> Result<Scalar, ScalarError> {
        let mut out = self.clone();
        for (v, val) in bindings {
            out = out.specialize_one(*v, val)?;
        }
        Ok(out)
    }

    fn specialize_one(&self, v: Var, val: &Scalar) -> Result<Scalar, ScalarError> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let h = m.exponent_half(v);
            let rest = Scalar::term(m.clear(v), c.clone());
            let powed = if h == 0 {
                Scalar::one()
            } else if h % 2 == 0 {
                let e = h / 2;
                if e >= 0 {
                    val.pow(e as u32)
                } else {
                    val.try_inverse()
                        .map_err(|_| ScalarError::DivisionByZero(val.to_string()))?
                        .pow((-e) as u32)
                }
            } else {
                let root = val.monomial_sqrt().ok_or(ScalarError::NoSquareRoot {
                    var: v,
                    value: val.to_string(),
                })?;
                if h >= 0 {
                    root.pow(h as u32)
                } else {
                    root.try_inverse()
                        .map_err(|_| ScalarError::DivisionByZero(val.to_string()))?
                        .pow((-h) as u32)
                }
            };
            out = &out + &(&rest * &powed);
        }
        Ok(out)
    }

    /// Exact square root of a single-term scalar with even variable
    /// exponents and a square `QField` monomial coefficient.
    pub fn monomial_sqrt(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.a_half % 2 != 0 || m.a1_half % 2 != 0 || m.a2_half % 2 != 0 || m.xi % 2 != 0 {
            return None;
        }
        let half = Mono {
            a_half: m.a_half / 2,
            a1_half: m.a1_half / 2,
            a2_half: m.a2_half / 2,
            xi: m.xi / 2,
        };
        Some(Scalar::term(half, c.monomial_sqrt()?))
    }

    /// Restrict to terms with the given `xi` exponent, dropping the
    /// `xi` factor from the result.
    pub fn xi_component(&self, d: i64) -> Scalar {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.xi == d {
                let mut m2 = *m;
                m2.xi = 0;
                terms.insert(m2, c.clone());
            }
        }
        Scalar { terms }
    }

    /// True if every term carries `xi` exponent exactly `d`.
    pub fn is_xi_homogeneous(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.xi == d)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Scalar::insert_add(&mut terms, *m, c.clone());
        }
        Scalar { terms }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Scalar::insert_add(&mut terms, *m, -c.clone());
        }
        Scalar { terms }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                Scalar::insert_add(&mut terms, m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Scalar { terms }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", c, m)?;
            }
        }
        Ok(())
    }
}
