//! The gl(1) specialization: the quantum torus with generators
//! `y x = q x y`, Pochhammer-series dilogarithms, and gl(1) forms of the
//! pentagon and Seiberg-Witten wall-crossing.
//!
//! This is a separate algebra rather than a parameterization of the torus
//! module: under the specialization `P_x P_y` and `P_{x+y}` land in the
//! same monomial class, so normal forms differ structurally.

use crate::reporting::VerificationReport;
use crate::scalars::{QField, Scalar};
use crate::torus::{self, Cone, LatticeVector, TorusElement};
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum QTorusError {
    #[error("class {0:?} outside the cone {1:?}")]
    OutsideCone(LatticeVector, Cone),
    #[error("cone mismatch: {0:?} vs {1:?}")]
    ConeMismatch(Cone, Cone),
    #[error("coefficient of {0:?} is not a pure function of q")]
    NotQCoefficient(String),
}

/// Element of the quantum torus: finitely supported map from `(i,j)` to
/// coefficients, read as `sum c_ij y^i x^j`, truncated by the cone weight.
/// The unit monomial `(0,0)` is always allowed.
#[derive(Debug, Clone)]
pub struct QTElement {
    cone: Cone,
    bound: u32,
    terms: BTreeMap<(i64, i64), QField>,
}

impl PartialEq for QTElement {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone && self.terms == other.terms
    }
}

impl Eq for QTElement {}

impl QTElement {
    pub fn zero(cone: Cone, bound: u32) -> Self {
        QTElement { cone, bound, terms: BTreeMap::new() }
    }

    pub fn unit(cone: Cone, bound: u32) -> Self {
        let mut t = QTElement::zero(cone, bound);
        t.add_term((0, 0), QField::one());
        t
    }

    /// `c * y^i x^j`.
    pub fn monomial(cone: Cone, bound: u32, i: i64, j: i64, c: QField) -> Self {
        let mut t = QTElement::zero(cone, bound);
        t.add_term((i, j), c);
        t
    }

    fn weight_of(&self, key: (i64, i64)) -> Option<u32> {
        if key == (0, 0) {
            return Some(0);
        }
        self.cone.weight(LatticeVector(key.0, key.1))
    }

    pub fn add_term(&mut self, key: (i64, i64), c: QField) {
        if c.is_zero() {
            return;
        }
        match self.weight_of(key) {
            Some(w) if w <= self.bound => {}
            _ => return,
        }
        match self.terms.entry(key) {
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

    pub fn coeff(&self, i: i64, j: i64) -> QField {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(QField::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &QField)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &QTElement) -> QTElement {
        assert_eq!(self.cone, other.cone);
        let mut out = QTElement::zero(self.cone, self.bound.min(other.bound));
        for (k, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QTElement) -> QTElement {
        self.add(&other.scale(&QField::from_int(-1)))
    }

    pub fn scale(&self, c: &QField) -> QTElement {
        let mut out = QTElement::zero(self.cone, self.bound);
        for (k, v) in &self.terms {
            out.add_term(*k, v.clone() * c.clone());
        }
        out
    }

    /// `(y^i x^j)(y^k x^l) = q^(-jk) y^(i+k) x^(j+l)`, extended bilinearly
    /// and truncated.
    pub fn multiply(&self, other: &QTElement) -> Result<QTElement, QTorusError> {
        if self.cone != other.cone {
            return Err(QTorusError::ConeMismatch(self.cone, other.cone));
        }
        let bound = self.bound.min(other.bound);
        let mut out = QTElement::zero(self.cone, bound);
        for (&(i, j), c1) in &self.terms {
            for (&(k, l), c2) in &other.terms {
                let c = c1.clone() * c2.clone() * QField::q_half_pow(-2 * j * k);
                out.add_term((i + k, j + l), c);
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(&(i, j), c)| format!("[{}] y^{} x^{}", c, i, j))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The specialization of a generator: `P_(i,j) -> q^(-ij/2) y^i x^j`.
pub fn specialize_generator(cone: Cone, bound: u32, v: LatticeVector) -> QTElement {
    QTElement::monomial(cone, bound, v.0, v.1, QField::q_half_pow(-v.0 * v.1))
}

/// Multiplicative extension of the specialization to normal-ordered
/// torus elements. Coefficients must be pure functions of `q`.
pub fn specialize_element(x: &TorusElement) -> Result<QTElement, QTorusError> {
    let cone = x.cone();
    let bound = x.bound();
    let mut out = QTElement::zero(cone, bound);
    for (m, c) in x.terms() {
        let c = c
            .as_qfield()
            .ok_or_else(|| QTorusError::NotQCoefficient(format!("{c}")))?;
        let mut acc = QTElement::unit(cone, bound);
        for &v in m {
            acc = acc.multiply(&specialize_generator(cone, bound, v))?;
        }
        for (k, v) in acc.terms {
            out.add_term(k, v * c.clone());
        }
    }
    Ok(out)
}

/// The gl(1) dilogarithm on the ray of `x = (i,j)`: the Pochhammer series
/// `sum_n u^n / ((1-q)...(1-q^n))` with `u = xival q^(1/2 - ij/2) y^i x^j`,
/// truncated by weight.
pub fn gl1_dilog(
    cone: Cone,
    bound: u32,
    x: LatticeVector,
    xival: &QField,
) -> Result<QTElement, QTorusError> {
    let w = cone
        .weight(x)
        .ok_or(QTorusError::OutsideCone(x, cone))?;
    let u = QTElement::monomial(
        cone,
        bound,
        x.0,
        x.1,
        xival.clone() * QField::q_half_pow(1 - x.0 * x.1),
    );
    let mut acc = QTElement::unit(cone, bound);
    let mut upow = QTElement::unit(cone, bound);
    let mut denom = QField::one();
    let mut n = 1u32;
    while n * w <= bound {
        upow = upow.multiply(&u)?;
        denom = denom * (QField::one() - QField::q_half_pow(2 * n as i64));
        acc = acc.add(&upow.scale(&denom.inverse()));
        n += 1;
    }
    Ok(acc)
}

fn ordered_product(factors: &[QTElement]) -> QTElement {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.multiply(f).expect("same cone");
    }
    acc
}

fn class_report(
    identity: &str,
    n: u32,
    lhs: &QTElement,
    rhs: &QTElement,
    started: Instant,
) -> VerificationReport {
    let residual = lhs.sub(rhs);
    let mut keys: std::collections::BTreeSet<(i64, i64)> = std::collections::BTreeSet::new();
    for (k, _) in lhs.terms().chain(rhs.terms()) {
        keys.insert(*k);
    }
    let mut lines = vec![];
    for k in keys {
        let v = residual.coeff(k.0, k.1);
        let ok = v.is_zero();
        lines.push((
            format!("({},{})", k.0, k.1),
            if ok { "0".to_string() } else { v.to_string() },
            ok,
        ));
    }
    VerificationReport::new(identity, n, lines, started)
}

/// gl(1) pentagon:
/// `Psi_(1,0) Psi_(0,1) = Psi_(0,1) Psi_(1,1)[-1] Psi_(1,0)` under the
/// Pochhammer realization, checked through weight `n`. Also asserts that
/// each factor agrees with the specialized torus dilogarithm.
pub fn verify_gl1_pentagon(n: u32) -> VerificationReport {
    let started = Instant::now();
    let cone = Cone::FirstQuadrant;
    let one = QField::one();
    let minus = QField::from_int(-1);
    let psi10 = gl1_dilog(cone, n, LatticeVector(1, 0), &one).unwrap();
    let psi01 = gl1_dilog(cone, n, LatticeVector(0, 1), &one).unwrap();
    let middle = gl1_dilog(cone, n, LatticeVector(1, 1), &minus).unwrap();
    let lhs = ordered_product(&[psi10.clone(), psi01.clone()]);
    let rhs = ordered_product(&[psi01, middle, psi10]);
    let mut report = class_report("gl1-pentagon", n, &lhs, &rhs, started);
    // cross-check: Pochhammer series equals the specialized torus dilog
    for (v, xi) in [
        (LatticeVector(1, 0), one.clone()),
        (LatticeVector(0, 1), one.clone()),
        (LatticeVector(1, 1), minus),
    ] {
        let torus_side = torus::dilog_element(cone, n, v, &Scalar::from_qfield(xi.clone()))
            .unwrap();
        let specialized = specialize_element(&torus_side).unwrap();
        let direct = gl1_dilog(cone, n, v, &xi).unwrap();
        let ok = specialized == direct;
        report.residuals.push(crate::reporting::ResidualLine {
            class: format!("poch-vs-torus ({},{})", v.0, v.1),
            value: if ok {
                "0".into()
            } else {
                specialized.sub(&direct).render()
            },
        });
        if !ok {
            report.verdict = crate::reporting::Verdict::Falsified;
        }
    }
    report
}

/// `(u; q)_infty` as a truncated series in `u = c x^(2)` powers along the
/// `x` ray: `sum_n (-1)^n q^(n(n-1)/2) u^n / ((1-q)...(1-q^n))`.
fn pochhammer_x_ray(cone: Cone, bound: u32, step: i64, c: QField) -> QTElement {
    let u = QTElement::monomial(cone, bound, 0, step, c);
    let mut acc = QTElement::unit(cone, bound);
    let mut upow = QTElement::unit(cone, bound);
    let mut denom = QField::one();
    let mut n: u32 = 1;
    while (n as i64 * step) <= bound as i64 {
        upow = upow.multiply(&u).expect("same cone");
        denom = denom.clone() * (QField::one() - QField::q_half_pow(2 * n as i64));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let qpow = QField::q_half_pow((n as i64) * (n as i64 - 1));
        acc = acc.add(&upow.scale(
            &(QField::from_int(sign) * qpow * denom.inverse()),
        ));
        n += 1;
    }
    acc
}

/// gl(1) Seiberg-Witten wall-crossing through weight `n`, including the
/// check that the image of the middle factors equals
/// `Phi(q^(1/2) x^2)^-1 Phi(q^(-1/2) x^2)^-1` with
/// `Phi(u) = (q^(1/2) u; q)_infty^-1`.
pub fn verify_gl1_sw(n: u32) -> VerificationReport {
    let started = Instant::now();
    let cone = Cone::UpperWedge;
    let one = QField::one();
    let lhs = ordered_product(&[
        gl1_dilog(cone, n, LatticeVector(1, 1), &one).unwrap(),
        gl1_dilog(cone, n, LatticeVector(-1, 1), &one).unwrap(),
    ]);
    let mut factors = vec![];
    let mut j = 1i64;
    while j <= n as i64 {
        factors.push(gl1_dilog(cone, n, LatticeVector(-1, j), &one).unwrap());
        j += 2;
    }
    let (m10, m01) = torus::sw_middle_factors(cone, n);
    let middle10 = specialize_element(&m10).unwrap();
    let middle01 = specialize_element(&m01).unwrap();
    factors.push(middle10.clone());
    factors.push(middle01.clone());
    let mut j = {
        let mut top = 1i64;
        while top + 2 <= n as i64 {
            top += 2;
        }
        top
    };
    while j >= 1 {
        factors.push(gl1_dilog(cone, n, LatticeVector(1, j), &one).unwrap());
        j -= 2;
    }
    let rhs = ordered_product(&factors);
    let mut report = class_report("gl1-sw-wcf", n, &lhs, &rhs, started);
    // middle factors: Phi(q^(1/2) x^2)^-1 = (q x^2; q)_infty and
    // Phi(q^(-1/2) x^2)^-1 = (x^2; q)_infty
    let phi_a = pochhammer_x_ray(cone, n, 2, QField::s_pow(2));
    let phi_b = pochhammer_x_ray(cone, n, 2, QField::one());
    let image = middle10.multiply(&middle01).unwrap();
    let expect = phi_a.multiply(&phi_b).unwrap();
    let ok = image == expect;
    report.residuals.push(crate::reporting::ResidualLine {
        class: "middle-vs-phi".into(),
        value: if ok { "0".into() } else { image.sub(&expect).render() },
    });
    if !ok {
        report.verdict = crate::reporting::Verdict::Falsified;
    }
    // and factorwise
    let ok10 = middle10 == phi_a;
    let ok01 = middle01 == phi_b;
    report.residuals.push(crate::reporting::ResidualLine {
        class: "middle10-vs-phi".into(),
        value: if ok10 { "0".into() } else { middle10.sub(&phi_a).render() },
    });
    report.residuals.push(crate::reporting::ResidualLine {
        class: "middle01-vs-phi".into(),
        value: if ok01 { "0".into() } else { middle01.sub(&phi_b).render() },
    });
    if !(ok10 && ok01) {
        report.verdict = crate::reporting::Verdict::Falsified;
    }
    report
}

/// Images of `P_x` satisfy `[P_x, P_y] = {det} P_{x+y}` in the quantum
/// torus for the sampled pairs.
pub fn gl1_homomorphism_check(
    pairs: &[(LatticeVector, LatticeVector)],
    bound: u32,
    cone: Cone,
) -> VerificationReport {
    let started = Instant::now();
    let mut lines = vec![];
    for &(x, y) in pairs {
        let px = specialize_generator(cone, bound, x);
        let py = specialize_generator(cone, bound, y);
        let comm = px
            .multiply(&py)
            .unwrap()
            .sub(&py.multiply(&px).unwrap());
        let expect = match torus::bracket(x, y) {
            None => QTElement::zero(cone, bound),
            Some((c, sum)) => specialize_generator(cone, bound, sum).scale(&c),
        };
        let diff = comm.sub(&expect);
        let ok = diff.is_zero();
        lines.push((
            format!("[P({},{}),P({},{})]", x.0, x.1, y.0, y.1),
            if ok { "0".into() } else { diff.render() },
            ok,
        ));
    }
    VerificationReport::new("gl1-homomorphism", bound, lines, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(i: i64, j: i64) -> LatticeVector {
        LatticeVector(i, j)
    }

    #[test]
    fn qt_multiply_examples() {
        let cone = Cone::FirstQuadrant;
        let y = QTElement::monomial(cone, 8, 1, 0, QField::one());
        let x = QTElement::monomial(cone, 8, 0, 1, QField::one());
        // y x is already ordered
        let yx = y.multiply(&x).unwrap();
        assert_eq!(yx.coeff(1, 1), QField::one());
        // x y = q^-1 y x
        let xy = x.multiply(&y).unwrap();
        assert_eq!(xy.coeff(1, 1), QField::q_half_pow(-2));
        // (y x)(y x) = q^-1 y^2 x^2
        let sq = yx.multiply(&yx).unwrap();
        assert_eq!(sq.coeff(2, 2), QField::q_half_pow(-2));
    }

    #[test]
    fn specialize_generator_examples() {
        let cone = Cone::FirstQuadrant;
        let p = specialize_generator(cone, 8, lv(1, 0));
        assert_eq!(p.coeff(1, 0), QField::one());
        let p = specialize_generator(cone, 8, lv(0, 1));
        assert_eq!(p.coeff(0, 1), QField::one());
        let p = specialize_generator(cone, 8, lv(1, 1));
        assert_eq!(p.coeff(1, 1), QField::q_half_pow(-1));
    }

    #[test]
    fn gl1_dilog_first_terms() {
        let cone = Cone::FirstQuadrant;
        // n <= 1 part for x = (0,1), xi = 1: 1 + q^(1/2) x/(1-q)
        let psi = gl1_dilog(cone, 1, lv(0, 1), &QField::one()).unwrap();
        assert_eq!(psi.coeff(0, 0), QField::one());
        assert_eq!(
            psi.coeff(0, 1),
            QField::s_pow(1) * (QField::one() - QField::s_pow(2)).inverse()
        );
        // xi = 0 is the unit
        let psi = gl1_dilog(cone, 4, lv(0, 1), &QField::zero()).unwrap();
        assert_eq!(psi, QTElement::unit(cone, 4));
    }

    #[test]
    fn dilog_functional_equation() {
        // F(u) = (1-u)^-1 F(qu) order by order to weight 8, for the
        // Pochhammer series on the x ray
        let cone = Cone::FirstQuadrant;
        let n = 8;
        let f_u = gl1_dilog(cone, n, lv(0, 1), &QField::one()).unwrap();
        let f_qu = gl1_dilog(cone, n, lv(0, 1), &QField::s_pow(2)).unwrap();
        // (1 - u) F(u) = F(qu) with u = q^(1/2) x
        let u = QTElement::monomial(cone, n, 0, 1, QField::s_pow(1));
        let lhs = QTElement::unit(cone, n)
            .sub(&u)
            .multiply(&f_u)
            .unwrap();
        assert_eq!(lhs, f_qu);
    }

    #[test]
    fn specialization_intertwines_products() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let cone = Cone::FirstQuadrant;
        let bound = 6;
        let random_elt = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut acc = torus::TorusElement::unit(cone, bound);
            for _ in 0..rng.gen_range(1..3) {
                let v = loop {
                    let v = lv(rng.gen_range(0..3), rng.gen_range(0..3));
                    if v.0 != 0 || v.1 != 0 {
                        break v;
                    }
                };
                let g = torus::TorusElement::generator(cone, bound, v).unwrap();
                acc = acc.multiply(&g).unwrap();
            }
            acc.scale(&Scalar::s_pow(rng.gen_range(-2..3)))
        };
        for _ in 0..20 {
            let a = random_elt(&mut rng);
            let b = random_elt(&mut rng);
            let lhs = specialize_element(&a.multiply(&b).unwrap()).unwrap();
            let rhs = specialize_element(&a)
                .unwrap()
                .multiply(&specialize_element(&b).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gl1_pentagon_weight_6() {
        let r = verify_gl1_pentagon(6);
        assert!(r.verified(), "{}", r.render("text").unwrap());
    }

    #[test]
    fn gl1_sw_weight_6() {
        let r = verify_gl1_sw(6);
        assert!(r.verified(), "{}", r.render("text").unwrap());
    }

    #[test]
    fn homomorphism_pairs() {
        let quad_pairs = [(lv(1, 0), lv(0, 1)), (lv(0, 1), lv(0, 2)), (lv(2, 1), lv(1, 2))];
        let r = gl1_homomorphism_check(&quad_pairs, 8, Cone::FirstQuadrant);
        assert!(r.verified(), "{}", r.render("text").unwrap());
        let wedge_pairs = [(lv(1, 1), lv(-1, 1)), (lv(0, 1), lv(0, 2)), (lv(1, 2), lv(-1, 1))];
        let r = gl1_homomorphism_check(&wedge_pairs, 8, Cone::UpperWedge);
        assert!(r.verified(), "{}", r.render("text").unwrap());
    }
}
