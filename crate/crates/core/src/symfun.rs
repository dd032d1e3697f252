//! Integer partitions, hook/content combinatorics, Littlewood-Richardson
//! coefficients, Schur and power-sum bases of symmetric functions, and the
//! standard coproduct. Series here are identified with the positive skein
//! of the solid torus via `W_lambda <-> s_lambda`.

use crate::scalars::{QField, Scalar};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SymError {
    #[error("basis mismatch: {0:?} vs {1:?}")]
    BasisMismatch(Basis, Basis),
}

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition(parts)
    }

    /// Sorts the given multiset of positive integers into a partition.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for c in 0..cols {
            parts.push(self.0.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition(parts)
    }

    /// Cells of the Young diagram as (row, col), both 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    /// Content of a cell: column minus row.
    pub fn content(r: usize, c: usize) -> i64 {
        c as i64 - r as i64
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook(&self, r: usize, c: usize) -> u32 {
        let arm = self.0[r] - c as u32 - 1;
        let leg = self.conjugate().0[c] - r as u32 - 1;
        arm + leg + 1
    }

    /// The content polynomial `C_lambda(q^dir) = sum_cells q^{dir*content}`
    /// for `dir = 1` or `-1`.
    pub fn content_polynomial(&self, dir: i64) -> QField {
        let mut acc = QField::zero();
        for (r, c) in self.cells() {
            acc = acc + QField::q_half_pow(2 * dir * Partition::content(r, c));
        }
        acc
    }

    /// All partitions of `n`.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            let mut p = max.min(n);
            while p >= 1 {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
                p -= 1;
            }
        }
        let mut out = vec![];
        rec(n, n, &mut vec![], &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// One (content, hook) pair per cell of the diagram, row by row.
pub fn hooks_contents(lambda: &Partition) -> Vec<(i64, u32)> {
    lambda
        .cells()
        .map(|(r, c)| (Partition::content(r, c), lambda.hook(r, c)))
        .collect()
}

fn lr_cache() -> &'static Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>> {
    static CACHE: std::sync::OnceLock<
        Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>>,
    > = std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn lr_skew_cache() -> &'static Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>> {
    static CACHE: std::sync::OnceLock<
        Mutex<HashMap<(Partition, Partition), BTreeMap<Partition, u64>>>,
    > = std::sync::OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Littlewood-Richardson coefficients `c^lambda_{mu nu}` for all `lambda`
/// with `|lambda| = |mu| + |nu|`, by enumeration of LR skew tableaux of
/// shape `lambda/mu` and weight `nu`. Results are memoized.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let key = (mu.clone(), nu.clone());
    if let Some(hit) = lr_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let n = mu.size() + nu.size();
    let mut out = BTreeMap::new();
    for lambda in Partition::all(n) {
        if !lambda.contains(mu) {
            continue;
        }
        let c = lr_skew_count(&lambda, mu, nu);
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    lr_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Expansion of the skew Schur function `s_{lambda/mu}` in the Schur basis:
/// `nu -> c^lambda_{mu nu}`. Used by the coproduct; memoized.
pub fn lr_skew_expansion(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = lr_skew_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut out = BTreeMap::new();
    if !lambda.contains(mu) {
        return out;
    }
    let n = lambda.size() - mu.size();
    for nu in Partition::all(n) {
        let c = lr_skew_count(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    lr_skew_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Number of LR tableaux of shape `lambda/mu` and content `nu`: semistandard
/// fillings whose reverse reading word is a lattice word. Cells are filled
/// row by row, right to left, so the running letter counts are exactly the
/// counts along a prefix of the reverse reading word.
fn lr_skew_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    struct State<'s> {
        lambda: &'s Partition,
        mu: &'s Partition,
        nu: &'s Partition,
        grid: Vec<Vec<u32>>, // 0 = unfilled, letters are 1-based
        counts: Vec<u32>,
        total: u64,
    }
    impl State<'_> {
        fn fill(&mut self, r: usize, filled_in_row: usize) {
            if r == self.lambda.len() {
                self.total += 1;
                return;
            }
            let row_lo = self.mu.part(r) as usize;
            let row_hi = self.lambda.part(r) as usize;
            if row_lo + filled_in_row == row_hi {
                self.fill(r + 1, 0);
                return;
            }
            let c = row_hi - 1 - filled_in_row;
            for letter in 1..=self.nu.len() as u32 {
                let li = letter as usize - 1;
                if self.counts[li] >= self.nu.part(li) {
                    continue; // content bound
                }
                // lattice word: at every prefix, #letter <= #(letter-1)
                if letter > 1 && self.counts[li] + 1 > self.counts[li - 1] {
                    continue;
                }
                // rows weakly increase left to right
                if c + 1 < row_hi {
                    let right = self.grid[r][c + 1];
                    if right != 0 && right < letter {
                        continue;
                    }
                }
                // columns strictly increase downward
                if r > 0 && c < self.lambda.part(r - 1) as usize && c >= self.mu.part(r - 1) as usize
                {
                    let above = self.grid[r - 1][c];
                    if above == 0 || above >= letter {
                        continue;
                    }
                }
                self.grid[r][c] = letter;
                self.counts[li] += 1;
                self.fill(r, filled_in_row + 1);
                self.counts[li] -= 1;
                self.grid[r][c] = 0;
            }
        }
    }
    let grid = (0..lambda.len())
        .map(|r| vec![0u32; lambda.part(r) as usize])
        .collect();
    let mut st = State { lambda, mu, nu, grid, counts: vec![0; nu.len()], total: 0 };
    st.fill(0, 0);
    st.total
}

/// Border strips of size `r` that can be added to `mu`: returns the
/// enlarged partition and the strip height (rows spanned minus one).
///
/// A strip occupying rows `top..=bottom` is forced except for the top row:
/// in every lower row `i` it must reach exactly column `mu[i-1]`, i.e.
/// `lambda[i] = mu[i-1] + 1`, and the top row takes whatever cells remain.
fn border_strip_additions(mu: &Partition, r: u32) -> Vec<(Partition, u32)> {
    let mut out = vec![];
    if r == 0 {
        return out;
    }
    let mlen = mu.len();
    for top in 0..=mlen {
        for bottom in top..top + r as usize {
            let mut lambda: Vec<u32> = mu.parts().to_vec();
            if lambda.len() <= bottom {
                lambda.resize(bottom + 1, 0);
            }
            let mut valid = true;
            for i in (top + 1)..=bottom {
                let v = mu.part(i - 1) + 1;
                if v <= mu.part(i) {
                    valid = false;
                    break;
                }
                lambda[i] = v;
            }
            if !valid {
                continue;
            }
            let added_below: u32 = ((top + 1)..=bottom).map(|i| lambda[i] - mu.part(i)).sum();
            if added_below >= r {
                continue;
            }
            lambda[top] = mu.part(top) + (r - added_below);
            // still a partition, and the new shape is strictly larger in
            // every row of the strip
            if top > 0 && lambda[top] > mu.part(top - 1) {
                continue;
            }
            let dec = lambda.windows(2).all(|w| w[0] >= w[1]);
            if !dec {
                continue;
            }
            if lambda[bottom] == mu.part(bottom) {
                continue;
            }
            let lam = Partition::new(lambda);
            debug_assert_eq!(lam.size(), mu.size() + r);
            out.push((lam, (bottom - top) as u32));
        }
    }
    out
}

/// `p_r * s_mu` in the Schur basis by the Murnaghan-Nakayama rule.
pub fn powersum_times_schur(r: u32, mu: &Partition) -> Vec<(Partition, i64)> {
    border_strip_additions(mu, r)
        .into_iter()
        .map(|(lam, ht)| (lam, if ht % 2 == 0 { 1 } else { -1 }))
        .collect()
}

/// Symmetric-group character `chi^lambda(mu)`, the coefficient of
/// `s_lambda` in `p_mu`, by iterated border-strip removal.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    fn rec(lambda: &Partition, parts: &[u32]) -> i64 {
        if parts.is_empty() {
            return if lambda.is_empty() { 1 } else { 0 };
        }
        let r = parts[0];
        let mut total = 0;
        for (smaller, ht) in border_strip_removals(lambda, r) {
            let sign = if ht % 2 == 0 { 1 } else { -1 };
            total += sign * rec(&smaller, &parts[1..]);
        }
        total
    }
    if lambda.size() != mu.size() {
        return 0;
    }
    rec(lambda, mu.parts())
}

fn border_strip_removals(lambda: &Partition, r: u32) -> Vec<(Partition, u32)> {
    let mut out = vec![];
    if lambda.size() < r {
        return out;
    }
    for candidate in Partition::all(lambda.size() - r) {
        if !lambda.contains(&candidate) {
            continue;
        }
        for (enlarged, ht) in border_strip_additions(&candidate, r) {
            if &enlarged == lambda {
                out.push((candidate.clone(), ht));
            }
        }
    }
    out
}

/// Size of the centralizer of a permutation of cycle type `mu`.
pub fn z_mu(mu: &Partition) -> i64 {
    let mut z = 1i64;
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (&p, &m) in &counts {
        for k in 1..=m as i64 {
            z *= k;
        }
        z *= (p as i64).pow(m);
    }
    z
}

/// Number of standard Young tableaux of the given shape (hook lengths).
pub fn dimension(lambda: &Partition) -> u64 {
    let n = lambda.size() as u64;
    let mut numerator = 1u64;
    for k in 1..=n {
        numerator = numerator.checked_mul(k).expect("dimension overflow");
    }
    let mut hooks = 1u64;
    for (r, c) in lambda.cells() {
        hooks *= lambda.hook(r, c) as u64;
    }
    numerator / hooks
}

/// Which basis a series is expressed in. Power-sum keys are multisets of
/// positive integers stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Schur,
    PowerSum,
}

/// A finitely supported series of basis elements with `Scalar` coefficients,
/// truncated at degree `degree_bound`: keys of size above the bound are
/// dropped on construction and multiplication. Equality compares basis and
/// terms; the truncation bound is bookkeeping, not part of the value.
#[derive(Debug, Clone)]
pub struct SymSeries {
    basis: Basis,
    degree_bound: u32,
    terms: BTreeMap<Partition, Scalar>,
}

impl PartialEq for SymSeries {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.terms == other.terms
    }
}

impl Eq for SymSeries {}

impl SymSeries {
    pub fn zero(basis: Basis, degree_bound: u32) -> Self {
        SymSeries { basis, degree_bound, terms: BTreeMap::new() }
    }

    pub fn unit(basis: Basis, degree_bound: u32) -> Self {
        let mut s = SymSeries::zero(basis, degree_bound);
        s.add_term(Partition::empty(), Scalar::one());
        s
    }

    /// The single basis element `s_lambda` or `p_lambda`.
    pub fn basis_element(basis: Basis, lambda: Partition, degree_bound: u32) -> Self {
        let mut s = SymSeries::zero(basis, degree_bound);
        s.add_term(lambda, Scalar::one());
        s
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &Partition) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The part of the series in a single degree.
    pub fn degree_part(&self, d: u32) -> SymSeries {
        let mut out = SymSeries::zero(self.basis, self.degree_bound);
        for (k, v) in &self.terms {
            if k.size() == d {
                out.add_term(k.clone(), v.clone());
            }
        }
        out
    }

    pub fn add_term(&mut self, key: Partition, c: Scalar) {
        if c.is_zero() || key.size() > self.degree_bound {
            return;
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

    pub fn scale(&self, c: &Scalar) -> SymSeries {
        let mut out = SymSeries::zero(self.basis, self.degree_bound);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Copy with a new truncation bound. Raising the bound is only valid
    /// when the series is exact rather than a truncation.
    pub fn rebound(&self, degree_bound: u32) -> SymSeries {
        let mut out = SymSeries::zero(self.basis, degree_bound);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn add(&self, other: &SymSeries) -> SymSeries {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = SymSeries::zero(self.basis, bound);
        for (k, v) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymSeries) -> SymSeries {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Product of two series in the same basis, truncated. Schur-basis
    /// products expand by Littlewood-Richardson; power-sum products are
    /// free (multiset union of keys).
    pub fn multiply(&self, other: &SymSeries) -> Result<SymSeries, SymError> {
        if self.basis != other.basis {
            return Err(SymError::BasisMismatch(self.basis, other.basis));
        }
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = SymSeries::zero(self.basis, bound);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                if k1.size() + k2.size() > bound {
                    continue;
                }
                let c = c1 * c2;
                match self.basis {
                    Basis::PowerSum => {
                        let mut parts = k1.parts().to_vec();
                        parts.extend_from_slice(k2.parts());
                        out.add_term(Partition::from_multiset(parts), c);
                    }
                    Basis::Schur => {
                        for (lam, mult) in lr_coefficients(k1, k2) {
                            out.add_term(lam, c.scale(&QField::from_int(mult as i64)));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Change of basis to Schur via Murnaghan-Nakayama.
    pub fn to_schur(&self) -> SymSeries {
        match self.basis {
            Basis::Schur => self.clone(),
            Basis::PowerSum => {
                let mut out = SymSeries::zero(Basis::Schur, self.degree_bound);
                for (mu, c) in &self.terms {
                    for (lam, coeff) in powersum_monomial_to_schur(mu) {
                        out.add_term(lam, c.scale(&QField::from_int(coeff)));
                    }
                }
                out
            }
        }
    }

    /// Change of basis to power sums using characters: `s_lambda = sum_mu
    /// chi^lambda(mu)/z_mu p_mu`.
    pub fn to_powersum(&self) -> SymSeries {
        match self.basis {
            Basis::PowerSum => self.clone(),
            Basis::Schur => {
                let mut out = SymSeries::zero(Basis::PowerSum, self.degree_bound);
                for (lam, c) in &self.terms {
                    for mu in Partition::all(lam.size()) {
                        let chi = character(lam, &mu);
                        if chi == 0 {
                            continue;
                        }
                        let coeff =
                            QField::from_int(chi) * QField::from_int(z_mu(&mu)).inverse();
                        out.add_term(mu, c.scale(&coeff));
                    }
                }
                out
            }
        }
    }
}

/// `p_mu` in the Schur basis with integer coefficients.
fn powersum_monomial_to_schur(mu: &Partition) -> Vec<(Partition, i64)> {
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    acc.insert(Partition::empty(), 1);
    for &r in mu.parts() {
        let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
        for (shape, c) in acc {
            for (lam, sign) in powersum_times_schur(r, &shape) {
                *next.entry(lam).or_insert(0) += c * sign;
            }
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc.into_iter().collect()
}

/// A series in `Lambda tensor Lambda` with both factors in the Schur basis,
/// truncated by total degree. Equality compares terms only.
#[derive(Debug, Clone)]
pub struct TensorSeries {
    degree_bound: u32,
    terms: BTreeMap<(Partition, Partition), Scalar>,
}

impl PartialEq for TensorSeries {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for TensorSeries {}

impl TensorSeries {
    pub fn zero(degree_bound: u32) -> Self {
        TensorSeries { degree_bound, terms: BTreeMap::new() }
    }

    pub fn unit(degree_bound: u32) -> Self {
        let mut t = TensorSeries::zero(degree_bound);
        t.add_term(Partition::empty(), Partition::empty(), Scalar::one());
        t
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn add_term(&mut self, mu: Partition, nu: Partition, c: Scalar) {
        if c.is_zero() || mu.size() + nu.size() > self.degree_bound {
            return;
        }
        match self.terms.entry((mu, nu)) {
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

    pub fn add(&self, other: &TensorSeries) -> TensorSeries {
        let mut out = TensorSeries::zero(self.degree_bound.min(other.degree_bound));
        for ((mu, nu), c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(mu.clone(), nu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorSeries) -> TensorSeries {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TensorSeries {
        let mut out = TensorSeries::zero(self.degree_bound);
        for ((mu, nu), v) in &self.terms {
            out.add_term(mu.clone(), nu.clone(), v * c);
        }
        out
    }

    /// `x tensor y`.
    pub fn product_of(x: &SymSeries, y: &SymSeries) -> TensorSeries {
        assert_eq!(x.basis(), Basis::Schur);
        assert_eq!(y.basis(), Basis::Schur);
        let bound = x.degree_bound().min(y.degree_bound());
        let mut out = TensorSeries::zero(bound);
        for (mu, c1) in x.terms() {
            for (nu, c2) in y.terms() {
                out.add_term(mu.clone(), nu.clone(), c1 * c2);
            }
        }
        out
    }

    /// Componentwise product `(a tensor b)(c tensor d) = ac tensor bd`.
    pub fn multiply(&self, other: &TensorSeries) -> TensorSeries {
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = TensorSeries::zero(bound);
        for ((m1, n1), c1) in &self.terms {
            for ((m2, n2), c2) in &other.terms {
                if m1.size() + n1.size() + m2.size() + n2.size() > bound {
                    continue;
                }
                let c = c1 * c2;
                for (mu, cm) in lr_coefficients(m1, m2) {
                    for (nu, cn) in lr_coefficients(n1, n2) {
                        out.add_term(
                            mu.clone(),
                            nu,
                            c.scale(&QField::from_int((cm * cn) as i64)),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Partition, nu: &Partition) -> Scalar {
        self.terms
            .get(&(mu.clone(), nu.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The standard coproduct `Delta s_lambda = sum c^lambda_{mu nu} s_mu
/// tensor s_nu`, extended linearly. Input must be in the Schur basis.
pub fn coproduct(x: &SymSeries) -> TensorSeries {
    assert_eq!(x.basis(), Basis::Schur, "coproduct wants the Schur basis");
    let mut out = TensorSeries::zero(x.degree_bound());
    for (lam, c) in x.terms() {
        for mu in Partition::all_up_to(lam.size()) {
            if !lam.contains(&mu) {
                continue;
            }
            for (nu, mult) in lr_skew_expansion(lam, &mu) {
                out.add_term(mu.clone(), nu, c.scale(&QField::from_int(mult as i64)));
            }
        }
    }
    out
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.basis {
            Basis::Schur => "s",
            Basis::PowerSum => "p",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{}] {}{}", c, tag, k)?;
        }
        Ok(())
    }
}
