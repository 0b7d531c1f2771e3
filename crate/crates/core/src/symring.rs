//! The ring of symmetric functions over the `q`-fraction field.
//!
//! Elements are stored in one of five bases. Every conversion goes through
//! the power sums `p_λ`: the transition matrices `B -> p` have rational
//! entries and are computed once per degree from independent combinatorial
//! data (Newton expansions for `h` and `e`, monomial expansions of `p_λ` for
//! `m`, Kostka numbers for `s`). The Murnaghan–Nakayama recursion is kept
//! separate from all of this so it can serve as an oracle for `s -> p`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{kostka, partitions_of, Partition};
use crate::scalar::{LaurentScalar, Rational, ScalarError, ScalarFraction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("partitions {0} and {1} have different sizes")]
    SizeMismatch(Partition, Partition),
    #[error("transition matrix to the Hall-Littlewood basis is singular in degree {0}")]
    SingularTransition(usize),
    #[error("unknown basis {0:?}")]
    UnknownBasis(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Degree bound for the Hall–Littlewood pairing.
pub const MAX_HL_DEGREE: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    P,
    M,
    E,
    H,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::M, Basis::E, Basis::H, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Basis::ALL
            .into_iter()
            .find(|b| b.symbol() == s)
            .ok_or_else(|| SymError::UnknownBasis(s.to_string()))
    }
}

type Matrix = Vec<Vec<Rational>>;

static TRANSITIONS: LazyLock<RwLock<HashMap<(Basis, usize, bool), Arc<Matrix>>>> =
    LazyLock::new(Default::default);

/// Rows indexed by `partitions_of(d)`: row `λ` holds the p-coefficients of
/// `b_λ` (`inverse = false`) or the b-coefficients of `p_λ` (`inverse = true`).
fn transition(basis: Basis, d: usize, inverse: bool) -> Arc<Matrix> {
    let key = (basis, d, inverse);
    if let Some(m) = TRANSITIONS.read().unwrap().get(&key) {
        return m.clone();
    }
    let m = Arc::new(if inverse {
        invert(&transition(basis, d, false))
    } else {
        to_p_matrix(basis, d)
    });
    TRANSITIONS.write().unwrap().entry(key).or_insert(m).clone()
}

fn index_of(parts: &[Partition]) -> HashMap<&Partition, usize> {
    parts.iter().enumerate().map(|(i, p)| (p, i)).collect()
}

fn inv_zed(p: &Partition) -> Rational {
    Rational::new(BigInt::one(), p.zed())
}

/// p-expansion of the one-row generators `h_n` or `e_n`.
fn newton(n: usize, signed: bool) -> BTreeMap<Partition, Rational> {
    partitions_of(n)
        .into_iter()
        .map(|nu| {
            let mut c = inv_zed(&nu);
            if signed && (n - nu.len()) % 2 == 1 {
                c = -c;
            }
            (nu, c)
        })
        .collect()
}

fn multiply_p(a: &BTreeMap<Partition, Rational>, b: &BTreeMap<Partition, Rational>) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *out.entry(pa.union(pb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficient of `m_μ` in `p_λ`: the number of ways to distribute the parts
/// of λ into bins of sizes μ.
fn p_to_m_coefficient(lambda: &Partition, mu: &Partition) -> u64 {
    fn go(parts: &[usize], bins: &mut [usize]) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(bins.iter().all(|&b| b == 0));
        };
        let mut total = 0;
        for j in 0..bins.len() {
            if bins[j] >= first {
                bins[j] -= first;
                total += go(rest, bins);
                bins[j] += first;
            }
        }
        total
    }
    let mut bins = mu.parts().to_vec();
    go(lambda.parts(), &mut bins)
}

fn to_p_matrix(basis: Basis, d: usize) -> Matrix {
    let parts = partitions_of(d);
    let idx = index_of(&parts);
    let n = parts.len();
    let zero_row = || vec![Rational::zero(); n];
    match basis {
        Basis::P => (0..n)
            .map(|i| {
                let mut row = zero_row();
                row[i] = Rational::one();
                row
            })
            .collect(),
        Basis::H | Basis::E => parts
            .iter()
            .map(|lambda| {
                let signed = basis == Basis::E;
                let expansion = lambda.parts().iter().fold(
                    BTreeMap::from([(Partition::empty(), Rational::one())]),
                    |acc, &k| multiply_p(&acc, &newton(k, signed)),
                );
                let mut row = zero_row();
                for (nu, c) in expansion {
                    row[idx[&nu]] = c;
                }
                row
            })
            .collect(),
        Basis::M => {
            let p_in_m: Matrix = parts
                .iter()
                .map(|lambda| {
                    parts
                        .iter()
                        .map(|mu| Rational::from_integer(BigInt::from(p_to_m_coefficient(lambda, mu))))
                        .collect()
                })
                .collect();
            invert(&p_in_m)
        }
        Basis::S => {
            let m_to_p = transition(Basis::M, d, false);
            parts
                .iter()
                .map(|lambda| {
                    let mut row = zero_row();
                    for (j, mu) in parts.iter().enumerate() {
                        let k = kostka(lambda, mu.parts());
                        if k == 0 {
                            continue;
                        }
                        let k = Rational::from_integer(BigInt::from(k));
                        for (c, r) in row.iter_mut().zip(&m_to_p[j]) {
                            *c += &k * r;
                        }
                    }
                    row
                })
                .collect()
        }
    }
}

/// Gauss–Jordan inverse over Q. Every matrix inverted here is unitriangular
/// up to ordering, hence invertible.
fn invert(a: &Matrix) -> Matrix {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("transition matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Element of the ring of symmetric functions in a declared basis.
///
/// Terms of different degrees may coexist; every operation acts degree by
/// degree.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, ScalarFraction>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(Basis::P, ScalarFraction::one())
    }

    pub fn scalar(basis: Basis, c: ScalarFraction) -> Self {
        Self::from_terms(basis, [(Partition::empty(), c)])
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, ScalarFraction::one())])
    }

    /// Shorthand for a basis element from raw parts; panics on invalid parts.
    pub fn of(basis: Basis, parts: &[usize]) -> Self {
        Self::basis_element(basis, Partition::new(parts.to_vec()).expect("valid partition"))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, ScalarFraction)>>(basis: Basis, iter: I) -> Self {
        let mut out = Self::zero(basis);
        for (p, c) in iter {
            out.add_term(p, &c);
        }
        out
    }

    fn add_term(&mut self, p: Partition, c: &ScalarFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &ScalarFraction)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> ScalarFraction {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees of the nonzero homogeneous components, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    /// `Some(d)` when homogeneous of degree `d` (zero counts as degree 0).
    pub fn degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [] => Some(0),
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        Self {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &ScalarFraction) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    pub fn scale_laurent(&self, c: &LaurentScalar) -> Self {
        self.scale(&ScalarFraction::from(c.clone()))
    }

    pub fn map_coeffs<F: FnMut(&ScalarFraction) -> ScalarFraction>(&self, mut f: F) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(p, v)| (p.clone(), f(v))))
    }

    /// The same element expressed in `target`.
    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let in_p = self.to_p();
        if target == Basis::P {
            return in_p;
        }
        let mut out = Self::zero(target);
        for d in in_p.degrees() {
            let parts = partitions_of(d);
            let idx = index_of(&parts);
            let inv = transition(target, d, true);
            let mut acc = vec![ScalarFraction::zero(); parts.len()];
            for (nu, c) in in_p.terms.iter().filter(|(p, _)| p.size() == d) {
                for (slot, r) in acc.iter_mut().zip(&inv[idx[nu]]) {
                    if !r.is_zero() {
                        *slot += &c.scale(r);
                    }
                }
            }
            for (p, c) in parts.into_iter().zip(acc) {
                out.add_term(p, &c);
            }
        }
        out
    }

    pub fn to_p(&self) -> Self {
        if self.basis == Basis::P {
            return self.clone();
        }
        let mut out = Self::zero(Basis::P);
        for d in self.degrees() {
            let parts = partitions_of(d);
            let idx = index_of(&parts);
            let fwd = transition(self.basis, d, false);
            let mut acc = vec![ScalarFraction::zero(); parts.len()];
            for (lambda, c) in self.terms.iter().filter(|(p, _)| p.size() == d) {
                for (slot, r) in acc.iter_mut().zip(&fwd[idx[lambda]]) {
                    if !r.is_zero() {
                        *slot += &c.scale(r);
                    }
                }
            }
            for (p, c) in parts.into_iter().zip(acc) {
                out.add_term(p, &c);
            }
        }
        out
    }

    /// Ring equality independent of the stored basis.
    pub fn same_element(&self, other: &SymFunc) -> bool {
        self.to_p() == other.to_p()
    }

    /// Product, returned in the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let (a, b) = (self.to_p(), other.to_p());
        let mut out = Self::zero(Basis::P);
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                out.add_term(pa.union(pb), &(ca * cb));
            }
        }
        out.convert(self.basis)
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &other.convert(self.basis).terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }

    /// The involution `ω`: `p_r -> (-1)^{r-1} p_r`, extended multiplicatively.
    pub fn omega(&self) -> SymFunc {
        let in_p = self.to_p();
        Self::from_terms(
            Basis::P,
            in_p.terms.iter().map(|(p, c)| {
                let c = if (p.size() - p.len()) % 2 == 1 { -c } else { c.clone() };
                (p.clone(), c)
            }),
        )
        .convert(self.basis)
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(js: &SymFuncJson) -> Result<Self, SymError> {
        let mut out = Self::zero(js.basis);
        for t in &js.terms {
            out.add_term(t.partition.clone(), &t.coeff.parse::<ScalarFraction>()?);
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
            let label = format!("{}[{}]", self.basis, parts.join(","));
            if p.is_empty() {
                write!(f, "({c})")?;
            } else if *c == ScalarFraction::one() {
                f.write_str(&label)?;
            } else {
                write!(f, "({c})*{label}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coeff: String,
}

/// Wire form: `{"basis": "p", "terms": [{"partition": [2,1], "coeff": "..."}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let js = SymFuncJson::deserialize(d)?;
        SymFunc::from_json(&js).map_err(serde::de::Error::custom)
    }
}

/// `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`, extended bilinearly. Components of different
/// degree pair to zero.
pub fn inner_standard(f: &SymFunc, g: &SymFunc) -> ScalarFraction {
    let (f, g) = (f.to_p(), g.to_p());
    f.terms
        .iter()
        .filter_map(|(p, c)| {
            g.terms
                .get(p)
                .map(|d| (c * d).scale(&Rational::from_integer(p.zed())))
        })
        .sum()
}

/// Hall–Littlewood pairing: the bilinear form making `q_λ(·; t)` and `m_λ`
/// dual bases. `f` is expanded in the `q_λ` basis, `g` in the monomial basis.
pub fn inner_hl(f: &SymFunc, g: &SymFunc, t: &LaurentScalar) -> Result<ScalarFraction, SymError> {
    let f = f.to_p();
    let g = g.convert(Basis::M);
    let mut total = ScalarFraction::zero();
    for d in f.degrees() {
        if d > MAX_HL_DEGREE {
            return Err(SymError::SingularTransition(d));
        }
        let gd = g.homogeneous_part(d);
        if gd.is_zero() {
            continue;
        }
        let in_q = expand_in_q_basis(&f.homogeneous_part(d), d, t)?;
        for (lambda, a) in in_q {
            total += &(&a * &gd.coeff(&lambda));
        }
    }
    Ok(total)
}

/// Coefficients of a degree-`d` element (given in p) in the basis
/// `q_λ(·; t)`, `λ ⊢ d`.
fn expand_in_q_basis(
    f: &SymFunc,
    d: usize,
    t: &LaurentScalar,
) -> Result<Vec<(Partition, ScalarFraction)>, SymError> {
    let parts = partitions_of(d);
    let idx = index_of(&parts);
    let n = parts.len();
    // columns: q_λ in p; solve A x = f where A[ν][λ] = coeff of p_ν in q_λ
    let mut a: Vec<Vec<ScalarFraction>> = vec![vec![ScalarFraction::zero(); n + 1]; n];
    for (j, lambda) in parts.iter().enumerate() {
        let q = crate::hl::hl_q_lambda(lambda, t);
        for (nu, c) in q.terms() {
            a[idx[nu]][j] = c.clone();
        }
    }
    for (nu, c) in f.terms() {
        a[idx[nu]][n] = c.clone();
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(SymError::SingularTransition(d))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip()?;
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
    }
    Ok(parts.into_iter().zip(a.into_iter().map(|row| row[n].clone())).collect())
}

/// Irreducible symmetric-group character `χ^λ` at cycle type `μ`, by the
/// Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, SymError> {
    if lambda.size() != mu.size() {
        return Err(SymError::SizeMismatch(lambda.clone(), mu.clone()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda, mu.parts(), &mut memo))
}

fn mn_rec(lambda: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    let key = (lambda.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = lambda.len();
    let beta: Vec<usize> = (1..=l).map(|i| lambda.part(i) + l - i).collect();
    let mut total = 0;
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next: Vec<usize> = beta.iter().map(|&c| if c == b { b - k } else { c }).collect();
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape = Partition::from_unsorted(
            next.iter().enumerate().map(|(i, &c)| c - (l - 1 - i)).collect(),
        );
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&shape, rest, memo);
    }
    memo.insert(key, total);
    total
}
