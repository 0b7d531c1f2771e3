//! Sparse multivariate polynomials with [`LaurentScalar`] coefficients.
//!
//! Exponent vectors have a fixed length (the variable count) and are
//! compared lexicographically, which makes the map's last key the leading
//! monomial for exact division.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use thiserror::Error;

use crate::scalar::{LaurentScalar, Rational, ScalarError};

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, LaurentScalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: LaurentScalar) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, LaurentScalar::one())
    }

    /// The variable with 0-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, LaurentScalar::one())
    }

    pub fn monomial(exp: Exponent, c: LaurentScalar) -> Self {
        let nvars = exp.len();
        let mut out = Self::zero(nvars);
        out.add_term(exp, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, LaurentScalar)>>(nvars: usize, iter: I) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in iter {
            assert_eq!(e.len(), nvars, "exponent length must match variable count");
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: Exponent, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &LaurentScalar)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> LaurentScalar {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Exponent, &LaurentScalar)> {
        self.terms.iter().next_back()
    }

    /// Total degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&LaurentScalar::constant(c.clone()))
    }

    /// Apply `f` to every coefficient.
    pub fn try_map_coeffs<F>(&self, mut f: F) -> Result<Self, ScalarError>
    where
        F: FnMut(&LaurentScalar) -> Result<LaurentScalar, ScalarError>,
    {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn map_coeffs<F: FnMut(&LaurentScalar) -> LaurentScalar>(&self, mut f: F) -> Self {
        self.try_map_coeffs(|c| Ok(f(c))).expect("infallible map")
    }

    /// Substitute `x_i -> w_i x_i` for per-variable Laurent weights.
    pub fn scale_vars(&self, weights: &[LaurentScalar]) -> Self {
        assert_eq!(weights.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut w = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    w = &w * &weights[k].pow(ek);
                }
            }
            out.add_term(e.clone(), w);
        }
        out
    }

    /// Flip the sign of every variable whose index satisfies `pred`.
    pub fn negate_vars<P: Fn(usize) -> bool>(&self, pred: P) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let odd = e
                .iter()
                .enumerate()
                .filter(|&(k, _)| pred(k))
                .map(|(_, &d)| d)
                .sum::<u32>()
                % 2
                == 1;
            out.add_term(e.clone(), if odd { -c } else { c.clone() });
        }
        out
    }

    /// Rename variables: new exponent position `perm[k]` receives old position `k`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (k, &d) in e.iter().enumerate() {
                ne[perm[k]] = d;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Re-embed into `nvars` variables, sending old variable `k` to `map[k]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (k, &d) in e.iter().enumerate() {
                ne[map[k]] += d;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Invariance under the transposition of variables `i` and `j`.
    pub fn is_invariant_under_swap(&self, i: usize, j: usize) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.swap(i, j);
            self.terms.get(&s) == Some(c)
        })
    }

    /// Symmetric in the variables of `range` (adjacent transpositions generate).
    pub fn is_symmetric_in(&self, range: std::ops::Range<usize>) -> bool {
        range
            .clone()
            .zip(range.skip(1))
            .all(|(i, j)| self.is_invariant_under_swap(i, j))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Exact quotient by `divisor`, lexicographic leading terms.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<Self, PolyError> {
        if self.nvars != divisor.nvars {
            return Err(PolyError::VarMismatch(self.nvars, divisor.nvars));
        }
        let (lead_e, lead_c) = divisor
            .leading()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(PolyError::Scalar(ScalarError::DivisionByZero))?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lead_e).any(|(a, b)| a < b) {
                return Err(PolyError::NotDivisible);
            }
            let qe: Exponent = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            let qc = c.div_exact(&lead_c).map_err(|_| PolyError::NotDivisible)?;
            for (de, dc) in &divisor.terms {
                let ne: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(ne, -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Render with the given variable names, highest monomial first.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&d, _)| d > 0)
                .map(|(&d, name)| if d == 1 { name.clone() } else { format!("{name}^{d}") })
                .collect();
            let coeff = c.to_string();
            let (neg, body) = match coeff.strip_prefix('-') {
                Some(rest) if c.num_terms() == 1 => (true, rest.to_string()),
                _ => (false, coeff),
            };
            let term = match (mono.is_empty(), body.as_str()) {
                (true, _) => body.clone(),
                (false, "1") => mono.join("*"),
                (false, _) if c.num_terms() > 1 => format!("({body})*{}", mono.join("*")),
                (false, _) => format!("{body}*{}", mono.join("*")),
            };
            match (i, neg) {
                (0, true) => out.push_str(&format!("-{term}")),
                (0, false) => out.push_str(&term),
                (_, true) => out.push_str(&format!(" - {term}")),
                (_, false) => out.push_str(&format!(" + {term}")),
            }
        }
        out
    }

    /// Divide every coefficient exactly by a scalar.
    pub fn div_scalar_exact(&self, d: &LaurentScalar) -> Result<Self, ScalarError> {
        self.try_map_coeffs(|c| c.div_exact(d))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){e:?}")?;
        }
        Ok(())
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.map_coeffs(|c| -c)
    }
}
