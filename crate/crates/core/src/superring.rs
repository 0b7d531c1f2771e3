//! Supersymmetric polynomials in two alphabets `x_1..x_m` and `y_1..y_n`.
//!
//! A [`SuperPoly`] stores one [`MPoly`] in `m + n` variables, the first `m`
//! being the `x`'s. The sign-twisted specialization sends `p_k` to
//! `Σ x_i^k - Σ y_j^k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hl::{hl_p_concrete, hl_skew_p_abstract, signed_permutations, HlError};
use crate::mpoly::{Exponent, MPoly};
use crate::partition::{hook_set, ssyt_enumerate, Partition, SkewShape};
use crate::scalar::{LaurentScalar, Rational, ScalarError};
use crate::symring::SymFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperError {
    #[error("specialization did not clear to a polynomial: {0}")]
    NonPolynomialResult(String),
    #[error("polynomial is not in the span of the super-Schur basis")]
    NotInSpan,
    #[error("super-Schur basis is linearly dependent at m={m}, n={n}, r={r}")]
    RankDeficient { m: usize, n: usize, r: usize },
    #[error(transparent)]
    Hl(#[from] HlError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPoly {
    m: usize,
    n: usize,
    poly: MPoly,
}

impl SuperPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        Self { m, n, poly: MPoly::zero(m + n) }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, LaurentScalar::one())
    }

    pub fn constant(m: usize, n: usize, c: LaurentScalar) -> Self {
        Self { m, n, poly: MPoly::constant(m + n, c) }
    }

    /// `x_i`, 0-based.
    pub fn x(m: usize, n: usize, i: usize) -> Self {
        assert!(i < m);
        Self { m, n, poly: MPoly::var(m + n, i) }
    }

    /// `y_j`, 0-based.
    pub fn y(m: usize, n: usize, j: usize) -> Self {
        assert!(j < n);
        Self { m, n, poly: MPoly::var(m + n, m + j) }
    }

    pub fn monomial(m: usize, n: usize, x: &[u32], y: &[u32], c: LaurentScalar) -> Self {
        assert_eq!((x.len(), y.len()), (m, n));
        let exp: Exponent = x.iter().chain(y).copied().collect();
        Self { m, n, poly: MPoly::monomial(exp, c) }
    }

    pub fn from_mpoly(m: usize, n: usize, poly: MPoly) -> Self {
        assert_eq!(poly.nvars(), m + n);
        Self { m, n, poly }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Terms as `(x-exponents, y-exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &LaurentScalar)> + '_ {
        self.poly.terms().map(|(e, c)| {
            let (x, y) = e.split_at(self.m);
            (x, y, c)
        })
    }

    pub fn coeff(&self, x: &[u32], y: &[u32]) -> LaurentScalar {
        let exp: Exponent = x.iter().chain(y).copied().collect();
        self.poly.coeff(&exp)
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.poly.degrees()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self { m: self.m, n: self.n, poly: self.poly.homogeneous_part(d) }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self { m: self.m, n: self.n, poly: self.poly.scale(c) }
    }

    pub fn map_coeffs<F: FnMut(&LaurentScalar) -> LaurentScalar>(&self, f: F) -> Self {
        Self { m: self.m, n: self.n, poly: self.poly.map_coeffs(f) }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self { m: self.m, n: self.n, poly: self.poly.pow(k) }
    }

    /// `y_j -> -y_j` for every `j`. The one place the sign twist happens.
    pub fn negate_y(&self) -> Self {
        let m = self.m;
        Self { m, n: self.n, poly: self.poly.negate_vars(|k| k >= m) }
    }

    /// `x_i -> -x_i` for every `i`.
    pub fn negate_x(&self) -> Self {
        let m = self.m;
        Self { m, n: self.n, poly: self.poly.negate_vars(|k| k < m) }
    }

    /// Exchange the roles of the alphabets: the result lives in `(n, m)`
    /// with the old `y`'s as its `x`'s.
    pub fn swap_alphabets(&self) -> Self {
        let (m, n) = (self.m, self.n);
        let perm: Vec<usize> = (0..m + n).map(|k| if k < m { n + k } else { k - m }).collect();
        Self { m: n, n: m, poly: self.poly.permute_vars(&perm) }
    }

    pub fn is_symmetric_in_x(&self) -> bool {
        self.poly.is_symmetric_in(0..self.m)
    }

    pub fn is_symmetric_in_y(&self) -> bool {
        self.poly.is_symmetric_in(self.m..self.m + self.n)
    }

    pub fn is_separately_symmetric(&self) -> bool {
        self.is_symmetric_in_x() && self.is_symmetric_in_y()
    }

    /// Place a polynomial in `m` variables on the `x` alphabet.
    pub fn from_x_poly(p: &MPoly, n: usize) -> Self {
        let m = p.nvars();
        let map: Vec<usize> = (0..m).collect();
        Self { m, n, poly: p.embed(m + n, &map) }
    }

    /// Place a polynomial in `n` variables on the `y` alphabet.
    pub fn from_y_poly(p: &MPoly, m: usize) -> Self {
        let n = p.nvars();
        let map: Vec<usize> = (0..n).map(|j| m + j).collect();
        Self { m, n, poly: p.embed(m + n, &map) }
    }

    /// Text form in `x1.., y1..`.
    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.m)
            .map(|i| format!("x{i}"))
            .chain((1..=self.n).map(|j| format!("y{j}")))
            .collect();
        self.poly.render(&names)
    }

    fn check(&self, other: &Self) {
        assert_eq!((self.m, self.n), (other.m, other.n), "alphabet sizes differ");
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPoly[{},{}]({:?})", self.m, self.n, self.poly)
    }
}

impl Add for &SuperPoly {
    type Output = SuperPoly;
    fn add(self, rhs: &SuperPoly) -> SuperPoly {
        self.check(rhs);
        SuperPoly { m: self.m, n: self.n, poly: &self.poly + &rhs.poly }
    }
}

impl Sub for &SuperPoly {
    type Output = SuperPoly;
    fn sub(self, rhs: &SuperPoly) -> SuperPoly {
        self.check(rhs);
        SuperPoly { m: self.m, n: self.n, poly: &self.poly - &rhs.poly }
    }
}

impl Mul for &SuperPoly {
    type Output = SuperPoly;
    fn mul(self, rhs: &SuperPoly) -> SuperPoly {
        self.check(rhs);
        SuperPoly { m: self.m, n: self.n, poly: &self.poly * &rhs.poly }
    }
}

impl Neg for &SuperPoly {
    type Output = SuperPoly;
    fn neg(self) -> SuperPoly {
        SuperPoly { m: self.m, n: self.n, poly: -&self.poly }
    }
}

#[derive(Serialize, Deserialize)]
struct SuperTermJson {
    x: Vec<u32>,
    y: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SuperPolyJson {
    m: usize,
    n: usize,
    terms: Vec<SuperTermJson>,
}

impl Serialize for SuperPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SuperPolyJson {
            m: self.m,
            n: self.n,
            terms: self
                .poly
                .terms()
                .rev()
                .map(|(e, c)| SuperTermJson {
                    x: e[..self.m].to_vec(),
                    y: e[self.m..].to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SuperPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let js = SuperPolyJson::deserialize(d)?;
        let mut poly = MPoly::zero(js.m + js.n);
        for t in js.terms {
            if t.x.len() != js.m || t.y.len() != js.n {
                return Err(D::Error::custom("exponent length does not match alphabet size"));
            }
            let exp: Exponent = t.x.into_iter().chain(t.y).collect();
            poly.add_term(exp, t.coeff.parse().map_err(D::Error::custom)?);
        }
        Ok(SuperPoly { m: js.m, n: js.n, poly })
    }
}

/// `p_k(x/y) = Σ x_i^k - Σ y_j^k` for `k >= 1`.
pub fn super_power_sum(k: usize, m: usize, n: usize) -> SuperPoly {
    let mut out = SuperPoly::zero(m, n);
    for v in 0..m + n {
        let mut e = vec![0; m + n];
        e[v] = k as u32;
        let c = if v < m { LaurentScalar::one() } else { -LaurentScalar::one() };
        out.poly.add_term(e, c);
    }
    out
}

/// The sign-twisted specialization `Λ -> Λ_{m,n}`.
///
/// Coefficients are put over a common denominator, the numerator polynomial
/// is assembled, and the denominator is divided out exactly.
pub fn specialize_super(f: &SymFunc, m: usize, n: usize) -> Result<SuperPoly, SuperError> {
    let f = f.to_p();
    let mut powers: BTreeMap<usize, SuperPoly> = BTreeMap::new();
    let mut dens: Vec<LaurentScalar> = Vec::new();
    for (_, c) in f.terms() {
        if !dens.contains(c.den()) {
            dens.push(c.den().clone());
        }
    }
    let common = dens.iter().fold(LaurentScalar::one(), |acc, d| &acc * d);
    let mut numerator = SuperPoly::zero(m, n);
    for (lambda, c) in f.terms() {
        let cofactor = common.div_exact(c.den())?;
        let mut term = SuperPoly::constant(m, n, c.num() * &cofactor);
        for &k in lambda.parts() {
            let pk = powers
                .entry(k)
                .or_insert_with(|| super_power_sum(k, m, n));
            term = &term * pk;
        }
        numerator = &numerator + &term;
    }
    let poly = numerator
        .poly
        .div_scalar_exact(&common)
        .map_err(|_| SuperError::NonPolynomialResult(format!("{f} at m={m}, n={n}")))?;
    Ok(SuperPoly { m, n, poly })
}

/// Generating series whose coefficients give the super generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuperGen {
    E,
    H,
    P,
    /// The Hall–Littlewood `q_r(x/y; t)`.
    QRow(LaurentScalar),
}

/// Truncated power series in `u` with `SuperPoly` coefficients.
struct Series(Vec<SuperPoly>);

impl Series {
    fn one(len: usize, m: usize, n: usize) -> Self {
        let mut v = vec![SuperPoly::zero(m, n); len];
        v[0] = SuperPoly::one(m, n);
        Series(v)
    }

    /// `1 + a u`.
    fn linear(len: usize, a: SuperPoly) -> Self {
        let (m, n) = (a.m, a.n);
        let mut s = Self::one(len, m, n);
        if len > 1 {
            s.0[1] = a;
        }
        s
    }

    /// `(1 - a u)^{-1} = Σ a^k u^k`.
    fn geometric(len: usize, a: &SuperPoly) -> Self {
        let mut s = Self::one(len, a.m, a.n);
        for k in 1..len {
            s.0[k] = &s.0[k - 1] * a;
        }
        s
    }

    fn mul(&self, other: &Series) -> Series {
        let len = self.0.len();
        let (m, n) = (self.0[0].m, self.0[0].n);
        let mut out = vec![SuperPoly::zero(m, n); len];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(len - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Series(out)
    }
}

/// Coefficient of `u^k` in `E_{x/y}`, `H_{x/y}`, `Q_{x/y}`, or `p_k(x/y)`.
pub fn super_gen(kind: &SuperGen, k: usize, m: usize, n: usize) -> SuperPoly {
    if let SuperGen::P = kind {
        return if k == 0 { SuperPoly::one(m, n) } else { super_power_sum(k, m, n) };
    }
    let len = k + 1;
    let mut series = Series::one(len, m, n);
    let x = |i| SuperPoly::x(m, n, i);
    let y = |j| SuperPoly::y(m, n, j);
    for i in 0..m {
        let factor = match kind {
            SuperGen::E => Series::linear(len, x(i)),
            SuperGen::H => Series::geometric(len, &x(i)),
            SuperGen::QRow(t) => {
                Series::linear(len, -&x(i).scale(t)).mul(&Series::geometric(len, &x(i)))
            }
            SuperGen::P => unreachable!(),
        };
        series = series.mul(&factor);
    }
    for j in 0..n {
        let factor = match kind {
            SuperGen::E => Series::geometric(len, &-&y(j)),
            SuperGen::H => Series::linear(len, -&y(j)),
            SuperGen::QRow(t) => {
                Series::linear(len, -&y(j)).mul(&Series::geometric(len, &y(j).scale(t)))
            }
            SuperGen::P => unreachable!(),
        };
        series = series.mul(&factor);
    }
    series.0.swap_remove(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchurMethod {
    /// `Σ_{μ⊆λ} s_μ(x) s_{λ'/μ'}(-y)`.
    Cancel,
    /// `det[h_{λ_i - i + j}(x/y)]`.
    JacobiTrudi,
}

/// Skew Schur polynomial `s_{λ/μ}` in `vars` variables, as a tableau sum.
fn skew_schur_poly(outer: &Partition, inner: &Partition, vars: usize) -> MPoly {
    let shape = SkewShape::new(outer.clone(), inner.clone()).expect("inner contained in outer");
    let mut out = MPoly::zero(vars);
    for t in ssyt_enumerate(&shape, vars) {
        let e = t.content(vars).into_iter().map(|c| c as u32).collect();
        out.add_term(e, LaurentScalar::one());
    }
    out
}

pub fn super_schur(lambda: &Partition, m: usize, n: usize, method: SchurMethod) -> SuperPoly {
    match method {
        SchurMethod::Cancel => {
            let conj = lambda.conjugate();
            lambda
                .subpartitions()
                .into_iter()
                .map(|mu| {
                    let sx = SuperPoly::from_x_poly(&skew_schur_poly(&mu, &Partition::empty(), m), n);
                    let sy = SuperPoly::from_y_poly(&skew_schur_poly(&conj, &mu.conjugate(), n), m);
                    &sx * &sy.negate_y()
                })
                .fold(SuperPoly::zero(m, n), |acc, p| &acc + &p)
        }
        SchurMethod::JacobiTrudi => {
            let l = lambda.len();
            if l == 0 {
                return SuperPoly::one(m, n);
            }
            let mut hs: BTreeMap<usize, SuperPoly> = BTreeMap::new();
            let mut entry = |i: usize, j: usize| -> SuperPoly {
                let k = lambda.part(i + 1) as i64 - (i as i64 + 1) + (j as i64 + 1);
                if k < 0 {
                    return SuperPoly::zero(m, n);
                }
                hs.entry(k as usize)
                    .or_insert_with(|| super_gen(&SuperGen::H, k as usize, m, n))
                    .clone()
            };
            let matrix: Vec<Vec<SuperPoly>> =
                (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
            let mut det = SuperPoly::zero(m, n);
            for (perm, sign) in signed_permutations(l) {
                let mut term = SuperPoly::one(m, n);
                for (i, &j) in perm.iter().enumerate() {
                    term = &term * &matrix[i][j];
                    if term.is_zero() {
                        break;
                    }
                }
                det = if sign > 0 { &det + &term } else { &det - &term };
            }
            det
        }
    }
}

/// `P_λ(x/y; t) = Σ_{μ⊆λ} P_μ(x; t) · [ω P_{λ/μ}](-y; t)`.
pub fn super_hl_p(lambda: &Partition, m: usize, n: usize, t: &LaurentScalar) -> Result<SuperPoly, SuperError> {
    let mut out = SuperPoly::zero(m, n);
    for mu in lambda.subpartitions() {
        let px = hl_p_concrete(&mu, m, t)?.into_poly();
        let skew = hl_skew_p_abstract(lambda, &mu, t)?.omega();
        // evaluate ω P_{λ/μ} on an alphabet of n plain variables
        let on_y = specialize_super(&skew, n, 0)?.poly;
        let py = SuperPoly::from_y_poly(&on_y, m).negate_y();
        out = &out + &(&SuperPoly::from_x_poly(&px, n) * &py);
    }
    Ok(out)
}

/// Coefficients of a polynomial in the super-Schur basis `{s_λ(x/y) : λ ∈ H(m,n;r)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperSchurExpansion {
    pub r: usize,
    pub coefficients: BTreeMap<Partition, LaurentScalar>,
}

impl SuperSchurExpansion {
    pub fn coeff(&self, lambda: &Partition) -> LaurentScalar {
        self.coefficients.get(lambda).cloned().unwrap_or_default()
    }
}

/// Solve `P = Σ_λ c_λ s_λ(x/y)` exactly. The basis matrix has rational
/// entries, so the elimination runs over `Q` with Laurent right-hand sides.
pub fn super_schur_expand(p: &SuperPoly, r: usize) -> Result<SuperSchurExpansion, SuperError> {
    let (m, n) = (p.m, p.n);
    if p.degrees().iter().any(|&d| d as usize != r) {
        return Err(SuperError::NotInSpan);
    }
    let basis_keys = hook_set(m, n, r);
    let basis: Vec<SuperPoly> = basis_keys
        .iter()
        .map(|l| super_schur(l, m, n, SchurMethod::Cancel))
        .collect();
    let monomials: BTreeSet<&Exponent> = basis
        .iter()
        .flat_map(|b| b.poly.terms().map(|(e, _)| e))
        .chain(p.poly.terms().map(|(e, _)| e))
        .collect();
    let cols = basis.len();
    let mut rows: Vec<(Vec<Rational>, LaurentScalar)> = monomials
        .iter()
        .map(|e| {
            let a = basis
                .iter()
                .map(|b| {
                    b.poly
                        .coeff(e)
                        .as_constant()
                        .expect("super-Schur coefficients are rational")
                })
                .collect();
            (a, p.poly.coeff(e))
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&i| rows[i].0[col] != Rational::default()) else {
            return Err(SuperError::RankDeficient { m, n, r });
        };
        rows.swap(pivot_row, found);
        let inv = Rational::from_integer(1.into()) / &rows[pivot_row].0[col];
        let (a, b) = &mut rows[pivot_row];
        a.iter_mut().for_each(|v| *v *= &inv);
        *b = b.scale(&inv);
        let (pa, pb) = rows[pivot_row].clone();
        for (i, (a, b)) in rows.iter_mut().enumerate() {
            if i == pivot_row || a[col] == Rational::default() {
                continue;
            }
            let f = a[col].clone();
            for (v, pv) in a.iter_mut().zip(&pa) {
                *v -= &f * pv;
            }
            *b -= &pb.scale(&f);
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|(_, b)| !b.is_zero()) {
        return Err(SuperError::NotInSpan);
    }
    let coefficients = basis_keys
        .into_iter()
        .zip(pivots)
        .map(|(k, i)| (k, rows[i].1.clone()))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(SuperSchurExpansion { r, coefficients })
}

/// `Σ_λ c_λ s_λ(x/y)` for a coefficient map.
pub fn super_schur_combination(coeffs: &BTreeMap<Partition, LaurentScalar>, m: usize, n: usize) -> SuperPoly {
    coeffs
        .iter()
        .map(|(l, c)| super_schur(l, m, n, SchurMethod::Cancel).scale(c))
        .fold(SuperPoly::zero(m, n), |acc, p| &acc + &p)
}
