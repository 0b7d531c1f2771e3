//! The sign q-permutation representation of the Hecke algebra on
//! `M^{⊗r}`, where `M` has even basis `v_1..v_m` and odd basis
//! `v_{m+1}..v_{m+n}`, together with the content operator `D_r`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mpoly::MPoly;
use crate::partition::Composition;
use crate::scalar::LaurentScalar;
use crate::superring::SuperPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("generator index {i} out of range 1..{r}")]
    IndexOutOfRange { i: usize, r: usize },
    #[error("basis index {value} out of range 1..={max}")]
    BadBasisIndex { value: usize, max: usize },
}

/// A basis index `1..=m+n` with its parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedIndex {
    pub value: usize,
    pub parity: u8,
}

impl GradedIndex {
    pub fn new(value: usize, m: usize, n: usize) -> Result<Self, HeckeError> {
        if value == 0 || value > m + n {
            return Err(HeckeError::BadBasisIndex { value, max: m + n });
        }
        Ok(Self { value, parity: u8::from(value > m) })
    }
}

/// Index word `(i_1..i_r)`, entries 1-based.
pub type Word = Vec<usize>;

/// A vector in `M^{⊗r}` as amplitudes on basis words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorState {
    amps: BTreeMap<Word, LaurentScalar>,
}

impl TensorState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(word: Word) -> Self {
        Self { amps: BTreeMap::from([(word, LaurentScalar::one())]) }
    }

    pub fn add_term(&mut self, word: Word, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.amps.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn amplitude(&self, word: &[usize]) -> LaurentScalar {
        self.amps.get(word).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentScalar)> + '_ {
        self.amps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.amps {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in &other.amps {
            out.add_term(w.clone(), a.clone());
        }
        out
    }
}

impl fmt::Debug for TensorState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.amps.iter().map(|(w, a)| format!("({a})v{w:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// All index words of length `r` over `1..=d`, lexicographic.
pub fn basis_words(r: usize, d: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(d.pow(r as u32));
    if d == 0 {
        if r == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut w = vec![1; r];
    loop {
        out.push(w.clone());
        let Some(pos) = (0..r).rev().find(|&p| w[p] < d) else {
            break;
        };
        w[pos] += 1;
        w[pos + 1..].iter_mut().for_each(|x| *x = 1);
    }
    out
}

/// Content `c(i)`: `c_k` counts occurrences of `k` in the word.
pub fn content(word: &[usize], d: usize) -> Vec<u32> {
    let mut c = vec![0; d];
    for &k in word {
        c[k - 1] += 1;
    }
    c
}

fn parity(value: usize, m: usize) -> u8 {
    u8::from(value > m)
}

/// `T` on `v_k ⊗ v_l`.
fn local_t(k: usize, l: usize, m: usize) -> Vec<((usize, usize), LaurentScalar)> {
    let (pk, pl) = (parity(k, m), parity(l, m));
    let sign = if pk * pl == 1 { -LaurentScalar::one() } else { LaurentScalar::one() };
    if k == l {
        let q = LaurentScalar::q();
        let qi = LaurentScalar::q_pow(-1);
        let c = if pk == 0 { q } else { -qi };
        vec![((k, k), c)]
    } else if k < l {
        vec![((l, k), sign), ((k, l), LaurentScalar::q_minus_q_inv())]
    } else {
        vec![((l, k), sign)]
    }
}

fn check_generator(i: usize, r: usize) -> Result<(), HeckeError> {
    if i == 0 || i >= r {
        return Err(HeckeError::IndexOutOfRange { i, r });
    }
    Ok(())
}

/// `π_r(T_i)` applied to a state, acting on factors `i` and `i+1` (1-based).
pub fn apply_generator(i: usize, state: &TensorState, r: usize, m: usize) -> Result<TensorState, HeckeError> {
    check_generator(i, r)?;
    let mut out = TensorState::zero();
    for (w, a) in state.terms() {
        for ((k, l), c) in local_t(w[i - 1], w[i], m) {
            let mut nw = w.clone();
            nw[i - 1] = k;
            nw[i] = l;
            out.add_term(nw, a * &c);
        }
    }
    Ok(out)
}

/// Apply `T_{w_1} ⋯ T_{w_s}` to a state, rightmost generator first.
pub fn apply_word(word: &[usize], state: &TensorState, r: usize, m: usize, _n: usize) -> Result<TensorState, HeckeError> {
    word.iter()
        .rev()
        .try_fold(state.clone(), |s, &i| apply_generator(i, &s, r, m))
}

/// A linear operator on `M^{⊗r}`, stored by columns.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorOperator {
    r: usize,
    m: usize,
    n: usize,
    columns: BTreeMap<Word, TensorState>,
}

impl TensorOperator {
    pub fn from_columns(r: usize, m: usize, n: usize, columns: BTreeMap<Word, TensorState>) -> Self {
        let columns = columns.into_iter().filter(|(_, s)| !s.is_zero()).collect();
        Self { r, m, n, columns }
    }

    fn build<F: Fn(&Word) -> TensorState>(r: usize, m: usize, n: usize, f: F) -> Self {
        let columns = basis_words(r, m + n).into_iter().map(|w| {
            let col = f(&w);
            (w, col)
        });
        Self::from_columns(r, m, n, columns.collect())
    }

    pub fn identity(r: usize, m: usize, n: usize) -> Self {
        Self::build(r, m, n, |w| TensorState::basis(w.clone()))
    }

    pub fn zero(r: usize, m: usize, n: usize) -> Self {
        Self { r, m, n, columns: BTreeMap::new() }
    }

    pub fn column(&self, w: &[usize]) -> TensorState {
        self.columns.get(w).cloned().unwrap_or_default()
    }

    pub fn columns(&self) -> &BTreeMap<Word, TensorState> {
        &self.columns
    }

    pub fn into_columns(self) -> BTreeMap<Word, TensorState> {
        self.columns
    }

    pub fn apply(&self, state: &TensorState) -> TensorState {
        let mut out = TensorState::zero();
        for (w, a) in state.terms() {
            if let Some(col) = self.columns.get(w) {
                for (v, b) in col.terms() {
                    out.add_term(v.clone(), a * b);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let columns = other
            .columns
            .iter()
            .map(|(w, col)| (w.clone(), self.apply(col)))
            .collect();
        Self::from_columns(self.r, self.m, self.n, columns)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut columns = self.columns.clone();
        for (w, col) in &other.columns {
            let merged = columns.get(w).map_or_else(|| col.clone(), |c| c.add(col));
            columns.insert(w.clone(), merged);
        }
        Self::from_columns(self.r, self.m, self.n, columns)
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let columns = self.columns.iter().map(|(w, s)| (w.clone(), s.scale(c))).collect();
        Self::from_columns(self.r, self.m, self.n, columns)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-LaurentScalar::one()))
    }
}

impl fmt::Debug for TensorOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.columns.iter()).finish()
    }
}

/// `π_r(T_i)` as an explicit operator.
pub fn pi_generator(i: usize, r: usize, m: usize, n: usize) -> Result<TensorOperator, HeckeError> {
    check_generator(i, r)?;
    Ok(TensorOperator::build(r, m, n, |w| {
        apply_generator(i, &TensorState::basis(w.clone()), r, m).expect("index checked")
    }))
}

/// `π_r` of a generator word.
pub fn pi_word(word: &[usize], r: usize, m: usize, n: usize) -> Result<TensorOperator, HeckeError> {
    for &i in word {
        check_generator(i, r)?;
    }
    Ok(TensorOperator::build(r, m, n, |w| {
        apply_word(word, &TensorState::basis(w.clone()), r, m, n).expect("indices checked")
    }))
}

/// Generator word of `T_{γ_α}`: for each block of length `a` starting at
/// position `s`, the run `s, s+1, .., s+a-2`.
pub fn gamma_word(alpha: &Composition) -> Vec<usize> {
    let mut out = Vec::new();
    let mut start = 1;
    for &a in alpha.parts() {
        out.extend(start..start + a - 1);
        start += a;
    }
    out
}

/// A polynomial in `z_1..z_{m+n}` with Laurent coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ZPolynomial {
    m: usize,
    n: usize,
    poly: MPoly,
}

impl ZPolynomial {
    pub fn zero(m: usize, n: usize) -> Self {
        Self { m, n, poly: MPoly::zero(m + n) }
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self { m, n, poly: MPoly::one(m + n) }
    }

    pub fn from_mpoly(m: usize, n: usize, poly: MPoly) -> Self {
        assert_eq!(poly.nvars(), m + n);
        Self { m, n, poly }
    }

    pub fn add_term(&mut self, c: Vec<u32>, coeff: LaurentScalar) {
        self.poly.add_term(c, coeff);
    }

    pub fn coeff(&self, c: &[u32]) -> LaurentScalar {
        self.poly.coeff(c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentScalar)> + '_ {
        self.poly.terms()
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { m: self.m, n: self.n, poly: &self.poly * &other.poly }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { m: self.m, n: self.n, poly: &self.poly + &other.poly }
    }

    pub fn map_coeffs<F: FnMut(&LaurentScalar) -> LaurentScalar>(&self, f: F) -> Self {
        Self { m: self.m, n: self.n, poly: self.poly.map_coeffs(f) }
    }

    /// Text form in `z1..z_{m+n}`.
    pub fn render(&self) -> String {
        let names: Vec<String> = (1..=self.m + self.n).map(|k| format!("z{k}")).collect();
        self.poly.render(&names)
    }

    /// Evaluate the coefficients at `q = 1`.
    pub fn at_q_one(&self) -> Self {
        let one = crate::scalar::rat(1);
        self.map_coeffs(|c| LaurentScalar::constant(c.eval(&one).expect("q = 1 is never a pole")))
    }
}

impl fmt::Debug for ZPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[{},{}]({:?})", self.m, self.n, self.poly)
    }
}

#[derive(Serialize, Deserialize)]
struct ZTermJson {
    z: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ZPolyJson {
    m: usize,
    n: usize,
    terms: Vec<ZTermJson>,
}

impl Serialize for ZPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ZPolyJson {
            m: self.m,
            n: self.n,
            terms: self
                .poly
                .terms()
                .rev()
                .map(|(e, c)| ZTermJson { z: e.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let js = ZPolyJson::deserialize(d)?;
        let mut out = Self::zero(js.m, js.n);
        for t in js.terms {
            if t.z.len() != js.m + js.n {
                return Err(D::Error::custom("content length does not match m + n"));
            }
            out.add_term(t.z, t.coeff.parse().map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

/// `tr(D_r π_r(word))`: each basis word contributes its diagonal amplitude
/// times `z^{c(i)}`. The word is applied to one basis state at a time.
pub fn trace_d_pi(word: &[usize], r: usize, m: usize, n: usize) -> Result<ZPolynomial, HeckeError> {
    for &i in word {
        check_generator(i, r)?;
    }
    let d = m + n;
    let contributions: Vec<(Vec<u32>, LaurentScalar)> = basis_words(r, d)
        .into_par_iter()
        .filter_map(|w| {
            let out = apply_word(word, &TensorState::basis(w.clone()), r, m, n).expect("indices checked");
            let a = out.amplitude(&w);
            (!a.is_zero()).then(|| (content(&w, d), a))
        })
        .collect();
    let mut z = ZPolynomial::zero(m, n);
    for (c, a) in contributions {
        z.add_term(c, a);
    }
    Ok(z)
}

/// `z_k -> x_k` for `k <= m` and `z_{m+j} -> -y_j`.
pub fn xy_substitute(p: &ZPolynomial, m: usize, n: usize) -> SuperPoly {
    assert_eq!((p.m, p.n), (m, n), "alphabet sizes differ");
    SuperPoly::from_mpoly(m, n, p.poly.clone()).negate_y()
}

/// Adjacent-pair statistics of an index word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct WordStats {
    /// equal adjacent entries, even
    pub E0: usize,
    /// equal adjacent entries, odd
    pub E1: usize,
    /// strict ascents starting at an even entry
    pub L0: usize,
    /// strict ascents starting at an odd entry
    pub L1: usize,
    pub N0: usize,
    pub N1: usize,
}

impl WordStats {
    pub fn of(word: &[usize], m: usize) -> Self {
        let mut s = Self::default();
        for &k in word {
            if k <= m {
                s.N0 += 1;
            } else {
                s.N1 += 1;
            }
        }
        for w in word.windows(2) {
            let even = w[0] <= m;
            match (w[0] == w[1], w[0] < w[1], even) {
                (true, _, true) => s.E0 += 1,
                (true, _, false) => s.E1 += 1,
                (false, true, true) => s.L0 += 1,
                (false, true, false) => s.L1 += 1,
                _ => {}
            }
        }
        s
    }

    pub fn ascents(&self) -> usize {
        self.L0 + self.L1
    }
}

/// Weakly increasing words of length `k` over `1..=d`.
pub fn increasing_words(k: usize, d: usize) -> Vec<Word> {
    fn go(k: usize, d: usize, lo: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..=d {
            cur.push(v);
            go(k, d, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, d, 1, &mut Vec::new(), &mut out);
    out
}

/// Closed form of `tr(D_k π_k(T_{γ_k}))` as a sum over weakly increasing words
/// with weight `(-1)^{E1} q^{E0 - E1} (q - q^-1)^{L}`.
pub fn prop51_trace(k: usize, m: usize, n: usize) -> ZPolynomial {
    let d = m + n;
    let mut z = ZPolynomial::zero(m, n);
    for w in increasing_words(k, d) {
        let s = WordStats::of(&w, m);
        let mut c = LaurentScalar::q_minus_q_inv()
            .pow(s.ascents() as u32)
            .shift(s.E0 as i32 - s.E1 as i32);
        if s.E1 % 2 == 1 {
            c = -c;
        }
        z.add_term(content(&w, d), c);
    }
    z
}

/// Whether `D_r A = A D_r` with symbolic `z`-weights, i.e. every nonzero
/// matrix entry `A_{ij}` joins words of equal content.
pub fn d_commutes_with(op: &TensorOperator) -> bool {
    let d = op.m + op.n;
    op.columns.iter().all(|(j, col)| {
        let cj = content(j, d);
        col.terms().all(|(i, _)| content(i, d) == cj)
    })
}

/// `D_r` commutes with every `π_r(T_i)`.
pub fn d_commutes(r: usize, m: usize, n: usize) -> bool {
    (1..r).all(|i| d_commutes_with(&pi_generator(i, r, m, n).expect("index in range")))
}
