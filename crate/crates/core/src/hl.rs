//! Hall–Littlewood functions.
//!
//! The parameter `t` is passed as a [`LaurentScalar`] in `q`: `t = q` is the
//! generic parameter, while `t = q^-2` (or any other Laurent monomial) gives
//! the substituted families needed for Hecke characters.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mpoly::{Exponent, MPoly, PolyError};
use crate::partition::{partitions_of, ssyt_enumerate, Partition, PartitionError, SkewShape};
use crate::scalar::{LaurentScalar, Rational, ScalarError, ScalarFraction};
use crate::symring::{Basis, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HlError {
    #[error(transparent)]
    Shape(#[from] PartitionError),
    #[error("symmetrization did not reduce to a polynomial: {0}")]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `1 - t^k`.
fn one_minus_pow(t: &LaurentScalar, k: usize) -> LaurentScalar {
    &LaurentScalar::one() - &t.pow(k as u32)
}

/// `φ_r(t) = Π_{i=1}^r (1 - t^i)`.
pub fn phi(r: usize, t: &LaurentScalar) -> LaurentScalar {
    (1..=r).fold(LaurentScalar::one(), |acc, i| &acc * &one_minus_pow(t, i))
}

/// `v_m(t) = Π_{i=1}^m (1 - t^i)/(1 - t)`, computed as a product of
/// `t`-integers so it is defined at every `t`.
pub fn v_m(m: usize, t: &LaurentScalar) -> LaurentScalar {
    (1..=m).fold(LaurentScalar::one(), |acc, i| {
        let t_int: LaurentScalar = (0..i).map(|j| t.pow(j as u32)).sum();
        &acc * &t_int
    })
}

/// Structure coefficients of `P_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HLCoeffs {
    /// `b_λ(t) = Π_i φ_{m_i(λ)}(t)`.
    pub b: LaurentScalar,
    /// `Π_{i>=1} v_{m_i(λ)}(t)`. The symmetrization in `m` variables divides
    /// by this times `v_{m - l(λ)}(t)` for the zero parts.
    pub v: LaurentScalar,
    /// `φ_{m_i(λ)}(t)` for each distinct part `i`, increasing `i`.
    pub phi_list: Vec<LaurentScalar>,
}

pub fn hl_coeffs(lambda: &Partition, t: &LaurentScalar) -> HLCoeffs {
    let mults = lambda.multiplicities();
    let phi_list: Vec<LaurentScalar> = mults.values().map(|&m| phi(m, t)).collect();
    let b = phi_list.iter().fold(LaurentScalar::one(), |acc, x| &acc * x);
    let v = mults.values().fold(LaurentScalar::one(), |acc, &m| &acc * &v_m(m, t));
    HLCoeffs { b, v, phi_list }
}

/// `q_r(·; t) = Σ_{λ⊢r} z_λ^{-1} Π_i (1 - t^{λ_i}) p_λ`, read off from
/// `log Q(u) = Σ_r (1 - t^r) p_r u^r / r`.
pub fn hl_q_row(r: usize, t: &LaurentScalar) -> SymFunc {
    SymFunc::from_terms(
        Basis::P,
        partitions_of(r).into_iter().map(|lambda| {
            let num = lambda
                .parts()
                .iter()
                .fold(LaurentScalar::one(), |acc, &k| &acc * &one_minus_pow(t, k));
            let c = ScalarFraction::from(num).scale(&Rational::new(BigInt::one(), lambda.zed()));
            (lambda, c)
        }),
    )
}

/// `q_μ = Π_i q_{μ_i}`.
pub fn hl_q_lambda(mu: &Partition, t: &LaurentScalar) -> SymFunc {
    mu.parts()
        .iter()
        .fold(SymFunc::one(), |acc, &k| acc.mul(&hl_q_row(k, t)))
}

/// `q̃_r(·; q) = q^r q_r(·; q^-2)`.
pub fn hl_tilde_q(r: usize) -> SymFunc {
    hl_q_row(r, &LaurentScalar::q_pow(-2)).scale_laurent(&LaurentScalar::q_pow(r as i32))
}

/// The monomial-basis form
/// `q̃_r = q^r Σ_{λ⊢r} ((q - q^-1)/q)^{l(λ)} m_λ = Σ_λ q^{r-l(λ)} (q - q^-1)^{l(λ)} m_λ`.
pub fn hl_tilde_q_monomial_form(r: usize) -> SymFunc {
    if r == 0 {
        return SymFunc::scalar(Basis::M, ScalarFraction::one());
    }
    SymFunc::from_terms(
        Basis::M,
        partitions_of(r).into_iter().map(|lambda| {
            let l = lambda.len();
            let c = LaurentScalar::q_minus_q_inv()
                .pow(l as u32)
                .shift((r - l) as i32);
            (lambda, ScalarFraction::from(c))
        }),
    )
}

/// A polynomial in a fixed number of concrete variables, coefficients in `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct ConcretePoly {
    poly: MPoly,
}

impl ConcretePoly {
    pub fn new(poly: MPoly) -> Self {
        Self { poly }
    }

    pub fn zero(vars: usize) -> Self {
        Self::new(MPoly::zero(vars))
    }

    pub fn vars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.poly.is_symmetric_in(0..self.vars())
    }

    /// Read off monomial-basis coefficients from the dominant exponents.
    /// Only meaningful for symmetric polynomials.
    pub fn to_monomial_basis(&self) -> SymFunc {
        SymFunc::from_terms(
            Basis::M,
            self.poly
                .terms()
                .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
                .map(|(e, c)| {
                    let p = Partition::from_unsorted(e.iter().map(|&d| d as usize).collect());
                    (p, ScalarFraction::from(c.clone()))
                }),
        )
    }

    /// The monomial symmetric polynomial `m_λ` in `vars` variables.
    pub fn monomial_symmetric(lambda: &Partition, vars: usize) -> Self {
        let mut out = MPoly::zero(vars);
        if lambda.len() <= vars {
            let mut exp: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
            exp.resize(vars, 0);
            for e in distinct_permutations(&exp) {
                out.add_term(e, LaurentScalar::one());
            }
        }
        Self::new(out)
    }
}

impl fmt::Debug for ConcretePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConcretePoly[{}]({:?})", self.vars(), self.poly)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ConcreteTermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct ConcretePolyJson {
    vars: usize,
    terms: Vec<ConcreteTermJson>,
}

impl Serialize for ConcretePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConcretePolyJson {
            vars: self.vars(),
            terms: self
                .poly
                .terms()
                .rev()
                .map(|(e, c)| ConcreteTermJson {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConcretePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let js = ConcretePolyJson::deserialize(d)?;
        let mut poly = MPoly::zero(js.vars);
        for t in js.terms {
            if t.exp.len() != js.vars {
                return Err(D::Error::custom("exponent length does not match vars"));
            }
            poly.add_term(t.exp, t.coeff.parse().map_err(D::Error::custom)?);
        }
        Ok(Self::new(poly))
    }
}

pub(crate) fn distinct_permutations(v: &[u32]) -> Vec<Exponent> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    loop {
        let n = sorted.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// All permutations of `0..n` with their signs.
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if cur.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `P_λ(x_1..x_m; t)` by symmetrizing `x^λ Π_{i<j} (x_i - t x_j)/(x_i - x_j)`.
///
/// The Vandermonde denominator is cleared symbolically: the alternating sum
/// of the numerators is divided exactly by `Π_{i<j}(x_i - x_j)`, then by the
/// normalizing factor `Π_{i>=0} v_{m_i}(t)` (with `m_0 = m - l(λ)`).
pub fn hl_p_concrete(lambda: &Partition, m: usize, t: &LaurentScalar) -> Result<ConcretePoly, HlError> {
    if lambda.len() > m {
        return Ok(ConcretePoly::zero(m));
    }
    let x = |i| MPoly::var(m, i);
    let mut exp: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
    exp.resize(m, 0);
    let mut numerator = MPoly::monomial(exp, LaurentScalar::one());
    let mut vandermonde = MPoly::one(m);
    for i in 0..m {
        for j in i + 1..m {
            numerator = &numerator * &(&x(i) - &x(j).scale(t));
            vandermonde = &vandermonde * &(&x(i) - &x(j));
        }
    }
    let mut alternant = MPoly::zero(m);
    for (perm, sign) in signed_permutations(m) {
        let moved = numerator.permute_vars(&perm);
        if sign > 0 {
            alternant += &moved;
        } else {
            alternant -= &moved;
        }
    }
    let symmetric = alternant.div_exact(&vandermonde)?;
    let norm = &hl_coeffs(lambda, t).v * &v_m(m - lambda.len(), t);
    Ok(ConcretePoly::new(symmetric.div_scalar_exact(&norm)?))
}

/// `ψ_{λ/μ}(t) = Π_{j ∈ J} (1 - t^{m_j(μ)})` for a horizontal strip
/// `θ = λ/μ`, where `J` holds the columns `j` with `θ'_j < θ'_{j+1}`.
pub fn psi_strip(outer: &Partition, inner: &Partition, t: &LaurentScalar) -> LaurentScalar {
    let (oc, ic) = (outer.conjugate(), inner.conjugate());
    let theta = |j: usize| oc.part(j) - ic.part(j);
    let cols = outer.part(1);
    (1..=cols)
        .filter(|&j| theta(j) < theta(j + 1))
        .fold(LaurentScalar::one(), |acc, j| {
            &acc * &one_minus_pow(t, inner.multiplicity(j))
        })
}

/// `P_{λ/μ}(x_1..x_m; t) = Σ_T ψ_T(t) x^T` over semistandard fillings of
/// the skew shape with entries at most `m`.
pub fn hl_skew_p(outer: &Partition, inner: &Partition, m: usize, t: &LaurentScalar) -> Result<ConcretePoly, HlError> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let mut out = MPoly::zero(m);
    for filling in ssyt_enumerate(&shape, m) {
        let chain = filling
            .strip_chain(&shape, m)
            .expect("semistandard fillings decompose into horizontal strips");
        let weight = chain
            .windows(2)
            .fold(LaurentScalar::one(), |acc, w| &acc * &psi_strip(&w[1], &w[0], t));
        let exp = filling.content(m).into_iter().map(|c| c as u32).collect();
        out.add_term(exp, weight);
    }
    Ok(ConcretePoly::new(out))
}

/// `P_λ(·; t)` as an element of the abstract ring, in the monomial basis.
///
/// Computed from the tableau sum `P_λ = P_{λ/∅}` in `|λ|` variables, which
/// is enough to see every `m_ν` with `ν ⊢ |λ|`.
pub fn hl_p_abstract(lambda: &Partition, t: &LaurentScalar) -> Result<SymFunc, HlError> {
    hl_skew_p_abstract(lambda, &Partition::empty(), t)
}

/// `Q_λ(·; t) = b_λ(t) P_λ(·; t)`.
pub fn hl_big_q_abstract(lambda: &Partition, t: &LaurentScalar) -> Result<SymFunc, HlError> {
    Ok(hl_p_abstract(lambda, t)?.scale_laurent(&hl_coeffs(lambda, t).b))
}

/// `P_{λ/μ}(·; t)` as an element of the abstract ring, in the monomial basis.
pub fn hl_skew_p_abstract(outer: &Partition, inner: &Partition, t: &LaurentScalar) -> Result<SymFunc, HlError> {
    let d = outer.size().saturating_sub(inner.size());
    Ok(hl_skew_p(outer, inner, d, t)?.to_monomial_basis())
}

/// Multiply every variable by `w`: `f(x) -> f(w x)`.
pub fn scale_variables(p: &ConcretePoly, w: &LaurentScalar) -> ConcretePoly {
    ConcretePoly::new(p.poly.scale_vars(&vec![w.clone(); p.vars()]))
}

/// Monomial-basis coefficients of a concrete symmetric polynomial as a map.
pub fn monomial_coefficients(p: &ConcretePoly) -> BTreeMap<Partition, LaurentScalar> {
    p.to_monomial_basis()
        .terms()
        .map(|(k, c)| (k.clone(), c.clone().into_laurent().expect("polynomial coefficients")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t() -> LaurentScalar {
        LaurentScalar::q()
    }

    fn l(s: &str) -> LaurentScalar {
        s.parse().unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let c = hl_coeffs(&part(&[1, 1]), &t());
        assert_eq!(c.b, &l("1 - q") * &l("1 - q^2"));
        assert_eq!(v_m(2, &t()), l("1 + q"));
        assert_eq!(phi(1, &t()), l("1 - q"));
        assert_eq!(hl_coeffs(&part(&[2, 1, 1]), &t()).phi_list.len(), 2);
    }

    #[test]
    fn q_row_examples() {
        assert_eq!(hl_q_row(0, &t()), SymFunc::one());
        let q2 = hl_q_row(2, &t());
        let half = ScalarFraction::from_rational(ratio(1, 2));
        assert_eq!(q2.coeff(&part(&[2])), ScalarFraction::from(l("1 - q^2")).scale(&ratio(1, 2)));
        assert_eq!(q2.coeff(&part(&[1, 1])), &ScalarFraction::from(l("1 - q").pow(2)) * &half);
        let h3 = SymFunc::of(Basis::H, &[3]).to_p();
        assert_eq!(hl_q_row(3, &LaurentScalar::zero()), h3);
    }

    #[test]
    fn q_lambda_examples() {
        assert_eq!(hl_q_lambda(&Partition::empty(), &t()), SymFunc::one());
        let q11 = hl_q_lambda(&part(&[1, 1]), &t());
        assert_eq!(
            q11,
            SymFunc::from_terms(Basis::P, [(part(&[1, 1]), ScalarFraction::from(l("1 - q").pow(2)))])
        );
        let q21 = hl_q_lambda(&part(&[2, 1]), &t());
        let expect = hl_q_row(2, &t()).mul(&hl_q_row(1, &t()));
        assert_eq!(q21, expect);
    }

    #[test]
    fn p_concrete_examples() {
        let p1 = hl_p_concrete(&part(&[1]), 2, &t()).unwrap();
        assert_eq!(p1, ConcretePoly::monomial_symmetric(&part(&[1]), 2));
        let p2 = hl_p_concrete(&part(&[2]), 2, &t()).unwrap();
        let expect = &ConcretePoly::monomial_symmetric(&part(&[2]), 2).poly
            + &ConcretePoly::monomial_symmetric(&part(&[1, 1]), 2).poly.scale(&l("1 - q"));
        assert_eq!(p2.poly(), &expect);
        assert!(hl_p_concrete(&part(&[1, 1, 1]), 2, &t()).unwrap().is_zero());
        // P_(1,1) = e_2 in any number of variables
        let p11 = hl_p_concrete(&part(&[1, 1]), 3, &t()).unwrap();
        assert_eq!(p11, ConcretePoly::monomial_symmetric(&part(&[1, 1]), 3));
    }

    #[test]
    fn p_concrete_at_t_zero_is_schur() {
        let s21 = SymFunc::of(Basis::S, &[2, 1]).convert(Basis::M);
        let p21 = hl_p_abstract(&part(&[2, 1]), &LaurentScalar::zero()).unwrap();
        assert_eq!(p21, s21);
    }

    #[test]
    fn skew_examples() {
        let one = hl_skew_p(&part(&[3]), &part(&[3]), 2, &t()).unwrap();
        assert_eq!(one.poly(), &MPoly::one(2));
        let s = hl_skew_p(&part(&[2]), &part(&[1]), 2, &t()).unwrap();
        assert_eq!(s.poly(), &ConcretePoly::monomial_symmetric(&part(&[1]), 2).poly.scale(&l("1 - q")));
        let s = hl_skew_p(&part(&[3]), &part(&[1]), 2, &t()).unwrap();
        let expect = &ConcretePoly::monomial_symmetric(&part(&[2]), 2).poly.scale(&l("1 - q"))
            + &ConcretePoly::monomial_symmetric(&part(&[1, 1]), 2).poly.scale(&l("1 - q").pow(2));
        assert_eq!(s.poly(), &expect);
        assert!(matches!(
            hl_skew_p(&part(&[1]), &part(&[2]), 2, &t()),
            Err(HlError::Shape(PartitionError::ShapeError { .. }))
        ));
    }

    #[test]
    fn tilde_q_examples() {
        assert_eq!(hl_tilde_q(0), SymFunc::one());
        let q1 = hl_tilde_q(1);
        assert_eq!(q1, SymFunc::from_terms(Basis::P, [(part(&[1]), ScalarFraction::from(l("q - q^-1")))]));
        let q2 = hl_tilde_q(2);
        let expect = hl_q_row(2, &l("q^-2")).scale_laurent(&l("q^2"));
        assert_eq!(q2, expect);
        assert!(hl_tilde_q_monomial_form(2).same_element(&q2));
    }

    #[test]
    fn concrete_json() {
        let p = hl_p_concrete(&part(&[1]), 2, &t()).unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"vars":2,"terms":[{"exp":[1,0],"coeff":"1"},{"exp":[0,1],"coeff":"1"}]}"#);
        let back: ConcretePoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
