//! Exact coefficient arithmetic: Laurent polynomials in one parameter `q`
//! with arbitrary-precision rational coefficients, and reduced fractions of
//! them.
//!
//! Every coefficient in the crate lives in [`LaurentScalar`]. Fractions
//! ([`ScalarFraction`]) appear only where an intermediate value genuinely
//! leaves the Laurent ring (power-sum coefficients carry `1/(q - q^-1)`
//! factors); results that must be Laurent polynomials are brought back with
//! [`ScalarFraction::into_laurent`], which fails loudly rather than returning
//! a fraction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("exact division failed: {dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("cannot substitute q = 0 into a Laurent polynomial with negative exponents")]
    ZeroSubstitution,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {input:?} as a Laurent polynomial: {reason}")]
    Parse { input: String, reason: String },
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Target of a ring homomorphism applied to `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substitution {
    /// `q -> q^k`, `k != 0`.
    Power(i32),
    /// `q -> c * q^k`.
    Monomial(Rational, i32),
    /// `q -> value`, value nonzero.
    Value(Rational),
}

/// Laurent polynomial in `q` over the rationals.
///
/// Sparse: the map holds only nonzero coefficients, so the empty map is zero
/// and structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The parameter `q` itself.
    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q - q^-1`, the quantum factor that appears throughout.
    pub fn q_minus_q_inv() -> Self {
        Self::from_terms([(1, rat(1)), (-1, rat(-1))])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exp: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// The constant value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// True when every coefficient is an integer, i.e. the value lies in
    /// `Z[q, q^-1]`.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`ScalarError::NotDivisible`] when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a_shift, a) = to_dense(self);
        let (b_shift, b) = to_dense(divisor);
        let (quot, rem) = poly_divrem(&a, &b);
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ScalarError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(from_dense(a_shift - b_shift, &quot))
    }

    /// Image under a ring homomorphism of `q`; returns a Laurent polynomial
    /// (a constant one for [`Substitution::Value`]).
    pub fn subst(&self, target: &Substitution) -> Result<Self, ScalarError> {
        match target {
            Substitution::Power(k) => Ok(self.subst_monomial(&Rational::one(), *k)),
            Substitution::Monomial(c, k) => {
                if c.is_zero() {
                    return Err(ScalarError::ZeroSubstitution);
                }
                Ok(self.subst_monomial(c, *k))
            }
            Substitution::Value(v) => self.eval(v).map(Self::constant),
        }
    }

    /// `q -> q^k`.
    pub fn subst_power(&self, k: i32) -> Self {
        self.subst_monomial(&Rational::one(), k)
    }

    /// `q -> c * q^k`; `c` must be nonzero.
    pub fn subst_monomial(&self, c: &Rational, k: i32) -> Self {
        assert!(!c.is_zero(), "monomial substitution needs a unit");
        let mut out = Self::zero();
        for (&e, v) in &self.terms {
            out.add_term(e * k, v * rational_pow(c, e));
        }
        out
    }

    /// Evaluate at a nonzero rational `q = value`.
    pub fn eval(&self, value: &Rational) -> Result<Rational, ScalarError> {
        if value.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(ScalarError::ZeroSubstitution);
            }
            return Ok(self.coeff(0));
        }
        Ok(self
            .terms
            .iter()
            .fold(Rational::zero(), |acc, (&e, c)| acc + c * rational_pow(value, e)))
    }
}

fn rational_pow(base: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

// Dense ascending coefficient vectors over Q; used for division and gcd.

fn to_dense(a: &LaurentScalar) -> (i32, Vec<Rational>) {
    let lo = a.min_exp().unwrap_or(0);
    let hi = a.max_exp().unwrap_or(0);
    let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (&e, c) in &a.terms {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

fn from_dense(shift: i32, v: &[Rational]) -> LaurentScalar {
    LaurentScalar::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (shift + i as i32, c.clone())),
    )
}

fn trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut b = b.to_vec();
    trim(&mut b);
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let lead = b.last().expect("nonempty divisor").clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(b.len() - 1);
    if rem.is_empty() {
        rem.push(Rational::zero());
    }
    (quot, rem)
}

fn is_zero_poly(v: &[Rational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Monic gcd of two dense polynomials (not both zero).
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
        trim(&mut y);
    }
    let lead = x.last().cloned().unwrap_or_else(Rational::one);
    x.iter().map(|c| c / &lead).collect()
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({self})")
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

impl FromStr for LaurentScalar {
    type Err = ScalarError;

    /// Parses the canonical rendering, e.g. `q^2 - 1 + q^-2` or `-1/2*q`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: &str| ScalarError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut cur = Cursor {
            s: compact.as_bytes(),
            pos: 0,
        };
        let mut out = Self::zero();
        let mut first = true;
        while cur.peek().is_some() {
            let mut sign = 1;
            if cur.eat(b'-') {
                sign = -1;
            } else if !cur.eat(b'+') && !first {
                return Err(err("expected '+' or '-' between terms"));
            }
            first = false;
            let mut coeff = Rational::one();
            let mut has_coeff = false;
            if let Some(num) = cur.digits() {
                let num: BigInt = num.parse().unwrap();
                let mut c = Rational::from_integer(num);
                if cur.eat(b'/') {
                    let den: BigInt = cur
                        .digits()
                        .ok_or_else(|| err("missing denominator"))?
                        .parse()
                        .unwrap();
                    if den.is_zero() {
                        return Err(err("zero denominator"));
                    }
                    c /= Rational::from_integer(den);
                }
                coeff = c;
                has_coeff = true;
            }
            let star = cur.eat(b'*');
            let mut exp = 0;
            if cur.eat(b'q') {
                exp = 1;
                if cur.eat(b'^') {
                    let neg = cur.eat(b'-');
                    let e: i32 = cur
                        .digits()
                        .ok_or_else(|| err("missing exponent"))?
                        .parse()
                        .map_err(|_| err("exponent out of range"))?;
                    exp = if neg { -e } else { e };
                }
            } else if star || !has_coeff {
                return Err(err("expected a coefficient or q"));
            }
            out.add_term(exp, coeff * rat(sign));
        }
        Ok(out)
    }
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LaurentVisitor;

        impl<'de> Visitor<'de> for LaurentVisitor {
            type Value = LaurentScalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = LaurentScalar::zero();
                while let Some((e, c)) = access.next_entry::<String, String>()? {
                    let e: i32 = e.parse().map_err(de::Error::custom)?;
                    let c: Rational = c.parse().map_err(de::Error::custom)?;
                    out.add_term(e, c);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(LaurentVisitor)
    }
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentScalar> for LaurentScalar {
    fn sub_assign(&mut self, rhs: &LaurentScalar) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentScalar> for LaurentScalar {
    fn mul_assign(&mut self, rhs: &LaurentScalar) {
        *self = &*self * rhs;
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { (&self).$m(&rhs) }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(LaurentScalar, Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl std::iter::Sum for LaurentScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Element of the fraction field of `Q[q, q^-1]` in canonical form.
///
/// The denominator has lowest exponent 0 and is monic, and numerator and
/// denominator are coprime, so structural equality decides field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarFraction {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl ScalarFraction {
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (a_shift, a) = to_dense(&num);
        let (b_shift, b) = to_dense(&den);
        let g = poly_gcd(&a, &b);
        let (a, _) = poly_divrem(&a, &g);
        let (b, _) = poly_divrem(&b, &g);
        let lead = b.iter().rev().find(|c| !c.is_zero()).unwrap().clone();
        let a: Vec<Rational> = a.iter().map(|c| c / &lead).collect();
        let b: Vec<Rational> = b.iter().map(|c| c / &lead).collect();
        // q-powers are units; all of them move into the numerator.
        Ok(Self {
            num: from_dense(a_shift - b_shift, &a),
            den: from_dense(0, &b),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentScalar::zero(),
            den: LaurentScalar::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentScalar::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from(LaurentScalar::constant(c))
    }

    pub fn num(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn den(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Exact conversion back to the Laurent ring.
    pub fn into_laurent(self) -> Result<LaurentScalar, ScalarError> {
        if self.den.is_one() {
            return Ok(self.num);
        }
        self.num.div_exact(&self.den)
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_laurent(&self, c: &LaurentScalar) -> Self {
        Self::new(&self.num * c, self.den.clone()).expect("nonzero denominator")
    }

    pub fn subst_monomial(&self, c: &Rational, k: i32) -> Self {
        Self::new(self.num.subst_monomial(c, k), self.den.subst_monomial(c, k))
            .expect("monomial substitution keeps denominators nonzero")
    }
}

impl Default for ScalarFraction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentScalar> for ScalarFraction {
    fn from(num: LaurentScalar) -> Self {
        Self {
            num,
            den: LaurentScalar::one(),
        }
    }
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarFraction({self})")
    }
}

impl FromStr for ScalarFraction {
    type Err = ScalarError;

    /// Accepts `num` or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((num, den)) = rest.split_once(")/(") {
                if let Some(den) = den.strip_suffix(')') {
                    return Self::new(num.parse()?, den.parse()?);
                }
            }
        }
        Ok(Self::from(s.parse::<LaurentScalar>()?))
    }
}

impl Add for &ScalarFraction {
    type Output = ScalarFraction;
    fn add(self, rhs: &ScalarFraction) -> ScalarFraction {
        if self.den == rhs.den {
            return ScalarFraction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        ScalarFraction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &ScalarFraction {
    type Output = ScalarFraction;
    fn sub(self, rhs: &ScalarFraction) -> ScalarFraction {
        self + &(-rhs)
    }
}

impl Mul for &ScalarFraction {
    type Output = ScalarFraction;
    fn mul(self, rhs: &ScalarFraction) -> ScalarFraction {
        if self.is_zero() || rhs.is_zero() {
            return ScalarFraction::zero();
        }
        ScalarFraction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Neg for &ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        ScalarFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(ScalarFraction, Add::add, Sub::sub, Mul::mul);

impl Neg for ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        -&self
    }
}

impl AddAssign<&ScalarFraction> for ScalarFraction {
    fn add_assign(&mut self, rhs: &ScalarFraction) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for ScalarFraction {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}
