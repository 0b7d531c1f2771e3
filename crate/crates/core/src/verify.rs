//! Verification suites: each check is an exact symbolic equality.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frobenius::{char_table, char_value, frobenius_element, specialize_table_q1, verify_super_frobenius, FrobeniusError};
use crate::heckesim::{d_commutes, gamma_word, pi_generator, prop51_trace, trace_d_pi, xy_substitute, HeckeError, TensorOperator, ZPolynomial};
use crate::hl::{hl_big_q_abstract, hl_p_abstract, hl_p_concrete, hl_q_lambda, hl_q_row, hl_skew_p, hl_tilde_q, hl_tilde_q_monomial_form, scale_variables, ConcretePoly, HlError};
use crate::partition::{compositions_of, hook_set, kostka, partitions_of, Composition, Partition};
use crate::scalar::{rat, LaurentScalar, ScalarFraction};
use crate::superring::{specialize_super, super_gen, super_hl_p, super_power_sum, super_schur, SchurMethod, SuperError, SuperGen, SuperPoly};
use crate::symring::{inner_hl, mn_character, Basis, SymError, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
    #[error(transparent)]
    Super(#[from] SuperError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Hl(#[from] HlError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Self { name: name.into(), passed, detail }
    }

    /// A check comparing two values, recording both on failure.
    pub fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        let ok = lhs == rhs;
        Self::new(name, ok, (!ok).then(|| format!("lhs: {lhs:?}\nrhs: {rhs:?}")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(if c.passed { "PASS " } else { "FAIL " });
            out.push_str(&c.name);
            out.push('\n');
            if let Some(d) = &c.detail {
                for line in d.lines() {
                    out.push_str("    ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    checks: Vec<Check>,
    passed: bool,
}

impl Serialize for Report {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportJson { checks: self.checks.clone(), passed: self.passed() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Report {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Report { checks: ReportJson::deserialize(d)?.checks })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    IdentitiesSec2,
    HeckeRelations,
    Prop51,
    Frobenius,
    Q1Specialization,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["identities-sec2", "hecke-relations", "prop51", "frobenius", "q1-specialization", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::IdentitiesSec2 => "identities-sec2",
            Suite::HeckeRelations => "hecke-relations",
            Suite::Prop51 => "prop51",
            Suite::Frobenius => "frobenius",
            Suite::Q1Specialization => "q1-specialization",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "identities-sec2" => Suite::IdentitiesSec2,
            "hecke-relations" => Suite::HeckeRelations,
            "prop51" => Suite::Prop51,
            "frobenius" => Suite::Frobenius,
            "q1-specialization" => Suite::Q1Specialization,
            "all" => Suite::All,
            other => return Err(VerifyError::UnknownSuite(other.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Run a suite. `r` is the degree (an upper bound for the identity suites),
/// `m` and `n` the alphabet sizes.
pub fn run_suite(suite: Suite, r: usize, m: usize, n: usize) -> Result<Report, VerifyError> {
    match suite {
        Suite::IdentitiesSec2 => identities_sec2(r, m, n),
        Suite::HeckeRelations => hecke_relations(r, m, n),
        Suite::Prop51 => prop51_suite(r, m, n),
        Suite::Frobenius => frobenius_suite(r, m, n),
        Suite::Q1Specialization => q1_specialization(r),
        Suite::All => {
            let mut all = Report::new();
            for s in [
                Suite::IdentitiesSec2,
                Suite::HeckeRelations,
                Suite::Prop51,
                Suite::Frobenius,
                Suite::Q1Specialization,
            ] {
                all.extend(run_suite(s, r, m, n)?);
            }
            Ok(all)
        }
    }
}

fn t() -> LaurentScalar {
    LaurentScalar::q()
}

fn one_minus_t() -> LaurentScalar {
    &LaurentScalar::one() - &t()
}

/// `Σ_{λ⊢k} p_λ / z_λ`.
pub fn h_from_power_sums(k: usize) -> SymFunc {
    SymFunc::from_terms(
        Basis::P,
        partitions_of(k).into_iter().map(|l| {
            let z = l.zed();
            (l, ScalarFraction::from_rational(crate::scalar::Rational::new(1.into(), z)))
        }),
    )
}

/// `Σ_μ χ^λ(μ) p_μ / z_μ` with the Murnaghan–Nakayama characters.
pub fn schur_from_characters(lambda: &Partition) -> Result<SymFunc, SymError> {
    let terms = partitions_of(lambda.size())
        .into_iter()
        .map(|mu| {
            let chi = mn_character(lambda, &mu)?;
            let c = crate::scalar::Rational::new(chi.into(), mu.zed());
            Ok((mu, ScalarFraction::from_rational(c)))
        })
        .collect::<Result<Vec<_>, SymError>>()?;
    Ok(SymFunc::from_terms(Basis::P, terms))
}

/// `e_k` at `(n, m)` evaluated at `(-y, -x)`, as a polynomial in `(m, n)`.
pub fn e_dual(k: usize, m: usize, n: usize) -> SuperPoly {
    super_gen(&SuperGen::E, k, n, m).negate_x().negate_y().swap_alphabets()
}

fn monomial_sum(k: usize, vars: usize) -> ConcretePoly {
    let mut out = crate::mpoly::MPoly::zero(vars);
    for nu in partitions_of(k) {
        let c = one_minus_t().pow(nu.len() as u32);
        out += &ConcretePoly::monomial_symmetric(&nu, vars).poly().scale(&c);
    }
    ConcretePoly::new(out)
}

pub fn identities_sec2(r: usize, m: usize, n: usize) -> Result<Report, VerifyError> {
    let mut rep = Report::new();
    for k in 1..=r {
        rep.push(Check::equal(
            format!("h_{k}(x/y) = sum p_l/z_l (m={m}, n={n})"),
            &super_gen(&SuperGen::H, k, m, n),
            &specialize_super(&h_from_power_sums(k), m, n)?,
        ));
        rep.push(Check::equal(
            format!("h_{k}(x/y) = e_{k}(-y/-x) (m={m}, n={n})"),
            &super_gen(&SuperGen::H, k, m, n),
            &e_dual(k, m, n),
        ));
        let hooks = hook_set(m, n, k);
        for lambda in partitions_of(k) {
            let cancel = super_schur(&lambda, m, n, SchurMethod::Cancel);
            rep.push(Check::equal(
                format!("s_{lambda}(x/y): Jacobi-Trudi = cancellation (m={m}, n={n})"),
                &super_schur(&lambda, m, n, SchurMethod::JacobiTrudi),
                &cancel,
            ));
            rep.push(Check::new(
                format!("s_{lambda}(x/y) vanishes iff outside the ({m},{n}) hook"),
                cancel.is_zero() != hooks.contains(&lambda),
                None,
            ));
            rep.push(Check::equal(
                format!("s_{lambda}(x/y) = sum chi p_mu/z_mu (m={m}, n={n})"),
                &cancel,
                &specialize_super(&schur_from_characters(&lambda)?, m, n)?,
            ));
        }
        for j in 0..=k {
            let skew = hl_skew_p(&Partition::row(k), &Partition::row(j), m, &t())?;
            let expect = if j == 0 {
                hl_p_concrete(&Partition::row(k), m, &t())?
            } else if j == k {
                ConcretePoly::new(crate::mpoly::MPoly::one(m))
            } else {
                let p = hl_p_concrete(&Partition::row(k - j), m, &t())?;
                ConcretePoly::new(p.poly().scale(&one_minus_t()))
            };
            rep.push(Check::equal(format!("P_({k})/({j}) in {m} variables"), &skew, &expect));
            if 0 < j && j < k {
                rep.push(Check::equal(
                    format!("P_({k})/({j}) = sum (1-t)^l m_nu in {m} variables"),
                    &skew,
                    &monomial_sum(k - j, m),
                ));
            }
        }
        let omega_p = hl_p_abstract(&Partition::row(k), &t())?.omega();
        let lhs = specialize_super(&omega_p, m, 0)?;
        let t_inv = LaurentScalar::q_pow(-1);
        let sign = if k % 2 == 1 { LaurentScalar::one() } else { -LaurentScalar::one() };
        let rhs = scale_variables(&hl_p_concrete(&Partition::row(k), m, &t_inv)?, &t());
        let rhs = SuperPoly::from_mpoly(m, 0, rhs.poly().scale(&(&sign * &t_inv)));
        rep.push(Check::equal(format!("omega P_({k}) in {m} variables"), &lhs, &rhs));

        let qrow = super_gen(&SuperGen::QRow(t()), k, m, n);
        rep.push(Check::equal(
            format!("(1-t) P_({k})(x/y) = q_{k}(x/y) (m={m}, n={n})"),
            &super_hl_p(&Partition::row(k), m, n, &t())?.scale(&one_minus_t()),
            &qrow,
        ));
        rep.push(Check::equal(
            format!("q_{k}(x/y) from the product = specialized power-sum form (m={m}, n={n})"),
            &qrow,
            &specialize_super(&hl_q_row(k, &t()), m, n)?,
        ));
        rep.push(Check::equal(
            format!("q_{k}(x; t) = (1-t) P_({k})(x; t) in {m} variables"),
            specialize_super(&hl_q_row(k, &t()), m, 0)?.poly(),
            &hl_p_concrete(&Partition::row(k), m, &t())?.poly().scale(&one_minus_t()),
        ));
        rep.push(Check::new(
            format!("tilde q_{k}: monomial form = q^{k} q_{k}(.; q^-2)"),
            hl_tilde_q_monomial_form(k).same_element(&hl_tilde_q(k)),
            None,
        ));
        rep.extend(hl_duality(k)?);
    }
    Ok(rep)
}

/// `⟨q_λ, m_μ⟩_t = δ_{λμ}` and `⟨P_λ, Q_μ⟩_t = δ_{λμ}` for `λ, μ ⊢ k`.
pub fn hl_duality(k: usize) -> Result<Report, VerifyError> {
    let mut rep = Report::new();
    let parts = partitions_of(k);
    let ps: Vec<SymFunc> = parts.iter().map(|l| hl_p_abstract(l, &t())).collect::<Result<_, _>>()?;
    let qs: Vec<SymFunc> = parts.iter().map(|l| hl_big_q_abstract(l, &t())).collect::<Result<_, _>>()?;
    for (i, lambda) in parts.iter().enumerate() {
        let ql = hl_q_lambda(lambda, &t());
        for (j, mu) in parts.iter().enumerate() {
            let delta = if i == j { ScalarFraction::one() } else { ScalarFraction::zero() };
            rep.push(Check::equal(
                format!("<q_{lambda}, m_{mu}>_t"),
                &inner_hl(&ql, &SymFunc::basis_element(Basis::M, mu.clone()), &t())?,
                &delta,
            ));
            rep.push(Check::equal(format!("<P_{lambda}, Q_{mu}>_t"), &inner_hl(&ps[i], &qs[j], &t())?, &delta));
        }
    }
    Ok(rep)
}

pub fn hecke_relations(r: usize, m: usize, n: usize) -> Result<Report, VerifyError> {
    let mut rep = Report::new();
    let gens: Vec<TensorOperator> = (1..r).map(|i| pi_generator(i, r, m, n)).collect::<Result<_, _>>()?;
    let id = TensorOperator::identity(r, m, n);
    for (a, ti) in gens.iter().enumerate() {
        let i = a + 1;
        rep.push(Check::equal(
            format!("H1: T_{i}^2 = (q-q^-1) T_{i} + 1 (r={r}, m={m}, n={n})"),
            &ti.compose(ti),
            &ti.scale(&LaurentScalar::q_minus_q_inv()).add(&id),
        ));
        if let Some(tj) = gens.get(a + 1) {
            rep.push(Check::equal(
                format!("H2: braid at {i} (r={r}, m={m}, n={n})"),
                &ti.compose(tj).compose(ti),
                &tj.compose(ti).compose(tj),
            ));
        }
        for (b, tj) in gens.iter().enumerate().skip(a + 2) {
            let j = b + 1;
            rep.push(Check::equal(
                format!("H3: T_{i} T_{j} = T_{j} T_{i} (r={r}, m={m}, n={n})"),
                &ti.compose(tj),
                &tj.compose(ti),
            ));
        }
    }
    rep.push(Check::new(format!("D_{r} commutes with every T_i (m={m}, n={n})"), d_commutes(r, m, n), None));
    Ok(rep)
}

/// `tr(D_k π_k(T_{γ_(k)}))`.
pub fn cycle_trace(k: usize, m: usize, n: usize) -> Result<ZPolynomial, HeckeError> {
    trace_d_pi(&gamma_word(&Composition::from(&Partition::row(k))), k, m, n)
}

/// `q^k / (q - q^-1) · q_k(x/y; q^-2)`.
pub fn theorem53_rhs(k: usize, m: usize, n: usize) -> Result<SuperPoly, SuperError> {
    let g = super_gen(&SuperGen::QRow(LaurentScalar::q_pow(-2)), k, m, n).scale(&LaurentScalar::q_pow(k as i32));
    let poly = g.poly().div_scalar_exact(&LaurentScalar::q_minus_q_inv())?;
    Ok(SuperPoly::from_mpoly(m, n, poly))
}

/// `(q - q^-1)^{-1} Σ_j q̃_j(x; q) q̃_{k-j}(-y; -q^-1)`.
pub fn eq51_sum(k: usize, m: usize, n: usize) -> Result<SuperPoly, SuperError> {
    let mut total = SuperPoly::zero(m, n);
    let minus_q_inv = |c: &LaurentScalar| c.subst_monomial(&rat(-1), -1);
    for j in 0..=k {
        let x_part = specialize_super(&hl_tilde_q(j), m, 0)?;
        let y_part = specialize_super(&hl_tilde_q(k - j), n, 0)?.map_coeffs(minus_q_inv);
        let x_part = SuperPoly::from_x_poly(x_part.poly(), n);
        let y_part = SuperPoly::from_y_poly(y_part.poly(), m).negate_y();
        total = &total + &(&x_part * &y_part);
    }
    let poly = total.poly().div_scalar_exact(&LaurentScalar::q_minus_q_inv())?;
    Ok(SuperPoly::from_mpoly(m, n, poly))
}

/// Product of the block traces of `α`, each computed at its own size.
pub fn block_trace_product(alpha: &Composition, m: usize, n: usize) -> Result<ZPolynomial, HeckeError> {
    alpha
        .parts()
        .iter()
        .try_fold(ZPolynomial::one(m, n), |acc, &a| Ok(acc.mul(&cycle_trace(a, m, n)?)))
}

pub fn prop51_suite(r: usize, m: usize, n: usize) -> Result<Report, VerifyError> {
    let mut rep = Report::new();
    for k in 1..=r {
        let tr = cycle_trace(k, m, n)?;
        rep.push(Check::equal(format!("closed-form trace k={k} (m={m}, n={n})"), &prop51_trace(k, m, n), &tr));
        let lhs = xy_substitute(&tr, m, n);
        rep.push(Check::equal(
            format!("trace k={k} = q^k/(q-q^-1) q_k(x/y; q^-2) (m={m}, n={n})"),
            &lhs,
            &theorem53_rhs(k, m, n)?,
        ));
        rep.push(Check::equal(
            format!("trace k={k} = tilde-q convolution (m={m}, n={n})"),
            &lhs,
            &eq51_sum(k, m, n)?,
        ));
        rep.push(Check::equal(
            format!("trace k={k} at q=1 is p_{k}(x/y) (m={m}, n={n})"),
            &xy_substitute(&tr.at_q_one(), m, n),
            &super_power_sum(k, m, n),
        ));
        for alpha in compositions_of(k) {
            let full = trace_d_pi(&gamma_word(&alpha), k, m, n)?;
            rep.push(Check::equal(
                format!("trace of gamma_{alpha:?} factorizes (m={m}, n={n})"),
                &full,
                &block_trace_product(&alpha, m, n)?,
            ));
            let sorted = Composition::from(&alpha.sorted());
            rep.push(Check::equal(
                format!("trace of gamma_{alpha:?} = trace of gamma_{sorted:?} (m={m}, n={n})"),
                &full,
                &trace_d_pi(&gamma_word(&sorted), k, m, n)?,
            ));
        }
    }
    Ok(rep)
}

pub fn frobenius_suite(r: usize, m: usize, n: usize) -> Result<Report, VerifyError> {
    let mut rep = verify_super_frobenius(r, m, n)?;
    let hooks = hook_set(m, n, r);
    let schurs: Vec<SuperPoly> = hooks.iter().map(|l| super_schur(l, m, n, SchurMethod::Cancel)).collect();
    for mu in partitions_of(r) {
        let mut sum = SuperPoly::zero(m, n);
        for (lambda, s) in hooks.iter().zip(&schurs) {
            sum = &sum + &s.scale(&char_value(lambda, &mu)?);
        }
        rep.push(Check::equal(
            format!("sum chi(T_gamma_{mu}) s_l(x/y) = F_{mu}(x/y) (m={m}, n={n})"),
            &sum,
            &specialize_super(&frobenius_element(&mu), m, n)?,
        ));
    }
    Ok(rep)
}

pub fn q1_specialization(r: usize) -> Result<Report, VerifyError> {
    let mut rep = Report::new();
    let dual = |c: &LaurentScalar| c.subst_monomial(&rat(-1), -1);
    for k in 1..=r {
        let table = char_table(k)?;
        rep.push(Check::new(
            format!("H_{k} characters have integer Laurent coefficients"),
            table.rows.iter().all(|row| row.values.iter().all(LaurentScalar::is_integral)),
            None,
        ));
        let q1 = specialize_table_q1(&table)?;
        for (lambda, vals) in &q1.rows {
            let mn: Vec<i64> = q1.columns.iter().map(|mu| mn_character(lambda, mu)).collect::<Result<_, _>>()?;
            rep.push(Check::equal(format!("chi^{lambda} at q=1 = S_{k} character"), vals, &mn));
        }
        let ones = Partition::column(k);
        for row in &table.rows {
            let syt = LaurentScalar::from_int(kostka(&row.lambda, &vec![1; k]) as i64);
            rep.push(Check::equal(
                format!("chi^{}(1) = number of standard tableaux", row.lambda),
                table.value(&row.lambda, &ones).expect("identity column"),
                &syt,
            ));
            let conj = row.lambda.conjugate();
            for (mu, v) in table.columns.iter().zip(&row.values) {
                rep.push(Check::equal(
                    format!("chi^{conj}(T_gamma_{mu}) = chi^{}(T_gamma_{mu}) at q -> -q^-1", row.lambda),
                    table.value(&conj, mu).expect("conjugate row"),
                    &dual(v),
                ));
            }
        }
        for mu in &table.columns {
            let e = (mu.size() - mu.len()) as u32;
            rep.push(Check::equal(
                format!("chi^({k})(T_gamma_{mu}) = q^{e}"),
                table.value(&Partition::row(k), mu).expect("trivial row"),
                &LaurentScalar::q().pow(e),
            ));
            rep.push(Check::equal(
                format!("chi^(1^{k})(T_gamma_{mu}) = (-q^-1)^{e}"),
                table.value(&ones, mu).expect("sign row"),
                &(-LaurentScalar::q_pow(-1)).pow(e),
            ));
        }
    }
    Ok(rep)
}
