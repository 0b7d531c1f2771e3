//! Hecke algebra characters `χ^λ(T_{γ_μ})` read off from the Frobenius
//! element `F_μ = q^{|μ|} (q - q^-1)^{-l(μ)} q_μ(·; q^-2)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heckesim::{gamma_word, trace_d_pi, xy_substitute, HeckeError};
use crate::hl::hl_q_lambda;
use crate::partition::{hook_set, partitions_of, Composition, Partition};
use crate::scalar::{rat, LaurentScalar, ScalarError, ScalarFraction};
use crate::superring::{specialize_super, super_schur_expand, SuperError};
use crate::symring::{inner_standard, Basis, SymFunc};
use crate::verify::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("size mismatch: |λ| = {lambda}, |μ| = {mu}")]
    SizeMismatch { lambda: usize, mu: usize },
    #[error("character value is not a Laurent polynomial: {0}")]
    NotDivisible(ScalarError),
    #[error("character value at q = 1 is not an integer: {0}")]
    NotIntegral(String),
    #[error("malformed table: {0}")]
    Table(String),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Super(#[from] SuperError),
}

/// `F_μ = q^{|μ|} / (q - q^-1)^{l(μ)} · q_μ(·; q^-2)`.
pub fn frobenius_element(mu: &Partition) -> SymFunc {
    let scale = ScalarFraction::new(
        LaurentScalar::q_pow(mu.size() as i32),
        LaurentScalar::q_minus_q_inv().pow(mu.len() as u32),
    )
    .expect("nonzero denominator");
    hl_q_lambda(mu, &LaurentScalar::q_pow(-2)).scale(&scale)
}

fn pair(f_mu: &SymFunc, lambda: &Partition) -> Result<LaurentScalar, FrobeniusError> {
    inner_standard(f_mu, &SymFunc::basis_element(Basis::S, lambda.clone()))
        .into_laurent()
        .map_err(FrobeniusError::NotDivisible)
}

/// `χ^λ(T_{γ_μ}) = ⟨F_μ, s_λ⟩`.
pub fn char_value(lambda: &Partition, mu: &Partition) -> Result<LaurentScalar, FrobeniusError> {
    if lambda.size() != mu.size() {
        return Err(FrobeniusError::SizeMismatch { lambda: lambda.size(), mu: mu.size() });
    }
    pair(&frobenius_element(mu), lambda)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharRow {
    pub lambda: Partition,
    pub values: Vec<LaurentScalar>,
}

/// Rows `λ` and columns `μ` both run over `partitions_of(r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeCharTable {
    pub r: usize,
    pub columns: Vec<Partition>,
    pub rows: Vec<CharRow>,
}

pub fn char_table(r: usize) -> Result<HeckeCharTable, FrobeniusError> {
    let parts = partitions_of(r);
    let columns: Vec<Vec<LaurentScalar>> = parts
        .par_iter()
        .map(|mu| {
            let f = frobenius_element(mu);
            parts.iter().map(|lambda| pair(&f, lambda)).collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let rows = parts
        .iter()
        .enumerate()
        .map(|(i, lambda)| CharRow {
            lambda: lambda.clone(),
            values: columns.iter().map(|col| col[i].clone()).collect(),
        })
        .collect();
    Ok(HeckeCharTable { r, columns: parts, rows })
}

fn label(p: &Partition) -> String {
    p.parts().iter().map(|k| k.to_string()).collect::<Vec<_>>().join("+")
}

impl HeckeCharTable {
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&LaurentScalar> {
        let j = self.columns.iter().position(|c| c == mu)?;
        let row = self.rows.iter().find(|row| &row.lambda == lambda)?;
        row.values.get(j)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("lambda\\mu".to_string()).chain(self.columns.iter().map(label));
        w.write_record(header).expect("in-memory write");
        for row in &self.rows {
            let rec = std::iter::once(label(&row.lambda)).chain(row.values.iter().map(|v| v.to_string()));
            w.write_record(rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// Aligned plain-text rendering.
    pub fn to_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new())
            .chain(self.columns.iter().map(|c| c.to_string()))
            .collect()];
        for row in &self.rows {
            grid.push(
                std::iter::once(row.lambda.to_string())
                    .chain(row.values.iter().map(|v| v.to_string()))
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &grid {
            let line: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect();
            writeln!(out, "{}", line.join("  ").trim_end()).expect("string write");
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    lambda: Partition,
    values: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    r: usize,
    columns: Vec<Partition>,
    rows: Vec<RowJson>,
}

impl Serialize for HeckeCharTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableJson {
            r: self.r,
            columns: self.columns.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| RowJson {
                    lambda: row.lambda.clone(),
                    values: row.values.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeCharTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let js = TableJson::deserialize(d)?;
        let mut rows = Vec::with_capacity(js.rows.len());
        for row in js.rows {
            if row.values.len() != js.columns.len() {
                return Err(D::Error::custom("row length does not match column count"));
            }
            let values = row
                .values
                .iter()
                .map(|v| v.parse::<LaurentScalar>())
                .collect::<Result<_, _>>()
                .map_err(D::Error::custom)?;
            rows.push(CharRow { lambda: row.lambda, values });
        }
        Ok(HeckeCharTable { r: js.r, columns: js.columns, rows })
    }
}

/// A character table of the symmetric group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntCharTable {
    pub r: usize,
    pub columns: Vec<Partition>,
    pub rows: Vec<(Partition, Vec<i64>)>,
}

/// Evaluate every entry at `q = 1`.
pub fn specialize_table_q1(table: &HeckeCharTable) -> Result<IntCharTable, FrobeniusError> {
    let one = rat(1);
    let rows = table
        .rows
        .iter()
        .map(|row| {
            let vals = row
                .values
                .iter()
                .map(|v| {
                    let x = v.eval(&one).map_err(|e| FrobeniusError::NotIntegral(e.to_string()))?;
                    if !x.is_integer() {
                        return Err(FrobeniusError::NotIntegral(x.to_string()));
                    }
                    i64::try_from(x.to_integer()).map_err(|e| FrobeniusError::NotIntegral(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((row.lambda.clone(), vals))
        })
        .collect::<Result<_, FrobeniusError>>()?;
    Ok(IntCharTable { r: table.r, columns: table.columns.clone(), rows })
}

/// For every `μ ⊢ r`: the tensor trace after the `x/y` substitution equals
/// the specialized Frobenius element, and its super-Schur expansion has the
/// character values as coefficients.
pub fn verify_super_frobenius(r: usize, m: usize, n: usize) -> Result<Report, FrobeniusError> {
    let mut report = Report::new();
    let hooks = hook_set(m, n, r);
    for mu in partitions_of(r) {
        let word = gamma_word(&Composition::from(&mu));
        let lhs = xy_substitute(&trace_d_pi(&word, r, m, n)?, m, n);
        let f = frobenius_element(&mu);
        let rhs = specialize_super(&f, m, n)?;
        let ok = lhs == rhs;
        report.push(Check::new(
            format!("trace = F_{mu} at m={m}, n={n}"),
            ok,
            (!ok).then(|| format!("trace: {lhs:?}\nfrobenius: {rhs:?}")),
        ));
        let expected: BTreeMap<Partition, LaurentScalar> = hooks
            .iter()
            .map(|lambda| Ok((lambda.clone(), pair(&f, lambda)?)))
            .collect::<Result<BTreeMap<_, _>, FrobeniusError>>()?
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let check = match super_schur_expand(&lhs, r) {
            Ok(ex) if ex.coefficients == expected => Check::new(format!("expansion of trace_{mu}"), true, None),
            Ok(ex) => Check::new(
                format!("expansion of trace_{mu}"),
                false,
                Some(format!("expanded: {:?}\ncharacters: {expected:?}", ex.coefficients)),
            ),
            Err(e) => Check::new(format!("expansion of trace_{mu}"), false, Some(e.to_string())),
        };
        report.push(check);
    }
    Ok(report)
}
