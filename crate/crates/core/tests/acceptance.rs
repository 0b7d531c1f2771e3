//! Acceptance criteria, each an exact symbolic equality. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use superfrob::frobenius::{char_table, char_value, frobenius_element, specialize_table_q1};
use superfrob::heckesim::{d_commutes, gamma_word, pi_generator, prop51_trace, trace_d_pi, xy_substitute, TensorOperator};
use superfrob::hl::{hl_big_q_abstract, hl_p_abstract, hl_p_concrete, hl_q_lambda, hl_skew_p, scale_variables, ConcretePoly};
use superfrob::mpoly::MPoly;
use superfrob::partition::{compositions_of, hook_set, kostka, partitions_of, Composition, Partition};
use superfrob::scalar::{rat, LaurentScalar, ScalarFraction};
use superfrob::superring::{specialize_super, super_gen, super_hl_p, super_schur, SchurMethod, SuperGen, SuperPoly};
use superfrob::symring::{inner_hl, mn_character, Basis, SymFunc};
use superfrob::verify::{block_trace_product, h_from_power_sums, schur_from_characters, theorem53_rhs};

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(lhs: &T, rhs: &T, what: impl FnOnce() -> String) -> Outcome {
    ensure(lhs == rhs, || format!("{}\n  lhs: {lhs:?}\n  rhs: {rhs:?}", what()))
}

fn t() -> LaurentScalar {
    LaurentScalar::q()
}

fn one_minus_t() -> LaurentScalar {
    &LaurentScalar::one() - &t()
}

fn cycle(k: usize) -> Vec<usize> {
    gamma_word(&Composition::from(&Partition::row(k)))
}

fn criterion_1() -> Outcome {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for k in 1..=6 {
            let lhs = xy_substitute(&trace_d_pi(&cycle(k), k, m, n).map_err(|e| e.to_string())?, m, n);
            let rhs = theorem53_rhs(k, m, n).map_err(|e| e.to_string())?;
            ensure_eq(&lhs, &rhs, || format!("k={k}, m={m}, n={n}"))?;
        }
    }
    // desk anchor: q x^2 - (q - q^-1) x y - q^-1 y^2
    let anchor = &(&SuperPoly::monomial(1, 1, &[2], &[0], "q".parse().unwrap())
        - &SuperPoly::monomial(1, 1, &[1], &[1], "q - q^-1".parse().unwrap()))
        - &SuperPoly::monomial(1, 1, &[0], &[2], "q^-1".parse().unwrap());
    ensure_eq(&theorem53_rhs(2, 1, 1).map_err(|e| e.to_string())?, &anchor, || "anchor".into())
}

fn criterion_2() -> Outcome {
    let (m, n) = (3, 3);
    for r in 1..=5 {
        let hooks = hook_set(m, n, r);
        let schurs: Vec<SuperPoly> = hooks.iter().map(|l| super_schur(l, m, n, SchurMethod::Cancel)).collect();
        for mu in partitions_of(r) {
            let frob = specialize_super(&frobenius_element(&mu), m, n).map_err(|e| e.to_string())?;
            let mut chars = SuperPoly::zero(m, n);
            for (lambda, s) in hooks.iter().zip(&schurs) {
                chars = &chars + &s.scale(&char_value(lambda, &mu).map_err(|e| e.to_string())?);
            }
            let word = gamma_word(&Composition::from(&mu));
            let trace = xy_substitute(&trace_d_pi(&word, r, m, n).map_err(|e| e.to_string())?, m, n);
            ensure_eq(&frob, &chars, || format!("F_mu vs characters, mu={mu}"))?;
            ensure_eq(&chars, &trace, || format!("characters vs trace, mu={mu}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for k in 1..=6 {
            let tr = trace_d_pi(&cycle(k), k, m, n).map_err(|e| e.to_string())?;
            ensure_eq(&prop51_trace(k, m, n), &tr, || format!("k={k}, m={m}, n={n}"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for r in 1..=5 {
            for alpha in compositions_of(r) {
                let full = trace_d_pi(&gamma_word(&alpha), r, m, n).map_err(|e| e.to_string())?;
                let product = block_trace_product(&alpha, m, n).map_err(|e| e.to_string())?;
                ensure_eq(&full, &product, || format!("alpha={alpha:?}, m={m}, n={n}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (m, n) in [(1, 1), (2, 2)] {
        for r in 2..=4 {
            let gens: Vec<TensorOperator> =
                (1..r).map(|i| pi_generator(i, r, m, n)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
            let id = TensorOperator::identity(r, m, n);
            for (a, ti) in gens.iter().enumerate() {
                let quad = ti.scale(&LaurentScalar::q_minus_q_inv()).add(&id);
                ensure_eq(&ti.compose(ti), &quad, || format!("H1 i={} r={r} m={m} n={n}", a + 1))?;
                if let Some(tj) = gens.get(a + 1) {
                    ensure_eq(&ti.compose(tj).compose(ti), &tj.compose(ti).compose(tj), || {
                        format!("H2 i={} r={r} m={m} n={n}", a + 1)
                    })?;
                }
                for tj in gens.iter().skip(a + 2) {
                    ensure_eq(&ti.compose(tj), &tj.compose(ti), || format!("H3 r={r} m={m} n={n}"))?;
                }
            }
            ensure(d_commutes(r, m, n), || format!("D commutation r={r} m={m} n={n}"))?;
        }
    }
    Ok(())
}

fn monomial_sum(k: usize, vars: usize) -> MPoly {
    let mut out = MPoly::zero(vars);
    for nu in partitions_of(k) {
        out += &ConcretePoly::monomial_symmetric(&nu, vars).poly().scale(&one_minus_t().pow(nu.len() as u32));
    }
    out
}

fn criterion_6() -> Outcome {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    // h_k = Σ p_λ / z_λ
    for k in 1..=6 {
        let lhs = super_gen(&SuperGen::H, k, 2, 2);
        let rhs = specialize_super(&h_from_power_sums(k), 2, 2).map_err(|e| err(&e))?;
        ensure_eq(&lhs, &rhs, || format!("h_{k} power sums"))?;
    }
    // Jacobi-Trudi vs cancellation, and characters vs Murnaghan-Nakayama
    for r in 1..=5 {
        for lambda in partitions_of(r) {
            let cancel = super_schur(&lambda, 3, 3, SchurMethod::Cancel);
            let jt = super_schur(&lambda, 3, 3, SchurMethod::JacobiTrudi);
            ensure_eq(&jt, &cancel, || format!("Jacobi-Trudi vs cancellation, {lambda}"))?;
            let mn = specialize_super(&schur_from_characters(&lambda).map_err(|e| err(&e))?, 3, 3)
                .map_err(|e| err(&e))?;
            ensure_eq(&cancel, &mn, || format!("s_lambda vs MN characters, {lambda}"))?;
        }
    }
    // skew row formulas and ω P_(r)
    for r in 1..=6 {
        for m in 1..=3 {
            for k in 0..=r {
                let skew = hl_skew_p(&Partition::row(r), &Partition::row(k), m, &t()).map_err(|e| err(&e))?;
                let expect = match k {
                    0 => hl_p_concrete(&Partition::row(r), m, &t()).map_err(|e| err(&e))?.into_poly(),
                    k if k == r => MPoly::one(m),
                    _ => hl_p_concrete(&Partition::row(r - k), m, &t()).map_err(|e| err(&e))?.poly().scale(&one_minus_t()),
                };
                ensure_eq(skew.poly(), &expect, || format!("P_({r})/({k}), m={m}"))?;
                if 0 < k && k < r {
                    ensure_eq(skew.poly(), &monomial_sum(r - k, m), || format!("monomial form P_({r})/({k}), m={m}"))?;
                }
            }
            let omega = hl_p_abstract(&Partition::row(r), &t()).map_err(|e| err(&e))?.omega();
            let lhs = specialize_super(&omega, m, 0).map_err(|e| err(&e))?;
            let t_inv = LaurentScalar::q_pow(-1);
            let sign = if r % 2 == 1 { LaurentScalar::one() } else { -LaurentScalar::one() };
            let p = hl_p_concrete(&Partition::row(r), m, &t_inv).map_err(|e| err(&e))?;
            let rhs = scale_variables(&p, &t()).poly().scale(&(&sign * &t_inv));
            ensure_eq(lhs.poly(), &rhs, || format!("omega P_({r}), m={m}"))?;
        }
    }
    // P_(r)(x/y) = q_r(x/y) / (1 - t)
    let p0 = super_hl_p(&Partition::empty(), 2, 2, &t()).map_err(|e| err(&e))?;
    ensure_eq(&p0, &super_gen(&SuperGen::QRow(t()), 0, 2, 2), || "super P_0".into())?;
    for r in 1..=6 {
        let p = super_hl_p(&Partition::row(r), 2, 2, &t()).map_err(|e| err(&e))?;
        let q = super_gen(&SuperGen::QRow(t()), r, 2, 2);
        ensure_eq(&p.scale(&one_minus_t()), &q, || format!("super P_({r})"))?;
    }
    ensure(super_schur(&Partition::new(vec![2, 2]).unwrap(), 1, 1, SchurMethod::Cancel).is_zero(), || {
        "s_(2,2)(x/y) at m=n=1".into()
    })?;
    ensure(super_schur(&Partition::new(vec![2, 2]).unwrap(), 1, 1, SchurMethod::JacobiTrudi).is_zero(), || {
        "s_(2,2)(x/y) at m=n=1 by determinant".into()
    })
}

fn criterion_7() -> Outcome {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    for r in 1..=5 {
        let parts = partitions_of(r);
        let ps: Vec<SymFunc> = parts.iter().map(|l| hl_p_abstract(l, &t())).collect::<Result<_, _>>().map_err(|e| err(&e))?;
        let qs: Vec<SymFunc> =
            parts.iter().map(|l| hl_big_q_abstract(l, &t())).collect::<Result<_, _>>().map_err(|e| err(&e))?;
        for (i, lambda) in parts.iter().enumerate() {
            let ql = hl_q_lambda(lambda, &t());
            for (j, mu) in parts.iter().enumerate() {
                let delta = if i == j { ScalarFraction::one() } else { ScalarFraction::zero() };
                let a = inner_hl(&ql, &SymFunc::basis_element(Basis::M, mu.clone()), &t()).map_err(|e| err(&e))?;
                ensure_eq(&a, &delta, || format!("<q_{lambda}, m_{mu}>"))?;
                let b = inner_hl(&ps[i], &qs[j], &t()).map_err(|e| err(&e))?;
                ensure_eq(&b, &delta, || format!("<P_{lambda}, Q_{mu}>"))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let one = rat(1);
    for r in 1..=6 {
        let table = char_table(r).map_err(|e| e.to_string())?;
        for row in &table.rows {
            for v in &row.values {
                ensure(v.is_integral(), || format!("non-integral entry {v} in row {}", row.lambda))?;
            }
        }
        let q1 = specialize_table_q1(&table).map_err(|e| e.to_string())?;
        for (lambda, vals) in &q1.rows {
            for (mu, &v) in q1.columns.iter().zip(vals) {
                let mn = mn_character(lambda, mu).map_err(|e| e.to_string())?;
                ensure_eq(&v, &mn, || format!("q=1 entry ({lambda}, {mu})"))?;
            }
        }
        let ones = Partition::column(r);
        for row in &table.rows {
            let syt = kostka(&row.lambda, &vec![1; r]) as i64;
            let dim = table.value(&row.lambda, &ones).unwrap();
            ensure_eq(dim, &LaurentScalar::from_int(syt), || format!("dimension of {}", row.lambda))?;
            ensure_eq(&dim.eval(&one).unwrap(), &rat(syt), || "dimension at q=1".into())?;
        }
        for mu in &table.columns {
            let e = (mu.size() - mu.len()) as u32;
            ensure_eq(table.value(&Partition::row(r), mu).unwrap(), &LaurentScalar::q().pow(e), || {
                format!("trivial row at {mu}")
            })?;
            ensure_eq(table.value(&ones, mu).unwrap(), &(-LaurentScalar::q_pow(-1)).pow(e), || {
                format!("sign row at {mu}")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 cycle trace = q^k/(q-q^-1) q_k(x/y; q^-2)", criterion_1),
        ("2 super Frobenius formula on T_gamma_mu", criterion_2),
        ("3 closed-form cycle trace", criterion_3),
        ("4 trace factorization over compositions", criterion_4),
        ("5 Hecke relations and D_r commutation", criterion_5),
        ("6 supersymmetric and Hall-Littlewood identities", criterion_6),
        ("7 Hall-Littlewood duality", criterion_7),
        ("8 character table regression", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {name}: PASS ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({secs:.1}s)");
                for line in why.lines() {
                    println!("    {line}");
                }
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
