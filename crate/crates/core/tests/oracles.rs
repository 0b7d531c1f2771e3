//! Independent oracles: results computed by routes that share no code with
//! the library path they check.

use std::collections::BTreeMap;

use superfrob::frobenius::{char_table, char_value};
use superfrob::heckesim::{apply_generator, d_commutes_with, pi_generator, pi_word, trace_d_pi, TensorState};
use superfrob::hl::{hl_p_abstract, hl_p_concrete, hl_q_row};
use superfrob::partition::{factorial, hook_set, kostka, partitions_of, Partition};
use superfrob::scalar::LaurentScalar;
use superfrob::superring::{specialize_super, super_gen, super_schur, SchurMethod, SuperGen};
use superfrob::symring::{mn_character, Basis, SymFunc};
use superfrob::verify::e_dual;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn l(s: &str) -> LaurentScalar {
    s.parse().unwrap()
}

/// Number of ways to put the cycles of `mu` into boxes with sizes `alpha`:
/// the Young permutation character `η^α(μ)`.
fn young_character(alpha: &[i64], mu: &[usize]) -> i64 {
    fn go(rest: &mut Vec<i64>, mu: &[usize]) -> i64 {
        let Some((&c, tail)) = mu.split_first() else {
            return i64::from(rest.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for i in 0..rest.len() {
            if rest[i] >= c as i64 {
                rest[i] -= c as i64;
                total += go(rest, tail);
                rest[i] += c as i64;
            }
        }
        total
    }
    if alpha.iter().any(|&a| a < 0) {
        return 0;
    }
    go(&mut alpha.to_vec(), mu)
}

/// `χ^λ = det[η^{λ_i - i + j}]` expanded over permutations.
fn determinantal_character(lambda: &Partition, mu: &Partition) -> i64 {
    let n = lambda.len();
    let mut total = 0;
    let mut perm: Vec<usize> = (0..n).collect();
    permutohedron_like(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let alpha: Vec<i64> = (0..n).map(|i| lambda.part(i + 1) as i64 - i as i64 + p[i] as i64).collect();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        total += sign * young_character(&alpha, mu.parts());
    });
    total
}

fn permutohedron_like(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutohedron_like(v, k + 1, f);
        v.swap(k, i);
    }
}

#[test]
fn murnaghan_nakayama_matches_determinantal_formula() {
    for r in 1..=7 {
        for lambda in partitions_of(r) {
            for mu in partitions_of(r) {
                assert_eq!(
                    mn_character(&lambda, &mu).unwrap(),
                    determinantal_character(&lambda, &mu),
                    "chi^{lambda}({mu})"
                );
            }
        }
    }
}

#[test]
fn standard_tableaux_match_hook_lengths() {
    for r in 1..=7 {
        for lambda in partitions_of(r) {
            let conj = lambda.conjugate();
            let hooks: u64 = lambda
                .cells()
                .map(|(i, j)| (lambda.part(i) - j + conj.part(j) - i + 1) as u64)
                .product();
            let f = factorial(r) / num_bigint::BigInt::from(hooks);
            assert_eq!(num_bigint::BigInt::from(kostka(&lambda, &vec![1; r])), f, "{lambda}");
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|r| partitions_of(r).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    assert_eq!(hook_set(1, 1, 4).len(), 4);
    assert_eq!(hook_set(4, 4, 4).len(), 5);
}

#[test]
fn hecke_table_for_three_letters() {
    // columns (3), (2,1), (1,1,1)
    let expected = [
        (part(&[3]), ["q^2", "q", "1"]),
        (part(&[2, 1]), ["-1", "q - q^-1", "2"]),
        (part(&[1, 1, 1]), ["q^-2", "-q^-1", "1"]),
    ];
    let t = char_table(3).unwrap();
    for (lambda, vals) in expected {
        let row = t.rows.iter().find(|r| r.lambda == lambda).unwrap();
        let want: Vec<LaurentScalar> = vals.iter().map(|v| l(v)).collect();
        assert_eq!(row.values, want, "row {lambda}");
    }
}

/// Dense 2-factor matrix of `T` at `m = n = 1`, basis `v1v1, v1v2, v2v1, v2v2`,
/// written out by hand from the three cases.
fn t_dense_11() -> Vec<Vec<LaurentScalar>> {
    let z = LaurentScalar::zero;
    // entry [row][col]
    let mut t = vec![vec![z(); 4]; 4];
    t[0][0] = l("q");
    t[2][1] = l("1");
    t[1][1] = l("q - q^-1");
    t[1][2] = l("1");
    t[3][3] = l("-q^-1");
    t
}

fn kron_identity(a: &[Vec<LaurentScalar>], left: usize, right: usize) -> Vec<Vec<LaurentScalar>> {
    let d = a.len();
    let size = left * d * right;
    let mut out = vec![vec![LaurentScalar::zero(); size]; size];
    for li in 0..left {
        for ri in 0..right {
            for r in 0..d {
                for c in 0..d {
                    out[(li * d + r) * right + ri][(li * d + c) * right + ri] = a[r][c].clone();
                }
            }
        }
    }
    out
}

fn matmul(a: &[Vec<LaurentScalar>], b: &[Vec<LaurentScalar>]) -> Vec<Vec<LaurentScalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

#[test]
fn trace_matches_dense_matrices() {
    let t = t_dense_11();
    let t1 = kron_identity(&t, 1, 2);
    let t2 = kron_identity(&t, 2, 1);
    let prod = matmul(&t1, &t2);
    let mut expect: BTreeMap<Vec<u32>, LaurentScalar> = BTreeMap::new();
    for idx in 0..8usize {
        // word digits in base 2, most significant first
        let word: Vec<usize> = (0..3).map(|p| ((idx >> (2 - p)) & 1) + 1).collect();
        let mut c = vec![0u32; 2];
        for &k in &word {
            c[k - 1] += 1;
        }
        let e = expect.entry(c).or_default();
        *e += &prod[idx][idx];
    }
    expect.retain(|_, v| !v.is_zero());
    let tr = trace_d_pi(&[1, 2], 3, 1, 1).unwrap();
    let got: BTreeMap<Vec<u32>, LaurentScalar> = tr.terms().map(|(c, v)| (c.clone(), v.clone())).collect();
    assert_eq!(got, expect);
}

#[test]
fn row_hall_littlewood_is_hook_schur_sum() {
    let t = LaurentScalar::q();
    for r in 1..=6 {
        let mut expect = SymFunc::zero(Basis::S);
        for i in 0..r {
            let mut parts = vec![r - i];
            parts.extend(std::iter::repeat(1).take(i));
            let c = (-t.clone()).pow(i as u32);
            expect = expect.add(&SymFunc::of(Basis::S, &parts).scale_laurent(&c));
        }
        assert!(hl_p_abstract(&Partition::row(r), &t).unwrap().same_element(&expect), "r={r}");
    }
}

#[test]
fn symmetrization_matches_tableaux() {
    let t = LaurentScalar::q();
    for r in 1..=4 {
        for lambda in partitions_of(r) {
            let sym = hl_p_concrete(&lambda, r, &t).unwrap().to_monomial_basis();
            assert_eq!(sym, hl_p_abstract(&lambda, &t).unwrap(), "{lambda}");
        }
    }
}

#[test]
fn hall_littlewood_limits() {
    for r in 1..=4 {
        for lambda in partitions_of(r) {
            let at0 = hl_p_abstract(&lambda, &LaurentScalar::zero()).unwrap();
            assert!(at0.same_element(&SymFunc::basis_element(Basis::S, lambda.clone())), "t=0 {lambda}");
            let at1 = hl_p_abstract(&lambda, &LaurentScalar::one()).unwrap();
            assert_eq!(at1, SymFunc::basis_element(Basis::M, lambda.clone()), "t=1 {lambda}");
        }
    }
}

#[test]
fn q_row_product_matches_power_sums() {
    let t = LaurentScalar::q();
    for r in 0..=5 {
        for m in 1..=4 {
            let product = super_gen(&SuperGen::QRow(t.clone()), r, m, 0);
            assert_eq!(product, specialize_super(&hl_q_row(r, &t), m, 0).unwrap(), "r={r}, m={m}");
        }
    }
}

#[test]
fn alphabet_duality() {
    for k in 0..=5 {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            assert_eq!(super_gen(&SuperGen::H, k, m, n), e_dual(k, m, n), "k={k}, m={m}, n={n}");
        }
    }
}

#[test]
fn hook_vanishing() {
    for r in 1..=5 {
        for (m, n) in [(1, 1), (2, 1)] {
            let hooks = hook_set(m, n, r);
            for lambda in partitions_of(r) {
                let s = super_schur(&lambda, m, n, SchurMethod::Cancel);
                assert_eq!(s.is_zero(), !hooks.contains(&lambda), "{lambda} at ({m},{n})");
                assert!(s.is_separately_symmetric());
            }
        }
    }
}

#[test]
fn characters_satisfy_quadratic_relation_on_two_letters() {
    // χ(T^2) = (q - q^-1) χ(T) + χ(1) in every irreducible of H_2
    for lambda in partitions_of(2) {
        let t = char_value(&lambda, &part(&[2])).unwrap();
        let eigen = t.clone();
        let lhs = &eigen * &eigen;
        let rhs = &(&LaurentScalar::q_minus_q_inv() * &t) + &LaurentScalar::one();
        assert_eq!(lhs, rhs, "{lambda}");
    }
}

#[test]
fn index_corruption_breaks_commutation() {
    let op = pi_generator(1, 2, 1, 1).unwrap();
    assert!(d_commutes_with(&op));
    let mut cols = op.clone().into_columns();
    // v1⊗v2 ↦ v2⊗v2 moves weight between contents
    cols.insert(vec![1, 2], TensorState::basis(vec![2, 2]));
    let bad = superfrob::heckesim::TensorOperator::from_columns(2, 1, 1, cols);
    assert!(!d_commutes_with(&bad));
}

#[test]
fn sign_corruption_breaks_quadratic_relation() {
    let op = pi_generator(1, 2, 1, 2).unwrap();
    let mut cols = op.clone().into_columns();
    // flip the parity sign on v3⊗v2
    let flipped = cols[&vec![3, 2]].scale(&l("-1"));
    cols.insert(vec![3, 2], flipped);
    let bad = superfrob::heckesim::TensorOperator::from_columns(2, 1, 2, cols);
    // content is untouched, so D still commutes
    assert!(d_commutes_with(&bad));
    let id = superfrob::heckesim::TensorOperator::identity(2, 1, 2);
    let quad = bad.scale(&LaurentScalar::q_minus_q_inv()).add(&id);
    assert_ne!(bad.compose(&bad), quad);
    let good_quad = op.scale(&LaurentScalar::q_minus_q_inv()).add(&id);
    assert_eq!(op.compose(&op), good_quad);
}

#[test]
fn word_operator_agrees_with_stepwise_application() {
    let w = [1, 2, 1];
    let op = pi_word(&w, 3, 1, 1).unwrap();
    let v = TensorState::basis(vec![1, 2, 2]);
    let mut s = v.clone();
    for &i in w.iter().rev() {
        s = apply_generator(i, &s, 3, 1).unwrap();
    }
    assert_eq!(op.apply(&v), s);
}
