//! Named verification suites over parameter ranges, as run by `hodge verify`.

use std::collections::BTreeSet;
use std::time::Instant;

use super::closed_forms::{merge_weight_identity, psi_merge_recursion};
use super::lambda_gm1::{lambda_gm1_from_engine, lambda_gm1_polynomials};
use super::mumford::{ch_newton, ch_to_lambda, dual_chern_product, exponents_label, MumfordNormalForm};
use super::recursions::{
    eq26_check, eq31_check, join_aggregate, lambda_g_recursion_32, theorem31_check, theorem32_vs_engine,
    theorem41_vs_engine, theorem52_verify, theorem53_singular,
};
use super::report::VerificationRecord;
use crate::bernoulli::{f_brute, f_closed};
use crate::cutjoin::MoveWeights;
use crate::engine::{v_nu_hook, v_nu_product, Engine};
use crate::error::{HodgeError, Result};
use crate::exact::rational::{int, Rational};
use crate::partition::{partitions_up_to, Partition};

/// Every suite name accepted by [`run_identity`].
pub const IDENTITIES: &[&str] = &[
    "mumford",
    "eq26",
    "eq31",
    "eq32",
    "eq36",
    "thm31",
    "thm52",
    "thm53",
    "thm54",
    "thm41-vs-engine",
    "thm32-vs-engine",
    "vnu-equivalence",
    "f-closed-vs-brute",
];

/// Range overrides; unset fields fall back to per-suite defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteRange {
    pub g_max: Option<u32>,
    pub d_max: Option<u32>,
    pub n_max: Option<u32>,
    pub order: Option<i64>,
}

struct Resolved {
    g: u32,
    d: u32,
    n: u32,
    order: i64,
}

fn defaults(name: &str) -> Resolved {
    let (g, d, n, order) = match name {
        "mumford" => (4, 0, 0, 0),
        "eq26" => (0, 6, 0, 6),
        "eq31" => (2, 4, 0, 0),
        "eq32" => (3, 8, 0, 0),
        "eq36" => (3, 0, 5, 0),
        "thm31" => (0, 4, 0, 6),
        "thm52" => (2, 4, 0, 0),
        "thm53" => (0, 20, 5, 0),
        "thm54" => (2, 0, 3, 0),
        "thm41-vs-engine" => (2, 5, 0, 0),
        "thm32-vs-engine" => (3, 0, 0, 0),
        "vnu-equivalence" => (0, 8, 0, 8),
        _ => (4, 30, 0, 0),
    };
    Resolved { g, d, n, order }
}

/// Runs one named suite. Records come out in a fixed order determined by
/// the parameter loops.
pub fn run_identity(name: &str, range: &SuiteRange) -> Result<Vec<VerificationRecord>> {
    if !IDENTITIES.contains(&name) {
        return Err(HodgeError::InvalidInput(format!(
            "unknown identity {name:?}; expected one of {}",
            IDENTITIES.join(", ")
        )));
    }
    let def = defaults(name);
    let r = Resolved {
        g: range.g_max.unwrap_or(def.g),
        d: range.d_max.unwrap_or(def.d),
        n: range.n_max.unwrap_or(def.n),
        order: range.order.unwrap_or(def.order),
    };
    match name {
        "mumford" => mumford_suite(r.g),
        "eq26" => {
            let mut out = Vec::new();
            for d in 2..=r.d {
                out.extend(eq26_check(d, r.order)?);
            }
            Ok(out)
        }
        "eq31" => {
            let engine = Engine::for_range(r.g, r.d);
            let mut out = Vec::new();
            for g in 0..=r.g {
                for mu in partitions_up_to(r.d) {
                    out.extend(eq31_check(&engine, g, &mu, &MoveWeights::default())?);
                }
            }
            Ok(out)
        }
        "eq32" => {
            let mut out = Vec::new();
            for mu in partitions_up_to(r.d) {
                out.push(join_aggregate(&mu));
            }
            for g in 1..=r.g {
                for mu in partitions_up_to(r.d) {
                    out.push(lambda_g_recursion_32(g, &mu)?);
                }
            }
            Ok(out)
        }
        "eq36" => eq36_suite(r.g, r.n),
        "thm31" => {
            let engine = Engine::for_range((r.order / 2) as u32, r.d);
            let mut out = Vec::new();
            for d in 1..=r.d {
                out.extend(theorem31_check(&engine, d, r.order)?);
            }
            Ok(out)
        }
        "thm52" => {
            let engine = Engine::for_range(r.g, r.d);
            let mut out = Vec::new();
            for g in 1..=r.g {
                for mu in partitions_up_to(r.d) {
                    out.push(theorem52_verify(&engine, g, &mu)?);
                }
            }
            Ok(out)
        }
        "thm53" => partitions_up_to(r.d)
            .iter()
            .filter(|mu| mu.len() >= 2 && mu.len() <= r.n as usize)
            .map(theorem53_singular)
            .collect(),
        "thm54" => thm54_suite(r.g, r.n),
        "thm41-vs-engine" => {
            let engine = Engine::for_range(r.g, r.d);
            let mut out = Vec::new();
            for g in 0..=r.g {
                for mu in partitions_up_to(r.d) {
                    if g == 0 && mu.len() < 3 {
                        continue;
                    }
                    out.push(theorem41_vs_engine(&engine, g, &mu)?);
                }
            }
            Ok(out)
        }
        "thm32-vs-engine" => {
            let engine = Engine::for_range(r.g, 2 * r.g + 1);
            let mut out = Vec::new();
            for g in 2..=r.g {
                out.extend(theorem32_vs_engine(&engine, g)?);
            }
            Ok(out)
        }
        "vnu-equivalence" => Ok(vnu_suite(r.d, r.order)),
        _ => f_suite(r.g, r.d),
    }
}

fn compare_forms(
    identity: &str,
    base: &[(&str, String)],
    a: &MumfordNormalForm,
    b: &MumfordNormalForm,
    start: Instant,
    out: &mut Vec<VerificationRecord>,
) {
    let keys: BTreeSet<_> = a.polynomial().terms().keys().chain(b.polynomial().terms().keys()).cloned().collect();
    if keys.is_empty() {
        out.push(VerificationRecord::compare(identity, base, int(0), int(0), start));
    }
    for e in keys {
        let mut p = base.to_vec();
        p.push(("monomial", exponents_label(&e)));
        out.push(VerificationRecord::compare(identity, &p, a.polynomial().coeff(&e), b.polynomial().coeff(&e), start));
    }
}

fn mumford_suite(g_max: u32) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for g in 1..=g_max {
        let start = Instant::now();
        for k in 0..=2 * g + 1 {
            let base = [("g", g.to_string()), ("ch", k.to_string())];
            compare_forms("mumford", &base, &ch_to_lambda(k, g), &ch_newton(k, g), start, &mut out);
        }
        for (deg, form) in dual_chern_product(g).iter().enumerate() {
            let expected = if deg as u32 == 2 * g { int(if g % 2 == 0 { 1 } else { -1 }) } else { int(0) };
            let base = [("g", g.to_string()), ("t_power", deg.to_string())];
            let got = match (form.polynomial().constant_value(), form.is_zero()) {
                (_, true) => Some(int(0)),
                (v, false) => v,
            };
            let pass = got.as_ref() == Some(&expected);
            let lhs = got.unwrap_or_else(|| int(0));
            out.push(VerificationRecord::with_outcome("mumford", &base, lhs, expected, pass, start));
        }
    }
    Ok(out)
}

/// All exponent vectors of length n with entries ≥ 0 summing to `total`.
fn compositions(total: i64, n: usize) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, n - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn eq36_suite(g_max: u32, n_max: u32) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for g in 1..=g_max {
        for n in 2..=n_max as usize {
            let total = 2 * g as i64 + n as i64 - 3;
            for k in compositions(total, n) {
                let start = Instant::now();
                let label = k.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                let p = [("g", g.to_string()), ("k", label)];
                let (lhs, rhs) = psi_merge_recursion(g, &k)?;
                out.push(VerificationRecord::compare("eq36", &p, lhs, rhs, start));
                let (lhs, rhs) = merge_weight_identity(g, &k);
                out.push(VerificationRecord::compare("merge-weight", &p, lhs, rhs, start));
            }
        }
    }
    Ok(out)
}

/// Recursion output against the engine, coefficient by coefficient in the
/// monomial symmetric basis.
fn thm54_suite(g_max: u32, n_max: u32) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for g in 1..=g_max {
        let n_max = n_max.max(1) as usize;
        let d_max = 2 * g + n_max as u32 + 1;
        let engine = Engine::for_range(g, d_max);
        let polys = lambda_gm1_polynomials(&engine, g, n_max)?;
        for n in 2..=n_max {
            let start = Instant::now();
            let direct = lambda_gm1_from_engine(&engine, g, n, d_max)?;
            let recursive = &polys[n - 1];
            let keys: BTreeSet<Partition> = direct.coeffs().keys().chain(recursive.coeffs().keys()).cloned().collect();
            for lam in keys {
                let p = [("g", g.to_string()), ("n", n.to_string()), ("monomial", lam.to_string())];
                out.push(VerificationRecord::compare("thm54", &p, recursive.coeff(&lam), direct.coeff(&lam), start));
            }
        }
    }
    Ok(out)
}

fn vnu_suite(d_max: u32, order: i64) -> Vec<VerificationRecord> {
    let mut out = Vec::new();
    for nu in partitions_up_to(d_max) {
        let start = Instant::now();
        let hook = v_nu_hook(&nu, order);
        let product = v_nu_product(&nu, order);
        for k in -(nu.size() as i64)..=order {
            let p = [("nu", nu.to_string()), ("lambda_power", k.to_string())];
            let a = hook.coeff(k).unwrap_or_default();
            let b = product.coeff(k).unwrap_or_default();
            out.push(VerificationRecord::compare("vnu-equivalence", &p, a, b, start));
        }
    }
    out
}

fn f_suite(g_max: u32, d_max: u32) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for g1 in 1..=g_max {
        for g2 in 1..=g_max {
            for d in 2..=d_max {
                let start = Instant::now();
                let p = [("g1", g1.to_string()), ("g2", g2.to_string()), ("d", d.to_string())];
                let closed: Rational = f_closed(g1, g2, d)?;
                out.push(VerificationRecord::compare("f-closed-vs-brute", &p, closed, f_brute(g1, g2, d), start));
            }
        }
    }
    Ok(out)
}
