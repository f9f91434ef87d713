use std::path::PathBuf;
use std::process::ExitCode;

use serde_json::{json, Value};

use hodge_core::bernoulli::{b_g, bernoulli};
use hodge_core::exact::rational::fraction_string;
use hodge_core::identities::lambda_gm1::lambda_gm1_polynomials;
use hodge_core::identities::mumford::exponents_label;
use hodge_core::identities::{
    lambda1_lambdag, lambda_g_conjecture, lambda_g_linear, lambda_gm1_recursion, run_identity, theorem32_integral,
    SuiteRange,
};
use hodge_core::partition::partitions_up_to;
use hodge_core::{Engine, EngineConfig, HodgeError, Partition, Result};

use crate::{Family, Format, IntegralArgs, SeriesArgs, TableArgs, VerifyArgs};

pub fn exit_code(e: &HodgeError) -> u8 {
    if e.is_user_error() {
        2
    } else {
        3
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| HodgeError::InvalidInput(format!("{flag} is required here")))
}

fn parse_mu(s: &str) -> Result<Partition> {
    let mu: Partition = s.parse()?;
    if mu.is_empty() {
        return Err(HodgeError::InvalidInput("μ must be nonempty".into()));
    }
    Ok(mu)
}

pub fn integral(a: &IntegralArgs) -> Result<ExitCode> {
    let g = a.g;
    if a.lambda_g {
        let psi = need(&a.psi, "--psi")?;
        let v = lambda_g_conjecture(g, &psi)?;
        if !v.dimension_ok {
            return Err(HodgeError::Dimension(format!(
                "ψ exponents {psi:?} must be nonnegative and sum to 2g+n-3 = {}",
                2 * g as i64 + psi.len() as i64 - 3
            )));
        }
        outln!("{}", fraction_string(&v.value));
        outln!("via: multinomial(2g+n-3; k) * b_g");
    } else if a.lambda_g_linear {
        let mu = parse_mu(&need(&a.mu, "--mu")?)?;
        outln!("{}", fraction_string(&lambda_g_linear(g, &mu)?));
        outln!("via: |mu|^(2g+n-3) * b_g");
    } else if a.lambda1_lambdag {
        outln!("{}", fraction_string(&lambda1_lambdag(g)?));
        outln!("via: (g(2g-3) b_g + b_1 b_(g-1)) / 12");
    } else if a.thm32 {
        let m = need(&a.m, "--m")?;
        let e = theorem32_integral(g, m)?;
        outln!("{}", fraction_string(&e.rhs));
        outln!("via: Bernoulli double sum for -(2g-2-m)! (-1)^(2g-3-m) int lambda_g ch_(2g-2-m) psi^m");
        outln!("class: {}", e.class);
        outln!("reduced: {}", e.reduced);
        if let Some((mono, value)) = &e.solved {
            outln!("isolated: int {} psi^{m} = {}", exponents_label(mono), fraction_string(value));
        }
    } else {
        let mu = parse_mu(&need(&a.mu, "--mu")?)?;
        let engine = Engine::for_range(g, 3);
        outln!("{}", fraction_string(&lambda_gm1_recursion(&engine, g, &mu)?));
        outln!("via: genus-reduction recursion, degree-{} part, seeded by the generating series", 2 * g as usize - 2 + mu.len());
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(a: &VerifyArgs) -> Result<ExitCode> {
    let range = SuiteRange { g_max: a.gmax, d_max: a.dmax, n_max: a.nmax, order: a.order };
    let records = run_identity(&a.identity, &range)?;
    outln!("{}", serde_json::to_string_pretty(&records).expect("records serialize"));
    if let Some(bad) = records.iter().find(|r| !r.pass) {
        eprintln!(
            "FAIL {}: {} != {} at {}",
            bad.identity,
            fraction_string(&bad.lhs),
            fraction_string(&bad.rhs),
            serde_json::to_string(&bad.parameters).expect("parameters serialize")
        );
        return Ok(ExitCode::from(1));
    }
    eprintln!("ok: {} checks of {}", records.len(), a.identity);
    Ok(ExitCode::SUCCESS)
}

pub fn table(a: &TableArgs) -> Result<ExitCode> {
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match a.family {
        Family::Bernoulli => {
            let rows = (0..=a.max.unwrap_or(12)).map(|m| vec![m.to_string(), fraction_string(&bernoulli(m))]).collect();
            (vec!["m", "B_m"], rows)
        }
        Family::Bg => {
            let rows = (0..=a.gmax.unwrap_or(6)).map(|g| vec![g.to_string(), fraction_string(&b_g(g))]).collect();
            (vec!["g", "b_g"], rows)
        }
        Family::Lambda1Lambdag => {
            let rows = (2..=a.gmax.unwrap_or(6))
                .map(|g| Ok(vec![g.to_string(), fraction_string(&lambda1_lambdag(g)?)]))
                .collect::<Result<_>>()?;
            (vec!["g", "lambda1_lambdag_psi"], rows)
        }
        Family::Thm32 => {
            let mut rows = Vec::new();
            for g in 2..=a.gmax.unwrap_or(5) {
                for m in 1..=2 * g - 3 {
                    let e = theorem32_integral(g, m)?;
                    let (mono, val) = match &e.solved {
                        Some((mono, v)) => (exponents_label(mono), fraction_string(v)),
                        None => ("-".into(), "-".into()),
                    };
                    rows.push(vec![g.to_string(), m.to_string(), fraction_string(&e.rhs), mono, val]);
                }
            }
            (vec!["g", "m", "rhs", "monomial", "integral"], rows)
        }
        Family::LambdaG => {
            let mut rows = Vec::new();
            for g in 1..=a.gmax.unwrap_or(3) {
                for mu in partitions_up_to(a.max.unwrap_or(4)) {
                    rows.push(vec![g.to_string(), mu.to_string(), fraction_string(&lambda_g_linear(g, &mu)?)]);
                }
            }
            (vec!["g", "mu", "lambda_g_linear"], rows)
        }
        Family::LambdaGm1 => {
            let mut rows = Vec::new();
            let n_max = a.max.unwrap_or(3) as usize;
            for g in 1..=a.gmax.unwrap_or(2) {
                let engine = Engine::for_range(g, 3);
                for (i, poly) in lambda_gm1_polynomials(&engine, g, n_max)?.iter().enumerate() {
                    for (lam, c) in poly.coeffs() {
                        rows.push(vec![g.to_string(), (i + 1).to_string(), lam.to_string(), fraction_string(c)]);
                    }
                }
            }
            (vec!["g", "n", "monomial", "coefficient"], rows)
        }
    };
    match a.format {
        Format::Text => {
            outln!("{}", header.join("\t"));
            for r in rows {
                outln!("{}", r.join("\t"));
            }
        }
        Format::Json => {
            let out: Vec<Value> = rows
                .into_iter()
                .map(|r| Value::Object(header.iter().map(|h| h.to_string()).zip(r.into_iter().map(Value::String)).collect()))
                .collect();
            outln!("{}", serde_json::to_string_pretty(&out).expect("table serializes"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cache_path(g: u32, mu: &Partition, order: i64) -> Option<PathBuf> {
    let dir = std::env::var_os("HODGE_CACHE_DIR")?;
    let mu = mu.parts().iter().map(u32::to_string).collect::<Vec<_>>().join("-");
    Some(PathBuf::from(dir).join(format!("series-g{g}-mu{mu}-o{order}.json")))
}

pub fn series(a: &SeriesArgs) -> Result<ExitCode> {
    let mu = parse_mu(&a.mu)?;
    let mut config = EngineConfig::for_range(a.g, mu.size());
    if let Some(o) = a.lambda_order {
        config.lambda_order = o;
    }
    let path = cache_path(a.g, &mu, config.lambda_order);
    if let Some(text) = path.as_ref().and_then(|p| std::fs::read_to_string(p).ok()) {
        if serde_json::from_str::<Value>(&text).is_ok() {
            outln!("{}", text.trim_end());
            return Ok(ExitCode::SUCCESS);
        }
    }
    let p = Engine::new(config).hodge_polynomial(a.g, &mu)?;
    let out = json!({
        "mu": mu.to_string(),
        "g": a.g,
        "tau_coefficients": p.tau.fraction_pairs()?,
    });
    let text = serde_json::to_string_pretty(&out).expect("series serializes");
    if let Some(p) = path {
        if let Err(e) = std::fs::write(&p, &text) {
            eprintln!("warning: could not write cache file {}: {e}", p.display());
        }
    }
    outln!("{text}");
    Ok(ExitCode::SUCCESS)
}
