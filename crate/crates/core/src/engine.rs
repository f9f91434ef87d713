//! Generating-series engine: builds the disconnected series from characters
//! and hook products, takes its logarithm, and divides out the explicit
//! τ-prefactor to obtain the Hodge polynomials P_{g,μ}(τ).
//!
//! The τ-dependence can be carried symbolically (coefficients are
//! τ-polynomials) or by evaluating at integer τ and interpolating. Both are
//! exact; the second is much cheaper because every coefficient is a single
//! Gaussian rational, and the two are cross-checked in the tests.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bernoulli::half_csc_series;
use crate::character::{CharacterQuery, CharacterTable};
use crate::error::{HodgeError, Result};
use crate::exact::gaussian::GaussianRational;
use crate::exact::interp::interpolate;
use crate::exact::laurent::{sine_series, LaurentSeries};
use crate::exact::pseries::PSeries;
use crate::exact::rational::{factorial, int, Integer, Rational};
use crate::exact::ring::Ring;
use crate::exact::tau::TauPolynomial;
use crate::partition::{enumerate_partitions, partitions_up_to, Partition};

/// How the τ-dependence is carried through the series computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum TauMode {
    /// Evaluate at integer τ and interpolate with one extra check point.
    #[default]
    Interpolated,
    /// Keep τ-polynomial coefficients throughout.
    Symbolic,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Every disconnected coefficient is computed through λ^lambda_order.
    pub lambda_order: i64,
    pub mode: TauMode,
    pub parallel: bool,
}

impl EngineConfig {
    /// Enough precision for every (g, μ) with g ≤ g_max and |μ| ≤ d_max.
    ///
    /// The logarithm loses at most one order per unit of |μ| beyond the
    /// first, so the top connected coefficient λ^{2g−2+l(μ)} needs the
    /// disconnected ones through λ^{2g−3+l(μ)+|μ|}; one guard order is added.
    pub fn for_range(g_max: u32, d_max: u32) -> Self {
        EngineConfig {
            lambda_order: 2 * g_max as i64 + 2 * d_max as i64 - 2,
            mode: TauMode::default(),
            parallel: true,
        }
    }
}

/// P_{g,μ}(τ): the connected coefficient with the explicit prefactor removed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HodgePolynomial {
    pub genus: u32,
    pub mu: Partition,
    #[serde(skip)]
    pub tau: TauPolynomial,
}

impl HodgePolynomial {
    pub fn coefficients(&self) -> Vec<Rational> {
        self.tau.real_coefficients().expect("checked real on construction")
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.tau.coeff(k).re
    }

    /// ∫ λ_g / Π(1 − μ_i ψ_i), the constant term.
    pub fn lambda_g_integral(&self) -> Rational {
        self.coeff(0)
    }

    /// ∫ (λ_{g−1} + Σ_k k!(−1)^{k−1} ch_k λ_g) / Π(1 − μ_i ψ_i), minus the τ coefficient.
    pub fn combination_integral(&self) -> Rational {
        -self.coeff(1)
    }

    /// True for the unstable (g, n) where the value is a convention, not an integral.
    pub fn is_conventional(&self) -> bool {
        2 * self.genus as i64 - 2 + (self.mu.len() as i64) <= 0
    }
}

/// The two lowest τ coefficients of the connected coefficient, read off
/// directly and converted into integrals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtractionReport {
    pub genus: u32,
    pub mu: Partition,
    /// [τ^{l(μ)−1}] of the connected coefficient.
    pub lowest_bracket: GaussianRational,
    /// [τ^{l(μ)}] of the connected coefficient.
    pub next_bracket: GaussianRational,
    pub lambda_g: Rational,
    pub combination: Rational,
}

/// Carries τ through the series either as a polynomial or as a number.
pub trait TauSpecialization: Send + Sync {
    type Coeff: Ring;
    fn embed(&self, c: &GaussianRational) -> Self::Coeff;
    fn tau_plus_half(&self) -> Self::Coeff;
}

pub struct SymbolicTau;

impl TauSpecialization for SymbolicTau {
    type Coeff = TauPolynomial;
    fn embed(&self, c: &GaussianRational) -> TauPolynomial {
        TauPolynomial::constant(c.clone())
    }
    fn tau_plus_half(&self) -> TauPolynomial {
        TauPolynomial::linear(int(1), Rational::new(1.into(), 2.into()))
    }
}

pub struct TauAt(pub Rational);

impl TauSpecialization for TauAt {
    type Coeff = GaussianRational;
    fn embed(&self, c: &GaussianRational) -> GaussianRational {
        c.clone()
    }
    fn tau_plus_half(&self) -> GaussianRational {
        GaussianRational::real(&self.0 + Rational::new(1.into(), 2.into()))
    }
}

type SeriesCache<C> = RwLock<HashMap<Partition, LaurentSeries<C>>>;

struct Layer<S: TauSpecialization> {
    spec: S,
    disconnected: SeriesCache<S::Coeff>,
    connected: SeriesCache<S::Coeff>,
}

impl<S: TauSpecialization> Layer<S> {
    fn new(spec: S) -> Self {
        Layer { spec, disconnected: RwLock::default(), connected: RwLock::default() }
    }

    fn disconnected(&self, eng: &Engine, sigma: &Partition) -> LaurentSeries<S::Coeff> {
        if let Some(s) = self.disconnected.read().expect("cache poisoned").get(sigma) {
            return s.clone();
        }
        let p = eng.config.lambda_order;
        let exp_order = p + sigma.size() as i64;
        let tph = self.spec.tau_plus_half();
        let mut total = LaurentSeries::<S::Coeff>::zero();
        for (kappa, w) in eng.weighted_hooks(sigma).iter() {
            // exp(i(τ+½)κλ/2), coefficient of λ^k is x^k/k! with x = (iκ/2)(τ+½).
            let x = self
                .spec
                .embed(&GaussianRational::new(Rational::zero(), Rational::new((*kappa).into(), 2.into())))
                .times(&tph);
            let mut coeffs = Vec::with_capacity(exp_order as usize + 1);
            let mut term = S::Coeff::one();
            for k in 0..=exp_order {
                if k > 0 {
                    term = term.times(&x).scaled(&Rational::new(1.into(), k.into()));
                }
                coeffs.push(term.clone());
            }
            let e = LaurentSeries::new(0, coeffs, Some(exp_order));
            let w = w.map(|c| self.spec.embed(&GaussianRational::real(c.clone())));
            total = total.plus(&e.times(&w));
        }
        let total = total.truncate(p);
        self.disconnected.write().expect("cache poisoned").insert(sigma.clone(), total.clone());
        total
    }

    /// C_μ = D_μ − (1/|μ|) Σ_{∅≠ρ⊊μ} |ρ| C_ρ D_{μ∖ρ}.
    fn connected(&self, eng: &Engine, mu: &Partition) -> LaurentSeries<S::Coeff> {
        if let Some(s) = self.connected.read().expect("cache poisoned").get(mu) {
            return s.clone();
        }
        let mut acc = LaurentSeries::<S::Coeff>::zero();
        for (rho, rest) in mu.sub_multisets() {
            if rho.is_empty() || rest.is_empty() {
                continue;
            }
            let term = self.connected(eng, &rho).times(&self.disconnected(eng, &rest));
            acc = acc.plus(&term.scaled(&int(rho.size() as i64)));
        }
        let c = self
            .disconnected(eng, mu)
            .minus(&acc.scaled(&Rational::new(1.into(), mu.size().into())));
        self.connected.write().expect("cache poisoned").insert(mu.clone(), c.clone());
        c
    }
}

type WeightedHooks = Arc<Vec<(i64, LaurentSeries<Rational>)>>;

pub struct Engine {
    config: EngineConfig,
    characters: CharacterTable,
    hooks: RwLock<HashMap<Partition, LaurentSeries<Rational>>>,
    weighted: RwLock<HashMap<Partition, WeightedHooks>>,
    symbolic: Layer<SymbolicTau>,
    points: RwLock<BTreeMap<i64, Arc<Layer<TauAt>>>>,
    tau_coefficients: RwLock<HashMap<(u32, Partition), TauPolynomial>>,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine {
            config,
            characters: CharacterTable::new(),
            hooks: RwLock::default(),
            weighted: RwLock::default(),
            symbolic: Layer::new(SymbolicTau),
            points: RwLock::default(),
            tau_coefficients: RwLock::default(),
        }
    }

    pub fn for_range(g_max: u32, d_max: u32) -> Self {
        Self::new(EngineConfig::for_range(g_max, d_max))
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn lambda_order(&self) -> i64 {
        self.config.lambda_order
    }

    /// V_ν(λ) through λ^lambda_order, from the hook-length product.
    pub fn v_nu(&self, nu: &Partition) -> LaurentSeries<Rational> {
        if let Some(v) = self.hooks.read().expect("cache poisoned").get(nu) {
            return v.clone();
        }
        let v = v_nu_hook(nu, self.config.lambda_order);
        self.hooks.write().expect("cache poisoned").insert(nu.clone(), v.clone());
        v
    }

    /// (1/z_σ) Σ_ν χ_ν(σ) V_ν grouped by κ_ν, zero groups dropped.
    fn weighted_hooks(&self, sigma: &Partition) -> WeightedHooks {
        if let Some(w) = self.weighted.read().expect("cache poisoned").get(sigma) {
            return w.clone();
        }
        let z = Rational::new(One::one(), sigma.z_factor());
        let mut groups: BTreeMap<i64, LaurentSeries<Rational>> = BTreeMap::new();
        for nu in enumerate_partitions(sigma.size()) {
            let q = CharacterQuery::new(nu.clone(), sigma.clone()).expect("sizes agree");
            let chi = self.characters.value(&q);
            if chi == 0 {
                continue;
            }
            let term = self.v_nu(&nu).scaled(&(int(chi) * &z));
            let slot = groups.entry(nu.kappa()).or_insert_with(LaurentSeries::zero);
            *slot = slot.plus(&term);
        }
        let list: Vec<_> = groups.into_iter().filter(|(_, s)| s.terms().next().is_some()).collect();
        let list = Arc::new(list);
        self.weighted.write().expect("cache poisoned").insert(sigma.clone(), list.clone());
        list
    }

    /// Coefficient of p_μ in the disconnected series, τ symbolic.
    pub fn disconnected_coefficient(&self, mu: &Partition) -> LaurentSeries<TauPolynomial> {
        self.symbolic.disconnected(self, mu)
    }

    /// Coefficient of p_μ in the connected series, τ symbolic.
    pub fn connected_coefficient(&self, mu: &Partition) -> LaurentSeries<TauPolynomial> {
        self.symbolic.connected(self, mu)
    }

    pub fn disconnected_series(&self, d_max: u32) -> PSeries<LaurentSeries<TauPolynomial>> {
        let mut s = PSeries::constant(LaurentSeries::one(), d_max);
        for mu in partitions_up_to(d_max) {
            s.insert(mu.clone(), self.disconnected_coefficient(&mu));
        }
        s
    }

    /// The connected series as the full logarithm of the disconnected one.
    pub fn connected_series(&self, d_max: u32) -> Result<PSeries<LaurentSeries<TauPolynomial>>> {
        self.disconnected_series(d_max).log()
    }

    fn layer_at(&self, point: i64) -> Arc<Layer<TauAt>> {
        if let Some(l) = self.points.read().expect("cache poisoned").get(&point) {
            return l.clone();
        }
        let mut w = self.points.write().expect("cache poisoned");
        w.entry(point).or_insert_with(|| Arc::new(Layer::new(TauAt(int(point))))).clone()
    }

    /// Connected coefficient of p_μ evaluated at τ = `point`.
    pub fn connected_coefficient_at(&self, mu: &Partition, point: i64) -> LaurentSeries<GaussianRational> {
        self.layer_at(point).connected(self, mu)
    }

    /// 𝒞_{g,μ}(τ) = [λ^{2g−2+l(μ)}] of the connected coefficient of p_μ.
    pub fn connected_tau_coefficient(&self, g: u32, mu: &Partition) -> Result<TauPolynomial> {
        if mu.is_empty() {
            return Err(HodgeError::InvalidInput("μ must be nonempty".into()));
        }
        let key = (g, mu.clone());
        if let Some(c) = self.tau_coefficients.read().expect("cache poisoned").get(&key) {
            return Ok(c.clone());
        }
        let n = 2 * g as i64 - 2 + mu.len() as i64;
        let c = match self.config.mode {
            TauMode::Symbolic => self.connected_coefficient(mu).require_coeff(n)?,
            TauMode::Interpolated => {
                let degree = n + mu.size() as i64;
                let pts: Vec<i64> = (0..=degree + 1).collect();
                let eval = |&t: &i64| self.connected_coefficient_at(mu, t).require_coeff(n);
                let values: Vec<GaussianRational> = if self.config.parallel {
                    pts.par_iter().map(eval).collect::<Result<_>>()?
                } else {
                    pts.iter().map(eval).collect::<Result<_>>()?
                };
                let xs: Vec<Rational> = pts.iter().map(|&t| int(t)).collect();
                let k = xs.len() - 1;
                let poly = TauPolynomial::new(interpolate(&xs[..k], &values[..k])?);
                if poly.eval(&GaussianRational::real(xs[k].clone())) != values[k] {
                    return Err(HodgeError::Interpolation(format!(
                        "τ-degree of the g={g}, μ=({mu}) coefficient exceeds {degree}"
                    )));
                }
                poly
            }
        };
        self.tau_coefficients.write().expect("cache poisoned").insert(key, c.clone());
        Ok(c)
    }

    /// P_{g,μ}(τ), the connected coefficient divided by [`prefactor`].
    pub fn hodge_polynomial(&self, g: u32, mu: &Partition) -> Result<HodgePolynomial> {
        let c = self.connected_tau_coefficient(g, mu)?;
        let tau = c.exact_div(&prefactor(mu))?;
        if !tau.is_real() {
            return Err(HodgeError::ImaginaryResidue(format!("P_(g={g}, μ=({mu})) = {tau}")));
        }
        if tau.degree().is_some_and(|d| d > 2 * g as usize) {
            return Err(HodgeError::Mismatch(format!(
                "P_(g={g}, μ=({mu})) has τ-degree above 2g: {tau}"
            )));
        }
        Ok(HodgePolynomial { genus: g, mu: mu.clone(), tau })
    }

    /// Reads ∫λ_g/Π and the combination integral straight off the two lowest
    /// τ coefficients of 𝒞_{g,μ}, then checks them against P_{g,μ}.
    pub fn extraction(&self, g: u32, mu: &Partition) -> Result<ExtractionReport> {
        let c = self.connected_tau_coefficient(g, mu)?;
        let n = mu.len();
        let d = mu.size() as i64;
        let scale = GaussianRational::i_pow(d + n as i64)
            .scaled(&-Rational::new(One::one(), mu.aut_order()));
        let inv = crate::exact::ring::Field::inverse(&scale).expect("unit");
        let lowest = c.coeff(n - 1);
        let next = c.coeff(n);
        let p0 = &lowest * &inv;
        let q = &next * &inv;
        if !p0.is_real() || !q.is_real() {
            return Err(HodgeError::ImaginaryResidue(format!("brackets of g={g}, μ=({mu})")));
        }
        let weight = int(n as i64 - 1) + mu.harmonic_weight();
        let lambda_g = p0.re;
        let combination = &weight * &lambda_g - q.re;
        let p = self.hodge_polynomial(g, mu)?;
        if p.lambda_g_integral() != lambda_g || p.combination_integral() != combination {
            return Err(HodgeError::Mismatch(format!(
                "bracket extraction disagrees with P_(g={g}, μ=({mu}))"
            )));
        }
        Ok(ExtractionReport { genus: g, mu: mu.clone(), lowest_bracket: lowest, next_bracket: next, lambda_g, combination })
    }

    /// Recomputes P_{g,μ} one order higher and compares.
    pub fn recheck(&self, g: u32, mu: &Partition) -> Result<HodgePolynomial> {
        let here = self.hodge_polynomial(g, mu)?;
        let mut cfg = self.config.clone();
        cfg.lambda_order += 1;
        let there = Engine::new(cfg).hodge_polynomial(g, mu)?;
        if here != there {
            return Err(HodgeError::Mismatch(format!("P_(g={g}, μ=({mu})) moved when precision increased")));
        }
        Ok(here)
    }
}

/// −(i^{|μ|+l(μ)}/|Aut μ|) [τ(τ+1)]^{l(μ)−1} Π_i Π_{a=1}^{μ_i−1} (μ_i τ + a)/(μ_i − 1)!.
pub fn prefactor(mu: &Partition) -> TauPolynomial {
    let n = mu.len() as i64;
    let d = mu.size() as i64;
    let scale = GaussianRational::i_pow(d + n).scaled(&-Rational::new(One::one(), mu.aut_order()));
    let mut p = TauPolynomial::constant(scale);
    let tt1 = TauPolynomial::from_rationals([int(0), int(1), int(1)]);
    p = p.times(&tt1.pow((n - 1) as u32));
    for &m in mu.parts() {
        for a in 1..m {
            p = p.times(&TauPolynomial::linear(int(m as i64), int(a as i64)));
        }
        p = p.scaled(&Rational::new(One::one(), factorial(m as u64 - 1)));
    }
    p
}

/// V_ν(λ) = Π_{x∈ν} 1/(2 sin(h(x)λ/2)) = λ^{−|ν|}/Πh · Π S(hλ), S(t) = (t/2)/sin(t/2).
pub fn v_nu_hook(nu: &Partition, max_order: i64) -> LaurentSeries<Rational> {
    let d = nu.size() as i64;
    let work = max_order + d;
    let s = half_csc_series(work.max(0));
    let mut prod = LaurentSeries::one().truncate(work);
    let mut hprod = Integer::one();
    for h in nu.hook_lengths() {
        prod = prod.times(&s.rescale_variable(&int(h as i64)));
        hprod *= h;
    }
    prod.shift(-d).scaled(&Rational::new(One::one(), hprod)).truncate(max_order)
}

/// V_ν(λ) from the double product of sines, without hook lengths.
pub fn v_nu_product(nu: &Partition, max_order: i64) -> LaurentSeries<Rational> {
    let l = nu.len() as i64;
    let parts = nu.parts();
    let work = max_order + nu.size() as i64 + 2;
    // sin(cλ/2) = (cλ/2)·u(cλ) with u(0) = 1; collect the u's and the constants.
    let unit = |c: i64| sine_series(&Rational::new(c.into(), 2.into()), work + 1).shift(-1).scaled(&Rational::new(2.into(), c.into()));
    let mut num = LaurentSeries::one().truncate(work);
    let mut den = LaurentSeries::one().truncate(work);
    let mut constant = Rational::one();
    for a in 0..l {
        for b in a + 1..l {
            let top = parts[a as usize] as i64 - parts[b as usize] as i64 + b - a;
            num = num.times(&unit(top));
            den = den.times(&unit(b - a));
            constant = constant * int(top) / int(b - a);
        }
    }
    for i in 0..l {
        for v in 1..=parts[i as usize] as i64 {
            let c = v - (i + 1) + l;
            den = den.times(&unit(c));
            // 2 sin(cλ/2) = cλ·u(cλ)
            constant /= int(c);
        }
    }
    num.times(&den.inverse().expect("unit constant term"))
        .scaled(&constant)
        .shift(-(nu.size() as i64))
        .truncate(max_order)
}

/// Product-form cross-check helper: largest λ-order at which hook and product forms agree.
pub fn v_nu_forms_agree(nu: &Partition, max_order: i64) -> bool {
    v_nu_hook(nu, max_order) == v_nu_product(nu, max_order)
}
