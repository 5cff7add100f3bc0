//! Batch verification: instance specifications, validation, presets and parallel dispatch.

use crate::bivariate;
use crate::cyclotomic::{
    self, lax::compare_spectral, lax::spectral_cyclotomic_from, lax::spectral_sp2n_from, neumann::verify_neumann,
    realize::CycloFault, CycloDivisor, CycloError, CycloInstance, Mu,
};
use crate::gaudin::duality::{
    polynomial_witness, verify_classical_bosonic_duality, verify_classical_fermionic_duality, verify_quantum_duality,
};
use crate::gaudin::generators::{check_commutativity, extract_classical_generators, extract_quantum_generators, CommutativityReport};
use crate::gaudin::lax::realized_lax;
use crate::gaudin::realize::verify_homomorphism;
use crate::gaudin::{AlgebraSide, Bosonic, Divisor, Fermionic, GaudinError, Quantum, Realization};
use crate::matrix::Matrix;
use crate::poisson::poisson_bracket;
use crate::poly::{MultiPoly, Var};
use crate::ratfunc::RatFunc;
use crate::rational::{format_rational, parse_rational, rat, Rational};
use crate::ring::Ring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    ClassicalBosonic,
    ClassicalFermionic,
    QuantumBosonic,
    Cyclotomic,
    Neumann,
    Homomorphism,
    Commutativity,
    LaxAlgebra,
}

/// Realisation flavours selectable for `homomorphism` and `commutativity` instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlavorSpec {
    ClassicalBosonic,
    ClassicalFermionic,
    Quantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LaxWhich {
    Cyclotomic,
    Sp2n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Canonical variables stay symbolic.
    #[default]
    Symbolic,
    /// Canonical variables are replaced by seeded random rationals before taking determinants.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub point: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub kind: Kind,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub divisor: Vec<PointSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dual_divisor: Vec<PointSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau0: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequencies: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<FlavorSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub which: Option<LaxWhich>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub instances: Vec<InstanceSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("instance {index}: {message}")]
pub struct ValidationError {
    pub index: usize,
    pub message: String,
}

/// Ceilings that keep instances at desk scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest M or N accepted.
    pub max_rank: usize,
    /// Largest term count of any spectral polynomial or operator before the instance is aborted.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_rank: 4, max_terms: 2_000_000 }
    }
}

/// A validated instance, ready to run.
#[derive(Debug, Clone)]
pub enum Prepared {
    Gaudin(Realization),
    Cyclo(CycloInstance),
    Neumann(Vec<Rational>),
}

fn parse_points(points: &[PointSpec]) -> Result<Vec<(Rational, usize)>, String> {
    points
        .iter()
        .map(|p| parse_rational(&p.point).map(|r| (r, p.degree)).map_err(|e| format!("point {:?}: {e}", p.point)))
        .collect()
}

fn parse_mu(s: &Option<String>) -> Result<Mu, String> {
    match s.as_deref() {
        None => Err("cyclotomic instances need mu".into()),
        Some("symbolic") => Ok(Mu::Symbolic),
        Some(v) => parse_rational(v).map(Mu::Value).map_err(|e| format!("mu {v:?}: {e}")),
    }
}

impl InstanceSpec {
    /// Validates every degree and point constraint for the instance kind.
    pub fn prepare(&self, limits: &Limits) -> Result<Prepared, String> {
        if self.m == 0 || self.m > limits.max_rank {
            return Err(format!("M = {} outside 1..={}", self.m, limits.max_rank));
        }
        if self.kind == Kind::Neumann {
            let freqs: Vec<Rational> = match &self.frequencies {
                Some(f) => f.iter().map(|s| parse_rational(s).map_err(|e| format!("frequency {s:?}: {e}"))).collect::<Result<_, _>>()?,
                None => (1..=self.m as i64).map(rat).collect(),
            };
            if freqs.len() != self.m {
                return Err(format!("expected {} frequencies, got {}", self.m, freqs.len()));
            }
            cyclotomic::neumann_artifacts(&freqs).map_err(|e| e.to_string())?;
            return Ok(Prepared::Neumann(freqs));
        }
        let n = self.n.ok_or("N is required")?;
        if n == 0 || n > limits.max_rank {
            return Err(format!("N = {n} outside 1..={}", limits.max_rank));
        }
        let cyclotomic_kind = matches!(self.kind, Kind::Cyclotomic | Kind::LaxAlgebra) || self.tau0.is_some();
        if cyclotomic_kind {
            let tau0 = self.tau0.ok_or("cyclotomic instances need tau0")?;
            let divisor = CycloDivisor::new(tau0, parse_points(&self.divisor)?).map_err(|e| e.to_string())?;
            let duals = parse_points(&self.dual_divisor)?;
            if duals.iter().any(|(_, d)| *d != 1) {
                return Err("the sp_2N side only has simple poles: every dual_divisor degree must be 1".into());
            }
            let lambdas = duals.into_iter().map(|(p, _)| p).collect();
            let inst = CycloInstance::new(self.m, n, divisor, lambdas, parse_mu(&self.mu)?).map_err(|e| e.to_string())?;
            return Ok(Prepared::Cyclo(inst));
        }
        let divisor = Divisor::new(parse_points(&self.divisor)?).map_err(|e| e.to_string())?;
        let dual = Divisor::new(parse_points(&self.dual_divisor)?).map_err(|e| e.to_string())?;
        let real = Realization::new(self.m, n, divisor, dual).map_err(|e| e.to_string())?;
        Ok(Prepared::Gaudin(real))
    }
}

/// Validates all instances before anything runs.
pub fn prepare_all(spec: &SpecFile, limits: &Limits) -> Result<Vec<Prepared>, ValidationError> {
    spec.instances
        .iter()
        .enumerate()
        .map(|(index, inst)| inst.prepare(limits).map_err(|message| ValidationError { index, message }))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One line of the report stream. Everything except `timing_ms` is a deterministic function of the spec.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub instance: InstanceSpec,
    pub status: Status,
    pub witness: Option<String>,
    pub sizes: Value,
    pub details: Value,
    pub timing_ms: u128,
}

impl InstanceReport {
    /// The report without its timing, for determinism comparisons.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serializable");
        v.as_object_mut().expect("object").remove("timing_ms");
        v.to_string()
    }
}

struct Outcome {
    status: Status,
    witness: Option<String>,
    sizes: Value,
    details: Value,
}

impl Outcome {
    fn from_check(ok: bool, witness: Option<String>, sizes: Value, details: Value) -> Self {
        let witness = if ok { witness } else { witness.or_else(|| Some("check failed".into())) };
        Outcome { status: if ok { Status::Pass } else { Status::Fail }, witness, sizes, details }
    }

    fn error(message: String) -> Self {
        Outcome { status: Status::Error, witness: Some(message), sizes: json!({}), details: json!({}) }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn without_common(mut v: Value) -> Value {
    if let Some(o) = v.as_object_mut() {
        o.remove("common");
    }
    v
}

fn guard(terms: usize, limits: &Limits) -> Result<(), String> {
    if terms > limits.max_terms {
        return Err(format!("term count {terms} exceeds the ceiling {}", limits.max_terms));
    }
    Ok(())
}

/// Seeded rational values for every x^a_i and p^a_i.
fn sample_assignment(m: usize, n: usize, seed: u64) -> Vec<(Var, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for a in 1..=m {
        for i in 1..=n {
            for v in [Var::x(a, i), Var::p(a, i)] {
                let num: i64 = rng.gen_range(-9..=9);
                let den: i64 = rng.gen_range(1..=4);
                out.push((v, Rational::new(num.into(), den.into())));
            }
        }
    }
    out
}

fn substitute(p: &MultiPoly, values: &[(Var, Rational)]) -> MultiPoly {
    values.iter().fold(p.clone(), |acc, (v, r)| acc.substitute(*v, r))
}

fn sample_lax(l: &Matrix<RatFunc<MultiPoly>>, values: &[(Var, Rational)]) -> Matrix<RatFunc<MultiPoly>> {
    l.map(|e| e.map_coeffs(|c| substitute(c, values)))
}

fn sampled_bosonic(real: &Realization, seed: u64) -> Result<Outcome, GaudinError> {
    let values = sample_assignment(real.m, real.n, seed);
    let lm = sample_lax(&realized_lax::<Bosonic>(real, AlgebraSide::GlM)?, &values);
    let ln = sample_lax(&realized_lax::<Bosonic>(real, AlgebraSide::GlN)?, &values);
    let pre_m = bivariate::in_z(&bivariate::divisor_polynomial::<MultiPoly>(real.divisor.points()));
    let pre_n = bivariate::in_lambda(&bivariate::divisor_polynomial::<MultiPoly>(real.dual.points()));
    let poles = |p: bivariate::SpectralPole| GaudinError::ResidualPole { context: "sampled spectral polynomial".into(), point: p.point, order: p.order };
    let lhs = bivariate::to_multipoly(&pre_m.mul(&bivariate::char_det_in_z(&lm)?)).map_err(poles)?;
    let rhs = bivariate::to_multipoly(&pre_n.mul(&bivariate::char_det_in_lambda(&ln)?)).map_err(poles)?;
    let witness = polynomial_witness(&lhs, &rhs);
    Ok(Outcome::from_check(
        witness.is_none(),
        witness,
        json!({"lhs_terms": lhs.len(), "rhs_terms": rhs.len()}),
        json!({"mode": "sampled", "seed": seed}),
    ))
}

fn gaudin_error(e: GaudinError) -> Outcome {
    Outcome::error(e.to_string())
}

fn cyclo_error(e: CycloError) -> Outcome {
    Outcome::error(e.to_string())
}

fn commutativity_outcome(reports: Vec<(&'static str, CommutativityReport)>) -> Outcome {
    let ok = reports.iter().all(|(_, r)| r.passed());
    let witness = reports.iter().find(|(_, r)| !r.passed()).map(|(name, r)| format!("{name}: {:?}", r.failure));
    let pairs: usize = reports.iter().map(|(_, r)| r.pairs_checked).sum();
    let min_pairs = reports.iter().map(|(_, r)| r.pairs_checked).min().unwrap_or(0);
    let details: Vec<Value> = reports.iter().map(|(name, r)| json!({"flavor": name, "report": to_value(r)})).collect();
    Outcome::from_check(ok, witness, json!({"pairs_checked": pairs, "min_pairs_per_flavor": min_pairs}), Value::Array(details))
}

fn run_gaudin(spec: &InstanceSpec, real: &Realization, mode: Mode, seed: u64, limits: &Limits) -> Result<Outcome, GaudinError> {
    Ok(match spec.kind {
        Kind::ClassicalBosonic if mode == Mode::Sampled => sampled_bosonic(real, seed)?,
        Kind::ClassicalBosonic => {
            let r = verify_classical_bosonic_duality(real)?;
            if let Err(e) = guard(r.lhs_terms.max(r.rhs_terms), limits) {
                return Ok(Outcome::error(e));
            }
            Outcome::from_check(
                r.equal,
                r.witness.clone(),
                json!({"lhs_terms": r.lhs_terms, "rhs_terms": r.rhs_terms}),
                without_common(to_value(&r)),
            )
        }
        Kind::ClassicalFermionic => {
            let r = verify_classical_fermionic_duality::<Fermionic>(real)?;
            Outcome::from_check(r.equal, r.witness.clone(), json!({"gl_m_terms": r.gl_m_terms, "gl_n_terms": r.gl_n_terms}), to_value(&r))
        }
        Kind::QuantumBosonic => {
            let r = verify_quantum_duality(real)?;
            Outcome::from_check(
                r.passed(),
                r.witness.clone(),
                json!({"lhs_terms": r.lhs_terms, "rhs_terms": r.rhs_terms}),
                without_common(to_value(&r)),
            )
        }
        Kind::Homomorphism => {
            let flavors = match spec.flavor {
                Some(f) => vec![f],
                None => vec![FlavorSpec::ClassicalBosonic, FlavorSpec::ClassicalFermionic, FlavorSpec::Quantum],
            };
            let mut reports = Vec::new();
            for f in flavors {
                for side in [AlgebraSide::GlM, AlgebraSide::GlN] {
                    reports.push(match f {
                        FlavorSpec::ClassicalBosonic => verify_homomorphism::<Bosonic>(real, side)?,
                        FlavorSpec::ClassicalFermionic => verify_homomorphism::<Fermionic>(real, side)?,
                        FlavorSpec::Quantum => verify_homomorphism::<Quantum>(real, side)?,
                    });
                }
            }
            let ok = reports.iter().all(|r| r.passed());
            let witness = reports.iter().find(|r| !r.passed()).map(|r| format!("{} {:?}: {:?}", r.flavor, r.side, r.failure));
            let pairs: usize = reports.iter().map(|r| r.pairs_checked).sum();
            Outcome::from_check(ok, witness, json!({"pairs_checked": pairs}), to_value(&reports))
        }
        Kind::Commutativity => {
            let flavors = match spec.flavor {
                Some(f) => vec![f],
                None => vec![FlavorSpec::ClassicalBosonic, FlavorSpec::Quantum],
            };
            let mut reports = Vec::new();
            for f in flavors {
                reports.push(match f {
                    FlavorSpec::ClassicalBosonic => {
                        ("classical-bosonic", check_commutativity::<Bosonic>(&extract_classical_generators::<Bosonic>(real)?))
                    }
                    FlavorSpec::ClassicalFermionic => {
                        ("classical-fermionic", check_commutativity::<Fermionic>(&extract_classical_generators::<Fermionic>(real)?))
                    }
                    FlavorSpec::Quantum => ("quantum", check_commutativity::<Quantum>(&extract_quantum_generators(real)?)),
                });
            }
            commutativity_outcome(reports)
        }
        Kind::Cyclotomic | Kind::Neumann | Kind::LaxAlgebra => unreachable!("validated as a cyclotomic instance"),
    })
}

/// Commutativity of the z^j λ^k coefficients of the cyclotomic spectral polynomial.
fn cyclotomic_commutativity(inst: &CycloInstance) -> Result<CommutativityReport, CycloError> {
    let poly = cyclotomic::lax::spectral_cyclotomic(inst)?;
    let mut gens: Vec<MultiPoly> = Vec::new();
    for (_, by_z) in poly.collect(Var::Lambda) {
        for (_, c) in by_z.collect(Var::Z) {
            if !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    let mut pairs_checked = 0;
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate().skip(i) {
            pairs_checked += 1;
            let br = poisson_bracket(a, b);
            if !br.is_zero() {
                return Ok(CommutativityReport { generators: gens.len(), pairs_checked, failure: Some((i, j, br.to_string())) });
            }
        }
    }
    Ok(CommutativityReport { generators: gens.len(), pairs_checked, failure: None })
}

fn run_cyclo(spec: &InstanceSpec, inst: &CycloInstance, mode: Mode, seed: u64, limits: &Limits) -> Result<Outcome, CycloError> {
    Ok(match spec.kind {
        Kind::Cyclotomic | Kind::ClassicalBosonic => {
            let (r, details) = if mode == Mode::Sampled {
                let values = sample_assignment(inst.m, inst.n, seed);
                let lhs = spectral_cyclotomic_from(inst, &sample_lax(&cyclotomic::cyclotomic_lax(inst), &values));
                let rhs = spectral_sp2n_from(inst, &sample_lax(&cyclotomic::sp2n_lax(inst), &values));
                let r = compare_spectral(lhs, rhs)?;
                let d = json!({"mode": "sampled", "seed": seed, "report": without_common(to_value(&r))});
                (r, d)
            } else {
                let r = cyclotomic::verify_cyclotomic_duality(inst)?;
                let d = json!({"mode": "symbolic", "mu": inst.mu.to_string(), "report": without_common(to_value(&r))});
                (r, d)
            };
            if let Err(e) = guard(r.lhs_terms.max(r.rhs_terms), limits) {
                return Ok(Outcome::error(e));
            }
            Outcome::from_check(r.equal, r.witness.clone(), json!({"lhs_terms": r.lhs_terms, "rhs_terms": r.rhs_terms}), details)
        }
        Kind::Homomorphism => {
            let a = cyclotomic::verify_gl_m_homomorphism(inst, CycloFault::None);
            let b = cyclotomic::verify_sp2n_homomorphism(inst);
            let ok = a.passed() && b.passed();
            let witness = a.failure.clone().or_else(|| b.failure.clone());
            Outcome::from_check(ok, witness, json!({"pairs_checked": a.pairs_checked + b.pairs_checked}), to_value(&[a, b]))
        }
        Kind::Commutativity => commutativity_outcome(vec![("cyclotomic", cyclotomic_commutativity(inst)?)]),
        Kind::LaxAlgebra => {
            let mut reports = Vec::new();
            if spec.which != Some(LaxWhich::Sp2n) {
                reports.push(cyclotomic::lax_algebra_cyclotomic(inst));
            }
            if spec.which != Some(LaxWhich::Cyclotomic) {
                reports.push(cyclotomic::lax_algebra_sp2n(inst));
            }
            let ok = reports.iter().all(|r| r.passed());
            let witness = reports.iter().find(|r| !r.passed()).map(|r| format!("{}: {:?}", r.which, r.failure));
            let entries: usize = reports.iter().map(|r| r.entries_checked).sum();
            Outcome::from_check(ok, witness, json!({"entries_checked": entries}), to_value(&reports))
        }
        Kind::ClassicalFermionic | Kind::QuantumBosonic | Kind::Neumann => {
            return Err(CycloError::BadPoints(format!("kind {:?} has no cyclotomic version", spec.kind)));
        }
    })
}

fn run_neumann(freqs: &[Rational]) -> Result<Outcome, CycloError> {
    let art = cyclotomic::neumann_artifacts(freqs)?;
    let r = verify_neumann(&art)?;
    let gl_lax: Vec<Vec<String>> =
        (0..art.gl_lax.rows()).map(|i| (0..art.gl_lax.cols()).map(|j| art.gl_lax.get(i, j).display_in("z")).collect()).collect();
    let sp_lax: Vec<Vec<String>> =
        (0..2).map(|i| (0..2).map(|j| art.sp_lax.get(i, j).display_in("lam")).collect()).collect();
    let details = json!({
        "frequencies": freqs.iter().map(format_rational).collect::<Vec<_>>(),
        "gl_lax": gl_lax,
        "sp_lax": sp_lax,
        "hamiltonian": art.hamiltonian.to_string(),
        "report": to_value(&r),
    });
    Ok(Outcome::from_check(r.passed(), r.witness.clone(), json!({"coefficients_checked": r.coefficients_checked}), details))
}

/// Runs one validated instance.
pub fn run_instance(index: usize, spec: &InstanceSpec, prepared: &Prepared, default_mode: Mode, limits: &Limits) -> InstanceReport {
    let start = Instant::now();
    let mode = spec.mode.unwrap_or(default_mode);
    let seed = 0x5eed_0000 + index as u64;
    let outcome = match prepared {
        Prepared::Gaudin(real) => run_gaudin(spec, real, mode, seed, limits).unwrap_or_else(gaudin_error),
        Prepared::Cyclo(inst) => run_cyclo(spec, inst, mode, seed, limits).unwrap_or_else(cyclo_error),
        Prepared::Neumann(freqs) => run_neumann(freqs).unwrap_or_else(cyclo_error),
    };
    InstanceReport {
        index,
        instance: spec.clone(),
        status: outcome.status,
        witness: outcome.witness,
        sizes: outcome.sizes,
        details: outcome.details,
        timing_ms: start.elapsed().as_millis(),
    }
}

/// Runs all instances on the current rayon pool; the result follows spec order.
pub fn run_all(spec: &SpecFile, prepared: &[Prepared], mode: Mode, limits: &Limits) -> Vec<InstanceReport> {
    spec.instances
        .par_iter()
        .zip(prepared.par_iter())
        .enumerate()
        .map(|(i, (s, p))| run_instance(i, s, p, mode, limits))
        .collect()
}

/// Compositions of `n` with every part at most `max`.
pub fn compositions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n.min(max) {
        for mut rest in compositions(n - first, max) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn points(shape: &[usize], pool: &[i64]) -> Vec<PointSpec> {
    shape.iter().zip(pool).map(|(d, p)| PointSpec { point: p.to_string(), degree: *d }).collect()
}

fn gaudin_spec(kind: Kind, tau: &[usize], dual: &[usize]) -> InstanceSpec {
    InstanceSpec {
        kind,
        m: dual.iter().sum(),
        n: Some(tau.iter().sum()),
        divisor: points(tau, &[1, 2, 3]),
        dual_divisor: points(dual, &[5, 7, 11]),
        tau0: None,
        mu: None,
        frequencies: None,
        flavor: None,
        which: None,
        mode: None,
    }
}

/// Every (τ, τ̃) pair of compositions of N and M (1 ≤ M, N ≤ max_rank) with parts ≤ max_degree.
/// Points are z_i = 1, 2, 3 and λ_a = 5, 7, 11 in order.
pub fn gaudin_grid(max_rank: usize, max_degree: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for m in 1..=max_rank {
            for tau in compositions(n, max_degree) {
                for dual in compositions(m, max_degree) {
                    out.push((tau.clone(), dual));
                }
            }
        }
    }
    out
}

/// The cyclotomic grid: M ∈ {1, 2}, (N, τ₀, τ) ∈ {(1, 1, ∅), (2, 1, (1)), (2, 2, ∅)}, µ ∈ {0, −1, 3/2},
/// plus one instance with symbolic µ.
pub fn cyclotomic_grid() -> Vec<InstanceSpec> {
    let mut out = Vec::new();
    let shapes: [(usize, usize, &[usize]); 3] = [(1, 1, &[]), (2, 1, &[1]), (2, 2, &[])];
    let base = |m: usize, n: usize, tau0: usize, tau: &[usize], mu: &str| InstanceSpec {
        kind: Kind::Cyclotomic,
        m,
        n: Some(n),
        divisor: points(tau, &[1, 2, 3]),
        dual_divisor: points(&vec![1; m], &[5, 7, 11]),
        tau0: Some(tau0),
        mu: Some(mu.into()),
        frequencies: None,
        flavor: None,
        which: None,
        mode: None,
    };
    for m in 1..=2 {
        for (n, tau0, tau) in shapes {
            for mu in ["0", "-1", "3/2"] {
                out.push(base(m, n, tau0, tau, mu));
            }
        }
    }
    out.push(base(2, 2, 1, &[1], "symbolic"));
    out
}

pub fn neumann_spec(m: usize) -> InstanceSpec {
    InstanceSpec {
        kind: Kind::Neumann,
        m,
        n: None,
        divisor: vec![],
        dual_divisor: vec![],
        tau0: None,
        mu: None,
        frequencies: Some((1..=m).map(|w| w.to_string()).collect()),
        flavor: None,
        which: None,
        mode: None,
    }
}

/// The acceptance grid as one spec file.
pub fn preset_paper_core() -> SpecFile {
    let mut instances = Vec::new();
    let full = gaudin_grid(3, 3);
    let small = gaudin_grid(2, 2);
    for (tau, dual) in &full {
        instances.push(gaudin_spec(Kind::ClassicalBosonic, tau, dual));
    }
    for (tau, dual) in &small {
        instances.push(gaudin_spec(Kind::ClassicalFermionic, tau, dual));
    }
    for (tau, dual) in &small {
        instances.push(gaudin_spec(Kind::QuantumBosonic, tau, dual));
    }
    for (tau, dual) in &full {
        let mut s = gaudin_spec(Kind::Homomorphism, tau, dual);
        s.flavor = Some(FlavorSpec::ClassicalBosonic);
        instances.push(s);
        let mut s = gaudin_spec(Kind::Commutativity, tau, dual);
        s.flavor = Some(FlavorSpec::ClassicalBosonic);
        instances.push(s);
    }
    for (tau, dual) in &small {
        for flavor in [FlavorSpec::ClassicalFermionic, FlavorSpec::Quantum] {
            for kind in [Kind::Homomorphism, Kind::Commutativity] {
                let mut s = gaudin_spec(kind, tau, dual);
                s.flavor = Some(flavor);
                instances.push(s);
            }
        }
    }
    let cyclo = cyclotomic_grid();
    for s in &cyclo {
        instances.push(s.clone());
    }
    for s in &cyclo {
        for kind in [Kind::Homomorphism, Kind::Commutativity, Kind::LaxAlgebra] {
            let mut t = s.clone();
            t.kind = kind;
            instances.push(t);
        }
    }
    for m in 2..=3 {
        instances.push(neumann_spec(m));
    }
    SpecFile { instances }
}

pub fn preset_neumann(m: Option<usize>) -> SpecFile {
    let ms = match m {
        Some(m) => vec![m],
        None => vec![2, 3],
    };
    SpecFile { instances: ms.into_iter().map(neumann_spec).collect() }
}

pub fn preset(name: &str, m: Option<usize>) -> Option<SpecFile> {
    match name {
        "paper-core" => Some(preset_paper_core()),
        "neumann" => Some(preset_neumann(m)),
        _ => None,
    }
}
