//! Verification sweeps over triples and random arrays.

use std::num::NonZeroUsize;
use std::str::FromStr;

use lrhive::oracle::product_decomposition;
use lrhive::{sample, DominantWeight, Entry, HArray, LRTriple};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::checks;

/// How triples are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sampled(NonZeroUsize),
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "exhaustive" {
            return Ok(SweepMode::Exhaustive);
        }
        let k = s
            .strip_prefix("sampled:")
            .ok_or_else(|| format!("mode must be `exhaustive` or `sampled:<k>`, got `{s}`"))?;
        let k: usize = k.parse().map_err(|_| format!("bad sample count `{k}`"))?;
        NonZeroUsize::new(k)
            .map(SweepMode::Sampled)
            .ok_or_else(|| "sample count must be at least 1".to_string())
    }
}

impl std::fmt::Display for SweepMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepMode::Exhaustive => write!(f, "exhaustive"),
            SweepMode::Sampled(k) => write!(f, "sampled:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySweepConfig {
    pub n: usize,
    pub max_part: Entry,
    pub seed: u64,
    pub mode: SweepMode,
    /// Random arrays per array-level check.
    pub random_arrays: usize,
}

impl VerifySweepConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n == 0 {
            return Err("n must be at least 1".into());
        }
        if self.max_part < 0 {
            return Err("max-part must be non-negative".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: serde_json::Value,
    pub detail: String,
}

/// Machine-readable sweep summary; field order is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub max_part: Entry,
    pub mode: String,
    pub seed: u64,
    pub triples_checked: usize,
    pub nonzero_triples: usize,
    pub objects_checked: usize,
    pub random_arrays_checked: usize,
    pub perturbations_checked: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "verify n={} max-part={} mode={} seed={}\n",
            self.n, self.max_part, self.mode, self.seed
        );
        s += &format!(
            "triples: {} ({} nonzero), objects: {}, random arrays: {}, perturbations: {}\n",
            self.triples_checked,
            self.nonzero_triples,
            self.objects_checked,
            self.random_arrays_checked,
            self.perturbations_checked
        );
        if self.passed() {
            s += "result: pass\n";
        } else {
            s += &format!("result: FAIL ({} failures)\n", self.failure_count);
            for f in &self.failures {
                s += &format!("  {}: {} on {}\n", f.check, f.detail, f.input);
            }
        }
        s
    }
}

/// Failures kept in the report; the total is always reported.
const MAX_REPORTED_FAILURES: usize = 20;

/// All partitions with `n` parts bounded by `max_part`, in decreasing lexicographic order.
pub fn partitions(n: usize, max_part: Entry) -> Vec<DominantWeight> {
    fn extend(prefix: &mut Vec<Entry>, n: usize, bound: Entry, out: &mut Vec<DominantWeight>) {
        if prefix.len() == n {
            out.push(DominantWeight::polynomial(prefix.clone()).expect("decreasing"));
            return;
        }
        for v in (0..=bound).rev() {
            prefix.push(v);
            extend(prefix, n, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, max_part, &mut out);
    out
}

/// `(|mu| + |nu|, 0, ..., 0)`, a zero-coefficient probe unless both are single rows.
fn one_row(mu: &DominantWeight, nu: &DominantWeight) -> DominantWeight {
    let mut parts = vec![0; mu.n()];
    parts[0] = mu.parts().iter().sum::<Entry>() + nu.parts().iter().sum::<Entry>();
    DominantWeight::polynomial(parts).expect("single row")
}

/// Triples for `(mu, nu)`: every `lambda` in the support of `s_mu s_nu`, plus the one-row probe.
fn triples_for(mu: &DominantWeight, nu: &DominantWeight) -> Result<Vec<LRTriple>, String> {
    let support = product_decomposition(mu, nu).map_err(|e| e.to_string())?;
    let mut lambdas: Vec<DominantWeight> = support.into_keys().collect();
    let probe = one_row(mu, nu);
    if !lambdas.contains(&probe) {
        lambdas.push(probe);
    }
    lambdas
        .into_iter()
        .map(|l| LRTriple::new(mu.clone(), nu.clone(), l).map_err(|e| e.to_string()))
        .collect()
}

pub fn sweep_triples(config: &VerifySweepConfig) -> Result<Vec<LRTriple>, String> {
    let parts = partitions(config.n, config.max_part);
    match config.mode {
        SweepMode::Exhaustive => {
            let mut out = Vec::new();
            for mu in &parts {
                for nu in &parts {
                    out.extend(triples_for(mu, nu)?);
                }
            }
            Ok(out)
        }
        SweepMode::Sampled(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut out = Vec::with_capacity(k.get());
            for _ in 0..k.get() {
                let mu = parts.choose(&mut rng).expect("at least the zero partition");
                let nu = parts.choose(&mut rng).expect("at least the zero partition");
                let options = triples_for(mu, nu)?;
                out.push(
                    options
                        .choose(&mut rng)
                        .expect("probe is always present")
                        .clone(),
                );
            }
            Ok(out)
        }
    }
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("plain data serializes")
}

struct TripleOutcome {
    nonzero: bool,
    objects: usize,
    failures: Vec<Failure>,
}

fn verify_triple(t: &LRTriple) -> TripleOutcome {
    let mut failures = Vec::new();
    let mut objects = 0;
    let mut nonzero = false;
    match checks::triple_counts(t) {
        Ok(c) => {
            nonzero = c.oracle > 0;
            if let Err(detail) = checks::check_four_models(&c) {
                failures.push(Failure {
                    check: "four-model agreement".into(),
                    input: json(t),
                    detail,
                });
            }
        }
        Err(detail) => failures.push(Failure {
            check: "oracle".into(),
            input: json(t),
            detail,
        }),
    }
    match checks::check_round_trips(t) {
        Ok(k) => objects = k,
        Err(detail) => failures.push(Failure {
            check: "round trips".into(),
            input: json(t),
            detail,
        }),
    }
    TripleOutcome {
        nonzero,
        objects,
        failures,
    }
}

enum ArrayCase {
    Laws(HArray),
    Boundary(HArray),
    Perturbation(LRTriple, HArray, usize, usize, Entry),
    Semigroup(HArray, HArray),
}

fn array_cases(config: &VerifySweepConfig) -> Vec<ArrayCase> {
    let n = config.n;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5e_eda7_7a15);
    let mut cases = Vec::new();
    let interior: Vec<(usize, usize)> = HArray::interior_positions(n).collect();
    let max_part = config.max_part.max(1);
    for _ in 0..config.random_arrays {
        cases.push(ArrayCase::Laws(sample::harray(&mut rng, n, -5, 5)));
        cases.push(ArrayCase::Boundary(
            sample::perturbed_hive(&mut rng, n, max_part, 2).1,
        ));
        if !interior.is_empty() {
            let (t, h) = sample::hive(&mut rng, n, max_part);
            let (a, b) = *interior.choose(&mut rng).expect("non-empty");
            let delta = if rng.gen_bool(0.5) { 1 } else { -1 };
            cases.push(ArrayCase::Perturbation(t, h, a, b, delta));
        }
        let g = sample::hive(&mut rng, n, max_part).1;
        let h = sample::hive(&mut rng, n, max_part).1;
        cases.push(ArrayCase::Semigroup(g, h));
    }
    cases
}

fn run_array_case(case: &ArrayCase) -> Option<Failure> {
    let (check, input, result) = match case {
        ArrayCase::Laws(h) => ("array laws", json(h), checks::check_array_laws(h)),
        ArrayCase::Boundary(h) => ("boundary laws", json(h), checks::check_boundary_laws(h)),
        ArrayCase::Perturbation(t, h, a, b, d) => (
            "perturbation",
            serde_json::json!({"triple": json(t), "hive": json(h), "a": a, "b": b, "delta": d}),
            checks::check_perturbation(h, t, *a, *b, *d).map(|_| ()),
        ),
        ArrayCase::Semigroup(g, h) => (
            "semigroup",
            serde_json::json!([json(g), json(h)]),
            checks::check_semigroup_hives(g, h),
        ),
    };
    result.err().map(|detail| Failure {
        check: check.into(),
        input,
        detail,
    })
}

/// Runs the sweep. Work is spread over the rayon pool; the report does not depend
/// on the number of workers.
pub fn run_sweep(config: &VerifySweepConfig) -> Result<SweepReport, String> {
    config.validate()?;
    let triples = sweep_triples(config)?;
    let outcomes: Vec<TripleOutcome> = triples.par_iter().map(verify_triple).collect();
    let cases = array_cases(config);
    let array_failures: Vec<Option<Failure>> = cases.par_iter().map(run_array_case).collect();

    let mut failures: Vec<Failure> = Vec::new();
    let mut failure_count = 0;
    let mut push = |f: Failure| {
        failure_count += 1;
        if failures.len() < MAX_REPORTED_FAILURES {
            failures.push(f);
        }
    };
    let mut nonzero = 0;
    let mut objects = 0;
    for o in outcomes {
        nonzero += usize::from(o.nonzero);
        objects += o.objects;
        o.failures.into_iter().for_each(&mut push);
    }
    array_failures.into_iter().flatten().for_each(&mut push);
    let perturbations = cases
        .iter()
        .filter(|c| matches!(c, ArrayCase::Perturbation(..)))
        .count();

    Ok(SweepReport {
        n: config.n,
        max_part: config.max_part,
        mode: config.mode.to_string(),
        seed: config.seed,
        triples_checked: triples.len(),
        nonzero_triples: nonzero,
        objects_checked: objects,
        random_arrays_checked: cases.len(),
        perturbations_checked: perturbations,
        failure_count,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_parsing() {
        assert_eq!(
            "exhaustive".parse::<SweepMode>().unwrap(),
            SweepMode::Exhaustive
        );
        assert_eq!(
            "sampled:50".parse::<SweepMode>().unwrap(),
            SweepMode::Sampled(NonZeroUsize::new(50).unwrap())
        );
        assert!("sampled:0".parse::<SweepMode>().is_err());
        assert!("random".parse::<SweepMode>().is_err());
    }

    #[test]
    fn partition_listing() {
        assert_eq!(partitions(3, 3).len(), 20);
        assert_eq!(partitions(1, 0).len(), 1);
        assert_eq!(partitions(2, 1).len(), 3);
    }

    #[test]
    fn trivial_sweep_passes() {
        let config = VerifySweepConfig {
            n: 1,
            max_part: 0,
            seed: 0,
            mode: SweepMode::Exhaustive,
            random_arrays: 10,
        };
        let r = run_sweep(&config).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.triples_checked, 1);
    }
}
