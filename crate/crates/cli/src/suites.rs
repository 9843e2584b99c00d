//! Seeded property suites behind `check`: each suite replays the module
//! invariants on deterministic random instances and reports instance and
//! mismatch counts as one JSON line. Resource-limited instances are skipped
//! and counted, never fatal.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;

use borelkit_core::ideal::{
    borel_closure_k, is_regular_decomposition, lex_certificate, linear_quotient_certificate,
    LqOutcome,
};
use borelkit_core::invariants::{
    analytic_spread_from_borel_gens, linear_relation_graph, minimal_primes, multiplicity_multi,
    multiplicity_principal, oracle_analytic_spread, MultiMultiplicity,
};
use borelkit_core::monomial::Monomial;
use borelkit_core::resolution::{
    betti_kborel, hs_from_oracle, hs_via_linear_quotients, koszul_homology_oracle, OracleOptions,
};
use borelkit_core::sample::{random_linear_extension, rng_for_seed, sample_instance, SampleConfig};
use borelkit_core::shifts::{expand_squarefree, hs_recursion_check, hsk_borel};
use borelkit_core::tspread::{
    hs1_linear_quotient_order, tspread_generators, tspread_hs, TSpreadVeroneseSpec,
};
use borelkit_core::Error;

use crate::output::emit;
use crate::{oracle_limit, Cli};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Betti,
    Hs,
    Mult,
    Aspread,
    Lq,
    #[value(name = "regular-decomp")]
    RegularDecomp,
    Tspread,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteSize {
    Small,
    Medium,
}

impl SuiteSize {
    fn label(self) -> &'static str {
        match self {
            SuiteSize::Small => "small",
            SuiteSize::Medium => "medium",
        }
    }

    fn count(self, small: usize, medium: usize) -> usize {
        match self {
            SuiteSize::Small => small,
            SuiteSize::Medium => medium,
        }
    }
}

#[derive(Serialize)]
struct SuiteReport {
    command: &'static str,
    suite: &'static str,
    seed: u64,
    size: &'static str,
    instances: usize,
    mismatches: usize,
    resource_skips: usize,
    skipped: Vec<String>,
    failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str, seed: u64, size: SuiteSize) -> Self {
        SuiteReport {
            command: "check",
            suite,
            seed,
            size: size.label(),
            instances: 0,
            mismatches: 0,
            resource_skips: 0,
            skipped: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, message: String) {
        self.mismatches += 1;
        self.failures.push(message);
    }

    fn skip(&mut self, message: String) {
        self.resource_skips += 1;
        self.skipped.push(message);
    }
}

pub fn run(cli: &Cli, suite: SuiteName, size: SuiteSize) -> Result<bool, Error> {
    let seed = cli.seed;
    let limit = oracle_limit(cli);
    let reports: Vec<SuiteReport> = match suite {
        SuiteName::Betti => vec![betti_suite(seed, size, limit)],
        SuiteName::Hs => vec![hs_suite(seed, size, limit)],
        SuiteName::Mult => vec![mult_suite(seed, size)],
        SuiteName::Aspread => vec![aspread_suite(seed, size)],
        SuiteName::Lq => vec![lq_suite(seed, size)],
        SuiteName::RegularDecomp => vec![regular_decomp_suite(seed, size)],
        SuiteName::Tspread => vec![tspread_suite(seed, size, limit)],
        SuiteName::All => vec![
            betti_suite(seed, size, limit),
            hs_suite(seed, size, limit),
            mult_suite(seed, size),
            aspread_suite(seed, size),
            lq_suite(seed, size),
            regular_decomp_suite(seed, size),
            tspread_suite(seed, size, limit),
        ],
    };
    let mut total_instances = 0;
    let mut total_mismatches = 0;
    for report in &reports {
        total_instances += report.instances;
        total_mismatches += report.mismatches;
        emit(cli, &serde_json::to_value(report).expect("serializable"));
    }
    if suite == SuiteName::All {
        emit(
            cli,
            &json!({
                "command": "check",
                "suite": "all",
                "seed": seed,
                "total_instances": total_instances,
                "total_mismatches": total_mismatches,
                "ok": total_mismatches == 0,
            }),
        );
    }
    Ok(total_mismatches == 0)
}

fn describe(n: usize, k: u32, gens: &[Monomial]) -> String {
    let names: Vec<String> = gens.iter().map(ToString::to_string).collect();
    format!("n={n} k={k} borel=[{}]", names.join(", "))
}

fn betti_suite(seed: u64, size: SuiteSize, limit: usize) -> SuiteReport {
    let mut report = SuiteReport::new("betti", seed, size);
    let mut rng = rng_for_seed(seed.wrapping_add(1));
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 3,
        m_max: 3,
        equigenerated: false,
    };
    let options = OracleOptions::with_limit(limit);
    for _ in 0..size.count(25, 100) {
        let inst = sample_instance(&mut rng, &config);
        report.instances += 1;
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).expect("sampled");
        let formula = betti_kborel(&ideal, inst.k).expect("closure is bounded Borel");
        match koszul_homology_oracle(&ideal, &options) {
            Err(Error::ResourceLimit(e)) => report.skip(format!(
                "{}: {e}",
                describe(inst.n, inst.k, &inst.borel_gens)
            )),
            Err(e) => report.fail(format!(
                "oracle error on {}: {e}",
                describe(inst.n, inst.k, &inst.borel_gens)
            )),
            Ok(oracle) => {
                if oracle.collapse() != formula {
                    report.fail(format!(
                        "betti mismatch on {}",
                        describe(inst.n, inst.k, &inst.borel_gens)
                    ));
                }
            }
        }
    }
    report
}

fn hs_suite(seed: u64, size: SuiteSize, limit: usize) -> SuiteReport {
    let mut report = SuiteReport::new("hs", seed, size);
    let mut rng = rng_for_seed(seed.wrapping_add(2));
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: true,
    };
    let options = OracleOptions::with_limit(limit);
    for _ in 0..size.count(10, 30) {
        let inst = sample_instance(&mut rng, &config);
        report.instances += 1;
        let desc = describe(inst.n, 1, &inst.borel_gens);
        let ideal = expand_squarefree(&inst.borel_gens, inst.n).expect("sampled");
        if ideal.is_unit() {
            continue;
        }
        let cert = lex_certificate(&ideal).expect("squarefree Borel");
        let projdim = betti_kborel(&ideal, 1).expect("bounded Borel").projdim();
        for j in 0..=projdim {
            let borel = expand_squarefree(&hsk_borel(&inst.borel_gens, j).expect("valid"), inst.n)
                .expect("sampled");
            let cone = hs_via_linear_quotients(&ideal, &cert, j).expect("certified");
            let oracle = match hs_from_oracle(&ideal, j, &options) {
                Err(Error::ResourceLimit(e)) => {
                    report.skip(format!("{desc} at j={j}: {e}"));
                    continue;
                }
                Err(e) => {
                    report.fail(format!("oracle error on {desc}: {e}"));
                    continue;
                }
                Ok(o) => o,
            };
            if !borel.same_ideal(&cone) || !borel.same_ideal(&oracle) {
                report.fail(format!("shift mismatch on {desc} at j={j}"));
            }
        }
        for j in 1..projdim.max(1) {
            if !hs_recursion_check(&inst.borel_gens, j).expect("valid") {
                report.fail(format!("shift recursion fails on {desc} at j={j}"));
            }
        }
    }
    report
}

fn mult_suite(seed: u64, size: SuiteSize) -> SuiteReport {
    let mut report = SuiteReport::new("mult", seed, size);
    let mut rng = rng_for_seed(seed.wrapping_add(3));
    let principal = SampleConfig {
        n_max: 7,
        d_max: 5,
        k_max: 1,
        m_max: 1,
        equigenerated: true,
    };
    for _ in 0..size.count(25, 100) {
        let inst = sample_instance(&mut rng, &principal);
        report.instances += 1;
        let u = &inst.borel_gens[0];
        let formula = multiplicity_principal(u).expect("squarefree");
        let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).expect("sampled");
        let primes = minimal_primes(&ideal).expect("proper squarefree");
        if formula.multiplicity != primes.multiplicity() || formula.height != primes.height() {
            report.fail(format!("principal multiplicity mismatch on B({u})"));
        }
    }
    let multi = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: false,
    };
    for _ in 0..size.count(15, 50) {
        let inst = sample_instance(&mut rng, &multi);
        report.instances += 1;
        match multiplicity_multi(&inst.borel_gens).expect("squarefree") {
            MultiMultiplicity::HypothesisNotSatisfied => continue,
            MultiMultiplicity::Value { multiplicity, .. } => {
                let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).expect("sampled");
                if ideal.is_unit() {
                    continue;
                }
                let primes = minimal_primes(&ideal).expect("proper squarefree");
                if multiplicity != primes.multiplicity() {
                    report.fail(format!(
                        "multi multiplicity mismatch on {}",
                        describe(inst.n, 1, &inst.borel_gens)
                    ));
                }
            }
        }
    }
    report
}

fn aspread_suite(seed: u64, size: SuiteSize) -> SuiteReport {
    let mut report = SuiteReport::new("aspread", seed, size);
    let mut rng = rng_for_seed(seed.wrapping_add(4));
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: true,
    };
    let mut checked = 0;
    while checked < size.count(25, 100) {
        let inst = sample_instance(&mut rng, &config);
        let formula = match analytic_spread_from_borel_gens(&inst.borel_gens) {
            Err(Error::PrincipalIdeal) => continue,
            other => other.expect("sampled"),
        };
        checked += 1;
        report.instances += 1;
        let desc = describe(inst.n, 1, &inst.borel_gens);
        let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).expect("sampled");
        let oracle = oracle_analytic_spread(&ideal).expect("equigenerated");
        if formula != oracle {
            report.fail(format!("analytic spread mismatch on {desc}"));
        }
        if !inst.borel_gens.iter().all(|u| u.min_var() == Some(1)) {
            let bound = inst
                .borel_gens
                .iter()
                .filter_map(Monomial::max_var)
                .max()
                .unwrap_or(0);
            let graph = linear_relation_graph(&ideal).expect("equigenerated");
            if !graph.is_connected_on(bound) {
                report.fail(format!("relation graph disconnected on {desc}"));
            }
        }
    }
    report
}

fn lq_suite(seed: u64, size: SuiteSize) -> SuiteReport {
    let mut report = SuiteReport::new("lq", seed, size);
    let mut rng = rng_for_seed(seed.wrapping_add(5));
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 3,
        m_max: 3,
        equigenerated: false,
    };
    for _ in 0..size.count(10, 30) {
        let inst = sample_instance(&mut rng, &config);
        report.instances += 1;
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).expect("sampled");
        if lex_certificate(&ideal).is_err() {
            report.fail(format!(
                "lex order fails on {}",
                describe(inst.n, inst.k, &inst.borel_gens)
            ));
        }
    }
    let equi = SampleConfig {
        n_max: 5,
        d_max: 3,
        k_max: 3,
        m_max: 2,
        equigenerated: true,
    };
    for _ in 0..size.count(5, 15) {
        let inst = sample_instance(&mut rng, &equi);
        report.instances += 1;
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).expect("sampled");
        for _ in 0..5 {
            let order = random_linear_extension(&mut rng, ideal.gens());
            match linear_quotient_certificate(&ideal, &order).expect("permutation") {
                LqOutcome::Quotients(_) => {}
                LqOutcome::Fails { index, .. } => report.fail(format!(
                    "extension order fails at {index} on {}",
                    describe(inst.n, inst.k, &inst.borel_gens)
                )),
            }
        }
    }
    report
}

fn regular_decomp_suite(seed: u64, size: SuiteSize) -> SuiteReport {
    let mut report = SuiteReport::new("regular-decomp", seed, size);
    let mut rng = rng_for_seed(seed.wrapping_add(6));
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 3,
        m_max: 3,
        equigenerated: false,
    };
    for _ in 0..size.count(15, 50) {
        let inst = sample_instance(&mut rng, &config);
        report.instances += 1;
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).expect("sampled");
        let cert = lex_certificate(&ideal).expect("bounded Borel");
        let check = is_regular_decomposition(&ideal, &cert).expect("certified");
        if !check.regular {
            report.fail(format!(
                "irregular decomposition on {} witness {:?}",
                describe(inst.n, inst.k, &inst.borel_gens),
                check.witness
            ));
        }
    }
    report
}

fn tspread_suite(seed: u64, size: SuiteSize, limit: usize) -> SuiteReport {
    // Exhaustive over a parameter box; the seed is echoed but unused.
    let mut report = SuiteReport::new("tspread", seed, size);
    let n_max = size.count(5, 7);
    let options = OracleOptions::with_limit(limit);
    for n in 2..=n_max {
        for d in 1..=n.min(4) {
            for t in 1..=n.min(3) {
                let spec = TSpreadVeroneseSpec::new(n, d, t).expect("valid");
                report.instances += 1;
                let ideal = tspread_generators(&spec);
                if ideal.num_gens() as u64 != spec.generator_count() {
                    report.fail(format!("generator count off at ({n},{d},{t})"));
                }
                if ideal.is_zero() {
                    continue;
                }
                let cert = lex_certificate(&ideal).expect("spread ideals have lex lq");
                let mut j = 0u32;
                loop {
                    let direct = tspread_hs(&spec, j);
                    let cone = hs_via_linear_quotients(&ideal, &cert, j).expect("certified");
                    match hs_from_oracle(&ideal, j, &options) {
                        Err(Error::ResourceLimit(e)) => {
                            report.skip(format!("({n},{d},{t}) j={j}: {e}"));
                        }
                        Err(e) => report.fail(format!("oracle error ({n},{d},{t}): {e}")),
                        Ok(oracle) => {
                            if !direct.same_ideal(&cone) || !direct.same_ideal(&oracle) {
                                report.fail(format!("shift mismatch ({n},{d},{t}) j={j}"));
                            }
                        }
                    }
                    if direct.is_zero() {
                        break;
                    }
                    j += 1;
                }
                if hs1_linear_quotient_order(&spec).is_err() {
                    report.fail(format!("first-shift order fails at ({n},{d},{t})"));
                }
            }
        }
    }
    report
}
