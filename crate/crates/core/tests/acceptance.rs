//! Acceptance suite: every criterion is one test that prints a PASS line,
//! with exact (zero-tolerance) integer comparisons throughout. Criterion 8
//! (byte-identical CLI reports) lives with the command line crate.

mod common;

use std::collections::BTreeSet;

use borelkit_core::binomial;
use borelkit_core::ideal::{
    borel_closure_k, height_from_borel_gens, is_regular_decomposition, lex_certificate,
    linear_quotient_certificate, LqOutcome, MonomialIdeal,
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
use borelkit_core::shifts::{
    expand_squarefree, hs_recursion_check, hsk_borel, monotonicity_profile,
    multiplicity_unimodality,
};
use borelkit_core::tspread::{
    hs1_linear_quotient_order, tspread_generators, tspread_hs, TSpreadVeroneseSpec,
};
use borelkit_core::Error;

fn m(s: &str, n: usize) -> Monomial {
    Monomial::parse(s, n).unwrap()
}

#[test]
fn criterion_1_betti_formula_vs_oracle() {
    let mut rng = rng_for_seed(101);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 3,
        m_max: 3,
        equigenerated: false,
    };
    for idx in 0..200 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).unwrap();
        let formula = betti_kborel(&ideal, inst.k).unwrap();
        let oracle = koszul_homology_oracle(&ideal, &OracleOptions::default())
            .unwrap()
            .collapse();
        assert_eq!(
            formula, oracle,
            "criterion 1: FAIL at instance {idx}: {ideal:?} with k={}",
            inst.k
        );
    }
    println!("criterion 1 (betti formula vs oracle, 200 instances): PASS");
}

#[test]
fn criterion_2_worked_instance_pin() {
    let n = 4;
    let bg = vec![m("x2*x4", n)];
    let ideal = borel_closure_k(&bg, 1, n).unwrap();

    let formula = betti_kborel(&ideal, 1).unwrap();
    assert_eq!(
        formula.totals(),
        vec![5, 6, 2],
        "criterion 2: FAIL (formula betti)"
    );
    let oracle = koszul_homology_oracle(&ideal, &OracleOptions::default())
        .unwrap()
        .collapse();
    assert_eq!(
        oracle.totals(),
        vec![5, 6, 2],
        "criterion 2: FAIL (oracle betti)"
    );

    assert_eq!(
        height_from_borel_gens(&bg).unwrap(),
        2,
        "criterion 2: FAIL (formula height)"
    );
    assert_eq!(
        minimal_primes(&ideal).unwrap().height(),
        2,
        "criterion 2: FAIL (oracle height)"
    );

    let expected_hs2 = MonomialIdeal::minimalize(vec![m("x1*x2*x3*x4", n)], n).unwrap();
    let via_gaps = expand_squarefree(&hsk_borel(&bg, 2).unwrap(), n).unwrap();
    let via_cone = hs_via_linear_quotients(&ideal, &lex_certificate(&ideal).unwrap(), 2).unwrap();
    let via_oracle = hs_from_oracle(&ideal, 2, &OracleOptions::default()).unwrap();
    assert!(
        via_gaps.same_ideal(&expected_hs2),
        "criterion 2: FAIL (gap shift)"
    );
    assert!(
        via_cone.same_ideal(&expected_hs2),
        "criterion 2: FAIL (cone shift)"
    );
    assert!(
        via_oracle.same_ideal(&expected_hs2),
        "criterion 2: FAIL (oracle shift)"
    );

    println!("criterion 2 (pinned instance betti/height/second shift): PASS");
}

#[test]
fn criterion_3_linear_quotients() {
    let mut rng = rng_for_seed(103);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 3,
        m_max: 3,
        equigenerated: false,
    };
    for idx in 0..60 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).unwrap();
        let cert = lex_certificate(&ideal)
            .unwrap_or_else(|e| panic!("criterion 3: FAIL (lex lq, instance {idx}): {e}"));
        let regular = is_regular_decomposition(&ideal, &cert).unwrap();
        assert!(
            regular.regular,
            "criterion 3: FAIL (regular decomposition, instance {idx}): witness {:?}",
            regular.witness
        );
    }

    let equi_config = SampleConfig {
        n_max: 5,
        d_max: 3,
        k_max: 3,
        m_max: 2,
        equigenerated: true,
    };
    for idx in 0..25 {
        let inst = sample_instance(&mut rng, &equi_config);
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).unwrap();
        for trial in 0..5 {
            let order = random_linear_extension(&mut rng, ideal.gens());
            let outcome = linear_quotient_certificate(&ideal, &order).unwrap();
            assert!(
                matches!(outcome, LqOutcome::Quotients(_)),
                "criterion 3: FAIL (order extension {trial}, instance {idx}): {ideal:?}"
            );
        }
    }

    // Pinned counterexample to regularity for a non-Borel order.
    let n = 4;
    let order = vec![m("x2*x4", n), m("x1*x2", n), m("x1*x3", n)];
    let ideal = MonomialIdeal::minimalize(order.clone(), n).unwrap();
    let cert = linear_quotient_certificate(&ideal, &order)
        .unwrap()
        .certificate()
        .expect("criterion 3: FAIL: the pinned order has linear quotients");
    let check = is_regular_decomposition(&ideal, &cert).unwrap();
    assert!(!check.regular, "criterion 3: FAIL (pinned irregularity)");
    assert_eq!(
        check.witness,
        Some((m("x1*x3", n), 2)),
        "criterion 3: FAIL (pinned witness)"
    );

    println!("criterion 3 (linear quotients + regular decomposition): PASS");
}

#[test]
fn criterion_4_multiplicity() {
    // Principal squarefree instances, n <= 7.
    let mut rng = rng_for_seed(104);
    let config = SampleConfig {
        n_max: 7,
        d_max: 5,
        k_max: 1,
        m_max: 1,
        equigenerated: true,
    };
    for idx in 0..100 {
        let inst = sample_instance(&mut rng, &config);
        let u = &inst.borel_gens[0];
        let formula = multiplicity_principal(u).unwrap();
        let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).unwrap();
        let primes = minimal_primes(&ideal).unwrap();
        assert_eq!(
            formula.multiplicity,
            primes.multiplicity(),
            "criterion 4: FAIL (principal, instance {idx}): B({u})"
        );
        // Predicted family: exactly the h-subsets of [1, max(B1)].
        let h = formula.height;
        let expected: BTreeSet<Vec<usize>> = subsets_of_size(formula.prime_index_bound, h);
        let actual: BTreeSet<Vec<usize>> = primes
            .primes_at_height(h)
            .into_iter()
            .map(|p| p.to_vec())
            .collect();
        assert_eq!(
            expected, actual,
            "criterion 4: FAIL (prime family, instance {idx}): B({u})"
        );
    }

    // Multi-generator instances satisfying the containment hypothesis.
    let multi_config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: false,
    };
    let mut confirmed = 0;
    while confirmed < 100 {
        let inst = sample_instance(&mut rng, &multi_config);
        if inst.borel_gens.len() < 2 {
            continue;
        }
        match multiplicity_multi(&inst.borel_gens).unwrap() {
            MultiMultiplicity::HypothesisNotSatisfied => continue,
            MultiMultiplicity::Value { multiplicity, .. } => {
                let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).unwrap();
                if ideal.is_unit() {
                    continue;
                }
                let primes = minimal_primes(&ideal).unwrap();
                assert_eq!(
                    multiplicity,
                    primes.multiplicity(),
                    "criterion 4: FAIL (multi, instance {confirmed}): {:?}",
                    inst.borel_gens
                );
                confirmed += 1;
            }
        }
    }

    // Pinned hypothesis-violating regression: first blocks {2,3} and {1};
    // every candidate first-block value differs from the true count of 2.
    let n = 4;
    let bad = vec![m("x2*x3", n), m("x1*x4", n)];
    assert_eq!(
        multiplicity_multi(&bad).unwrap(),
        MultiMultiplicity::HypothesisNotSatisfied,
        "criterion 4: FAIL (pinned hypothesis check)"
    );
    let ideal = borel_closure_k(&bad, 1, n).unwrap();
    let oracle = minimal_primes(&ideal).unwrap().multiplicity();
    assert_eq!(oracle, 2, "criterion 4: FAIL (pinned oracle value)");
    let candidate_formula_values = [binomial(3, 1), binomial(1, 0)];
    assert!(
        candidate_formula_values.iter().all(|&v| v != oracle),
        "criterion 4: FAIL (pinned counterexample no longer separates)"
    );

    println!("criterion 4 (multiplicity formulas vs cover oracle): PASS");
}

#[test]
fn criterion_5_analytic_spread() {
    let mut rng = rng_for_seed(105);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: true,
    };
    let mut checked = 0;
    while checked < 100 {
        let inst = sample_instance(&mut rng, &config);
        let formula = match analytic_spread_from_borel_gens(&inst.borel_gens) {
            Err(Error::PrincipalIdeal) => continue,
            other => other.unwrap(),
        };
        let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).unwrap();
        let oracle = oracle_analytic_spread(&ideal).unwrap();
        assert_eq!(
            formula, oracle,
            "criterion 5: FAIL (spread, instance {checked}): {:?}",
            inst.borel_gens
        );
        let one_in_all = inst.borel_gens.iter().all(|u| u.min_var() == Some(1));
        if !one_in_all {
            let n = inst
                .borel_gens
                .iter()
                .map(|u| u.max_var().unwrap())
                .max()
                .unwrap();
            let graph = linear_relation_graph(&ideal).unwrap();
            assert!(
                graph.is_connected_on(n),
                "criterion 5: FAIL (connectivity, instance {checked}): {:?}",
                inst.borel_gens
            );
        }
        checked += 1;
    }
    println!("criterion 5 (analytic spread formula vs rank oracle, 100 instances): PASS");
}

#[test]
fn criterion_6_homological_shifts() {
    let mut rng = rng_for_seed(106);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: true,
    };
    for idx in 0..50 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = expand_squarefree(&inst.borel_gens, inst.n).unwrap();
        if ideal.is_unit() {
            continue;
        }
        let cert = lex_certificate(&ideal).unwrap();
        let projdim = betti_kborel(&ideal, 1).unwrap().projdim();
        for j in 0..=projdim {
            let borel =
                expand_squarefree(&hsk_borel(&inst.borel_gens, j).unwrap(), inst.n).unwrap();
            let cone = hs_via_linear_quotients(&ideal, &cert, j).unwrap();
            let oracle = hs_from_oracle(&ideal, j, &OracleOptions::default()).unwrap();
            assert!(
                borel.same_ideal(&cone) && borel.same_ideal(&oracle),
                "criterion 6: FAIL (three paths, instance {idx}, j={j}): {:?}",
                inst.borel_gens
            );
        }
        for j in 1..projdim.max(1) {
            assert!(
                hs_recursion_check(&inst.borel_gens, j).unwrap(),
                "criterion 6: FAIL (recursion, instance {idx}, j={j})"
            );
        }
        let profile = monotonicity_profile(&inst.borel_gens).unwrap();
        assert!(
            profile.height_chain_nonincreasing,
            "criterion 6: FAIL (height chain, instance {idx})"
        );
        assert!(
            profile.spread_chain_nonincreasing_where_formula,
            "criterion 6: FAIL (spread chain, instance {idx})"
        );
    }

    // Unimodality for every principal squarefree instance with n <= 8.
    for mask in 1u32..(1 << 8) {
        let support: Vec<usize> = (1..=8).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let u = Monomial::squarefree(&support, 8).unwrap();
        let report = multiplicity_unimodality(&u).unwrap();
        assert!(
            report.unimodal,
            "criterion 6: FAIL (unimodality): u = {u}, sequence {:?}",
            report.multiplicities
        );
    }

    println!("criterion 6 (shift ideal paths, recursion, chains, unimodality): PASS");
}

#[test]
fn criterion_7_tspread() {
    // Generator counts for every parameter triple up to n = 9.
    for n in 1..=9usize {
        for d in 1..=n {
            for t in 1..=n {
                let spec = TSpreadVeroneseSpec::new(n, d, t).unwrap();
                assert_eq!(
                    tspread_generators(&spec).num_gens() as u64,
                    spec.generator_count(),
                    "criterion 7: FAIL (count at n={n} d={d} t={t})"
                );
            }
        }
    }

    // Shift ideals against both other paths, and the first-shift order.
    for n in 2..=7usize {
        for d in 1..=n.min(4) {
            for t in 1..=n.min(3) {
                let spec = TSpreadVeroneseSpec::new(n, d, t).unwrap();
                let ideal = tspread_generators(&spec);
                if ideal.is_zero() {
                    continue;
                }
                let cert = lex_certificate(&ideal).unwrap();
                let mut j = 0u32;
                loop {
                    let direct = tspread_hs(&spec, j);
                    let cone = hs_via_linear_quotients(&ideal, &cert, j).unwrap();
                    let oracle = hs_from_oracle(&ideal, j, &OracleOptions::default()).unwrap();
                    assert!(
                        direct.same_ideal(&cone) && direct.same_ideal(&oracle),
                        "criterion 7: FAIL (shift at n={n} d={d} t={t} j={j})"
                    );
                    if direct.is_zero() {
                        break;
                    }
                    j += 1;
                }
                hs1_linear_quotient_order(&spec).unwrap_or_else(|e| {
                    panic!("criterion 7: FAIL (first-shift order at n={n} d={d} t={t}): {e}")
                });
            }
        }
    }

    println!("criterion 7 (t-spread counts, shifts, first-shift order): PASS");
}

fn subsets_of_size(bound: usize, size: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut current = Vec::new();
    fn rec(
        lo: usize,
        bound: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if current.len() == size {
            out.insert(current.clone());
            return;
        }
        for v in lo..=bound {
            current.push(v);
            rec(v + 1, bound, size, current, out);
            current.pop();
        }
    }
    rec(1, bound, size, &mut current, &mut out);
    out
}
