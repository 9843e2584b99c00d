//! Formula-against-oracle consistency on seeded random instances, at a
//! scale small enough to run on every test invocation. The acceptance
//! target repeats the headline checks at full instance counts.

mod common;

use borelkit_core::binomial;
use borelkit_core::ideal::LqOutcome;
use borelkit_core::ideal::{borel_closure_k, is_k_borel, lex_certificate, MonomialIdeal};
use borelkit_core::invariants::{
    linear_relation_graph, minimal_primes, multiplicity_multi, multiplicity_principal,
    MultiMultiplicity,
};
use borelkit_core::monomial::Monomial;
use borelkit_core::resolution::{
    betti_kborel, hs_from_oracle, hs_via_linear_quotients, koszul_basis, koszul_homology_oracle,
    OracleOptions,
};
use borelkit_core::sample::{rng_for_seed, sample_instance, SampleConfig};
use borelkit_core::shifts::{expand_squarefree, hs_recursion_check, hsk_borel};
use borelkit_core::tspread::{
    hs_higher_order_experiment, tspread_generators, tspread_hs, tspread_set, TSpreadVeroneseSpec,
};
use common::move_closure_unbounded;
use rand::Rng;

#[test]
fn derived_precedes_examples_reach_by_moves() {
    let n = 4;
    let u = Monomial::parse("x2*x4", n).unwrap();
    let reachable = move_closure_unbounded(&u);
    assert!(reachable.contains(&Monomial::parse("x1*x3", n).unwrap()));
    let v = Monomial::parse("x1*x4", n).unwrap();
    assert!(!move_closure_unbounded(&v).contains(&Monomial::parse("x2*x3", n).unwrap()));
}

#[test]
fn betti_formula_matches_oracle_on_sample() {
    let mut rng = rng_for_seed(20);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 3,
        m_max: 3,
        equigenerated: false,
    };
    for _ in 0..30 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).unwrap();
        let formula = betti_kborel(&ideal, inst.k).unwrap();
        let oracle = koszul_homology_oracle(&ideal, &OracleOptions::default()).unwrap();
        assert_eq!(
            formula,
            oracle.collapse(),
            "instance {ideal:?} k={}",
            inst.k
        );

        // Basis sizes in one higher homological degree match the table.
        for i in 0..=formula.projdim() {
            assert_eq!(
                koszul_basis(&ideal, inst.k, i + 1).unwrap().len() as u64,
                formula.total(i)
            );
        }
    }
}

#[test]
fn oracle_is_insensitive_to_extra_candidates() {
    let mut rng = rng_for_seed(21);
    let config = SampleConfig {
        n_max: 5,
        d_max: 3,
        k_max: 3,
        m_max: 2,
        equigenerated: false,
    };
    for _ in 0..10 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).unwrap();
        let plain = koszul_homology_oracle(&ideal, &OracleOptions::default()).unwrap();
        let extra: Vec<Monomial> = (0..4)
            .map(|_| {
                let exps: Vec<u32> = (0..inst.n).map(|_| rng.random_range(0..=inst.k)).collect();
                Monomial::from_exponents(exps).unwrap()
            })
            .collect();
        let padded = koszul_homology_oracle(
            &ideal,
            &OracleOptions {
                extra_candidates: extra,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain, padded);
    }
}

#[test]
fn mapping_cone_counts_and_linearity() {
    let mut rng = rng_for_seed(22);
    let config = SampleConfig {
        n_max: 5,
        d_max: 3,
        k_max: 2,
        m_max: 2,
        equigenerated: true,
    };
    for _ in 0..15 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = borel_closure_k(&inst.borel_gens, inst.k, inst.n).unwrap();
        let cert = lex_certificate(&ideal).unwrap();
        let oracle = koszul_homology_oracle(&ideal, &OracleOptions::default())
            .unwrap()
            .collapse();
        let d = ideal.equigenerated_degree().unwrap();
        for i in 0..=oracle.projdim() {
            let cone: u64 = cert
                .sets()
                .iter()
                .map(|s| binomial(s.len() as u64, i as u64))
                .sum();
            assert_eq!(cone, oracle.total(i), "degree {i} of {ideal:?}");
            // Equigenerated bounded Borel ideals have linear resolutions.
            assert_eq!(oracle.total(i), oracle.entry(i, i + d));
        }
    }
}

#[test]
fn shift_ideal_paths_coincide() {
    let mut rng = rng_for_seed(23);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: true,
    };
    for _ in 0..15 {
        let inst = sample_instance(&mut rng, &config);
        let ideal = expand_squarefree(&inst.borel_gens, inst.n).unwrap();
        let cert = lex_certificate(&ideal).unwrap();
        let projdim = betti_kborel(&ideal, 1).unwrap().projdim();
        for j in 0..=projdim + 1 {
            let borel =
                expand_squarefree(&hsk_borel(&inst.borel_gens, j).unwrap(), inst.n).unwrap();
            let cone = hs_via_linear_quotients(&ideal, &cert, j).unwrap();
            let oracle = hs_from_oracle(&ideal, j, &OracleOptions::default()).unwrap();
            assert!(borel.same_ideal(&cone), "j={j} of {ideal:?}");
            assert!(borel.same_ideal(&oracle), "j={j} of {ideal:?}");
            assert_eq!(borel.is_zero(), j > projdim, "vanishing at j={j}");
            // Every shift of a squarefree Borel ideal is squarefree Borel.
            if !borel.is_zero() {
                assert!(is_k_borel(&borel, 1));
            }
        }
        for j in 1..projdim.max(1) {
            assert!(hs_recursion_check(&inst.borel_gens, j).unwrap());
        }
    }
}

#[test]
fn principal_multiplicity_matches_cover_oracle() {
    let mut rng = rng_for_seed(24);
    let config = SampleConfig {
        n_max: 7,
        d_max: 4,
        k_max: 1,
        m_max: 1,
        equigenerated: true,
    };
    for _ in 0..30 {
        let inst = sample_instance(&mut rng, &config);
        let u = &inst.borel_gens[0];
        let formula = multiplicity_principal(u).unwrap();
        let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).unwrap();
        let primes = minimal_primes(&ideal).unwrap();
        assert_eq!(formula.height, primes.height());
        assert_eq!(formula.multiplicity, primes.multiplicity(), "e of B({u})");
        // The minimal-height primes are exactly the h-subsets of the
        // predicted initial range.
        let h = formula.height;
        let at_height = primes.primes_at_height(h);
        assert_eq!(
            at_height.len() as u64,
            binomial(formula.prime_index_bound as u64, h as u64)
        );
        for p in at_height {
            assert!(p.iter().all(|&v| v <= formula.prime_index_bound));
        }
    }
}

#[test]
fn multi_generator_multiplicity_under_hypothesis() {
    let mut rng = rng_for_seed(25);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: false,
    };
    let mut confirmed = 0;
    while confirmed < 20 {
        let inst = sample_instance(&mut rng, &config);
        match multiplicity_multi(&inst.borel_gens).unwrap() {
            MultiMultiplicity::Value { multiplicity, .. } => {
                let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).unwrap();
                if ideal.is_unit() {
                    continue;
                }
                let primes = minimal_primes(&ideal).unwrap();
                assert_eq!(multiplicity, primes.multiplicity(), "{ideal:?}");
                confirmed += 1;
            }
            MultiMultiplicity::HypothesisNotSatisfied => continue,
        }
    }
}

#[test]
fn relation_graph_is_connected_when_one_is_missing() {
    let mut rng = rng_for_seed(26);
    let config = SampleConfig {
        n_max: 6,
        d_max: 4,
        k_max: 1,
        m_max: 3,
        equigenerated: true,
    };
    let mut checked = 0;
    while checked < 20 {
        let inst = sample_instance(&mut rng, &config);
        let some_block_misses_one = inst.borel_gens.iter().any(|u| u.min_var() != Some(1));
        if !some_block_misses_one {
            continue;
        }
        let ideal = borel_closure_k(&inst.borel_gens, 1, inst.n).unwrap();
        if ideal.is_principal() {
            continue;
        }
        let n = inst
            .borel_gens
            .iter()
            .map(|u| u.max_var().unwrap())
            .max()
            .unwrap();
        let graph = linear_relation_graph(&ideal).unwrap();
        assert!(graph.is_connected_on(n), "graph of {ideal:?}");
        checked += 1;
    }
}

#[test]
fn tspread_sets_match_certificates_widely() {
    for n in 2..=7usize {
        for d in 1..=n.min(4) {
            for t in 1..=n.min(3) {
                let spec = TSpreadVeroneseSpec::new(n, d, t).unwrap();
                let ideal = tspread_generators(&spec);
                if ideal.is_zero() {
                    continue;
                }
                let cert = lex_certificate(&ideal).unwrap();
                for (pos, u) in cert.order().iter().enumerate() {
                    assert_eq!(
                        &tspread_set(u, &spec).unwrap(),
                        cert.set_at(pos),
                        "set({u}) in ({n},{d},{t})"
                    );
                }
            }
        }
    }
}

#[test]
fn higher_shift_order_experiment_is_logged_not_asserted() {
    let mut failures = Vec::new();
    for n in 2..=6usize {
        for d in 1..=n.min(3) {
            for t in 1..=n.min(3) {
                let spec = TSpreadVeroneseSpec::new(n, d, t).unwrap();
                if tspread_generators(&spec).is_zero() {
                    continue;
                }
                for j in 2..=3u32 {
                    if tspread_hs(&spec, j).is_zero() {
                        continue;
                    }
                    if let LqOutcome::Fails { index, witness } =
                        hs_higher_order_experiment(&spec, j).unwrap()
                    {
                        failures.push(format!(
                            "({n},{d},{t}) j={j}: position {index}, witness {witness}"
                        ));
                    }
                }
            }
        }
    }
    // The ordering rule for higher shifts is conjectural: report outcomes,
    // never fail the build over them.
    if failures.is_empty() {
        println!("higher-shift order experiment: no failures observed");
    } else {
        println!("higher-shift order experiment failures: {failures:?}");
    }
}

#[test]
fn height_of_bounded_closure_by_prime_listing() {
    // Bounded closures need not be squarefree, so check the height formula
    // by listing every variable set meeting all generator supports.
    let n = 3;
    let bg = vec![Monomial::parse("x2^2*x3", n).unwrap()];
    let ideal = borel_closure_k(&bg, 2, n).unwrap();
    let mut min_cover = usize::MAX;
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let covers = ideal
            .gens()
            .iter()
            .all(|g| g.support().iter().any(|v| set.contains(v)));
        if covers {
            min_cover = min_cover.min(set.len());
        }
    }
    assert_eq!(min_cover, 2);
    assert_eq!(
        borelkit_core::ideal::height_from_borel_gens(&bg).unwrap(),
        min_cover
    );
}

#[test]
fn unit_and_zero_ideals_are_rejected_by_invariant_ops() {
    let zero = MonomialIdeal::zero(3);
    assert!(betti_kborel(&zero, 1).is_err());
    assert!(minimal_primes(&zero).is_err());
    assert!(koszul_homology_oracle(&zero, &OracleOptions::default()).is_err());
    let unit = MonomialIdeal::minimalize(vec![Monomial::unit(3)], 3).unwrap();
    assert!(betti_kborel(&unit, 1).is_err());
    assert!(minimal_primes(&unit).is_err());
    assert!(koszul_homology_oracle(&unit, &OracleOptions::default()).is_err());
}
