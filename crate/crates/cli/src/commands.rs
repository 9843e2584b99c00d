//! Subcommand implementations. Each builds one JSON document (or a few
//! lines), emits it, and reports whether every formula/oracle comparison
//! matched.

use serde_json::{json, Value};

use borelkit_core::ideal::{
    borel_generators_squarefree, is_k_borel, lex_linear_quotients, LqOutcome, MonomialIdeal,
};
use borelkit_core::invariants::{
    analytic_spread_from_borel_gens, linear_relation_graph, minimal_primes, multiplicity_multi,
    oracle_analytic_spread, MultiMultiplicity,
};
use borelkit_core::json::{
    monomial_strings, BettiDocument, IdealDocument, MultigradedBettiDocument, ProfileDocument,
};
use borelkit_core::monomial::Monomial;
use borelkit_core::resolution::{
    betti_kborel, hs_from_oracle, hs_via_linear_quotients, koszul_homology_oracle, BettiTable,
    MultigradedBettiTable, OracleOptions,
};
use borelkit_core::shifts::{expand_squarefree, hsk_borel, monotonicity_profile};
use borelkit_core::tspread::{
    hs1_linear_quotient_order, tspread_generators, tspread_hs, TSpreadVeroneseSpec,
};
use borelkit_core::{Error, Result};

use crate::output::emit;
use crate::{oracle_limit, Cli, IdealInput, ModuleView};

/// How the ideal was handed to us; formulas keep their presentations.
pub enum Presentation {
    Borel(Vec<Monomial>),
    Explicit,
    Spread(TSpreadVeroneseSpec),
}

pub struct LoadedIdeal {
    pub n: usize,
    pub k: Option<u32>,
    pub presentation: Presentation,
    pub ideal: MonomialIdeal,
    pub echo: Value,
}

pub fn load(input: &IdealInput) -> Result<LoadedIdeal> {
    if let Some(path) = &input.ideal {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            column: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        let doc: IdealDocument = serde_json::from_str(&text).map_err(|e| Error::Parse {
            column: e.column(),
            message: format!("line {}: {e}", e.line()),
        })?;
        let resolved = doc.resolve()?;
        let echo = serde_json::to_value(&doc).expect("serializable");
        let presentation = match resolved.borel_gens {
            Some(bg) => Presentation::Borel(bg),
            None => Presentation::Explicit,
        };
        return Ok(LoadedIdeal {
            n: resolved.n,
            k: resolved.k,
            presentation,
            ideal: resolved.ideal,
            echo,
        });
    }
    if let Some(triple) = &input.tspread {
        let parts: Vec<&str> = triple.split(',').map(str::trim).collect();
        let [n, d, t] = parts.as_slice() else {
            return Err(Error::Parse {
                column: 0,
                message: format!("expected --tspread n,d,t, found {triple:?}"),
            });
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                column: 0,
                message: format!("invalid t-spread parameter {s:?}"),
            })
        };
        let spec = TSpreadVeroneseSpec::new(parse(n)?, parse(d)?, parse(t)?)?;
        let ideal = tspread_generators(&spec);
        return Ok(LoadedIdeal {
            n: spec.n,
            k: Some(1),
            presentation: Presentation::Spread(spec),
            ideal,
            echo: json!({ "tspread": [spec.n, spec.d, spec.t] }),
        });
    }
    let Some(n) = input.n else {
        return Err(Error::Parse {
            column: 0,
            message: "missing input: use --ideal FILE, --tspread n,d,t, or --n with --borel".into(),
        });
    };
    if input.borel.is_empty() {
        return Err(Error::Parse {
            column: 0,
            message: "inline input needs at least one --borel generator".into(),
        });
    }
    let strings: Vec<String> = input
        .borel
        .iter()
        .flat_map(|s| s.split(','))
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let doc = IdealDocument {
        n,
        k: input.k,
        borel_generators: Some(strings),
        generators: None,
    };
    let resolved = doc.resolve()?;
    let echo = serde_json::to_value(&doc).expect("serializable");
    Ok(LoadedIdeal {
        n: resolved.n,
        k: resolved.k,
        presentation: Presentation::Borel(resolved.borel_gens.expect("borel input")),
        ideal: resolved.ideal,
        echo,
    })
}

impl LoadedIdeal {
    /// Bound used by the formula paths: the stated k, 1 for t-spread
    /// families, the largest generator degree for unbounded Borel input,
    /// and the largest exponent for explicit generators.
    fn effective_bound(&self) -> u32 {
        if let Some(k) = self.k {
            return k;
        }
        match &self.presentation {
            Presentation::Spread(_) => 1,
            Presentation::Borel(bg) => bg.iter().map(Monomial::degree).max().unwrap_or(1).max(1),
            Presentation::Explicit => self
                .ideal
                .gens()
                .iter()
                .flat_map(|g| g.exponents().iter().copied())
                .max()
                .unwrap_or(1)
                .max(1),
        }
    }

    /// Borel generators when the ideal is presented by them or is a
    /// squarefree Borel ideal in disguise.
    fn borel_gens(&self) -> Option<Vec<Monomial>> {
        match &self.presentation {
            Presentation::Borel(bg) => Some(bg.clone()),
            Presentation::Explicit | Presentation::Spread(_) => {
                if self.ideal.is_squarefree() && is_k_borel(&self.ideal, 1) {
                    borel_generators_squarefree(&self.ideal).ok()
                } else {
                    None
                }
            }
        }
    }
}

pub fn expand(cli: &Cli, input: &IdealInput, count: bool) -> Result<bool> {
    let loaded = load(input)?;
    let mut doc = json!({
        "command": "expand",
        "input": loaded.echo,
        "num_generators": loaded.ideal.num_gens(),
    });
    if !count {
        doc["generators"] = json!(monomial_strings(loaded.ideal.gens()));
    }
    emit(cli, &doc);
    Ok(true)
}

fn betti_documents(
    cli: &Cli,
    formula: Option<&BettiTable>,
    oracle: Option<&MultigradedBettiTable>,
) -> (Value, Value, Option<bool>) {
    let view = |t: &BettiTable| -> BettiDocument {
        match cli.module {
            ModuleView::Ideal => BettiDocument::from_table(t, "ideal"),
            ModuleView::SModI => BettiDocument::from_table(&t.quotient_module_table(), "s-mod-i"),
        }
    };
    let collapsed = oracle.map(MultigradedBettiTable::collapse);
    let matches = match (formula, &collapsed) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    let formula_doc = formula.map_or(Value::Null, |t| {
        serde_json::to_value(view(t)).expect("serializable")
    });
    let oracle_doc = collapsed.map_or(Value::Null, |t| {
        serde_json::to_value(view(&t)).expect("serializable")
    });
    (formula_doc, oracle_doc, matches)
}

pub fn betti(cli: &Cli, input: &IdealInput, multigraded: bool) -> Result<bool> {
    let loaded = load(input)?;
    let k = loaded.effective_bound();
    let formula = match betti_kborel(&loaded.ideal, k) {
        Ok(t) => Some(t),
        Err(Error::NotKBorel(_)) => None,
        Err(e) => return Err(e),
    };
    let options = OracleOptions::with_limit(oracle_limit(cli));
    let oracle = koszul_homology_oracle(&loaded.ideal, &options)?;
    let (formula_doc, oracle_doc, matches) = betti_documents(cli, formula.as_ref(), Some(&oracle));
    let mut doc = json!({
        "command": "betti",
        "input": loaded.echo,
        "k": k,
        "formula": formula_doc,
        "oracle": oracle_doc,
        "match": matches,
    });
    if multigraded {
        doc["multigraded"] = serde_json::to_value(MultigradedBettiDocument::from_table(
            &oracle,
            cli.module.label(),
        ))
        .expect("serializable");
        if cli.module == ModuleView::SModI {
            doc["multigraded"] = multigraded_quotient_view(&oracle, loaded.n);
        }
    }
    emit(cli, &doc);
    Ok(matches != Some(false))
}

fn multigraded_quotient_view(table: &MultigradedBettiTable, n: usize) -> Value {
    let mut shifted = MultigradedBettiTable::default();
    shifted.add(0, vec![0; n], 1);
    for (i, a, beta) in table.iter() {
        shifted.add(i + 1, a.to_vec(), beta);
    }
    serde_json::to_value(MultigradedBettiDocument::from_table(&shifted, "s-mod-i"))
        .expect("serializable")
}

pub fn minprimes(cli: &Cli, input: &IdealInput) -> Result<bool> {
    let loaded = load(input)?;
    let primes = minimal_primes(&loaded.ideal)?;
    let report = borelkit_core::json::PrimeReport::from_primes(&primes);
    let doc = json!({
        "command": "minprimes",
        "input": loaded.echo,
        "height": report.height,
        "multiplicity": report.multiplicity,
        "minimal_primes_at_height": report.minimal_primes_at_height,
    });
    emit(cli, &doc);
    Ok(true)
}

pub fn mult(cli: &Cli, input: &IdealInput) -> Result<bool> {
    let loaded = load(input)?;
    let primes = minimal_primes(&loaded.ideal)?;
    let oracle = primes.multiplicity();
    let (formula, hypothesis) = match loaded.borel_gens() {
        None => (Value::Null, Value::Null),
        Some(bg) => match multiplicity_multi(&bg)? {
            MultiMultiplicity::Value { multiplicity, .. } => (json!(multiplicity), json!(true)),
            MultiMultiplicity::HypothesisNotSatisfied => (Value::Null, json!(false)),
        },
    };
    let matches = formula.as_u64().map(|f| f == oracle);
    let doc = json!({
        "command": "mult",
        "input": loaded.echo,
        "height": primes.height(),
        "formula": formula,
        "hypothesis_satisfied": hypothesis,
        "oracle": oracle,
        "match": matches,
    });
    emit(cli, &doc);
    Ok(matches != Some(false))
}

pub fn aspread(cli: &Cli, input: &IdealInput) -> Result<bool> {
    let loaded = load(input)?;
    let oracle = oracle_analytic_spread(&loaded.ideal)?;
    let formula = match loaded.borel_gens() {
        None => None,
        Some(bg) => match analytic_spread_from_borel_gens(&bg) {
            Ok(v) => Some(v),
            Err(Error::PrincipalIdeal | Error::NotSquarefree) => None,
            Err(e) => return Err(e),
        },
    };
    let connected = if loaded.ideal.is_principal() {
        Value::Null
    } else {
        let bound = loaded
            .ideal
            .gens()
            .iter()
            .filter_map(Monomial::max_var)
            .max()
            .unwrap_or(0);
        json!(linear_relation_graph(&loaded.ideal)?.is_connected_on(bound))
    };
    let matches = formula.map(|f| f == oracle);
    let doc = json!({
        "command": "aspread",
        "input": loaded.echo,
        "formula": formula,
        "oracle": oracle,
        "match": matches,
        "relation_graph_connected": connected,
    });
    emit(cli, &doc);
    Ok(matches != Some(false))
}

pub fn hs(cli: &Cli, input: &IdealInput, j: u32, profile: bool) -> Result<bool> {
    let loaded = load(input)?;
    if profile {
        let Some(bg) = loaded.borel_gens() else {
            return Err(Error::Parse {
                column: 0,
                message: "profiles need a squarefree Borel presentation".into(),
            });
        };
        let profile = monotonicity_profile(&bg)?;
        let doc = json!({
            "command": "hs",
            "input": loaded.echo,
            "profile": ProfileDocument::from_profile(&profile),
        });
        emit(cli, &doc);
        return Ok(true);
    }

    let options = OracleOptions::with_limit(oracle_limit(cli));
    let oracle_ideal = hs_from_oracle(&loaded.ideal, j, &options)?;
    let cone_ideal = match lex_linear_quotients(&loaded.ideal)? {
        LqOutcome::Quotients(cert) => Some(hs_via_linear_quotients(&loaded.ideal, &cert, j)?),
        LqOutcome::Fails { .. } => None,
    };
    let borel_ideal = match (&loaded.presentation, loaded.borel_gens()) {
        (Presentation::Spread(spec), _) => Some(tspread_hs(spec, j)),
        (_, Some(bg))
            if loaded.ideal.equigenerated_degree().is_some()
                && bg.iter().all(Monomial::is_squarefree) =>
        {
            Some(expand_squarefree(&hsk_borel(&bg, j)?, loaded.n)?)
        }
        _ => None,
    };

    let mut all_match = true;
    for other in [&cone_ideal, &borel_ideal].into_iter().flatten() {
        all_match &= other.same_ideal(&oracle_ideal);
    }
    let doc = json!({
        "command": "hs",
        "input": loaded.echo,
        "j": j,
        "generators": monomial_strings(oracle_ideal.gens()),
        "paths": {
            "oracle": monomial_strings(oracle_ideal.gens()),
            "mapping_cone": cone_ideal.as_ref().map(|i| monomial_strings(i.gens())),
            "borel": borel_ideal.as_ref().map(|i| monomial_strings(i.gens())),
        },
        "match": all_match,
    });
    emit(cli, &doc);
    Ok(all_match)
}

pub fn tspread(
    cli: &Cli,
    n: usize,
    d: usize,
    t: usize,
    hs_j: Option<u32>,
    check_lq: bool,
) -> Result<bool> {
    let spec = TSpreadVeroneseSpec::new(n, d, t)?;
    let ideal = tspread_generators(&spec);
    let mut doc = json!({
        "command": "tspread",
        "n": n,
        "d": d,
        "t": t,
        "count": ideal.num_gens(),
        "count_formula": spec.generator_count(),
        "zero": ideal.is_zero(),
        "generators": monomial_strings(ideal.gens()),
    });
    if let Some(j) = hs_j {
        let shift = tspread_hs(&spec, j);
        doc["hs"] = json!({
            "j": j,
            "num_generators": shift.num_gens(),
            "generators": monomial_strings(shift.gens()),
        });
    }
    if check_lq {
        let cert = hs1_linear_quotient_order(&spec)?;
        doc["hs1_linear_quotients"] = json!({
            "verified": true,
            "order": monomial_strings(cert.order()),
            "sets": cert.sets().iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
        });
    }
    emit(cli, &doc);
    Ok(true)
}

pub fn invariants(cli: &Cli, input: &IdealInput) -> Result<bool> {
    let loaded = load(input)?;
    let k = loaded.effective_bound();
    let options = OracleOptions::with_limit(oracle_limit(cli));
    let mut ok = true;

    let formula_betti = match betti_kborel(&loaded.ideal, k) {
        Ok(t) => Some(t),
        Err(Error::NotKBorel(_)) => None,
        Err(e) => return Err(e),
    };
    let oracle_betti = koszul_homology_oracle(&loaded.ideal, &options)?;
    let (formula_doc, oracle_doc, betti_match) =
        betti_documents(cli, formula_betti.as_ref(), Some(&oracle_betti));
    ok &= betti_match != Some(false);

    let borel_gens = loaded.borel_gens();
    let height = match (&borel_gens, loaded.ideal.is_squarefree()) {
        (Some(bg), true) => {
            let formula = borelkit_core::ideal::height_from_borel_gens(bg)?;
            let oracle = minimal_primes(&loaded.ideal)?.height();
            ok &= formula == oracle;
            json!({ "formula": formula, "oracle": oracle, "match": formula == oracle })
        }
        (Some(bg), false) => {
            json!({ "formula": borelkit_core::ideal::height_from_borel_gens(bg)?, "oracle": Value::Null, "match": Value::Null })
        }
        (None, true) => {
            json!({ "formula": Value::Null, "oracle": minimal_primes(&loaded.ideal)?.height(), "match": Value::Null })
        }
        (None, false) => {
            json!({ "formula": Value::Null, "oracle": Value::Null, "match": Value::Null })
        }
    };

    let multiplicity = if loaded.ideal.is_squarefree() {
        let oracle = minimal_primes(&loaded.ideal)?.multiplicity();
        let formula = match &borel_gens {
            Some(bg) if bg.iter().all(Monomial::is_squarefree) => {
                match multiplicity_multi(bg)? {
                    MultiMultiplicity::Value { multiplicity, .. } => Some(multiplicity),
                    MultiMultiplicity::HypothesisNotSatisfied => None,
                }
            }
            _ => None,
        };
        if let Some(f) = formula {
            ok &= f == oracle;
        }
        json!({
            "formula": formula,
            "oracle": oracle,
            "match": formula.map(|f| f == oracle),
        })
    } else {
        json!({ "formula": Value::Null, "oracle": Value::Null, "match": Value::Null })
    };

    let analytic_spread = if loaded.ideal.equigenerated_degree().is_some() {
        let oracle = oracle_analytic_spread(&loaded.ideal)?;
        let formula = match &borel_gens {
            Some(bg) => match analytic_spread_from_borel_gens(bg) {
                Ok(v) => Some(v),
                Err(Error::PrincipalIdeal | Error::NotSquarefree) => None,
                Err(e) => return Err(e),
            },
            None => None,
        };
        if let Some(f) = formula {
            ok &= f == oracle;
        }
        json!({
            "formula": formula,
            "oracle": oracle,
            "match": formula.map(|f| f == oracle),
        })
    } else {
        json!({ "formula": Value::Null, "oracle": Value::Null, "match": Value::Null })
    };

    let profile = match (&borel_gens, loaded.ideal.equigenerated_degree()) {
        (Some(bg), Some(_)) if loaded.ideal.is_squarefree() && !loaded.ideal.is_unit() => {
            let p = monotonicity_profile(bg)?;
            ok &= p.height_chain_nonincreasing && p.spread_chain_nonincreasing_where_formula;
            serde_json::to_value(ProfileDocument::from_profile(&p)).expect("serializable")
        }
        _ => Value::Null,
    };

    let doc = json!({
        "command": "invariants",
        "input": loaded.echo,
        "n": loaded.n,
        "k": k,
        "num_generators": loaded.ideal.num_gens(),
        "generators": monomial_strings(loaded.ideal.gens()),
        "betti": { "formula": formula_doc, "oracle": oracle_doc, "match": betti_match },
        "projdim": oracle_betti.collapse().projdim(),
        "height": height,
        "multiplicity": multiplicity,
        "analytic_spread": analytic_spread,
        "hs_profile": profile,
        "ok": ok,
    });
    emit(cli, &doc);
    Ok(ok)
}
