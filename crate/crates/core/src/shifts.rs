//! Homological shift ideals of equigenerated squarefree Borel ideals via
//! their closed-form Borel generators, with the height / analytic-spread
//! chains and the multiplicity unimodality sequence.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{borel_closure_k, height_from_borel_gens, MonomialIdeal};
use crate::invariants::{
    analytic_spread_from_borel_gens, minimal_primes, multiplicity_multi, multiplicity_principal,
    oracle_analytic_spread, MultiMultiplicity,
};
use crate::monomial::{gaps_squarefree, Monomial};
use crate::resolution::betti_kborel;

fn validate_equigenerated_squarefree(gens: &[Monomial]) -> Result<()> {
    let Some(first) = gens.first() else {
        return Ok(());
    };
    for u in gens {
        if u.n() != first.n() {
            return Err(Error::VariableCountMismatch(first.n(), u.n()));
        }
        if u.is_unit() {
            return Err(Error::UnitMonomial);
        }
        if !u.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if u.degree() != first.degree() {
            return Err(Error::NotEquigenerated);
        }
    }
    Ok(())
}

/// Borel generators of the first shift ideal: each generator times its
/// maximal gap variable. Generators without gaps contribute nothing; an
/// empty output is the zero ideal.
pub fn hs1_borel(borel_gens: &[Monomial]) -> Result<Vec<Monomial>> {
    validate_equigenerated_squarefree(borel_gens)?;
    let mut out = Vec::new();
    for u in borel_gens {
        let gaps = gaps_squarefree(u)?;
        if let Some(&p) = gaps.iter().next_back() {
            out.push(u.times_var(p));
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    Ok(out)
}

/// Borel generators of the j-th shift ideal: each generator with at least j
/// gaps times its j largest gap variables, pruned to the maximal elements
/// under the sorted-index order. j = 0 returns the input.
pub fn hsk_borel(borel_gens: &[Monomial], j: u32) -> Result<Vec<Monomial>> {
    validate_equigenerated_squarefree(borel_gens)?;
    if j == 0 {
        return Ok(borel_gens.to_vec());
    }
    let mut products = Vec::new();
    for u in borel_gens {
        let gaps = gaps_squarefree(u)?;
        if (gaps.len() as u32) < j {
            continue;
        }
        let chosen: Vec<usize> = gaps.iter().rev().take(j as usize).copied().collect();
        products.push(u.times_vars(chosen));
    }
    products.sort_by(|a, b| b.cmp(a));
    products.dedup();
    let maximal: Vec<Monomial> = products
        .iter()
        .filter(|w| {
            !products
                .iter()
                .any(|v| v != *w && w.precedes(v).expect("equal degrees"))
        })
        .cloned()
        .collect();
    Ok(maximal)
}

/// Expansion of a Borel-generator list into the full minimal generating set.
pub fn expand_squarefree(borel_gens: &[Monomial], n: usize) -> Result<MonomialIdeal> {
    if borel_gens.is_empty() {
        return Ok(MonomialIdeal::zero(n));
    }
    borel_closure_k(borel_gens, 1, n)
}

/// Whether taking one more shift commutes with iterating single shifts:
/// the first shift of the j-th shift equals the (j+1)-st shift, as ideals.
pub fn hs_recursion_check(borel_gens: &[Monomial], j: u32) -> Result<bool> {
    validate_equigenerated_squarefree(borel_gens)?;
    let Some(first) = borel_gens.first() else {
        return Ok(true);
    };
    let n = first.n();
    let step = hs1_borel(&hsk_borel(borel_gens, j)?)?;
    let direct = hsk_borel(borel_gens, j + 1)?;
    Ok(expand_squarefree(&step, n)?.same_ideal(&expand_squarefree(&direct, n)?))
}

/// Where a profile value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Oracle,
}

/// A value with its provenance flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sourced<T> {
    pub value: T,
    pub source: Provenance,
}

/// One homological degree of a shift profile.
#[derive(Clone, Debug)]
pub struct ShiftStratum {
    pub j: u32,
    pub borel_gens: Vec<Monomial>,
    pub expanded: MonomialIdeal,
    pub height: usize,
    /// First-block formula when its containment hypothesis holds, otherwise
    /// the cover-oracle count; None when neither is available.
    pub multiplicity: Option<Sourced<u64>>,
    /// First-block formula for non-principal strata, exponent-matrix rank
    /// for principal ones.
    pub analytic_spread: Sourced<usize>,
}

/// The shift ideals of an equigenerated squarefree Borel ideal for
/// 0 <= j <= projdim, with heights, multiplicities and analytic spreads.
#[derive(Clone, Debug)]
pub struct ShiftProfile {
    pub strata: Vec<ShiftStratum>,
    /// Heights never increase along the profile.
    pub height_chain_nonincreasing: bool,
    /// Analytic spreads never increase across consecutive strata where both
    /// sides carry the formula; oracle-backed principal strata are recorded
    /// but not asserted against.
    pub spread_chain_nonincreasing_where_formula: bool,
}

/// Computes the full shift profile.
pub fn monotonicity_profile(borel_gens: &[Monomial]) -> Result<ShiftProfile> {
    validate_equigenerated_squarefree(borel_gens)?;
    let Some(first) = borel_gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    let n = first.n();
    let base = expand_squarefree(borel_gens, n)?;
    let projdim = betti_kborel(&base, 1)?.projdim();

    let mut strata = Vec::new();
    for j in 0..=projdim {
        let stratum_gens = hsk_borel(borel_gens, j)?;
        let expanded = expand_squarefree(&stratum_gens, n)?;
        let height = height_from_borel_gens(&stratum_gens)?;
        let multiplicity = match multiplicity_multi(&stratum_gens)? {
            MultiMultiplicity::Value { multiplicity, .. } => Some(Sourced {
                value: multiplicity,
                source: Provenance::Formula,
            }),
            MultiMultiplicity::HypothesisNotSatisfied => match minimal_primes(&expanded) {
                Ok(p) => Some(Sourced {
                    value: p.multiplicity(),
                    source: Provenance::Oracle,
                }),
                Err(Error::ResourceLimit(_)) => None,
                Err(e) => return Err(e),
            },
        };
        let analytic_spread = if expanded.is_principal() {
            Sourced {
                value: oracle_analytic_spread(&expanded)?,
                source: Provenance::Oracle,
            }
        } else {
            Sourced {
                value: analytic_spread_from_borel_gens(&stratum_gens)?,
                source: Provenance::Formula,
            }
        };
        strata.push(ShiftStratum {
            j,
            borel_gens: stratum_gens,
            expanded,
            height,
            multiplicity,
            analytic_spread,
        });
    }

    let height_chain_nonincreasing = strata.windows(2).all(|w| w[1].height <= w[0].height);
    let spread_chain_nonincreasing_where_formula = strata.windows(2).all(|w| {
        w[0].analytic_spread.source != Provenance::Formula
            || w[1].analytic_spread.source != Provenance::Formula
            || w[1].analytic_spread.value <= w[0].analytic_spread.value
    });

    Ok(ShiftProfile {
        strata,
        height_chain_nonincreasing,
        spread_chain_nonincreasing_where_formula,
    })
}

/// Multiplicity sequence of the shift ideals of a principal squarefree
/// Borel ideal, with the unimodality verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodalityReport {
    pub multiplicities: Vec<u64>,
    /// No strict decrease is ever followed by a strict increase.
    pub unimodal: bool,
}

pub fn multiplicity_unimodality(u: &Monomial) -> Result<UnimodalityReport> {
    if u.is_unit() {
        return Err(Error::UnitMonomial);
    }
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let projdim = gaps_squarefree(u)?.len() as u32;
    let mut multiplicities = Vec::with_capacity(projdim as usize + 1);
    for j in 0..=projdim {
        let gens = hsk_borel(std::slice::from_ref(u), j)?;
        let [generator] = gens.as_slice() else {
            return Err(Error::Internal(
                "principal shift stratum lost its single generator".into(),
            ));
        };
        multiplicities.push(multiplicity_principal(generator)?.multiplicity);
    }
    let mut decreased = false;
    let mut unimodal = true;
    for w in multiplicities.windows(2) {
        if w[1] < w[0] {
            decreased = true;
        } else if w[1] > w[0] && decreased {
            unimodal = false;
        }
    }
    Ok(UnimodalityReport {
        multiplicities,
        unimodal,
    })
}
