//! Serialized document shapes shared by the command line tool and the
//! browser demo. Generator lists are monomial strings in descending lex
//! order; exponent vectors appear only in multigraded entries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{borel_closure, borel_closure_k, MonomialIdeal};
use crate::monomial::Monomial;
use crate::resolution::{BettiTable, MultigradedBettiTable};
use crate::shifts::{Provenance, ShiftProfile};

/// Input description of an ideal: either Borel generators (closed under the
/// bound k, or under no bound when k is absent) or an explicit generator
/// list.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub borel_generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
}

/// An ideal resolved from a document, with the presentation kept around.
#[derive(Clone, Debug)]
pub struct ResolvedIdeal {
    pub n: usize,
    pub k: Option<u32>,
    /// Present when the document gave Borel generators.
    pub borel_gens: Option<Vec<Monomial>>,
    pub ideal: MonomialIdeal,
}

impl IdealDocument {
    pub fn resolve(&self) -> Result<ResolvedIdeal> {
        if self.n < 1 {
            return Err(Error::Parse {
                column: 0,
                message: "variable count n must be positive".into(),
            });
        }
        match (&self.borel_generators, &self.generators) {
            (Some(_), Some(_)) => Err(Error::Parse {
                column: 0,
                message: "give either borel_generators or generators, not both".into(),
            }),
            (None, None) => Err(Error::Parse {
                column: 0,
                message: "missing borel_generators or generators".into(),
            }),
            (Some(bg), None) => {
                let borel_gens = parse_monomials(bg, self.n)?;
                let ideal = match self.k {
                    Some(k) => borel_closure_k(&borel_gens, k, self.n)?,
                    None => borel_closure(&borel_gens, self.n)?,
                };
                Ok(ResolvedIdeal {
                    n: self.n,
                    k: self.k,
                    borel_gens: Some(borel_gens),
                    ideal,
                })
            }
            (None, Some(gs)) => {
                let gens = parse_monomials(gs, self.n)?;
                let mut ideal = MonomialIdeal::minimalize(gens, self.n)?;
                if let Some(k) = self.k {
                    ideal = ideal.with_bound(k)?;
                }
                Ok(ResolvedIdeal {
                    n: self.n,
                    k: self.k,
                    borel_gens: None,
                    ideal,
                })
            }
        }
    }
}

pub fn parse_monomials(strings: &[String], n: usize) -> Result<Vec<Monomial>> {
    strings.iter().map(|s| Monomial::parse(s, n)).collect()
}

pub fn monomial_strings(monomials: &[Monomial]) -> Vec<String> {
    monomials.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: u32,
    pub j: u32,
    pub beta: u64,
}

/// `{"module":"ideal","entries":[{"i":0,"j":2,"beta":5},...],"projdim":2}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDocument {
    pub module: String,
    pub entries: Vec<BettiEntry>,
    pub projdim: u32,
}

impl BettiDocument {
    pub fn from_table(table: &BettiTable, module: &str) -> Self {
        BettiDocument {
            module: module.to_string(),
            entries: table
                .iter()
                .map(|((i, j), beta)| BettiEntry { i, j, beta })
                .collect(),
            projdim: table.projdim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultigradedBettiEntry {
    pub i: u32,
    pub j: u32,
    pub a: Vec<u32>,
    pub beta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultigradedBettiDocument {
    pub module: String,
    pub entries: Vec<MultigradedBettiEntry>,
    pub projdim: u32,
}

impl MultigradedBettiDocument {
    pub fn from_table(table: &MultigradedBettiTable, module: &str) -> Self {
        let collapsed = table.collapse();
        MultigradedBettiDocument {
            module: module.to_string(),
            entries: table
                .iter()
                .map(|(i, a, beta)| MultigradedBettiEntry {
                    i,
                    j: a.iter().sum(),
                    a: a.to_vec(),
                    beta,
                })
                .collect(),
            projdim: collapsed.projdim(),
        }
    }
}

/// A value tagged with where it came from: "formula", "oracle", or "n/a"
/// with no value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourcedValue {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    pub source: String,
}

impl SourcedValue {
    pub fn formula(value: u64) -> Self {
        SourcedValue {
            value: Some(value),
            source: "formula".into(),
        }
    }

    pub fn oracle(value: u64) -> Self {
        SourcedValue {
            value: Some(value),
            source: "oracle".into(),
        }
    }

    pub fn not_applicable() -> Self {
        SourcedValue {
            value: None,
            source: "n/a".into(),
        }
    }

    pub fn from_provenance(value: u64, source: Provenance) -> Self {
        match source {
            Provenance::Formula => SourcedValue::formula(value),
            Provenance::Oracle => SourcedValue::oracle(value),
        }
    }
}

/// One homological degree of a shift profile, as serialized.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileStratumDocument {
    pub j: u32,
    pub borel_generators: Vec<String>,
    pub num_generators: usize,
    pub height: usize,
    pub multiplicity: SourcedValue,
    pub analytic_spread: SourcedValue,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileDocument {
    pub strata: Vec<ProfileStratumDocument>,
    pub height_chain_nonincreasing: bool,
    pub spread_chain_nonincreasing_where_formula: bool,
}

impl ProfileDocument {
    pub fn from_profile(profile: &ShiftProfile) -> Self {
        ProfileDocument {
            strata: profile
                .strata
                .iter()
                .map(|s| ProfileStratumDocument {
                    j: s.j,
                    borel_generators: monomial_strings(&s.borel_gens),
                    num_generators: s.expanded.num_gens(),
                    height: s.height,
                    multiplicity: s
                        .multiplicity
                        .map(|m| SourcedValue::from_provenance(m.value, m.source))
                        .unwrap_or_else(SourcedValue::not_applicable),
                    analytic_spread: SourcedValue::from_provenance(
                        s.analytic_spread.value as u64,
                        s.analytic_spread.source,
                    ),
                })
                .collect(),
            height_chain_nonincreasing: profile.height_chain_nonincreasing,
            spread_chain_nonincreasing_where_formula: profile
                .spread_chain_nonincreasing_where_formula,
        }
    }
}

/// `{"height":2,"multiplicity":3,"minimal_primes_at_height":[[1,2],...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeReport {
    pub height: usize,
    pub multiplicity: u64,
    pub minimal_primes_at_height: Vec<Vec<usize>>,
}

impl PrimeReport {
    pub fn from_primes(primes: &crate::invariants::MinimalPrimeSet) -> Self {
        PrimeReport {
            height: primes.height(),
            multiplicity: primes.multiplicity(),
            minimal_primes_at_height: primes
                .primes_at_height(primes.height())
                .into_iter()
                .map(|p| p.to_vec())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::betti_kborel;

    #[test]
    fn resolve_borel_document() {
        let doc: IdealDocument =
            serde_json::from_str(r#"{ "n": 5, "k": 1, "borel_generators": ["x2*x4", "x3*x5"] }"#)
                .unwrap();
        let resolved = doc.resolve().unwrap();
        // x2*x4 precedes x3*x5, so the closure of the pair is the closure
        // of x3*x5 alone: all nine squarefree (j1,j2) with j1<=3, j2<=5.
        assert_eq!(resolved.ideal.num_gens(), 9);
        assert!(resolved.borel_gens.is_some());
        // Output order is descending lex.
        let strings = monomial_strings(resolved.ideal.gens());
        assert_eq!(strings[0], "x1*x2");
        assert_eq!(strings[8], "x3*x5");
    }

    #[test]
    fn resolve_generator_document() {
        let doc: IdealDocument =
            serde_json::from_str(r#"{ "n": 4, "generators": ["x1*x3", "x1*x4", "x2*x4"] }"#)
                .unwrap();
        let resolved = doc.resolve().unwrap();
        assert_eq!(resolved.ideal.num_gens(), 3);
        assert!(resolved.borel_gens.is_none());
    }

    #[test]
    fn resolve_rejects_ambiguity() {
        let doc: IdealDocument =
            serde_json::from_str(r#"{ "n": 2, "generators": ["x1"], "borel_generators": ["x1"] }"#)
                .unwrap();
        assert!(doc.resolve().is_err());
        let doc: IdealDocument = serde_json::from_str(r#"{ "n": 2 }"#).unwrap();
        assert!(doc.resolve().is_err());
    }

    #[test]
    fn unbounded_closure_document() {
        let doc: IdealDocument =
            serde_json::from_str(r#"{ "n": 2, "borel_generators": ["x2^2"] }"#).unwrap();
        let resolved = doc.resolve().unwrap();
        // Full closure of x2^2: x1^2, x1*x2, x2^2.
        assert_eq!(resolved.ideal.num_gens(), 3);
    }

    #[test]
    fn betti_document_round_trip() {
        let ideal =
            crate::ideal::borel_closure_k(&[Monomial::parse("x2*x4", 4).unwrap()], 1, 4).unwrap();
        let table = betti_kborel(&ideal, 1).unwrap();
        let doc = BettiDocument::from_table(&table, "ideal");
        let json = serde_json::to_string(&doc).unwrap();
        let back: BettiDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, back);
        assert_eq!(back.projdim, 2);
        assert_eq!(
            back.entries[0],
            BettiEntry {
                i: 0,
                j: 2,
                beta: 5
            }
        );
    }
}
