//! Multiplicity and analytic spread of squarefree Borel ideals: the first-
//! block formulas plus their independent oracles (minimal vertex covers of
//! the support hypergraph; exact rank of the exponent matrix; the linear
//! relation graph).

use std::collections::BTreeSet;

use crate::binomial;
use crate::error::{Error, Result};
use crate::ideal::{borel_closure_k, MonomialIdeal};
use crate::linalg::integer_rank;
use crate::monomial::{block_decomposition, Monomial};

/// All inclusion-minimal variable sets meeting every generator's support,
/// i.e. the minimal primes of a squarefree monomial ideal. Sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrimeSet {
    primes: Vec<Vec<usize>>,
    height: usize,
}

impl MinimalPrimeSet {
    pub fn primes(&self) -> &[Vec<usize>] {
        &self.primes
    }

    /// The smallest cardinality among the minimal primes.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn primes_at_height(&self, h: usize) -> Vec<&[usize]> {
        self.primes
            .iter()
            .filter(|p| p.len() == h)
            .map(|p| p.as_slice())
            .collect()
    }

    /// Number of minimal primes of minimal height; for squarefree ideals
    /// this is the multiplicity of the quotient.
    pub fn multiplicity(&self) -> u64 {
        self.primes
            .iter()
            .filter(|p| p.len() == self.height)
            .count() as u64
    }
}

/// Minimal primes of a squarefree monomial ideal by branching cover
/// enumeration over the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<MinimalPrimeSet> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let supports: Vec<Vec<usize>> = ideal.gens().iter().map(|g| g.support()).collect();
    let mut covers: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    branch_covers(&supports, &mut chosen, &mut covers);
    // The branching can emit non-minimal covers; keep the minimal ones.
    let minimal: Vec<Vec<usize>> = covers
        .iter()
        .filter(|c| {
            !covers
                .iter()
                .any(|d| d.len() < c.len() && d.iter().all(|x| c.contains(x)))
        })
        .cloned()
        .collect();
    let height = minimal
        .iter()
        .map(Vec::len)
        .min()
        .expect("nonzero proper ideal");
    Ok(MinimalPrimeSet {
        primes: minimal,
        height,
    })
}

fn branch_covers(
    supports: &[Vec<usize>],
    chosen: &mut BTreeSet<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    match supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)))
    {
        None => {
            out.insert(chosen.iter().copied().collect());
        }
        Some(uncovered) => {
            for &v in uncovered {
                let inserted = chosen.insert(v);
                branch_covers(supports, chosen, out);
                if inserted {
                    chosen.remove(&v);
                }
            }
        }
    }
}

/// Multiplicity of the quotient by a principal squarefree Borel ideal, with
/// the predicted minimal-prime family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalMultiplicity {
    pub multiplicity: u64,
    /// Height of the ideal: min(u).
    pub height: usize,
    /// The height-h minimal primes are exactly the h-subsets of
    /// [1, prime_index_bound], the closed range up to max of the first block.
    pub prime_index_bound: usize,
}

/// C(max(B1), |B1| - 1) for the first block B1 of the Borel generator.
pub fn multiplicity_principal(u: &Monomial) -> Result<PrincipalMultiplicity> {
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let dec = block_decomposition(u, 1)?;
    let b1 = dec.first_block();
    let size = b1.len(1) as u64;
    Ok(PrincipalMultiplicity {
        multiplicity: binomial(b1.last as u64, size - 1),
        height: u.min_var().expect("non-unit"),
        prime_index_bound: b1.last,
    })
}

/// Outcome of the multi-generator multiplicity formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiMultiplicity {
    /// Some generator's first block is contained in every other first
    /// block; the formula applies to that block.
    Value {
        multiplicity: u64,
        /// Index (0-based) of a generator witnessing the containment.
        witness: usize,
    },
    /// No first block is contained in all others; the formula does not
    /// apply and callers must fall back to the cover oracle.
    HypothesisNotSatisfied,
}

/// Multiplicity of a squarefree Borel ideal with several Borel generators,
/// when one first block is contained in all the others.
pub fn multiplicity_multi(borel_gens: &[Monomial]) -> Result<MultiMultiplicity> {
    if borel_gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let blocks: Vec<(usize, usize)> = borel_gens
        .iter()
        .map(|u| {
            if !u.is_squarefree() {
                return Err(Error::NotSquarefree);
            }
            let b = block_decomposition(u, 1)?.first_block();
            Ok((b.first, b.last))
        })
        .collect::<Result<_>>()?;
    for (j, &(a_j, b_j)) in blocks.iter().enumerate() {
        if blocks.iter().all(|&(a_i, b_i)| a_i <= a_j && b_j <= b_i) {
            let size = (b_j - a_j + 1) as u64;
            return Ok(MultiMultiplicity::Value {
                multiplicity: binomial(b_j as u64, size - 1),
                witness: j,
            });
        }
    }
    Ok(MultiMultiplicity::HypothesisNotSatisfied)
}

/// The linear relation graph: an edge {i, j} whenever x_i u_k = x_j u_l for
/// generators u_k, u_l. The vertex set is the union of the edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRelationGraph {
    vertices: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl LinearRelationGraph {
    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// Connected with vertex set exactly 1..=n.
    pub fn is_connected_on(&self, n: usize) -> bool {
        if self.vertices != (1..=n).collect::<BTreeSet<_>>() {
            return false;
        }
        let Some(&start) = self.vertices.first() else {
            return n == 0;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if seen.insert(other) {
                    stack.push(other);
                }
            }
        }
        seen == self.vertices
    }
}

/// Linear relation graph of an equigenerated monomial ideal by pairwise
/// generator comparison: x_i u_k = x_j u_l exactly when the exponent
/// vectors differ by e_j - e_i.
pub fn linear_relation_graph(ideal: &MonomialIdeal) -> Result<LinearRelationGraph> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let gens = ideal.gens();
    let mut edges = BTreeSet::new();
    for (k, u) in gens.iter().enumerate() {
        for v in &gens[k + 1..] {
            let diff: Vec<i64> = u
                .exponents()
                .iter()
                .zip(v.exponents())
                .map(|(a, b)| *a as i64 - *b as i64)
                .collect();
            let pos: Vec<usize> = (0..diff.len()).filter(|&c| diff[c] == 1).collect();
            let neg: Vec<usize> = (0..diff.len()).filter(|&c| diff[c] == -1).collect();
            let zero_rest = diff.iter().filter(|&&d| d != 0).count() == 2;
            if pos.len() == 1 && neg.len() == 1 && zero_rest {
                // x_i u = x_j v with i the negative and j the positive side.
                let (i, j) = (neg[0] + 1, pos[0] + 1);
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    Ok(LinearRelationGraph { vertices, edges })
}

/// Analytic spread of a non-principal equigenerated squarefree Borel ideal
/// from its Borel generators: n when 1 misses some first block, otherwise
/// n minus the size of the intersection of the first blocks, where n is the
/// largest support index among the generators.
pub fn analytic_spread_from_borel_gens(borel_gens: &[Monomial]) -> Result<usize> {
    if borel_gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let degree = borel_gens[0].degree();
    let mut n = 0usize;
    let mut blocks = Vec::new();
    for u in borel_gens {
        if !u.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if u.degree() != degree {
            return Err(Error::NotEquigenerated);
        }
        let b = block_decomposition(u, 1)?.first_block();
        n = n.max(u.max_var().expect("non-unit"));
        blocks.push((b.first, b.last));
    }
    // The formula excludes principal ideals; principality is a property of
    // the expanded generating set, not of the Borel generator list.
    let ambient = borel_gens[0].n();
    let expanded = borel_closure_k(borel_gens, 1, ambient)?;
    if expanded.is_principal() {
        return Err(Error::PrincipalIdeal);
    }
    let ones_in_all = blocks.iter().all(|&(a, _)| a == 1);
    if !ones_in_all {
        return Ok(n);
    }
    let common = blocks.iter().map(|&(_, b)| b).min().expect("nonempty");
    Ok(n - common)
}

/// Analytic spread of an equigenerated monomial ideal as the exact rank of
/// the exponent matrix of its minimal generators.
pub fn oracle_analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.equigenerated_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let rows: Vec<Vec<i128>> = ideal
        .gens()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i128).collect())
        .collect();
    integer_rank(rows)
}
