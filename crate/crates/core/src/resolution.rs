//! Minimal free resolution data of monomial ideals: the closed Betti-number
//! formula for bounded Borel ideals, the monomial Koszul-cycle basis, shift
//! ideals read off a linear-quotient certificate, and an independent
//! multigraded oracle via reduced simplicial homology of upper Koszul
//! complexes with exact integer linear algebra.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::binomial;
use crate::error::{Error, Result};
use crate::ideal::{is_k_borel, LinearQuotientCertificate, MonomialIdeal};
use crate::linalg::integer_rank;
use crate::monomial::Monomial;

/// Graded Betti numbers of the ideal itself: the (0, d) row counts minimal
/// generators of degree d. Only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn add(&mut self, i: u32, j: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn entry(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projdim(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total Betti number in homological degree i.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|((ii, _), _)| *ii == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Totals (beta_0, ..., beta_projdim).
    pub fn totals(&self) -> Vec<u64> {
        (0..=self.projdim()).map(|i| self.total(i)).collect()
    }

    /// The same resolution read as Betti numbers of the quotient module:
    /// every homological degree shifts up by one and the quotient itself
    /// contributes a single generator in degree zero.
    pub fn quotient_module_table(&self) -> BettiTable {
        let mut out = BettiTable::default();
        out.add(0, 0, 1);
        for ((i, j), v) in self.iter() {
            out.add(i + 1, j, v);
        }
        out
    }
}

/// Multigraded Betti numbers: homological degree paired with an exponent
/// vector. Collapsing along total degree recovers the graded table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultigradedBettiTable {
    entries: BTreeMap<(u32, Vec<u32>), u64>,
}

impl MultigradedBettiTable {
    pub fn add(&mut self, i: u32, a: Vec<u32>, count: u64) {
        if count > 0 {
            *self.entries.entry((i, a)).or_insert(0) += count;
        }
    }

    pub fn entry(&self, i: u32, a: &[u32]) -> u64 {
        self.entries.get(&(i, a.to_vec())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &[u32], u64)> + '_ {
        self.entries
            .iter()
            .map(|((i, a), &v)| (*i, a.as_slice(), v))
    }

    pub fn collapse(&self) -> BettiTable {
        let mut out = BettiTable::default();
        for ((i, a), &v) in &self.entries {
            out.add(*i, a.iter().sum(), v);
        }
        out
    }

    /// Exponent vectors with a nonzero entry in homological degree i.
    pub fn degrees_at(&self, i: u32) -> impl Iterator<Item = &[u32]> + '_ {
        self.entries
            .iter()
            .filter(move |((ii, _), _)| *ii == i)
            .map(|((_, a), _)| a.as_slice())
    }
}

/// Graded Betti numbers of a k-Borel ideal by the closed formula: each
/// generator u of degree j contributes C(m(u) - L(u) - 1, i) in bidegree
/// (i, i + j), where m(u) = max(u) and L(u) counts indices below m(u) whose
/// exponent equals the bound.
pub fn betti_kborel(ideal: &MonomialIdeal, k: u32) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !is_k_borel(ideal, k) {
        return Err(Error::NotKBorel(k));
    }
    let mut table = BettiTable::default();
    for u in ideal.gens() {
        let m = u.max_var().expect("nonzero generator") as u32;
        let l = saturation_count(u, k);
        let width = m - l - 1;
        let d = u.degree();
        for i in 0..=width {
            table.add(i, i + d, binomial(width as u64, i as u64));
        }
    }
    Ok(table)
}

/// L(u): indices below max(u) whose exponent equals the bound k.
fn saturation_count(u: &Monomial, k: u32) -> u32 {
    let m = u.max_var().expect("nonzero generator");
    (1..m).filter(|&l| u.exponent(l) == k).count() as u32
}

/// A monomial Koszul cycle indexed by a generator u and a variable subset F
/// below max(u); its homology class has multidegree x^F * u.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulBasisElement {
    pub generator: Monomial,
    pub subset: Vec<usize>,
    pub multidegree: Monomial,
}

/// Basis of the i-th Koszul homology of the quotient by a k-Borel ideal,
/// over the full variable sequence: pairs (u, F) with u a generator,
/// |F| = i - 1, max(F) < max(u) and x^F * u within the bound.
pub fn koszul_basis(ideal: &MonomialIdeal, k: u32, i: u32) -> Result<Vec<KoszulBasisElement>> {
    koszul_basis_partial(ideal, k, i, 1)
}

/// Basis of the i-th homology with respect to the truncated sequence
/// x_n, ..., x_j: the same pairs further constrained by j <= min(F)
/// (j <= max(u) when i = 1). Exposed for exploration; only j = 1 feeds
/// Betti numbers and carries an independent oracle.
pub fn koszul_basis_partial(
    ideal: &MonomialIdeal,
    k: u32,
    i: u32,
    j: usize,
) -> Result<Vec<KoszulBasisElement>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !is_k_borel(ideal, k) {
        return Err(Error::NotKBorel(k));
    }
    assert!(i >= 1, "homological degree must be at least 1");
    assert!(j >= 1, "sequence start must be at least 1");
    let mut out = Vec::new();
    for u in ideal.gens() {
        let m = u.max_var().expect("nonzero generator");
        if i == 1 {
            if j <= m {
                out.push(KoszulBasisElement {
                    generator: u.clone(),
                    subset: Vec::new(),
                    multidegree: u.clone(),
                });
            }
            continue;
        }
        // Eligible positions keep x^F * u bounded: exponent below k.
        let eligible: Vec<usize> = (j..m).filter(|&l| u.exponent(l) < k).collect();
        for f in eligible.iter().copied().combinations((i - 1) as usize) {
            let multidegree = u.times_vars(f.iter().copied());
            out.push(KoszulBasisElement {
                generator: u.clone(),
                subset: f,
                multidegree,
            });
        }
    }
    Ok(out)
}

/// The j-th shift ideal read off a linear-quotient certificate: generated by
/// x^F * u over generators u and j-subsets F of set(u), minimalized.
pub fn hs_via_linear_quotients(
    ideal: &MonomialIdeal,
    certificate: &LinearQuotientCertificate,
    j: u32,
) -> Result<MonomialIdeal> {
    let mut sorted_order: Vec<&Monomial> = certificate.order().iter().collect();
    sorted_order.sort();
    let mut sorted_gens: Vec<&Monomial> = ideal.gens().iter().collect();
    sorted_gens.sort();
    if sorted_order != sorted_gens {
        return Err(Error::NotAPermutation);
    }
    let mut products = Vec::new();
    for (pos, u) in certificate.order().iter().enumerate() {
        let set = certificate.set_at(pos);
        if (set.len() as u32) < j {
            continue;
        }
        for f in set.iter().copied().combinations(j as usize) {
            products.push(u.times_vars(f));
        }
    }
    MonomialIdeal::minimalize(products, ideal.n())
}

/// Controls for the homology oracle.
#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Cap on the number of candidate multidegrees scanned.
    pub limit: usize,
    /// Scan every degree dominated by the total lcm instead of only the
    /// joins of generator subsets (audit mode).
    pub exhaustive: bool,
    /// Extra multidegrees to scan unconditionally; degrees outside the lcm
    /// lattice must contribute nothing.
    pub extra_candidates: Vec<Monomial>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            limit: 10_000,
            exhaustive: false,
            extra_candidates: Vec::new(),
        }
    }
}

impl OracleOptions {
    pub fn with_limit(limit: usize) -> Self {
        OracleOptions {
            limit,
            ..Default::default()
        }
    }
}

/// Exact multigraded Betti numbers of a monomial ideal in characteristic
/// zero: for each candidate multidegree a, the reduced homology of the
/// complex of squarefree divisors F of x^a with x^a / x^F in the ideal.
/// Candidates range over the joins of generator subsets.
pub fn koszul_homology_oracle(
    ideal: &MonomialIdeal,
    options: &OracleOptions,
) -> Result<MultigradedBettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n();
    let gens = ideal.gens();

    let mut table = MultigradedBettiTable::default();
    let mut scanned = 0usize;
    let mut seen: std::collections::BTreeSet<Vec<u32>> = Default::default();
    let mut scan =
        |a: &[u32], require_join: bool, table: &mut MultigradedBettiTable| -> Result<()> {
            if !seen.insert(a.to_vec()) {
                return Ok(());
            }
            scanned += 1;
            if scanned > options.limit {
                return Err(Error::ResourceLimit(format!(
                    "more than {} candidate multidegrees",
                    options.limit
                )));
            }
            let divisors: Vec<&Monomial> = gens
                .iter()
                .filter(|g| g.exponents().iter().zip(a).all(|(e, b)| e <= b))
                .collect();
            if divisors.is_empty() {
                return Ok(());
            }
            if require_join {
                let join: Vec<u32> = (0..n)
                    .map(|c| divisors.iter().map(|g| g.exponents()[c]).max().unwrap())
                    .collect();
                if join != a {
                    return Ok(());
                }
            }
            for (i, beta) in degree_homology(a, &divisors)? {
                table.add(i, a.to_vec(), beta);
            }
            Ok(())
        };

    if options.exhaustive {
        let total: Vec<u32> = (0..n)
            .map(|c| gens.iter().map(|g| g.exponents()[c]).max().unwrap_or(0))
            .collect();
        let mut size: u128 = 1;
        for &t in &total {
            size = size.saturating_mul(t as u128 + 1);
        }
        if size > options.limit as u128 {
            return Err(Error::ResourceLimit(format!(
                "exhaustive scan of {size} degrees exceeds the cap of {}",
                options.limit
            )));
        }
        let ranges: Vec<Vec<u32>> = total.iter().map(|&t| (0..=t).collect()).collect();
        for a in ranges.into_iter().multi_cartesian_product() {
            scan(&a, false, &mut table)?;
        }
    } else {
        // Coordinatewise value sets; the lcm of any generator subset picks
        // each coordinate from the corresponding set.
        let mut values: Vec<Vec<u32>> = Vec::with_capacity(n);
        let mut size: u128 = 1;
        for c in 0..n {
            let mut vals: Vec<u32> = gens.iter().map(|g| g.exponents()[c]).collect();
            vals.sort_unstable();
            vals.dedup();
            size = size.saturating_mul(vals.len() as u128);
            values.push(vals);
        }
        if size > options.limit as u128 {
            return Err(Error::ResourceLimit(format!(
                "candidate scan of {size} degrees exceeds the cap of {}",
                options.limit
            )));
        }
        for a in values.into_iter().multi_cartesian_product() {
            scan(&a, true, &mut table)?;
        }
    }

    for extra in &options.extra_candidates {
        if extra.n() != n {
            return Err(Error::VariableCountMismatch(n, extra.n()));
        }
        scan(extra.exponents(), false, &mut table)?;
    }

    Ok(table)
}

/// Reduced homology dimensions of the upper Koszul complex at one degree,
/// returned as (homological degree i, beta) pairs with beta > 0.
fn degree_homology(a: &[u32], divisors: &[&Monomial]) -> Result<Vec<(u32, u64)>> {
    let verts: Vec<usize> = (0..a.len()).filter(|&c| a[c] > 0).collect();
    let v = verts.len();
    if v > 20 {
        return Err(Error::ResourceLimit(format!(
            "upper Koszul complex on {v} vertices"
        )));
    }
    // Face test: x^a / x^F lies in the ideal iff some divisor avoids every
    // coordinate of F where it is tight against a.
    let tight_masks: Vec<u32> = divisors
        .iter()
        .map(|g| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &c)| g.exponents()[c] == a[c])
                .fold(0u32, |m, (pos, _)| m | (1 << pos))
        })
        .collect();

    // Faces bucketed by cardinality; masks ascend within each bucket.
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); v + 1];
    for mask in 0u32..(1 << v) {
        if tight_masks.iter().any(|t| t & mask == 0) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }

    // rank of the boundary map from size-s faces to size-(s-1) faces.
    let mut ranks = vec![0usize; v + 2];
    for s in 1..=v {
        if faces[s].is_empty() || faces[s - 1].is_empty() {
            continue;
        }
        let index_of = |bucket: &Vec<u32>, mask: u32| -> usize {
            bucket
                .binary_search(&mask)
                .expect("complex closed under subsets")
        };
        let mut matrix = vec![vec![0i128; faces[s].len()]; faces[s - 1].len()];
        for (col, &mask) in faces[s].iter().enumerate() {
            let mut sign = 1i128;
            for pos in 0..v {
                if mask & (1 << pos) != 0 {
                    let sub = mask & !(1 << pos);
                    let row = index_of(&faces[s - 1], sub);
                    matrix[row][col] = sign;
                    sign = -sign;
                }
            }
        }
        ranks[s] = integer_rank(matrix)?;
    }

    let mut out = Vec::new();
    for i in 0..=v {
        let dim = faces[i].len() as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
        if dim < 0 {
            return Err(Error::Internal("negative homology dimension".into()));
        }
        if dim > 0 {
            out.push((i as u32, dim as u64));
        }
    }
    Ok(out)
}

/// The j-th shift ideal from the multigraded oracle: generated by the
/// exponent vectors carrying a nonzero Betti number in homological degree j.
pub fn hs_from_oracle(
    ideal: &MonomialIdeal,
    j: u32,
    options: &OracleOptions,
) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(ideal.n()));
    }
    let table = koszul_homology_oracle(ideal, options)?;
    let gens: Vec<Monomial> = table
        .degrees_at(j)
        .map(|a| Monomial::from_exponents(a.to_vec()).expect("nonzero length"))
        .collect();
    MonomialIdeal::minimalize(gens, ideal.n())
}
