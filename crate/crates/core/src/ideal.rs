//! Monomial ideals as minimal generating sets: bounded Borel closures,
//! height, colon ideals, linear-quotient certificates and the decomposition
//! function.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `K[x1..xn]`, held as its unique minimal generating
/// set, sorted in descending lexicographic order. The empty set is the zero
/// ideal; the singleton `{1}` is the unit ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    bound: Option<u32>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "ambient variable count must be positive");
        MonomialIdeal {
            n,
            gens: Vec::new(),
            bound: None,
        }
    }

    /// Discards generators divisible by another and sorts descending lex.
    /// Idempotent; the empty input yields the zero ideal.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, n: usize) -> Result<Self> {
        assert!(n >= 1, "ambient variable count must be positive");
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.n() != n {
                return Err(Error::VariableCountMismatch(n, g.n()));
            }
            all.push(g);
        }
        all.sort();
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for g in &all {
            if !all
                .iter()
                .any(|h| h != g && h.divides(g).expect("same ring"))
            {
                kept.push(g.clone());
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal {
            n,
            gens: kept,
            bound: None,
        })
    }

    /// Records an asserted exponent bound after checking it holds.
    pub fn with_bound(mut self, k: u32) -> Result<Self> {
        if let Some(bad) = self.gens.iter().find(|g| !g.is_k_bounded(k)) {
            return Err(Error::NotKBounded(bad.to_string(), k));
        }
        self.bound = Some(k);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// The common degree of the generators, when they all agree.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let first = self.gens.first()?.degree();
        self.gens
            .iter()
            .all(|g| g.degree() == first)
            .then_some(first)
    }

    /// Divisibility membership: some minimal generator divides m.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::VariableCountMismatch(self.n, m.n()));
        }
        for g in &self.gens {
            if g.divides(m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `self : (u)`, generated by v / gcd(v, u) over the generators.
    pub fn colon_by_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.n() != self.n {
            return Err(Error::VariableCountMismatch(self.n, u.n()));
        }
        let quotients = self
            .gens
            .iter()
            .map(|v| v.colon(u))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(quotients, self.n)
    }

    /// Equality as ideals (same minimal generating set).
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.gens == other.gens
    }

    /// Every generator has all exponents at most k.
    pub fn k_bounded(&self, k: u32) -> bool {
        self.gens.iter().all(|g| g.is_k_bounded(k))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ") in n={}", self.n)
    }
}

/// Generators of the ideal generated by the k-bounded members of G(I).
pub fn bounded_part(ideal: &MonomialIdeal, k: u32) -> MonomialIdeal {
    let gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter(|g| g.is_k_bounded(k))
        .cloned()
        .collect();
    MonomialIdeal::minimalize(gens, ideal.n()).expect("same ring")
}

/// Enumerates the k-bounded monomials of the same degree preceding u in the
/// sorted-index order: weakly increasing tuples (j1..jd) with jl <= il and
/// every index repeated at most k times.
fn bounded_predecessors(u: &Monomial, k: u32, out: &mut Vec<Monomial>) {
    let caps = u.sorted_index_form();
    let d = caps.len();
    if d == 0 {
        out.push(u.clone());
        return;
    }
    let mut current: Vec<usize> = Vec::with_capacity(d);
    fn rec(caps: &[usize], k: u32, n: usize, current: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        let pos = current.len();
        if pos == caps.len() {
            out.push(Monomial::from_index_form(current, n).expect("indices in range"));
            return;
        }
        let lo = current.last().copied().unwrap_or(1);
        for j in lo..=caps[pos] {
            let run = current.iter().rev().take_while(|&&c| c == j).count() as u32;
            if run >= k {
                continue;
            }
            current.push(j);
            rec(caps, k, n, current, out);
            current.pop();
        }
    }
    rec(&caps, k, u.n(), &mut current, out);
}

/// The smallest k-Borel ideal containing the given k-bounded monomials,
/// generated by direct enumeration of sorted index forms.
pub fn borel_closure_k(borel_gens: &[Monomial], k: u32, n: usize) -> Result<MonomialIdeal> {
    assert!(k >= 1, "bound must be positive");
    let mut all = Vec::new();
    for u in borel_gens {
        if u.n() != n {
            return Err(Error::VariableCountMismatch(n, u.n()));
        }
        if !u.is_k_bounded(k) {
            return Err(Error::NotKBounded(u.to_string(), k));
        }
        bounded_predecessors(u, k, &mut all);
    }
    MonomialIdeal::minimalize(all, n)?.with_bound(k)
}

/// The smallest Borel ideal containing the given monomials; the bound is
/// taken large enough to impose no constraint.
pub fn borel_closure(borel_gens: &[Monomial], n: usize) -> Result<MonomialIdeal> {
    let k = borel_gens
        .iter()
        .map(Monomial::degree)
        .max()
        .unwrap_or(1)
        .max(1);
    let mut all = Vec::new();
    for u in borel_gens {
        if u.n() != n {
            return Err(Error::VariableCountMismatch(n, u.n()));
        }
        bounded_predecessors(u, k, &mut all);
    }
    MonomialIdeal::minimalize(all, n)
}

/// Checks closure under the bounded exchange moves: for every generator u,
/// every j in supp(u) and i < j with x_i(u/x_j) k-bounded, membership holds.
/// Ideals with a generator exceeding the bound are not k-Borel.
pub fn is_k_borel(ideal: &MonomialIdeal, k: u32) -> bool {
    if !ideal.k_bounded(k) {
        return false;
    }
    for u in ideal.gens() {
        for j in u.support() {
            let quotient = u.div_var(j).expect("j in support");
            for i in 1..j {
                let moved = quotient.times_var(i);
                if moved.is_k_bounded(k) && !ideal.contains(&moved).expect("same ring") {
                    return false;
                }
            }
        }
    }
    true
}

/// Height of a bounded Borel ideal from its Borel generators:
/// the largest min(u_i).
pub fn height_from_borel_gens(borel_gens: &[Monomial]) -> Result<usize> {
    borel_gens
        .iter()
        .map(|u| u.min_var().ok_or(Error::UnitIdeal))
        .try_fold(None::<usize>, |acc, m| {
            m.map(|m| Some(acc.map_or(m, |a| a.max(m))))
        })?
        .ok_or(Error::ZeroIdeal)
}

/// Minimal Borel generators of a squarefree Borel ideal: the maximal
/// elements of G(I) under the sorted-index order. Only offered for
/// squarefree ideals; no canonical extraction exists for larger bounds.
pub fn borel_generators_squarefree(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let gens = ideal.gens();
    let mut maximal = Vec::new();
    for u in gens {
        let dominated = gens
            .iter()
            .any(|v| v != u && v.degree() == u.degree() && u.precedes(v).expect("equal degrees"));
        if !dominated {
            maximal.push(u.clone());
        }
    }
    Ok(maximal)
}

/// An ordering of the minimal generators together with set(u_j): the
/// variables generating the colon ideal of u_j against its predecessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientCertificate {
    order: Vec<Monomial>,
    sets: Vec<BTreeSet<usize>>,
}

impl LinearQuotientCertificate {
    /// Certificate of a principal or zero ideal: no colons to check.
    pub fn trivial(order: Vec<Monomial>) -> Self {
        let sets = order.iter().map(|_| BTreeSet::new()).collect();
        LinearQuotientCertificate { order, sets }
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    /// set(u) for a generator position (0-based).
    pub fn set_at(&self, j: usize) -> &BTreeSet<usize> {
        &self.sets[j]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Outcome of a linear-quotient verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LqOutcome {
    Quotients(LinearQuotientCertificate),
    /// First failing position (generators counted from 1) and the
    /// offending non-variable colon generator.
    Fails {
        index: usize,
        witness: Monomial,
    },
}

impl LqOutcome {
    pub fn certificate(self) -> Result<LinearQuotientCertificate> {
        match self {
            LqOutcome::Quotients(c) => Ok(c),
            LqOutcome::Fails { index, witness } => Err(Error::NotLinearQuotients {
                index,
                witness: witness.to_string(),
            }),
        }
    }
}

/// Verifies the linear-quotient property of an ordering of G(I): every
/// successive colon ideal must be generated by variables. Returns the
/// certificate with the colon variable sets, or the first failure.
pub fn linear_quotient_certificate(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<LqOutcome> {
    let mut sorted_order: Vec<&Monomial> = order.iter().collect();
    sorted_order.sort();
    let mut sorted_gens: Vec<&Monomial> = ideal.gens().iter().collect();
    sorted_gens.sort();
    if sorted_order.len() != sorted_gens.len()
        || sorted_order.iter().zip(&sorted_gens).any(|(a, b)| a != b)
    {
        return Err(Error::NotAPermutation);
    }

    let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(order.len());
    for j in 0..order.len() {
        if j == 0 {
            sets.push(BTreeSet::new());
            continue;
        }
        // Coloning the raw prefix list gives the same ideal as coloning its
        // minimalization.
        let quotients = order[..j]
            .iter()
            .map(|v| v.colon(&order[j]))
            .collect::<Result<Vec<_>>>()?;
        let colon = MonomialIdeal::minimalize(quotients, ideal.n())?;
        let mut vars = BTreeSet::new();
        for g in colon.gens() {
            if g.degree() != 1 {
                return Ok(LqOutcome::Fails {
                    index: j + 1,
                    witness: g.clone(),
                });
            }
            vars.insert(g.min_var().expect("degree-one monomial"));
        }
        sets.push(vars);
    }
    Ok(LqOutcome::Quotients(LinearQuotientCertificate {
        order: order.to_vec(),
        sets,
    }))
}

/// The minimal generators in descending lexicographic order (the order the
/// linear-quotient theorems use).
pub fn lex_order(ideal: &MonomialIdeal) -> Vec<Monomial> {
    ideal.gens().to_vec()
}

/// Linear-quotient verification under descending lex.
pub fn lex_linear_quotients(ideal: &MonomialIdeal) -> Result<LqOutcome> {
    linear_quotient_certificate(ideal, &lex_order(ideal))
}

/// Certificate under descending lex; errors when lex fails (cannot happen
/// for bounded Borel ideals).
pub fn lex_certificate(ideal: &MonomialIdeal) -> Result<LinearQuotientCertificate> {
    lex_linear_quotients(ideal)?.certificate()
}

/// The decomposition function g on the multiples x_s * u for s in set(u):
/// g(v) is the first generator in the fixed order whose prefix ideal
/// contains v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionFunctionTable {
    order: Vec<Monomial>,
    /// (generator position, s) -> position of g(x_s * u).
    entries: Vec<((usize, usize), usize)>,
}

impl DecompositionFunctionTable {
    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    /// Iterates (u, s, g(x_s u)) triples.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, usize, &Monomial)> {
        self.entries
            .iter()
            .map(|&((j, s), g)| (&self.order[j], s, &self.order[g]))
    }

    pub fn value(&self, u: &Monomial, s: usize) -> Option<&Monomial> {
        let j = self.order.iter().position(|v| v == u)?;
        self.entries
            .iter()
            .find(|&&((jj, ss), _)| jj == j && ss == s)
            .map(|&(_, g)| &self.order[g])
    }
}

/// Tabulates g(x_s * u) for every generator u and every s in set(u).
pub fn decomposition_function(
    ideal: &MonomialIdeal,
    certificate: &LinearQuotientCertificate,
) -> Result<DecompositionFunctionTable> {
    let order = certificate.order();
    let mut entries = Vec::new();
    for (j, u) in order.iter().enumerate() {
        for &s in certificate.set_at(j) {
            let multiple = u.times_var(s);
            let g = order
                .iter()
                .position(|w| w.divides(&multiple).expect("same ring"))
                .ok_or_else(|| {
                    Error::Internal(format!("x{s}*{u} escaped the ideal despite s in set(u)"))
                })?;
            entries.push(((j, s), g));
        }
    }
    let _ = ideal;
    Ok(DecompositionFunctionTable {
        order: order.to_vec(),
        entries,
    })
}

/// Result of the regularity check: whether set(g(x_s u)) is contained in
/// set(u) everywhere, with the first witnessing (u, s) on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCheck {
    pub regular: bool,
    pub witness: Option<(Monomial, usize)>,
}

/// Checks regularity of the decomposition function attached to a
/// linear-quotient certificate.
pub fn is_regular_decomposition(
    ideal: &MonomialIdeal,
    certificate: &LinearQuotientCertificate,
) -> Result<RegularityCheck> {
    let table = decomposition_function(ideal, certificate)?;
    let order = certificate.order();
    for (j, u) in order.iter().enumerate() {
        for &s in certificate.set_at(j) {
            let g = table.value(u, s).expect("tabulated above");
            let g_pos = order.iter().position(|w| w == g).expect("g in order");
            let g_set = certificate.set_at(g_pos);
            if !g_set.is_subset(certificate.set_at(j)) {
                return Ok(RegularityCheck {
                    regular: false,
                    witness: Some((u.clone(), s)),
                });
            }
        }
    }
    Ok(RegularityCheck {
        regular: true,
        witness: None,
    })
}
