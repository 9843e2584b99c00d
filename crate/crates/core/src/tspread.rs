//! t-spread Veronese ideals: generation, colon sets via gap intervals,
//! shift ideals counted by irregular pairs, and the right-presentation
//! linear-quotient order on the first shift ideal.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::binomial;
use crate::error::{Error, Result};
use crate::ideal::{
    linear_quotient_certificate, LinearQuotientCertificate, LqOutcome, MonomialIdeal,
};
use crate::monomial::{gap_set_t, irregular_pairs, Monomial};

/// Parameters (n, d, t) of the ideal generated by all t-spread monomials of
/// degree d in n variables. The generator count is C(n - (t-1)(d-1), d);
/// the ideal may be zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TSpreadVeroneseSpec {
    pub n: usize,
    pub d: usize,
    pub t: usize,
}

impl TSpreadVeroneseSpec {
    pub fn new(n: usize, d: usize, t: usize) -> Result<Self> {
        if n < 1 || d < 1 || t < 1 || d > n || t > n {
            return Err(Error::Parse {
                column: 0,
                message: format!("invalid t-spread parameters n={n}, d={d}, t={t}"),
            });
        }
        Ok(TSpreadVeroneseSpec { n, d, t })
    }

    /// Closed-form generator count.
    pub fn generator_count(&self) -> u64 {
        let reach = self.n as i64 - (self.t as i64 - 1) * (self.d as i64 - 1);
        if reach < self.d as i64 {
            return 0;
        }
        binomial(reach as u64, self.d as u64)
    }
}

/// All t-spread monomials of degree d, sorted descending lex.
pub fn tspread_generators(spec: &TSpreadVeroneseSpec) -> MonomialIdeal {
    let mut gens = Vec::new();
    let mut indices = Vec::with_capacity(spec.d);
    collect_spread(spec, 1, &mut indices, &mut gens);
    MonomialIdeal::minimalize(gens, spec.n).expect("same ring")
}

fn collect_spread(
    spec: &TSpreadVeroneseSpec,
    lo: usize,
    indices: &mut Vec<usize>,
    out: &mut Vec<Monomial>,
) {
    if indices.len() == spec.d {
        out.push(Monomial::from_index_form(indices, spec.n).expect("in range"));
        return;
    }
    for i in lo..=spec.n {
        indices.push(i);
        collect_spread(spec, i + spec.t, indices, out);
        indices.pop();
    }
}

/// The colon set of a generator under the descending-lex linear-quotient
/// order, read off combinatorially as the union of its gap intervals.
pub fn tspread_set(u: &Monomial, spec: &TSpreadVeroneseSpec) -> Result<BTreeSet<usize>> {
    if u.n() != spec.n {
        return Err(Error::VariableCountMismatch(spec.n, u.n()));
    }
    if u.degree() as usize != spec.d || !u.is_t_spread(spec.t) {
        return Err(Error::NotAGenerator);
    }
    gap_set_t(u, spec.t)
}

/// The j-th shift ideal: all squarefree monomials of degree d + j whose
/// sorted indices have at most j consecutive pairs closer than t.
pub fn tspread_hs(spec: &TSpreadVeroneseSpec, j: u32) -> MonomialIdeal {
    let degree = spec.d + j as usize;
    if degree > spec.n {
        return MonomialIdeal::zero(spec.n);
    }
    let gens: Vec<Monomial> = (1..=spec.n)
        .combinations(degree)
        .map(|idx| Monomial::from_index_form(&idx, spec.n).expect("in range"))
        .filter(|m| irregular_pairs(m, spec.t).len() <= j as usize)
        .collect();
    MonomialIdeal::minimalize(gens, spec.n).expect("same ring")
}

/// The canonical presentation of a first-shift generator w as x_i * u with
/// u a generator of the base ideal and i one of its gaps, u lex-maximal
/// among all such presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightPresentation {
    pub base: Monomial,
    pub cofactor: usize,
}

pub fn right_presentation(w: &Monomial, spec: &TSpreadVeroneseSpec) -> Result<RightPresentation> {
    if w.n() != spec.n {
        return Err(Error::VariableCountMismatch(spec.n, w.n()));
    }
    let mut best: Option<RightPresentation> = None;
    if w.is_squarefree() && w.degree() as usize == spec.d + 1 {
        for i in w.support() {
            let u = w.div_var(i).expect("i in support");
            if !u.is_t_spread(spec.t) {
                continue;
            }
            if !gap_set_t(&u, spec.t)?.contains(&i) {
                continue;
            }
            if best.as_ref().is_none_or(|b| u > b.base) {
                best = Some(RightPresentation {
                    base: u,
                    cofactor: i,
                });
            }
        }
    }
    best.ok_or(Error::NotAMember)
}

/// Orders the first shift ideal by right presentations (base descending
/// lex, then cofactor ascending) and verifies linear quotients under that
/// order. A verification failure is an error: the order is proven to work.
pub fn hs1_linear_quotient_order(spec: &TSpreadVeroneseSpec) -> Result<LinearQuotientCertificate> {
    let hs1 = tspread_hs(spec, 1);
    if hs1.is_zero() {
        return Ok(LinearQuotientCertificate::trivial(Vec::new()));
    }
    let mut keyed: Vec<(RightPresentation, Monomial)> = hs1
        .gens()
        .iter()
        .map(|w| Ok((right_presentation(w, spec)?, w.clone())))
        .collect::<Result<_>>()?;
    keyed.sort_by(|(a, _), (b, _)| {
        b.base
            .cmp(&a.base)
            .then_with(|| a.cofactor.cmp(&b.cofactor))
    });
    let order: Vec<Monomial> = keyed.into_iter().map(|(_, w)| w).collect();
    linear_quotient_certificate(&hs1, &order)?.certificate()
}

/// Experimental extension of the same ordering rule to higher shift ideals:
/// presentations use j-element gap subsets, ordered by base descending lex
/// and cofactor set ascending. Whether this always yields linear quotients
/// is open; callers log failures instead of asserting.
pub fn hs_higher_order_experiment(spec: &TSpreadVeroneseSpec, j: u32) -> Result<LqOutcome> {
    assert!(j >= 1, "experiment starts at the first shift");
    let hs = tspread_hs(spec, j);
    if hs.is_zero() {
        return Ok(LqOutcome::Quotients(LinearQuotientCertificate::trivial(
            Vec::new(),
        )));
    }
    let mut keyed = Vec::new();
    for w in hs.gens() {
        let mut best: Option<(Monomial, Vec<usize>)> = None;
        for f in w.support().into_iter().combinations(j as usize) {
            let mut u = w.clone();
            for &i in &f {
                u = u.div_var(i).expect("i in support");
            }
            if !u.is_t_spread(spec.t) {
                continue;
            }
            let gaps = gap_set_t(&u, spec.t)?;
            if !f.iter().all(|i| gaps.contains(i)) {
                continue;
            }
            if best
                .as_ref()
                .is_none_or(|(b, bf)| u > *b || (u == *b && f < *bf))
            {
                best = Some((u, f));
            }
        }
        let (base, cofactors) = best.ok_or_else(|| {
            Error::Internal(format!("no gap presentation for shift generator {w}"))
        })?;
        keyed.push((base, cofactors, w.clone()));
    }
    keyed.sort_by(|(ab, af, _), (bb, bf, _)| ab.cmp(bb).reverse().then_with(|| af.cmp(bf)));
    let order: Vec<Monomial> = keyed.into_iter().map(|(_, _, w)| w).collect();
    linear_quotient_certificate(&hs, &order)
}
