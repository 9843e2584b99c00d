//! Helpers shared by the integration suites: exhaustive monomial
//! enumeration and the single-move fixpoint closure. The fixpoint oracle is
//! deliberately independent of the sorted-index enumerator it audits.
#![allow(dead_code)] // each test target compiles its own copy

use std::collections::BTreeSet;

use borelkit_core::Monomial;

/// All monomials of the given degree in n variables.
pub fn enumerate_monomials(n: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            out.push(Monomial::from_exponents(exps.clone()).unwrap());
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, degree, &mut exps, &mut out);
    out
}

/// All k-bounded monomials of the given degree.
pub fn enumerate_k_bounded(n: usize, degree: u32, k: u32) -> Vec<Monomial> {
    enumerate_monomials(n, degree)
        .into_iter()
        .filter(|m| m.is_k_bounded(k))
        .collect()
}

/// Fixpoint of the single exchange moves x_i * (u / x_j) for i < j, kept
/// within the bound: the monomials of the same degree reachable from u.
pub fn move_closure(u: &Monomial, k: u32) -> BTreeSet<Monomial> {
    let mut seen = BTreeSet::from([u.clone()]);
    let mut stack = vec![u.clone()];
    while let Some(v) = stack.pop() {
        for j in v.support() {
            let quotient = v.div_var(j).unwrap();
            for i in 1..j {
                let moved = quotient.times_var(i);
                if moved.is_k_bounded(k) && seen.insert(moved.clone()) {
                    stack.push(moved);
                }
            }
        }
    }
    seen
}

/// Move closure with no exponent bound.
pub fn move_closure_unbounded(u: &Monomial) -> BTreeSet<Monomial> {
    move_closure(u, u.degree().max(1))
}
