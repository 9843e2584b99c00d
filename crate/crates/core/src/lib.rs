//! Combinatorics and homological invariants of Borel-type monomial ideals:
//! bounded Borel closures, graded Betti numbers with an independent
//! multigraded homology oracle, linear-quotient certificates, multiplicity
//! and analytic spread of squarefree Borel ideals, homological shift ideals,
//! and t-spread Veronese ideals.
//!
//! Every closed formula has an exact brute-force counterpart at desk scale;
//! the two are kept separate so each can audit the other.

pub mod error;
pub mod ideal;
pub mod invariants;
pub mod json;
mod linalg;
pub mod monomial;
pub mod resolution;
pub mod sample;
pub mod shifts;
pub mod tspread;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;

/// Binomial coefficient with the usual convention C(n, k) = 0 for k > n.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 1), 3);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(35, 17), 4537567650);
    }
}
