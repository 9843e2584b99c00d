//! Exponent-vector monomials, the sorted-index partial order, block
//! decompositions of squarefree supports, and the two gap notions.
//!
//! Variables are indexed 1..=n throughout; the exponent vector is stored
//! 0-based internally. The derived `Ord` is the lexicographic order induced
//! by x1 > x2 > ... > xn (larger in `Ord` = earlier in descending lex).

use std::collections::BTreeSet;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A monomial in a fixed polynomial ring `K[x1..xn]`, as its exponent vector.
/// The all-zero vector is the unit monomial 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from an exponent vector. The ambient variable count
    /// is the vector length and must be positive.
    pub fn from_exponents(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::Parse {
                column: 0,
                message: "exponent vector must have positive length".into(),
            });
        }
        Ok(Monomial { exps })
    }

    /// The unit monomial 1 in n variables.
    pub fn unit(n: usize) -> Self {
        assert!(n >= 1, "ambient variable count must be positive");
        Monomial { exps: vec![0; n] }
    }

    /// The variable x_i (1-based) in n variables.
    pub fn variable(i: usize, n: usize) -> Self {
        assert!(
            n >= 1 && (1..=n).contains(&i),
            "variable index out of range"
        );
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// Builds a monomial from a weakly increasing list of 1-based variable
    /// indices, each repeated with its multiplicity.
    pub fn from_index_form(indices: &[usize], n: usize) -> Result<Self> {
        let mut exps = vec![0u32; n];
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::Parse {
                    column: 0,
                    message: format!("variable index {i} out of range 1..={n}"),
                });
            }
            exps[i - 1] += 1;
        }
        Monomial::from_exponents(exps)
    }

    /// Squarefree monomial with the given support.
    pub fn squarefree(support: &[usize], n: usize) -> Result<Self> {
        let set: BTreeSet<usize> = support.iter().copied().collect();
        if set.len() != support.len() {
            return Err(Error::NotSquarefree);
        }
        Monomial::from_index_form(support, n)
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of x_i (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the variables dividing the monomial, increasing.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0).map(|i| i + 1)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn is_k_bounded(&self, k: u32) -> bool {
        self.exps.iter().all(|&e| e <= k)
    }

    /// Consecutive sorted indices differ by at least t. Implies squarefree
    /// for t >= 1.
    pub fn is_t_spread(&self, t: usize) -> bool {
        self.sorted_index_form()
            .windows(2)
            .all(|w| w[1] - w[0] >= t)
    }

    /// The weakly increasing list of 1-based indices, with multiplicities:
    /// `x1*x2^2` becomes `[1, 2, 2]`. Empty for the unit monomial.
    pub fn sorted_index_form(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                out.push(i + 1);
            }
        }
        out
    }

    fn check_same_ring(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::VariableCountMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        })
    }

    /// self / gcd(self, other): the colon generator of (self) : (other).
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same_ring(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        })
    }

    /// Multiply by the variable x_i (1-based).
    pub fn times_var(&self, i: usize) -> Monomial {
        assert!((1..=self.n()).contains(&i), "variable index out of range");
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// Divide by the variable x_i, or None when x_i does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if i == 0 || i > self.n() || self.exps[i - 1] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { exps })
    }

    /// Multiply by the squarefree monomial with the given support set.
    pub fn times_vars(&self, set: impl IntoIterator<Item = usize>) -> Monomial {
        let mut exps = self.exps.clone();
        for i in set {
            assert!((1..=self.n()).contains(&i), "variable index out of range");
            exps[i - 1] += 1;
        }
        Monomial { exps }
    }

    /// The sorted-index partial order on monomials of equal degree:
    /// self precedes u when the sorted index form of self is coordinatewise
    /// <= that of u. For k-bounded pairs this also decides membership in
    /// the bounded closure of u.
    pub fn precedes(&self, u: &Monomial) -> Result<bool> {
        self.check_same_ring(u)?;
        if self.degree() != u.degree() {
            return Err(Error::DegreeMismatch);
        }
        let mine = self.sorted_index_form();
        let theirs = u.sorted_index_form();
        Ok(mine.iter().zip(&theirs).all(|(a, b)| a <= b))
    }

    /// Parses the text syntax `x1*x2^2*x5` (factors in any order, `^1`
    /// optional, repeated variables accumulate) or `1` for the unit.
    pub fn parse(input: &str, n: usize) -> Result<Self> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                column: 1,
                message: "empty monomial".into(),
            });
        }
        if s == "1" {
            return Ok(Monomial::unit(n));
        }
        let mut exps = vec![0u32; n];
        let mut col = 1usize;
        for factor in s.split('*') {
            let f = factor.trim();
            let fcol = col + (factor.len() - factor.trim_start().len());
            if !f.starts_with('x') {
                return Err(Error::Parse {
                    column: fcol,
                    message: format!("expected a variable like x3, found {f:?}"),
                });
            }
            let body = &f[1..];
            let (idx_str, exp_str) = match body.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (body, None),
            };
            let idx: usize = idx_str.parse().map_err(|_| Error::Parse {
                column: fcol + 1,
                message: format!("invalid variable index {idx_str:?}"),
            })?;
            if idx == 0 || idx > n {
                return Err(Error::Parse {
                    column: fcol + 1,
                    message: format!("variable index {idx} out of range 1..={n}"),
                });
            }
            let exp: u32 = match exp_str {
                None => 1,
                Some(e) => e.parse().map_err(|_| Error::Parse {
                    column: fcol + 1 + idx_str.len() + 1,
                    message: format!("invalid exponent {e:?}"),
                })?,
            };
            exps[idx - 1] += exp;
            col += factor.len() + 1;
        }
        Monomial::from_exponents(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as the bare exponent vector, e.g. `[1,2,0,0,1]`.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.exps.len()))?;
        for e in &self.exps {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExpVisitor;
        impl<'de> Visitor<'de> for ExpVisitor {
            type Value = Monomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a non-empty exponent vector")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Monomial, A::Error> {
                let mut exps = Vec::new();
                while let Some(e) = seq.next_element::<u32>()? {
                    exps.push(e);
                }
                Monomial::from_exponents(exps).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(ExpVisitor)
    }
}

/// One block of a block decomposition: the arithmetic progression
/// `first, first + stride, ..., last`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub first: usize,
    pub last: usize,
}

impl Block {
    pub fn len(&self, stride: usize) -> usize {
        (self.last - self.first) / stride + 1
    }
}

/// The unique decomposition of a t-spread squarefree support into maximal
/// stride-t blocks, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Block>,
    stride: usize,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    /// The first block, written B1 throughout.
    pub fn first_block(&self) -> Block {
        self.blocks[0]
    }

    /// Elements of the i-th block (0-based), increasing.
    pub fn block_elements(&self, i: usize) -> Vec<usize> {
        let b = self.blocks[i];
        (b.first..=b.last).step_by(self.stride).collect()
    }

    /// All block elements concatenated in order; equals the sorted support
    /// of the source monomial.
    pub fn all_elements(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .flat_map(|i| self.block_elements(i))
            .collect()
    }
}

/// Decomposes the support of a squarefree, t-spread monomial into maximal
/// stride-t blocks (consecutive support elements inside a block differ by
/// exactly `stride`). The unit monomial is rejected.
pub fn block_decomposition(u: &Monomial, stride: usize) -> Result<BlockDecomposition> {
    assert!(stride >= 1, "stride must be positive");
    if u.is_unit() {
        return Err(Error::UnitMonomial);
    }
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let supp = u.support();
    if stride > 1 && !u.is_t_spread(stride) {
        return Err(Error::NotTSpread(stride));
    }
    let mut blocks = Vec::new();
    let mut first = supp[0];
    let mut last = supp[0];
    for &s in &supp[1..] {
        if s - last == stride {
            last = s;
        } else {
            blocks.push(Block { first, last });
            first = s;
            last = s;
        }
    }
    blocks.push(Block { first, last });
    Ok(BlockDecomposition { blocks, stride })
}

/// The gap set of a squarefree monomial: indices below max(u) missing from
/// the support.
pub fn gaps_squarefree(u: &Monomial) -> Result<BTreeSet<usize>> {
    if u.is_unit() {
        return Err(Error::UnitMonomial);
    }
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let max = u.max_var().expect("non-unit monomial has support");
    Ok((1..max).filter(|&i| u.exponent(i) == 0).collect())
}

/// The largest gap of a squarefree monomial, when any exists.
pub fn maximal_gap(u: &Monomial) -> Result<Option<usize>> {
    Ok(gaps_squarefree(u)?.into_iter().next_back())
}

/// Gap intervals of a t-spread monomial: for maximal t-blocks B1..Br, the
/// intervals `[max(Bj) + t, min(B(j+1)) - 1]` for j = 0..r-1, with the
/// convention B0 = {-t+1} (so the 0th interval is `[1, min(B1) - 1]`).
/// Empty intervals are omitted. Their union is the stride-t gap set.
pub fn gap_intervals_t(u: &Monomial, t: usize) -> Result<Vec<(usize, usize)>> {
    let dec = block_decomposition(u, t)?;
    let blocks = dec.blocks();
    let mut intervals = Vec::new();
    // j = 0: lower end is max(B0) + t = (-t+1) + t = 1.
    let mut lo = 1usize;
    for b in blocks {
        let hi = b.first - 1;
        if lo <= hi {
            intervals.push((lo, hi));
        }
        lo = b.last + t;
    }
    Ok(intervals)
}

/// Union of the stride-t gap intervals as a set.
pub fn gap_set_t(u: &Monomial, t: usize) -> Result<BTreeSet<usize>> {
    Ok(gap_intervals_t(u, t)?
        .into_iter()
        .flat_map(|(a, b)| a..=b)
        .collect())
}

/// Consecutive pairs of the sorted index form at distance < t.
pub fn irregular_pairs(v: &Monomial, t: usize) -> Vec<(usize, usize)> {
    let idx = v.sorted_index_form();
    idx.windows(2)
        .filter(|w| w[1] - w[0] < t)
        .map(|w| (w[0], w[1]))
        .collect()
}
