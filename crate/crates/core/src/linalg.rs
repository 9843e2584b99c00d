//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//! Entries stay integral throughout; no floating point anywhere.

use crate::error::{Error, Result};

/// Rank over the rationals of a dense integer matrix given as rows.
/// Desk-scale inputs keep all intermediate minors far inside i128.
pub(crate) fn integer_rank(mut m: Vec<Vec<i128>>) -> Result<usize> {
    let rows = m.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let a = pivot.checked_mul(m[r][c]).ok_or_else(overflow)?;
                let b = m[r][col].checked_mul(m[rank][c]).ok_or_else(overflow)?;
                m[r][c] = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
            m[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

fn overflow() -> Error {
    Error::ResourceLimit("integer overflow in exact elimination".into())
}
