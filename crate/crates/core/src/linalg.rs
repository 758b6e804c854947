//! Exact rank of integer matrices over ℚ by fraction-free row reduction.
//!
//! Rows are reduced with `r ← a·r − b·p` and then divided by their content,
//! which keeps entries small for boundary matrices. Machine integers are used
//! with overflow checks; on overflow the reduction restarts on big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over ℚ of a dense matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    match rank_i64(rows.to_vec()) {
        Some(r) => r,
        None => rank_big(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// `None` on overflow.
fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        // pivot of least absolute value keeps the multipliers small
        let Some(pivot) = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[col];
        for row in rest.iter_mut() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            let g = gcd_i64(p, c);
            let (a, b) = (p / g, c / g);
            let mut content = 0i64;
            for (x, &y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = x.checked_mul(a)?.checked_sub(y.checked_mul(b)?)?;
                content = gcd_i64(content, *x);
            }
            if content > 1 {
                for x in row.iter_mut().skip(col) {
                    *x /= content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

fn rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let a = &p / &g;
            let b = &row[col] / &g;
            let mut content = BigInt::zero();
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = &*x * &a - y * &b;
                content = content.gcd(x);
            }
            if content > BigInt::from(1) {
                for x in row.iter_mut().skip(col) {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
