//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{abs_cmp, ExactMatrix};

/// Nonzero invariant factors `d_1 | d_2 | ...` of the Smith normal form,
/// all positive.
///
/// Each stage moves the entry of least absolute value to the pivot position
/// and clears its row and column by floor-division steps; a remainder
/// promotes a smaller pivot. When the remaining block has an entry the pivot
/// does not divide, that row is added to the pivot row and the stage repeats.
pub fn smith_normal_form(m: &ExactMatrix) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.to_bigint_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            if !clear_column(&mut a, t) || !clear_row(&mut a, t) {
                continue;
            }
            // Row and column are clear; enforce divisibility into the block.
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
    }
    factors
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| abs_cmp(v, &a[bi][bj]).is_lt()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Reduces column `t` below the pivot. Returns false if a nonzero remainder
/// was promoted to the pivot, meaning another pass is needed.
fn clear_column(a: &mut [Vec<BigInt>], t: usize) -> bool {
    let cols = a[t].len();
    for i in t + 1..a.len() {
        if a[i][t].is_zero() {
            continue;
        }
        let q = a[i][t].div_floor(&a[t][t]);
        for j in t..cols {
            let v = &q * &a[t][j];
            a[i][j] -= v;
        }
    }
    match (t + 1..a.len())
        .filter(|&i| !a[i][t].is_zero())
        .min_by(|&x, &y| abs_cmp(&a[x][t], &a[y][t]))
    {
        Some(i) => {
            a.swap(t, i);
            false
        }
        None => true,
    }
}

fn clear_row(a: &mut [Vec<BigInt>], t: usize) -> bool {
    let cols = a[t].len();
    for j in t + 1..cols {
        if a[t][j].is_zero() {
            continue;
        }
        let q = a[t][j].div_floor(&a[t][t]);
        for row in a.iter_mut().skip(t) {
            let v = &q * &row[t];
            row[j] -= v;
        }
    }
    match (t + 1..cols)
        .filter(|&j| !a[t][j].is_zero())
        .min_by(|&x, &y| abs_cmp(&a[t][x], &a[t][y]))
    {
        Some(j) => {
            for row in a.iter_mut() {
                row.swap(t, j);
            }
            false
        }
        None => true,
    }
}
