//! Rank over the rationals by fraction-free row reduction.
//!
//! A row with a nonzero entry `c` in the pivot column is replaced by
//! `(p/g)·row - (c/g)·pivot_row` with `g = gcd(p, c)`, then divided by its
//! content. Rows with a zero in the pivot column are left untouched, which
//! keeps sparse boundary matrices cheap. A checked `i64` pass runs first and
//! falls back to arbitrary precision on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use super::ExactMatrix;

pub(super) fn rank_integer(m: &ExactMatrix) -> usize {
    if let Some(rows) = m.to_i64_rows() {
        if let Some(r) = eliminate(rows) {
            return r;
        }
    }
    rank_rows(m.to_bigint_rows())
}

pub(super) fn rank_rows(rows: Vec<Vec<BigInt>>) -> usize {
    eliminate(rows).expect("arbitrary precision cannot overflow")
}

/// Returns `None` if an intermediate value does not fit in `T`.
fn eliminate<T>(mut rows: Vec<Vec<T>>) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
        let Some(p) = pivot else { continue };
        rows.swap(p, rank);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col].clone();
        for row in tail.iter_mut() {
            let c = row[col].clone();
            if c.is_zero() {
                continue;
            }
            let g = pv.gcd(&c);
            let (a, b) = (pv.clone() / g.clone(), c / g);
            let mut content = T::zero();
            for j in col..cols {
                let lhs = row[j].checked_mul(&a)?;
                let rhs = prow[j].checked_mul(&b)?;
                row[j] = lhs.checked_sub(&rhs)?;
                content = content.gcd(&row[j]);
            }
            if !content.is_zero() && !content.is_one() {
                for v in row[col..].iter_mut() {
                    *v = v.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Textbook elimination with rational entries.
    fn fraction_rank(rows: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) {
                a.swap(p, rank);
                let inv = BigRational::one() / a[rank][c].clone();
                for r in 0..a.len() {
                    if r != rank && !a[r][c].is_zero() {
                        let f = a[r][c].clone() * inv.clone();
                        for k in 0..cols {
                            let t = a[rank][k].clone() * f.clone();
                            a[r][k] -= t;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn matches_fraction_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let rows = rng.gen_range(1..=9);
            let cols = rng.gen_range(1..=9);
            let dense: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| if rng.gen_bool(0.4) { rng.gen_range(-5..=5) } else { 0 }).collect())
                .collect();
            let m = ExactMatrix::from_rows(&dense).unwrap();
            assert_eq!(rank_integer(&m), fraction_rank(&dense));
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let rows = vec![vec![big, big - 1, 7], vec![big - 2, big, 5], vec![3, 1, big]];
        assert_eq!(eliminate::<i64>(rows.clone()), None);
        let m = ExactMatrix::from_rows(&rows).unwrap();
        assert_eq!(rank_integer(&m), fraction_rank(&rows));
    }
}
