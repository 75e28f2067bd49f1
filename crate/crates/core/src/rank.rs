//! Exact rank and determinant by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs on `i64` with checked arithmetic. If any step
//! would overflow, the whole elimination restarts on `BigInt`, so results
//! are exact at every order. Bareiss intermediates are minors of the input,
//! which stay far inside `i64` for the orders the sweeps touch.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matrix::IntMatrix;

/// Rank and nullity of a square matrix; `rank + nullity == order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    pub nullity: usize,
    pub order: usize,
}

impl RankReport {
    fn new(rank: usize, order: usize) -> Self {
        RankReport {
            rank,
            nullity: order - rank,
            order,
        }
    }
}

trait Exact: Clone {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `(a·b − c·d) / div`, where the division is known to be exact.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, div: &Self) -> Option<Self>;
    fn negated(&self) -> Option<Self>;
}

impl Exact for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn cross(a: &i64, b: &i64, c: &i64, d: &i64, div: &i64) -> Option<i64> {
        let ab = a.checked_mul(*b)?;
        let cd = c.checked_mul(*d)?;
        let diff = ab.checked_sub(cd)?;
        debug_assert_eq!(diff % div, 0);
        diff.checked_div(*div)
    }

    fn negated(&self) -> Option<i64> {
        self.checked_neg()
    }
}

impl Exact for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cross(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, div: &BigInt) -> Option<BigInt> {
        Some((a * b - c * d) / div)
    }

    fn negated(&self) -> Option<BigInt> {
        Some(-self)
    }
}

struct Echelon<T> {
    rank: usize,
    /// Last pivot with the row-swap sign applied; the determinant when the
    /// matrix is square and of full rank.
    signed_last_pivot: Option<T>,
}

/// Fraction-free forward elimination. Pivots are the first nonzero entry of
/// each column among the rows not yet used; columns without one are
/// skipped. Returns `None` on machine overflow.
fn bareiss<T: Exact>(rows: usize, cols: usize, a: &mut [T], stop_on_singular: bool) -> Option<Echelon<T>> {
    let mut prev = T::from_i64(1);
    let mut r = 0;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            if stop_on_singular {
                return Some(Echelon {
                    rank: r,
                    signed_last_pivot: None,
                });
            }
            continue;
        };
        if p != r {
            for j in c..cols {
                a.swap(p * cols + j, r * cols + j);
            }
            negate = !negate;
        }
        let pivot = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = T::cross(&pivot, &a[i * cols + j], &lead, &a[r * cols + j], &prev)?;
                a[i * cols + j] = v;
            }
            a[i * cols + c] = T::from_i64(0);
        }
        prev = pivot;
        r += 1;
    }
    let last = if negate { prev.negated()? } else { prev };
    Some(Echelon {
        rank: r,
        signed_last_pivot: Some(last),
    })
}

/// Rank by `i64` elimination directly in `buf`, which is overwritten.
/// Returns `None` if an intermediate overflows; the caller can then retry
/// with [`integer_rank`], which falls back to `BigInt`.
pub fn rank_in_place(rows: usize, cols: usize, buf: &mut [i64]) -> Option<usize> {
    assert_eq!(buf.len(), rows * cols, "matrix data has wrong length");
    bareiss::<i64>(rows, cols, buf, false).map(|e| e.rank)
}

/// Exact rank of an arbitrary `rows × cols` integer matrix (row-major).
pub fn integer_rank(rows: usize, cols: usize, data: &[i64]) -> usize {
    assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
    if let Some(rank) = rank_in_place(rows, cols, &mut data.to_vec()) {
        return rank;
    }
    let mut big: Vec<BigInt> = data.iter().map(|&x| BigInt::from(x)).collect();
    bareiss::<BigInt>(rows, cols, &mut big, false)
        .expect("BigInt elimination cannot overflow")
        .rank
}

/// Exact determinant of a square integer matrix (row-major).
pub fn integer_determinant(order: usize, data: &[i64]) -> BigInt {
    assert_eq!(data.len(), order * order, "matrix data has wrong length");
    if order == 0 {
        return BigInt::one();
    }
    if let Some(e) = bareiss::<i64>(order, order, &mut data.to_vec(), true) {
        return match (e.rank == order, e.signed_last_pivot) {
            (true, Some(d)) => BigInt::from(d),
            _ => BigInt::zero(),
        };
    }
    let mut big: Vec<BigInt> = data.iter().map(|&x| BigInt::from(x)).collect();
    let e = bareiss::<BigInt>(order, order, &mut big, true).expect("BigInt elimination cannot overflow");
    match (e.rank == order, e.signed_last_pivot) {
        (true, Some(d)) => d,
        _ => BigInt::zero(),
    }
}

fn widen(m: &IntMatrix) -> Vec<i64> {
    m.entries().iter().map(|&x| i64::from(x)).collect()
}

/// Exact rank and nullity of `m` over the rationals.
pub fn rank(m: &IntMatrix) -> RankReport {
    let n = m.order();
    RankReport::new(integer_rank(n, n, &widen(m)), n)
}

pub fn determinant(m: &IntMatrix) -> BigInt {
    integer_determinant(m.order(), &widen(m))
}

/// Rank by Gauss–Jordan elimination over `BigRational`.
///
/// Shares no code with the fraction-free path; it exists to cross-check
/// [`rank`].
pub fn rank_oracle(m: &IntMatrix) -> usize {
    let n = m.order();
    rational_rank(n, n, &widen(m))
}

pub fn rational_rank(rows: usize, cols: usize, data: &[i64]) -> usize {
    assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from_integer(BigInt::from(data[i * cols + j])))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        // pick the row with the largest numerator magnitude; any nonzero works
        let Some(p) = (rank..rows)
            .filter(|&i| !a[i][c].is_zero())
            .max_by(|&x, &y| a[x][c].numer().magnitude().cmp(a[y][c].numer().magnitude()))
        else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
