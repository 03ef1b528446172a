//! Exact sign and rank computations over arbitrary-precision integers.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sign of an orientation determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Negative,
    Zero,
    Positive,
}

impl Orientation {
    pub fn as_i8(self) -> i8 {
        match self {
            Orientation::Negative => -1,
            Orientation::Zero => 0,
            Orientation::Positive => 1,
        }
    }

    fn flipped(self) -> Self {
        match self {
            Orientation::Negative => Orientation::Positive,
            Orientation::Zero => Orientation::Zero,
            Orientation::Positive => Orientation::Negative,
        }
    }
}

/// Homogeneous integer row `(q, q·x_1, ..., q·x_d)` with `q > 0` the least
/// common denominator of the point. Scaling a row by a positive factor
/// leaves determinant signs unchanged.
pub(crate) fn homogeneous_row(point: &[BigRational]) -> Vec<BigInt> {
    let q = point
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let mut row = Vec::with_capacity(point.len() + 1);
    row.push(q.clone());
    row.extend(point.iter().map(|x| x.numer() * (&q / x.denom())));
    row
}

/// Sign of the determinant of a square integer matrix, by Bareiss
/// fraction-free elimination.
pub(crate) fn determinant_sign(mut m: Vec<Vec<BigInt>>) -> Orientation {
    let k = m.len();
    debug_assert!(m.iter().all(|r| r.len() == k));
    let mut swapped = false;
    let mut prev = BigInt::one();
    for i in 0..k {
        let Some(p) = (i..k).find(|&r| !m[r][i].is_zero()) else {
            return Orientation::Zero;
        };
        if p != i {
            m.swap(p, i);
            swapped = !swapped;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = (&m[r][c] * &m[i][i] - &m[r][i] * &m[i][c]) / &prev;
                m[r][c] = v;
            }
            m[r][i] = BigInt::zero();
        }
        prev = m[i][i].clone();
    }
    let sign = match m[k - 1][k - 1].sign() {
        Sign::Minus => Orientation::Negative,
        Sign::NoSign => Orientation::Zero,
        Sign::Plus => Orientation::Positive,
    };
    if swapped {
        sign.flipped()
    } else {
        sign
    }
}

/// Rank of an integer matrix (rows need not be square), by rational
/// Gaussian elimination.
pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let (pivot, rest) = m.split_at_mut(r);
            let factor = &rest[0][c] / &pivot[rank][c];
            for (x, y) in rest[0][c..cols].iter_mut().zip(&pivot[rank][c..cols]) {
                *x -= &factor * y;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
