//! Exact rational linear algebra used by the polytope, witness and stabilizer code.

mod lp;

pub use lp::{in_convex_hull, is_feasible};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Rational = BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn integer(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Row rank over `Q`, by Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let (head, tail) = m.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &prow[c];
            for k in c..cols {
                let d = &f * &prow[k];
                row[k] -= d;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| integer(x)).collect())
        .collect();
    rank(&rows)
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    rank_int(&diffs)
}

/// `"p/q"` with `q > 0`; integers keep the `/1`.
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}
