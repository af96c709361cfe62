//! Phase-one simplex over `Q` with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{integer, Rational};

/// Whether `A x = b, x ≥ 0` has a solution.
pub fn is_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    if m == 0 {
        return true;
    }
    let k = a[0].len();
    let width = k + m + 1;

    // Rows with b >= 0, one artificial per row; last column is the rhs.
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        r.extend((0..m).map(|j| if j == i { Rational::one() } else { Rational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        t.push(r);
    }
    // Reduced costs of `min Σ artificials`.
    let mut cost = vec![Rational::zero(); width];
    for r in &t {
        for j in 0..k {
            cost[j] -= &r[j];
        }
        cost[width - 1] -= &r[width - 1];
    }
    t.push(cost);
    let mut basis: Vec<usize> = (k..k + m).collect();

    loop {
        let obj = &t[m];
        let Some(enter) = (0..k + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            // Phase one is bounded below by zero.
            unreachable!("unbounded phase-one problem");
        };
        pivot(&mut t, row, enter);
        basis[row] = enter;
    }
    t[m][width - 1].is_zero()
}

fn pivot(t: &mut [Vec<Rational>], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        *x /= &p;
    }
    let prow = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, y) in r.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// Whether `target` is a convex combination of `points`.
pub fn in_convex_hull(points: &[Vec<i64>], target: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = target.len();
    let mut a: Vec<Vec<Rational>> = (0..d)
        .map(|c| points.iter().map(|p| integer(p[c])).collect())
        .collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b: Vec<Rational> = target.iter().map(|&x| integer(x)).collect();
    b.push(Rational::one());
    is_feasible(&a, &b)
}
