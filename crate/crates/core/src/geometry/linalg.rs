//! Small dense exact linear algebra used by the polyhedral kernel.

use num_traits::{One, Zero};

use crate::scalar::{Int, Q};

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref<Z: Int>(m: &mut [Vec<Q<Z>>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Q::<Z>::one() / m[row][col].clone();
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let delta = f.clone() * m[row][c].clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank<Z: Int>(rows: &[Vec<Q<Z>>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{ v : rows · v = 0 }`.
pub(crate) fn nullspace<Z: Int>(rows: &[Vec<Q<Z>>], ncols: usize) -> Vec<Vec<Q<Z>>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::<Z>::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of the square system `a · x = b`, if `a` is invertible.
pub(crate) fn solve<Z: Int>(a: &[Vec<Q<Z>>], b: &[Q<Z>]) -> Option<Vec<Q<Z>>> {
    let n = b.len();
    let mut m: Vec<Vec<Q<Z>>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(m.iter().map(|r| r[n].clone()).collect())
}

pub(crate) fn dot<Z: Int>(n: &[Z], x: &[Q<Z>]) -> Q<Z> {
    n.iter()
        .zip(x)
        .fold(Q::zero(), |acc, (a, b)| acc + b.clone() * a.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn q(v: i64) -> Q<i64> {
        Ratio::from_integer(v)
    }

    #[test]
    fn nullspace_of_line() {
        let ns = nullspace(&[vec![q(1), q(-1)]], 2);
        assert_eq!(ns, vec![vec![q(1), q(1)]]);
    }

    #[test]
    fn solve_and_rank() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        assert_eq!(solve(&a, &[q(3), q(4)]), Some(vec![q(1), q(1)]));
        assert_eq!(rank(&a, 2), 2);
        let singular = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(&singular, &[q(1), q(2)]), None);
        assert_eq!(rank(&singular, 2), 1);
    }
}
