//! Exact Gaussian elimination over a field.

use crate::field::Field;

/// A matrix in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<F: Field> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True if `v` lies in the row space.
    pub fn spans(&self, v: &[F]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub_ref(&c.mul_ref(r));
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// Row-reduces `rows` (each of length `ncols`).
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Rref<F> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv();
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub_ref(&c.mul_ref(y));
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Rref {
        rows,
        pivots,
        ncols,
    }
}

/// A basis of `{x : A x = 0}` where `A` has the given rows.
pub fn kernel_basis<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let red = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in red.rows.iter().zip(&red.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        let red = rref(rows.clone(), 3);
        assert_eq!(red.rank(), 2);
        let ker = kernel_basis(rows.clone(), 3);
        assert_eq!(ker.len(), 1);
        for row in &rows {
            let dot = row
                .iter()
                .zip(&ker[0])
                .fold(q(0), |acc, (a, b)| acc + a.clone() * b.clone());
            assert_eq!(dot, q(0));
        }
        assert!(red.spans(&[q(1), q(3), q(4)]));
        assert!(!red.spans(&[q(0), q(0), q(1)]));
    }
}
