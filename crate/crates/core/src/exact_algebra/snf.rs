//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * a * v == s` with `u`, `v` unimodular and `s` in Smith form.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Result of diagonalisation with the column transform and its inverse.
#[derive(Clone, Debug)]
pub(crate) struct Diagonalization {
    pub s: IntMatrix,
    pub u: Option<IntMatrix>,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let d = diagonalize(a, true);
    SmithForm {
        u: d.u.expect("row transform tracked"),
        s: d.s,
        v: d.v,
    }
}

/// Only the diagonal, without transforms.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    diagonalize(a, false).s.diagonal()
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, target: usize, source: usize, f: &BigInt) {
        self.a.add_row_multiple(target, source, f);
        if let Some(u) = self.u.as_mut() {
            u.add_row_multiple(target, source, f);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, f: &BigInt) {
        self.a.add_col_multiple(target, source, f);
        self.v.add_col_multiple(target, source, f);
        let neg = -f;
        self.v_inv.add_row_multiple(source, target, &neg);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = self.u.as_mut() {
            u.negate_row(i);
        }
    }

    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let m = x.abs();
                let better = match &best {
                    None => true,
                    Some((_, b)) => m < *b,
                };
                if better {
                    let one = m == BigInt::from(1);
                    best = Some(((i, j), m));
                    if one {
                        return best.map(|(p, _)| p);
                    }
                }
            }
        }
        best.map(|(p, _)| p)
    }
}

pub(crate) fn diagonalize(a: &IntMatrix, track_u: bool) -> Diagonalization {
    let (rows, cols) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: track_u.then(|| IntMatrix::identity(rows)),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = w.smallest_pivot(t) else {
                return finish(w);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let pivot = w.a[(t, t)].clone();

            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = &w.a[(i, t)] / &pivot;
                w.add_row(i, t, &-q);
                dirty |= !w.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = &w.a[(t, j)] / &pivot;
                w.add_col(j, t, &-q);
                dirty |= !w.a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }

            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    finish(w)
}

fn finish(w: Work) -> Diagonalization {
    Diagonalization {
        s: w.a,
        u: w.u,
        v: w.v,
        v_inv: w.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[Vec<i64>], cols: usize, expect: &[i64]) {
        let a = IntMatrix::from_rows(cols, rows).unwrap();
        let f = smith_normal_form(&a);
        assert!(f.s.is_smith_form(), "{}", f.s);
        let prod = f.u.mul(&a).unwrap().mul(&f.v).unwrap();
        assert_eq!(prod, f.s);
        let got: Vec<BigInt> = f.s.diagonal();
        let want: Vec<BigInt> = expect.iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(got, want);
        assert_eq!(f.u.determinant().unwrap().abs(), BigInt::from(1));
        assert_eq!(f.v.determinant().unwrap().abs(), BigInt::from(1));
    }

    #[test]
    fn textbook_examples() {
        check(
            &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
            3,
            &[2, 6, 12],
        );
        check(&[vec![6, 4], vec![4, 6]], 2, &[2, 10]);
        check(&[vec![0, 0], vec![0, 0]], 2, &[0, 0]);
        check(&[vec![0, 3, 0], vec![0, 0, 0]], 3, &[3, 0]);
        check(&[vec![2, 0], vec![0, 3]], 2, &[1, 6]);
    }

    #[test]
    fn empty_shapes() {
        let a = IntMatrix::zeros(0, 3);
        let f = smith_normal_form(&a);
        assert_eq!(f.rank(), 0);
        assert_eq!(f.v.rows(), 3);
    }

    #[test]
    fn inverse_is_tracked() {
        let a = IntMatrix::from_rows(3, &[vec![4, 6, 2], vec![2, 8, 10]]).unwrap();
        let d = diagonalize(&a, false);
        assert_eq!(d.v.mul(&d.v_inv).unwrap(), IntMatrix::identity(3));
    }
}
