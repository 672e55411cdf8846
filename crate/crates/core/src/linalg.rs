//! Dense matrices over the rational-function field and exact Gaussian
//! elimination.

use std::fmt;

use serde_json::Value;

use crate::exactnum::{FieldCoeff, RationalFunction};

/// A dense matrix over `Q(ζ_d)(q)`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RfMatrix {
    rows: usize,
    cols: usize,
    order: u32,
    data: Vec<RationalFunction>,
}

impl RfMatrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        RfMatrix {
            rows,
            cols,
            order,
            data: vec![RationalFunction::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, size: usize) -> Self {
        let mut m = Self::zeros(order, size, size);
        for i in 0..size {
            m.data[i * size + i] = RationalFunction::one(order);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RationalFunction::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RfMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RfMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        RfMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies row `r` by `factors[r]`, i.e. `diag(factors) · self`.
    pub fn scale_rows(&self, factors: &[RationalFunction]) -> Self {
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let idx = r * self.cols + c;
                if !out.data[idx].is_zero() {
                    out.data[idx] = &out.data[idx] * &factors[r];
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shapes do not chain");
        let mut out = Self::zeros(self.order, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> RationalFunction {
        (0..self.rows.min(self.cols)).fold(RationalFunction::zero(self.order), |acc, i| &acc + self.get(i, i))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|r| {
                    Value::Array(
                        (0..self.cols)
                            .map(|c| Value::String(self.get(r, c).to_text()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Debug for RfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect::<Vec<_>>()))
            .finish()
    }
}

/// Rank of a list of row vectors over an exact field.
pub(crate) fn rank<T: FieldCoeff>(mut rows: Vec<Vec<T>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero_c()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv_c();
        let pivot_row: Vec<T> = rows[rank].iter().map(|x| x.mul_c(&inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            if f.is_zero_c() {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero_c() {
                    *x = x.sub_c(&f.mul_c(p));
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Inverse of a square matrix given as rows, or `None` if singular.
pub(crate) fn invert<T: FieldCoeff>(rows: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = rows.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let zero = rows[0][0].zero_like();
    let one = rows[0][0].one_like();
    let mut aug: Vec<Vec<T>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            v
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero_c())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv_c();
        for x in aug[col].iter_mut() {
            if !x.is_zero_c() {
                *x = x.mul_c(&inv);
            }
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero_c() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero_c() {
                    *x = x.sub_c(&f.mul_c(p));
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rational};

    #[test]
    fn rank_and_inverse_over_rationals() {
        let r = |v: &[i64]| v.iter().map(|&x| rat(x, 1)).collect::<Vec<Rational>>();
        assert_eq!(rank(vec![r(&[1, 2]), r(&[2, 4])]), 1);
        assert_eq!(rank(vec![r(&[1, 2]), r(&[0, 1]), r(&[1, 1])]), 2);
        let m = vec![r(&[2, 1]), r(&[1, 1])];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![r(&[1, -1]), r(&[-1, 2])]);
        assert!(invert(&[r(&[1, 2]), r(&[2, 4])]).is_none());
    }

    #[test]
    fn matrix_product_over_rational_functions() {
        let q = RationalFunction::q(1);
        let mut m = RfMatrix::zeros(1, 2, 2);
        m.set(0, 1, RationalFunction::one(1));
        m.set(1, 0, q.clone());
        assert_eq!(m.mul(&m), RfMatrix::identity(1, 2).scale(&q));
    }
}
