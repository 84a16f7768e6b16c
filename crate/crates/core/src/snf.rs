//! Smith normal form over the integers.
//!
//! Unimodular row/column reduction with the usual pivot-minimization and
//! divisibility fix-up. Only the diagonal is kept; cokernel bookkeeping needs
//! nothing else.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, positive.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
}

impl SmithNormalForm {
    /// Diagonal entries > 1, i.e. the invariant factors of the cokernel
    /// torsion.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| d.abs() > BigInt::from(1))
            .cloned()
            .collect()
    }
}

fn find_min_entry(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < a.get(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn swap_rows(a: &mut IntMatrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for j in 0..a.cols() {
        let u = a.get(x, j).clone();
        let v = a.get(y, j).clone();
        a.set(x, j, v);
        a.set(y, j, u);
    }
}

fn swap_cols(a: &mut IntMatrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..a.rows() {
        let u = a.get(i, x).clone();
        let v = a.get(i, y).clone();
        a.set(i, x, v);
        a.set(i, y, u);
    }
}

/// row_x -= q * row_y
fn row_sub(a: &mut IntMatrix, x: usize, y: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..a.cols() {
        let v = a.get(x, j) - q * a.get(y, j);
        a.set(x, j, v);
    }
}

/// col_x -= q * col_y
fn col_sub(a: &mut IntMatrix, x: usize, y: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for i in 0..a.rows() {
        let v = a.get(i, x) - q * a.get(i, y);
        a.set(i, x, v);
    }
}

/// row_x += row_y
fn row_add(a: &mut IntMatrix, x: usize, y: usize) {
    for j in 0..a.cols() {
        let v = a.get(x, j) + a.get(y, j);
        a.set(x, j, v);
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let bound = rows.min(cols);
    let mut diagonal = Vec::new();

    for k in 0..bound {
        if find_min_entry(&a, k).is_none() {
            break;
        }
        loop {
            let (pi, pj) = find_min_entry(&a, k).expect("nonzero block");
            swap_rows(&mut a, k, pi);
            swap_cols(&mut a, k, pj);

            // clear column k below the pivot
            let mut dirty = false;
            for i in k + 1..rows {
                if !a.get(i, k).is_zero() {
                    let q = a.get(i, k) / a.get(k, k);
                    row_sub(&mut a, i, k, &q);
                    if !a.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // clear row k right of the pivot
            for j in k + 1..cols {
                if !a.get(k, j).is_zero() {
                    let q = a.get(k, j) / a.get(k, k);
                    col_sub(&mut a, j, k, &q);
                    if !a.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility fix-up: the pivot must divide the whole block
            let d = a.get(k, k).clone();
            let mut offending = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(a.get(i, j) % &d).is_zero() {
                        offending = Some(i);
                        break 'scan;
                    }
                }
            }
            match offending {
                Some(i) => {
                    row_add(&mut a, k, i);
                    continue;
                }
                None => break,
            }
        }
        let d = a.get(k, k).abs();
        a.set(k, k, d.clone());
        diagonal.push(d);
    }

    let rank = diagonal.len();
    SmithNormalForm {
        diagonal,
        rank,
        rows,
        cols,
    }
}
