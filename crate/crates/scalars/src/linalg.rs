//! Exact linear algebra over the rationals: row reduction, rank, span
//! membership, solving, and nullspaces. Small dense matrices only.

use crate::Rational;
use num_traits::{One, Zero};

/// Reduced row echelon form, in place; returns the pivot columns.
pub fn rref(mat: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = Rational::one() / mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let factor = mat[i][c].clone();
                for j in 0..cols {
                    let sub = &factor * &mat[r][j];
                    mat[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of the span of the given row vectors.
pub fn span_dimension(vectors: &[Vec<Rational>]) -> usize {
    let mut m = vectors.to_vec();
    rref(&mut m).len()
}

/// Whether `target` lies in the rational span of `vectors`.
pub fn span_contains(vectors: &[Vec<Rational>], target: &[Rational]) -> bool {
    if target.iter().all(|x| x.is_zero()) {
        return true;
    }
    let base = span_dimension(vectors);
    let mut augmented = vectors.to_vec();
    augmented.push(target.to_vec());
    span_dimension(&augmented) == base
}

/// Basis of the right nullspace of `mat` (vectors v with `mat v = 0`),
/// one vector per free column, with the free coordinate set to 1.
pub fn nullspace(mat: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if mat.is_empty() {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut m = mat.to_vec();
    let pivots = rref(&mut m);
    let pivot_row_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = Some(row);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_row_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (col, pr) in pivot_row_of_col.iter().enumerate() {
            if let Some(row) = pr {
                v[col] = -m[*row][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Solves `mat x = rhs` exactly. Returns `None` when inconsistent; when the
/// system is underdetermined, free variables are set to zero and the indices
/// of the free columns are reported alongside the particular solution.
pub fn solve(mat: &[Vec<Rational>], rhs: &[Rational]) -> Option<(Vec<Rational>, Vec<usize>)> {
    let rows = mat.len();
    assert_eq!(rows, rhs.len(), "matrix and right-hand side must agree");
    if rows == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    let cols = mat[0].len();
    let mut aug: Vec<Vec<Rational>> = mat
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    Some((x, free))
}
