//! Dimensions of intertwiner spaces `{T : T A(τ) = B(τ) T}` by sparse elimination.

use num_traits::Zero;

use crate::diagrams::Diagram;
use crate::linalg::{Matrix, SparseEchelon};
use crate::scalars::{Rational, ScalarError};
use crate::specht::RepMatrices;

use super::VerifyError;

/// Once this few candidate solutions remain, new generators are first tested
/// against an explicit kernel basis and only eliminated if some candidate fails.
const KERNEL_CHECK_THRESHOLD: usize = 64;

/// Sparse nonzero pattern of a square matrix: per column, and per row.
struct Sparse {
    by_col: Vec<Vec<(usize, Rational)>>,
    by_row: Vec<Vec<(usize, Rational)>>,
}

impl Sparse {
    fn new(m: &Matrix) -> Self {
        let mut by_col = vec![Vec::new(); m.cols()];
        let mut by_row = vec![Vec::new(); m.rows()];
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let v = &m[(r, c)];
                if !v.is_zero() {
                    by_col[c].push((r, v.clone()));
                    by_row[r].push((c, v.clone()));
                }
            }
        }
        Self { by_col, by_row }
    }
}

/// Equations of `T A = B T` for `T` with `rows × cols` unknowns, `T[i][k]` at `i * cols + k`.
fn equations<'a>(a: &'a Sparse, b: &'a Sparse, rows: usize, cols: usize) -> impl Iterator<Item = Vec<(usize, Rational)>> + 'a {
    (0..rows).flat_map(move |i| {
        (0..cols).filter_map(move |j| {
            let mut eq: Vec<(usize, Rational)> = Vec::new();
            for (k, v) in &a.by_col[j] {
                eq.push((i * cols + k, v.clone()));
            }
            for (k, v) in &b.by_row[i] {
                eq.push((k * cols + j, -v.clone()));
            }
            eq.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(eq.len());
            for (c, v) in eq {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            (!merged.is_empty()).then_some(merged)
        })
    })
}

fn satisfies(t: &[Rational], a: &Sparse, b: &Sparse, rows: usize, cols: usize) -> bool {
    equations(a, b, rows, cols).all(|eq| eq.iter().fold(Rational::zero(), |acc, (c, v)| acc + v * &t[*c]).is_zero())
}

/// Dimension of `{T (rows × cols) : T A = B T}` for every pair `(A, B)`.
pub(crate) fn solution_dim(pairs: &[(Matrix, Matrix)], rows: usize, cols: usize) -> usize {
    let mut ech = SparseEchelon::new(rows * cols);
    let mut kernel: Option<Vec<Vec<Rational>>> = None;
    for (ma, mb) in pairs {
        let (a, b) = (Sparse::new(ma), Sparse::new(mb));
        if ech.nullity() == 0 {
            break;
        }
        if ech.nullity() <= KERNEL_CHECK_THRESHOLD {
            let basis = kernel.get_or_insert_with(|| ech.kernel());
            if basis.iter().all(|t| satisfies(t, &a, &b, rows, cols)) {
                continue;
            }
        }
        for eq in equations(&a, &b, rows, cols) {
            ech.insert(eq);
        }
        kernel = None;
    }
    ech.nullity()
}

fn evaluated(rep: &RepMatrices, delta: &Rational) -> Result<Vec<(Diagram, Matrix)>, VerifyError> {
    if delta.is_zero() {
        return Err(VerifyError::Scalar(ScalarError::ZeroDelta));
    }
    Ok(rep.evaluate(delta)?)
}

/// Dimension of the commutant of the action matrices at `δ = delta`.
pub fn commutant_dim(rep: &RepMatrices, delta: &Rational) -> Result<usize, VerifyError> {
    let ms = evaluated(rep, delta)?;
    let pairs: Vec<(Matrix, Matrix)> = ms.into_iter().map(|(_, m)| (m.clone(), m)).collect();
    Ok(solution_dim(&pairs, rep.dim, rep.dim))
}

/// Dimension of the space of module maps from `rep1` to `rep2` at `δ = delta`.
pub fn intertwiner_dim(rep1: &RepMatrices, rep2: &RepMatrices, delta: &Rational) -> Result<usize, VerifyError> {
    let m1 = evaluated(rep1, delta)?;
    let m2 = evaluated(rep2, delta)?;
    if m1.len() != m2.len() || m1.iter().zip(&m2).any(|(x, y)| x.0 != y.0) {
        return Err(VerifyError::IncompatibleRepresentations);
    }
    let pairs: Vec<(Matrix, Matrix)> = m1.into_iter().zip(m2).map(|((_, a), (_, b))| (a, b)).collect();
    Ok(solution_dim(&pairs, rep2.dim, rep1.dim))
}

/// Commutant of a plain list of matrices.
pub fn commutant_dim_of(matrices: &[Matrix], dim: usize) -> usize {
    let pairs: Vec<(Matrix, Matrix)> = matrices.iter().map(|m| (m.clone(), m.clone())).collect();
    solution_dim(&pairs, dim, dim)
}
