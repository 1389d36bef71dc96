//! Solution spaces of linear conditions on maps and vectors.

use rayon::prelude::*;

use crate::algebra::LinearMap;
use crate::exactnum::{span_rank, Matrix, Scalar};

fn kernel_of_columns(columns: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let unknowns = columns.len();
    let rows = columns.first().map_or(0, Vec::len);
    let mut m = Matrix::zeros(rows, unknowns);
    for (c, col) in columns.into_iter().enumerate() {
        for (r, x) in col.into_iter().enumerate() {
            m[(r, c)] = x;
        }
    }
    if rows == 0 {
        return Matrix::identity(unknowns).to_rows();
    }
    m.nullspace()
}

/// Canonical kernel basis of `{ψ : residual(ψ) = 0}`, where `residual` is
/// linear in ψ. Unknowns are the entries `ψ_qp` in row-major order.
pub fn solve_maps<F>(n: usize, residual: F) -> Vec<LinearMap>
where
    F: Fn(&LinearMap) -> Vec<Scalar> + Sync,
{
    let columns: Vec<_> = (0..n * n)
        .into_par_iter()
        .map(|u| residual(&LinearMap::elementary(n, u / n, u % n)))
        .collect();
    kernel_of_columns(columns).into_iter().map(|v| LinearMap::from_flat(n, v)).collect()
}

/// Same as [`solve_maps`] but restricted to the span of `basis`.
pub fn solve_maps_in_span<F>(basis: &[LinearMap], residual: F) -> Vec<LinearMap>
where
    F: Fn(&LinearMap) -> Vec<Scalar> + Sync,
{
    let Some(first) = basis.first() else { return Vec::new() };
    let n = first.dim();
    let columns: Vec<_> = basis.par_iter().map(&residual).collect();
    let combos = kernel_of_columns(columns);
    let maps: Vec<_> = combos
        .into_iter()
        .map(|c| {
            basis
                .iter()
                .zip(&c)
                .fold(LinearMap::zero(n), |acc, (b, t)| if t.is_zero() { acc } else { acc.add(&b.scale(t)) })
        })
        .collect();
    canonical_maps(&maps)
}

/// Canonical kernel basis of `{x ∈ 𝔽^n : residual(x) = 0}`.
pub fn solve_vectors<F>(n: usize, residual: F) -> Vec<Vec<Scalar>>
where
    F: Fn(&[Scalar]) -> Vec<Scalar>,
{
    let columns = (0..n).map(|i| residual(&crate::algebra::unit(n, i))).collect();
    kernel_of_columns(columns)
}

/// Nonzero rows of the RREF of the stacked vectors.
pub fn canonical_vectors(vectors: &[Vec<Scalar>], len: usize) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_entries(vectors.len(), len, vectors.iter().flatten().cloned().collect())
        .expect("equal lengths");
    let r = m.rref();
    (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect()
}

pub fn canonical_maps(maps: &[LinearMap]) -> Vec<LinearMap> {
    let Some(first) = maps.first() else { return Vec::new() };
    let n = first.dim();
    let flat: Vec<_> = maps.iter().map(|m| m.flat().to_vec()).collect();
    canonical_vectors(&flat, n * n).into_iter().map(|v| LinearMap::from_flat(n, v)).collect()
}

pub fn maps_rank(maps: &[LinearMap]) -> usize {
    let Some(first) = maps.first() else { return 0 };
    let n = first.dim();
    let flat: Vec<_> = maps.iter().map(|m| m.flat().to_vec()).collect();
    span_rank(&flat, n * n)
}

/// `x ∈ span(basis)`.
pub fn map_in_span(x: &LinearMap, basis: &[LinearMap]) -> bool {
    if x.is_zero() {
        return true;
    }
    let mut all = basis.to_vec();
    all.push(x.clone());
    maps_rank(&all) == maps_rank(basis)
}

pub fn same_span(a: &[LinearMap], b: &[LinearMap]) -> bool {
    let ra = maps_rank(a);
    let rb = maps_rank(b);
    ra == rb && {
        let mut all = a.to_vec();
        all.extend_from_slice(b);
        maps_rank(&all) == ra
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutant_of_a_nilpotent() {
        // Maps commuting with E_12 in dimension 2 are spanned by I and E_12.
        let e12 = LinearMap::elementary(2, 0, 1);
        let sols = solve_maps(2, |m| {
            m.compose(&e12).sub(&e12.compose(m)).flat().to_vec()
        });
        assert_eq!(sols.len(), 2);
        assert!(same_span(&sols, &[LinearMap::identity(2), e12.clone()]));
        assert!(map_in_span(&e12, &sols));
        assert!(!map_in_span(&LinearMap::elementary(2, 1, 0), &sols));
    }

    #[test]
    fn restricted_solve() {
        let basis = [LinearMap::identity(2), LinearMap::elementary(2, 1, 0)];
        // Trace zero inside span{I, E_21} leaves E_21 only.
        let sols = solve_maps_in_span(&basis, |m| vec![m.entry(0, 0) + m.entry(1, 1)]);
        assert_eq!(sols, vec![LinearMap::elementary(2, 1, 0)]);
    }
}
