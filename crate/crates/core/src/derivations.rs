//! αβ-derivations: membership test and the full solution space.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{BiHomTrialgebra, CheckReport, LinearMap, Role};
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::spaces::{same_span, solve_maps};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub algebra: String,
    pub basis: Vec<LinearMap>,
    pub dim: usize,
}

pub(crate) fn check_dims(a: &BiHomTrialgebra, m: &LinearMap, what: &str) -> Result<()> {
    if m.dim() != a.dim {
        return Err(Error::DimensionMismatch(format!(
            "{what} is {}-dimensional, algebra `{}` is {}-dimensional",
            m.dim(),
            a.name,
            a.dim
        )));
    }
    Ok(())
}

/// Basis products and twisted basis vectors, reused across residual evaluations.
pub(crate) struct Tables {
    pub n: usize,
    pub products: Vec<Vec<Vec<Scalar>>>,
    pub twisted: Vec<Vec<Scalar>>,
}

impl Tables {
    pub fn new(a: &BiHomTrialgebra) -> Self {
        let n = a.dim;
        let ab = a.twist();
        Tables {
            n,
            products: Role::ALL
                .iter()
                .map(|&r| (0..n * n).map(|u| a.product(r).basis_product(u / n, u % n)).collect())
                .collect(),
            twisted: (0..n).map(|i| ab.image(i)).collect(),
        }
    }

    pub fn product(&self, slot: usize, i: usize, j: usize) -> &[Scalar] {
        &self.products[slot][i * self.n + j]
    }
}

fn leibniz_defect(a: &BiHomTrialgebra, t: &Tables, d: &LinearMap, slot: usize, i: usize, j: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let role = Role::ALL[slot];
    let lhs = d.apply(t.product(slot, i, j));
    let mut rhs = a.mul(role, &d.image(i), &t.twisted[j]);
    for (r, x) in rhs.iter_mut().zip(a.mul(role, &t.twisted[i], &d.image(j))) {
        *r += x;
    }
    (lhs, rhs)
}

pub(crate) fn derivation_residual(a: &BiHomTrialgebra, t: &Tables, d: &LinearMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    out.extend(d.compose(&a.alpha).sub(&a.alpha.compose(d)).flat().iter().cloned());
    out.extend(d.compose(&a.beta).sub(&a.beta.compose(d)).flat().iter().cloned());
    for slot in 0..3 {
        for i in 0..t.n {
            for j in 0..t.n {
                let (l, r) = leibniz_defect(a, t, d, slot, i, j);
                out.extend(l.iter().zip(&r).map(|(x, y)| x - y));
            }
        }
    }
    out
}

/// Commutation with α, β and the αβ-twisted Leibniz rule for each product.
pub fn is_derivation(a: &BiHomTrialgebra, d: &LinearMap) -> Result<CheckReport> {
    check_dims(a, d, "map")?;
    let t = Tables::new(a);
    let mut report = CheckReport::new();
    report.compare_maps("dα = αd", &d.compose(&a.alpha), &a.alpha.compose(d));
    report.compare_maps("dβ = βd", &d.compose(&a.beta), &a.beta.compose(d));
    for (slot, role) in Role::ALL.into_iter().enumerate() {
        let cond = format!("d(x{role}y) = d(x){role}αβ(y) + αβ(x){role}d(y)");
        for i in 0..a.dim {
            for j in 0..a.dim {
                let (l, r) = leibniz_defect(a, &t, d, slot, i, j);
                report.compare(&cond, &[i, j], l, r);
            }
        }
    }
    Ok(report)
}

/// Solution space of the derivation conditions, as a canonical kernel
/// basis in the row-major flattening of `d`.
pub fn derivation_space(a: &BiHomTrialgebra) -> DerivationSpace {
    let t = Tables::new(a);
    let basis = solve_maps(a.dim, |d| derivation_residual(a, &t, d));
    DerivationSpace { algebra: a.name.clone(), dim: basis.len(), basis }
}

/// The same conditions written entrywise over d_{qp}, γ, δ, ξ, a, b.
/// Independent of the evaluator and of [`derivation_space`]; used as a
/// cross-check oracle.
pub fn derivation_index_form(a: &BiHomTrialgebra, d: &LinearMap) -> bool {
    let n = a.dim;
    let al = |r: usize, c: usize| a.alpha.entry(r, c).clone();
    let be = |r: usize, c: usize| a.beta.entry(r, c).clone();
    let dd = |r: usize, c: usize| d.entry(r, c).clone();
    // (αβ)_{qp} = Σ_s a_{qs} b_{sp}
    let ab = |q: usize, p: usize| {
        let mut s = Scalar::zero();
        for k in 0..n {
            s += al(q, k) * be(k, p);
        }
        s
    };
    for q in 0..n {
        for p in 0..n {
            let (mut l1, mut r1, mut l2, mut r2) = (Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero());
            for k in 0..n {
                l1 += dd(q, k) * al(k, p);
                r1 += al(q, k) * dd(k, p);
                l2 += dd(q, k) * be(k, p);
                r2 += be(q, k) * dd(k, p);
            }
            if l1 != r1 || l2 != r2 {
                return false;
            }
        }
    }
    for t in [&a.left, &a.right, &a.middle] {
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    // Σ_k c_{ij}^k d_{rk} = Σ_{p,q} d_{pi} (αβ)_{qj} c_{pq}^r + (αβ)_{pi} d_{qj} c_{pq}^r
                    let mut lhs = Scalar::zero();
                    for k in 0..n {
                        lhs += t.get(i, j, k) * dd(r, k);
                    }
                    let mut rhs = Scalar::zero();
                    for p in 0..n {
                        for q in 0..n {
                            let c = t.get(p, q, r);
                            if c.is_zero() {
                                continue;
                            }
                            let w = &(dd(p, i) * ab(q, j)) + &(ab(p, i) * dd(q, j));
                            rhs += &w * c;
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableStatus {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "mismatch")]
    Mismatch,
    #[serde(rename = "unlisted")]
    Unlisted,
    #[serde(rename = "unresolved")]
    Unresolved,
}

impl TableStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TableStatus::Match => "match",
            TableStatus::Mismatch => "mismatch",
            TableStatus::Unlisted => "unlisted",
            TableStatus::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationRow {
    pub algebra: String,
    pub computed_dim: usize,
    pub claimed_dim: Option<usize>,
    pub status: TableStatus,
    pub basis: Vec<Vec<Vec<String>>>,
}

pub fn matrix_strings(m: &LinearMap) -> Vec<Vec<String>> {
    m.matrix().to_rows().into_iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

/// Maps with a single free entry 1 at each listed 1-based position `(q, p)`.
pub fn claimed_basis(n: usize, positions: &[(usize, usize)]) -> Vec<LinearMap> {
    positions.iter().map(|&(q, p)| LinearMap::elementary(n, q - 1, p - 1)).collect()
}

/// A row matches when the dimension agrees and the claimed basis spans the
/// computed space.
pub fn derivation_row(entry: &CatalogEntry) -> DerivationRow {
    let space = derivation_space(&entry.algebra);
    let status = match (&entry.claimed_der_dim, &entry.claimed_der_basis) {
        (None, _) => TableStatus::Unlisted,
        (Some(d), claimed) => {
            let spans = claimed
                .as_ref()
                .is_none_or(|c| same_span(&claimed_basis(entry.algebra.dim, c), &space.basis));
            if *d == space.dim && spans {
                TableStatus::Match
            } else {
                TableStatus::Mismatch
            }
        }
    };
    DerivationRow {
        algebra: entry.id.clone(),
        computed_dim: space.dim,
        claimed_dim: entry.claimed_der_dim,
        status,
        basis: space.basis.iter().map(matrix_strings).collect(),
    }
}

pub fn derivation_table_report(entries: &[&CatalogEntry]) -> Vec<DerivationRow> {
    entries.par_iter().map(|e| derivation_row(e)).collect()
}

/// Rank test for membership in the computed span.
pub fn derivation_contains(space: &DerivationSpace, d: &LinearMap) -> bool {
    crate::spaces::map_in_span(d, &space.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_get;

    #[test]
    fn zero_map_is_always_a_derivation() {
        let a = catalog_get("BTas_3^5").unwrap().algebra;
        assert!(is_derivation(&a, &LinearMap::zero(3)).unwrap().holds);
    }

    #[test]
    fn zero_algebra_has_full_space() {
        let a = BiHomTrialgebra::zero("z", 3);
        assert_eq!(derivation_space(&a).dim, 9);
    }

    #[test]
    fn btas21_space() {
        let a = catalog_get("BTas_2^1").unwrap().algebra;
        let s = derivation_space(&a);
        assert_eq!(s.dim, 1);
        assert_eq!(s.basis, vec![LinearMap::elementary(2, 0, 1)]);
        assert!(is_derivation(&a, &s.basis[0]).unwrap().holds);
        assert!(derivation_index_form(&a, &s.basis[0]));
    }

    #[test]
    fn btas31_kernel_is_two_dimensional() {
        let a = catalog_get("BTas_3^1").unwrap().algebra;
        let s = derivation_space(&a);
        assert_eq!(s.dim, 2);
        // E_33 is a derivation as claimed.
        assert!(is_derivation(&a, &LinearMap::elementary(3, 2, 2)).unwrap().holds);
        // The claimed E_21 is not; its transpose E_12 is.
        assert!(!is_derivation(&a, &LinearMap::elementary(3, 1, 0)).unwrap().holds);
        assert!(is_derivation(&a, &LinearMap::elementary(3, 0, 1)).unwrap().holds);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = catalog_get("BTas_2^1").unwrap().algebra;
        assert!(is_derivation(&a, &LinearMap::zero(3)).is_err());
    }
}
