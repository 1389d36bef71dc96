use serde::{Deserialize, Serialize};

use crate::algebra::{full_report, BiHomTrialgebra, LinearMap, Role};
use crate::centroids::centroid_linear_space;
use crate::derivations::derivation_space;
use crate::error::{Error, Result};
use crate::exactnum::span_rank;
use crate::transforms::is_morphism;

use super::catalog_get;

/// Invariants of an algebra under change of basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    /// Pass/fail for every identity, structural ones first.
    pub axiom_profile: Vec<bool>,
    pub der_dim: usize,
    pub cent_linear_dim: usize,
    /// dim span{e_i•e_j} for ⊣, ⊢, ⊥.
    pub product_ranks: [usize; 3],
    pub twist_ranks: [usize; 2],
    /// dim of the span of all products.
    pub squared_dim: usize,
}

impl Fingerprint {
    fn fields(&self) -> [(&'static str, String); 6] {
        [
            ("der_dim", self.der_dim.to_string()),
            ("cent_linear_dim", self.cent_linear_dim.to_string()),
            ("product_ranks", format!("{:?}", self.product_ranks)),
            ("twist_ranks", format!("{:?}", self.twist_ranks)),
            ("squared_dim", self.squared_dim.to_string()),
            ("axiom_profile", format!("{:?}", self.axiom_profile)),
        ]
    }
}

pub fn fingerprint(a: &BiHomTrialgebra) -> Fingerprint {
    let n = a.dim;
    let products = |role: Role| (0..n * n).map(move |u| a.product(role).basis_product(u / n, u % n));
    let product_ranks = Role::ALL.map(|r| span_rank(&products(r).collect::<Vec<_>>(), n));
    let all: Vec<_> = Role::ALL.into_iter().flat_map(products).collect();
    Fingerprint {
        axiom_profile: full_report(a).results.iter().map(|r| r.holds).collect(),
        der_dim: derivation_space(a).dim,
        cent_linear_dim: centroid_linear_space(a).len(),
        product_ranks,
        twist_ranks: [a.alpha.rank(), a.beta.rank()],
        squared_dim: span_rank(&all, n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Distinction {
    Field { field: String, a: String, b: String },
    Inconclusive,
}

/// First invariant that differs; never asserts isomorphism.
pub fn distinguish(a: &str, b: &str) -> Result<Distinction> {
    let (ea, eb) = (catalog_get(a)?, catalog_get(b)?);
    if ea.algebra.dim != eb.algebra.dim {
        return Ok(Distinction::Field {
            field: "dim".into(),
            a: ea.algebra.dim.to_string(),
            b: eb.algebra.dim.to_string(),
        });
    }
    Ok(distinguish_algebras(&ea.algebra, &eb.algebra))
}

pub fn distinguish_algebras(a: &BiHomTrialgebra, b: &BiHomTrialgebra) -> Distinction {
    let (fa, fb) = (fingerprint(a), fingerprint(b));
    fa.fields()
        .into_iter()
        .zip(fb.fields())
        .find(|(x, y)| x.1 != y.1)
        .map_or(Distinction::Inconclusive, |(x, y)| Distinction::Field { field: x.0.into(), a: x.1, b: y.1 })
}

/// `psi` is invertible and a morphism from `a` to `b`.
pub fn verify_isomorphism(a: &BiHomTrialgebra, b: &BiHomTrialgebra, psi: &LinearMap) -> Result<bool> {
    if psi.dim() != a.dim || a.dim != b.dim {
        return Err(Error::DimensionMismatch(format!(
            "map of size {} between algebras of dimension {} and {}",
            psi.dim(),
            a.dim,
            b.dim
        )));
    }
    Ok(psi.rank() == a.dim && is_morphism(psi, a, b)?.holds)
}
