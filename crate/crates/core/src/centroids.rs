//! Centralizers, central αβ-derivations and (α,β)-centroids.
//!
//! The centroid conditions are linear except for the middle term
//! ψ(x)•ψ(y). [`centroid_space`] first solves the linear part, then writes
//! ψ = Σ t_a B_a over that basis and collects the quadratic obstruction
//! ψ(x)•ψ(y) − ψ(x)•αβ(y) in the parameters t.

use std::collections::BTreeSet;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{is_zero_vec, unit, BiHomTrialgebra, CheckReport, LinearMap, Role};
use crate::catalog::CatalogEntry;
use crate::derivations::{check_dims, claimed_basis, derivation_residual, derivation_space, is_derivation, matrix_strings, TableStatus, Tables};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::quadric::{max_linear_subspace_dim, vanishing_set, Component, QuadPoly};
use crate::spaces::{canonical_vectors, map_in_span, same_span, solve_maps, solve_vectors};

/// Largest parameter count whose obstruction is solved exactly.
pub const MAX_EXACT_PARAMETERS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerSpace {
    pub generators: Vec<Vec<Scalar>>,
    pub basis: Vec<Vec<Scalar>>,
}

/// `{x : αβ(x)•h = h•αβ(x) = 0 for all h ∈ H and all products}`, over the
/// whole algebra or, with `restrict_to_h`, over `span H`.
pub fn centralizer(a: &BiHomTrialgebra, h: &[Vec<Scalar>], restrict_to_h: bool) -> Result<CentralizerSpace> {
    if let Some(bad) = h.iter().find(|v| v.len() != a.dim) {
        return Err(Error::DimensionMismatch(format!(
            "generator of length {} in a {}-dimensional algebra",
            bad.len(),
            a.dim
        )));
    }
    let ab = a.twist();
    let residual = |x: &[Scalar]| {
        let t = ab.apply(x);
        let mut out = Vec::new();
        for g in h {
            for role in Role::ALL {
                out.extend(a.mul(role, &t, g));
                out.extend(a.mul(role, g, &t));
            }
        }
        out
    };
    let basis = if restrict_to_h {
        let combine = |c: &[Scalar]| {
            let mut x = vec![Scalar::zero(); a.dim];
            for (g, t) in h.iter().zip(c) {
                for (xi, gi) in x.iter_mut().zip(g) {
                    *xi += t * gi;
                }
            }
            x
        };
        let coeffs = solve_vectors(h.len(), |c| residual(&combine(c)));
        let vectors: Vec<_> = coeffs.iter().map(|c| combine(c)).collect();
        canonical_vectors(&vectors, a.dim)
    } else {
        solve_vectors(a.dim, residual)
    };
    Ok(CentralizerSpace { generators: h.to_vec(), basis })
}

fn centroid_chains(a: &BiHomTrialgebra, psi: &LinearMap, literal: bool) -> Result<CheckReport> {
    check_dims(a, psi, "map")?;
    let ab = a.twist();
    let mut report = CheckReport::new();
    report.compare_maps("ψα = αψ", &psi.compose(&a.alpha), &a.alpha.compose(psi));
    report.compare_maps("ψβ = βψ", &psi.compose(&a.beta), &a.beta.compose(psi));
    for role in Role::ALL {
        let s = role.symbol();
        let literal_right = literal && role == Role::Right;
        let first = if literal_right {
            format!("ψ(x){s}αψ(y) = ψ(x){s}ψ(y)")
        } else {
            format!("ψ(x){s}αβ(y) = ψ(x){s}ψ(y)")
        };
        let second = format!("ψ(x){s}ψ(y) = αβ(x){s}ψ(y)");
        for i in 0..a.dim {
            for j in 0..a.dim {
                let (pi, pj) = (psi.image(i), psi.image(j));
                let outer_right = if literal_right { a.alpha.apply(&pj) } else { ab.image(j) };
                let left = a.mul(role, &pi, &outer_right);
                let mid = a.mul(role, &pi, &pj);
                let right = a.mul(role, &ab.image(i), &pj);
                report.compare(&first, &[i, j], left, mid.clone());
                report.compare(&second, &[i, j], mid, right);
            }
        }
    }
    Ok(report)
}

/// Both equalities of every chain, with αβ(y) in the outer term of each.
pub fn is_centroid_element(a: &BiHomTrialgebra, psi: &LinearMap) -> Result<CheckReport> {
    centroid_chains(a, psi, false)
}

/// The chains as printed, where the ⊢ chain starts from ψ(x)⊢α(ψ(y)).
pub fn is_centroid_element_literal(a: &BiHomTrialgebra, psi: &LinearMap) -> Result<CheckReport> {
    centroid_chains(a, psi, true)
}

fn stage1_residual(a: &BiHomTrialgebra, t: &Tables, psi: &LinearMap) -> Vec<Scalar> {
    let mut out = Vec::new();
    out.extend(psi.compose(&a.alpha).sub(&a.alpha.compose(psi)).flat().iter().cloned());
    out.extend(psi.compose(&a.beta).sub(&a.beta.compose(psi)).flat().iter().cloned());
    for role in Role::ALL {
        for i in 0..t.n {
            let pi = psi.image(i);
            for j in 0..t.n {
                let l = a.mul(role, &pi, &t.twisted[j]);
                let r = a.mul(role, &t.twisted[i], &psi.image(j));
                out.extend(l.iter().zip(&r).map(|(x, y)| x - y));
            }
        }
    }
    out
}

/// Maps satisfying the commutations and ψ(x)•αβ(y) = αβ(x)•ψ(y).
pub fn centroid_linear_space(a: &BiHomTrialgebra) -> Vec<LinearMap> {
    let t = Tables::new(a);
    solve_maps(a.dim, |psi| stage1_residual(a, &t, psi))
}

/// Nonzero, normalized, deduplicated components of
/// ψ(e_i)•ψ(e_j) − ψ(e_i)•αβ(e_j) for ψ = Σ t_a basis[a].
pub fn obstruction(a: &BiHomTrialgebra, basis: &[LinearMap]) -> Vec<QuadPoly> {
    let n = a.dim;
    let ab = a.twist();
    let images: Vec<Vec<Vec<Scalar>>> = basis.iter().map(|b| (0..n).map(|i| b.image(i)).collect()).collect();
    let m = basis.len();
    let polys: BTreeSet<QuadPoly> = (0..3 * n * n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let role = Role::ALL[u / (n * n)];
            let (i, j) = ((u / n) % n, u % n);
            let mut comps = vec![QuadPoly::default(); n];
            for x in 0..m {
                for y in 0..m {
                    let v = a.mul(role, &images[x][i], &images[y][j]);
                    for (k, c) in v.iter().enumerate() {
                        comps[k].add_quad(x, y, c);
                    }
                }
                let v = a.mul(role, &images[x][i], &ab.image(j));
                for (k, c) in v.iter().enumerate() {
                    comps[k].add_lin(x, &-c);
                }
            }
            comps.into_iter().filter(|p| !p.is_zero()).map(|p| p.normalized())
        })
        .collect();
    polys.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidSpace {
    pub algebra: String,
    pub linear_basis: Vec<LinearMap>,
    pub obstruction: Vec<QuadPoly>,
    pub identically_zero: bool,
    /// Exact zero set of the obstruction; `None` past [`MAX_EXACT_PARAMETERS`].
    pub solution: Option<Vec<Component>>,
    /// Largest linear subspace inside the zero set; `None` when unsolved.
    pub dim: Option<usize>,
}

impl CentroidSpace {
    pub fn parameters(&self) -> usize {
        self.linear_basis.len()
    }

    /// `Σ t_a B_a`.
    pub fn element(&self, t: &[Scalar]) -> LinearMap {
        combine(&self.linear_basis, t)
    }
}

fn combine(basis: &[LinearMap], t: &[Scalar]) -> LinearMap {
    let n = basis.first().map_or(0, LinearMap::dim);
    basis.iter().zip(t).fold(LinearMap::zero(n), |acc, (b, c)| if c.is_zero() { acc } else { acc.add(&b.scale(c)) })
}

fn analyse(name: &str, basis: Vec<LinearMap>, obstruction: Vec<QuadPoly>) -> CentroidSpace {
    let m = basis.len();
    let identically_zero = obstruction.is_empty();
    let (solution, dim) = if identically_zero {
        (Some(vec![Component::Everything]), Some(m))
    } else if m <= MAX_EXACT_PARAMETERS {
        (Some(vanishing_set(m, &obstruction)), Some(max_linear_subspace_dim(m, &obstruction)))
    } else {
        (None, None)
    };
    CentroidSpace { algebra: name.to_string(), linear_basis: basis, obstruction, identically_zero, solution, dim }
}

/// All three stages; a nonzero obstruction in more than two parameters is
/// reported in `solution`/`dim` as `None` instead of failing.
pub fn centroid_analysis(a: &BiHomTrialgebra) -> CentroidSpace {
    let basis = centroid_linear_space(a);
    let obs = obstruction(a, &basis);
    analyse(&a.name, basis, obs)
}

pub fn centroid_space(a: &BiHomTrialgebra) -> Result<CentroidSpace> {
    let s = centroid_analysis(a);
    if s.dim.is_none() {
        return Err(Error::ObstructionTooLarge { m: s.parameters() });
    }
    Ok(s)
}

fn central_residual(a: &BiHomTrialgebra, t: &Tables, psi: &LinearMap, commuting: bool) -> Vec<Scalar> {
    let n = t.n;
    let ab = a.twist();
    let mut out = Vec::new();
    if commuting {
        out.extend(psi.compose(&a.alpha).sub(&a.alpha.compose(psi)).flat().iter().cloned());
        out.extend(psi.compose(&a.beta).sub(&a.beta.compose(psi)).flat().iter().cloned());
    }
    for i in 0..n {
        let z = ab.apply(&psi.image(i));
        for h in 0..n {
            let eh = unit(n, h);
            for role in Role::ALL {
                out.extend(a.mul(role, &z, &eh));
                out.extend(a.mul(role, &eh, &z));
            }
        }
    }
    for slot in 0..3 {
        for i in 0..n {
            for j in 0..n {
                out.extend(psi.apply(t.product(slot, i, j)));
            }
        }
    }
    out
}

/// Maps with image in Z_𝒜(𝒜) that kill every product.
pub fn central_derivations(a: &BiHomTrialgebra) -> Vec<LinearMap> {
    let t = Tables::new(a);
    solve_maps(a.dim, |psi| central_residual(a, &t, psi, false))
}

/// [`central_derivations`] further required to commute with α and β.
pub fn central_derivations_commuting(a: &BiHomTrialgebra) -> Vec<LinearMap> {
    let t = Tables::new(a);
    solve_maps(a.dim, |psi| central_residual(a, &t, psi, true))
}

/// Outcome of comparing two sets of maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SetComparison {
    Equal,
    Differs { reason: String, witness: Vec<Vec<String>> },
    /// The obstruction on `m` parameters is beyond the exact solver.
    Unresolved { m: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub central: Vec<LinearMap>,
    /// Maps satisfying the derivation rules and the linear centroid conditions.
    pub linear_part: CentroidSpace,
    pub comparison: SetComparison,
    /// The same comparison for [`central_derivations_commuting`].
    pub commuting_comparison: SetComparison,
}

fn differs(reason: impl Into<String>, witness: &LinearMap) -> SetComparison {
    SetComparison::Differs { reason: reason.into(), witness: matrix_strings(witness) }
}

fn parse_all(v: &[String]) -> Vec<Scalar> {
    v.iter().map(|s| Scalar::from_str(s).expect("canonical scalar")).collect()
}

/// Two parameter points on an affine line `a t1 + b t2 + c = 0`.
fn line_points(coefficients: &[String]) -> [Vec<Scalar>; 2] {
    let c = parse_all(coefficients);
    let (a, b, k) = (&c[0], &c[1], &c[2]);
    let base = if !a.is_zero() {
        vec![-&(k / a), Scalar::zero()]
    } else {
        vec![Scalar::zero(), -&(k / b)]
    };
    let dir = [-b, a.clone()];
    let other = vec![&base[0] + &dir[0], &base[1] + &dir[1]];
    [base, other]
}

/// Compares 𝒞(𝒜) with Cent(𝒜) ∩ Der(𝒜) as sets of maps.
pub fn cent_der_intersection(a: &BiHomTrialgebra) -> IntersectionReport {
    let central = central_derivations(a);
    let t = Tables::new(a);
    let l_basis = solve_maps(a.dim, |psi| {
        let mut r = stage1_residual(a, &t, psi);
        r.extend(derivation_residual(a, &t, psi));
        r
    });
    let obs = obstruction(a, &l_basis);
    let linear_part = analyse(&a.name, l_basis, obs);
    let comparison = compare_central(a, &central, &linear_part);
    let commuting_comparison = compare_central(a, &central_derivations_commuting(a), &linear_part);
    IntersectionReport { central, linear_part, comparison, commuting_comparison }
}

fn compare_central(a: &BiHomTrialgebra, central: &[LinearMap], l: &CentroidSpace) -> SetComparison {
    for c in central {
        if !map_in_span(c, &l.linear_basis) {
            return differs("a central derivation violates a linear centroid or derivation condition", c);
        }
    }
    if !obstruction(a, central).is_empty() {
        let bad = central
            .iter()
            .find(|c| !is_centroid_element(a, c).expect("same dimension").holds)
            .cloned()
            .unwrap_or_else(|| combine(central, &vec![Scalar::one(); central.len()]));
        return differs("central derivations are not all centroid elements", &bad);
    }
    if same_span(central, &l.linear_basis) {
        return SetComparison::Equal;
    }
    let outside = |m: &LinearMap| !map_in_span(m, central);
    for b in &l.linear_basis {
        if outside(b) && is_centroid_element(a, b).expect("same dimension").holds {
            return differs("a centroid derivation is not a central derivation", b);
        }
    }
    let Some(solution) = &l.solution else {
        return SetComparison::Unresolved { m: l.parameters() };
    };
    let mut unresolved = false;
    for comp in solution {
        match comp {
            Component::Everything => {
                let b = l.linear_basis.iter().find(|b| outside(b)).expect("spans differ");
                return differs("a centroid derivation is not a central derivation", b);
            }
            Component::Line { coefficients, .. } => {
                for p in line_points(coefficients) {
                    let m = l.element(&p);
                    if outside(&m) {
                        return differs("a centroid derivation is not a central derivation", &m);
                    }
                }
            }
            Component::Point { t } => {
                let m = l.element(&parse_all(t));
                if outside(&m) {
                    return differs("a centroid derivation is not a central derivation", &m);
                }
            }
            // Central derivations form a proper linear subspace here, which
            // cannot contain a conic with a rational point.
            Component::Conic { through_origin: true, equation } => {
                return SetComparison::Differs {
                    reason: format!("the conic {equation} of centroid derivations is not linear"),
                    witness: Vec::new(),
                };
            }
            Component::Conic { .. } | Component::Algebraic { .. } => unresolved = true,
        }
    }
    if unresolved {
        SetComparison::Unresolved { m: l.parameters() }
    } else {
        SetComparison::Equal
    }
}

/// Elements of Cent(𝒜) read off the centroid analysis, each confirmed by
/// [`is_centroid_element`].
pub fn verified_centroid_elements(a: &BiHomTrialgebra, space: &CentroidSpace) -> Vec<LinearMap> {
    let mut found: Vec<LinearMap> = space.linear_basis.clone();
    if let Some(solution) = &space.solution {
        for comp in solution {
            match comp {
                Component::Line { coefficients, .. } => {
                    let [p, q] = line_points(coefficients);
                    found.push(space.element(&p));
                    found.push(space.element(&q));
                }
                Component::Point { t } => found.push(space.element(&parse_all(t))),
                _ => {}
            }
        }
    }
    let mut out: Vec<LinearMap> = Vec::new();
    for m in found {
        if !m.is_zero() && !out.contains(&m) && is_centroid_element(a, &m).expect("same dimension").holds {
            out.push(m);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteFailure {
    pub check: String,
    pub phi: Vec<Vec<String>>,
    pub d: Vec<Vec<String>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentDerSuite {
    pub algebra: String,
    pub centroid_elements: usize,
    pub derivations: usize,
    pub failures: Vec<SuiteFailure>,
    pub intersection: SetComparison,
    pub intersection_commuting: SetComparison,
}

impl CentDerSuite {
    pub fn hard_failures(&self) -> usize {
        self.failures.len() + usize::from(matches!(self.intersection, SetComparison::Differs { .. }))
    }
}

/// φ∘d ∈ Der, the composition equivalences, and 𝒞 = Cent ∩ Der.
pub fn cent_der_property_suite(a: &BiHomTrialgebra) -> CentDerSuite {
    let space = centroid_analysis(a);
    let phis = verified_centroid_elements(a, &space);
    let ders = derivation_space(a).basis;
    let central = central_derivations(a);
    let is_der = |m: &LinearMap| is_derivation(a, m).expect("same dimension").holds;
    let is_cent = |m: &LinearMap| is_centroid_element(a, m).expect("same dimension").holds;
    let pairs: Vec<(&LinearMap, &LinearMap)> = phis.iter().flat_map(|p| ders.iter().map(move |d| (p, d))).collect();
    let failures: Vec<SuiteFailure> = pairs
        .par_iter()
        .flat_map_iter(|&(phi, d)| {
            let fail = |check: &str, detail: String| SuiteFailure {
                check: check.into(),
                phi: matrix_strings(phi),
                d: matrix_strings(d),
                detail,
            };
            let mut out = Vec::new();
            let phi_d = phi.compose(d);
            let d_phi = d.compose(phi);
            let bracket = d_phi.sub(&phi_d);
            if !is_der(&phi_d) {
                out.push(fail("φ∘d ∈ Der", format!("φ∘d = {} is not a derivation", phi_d.describe())));
            }
            let (l, r) = (is_cent(&d_phi), map_in_span(&phi_d, &central));
            if l != r {
                out.push(fail("d∘φ ∈ Cent ⇔ φ∘d ∈ 𝒞", format!("d∘φ ∈ Cent is {l}, φ∘d ∈ 𝒞 is {r}")));
            }
            let (l, r) = (is_der(&d_phi), map_in_span(&bracket, &central));
            if l != r {
                out.push(fail("d∘φ ∈ Der ⇔ [d,φ] ∈ 𝒞", format!("d∘φ ∈ Der is {l}, [d,φ] ∈ 𝒞 is {r}")));
            }
            out
        })
        .collect();
    let report = cent_der_intersection(a);
    CentDerSuite {
        algebra: a.name.clone(),
        centroid_elements: phis.len(),
        derivations: ders.len(),
        failures,
        intersection: report.comparison,
        intersection_commuting: report.commuting_comparison,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentroidRow {
    pub algebra: String,
    pub linear_dim: usize,
    pub identically_zero: bool,
    pub computed_dim: Option<usize>,
    pub claimed_dim: Option<usize>,
    pub status: TableStatus,
    pub linear_basis: Vec<Vec<Vec<String>>>,
    pub obstruction: Vec<std::collections::BTreeMap<String, String>>,
    pub solution: Option<Vec<Component>>,
}

/// A row matches when the linear space is spanned by the claimed basis, the
/// obstruction vanishes on it, and the dimensions agree.
pub fn centroid_row(entry: &CatalogEntry) -> CentroidRow {
    let s = centroid_analysis(&entry.algebra);
    let status = match entry.claimed_cent_dim {
        None => TableStatus::Unlisted,
        Some(d) => {
            let shape = entry
                .claimed_cent_basis
                .as_ref()
                .is_none_or(|c| same_span(&claimed_basis(entry.algebra.dim, c), &s.linear_basis) && s.identically_zero);
            match s.dim {
                None => TableStatus::Unresolved,
                Some(k) if k == d && shape => TableStatus::Match,
                Some(_) => TableStatus::Mismatch,
            }
        }
    };
    CentroidRow {
        algebra: entry.id.clone(),
        linear_dim: s.parameters(),
        identically_zero: s.identically_zero,
        computed_dim: s.dim,
        claimed_dim: entry.claimed_cent_dim,
        status,
        linear_basis: s.linear_basis.iter().map(matrix_strings).collect(),
        obstruction: s.obstruction.iter().map(QuadPoly::coefficient_map).collect(),
        solution: s.solution,
    }
}

pub fn centroid_table_report(entries: &[&CatalogEntry]) -> Vec<CentroidRow> {
    entries.par_iter().map(|e| centroid_row(e)).collect()
}

/// Zero-vector test used by callers that only need the flag.
pub fn centralizes(a: &BiHomTrialgebra, x: &[Scalar], h: &[Vec<Scalar>]) -> bool {
    let t = a.twist().apply(x);
    h.iter().all(|g| Role::ALL.iter().all(|&r| is_zero_vec(&a.mul(r, &t, g)) && is_zero_vec(&a.mul(r, g, &t))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_get;

    fn alg(id: &str) -> BiHomTrialgebra {
        catalog_get(id).unwrap().algebra
    }

    #[test]
    fn zero_map_is_a_centroid_element() {
        for id in ["BTas_2^1", "BTas_3^7"] {
            let a = alg(id);
            assert!(is_centroid_element(&a, &LinearMap::zero(a.dim)).unwrap().holds);
        }
    }

    #[test]
    fn table_elements() {
        assert!(is_centroid_element(&alg("BTas_3^11"), &LinearMap::elementary(3, 1, 1)).unwrap().holds);
        // ψ(e_2) = e_1 is a centroid element of BTas_3^1; ψ(e_1) = e_2 is not.
        let a = alg("BTas_3^1");
        assert!(is_centroid_element(&a, &LinearMap::elementary(3, 0, 1)).unwrap().holds);
        assert!(!is_centroid_element(&a, &LinearMap::elementary(3, 1, 0)).unwrap().holds);
    }

    #[test]
    fn btas311_space() {
        let a = alg("BTas_3^11");
        let s = centroid_analysis(&a);
        let diag: Vec<_> = (0..3).map(|i| LinearMap::elementary(3, i, i)).collect();
        assert_eq!(s.linear_basis, diag);
        assert!(!s.identically_zero);
        assert_eq!(s.dim, None);
        assert!(matches!(centroid_space(&a), Err(Error::ObstructionTooLarge { m: 3 })));
        // The obstruction vanishes at t = (0, 1, 0).
        let t = [Scalar::zero(), Scalar::one(), Scalar::zero()];
        assert!(s.obstruction.iter().all(|p| p.eval(&t).is_zero()));
    }

    #[test]
    fn identically_zero_obstruction() {
        let s = centroid_space(&alg("BTas_3^5")).unwrap();
        assert!(s.identically_zero);
        assert_eq!(s.dim, Some(2));
    }

    #[test]
    fn two_parameter_line() {
        let a = alg("BTas_2^1");
        let s = centroid_space(&a).unwrap();
        assert_eq!(s.dim, Some(1));
        let els = verified_centroid_elements(&a, &s);
        assert!(els.contains(&LinearMap::elementary(2, 0, 1)));
    }

    #[test]
    fn zero_algebra_full_space() {
        let a = BiHomTrialgebra::zero("z", 2);
        let s = centroid_space(&a).unwrap();
        assert_eq!(s.dim, Some(4));
        assert_eq!(central_derivations(&a).len(), 4);
    }

    #[test]
    fn stage_one_contains_elements() {
        let a = alg("BTas_3^1");
        let basis = centroid_linear_space(&a);
        assert!(map_in_span(&LinearMap::elementary(3, 0, 1), &basis));
        assert!(!map_in_span(&LinearMap::elementary(3, 1, 0), &basis));
    }

    #[test]
    fn centralizer_of_zero_generator() {
        let a = alg("BTas_2^1");
        let zero = vec![vec![Scalar::zero(); 2]];
        assert_eq!(centralizer(&a, &zero, false).unwrap().basis.len(), 2);
        assert!(centralizer(&a, &zero, true).unwrap().basis.is_empty());
        let h = vec![unit(2, 0), unit(2, 1)];
        let c = centralizer(&a, &h, false).unwrap();
        for x in &c.basis {
            assert!(centralizes(&a, x, &h));
        }
        assert!(centralizer(&a, &[vec![Scalar::one()]], false).is_err());
    }

    #[test]
    fn literal_variant_differs_only_in_right_chain() {
        let a = alg("BTas_3^11");
        let psi = LinearMap::elementary(3, 1, 1);
        let lit = is_centroid_element_literal(&a, &psi).unwrap();
        assert!(lit.violations.iter().all(|v| v.condition.contains('⊢')));
    }

    #[test]
    fn phi_d_is_a_derivation_on_btas31() {
        let a = alg("BTas_3^1");
        let phi = LinearMap::elementary(3, 1, 0);
        for d in [LinearMap::elementary(3, 1, 0), LinearMap::elementary(3, 2, 2)] {
            assert!(is_derivation(&a, &phi.compose(&d)).unwrap().holds);
        }
    }
}
