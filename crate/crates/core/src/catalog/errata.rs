use serde::{Deserialize, Serialize};

use crate::algebra::{check_axioms, AxiomReport, BiHomTrialgebra, LinearMap, Role};
use crate::centroids::{is_centroid_element, CentDerSuite, CentroidRow, SetComparison};
use crate::exactnum::Scalar;
use crate::transforms::{rb_example_algebra, rb_example_operator, rota_baxter_check};
use crate::derivations::{claimed_basis, derivation_space, is_derivation, DerivationRow};
use crate::spaces::same_span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrataKind {
    Axiom,
    Ambiguity,
    DerivationTable,
    CentroidTable,
    CentDer,
    RotaBaxter,
}

/// One disagreement between the published data and a computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrataRecord {
    pub entry: String,
    pub kind: ErrataKind,
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub witness: Option<String>,
    /// Recomputed canonical basis, as matrices of scalar strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Always a conjecture; never applied to the data.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjectured_correction: Option<String>,
}

impl ErrataRecord {
    fn new(entry: &str, kind: ErrataKind, check: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>) -> Self {
        ErrataRecord {
            entry: entry.to_string(),
            kind,
            check: check.into(),
            expected: expected.into(),
            computed: computed.into(),
            witness: None,
            basis: None,
            note: None,
            conjectured_correction: None,
        }
    }
}

fn scalars(v: &[crate::exactnum::Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// A single index change in one listed line that makes every axiom hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleFix {
    pub description: String,
}

fn sub(k: usize) -> String {
    (k + 1).to_string()
}

/// Tries every one-index edit of every listed product line and twist line.
pub fn conjectured_fixes(a: &BiHomTrialgebra) -> Vec<SingleFix> {
    let n = a.dim;
    let mut out = Vec::new();
    for role in Role::ALL {
        let s = role.symbol();
        let lines: Vec<_> = a.product(role).nonzero().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        for (i, j, k, c) in &lines {
            for slot in 0..3 {
                for v in 0..n {
                    let mut idx = [*i, *j, *k];
                    if idx[slot] == v {
                        continue;
                    }
                    idx[slot] = v;
                    // Moving onto an existing product would duplicate a line.
                    if idx[..2] != [*i, *j] && !a.product(role).basis_product(idx[0], idx[1]).iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let mut b = a.clone();
                    let t = b.product_mut(role);
                    t.set(*i, *j, *k, crate::exactnum::Scalar::zero());
                    t.add_to(idx[0], idx[1], idx[2], c);
                    if check_axioms(&b).all_hold() {
                        out.push(SingleFix {
                            description: format!(
                                "e_{}{s}e_{} ∋ {}e_{}  →  e_{}{s}e_{} ∋ {}e_{}",
                                sub(*i),
                                sub(*j),
                                c,
                                sub(*k),
                                sub(idx[0]),
                                sub(idx[1]),
                                c,
                                sub(idx[2])
                            ),
                        });
                    }
                }
            }
        }
    }
    for (name, which) in [("α", 0), ("β", 1)] {
        let map = if which == 0 { &a.alpha } else { &a.beta };
        for p in 0..n {
            for q in 0..n {
                let c = map.entry(q, p).clone();
                if c.is_zero() {
                    continue;
                }
                for (np, nq) in (0..n).map(|v| (v, q)).chain((0..n).map(|v| (p, v))) {
                    if (np, nq) == (p, q) || !map.entry(nq, np).is_zero() {
                        continue;
                    }
                    let mut flat = map.flat().to_vec();
                    flat[q * n + p] = crate::exactnum::Scalar::zero();
                    flat[nq * n + np] = c.clone();
                    let mut b = a.clone();
                    let m = LinearMap::from_flat(n, flat);
                    if which == 0 {
                        b.alpha = m;
                    } else {
                        b.beta = m;
                    }
                    if check_axioms(&b).all_hold() {
                        out.push(SingleFix {
                            description: format!(
                                "{name}(e_{}) ∋ {c}e_{}  →  {name}(e_{}) ∋ {c}e_{}",
                                sub(p),
                                sub(q),
                                sub(np),
                                sub(nq)
                            ),
                        });
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn axiom_errata(entry: &str, reading: &str, report: &AxiomReport, fixes: &[SingleFix]) -> Vec<ErrataRecord> {
    report
        .results
        .iter()
        .filter(|r| !r.holds && !r.axiom.is_multiplicativity())
        .map(|r| {
            let w = &r.witnesses[0];
            let mut rec = ErrataRecord::new(entry, ErrataKind::Axiom, r.axiom.to_string(), r.axiom.equation(), "fails");
            rec.witness = Some(format!(
                "basis {:?}: lhs {} rhs {} ({} failing tuples)",
                w.indices,
                scalars(&w.lhs),
                scalars(&w.rhs),
                r.witnesses.len()
            ));
            if reading != entry {
                rec.note = Some(format!("reading `{reading}`"));
            }
            if !fixes.is_empty() {
                let list: Vec<_> = fixes.iter().map(|f| f.description.as_str()).collect();
                rec.conjectured_correction = Some(format!("single-index edits restoring every axiom: {}", list.join("; ")));
            }
            rec
        })
        .collect()
}

pub(crate) fn ambiguity_errata(entry: &str, notes: &[String], readings: &[(String, bool)]) -> Vec<ErrataRecord> {
    let summary: Vec<String> = readings
        .iter()
        .map(|(name, ok)| format!("{name}: {}", if *ok { "all axioms hold" } else { "axioms fail" }))
        .collect();
    notes
        .iter()
        .map(|n| {
            let mut rec = ErrataRecord::new(entry, ErrataKind::Ambiguity, "listing", "one unambiguous listing", summary.join("; "));
            rec.note = Some(n.clone());
            rec
        })
        .collect()
}

fn positions(ps: &[(usize, usize)], prefix: &str) -> String {
    let v: Vec<String> = ps.iter().map(|(q, p)| format!("{prefix}_{q}{p}")).collect();
    v.join(", ")
}

pub(crate) fn derivation_errata(a: &BiHomTrialgebra, row: &DerivationRow, claim: &[(usize, usize)]) -> Option<ErrataRecord> {
    if row.status != crate::derivations::TableStatus::Mismatch {
        return None;
    }
    let n = a.dim;
    let mut rec = ErrataRecord::new(
        &row.algebra,
        ErrataKind::DerivationTable,
        "dim Der and claimed basis",
        format!("dim {} spanned by {}", row.claimed_dim.unwrap_or(0), positions(claim, "d")),
        format!("dim {}", row.computed_dim),
    );
    rec.basis = Some(row.basis.clone());
    let failing: Vec<String> = claim
        .iter()
        .filter(|&&(q, p)| !is_derivation(a, &LinearMap::elementary(n, q - 1, p - 1)).expect("same dimension").holds)
        .map(|(q, p)| format!("d_{q}{p}"))
        .collect();
    rec.witness = Some(if failing.is_empty() {
        "every claimed matrix passes is_derivation".into()
    } else {
        format!("claimed matrices failing is_derivation: {}", failing.join(", "))
    });
    let space = derivation_space(a);
    let transposed: Vec<(usize, usize)> = claim.iter().map(|&(q, p)| (p, q)).collect();
    let t_basis = claimed_basis(n, &transposed);
    if t_basis.iter().all(|m| is_derivation(a, m).expect("same dimension").holds) {
        let spans = same_span(&t_basis, &space.basis);
        rec.conjectured_correction = Some(format!(
            "transposed claim {} passes is_derivation{}",
            positions(&transposed, "d"),
            if spans { " and spans the computed space" } else { " but does not span the computed space" }
        ));
    }
    Some(rec)
}

pub(crate) fn centroid_errata(a: &BiHomTrialgebra, row: &CentroidRow, claim: Option<&[(usize, usize)]>) -> Option<ErrataRecord> {
    use crate::derivations::TableStatus;
    if !matches!(row.status, TableStatus::Mismatch | TableStatus::Unresolved) {
        return None;
    }
    let n = a.dim;
    let expected = match claim {
        Some(c) => format!("dim {} spanned by {}", row.claimed_dim.unwrap_or(0), positions(c, "c")),
        None => format!("dim {}", row.claimed_dim.unwrap_or(0)),
    };
    let computed = match row.computed_dim {
        Some(d) => format!("dim {d}; linear part has dim {}", row.linear_dim),
        None => format!(
            "linear part has dim {} with a nonzero obstruction in {} parameters (not solved exactly)",
            row.linear_dim, row.linear_dim
        ),
    };
    let mut rec = ErrataRecord::new(&row.algebra, ErrataKind::CentroidTable, "dim Cent", expected, computed);
    rec.basis = Some(row.linear_basis.clone());
    if let Some(c) = claim {
        let verdicts: Vec<String> = c
            .iter()
            .map(|&(q, p)| {
                let ok = is_centroid_element(a, &LinearMap::elementary(n, q - 1, p - 1)).expect("same dimension").holds;
                format!("c_{q}{p} {}", if ok { "passes" } else { "fails" })
            })
            .collect();
        rec.witness = Some(format!("claimed elements: {}", verdicts.join(", ")));
    } else if let Some(m) = row.linear_basis.first() {
        rec.witness = Some(format!("nonzero centroid element {m:?}"));
    }
    Some(rec)
}

pub(crate) fn cent_der_errata(suite: &CentDerSuite) -> Vec<ErrataRecord> {
    let mut out: Vec<ErrataRecord> = suite
        .failures
        .iter()
        .map(|f| {
            let mut rec = ErrataRecord::new(&suite.algebra, ErrataKind::CentDer, f.check.clone(), "holds", f.detail.clone());
            rec.witness = Some(format!("φ = {:?}, d = {:?}", f.phi, f.d));
            rec
        })
        .collect();
    if let SetComparison::Differs { reason, witness } = &suite.intersection {
        let mut rec = ErrataRecord::new(&suite.algebra, ErrataKind::CentDer, "𝒞(𝒜) = Cent(𝒜) ∩ Der(𝒜)", "equal sets", reason.clone());
        if !witness.is_empty() {
            rec.witness = Some(format!("{witness:?}"));
        }
        rec.note = Some(match &suite.intersection_commuting {
            SetComparison::Equal => "equal once central derivations must commute with α and β".into(),
            SetComparison::Differs { reason, .. } => format!("still differs with α, β commutation imposed: {reason}"),
            SetComparison::Unresolved { m } => format!("with α, β commutation imposed: unresolved ({m} parameters)"),
        });
        out.push(rec);
    }
    out
}

/// Name under which the Rota–Baxter example is logged.
pub const RB_EXAMPLE: &str = "RB example";

/// The example operator R = −λ·id checked on the example algebra, one record
/// per weight at which it fails.
pub fn rb_example_errata(weights: &[Scalar]) -> Vec<ErrataRecord> {
    let a = rb_example_algebra();
    weights
        .iter()
        .filter_map(|w| {
            let report = rota_baxter_check(&a, &rb_example_operator(w)).expect("same dimension");
            if report.holds {
                return None;
            }
            let mut rec = ErrataRecord::new(
                RB_EXAMPLE,
                ErrataKind::RotaBaxter,
                format!("R = -({w})·id, weight {w}"),
                "Rota–Baxter identities hold on every basis pair",
                format!("{} failing instances", report.violations.len()),
            );
            let pairs: Vec<String> = report
                .violations
                .iter()
                .map(|v| format!("{} at (e_{}, e_{})", v.condition, v.witness.indices[0], v.witness.indices[1]))
                .collect();
            rec.witness = Some(pairs.join("; "));
            Some(rec)
        })
        .collect()
}
