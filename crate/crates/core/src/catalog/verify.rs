use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{coordinate_profile, full_report, AxiomId, AxiomReport, BiHomTrialgebra};
use crate::centroids::{cent_der_property_suite, centroid_row, CentDerSuite, CentroidRow};
use crate::derivations::{derivation_row, DerivationRow};
use crate::error::Result;
use crate::exactnum::Scalar;

use super::errata::{ambiguity_errata, axiom_errata, cent_der_errata, centroid_errata, conjectured_fixes, derivation_errata, rb_example_errata};
use super::{catalog, catalog_get, CatalogEntry, ErrataRecord};

/// Axiom results for one reading of an entry, from both evaluation paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingReport {
    pub name: String,
    pub axioms: AxiomReport,
    pub coordinate: Vec<(AxiomId, bool)>,
    pub paths_agree: bool,
    /// Every structural identity holds.
    pub passes: bool,
    pub multiplicative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub readings: Vec<ReadingReport>,
    pub derivation: DerivationRow,
    pub centroid: CentroidRow,
    pub cent_der: CentDerSuite,
    pub ambiguity_notes: Vec<String>,
    pub errata: Vec<ErrataRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
    pub errata: Vec<ErrataRecord>,
}

impl CatalogReport {
    pub fn all_paths_agree(&self) -> bool {
        self.entries.iter().flat_map(|e| &e.readings).all(|r| r.paths_agree)
    }
}

fn reading(a: &BiHomTrialgebra) -> ReadingReport {
    let axioms = full_report(a);
    let coordinate = coordinate_profile(a);
    let paths_agree = axioms.results.len() == coordinate.len()
        && axioms.results.iter().zip(&coordinate).all(|(r, (id, ok))| r.axiom == *id && r.holds == *ok);
    let passes = AxiomId::STRUCTURAL.iter().all(|id| axioms.holds(*id));
    let multiplicative = AxiomId::MULTIPLICATIVE.iter().all(|id| axioms.holds(*id));
    ReadingReport { name: a.name.clone(), axioms, coordinate, paths_agree, passes, multiplicative }
}

pub(crate) fn verify_entry(e: &CatalogEntry) -> EntryReport {
    let readings: Vec<ReadingReport> = std::iter::once(&e.algebra).chain(&e.alternatives).map(reading).collect();
    let mut errata = Vec::new();
    if !e.ambiguity_notes.is_empty() {
        let summary: Vec<(String, bool)> = readings.iter().map(|r| (r.name.clone(), r.passes)).collect();
        errata.extend(ambiguity_errata(&e.id, &e.ambiguity_notes, &summary));
    }
    for (r, alg) in readings.iter().zip(std::iter::once(&e.algebra).chain(&e.alternatives)) {
        if !r.passes {
            let fixes = conjectured_fixes(alg);
            errata.extend(axiom_errata(&e.id, &r.name, &r.axioms, &fixes));
        }
    }
    let derivation = derivation_row(e);
    if let Some(claim) = &e.claimed_der_basis {
        errata.extend(derivation_errata(&e.algebra, &derivation, claim));
    }
    let centroid = centroid_row(e);
    errata.extend(centroid_errata(&e.algebra, &centroid, e.claimed_cent_basis.as_deref()));
    let cent_der = cent_der_property_suite(&e.algebra);
    errata.extend(cent_der_errata(&cent_der));
    EntryReport {
        id: e.id.clone(),
        readings,
        derivation,
        centroid,
        cent_der,
        ambiguity_notes: e.ambiguity_notes.clone(),
        errata,
    }
}

pub fn catalog_verify(id: &str) -> Result<EntryReport> {
    Ok(verify_entry(&catalog_get(id)?))
}

/// Weights at which the Rota–Baxter example is checked.
pub const RB_EXAMPLE_WEIGHTS: [i64; 3] = [0, 1, -2];

/// Every entry, plus the Rota–Baxter example appended to the errata log.
pub fn catalog_verify_all() -> CatalogReport {
    let entries: Vec<EntryReport> = catalog().par_iter().map(verify_entry).collect();
    let weights = RB_EXAMPLE_WEIGHTS.map(Scalar::from_int);
    let errata = entries.iter().flat_map(|e| e.errata.iter().cloned()).chain(rb_example_errata(&weights)).collect();
    CatalogReport { entries, errata }
}
