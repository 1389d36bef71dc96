//! The classified two- and three-dimensional algebras, the published
//! derivation and centroid tables, and the verification harness.

mod errata;
mod fingerprint;
mod verify;

use std::sync::OnceLock;

use crate::algebra::{parse_algebra, BiHomTrialgebra};
use crate::error::{Error, Result};

pub use errata::{conjectured_fixes, rb_example_errata, ErrataKind, ErrataRecord, SingleFix, RB_EXAMPLE};
pub use fingerprint::{distinguish, fingerprint, verify_isomorphism, Distinction, Fingerprint};
pub use verify::{catalog_verify, catalog_verify_all, CatalogReport, EntryReport, ReadingReport, RB_EXAMPLE_WEIGHTS};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub algebra: BiHomTrialgebra,
    pub claimed_der_dim: Option<usize>,
    /// Claimed basis positions `(q, p)`, 1-based, one elementary map each.
    pub claimed_der_basis: Option<Vec<(usize, usize)>>,
    pub claimed_cent_dim: Option<usize>,
    pub claimed_cent_basis: Option<Vec<(usize, usize)>>,
    pub ambiguity_notes: Vec<String>,
    /// Other readings of an ambiguous listing.
    pub alternatives: Vec<BiHomTrialgebra>,
}

macro_rules! data {
    ($($file:literal),* $(,)?) => {
        &[$(($file, include_str!(concat!("data/", $file, ".json")))),*]
    };
}

/// Canonical documents, in catalog order. Alternative readings use an `-alt` suffix.
pub const DOCUMENTS: &[(&str, &str)] = data!(
    "btas_2_1", "btas_2_2", "btas_2_3", "btas_2_4", "btas_2_5", "btas_2_6", "btas_2_7", "btas_2_7-alt",
    "btas_3_1", "btas_3_2", "btas_3_3", "btas_3_4", "btas_3_5", "btas_3_6", "btas_3_7", "btas_3_8",
    "btas_3_9", "btas_3_10", "btas_3_11", "btas_3_12", "btas_3_13", "btas_3_14", "btas_3_15",
    "btas_3_16", "btas_3_17", "btas_3_18", "btas_3_19", "btas_3_20", "btas_3_21", "btas_3_22",
    "btas_3_23", "btas_3_24", "btas_3_24-alt",
);

type Pos = &'static [(usize, usize)];

/// (dim, k) → derivation claim.
fn der_claim(d: usize, k: usize) -> Option<(usize, Pos)> {
    const D21: Pos = &[(2, 1)];
    match (d, k) {
        (2, 1 | 2 | 6) => Some((1, D21)),
        (3, 1) | (3, 6) => Some((2, &[(2, 1), (3, 3)])),
        (3, 2) | (3, 5) => Some((1, D21)),
        (3, 3) | (3, 7) | (3, 8) | (3, 9) => Some((2, &[(2, 2), (3, 3)])),
        (3, 4) | (3, 19) => Some((2, &[(2, 1), (2, 3)])),
        (3, 10) => Some((2, &[(1, 1), (3, 3)])),
        (3, 11) | (3, 12) | (3, 13) => Some((2, &[(1, 1), (2, 2)])),
        (3, 14) => Some((3, &[(1, 1), (2, 2), (2, 3)])),
        (3, 15) => Some((2, &[(1, 1), (2, 3)])),
        _ => None,
    }
}

fn cent_claim(d: usize, k: usize) -> Option<(usize, Option<Pos>)> {
    if d == 2 {
        return Some((0, None));
    }
    let basis: Pos = match k {
        1 | 2 | 5 | 6 => &[(2, 1)],
        3 | 7 | 8 | 9 | 10 => &[(3, 3)],
        4 | 16 | 18..=24 => &[(3, 1)],
        11..=13 => &[(2, 2)],
        15 => &[(1, 1)],
        _ => return None,
    };
    Some((1, Some(basis)))
}

fn notes(d: usize, k: usize) -> Vec<String> {
    match (d, k) {
        (2, 7) => vec![
            "the ⊣ list has e_1⊣e_2 twice (=e_1 and =e_1+e_2); primary reading takes the second line as e_2⊣e_2=e_1+e_2, \
             the alternative keeps only e_1⊣e_2=e_1+e_2"
                .into(),
        ],
        (3, 24) => vec![
            "the ⊢ list has e_2⊢e_3 twice (=e_3 and =e_1); primary reading keeps e_2⊢e_3=e_3, the alternative e_2⊢e_3=e_1".into(),
        ],
        (3, 19) => vec!["centroid table cell is labelled c_13 but sits at row 3, column 1; the position is used".into()],
        _ => Vec::new(),
    }
}

fn parse_id(id: &str) -> Option<(usize, usize)> {
    let rest = id.strip_prefix("BTas_")?;
    let (d, k) = rest.split_once('^')?;
    Some((d.parse().ok()?, k.parse().ok()?))
}

fn load() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for (file, text) in DOCUMENTS {
        let algebra = parse_algebra(text).unwrap_or_else(|e| panic!("embedded {file}: {e}"));
        if file.ends_with("-alt") {
            out.last_mut().expect("alternative follows its entry").alternatives.push(algebra);
            continue;
        }
        let (d, k) = parse_id(&algebra.name).expect("catalog id");
        let der = der_claim(d, k);
        let cent = cent_claim(d, k);
        out.push(CatalogEntry {
            id: algebra.name.clone(),
            claimed_der_dim: der.map(|c| c.0),
            claimed_der_basis: der.map(|c| c.1.to_vec()),
            claimed_cent_dim: cent.map(|c| c.0),
            claimed_cent_basis: cent.and_then(|c| c.1).map(<[_]>::to_vec),
            ambiguity_notes: notes(d, k),
            alternatives: Vec::new(),
            algebra,
        });
    }
    out
}

pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(load)
}

pub fn catalog_list() -> Vec<String> {
    catalog().iter().map(|e| e.id.clone()).collect()
}

/// Accepts `BTas_3^17` and the file stem form `btas_3_17`.
pub fn catalog_get(id: &str) -> Result<CatalogEntry> {
    let wanted = match id.strip_prefix("btas_").and_then(|r| r.split_once('_')) {
        Some((d, k)) => format!("BTas_{d}^{k}"),
        None => id.to_string(),
    };
    catalog().iter().find(|e| e.id == wanted).cloned().ok_or_else(|| Error::UnknownId(id.to_string()))
}
