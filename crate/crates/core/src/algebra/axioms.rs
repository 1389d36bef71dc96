use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BiHomTrialgebra, LinearMap, Role};
use crate::exactnum::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxiomId {
    C0,
    A1,
    A2a,
    A2b,
    A3,
    A4a,
    A4b,
    A5,
    A6,
    A7,
    A8,
    A9,
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
}

impl AxiomId {
    pub const STRUCTURAL: [AxiomId; 12] = [
        AxiomId::C0,
        AxiomId::A1,
        AxiomId::A2a,
        AxiomId::A2b,
        AxiomId::A3,
        AxiomId::A4a,
        AxiomId::A4b,
        AxiomId::A5,
        AxiomId::A6,
        AxiomId::A7,
        AxiomId::A8,
        AxiomId::A9,
    ];

    pub const MULTIPLICATIVE: [AxiomId; 6] =
        [AxiomId::M1, AxiomId::M2, AxiomId::M3, AxiomId::M4, AxiomId::M5, AxiomId::M6];

    pub fn all() -> impl Iterator<Item = AxiomId> {
        Self::STRUCTURAL.into_iter().chain(Self::MULTIPLICATIVE)
    }

    /// Human-readable form of the identity.
    pub fn equation(self) -> &'static str {
        use AxiomId::*;
        match self {
            C0 => "αβ = βα",
            A1 => "(x⊣y)⊣β(z) = α(x)⊣(y⊣z)",
            A2a => "(x⊣y)⊣β(z) = α(x)⊣(y⊢z)",
            A2b => "(x⊣y)⊣β(z) = α(x)⊣(y⊥z)",
            A3 => "(x⊣y)⊣β(z) = α(x)⊢(y⊣z)",
            A4a => "(x⊣y)⊢β(z) = α(x)⊢(y⊢z)",
            A4b => "(x⊣y)⊢β(z) = (x⊥y)⊢β(z)",
            A5 => "(x⊢y)⊢β(z) = α(x)⊢(y⊢z)",
            A6 => "(x⊥y)⊣β(z) = α(x)⊥(y⊣z)",
            A7 => "(x⊣y)⊥β(z) = α(x)⊥(y⊢z)",
            A8 => "(x⊢y)⊥β(z) = α(x)⊢(y⊥z)",
            A9 => "(x⊥y)⊥β(z) = α(x)⊥(y⊥z)",
            M1 => "α(x⊣y) = α(x)⊣α(y)",
            M2 => "β(x⊣y) = β(x)⊣β(y)",
            M3 => "α(x⊢y) = α(x)⊢α(y)",
            M4 => "β(x⊢y) = β(x)⊢β(y)",
            M5 => "α(x⊥y) = α(x)⊥α(y)",
            M6 => "β(x⊥y) = β(x)⊥β(y)",
        }
    }

    pub fn is_multiplicativity(self) -> bool {
        Self::MULTIPLICATIVE.contains(&self)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A failing basis tuple (1-based) with both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn failing(&self) -> Vec<AxiomId> {
        self.results.iter().filter(|r| !r.holds).map(|r| r.axiom).collect()
    }

    pub fn get(&self, id: AxiomId) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == id)
    }

    pub fn holds(&self, id: AxiomId) -> bool {
        self.get(id).is_some_and(|r| r.holds)
    }

    pub fn merge(mut self, other: AxiomReport) -> AxiomReport {
        self.results.extend(other.results);
        self
    }

    fn push(&mut self, axiom: AxiomId, witnesses: Vec<Witness>) {
        self.results.push(AxiomResult { axiom, holds: witnesses.is_empty(), witnesses });
    }
}

/// `(x inner y) outer β(z)` or `α(x) outer (y inner z)`.
#[derive(Clone, Copy)]
enum Side {
    LeftNested { inner: Role, outer: Role },
    RightNested { outer: Role, inner: Role },
}

use Role::{Left as L, Middle as M, Right as R};
use Side::{LeftNested as LN, RightNested as RN};

fn triple_axiom(id: AxiomId) -> (Side, Side) {
    use AxiomId::*;
    match id {
        A1 => (LN { inner: L, outer: L }, RN { outer: L, inner: L }),
        A2a => (LN { inner: L, outer: L }, RN { outer: L, inner: R }),
        A2b => (LN { inner: L, outer: L }, RN { outer: L, inner: M }),
        A3 => (LN { inner: L, outer: L }, RN { outer: R, inner: L }),
        A4a => (LN { inner: L, outer: R }, RN { outer: R, inner: R }),
        A4b => (LN { inner: L, outer: R }, LN { inner: M, outer: R }),
        A5 => (LN { inner: R, outer: R }, RN { outer: R, inner: R }),
        A6 => (LN { inner: M, outer: L }, RN { outer: M, inner: L }),
        A7 => (LN { inner: L, outer: M }, RN { outer: M, inner: R }),
        A8 => (LN { inner: R, outer: M }, RN { outer: R, inner: M }),
        A9 => (LN { inner: M, outer: M }, RN { outer: M, inner: M }),
        _ => unreachable!("not a triple axiom"),
    }
}

struct Basis<'a> {
    a: &'a BiHomTrialgebra,
    alpha: Vec<Vec<Scalar>>,
    beta: Vec<Vec<Scalar>>,
}

impl<'a> Basis<'a> {
    fn new(a: &'a BiHomTrialgebra) -> Self {
        let n = a.dim;
        Basis {
            a,
            alpha: (0..n).map(|i| a.alpha.image(i)).collect(),
            beta: (0..n).map(|i| a.beta.image(i)).collect(),
        }
    }

    fn side(&self, s: Side, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let a = self.a;
        match s {
            LN { inner, outer } => {
                let xy = a.product(inner).basis_product(i, j);
                a.mul(outer, &xy, &self.beta[k])
            }
            RN { outer, inner } => {
                let yz = a.product(inner).basis_product(j, k);
                a.mul(outer, &self.alpha[i], &yz)
            }
        }
    }
}

fn check_triple(b: &Basis<'_>, id: AxiomId) -> Vec<Witness> {
    let (l, r) = triple_axiom(id);
    let n = b.a.dim;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = b.side(l, i, j, k);
                let rhs = b.side(r, i, j, k);
                if lhs != rhs {
                    out.push(Witness { indices: vec![i + 1, j + 1, k + 1], lhs, rhs });
                }
            }
        }
    }
    out
}

/// Checks αβ = βα and the eleven triple identities on every basis triple.
pub fn check_axioms(a: &BiHomTrialgebra) -> AxiomReport {
    let b = Basis::new(a);
    let mut report = AxiomReport::default();
    let ab = a.alpha.compose(&a.beta);
    let ba = a.beta.compose(&a.alpha);
    let c0 = (0..a.dim)
        .filter_map(|i| {
            let (lhs, rhs) = (ab.image(i), ba.image(i));
            (lhs != rhs).then(|| Witness { indices: vec![i + 1], lhs, rhs })
        })
        .collect();
    report.push(AxiomId::C0, c0);
    for id in &AxiomId::STRUCTURAL[1..] {
        report.push(*id, check_triple(&b, *id));
    }
    report
}

fn endomorphism_witnesses(a: &BiHomTrialgebra, role: Role, map: &LinearMap) -> Vec<Witness> {
    let images: Vec<_> = (0..a.dim).map(|i| map.image(i)).collect();
    let mut out = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            let lhs = map.apply(&a.product(role).basis_product(i, j));
            let rhs = a.mul(role, &images[i], &images[j]);
            if lhs != rhs {
                out.push(Witness { indices: vec![i + 1, j + 1], lhs, rhs });
            }
        }
    }
    out
}

/// α and β as endomorphisms of each product, on every basis pair.
pub fn check_multiplicativity(a: &BiHomTrialgebra) -> AxiomReport {
    let mut report = AxiomReport::default();
    let ids = AxiomId::MULTIPLICATIVE;
    for (slot, role) in Role::ALL.into_iter().enumerate() {
        report.push(ids[2 * slot], endomorphism_witnesses(a, role, &a.alpha));
        report.push(ids[2 * slot + 1], endomorphism_witnesses(a, role, &a.beta));
    }
    report
}

/// Axioms followed by multiplicativity.
pub fn full_report(a: &BiHomTrialgebra) -> AxiomReport {
    check_axioms(a).merge(check_multiplicativity(a))
}
