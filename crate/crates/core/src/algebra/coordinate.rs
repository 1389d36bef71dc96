//! Structure-constant form of the axioms, evaluated by explicit index sums.
//!
//! This path never calls the bilinear evaluator. It reads γ, δ, ξ and the
//! matrices a, b entry by entry and compares both sides of every scalar
//! identity, so it serves as an independent oracle for `check_axioms` plus
//! `check_multiplicativity`.

use super::{AxiomId, BiHomTrialgebra, MulTensor};
use crate::exactnum::Scalar;

type Entry<'a> = &'a dyn Fn(usize, usize) -> Scalar;

/// Σ_p Σ_q t1_{ij}^p b_{qk} t2_{pq}^r.
fn left_nested(t1: &MulTensor, t2: &MulTensor, b: Entry<'_>, n: usize, (i, j, k, r): (usize, usize, usize, usize)) -> Scalar {
    let mut s = Scalar::zero();
    for p in 0..n {
        let g = t1.get(i, j, p);
        if g.is_zero() {
            continue;
        }
        for q in 0..n {
            let term = &(g * &b(q, k)) * t2.get(p, q, r);
            s += term;
        }
    }
    s
}

/// Σ_p Σ_q a_{pi} t1_{jk}^q t2_{pq}^r.
fn right_nested(t1: &MulTensor, t2: &MulTensor, a: Entry<'_>, n: usize, (i, j, k, r): (usize, usize, usize, usize)) -> Scalar {
    let mut s = Scalar::zero();
    for p in 0..n {
        let api = a(p, i);
        if api.is_zero() {
            continue;
        }
        for q in 0..n {
            let term = &(&api * t1.get(j, k, q)) * t2.get(p, q, r);
            s += term;
        }
    }
    s
}

/// `true` iff every coordinate identity holds.
pub fn check_coordinate_form(alg: &BiHomTrialgebra) -> bool {
    coordinate_profile(alg).iter().all(|(_, ok)| *ok)
}

/// Pass/fail per identity, in [`AxiomId::all`] order.
pub fn coordinate_profile(alg: &BiHomTrialgebra) -> Vec<(AxiomId, bool)> {
    let n = alg.dim;
    let a = |row: usize, col: usize| alg.alpha.entry(row, col).clone();
    let b = |row: usize, col: usize| alg.beta.entry(row, col).clone();
    let (g, d, x) = (&alg.left, &alg.right, &alg.middle);
    let mut out = Vec::new();

    // Σ_j b_{ji} a_{kj} = Σ_j a_{ji} b_{kj}
    let mut ok = true;
    for i in 0..n {
        for k in 0..n {
            let mut lhs = Scalar::zero();
            let mut rhs = Scalar::zero();
            for j in 0..n {
                lhs += b(j, i) * a(k, j);
                rhs += a(j, i) * b(k, j);
            }
            ok &= lhs == rhs;
        }
    }
    out.push((AxiomId::C0, ok));

    // (t1, t2) on the left-nested side against (u1, u2) on the right-nested side.
    let families: [(AxiomId, &MulTensor, &MulTensor, &MulTensor, &MulTensor); 10] = [
        (AxiomId::A1, g, g, g, g),
        (AxiomId::A2a, g, g, d, g),
        (AxiomId::A2b, g, g, x, g),
        (AxiomId::A3, g, g, g, d),
        (AxiomId::A4a, g, d, d, d),
        (AxiomId::A5, d, d, d, d),
        (AxiomId::A6, x, g, g, x),
        (AxiomId::A7, g, x, d, x),
        (AxiomId::A8, d, x, x, d),
        (AxiomId::A9, x, x, x, x),
    ];
    let all_indices = || (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |r| (i, j, k, r)))));
    for (id, t1, t2, u1, u2) in families {
        let ok = all_indices().all(|at| left_nested(t1, t2, &b, n, at) == right_nested(u1, u2, &a, n, at));
        out.push((id, ok));
    }
    // Σ γ_{ij}^p b_{qk} δ_{pq}^r = Σ ξ_{ij}^p b_{qk} δ_{pq}^r
    let ok = all_indices().all(|at| left_nested(g, d, &b, n, at) == left_nested(x, d, &b, n, at));
    out.push((AxiomId::A4b, ok));

    // Σ_k T_{ij}^k m_{qk} = Σ_k Σ_p m_{ki} m_{pj} T_{kp}^q for m ∈ {a, b}.
    let maps: [Entry<'_>; 2] = [&a, &b];
    let mult = AxiomId::MULTIPLICATIVE.iter();
    let pairs = [g, d, x].into_iter().flat_map(|t| maps.iter().map(move |m| (t, m)));
    for (id, (t, m)) in mult.zip(pairs) {
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                for q in 0..n {
                    let mut lhs = Scalar::zero();
                    let mut rhs = Scalar::zero();
                    for k in 0..n {
                        lhs += t.get(i, j, k) * m(q, k);
                        let mki = m(k, i);
                        if mki.is_zero() {
                            continue;
                        }
                        for p in 0..n {
                            rhs += &(&mki * &m(p, j)) * t.get(k, p, q);
                        }
                    }
                    ok &= lhs == rhs;
                }
            }
        }
        out.push((*id, ok));
    }
    let order: Vec<AxiomId> = AxiomId::all().collect();
    out.sort_by_key(|(id, _)| order.iter().position(|o| o == id));
    out
}
