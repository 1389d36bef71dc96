//! Morphisms, transport of structure, and the constructions that build new
//! algebras from old ones.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    check_axioms, json_error, matrix_from_strings, matrix_to_strings, tensor_from_entries, tensor_to_entries, unit,
    vec_add, vec_scale, vec_sub, AxiomReport, BiHomTrialgebra, CheckReport, LinearMap, MulTensor, ProductEntry, Role,
};
use crate::derivations::check_dims;
use crate::error::{Error, Result};
use crate::exactnum::{span_rank, Scalar};

/// A single product with two twisting maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiHomAlgebra {
    pub name: String,
    pub dim: usize,
    pub mu: MulTensor,
    pub alpha: LinearMap,
    pub beta: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterData {
    pub r: LinearMap,
    pub weight: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketPair {
    pub star: MulTensor,
    pub bracket: MulTensor,
}

/// A constructed algebra together with its Def-level axiom report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub algebra: BiHomTrialgebra,
    pub axioms: AxiomReport,
}

impl Candidate {
    fn new(algebra: BiHomTrialgebra) -> Self {
        let axioms = check_axioms(&algebra);
        Candidate { algebra, axioms }
    }
}

fn tensor_from_fn(n: usize, role: Role, f: impl Fn(usize, usize) -> Vec<Scalar>) -> MulTensor {
    let mut t = MulTensor::zero(n, role);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in f(i, j).into_iter().enumerate() {
                if !c.is_zero() {
                    t.set(i, j, k, c);
                }
            }
        }
    }
    t
}

impl BiHomAlgebra {
    pub fn new(name: impl Into<String>, mu: MulTensor, alpha: LinearMap, beta: LinearMap) -> Result<Self> {
        let dim = mu.dim();
        if alpha.dim() != dim || beta.dim() != dim {
            return Err(Error::DimensionMismatch(format!(
                "product is {dim}-dimensional, twists are {} and {}",
                alpha.dim(),
                beta.dim()
            )));
        }
        Ok(BiHomAlgebra { name: name.into(), dim, mu, alpha, beta })
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.mu.apply(x, y)
    }

    /// (x∗y)∗β(z) = α(x)∗(y∗z) on basis triples.
    pub fn associativity_report(&self) -> CheckReport {
        let n = self.dim;
        let mut report = CheckReport::new();
        for i in 0..n {
            for j in 0..n {
                let xy = self.mu.basis_product(i, j);
                for k in 0..n {
                    let lhs = self.mul(&xy, &self.beta.image(k));
                    let rhs = self.mul(&self.alpha.image(i), &self.mu.basis_product(j, k));
                    report.compare("(x∗y)∗β(z) = α(x)∗(y∗z)", &[i, j, k], lhs, rhs);
                }
            }
        }
        report
    }

    pub fn is_bihom_associative(&self) -> bool {
        self.associativity_report().holds
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiHomAlgebraDoc {
    name: String,
    dim: usize,
    #[serde(default)]
    product: Vec<ProductEntry>,
    #[serde(default)]
    alpha: Option<Vec<Vec<String>>>,
    #[serde(default)]
    beta: Option<Vec<Vec<String>>>,
}

/// Same layout as a trialgebra document with a single `product` list.
pub fn parse_bihom_algebra(text: &str) -> Result<BiHomAlgebra> {
    let doc: BiHomAlgebraDoc = serde_json::from_str(text).map_err(json_error)?;
    let n = doc.dim;
    let mu = tensor_from_entries(&doc.product, n, Role::Middle)?;
    let twist = |m: &Option<Vec<Vec<String>>>, field: &str| -> Result<LinearMap> {
        match m {
            None => Ok(LinearMap::zero(n)),
            Some(rows) => LinearMap::new(matrix_from_strings(rows, n, field)?),
        }
    };
    BiHomAlgebra::new(doc.name, mu, twist(&doc.alpha, "alpha")?, twist(&doc.beta, "beta")?)
}

pub fn serialize_bihom_algebra(a: &BiHomAlgebra) -> String {
    let doc = BiHomAlgebraDoc {
        name: a.name.clone(),
        dim: a.dim,
        product: tensor_to_entries(&a.mu),
        alpha: Some(matrix_to_strings(a.alpha.matrix())),
        beta: Some(matrix_to_strings(a.beta.matrix())),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data");
    s.push('\n');
    s
}

fn same_dims(a: &BiHomTrialgebra, b: &BiHomTrialgebra, psi: &LinearMap) -> Result<()> {
    if a.dim != b.dim || psi.dim() != a.dim {
        return Err(Error::DimensionMismatch(format!(
            "map of size {} between algebras of dimension {} and {}",
            psi.dim(),
            a.dim,
            b.dim
        )));
    }
    Ok(())
}

/// ψα_A = α_Bψ, ψβ_A = β_Bψ and ψ(e_i•e_j) = ψ(e_i)•'ψ(e_j).
pub fn is_morphism(psi: &LinearMap, a: &BiHomTrialgebra, b: &BiHomTrialgebra) -> Result<CheckReport> {
    same_dims(a, b, psi)?;
    let mut report = CheckReport::new();
    report.compare_maps("ψα = α'ψ", &psi.compose(&a.alpha), &b.alpha.compose(psi));
    report.compare_maps("ψβ = β'ψ", &psi.compose(&a.beta), &b.beta.compose(psi));
    for role in Role::ALL {
        let cond = format!("ψ(x{0}y) = ψ(x){0}'ψ(y)", role.symbol());
        for i in 0..a.dim {
            for j in 0..a.dim {
                let lhs = psi.apply(&a.product(role).basis_product(i, j));
                let rhs = b.mul(role, &psi.image(i), &psi.image(j));
                report.compare(&cond, &[i, j], lhs, rhs);
            }
        }
    }
    Ok(report)
}

pub fn is_automorphism(psi: &LinearMap, a: &BiHomTrialgebra) -> Result<bool> {
    check_dims(a, psi, "map")?;
    Ok(psi.rank() == a.dim && is_morphism(psi, a, a)?.holds)
}

/// (𝒜, ψ∘•∘(ψ⁻¹⊗ψ⁻¹), ψαψ⁻¹, ψβψ⁻¹).
pub fn transport(a: &BiHomTrialgebra, psi: &LinearMap) -> Result<BiHomTrialgebra> {
    check_dims(a, psi, "map")?;
    let inv = psi.inverse()?;
    let n = a.dim;
    let pre: Vec<_> = (0..n).map(|i| inv.image(i)).collect();
    let mut out = a.clone();
    for role in Role::ALL {
        *out.product_mut(role) = tensor_from_fn(n, role, |i, j| psi.apply(&a.mul(role, &pre[i], &pre[j])));
    }
    out.alpha = psi.compose(&a.alpha).compose(&inv);
    out.beta = psi.compose(&a.beta).compose(&inv);
    Ok(out)
}

/// Whether ψφψ⁻¹ is an automorphism of `transport(a, ψ)`.
pub fn conjugate_automorphism_check(a: &BiHomTrialgebra, psi: &LinearMap, phi: &LinearMap) -> Result<bool> {
    if !is_automorphism(phi, a)? {
        return Err(Error::PreconditionFailed(format!("{} is not an automorphism of {}", phi.describe(), a.name)));
    }
    let t = transport(a, psi)?;
    let conj = psi.compose(phi).compose(&psi.inverse()?);
    is_automorphism(&conj, &t)
}

/// x∗'y = α⁻¹(x)∗β⁻¹(y) for each product, with identity twists.
pub fn untwist(a: &BiHomTrialgebra) -> Result<Candidate> {
    let ai = a.alpha.inverse()?;
    let bi = a.beta.inverse()?;
    let n = a.dim;
    let mut out = BiHomTrialgebra::zero(format!("untwist({})", a.name), n);
    for role in Role::ALL {
        *out.product_mut(role) = tensor_from_fn(n, role, |i, j| a.mul(role, &ai.image(i), &bi.image(j)));
    }
    out.alpha = LinearMap::identity(n);
    out.beta = LinearMap::identity(n);
    Ok(Candidate::new(out))
}

fn block(a: &LinearMap, b: &LinearMap) -> LinearMap {
    let (n, m) = (a.dim(), b.dim());
    let mut flat = vec![Scalar::zero(); (n + m) * (n + m)];
    for r in 0..n {
        for c in 0..n {
            flat[r * (n + m) + c] = a.entry(r, c).clone();
        }
    }
    for r in 0..m {
        for c in 0..m {
            flat[(n + r) * (n + m) + n + c] = b.entry(r, c).clone();
        }
    }
    LinearMap::from_flat(n + m, flat)
}

/// Blockwise products and twists on 𝒜 ⊕ ℬ; basis e_1..e_n of 𝒜 first.
pub fn direct_sum(a: &BiHomTrialgebra, b: &BiHomTrialgebra) -> BiHomTrialgebra {
    let (n, m) = (a.dim, b.dim);
    let mut out = BiHomTrialgebra::zero(format!("{} ⊕ {}", a.name, b.name), n + m);
    for role in Role::ALL {
        let t = out.product_mut(role);
        for (i, j, k, c) in a.product(role).nonzero() {
            t.set(i, j, k, c.clone());
        }
        for (i, j, k, c) in b.product(role).nonzero() {
            t.set(n + i, n + j, n + k, c.clone());
        }
    }
    out.alpha = block(&a.alpha, &b.alpha);
    out.beta = block(&a.beta, &b.beta);
    out
}

/// Whether Γ_ξ = {(x, ξx)} is closed under the products and twists of 𝒜 ⊕ ℬ,
/// decided by rank tests inside the direct sum.
pub fn graph_subalgebra_check(xi: &LinearMap, a: &BiHomTrialgebra, b: &BiHomTrialgebra) -> Result<bool> {
    same_dims(a, b, xi)?;
    let n = a.dim;
    let sum = direct_sum(a, b);
    let graph: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = unit(n, i);
            v.extend(xi.image(i));
            v
        })
        .collect();
    let base = span_rank(&graph, 2 * n);
    let inside = |v: Vec<Scalar>| {
        let mut all = graph.clone();
        all.push(v);
        span_rank(&all, 2 * n) == base
    };
    for role in Role::ALL {
        for g in &graph {
            for h in &graph {
                if !inside(sum.mul(role, g, h)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(graph.iter().all(|g| inside(sum.alpha.apply(g)) && inside(sum.beta.apply(g))))
}

/// Commutation with the twists and the three weighted identities, in which
/// ⊢ and ⊣ trade places between the two sides.
pub fn rota_baxter_check(a: &BiHomTrialgebra, rb: &RotaBaxterData) -> Result<CheckReport> {
    check_dims(a, &rb.r, "operator")?;
    let r = &rb.r;
    let mut report = CheckReport::new();
    report.compare_maps("Rα = αR", &r.compose(&a.alpha), &a.alpha.compose(r));
    report.compare_maps("Rβ = βR", &r.compose(&a.beta), &a.beta.compose(r));
    let pairs = [(Role::Right, Role::Left), (Role::Left, Role::Right), (Role::Middle, Role::Middle)];
    for (outer, inner) in pairs {
        let (o, s) = (outer.symbol(), inner.symbol());
        let cond = format!("R(x){o}R(y) = R(R(x){s}y + x{s}R(y) + λx{s}y)");
        for i in 0..a.dim {
            for j in 0..a.dim {
                let (x, y) = (unit(a.dim, i), unit(a.dim, j));
                let (rx, ry) = (r.image(i), r.image(j));
                let lhs = a.mul(outer, &rx, &ry);
                let inside = vec_add(
                    &vec_add(&a.mul(inner, &rx, &y), &a.mul(inner, &x, &ry)),
                    &vec_scale(&a.mul(inner, &x, &y), &rb.weight),
                );
                report.compare(&cond, &[i, j], lhs, r.apply(&inside));
            }
        }
    }
    Ok(report)
}

/// R(x)∗R(y) = R(R(x)∗y + x∗R(y) + λx∗y) with Rα = αR, Rβ = βR.
pub fn rota_baxter_check_single(b: &BiHomAlgebra, rb: &RotaBaxterData) -> Result<CheckReport> {
    if rb.r.dim() != b.dim {
        return Err(Error::DimensionMismatch(format!("operator is {}-dimensional, algebra {}", rb.r.dim(), b.dim)));
    }
    let r = &rb.r;
    let mut report = CheckReport::new();
    report.compare_maps("Rα = αR", &r.compose(&b.alpha), &b.alpha.compose(r));
    report.compare_maps("Rβ = βR", &r.compose(&b.beta), &b.beta.compose(r));
    for i in 0..b.dim {
        for j in 0..b.dim {
            let (x, y) = (unit(b.dim, i), unit(b.dim, j));
            let (rx, ry) = (r.image(i), r.image(j));
            let inside = vec_add(&vec_add(&b.mul(&rx, &y), &b.mul(&x, &ry)), &vec_scale(&b.mul(&x, &y), &rb.weight));
            report.compare("R(x)∗R(y) = R(R(x)∗y + x∗R(y) + λx∗y)", &[i, j], b.mul(&rx, &ry), r.apply(&inside));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RbInduced {
    pub candidate: Candidate,
    /// The Rota–Baxter identity on the single product.
    pub precondition: CheckReport,
}

/// x⊣y = x∗R(y), x⊢y = R(x)∗y, x⊥y = λx∗y.
pub fn rb_induced(b: &BiHomAlgebra, rb: &RotaBaxterData) -> Result<RbInduced> {
    let precondition = rota_baxter_check_single(b, rb)?;
    let n = b.dim;
    let r = &rb.r;
    let left = tensor_from_fn(n, Role::Left, |i, j| b.mul(&unit(n, i), &r.image(j)));
    let right = tensor_from_fn(n, Role::Right, |i, j| b.mul(&r.image(i), &unit(n, j)));
    let middle = tensor_from_fn(n, Role::Middle, |i, j| vec_scale(&b.mu.basis_product(i, j), &rb.weight));
    let algebra = BiHomTrialgebra::from_parts(format!("rb({})", b.name), [left, right, middle], b.alpha.clone(), b.beta.clone())?;
    Ok(RbInduced { candidate: Candidate::new(algebra), precondition })
}

/// The two-dimensional algebra carrying the weight-λ operator R = −λ·id.
pub fn rb_example_algebra() -> BiHomTrialgebra {
    let mut a = BiHomTrialgebra::zero("RB example", 2);
    let one = Scalar::one();
    a.left.set(0, 1, 0, one.clone());
    a.left.set(1, 0, 0, one.clone());
    a.right.set(0, 1, 0, one.clone());
    a.middle.set(0, 1, 0, one.clone());
    a.middle.set(1, 1, 0, one);
    a.alpha = LinearMap::elementary(2, 0, 1);
    a.beta = LinearMap::elementary(2, 0, 1);
    a
}

pub fn rb_example_operator(weight: &Scalar) -> RotaBaxterData {
    RotaBaxterData { r: LinearMap::scalar(2, &-weight), weight: weight.clone() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapHypotheses {
    pub alpha_involution: bool,
    pub beta_involution: bool,
    pub mutually_inverse: bool,
}

impl SwapHypotheses {
    pub fn all(&self) -> bool {
        self.alpha_involution && self.beta_involution && self.mutually_inverse
    }
}

/// The algebra with α and β exchanged, and which of α² = id, β² = id,
/// αβ = βα = id hold.
pub fn swap_maps(a: &BiHomTrialgebra) -> (BiHomTrialgebra, SwapHypotheses) {
    let mut out = a.clone();
    std::mem::swap(&mut out.alpha, &mut out.beta);
    out.name = format!("swap({})", a.name);
    let hyp = SwapHypotheses {
        alpha_involution: a.alpha.compose(&a.alpha).is_identity(),
        beta_involution: a.beta.compose(&a.beta).is_identity(),
        mutually_inverse: a.alpha.compose(&a.beta).is_identity() && a.beta.compose(&a.alpha).is_identity(),
    };
    (out, hyp)
}

/// (⊣, ⊥, ∗) with x∗y = x⊢y + x⊥y, read as (left, right, middle).
pub fn sum_middle_right(a: &BiHomTrialgebra) -> Candidate {
    let one = Scalar::one();
    let star = a.right.combine(&one, &a.middle, &one).with_role(Role::Middle);
    let right = a.middle.clone().with_role(Role::Right);
    let out = BiHomTrialgebra::from_parts(
        format!("sum_middle_right({})", a.name),
        [a.left.clone(), right, star],
        a.alpha.clone(),
        a.beta.clone(),
    )
    .expect("same dimension");
    Candidate::new(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorReport {
    pub pair: BracketPair,
    /// [x,y]∗β(z) = [x∗z, β(y)] + [α(x), y∗z]
    pub beta_form: CheckReport,
    /// [x,y]∗αβ(z) = [x∗z, β(y)] + [α(x), y∗z]
    pub alpha_beta_form: CheckReport,
}

/// x∗y = x⊣y − y⊢x and [x,y] = x⊥y − y⊥x, with both forms of the identity.
pub fn commutator_construct(a: &BiHomTrialgebra) -> CommutatorReport {
    let n = a.dim;
    let star = tensor_from_fn(n, Role::Left, |i, j| {
        vec_sub(&a.left.basis_product(i, j), &a.right.basis_product(j, i))
    });
    let bracket = tensor_from_fn(n, Role::Middle, |i, j| {
        vec_sub(&a.middle.basis_product(i, j), &a.middle.basis_product(j, i))
    });
    let ab = a.twist();
    let mut beta_form = CheckReport::new();
    let mut alpha_beta_form = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            let xy = bracket.basis_product(i, j);
            for k in 0..n {
                let rhs = vec_add(
                    &bracket.apply(&star.basis_product(i, k), &a.beta.image(j)),
                    &bracket.apply(&a.alpha.image(i), &star.basis_product(j, k)),
                );
                beta_form.compare(
                    "[x,y]∗β(z) = [x∗z,β(y)] + [α(x),y∗z]",
                    &[i, j, k],
                    star.apply(&xy, &a.beta.image(k)),
                    rhs.clone(),
                );
                alpha_beta_form.compare(
                    "[x,y]∗αβ(z) = [x∗z,β(y)] + [α(x),y∗z]",
                    &[i, j, k],
                    star.apply(&xy, &ab.image(k)),
                    rhs,
                );
            }
        }
    }
    CommutatorReport { pair: BracketPair { star, bracket }, beta_form, alpha_beta_form }
}

/// x∗y = x⊢y + x⊣y + x⊥y.
pub fn total_sum(a: &BiHomTrialgebra) -> BiHomAlgebra {
    let one = Scalar::one();
    let mu = a.left.combine(&one, &a.right, &one).combine(&one, &a.middle, &one).with_role(Role::Middle);
    BiHomAlgebra { name: format!("total({})", a.name), dim: a.dim, mu, alpha: a.alpha.clone(), beta: a.beta.clone() }
}

/// ξα = αξ, ξβ = βξ and ξ(ξ(x)•y) = ξ(x)•ξ(y) = ξ(x•ξ(y)) for each product.
pub fn averaging_check(a: &BiHomTrialgebra, xi: &LinearMap) -> Result<CheckReport> {
    check_dims(a, xi, "operator")?;
    let mut report = CheckReport::new();
    report.compare_maps("ξα = αξ", &xi.compose(&a.alpha), &a.alpha.compose(xi));
    report.compare_maps("ξβ = βξ", &xi.compose(&a.beta), &a.beta.compose(xi));
    for role in Role::ALL {
        averaging_identities(&mut report, role.symbol(), a.dim, xi, |x, y| a.mul(role, x, y));
    }
    Ok(report)
}

fn averaging_identities(
    report: &mut CheckReport,
    s: &str,
    n: usize,
    xi: &LinearMap,
    mul: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) {
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (unit(n, i), unit(n, j));
            let (xx, xy) = (xi.image(i), xi.image(j));
            let mid = mul(&xx, &xy);
            report.compare(&format!("ξ(ξ(x){s}y) = ξ(x){s}ξ(y)"), &[i, j], xi.apply(&mul(&xx, &y)), mid.clone());
            report.compare(&format!("ξ(x){s}ξ(y) = ξ(x{s}ξ(y))"), &[i, j], mid, xi.apply(&mul(&x, &xy)));
        }
    }
}

/// The averaging identities for one map on a single product.
pub fn averaging_check_single(b: &BiHomAlgebra, xi: &LinearMap) -> CheckReport {
    let mut report = CheckReport::new();
    averaging_identities(&mut report, "·", b.dim, xi, |x, y| b.mul(x, y));
    report
}

/// x⊣y = α(x)·y, x⊢y = x·β(y), x⊥y = α(x)·β(y).
pub fn averaging_induced(b: &BiHomAlgebra) -> Result<Candidate> {
    for (name, map) in [("α", &b.alpha), ("β", &b.beta)] {
        let r = averaging_check_single(b, map);
        if let Some(v) = r.violations.first() {
            return Err(Error::PreconditionFailed(format!(
                "{name} is not an averaging operator: {} fails at {:?}",
                v.condition.replace('ξ', name),
                v.witness.indices
            )));
        }
    }
    let n = b.dim;
    let left = tensor_from_fn(n, Role::Left, |i, j| b.mul(&b.alpha.image(i), &unit(n, j)));
    let right = tensor_from_fn(n, Role::Right, |i, j| b.mul(&unit(n, i), &b.beta.image(j)));
    let middle = tensor_from_fn(n, Role::Middle, |i, j| b.mul(&b.alpha.image(i), &b.beta.image(j)));
    let out = BiHomTrialgebra::from_parts(format!("avg({})", b.name), [left, right, middle], b.alpha.clone(), b.beta.clone())?;
    Ok(Candidate::new(out))
}
