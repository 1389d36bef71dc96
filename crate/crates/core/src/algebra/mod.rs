//! Structure-constant model of a BiHom-associative trialgebra.

mod axioms;
mod coordinate;
mod document;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Scalar};

pub use axioms::{check_axioms, check_multiplicativity, full_report, AxiomId, AxiomReport, AxiomResult, Witness};
pub use coordinate::{check_coordinate_form, coordinate_profile};
pub use document::{
    parse_algebra, parse_operator, serialize_algebra, serialize_operator, AlgebraDoc, ProductEntry,
};
pub(crate) use document::{json_error, matrix_from_strings, matrix_to_strings, tensor_from_entries, tensor_to_entries};

/// One of the three products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Left,
    Right,
    Middle,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::Left, Role::Right, Role::Middle];

    pub fn symbol(self) -> &'static str {
        match self {
            Role::Left => "⊣",
            Role::Right => "⊢",
            Role::Middle => "⊥",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Role::Left => "left",
            Role::Right => "right",
            Role::Middle => "middle",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

/// `c[i][j][k]` is the coefficient of `e_k` in `e_i • e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulTensor {
    dim: usize,
    role: Role,
    c: Vec<Scalar>,
}

impl MulTensor {
    pub fn zero(dim: usize, role: Role) -> Self {
        MulTensor { dim, role, c: vec![Scalar::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let at = self.idx(i, j, k);
        self.c[at] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let at = self.idx(i, j, k);
        self.c[at] += v;
    }

    /// Coefficient vector of `e_i • e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let at = self.idx(i, j, 0);
        self.c[at..at + self.dim].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Nonzero constants as `(i, j, k, c)`, 0-based, in lexicographic order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(at, c)| (at / (n * n), (at / n) % n, at % n, c))
    }

    /// Bilinear extension; lengths are trusted.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let at = self.idx(i, j, 0);
                let row = &self.c[at..at + n];
                if row.iter().all(Scalar::is_zero) {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(row) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// Pointwise combination `a·self + b·other`.
    pub fn combine(&self, a: &Scalar, other: &MulTensor, b: &Scalar) -> MulTensor {
        let c = self.c.iter().zip(&other.c).map(|(x, y)| &(a * x) + &(b * y)).collect();
        MulTensor { dim: self.dim, role: self.role, c }
    }

    /// `x •' y = y • x`.
    pub fn opposite(&self) -> MulTensor {
        let n = self.dim;
        let mut t = MulTensor::zero(n, self.role);
        for (i, j, k, c) in self.nonzero() {
            t.set(j, i, k, c.clone());
        }
        t
    }
}

/// Square matrix whose column `i` holds the image of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    m: Matrix,
}

impl LinearMap {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "linear map needs a square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(LinearMap { m })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { m: Matrix::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        LinearMap { m: Matrix::zeros(n, n) }
    }

    pub fn scalar(n: usize, s: &Scalar) -> Self {
        LinearMap { m: Matrix::identity(n).scale(s) }
    }

    /// `E_qp`: sends `e_p` to `e_q` and every other basis vector to 0 (0-based).
    pub fn elementary(n: usize, q: usize, p: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m[(q, p)] = Scalar::one();
        LinearMap { m }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        LinearMap::new(Matrix::from_ints(rows)).expect("square literal")
    }

    /// Row-major flattening `(m_11, m_12, …, m_nn)`.
    pub fn from_flat(n: usize, v: Vec<Scalar>) -> Self {
        LinearMap { m: Matrix::from_entries(n, n, v).expect("n*n entries") }
    }

    pub fn flat(&self) -> &[Scalar] {
        self.m.entries()
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn entry(&self, j: usize, i: usize) -> &Scalar {
        &self.m[(j, i)]
    }

    pub fn image(&self, i: usize) -> Vec<Scalar> {
        self.m.column(i)
    }

    /// Lengths are trusted.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.m.mul_vec(v).expect("vector length matches map")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap { m: self.m.mul(&other.m).expect("equal dimensions") }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap { m: self.m.add(&other.m).expect("equal dimensions") }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap { m: self.m.sub(&other.m).expect("equal dimensions") }
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap { m: self.m.scale(s) }
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap { m: self.m.inverse()? })
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.m == Matrix::identity(self.dim())
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Compact text such as `E_12 + 2E_33` with 1-based indices.
    pub fn describe(&self) -> String {
        let n = self.dim();
        let mut terms = Vec::new();
        for q in 0..n {
            for p in 0..n {
                let c = &self.m[(q, p)];
                if c.is_zero() {
                    continue;
                }
                let coeff = if c.is_one() {
                    String::new()
                } else if (-c).is_one() {
                    "-".into()
                } else if c.is_real() {
                    c.to_string()
                } else {
                    format!("({c})")
                };
                terms.push(format!("{coeff}E_{}{}", q + 1, p + 1));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiHomTrialgebra {
    pub name: String,
    pub dim: usize,
    pub left: MulTensor,
    pub right: MulTensor,
    pub middle: MulTensor,
    pub alpha: LinearMap,
    pub beta: LinearMap,
}

impl BiHomTrialgebra {
    /// All products and both twists zero.
    pub fn zero(name: impl Into<String>, dim: usize) -> Self {
        BiHomTrialgebra {
            name: name.into(),
            dim,
            left: MulTensor::zero(dim, Role::Left),
            right: MulTensor::zero(dim, Role::Right),
            middle: MulTensor::zero(dim, Role::Middle),
            alpha: LinearMap::zero(dim),
            beta: LinearMap::zero(dim),
        }
    }

    pub fn from_parts(
        name: impl Into<String>,
        [left, right, middle]: [MulTensor; 3],
        alpha: LinearMap,
        beta: LinearMap,
    ) -> Result<Self> {
        let dim = alpha.dim();
        let dims = [left.dim(), right.dim(), middle.dim(), beta.dim()];
        if dims.iter().any(|&d| d != dim) {
            return Err(Error::DimensionMismatch(format!(
                "components have dimensions {dims:?} and {dim}"
            )));
        }
        Ok(BiHomTrialgebra {
            name: name.into(),
            dim,
            left: left.with_role(Role::Left),
            right: right.with_role(Role::Right),
            middle: middle.with_role(Role::Middle),
            alpha,
            beta,
        })
    }

    pub fn product(&self, role: Role) -> &MulTensor {
        match role {
            Role::Left => &self.left,
            Role::Right => &self.right,
            Role::Middle => &self.middle,
        }
    }

    pub fn product_mut(&mut self, role: Role) -> &mut MulTensor {
        match role {
            Role::Left => &mut self.left,
            Role::Right => &mut self.right,
            Role::Middle => &mut self.middle,
        }
    }

    /// `x • y` for the given product.
    pub fn evaluate(&self, role: Role, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "operands of length {} and {} in a {}-dimensional algebra",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        Ok(self.mul(role, x, y))
    }

    pub(crate) fn mul(&self, role: Role, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.product(role).apply(x, y)
    }

    /// `αβ`.
    pub fn twist(&self) -> LinearMap {
        self.alpha.compose(&self.beta)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// One failing instance of a named condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: String,
    pub witness: Witness,
}

/// Outcome of a map-level check: a flag plus every failing instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { holds: true, violations: Vec::new() }
    }

    pub fn fail(&mut self, condition: impl Into<String>, indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        self.holds = false;
        self.violations.push(Violation { condition: condition.into(), witness: Witness { indices, lhs, rhs } });
    }

    /// Compares two maps column by column; failing columns are 1-based.
    pub fn compare_maps(&mut self, condition: &str, lhs: &LinearMap, rhs: &LinearMap) {
        for i in 0..lhs.dim() {
            let (l, r) = (lhs.image(i), rhs.image(i));
            if l != r {
                self.fail(condition, vec![i + 1], l, r);
            }
        }
    }

    pub fn compare(&mut self, condition: &str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        if lhs != rhs {
            self.fail(condition, indices.iter().map(|i| i + 1).collect(), lhs, rhs);
        }
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.holds &= other.holds;
        self.violations.extend(other.violations);
    }
}
