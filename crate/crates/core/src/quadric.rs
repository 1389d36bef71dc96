//! Polynomials of low degree over ℚ(i) and exact zero sets of systems of
//! quadrics in one or two parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::{Rational, Scalar};

// ---------------------------------------------------------------------------
// Quadratic polynomials in m parameters (the obstruction).

/// `Σ q_{ab} t_a t_b + Σ l_a t_a` with `a ≤ b`, 0-based parameter indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadPoly {
    pub quad: BTreeMap<(usize, usize), Scalar>,
    pub lin: BTreeMap<usize, Scalar>,
}

impl QuadPoly {
    pub fn add_quad(&mut self, a: usize, b: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a.min(b), a.max(b));
        let e = self.quad.entry(key).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.quad.remove(&key);
        }
    }

    pub fn add_lin(&mut self, a: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.lin.entry(a).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.lin.remove(&a);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.quad.is_empty() && self.lin.is_empty()
    }

    fn leading(&self) -> Option<&Scalar> {
        self.quad.values().next().or_else(|| self.lin.values().next())
    }

    /// Scaled so the first coefficient is 1.
    pub fn normalized(&self) -> QuadPoly {
        let Some(lead) = self.leading() else { return self.clone() };
        let inv = lead.inv().expect("nonzero");
        QuadPoly {
            quad: self.quad.iter().map(|(k, v)| (*k, v * &inv)).collect(),
            lin: self.lin.iter().map(|(k, v)| (*k, v * &inv)).collect(),
        }
    }

    pub fn eval(&self, t: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (&(a, b), c) in &self.quad {
            s += &(c * &t[a]) * &t[b];
        }
        for (&a, c) in &self.lin {
            s += c * &t[a];
        }
        s
    }

    /// Coefficients keyed by monomial text (`t1^2`, `t1*t2`, `t1`), 1-based.
    pub fn coefficient_map(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.quad {
            let key = if a == b { format!("t{}^2", a + 1) } else { format!("t{}*t{}", a + 1, b + 1) };
            out.insert(key, c.to_string());
        }
        for (&a, c) in &self.lin {
            out.insert(format!("t{}", a + 1), c.to_string());
        }
        out
    }

    fn to_bi(&self) -> Bi {
        let mut p = Bi::default();
        for (&(a, b), c) in &self.quad {
            let mut e = [0u32; 2];
            e[a] += 1;
            e[b] += 1;
            p.add_term((e[0], e[1]), c.clone());
        }
        for (&a, c) in &self.lin {
            let mut e = [0u32; 2];
            e[a] += 1;
            p.add_term((e[0], e[1]), c.clone());
        }
        p
    }
}

fn term_text(c: &Scalar, mono: &str, first: bool) -> String {
    let (neg, mag) = if c.is_real() && c.re.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
    let coeff = if mono.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        String::new()
    } else if mag.is_real() {
        mag.to_string()
    } else {
        format!("({mag})")
    };
    let sign = match (first, neg) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    format!("{sign}{coeff}{mono}")
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.quad {
            let mono = if a == b { format!("t{}^2", a + 1) } else { format!("t{}*t{}", a + 1, b + 1) };
            f.write_str(&term_text(c, &mono, first))?;
            first = false;
        }
        for (&a, c) in &self.lin {
            f.write_str(&term_text(c, &format!("t{}", a + 1), first))?;
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials.

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Uni(Vec<Scalar>);

impl Uni {
    fn new(mut c: Vec<Scalar>) -> Uni {
        while c.last().is_some_and(Scalar::is_zero) {
            c.pop();
        }
        Uni(c)
    }

    fn constant(c: Scalar) -> Uni {
        Uni::new(vec![c])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// −1 for the zero polynomial.
    fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    fn lead(&self) -> &Scalar {
        self.0.last().expect("nonzero polynomial")
    }

    fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add(&self, o: &Uni) -> Uni {
        let n = self.0.len().max(o.0.len());
        Uni::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    fn sub(&self, o: &Uni) -> Uni {
        let n = self.0.len().max(o.0.len());
        Uni::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    fn mul(&self, o: &Uni) -> Uni {
        if self.is_zero() || o.is_zero() {
            return Uni::default();
        }
        let mut c = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Uni::new(c)
    }

    fn scale(&self, s: &Scalar) -> Uni {
        Uni::new(self.0.iter().map(|c| c * s).collect())
    }

    fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    fn divrem(&self, d: &Uni) -> (Uni, Uni) {
        let dd = d.degree();
        assert!(dd >= 0, "division by zero polynomial");
        let mut r = self.clone();
        let mut q = vec![Scalar::zero(); (self.degree() - dd + 1).max(0) as usize];
        let inv = d.lead().inv().expect("nonzero");
        while r.degree() >= dd {
            let shift = (r.degree() - dd) as usize;
            let c = r.lead() * &inv;
            let mut sub = vec![Scalar::zero(); shift];
            sub.extend(d.0.iter().map(|x| x * &c));
            q[shift] = c;
            r = r.sub(&Uni::new(sub));
        }
        (Uni::new(q), r)
    }

    fn monic(&self) -> Uni {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero");
        self.scale(&inv)
    }

    fn gcd(&self, o: &Uni) -> Uni {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            out.push_str(&term_text(c, &mono, first));
            first = false;
        }
        out
    }

    /// Distinct roots in ℚ(i) and the cofactor that has none.
    fn gaussian_roots(&self) -> (Vec<Scalar>, Uni) {
        let mut h = self.monic();
        let mut roots = BTreeSet::new();
        loop {
            if h.degree() <= 0 {
                break;
            }
            if h.coeff(0).is_zero() {
                roots.insert(Scalar::zero());
                h = Uni::new(h.0[1..].to_vec());
                continue;
            }
            let found = match h.degree() {
                1 => Some(-&(&h.coeff(0) / &h.coeff(1))),
                2 => {
                    let (a, b, c) = (h.coeff(2), h.coeff(1), h.coeff(0));
                    let disc = &(&b * &b) - &(&(&Scalar::from_int(4) * &a) * &c);
                    disc.sqrt().map(|s| &(&(-&b) + &s) / &(&Scalar::from_int(2) * &a))
                }
                _ => rational_root_candidates(&h).into_iter().find(|r| h.eval(r).is_zero()),
            };
            let Some(r) = found else { break };
            let (q, rem) = h.divrem(&Uni::new(vec![-&r, Scalar::one()]));
            debug_assert!(rem.is_zero());
            roots.insert(r);
            h = q.monic();
        }
        (roots.into_iter().collect(), h)
    }
}

fn lcm_denominators(coeffs: &[Scalar]) -> BigInt {
    let mut l = BigInt::one();
    for c in coeffs {
        for r in [&c.re, &c.im] {
            l = l.lcm(r.denom());
        }
    }
    l
}

type GaussInt = (BigInt, BigInt);

const NORM_LIMIT: u64 = 1 << 40;

/// All Gaussian integers dividing `z`, including associates.
fn gaussian_divisors(z: &GaussInt) -> Option<Vec<GaussInt>> {
    let norm = (&z.0 * &z.0 + &z.1 * &z.1).to_u64()?;
    if norm == 0 || norm > NORM_LIMIT {
        return None;
    }
    let mut ds = Vec::new();
    let mut k = 1u64;
    while k * k <= norm {
        if norm % k == 0 {
            ds.push(k);
            ds.push(norm / k);
        }
        k += 1;
    }
    let mut out = BTreeSet::new();
    for d in ds {
        let mut u = 0u64;
        while u * u <= d {
            let rest = d - u * u;
            let v = (rest as f64).sqrt().round() as u64;
            for v in [v.saturating_sub(1), v, v + 1] {
                if v * v != rest {
                    continue;
                }
                for (su, sv) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                    let w: GaussInt = (BigInt::from(su) * BigInt::from(u), BigInt::from(sv) * BigInt::from(v));
                    // z / w = z·conj(w) / N(w)
                    let nw = &w.0 * &w.0 + &w.1 * &w.1;
                    let re = &z.0 * &w.0 + &z.1 * &w.1;
                    let im = &z.1 * &w.0 - &z.0 * &w.1;
                    if (&re % &nw).is_zero() && (&im % &nw).is_zero() {
                        out.insert(w);
                    }
                }
            }
            u += 1;
        }
    }
    Some(out.into_iter().collect())
}

/// Candidates `p/q` with `p | a_0`, `q | a_n` after clearing denominators.
fn rational_root_candidates(h: &Uni) -> Vec<Scalar> {
    let l = Rational::from_integer(lcm_denominators(&h.0));
    let to_gauss = |c: &Scalar| -> GaussInt {
        ((&c.re * &l).to_integer(), (&c.im * &l).to_integer())
    };
    let (Some(ps), Some(qs)) = (gaussian_divisors(&to_gauss(&h.coeff(0))), gaussian_divisors(&to_gauss(h.lead())))
    else {
        return Vec::new();
    };
    let g = |z: &GaussInt| Scalar::new(Rational::from_integer(z.0.clone()), Rational::from_integer(z.1.clone()));
    let mut out = BTreeSet::new();
    for p in &ps {
        for q in &qs {
            out.insert(&g(p) / &g(q));
        }
    }
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Bivariate polynomials in (t1, t2).

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Bi(BTreeMap<(u32, u32), Scalar>);

fn grlex(a: &(u32, u32)) -> (u32, u32) {
    (a.0 + a.1, a.0)
}

impl Bi {
    fn add_term(&mut self, e: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(e).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Scalar)>) -> Bi {
        let mut p = Bi::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> i32 {
        self.0.keys().map(|e| (e.0 + e.1) as i32).max().unwrap_or(-1)
    }

    fn coeff(&self, e: (u32, u32)) -> Scalar {
        self.0.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    fn leading(&self) -> Option<((u32, u32), &Scalar)> {
        self.0.iter().max_by_key(|(e, _)| grlex(e)).map(|(e, c)| (*e, c))
    }

    fn normalized(&self) -> Bi {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero");
                Bi(self.0.iter().map(|(e, c)| (*e, c * &inv)).collect())
            }
        }
    }

    fn sub(&self, o: &Bi) -> Bi {
        let mut p = self.clone();
        for (e, c) in &o.0 {
            p.add_term(*e, -c);
        }
        p
    }

    fn add_scaled(&self, o: &Bi, s: &Scalar) -> Bi {
        let mut p = self.clone();
        for (e, c) in &o.0 {
            p.add_term(*e, c * s);
        }
        p
    }

    fn mul(&self, o: &Bi) -> Bi {
        let mut p = Bi::default();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                p.add_term((a.0 + b.0, a.1 + b.1), x * y);
            }
        }
        p
    }

    fn swap(&self) -> Bi {
        Bi(self.0.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect())
    }

    fn eval(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let mut s = Scalar::zero();
        for (e, c) in &self.0 {
            let mut t = c.clone();
            for _ in 0..e.0 {
                t = &t * x;
            }
            for _ in 0..e.1 {
                t = &t * y;
            }
            s += t;
        }
        s
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &Bi) -> Option<Bi> {
        let (de, dc) = d.leading()?;
        let inv = dc.inv().expect("nonzero");
        let mut r = self.clone();
        let mut q = Bi::default();
        while let Some((re, rc)) = r.leading() {
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let e = (re.0 - de.0, re.1 - de.1);
            let c = rc * &inv;
            let t = Bi::from_terms([(e, c.clone())]);
            r = r.sub(&t.mul(d));
            q.add_term(e, c);
        }
        Some(q)
    }

    fn divides(&self, p: &Bi) -> bool {
        p.div_exact(self).is_some()
    }

    /// Coefficients as a polynomial in t2 over ℚ(i)[t1].
    fn in_y(&self) -> Vec<Uni> {
        let deg = self.0.keys().map(|e| e.1).max().map_or(0, |d| d as usize + 1);
        let mut cols = vec![Vec::<Scalar>::new(); deg];
        for (e, c) in &self.0 {
            let col = &mut cols[e.1 as usize];
            if col.len() <= e.0 as usize {
                col.resize(e.0 as usize + 1, Scalar::zero());
            }
            col[e.0 as usize] = c.clone();
        }
        cols.into_iter().map(Uni::new).collect()
    }

    fn at_x(&self, x: &Scalar) -> Uni {
        let mut c = Vec::new();
        for (e, v) in &self.0 {
            let mut t = v.clone();
            for _ in 0..e.0 {
                t = &t * x;
            }
            let k = e.1 as usize;
            if c.len() <= k {
                c.resize(k + 1, Scalar::zero());
            }
            c[k] += t;
        }
        Uni::new(c)
    }

    /// Irreducible factors over ℚ(i), normalized, with multiplicity.
    fn factor(&self) -> Vec<Bi> {
        match self.degree() {
            d if d <= 0 => Vec::new(),
            1 => vec![self.normalized()],
            2 => self.factor_quadratic().unwrap_or_else(|| vec![self.normalized()]),
            _ => vec![self.normalized()],
        }
    }

    fn factor_quadratic(&self) -> Option<Vec<Bi>> {
        let a = self.coeff((2, 0));
        let b = self.coeff((1, 1));
        let c = self.coeff((0, 2));
        let d = self.coeff((1, 0));
        let e = self.coeff((0, 1));
        let f = self.coeff((0, 0));
        if a.is_zero() && !c.is_zero() {
            return self.swap().factor_quadratic().map(|fs| fs.iter().map(|p| p.swap().normalized()).collect());
        }
        if a.is_zero() {
            // b·xy + d·x + e·y + f = b(x + e/b)(y + d/b) + (f − de/b)
            let eb = &e / &b;
            let db = &d / &b;
            if !(&f - &(&d * &eb)).is_zero() {
                return None;
            }
            let l1 = Bi::from_terms([((1, 0), Scalar::one()), ((0, 0), eb)]);
            let l2 = Bi::from_terms([((0, 1), Scalar::one()), ((0, 0), db)]);
            return Some(vec![l1.normalized(), l2.normalized()]);
        }
        // Discriminant in x: (b y + d)² − 4a(c y² + e y + f) = A y² + B y + C.
        let four_a = &Scalar::from_int(4) * &a;
        let two = Scalar::from_int(2);
        let big_a = &(&b * &b) - &(&four_a * &c);
        let big_b = &(&(&two * &b) * &d) - &(&four_a * &e);
        let big_c = &(&d * &d) - &(&four_a * &f);
        let (u, v) = if !big_a.is_zero() {
            let u = big_a.sqrt()?;
            let v = &big_b / &(&two * &u);
            if &v * &v != big_c {
                return None;
            }
            (u, v)
        } else {
            if !big_b.is_zero() {
                return None;
            }
            (Scalar::zero(), big_c.sqrt()?)
        };
        let two_a = &two * &a;
        let mut out = Vec::new();
        for s in [Scalar::one(), Scalar::from_int(-1)] {
            // x − ((−b ± u) y + (−d ± v)) / 2a
            let ry = &(&(-&b) + &(&s * &u)) / &two_a;
            let r0 = &(&(-&d) + &(&s * &v)) / &two_a;
            out.push(Bi::from_terms([((1, 0), Scalar::one()), ((0, 1), -ry), ((0, 0), -r0)]).normalized());
        }
        Some(out)
    }

    fn fmt_vars(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.0.iter().collect();
        terms.sort_by_key(|(e, _)| std::cmp::Reverse(grlex(e)));
        let mut out = String::new();
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mut mono = Vec::new();
            for (var, p) in [("t1", e.0), ("t2", e.1)] {
                match p {
                    0 => {}
                    1 => mono.push(var.to_string()),
                    _ => mono.push(format!("{var}^{p}")),
                }
            }
            out.push_str(&term_text(c, &mono.join("*"), k == 0));
        }
        out
    }
}

fn det(m: &[Vec<Uni>]) -> Uni {
    match m.len() {
        0 => Uni::constant(Scalar::one()),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Uni::default();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Uni>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Resultant with respect to t2, as a polynomial in t1.
fn resultant_y(f: &Bi, g: &Bi) -> Uni {
    let fc = f.in_y();
    let gc = g.in_y();
    let p = fc.len().saturating_sub(1);
    let q = gc.len().saturating_sub(1);
    let size = p + q;
    let mut m = vec![vec![Uni::default(); size]; size];
    for r in 0..q {
        for (k, c) in fc.iter().enumerate() {
            m[r][r + p - k] = c.clone();
        }
    }
    for r in 0..p {
        for (k, c) in gc.iter().enumerate() {
            m[q + r][r + q - k] = c.clone();
        }
    }
    if size == 0 {
        return Uni::constant(Scalar::one());
    }
    det(&m)
}

// ---------------------------------------------------------------------------
// Zero sets.

/// One piece of the zero set of a system in one or two parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Component {
    /// Every parameter value.
    Everything,
    /// Affine line `a·t1 + b·t2 + c = 0`, coefficients `[a, b, c]`.
    Line { equation: String, coefficients: Vec<String>, through_origin: bool },
    /// Irreducible conic over ℚ(i).
    Conic { equation: String, through_origin: bool },
    Point { t: Vec<String> },
    /// Any further common zeros lie over an algebraic extension of ℚ(i), with
    /// t1 a root of `t1_poly` and t2 a root of `t2_poly`.
    Algebraic { t1_poly: String, t2_poly: Option<String> },
}

fn point(t: &[Scalar]) -> Component {
    Component::Point { t: t.iter().map(Scalar::to_string).collect() }
}

/// Exact description of `{t ∈ ℚ(i)^m : every poly vanishes}` for m ≤ 2.
pub fn vanishing_set(m: usize, polys: &[QuadPoly]) -> Vec<Component> {
    assert!(m <= 2, "exact solving is limited to two parameters");
    let nonzero: Vec<Bi> = polys.iter().filter(|p| !p.is_zero()).map(QuadPoly::to_bi).collect();
    if nonzero.is_empty() {
        return vec![Component::Everything];
    }
    if m == 1 {
        // The single parameter is t1; swap it into the t2 slot to read it off.
        let unis: Vec<Uni> = nonzero.iter().map(|p| p.swap().at_x(&Scalar::zero())).collect();
        let g = unis.iter().fold(Uni::default(), |acc, p| acc.gcd(p));
        let (roots, rest) = g.gaussian_roots();
        let mut out: Vec<Component> = roots.iter().map(|r| point(std::slice::from_ref(r))).collect();
        if rest.degree() > 0 {
            out.push(Component::Algebraic { t1_poly: rest.fmt_in("t1"), t2_poly: None });
        }
        return out;
    }
    two_parameter_set(&nonzero)
}

fn two_parameter_set(polys: &[Bi]) -> Vec<Component> {
    let mut quotients: Vec<Bi> = polys.to_vec();
    let mut common = Vec::new();
    for f in polys[0].factor() {
        if quotients.iter().all(|q| f.divides(q)) {
            quotients = quotients.iter().map(|q| q.div_exact(&f).expect("checked")).collect();
            common.push(f);
        }
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut on_common = Vec::new();
    for f in &common {
        let key = f.fmt_vars();
        if !seen.insert(key.clone()) {
            continue;
        }
        on_common.push(f.clone());
        let through_origin = f.coeff((0, 0)).is_zero();
        if f.degree() == 1 {
            out.push(Component::Line {
                equation: format!("{key} = 0"),
                coefficients: [(1, 0), (0, 1), (0, 0)].iter().map(|&e| f.coeff(e).to_string()).collect(),
                through_origin,
            });
        } else {
            out.push(Component::Conic { equation: format!("{key} = 0"), through_origin });
        }
    }
    if quotients.iter().any(|q| q.degree() <= 0) {
        return out;
    }
    let f = quotients[0].clone();
    let rest = &quotients[1..];
    let f_factors = f.factor();
    let coprime = |g: &Bi| !g.is_zero() && f_factors.iter().all(|p| !p.divides(g));
    let mut partner = None;
    for c in 1..=32i64 {
        let mut g = Bi::default();
        let mut w = Scalar::one();
        for q in rest {
            g = g.add_scaled(q, &w);
            w = &w * &Scalar::from_int(c);
        }
        if coprime(&g) {
            partner = Some(g);
            break;
        }
    }
    let g = partner.expect("quotients have no common factor");
    let res = resultant_y(&f, &g);
    let (xs, x_rest) = res.gaussian_roots();
    let mut points = BTreeSet::new();
    let mut algebraic = Vec::new();
    for x in &xs {
        let h = quotients.iter().fold(Uni::default(), |acc, q| acc.gcd(&q.at_x(x)));
        let (ys, y_rest) = h.gaussian_roots();
        for y in ys {
            if on_common.iter().all(|c| !c.eval(x, &y).is_zero()) {
                points.insert(vec![x.clone(), y]);
            }
        }
        if y_rest.degree() > 0 {
            algebraic.push(Component::Algebraic {
                t1_poly: Uni::new(vec![-x, Scalar::one()]).fmt_in("t1"),
                t2_poly: Some(y_rest.fmt_in("t2")),
            });
        }
    }
    if x_rest.degree() > 0 {
        let (_, y_rest) = resultant_y(&f.swap(), &g.swap()).gaussian_roots();
        algebraic.push(Component::Algebraic {
            t1_poly: x_rest.fmt_in("t1"),
            t2_poly: Some(y_rest.fmt_in("t2")),
        });
    }
    out.extend(points.iter().map(|p| point(p)));
    out.extend(algebraic);
    out
}

/// Largest dimension of a linear subspace (through the origin) inside the
/// zero set of homogeneous-plus-linear quadrics, for m ≤ 2.
pub fn max_linear_subspace_dim(m: usize, polys: &[QuadPoly]) -> usize {
    assert!(m <= 2, "exact solving is limited to two parameters");
    let nonzero: Vec<&QuadPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return m;
    }
    if m == 1 {
        return 0;
    }
    // A line {s·v} lies in the zero set iff every quadratic form and every
    // linear form vanishes at v.
    let mut forms: Vec<Bi> = Vec::new();
    for p in &nonzero {
        let b = p.to_bi();
        let q = Bi(b.0.iter().filter(|(e, _)| e.0 + e.1 == 2).map(|(e, c)| (*e, c.clone())).collect());
        let l = Bi(b.0.iter().filter(|(e, _)| e.0 + e.1 == 1).map(|(e, c)| (*e, c.clone())).collect());
        forms.extend([q, l].into_iter().filter(|f| !f.is_zero()));
    }
    let candidates = projective_roots(&forms[0]);
    let found = candidates.iter().any(|(x, y)| forms.iter().all(|f| f.eval(x, y).is_zero()));
    usize::from(found)
}

/// Projective ℚ(i)-roots of a nonzero binary form of degree 1 or 2.
fn projective_roots(f: &Bi) -> Vec<(Scalar, Scalar)> {
    let mut out = Vec::new();
    if f.degree() == 1 {
        let (p, q) = (f.coeff((1, 0)), f.coeff((0, 1)));
        out.push((-q, p));
        return out;
    }
    let (a, b, c) = (f.coeff((2, 0)), f.coeff((1, 1)), f.coeff((0, 2)));
    if a.is_zero() {
        out.push((Scalar::one(), Scalar::zero()));
        if !(b.is_zero() && c.is_zero()) {
            out.push((-c, b));
        }
        return out;
    }
    let (roots, _) = Uni::new(vec![c, b, a]).gaussian_roots();
    out.extend(roots.into_iter().map(|x| (x, Scalar::one())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(quad: &[((usize, usize), i64)], lin: &[(usize, i64)]) -> QuadPoly {
        let mut p = QuadPoly::default();
        for &((a, b), c) in quad {
            p.add_quad(a, b, &Scalar::from_int(c));
        }
        for &(a, c) in lin {
            p.add_lin(a, &Scalar::from_int(c));
        }
        p
    }

    fn pt(x: i64, y: i64) -> Component {
        point(&[Scalar::from_int(x), Scalar::from_int(y)])
    }

    #[test]
    fn display_and_map() {
        let p = q(&[((0, 0), 1), ((0, 1), -2)], &[(1, 3)]);
        assert_eq!(p.to_string(), "t1^2 - 2t1*t2 + 3t2");
        assert_eq!(p.coefficient_map().get("t1*t2").unwrap(), "-2");
    }

    #[test]
    fn one_parameter_idempotent() {
        // t² − t = 0 → {0, 1}
        let p = q(&[((0, 0), 1)], &[(0, -1)]);
        let set = vanishing_set(1, std::slice::from_ref(&p));
        assert_eq!(set, vec![point(&[Scalar::zero()]), point(&[Scalar::one()])]);
        assert_eq!(max_linear_subspace_dim(1, &[p]), 0);
    }

    #[test]
    fn one_parameter_irrational() {
        // t1² = 0 has only the origin.
        let p = QuadPoly { quad: [((0, 0), Scalar::one())].into(), lin: BTreeMap::new() };
        assert_eq!(vanishing_set(1, &[p]), vec![point(&[Scalar::zero()])]);
    }

    #[test]
    fn two_parameters_common_line() {
        // t1² − t1 and t1·t2 − t2 share t1 − 1; quotients t1, t2 meet at the origin.
        let a = q(&[((0, 0), 1)], &[(0, -1)]);
        let b = q(&[((0, 1), 1)], &[(1, -1)]);
        let set = vanishing_set(2, &[a.clone(), b.clone()]);
        assert!(set.iter().any(|c| matches!(c, Component::Line { equation, through_origin: false, .. } if equation == "t1 - 1 = 0")));
        assert!(set.contains(&pt(0, 0)));
        assert_eq!(max_linear_subspace_dim(2, &[a, b]), 0);
    }

    #[test]
    fn two_parameters_line_through_origin() {
        // t1² and t1·t2: the line t1 = 0 lies in the set.
        let a = q(&[((0, 0), 1)], &[]);
        let b = q(&[((0, 1), 1)], &[]);
        assert_eq!(max_linear_subspace_dim(2, &[a.clone(), b.clone()]), 1);
        let set = vanishing_set(2, &[a, b]);
        assert_eq!(
            set,
            vec![Component::Line {
                equation: "t1 = 0".into(),
                coefficients: vec!["1".into(), "0".into(), "0".into()],
                through_origin: true
            }]
        );
    }

    #[test]
    fn two_parameters_isolated_points() {
        // t1² − t1 = 0 and t2² − t2 = 0: four points.
        let a = q(&[((0, 0), 1)], &[(0, -1)]);
        let b = q(&[((1, 1), 1)], &[(1, -1)]);
        let set = vanishing_set(2, &[a.clone(), b.clone()]);
        assert_eq!(set, vec![pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]);
        assert_eq!(max_linear_subspace_dim(2, &[a, b]), 0);
    }

    #[test]
    fn conic_component() {
        // t1² + t2² − t1: the discriminant 1 − 4t2² in t1 is not a square.
        let a = q(&[((0, 0), 1), ((1, 1), 1)], &[(0, -1)]);
        let set = vanishing_set(2, &[a]);
        assert!(matches!(set.as_slice(), [Component::Conic { .. }]));
    }

    #[test]
    fn factor_over_gaussian_rationals() {
        // t1² + t2² = (t1 + i t2)(t1 − i t2)
        let p = Bi::from_terms([((2, 0), Scalar::one()), ((0, 2), Scalar::one())]);
        let fs = p.factor();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].mul(&fs[1]), p);
    }

    #[test]
    fn gaussian_roots_of_quartic() {
        // (x − 1)(x + 2)(x² + 1) → roots 1, −2, i, −i
        let f = Uni::new(vec![Scalar::from_int(-1), Scalar::one()])
            .mul(&Uni::new(vec![Scalar::from_int(2), Scalar::one()]))
            .mul(&Uni::new(vec![Scalar::one(), Scalar::zero(), Scalar::one()]));
        let (roots, rest) = f.gaussian_roots();
        assert_eq!(roots.len(), 4);
        assert_eq!(rest.degree(), 0);
        // x³ − 2 has no root in ℚ(i).
        let g = Uni::new(vec![Scalar::from_int(-2), Scalar::zero(), Scalar::zero(), Scalar::one()]);
        let (roots, rest) = g.gaussian_roots();
        assert!(roots.is_empty());
        assert_eq!(rest.degree(), 3);
    }

    #[test]
    fn resultant_detects_common_root() {
        // f = t2 − t1, g = t2 + t1 − 2 meet at (1, 1).
        let f = Bi::from_terms([((0, 1), Scalar::one()), ((1, 0), Scalar::from_int(-1))]);
        let g = Bi::from_terms([((0, 1), Scalar::one()), ((1, 0), Scalar::one()), ((0, 0), Scalar::from_int(-2))]);
        let r = resultant_y(&f, &g);
        assert!(r.eval(&Scalar::one()).is_zero());
        assert!(!r.eval(&Scalar::zero()).is_zero());
    }
}
