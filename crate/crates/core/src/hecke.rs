//! The spherical Hecke algebra of `GL_n(F_q((t)))` for `n ≤ 3`, computed by counting
//! lattices, and its Satake transform.
//!
//! A left coset `gK` with `g` integral is the lattice `g O^n`; it has a unique upper
//! triangular representative with diagonal `t^{a_1}, …, t^{a_n}` and entries `g_ij`
//! (`i < j`) polynomials of degree `< a_i`. Every count below is a count of such
//! representatives, so no power series truncation is involved.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::repthy::weight_table;
use crate::rootdata::{build_root_datum, catalog, Coweight};
use crate::{Error, Result, Q};

/// `rational + sqrt_q · q^{1/2}`, an element of `Z[q^{-1}][q^{1/2}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub rational: Q,
    pub sqrt_q: Q,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { rational: Q::zero(), sqrt_q: Q::zero() }
    }

    pub fn int(k: i64) -> Self {
        Scalar { rational: Q::from(k), sqrt_q: Q::zero() }
    }

    /// `(q^{1/2})^k`.
    pub fn half_power(q: i64, k: i64) -> Self {
        let p = |e: i64| {
            if e >= 0 {
                Q::from(q.pow(e as u32))
            } else {
                Q::new(1, q.pow((-e) as u32))
            }
        };
        if k % 2 == 0 {
            Scalar { rational: p(k / 2), sqrt_q: Q::zero() }
        } else {
            Scalar { rational: Q::zero(), sqrt_q: p((k - 1).div_euclid(2)) }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.sqrt_q.is_zero()
    }

    pub fn mul(self, other: Self, q: i64) -> Self {
        Scalar {
            rational: self.rational * other.rational + self.sqrt_q * other.sqrt_q * Q::from(q),
            sqrt_q: self.rational * other.sqrt_q + self.sqrt_q * other.rational,
        }
    }

    pub fn scale(self, k: Q) -> Self {
        Scalar { rational: self.rational * k, sqrt_q: self.sqrt_q * k }
    }

    /// Canonical Laurent polynomial in `q^{1/2}`: at most one even and one odd power,
/// with coefficients prime to `q`.
    pub fn to_laurent(self, q: i64) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        let mut put = |x: Q, parity: i32| {
            if x.is_zero() {
                return;
            }
            // x = c·q^k with q ∤ c
            let (mut num, mut den) = (*x.numer(), *x.denom());
            let mut k = 0;
            while den % q == 0 {
                den /= q;
                k -= 1;
            }
            assert_eq!(den, 1, "denominator is not a power of q");
            while num % q == 0 {
                num /= q;
                k += 1;
            }
            out.insert(parity + 2 * k, num);
        };
        put(self.rational, 0);
        put(self.sqrt_q, 1);
        out
    }

    pub fn from_laurent(q: i64, terms: &BTreeMap<i32, i64>) -> Self {
        terms
            .iter()
            .fold(Scalar::zero(), |acc, (&k, &c)| acc + Scalar::half_power(q, k as i64).scale(Q::from(c)))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar { rational: self.rational + o.rational, sqrt_q: self.sqrt_q + o.sqrt_q }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self + (-o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rational: -self.rational, sqrt_q: -self.sqrt_q }
    }
}

fn accumulate(terms: &mut BTreeMap<Coweight, Scalar>, key: Coweight, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = terms.entry(key.clone()).or_insert_with(Scalar::zero);
    *e = *e + c;
    if e.is_zero() {
        terms.remove(&key);
    }
}

/// `Σ c_μ T_μ`, where `T_μ` is the characteristic function of `K ϖ^μ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub n: usize,
    pub q: i64,
    pub terms: BTreeMap<Coweight, Scalar>,
}

impl HeckeElement {
    pub fn zero(n: usize, q: i64) -> Self {
        HeckeElement { n, q, terms: BTreeMap::new() }
    }

    pub fn basis(n: usize, q: i64, mu: &[i64]) -> Self {
        Self::basis_scaled(n, q, mu, Scalar::int(1))
    }

    fn basis_scaled(n: usize, q: i64, mu: &[i64], c: Scalar) -> Self {
        let mut e = Self::zero(n, q);
        accumulate(&mut e.terms, mu.to_vec(), c);
        e
    }

    pub fn unit(n: usize, q: i64) -> Self {
        Self::basis(n, q, &vec![0; n])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), *c);
        }
        out
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut out = Self::zero(self.n, self.q);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), v.mul(c, self.q));
        }
        out
    }

    pub fn coefficient(&self, mu: &[i64]) -> Scalar {
        self.terms.get(mu).copied().unwrap_or_else(Scalar::zero)
    }
}

/// `Σ c_λ e^λ` in `Z[q^{±1/2}][X_•(T)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToralElement {
    pub n: usize,
    pub q: i64,
    pub terms: BTreeMap<Coweight, Scalar>,
}

impl ToralElement {
    pub fn zero(n: usize, q: i64) -> Self {
        ToralElement { n, q, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, q: i64) -> Self {
        let mut out = Self::zero(n, q);
        out.terms.insert(vec![0; n], Scalar::int(1));
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), *c);
        }
        out
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut out = Self::zero(self.n, self.q);
        for (k, v) in &self.terms {
            accumulate(&mut out.terms, k.clone(), v.mul(c, self.q));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.q);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let k: Coweight = a.iter().zip(b).map(|(s, t)| s + t).collect();
                accumulate(&mut out.terms, k, x.mul(*y, self.q));
            }
        }
        out
    }

    /// Invariance under permutation of coordinates.
    pub fn is_w0_invariant(&self) -> bool {
        self.terms.iter().all(|(lambda, c)| {
            (0..self.n.saturating_sub(1)).all(|i| {
                let mut s = lambda.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    /// `λ -> −λ`.
    pub fn invert(&self) -> Self {
        let mut out = Self::zero(self.n, self.q);
        for (k, c) in &self.terms {
            accumulate(&mut out.terms, k.iter().map(|x| -x).collect(), *c);
        }
        out
    }
}

/// Which identification of class functions with the Hecke algebra to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatakeConvention {
    /// Restriction to `Ĝφ` with `φ` the geometric Frobenius; matches geometric Satake.
    Geometric,
    /// Restriction to `Ĝσ`; sends `[V]` where the geometric one sends `[V^*]`.
    Arithmetic,
}

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[i64], b: &[i64], p: i64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64], sign: i64, p: i64) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0) + sign * b.get(i).copied().unwrap_or(0);
        *o = x.rem_euclid(p);
    }
    trim(out)
}

fn monomial(k: usize) -> Poly {
    let mut v = vec![0; k + 1];
    v[k] = 1;
    v
}

fn valuation(a: &[i64]) -> Option<usize> {
    a.iter().position(|&x| x != 0)
}

type PolyMatrix = Vec<Vec<Poly>>;

fn det(m: &PolyMatrix, rows: &[usize], cols: &[usize], p: i64) -> Poly {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc = Vec::new();
    for (k, &c) in cols.iter().enumerate() {
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det(m, &rows[1..], &sub_cols, p);
        let term = poly_mul(&m[rows[0]][c], &minor, p);
        acc = poly_add(&acc, &term, if k % 2 == 0 { 1 } else { -1 }, p);
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// Elementary divisor exponents, largest first, of a nonsingular polynomial matrix.
fn elementary_divisors(m: &PolyMatrix, p: i64) -> Coweight {
    let n = m.len();
    let mut d = vec![0i64; n + 1];
    for k in 1..=n {
        let s = subsets(n, k);
        d[k] = s
            .iter()
            .flat_map(|r| s.iter().map(move |c| (r, c)))
            .filter_map(|(r, c)| valuation(&det(m, r, c, p)))
            .min()
            .expect("matrix is nonsingular") as i64;
    }
    let mut e: Vec<i64> = (1..=n).map(|k| d[k] - d[k - 1]).collect();
    e.reverse();
    e
}

fn adjugate(m: &PolyMatrix, p: i64) -> PolyMatrix {
    let n = m.len();
    if n == 1 {
        return vec![vec![vec![1]]];
    }
    let mut out = vec![vec![Vec::new(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let rows: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let c = det(m, &rows, &cols, p);
            *entry = if (i + j) % 2 == 0 { c } else { poly_add(&[], &c, -1, p) };
        }
    }
    out
}

/// Nonnegative integer vectors of length `n` summing to `s`.
fn compositions(n: usize, s: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if s == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=s).rev() {
        for mut rest in compositions(n - 1, s - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn is_dominant(mu: &[i64]) -> bool {
    mu.windows(2).all(|w| w[0] >= w[1])
}

fn dominance_leq(lambda: &[i64], mu: &[i64]) -> bool {
    let mut a = 0;
    let mut b = 0;
    for (x, y) in lambda.iter().zip(mu) {
        a += x;
        b += y;
        if a > b {
            return false;
        }
    }
    a == b
}

fn two_rho_pair(lambda: &[i64]) -> i64 {
    let n = lambda.len() as i64;
    lambda.iter().enumerate().map(|(i, x)| (n - 1 - 2 * i as i64) * x).sum()
}

/// Counts for one total degree `s`: for each lattice `L ⊂ O^n` with `O^n/L` of length
/// `s`, its elementary divisors and the diagonal of its triangular representative.
#[derive(Clone, Debug, Default)]
struct Layer {
    /// `(type, diagonal) -> #representatives`
    counts: BTreeMap<(Coweight, Coweight), u64>,
}

/// `H(GL_n(F_q((t))), GL_n(F_q[[t]]))` with a bound on the lattices it will enumerate.
#[derive(Clone, Debug)]
pub struct GlHecke {
    n: usize,
    q: i64,
    /// Largest `|μ − μ_n|` whose cosets may be enumerated.
    pub window: i64,
    /// Largest number of lattices enumerated for one degree.
    pub cap: u64,
    layers: BTreeMap<i64, Layer>,
    structure: BTreeMap<(Coweight, Coweight), BTreeMap<Coweight, u64>>,
}

impl GlHecke {
    pub fn new(n: usize, q: i64, window: i64) -> Result<Self> {
        if !(1..=3).contains(&n) {
            return Err(Error::Precondition(format!("GL_{n}: only n ≤ 3 is supported")));
        }
        if ![2, 3, 5].contains(&q) {
            return Err(Error::Precondition(format!("q = {q}: only q ∈ {{2, 3, 5}} is supported")));
        }
        Ok(GlHecke { n, q, window, cap: 5_000_000, layers: BTreeMap::new(), structure: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    fn check_element(&self, f: &HeckeElement) -> Result<()> {
        if f.n != self.n || f.q != self.q {
            return Err(Error::Precondition(format!(
                "element of GL_{} over F_{} used with GL_{} over F_{}",
                f.n, f.q, self.n, self.q
            )));
        }
        for mu in f.terms.keys() {
            if mu.len() != self.n || !is_dominant(mu) {
                return Err(Error::Precondition(format!("{mu:?} is not a dominant coweight of GL_{}", self.n)));
            }
        }
        Ok(())
    }

    fn normalize(mu: &[i64]) -> (Coweight, i64) {
        let c = *mu.last().unwrap_or(&0);
        (mu.iter().map(|x| x - c).collect(), c)
    }

    fn coset_count(&self, diagonal: &[i64]) -> u64 {
        let n = self.n;
        let e: i64 = diagonal.iter().enumerate().map(|(i, a)| (n - 1 - i) as i64 * a).sum();
        (self.q as u64).saturating_pow(e as u32)
    }

    /// Calls `visit(g, diagonal)` on each triangular representative of degree `s`.
    fn for_each_lattice(&self, s: i64, mut visit: impl FnMut(&PolyMatrix, &[i64])) -> Result<()> {
        if s > self.window {
            return Err(Error::Cap(format!("degree {s} exceeds the enumeration window {}", self.window)));
        }
        let n = self.n;
        let diagonals = compositions(n, s);
        let total: u64 = diagonals.iter().map(|a| self.coset_count(a)).fold(0, u64::saturating_add);
        if total > self.cap {
            return Err(Error::Cap(format!("{total} lattices of degree {s} exceeds cap {}", self.cap)));
        }
        for a in diagonals {
            // slots (i, j, k): coefficient of t^k in g_ij, i < j, k < a_i
            let a_ref = &a;
            let slots: Vec<(usize, usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).flat_map(move |j| (0..a_ref[i] as usize).map(move |k| (i, j, k))))
                .collect();
            let mut digits = vec![0i64; slots.len()];
            loop {
                let mut g: PolyMatrix = vec![vec![Vec::new(); n]; n];
                for i in 0..n {
                    g[i][i] = monomial(a[i] as usize);
                }
                for (&(i, j, k), &c) in slots.iter().zip(&digits) {
                    if c != 0 {
                        let entry = &mut g[i][j];
                        if entry.len() <= k {
                            entry.resize(k + 1, 0);
                        }
                        entry[k] = c;
                    }
                }
                visit(&g, &a);
                let mut pos = 0;
                while pos < digits.len() {
                    digits[pos] += 1;
                    if digits[pos] < self.q {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == digits.len() {
                    break;
                }
            }
        }
        Ok(())
    }

    fn layer(&mut self, s: i64) -> Result<&Layer> {
        if !self.layers.contains_key(&s) {
            let mut layer = Layer::default();
            let q = self.q;
            self.for_each_lattice(s, |g, a| {
                let ty = elementary_divisors(g, q);
                *layer.counts.entry((ty, a.to_vec())).or_insert(0) += 1;
            })?;
            self.layers.insert(s, layer);
        }
        Ok(&self.layers[&s])
    }

    /// Number of left `K`-cosets in `K ϖ^μ K`.
    pub fn coset_number(&mut self, mu: &[i64]) -> Result<u64> {
        let (mu, _) = Self::normalize(mu);
        let s = mu.iter().sum();
        Ok(self.layer(s)?.counts.iter().filter(|((ty, _), _)| *ty == mu).map(|(_, c)| c).sum())
    }

    /// `(T_μ * T_ν)(ϖ^λ) = #{yK ⊂ Kϖ^μK : y^{-1}ϖ^λ ∈ Kϖ^νK}` for `μ, ν` with last entry 0.
    fn structure_constants(&mut self, mu: &[i64], nu: &[i64]) -> Result<BTreeMap<Coweight, u64>> {
        let key = (mu.to_vec(), nu.to_vec());
        if let Some(c) = self.structure.get(&key) {
            return Ok(c.clone());
        }
        let n = self.n;
        let q = self.q;
        let s_mu: i64 = mu.iter().sum();
        let s_nu: i64 = nu.iter().sum();
        if s_mu + s_nu > self.window {
            return Err(Error::Cap(format!(
                "product of degree {} exceeds the enumeration window {}",
                s_mu + s_nu,
                self.window
            )));
        }
        let top: Coweight = mu.iter().zip(nu).map(|(a, b)| a + b).collect();
        let targets: Vec<Coweight> = compositions(n, s_mu + s_nu)
            .into_iter()
            .filter(|l| is_dominant(l) && dominance_leq(l, &top))
            .collect();
        let mut out: BTreeMap<Coweight, u64> = BTreeMap::new();
        self.for_each_lattice(s_mu, |y, _| {
            if elementary_divisors(y, q) != mu {
                return;
            }
            let adj = adjugate(y, q);
            for lambda in &targets {
                let m: PolyMatrix = adj
                    .iter()
                    .map(|row| row.iter().zip(lambda).map(|(e, &l)| poly_mul(e, &monomial(l as usize), q)).collect())
                    .collect();
                let ty: Coweight = elementary_divisors(&m, q).iter().map(|x| x - s_mu).collect();
                if ty == nu {
                    *out.entry(lambda.clone()).or_insert(0) += 1;
                }
            }
        })?;
        self.structure.insert(key, out.clone());
        Ok(out)
    }

    /// `T_μ * T_ν`.
    pub fn convolve_basis(&mut self, mu: &[i64], nu: &[i64]) -> Result<HeckeElement> {
        let (m, cm) = Self::normalize(mu);
        let (v, cv) = Self::normalize(nu);
        let consts = self.structure_constants(&m, &v)?;
        let mut out = HeckeElement::zero(self.n, self.q);
        for (lambda, c) in consts {
            let shifted: Coweight = lambda.iter().map(|x| x + cm + cv).collect();
            accumulate(&mut out.terms, shifted, Scalar::int(c as i64));
        }
        Ok(out)
    }

    /// `(f * g)(x) = ∫ f(x y^{-1}) g(y) dy`, with `vol(K) = 1`.
    pub fn convolve(&mut self, f: &HeckeElement, g: &HeckeElement) -> Result<HeckeElement> {
        self.check_element(f)?;
        self.check_element(g)?;
        let mut out = HeckeElement::zero(self.n, self.q);
        for (mu, a) in &f.terms {
            for (nu, b) in &g.terms {
                let prod = self.convolve_basis(mu, nu)?;
                out = out.add(&prod.scale(a.mul(*b, self.q)));
            }
        }
        Ok(out)
    }

    /// `CT(T_μ)(ϖ^λ) = δ_B^{1/2}(ϖ^λ) · #{u ∈ U(F)/U(O) : ϖ^λ u ∈ K ϖ^μ K}`.
    pub fn satake_basis(&mut self, mu: &[i64]) -> Result<ToralElement> {
        if mu.len() != self.n || !is_dominant(mu) {
            return Err(Error::Precondition(format!("{mu:?} is not a dominant coweight of GL_{}", self.n)));
        }
        let (m, c) = Self::normalize(mu);
        let s = m.iter().sum();
        let q = self.q;
        let n = self.n;
        let layer = self.layer(s)?;
        let mut out = ToralElement::zero(n, q);
        for ((ty, diag), count) in &layer.counts {
            if *ty != m {
                continue;
            }
            let lambda: Coweight = diag.iter().map(|x| x + c).collect();
            let weight = Scalar::half_power(q, -two_rho_pair(&lambda)).scale(Q::from(*count as i64));
            accumulate(&mut out.terms, lambda, weight);
        }
        // triangularity: leading term q^{⟨ρ,μ⟩} e^μ, everything else strictly below
        assert_eq!(out.terms.get(mu).copied(), Some(Scalar::half_power(q, two_rho_pair(mu))), "leading term of CT(T_{mu:?})");
        for lambda in out.terms.keys() {
            let mut dom = lambda.clone();
            dom.sort_unstable_by(|a, b| b.cmp(a));
            assert!(dominance_leq(&dom, mu), "CT(T_{mu:?}) has {lambda:?} outside the weight polytope");
        }
        Ok(out)
    }

    pub fn satake_transform(&mut self, f: &HeckeElement) -> Result<ToralElement> {
        self.check_element(f)?;
        let mut out = ToralElement::zero(self.n, self.q);
        for (mu, c) in &f.terms {
            out = out.add(&self.satake_basis(mu)?.scale(*c));
        }
        Ok(out)
    }

    /// The Hecke element whose Satake transform is `x`, by peeling off dominance-maximal
    /// terms. `x` must be `W₀`-invariant.
    pub fn satake_inverse(&mut self, x: &ToralElement) -> Result<HeckeElement> {
        if !x.is_w0_invariant() {
            return Err(Error::Precondition("toral element is not W₀-invariant".into()));
        }
        let mut rest = x.clone();
        let mut out = HeckeElement::zero(self.n, self.q);
        while let Some(top) = rest.terms.keys().rev().find(|l| is_dominant(l)).cloned() {
            let lead = Scalar::half_power(self.q, -two_rho_pair(&top));
            let c = rest.terms[&top].mul(lead, self.q);
            let ct = self.satake_basis(&top)?.scale(-c);
            rest = rest.add(&ct);
            assert!(!rest.terms.contains_key(&top), "triangular inversion did not clear {top:?}");
            accumulate(&mut out.terms, top, c);
        }
        assert!(rest.terms.is_empty(), "W₀-invariant remainder without dominant terms");
        Ok(out)
    }

    /// The character of `V_μ` as a toral element.
    pub fn character(&self, mu: &[i64]) -> Result<ToralElement> {
        let spec = catalog::gl(self.n);
        let d = build_root_datum(&spec)?;
        let table = weight_table(&d, mu)?;
        let mut out = ToralElement::zero(self.n, self.q);
        for (lambda, m) in table.entries {
            accumulate(&mut out.terms, lambda, Scalar::int(m as i64));
        }
        Ok(out)
    }

    /// `Sat([V_μ])` in the chosen convention.
    pub fn satake_of_rep(&mut self, mu: &[i64], convention: SatakeConvention) -> Result<HeckeElement> {
        let chi = self.character(mu)?;
        let chi = match convention {
            SatakeConvention::Geometric => chi,
            SatakeConvention::Arithmetic => chi.invert(),
        };
        self.satake_inverse(&chi)
    }
}
