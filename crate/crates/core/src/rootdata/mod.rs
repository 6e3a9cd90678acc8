//! Based root data with a pinned Frobenius action, Weyl groups and dominance.

mod cartan;
pub mod catalog;
mod weyl;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Signed;

pub use cartan::{is_cartan_matrix, product_cartan, CartanType};
pub use weyl::{longest_word, WeylGroup};

use crate::lattice::{self, dot, identity, mat_mul, mat_vec, sub, Mat, Quotient};
use crate::{Error, Result, Q};

/// Integer coordinates in the chosen basis of `X_•(T)`.
pub type Coweight = Vec<i64>;

/// How `X_•(T)` sits between the coroot and coweight lattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeSpec {
    Adjoint,
    SimplyConnected,
    /// Rows are basis vectors in fundamental-coweight coordinates.
    Basis(Mat),
    /// Simple coroots (vectors), simple roots (covectors) and the matrix of `σ`, given directly.
    Explicit { coroots: Mat, roots: Mat, sigma: Mat },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub label: String,
    pub factors: Vec<CartanType>,
    pub lattice: LatticeSpec,
    /// `sigma[i]` is the image of simple root `i` (0-based, global numbering).
    pub sigma: Vec<usize>,
}

impl GroupSpec {
    pub fn new(label: &str, factors: &[CartanType], lattice: LatticeSpec, sigma: &[usize]) -> Self {
        GroupSpec {
            label: label.into(),
            factors: factors.to_vec(),
            lattice,
            sigma: sigma.to_vec(),
        }
    }

    /// Split form: `σ` trivial.
    pub fn split(label: &str, factors: &[CartanType], lattice: LatticeSpec) -> Self {
        let r = factors.iter().map(|t| t.rank()).sum();
        Self::new(label, factors, lattice, &(0..r).collect::<Vec<_>>())
    }
}

/// Class of a coweight in `X_•(T)_σ`. Equality compares the canonical quotient key.
#[derive(Clone, Debug)]
pub struct CoinvariantClass {
    pub key: Vec<i64>,
    pub representative: Coweight,
}

impl PartialEq for CoinvariantClass {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for CoinvariantClass {}
impl PartialOrd for CoinvariantClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CoinvariantClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

#[derive(Clone, Debug)]
pub struct BasedRootDatum {
    label: String,
    factors: Vec<CartanType>,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    cartan: Mat,
    coroots: Vec<Coweight>,
    roots: Vec<Vec<i64>>,
    sigma_perm: Vec<usize>,
    sigma: Mat,
    sigma_order: usize,
    center: Vec<Coweight>,
    two_rho: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    coinvariants: Quotient,
    pi1: Quotient,
    pi1_sigma: Quotient,
}

impl BasedRootDatum {
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn factors(&self) -> &[CartanType] {
        &self.factors
    }
    /// Rank of `X_•(T)`.
    pub fn rank(&self) -> usize {
        self.sigma.len()
    }
    pub fn semisimple_rank(&self) -> usize {
        self.cartan.len()
    }
    pub fn cartan(&self) -> &Mat {
        &self.cartan
    }
    pub fn coroots(&self) -> &[Coweight] {
        &self.coroots
    }
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }
    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma_perm
    }
    pub fn sigma_matrix(&self) -> &Mat {
        &self.sigma
    }
    /// Order of `σ` on `X_•(T)`.
    pub fn sigma_order(&self) -> usize {
        self.sigma_order
    }
    /// Basis of `X_•(Z_G)`.
    pub fn center_basis(&self) -> &[Coweight] {
        &self.center
    }
    /// `2ρ` as a covector.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }
    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }
    /// Positive coroots in simple-coroot coordinates.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn check(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::Precondition(format!(
                "coweight {x:?} has length {} but {} has rank {}",
                x.len(),
                self.label,
                self.rank()
            )));
        }
        Ok(())
    }

    /// `<alpha_i, x>`.
    pub fn pair(&self, i: usize, x: &[i64]) -> i64 {
        dot(&self.roots[i], x)
    }

    /// Pairings with all simple roots.
    pub fn dynkin(&self, x: &[i64]) -> Vec<i64> {
        self.roots.iter().map(|a| dot(a, x)).collect()
    }

    /// Some coweight with the given pairings, if one exists.
    pub fn lift_dynkin(&self, p: &[i64]) -> Option<Coweight> {
        crate::lattice::solve_integer(&self.roots, self.roots.len(), self.rank(), p)
    }

    pub fn dynkin_q(&self, x: &[Q]) -> Vec<Q> {
        self.roots.iter().map(|a| qdot(a, x)).collect()
    }

    /// `Σ c_i alpha_i^vee`.
    pub fn coroot_combination(&self, c: &[i64]) -> Coweight {
        let mut x = vec![0; self.rank()];
        for (ci, a) in c.iter().zip(&self.coroots) {
            for (xk, ak) in x.iter_mut().zip(a) {
                *xk += ci * ak;
            }
        }
        x
    }

    /// `Σ c_i alpha_i` as a covector.
    pub fn root_combination(&self, c: &[i64]) -> Vec<i64> {
        let mut x = vec![0; self.rank()];
        for (ci, a) in c.iter().zip(&self.roots) {
            for (xk, ak) in x.iter_mut().zip(a) {
                *xk += ci * ak;
            }
        }
        x
    }

    pub fn sigma_apply(&self, x: &[i64]) -> Coweight {
        mat_vec(&self.sigma, x)
    }

    pub fn sigma_apply_q(&self, x: &[Q]) -> Vec<Q> {
        self.sigma.iter().map(|row| qdot(row, x)).collect()
    }

    /// `Σ_{i<m} σ^i(x)` with `m` the order of `σ`.
    pub fn norm(&self, x: &[i64]) -> Coweight {
        let mut acc = x.to_vec();
        let mut y = x.to_vec();
        for _ in 1..self.sigma_order {
            y = self.sigma_apply(&y);
            acc = lattice::add(&acc, &y);
        }
        acc
    }

    /// Orbits of `σ` on simple roots, each listed from its least element along `σ`.
    pub fn sigma_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.semisimple_rank()];
        let mut out = Vec::new();
        for i in 0..self.semisimple_rank() {
            if seen[i] {
                continue;
            }
            let mut orbit = vec![i];
            seen[i] = true;
            let mut j = self.sigma_perm[i];
            while j != i {
                seen[j] = true;
                orbit.push(j);
                j = self.sigma_perm[j];
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_dominant(&self, x: &[i64]) -> bool {
        self.roots.iter().all(|a| dot(a, x) >= 0)
    }

    pub fn is_dominant_q(&self, x: &[Q]) -> bool {
        self.roots.iter().all(|a| !qdot(a, x).is_negative())
    }

    /// Coefficients `c` with `x = Σ c_i alpha_i^vee`, if `x` lies in the rational coroot span.
    pub fn coroot_coordinates(&self, x: &[i64]) -> Option<Vec<Q>> {
        let a: Vec<Vec<Q>> = (0..self.rank())
            .map(|k| self.coroots.iter().map(|c| Q::from(c[k])).collect())
            .collect();
        let b: Vec<Q> = x.iter().map(|&v| Q::from(v)).collect();
        lattice::solve_rational(&a, &b)
    }

    /// Coefficients of the projection of `x` to the coroot span (modulo the center).
    pub fn semisimple_coordinates(&self, x: &[i64]) -> Vec<Q> {
        let r = self.semisimple_rank();
        // Σ_i k_i <alpha_j, alpha_i^vee> = <alpha_j, x>
        let a: Vec<Vec<Q>> = (0..r)
            .map(|j| (0..r).map(|i| Q::from(self.cartan[i][j])).collect())
            .collect();
        let b: Vec<Q> = self.dynkin(x).into_iter().map(Q::from).collect();
        lattice::solve_rational(&a, &b).expect("Cartan matrix is invertible")
    }

    /// `λ ⪯ μ`: `μ − λ` is a non-negative integer combination of simple coroots.
    pub fn dominance_leq(&self, lambda: &[i64], mu: &[i64]) -> bool {
        match self.coroot_coordinates(&sub(mu, lambda)) {
            Some(c) => c.iter().all(|v| v.is_integer() && !v.is_negative()),
            None => false,
        }
    }

    /// `<ρ, x>`.
    pub fn rho_pair(&self, x: &[i64]) -> Q {
        Q::new(dot(&self.two_rho, x), 2)
    }

    pub fn rho_pair_q(&self, x: &[Q]) -> Q {
        qdot(&self.two_rho, x) / Q::from(2)
    }

    pub fn reflect(&self, i: usize, x: &[i64]) -> Coweight {
        let p = self.pair(i, x);
        x.iter().zip(&self.coroots[i]).map(|(a, c)| a - p * c).collect()
    }

    pub fn dominant_conjugate(&self, x: &[i64]) -> Coweight {
        let mut x = x.to_vec();
        while let Some(i) = (0..self.semisimple_rank()).find(|&i| self.pair(i, &x) < 0) {
            x = self.reflect(i, &x);
        }
        x
    }

    pub fn dominant_conjugate_q(&self, x: &[Q]) -> Vec<Q> {
        let mut x = x.to_vec();
        loop {
            let d = self.dynkin_q(&x);
            let Some(i) = d.iter().position(|v| v.is_negative()) else { return x };
            for (xk, &ck) in x.iter_mut().zip(&self.coroots[i]) {
                *xk -= d[i] * Q::from(ck);
            }
        }
    }

    /// Coroot vector of a positive coroot given in simple-coroot coordinates.
    pub fn coroot_vector(&self, coeffs: &[i64]) -> Coweight {
        self.coroot_combination(coeffs)
    }

    pub fn weyl_group(&self, cap: usize) -> Result<WeylGroup> {
        WeylGroup::enumerate(self, cap)
    }

    pub fn coinvariant_quotient(&self) -> &Quotient {
        &self.coinvariants
    }

    pub fn coinvariant(&self, x: &[i64]) -> CoinvariantClass {
        CoinvariantClass {
            key: self.coinvariants.key(x),
            representative: x.to_vec(),
        }
    }

    pub fn same_coinvariant(&self, x: &[i64], y: &[i64]) -> bool {
        self.coinvariants.same_class(x, y)
    }

    /// Dominance of a class: `<x, Σ_i σ^i(alpha)> ≥ 0` for every simple root.
    pub fn class_is_dominant(&self, x: &[i64]) -> bool {
        self.is_dominant(&self.norm(x))
    }

    /// Dominant classes `λ_σ` with `λ_σ ⪯ μ_σ`, highest first.
    pub fn coinvariant_dominants_below(&self, mu: &[i64]) -> Result<Vec<CoinvariantClass>> {
        self.check(mu)?;
        if !self.is_dominant(mu) {
            return Err(Error::Precondition(format!("{mu:?} is not dominant")));
        }
        let k = self.semisimple_coordinates(mu);
        let orbits = self.sigma_orbits();
        let bounds: Vec<i64> = orbits
            .iter()
            .map(|o| o.iter().map(|&i| k[i]).sum::<Q>().floor().to_integer())
            .collect();
        let total: u128 = bounds.iter().map(|&b| (b + 1) as u128).product();
        if total > 5_000_000 {
            return Err(Error::Cap(format!("{total} candidate classes below {mu:?}")));
        }
        let mut seen = BTreeSet::new();
        let mut out: Vec<(i64, CoinvariantClass)> = Vec::new();
        let mut c = vec![0i64; orbits.len()];
        loop {
            let mut coeff = vec![0; self.semisimple_rank()];
            for (o, &co) in orbits.iter().zip(&c) {
                coeff[o[0]] = co;
            }
            let lambda = sub(mu, &self.coroot_combination(&coeff));
            if self.class_is_dominant(&lambda) {
                let class = self.coinvariant(&lambda);
                if seen.insert(class.key.clone()) {
                    out.push((c.iter().sum(), class));
                }
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == c.len() {
                    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
                    return Ok(out.into_iter().map(|(_, c)| c).collect());
                }
                if c[pos] < bounds[pos] {
                    c[pos] += 1;
                    break;
                }
                c[pos] = 0;
                pos += 1;
            }
        }
    }

    /// `π₁(G) = X_•(T)/<Δ^vee>`.
    pub fn pi1(&self) -> &Quotient {
        &self.pi1
    }

    /// `π₁(G)_σ`, with projection given by [`Quotient::key`].
    pub fn pi1_coinvariants(&self) -> &Quotient {
        &self.pi1_sigma
    }

    pub fn kappa(&self, x: &[i64]) -> Vec<i64> {
        self.pi1_sigma.key(x)
    }

    /// `Z_G` is connected iff the root lattice is saturated in `X^•(T)`.
    pub fn center_is_connected(&self) -> bool {
        let r = self.semisimple_rank();
        let s = lattice::smith(&self.roots, r, self.rank());
        s.diag.iter().all(|&d| d == 1)
    }

    pub fn is_central(&self, x: &[i64]) -> bool {
        self.roots.iter().all(|a| dot(a, x) == 0)
    }
}

pub(crate) fn qdot(a: &[i64], x: &[Q]) -> Q {
    a.iter().zip(x).map(|(&c, &v)| Q::from(c) * v).sum()
}

/// Positive roots in simple coordinates, closing the simple roots under reflections.
/// `pairing[i][j]` is the pairing of generator `j` with the dual of generator `i`.
fn positive_system(pairing: &Mat) -> Vec<Vec<i64>> {
    let r = pairing.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(b) = queue.pop() {
        if !found.insert(b.clone()) {
            continue;
        }
        for i in 0..r {
            let p: i64 = (0..r).map(|j| b[j] * pairing[i][j]).sum();
            let mut c = b.clone();
            c[i] -= p;
            if c.iter().all(|&v| v >= 0) && c.iter().any(|&v| v > 0) && !found.contains(&c) {
                queue.push(c);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = found.into_iter().collect();
    out.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    out
}

fn mat_pow_order(s: &Mat, limit: usize) -> Option<usize> {
    let n = s.len();
    let id = identity(n);
    let mut p = s.clone();
    for k in 1..=limit {
        if p == id {
            return Some(k);
        }
        p = mat_mul(&p, s, n);
    }
    None
}

pub fn build_root_datum(spec: &GroupSpec) -> Result<BasedRootDatum> {
    let cartan = product_cartan(&spec.factors);
    let r = cartan.len();
    let perm = &spec.sigma;
    if perm.len() != r {
        return Err(Error::Spec(format!(
            "sigma has {} entries but the Cartan type has rank {r}",
            perm.len()
        )));
    }
    let mut hit = vec![false; r];
    for &p in perm {
        if p >= r || hit[p] {
            return Err(Error::Spec(format!("sigma {perm:?} is not a permutation")));
        }
        hit[p] = true;
    }
    for i in 0..r {
        for j in 0..r {
            if cartan[perm[i]][perm[j]] != cartan[i][j] {
                return Err(Error::Spec(format!(
                    "sigma {perm:?} is not a diagram automorphism"
                )));
            }
        }
    }

    let (coroots, roots, sigma) = match &spec.lattice {
        LatticeSpec::Adjoint => from_basis(&cartan, perm, &identity(r))?,
        LatticeSpec::SimplyConnected => from_basis(&cartan, perm, &cartan)?,
        LatticeSpec::Basis(b) => from_basis(&cartan, perm, b)?,
        LatticeSpec::Explicit { coroots, roots, sigma } => {
            (coroots.clone(), roots.clone(), sigma.clone())
        }
    };
    let n = sigma.len();
    if coroots.len() != r || roots.len() != r {
        return Err(Error::Spec(format!("expected {r} simple roots and coroots")));
    }
    if sigma.iter().any(|row| row.len() != n)
        || coroots.iter().chain(&roots).any(|v| v.len() != n)
    {
        return Err(Error::Spec("inconsistent lattice dimensions".into()));
    }
    for i in 0..r {
        for j in 0..r {
            if dot(&roots[j], &coroots[i]) != cartan[i][j] {
                return Err(Error::Spec(format!(
                    "<alpha_{}, alpha_{}^vee> does not match the Cartan type",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    let s = lattice::smith(&sigma, n, n);
    if s.rank() != n || s.diag.iter().any(|&d| d != 1) {
        return Err(Error::Spec("sigma is not a lattice automorphism".into()));
    }
    for i in 0..r {
        if mat_vec(&sigma, &coroots[i]) != coroots[perm[i]] {
            return Err(Error::Spec(format!(
                "sigma does not send coroot {} to coroot {}",
                i + 1,
                perm[i] + 1
            )));
        }
        let pulled: Vec<i64> = (0..n).map(|k| (0..n).map(|l| roots[perm[i]][l] * sigma[l][k]).sum()).collect();
        if pulled != roots[i] {
            return Err(Error::Spec(format!("sigma does not preserve the pairing at root {}", i + 1)));
        }
    }
    let sigma_order = mat_pow_order(&sigma, 1000)
        .ok_or_else(|| Error::Spec("sigma has infinite order".into()))?;

    let center = lattice::kernel(&roots, r, n);
    let positive_roots = positive_system(&cartan);
    let cartan_t = lattice::transpose(&cartan, r, r);
    let positive_coroots = positive_system(&cartan_t);
    let mut two_rho = vec![0; n];
    for c in &positive_roots {
        for (i, &ci) in c.iter().enumerate() {
            for k in 0..n {
                two_rho[k] += ci * roots[i][k];
            }
        }
    }
    let sigma_minus_one: Vec<Vec<i64>> = (0..n)
        .map(|k| (0..n).map(|i| sigma[i][k] - i64::from(i == k)).collect())
        .collect();
    let coinvariants = Quotient::new(n, &sigma_minus_one);
    let pi1 = Quotient::new(n, &coroots);
    let mut gens = coroots.clone();
    gens.extend(sigma_minus_one);
    let pi1_sigma = Quotient::new(n, &gens);

    Ok(BasedRootDatum {
        label: spec.label.clone(),
        factors: spec.factors.clone(),
        cartan,
        coroots,
        roots,
        sigma_perm: perm.clone(),
        sigma,
        sigma_order,
        center,
        two_rho,
        positive_roots,
        positive_coroots,
        coinvariants,
        pi1,
        pi1_sigma,
    })
}

/// Lattice spanned by the rows of `basis` (fundamental-coweight coordinates).
fn from_basis(cartan: &Mat, perm: &[usize], basis: &Mat) -> Result<(Mat, Mat, Mat)> {
    let r = cartan.len();
    if basis.len() != r || basis.iter().any(|b| b.len() != r) {
        return Err(Error::Spec(format!("lattice basis must be {r}x{r}")));
    }
    let bt = lattice::transpose(basis, r, r);
    let in_lattice = |w: &[i64]| lattice::solve_integer(&bt, r, r, w);
    let s = lattice::smith(basis, r, r);
    if s.rank() != r {
        return Err(Error::Spec("lattice basis is singular".into()));
    }
    let mut coroots = Vec::new();
    for (i, row) in cartan.iter().enumerate() {
        let x = in_lattice(row).ok_or_else(|| {
            Error::Spec(format!("coroot {} is not in the lattice", i + 1))
        })?;
        coroots.push(x);
    }
    let roots: Mat = (0..r).map(|j| (0..r).map(|k| basis[k][j]).collect()).collect();
    let mut sigma = vec![vec![0; r]; r];
    for k in 0..r {
        let mut image = vec![0; r];
        for j in 0..r {
            image[perm[j]] = basis[k][j];
        }
        let y = in_lattice(&image).ok_or_else(|| Error::Spec("lattice is not sigma-stable".into()))?;
        for i in 0..r {
            sigma[i][k] = y[i];
        }
    }
    Ok((coroots, roots, sigma))
}

/// A basis of the lattice spanned by `generators` (vectors of length `r`).
pub fn basis_from_generators(generators: &Mat, r: usize) -> Mat {
    let m: Mat = (0..r).map(|i| generators.iter().map(|g| g[i]).collect()).collect();
    let s = lattice::smith(&m, r, generators.len());
    // columns of U^{-1} D span the same lattice
    (0..s.rank())
        .map(|j| (0..r).map(|i| s.u_inv[i][j] * s.diag[j]).collect())
        .collect()
}
