//! Weight multiplicities, restriction to `Ĝ^σ` and Tate subspaces.
//!
//! Representations are of the dual group `Ĝ`: weights are coweights of `G`, the simple
//! roots of `Ĝ` are the simple coroots of `G`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::crystal::Crystal;
use crate::lattice::sub;
use crate::rootdata::{BasedRootDatum, CoinvariantClass, Coweight};
use crate::{Error, Result};

/// Multiplicities of the weights of a representation, keyed by coweight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub label: String,
    pub entries: BTreeMap<Coweight, u64>,
}

impl WeightTable {
    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn mult(&self, lambda: &[i64]) -> u64 {
        self.entries.get(lambda).copied().unwrap_or(0)
    }
}

/// Multiplicities pushed forward to `X_•(T)_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantWeightTable {
    pub entries: BTreeMap<CoinvariantClass, u64>,
}

impl CoinvariantWeightTable {
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Symmetrized root data of `Ĝ` used by the Freudenthal recursion.
struct DualForm {
    r: usize,
    /// `(β_i, β_j)` for simple roots of `Ĝ`.
    gram: Vec<Vec<i64>>,
    /// `(β_j, β_j) / 2`.
    half_norm: Vec<i64>,
    /// Positive roots of `Ĝ` in simple-root coordinates.
    roots: Vec<Vec<i64>>,
    /// Positive roots of `Ĝ` in Dynkin coordinates.
    roots_dynkin: Vec<Vec<i64>>,
}

impl DualForm {
    fn new(d: &BasedRootDatum) -> Self {
        let r = d.semisimple_rank();
        let a = d.cartan();
        // Cartan matrix of Ĝ: hat[i][j] = <β_i^vee, β_j> = a[j][i]
        let hat = |i: usize, j: usize| a[j][i];
        // symmetrizer: s_i hat[i][j] = s_j hat[j][i], as rationals then cleared
        let mut num = vec![0i64; r];
        let mut den = vec![1i64; r];
        for start in 0..r {
            if num[start] != 0 {
                continue;
            }
            num[start] = 1;
            den[start] = 1;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if j != i && hat(i, j) != 0 && num[j] == 0 {
                        // s_j = s_i hat[i][j] / hat[j][i]
                        num[j] = num[i] * hat(i, j);
                        den[j] = den[i] * hat(j, i);
                        stack.push(j);
                    }
                }
            }
        }
        let l = den.iter().fold(1i64, |acc, &x| num_integer::lcm(acc, x.abs()));
        let sym: Vec<i64> = (0..r).map(|i| num[i] * (l / den[i])).collect();
        let gram: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| sym[i] * hat(i, j)).collect()).collect();
        let roots = d.positive_coroots().to_vec();
        let roots_dynkin: Vec<Vec<i64>> = roots
            .iter()
            .map(|b| (0..r).map(|i| (0..r).map(|j| b[j] * a[j][i]).sum()).collect())
            .collect();
        let half_norm = sym;
        DualForm { r, gram, half_norm, roots, roots_dynkin }
    }

    /// `(λ, β)` for a weight in Dynkin coordinates and a root in simple coordinates.
    fn pair(&self, lambda: &[i64], beta: &[i64]) -> i64 {
        (0..self.r).map(|j| beta[j] * lambda[j] * self.half_norm[j]).sum()
    }
}

/// Weyl dimension formula for `V_μ` (Dynkin coordinates `mu`).
pub fn weyl_dimension(d: &BasedRootDatum, mu_dynkin: &[i64]) -> u128 {
    // product over positive roots α of G (= positive coroots of Ĝ)
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in d.positive_roots() {
        let top: i64 = a.iter().zip(mu_dynkin).map(|(c, m)| c * (m + 1)).sum();
        let bottom: i64 = a.iter().sum();
        num *= top as u128;
        den *= bottom as u128;
        let g = num_integer::gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

/// One weight of a Freudenthal table: Dynkin coordinates, depth below the highest
/// weight in simple coroots, multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinWeight {
    pub dynkin: Vec<i64>,
    pub depth: Vec<i64>,
    pub mult: u64,
}

/// Freudenthal's recursion over all weights of `V_μ`.
pub fn freudenthal(d: &BasedRootDatum, mu_dynkin: &[i64]) -> Vec<DynkinWeight> {
    let form = DualForm::new(d);
    let r = form.r;
    let a = d.cartan();
    assert!(mu_dynkin.iter().all(|&x| x >= 0), "highest weight must be dominant");

    // dominant weights below μ, reached by subtracting positive roots
    let mut dom: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    dom.insert(mu_dynkin.to_vec(), vec![0; r]);
    let mut stack = vec![mu_dynkin.to_vec()];
    while let Some(p) = stack.pop() {
        let depth = dom[&p].clone();
        for (b, bd) in form.roots.iter().zip(&form.roots_dynkin) {
            let q: Vec<i64> = p.iter().zip(bd).map(|(x, y)| x - y).collect();
            if q.iter().all(|&x| x >= 0) && !dom.contains_key(&q) {
                let dq: Vec<i64> = depth.iter().zip(b).map(|(x, y)| x + y).collect();
                dom.insert(q.clone(), dq);
                stack.push(q);
            }
        }
    }

    // full orbits
    let mut weights: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    for (p, depth) in &dom {
        let start = weights.len();
        index.insert(p.clone(), weights.len());
        weights.push((p.clone(), depth.clone()));
        let mut k = start;
        while k < weights.len() {
            let (p, depth) = weights[k].clone();
            for j in 0..r {
                if p[j] > 0 {
                    let q: Vec<i64> = (0..r).map(|i| p[i] - p[j] * a[j][i]).collect();
                    if !index.contains_key(&q) {
                        let mut dq = depth.clone();
                        dq[j] += p[j];
                        index.insert(q.clone(), weights.len());
                        weights.push((q, dq));
                    }
                }
            }
            k += 1;
        }
    }
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by_key(|&k| (weights[k].1.iter().sum::<i64>(), weights[k].0.clone()));
    let mut position = vec![0usize; weights.len()];
    for (pos, &k) in order.iter().enumerate() {
        position[k] = pos;
    }
    let sorted: Vec<&(Vec<i64>, Vec<i64>)> = order.iter().map(|&k| &weights[k]).collect();

    let nroots = form.roots.len();
    let mut mult = vec![0u64; sorted.len()];
    // acc[w * nroots + k] = Σ_{t≥1} (λ + tβ_k, β_k) m(λ + tβ_k)
    let mut acc = vec![0i128; sorted.len() * nroots];
    let mu_rho: Vec<i64> = mu_dynkin.iter().map(|m| m + 1).collect();
    let mut q = vec![0i64; r];
    for w in 0..sorted.len() {
        let (lambda, depth) = sorted[w];
        let mut total: i128 = 0;
        for k in 0..nroots {
            for i in 0..r {
                q[i] = lambda[i] + form.roots_dynkin[k][i];
            }
            if let Some(&j) = index.get(q.as_slice()) {
                let pj = position[j];
                let s = (form.pair(&q, &form.roots[k])) as i128 * mult[pj] as i128 + acc[pj * nroots + k];
                acc[w * nroots + k] = s;
                total += s;
            }
        }
        if w == 0 {
            mult[w] = 1;
            continue;
        }
        // |μ+ρ|² − |λ+ρ|² = 2(μ+ρ, κ) − |κ|² with κ = μ − λ
        let lin: i64 = (0..r).map(|j| depth[j] * mu_rho[j] * form.half_norm[j]).sum();
        let quad: i64 = (0..r)
            .map(|i| (0..r).map(|j| depth[i] * depth[j] * form.gram[i][j]).sum::<i64>())
            .sum();
        let denom = (2 * lin - quad) as i128;
        assert!(denom > 0);
        assert_eq!((2 * total) % denom, 0, "Freudenthal recursion is not integral");
        mult[w] = (2 * total / denom) as u64;
    }
    sorted
        .into_iter()
        .zip(mult)
        .filter(|(_, m)| *m > 0)
        .map(|((p, depth), m)| DynkinWeight { dynkin: p.clone(), depth: depth.clone(), mult: m })
        .collect()
}

/// Lifts depth coordinates to coweights: `μ − Σ c_i α_i^vee`.
pub fn lift(d: &BasedRootDatum, mu: &[i64], depth: &[i64]) -> Coweight {
    sub(mu, &d.coroot_combination(depth))
}

fn check_dominant(d: &BasedRootDatum, mu: &[i64]) -> Result<()> {
    d.check(mu)?;
    if !d.is_dominant(mu) {
        return Err(Error::Precondition(format!("{mu:?} is not dominant")));
    }
    Ok(())
}

/// Weight table of `V_μ` from the Freudenthal recursion.
pub fn freudenthal_table(d: &BasedRootDatum, mu: &[i64]) -> Result<WeightTable> {
    check_dominant(d, mu)?;
    let entries = freudenthal(d, &d.dynkin(mu))
        .into_iter()
        .map(|w| (lift(d, mu, &w.depth), w.mult))
        .collect();
    Ok(WeightTable { label: format!("V{mu:?}"), entries })
}

/// Dominant coweights with `dim V_μ ≤ max_dim`, one lift per dominant Dynkin vector.
pub fn dominant_up_to_dim(d: &BasedRootDatum, max_dim: u128) -> Vec<Coweight> {
    // dimension is increasing in each coordinate, so prune on the first overflow
    fn walk(d: &BasedRootDatum, p: &mut Vec<i64>, k: usize, max_dim: u128, out: &mut Vec<Coweight>) {
        if k == p.len() {
            if let Some(mu) = d.lift_dynkin(p) {
                out.push(mu);
            }
            return;
        }
        loop {
            if weyl_dimension(d, p) > max_dim {
                p[k] = 0;
                return;
            }
            walk(d, p, k + 1, max_dim, out);
            p[k] += 1;
        }
    }
    let mut p = vec![0i64; d.semisimple_rank()];
    let mut out = Vec::new();
    walk(d, &mut p, 0, max_dim, &mut out);
    out
}

pub const DEFAULT_CAP: u128 = 1_000_000;

/// Weight table of `V_μ` counted on the Littelmann path crystal.
pub fn weight_table(d: &BasedRootDatum, mu: &[i64]) -> Result<WeightTable> {
    check_dominant(d, mu)?;
    let b = Crystal::highest_weight(d, mu, DEFAULT_CAP)?;
    Ok(b.weight_table(&format!("V{mu:?}")))
}

/// Weight table of `V_{μ1} ⊗ V_{μ2}`.
pub fn tensor_weight_table(d: &BasedRootDatum, mu1: &[i64], mu2: &[i64]) -> Result<WeightTable> {
    let b1 = Crystal::highest_weight(d, mu1, DEFAULT_CAP)?;
    let b2 = Crystal::highest_weight(d, mu2, DEFAULT_CAP)?;
    let t = Crystal::tensor(&b1, &b2, DEFAULT_CAP)?;
    Ok(t.weight_table(&format!("V{mu1:?} x V{mu2:?}")))
}

pub fn restrict_sigma(d: &BasedRootDatum, table: &WeightTable) -> CoinvariantWeightTable {
    let mut entries: BTreeMap<CoinvariantClass, u64> = BTreeMap::new();
    for (lambda, &m) in &table.entries {
        let class = d.coinvariant(lambda);
        *entries.entry(class).or_insert(0) += m;
    }
    // representatives: lexicographically least coweight in each fiber
    let mut fixed = BTreeMap::new();
    for (mut class, m) in entries {
        let least = table
            .entries
            .keys()
            .filter(|l| d.coinvariant_quotient().key(l) == class.key)
            .min()
            .cloned()
            .expect("fiber is nonempty");
        class.representative = least;
        fixed.insert(class, m);
    }
    CoinvariantWeightTable { entries: fixed }
}

/// `λ ∈ Λ^Tate`: the `σ`-norm of `λ` is central.
pub fn in_tate_lattice(d: &BasedRootDatum, lambda: &[i64]) -> bool {
    d.is_central(&d.norm(lambda))
}

pub fn tate_dim_of(d: &BasedRootDatum, table: &WeightTable) -> u64 {
    table
        .entries
        .iter()
        .filter(|(l, _)| in_tate_lattice(d, l))
        .map(|(_, m)| m)
        .sum()
}

/// `dim V_μ^Tate`.
pub fn tate_dim(d: &BasedRootDatum, mu: &[i64]) -> Result<u64> {
    Ok(tate_dim_of(d, &weight_table(d, mu)?))
}
