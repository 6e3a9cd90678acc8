//! Relative coroots, the determinant divisor of the twisted Chevalley restriction, and
//! genericity of Satake parameters.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::kottwitz::central_representative;
use crate::lattice::add;
use crate::repthy::{in_tate_lattice, restrict_sigma, WeightTable};
use crate::rootdata::{BasedRootDatum, Coweight};
use crate::{Error, Result, Q};

/// A positive relative coroot `α'` together with an absolute coroot whose norm is `α'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeCoroot {
    pub coroot: Coweight,
    /// `α'/2` is also a relative coroot.
    pub half_in_system: bool,
    pub representative: Coweight,
}

/// Norms `Σ_{i<m} σ^i(β^vee)` of the positive absolute coroots, deduplicated.
pub fn relative_coroots(d: &BasedRootDatum) -> Vec<RelativeCoroot> {
    let mut by_norm: BTreeMap<Coweight, Coweight> = BTreeMap::new();
    for c in d.positive_coroots() {
        let beta = d.coroot_combination(c);
        by_norm.entry(d.norm(&beta)).or_insert(beta);
    }
    let norms: Vec<Coweight> = by_norm.keys().cloned().collect();
    by_norm
        .into_iter()
        .map(|(coroot, representative)| {
            let half_in_system = coroot.iter().all(|x| x % 2 == 0)
                && norms.contains(&coroot.iter().map(|x| x / 2).collect());
            RelativeCoroot { coroot, half_in_system, representative }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FactorKind {
    /// `(e^{α'} − 1)^ζ`
    EMinusOne,
    /// `(e^{α'/2} + 1)^ζ`
    EHalfPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorFactor {
    pub kind: FactorKind,
    pub coroot: Coweight,
    pub zeta: u64,
}

/// The divisor, kept factored. Factors with `ζ = 0` are kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorFormula {
    pub factors: Vec<DivisorFactor>,
    /// A Tate weight of `V`; `None` when `V^Tate = 0`, in which case the divisor is empty.
    pub tate_weight: Option<Coweight>,
}

impl DivisorFormula {
    pub fn is_unit(&self) -> bool {
        self.factors.iter().all(|f| f.zeta == 0)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &DivisorFactor> {
        self.factors.iter().filter(|f| f.zeta > 0)
    }
}

/// Does `x ≡ t + n·a` in `X_•(T)_σ` for some integer `n ≥ 1`? Returns `n`.
fn multiple_above(d: &BasedRootDatum, x: &[i64], t: &[i64], a: &[i64]) -> Option<i64> {
    let quo = d.coinvariant_quotient();
    let inv = quo.invariants();
    let kx = quo.key(x);
    let kt = quo.key(t);
    let ka = quo.key(a);
    let j = (0..ka.len()).find(|&j| inv[j] == 0 && ka[j] != 0)?;
    let diff = kx[j] - kt[j];
    if diff % ka[j] != 0 {
        return None;
    }
    let n = diff / ka[j];
    if n < 1 {
        return None;
    }
    let shifted: Vec<i64> = t.iter().zip(a).map(|(ti, ai)| ti + n * ai).collect();
    (quo.key(&shifted) == kx).then_some(n)
}

/// `ζ_{α'} = Σ_{n ≥ 1} dim V|_{Ĝ^σ}(τ + n α'_σ)` for each positive relative coroot,
/// with `τ` the class of the Tate weights of `V`.
pub fn determinant_divisor(d: &BasedRootDatum, table: &WeightTable) -> DivisorFormula {
    let tate_weight = table.entries.keys().find(|l| in_tate_lattice(d, l)).cloned();
    let restricted = restrict_sigma(d, table);
    let factors = relative_coroots(d)
        .into_iter()
        .map(|rc| {
            let zeta = match &tate_weight {
                None => 0,
                Some(t) => restricted
                    .entries
                    .iter()
                    .filter(|(c, _)| multiple_above(d, &c.representative, t, &rc.representative).is_some())
                    .map(|(_, m)| m)
                    .sum(),
            };
            let kind = if rc.half_in_system { FactorKind::EHalfPlusOne } else { FactorKind::EMinusOne };
            DivisorFactor { kind, coroot: rc.coroot, zeta }
        })
        .collect();
    DivisorFormula { factors, tate_weight }
}

/// A point of the dual torus `T̂`, by its values on the basis of `X_•(T) = X^•(T̂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeParameter {
    pub coords: Vec<Q>,
    /// Order of `σ`.
    pub frobenius_power: usize,
}

impl SatakeParameter {
    pub fn new(d: &BasedRootDatum, coords: Vec<Q>) -> Result<Self> {
        if coords.len() != d.rank() {
            return Err(Error::Precondition(format!(
                "parameter has {} coordinates, expected {}",
                coords.len(),
                d.rank()
            )));
        }
        if coords.iter().any(|c| *c == Q::from(0)) {
            return Err(Error::Precondition("parameter has a zero coordinate".into()));
        }
        Ok(SatakeParameter { coords, frobenius_power: d.sigma_order() })
    }

    /// `λ(γ)` for a character `λ ∈ X^•(T̂)`.
    pub fn eval(&self, lambda: &[i64]) -> Q {
        let mut v = Q::from(1);
        for (c, &k) in self.coords.iter().zip(lambda) {
            v *= num_traits::pow::Pow::pow(*c, k as i32);
        }
        v
    }
}

/// `γ` avoids every factor of the divisor with positive exponent.
pub fn is_general(divisor: &DivisorFormula, gamma: &SatakeParameter) -> bool {
    divisor.nonzero().all(|f| match f.kind {
        FactorKind::EMinusOne => gamma.eval(&f.coroot) != Q::from(1),
        FactorKind::EHalfPlusOne => {
            let half: Vec<i64> = f.coroot.iter().map(|x| x / 2).collect();
            gamma.eval(&half) != Q::from(-1)
        }
    })
}

pub fn is_general_for(d: &BasedRootDatum, table: &WeightTable, gamma: &SatakeParameter) -> bool {
    is_general(&determinant_divisor(d, table), gamma)
}

/// `σ`-invariant central cocharacters, a basis of `X_•(Z_G)^σ`.
fn invariant_central(d: &BasedRootDatum) -> Vec<Coweight> {
    let z = d.center_basis();
    let k = z.len();
    let n = d.rank();
    if k == 0 {
        return Vec::new();
    }
    // kernel of (σ − 1) restricted to the span of z
    let cols: Vec<Coweight> = z.iter().map(|v| crate::lattice::sub(&d.sigma_apply(v), v)).collect();
    let m: Vec<Vec<i64>> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    crate::lattice::kernel(&m, n, k)
        .into_iter()
        .map(|c| {
            let mut v = vec![0; n];
            for (ci, zi) in c.iter().zip(z) {
                v = add(&v, &zi.iter().map(|x| x * ci).collect::<Vec<_>>());
            }
            v
        })
        .collect()
}

/// No noncentral dominant weight of `V|_{Ĝ^σ}` takes a root of unity on the norm of `γ`.
pub fn is_strongly_general(d: &BasedRootDatum, table: &WeightTable, gamma: &SatakeParameter) -> Result<bool> {
    for z in invariant_central(d) {
        let v = gamma.eval(&z);
        if v != Q::from(1) && v != Q::from(-1) {
            return Err(Error::Precondition(format!(
                "central image of γ has infinite order: value {v} on {z:?}"
            )));
        }
    }
    let restricted = restrict_sigma(d, table);
    for class in restricted.entries.keys() {
        let lambda = &class.representative;
        if !d.class_is_dominant(lambda) {
            continue;
        }
        // characters through the cocentre
        if central_representative(d, lambda).is_some() {
            continue;
        }
        let v = gamma.eval(&d.norm(lambda));
        // over Q the only roots of unity are ±1; v^n = 1 for some n > 1 iff v = ±1
        if v == Q::from(-1) || v == Q::from(1) {
            return Ok(false);
        }
    }
    Ok(true)
}
