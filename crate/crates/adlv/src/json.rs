//! JSON shapes of everything the command line emits. Every type here round-trips.

use std::collections::BTreeMap;

use adlv_core::chevalley::{DivisorFormula, FactorKind};
use adlv_core::hecke::{HeckeElement, Scalar, ToralElement};
use adlv_core::repthy::WeightTable;
use adlv_core::{Error, Q};
use serde::{Deserialize, Serialize};

pub fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn q_from_str(s: &str) -> Result<Q, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a rational number");
    match s.split_once('/') {
        None => s.parse::<i64>().map(Q::from).map_err(|_| bad()),
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Q::new(a, b))
        }
    }
}

pub fn coords_key(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_coords(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer in `{s}`")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTableJson {
    pub rep: String,
    /// Coordinates followed by the multiplicity.
    pub weights: Vec<Vec<i64>>,
}

impl From<&WeightTable> for WeightTableJson {
    fn from(t: &WeightTable) -> Self {
        WeightTableJson {
            rep: t.label.clone(),
            weights: t
                .entries
                .iter()
                .map(|(l, m)| {
                    let mut row = l.clone();
                    row.push(*m as i64);
                    row
                })
                .collect(),
        }
    }
}

impl WeightTableJson {
    pub fn to_table(&self) -> WeightTable {
        WeightTable {
            label: self.rep.clone(),
            entries: self
                .weights
                .iter()
                .map(|row| {
                    let (m, l) = row.split_last().expect("weight row has a multiplicity");
                    (l.to_vec(), *m as u64)
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribeJson {
    pub label: String,
    pub cartan_type: String,
    pub rank: usize,
    pub semisimple_rank: usize,
    pub weyl_order: usize,
    pub relative_weyl_order: usize,
    pub frobenius_order: usize,
    /// Invariant factors of `π₁(G)_σ`; 0 is a free factor.
    pub pi1_coinvariants: Vec<i64>,
    /// 1-based simple roots.
    pub sigma_orbits: Vec<Vec<usize>>,
    pub center_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateRowJson {
    pub group: String,
    pub coweight: String,
    pub mu: Vec<i64>,
    pub dim: u64,
    pub tate_dim: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub discrepancy: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub element: usize,
    pub weight: Vec<i64>,
    pub string: Vec<u32>,
    pub nu: Vec<i64>,
    pub tau: Vec<i64>,
    pub eps: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub lambda_b: Vec<i64>,
    pub newton_point: Vec<String>,
    pub kappa: Vec<i64>,
    pub basic: bool,
    pub dimension: String,
    /// Absent when the centre is disconnected.
    pub components: Option<Vec<ComponentJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdlvJson {
    pub group: String,
    pub mu: Vec<i64>,
    pub dim_v: u64,
    pub tate_dim: u64,
    pub basic_unramified: bool,
    pub classes: Vec<ClassJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub kind: String,
    pub coroot: Vec<i64>,
    pub zeta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorJson {
    pub group: String,
    pub mu: Vec<i64>,
    pub tate_weight: Option<Vec<i64>>,
    pub factors: Vec<FactorJson>,
}

pub fn kind_name(k: FactorKind) -> &'static str {
    match k {
        FactorKind::EMinusOne => "e_minus_one",
        FactorKind::EHalfPlusOne => "e_half_plus_one",
    }
}

impl DivisorJson {
    pub fn new(group: &str, mu: &[i64], d: &DivisorFormula) -> Self {
        DivisorJson {
            group: group.into(),
            mu: mu.to_vec(),
            tate_weight: d.tate_weight.clone(),
            factors: d
                .factors
                .iter()
                .map(|f| FactorJson { kind: kind_name(f.kind).into(), coroot: f.coroot.clone(), zeta: f.zeta })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericJson {
    pub group: String,
    pub mu: Vec<i64>,
    pub gamma: Vec<String>,
    pub general: bool,
    /// `None` when the central part of `γ` has infinite order.
    pub strongly_general: Option<bool>,
    pub vanishing_factors: Vec<FactorJson>,
}

/// `{coweight: {power of q^{1/2}: coefficient}}`.
pub type TermsJson = BTreeMap<String, BTreeMap<i32, i64>>;

fn terms_json(q: i64, terms: &BTreeMap<Vec<i64>, Scalar>) -> TermsJson {
    terms.iter().map(|(k, c)| (coords_key(k), c.to_laurent(q))).collect()
}

fn terms_from_json(q: i64, t: &TermsJson) -> Result<BTreeMap<Vec<i64>, Scalar>, Error> {
    t.iter()
        .map(|(k, c)| {
            let key = parse_coords(k).map_err(Error::Precondition)?;
            Ok((key, Scalar::from_laurent(q, c)))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeJson {
    pub n: usize,
    pub q: i64,
    pub terms: TermsJson,
}

impl From<&HeckeElement> for HeckeJson {
    fn from(h: &HeckeElement) -> Self {
        HeckeJson { n: h.n, q: h.q, terms: terms_json(h.q, &h.terms) }
    }
}

impl HeckeJson {
    pub fn to_element(&self) -> Result<HeckeElement, Error> {
        Ok(HeckeElement { n: self.n, q: self.q, terms: terms_from_json(self.q, &self.terms)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToralJson {
    pub n: usize,
    pub q: i64,
    pub w0_invariant: bool,
    pub terms: TermsJson,
}

impl From<&ToralElement> for ToralJson {
    fn from(t: &ToralElement) -> Self {
        ToralJson { n: t.n, q: t.q, w0_invariant: t.is_w0_invariant(), terms: terms_json(t.q, &t.terms) }
    }
}

impl ToralJson {
    pub fn to_element(&self) -> Result<ToralElement, Error> {
        Ok(ToralElement { n: self.n, q: self.q, terms: terms_from_json(self.q, &self.terms)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeJson {
    pub element: HeckeJson,
    pub transform: ToralJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub convention: Option<String>,
}

/// Renders a Laurent polynomial in `q^{1/2}` for tables.
pub fn laurent_string(l: &BTreeMap<i32, i64>) -> String {
    if l.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = l
        .iter()
        .rev()
        .map(|(&k, &c)| match k {
            0 => c.to_string(),
            _ => {
                let pow = match (k % 2 == 0, k / 2) {
                    (true, 1) => "q".to_string(),
                    (true, h) => format!("q^{h}"),
                    (false, _) => format!("q^{k}/2"),
                };
                match c {
                    1 => pow,
                    -1 => format!("-{pow}"),
                    _ => format!("{c}{pow}"),
                }
            }
        })
        .collect();
    let s = parts.join(" + ").replace("+ -", "- ");
    if parts.len() > 1 {
        format!("({s})")
    } else {
        s
    }
}
