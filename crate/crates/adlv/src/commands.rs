//! The subcommands, each producing a JSON value, a plain-text table and a verdict.

use std::fmt::Write;

use adlv_core::chevalley::{determinant_divisor, is_general, is_strongly_general, FactorKind, SatakeParameter};
use adlv_core::hecke::{GlHecke, HeckeElement, SatakeConvention};
use adlv_core::kottwitz::{
    adlv_dimension, basic_is_unramified, component_set, find_nu_tau, fundamental_coweights, unramified_classes_in_b,
};
use adlv_core::repthy::{tate_dim, weight_table, weyl_dimension};
use adlv_core::rootdata::{catalog, BasedRootDatum};
use adlv_core::{Error, Q};
use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;

use crate::json::*;

/// What a command produced. `verdict == false` maps to exit code 1.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: serde_json::Value,
    pub table: String,
    pub verdict: bool,
}

fn output<T: Serialize>(value: &T, table: String, verdict: bool) -> Result<Output> {
    Ok(Output { json: serde_json::to_value(value)?, table, verdict })
}

fn cartan_type(d: &BasedRootDatum) -> String {
    d.factors().iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
}

fn check_dim(d: &BasedRootDatum, mu: &[i64], cap: u128) -> Result<()> {
    let dim = weyl_dimension(d, &d.dynkin(mu));
    if dim > cap {
        bail!("dim V_{mu:?} = {dim} exceeds --cap {cap}");
    }
    Ok(())
}

/// Interprets a coweight argument, in `X_•(T)` coordinates or, with `dynkin`, by its
/// pairings with the simple roots.
pub fn resolve_mu(d: &BasedRootDatum, csv: &str, dynkin: bool) -> Result<Vec<i64>> {
    let v = parse_coords(csv).map_err(|e| anyhow!(e))?;
    let mu = if dynkin {
        if v.len() != d.semisimple_rank() {
            bail!("{} needs {} Dynkin coordinates, got {}", d.label(), d.semisimple_rank(), v.len());
        }
        d.lift_dynkin(&v)
            .ok_or_else(|| anyhow!("Dynkin vector {v:?} is not the pairing vector of a coweight of {}", d.label()))?
    } else {
        v
    };
    d.check(&mu)?;
    Ok(mu)
}

pub fn describe(d: &BasedRootDatum, cap: u128) -> Result<Output> {
    let w = d.weyl_group(cap.min(usize::MAX as u128) as usize)?;
    let report = DescribeJson {
        label: d.label().into(),
        cartan_type: cartan_type(d),
        rank: d.rank(),
        semisimple_rank: d.semisimple_rank(),
        weyl_order: w.order(),
        relative_weyl_order: w.fixed_order(),
        frobenius_order: d.sigma_order(),
        pi1_coinvariants: d.pi1_coinvariants().invariants(),
        sigma_orbits: d.sigma_orbits().into_iter().map(|o| o.into_iter().map(|i| i + 1).collect()).collect(),
        center_connected: d.center_is_connected(),
    };
    let mut t = String::new();
    writeln!(t, "group            {}", report.label)?;
    writeln!(t, "Cartan type      {}", report.cartan_type)?;
    writeln!(t, "rank             {} (semisimple {})", report.rank, report.semisimple_rank)?;
    writeln!(t, "|W|              {}", report.weyl_order)?;
    writeln!(t, "|W_0|            {}", report.relative_weyl_order)?;
    writeln!(t, "order of sigma   {}", report.frobenius_order)?;
    writeln!(t, "pi_1(G)_sigma    {}", group_string(&report.pi1_coinvariants))?;
    writeln!(t, "sigma orbits     {:?}", report.sigma_orbits)?;
    writeln!(t, "centre connected {}", report.center_connected)?;
    output(&report, t, true)
}

fn group_string(inv: &[i64]) -> String {
    if inv.is_empty() {
        return "0".into();
    }
    inv.iter().map(|&k| if k == 0 { "Z".to_string() } else { format!("Z/{k}") }).collect::<Vec<_>>().join(" + ")
}

/// Rows of the minuscule tables, as transcribed into the golden file.
#[derive(Clone, Debug, serde::Deserialize)]
pub struct GoldenRow {
    pub group: String,
    pub coweight: String,
    pub dynkin: Vec<i64>,
    pub dim: u64,
    pub tate_dim: u64,
}

pub const MINUSCULE_GOLDEN: &str = include_str!("../golden/minuscule_tate.json");

pub fn golden_rows() -> Vec<GoldenRow> {
    serde_json::from_str(MINUSCULE_GOLDEN).expect("golden file parses")
}

/// Known disagreement between the transcribed table and the computation.
fn known_discrepancy(row: &GoldenRow, dim: u64) -> Option<String> {
    let g = row.group.strip_prefix("A1^")?.parse::<u32>().ok()?;
    (dim == 1u64 << g && row.dim == 1u64 << (g / 2)).then(|| {
        format!("table lists dim 2^g = {}; V_mu is a tensor product of {g} two-dimensional representations", row.dim)
    })
}

fn tate_rows_table(rows: &[TateRowJson]) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{:<8} {:<6} {:>6} {:>6}  {}", "group", "mu", "dim", "Tate", "check");
    for r in rows {
        let check = match (&r.expected, &r.discrepancy) {
            (_, Some(d)) => format!("recorded discrepancy: {d}"),
            (Some(e), None) if *e == (r.dim, r.tate_dim) => "ok".into(),
            (Some(e), None) => format!("MISMATCH, expected {e:?}"),
            (None, None) => String::new(),
        };
        let _ = writeln!(t, "{:<8} {:<6} {:>6} {:>6}  {}", r.group, r.coweight, r.dim, r.tate_dim, check);
    }
    t
}

fn tate_row(d: &BasedRootDatum, name: &str, mu: &[i64], cap: u128) -> Result<TateRowJson> {
    check_dim(d, mu, cap)?;
    let table = weight_table(d, mu)?;
    Ok(TateRowJson {
        group: d.label().into(),
        coweight: name.into(),
        mu: mu.to_vec(),
        dim: table.total_dim(),
        tate_dim: tate_dim(d, mu)?,
        expected: None,
        discrepancy: None,
    })
}

/// With no group: every row of the minuscule tables, checked against the golden file.
/// With a group: its fundamental coweights, or the given `mu`.
pub fn tate_table(group: Option<&BasedRootDatum>, mu: Option<&[i64]>, cap: u128) -> Result<Output> {
    let rows = match group {
        Some(d) => match mu {
            Some(mu) => vec![tate_row(d, &coords_key(mu), mu, cap)?],
            None => fundamental_coweights(d)
                .iter()
                .enumerate()
                .map(|(i, mu)| tate_row(d, &format!("w{}", i + 1), mu, cap))
                .collect::<Result<_>>()?,
        },
        None => golden_rows()
            .iter()
            .map(|g| {
                let d = catalog::by_label(&g.group).ok_or_else(|| anyhow!("golden row names unknown group {}", g.group))?;
                let mu = d.lift_dynkin(&g.dynkin).ok_or_else(|| anyhow!("{} {}: not a coweight", g.group, g.coweight))?;
                let mut row = tate_row(&d, &g.coweight, &mu, cap)?;
                row.expected = Some((g.dim, g.tate_dim));
                row.discrepancy = known_discrepancy(g, row.dim).filter(|_| row.tate_dim == g.tate_dim);
                Ok(row)
            })
            .collect::<Result<_>>()?,
    };
    let verdict = rows.iter().all(|r| r.discrepancy.is_some() || r.expected.map_or(true, |e| e == (r.dim, r.tate_dim)));
    output(&rows, tate_rows_table(&rows), verdict)
}

pub fn adlv(d: &BasedRootDatum, mu: &[i64], cap: u128) -> Result<Output> {
    check_dim(d, mu, cap)?;
    let dim_v = weight_table(d, mu)?.total_dim();
    let basic_unramified = basic_is_unramified(d, mu)?;
    let mut classes = Vec::new();
    let mut note = None;
    for class in unramified_classes_in_b(d, mu)? {
        let components = match component_set(d, mu, &class) {
            Ok(set) => {
                let mut out = Vec::new();
                for &b in &set.labels {
                    let nt = find_nu_tau(d, &set.crystal, b)?;
                    out.push(ComponentJson {
                        element: b,
                        weight: set.crystal.wt(b).to_vec(),
                        string: set.crystal.string_parameter(b),
                        nu: nt.nu,
                        tau: nt.tau,
                        eps: nt.eps,
                    });
                }
                Some(out)
            }
            Err(Error::Unsupported(m)) => {
                note = Some(m);
                None
            }
            Err(e) => return Err(e.into()),
        };
        classes.push(ClassJson {
            lambda_b: class.lambda_b.representative.clone(),
            newton_point: class.newton_point.iter().map(q_to_string).collect(),
            kappa: class.kappa.clone(),
            basic: class.is_basic(d),
            dimension: q_to_string(&adlv_dimension(d, mu, &class)?),
            components,
        });
    }
    let report = AdlvJson {
        group: d.label().into(),
        mu: mu.to_vec(),
        dim_v,
        tate_dim: tate_dim(d, mu)?,
        basic_unramified,
        classes,
        note,
    };
    let mut t = String::new();
    writeln!(t, "{} mu={:?}: dim V = {}, dim V^Tate = {}", report.group, report.mu, report.dim_v, report.tate_dim)?;
    writeln!(t, "basic class unramified: {}", report.basic_unramified)?;
    for c in &report.classes {
        writeln!(
            t,
            "\nlambda_b={:?} nu=({}) kappa={:?} dim={}{}",
            c.lambda_b,
            c.newton_point.join(", "),
            c.kappa,
            c.dimension,
            if c.basic { "  [basic]" } else { "" }
        )?;
        match &c.components {
            None => writeln!(t, "  components: unsupported")?,
            Some(cs) => {
                writeln!(t, "  {} component label(s)", cs.len())?;
                for x in cs {
                    writeln!(t, "  b={:<4} wt={:?} nu={:?} tau={:?} eps={:?}", x.element, x.weight, x.nu, x.tau, x.eps)?;
                }
            }
        }
    }
    if let Some(n) = &report.note {
        writeln!(t, "\nnote: {n}")?;
    }
    output(&report, t, basic_unramified)
}

fn divisor_table(j: &DivisorJson) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{} mu={:?}, Tate weight {:?}", j.group, j.mu, j.tate_weight);
    let live: Vec<&FactorJson> = j.factors.iter().filter(|f| f.zeta > 0).collect();
    if live.is_empty() {
        let _ = writeln!(t, "divisor: empty (unit)");
    }
    for f in live {
        let base = if f.kind == kind_name(FactorKind::EMinusOne) {
            format!("(e^{:?} - 1)", f.coroot)
        } else {
            let half: Vec<i64> = f.coroot.iter().map(|x| x / 2).collect();
            format!("(e^{half:?} + 1)")
        };
        let _ = writeln!(t, "  {base}^{}", f.zeta);
    }
    t
}

pub fn divisor(d: &BasedRootDatum, mu: &[i64], cap: u128) -> Result<Output> {
    check_dim(d, mu, cap)?;
    let table = weight_table(d, mu)?;
    let div = determinant_divisor(d, &table);
    let report = DivisorJson::new(d.label(), mu, &div);
    let t = divisor_table(&report);
    output(&report, t, true)
}

pub fn parse_gamma(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(|t| q_from_str(t).map_err(|e| anyhow!(e))).collect()
}

pub fn generic(d: &BasedRootDatum, mu: &[i64], gamma: &[Q], cap: u128) -> Result<Output> {
    check_dim(d, mu, cap)?;
    let table = weight_table(d, mu)?;
    let div = determinant_divisor(d, &table);
    let g = SatakeParameter::new(d, gamma.to_vec())?;
    let general = is_general(&div, &g);
    let strongly_general = match is_strongly_general(d, &table, &g) {
        Ok(v) => Some(v),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let vanishing_factors = div
        .nonzero()
        .filter(|f| {
            let one = adlv_core::chevalley::DivisorFormula { factors: vec![(*f).clone()], tate_weight: div.tate_weight.clone() };
            !is_general(&one, &g)
        })
        .map(|f| FactorJson { kind: kind_name(f.kind).into(), coroot: f.coroot.clone(), zeta: f.zeta })
        .collect();
    let report = GenericJson {
        group: d.label().into(),
        mu: mu.to_vec(),
        gamma: gamma.iter().map(q_to_string).collect(),
        general,
        strongly_general,
        vanishing_factors,
    };
    let mut t = String::new();
    writeln!(t, "{} mu={:?} gamma=({})", report.group, report.mu, report.gamma.join(", "))?;
    writeln!(t, "{}", if general { "general" } else { "not general" })?;
    for f in &report.vanishing_factors {
        writeln!(t, "  vanishing factor {} {:?}", f.kind, f.coroot)?;
    }
    match strongly_general {
        Some(true) => writeln!(t, "strongly general")?,
        Some(false) => writeln!(t, "not strongly general")?,
        None => writeln!(t, "strong genericity undefined: central part of gamma has infinite order")?,
    }
    output(&report, t, general)
}

/// `n` from a group label `GLn`.
pub fn gl_rank(label: &str) -> Result<usize> {
    label
        .strip_prefix("GL")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| anyhow!("the Hecke algebra is available for GL1, GL2, GL3; got `{label}`"))
}

pub struct SatakeArgs<'a> {
    pub n: usize,
    pub q: i64,
    pub mus: &'a [Vec<i64>],
    pub rep: bool,
    pub convention: SatakeConvention,
    pub window: i64,
}

fn hecke_string(h: &HeckeJson) -> String {
    if h.terms.is_empty() {
        return "0".into();
    }
    h.terms
        .iter()
        .rev()
        .map(|(k, c)| {
            let coeff = laurent_string(c);
            let coeff = if coeff == "1" { String::new() } else { format!("{coeff} ") };
            format!("{coeff}T({k})")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn toral_string(t: &ToralJson) -> String {
    if t.terms.is_empty() {
        return "0".into();
    }
    t.terms
        .iter()
        .rev()
        .map(|(k, c)| {
            let coeff = laurent_string(c);
            let coeff = if coeff == "1" { String::new() } else { format!("{coeff} ") };
            format!("{coeff}e({k})")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Product of `T_μ` over the given coweights, or with `rep` the image of `[V_μ]`.
pub fn satake(args: SatakeArgs<'_>) -> Result<Output> {
    let mut h = GlHecke::new(args.n, args.q, args.window)?;
    let element = if args.rep {
        let [mu] = args.mus else { bail!("--rep takes exactly one --mu") };
        h.satake_of_rep(mu, args.convention)?
    } else {
        let mut acc = HeckeElement::unit(args.n, args.q);
        for mu in args.mus {
            acc = h.convolve(&acc, &HeckeElement::basis(args.n, args.q, mu)).with_context(|| format!("multiplying by T{mu:?}"))?;
        }
        acc
    };
    let transform = h.satake_transform(&element)?;
    let report = SatakeJson {
        element: HeckeJson::from(&element),
        transform: ToralJson::from(&transform),
        convention: args.rep.then(|| {
            match args.convention {
                SatakeConvention::Geometric => "geometric",
                SatakeConvention::Arithmetic => "arithmetic",
            }
            .to_string()
        }),
    };
    let mut t = String::new();
    writeln!(t, "GL{} over F_{}", args.n, args.q)?;
    writeln!(t, "element  {}", hecke_string(&report.element))?;
    writeln!(t, "CT       {}", toral_string(&report.transform))?;
    output(&report, t, true)
}

/// Fundamental coweight `ω_i` (1-based) of `d`, or its least multiple in `X_•(T)`.
pub fn fundamental(d: &BasedRootDatum, i: usize) -> Result<Vec<i64>> {
    fundamental_coweights(d)
        .get(i.wrapping_sub(1))
        .cloned()
        .ok_or_else(|| anyhow!("{} has no fundamental coweight {i}", d.label()))
}
