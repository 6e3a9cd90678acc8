//! Acceptance run: one PASS/FAIL line per criterion, then a summary.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use adlv::commands::{self, golden_rows};
use adlv::json::TateRowJson;
use adlv_core::chevalley::{determinant_divisor, is_general, SatakeParameter};
use adlv_core::crystal::{path_character, seed_path, Crystal, Seed};
use adlv_core::hecke::{GlHecke, HeckeElement, SatakeConvention, Scalar};
use adlv_core::kottwitz::{
    adlv_dimension, basic_class, basic_unramified_by_center, basic_unramified_by_tate, check_nu_tau,
    component_set, find_nu_tau, fundamental_coweights, unramified_classes_in_b, BasicClass,
};
use adlv_core::repthy::{dominant_up_to_dim, freudenthal, freudenthal_table, tate_dim_of, weyl_dimension, DEFAULT_CAP};
use adlv_core::rootdata::catalog::{build_all, by_label};
use adlv_core::rootdata::BasedRootDatum;
use adlv_core::Q;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let out = f();
    let el = t.elapsed();
    match (out, limit) {
        (Ok(m), Some(l)) if el > l => Err(format!("{m}; took {:.1}s, limit {}s", el.as_secs_f64(), l.as_secs())),
        (Ok(m), _) => Ok(format!("{m} ({:.1}s)", el.as_secs_f64())),
        (Err(m), _) => Err(format!("{m} ({:.1}s)", el.as_secs_f64())),
    }
}

// 1 ------------------------------------------------------------------------------

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn table_reproduction() -> Outcome {
    let out = commands::tate_table(None, None, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let rows: Vec<TateRowJson> = serde_json::from_value(out.json).map_err(|e| e.to_string())?;
    let golden = golden_rows();
    ensure!(rows.len() == golden.len(), "{} rows computed, {} in the golden file", rows.len(), golden.len());
    let mut flagged = 0;
    for g in &golden {
        let r = rows
            .iter()
            .find(|r| r.group == g.group && r.coweight == g.coweight)
            .ok_or_else(|| format!("row {} {} missing", g.group, g.coweight))?;
        if let Some(k) = g.group.strip_prefix("A1^") {
            // two-dimensional factors: dim 2^{2g}, Tate part the middle binomial
            let k: u32 = k.parse().map_err(|_| "bad A1 label".to_string())?;
            ensure!(r.dim == 2u64.pow(k), "{}: dim {} ≠ 2^{k}", g.group, r.dim);
            ensure!(r.tate_dim == binomial(k as u64, k as u64 / 2), "{}: tate dim {}", g.group, r.tate_dim);
            ensure!(r.discrepancy.is_some() && r.expected == Some((g.dim, g.tate_dim)), "{}: discrepancy not flagged", g.group);
            flagged += 1;
        } else {
            ensure!(
                (r.dim, r.tate_dim) == (g.dim, g.tate_dim),
                "{} {}: computed ({}, {}), table ({}, {})",
                g.group,
                g.coweight,
                r.dim,
                r.tate_dim,
                g.dim,
                g.tate_dim
            );
            ensure!(r.discrepancy.is_none(), "{} {}: spurious discrepancy", g.group, g.coweight);
        }
    }
    Ok(format!("{} rows match, {flagged} A1^(2g) rows flagged as recorded discrepancies", rows.len() - flagged))
}

// 2 ------------------------------------------------------------------------------

const CENSUS_DIM: u128 = 10_000;
const CENSUS_BUDGET: Duration = Duration::from_secs(270);

struct Job {
    dim: u128,
    datum: usize,
    dynkin: Vec<i64>,
}

fn crystal_vs_freudenthal() -> Outcome {
    let start = Instant::now();
    let data = build_all().map_err(|e| e.to_string())?;
    // the crystal depends on the Cartan matrix and the Dynkin vector only
    let mut jobs: BTreeMap<(Vec<Vec<i64>>, Vec<i64>), Job> = BTreeMap::new();
    let mut owners: BTreeMap<(Vec<Vec<i64>>, Vec<i64>), Vec<usize>> = BTreeMap::new();
    let mut per_datum = vec![0usize; data.len()];
    for (k, d) in data.iter().enumerate() {
        for mu in dominant_up_to_dim(d, CENSUS_DIM) {
            let p = d.dynkin(&mu);
            let key = (d.cartan().clone(), p.clone());
            per_datum[k] += 1;
            owners.entry(key.clone()).or_default().push(k);
            jobs.entry(key).or_insert_with(|| Job { dim: weyl_dimension(d, &p), datum: k, dynkin: p });
        }
    }
    let mut order: Vec<(&(Vec<Vec<i64>>, Vec<i64>), &Job)> = jobs.iter().collect();
    order.sort_by(|a, b| a.1.dim.cmp(&b.1.dim).then_with(|| a.0.cmp(b.0)));
    let total_elements: u128 = order.iter().map(|(_, j)| j.dim).sum();

    let mut done_per_datum = vec![0usize; data.len()];
    let mut checked = 0usize;
    let mut elements: u128 = 0;
    let mut stopped_at = None;
    for (key, job) in &order {
        if start.elapsed() > CENSUS_BUDGET {
            stopped_at = Some(job.dim);
            break;
        }
        let d = &data[job.datum];
        let seed = seed_path(d, &job.dynkin, Seed::Fundamental).map_err(|e| e.to_string())?;
        let counts = path_character(d, &seed, u128::MAX).map_err(|e| e.to_string())?;
        let oracle = freudenthal(d, &job.dynkin);
        ensure!(counts.len() == oracle.len(), "{} {:?}: {} weights vs {}", d.label(), job.dynkin, counts.len(), oracle.len());
        for w in &oracle {
            ensure!(
                counts.get(&w.depth) == Some(&w.mult),
                "{} {:?}: multiplicity at depth {:?} is {:?}, Freudenthal gives {}",
                d.label(),
                job.dynkin,
                w.depth,
                counts.get(&w.depth),
                w.mult
            );
        }
        checked += 1;
        elements += job.dim;
        for &k in &owners[*key] {
            done_per_datum[k] += 1;
        }
    }
    let summary = format!(
        "{checked}/{} distinct (Cartan, μ) pairs, {elements}/{total_elements} crystal elements",
        order.len()
    );
    match stopped_at {
        None => Ok(format!("all {summary} up to dim {CENSUS_DIM} agree")),
        Some(next) => {
            let short: Vec<String> = data
                .iter()
                .enumerate()
                .filter(|(k, _)| done_per_datum[*k] < per_datum[*k])
                .map(|(k, d)| format!("{} {}/{}", d.label(), done_per_datum[k], per_datum[k]))
                .collect();
            Err(format!(
                "budget of {}s spent; every μ with dim < {next} agrees; {summary}; incomplete: {}",
                CENSUS_BUDGET.as_secs(),
                short.join(", ")
            ))
        }
    }
}

// 3 ------------------------------------------------------------------------------

const AXIOM_DATA: &[&str] = &["A1", "SL2", "A2", "A3sc", "B2", "G2", "2D4", "GL3", "A1^2", "U3", "B2^2"];

fn check_element(d: &BasedRootDatum, c: &Crystal, b: usize, i: usize) -> Result<(), String> {
    let mut unit = vec![0; d.semisimple_rank()];
    unit[i] = 1;
    let alpha = d.coroot_combination(&unit);
    let wt = c.wt(b).to_vec();
    if let Some(x) = c.e(b, i) {
        ensure!(c.wt(x) == add(&wt, &alpha).as_slice(), "(a) wt(e b) ≠ wt(b) + α^∨");
        ensure!(c.f(x, i) == Some(b), "(b) f(e b) ≠ b");
    }
    if let Some(x) = c.f(b, i) {
        ensure!(c.wt(x) == sub(&wt, &alpha).as_slice(), "(a) wt(f b) ≠ wt(b) − α^∨");
        ensure!(c.e(x, i) == Some(b), "(b) e(f b) ≠ b");
    }
    let count = |step: &dyn Fn(usize) -> Option<usize>| {
        let (mut n, mut cur) = (0i64, b);
        while let Some(x) = step(cur) {
            cur = x;
            n += 1;
        }
        n
    };
    let eps = count(&|x| c.e(x, i));
    let phi = count(&|x| c.f(x, i));
    ensure!((c.eps(b, i), c.phi(b, i)) == (eps, phi), "(c) stored ε/φ differ from string lengths");
    ensure!(phi - eps == d.pair(i, &wt), "(c) φ − ε ≠ ⟨α, wt⟩");
    Ok(())
}

fn check_tensor(d: &BasedRootDatum, c1: &Crystal, b1: usize, c2: &Crystal, b2: usize, i: usize) -> Result<(), String> {
    let (p1, p2) = (c1.path(b1).unwrap(), c2.path(b2).unwrap());
    let p = p1.concat(p2);
    let eps = c1.eps(b1, i).max(c2.eps(b2, i) - d.pair(i, c1.wt(b1)));
    let phi = c2.phi(b2, i).max(c1.phi(b1, i) + d.pair(i, c2.wt(b2)));
    ensure!(p.eps_phi(i) == (eps, phi), "tensor ε/φ: path gives {:?}, formula ({eps}, {phi})", p.eps_phi(i));
    let row = &d.cartan()[i];
    let e = if c1.phi(b1, i) >= c2.eps(b2, i) {
        c1.e(b1, i).map(|x| c1.path(x).unwrap().concat(p2))
    } else {
        c2.e(b2, i).map(|y| p1.concat(c2.path(y).unwrap()))
    };
    ensure!(p.e(i, row) == e, "tensor rule for e disagrees with the concatenated path");
    let f = if c1.phi(b1, i) > c2.eps(b2, i) {
        c1.f(b1, i).map(|x| c1.path(x).unwrap().concat(p2))
    } else {
        c2.f(b2, i).map(|y| p1.concat(c2.path(y).unwrap()))
    };
    ensure!(p.f(i, row) == f, "tensor rule for f disagrees with the concatenated path");
    Ok(())
}

fn check_seeds(d: &BasedRootDatum, mu: &[i64]) -> Result<(), String> {
    let a = Crystal::highest_weight_from(d, mu, Seed::Fundamental, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let b = Crystal::highest_weight_from(d, mu, Seed::Greedy, DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure!(a.len() == b.len(), "seed crystals differ in size");
    let index: HashMap<Vec<u32>, usize> = (0..b.len()).map(|y| (b.string_parameter(y), y)).collect();
    ensure!(index.len() == b.len(), "string parameters collide");
    let mut map = Vec::with_capacity(a.len());
    for x in 0..a.len() {
        map.push(*index.get(&a.string_parameter(x)).ok_or("string parameter sets differ")?);
    }
    for x in 0..a.len() {
        ensure!(a.wt(x) == b.wt(map[x]), "seed bijection moves weights");
        for i in 0..d.semisimple_rank() {
            ensure!(a.f(x, i).map(|y| map[y]) == b.f(map[x], i), "seed bijection does not commute with f");
        }
    }
    Ok(())
}

fn crystal_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let pool: Vec<(BasedRootDatum, Vec<Vec<i64>>)> = AXIOM_DATA
        .iter()
        .map(|l| {
            let d = by_label(l).unwrap();
            let mus = dominant_up_to_dim(&d, 500);
            (d, mus)
        })
        .collect();
    let mut cache: HashMap<(usize, Vec<i64>), Crystal> = HashMap::new();
    let mut get = |k: usize, mu: &Vec<i64>, d: &BasedRootDatum| -> Crystal {
        cache
            .entry((k, mu.clone()))
            .or_insert_with(|| Crystal::highest_weight(d, mu, DEFAULT_CAP).unwrap())
            .clone()
    };
    let mut seeds_checked = 0;
    for s in 0..200 {
        let k = rng.gen_range(0..pool.len());
        let (d, mus) = &pool[k];
        let mu1 = mus.choose(&mut rng).unwrap();
        let mu2 = mus.choose(&mut rng).unwrap();
        let (c1, c2) = (get(k, mu1, d), get(k, mu2, d));
        let b1 = rng.gen_range(0..c1.len());
        let b2 = rng.gen_range(0..c2.len());
        let i = rng.gen_range(0..d.semisimple_rank());
        let ctx = |e: String| format!("sample {s} ({} μ={mu1:?} b={b1} α{}): {e}", d.label(), i + 1);
        check_element(d, &c1, b1, i).map_err(ctx)?;
        check_tensor(d, &c1, b1, &c2, b2, i).map_err(ctx)?;
        check_seeds(d, mu1).map_err(ctx)?;
        seeds_checked += 1;
    }
    Ok(format!("200 samples over {} data: axioms (a)-(c), e/f inversion, tensor rule, {seeds_checked} seed comparisons", pool.len()))
}

// 4 ------------------------------------------------------------------------------

fn kottwitz_consistency() -> Outcome {
    let data = build_all().map_err(|e| e.to_string())?;
    let (mut pairs, mut unramified, mut fibers) = (0, 0, 0);
    for d in &data {
        for mu in fundamental_coweights(d) {
            pairs += 1;
            let by_tate = basic_unramified_by_tate(d, &mu).map_err(|e| e.to_string())?;
            let by_center = basic_unramified_by_center(d, &mu).map_err(|e| e.to_string())?;
            ensure!(by_tate == by_center, "{} {mu:?}: V^Tate route says {by_tate}, centre route says {by_center}", d.label());
            if !by_tate {
                continue;
            }
            unramified += 1;
            let BasicClass::Unramified { class, .. } = basic_class(d, &mu).map_err(|e| e.to_string())? else {
                return Err(format!("{} {mu:?}: basic class missing", d.label()));
            };
            let tate = tate_dim_of(d, &freudenthal_table(d, &mu).map_err(|e| e.to_string())?);
            let labels = match component_set(d, &mu, &class) {
                Ok(cs) => cs.labels.len() as u64,
                Err(_) => {
                    // disconnected centre: count the fiber directly
                    let c = Crystal::highest_weight(d, &mu, DEFAULT_CAP).map_err(|e| e.to_string())?;
                    let quo = d.coinvariant_quotient();
                    (0..c.len()).filter(|&b| quo.key(c.wt(b)) == class.lambda_b.key).count() as u64
                }
            };
            fibers += 1;
            ensure!(labels == tate, "{} {mu:?}: {labels} labels in the basic fiber, dim V^Tate = {tate}", d.label());
            let dim = adlv_dimension(d, &mu, &class).map_err(|e| e.to_string())?;
            ensure!(dim == d.rho_pair(&mu), "{} {mu:?}: dimension {dim} ≠ ⟨ρ, μ⟩ = {}", d.label(), d.rho_pair(&mu));
        }
    }
    Ok(format!("{} data × fundamental coweights: {pairs} pairs agree, {unramified} unramified, {fibers} fibers counted", data.len()))
}

// 5 ------------------------------------------------------------------------------

const BOX: i64 = 4;

/// Every `ν'` within `BOX` of `ν_b` (in simple-root pairings) satisfying both inequality
/// families has `ν' − ν_b` dominant.
fn brute_force_minimal(d: &BasedRootDatum, c: &Crystal, b: usize, nu: &[i64]) -> Result<(), String> {
    let r = d.semisimple_rank();
    let x0 = d.dynkin(nu);
    let eps = c.eps_vec(b);
    let lambda = c.wt(b);
    let mut x = vec![0i64; r];
    let mut idx = vec![0i64; r];
    loop {
        for i in 0..r {
            x[i] = x0[i] - BOX + idx[i];
        }
        if x.iter().zip(&eps).all(|(a, e)| a >= e) {
            let cand = d.lift_dynkin(&x).ok_or("pairing vector does not lift")?;
            let tau = add(lambda, &sub(&cand, &d.sigma_apply(&cand)));
            if d.is_dominant(&tau) {
                ensure!(x.iter().zip(&x0).all(|(a, b)| a >= b), "ν' with pairings {x:?} undercuts ν_b {x0:?}");
            }
        }
        let mut k = 0;
        loop {
            if k == r {
                return Ok(());
            }
            idx[k] += 1;
            if idx[k] <= 2 * BOX {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn nu_tau() -> Outcome {
    let mut labels = 0;
    for (label, dynkin) in [("2A2", vec![1, 1]), ("2A3", vec![0, 1, 0]), ("PGL2", vec![2])] {
        let d = by_label(label).unwrap();
        let mu = d.lift_dynkin(&dynkin).unwrap();
        for class in unramified_classes_in_b(&d, &mu).map_err(|e| e.to_string())? {
            let cs = component_set(&d, &mu, &class).map_err(|e| e.to_string())?;
            for &b in &cs.labels {
                let nt = find_nu_tau(&d, &cs.crystal, b).map_err(|e| e.to_string())?;
                check_nu_tau(&d, &cs.crystal, b, &nt).map_err(|e| format!("{label} b={b}: {e}"))?;
                ensure!(cs.crystal.hom_membership(&d, b, &nt.nu) == Ok(true), "{label} b={b}: not in the image of i_ν");
                brute_force_minimal(&d, &cs.crystal, b, &nt.nu).map_err(|e| format!("{label} b={b}: {e}"))?;
                labels += 1;
            }
        }
    }
    // middle element of B_2 for PGL2
    let d = by_label("PGL2").unwrap();
    let c = Crystal::highest_weight(&d, &[2], 10).unwrap();
    let mid = c.mv_set(&[0])[0];
    let nt = find_nu_tau(&d, &c, mid).map_err(|e| e.to_string())?;
    ensure!((nt.nu.clone(), nt.tau.clone()) == (vec![1], vec![0]), "PGL2 middle element gives {nt:?}");
    Ok(format!("{labels} labels satisfy both inequality families, orbit equality, hom membership and box-{BOX} minimality"))
}

// 6 ------------------------------------------------------------------------------

fn random_q(rng: &mut ChaCha8Rng) -> Q {
    let n: i64 = rng.gen_range(1..=6) * if rng.gen_bool(0.2) { -1 } else { 1 };
    Q::new(n, rng.gen_range(1..=3))
}

fn genericity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tests = 0;
    let mut boundary = 0;
    for n in 1..=2usize {
        let m = 2 * n + 1;
        let d = by_label(&format!("U{m}")).unwrap();
        let mut std = vec![0; m];
        std[0] = 1;
        let div = determinant_divisor(&d, &freudenthal_table(&d, &std).map_err(|e| e.to_string())?);
        for s in 0..100 {
            let mut a: Vec<Q> = (0..m).map(|_| random_q(&mut rng)).collect();
            if s % 4 == 0 {
                let i = rng.gen_range(0..n);
                a[m - 1 - i] = a[i];
            }
            let closed = (0..n).all(|i| a[i] != a[m - 1 - i]);
            boundary += !closed as usize;
            let got = is_general(&div, &SatakeParameter::new(&d, a.clone()).map_err(|e| e.to_string())?);
            ensure!(got == closed, "U{m} at {a:?}: divisor says {got}, closed form {closed}");
            tests += 1;
        }
    }
    for f in 2..=3usize {
        for n in 2..=3usize {
            let d = by_label(&format!("GmxGL{n}^{f}")).unwrap();
            // χ ⊗ ⊠ ∧^{a_i} std with Σ a_i ≡ 0 mod n, one of them not one-dimensional
            let mut exps: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..f {
                exps = exps.into_iter().flat_map(|t| (0..=n).map(move |a| [t.clone(), vec![a]].concat())).collect();
            }
            exps.retain(|t| t.iter().sum::<usize>() % n == 0);
            for a in exps {
                let mut mu = vec![1];
                for &ai in &a {
                    mu.extend((0..n).map(|j| (j < ai) as i64));
                }
                let one_dim = a.iter().all(|&ai| ai == 0 || ai == n);
                let div = determinant_divisor(&d, &freudenthal_table(&d, &mu).map_err(|e| e.to_string())?);
                for s in 0..100 {
                    let mut c: Vec<Q> = (0..1 + n * f).map(|_| random_q(&mut rng)).collect();
                    let beta = |c: &[Q], j: usize| (0..f).map(|i| c[1 + i * n + j]).product::<Q>();
                    if s % 4 == 0 {
                        let j = rng.gen_range(0..n);
                        let k = (j + rng.gen_range(1..n)) % n;
                        let last = 1 + (f - 1) * n + k;
                        c[last] = beta(&c, j) / (beta(&c, k) / c[last]);
                    }
                    let distinct = (0..n).all(|j| (0..j).all(|k| beta(&c, j) != beta(&c, k)));
                    let closed = one_dim || distinct;
                    boundary += !distinct as usize;
                    let got = is_general(&div, &SatakeParameter::new(&d, c.clone()).map_err(|e| e.to_string())?);
                    ensure!(got == closed, "GmxGL{n}^{f} {a:?} at {c:?}: divisor says {got}, closed form {closed}");
                    tests += 1;
                }
            }
        }
    }
    Ok(format!("{tests} random parameters agree with the closed forms, {boundary} on the boundary"))
}

// 7 ------------------------------------------------------------------------------

fn dominant_nonneg(n: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(prefix: &mut Vec<i64>, n: usize, bound: i64, left: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=bound.min(left) {
            prefix.push(x);
            rec(prefix, n, x, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, max_sum, max_sum, &mut out);
    out
}

fn satake_numerics() -> Outcome {
    let mut products = 0;
    for (n, q) in [(2usize, 2i64), (2, 3), (3, 2)] {
        let mut h = GlHecke::new(n, q, 6).map_err(|e| e.to_string())?;
        let basis = dominant_nonneg(n, 3);
        let mut ct = Vec::new();
        for mu in &basis {
            let t = h.satake_basis(mu).map_err(|e| e.to_string())?;
            ensure!(t.is_w0_invariant(), "GL{n} q={q}: CT(T{mu:?}) not W₀-invariant");
            ct.push(t);
        }
        for i in 0..basis.len() {
            for j in i..basis.len() {
                let a = HeckeElement::basis(n, q, &basis[i]);
                let b = HeckeElement::basis(n, q, &basis[j]);
                let ab = h.convolve(&a, &b).map_err(|e| e.to_string())?;
                let lhs = h.satake_transform(&ab).map_err(|e| e.to_string())?;
                ensure!(lhs == ct[i].mul(&ct[j]), "GL{n} q={q}: CT(T{:?} T{:?}) ≠ product", basis[i], basis[j]);
                products += 1;
            }
        }
        let mut e1 = vec![0; n];
        e1[0] = 1;
        let mut e2 = e1.clone();
        e2[0] = 2;
        let mut e11 = e1.clone();
        e11[1] = 1;
        let t1 = HeckeElement::basis(n, q, &e1);
        let sq = h.convolve(&t1, &t1).map_err(|e| e.to_string())?;
        let expected = HeckeElement::basis(n, q, &e2).add(&HeckeElement::basis(n, q, &e11).scale(Scalar::int(q + 1)));
        ensure!(sq == expected, "GL{n} q={q}: T(1,0)² = {sq:?}");
        let rep = h.satake_of_rep(&e1, SatakeConvention::Geometric).map_err(|e| e.to_string())?;
        // q^{-<ρ, e_1>}, which is q^{-1/2} for GL2
        let shift = Scalar::half_power(q, -(n as i64 - 1));
        ensure!(rep == t1.scale(shift), "GL{n} q={q}: Sat(V_(1,0)) = {rep:?}");
    }
    Ok(format!("{products} products multiplicative, W₀-invariant images, T(1,0)² and Sat(std) as expected"))
}

// 8 ------------------------------------------------------------------------------

fn exclusions(shadow: bool) -> Outcome {
    let note = "cohomology of Shimura varieties, the spectral action and Rapoport–Zink uniformization are out of scope; \
                the geometric statements are checked only through their combinatorial shadow in criteria 1, 4, 5";
    if shadow {
        Ok(note.to_string())
    } else {
        Err(format!("{note}, and one of those failed"))
    }
}

fn main() {
    let run: Vec<(&str, Box<dyn FnOnce() -> Outcome>)> = vec![
        ("table reproduction", Box::new(|| timed(Some(Duration::from_secs(60)), table_reproduction))),
        ("crystal vs Freudenthal", Box::new(|| timed(Some(Duration::from_secs(300)), crystal_vs_freudenthal))),
        ("crystal axioms", Box::new(|| timed(None, crystal_axioms))),
        ("Kottwitz consistency", Box::new(|| timed(None, kottwitz_consistency))),
        ("ν_b/τ_b", Box::new(|| timed(None, nu_tau))),
        ("genericity", Box::new(|| timed(None, genericity))),
        ("Satake numerics", Box::new(|| timed(Some(Duration::from_secs(120)), satake_numerics))),
    ];
    let mut passed = vec![];
    for (k, (name, f)) in run.into_iter().enumerate() {
        let out = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        report(k + 1, name, &out);
        passed.push(out.is_ok());
    }
    let out = exclusions(passed[0] && passed[3] && passed[4]);
    report(8, "scope", &out);
    passed.push(out.is_ok());
    println!("{}/8 criteria passed", passed.iter().filter(|p| **p).count());
}

fn report(k: usize, name: &str, out: &Outcome) {
    match out {
        Ok(m) => println!("criterion {k} PASS  {name}: {m}"),
        Err(m) => println!("criterion {k} FAIL  {name}: {m}"),
    }
}
