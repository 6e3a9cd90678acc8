//! Littelmann path crystals of the dual group and Kashiwara tensor products.
//!
//! Paths live in the Dynkin coordinates of the adjoint datum (pairings with the
//! simple roots of `G`), doubled so that bounce midpoints stay integral. Weights are
//! lifted back to the given coweight lattice along simple coroots.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use hashbrown::HashMap;

use crate::lattice::{add, sub};
use crate::repthy::{weyl_dimension, WeightTable};
use crate::rootdata::{longest_word, BasedRootDatum, Coweight};
use crate::{Error, Result, Q};

const NONE: u32 = u32::MAX;

/// A piecewise linear path from the origin, stored as maximal straight pieces.
///
/// Each piece is a displacement in doubled Dynkin coordinates. Adjacent positively
/// parallel pieces are merged and zero pieces dropped, so equal paths have equal data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LittelmannPath {
    rank: usize,
    data: Vec<i64>,
}

/// One piece of a path, as exposed to callers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment {
    /// Displacement in Dynkin coordinates.
    Straight(Vec<Q>),
    /// Out along `-α_i^vee / 2` and back.
    Bounce(usize),
}

fn parallel(u: &[i64], v: &[i64]) -> bool {
    let n = u.len();
    let d: i64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    d > 0 && (0..n).all(|i| (i + 1..n).all(|j| u[i] * v[j] == u[j] * v[i]))
}

impl LittelmannPath {
    pub fn empty(rank: usize) -> Self {
        LittelmannPath { rank, data: Vec::new() }
    }

    /// Concatenation of straight steps given in (undoubled) Dynkin coordinates.
    pub fn from_steps(rank: usize, steps: &[Vec<i64>]) -> Self {
        let doubled: Vec<i64> = steps.iter().flat_map(|s| s.iter().map(|x| 2 * x)).collect();
        Self::normalized(rank, doubled)
    }

    fn normalized(rank: usize, raw: Vec<i64>) -> Self {
        if rank == 0 {
            return Self::empty(0);
        }
        let mut data: Vec<i64> = Vec::with_capacity(raw.len());
        for v in raw.chunks_exact(rank) {
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let k = data.len();
            if k >= rank && parallel(&data[k - rank..], v) {
                for (a, b) in data[k - rank..].iter_mut().zip(v) {
                    *a += b;
                }
            } else {
                data.extend_from_slice(v);
            }
        }
        LittelmannPath { rank, data }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn pieces(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks_exact(self.rank.max(1))
    }

    pub fn num_pieces(&self) -> usize {
        if self.rank == 0 {
            0
        } else {
            self.data.len() / self.rank
        }
    }

    /// Endpoint in Dynkin coordinates.
    pub fn endpoint(&self) -> Vec<i64> {
        let mut e = vec![0; self.rank];
        for p in self.pieces() {
            for (a, b) in e.iter_mut().zip(p) {
                *a += b;
            }
        }
        e.iter().map(|x| x / 2).collect()
    }

    pub fn segments(&self, cartan: &[Vec<i64>]) -> Vec<Segment> {
        let pieces: Vec<&[i64]> = self.pieces().collect();
        let mut out = Vec::new();
        let mut k = 0;
        while k < pieces.len() {
            if k + 1 < pieces.len() {
                let bounce = (0..self.rank).find(|&i| {
                    pieces[k].iter().zip(&cartan[i]).all(|(p, c)| *p == -c)
                        && pieces[k + 1].iter().zip(&cartan[i]).all(|(p, c)| p == c)
                });
                if let Some(i) = bounce {
                    out.push(Segment::Bounce(i));
                    k += 2;
                    continue;
                }
            }
            out.push(Segment::Straight(pieces[k].iter().map(|&x| Q::new(x, 2)).collect()));
            k += 1;
        }
        out
    }

    /// Values of `2<α_i, γ(t)>` at the breakpoints.
    fn heights(&self, i: usize) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.num_pieces() + 1);
        let mut acc = 0;
        h.push(0);
        for p in self.pieces() {
            acc += p[i];
            h.push(acc);
        }
        h
    }

    /// `(ε_i, φ_i)`.
    pub fn eps_phi(&self, i: usize) -> (i64, i64) {
        let (mut m, mut end) = (0, 0);
        for p in self.pieces() {
            end += p[i];
            m = m.min(end);
        }
        debug_assert!(m % 2 == 0 && end % 2 == 0, "path is not integral");
        (-m / 2, (end - m) / 2)
    }

    pub fn dual(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for p in self.data.chunks_exact(self.rank.max(1)).rev() {
            data.extend(p.iter().map(|x| -x));
        }
        LittelmannPath { rank: self.rank, data }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut raw = self.data.clone();
        raw.extend_from_slice(&other.data);
        Self::normalized(self.rank, raw)
    }

    /// Root operator `e_i`; `coroot` is row `i` of the Cartan matrix (Dynkin coordinates of `α_i^vee`).
    pub fn e(&self, i: usize, coroot: &[i64]) -> Option<Self> {
        let r = self.rank;
        let h = self.heights(i);
        let m = *h.iter().min().unwrap();
        if m > -2 {
            return None;
        }
        let t1 = h.iter().position(|&x| x == m).unwrap();
        let t0 = (0..t1).rev().find(|&k| h[k] >= m + 2).unwrap();
        let reflect = |v: &[i64], out: &mut Vec<i64>| {
            let p = v[i];
            out.extend(v.iter().zip(coroot).map(|(a, c)| a - p * c));
        };
        let mut raw = Vec::with_capacity(self.data.len() + 2 * r);
        raw.extend_from_slice(&self.data[..t0 * r]);
        let v = &self.data[t0 * r..(t0 + 1) * r];
        let (num, den) = (h[t0] - m - 2, h[t0] - h[t0 + 1]);
        let first: Vec<i64> = v
            .iter()
            .map(|&x| {
                assert_eq!(x * num % den, 0, "root operator left the half-lattice");
                x * num / den
            })
            .collect();
        let second: Vec<i64> = v.iter().zip(&first).map(|(a, b)| a - b).collect();
        raw.extend_from_slice(&first);
        reflect(&second, &mut raw);
        for k in t0 + 1..t1 {
            reflect(&self.data[k * r..(k + 1) * r], &mut raw);
        }
        raw.extend_from_slice(&self.data[t1 * r..]);
        Some(Self::normalized(r, raw))
    }

    /// Root operator `f_i`; agrees with `* ∘ e_i ∘ *`.
    pub fn f(&self, i: usize, coroot: &[i64]) -> Option<Self> {
        let r = self.rank;
        let h = self.heights(i);
        let m = *h.iter().min().unwrap();
        if *h.last().unwrap() - m < 2 {
            return None;
        }
        let t0 = h.iter().rposition(|&x| x == m).unwrap();
        let t1 = (t0 + 1..h.len()).find(|&k| h[k] >= m + 2).unwrap();
        let reflect = |v: &[i64], out: &mut Vec<i64>| {
            let p = v[i];
            out.extend(v.iter().zip(coroot).map(|(a, c)| a - p * c));
        };
        let mut raw = Vec::with_capacity(self.data.len() + 2 * r);
        raw.extend_from_slice(&self.data[..t0 * r]);
        for k in t0..t1 - 1 {
            reflect(&self.data[k * r..(k + 1) * r], &mut raw);
        }
        let v = &self.data[(t1 - 1) * r..t1 * r];
        let (num, den) = (m + 2 - h[t1 - 1], h[t1] - h[t1 - 1]);
        let first: Vec<i64> = v
            .iter()
            .map(|&x| {
                assert_eq!(x * num % den, 0, "root operator left the half-lattice");
                x * num / den
            })
            .collect();
        let second: Vec<i64> = v.iter().zip(&first).map(|(a, b)| a - b).collect();
        reflect(&first, &mut raw);
        raw.extend_from_slice(&second);
        raw.extend_from_slice(&self.data[t1 * r..]);
        let out = Self::normalized(r, raw);
        debug_assert_eq!(Some(&out), self.dual().e(i, coroot).map(|p| p.dual()).as_ref());
        Some(out)
    }
}

/// Connected components of the Dynkin diagram.
pub fn components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let r = cartan.len();
    let mut seen = vec![false; r];
    let mut out = Vec::new();
    for s in 0..r {
        if seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..r {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Positive roots of `Ĝ` in Dynkin coordinates.
fn dual_positive_roots(d: &BasedRootDatum) -> Vec<Vec<i64>> {
    let r = d.semisimple_rank();
    let a = d.cartan();
    d.positive_coroots()
        .iter()
        .map(|b| (0..r).map(|i| (0..r).map(|j| b[j] * a[j][i]).sum()).collect())
        .collect()
}

/// `Min`: the minimal nonzero dominant weights of `Ĝ` (Dynkin coordinates).
///
/// A dominant `p ≠ 0` is minimal iff every positive root `β` with `p − β` dominant has
/// `p = β`; candidates have coordinates at most 2.
pub fn min_set(d: &BasedRootDatum) -> Vec<Vec<i64>> {
    let r = d.semisimple_rank();
    let roots = dual_positive_roots(d);
    let mut out = Vec::new();
    let mut p = vec![0i64; r];
    loop {
        if p.iter().any(|&x| x != 0) {
            let minimal = roots.iter().all(|b| {
                let q: Vec<i64> = sub(&p, b);
                !q.iter().all(|&x| x >= 0) || q.iter().all(|&x| x == 0)
            });
            if minimal {
                out.push(p.clone());
            }
        }
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            if p[k] < 2 {
                p[k] += 1;
                break;
            }
            p[k] = 0;
            k += 1;
        }
    }
}

/// `W`-orbit of a weight in Dynkin coordinates.
pub fn orbit_dynkin(d: &BasedRootDatum, p: &[i64]) -> Vec<Vec<i64>> {
    let r = d.semisimple_rank();
    let a = d.cartan();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = vec![p.to_vec()];
    seen.insert(p.to_vec());
    while let Some(x) = queue.pop() {
        for j in 0..r {
            if x[j] != 0 {
                let y: Vec<i64> = (0..r).map(|i| x[i] - x[j] * a[j][i]).collect();
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// How to factor a dominant weight into a dominant chain of elementary steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seed {
    /// Concatenate chains for the fundamental weights, in index order.
    Fundamental,
    /// Same, in reverse index order.
    FundamentalReversed,
    /// Peel off the highest admissible step of `W·Min` from the top.
    Greedy,
}

fn chain_to(d: &BasedRootDatum, target: &[i64], support: &[usize], steps: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let r = d.semisimple_rank();
    let steps: Vec<&Vec<i64>> = steps
        .iter()
        .filter(|s| (0..r).all(|i| s[i] == 0 || support.contains(&i)))
        .collect();
    for bound in 2..=6 {
        let mut prev: BTreeMap<Vec<i64>, (Vec<i64>, usize)> = BTreeMap::new();
        let start = vec![0i64; r];
        let mut queue = VecDeque::from([start.clone()]);
        prev.insert(start, (Vec::new(), usize::MAX));
        while let Some(p) = queue.pop_front() {
            if p == target {
                let mut chain = Vec::new();
                let mut cur = p;
                while let Some((parent, s)) = prev.get(&cur).cloned() {
                    if s == usize::MAX {
                        break;
                    }
                    chain.push(steps[s].clone());
                    cur = parent;
                }
                chain.reverse();
                return Some(chain);
            }
            for (k, s) in steps.iter().enumerate() {
                let q = add(&p, s);
                if q.iter().all(|&x| (0..=bound).contains(&x)) && !prev.contains_key(&q) {
                    prev.insert(q.clone(), (p.clone(), k));
                    queue.push_back(q);
                }
            }
        }
    }
    None
}

fn greedy_chain(d: &BasedRootDatum, mu: &[i64], steps: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    // ⟨2ρ, ·⟩ on Dynkin coordinates
    let r = d.semisimple_rank();
    let mut w = vec![0i64; r];
    for a in d.positive_roots() {
        for i in 0..r {
            w[i] += a[i];
        }
    }
    let height = |s: &[i64]| -> i64 { s.iter().zip(&w).map(|(a, b)| a * b).sum() };
    let mut order: Vec<&Vec<i64>> = steps.iter().collect();
    order.sort_by(|a, b| height(b).cmp(&height(a)).then_with(|| b.cmp(a)));
    let mut p = mu.to_vec();
    let mut removed = Vec::new();
    while p.iter().any(|&x| x != 0) {
        let s = order.iter().find(|s| sub(&p, s).iter().all(|&x| x >= 0))?;
        p = sub(&p, s);
        removed.push((*s).clone());
    }
    removed.reverse();
    Some(removed)
}

/// A dominant path to `mu` (Dynkin coordinates) built from elementary steps.
pub fn seed_path(d: &BasedRootDatum, mu: &[i64], seed: Seed) -> Result<LittelmannPath> {
    let r = d.semisimple_rank();
    let mut steps: Vec<Vec<i64>> = Vec::new();
    for m in min_set(d) {
        steps.extend(orbit_dynkin(d, &m));
    }
    steps.sort();
    steps.dedup();
    let comps = components(d.cartan());
    let fundamental = |i: usize| -> Result<Vec<Vec<i64>>> {
        let comp = comps.iter().find(|c| c.contains(&i)).unwrap();
        let mut e = vec![0; r];
        e[i] = 1;
        chain_to(d, &e, comp, &steps)
            .ok_or_else(|| Error::Unsupported(format!("no dominant chain to fundamental weight {}", i + 1)))
    };
    let chain = match seed {
        Seed::Fundamental | Seed::FundamentalReversed => {
            let mut idx: Vec<usize> = (0..r).collect();
            if seed == Seed::FundamentalReversed {
                idx.reverse();
            }
            let mut chain = Vec::new();
            for i in idx {
                if mu[i] > 0 {
                    let c = fundamental(i)?;
                    for _ in 0..mu[i] {
                        chain.extend(c.iter().cloned());
                    }
                }
            }
            chain
        }
        Seed::Greedy => greedy_chain(d, mu, &steps)
            .ok_or_else(|| Error::Unsupported(format!("greedy factorization of {mu:?} failed")))?,
    };
    Ok(LittelmannPath::from_steps(r, &chain))
}

/// Weight multiplicities of the crystal generated by a dominant path, keyed by depth
/// below the highest weight (coefficients of simple coroots).
///
/// Walks the tree in which the parent of `b` is `e_i b` for the least `i` with
/// `ε_i(b) > 0`, so nothing is hashed or stored beyond the current branch.
pub fn path_character(d: &BasedRootDatum, seed: &LittelmannPath, cap: u128) -> Result<HashMap<Vec<i64>, u64>> {
    let r = d.semisimple_rank();
    let cartan = d.cartan();
    let mut counts: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut visited: u128 = 0;
    let mut stack = vec![(seed.clone(), vec![0i64; r])];
    while let Some((b, depth)) = stack.pop() {
        visited += 1;
        if visited > cap {
            return Err(Error::Cap(format!("crystal has more than {cap} elements")));
        }
        for i in 0..r {
            let (_, ph) = b.eps_phi(i);
            if ph == 0 {
                continue;
            }
            let c = b.f(i, &cartan[i]).expect("φ > 0 implies f defined");
            if (0..i).any(|j| c.eps_phi(j).0 > 0) {
                continue;
            }
            let mut dc = depth.clone();
            dc[i] += 1;
            stack.push((c, dc));
        }
        *counts.entry(depth).or_insert(0) += 1;
    }
    Ok(counts)
}

/// A finite crystal with materialized operators. Elements are indices.
#[derive(Clone, Debug)]
pub struct Crystal {
    pub label: String,
    rank: usize,
    dim: usize,
    size: usize,
    f: Vec<u32>,
    e: Vec<u32>,
    eps: Vec<i32>,
    phi: Vec<i32>,
    wt: Vec<i64>,
    paths: Option<Vec<LittelmannPath>>,
    highest: Option<Coweight>,
    word: Vec<u8>,
}

impl Crystal {
    /// `𝔹_μ`, generated from the fundamental seed.
    pub fn highest_weight(d: &BasedRootDatum, mu: &[i64], cap: u128) -> Result<Self> {
        Self::highest_weight_from(d, mu, Seed::Fundamental, cap)
    }

    pub fn highest_weight_from(d: &BasedRootDatum, mu: &[i64], seed: Seed, cap: u128) -> Result<Self> {
        d.check(mu)?;
        if !d.is_dominant(mu) {
            return Err(Error::Precondition(format!("{mu:?} is not dominant")));
        }
        let mu_dyn = d.dynkin(mu);
        let dim = weyl_dimension(d, &mu_dyn);
        if dim > cap {
            return Err(Error::Cap(format!("dim V_{mu:?} = {dim} exceeds {cap}")));
        }
        let path = seed_path(d, &mu_dyn, seed)?;
        assert_eq!(path.endpoint(), mu_dyn);
        Self::generate(d, mu, path, dim as usize)
    }

    /// Closure of a dominant path under the lowering operators.
    pub fn generate(d: &BasedRootDatum, mu: &[i64], seed: LittelmannPath, expected: usize) -> Result<Self> {
        let r = d.semisimple_rank();
        let n = d.rank();
        let cartan = d.cartan();
        let mut index: HashMap<LittelmannPath, u32> = HashMap::with_capacity(expected);
        let mut paths = Vec::with_capacity(expected);
        let mut depth: Vec<i64> = Vec::with_capacity(expected * r);
        let mut f = Vec::with_capacity(expected * r);
        let mut e = vec![NONE; expected * r];
        let mut eps = Vec::with_capacity(expected * r);
        let mut phi = Vec::with_capacity(expected * r);
        index.insert(seed.clone(), 0);
        paths.push(seed);
        depth.extend(core::iter::repeat(0).take(r));
        let mut b = 0;
        while b < paths.len() {
            for i in 0..r {
                let (ep, ph) = paths[b].eps_phi(i);
                eps.push(ep as i32);
                phi.push(ph as i32);
            }
            for i in 0..r {
                if phi[b * r + i] == 0 {
                    f.push(NONE);
                    continue;
                }
                let next = paths[b].f(i, &cartan[i]).expect("φ > 0 implies f defined");
                let c = match index.get(&next) {
                    Some(&c) => c,
                    None => {
                        let c = paths.len() as u32;
                        if paths.len() >= 2 * expected.max(1) + 16 {
                            return Err(Error::Cap("crystal larger than its Weyl dimension".into()));
                        }
                        index.insert(next.clone(), c);
                        paths.push(next);
                        for k in 0..r {
                            let v = depth[b * r + k] + i64::from(k == i);
                            depth.push(v);
                        }
                        c
                    }
                };
                f.push(c);
                if e.len() < (c as usize + 1) * r {
                    e.resize((c as usize + 1) * r, NONE);
                }
                e[c as usize * r + i] = b as u32;
            }
            b += 1;
        }
        let len = paths.len();
        e.truncate(len * r);
        let mut wt = Vec::with_capacity(len * n);
        for b in 0..len {
            wt.extend(sub(mu, &d.coroot_combination(&depth[b * r..(b + 1) * r])));
        }
        Ok(Crystal {
            label: format!("B{mu:?}"),
            rank: r,
            dim: n,
            size: len,
            f,
            e,
            eps,
            phi,
            wt,
            paths: Some(paths),
            highest: Some(mu.to_vec()),
            word: longest_word(d),
        })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn highest(&self) -> Option<&Coweight> {
        self.highest.as_ref()
    }

    pub fn f(&self, b: usize, i: usize) -> Option<usize> {
        let c = self.f[b * self.rank + i];
        (c != NONE).then_some(c as usize)
    }

    pub fn e(&self, b: usize, i: usize) -> Option<usize> {
        let c = self.e[b * self.rank + i];
        (c != NONE).then_some(c as usize)
    }

    pub fn eps(&self, b: usize, i: usize) -> i64 {
        self.eps[b * self.rank + i] as i64
    }

    pub fn phi(&self, b: usize, i: usize) -> i64 {
        self.phi[b * self.rank + i] as i64
    }

    pub fn eps_vec(&self, b: usize) -> Vec<i64> {
        (0..self.rank).map(|i| self.eps(b, i)).collect()
    }

    pub fn wt(&self, b: usize) -> &[i64] {
        &self.wt[b * self.dim..(b + 1) * self.dim]
    }

    pub fn path(&self, b: usize) -> Option<&LittelmannPath> {
        self.paths.as_ref().map(|p| &p[b])
    }

    pub fn weight_table(&self, label: &str) -> WeightTable {
        let mut entries = BTreeMap::new();
        for b in 0..self.len() {
            *entries.entry(self.wt(b).to_vec()).or_insert(0) += 1;
        }
        WeightTable { label: label.into(), entries }
    }

    /// Elements killed by every `e_i`.
    pub fn highest_weight_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| (0..self.rank).all(|i| self.eps(b, i) == 0))
            .collect()
    }

    /// Highest weights of the connected components, with multiplicity, sorted.
    pub fn decompose(&self) -> Vec<Coweight> {
        let mut out: Vec<Coweight> = self
            .highest_weight_elements()
            .into_iter()
            .map(|b| self.wt(b).to_vec())
            .collect();
        out.sort();
        out
    }

    /// `𝔹_μ(λ)`: elements of weight `λ`.
    pub fn mv_set(&self, lambda: &[i64]) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.wt(b) == lambda).collect()
    }

    /// `b` lies in the image of `i_ν`: `<α_i, ν> ≥ ε_i(b)` for all `i`.
    pub fn hom_membership(&self, d: &BasedRootDatum, b: usize, nu: &[i64]) -> Result<bool> {
        d.check(nu)?;
        let total = add(self.wt(b), nu);
        if !d.is_dominant(&total) {
            return Err(Error::Precondition(format!("wt(b) + ν = {total:?} is not dominant")));
        }
        Ok((0..self.rank).all(|i| d.pair(i, nu) >= self.eps(b, i)))
    }

    /// String parameters along the fixed reduced word of `w₀`.
    pub fn string_parameter(&self, b: usize) -> Vec<u32> {
        let mut cur = b;
        let mut out = Vec::with_capacity(self.word.len());
        for &i in &self.word {
            let i = i as usize;
            let a = self.eps(cur, i);
            for _ in 0..a {
                cur = self.e(cur, i).expect("ε counts raising steps");
            }
            out.push(a as u32);
        }
        out
    }

    /// Line format: `string parameter | weight`, lines sorted.
    pub fn serialize(&self) -> String {
        let mut lines: Vec<String> = (0..self.len())
            .map(|b| {
                let mut s = String::new();
                let sp = self.string_parameter(b);
                for (k, a) in sp.iter().enumerate() {
                    if k > 0 {
                        s.push(' ');
                    }
                    let _ = write!(s, "{a}");
                }
                s.push_str(" |");
                for x in self.wt(b) {
                    let _ = write!(s, " {x}");
                }
                s
            })
            .collect();
        lines.sort();
        let mut out = String::new();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }

    /// Kashiwara tensor product `a ⊗ b`; element `(x, y)` has index `x·|b| + y`.
    pub fn tensor(a: &Crystal, b: &Crystal, cap: u128) -> Result<Crystal> {
        if a.rank != b.rank || a.dim != b.dim {
            return Err(Error::Precondition("tensor factors over different data".into()));
        }
        let (na, nb, r) = (a.len(), b.len(), a.rank);
        if (na as u128) * (nb as u128) > cap {
            return Err(Error::Cap(format!("tensor product of size {}", na * nb)));
        }
        let n = na * nb;
        let mut t = Crystal {
            label: format!("{} x {}", a.label, b.label),
            rank: r,
            dim: a.dim,
            size: n,
            f: vec![NONE; n * r],
            e: vec![NONE; n * r],
            eps: vec![0; n * r],
            phi: vec![0; n * r],
            wt: Vec::with_capacity(n * a.dim),
            paths: None,
            highest: None,
            word: a.word.clone(),
        };
        for x in 0..na {
            for y in 0..nb {
                let k = x * nb + y;
                t.wt.extend(add(a.wt(x), b.wt(y)));
                for i in 0..r {
                    let (e1, p1) = (a.eps(x, i), a.phi(x, i));
                    let (e2, p2) = (b.eps(y, i), b.phi(y, i));
                    let w1 = p1 - e1;
                    let w2 = p2 - e2;
                    t.eps[k * r + i] = e1.max(e2 - w1) as i32;
                    t.phi[k * r + i] = p2.max(p1 + w2) as i32;
                    let e = if p1 >= e2 {
                        a.e(x, i).map(|x2| x2 * nb + y)
                    } else {
                        b.e(y, i).map(|y2| x * nb + y2)
                    };
                    let f = if p1 > e2 {
                        a.f(x, i).map(|x2| x2 * nb + y)
                    } else {
                        b.f(y, i).map(|y2| x * nb + y2)
                    };
                    t.e[k * r + i] = e.map_or(NONE, |v| v as u32);
                    t.f[k * r + i] = f.map_or(NONE, |v| v as u32);
                }
            }
        }
        if let (Some(pa), Some(pb)) = (&a.paths, &b.paths) {
            let mut paths = Vec::with_capacity(n);
            for x in pa {
                for y in pb {
                    paths.push(x.concat(y));
                }
            }
            t.paths = Some(paths);
        }
        Ok(t)
    }

    /// For a tensor product carrying concatenated paths: the tensor rule agrees with
    /// root operators applied to the concatenations. Returns the first disagreement.
    pub fn check_against_paths(&self, d: &BasedRootDatum) -> core::result::Result<(), String> {
        let Some(paths) = &self.paths else { return Ok(()) };
        let cartan = d.cartan();
        for b in 0..self.len() {
            for i in 0..self.rank {
                let p = &paths[b];
                if p.eps_phi(i) != (self.eps(b, i), self.phi(b, i)) {
                    return Err(format!("ε/φ mismatch at element {b}, root {i}"));
                }
                let pe = p.e(i, &cartan[i]);
                if pe.as_ref() != self.e(b, i).map(|c| &paths[c]) {
                    return Err(format!("e mismatch at element {b}, root {i}"));
                }
                let pf = p.f(i, &cartan[i]);
                if pf.as_ref() != self.f(b, i).map(|c| &paths[c]) {
                    return Err(format!("f mismatch at element {b}, root {i}"));
                }
            }
        }
        Ok(())
    }

    /// Trivial one-element crystal of weight 0.
    pub fn unit(d: &BasedRootDatum) -> Self {
        let zero = vec![0; d.rank()];
        Self::generate(d, &zero, LittelmannPath::empty(d.semisimple_rank()), 1).expect("unit crystal")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::catalog::by_label;

    #[test]
    fn a1_small_crystals() {
        let d = by_label("A1").unwrap();
        let c = d.cartan()[0].clone();
        // B_1: straight(ω) -> straight(-ω); here ω has Dynkin coordinate 1
        let top = LittelmannPath::from_steps(1, &[vec![1]]);
        assert_eq!(top.f(0, &c).unwrap(), LittelmannPath::from_steps(1, &[vec![-1]]));
        // B_2: straight(α^vee) -> bounce -> straight(-α^vee)
        let top = LittelmannPath::from_steps(1, &[vec![2]]);
        let mid = top.f(0, &c).unwrap();
        assert_eq!(mid.segments(d.cartan()), vec![Segment::Bounce(0)]);
        let low = mid.f(0, &c).unwrap();
        assert_eq!(low, LittelmannPath::from_steps(1, &[vec![-2]]));
        assert!(low.f(0, &c).is_none());
        assert_eq!(low.e(0, &c).unwrap(), mid);
        assert_eq!(mid.eps_phi(0), (1, 1));
    }

    #[test]
    fn sizes_and_weights() {
        let d = by_label("A1").unwrap();
        let b = Crystal::highest_weight(&d, &[2], 100).unwrap();
        assert_eq!(b.len(), 3);
        let mut w: Vec<_> = (0..3).map(|k| b.wt(k)[0]).collect();
        w.sort();
        assert_eq!(w, vec![-2, 0, 2]);
        let a2 = by_label("A2").unwrap();
        assert_eq!(Crystal::highest_weight(&a2, &[1, 0], 100).unwrap().len(), 3);
        let zero = Crystal::highest_weight(&a2, &[0, 0], 100).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero.path(0).unwrap().num_pieces(), 0);
    }

    #[test]
    fn min_sets() {
        let a1 = by_label("A1").unwrap();
        assert_eq!(min_set(&a1), vec![vec![1], vec![2]]);
        let a2 = by_label("A2").unwrap();
        let mut m = min_set(&a2);
        m.sort();
        assert_eq!(m, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let b = by_label("A1^2").unwrap();
        assert_eq!(min_set(&b).len(), 5);
    }

    #[test]
    fn tensor_rules_for_a1() {
        let d = by_label("A1").unwrap();
        let b1 = Crystal::highest_weight(&d, &[1], 100).unwrap();
        let t = Crystal::tensor(&b1, &b1, 100).unwrap();
        // top ⊗ top
        assert_eq!(t.eps(0, 0), 0);
        assert_eq!(t.phi(0, 0), 2);
        assert_eq!(t.decompose(), vec![vec![0], vec![2]]);
        t.check_against_paths(&d).unwrap();
        let u = Crystal::unit(&d);
        let ub = Crystal::tensor(&u, &b1, 100).unwrap();
        assert_eq!(ub.decompose(), vec![vec![1]]);
    }
}
