use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use super::BasedRootDatum;
use crate::{Error, Result};

/// The Weyl group, enumerated as the orbit of a regular `σ`-invariant point.
///
/// Element `k` is `s_{w[0]} s_{w[1]} ⋯` for `w = words()[k]`; words are reduced and
/// lexicographically first among the shortest ones found by breadth-first search.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    words: Vec<Vec<u8>>,
    fixed: Vec<usize>,
    longest: usize,
}

impl WeylGroup {
    pub(super) fn enumerate(d: &BasedRootDatum, cap: usize) -> Result<Self> {
        let r = d.semisimple_rank();
        let a = d.cartan();
        let start = vec![1i64; r];
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut points = vec![start.clone()];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        index.insert(start, 0);
        let mut head = 0;
        while head < points.len() {
            for i in 0..r {
                let p = &points[head];
                let mut q = p.clone();
                for (j, qj) in q.iter_mut().enumerate() {
                    *qj -= p[i] * a[i][j];
                }
                if !index.contains_key(&q) {
                    if points.len() >= cap {
                        return Err(Error::Cap(format!("Weyl group of {} exceeds {cap}", d.label())));
                    }
                    let mut w = vec![i as u8];
                    w.extend_from_slice(&words[head]);
                    index.insert(q.clone(), points.len());
                    points.push(q);
                    words.push(w);
                }
            }
            head += 1;
        }
        let perm = d.sigma_perm();
        let fixed = points
            .iter()
            .enumerate()
            .filter(|(_, p)| (0..r).all(|j| p[perm[j]] == p[j]))
            .map(|(k, _)| k)
            .collect();
        let longest = points
            .iter()
            .position(|p| p.iter().all(|&x| x < 0))
            .unwrap_or(0);
        Ok(WeylGroup { words, fixed, longest })
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// `|W₀|`, the elements commuting with `σ`.
    pub fn fixed_order(&self) -> usize {
        self.fixed.len()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn fixed_words(&self) -> impl Iterator<Item = &[u8]> {
        self.fixed.iter().map(|&k| self.words[k].as_slice())
    }

    pub fn longest_word(&self) -> &[u8] {
        &self.words[self.longest]
    }

    /// Applies an element to a coweight.
    pub fn act(d: &BasedRootDatum, word: &[u8], x: &[i64]) -> Vec<i64> {
        let mut x = x.to_vec();
        for &i in word.iter().rev() {
            x = d.reflect(i as usize, &x);
        }
        x
    }
}

/// Reduced word of the longest element, computed without enumerating the group.
pub fn longest_word(d: &BasedRootDatum) -> Vec<u8> {
    // walk the antidominant regular point up to the dominant chamber
    let r = d.semisimple_rank();
    let a = d.cartan();
    let mut p = vec![-1i64; r];
    let mut word = Vec::new();
    while let Some(i) = (0..r).find(|&i| p[i] < 0) {
        let pi = p[i];
        for (j, pj) in p.iter_mut().enumerate() {
            *pj -= pi * a[i][j];
        }
        word.push(i as u8);
    }
    word
}
