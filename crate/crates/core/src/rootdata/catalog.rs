//! Built-in group specifications.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{build_root_datum, BasedRootDatum, CartanType, GroupSpec, LatticeSpec};
use crate::lattice::Mat;
use crate::Result;

use CartanType::*;

/// The diagram automorphism of order 2 (3 for `D4` with `order == 3`).
pub fn diagram_flip(t: CartanType, order: usize) -> Vec<usize> {
    let n = t.rank();
    match (t, order) {
        (A(_), 2) => (0..n).map(|i| n - 1 - i).collect(),
        (D(_), 2) => {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(n - 2, n - 1);
            p
        }
        (D(4), 3) => vec![2, 1, 3, 0],
        (E(6), 2) => vec![5, 1, 4, 3, 2, 0],
        _ => (0..n).collect(),
    }
}

pub fn twisted(label: &str, t: CartanType, order: usize, lattice: LatticeSpec) -> GroupSpec {
    GroupSpec::new(label, &[t], lattice, &diagram_flip(t, order))
}

/// `Res_{F'/F} G'` for split `G'` and `[F':F] = d`: `σ` rotates the factors.
pub fn restriction_of_scalars(t: CartanType, d: usize) -> GroupSpec {
    let r = t.rank();
    let sigma: Vec<usize> = (0..r * d).map(|i| (i + r) % (r * d)).collect();
    GroupSpec::new(&format!("{t}^{d}"), &vec![t; d], LatticeSpec::Adjoint, &sigma)
}

/// `k` copies of `PGL_n`, with `σ` rotating the copies and flipping each diagram.
pub fn unitary_product(n: usize, k: usize) -> GroupSpec {
    let r = n - 1;
    let sigma: Vec<usize> = (0..r * k)
        .map(|i| {
            let (j, a) = (i / r, i % r);
            ((j + 1) % k) * r + (r - 1 - a)
        })
        .collect();
    GroupSpec::new(&format!("PU{n}^{k}"), &vec![A(r); k], LatticeSpec::Adjoint, &sigma)
}

fn gl_blocks(label: &str, torus: usize, n: usize, copies: usize, twist: bool) -> GroupSpec {
    let dim = torus + n * copies;
    let mut coroots: Mat = Vec::new();
    for c in 0..copies {
        for i in 0..n - 1 {
            let mut v = vec![0; dim];
            v[torus + c * n + i] = 1;
            v[torus + c * n + i + 1] = -1;
            coroots.push(v);
        }
    }
    let r = coroots.len();
    let mut sigma = vec![vec![0; dim]; dim];
    let mut perm: Vec<usize> = (0..r).collect();
    for (t, row) in sigma.iter_mut().enumerate().take(torus) {
        row[t] = 1;
    }
    if twist {
        // e_i -> -e_{n+1-i}
        for i in 0..n {
            sigma[torus + n - 1 - i][torus + i] = -1;
        }
        perm = (0..r).map(|i| r - 1 - i).collect();
    } else {
        for c in 0..copies {
            let c2 = (c + 1) % copies;
            for i in 0..n {
                sigma[torus + c2 * n + i][torus + c * n + i] = 1;
            }
        }
        if copies > 1 {
            perm = (0..r).map(|i| (i + (n - 1)) % r).collect();
        }
    }
    let factors = vec![A(n - 1); if n > 1 { copies } else { 0 }];
    GroupSpec::new(
        label,
        &factors,
        LatticeSpec::Explicit { roots: coroots.clone(), coroots, sigma },
        &perm,
    )
}

pub fn gl(n: usize) -> GroupSpec {
    gl_blocks(&format!("GL{n}"), 0, n, 1, false)
}

/// `GL_n` with `σ` acting by the outer automorphism `x -> -w_0 x`.
pub fn gl_twisted(n: usize) -> GroupSpec {
    gl_blocks(&format!("U{n}"), 0, n, 1, true)
}

/// `G_m × GL_n^f` with `σ` rotating the `GL_n` factors.
pub fn gm_times_gl_power(n: usize, f: usize) -> GroupSpec {
    gl_blocks(&format!("GmxGL{n}^{f}"), 1, n, f, false)
}

/// Every built-in specification.
pub fn catalog() -> Vec<GroupSpec> {
    let mut out = vec![
        GroupSpec::split("A1", &[A(1)], LatticeSpec::Adjoint),
        GroupSpec::split("SL2", &[A(1)], LatticeSpec::SimplyConnected),
        GroupSpec::split("A2", &[A(2)], LatticeSpec::Adjoint),
        GroupSpec::split("A3", &[A(3)], LatticeSpec::Adjoint),
        GroupSpec::split("A3sc", &[A(3)], LatticeSpec::SimplyConnected),
        GroupSpec::split("B2", &[B(2)], LatticeSpec::Adjoint),
        GroupSpec::split("G2", &[G2], LatticeSpec::Adjoint),
    ];
    for n in 2..=6 {
        out.push(twisted(&format!("2A{n}"), A(n), 2, LatticeSpec::Adjoint));
    }
    out.push(twisted("A3sc-flip", A(3), 2, LatticeSpec::SimplyConnected));
    out.push(twisted("2D4", D(4), 2, LatticeSpec::Adjoint));
    out.push(twisted("2D5", D(5), 2, LatticeSpec::Adjoint));
    out.push(twisted("3D4", D(4), 3, LatticeSpec::Adjoint));
    out.push(twisted("2E6", E(6), 2, LatticeSpec::Adjoint));
    out.push(restriction_of_scalars(A(1), 2));
    out.push(restriction_of_scalars(A(1), 4));
    for n in 2..=4 {
        out.push(restriction_of_scalars(B(n), 2));
    }
    for n in 2..=4 {
        out.push(restriction_of_scalars(C(n), 2));
    }
    out.push(restriction_of_scalars(D(4), 2));
    for n in 1..=3 {
        out.push(gl(n));
    }
    out.push(gl_twisted(3));
    out.push(gl_twisted(5));
    for f in 2..=3 {
        for n in 2..=3 {
            out.push(gm_times_gl_power(n, f));
        }
    }
    out
}

pub fn labels() -> Vec<String> {
    catalog().into_iter().map(|s| s.label).collect()
}

/// Builds a catalog datum by label. `PGL2` is accepted for `A1`.
pub fn by_label(label: &str) -> Option<BasedRootDatum> {
    let label = if label == "PGL2" { "A1" } else { label };
    catalog()
        .into_iter()
        .find(|s| s.label == label)
        .map(|s| build_root_datum(&s).expect("catalog entries are valid"))
}

pub fn build_all() -> Result<Vec<BasedRootDatum>> {
    catalog().iter().map(build_root_datum).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        let all = build_all().unwrap();
        assert_eq!(all.len(), catalog().len());
        let mut labels = labels();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), all.len());
    }

    #[test]
    fn gl_data() {
        let d = by_label("GL3").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.semisimple_rank(), 2);
        let u = by_label("U3").unwrap();
        assert_eq!(u.sigma_apply(&[1, 0, 0]), vec![0, 0, -1]);
        assert_eq!(u.sigma_order(), 2);
        let g = by_label("GmxGL2^3").unwrap();
        assert_eq!(g.rank(), 7);
        assert_eq!(g.sigma_order(), 3);
        assert_eq!(g.center_basis().len(), 4);
    }

    #[test]
    fn unitary_products_build() {
        for (n, k) in [(3, 3), (4, 3), (4, 1)] {
            let d = build_root_datum(&unitary_product(n, k)).unwrap();
            assert_eq!(d.sigma_order(), 2 * k / if k % 2 == 0 { 2 } else { 1 });
        }
    }
}
