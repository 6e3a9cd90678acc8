//! Unramified σ-conjugacy classes in `B(G, μ)` and labels of irreducible components
//! of affine Deligne–Lusztig varieties.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::crystal::Crystal;
use crate::lattice::{add, sub, Quotient};
use crate::repthy::{restrict_sigma, tate_dim, weight_table, DEFAULT_CAP};
use crate::rootdata::{BasedRootDatum, CoinvariantClass, Coweight};
use crate::{Error, Result, Q};

/// An unramified class `[ϖ^λ]`, recorded by its dominant coinvariant class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KottwitzClass {
    pub lambda_b: CoinvariantClass,
    pub newton_point: Vec<Q>,
    pub kappa: Vec<i64>,
}

impl KottwitzClass {
    pub fn of(d: &BasedRootDatum, lambda: &[i64]) -> Self {
        KottwitzClass {
            lambda_b: d.coinvariant(lambda),
            newton_point: newton_point(d, lambda),
            kappa: d.kappa(lambda),
        }
    }

    pub fn is_basic(&self, d: &BasedRootDatum) -> bool {
        d.roots().iter().all(|a| crate::rootdata::qdot(a, &self.newton_point) == Q::from(0))
    }
}

/// Dominant representative of the `σ`-orbit average of `λ`.
pub fn newton_point(d: &BasedRootDatum, lambda: &[i64]) -> Vec<Q> {
    let m = d.sigma_order() as i64;
    let avg: Vec<Q> = d.norm(lambda).iter().map(|&x| Q::new(x, m)).collect();
    d.dominant_conjugate_q(&avg)
}

pub fn kappa(d: &BasedRootDatum, lambda: &[i64]) -> Vec<i64> {
    d.kappa(lambda)
}

/// `B(G)_unr ∩ B(G, μ)`, highest class first.
pub fn unramified_classes_in_b(d: &BasedRootDatum, mu: &[i64]) -> Result<Vec<KottwitzClass>> {
    let classes = d.coinvariant_dominants_below(mu)?;
    let k_mu = d.kappa(mu);
    Ok(classes
        .into_iter()
        .map(|c| {
            let k = KottwitzClass::of(d, &c.representative);
            assert_eq!(k.kappa, k_mu, "κ differs from [μ] on a class below μ");
            k
        })
        .collect())
}

/// The basic element of `B(G, μ)` when it is unramified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasicClass {
    Unramified {
        class: KottwitzClass,
        /// A central `τ` with `[ϖ^τ]` basic, when `Z_G` is connected.
        tau: Option<Coweight>,
    },
    NotUnramified,
}

/// `V_μ^Tate ≠ 0`.
pub fn basic_unramified_by_tate(d: &BasedRootDatum, mu: &[i64]) -> Result<bool> {
    Ok(tate_dim(d, mu)? > 0)
}

/// Characters of `Z(Ĝ_sc)^Γ` evaluated on `μ_ad`.
///
/// The character group of `Z(Ĝ_sc)^Γ` is `(P^vee / Q^vee)_σ`; it is presented here in
/// Dynkin coordinates as `Z^r` modulo the simple coroots and `(σ − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerFormObstruction {
    /// Orders of the cyclic factors of `Z(Ĝ_sc)^Γ`.
    pub invariants: Vec<i64>,
    /// `(z, v)`: `μ_ad(z) = exp(2πi v)` with `v ∈ [0, 1)`.
    pub values: Vec<(Vec<i64>, Q)>,
}

impl InnerFormObstruction {
    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|(_, v)| *v == Q::from(0))
    }
}

fn adjoint_coinvariant_quotient(d: &BasedRootDatum) -> Quotient {
    let r = d.semisimple_rank();
    let perm = d.sigma_perm();
    let mut gens: Vec<Vec<i64>> = d.cartan().clone();
    for j in 0..r {
        let mut g = vec![0; r];
        g[perm[j]] += 1;
        g[j] -= 1;
        gens.push(g);
    }
    Quotient::new(r, &gens)
}

pub fn inner_form_obstruction(d: &BasedRootDatum, mu: &[i64]) -> Result<InnerFormObstruction> {
    d.check(mu)?;
    let quo = adjoint_coinvariant_quotient(d);
    let invariants = quo.invariants();
    let key = quo.key(&d.dynkin(mu));
    let elements = quo.elements().expect("P/Q is finite");
    let values = elements
        .into_iter()
        .map(|z| {
            let mut v = Q::from(0);
            for ((zk, xk), nk) in z.iter().zip(&key).zip(&invariants) {
                v += Q::new(zk * xk, *nk);
            }
            let v = v - v.floor();
            (z, v)
        })
        .collect();
    Ok(InnerFormObstruction { invariants, values })
}

/// `μ_ad` is trivial on `Z(Ĝ_sc)^Γ`.
pub fn basic_unramified_by_center(d: &BasedRootDatum, mu: &[i64]) -> Result<bool> {
    Ok(inner_form_obstruction(d, mu)?.is_trivial())
}

/// Both criteria; they must agree.
pub fn basic_is_unramified(d: &BasedRootDatum, mu: &[i64]) -> Result<bool> {
    let by_tate = basic_unramified_by_tate(d, mu)?;
    let by_center = basic_unramified_by_center(d, mu)?;
    assert_eq!(
        by_tate,
        by_center,
        "{}: the two basic-element criteria disagree at {mu:?}",
        d.label()
    );
    Ok(by_tate)
}

/// Some `τ ∈ X_•(Z_G)` with `τ ≡ λ` modulo `(σ − 1)X_•(T)`.
pub(crate) fn central_representative(d: &BasedRootDatum, lambda: &[i64]) -> Option<Coweight> {
    let n = d.rank();
    let s = d.sigma_matrix();
    let center = d.center_basis();
    let mut cols: Vec<Vec<i64>> = (0..n)
        .map(|k| (0..n).map(|i| s[i][k] - i64::from(i == k)).collect())
        .collect();
    cols.extend(center.iter().cloned());
    let m: Vec<Vec<i64>> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let x = crate::lattice::solve_integer(&m, n, cols.len(), lambda)?;
    let mut tau = vec![0; n];
    for (c, z) in x[n..].iter().zip(center) {
        for (t, zk) in tau.iter_mut().zip(z) {
            *t += c * zk;
        }
    }
    Some(tau)
}

pub fn basic_class(d: &BasedRootDatum, mu: &[i64]) -> Result<BasicClass> {
    if !basic_is_unramified(d, mu)? {
        return Ok(BasicClass::NotUnramified);
    }
    let class = unramified_classes_in_b(d, mu)?
        .into_iter()
        .find(|c| c.is_basic(d))
        .expect("an unramified basic class lies below μ");
    let tau = if d.center_is_connected() {
        let t = central_representative(d, &class.lambda_b.representative)
            .expect("basic class has a central representative when Z_G is connected");
        Some(d.coinvariant_quotient().reduce(&t)).filter(|t| d.is_central(t)).or(Some(t))
    } else {
        None
    };
    Ok(BasicClass::Unramified { class, tau })
}

fn class_in_b(d: &BasedRootDatum, mu: &[i64], class: &KottwitzClass) -> Result<()> {
    let below = d.coinvariant_dominants_below(mu)?;
    if !below.iter().any(|c| c.key == class.lambda_b.key) {
        return Err(Error::Precondition(format!(
            "class of {:?} is not in B(G, {mu:?})",
            class.lambda_b.representative
        )));
    }
    Ok(())
}

/// `<ρ, μ − λ_b>`.
pub fn adlv_dimension(d: &BasedRootDatum, mu: &[i64], class: &KottwitzClass) -> Result<Q> {
    class_in_b(d, mu, class)?;
    let lambda = &class.lambda_b.representative;
    let dim = d.rho_pair(&sub(mu, lambda));
    // another lift of the same class
    let n = d.rank();
    for k in 0..n {
        let mut e = vec![0; n];
        e[k] = 1;
        let other = add(lambda, &sub(&d.sigma_apply(&e), &e));
        assert_eq!(d.rho_pair(&sub(mu, &other)), dim, "⟨ρ, ·⟩ depends on the lift");
    }
    Ok(dim)
}

/// `⊔_{λ_σ = λ_b} 𝔹_μ(λ)`, as element indices of `crystal`.
#[derive(Clone, Debug)]
pub struct ComponentSet {
    pub crystal: Crystal,
    pub labels: Vec<usize>,
}

pub fn component_set(d: &BasedRootDatum, mu: &[i64], class: &KottwitzClass) -> Result<ComponentSet> {
    if !d.center_is_connected() {
        return Err(Error::Unsupported(format!(
            "{} has disconnected centre; component labels need Z_G connected",
            d.label()
        )));
    }
    class_in_b(d, mu, class)?;
    let crystal = Crystal::highest_weight(d, mu, DEFAULT_CAP)?;
    let quo = d.coinvariant_quotient();
    let labels = (0..crystal.len())
        .filter(|&b| quo.key(crystal.wt(b)) == class.lambda_b.key)
        .collect();
    Ok(ComponentSet { crystal, labels })
}

/// The label data `(ν_b, τ_b)` attached to one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuTau {
    pub nu: Coweight,
    pub tau: Coweight,
    pub eps: Vec<i64>,
}

/// Pairings `<α_i, ν>` of the least `ν` with `<α_i, ν> ≥ ε_i` and `λ + ν − σν` dominant.
pub fn minimal_nu_pairings(d: &BasedRootDatum, eps: &[i64], lambda_pairings: &[i64]) -> Vec<i64> {
    let r = d.semisimple_rank();
    let perm = d.sigma_perm();
    let mut inv = vec![0; r];
    for j in 0..r {
        inv[perm[j]] = j;
    }
    // <α_i, σν> = <α_{σ^{-1} i}, ν>: x_i ≥ x_{σ^{-1} i} − <α_i, λ>
    let mut x = eps.to_vec();
    for _ in 0..=r {
        let mut changed = false;
        for i in 0..r {
            let v = x[inv[i]] - lambda_pairings[i];
            if v > x[i] {
                x[i] = v;
                changed = true;
            }
        }
        if !changed {
            return x;
        }
    }
    panic!("ν constraints have a positive cycle");
}

/// `(ν_b, τ_b)` for element `b` of `crystal` (a crystal `𝔹_μ` over `d`).
pub fn find_nu_tau(d: &BasedRootDatum, crystal: &Crystal, b: usize) -> Result<NuTau> {
    if !d.center_is_connected() {
        return Err(Error::Unsupported(format!("{} has disconnected centre", d.label())));
    }
    let lambda = crystal.wt(b).to_vec();
    let eps = crystal.eps_vec(b);
    let x = minimal_nu_pairings(d, &eps, &d.dynkin(&lambda));
    let nu = d.lift_dynkin(&x).expect("fundamental coweights exist when Z_G is connected");
    let centre = Quotient::new(d.rank(), d.center_basis());
    let nu = centre.reduce(&nu);
    debug_assert_eq!(d.dynkin(&nu), x);
    let tau = add(&lambda, &sub(&nu, &d.sigma_apply(&nu)));
    Ok(NuTau { nu, tau, eps })
}

/// Checks a `(ν, τ)` pair against the defining inequalities, returning what failed.
pub fn check_nu_tau(d: &BasedRootDatum, crystal: &Crystal, b: usize, nt: &NuTau) -> core::result::Result<(), &'static str> {
    let x = d.dynkin(&nt.nu);
    let lambda = crystal.wt(b);
    if x.iter().zip(&nt.eps).any(|(a, e)| a < e) {
        return Err("⟨α, ν⟩ ≥ ε_α fails");
    }
    if !d.is_dominant(&nt.tau) {
        return Err("τ is not dominant");
    }
    if add(lambda, &sub(&nt.nu, &d.sigma_apply(&nt.nu))) != nt.tau {
        return Err("τ ≠ λ + ν − σν");
    }
    if !d.same_coinvariant(&nt.tau, lambda) {
        return Err("τ_σ ≠ λ_σ");
    }
    for orbit in d.sigma_orbits() {
        if !orbit.iter().any(|&i| x[i] == nt.eps[i]) {
            return Err("no equality in a σ-orbit");
        }
    }
    match crystal.hom_membership(d, b, &nt.nu) {
        Ok(true) => Ok(()),
        _ => Err("b is not in the image of i_ν"),
    }
}

/// `Δ_τ`: simple roots whose `σ`-orbit sum kills `τ`.
pub fn j_tau_simple_roots(d: &BasedRootDatum, tau: &[i64]) -> Vec<usize> {
    let r = d.semisimple_rank();
    let perm = d.sigma_perm();
    let m = d.sigma_order();
    let x = d.dynkin(tau);
    let out: Vec<usize> = (0..r)
        .filter(|&i| {
            let mut j = i;
            let mut s = 0;
            for _ in 0..m {
                s += x[j];
                j = perm[j];
            }
            s == 0
        })
        .collect();
    if d.is_dominant(tau) {
        let simple: Vec<usize> = (0..r)
            .filter(|&i| {
                let mut j = i;
                (0..m).all(|_| {
                    let z = x[j] == 0;
                    j = perm[j];
                    z
                })
            })
            .collect();
        assert_eq!(out, simple);
    }
    out
}

/// Mass of `V_μ|_{Ĝ^σ}` on classes with central Newton point.
pub fn tate_dim_by_newton(d: &BasedRootDatum, mu: &[i64]) -> Result<u64> {
    let table = restrict_sigma(d, &weight_table(d, mu)?);
    Ok(table
        .entries
        .iter()
        .filter(|(c, _)| KottwitzClass::of(d, &c.representative).is_basic(d))
        .map(|(_, m)| m)
        .sum())
}

/// Fundamental coweights of `d` where they exist in `X_•(T)`; otherwise the least
/// positive multiple that does.
pub fn fundamental_coweights(d: &BasedRootDatum) -> Vec<Coweight> {
    let r = d.semisimple_rank();
    (0..r)
        .map(|i| {
            (1..)
                .find_map(|k| {
                    let mut p = vec![0; r];
                    p[i] = k;
                    d.lift_dynkin(&p)
                })
                .expect("some multiple lies in the lattice")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::catalog::by_label;

    #[test]
    fn newton_points() {
        let a1 = by_label("A1").unwrap();
        assert_eq!(newton_point(&a1, &[3]), vec![Q::from(3)]);
        assert_eq!(newton_point(&a1, &[-3]), vec![Q::from(3)]);
        let a = by_label("A1^2").unwrap();
        assert_eq!(newton_point(&a, &[1, 0]), vec![Q::new(1, 2), Q::new(1, 2)]);
    }

    #[test]
    fn classes_below() {
        let a1 = by_label("A1").unwrap();
        let c = unramified_classes_in_b(&a1, &[2]).unwrap();
        let reps: Vec<_> = c.iter().map(|k| d_rep(k)).collect();
        assert_eq!(reps, vec![vec![2], vec![0]]);
        assert_eq!(unramified_classes_in_b(&a1, &[0]).unwrap().len(), 1);
    }

    fn d_rep(k: &KottwitzClass) -> Coweight {
        k.lambda_b.representative.clone()
    }

    #[test]
    fn split_minuscule_is_not_basic_unramified() {
        for label in ["A2", "A3", "B2"] {
            let d = by_label(label).unwrap();
            for mu in fundamental_coweights(&d) {
                let minuscule = crate::crystal::min_set(&d).contains(&d.dynkin(&mu))
                    && d.dynkin(&mu).iter().sum::<i64>() == 1;
                if minuscule && !d.coroot_coordinates(&mu).unwrap().iter().all(|c| c.is_integer()) {
                    assert!(!basic_is_unramified(&d, &mu).unwrap(), "{label} {mu:?}");
                }
            }
        }
        let a1 = by_label("A1").unwrap();
        assert!(basic_is_unramified(&a1, &[0]).unwrap());
        match basic_class(&a1, &[0]).unwrap() {
            BasicClass::Unramified { tau, .. } => assert_eq!(tau, Some(vec![0])),
            BasicClass::NotUnramified => panic!(),
        }
    }

    #[test]
    fn delta_tau() {
        let a2 = by_label("A2").unwrap();
        assert_eq!(j_tau_simple_roots(&a2, &[1, 0]), vec![1]);
        assert_eq!(j_tau_simple_roots(&a2, &[0, 0]), vec![0, 1]);
        assert!(j_tau_simple_roots(&a2, &[1, 1]).is_empty());
    }

    #[test]
    fn pgl2_middle_element() {
        let d = by_label("A1").unwrap();
        let c = Crystal::highest_weight(&d, &[2], 100).unwrap();
        let mid = c.mv_set(&[0])[0];
        let nt = find_nu_tau(&d, &c, mid).unwrap();
        assert_eq!(nt.nu, vec![1]);
        assert_eq!(nt.tau, vec![0]);
        check_nu_tau(&d, &c, mid, &nt).unwrap();
        let top = c.mv_set(&[2])[0];
        let nt = find_nu_tau(&d, &c, top).unwrap();
        assert_eq!((nt.nu, nt.tau), (vec![0], vec![2]));
    }

    #[test]
    fn quaternionic_obstruction() {
        // A1^4 with Γ permuting the factors; μ_ad(−1) = (−1)^r for r noncompact slots
        let d = by_label("A1^4").unwrap();
        for r in 0..=4 {
            let mu: Vec<i64> = (0..4).map(|k| i64::from(k < r)).collect();
            let ob = inner_form_obstruction(&d, &mu).unwrap();
            assert_eq!(ob.invariants, vec![2]);
            let v = ob.values.iter().find(|(z, _)| z == &vec![1]).unwrap().1;
            assert_eq!(v, Q::new(r as i64 % 2, 2));
        }
    }
}
