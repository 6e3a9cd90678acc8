//! Integer matrices: Smith normal form, exact solving, finitely generated quotients.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::Q;

pub type Mat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &Mat, rows: usize, cols: usize) -> Mat {
    (0..cols).map(|j| (0..rows).map(|i| a[i][j]).collect()).collect()
}

pub fn mat_vec(a: &Mat, x: &[i64]) -> Vec<i64> {
    a.iter().map(|row| dot(row, x)).collect()
}

pub fn mat_mul(a: &Mat, b: &Mat, inner: usize) -> Mat {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `U A V = D` with `U`, `V` unimodular and `diag` the nonzero invariant factors.
#[derive(Clone, Debug)]
pub struct Smith {
    pub rows: usize,
    pub cols: usize,
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub diag: Vec<i64>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub fn smith(a: &Mat, rows: usize, cols: usize) -> Smith {
    let mut a: Mat = a.clone();
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);

    // row_i += c * row_j
    let row_add = |a: &mut Mat, u: &mut Mat, ui: &mut Mat, i: usize, j: usize, c: i64| {
        for k in 0..cols {
            a[i][k] += c * a[j][k];
        }
        for k in 0..rows {
            u[i][k] += c * u[j][k];
            ui[k][j] -= c * ui[k][i];
        }
    };
    let row_swap = |a: &mut Mat, u: &mut Mat, ui: &mut Mat, i: usize, j: usize| {
        a.swap(i, j);
        u.swap(i, j);
        for row in ui.iter_mut() {
            row.swap(i, j);
        }
    };
    let col_add = |a: &mut Mat, v: &mut Mat, i: usize, j: usize, c: i64| {
        for row in a.iter_mut() {
            row[i] += c * row[j];
        }
        for row in v.iter_mut() {
            row[i] += c * row[j];
        }
    };
    let col_swap = |a: &mut Mat, v: &mut Mat, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };

    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(p, q)| a[i][j].abs() < a[p][q].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((p, q)) = best else { break };
        row_swap(&mut a, &mut u, &mut u_inv, t, p);
        col_swap(&mut a, &mut v, t, q);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let c = a[i][t].div_euclid(a[t][t]);
                    row_add(&mut a, &mut u, &mut u_inv, i, t, -c);
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let c = a[t][j].div_euclid(a[t][t]);
                    col_add(&mut a, &mut v, j, t, -c);
                    clean &= a[t][j] == 0;
                }
            }
            if !clean {
                let mut m = (t, t);
                for i in t + 1..rows {
                    if a[i][t] != 0 && a[i][t].abs() < a[m.0][m.1].abs() {
                        m = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if a[t][j] != 0 && a[t][j].abs() < a[m.0][m.1].abs() {
                        m = (t, j);
                    }
                }
                if m.0 != t {
                    row_swap(&mut a, &mut u, &mut u_inv, t, m.0);
                }
                if m.1 != t {
                    col_swap(&mut a, &mut v, t, m.1);
                }
                continue;
            }
            let d = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % d != 0));
            match bad {
                Some(i) => row_add(&mut a, &mut u, &mut u_inv, t, i, 1),
                None => break,
            }
        }
        if a[t][t] < 0 {
            for k in 0..cols {
                a[t][k] = -a[t][k];
            }
            for k in 0..rows {
                u[t][k] = -u[t][k];
                u_inv[k][t] = -u_inv[k][t];
            }
        }
        diag.push(a[t][t]);
    }
    Smith { rows, cols, u, u_inv, v, diag }
}

/// Some integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &Mat, rows: usize, cols: usize, b: &[i64]) -> Option<Vec<i64>> {
    let s = smith(a, rows, cols);
    let ub = mat_vec(&s.u, b);
    let mut y = vec![0; cols];
    for (i, &c) in ub.iter().enumerate() {
        if i < s.rank() {
            if c % s.diag[i] != 0 {
                return None;
            }
            y[i] = c / s.diag[i];
        } else if c != 0 {
            return None;
        }
    }
    Some(mat_vec(&s.v, &y))
}

/// Basis of the integer kernel of `A`.
pub fn kernel(a: &Mat, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    let s = smith(a, rows, cols);
    (s.rank()..cols)
        .map(|j| (0..cols).map(|i| s.v[i][j]).collect())
        .collect()
}

/// Some rational solution of `A x = b`, if one exists; free variables are set to zero.
pub fn solve_rational(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(r, &x)| {
            let mut r = r.clone();
            r.push(x);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / m[r][c];
        for k in c..=cols {
            m[r][k] = m[r][k] * inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for k in c..=cols {
                    let d = m[r][k] * f;
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Some(x)
}

pub fn to_q(a: &Mat) -> Vec<Vec<Q>> {
    a.iter().map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect()
}

/// The quotient `Z^n / L` for a sublattice `L` given by generators.
#[derive(Clone, Debug)]
pub struct Quotient {
    dim: usize,
    u: Mat,
    u_inv: Mat,
    /// One modulus per coordinate of `U x`: `d_i` on the torsion part, 0 on the free part.
    moduli: Vec<i64>,
}

impl Quotient {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> Self {
        let cols = generators.len();
        let m: Mat = (0..dim).map(|i| generators.iter().map(|g| g[i]).collect()).collect();
        let s = smith(&m, dim, cols);
        let mut moduli = vec![0; dim];
        moduli[..s.rank()].copy_from_slice(&s.diag);
        Quotient { dim, u: s.u, u_inv: s.u_inv, moduli }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical coordinates of the class of `x`.
    pub fn key(&self, x: &[i64]) -> Vec<i64> {
        let y = mat_vec(&self.u, x);
        y.iter()
            .zip(&self.moduli)
            .filter(|(_, &d)| d != 1)
            .map(|(&c, &d)| if d == 0 { c } else { c.rem_euclid(d) })
            .collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.key(x).iter().all(|&c| c == 0)
    }

    pub fn same_class(&self, x: &[i64], y: &[i64]) -> bool {
        self.contains(&sub(x, y))
    }

    /// Torsion invariants (each > 1) followed by one 0 per free summand.
    pub fn invariants(&self) -> Vec<i64> {
        self.moduli.iter().copied().filter(|&d| d != 1).collect()
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|&&d| d == 0).count()
    }

    pub fn order(&self) -> Option<i64> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(self.moduli.iter().product())
    }

    /// A lattice vector whose class has the given key.
    pub fn lift(&self, key: &[i64]) -> Vec<i64> {
        let mut y = vec![0; self.dim];
        let mut k = key.iter();
        for (i, &d) in self.moduli.iter().enumerate() {
            if d != 1 {
                y[i] = *k.next().expect("key length");
            }
        }
        mat_vec(&self.u_inv, &y)
    }

    /// The canonical representative of the class of `x`.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        self.lift(&self.key(x))
    }

    /// All keys of a finite quotient, in lexicographic order.
    pub fn elements(&self) -> Option<Vec<Vec<i64>>> {
        let mods = self.invariants();
        if mods.iter().any(|&d| d == 0) {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &d in &mods {
            out = out
                .into_iter()
                .flat_map(|k: Vec<i64>| {
                    (0..d).map(move |c| {
                        let mut k = k.clone();
                        k.push(c);
                        k
                    })
                })
                .collect();
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_smith(a: &Mat, rows: usize, cols: usize) {
        let s = smith(a, rows, cols);
        let d = mat_mul(&mat_mul(&s.u, a, rows), &s.v, cols);
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j && i < s.rank() { s.diag[i] } else { 0 };
                assert_eq!(d[i][j], want);
            }
        }
        assert_eq!(mat_mul(&s.u, &s.u_inv, rows), identity(rows));
        for w in s.diag.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn smith_examples() {
        check_smith(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3, 3);
        check_smith(&vec![vec![2, -1], vec![-1, 2]], 2, 2);
        check_smith(&vec![vec![0, 0], vec![0, 3], vec![6, 0]], 3, 2);
        let s = smith(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3, 3);
        assert_eq!(s.diag, vec![2, 6, 12]);
    }

    #[test]
    fn quotient_of_a2_root_lattice() {
        // weight lattice of A2 modulo its root lattice is Z/3
        let q = Quotient::new(2, &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(q.invariants(), vec![3]);
        assert_eq!(q.order(), Some(3));
        assert!(q.contains(&[1, 1]));
        assert!(!q.contains(&[1, 0]));
        assert!(q.same_class(&[1, 0], &[0, 2]));
        for x in [[1, 0], [0, 1], [5, -3]] {
            assert!(q.same_class(&q.reduce(&x), &x));
        }
    }

    #[test]
    fn solve_and_kernel() {
        let a = vec![vec![1, 1, 1], vec![0, 2, 4]];
        let x = solve_integer(&a, 2, 3, &[3, 6]).unwrap();
        assert_eq!(mat_vec(&a, &x), vec![3, 6]);
        assert!(solve_integer(&a, 2, 3, &[0, 1]).is_none());
        let k = kernel(&a, 2, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(mat_vec(&a, &k[0]), vec![0, 0]);
    }

    #[test]
    fn rational_solve() {
        let a = to_q(&vec![vec![2, -1], vec![-1, 2]]);
        let x = solve_rational(&a, &[Q::from(1), Q::from(0)]).unwrap();
        assert_eq!(x, vec![Q::new(2, 3), Q::new(1, 3)]);
    }
}
