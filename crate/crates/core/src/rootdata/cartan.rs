use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::Mat;
use crate::{Error, Result};

/// Irreducible Cartan types with Bourbaki numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Spec(format!("malformed Cartan type `{s}`"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (letter.to_ascii_uppercase(), n) {
            ('A', n) if n >= 1 => CartanType::A(n),
            ('B', n) if n >= 2 => CartanType::B(n),
            ('C', n) if n >= 2 => CartanType::C(n),
            ('D', n) if n >= 4 => CartanType::D(n),
            ('E', n) if (6..=8).contains(&n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(bad()),
        };
        Ok(t)
    }

    /// Parses products such as `A1xA1` or `B3 x B3`.
    pub fn parse_product(s: &str) -> Result<Vec<Self>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split(|c| c == 'x' || c == '×' || c == '*')
            .map(CartanType::parse)
            .collect()
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    /// `a[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(self) -> Mat {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::D(_) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            CartanType::E(_) => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            CartanType::F4 => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            CartanType::G2 => link(0, 1),
        }
        match self {
            CartanType::B(_) => a[n - 1][n - 2] = -2,
            CartanType::C(_) => a[n - 2][n - 1] = -2,
            CartanType::F4 => a[2][1] = -2,
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }

    pub fn weyl_order(self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u64 << n) * fact(n),
            CartanType::D(n) => (1u64 << (n - 1)) * fact(n),
            CartanType::E(6) => 51_840,
            CartanType::E(7) => 2_903_040,
            CartanType::E(_) => 696_729_600,
            CartanType::F4 => 1152,
            CartanType::G2 => 12,
        }
    }

    /// Dual type (roots and coroots exchanged).
    pub fn dual(self) -> Self {
        match self {
            CartanType::B(n) => CartanType::C(n),
            CartanType::C(n) => CartanType::B(n),
            t => t,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

/// Block-diagonal Cartan matrix of a product.
pub fn product_cartan(factors: &[CartanType]) -> Mat {
    let r: usize = factors.iter().map(|t| t.rank()).sum();
    let mut a = vec![vec![0; r]; r];
    let mut off = 0;
    for t in factors {
        let b = t.cartan_matrix();
        for (i, row) in b.iter().enumerate() {
            a[off + i][off..off + row.len()].copy_from_slice(row);
        }
        off += t.rank();
    }
    a
}

/// Checks diagonal 2, nonpositive off-diagonal entries and the symmetric zero pattern.
pub fn is_cartan_matrix(a: &Mat) -> bool {
    let n = a.len();
    (0..n).all(|i| {
        a[i].len() == n
            && a[i][i] == 2
            && (0..n).all(|j| i == j || (a[i][j] <= 0 && (a[i][j] == 0) == (a[j][i] == 0)))
    })
}
