//! Combinatorics of unramified reductive groups: based root data with a Frobenius
//! action, Littelmann path crystals, weight multiplicities, the unramified part of
//! the Kottwitz set, the Chevalley restriction divisor and the spherical Hecke
//! algebra of small `GL_n`.
#![no_std]

extern crate alloc;

use alloc::string::String;
use core::fmt;

pub mod chevalley;
pub mod crystal;
pub mod hecke;
pub mod kottwitz;
pub mod lattice;
pub mod repthy;
pub mod rootdata;

pub type Q = num_rational::Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The group specification is malformed or inconsistent.
    Spec(String),
    /// An argument does not satisfy an operation's precondition.
    Precondition(String),
    /// The computation would exceed a size cap.
    Cap(String),
    /// The case is outside what the theory implemented here covers.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Spec(m) => write!(f, "invalid group spec: {m}"),
            Error::Precondition(m) => write!(f, "precondition failed: {m}"),
            Error::Cap(m) => write!(f, "size cap exceeded: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
