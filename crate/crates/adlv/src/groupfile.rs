//! Group specification files.
//!
//! ```toml
//! label = "U3"
//! cartan_type = "A2"
//! sigma = [2, 1]              # images of the simple roots, 1-based
//! lattice = "adjoint"         # or "simply_connected"
//! ```
//!
//! Instead of a keyword, `lattice` may be a table with either `basis` (rows in
//! fundamental coweight coordinates) or all of `coroots`, `roots` and `frobenius`
//! (the matrix of `σ` on `X_•(T)`).

use std::fmt;
use std::ops::Range;
use std::path::Path;

use adlv_core::rootdata::{build_root_datum, catalog, BasedRootDatum, CartanType, GroupSpec, LatticeSpec};
use serde::Deserialize;
use toml::Spanned;

/// A malformed group file, located by line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFileError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for SpecFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for SpecFileError {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    label: Spanned<String>,
    cartan_type: Spanned<String>,
    sigma: Option<Spanned<Vec<usize>>>,
    lattice: Option<Spanned<RawLattice>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawLattice {
    Keyword(String),
    Table(RawLatticeTable),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLatticeTable {
    basis: Option<Vec<Vec<i64>>>,
    coroots: Option<Vec<Vec<i64>>>,
    roots: Option<Vec<Vec<i64>>>,
    frobenius: Option<Vec<Vec<i64>>>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].bytes().filter(|&b| b == b'\n').count() + 1
}

struct Located<'a> {
    text: &'a str,
}

impl Located<'_> {
    fn err(&self, span: Range<usize>, message: impl Into<String>) -> SpecFileError {
        SpecFileError { line: line_of(self.text, span.start), message: message.into() }
    }
}

/// Parses a group file into a specification.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecFileError> {
    let loc = Located { text };
    let raw: RawSpec = toml::from_str(text).map_err(|e| SpecFileError {
        line: e.span().map(|s| line_of(text, s.start)).unwrap_or(1),
        message: e.message().to_string(),
    })?;
    let factors = CartanType::parse_product(raw.cartan_type.get_ref())
        .map_err(|e| loc.err(raw.cartan_type.span(), e.to_string()))?;
    let r: usize = factors.iter().map(|t| t.rank()).sum();
    let sigma: Vec<usize> = match &raw.sigma {
        None => (0..r).collect(),
        Some(s) => {
            if s.get_ref().iter().any(|&x| x == 0) {
                return Err(loc.err(s.span(), "sigma entries are 1-based"));
            }
            s.get_ref().iter().map(|x| x - 1).collect()
        }
    };
    let lattice = match &raw.lattice {
        None => LatticeSpec::Adjoint,
        Some(l) => match l.get_ref() {
            RawLattice::Keyword(k) => match k.as_str() {
                "adjoint" => LatticeSpec::Adjoint,
                "simply_connected" => LatticeSpec::SimplyConnected,
                other => {
                    return Err(loc.err(l.span(), format!("unknown lattice `{other}`; expected adjoint or simply_connected")))
                }
            },
            RawLattice::Table(t) => match (&t.basis, &t.coroots, &t.roots, &t.frobenius) {
                (Some(b), None, None, None) => LatticeSpec::Basis(b.clone()),
                (None, Some(c), Some(a), Some(s)) => {
                    LatticeSpec::Explicit { coroots: c.clone(), roots: a.clone(), sigma: s.clone() }
                }
                _ => {
                    return Err(loc.err(
                        l.span(),
                        "lattice table needs either `basis` or all of `coroots`, `roots`, `frobenius`",
                    ))
                }
            },
        },
    };
    let spec = GroupSpec::new(raw.label.get_ref(), &factors, lattice, &sigma);
    // report semantic failures at the most specific key
    if let Err(e) = build_root_datum(&spec) {
        let span = match (&raw.lattice, &raw.sigma) {
            (Some(l), _) if matches!(l.get_ref(), RawLattice::Table(_)) => l.span(),
            (_, Some(s)) => s.span(),
            _ => raw.cartan_type.span(),
        };
        return Err(loc.err(span, e.to_string()));
    }
    Ok(spec)
}

pub fn parse_group(text: &str) -> Result<BasedRootDatum, SpecFileError> {
    let spec = parse_group_spec(text)?;
    Ok(build_root_datum(&spec).expect("validated while parsing"))
}

/// Resolves `--group`: a path to a group file, or a catalog label.
pub fn load_group(arg: &str) -> anyhow::Result<BasedRootDatum> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return parse_group(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()));
    }
    catalog::by_label(arg).ok_or_else(|| {
        anyhow::anyhow!(
            "`{arg}` is neither a group file nor a catalog label (known: {})",
            catalog::labels().join(", ")
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_group_file() {
        let d = parse_group("label = \"U3\"\ncartan_type = \"A2\"\nsigma = [2, 1]\n").unwrap();
        assert_eq!(d.sigma_order(), 2);
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_group("label = \"x\"\ncartan_type = \"Q7\"\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_group("label = \"x\"\ncartan_type = \"A2\"\n\nsigma = [1, 3]\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_group("label = \"x\"\ncartan_type = \"A2\"\nsigma = [1, 2\n").unwrap_err();
        assert!(e.line >= 3, "{e}");
        let e = parse_group("label = \"x\"\ncartan_type = \"A3\"\nlattice = \"weird\"\n").unwrap_err();
        assert_eq!(e.line, 3);
    }
}
