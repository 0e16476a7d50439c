//! Target references in suites.
//!
//! ```text
//! mo3  pow3  two  file:PATH                lattices
//! box:mo3,mo3  fraser:..  circle:..        products of two or three lattices
//! hilbert:2,2                              the subspace lattice of C^m ⊗ C^n
//! subspace:diagonal|bell|slice             fixed subspaces of C^2 ⊗ C^2
//! subspace-file:PATH                       a subspace file
//! ```

use std::path::Path;

use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::hilbert::text::parse_subspace;
use crate::hilbert::{check_dim, gr_int, GRSubspace, GaussianRational};
use crate::product::{build_product, ProductKind, ProductUniverse};
use crate::text::parse_lattice;

#[derive(Clone, Debug)]
pub enum Target {
    Lattice(ClosureSpace),
    Product {
        kind: ProductKind,
        universe: ProductUniverse,
        space: ClosureSpace,
    },
    Hilbert {
        m: usize,
        n: usize,
    },
    Subspace {
        m: usize,
        n: usize,
        v: GRSubspace,
    },
}

impl Target {
    /// The closure space a lattice property is evaluated on.
    pub fn space(&self) -> Option<&ClosureSpace> {
        match self {
            Target::Lattice(s) | Target::Product { space: s, .. } => Some(s),
            _ => None,
        }
    }
}

fn bad(reference: &str, why: &str) -> Error {
    Error::Precondition(format!("cannot resolve target `{reference}`: {why}"))
}

fn read(base: &Path, path: &str) -> Result<String> {
    std::fs::read_to_string(base.join(path)).map_err(|e| bad(path, &e.to_string()))
}

fn numeric_suffix(s: &str, prefix: &str) -> Option<usize> {
    s.strip_prefix(prefix)?.parse().ok()
}

/// A lattice reference: `moN`, `powN`, `two` or `file:PATH`.
pub fn resolve_lattice(reference: &str, base: &Path) -> Result<ClosureSpace> {
    if reference == "two" {
        return Ok(ClosureSpace::two());
    }
    if let Some(n) = numeric_suffix(reference, "mo") {
        return ClosureSpace::mo(n);
    }
    if let Some(n) = numeric_suffix(reference, "pow") {
        return ClosureSpace::powerset(n);
    }
    if let Some(path) = reference.strip_prefix("file:") {
        return parse_lattice(&read(base, path)?);
    }
    Err(bad(reference, "expected moN, powN, two or file:PATH"))
}

fn e(i: usize) -> Vec<GaussianRational> {
    (0..4).map(|k| gr_int((k == i) as i64, 0)).collect()
}

fn named_subspace(name: &str) -> Option<GRSubspace> {
    let add = |a: Vec<GaussianRational>, b: Vec<GaussianRational>| -> Vec<GaussianRational> {
        a.into_iter().zip(b).map(|(x, y)| x + y).collect()
    };
    let vectors = match name {
        "diagonal" => vec![e(0), e(3)],
        "bell" => vec![add(e(0), e(3))],
        "slice" => vec![e(0), e(1)],
        _ => return None,
    };
    Some(GRSubspace::span(4, vectors).expect("length 4"))
}

pub fn resolve(reference: &str, base: &Path) -> Result<Target> {
    let (head, rest) = reference.split_once(':').unwrap_or((reference, ""));
    match head {
        "box" | "fraser" | "circle" => {
            let kind: ProductKind = head.parse()?;
            let factors = rest
                .split(',')
                .map(|f| resolve_lattice(f, base))
                .collect::<Result<Vec<_>>>()?;
            if !(2..=3).contains(&factors.len()) {
                return Err(bad(reference, "a product takes two or three factors"));
            }
            let universe = ProductUniverse::new(factors)?;
            let space = build_product(kind, &universe)?;
            Ok(Target::Product {
                kind,
                universe,
                space,
            })
        }
        "hilbert" => {
            let dims: Vec<usize> = rest
                .split(',')
                .map(|d| {
                    d.parse()
                        .map_err(|_| bad(reference, "expected hilbert:m,n"))
                })
                .collect::<Result<_>>()?;
            let [m, n] = dims[..] else {
                return Err(bad(reference, "expected hilbert:m,n"));
            };
            check_dim(m)?;
            check_dim(n)?;
            Ok(Target::Hilbert { m, n })
        }
        "subspace" => named_subspace(rest)
            .map(|v| Target::Subspace { m: 2, n: 2, v })
            .ok_or_else(|| bad(reference, "known subspaces are diagonal, bell and slice")),
        "subspace-file" => {
            let (m, n, v) = parse_subspace(&read(base, rest)?)?;
            Ok(Target::Subspace { m, n, v })
        }
        _ => resolve_lattice(reference, base).map(Target::Lattice),
    }
}
