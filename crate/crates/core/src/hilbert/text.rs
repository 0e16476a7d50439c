//! Gaussian-rational literals and subspace files.
//!
//! A scalar is written `gr <re> <im>` with each part `num/den` or an
//! integer. A subspace file starts with `dims: m n` and lists one spanning
//! vector per line as `m·n` scalars in tensor order.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;

use crate::error::{Error, Result};

use super::subspace::Subspace;
use super::tensor::check_dim;
use super::GaussianRational;

fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let err = || Error::Parse {
        line,
        msg: format!("bad rational `{tok}`"),
    };
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d == BigInt::from(0) {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// Parses a whitespace-separated sequence of `gr re im` literals.
pub fn parse_gr_vector(text: &str, line: usize) -> Result<Vec<GaussianRational>> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if !toks.len().is_multiple_of(3) {
        return Err(Error::Parse {
            line,
            msg: "expected groups of `gr <re> <im>`".into(),
        });
    }
    toks.chunks(3)
        .map(|c| {
            if c[0] != "gr" {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `gr`, found `{}`", c[0]),
                });
            }
            Ok(Complex::new(
                parse_rational(c[1], line)?,
                parse_rational(c[2], line)?,
            ))
        })
        .collect()
}

pub fn render_gr(x: &GaussianRational) -> String {
    format!(
        "gr {}/{} {}/{}",
        x.re.numer(),
        x.re.denom(),
        x.im.numer(),
        x.im.denom()
    )
}

pub fn render_gr_vector(v: &[GaussianRational]) -> String {
    v.iter().map(render_gr).collect::<Vec<_>>().join(" ")
}

/// Returns `(m, n, V)`.
pub fn parse_subspace(text: &str) -> Result<(usize, usize, Subspace<GaussianRational>)> {
    let mut dims = None;
    let mut vectors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match dims {
            None => {
                let rest = t.strip_prefix("dims:").ok_or_else(|| Error::Parse {
                    line,
                    msg: "expected `dims: m n` header".into(),
                })?;
                let ds: Vec<usize> = rest
                    .split_whitespace()
                    .map(|d| {
                        d.parse().map_err(|_| Error::Parse {
                            line,
                            msg: format!("bad dimension `{d}`"),
                        })
                    })
                    .collect::<Result<_>>()?;
                let [m, n] = ds[..] else {
                    return Err(Error::Parse {
                        line,
                        msg: "expected two dimensions".into(),
                    });
                };
                check_dim(m)?;
                check_dim(n)?;
                dims = Some((m, n));
            }
            Some((m, n)) => {
                let v = parse_gr_vector(t, line)?;
                if v.len() != m * n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vector has {} entries, expected {}", v.len(), m * n),
                    });
                }
                vectors.push(v);
            }
        }
    }
    let (m, n) = dims.ok_or(Error::Parse {
        line: 1,
        msg: "missing `dims:` header".into(),
    })?;
    Ok((m, n, Subspace::span(m * n, vectors)?))
}
