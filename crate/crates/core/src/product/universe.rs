use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_POINTS};

/// Mixed-radix indexing of `Σ_1 × … × Σ_k`. The last factor varies
/// fastest, so for two factors the tuple `(i, j)` has index `i * n_2 + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductUniverse {
    factors: Vec<ClosureSpace>,
    strides: Vec<usize>,
    n: usize,
}

impl ProductUniverse {
    pub fn new(factors: Vec<ClosureSpace>) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::TooFewFactors(factors.len()));
        }
        let n = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.n()))
            .unwrap_or(usize::MAX);
        if n > MAX_POINTS {
            return Err(Error::TooLarge {
                points: n,
                cap: MAX_POINTS,
            });
        }
        let mut strides = vec![1; factors.len()];
        for i in (0..factors.len() - 1).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].n();
        }
        Ok(ProductUniverse {
            factors,
            strides,
            n,
        })
    }

    pub fn factors(&self) -> &[ClosureSpace] {
        &self.factors
    }

    pub fn factor(&self, beta: usize) -> &ClosureSpace {
        &self.factors[beta]
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn radix(&self, beta: usize) -> usize {
        self.factors[beta].n()
    }

    pub fn index(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.arity() {
            return Err(Error::BadTuple {
                expected: self.arity(),
                got: tuple.len(),
            });
        }
        let mut idx = 0;
        for (factor, (&c, &s)) in tuple.iter().zip(&self.strides).enumerate() {
            if c >= self.radix(factor) {
                return Err(Error::CoordinateOutOfRange { factor, coord: c });
            }
            idx += c * s;
        }
        Ok(idx)
    }

    pub fn tuple(&self, idx: usize) -> Vec<usize> {
        (0..self.arity()).map(|b| self.coord(idx, b)).collect()
    }

    pub fn coord(&self, idx: usize, beta: usize) -> usize {
        (idx / self.strides[beta]) % self.radix(beta)
    }

    /// `p[q, β]`: `p` with its β-coordinate replaced by `q`.
    pub fn with_coord(&self, p: usize, beta: usize, q: usize) -> usize {
        p - self.coord(p, beta) * self.strides[beta] + q * self.strides[beta]
    }

    /// `p[B, β]`.
    pub fn place(&self, p: usize, beta: usize, b: PointSet) -> PointSet {
        b.iter().map(|q| self.with_coord(p, beta, q)).collect()
    }

    /// `p[B, C]` with `B` in factor `beta` and `C` in factor `gamma`.
    pub fn place2(
        &self,
        p: usize,
        beta: usize,
        b: PointSet,
        gamma: usize,
        c: PointSet,
    ) -> PointSet {
        b.iter()
            .map(|q| self.place(self.with_coord(p, beta, q), gamma, c))
            .fold(PointSet::EMPTY, PointSet::union)
    }

    /// `R_β[p] = {q ∈ Σ_β | p[q, β] ∈ R}`.
    pub fn section(&self, r: PointSet, beta: usize, p: usize) -> PointSet {
        (0..self.radix(beta))
            .filter(|&q| r.contains(self.with_coord(p, beta, q)))
            .collect()
    }

    /// Representatives of the β-lines: points whose β-coordinate is 0.
    pub fn line_bases(&self, beta: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&p| self.coord(p, beta) == 0)
    }

    /// `π_α^{-1}(a)`.
    pub fn cylinder(&self, alpha: usize, a: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&p| a.contains(self.coord(p, alpha)))
            .collect()
    }

    /// `⋃_α π_α^{-1}(a_α)`.
    pub fn cross(&self, a: &[PointSet]) -> PointSet {
        a.iter()
            .enumerate()
            .fold(PointSet::EMPTY, |acc, (alpha, &x)| {
                acc.union(self.cylinder(alpha, x))
            })
    }

    /// `∏_α a_α`.
    pub fn full_box(&self, a: &[PointSet]) -> PointSet {
        (0..self.n)
            .filter(|&p| (0..self.arity()).all(|alpha| a[alpha].contains(self.coord(p, alpha))))
            .collect()
    }

    /// `π_β(R)`.
    pub fn project(&self, r: PointSet, beta: usize) -> PointSet {
        r.iter().map(|p| self.coord(p, beta)).collect()
    }

    /// All unions of cylinders `⋃_α π_α^{-1}(a_α)` with `a ∈ ∏ L_α`,
    /// deduplicated and in ascending order.
    pub fn cylinders(&self) -> Vec<PointSet> {
        let mut acc = vec![PointSet::EMPTY];
        for (alpha, f) in self.factors.iter().enumerate() {
            let cyl: Vec<PointSet> = f
                .family()
                .iter()
                .map(|&a| self.cylinder(alpha, a))
                .collect();
            acc = acc
                .iter()
                .flat_map(|&x| cyl.iter().map(move |&c| x.union(c)))
                .collect();
        }
        acc.sort_unstable();
        acc.dedup();
        acc
    }

    /// Product labels such as `a,b`.
    pub fn labels(&self) -> Vec<String> {
        (0..self.n)
            .map(|p| {
                self.tuple(p)
                    .iter()
                    .enumerate()
                    .map(|(b, &c)| self.factors[b].label(c))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect()
    }

    /// Parses `a,b` (factor labels joined by commas).
    pub fn parse_point(&self, s: &str) -> Result<usize> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != self.arity() {
            return Err(Error::BadTuple {
                expected: self.arity(),
                got: parts.len(),
            });
        }
        let coords = parts
            .iter()
            .enumerate()
            .map(|(b, l)| {
                self.factors[b]
                    .point_index(l)
                    .ok_or_else(|| Error::UnknownLabel((*l).to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.index(&coords)
    }

    /// Canonical rendering, points in index order separated by spaces.
    pub fn render(&self, s: PointSet) -> String {
        if s.is_empty() {
            return "-".to_string();
        }
        let labels = self.labels();
        s.iter()
            .map(|p| labels[p].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}
