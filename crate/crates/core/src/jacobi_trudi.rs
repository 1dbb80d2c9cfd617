//! Jacobi–Trudi matrices and the third route to bottom Schur functions.
//!
//! Every row `i` of `(h_{λ_i - i + j})` with `λ_i < i` contains exactly one
//! `h_0 = 1`. Deleting those rows and the columns holding their `1`s leaves a
//! `rank(λ) × rank(λ)` minor. With `h_n ↦ p̃_n` its determinant is the
//! lowest-degree part of `s_λ`, up to the Laplace sign
//! `(-1)^{Σ removed rows + Σ removed columns}`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{q_int, Basis, SymFn};

/// Square matrix of `h` subscripts. A negative subscript is the zero entry
/// and subscript 0 is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JTMatrix {
    pub subscripts: Vec<Vec<i64>>,
}

impl JTMatrix {
    pub fn size(&self) -> usize {
        self.subscripts.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.subscripts[i][j]
    }

    /// Renders the grid with `1` for `h_0`, `0` for the zero entry, and the
    /// subscript otherwise.
    pub fn display_grid(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for JTMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.subscripts {
            let cells: Vec<String> = row
                .iter()
                .map(|&s| match s {
                    s if s < 0 => "0".to_string(),
                    0 => "1".to_string(),
                    s => format!("h{s}"),
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A skew shape `outer / inner`; `inner` is padded with zeros to the length
/// of `outer` when read through [`SkewShape::inner_part`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn inner_part(&self, i: usize) -> usize {
        self.inner.part(i)
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self
            .inner
            .padded(self.outer.len())
            .iter()
            .map(|p| p.to_string())
            .collect();
        write!(f, "{}/{}", self.outer, inner.join(","))
    }
}

/// `(λ_i - i + j)` for `i, j = 1..ℓ(λ)`.
pub fn jt_matrix(lambda: &Partition) -> Result<JTMatrix> {
    if lambda.is_empty() {
        return Err(Error::Precondition(
            "Jacobi-Trudi matrix of the empty partition".into(),
        ));
    }
    let n = lambda.len() as i64;
    let subscripts = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| lambda.part(i as usize) as i64 - i + j)
                .collect()
        })
        .collect();
    Ok(JTMatrix { subscripts })
}

/// The minor left after deleting every row and column with an `h_0` entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JTStar {
    pub minor: JTMatrix,
    /// 1-based indices into the full matrix.
    pub removed_rows: Vec<usize>,
    pub removed_cols: Vec<usize>,
}

impl JTStar {
    /// `(-1)^{Σ removed rows + Σ removed columns}`, the Laplace sign carrying
    /// the minor to the lowest-degree part of the full determinant.
    pub fn laplace_sign(&self) -> i64 {
        let s: usize = self.removed_rows.iter().chain(&self.removed_cols).sum();
        if s.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn jt_star(lambda: &Partition) -> Result<JTStar> {
    let full = jt_matrix(lambda)?;
    let n = full.size();
    let mut removed_rows = Vec::new();
    let mut removed_cols = Vec::new();
    for i in 0..n {
        if let Some(j) = full.subscripts[i].iter().position(|&s| s == 0) {
            removed_rows.push(i + 1);
            removed_cols.push(j + 1);
        }
    }
    removed_cols.sort_unstable();
    let subscripts = (0..n)
        .filter(|i| !removed_rows.contains(&(i + 1)))
        .map(|i| {
            (0..n)
                .filter(|j| !removed_cols.contains(&(j + 1)))
                .map(|j| full.subscripts[i][j])
                .collect()
        })
        .collect();
    let star = JTStar {
        minor: JTMatrix { subscripts },
        removed_rows,
        removed_cols,
    };
    if star.minor.size() != lambda.rank() {
        return Err(Error::Assertion(format!(
            "JT* of {lambda} has size {} but rank {}",
            star.minor.size(),
            lambda.rank()
        )));
    }
    Ok(star)
}

/// Recovers the skew shape whose Jacobi–Trudi matrix is the given minor:
/// `σ_i = jt_{1,m} - jt_{1,i} - m + i`, `μ_i = jt_{i,i} + σ_i`.
pub fn skew_from_jt(minor: &JTMatrix) -> Result<SkewShape> {
    let m = minor.size();
    if m == 0 {
        return Ok(SkewShape::straight(Partition::empty()));
    }
    let mi = m as i64;
    let sigma: Vec<i64> = (1..=mi)
        .map(|i| minor.get(0, m - 1) - minor.get(0, i as usize - 1) - mi + i)
        .collect();
    let mu: Vec<i64> = (0..m).map(|i| minor.get(i, i) + sigma[i]).collect();
    let to_part = |v: Vec<i64>| -> Result<Partition> {
        if v.iter().any(|&x| x < 0) {
            return Err(Error::Assertion(format!(
                "negative recovered part in {v:?}"
            )));
        }
        Partition::new(v.into_iter().map(|x| x as usize).collect())
    };
    SkewShape::new(to_part(mu)?, to_part(sigma)?)
}

/// The skew shape `μ/σ` whose Jacobi–Trudi matrix is `jt_star(λ)`.
pub fn skew_from_minor(lambda: &Partition) -> Result<SkewShape> {
    skew_from_jt(&jt_star(lambda)?.minor)
}

/// Closed form for the same shape: `μ_i = ℓ(λ) - k + λ_i` and
/// `σ_i = #{s : λ_s ≤ k - i}` for `i = 1..k`, `k = rank(λ)`.
pub fn skew_closed_form(lambda: &Partition) -> Result<SkewShape> {
    let k = lambda.rank();
    let len = lambda.len();
    let mu = (1..=k).map(|i| len - k + lambda.part(i)).collect();
    let sigma = (1..=k)
        .map(|i| lambda.parts().iter().filter(|&&p| p + i <= k).count())
        .collect();
    SkewShape::new(Partition::new(mu)?, Partition::new(sigma)?)
}

/// Whether the first `k` rows of `μ/σ` share the columns `σ_1+1 ..= σ_1+k`,
/// i.e. `μ_k ≥ σ_1 + k`.
pub fn square_certificate(shape: &SkewShape, k: usize) -> Result<bool> {
    if shape.rows() != k {
        return Err(Error::Precondition(format!(
            "{shape} has {} rows, expected {k}",
            shape.rows()
        )));
    }
    if k == 0 {
        return Ok(true);
    }
    Ok(shape.outer.part(k) >= shape.inner_part(1) + k)
}

/// `Σ_π sgn(π) Π_i p̃_{M_{i,π(i)}}`, with negative subscripts annihilating a
/// term. The matrix must not contain `h_0`.
pub fn det_ptilde(matrix: &JTMatrix) -> Result<SymFn> {
    let n = matrix.size();
    if matrix.subscripts.iter().flatten().any(|&s| s == 0) {
        return Err(Error::Precondition(
            "matrix contains a constant 1 entry; take jt_star first".into(),
        ));
    }
    let mut out = SymFn::zero(Basis::ScaledPowerSum);
    for perm in (0..n).permutations(n) {
        let subs: Vec<i64> = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| matrix.get(i, j))
            .collect();
        if subs.iter().any(|&s| s < 0) {
            continue;
        }
        let inversions = perm
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let index = Partition::from_multiset(subs.into_iter().map(|s| s as usize));
        out.add_term(index, q_int(sign));
    }
    if out.is_zero() && n > 0 {
        return Err(Error::Assertion(
            "Jacobi-Trudi minor has vanishing determinant".into(),
        ));
    }
    Ok(out)
}

/// `ŝ_λ = ±det JT*_p`, the sign being [`JTStar::laplace_sign`].
pub fn bottom_via_jacobi_trudi(lambda: &Partition) -> Result<SymFn> {
    if lambda.is_empty() {
        return Ok(SymFn::term(
            Basis::ScaledPowerSum,
            Partition::empty(),
            q_int(1),
        ));
    }
    let star = jt_star(lambda)?;
    Ok(det_ptilde(&star.minor)?.scale(&q_int(star.laplace_sign())))
}
