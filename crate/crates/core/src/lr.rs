//! Skew tableaux, jeu de taquin and Littlewood–Richardson coefficients.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobi_trudi::{jt_star, skew_from_minor, SkewShape};
use crate::partition::{partitions_of, Cell, Partition};

/// A filling of a skew shape. Rows are stored in full, with `None` for the
/// cells of the inner shape; this is also the JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Option<usize>>>", into = "Vec<Vec<Option<usize>>>")]
pub struct SkewTableau {
    grid: Vec<Vec<Option<usize>>>,
}

impl TryFrom<Vec<Vec<Option<usize>>>> for SkewTableau {
    type Error = Error;

    fn try_from(grid: Vec<Vec<Option<usize>>>) -> Result<Self> {
        SkewTableau::from_grid(grid)
    }
}

impl From<SkewTableau> for Vec<Vec<Option<usize>>> {
    fn from(t: SkewTableau) -> Self {
        t.grid
    }
}

impl SkewTableau {
    /// Validates that each row is a run of `None` followed by entries and that
    /// both boundaries are partitions. Trailing empty rows are dropped.
    pub fn from_grid(mut grid: Vec<Vec<Option<usize>>>) -> Result<SkewTableau> {
        while grid.last().is_some_and(Vec::is_empty) {
            grid.pop();
        }
        let mut outer = Vec::with_capacity(grid.len());
        let mut inner = Vec::with_capacity(grid.len());
        for (r, row) in grid.iter().enumerate() {
            let lead = row.iter().take_while(|c| c.is_none()).count();
            if row[lead..].iter().any(Option::is_none) {
                return Err(Error::Schema(format!(
                    "row {r} has an inner cell after a filled cell"
                )));
            }
            if row[lead..].contains(&Some(0)) {
                return Err(Error::Schema(format!("row {r} has a zero entry")));
            }
            outer.push(row.len());
            inner.push(lead);
        }
        let shape = SkewShape::new(
            Partition::new(outer.clone())?,
            Partition::new(inner.clone())?,
        )?;
        if shape.outer.parts() != outer.as_slice() || inner.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Schema(
                "tableau rows do not form a skew shape".into(),
            ));
        }
        Ok(SkewTableau { grid })
    }

    /// Fills `shape` row by row; `entries[i]` covers the cells of row `i`
    /// outside the inner shape.
    pub fn from_rows(shape: &SkewShape, entries: Vec<Vec<usize>>) -> Result<SkewTableau> {
        if entries.len() != shape.rows() {
            return Err(Error::DimensionMismatch {
                expected: shape.rows(),
                found: entries.len(),
            });
        }
        let grid = entries
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                let lead = shape.inner_part(i + 1);
                let width = shape.outer.part(i + 1) - lead;
                if row.len() != width {
                    return Err(Error::DimensionMismatch {
                        expected: width,
                        found: row.len(),
                    });
                }
                Ok(std::iter::repeat_n(None, lead)
                    .chain(row.into_iter().map(Some))
                    .collect())
            })
            .collect::<Result<_>>()?;
        Self::from_grid(grid)
    }

    pub fn grid(&self) -> &[Vec<Option<usize>>] {
        &self.grid
    }

    pub fn shape(&self) -> SkewShape {
        let outer = Partition::from_multiset(self.grid.iter().map(Vec::len));
        let inner = Partition::from_multiset(self.grid.iter().map(|r| self.inner_len(r)));
        SkewShape { outer, inner }
    }

    fn inner_len(&self, row: &[Option<usize>]) -> usize {
        row.iter().take_while(|c| c.is_none()).count()
    }

    /// Entry at a 1-based cell; `None` for inner cells and cells outside.
    pub fn get(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.at(cell.row - 1, cell.col - 1)
    }

    fn at(&self, r: usize, c: usize) -> Option<usize> {
        self.grid
            .get(r)
            .and_then(|row| row.get(c))
            .copied()
            .flatten()
    }

    /// Filled cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.grid.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(c, v)| v.map(|v| (Cell::new(r + 1, c + 1), v)))
        })
    }

    pub fn size(&self) -> usize {
        self.cells().count()
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.cells().all(|(cell, v)| {
            let right_ok = self
                .get(Cell::new(cell.row, cell.col + 1))
                .is_none_or(|w| v <= w);
            let below_ok = self
                .get(Cell::new(cell.row + 1, cell.col))
                .is_none_or(|w| v < w);
            right_ok && below_ok
        })
    }

    /// Entries are `1..=n` once each, increasing along rows and columns.
    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<usize> = self.cells().map(|(_, v)| v).collect();
        seen.sort_unstable();
        let n = seen.len();
        seen.into_iter().eq(1..=n)
            && self.cells().all(|(cell, v)| {
                self.get(Cell::new(cell.row, cell.col + 1))
                    .is_none_or(|w| v < w)
            })
            && self.is_semistandard()
    }

    /// Bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.grid
            .iter()
            .rev()
            .flat_map(|row| row.iter().flatten().copied())
            .collect()
    }

    pub fn reverse_reading_word(&self) -> Vec<usize> {
        let mut w = self.reading_word();
        w.reverse();
        w
    }

    /// Cells of the inner shape that can be removed from it.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let inner: Vec<usize> = self.grid.iter().map(|r| self.inner_len(r)).collect();
        (0..inner.len())
            .filter(|&r| inner[r] > 0 && inner.get(r + 1).is_none_or(|&below| below < inner[r]))
            .map(|r| Cell::new(r + 1, inner[r]))
            .collect()
    }

    /// Cells that can be added to the outer shape.
    pub fn outer_cocorners(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (0..self.grid.len())
            .filter(|&r| r == 0 || self.grid[r - 1].len() > self.grid[r].len())
            .map(|r| Cell::new(r + 1, self.grid[r].len() + 1))
            .collect();
        out.push(Cell::new(self.grid.len() + 1, 1));
        out
    }

    /// Inward slide into the inner corner `start`. Returns the outer cell
    /// vacated at the end.
    pub fn slide_inward(&mut self, start: Cell) -> Result<Cell> {
        if !self.inner_corners().contains(&start) {
            return Err(Error::Precondition(format!(
                "({}, {}) is not an inner corner",
                start.row, start.col
            )));
        }
        let (mut r, mut c) = (start.row - 1, start.col - 1);
        loop {
            let right = self.at(r, c + 1);
            let below = self.at(r + 1, c);
            let (nr, nc) = match (right, below) {
                (None, None) => break,
                (Some(_), None) => (r, c + 1),
                (None, Some(_)) => (r + 1, c),
                (Some(a), Some(b)) if a == b => {
                    return Err(Error::Assertion("tie during jeu de taquin slide".into()));
                }
                (Some(a), Some(b)) => {
                    if a < b {
                        (r, c + 1)
                    } else {
                        (r + 1, c)
                    }
                }
            };
            self.grid[r][c] = self.grid[nr][nc].take();
            (r, c) = (nr, nc);
        }
        let row = &mut self.grid[r];
        if row.len() != c + 1 {
            return Err(Error::Assertion("slide ended inside a row".into()));
        }
        row.pop();
        while self.grid.last().is_some_and(Vec::is_empty) {
            self.grid.pop();
        }
        Ok(Cell::new(r + 1, c + 1))
    }

    /// Outward slide from the outer co-corner `start`. Returns the cell added
    /// to the inner shape.
    pub fn slide_outward(&mut self, start: Cell) -> Result<Cell> {
        if !self.outer_cocorners().contains(&start) {
            return Err(Error::Precondition(format!(
                "({}, {}) is not an outer co-corner",
                start.row, start.col
            )));
        }
        let (mut r, mut c) = (start.row - 1, start.col - 1);
        if r == self.grid.len() {
            self.grid.push(Vec::new());
        }
        self.grid[r].push(None);
        loop {
            let left = if c > 0 { self.at(r, c - 1) } else { None };
            let above = if r > 0 { self.at(r - 1, c) } else { None };
            let (nr, nc) = match (left, above) {
                (None, None) => break,
                (Some(_), None) => (r, c - 1),
                (None, Some(_)) => (r - 1, c),
                (Some(a), Some(b)) if a == b => {
                    return Err(Error::Assertion("tie during jeu de taquin slide".into()));
                }
                (Some(a), Some(b)) => {
                    if a > b {
                        (r, c - 1)
                    } else {
                        (r - 1, c)
                    }
                }
            };
            self.grid[r][c] = self.grid[nr][nc].take();
            (r, c) = (nr, nc);
        }
        Ok(Cell::new(r + 1, c + 1))
    }

    /// Slides inward until the inner shape is empty, taking the inner corner
    /// picked by `choose` (an index into the offered corners) each time.
    pub fn rectify_with<F: FnMut(&[Cell]) -> usize>(&self, mut choose: F) -> Result<SkewTableau> {
        let mut t = self.clone();
        loop {
            let corners = t.inner_corners();
            if corners.is_empty() {
                return Ok(t);
            }
            let i = choose(&corners);
            let corner = *corners
                .get(i)
                .ok_or_else(|| Error::Precondition(format!("corner index {i} out of range")))?;
            t.slide_inward(corner)?;
        }
    }

    /// Rectification taking the topmost inner corner each time.
    pub fn rectify(&self) -> Result<SkewTableau> {
        self.rectify_with(|_| 0)
    }
}

/// Every prefix has at least as many `i` as `i + 1`.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

fn check_lr_args(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<SkewShape> {
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    if shape.size() != nu.size() {
        return Err(Error::SizeMismatch(shape.size(), nu.size()));
    }
    Ok(shape)
}

/// SSYT of shape `λ/μ` and type `ν` whose reverse reading word is a lattice
/// word. Cells are filled in reverse reading order (top row first, right to
/// left) so the lattice condition prunes every prefix.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<SkewTableau>> {
    let shape = check_lr_args(lambda, mu, nu)?;
    let order: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| {
            (shape.inner_part(r + 1)..shape.outer.part(r + 1))
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<Option<usize>>> = (0..shape.rows())
        .map(|r| vec![None; shape.outer.part(r + 1)])
        .collect();
    let mut counts = vec![0usize; nu.len()];
    let mut out = Vec::new();
    fill_lattice(&order, 0, nu, &mut grid, &mut counts, &mut out)?;
    Ok(out)
}

fn fill_lattice(
    order: &[(usize, usize)],
    pos: usize,
    nu: &Partition,
    grid: &mut Vec<Vec<Option<usize>>>,
    counts: &mut [usize],
    out: &mut Vec<SkewTableau>,
) -> Result<()> {
    let Some(&(r, c)) = order.get(pos) else {
        out.push(SkewTableau::from_grid(grid.clone())?);
        return Ok(());
    };
    let upper = grid[r].get(c + 1).copied().flatten().unwrap_or(usize::MAX);
    let lower = if r > 0 {
        grid[r - 1][c].unwrap_or(0)
    } else {
        0
    };
    for v in (lower + 1)..=nu.len().min(upper) {
        let i = v - 1;
        if counts[i] == nu.part(v) || (i > 0 && counts[i] == counts[i - 1]) {
            continue;
        }
        counts[i] += 1;
        grid[r][c] = Some(v);
        fill_lattice(order, pos + 1, nu, grid, counts, out)?;
        grid[r][c] = None;
        counts[i] -= 1;
    }
    Ok(())
}

/// `c^λ_{μν}` counted by lattice SSYT.
pub fn lr_coeff_lattice(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    Ok(lr_tableaux(lambda, mu, nu)?.len() as u64)
}

/// All standard fillings of `λ/μ`.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<SkewTableau> {
    let mut grid: Vec<Vec<Option<usize>>> = (0..shape.rows()).map(|_| Vec::new()).collect();
    for (r, row) in grid.iter_mut().enumerate() {
        row.resize(shape.outer.part(r + 1), None);
    }
    let mut current = shape.inner.padded(shape.rows());
    let mut out = Vec::new();
    fill_standard(shape, &mut current, 1, &mut grid, &mut out);
    out
}

fn fill_standard(
    shape: &SkewShape,
    current: &mut [usize],
    next: usize,
    grid: &mut Vec<Vec<Option<usize>>>,
    out: &mut Vec<SkewTableau>,
) {
    if next > shape.size() {
        out.push(SkewTableau { grid: grid.clone() });
        return;
    }
    for r in 0..current.len() {
        let c = current[r];
        let fits = c < shape.outer.part(r + 1) && (r == 0 || current[r - 1] > c);
        if !fits {
            continue;
        }
        grid[r][c] = Some(next);
        current[r] += 1;
        fill_standard(shape, current, next + 1, grid, out);
        current[r] -= 1;
        grid[r][c] = None;
    }
}

/// Row `i` holds the next `ν_i` integers after row `i - 1`.
pub fn superstandard(nu: &Partition) -> SkewTableau {
    let mut next = 0;
    let grid = nu
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    next += 1;
                    Some(next)
                })
                .collect()
        })
        .collect();
    SkewTableau { grid }
}

/// `c^λ_{μν}` as the number of SYT of shape `λ/μ` rectifying to the
/// superstandard tableau of shape `ν`.
pub fn lr_coeff_jdt(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let shape = check_lr_args(lambda, mu, nu)?;
    let target = superstandard(nu);
    let mut count = 0;
    for t in standard_tableaux(&shape) {
        if t.rectify()? == target {
            count += 1;
        }
    }
    Ok(count)
}

/// `ŝ_λ = sign · Σ_ν c^μ_{σν} ŝ_ν` with `μ/σ` the shape of `JT*(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottomExpansion {
    pub lambda: Partition,
    pub shape: SkewShape,
    /// Laplace sign of the Jacobi–Trudi minor.
    pub sign: i64,
    /// Nonzero `c^μ_{σν}` in canonical order of `ν`.
    pub coefficients: Vec<(Partition, u64)>,
}

pub fn expand_bottom_in_basis(lambda: &Partition) -> Result<BottomExpansion> {
    let shape = skew_from_minor(lambda)?;
    let sign = if lambda.is_empty() {
        1
    } else {
        jt_star(lambda)?.laplace_sign()
    };
    let k = lambda.rank();
    let candidates: Vec<Partition> = partitions_of(shape.size(), Some(k.max(1)))
        .into_iter()
        .filter(|nu| shape.outer.contains(nu))
        .collect();
    let coeffs: Vec<(Partition, u64)> = candidates
        .into_par_iter()
        .map(|nu| lr_coeff_lattice(&shape.outer, &shape.inner, &nu).map(|c| (nu, c)))
        .collect::<Result<_>>()?;
    // indexed parallel collect keeps the canonical order of the candidates
    let coefficients = coeffs.into_iter().filter(|(_, c)| *c > 0).collect();
    Ok(BottomExpansion {
        lambda: lambda.clone(),
        shape,
        sign,
        coefficients,
    })
}
