//! Snake sequences, interval sets, and the second route to bottom Schur
//! functions:
//!
//! ```text
//! ŝ_λ = (-1)^{z(λ)} Σ_I (-1)^{c(I)} Π_i p̃_{v_i - u_i}
//! ```
//!
//! summed over interval sets `I` of the snake word. Also the labelled
//! interval sets behind the power-sum/augmented-monomial identity, and the
//! sign-reversing involution that cancels labellings with a repeated label.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::characters::greedy_z;
use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::symfunc::{
    evaluate_finite, poly_add_term, q_int, Basis, FinitePoly, MonomialVector, SymFn,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SnakeLetter {
    L,
    R,
    O,
}

impl SnakeLetter {
    pub fn as_char(self) -> char {
        match self {
            SnakeLetter::L => 'L',
            SnakeLetter::R => 'R',
            SnakeLetter::O => 'O',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    /// The edge is the lower edge of `cell`.
    Horizontal,
    /// The edge is the right-hand edge of `cell`.
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeEdge {
    pub orientation: Orientation,
    pub cell: Cell,
}

/// The snake word of a partition together with the lower-envelope edges it
/// labels, ordered from lower left to upper right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeSequence {
    pub word: Vec<SnakeLetter>,
    pub edges: Vec<EnvelopeEdge>,
}

impl SnakeSequence {
    /// 1-based positions of the letter `x`.
    pub fn positions(&self, x: SnakeLetter) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == x)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for SnakeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.word {
            write!(f, "{}", c.as_char())?;
        }
        Ok(())
    }
}

/// Lower-envelope edges of λ from lower left to upper right.
pub fn envelope_edges(lambda: &Partition) -> Vec<EnvelopeEdge> {
    let mut edges = Vec::with_capacity(lambda.first() + lambda.len());
    let mut col = 0;
    for row in (1..=lambda.len()).rev() {
        let width = lambda.part(row);
        for j in col + 1..=width {
            edges.push(EnvelopeEdge {
                orientation: Orientation::Horizontal,
                cell: Cell::new(row, j),
            });
        }
        col = width;
        edges.push(EnvelopeEdge {
            orientation: Orientation::Vertical,
            cell: Cell::new(row, width),
        });
    }
    edges
}

/// Snake word of a nonempty partition: a horizontal edge under `(i,j)` is
/// `L` when `i ≥ j`, a vertical edge right of `(i,j)` is `R` when `i ≤ j`,
/// and every other edge is `O`.
pub fn snake_sequence(lambda: &Partition) -> Result<SnakeSequence> {
    if lambda.is_empty() {
        return Err(Error::Precondition(
            "snake sequence of the empty partition".into(),
        ));
    }
    let edges = envelope_edges(lambda);
    let word = edges
        .iter()
        .map(|e| match e.orientation {
            Orientation::Horizontal if e.cell.row >= e.cell.col => SnakeLetter::L,
            Orientation::Vertical if e.cell.row <= e.cell.col => SnakeLetter::R,
            _ => SnakeLetter::O,
        })
        .collect();
    Ok(SnakeSequence { word, edges })
}

/// The snake attached to the envelope edge at 1-based `position`: the cells
/// `(i,j), (i-1,j), (i-1,j-1), …` for a horizontal edge and
/// `(i,j), (i,j-1), (i-1,j-1), …` for a vertical one, stopping at the first
/// cell outside λ.
pub fn snake_cells(lambda: &Partition, position: usize) -> Result<Vec<Cell>> {
    let edges = envelope_edges(lambda);
    let edge = position
        .checked_sub(1)
        .and_then(|i| edges.get(i))
        .ok_or_else(|| {
            Error::Precondition(format!("edge {position} out of range 1..={}", edges.len()))
        })?;
    let (mut i, mut j) = (edge.cell.row as isize, edge.cell.col as isize);
    let mut up_next = edge.orientation == Orientation::Horizontal;
    let mut cells = Vec::new();
    while i >= 1 && j >= 1 && lambda.contains_cell(Cell::new(i as usize, j as usize)) {
        cells.push(Cell::new(i as usize, j as usize));
        if up_next {
            i -= 1;
        } else {
            j -= 1;
        }
        up_next = !up_next;
    }
    Ok(cells)
}

/// `k` pairs `(u, v)` matching the `L` positions to the `R` positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalSet {
    /// Sorted by left endpoint.
    pub pairs: Vec<(usize, usize)>,
    pub crossings: usize,
}

impl IntervalSet {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        let crossings = count_crossings(&pairs);
        IntervalSet { pairs, crossings }
    }

    /// Interval lengths `v - u` as a partition.
    pub fn kind(&self) -> Partition {
        Partition::from_multiset(self.pairs.iter().map(|(u, v)| v - u))
    }

    pub fn sign(&self) -> i64 {
        if self.crossings.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Number of pairs `(a, b)` with `u_a < u_b < v_a < v_b`.
pub fn count_crossings(pairs: &[(usize, usize)]) -> usize {
    pairs
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| {
            let (x, y) = if a.0 < b.0 { (a, b) } else { (b, a) };
            x.0 < y.0 && y.0 < x.1 && x.1 < y.1
        })
        .count()
}

/// All `k!` interval sets of λ; the `i`-th `L` is matched to the `i`-th
/// entry of each permutation of the `R` positions.
pub fn interval_sets(lambda: &Partition) -> Result<Vec<IntervalSet>> {
    let ss = snake_sequence(lambda)?;
    let ls = ss.positions(SnakeLetter::L);
    let rs = ss.positions(SnakeLetter::R);
    if ls.len() != rs.len() {
        return Err(Error::Assertion(format!(
            "{lambda}: {} L's but {} R's",
            ls.len(),
            rs.len()
        )));
    }
    Ok(rs
        .iter()
        .copied()
        .permutations(rs.len())
        .map(|perm| IntervalSet::new(ls.iter().copied().zip(perm).collect()))
        .collect())
}

/// `ŝ_λ` in the `p̃` basis as a signed sum over interval sets.
pub fn bottom_via_intervals(lambda: &Partition) -> Result<SymFn> {
    if lambda.is_empty() {
        return Ok(SymFn::term(
            Basis::ScaledPowerSum,
            Partition::empty(),
            q_int(1),
        ));
    }
    let global = if greedy_z(lambda)? % 2 == 0 { 1 } else { -1 };
    let mut out = SymFn::zero(Basis::ScaledPowerSum);
    for set in interval_sets(lambda)? {
        out.add_term(set.kind(), q_int(global * set.sign()));
    }
    Ok(out)
}

/// An interval set whose `i`-th interval (in left-endpoint order) carries
/// the variable index `labels[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelledIntervalSet {
    pub base: IntervalSet,
    pub labels: Vec<usize>,
}

impl LabelledIntervalSet {
    /// `x^I = Π x_{α_i}^{v_i - u_i}` in `vars` variables.
    pub fn monomial(&self, vars: usize) -> MonomialVector {
        let mut e = vec![0; vars];
        for (&(u, v), &a) in self.base.pairs.iter().zip(&self.labels) {
            e[a - 1] += v - u;
        }
        MonomialVector(e)
    }

    pub fn has_repeated_label(&self) -> bool {
        self.labels.iter().duplicates().next().is_some()
    }

    /// Swaps the right endpoints of the first two intervals carrying the
    /// smallest repeated label. `None` when no label repeats.
    pub fn involution_partner(&self) -> Option<LabelledIntervalSet> {
        let a = *self.labels.iter().duplicates().min()?;
        let mut hits = self
            .labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == a)
            .map(|(i, _)| i);
        let (i, j) = (hits.next()?, hits.next()?);
        let mut pairs = self.base.pairs.clone();
        let (vi, vj) = (pairs[i].1, pairs[j].1);
        pairs[i].1 = vj;
        pairs[j].1 = vi;
        // left endpoints are untouched, so the interval order and labels stay aligned
        let crossings = count_crossings(&pairs);
        Some(LabelledIntervalSet {
            base: IntervalSet { pairs, crossings },
            labels: self.labels.clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelFilter {
    All,
    RepeatedLabel,
    DistinctLabels,
}

impl LabelFilter {
    fn accepts(self, labels: &[usize]) -> bool {
        let repeated = labels.iter().duplicates().next().is_some();
        match self {
            LabelFilter::All => true,
            LabelFilter::RepeatedLabel => repeated,
            LabelFilter::DistinctLabels => !repeated,
        }
    }
}

fn labellings(k: usize, vars: usize) -> impl Iterator<Item = Vec<usize>> {
    debug_assert!(k > 0);
    (0..k).map(|_| 1..=vars).multi_cartesian_product()
}

/// `Σ (-1)^{c(I)} x^I` over every labelling of one interval set.
pub fn labelled_sum_for_set(set: &IntervalSet, vars: usize, filter: LabelFilter) -> FinitePoly {
    let mut out = FinitePoly::new();
    for labels in labellings(set.pairs.len(), vars).filter(|l| filter.accepts(l)) {
        let lis = LabelledIntervalSet {
            base: set.clone(),
            labels,
        };
        poly_add_term(&mut out, lis.monomial(vars), q_int(set.sign()));
    }
    out
}

/// `Σ (-1)^{c(I)} x^I` over labelled interval sets of λ of type μ that pass
/// `filter`, in `vars ≥ |λ|` variables.
pub fn labelled_sum_by_type(
    lambda: &Partition,
    mu: &Partition,
    vars: usize,
    filter: LabelFilter,
) -> Result<FinitePoly> {
    if vars < lambda.size() {
        return Err(Error::TooFewVariables {
            needed: lambda.size(),
            got: vars,
        });
    }
    let mut out = FinitePoly::new();
    for set in interval_sets(lambda)?
        .into_iter()
        .filter(|s| &s.kind() == mu)
    {
        for (m, c) in labelled_sum_for_set(&set, vars, filter) {
            poly_add_term(&mut out, m, c);
        }
    }
    Ok(out)
}

/// Outcome of checking the three labelled-sum identities for one shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LabelledLemmaReport {
    pub shape: String,
    pub types_checked: usize,
    pub failures: Vec<String>,
}

/// For every type μ occurring in `ŝ_λ = Σ c_μ p̃_μ`: the full sum is
/// `(-1)^{z(λ)} c_μ p_μ`, the distinct-label sum is `(-1)^{z(λ)} c_μ m̃_μ`,
/// and all = repeated + distinct. The repeated-label sums cancel only once
/// added over all types, since the involution moves between types.
pub fn check_labelled_lemmas(lambda: &Partition, vars: usize) -> Result<LabelledLemmaReport> {
    let bottom = bottom_via_intervals(lambda)?;
    let sign = if greedy_z(lambda)? % 2 == 0 {
        q_int(1)
    } else {
        q_int(-1)
    };
    let mut report = LabelledLemmaReport {
        shape: lambda.to_string(),
        ..Default::default()
    };
    let kinds: BTreeMap<Partition, ()> = interval_sets(lambda)?
        .iter()
        .map(|s| (s.kind(), ()))
        .collect();
    let mut repeated_total = FinitePoly::new();
    for mu in kinds.keys() {
        report.types_checked += 1;
        let c = bottom.coeff(mu);
        let all = labelled_sum_by_type(lambda, mu, vars, LabelFilter::All)?;
        let rep = labelled_sum_by_type(lambda, mu, vars, LabelFilter::RepeatedLabel)?;
        let dis = labelled_sum_by_type(lambda, mu, vars, LabelFilter::DistinctLabels)?;
        for (m, v) in &rep {
            poly_add_term(&mut repeated_total, m.clone(), v.clone());
        }
        let scaled = &sign * &c;
        let p_side = evaluate_finite(
            &SymFn::term(Basis::PowerSum, mu.clone(), scaled.clone()),
            vars,
        )?;
        if all != p_side {
            report
                .failures
                .push(format!("type {mu}: full sum differs from (-1)^z c_mu p_mu"));
        }
        let m_side = evaluate_finite(
            &SymFn::term(Basis::AugmentedMonomial, mu.clone(), scaled),
            vars,
        )?;
        if dis != m_side {
            report.failures.push(format!(
                "type {mu}: distinct-label sum differs from (-1)^z c_mu m~_mu"
            ));
        }
        let mut combined = rep.clone();
        for (m, v) in dis {
            poly_add_term(&mut combined, m, v);
        }
        if combined != all {
            report
                .failures
                .push(format!("type {mu}: all != repeated + distinct"));
        }
    }
    if !repeated_total.is_empty() {
        report
            .failures
            .push("repeated-label sum over all types is nonzero".into());
    }
    Ok(report)
}

/// Witness report for the sign-reversing involution on repeated-label
/// labelled interval sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub checked: usize,
    pub fixed_points: Vec<String>,
    pub not_involutive: Vec<String>,
    pub parity_preserved: Vec<String>,
    pub weight_changed: Vec<String>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.fixed_points.is_empty()
            && self.not_involutive.is_empty()
            && self.parity_preserved.is_empty()
            && self.weight_changed.is_empty()
    }
}

/// Applies the involution to every repeated-label labelling (labels in
/// `1..=vars`) of every interval set of λ and records any violation.
pub fn involution_check(lambda: &Partition, vars: usize) -> Result<InvolutionReport> {
    if vars < lambda.size() {
        return Err(Error::TooFewVariables {
            needed: lambda.size(),
            got: vars,
        });
    }
    let mut report = InvolutionReport::default();
    for set in interval_sets(lambda)? {
        for labels in
            labellings(set.pairs.len(), vars).filter(|l| LabelFilter::RepeatedLabel.accepts(l))
        {
            let lis = LabelledIntervalSet {
                base: set.clone(),
                labels,
            };
            report.checked += 1;
            let tag = || format!("{:?} labels {:?}", lis.base.pairs, lis.labels);
            let partner = lis.involution_partner().expect("repeated label present");
            if partner == lis {
                report.fixed_points.push(tag());
                continue;
            }
            if partner.involution_partner().as_ref() != Some(&lis) {
                report.not_involutive.push(tag());
            }
            if (partner.base.crossings + lis.base.crossings).is_multiple_of(2) {
                report.parity_preserved.push(tag());
            }
            if partner.monomial(vars) != lis.monomial(vars) {
                report.weight_changed.push(tag());
            }
        }
    }
    Ok(report)
}
