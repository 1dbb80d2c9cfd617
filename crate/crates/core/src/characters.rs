//! Border strips, border-strip tableaux and irreducible characters of the
//! symmetric group, and the first route to bottom Schur functions: expand
//! `s_λ = Σ_ν χ^λ(ν) p_ν / z_ν` and keep the shortest terms.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Cell, Partition};
use crate::symfunc::{degree_filter, q_int, rescale_p_tilde, Basis, SymFn};

/// The cells of a skew shape `outer / inner` that is a border strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    cells: Vec<Cell>,
}

impl BorderStrip {
    /// Checks that `outer / inner` is a nonempty connected skew shape with no
    /// 2×2 block.
    pub fn from_shapes(outer: &Partition, inner: &Partition) -> Option<BorderStrip> {
        if !outer.contains(inner) {
            return None;
        }
        let cells: Vec<Cell> = outer.cells().filter(|c| !inner.contains_cell(*c)).collect();
        if cells.is_empty() {
            return None;
        }
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let has_block = cells.iter().any(|c| {
            [
                Cell::new(c.row, c.col + 1),
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row + 1, c.col + 1),
            ]
            .iter()
            .all(|d| set.contains(d))
        });
        if has_block {
            return None;
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([cells[0]]);
        seen.insert(cells[0]);
        while let Some(c) = queue.pop_front() {
            let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                nbrs.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nbrs.push(Cell::new(c.row, c.col - 1));
            }
            for d in nbrs {
                if set.contains(&d) && seen.insert(d) {
                    queue.push_back(d);
                }
            }
        }
        (seen.len() == cells.len()).then_some(BorderStrip { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Number of rows occupied, minus one.
    pub fn height(&self) -> usize {
        let rows: BTreeSet<usize> = self.cells.iter().map(|c| c.row).collect();
        rows.len() - 1
    }
}

/// A chain `∅ = λ⁰ ⊆ λ¹ ⊆ ⋯ ⊆ λ^r = λ` whose successive differences are
/// border strips (or empty, for zero entries of the type).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStripTableau {
    pub shape: Partition,
    pub chain: Vec<Partition>,
    pub kind: Vec<usize>,
    pub height: usize,
}

impl BorderStripTableau {
    /// The nonempty strips in order.
    pub fn strips(&self) -> Vec<BorderStrip> {
        self.chain
            .windows(2)
            .filter_map(|w| BorderStrip::from_shapes(&w[1], &w[0]))
            .collect()
    }

    /// Entry of each cell: the index (1-based) of the strip containing it.
    pub fn filling(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (i, w) in self.chain.windows(2).enumerate() {
            for c in w[1].cells().filter(|c| !w[0].contains_cell(*c)) {
                rows[c.row - 1][c.col - 1] = i + 1;
            }
        }
        rows
    }
}

/// All `μ ⊆ λ` with `λ / μ` a border strip of `size` cells, paired with the
/// strip height, in canonical order of `μ`.
///
/// Works on beta-numbers: a strip of size `r` corresponds to moving one bead
/// `b` down to an unoccupied `b - r`, and its height is the number of beads
/// strictly between.
pub fn removable_border_strips(lambda: &Partition, size: usize) -> Vec<(Partition, usize)> {
    if size == 0 {
        return Vec::new();
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < size || beta.contains(&(b - size)) {
            continue;
        }
        let target = b - size;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        let mu = Partition::new(parts).expect("beta-set yields a partition");
        out.push((mu, height));
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

/// All partitions `ν` with `inner ⊆ ν ⊆ outer` and `|ν| = |inner| + add`.
fn intermediate_shapes(inner: &Partition, outer: &Partition, add: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(outer.len());
    fn go(
        i: usize,
        left: usize,
        inner: &Partition,
        outer: &Partition,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == outer.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("bounded rows"));
            }
            return;
        }
        let lo = inner.part(i + 1);
        let hi = outer
            .part(i + 1)
            .min(if i == 0 { usize::MAX } else { cur[i - 1] });
        if lo > hi {
            return;
        }
        for v in lo..=hi.min(lo + left) {
            cur.push(v);
            go(i + 1, left - (v - lo), inner, outer, cur, out);
            cur.pop();
        }
    }
    go(0, add, inner, outer, &mut cur, &mut out);
    out
}

/// Every border-strip tableau of shape `shape` and type `kind` (a weak
/// composition; zero entries contribute an empty step).
pub fn border_strip_tableaux(shape: &Partition, kind: &[usize]) -> Vec<BorderStripTableau> {
    let mut out = Vec::new();
    if kind.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let mut chain = vec![Partition::empty()];
    fn go(
        step: usize,
        shape: &Partition,
        kind: &[usize],
        chain: &mut Vec<Partition>,
        height: usize,
        out: &mut Vec<BorderStripTableau>,
    ) {
        if step == kind.len() {
            if chain.last() == Some(shape) {
                out.push(BorderStripTableau {
                    shape: shape.clone(),
                    chain: chain.clone(),
                    kind: kind.to_vec(),
                    height,
                });
            }
            return;
        }
        let cur = chain.last().expect("nonempty chain").clone();
        if kind[step] == 0 {
            chain.push(cur);
            go(step + 1, shape, kind, chain, height, out);
            chain.pop();
            return;
        }
        for next in intermediate_shapes(&cur, shape, kind[step]) {
            if let Some(strip) = BorderStrip::from_shapes(&next, &cur) {
                chain.push(next);
                go(step + 1, shape, kind, chain, height + strip.height(), out);
                chain.pop();
            }
        }
    }
    go(0, shape, kind, &mut chain, 0, &mut out);
    out
}

/// `χ^λ(ν)` as the signed count of border-strip tableaux, by exhaustive
/// enumeration. Exponential; meant as a cross-check for [`chi`].
pub fn chi_by_enumeration(lambda: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    Ok(border_strip_tableaux(lambda, nu.parts())
        .iter()
        .map(|t| if t.height % 2 == 0 { 1 } else { -1 })
        .sum())
}

type ChiKey = (Partition, Partition);

fn chi_memo() -> &'static RwLock<HashMap<ChiKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<ChiKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn mn(lambda: &Partition, nu: &[usize]) -> i64 {
    let Some((&first, rest)) = nu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda.clone(), Partition::from_vec_unchecked(nu.to_vec()));
    if let Some(&v) = chi_memo().read().expect("chi memo").get(&key) {
        return v;
    }
    let value = removable_border_strips(lambda, first)
        .iter()
        .map(|(mu, ht)| {
            if ht % 2 == 0 {
                mn(mu, rest)
            } else {
                -mn(mu, rest)
            }
        })
        .sum();
    chi_memo().write().expect("chi memo").insert(key, value);
    value
}

/// Character value `χ^λ(ν)` by the Murnaghan–Nakayama rule, stripping the
/// largest remaining part of `ν` first. Results are memoized process-wide.
pub fn chi(lambda: &Partition, nu: &Partition) -> Result<i64> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch(lambda.size(), nu.size()));
    }
    Ok(mn(lambda, nu.parts()))
}

/// `s_λ = Σ_ν χ^λ(ν) p_ν / z_ν`.
pub fn schur_in_p(lambda: &Partition) -> SymFn {
    schur_in_p_with(lambda, |nu| mn(lambda, nu.parts()))
}

/// Same as [`schur_in_p`] but reading characters from a table.
pub fn schur_in_p_from_table(lambda: &Partition, table: &CharacterTable) -> Result<SymFn> {
    if table.n != lambda.size() {
        return Err(Error::SizeMismatch(table.n, lambda.size()));
    }
    let lookup: HashMap<&Partition, i64> = table
        .entries
        .iter()
        .filter(|e| &e.lambda == lambda)
        .map(|e| (&e.nu, e.chi))
        .collect();
    Ok(schur_in_p_with(lambda, |nu| {
        lookup.get(nu).copied().unwrap_or(0)
    }))
}

fn schur_in_p_with(lambda: &Partition, mut chi_of: impl FnMut(&Partition) -> i64) -> SymFn {
    SymFn::from_terms(
        Basis::PowerSum,
        partitions_of(lambda.size(), None).into_iter().map(|nu| {
            let c = chi_of(&nu);
            let z = q_int(BigInt::from(nu.z()));
            (nu, q_int(c) / z)
        }),
    )
}

/// Height of the greedy border-strip tableau: repeatedly remove the largest
/// removable strip. The largest strip is the rim hook of the principal hook
/// (size `λ_1 + ℓ(λ) - 1`); its uniqueness is checked at every step.
pub fn greedy_z(lambda: &Partition) -> Result<usize> {
    let mut cur = lambda.clone();
    let mut total = 0;
    while !cur.is_empty() {
        let hook = cur.first() + cur.len() - 1;
        let strips = removable_border_strips(&cur, hook);
        if strips.len() != 1 {
            return Err(Error::Assertion(format!(
                "{} has {} removable strips of maximal size {hook}",
                cur,
                strips.len()
            )));
        }
        if (hook + 1..=cur.size()).any(|s| !removable_border_strips(&cur, s).is_empty()) {
            return Err(Error::Assertion(format!(
                "{cur} has a strip longer than its principal hook"
            )));
        }
        let (next, ht) = strips.into_iter().next().expect("one strip");
        total += ht;
        cur = next;
    }
    Ok(total)
}

/// `ŝ^j_λ` in the `p̃` basis: the terms of `s_λ` with at most
/// `rank(λ) + j - 1` factors. `j = 1` gives the bottom Schur function.
pub fn bottom_via_expansion(lambda: &Partition, j: usize) -> Result<SymFn> {
    if j == 0 {
        return Err(Error::Precondition("j must be at least 1".into()));
    }
    let kept = degree_filter(&schur_in_p(lambda), lambda.rank() + j - 1)?;
    rescale_p_tilde(&kept)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    pub lambda: Partition,
    pub nu: Partition,
    pub chi: i64,
}

/// Full character table of `S_n` in canonical order (λ outer, ν inner).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub entries: Vec<CharacterEntry>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> CharacterTable {
        let parts = partitions_of(n, None);
        let entries = parts
            .iter()
            .flat_map(|l| parts.iter().map(move |nu| (l, nu)))
            .map(|(l, nu)| CharacterEntry {
                lambda: l.clone(),
                nu: nu.clone(),
                chi: mn(l, nu.parts()),
            })
            .collect();
        CharacterTable { n, entries }
    }

    pub fn get(&self, lambda: &Partition, nu: &Partition) -> Option<i64> {
        self.entries
            .iter()
            .find(|e| &e.lambda == lambda && &e.nu == nu)
            .map(|e| e.chi)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes")
    }

    /// Parses a table, checking it covers exactly the pairs of partitions of
    /// `n` in canonical order.
    pub fn from_json(s: &str) -> Result<CharacterTable> {
        let table: CharacterTable = serde_json::from_str(s)?;
        let parts = partitions_of(table.n, None);
        let expected = parts
            .iter()
            .flat_map(|l| parts.iter().map(move |nu| (l, nu)));
        if table.entries.len() != parts.len() * parts.len()
            || !table
                .entries
                .iter()
                .zip(expected)
                .all(|(e, (l, nu))| &e.lambda == l && &e.nu == nu)
        {
            return Err(Error::Schema(format!(
                "character table for n={} is incomplete or out of order",
                table.n
            )));
        }
        Ok(table)
    }
}
