//! Integer partitions, their diagrams, and the counting functions used by the
//! dimension formulas.
//!
//! A [`Partition`] is stored without trailing zeros, so `(2,2,1,0)` and
//! `(2,2,1)` are the same value. The canonical order used everywhere in the
//! crate for listing partitions of a fixed `n` is *descending*
//! lexicographic: `4, 31, 22, 211, 1111`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based `(row, col)` in English notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing or if a zero appears
    /// before a positive part.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: zero part before a positive part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary multiset of parts into a partition, dropping zeros.
    pub fn from_multiset<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The 1-based part `λ_i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Durfee (Frobenius) rank: the largest `i` with `λ_i ≥ i`.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π_i i^{m_i} m_i!`, the order of the centralizer of a
    /// permutation of cycle type λ.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for t in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(t);
            }
        }
        z
    }

    /// `Π_i m_i(λ)!`, the diagonal entry of the power-sum to monomial
    /// transition matrix and the augmentation factor of `m̃_λ`.
    pub fn multiplicity_factorial(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (_, mult) in self.multiplicities() {
            for t in 2..=mult {
                acc *= BigUint::from(t);
            }
        }
        acc
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Whether the diagram of `other` is a subset of this diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Comparison in the crate's canonical (descending lexicographic) order:
    /// `Less` means `self` is listed first.
    pub fn canonical_cmp(&self, other: &Partition) -> Ordering {
        other.parts.cmp(&self.parts)
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Parses the CLI form: comma-separated parts, or a digit string such
    /// as `54421` when no comma is present and the literal has more than one
    /// digit. A single part of 10 or more needs a trailing comma (`12,`).
    pub fn parse_shorthand(s: &str) -> Result<Partition> {
        let t = s.trim();
        if !t.contains(',') && t.len() > 1 && t.chars().all(|c| c.is_ascii_digit()) {
            let parts = t.bytes().map(|b| (b - b'0') as usize).collect();
            return Partition::new(parts).map_err(|_| Error::Parse(s.to_string()));
        }
        t.parse()
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Plain lexicographic order on the part sequences, so `(3,1) < (4)`.
/// Use [`Partition::canonical_cmp`] for listing order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated decimal parts; trailing zeros and a trailing comma are
    /// accepted. `""` and `"0"` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let pieces: Vec<&str> = t.split(',').collect();
        for (idx, piece) in pieces.iter().enumerate() {
            let piece = piece.trim();
            if piece.is_empty() && idx + 1 == pieces.len() && idx > 0 {
                continue;
            }
            let v: usize = piece.parse().map_err(|_| Error::Parse(s.to_string()))?;
            parts.push(v);
        }
        Partition::new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

/// Macro-free shorthand used throughout tests and examples.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

/// All partitions of `n`, optionally with at most `max_len` parts, in
/// descending lexicographic order.
pub fn partitions_of(n: usize, max_len: Option<usize>) -> Vec<Partition> {
    let max_len = max_len.unwrap_or(n);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, max_len, &mut cur, &mut out);
    out
}

fn fill(
    remaining: usize,
    cap: usize,
    slots: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_vec_unchecked(cur.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(remaining)).rev() {
        // the rest must fit in slots-1 parts of size ≤ p
        if (remaining - p) > p * (slots - 1) {
            break;
        }
        cur.push(p);
        fill(remaining - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// Number of partitions of `n` with at most `k` parts; `p_{≤k}(0) = 1`.
pub fn p_le_k(n: usize, k: usize) -> u64 {
    // table[m][j]: partitions of m into at most j parts (equivalently parts ≤ j)
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for part in 1..=k {
        for m in part..=n {
            counts[m] += counts[m - part];
        }
    }
    counts[n]
}

/// p(n) for every `m ≤ n`, by Euler's pentagonal recurrence.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    p.into_iter().map(|v| v as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: every weakly decreasing sequence of positive
    /// integers bounded by n whose sum is n, found by brute force over all
    /// sequences.
    fn brute_partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let s: usize = cur.iter().sum();
            if s == n {
                if cur.windows(2).all(|w| w[0] >= w[1]) {
                    out.push(cur.clone());
                }
                return;
            }
            for v in 1..=(n - s) {
                cur.push(v);
                go(n, cur, out);
                cur.pop();
            }
        }
        go(n, &mut Vec::new(), &mut out);
        out.sort();
        out.reverse();
        out
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
        let four: Vec<String> = partitions_of(4, None)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let six: Vec<String> = partitions_of(6, Some(2))
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(six, ["6", "5,1", "4,2", "3,3"]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=9 {
            let ours: Vec<Vec<usize>> = partitions_of(n, None)
                .into_iter()
                .map(|p| p.into_parts())
                .collect();
            assert_eq!(ours, brute_partitions(n), "n={n}");
        }
        for n in 0..=9 {
            for k in 1..=4 {
                let filtered: Vec<Vec<usize>> = brute_partitions(n)
                    .into_iter()
                    .filter(|p| p.len() <= k)
                    .collect();
                let ours: Vec<Vec<usize>> = partitions_of(n, Some(k))
                    .into_iter()
                    .map(|p| p.into_parts())
                    .collect();
                assert_eq!(ours, filtered);
            }
        }
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let p = partition_counts(20);
        for (n, &count) in p.iter().enumerate() {
            assert_eq!(partitions_of(n, None).len() as u64, count, "p({n})");
        }
        assert_eq!(p[20], 627);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(part(&[3, 2, 1]).rank(), 2);
        assert_eq!(part(&[5, 5, 4, 4, 2, 1]).rank(), 4);
        assert_eq!(Partition::empty().rank(), 0);
    }

    #[test]
    fn z_examples() {
        assert_eq!(part(&[1, 1, 1, 1, 1, 1]).z(), BigUint::from(720u32));
        assert_eq!(part(&[3, 3]).z(), BigUint::from(18u32));
        assert_eq!(part(&[1]).z(), BigUint::from(1u32));
    }

    #[test]
    fn p_le_k_examples() {
        assert_eq!(p_le_k(0, 3), 1);
        assert_eq!(p_le_k(5, 1), 1);
        assert_eq!(p_le_k(4, 2), 3);
        for n in 0..=12 {
            for k in 1..=6 {
                assert_eq!(p_le_k(n, k), partitions_of(n, Some(k)).len() as u64);
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[3, 2, 1]).conjugate(), part(&[3, 2, 1]));
        assert_eq!(part(&[4]).conjugate(), part(&[1, 1, 1, 1]));
        assert_eq!(
            part(&[5, 3, 3, 3, 2, 2]).conjugate(),
            part(&[6, 6, 4, 1, 1])
        );
    }

    #[test]
    fn rank_is_conjugation_invariant() {
        for n in 0..=12 {
            for l in partitions_of(n, None) {
                assert_eq!(l.rank(), l.conjugate().rank());
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn class_equation() {
        for n in 1..=20usize {
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            let total: BigUint = partitions_of(n, None).iter().map(|l| &fact / l.z()).sum();
            assert_eq!(total, fact, "n={n}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "5,4,4,2,1".parse::<Partition>().unwrap(),
            part(&[5, 4, 4, 2, 1])
        );
        assert_eq!("2,2,1,0".parse::<Partition>().unwrap(), part(&[2, 2, 1]));
        assert_eq!("12,".parse::<Partition>().unwrap(), part(&[12]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(
            Partition::parse_shorthand("54421").unwrap(),
            part(&[5, 4, 4, 2, 1])
        );
        assert_eq!(
            Partition::parse_shorthand("12,10").unwrap(),
            part(&[12, 10])
        );
        assert_eq!(Partition::parse_shorthand("7").unwrap(), part(&[7]));
        assert!(Partition::parse_shorthand("12").is_err());
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let list = partitions_of(7, None);
        for w in list.windows(2) {
            assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
        }
    }
}
