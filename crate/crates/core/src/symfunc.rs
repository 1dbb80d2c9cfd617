//! Sparse symmetric functions with exact rational coefficients in the power
//! sum (`p`), rescaled power sum (`p̃_i = p_i / i`), monomial (`m`),
//! augmented monomial (`m̃_μ = Π m_i(μ)! · m_μ`) and complete homogeneous
//! (`h`) bases.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::partition::{partitions_of, Partition};

/// Exact rational number.
pub type Q = BigRational;

pub(crate) fn q_int<T: Into<BigInt>>(v: T) -> Q {
    Q::from_integer(v.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "ptilde")]
    ScaledPowerSum,
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "mtilde")]
    AugmentedMonomial,
    #[serde(rename = "h")]
    Homogeneous,
}

impl Basis {
    /// Prefix used when rendering terms, e.g. `p~[5,1]`.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::PowerSum => "p",
            Basis::ScaledPowerSum => "p~",
            Basis::Monomial => "m",
            Basis::AugmentedMonomial => "m~",
            Basis::Homogeneous => "h",
        }
    }

    fn is_power_sum(self) -> bool {
        matches!(self, Basis::PowerSum | Basis::ScaledPowerSum)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A finite linear combination of basis elements indexed by partitions.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SymFnDoc", try_from = "SymFnDoc")]
pub struct SymFn {
    basis: Basis,
    terms: BTreeMap<Partition, Q>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        SymFn {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// A single term `c · b_index`.
    pub fn term(basis: Basis, index: Partition, coeff: Q) -> Self {
        let mut f = SymFn::zero(basis);
        f.add_term(index, coeff);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Q)>>(basis: Basis, terms: I) -> Self {
        let mut f = SymFn::zero(basis);
        for (idx, c) in terms {
            f.add_term(idx, c);
        }
        f
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(basis: Basis, terms: &[(&[usize], i64)]) -> Self {
        Self::from_terms(
            basis,
            terms
                .iter()
                .map(|(idx, c)| (Partition::from_multiset(idx.iter().copied()), q_int(*c))),
        )
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, index: &Partition) -> Q {
        self.terms.get(index).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff` to the coefficient of `index`, deleting the entry if it
    /// cancels.
    pub fn add_term(&mut self, index: Partition, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(index) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &SymFn) -> Result<SymFn> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SymFn) -> Result<SymFn> {
        self.checked_add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SymFn {
        if c.is_zero() {
            return SymFn::zero(self.basis);
        }
        SymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Product in a power-sum basis, where `b_λ b_μ = b_{λ∪μ}`.
    pub fn multiply_p(&self, other: &SymFn) -> Result<SymFn> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        if !self.basis.is_power_sum() {
            return Err(Error::WrongBasis {
                expected: "p or p~",
                found: self.basis,
            });
        }
        let mut out = SymFn::zero(self.basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let idx = Partition::from_multiset(a.parts().iter().chain(b.parts()).copied());
                out.add_term(idx, ca * cb);
            }
        }
        Ok(out)
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Largest degree of any term (0 for the zero function).
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    fn require(&self, basis: Basis, name: &'static str) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis {
                expected: name,
                found: self.basis,
            });
        }
        Ok(())
    }

    fn map_coefficients(&self, basis: Basis, f: impl Fn(&Partition, &Q) -> Q) -> SymFn {
        SymFn::from_terms(basis, self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))))
    }

    /// Coefficients as a dense vector over the given index list.
    pub fn coefficient_vector(&self, index: &[Partition]) -> Vec<Q> {
        index.iter().map(|p| self.coeff(p)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("SymFn serializes")
    }

    pub fn from_json(s: &str) -> Result<SymFn> {
        Ok(serde_json::from_str(s)?)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Q) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for SymFn {
    /// Renders e.g. `p~[5,1] - p~[3,3]` or `1/5 p[5,1] - 1/9 p[3,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (idx, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write_rational(f, &mag)?;
                write!(f, " ")?;
            }
            let inner: Vec<String> = idx.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "{}[{}]", self.basis.symbol(), inner.join(","))?;
        }
        Ok(())
    }
}

/// Integers in JSON documents: a number when it fits in `i64`, otherwise a
/// decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(JsonInt(v.into())),
            Raw::Str(s) => s
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Serialize, Deserialize)]
struct TermDoc {
    index: Partition,
    num: JsonInt,
    den: JsonInt,
}

#[derive(Clone, Serialize, Deserialize)]
struct SymFnDoc {
    basis: Basis,
    terms: Vec<TermDoc>,
}

impl From<SymFn> for SymFnDoc {
    fn from(f: SymFn) -> Self {
        let terms = f
            .terms()
            .map(|(idx, c)| TermDoc {
                index: idx.clone(),
                num: JsonInt(c.numer().clone()),
                den: JsonInt(c.denom().clone()),
            })
            .collect();
        SymFnDoc {
            basis: f.basis,
            terms,
        }
    }
}

impl TryFrom<SymFnDoc> for SymFn {
    type Error = Error;

    fn try_from(doc: SymFnDoc) -> Result<Self> {
        let mut f = SymFn::zero(doc.basis);
        for t in doc.terms {
            if t.den.0.is_zero() {
                return Err(Error::Schema("zero denominator".into()));
            }
            if t.num.0.is_zero() {
                return Err(Error::Schema("zero coefficient stored".into()));
            }
            if f.terms.contains_key(&t.index) {
                return Err(Error::Schema(format!("duplicate index {}", t.index)));
            }
            f.add_term(t.index, Q::new(t.num.0, t.den.0));
        }
        Ok(f)
    }
}

/// `h_n = Σ_{λ⊢n} p_λ / z_λ`.
pub fn h_in_p(n: usize) -> SymFn {
    SymFn::from_terms(
        Basis::PowerSum,
        partitions_of(n, None).into_iter().map(|l| {
            let z = q_int(BigInt::from(l.z()));
            (l, z.recip())
        }),
    )
}

/// `p_k · m_μ` in the monomial basis: `ν` arises by adding `k` to one part of
/// `μ` (or appending a new part `k`), with coefficient the multiplicity of
/// the enlarged part in `ν`.
fn p_k_times_m(k: usize, mu: &Partition) -> Vec<(Partition, usize)> {
    let mut values: Vec<usize> = mu.multiplicities().into_iter().map(|(v, _)| v).collect();
    values.push(0);
    values
        .into_iter()
        .map(|a| {
            let mut parts = mu.parts().to_vec();
            if a == 0 {
                parts.push(k);
            } else {
                let pos = parts.iter().position(|&p| p == a).expect("value present");
                parts[pos] = a + k;
            }
            let nu = Partition::from_multiset(parts);
            let mult = nu.multiplicity(a + k);
            (nu, mult)
        })
        .collect()
}

/// Rewrites a power-sum function in the monomial basis by multiplying out
/// one `p_k` at a time.
pub fn p_to_m(f: &SymFn) -> Result<SymFn> {
    f.require(Basis::PowerSum, "p")?;
    let mut out = SymFn::zero(Basis::Monomial);
    for (lambda, c) in &f.terms {
        let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
        acc.insert(Partition::empty(), BigInt::one());
        for &k in lambda.parts() {
            let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for (mu, coeff) in &acc {
                for (nu, mult) in p_k_times_m(k, mu) {
                    *next.entry(nu).or_insert_with(BigInt::zero) += coeff * BigInt::from(mult);
                }
            }
            acc = next;
        }
        for (mu, coeff) in acc {
            out.add_term(mu, c * q_int(coeff));
        }
    }
    Ok(out)
}

/// Inverse of [`p_to_m`] on homogeneous input, by solving against the
/// transition matrix.
pub fn m_to_p(f: &SymFn) -> Result<SymFn> {
    f.require(Basis::Monomial, "m")?;
    let mut out = SymFn::zero(Basis::PowerSum);
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &Q)>> = BTreeMap::new();
    for (k, v) in &f.terms {
        by_degree.entry(k.size()).or_default().push((k, v));
    }
    for (n, terms) in by_degree {
        let index = partitions_of(n, None);
        let r = transition_r(n);
        // solve x^T R = target^T, i.e. R^T x = target
        let pos: HashMap<&Partition, usize> =
            index.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut target = vec![Q::zero(); index.len()];
        for (k, v) in terms {
            target[pos[k]] = v.clone();
        }
        let rt = r.transpose();
        let mut aug_rows = Vec::with_capacity(index.len());
        for (i, t) in target.iter().enumerate() {
            let mut row = rt.row(i).to_vec();
            row.push(t.clone());
            aug_rows.push(row);
        }
        let (reduced, pivots) = QMatrix::from_rows(aug_rows)?.rref();
        if pivots.len() != index.len() {
            return Err(Error::Assertion(format!(
                "transition matrix for n={n} is singular"
            )));
        }
        for (row, &col) in pivots.iter().enumerate() {
            out.add_term(index[col].clone(), reduced.get(row, index.len()).clone());
        }
    }
    Ok(out)
}

/// Number of maps from the parts of λ to the parts of μ whose fibres sum to
/// the corresponding part of μ; this is the coefficient of `x^μ` in `p_λ`.
fn merge_count(lambda: &[usize], mu: &Partition) -> u128 {
    fn go(
        i: usize,
        lambda: &[usize],
        caps: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u128>,
    ) -> u128 {
        if i == lambda.len() {
            return caps.iter().all(|&c| c == 0) as u128;
        }
        if let Some(&v) = memo.get(&(i, caps.clone())) {
            return v;
        }
        let mut total = 0;
        for slot in 0..caps.len() {
            if caps[slot] >= lambda[i] {
                caps[slot] -= lambda[i];
                total += go(i + 1, lambda, caps, memo);
                caps[slot] += lambda[i];
            }
        }
        memo.insert((i, caps.clone()), total);
        total
    }
    if lambda.iter().sum::<usize>() != mu.size() {
        return 0;
    }
    go(0, lambda, &mut mu.parts().to_vec(), &mut HashMap::new())
}

type MatrixCache = OnceLock<Mutex<HashMap<usize, Arc<OnceLock<QMatrix>>>>>;

fn memoized(
    cache: &'static MatrixCache,
    n: usize,
    build: impl FnOnce() -> QMatrix,
) -> QMatrix {
    let cell = {
        let mut map = cache
            .get_or_init(Default::default)
            .lock()
            .expect("cache lock");
        map.entry(n).or_default().clone()
    };
    cell.get_or_init(build).clone()
}

/// Transition matrix `R` with `p_λ = Σ_μ R_{λμ} m_μ`, rows and columns
/// indexed by the partitions of `n` in canonical order.
pub fn transition_r(n: usize) -> QMatrix {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<OnceLock<QMatrix>>>>> = OnceLock::new();
    memoized(&CACHE, n, || {
        let index = partitions_of(n, None);
        let mut m = QMatrix::zeros(index.len(), index.len());
        for (i, l) in index.iter().enumerate() {
            for (j, mu) in index.iter().enumerate() {
                let c = merge_count(l.parts(), mu);
                if c != 0 {
                    m.set(i, j, q_int(c));
                }
            }
        }
        m.with_labels(index.clone(), index).expect("square")
    })
}

/// Diagonal matrix with `D_{λλ} = Π_i m_i(λ)!`.
pub fn diagonal_d(n: usize) -> QMatrix {
    let index = partitions_of(n, None);
    let mut m = QMatrix::zeros(index.len(), index.len());
    for (i, l) in index.iter().enumerate() {
        m.set(i, i, q_int(BigInt::from(l.multiplicity_factorial())));
    }
    m.with_labels(index.clone(), index).expect("square")
}

/// Rewrites an `m`-basis function in the augmented basis `m̃`.
pub fn augment_m(f: &SymFn) -> Result<SymFn> {
    f.require(Basis::Monomial, "m")?;
    Ok(f.map_coefficients(Basis::AugmentedMonomial, |k, v| {
        v / q_int(BigInt::from(k.multiplicity_factorial()))
    }))
}

/// Rewrites an `m̃`-basis function in the plain monomial basis.
pub fn unaugment_m(f: &SymFn) -> Result<SymFn> {
    f.require(Basis::AugmentedMonomial, "m~")?;
    Ok(f.map_coefficients(Basis::Monomial, |k, v| {
        v * q_int(BigInt::from(k.multiplicity_factorial()))
    }))
}

/// Keeps exactly the terms whose index has at most `max_len` parts.
pub fn degree_filter(f: &SymFn, max_len: usize) -> Result<SymFn> {
    if !f.basis.is_power_sum() {
        return Err(Error::WrongBasis {
            expected: "p or p~",
            found: f.basis,
        });
    }
    Ok(SymFn {
        basis: f.basis,
        terms: f
            .terms
            .iter()
            .filter(|(k, _)| k.len() <= max_len)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
    })
}

fn part_product(p: &Partition) -> Q {
    q_int(
        p.parts()
            .iter()
            .map(|&x| BigInt::from(x))
            .product::<BigInt>(),
    )
}

/// `p` to `p̃`: the coefficient of `p̃_ν` is that of `p_ν` times `Π ν_i`.
pub fn rescale_p_tilde(f: &SymFn) -> Result<SymFn> {
    f.require(Basis::PowerSum, "p")?;
    Ok(f.map_coefficients(Basis::ScaledPowerSum, |k, v| v * part_product(k)))
}

/// `p̃` to `p`.
pub fn unscale_p_tilde(f: &SymFn) -> Result<SymFn> {
    f.require(Basis::ScaledPowerSum, "p~")?;
    Ok(f.map_coefficients(Basis::PowerSum, |k, v| v / part_product(k)))
}

/// Reinterprets coefficients under another basis label without changing
/// them, e.g. `Σ c_μ p̃_μ ↦ Σ c_μ p_μ`.
pub fn relabel(f: &SymFn, basis: Basis) -> SymFn {
    SymFn {
        basis,
        terms: f.terms.clone(),
    }
}

/// Exponent vector of a monomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialVector(pub Vec<usize>);

impl MonomialVector {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }
}

/// A polynomial in finitely many variables.
pub type FinitePoly = BTreeMap<MonomialVector, Q>;

pub(crate) fn poly_add_term(p: &mut FinitePoly, m: MonomialVector, c: Q) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match p.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn poly_mul(a: &FinitePoly, b: &FinitePoly) -> FinitePoly {
    let mut out = FinitePoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = MonomialVector(ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect());
            poly_add_term(&mut out, m, ca * cb);
        }
    }
    out
}

fn poly_one(vars: usize) -> FinitePoly {
    let mut p = FinitePoly::new();
    p.insert(MonomialVector(vec![0; vars]), Q::one());
    p
}

fn power_sum_poly(k: usize, vars: usize) -> FinitePoly {
    (0..vars)
        .map(|i| {
            let mut e = vec![0; vars];
            e[i] = k;
            (MonomialVector(e), Q::one())
        })
        .collect()
}

fn complete_poly(k: usize, vars: usize) -> FinitePoly {
    let mut out = FinitePoly::new();
    let mut e = vec![0; vars];
    fn go(i: usize, left: usize, e: &mut Vec<usize>, out: &mut FinitePoly) {
        if i + 1 == e.len() {
            e[i] = left;
            out.insert(MonomialVector(e.clone()), Q::one());
            return;
        }
        for v in 0..=left {
            e[i] = v;
            go(i + 1, left - v, e, out);
        }
        e[i] = 0;
    }
    if vars == 0 {
        if k == 0 {
            return poly_one(0);
        }
        return out;
    }
    go(0, k, &mut e, &mut out);
    out
}

/// Lexicographic successor of a sequence, or `false` at the last one.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn monomial_poly(mu: &Partition, vars: usize) -> FinitePoly {
    let mut out = FinitePoly::new();
    if mu.len() > vars {
        return out;
    }
    let mut e = mu.padded(vars);
    e.sort_unstable();
    loop {
        out.insert(MonomialVector(e.clone()), Q::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    out
}

/// Expands `f` as a polynomial in `x_1, …, x_vars`. Requires
/// `vars ≥ deg f`, which makes the map injective on symmetric functions.
pub fn evaluate_finite(f: &SymFn, vars: usize) -> Result<FinitePoly> {
    let degree = f.max_degree();
    if vars < degree {
        return Err(Error::TooFewVariables {
            needed: degree,
            got: vars,
        });
    }
    let mut out = FinitePoly::new();
    for (idx, c) in &f.terms {
        let poly = match f.basis {
            Basis::PowerSum | Basis::ScaledPowerSum => {
                idx.parts().iter().fold(poly_one(vars), |acc, &k| {
                    poly_mul(&acc, &power_sum_poly(k, vars))
                })
            }
            Basis::Homogeneous => idx.parts().iter().fold(poly_one(vars), |acc, &k| {
                poly_mul(&acc, &complete_poly(k, vars))
            }),
            Basis::Monomial | Basis::AugmentedMonomial => monomial_poly(idx, vars),
        };
        let scale = match f.basis {
            Basis::ScaledPowerSum => c / part_product(idx),
            Basis::AugmentedMonomial => c * q_int(BigInt::from(idx.multiplicity_factorial())),
            _ => c.clone(),
        };
        for (m, v) in poly {
            poly_add_term(&mut out, m, v * &scale);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn p(terms: &[(&[usize], i64, i64)]) -> SymFn {
        SymFn::from_terms(
            Basis::PowerSum,
            terms.iter().map(|(i, n, d)| (part(i), q(*n, *d))),
        )
    }

    #[test]
    fn ring_operations() {
        let p2 = SymFn::from_int_terms(Basis::PowerSum, &[(&[2], 1)]);
        let p1 = SymFn::from_int_terms(Basis::PowerSum, &[(&[1], 1)]);
        assert_eq!(
            p2.multiply_p(&p1).unwrap(),
            SymFn::from_int_terms(Basis::PowerSum, &[(&[2, 1], 1)])
        );

        let f = SymFn::from_int_terms(Basis::ScaledPowerSum, &[(&[5, 1], 1), (&[3, 3], -1)]);
        let g = SymFn::from_int_terms(Basis::ScaledPowerSum, &[(&[3, 3], 1)]);
        let sum = f.checked_add(&g).unwrap();
        assert_eq!(
            sum,
            SymFn::from_int_terms(Basis::ScaledPowerSum, &[(&[5, 1], 1)])
        );
        assert_eq!(sum.len(), 1);

        let half = p(&[(&[2], 1, 2)]);
        assert_eq!(half.scale(&q(2, 1)), p2);

        assert!(matches!(f.checked_add(&p1), Err(Error::BasisMismatch(..))));
        let m = SymFn::from_int_terms(Basis::Monomial, &[(&[1], 1)]);
        assert!(m.multiply_p(&m).is_err());
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_in_p(1), p(&[(&[1], 1, 1)]));
        assert_eq!(h_in_p(2), p(&[(&[2], 1, 2), (&[1, 1], 1, 2)]));
        assert_eq!(
            h_in_p(3),
            p(&[(&[3], 1, 3), (&[2, 1], 1, 2), (&[1, 1, 1], 1, 6)])
        );
    }

    #[test]
    fn p_to_m_examples() {
        let m = |t: &[(&[usize], i64)]| SymFn::from_int_terms(Basis::Monomial, t);
        assert_eq!(
            p_to_m(&p(&[(&[1, 1], 1, 1)])).unwrap(),
            m(&[(&[2], 1), (&[1, 1], 2)])
        );
        assert_eq!(
            p_to_m(&p(&[(&[3, 3], 1, 1)])).unwrap(),
            m(&[(&[6], 1), (&[3, 3], 2)])
        );
        assert_eq!(
            p_to_m(&p(&[(&[5, 1], 1, 1)])).unwrap(),
            m(&[(&[6], 1), (&[5, 1], 1)])
        );
        let p633 = p(&[(&[6, 3, 3], 1, 1)]);
        assert_eq!(
            p_to_m(&p633).unwrap(),
            m(&[(&[12], 1), (&[6, 6], 2), (&[9, 3], 2), (&[6, 3, 3], 2)])
        );
    }

    #[test]
    fn p_to_m_agrees_with_transition_matrix() {
        for n in 1..=8 {
            let index = partitions_of(n, None);
            let r = transition_r(n);
            for (i, l) in index.iter().enumerate() {
                let img = p_to_m(&SymFn::term(Basis::PowerSum, l.clone(), Q::one())).unwrap();
                for (j, mu) in index.iter().enumerate() {
                    assert_eq!(&img.coeff(mu), r.get(i, j), "n={n} {l} {mu}");
                }
            }
        }
    }

    #[test]
    fn transition_examples() {
        assert_eq!(
            transition_r(1),
            QMatrix::identity(1)
                .with_labels(vec![part(&[1])], vec![part(&[1])])
                .unwrap()
        );
        let r2 = transition_r(2);
        assert_eq!(r2.get(1, 1), &q(2, 1));
        assert_eq!(diagonal_d(2).get(1, 1), &q(2, 1));
        let r3 = transition_r(3);
        assert_eq!(r3.get(2, 2), &q(6, 1));
    }

    #[test]
    fn transition_diagonal_and_invertibility() {
        for n in 1..=9 {
            let r = transition_r(n);
            let d = diagonal_d(n);
            for i in 0..r.rows() {
                assert_eq!(r.get(i, i), d.get(i, i));
            }
            assert!(!r.determinant().unwrap().is_zero(), "n={n}");
        }
    }

    #[test]
    fn m_to_p_inverts() {
        let f = p(&[(&[3, 2, 1], 2, 3), (&[6], -1, 1), (&[2, 2, 1, 1], 1, 5)]);
        assert_eq!(m_to_p(&p_to_m(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn augment_examples() {
        let m = |t: &[(&[usize], i64)]| SymFn::from_int_terms(Basis::Monomial, t);
        let mt = |t: &[(&[usize], i64, i64)]| {
            SymFn::from_terms(
                Basis::AugmentedMonomial,
                t.iter().map(|(i, n, d)| (part(i), q(*n, *d))),
            )
        };
        assert_eq!(
            augment_m(&m(&[(&[3, 3], 1)])).unwrap(),
            mt(&[(&[3, 3], 1, 2)])
        );
        assert_eq!(augment_m(&m(&[(&[6], 1)])).unwrap(), mt(&[(&[6], 1, 1)]));
        assert_eq!(
            augment_m(&m(&[(&[4, 4, 4], 6)])).unwrap(),
            mt(&[(&[4, 4, 4], 1, 1)])
        );
        let f = m(&[(&[4, 4, 4], 6), (&[5, 1], -2)]);
        assert_eq!(unaugment_m(&augment_m(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn filter_and_rescale_examples() {
        let s321 = p(&[
            (&[1, 1, 1, 1, 1, 1], 1, 45),
            (&[3, 1, 1, 1], -1, 9),
            (&[5, 1], 1, 5),
            (&[3, 3], -1, 9),
        ]);
        let low = degree_filter(&s321, 2).unwrap();
        assert_eq!(low, p(&[(&[5, 1], 1, 5), (&[3, 3], -1, 9)]));
        assert_eq!(degree_filter(&s321, 6).unwrap(), s321);
        assert!(degree_filter(&s321, 1).unwrap().is_zero());

        let tilde = rescale_p_tilde(&low).unwrap();
        assert_eq!(
            tilde,
            SymFn::from_int_terms(Basis::ScaledPowerSum, &[(&[5, 1], 1), (&[3, 3], -1)])
        );
        assert_eq!(tilde.to_string(), "p~[5,1] - p~[3,3]");
        assert_eq!(
            rescale_p_tilde(&p(&[(&[1], 1, 1)])).unwrap().to_string(),
            "p~[1]"
        );
        assert_eq!(low.to_string(), "1/5 p[5,1] - 1/9 p[3,3]");
    }

    #[test]
    fn finite_evaluation_examples() {
        let m11 = SymFn::from_int_terms(Basis::Monomial, &[(&[1, 1], 1)]);
        let ev = evaluate_finite(&m11, 2).unwrap();
        assert_eq!(ev.len(), 1);
        assert_eq!(ev[&MonomialVector(vec![1, 1])], Q::one());

        let p2 = SymFn::from_int_terms(Basis::PowerSum, &[(&[2], 1)]);
        let ev = evaluate_finite(&p2, 2).unwrap();
        assert_eq!(ev.len(), 2);
        assert_eq!(ev[&MonomialVector(vec![2, 0])], Q::one());
        assert_eq!(ev[&MonomialVector(vec![0, 2])], Q::one());
        assert!(matches!(
            evaluate_finite(&p2, 1),
            Err(Error::TooFewVariables { .. })
        ));

        let p633 = SymFn::from_int_terms(Basis::PowerSum, &[(&[6, 3, 3], 1)]);
        let ms = SymFn::from_int_terms(
            Basis::Monomial,
            &[(&[12], 1), (&[6, 6], 2), (&[9, 3], 2), (&[6, 3, 3], 2)],
        );
        assert_eq!(
            evaluate_finite(&p633, 12).unwrap(),
            evaluate_finite(&ms, 12).unwrap()
        );
    }

    #[test]
    fn complete_homogeneous_by_enumeration() {
        for n in 1..=7 {
            let h = evaluate_finite(&h_in_p(n), n).unwrap();
            let direct =
                evaluate_finite(&SymFn::from_int_terms(Basis::Homogeneous, &[(&[n], 1)]), n)
                    .unwrap();
            // direct: every exponent vector of total degree n appears once
            assert!(direct.values().all(|v| v.is_one()));
            assert!(direct.keys().all(|m| m.degree() == n));
            assert_eq!(h, direct, "n={n}");
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        let f = SymFn::from_terms(
            Basis::ScaledPowerSum,
            [
                (part(&[5, 1]), q(1, 5)),
                (part(&[3, 3]), q(-1, 9)),
                (part(&[4, 2]), Q::new(BigInt::from(10).pow(30), 7.into())),
            ],
        );
        let s = f.to_json();
        assert!(
            s.starts_with(r#"{"basis":"ptilde","terms":[{"index":[5,1],"num":1,"den":5}"#),
            "{s}"
        );
        let back = SymFn::from_json(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(), s);
        assert!(
            SymFn::from_json(r#"{"basis":"p","terms":[{"index":[1],"num":0,"den":1}]}"#).is_err()
        );
        assert!(
            SymFn::from_json(r#"{"basis":"p","terms":[{"index":[1,2],"num":1,"den":1}]}"#).is_err()
        );
    }

    fn homogeneous_p(n: usize) -> impl Strategy<Value = SymFn> {
        let index = partitions_of(n, None);
        proptest::collection::vec((0..index.len(), -5i64..6, 1i64..4), 0..5).prop_map(move |ts| {
            SymFn::from_terms(
                Basis::PowerSum,
                ts.into_iter().map(|(i, a, b)| (index[i].clone(), q(a, b))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn p_to_m_is_linear_and_faithful((f, g) in (1usize..=6).prop_flat_map(|n| (homogeneous_p(n), homogeneous_p(n)))) {
            let lhs = p_to_m(&f.checked_add(&g).unwrap()).unwrap();
            let rhs = p_to_m(&f).unwrap().checked_add(&p_to_m(&g).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            let n = f.max_degree().max(g.max_degree()).max(1);
            prop_assert_eq!(evaluate_finite(&lhs, n).unwrap(), evaluate_finite(&f.checked_add(&g).unwrap(), n).unwrap());
        }

        #[test]
        fn rescale_round_trip(f in (1usize..=8).prop_flat_map(homogeneous_p)) {
            prop_assert_eq!(unscale_p_tilde(&rescale_p_tilde(&f).unwrap()).unwrap(), f);
        }

        #[test]
        fn json_round_trip(f in (1usize..=7).prop_flat_map(homogeneous_p)) {
            let s = f.to_json();
            prop_assert_eq!(SymFn::from_json(&s).unwrap().to_json(), s);
        }
    }
}
