//! Span dimensions of bottom Schur functions, j-bottom dimensions, the
//! power-sum/augmented-monomial identity and the space Γ.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::bottom_via_expansion;
use crate::error::{Error, Result};
use crate::jacobi_trudi::bottom_via_jacobi_trudi;
use crate::linalg::{in_span, QMatrix};
use crate::partition::{p_le_k, partitions_of, Partition};
use crate::snakes::{bottom_via_intervals, check_labelled_lemmas};
use crate::symfunc::{diagonal_d, p_to_m, relabel, transition_r, unaugment_m, Basis, SymFn, Q};

/// Largest `n` for which [`gamma`] runs without the slow flag.
pub const GAMMA_FAST_LIMIT: usize = 10;

/// Every way of counting `β_n`. `beta`, `basis_count` and `k_breakdown` are
/// only filled when the span ranks were computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub n: usize,
    /// rank of `{ŝ_λ : λ ⊢ n, rank(λ) = k}` for each `k`
    pub k_breakdown: BTreeMap<usize, usize>,
    pub beta: Option<usize>,
    /// `#{ν ⊢ n : ℓ(ν) = rank(ν)}`
    pub basis_count: Option<usize>,
    /// `Σ_k p_{≤k}(n - k²)`
    pub formula_value: u64,
    pub distinct2_count: u64,
    pub mod5_count: u64,
    pub agree: bool,
}

impl DimensionReport {
    fn values(&self) -> Vec<u64> {
        let mut v = vec![self.formula_value, self.distinct2_count, self.mod5_count];
        v.extend(self.beta.map(|b| b as u64));
        v.extend(self.basis_count.map(|b| b as u64));
        v
    }

    /// The common value, or an assertion error naming every count.
    pub fn value(&self) -> Result<u64> {
        if self.agree {
            Ok(self.formula_value)
        } else {
            Err(Error::Assertion(format!(
                "beta counts disagree at n={}: {:?}",
                self.n,
                self.values()
            )))
        }
    }
}

/// `ŝ_λ` for every `λ ⊢ n`, in canonical order.
pub fn bottoms(n: usize) -> Result<Vec<(Partition, SymFn)>> {
    partitions_of(n, None)
        .into_par_iter()
        .map(|l| bottom_via_expansion(&l, 1).map(|f| (l, f)))
        .collect()
}

fn rank_of_functions<'a, I: IntoIterator<Item = &'a SymFn>>(
    fs: I,
    index: &[Partition],
) -> Result<usize> {
    let rows: Vec<Vec<Q>> = fs
        .into_iter()
        .map(|f| f.coefficient_vector(index))
        .collect();
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(QMatrix::from_rows(rows)?.rank())
}

/// The combinatorial counts only.
pub fn beta_counts(n: usize) -> DimensionReport {
    let formula_value = (1..)
        .take_while(|k| k * k <= n)
        .map(|k| p_le_k(n - k * k, k))
        .sum();
    let mut report = DimensionReport {
        n,
        k_breakdown: BTreeMap::new(),
        beta: None,
        basis_count: None,
        formula_value,
        distinct2_count: distinct2_count(n),
        mod5_count: mod5_count(n),
        agree: false,
    };
    report.agree = report.values().windows(2).all(|w| w[0] == w[1]);
    report
}

/// All five values for `n ≥ 1`; disagreement is an assertion error.
pub fn beta(n: usize) -> Result<DimensionReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let index = partitions_of(n, None);
    let all = bottoms(n)?;
    let mut by_rank: BTreeMap<usize, Vec<&SymFn>> = BTreeMap::new();
    for (l, f) in &all {
        by_rank.entry(l.rank()).or_default().push(f);
    }
    let mut report = beta_counts(n);
    for (k, fs) in by_rank {
        report.k_breakdown.insert(k, rank_of_functions(fs, &index)?);
    }
    let global = rank_of_functions(all.iter().map(|(_, f)| f), &index)?;
    if global != report.k_breakdown.values().sum::<usize>() {
        return Err(Error::Assertion(format!(
            "rank {global} at n={n} is not the sum over k"
        )));
    }
    report.beta = Some(global);
    report.basis_count = Some(index.iter().filter(|l| l.len() == l.rank()).count());
    report.agree = report.values().windows(2).all(|w| w[0] == w[1]);
    report.value()?;
    Ok(report)
}

/// The basis `{ν ⊢ n : ℓ(ν) = rank(ν) = k}` for the rank-`k` summand.
pub fn basis_shapes(n: usize, k: usize) -> Vec<Partition> {
    partitions_of(n, Some(k))
        .into_iter()
        .filter(|l| l.len() == k && l.rank() == k)
        .collect()
}

/// `λ_i = λ*_i + 2k - 2i + 1` for `λ* ⊢ n - k²` with at most `k` parts.
pub fn staircase_bijection(n: usize, k: usize, star: &Partition) -> Result<Partition> {
    if k == 0 || k * k > n || star.size() != n - k * k || star.len() > k {
        return Err(Error::Precondition(format!(
            "need {star} ⊢ n - k² = {n} - {k}² with at most {k} parts"
        )));
    }
    Partition::new((1..=k).map(|i| star.part(i) + 2 * k - 2 * i + 1).collect())
}

/// Images of the staircase map over every admissible `(k, λ*)`.
pub fn staircase_image(n: usize) -> Vec<Partition> {
    (1..)
        .take_while(|k| k * k <= n)
        .flat_map(|k| {
            partitions_of(n - k * k, Some(k))
                .into_iter()
                .map(move |star| {
                    staircase_bijection(n, k, &star).expect("admissible by construction")
                })
        })
        .collect()
}

/// Partitions of `n` whose consecutive parts differ by at least 2.
pub fn distinct2_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_multiset(parts.iter().copied()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            parts.push(p);
            go(rest - p, p.saturating_sub(2), parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn distinct2_count(n: usize) -> u64 {
    distinct2_partitions(n).len() as u64
}

/// Partitions of `n` into parts congruent to 1 or 4 mod 5, by enumeration.
pub fn mod5_count(n: usize) -> u64 {
    fn go(rest: usize, allowed: &[usize]) -> u64 {
        match allowed.split_last() {
            _ if rest == 0 => 1,
            None => 0,
            Some((&p, smaller)) => (0..=rest / p).map(|m| go(rest - m * p, smaller)).sum(),
        }
    }
    let allowed: Vec<usize> = (1..=n).filter(|p| p % 5 == 1 || p % 5 == 4).collect();
    go(n, &allowed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JBottomReport {
    pub n: usize,
    pub j: usize,
    pub dimension: usize,
    /// `#{λ ⊢ n : ℓ(λ) ≤ rank(λ) + j - 1}`
    pub count: usize,
}

impl JBottomReport {
    pub fn equal(&self) -> bool {
        self.dimension == self.count
    }
}

/// Rank of `{ŝ^j_λ : λ ⊢ n}` in the full degree-`n` coordinate space.
pub fn jbottom_dim(n: usize, j: usize) -> Result<JBottomReport> {
    if j == 0 {
        return Err(Error::Precondition("j must be at least 1".into()));
    }
    let index = partitions_of(n, None);
    let fs: Vec<SymFn> = index
        .par_iter()
        .map(|l| bottom_via_expansion(l, j))
        .collect::<Result<_>>()?;
    let dimension = rank_of_functions(&fs, &index)?;
    let count = index.iter().filter(|l| l.len() < l.rank() + j).count();
    Ok(JBottomReport {
        n,
        j,
        dimension,
        count,
    })
}

/// Both sides of `Σ c_μ p_μ = Σ c_μ m̃_μ` in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityWitness {
    pub lambda: Partition,
    pub bottom: SymFn,
    pub power_side: SymFn,
    pub monomial_side: SymFn,
    pub equal: bool,
}

pub fn verify_identity(lambda: &Partition) -> Result<IdentityWitness> {
    let bottom = bottom_via_expansion(lambda, 1)?;
    let power_side = p_to_m(&relabel(&bottom, Basis::PowerSum))?;
    let monomial_side = unaugment_m(&relabel(&bottom, Basis::AugmentedMonomial))?;
    let equal = power_side == monomial_side;
    Ok(IdentityWitness {
        lambda: lambda.clone(),
        bottom,
        power_side,
        monomial_side,
        equal,
    })
}

/// `(R - D)^T` at `n`: `Σ c_μ p̃_μ` lies in Γ iff the coefficient vector is in
/// its kernel.
pub fn gamma_matrix(n: usize) -> Result<QMatrix> {
    Ok(transition_r(n).checked_sub(&diagonal_d(n))?.transpose())
}

/// `None` for the zero function.
fn homogeneous(f: &SymFn) -> Result<Option<usize>> {
    if f.is_zero() {
        return Ok(None);
    }
    f.homogeneous_degree()
        .map(Some)
        .ok_or_else(|| Error::Precondition(format!("{f} is not homogeneous")))
}

/// Whether a homogeneous `p̃`-basis function satisfies the identity.
pub fn in_gamma(f: &SymFn) -> Result<bool> {
    if f.basis() != Basis::ScaledPowerSum {
        return Err(Error::WrongBasis {
            expected: "p~",
            found: f.basis(),
        });
    }
    let Some(n) = homogeneous(f)? else {
        return Ok(true);
    };
    let index = partitions_of(n, None);
    Ok(gamma_matrix(n)?
        .mul_vec(&f.coefficient_vector(&index))?
        .iter()
        .all(|v| *v == Q::from_integer(0.into())))
}

/// Whether `f` is a rational combination of the `ŝ_λ`, `λ ⊢ n`.
pub fn in_bottom_span(f: &SymFn) -> Result<bool> {
    let Some(n) = homogeneous(f)? else {
        return Ok(true);
    };
    let index = partitions_of(n, None);
    let rows: Vec<Vec<Q>> = bottoms(n)?
        .iter()
        .map(|(_, g)| g.coefficient_vector(&index))
        .collect();
    in_span(&rows, &f.coefficient_vector(&index))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaReport {
    pub n: usize,
    pub gamma: usize,
    pub beta: usize,
    /// Kernel basis as `p̃`-basis functions.
    pub kernel: Vec<SymFn>,
}

/// `γ_n = dim Γ_n`. Each `ŝ_λ` is checked to lie in Γ and `β_n ≤ γ_n` is
/// asserted. Beyond [`GAMMA_FAST_LIMIT`] the caller must pass `slow`.
pub fn gamma(n: usize, slow: bool) -> Result<GammaReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n > GAMMA_FAST_LIMIT && !slow {
        return Err(Error::Oversize(format!(
            "gamma at n={n} exceeds {GAMMA_FAST_LIMIT}"
        )));
    }
    let index = partitions_of(n, None);
    let vectors = gamma_matrix(n)?.kernel_basis()?;
    let kernel: Vec<SymFn> = vectors
        .iter()
        .map(|v| {
            SymFn::from_terms(
                Basis::ScaledPowerSum,
                index.iter().cloned().zip(v.iter().cloned()),
            )
        })
        .collect();
    let all = bottoms(n)?;
    for (l, f) in &all {
        if !in_span(&vectors, &f.coefficient_vector(&index))? {
            return Err(Error::Assertion(format!(
                "bottom Schur function of {l} is not in Gamma"
            )));
        }
    }
    let beta = rank_of_functions(all.iter().map(|(_, f)| f), &index)?;
    if beta > kernel.len() {
        return Err(Error::Assertion(format!(
            "beta {beta} exceeds gamma {} at n={n}",
            kernel.len()
        )));
    }
    Ok(GammaReport {
        n,
        gamma: kernel.len(),
        beta,
        kernel,
    })
}

/// One named property check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub max_n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, n: usize, outcome: Result<String>) -> Check {
    match outcome {
        Ok(detail) => Check {
            name: name.into(),
            n,
            passed: true,
            detail,
        },
        Err(e) => Check {
            name: name.into(),
            n,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn routes_agree(n: usize) -> Result<String> {
    let mut count = 0;
    for l in partitions_of(n, None) {
        let a = bottom_via_expansion(&l, 1)?;
        let b = bottom_via_intervals(&l)?;
        let c = bottom_via_jacobi_trudi(&l)?;
        if a != b || a != c {
            return Err(Error::Assertion(format!(
                "routes disagree at {l}: {a} | {b} | {c}"
            )));
        }
        count += 1;
    }
    Ok(format!("{count} shapes"))
}

fn identity_holds(n: usize) -> Result<String> {
    let shapes = partitions_of(n, None);
    for l in &shapes {
        if !verify_identity(l)?.equal {
            return Err(Error::Assertion(format!("identity fails at {l}")));
        }
    }
    Ok(format!("{} shapes", shapes.len()))
}

fn lemmas_hold(n: usize) -> Result<String> {
    for l in partitions_of(n, None) {
        let report = check_labelled_lemmas(&l, n)?;
        if let Some(f) = report.failures.first() {
            return Err(Error::Assertion(format!("{l}: {f}")));
        }
    }
    Ok(String::new())
}

/// Routes, identity, β counts, labelled-sum lemmas (n ≤ 6) and Γ
/// containment (n ≤ [`GAMMA_FAST_LIMIT`]) for every `1 ≤ n ≤ max_n`.
pub fn run_suite(max_n: usize) -> SuiteReport {
    let per_n: Vec<Vec<Check>> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut checks = vec![
                check("routes agree", n, routes_agree(n)),
                check("identity", n, identity_holds(n)),
                check(
                    "beta counts",
                    n,
                    beta(n)
                        .and_then(|r| r.value())
                        .map(|v| format!("beta = {v}")),
                ),
            ];
            if n <= 6 {
                checks.push(check("labelled sums", n, lemmas_hold(n)));
            }
            if n <= GAMMA_FAST_LIMIT {
                checks.push(check(
                    "gamma",
                    n,
                    gamma(n, false).map(|g| format!("gamma = {}", g.gamma)),
                ));
            }
            checks
        })
        .collect();
    SuiteReport {
        max_n,
        checks: per_n.into_iter().flatten().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use crate::symfunc::q_int;

    #[test]
    fn beta_small() {
        let expected = [1, 1, 1, 2, 2, 3, 3, 4, 5];
        for (i, &b) in expected.iter().enumerate() {
            let r = beta(i + 1).unwrap();
            assert_eq!(r.beta, Some(b));
            assert!(r.agree);
        }
        let r = beta(7).unwrap();
        assert_eq!(r.k_breakdown, BTreeMap::from([(1, 1), (2, 2)]));
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(
            staircase_bijection(1, 1, &Partition::empty()).unwrap(),
            part(&[1])
        );
        assert_eq!(
            staircase_bijection(5, 2, &part(&[1])).unwrap(),
            part(&[4, 1])
        );
        assert!(staircase_bijection(5, 2, &part(&[1, 1])).is_err());
        assert!(staircase_bijection(5, 1, &part(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn staircase_is_bijective() {
        for n in 1..=20 {
            let mut image = staircase_image(n);
            image.sort();
            let mut target = distinct2_partitions(n);
            target.sort();
            assert_eq!(image, target, "n={n}");
        }
    }

    #[test]
    fn rogers_ramanujan() {
        for n in 0..=30 {
            assert_eq!(distinct2_count(n), mod5_count(n), "n={n}");
        }
    }

    #[test]
    fn identity_examples() {
        let w = verify_identity(&part(&[4, 4, 4])).unwrap();
        assert!(w.equal);
        let expected = SymFn::from_int_terms(
            Basis::Monomial,
            &[
                (&[6, 4, 2], -1),
                (&[6, 3, 3], 2),
                (&[5, 5, 2], 2),
                (&[5, 4, 3], -2),
                (&[4, 4, 4], 6),
            ],
        );
        assert_eq!(w.power_side, expected);
        let w = verify_identity(&part(&[1])).unwrap();
        assert_eq!(
            w.monomial_side,
            SymFn::from_int_terms(Basis::Monomial, &[(&[1], 1)])
        );
        let w = verify_identity(&part(&[3, 2, 1])).unwrap();
        assert_eq!(
            w.power_side,
            SymFn::from_int_terms(Basis::Monomial, &[(&[5, 1], 1), (&[3, 3], -2)])
        );
        assert!(w.equal);
    }

    #[test]
    fn gamma_small() {
        let expected = [1, 1, 1, 2, 2, 3, 4];
        for (i, &g) in expected.iter().enumerate() {
            assert_eq!(gamma(i + 1, false).unwrap().gamma, g);
        }
        assert!(matches!(gamma(11, false), Err(Error::Oversize(_))));
    }

    #[test]
    fn gamma_membership() {
        let f = SymFn::from_int_terms(
            Basis::ScaledPowerSum,
            &[
                (&[5, 1, 1], 1),
                (&[4, 2, 1], -3),
                (&[3, 3, 1], 1),
                (&[3, 2, 2], 1),
            ],
        );
        assert!(in_gamma(&f).unwrap());
        assert!(!in_bottom_span(&f).unwrap());
        let g = SymFn::term(Basis::ScaledPowerSum, part(&[7]), q_int(1));
        assert!(in_gamma(&g).unwrap());
        assert!(!in_gamma(&SymFn::term(Basis::ScaledPowerSum, part(&[1, 1]), q_int(1))).unwrap());
    }

    #[test]
    fn jbottom_small() {
        for n in 1..=6 {
            assert_eq!(
                jbottom_dim(n, 1).unwrap().dimension,
                beta(n).unwrap().beta.unwrap()
            );
        }
        let r = jbottom_dim(5, 3).unwrap();
        assert_eq!((r.dimension, r.count), (6, 5));
    }

    /// Oracle: characters by border-strip enumeration, truncated by hand.
    #[test]
    fn jbottom_three_at_four_is_five() {
        use crate::characters::chi_by_enumeration;
        let index = partitions_of(4, None);
        let rows: Vec<Vec<Q>> = index
            .iter()
            .map(|l| {
                index
                    .iter()
                    .map(|nu| {
                        if nu.len() > l.rank() + 2 {
                            return Q::from_integer(0.into());
                        }
                        let z = Q::from_integer(nu.z().into());
                        Q::from_integer(chi_by_enumeration(l, nu).unwrap().into()) / z
                    })
                    .collect()
            })
            .collect();
        assert_eq!(QMatrix::from_rows(rows).unwrap().rank(), 5);
        let r = jbottom_dim(4, 3).unwrap();
        assert_eq!((r.dimension, r.count), (5, 4));
    }

    #[test]
    fn suite_small() {
        let s = run_suite(5);
        assert!(
            s.passed(),
            "{:?}",
            s.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
    }
}
