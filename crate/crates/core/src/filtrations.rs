//! Degree functions on the class algebra and checks that they are
//! filtrations, i.e. `θ(ρ) ≤ θ(σ) + θ(τ)` whenever `A_ρ` occurs in
//! `A_σ A_τ`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;

use crate::class_algebra::product_expansion;
use crate::error::{Error, Result};
use crate::par;
use crate::partitions::{partitions_up_to, Partition};

/// Largest `|σ|, |τ|` accepted by [`check_filtration`].
pub const MAX_FILTRATION_BOUND: usize = 6;

pub const DEFAULT_FILTRATION_BOUND: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeFunction {
    /// `|ρ|`
    Deg1,
    /// `|ρ| + m₁(ρ)`
    Deg2,
    /// `|ρ| - ℓ(ρ)`, the Cayley length.
    Deg3,
    /// `|ρ| + Σ_{k∈J} m_k(ρ)`
    Theta(BTreeSet<u32>),
    /// `Σ_k γ_k m_k(ρ)`. Past the end of the list the values continue as an
    /// arithmetic progression with the last step (a single value repeats),
    /// clamped at zero.
    Additive(Vec<u64>),
}

impl DegreeFunction {
    /// `θ((k))`, the degree of a single `k`-cycle.
    pub fn gamma(&self, k: u32) -> u64 {
        match self {
            DegreeFunction::Deg1 => k as u64,
            DegreeFunction::Deg2 => k as u64 + u64::from(k == 1),
            DegreeFunction::Deg3 => k as u64 - 1,
            DegreeFunction::Theta(j) => k as u64 + u64::from(j.contains(&k)),
            DegreeFunction::Additive(g) => continue_gamma(g, k),
        }
    }

    /// `γ_1, …, γ_len`.
    pub fn gammas(&self, len: usize) -> Vec<u64> {
        (1..=len as u32).map(|k| self.gamma(k)).collect()
    }

    pub fn degree(&self, rho: &Partition) -> u64 {
        match self {
            DegreeFunction::Deg1 => rho.size() as u64,
            DegreeFunction::Deg2 => (rho.size() + rho.multiplicity(1)) as u64,
            DegreeFunction::Deg3 => (rho.size() - rho.length()) as u64,
            DegreeFunction::Theta(j) => {
                rho.size() as u64 + j.iter().map(|&k| rho.multiplicity(k) as u64).sum::<u64>()
            }
            DegreeFunction::Additive(_) => rho.grouped().iter().map(|&(k, m)| self.gamma(k) * m as u64).sum(),
        }
    }
}

fn continue_gamma(g: &[u64], k: u32) -> u64 {
    let k = k as usize;
    match g.len() {
        0 => 0,
        len if k <= len => g[k - 1],
        1 => g[0],
        len => {
            let step = g[len - 1] as i128 - g[len - 2] as i128;
            let v = g[len - 1] as i128 + step * (k - len) as i128;
            v.max(0) as u64
        }
    }
}

impl fmt::Display for DegreeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeFunction::Deg1 => f.write_str("deg1"),
            DegreeFunction::Deg2 => f.write_str("deg2"),
            DegreeFunction::Deg3 => f.write_str("deg3"),
            DegreeFunction::Theta(j) => {
                let js: Vec<String> = j.iter().map(u32::to_string).collect();
                write!(f, "theta{{{}}}", js.join(","))
            }
            DegreeFunction::Additive(g) => {
                let gs: Vec<String> = g.iter().map(u64::to_string).collect();
                write!(f, "gamma[{}]", gs.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationViolation {
    pub sigma: Partition,
    pub tau: Partition,
    pub rho: Partition,
    pub theta_rho: u64,
    /// `θ(σ) + θ(τ)`
    pub bound: u64,
}

impl fmt::Display for FiltrationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma={:?} tau={:?} rho={:?} theta_rho={} bound={}",
            self.sigma, self.tau, self.rho, self.theta_rho, self.bound
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub theta: DegreeFunction,
    pub max_size: usize,
    pub triples_checked: usize,
    pub violations: Vec<FiltrationViolation>,
}

impl FiltrationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(
            f,
            "{}: {} triples with |sigma|,|tau| <= {}, {} violations",
            self.theta,
            self.triples_checked,
            self.max_size,
            self.violations.len()
        )
    }
}

/// Scans every `σ, τ` with `|σ|, |τ| ≤ max_size` and every `ρ` with
/// `g_{σ,τ}^ρ > 0`.
pub fn check_filtration(theta: &DegreeFunction, max_size: usize) -> Result<FiltrationReport> {
    if max_size > MAX_FILTRATION_BOUND {
        return Err(Error::BoundExceeded {
            what: "filtration scan size",
            value: max_size,
            max: MAX_FILTRATION_BOUND,
        });
    }
    let shapes = partitions_up_to(max_size);
    let pairs: Vec<(Partition, Partition)> = shapes
        .iter()
        .flat_map(|s| shapes.iter().map(move |t| (s.clone(), t.clone())))
        .collect();
    let per_pair = par::map_collect(&pairs, |(sigma, tau)| {
        let bound = theta.degree(sigma) + theta.degree(tau);
        let expansion = product_expansion(sigma, tau);
        let violations: Vec<FiltrationViolation> = expansion
            .keys()
            .filter_map(|rho| {
                let theta_rho = theta.degree(rho);
                (theta_rho > bound).then(|| FiltrationViolation {
                    sigma: sigma.clone(),
                    tau: tau.clone(),
                    rho: rho.clone(),
                    theta_rho,
                    bound,
                })
            })
            .collect();
        (expansion.len(), violations)
    });
    let triples_checked = per_pair.iter().map(|(n, _)| n).sum();
    let violations = per_pair.into_iter().flat_map(|(_, v)| v).collect();
    Ok(FiltrationReport {
        theta: theta.clone(),
        max_size,
        triples_checked,
        violations,
    })
}

/// The inequalities every additive filtration satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaInequality {
    /// `0 ≤ γ₁ ≤ γ₂ ≤ …`
    Monotone,
    /// `γ_{i+j+1} ≤ γ_{i+1} + γ_{j+1}`
    Subadditive,
    /// `k γ₁ ≤ 2 γ_k`
    InverseCycle,
    /// `γ_{k+1} ≤ k γ₂`
    Transpositions,
    /// `γ_{2k+1} ≤ 2 γ_{k+1}`
    Doubling,
}

impl fmt::Display for GammaInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaInequality::Monotone => "monotone",
            GammaInequality::Subadditive => "subadditive",
            GammaInequality::InverseCycle => "inverse-cycle",
            GammaInequality::Transpositions => "transpositions",
            GammaInequality::Doubling => "doubling",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaViolation {
    pub inequality: GammaInequality,
    /// The instantiated indices: `(i, j)` for subadditivity, `(k, k)` for
    /// the one-parameter families.
    pub indices: (usize, usize),
    pub lhs: u64,
    pub rhs: u64,
}

impl fmt::Display for GammaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.indices;
        write!(f, "{} i={i} j={j}: {} > {}", self.inequality, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub k: usize,
    pub checked: usize,
    pub violations: Vec<GammaViolation>,
}

impl GammaReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every instance of the [`GammaInequality`] families whose indices
/// are at most `k`. `gamma[0]` is `γ₁`.
pub fn check_gamma_inequalities(gamma: &[u64], k: usize) -> Result<GammaReport> {
    if gamma.len() < k {
        return Err(Error::BoundExceeded {
            what: "gamma index",
            value: k,
            max: gamma.len(),
        });
    }
    let g = |i: usize| gamma[i - 1];
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut check = |inequality, indices, lhs: u64, rhs: u64| {
        checked += 1;
        if lhs > rhs {
            violations.push(GammaViolation {
                inequality,
                indices,
                lhs,
                rhs,
            });
        }
    };
    use GammaInequality::*;
    if k >= 1 {
        // 0 ≤ γ₁ always holds for unsigned values.
        check(Monotone, (0, 1), 0, g(1));
    }
    for i in 1..k {
        check(Monotone, (i, i + 1), g(i), g(i + 1));
    }
    for i in 0..k {
        for j in i..k {
            if i + j < k {
                check(Subadditive, (i, j), g(i + j + 1), g(i + 1) + g(j + 1));
            }
        }
    }
    for i in 1..=k {
        check(InverseCycle, (i, i), i as u64 * g(1), 2 * g(i));
        if i < k && k >= 2 {
            check(Transpositions, (i, i), g(i + 1), i as u64 * g(2));
        }
        if 2 * i < k {
            check(Doubling, (i, i), g(2 * i + 1), 2 * g(i + 1));
        }
    }
    Ok(GammaReport {
        k,
        checked,
        violations,
    })
}

/// `min_{1≤k≤K} γ_{k+1} / k`, a finite-range proxy for `inf_k γ_{k+1}/k`.
pub fn limit_ratio(gamma: &[u64], k: usize) -> Result<BigRational> {
    if k == 0 || gamma.len() < k + 1 {
        return Err(Error::BoundExceeded {
            what: "gamma index",
            value: k + 1,
            max: gamma.len(),
        });
    }
    Ok((1..=k)
        .map(|i| BigRational::new(gamma[i].into(), i.into()))
        .min()
        .expect("k >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_algebra::q_polynomial;
    use crate::numbers::{rat, ratio};
    use crate::partial_perm::PartialPermutation;
    use crate::partitions::proper_partitions_up_to;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cycles_only() -> DegreeFunction {
        // ℓ(ρ) − m₁(ρ): the number of nontrivial cycles.
        DegreeFunction::Additive(vec![0, 1, 1])
    }

    fn theta(js: &[u32]) -> DegreeFunction {
        DegreeFunction::Theta(js.iter().copied().collect())
    }

    #[test]
    fn degree_values() {
        assert_eq!(DegreeFunction::Deg2.degree(&p("3,1,1")), 7);
        assert_eq!(DegreeFunction::Deg3.degree(&p("2,2,2")), 3);
        assert_eq!(DegreeFunction::Deg1.degree(&Partition::empty()), 0);
        assert_eq!(cycles_only().degree(&p("4,2,1,1")), 2);
        assert_eq!(DegreeFunction::Deg2.gammas(4), vec![2, 2, 3, 4]);
        assert_eq!(DegreeFunction::Deg3.gammas(4), vec![0, 1, 2, 3]);
        assert_eq!(DegreeFunction::Deg1.gammas(4), vec![1, 2, 3, 4]);
        assert_eq!(DegreeFunction::Additive(vec![3, 1]).gammas(4), vec![3, 1, 0, 0]);
        assert_eq!(DegreeFunction::Additive(vec![5]).gammas(3), vec![5, 5, 5]);
        assert_eq!(DegreeFunction::Deg2.to_string(), "deg2");
        assert_eq!(theta(&[1, 3]).to_string(), "theta{1,3}");
    }

    #[test]
    fn gamma_forms_agree() {
        let forms = [
            (DegreeFunction::Deg1, vec![1, 2]),
            (DegreeFunction::Deg2, vec![2, 2, 3]),
            (DegreeFunction::Deg3, vec![0, 1]),
        ];
        for (named, gamma) in forms {
            let additive = DegreeFunction::Additive(gamma);
            for rho in partitions_up_to(8) {
                assert_eq!(named.degree(&rho), additive.degree(&rho), "{named} {rho:?}");
            }
        }
        for rho in partitions_up_to(8) {
            assert_eq!(theta(&[]).degree(&rho), DegreeFunction::Deg1.degree(&rho));
            assert_eq!(theta(&[1]).degree(&rho), DegreeFunction::Deg2.degree(&rho));
        }
    }

    #[test]
    fn known_filtrations_hold() {
        let mut thetas = vec![DegreeFunction::Deg1, DegreeFunction::Deg2, DegreeFunction::Deg3];
        for js in [&[][..], &[1], &[2], &[1, 2], &[1, 3]] {
            thetas.push(theta(js));
        }
        for t in thetas {
            let report = check_filtration(&t, 5).unwrap();
            assert!(report.holds(), "{report}");
            assert!(report.triples_checked > 0);
        }
    }

    #[test]
    fn nontrivial_cycle_count_is_not_a_filtration() {
        let report = check_filtration(&cycles_only(), 5).unwrap();
        let witness = FiltrationViolation {
            sigma: p("4"),
            tau: p("5"),
            rho: p("2,2,2"),
            theta_rho: 3,
            bound: 2,
        };
        assert!(report.violations.contains(&witness));
        assert_eq!(
            witness.to_string(),
            "sigma=(4) tau=(5) rho=(2,2,2) theta_rho=3 bound=2"
        );
        // Its constants satisfy every listed inequality all the same.
        assert!(check_gamma_inequalities(&cycles_only().gammas(10), 10)
            .unwrap()
            .holds());
        let gamma = cycles_only().gammas(11);
        assert!(rat(gamma[0]) <= rat(2) * limit_ratio(&gamma, 10).unwrap());
    }

    #[test]
    fn witness_product() {
        let a: PartialPermutation = "{1,2,3,4}:(1,2,3,4)".parse().unwrap();
        let b: PartialPermutation = "{1,3,4,5,6}:(1,5,4,6,3)".parse().unwrap();
        assert_eq!(a.product(&b).to_string(), "{1,2,3,4,5,6}:(1,5)(2,3)(4,6)");
    }

    #[test]
    fn scan_bound_is_enforced() {
        assert!(check_filtration(&DegreeFunction::Deg1, MAX_FILTRATION_BOUND + 1).is_err());
        let small = check_filtration(&DegreeFunction::Deg1, 1).unwrap();
        // (1)(1) = 2A(1,1) + A(1), and the empty partition pairs with everything.
        assert_eq!(small.triples_checked, 1 + 1 + 1 + 2);
    }

    #[test]
    fn gamma_inequalities() {
        for t in [DegreeFunction::Deg1, DegreeFunction::Deg2, DegreeFunction::Deg3] {
            assert!(check_gamma_inequalities(&t.gammas(8), 8).unwrap().holds(), "{t}");
        }
        let report = check_gamma_inequalities(&[3, 1, 2, 3], 4).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| v.inequality == GammaInequality::Monotone && v.indices == (1, 2)));
        assert!(check_gamma_inequalities(&[1, 2], 3).is_err());
        let report = check_gamma_inequalities(&[1, 1, 5], 3).unwrap();
        let kinds: BTreeSet<_> = report.violations.iter().map(|v| v.inequality).collect();
        assert!(kinds.contains(&GammaInequality::Subadditive));
        assert!(kinds.contains(&GammaInequality::Transpositions));
        assert!(kinds.contains(&GammaInequality::Doubling));
    }

    #[test]
    fn limit_ratios() {
        for k in 1..=10 {
            assert_eq!(
                limit_ratio(&DegreeFunction::Deg3.gammas(k + 1), k).unwrap(),
                rat(1)
            );
            assert_eq!(
                limit_ratio(&DegreeFunction::Deg1.gammas(k + 1), k).unwrap(),
                ratio(k as i64 + 1, k as i64)
            );
        }
        assert!(limit_ratio(&[1, 2], 0).is_err());
        assert!(limit_ratio(&[1, 2], 2).is_err());
    }

    /// `(x₁, …, x_k)` on its own points.
    fn cyc(points: &[u32]) -> PartialPermutation {
        PartialPermutation::from_cycle_list([points]).unwrap()
    }

    fn cycs(cycles: &[Vec<u32>]) -> PartialPermutation {
        PartialPermutation::from_cycle_list(cycles.iter().map(Vec::as_slice)).unwrap()
    }

    /// Disjoint labels: `b`s from 100, `c`s from 200, `a`s from 300.
    fn labels(base: u32, count: usize) -> Vec<u32> {
        (0..count as u32).map(|x| base + x).collect()
    }

    fn cat(parts: &[&[u32]]) -> Vec<u32> {
        parts.concat()
    }

    #[test]
    fn neighbour_pair_identity() {
        for i in 0..=4 {
            for j in 0..=4 {
                let (b, c, a) = (labels(100, i), labels(200, j), labels(300, 2));
                let left = cyc(&cat(&[&b, &a]));
                let right = cyc(&cat(&[&a, &c]));
                let expected = cycs(&[cat(&[&b, &a[..1]]), cat(&[&a[1..], &c])]);
                assert_eq!(left.product(&right), expected, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn concatenation_identity() {
        for i in 0..=4 {
            for j in 0..=4 {
                let (b, c, a) = (labels(100, i), labels(200, j), labels(300, 1));
                let product = cyc(&cat(&[&b, &a])).product(&cyc(&cat(&[&a, &c])));
                assert_eq!(product, cyc(&cat(&[&b, &a, &c])), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn inverse_cycle_identity() {
        for k in 1..=4 {
            let b = labels(100, k);
            let reversed: Vec<u32> = b.iter().rev().copied().collect();
            let product = cyc(&b).product(&cyc(&reversed));
            assert_eq!(product, PartialPermutation::identity(b.iter().copied()));
        }
    }

    #[test]
    fn transposition_chain_identities() {
        for k in 1..=4usize {
            // a₁ … a_{2k+2}, 1-indexed.
            let a = |i: usize| 300 + i as u32;
            let pairs = |from: usize, to: usize| -> Vec<Vec<u32>> {
                (from..to).step_by(2).map(|i| vec![a(i), a(i + 1)]).collect()
            };
            let evens: Vec<u32> = (1..=k).map(|i| a(2 * i)).collect();
            let odds_down: Vec<u32> = (0..k).rev().map(|i| a(2 * i + 1)).collect();

            let even = cycs(&pairs(1, 2 * k)).product(&cycs(&pairs(2, 2 * k + 1)));
            let expected = cyc(&cat(&[&evens, &[a(2 * k + 1)], &odds_down]));
            assert_eq!(even, expected, "k={k}");

            let odd = cycs(&pairs(1, 2 * k + 2)).product(&cycs(&pairs(2, 2 * k + 1)));
            let expected = cyc(&cat(&[&evens, &[a(2 * k + 2), a(2 * k + 1)], &odds_down]));
            assert_eq!(odd, expected, "k={k}");
        }
    }

    #[test]
    fn shared_block_identities() {
        for i in 0..=3 {
            for j in 0..=3 {
                for k in 1..=3 {
                    let (b, c) = (labels(100, i), labels(200, j));
                    let a = labels(300, 2 * k);
                    let odd_a: Vec<u32> = a.iter().step_by(2).copied().collect();
                    let even_a: Vec<u32> = a.iter().skip(1).step_by(2).copied().collect();
                    let product = cyc(&cat(&[&b, &a])).product(&cyc(&cat(&[&a, &c])));
                    let expected = cycs(&[cat(&[&b, &odd_a]), cat(&[&even_a, &c])]);
                    assert_eq!(product, expected, "even i={i} j={j} k={k}");

                    let a = labels(300, 2 * k + 1);
                    let odd_a: Vec<u32> = a.iter().step_by(2).copied().collect();
                    let even_a: Vec<u32> = a.iter().skip(1).step_by(2).copied().collect();
                    let product = cyc(&cat(&[&b, &a])).product(&cyc(&cat(&[&a, &c])));
                    assert_eq!(
                        product,
                        cyc(&cat(&[&b, &odd_a, &c, &even_a])),
                        "odd i={i} j={j} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn reversed_block_identity() {
        for i in 0..=3 {
            for j in 0..=3 {
                for k in 1..=4 {
                    let (b, c, a) = (labels(100, i), labels(200, j), labels(300, k));
                    let reversed: Vec<u32> = a.iter().rev().copied().collect();
                    let product = cyc(&cat(&[&b, &a])).product(&cyc(&cat(&[&reversed, &c])));
                    let mut expected = vec![cat(&[&b, &a[..1], &c])];
                    expected.extend(a[1..].iter().map(|&x| vec![x]));
                    assert_eq!(product, cycs(&expected), "i={i} j={j} k={k}");
                }
            }
        }
    }

    #[test]
    fn three_cycle_split_identity() {
        for (i, j, k) in [(0, 0, 0), (1, 2, 0), (2, 1, 1), (0, 3, 2)] {
            for (ii, jj, kk) in [(0, 0, 0), (1, 0, 2), (2, 2, 1)] {
                let (a, c, b) = (labels(100, i), labels(200, k), labels(300, j));
                let (alpha, beta, gamma) = (labels(400, ii), labels(500, jj), labels(600, kk));
                let (w, v, u) = ([700], [701], [702]);
                let left = cyc(&cat(&[&a, &w, &c, &v, &b, &u]));
                let right = cyc(&cat(&[&alpha, &u, &beta, &v, &gamma, &w]));
                let expected = cycs(&[
                    cat(&[&a, &w, &alpha]),
                    cat(&[&b, &u, &beta]),
                    cat(&[&c, &v, &gamma]),
                ]);
                assert_eq!(left.product(&right), expected);
            }
        }
    }

    #[test]
    fn cayley_additivity_and_constant_q() {
        let deg3 = DegreeFunction::Deg3;
        let mut converse_failures = Vec::new();
        for sigma in proper_partitions_up_to(4) {
            for tau in proper_partitions_up_to(4) {
                let rhos: BTreeSet<Partition> = product_expansion(&sigma, &tau)
                    .keys()
                    .map(Partition::strip_ones)
                    .collect();
                for rho in rhos {
                    let additive = deg3.degree(&sigma) + deg3.degree(&tau) == deg3.degree(&rho);
                    let constant = q_polynomial(&sigma, &tau, &rho).unwrap().degree() == Some(0);
                    if additive {
                        assert!(constant, "{sigma:?} {tau:?} {rho:?}");
                    } else if constant {
                        converse_failures.push((sigma.clone(), tau.clone(), rho));
                    }
                }
            }
        }
        // Two 3-cycles on five points always multiply to a 5-cycle, so the
        // (2,2) coefficient does not grow with n although the Cayley degrees
        // are not additive.
        assert!(converse_failures.contains(&(p("3"), p("3"), p("2,2"))));
        assert_eq!(
            q_polynomial(&p("3"), &p("3"), &p("2,2")).unwrap().coeffs(),
            &[num_bigint::BigInt::from(8)]
        );
    }

    proptest! {
        #[test]
        fn additive_functions_are_additive(
            gamma in proptest::collection::vec(0u64..6, 1..5),
            i in 0usize..30, j in 0usize..30,
        ) {
            let shapes = partitions_up_to(6);
            let (s, t) = (&shapes[i], &shapes[j]);
            let theta = DegreeFunction::Additive(gamma);
            prop_assert_eq!(theta.degree(&s.union(t)), theta.degree(s) + theta.degree(t));
        }

        #[test]
        fn limit_ratio_sandwich(gamma in proptest::collection::vec(0u64..8, 3..12)) {
            let k = gamma.len() - 1;
            if check_gamma_inequalities(&gamma, k + 1).unwrap().holds() {
                let l = limit_ratio(&gamma, k).unwrap();
                prop_assert!(rat(gamma[0]) <= rat(2) * l.clone());
                prop_assert!(l <= rat(gamma[1]));
            }
        }
    }
}
