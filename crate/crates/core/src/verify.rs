//! Verification suites: each recomputes a family of identities and reports
//! one named check per instance.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::characters::{f_eval, s_star, x_mu};
use crate::class_algebra::{f_constant, oracle_convolve, product_expansion, ClassVector};
use crate::error::{Error, Result};
use crate::fillings::{enumerate_f, Filling};
use crate::filtrations::{
    check_filtration, check_gamma_inequalities, limit_ratio, DegreeFunction, FiltrationViolation,
};
use crate::golden;
use crate::numbers::rat;
use crate::partial_perm::{enumerate_all, subsets_of_size};
use crate::partitions::partitions_up_to;
use crate::semigroup_algebra::{
    center_dimension, center_dimension_by_pairs, phi_separates_supports, SemigroupAlgebraElement,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Section11,
    Section6,
    Oracle,
    Fillings,
    Homomorphism,
    Filtrations,
    Semigroup,
    Gamma,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Section6,
        Suite::Section11,
        Suite::Oracle,
        Suite::Fillings,
        Suite::Homomorphism,
        Suite::Filtrations,
        Suite::Semigroup,
        Suite::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Section11 => "section11",
            Suite::Section6 => "section6",
            Suite::Oracle => "oracle",
            Suite::Fillings => "fillings",
            Suite::Homomorphism => "homomorphism",
            Suite::Filtrations => "filtrations",
            Suite::Semigroup => "semigroup",
            Suite::Gamma => "gamma",
        }
    }

    /// The size parameter used when none is given, or `None` if the suite
    /// has no size parameter.
    pub fn default_size(self) -> Option<usize> {
        match self {
            Suite::Section11 | Suite::Section6 => None,
            Suite::Oracle => Some(7),
            Suite::Fillings => Some(4),
            Suite::Homomorphism => Some(4),
            Suite::Filtrations => Some(5),
            Suite::Semigroup => Some(6),
            Suite::Gamma => Some(8),
        }
    }

    /// Largest accepted size parameter.
    pub fn max_size(self) -> Option<usize> {
        match self {
            Suite::Section11 | Suite::Section6 => None,
            Suite::Oracle => Some(8),
            Suite::Fillings => Some(5),
            Suite::Homomorphism => Some(5),
            Suite::Filtrations => Some(crate::filtrations::MAX_FILTRATION_BOUND),
            Suite::Semigroup => Some(7),
            Suite::Gamma => Some(64),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Internal(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub size: Option<usize>,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        let size = self.size.map(|s| format!(" (size {s})")).unwrap_or_default();
        write!(
            f,
            "{}{size}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed
        )
    }
}

/// Runs `suite` with the given size parameter or its default.
pub fn run(suite: Suite, size: Option<usize>) -> Result<SuiteReport> {
    let size = match (size, suite.default_size(), suite.max_size()) {
        (Some(s), _, Some(max)) if s > max => {
            return Err(Error::BoundExceeded {
                what: "suite size",
                value: s,
                max,
            })
        }
        (Some(s), Some(_), _) => Some(s),
        (_, default, _) => default,
    };
    let checks = match suite {
        Suite::Section11 => golden_checks("section11")?,
        Suite::Section6 => golden_checks("section6")?,
        Suite::Oracle => oracle_checks(size.expect("sized"))?,
        Suite::Fillings => filling_checks(size.expect("sized"))?,
        Suite::Homomorphism => homomorphism_checks(size.expect("sized")),
        Suite::Filtrations => filtration_checks(size.expect("sized"))?,
        Suite::Semigroup => semigroup_checks(size.expect("sized"))?,
        Suite::Gamma => gamma_checks(size.expect("sized"))?,
    };
    Ok(SuiteReport { suite, size, checks })
}

fn golden_checks(section: &str) -> Result<Vec<Check>> {
    golden::section(section)?
        .iter()
        .map(|row| {
            let diff = row.diff()?;
            let detail: Vec<String> = diff.iter().map(ToString::to_string).collect();
            Ok(Check::new(row.label(), diff.is_empty(), detail.join("; ")))
        })
        .collect()
}

/// Group-algebra brute force against the structure constants, at
/// `n = |σ| + |τ| ≤ max_total`.
fn oracle_checks(max_total: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for sigma in partitions_up_to(max_total) {
        for tau in partitions_up_to(max_total - sigma.size()) {
            let n = sigma.size() + tau.size();
            let oracle = oracle_convolve(&sigma, &tau, n, max_total)?;
            let via_g = ClassVector::basis(sigma.clone())
                .multiply(&ClassVector::basis(tau.clone()), Some(n))
                .psi_normalize(n);
            let detail = if oracle == via_g {
                String::new()
            } else {
                format!("{oracle:?} != {via_g:?}")
            };
            checks.push(Check::new(
                format!("{sigma:?} * {tau:?} in S{n}"),
                oracle == via_g,
                detail,
            ));
        }
    }
    Ok(checks)
}

fn filling_checks(max_size: usize) -> Result<Vec<Check>> {
    let s: Filling = "3,4,5,6,9;2,1,7".parse()?;
    let t: Filling = "4,3,2;1,9,6;8".parse()?;
    let expected: Filling = "5,6,7,2;3,1;4;9;8".parse()?;
    let product = s.convolve(&t);
    let mut checks = vec![Check::new(
        format!("{s} * {t}"),
        product == expected,
        format!("got {product}"),
    )];
    for sigma in partitions_up_to(max_size) {
        for tau in partitions_up_to(max_size) {
            let mut bad = Vec::new();
            for rho in product_expansion(&sigma, &tau).keys() {
                let count = enumerate_f(&sigma, &tau, rho).len();
                let f = f_constant(&sigma, &tau, rho)?;
                if num_bigint::BigUint::from(count) != f {
                    bad.push(format!("{rho:?}: {count} pairs, f = {f}"));
                }
            }
            checks.push(Check::new(
                format!("F {sigma:?} {tau:?}"),
                bad.is_empty(),
                bad.join("; "),
            ));
        }
    }
    Ok(checks)
}

/// `F(A_σ A_τ) = F(A_σ) F(A_τ)` on `|λ| ≤ 8`, `F(x_μ) = s*_μ` and the
/// vanishing of `s*_μ` below `|μ|`.
fn homomorphism_checks(max_size: usize) -> Vec<Check> {
    let lambdas = partitions_up_to(8);
    let mut checks = Vec::new();
    for sigma in partitions_up_to(max_size) {
        for tau in partitions_up_to(max_size) {
            let a = ClassVector::basis(sigma.clone());
            let b = ClassVector::basis(tau.clone());
            let ab = a.multiply(&b, None);
            let bad: Vec<String> = lambdas
                .iter()
                .filter(|l| f_eval(&ab, l) != f_eval(&a, l) * f_eval(&b, l))
                .map(|l| format!("{l:?}"))
                .collect();
            checks.push(Check::new(
                format!("F(A{sigma:?} A{tau:?})"),
                bad.is_empty(),
                bad.join(" "),
            ));
        }
    }
    for mu in partitions_up_to(3) {
        let x = x_mu(&mu);
        let bad: Vec<String> = partitions_up_to(5)
            .iter()
            .filter(|l| f_eval(&x, l) != s_star(&mu, l))
            .map(|l| format!("{l:?}"))
            .collect();
        checks.push(Check::new(
            format!("F(x{mu:?}) = s*{mu:?}"),
            bad.is_empty(),
            bad.join(" "),
        ));
    }
    for mu in partitions_up_to(5) {
        let bad: Vec<String> = partitions_up_to(mu.size().saturating_sub(1))
            .iter()
            .filter(|l| l.size() < mu.size() && !num_traits::Zero::is_zero(&s_star(&mu, l)))
            .map(|l| format!("{l:?}"))
            .collect();
        checks.push(Check::new(
            format!("s*{mu:?} vanishes below"),
            bad.is_empty(),
            bad.join(" "),
        ));
    }
    checks
}

fn filtration_checks(bound: usize) -> Result<Vec<Check>> {
    let mut thetas = vec![DegreeFunction::Deg1, DegreeFunction::Deg2, DegreeFunction::Deg3];
    for js in [&[][..], &[1], &[2], &[1, 2], &[1, 3]] {
        thetas.push(DegreeFunction::Theta(js.iter().copied().collect()));
    }
    let mut checks = Vec::new();
    for theta in thetas {
        let report = check_filtration(&theta, bound)?;
        let detail: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        checks.push(Check::new(
            format!("{theta} is a filtration"),
            report.holds(),
            format!("{} triples {}", report.triples_checked, detail.join("; ")),
        ));
    }
    let cycles = DegreeFunction::Additive(vec![0, 1, 1]);
    let witness = FiltrationViolation {
        sigma: "4".parse()?,
        tau: "5".parse()?,
        rho: "2,2,2".parse()?,
        theta_rho: 3,
        bound: 2,
    };
    let report = check_filtration(&cycles, bound.max(5))?;
    checks.push(Check::new(
        "nontrivial cycle count fails",
        report.violations.contains(&witness),
        format!("{} violations", report.violations.len()),
    ));
    Ok(checks)
}

fn gamma_checks(k: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for theta in [DegreeFunction::Deg1, DegreeFunction::Deg2, DegreeFunction::Deg3] {
        let gamma = theta.gammas(k + 1);
        let report = check_gamma_inequalities(&gamma, k)?;
        let detail: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        checks.push(Check::new(
            format!("{theta} inequalities up to {k}"),
            report.holds(),
            format!("{} instances {}", report.checked, detail.join("; ")),
        ));
        let l = limit_ratio(&gamma, k)?;
        let sandwich = rat(gamma[0]) <= rat(2) * l.clone() && l <= rat(gamma[1]);
        checks.push(Check::new(
            format!("{theta} limit ratio"),
            sandwich,
            format!("min ratio {}", crate::numbers::format_rational(&l)),
        ));
    }
    Ok(checks)
}

fn semigroup_checks(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let counts: Vec<usize> = (0..=max_n.min(6)).map(|n| enumerate_all(n).len()).collect();
    let first = [1, 2, 5, 16, 65];
    let recurrence = counts
        .windows(2)
        .enumerate()
        .all(|(i, w)| w[1] == (i + 1) * w[0] + 1);
    checks.push(Check::new(
        "partial permutation counts",
        counts.iter().zip(first).all(|(a, b)| *a == b) && recurrence,
        format!("{counts:?}"),
    ));
    for n in 0..=max_n {
        let formula = center_dimension(n);
        let pairs = center_dimension_by_pairs(n);
        checks.push(Check::new(
            format!("centre dimension n={n}"),
            formula == num_bigint::BigUint::from(pairs),
            format!("{formula} vs {pairs}"),
        ));
    }
    for n in 0..=max_n.min(3) {
        checks.push(Check::new(
            format!("phi separates supports n={n}"),
            phi_separates_supports(n),
            "",
        ));
        checks.push(Check::new(
            format!("phi multiplicative n={n}"),
            phi_is_multiplicative(n)?,
            "",
        ));
    }
    Ok(checks)
}

/// `φ_x(ab) = φ_x(a) φ_x(b)` for all basis pairs and all `x ⊆ {1..n}`.
fn phi_is_multiplicative(n: usize) -> Result<bool> {
    let basis: Vec<SemigroupAlgebraElement> = enumerate_all(n)
        .into_iter()
        .map(|a| SemigroupAlgebraElement::basis(a, n))
        .collect::<Result<_>>()?;
    let ground: Vec<u32> = (1..=n as u32).collect();
    let xs: Vec<BTreeSet<u32>> = (0..=n)
        .flat_map(|k| subsets_of_size(&ground, k))
        .map(|x| x.into_iter().collect())
        .collect();
    for a in &basis {
        for b in &basis {
            let ab = a.multiply(b)?;
            for x in &xs {
                if ab.phi(x) != a.phi(x).multiply(&b.phi(x))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
