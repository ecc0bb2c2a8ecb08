//! Characters of symmetric groups and the evaluation map to shifted
//! symmetric functions.
//!
//! Characters are computed by the Murnaghan–Nakayama rule on beta-sets and
//! memoized. Shifted symmetric functions are handled only through their
//! values on partitions: `p#_ρ(λ)`, `s*_μ(λ)` and `F(v)(λ)` for class
//! vectors `v`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::class_algebra::{psi_image, ClassVector};
use crate::error::{Error, Result};
use crate::numbers::{big, factorial, falling};
use crate::partitions::{enumerate_partitions, Partition};

static CHARACTERS: LazyLock<RwLock<HashMap<(Partition, Partition), BigInt>>> =
    LazyLock::new(Default::default);

static SKEW: LazyLock<RwLock<HashMap<(Partition, Partition), BigUint>>> = LazyLock::new(Default::default);

/// `χ^λ_ρ`, the value of the irreducible character `λ` on the class `ρ`.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    Ok(mn(lambda, rho.parts()))
}

fn mn(lambda: &Partition, rho: &[u32]) -> BigInt {
    let Some((&k, rest)) = rho.split_first() else {
        return BigInt::one();
    };
    let key = (lambda.clone(), Partition::from_parts(rho));
    if let Some(v) = CHARACTERS.read().expect("character cache").get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for (smaller, negative) in remove_rim_hooks(lambda, k) {
        let v = mn(&smaller, rest);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    CHARACTERS
        .write()
        .expect("character cache")
        .insert(key, total.clone());
    total
}

/// Every `λ` minus a rim hook of length `k`, with the parity of its height.
fn remove_rim_hooks(lambda: &Partition, k: u32) -> Vec<(Partition, bool)> {
    let len = lambda.length() as u32;
    let beads: BTreeSet<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for &b in &beads {
        if b < k || beads.contains(&(b - k)) {
            continue;
        }
        let crossed = beads.range(b - k + 1..b).count();
        let mut moved = beads.clone();
        moved.remove(&b);
        moved.insert(b - k);
        let parts: Vec<u32> = moved
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        out.push((
            Partition::new(parts).expect("beta-set gives a partition"),
            crossed % 2 == 1,
        ));
    }
    out
}

/// Number of standard tableaux of shape `λ`, by the hook length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j as usize] - i as u32 - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.size() as u64) / hooks
}

/// Number of standard tableaux of the skew shape `λ/μ`; zero if `μ ⊄ λ`.
pub fn skew_dimension(lambda: &Partition, mu: &Partition) -> BigUint {
    if !mu.is_contained_in(lambda) {
        return BigUint::zero();
    }
    if lambda == mu {
        return BigUint::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = SKEW.read().expect("skew cache").get(&key) {
        return v.clone();
    }
    let parts = lambda.parts();
    let mut total = BigUint::zero();
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if !is_corner {
            continue;
        }
        let mut smaller = parts.to_vec();
        smaller[i] -= 1;
        let smaller = Partition::new(smaller.into_iter().filter(|&p| p > 0).collect())
            .expect("removing a corner keeps a partition");
        total += skew_dimension(&smaller, mu);
    }
    SKEW.write().expect("skew cache").insert(key, total.clone());
    total
}

/// The full table of `S_n`, rows and columns in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let classes = enumerate_partitions(n);
        let values = classes
            .iter()
            .map(|lambda| classes.iter().map(|rho| mn(lambda, rho.parts())).collect())
            .collect();
        CharacterTable { n, classes, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Labels of both rows and columns.
    pub fn partitions(&self) -> &[Partition] {
        &self.classes
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<&BigInt> {
        let i = self.classes.iter().position(|p| p == lambda)?;
        let j = self.classes.iter().position(|p| p == rho)?;
        Some(&self.values[i][j])
    }
}

/// `p#_ρ(λ) = (n↓r) χ^λ_{ρ̃} / dim λ` for `r ≤ n = |λ|`, and zero otherwise.
pub fn p_sharp(rho: &Partition, lambda: &Partition) -> BigRational {
    let (n, r) = (lambda.size(), rho.size());
    if r > n {
        return BigRational::zero();
    }
    let padded = rho.pad(n).expect("r <= n");
    let chi = mn(lambda, padded.parts());
    BigRational::new(big(falling(n as u64, r as u64)) * chi, big(dimension(lambda)))
}

/// `s*_μ(λ) = Σ_{ρ⊢|μ|} χ^μ_ρ p#_ρ(λ) / z_ρ`.
pub fn s_star(mu: &Partition, lambda: &Partition) -> BigRational {
    if mu.size() > lambda.size() {
        return BigRational::zero();
    }
    enumerate_partitions(mu.size())
        .iter()
        .map(|rho| {
            let chi = mn(mu, rho.parts());
            p_sharp(rho, lambda) * BigRational::new(chi, big(rho.centralizer_size()))
        })
        .sum()
}

/// `s*_μ(λ) = (n↓m) dim(λ/μ) / dim λ`.
pub fn s_star_via_skew(mu: &Partition, lambda: &Partition) -> BigRational {
    let (n, m) = (lambda.size() as u64, mu.size() as u64);
    if m > n {
        return BigRational::zero();
    }
    BigRational::new(
        big(falling(n, m) * skew_dimension(lambda, mu)),
        big(dimension(lambda)),
    )
}

/// `F(v)(λ)` with `F(A_ρ) = p#_ρ / z_ρ`.
pub fn f_eval(v: &ClassVector, lambda: &Partition) -> BigRational {
    v.terms()
        .map(|(rho, c)| c * p_sharp(rho, lambda) / BigRational::from(big(rho.centralizer_size())))
        .sum()
}

/// `F(v)(λ)` as the normalized character `χ^λ / dim λ` of the image of `v`
/// in the centre of the group algebra of `S_|λ|`.
pub fn f_eval_via_center(v: &ClassVector, lambda: &Partition) -> BigRational {
    let n = lambda.size();
    let dim = big(dimension(lambda));
    let mut total = BigRational::zero();
    for (rho, c) in v.terms() {
        if rho.size() > n {
            continue;
        }
        let (mult, full) = psi_image(rho, n).expect("rho fits in n");
        let class_size = factorial(n as u64) / full.centralizer_size();
        let chi = mn(lambda, full.parts());
        total += c * BigRational::new(big(mult * class_size) * chi, dim.clone());
    }
    total
}

/// `x_μ = Σ_{ρ⊢|μ|} χ^μ_ρ A_ρ`: the sum of all `(d, w)` with `|d| = |μ|`,
/// weighted by `χ^μ(w)`.
pub fn x_mu(mu: &Partition) -> ClassVector {
    ClassVector::from_terms(enumerate_partitions(mu.size()).into_iter().map(|rho| {
        let chi = mn(mu, rho.parts());
        (rho, BigRational::from(chi))
    }))
}
