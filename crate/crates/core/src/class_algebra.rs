//! The invariant algebra spanned by the class sums `A_ρ`.
//!
//! `A_σ A_τ = Σ_ρ g_{σ,τ}^ρ A_ρ`, where `g_{σ,τ}^ρ` counts pairs
//! `((d₁,w₁),(d₂,w₂))` of types σ and τ whose product is the fixed
//! representative `(d_ρ, w_ρ)` of ρ. The constants do not depend on the
//! ambient `n`, so every product is computed once and cached.
//!
//! The fast counting route fixes `(d₁,w₁)` and solves for the second factor:
//! `w₂ = w̃₁⁻¹ w_ρ` is forced, the support `d₂` must contain the points
//! outside `d₁` and every point moved by `w₂`, and any remaining points of
//! `d₂` are fixed by `w₂`, so they can be chosen freely. The number of
//! admissible `d₂` is a single binomial coefficient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numbers::{big, binomial, binomial_u64, format_rational, rat};
use crate::par;
use crate::partial_perm::{canonical_rep, enumerate_class, for_each_of_type};
use crate::partitions::{enumerate_partitions, Partition};
use crate::semigroup_algebra::SemigroupAlgebraElement;

/// Largest `n` accepted by the brute-force group-algebra oracle by default.
pub const DEFAULT_ORACLE_BOUND: usize = 7;

/// Largest support size the counting kernel handles.
pub const MAX_KERNEL_POINTS: usize = 64;

/// How `g_{σ,τ}^ρ` is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GMethod {
    /// Enumerate the first factor and count completions in closed form.
    #[default]
    Fast,
    /// Enumerate both factors over the whole class and compare products.
    Naive,
}

/// Map `ρ -> g_{σ,τ}^ρ` holding only the nonzero constants.
pub type Expansion = BTreeMap<Partition, u64>;

type ProductCache = HashMap<(Partition, Partition), Arc<Expansion>>;

static PRODUCT_CACHE: LazyLock<RwLock<ProductCache>> = LazyLock::new(Default::default);

/// `g_{σ,τ}^ρ`; zero unless `max(|σ|,|τ|) ≤ |ρ| ≤ |σ|+|τ|`.
pub fn g_constant(sigma: &Partition, tau: &Partition, rho: &Partition) -> u64 {
    let key = (sigma.clone(), tau.clone());
    if let Some(exp) = PRODUCT_CACHE.read().expect("cache lock").get(&key) {
        return exp.get(rho).copied().unwrap_or(0);
    }
    g_constant_with(sigma, tau, rho, GMethod::Fast)
}

pub fn g_constant_with(sigma: &Partition, tau: &Partition, rho: &Partition, method: GMethod) -> u64 {
    let r = rho.size();
    if r < sigma.size().max(tau.size()) || r > sigma.size() + tau.size() {
        return 0;
    }
    match method {
        GMethod::Fast => Kernel::new(sigma, tau, rho).count(par_enabled()),
        GMethod::Naive => g_naive(sigma, tau, rho),
    }
}

/// Sequential fast route regardless of the `parallel` feature.
pub fn g_constant_sequential(sigma: &Partition, tau: &Partition, rho: &Partition) -> u64 {
    let r = rho.size();
    if r < sigma.size().max(tau.size()) || r > sigma.size() + tau.size() {
        return 0;
    }
    Kernel::new(sigma, tau, rho).count(false)
}

fn par_enabled() -> bool {
    cfg!(feature = "parallel")
}

fn g_naive(sigma: &Partition, tau: &Partition, rho: &Partition) -> u64 {
    let r = rho.size();
    let target = canonical_rep(rho);
    let rights: Vec<_> = enumerate_class(tau, r).collect();
    let lefts: Vec<_> = enumerate_class(sigma, r).collect();
    par::sum_u64(&lefts, |a| {
        rights.iter().filter(|b| a.product(b) == target).count() as u64
    })
}

struct Kernel {
    r: usize,
    w_rho: Vec<u8>,
    sigma_size: usize,
    sigma_perms: Vec<Vec<u8>>,
    tau_size: usize,
    tau_bar: Vec<u32>,
    tau_moved: usize,
}

impl Kernel {
    fn new(sigma: &Partition, tau: &Partition, rho: &Partition) -> Self {
        let r = rho.size();
        assert!(r <= MAX_KERNEL_POINTS, "|ρ| = {r} exceeds {MAX_KERNEL_POINTS}");
        let mut w_rho = Vec::with_capacity(r);
        let mut start = 0usize;
        for &part in rho.parts() {
            let part = part as usize;
            for i in 0..part {
                w_rho.push((start + (i + 1) % part) as u8);
            }
            start += part;
        }
        let mut sigma_perms = Vec::new();
        for_each_of_type(sigma.size(), sigma, &mut |img| sigma_perms.push(img.to_vec()));
        let tau_bar = tau.strip_ones();
        Kernel {
            r,
            w_rho,
            sigma_size: sigma.size(),
            sigma_perms,
            tau_size: tau.size(),
            tau_moved: tau_bar.size(),
            tau_bar: tau_bar.parts().to_vec(),
        }
    }

    fn count(&self, parallel: bool) -> u64 {
        let points: Vec<u8> = (0..self.r as u8).collect();
        let subsets = byte_subsets(&points, self.sigma_size);
        if parallel {
            par::sum_u64(&subsets, |d1| self.count_subset(d1))
        } else {
            subsets
                .iter()
                .map(|d1| self.count_subset(d1))
                .try_fold(0u64, u64::checked_add)
                .expect("u64 overflow in g count")
        }
    }

    fn count_subset(&self, d1: &[u8]) -> u64 {
        let r = self.r;
        let full: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        let d1_mask = d1.iter().fold(0u64, |m, &x| m | (1u64 << x));
        let mut w1_inv = [0u8; MAX_KERNEL_POINTS];
        let mut w2 = [0u8; MAX_KERNEL_POINTS];
        let mut seen = [false; MAX_KERNEL_POINTS];
        let mut lengths: Vec<u32> = Vec::with_capacity(r);
        let mut total = 0u64;
        for perm in &self.sigma_perms {
            for (i, slot) in w1_inv.iter_mut().enumerate().take(r) {
                *slot = i as u8;
            }
            for (local, &global) in d1.iter().enumerate() {
                w1_inv[d1[perm[local] as usize] as usize] = global;
            }
            let mut core = full & !d1_mask;
            let mut moved = 0usize;
            for x in 0..r {
                let y = w1_inv[self.w_rho[x] as usize];
                w2[x] = y;
                if y as usize != x {
                    core |= 1u64 << x;
                    moved += 1;
                }
            }
            if moved != self.tau_moved {
                continue;
            }
            let core_size = core.count_ones() as usize;
            if core_size > self.tau_size {
                continue;
            }
            lengths.clear();
            seen[..r].fill(false);
            for x in 0..r {
                if seen[x] || w2[x] as usize == x {
                    continue;
                }
                let mut len = 0u32;
                let mut y = x;
                while !seen[y] {
                    seen[y] = true;
                    y = w2[y] as usize;
                    len += 1;
                }
                lengths.push(len);
            }
            lengths.sort_unstable_by(|a, b| b.cmp(a));
            if lengths != self.tau_bar {
                continue;
            }
            total += binomial_u64((r - core_size) as u64, (self.tau_size - core_size) as u64);
        }
        total
    }
}

fn byte_subsets(points: &[u8], k: usize) -> Vec<Vec<u8>> {
    let as_u32: Vec<u32> = points.iter().map(|&p| p as u32).collect();
    crate::partial_perm::subsets_of_size(&as_u32, k)
        .into_iter()
        .map(|s| s.into_iter().map(|p| p as u8).collect())
        .collect()
}

/// All nonzero `g_{σ,τ}^ρ`, computed once per ordered pair and cached.
pub fn product_expansion(sigma: &Partition, tau: &Partition) -> Arc<Expansion> {
    let key = (sigma.clone(), tau.clone());
    if let Some(exp) = PRODUCT_CACHE.read().expect("cache lock").get(&key) {
        return Arc::clone(exp);
    }
    let exp = Arc::new(compute_expansion(sigma, tau, GMethod::Fast));
    PRODUCT_CACHE
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert(exp)
        .clone()
}

/// Uncached expansion by the chosen route.
pub fn compute_expansion(sigma: &Partition, tau: &Partition, method: GMethod) -> Expansion {
    let lo = sigma.size().max(tau.size());
    let hi = sigma.size() + tau.size();
    let rhos: Vec<Partition> = (lo..=hi).flat_map(enumerate_partitions).collect();
    let values = par::map_collect(&rhos, |rho| g_constant_with(sigma, tau, rho, method));
    rhos.into_iter().zip(values).filter(|(_, g)| *g != 0).collect()
}

/// Sequential uncached expansion, for benchmarking against the parallel path.
pub fn compute_expansion_sequential(sigma: &Partition, tau: &Partition) -> Expansion {
    let lo = sigma.size().max(tau.size());
    let hi = sigma.size() + tau.size();
    (lo..=hi)
        .flat_map(enumerate_partitions)
        .map(|rho| {
            let g = g_constant_sequential(sigma, tau, &rho);
            (rho, g)
        })
        .filter(|(_, g)| *g != 0)
        .collect()
}

/// `f_{σ,τ}^ρ = z_σ z_τ g_{σ,τ}^ρ / z_ρ`, the structure constants in the
/// basis `a_ρ = z_ρ A_ρ`. Always a nonnegative integer.
pub fn f_constant(sigma: &Partition, tau: &Partition, rho: &Partition) -> Result<BigUint> {
    let g = g_constant(sigma, tau, rho);
    f_from_g(sigma, tau, rho, g)
}

fn f_from_g(sigma: &Partition, tau: &Partition, rho: &Partition, g: u64) -> Result<BigUint> {
    let num = sigma.centralizer_size() * tau.centralizer_size() * BigUint::from(g);
    let den = rho.centralizer_size();
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "f for σ={sigma:?} τ={tau:?} ρ={rho:?} is not integral"
        )));
    }
    Ok(q)
}

/// `ψ(A_{ρ;n}) = C(n-r+m₁, m₁) C_{ρ;n}`: returns the binomial and the class
/// label (the class of cycle type `ρ ∪ 1^{n-r}`).
pub fn psi_image(rho: &Partition, n: usize) -> Result<(BigUint, Partition)> {
    let r = rho.size();
    if r > n {
        return Err(Error::EmptyClass {
            partition: rho.clone(),
            n,
        });
    }
    let m1 = rho.multiplicity(1) as u64;
    Ok((binomial((n - r) as u64 + m1, m1), rho.pad(n)?))
}

/// A finite combination of class sums with exact coefficients, stored in the
/// `A_ρ` basis. With a truncation level `n` it lives in `A_n` and carries no
/// terms with `|ρ| > n`; without one it is a stable element of `A_∞`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClassVector {
    terms: BTreeMap<Partition, BigRational>,
    level: Option<usize>,
}

impl ClassVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `A_ρ` in `A_∞`.
    pub fn basis(rho: Partition) -> Self {
        let mut out = Self::zero();
        out.add_term(rho, BigRational::one());
        out
    }

    /// `a_ρ = z_ρ A_ρ`.
    pub fn a_basis(rho: Partition) -> Self {
        let z = rat(big(rho.centralizer_size()));
        let mut out = Self::zero();
        out.add_term(rho, z);
        out
    }

    pub fn unit() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut out = Self::zero();
        for (rho, c) in terms {
            out.add_term(rho, c);
        }
        out
    }

    /// Builds from coefficients in the `a_ρ` basis.
    pub fn from_a_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        Self::from_terms(terms.into_iter().map(|(rho, c)| {
            let z = rat(big(rho.centralizer_size()));
            (rho, c * z)
        }))
    }

    pub fn level(&self) -> Option<usize> {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficients in the `a_ρ` basis (`A`-coefficient divided by `z_ρ`).
    pub fn a_terms(&self) -> Vec<(Partition, BigRational)> {
        self.terms
            .iter()
            .map(|(rho, c)| (rho.clone(), c / rat(big(rho.centralizer_size()))))
            .collect()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.terms.keys().cloned().collect()
    }

    fn add_term(&mut self, rho: Partition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        if let Some(n) = self.level {
            if rho.size() > n {
                return;
            }
        }
        let entry = self.terms.entry(rho.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&rho);
        }
    }

    /// `θ_n`: drops the terms with `|ρ| > n`.
    pub fn truncate(&self, n: usize) -> Self {
        let n = self.level.map_or(n, |l| l.min(n));
        ClassVector {
            terms: self
                .terms
                .iter()
                .filter(|(rho, _)| rho.size() <= n)
                .map(|(r, c)| (r.clone(), c.clone()))
                .collect(),
            level: Some(n),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let level = match (self.level, other.level) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let mut out = ClassVector {
            terms: BTreeMap::new(),
            level,
        };
        for (rho, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = ClassVector {
            terms: BTreeMap::new(),
            level: self.level,
        };
        for (rho, d) in &self.terms {
            out.add_term(rho.clone(), d * c);
        }
        out
    }

    /// Bilinear product through the structure constants. With `n` given, the
    /// product is taken in `A_n` and terms with `|ρ| > n` vanish.
    pub fn multiply(&self, other: &Self, n: Option<usize>) -> Self {
        let level = [self.level, other.level, n].into_iter().flatten().min();
        let mut out = ClassVector {
            terms: BTreeMap::new(),
            level,
        };
        for (sigma, cs) in &self.terms {
            for (tau, ct) in &other.terms {
                if level.is_some_and(|l| sigma.size() > l || tau.size() > l) {
                    continue;
                }
                let coeff = cs * ct;
                for (rho, &g) in product_expansion(sigma, tau).iter() {
                    out.add_term(rho.clone(), &coeff * rat(g));
                }
            }
        }
        out
    }

    /// Image under `ψ ∘ θ_n` in the centre of `ℚ[S_n]`, keyed by the full
    /// cycle type `ρ ∪ 1^{n-|ρ|}` of each class sum.
    pub fn psi_normalize(&self, n: usize) -> ClassVector {
        let mut out = ClassVector {
            terms: BTreeMap::new(),
            level: Some(n),
        };
        for (rho, c) in &self.terms {
            if let Ok((b, _)) = psi_image(rho, n) {
                out.add_term(rho.pad(n).expect("size checked"), c * rat(big(b)));
            }
        }
        out
    }

    /// Expansion in `B_n` as an explicit combination of partial permutations.
    pub fn to_semigroup(&self, n: usize) -> SemigroupAlgebraElement {
        let mut out = SemigroupAlgebraElement::zero(n);
        for (rho, c) in &self.terms {
            let class = SemigroupAlgebraElement::class_sum(rho, n).scale(c);
            out = out.add(&class).expect("same ambient");
        }
        out
    }
}

/// `q(n) = Σ_k c_k C(n-|ρ|, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolynomial {
    base: Partition,
    coeffs: Vec<BigInt>,
}

impl BinomialPolynomial {
    pub fn new(base: Partition, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialPolynomial { base, coeffs }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Polynomial degree in `n`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact value at any integer `n`, using the polynomial extension of the
    /// binomial coefficients.
    pub fn eval(&self, n: i64) -> BigRational {
        let shift = n - self.base.size() as i64;
        let mut acc = BigRational::zero();
        let mut basis = BigRational::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                basis = basis * rat(shift - (k as i64 - 1)) / rat(k as i64);
            }
            acc += &basis * rat(c.clone());
        }
        acc
    }

    /// Coefficients in powers of `n`, constant term first.
    pub fn monomial_coeffs(&self) -> Vec<BigRational> {
        let r = self.base.size() as i64;
        let mut out = vec![BigRational::zero(); self.coeffs.len().max(1)];
        // falling = (n-r)(n-r-1)…(n-r-k+1) / k! as a coefficient vector.
        let mut falling = vec![BigRational::one()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let root = rat(r + k as i64 - 1);
                let mut next = vec![BigRational::zero(); falling.len() + 1];
                for (i, a) in falling.iter().enumerate() {
                    next[i + 1] += a;
                    next[i] -= a * &root;
                }
                falling = next.into_iter().map(|a| a / rat(k as i64)).collect();
            }
            for (i, a) in falling.iter().enumerate() {
                out[i] += a * rat(c.clone());
            }
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Human-readable form in `n`, e.g. `3n-8`.
    pub fn monomial_string(&self) -> String {
        let coeffs = self.monomial_coeffs();
        let mut out = String::new();
        for (power, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            let mag = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("({})", format_rational(&abs))
            };
            match power {
                0 => out.push_str(&mag),
                _ => {
                    if !abs.is_one() {
                        out.push_str(&mag);
                    }
                    out.push('n');
                    if power > 1 {
                        out.push_str(&format!("^{power}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Binomial-basis coefficient list, e.g. `[1,3]`.
impl fmt::Display for BinomialPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

fn require_proper(p: &Partition) -> Result<()> {
    if p.is_proper() {
        Ok(())
    } else {
        Err(Error::NotProper(p.clone()))
    }
}

/// The Farahat–Higman polynomial: the coefficient of `C_{ρ;n}` in
/// `C_{σ;n} C_{τ;n}` as a function of `n`, for proper σ, τ, ρ.
pub fn q_polynomial(sigma: &Partition, tau: &Partition, rho: &Partition) -> Result<BinomialPolynomial> {
    require_proper(sigma)?;
    require_proper(tau)?;
    require_proper(rho)?;
    let top = (sigma.size() + tau.size()).saturating_sub(rho.size());
    let expansion = product_expansion(sigma, tau);
    let coeffs = (0..=top)
        .map(|k| {
            let key = rho.union(&Partition::ones(k));
            BigInt::from(expansion.get(&key).copied().unwrap_or(0))
        })
        .collect();
    Ok(BinomialPolynomial::new(rho.clone(), coeffs))
}

/// `C_{σ;n} C_{τ;n}` in the basis of proper class sums `C_{ρ;n}` of `S_n`.
pub fn convolve_c_classes(sigma: &Partition, tau: &Partition, n: usize) -> Result<ClassVector> {
    require_proper(sigma)?;
    require_proper(tau)?;
    for p in [sigma, tau] {
        if p.size() > n {
            return Err(Error::EmptyClass {
                partition: p.clone(),
                n,
            });
        }
    }
    let mut out = ClassVector {
        terms: BTreeMap::new(),
        level: Some(n),
    };
    let expansion = product_expansion(sigma, tau);
    let mut proper: Vec<Partition> = expansion.keys().map(Partition::strip_ones).collect();
    proper.sort();
    proper.dedup();
    for rho in proper {
        if rho.size() > n {
            continue;
        }
        let q = q_polynomial(sigma, tau, &rho)?;
        out.add_term(rho, q.eval(n as i64));
    }
    Ok(out)
}

/// Brute-force `ψ(A_{σ;n}) ψ(A_{τ;n})` in `ℚ[S_n]`.
///
/// Both factors are built as explicit group-algebra elements by enumerating
/// the classes and forgetting supports, multiplied term by term, and the
/// product is read back per cycle type. The result is keyed by full cycle
/// types `ν ⊢ n`, i.e. in the family `ψ(A_{ν;n}) = C_{ν;n}`.
pub fn oracle_convolve(sigma: &Partition, tau: &Partition, n: usize, bound: usize) -> Result<ClassVector> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "oracle n",
            value: n,
            max: bound,
        });
    }
    let left = SemigroupAlgebraElement::class_sum(sigma, n).forget_support();
    let right = SemigroupAlgebraElement::class_sum(tau, n).forget_support();
    let product = left.multiply(&right)?;
    let mut out = ClassVector {
        terms: BTreeMap::new(),
        level: Some(n),
    };
    for (ty, stats) in product.cycle_type_buckets() {
        if !stats.constant {
            return Err(Error::Internal(format!(
                "oracle product is not central on class {ty:?}"
            )));
        }
        let expected = crate::numbers::factorial(n as u64) / ty.centralizer_size();
        if BigUint::from(stats.members) != expected {
            return Err(Error::Internal(format!(
                "oracle product misses members of class {ty:?}"
            )));
        }
        out.add_term(ty, stats.value);
    }
    Ok(out)
}

/// Recovers the structure constants from the oracle alone: at each level
/// `n = 0, 1, …, |σ|+|τ|` the classes `ν ⊢ n` are new, and their oracle
/// coefficients minus the contributions of already-known constants of
/// smaller size determine `h_{σ,τ}^ν`.
pub fn oracle_structure_constants(
    sigma: &Partition,
    tau: &Partition,
    bound: usize,
) -> Result<BTreeMap<Partition, BigRational>> {
    let top = sigma.size() + tau.size();
    let mut known: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for n in 0..=top {
        let observed = oracle_convolve(sigma, tau, n, bound)?;
        let mut predicted = ClassVector::from_terms(known.clone()).psi_normalize(n);
        predicted = predicted.scale(&rat(-1));
        let residual = observed.add(&predicted);
        for nu in enumerate_partitions(n) {
            let h = residual.coefficient(&nu);
            if !h.is_zero() {
                known.insert(nu, h);
            }
        }
    }
    Ok(known)
}

/// `h` as exact integers, or an error if any is fractional or negative.
pub fn as_counts(map: &BTreeMap<Partition, BigRational>) -> Result<Expansion> {
    map.iter()
        .map(|(rho, c)| {
            let v = crate::numbers::to_integer(c, "oracle constant")?;
            let v = v
                .to_u64()
                .ok_or_else(|| Error::Internal(format!("oracle constant for {rho:?} is negative or huge")))?;
            Ok((rho.clone(), v))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_up_to, proper_partitions_up_to};
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        rat(n)
    }

    #[test]
    fn transposition_squared() {
        let e = product_expansion(&p("2"), &p("2"));
        let expected: Expansion = [(p("1,1"), 1), (p("3"), 3), (p("2,2"), 2)].into_iter().collect();
        assert_eq!(*e, expected);
    }

    #[test]
    fn unit_constants() {
        for tau in partitions_up_to(4) {
            for rho in partitions_up_to(5) {
                let g = g_constant(&Partition::empty(), &tau, &rho);
                assert_eq!(g, u64::from(rho == tau));
            }
        }
    }

    #[test]
    fn fast_and_naive_routes_agree() {
        for sigma in partitions_up_to(3) {
            for tau in partitions_up_to(3) {
                assert_eq!(
                    compute_expansion(&sigma, &tau, GMethod::Fast),
                    compute_expansion(&sigma, &tau, GMethod::Naive),
                    "{sigma:?} {tau:?}"
                );
                assert_eq!(
                    compute_expansion(&sigma, &tau, GMethod::Fast),
                    compute_expansion_sequential(&sigma, &tau)
                );
            }
        }
        // A few larger spot checks.
        for (s, t) in [("4", "2"), ("2,2", "2,1"), ("3,1", "2")] {
            assert_eq!(
                compute_expansion(&p(s), &p(t), GMethod::Fast),
                compute_expansion(&p(s), &p(t), GMethod::Naive)
            );
        }
    }

    #[test]
    fn top_term_is_the_union() {
        for sigma in partitions_up_to(5) {
            for tau in partitions_up_to(5) {
                let e = product_expansion(&sigma, &tau);
                let top = sigma.size() + tau.size();
                let tops: Vec<_> = e.iter().filter(|(r, _)| r.size() == top).collect();
                assert_eq!(tops.len(), 1);
                let (rho, &g) = tops[0];
                assert_eq!(*rho, sigma.union(&tau));
                let expected: BigUint = (1..=top as u32)
                    .map(|k| {
                        binomial(
                            (sigma.multiplicity(k) + tau.multiplicity(k)) as u64,
                            sigma.multiplicity(k) as u64,
                        )
                    })
                    .product();
                assert_eq!(BigUint::from(g), expected);
                assert!(e.keys().all(|r| r.size() <= top));
            }
        }
    }

    #[test]
    fn symmetry_of_constants() {
        for sigma in partitions_up_to(5) {
            for tau in partitions_up_to(5) {
                assert_eq!(product_expansion(&sigma, &tau), product_expansion(&tau, &sigma));
            }
        }
    }

    #[test]
    fn f_constants() {
        let two = p("2");
        assert_eq!(f_constant(&two, &two, &p("2,2")).unwrap(), 1u32.into());
        assert_eq!(f_constant(&two, &two, &p("3")).unwrap(), 4u32.into());
        assert_eq!(f_constant(&two, &two, &p("1,1")).unwrap(), 2u32.into());
        assert_eq!(f_constant(&p("3"), &two, &p("4")).unwrap(), 6u32.into());
        for sigma in partitions_up_to(5) {
            for tau in partitions_up_to(5) {
                assert_eq!(f_constant(&sigma, &tau, &sigma.union(&tau)).unwrap(), 1u32.into());
                for (rho, &g) in product_expansion(&sigma, &tau).iter() {
                    assert!(f_from_g(&sigma, &tau, rho, g).is_ok());
                }
            }
        }
    }

    fn without_one(parts: &[u32], x: u32) -> Vec<u32> {
        let mut out = parts.to_vec();
        let at = out.iter().position(|&y| y == x).unwrap();
        out.remove(at);
        out
    }

    #[test]
    fn one_row_merges() {
        // Replace a row i of σ and a row j of τ by a row i+j-1. Distinct
        // merges may give the same ρ; their contributions add up.
        assert_eq!(f_constant(&p("3"), &p("2"), &p("4")).unwrap(), 6u32.into());
        for sigma in partitions_up_to(4) {
            for tau in partitions_up_to(4) {
                let mut merged: BTreeMap<Partition, usize> = BTreeMap::new();
                for (i, mi) in sigma.grouped() {
                    for (j, mj) in tau.grouped() {
                        let mut parts = without_one(sigma.parts(), i);
                        parts.extend(without_one(tau.parts(), j));
                        parts.push(i + j - 1);
                        *merged.entry(Partition::new(parts).unwrap()).or_default() +=
                            i as usize * mi * j as usize * mj;
                    }
                }
                let expansion = product_expansion(&sigma, &tau);
                let at_this_size = expansion
                    .keys()
                    .filter(|r| r.size() + 1 == sigma.size() + tau.size())
                    .count();
                assert_eq!(at_this_size, merged.len(), "{sigma:?} {tau:?}");
                for (rho, expected) in merged {
                    let f = f_constant(&sigma, &tau, &rho).unwrap();
                    assert_eq!(f, BigUint::from(expected), "{sigma:?} {tau:?} {rho:?}");
                }
            }
        }
        // (1)(2,1): merging into the 2 gives 2, into the 1 gives 1.
        assert_eq!(f_constant(&p("1"), &p("2,1"), &p("2,1")).unwrap(), 3u32.into());
    }

    #[test]
    fn truncated_products() {
        let a2 = ClassVector::basis(p("2"));
        let at = |n| a2.multiply(&a2, Some(n));
        assert_eq!(at(2), ClassVector::basis(p("1,1")).truncate(2));
        assert_eq!(
            at(3),
            ClassVector::from_terms([(p("1,1"), q(1)), (p("3"), q(3))]).truncate(3)
        );
        let v = ClassVector::from_terms([(p("3,1"), q(2)), (p("2"), q(-1))]);
        assert_eq!(ClassVector::unit().multiply(&v, None), v);
    }

    #[test]
    fn a_basis_row_for_three_cycles() {
        let a3 = ClassVector::a_basis(p("3"));
        let prod = a3.multiply(&a3, None);
        let expected = ClassVector::from_a_terms([
            (p("3,3"), q(1)),
            (p("5"), q(9)),
            (p("2,2"), q(9)),
            (p("3,1"), q(9)),
            (p("3"), q(3)),
            (p("1,1,1"), q(3)),
        ]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn psi_images() {
        assert_eq!(psi_image(&p("3,2"), 7).unwrap().0, 1u32.into());
        assert_eq!(psi_image(&p("1"), 6).unwrap().0, 6u32.into());
        assert_eq!(psi_image(&p("3,1"), 5).unwrap().0, 2u32.into());
        assert!(psi_image(&p("3,1"), 3).is_err());
        assert_eq!(psi_image(&p("3,1"), 5).unwrap().1, p("3,1,1"));
        assert_eq!(
            psi_image(&Partition::empty(), 2).unwrap(),
            (1u32.into(), p("1,1"))
        );
    }

    #[test]
    fn q_polynomials() {
        let three = p("3");
        let q3 = q_polynomial(&three, &three, &three).unwrap();
        assert_eq!(q3.to_string(), "[1,3]");
        assert_eq!(q3.monomial_string(), "3n-8");
        let q0 = q_polynomial(&three, &three, &Partition::empty()).unwrap();
        assert_eq!(q0.to_string(), "[0,0,0,2]");
        assert_eq!(
            q0.monomial_coeffs(),
            vec![
                q(0),
                BigRational::new(2.into(), 3.into()),
                q(-1),
                BigRational::new(1.into(), 3.into())
            ]
        );
        assert_eq!(q0.monomial_string(), "(1/3)n^3-n^2+(2/3)n");
        for n in 3..10i64 {
            assert_eq!(q0.eval(n), q(n * (n - 1) * (n - 2) / 3));
        }
        let q33 = q_polynomial(&three, &three, &p("3,3")).unwrap();
        assert_eq!(q33.degree(), Some(0));
        assert_eq!(q33.eval(11), q(2));
        assert_eq!(
            q_polynomial(&p("2,1"), &three, &three),
            Err(Error::NotProper(p("2,1")))
        );
    }

    #[test]
    fn polynomial_eval_matches_monomials() {
        for sigma in proper_partitions_up_to(4) {
            for tau in proper_partitions_up_to(4) {
                for rho in proper_partitions_up_to(8) {
                    let poly = q_polynomial(&sigma, &tau, &rho).unwrap();
                    let mono = poly.monomial_coeffs();
                    for n in 0..12i64 {
                        let horner = mono
                            .iter()
                            .rev()
                            .fold(BigRational::zero(), |acc, c| acc * q(n) + c);
                        assert_eq!(poly.eval(n), horner);
                    }
                }
            }
        }
    }

    #[test]
    fn c_class_products() {
        let three = p("3");
        let at4 = convolve_c_classes(&three, &three, 4).unwrap();
        assert_eq!(
            at4.terms()
                .map(|(r, c)| (r.clone(), c.clone()))
                .collect::<Vec<_>>(),
            vec![(Partition::empty(), q(8)), (p("3"), q(4)), (p("2,2"), q(8))]
        );
        let at6 = convolve_c_classes(&three, &three, 6).unwrap();
        let expected = ClassVector::from_terms([
            (Partition::empty(), q(40)),
            (p("3"), q(10)),
            (p("2,2"), q(8)),
            (p("5"), q(5)),
            (p("3,3"), q(2)),
        ])
        .truncate(6);
        assert_eq!(at6, expected);
        let unit = convolve_c_classes(&Partition::empty(), &three, 5).unwrap();
        assert_eq!(unit, ClassVector::basis(three.clone()).truncate(5));
        assert!(convolve_c_classes(&p("4"), &three, 3).is_err());
    }

    #[test]
    fn oracle_matches_g_route() {
        let two = p("2");
        let g_route = ClassVector::basis(two.clone())
            .multiply(&ClassVector::basis(two.clone()), Some(4))
            .psi_normalize(4);
        assert_eq!(
            oracle_convolve(&two, &two, 4, DEFAULT_ORACLE_BOUND).unwrap(),
            g_route
        );
        let unit = oracle_convolve(&Partition::empty(), &p("2,1"), 4, DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(unit, ClassVector::basis(p("2,1")).psi_normalize(4));
        assert!(matches!(
            oracle_convolve(&two, &two, 8, DEFAULT_ORACLE_BOUND),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn oracle_recovers_constants() {
        for sigma in partitions_up_to(3) {
            for tau in partitions_up_to(3) {
                if sigma.size() + tau.size() > 5 {
                    continue;
                }
                let h = oracle_structure_constants(&sigma, &tau, DEFAULT_ORACLE_BOUND).unwrap();
                assert_eq!(as_counts(&h).unwrap(), *product_expansion(&sigma, &tau));
            }
        }
    }

    #[test]
    fn expansion_is_stable_in_n() {
        for sigma in partitions_up_to(3) {
            for tau in partitions_up_to(3) {
                let s = sigma.size() + tau.size();
                let a = ClassVector::basis(sigma.clone());
                let b = ClassVector::basis(tau.clone());
                let base = a.multiply(&b, Some(s)).support();
                for n in s..s + 4 {
                    assert_eq!(a.multiply(&b, Some(n)).support(), base);
                }
            }
        }
    }

    #[test]
    fn products_agree_with_semigroup_algebra() {
        for n in 0..=4usize {
            for sigma in partitions_up_to(n) {
                for tau in partitions_up_to(n) {
                    let direct = SemigroupAlgebraElement::class_sum(&sigma, n)
                        .multiply(&SemigroupAlgebraElement::class_sum(&tau, n))
                        .unwrap();
                    let via_g = ClassVector::basis(sigma.clone())
                        .multiply(&ClassVector::basis(tau.clone()), Some(n))
                        .to_semigroup(n);
                    assert_eq!(direct, via_g);
                }
            }
        }
    }

    fn arb_vector() -> impl Strategy<Value = ClassVector> {
        let basis = partitions_up_to(3);
        proptest::collection::vec((0..basis.len(), -3i64..=3), 0..4).prop_map(move |picks| {
            ClassVector::from_terms(picks.into_iter().map(|(i, c)| (basis[i].clone(), rat(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiply_is_associative(a in arb_vector(), b in arb_vector(), c in arb_vector()) {
            prop_assert_eq!(
                a.multiply(&b, None).multiply(&c, None),
                a.multiply(&b.multiply(&c, None), None)
            );
        }

        #[test]
        fn multiply_is_commutative(a in arb_vector(), b in arb_vector()) {
            prop_assert_eq!(a.multiply(&b, None), b.multiply(&a, None));
        }

        #[test]
        fn truncation_commutes_with_products(a in arb_vector(), b in arb_vector(), n in 0usize..8) {
            prop_assert_eq!(
                a.multiply(&b, None).truncate(n),
                a.truncate(n).multiply(&b.truncate(n), Some(n))
            );
        }
    }
}
