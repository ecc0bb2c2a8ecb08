//! The semigroup algebra `B_n` of partial permutations over `ℚ`, the
//! evaluation homomorphisms `φ_x`, the central projections `ε_d`, the
//! truncations `θ_m`, and the support-forgetting map `ψ` into the group
//! algebra of `S_n`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{binomial, format_rational, rat};
use crate::par;
use crate::partial_perm::{enumerate_all, enumerate_class, subsets_of_size, PartialPermutation};
use crate::partitions::{enumerate_partitions, Partition};

/// A finite `ℚ`-combination of partial permutations supported in `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupAlgebraElement {
    ambient_n: usize,
    terms: BTreeMap<PartialPermutation, BigRational>,
}

impl SemigroupAlgebraElement {
    pub fn zero(ambient_n: usize) -> Self {
        SemigroupAlgebraElement {
            ambient_n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(ambient_n: usize) -> Self {
        Self::basis(PartialPermutation::unit(), ambient_n).expect("unit has empty support")
    }

    pub fn basis(alpha: PartialPermutation, ambient_n: usize) -> Result<Self> {
        Self::from_terms(ambient_n, [(alpha, BigRational::one())])
    }

    pub fn from_terms<I>(ambient_n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PartialPermutation, BigRational)>,
    {
        let mut out = Self::zero(ambient_n);
        for (alpha, c) in terms {
            if let Some(x) = alpha.support().find(|&x| x == 0 || x as usize > ambient_n) {
                return Err(Error::PointOutOfRange {
                    point: x,
                    n: ambient_n,
                });
            }
            out.add_term(alpha, c);
        }
        Ok(out)
    }

    /// The class sum `A_{ρ;n}`; zero when `|ρ| > n`.
    pub fn class_sum(rho: &Partition, n: usize) -> Self {
        let mut out = Self::zero(n);
        for alpha in enumerate_class(rho, n) {
            out.add_term(alpha, BigRational::one());
        }
        out
    }

    /// `ε_d = Σ_{d ⊆ y ⊆ {1..n}} (-1)^{|y|-|d|} (y, e)`.
    pub fn epsilon(d: &BTreeSet<u32>, n: usize) -> Result<Self> {
        if let Some(&x) = d.iter().find(|&&x| x == 0 || x as usize > n) {
            return Err(Error::PointOutOfRange { point: x, n });
        }
        let outside: Vec<u32> = (1..=n as u32).filter(|x| !d.contains(x)).collect();
        let mut out = Self::zero(n);
        for extra in 0..=outside.len() {
            let sign = if extra % 2 == 0 { rat(1) } else { rat(-1) };
            for add in subsets_of_size(&outside, extra) {
                let y = d.iter().copied().chain(add);
                out.add_term(PartialPermutation::identity(y), sign.clone());
            }
        }
        Ok(out)
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
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

    pub fn terms(&self) -> impl Iterator<Item = (&PartialPermutation, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &PartialPermutation) -> BigRational {
        self.terms.get(alpha).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, alpha: PartialPermutation, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient_n != other.ambient_n {
            return Err(Error::AmbientMismatch {
                left: self.ambient_n,
                right: other.ambient_n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.ambient_n);
        for (alpha, d) in &self.terms {
            out.add_term(alpha.clone(), d * c);
        }
        out
    }

    /// Bilinear extension of the semigroup product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let left: Vec<(&PartialPermutation, &BigRational)> = self.terms.iter().collect();
        let partials = par::map_collect(&left, |(a, ca)| {
            let mut acc: HashMap<PartialPermutation, BigRational> = HashMap::new();
            for (b, cb) in &other.terms {
                *acc.entry(a.product(b)).or_insert_with(BigRational::zero) += *ca * cb;
            }
            acc
        });
        let mut merged: BTreeMap<PartialPermutation, BigRational> = BTreeMap::new();
        for partial in partials {
            for (k, v) in partial {
                *merged.entry(k).or_insert_with(BigRational::zero) += v;
            }
        }
        merged.retain(|_, v| !v.is_zero());
        Ok(SemigroupAlgebraElement {
            ambient_n: self.ambient_n,
            terms: merged,
        })
    }

    /// `θ_m`: keeps the terms supported in `{1..m}`.
    pub fn truncate(&self, m: usize) -> Self {
        let m = m.min(self.ambient_n);
        SemigroupAlgebraElement {
            ambient_n: m,
            terms: self
                .terms
                .iter()
                .filter(|(alpha, _)| alpha.within(m))
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// `φ_x`: terms with support inside `x` map to their extension on `x`,
    /// the rest vanish.
    pub fn phi(&self, x: &BTreeSet<u32>) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(x.iter().copied().collect());
        for (alpha, c) in &self.terms {
            if let Some(w) = alpha.extend_to(x) {
                out.add_perm(&w, c.clone());
            }
        }
        out
    }

    /// `ψ`: forget the support, landing in the group algebra of `S_n`.
    pub fn forget_support(&self) -> GroupAlgebraElement {
        self.phi(&(1..=self.ambient_n as u32).collect())
    }

    /// Structured dump sorted by (|support|, support, cycles).
    pub fn dump(&self) -> Vec<DumpRecord> {
        self.terms
            .iter()
            .map(|(alpha, c)| DumpRecord {
                support: alpha.support().collect(),
                cycles: alpha.cycles(),
                coefficient: c.clone(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DumpRecord {
    pub support: Vec<u32>,
    pub cycles: Vec<Vec<u32>>,
    pub coefficient: BigRational,
}

impl std::fmt::Display for DumpRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let support: Vec<String> = self.support.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}:", support.join(","))?;
        for c in &self.cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        write!(f, " {}", format_rational(&self.coefficient))
    }
}

/// An element of the group algebra of the symmetric group on a finite
/// ground set. Permutations are stored densely as index image tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    ground: Vec<u32>,
    terms: HashMap<Vec<u8>, BigRational>,
}

impl GroupAlgebraElement {
    /// `ground` must be sorted and duplicate free.
    pub fn zero(ground: Vec<u32>) -> Self {
        debug_assert!(ground.windows(2).all(|w| w[0] < w[1]));
        GroupAlgebraElement {
            ground,
            terms: HashMap::new(),
        }
    }

    pub fn identity(ground: Vec<u32>) -> Self {
        let mut out = Self::zero(ground);
        let id: Vec<u8> = (0..out.ground.len() as u8).collect();
        out.terms.insert(id, BigRational::one());
        out
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
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

    fn index_of(&self, x: u32) -> usize {
        self.ground.binary_search(&x).expect("point in ground set")
    }

    /// Adds `c·w`, where `w` must permute exactly the ground set.
    pub fn add_perm(&mut self, w: &PartialPermutation, c: BigRational) {
        assert!(
            w.support().eq(self.ground.iter().copied()),
            "permutation must act on the whole ground set"
        );
        let key: Vec<u8> = self
            .ground
            .iter()
            .map(|&x| self.index_of(w.apply(x)) as u8)
            .collect();
        self.add_key(key, c);
    }

    fn add_key(&mut self, key: Vec<u8>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, w: &PartialPermutation) -> BigRational {
        let key: Vec<u8> = self
            .ground
            .iter()
            .map(|&x| self.index_of(w.apply(x)) as u8)
            .collect();
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    fn to_perm(&self, key: &[u8]) -> PartialPermutation {
        PartialPermutation::from_map(
            self.ground
                .iter()
                .zip(key)
                .map(|(&x, &i)| (x, self.ground[i as usize]))
                .collect(),
        )
        .expect("stored keys are permutations")
    }

    pub fn terms(&self) -> Vec<(PartialPermutation, BigRational)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(k, c)| (self.to_perm(k), c.clone()))
            .collect();
        out.sort();
        out
    }

    /// Sums of coefficients grouped by cycle type, together with the number
    /// of terms seen and whether the coefficient was constant on each type.
    pub fn cycle_type_buckets(&self) -> BTreeMap<Partition, BucketStats> {
        let mut out: BTreeMap<Partition, BucketStats> = BTreeMap::new();
        for (key, c) in &self.terms {
            let ty = dense_cycle_type(key);
            let stats = out.entry(ty).or_insert_with(|| BucketStats {
                value: c.clone(),
                members: 0,
                constant: true,
            });
            if stats.members > 0 && stats.value != *c {
                stats.constant = false;
            }
            stats.members += 1;
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.ground != other.ground {
            return Err(Error::AmbientMismatch {
                left: self.ground.len(),
                right: other.ground.len(),
            });
        }
        let left: Vec<(&Vec<u8>, &BigRational)> = self.terms.iter().collect();
        let chunk = (left.len() / 64).max(1);
        let chunks: Vec<&[(&Vec<u8>, &BigRational)]> = left.chunks(chunk).collect();
        let partials = par::map_collect(&chunks, |chunk| {
            let mut acc: HashMap<Vec<u8>, BigRational> = HashMap::new();
            let mut key = vec![0u8; self.ground.len()];
            for (a, ca) in chunk.iter() {
                for (b, cb) in &other.terms {
                    for i in 0..key.len() {
                        key[i] = a[b[i] as usize];
                    }
                    let prod = *ca * cb;
                    match acc.get_mut(&key) {
                        Some(v) => *v += prod,
                        None => {
                            acc.insert(key.clone(), prod);
                        }
                    }
                }
            }
            acc
        });
        let mut out = Self::zero(self.ground.clone());
        for partial in partials {
            for (k, v) in partial {
                out.add_key(k, v);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BucketStats {
    /// Coefficient of the first member seen (the common value when constant).
    pub value: BigRational,
    pub members: usize,
    pub constant: bool,
}

pub(crate) fn dense_cycle_type(img: &[u8]) -> Partition {
    let mut seen = vec![false; img.len()];
    let mut parts = Vec::new();
    for start in 0..img.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = img[x] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("cycle lengths are positive")
}

/// `dim Z(B_n) = Σ_k C(n,k) p(k)`.
pub fn center_dimension(n: usize) -> num_bigint::BigUint {
    (0..=n)
        .map(|k| binomial(n as u64, k as u64) * enumerate_partitions(k).len())
        .sum()
}

/// Counts pairs `(d, λ ⊢ |d|)` with `d ⊆ {1..n}` by explicit enumeration.
pub fn center_dimension_by_pairs(n: usize) -> usize {
    let ground: Vec<u32> = (1..=n as u32).collect();
    (0..=n)
        .map(|k| subsets_of_size(&ground, k).len() * enumerate_partitions(k).len())
        .sum()
}

/// Dimension of the centre of `B_n` computed as the common kernel of all
/// commutators with basis elements. Exponential; meant for `n ≤ 3`.
pub fn center_dimension_by_commutators(n: usize) -> usize {
    let basis = enumerate_all(n);
    let index: HashMap<&PartialPermutation, usize> = basis.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for b in &basis {
        // Row block for [·, b]: entry (k, i) is the coefficient of e_k in
        // e_i b - b e_i.
        let mut block = vec![vec![BigRational::zero(); basis.len()]; basis.len()];
        for (i, a) in basis.iter().enumerate() {
            block[index[&a.product(b)]][i] += rat(1);
            block[index[&b.product(a)]][i] -= rat(1);
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    basis.len() - rank(rows)
}

/// `dim A_n`: the number of partitions of size at most `n`.
pub fn invariant_dimension(n: usize) -> usize {
    (0..=n).map(|k| enumerate_partitions(k).len()).sum()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        let inv = pivot_row[col].recip();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (c, v) in row.iter_mut().enumerate().skip(col) {
                *v -= &factor * &pivot_row[c];
            }
        }
        rank += 1;
    }
    rank
}

/// Checks, for every `x ⊆ {1..n}`, that `b ↦ (φ_y(b))_{y ⊆ x}` vanishes on
/// the basis elements with support outside `x` and is injective on the span
/// of those with support inside `x`. Together these are exactly the
/// equivalence "φ_y(b) = 0 for all y ⊆ x ⇔ b_{d,w} = 0 for all d ⊆ x".
pub fn phi_separates_supports(n: usize) -> bool {
    let basis = enumerate_all(n);
    let ground: Vec<u32> = (1..=n as u32).collect();
    for k in 0..=n {
        for x in subsets_of_size(&ground, k) {
            let x: BTreeSet<u32> = x.into_iter().collect();
            let ys: Vec<BTreeSet<u32>> = (0..=k)
                .flat_map(|j| subsets_of_size(&x.iter().copied().collect::<Vec<_>>(), j))
                .map(|y| y.into_iter().collect())
                .collect();
            let images = |alpha: &PartialPermutation| -> Vec<GroupAlgebraElement> {
                let b = SemigroupAlgebraElement::basis(alpha.clone(), n).expect("in range");
                ys.iter().map(|y| b.phi(y)).collect()
            };
            let mut columns: Vec<Vec<BigRational>> = Vec::new();
            for alpha in &basis {
                let imgs = images(alpha);
                let inside = alpha.support().all(|p| x.contains(&p));
                if !inside {
                    if imgs.iter().any(|g| !g.is_zero()) {
                        return false;
                    }
                    continue;
                }
                // Flatten the images against the basis of ⊕_y ℚ[S_y].
                let mut col = Vec::new();
                for (y, img) in ys.iter().zip(&imgs) {
                    let pts: Vec<u32> = y.iter().copied().collect();
                    for ty in enumerate_partitions(pts.len()) {
                        for w in crate::partial_perm::perms_of_type(&pts, &ty) {
                            col.push(img.coefficient(&w));
                        }
                    }
                }
                columns.push(col);
            }
            let inside_count = columns.len();
            // Transpose: rank is invariant, so feed columns as rows.
            if rank(columns) != inside_count {
                return false;
            }
        }
    }
    true
}
