//! Integer partitions, their statistics, and enumeration.
//!
//! Partitions are ordered canonically: first by size, ascending, and within a
//! fixed size in reverse-lexicographic order, so `(3) < (2,1) < (1,1,1)`.
//! Every listing and every sorted output in the crate uses this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numbers::factorial;

/// A weakly decreasing list of positive integers. The empty partition is a
/// first-class value.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts `parts` decreasingly; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Builds a partition from parts the caller guarantees to be positive.
    pub fn from_parts(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be positive")
    }

    /// `(1^k)`.
    pub fn ones(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// A single row `(k)`; empty when `k == 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// A partition is proper when it has no parts equal to 1.
    pub fn is_proper(&self) -> bool {
        self.multiplicity(1) == 0
    }

    /// `z_ρ = Π i^{m_i} m_i!`, the centralizer order of a permutation of type ρ.
    pub fn centralizer_size(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.grouped() {
            z *= BigUint::from(part).pow(mult as u32);
            z *= factorial(mult as u64);
        }
        z
    }

    /// `(part, multiplicity)` pairs in decreasing order of part.
    pub fn grouped(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `ρ ∪ (1^{n-|ρ|})`.
    pub fn pad(&self, n: usize) -> Result<Self> {
        let size = self.size();
        if n < size {
            return Err(Error::InvalidPadding { size, n });
        }
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, n - size));
        Ok(Partition(parts))
    }

    /// Drops all parts equal to 1.
    pub fn strip_ones(&self) -> Self {
        Partition(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Whether the diagram of `self` fits inside the diagram of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.length() <= outer.length() && self.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
    }
}

/// All partitions of `r`, in reverse-lexicographic order.
pub fn enumerate_partitions(r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(r as u32, r as u32, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All partitions of sizes `0..=max_size` in canonical order.
pub fn partitions_up_to(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(enumerate_partitions).collect()
}

/// Proper partitions (no unit parts) of sizes `0..=max_size`.
pub fn proper_partitions_up_to(max_size: usize) -> Vec<Partition> {
    partitions_up_to(max_size)
        .into_iter()
        .filter(Partition::is_proper)
        .collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts; the empty partition prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"3,2,2"`; the empty string (or `∅`) is the empty partition.
/// Parts must already be weakly decreasing.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let bad = || Error::MalformedPartition(s.to_string());
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<u32>>>()?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Ok(Partition(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent count: all weakly decreasing sequences built by brute force
    /// over compositions.
    fn brute_partition_count(r: usize) -> usize {
        fn compositions(r: usize) -> Vec<Vec<usize>> {
            if r == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=r {
                for mut rest in compositions(r - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        compositions(r)
            .into_iter()
            .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
            .count()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(p("3,1").multiplicity(1), 1);
        assert_eq!(Partition::empty().multiplicity(4), 0);
        assert_eq!(p("2,2,1").multiplicity(2), 2);
    }

    #[test]
    fn centralizers() {
        assert_eq!(p("2").centralizer_size(), BigUint::from(2u32));
        assert_eq!(p("2,2").centralizer_size(), BigUint::from(8u32));
        assert_eq!(Partition::ones(5).centralizer_size(), factorial(5));
        assert_eq!(Partition::empty().centralizer_size(), BigUint::one());
    }

    #[test]
    fn centralizer_matches_brute_force_in_s4() {
        // Count permutations of {0..3} commuting with (01)(23).
        let g = [1usize, 0, 3, 2];
        let mut count = 0;
        let mut perm = [0usize, 1, 2, 3];
        loop {
            let commutes = (0..4).all(|i| perm[g[i]] == g[perm[i]]);
            if commutes {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(BigUint::from(count as u32), p("2,2").centralizer_size());
    }

    fn next_permutation(a: &mut [usize]) -> bool {
        let Some(i) = (0..a.len().saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
            return false;
        };
        let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
        a.swap(i, j);
        a[i + 1..].reverse();
        true
    }

    #[test]
    fn padding_and_stripping() {
        assert_eq!(p("3").pad(5).unwrap(), p("3,1,1"));
        assert_eq!(Partition::empty().pad(3).unwrap(), p("1,1,1"));
        assert_eq!(p("2,2").pad(4).unwrap(), p("2,2"));
        assert_eq!(p("3,1").pad(3), Err(Error::InvalidPadding { size: 4, n: 3 }));
        assert_eq!(p("3,1,1").strip_ones(), p("3"));
        assert_eq!(p("1,1").strip_ones(), Partition::empty());
        assert_eq!(p("2,2").strip_ones(), p("2,2"));
    }

    #[test]
    fn unions() {
        assert_eq!(p("3").union(&p("2,1")), p("3,2,1"));
        assert_eq!(p("2").union(&p("2")), p("2,2"));
        assert_eq!(Partition::empty().union(&p("4,1")), p("4,1"));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(6).len(), 11);
        for r in 0..=10 {
            assert_eq!(enumerate_partitions(r).len(), brute_partition_count(r));
        }
    }

    #[test]
    fn enumeration_order_is_canonical() {
        let four: Vec<String> = enumerate_partitions(4).iter().map(|q| q.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let all = partitions_up_to(7);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_round_trip_and_errors() {
        for q in partitions_up_to(6) {
            assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p("3,1"));
    }

    #[test]
    fn centralizer_chain_identity() {
        // z_ρ / m_1! = z_{ρ̄} and z_{ρ̃} = z_ρ (n-r+m_1)! / m_1!
        for rho in partitions_up_to(8) {
            let m1 = rho.multiplicity(1) as u64;
            let z = rho.centralizer_size();
            assert_eq!(&z / factorial(m1), rho.strip_ones().centralizer_size());
            for n in rho.size()..=10 {
                let padded = rho.pad(n).unwrap();
                let extra = (n - rho.size()) as u64;
                assert_eq!(
                    padded.centralizer_size(),
                    &z * factorial(extra + m1) / factorial(m1)
                );
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..6, 0..6).prop_map(|v| Partition::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn pad_then_strip(rho in arb_partition(), extra in 0usize..5) {
            let n = rho.size() + extra;
            prop_assert_eq!(rho.pad(n).unwrap().strip_ones(), rho.strip_ones());
        }

        #[test]
        fn multiplicity_sums(rho in arb_partition()) {
            let total: usize = (1..=6).map(|k| k as usize * rho.multiplicity(k)).sum();
            let count: usize = (1..=6).map(|k| rho.multiplicity(k)).sum();
            prop_assert_eq!(total, rho.size());
            prop_assert_eq!(count, rho.length());
        }

        #[test]
        fn union_laws(a in arb_partition(), b in arb_partition(), c in arb_partition()) {
            prop_assert_eq!(a.union(&b), b.union(&a));
            prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
            prop_assert_eq!(a.union(&b).size(), a.size() + b.size());
        }
    }
}
