//! The semigroup of partial permutations.
//!
//! A partial permutation is a finite support set together with a bijection
//! of the support onto itself. Two of them multiply by uniting the supports
//! and composing the identical extensions; the right factor acts first,
//! `(a·b)(x) = a(b(x))`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PartialPermutation {
    // point -> image; the key set is the support.
    map: BTreeMap<u32, u32>,
}

impl PartialPermutation {
    /// The unit `(∅, e₀)`.
    pub fn unit() -> Self {
        Self::default()
    }

    /// The identity on the given support.
    pub fn identity<I: IntoIterator<Item = u32>>(support: I) -> Self {
        PartialPermutation {
            map: support.into_iter().map(|x| (x, x)).collect(),
        }
    }

    /// Builds from an explicit `point -> image` table, checking that it is a
    /// bijection of its key set onto itself and that all points are positive.
    pub fn from_map(map: BTreeMap<u32, u32>) -> Result<Self> {
        let images: BTreeSet<u32> = map.values().copied().collect();
        let keys: BTreeSet<u32> = map.keys().copied().collect();
        if images != keys || keys.contains(&0) {
            return Err(Error::MalformedPartialPerm(
                format!("{map:?}"),
                "not a bijection of positive points onto its support".into(),
            ));
        }
        Ok(PartialPermutation { map })
    }

    /// Support given explicitly; cycles list the moved points (fixed points
    /// may be listed as singleton cycles or omitted).
    pub fn from_cycles<I, C>(support: I, cycles: C) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
        C: IntoIterator,
        C::Item: AsRef<[u32]>,
    {
        let mut map: BTreeMap<u32, u32> = support.into_iter().map(|x| (x, x)).collect();
        let mut seen = BTreeSet::new();
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if !seen.insert(x) || !map.contains_key(&x) {
                    return Err(Error::MalformedPartialPerm(
                        format!("{cycle:?}"),
                        format!("point {x} repeated or outside the support"),
                    ));
                }
                map.insert(x, cycle[(i + 1) % cycle.len()]);
            }
        }
        Ok(PartialPermutation { map })
    }

    /// Support is the union of the cycles' points.
    pub fn from_cycle_list<C>(cycles: C) -> Result<Self>
    where
        C: IntoIterator + Clone,
        C::Item: AsRef<[u32]>,
    {
        let support: Vec<u32> = cycles
            .clone()
            .into_iter()
            .flat_map(|c| c.as_ref().to_vec())
            .collect();
        Self::from_cycles(support, cycles)
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.map.keys().copied()
    }

    pub fn support_set(&self) -> BTreeSet<u32> {
        self.map.keys().copied().collect()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.map.contains_key(&x)
    }

    /// Filtration degree: the size of the support.
    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of `x` under the identical extension `w̃`.
    pub fn apply(&self, x: u32) -> u32 {
        self.map.get(&x).copied().unwrap_or(x)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.map.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_point(&self) -> u32 {
        self.map.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }

    /// `(d₁ ∪ d₂, w̃₁ w̃₂)`, applying `other` first.
    pub fn product(&self, other: &PartialPermutation) -> PartialPermutation {
        let mut map = BTreeMap::new();
        for x in self.support().chain(other.support()) {
            map.insert(x, self.apply(other.apply(x)));
        }
        PartialPermutation { map }
    }

    /// Inverse bijection on the same support.
    pub fn inverse(&self) -> PartialPermutation {
        PartialPermutation {
            map: self.map.iter().map(|(&k, &v)| (v, k)).collect(),
        }
    }

    /// Cycles, each starting at its smallest point, ordered by smallest
    /// point; fixed points appear as singletons.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.map.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.map[&start];
            while x != start {
                cycle.push(x);
                seen.insert(x);
                x = self.map[&x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
            .expect("cycle lengths are positive")
    }

    /// Moved points of `w`.
    pub fn moved_points(&self) -> BTreeSet<u32> {
        self.map.iter().filter(|(k, v)| k != v).map(|(&k, _)| k).collect()
    }

    /// Restriction to the points in `x` of the identical extension; `None`
    /// unless the support is contained in `x`.
    pub fn extend_to(&self, x: &BTreeSet<u32>) -> Option<PartialPermutation> {
        if !self.map.keys().all(|k| x.contains(k)) {
            return None;
        }
        Some(PartialPermutation {
            map: x.iter().map(|&p| (p, self.apply(p))).collect(),
        })
    }

    /// `(v d, v w v⁻¹)` for a permutation `v` of `{1..n}`.
    pub fn conjugate(&self, v: &PartialPermutation) -> Result<PartialPermutation> {
        let n = v.degree();
        if v.map.keys().copied().ne(1..=n as u32) {
            return Err(Error::MalformedPartialPerm(
                v.to_string(),
                format!("conjugating element must permute 1..={n}"),
            ));
        }
        if let Some(x) = self.support().find(|&x| x == 0 || x as usize > n) {
            return Err(Error::PointOutOfRange { point: x, n });
        }
        Ok(PartialPermutation {
            map: self
                .map
                .iter()
                .map(|(&x, &wx)| (v.apply(x), v.apply(wx)))
                .collect(),
        })
    }

    /// Keeps the element if its support lies in `{1..m}`.
    pub fn within(&self, m: usize) -> bool {
        self.max_point() as usize <= m
    }

    fn order_key(&self) -> (usize, Vec<u32>, Vec<Vec<u32>>) {
        (self.degree(), self.support().collect(), self.cycles())
    }
}

/// `(d_ρ, w_ρ)`: support `{1..|ρ|}` with consecutive cycles.
pub fn canonical_rep(rho: &Partition) -> PartialPermutation {
    let mut map = BTreeMap::new();
    let mut start = 1u32;
    for &part in rho.parts() {
        for i in 0..part {
            map.insert(start + i, start + (i + 1) % part);
        }
        start += part;
    }
    PartialPermutation { map }
}

/// Calls `f` once for every permutation of `0..k` with cycle type `ty`
/// (`ty` must be a partition of `k`), passing the image table.
pub(crate) fn for_each_of_type(k: usize, ty: &Partition, f: &mut dyn FnMut(&[u8])) {
    debug_assert_eq!(ty.size(), k);
    let mut remaining: Vec<(u32, usize)> = ty.grouped();
    let mut img = vec![u8::MAX; k];
    let mut used = vec![false; k];
    place_cycles(&mut img, &mut used, &mut remaining, f);
}

fn place_cycles(img: &mut [u8], used: &mut [bool], remaining: &mut [(u32, usize)], f: &mut dyn FnMut(&[u8])) {
    let Some(start) = used.iter().position(|&u| !u) else {
        f(img);
        return;
    };
    for slot in 0..remaining.len() {
        if remaining[slot].1 == 0 {
            continue;
        }
        let len = remaining[slot].0 as usize;
        remaining[slot].1 -= 1;
        used[start] = true;
        let mut cycle = vec![start];
        extend_cycle(img, used, remaining, f, &mut cycle, len);
        used[start] = false;
        remaining[slot].1 += 1;
    }
}

fn extend_cycle(
    img: &mut [u8],
    used: &mut [bool],
    remaining: &mut [(u32, usize)],
    f: &mut dyn FnMut(&[u8]),
    cycle: &mut Vec<usize>,
    len: usize,
) {
    if cycle.len() == len {
        for i in 0..len {
            img[cycle[i]] = cycle[(i + 1) % len] as u8;
        }
        place_cycles(img, used, remaining, f);
        return;
    }
    // Later cycle points may be any unused index above the cycle's start.
    for next in cycle[0] + 1..used.len() {
        if used[next] {
            continue;
        }
        used[next] = true;
        cycle.push(next);
        extend_cycle(img, used, remaining, f, cycle, len);
        cycle.pop();
        used[next] = false;
    }
}

/// All permutations of `points` of cycle type `ty`, as partial permutations
/// supported on `points`.
pub fn perms_of_type(points: &[u32], ty: &Partition) -> Vec<PartialPermutation> {
    if ty.size() != points.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for_each_of_type(points.len(), ty, &mut |img| {
        out.push(PartialPermutation {
            map: points
                .iter()
                .zip(img)
                .map(|(&x, &i)| (x, points[i as usize]))
                .collect(),
        });
    });
    out
}

/// `k`-element subsets of `points`, lexicographic.
pub fn subsets_of_size(points: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(points: &[u32], k: usize, from: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let need = k - current.len();
        for i in from..=points.len().saturating_sub(need) {
            if i >= points.len() {
                break;
            }
            current.push(points[i]);
            go(points, k, i + 1, current, out);
            current.pop();
        }
    }
    go(points, k, 0, &mut current, &mut out);
    out
}

/// The conjugacy class `A_{ρ;n}`: every `(d, w)` with `d ⊆ {1..n}`,
/// `|d| = |ρ|` and `w` of cycle type ρ. Empty when `|ρ| > n`.
pub fn enumerate_class(rho: &Partition, n: usize) -> impl Iterator<Item = PartialPermutation> {
    let ground: Vec<u32> = (1..=n as u32).collect();
    let r = rho.size();
    let subsets = if r > n {
        Vec::new()
    } else {
        subsets_of_size(&ground, r)
    };
    let rho = rho.clone();
    subsets.into_iter().flat_map(move |d| perms_of_type(&d, &rho))
}

/// Every partial permutation with support inside `{1..n}`.
pub fn enumerate_all(n: usize) -> Vec<PartialPermutation> {
    let mut out = Vec::new();
    for r in 0..=n {
        for rho in crate::partitions::enumerate_partitions(r) {
            out.extend(enumerate_class(&rho, n));
        }
    }
    out
}

impl Ord for PartialPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for PartialPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{1,3,5}:(1,3)(5)`; the unit prints as `{}:`.
impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support: Vec<String> = self.support().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}:", support.join(","))?;
        for cycle in self.cycles() {
            let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartialPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::MalformedPartialPerm(s.to_string(), why.to_string());
        let (support, cycles) = s.trim().split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let support = support
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("support must be braced"))?;
        let parse_list = |t: &str| -> Result<Vec<u32>> {
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad("bad point")))
                .collect()
        };
        let support = parse_list(support)?;
        if support.iter().collect::<BTreeSet<_>>().len() != support.len() {
            return Err(bad("repeated support point"));
        }
        let mut cycle_lists = Vec::new();
        let mut rest = cycles.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let (inner, tail) = body.split_once(')').ok_or_else(|| bad("unclosed cycle"))?;
            cycle_lists.push(parse_list(inner)?);
            rest = tail.trim_start();
        }
        Self::from_cycles(support, cycle_lists)
    }
}
