//! Fillings of Young diagrams and their convolution.
//!
//! A filling places distinct positive integers in the boxes of a diagram;
//! reading each row as a cycle gives a partial permutation. The convolution
//! `S * T` lifts the product of partial permutations to fillings: every
//! partial permutation of type ρ has exactly `z_ρ` fillings over it, which is
//! why the structure constants in the `a_ρ = z_ρ A_ρ` basis count pairs of
//! fillings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::par;
use crate::partial_perm::{subsets_of_size, PartialPermutation};
use crate::partitions::Partition;

/// Rows in order; row lengths weakly decrease and all entries are distinct.
/// Two fillings are equal only if their row lists are equal, so the order
/// of rows of equal length matters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Filling {
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let text = || format!("{rows:?}");
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::MalformedFilling(text(), "empty row".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::MalformedFilling(
                text(),
                "row lengths must not increase".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &x in rows.iter().flatten() {
            if x == 0 || !seen.insert(x) {
                return Err(Error::MalformedFilling(
                    text(),
                    format!("entry {x} repeated or zero"),
                ));
            }
        }
        Ok(Filling { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("rows are nonempty")
    }

    pub fn support(&self) -> BTreeSet<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Entries read row by row, left to right.
    pub fn reading_order(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Each row `(r₁,…,r_k)` becomes the cycle `r₁ → r₂ → … → r_k → r₁`.
    pub fn to_partial_perm(&self) -> PartialPermutation {
        PartialPermutation::from_cycle_list(self.rows.iter().map(Vec::as_slice))
            .expect("filling entries are distinct")
    }

    /// The convolution `self * other`.
    ///
    /// Points of the union of supports are ordered by reading `self` and then
    /// the new entries of `other`. Each new row is the cycle of `w̃_S w̃_T`
    /// through the first unused point, written from that point; the rows are
    /// finally sorted by decreasing length, stably.
    pub fn convolve(&self, other: &Filling) -> Filling {
        let ws = self.to_partial_perm();
        let wt = other.to_partial_perm();
        let mut order: Vec<u32> = self.reading_order().collect();
        let mut used: BTreeSet<u32> = order.iter().copied().collect();
        for x in other.reading_order() {
            if used.insert(x) {
                order.push(x);
            }
        }
        let mut done = BTreeSet::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for &s in &order {
            if done.contains(&s) {
                continue;
            }
            let mut row = vec![s];
            done.insert(s);
            let mut x = ws.apply(wt.apply(s));
            while x != s {
                row.push(x);
                done.insert(x);
                x = ws.apply(wt.apply(x));
            }
            rows.push(row);
        }
        rows.sort_by_key(|r| std::cmp::Reverse(r.len()));
        Filling { rows }
    }
}

/// `R_ρ`: boxes numbered `1, 2, …, |ρ|` row by row.
pub fn canonical_filling(rho: &Partition) -> Filling {
    let mut next = 1u32;
    let rows = rho
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<u32> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    Filling { rows }
}

/// Every filling of shape `shape` whose entries lie in `{1..r}`.
pub fn fillings_of_shape(shape: &Partition, r: usize) -> Vec<Filling> {
    let k = shape.size();
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(k);
    let mut used = vec![false; r + 1];
    injective_sequences(k, r, &mut seq, &mut used, &mut |entries| {
        out.push(split_rows(shape, entries));
    });
    out
}

fn split_rows(shape: &Partition, entries: &[u32]) -> Filling {
    let mut rows = Vec::with_capacity(shape.length());
    let mut at = 0;
    for &len in shape.parts() {
        rows.push(entries[at..at + len as usize].to_vec());
        at += len as usize;
    }
    Filling { rows }
}

fn injective_sequences(k: usize, r: usize, seq: &mut Vec<u32>, used: &mut [bool], f: &mut dyn FnMut(&[u32])) {
    if seq.len() == k {
        f(seq);
        return;
    }
    for x in 1..=r {
        if used[x] {
            continue;
        }
        used[x] = true;
        seq.push(x as u32);
        injective_sequences(k, r, seq, used, f);
        seq.pop();
        used[x] = false;
    }
}

/// Every filling whose partial permutation is `alpha`: each cycle may start
/// at any of its points and cycles of equal length may come in any order.
pub fn fillings_over(alpha: &PartialPermutation) -> Vec<Filling> {
    let mut cycles = alpha.cycles();
    cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
    // Group consecutive cycles of equal length.
    let mut groups: Vec<Vec<Vec<u32>>> = Vec::new();
    for c in cycles {
        match groups.last_mut() {
            Some(g) if g[0].len() == c.len() => g.push(c),
            _ => groups.push(vec![c]),
        }
    }
    let mut out = vec![Vec::<Vec<u32>>::new()];
    for group in groups {
        let mut next = Vec::new();
        for arrangement in arrangements(&group) {
            for prefix in &out {
                let mut rows = prefix.clone();
                rows.extend(arrangement.iter().cloned());
                next.push(rows);
            }
        }
        out = next;
    }
    out.into_iter().map(|rows| Filling { rows }).collect()
}

/// Orderings of the cycles combined with every rotation of each.
fn arrangements(group: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let mut orders = Vec::new();
    let mut idx: Vec<usize> = (0..group.len()).collect();
    permute(&mut idx, 0, &mut orders);
    let mut out = Vec::new();
    for order in orders {
        let mut partial: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
        for &i in &order {
            let cycle = &group[i];
            let mut next = Vec::new();
            for rows in &partial {
                for shift in 0..cycle.len() {
                    let mut rotated = cycle[shift..].to_vec();
                    rotated.extend_from_slice(&cycle[..shift]);
                    let mut rows = rows.clone();
                    rows.push(rotated);
                    next.push(rows);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, out);
        idx.swap(k, i);
    }
}

/// `F_{σ,τ}^ρ`: pairs `(S, T)` of shapes σ and τ with `S * T = R_ρ`.
///
/// `S` runs over all fillings of shape σ inside `{1..|ρ|}`. The permutation
/// of `T` is then forced to be `w̃_S⁻¹ w_ρ`; its support must contain the
/// points missing from `S` and the moved points, and may add further fixed
/// points. Every filling over each admissible `(d_T, w_T)` is convolved and
/// compared with `R_ρ`.
pub fn enumerate_f(sigma: &Partition, tau: &Partition, rho: &Partition) -> Vec<(Filling, Filling)> {
    let r = rho.size();
    if r < sigma.size().max(tau.size()) || r > sigma.size() + tau.size() {
        return Vec::new();
    }
    let target = canonical_filling(rho);
    let w_rho = target.to_partial_perm();
    let ground: Vec<u32> = (1..=r as u32).collect();
    let candidates = fillings_of_shape(sigma, r);
    let found = par::map_collect(&candidates, |s| {
        let ws = s.to_partial_perm();
        let wt_full = ws
            .inverse()
            .extend_to(&ground.iter().copied().collect())
            .unwrap_or_else(|| unreachable!("S is supported in 1..=r"));
        let w2 = wt_full.product(&w_rho);
        let core: BTreeSet<u32> = ground
            .iter()
            .copied()
            .filter(|x| !ws.contains(*x) || w2.apply(*x) != *x)
            .collect();
        if core.len() > tau.size() {
            return Vec::new();
        }
        let free: Vec<u32> = ground.iter().copied().filter(|x| !core.contains(x)).collect();
        let mut hits = Vec::new();
        for extra in subsets_of_size(&free, tau.size() - core.len()) {
            let d2: BTreeSet<u32> = core.iter().copied().chain(extra).collect();
            let wt = PartialPermutation::from_map(d2.iter().map(|&x| (x, w2.apply(x))).collect())
                .expect("w2 fixes points outside the core");
            if wt.cycle_type() != *tau {
                continue;
            }
            for t in fillings_over(&wt) {
                if s.convolve(&t) == target {
                    hits.push((s.clone(), t));
                }
            }
        }
        hits
    });
    found.into_iter().flatten().collect()
}

/// Reference count by the full double loop over both shapes.
pub fn count_f_naive(sigma: &Partition, tau: &Partition, rho: &Partition) -> usize {
    let r = rho.size();
    let target = canonical_filling(rho);
    let lefts = fillings_of_shape(sigma, r);
    let rights = fillings_of_shape(tau, r);
    lefts
        .iter()
        .map(|s| rights.iter().filter(|t| s.convolve(t) == target).count())
        .sum()
}

/// `3,4,5,6,9;2,1,7`; the empty filling prints as the empty string.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling[{self}]")
    }
}

impl FromStr for Filling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Filling::empty());
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::MalformedFilling(s.to_string(), format!("bad entry {x:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::new(rows)
    }
}
