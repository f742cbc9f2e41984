//! Exhaustive enumeration of transitive permutation pairs.
//!
//! A pair (w, b) of permutations of [1..n] is a labelled bipartite map with n
//! edges: cycles of w and b are the white and black vertices, cycles of the
//! product w∘b are the faces.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::factorial;

pub const MAX_N: usize = 8;
pub const GUARD_N: usize = 7;

pub type Perm = Vec<u8>;

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Perm = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn cycle_type(p: &[u8]) -> Partition {
    let mut seen = 0u32;
    let mut parts = Vec::new();
    for i in 0..p.len() {
        if seen & (1 << i) != 0 {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while seen & (1 << j) == 0 {
            seen |= 1 << j;
            j = p[j] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

pub fn cycle_count(p: &[u8]) -> usize {
    cycle_type(p).len()
}

fn cycle_len_of(p: &[u8], start: usize) -> u32 {
    let mut len = 1;
    let mut j = p[start] as usize;
    while j != start {
        j = p[j] as usize;
        len += 1;
    }
    len
}

/// Composition (w∘b)(i) = w(b(i)).
pub fn compose(w: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&i| w[i as usize]).collect()
}

/// Whether the group generated by `w` and `b` acts transitively.
pub fn transitive(w: &[u8], b: &[u8]) -> bool {
    let n = w.len();
    let mut parent: [u8; MAX_N] = [0, 1, 2, 3, 4, 5, 6, 7];
    fn find(parent: &mut [u8; MAX_N], mut x: usize) -> usize {
        while parent[x] as usize != x {
            parent[x] = parent[parent[x] as usize];
            x = parent[x] as usize;
        }
        x
    }
    let mut comps = n;
    for i in 0..n {
        for j in [w[i] as usize, b[i] as usize] {
            let (a, c) = (find(&mut parent, i), find(&mut parent, j));
            if a != c {
                parent[a] = c as u8;
                comps -= 1;
            }
        }
    }
    comps == 1
}

/// Genus from Euler's formula: v - e + f = 2 - 2g with v = c(w)+c(b), e = n,
/// f = c(w∘b).
pub fn genus_of(w: &[u8], b: &[u8]) -> Result<u32> {
    if w.len() != b.len() {
        return Err(Error::Invalid("permutations on different ground sets".into()));
    }
    let n = w.len() as i64;
    let chi = (cycle_count(w) + cycle_count(b) + cycle_count(&compose(w, b))) as i64;
    let twice = n + 2 - chi;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Structural("Euler characteristic has the wrong parity".into()));
    }
    Ok((twice / 2) as u32)
}

/// Marked-element totals for one (g, mu) class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Marked {
    pub vertex: u64,
    pub face: u64,
    pub edge: u64,
}

/// Raw census accumulators. Merging is commutative, so any partition of the
/// outer loop gives the same result.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusData {
    pub n: usize,
    /// (g, face type) -> labelled count
    pub labelled: BTreeMap<(u32, Partition), u64>,
    /// (g, length of the face through label 1, other faces) -> labelled count
    pub rooted_raw: BTreeMap<(u32, u32, Partition), u64>,
    pub marked: BTreeMap<(u32, Partition), Marked>,
}

impl CensusData {
    pub fn merge(&mut self, other: CensusData) {
        for (k, v) in other.labelled {
            *self.labelled.entry(k).or_default() += v;
        }
        for (k, v) in other.rooted_raw {
            *self.rooted_raw.entry(k).or_default() += v;
        }
        for (k, v) in other.marked {
            let e = self.marked.entry(k).or_default();
            e.vertex += v.vertex;
            e.face += v.face;
            e.edge += v.edge;
        }
    }

    pub fn total(&self) -> u64 {
        self.labelled.values().sum()
    }

    /// Rooted counts b_g(k, mu): labelled counts divided by (n-1)!.
    pub fn rooted(&self) -> Result<BTreeMap<(u32, u32, Partition), u64>> {
        let f = factorial(self.n as u64 - 1);
        let f: u64 = f.try_into().map_err(|_| Error::Invalid("census size too large".into()))?;
        let mut out = BTreeMap::new();
        for (k, &v) in &self.rooted_raw {
            if v % f != 0 {
                return Err(Error::Structural("rooted count not divisible by (n-1)!".into()));
            }
            out.insert(k.clone(), v / f);
        }
        Ok(out)
    }

    pub fn labelled_count(&self, g: u32, mu: &[u32]) -> u64 {
        self.labelled.get(&(g, Partition::new(mu.to_vec()))).copied().unwrap_or(0)
    }
}

pub fn check_size(n: usize, allow_large: bool) -> Result<()> {
    let limit = if allow_large { MAX_N } else { GUARD_N };
    if n == 0 || n > limit {
        return Err(Error::CensusRange(n));
    }
    Ok(())
}

/// Census over the pairs whose first permutation has lexicographic rank in
/// `outer`. `perms` must be `all_perms(n)`.
pub fn census_range(n: usize, perms: &[Perm], outer: Range<usize>) -> CensusData {
    let counts: Vec<usize> = perms.iter().map(|p| cycle_count(p)).collect();
    let mut data = CensusData { n, ..Default::default() };
    let mut local: BTreeMap<(u32, Partition, u32, Partition), u64> = BTreeMap::new();
    let mut prod = [0u8; MAX_N];
    for wi in outer {
        let w = &perms[wi];
        for (bi, b) in perms.iter().enumerate() {
            if !transitive(w, b) {
                continue;
            }
            for i in 0..n {
                prod[i] = w[b[i] as usize];
            }
            let p = &prod[..n];
            let faces = cycle_type(p);
            let verts = counts[wi] + counts[bi];
            let twice = n + 2 - verts - faces.len();
            let g = (twice / 2) as u32;
            debug_assert!(twice.is_multiple_of(2));
            let k = cycle_len_of(p, 0);
            let rest = faces.without(k).unwrap();
            let m = data.marked.entry((g, faces.clone())).or_default();
            m.vertex += verts as u64;
            m.face += faces.len() as u64;
            m.edge += n as u64;
            *local.entry((g, faces, k, rest)).or_default() += 1;
        }
    }
    for ((g, faces, k, rest), v) in local {
        *data.labelled.entry((g, faces)).or_default() += v;
        *data.rooted_raw.entry((g, k, rest)).or_default() += v;
    }
    data
}

/// Full sequential census of size `n`.
pub fn census(n: usize, allow_large: bool) -> Result<CensusData> {
    check_size(n, allow_large)?;
    let perms = all_perms(n);
    Ok(census_range(n, &perms, 0..perms.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn genus_examples() {
        assert_eq!(genus_of(&[0], &[0]).unwrap(), 0);
        assert_eq!(genus_of(&[1, 2, 0], &[1, 2, 0]).unwrap(), 1);
        assert_eq!(genus_of(&[1, 0], &[1, 0]).unwrap(), 0);
    }

    #[test]
    fn perm_enumeration() {
        let p = all_perms(4);
        assert_eq!(p.len(), 24);
        assert_eq!(p[0], vec![0, 1, 2, 3]);
        assert_eq!(p[23], vec![3, 2, 1, 0]);
        assert!(p.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_census() {
        let c1 = census(1, false).unwrap();
        assert_eq!(c1.labelled.len(), 1);
        assert_eq!(c1.labelled_count(0, &[1]), 1);
        let c2 = census(2, false).unwrap();
        assert_eq!(c2.labelled_count(0, &[2]), 2);
        assert_eq!(c2.labelled_count(0, &[1, 1]), 1);
        assert_eq!(c2.total(), 3);
        let c3 = census(3, false).unwrap();
        assert_eq!(c3.labelled_count(1, &[3]), 2);
    }

    #[test]
    fn rooted_small() {
        let r1 = census(1, false).unwrap().rooted().unwrap();
        assert_eq!(r1[&(0, 1, Partition::empty())], 1);
        let r2 = census(2, false).unwrap().rooted().unwrap();
        assert_eq!(r2[&(0, 2, Partition::empty())], 2);
        assert_eq!(r2[&(0, 1, Partition::single(1))], 1);
        let r3 = census(3, false).unwrap().rooted().unwrap();
        assert_eq!(r3[&(1, 3, Partition::empty())], 1);
    }

    #[test]
    fn guard() {
        assert_eq!(census(8, false).unwrap_err(), Error::CensusRange(8));
        assert!(check_size(8, true).is_ok());
        assert!(check_size(0, true).is_err());
    }

    #[test]
    fn split_merge_is_deterministic() {
        let perms = all_perms(4);
        let whole = census_range(4, &perms, 0..24);
        let mut parts = census_range(4, &perms, 10..24);
        parts.merge(census_range(4, &perms, 0..10));
        assert_eq!(whole, parts);
    }
}
