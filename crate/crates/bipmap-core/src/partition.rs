//! Integer partitions, stored as weakly decreasing part lists.

use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts `parts` descending; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn single(k: u32) -> Self {
        Partition(alloc::vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// m_k, by binary search on the sorted parts.
    pub fn multiplicity(&self, k: u32) -> usize {
        let lo = self.0.partition_point(|&p| p > k);
        let hi = self.0.partition_point(|&p| p >= k);
        hi - lo
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition(out)
    }

    pub fn with(&self, k: u32) -> Partition {
        let pos = self.0.partition_point(|&p| p > k);
        let mut v = self.0.clone();
        v.insert(pos, k);
        Partition(v)
    }

    /// Removes one copy of `k`, if present.
    pub fn without(&self, k: u32) -> Option<Partition> {
        let pos = self.0.partition_point(|&p| p > k);
        if pos < self.0.len() && self.0[pos] == k {
            let mut v = self.0.clone();
            v.remove(pos);
            Some(Partition(v))
        } else {
            None
        }
    }

    /// Distinct parts with multiplicities, descending.
    pub fn distinct(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn max_part_at_most(&self, k: u32) -> bool {
        self.0.first().is_none_or(|&p| p <= k)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Partitions with weight at most `n`, every part in `1..=max_part`.
pub fn partitions_up_to(n: u32, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=n {
        for p in partitions_of(w) {
            if p.max_part_at_most(max_part) {
                out.push(p);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn multiplicity_and_edits() {
        let p = Partition::new(vec![1, 3, 3, 2, 1, 1]);
        assert_eq!(p.parts(), &[3, 3, 2, 1, 1, 1]);
        assert_eq!(p.multiplicity(1), 3);
        assert_eq!(p.multiplicity(3), 2);
        assert_eq!(p.multiplicity(4), 0);
        assert_eq!(p.without(2).unwrap().parts(), &[3, 3, 1, 1, 1]);
        assert!(p.without(5).is_none());
        assert_eq!(p.with(2).multiplicity(2), 2);
        assert_eq!(p.weight(), 11);
    }

    #[test]
    fn counts() {
        let c: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
