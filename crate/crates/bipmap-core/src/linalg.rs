//! Exact sparse elimination over ℚ.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Q;

pub type Row = BTreeMap<usize, Q>;

/// Row echelon form built one equation at a time. Pivots are the lowest
/// remaining column, so earlier columns are preferred and later dependent
/// columns end up free.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, (Row, Q)>,
    equations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vec<Q>,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
}

fn axpy(row: &mut Row, rhs: &mut Q, c: &Q, other: &Row, orhs: &Q) {
    for (j, v) in other {
        let e = row.entry(*j).or_insert_with(Q::zero);
        *e -= c * v;
        if e.is_zero() {
            row.remove(j);
        }
    }
    *rhs -= c * orhs;
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: BTreeMap::new(), equations: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn equations(&self) -> usize {
        self.equations
    }

    fn reduce(&self, mut row: Row, mut rhs: Q) -> (Row, Q) {
        let mut cursor = 0;
        loop {
            let next = row.range(cursor..).map(|(c, _)| *c).find(|c| self.pivots.contains_key(c));
            let Some(c) = next else { break };
            let coef = row[&c].clone();
            let (prow, prhs) = &self.pivots[&c];
            axpy(&mut row, &mut rhs, &coef, prow, prhs);
            cursor = c + 1;
        }
        (row, rhs)
    }

    /// Adds an equation; fails if it contradicts the earlier ones.
    pub fn push(&mut self, row: Row, rhs: Q) -> Result<()> {
        self.equations += 1;
        if let Some((&c, _)) = row.iter().next_back() {
            if c >= self.ncols {
                return Err(Error::Invalid(format!("column {} out of range", c)));
            }
        }
        let (row, rhs) = self.reduce(row, rhs);
        match row.iter().next() {
            None if rhs.is_zero() => Ok(()),
            None => Err(Error::Inconsistent(format!("equation {} reduces to 0 = {}", self.equations, rhs))),
            Some((&p, lead)) => {
                let inv = lead.recip();
                let row: Row = row.iter().map(|(j, v)| (*j, v * &inv)).collect();
                self.pivots.insert(p, (row, rhs * inv));
                Ok(())
            }
        }
    }

    /// Whether an equation already follows from the system.
    pub fn implies(&self, row: &Row, rhs: &Q) -> bool {
        let (r, q) = self.reduce(row.clone(), rhs.clone());
        r.is_empty() && q.is_zero()
    }

    /// Back substitution with every free variable set to zero.
    pub fn solve(&self) -> Solution {
        let mut x = vec![Q::zero(); self.ncols];
        for (&p, (row, rhs)) in self.pivots.iter().rev() {
            let mut v = rhs.clone();
            for (j, c) in row.range(p + 1..) {
                v -= c * &x[*j];
            }
            x[p] = v;
        }
        let pivots: Vec<usize> = self.pivots.keys().copied().collect();
        let free = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        Solution { x, pivots, free }
    }
}

pub fn solve(ncols: usize, rows: impl IntoIterator<Item = (Row, Q)>) -> Result<Solution> {
    let mut ech = Echelon::new(ncols);
    for (r, q) in rows {
        ech.push(r, q)?;
    }
    Ok(ech.solve())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qf, qi};

    fn row(pairs: &[(usize, i64)]) -> Row {
        pairs.iter().map(|(c, v)| (*c, qi(*v))).collect()
    }

    #[test]
    fn small_systems() {
        let s = solve(2, [(row(&[(0, 1), (1, 1)]), qi(3)), (row(&[(0, 1), (1, -1)]), qi(1))]).unwrap();
        assert_eq!(s.x, vec![qi(2), qi(1)]);
        let s = solve(3, [(row(&[(0, 2), (2, 1)]), qi(1))]).unwrap();
        assert_eq!(s.x, vec![qf(1, 2), qi(0), qi(0)]);
        assert_eq!(s.free, vec![1, 2]);
        let e = solve(1, [(row(&[(0, 1)]), qi(1)), (row(&[(0, 2)]), qi(3))]);
        assert!(matches!(e, Err(Error::Inconsistent(_))));
    }
}
