use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n as u32])
        }
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    /// Cells `(i, j)`: column `i` and row `j`, both from 0, row 0 longest.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().enumerate().flat_map(|(j, &len)| (0..len).map(move |i| (i, j as u32)))
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        let mut k = 0;
        while k < self.0.len() {
            let part = self.0[k];
            let mult = self.0[k..].iter().take_while(|&&p| p == part).count();
            for m in 1..=mult {
                z *= BigInt::from(part) * BigInt::from(m);
            }
            k += mult;
        }
        z
    }

    /// Partitions obtained by adding one cell.
    pub fn upper_covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for j in 0..=self.0.len() {
            let cur = self.0.get(j).copied().unwrap_or(0);
            let above_ok = j == 0 || self.0[j - 1] > cur;
            if above_ok {
                let mut v = self.0.clone();
                if j == v.len() {
                    v.push(1);
                } else {
                    v[j] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }

    /// True when `self` is obtained from `nu` by adding a single cell.
    pub fn covers(&self, nu: &Partition) -> bool {
        nu.upper_covers().contains(self)
    }

    /// All partitions of `n`, largest first in lexicographic order:
    /// `(n), (n-1, 1), ..., (1^n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen(n as u32, n as u32, &mut cur, &mut out);
        out
    }
}

fn gen(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        gen(rem - p, p, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    /// Comma-separated parts, e.g. `4,3,1`; an empty string or `∅` is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=7).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(Partition::all(3), [p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn parsing() {
        assert_eq!(p("4,3,1").parts(), &[4, 3, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        assert!(p("").is_empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert_eq!(p("1,1").conjugate(), p("2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn z_values() {
        assert_eq!(p("1").z(), BigInt::from(1));
        assert_eq!(p("1,1").z(), BigInt::from(2));
        assert_eq!(p("2,1,1").z(), BigInt::from(4));
        assert_eq!(p("3,3").z(), BigInt::from(18));
    }

    #[test]
    fn covers() {
        assert_eq!(p("2,1").upper_covers(), [p("3,1"), p("2,2"), p("2,1,1")]);
        assert_eq!(Partition::empty().upper_covers(), [p("1")]);
        assert!(p("2,2").covers(&p("2,1")));
        assert!(!p("3").covers(&p("1,1")));
    }

    #[test]
    fn cells_of_431() {
        let cells: Vec<_> = p("4,3,1").cells().collect();
        assert_eq!(cells, [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (0, 2)]);
    }
}
