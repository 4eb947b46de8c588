//! Partitions, Young diagrams and standard Young tableaux.
//!
//! Rows and columns are 0-based internally; the content of the box in row
//! `r`, column `c` is `c - r`. Tableaux are compared in dictionary order:
//! read the entries row by row from the top, left to right, and the first
//! position where two tableaux disagree decides (larger entry, later
//! tableau). That order fixes the basis of every irrep matrix in [`crate::yor`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `λ = (λ₁ ≥ λ₂ ≥ … > 0)` of `n = Σ λ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; any other zero or an increase is an error.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// `(n)`, the one-row shape.
    pub fn row(n: usize) -> Self {
        Partition { parts: vec![n.max(1)] }
    }

    /// `(1^n)`, the one-column shape.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n.max(1)] }
    }

    /// `(n-1, 1)`; requires `n ≥ 2`.
    pub fn hook_n1(n: usize) -> Self {
        assert!(n >= 2, "(n-1,1) needs n >= 2");
        if n == 2 {
            Partition { parts: vec![1, 1] }
        } else {
            Partition { parts: vec![n - 1, 1] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Boxes `(row, col)` whose removal leaves a partition, top row first.
    pub fn removable_corners(&self) -> Vec<(usize, usize)> {
        let k = self.parts.len();
        (0..k)
            .filter(|&r| r + 1 == k || self.parts[r] > self.parts[r + 1])
            .map(|r| (r, self.parts[r] - 1))
            .collect()
    }

    /// All `λ'` with `λ' ↗ λ`, ordered by the row of the removed box (top first).
    ///
    /// Empty for `λ = (1)`.
    pub fn covers_below(&self) -> Vec<Partition> {
        if self.n() == 1 {
            return Vec::new();
        }
        self.removable_corners()
            .into_iter()
            .map(|(r, _)| {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                Partition::new(parts).expect("removing a corner keeps a partition")
            })
            .collect()
    }

    /// Σ over all boxes of `col - row`; equals `Σ_j [λ_j(λ_j-1)/2 - (j-1)λ_j]`.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(j, &l)| {
                let (j, l) = (j as i64, l as i64);
                l * (l - 1) / 2 - j * l
            })
            .sum()
    }

    /// Largest content over the removable corners.
    pub fn max_corner_content(&self) -> i64 {
        self.removable_corners()
            .into_iter()
            .map(|(r, c)| c as i64 - r as i64)
            .max()
            .expect("a nonempty partition has a corner")
    }

    /// `f^λ` via the hook length formula.
    pub fn f_dim(&self) -> usize {
        let conj = self.conjugate();
        let n = self.n();
        // n! / Π hooks, accumulated as a reduced fraction to stay in u128.
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for k in 2..=n as u128 {
            num *= k;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        for (r, &row_len) in self.parts.iter().enumerate() {
            for c in 0..row_len {
                let hook = (row_len - c - 1) + (conj.parts[c] - r - 1) + 1;
                den *= hook as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        debug_assert_eq!(den, 1);
        num as usize
    }

    /// The box holding `n` in every SYT is a corner, so SYT(λ) is the disjoint
    /// union over corners of SYT(λ - corner) with `n` placed at that corner.
    pub fn enumerate_syt(&self) -> Vec<StandardTableau> {
        let mut out = syt_unsorted(self);
        out.sort();
        out
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn syt_unsorted(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.n();
    if n == 1 {
        return vec![StandardTableau { shape: shape.clone(), rows: vec![vec![1]] }];
    }
    let mut out = Vec::new();
    for (r, _) in shape.removable_corners() {
        let mut parts = shape.parts.clone();
        parts[r] -= 1;
        let smaller = Partition::new(parts).expect("corner removal");
        for mut t in syt_unsorted(&smaller) {
            if r == t.rows.len() {
                t.rows.push(Vec::new());
            }
            t.rows[r].push(n);
            t.shape = shape.clone();
            out.push(t);
        }
    }
    out
}

impl fmt::Display for Partition {
    /// `(4,3^2,1)` style, using exponents for repeated parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,3^2,1`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::InvalidPartition(format!("empty part in {s:?}")));
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?} in {s:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad exponent in {tok:?}")))?;
            if base == 0 || exp == 0 {
                return Err(Error::InvalidPartition(format!("zero in {tok:?}")));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::BadParameter("partitions need n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    Ok(out)
}

/// A standard Young tableau, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates shape and the row/column increase conditions.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::BadParameter(format!("tableau entries must be 1..={n} once each")));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadParameter(format!("row {} not increasing", r + 1)));
            }
            if r > 0 && row.iter().enumerate().any(|(c, &v)| rows[r - 1][c] >= v) {
                return Err(Error::BadParameter(format!("column violation in row {}", r + 1)));
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// 0-based `(row, col)` of the box holding `value`.
    pub fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&v| v == value).map(|c| (r, c)))
    }

    /// `c^t_i`: column minus row of the box holding `i`.
    pub fn content(&self, i: usize) -> Result<i64> {
        let (r, c) = self.position(i).ok_or_else(|| Error::IndexOutOfRange {
            index: i,
            expected: format!("1..={}", self.n()),
        })?;
        Ok(c as i64 - r as i64)
    }

    /// Contents `c^t_1, …, c^t_n`.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = vec![0; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                out[v - 1] = c as i64 - r as i64;
            }
        }
        out
    }

    /// The tableau with `i` and `i+1` exchanged, when that is still standard.
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        let (ra, ca) = self.position(i)?;
        let (rb, cb) = self.position(i + 1)?;
        if ra == rb || ca == cb {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[ra][ca] = i + 1;
        rows[rb][cb] = i;
        Some(StandardTableau { shape: self.shape.clone(), rows })
    }

    /// Removes the box holding `n` (always a corner).
    pub fn restrict(&self) -> Option<StandardTableau> {
        let n = self.n();
        if n == 1 {
            return None;
        }
        let (r, _) = self.position(n)?;
        let mut rows = self.rows.clone();
        rows[r].pop();
        if rows[r].is_empty() {
            rows.pop();
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        Some(StandardTableau { shape, rows })
    }
}

impl Ord for StandardTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reading_word().cmp(&other.reading_word())
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StandardTableau {
    /// Rows separated by `/`, e.g. `124/3`; entries ≥ 10 are dot-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "." } else { "" };
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Partition counts from the pentagonal-number recurrence.
    fn partition_count(n: usize) -> usize {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as usize
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p("1")]);
        let four: Vec<String> = enumerate_partitions(4).unwrap().iter().map(|l| l.to_string()).collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"]);
        assert_eq!(enumerate_partitions(6).unwrap().len(), 11);
        for n in 1..=15 {
            assert_eq!(enumerate_partitions(n).unwrap().len(), partition_count(n), "n={n}");
        }
        assert!(enumerate_partitions(0).is_err());
    }

    #[test]
    fn parse_and_normalize() {
        assert_eq!(p("4,3^2,1").parts(), &[4, 3, 3, 1]);
        assert_eq!(p("(2,1^2)").parts(), &[2, 1, 1]);
        assert_eq!(p("2,1,1").to_string(), "(2,1^2)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn syt_counts() {
        assert_eq!(Partition::row(5).enumerate_syt().len(), 1);
        assert_eq!(p("2,2").enumerate_syt().len(), 2);
        assert_eq!(p("3,1").enumerate_syt().len(), 3);
        assert_eq!(Partition::row(4).f_dim(), 1);
        assert_eq!(p("2,1^2").f_dim(), 3);
        let total: usize = enumerate_partitions(4).unwrap().iter().map(|l| l.f_dim().pow(2)).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn dictionary_order_for_31() {
        let words: Vec<String> = p("3,1").enumerate_syt().iter().map(|t| t.to_string()).collect();
        assert_eq!(words, ["123/4", "124/3", "134/2"]);
    }

    #[test]
    fn hook_formula_matches_enumeration_and_sum_of_squares() {
        for n in 1..=8 {
            let mut total = 0usize;
            for lam in enumerate_partitions(n).unwrap() {
                let tabs = lam.enumerate_syt();
                assert_eq!(tabs.len(), lam.f_dim(), "{lam}");
                assert_eq!(lam.f_dim(), lam.conjugate().f_dim());
                let below: usize = lam.covers_below().iter().map(Partition::f_dim).sum();
                if n > 1 {
                    assert_eq!(below, lam.f_dim(), "branching count for {lam}");
                }
                // strictly increasing, so the order is total on distinct tableaux
                assert!(tabs.windows(2).all(|w| w[0] < w[1]));
                for t in &tabs {
                    assert!(StandardTableau::from_rows(t.rows().to_vec()).is_ok());
                    assert_eq!(t.contents().iter().sum::<i64>(), lam.content_sum());
                }
                total += lam.f_dim().pow(2);
            }
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn contents_of_421() {
        let t = StandardTableau::from_rows(vec![vec![1, 2, 3, 4], vec![5, 6], vec![7]]).unwrap();
        assert_eq!(t.contents(), vec![0, 1, 2, 3, -1, 0, -2]);
        assert_eq!(t.content(7).unwrap(), -2);
        let s = StandardTableau::from_rows(vec![vec![1, 3, 5, 7], vec![2, 4], vec![6]]).unwrap();
        assert_eq!(s.content(7).unwrap(), 3);
        assert_eq!(t.content(1).unwrap(), 0);
        assert!(t.content(8).is_err());
    }

    #[test]
    fn content_sums() {
        assert_eq!(Partition::row(6).content_sum(), 15);
        assert_eq!(p("4,2,1").content_sum(), 3);
        assert_eq!(Partition::column(6).content_sum(), -15);
        assert_eq!(p("2,2").content_sum(), 0);
    }

    #[test]
    fn covers_and_corners() {
        let below: Vec<String> = p("4,3,1").covers_below().iter().map(|l| l.to_string()).collect();
        assert_eq!(below, ["(3^2,1)", "(4,2,1)", "(4,3)"]);
        assert_eq!(Partition::row(5).covers_below(), vec![Partition::row(4)]);
        assert_eq!(p("2,2").covers_below(), vec![p("2,1")]);
        assert_eq!(p("3,1").max_corner_content(), 2);
        assert_eq!(p("2,2").max_corner_content(), 0);
        assert_eq!(Partition::column(5).max_corner_content(), -4);
    }

    #[test]
    fn malformed_tableaux_rejected() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2, 2]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![3, 4], vec![5, 6, 7]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 4], vec![2, 3]]).is_err());
    }

    #[test]
    fn restrict_and_swap() {
        let t = StandardTableau::from_rows(vec![vec![1, 2, 4], vec![3]]).unwrap();
        assert_eq!(t.restrict().unwrap().to_string(), "12/3");
        assert_eq!(t.swap_adjacent(3).unwrap().to_string(), "123/4");
        assert!(t.swap_adjacent(1).is_none());
    }
}
