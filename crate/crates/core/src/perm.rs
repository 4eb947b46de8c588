//! Permutations of `{1, …, n}`.
//!
//! Products compose right to left: `a.compose(&b)` is "apply `b`, then `a`".
//! Ranks are lexicographic positions of the one-line word, computed through
//! the factorial number system (Lehmer code), so rank 0 is the identity and
//! rank `n! - 1` is the reversal.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based one-line notation `[σ(1), …, σ(n)]`.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in word {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a bijection of 1..={n}")));
            }
            images.push(v - 1);
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)`, 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidPermutation(format!("({i} {j}) in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Parses cycle notation such as `(14)`, `(1 4)(2,3)` or `()`; cycles
    /// multiply right to left. Undelimited digits are single-digit labels.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self> {
        let bad = || Error::InvalidPermutation(format!("cannot parse {s:?} as cycles in S_{n}"));
        let mut result = Self::identity(n);
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(bad)?;
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let body = &rest[1..body_end];
            let elems: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                body.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
            };
            cycles.push(elems);
            rest = rest[body_end + 1..].trim_start();
        }
        for cyc in cycles.iter().rev() {
            let mut seen = vec![false; n + 1];
            for &v in cyc {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(bad());
                }
            }
            let mut c = Self::identity(n);
            for (k, &v) in cyc.iter().enumerate() {
                c.images[v - 1] = cyc[(k + 1) % cyc.len()] - 1;
            }
            // cycles further left act later
            result = c.compose(&result);
        }
        Ok(result)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `(i j) ∘ self`: swaps the values `i` and `j` in the one-line word.
    pub fn left_transpose(&self, i: usize, j: usize) -> Permutation {
        let (a, b) = (i - 1, j - 1);
        let images = self
            .images
            .iter()
            .map(|&v| if v == a { b } else if v == b { a } else { v })
            .collect();
        Permutation { images }
    }

    /// Lexicographic rank in `0..n!`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for k in 0..n {
            let smaller_after = self.images[k + 1..].iter().filter(|&&v| v < self.images[k]).count();
            rank = rank * (n - k) + smaller_after;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Result<Self> {
        let total = factorial(n);
        if rank >= total {
            return Err(Error::IndexOutOfRange { index: rank, expected: format!("0..{total}") });
        }
        let mut digits = vec![0; n];
        for k in (0..n).rev() {
            let base = n - k;
            digits[k] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Permutation { images })
    }

    /// Adjacent-transposition indices `[a_1, …, a_m]` (1-based, `s_a = (a a+1)`)
    /// with `self = s_{a_1} ∘ s_{a_2} ∘ … ∘ s_{a_m}`, obtained by bubble-sorting
    /// the one-line word. Deterministic; `m` is the inversion count.
    pub fn adjacent_decomposition(&self) -> Vec<usize> {
        // Sorting swaps positions k, k+1, i.e. right-multiplies by s_{k+1}:
        // self ∘ s_{b_1} ∘ … ∘ s_{b_m} = id, so self = s_{b_m} ∘ … ∘ s_{b_1}.
        let mut word = self.images.clone();
        let mut swaps = Vec::new();
        let n = word.len();
        for pass in 0..n {
            for k in 0..n.saturating_sub(pass + 1) {
                if word[k] > word[k + 1] {
                    word.swap(k, k + 1);
                    swaps.push(k + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// Iterates all of `S_n` in lexicographic (rank) order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some(Self::identity(n));
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut w = cur.images.clone();
            if let Some(k) = (0..w.len().saturating_sub(1)).rev().find(|&k| w[k] < w[k + 1]) {
                let l = (k + 1..w.len()).rev().find(|&l| w[l] > w[k]).expect("successor exists");
                w.swap(k, l);
                w[k + 1..].reverse();
                next = Some(Permutation { images: w });
            }
            Some(cur)
        })
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", words.join(","))
    }
}
