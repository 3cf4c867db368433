//! Compositions, partitions and permutations.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Finite sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `k` copies of `value`, as in `β^α`.
    pub fn repeated(value: usize, k: usize) -> Self {
        Self(vec![value; k])
    }

    pub fn prepend(&self, head: usize) -> Self {
        let mut v = vec![head];
        v.extend_from_slice(&self.0);
        Self(v)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Partition with weakly decreasing positive parts (trailing zeros stripped).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n` (decreasing).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Padded to length `n` and reversed, i.e. the increasing convention.
    pub fn increasing(&self, n: usize) -> Composition {
        let mut v = self.padded(n);
        v.reverse();
        Composition(v)
    }

    pub fn from_composition(c: &Composition) -> Self {
        Self::new(c.0.clone())
    }

    /// Multiplicity of each part size `1..=max`; index 0 is unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let max = self.part(0);
        let mut m = vec![0; max + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// Dominance `self ≥ other` (equal weights required, else `false`).
    pub fn dominates(&self, other: &Self) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.length() <= self.length() && (0..other.length()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn conjugate(&self) -> Self {
        let max = self.part(0);
        Self((1..=max).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `k`, in lexicographically increasing order, which refines dominance.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(k, k, &mut cur, &mut out);
    out.reverse();
    out
}

fn gen_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        gen_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of `k` with at most `n` parts, lex increasing.
pub fn partitions_with_length(k: usize, n: usize) -> Vec<Partition> {
    partitions_of(k).into_iter().filter(|p| p.length() <= n).collect()
}

/// Partitions of weight at most `d` with at most `n` parts, by weight then lex.
pub fn partitions_up_to(d: usize, n: usize) -> Vec<Partition> {
    (0..=d).flat_map(|k| partitions_with_length(k, n)).collect()
}

/// Weakly increasing sequences of length `n` with entries in `0..=max` and sum `≤ weight`.
pub fn increasing_compositions(n: usize, max_weight: usize) -> Vec<Composition> {
    partitions_up_to(max_weight, n).iter().map(|p| p.increasing(n)).collect()
}

/// All permutations of `0..n` (one-line notation, lex order) paired with their sign.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    lex_permute(n, &mut cur, &mut used, &mut out);
    out
}

fn lex_permute(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
    if cur.len() == n {
        out.push((cur.clone(), permutation_sign(cur)));
        return;
    }
    for k in 0..n {
        if !used[k] {
            used[k] = true;
            cur.push(k);
            lex_permute(n, cur, used, out);
            cur.pop();
            used[k] = false;
        }
    }
}

pub fn permutation_sign(p: &[usize]) -> i8 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Cartesian power `{0..=max}^n` in lexicographic order.
pub fn tuples(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn lex_refines_dominance() {
        for k in 0..8 {
            let ps = partitions_of(k);
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[..i] {
                    assert!(!b.dominates(a) || b == a, "{b} before {a}");
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(Partition::new(vec![1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(Partition::new(vec![2, 1]).z(), BigInt::from(2));
        assert_eq!(Partition::new(vec![2, 2]).z(), BigInt::from(8));
    }

    #[test]
    fn permutation_signs_match() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        for (p, s) in ps {
            assert_eq!(s, permutation_sign(&p));
        }
    }

    #[test]
    fn containment_and_conjugate() {
        let a = Partition::new(vec![2, 1]);
        assert!(a.contains(&Partition::new(vec![1, 1])));
        assert!(!a.contains(&Partition::new(vec![3])));
        assert_eq!(Partition::new(vec![3, 1]).conjugate(), Partition::new(vec![2, 1, 1]));
    }
}
