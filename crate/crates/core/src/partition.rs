//! Integer partitions used as cycle types and as power-sum indices.
//!
//! - [`Partition`]: weakly decreasing parts, with the ordering used everywhere
//!   for deterministic iteration (degree first, then reverse-lexicographic).
//! - [`partitions_of`]: all partitions of `n`, largest part first.
//! - [`Partition::z_and_sign`]: centralizer order `z_λ` and `sgn` character value.

use std::cmp::Ordering;
use std::fmt;

/// A partition of a nonnegative integer, stored as weakly decreasing parts.
///
/// Doubles as a cycle type: `m_k` parts equal to `k` means `m_k` cycles of
/// length `k`. The empty partition is the cycle type of the unique permutation
/// of zero letters and indexes the constant term of a symmetric series.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zeros are rejected.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// One part of size `k` (the index of the power sum `p_k`).
    pub fn single(k: usize) -> Self {
        assert!(k > 0);
        Partition { parts: vec![k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned (total degree as a power-sum index).
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Distinct part sizes with multiplicities, largest size first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Disjoint union of parts: the index law for `p_λ · p_μ = p_{λ ∪ μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Removes one part equal to `k`; `None` if there is none.
    pub fn remove_part(&self, k: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Scales every part by `d` (the index action of the Adams operation ψ^d).
    pub fn scale(&self, d: usize) -> Partition {
        assert!(d > 0);
        Partition { parts: self.parts.iter().map(|&p| p * d).collect() }
    }

    /// Appends `count` extra parts equal to `k` (used to extend a cycle type
    /// on markings by fixed or swapped gluing points).
    pub fn with_parts(&self, k: usize, count: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(k, count));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Centralizer order `z_λ = ∏_k k^{m_k} m_k!` and the sign character value
    /// `ε(λ) = (−1)^{n − ℓ(λ)}` of any permutation with this cycle type.
    pub fn z_and_sign(&self) -> (u128, i8) {
        let mut z: u128 = 1;
        for (size, count) in self.multiplicities() {
            for _ in 0..count {
                z *= size as u128;
            }
            for c in 1..=count {
                z *= c as u128;
            }
        }
        let sign = if (self.n() - self.len()).is_multiple_of(2) { 1 } else { -1 };
        (z, sign)
    }
}

/// Degree-major order: lower degree first, then reverse-lexicographic within a
/// degree, so partitions of 3 run `(3), (2,1), (1,1,1)`. This is the iteration
/// and serialization order for every series in the crate.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1,…,1)` last. `partitions_of(0)` is the singleton list of the empty
/// partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut cur = vec![n];
    loop {
        out.push(Partition { parts: cur.clone() });
        // Find the rightmost part larger than 1; everything after it is 1s.
        let Some(k) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = cur.len() - k - 1;
        let new_head = cur[k] - 1;
        // Redistribute cur[k] + ones as copies of new_head plus a remainder.
        let total = cur[k] + ones;
        cur.truncate(k);
        let mut rest = total;
        while rest > new_head {
            cur.push(new_head);
            rest -= new_head;
        }
        cur.push(rest);
    }
    out
}

/// Cycle type of a permutation given in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = perm[at];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_three_in_order() {
        let got: Vec<Vec<usize>> =
            partitions_of(3).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn partitions_of_zero_is_empty_partition() {
        let got = partitions_of(0);
        assert_eq!(got.len(), 1);
        assert!(got[0].is_empty());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(12).len(), 77);
        assert_eq!(partitions_of(15).len(), 176);
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got: Vec<Vec<usize>> =
            partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn z_and_sign_examples() {
        assert_eq!(Partition::new(vec![2, 1]).z_and_sign(), (2, -1));
        assert_eq!(Partition::new(vec![1, 1, 1]).z_and_sign(), (6, 1));
        assert_eq!(Partition::new(vec![3]).z_and_sign(), (3, 1));
    }

    #[test]
    fn z_sums_to_factorial() {
        // Σ_λ n!/z_λ counts the permutations of n letters.
        for n in 0..=9usize {
            let fact: u128 = (1..=n as u128).product();
            let total: u128 =
                partitions_of(n).iter().map(|p| fact / p.z_and_sign().0).sum();
            assert_eq!(total, fact.max(1));
        }
    }

    #[test]
    fn union_merges_sorted() {
        let a = Partition::new(vec![3, 1]);
        let b = Partition::new(vec![2, 1]);
        assert_eq!(a.union(&b).parts(), &[3, 2, 1, 1]);
    }

    #[test]
    fn order_is_degree_then_revlex() {
        let p31 = Partition::new(vec![3, 1]);
        let p22 = Partition::new(vec![2, 2]);
        let p4 = Partition::new(vec![4]);
        let p3 = Partition::new(vec![3]);
        assert!(p3 < p4, "lower degree first");
        assert!(p4 < p31 && p31 < p22);
    }

    #[test]
    fn cycle_type_of_product_of_cycles() {
        // (0 1 2)(3 4) in one-line notation.
        assert_eq!(cycle_type(&[1, 2, 0, 4, 3]).parts(), &[3, 2]);
    }
}
