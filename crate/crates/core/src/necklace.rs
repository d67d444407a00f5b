//! Necklace strata: cycles of rational curves glued end to end, each bead
//! carrying a block of the markings, taken up to rotation or up to rotation
//! and reflection.
//!
//! Two independent computations of the same sign-character multiplicity live
//! here:
//!
//! - the series pipeline: a bead with `n` markings and an oriented pair of
//!   gluing points is the coefficient of the twice-differentiated
//!   configuration series, and averaging over rotations is plethysm with the
//!   cycle-index series. Reflections add a correction assembled from the
//!   glue-swap trace series `S` and the paired-bead series `P = ψ_2(bead)`,
//!   namely `(2S + S^2 + P) / (4 (1 - P))`.
//! - [`strata_alternating`]: a direct Burnside sum over explicit ordered
//!   block decompositions, canonical permutations, and slot symmetries, with
//!   trace factors assembled from the configuration character tables and an
//!   Adams twist per slot-cycle length. No plethysm, no generating series.
//!
//! Agreement of the two is one of the headline checks of the crate.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cache;
use crate::error::{Error, Result};
use crate::genus_zero::{configuration_character, configuration_series, CycleTypeChar};
use crate::lpoly::{LPolynomial, RatPoly};
use crate::partition::{partitions_of, Partition};
use crate::series::{CyclicScale, SymSeries};

/// Which slot symmetries are quotiented out: rotations only, or the full
/// dihedral action including reflections (which also swap glue orientation).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NecklaceSymmetry {
    Cyclic,
    Dihedral,
}

impl fmt::Display for NecklaceSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NecklaceSymmetry::Cyclic => write!(f, "cyclic"),
            NecklaceSymmetry::Dihedral => write!(f, "dihedral"),
        }
    }
}

impl FromStr for NecklaceSymmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(NecklaceSymmetry::Cyclic),
            "dihedral" => Ok(NecklaceSymmetry::Dihedral),
            other => Err(Error::InvalidArgument(format!(
                "unknown symmetry {other:?}, expected \"cyclic\" or \"dihedral\""
            ))),
        }
    }
}

fn configuration_series_cached(truncation: usize) -> SymSeries {
    cache::CONFIGURATION.get_or(truncation, || {
        configuration_series(truncation).expect("configuration series is defined for every truncation")
    })
}

/// Character series of a single bead: a rational curve with an oriented pair
/// of gluing points plus `n` marked points, `n >= 1`. Obtained from the
/// configuration series by stripping two fixed markings.
pub fn bead_series(truncation: usize) -> SymSeries {
    configuration_series_cached(truncation + 2).skew_p(1).skew_p(1)
}

/// Trace of the glue-swap involution on beads: the two gluing points form a
/// 2-cycle instead of two fixed points.
pub fn bead_swap_series(truncation: usize) -> SymSeries {
    let two = BigRational::from_integer(BigInt::from(2));
    configuration_series_cached(truncation + 2).skew_p(2).scale(&two)
}

/// Rotation classes of necklaces: cycle-index series composed with beads.
pub fn cyclic_necklace_series(truncation: usize) -> SymSeries {
    cache::CYCLIC.get_or(truncation, || {
        SymSeries::cyclic_index_series(CyclicScale::Full, truncation)
            .plethysm(&bead_series(truncation))
            .expect("bead series has no constant term")
    })
}

/// The reflection average `(2S + S^2 + P) / (4 (1 - P))`, where `S` is the
/// glue-swap trace series and `P = ψ_2(bead)`. Odd necklaces contribute the
/// `S` term (one slot on the axis), even ones the `S^2` (two slots on the
/// axis) and `P` (axis through edges) terms, each with a geometric tail of
/// reflected slot pairs.
pub fn reflection_average_series(truncation: usize) -> SymSeries {
    let s = bead_swap_series(truncation);
    let p = bead_series(truncation).adams(2);
    let two = BigRational::from_integer(BigInt::from(2));
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let numerator = s.scale(&two).add(&s.mul(&s)).add(&p);
    let tail = SymSeries::one(truncation).sub(&p).inverse().expect("1 - P has unit constant term");
    numerator.mul(&tail).scale(&quarter)
}

/// Dihedral classes of necklaces: half the rotation average plus the
/// reflection average. Fails if any irreducible multiplicity up to the
/// truncation is non-integral, which would mean the assembled series is not
/// an honest virtual character.
pub fn dihedral_necklace_series(truncation: usize) -> Result<SymSeries> {
    if let Some(hit) = cache::DIHEDRAL.get(truncation) {
        return Ok(hit);
    }
    let half = SymSeries::cyclic_index_series(CyclicScale::Half, truncation)
        .plethysm(&bead_series(truncation))
        .expect("bead series has no constant term");
    let series = half.add(&reflection_average_series(truncation));
    for n in 1..=truncation {
        for mu in partitions_of(n) {
            let pairing = series.h_pairing(&mu);
            if !pairing.is_integral() {
                return Err(Error::NonIntegral {
                    context: format!(
                        "dihedral necklace multiplicity at degree {n}, h-pairing with {:?}",
                        mu.parts()
                    ),
                    value: pairing.to_string(),
                });
            }
        }
    }
    cache::DIHEDRAL.insert(truncation, series.clone());
    Ok(series)
}

/// Sign-character multiplicity of the degree-`n` part of the chosen necklace
/// series, computed at the given truncation.
pub fn necklace_alternating(
    symmetry: NecklaceSymmetry,
    n: usize,
    truncation: usize,
) -> Result<LPolynomial> {
    if n == 0 || n > truncation {
        return Err(Error::InvalidArgument(format!(
            "degree {n} out of range for truncation {truncation}"
        )));
    }
    match symmetry {
        NecklaceSymmetry::Cyclic => cyclic_necklace_series(truncation).alternating_multiplicity(n),
        NecklaceSymmetry::Dihedral => {
            dihedral_necklace_series(truncation)?.alternating_multiplicity(n)
        }
    }
}

/// An ordered decomposition of the markings `1..=n` into the nonempty blocks
/// carried by the slots of a necklace, listed in cyclic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct NecklaceStratum {
    blocks: Vec<Vec<usize>>,
}

impl NecklaceStratum {
    /// Validates that the blocks are nonempty, disjoint, and cover `1..=n`.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument("a necklace needs at least one slot".into()));
        }
        let mut blocks: Vec<Vec<usize>> = blocks;
        let mut all: Vec<usize> = Vec::new();
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block in necklace stratum".into()));
            }
            b.sort_unstable();
            all.extend_from_slice(b);
        }
        let n = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != n || all.first() != Some(&1) || all.last() != Some(&n) {
            return Err(Error::InvalidArgument(
                "necklace blocks must partition the markings 1..=n".into(),
            ));
        }
        Ok(NecklaceStratum { blocks })
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn slots(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Rotates the slot labels: slot `i` of the result is slot `i + j` of
    /// `self`, indices mod the slot count.
    pub fn rotated(&self, j: usize) -> Self {
        let nn = self.blocks.len();
        let blocks = (0..nn).map(|i| self.blocks[(i + j) % nn].clone()).collect();
        NecklaceStratum { blocks }
    }

    /// The reflection fixing slot 0: slot `i` maps to slot `-i` mod the count.
    pub fn reflected(&self) -> Self {
        let nn = self.blocks.len();
        let blocks = (0..nn).map(|i| self.blocks[(nn - i) % nn].clone()).collect();
        NecklaceStratum { blocks }
    }

    /// Least representative of the orbit under the chosen symmetry.
    pub fn canonical(&self, symmetry: NecklaceSymmetry) -> Self {
        let mut best = self.clone();
        let nn = self.blocks.len();
        for j in 0..nn {
            let rot = self.rotated(j);
            if symmetry == NecklaceSymmetry::Dihedral {
                let refl = rot.reflected();
                if refl < best {
                    best = refl;
                }
            }
            if rot < best {
                best = rot;
            }
        }
        best
    }

    /// All strata for `n` markings up to the chosen symmetry, as canonical
    /// representatives in increasing slot count.
    pub fn enumerate(n: usize, symmetry: NecklaceSymmetry) -> Result<Vec<Self>> {
        if n == 0 || n > 9 {
            return Err(Error::InvalidArgument(format!(
                "stratum enumeration supports 1..=9 markings, got {n}"
            )));
        }
        let mut out = Vec::new();
        for slots in 1..=n {
            for comp in surjective_compositions(n, slots).iter() {
                let blocks: Vec<Vec<usize>> = comp
                    .iter()
                    .map(|&mask| (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect())
                    .collect();
                let stratum = NecklaceStratum { blocks };
                if stratum == stratum.canonical(symmetry) {
                    out.push(stratum);
                }
            }
        }
        Ok(out)
    }
}

/// Slot permutations of the symmetry group of an `slots`-gon, with a flag
/// marking reflections (which also reverse glue orientation).
fn symmetry_elements(slots: usize, symmetry: NecklaceSymmetry) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    for j in 0..slots {
        out.push(((0..slots).map(|i| (i + j) % slots).collect(), false));
    }
    if symmetry == NecklaceSymmetry::Dihedral {
        for j in 0..slots {
            out.push(((0..slots).map(|i| (j + slots - i) % slots).collect(), true));
        }
    }
    out
}

/// One-line canonical permutation with the given cycle type, cycles laid out
/// consecutively from 0.
fn canonical_permutation(mu: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(mu.n());
    let mut base = 0;
    for &d in mu.parts() {
        for t in 0..d {
            perm.push(base + (t + 1) % d);
        }
        base += d;
    }
    perm
}

/// `powers[k][i] = σ^k(i)` for `k = 0..=max_power`.
fn perm_powers(sigma: &[usize], max_power: usize) -> Vec<Vec<usize>> {
    let n = sigma.len();
    let mut powers = vec![(0..n).collect::<Vec<usize>>()];
    for k in 1..=max_power {
        let prev = &powers[k - 1];
        powers.push((0..n).map(|i| sigma[prev[i]]).collect());
    }
    powers
}

/// `image[mask]` is the bitwise image of `mask` under σ.
fn mask_image_table(sigma: &[usize], n: usize) -> Vec<u16> {
    let mut image = vec![0u16; 1 << n];
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        image[mask] = image[mask & (mask - 1)] | (1 << sigma[low]);
    }
    image
}

/// Cycle type of the permutation `pow` restricted to the set bits of `mask`;
/// the mask must be invariant.
fn cycle_type_in_mask(pow: &[usize], mask: u16) -> Partition {
    let mut visited: u16 = 0;
    let mut parts = Vec::new();
    for i in 0..pow.len() {
        let bit = 1u16 << i;
        if mask & bit == 0 || visited & bit != 0 {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        loop {
            debug_assert!(mask & (1 << j) != 0, "block not invariant under the power");
            visited |= 1 << j;
            len += 1;
            j = pow[j];
            if j == i {
                break;
            }
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// Cycles of a slot permutation as `(representative, length)` pairs.
fn perm_cycles(perm: &[usize]) -> Vec<(usize, usize)> {
    let mut visited = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        loop {
            visited[j] = true;
            len += 1;
            j = perm[j];
            if j == start {
                break;
            }
        }
        out.push((start, len));
    }
    out
}

type CompositionTable = Arc<Vec<Vec<u16>>>;

/// All ordered decompositions of `n` markings into `slots` nonempty blocks,
/// one bitmask per slot. Cached, since the oracle revisits them per cycle
/// type and per symmetry.
fn surjective_compositions(n: usize, slots: usize) -> CompositionTable {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), CompositionTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry((n, slots))
        .or_insert_with(|| {
            let mut out = Vec::new();
            let mut digits = vec![0usize; n];
            loop {
                let mut masks = vec![0u16; slots];
                for (i, &d) in digits.iter().enumerate() {
                    masks[d] |= 1 << i;
                }
                if masks.iter().all(|&m| m != 0) {
                    out.push(masks);
                }
                // increment the base-`slots` counter
                let mut pos = 0;
                loop {
                    if pos == n {
                        return Arc::new(out);
                    }
                    digits[pos] += 1;
                    if digits[pos] < slots {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
            }
        })
        .clone()
}

/// Direct fixed-point computation of the sign multiplicity of the full
/// necklace space on `n` markings: Burnside over the symmetric group (one
/// canonical permutation per cycle type) and over the slot symmetries, with
/// explicit enumeration of block decompositions. Supports `n <= 8`.
pub fn strata_alternating(n: usize, symmetry: NecklaceSymmetry) -> Result<LPolynomial> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidArgument(format!(
            "the strata fixed-point count supports 1..=8 markings, got {n}"
        )));
    }
    let mut char_tables: HashMap<usize, CycleTypeChar> = HashMap::new();
    for k in 3..=n + 2 {
        char_tables.insert(k, configuration_character(k)?);
    }
    let mut total = RatPoly::zero();
    for mu in partitions_of(n) {
        let (z, sign) = mu.z_and_sign();
        let sigma = canonical_permutation(&mu);
        let powers = perm_powers(&sigma, n);
        let image = mask_image_table(&sigma, n);
        let mut factor_cache: HashMap<(usize, u16, bool), LPolynomial> = HashMap::new();
        let mut class_sum = RatPoly::zero();
        for slots in 1..=n {
            let comps = surjective_compositions(n, slots);
            let group = symmetry_elements(slots, symmetry);
            let group_order = group.len() as i64;
            let mut fixed_sum = LPolynomial::zero();
            for (perm, is_reflection) in &group {
                let cycles = perm_cycles(perm);
                'comps: for comp in comps.iter() {
                    for j in 0..slots {
                        if image[comp[j] as usize] != comp[perm[j]] {
                            continue 'comps;
                        }
                    }
                    let mut product = LPolynomial::constant(1);
                    for &(rep, len) in &cycles {
                        let mask = comp[rep];
                        let swap = *is_reflection && len == 1;
                        debug_assert!(!*is_reflection || len <= 2, "reflections are involutions");
                        let factor = factor_cache.entry((len, mask, swap)).or_insert_with(|| {
                            let inner = cycle_type_in_mask(&powers[len], mask);
                            let glued = if swap { inner.with_parts(2, 1) } else { inner.with_parts(1, 2) };
                            let table = &char_tables[&(mask.count_ones() as usize + 2)];
                            table.value(&glued).adams(len as u32)
                        });
                        product = product.mul(factor);
                    }
                    fixed_sum = fixed_sum.add(&product);
                }
            }
            class_sum.add_assign(&RatPoly::from_integer_poly(&fixed_sum).scale(&BigRational::new(
                BigInt::from(1),
                BigInt::from(group_order),
            )));
        }
        let weight = BigRational::new(BigInt::from(i64::from(sign)), BigInt::from(z));
        total.add_assign(&class_sum.scale(&weight));
    }
    total.to_integer("necklace strata fixed-point average")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn lp(pairs: &[(u32, i64)]) -> LPolynomial {
        LPolynomial::from_pairs(pairs)
    }

    #[test]
    fn bead_series_small_coefficients() {
        let g = bead_series(3);
        assert_eq!(g.min_degree(), Some(1));
        assert_eq!(g.coefficient(&part(&[1])), RatPoly::one());
        // degree 2: configuration characters of 4 points with two glue points
        let mut half_q = RatPoly::zero();
        half_q.add_term(1, rat(1, 2));
        assert_eq!(g.coefficient(&part(&[2])), half_q);
        let mut c11 = RatPoly::zero();
        c11.add_term(1, rat(1, 2));
        c11.add_term(0, rat(-1, 1));
        assert_eq!(g.coefficient(&part(&[1, 1])), c11);
    }

    #[test]
    fn bead_swap_series_small_coefficients() {
        let s = bead_swap_series(3);
        assert_eq!(s.coefficient(&part(&[1])), RatPoly::one());
        let mut c2 = RatPoly::zero();
        c2.add_term(1, rat(1, 2));
        c2.add_term(0, rat(-1, 1));
        assert_eq!(s.coefficient(&part(&[2])), c2);
        let mut c11 = RatPoly::zero();
        c11.add_term(1, rat(1, 2));
        assert_eq!(s.coefficient(&part(&[1, 1])), c11);
    }

    #[test]
    fn cyclic_alternating_values_alternate() {
        for n in 1..=6 {
            let value = necklace_alternating(NecklaceSymmetry::Cyclic, n, 6).unwrap();
            let expect = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(value, LPolynomial::constant(expect), "degree {n}");
        }
    }

    #[test]
    fn dihedral_alternating_values_are_indicator_of_odd() {
        for n in 1..=6 {
            let value = necklace_alternating(NecklaceSymmetry::Dihedral, n, 6).unwrap();
            let expect = i64::from(n % 2 == 1);
            assert_eq!(value, LPolynomial::constant(expect), "degree {n}");
        }
    }

    #[test]
    fn reflection_average_has_half_sign_multiplicity() {
        let refl = reflection_average_series(6);
        for n in 1..=6 {
            let v = refl.alternating_rational(n).unwrap();
            assert!(v.is_constant(), "degree {n}: {v}");
            assert_eq!(v.constant_term(), rat(1, 2), "degree {n}");
        }
    }

    #[test]
    fn strata_oracle_matches_series_small_degrees() {
        for n in 1..=4 {
            for symmetry in [NecklaceSymmetry::Cyclic, NecklaceSymmetry::Dihedral] {
                let oracle = strata_alternating(n, symmetry).unwrap();
                let series = necklace_alternating(symmetry, n, n).unwrap();
                assert_eq!(oracle, series, "n={n} {symmetry}");
            }
        }
    }

    #[test]
    fn strata_oracle_rejects_large_inputs() {
        assert!(strata_alternating(9, NecklaceSymmetry::Cyclic).is_err());
        assert!(strata_alternating(0, NecklaceSymmetry::Dihedral).is_err());
    }

    #[test]
    fn stratum_validation() {
        assert!(NecklaceStratum::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(NecklaceStratum::new(vec![]).is_err());
        assert!(NecklaceStratum::new(vec![vec![1], vec![]]).is_err());
        assert!(NecklaceStratum::new(vec![vec![1], vec![1, 2]]).is_err());
        assert!(NecklaceStratum::new(vec![vec![1], vec![3]]).is_err());
        let s = NecklaceStratum::new(vec![vec![2, 1], vec![3]]).unwrap();
        assert_eq!(s.blocks()[0], vec![1, 2]);
        assert_eq!(s.n(), 3);
        assert_eq!(s.slots(), 2);
    }

    #[test]
    fn stratum_group_action_and_canonical_forms() {
        let s = NecklaceStratum::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(s.rotated(1).blocks(), &[vec![2], vec![3], vec![1]]);
        assert_eq!(s.reflected().blocks(), &[vec![1], vec![3], vec![2]]);
        let t = NecklaceStratum::new(vec![vec![2], vec![1], vec![3]]).unwrap();
        assert_eq!(
            t.canonical(NecklaceSymmetry::Cyclic).blocks(),
            &[vec![1], vec![3], vec![2]]
        );
        assert_eq!(
            t.canonical(NecklaceSymmetry::Dihedral).blocks(),
            &[vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn stratum_counts_for_three_markings() {
        let cyclic = NecklaceStratum::enumerate(3, NecklaceSymmetry::Cyclic).unwrap();
        assert_eq!(cyclic.len(), 6);
        let dihedral = NecklaceStratum::enumerate(3, NecklaceSymmetry::Dihedral).unwrap();
        assert_eq!(dihedral.len(), 5);
        for s in &dihedral {
            assert_eq!(*s, s.canonical(NecklaceSymmetry::Dihedral));
        }
    }

    #[test]
    fn symmetry_groups_have_the_right_order() {
        assert_eq!(symmetry_elements(1, NecklaceSymmetry::Cyclic).len(), 1);
        assert_eq!(symmetry_elements(1, NecklaceSymmetry::Dihedral).len(), 2);
        assert_eq!(symmetry_elements(6, NecklaceSymmetry::Cyclic).len(), 6);
        assert_eq!(symmetry_elements(6, NecklaceSymmetry::Dihedral).len(), 12);
        // reflections of an even cycle split into vertex and edge type
        let refl: Vec<_> = symmetry_elements(4, NecklaceSymmetry::Dihedral)
            .into_iter()
            .filter(|(_, r)| *r)
            .collect();
        let fixed_counts: Vec<usize> = refl
            .iter()
            .map(|(p, _)| p.iter().enumerate().filter(|&(i, &v)| i == v).count())
            .collect();
        assert_eq!(fixed_counts.iter().filter(|&&c| c == 2).count(), 2);
        assert_eq!(fixed_counts.iter().filter(|&&c| c == 0).count(), 2);
    }

    #[test]
    fn dihedral_series_passes_integrality_and_caches() {
        let first = dihedral_necklace_series(5).unwrap();
        let second = dihedral_necklace_series(5).unwrap();
        assert_eq!(first, second);
        assert!(first.has_integral_multiplicities(4));
    }

    #[test]
    fn symmetry_parsing_and_display() {
        assert_eq!("cyclic".parse::<NecklaceSymmetry>().unwrap(), NecklaceSymmetry::Cyclic);
        assert_eq!("dihedral".parse::<NecklaceSymmetry>().unwrap(), NecklaceSymmetry::Dihedral);
        assert!("mixed".parse::<NecklaceSymmetry>().is_err());
        assert_eq!(NecklaceSymmetry::Cyclic.to_string(), "cyclic");
    }

    #[test]
    fn unused_helper_guards() {
        // canonical permutation of (3, 2): two cycles laid out consecutively.
        assert_eq!(canonical_permutation(&part(&[3, 2])), vec![1, 2, 0, 4, 3]);
        let powers = perm_powers(&[1, 2, 0], 3);
        assert_eq!(powers[2], vec![2, 0, 1]);
        assert_eq!(powers[3], vec![0, 1, 2]);
        assert_eq!(cycle_type_in_mask(&[1, 2, 0, 4, 3], 0b00111), part(&[3]));
        assert_eq!(cycle_type_in_mask(&[0, 1, 2, 4, 3], 0b11011), part(&[2, 1, 1]));
        assert_eq!(lp(&[(0, 1)]), LPolynomial::constant(1));
    }
}
