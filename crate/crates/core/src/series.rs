//! Truncated symmetric-function series in the power-sum basis.
//!
//! A [`SymSeries`] stores finitely many terms `c_λ · p_λ` with `c_λ` a
//! rational polynomial in `L`, everything of degree `|λ|` above `truncation`
//! discarded. The operations the rest of the crate leans on:
//!
//! - ring arithmetic, with products pruned against the truncation,
//! - Adams operations `ψ_d` sending `p_k ↦ p_{dk}` and `L ↦ L^d`,
//! - plethysm `f ∘ g` for `g` without constant term,
//! - `∂/∂p_k`, which lowers the reliable truncation by `k`,
//! - inversion of series with constant term `±1`,
//! - pairings against `e_n` and `h_μ` under `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
//!
//! Sign-character multiplicities come from `⟨f, e_n⟩ = Σ_λ ε(λ) c_λ`, and
//! integrality of all irreducible multiplicities is certified by checking
//! `⟨f, h_μ⟩ ∈ Z[L]` for every `μ`, which suffices because the change of
//! basis from complete homogeneous to Schur functions is unitriangular.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::euler_phi;
use crate::error::{Error, Result};
use crate::lpoly::{LPolynomial, RatPoly};
use crate::partition::{partitions_of, Partition};

/// Largest truncation the crate supports; `z_λ` and the partition counts
/// involved are comfortable well past this, the cap just keeps run times sane.
pub const MAX_TRUNCATION: usize = 15;

#[derive(Clone, PartialEq, Eq)]
pub struct SymSeries {
    truncation: usize,
    terms: BTreeMap<Partition, RatPoly>,
}

impl SymSeries {
    pub fn zero(truncation: usize) -> Self {
        SymSeries { truncation, terms: BTreeMap::new() }
    }

    /// The constant series `c · p_∅`.
    pub fn constant(c: RatPoly, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(Partition::empty(), c);
        s
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(RatPoly::one(), truncation)
    }

    /// The power sum `p_k` (zero if `k` exceeds the truncation).
    pub fn power_sum(k: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(Partition::single(k), RatPoly::one());
        s
    }

    /// `p_λ` as a series.
    pub fn power_sum_product(lambda: &Partition, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(lambda.clone(), RatPoly::one());
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn add_term(&mut self, lambda: Partition, c: RatPoly) {
        if lambda.n() > self.truncation || c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> RatPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn constant_coefficient(&self) -> RatPoly {
        self.coefficient(&Partition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatPoly)> {
        self.terms.iter()
    }

    /// Smallest degree with a surviving term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|l| l.n()).min()
    }

    /// Keeps only terms of degree exactly `n`; the truncation is unchanged.
    pub fn degree_component(&self, n: usize) -> Self {
        SymSeries {
            truncation: self.truncation,
            terms: self.terms.iter().filter(|(l, _)| l.n() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Reinterprets the series at a lower truncation, discarding the excess.
    pub fn with_truncation(&self, truncation: usize) -> Self {
        assert!(
            truncation <= self.truncation,
            "cannot raise a truncation ({} -> {})",
            self.truncation,
            truncation
        );
        SymSeries {
            truncation,
            terms: self.terms.iter().filter(|(l, _)| l.n() <= truncation).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    fn assert_compatible(&self, other: &Self, op: &str) {
        assert_eq!(self.truncation, other.truncation, "truncation mismatch in {op}");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other, "add");
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SymSeries {
            truncation: self.truncation,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other, "sub");
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.truncation);
        }
        SymSeries {
            truncation: self.truncation,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v.scale(c))).collect(),
        }
    }

    pub fn scale_poly(&self, c: &RatPoly) -> Self {
        let mut out = Self::zero(self.truncation);
        for (l, v) in &self.terms {
            out.add_term(l.clone(), v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other, "mul");
        let mut out = Self::zero(self.truncation);
        for (l1, c1) in &self.terms {
            let d1 = l1.n();
            for (l2, c2) in &other.terms {
                if d1 + l2.n() > self.truncation {
                    continue;
                }
                out.add_term(l1.union(l2), c1.mul(c2));
            }
        }
        out
    }

    /// Adams operation `ψ_d`: `p_k ↦ p_{dk}` on indices and `L ↦ L^d` on
    /// coefficients. Equals `p_d ∘ self` when `self` has no constant term.
    pub fn adams(&self, d: usize) -> Self {
        assert!(d > 0, "adams index must be positive");
        let mut out = Self::zero(self.truncation);
        for (l, c) in &self.terms {
            out.add_term(l.scale(d), c.adams(d as u32));
        }
        out
    }

    /// Plethystic composition `self ∘ g`. Coefficients of `self` pass through
    /// untouched while each `p_λ` becomes `∏_i ψ_{λ_i}(g)`, so `g` must have
    /// no constant term for the degree filtration to converge.
    pub fn plethysm(&self, g: &Self) -> Result<Self> {
        if !g.constant_coefficient().is_zero() {
            return Err(Error::NonzeroConstantTerm(g.constant_coefficient().to_string()));
        }
        let truncation = self.truncation.min(g.truncation);
        // powers[d] holds psi_d(g)^1, psi_d(g)^2, ... as needed.
        let mut powers: BTreeMap<usize, Vec<SymSeries>> = BTreeMap::new();
        let mut out = Self::zero(truncation);
        for (lambda, c) in &self.terms {
            if lambda.n() > truncation {
                continue;
            }
            let mut term = Self::one(truncation);
            for (part, mult) in lambda.multiplicities() {
                let entry = powers
                    .entry(part)
                    .or_insert_with(|| vec![g.adams(part).with_truncation(truncation)]);
                while entry.len() < mult {
                    let next = entry.last().unwrap().mul(&entry[0]);
                    entry.push(next);
                }
                term = term.mul(&entry[mult - 1]);
                if term.is_zero() {
                    break;
                }
            }
            for (l, v) in &term.terms {
                out.add_term(l.clone(), v.mul(c));
            }
        }
        Ok(out)
    }

    /// `∂/∂p_k` in the power-sum basis: `p_λ ↦ m_k(λ) · p_{λ \ k}`. The
    /// result is only reliable up to degree `truncation - k`, and says so.
    pub fn skew_p(&self, k: usize) -> Self {
        assert!(k > 0 && k <= self.truncation, "skew index out of range");
        let mut out = Self::zero(self.truncation - k);
        for (l, c) in &self.terms {
            let m = l.multiplicity(k);
            if m == 0 {
                continue;
            }
            let stripped = l.remove_part(k).expect("multiplicity checked above");
            out.add_term(stripped, c.scale(&BigRational::from_integer(BigInt::from(m as i64))));
        }
        out
    }

    /// `⟨·, e_n⟩` applied to the degree-`n` component, kept rational.
    pub fn alternating_rational(&self, n: usize) -> Result<RatPoly> {
        if n > self.truncation {
            return Err(Error::InvalidArgument(format!(
                "degree {n} exceeds series truncation {}",
                self.truncation
            )));
        }
        let mut acc = RatPoly::zero();
        for (l, c) in &self.terms {
            if l.n() != n {
                continue;
            }
            let (_, sign) = l.z_and_sign();
            if sign > 0 {
                acc.add_assign(c);
            } else {
                acc.add_assign(&c.neg());
            }
        }
        Ok(acc)
    }

    /// Sign-character multiplicity of the degree-`n` component, which must be
    /// an integer polynomial in `L`.
    pub fn alternating_multiplicity(&self, n: usize) -> Result<LPolynomial> {
        self.alternating_rational(n)?
            .to_integer(&format!("sign multiplicity in degree {n}"))
    }

    /// `⟨f_n, h_μ⟩` for `μ ⊢ n`, via `⟨p_λ, p_ν⟩ = z_λ δ_{λν}`.
    pub fn h_pairing(&self, mu: &Partition) -> RatPoly {
        let n = mu.n();
        let h = Self::h_mu(mu, n);
        let mut acc = RatPoly::zero();
        for (l, c) in &self.terms {
            if l.n() != n {
                continue;
            }
            let d = h.coefficient(l);
            if d.is_zero() {
                continue;
            }
            let (z, _) = l.z_and_sign();
            acc.add_assign(&c.mul(&d).scale(&BigRational::from_integer(BigInt::from(z))));
        }
        acc
    }

    /// Whether every irreducible multiplicity in degree `n` lies in `Z[L]`.
    pub fn has_integral_multiplicities(&self, n: usize) -> bool {
        partitions_of(n).iter().all(|mu| self.h_pairing(mu).is_integral())
    }

    /// Complete homogeneous `h_k = Σ_{λ⊢k} p_λ / z_λ`.
    pub fn complete_homogeneous(k: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        for l in partitions_of(k) {
            let (z, _) = l.z_and_sign();
            s.add_term(l, RatPoly::constant(ratio(1, z)));
        }
        s
    }

    /// `h_μ` as a product of the `h_{μ_i}`.
    pub fn h_mu(mu: &Partition, truncation: usize) -> Self {
        let mut s = Self::one(truncation);
        for &part in mu.parts() {
            s = s.mul(&Self::complete_homogeneous(part, truncation));
        }
        s
    }

    /// Elementary `e_k = Σ_{λ⊢k} ε(λ) p_λ / z_λ`.
    pub fn elementary(k: usize, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        for l in partitions_of(k) {
            let (z, sign) = l.z_and_sign();
            s.add_term(l, RatPoly::constant(ratio(sign.into(), z)));
        }
        s
    }

    /// Multiplicative inverse of a series whose constant term is `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_coefficient();
        let sign = if c0 == RatPoly::one() {
            1
        } else if c0 == RatPoly::from_int(-1) {
            -1
        } else {
            return Err(Error::NotAUnit(c0.to_string()));
        };
        // self = sign (1 + u) with u of positive degree; expand geometrically.
        let mut u = self.clone();
        if sign < 0 {
            u = u.neg();
        }
        u.terms.remove(&Partition::empty());
        let mut out = Self::one(self.truncation);
        let mut power = Self::one(self.truncation);
        for _ in 0..self.truncation {
            power = power.mul(&u).neg();
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        if sign < 0 {
            out = out.neg();
        }
        Ok(out)
    }

    /// `Σ_{d,k : dk ≤ N} scale · φ(d)/(dk) · p_{(d^k)}`: the generating series
    /// whose degree-`n` piece is `scale` times the cycle index of the rotation
    /// group on `n` points.
    pub fn cyclic_index_series(scale: CyclicScale, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        for d in 1..=truncation {
            let phi = euler_phi(d as u64);
            let mut k = 1;
            while d * k <= truncation {
                let mut c = ratio(phi as i64, (d * k) as u128);
                if matches!(scale, CyclicScale::Half) {
                    c /= BigRational::from_integer(BigInt::from(2));
                }
                s.add_term(Partition::empty().with_parts(d, k), RatPoly::constant(c));
                k += 1;
            }
        }
        s
    }

    /// Data for canonical JSON output: partitions in series order,
    /// coefficients as exact `(exponent, value)` string pairs.
    pub fn to_json(&self) -> SymSeriesJson {
        SymSeriesJson {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| SymSeriesTermJson {
                    partition: l.parts().to_vec(),
                    coeff: c.to_string_pairs(),
                })
                .collect(),
        }
    }
}

/// Overall scaling of [`SymSeries::cyclic_index_series`]: the rotation count
/// itself, or half of it as used in the dihedral average.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CyclicScale {
    Full,
    Half,
}

#[derive(Serialize, PartialEq, Eq, Debug)]
pub struct SymSeriesJson {
    pub truncation: usize,
    pub terms: Vec<SymSeriesTermJson>,
}

#[derive(Serialize, PartialEq, Eq, Debug)]
pub struct SymSeriesTermJson {
    pub partition: Vec<usize>,
    pub coeff: Vec<(u32, String)>,
}

fn ratio(num: i64, den: u128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl std::fmt::Display for SymSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "({c})*p[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(k: usize, n: usize) -> SymSeries {
        SymSeries::power_sum(k, n)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn product_merges_partitions() {
        let prod = p(2, 6).mul(&p(1, 6)).mul(&p(2, 6));
        assert_eq!(prod.coefficient(&Partition::new(vec![2, 2, 1])), RatPoly::one());
        // degree pruning
        let small = p(2, 3).mul(&p(2, 3));
        assert!(small.is_zero());
    }

    #[test]
    fn plethysm_of_power_sums_multiplies_indices() {
        let f = p(2, 12).plethysm(&p(3, 12)).unwrap();
        assert_eq!(f, p(6, 12));
    }

    #[test]
    fn plethysm_twists_inner_lefschetz_but_not_outer() {
        // p_2 ∘ (L p_1) = L^2 p_2
        let mut lp1 = SymSeries::zero(8);
        let mut el = RatPoly::zero();
        el.add_term(1, BigRational::one());
        lp1.add_term(Partition::single(1), el.clone());
        let f = p(2, 8).plethysm(&lp1).unwrap();
        let mut expect = SymSeries::zero(8);
        let mut l2 = RatPoly::zero();
        l2.add_term(2, BigRational::one());
        expect.add_term(Partition::single(2), l2);
        assert_eq!(f, expect);

        // (L p_2) ∘ p_1 keeps the outer coefficient alone.
        let mut lp2 = SymSeries::zero(8);
        lp2.add_term(Partition::single(2), el);
        let g = lp2.plethysm(&p(1, 8)).unwrap();
        assert_eq!(g, lp2);
    }

    #[test]
    fn plethysm_rejects_constant_terms() {
        let g = SymSeries::one(5);
        assert!(matches!(p(1, 5).plethysm(&g), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn plethysm_into_h2_expands() {
        // h_2 ∘ (p_1 + p_2) = (p_1^2 + p_2)/2 ∘ ... expanded directly:
        // (1/2)(p_1+p_2)^2 + (1/2)psi_2(p_1+p_2)
        let g = p(1, 8).add(&p(2, 8));
        let f = SymSeries::complete_homogeneous(2, 8).plethysm(&g).unwrap();
        let mut expect = SymSeries::zero(8);
        expect.add_term(Partition::new(vec![1, 1]), RatPoly::constant(rat(1, 2)));
        expect.add_term(Partition::new(vec![2, 1]), RatPoly::one());
        expect.add_term(Partition::new(vec![2, 2]), RatPoly::constant(rat(1, 2)));
        expect.add_term(Partition::single(2), RatPoly::constant(rat(1, 2)));
        expect.add_term(Partition::single(4), RatPoly::constant(rat(1, 2)));
        assert_eq!(f, expect);
    }

    #[test]
    fn adams_composes() {
        let g = p(1, 12).add(&p(2, 12)).add(&SymSeries::power_sum(3, 12));
        assert_eq!(g.adams(2).adams(3), g.adams(6));
        // p_a ∘ (p_b ∘ f) = p_ab ∘ f
        let left = p(2, 12).plethysm(&p(3, 12).plethysm(&g).unwrap()).unwrap();
        let right = p(6, 12).plethysm(&g).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn skew_lowers_truncation_and_counts_multiplicity() {
        let mut s = SymSeries::zero(7);
        s.add_term(Partition::new(vec![2, 2, 1]), RatPoly::one());
        let d2 = s.skew_p(2);
        assert_eq!(d2.truncation(), 5);
        assert_eq!(d2.coefficient(&Partition::new(vec![2, 1])), RatPoly::from_int(2));
        let d1 = s.skew_p(1);
        assert_eq!(d1.coefficient(&Partition::new(vec![2, 2])), RatPoly::one());
        assert!(d1.coefficient(&Partition::new(vec![2, 1])).is_zero());
    }

    #[test]
    fn alternating_multiplicities_of_small_series() {
        // <p_1^3, e_3> = 1, <h_3, e_3> = 0, <e_3, e_3> = 1
        let p111 = p(1, 3).mul(&p(1, 3)).mul(&p(1, 3));
        assert_eq!(p111.alternating_multiplicity(3).unwrap(), LPolynomial::constant(1));
        let h3 = SymSeries::complete_homogeneous(3, 3);
        assert!(h3.alternating_multiplicity(3).unwrap().is_zero());
        let e3 = SymSeries::elementary(3, 3);
        assert_eq!(e3.alternating_multiplicity(3).unwrap(), LPolynomial::constant(1));
    }

    #[test]
    fn h_pairings_detect_schur_integrality() {
        // h_2 h_1 has nonnegative integer pairings; p_2 alone does not pair
        // integrally against h_(1,1).
        let h21 = SymSeries::h_mu(&Partition::new(vec![2, 1]), 3);
        assert!(h21.has_integral_multiplicities(3));
        assert!(p(2, 2).has_integral_multiplicities(2));
        let half_p2 = p(2, 2).scale(&rat(1, 2));
        assert!(!half_p2.has_integral_multiplicities(2));
        // <h_2, h_2> = <s_2, s_2> = 1, via (1/4)z_(1,1) + (1/4)z_(2).
        let h2 = SymSeries::complete_homogeneous(2, 2);
        assert_eq!(h2.h_pairing(&Partition::single(2)), RatPoly::one());
    }

    #[test]
    fn inverse_of_one_minus_p2() {
        let one = SymSeries::one(9);
        let f = one.sub(&p(2, 9));
        let inv = f.inverse().unwrap();
        assert_eq!(f.mul(&inv), SymSeries::one(9));
        assert_eq!(inv.coefficient(&Partition::new(vec![2, 2, 2, 2])), RatPoly::one());
        // constant -1 also works
        let g = p(1, 4).sub(&SymSeries::one(4));
        assert_eq!(g.mul(&g.inverse().unwrap()), SymSeries::one(4));
        // non-unit rejected
        assert!(matches!(p(1, 4).inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn cyclic_index_degree_three() {
        let s = SymSeries::cyclic_index_series(CyclicScale::Full, 6);
        // (1/3)(p_1^3 + 2 p_3)
        assert_eq!(s.coefficient(&Partition::new(vec![1, 1, 1])), RatPoly::constant(rat(1, 3)));
        assert_eq!(s.coefficient(&Partition::single(3)), RatPoly::constant(rat(2, 3)));
        assert_eq!(s.coefficient(&Partition::new(vec![2, 1])), RatPoly::zero());
        let h = SymSeries::cyclic_index_series(CyclicScale::Half, 6);
        assert_eq!(h.coefficient(&Partition::single(3)), RatPoly::constant(rat(1, 3)));
    }

    #[test]
    fn degree_component_and_truncation() {
        let s = SymSeries::cyclic_index_series(CyclicScale::Full, 8);
        let d4 = s.degree_component(4);
        assert!(d4.terms().all(|(l, _)| l.n() == 4));
        assert_eq!(d4.terms().count(), 3); // (1^4), (2^2), (4)
        let t5 = s.with_truncation(5);
        assert_eq!(t5, SymSeries::cyclic_index_series(CyclicScale::Full, 5));
    }

    #[test]
    fn json_shape_is_ordered() {
        let s = SymSeries::complete_homogeneous(3, 3);
        let j = s.to_json();
        assert_eq!(j.truncation, 3);
        let parts: Vec<Vec<usize>> = j.terms.iter().map(|t| t.partition.clone()).collect();
        assert_eq!(parts, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(j.terms[0].coeff, vec![(0, "1/3".to_string())]);
    }
}
