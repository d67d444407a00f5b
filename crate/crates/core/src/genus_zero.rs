//! Point counts for configurations of distinct marked points on a rational
//! curve, as characters of the symmetric group.
//!
//! For a permutation σ of cycle type λ ⊢ n, the number of σ-twisted
//! `F_q`-configurations of n distinct points on the projective line, divided
//! by `|PGL_2(F_q)| = q^3 - q`, is a polynomial in `q`. It factors through
//! closed points: a d-cycle of markings sweeps out a closed point of degree
//! d, so the count is a falling-factorial product of the weighted closed
//! point counts `Σ_{e|d} μ(e) (q^{d/e} + 1)`.
//!
//! The module provides:
//!
//! - [`closed_point_weight`]: `d` times the number of degree-`d` closed
//!   points of the projective line,
//! - [`configuration_character`]: the full character table for given `n`,
//! - [`configuration_series`]: `Σ_n Σ_λ z_λ^{-1} char(λ) p_λ`, the
//!   symmetric series the necklace constructions feed on,
//! - [`twisted_configuration_count`]: an independent brute-force count over
//!   an explicitly constructed finite field, for cross-checking the
//!   character values. It never looks at the formulas above; it builds
//!   `F_{p^k}`, walks Frobenius orbits, and counts tuples.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{divisors, moebius};
use crate::error::{Error, Result};
use crate::lpoly::{LPolynomial, RatPoly};
use crate::partition::{partitions_of, Partition};
use crate::series::SymSeries;

/// `Σ_{e|d} μ(e) (q^{d/e} + 1)`, which equals `d` times the number of closed
/// points of degree `d` on the projective line over `F_q`.
pub fn closed_point_weight(d: usize) -> LPolynomial {
    let mut out = LPolynomial::zero();
    for e in divisors(d as u64) {
        let mu = moebius(e);
        if mu == 0 {
            continue;
        }
        let inner = (d as u64 / e) as u32;
        out = out.add(&LPolynomial::monomial(inner, mu).add(&LPolynomial::constant(mu)));
    }
    out
}

/// The character table of twisted configuration counts for `n` marked points,
/// one integer polynomial in `q` per cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleTypeChar {
    n: usize,
    values: BTreeMap<Partition, LPolynomial>,
}

impl CycleTypeChar {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The value on permutations of cycle type `lambda`, which must be a
    /// partition of `n`.
    pub fn value(&self, lambda: &Partition) -> &LPolynomial {
        self.values
            .get(lambda)
            .unwrap_or_else(|| panic!("cycle type {:?} is not a partition of {}", lambda.parts(), self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LPolynomial)> {
        self.values.iter()
    }

    pub fn to_json(&self) -> Result<CycleTypeCharJson> {
        let characters = self
            .values
            .iter()
            .map(|(l, v)| {
                Ok(CharEntryJson { cycle_type: l.parts().to_vec(), poly: v.to_i128_pairs()? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycleTypeCharJson { n: self.n, characters })
    }
}

#[derive(Serialize, Debug)]
pub struct CycleTypeCharJson {
    pub n: usize,
    pub characters: Vec<CharEntryJson>,
}

#[derive(Serialize, Debug)]
pub struct CharEntryJson {
    pub cycle_type: Vec<usize>,
    pub poly: Vec<(u32, i128)>,
}

/// Computes the configuration character for `n >= 3` markings. For each
/// cycle type the product of falling closed-point weights is divisible by
/// `q^3 - q` exactly once; the division is checked, not assumed.
pub fn configuration_character(n: usize) -> Result<CycleTypeChar> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "configuration characters need at least 3 markings, got {n}"
        )));
    }
    let pgl = LPolynomial::from_pairs(&[(3, 1), (1, -1)]);
    let mut values = BTreeMap::new();
    for lambda in partitions_of(n) {
        let mut prod = LPolynomial::constant(1);
        for (d, mult) in lambda.multiplicities() {
            let weight = closed_point_weight(d);
            for j in 0..mult {
                prod = prod.mul(&weight.sub(&LPolynomial::constant((d * j) as i64)));
            }
        }
        let value = prod.exact_div(&pgl, &format!("configuration count for cycle type {:?}", lambda.parts()))?;
        values.insert(lambda, value);
    }
    Ok(CycleTypeChar { n, values })
}

/// `Σ_{3 ≤ n ≤ truncation} Σ_{λ ⊢ n} z_λ^{-1} char_n(λ) p_λ`.
pub fn configuration_series(truncation: usize) -> Result<SymSeries> {
    let mut s = SymSeries::zero(truncation);
    for n in 3..=truncation {
        let ch = configuration_character(n)?;
        for (lambda, value) in ch.iter() {
            let (z, _) = lambda.z_and_sign();
            let coeff = RatPoly::from_integer_poly(value)
                .scale(&BigRational::new(BigInt::from(1), BigInt::from(z)));
            s.add_term(lambda.clone(), coeff);
        }
    }
    Ok(s)
}

/// Brute-force σ-twisted configuration count over an explicit finite field.
///
/// `q = p^a` must be a prime power with `p ∈ {2, 3, 5}` and the ambient field
/// `F_{q^lcm(λ)}` at most `2^24` elements. Counts tuples `(x_1, ..., x_n)` of
/// distinct points of the projective line over the algebraic closure with
/// `Frob_q(x_i) = x_{σ(i)}` for the canonical σ of cycle type `lambda`.
pub fn twisted_configuration_count(lambda: &Partition, p: u64, a: usize) -> Result<u64> {
    if !matches!(p, 2 | 3 | 5) {
        return Err(Error::InvalidArgument(format!("unsupported characteristic {p}")));
    }
    if lambda.is_empty() {
        return Ok(0);
    }
    let lcm = lambda.parts().iter().fold(1usize, |acc, &d| acc.lcm(&d));
    let deg = a * lcm;
    let size = (p as f64).powi(deg as i32);
    if size > (1u64 << 24) as f64 {
        return Err(Error::InvalidArgument(format!(
            "field F_{{{p}^{deg}}} too large for the brute-force count"
        )));
    }
    let field = ff::PrimePowerField::new(p, deg);
    let frob_q = field.frobenius_power(a);

    // frozen per-length data: Frobenius^d tables and their fixed-point lists.
    let mut fixed: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (d, _) in lambda.multiplicities() {
        let table = compose_times(&frob_q, d);
        let pts = (0..field.size() as u32).filter(|&i| table[i as usize] == i).collect();
        fixed.insert(d, pts);
    }

    let infinity = field.size() as u32;
    let mut used = vec![false; field.size() + 1];
    let parts = lambda.parts().to_vec();
    Ok(count_orbits(&parts, 0, &fixed, &frob_q, infinity, &mut used))
}

fn compose_times(table: &[u32], times: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0..table.len() as u32).collect();
    for _ in 0..times {
        for v in out.iter_mut() {
            *v = table[*v as usize];
        }
    }
    out
}

fn count_orbits(
    parts: &[usize],
    idx: usize,
    fixed: &BTreeMap<usize, Vec<u32>>,
    frob_q: &[u32],
    infinity: u32,
    used: &mut Vec<bool>,
) -> u64 {
    if idx == parts.len() {
        return 1;
    }
    let d = parts[idx];
    let mut total = 0;
    let candidates = fixed[&d].iter().copied().chain(std::iter::once(infinity));
    'outer: for start in candidates {
        // walk the orbit; it must have exactly d distinct fresh points.
        let mut orbit = Vec::with_capacity(d);
        let mut x = start;
        for _ in 0..d {
            if used[x as usize] || orbit.contains(&x) {
                continue 'outer;
            }
            orbit.push(x);
            x = if x == infinity { infinity } else { frob_q[x as usize] };
        }
        for &y in &orbit {
            used[y as usize] = true;
        }
        total += count_orbits(parts, idx + 1, fixed, frob_q, infinity, used);
        for &y in &orbit {
            used[y as usize] = false;
        }
    }
    total
}

mod ff {
    //! Bare-bones `F_{p^deg}` arithmetic: elements are base-`p` digit strings
    //! packed into a `u32` index, reduction is against the first monic
    //! irreducible polynomial in lexicographic order.

    pub struct PrimePowerField {
        p: u64,
        deg: usize,
        /// x ↦ x^p as a permutation of element indices.
        frob_p: Vec<u32>,
    }

    impl PrimePowerField {
        pub fn new(p: u64, deg: usize) -> Self {
            assert!(deg >= 1);
            let size = (p as usize).pow(deg as u32);
            let modulus = first_irreducible(p, deg);
            let mut frob_p = Vec::with_capacity(size);
            for i in 0..size {
                let x = decode(i as u32, p, deg);
                let xp = pow_mod(&x, p, &modulus, p);
                frob_p.push(encode(&xp, p));
            }
            PrimePowerField { p, deg, frob_p }
        }

        pub fn size(&self) -> usize {
            (self.p as usize).pow(self.deg as u32)
        }

        /// x ↦ x^(p^a) as an index table.
        pub fn frobenius_power(&self, a: usize) -> Vec<u32> {
            let mut out: Vec<u32> = (0..self.size() as u32).collect();
            for _ in 0..a {
                for v in out.iter_mut() {
                    *v = self.frob_p[*v as usize];
                }
            }
            out
        }

        #[cfg(test)]
        pub fn p(&self) -> u64 {
            self.p
        }

        #[cfg(test)]
        pub fn deg(&self) -> usize {
            self.deg
        }
    }

    fn encode(digits: &[u64], p: u64) -> u32 {
        let mut out: u64 = 0;
        for &d in digits.iter().rev() {
            out = out * p + d;
        }
        out as u32
    }

    fn decode(mut idx: u32, p: u64, deg: usize) -> Vec<u64> {
        let mut out = vec![0; deg];
        for slot in out.iter_mut() {
            *slot = u64::from(idx) % p;
            idx = (u64::from(idx) / p) as u32;
        }
        out
    }

    /// Schoolbook product of two coefficient vectors over `F_p`.
    fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        out
    }

    /// Remainder of `a` modulo the monic polynomial `m` over `F_p`.
    fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let deg_m = m.len() - 1;
        let mut rem: Vec<u64> = a.to_vec();
        while rem.len() > deg_m {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - deg_m;
            if lead != 0 {
                for (k, &mk) in m.iter().enumerate() {
                    let pos = shift + k;
                    rem[pos] = (rem[pos] + (p - 1) * lead % p * mk) % p;
                }
            }
            rem.pop();
        }
        while rem.last() == Some(&0) {
            rem.pop();
        }
        rem
    }

    fn pow_mod(x: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let deg = m.len() - 1;
        let mut base = poly_rem(x, m, p);
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
            }
            base = poly_rem(&poly_mul(&base, &base, p), m, p);
            e >>= 1;
        }
        acc.resize(deg, 0);
        acc
    }

    /// First monic irreducible of degree `deg` over `F_p`, coefficients in
    /// lexicographic order of the index encoding. Irreducibility by trial
    /// division against every monic polynomial of degree at most `deg / 2`.
    fn first_irreducible(p: u64, deg: usize) -> Vec<u64> {
        if deg == 1 {
            return vec![0, 1]; // x itself
        }
        let tail_count = (p as usize).pow(deg as u32);
        'candidates: for idx in 0..tail_count {
            let mut cand = decode(idx as u32, p, deg);
            cand.push(1); // monic
            if cand[0] == 0 {
                continue; // divisible by x
            }
            for div_deg in 1..=deg / 2 {
                let div_count = (p as usize).pow(div_deg as u32);
                for didx in 0..div_count {
                    let mut div = decode(didx as u32, p, div_deg);
                    div.push(1);
                    if poly_rem(&cand, &div, p).is_empty() {
                        continue 'candidates;
                    }
                }
            }
            return cand;
        }
        unreachable!("irreducible polynomials of every degree exist over F_p");
    }

}
