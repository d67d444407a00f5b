//! Level-`m` decorations of necklace boundary strata.
//!
//! A necklace of rational curves sits in the boundary of a family whose
//! smooth members carry a level structure: a trivialized `(Z/m)^2`-torsor of
//! `m`-torsion. On the necklace the structure degenerates to a decoration of
//! the dual graph, one element of `(Z/m)^2` per half-edge, with inverse
//! values on the two halves of each edge, the identity on marking legs, and
//! trivial sum around every vertex. Those axioms force one common transition
//! element `g` onto all forward half-edges; it must have exact order `m`,
//! and it determines the whole decoration.
//!
//! Consequences computed here:
//!
//! - the number of exact-order-`m` elements of `(Z/m)^2`, both by the Jordan
//!   totient formula and by enumeration (the two are asserted equal),
//! - the cusp count of the level-`m` modular curve, which for `m >= 3` is
//!   half the element count because `g` and `g^{-1}` decorate isomorphic
//!   components,
//! - the number of boundary components of the level-`m` family, which is the
//!   cusp count times the unit count `φ(m)`,
//! - decoration propagation and the reflection test: flipping the necklace
//!   inverts `g`, so a decorated component is reflection-invariant exactly
//!   when `g = g^{-1}`, which happens exactly for `m <= 2`.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::{euler_phi, factorize};
use crate::error::{Error, Result};
use crate::necklace::NecklaceStratum;

/// An element of `(Z/m)^2`, stored reduced mod `m`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct GroupElement {
    pub a: u64,
    pub b: u64,
}

impl GroupElement {
    pub fn new(a: u64, b: u64, m: u64) -> Self {
        assert!(m > 0);
        GroupElement { a: a % m, b: b % m }
    }

    pub fn identity() -> Self {
        GroupElement { a: 0, b: 0 }
    }

    /// Order in `(Z/m)^2`: the lcm of the coordinate orders `m / gcd`.
    pub fn order(&self, m: u64) -> u64 {
        let oa = m / self.a.gcd(&m);
        let ob = m / self.b.gcd(&m);
        oa.lcm(&ob)
    }

    pub fn inverse(&self, m: u64) -> Self {
        GroupElement { a: (m - self.a % m) % m, b: (m - self.b % m) % m }
    }

    pub fn add(&self, other: &Self, m: u64) -> Self {
        GroupElement { a: (self.a + other.a) % m, b: (self.b + other.b) % m }
    }
}

/// Number of elements of `(Z/m)^2` of exact order `m`, which is
/// `m^2 ∏_{p | m} (1 - 1/p^2)`. Computed by the formula and cross-checked
/// against direct enumeration on every call.
pub fn full_order_element_count(m: u64) -> u64 {
    assert!(m > 0, "the level must be positive");
    let mut formula = m * m;
    for (p, _) in factorize(m) {
        formula = formula / (p * p) * (p * p - 1);
    }
    let mut enumerated = 0;
    for a in 0..m {
        for b in 0..m {
            if GroupElement::new(a, b, m).order(m) == m {
                enumerated += 1;
            }
        }
    }
    assert_eq!(formula, enumerated, "order-{m} element count mismatch");
    formula
}

/// Cusps of the level-`m` modular curve: 1 for m = 1, 3 for m = 2, and half
/// the exact-order element count once inversion acts freely (m >= 3).
pub fn cusp_count(m: u64) -> u64 {
    match m {
        0 => panic!("the level must be positive"),
        1 => 1,
        2 => 3,
        _ => full_order_element_count(m) / 2,
    }
}

/// Boundary components of the level-`m` family: one per cusp and unit.
pub fn boundary_component_count(m: u64) -> u64 {
    euler_phi(m) * cusp_count(m)
}

/// The same count obtained without the cusp formula: enumerate exact-order
/// elements, pair each with its inverse, and count units by gcd.
pub fn boundary_components_by_enumeration(m: u64) -> u64 {
    assert!(m > 0);
    let mut pairs = 0;
    for a in 0..m {
        for b in 0..m {
            let g = GroupElement::new(a, b, m);
            if g.order(m) != m {
                continue;
            }
            // count each {g, g^{-1}} pair at its lexicographically least member
            if g <= g.inverse(m) {
                pairs += 1;
            }
        }
    }
    let units = (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64;
    pairs * units
}

/// A half-edge of the dual graph of a necklace stratum: the outgoing or
/// incoming side of the edge at a slot, or the leg of a marking.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum HalfEdge {
    Out(usize),
    In(usize),
    Leg(usize),
}

/// A necklace stratum whose dual graph is decorated by `(Z/m)^2` values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecoratedNecklace {
    stratum: NecklaceStratum,
    m: u64,
    decorations: BTreeMap<HalfEdge, GroupElement>,
}

/// Spreads the monodromy element `g` over a stratum: `g` on every forward
/// half-edge, `g^{-1}` on every backward one, the identity on legs. Fails
/// unless `g` has exact order `m`.
pub fn propagate_decorations(
    stratum: &NecklaceStratum,
    g: GroupElement,
    m: u64,
) -> Result<DecoratedNecklace> {
    let order = g.order(m);
    if order != m {
        return Err(Error::OrderMismatch { found: order, expected: m });
    }
    let mut decorations = BTreeMap::new();
    for slot in 0..stratum.slots() {
        decorations.insert(HalfEdge::Out(slot), g);
        decorations.insert(HalfEdge::In(slot), g.inverse(m));
    }
    for block in stratum.blocks() {
        for &marking in block {
            decorations.insert(HalfEdge::Leg(marking), GroupElement::identity());
        }
    }
    let necklace = DecoratedNecklace { stratum: stratum.clone(), m, decorations };
    necklace.validate()?;
    Ok(necklace)
}

impl DecoratedNecklace {
    pub fn stratum(&self) -> &NecklaceStratum {
        &self.stratum
    }

    pub fn level(&self) -> u64 {
        self.m
    }

    pub fn decorations(&self) -> &BTreeMap<HalfEdge, GroupElement> {
        &self.decorations
    }

    /// The common transition element on the forward half-edges (the vertex
    /// axiom forces them all equal; see [`DecoratedNecklace::validate`]).
    pub fn forward_value(&self) -> GroupElement {
        self.decorations[&HalfEdge::Out(0)]
    }

    /// Checks the decoration axioms: opposite halves of an edge carry inverse
    /// values, legs carry the identity, and the values around each vertex sum
    /// to the identity.
    pub fn validate(&self) -> Result<()> {
        let slots = self.stratum.slots();
        for slot in 0..slots {
            let out = self.decorations[&HalfEdge::Out(slot)];
            let in_next = self.decorations[&HalfEdge::In((slot + 1) % slots)];
            if out.add(&in_next, self.m) != GroupElement::identity() {
                return Err(Error::InvalidArgument(format!(
                    "edge {slot} carries non-inverse half-edge values"
                )));
            }
        }
        for block in self.stratum.blocks() {
            for &marking in block {
                if self.decorations[&HalfEdge::Leg(marking)] != GroupElement::identity() {
                    return Err(Error::InvalidArgument(format!(
                        "leg {marking} carries a nontrivial value"
                    )));
                }
            }
        }
        for (slot, block) in self.stratum.blocks().iter().enumerate() {
            let mut sum = self.decorations[&HalfEdge::Out(slot)];
            sum = sum.add(&self.decorations[&HalfEdge::In(slot)], self.m);
            for &marking in block {
                sum = sum.add(&self.decorations[&HalfEdge::Leg(marking)], self.m);
            }
            if sum != GroupElement::identity() {
                return Err(Error::InvalidArgument(format!(
                    "vertex {slot} values do not sum to the identity"
                )));
            }
        }
        Ok(())
    }

    /// The necklace with reversed orientation: every forward half-edge turns
    /// backward, so the decoration data is the one propagated from `g^{-1}`.
    pub fn reflected(&self) -> Self {
        let stratum = self.stratum.reflected();
        let g = self.forward_value().inverse(self.m);
        propagate_decorations(&stratum, g, self.m).expect("inverse keeps exact order")
    }

    /// Whether the reflection preserves the decoration data. The comparison
    /// is on decoration values only (the block layout is a separate orbit
    /// question), so this holds exactly when `g = g^{-1}`.
    pub fn is_dihedral_invariant(&self) -> bool {
        let reflected = self.reflected();
        self.forward_value() == reflected.forward_value()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_orders() {
        assert_eq!(GroupElement::new(0, 0, 6).order(6), 1);
        assert_eq!(GroupElement::new(2, 3, 6).order(6), 6);
        assert_eq!(GroupElement::new(2, 4, 6).order(6), 3);
        assert_eq!(GroupElement::new(3, 0, 6).order(6), 2);
        assert_eq!(GroupElement::new(1, 5, 6).order(6), 6);
    }

    #[test]
    fn inverses_cancel() {
        for m in 1..=8 {
            for a in 0..m {
                for b in 0..m {
                    let g = GroupElement::new(a, b, m);
                    assert_eq!(g.add(&g.inverse(m), m), GroupElement::identity());
                }
            }
        }
    }

    #[test]
    fn full_order_counts() {
        let expect = [(1, 1), (2, 3), (3, 8), (4, 12), (5, 24), (6, 24), (7, 48), (8, 48), (12, 96)];
        for (m, count) in expect {
            assert_eq!(full_order_element_count(m), count, "m={m}");
        }
    }

    #[test]
    fn cusp_counts() {
        assert_eq!(cusp_count(1), 1);
        assert_eq!(cusp_count(2), 3);
        assert_eq!(cusp_count(3), 4);
        assert_eq!(cusp_count(4), 6);
        assert_eq!(cusp_count(5), 12);
        assert_eq!(cusp_count(7), 24);
    }

    #[test]
    fn boundary_counts_match_both_ways() {
        let expect = [(1, 1), (2, 3), (3, 8), (4, 12), (5, 48), (6, 24)];
        for (m, count) in expect {
            assert_eq!(boundary_component_count(m), count, "m={m}");
        }
        for m in 1..=30 {
            assert_eq!(
                boundary_component_count(m),
                boundary_components_by_enumeration(m),
                "m={m}"
            );
        }
    }

    #[test]
    fn decoration_propagation_and_validation() {
        let stratum = NecklaceStratum::new(vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        let g = GroupElement::new(1, 2, 3);
        let necklace = propagate_decorations(&stratum, g, 3).unwrap();
        assert_eq!(necklace.forward_value(), g);
        assert_eq!(necklace.decorations().len(), 2 * 3 + 4);
        assert_eq!(necklace.decorations()[&HalfEdge::Out(1)], g);
        assert_eq!(necklace.decorations()[&HalfEdge::In(1)], g.inverse(3));
        necklace.validate().unwrap();
    }

    #[test]
    fn propagation_rejects_wrong_order() {
        let stratum = NecklaceStratum::new(vec![vec![1], vec![2]]).unwrap();
        let low_order = GroupElement::new(2, 4, 6);
        let err = propagate_decorations(&stratum, low_order, 6).unwrap_err();
        assert!(matches!(err, Error::OrderMismatch { found: 3, expected: 6 }));
    }

    #[test]
    fn reflection_invariance_is_a_level_condition() {
        let stratum = NecklaceStratum::new(vec![vec![1], vec![2], vec![3]]).unwrap();
        for (m, g, invariant) in [
            (1, GroupElement::new(0, 0, 1), true),
            (2, GroupElement::new(1, 1, 2), true),
            (3, GroupElement::new(1, 0, 3), false),
            (4, GroupElement::new(1, 1, 4), false),
            (6, GroupElement::new(1, 1, 6), false),
        ] {
            let necklace = propagate_decorations(&stratum, g, m).unwrap();
            assert_eq!(necklace.is_dihedral_invariant(), invariant, "m={m}");
            necklace.reflected().validate().unwrap();
        }
    }

    #[test]
    fn single_slot_loop_edge_still_validates() {
        // one slot: the edge loops back to the same vertex, and the vertex
        // sees both of its halves
        let stratum = NecklaceStratum::new(vec![vec![1, 2]]).unwrap();
        let g = GroupElement::new(1, 3, 5);
        let necklace = propagate_decorations(&stratum, g, 5).unwrap();
        assert_eq!(necklace.forward_value(), g);
        necklace.validate().unwrap();
    }
}
