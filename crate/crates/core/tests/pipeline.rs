//! End-to-end checks that chain the configuration series through the
//! necklace assembly and compare against independent brute-force counts.

use necklace_euler::{
    configuration_series, necklace_alternating, strata_alternating, LPolynomial, NecklaceSymmetry,
};

/// One puncture forgotten from a configuration space leaves a space whose
/// top alternating multiplicity vanishes in every positive degree.
#[test]
fn pointed_configuration_alternating_part_vanishes() {
    let series = configuration_series(12).unwrap().skew_p(1);
    for n in 2..=11 {
        let value = series.alternating_multiplicity(n).unwrap();
        assert!(
            value.is_zero(),
            "degree {n} alternating multiplicity should vanish, got {value}"
        );
    }
}

#[test]
fn cyclic_necklace_alternating_matches_brute_force_n5_n6() {
    for n in 5..=6 {
        let series = necklace_alternating(NecklaceSymmetry::Cyclic, n, 8).unwrap();
        let oracle = strata_alternating(n, NecklaceSymmetry::Cyclic).unwrap();
        assert_eq!(series, oracle, "cyclic n={n}");
    }
}

#[test]
fn dihedral_necklace_alternating_matches_brute_force_n5_n6() {
    for n in 5..=6 {
        let series = necklace_alternating(NecklaceSymmetry::Dihedral, n, 8).unwrap();
        let oracle = strata_alternating(n, NecklaceSymmetry::Dihedral).unwrap();
        assert_eq!(series, oracle, "dihedral n={n}");
    }
}

/// The alternating multiplicities collapse to plain integers: the sign
/// alternates with parity in the cyclic case and indicates odd degree in
/// the dihedral one.
#[test]
fn necklace_alternating_values_are_constants() {
    for n in 1..=9 {
        let cyclic = necklace_alternating(NecklaceSymmetry::Cyclic, n, 9).unwrap();
        let expected = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(cyclic, LPolynomial::constant(expected), "cyclic n={n}");

        let dihedral = necklace_alternating(NecklaceSymmetry::Dihedral, n, 9).unwrap();
        let expected = i64::from(n % 2 == 1);
        assert_eq!(dihedral, LPolynomial::constant(expected), "dihedral n={n}");
    }
}

#[test]
fn truncation_guard_rejects_out_of_range_degrees() {
    assert!(necklace_alternating(NecklaceSymmetry::Cyclic, 9, 8).is_err());
    assert!(necklace_alternating(NecklaceSymmetry::Cyclic, 0, 8).is_err());
    assert!(strata_alternating(9, NecklaceSymmetry::Cyclic).is_err());
}
