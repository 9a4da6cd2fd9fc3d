use tga_core::algebra::TwistedAlgebra;
use tga_core::classification::{classify, odd_order_zero_divisor, EnumerationMode};
use tga_core::deformations::{
    commutator_rescaling, family_constant, k_inverse_isomorphism, neccons_check, witness_search, FamilySpec,
};
use tga_core::groups::{BasisConvention, FiniteGroup};
use tga_core::scalar::{q, qr};

#[test]
fn shaped_z4_survivor_is_tesseranion_table() {
    let rep = classify(&FiniteGroup::z4(), BasisConvention::LeftStandard, EnumerationMode::Shaped).unwrap();
    assert_eq!(rep.survivors.len(), 1);
    assert!(rep.undetermined.is_empty());
    assert!(rep.verify());
    let t = TwistedAlgebra::tesseranions();
    assert_eq!(rep.survivors[0].candidate.constant.values(), t.constant().values());
}

#[test]
fn shaped_klein_survivor_is_quaternion_table() {
    let h = TwistedAlgebra::quaternions();
    let rep = classify(&FiniteGroup::klein(), BasisConvention::RightStandard, EnumerationMode::Shaped).unwrap();
    assert_eq!(rep.survivors.len(), 1);
    assert!(rep.verify());
    assert_eq!(rep.survivors[0].candidate.constant.values(), h.constant().values());
    // the left-standard basis gives the opposite table
    let rep = classify(&FiniteGroup::klein(), BasisConvention::LeftStandard, EnumerationMode::Shaped).unwrap();
    assert_eq!(rep.survivors.len(), 1);
    assert_eq!(rep.survivors[0].candidate.constant.values(), h.constant().transpose().values());
}

#[test]
fn odd_cyclic_groups_have_zero_divisors() {
    for n in [3usize, 5] {
        let g = FiniteGroup::cyclic(n);
        let alg = TwistedAlgebra::from_table(g, &vec![vec![1i64; n]; n], BasisConvention::LeftStandard).unwrap();
        let w = odd_order_zero_divisor(alg.constant()).unwrap();
        assert!(w.verify());
    }
}

#[test]
fn json_round_trip() {
    let t = TwistedAlgebra::tesseranions();
    let back = TwistedAlgebra::from_json(&t.to_json()).unwrap();
    assert_eq!(back.constant().values(), t.constant().values());
}

#[test]
fn family_validity_and_witnesses() {
    let f4 = FamilySpec::new(4).unwrap();
    assert!(f4.is_valid(&qr(1, 5)));
    assert!(!f4.is_valid(&qr(1, 10)));
    let p = family_constant(4, &qr(1, 10)).unwrap();
    assert!(neccons_check(&p).passes);
    assert!(witness_search(&p, 8).unwrap().is_found());

    let f5 = FamilySpec::new(5).unwrap();
    assert!(f5.is_valid(&q(6)));
    assert!(!f5.is_valid(&q(7)));
    // beyond the sharper bound near 7.81 zero divisors appear
    let p = family_constant(5, &q(20)).unwrap();
    assert!(witness_search(&p, 8).unwrap().is_found());
}

#[test]
fn family_one_symmetries() {
    for k in [q(4), qr(9, 4), q(9)] {
        assert!(k_inverse_isomorphism(&k).unwrap());
    }
    assert!(k_inverse_isomorphism(&q(2)).is_err());
    let r = commutator_rescaling(&q(7)).unwrap();
    assert!(r.corrected_matches);
    assert!(!r.literal_matches);
}
