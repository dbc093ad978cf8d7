use qschubert::fusion::{verify_pairs, CharacterTable};
use qschubert::{belkale_default, dmax_slide, quantum_product, rectangle_multiply, BoxShape, QuantumRing};

#[test]
fn gr49_pair() {
    let s = BoxShape::new(4, 9).unwrap();
    let l = s.parse_boxed("5,4,4,3").unwrap();
    let m = s.parse_boxed("5,4,4,1").unwrap();
    let p = quantum_product(s, &l, &m).unwrap();
    assert_eq!(
        p.to_string(),
        "q^2*s[5,4,2,1] + q^2*s[5,3,3,1] + q^2*s[5,3,2,2] + q^3*s[3] + 2*q^3*s[2,1] + q^3*s[1,1,1]"
    );
    // The q^3 layer equals σ_1^3 in the classical ring.
    let one = s.parse_boxed("1").unwrap();
    let ring = QuantumRing::new(s);
    let cube = ring.multiply(&ring.product(&one, &one).unwrap(), &qschubert::QuantumClass::schubert(&one)).unwrap();
    assert_eq!(p.layer(3).unwrap(), cube.layer(0).unwrap());

    let r = belkale_default(s, &l, &m).unwrap();
    assert_eq!((r.a, r.b), (4, 5));
    assert_eq!(dmax_slide(s, &l, &m).unwrap(), 3);

    let table = CharacterTable::new(s).unwrap();
    let report = verify_pairs(&table, &ring, &[(&l, &m), (&m, &l)]).unwrap();
    assert!(report.mismatches.is_empty() && report.max_residual < 1e-6);
}

#[test]
fn top_class_squared_is_a_single_term() {
    for s in BoxShape::all_up_to(9) {
        let top = s.full();
        let p = quantum_product(s, &top, &top).unwrap();
        assert_eq!(p.len(), 1, "{s}: {p}");
        let w = s.width();
        let (d, nu) = rectangle_multiply(s, w, &top).unwrap();
        assert_eq!(p.coeff(d, nu.partition()), 1.into(), "{s}");
    }
}

#[test]
fn fusion_agrees_on_gr36_and_gr49() {
    for (k, n) in [(3, 6), (4, 9)] {
        let s = BoxShape::new(k, n).unwrap();
        let table = CharacterTable::new(s).unwrap();
        let ring = QuantumRing::new(s);
        let all = s.partitions();
        let pairs: Vec<_> = all.iter().step_by(7).flat_map(|l| all.iter().step_by(5).map(move |m| (l, m))).collect();
        let report = verify_pairs(&table, &ring, &pairs).unwrap();
        assert!(report.max_residual < 1e-6, "{s}: {report:?}");
    }
}
