use liealg::classes::{classify, class_audit, is_minimal_non_elementary, is_nonabelian_nilpotent_subalgebra, recognizer_cases};
use liealg::frattini::{asoc, frattini_ideal, splits_over_ideal};
use liealg::json::{from_json, to_json};
use liealg::linalg::qv;
use liealg::{zoo, Config, Error, Matrix, Subspace, Verdict, Witness};

fn basis_change() -> impl Fn(usize) -> Matrix {
    // Lower-unitriangular plus a diagonal scaling: always invertible.
    |n| {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = if i % 2 == 0 { 2 } else { -1 };
            for (j, x) in row.iter_mut().enumerate().take(i) {
                *x = ((i + 2 * j) % 3) as i64 - 1;
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        Matrix::from_i64(&refs)
    }
}

#[test]
fn verdicts_do_not_depend_on_the_basis() {
    let cfg = Config::default();
    let p = basis_change();
    for l in zoo::corpus().into_iter().filter(|l| l.dim() <= 8) {
        let m = zoo::change_basis(&l, &p(l.dim())).unwrap();
        let (a, b) = (classify(&l, &cfg).unwrap(), classify(&m, &cfg).unwrap());
        for ((name, x), (_, y)) in a.verdicts().iter().zip(b.verdicts().iter()) {
            assert_eq!(x.verdict, y.verdict, "{} {name}", l.name());
        }
        let dims = |r: &liealg::classes::ClassReport| {
            (r.structure.radical.dim(), r.structure.nilradical.dim(), r.structure.center.dim(), r.asoc.space.dim())
        };
        assert_eq!(dims(&a), dims(&b), "{}", l.name());
        assert_eq!(a.frattini.lower().dim(), b.frattini.lower().dim(), "{}", l.name());
    }
}

#[test]
fn json_round_trip_preserves_the_algebra() {
    for l in zoo::corpus() {
        let back = from_json(&to_json(&l)).unwrap();
        assert_eq!(back.structure_constants(), l.structure_constants(), "{}", l.name());
        assert_eq!(back.basis_names(), l.basis_names());
    }
}

#[test]
fn malformed_json_is_rejected() {
    assert!(matches!(from_json("{\"name\":\"x\"}"), Err(Error::Parse(_))));
    let bad_jacobi = r#"{"name":"bad","dim":3,"basis":["a","b","c"],
        "brackets":[{"i":0,"j":1,"coeffs":{"0":"1"}},{"i":0,"j":2,"coeffs":{"1":"1"}}]}"#;
    assert!(matches!(from_json(bad_jacobi), Err(Error::Jacobi(..))));
    let reversed = r#"{"name":"r","dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":0,"coeffs":{"0":"1"}}]}"#;
    assert!(from_json(reversed).is_err());
}

#[test]
fn every_refutation_witness_reverifies() {
    let cfg = Config::default();
    let mut checked = 0;
    for l in zoo::corpus() {
        let r = classify(&l, &cfg).unwrap();
        if let (Verdict::ProvenFalse, Some(Witness::Subspace { space })) = (r.a_algebra.verdict, &r.a_algebra.witness) {
            assert!(is_nonabelian_nilpotent_subalgebra(&l, space), "{}", l.name());
            checked += 1;
        }
        if let (Verdict::ProvenFalse, Some(w)) = (r.almost_algebraic.verdict, &r.almost_algebraic.witness) {
            let x = w.element_vector().expect("element witness");
            let parts = liealg::structure::ad_jordan_parts(&l, x);
            assert!(parts.s_in_l().is_false() || parts.n_in_l().is_false(), "{}", l.name());
            checked += 1;
        }
    }
    assert!(checked >= 3);
}

#[test]
fn recognizer_witnesses_are_proper_and_non_elementary() {
    let cfg = Config::default();
    for (l, expected) in recognizer_cases() {
        let v = is_minimal_non_elementary(&l, &cfg);
        assert_eq!(v.as_bool(), Some(expected), "{}: {}", l.name(), v.rule);
        if let Some(Witness::Subspace { space }) = &v.witness {
            assert!(space.dim() < l.dim());
            let sub = l.induced_subalgebra(space).unwrap().algebra;
            assert!(liealg::classes::is_elementary(&sub, &cfg).is_false(), "{}", l.name());
        }
    }
}

#[test]
fn frattini_examples() {
    let cfg = Config::default();
    let h3 = frattini_ideal(&zoo::heisenberg3(), &cfg).unwrap();
    assert_eq!(h3.exact_space(), Some(&Subspace::coordinate(3, [2])));
    let jb = frattini_ideal(&zoo::jordan_block3(), &cfg).unwrap();
    assert_eq!(jb.exact_space(), Some(&Subspace::coordinate(3, [1])));
    assert_eq!(asoc(&zoo::jordan_block3()).unwrap().space, Subspace::coordinate(3, [1]));
    let sl2 = frattini_ideal(&zoo::sl2(), &cfg).unwrap();
    assert!(sl2.exact_space().unwrap().is_zero());
}

#[test]
fn splitting_over_ideals() {
    let h3 = zoo::heisenberg3();
    assert!(splits_over_ideal(&h3, &h3.center()).unwrap().is_false());
    assert_eq!(splits_over_ideal(&h3, &Subspace::span(3, [qv(&[1, 0, 0])])), Err(Error::NotIdeal));
    let nat = zoo::sl2_natural();
    let v = liealg::structure::radical(&nat);
    assert!(splits_over_ideal(&nat, &v).unwrap().is_true());
}

#[test]
fn audit_flags_nothing_on_the_corpus() {
    let report = class_audit(&zoo::corpus(), &Config::default());
    assert_eq!(report.fail, 0);
    assert!(report.pass > 100);
}
