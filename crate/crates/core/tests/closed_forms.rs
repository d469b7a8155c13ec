use polyhex_core::{
    azi, build_nanotube, fit_closed_form, paper_forms, verify_paper_forms, ClosedFormError, Index,
    NanotubeKind, NanotubeSpec, Provenance, Rational, Verdict,
};

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d).unwrap()
}

fn oracle(kind: NanotubeKind, m: u32, n: u32) -> Rational {
    azi(&build_nanotube(&NanotubeSpec::new(kind, m, n).unwrap()))
        .unwrap()
        .exact
        .unwrap()
}

const SAMPLES: [(u32, u32); 4] = [(2, 1), (2, 2), (3, 1), (3, 2)];

#[test]
fn smallest_armchair_oracle() {
    // 4·8 + 8·8 + 2·729/64
    assert_eq!(oracle(NanotubeKind::Armchair, 2, 1), r(3801, 32));
    assert_eq!(oracle(NanotubeKind::Armchair, 2, 1).to_f64(), 118.78125);
}

#[test]
fn fitted_coefficients() {
    let arm = fit_closed_form(NanotubeKind::Armchair, Index::Azi, &SAMPLES).unwrap();
    assert_eq!((arm.a, arm.b), (r(2187, 64), r(807, 32)));
    assert_eq!(arm.provenance, Provenance::OracleFitted);
    let zig = fit_closed_form(NanotubeKind::Zigzag, Index::Azi, &SAMPLES).unwrap();
    assert_eq!((zig.a, zig.b), (r(2187, 64), r(295, 32)));
    assert_eq!(arm.evaluate(2, 1).unwrap(), r(3801, 32));
}

#[test]
fn hand_solve_matches_fitter() {
    // Independent 2×2 elimination on two oracle points at m = 2:
    // v(2,2) - v(2,1) = 2a, v(2,1) = 2a + 2b.
    for kind in NanotubeKind::ALL {
        let v1 = oracle(kind, 2, 1);
        let v2 = oracle(kind, 2, 2);
        let a = v2.checked_sub(v1).unwrap().checked_div(r(2, 1)).unwrap();
        let b = v1.checked_div(r(2, 1)).unwrap().checked_sub(a).unwrap();
        let fit = fit_closed_form(kind, Index::Azi, &SAMPLES).unwrap();
        assert_eq!((fit.a, fit.b), (a, b));
    }
}

#[test]
fn fitted_forms_hold_on_full_grid() {
    for kind in NanotubeKind::ALL {
        let f = fit_closed_form(kind, Index::Azi, &SAMPLES).unwrap();
        for m in 2..=12 {
            for n in 1..=12 {
                assert_eq!(f.evaluate(m, n).unwrap(), oracle(kind, m, n));
                let step = f
                    .evaluate(m, n + 1)
                    .unwrap()
                    .checked_sub(f.evaluate(m, n).unwrap());
                assert_eq!(step.unwrap(), f.a.checked_mul_int(m as i128).unwrap());
            }
        }
    }
}

#[test]
fn armchair_minus_zigzag_is_16m() {
    for m in 2..=12 {
        for n in 1..=12 {
            let d = oracle(NanotubeKind::Armchair, m, n)
                .checked_sub(oracle(NanotubeKind::Zigzag, m, n))
                .unwrap();
            assert_eq!(d, Rational::from_integer(16 * m as i128));
        }
    }
}

#[test]
fn float_indices_are_not_exactly_fittable() {
    for index in [Index::Randic, Index::Abc] {
        let err = fit_closed_form(NanotubeKind::Armchair, index, &SAMPLES).unwrap_err();
        assert!(
            matches!(err, ClosedFormError::InconsistentSamples { .. }),
            "{index}: {err:?}"
        );
    }
}

#[test]
fn fit_rejects_bad_samples() {
    assert_eq!(
        fit_closed_form(NanotubeKind::Zigzag, Index::Azi, &[(2, 1), (2, 1)]),
        Err(ClosedFormError::SingularSystem)
    );
    assert!(matches!(
        fit_closed_form(NanotubeKind::Zigzag, Index::Azi, &[(1, 1), (2, 1)]),
        Err(ClosedFormError::InvalidSpec(_))
    ));
}

#[test]
fn stated_armchair_form_disagrees_at_smallest_point() {
    let report = verify_paper_forms(&[NanotubeKind::Armchair], 2..=3, 1..=2).unwrap();
    let stated = &report.forms[0];
    assert_eq!(stated.form.provenance, Provenance::PaperStated);
    assert_eq!(stated.verdict, Verdict::Inconsistent);
    let p = stated.points[0];
    assert_eq!((p.m, p.n), (2, 1));
    assert_eq!(p.paper_value, r(807, 16));
    assert_eq!(p.oracle_value, r(3801, 32));
    assert_eq!(p.difference, r(1614 - 3801, 32));
    assert_eq!(stated.points.len(), 4);
}

#[test]
fn adjudication_over_default_grid() {
    let report = verify_paper_forms(&NanotubeKind::ALL, 2..=12, 1..=12).unwrap();
    assert_eq!(report.forms.len(), 6);
    for f in &report.forms {
        assert_eq!(f.points.len(), 132);
        match f.form.provenance {
            Provenance::OracleFitted => {
                assert_eq!(f.verdict, Verdict::Consistent);
                assert!(f.points.iter().all(|p| p.difference.is_zero()));
            }
            _ => assert_eq!(f.verdict, Verdict::Inconsistent, "{}", f.form),
        }
    }
    assert!(!report.paper_stated_consistent());
    // The m·n coefficient is the part the published forms get right.
    assert!(paper_forms().iter().all(|f| f.a == r(2187, 64)));
}

#[test]
fn single_point_grid() {
    let report = verify_paper_forms(&[NanotubeKind::Armchair], 2..=2, 1..=1).unwrap();
    assert_eq!(report.forms.len(), 3);
    assert!(report.forms.iter().all(|f| f.points.len() == 1));
}
