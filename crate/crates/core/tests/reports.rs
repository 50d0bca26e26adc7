//! Report plumbing: witnesses replay, JSON round-trips, and output that does
//! not depend on the execution mode.

use lieideal::algebra::{
    direct_sum, field_algebra_default, matrix_algebra, tensor_product, triangular_algebra,
};
use lieideal::enumerate::{all_ideals_with, all_lie_ideals_with};
use lieideal::verify::{reevaluate, run_all, Config, Suite};
use lieideal::{CheckReport, Exec, Status};

fn forced() -> Config {
    Config {
        force: true,
        ..Config::default()
    }
}

#[test]
fn hypotheses_are_load_bearing() {
    // Outside their hypotheses the checks must be able to fail, otherwise a
    // pass on the intended algebras means nothing.
    let t2 = triangular_algebra(2, 2).unwrap();
    let reports = run_all(&t2, &forced());
    let failing = reports.iter().filter(|r| r.status == Status::Fail).count();
    assert!(failing >= 15, "only {failing} checks fail on T2(F2)");
    assert!(run_all(&t2, &Config::default())
        .iter()
        .all(|r| r.status != Status::Fail));
}

#[test]
fn witnesses_replay_from_serialized_reports() {
    let m22 = matrix_algebra(2, 2).unwrap();
    for alg in [
        triangular_algebra(2, 2).unwrap(),
        direct_sum(&m22, &m22).unwrap(),
    ] {
        let mut replayed = 0;
        for report in run_all(&alg, &forced())
            .into_iter()
            .filter(CheckReport::is_fail)
        {
            let line = report.to_json_line();
            let back = CheckReport::from_json_line(&line).unwrap();
            assert_eq!(back, report);
            let witness = back.witness.as_ref().unwrap();
            if witness["kind"] == "evaluation_error" {
                assert!(reevaluate(&alg, &back).is_err(), "{}", back.check);
            } else {
                assert!(
                    reevaluate(&alg, &back).unwrap(),
                    "{} did not reproduce",
                    back.check
                );
                replayed += 1;
            }
        }
        assert!(
            replayed > 10,
            "{}: {replayed} witnesses replayed",
            alg.name()
        );
    }
}

#[test]
fn passing_reports_have_no_witness() {
    let m = matrix_algebra(2, 3).unwrap();
    for r in run_all(&m, &Config::default()) {
        match r.status {
            Status::Pass => assert!(r.reason.is_none()),
            Status::Skipped => assert_eq!(r.reason.as_deref(), Some("not exceptional")),
            Status::Fail => panic!("{r}"),
        }
        assert!(r.witness.is_none());
        assert!(reevaluate(&m, &r).is_err());
    }
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let alg = tensor_product(
        &matrix_algebra(2, 2).unwrap(),
        &field_algebra_default(2, 2).unwrap(),
    )
    .unwrap();
    let json = |config: &Config| -> Vec<String> {
        run_all(&alg, config)
            .iter()
            .map(CheckReport::to_json_line)
            .collect()
    };
    let seeded = Config {
        seed: 11,
        ..Config::default()
    };
    assert_eq!(json(&seeded), json(&seeded));
    let sequential = Config {
        exec: Exec::Sequential,
        ..seeded.clone()
    };
    assert_eq!(json(&seeded), json(&sequential));
}

#[test]
fn lattices_do_not_depend_on_execution_mode() {
    let m22 = matrix_algebra(2, 2).unwrap();
    for alg in [
        direct_sum(&m22, &triangular_algebra(2, 2).unwrap()).unwrap(),
        matrix_algebra(3, 2).unwrap(),
    ] {
        assert_eq!(
            all_lie_ideals_with(&alg, 100_000, Exec::Sequential).unwrap(),
            all_lie_ideals_with(&alg, 100_000, Exec::Parallel).unwrap()
        );
        assert_eq!(
            all_ideals_with(&alg, 100_000, Exec::Sequential).unwrap(),
            all_ideals_with(&alg, 100_000, Exec::Parallel).unwrap()
        );
    }
}

#[test]
fn every_suite_reports_every_check_once() {
    let m = matrix_algebra(2, 2).unwrap();
    let reports = run_all(&m, &Config::default());
    let expected: Vec<&str> = Suite::ALL.iter().flat_map(|s| s.check_ids()).collect();
    let got: Vec<&str> = reports.iter().map(|r| r.check.as_str()).collect();
    assert_eq!(got, expected);
}
