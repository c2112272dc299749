use std::collections::BTreeSet;

use spectough::verify::{check_ids, check_one, plan, run_suite, Profile, Quantity, Status, TheoremCheck};
use spectough::Rational;

/// Fields that do not depend on timing.
fn stable(c: &TheoremCheck) -> (String, String, Quantity, Option<Quantity>, Status, String) {
    (c.id.clone(), c.instance.clone(), c.claimed.clone(), c.computed.clone(), c.status, c.notes.clone())
}

#[test]
fn desk_profile_passes_everything() {
    let report = run_suite(&Profile::desk());
    let failing: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{} {} {}: {}", c.id, c.instance, c.status, c.notes))
        .collect();
    assert!(failing.is_empty(), "{failing:#?}");
    assert!(report.all_pass());
    assert_eq!(report.checks.len(), plan().len());
    let seen: BTreeSet<&str> = report.ids().into_iter().collect();
    let known: BTreeSet<&str> = check_ids().into_iter().collect();
    assert_eq!(seen, known);
    let text = report.to_text();
    assert!(text.contains(&format!("{} checks: {} pass, 0 fail", plan().len(), plan().len())), "{text}");
}

#[test]
fn quick_profile_skips_large_instances() {
    let report = run_suite(&Profile::quick());
    assert_eq!(report.count(Status::Fail), 0);
    let skipped: Vec<&TheoremCheck> = report.checks.iter().filter(|c| c.status == Status::SkippedSize).collect();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|c| c.computed.is_none()));
    // The 27-vertex quadrangle complement is out of reach, Petersen is not.
    assert!(skipped.iter().any(|c| c.id == "Thm-GQ" && c.instance.contains("gq24")));
    assert!(report.checks.iter().any(|c| c.id == "Thm-Petersen" && c.status == Status::Pass));
}

#[test]
fn suite_is_deterministic_across_thread_counts() {
    let run = |threads| {
        let p = Profile { threads, ..Profile::quick() };
        run_suite(&p).checks.iter().map(stable).collect::<Vec<_>>()
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn tiny_budget_reports_partial_search() {
    let p = Profile { budget: 1, ..Profile::desk() };
    let c = check_one("Thm-Tv", "v=8", &p).unwrap();
    assert_eq!(c.status, Status::SkippedBudget, "{c:?}");
    assert_eq!(c.claimed, Quantity::rational(Rational::from_int(6)));
}

#[test]
fn single_checks_reject_bad_parameters() {
    let p = Profile::desk();
    assert!(check_one("Thm-L2v", "v=1", &p).is_err());
    assert!(check_one("Thm-L2v", "w=3", &p).is_err());
    assert!(check_one("No-such-check", "v=3", &p).is_err());
    assert_eq!(check_one("Thm-L2v", "v=3", &p).unwrap().status, Status::Pass);
}
