//! Suite bookkeeping: item counts, skip handling and determinism.

use nugrass::verify::{run_bundle_suite, run_cocycle_suite, run_reduced_suite, Atlas, FullReport, Status, TriplePolicy};
use nugrass::{ChartIndex, GrassSpec, NuStructure};

fn atlas(k: usize, l: usize, m: usize, n: usize) -> Atlas {
    let space = GrassSpec::new(k, l, m, n).unwrap();
    Atlas::build(&space, &NuStructure::identity(space.beta())).unwrap()
}

fn all_standard(space: &GrassSpec, charts: &[String]) -> bool {
    charts.iter().all(|c| c.parse::<ChartIndex>().unwrap().is_standard(space))
}

#[test]
fn every_pair_and_triple_appears_once() {
    let atlas = atlas(1, 2, 3, 3);
    let report = run_cocycle_suite(&atlas, TriplePolicy::StandardOnly, 0);
    let count = |check: &str| report.items_for(check).count();
    let standard = |check: &str| report.items_for(check).filter(|i| all_standard(&atlas.space, &i.charts)).count();
    assert_eq!((count("cocycle.identity"), standard("cocycle.identity")), (20, 9));
    assert_eq!((count("cocycle.pair"), standard("cocycle.pair")), (380, 72));
    assert_eq!(count("cocycle.triple"), 504);
    let mut seen: Vec<&Vec<String>> = report.items_for("cocycle.pair").map(|i| &i.charts).collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 380);
}

#[test]
fn standard_items_pass_and_skips_are_overlaps() {
    let atlas = atlas(1, 2, 3, 3);
    let report = run_cocycle_suite(&atlas, TriplePolicy::StandardOnly, 0);
    for item in &report.items {
        if all_standard(&atlas.space, &item.charts) {
            assert_eq!(item.status, Status::Pass, "{item:?}");
        }
        if item.status == Status::Fail {
            let w = item.witness.as_ref().expect("failures carry a witness");
            assert_ne!(w.got, w.expected);
        }
    }
    assert_eq!(report.totals.pass + report.totals.fail + report.totals.skipped, report.items.len());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let json = || {
        let atlas = atlas(1, 1, 2, 2);
        let policy = TriplePolicy::Sample(20);
        let suites = vec![
            run_cocycle_suite(&atlas, policy, 9),
            run_bundle_suite(&atlas, policy, 9),
            run_reduced_suite(&atlas, 30, 9),
        ];
        serde_json::to_string_pretty(&FullReport::new(&atlas, policy, 30, 9, suites)).unwrap()
    };
    assert_eq!(json(), json());
}

#[test]
fn text_summary_lists_failures_with_witnesses() {
    let atlas = atlas(1, 1, 2, 2);
    let report = run_cocycle_suite(&atlas, TriplePolicy::StandardOnly, 0);
    let text = report.render();
    assert!(text.starts_with("suite cocycle on G_{1|1}(2|2) (nu: identity)\n"));
    let fails = report.items.iter().filter(|i| i.status == Status::Fail).count();
    assert_eq!(text.matches("  FAIL ").count(), fails);
}
