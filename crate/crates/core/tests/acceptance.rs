//! Acceptance suite: runs every verification criterion and prints one
//! pass/fail line per criterion. Every comparison is exact; there are no
//! tolerances to tune.

use lie_census::verify::verify_all;
use lie_census::Caps;

#[test]
fn acceptance_criteria() {
    let results = verify_all(&Caps::default());
    assert_eq!(results.len(), 8);
    let mut all_passed = true;
    for r in &results {
        println!(
            "[{}] criterion {}: {} — {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        );
        all_passed &= r.passed;
    }
    assert!(all_passed, "at least one acceptance criterion failed");
}
