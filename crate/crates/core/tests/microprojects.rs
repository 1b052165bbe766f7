//! Bundled micro-projects through the harness: baseline coverage, a known-good
//! extra test, garbage and an assert-free test.

mod common;

use common::criteria::{micro_project_checks, HAND_COUNTS};
use common::tool_available;

#[test]
fn python_micro_project() {
    micro_project_checks(&HAND_COUNTS[0]).unwrap();
}

#[test]
fn java_micro_project() {
    if !tool_available(HAND_COUNTS[1].compiler) {
        // No JDK compiler here; the acceptance suite reports this as a failure.
        eprintln!("javac not found on PATH; skipping the Java micro-project");
        return;
    }
    micro_project_checks(&HAND_COUNTS[1]).unwrap();
}
