//! Runs every example and checks the lines it is meant to demonstrate.

#[allow(dead_code)]
#[path = "../examples/parse_descriptors.rs"]
mod parse_descriptors;

#[allow(dead_code)]
#[path = "../examples/prove_protocol.rs"]
mod prove_protocol;

#[allow(dead_code)]
#[path = "../examples/monitor_trace.rs"]
mod monitor_trace;

#[allow(dead_code)]
#[path = "../examples/free_descriptions.rs"]
mod free_descriptions;

#[allow(dead_code)]
#[path = "../examples/check_draft.rs"]
mod check_draft;

fn has(lines: &[String], needle: &str) -> bool {
    lines.iter().any(|l| l.contains(needle))
}

#[test]
fn parse_descriptors_example() {
    let out = parse_descriptors::run_example();
    assert!(has(
        &out,
        "=> she/her -o (she/her (+) (she/her * they/them))"
    ));
    assert!(has(&out, "=> [] !he/him /\\ <> they/them"));
    assert!(has(&out, "=> exists y. y = iota x. man(x)"));
    assert!(has(
        &out,
        "1:10: unexpected identifier `man` (expected '.')"
    ));
}

#[test]
fn prove_protocol_example() {
    let out = prove_protocol::run_example();
    assert!(has(&out, "proved (3 nodes): |- she/her -o"));
    assert!(has(&out, "not derivable: she/her |- she/her * she/her"));
    assert!(has(&out, "not derivable: a/b (+) c/d |- a/b & c/d"));
}

#[test]
fn monitor_trace_example() {
    let out = monitor_trace::run_example();
    assert_eq!(out[0], "trace of 4 utterances");
    // the monitor and the direct semantics agree on every line
    for line in &out[1..] {
        let satisfied = line.contains("-> Satisfied");
        assert_eq!(satisfied, line.ends_with("(direct: true)"), "{line}");
    }
    assert!(has(&out, "-> Violated at 3 (direct: false)"));
}

#[test]
fn free_descriptions_example() {
    let out = free_descriptions::run_example();
    assert!(has(
        &out,
        "two men: iota x. man(x)                 denotes non-denoting"
    ));
    assert!(has(
        &out,
        "two men: eps x. (man(x) /\\ !man(x))     denotes non-denoting"
    ));
    assert!(has(
        &out,
        "one man: iota x. man(x)                 denotes b"
    ));
}

#[test]
fn check_draft_example() {
    let out = check_draft::run_example();
    assert!(has(&out, "draft:1:50: sentence 4: uses he/him"));
    assert!(has(&out, "0\t21\tSatisfied\t-"));
}
