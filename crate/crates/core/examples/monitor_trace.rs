//! Monitor a conversation against temporal descriptors, one utterance at a
//! time, and compare with the direct semantics on the whole trace.
//!
//! ```text
//! cargo run --example monitor_trace
//! ```

use pronoun_logic::parse::parse_temporal;
use pronoun_logic::temporal::{evaluate, Monitor, Trace};

pub fn run_example() -> Vec<String> {
    let trace: Trace = "she/her\n-\nshe/her they/them\nhe/him\n".parse().unwrap();
    let mut out = vec![format!("trace of {} utterances", trace.len())];
    for src in [
        "[] !he/him",
        "<> they/them",
        "[](!she/her -> () she/her)",
        "<><=2 they/them",
        "[]<=3 she/her",
    ] {
        let formula = parse_temporal(src).unwrap();
        let mut monitor = Monitor::new(&formula);
        let steps: Vec<&str> = trace
            .utterances
            .iter()
            .map(|u| monitor.step(u).kind())
            .collect();
        let last = monitor.finish();
        let direct = evaluate(&formula, &trace, 0).unwrap();
        out.push(format!(
            "{src:28} {} -> {last} (direct: {direct})",
            steps.join(", ")
        ));
    }
    out
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
