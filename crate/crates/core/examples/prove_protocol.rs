//! Linear-logic descriptors as resource protocols.
//!
//! Proves that after someone uses `she/her`, continuing with either
//! `she/her` alone or `she/her` together with `they/them` is safe, then
//! shows what linearity rules out. Every proof found is re-validated by the
//! independent checker.
//!
//! ```text
//! cargo run --example prove_protocol
//! ```

use pronoun_logic::linear::{check_proof, prove, Outcome, ProofTree};
use pronoun_logic::parse::parse_sequent;

pub fn run_example() -> Vec<String> {
    let mut out = Vec::new();
    for src in [
        "|- she/her -o (she/her (+) (she/her * they/them))",
        "a/b & c/d |- a/b (+) c/d",
        "a/b * c/d |- c/d * a/b",
        "she/her |- she/her * she/her",
        "a/b, c/d |- a/b",
        "a/b (+) c/d |- a/b & c/d",
    ] {
        let sequent = parse_sequent(src).unwrap();
        match prove(&sequent).expect("small sequents stay within budget") {
            Outcome::Proved(proof) => {
                check_proof(&proof).expect("prover output always checks");
                out.push(format!("proved ({} nodes): {sequent}", proof.node_count()));
                // the text form can be saved and checked later
                let reread: ProofTree = proof.to_string().parse().unwrap();
                assert_eq!(reread, proof);
                out.extend(proof.to_string().lines().map(|l| format!("    {l}")));
            }
            Outcome::NotDerivable => out.push(format!("not derivable: {sequent}")),
        }
    }
    out
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
