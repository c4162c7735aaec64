//! Parse descriptors in each of the three logics and print their canonical
//! forms. Unicode connectives are accepted on input.
//!
//! ```text
//! cargo run --example parse_descriptors
//! ```

use pronoun_logic::parse::{parse_free, parse_linear, parse_sequent, parse_temporal};

pub fn run_example() -> Vec<String> {
    let mut out = Vec::new();
    for src in [
        "she/her & (she/her * they/them)",
        "she/her ⊸ she/her ⊕ (she/her ⊗ they/them)",
        "a/b -o c/d -o e/f",
    ] {
        out.push(format!(
            "linear    {src:45} => {}",
            parse_linear(src).unwrap()
        ));
    }
    for src in [
        "□ ¬he/him ∧ ◇ they/them",
        "[](!she/her -> ()[] she/her)",
        "<><=5 she/her",
    ] {
        out.push(format!(
            "temporal  {src:45} => {}",
            parse_temporal(src).unwrap()
        ));
    }
    for src in ["∃y. y = ιx. man(x)", "man(eps x. (man(x) /\\ !man(x)))"] {
        out.push(format!(
            "free      {src:45} => {}",
            parse_free(src).unwrap()
        ));
    }
    let seq = parse_sequent("he/him -o she/her, he/him |- she/her").unwrap();
    out.push(format!(
        "sequent   {} assumption(s) => {seq}",
        seq.context.len()
    ));

    // errors carry a position and what was expected there
    let err = parse_free("forall x man(x)").unwrap_err();
    out.push(format!("error     forall x man(x) => {err}"));
    out
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
