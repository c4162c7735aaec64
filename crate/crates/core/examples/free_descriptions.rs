//! Definite and indefinite descriptions that may fail to denote.
//!
//! ```text
//! cargo run --example free_descriptions
//! ```

use pronoun_logic::free::{check_sentence, eval_term, Environment, Model};
use pronoun_logic::parse::{parse_free, parse_free_term};

pub fn run_example() -> Vec<String> {
    let two_men: Model = "domain: a b\npred man/1: a b\n".parse().unwrap();
    let one_man: Model = "domain: a b\npred man/1: b\n".parse().unwrap();
    let mut out = Vec::new();
    for (name, model) in [("two men", &two_men), ("one man", &one_man)] {
        for src in [
            "iota x. man(x)",
            "eps x. man(x)",
            "eps x. (man(x) /\\ !man(x))",
        ] {
            let t = parse_free_term(src).unwrap();
            let d = eval_term(model, &Environment::new(), &t).unwrap();
            out.push(format!("{name}: {src:30} denotes {d}"));
        }
        for src in [
            "exists y. y = iota x. man(x)",
            "man(eps x. (man(x) /\\ !man(x)))",
            "!man(eps x. (man(x) /\\ !man(x)))",
        ] {
            let v = check_sentence(model, &parse_free(src).unwrap()).unwrap();
            out.push(format!("{name}: {src:30} is {v}"));
        }
    }
    out
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
