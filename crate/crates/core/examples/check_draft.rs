//! Check a draft for pronouns that contradict a referent's descriptor.
//!
//! Every pronoun in the text is attributed to the referent; there is no
//! coreference resolution.
//!
//! ```text
//! cargo run --example check_draft
//! ```

use pronoun_logic::parse::parse_temporal;
use pronoun_logic::text::{check_document, Lexicon, ReferentSpec};

pub fn run_example() -> Vec<String> {
    let spec = ReferentSpec::new(
        vec!["Alex".into()],
        parse_temporal("[](!she/her -> () she/her)").unwrap(),
        Lexicon::english(),
    )
    .unwrap();
    let mut out = Vec::new();
    for draft in [
        "Alex arrived late. He apologised. She sat down.",
        "Alex arrived late. He apologised. Nobody minded. His coat was wet.",
        "The weather was nice.",
    ] {
        let report = check_document(draft, &spec);
        out.push(draft.to_string());
        out.extend(
            report
                .render_human(draft, "draft", &spec)
                .lines()
                .map(|l| format!("    {l}")),
        );
        out.extend(
            report
                .render_machine(draft)
                .lines()
                .map(|l| format!("    {l}")),
        );
    }
    out
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
