//! Acceptance criteria AC1 to AC8.
//!
//! Runs without the libtest harness so that one line per criterion is
//! always printed. Exits non-zero if any criterion fails or exceeds its
//! time bound.

mod support;

use std::fs;
use std::panic;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use pronoun_logic::ast::TemporalFormula;
use pronoun_logic::free::{check_sentence, eval_term, Denotation, Environment, Model};
use pronoun_logic::linear::{check_proof, prove, Outcome, ProofTree, Sequent};
use pronoun_logic::parse::{
    parse_free, parse_free_term, parse_linear, parse_sequent, parse_temporal,
};
use pronoun_logic::temporal::{evaluate, expand_bounded, Monitor, Trace, Utterance, Verdict};
use pronoun_logic::text::Lexicon;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use support::*;

type Outcome_ = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome_, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn proved(src: &str) -> Result<ProofTree, String> {
    let seq = parse_sequent(src).map_err(|e| format!("{src}: {e}"))?;
    match prove(&seq).map_err(|e| format!("{src}: {e}"))? {
        Outcome::Proved(p) => {
            check_proof(&p).map_err(|e| format!("{src}: proof rejected: {e}"))?;
            ensure(p.conclusion == seq, || {
                format!("{src}: proof has the wrong conclusion")
            })?;
            Ok(p)
        }
        Outcome::NotDerivable => Err(format!("{src}: expected a proof")),
    }
}

fn not_derivable(src: &str) -> Result<(), String> {
    let seq = parse_sequent(src).map_err(|e| format!("{src}: {e}"))?;
    match prove(&seq).map_err(|e| format!("{src}: {e}"))? {
        Outcome::NotDerivable => Ok(()),
        Outcome::Proved(_) => Err(format!("{src}: expected NotDerivable")),
    }
}

fn ac1() -> Outcome_ {
    let p = proved("|- she/her -o (she/her (+) (she/her * they/them))")?;
    Ok(format!(
        "proof of {} nodes accepted by check_proof",
        p.node_count()
    ))
}

fn ac2() -> Outcome_ {
    for s in [
        "she/her |- she/her * she/her",
        "a/b, c/d |- a/b",
        "a/b (+) c/d |- a/b & c/d",
    ] {
        not_derivable(s)?;
    }
    for s in ["a/b & c/d |- a/b (+) c/d", "a/b * c/d |- c/d * a/b"] {
        proved(s)?;
    }
    Ok("3 refuted, 2 proved and checked".into())
}

fn ac3() -> Outcome_ {
    let atoms = [lin("a/b"), lin("c/d")];
    let sequents = sequents_up_to(9, &atoms);
    let mut positives = 0;
    for seq in &sequents {
        let expected = oracle_derivable(&seq.context, &seq.goal);
        let got = prove(seq).map_err(|e| format!("{seq}: {e}"))?;
        ensure(got.is_proved() == expected, || {
            format!(
                "{seq}: prover says {}, oracle says {expected}",
                got.is_proved()
            )
        })?;
        if let Outcome::Proved(p) = got {
            check_proof(&p).map_err(|e| format!("{seq}: {e}"))?;
            ensure(p.conclusion == *seq, || format!("{seq}: wrong conclusion"))?;
            positives += 1;
        }
    }
    Ok(format!(
        "{} sequents agree with the oracle, {positives} proofs checked",
        sequents.len()
    ))
}

struct Ac4 {
    original: TemporalFormula,
    expanded: TemporalFormula,
    alphabet: Vec<Utterance>,
    checked: usize,
}

impl Ac4 {
    fn dfs(
        &mut self,
        monitor: &Monitor,
        prefix: &mut Vec<Utterance>,
        max_len: usize,
    ) -> Result<(), String> {
        let trace = Trace::new(prefix.clone());
        let expected = evaluate(&self.expanded, &trace, 0).unwrap();
        let direct = evaluate(&self.original, &trace, 0).unwrap();
        let reference = reference_eval(&self.original, &atom_sets(&trace), 0);
        let last = monitor.clone().finish();
        let original = self.original.clone();
        let fail = |what: &str| format!("{original}: {what} on trace {:?}", trace.to_string());
        ensure(expected == direct, || {
            fail("expansion changes the truth value")
        })?;
        ensure(direct == reference, || {
            fail("evaluate disagrees with the reference semantics")
        })?;
        ensure(matches!(last, Verdict::Satisfied(_)) == expected, || {
            fail("monitor disagrees")
        })?;
        self.checked += 1;
        if prefix.len() == max_len {
            return Ok(());
        }
        for u in self.alphabet.clone() {
            let mut next = monitor.clone();
            let before = next.verdict();
            let after = next.step(&u);
            if before.is_final() {
                ensure(after == before, || {
                    fail("verdict changed after becoming final")
                })?;
            }
            prefix.push(u);
            self.dfs(&next, prefix, max_len)?;
            prefix.pop();
        }
        Ok(())
    }
}

fn ac4() -> Outcome_ {
    let atoms = [atom("she/her"), atom("they/them")];
    let formulas = temporal_up_to_depth(3, &atoms, 3);
    ensure(formulas.len() == 26_316, || {
        format!("enumerated {} formulas", formulas.len())
    })?;
    let alphabet = utterance_alphabet(&atoms);
    let mut total = 0;
    for f in formulas {
        let mut run = Ac4 {
            expanded: expand_bounded(&f),
            original: f.clone(),
            alphabet: alphabet.clone(),
            checked: 0,
        };
        run.dfs(&Monitor::new(&f), &mut Vec::new(), 4)?;
        ensure(run.checked == 341, || {
            format!("{f}: visited {} traces", run.checked)
        })?;
        total += run.checked;
    }
    Ok(format!(
        "26316 formulas x 341 traces = {total} verdicts agree"
    ))
}

fn ac5() -> Outcome_ {
    let cases: &[(&str, &[&[&str]], bool)] = &[
        (
            "[] she/her",
            &[&["she/her"], &["she/her"], &["they/them"]],
            false,
        ),
        ("<><=2 she/her", &[&["they/them"], &["she/her"]], true),
        (
            "<><=2 she/her",
            &[&["they/them"], &["they/them"], &["she/her"]],
            false,
        ),
        (
            "[](!she/her -> () she/her)",
            &[&[], &["she/her"], &["she/her"]],
            true,
        ),
        (
            "[](!she/her -> () [] she/her)",
            &[&[], &["she/her"], &["she/her"], &["she/her"]],
            true,
        ),
        (
            "[](!she/her -> () [] she/her)",
            &[&[], &["she/her"], &[], &["she/her"]],
            false,
        ),
        (
            "[] !they/them -> [] !he/him",
            &[&["she/her"], &["she/her"]],
            true,
        ),
        (
            "[] !they/them -> [] !he/him",
            &[&["they/them"], &["he/him"]],
            true,
        ),
        (
            "[] !they/them -> [] !he/him",
            &[&["she/her"], &["he/him"]],
            false,
        ),
        (
            "[] !he/him /\\ <> they/them",
            &[&["she/her"], &["they/them"]],
            true,
        ),
        (
            "[] !he/him /\\ <> they/them",
            &[&["he/him"], &["they/them"]],
            false,
        ),
        (
            "[] !he/him /\\ <> they/them",
            &[&["she/her"], &["she/her"]],
            false,
        ),
        ("[] <> she/her", &[&[], &["she/her"]], true),
        ("[] <> she/her", &[&["she/her"], &[]], false),
        (
            "[]<=2 she/her",
            &[&["she/her"], &["she/her"], &["he/him"]],
            true,
        ),
    ];
    for (src, steps, expected) in cases {
        let f = parse_temporal(src).map_err(|e| e.to_string())?;
        let trace = Trace::from_keys(steps);
        let direct = evaluate(&f, &trace, 0).unwrap();
        let via_expansion = evaluate(&expand_bounded(&f), &trace, 0).unwrap();
        ensure(direct == *expected && via_expansion == *expected, || {
            format!("{src} on {steps:?}: direct {direct}, expanded {via_expansion}, expected {expected}")
        })?;
    }
    Ok(format!("{} pattern instances", cases.len()))
}

fn ac6() -> Outcome_ {
    let many: Model = "domain: a b\npred man/1: a b"
        .parse()
        .map_err(|e| format!("{e}"))?;
    let one: Model = "domain: a b\npred man/1: b"
        .parse()
        .map_err(|e| format!("{e}"))?;
    let term = |m: &Model, src: &str| {
        eval_term(m, &Environment::new(), &parse_free_term(src).unwrap()).unwrap()
    };
    let cases = [
        (&many, "iota x. man(x)", Denotation::NonDenoting),
        (
            &many,
            "eps x. (man(x) /\\ !man(x))",
            Denotation::NonDenoting,
        ),
        (&one, "iota x. man(x)", Denotation::Value("b".into())),
    ];
    for (m, src, expected) in cases {
        let got = term(m, src);
        ensure(got == expected, || {
            format!("{src}: got {got}, expected {expected}")
        })?;
    }
    let sentence = |m: &Model, src: &str| check_sentence(m, &parse_free(src).unwrap()).unwrap();
    ensure(!sentence(&many, "exists y. y = iota x. man(x)"), || {
        "ι should not denote".into()
    })?;
    ensure(!sentence(&many, "man(eps x. (man(x) /\\ !man(x)))"), || {
        "ε atom should be false".into()
    })?;
    Ok("3 terms, 2 sentences".into())
}

fn ac7() -> Outcome_ {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0007);
    const N: usize = 10_000;
    for _ in 0..N {
        let f = random_linear(&mut rng, 6);
        let back = parse_linear(&f.render()).map_err(|e| format!("{}: {e}", f.render()))?;
        ensure(back == f, || format!("linear round trip changed `{f}`"))?;
    }
    for _ in 0..N {
        let f = random_temporal(&mut rng, 6);
        let back = parse_temporal(&f.render()).map_err(|e| format!("{}: {e}", f.render()))?;
        ensure(back == f, || format!("temporal round trip changed `{f}`"))?;
    }
    for _ in 0..N {
        let f = random_free(&mut rng, 5);
        let back = parse_free(&f.render()).map_err(|e| format!("{}: {e}", f.render()))?;
        ensure(back == f, || format!("free round trip changed `{f}`"))?;
    }
    for _ in 0..N {
        let ctx = (0..rng.gen_range(0..4))
            .map(|_| random_linear(&mut rng, 3))
            .collect();
        let s = Sequent::new(ctx, random_linear(&mut rng, 3));
        let back = parse_sequent(&s.to_string()).map_err(|e| format!("{s}: {e}"))?;
        ensure(back == s, || format!("sequent round trip changed `{s}`"))?;
    }

    // Random input: half grammar-shaped noise, half arbitrary bytes.
    const PIECES: &[&str] = &[
        "she/her", "a/b", "x", "man", "(", ")", "&", "(+)", "*", "-o", "|-", ",", "[]", "<>", "()",
        "<=", "3", "0", "!", "/\\", "\\/", "->", "iota", "eps", "forall", "exists", ".", "=", " ",
        "\n", "#", "⊸", "□", "ι", "-", "?", "domain:", "pred", ":", "|",
    ];
    let previous_hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut panics = Vec::new();
    for i in 0..N {
        let input = if i % 2 == 0 {
            (0..rng.gen_range(0..12))
                .map(|_| PIECES[rng.gen_range(0..PIECES.len())])
                .collect::<String>()
        } else {
            let bytes: Vec<u8> = (0..rng.gen_range(0..40)).map(|_| rng.gen()).collect();
            String::from_utf8_lossy(&bytes).into_owned()
        };
        let result = panic::catch_unwind(|| {
            let _ = parse_linear(&input);
            let _ = parse_temporal(&input);
            let _ = parse_free(&input);
            let _ = parse_free_term(&input);
            let _ = parse_sequent(&input);
            let _ = input.parse::<Trace>();
            let _ = input.parse::<Model>();
            let _ = input.parse::<Lexicon>();
            let _ = input.parse::<ProofTree>();
        });
        if result.is_err() {
            panics.push(input);
        }
    }
    panic::set_hook(previous_hook);
    ensure(panics.is_empty(), || {
        format!("{} inputs panicked, first: {:?}", panics.len(), panics[0])
    })?;
    Ok(format!(
        "4 x {N} round trips, {N} random inputs without a panic"
    ))
}

fn ac8() -> Outcome_ {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("samples");
    let mut dirs: Vec<PathBuf> = fs::read_dir(&root)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.join("expected.machine").exists())
        .collect();
    dirs.sort();
    let (mut violated_span, mut vacuous) = (false, false);
    for dir in &dirs {
        let golden = fs::read_to_string(dir.join("expected.machine")).map_err(|e| e.to_string())?;
        let output = Command::new(env!("CARGO_BIN_EXE_pronoun"))
            .arg("check")
            .arg("--machine")
            .arg(dir.join("spec.txt"))
            .arg(dir.join("document.txt"))
            .output()
            .map_err(|e| e.to_string())?;
        let name = dir.file_name().unwrap().to_string_lossy();
        ensure(output.stdout == golden.as_bytes(), || {
            format!(
                "{name}: output differs:\n{}",
                String::from_utf8_lossy(&output.stdout)
            )
        })?;
        let summary: Vec<&str> = golden.lines().last().unwrap_or("").split('\t').collect();
        let expected_code = if summary.get(2) == Some(&"Satisfied") {
            0
        } else {
            1
        };
        ensure(output.status.code() == Some(expected_code), || {
            format!(
                "{name}: exit {:?}, expected {expected_code}",
                output.status.code()
            )
        })?;
        let doc = fs::read_to_string(dir.join("document.txt")).unwrap();
        for line in golden.lines().rev().skip(1) {
            let cols: Vec<&str> = line.split('\t').collect();
            let (s, e): (usize, usize) = (cols[0].parse().unwrap(), cols[1].parse().unwrap());
            if cols[2] == "Violated" && s < e {
                // the span must be exactly one sentence
                let text = &doc[s..e];
                violated_span |= text.trim() == text && text.ends_with(['.', '!', '?']);
            }
        }
        vacuous |= summary.get(2) == Some(&"Satisfied") && summary.get(3) == Some(&"-");
    }
    ensure(dirs.len() >= 3, || format!("only {} samples", dirs.len()))?;
    ensure(violated_span, || {
        "no Violated sample with a sentence span".into()
    })?;
    ensure(vacuous, || "no vacuously Satisfied sample".into())?;
    Ok(format!("{} samples byte-identical to goldens", dirs.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "AC1",
            "safety proof reproduction",
            ac1,
            Duration::from_secs(1),
        ),
        ("AC2", "linearity suite", ac2, Duration::from_secs(1)),
        (
            "AC3",
            "prover oracle equivalence",
            ac3,
            Duration::from_secs(60),
        ),
        (
            "AC4",
            "monitor oracle equivalence",
            ac4,
            Duration::from_secs(120),
        ),
        ("AC5", "descriptor pattern suite", ac5, Duration::from_secs(1)),
        (
            "AC6",
            "free-logic description examples",
            ac6,
            Duration::from_secs(1),
        ),
        (
            "AC7",
            "parser round trip and robustness",
            ac7,
            Duration::from_secs(30),
        ),
        (
            "AC8",
            "end-to-end golden reports",
            ac8,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (id, name, run, bound) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let line = match result {
            Ok(detail) if elapsed <= bound => {
                format!("{id} PASS {name}: {detail} [{elapsed:.3?} <= {bound:?}]")
            }
            Ok(detail) => {
                failed += 1;
                format!("{id} FAIL {name}: {detail} but took {elapsed:.3?} > {bound:?}")
            }
            Err(why) => {
                failed += 1;
                format!("{id} FAIL {name}: {why} [{elapsed:.3?}]")
            }
        };
        println!("{line}");
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
