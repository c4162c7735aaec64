use std::fmt;

use super::ParseError;
use crate::atom::PronounAtom;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Atom(PronounAtom),
    Ident(String),
    Int(String),
    // keywords
    True,
    False,
    Iota,
    Eps,
    Forall,
    Exists,
    // linear connectives
    With,
    Plus,
    Star,
    Lolli,
    // temporal / propositional
    Always,
    Eventually,
    Next,
    Le,
    Bang,
    AndOp,
    OrOp,
    Arrow,
    // punctuation
    LParen,
    RParen,
    Comma,
    Dot,
    Equals,
    Turnstile,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Atom(a) => return write!(f, "pronoun atom `{a}`"),
            Tok::Ident(x) => return write!(f, "identifier `{x}`"),
            Tok::Int(n) => return write!(f, "number `{n}`"),
            Tok::True => "`true`",
            Tok::False => "`false`",
            Tok::Iota => "`iota`",
            Tok::Eps => "`eps`",
            Tok::Forall => "`forall`",
            Tok::Exists => "`exists`",
            Tok::With => "'&'",
            Tok::Plus => "'(+)'",
            Tok::Star => "'*'",
            Tok::Lolli => "'-o'",
            Tok::Always => "'[]'",
            Tok::Eventually => "'<>'",
            Tok::Next => "'()'",
            Tok::Le => "'<='",
            Tok::Bang => "'!'",
            Tok::AndOp => "'/\\'",
            Tok::OrOp => "'\\/'",
            Tok::Arrow => "'->'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::Comma => "','",
            Tok::Dot => "'.'",
            Tok::Equals => "'='",
            Tok::Turnstile => "'|-'",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub start: usize,
}

const PUNCT: &[(&str, Tok)] = &[
    ("(+)", Tok::Plus),
    ("()", Tok::Next),
    ("[]", Tok::Always),
    ("<>", Tok::Eventually),
    ("<=", Tok::Le),
    ("-o", Tok::Lolli),
    ("->", Tok::Arrow),
    ("/\\", Tok::AndOp),
    ("\\/", Tok::OrOp),
    ("|-", Tok::Turnstile),
    ("&", Tok::With),
    ("*", Tok::Star),
    ("!", Tok::Bang),
    ("(", Tok::LParen),
    (")", Tok::RParen),
    (",", Tok::Comma),
    (".", Tok::Dot),
    ("=", Tok::Equals),
];

fn unicode_alias(c: char) -> Option<Tok> {
    Some(match c {
        '⊕' => Tok::Plus,
        '⊗' => Tok::Star,
        '⊸' => Tok::Lolli,
        '□' => Tok::Always,
        '◇' => Tok::Eventually,
        '○' => Tok::Next,
        '≤' => Tok::Le,
        '¬' => Tok::Bang,
        '∧' => Tok::AndOp,
        '∨' => Tok::OrOp,
        '→' => Tok::Arrow,
        '⊢' => Tok::Turnstile,
        'ι' => Tok::Iota,
        'ε' => Tok::Eps,
        '∀' => Tok::Forall,
        '∃' => Tok::Exists,
        _ => return None,
    })
}

fn keyword(word: &str) -> Option<Tok> {
    Some(match word {
        "true" => Tok::True,
        "false" => Tok::False,
        "iota" => Tok::Iota,
        "eps" => Tok::Eps,
        "forall" => Tok::Forall,
        "exists" => Tok::Exists,
        _ => return None,
    })
}

/// Splits `input` into tokens. `#` starts a comment running to end of line.
pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < input.len() {
        let rest = &input[i..];
        let c = rest.chars().next().expect("nonempty");
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        if c == '#' {
            i += rest.find('\n').unwrap_or(rest.len());
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            let word = &rest[..end];
            let letters_only = word.bytes().all(|b| b.is_ascii_alphabetic());
            if letters_only && bytes.get(i + end) == Some(&b'/') {
                let obj = &input[i + end + 1..];
                let obj_len = obj
                    .find(|ch: char| !ch.is_ascii_alphabetic())
                    .unwrap_or(obj.len());
                if obj_len > 0 {
                    let atom = PronounAtom::new(word, &obj[..obj_len])
                        .expect("letters on both sides of the slash");
                    out.push(Token {
                        tok: Tok::Atom(atom),
                        start: i,
                    });
                    i += end + 1 + obj_len;
                    continue;
                }
            }
            let tok = keyword(word).unwrap_or_else(|| Tok::Ident(word.to_string()));
            out.push(Token { tok, start: i });
            i += end;
            continue;
        }
        if c.is_ascii_digit() {
            let end = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            out.push(Token {
                tok: Tok::Int(rest[..end].to_string()),
                start: i,
            });
            i += end;
            continue;
        }
        for (text, tok) in PUNCT {
            if rest.starts_with(text) {
                out.push(Token {
                    tok: tok.clone(),
                    start: i,
                });
                i += text.len();
                continue 'outer;
            }
        }
        if let Some(tok) = unicode_alias(c) {
            out.push(Token { tok, start: i });
            i += c.len_utf8();
            continue;
        }
        return Err(ParseError::new(
            input,
            i,
            format!("unknown character {c:?}"),
            Vec::new(),
        ));
    }
    Ok(out)
}
