//! Line-based presentation text.
//!
//! ```text
//! gens: a1_x h_x a1_y h_y
//! a1_x^5 h_x^1
//! h_x^-1 a1_x^-1 h_x^1 a1_x^1
//! 1
//! ```
//!
//! The first line lists generators after `gens:`. Each further line is one
//! relator written as `name^exp` tokens separated by single spaces; `1` is the
//! empty relator. Generator names may not contain whitespace.

use std::collections::HashMap;

use gm_core::presentation::{Presentation, Syllable};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct TextError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> TextError {
    TextError { line, message: message.into() }
}

pub fn format_presentation(p: &Presentation) -> String {
    let mut out = String::from("gens:");
    for g in &p.generators {
        out.push(' ');
        out.push_str(g);
    }
    out.push('\n');
    for r in &p.relators {
        if r.is_empty() {
            out.push('1');
        } else {
            let tokens: Vec<String> =
                r.iter().map(|s| format!("{}^{}", p.generators[s.generator], s.exponent)).collect();
            out.push_str(&tokens.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn parse_presentation(text: &str) -> Result<Presentation, TextError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, head) = lines.next().ok_or_else(|| err(1, "missing generator line"))?;
    let names = head.strip_prefix("gens:").ok_or_else(|| err(1, "expected `gens:`"))?;
    let generators: Vec<String> = names.split_whitespace().map(String::from).collect();
    let mut index = HashMap::new();
    for (i, g) in generators.iter().enumerate() {
        if index.insert(g.as_str(), i).is_some() {
            return Err(err(1, format!("duplicate generator {g}")));
        }
    }

    let mut relators = Vec::new();
    for (n, line) in lines {
        if line.is_empty() {
            continue;
        }
        if line == "1" {
            relators.push(Vec::new());
            continue;
        }
        let mut word = Vec::new();
        for token in line.split_whitespace() {
            let (name, exp) = token.rsplit_once('^').ok_or_else(|| err(n, format!("expected name^exp, found {token}")))?;
            let &generator = index.get(name).ok_or_else(|| err(n, format!("unknown generator {name}")))?;
            let exponent: BigInt = exp.parse().map_err(|_| err(n, format!("bad exponent {exp}")))?;
            word.push(Syllable { generator, exponent });
        }
        relators.push(word);
    }
    Ok(Presentation { generators, relators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gm_core::fixtures;
    use gm_core::presentation::build_presentation;

    #[test]
    fn round_trip() {
        for m in fixtures::all() {
            let p = build_presentation(&m);
            let text = format_presentation(&p);
            assert_eq!(parse_presentation(&text).unwrap(), p);
        }
    }

    #[test]
    fn w1_layout() {
        let text = format_presentation(&build_presentation(&fixtures::w1()));
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("gens: a1_x a2_x h_x a1_y a2_y h_y"));
        assert!(text.lines().any(|l| l.starts_with("h_x^-1 h_y^2 ")));
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_presentation("a b\n").unwrap_err().line, 1);
        assert_eq!(parse_presentation("gens: a a\n").unwrap_err().line, 1);
        assert_eq!(parse_presentation("gens: a\na^2 b^1\n").unwrap_err().line, 2);
        assert_eq!(parse_presentation("gens: a\na2\n").unwrap_err().line, 2);
        let p = parse_presentation("gens: a b\n1\na^-3 b^2\n").unwrap();
        assert_eq!(p.relators, vec![vec![], vec![Syllable::new(0, -3), Syllable::new(1, 2)]]);
    }
}
