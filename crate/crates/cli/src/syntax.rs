//! The line-oriented `.inf` system format and the colist literal.
//!
//! ```text
//! # comment
//! judgments: a b c
//! rule: b <- a
//! corule: c <-
//! spec: a b
//! ```

use std::collections::HashMap;
use std::fmt::Write;

use gis_core::{Colist, InferenceSystem, JudgmentSet, Rule};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `judgments:` header before anything else")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate `judgments:` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: `judgments:` header declares no judgments")]
    EmptyHeader { line: usize },
    #[error("line {line}, column {column}: judgment `{name}` declared twice")]
    DuplicateJudgment {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("line {line}, column {column}: unknown judgment `{name}`")]
    UnknownName {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("line {line}, column {column}: expected `<conclusion> <- <premise>*`")]
    MalformedArrow { line: usize, column: usize },
    #[error("line {line}: duplicate `spec:` line")]
    DuplicateSpec { line: usize },
    #[error("line {line}, column {column}: unknown directive `{directive}`")]
    UnknownDirective {
        directive: String,
        line: usize,
        column: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColistError {
    #[error("column {column}: `{token}` is not a natural number")]
    NotANumber { token: String, column: usize },
    #[error("loop after `|` is empty")]
    EmptyLoop,
    #[error("column {column}: more than one `|`")]
    ExtraBar { column: usize },
}

/// A parsed `.inf` file. Judgment ids follow declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub system: InferenceSystem,
    pub spec: Option<JudgmentSet>,
}

impl SystemFile {
    pub fn names(&self) -> &[String] {
        self.system.labels().unwrap_or(&[])
    }
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(text: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices().chain([(text.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((offset + text[..s].chars().count() + 1, &text[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out.into_iter()
}

pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut header_seen = false;
    let mut rules = Vec::new();
    let mut corules = Vec::new();
    let mut spec: Option<Vec<usize>> = None;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let (directive, body) = match content.split_once(':') {
            Some((d, b)) => (d.trim(), b),
            None => (content.trim(), ""),
        };
        // column just past the colon, in characters
        let body_offset = content.len() - body.len();
        let body_col = content[..body_offset].chars().count();
        let unknown_directive = || ParseError::UnknownDirective {
            directive: directive.to_string(),
            line,
            column: content[..lead].chars().count() + 1,
        };
        if !content.contains(':') {
            return Err(if header_seen {
                unknown_directive()
            } else {
                ParseError::MissingHeader { line }
            });
        }
        if !header_seen && directive != "judgments" {
            return Err(ParseError::MissingHeader { line });
        }
        let resolve = |column: usize, name: &str| -> Result<usize, ParseError> {
            ids.get(name)
                .copied()
                .ok_or_else(|| ParseError::UnknownName {
                    name: name.to_string(),
                    line,
                    column,
                })
        };
        match directive {
            "judgments" => {
                if header_seen {
                    return Err(ParseError::DuplicateHeader { line });
                }
                header_seen = true;
                for (column, name) in tokens(body, body_col) {
                    if ids.insert(name.to_string(), names.len()).is_some() {
                        return Err(ParseError::DuplicateJudgment {
                            name: name.to_string(),
                            line,
                            column,
                        });
                    }
                    names.push(name.to_string());
                }
                if names.is_empty() {
                    return Err(ParseError::EmptyHeader { line });
                }
            }
            "rule" | "corule" => {
                let toks: Vec<(usize, &str)> = tokens(body, body_col).collect();
                let end_col = raw.chars().count() + 1;
                let rule = match toks.as_slice() {
                    [(cc, conclusion), (_, "<-"), premises @ ..] => {
                        if let Some(&(column, _)) = premises.iter().find(|(_, t)| *t == "<-") {
                            return Err(ParseError::MalformedArrow { line, column });
                        }
                        let conclusion = resolve(*cc, conclusion)?;
                        let premises = premises
                            .iter()
                            .map(|&(c, n)| resolve(c, n))
                            .collect::<Result<Vec<_>, _>>()?;
                        Rule::new(premises, conclusion)
                    }
                    [(column, "<-"), ..] => {
                        return Err(ParseError::MalformedArrow {
                            line,
                            column: *column,
                        })
                    }
                    [_, (column, _), ..] => {
                        return Err(ParseError::MalformedArrow {
                            line,
                            column: *column,
                        })
                    }
                    _ => {
                        return Err(ParseError::MalformedArrow {
                            line,
                            column: end_col,
                        })
                    }
                };
                if directive == "rule" {
                    rules.push(rule);
                } else {
                    corules.push(rule);
                }
            }
            "spec" => {
                if spec.is_some() {
                    return Err(ParseError::DuplicateSpec { line });
                }
                spec = Some(
                    tokens(body, body_col)
                        .map(|(c, n)| resolve(c, n))
                        .collect::<Result<_, _>>()?,
                );
            }
            _ => return Err(unknown_directive()),
        }
    }
    if !header_seen {
        return Err(ParseError::MissingHeader {
            line: text.lines().count().max(1),
        });
    }
    let n = names.len();
    let system = InferenceSystem::new(n, rules, corules)
        .and_then(|s| s.with_labels(names))
        .expect("parsed ids are in range and names are unique");
    Ok(SystemFile {
        system,
        spec: spec.map(|ids| JudgmentSet::from_ids(n, ids)),
    })
}

/// Canonical text of a system file; parsing it yields an identical file.
pub fn render_system(file: &SystemFile) -> String {
    let sys = &file.system;
    let name = |j| sys.display_name(j);
    let mut out = String::new();
    let _ = writeln!(out, "judgments: {}", file.names().join(" "));
    for (kind, rules) in [("rule", sys.rules()), ("corule", sys.corules())] {
        for r in rules {
            let mut line = format!("{kind}: {} <-", name(r.conclusion()));
            for &p in r.premises() {
                line.push(' ');
                line.push_str(&name(p));
            }
            let _ = writeln!(out, "{line}");
        }
    }
    if let Some(spec) = &file.spec {
        let mut line = String::from("spec:");
        for j in spec.iter() {
            line.push(' ');
            line.push_str(&name(j));
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

/// `a b` is finite, `a b | c d` a lasso with loop `c d`, `| c` a lasso with empty prefix.
pub fn parse_colist(text: &str) -> Result<Colist, ColistError> {
    let mut parts = text.splitn(3, '|');
    let head = parts.next().unwrap_or("");
    let tail = parts.next();
    if parts.next().is_some() {
        let first = text.find('|').unwrap_or(0);
        let second = first + 1 + text[first + 1..].find('|').unwrap_or(0);
        return Err(ColistError::ExtraBar {
            column: text[..second].chars().count() + 1,
        });
    }
    let numbers = |part: &str, offset: usize| -> Result<Vec<u64>, ColistError> {
        tokens(part, offset)
            .map(|(column, t)| {
                t.parse::<u64>().map_err(|_| ColistError::NotANumber {
                    token: t.to_string(),
                    column,
                })
            })
            .collect()
    };
    let prefix = numbers(head, 0)?;
    match tail {
        None => Ok(Colist::finite(prefix)),
        Some(tail) => {
            let cycle = numbers(tail, head.chars().count() + 1)?;
            Colist::lasso(prefix, cycle).map_err(|_| ColistError::EmptyLoop)
        }
    }
}
