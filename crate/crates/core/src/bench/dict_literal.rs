// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Reading and writing results saved as a nested dictionary literal, such as
//! `{3: {'0': {'000 00': 1024}, '1': {'111 00': 1024}}}`.
//!
//! Grammar (whitespace is allowed between any two tokens):
//!
//! ```text
//! object := '{' [ entry { ',' entry } [ ',' ] ] '}'
//! entry  := key ':' value
//! key    := integer | string
//! value  := integer | object
//! string := '\'' chars '\'' | '"' chars '"'     (backslash escapes)
//! integer:= [ '-' ] digit { digit }
//! ```

use std::fmt;

use super::{ArchiveMetadata, BenchError, ResultsArchive};
use crate::code::{Layout, Logical, RawResults};
use crate::sim::Counts;

/// 1-based line and column of a character in the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Key {
    Int(i64),
    Str(String),
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Int(i) => write!(f, "{i}"),
            Key::Str(s) => write!(f, "'{s}'"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Object(Vec<Entry>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub key: Key,
    pub key_at: Position,
    pub value: Value,
    pub value_at: Position,
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    at: Position,
}

fn parse_error(at: Position, message: impl Into<String>) -> BenchError {
    BenchError::Parse {
        line: at.line,
        column: at.column,
        message: message.into(),
    }
}

fn describe(c: Option<char>) -> String {
    match c {
        Some(c) => format!("'{}'", c.escape_default()),
        None => "end of input".to_string(),
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            at: Position { line: 1, column: 1 },
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.at.line += 1;
            self.at.column = 1;
        } else {
            self.at.column += 1;
        }
        Some(c)
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t' | '\n' | '\r')) {
            self.bump();
        }
    }

    fn expect(&mut self, wanted: char) -> Result<(), BenchError> {
        self.skip_whitespace();
        let at = self.at;
        match self.bump() {
            Some(c) if c == wanted => Ok(()),
            other => Err(parse_error(
                at,
                format!("expected '{wanted}', found {}", describe(other)),
            )),
        }
    }

    fn object(&mut self) -> Result<Vec<Entry>, BenchError> {
        self.expect('{')?;
        let mut entries: Vec<Entry> = Vec::new();
        loop {
            self.skip_whitespace();
            if self.peek() == Some('}') {
                self.bump();
                return Ok(entries);
            }
            let key_at = self.at;
            let key = self.key()?;
            if entries.iter().any(|e| e.key == key) {
                return Err(parse_error(key_at, format!("duplicate key {key}")));
            }
            self.expect(':')?;
            self.skip_whitespace();
            let value_at = self.at;
            let value = self.value()?;
            entries.push(Entry {
                key,
                key_at,
                value,
                value_at,
            });
            self.skip_whitespace();
            let at = self.at;
            match self.bump() {
                Some(',') => {}
                Some('}') => return Ok(entries),
                other => {
                    return Err(parse_error(
                        at,
                        format!("expected ',' or '}}', found {}", describe(other)),
                    ));
                }
            }
        }
    }

    fn key(&mut self) -> Result<Key, BenchError> {
        match self.peek() {
            Some('\'' | '"') => self.string().map(Key::Str),
            Some('-' | '0'..='9') => self.integer().map(Key::Int),
            other => Err(parse_error(
                self.at,
                format!(
                    "expected an integer or quoted string key, found {}",
                    describe(other)
                ),
            )),
        }
    }

    fn value(&mut self) -> Result<Value, BenchError> {
        match self.peek() {
            Some('{') => self.object().map(Value::Object),
            Some('-' | '0'..='9') => self.integer().map(Value::Int),
            other => Err(parse_error(
                self.at,
                format!("expected an integer or '{{', found {}", describe(other)),
            )),
        }
    }

    fn integer(&mut self) -> Result<i64, BenchError> {
        let start = self.at;
        let mut text = String::new();
        if self.peek() == Some('-') {
            text.push('-');
            self.bump();
        }
        while let Some(c @ '0'..='9') = self.peek() {
            text.push(c);
            self.bump();
        }
        if text.is_empty() || text == "-" {
            return Err(parse_error(
                self.at,
                format!("expected a digit, found {}", describe(self.peek())),
            ));
        }
        text.parse()
            .map_err(|_| parse_error(start, format!("integer {text} is out of range")))
    }

    fn string(&mut self) -> Result<String, BenchError> {
        let start = self.at;
        let quote = self.bump().expect("caller checked for a quote");
        let mut out = String::new();
        loop {
            let at = self.at;
            match self.bump() {
                None | Some('\n') => return Err(parse_error(start, "unterminated string")),
                Some(c) if c == quote => return Ok(out),
                Some('\\') => match self.bump() {
                    Some('n') => out.push('\n'),
                    Some('t') => out.push('\t'),
                    Some('r') => out.push('\r'),
                    Some(c @ ('\\' | '\'' | '"')) => out.push(c),
                    other => {
                        return Err(parse_error(
                            at,
                            format!("unsupported escape {}", describe(other)),
                        ))
                    }
                },
                Some(c) => out.push(c),
            }
        }
    }
}

/// Parses the text into its syntax tree without interpreting it.
pub fn parse_dict_literal(text: &str) -> Result<Vec<Entry>, BenchError> {
    let mut parser = Parser::new(text);
    let entries = parser.object()?;
    parser.skip_whitespace();
    if parser.peek().is_some() {
        return Err(parse_error(
            parser.at,
            format!(
                "unexpected {} after the closing brace",
                describe(parser.peek())
            ),
        ));
    }
    Ok(entries)
}

/// Reads a results archive from dictionary-literal text.
///
/// The number of rounds of each entry is inferred from its first outcome
/// string unless `rounds` is given; every outcome is then checked against
/// the resulting layout.
pub fn ingest_dict_literal(
    text: &str,
    rounds: Option<usize>,
) -> Result<ResultsArchive, BenchError> {
    let mut archive = ResultsArchive::new(ArchiveMetadata {
        source: "dict-literal".into(),
        ..Default::default()
    });
    for entry in parse_dict_literal(text)? {
        let n = match entry.key {
            Key::Int(n) if n >= 2 => n as usize,
            ref key => {
                return Err(parse_error(
                    entry.key_at,
                    format!("expected a code size n >= 2, found {key}"),
                ))
            }
        };
        let labels = object_of(&entry, "results per encoded value")?;
        let mut results = RawResults::new();
        for label_entry in labels {
            let label = match &label_entry.key {
                Key::Str(s) => Logical::parse(s),
                Key::Int(_) => None,
            }
            .ok_or_else(|| {
                parse_error(
                    label_entry.key_at,
                    format!("expected label '0' or '1', found {}", label_entry.key),
                )
            })?;
            let mut counts = Counts::new();
            for outcome in object_of(label_entry, "outcome counts")? {
                let Key::Str(s) = &outcome.key else {
                    return Err(parse_error(
                        outcome.key_at,
                        "outcome keys must be quoted strings",
                    ));
                };
                let count = match outcome.value {
                    Value::Int(c) if c >= 0 => c as u64,
                    _ => {
                        return Err(parse_error(
                            outcome.value_at,
                            "counts must be non-negative integers",
                        ))
                    }
                };
                counts.add(s.clone(), count);
            }
            results.insert(label, counts);
        }
        let inferred = match rounds {
            Some(r) => r,
            None => {
                let first = results
                    .iter()
                    .flat_map(|(_, c)| c.outcomes())
                    .next()
                    .ok_or_else(|| {
                        BenchError::Validation(format!(
                            "entry n={n} has no outcomes to infer the number of rounds from"
                        ))
                    })?;
                let layout = Layout::infer_from_raw(first)
                    .map_err(|e| BenchError::Validation(format!("entry n={n}: {e}")))?;
                if layout.n != n {
                    return Err(BenchError::Validation(format!(
                        "entry n={n}: outcome '{first}' has a final readout of {} bits",
                        layout.n
                    )));
                }
                layout.rounds
            }
        };
        archive.insert(n, inferred, results)?;
    }
    Ok(archive)
}

fn object_of<'e>(entry: &'e Entry, what: &str) -> Result<&'e [Entry], BenchError> {
    match &entry.value {
        Value::Object(entries) => Ok(entries),
        Value::Int(_) => Err(parse_error(
            entry.value_at,
            format!("expected {{ ... }} of {what}"),
        )),
    }
}

fn quote(s: &str) -> String {
    let mut out = String::from("'");
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\'' => out.push_str("\\'"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('\'');
    out
}

/// Renders the archive's counts as a dictionary literal.
///
/// Metadata and round counts are not part of this format.
pub fn to_dict_literal(archive: &ResultsArchive) -> String {
    let entries: Vec<String> = archive
        .entries
        .iter()
        .map(|(n, entry)| {
            let labels: Vec<String> = entry
                .results
                .iter()
                .map(|(label, counts)| {
                    let outcomes: Vec<String> = counts
                        .iter()
                        .map(|(s, c)| format!("{}: {c}", quote(s)))
                        .collect();
                    format!("'{label}': {{{}}}", outcomes.join(", "))
                })
                .collect();
            format!("{n}: {{{}}}", labels.join(", "))
        })
        .collect();
    format!("{{{}}}", entries.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn position(err: BenchError) -> (usize, usize) {
        match err {
            BenchError::Parse { line, column, .. } => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn single_entry() {
        let archive = ingest_dict_literal("{3: {'0': {'000 00': 1024}}}", None).unwrap();
        assert_eq!(archive.entries.len(), 1);
        let entry = &archive.entries[&3];
        assert_eq!(entry.rounds, 1);
        assert_eq!(
            entry.results.get(Logical::Zero).unwrap().get("000 00"),
            1024
        );
    }

    #[test]
    fn empty_literal_is_an_empty_archive() {
        assert!(ingest_dict_literal("{}", None).unwrap().entries.is_empty());
        assert!(ingest_dict_literal("  {\n}\n", None)
            .unwrap()
            .entries
            .is_empty());
    }

    #[test]
    fn block_size_mismatch_names_the_string() {
        let err = ingest_dict_literal("{3: {'0': {'000 0': 1}}}", None).unwrap_err();
        assert!(matches!(err, BenchError::Validation(_)));
        assert!(err.to_string().contains("'000 0'"), "{err}");
    }

    #[test]
    fn whitespace_quotes_and_trailing_commas() {
        let text = "{\n  3 : {\n    \"1\" : { \"111 00\":5, '111 01' : 2, },\n  },\n}";
        let archive = ingest_dict_literal(text, None).unwrap();
        assert_eq!(
            archive.entries[&3]
                .results
                .get(Logical::One)
                .unwrap()
                .total(),
            7
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            position(parse_dict_literal("{3: {'0': {'000 00' 1}}}").unwrap_err()),
            (1, 21)
        );
        assert_eq!(
            position(parse_dict_literal("{3: {'0':\n  {'000 00': x}}}").unwrap_err()),
            (2, 14)
        );
        assert_eq!(
            position(parse_dict_literal("{3: {'0': {'000 00: 1}}}").unwrap_err()),
            (1, 12)
        );
        assert_eq!(
            position(parse_dict_literal("{3: 1} extra").unwrap_err()),
            (1, 8)
        );
        assert_eq!(position(parse_dict_literal("").unwrap_err()), (1, 1));
        assert_eq!(
            position(parse_dict_literal("{3: {}, 3: {}}").unwrap_err()),
            (1, 9)
        );
        assert_eq!(
            position(parse_dict_literal("{'a': 99999999999999999999}").unwrap_err()),
            (1, 7)
        );
    }

    #[test]
    fn semantic_errors_carry_positions() {
        assert_eq!(
            position(ingest_dict_literal("{'3': {}}", None).unwrap_err()),
            (1, 2)
        );
        assert_eq!(
            position(ingest_dict_literal("{3: {'2': {}}}", None).unwrap_err()),
            (1, 6)
        );
        assert_eq!(
            position(ingest_dict_literal("{3: {'0': {'000 00': -1}}}", None).unwrap_err()),
            (1, 22)
        );
        assert_eq!(
            position(ingest_dict_literal("{3: 7}", None).unwrap_err()),
            (1, 5)
        );
    }

    #[test]
    fn explicit_rounds_override_inference() {
        let text = "{3: {'0': {'000 00 00': 3}}}";
        assert_eq!(
            ingest_dict_literal(text, None).unwrap().entries[&3].rounds,
            2
        );
        assert!(ingest_dict_literal(text, Some(1)).is_err());
    }

    #[test]
    fn writer_round_trip() {
        let text = "{3: {'0': {'000 00': 1000, '001 01': 24}, '1': {'111 00': 1024}}, 5: {'0': {'00000 0000': 8}}}";
        let archive = ingest_dict_literal(text, None).unwrap();
        assert_eq!(to_dict_literal(&archive), text);
        assert!(ingest_dict_literal(&to_dict_literal(&archive), None)
            .unwrap()
            .same_counts(&archive));
    }

    #[test]
    fn escapes_survive_quoting() {
        assert_eq!(quote("a'b\\c"), "'a\\'b\\\\c'");
        let entries = parse_dict_literal("{'a\\'b\\\\c': 1}").unwrap();
        assert_eq!(entries[0].key, Key::Str("a'b\\c".into()));
    }
}
