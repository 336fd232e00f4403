//! Line-oriented N-Triples reader and writer.
//!
//! The reader accepts the W3C N-Triples grammar (IRIs, blank nodes, plain,
//! language-tagged and datatyped literals, `\u`/`\U` escapes, comments).
//! Relative IRIs such as `<a>` are accepted since no IRI resolution happens.

use std::io::{self, BufRead, Write};
use std::time::Instant;

use serde::Serialize;

use super::graph::RdfGraph;
use super::term::{Node, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Strict,
    Lenient,
}

/// Summary of one parse, emitted as `{triples, skippedLines, durationMs}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParseReport {
    pub triples: usize,
    pub skipped_lines: usize,
    pub duration_ms: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn parse_ntriples<R: BufRead>(mut reader: R, mode: ParseMode) -> Result<(RdfGraph, ParseReport), ParseError> {
    let start = Instant::now();
    let mut triples = Vec::new();
    let mut skipped = 0;
    let mut buf = Vec::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let parsed = std::str::from_utf8(&buf)
            .map_err(|e| format!("invalid UTF-8: {e}"))
            .and_then(parse_line);
        match parsed {
            Ok(Some(t)) => triples.push(t),
            Ok(None) => {}
            Err(message) => match mode {
                ParseMode::Strict => return Err(ParseError::Syntax { line: line_no, message }),
                ParseMode::Lenient => skipped += 1,
            },
        }
    }
    let graph = RdfGraph::from_triples(triples);
    let report = ParseReport {
        triples: graph.triple_count(),
        skipped_lines: skipped,
        duration_ms: start.elapsed().as_millis() as u64,
    };
    Ok((graph, report))
}

pub fn parse_str(input: &str, mode: ParseMode) -> Result<(RdfGraph, ParseReport), ParseError> {
    parse_ntriples(input.as_bytes(), mode)
}

/// Writes every triple in insertion order, one per line.
pub fn write_ntriples<W: Write>(graph: &RdfGraph, mut out: W) -> io::Result<()> {
    for t in graph.triples() {
        writeln!(out, "{}", graph.to_triple(t))?;
    }
    Ok(())
}

pub fn to_ntriples_string(graph: &RdfGraph) -> String {
    let mut out = Vec::new();
    write_ntriples(graph, &mut out).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("serializer emits UTF-8")
}

/// Parses a single line. `Ok(None)` for blank and comment-only lines.
pub fn parse_line(line: &str) -> Result<Option<Triple>, String> {
    let mut cur = Cursor::new(line);
    cur.skip_ws();
    if cur.at_end_of_statement() {
        return Ok(None);
    }
    let subject = match cur.peek() {
        Some('<') => cur.iri()?,
        Some('_') => cur.blank()?,
        Some(c) => return Err(format!("unexpected {c:?} at start of subject")),
        None => unreachable!(),
    };
    cur.skip_ws();
    let predicate = match cur.peek() {
        Some('<') => cur.iri()?,
        _ => return Err("predicate must be an IRI".into()),
    };
    cur.skip_ws();
    let object = match cur.peek() {
        Some('<') => cur.iri()?,
        Some('_') => cur.blank()?,
        Some('"') => cur.literal()?,
        Some(c) => return Err(format!("unexpected {c:?} at start of object")),
        None => return Err("missing object".into()),
    };
    cur.skip_ws();
    if cur.next() != Some('.') {
        return Err("expected '.' after object".into());
    }
    cur.skip_ws();
    if !cur.at_end_of_statement() {
        return Err("trailing content after '.'".into());
    }
    Triple::new(subject, predicate, object)
        .map(Some)
        .map_err(|e| e.to_string())
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn next(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.next();
        }
    }

    fn at_end_of_statement(&self) -> bool {
        matches!(self.peek(), None | Some('#' | '\n' | '\r'))
    }

    fn expect(&mut self, c: char) -> Result<(), String> {
        match self.next() {
            Some(got) if got == c => Ok(()),
            Some(got) => Err(format!("expected {c:?}, found {got:?}")),
            None => Err(format!("expected {c:?}, found end of line")),
        }
    }

    fn iri_text(&mut self) -> Result<String, String> {
        self.expect('<')?;
        let mut out = String::new();
        loop {
            match self.next() {
                None => return Err("unterminated IRI".into()),
                Some('>') => break,
                Some('\\') => match self.next() {
                    Some('u') => out.push(self.hex_escape(4)?),
                    Some('U') => out.push(self.hex_escape(8)?),
                    _ => return Err("invalid escape in IRI".into()),
                },
                Some(c @ ('<' | '"' | '{' | '}' | '|' | '^' | '`')) => {
                    return Err(format!("character {c:?} not allowed in IRI"))
                }
                Some(c) if (c as u32) <= 0x20 => return Err("whitespace or control character in IRI".into()),
                Some(c) => out.push(c),
            }
        }
        Ok(out)
    }

    fn iri(&mut self) -> Result<Node, String> {
        let text = self.iri_text()?;
        Node::iri(text).map_err(|e| e.to_string())
    }

    fn blank(&mut self) -> Result<Node, String> {
        self.expect('_')?;
        self.expect(':')?;
        let start = self.pos;
        let mut end = start;
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '\u{B7}') {
                self.next();
                if c != '.' {
                    end = self.pos;
                }
            } else {
                break;
            }
        }
        // Trailing dots belong to the statement, not the label.
        self.pos = end;
        let label = &self.src[start..end];
        match label.chars().next() {
            None => Err("empty blank node label".into()),
            Some('-' | '.' | '\u{B7}') => Err("invalid first character in blank node label".into()),
            Some(_) => Node::blank(label).map_err(|e| e.to_string()),
        }
    }

    fn hex_escape(&mut self, digits: usize) -> Result<char, String> {
        let mut value = 0u32;
        for _ in 0..digits {
            let d = self.next().and_then(|c| c.to_digit(16)).ok_or("invalid hex escape")?;
            value = value * 16 + d;
        }
        char::from_u32(value).ok_or_else(|| format!("invalid code point U+{value:X}"))
    }

    fn literal(&mut self) -> Result<Node, String> {
        self.expect('"')?;
        let mut lexical = String::new();
        loop {
            match self.next() {
                None | Some('\n' | '\r') => return Err("unterminated literal".into()),
                Some('"') => break,
                Some('\\') => {
                    let c = match self.next() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{C}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') => self.hex_escape(4)?,
                        Some('U') => self.hex_escape(8)?,
                        _ => return Err("invalid escape in literal".into()),
                    };
                    lexical.push(c);
                }
                Some(c) => lexical.push(c),
            }
        }
        match self.peek() {
            Some('@') => {
                self.next();
                let mut lang = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '-' {
                        lang.push(c);
                        self.next();
                    } else {
                        break;
                    }
                }
                let valid = !lang.is_empty()
                    && lang.split('-').all(|part| !part.is_empty())
                    && lang
                        .split('-')
                        .next()
                        .is_some_and(|p| p.chars().all(|c| c.is_ascii_alphabetic()));
                if !valid {
                    return Err(format!("invalid language tag {lang:?}"));
                }
                Ok(Node::lang_literal(lexical, lang))
            }
            Some('^') => {
                self.next();
                self.expect('^')?;
                let dt = self.iri_text()?;
                if dt.is_empty() {
                    return Err("empty datatype IRI".into());
                }
                Ok(Node::typed_literal(lexical, dt))
            }
            _ => Ok(Node::literal(lexical)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::LiteralTag;

    #[test]
    fn duplicates_collapse() {
        let (g, report) = parse_str("<a> <p> <b> .\n<a> <p> <b> .", ParseMode::Strict).unwrap();
        assert_eq!(g.triple_count(), 1);
        assert_eq!(report.triples, 1);
        assert_eq!(report.skipped_lines, 0);
    }

    #[test]
    fn language_tagged_literal() {
        let t = parse_line("<a> <p> \"x\"@en .").unwrap().unwrap();
        assert_eq!(t.object(), &Node::lang_literal("x", "en"));
        assert_eq!(t.object().tag(), Some(&LiteralTag::Lang("en".into())));
    }

    #[test]
    fn lenient_mode_skips_and_counts() {
        let src = "<a> <p> <b> .\n<b> <p> <c> .\n<c> <p> oops .\n<c> <p> \"d\" .\n_:x <p> <a> .\n";
        let (g, report) = parse_str(src, ParseMode::Lenient).unwrap();
        assert_eq!(g.triple_count(), 4);
        assert_eq!(report.skipped_lines, 1);
        match parse_str(src, ParseMode::Strict) {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let src = "# header\n\n<a> <p> <b> . # trailing\r\n   \n";
        let (g, _) = parse_str(src, ParseMode::Strict).unwrap();
        assert_eq!(g.triple_count(), 1);
    }

    #[test]
    fn blank_nodes_and_datatypes() {
        let t = parse_line("_:b1 <p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer>.")
            .unwrap()
            .unwrap();
        assert_eq!(t.subject(), &Node::blank("b1").unwrap());
        assert_eq!(
            t.object(),
            &Node::typed_literal("5", "http://www.w3.org/2001/XMLSchema#integer")
        );
        let t = parse_line("_:a.b <p> _:c.").unwrap().unwrap();
        assert_eq!(t.subject(), &Node::blank("a.b").unwrap());
        assert_eq!(t.object(), &Node::blank("c").unwrap());
    }

    #[test]
    fn escapes_decode() {
        let t = parse_line(r#"<http://x/é> <p> "tab\tq\"é\U0001F600" ."#)
            .unwrap()
            .unwrap();
        assert_eq!(t.subject().lexical(), "http://x/é");
        assert_eq!(t.object().lexical(), "tab\tq\"é😀");
    }

    #[test]
    fn malformed_lines() {
        for bad in [
            "<a> <p> <b>",
            "<a> <p> .",
            "\"lit\" <p> <b> .",
            "<a> _:p <b> .",
            "<a b> <p> <c> .",
            "<a> <p> \"x .",
            "<a> <p> <b> . <c>",
            "<a> <p> \"x\"@ .",
            "<a> <p> \"x\\q\" .",
            "_: <p> <b> .",
        ] {
            assert!(parse_line(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn invalid_utf8_is_a_line_error() {
        let bytes: &[u8] = b"<a> <p> <b> .\n<a> <p> \"\xff\" .\n";
        let (g, report) = parse_ntriples(bytes, ParseMode::Lenient).unwrap();
        assert_eq!((g.triple_count(), report.skipped_lines), (1, 1));
        assert!(matches!(
            parse_ntriples(bytes, ParseMode::Strict),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn report_json_shape() {
        let report = ParseReport {
            triples: 3,
            skipped_lines: 1,
            duration_ms: 0,
        };
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"triples":3,"skippedLines":1,"durationMs":0}"#
        );
    }
}
