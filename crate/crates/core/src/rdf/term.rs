use std::cmp::Ordering;
use std::fmt;

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Iri,
    BlankNode,
    Literal,
}

/// Language tag or datatype IRI attached to a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LiteralTag {
    Lang(String),
    Datatype(String),
}

/// An RDF term. Ordering is by lexical form first, so sorted node sets read
/// alphabetically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    kind: NodeKind,
    lexical: String,
    tag: Option<LiteralTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("IRI must be non-empty")]
    EmptyIri,
    #[error("IRI contains whitespace: {0:?}")]
    IriWhitespace(String),
    #[error("blank node label must be non-empty")]
    EmptyBlank,
}

impl Node {
    pub fn iri(iri: impl Into<String>) -> Result<Self, TermError> {
        let lexical = iri.into();
        if lexical.is_empty() {
            return Err(TermError::EmptyIri);
        }
        if lexical.chars().any(char::is_whitespace) {
            return Err(TermError::IriWhitespace(lexical));
        }
        Ok(Self {
            kind: NodeKind::Iri,
            lexical,
            tag: None,
        })
    }

    pub fn blank(label: impl Into<String>) -> Result<Self, TermError> {
        let lexical = label.into();
        if lexical.is_empty() {
            return Err(TermError::EmptyBlank);
        }
        Ok(Self {
            kind: NodeKind::BlankNode,
            lexical,
            tag: None,
        })
    }

    pub fn literal(lexical: impl Into<String>) -> Self {
        Self {
            kind: NodeKind::Literal,
            lexical: lexical.into(),
            tag: None,
        }
    }

    pub fn lang_literal(lexical: impl Into<String>, lang: impl Into<String>) -> Self {
        Self {
            kind: NodeKind::Literal,
            lexical: lexical.into(),
            tag: Some(LiteralTag::Lang(lang.into())),
        }
    }

    pub fn typed_literal(lexical: impl Into<String>, datatype: impl Into<String>) -> Self {
        Self {
            kind: NodeKind::Literal,
            lexical: lexical.into(),
            tag: Some(LiteralTag::Datatype(datatype.into())),
        }
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn tag(&self) -> Option<&LiteralTag> {
        self.tag.as_ref()
    }

    pub fn is_iri(&self) -> bool {
        self.kind == NodeKind::Iri
    }

    pub fn is_literal(&self) -> bool {
        self.kind == NodeKind::Literal
    }

    /// Text after the last `/` or `#` of an IRI; `None` for other kinds.
    pub fn local_name(&self) -> Option<&str> {
        if !self.is_iri() {
            return None;
        }
        Some(local_name(&self.lexical))
    }

    /// Short human label: IRI local name, literal text, or `_:label`.
    pub fn display_label(&self) -> String {
        match self.kind {
            NodeKind::Iri => local_name(&self.lexical).to_string(),
            NodeKind::BlankNode => format!("_:{}", self.lexical),
            NodeKind::Literal => self.lexical.clone(),
        }
    }
}

/// Text after the last `/` or `#`. Falls back to the whole string when that
/// suffix is empty (e.g. `http://example.org/`).
pub fn local_name(iri: &str) -> &str {
    match iri.rfind(['/', '#']) {
        Some(pos) if pos + 1 < iri.len() => &iri[pos + 1..],
        _ => iri,
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lexical
            .cmp(&other.lexical)
            .then(self.kind.cmp(&other.kind))
            .then_with(|| self.tag.cmp(&other.tag))
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes the N-Triples form of the term.
impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NodeKind::Iri => write_iri(f, &self.lexical),
            NodeKind::BlankNode => write!(f, "_:{}", self.lexical),
            NodeKind::Literal => {
                f.write_str("\"")?;
                for c in self.lexical.chars() {
                    match c {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        '\r' => f.write_str("\\r")?,
                        c => write!(f, "{c}")?,
                    }
                }
                f.write_str("\"")?;
                match &self.tag {
                    None => Ok(()),
                    Some(LiteralTag::Lang(lang)) => write!(f, "@{lang}"),
                    Some(LiteralTag::Datatype(dt)) => {
                        f.write_str("^^")?;
                        write_iri(f, dt)
                    }
                }
            }
        }
    }
}

fn write_iri(f: &mut fmt::Formatter<'_>, iri: &str) -> fmt::Result {
    f.write_str("<")?;
    for c in iri.chars() {
        match c {
            '<' | '>' | '"' | '{' | '}' | '|' | '^' | '`' | '\\' => write!(f, "\\u{:04X}", c as u32)?,
            c if (c as u32) <= 0x20 => write!(f, "\\u{:04X}", c as u32)?,
            c => write!(f, "{c}")?,
        }
    }
    f.write_str(">")
}

/// A statement. Construction enforces the positional constraints of RDF.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    subject: Node,
    predicate: Node,
    object: Node,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripleError {
    #[error("subject must not be a literal")]
    LiteralSubject,
    #[error("predicate must be an IRI")]
    NonIriPredicate,
}

impl Triple {
    pub fn new(subject: Node, predicate: Node, object: Node) -> Result<Self, TripleError> {
        if subject.is_literal() {
            return Err(TripleError::LiteralSubject);
        }
        if !predicate.is_iri() {
            return Err(TripleError::NonIriPredicate);
        }
        Ok(Self {
            subject,
            predicate,
            object,
        })
    }

    pub fn subject(&self) -> &Node {
        &self.subject
    }

    pub fn predicate(&self) -> &Node {
        &self.predicate
    }

    pub fn object(&self) -> &Node {
        &self.object
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}
