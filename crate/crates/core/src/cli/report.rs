use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::dims::{DimBound, DimFact};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Human,
    /// One `key=value` pair per line; multi-line values as indented blocks.
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entry {
    Value(String, String),
    Bound(String, DimBound),
    Block(String, String),
}

/// Everything a command prints: results, the rules they rest on, and
/// optionally a derivation tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    entries: Vec<Entry>,
    pub notes: Vec<String>,
    pub citations: Vec<String>,
    tree: Option<(String, String)>,
}

impl Report {
    /// `args` and the contents of every input file go into the digest.
    pub fn new(args: &[String], inputs: &[String]) -> Self {
        let mut h = Sha256::new();
        for a in args {
            h.update(a.as_bytes());
            h.update([0]);
        }
        for i in inputs {
            h.update(i.len().to_le_bytes());
            h.update(i.as_bytes());
        }
        Report {
            command: args.join(" "),
            inputs_digest: format!("sha256:{:x}", h.finalize()),
            ..Default::default()
        }
    }

    pub fn value(&mut self, key: &str, value: impl ToString) {
        self.entries
            .push(Entry::Value(key.into(), value.to_string()));
    }

    pub fn bound(&mut self, key: &str, bound: DimBound) {
        self.entries.push(Entry::Bound(key.into(), bound));
    }

    /// Multi-line output such as a matrix or a lattice file.
    pub fn block(&mut self, key: &str, text: impl Into<String>) {
        self.entries.push(Entry::Block(key.into(), text.into()));
    }

    pub fn cite(&mut self, citation: &str) {
        if !self.citations.iter().any(|c| c == citation) {
            self.citations.push(citation.to_string());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records a bound under `key` along with its citation and notes.
    pub fn fact(&mut self, key: &str, fact: &DimFact) {
        self.bound(key, fact.bound);
        self.cite(fact.citation);
        for n in &fact.notes {
            self.note(n.clone());
        }
        if fact.degenerate {
            self.note(format!(
                "{}: degenerate value outside the formula range",
                fact.quantity
            ));
        }
    }

    pub fn tree(&mut self, indented: String, structured: String) {
        self.tree = Some((indented, structured));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.render_human(),
            Format::Structured => self.render_structured(),
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match e {
                Entry::Value(k, v) => {
                    let _ = writeln!(out, "{k} = {v}");
                }
                Entry::Bound(k, b) => {
                    let _ = writeln!(out, "{k} {}", b.relation());
                }
                Entry::Block(k, text) => {
                    if !k.is_empty() {
                        let _ = writeln!(out, "{k}:");
                    }
                    out.push_str(text);
                    if !text.ends_with('\n') {
                        out.push('\n');
                    }
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        if let Some((tree, _)) = &self.tree {
            out.push_str("derivation:\n");
            for line in tree.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        for c in &self.citations {
            let _ = writeln!(out, "cite: {c}");
        }
        out
    }

    fn render_structured(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={}", self.command);
        let _ = writeln!(out, "inputs={}", self.inputs_digest);
        for e in &self.entries {
            match e {
                Entry::Value(k, v) => {
                    let _ = writeln!(out, "{k}={v}");
                }
                Entry::Bound(k, b) => {
                    if let Some(v) = b.exact_value() {
                        let _ = writeln!(out, "{k}={v}");
                    }
                    let _ = writeln!(out, "{k}.lower={}", b.lower());
                    let upper = b.upper().map_or("inf".to_string(), |u| u.to_string());
                    let _ = writeln!(out, "{k}.upper={upper}");
                }
                Entry::Block(k, text) => {
                    let key = if k.is_empty() { "output" } else { k };
                    let _ = writeln!(out, "{key}:");
                    for line in text.lines() {
                        let _ = writeln!(out, "  {line}");
                    }
                }
            }
        }
        for (i, n) in self.notes.iter().enumerate() {
            let _ = writeln!(out, "note.{i}={n}");
        }
        for (i, c) in self.citations.iter().enumerate() {
            let _ = writeln!(out, "citation.{i}={c}");
        }
        if let Some((_, structured)) = &self.tree {
            out.push_str(structured);
        }
        out
    }
}
