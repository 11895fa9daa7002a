//! Monoid presentations: generators, words and tagged relations.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Sequence of generator indices; the empty word is the identity.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    Unit,
    Idempotent,
}

impl GenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::Unit => "unit",
            GenKind::Idempotent => "idempotent",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "unit" => Ok(GenKind::Unit),
            "idempotent" => Ok(GenKind::Idempotent),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub kind: GenKind,
    /// Text form of the lattice element an idempotent generator stands for,
    /// used to evaluate words in a concrete monoid.
    pub value: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelFamily {
    Units,
    Idem1,
    Idem2,
    Idem3,
    Idem3a,
    RefIdem,
    Iso,
    Reduced,
}

impl RelFamily {
    pub const ALL: [RelFamily; 8] = [
        RelFamily::Units,
        RelFamily::Idem1,
        RelFamily::Idem2,
        RelFamily::Idem3,
        RelFamily::Idem3a,
        RelFamily::RefIdem,
        RelFamily::Iso,
        RelFamily::Reduced,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelFamily::Units => "Units",
            RelFamily::Idem1 => "Idem1",
            RelFamily::Idem2 => "Idem2",
            RelFamily::Idem3 => "Idem3",
            RelFamily::Idem3a => "Idem3a",
            RelFamily::RefIdem => "RefIdem",
            RelFamily::Iso => "Iso",
            RelFamily::Reduced => "Reduced",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        RelFamily::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub family: RelFamily,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(family: RelFamily, lhs: Word, rhs: Word) -> Self {
        Relation { family, lhs, rhs }
    }

    /// Same relation with sides in `(min, max)` shortlex order.
    pub fn oriented(mut self) -> Self {
        if (self.rhs.len(), &self.rhs) < (self.lhs.len(), &self.lhs) {
            core::mem::swap(&mut self.lhs, &mut self.rhs);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub family: String,
    pub params: Vec<(String, i64)>,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(family: impl Into<String>, params: Vec<(String, i64)>) -> Self {
        Presentation { family: family.into(), params, generators: Vec::new(), relations: Vec::new() }
    }

    pub fn add_generator(&mut self, name: impl Into<String>, kind: GenKind) -> usize {
        self.generators.push(Generator { name: name.into(), kind, value: None });
        self.generators.len() - 1
    }

    /// Adds an idempotent generator standing for lattice element `value`.
    pub fn add_idempotent(&mut self, name: impl Into<String>, value: impl Into<String>) -> usize {
        self.generators.push(Generator { name: name.into(), kind: GenKind::Idempotent, value: Some(value.into()) });
        self.generators.len() - 1
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn is_idempotent_word(&self, w: &[usize]) -> bool {
        w.iter().all(|&g| self.generators[g].kind == GenKind::Idempotent)
    }

    /// Appends a relation verbatim unless it is trivial or already present.
    pub fn push(&mut self, rel: Relation) {
        if rel.lhs == rel.rhs {
            return;
        }
        let dup = self.relations.iter().any(|r| {
            r.family == rel.family
                && ((r.lhs == rel.lhs && r.rhs == rel.rhs) || (r.lhs == rel.rhs && r.rhs == rel.lhs))
        });
        if !dup {
            self.relations.push(rel);
        }
    }

    /// Appends `w0 = w1 = … = wk` as the `k` consecutive equalities.
    pub fn push_chain(&mut self, family: RelFamily, words: &[Word]) {
        for w in words.windows(2) {
            self.push(Relation::new(family, w[0].clone(), w[1].clone()));
        }
    }

    /// Canonical form for relations between commuting idempotents: outside
    /// the commutation family both sides are sorted, sides ordered
    /// `(min, max)`, duplicates dropped, relations sorted by family then words.
    pub fn canonicalize_idempotent(&mut self) {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in core::mem::take(&mut self.relations) {
            let mut r = r;
            let sortable = !matches!(r.family, RelFamily::Idem1 | RelFamily::Idem2);
            if sortable && self.is_idempotent_word(&r.lhs) && self.is_idempotent_word(&r.rhs) {
                r.lhs.sort_unstable();
                r.rhs.sort_unstable();
            }
            let r = r.oriented();
            if r.lhs != r.rhs && seen.insert(r.clone()) {
                out.push(r);
            }
        }
        out.sort();
        self.relations = out;
    }

    pub fn count(&self, family: RelFamily) -> usize {
        self.relations.iter().filter(|r| r.family == family).count()
    }

    pub fn without(&self, index: usize) -> Presentation {
        let mut p = self.clone();
        p.relations.remove(index);
        p
    }

    pub fn check_indices(&self) -> Result<()> {
        let n = self.generators.len();
        for r in &self.relations {
            if let Some(&g) = r.lhs.iter().chain(&r.rhs).find(|&&g| g >= n) {
                return Err(Error::BadIndex(g));
            }
        }
        Ok(())
    }

    /// Generator names joined by spaces; `1` for the empty word.
    pub fn render_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (i, &g) in w.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&self.generators[g].name);
        }
        s
    }

    /// Unordered relation set used to compare presentations up to listing
    /// order and orientation.
    pub fn relation_set(&self) -> BTreeSet<(RelFamily, Word, Word)> {
        self.relations
            .iter()
            .map(|r| {
                let r = r.clone().oriented();
                (r.family, r.lhs, r.rhs)
            })
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family {}", self.family)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        writeln!(f)?;
        write!(f, "generators")?;
        for g in &self.generators {
            write!(f, " {}:{}", g.name, g.kind.as_str())?;
        }
        writeln!(f)?;
        for r in &self.relations {
            writeln!(f, "{:<8} {} = {}", r.family.as_str(), self.render_word(&r.lhs), self.render_word(&r.rhs))?;
        }
        Ok(())
    }
}

/// Parses a space-separated word of generator names (`1` is the identity).
pub fn parse_word(p: &Presentation, s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    s.split_whitespace()
        .map(|t| p.generator_index(t).ok_or_else(|| Error::UnmappedGenerator(t.to_string())))
        .collect()
}
