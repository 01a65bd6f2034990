use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Well-known namespaces used across the crate.
pub mod ns {
    pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
    pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const SKOS: &str = "http://www.w3.org/2004/02/skos/core#";
    pub const OBO: &str = "http://purl.obolibrary.org/obo/";
}

/// An absolute IRI, optionally remembering the prefixed form it was written in.
///
/// Equality, ordering and hashing only consider the expanded form.
#[derive(Clone)]
pub struct Iri {
    value: String,
    abbreviation: Option<String>,
}

impl Iri {
    /// Builds an IRI from an already expanded string.
    ///
    /// Returns `None` when the string is empty or has no scheme separator.
    pub fn new(value: impl Into<String>) -> Option<Self> {
        let value = value.into();
        if is_absolute(&value) {
            Some(Iri { value, abbreviation: None })
        } else {
            None
        }
    }

    pub fn with_abbreviation(mut self, abbreviation: impl Into<String>) -> Self {
        self.abbreviation = Some(abbreviation.into());
        self
    }

    pub fn as_str(&self) -> &str {
        &self.value
    }

    pub fn abbreviation(&self) -> Option<&str> {
        self.abbreviation.as_deref()
    }

    /// The part after the last `#`, `/` or `:`; falls back to the whole IRI.
    pub fn local_name(&self) -> &str {
        let cut = self.value.rfind(['#', '/']).or_else(|| self.value.rfind(':')).map(|i| i + 1).unwrap_or(0);
        let local = &self.value[cut..];
        if local.is_empty() {
            &self.value
        } else {
            local
        }
    }

    pub fn starts_with(&self, prefix: &str) -> bool {
        self.value.starts_with(prefix)
    }
}

fn is_absolute(value: &str) -> bool {
    match value.find(':') {
        Some(0) | None => false,
        Some(i) => {
            let scheme = &value[..i];
            scheme.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && scheme.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
        }
    }
}

impl PartialEq for Iri {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for Iri {}

impl Hash for Iri {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state)
    }
}

impl PartialOrd for Iri {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Iri {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.value)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value)
    }
}

impl serde::Serialize for Iri {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.value)
    }
}

/// Prefix name (without the trailing colon) to namespace expansion.
///
/// The default prefix is stored under the empty string.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrefixTable {
    entries: BTreeMap<String, String>,
}

impl PrefixTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, prefix: impl Into<String>, expansion: impl Into<String>) {
        self.entries.insert(prefix.into(), expansion.into());
    }

    pub fn get(&self, prefix: &str) -> Option<&str> {
        self.entries.get(prefix).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Expands `prefix:local` into an [`Iri`] that remembers its abbreviation.
    pub fn expand(&self, prefixed: &str) -> Option<Iri> {
        let (prefix, local) = prefixed.split_once(':')?;
        let base = self.get(prefix)?;
        Iri::new(format!("{base}{local}")).map(|iri| iri.with_abbreviation(prefixed))
    }

    /// Shortest valid `prefix:local` rendering of `iri`, if any prefix applies.
    pub fn abbreviate(&self, iri: &Iri) -> Option<String> {
        self.entries
            .iter()
            .filter(|(_, base)| !base.is_empty() && iri.as_str().starts_with(base.as_str()))
            .filter_map(|(prefix, base)| {
                let local = &iri.as_str()[base.len()..];
                is_valid_local(local).then(|| format!("{prefix}:{local}"))
            })
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
    }
}

/// Local parts we are willing to emit unbracketed; kept conservative so that
/// the lexer reads them back identically.
fn is_valid_local(local: &str) -> bool {
    let mut chars = local.chars();
    match chars.next() {
        None => true,
        Some(c) if c.is_alphanumeric() || c == '_' => {
            chars.all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.')) && !local.ends_with('.')
        }
        Some(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_relative_and_empty() {
        assert!(Iri::new("").is_none());
        assert!(Iri::new("Robot").is_none());
        assert!(Iri::new(":Robot").is_none());
        assert!(Iri::new("http://ex.org/Robot").is_some());
        assert!(Iri::new("urn:x:y").is_some());
    }

    #[test]
    fn equality_ignores_abbreviation() {
        let mut table = PrefixTable::new();
        table.insert("", "http://ex.org/o#");
        let a = table.expand(":Robot").unwrap();
        let b = Iri::new("http://ex.org/o#Robot").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.abbreviation(), Some(":Robot"));
    }

    #[test]
    fn local_names() {
        assert_eq!(Iri::new("http://ex.org/o#Robot").unwrap().local_name(), "Robot");
        assert_eq!(Iri::new("http://purl.obolibrary.org/obo/CIDO_0000001").unwrap().local_name(), "CIDO_0000001");
        assert_eq!(Iri::new("urn:isbn:123").unwrap().local_name(), "123");
    }

    #[test]
    fn abbreviation_prefers_shortest() {
        let mut table = PrefixTable::new();
        table.insert("obo", ns::OBO);
        table.insert("cido", "http://purl.obolibrary.org/obo/CIDO_");
        let iri = Iri::new("http://purl.obolibrary.org/obo/CIDO_0000001").unwrap();
        assert_eq!(table.abbreviate(&iri).as_deref(), Some("cido:0000001"));
        let odd = Iri::new("http://purl.obolibrary.org/obo/a b").unwrap();
        assert_eq!(table.abbreviate(&odd), None);
    }
}
