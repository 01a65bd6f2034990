/// Lowercase alphanumerics only: `"Drive-Thru COVID-19"` → `"drivethrucovid19"`.
pub fn compact(text: &str) -> String {
    text.chars().filter(|c| c.is_alphanumeric()).flat_map(char::to_lowercase).collect()
}

/// Lowercase words of a label or identifier. Splits on non-alphanumerics,
/// camel-case humps and letter/digit boundaries, so `"DriveThruTesting"` and
/// `"drive-thru testing"` give the same words.
pub fn words(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_alphanumeric() {
            if !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            continue;
        }
        if let Some(&prev) = i.checked_sub(1).and_then(|j| chars.get(j)) {
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            let hump = (prev.is_lowercase() && c.is_uppercase())
                || (prev.is_uppercase() && c.is_uppercase() && next_lower)
                || (prev.is_alphabetic() && c.is_numeric())
                || (prev.is_numeric() && c.is_alphabetic());
            if hump && !current.is_empty() {
                out.push(std::mem::take(&mut current));
            }
        }
        current.extend(c.to_lowercase());
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

/// Whether `phrase` occurs as a run of whole words in `text`.
pub fn contains_phrase(text: &str, phrase: &str) -> bool {
    let (text, phrase) = (words(text), words(phrase));
    !phrase.is_empty() && text.windows(phrase.len()).any(|w| w == phrase.as_slice())
}

/// A case-insensitive term pattern. `*` matches any run of characters;
/// everything else is compared after [`compact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    parts: Vec<String>,
}

impl Pattern {
    pub fn new(raw: &str) -> Self {
        Pattern { parts: raw.split('*').map(compact).collect() }
    }

    /// Whole-name match against an already compacted name.
    pub fn matches_compact(&self, name: &str) -> bool {
        let (first, rest) = self.parts.split_first().expect("split yields one part");
        let Some(mut tail) = name.strip_prefix(first.as_str()) else { return false };
        let Some((last, middle)) = rest.split_last() else { return tail.is_empty() };
        for part in middle {
            match tail.find(part.as_str()) {
                Some(at) => tail = &tail[at + part.len()..],
                None => return false,
            }
        }
        tail.len() >= last.len() && tail.ends_with(last.as_str())
    }

    pub fn matches(&self, name: &str) -> bool {
        self.matches_compact(&compact(name))
    }

    /// True when the pattern has no literal characters (matches everything).
    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(String::is_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compacting_drops_punctuation_and_case() {
        assert_eq!(compact("Drive-thru COVID-19 testing"), "drivethrucovid19testing");
        assert_eq!(compact("MildAndVeryMildCOVID19"), compact("mild and very mild COVID-19"));
    }

    #[test]
    fn words_agree_across_spellings() {
        assert_eq!(words("DriveThruCOVID19TestingFacility"), words("drive-thru COVID-19 testing facility"));
        assert_eq!(words("hasHTTPCode"), ["has", "http", "code"]);
        assert!(contains_phrase("Drive-thru site", "drive thru"));
        assert!(!contains_phrase("colorectal cancer", "color"));
    }

    #[test]
    fn globs() {
        assert!(Pattern::new("virus").matches("Virus"));
        assert!(!Pattern::new("virus").matches("coronavirus"));
        assert!(Pattern::new("*disorder").matches("headache disorder"));
        assert!(Pattern::new("gender*").matches("GenderType"));
        assert!(Pattern::new("*testing organi*ation").matches("COVID-19 testing organization"));
        assert!(Pattern::new("a*b*a").matches("aba"));
        assert!(!Pattern::new("a*a").matches("a"));
        assert!(Pattern::new("*").is_trivial());
    }
}
