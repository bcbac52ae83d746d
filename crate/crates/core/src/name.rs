//! Vertex names: atoms from a countable universe, plus derived names.
//!
//! A derived name is a nonempty finite set of `(name, suffix)` pairs where
//! suffix `0` prints as the empty suffix. Dynamics output vertices carry
//! derived names built over the input disk's names, so renamings of the
//! input push forward elementwise.

use std::collections::BTreeSet;
use std::fmt;

/// Suffix on a derived-name component; `0` is the empty suffix.
pub type Suffix = u8;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexName {
    Atom(String),
    /// Order-insensitive set of suffixed parent names.
    Derived(BTreeSet<(VertexName, Suffix)>),
}

impl VertexName {
    pub fn atom(s: impl Into<String>) -> Self {
        VertexName::Atom(s.into())
    }

    /// The singleton derived name `{base.suffix}`.
    pub fn child(base: &VertexName, suffix: Suffix) -> Self {
        let mut set = BTreeSet::new();
        set.insert((base.clone(), suffix));
        VertexName::Derived(set)
    }

    /// The singleton derived name `{base}` with empty suffix.
    pub fn eps(base: &VertexName) -> Self {
        VertexName::child(base, 0)
    }

    pub fn derived(parts: impl IntoIterator<Item = (VertexName, Suffix)>) -> Self {
        VertexName::Derived(parts.into_iter().collect())
    }

    pub fn is_derived(&self) -> bool {
        matches!(self, VertexName::Derived(_))
    }

    /// Largest suffix appearing anywhere in the name; atoms give 0.
    pub fn max_suffix(&self) -> Suffix {
        match self {
            VertexName::Atom(_) => 0,
            VertexName::Derived(set) => set
                .iter()
                .map(|(base, s)| (*s).max(base.max_suffix()))
                .max()
                .unwrap_or(0),
        }
    }

    /// Base names of a derived name's top-level components.
    pub fn bases(&self) -> Vec<&VertexName> {
        match self {
            VertexName::Atom(_) => Vec::new(),
            VertexName::Derived(set) => set.iter().map(|(base, _)| base).collect(),
        }
    }
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexName::Atom(s) => write!(f, "{s}"),
            VertexName::Derived(set) => {
                write!(f, "{{")?;
                for (i, (base, suffix)) in set.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    if *suffix == 0 {
                        write!(f, "{base}")?;
                    } else {
                        write!(f, "{base}.{suffix}")?;
                    }
                }
                write!(f, "}}")
            }
        }
    }
}

impl fmt::Debug for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_names_compare_setwise() {
        let u = VertexName::atom("u");
        let v = VertexName::atom("v");
        let a = VertexName::derived([(u.clone(), 1), (v.clone(), 2)]);
        let b = VertexName::derived([(v, 2), (u, 1)]);
        assert_eq!(a, b);
    }

    #[test]
    fn display_forms() {
        let u = VertexName::atom("u");
        let v = VertexName::atom("v");
        assert_eq!(u.to_string(), "u");
        assert_eq!(VertexName::eps(&u).to_string(), "{u}");
        assert_eq!(
            VertexName::derived([(u.clone(), 1), (v, 2)]).to_string(),
            "{u.1,v.2}"
        );
        assert_eq!(
            VertexName::eps(&VertexName::eps(&u)).to_string(),
            "{{u}}"
        );
    }

    #[test]
    fn atoms_sort_before_derived() {
        let a = VertexName::atom("z");
        let d = VertexName::eps(&VertexName::atom("a"));
        assert!(a < d);
    }
}
