use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{OnceLock, RwLock};

use super::PolyError;

#[derive(Debug)]
struct VarInfo {
    id: u32,
    name: Box<str>,
    degree: u32,
}

#[derive(Default)]
struct Registry {
    by_key: HashMap<(Box<str>, u32), &'static VarInfo>,
    count: u32,
}

fn registry() -> &'static RwLock<Registry> {
    static REGISTRY: OnceLock<RwLock<Registry>> = OnceLock::new();
    REGISTRY.get_or_init(|| RwLock::new(Registry::default()))
}

/// A named graded generator.
///
/// Variables are interned process-wide on `(name, degree)`: asking twice for
/// `("x1", 1)` yields the same variable, while `("x1", 2)` is a different one.
/// Within a single [`RingPresentation`](super::RingPresentation) names must be
/// unique. Interned entries live for the rest of the process.
#[derive(Clone, Copy)]
pub struct Variable(&'static VarInfo);

impl Variable {
    pub fn new(name: &str, degree: u32) -> Result<Variable, PolyError> {
        if degree == 0 {
            return Err(PolyError::ZeroDegree(name.to_owned()));
        }
        if name.is_empty() {
            return Err(PolyError::EmptyName);
        }
        let key = (Box::<str>::from(name), degree);
        if let Some(info) = registry().read().expect("variable registry poisoned").by_key.get(&key) {
            return Ok(Variable(info));
        }
        let mut reg = registry().write().expect("variable registry poisoned");
        if let Some(info) = reg.by_key.get(&key) {
            return Ok(Variable(info));
        }
        let info: &'static VarInfo = Box::leak(Box::new(VarInfo { id: reg.count, name: key.0.clone(), degree }));
        reg.count += 1;
        reg.by_key.insert(key, info);
        Ok(Variable(info))
    }

    /// Like [`Variable::new`] for names known to be valid at the call site.
    ///
    /// Panics if `degree` is zero or `name` is empty.
    pub fn named(name: &str, degree: u32) -> Variable {
        Variable::new(name, degree).expect("invalid variable")
    }

    pub fn name(self) -> &'static str {
        &self.0.name
    }

    pub fn degree(self) -> u32 {
        self.0.degree
    }

    /// Ordering key used when rendering: name prefix, then numeric suffix.
    pub(crate) fn display_key(self) -> (&'static str, u64, &'static str) {
        let name = self.name();
        let digits_at = name.char_indices().find(|(_, c)| c.is_ascii_digit()).map(|(i, _)| i).unwrap_or(name.len());
        let (prefix, rest) = name.split_at(digits_at);
        let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let number = rest[..end].parse().unwrap_or(0);
        (prefix, number, &rest[end..])
    }
}

impl PartialEq for Variable {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Variable {}

impl Hash for Variable {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.id.cmp(&other.0.id)
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name(), self.degree())
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_keyed_on_name_and_degree() {
        let a = Variable::named("q_intern", 1);
        let b = Variable::named("q_intern", 1);
        let c = Variable::named("q_intern", 2);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(c.degree(), 2);
        assert_eq!(a.name(), "q_intern");
    }

    #[test]
    fn zero_degree_rejected() {
        assert!(matches!(Variable::new("bad", 0), Err(PolyError::ZeroDegree(_))));
    }

    #[test]
    fn display_key_splits_numeric_suffix() {
        assert_eq!(Variable::named("w12", 12).display_key(), ("w", 12, ""));
        assert_eq!(Variable::named("w3'", 3).display_key(), ("w", 3, "'"));
        assert!(Variable::named("w2", 2).display_key() < Variable::named("w10", 10).display_key());
    }
}
