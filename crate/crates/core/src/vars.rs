//! Variable tables: a totally ordered, named set of variables. Index 0 is
//! the greatest variable in the lexicographic order.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableTable {
    names: Vec<String>,
    /// Optional single-letter alias per variable, e.g. `a` for `x11`.
    aliases: Vec<Option<char>>,
}

impl VariableTable {
    pub fn new(names: Vec<String>) -> Result<Arc<Self>, String> {
        let mut seen = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric()) {
                return Err(format!("invalid variable name {n:?}"));
            }
            if seen.insert(n.clone(), i).is_some() {
                return Err(format!("duplicate variable name {n:?}"));
            }
        }
        let aliases = vec![None; names.len()];
        Ok(Arc::new(VariableTable { names, aliases }))
    }

    /// Convenience constructor from string slices.
    pub fn of(names: &[&str]) -> Arc<Self> {
        VariableTable::new(names.iter().map(|s| s.to_string()).collect()).expect("valid names")
    }

    pub fn with_aliases(
        names: Vec<String>,
        aliases: Vec<Option<char>>,
    ) -> Result<Arc<Self>, String> {
        if names.len() != aliases.len() {
            return Err("alias list length mismatch".into());
        }
        let base = VariableTable::new(names)?;
        let mut table = (*base).clone();
        let mut seen = BTreeMap::new();
        for (i, a) in aliases.iter().enumerate() {
            if let Some(c) = a {
                if !c.is_ascii_lowercase() {
                    return Err(format!("alias {c:?} is not a lowercase letter"));
                }
                if seen.insert(*c, i).is_some() {
                    return Err(format!("duplicate alias {c:?}"));
                }
            }
        }
        table.aliases = aliases;
        Ok(Arc::new(table))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alias(&self, idx: usize) -> Option<char> {
        self.aliases[idx]
    }

    /// Resolve an identifier, accepting both primary names and aliases.
    pub fn index_of(&self, ident: &str) -> Option<usize> {
        if let Some(i) = self.names.iter().position(|n| n == ident) {
            return Some(i);
        }
        let mut chars = ident.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            return self.aliases.iter().position(|a| *a == Some(c));
        }
        None
    }

    /// New table with a fresh variable prepended as the greatest one.
    /// The requested name is decorated until it avoids collisions.
    pub fn prepend_fresh(&self, base_name: &str) -> (Arc<Self>, String) {
        let mut name = base_name.to_string();
        let mut k = 0usize;
        while self.index_of(&name).is_some() {
            name = format!("{base_name}{k}");
            k += 1;
        }
        let mut names = Vec::with_capacity(self.len() + 1);
        names.push(name.clone());
        names.extend(self.names.iter().cloned());
        let mut aliases = Vec::with_capacity(self.len() + 1);
        aliases.push(None);
        aliases.extend(self.aliases.iter().cloned());
        let table = Arc::new(VariableTable { names, aliases });
        (table, name)
    }

    /// Table consisting of the variables from `start` on (the trailing
    /// subring of the lex order).
    pub fn suffix(&self, start: usize) -> Arc<Self> {
        Arc::new(VariableTable {
            names: self.names[start..].to_vec(),
            aliases: self.aliases[start..].to_vec(),
        })
    }
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(" > "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name_and_alias() {
        let t = VariableTable::with_aliases(
            vec!["x11".into(), "x12".into()],
            vec![Some('a'), Some('b')],
        )
        .unwrap();
        assert_eq!(t.index_of("x11"), Some(0));
        assert_eq!(t.index_of("b"), Some(1));
        assert_eq!(t.index_of("c"), None);
    }

    #[test]
    fn rejects_duplicates() {
        assert!(VariableTable::new(vec!["x".into(), "x".into()]).is_err());
    }

    #[test]
    fn fresh_variable_avoids_collisions() {
        let t = VariableTable::of(&["t", "x"]);
        let (t2, name) = t.prepend_fresh("t");
        assert_eq!(name, "t0");
        assert_eq!(t2.name(0), "t0");
        assert_eq!(t2.name(1), "t");
    }
}
