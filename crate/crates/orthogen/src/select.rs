//! Catalogue of identities and integrals, and id/glob selection over it.

use orthogen_core::identity::{registry, Family, IdentitySpec};
use orthogen_core::integral::{integral_registry, IntegralSpec};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Debug)]
pub enum Entry {
    Identity(IdentitySpec),
    Integral(IntegralSpec),
}

impl Entry {
    pub fn id(&self) -> &str {
        match self {
            Entry::Identity(s) => &s.id,
            Entry::Integral(s) => s.id,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Entry::Identity(_) => "identity",
            Entry::Integral(_) => "integral",
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Entry::Identity(s) => s.family,
            Entry::Integral(s) => s.family,
        }
    }

    pub fn anchor(&self) -> &'static str {
        match self {
            Entry::Identity(s) => s.anchor,
            Entry::Integral(s) => s.anchor,
        }
    }

    pub fn tolerance(&self) -> f64 {
        match self {
            Entry::Identity(s) => s.tier.tolerance(),
            Entry::Integral(s) => s.tolerance,
        }
    }
}

/// Identities first, then integrals, each in registry order.
pub fn catalogue() -> Vec<Entry> {
    let mut v: Vec<Entry> = registry().into_iter().map(Entry::Identity).collect();
    v.extend(integral_registry().into_iter().map(Entry::Integral));
    v
}

pub fn parse_family(tag: &str) -> Result<Family, CliError> {
    Family::from_tag(tag).ok_or_else(|| {
        CliError::config(format!(
            "unknown family `{tag}` (jacobi, gegenbauer, chebyshev, laguerre, wilson)"
        ))
    })
}

/// Entries matching any pattern (`*`, `?` and `[...]` globs, case-sensitive)
/// and the family filter, in catalogue order. An empty pattern list selects
/// everything. A pattern that matches nothing is an error, as is an empty
/// final selection.
pub fn select(patterns: &[String], family: Option<&str>) -> Result<Vec<Entry>, CliError> {
    let family = family.map(parse_family).transpose()?;
    let all = catalogue();
    let compiled = patterns
        .iter()
        .map(|p| glob::Pattern::new(p).map_err(|e| CliError::config(format!("bad pattern `{p}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    for (p, raw) in compiled.iter().zip(patterns) {
        if !all.iter().any(|e| p.matches(e.id())) {
            return Err(CliError::config(format!("unknown id `{raw}`")));
        }
    }
    let out: Vec<Entry> = all
        .into_iter()
        .filter(|e| compiled.is_empty() || compiled.iter().any(|p| p.matches(e.id())))
        .filter(|e| family.is_none_or(|f| e.family() == f))
        .collect();
    if out.is_empty() {
        return Err(CliError::config("selection is empty"));
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ListRow {
    pub id: String,
    pub kind: &'static str,
    pub family: &'static str,
    pub tolerance: f64,
    pub anchor: &'static str,
}

impl From<&Entry> for ListRow {
    fn from(e: &Entry) -> Self {
        ListRow {
            id: e.id().to_owned(),
            kind: e.kind(),
            family: e.family().tag(),
            tolerance: e.tolerance(),
            anchor: e.anchor(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn globs_and_families() {
        let ids = |v: Vec<Entry>| v.iter().map(|e| e.id().to_owned()).collect::<Vec<_>>();
        assert_eq!(ids(select(&[], Some("wilson")).unwrap()), ["WIL-2F1PROD", "WIL-GEN", "INT-WIL"]);
        let jac = ids(select(&["JAC-*".into()], None).unwrap());
        assert!(jac.iter().all(|i| i.starts_with("JAC-")));
        assert_eq!(jac.len(), 13);
        assert_eq!(catalogue().len(), 43);
    }

    #[test]
    fn unknown_or_empty_selections_fail() {
        assert!(select(&["NO-SUCH-ID".into()], None).is_err());
        assert!(select(&["GEG-POW".into()], Some("laguerre")).is_err());
        assert!(select(&[], Some("hermite")).is_err());
    }
}
