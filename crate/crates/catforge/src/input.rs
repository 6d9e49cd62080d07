//! Monoid specs and input files.
//!
//! A monoid spec is `trivial`, `Z<n>` (cyclic group of order `n`), either of
//! those followed by `^k` for the grouplike extension `G^{*k}`, or a path to a
//! table JSON file.

use std::path::Path;

use catforge_core::{build_grouplike, is_group, Bimodule, Monoid, TwoObjectCategory};

use crate::error::CliError;
use crate::json::{from_json, BimoduleJson, CategoryJson, MonoidJson};

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn cyclic_shorthand(s: &str) -> Option<Result<Monoid, CliError>> {
    if s == "trivial" {
        return Some(Ok(Monoid::trivial()));
    }
    let digits = s.strip_prefix('Z')?;
    Some(match digits.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(Monoid::cyclic(n)),
        _ => Err(CliError::input(format!("bad cyclic group spec {s:?}; expected Z<n> with n >= 1"))),
    })
}

/// A group: `trivial`, `Z<n>` or a table file whose table is a group.
pub fn parse_group(spec: &str) -> Result<Monoid, CliError> {
    let m = match cyclic_shorthand(spec) {
        Some(m) => m?,
        None => read_monoid(Path::new(spec))?,
    };
    if is_group(&m).is_none() {
        return Err(CliError::input(format!("{spec}: table is not a group")));
    }
    Ok(m)
}

/// Any monoid: group shorthands with an optional `^k`, or a table file.
pub fn parse_monoid(spec: &str) -> Result<Monoid, CliError> {
    if let Some((base, k)) = spec.split_once('^') {
        if let Some(g) = cyclic_shorthand(base) {
            let k: usize = k.parse().map_err(|_| CliError::input(format!("bad chain length in {spec:?}")))?;
            return Ok(build_grouplike(&g?, k).expect("cyclic groups are groups").0);
        }
    }
    match cyclic_shorthand(spec) {
        Some(m) => m,
        None => read_monoid(Path::new(spec)),
    }
}

pub fn read_monoid(path: &Path) -> Result<Monoid, CliError> {
    from_json::<MonoidJson>(&read_file(path)?, "table")?.to_monoid()
}

pub fn read_bimodule(path: &Path) -> Result<Bimodule, CliError> {
    from_json::<BimoduleJson>(&read_file(path)?, "bimodule")?.to_bimodule()
}

pub fn read_category(path: &Path) -> Result<TwoObjectCategory, CliError> {
    from_json::<CategoryJson>(&read_file(path)?, "category")?.to_category()
}

#[cfg(test)]
mod tests {
    use super::*;
    use catforge_core::catalog::order_three;
    use catforge_core::canon::is_isomorphic;

    #[test]
    fn shorthands() {
        assert_eq!(parse_group("Z3").unwrap().order(), 3);
        assert_eq!(parse_group("trivial").unwrap().order(), 1);
        assert!(is_isomorphic(&parse_monoid("Z2^1").unwrap(), &order_three(5)));
        assert!(is_isomorphic(&parse_monoid("trivial^2").unwrap(), &order_three(6)));
    }

    #[test]
    fn bad_specs_are_input_errors() {
        for s in ["Z0", "Zx", "Z2^x"] {
            let e = parse_monoid(s).unwrap_err();
            assert_eq!(e.status(), crate::ExitStatus::InputError, "{s}");
        }
        assert_eq!(parse_group("/nonexistent/table.json").unwrap_err().status(), crate::ExitStatus::InputError);
    }
}
