//! Reference counts for small grouplike cases, recomputed and compared row by row.

use std::collections::BTreeSet;

use catforge_core::bimodule::Normalization;
use catforge_core::canon::canonical_form;
use catforge_core::catalog::{order_three, order_three_all, z3_involution_bimodule, z3_shift_bimodule};
use catforge_core::engine::{construct_all, CountOptions};
use catforge_core::{
    center, check_idempotent_lemmas, check_orbit_laws, detect_grouplike, Monoid, TwoObjectCategory,
};
use serde::Serialize;

use crate::error::CliError;
use crate::parallel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub id: String,
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

fn row(id: &str, what: &str, expected: impl ToString, actual: impl ToString) -> Row {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    Row { id: id.into(), what: what.into(), matches: expected == actual, expected, actual }
}

/// Catalog names `C1..C7` of order-three monoids whose structure has `k ≥ 1`.
pub fn grouplike_with_chain() -> Vec<String> {
    order_three_all()
        .iter()
        .enumerate()
        .filter(|(_, m)| detect_grouplike(m).is_some_and(|s| s.k() >= 1))
        .map(|(i, _)| format!("C{}", i + 1))
        .collect()
}

/// Every grouplike monoid of order at most 3, one per isomorphism class.
pub fn small_grouplike(budget: u64) -> Result<Vec<Monoid>, CliError> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.extend(parallel::enumerate_monoids(n, budget)?.into_iter().filter(|m| detect_grouplike(m).is_some()));
    }
    Ok(out)
}

/// Every constructed category over the bimodule lists between `a` and `b`.
pub fn constructed_between(a: &Monoid, b: &Monoid, carrier: usize, normalization: Normalization, budget: u64) -> Result<Vec<TwoObjectCategory>, CliError> {
    let ls = parallel::enumerate_bimodules(a, b, carrier, normalization, budget)?;
    let rs = parallel::enumerate_bimodules(b, a, carrier, normalization, budget)?;
    let mut out = Vec::new();
    for l in &ls {
        for r in &rs {
            out.extend(construct_all(l, r)?.into_iter().map(|(_, c)| c));
        }
    }
    Ok(out)
}

/// Number of categories failing any structural law.
pub fn law_failures(cats: &[TwoObjectCategory]) -> Result<usize, CliError> {
    let mut failures = 0;
    for c in cats {
        let mut rep = check_idempotent_lemmas(c).map_err(|e| CliError::input(e.to_string()))?;
        rep.merge(check_orbit_laws(c).map_err(|e| CliError::input(e.to_string()))?);
        failures += usize::from(!rep.passed());
    }
    Ok(failures)
}

/// Order-three monoids `C_i` such that some pair of 3-element bimodules
/// between `C5` and `C_i` has a completion.
pub fn c5_partners(budget: u64) -> Result<Vec<String>, CliError> {
    let c5 = order_three(5);
    let mut out = Vec::new();
    for (i, m) in order_three_all().iter().enumerate() {
        let ls = parallel::enumerate_bimodules(&c5, m, 3, Normalization::UpToRelabeling, budget)?;
        let rs = parallel::enumerate_bimodules(m, &c5, 3, Normalization::UpToRelabeling, budget)?;
        let mut found = false;
        'pairs: for l in &ls {
            for r in &rs {
                if !parallel::search_completions(l, r, budget)?.is_empty() {
                    found = true;
                    break 'pairs;
                }
            }
        }
        if found {
            out.push(format!("C{}", i + 1));
        }
    }
    Ok(out)
}

/// Recomputes every row. `normalization` applies to the normalized bimodule
/// row and both counts.
pub fn run(normalization: Normalization, budget: u64) -> Result<Vec<Row>, CliError> {
    let mut rows = Vec::new();

    let three = parallel::enumerate_monoids(3, budget)?;
    rows.push(row("1", "monoids of order 3 up to isomorphism", 7, three.len()));
    let found: BTreeSet<_> = three.iter().map(canonical_form).collect();
    let catalog: BTreeSet<_> = order_three_all().iter().map(canonical_form).collect();
    rows.push(row("1", "order-3 classes equal the C1..C7 catalog", true, found == catalog));
    rows.push(row("2", "order-3 grouplike monoids with a chain", "C5 C6", grouplike_with_chain().join(" ")));

    let c5 = order_three(5);
    let c6 = order_three(6);
    let n = parallel::enumerate_bimodules(&c6, &c6, 3, normalization, budget)?.len();
    rows.push(row("3", "(C6, C6)-bimodules on 3 points, orbit-pinned", 15, n));
    let n = parallel::enumerate_bimodules(&c6, &c6, 3, Normalization::UpToRelabeling, budget)?.len();
    rows.push(row("3", "(C6, C6)-bimodules on 3 points, up to relabelling", 64, n));

    let opts = CountOptions { normalization, cross_validate: true, up_to_iso: false, budget };
    let rep = parallel::count_categories(&Monoid::trivial(), 2, 2, 3, 3, &opts)?;
    rows.push(row("4", "categories on trivial^2 (reduced)", 123, rep.reduced_total()));
    if let Some(u) = &rep.unordered {
        let upper: usize = u.by_i.range(1..).map(|(_, n)| n).sum();
        rows.push(row("4", "  i_max = 0 on equal bimodules", 15, u.diagonal_by_i.get(&0).copied().unwrap_or(0)));
        rows.push(row("4", "  i_max = 0 on distinct bimodules", 105, u.off_diagonal_by_i.get(&0).copied().unwrap_or(0)));
        rows.push(row("4", "  i_max >= 1 (reduced)", 3, upper.saturating_sub(u.non_reduced)));
    }
    rows.push(row("4", "  search vs construction mismatches", 0, rep.discrepancies.len()));

    let rep = parallel::count_categories(&Monoid::cyclic(2), 1, 1, 3, 3, &opts)?;
    rows.push(row("5", "categories on Z2^1 (reduced)", 2, rep.reduced_total()));
    let z = center(&Monoid::cyclic(2)).expect("Z2 is a group").len();
    rows.push(row("5", "  i_max = 0 multiplicity vs |Z(Z2)|", z, rep.by_i.get(&0).copied().unwrap_or(0)));
    rows.push(row("5", "  search vs construction mismatches", 0, rep.discrepancies.len()));

    let found = parallel::search_completions(&z3_shift_bimodule(), &z3_involution_bimodule(), budget)?;
    rows.push(row("6", "completions of the Z3 shift/involution pair", 0, found.len()));

    let small = small_grouplike(budget)?;
    let (mut mismatches, mut constructed, mut searched) = (0, 0, 0);
    let mut cats = Vec::new();
    for a in &small {
        for b in &small {
            let g = parallel::verify_goal_between(a, b, 3, 3, Normalization::UpToRelabeling, budget)?;
            mismatches += g.discrepancies.len() + usize::from(g.constructed != g.searched);
            constructed += g.constructed;
            searched += g.searched;
            cats.extend(constructed_between(a, b, 3, Normalization::UpToRelabeling, budget)?);
        }
    }
    rows.push(row("7", "grouplike pairs of order <= 3: oracle mismatches", 0, mismatches));
    rows.push(row("7", "  constructed equals searched", true, constructed == searched));

    cats.extend(constructed_between(&c6, &c6, 3, normalization, budget)?);
    cats.extend(constructed_between(&c5, &c5, 3, normalization, budget)?);
    rows.push(row("8", &format!("structural law failures over {} categories", cats.len()), 0, law_failures(&cats)?));

    rows.push(row("9", "order-3 monoids admitting a 3x3 category with C5", "C5", c5_partners(budget)?.join(" ")));
    Ok(rows)
}

/// Fixed-width text table.
pub fn render_text(rows: &[Row]) -> String {
    let w = rows.iter().map(|r| r.what.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let mark = if r.matches { "ok      " } else { "MISMATCH" };
        out.push_str(&format!("{mark} [{}] {:<w$}  expected {:<6} actual {}\n", r.id, r.what, r.expected, r.actual));
    }
    let bad = rows.iter().filter(|r| !r.matches).count();
    out.push_str(&format!("{} rows, {} mismatches\n", rows.len(), bad));
    out
}
