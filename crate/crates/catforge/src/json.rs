//! JSON and CSV encodings of tables, bimodules, categories and count reports.
//!
//! All indices are 0-based and tables are row-major.

use std::collections::BTreeMap;

use catforge_core::engine::{CountReport, GoalReport, MissingFrom, PairCount};
use catforge_core::{detect_grouplike, validate_monoid, Bimodule, GrouplikeStructure, Monoid, MulTable, TwoObjectCategory};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrouplikeJson {
    pub group: Vec<usize>,
    pub group_identity: usize,
    pub chain: Vec<usize>,
}

impl From<&GrouplikeStructure> for GrouplikeJson {
    fn from(s: &GrouplikeStructure) -> Self {
        GrouplikeJson { group: s.group().to_vec(), group_identity: s.group_identity(), chain: s.chain().to_vec() }
    }
}

/// A monoid table, optionally annotated with its grouplike structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub n: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(flatten, default, skip_serializing_if = "Option::is_none")]
    pub grouplike: Option<GrouplikeJson>,
}

impl MonoidJson {
    pub fn plain(m: &Monoid) -> Self {
        MonoidJson { n: m.order(), identity: m.identity(), table: m.table().to_rows(), grouplike: None }
    }

    pub fn annotated(m: &Monoid) -> Self {
        MonoidJson { grouplike: detect_grouplike(m).as_ref().map(GrouplikeJson::from), ..MonoidJson::plain(m) }
    }

    /// Validates the table. A grouplike annotation, when present, must agree
    /// with detection.
    pub fn to_monoid(&self) -> Result<Monoid, CliError> {
        if self.table.len() != self.n {
            return Err(CliError::input(format!("table has {} rows but n = {}", self.table.len(), self.n)));
        }
        let table = MulTable::from_rows(&self.table).map_err(|e| CliError::input(format!("malformed table: {e}")))?;
        let m = validate_monoid(table, self.identity).map_err(|e| CliError::input(e.to_string()))?;
        if let Some(g) = &self.grouplike {
            let detected = detect_grouplike(&m).as_ref().map(GrouplikeJson::from);
            if detected.as_ref() != Some(g) {
                return Err(CliError::input("grouplike annotation does not match the table"));
            }
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleJson {
    #[serde(rename = "A")]
    pub a: MonoidJson,
    #[serde(rename = "B")]
    pub b: MonoidJson,
    pub l: usize,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

impl From<&Bimodule> for BimoduleJson {
    fn from(b: &Bimodule) -> Self {
        BimoduleJson {
            a: MonoidJson::plain(b.left()),
            b: MonoidJson::plain(b.right()),
            l: b.carrier(),
            left: b.left_rows(),
            right: b.right_rows(),
        }
    }
}

impl BimoduleJson {
    /// Shape check only; the action axioms are left to the caller.
    pub fn to_bimodule(&self) -> Result<Bimodule, CliError> {
        let (a, b) = (self.a.to_monoid()?, self.b.to_monoid()?);
        Bimodule::from_parts(a, b, self.l, &self.left, &self.right).map_err(|e| CliError::input(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryJson {
    #[serde(rename = "A")]
    pub a: MonoidJson,
    #[serde(rename = "B")]
    pub b: MonoidJson,
    #[serde(rename = "L")]
    pub l: BimoduleJson,
    #[serde(rename = "R")]
    pub r: BimoduleJson,
    #[serde(rename = "comp_LR")]
    pub comp_lr: Vec<Vec<usize>>,
    #[serde(rename = "comp_RL")]
    pub comp_rl: Vec<Vec<usize>>,
}

impl From<&TwoObjectCategory> for CategoryJson {
    fn from(c: &TwoObjectCategory) -> Self {
        CategoryJson {
            a: MonoidJson::plain(c.a()),
            b: MonoidJson::plain(c.b()),
            l: c.l().into(),
            r: c.r().into(),
            comp_lr: c.comp_lr_rows(),
            comp_rl: c.comp_rl_rows(),
        }
    }
}

impl CategoryJson {
    /// The embedded bimodules must be over the top-level `A` and `B`.
    pub fn to_category(&self) -> Result<TwoObjectCategory, CliError> {
        let (a, b) = (self.a.to_monoid()?, self.b.to_monoid()?);
        let (l, r) = (self.l.to_bimodule()?, self.r.to_bimodule()?);
        if l.left() != &a || l.right() != &b {
            return Err(CliError::input("L must be an (A, B)-bimodule over the given A and B"));
        }
        if r.left() != &b || r.right() != &a {
            return Err(CliError::input("R must be a (B, A)-bimodule over the given A and B"));
        }
        TwoObjectCategory::new(l, r, &self.comp_lr, &self.comp_rl).map_err(|e| CliError::input(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub l: usize,
    pub r: usize,
    pub total: usize,
    pub by_i: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched: Option<BTreeMap<usize, usize>>,
    pub non_reduced: usize,
}

impl From<&PairCount> for PairJson {
    fn from(p: &PairCount) -> Self {
        PairJson {
            l: p.l_index,
            r: p.r_index,
            total: p.total(),
            by_i: p.constructed.clone(),
            searched: p.searched.clone(),
            non_reduced: p.non_reduced,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnorderedJson {
    pub diagonal_by_i: BTreeMap<usize, usize>,
    pub off_diagonal_by_i: BTreeMap<usize, usize>,
    pub by_i: BTreeMap<usize, usize>,
    pub total: usize,
    pub non_reduced: usize,
    pub asymmetric: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReportJson {
    pub left_bimodules: usize,
    pub right_bimodules: usize,
    /// Over ordered pairs.
    pub by_i: BTreeMap<usize, usize>,
    pub by_pair: Vec<PairJson>,
    pub total: usize,
    pub non_reduced: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unordered: Option<UnorderedJson>,
    /// Categories with non-isomorphic objects; unordered when available.
    pub reduced_total: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched_total: Option<usize>,
    pub discrepancies: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_classes: Option<usize>,
}

impl From<&CountReport> for CountReportJson {
    fn from(r: &CountReport) -> Self {
        CountReportJson {
            left_bimodules: r.left_bimodules,
            right_bimodules: r.right_bimodules,
            by_i: r.by_i.clone(),
            by_pair: r.pairs.iter().map(PairJson::from).collect(),
            total: r.total,
            non_reduced: r.non_reduced,
            unordered: r.unordered.as_ref().map(|u| UnorderedJson {
                diagonal_by_i: u.diagonal_by_i.clone(),
                off_diagonal_by_i: u.off_diagonal_by_i.clone(),
                by_i: u.by_i.clone(),
                total: u.total,
                non_reduced: u.non_reduced,
                asymmetric: u.asymmetric.clone(),
            }),
            reduced_total: r.reduced_total(),
            searched_total: r.searched_total(),
            discrepancies: r.discrepancies.clone(),
            iso_classes: r.iso_classes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyJson {
    pub l: usize,
    pub r: usize,
    /// `"search"` or `"construction"`.
    pub missing_from: String,
    pub category: CategoryJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoalReportJson {
    pub pairs: usize,
    pub constructed: usize,
    pub searched: usize,
    pub holds: bool,
    pub discrepancies: Vec<DiscrepancyJson>,
}

impl From<&GoalReport> for GoalReportJson {
    fn from(g: &GoalReport) -> Self {
        GoalReportJson {
            pairs: g.pairs,
            constructed: g.constructed,
            searched: g.searched,
            holds: g.holds(),
            discrepancies: g
                .discrepancies
                .iter()
                .map(|d| DiscrepancyJson {
                    l: d.l_index,
                    r: d.r_index,
                    missing_from: match d.missing_from {
                        MissingFrom::Search => "search".into(),
                        MissingFrom::Construction => "construction".into(),
                    },
                    category: (&d.category).into(),
                })
                .collect(),
        }
    }
}

/// Per-pair counts as CSV: `l,r,total,non_reduced,searched,i0,i1,…` with one
/// `i` column per level up to the largest level present.
pub fn count_report_csv(r: &CountReport) -> Result<String, CliError> {
    let max_i = r
        .pairs
        .iter()
        .flat_map(|p| p.constructed.keys().chain(p.searched.iter().flat_map(|s| s.keys())))
        .copied()
        .max()
        .unwrap_or(0);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = ["l", "r", "total", "non_reduced", "searched"].map(String::from).to_vec();
    header.extend((0..=max_i).map(|i| format!("i{i}")));
    w.write_record(&header).map_err(csv_error)?;
    for p in &r.pairs {
        let mut row = vec![
            p.l_index.to_string(),
            p.r_index.to_string(),
            p.total().to_string(),
            p.non_reduced.to_string(),
            p.searched.as_ref().map_or(String::new(), |s| s.values().sum::<usize>().to_string()),
        ];
        row.extend((0..=max_i).map(|i| p.constructed.get(&i).copied().unwrap_or(0).to_string()));
        w.write_record(&row).map_err(csv_error)?;
    }
    into_string(w)
}

/// Writes rows of string cells under a header.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(csv_error)?;
    for row in rows {
        w.write_record(row).map_err(csv_error)?;
    }
    into_string(w)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::input(e.to_string())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("DTOs serialize");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed {what} JSON: {e}")))
}

/// Table rows as `a b c / d e f`.
pub fn rows_inline(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}
