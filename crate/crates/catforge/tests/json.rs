use catforge::json::{count_report_csv, from_json, to_json, BimoduleJson, CategoryJson, CountReportJson, MonoidJson};
use catforge_core::bimodule::Normalization;
use catforge_core::catalog::order_three;
use catforge_core::engine::{construct_all, count_categories, CountOptions};
use catforge_core::{enumerate_bimodules, Monoid, TwoObjectCategory, DEFAULT_BUDGET};
use proptest::prelude::*;

fn c6_categories() -> Vec<TwoObjectCategory> {
    let c6 = order_three(6);
    let ls = enumerate_bimodules(&c6, &c6, 3, Normalization::FixOrbitRepresentative, DEFAULT_BUDGET).unwrap();
    let mut out = Vec::new();
    for l in &ls {
        for r in &ls {
            out.extend(construct_all(l, r).unwrap().into_iter().map(|(_, c)| c));
        }
    }
    out
}

#[test]
fn monoid_json_layout() {
    let v: serde_json::Value = serde_json::from_str(&to_json(&MonoidJson::annotated(&order_three(5)))).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["identity"], 0);
    assert_eq!(v["table"], serde_json::json!([[0, 1, 2], [1, 1, 2], [2, 2, 1]]));
    assert_eq!(v["group"], serde_json::json!([1, 2]));
    assert_eq!(v["group_identity"], 1);
    assert_eq!(v["chain"], serde_json::json!([0]));
    let plain: serde_json::Value = serde_json::from_str(&to_json(&MonoidJson::annotated(&order_three(1)))).unwrap();
    assert!(plain.get("group").is_none());
}

#[test]
fn grouplike_annotation_is_checked() {
    let mut m = MonoidJson::annotated(&order_three(6));
    assert_eq!(m.to_monoid().unwrap(), order_three(6));
    m.grouplike.as_mut().unwrap().chain.reverse();
    assert!(m.to_monoid().is_err());
}

#[test]
fn non_monoid_tables_are_rejected() {
    let bad = r#"{"n": 2, "identity": 0, "table": [[0, 1], [1, 2]]}"#;
    assert!(from_json::<MonoidJson>(bad, "table").unwrap().to_monoid().is_err());
    let short = r#"{"n": 3, "identity": 0, "table": [[0, 1, 2]]}"#;
    assert!(from_json::<MonoidJson>(short, "table").unwrap().to_monoid().is_err());
    assert!(from_json::<MonoidJson>("[]", "table").is_err());
}

#[test]
fn bimodule_round_trip() {
    let c6 = order_three(6);
    for b in enumerate_bimodules(&c6, &c6, 3, Normalization::UpToRelabeling, DEFAULT_BUDGET).unwrap() {
        let text = to_json(&BimoduleJson::from(&b));
        assert_eq!(from_json::<BimoduleJson>(&text, "bimodule").unwrap().to_bimodule().unwrap(), b);
    }
}

#[test]
fn category_with_foreign_bimodule_is_rejected() {
    let c = &c6_categories()[0];
    let mut j = CategoryJson::from(c);
    j.a = MonoidJson::plain(&Monoid::cyclic(3));
    assert!(j.to_category().is_err());
}

#[test]
fn count_report_json_and_csv() {
    let rep = count_categories(&Monoid::cyclic(2), 1, 1, 3, 3, &CountOptions { cross_validate: true, ..Default::default() }).unwrap();
    let j = CountReportJson::from(&rep);
    let v: serde_json::Value = serde_json::from_str(&to_json(&j)).unwrap();
    assert_eq!(v["by_i"], serde_json::json!({"0": 2, "1": 1}));
    assert_eq!(v["total"], 3);
    assert_eq!(v["by_pair"].as_array().unwrap().len(), 1);
    assert_eq!(count_report_csv(&rep).unwrap(), "l,r,total,non_reduced,searched,i0,i1\n0,0,3,1,3,2,1\n");
}

proptest! {
    #[test]
    fn category_round_trip(k in 0usize..124) {
        let cats = c6_categories();
        let c = &cats[k % cats.len()];
        let text = to_json(&CategoryJson::from(c));
        let back = from_json::<CategoryJson>(&text, "category").unwrap().to_category().unwrap();
        prop_assert_eq!(&back, c);
    }
}
