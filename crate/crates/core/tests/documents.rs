use std::path::PathBuf;

use frobcat::constructions::{builtin, builtin_corpus};
use frobcat::doc::{normalize, Document};
use proptest::prelude::*;
use serde_json::{json, Value};

const VALID: [&str; 4] =
    ["deformed_truncpoly3.json", "perturbed_mult.json", "mat2_filtered.json", "super_clifford_line.json"];

fn read(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn data_files_round_trip() {
    for name in VALID {
        let raw = read(name);
        let doc = Document::from_json(&raw).unwrap();
        let norm = normalize(&raw).unwrap();
        assert_eq!(doc.to_json(), norm, "{name}");
        assert_eq!(normalize(&norm).unwrap(), norm, "{name}");
        let text = doc.to_string_pretty();
        assert_eq!(Document::parse(&text).unwrap(), doc, "{name}");

        // the built entities survive a trip through a self-contained document
        let loaded = doc.load().unwrap();
        for (fname, fa) in &loaded.filtrations {
            let again = Document::from_algebra(fname, fa.algebra(), Some(fa.filtered())).load().unwrap();
            assert_eq!(&again.filtrations[fname], fa, "{name}: {fname}");
        }
        for (aname, a) in &loaded.algebras {
            let again = Document::from_algebra(aname, a, None).load().unwrap();
            assert_eq!(&again.algebras[aname], a, "{name}: {aname}");
        }
    }
}

#[test]
fn builtins_round_trip() {
    for name in builtin_corpus() {
        let b = builtin(name).unwrap();
        let doc = Document::from_algebra(name, &b.algebra, Some(b.filtered.filtered()));
        let text = doc.to_string_pretty();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(normalize(&serde_json::from_str(&text).unwrap()).unwrap(), doc.to_json(), "{name}");
        let loaded = back.load().unwrap();
        assert_eq!(loaded.algebras[name], b.algebra, "{name}");
        assert_eq!(loaded.filtrations[name], b.filtered, "{name}");
    }
}

#[test]
fn scalars_are_canonicalized() {
    let raw = json!({
        "format-version": "1",
        "hopf": "vec",
        "objects": { "V": { "dim": 1 } },
        "algebras": { "A": { "carrier": "V", "m": [[["2/2"]]], "u": [1] } },
    });
    let norm = normalize(&raw).unwrap();
    assert_eq!(norm["algebras"]["A"]["m"], json!([[["1"]]]));
    assert_eq!(norm["algebras"]["A"]["u"], json!(["1"]));
}

#[test]
fn unknown_fields_are_rejected() {
    let raw = json!({ "format-version": "1", "hopf": "vec", "colour": "blue" });
    assert!(Document::from_json(&raw).unwrap_err().to_string().contains("colour"));
    let raw = json!({ "format-version": "7", "hopf": "vec" });
    assert!(Document::from_json(&raw).is_err());
}

/// A scalar written in one of several equivalent ways.
fn scalar() -> impl Strategy<Value = (Value, i64, i64)> {
    (-4i64..=4, 1i64..=3, 0usize..3).prop_map(|(p, qd, style)| {
        let v = match style {
            0 if qd == 1 => json!(p),
            1 => json!(format!("{}/{}", 2 * p, 2 * qd)),
            _ => json!(format!("{p}/{qd}")),
        };
        (v, p, qd)
    })
}

fn document(d: usize) -> impl Strategy<Value = Value> {
    (
        prop::collection::vec(scalar(), d * d * d),
        prop::collection::vec(scalar(), d),
        prop::collection::vec(scalar(), d * d),
    )
        .prop_map(move |(m, u, step)| {
            let m: Vec<Value> = (0..d)
                .map(|i| {
                    json!((0..d)
                        .map(|j| json!((0..d).map(|k| m[(i * d + j) * d + k].0.clone()).collect::<Vec<_>>()))
                        .collect::<Vec<_>>())
                })
                .collect();
            let u: Vec<Value> = u.into_iter().map(|s| s.0).collect();
            // one arbitrary column, then the whole space
            let first: Vec<Value> = (0..d).map(|i| json!([step[i].0.clone()])).collect();
            let all: Vec<Value> = (0..d)
                .map(|i| json!((0..d).map(|j| json!(if i == j { "1" } else { "0" })).collect::<Vec<_>>()))
                .collect();
            json!({
                "format-version": "1",
                "hopf": "vec",
                "objects": { "V": { "dim": d } },
                "algebras": { "A": { "carrier": "V", "m": m, "u": u } },
                "filtrations": { "F": { "algebra": "A", "steps": [first, all] } },
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_documents_round_trip(raw in (1usize..=3).prop_flat_map(document)) {
        let doc = Document::from_json(&raw).unwrap();
        let norm = normalize(&raw).unwrap();
        prop_assert_eq!(&doc.to_json(), &norm);
        prop_assert_eq!(&normalize(&norm).unwrap(), &norm);
        prop_assert_eq!(&Document::parse(&doc.to_string_pretty()).unwrap(), &doc);
        // loading checks shapes only, never axioms
        let loaded = doc.load().unwrap();
        let a = &loaded.algebras["A"];
        let again = Document::from_algebra("A", a, None).load().unwrap();
        prop_assert_eq!(&again.algebras["A"], a);
    }
}
