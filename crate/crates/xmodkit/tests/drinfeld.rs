//! The categorical route: half-braidings of the action groupoid,
//! counted and compared stage by stage against the enumerated centre.

use std::path::Path;

use xmodkit::catoracle::{
    bijection_check, build_cat, drinfeld_objects, CatError, DEFAULT_DRINFELD_BUDGET,
};
use xmodkit::centre::{enumerate_centre, Centre};
use xmodkit::json::{load_input, Input};
use xmodkit::xmod::CrossedModule;

fn corpus(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn load_xmod(name: &str) -> CrossedModule {
    match load_input(&corpus(name)).unwrap() {
        Input::Xmod { xmod, .. } => xmod,
        other => panic!("{name} holds a crossed module, got {other:?}"),
    }
}

fn centre_of(xm: &CrossedModule) -> Centre {
    enumerate_centre(xm).unwrap()
}

#[test]
fn half_braiding_census_agrees_with_the_centre_on_every_corpus_module() {
    let expected = [
        ("aut_d4.json", 16, 8),
        ("aut_c4.json", 4, 2),
        ("id_c2.json", 2, 2),
        ("triv_c2.json", 2, 2),
    ];
    for (name, count, objects) in expected {
        let xm = load_xmod(name);
        let z = centre_of(&xm);
        let report = bijection_check(&xm, &z, DEFAULT_DRINFELD_BUDGET)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(report.centre_count, count, "{name}");
        assert_eq!(report.drinfeld_count, count, "{name}");
        assert_eq!(report.objects, objects, "{name}");
    }
}

#[test]
fn interchange_law_holds_on_every_corpus_groupoid() {
    for name in ["aut_d4.json", "aut_c4.json", "id_c2.json", "triv_c2.json"] {
        let cat = build_cat(&load_xmod(name)).unwrap();
        cat.check_interchange().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn enumeration_is_budgeted_before_it_runs() {
    // The dihedral example has 8 objects, and every component fiber
    // has exactly two arrows (the boundary kernel), so the odometer
    // needs 8 · 2⁸ = 2048 cells.
    let xm = load_xmod("aut_d4.json");
    let cat = build_cat(&xm).unwrap();
    match drinfeld_objects(&cat, 1) {
        Err(CatError::BudgetExceeded { required, budget }) => {
            assert_eq!(required, 2048);
            assert_eq!(budget, 1);
        }
        other => panic!("expected a budget refusal, got {other:?}"),
    }
    // The same refusal surfaces from the four-stage comparison.
    let z = centre_of(&xm);
    assert!(matches!(
        bijection_check(&xm, &z, 1),
        Err(CatError::BudgetExceeded { required: 2048, budget: 1 })
    ));
    // With exactly the required cells it succeeds.
    assert!(bijection_check(&xm, &z, 2048).is_ok());
}
