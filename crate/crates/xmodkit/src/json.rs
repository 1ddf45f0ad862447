//! JSON input layer shared by the library tests and the `xmodc` tool.
//!
//! A document describes exactly one object. Three shapes are accepted:
//!
//! ```json
//! {"group":    {"construct": "dihedral", "n": 4}}
//! {"group":    {"order": 2, "table": [[0,1],[1,0]], "gens": [1]}}
//! {"xmod":     {"g1": {…}, "g0": {…}, "boundary": […], "action": [[…]]}}
//! {"xmod":     {"aut_of": {…group…}}}
//! {"lie_xmod": {"field": "Q", "l1": {"dim": 3, "sc": […]}, "l0": {…},
//!               "boundary": [[…]], "action": [[[…]]]}}
//! ```
//!
//! `"field"` is either `"Q"` or `{"Fp": p}` with p an odd prime. Group
//! specs take either a named construction (`cyclic`/`dihedral` with
//! `n`, `quaternion8`, or `direct_product` with `factors`) or a raw
//! Cayley `table` with optional `gens`; both accept optional `labels`
//! and `name`. A document may carry a top-level `"name"` and, when it
//! holds a group crossed module, `"z0_labels"`: named (x, ξ) pairs
//! that annotate the centre report the way a presentation names its
//! generators.
//!
//! Everything is strict: unknown keys, missing pieces, and tables that
//! fail their axioms are input errors, not warnings.

use serde::Deserialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupConstruction, GroupError};
use crate::lie::{make_lie, make_lie_xmod, Field, LieCrossedModule, LieError};
use crate::xmod::{CrossedModule, XmodError};

/// Errors from reading, parsing, or validating an input document.
///
/// All of these are *input* errors in the CLI sense (exit status 2):
/// the document itself is unusable, as opposed to a verified object
/// later failing a mathematical check.
#[derive(Debug, Error)]
pub enum JsonError {
    #[error("cannot read {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("JSON parse error: {0}")]
    Parse(String),
    #[error("input schema: {0}")]
    Schema(String),
    #[error("group tables: {0}")]
    Group(#[from] GroupError),
    #[error("crossed-module tables: {0}")]
    Xmod(#[from] XmodError),
    #[error("Lie tables: {0}")]
    Lie(#[from] LieError),
}

fn schema(msg: impl Into<String>) -> JsonError {
    JsonError::Schema(msg.into())
}

/// A named centre element hint: the document asserts that the pair
/// (x, ξ) lies in Z₀ and asks reports to call it `name`.
#[derive(Debug, Clone, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LabelHint {
    pub name: String,
    pub x: usize,
    pub xi: Vec<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    name: Option<String>,
    group: Option<GroupSpec>,
    xmod: Option<XmodSpec>,
    lie_xmod: Option<LieXmodSpec>,
    z0_labels: Option<Vec<LabelHint>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupSpec {
    construct: Option<String>,
    n: Option<usize>,
    factors: Option<Vec<GroupSpec>>,
    order: Option<usize>,
    table: Option<Vec<Vec<usize>>>,
    gens: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct XmodSpec {
    aut_of: Option<GroupSpec>,
    g1: Option<GroupSpec>,
    g0: Option<GroupSpec>,
    boundary: Option<Vec<usize>>,
    action: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieAlgebraSpec {
    dim: usize,
    sc: Vec<Vec<Vec<i64>>>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieXmodSpec {
    field: Field,
    l1: LieAlgebraSpec,
    l0: LieAlgebraSpec,
    boundary: Vec<Vec<i64>>,
    action: Vec<Vec<Vec<i64>>>,
}

/// A parsed and fully validated input document.
#[derive(Debug, Clone)]
pub enum Input {
    Group {
        name: Option<String>,
        group: FiniteGroup,
    },
    Xmod {
        name: Option<String>,
        xmod: CrossedModule,
        z0_labels: Vec<LabelHint>,
    },
    LieXmod {
        name: Option<String>,
        xmod: LieCrossedModule,
    },
}

impl Input {
    /// The document's `name`, if it carried one.
    pub fn name(&self) -> Option<&str> {
        match self {
            Input::Group { name, .. }
            | Input::Xmod { name, .. }
            | Input::LieXmod { name, .. } => name.as_deref(),
        }
    }
}

fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, JsonError> {
    let mut group = match (&spec.construct, &spec.table) {
        (Some(_), Some(_)) => {
            return Err(schema("a group takes either `construct` or `table`, not both"));
        }
        (Some(kind), None) => {
            let need_n = || {
                spec.n.ok_or_else(|| schema(format!("`construct: {kind}` needs `n`")))
            };
            let construction = match kind.as_str() {
                "cyclic" => GroupConstruction::Cyclic(need_n()?),
                "dihedral" => GroupConstruction::Dihedral(need_n()?),
                "quaternion8" => GroupConstruction::Quaternion8,
                "direct_product" => {
                    let factors = spec
                        .factors
                        .as_ref()
                        .ok_or_else(|| schema("`construct: direct_product` needs `factors`"))?;
                    if factors.len() < 2 {
                        return Err(schema("`direct_product` needs at least two factors"));
                    }
                    if spec.n.is_some() || spec.order.is_some() || spec.gens.is_some() {
                        return Err(schema("`direct_product` takes only `factors` (plus labels/name)"));
                    }
                    let mut product = build_group(&factors[0])?;
                    for factor in &factors[1..] {
                        product = FiniteGroup::direct_product(&product, &build_group(factor)?);
                    }
                    return finish_group(product, spec);
                }
                other => {
                    return Err(schema(format!(
                        "unknown construction `{other}` (expected cyclic, dihedral, quaternion8, or direct_product)"
                    )));
                }
            };
            FiniteGroup::construct_named(&construction)?
        }
        (None, Some(table)) => {
            if let Some(order) = spec.order {
                if order != table.len() {
                    return Err(schema(format!(
                        "declared order {order} does not match a table of {} rows",
                        table.len()
                    )));
                }
            }
            FiniteGroup::from_cayley(table.clone(), spec.gens.clone())?
        }
        (None, None) => {
            return Err(schema("a group needs either `construct` or `table`"));
        }
    };
    if spec.factors.is_some() {
        return Err(schema("`factors` only accompanies `construct: direct_product`"));
    }
    if spec.table.is_none() && (spec.gens.is_some() || spec.order.is_some()) {
        return Err(schema("`order` and `gens` only accompany `table`"));
    }
    group = finish_group(group, spec)?;
    Ok(group)
}

fn finish_group(mut group: FiniteGroup, spec: &GroupSpec) -> Result<FiniteGroup, JsonError> {
    if let Some(labels) = &spec.labels {
        if labels.len() != group.order {
            return Err(schema(format!(
                "{} labels for a group of order {}",
                labels.len(),
                group.order
            )));
        }
        group = group.with_labels(labels.clone());
    }
    if let Some(name) = &spec.name {
        group = group.with_name(name.clone());
    }
    Ok(group)
}

fn build_xmod(spec: &XmodSpec) -> Result<CrossedModule, JsonError> {
    if let Some(base) = &spec.aut_of {
        if spec.g1.is_some() || spec.g0.is_some() || spec.boundary.is_some() || spec.action.is_some()
        {
            return Err(schema("`aut_of` replaces the explicit g1/g0/boundary/action fields"));
        }
        let group = build_group(base)?;
        let (xm, _aut) = CrossedModule::aut_xmod(&group)?;
        return Ok(xm);
    }
    let g1 = spec.g1.as_ref().ok_or_else(|| schema("crossed module needs `g1`"))?;
    let g0 = spec.g0.as_ref().ok_or_else(|| schema("crossed module needs `g0`"))?;
    let boundary = spec
        .boundary
        .as_ref()
        .ok_or_else(|| schema("crossed module needs `boundary`"))?;
    let action = spec
        .action
        .as_ref()
        .ok_or_else(|| schema("crossed module needs `action`"))?;
    let xm = CrossedModule::make(build_group(g1)?, build_group(g0)?, boundary.clone(), action.clone())?;
    Ok(xm)
}

fn borrowed_labels(labels: &Option<Vec<String>>) -> Vec<&str> {
    labels
        .as_ref()
        .map(|v| v.iter().map(String::as_str).collect())
        .unwrap_or_default()
}

fn build_lie_xmod(spec: &LieXmodSpec) -> Result<LieCrossedModule, JsonError> {
    let l1 = make_lie(spec.field, spec.l1.dim, &spec.l1.sc, &borrowed_labels(&spec.l1.labels))?;
    let l0 = make_lie(spec.field, spec.l0.dim, &spec.l0.sc, &borrowed_labels(&spec.l0.labels))?;
    let xm = make_lie_xmod(&l1, &l0, &spec.boundary, &spec.action)?;
    Ok(xm)
}

/// Parses and validates one document from JSON text.
pub fn parse_input(text: &str) -> Result<Input, JsonError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| JsonError::Parse(e.to_string()))?;
    let kinds =
        usize::from(doc.group.is_some()) + usize::from(doc.xmod.is_some()) + usize::from(doc.lie_xmod.is_some());
    if kinds != 1 {
        return Err(schema("a document holds exactly one of `group`, `xmod`, `lie_xmod`"));
    }
    if doc.z0_labels.is_some() && doc.xmod.is_none() {
        return Err(schema("`z0_labels` only applies to `xmod` documents"));
    }
    if let Some(spec) = &doc.group {
        return Ok(Input::Group { name: doc.name, group: build_group(spec)? });
    }
    if let Some(spec) = &doc.xmod {
        let xmod = build_xmod(spec)?;
        let z0_labels = doc.z0_labels.unwrap_or_default();
        for hint in &z0_labels {
            if hint.x >= xmod.g0.order || hint.xi.len() != xmod.g0.order {
                return Err(schema(format!(
                    "z0_label `{}` does not fit a base group of order {}",
                    hint.name, xmod.g0.order
                )));
            }
            if hint.xi.iter().any(|&v| v >= xmod.g1.order) {
                return Err(schema(format!(
                    "z0_label `{}` maps outside a source group of order {}",
                    hint.name, xmod.g1.order
                )));
            }
        }
        return Ok(Input::Xmod { name: doc.name, xmod, z0_labels });
    }
    let spec = doc.lie_xmod.expect("one-of check above");
    Ok(Input::LieXmod { name: doc.name, xmod: build_lie_xmod(&spec)? })
}

/// Reads and validates the document at `path`.
pub fn load_input(path: &std::path::Path) -> Result<Input, JsonError> {
    let text = std::fs::read_to_string(path).map_err(|e| JsonError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_input(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_by_construction_and_by_table() {
        let g = match parse_input(r#"{"group": {"construct": "dihedral", "n": 4}}"#).unwrap() {
            Input::Group { group, .. } => group,
            other => panic!("expected a group, got {other:?}"),
        };
        assert_eq!(g.order, 8);
        let h = match parse_input(
            r#"{"group": {"order": 2, "table": [[0,1],[1,0]], "gens": [1], "labels": ["1","s"]}}"#,
        )
        .unwrap()
        {
            Input::Group { group, .. } => group,
            other => panic!("expected a group, got {other:?}"),
        };
        assert_eq!(h.order, 2);
        assert_eq!(h.label(1), "s");
    }

    #[test]
    fn direct_product_folds_factors() {
        let g = match parse_input(
            r#"{"group": {"construct": "direct_product", "factors": [
                {"construct": "cyclic", "n": 2},
                {"construct": "cyclic", "n": 3},
                {"construct": "cyclic", "n": 5}]}}"#,
        )
        .unwrap()
        {
            Input::Group { group, .. } => group,
            other => panic!("expected a group, got {other:?}"),
        };
        assert_eq!(g.order, 30);
        assert!(g.is_abelian());
    }

    #[test]
    fn xmod_explicit_and_aut_of() {
        let id2 = r#"{"xmod": {"g1": {"construct": "cyclic", "n": 2},
                                "g0": {"construct": "cyclic", "n": 2},
                                "boundary": [0, 1],
                                "action": [[0, 1], [0, 1]]}}"#;
        let xm = match parse_input(id2).unwrap() {
            Input::Xmod { xmod, .. } => xmod,
            other => panic!("expected a crossed module, got {other:?}"),
        };
        assert_eq!(xm.g1.order, 2);
        let aut = r#"{"xmod": {"aut_of": {"construct": "cyclic", "n": 4}}}"#;
        let xm = match parse_input(aut).unwrap() {
            Input::Xmod { xmod, .. } => xmod,
            other => panic!("expected a crossed module, got {other:?}"),
        };
        assert_eq!((xm.g1.order, xm.g0.order), (4, 2));
    }

    #[test]
    fn lie_document_round_trip() {
        let text = r#"{"lie_xmod": {
            "field": {"Fp": 5},
            "l1": {"dim": 1, "sc": [[[0]]], "labels": ["n"]},
            "l0": {"dim": 2, "sc": [[[0,0],[0,2]],[[0,-2],[0,0]]], "labels": ["h","n"]},
            "boundary": [[0, 1]],
            "action": [[[2]], [[0]]]}}"#;
        let xm = match parse_input(text).unwrap() {
            Input::LieXmod { xmod, .. } => xmod,
            other => panic!("expected a Lie crossed module, got {other:?}"),
        };
        assert_eq!((xm.l1.dim, xm.l0.dim), (1, 2));
        assert_eq!(xm.field(), Field::Fp(5));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(parse_input("not json"), Err(JsonError::Parse(_))));
        assert!(matches!(parse_input(r#"{"name": "empty"}"#), Err(JsonError::Schema(_))));
        assert!(matches!(
            parse_input(r#"{"group": {"construct": "cyclic", "n": 2}, "xmod": {"aut_of": {"construct": "cyclic", "n": 2}}}"#),
            Err(JsonError::Schema(_))
        ));
        assert!(matches!(
            parse_input(r#"{"group": {"construct": "icosahedral", "n": 5}}"#),
            Err(JsonError::Schema(_))
        ));
        assert!(matches!(
            parse_input(r#"{"group": {"order": 3, "table": [[0,1],[1,0]]}}"#),
            Err(JsonError::Schema(_))
        ));
        // Valid JSON, invalid mathematics: a non-associative "table".
        assert!(matches!(
            parse_input(r#"{"group": {"table": [[0,1],[1,1]]}}"#),
            Err(JsonError::Group(_))
        ));
        // The nontrivial action of C2 on C2 exists; the identity map is
        // not equivariant for it, so CM1 fails.
        let bad = r#"{"xmod": {"g1": {"construct": "cyclic", "n": 2},
                               "g0": {"construct": "cyclic", "n": 2},
                               "boundary": [0, 0],
                               "action": [[0, 1], [1, 0]]}}"#;
        assert!(matches!(parse_input(bad), Err(JsonError::Xmod(_))));
        assert!(matches!(
            parse_input(r#"{"lie_xmod": {"field": {"Fp": 2},
                "l1": {"dim": 0, "sc": []}, "l0": {"dim": 0, "sc": []},
                "boundary": [], "action": []}}"#),
            Err(JsonError::Lie(_))
        ));
    }

    #[test]
    fn label_hints_are_shape_checked() {
        let good = r#"{"xmod": {"aut_of": {"construct": "cyclic", "n": 4}},
                       "z0_labels": [{"name": "T", "x": 0, "xi": [0, 1]}]}"#;
        match parse_input(good).unwrap() {
            Input::Xmod { z0_labels, .. } => assert_eq!(z0_labels[0].name, "T"),
            other => panic!("expected a crossed module, got {other:?}"),
        }
        let short = r#"{"xmod": {"aut_of": {"construct": "cyclic", "n": 4}},
                        "z0_labels": [{"name": "T", "x": 0, "xi": [0]}]}"#;
        assert!(matches!(parse_input(short), Err(JsonError::Schema(_))));
        let misplaced = r#"{"group": {"construct": "cyclic", "n": 4},
                            "z0_labels": []}"#;
        assert!(matches!(parse_input(misplaced), Err(JsonError::Schema(_))));
    }
}
