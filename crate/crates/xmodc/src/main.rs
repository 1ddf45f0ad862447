//! Batch front end for the crossed-module toolkit: parse one input
//! document, run the requested pipeline, emit a report.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails (the
//! witness appears in the report), 2 when the input itself is unusable
//! (parse error, axiom-violating tables, incompatible command, or an
//! enumeration that exceeds its budget).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{Map, Value};

use xmodkit::catoracle::{bijection_check, CatError, DEFAULT_DRINFELD_BUDGET};
use xmodkit::centre::{
    braiding, centre_homotopy, centre_oracle, delta_xmod, enumerate_centre, seven_term_check,
    Centre, CentreError,
};
use xmodkit::cohom::{diagram_check, prop15_check};
use xmodkit::group::FiniteGroup;
use xmodkit::json::{load_input, Input, JsonError, LabelHint};
use xmodkit::lie::{
    lie_centre, lie_exact_sequence_check, lie_homotopy, Field, LieCrossedModule, K,
};
use xmodkit::norrie::norrie_compare;
use xmodkit::xmod::CrossedModule;

const DEFAULT_ORACLE_BUDGET: u128 = 100_000_000;

/// Centres, braidings, cohomology, and categorical cross-checks for
/// finite group and finite-dimensional Lie crossed modules.
#[derive(Parser)]
#[command(name = "xmodc", version, disable_help_subcommand = true)]
struct Cli {
    /// Pipeline to run.
    #[arg(value_enum)]
    command: Command,
    /// Input document (JSON: a group, a crossed module, or a Lie
    /// crossed module).
    file: PathBuf,
    /// Also run the exhaustive cross-checks (slow on large inputs).
    #[arg(long)]
    oracle: bool,
    /// Seed for internal section choices; reports are seed-blind.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidate budget for the exhaustive enumerations.
    #[arg(long)]
    budget: Option<u128>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Command {
    /// Parse and validate the input; report which axioms were checked.
    Verify,
    /// The centre: order, shape, generators, bracket table, flags.
    Centre,
    /// Homotopy groups of the input and of its centre.
    Invariants,
    /// Degree-one/degree-two exactness, the derivation diagram, and
    /// the six-term homotopy sequence.
    Cohomology,
    /// The classical centre inside the new one.
    Norrie,
    /// Cross-check the centre against the half-braiding census.
    DrinfeldCheck,
    /// The Lie centre: basis, brackets, homotopy, exact sequence.
    LieCentre,
    /// Everything that applies to the input.
    Report,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Verify => "verify",
            Command::Centre => "centre",
            Command::Invariants => "invariants",
            Command::Cohomology => "cohomology",
            Command::Norrie => "norrie",
            Command::DrinfeldCheck => "drinfeld-check",
            Command::LieCentre => "lie-centre",
            Command::Report => "report",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A report line: one fact, rendered as `key = value` in text and as a
/// `"key": value` member in JSON. `bare` lines print only the value in
/// text (used where the fact is a sentence, not a key/value pair).
struct Line {
    key: String,
    value: Value,
    bare: bool,
}

fn kv(key: impl Into<String>, value: impl Into<Value>) -> Line {
    Line { key: key.into(), value: value.into(), bare: false }
}

fn bare(key: impl Into<String>, value: impl Into<String>) -> Line {
    Line { key: key.into(), value: Value::String(value.into()), bare: true }
}

struct Section {
    title: &'static str,
    lines: Vec<Line>,
}

fn section(title: &'static str, lines: Vec<Line>) -> Section {
    Section { title, lines }
}

/// Input problems exit 2; failed mathematical checks exit 1 with the
/// witness in the report.
enum Failure {
    Input(String),
    Check(String),
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn check_err(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

fn centre_err(e: CentreError) -> Failure {
    match e {
        CentreError::BudgetExceeded { .. } => Failure::Input(e.to_string()),
        other => Failure::Check(other.to_string()),
    }
}

fn cat_err(e: CatError) -> Failure {
    match e {
        CatError::BudgetExceeded { .. }
        | CatError::Centre(CentreError::BudgetExceeded { .. }) => Failure::Input(e.to_string()),
        other => Failure::Check(other.to_string()),
    }
}

fn incompatible(cmd: Command, kind: &str) -> Failure {
    Failure::Input(format!("`{}` does not apply to {kind} input", cmd.name()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(sections) => {
            emit(cli.format, &sections);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(witness)) => {
            let sections = vec![section("failure", vec![kv("witness", witness)])];
            emit(cli.format, &sections);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("xmodc: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(format: Format, sections: &[Section]) {
    use std::io::Write;
    let out = match format {
        Format::Text => render_text(sections),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&render_json(sections))
                .expect("report values are plain JSON");
            s.push('\n');
            s
        }
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()) {
        // A closed pipe downstream is not our failure.
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("xmodc: cannot write report: {e}");
            std::process::exit(2);
        }
    }
}

fn render_text(sections: &[Section]) -> String {
    let mut out = String::new();
    for s in sections {
        out.push_str(&format!("== {} ==\n", s.title));
        for l in &s.lines {
            if l.bare {
                out.push_str(&format!("{}\n", value_text(&l.value)));
            } else if let Value::Array(items) = &l.value {
                out.push_str(&format!("{}:\n", l.key));
                for item in items {
                    out.push_str(&format!("  {}\n", value_text(item)));
                }
            } else {
                out.push_str(&format!("{} = {}\n", l.key, value_text(&l.value)));
            }
        }
        out.push('\n');
    }
    out
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_json(sections: &[Section]) -> Value {
    let mut root = Map::new();
    for s in sections {
        let mut obj = Map::new();
        for l in &s.lines {
            obj.insert(l.key.clone(), l.value.clone());
        }
        root.insert(s.title.to_string(), Value::Object(obj));
    }
    Value::Object(root)
}

fn run(cli: &Cli) -> Result<Vec<Section>, Failure> {
    let input = load_input(&cli.file)?;
    let mut sections = vec![input_section(&input)];
    match &input {
        Input::Group { group, .. } => match cli.command {
            Command::Verify => sections.push(group_verify_section(group)),
            Command::Report => {
                sections.push(group_verify_section(group));
                sections.push(group_facts_section(group));
            }
            other => return Err(incompatible(other, "bare-group")),
        },
        Input::Xmod { xmod, z0_labels, .. } => {
            xmod_dispatch(cli, xmod, z0_labels, &mut sections)?;
        }
        Input::LieXmod { xmod, .. } => match cli.command {
            Command::Verify => sections.push(lie_verify_section()),
            Command::LieCentre => sections.extend(lie_sections(xmod)?),
            Command::Report => {
                sections.push(lie_verify_section());
                sections.extend(lie_sections(xmod)?);
            }
            other => return Err(incompatible(other, "Lie crossed-module")),
        },
    }
    Ok(sections)
}

fn xmod_dispatch(
    cli: &Cli,
    xm: &CrossedModule,
    hints: &[LabelHint],
    sections: &mut Vec<Section>,
) -> Result<(), Failure> {
    if cli.command == Command::Verify {
        sections.push(xmod_verify_section());
        return Ok(());
    }
    if cli.command == Command::LieCentre {
        return Err(incompatible(cli.command, "group crossed-module"));
    }
    let z = enumerate_centre(xm).map_err(centre_err)?;
    match cli.command {
        Command::Centre => sections.extend(centre_sections(cli, xm, hints, &z)?),
        Command::Invariants => sections.push(invariants_section(xm, &z)?),
        Command::Cohomology => sections.extend(cohomology_sections(cli.seed, xm, &z)?),
        Command::Norrie => sections.push(norrie_section(xm, &z)?),
        Command::DrinfeldCheck => sections.push(drinfeld_section(cli, xm, &z)?),
        Command::Report => {
            sections.push(xmod_verify_section());
            sections.extend(centre_sections(cli, xm, hints, &z)?);
            sections.push(invariants_section(xm, &z)?);
            sections.extend(cohomology_sections(cli.seed, xm, &z)?);
            sections.push(norrie_section(xm, &z)?);
            if cli.oracle {
                sections.push(drinfeld_section(cli, xm, &z)?);
            }
        }
        Command::Verify | Command::LieCentre => unreachable!("handled above"),
    }
    Ok(())
}

fn input_section(input: &Input) -> Section {
    let mut lines = Vec::new();
    if let Some(name) = input.name() {
        lines.push(kv("name", name));
    }
    match input {
        Input::Group { group, .. } => {
            lines.push(kv("kind", "group"));
            lines.push(kv("order", group.order));
        }
        Input::Xmod { xmod, .. } => {
            lines.push(kv("kind", "crossed module"));
            lines.push(kv("|G1|", xmod.g1.order));
            lines.push(kv("|G0|", xmod.g0.order));
        }
        Input::LieXmod { xmod, .. } => {
            lines.push(kv("kind", "Lie crossed module"));
            lines.push(kv("field", field_name(xmod.field())));
            lines.push(kv("dim L1", xmod.l1.dim));
            lines.push(kv("dim L0", xmod.l0.dim));
        }
    }
    section("input", lines)
}

fn field_name(f: Field) -> String {
    match f {
        Field::Q => "Q".to_string(),
        Field::Fp(p) => format!("F{p}"),
    }
}

fn group_verify_section(group: &FiniteGroup) -> Section {
    section(
        "verify",
        vec![
            bare("table", "Cayley table is associative with identity and inverses"),
            kv("generators", group.gens.len()),
        ],
    )
}

fn xmod_verify_section() -> Section {
    section(
        "verify",
        vec![
            bare("boundary", "boundary is a homomorphism"),
            bare("action", "action is by automorphisms"),
            bare("equivariance", "boundary equivariance holds"),
            bare("peiffer", "Peiffer identity holds"),
        ],
    )
}

fn lie_verify_section() -> Section {
    section(
        "verify",
        vec![
            bare("jacobi", "both brackets are alternating and satisfy Jacobi"),
            bare("boundary", "boundary is a Lie homomorphism"),
            bare("action", "base acts by derivations"),
            bare("equivariance", "boundary equivariance holds"),
            bare("peiffer", "Peiffer identity holds"),
        ],
    )
}

fn group_facts_section(group: &FiniteGroup) -> Section {
    let mut lines = vec![kv("order", group.order), kv("abelian", group.is_abelian())];
    if let Some(name) = group.identify() {
        lines.push(kv("isomorphism type", name));
    }
    lines.push(kv("|Z(G)|", group.centre_elements().len()));
    let gens: Vec<Value> =
        group.gens.iter().map(|&g| Value::String(group.label(g))).collect();
    lines.push(kv("generators", Value::Array(gens)));
    section("structure", lines)
}

/// Resolves the document's named centre elements, erroring (as an
/// input problem) if a hinted pair is not actually in the centre.
fn resolve_hints(z: &Centre, hints: &[LabelHint]) -> Result<Vec<(String, usize)>, Failure> {
    hints
        .iter()
        .map(|h| {
            z.find_parts(h.x, &h.xi)
                .map(|i| (h.name.clone(), i))
                .ok_or_else(|| {
                    Failure::Input(format!("z0_labels: `{}` is not a centre element", h.name))
                })
        })
        .collect()
}

/// Shortest expression of each group element as a word in the named
/// generators, with runs collapsed to powers (`A^2`, `B·C`).
fn word_map(g: &FiniteGroup, named: &[(String, usize)]) -> Vec<Option<String>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; g.order];
    words[g.id] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([g.id]);
    while let Some(e) = queue.pop_front() {
        let word = words[e].clone().expect("queued elements have words");
        for (gi, &(_, idx)) in named.iter().enumerate() {
            let next = g.mul(e, idx);
            if words[next].is_none() {
                let mut w = word.clone();
                w.push(gi);
                words[next] = Some(w);
                queue.push_back(next);
            }
        }
    }
    words
        .into_iter()
        .map(|w| w.map(|w| render_word(&w, named)))
        .collect()
}

fn render_word(word: &[usize], named: &[(String, usize)]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut run = 0usize;
    let mut count = 0usize;
    for &gi in word.iter().chain(std::iter::once(&usize::MAX)) {
        if count > 0 && gi == run {
            count += 1;
            continue;
        }
        if count > 0 {
            let name = &named[run].0;
            parts.push(if count == 1 { name.clone() } else { format!("{name}^{count}") });
        }
        run = gi;
        count = 1;
    }
    parts.join("·")
}

fn centre_sections(
    cli: &Cli,
    xm: &CrossedModule,
    hints: &[LabelHint],
    z: &Centre,
) -> Result<Vec<Section>, Failure> {
    let (delta, delta_xm) = delta_xmod(xm, z).map_err(centre_err)?;
    let br = braiding(z, &delta_xm);
    if let Some(witness) = &br.flags.violation {
        return Err(Failure::Check(format!("braiding axioms fail: {witness}")));
    }

    let mut lines = vec![kv("|Z0|", z.elements.len())];
    if let Some(name) = z.group.identify() {
        lines.push(bare("isomorphism type", format!("Z0 ≅ {name}")));
    }
    lines.push(kv("is_braided", br.flags.is_braided));
    lines.push(kv("is_symmetric", br.flags.is_symmetric));
    lines.push(kv("is_rqm", br.flags.is_rqm));

    let named = resolve_hints(z, hints)?;
    let g = &z.group;
    for (name, idx) in &named {
        lines.push(kv(name.clone(), z.describe(*idx, xm)));
    }
    for (name, idx) in &named {
        lines.push(kv(format!("order({name})"), g.element_order(*idx)));
    }
    // Conjugation relations among the named generators, plus the
    // boundary of each source generator as a word in them.
    if !named.is_empty() {
        let words = word_map(g, &named);
        for (qn, qi) in &named {
            for (pn, pi) in &named {
                if pn == qn {
                    continue;
                }
                let c = g.mul(g.mul(*qi, *pi), g.inv(*qi));
                let shown = power_of(g, *pi, pn, c)
                    .or_else(|| words[c].clone())
                    .unwrap_or_else(|| g.label(c));
                lines.push(kv(format!("{qn} {pn} {qn}^-1"), shown));
            }
        }
        for &s in &xm.g1.gens {
            let image = delta.apply(s);
            if let Some(word) = &words[image] {
                lines.push(kv(format!("delta({})", xm.g1.label(s)), word.clone()));
            }
        }
    }

    if cli.oracle {
        let budget = cli.budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
        let slow = centre_oracle(xm, budget).map_err(centre_err)?;
        if slow != z.elements {
            return Err(Failure::Check(
                "exhaustive centre search disagrees with the enumeration".to_string(),
            ));
        }
        lines.push(bare(
            "oracle",
            format!("exhaustive search agrees ({} elements)", slow.len()),
        ));
    }

    let pairs: Vec<(String, usize)> = if named.is_empty() {
        g.gens.iter().map(|&i| (g.label(i), i)).collect()
    } else {
        named
    };
    let mut table = Vec::new();
    for (pn, pi) in &pairs {
        for (qn, qi) in &pairs {
            table.push(kv(
                format!("{{{pn},{qn}}}"),
                xm.g1.label(br.bracket[*pi][*qi]),
            ));
        }
    }
    Ok(vec![section("centre", lines), section("bracket table", table)])
}

/// `c` as `name^k` when it is a power of `p`, preferring the smallest
/// exponent.
fn power_of(g: &FiniteGroup, p: usize, name: &str, c: usize) -> Option<String> {
    let order = g.element_order(p);
    (0..order).find(|&k| g.pow(p, k as i64) == c).map(|k| match k {
        0 => "1".to_string(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    })
}

fn invariants_section(xm: &CrossedModule, z: &Centre) -> Result<Section, Failure> {
    let h = xm.homotopy().map_err(check_err)?;
    let (delta, _) = delta_xmod(xm, z).map_err(centre_err)?;
    let ch = centre_homotopy(xm, z, &delta).map_err(centre_err)?;

    let mut lines = vec![kv("|pi0(G)|", h.pi0.group.order)];
    if let Some(name) = h.pi0.group.identify() {
        lines.push(kv("pi0(G)", name));
    }
    lines.push(kv("|pi1(G)|", h.pi1.group.order));
    if let Some(name) = h.pi1.group.identify() {
        lines.push(kv("pi1(G)", name));
    }
    lines.push(kv("|pi0(Z)|", ch.pi0.group.order));
    if let Some(name) = ch.pi0.group.identify() {
        lines.push(kv("pi0(Z)", name));
    }
    lines.push(kv("|pi1(Z)|", ch.pi1.group.order));
    if let Some(name) = ch.pi1.group.identify() {
        lines.push(kv("pi1(Z)", name));
    }

    if !ch.is_h0_identification() {
        return Err(Failure::Check(
            "pi1 of the centre differs from the fixed-point subgroup".to_string(),
        ));
    }
    let bij = ch.bijection().ok_or_else(|| {
        Failure::Check("no bijection onto the fixed-point subgroup".to_string())
    })?;
    let pairs: Vec<Value> = bij
        .iter()
        .map(|&(k, f)| Value::String(format!("{} <-> {}", xm.g1.label(k), xm.g1.label(f))))
        .collect();
    lines.push(kv("pi1(Z) as fixed points", Value::Array(pairs)));
    Ok(section("invariants", lines))
}

fn cohomology_sections(
    seed: u64,
    xm: &CrossedModule,
    z: &Centre,
) -> Result<Vec<Section>, Failure> {
    let p = prop15_check(xm, z, seed).map_err(check_err)?;
    let four = vec![
        kv("|H1(pi0,pi1)|", p.h1_order),
        kv("|pi0(Z)|", p.pi0_centre_order),
        kv("stable centre order", p.stable_centre_order),
        kv("|H2(G0,pi1)|", p.h2_order),
        kv("|Im f|", p.image_f_order),
        kv("|Im omega|", p.image_omega_order),
        kv("|Ker g|", p.kernel_g_order),
        bare("verdict", "four-term sequence is exact and seed-blind"),
    ];
    let d = diagram_check(xm, z).map_err(check_err)?;
    let diagram = vec![
        kv("|H0|", d.h0_order),
        kv("|G1|", d.g1_order),
        kv("|Der|", d.der_order),
        kv("derivation classes", d.guin_h1_order),
        kv("|Z0|", d.centre_order),
        kv("|pi0(Z)|", d.pi0_centre_order),
        bare("verdict", "both rows exact, all squares commute"),
    ];
    let s = seven_term_check(xm, z).map_err(centre_err)?;
    let orders: Vec<Value> = s.orders.iter().map(|&n| Value::from(n)).collect();
    let seven = vec![
        kv("orders", Value::Array(orders)),
        bare("verdict", "six-term homotopy sequence is exact"),
    ];
    Ok(vec![
        section("cohomology", four),
        section("diagram", diagram),
        section("homotopy sequence", seven),
    ])
}

fn norrie_section(xm: &CrossedModule, z: &Centre) -> Result<Section, Failure> {
    let cmp = norrie_compare(xm, z).map_err(check_err)?;
    let r = &cmp.report;
    let top: Vec<Value> = cmp
        .norrie
        .top
        .elements
        .iter()
        .map(|&a| Value::String(xm.g1.label(a)))
        .collect();
    let bottom: Vec<Value> = cmp
        .norrie
        .bottom
        .elements
        .iter()
        .map(|&x| Value::String(xm.g0.label(x)))
        .collect();
    Ok(section(
        "norrie",
        vec![
            kv("top", Value::Array(top)),
            kv("bottom", Value::Array(bottom)),
            kv("|pi0(N)|", r.pi0_order),
            kv("|pi0(Z)|", r.pi0_centre_order),
            kv("|pi1|", r.pi1_order),
            kv("weak equivalence", r.weak_equivalence),
        ],
    ))
}

fn drinfeld_section(cli: &Cli, xm: &CrossedModule, z: &Centre) -> Result<Section, Failure> {
    let budget = cli.budget.unwrap_or(DEFAULT_DRINFELD_BUDGET);
    let rep = bijection_check(xm, z, budget).map_err(cat_err)?;
    Ok(section(
        "drinfeld",
        vec![
            kv("objects", rep.objects),
            kv("half-braidings", rep.drinfeld_count),
            kv("|Z0|", rep.centre_count),
            bare(
                "verdict",
                "objects, arrows, tensor, and braiding all match the computed centre",
            ),
        ],
    ))
}

fn lie_sections(xm: &LieCrossedModule) -> Result<Vec<Section>, Failure> {
    let z = lie_centre(xm).map_err(check_err)?;
    let mut lines = vec![kv("dim Z0", z.basis.len())];

    for (i, v) in z.basis.iter().enumerate() {
        let x = combo(&z.x_part(v), &xm.l0.labels);
        let mut maps = Vec::new();
        for t in 0..xm.l0.dim {
            let image = z.xi_apply(v, &xm.l0.basis_vec(t));
            maps.push(format!("{} -> {}", xm.l0.labels[t], combo(&image, &xm.l1.labels)));
        }
        lines.push(kv(format!("z{}", i + 1), format!("({}; {})", x, maps.join(", "))));
    }

    let zlabels: Vec<String> = (1..=z.algebra.dim).map(|i| format!("z{i}")).collect();
    let mut nonzero = 0usize;
    for i in 0..z.algebra.dim {
        for j in 0..z.algebra.dim {
            if i < j && !z.algebra.sc[i][j].iter().all(K::is_zero) {
                lines.push(kv(
                    format!("[z{}, z{}]", i + 1, j + 1),
                    combo(&z.algebra.sc[i][j], &zlabels),
                ));
                nonzero += 1;
            }
        }
    }
    if nonzero == 0 {
        lines.push(kv("bracket", "abelian"));
    }

    let h = lie_homotopy(&z).map_err(check_err)?;
    lines.push(kv("dim pi0(Z)", h.pi0.dim));
    lines.push(kv("dim pi1(Z)", h.pi1.dim));

    let rep = lie_exact_sequence_check(xm).map_err(check_err)?;
    let sequence = vec![
        kv("dim H1", rep.h1_dim),
        kv("dim pi0(Z)", rep.pi0_centre_dim),
        kv("stable dim", rep.stable_dim),
        kv("dim H2", rep.h2_dim),
        kv("dim Im f", rep.image_f_dim),
        kv("dim Im omega", rep.image_omega_dim),
        kv("dim Ker g", rep.kernel_g_dim),
        bare("verdict", "sequence is exact"),
    ];
    Ok(vec![section("lie centre", lines), section("lie sequence", sequence)])
}

/// A coordinate vector as a signed linear combination of labels.
fn combo(coords: &[K], labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let s = k_text(c);
        parts.push(match s.as_str() {
            "1" => label.clone(),
            "-1" => format!("-{label}"),
            _ => format!("{s}·{label}"),
        });
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    parts.join(" + ").replace("+ -", "- ")
}

fn k_text(c: &K) -> String {
    match c {
        K::Q(r) => r.to_string(),
        K::Fp { v, .. } => v.to_string(),
    }
}
