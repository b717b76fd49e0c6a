use std::fmt::Display;
use std::fs;

use dtopo::classify::{two_neighbor_cells, TwoCellWitness};
use dtopo::complex::{validate_u3, SurfaceRegion};
use dtopo::fixtures::{self, FixtureKind};
use dtopo::format::parse_id_list;
use dtopo::homotopy::{
    check_simply_connected_b, check_simply_connected_c, contract_to_point, crosscheck_b_c,
    find_homotopy, ContractionOutcome, CycleSpace, HomotopyCertificate, HomotopyOutcome,
    SearchBudget, SimplyConnectedReport, Verdict,
};
use dtopo::jordan::{exhaustive_jordan_suite, separation_check, SeparationMode};
use dtopo::{
    build_orientation_atlas, default_u2, is_discrete_curve, is_regular_point, is_semi_curve,
    is_simple_surface_point, neighborhood, validate_u2, CellComplex, ComplexDocument, Graph,
    SurfaceView, Vertex, VertexCycle, VertexPath,
};
use serde_json::{json, Value};

use crate::report::{Outcome, RunReport};
use crate::{BudgetArgs, Cli, Command, Input, ModeArg, VariantArg};

/// Bad input: unreadable file, malformed document, unknown vertex, or a
/// precondition the requested operation cannot work around.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub enum Output {
    Report(RunReport),
    Raw(String),
}

type Result<T> = std::result::Result<T, InputError>;

fn read_doc(input: &Input) -> Result<ComplexDocument> {
    let text = fs::read_to_string(&input.file)
        .map_err(|e| InputError(format!("{}: {e}", input.file.display())))?;
    Ok(ComplexDocument::parse(&text)?)
}

fn load(input: &Input) -> Result<CellComplex> {
    Ok(read_doc(input)?.into_complex()?)
}

fn region<'a>(cx: &'a CellComplex, input: &Input) -> Result<SurfaceRegion<'a>> {
    match &input.region {
        None => Ok(cx.whole()),
        Some(list) => {
            let vs = resolve(cx.graph(), list)?;
            Ok(cx.region(vs.into_iter().collect())?)
        }
    }
}

fn resolve(g: &Graph, list: &str) -> Result<Vec<Vertex>> {
    let ids = parse_id_list(list).map_err(InputError)?;
    Ok(g.resolve_all(ids.iter().map(String::as_str))?)
}

fn names(g: &Graph, vs: &[Vertex]) -> String {
    g.names_of(vs).join(",")
}

fn budget(b: &BudgetArgs) -> SearchBudget {
    SearchBudget {
        max_cycle_len: b.budget,
        max_steps: b.max_steps,
        max_states: b.max_states,
    }
}

fn mode(m: ModeArg) -> SeparationMode {
    match m {
        ModeArg::Pseudo => SeparationMode::PseudoPoints,
        ModeArg::Strict => SeparationMode::VerticesOnly,
    }
}

fn verdict_outcome(v: Verdict) -> Outcome {
    match v {
        Verdict::Verified => Outcome::Pass,
        Verdict::Indeterminate => Outcome::Indeterminate,
        Verdict::Refuted => Outcome::Fail,
    }
}

pub fn run(cli: &Cli, echo: String) -> Result<Output> {
    let mut r = RunReport::new(echo);
    match &cli.command {
        Command::Validate { input } => validate(&mut r, input)?,
        Command::Classify {
            input,
            vertex,
            curve,
        } => classify(&mut r, input, vertex.as_deref(), curve.as_deref())?,
        Command::U2Default { input } => u2_default(&mut r, input)?,
        Command::Boundary { input } => boundary(&mut r, input)?,
        Command::Jordan { input, curve, mode: m } => jordan(&mut r, input, curve, mode(*m))?,
        Command::JordanSuite {
            input,
            max_len,
            mode: m,
        } => jordan_suite(&mut r, input, *max_len, mode(*m))?,
        Command::SimplyConnected {
            input,
            variant,
            budget: b,
        } => simply_connected(&mut r, input, *variant, budget(b))?,
        Command::Crosscheck { input, budget: b } => crosscheck(&mut r, input, budget(b))?,
        Command::Homotopy {
            input,
            from,
            to,
            closed,
            budget: b,
        } => homotopy(&mut r, input, from, to, *closed, budget(b))?,
        Command::Contract {
            input,
            cycle,
            point,
            budget: b,
        } => contract(&mut r, input, cycle, point, budget(b))?,
        Command::Generate { kind, n, output } => {
            let kind: FixtureKind = kind.parse()?;
            let text = fixtures::generate(kind, *n)?.to_text();
            match output {
                None => return Ok(Output::Raw(text)),
                Some(path) => {
                    fs::write(path, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
                    r.check("generate", Outcome::Pass, format!("{kind} written to {}", path.display()));
                    r.data = json!({ "kind": kind.name(), "bytes": text.len() });
                }
            }
        }
    }
    Ok(Output::Report(r.finish()))
}

fn validate(r: &mut RunReport, input: &Input) -> Result<()> {
    let doc = read_doc(input)?;
    let g = doc.graph()?;
    r.check(
        "graph",
        Outcome::Pass,
        format!("{} vertices, {} edges, connected", g.vertex_count(), g.edge_count()),
    );
    let cells = if doc.cells.is_empty() {
        match default_u2(&g) {
            Ok(cells) => {
                r.check("surface-cells", Outcome::Pass, format!("{} default cells", cells.len()));
                cells
            }
            Err(e) => {
                r.check("surface-cells", Outcome::Fail, e.to_string());
                return Ok(());
            }
        }
    } else {
        let cells = doc
            .cells
            .iter()
            .map(|c| VertexCycle::from_names(&g, &c.iter().map(String::as_str).collect::<Vec<_>>()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let report = validate_u2(&g, &cells)?;
        if !report.passed() {
            r.check("surface-cells", Outcome::Fail, report.describe(&g, &cells));
            r.data = json!({ "violations": report.describe(&g, &cells) });
            return Ok(());
        }
        r.check("surface-cells", Outcome::Pass, format!("{} explicit cells", cells.len()));
        cells
    };
    let cx = CellComplex::new(g, cells)?;
    let g = cx.graph();
    if !doc.u3.is_empty() {
        let solids = doc
            .u3
            .iter()
            .map(|s| g.resolve_all(s.iter().map(String::as_str)).map(|v| v.into_iter().collect()))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        match validate_u3(&cx, &solids, Default::default()) {
            Ok(rep) if rep.passed() => r.check("3-cells", Outcome::Pass, format!("{} 3-cells", solids.len())),
            Ok(rep) => r.check("3-cells", Outcome::Fail, rep.describe(g)),
            Err(e) => r.check("3-cells", Outcome::Fail, e.to_string()),
        }
    }
    let whole = region(&cx, input)?;
    let semi = whole.is_semi_surface();
    let closed = whole.is_closed_semi_surface();
    r.check("semi-surface", Outcome::Info, yes_no(semi));
    r.check("closed", Outcome::Info, yes_no(closed));
    let atlas = build_orientation_atlas(&whole);
    r.check("orientable", Outcome::Info, yes_no(atlas.is_consistent()));
    r.section(
        "cells",
        cx.cell_ids()
            .map(|id| format!("{id} {}", names(g, cx.cell(id).travel())))
            .collect(),
    );
    r.data = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "cells": cx.cells().iter().map(|c| g.names_of(c.travel())).collect::<Vec<_>>(),
        "semi_surface": semi,
        "closed": closed,
        "orientable": atlas.is_consistent(),
    });
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(r: &mut RunReport, input: &Input, vertex: Option<&str>, curve: Option<&str>) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let reg = region(&cx, input)?;
    if let Some(name) = vertex {
        let p = g.resolve(name)?;
        if !reg.contains(p) {
            return Err(InputError(format!("vertex {name} is not in the region")));
        }
        let regular = is_regular_point(&reg, p);
        let detail = if regular {
            "cells around the point share edges at it".to_string()
        } else if reg.cells_at(p).is_empty() {
            "irregular point: no surface-cell contains it".to_string()
        } else {
            "irregular point: cells around it are not joined through edges at the point".to_string()
        };
        r.check("regular", Outcome::from_bool(regular), detail);
        let on_boundary = reg.boundary().map(|b| b.contains(&p)).ok();
        let mut data = json!({
            "vertex": name,
            "regular": regular,
            "cells": reg.cells_at(p).iter().map(|id| id.0).collect::<Vec<_>>(),
            "boundary": on_boundary,
        });
        match on_boundary {
            Some(true) => r.check("boundary point", Outcome::Info, "no link, neighbourhood is an open fan"),
            Some(false) => {
                let simple = is_simple_surface_point(&reg, p);
                r.check("simple surface point", Outcome::from_bool(simple), "");
                data["simple"] = json!(simple);
            }
            None => r.check("boundary point", Outcome::Info, "undefined: region is not a semi-surface"),
        }
        if let Ok(disk) = neighborhood(&reg, p, None) {
            if let Some(link) = &disk.link {
                r.section("link", vec![names(g, link.travel())]);
                data["link"] = json!(g.names_of(link.travel()));
            } else if let Some(chain) = &disk.chain {
                r.section("fan", vec![names(g, chain)]);
                data["fan"] = json!(g.names_of(chain));
            }
        }
        if let Ok(w) = two_neighbor_cells(&reg, p) {
            let line = match w {
                TwoCellWitness::Single(a) => format!("single cell {a}"),
                TwoCellWitness::Pair(a, b) => format!("cells {a},{b}"),
            };
            r.check("two-neighbour witness", Outcome::Info, line);
        }
        r.data = data;
    } else if let Some(list) = curve {
        let vs = resolve(g, list)?;
        let semi = is_semi_curve(g, &vs);
        r.check(
            "semi-curve",
            Outcome::from_bool(semi),
            if semi { "" } else { "not a simple path, or its vertices induce extra edges" },
        );
        let verdict = is_discrete_curve(&cx, &vs);
        let detail = match verdict.contained_cell {
            Some(id) => format!("contains surface-cell {id}"),
            None => String::new(),
        };
        r.check("discrete curve", Outcome::from_bool(verdict.is_curve()), detail);
        r.check("closed", Outcome::Info, yes_no(verdict.closed));
        r.data = json!({
            "curve": g.names_of(&vs),
            "semi_curve": semi,
            "discrete_curve": verdict.is_curve(),
            "closed": verdict.closed,
            "contained_cell": verdict.contained_cell.map(|c| c.0),
        });
    }
    Ok(())
}

fn u2_default(r: &mut RunReport, input: &Input) -> Result<()> {
    let g = read_doc(input)?.graph()?;
    match default_u2(&g) {
        Ok(cells) => {
            r.check("default surface-cells", Outcome::Pass, format!("{} cells", cells.len()));
            r.section("cells", cells.iter().map(|c| names(&g, c.travel())).collect());
            r.data = json!({ "cells": cells.iter().map(|c| g.names_of(c.travel())).collect::<Vec<_>>() });
        }
        Err(e) => r.check("default surface-cells", Outcome::Fail, e.to_string()),
    }
    Ok(())
}

fn boundary(r: &mut RunReport, input: &Input) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let reg = region(&cx, input)?;
    match reg.boundary() {
        Ok(b) => {
            let vs: Vec<Vertex> = b.into_iter().collect();
            r.check("semi-surface", Outcome::Pass, "");
            r.check("closed", Outcome::Info, yes_no(vs.is_empty()));
            r.section("boundary", vec![names(g, &vs)]);
            r.data = json!({ "boundary": g.names_of(&vs), "closed": vs.is_empty() });
        }
        Err(e) => r.check("semi-surface", Outcome::Fail, e.to_string()),
    }
    Ok(())
}

fn jordan(r: &mut RunReport, input: &Input, curve: &str, m: SeparationMode) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let view = SurfaceView::new(region(&cx, input)?)?;
    let c = VertexCycle::new(g, resolve(g, curve)?)?;
    let rep = separation_check(&view, &c, m)?;
    let expect = match m {
        SeparationMode::PseudoPoints => "exactly 2",
        SeparationMode::VerticesOnly => "at least 2",
    };
    r.check(
        "separates",
        Outcome::from_bool(rep.separates()),
        format!("{} components ({expect} required, {m})", rep.components.len()),
    );
    r.check("oracle agreement", Outcome::from_bool(rep.oracle_agrees), "");
    let violations = rep.flank_violations();
    r.check(
        "flank disconnection",
        Outcome::from_bool(violations == 0),
        format!("{violations} curve edges with both flanking cells in one component"),
    );
    for note in &rep.notes {
        r.check("note", Outcome::Info, note.clone());
    }
    let components: Vec<Value> = rep
        .components
        .iter()
        .map(|comp| {
            json!({
                "label": comp.label.to_string(),
                "nodes": comp.nodes.iter().map(|k| k.label(g)).collect::<Vec<_>>(),
            })
        })
        .collect();
    r.section(
        "components",
        rep.components
            .iter()
            .enumerate()
            .map(|(i, comp)| {
                let nodes: Vec<String> = comp.nodes.iter().map(|k| k.label(g)).collect();
                format!("{i} {}: {}", comp.label, nodes.join(" "))
            })
            .collect(),
    );
    r.section(
        "flanks",
        rep.flanks
            .iter()
            .map(|f| {
                format!(
                    "{}->{}: A={} B={} components {}/{}",
                    g.name(f.edge.0),
                    g.name(f.edge.1),
                    f.a,
                    f.b,
                    opt(f.a_component),
                    opt(f.b_component)
                )
            })
            .collect(),
    );
    r.data = json!({
        "curve": g.names_of(c.travel()),
        "mode": m.to_string(),
        "components": components,
        "flank_violations": violations,
        "oracle_agrees": rep.oracle_agrees,
    });
    Ok(())
}

fn opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

fn jordan_suite(r: &mut RunReport, input: &Input, max_len: usize, m: SeparationMode) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let view = SurfaceView::new(region(&cx, input)?)?;
    let suite = exhaustive_jordan_suite(&view, max_len, m)?;
    let non_sep = suite.non_separating().count();
    r.check("curves", Outcome::Info, format!("{} closed curves avoiding the boundary", suite.curves.len()));
    r.check(
        "all separate",
        Outcome::from_bool(non_sep == 0),
        format!("{non_sep} curves do not separate"),
    );
    r.check(
        "oracle agreement",
        Outcome::from_bool(suite.oracle_disagreements() == 0),
        format!("{} disagreements", suite.oracle_disagreements()),
    );
    r.check(
        "flank disconnection",
        Outcome::from_bool(suite.flank_violations() == 0),
        format!("{} violations", suite.flank_violations()),
    );
    let hist: Vec<String> = suite
        .component_histogram()
        .iter()
        .map(|(k, n)| format!("{k} components: {n} curves"))
        .collect();
    r.section("component counts", hist);
    r.section(
        "curves",
        suite
            .curves
            .iter()
            .map(|c| {
                format!(
                    "{}: {} components{}",
                    names(g, c.curve.travel()),
                    c.components,
                    if c.separates { "" } else { " (does not separate)" }
                )
            })
            .collect(),
    );
    r.data = json!({
        "mode": m.to_string(),
        "max_len": max_len,
        "curves": suite.curves.iter().map(|c| json!({
            "curve": g.names_of(c.curve.travel()),
            "components": c.components,
            "separates": c.separates,
            "oracle_agrees": c.oracle_agrees,
            "flank_violations": c.flank_violations,
        })).collect::<Vec<_>>(),
    });
    Ok(())
}

fn sc_json(g: &Graph, rep: &SimplyConnectedReport) -> Value {
    json!({
        "variant": rep.variant.to_string(),
        "verdict": rep.verdict.to_string(),
        "max_cycle_len": rep.budget.max_cycle_len,
        "max_steps": rep.budget.max_steps,
        "cycles": rep.cycles.iter().map(|c| json!({
            "cycle": g.names_of(c.cycle.travel()),
            "verdict": c.verdict.to_string(),
            "obstructed": c.obstructed,
        })).collect::<Vec<_>>(),
    })
}

fn sc_lines(g: &Graph, rep: &SimplyConnectedReport) -> Vec<String> {
    rep.cycles
        .iter()
        .filter(|c| c.verdict != Verdict::Verified)
        .map(|c| {
            let why = if c.obstructed {
                " (not a sum of cell boundaries)"
            } else {
                ""
            };
            format!("{}: {}{why}", names(g, c.cycle.travel()), c.verdict)
        })
        .collect()
}

fn simply_connected(r: &mut RunReport, input: &Input, v: VariantArg, b: SearchBudget) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let view = SurfaceView::new(region(&cx, input)?)?;
    let rep = match v {
        VariantArg::B => check_simply_connected_b(&view, b)?,
        VariantArg::C => check_simply_connected_c(&view, b)?,
    };
    let counts = |want: Verdict| rep.cycles.iter().filter(|c| c.verdict == want).count();
    r.check(
        &format!("simply connected ({})", rep.variant),
        verdict_outcome(rep.verdict),
        format!(
            "{}: {} cycles, {} verified, {} indeterminate, {} refuted",
            rep.verdict,
            rep.cycles.len(),
            counts(Verdict::Verified),
            counts(Verdict::Indeterminate),
            counts(Verdict::Refuted)
        ),
    );
    r.section("flagged cycles", sc_lines(g, &rep));
    r.data = sc_json(g, &rep);
    Ok(())
}

fn crosscheck(r: &mut RunReport, input: &Input, b: SearchBudget) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let view = SurfaceView::new(region(&cx, input)?)?;
    let rep = crosscheck_b_c(&view, b)?;
    r.check("variant b", Outcome::Info, rep.b.verdict.to_string());
    r.check("variant c", Outcome::Info, rep.c.verdict.to_string());
    r.check(
        "agreement",
        Outcome::from_bool(rep.disagreements.is_empty()),
        format!("{} cycles verified by one variant and refuted by the other", rep.disagreements.len()),
    );
    r.section(
        "disagreements",
        rep.disagreements.iter().map(|c| names(g, c.travel())).collect(),
    );
    r.data = json!({
        "b": sc_json(g, &rep.b),
        "c": sc_json(g, &rep.c),
        "disagreements": rep.disagreements.iter().map(|c| g.names_of(c.travel())).collect::<Vec<_>>(),
    });
    Ok(())
}

fn certificate_out(g: &Graph, cert: &HomotopyCertificate) -> (Vec<String>, Value) {
    let mut lines = Vec::new();
    let mut steps = Vec::new();
    for (i, p) in cert.sequence.iter().enumerate() {
        let via = if i == 0 {
            String::new()
        } else {
            match cert.moves[i - 1] {
                Some(id) => format!(" via cell {id}"),
                None => " (direct step)".into(),
            }
        };
        lines.push(format!("{i}: {}{via}", names(g, p.vertices())));
        steps.push(json!({
            "path": g.names_of(p.vertices()),
            "cell": if i == 0 { None } else { cert.moves[i - 1].map(|c| c.0) },
        }));
    }
    (lines, Value::Array(steps))
}

fn homotopy(r: &mut RunReport, input: &Input, from: &str, to: &str, closed: bool, b: SearchBudget) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let view = SurfaceView::new(region(&cx, input)?)?;
    let a = VertexPath::new(g, resolve(g, from)?, closed)?;
    let z = VertexPath::new(g, resolve(g, to)?, closed)?;
    let space = CycleSpace::new(view.region());
    let out = find_homotopy(&view, &space, &a, &z, b)?;
    let detail = match &out {
        HomotopyOutcome::Found(c) => format!("{} steps", c.steps()),
        HomotopyOutcome::Refuted => "the paths differ by more than a sum of cell boundaries".into(),
        HomotopyOutcome::Indeterminate { states } => format!("budget exhausted after {states} states"),
    };
    r.check("homotopy", verdict_outcome(out.verdict()), detail);
    r.data = json!({ "verdict": out.verdict().to_string() });
    if let HomotopyOutcome::Found(cert) = &out {
        let verified = cert.verify(&view);
        r.check(
            "certificate re-check",
            Outcome::from_bool(verified.is_ok()),
            verified.err().map(|e| e.to_string()).unwrap_or_default(),
        );
        let (lines, steps) = certificate_out(g, cert);
        r.section("sequence", lines);
        r.data["sequence"] = steps;
    }
    Ok(())
}

fn contract(r: &mut RunReport, input: &Input, cycle: &str, point: &str, b: SearchBudget) -> Result<()> {
    let cx = load(input)?;
    let g = cx.graph();
    let view = SurfaceView::new(region(&cx, input)?)?;
    let c = VertexCycle::new(g, resolve(g, cycle)?)?;
    let p = g.resolve(point)?;
    let space = CycleSpace::new(view.region());
    let out = contract_to_point(&view, &space, &c, p, b)?;
    let detail = match &out {
        ContractionOutcome::Contracted(c) => format!("{} steps", c.certificate.steps()),
        ContractionOutcome::Refuted => "the cycle is not a sum of cell boundaries".into(),
        ContractionOutcome::Indeterminate { states } => format!("budget exhausted after {states} states"),
    };
    r.check("contraction", verdict_outcome(out.verdict()), detail);
    r.data = json!({ "verdict": out.verdict().to_string() });
    if let ContractionOutcome::Contracted(cert) = &out {
        let verified = cert.verify(&view);
        r.check(
            "certificate re-check",
            Outcome::from_bool(verified.is_ok()),
            verified.err().map(|e| e.to_string()).unwrap_or_default(),
        );
        let (lines, steps) = certificate_out(g, &cert.certificate);
        r.section("sequence", lines);
        r.data["sequence"] = steps;
    }
    Ok(())
}
