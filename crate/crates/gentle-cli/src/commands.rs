use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};

use gentle::arcs::{classify_arc, reduce_to_collection, ArcError};
use gentle::decomp::Decision;
use gentle::engine::Engine;
use gentle::field::Field;
use gentle::files::{collection_text, marked_point, parse_word_list, WordList};
use gentle::pointed::{psi_path, regions_and_tau, to_pointed, LoopTag, Regions};
use gentle::quiver::{parse_algebra_any, AlgebraError, GentleAlgebra};
use gentle::strings::{enumerate_bands, enumerate_strings, parse_word, GradedString, Letter, Word};
use gentle::thick::{
    eliminate_bands, equiv_gen, is_generated, leq_gen, poset, Comparison, EliminationError, Factorization,
    Membership, SearchBounds,
};
use gentle::walk::{end_points, glue, End};

use crate::render;
use crate::report::{fail, Report, Status};
use crate::{Cli, CollArg, RenderWhat, Verb};

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.verb {
        Verb::Validate(a) => validate(&a.alg),
        Verb::Paths { alg, from, to } => paths(&load(&alg.alg)?, from.as_deref(), to.as_deref()),
        Verb::Strings { alg, classify } => strings(cli, &load(&alg.alg)?, *classify),
        Verb::Bands(a) => bands(cli, &load(&a.alg)?),
        Verb::Hom { alg, from, to } => hom(&engine(cli, &alg.alg)?, from, to),
        Verb::Cone { alg, from, to, shift, index } => cone(&engine(cli, &alg.alg)?, from, to, *shift, *index),
        Verb::Classify { alg, word } => classify(&engine(cli, &alg.alg)?, word),
        Verb::Glue { alg, first, second } => glue_all(&engine(cli, &alg.alg)?, first, second),
        Verb::Reduce { alg, collection } => reduce(cli, &engine(cli, &alg.alg)?, collection),
        Verb::Pointed { alg, coll } => pointed(cli, &engine(cli, &alg.alg)?, coll),
        Verb::Regions { alg, coll } => regions(&engine(cli, &alg.alg)?, coll),
        Verb::Member { alg, target, collection, cert } => {
            member(cli, &engine(cli, &alg.alg)?, target, collection, cert.as_deref())
        }
        Verb::Leq { alg, lower, upper } => leq(cli, &engine(cli, &alg.alg)?, lower, upper),
        Verb::Equiv { alg, first, second } => equiv(cli, &engine(cli, &alg.alg)?, first, second),
        Verb::EliminateBands { alg, generators } => eliminate(cli, &engine(cli, &alg.alg)?, generators),
        Verb::Poset { alg, max_size } => poset_cmd(cli, &engine(cli, &alg.alg)?, *max_size),
        Verb::Render { what, output, reproducible } => render_cmd(cli, what, output.as_deref(), *reproducible),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| fail(Status::Usage, format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GentleAlgebra> {
    match parse_algebra_any(&read(path)?) {
        Ok(a) => Ok(a),
        Err(e @ AlgebraError::NotGentle(_)) => Err(fail(Status::Negative, format!("{}: {e}", path.display()))),
        Err(e) => Err(fail(Status::Usage, format!("{}: {e}", path.display()))),
    }
}

fn field(cli: &Cli) -> Result<Field> {
    Field::new(cli.field).ok_or_else(|| fail(Status::Usage, format!("field order {} is not a prime below 32768", cli.field)))
}

fn engine(cli: &Cli, path: &Path) -> Result<Engine> {
    Ok(Engine::new(load(path)?, field(cli)?))
}

fn bounds(cli: &Cli) -> SearchBounds {
    SearchBounds { max_letters: cli.max_letters, max_depth: cli.max_depth, ..SearchBounds::standard() }
}

fn word(alg: &GentleAlgebra, text: &str) -> Result<Word> {
    parse_word(alg, text).map_err(|e| fail(Status::Usage, format!("`{text}`: {e}")))
}

fn string(alg: &GentleAlgebra, text: &str) -> Result<GradedString> {
    match word(alg, text)? {
        Word::String(s) => Ok(s),
        Word::Band(_) => Err(fail(Status::Usage, format!("`{text}` is a band; a string is required"))),
    }
}

fn list(alg: &GentleAlgebra, path: &Path) -> Result<WordList> {
    parse_word_list(alg, &read(path)?).map_err(|e| fail(Status::Usage, format!("{}: {e}", path.display())))
}

fn string_list(alg: &GentleAlgebra, path: &Path) -> Result<(Vec<GradedString>, Option<usize>)> {
    let l = list(alg, path)?;
    let arcs = l.strings().ok_or_else(|| fail(Status::Usage, format!("{}: bands are not allowed here", path.display())))?;
    Ok((arcs, l.basepoint))
}

fn arc_err(e: ArcError) -> anyhow::Error {
    let status = match e {
        ArcError::BoundExhausted(_) | ArcError::Undecided(_) => Status::Undecided,
        _ => Status::Negative,
    };
    fail(status, e.to_string())
}

fn lits(alg: &GentleAlgebra, ss: &[GradedString]) -> Vec<String> {
    ss.iter().map(|s| s.literal(alg)).collect()
}

fn letters_literal(alg: &GentleAlgebra, ls: &[Letter]) -> String {
    ls.iter().map(|l| l.literal(alg)).collect::<Vec<_>>().join(" ")
}

fn end_name(e: End) -> &'static str {
    match e {
        End::Left => "left",
        End::Right => "right",
    }
}

fn point_name(alg: &GentleAlgebra, p: usize) -> String {
    alg.threads()[p].name.clone()
}

fn validate(path: &Path) -> Result<Report> {
    let text = read(path)?;
    match parse_algebra_any(&text) {
        Ok(a) => match a.smoothness_witness() {
            None => Ok(Report::new(
                "validate",
                Status::Ok,
                "gentle, homologically smooth\n".into(),
                json!({ "gentle": true, "smooth": true, "violations": [] }),
            )),
            Some(c) => {
                let cycle: Vec<&str> = c.iter().map(|&x| a.arrow(x).name.as_str()).collect();
                Ok(Report::new(
                    "validate",
                    Status::Negative,
                    format!("gentle, not homologically smooth: every composition in I along the cycle {}\n", cycle.join(" ")),
                    json!({ "gentle": true, "smooth": false, "cycle": cycle, "violations": [] }),
                ))
            }
        },
        Err(AlgebraError::NotGentle(vs)) => {
            let mut out = String::from("not gentle\n");
            for v in &vs {
                writeln!(out, "  {v}").unwrap();
            }
            let j: Vec<Value> = vs
                .iter()
                .map(|v| json!({ "clause": v.clause.name(), "witness": v.witness, "detail": v.detail }))
                .collect();
            Ok(Report::new("validate", Status::Negative, out, json!({ "gentle": false, "smooth": false, "violations": j })))
        }
        Err(e) => Err(fail(Status::Usage, format!("{}: {e}", path.display()))),
    }
}

fn vertex(alg: &GentleAlgebra, name: &str) -> Result<usize> {
    alg.vertex_by_name(name).ok_or_else(|| fail(Status::Usage, format!("unknown vertex `{name}`")))
}

fn paths(alg: &GentleAlgebra, from: Option<&str>, to: Option<&str>) -> Result<Report> {
    let all: Vec<usize> = (0..alg.num_vertices()).collect();
    let froms = match from {
        Some(v) => vec![vertex(alg, v)?],
        None => all.clone(),
    };
    let tos = match to {
        Some(v) => vec![vertex(alg, v)?],
        None => all,
    };
    let mut out = String::new();
    let mut j = Vec::new();
    for &v in &froms {
        for &u in &tos {
            let ps: Vec<String> = alg.permitted_paths(v, u).iter().map(|&p| alg.path_name(p)).collect();
            if ps.is_empty() && (from.is_none() || to.is_none()) {
                continue;
            }
            writeln!(out, "{} -> {}: {}", alg.vertex_name(v), alg.vertex_name(u), ps.join(" ")).unwrap();
            j.push(json!({ "from": alg.vertex_name(v), "to": alg.vertex_name(u), "paths": ps }));
        }
    }
    Ok(Report::new("paths", Status::Ok, out, Value::Array(j)))
}

fn strings(cli: &Cli, alg: &GentleAlgebra, annotate: bool) -> Result<Report> {
    let n = cli.max_letters.unwrap_or(3);
    let e = Engine::new(alg.clone(), field(cli)?);
    let mut out = String::new();
    let mut j = Vec::new();
    for s in enumerate_strings(alg, n) {
        let lit = s.literal(alg);
        if annotate {
            let kind = classify_arc(&e, &s).map_err(arc_err)?.kind;
            writeln!(out, "{lit}  # {kind}").unwrap();
            j.push(json!({ "string": lit, "kind": kind.to_string() }));
        } else {
            writeln!(out, "{lit}").unwrap();
            j.push(json!({ "string": lit }));
        }
    }
    Ok(Report::new("strings", Status::Ok, out, Value::Array(j)))
}

fn bands(cli: &Cli, alg: &GentleAlgebra) -> Result<Report> {
    let n = cli.max_letters.unwrap_or(4);
    let bs: Vec<String> = enumerate_bands(alg, field(cli)?, n).iter().map(|b| b.literal(alg)).collect();
    let mut out = String::new();
    for b in &bs {
        writeln!(out, "{b}").unwrap();
    }
    Ok(Report::new("bands", Status::Ok, out, json!(bs)))
}

fn hom(e: &Engine, from: &str, to: &str) -> Result<Report> {
    let a = e.complex(&word(&e.alg, from)?);
    let b = e.complex(&word(&e.alg, to)?);
    let t = e.hom_table(&a, &b);
    let dims: serde_json::Map<String, Value> = t.nonzero().map(|(k, d)| (k.to_string(), json!(d))).collect();
    Ok(Report::new("hom", Status::Ok, format!("{t}\n"), json!({ "dims": dims, "total": t.total() })))
}

fn decomposition_json(alg: &GentleAlgebra, parts: &[(Word, usize)]) -> Value {
    parts.iter().map(|(w, m)| json!({ "word": w.literal(alg), "multiplicity": m })).collect()
}

fn cone(e: &Engine, from: &str, to: &str, shift: i32, index: usize) -> Result<Report> {
    let alg = &e.alg;
    let a = e.complex(&word(alg, from)?);
    let b = e.complex(&word(alg, to)?).shift(e.f, shift);
    let basis = e.hom_basis(&a, &b);
    let Some(m) = basis.get(index) else {
        return Err(fail(Status::Negative, format!("Hom(A, B[{shift}]) has dimension {}; no basis element {index}", basis.len())));
    };
    let c = e.cone(m);
    let mut out = c.dump(alg);
    let (status, parts) = match e.decompose(&c) {
        Decision::Yes(parts) => {
            let names: Vec<String> =
                parts.iter().map(|(w, k)| if *k > 1 { format!("{} (x{k})", w.literal(alg)) } else { w.literal(alg) }).collect();
            writeln!(out, "summands: {}", if names.is_empty() { "none".into() } else { names.join(", ") }).unwrap();
            (Status::Ok, decomposition_json(alg, &parts))
        }
        Decision::No => {
            out.push_str("summands: not a sum of strings and bands\n");
            (Status::Negative, Value::Null)
        }
        Decision::Undecided(r) => {
            writeln!(out, "summands: undecided ({r})").unwrap();
            (Status::Undecided, Value::Null)
        }
    };
    Ok(Report::new(
        "cone",
        status,
        out,
        json!({ "hom_dim": basis.len(), "cone": c.to_json(alg), "summands": parts }),
    ))
}

fn classify(e: &Engine, text: &str) -> Result<Report> {
    let alg = &e.alg;
    let s = string(alg, text)?;
    let a = classify_arc(e, &s).map_err(arc_err)?;
    let (l, r) = (point_name(alg, a.ends.0), point_name(alg, a.ends.1));
    let out = format!(
        "{}: {}\nself-hom: {}\nself-crossings: {}\nends: {} {}\n",
        s.literal(alg),
        a.kind,
        a.self_hom,
        a.self_crossings,
        l,
        r
    );
    Ok(Report::new(
        "classify",
        Status::Ok,
        out,
        json!({
            "string": s.literal(alg),
            "kind": a.kind.to_string(),
            "self_hom": a.self_hom,
            "self_crossings": a.self_crossings,
            "ends": [l, r],
            "closed": a.is_closed(),
        }),
    ))
}

fn glue_all(e: &Engine, first: &str, second: &str) -> Result<Report> {
    let alg = &e.alg;
    let s = string(alg, first)?;
    let t = string(alg, second)?;
    let mut out = String::new();
    let mut j = Vec::new();
    for se in [End::Left, End::Right] {
        for te in [End::Left, End::Right] {
            for g in glue(e, &s, se, &t, te) {
                let lit = g.walk.string.literal(alg);
                let dir = if g.forward { "first to second" } else { "second to first" };
                writeln!(out, "{} + {}: {}  (shift {}, morphism {})", end_name(se), end_name(te), lit, g.shift, dir).unwrap();
                j.push(json!({
                    "first_end": end_name(se),
                    "second_end": end_name(te),
                    "string": lit,
                    "shift": g.shift,
                    "forward": g.forward,
                }));
            }
        }
    }
    let status = if j.is_empty() { Status::Negative } else { Status::Ok };
    if j.is_empty() {
        out.push_str("no concatenation\n");
    }
    Ok(Report::new("glue", status, out, Value::Array(j)))
}

fn reduce(cli: &Cli, e: &Engine, path: &Path) -> Result<Report> {
    let alg = &e.alg;
    let (gens, _) = string_list(alg, path)?;
    let r = reduce_to_collection(e, &gens, cli.max_depth.unwrap_or(64)).map_err(arc_err)?;
    let measures: Vec<String> = r.measures.iter().map(|m| m.to_string()).collect();
    let out = format!("# interior crossings per round: {}\n{}", measures.join(" "), collection_text(alg, &r.arcs, None));
    Ok(Report::new("reduce", Status::Ok, out, json!({ "arcs": lits(alg, &r.arcs), "measures": r.measures })))
}

fn basepoint(alg: &GentleAlgebra, coll: &CollArg, file: Option<usize>, arcs: &[GradedString]) -> Result<usize> {
    if let Some(name) = &coll.basepoint {
        return marked_point(alg, name).ok_or_else(|| fail(Status::Usage, format!("unknown marked point `{name}`")));
    }
    if let Some(p) = file {
        return Ok(p);
    }
    arcs.first().map(|s| end_points(alg, s).0).ok_or_else(|| fail(Status::Usage, "empty collection"))
}

fn pointed(cli: &Cli, e: &Engine, coll: &CollArg) -> Result<Report> {
    let alg = &e.alg;
    let (arcs, file_bp) = string_list(alg, &coll.collection)?;
    let v = basepoint(alg, coll, file_bp, &arcs)?;
    let p = to_pointed(e, &arcs, v, cli.max_depth.unwrap_or(64)).map_err(arc_err)?;
    let mut out = String::new();
    for st in &p.steps {
        let what = if st.dropped { "dropped" } else { "replaced by" };
        writeln!(
            out,
            "# arc {} {what} {} via arc {} at {}",
            st.replaced,
            st.glued.literal(alg),
            st.via,
            point_name(alg, st.point)
        )
        .unwrap();
    }
    out.push_str(&collection_text(alg, &p.arcs, Some(v)));
    let steps: Vec<Value> = p
        .steps
        .iter()
        .map(|st| {
            json!({
                "replaced": st.replaced,
                "via": st.via,
                "point": point_name(alg, st.point),
                "glued": st.glued.literal(alg),
                "dropped": st.dropped,
            })
        })
        .collect();
    Ok(Report::new(
        "pointed",
        Status::Ok,
        out,
        json!({ "basepoint": point_name(alg, v), "arcs": lits(alg, &p.arcs), "steps": steps }),
    ))
}

pub fn regions_of(e: &Engine, coll: &CollArg) -> Result<(Vec<GradedString>, usize, Regions)> {
    let alg = &e.alg;
    let (arcs, file_bp) = string_list(alg, &coll.collection)?;
    let v = basepoint(alg, coll, file_bp, &arcs)?;
    let r = regions_and_tau(e, &arcs, v).map_err(arc_err)?;
    Ok((arcs, v, r))
}

fn regions(e: &Engine, coll: &CollArg) -> Result<Report> {
    let alg = &e.alg;
    let (arcs, v, r) = regions_of(e, coll)?;
    let mut out = format!("basepoint: {}\n", point_name(alg, v));
    for (i, h) in r.order.iter().enumerate() {
        writeln!(out, "half-edge {}: {} ({} end)", i + 1, arcs[h.arc].literal(alg), end_name(h.end)).unwrap();
    }
    for (k, kind) in r.kinds.iter().enumerate() {
        writeln!(out, "region {k}: {kind:?}").unwrap();
    }
    let mut psis = Vec::new();
    for (&k, orbit) in &r.orbits {
        let o: Vec<String> = orbit.iter().map(|x| x.to_string()).collect();
        writeln!(out, "tau orbit of {k}: {}", o.join(" -> ")).unwrap();
        let psi = psi_path(e, &arcs, &r, k).map_err(arc_err)?;
        let closing = psi.closing.as_ref().map(|(w, tag)| {
            let t = match tag {
                LoopTag::Band => "band",
                LoopTag::UngradedLoop => "ungraded loop",
            };
            (letters_literal(alg, w), t)
        });
        match &closing {
            Some((w, t)) => writeln!(out, "psi path of {k}: {}  (closes to {t} [{w}])", psi.string.literal(alg)).unwrap(),
            None => writeln!(out, "psi path of {k}: {}", psi.string.literal(alg)).unwrap(),
        }
        psis.push(json!({
            "region": k,
            "orbit": orbit,
            "string": psi.string.literal(alg),
            "arcs": psi.arcs,
            "closing": closing.map(|(w, t)| json!({ "word": w, "kind": t })),
        }));
    }
    let order: Vec<Value> = r.order.iter().map(|h| json!({ "arc": h.arc, "end": end_name(h.end) })).collect();
    let kinds: Vec<String> = r.kinds.iter().map(|k| format!("{k:?}")).collect();
    let tau: serde_json::Map<String, Value> = r.tau.iter().map(|(k, t)| (k.to_string(), json!(t))).collect();
    Ok(Report::new(
        "regions",
        Status::Ok,
        out,
        json!({ "basepoint": point_name(alg, v), "half_edges": order, "regions": kinds, "tau": tau, "psi": psis }),
    ))
}

/// Certificate text: the target, the arcs and the gluing steps.
fn certificate(alg: &GentleAlgebra, target: &GradedString, arcs: &[GradedString], f: &Factorization) -> String {
    let mut out = String::from("# gentle certificate\n");
    writeln!(out, "target: {}", target.literal(alg)).unwrap();
    for (i, a) in arcs.iter().enumerate() {
        writeln!(out, "arc {i}: {}", a.literal(alg)).unwrap();
    }
    writeln!(out, "start: {}", f.start).unwrap();
    for st in &f.steps {
        writeln!(out, "glue: {} {} {} => {}", end_name(st.at), st.arc, end_name(st.arc_end), st.result.literal(alg)).unwrap();
    }
    out
}

fn factorization_json(alg: &GentleAlgebra, f: &Factorization) -> Value {
    let steps: Vec<Value> = f
        .steps
        .iter()
        .map(|st| json!({ "at": end_name(st.at), "arc": st.arc, "arc_end": end_name(st.arc_end), "result": st.result.literal(alg) }))
        .collect();
    json!({ "start": f.start, "steps": steps })
}

fn member(cli: &Cli, e: &Engine, target: &str, path: &Path, cert: Option<&Path>) -> Result<Report> {
    let alg = &e.alg;
    let t = string(alg, target)?;
    let (arcs, _) = string_list(alg, path)?;
    let lit = t.literal(alg);
    match is_generated(e, &t, &arcs, bounds(cli)) {
        Membership::Generated(f) => {
            let c = certificate(alg, &t, &arcs, &f);
            if let Some(p) = cert {
                fs::write(p, &c).with_context(|| format!("cannot write {}", p.display()))?;
            }
            Ok(Report::new(
                "member",
                Status::Ok,
                format!("{lit}: generated\n{c}"),
                json!({ "target": lit, "generated": true, "factorization": factorization_json(alg, &f) }),
            ))
        }
        Membership::NotGenerated(r) => Ok(Report::new(
            "member",
            Status::Negative,
            format!("{lit}: not generated: {r}\n"),
            json!({ "target": lit, "generated": false, "refutation": r.to_string() }),
        )),
        Membership::BoundExhausted { states, reason } => Ok(Report::new(
            "member",
            Status::Undecided,
            format!("{lit}: bound exhausted after {states} states: {reason}\n"),
            json!({ "target": lit, "generated": null, "states": states, "reason": reason }),
        )),
    }
}

fn comparison(alg: &GentleAlgebra, lower: &[GradedString], c: &Comparison) -> (Status, String, Value) {
    match c {
        Comparison::Yes(fs) => {
            let j: Vec<Value> = fs.iter().map(|f| factorization_json(alg, f)).collect();
            (Status::Ok, "yes".into(), json!({ "holds": true, "factorizations": j }))
        }
        Comparison::No { arc, refutation } => (
            Status::Negative,
            format!("no: {} is not generated ({refutation})", lower[*arc].literal(alg)),
            json!({ "holds": false, "arc": lower[*arc].literal(alg), "refutation": refutation.to_string() }),
        ),
        Comparison::BoundExhausted { arc, reason } => (
            Status::Undecided,
            format!("undecided: {} ({reason})", lower[*arc].literal(alg)),
            json!({ "holds": null, "arc": lower[*arc].literal(alg), "reason": reason }),
        ),
    }
}

fn leq(cli: &Cli, e: &Engine, lower: &Path, upper: &Path) -> Result<Report> {
    let alg = &e.alg;
    let (a, _) = string_list(alg, lower)?;
    let (b, _) = string_list(alg, upper)?;
    let (status, text, j) = comparison(alg, &a, &leq_gen(e, &a, &b, bounds(cli)));
    Ok(Report::new("leq", status, format!("{text}\n"), j))
}

fn equiv(cli: &Cli, e: &Engine, first: &Path, second: &Path) -> Result<Report> {
    let alg = &e.alg;
    let (a, _) = string_list(alg, first)?;
    let (b, _) = string_list(alg, second)?;
    let q = equiv_gen(e, &a, &b, bounds(cli));
    let (_, t1, j1) = comparison(alg, &a, &q.forward);
    let (_, t2, j2) = comparison(alg, &b, &q.backward);
    let status = match q.decision() {
        Decision::Yes(_) => Status::Ok,
        Decision::No => Status::Negative,
        Decision::Undecided(_) => Status::Undecided,
    };
    Ok(Report::new(
        "equiv",
        status,
        format!("first <= second: {t1}\nsecond <= first: {t2}\n"),
        json!({ "equivalent": status == Status::Ok, "forward": j1, "backward": j2 }),
    ))
}

fn eliminate(cli: &Cli, e: &Engine, path: &Path) -> Result<Report> {
    let alg = &e.alg;
    let gens = list(alg, path)?.words;
    match eliminate_bands(e, &gens, cli.max_depth.unwrap_or(3)) {
        Ok((strings, reps)) => {
            let mut out = String::new();
            for r in &reps {
                writeln!(
                    out,
                    "# {} replaced: {}[{}] -> band with cone {}",
                    r.band.literal(alg),
                    r.source.literal(alg),
                    r.shift,
                    r.cone.literal(alg)
                )
                .unwrap();
            }
            out.push_str(&collection_text(alg, &strings, None));
            let j: Vec<Value> = reps
                .iter()
                .map(|r| {
                    json!({
                        "band": r.band.literal(alg),
                        "source": r.source.literal(alg),
                        "shift": r.shift,
                        "cone": r.cone.literal(alg),
                    })
                })
                .collect();
            Ok(Report::new("eliminate-bands", Status::Ok, out, json!({ "strings": lits(alg, &strings), "replacements": j })))
        }
        Err(err) => {
            let status = match err {
                EliminationError::BoundExhausted(_) | EliminationError::Undecided(_) => Status::Undecided,
                EliminationError::NoStringPresent | EliminationError::NotConnected => Status::Negative,
            };
            Err(fail(status, err.to_string()))
        }
    }
}

pub fn build_poset(cli: &Cli, e: &Engine, max_size: usize) -> Result<gentle::thick::Poset> {
    poset(e, cli.max_letters.unwrap_or(3), max_size, bounds(cli)).map_err(arc_err)
}

fn poset_cmd(cli: &Cli, e: &Engine, max_size: usize) -> Result<Report> {
    let p = build_poset(cli, e, max_size)?;
    let status = if p.unknown.is_empty() { Status::Ok } else { Status::Undecided };
    let j = serde_json::to_value(&p).expect("poset serializes");
    Ok(Report::new("poset", status, p.to_dot(), j))
}

fn render_cmd(cli: &Cli, what: &RenderWhat, output: Option<&Path>, reproducible: bool) -> Result<Report> {
    let svg = match what {
        RenderWhat::Star { alg, coll } => {
            let e = engine(cli, &alg.alg)?;
            let (arcs, v, r) = regions_of(&e, coll)?;
            render::star(&e.alg, &arcs, v, &r)
        }
        RenderWhat::Complex { alg, word: w } => {
            let a = load(&alg.alg)?;
            render::complex(&a, &word(&a, w)?)
        }
        RenderWhat::Hasse { alg, max_size } => {
            let e = engine(cli, &alg.alg)?;
            render::hasse(&build_poset(cli, &e, *max_size)?)
        }
    };
    let svg = render::finish(svg, reproducible);
    match output {
        Some(p) => {
            fs::write(p, &svg).with_context(|| format!("cannot write {}", p.display()))?;
            Ok(Report::new("render", Status::Ok, format!("wrote {}\n", p.display()), json!({ "file": p.display().to_string() })))
        }
        None => Ok(Report::new("render", Status::Ok, svg.clone(), json!({ "svg": svg }))),
    }
}
