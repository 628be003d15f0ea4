use std::fmt::Write as _;
use std::path::Path;
use std::sync::mpsc;

use anyhow::{bail, Context};
use serde::Serialize;

use super::{Cli, Command, Outcome};
use crate::enumeration::{fundamental_solutions, vertex_solutions, EnumerationOptions};
use crate::normal::{euler_characteristic, matching_system, satisfies_quad_condition, weight, NormalVector};
use crate::par::Execution;
use crate::triangulation::{homology_h1, kneser_bound, Coefficients, Triangulation};
use crate::unknot::{decide_unknot, knot_complement_issue, verify_certificate, Certificate, UnknotDiagnostics, Verdict};
use crate::wirtinger::{
    abelianization, find_noncyclic_rep_with, parse_pd, wirtinger_presentation, PermutationAssignment,
    WirtingerPresentation,
};
use crate::SCHEMA_VERSION;

pub(super) fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { file, certificate } => validate(file, certificate.as_deref(), g.json),
        Command::Analyze { file } => analyze(file, g.json),
        Command::Enumerate { file, vertex, admissible, method, .. } => {
            let opts = EnumerationOptions {
                admissible_only: *admissible,
                box_volume_cap: g.box_cap,
                method: (*method).into(),
                execution: Execution::Parallel,
            };
            enumerate(file, *vertex, &opts, g.json)
        }
        Command::Unknot { file, pd } => {
            let opts = EnumerationOptions { box_volume_cap: g.box_cap, ..EnumerationOptions::default() };
            unknot(file, pd.as_deref(), &opts, g.n_max.into(), g.json)
        }
        Command::CertifyKnotted { pd } => certify_knotted(pd, g.n_max.into(), g.json),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_triangulation(path: &Path) -> anyhow::Result<Triangulation> {
    Triangulation::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_presentation(path: &Path) -> anyhow::Result<WirtingerPresentation> {
    let d = parse_pd(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(wirtinger_presentation(&d)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ValidateReport {
    schema_version: u32,
    kind: &'static str,
    valid: bool,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    tetrahedra: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    crossings: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_valid: Option<bool>,
}

fn validate(file: &Path, certificate: Option<&Path>, json: bool) -> anyhow::Result<Outcome> {
    let text = read(file)?;
    let looks_like_pd = matches!(
        serde_json::from_str::<serde_json::Value>(&text),
        Ok(serde_json::Value::Array(_) | serde_json::Value::String(_))
    );
    let mut report = ValidateReport {
        schema_version: SCHEMA_VERSION,
        kind: if looks_like_pd { "pd" } else { "triangulation" },
        valid: false,
        message: String::new(),
        tetrahedra: None,
        crossings: None,
        certificate_valid: None,
    };
    if looks_like_pd {
        if certificate.is_some() {
            bail!("certificates are checked against triangulations, not PD codes");
        }
        match parse_pd(&text).map_err(anyhow::Error::from).and_then(|d| {
            wirtinger_presentation(&d)?;
            Ok(d)
        }) {
            Ok(d) => {
                report.valid = true;
                report.crossings = Some(d.crossing_count());
                report.message = format!("ok, {} crossings", d.crossing_count());
            }
            Err(e) => report.message = format!("{e:#}"),
        }
    } else {
        match Triangulation::from_json(&text) {
            Ok(tri) => {
                report.valid = true;
                report.tetrahedra = Some(tri.size());
                report.message = format!("ok, {} tetrahedra", tri.size());
                if let Some(path) = certificate {
                    let cert: Certificate = serde_json::from_str(&read(path)?)
                        .with_context(|| format!("parsing {}", path.display()))?;
                    match verify_certificate(&tri, &cert) {
                        Ok(_) => {
                            report.certificate_valid = Some(true);
                            report.message.push_str("; certificate verified");
                        }
                        Err(e) => {
                            report.valid = false;
                            report.certificate_valid = Some(false);
                            report.message = format!("certificate rejected: {e}");
                        }
                    }
                }
            }
            Err(e) => report.message = e.to_string(),
        }
    }
    let code = if report.valid { 0 } else { 1 };
    let output = if json { to_json(&report) } else { format!("{}\n", report.message) };
    Ok(Outcome { code, output })
}

#[derive(Serialize)]
struct BoundaryReport {
    triangles: usize,
    euler: i64,
    orientable: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema_version: u32,
    triangulation_sha256: String,
    tetrahedra: usize,
    vertices: usize,
    edges: usize,
    faces: usize,
    matching_equations: usize,
    closed: bool,
    boundary: Vec<BoundaryReport>,
    h1: String,
    h1_free_rank: usize,
    h1_torsion: Vec<u64>,
    h1_mod2_dim: usize,
    kneser_bound: usize,
    knot_complement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    knot_complement_issue: Option<String>,
}

fn analyze(file: &Path, json: bool) -> anyhow::Result<Outcome> {
    let tri = load_triangulation(file)?;
    let sk = tri.skeleton();
    let h1 = homology_h1(&tri, Coefficients::Integers);
    let h1_2 = homology_h1(&tri, Coefficients::Mod2);
    let issue = knot_complement_issue(&tri);
    let report = AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        triangulation_sha256: tri.checksum(),
        tetrahedra: tri.size(),
        vertices: sk.vertex_count(),
        edges: sk.edge_count(),
        faces: sk.face_count(),
        matching_equations: matching_system(&tri).len(),
        closed: tri.is_closed(),
        boundary: tri
            .boundary()
            .components
            .iter()
            .map(|c| BoundaryReport { triangles: c.triangles.len(), euler: c.euler, orientable: c.orientable })
            .collect(),
        h1: h1.to_string(),
        h1_free_rank: h1.free_rank,
        h1_torsion: h1.torsion.clone(),
        h1_mod2_dim: h1_2.coefficient_field_dim,
        kneser_bound: kneser_bound(&tri),
        knot_complement: issue.is_none(),
        knot_complement_issue: issue,
    };
    if json {
        return Ok(Outcome { code: 0, output: to_json(&report) });
    }
    let mut out = String::new();
    writeln!(out, "tetrahedra: {}", report.tetrahedra)?;
    writeln!(out, "vertices / edges / faces: {} / {} / {}", report.vertices, report.edges, report.faces)?;
    writeln!(out, "matching equations: {}", report.matching_equations)?;
    if report.closed {
        writeln!(out, "boundary: empty")?;
    }
    for (i, b) in report.boundary.iter().enumerate() {
        let kind = if b.orientable { "orientable" } else { "non-orientable" };
        writeln!(out, "boundary component {i}: {} triangles, euler {}, {kind}", b.triangles, b.euler)?;
    }
    writeln!(out, "H1: {}", report.h1)?;
    writeln!(out, "H1 mod 2 dimension: {}", report.h1_mod2_dim)?;
    writeln!(out, "Kneser bound: {}", report.kneser_bound)?;
    match &report.knot_complement_issue {
        None => writeln!(out, "knot complement: yes")?,
        Some(issue) => writeln!(out, "knot complement: no ({issue})")?,
    }
    Ok(Outcome { code: 0, output: out })
}

#[derive(Serialize)]
struct SolutionReport {
    vector: NormalVector,
    admissible: bool,
    /// Only defined for admissible solutions.
    euler: Option<i64>,
    weight: u64,
}

#[derive(Serialize)]
struct EnumerateReport {
    schema_version: u32,
    triangulation_sha256: String,
    kind: &'static str,
    admissible_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    search_volume: Option<u64>,
    count: usize,
    solutions: Vec<SolutionReport>,
}

fn enumerate(file: &Path, vertex: bool, opts: &EnumerationOptions, json: bool) -> anyhow::Result<Outcome> {
    let tri = load_triangulation(file)?;
    let sys = matching_system(&tri);
    let (vectors, search_volume) = if vertex {
        (vertex_solutions(&sys, opts)?.vertices, None)
    } else {
        let set = fundamental_solutions(&sys, opts)?;
        (set.solutions, Some(set.search_volume))
    };
    let solutions = vectors
        .into_iter()
        .map(|x| {
            let admissible = satisfies_quad_condition(&x);
            let euler = if admissible { Some(euler_characteristic(&tri, &x)?) } else { None };
            let weight = weight(&tri, &x)?;
            Ok(SolutionReport { vector: x, admissible, euler, weight })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let report = EnumerateReport {
        schema_version: SCHEMA_VERSION,
        triangulation_sha256: tri.checksum(),
        kind: if vertex { "vertex" } else { "fundamental" },
        admissible_only: opts.admissible_only,
        method: (!vertex).then(|| opts.method.to_string()),
        search_volume,
        count: solutions.len(),
        solutions,
    };
    if json {
        return Ok(Outcome { code: 0, output: to_json(&report) });
    }
    let mut out = String::new();
    writeln!(out, "{} {} solutions", report.count, report.kind)?;
    for s in &report.solutions {
        let euler = s.euler.map_or("-".to_string(), |e| e.to_string());
        let flag = if s.admissible { "admissible" } else { "not admissible" };
        writeln!(out, "{:?}  chi {euler}  weight {}  {flag}", s.vector, s.weight)?;
    }
    Ok(Outcome { code: 0, output: out })
}

#[derive(Serialize, Clone)]
struct KnotGroupReport {
    n_max: usize,
    presentation: String,
    abelianization: String,
    result: &'static str,
    assignment: Option<PermutationAssignment>,
}

fn knot_group(p: &WirtingerPresentation, n_max: usize) -> KnotGroupReport {
    let assignment = find_noncyclic_rep_with(p, n_max, Execution::Parallel);
    KnotGroupReport {
        n_max,
        presentation: p.to_string(),
        abelianization: abelianization(p),
        result: if assignment.is_some() { "knotted" } else { "inconclusive" },
        assignment,
    }
}

fn knot_group_text(out: &mut String, r: &KnotGroupReport) -> std::fmt::Result {
    match &r.assignment {
        Some(a) => {
            writeln!(out, "knotted: non-cyclic representation into S_{} (image order {})", a.n, a.image_order)?;
            for (i, g) in a.images.iter().enumerate() {
                writeln!(out, "  x{} -> {g}", i + 1)?;
            }
            Ok(())
        }
        None => writeln!(out, "inconclusive: no non-cyclic representation into S_n for n <= {}", r.n_max),
    }
}

fn certify_knotted(pd: &Path, n_max: usize, json: bool) -> anyhow::Result<Outcome> {
    let p = load_presentation(pd)?;
    let report = knot_group(&p, n_max);
    let code = if report.assignment.is_some() { 1 } else { 0 };
    if json {
        #[derive(Serialize)]
        struct Doc {
            schema_version: u32,
            #[serde(flatten)]
            report: KnotGroupReport,
        }
        return Ok(Outcome { code, output: to_json(&Doc { schema_version: SCHEMA_VERSION, report }) });
    }
    let mut out = String::new();
    writeln!(out, "presentation: {}", report.presentation)?;
    knot_group_text(&mut out, &report)?;
    Ok(Outcome { code, output: out })
}

#[derive(Serialize)]
struct UnknotReport {
    schema_version: u32,
    triangulation_sha256: String,
    verdict: Verdict,
    certificate: Option<Certificate>,
    diagnostics: UnknotDiagnostics,
    #[serde(skip_serializing_if = "Option::is_none")]
    knot_group: Option<KnotGroupReport>,
    consistent: bool,
}

fn unknot(file: &Path, pd: Option<&Path>, opts: &EnumerationOptions, n_max: usize, json: bool) -> anyhow::Result<Outcome> {
    let tri = load_triangulation(file)?;
    let presentation = pd.map(load_presentation).transpose()?;

    // Both searches run to completion; the first definitive answer is
    // only logged so the report stays deterministic.
    let tri_ref = &tri;
    let (verdict, group) = std::thread::scope(|s| {
        let (tx, rx) = mpsc::channel();
        let haken_tx = tx.clone();
        let haken = s.spawn(move || {
            let v = decide_unknot(tri_ref, opts);
            let _ = haken_tx.send("normal surface search");
            v
        });
        let group = presentation.as_ref().map(|p| {
            let tx = tx.clone();
            s.spawn(move || {
                let r = knot_group(p, n_max);
                if r.assignment.is_some() {
                    let _ = tx.send("knot group search");
                }
                r
            })
        });
        drop(tx);
        if let Ok(first) = rx.recv() {
            log::info!("first definitive answer from the {first}");
        }
        (haken.join().expect("decision thread panicked"), group.map(|h| h.join().expect("search thread panicked")))
    });
    let verdict = verdict?;

    let consistent = !(verdict.verdict == Verdict::Unknot && group.as_ref().is_some_and(|g| g.assignment.is_some()));
    let report = UnknotReport {
        schema_version: SCHEMA_VERSION,
        triangulation_sha256: tri.checksum(),
        verdict: verdict.verdict,
        certificate: verdict.certificate.map(|v| Certificate::new(&tri, v)),
        diagnostics: verdict.diagnostics,
        knot_group: group,
        consistent,
    };
    let code = match (consistent, report.verdict) {
        (false, _) => 2,
        (true, Verdict::Unknot) => 0,
        (true, Verdict::Knotted) => 1,
    };
    if json {
        return Ok(Outcome { code, output: to_json(&report) });
    }
    let mut out = String::new();
    let d = &report.diagnostics;
    match &report.certificate {
        Some(c) => writeln!(out, "unknot: essential disk {:?}", c.vector)?,
        None => writeln!(out, "knotted: no fundamental normal disk with essential boundary")?,
    }
    writeln!(
        out,
        "fundamental {}, admissible {}, disks {}, essential disks {}",
        d.fundamental, d.admissible, d.disks, d.essential_disks
    )?;
    if let Some(g) = d.min_spanning_genus {
        writeln!(out, "smallest genus among fundamental spanning surfaces: {g}")?;
    }
    if let Some(g) = &report.knot_group {
        knot_group_text(&mut out, g)?;
    }
    if !consistent {
        writeln!(out, "error: the two procedures disagree")?;
    }
    Ok(Outcome { code, output: out })
}
