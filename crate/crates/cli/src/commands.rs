use matchkit_core::asymptotics::printed_k0;
use matchkit_core::search::corpus;
use matchkit_core::{
    class_report, family_graph, family_mvector, from_graph6, k0_polynomial, limit_ratio_integral, match_vector,
    matching_polynomial, me_difference, me_quadrature, me_roots, quasi_compare, round4, theorem4_verdict, to_graph6,
    verify_claim, Claim, CorpusSpec, Error, FamilyId, Graph, MatchVector, QuadratureSettings, Result, SearchOptions,
    REPORT_SCHEMA_VERSION,
};
use serde_json::{json, Value};

use crate::output::Output;
use crate::{
    Analysis, Cli, Command, CompareArgs, EnergyInput, EnumerateArgs, FamilyArgs, GraphSource, MethodArg, VerifyArgs,
};

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Argument(_) | Error::Capacity(_) => 2,
        Error::Numeric { .. } | Error::Io(_) => 1,
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let s = match cli.tolerance {
        Some(t) => QuadratureSettings::with_rel_tol(t),
        None => QuadratureSettings::default(),
    };
    s.validate()?;
    let opts = SearchOptions {
        slow: cli.slow,
        jobs: cli.jobs,
        ..SearchOptions::from_env()
    };
    if opts.jobs == Some(0) {
        return Err(Error::Argument("--jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::Mp(a) => mp(&read_graph(&a.source, a.n)?),
        Command::Me(a) => me(a, &s),
        Command::Compare(a) => compare(a, &s),
        Command::Family(a) => family(a, &s),
        Command::Analysis(Analysis::K0) => k0(),
        Command::Analysis(Analysis::LimitIntegral) => limit_integral(&s),
        Command::Analysis(Analysis::Verdict { n }) => verdict(*n, &s),
        Command::Enumerate(a) => enumerate(a, &opts, &s),
        Command::Verify(a) => verify(a, &opts, &s),
    }
}

fn parse_edges(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = vec![];
    for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| Error::Argument(format!("--edges: expected u-v, got {item:?}")))?;
        let p = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Argument(format!("--edges: bad vertex {t:?} in {item:?}")))
        };
        edges.push((p(a)?, p(b)?));
    }
    let top = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    Graph::from_edges(n.unwrap_or(top), &edges)
}

fn read_graph(src: &GraphSource, n: Option<usize>) -> Result<Graph> {
    match (&src.g6, &src.edges) {
        (Some(g6), None) => from_graph6(g6),
        (None, Some(e)) => parse_edges(e, n),
        _ => Err(Error::Argument("give exactly one of --g6 and --edges".into())),
    }
}

fn parse_mvector(text: &str, n: usize, flag: &str) -> Result<MatchVector> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    MatchVector::from_decimal_strings(n, &parts).map_err(|e| Error::Argument(format!("{flag}: {e}")))
}

fn mvector_rows(mv: &MatchVector) -> Vec<Vec<String>> {
    mv.to_decimal_strings()
        .into_iter()
        .enumerate()
        .map(|(k, c)| vec![k.to_string(), c])
        .collect()
}

fn mp(g: &Graph) -> Result<Output> {
    let mv = match_vector(g);
    let doc = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "n": g.n(),
        "m": g.m(),
        "mvector": mv,
        "polynomial": matching_polynomial(&mv).to_string(),
    });
    Ok(Output::new(doc, vec!["k", "count"], mvector_rows(&mv)))
}

fn energy_doc(mv: &MatchVector, method: MethodArg, s: &QuadratureSettings) -> Result<(Value, Vec<String>)> {
    let r = match method {
        MethodArg::Quadrature => me_quadrature(mv, s)?,
        MethodArg::Roots => me_roots(mv)?,
    };
    let doc = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "n": mv.n(),
        "mvector": mv,
        "me": round4(r.value),
        "me_full": r.value,
        "method": r.method.name(),
        "error": r.error_estimate,
    });
    let row = vec![
        mv.n().to_string(),
        mv.to_string(),
        format!("{:.4}", r.value),
        r.value.to_string(),
        r.method.name().to_string(),
        r.error_estimate.to_string(),
    ];
    Ok((doc, row))
}

const ENERGY_HEADER: [&str; 6] = ["n", "mvector", "me", "me_full", "method", "error"];

fn need_n(n: Option<usize>, what: &str) -> Result<usize> {
    n.ok_or_else(|| Error::Argument(format!("{what} needs --n")))
}

fn me(a: &EnergyInput, s: &QuadratureSettings) -> Result<Output> {
    let mv = if let Some(text) = &a.mvector {
        parse_mvector(text, need_n(a.n, "--mvector")?, "--mvector")?
    } else if let Some(kind) = &a.family {
        family_mvector(&FamilyId::parse(kind, need_n(a.n, "--family")?, a.k, a.l)?)?
    } else if let Some(g6) = &a.g6 {
        if a.n.is_some() {
            return Err(Error::Argument("--n conflicts with --g6".into()));
        }
        match_vector(&from_graph6(g6)?)
    } else {
        let edges = a.edges.as_deref().unwrap_or_default();
        match_vector(&parse_edges(edges, a.n)?)
    };
    let (doc, row) = energy_doc(&mv, a.method, s)?;
    Ok(Output::new(doc, ENERGY_HEADER.to_vec(), vec![row]))
}

fn compare(a: &CompareArgs, s: &QuadratureSettings) -> Result<Output> {
    let va = parse_mvector(&a.mvector_a, a.n, "--mvector-a")?;
    let vb = parse_mvector(&a.mvector_b, a.n, "--mvector-b")?;
    let order = quasi_compare(&va, &vb)?;
    let d = me_difference(&va, &vb, s)?;
    let doc = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "n": a.n,
        "a": va,
        "b": vb,
        "order": order.name(),
        "delta_me": round4(d.value),
        "delta_me_full": d.value,
        "error": d.error,
    });
    let row = vec![
        order.name().to_string(),
        format!("{:.4}", d.value),
        d.value.to_string(),
        d.error.to_string(),
    ];
    Ok(Output::new(
        doc,
        vec!["order", "delta_me", "delta_me_full", "error"],
        vec![row],
    ))
}

fn family(a: &FamilyArgs, s: &QuadratureSettings) -> Result<Output> {
    let id = FamilyId::parse(&a.family, a.n, a.k, a.l)?;
    let mv = family_mvector(&id)?;
    let graph = if id.has_graph() { Some(family_graph(&id)?) } else { None };
    let (mut doc, row) = energy_doc(&mv, MethodArg::Quadrature, s)?;
    doc["family"] = json!(id.to_string());
    doc["graph6"] = json!(graph.as_ref().map(to_graph6));
    doc["m"] = json!(graph.as_ref().map(Graph::m));
    let mut row = row;
    row.insert(0, id.to_string());
    row.push(graph.as_ref().map(to_graph6).unwrap_or_default());
    let mut header = vec!["family"];
    header.extend(ENERGY_HEADER);
    header.push("graph6");
    Ok(Output::new(doc, header, vec![row]))
}

fn k0() -> Result<Output> {
    let computed = k0_polynomial();
    let printed = printed_k0();
    let top = computed.degree().max(printed.degree()).unwrap_or(0);
    let mut mismatches = vec![];
    let mut rows = vec![];
    for d in (0..=top).rev() {
        let (c, p) = (computed.coeff(d), printed.coeff(d));
        if c != p {
            mismatches.push(json!({"degree": d, "computed": c.to_string(), "printed": p.to_string()}));
        }
        rows.push(vec![d.to_string(), c.to_string(), p.to_string(), (c == p).to_string()]);
    }
    let strings = |p: &matchkit_core::poly::IntPoly| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
    let matches = mismatches.is_empty();
    let doc = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "computed": computed.to_string(),
        "printed": printed.to_string(),
        "computed_coefficients": strings(&computed),
        "printed_coefficients": strings(&printed),
        "computed_at_1": computed.eval(1.0),
        "printed_at_1": printed.eval(1.0),
        "matches": matches,
        "mismatches": mismatches,
    });
    let mut out = Output::new(doc, vec!["degree", "computed", "printed", "equal"], rows);
    out.ok = matches;
    Ok(out)
}

fn limit_integral(s: &QuadratureSettings) -> Result<Output> {
    let r = limit_ratio_integral(s)?;
    let doc = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "value": (r.value * 1e5).round() / 1e5,
        "value_full": r.value,
        "error": r.error,
    });
    let row = vec![format!("{:.5}", r.value), r.value.to_string(), r.error.to_string()];
    Ok(Output::new(doc, vec!["value", "value_full", "error"], vec![row]))
}

fn verdict(n: usize, s: &QuadratureSettings) -> Result<Output> {
    let v = theorem4_verdict(n, s)?;
    let doc = serde_json::to_value(&v).map_err(|e| Error::Io(e.to_string()))?;
    let rows = v
        .witnesses
        .iter()
        .map(|w| {
            vec![
                n.to_string(),
                v.kernel.to_string(),
                w.x.to_string(),
                w.value.to_string(),
            ]
        })
        .collect();
    let mut out = Output::new(doc, vec!["n", "kernel", "x", "value"], rows);
    out.ok = v.g1_less_than_g2 && v.witnesses_negative;
    Ok(out)
}

fn enumerate(a: &EnumerateArgs, opts: &SearchOptions, s: &QuadratureSettings) -> Result<Output> {
    let spec = CorpusSpec::new(a.n, a.m, a.connected);
    if a.classes {
        let r = class_report(&spec, opts, s)?;
        let rows = r
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                vec![
                    i.to_string(),
                    c.size.to_string(),
                    c.mvector.to_string(),
                    format!("{:.4}", c.me_full),
                    c.me_full.to_string(),
                    r.maximal_class_indices.contains(&i).to_string(),
                    (r.greatest_class_index == Some(i)).to_string(),
                    c.representative.clone(),
                ]
            })
            .collect();
        let doc = serde_json::to_value(&r).map_err(|e| Error::Io(e.to_string()))?;
        let header = vec![
            "class",
            "size",
            "mvector",
            "me",
            "me_full",
            "maximal",
            "greatest",
            "representative",
        ];
        return Ok(Output::new(doc, header, rows));
    }
    let graphs = corpus(&spec, opts)?;
    let g6: Vec<String> = graphs.iter().map(to_graph6).collect();
    let rows = g6.iter().map(|g| vec![g.clone()]).collect();
    let doc = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "n": a.n,
        "m": a.m,
        "connected": a.connected,
        "count": g6.len(),
        "graphs": g6,
    });
    Ok(Output::new(doc, vec!["graph6"], rows))
}

fn verify(a: &VerifyArgs, opts: &SearchOptions, s: &QuadratureSettings) -> Result<Output> {
    let claim = Claim::parse(&a.claim)?;
    let r = verify_claim(claim, a.n, opts, s)?;
    let (header, rows) = if r.ranked.is_empty() {
        let rows = r
            .families
            .iter()
            .map(|f| {
                vec![
                    f.family.clone(),
                    f.mvector.to_string(),
                    format!("{:.4}", f.me_full),
                    f.me_full.to_string(),
                    f.reference_me.map(|x| x.to_string()).unwrap_or_default(),
                ]
            })
            .collect();
        (vec!["family", "mvector", "me", "me_full", "reference_me"], rows)
    } else {
        let rows = r
            .ranked
            .iter()
            .enumerate()
            .map(|(i, g)| {
                vec![
                    i.to_string(),
                    g.graph6.clone(),
                    g.mvector.to_string(),
                    format!("{:.4}", g.me_full),
                    g.me_full.to_string(),
                ]
            })
            .collect();
        (vec!["rank", "graph6", "mvector", "me", "me_full"], rows)
    };
    let doc = serde_json::to_value(&r).map_err(|e| Error::Io(e.to_string()))?;
    let mut out = Output::new(doc, header, rows);
    out.ok = r.holds;
    Ok(out)
}
