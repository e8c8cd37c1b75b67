use std::fmt::Write as _;
use std::io::Read as _;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use cws_core::bounds::{gv_evaluate, gv_max_k, BoundQuery, GvVariant};
use cws_core::codes::{cws_lc_orbit, max_weight_value, square_fragment_search, upper_bounds};
use cws_core::cyclic::{
    check_from_generator, generator_from_check, gv_sieve_search, repetition_family, toric_family, CyclicQuantumCode,
    REPETITION_TABLE,
};
use cws_core::graphs::{graph_state_min_element, lc_orbit, Graph};
use cws_core::io::{cws_to_json, parse_code, parse_graph, LoadedCode};
use cws_core::{BinaryPolynomial, CodeParams, Distance, Error};

use crate::{Command, Family, Preset};

/// What a command prints and how it exits.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub exit: u8,
    /// Extra message for stderr.
    pub diagnostic: Option<String>,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { json, text, exit: 0, diagnostic: None }
    }
}

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CAPPED: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

pub fn run(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Distance { input, max_weight } => distance(input, cap(*max_weight)),
        Command::SearchCyclic {
            n,
            q,
            p,
            target_d,
            symmetric,
            max_weight,
        } => search_cyclic(*n, q.as_deref(), p.as_deref(), *target_d, *symmetric, cap(*max_weight)),
        Command::Gv {
            preset,
            n,
            k,
            target_d,
            variant,
            d_max,
        } => gv(*preset, n, k.as_deref(), *target_d, variant, *d_max),
        Command::Families { family } => families(family),
        Command::LcOrbit { input, orbit_cap } => orbit(input, *orbit_cap as usize),
        Command::GraphDistance { input, max_weight } => graph_distance(input, cap(*max_weight)),
        Command::Verify {
            input,
            target_d,
            max_weight,
        } => verify(input, *target_d, cap(*max_weight)),
    }
}

fn cap(w: Option<u64>) -> Option<usize> {
    w.map(|w| w as usize)
}

/// Inline JSON, `-` for stdin, or a file path.
fn read_input(input: &str) -> Result<String> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(input.to_string());
    }
    if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(input).with_context(|| format!("reading {input}"))
}

fn load_code(input: &str) -> Result<LoadedCode> {
    Ok(parse_code(&read_input(input)?)?)
}

fn params_line(p: &CodeParams) -> String {
    let kind = if p.pure { "pure" } else { "degenerate" };
    match &p.witness {
        Some(w) => format!("{p} {kind} witness {w}\n"),
        None => format!("{p} {kind}\n"),
    }
}

fn capped_exit(d: Distance) -> u8 {
    if d.is_exact() {
        0
    } else {
        EXIT_CAPPED
    }
}

fn distance(input: &str, cap: Option<usize>) -> Result<Report> {
    let code = load_code(input)?;
    let p = code.distance(cap)?;
    let mut r = Report::ok(p.to_json(), params_line(&p));
    r.exit = capped_exit(p.d);
    if r.exit == EXIT_CAPPED {
        r.diagnostic = Some(format!("search stopped at weight {}; distance is {}", cap.unwrap_or(0), p.d));
    }
    Ok(r)
}

fn poly(s: &str) -> Result<BinaryPolynomial> {
    s.parse().map_err(|e: Error| anyhow!("{e}"))
}

fn search_cyclic(
    n: usize,
    q: Option<&str>,
    p: Option<&str>,
    target: usize,
    symmetric: bool,
    cap: Option<usize>,
) -> Result<Report> {
    if target == 0 {
        bail!("target distance must be positive");
    }
    let (q, p) = match (q, p) {
        (Some(q), _) => {
            let q = poly(q)?;
            let p = check_from_generator(n, &q)?;
            (q, p)
        }
        (None, Some(p)) => {
            let p = poly(p)?;
            (generator_from_check(n, &p)?, p)
        }
        (None, None) => bail!("give --q or --p"),
    };
    let report = gv_sieve_search(n, &q, target, symmetric)?;
    let mut json = json!({ "sieve": report.to_json() });
    let mut text = format!(
        "n={n} q={q} target d={target}: {} of {} residues survive ({} errors sieved{})\n",
        report.survivors,
        report.residues,
        report.errors_checked,
        if report.symmetric { ", symmetric family" } else { "" }
    );
    if let Some(e) = &report.unavoidable {
        writeln!(text, "infeasible: {e} lies in the dual for every residue")?;
        return Ok(Report {
            json,
            text,
            exit: EXIT_INFEASIBLE,
            diagnostic: Some(format!("unavoidable error {e}")),
        });
    }
    let Some(r) = report.representative.clone() else {
        writeln!(text, "infeasible: no residue survives")?;
        return Ok(Report {
            json,
            text,
            exit: EXIT_INFEASIBLE,
            diagnostic: Some("no surviving residue".into()),
        });
    };
    let code = CyclicQuantumCode::new(n, p, r)?;
    let params = code.distance(Some(cap.unwrap_or(target)))?;
    let mut descriptor = code.to_json();
    descriptor["params"] = params.to_json();
    json["code"] = descriptor.clone();
    write!(text, "survivor r={} verified {}", code.r(), params_line(&params))?;
    writeln!(text, "{descriptor}")?;
    let mut out = Report::ok(json, text);
    if params.d.lower() < target.min(cap.unwrap_or(target)) {
        out.exit = EXIT_INFEASIBLE;
        out.diagnostic = Some(format!("survivor verified at {} below the target", params.d));
    }
    Ok(out)
}

/// `a`, `a..b` (exclusive) or `a..=b`.
fn parse_range(s: &str) -> Result<Vec<usize>> {
    let num = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad range {s:?}"));
    if let Some((a, b)) = s.split_once("..=") {
        Ok((num(a)?..=num(b)?).collect())
    } else if let Some((a, b)) = s.split_once("..") {
        Ok((num(a)?..num(b)?).collect())
    } else {
        Ok(vec![num(s)?])
    }
}

fn gv(
    preset: Option<Preset>,
    n: &str,
    k: Option<&str>,
    target: Option<usize>,
    variant: &str,
    d_max: Option<usize>,
) -> Result<Report> {
    let variant: GvVariant = variant.parse()?;
    let mut rows = Vec::new();
    let mut text = String::new();
    if let Some(preset) = preset {
        // Lattice side L, with the graph-state distance d'(G) of the torus:
        // 5 for square tori, min(L, 7) for triangular ones.
        let sides: Vec<(usize, usize)> = match preset {
            Preset::SquareTorus => (5..=9).map(|l| (l, 5)).collect(),
            Preset::Triangular => (6..=9).map(|l| (l, l.min(7))).collect(),
        };
        for (l, d) in sides {
            let n = l * l;
            let k = gv_max_k(n, d, variant, Some(d))?;
            rows.push(json!({ "n": n, "k": k, "d": d, "variant": variant }));
            match k {
                Some(k) => writeln!(text, "{l}x{l}: [[{n},{k},{d}]]")?,
                None => writeln!(text, "{l}x{l}: no k reaches d = {d}")?,
            }
        }
        return Ok(Report::ok(Value::Array(rows), text));
    }
    for n in parse_range(n)? {
        if let Some(d) = target {
            let k = gv_max_k(n, d, variant, d_max)?;
            rows.push(json!({ "n": n, "d": d, "k_max": k, "variant": variant }));
            writeln!(text, "n={n} d={d} k_max={}", k.map_or("-".into(), |k| k.to_string()))?;
            continue;
        }
        let ks = match k {
            Some(k) => parse_range(k)?.into_iter().filter(|&k| k <= n).collect(),
            None => (0..=n).collect::<Vec<_>>(),
        };
        for k in ks {
            let mut q = BoundQuery::new(n, k, variant);
            q.d_max = d_max;
            let row = gv_evaluate(&q)?;
            writeln!(
                text,
                "n={n} k={k} d_gv={} d_capped={}{}",
                row.d_gv,
                row.d_capped,
                if row.by_convention { " (convention)" } else { "" }
            )?;
            rows.push(serde_json::to_value(&row)?);
        }
    }
    Ok(Report::ok(Value::Array(rows), text))
}

fn families(f: &Family) -> Result<Report> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut exit = 0;
    let mut push = |descriptor: Value, params: &CodeParams, extra: &str, out: &mut Vec<Value>| -> Result<()> {
        let mut d = descriptor;
        d["params"] = params.to_json();
        writeln!(text, "{params}{extra} {}", serde_json::to_string(&d)?)?;
        out.push(d);
        Ok(())
    };
    match f {
        Family::Toric { t } => {
            for t in parse_range(t)? {
                let code = toric_family(t)?;
                let params = code.distance(None)?;
                push(code.to_json(), &params, "", &mut out)?;
            }
        }
        Family::Repetition { m } => {
            for row in REPETITION_TABLE.iter().filter(|r| m.is_none_or(|m| r.m == m)) {
                let code = row.build()?;
                let params = code.distance(None)?;
                let matches = params.n == row.n && code.k() == row.k && params.d == Distance::Exact(row.d);
                if !matches {
                    exit = EXIT_INPUT;
                }
                let mut d = code.to_json();
                d["generator"] = json!(row.generator);
                d["expected"] = json!({ "n": row.n, "k": row.k, "d": row.d });
                d["matches"] = json!(matches);
                let note = if matches {
                    format!(" {}", row.generator)
                } else {
                    format!(" {} (listed as [[{},{},{}]])", row.generator, row.n, row.k, row.d)
                };
                push(d, &params, &note, &mut out)?;
            }
        }
        Family::RepetitionSearch { m, k } => {
            let found = repetition_family(*m, *k)?;
            let mut d = found.code.to_json();
            d["evaluated"] = json!(found.evaluated);
            let note = format!(" {}", cws_core::cyclic::generator_pattern(found.code.n(), found.code.r()));
            push(d, &found.params, &note, &mut out)?;
        }
        Family::SquareFragment {
            l,
            box_size,
            k,
            target_d,
        } => match square_fragment_search(*l, *box_size, *k, *target_d)? {
            Some(found) => {
                let mut d = cws_to_json(&found.code);
                d["pattern"] = json!(found.pattern);
                push(d, &found.params, "", &mut out)?;
            }
            None => {
                writeln!(text, "no pattern in a {box_size}x{box_size} box gives [[{},{k},{target_d}]]", l * l)?;
                exit = EXIT_INFEASIBLE;
            }
        },
    }
    Ok(Report {
        json: Value::Array(out),
        text,
        exit,
        diagnostic: (exit == EXIT_INPUT).then(|| "some rows do not match their listed parameters".to_string()),
    })
}

fn sorted_weights(g: &Graph) -> Vec<usize> {
    let mut w = g.generator_weights();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

fn orbit(input: &str, cap: usize) -> Result<Report> {
    let text_in = read_input(input)?;
    if let Ok(code) = parse_code(&text_in) {
        let q = code
            .as_cws()
            .ok_or_else(|| anyhow!("descriptor has no CWS form; give a graph or CWS code"))?;
        let b = upper_bounds(&q, cap)?;
        let (members, _) = cws_lc_orbit(&q, cap)?;
        let weights: Vec<Vec<usize>> = members.iter().map(|m| sorted_weights(m.graph())).collect();
        let mut json = serde_json::to_value(&b)?;
        json["weights"] = json!(weights);
        let text = format!(
            "orbit size {}{}\nbinary {}{} graph {} max-weight {} all-bit {} regular {}\n",
            b.orbit_size,
            if b.orbit_truncated { " (truncated)" } else { "" },
            b.binary_bound,
            if b.binary_trivial { " (single word)" } else { "" },
            b.graph_bound,
            opt(b.max_weight_bound),
            opt(b.all_bit_bound),
            opt(b.regular_bound),
        );
        return Ok(Report::ok(json, text));
    }
    let g = parse_graph(&text_in)?;
    let o = lc_orbit(&g, cap)?;
    let weights: Vec<Vec<usize>> = o.graphs.iter().map(sorted_weights).collect();
    let max_weight = weights.iter().map(|w| max_weight_value(w)).min();
    let min_weight = weights.iter().filter_map(|w| w.last().copied()).min();
    let regular = g.regular_degree().map(|r| r + 1);
    let json = json!({
        "orbit_size": o.graphs.len(),
        "orbit_truncated": o.truncated,
        "weights": weights,
        "max_weight_bound": max_weight,
        "min_generator_weight": min_weight,
        "regular_bound": regular,
    });
    let text = format!(
        "orbit size {}{}\nmax-weight {} min generator weight {} regular {}\n",
        o.graphs.len(),
        if o.truncated { " (truncated)" } else { "" },
        opt(max_weight),
        opt(min_weight),
        opt(regular),
    );
    Ok(Report::ok(json, text))
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}

fn graph_distance(input: &str, cap: Option<usize>) -> Result<Report> {
    let g = parse_graph(&read_input(input)?)?;
    let r = graph_state_min_element(&g, cap)?;
    let json = json!({
        "n": g.n(),
        "d": r.distance,
        "witness": r.witness.as_ref().map(|w| w.to_string()),
    });
    let text = match &r.witness {
        Some(w) => format!("d' = {} witness {w}\n", r.distance),
        None => format!("d' = {}\n", r.distance),
    };
    let mut out = Report::ok(json, text);
    out.exit = capped_exit(r.distance);
    Ok(out)
}

fn verify(input: &str, target: Option<usize>, cap: Option<usize>) -> Result<Report> {
    let code = load_code(input)?;
    let additive = match &code {
        LoadedCode::Cws(q) => q.stabilizer().ok(),
        LoadedCode::Cyclic(c) => Some(c.additive()),
        LoadedCode::Additive(a) => Some(a.clone()),
    };
    let self_orthogonal = additive.as_ref().map(|a| a.is_self_orthogonal());
    let cyclic = additive.as_ref().map(|a| a.is_cyclic());
    let params = code.distance(cap.or(target))?;
    let mut json = params.to_json();
    json["self_orthogonal"] = json!(self_orthogonal);
    json["cyclic"] = json!(cyclic);
    let mut text = params_line(&params);
    if let Some(so) = self_orthogonal {
        writeln!(text, "self-orthogonal: {so}")?;
    }
    let mut out = Report::ok(json, String::new());
    if self_orthogonal == Some(false) {
        out.exit = EXIT_INPUT;
        out.diagnostic = Some("stabilizer is not self-orthogonal".into());
    }
    if let Some(t) = target {
        let met = params.d.lower() >= t;
        out.json["target_met"] = json!(met);
        writeln!(text, "target d >= {t}: {}", if met { "met" } else { "not met" })?;
        if !met {
            out.exit = EXIT_INFEASIBLE;
            out.diagnostic = Some(format!("distance {} below the target {t}", params.d));
        }
    } else if !params.d.is_exact() {
        out.exit = EXIT_CAPPED;
    }
    out.text = text;
    Ok(out)
}
