use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::json;

use spiderweb_core::derangement::{component_derangements, components as blocks, predict_components};
use spiderweb_core::families::{
    cycle, de_bruijn, rose, spider_web, theta_graph_m, Length,
};
use spiderweb_core::lamplighter::{
    cayley_ball as lamp_ball, finite_quotient_cayley, kesten_measure, schreier_level_graph,
    sw_action_graph,
};
use spiderweb_core::limits::{convergence_rows, CONVERGENCE_CSV_HEADER};
use spiderweb_core::morphisms::{
    eulerian_circuit, find_iso, hamiltonian_cycle, IsoConfig, IsoKind, Search,
};
use spiderweb_core::products::{line_graph, tensor as tensor_product};
use spiderweb_core::spectra::{closed_form_spectrum, numeric_spectrum, spiderweb_charpoly, EXPAND_CAP};
use spiderweb_core::Graph;

use crate::output::{read_graph, Failure, Output};
use crate::{Family, FamilyArgs, GraphFormat};

const NUMERIC_TOL: f64 = 1e-8;

/// Eigenvalues like `2k cos(πp/q)` are often integers up to rounding noise.
fn show(v: f64) -> String {
    let r = v.round();
    if (v - r).abs() < 1e-12 {
        format!("{}", r + 0.0)
    } else {
        format!("{v}")
    }
}

fn require_m(args: &FamilyArgs) -> Result<usize, Failure> {
    args.m
        .ok_or_else(|| Failure::Invalid(format!("--m is required for {:?}", args.family)))
}

fn length(args: &FamilyArgs, finite: usize) -> Length {
    match args.window {
        Some(window) => Length::Infinite { window },
        None => Length::Finite(finite),
    }
}

pub fn build_family(args: &FamilyArgs) -> Result<Graph, Failure> {
    let (k, n) = (args.k, args.n);
    let g = match args.family {
        Family::Debruijn => de_bruijn(k, n)?,
        Family::Spiderweb => {
            if args.window.is_none() {
                require_m(args)?;
            }
            spider_web(k, n, length(args, args.m.unwrap_or(0)))?
        }
        Family::Cycle => cycle(length(args, n))?,
        Family::Rose => rose(k)?,
        Family::Theta => theta_graph_m(k, n, args.m.unwrap_or(1))?,
        Family::Schreier => schreier_level_graph(k, n)?,
        Family::SwAction => sw_action_graph(k, n, require_m(args)?)?,
        Family::Quotient => finite_quotient_cayley(k, n, require_m(args)?)?,
    };
    Ok(g)
}

pub fn gen(
    out: &Output,
    args: &FamilyArgs,
    format: GraphFormat,
    underlying: bool,
) -> Result<ExitCode, Failure> {
    let mut g = build_family(args)?;
    if underlying && g.is_oriented() {
        g = g.underlying()?;
    }
    let stem = format!("{:?}", args.family).to_lowercase();
    out.emit_graph(&stem, &g, format)?;
    Ok(ExitCode::SUCCESS)
}

pub fn tensor(out: &Output, a: &Path, b: &Path, format: GraphFormat) -> Result<ExitCode, Failure> {
    let t = tensor_product(&read_graph(a)?, &read_graph(b)?)?;
    out.emit_graph("tensor", &t, format)?;
    Ok(ExitCode::SUCCESS)
}

pub fn line(out: &Output, a: &Path, format: GraphFormat) -> Result<ExitCode, Failure> {
    let lg = line_graph(&read_graph(a)?)?;
    out.emit_graph("line", &lg.graph, format)?;
    Ok(ExitCode::SUCCESS)
}

pub fn derange(out: &Output, path: &Path) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    let per = component_derangements(&g);
    let text = match per.as_slice() {
        [d] => format!("derangement: {d}\n"),
        _ => {
            let mut s = format!("components: {}\n", per.len());
            for (i, d) in per.iter().enumerate() {
                writeln!(s, "component {i}: derangement {d}").unwrap();
            }
            s
        }
    };
    out.emit("derange.txt", &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn components(
    out: &Output,
    graph: Option<&Path>,
    family: Option<Family>,
    k: usize,
    n: usize,
    m: usize,
) -> Result<ExitCode, Failure> {
    let g = match (graph, family) {
        (Some(p), _) => read_graph(p)?,
        (None, Some(family)) => build_family(&FamilyArgs {
            family,
            k,
            n,
            m: None,
            window: None,
        })?,
        (None, None) => return Err(Failure::Invalid("give a graph file or --family".into())),
    };
    if m == 0 {
        return Err(Failure::Invalid("--m must be at least 1".into()));
    }
    let p = predict_components(&g, Some(m as u64))?;
    let product = tensor_product(&g, &spiderweb_core::families::cycle_m(m)?)?;
    let actual = blocks(&product).len();
    let mut text = format!(
        "derangement: {}\nM: {m}\ncanonical: {}\nresidue_formula: {}\nunion_find: {actual}\n",
        p.derangement, p.canonical, p.residue_formula
    );
    if p.discrepancy() {
        writeln!(
            text,
            "discrepancy: canonical {} and residue formula {} disagree; union-find gives {actual}",
            p.canonical, p.residue_formula
        )
        .unwrap();
    }
    out.emit("components.txt", &text)?;
    Ok(ExitCode::SUCCESS)
}

pub fn schreier(out: &Output, k: usize, n: usize, format: GraphFormat) -> Result<ExitCode, Failure> {
    out.emit_graph("schreier", &schreier_level_graph(k, n)?, format)?;
    Ok(ExitCode::SUCCESS)
}

pub fn cayley_ball(out: &Output, k: usize, r: usize, format: GraphFormat) -> Result<ExitCode, Failure> {
    out.emit_graph("cayley_ball", &lamp_ball(k, r)?.ball.graph, format)?;
    Ok(ExitCode::SUCCESS)
}

pub fn kesten(out: &Output, k: usize, qmax: u64) -> Result<ExitCode, Failure> {
    let m = kesten_measure(k, qmax)?;
    let mut keys: Vec<_> = m.atoms.keys().copied().collect();
    keys.sort_by(|a, b| a.position_cmp(b));
    let mut text = String::from("p,q,value,weight\n");
    for key in keys {
        writeln!(text, "{},{},{},{}", key.p, key.q, show(key.value(m.k)), m.atoms[&key]).unwrap();
    }
    out.emit("kesten.csv", &text)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_root(g: &Graph, h: &Graph, spec: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = spec
        .split_once(',')
        .ok_or_else(|| Failure::Invalid(format!("root must be `u,v`, got {spec:?}")))?;
    let find = |g: &Graph, s: &str| {
        g.find_vertex(s)
            .or_else(|| s.parse().ok().filter(|&v| v < g.vertex_count()))
            .ok_or_else(|| Failure::Invalid(format!("no vertex {s:?}")))
    };
    Ok((find(g, a.trim())?, find(h, b.trim())?))
}

pub fn iso(out: &Output, a: &Path, b: &Path, kind: &str, root: Option<&str>) -> Result<ExitCode, Failure> {
    let kind = IsoKind::from_str(kind)?;
    let (g, h) = (read_graph(a)?, read_graph(b)?);
    let root = root.map(|r| parse_root(&g, &h, r)).transpose()?;
    let (report, code) = match find_iso(&g, &h, kind, root, &IsoConfig::default())? {
        Search::Found(w) => (
            json!({
                "status": "found",
                "kind": kind.as_str(),
                "vertex_map": w.morphism.vertex_map,
                "edge_map": w.morphism.edge_map,
            }),
            ExitCode::SUCCESS,
        ),
        Search::NotFound => (json!({"status": "none", "kind": kind.as_str()}), ExitCode::from(1)),
        Search::Undecided => (
            json!({"status": "undecided", "kind": kind.as_str()}),
            ExitCode::from(3),
        ),
    };
    out.emit("iso.json", &serde_json::to_string_pretty(&report).unwrap())?;
    Ok(code)
}

pub fn euler(out: &Output, path: &Path) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    let circuit = eulerian_circuit(&g)?;
    let report = json!({ "circuit": circuit });
    out.emit("euler.json", &serde_json::to_string_pretty(&report).unwrap())?;
    Ok(ExitCode::SUCCESS)
}

pub fn hamilton(out: &Output, path: &Path, cap: u64) -> Result<ExitCode, Failure> {
    let g = read_graph(path)?;
    let (report, code) = match hamiltonian_cycle(&g, cap)? {
        Search::Found(cycle) => {
            let names: Vec<String> = cycle.iter().map(|&e| g.display_name(g.edge(e).src)).collect();
            (json!({"status": "found", "cycle": cycle, "vertices": names}), ExitCode::SUCCESS)
        }
        Search::NotFound => (json!({"status": "none"}), ExitCode::from(1)),
        Search::Undecided => (json!({"status": "undecided"}), ExitCode::from(3)),
    };
    out.emit("hamilton.json", &serde_json::to_string_pretty(&report).unwrap())?;
    Ok(code)
}

pub fn spectrum(
    out: &Output,
    k: usize,
    n: usize,
    m: usize,
    numeric: bool,
    expand: bool,
) -> Result<ExitCode, Failure> {
    if expand {
        let p = spiderweb_charpoly(k, n, m)?.expand(EXPAND_CAP)?;
        out.emit("charpoly.txt", &format!("{p}\n"))?;
        return Ok(ExitCode::SUCCESS);
    }
    let closed = closed_form_spectrum(k, n, m)?;
    let measure = closed.measure();
    let eigen = if numeric {
        let g = spider_web(k, n, Length::Finite(m))?;
        Some(numeric_spectrum(&g)?)
    } else {
        None
    };
    let mut keys: Vec<_> = closed.multiplicities.keys().copied().collect();
    keys.sort_by(|a, b| a.position_cmp(b));
    let mut text = String::from("p,q,value,multiplicity,weight");
    text.push_str(if numeric { ",numeric_multiplicity\n" } else { "\n" });
    let mut matched = true;
    let mut counted = 0usize;
    for key in keys {
        let value = key.value(closed.k);
        let mult = &closed.multiplicities[&key];
        write!(text, "{},{},{},{},{}", key.p, key.q, show(value), mult, measure.atoms[&key]).unwrap();
        if let Some(eigen) = &eigen {
            let c = eigen.iter().filter(|x| (*x - value).abs() <= NUMERIC_TOL).count();
            counted += c;
            matched &= mult == &c.into();
            write!(text, ",{c}").unwrap();
        }
        text.push('\n');
    }
    out.emit("spectrum.csv", &text)?;
    if let Some(eigen) = &eigen {
        if !matched || counted != eigen.len() {
            eprintln!("numeric spectrum disagrees with the closed form");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let bad = || Failure::Invalid(format!("bad pair {pair:?}, expected N,M"));
            let (n, m) = pair.split_once(',').ok_or_else(bad)?;
            Ok((
                n.trim().parse().map_err(|_| bad())?,
                m.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

pub fn converge(out: &Output, k: usize, pairs: &str, rmax: usize) -> Result<ExitCode, Failure> {
    let pairs = parse_pairs(pairs)?;
    let reference = lamp_ball(k, rmax)?.ball;
    let rows: Vec<_> = pairs
        .par_iter()
        .map(|&(n, m)| convergence_rows(k, n, m, rmax, &reference))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = format!("{CONVERGENCE_CSV_HEADER}\n");
    for row in rows.iter().flatten() {
        writeln!(text, "{}", row.csv()).unwrap();
    }
    out.emit("converge.csv", &text)?;
    Ok(ExitCode::SUCCESS)
}
