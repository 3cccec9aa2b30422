//! Verification suites. Every grid point becomes one report entry; points
//! run in parallel and the report keeps parameter order.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use spiderweb_core::ball::BallMode;
use spiderweb_core::derangement::{components, graph_derangement, predict_components, tensor_cycle_iso, Count};
use spiderweb_core::families::{cycle_m, de_bruijn, random_oriented, spider_web_m};
use spiderweb_core::lamplighter::{
    act_level, cayley_ball, cbar_relators, classical_relators, evaluate, in_h, kesten_measure,
    normality_report, schreier_level_graph, sw_action_graph, LampElement,
};
use spiderweb_core::limits::{empirical_root_measure, match_fraction, product_distance_bound_check, ProductSample};
use spiderweb_core::morphisms::{
    closed_path_census, drop_first_symbol_map, eulerian_circuit, find_iso, gamma_bruijn_iso,
    hamiltonian_cycle, is_vertex_transitive, prefix_truncation_map, slice_projection_map,
    transitivity_witnesses, verify_eulerian_circuit, verify_hamiltonian_cycle, DerangementFilter,
    IsoConfig, IsoKind, Search, Transitivity,
};
use spiderweb_core::products::{de_bruijn_line_iso, gamma_line_iso, line_tensor_iso, spider_web_tensor_iso, tensor};
use spiderweb_core::spectra::{
    charpoly_oracle, closed_form_spectrum, measure_distance, numeric_spectrum, spiderweb_charpoly,
    EXPAND_CAP,
};
use spiderweb_core::{Edge, Error, Graph};

use crate::output::{Failure, Output};

const SPECTRUM_TOL: f64 = 1e-8;
const KESTEN_QMAX: u64 = 30;
const KESTEN_MASS_TOL: f64 = 1e-6;
const EXACT_SIZE_CAP: usize = 64;
const NORMALITY_BOUND: usize = 6;
const ACTION_TRIPLES: usize = 10_000;
const HAMILTON_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tensor,
    Debruijn,
    Schreier,
    Spectra,
    Transitivity,
    Coverings,
    Convergence,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Restrict to a single alphabet size.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    mmax: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    pub check: &'static str,
    pub params: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub runtime_ms: f64,
}

enum Verdict {
    Pass(Option<Value>),
    Fail(Value),
    Undecided(Value),
}

type Check = Box<dyn Fn() -> Result<Verdict, Error> + Send + Sync>;

struct Job {
    suite: &'static str,
    check: &'static str,
    params: Value,
    run: Check,
}

struct Plan {
    jobs: Vec<Job>,
    suite: &'static str,
}

impl Plan {
    fn add<F>(&mut self, check: &'static str, params: Value, run: F)
    where
        F: Fn() -> Result<Verdict, Error> + Send + Sync + 'static,
    {
        self.jobs.push(Job {
            suite: self.suite,
            check,
            params,
            run: Box::new(run),
        });
    }
}

fn pass_if(ok: bool, witness: Value) -> Verdict {
    if ok {
        Verdict::Pass(None)
    } else {
        Verdict::Fail(witness)
    }
}

fn search_verdict<T>(s: Search<T>, expect_found: bool) -> Verdict {
    match (s, expect_found) {
        (Search::Found(_), true) | (Search::NotFound, false) => Verdict::Pass(None),
        (Search::Undecided, _) => Verdict::Undecided(json!("search cap reached")),
        (Search::Found(_), false) => Verdict::Fail(json!("unexpected isomorphism found")),
        (Search::NotFound, true) => Verdict::Fail(json!("no isomorphism found")),
    }
}

struct Grid {
    ks: Vec<usize>,
    nmax: usize,
    mmax: usize,
}

impl Grid {
    fn new(args: &VerifyArgs, ks: &[usize], nmax: usize, mmax: usize) -> Grid {
        Grid {
            ks: args.k.map_or_else(|| ks.to_vec(), |k| vec![k]),
            nmax: args.nmax.unwrap_or(nmax),
            mmax: args.mmax.unwrap_or(mmax),
        }
    }
}

fn tensor_suite(plan: &mut Plan, g: &Grid, seed: u64) {
    for &k in &g.ks {
        for n in 0..=g.nmax {
            for m in 1..=g.mmax {
                plan.add("spider_web_is_tensor", json!({"k": k, "N": n, "M": m}), move || {
                    let w = spider_web_tensor_iso(k, n, m)?;
                    Ok(Verdict::Pass(Some(json!({"vertices": w.source.vertex_count()}))))
                });
            }
        }
        for n in 0..=g.nmax.min(3) {
            for m in 1..=g.mmax {
                plan.add("line_graph_of_tensor", json!({"k": k, "N": n, "M": m}), move || {
                    line_tensor_iso(&de_bruijn(k, n)?, &cycle_m(m)?)?;
                    Ok(Verdict::Pass(None))
                });
            }
        }
    }
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 0..=3 {
        graphs.push((format!("de_bruijn(2,{n})"), de_bruijn(2, n).unwrap()));
    }
    for d in 1..=12 {
        graphs.push((format!("cycle({d})"), cycle_m(d).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while graphs.len() < 16 + 20 {
        let n: usize = rng.random_range(1..=8);
        let g = random_oriented(n, rng.random_range(n - 1..=2 * n), &mut rng);
        if components(&g).len() == 1 {
            graphs.push((format!("random#{}", graphs.len() - 16), g));
        }
    }
    for (name, graph) in graphs {
        plan.add("component_count", json!({"graph": name, "M": "1..=12"}), move || {
            for m in 1..=12usize {
                let p = predict_components(&graph, Some(m as u64))?;
                let actual = components(&tensor(&graph, &cycle_m(m)?)?).len() as u64;
                if p.canonical != Count::Finite(actual) {
                    return Ok(Verdict::Fail(json!({
                        "M": m, "union_find": actual, "canonical": p.canonical.to_string()
                    })));
                }
            }
            Ok(Verdict::Pass(None))
        });
    }
    plan.add("component_formula_discrepancy", json!({"graph": "cycle(4)", "M": 10}), || {
        let p = predict_components(&cycle_m(4)?, Some(10))?;
        let witness = json!({
            "canonical": p.canonical.to_string(),
            "residue_formula": p.residue_formula.to_string(),
            "discrepancy": p.discrepancy(),
        });
        let ok = p.canonical == Count::Finite(2) && p.residue_formula == Count::Finite(4);
        Ok(if ok { Verdict::Pass(Some(witness)) } else { Verdict::Fail(witness) })
    });
    for d in 1..=12 {
        for m in 1..=g.mmax {
            plan.add("rank_isomorphism", json!({"graph": format!("cycle({d})"), "M": m}), move || {
                let result = tensor_cycle_iso(&cycle_m(d)?, 0, m);
                Ok(match (result, d % m == 0) {
                    (Ok(_), true) | (Err(Error::NotIsomorphic(_)), false) => Verdict::Pass(None),
                    (Err(e), _) => Verdict::Fail(json!(e.to_string())),
                    (Ok(_), false) => Verdict::Fail(json!("isomorphism built although der ≢ 0 mod M")),
                })
            });
        }
    }
}

fn debruijn_suite(plan: &mut Plan, g: &Grid) {
    for &k in &g.ks {
        for n in 0..=g.nmax {
            plan.add("line_graph_is_next_level", json!({"k": k, "N": n}), move || {
                de_bruijn_line_iso(k, n)?;
                Ok(Verdict::Pass(None))
            });
            plan.add("derangement_is_one", json!({"k": k, "N": n}), move || {
                let d = graph_derangement(&de_bruijn(k, n)?)?;
                Ok(pass_if(d == 1, json!({"derangement": d})))
            });
        }
        for n in 0..=g.nmax.min(3) {
            for m in 1..=g.mmax.min(3) {
                let params = json!({"k": k, "N": n, "M": m});
                plan.add("eulerian_circuit", params.clone(), move || {
                    let s = spider_web_m(k, n, m)?;
                    let c = eulerian_circuit(&s)?;
                    Ok(pass_if(verify_eulerian_circuit(&s, &c), json!("replay failed")))
                });
                plan.add("hamiltonian_cycle", params, move || {
                    let s = spider_web_m(k, n, m)?;
                    Ok(match hamiltonian_cycle(&s, HAMILTON_CAP)? {
                        Search::Found(c) => pass_if(verify_hamiltonian_cycle(&s, &c), json!("replay failed")),
                        Search::NotFound => Verdict::Fail(json!("no Hamiltonian cycle")),
                        Search::Undecided => Verdict::Undecided(json!("search cap reached")),
                    })
                });
            }
        }
    }
}

/// `Γ_{k,N}` with `cbar_r` renamed `R_{π(r)}`, so that a strong search
/// against the de Bruijn graph compares matching label sets.
fn relabel_gamma(g: &Graph, perm: &[usize]) -> Result<Graph, Error> {
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| {
            let label = e.label.as_deref().unwrap_or_default();
            let r: usize = label
                .strip_prefix("cbar_")
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| Error::InvalidGraph(format!("unexpected label {label:?}")))?;
            Ok(Edge {
                label: Some(format!("R_{}", perm[r])),
                ..e.clone()
            })
        })
        .collect::<Result<_, Error>>()?;
    Graph::new(g.kind(), g.vertices().to_vec(), edges)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

fn schreier_suite(plan: &mut Plan, g: &Grid, seed: u64) {
    for &k in &g.ks {
        for n in 0..=g.nmax {
            plan.add("weak_iso_with_de_bruijn", json!({"k": k, "N": n}), move || {
                gamma_bruijn_iso(k, n)?;
                Ok(Verdict::Pass(None))
            });
            plan.add("line_graph_is_next_level", json!({"k": k, "N": n}), move || {
                gamma_line_iso(k, n)?;
                Ok(Verdict::Pass(None))
            });
        }
    }
    for n in [2, 3] {
        plan.add("no_strong_iso_with_de_bruijn", json!({"k": 2, "N": n}), move || {
            let b = de_bruijn(2, n)?;
            let gamma = schreier_level_graph(2, n)?;
            for perm in permutations(2) {
                let s = find_iso(&b, &relabel_gamma(&gamma, &perm)?, IsoKind::Strong, None, &IsoConfig::default())?;
                if !matches!(s, Search::NotFound) {
                    return Ok(search_verdict(s, false));
                }
            }
            Ok(Verdict::Pass(None))
        });
    }
    for k in [2u32, 3, 6] {
        plan.add("relators", json!({"k": k, "n_max": 10}), move || {
            for w in classical_relators(k, 10).iter().chain(&cbar_relators(k, 10)) {
                if !evaluate(w, k).is_identity() {
                    return Ok(Verdict::Fail(json!(format!("{w:?}"))));
                }
            }
            Ok(Verdict::Pass(None))
        });
    }
    plan.add("tree_action", json!({"triples": ACTION_TRIPLES, "seed": seed}), move || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..ACTION_TRIPLES {
            let k = [2u32, 3][rng.random_range(0..2)];
            let a = LampElement::random(k, 4, &mut rng);
            let b = LampElement::random(k, 4, &mut rng);
            let len = rng.random_range(0..=6);
            let x: Vec<u32> = (0..len).map(|_| rng.random_range(0..k)).collect();
            if act_level(&(&a * &b), &x) != act_level(&a, &act_level(&b, &x)) {
                return Ok(Verdict::Fail(json!({"g": a.to_string(), "h": b.to_string(), "x": x})));
            }
        }
        Ok(Verdict::Pass(None))
    });
    for n in 1..=3usize {
        for m in 1..=4usize {
            plan.add("normality_of_h", json!({"k": 2, "N": n, "M": m, "bound": NORMALITY_BOUND}), move || {
                let r = normality_report(|x| in_h(x, n, m), 2, NORMALITY_BOUND)?;
                let witness = r.witness.as_ref().map(|w| {
                    json!({"conjugator": w.conjugator.to_string(), "member": w.member.to_string()})
                });
                Ok(if r.is_normal_evidence() == (m % n == 0) {
                    Verdict::Pass(witness)
                } else {
                    Verdict::Fail(witness.unwrap_or(json!("no violation found")))
                })
            });
        }
    }
    for n in 0..=g.nmax.min(3) {
        for m in 1..=g.mmax.min(3) {
            plan.add("action_graph_is_spider_web", json!({"k": 2, "N": n, "M": m}), move || {
                let s = find_iso(&sw_action_graph(2, n, m)?, &spider_web_m(2, n, m)?, IsoKind::Weak, None, &IsoConfig::default())?;
                Ok(search_verdict(s, true))
            });
        }
    }
}

fn spectra_suite(plan: &mut Plan, g: &Grid) {
    for &k in &g.ks {
        for n in 0..=g.nmax {
            for m in 1..=g.mmax {
                let params = json!({"k": k, "N": n, "M": m});
                let size = k.checked_pow(n as u32).map(|s| s * m);
                if size.is_some_and(|s| s <= EXACT_SIZE_CAP) {
                    plan.add("charpoly_exact", params.clone(), move || {
                        let a = spider_web_m(k, n, m)?
                            .underlying()?
                            .integer_adjacency()
                            .ok_or_else(|| Error::InvalidGraph("non-integer adjacency".into()))?;
                        let exact = charpoly_oracle(&a)?;
                        let factored = spiderweb_charpoly(k, n, m)?.expand(EXPAND_CAP)?;
                        Ok(pass_if(exact == factored, json!({"determinant": exact.to_string(), "factored": factored.to_string()})))
                    });
                }
                plan.add("closed_form_matches_numeric", params, move || {
                    let closed = closed_form_spectrum(k, n, m)?;
                    let expected = m * k.pow(n as u32);
                    let values = closed.eigenvalues(expected)?;
                    let numeric = numeric_spectrum(&spider_web_m(k, n, m)?)?;
                    let deviation = values
                        .iter()
                        .zip(&numeric)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max);
                    let minus = -2.0 * k as f64;
                    let has_minus = numeric.iter().any(|x| (x - minus).abs() <= SPECTRUM_TOL);
                    let ok = values.len() == numeric.len()
                        && closed.total() == expected.into()
                        && deviation <= SPECTRUM_TOL
                        && has_minus == (m % 2 == 0);
                    Ok(pass_if(ok, json!({"max_deviation": deviation, "minus_2k": has_minus})))
                });
            }
        }
        plan.add("kesten_mass", json!({"k": k, "qmax": KESTEN_QMAX}), move || {
            let mass: f64 = kesten_measure(k, KESTEN_QMAX)?.numeric_atoms().iter().map(|a| a.1).sum();
            Ok(pass_if((1.0 - mass).abs() <= KESTEN_MASS_TOL, json!({"mass": mass})))
        });
    }
    plan.add("distance_to_kesten_decreases", json!({"k": 2, "N": [2, 6]}), || {
        let limit = kesten_measure(2, KESTEN_QMAX)?;
        let d = |n| -> Result<f64, Error> {
            measure_distance(&closed_form_spectrum(2, n, n)?.measure(), &limit)
        };
        let (d2, d6) = (d(2)?, d(6)?);
        let witness = json!({"N=2": d2, "N=6": d6});
        Ok(if d6 < d2 { Verdict::Pass(Some(witness)) } else { Verdict::Fail(witness) })
    });
}

fn transitivity_suite(plan: &mut Plan, g: &Grid) {
    for n in 1..=g.nmax.min(3) {
        for m in 1..=g.mmax.min(4) {
            let params = json!({"k": 2, "N": n, "M": m});
            plan.add("vertex_transitive_iff_m_ge_n", params.clone(), move || {
                let t = is_vertex_transitive(&spider_web_m(2, n, m)?, IsoKind::Weak, &IsoConfig::default())?;
                let expected = if m >= n { Transitivity::Transitive } else { Transitivity::NotTransitive };
                Ok(match t {
                    Transitivity::Undecided => Verdict::Undecided(json!("orbit search cap reached")),
                    t => pass_if(t == expected, json!(t.as_str())),
                })
            });
            plan.add("explicit_automorphisms", params, move || {
                Ok(match transitivity_witnesses(2, n, m) {
                    Ok(w) => pass_if(m >= n && w.orbit_size == w.graph.vertex_count(), json!({"orbit": w.orbit_size})),
                    Err(Error::InvalidParameter(_)) if m < n => Verdict::Pass(None),
                    Err(e) => Verdict::Fail(json!(e.to_string())),
                })
            });
        }
    }
    plan.add("closed_path_witness", json!({"k": 2, "N": 3, "M": 2, "length": 2}), || {
        let s = spider_web_m(2, 3, 2)?;
        let v = s.find_vertex("(000,0)").ok_or_else(|| Error::InvalidGraph("missing (000,0)".into()))?;
        let w = s.find_vertex("(100,0)").ok_or_else(|| Error::InvalidGraph("missing (100,0)".into()))?;
        let at_v = closed_path_census(&s, v, 2, DerangementFilter::NonZero, false)?;
        let at_w = closed_path_census(&s, w, 2, DerangementFilter::NonZero, false)?;
        let witness = json!({"(000,0)": at_v, "(100,0)": at_w});
        Ok(if at_v > 0 && at_w == 0 { Verdict::Pass(Some(witness)) } else { Verdict::Fail(witness) })
    });
}

fn coverings_suite(plan: &mut Plan, g: &Grid) {
    for &k in &g.ks {
        for n in 0..=g.nmax {
            plan.add("prefix_truncation_covers", json!({"k": k, "N": n}), move || {
                let (s, t, f) = prefix_truncation_map(k, n)?;
                Ok(pass_if(f.is_covering(&s, &t)?, json!("star map not bijective")))
            });
        }
        for n in 0..=g.nmax.min(3) {
            for m in 1..=g.mmax.min(3) {
                plan.add("slice_projection_covers", json!({"k": k, "N": n, "M": m}), move || {
                    let (s, t, f) = slice_projection_map(k, n, m, 2)?;
                    Ok(pass_if(f.is_covering(&s, &t)?, json!("star map not bijective")))
                });
            }
        }
        for n in 1..=g.nmax.min(3) {
            plan.add("drop_first_symbol_is_not_covering", json!({"k": k, "N": n}), move || {
                let (s, t, f) = drop_first_symbol_map(k, n)?;
                Ok(pass_if(!f.is_covering(&s, &t)?, json!("unexpectedly a covering")))
            });
        }
    }
}

fn convergence_suite(plan: &mut Plan, seed: u64) {
    plan.add("full_match_at_8_8", json!({"k": 2, "N": 8, "M": 8, "r": 2}), || {
        let reference = cayley_ball(2, 2)?.ball;
        let f = match_fraction(&spider_web_m(2, 8, 8)?, 2, &reference)?;
        Ok(pass_if(f.numer() == f.denom(), json!(f.to_string())))
    });
    for r in 0..=2usize {
        plan.add("match_fraction_non_decreasing", json!({"k": 2, "r": r, "pairs": [[2, 2], [4, 4], [8, 8]]}), move || {
            let reference = cayley_ball(2, r)?.ball;
            let fractions = [(2, 2), (4, 4), (8, 8)]
                .iter()
                .map(|&(n, m)| match_fraction(&spider_web_m(2, n, m)?, r, &reference))
                .collect::<Result<Vec<_>, _>>()?;
            let shown: Vec<String> = fractions.iter().map(|f| f.to_string()).collect();
            Ok(pass_if(fractions.windows(2).all(|w| w[0] <= w[1]), json!(shown)))
        });
    }
    for (n, m) in [(1, 1), (2, 2), (2, 3), (3, 3)] {
        plan.add("transitive_is_dirac", json!({"k": 2, "N": n, "M": m, "r": "0..=2"}), move || {
            let s = spider_web_m(2, n, m)?;
            for r in 0..=2 {
                let d = empirical_root_measure(&s, r, BallMode::ORIENTED)?;
                if !d.is_dirac() {
                    return Ok(Verdict::Fail(json!({"r": r, "classes": d.class_count()})));
                }
            }
            Ok(Verdict::Pass(None))
        });
    }
    plan.add("product_distance_bound", json!({"samples": 20, "seed": seed}), move || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut samples = vec![ProductSample {
            g: (de_bruijn(2, 2)?, 0),
            h: (de_bruijn(2, 3)?, 0),
            p: (cycle_m(3)?, 0),
            q: (cycle_m(3)?, 0),
        }];
        let pick = |rng: &mut ChaCha8Rng| -> (Graph, usize) {
            let n: usize = rng.random_range(1..=5);
            let g = random_oriented(n, rng.random_range(1..=2 * n), rng);
            let v = rng.random_range(0..n);
            (g, v)
        };
        while samples.len() < 20 {
            samples.push(ProductSample {
                g: pick(&mut rng),
                h: pick(&mut rng),
                p: pick(&mut rng),
                q: pick(&mut rng),
            });
        }
        let checks = product_distance_bound_check(&samples)?;
        Ok(match checks.iter().position(|c| !c.holds()) {
            None => Verdict::Pass(None),
            Some(i) => Verdict::Fail(json!({
                "sample": i,
                "product": checks[i].product.to_string(),
                "bound": checks[i].bound.to_string(),
            })),
        })
    });
}

fn plan_for(suite: Suite, args: &VerifyArgs, seed: u64) -> Vec<Job> {
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Tensor,
            Suite::Debruijn,
            Suite::Schreier,
            Suite::Spectra,
            Suite::Transitivity,
            Suite::Coverings,
            Suite::Convergence,
        ],
        s => vec![s],
    };
    let mut jobs = Vec::new();
    for s in suites {
        let name = s.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
        let mut plan = Plan {
            jobs: Vec::new(),
            suite: Box::leak(name.into_boxed_str()),
        };
        match s {
            Suite::Tensor => tensor_suite(&mut plan, &Grid::new(args, &[2, 3], 4, 6), seed),
            Suite::Debruijn => debruijn_suite(&mut plan, &Grid::new(args, &[2, 3], 4, 3)),
            Suite::Schreier => schreier_suite(&mut plan, &Grid::new(args, &[2, 3], 4, 3), seed),
            Suite::Spectra => spectra_suite(&mut plan, &Grid::new(args, &[2, 3], 4, 6)),
            Suite::Transitivity => transitivity_suite(&mut plan, &Grid::new(args, &[2], 3, 4)),
            Suite::Coverings => coverings_suite(&mut plan, &Grid::new(args, &[2, 3], 4, 3)),
            Suite::Convergence => convergence_suite(&mut plan, seed),
            Suite::All => unreachable!(),
        }
        jobs.extend(plan.jobs);
    }
    jobs
}

fn validate(args: &VerifyArgs) -> Result<(), Failure> {
    if args.k.is_some_and(|k| !(2..=8).contains(&k)) {
        return Err(Failure::Invalid("--k must lie in 2..=8".into()));
    }
    if args.nmax.is_some_and(|n| n > 6) {
        return Err(Failure::Invalid("--nmax must be at most 6".into()));
    }
    if args.mmax.is_some_and(|m| !(1..=12).contains(&m)) {
        return Err(Failure::Invalid("--mmax must lie in 1..=12".into()));
    }
    Ok(())
}

pub fn verify(out: &Output, args: &VerifyArgs, seed: u64) -> Result<ExitCode, Failure> {
    validate(args)?;
    let jobs = plan_for(args.suite, args, seed);
    let reports: Vec<CheckReport> = jobs
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let (status, witness) = match (job.run)() {
                Ok(Verdict::Pass(w)) => (Status::Pass, w),
                Ok(Verdict::Fail(w)) => (Status::Fail, Some(w)),
                Ok(Verdict::Undecided(w)) => (Status::Undecided, Some(w)),
                Err(Error::Undecided(msg)) => (Status::Undecided, Some(json!(msg))),
                Err(e) => (Status::Fail, Some(json!(e.to_string()))),
            };
            CheckReport {
                suite: job.suite,
                check: job.check,
                params: job.params.clone(),
                status,
                witness,
                runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            }
        })
        .collect();
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (passed, failed, undecided) = (count(Status::Pass), count(Status::Fail), count(Status::Undecided));
    out.emit("verify.json", &serde_json::to_string_pretty(&reports).unwrap())?;
    eprintln!("{passed} passed, {failed} failed, {undecided} undecided (seed {seed})");
    Ok(if failed > 0 {
        ExitCode::from(1)
    } else if undecided > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}
