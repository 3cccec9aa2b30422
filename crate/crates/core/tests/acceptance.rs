//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spiderweb_core::derangement::{components, predict_components, Count};
use spiderweb_core::families::{cycle_m, de_bruijn, random_oriented, spider_web_m};
use spiderweb_core::lamplighter::{
    act_level, cayley_ball, cbar_relators, classical_relators, evaluate, in_h, kesten_measure,
    normality_report, schreier_level_graph, LampElement,
};
use spiderweb_core::limits::match_fraction;
use spiderweb_core::morphisms::{
    drop_first_symbol_map, eulerian_circuit, find_iso, gamma_bruijn_iso, hamiltonian_cycle,
    is_vertex_transitive, prefix_truncation_map, slice_projection_map, transitivity_witnesses,
    verify_eulerian_circuit, verify_hamiltonian_cycle, IsoConfig, IsoKind, Search, Transitivity,
};
use spiderweb_core::products::{
    de_bruijn_line_iso, gamma_line_iso, spider_web_tensor_iso, tensor,
};
use spiderweb_core::spectra::{
    charpoly_oracle, closed_form_spectrum, measure_distance, numeric_spectrum, spiderweb_charpoly,
    EXPAND_CAP,
};
use spiderweb_core::{Edge, Graph};

const SPECTRUM_TOL: f64 = 1e-8;
const KESTEN_MASS_TOL: f64 = 1e-6;
const KESTEN_QMAX: u64 = 30;
const NORMALITY_BOUND: usize = 6;
const ACTION_TRIPLES: usize = 10_000;
const RELATOR_N_MAX: i64 = 10;
const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn structure() -> Outcome {
    let mut count = 0;
    for k in 2..=3 {
        for n in 0..=4 {
            for m in 1..=6 {
                spider_web_tensor_iso(k, n, m).map_err(|e| format!("k={k} N={n} M={m}: {e:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} grid points"))
}

fn line_graphs() -> Outcome {
    for k in 2..=3 {
        for n in 0..=4 {
            de_bruijn_line_iso(k, n).map_err(|e| format!("de Bruijn k={k} N={n}: {e:?}"))?;
            gamma_line_iso(k, n).map_err(|e| format!("Schreier k={k} N={n}: {e:?}"))?;
        }
    }
    Ok("k in {2,3}, N <= 4".into())
}

/// `Γ_{k,N}` with `cbar_r` renamed `R_{π(r)}`.
fn relabel_gamma(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| {
            let r: usize = e.label.as_deref().unwrap()["cbar_".len()..].parse().unwrap();
            Edge {
                label: Some(format!("R_{}", perm[r])),
                ..e.clone()
            }
        })
        .collect();
    Graph::new(g.kind(), g.vertices().to_vec(), edges).unwrap()
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

fn schreier() -> Outcome {
    for k in 2..=3 {
        for n in 0..=4 {
            gamma_bruijn_iso(k, n).map_err(|e| format!("k={k} N={n}: {e:?}"))?;
        }
    }
    let config = IsoConfig::default();
    for n in [2, 3] {
        let b = de_bruijn(2, n).map_err(err)?;
        ensure!(
            find_iso(&b, &b, IsoKind::Strong, None, &config).map_err(err)?.is_found(),
            "strong self-search failed for N={n}"
        );
        let gamma = schreier_level_graph(2, n).map_err(err)?;
        for perm in permutations(2) {
            let g = relabel_gamma(&gamma, &perm);
            match find_iso(&b, &g, IsoKind::Strong, None, &config).map_err(err)? {
                Search::NotFound => {}
                other => return Err(format!("N={n} perm={perm:?}: expected none, got {other:?}")),
            }
        }
    }
    Ok("weak witnesses k in {2,3}, N <= 4; strong search: none for (2,2), (2,3)".into())
}

fn spectra_exact() -> Outcome {
    let mut count = 0;
    for k in 2..=4usize {
        for n in 0.. {
            let size = k.pow(n as u32);
            if size > 64 {
                break;
            }
            for m in 1..=64 / size {
                let g = spider_web_m(k, n, m).map_err(err)?.underlying().map_err(err)?;
                let a = g.integer_adjacency().ok_or("non-integer adjacency")?;
                let exact = charpoly_oracle(&a).map_err(err)?;
                let factored = spiderweb_charpoly(k, n, m).map_err(err)?.expand(EXPAND_CAP).map_err(err)?;
                ensure!(exact == factored, "k={k} N={n} M={m}: {exact} != {factored}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} grid points with M*k^N <= 64, k in 2..=4"))
}

fn spectra_closed_form() -> Outcome {
    let mut worst = 0.0f64;
    for k in 2..=3usize {
        for n in 0..=4 {
            for m in 1..=6 {
                let closed = closed_form_spectrum(k, n, m).map_err(err)?;
                let expected = m * k.pow(n as u32);
                ensure!(
                    closed.total() == expected.into(),
                    "k={k} N={n} M={m}: multiplicities sum to {}",
                    closed.total()
                );
                let values = closed.eigenvalues(expected).map_err(err)?;
                let numeric = numeric_spectrum(&spider_web_m(k, n, m).map_err(err)?).map_err(err)?;
                ensure!(values.len() == numeric.len(), "k={k} N={n} M={m}: length mismatch");
                for (a, b) in values.iter().zip(&numeric) {
                    worst = worst.max((a - b).abs());
                }
                ensure!(worst <= SPECTRUM_TOL, "k={k} N={n} M={m}: deviation {worst:e}");
                let minus = -2.0 * k as f64;
                let has_minus = numeric.iter().any(|x| (x - minus).abs() <= SPECTRUM_TOL);
                ensure!(has_minus == (m % 2 == 0), "k={k} N={n} M={m}: -2k presence wrong");
            }
        }
    }
    Ok(format!("max deviation {worst:.2e} (tolerance {SPECTRUM_TOL:e})"))
}

fn kesten() -> Outcome {
    let mut masses = Vec::new();
    for k in 2..=3 {
        let mass = kesten_measure(k, KESTEN_QMAX).map_err(err)?.total_mass();
        let mass = num_traits::ToPrimitive::to_f64(&mass).unwrap();
        ensure!((1.0 - mass).abs() <= KESTEN_MASS_TOL, "k={k}: mass {mass}");
        masses.push(mass);
    }
    let limit = kesten_measure(2, KESTEN_QMAX).map_err(err)?;
    let d = |n: usize| -> Result<f64, String> {
        measure_distance(&closed_form_spectrum(2, n, n).map_err(err)?.measure(), &limit).map_err(err)
    };
    let (d2, d6) = (d(2)?, d(6)?);
    ensure!(d6 < d2, "distance at N=6 ({d6}) not below N=2 ({d2})");
    Ok(format!("masses {masses:?}; distance N=2 {d2:.4}, N=6 {d6:.4}"))
}

fn benjamini_schramm() -> Outcome {
    let reference = cayley_ball(2, 2).map_err(err)?.ball;
    let mut table = Vec::new();
    for r in 0..=2 {
        let mut prev = Ratio::new(0u64, 1);
        for (n, m) in [(2, 2), (4, 4), (8, 8)] {
            let g = spider_web_m(2, n, m).map_err(err)?;
            let f = match_fraction(&g, r, &reference).map_err(err)?;
            ensure!(f >= prev, "r={r}: fraction drops to {f} at ({n},{m})");
            prev = f;
            table.push(format!("r{r}({n},{m})={f}"));
        }
        if r == 2 {
            ensure!(prev == Ratio::new(1, 1), "spider_web(2,8,8) r=2 gives {prev}");
        }
    }
    Ok(table.join(" "))
}

fn check_components(g: &Graph, what: &str) -> Result<(), String> {
    for m in 1..=12 {
        let predicted = predict_components(g, Some(m as u64)).map_err(err)?;
        let t = tensor(g, &cycle_m(m).map_err(err)?).map_err(err)?;
        let actual = components(&t).len() as u64;
        ensure!(
            predicted.canonical == Count::Finite(actual),
            "{what} ⊗ C_{m}: union-find {actual}, predicted {}",
            predicted.canonical
        );
    }
    Ok(())
}

fn components_criterion() -> Outcome {
    for n in 0..=3 {
        check_components(&de_bruijn(2, n).map_err(err)?, &format!("B(2,{n})"))?;
    }
    for d in 1..=12 {
        check_components(&cycle_m(d).map_err(err)?, &format!("C_{d}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut random = 0;
    while random < 40 {
        let n: usize = rng.random_range(1..=8);
        let m = rng.random_range(n.saturating_sub(1)..=2 * n);
        let g = random_oriented(n, m, &mut rng);
        if components(&g).len() != 1 {
            continue;
        }
        check_components(&g, &format!("random graph #{random}"))?;
        random += 1;
    }
    let report = predict_components(&cycle_m(4).map_err(err)?, Some(10)).map_err(err)?;
    ensure!(
        report.canonical == Count::Finite(2)
            && report.residue_formula == Count::Finite(4)
            && report.discrepancy(),
        "C_4 ⊗ C_10 report: {report:?}"
    );
    Ok("de Bruijn, cycles, 40 random graphs x M <= 12; C4xC10 discrepancy 2 vs 4 reported".into())
}

fn transitivity() -> Outcome {
    let config = IsoConfig::default();
    for n in 1..=3 {
        for m in 1..=4 {
            let g = spider_web_m(2, n, m).map_err(err)?;
            let t = is_vertex_transitive(&g, IsoKind::Weak, &config).map_err(err)?;
            let expected = if m >= n { Transitivity::Transitive } else { Transitivity::NotTransitive };
            ensure!(t == expected, "N={n} M={m}: {t:?}");
            let witnesses = transitivity_witnesses(2, n, m);
            ensure!(witnesses.is_ok() == (m >= n), "N={n} M={m}: witnesses {:?}", witnesses.err());
        }
    }
    Ok("12 cases".into())
}

fn coverings() -> Outcome {
    for k in 2..=3 {
        for n in 0..=4 {
            let (s, t, f) = prefix_truncation_map(k, n).map_err(err)?;
            ensure!(f.is_covering(&s, &t).map_err(err)?, "truncation k={k} N={n}");
        }
    }
    for n in 0..=3 {
        for m in 1..=3 {
            let (s, t, f) = slice_projection_map(2, n, m, 2).map_err(err)?;
            ensure!(f.is_covering(&s, &t).map_err(err)?, "projection N={n} M={m}");
        }
    }
    for n in 1..=3 {
        let (s, t, f) = drop_first_symbol_map(2, n).map_err(err)?;
        ensure!(!f.is_covering(&s, &t).map_err(err)?, "drop-first-symbol N={n} is a covering");
    }
    Ok("truncations, slice projections pass; drop-first-symbol fails".into())
}

fn euler_hamilton() -> Outcome {
    for n in 0..=3 {
        for m in 1..=3 {
            let g = spider_web_m(2, n, m).map_err(err)?;
            let circuit = eulerian_circuit(&g).map_err(err)?;
            ensure!(verify_eulerian_circuit(&g, &circuit), "Euler replay N={n} M={m}");
            match hamiltonian_cycle(&g, 10_000_000).map_err(err)? {
                Search::Found(c) => {
                    ensure!(verify_hamiltonian_cycle(&g, &c), "Hamilton replay N={n} M={m}")
                }
                other => return Err(format!("Hamilton N={n} M={m}: {other:?}")),
            }
        }
    }
    Ok("N <= 3, M <= 3".into())
}

fn group_core() -> Outcome {
    for k in [2u32, 3, 6] {
        for word in classical_relators(k, RELATOR_N_MAX)
            .iter()
            .chain(&cbar_relators(k, RELATOR_N_MAX))
        {
            ensure!(evaluate(word, k).is_identity(), "k={k}: relator {word:?} is not trivial");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..ACTION_TRIPLES {
        let k = [2u32, 3][rng.random_range(0..2)];
        let g = LampElement::random(k, 4, &mut rng);
        let h = LampElement::random(k, 4, &mut rng);
        let n = rng.random_range(0..=6);
        let x: Vec<u32> = (0..n).map(|_| rng.random_range(0..k)).collect();
        ensure!(
            act_level(&(&g * &h), &x) == act_level(&g, &act_level(&h, &x)),
            "action fails for g={g}, h={h}, x={x:?}"
        );
        ensure!(act_level(&LampElement::identity(k), &x) == x, "identity moves {x:?}");
    }
    for n in 1..=3 {
        for m in 1..=4 {
            let report = normality_report(|g| in_h(g, n, m), 2, NORMALITY_BOUND).map_err(err)?;
            ensure!(
                report.is_normal_evidence() == (m % n == 0),
                "H_{{{n},{m}}}: report {:?}",
                report.witness
            );
        }
    }
    Ok(format!(
        "relators n <= {RELATOR_N_MAX}, {ACTION_TRIPLES} action triples, normality N <= 3, M <= 4 at bound {NORMALITY_BOUND}"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("structure: spider web = de Bruijn x cycle", structure),
        ("line graphs", line_graphs),
        ("Schreier identification", schreier),
        ("spectra, exact", spectra_exact),
        ("spectra, closed form", spectra_closed_form),
        ("Kesten limit", kesten),
        ("Benjamini-Schramm", benjamini_schramm),
        ("components", components_criterion),
        ("transitivity", transitivity),
        ("coverings", coverings),
        ("Euler/Hamilton", euler_hamilton),
        ("group core", group_core),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} [{detail}] ({secs:.1}s)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} [{detail}] ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
