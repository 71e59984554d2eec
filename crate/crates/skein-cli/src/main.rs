use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skein::coords::{describe, map_between, Family};
use skein::curvedkoszul::{build_curved_koszul, contract_if_unit, effective_thickness_koszul};
use skein::haiman::{hdet, key_det, KeyShape, Shape};
use skein::homseries::{
    coefficients_json, hopf_parity_series, ideal_cross_check, series_window, unknot_series, HopfOptions, SeriesExpr,
};
use skein::ideals::{antisym_generators, digon_complex, key_generators, key_ideal, DeformedRing, IdealWindow};
use skein::polycore::{Poly, Registry, Weight, Window};
use skein::symfun::{schur, Alphabet, Partition};

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact computations for colored Hopf-link homology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Haiman determinant of a monomial list, e.g. --shape '[[0,0],[1,0]]'.
    Hdet {
        #[arg(long)]
        shape: String,
    },
    /// Key determinant of Key_l(lambda) and its quotient in the deformed ring.
    Keydet {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value = "")]
        lambda: String,
    },
    /// Schur polynomial in n letters.
    Schur {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Generators, membership and Hilbert series of the Hopf-link ideal.
    Ideal {
        #[arg(value_enum)]
        action: IdealAction,
        #[command(flatten)]
        colors: Colors,
        #[arg(long)]
        poly: Option<String>,
        #[command(flatten)]
        window: IdealWindowArgs,
        /// List every alternant of the window instead of the key generators.
        #[arg(long)]
        alternants: bool,
    },
    /// Poincaré series.
    Series {
        #[arg(value_enum)]
        action: SeriesAction,
        #[arg(long, default_value_t = 1)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long)]
        deformed: bool,
        #[arg(long)]
        dual: bool,
        /// Keep only the a^0 part of the Hochschild series.
        #[arg(long)]
        bottom: bool,
        /// `qmin:qmax,tmin:tmax` for expansions.
        #[arg(long)]
        window: Option<String>,
        /// Print the coefficient table after the factored form.
        #[arg(long)]
        expand: bool,
        #[command(flatten)]
        ideal_window: IdealWindowArgs,
    },
    /// Coordinate changes between parameter families.
    Coords {
        #[arg(value_enum)]
        action: CoordsAction,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: Option<usize>,
    },
    /// Curved Koszul complexes and their contraction.
    Koszul {
        #[arg(value_enum)]
        action: KoszulAction,
        #[arg(long)]
        b: usize,
        /// Width of the effective-thickness twist used by `contract`.
        #[arg(long)]
        width: Option<usize>,
        /// Parameter inverted by `contract`.
        #[arg(long, default_value = "v")]
        invert: String,
    },
    /// The digon complex of ideals and its exactness.
    Digon {
        #[command(flatten)]
        colors: Colors,
        #[command(flatten)]
        window: IdealWindowArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = ["symfun", "frobdem", "coords", "koszul", "keylemma", "ideals", "series", "all"])]
        suite: String,
        #[arg(long, default_value_t = 4)]
        workers: usize,
    },
}

#[derive(clap::Args)]
struct Colors {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
}

#[derive(clap::Args, Clone, Copy)]
struct IdealWindowArgs {
    #[arg(long)]
    qmax: Option<i32>,
    #[arg(long)]
    tmax: Option<u32>,
    #[arg(long)]
    vmax: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealAction {
    Gens,
    Member,
    Hilbert,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesAction {
    Unknot,
    Hopf,
    Compare,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoordsAction {
    Map,
}

#[derive(Clone, Copy, ValueEnum)]
enum KoszulAction {
    Build,
    Contract,
}

/// A report plus whether every assertion in it held.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
    failure: Option<String>,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true, failure: None }
    }

    fn checked(text: String, json: Value, failure: Option<String>) -> Self {
        Outcome { text, json, ok: failure.is_none(), failure }
    }
}

/// `SKEIN_WINDOW`, e.g. `qmax=12,vmax=3,q=-20:20,t=0:12`.
fn env_window() -> Result<Vec<(String, String)>> {
    let Ok(raw) = std::env::var("SKEIN_WINDOW") else {
        return Ok(Vec::new());
    };
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| anyhow!("SKEIN_WINDOW entry {kv:?} is not key=value"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn env_value<T: std::str::FromStr>(key: &str) -> Result<Option<T>> {
    for (k, v) in env_window()? {
        if k == key {
            return v.parse().map(Some).map_err(|_| anyhow!("SKEIN_WINDOW {key}={v} is not a number"));
        }
    }
    Ok(None)
}

fn range(s: &str) -> Result<(i32, i32)> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| anyhow!("range {s:?} is not lo:hi"))?;
    Ok((lo.trim().parse()?, hi.trim().parse()?))
}

fn ideal_window(args: IdealWindowArgs, fallback: IdealWindow) -> Result<IdealWindow> {
    let qmax = match args.qmax {
        Some(q) => q,
        None => env_value("qmax")?.unwrap_or(fallback.qmax),
    };
    let vmax = match (args.vmax, args.tmax) {
        (Some(v), _) => v,
        (None, Some(t)) => t / 2,
        (None, None) => match env_value::<u32>("vmax")? {
            Some(v) => v,
            None => env_value::<u32>("tmax")?.map_or(fallback.vmax, |t| t / 2),
        },
    };
    Ok(IdealWindow::new(qmax, vmax))
}

fn series_range(flag: Option<&str>, letters: usize) -> Result<Window> {
    let mut w = series_window(letters);
    let mut entries: Vec<(String, String)> = env_window()?.into_iter().filter(|(k, _)| k == "q" || k == "t").collect();
    if let Some(f) = flag {
        let parts: Vec<&str> = f.split(',').collect();
        if parts.len() != 2 {
            bail!("--window expects qmin:qmax,tmin:tmax");
        }
        entries = vec![("q".into(), parts[0].into()), ("t".into(), parts[1].into())];
    }
    for (k, v) in entries {
        let r = range(&v)?;
        if k == "q" {
            w.q = r;
        } else {
            w.t = r;
        }
    }
    Ok(w)
}

fn partition(s: &str) -> Result<Partition> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(str::parse).collect();
    let parts = parts.with_context(|| format!("partition {s:?} is not a comma-separated list"))?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        bail!("partition {s:?} is not weakly decreasing");
    }
    Ok(Partition::new(parts))
}

fn xy_alphabets(n: usize) -> Result<(Alphabet, Alphabet)> {
    let mut reg = Registry::builder();
    for i in 1..=n {
        reg = reg.even(format!("x{i}"), Weight::qt(2, 0));
    }
    for i in 1..=n {
        reg = reg.even(format!("y{i}"), Weight::qt(-2, 2));
    }
    let ring = reg.build()?;
    Ok((Alphabet::numbered(&ring, "X", "x", 1, n)?, Alphabet::numbered(&ring, "Y", "y", 1, n)?))
}

fn run(cli: &Cli) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::Hdet { shape } => {
            let value: Value = serde_json::from_str(shape).context("--shape is not JSON")?;
            let s = Shape::from_json(&value)?;
            let (x, y) = xy_alphabets(s.len())?;
            let p = hdet(s.cells(), &x, &y)?;
            Outcome::ok(p.to_text(), json!({"command": "hdet", "shape": s.to_json(), "poly": p.to_text()}))
        }
        Command::Keydet { a, b, l, lambda } => {
            let key = KeyShape::new(*a, *b, *l, partition(lambda)?)?;
            let ring = DeformedRing::new(&[*a, *b])?;
            let det = key_det(&key, ring.x(), ring.y())?;
            let quotient = ring.quotient(&det)?;
            Outcome::ok(
                format!("shape {}\ndet {}\nquotient {}", key.shape(), det.to_text(), quotient.to_text()),
                json!({"command": "keydet", "shape": key.shape().to_json(), "det": det.to_text(), "quotient": quotient.to_text()}),
            )
        }
        Command::Schur { lambda, n } => {
            let (x, _) = xy_alphabets(*n)?;
            let p = schur(&partition(lambda)?, &x)?;
            Outcome::ok(p.to_text(), json!({"command": "schur", "lambda": lambda, "n": n, "poly": p.to_text()}))
        }
        Command::Ideal { action, colors, poly, window, alternants } => {
            let (a, b) = (colors.a, colors.b);
            let ring = DeformedRing::new(&[a, b])?;
            let w = ideal_window(*window, IdealWindow::default_for(a, b))?;
            match action {
                IdealAction::Gens => {
                    let (labels, gens): (Vec<String>, Vec<Poly>) = if *alternants {
                        antisym_generators(&ring, w)?.into_iter().map(|(s, g)| (s.to_string(), g)).unzip()
                    } else {
                        key_generators(&ring)?.into_iter().map(|(k, g)| (k.to_string(), g)).unzip()
                    };
                    let text = labels
                        .iter()
                        .zip(&gens)
                        .map(|(l, g)| format!("{l}: {}", g.to_text()))
                        .collect::<Vec<_>>()
                        .join("\n");
                    let list: Vec<Value> =
                        labels.iter().zip(&gens).map(|(l, g)| json!({"label": l, "poly": g.to_text()})).collect();
                    Outcome::ok(
                        text,
                        json!({"command": "ideal gens", "a": a, "b": b, "window": w.to_json(), "generators": list}),
                    )
                }
                IdealAction::Member => {
                    let src = poly.as_deref().ok_or_else(|| anyhow!("ideal member needs --poly"))?;
                    let p = ring.expand(&Poly::parse(ring.ring(), src)?);
                    let ideal = key_ideal(&ring, w)?;
                    let m = ideal.membership(&p)?;
                    let mut json = ideal.to_json(a, b, &[(p.clone(), m.clone())]);
                    json["command"] = json!("ideal member");
                    json.as_object_mut().expect("object").remove("hilbert");
                    let text = if m.member {
                        let gens = ideal.generators();
                        let terms: Vec<String> = m
                            .certificate
                            .iter()
                            .zip(gens)
                            .map(|(c, g)| format!("({})*({})", c.to_text(), g.to_text()))
                            .collect();
                        format!("member: {}\ncertificate: {}", p.to_text(), terms.join(" + "))
                    } else {
                        format!("not a member: {}", p.to_text())
                    };
                    Outcome::ok(text, json)
                }
                IdealAction::Hilbert => {
                    let ideal = key_ideal(&ring, w)?;
                    let mut json = ideal.to_json(a, b, &[]);
                    json["command"] = json!("ideal hilbert");
                    json.as_object_mut().expect("object").remove("memberships");
                    let text = ideal
                        .hilbert()
                        .iter()
                        .map(|(w, d)| format!("q^{} t^{}: {d}", w.q, w.t))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Outcome::ok(text, json)
                }
            }
        }
        Command::Series { action, a, b, deformed, dual, bottom, window, expand, ideal_window: iw } => {
            let expr_outcome = |name: &str, e: SeriesExpr, letters: usize| -> Result<Outcome> {
                let w = series_range(window.as_deref(), letters)?;
                let coeffs = coefficients_json(&e.expand(w));
                let mut text = e.to_string();
                if *expand {
                    for c in coeffs.as_array().expect("array") {
                        text.push_str(&format!(
                            "\na^{} q^{} t^{}: {}",
                            c["a"],
                            c["q"],
                            c["t"],
                            c["coef"].as_str().unwrap_or("")
                        ));
                    }
                }
                Ok(Outcome::ok(
                    text,
                    json!({"command": name, "factored": e.to_string(), "window": {"q": [w.q.0, w.q.1], "t": [w.t.0, w.t.1], "a": [w.a.0, w.a.1]}, "coefficients": coeffs}),
                ))
            };
            match action {
                SeriesAction::Unknot => expr_outcome("series unknot", unknot_series(*b, *deformed, *dual), *b)?,
                SeriesAction::Hopf => {
                    let e = hopf_parity_series(*a, *b, HopfOptions { bottom: *bottom, deformed: *deformed })
                        .ok_or_else(|| anyhow!("hopf series needs a >= b"))?;
                    expr_outcome("series hopf", e, a + b)?
                }
                SeriesAction::Compare => {
                    let w = ideal_window(*iw, IdealWindow::default_for(*a, *b))?;
                    let c = ideal_cross_check(*a, *b, w)?;
                    let cmp = &c.comparison;
                    let failure = (!c.ok()).then(|| match &cmp.first_difference {
                        Some((w, l, r)) => format!(
                            "coefficient of {} differs: ideal {l}, hopf {r}",
                            skein::homseries::monomial_text(*w)
                        ),
                        None => "nothing compared".to_string(),
                    });
                    let text = format!(
                        "Hilbert series of the ideal vs deformed bottom Hopf series ({},{}): {} over {} weights, shift {}",
                        a,
                        b,
                        if c.ok() { "equal" } else { "different" },
                        cmp.checked,
                        skein::homseries::monomial_text(cmp.shift)
                    );
                    let mut json = c.to_json();
                    json["command"] = json!("series compare");
                    Outcome::checked(text, json, failure)
                }
            }
        }
        Command::Coords { action: CoordsAction::Map, from, to, a, b } => {
            let (f, t): (Family, Family) = (from.parse()?, to.parse()?);
            let (_, map) = map_between(f, t, *a, *b)?;
            let images = describe(&map);
            let text = images.iter().map(|(v, p)| format!("{v} -> {p}")).collect::<Vec<_>>().join("\n");
            let list: Vec<Value> = images.iter().map(|(v, p)| json!({"var": v, "image": p})).collect();
            Outcome::ok(
                text,
                json!({"command": "coords map", "from": f.as_str(), "to": t.as_str(), "a": a, "b": b, "images": list}),
            )
        }
        Command::Koszul { action, b, width, invert } => match action {
            KoszulAction::Build => {
                let (_, c) = build_curved_koszul(*b)?;
                let ok = c.verify().is_ok();
                let mut json = c.to_json();
                json["command"] = json!("koszul build");
                json["squares_to_curvature"] = json!(ok);
                let text = format!(
                    "rank {} dim {}\ncurvature {}\nsquares to curvature: {ok}",
                    c.rank(),
                    c.dim(),
                    c.curvature().to_text()
                );
                Outcome::checked(text, json, (!ok).then(|| "(d + Delta)^2 differs from the curvature".to_string()))
            }
            KoszulAction::Contract => {
                let (kr, c) = effective_thickness_koszul(*b, width.unwrap_or(*b))?;
                let var = kr.ring().try_idx(invert).map_err(|_| anyhow!("no parameter named {invert:?}"))?;
                let h = contract_if_unit(&c, &[var])?;
                let (full, bare, terminates) = (h.verify(&c), h.verify_unperturbed(&c), h.series_terminates(&c, 3));
                let ok = full && bare;
                let text = format!(
                    "contract along xi_{} with unit {}\nDK + KD = u id: {full}\nDelta K + K Delta = u id: {bare}\nperturbation terms vanish to order 3: {terminates}",
                    h.generator,
                    h.unit.to_text()
                );
                let json = json!({
                    "command": "koszul contract", "b": b, "generator": h.generator, "unit": h.unit.to_text(),
                    "homotopy": full, "unperturbed": bare, "series_terminates": terminates, "ok": ok,
                });
                Outcome::checked(text, json, (!ok).then(|| "contracting homotopy identity fails".to_string()))
            }
        },
        Command::Digon { colors, window } => {
            let w = ideal_window(*window, IdealWindow::digon_for(colors.a, colors.b))?;
            let rep = digon_complex(colors.a, colors.b, w)?.verify()?;
            let mut json = rep.to_json();
            json["command"] = json!("digon");
            let text = format!(
                "digon ({},{}) over {} pieces\nd^2 = 0: {}\nd(J) in J: {}\nambient exact: {}\nhomotopy sign {}: {}\nideal exact at 0..b-1: {:?}",
                colors.a, colors.b, rep.pieces, rep.square_zero, rep.ideal_preserved, rep.ambient_exact, rep.homotopy_sign.unwrap_or(0), rep.homotopy_ok, rep.ideal_exact
            );
            Outcome::checked(
                text,
                json,
                rep.failures.first().cloned().or_else(|| (!rep.ok()).then(|| "digon check failed".into())),
            )
        }
        Command::Verify { suite, workers } => {
            let suites = skein::verify::select(suite).ok_or_else(|| anyhow!("unknown suite {suite}"))?;
            let checks = skein::verify::run(&suites, *workers);
            let failed: Vec<_> = checks.iter().filter(|c| !c.ok).collect();
            let mut text: Vec<String> = checks.iter().map(|c| c.to_string()).collect();
            text.push(format!("{} checks, {} failed", checks.len(), failed.len()));
            let list: Vec<Value> = checks
                .iter()
                .map(|c| json!({"suite": c.suite, "name": c.name, "ok": c.ok, "detail": c.detail}))
                .collect();
            let failure = failed.first().map(|c| c.to_string());
            Outcome::checked(
                text.join("\n"),
                json!({"command": "verify", "suite": suite, "checks": list, "ok": failure.is_none()}),
                failure,
            )
        }
    })
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => emit(&out.text),
                Format::Json => {
                    let mut json = json!({"schema": 1});
                    if let (Some(dst), Some(src)) = (json.as_object_mut(), out.json.as_object()) {
                        dst.extend(src.clone());
                    }
                    emit(&serde_json::to_string_pretty(&json).expect("serializable"));
                }
            }
            if let Some(f) = &out.failure {
                eprintln!("assertion failed: {f}");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
