mod linkspec;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tanglekit_core::diagram::{
    expr_to_diagram_capped, numerator_diagram, Classification, Closure, Fingerprint, Oracle,
    OrientedTorusLink2,
};
use tanglekit_core::solver::{
    band_solve, gamma_unknot_classify, move_equiv_zero, move_to_zero_form, pathway_check,
    psi_move_solve, signature_obstruction, solve_2k_to_2k1, solve_generalized_m,
    solve_nonband_family, trefoil_hopf_family, verify_instance, zero_forms, BandOutcome,
    GammaParams, Instance, PsiOutcome,
};
use tanglekit_core::tables::{bless, report_golden, FixtureStatus};
use tanglekit_core::two_bridge::{describe, genus_one_fraction};
use tanglekit_core::{
    fraction_to_cf, parse_expr, Report, Result, SolutionFamily, TangleError, TangleExpr,
    TangleFraction, Verification, VerificationSummary,
};

use linkspec::parse_link;

#[derive(Parser)]
#[command(
    name = "tanglekit",
    version,
    about = "Rational tangle calculus and tangle-equation solver"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Crossing cap for the diagram oracle (default: TANGLEKIT_CROSSING_CAP or 24).
    #[arg(long, global = true)]
    cap: Option<usize>,
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
    /// Evaluate a tangle expression to its fraction.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Build the closure diagram of an expression and export its crossings.
    Closure {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        denominator: bool,
    },
    /// Identify N(expr) among 2-bridge links.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Convert a (P, R) move to a (0, t/w) move and compare it with (0, c/d).
    #[command(allow_negative_numbers = true)]
    MoveEquiv {
        #[arg(long, allow_hyphen_values = true)]
        p: TangleFraction,
        #[arg(long, allow_hyphen_values = true)]
        r: TangleFraction,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<TangleFraction>,
    },
    /// Solve N(U + 0) = N(a/b), N(U + t/w) = product; without --tw, the
    /// non-band family from N(2k).
    #[command(allow_negative_numbers = true)]
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        product: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "k")]
        substrate: Option<TangleFraction>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        tw: Option<TangleFraction>,
        #[arg(long, default_value_t = -3)]
        h_min: i64,
        #[arg(long, default_value_t = 3)]
        h_max: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Coherent band surgeries from N((4mn-1)/2m) to N(2k) with linking number lk.
    #[command(allow_negative_numbers = true)]
    BandSolve {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        w: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        lk: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Xer products of N(2k) (w = -1 by default), or trefoil to Hopf link.
    #[command(allow_negative_numbers = true)]
    XerProducts {
        #[arg(long, required_unless_present = "trefoil_hopf")]
        k: Option<i64>,
        #[arg(long, default_value_t = -1)]
        w: i64,
        #[arg(long, conflicts_with = "k")]
        trefoil_hopf: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Solve the (-1/3, -4/3) move from N(2k); a table name tries both chiralities.
    #[command(allow_negative_numbers = true)]
    PsiSolve {
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        product: String,
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether the core curve with linking numbers (p, q) is unknotted.
    #[command(allow_negative_numbers = true)]
    Gamma {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Steps of the stepwise unlinking pathway from T(2,2k).
    #[command(allow_negative_numbers = true)]
    Pathway {
        #[arg(long)]
        k: i64,
    },
    /// Check one solution U of N(U + P) = substrate, N(U + R) = product.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        p: TangleFraction,
        #[arg(long, allow_hyphen_values = true)]
        r: TangleFraction,
        #[arg(long, allow_hyphen_values = true)]
        substrate: String,
        #[arg(long, allow_hyphen_values = true)]
        product: String,
        /// Require a coherent band surgery.
        #[arg(long)]
        coherent: bool,
    },
    /// Regenerate the golden tables and compare them with a corpus directory.
    Report {
        #[arg(long)]
        corpus: PathBuf,
        /// Overwrite the corpus with the regenerated tables.
        #[arg(long)]
        bless: bool,
    },
}

struct Done {
    report: Report,
    code: u8,
}

impl Done {
    fn ok(report: Report) -> Self {
        Done { report, code: 0 }
    }

    fn with(report: Report, code: u8, status: &str, reason: impl Into<String>) -> Self {
        Done {
            report: report.status(status, Some(reason.into())),
            code,
        }
    }
}

fn exit_code(e: &TangleError) -> u8 {
    match e {
        TangleError::NotRational(_)
        | TangleError::Unsupported(_)
        | TangleError::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn verify_all(fams: &mut [SolutionFamily], verify: bool, oracle: &Oracle) {
    if verify {
        for f in fams.iter_mut() {
            f.verify(oracle);
        }
    }
}

fn family_done(report: Report, fams: &[SolutionFamily]) -> Done {
    let summary = VerificationSummary::of(fams);
    let report = report.families(fams);
    if summary.any_failed() {
        Done::with(
            report,
            1,
            "verification-failed",
            "an emitted instance failed verification",
        )
    } else if summary.instances == 0 {
        Done::with(report, 1, "no-solution", "no solution")
    } else {
        Done::ok(report)
    }
}

fn eval(expr: &str) -> Result<Done> {
    let e = parse_expr(expr)?;
    let f = e.evaluate();
    Ok(Done::ok(
        Report::new("eval", json!({ "expr": expr })).results(json!({
            "expr": e.to_string(),
            "rational": f.is_some(),
            "fraction": f.map(|f| f.to_string()),
            "twist_word": f.map(|f| fraction_to_cf(f).to_string()),
            "crossings": e.crossing_count(),
        })),
    ))
}

fn closure(expr: &str, denominator: bool, oracle: &Oracle) -> Result<Done> {
    let e = parse_expr(expr)?;
    let kind = if denominator {
        Closure::Denominator
    } else {
        Closure::Numerator
    };
    let d = expr_to_diagram_capped(&e, kind, oracle.cap())?;
    let input = json!({ "expr": expr, "denominator": denominator });
    Ok(Done::ok(Report::new("closure", input).results(json!({
        "expr": e.to_string(),
        "closure": if denominator { "denominator" } else { "numerator" },
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "crossing_list": d.export(),
    }))))
}

fn classify(expr: &str, oracle: &Oracle) -> Result<Done> {
    let e = parse_expr(expr)?;
    let d = oracle.diagram(&e)?;
    let class = oracle.classify_diagram(&d);
    let fp = Fingerprint::of(&d);
    let orientations: Vec<Value> = d
        .orient()
        .orientation_classes()
        .iter()
        .map(|o| {
            json!({
                "jones": o.jones().to_string(),
                "signature": o.signature(),
                "linking_number": o.linking_number().ok(),
            })
        })
        .collect();
    let (link, candidates) = match &class {
        Classification::TwoBridge(l) => (Some(describe(l)), Vec::new()),
        Classification::Unrecognized { candidates } => {
            (None, candidates.iter().map(describe).collect())
        }
    };
    Ok(Done::ok(
        Report::new("classify", json!({ "expr": expr })).results(json!({
            "expr": e.to_string(),
            "link": link,
            "candidates": candidates,
            "components": fp.components,
            "determinant": fp.determinant,
            "jones_variable": "x = t^(1/2)",
            "orientations": orientations,
        })),
    ))
}

fn move_equiv(p: TangleFraction, r: TangleFraction, to: Option<TangleFraction>) -> Result<Done> {
    let zf = move_to_zero_form(p, r)?;
    let witnesses: Vec<Value> = zero_forms(p, r, -2..=2)?
        .iter()
        .map(|z| json!({ "e1": z.e1, "i1": z.i1, "t/w": format!("{}/{}", z.t, z.w) }))
        .collect();
    let mut results = json!({
        "move": format!("({p}, {r})"),
        "zero_form": format!("(0, {}/{})", zf.t, zf.w),
        "e1": zf.e1,
        "i1": zf.i1,
        "witnesses": witnesses,
    });
    if let Some(cd) = to {
        let h = move_equiv_zero(zf.t, zf.w, cd.num(), cd.den());
        results["compared_with"] = json!({
            "move": format!("(0, {cd})"),
            "equivalent": h.is_some(),
            "h": h,
        });
    }
    let input = json!({ "p": p.to_string(), "r": r.to_string(), "to": to.map(|f| f.to_string()) });
    Ok(Done::ok(Report::new("move-equiv", input).results(results)))
}

#[allow(clippy::too_many_arguments)]
fn solve(
    product: &str,
    substrate: Option<TangleFraction>,
    k: Option<i64>,
    tw: Option<TangleFraction>,
    hs: (i64, i64),
    verify: bool,
    oracle: &Oracle,
) -> Result<Done> {
    let target = parse_link(product)?;
    let input = json!({
        "product": product,
        "substrate": substrate.map(|f| f.to_string()),
        "k": k,
        "tw": tw.map(|f| f.to_string()),
        "h": [hs.0, hs.1],
        "verify": verify,
    });
    let report = Report::new("solve", input);
    let mut fams = match (tw, substrate, k) {
        (Some(tw), Some(ab), _) => solve_generalized_m(ab, tw, target.fraction())?,
        (Some(tw), None, Some(k)) => {
            solve_generalized_m(TangleFraction::integer(2 * k), tw, target.fraction())?
        }
        (None, None, Some(k)) => {
            if hs.0 > hs.1 {
                return Err(TangleError::precondition("--h-min must not exceed --h-max"));
            }
            vec![solve_nonband_family(k, target.fraction(), hs.0..=hs.1)?]
        }
        (None, Some(_), _) => {
            return Err(TangleError::precondition(
                "--tw is required with --substrate",
            ))
        }
        (_, None, None) => {
            return Err(TangleError::precondition(
                "one of --substrate or --k is required",
            ))
        }
    };
    verify_all(&mut fams, verify, oracle);
    Ok(family_done(report, &fams))
}

fn band(m: i64, n: i64, w: i64, k: i64, lk: i64, verify: bool, oracle: &Oracle) -> Result<Done> {
    let target = OrientedTorusLink2::new(k, lk)?;
    let input = json!({ "m": m, "n": n, "w": w, "k": k, "lk": lk, "verify": verify });
    let report = Report::new("band-solve", input);
    match band_solve(m, n, w, target)? {
        BandOutcome::Solutions { mut families } => {
            verify_all(&mut families, verify, oracle);
            Ok(family_done(report, &families))
        }
        out @ BandOutcome::Obstructed { .. } => {
            let knot = numerator_diagram(&TangleExpr::leaf(genus_one_fraction(m, n))).orient();
            let check = signature_obstruction(&target.diagram(), &knot);
            let results = json!({ "outcome": out, "oracle": check });
            Ok(Done::with(
                report.results(results),
                1,
                "obstructed",
                "signature",
            ))
        }
        out @ BandOutcome::Unknown { .. } => Ok(Done::with(
            report.results(&out),
            3,
            "unknown",
            "coherent banding to this orientation is an open case",
        )),
    }
}

fn xer(k: Option<i64>, w: i64, trefoil_hopf: bool, verify: bool, oracle: &Oracle) -> Result<Done> {
    let input = json!({ "k": k, "w": w, "trefoil_hopf": trefoil_hopf, "verify": verify });
    let report = Report::new("xer-products", input);
    let mut fams = match (trefoil_hopf, k) {
        (true, _) => vec![trefoil_hopf_family([w])],
        (false, Some(k)) if k >= 1 => solve_2k_to_2k1(k, w),
        _ => return Err(TangleError::precondition("--k must be at least 1")),
    };
    verify_all(&mut fams, verify, oracle);
    Ok(family_done(report, &fams))
}

fn psi(k: i64, product: &str, verify: bool, oracle: &Oracle) -> Result<Done> {
    let target = parse_link(product)?;
    if !target.spec.link.is_knot() {
        return Err(TangleError::precondition(format!(
            "{product} is not a knot"
        )));
    }
    let f = target.fraction();
    let tried = if target.by_name {
        vec![f, f.neg()]
    } else {
        vec![f]
    };
    let mut rows = Vec::new();
    let mut fams = Vec::new();
    for zv in tried {
        let out = psi_move_solve(k, zv);
        let label = describe(&tanglekit_core::closure_of_rational(zv));
        match out {
            PsiOutcome::Solved { mut families } => {
                verify_all(&mut families, verify, oracle);
                rows.push(json!({ "product": label, "outcome": "solved" }));
                fams.extend(families);
            }
            PsiOutcome::NoSolution { reason } => {
                rows.push(json!({ "product": label, "outcome": "no solution", "detail": reason }));
            }
        }
    }
    let input = json!({ "k": k, "product": product, "verify": verify });
    let done = family_done(Report::new("psi-solve", input), &fams);
    let families = done.report.results.clone();
    Ok(Done {
        report: done
            .report
            .results(json!({ "products": rows, "families": families })),
        code: done.code,
    })
}

fn gamma(m: i64, n: i64, p: i64, q: i64) -> Result<Done> {
    let unknot = gamma_unknot_classify(GammaParams::new(m, n, p, q))?;
    let input = json!({ "m": m, "n": n, "p": p, "q": q });
    Ok(Done::ok(
        Report::new("gamma", input).results(json!({ "unknot": unknot })),
    ))
}

fn pathway(k: i64) -> Result<Done> {
    if k < 1 {
        return Err(TangleError::precondition("--k must be at least 1"));
    }
    Ok(Done::ok(
        Report::new("pathway", json!({ "k": k })).results(pathway_check(k)),
    ))
}

#[allow(clippy::too_many_arguments)]
fn verify_one(
    u: &str,
    p: TangleFraction,
    r: TangleFraction,
    substrate: &str,
    product: &str,
    coherent: bool,
    oracle: &Oracle,
) -> Result<Done> {
    let u = parse_expr(u)?;
    let mut fam = SolutionFamily::new("given", "U as given");
    fam.instances.push(Instance {
        u: u.clone(),
        p,
        r,
        substrate: parse_link(substrate)?.spec,
        product: parse_link(product)?.spec,
        coherent,
        params: Default::default(),
        verified: Verification::NotRequested,
    });
    let v = verify_instance(oracle, &fam.instances[0]);
    fam.instances[0].verified = v.clone();
    let input = json!({
        "u": u.to_string(),
        "p": p.to_string(),
        "r": r.to_string(),
        "substrate": substrate,
        "product": product,
        "coherent": coherent,
    });
    let report = Report::new("verify", input).families(std::slice::from_ref(&fam));
    Ok(match v {
        Verification::Verified => Done::ok(report),
        Verification::Failed(why) => Done::with(report, 1, "failed", why),
        other => Done::with(report, 3, "unverified", other.to_string()),
    })
}

fn corpus(dir: &std::path::Path, do_bless: bool, oracle: &Oracle) -> Result<Done> {
    let input = json!({ "corpus": dir.display().to_string(), "bless": do_bless });
    let report = Report::new("report", input);
    if do_bless {
        let names = bless(dir, oracle)?;
        return Ok(Done::ok(report.results(json!({ "written": names }))));
    }
    let results = report_golden(dir, oracle)?;
    let bad = results
        .iter()
        .filter(|r| r.status != FixtureStatus::Pass)
        .count();
    let report = report.results(&results);
    Ok(if bad == 0 {
        Done::ok(report)
    } else {
        Done::with(
            report,
            1,
            "drift",
            format!("{bad} fixtures differ from the regenerated tables"),
        )
    })
}

fn dispatch(cli: &Cli, oracle: &Oracle) -> Result<Done> {
    match &cli.command {
        Command::Eval { expr } => eval(expr),
        Command::Closure { expr, denominator } => closure(expr, *denominator, oracle),
        Command::Classify { expr } => classify(expr, oracle),
        Command::MoveEquiv { p, r, to } => move_equiv(*p, *r, *to),
        Command::Solve {
            product,
            substrate,
            k,
            tw,
            h_min,
            h_max,
            verify,
        } => solve(
            product,
            *substrate,
            *k,
            *tw,
            (*h_min, *h_max),
            *verify,
            oracle,
        ),
        Command::BandSolve {
            m,
            n,
            w,
            k,
            lk,
            verify,
        } => band(*m, *n, *w, *k, *lk, *verify, oracle),
        Command::XerProducts {
            k,
            w,
            trefoil_hopf,
            verify,
        } => xer(*k, *w, *trefoil_hopf, *verify, oracle),
        Command::PsiSolve { k, product, verify } => psi(*k, product, *verify, oracle),
        Command::Gamma { m, n, p, q } => gamma(*m, *n, *p, *q),
        Command::Pathway { k } => pathway(*k),
        Command::Verify {
            u,
            p,
            r,
            substrate,
            product,
            coherent,
        } => verify_one(u, *p, *r, substrate, product, *coherent, oracle),
        Command::Report { corpus: dir, bless } => corpus(dir, *bless, oracle),
    }
}

fn verb(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Closure { .. } => "closure",
        Command::Classify { .. } => "classify",
        Command::MoveEquiv { .. } => "move-equiv",
        Command::Solve { .. } => "solve",
        Command::BandSolve { .. } => "band-solve",
        Command::XerProducts { .. } => "xer-products",
        Command::PsiSolve { .. } => "psi-solve",
        Command::Gamma { .. } => "gamma",
        Command::Pathway { .. } => "pathway",
        Command::Verify { .. } => "verify",
        Command::Report { .. } => "report",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let oracle = cli.cap.map(Oracle::new).unwrap_or_default();
    let done = match dispatch(&cli, &oracle) {
        Ok(d) => d,
        Err(e) => Done::with(
            Report::new(verb(&cli.command), Value::Null)
                .results(json!({ "message": e.to_string() })),
            exit_code(&e),
            "error",
            e.reason(),
        ),
    };
    let out = match cli.format {
        Format::Json => done.report.to_json() + "\n",
        Format::Text => render::text(&done.report),
    };
    if done.code == 2 && cli.format == Format::Text {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(done.code)
}
