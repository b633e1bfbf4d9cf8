use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cyclo::CycloNumber;
use mtc::braid::{self, EigenvalueMultiset};
use mtc::center::{ops, verify};
use mtc::liedata::{self, root_name, SimpleLieType};
use mtc::sl2z::{self, MatrixRep};
use mtc::{data, fusion, reproduce, Error, Exec, FusionRing, ModularData, Report};
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "mtc", version, about = "Exact verification of modular data, fusion rules and Drinfeld centers")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run the full reproduction, one block per acceptance criterion.
    #[arg(long)]
    all: bool,
    /// Force the sequential code path.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args)]
struct DataArg {
    /// Modular data file (JSON).
    #[arg(long)]
    data: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check the modular data axioms.
    Verify(DataArg),
    /// Fusion rules by Verlinde.
    Fusion {
        #[command(flatten)]
        data: DataArg,
        /// Print N_X only.
        #[arg(long)]
        object: Option<String>,
        /// Multiplicities in X^{⊗ℓ} for ℓ = 1..=n (needs --object).
        #[arg(long)]
        power: Option<usize>,
    },
    /// Fusion subcategories, modular subcategories and primality.
    Subcats(DataArg),
    /// Finite image of SL(2,Z).
    Sl2z {
        #[command(flatten)]
        data: DataArg,
        /// Run the Z(E) relation suite.
        #[arg(long, conflicts_with_all = ["closure", "psl2"])]
        relations: bool,
        /// Enumerate the image (default).
        #[arg(long, conflicts_with = "psl2")]
        closure: bool,
        #[arg(long, default_value_t = 40_000)]
        cap: usize,
        /// Check the PSL(2, Z/N) presentation.
        #[arg(long, value_name = "N")]
        psl2: Option<u32>,
    },
    /// Squared braid eigenvalues on Hom(Z, X^{⊗3}) or per summand of X⊗X.
    BraidEigs {
        #[command(flatten)]
        data: DataArg,
        #[arg(long)]
        object: String,
        #[arg(long)]
        target: Option<String>,
    },
    /// The center of ½E6 from its half-braidings.
    CenterE6 {
        #[arg(long)]
        verify_all: bool,
        #[arg(long)]
        s_matrix: bool,
        #[arg(long)]
        twists: bool,
        #[arg(long)]
        fusion: bool,
        #[arg(long, value_name = "OBJECT")]
        braid_eigs: Option<String>,
    },
    /// Lie-theoretic exclusion lists.
    Exclude {
        #[arg(long)]
        report: bool,
    },
    /// Coset central charge and twist test.
    Coset {
        #[arg(long)]
        g: SimpleLieType,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        p: SimpleLieType,
        /// Dynkin index of the embedding.
        #[arg(long)]
        chi: Option<BigRational>,
        /// Highest weight of g (comma separated Dynkin labels).
        #[arg(long, value_delimiter = ',')]
        lambda: Option<Vec<u32>>,
        /// The weight of p it restricts to.
        #[arg(long, value_delimiter = ',')]
        mu: Option<Vec<u32>>,
    },
}

/// What a subcommand produces: free-form lines, their JSON form, and checks.
struct Output {
    lines: Vec<String>,
    data: Value,
    report: Report,
}

impl Output {
    fn report(report: Report) -> Output {
        Output { lines: vec![], data: Value::Null, report }
    }
}

fn load(arg: &DataArg) -> Result<ModularData, Error> {
    ModularData::load(&arg.data)
}

fn fusion_ring(md: &ModularData, exec: Exec) -> Result<FusionRing, Error> {
    FusionRing::verlinde(md, exec)
}

fn object(fr: &FusionRing, name: &str) -> Result<usize, Error> {
    fr.index(name).ok_or_else(|| Error::UnknownLabel(name.into()))
}

fn names(fr: &FusionRing, set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|&i| fr.labels[i].as_str()).collect::<Vec<_>>().join(","))
}

fn matrix_lines(m: &[Vec<u32>]) -> Vec<String> {
    m.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect()
}

fn verify_cmd(arg: &DataArg) -> Result<Output, Error> {
    let md = load(arg)?;
    let mut rep = md.validate();
    let ok = md.st_cubed_equals_s_squared()?;
    rep.check("moddata", "st-cubed-equals-s-squared", ok, || "(ST)^3 != S^2".into());
    let mut lines = vec![format!("rank {} conductor {}", md.rank(), md.conductor)];
    if let Ok(d) = md.total_quantum_order() {
        lines.push(format!("D = {d} ≈ {}", d.approx(8).re_decimal()));
    }
    if let Ok(c) = md.central_charge() {
        lines.push(format!("c = {c} mod 8"));
    }
    Ok(Output { lines, data: md.to_json(), report: rep })
}

fn fusion_cmd(arg: &DataArg, obj: Option<&str>, power: Option<usize>, exec: Exec) -> Result<Output, Error> {
    let md = load(arg)?;
    let fr = fusion_ring(&md, exec)?;
    let report = fr.invariants();
    match (obj, power) {
        (None, None) => {
            let mut lines = vec![];
            for i in 0..fr.rank() {
                for j in i..fr.rank() {
                    lines.push(format!("{} ⊗ {} = {}", fr.labels[i], fr.labels[j], fr.format_vector(&fr.product(i, j))));
                }
            }
            Ok(Output { lines, data: fr.to_json(), report })
        }
        (Some(x), None) => {
            let m = fr.matrix(object(&fr, x)?);
            let mut lines = vec![format!("N_{x} (labels {})", fr.labels.join(" "))];
            lines.extend(matrix_lines(&m));
            Ok(Output { lines, data: json!({ "labels": fr.labels, "object": x, "N": m }), report })
        }
        (Some(x), Some(n)) => {
            let tower = fr.tensor_power_tower(object(&fr, x)?, n);
            let lines = tower
                .iter()
                .enumerate()
                .map(|(l, v)| {
                    let terms: Vec<String> = v.iter().zip(&fr.labels).filter(|(m, _)| **m > 0).map(|(m, s)| if *m == 1 { s.clone() } else { format!("{m}{s}") }).collect();
                    format!("{x}^{} = {}", l + 1, terms.join("+"))
                })
                .collect();
            Ok(Output { lines, data: json!({ "labels": fr.labels, "object": x, "powers": tower }), report })
        }
        (None, Some(_)) => Err(Error::Data("--power needs --object".into())),
    }
}

fn subcats_cmd(arg: &DataArg, exec: Exec) -> Result<Output, Error> {
    let md = load(arg)?;
    let fr = fusion_ring(&md, exec)?;
    let subs = fr.tensor_subcategories();
    let modular = fusion::modular_subcategories(&md, &fr);
    let prime = fusion::is_prime(&md, &fr);
    let factor = fusion::product_factorization(&md, &fr);
    let mut lines = vec![format!("{} fusion subcategories", subs.len())];
    for s in &subs {
        let c = fusion::centralizer(&md, s);
        let d = fusion::subset_dim(&md, s);
        lines.push(format!("  {}  dim {} ≈ {}  centralizer {}", names(&fr, s), d, d.approx(8).re_decimal(), names(&fr, &c)));
    }
    let m: Vec<String> = modular.iter().map(|s| names(&fr, s)).collect();
    lines.push(format!("proper modular subcategories: {}", if m.is_empty() { "none".into() } else { m.join(" ") }));
    lines.push(format!("prime: {prime}"));
    let mut report = Report::new();
    for s in &subs {
        report.note("fusion", &format!("dim-product-{}", names(&fr, s)), fusion::dim_product_check(&md, s), "dim C · dim C' = dim Z");
    }
    report.note("fusion", "factorization", true, match &factor {
        Some(f) => format!("{} ⊠ {}", names(&fr, &f.first), names(&fr, &f.second)),
        None => "none".into(),
    });
    let data = json!({
        "labels": fr.labels,
        "subcategories": subs,
        "modular": modular,
        "prime": prime,
        "factorization": factor.map(|f| json!({ "first": f.first, "second": f.second, "map": f.map })),
    });
    Ok(Output { lines, data, report })
}

fn sl2z_cmd(arg: &DataArg, relations: bool, cap: usize, psl2: Option<u32>, exec: Exec) -> Result<Output, Error> {
    let md = load(arg)?;
    let rep = MatrixRep::from_modular_data(&md)?;
    if relations {
        return Ok(Output::report(sl2z::verify_e6_relation_suite(&rep)));
    }
    if let Some(n) = psl2 {
        return Ok(Output::report(sl2z::psl2_presentation_check(&rep, n)?));
    }
    let mut report = Report::new();
    match sl2z::closure_order(&rep, cap, exec) {
        Ok(n) => {
            report.note("sl2z", "closure", true, format!("|image| = {n}"));
            Ok(Output { lines: vec![], data: json!({ "order": n }), report })
        }
        Err(Error::CapExceeded(c)) => {
            report.push("sl2z", "closure", mtc::Status::Undetermined, format!("more than {c} elements"));
            Ok(Output::report(report))
        }
        Err(e) => Err(e),
    }
}

fn eig_json(e: &EigenvalueMultiset) -> Value {
    json!(e.values.iter().map(root_name).collect::<Vec<_>>())
}

fn braid_cmd(arg: &DataArg, x: &str, target: Option<&str>, exec: Exec) -> Result<Output, Error> {
    let md = load(arg)?;
    let fr = fusion_ring(&md, exec)?;
    let mut report = Report::new();
    let mut lines = vec![];
    let data = match target {
        Some(z) => {
            let e = braid::squared_braid_eigs(&md, &fr, x, z)?;
            lines.push(format!("Hom({z}, {x}^3): dim {}", e.len()));
            lines.push(format!("squared eigenvalues {e}"));
            report.note("braid", "projective-order", true, braid::projective_order(&e)?.to_string());
            json!({ "object": x, "target": z, "dim": e.len(), "eigenvalues": eig_json(&e) })
        }
        None => {
            let per = braid::squared_by_summand(&md, &fr, x)?;
            for (z, v, m) in &per {
                lines.push(format!("{z}: {} (multiplicity {m})", root_name(v)));
            }
            let e = EigenvalueMultiset::new(per.iter().map(|(_, v, _)| v.clone()).collect());
            let order = braid::projective_order(&e)?;
            let tw = braid::tw_irreducibility(&md, &fr, x, None)?;
            let adv = braid::density_advisory(per.len(), order, tw);
            report.note("braid", "projective-order", true, format!("{order} (squared eigenvalues)"));
            report.note("braid", "tw-irreducible", true, tw.to_string());
            report.note("braid", "advisory", true, adv.to_string());
            json!({ "object": x, "summands": per.iter().map(|(z, v, m)| json!({ "summand": z, "value": root_name(v), "multiplicity": m })).collect::<Vec<_>>() })
        }
    };
    Ok(Output { lines, data, report })
}

fn cyclo_rows(m: &mtc::Mat<CycloNumber>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect()).collect()
}

fn center_cmd(verify_all: bool, s: bool, t: bool, f: bool, braid_of: Option<&str>, exec: Exec) -> Result<Output, Error> {
    let cat = data::half_e6();
    let md = data::z_e6();
    let labels: Vec<String> = cat.objects.iter().map(|o| o.name.clone()).collect();
    let none = !(s || t || f || braid_of.is_some());
    let mut out = Output { lines: vec![], data: json!({}), report: Report::new() };
    if verify_all || none {
        out.report.extend(verify::verify_all(&cat, exec));
    }
    if s {
        let m = ops::s_matrix(&cat, exec)?;
        let conv = if m == md.s { "direct" } else if m == md.s.conj() { "conjugate" } else { "none" };
        out.report.note("center", "s-matrix-matches-bundled", conv != "none", format!("convention: {conv}"));
        out.lines.push(format!("S̃ (labels {})", labels.join(" ")));
        let rows = cyclo_rows(&m);
        out.lines.extend(rows.iter().map(|r| r.join("  ")));
        out.data["s"] = json!(rows);
    }
    if t {
        let tw = ops::twists(&cat)?;
        out.report.check("center", "twists-match-bundled", tw == md.t, || "twists differ".into());
        for (l, v) in labels.iter().zip(&tw) {
            out.lines.push(format!("θ_{l} = {}", root_name(v)));
        }
        out.data["twists"] = json!(tw.iter().map(root_name).collect::<Vec<_>>());
    }
    if f {
        let fr = ops::derived_fusion(&cat, exec)?;
        let same = fr == FusionRing::verlinde(&md, exec)?;
        out.report.check("center", "fusion-matches-verlinde", same, || "derived fusion differs".into());
        for i in 0..fr.rank() {
            for j in i..fr.rank() {
                out.lines.push(format!("{} ⊗ {} = {}", fr.labels[i], fr.labels[j], fr.format_vector(&fr.product(i, j))));
            }
        }
        out.data["fusion"] = fr.to_json();
    }
    if let Some(x) = braid_of {
        let eigs = ops::braiding_eigenvalues(&cat, x)?;
        let mut all = vec![];
        for e in &eigs {
            out.lines.push(format!("c_{{{x},{x}}} on {}: {} (multiplicity {})", e.summand, root_name(&e.value), e.multiplicity));
            all.extend(std::iter::repeat_n(e.value.clone(), e.multiplicity));
        }
        let m = EigenvalueMultiset::new(all.clone());
        let order = braid::projective_order(&m)?;
        let fr = FusionRing::verlinde(&md, exec)?;
        let tw = braid::tw_irreducibility(&md, &fr, x, Some(&all))?;
        let adv = braid::density_advisory(eigs.len(), order, tw);
        out.report.note("braid", "projective-order", true, order.to_string());
        out.report.note("braid", "tw-irreducible", true, tw.to_string());
        out.report.note("braid", "advisory", true, adv.to_string());
        out.data["braid"] = json!({
            "object": x,
            "eigenvalues": eigs.iter().map(|e| json!({ "summand": e.summand, "value": root_name(&e.value), "multiplicity": e.multiplicity })).collect::<Vec<_>>(),
            "projective_order": order,
        });
    }
    Ok(out)
}

fn exclude_cmd() -> Output {
    let list = |v: &[(SimpleLieType, u64)]| v.iter().map(|(g, k)| liedata::pair_name(g, *k)).collect::<Vec<_>>();
    let c24 = liedata::solve_c24();
    let rank12: Vec<(SimpleLieType, u64)> = liedata::rank_solutions(12, 12);
    let lines = vec![
        format!("c = 24 (printed): {}", list(&liedata::printed_c24()).join(", ")),
        format!("c = 24 (computed): {}", list(&c24).join(", ")),
        format!("rank 12 self-dual (printed): {}", list(&liedata::printed_rank12()).join(", ")),
        format!("rank 12 (computed): {}", list(&rank12).join(", ")),
    ];
    let data = json!({
        "c24_printed": list(&liedata::printed_c24()),
        "c24_computed": list(&c24),
        "rank12_printed": list(&liedata::printed_rank12()),
        "rank12_computed": list(&rank12),
    });
    Output { lines, data, report: liedata::exclusion_report() }
}

fn coset_cmd(g: &SimpleLieType, k: u64, p: &SimpleLieType, chi: Option<&BigRational>, lambda: Option<Vec<u32>>, mu: Option<Vec<u32>>) -> Result<Output, Error> {
    let weights = match (lambda, mu) {
        (Some(l), Some(m)) => Some((l, m)),
        (None, None) if g.to_string() == "D35" && p.to_string() == "A7" => Some(liedata::d35_a7_branching()),
        (None, None) => None,
        _ => return Err(Error::Data("--lambda and --mu go together".into())),
    };
    let report = liedata::coset_report(g, k, p, chi, weights.as_ref().map(|(l, m)| (l.as_slice(), m.as_slice())));
    let lines = vec![format!("c({g}_{k}) = {}", liedata::wzw_central_charge(g, k))];
    Ok(Output { lines, data: Value::Null, report })
}

fn run_all(exec: Exec, as_json: bool) -> ExitCode {
    let crit = reproduce::all(exec);
    let ok = crit.iter().all(|c| c.passed());
    let mut text = String::new();
    if as_json {
        let v: Vec<Value> = crit.iter().map(|c| json!({ "criterion": c.number, "title": c.title, "passed": c.passed(), "report": c.report.to_json() })).collect();
        text = serde_json::to_string_pretty(&v).unwrap() + "\n";
    } else {
        for c in &crit {
            let _ = write!(text, "{c}\n{}", c.report);
        }
        let failed: Vec<String> = crit.iter().filter(|c| !c.passed()).map(|c| c.number.to_string()).collect();
        let _ = writeln!(text, "CRITERIA pass={} fail={} [{}]", crit.len() - failed.len(), failed.len(), failed.join(","));
    }
    emit(&text);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Write to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn dispatch(cmd: &Command, exec: Exec) -> Result<Output, Error> {
    match cmd {
        Command::Verify(d) => verify_cmd(d),
        Command::Fusion { data, object, power } => fusion_cmd(data, object.as_deref(), *power, exec),
        Command::Subcats(d) => subcats_cmd(d, exec),
        Command::Sl2z { data, relations, closure: _, cap, psl2 } => sl2z_cmd(data, *relations, *cap, *psl2, exec),
        Command::BraidEigs { data, object, target } => braid_cmd(data, object, target.as_deref(), exec),
        Command::CenterE6 { verify_all, s_matrix, twists, fusion, braid_eigs } => center_cmd(*verify_all, *s_matrix, *twists, *fusion, braid_eigs.as_deref(), exec),
        Command::Exclude { report: _ } => Ok(exclude_cmd()),
        Command::Coset { g, k, p, chi, lambda, mu } => coset_cmd(g, *k, p, chi.as_ref(), lambda.clone(), mu.clone()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    if cli.all {
        return run_all(exec, cli.json);
    }
    let Some(cmd) = &cli.command else {
        eprintln!("error: a subcommand or --all is required (see --help)");
        return ExitCode::from(2);
    };
    let out = match dispatch(cmd, exec) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut text = String::new();
    if cli.json {
        let v = json!({ "data": out.data, "report": out.report.to_json() });
        text = serde_json::to_string_pretty(&v).unwrap() + "\n";
    } else {
        for l in &out.lines {
            let _ = writeln!(text, "{l}");
        }
        let _ = write!(text, "{}", out.report);
    }
    emit(&text);
    if out.report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
