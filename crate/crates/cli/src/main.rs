mod report;

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use brauer_core::arith::prime_power;
use brauer_core::brauer::global::format_residue;
use brauer_core::brauer::random::random_class;
use brauer_core::brauer::{BrauerClassGlobal, TowerClass};
use brauer_core::constructions::{
    build, smallest_field, verify_certificate, ConstructionKind, ConstructionSpec,
    DivisionCertificate,
};
use brauer_core::groups::{
    abelian_obstruction_series, classify, FieldModel, GroupInput, ResidueKind,
};
use brauer_core::rng::Lcg64;
use brauer_core::{Error, FiniteField};

use report::{Format, RunReport, Table};

#[derive(Parser)]
#[command(
    name = "brauer",
    version,
    about = "Brauer classes over function fields, admissibility and division-algebra certificates"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Append wall-clock timing (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Input file (`-` for stdin).
    input: Option<PathBuf>,
    /// Inline input instead of a file.
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Ramified places of a class over F_q(t) with residues and invariants.
    Residue {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        field: String,
        /// Modulus n when the input lists only symbols.
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Index of a class over F_q(t) (default) or over a complete tower.
    Index {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, conflicts_with = "global")]
        tower: bool,
        #[arg(long)]
        global: bool,
    },
    /// Admissibility verdict for a finite group.
    Classify {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 0)]
        residue_char: u64,
        #[arg(long, default_value = "finite")]
        residue_kind: String,
        /// Order of the roots of unity assumed in the base field.
        #[arg(long, default_value_t = 1)]
        mu: u64,
        #[arg(long)]
        two_dim_local: bool,
    },
    /// Division algebra with maximal subfield of group C_l1 x C_l2 x C_l3 x C_l4.
    Construct {
        #[arg(long, default_value = "thm45")]
        kind: String,
        /// Four cyclic orders, comma separated.
        #[arg(long)]
        orders: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        verify: bool,
        /// Write the certificate to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Replays a certificate file.
    Verify {
        #[command(flatten)]
        src: Source,
    },
    /// Random classes of prime-power degree: witness places and reciprocity.
    Hasse {
        #[arg(long, default_value_t = 100)]
        random: u64,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_symbols: usize,
        #[arg(long, default_value_t = 2)]
        max_deg: usize,
    },
}

enum Failure {
    Core(Error),
    Input(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Assertion(_) => 5,
            Failure::Core(e) => match e {
                Error::Syntax { .. } => 2,
                Error::OrderConditionFailed(_) | Error::StepFailed { .. } => 4,
                Error::ZeroElement => 5,
                _ => 3,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Input(m) | Failure::Assertion(m) => m.clone(),
        }
    }
}

type Outcome = Result<RunReport, (Failure, Option<Box<RunReport>>)>;

fn read_source(src: &Source) -> Result<String, Failure> {
    if let Some(e) = &src.expr {
        return Ok(e.clone());
    }
    match &src.input {
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(s)
        }
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        None => Err(Failure::Input("no input: give a file or --expr".into())),
    }
}

fn parse_field(s: &str) -> Result<Arc<FiniteField>, Failure> {
    Ok(Arc::new(s.parse::<FiniteField>()?))
}

fn with_modulus(text: &str, modulus: Option<u64>) -> String {
    let text = text.trim();
    match modulus {
        Some(n) if text.is_empty() => n.to_string(),
        Some(n) => format!("{n}; {text}"),
        None => text.to_string(),
    }
}

fn global_class(
    src: &Source,
    field: &str,
    modulus: Option<u64>,
) -> Result<BrauerClassGlobal, Failure> {
    let k = parse_field(field)?;
    let text = with_modulus(&read_source(src)?, modulus);
    Ok(BrauerClassGlobal::parse(&text, &k)?)
}

fn cmd_residue(src: &Source, field: &str, modulus: Option<u64>) -> Result<RunReport, Failure> {
    let class = global_class(src, field, modulus)?;
    let k = class.field().clone();
    let mut r = RunReport::new("residue");
    r.input("field", &k);
    r.input("class", &class);
    let mut table = Table {
        headers: ["place", "residue", "invariant", "index"]
            .map(String::from)
            .to_vec(),
        rows: Vec::new(),
    };
    let mut sum = 0;
    for d in class.local_data()? {
        if d.invariant == 0 {
            continue;
        }
        sum = (sum + d.invariant) % class.n();
        table.rows.push(vec![
            d.place.to_string(),
            format_residue(&k, &d.residue, &d.place),
            d.invariant.to_string(),
            d.index.to_string(),
        ]);
    }
    r.table = Some(table);
    r.output("ramified_places", class.ramification_divisor()?.len());
    r.output("invariant_sum", sum);
    r.output("global_index", class.global_index()?);
    Ok(r)
}

fn cmd_index(
    src: &Source,
    field: Option<&str>,
    modulus: Option<u64>,
    tower: bool,
) -> Result<RunReport, Failure> {
    if tower {
        let mut text = with_modulus(&read_source(src)?, modulus);
        if let Some(f) = field {
            if !text.contains("base") {
                let (head, rest) = text.split_once(';').unwrap_or((text.as_str(), ""));
                text = format!("{head}; base={f};{rest}");
            }
        }
        let class = TowerClass::parse(&text)?;
        let res = class.tower_index();
        let mut r = RunReport::new("index --tower");
        r.input("field", class.field());
        r.input("class", &class);
        let nf = class.canonicalize();
        let k = class.field().base();
        r.output(
            "normal_form",
            format!("a1={} a2={} r={}", k.format(nf.a1), k.format(nf.a2), nf.r),
        );
        r.output("index", res.index);
        r.trace = res.trace.iter().map(|s| s.to_string()).collect();
        return Ok(r);
    }
    let field = field.ok_or_else(|| Failure::Input("--field is required for --global".into()))?;
    let class = global_class(src, field, modulus)?;
    let k = class.field().clone();
    let mut r = RunReport::new("index --global");
    r.input("field", &k);
    r.input("class", &class);
    let data = class.local_data()?;
    let index = class.global_index()?;
    r.output("index", index);
    if prime_power(class.n()).is_some() {
        r.output("witness", class.hasse_witness()?);
    }
    for d in data.iter().filter(|d| d.index > 1) {
        r.trace.push(format!(
            "{}: residue {} invariant {} index {}",
            d.place,
            format_residue(&k, &d.residue, &d.place),
            d.invariant,
            d.index
        ));
    }
    Ok(r)
}

fn cmd_classify(src: &Source, model: FieldModel) -> Result<RunReport, Failure> {
    let group = GroupInput::parse(&read_source(src)?)?;
    let mut r = RunReport::new("classify");
    match &group {
        GroupInput::Abelian(a) => r.input("group", format!("abelian {a}")),
        GroupInput::Table(g) => r.input("group", format!("table of order {}", g.order())),
    }
    r.input("residue_char", model.residue_char);
    r.input("residue_kind", model.residue_kind.name());
    r.input("mu", model.roots_of_unity_bound);
    r.input("two_dim_local", model.two_dim_local);
    let v = classify(&group, &model)?;
    r.output("verdict", v.name());
    for part in v.record().split(' ').skip(1) {
        if let Some((k, val)) = part.split_once('=') {
            r.output(k, val);
        }
    }
    r.output("summary", v.to_string().trim_end());
    if let GroupInput::Abelian(a) = &group {
        for p in brauer_core::arith::prime_divisors(a.order()) {
            let s = a.sylow(p);
            let line = match abelian_obstruction_series(&s)? {
                Some(series) => format!("sylow {p}: {series}"),
                None => format!("sylow {p}: P={s} has no series (rank {})", s.rank()),
            };
            r.trace.push(line);
        }
    }
    Ok(r)
}

fn parse_orders(s: &str) -> Result<[u64; 4], Failure> {
    let v: Result<Vec<u64>, _> = s.split(',').map(|x| x.trim().parse::<u64>()).collect();
    match v {
        Ok(v) if v.len() == 4 => Ok([v[0], v[1], v[2], v[3]]),
        _ => Err(Failure::Core(Error::Syntax {
            pos: 0,
            msg: format!("expected four comma separated orders, got {s:?}"),
        })),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    kind: &str,
    orders: &str,
    field: Option<&str>,
    lambda: Option<&str>,
    a: Option<&str>,
    verify: bool,
    certificate: Option<&PathBuf>,
) -> Outcome {
    let run = || -> Result<RunReport, Failure> {
        let kind: ConstructionKind = kind.parse()?;
        let orders = parse_orders(orders)?;
        let k = match field {
            Some(f) => parse_field(f)?,
            None => smallest_field(kind, orders)?,
        };
        let lambda = lambda.map(|s| k.parse_elem(s)).transpose()?;
        let a = a.map(|s| k.parse_elem(s)).transpose()?;
        let spec = ConstructionSpec::new(kind, orders, k.clone(), lambda, a)?;
        let c = build(&spec)?;
        let mut r = RunReport::new("construct");
        r.input("kind", kind.name());
        r.input("orders", orders.map(|o| o.to_string()).join(","));
        r.input("field", &k);
        r.input("lambda", k.format(spec.lambda));
        if kind == ConstructionKind::Thm42 {
            r.input("a", k.format(spec.a));
        }
        r.output("algebra", &c.algebra);
        r.output("degree", c.algebra.degree());
        r.output("relations", c.algebra.relations().join("\n"));
        let gens: Vec<String> = c
            .subfield
            .generators
            .iter()
            .map(|g| format!("{}^{} = {}", g.name, g.degree, g.radicand))
            .collect();
        r.output("subfield", gens.join("\n"));
        r.output("galois_group", &c.subfield.galois_group);
        r.output("structure_ok", c.check_structure()?);
        let text = c.certificate.to_text();
        if let Some(p) = certificate {
            std::fs::write(p, &text)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            r.output("certificate_file", p.display());
        } else {
            r.output("certificate", text.trim_end());
        }
        if verify {
            let v = verify_certificate(&c.certificate)?;
            r.output("index", v.index);
            r.output("division", v.division);
            r.trace = v.trace;
            if !v.division {
                return Err(Failure::Core(Error::OrderConditionFailed(format!(
                    "index {} below degree {}",
                    v.index, v.degree
                ))));
            }
        }
        Ok(r)
    };
    run().map_err(|f| (f, None))
}

fn cmd_verify(src: &Source) -> Result<RunReport, Failure> {
    let cert = DivisionCertificate::parse(&read_source(src)?)?;
    let v = verify_certificate(&cert)?;
    let mut r = RunReport::new("verify");
    r.input("kind", &cert.kind);
    r.input("field", &cert.field);
    r.input("degree", cert.degree());
    r.output("index", v.index);
    r.output("division", v.division);
    r.trace = v.trace;
    Ok(r)
}

#[allow(clippy::too_many_arguments)]
fn cmd_hasse(
    count: u64,
    q: Option<u64>,
    field: Option<&str>,
    n: u64,
    seed: u64,
    max_symbols: usize,
    max_deg: usize,
) -> Outcome {
    let setup = || -> Result<Arc<FiniteField>, Failure> {
        let k = match (field, q) {
            (Some(f), _) => parse_field(f)?,
            (None, Some(q)) => Arc::new(FiniteField::of_order(q)?),
            (None, None) => return Err(Failure::Input("give --q or --field".into())),
        };
        if n == 0 || (k.order() - 1) % n != 0 {
            return Err(Error::RootsOfUnityMissing { n, q: k.order() }.into());
        }
        if n > 1 && prime_power(n).is_none() {
            return Err(Error::NotPrimePower(n).into());
        }
        if max_symbols == 0 {
            return Err(Failure::Input("--max-symbols must be positive".into()));
        }
        Ok(k)
    };
    let k = setup().map_err(|f| (f, None))?;
    let mut r = RunReport::new("hasse");
    r.input("field", &k);
    r.input("n", n);
    r.input("random", count);
    r.input("seed", seed);
    r.input("max_symbols", max_symbols);
    r.input("max_deg", max_deg);
    let mut rng = Lcg64::new(seed);
    let (mut witnesses, mut reciprocity, mut agree) = (0u64, 0u64, 0u64);
    let mut problems = Vec::new();
    for i in 1..=count {
        let step = (|| -> Result<(), Error> {
            let class = random_class(&mut rng, &k, n, max_symbols, max_deg)?;
            let index = class.global_index()?;
            let w = class.hasse_witness()?;
            let local = if index == 1 {
                1
            } else {
                class.local_index(&w)?
            };
            if local == index {
                witnesses += 1;
            } else {
                problems.push(format!(
                    "class {i}: witness {w} has index {local} != {index}"
                ));
            }
            if class.reciprocity_check()? {
                reciprocity += 1;
            } else {
                problems.push(format!("class {i}: invariants do not sum to 0"));
            }
            let other = class.global_index_by_residue_order()?;
            if other == index {
                agree += 1;
            } else {
                problems.push(format!("class {i}: residue-order index {other} != {index}"));
            }
            r.trace
                .push(format!("{i}: {class} index={index} witness={w}"));
            Ok(())
        })();
        if let Err(e) = step {
            return Err((Failure::Core(e), Some(Box::new(r))));
        }
    }
    r.output("classes", count);
    r.output("witnesses_found", witnesses);
    r.output("reciprocity_ok", reciprocity);
    r.output("index_paths_agree", agree);
    if !problems.is_empty() {
        r.trace.extend(problems.iter().cloned());
        return Err((Failure::Assertion(problems.join("; ")), Some(Box::new(r))));
    }
    Ok(r)
}

fn model(
    residue_char: u64,
    kind: &str,
    mu: u64,
    two_dim_local: bool,
) -> Result<FieldModel, Failure> {
    let kind: ResidueKind = kind.parse()?;
    Ok(FieldModel::new(residue_char, kind, mu, two_dim_local)?)
}

fn dispatch(cmd: &Command) -> Outcome {
    let plain = |r: Result<RunReport, Failure>| r.map_err(|f| (f, None));
    match cmd {
        Command::Residue {
            src,
            field,
            modulus,
        } => plain(cmd_residue(src, field, *modulus)),
        Command::Index {
            src,
            field,
            modulus,
            tower,
            global: _,
        } => plain(cmd_index(src, field.as_deref(), *modulus, *tower)),
        Command::Classify {
            src,
            residue_char,
            residue_kind,
            mu,
            two_dim_local,
        } => plain(
            model(*residue_char, residue_kind, *mu, *two_dim_local)
                .and_then(|m| cmd_classify(src, m)),
        ),
        Command::Construct {
            kind,
            orders,
            field,
            lambda,
            a,
            verify,
            certificate,
        } => cmd_construct(
            kind,
            orders,
            field.as_deref(),
            lambda.as_deref(),
            a.as_deref(),
            *verify,
            certificate.as_ref(),
        ),
        Command::Verify { src } => plain(cmd_verify(src)),
        Command::Hasse {
            random,
            q,
            field,
            n,
            seed,
            max_symbols,
            max_deg,
        } => cmd_hasse(
            *random,
            *q,
            field.as_deref(),
            *n,
            *seed,
            *max_symbols,
            *max_deg,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(&cli.command)))
        .unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err((Failure::Assertion(format!("internal error: {msg}")), None))
        });
    let finish = |mut r: RunReport| {
        if cli.timing {
            r.timing = Some(start.elapsed());
        }
        print!("{}", r.render(cli.format));
    };
    match outcome {
        Ok(r) => {
            finish(r);
            ExitCode::SUCCESS
        }
        Err((f, partial)) => {
            if let Some(r) = partial {
                finish(*r);
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
