//! The `koszul` command-line tool.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code together with a [`Report`]. Exit codes: 0 when every checked claim
//! holds, 1 when a claim fails, 2 for bad input or an exceeded S-pair limit.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use koszul_core::binomial_edge::{build_context, EdgeRingContext};
use koszul_core::groebner::{
    colon_by_linear_form, colon_general, has_linear_quotients, ideal_equal, initial_ideal,
    is_quadratic_gb, kernel_of_monomial_map, set_spair_limit, IdealHandle,
};
use koszul_core::io::{
    build_filtration, format_filtration, format_ideal, parse_filtration_file, parse_graph,
    parse_ideal, parse_lattice, parse_order,
};
use koszul_core::koszul::{Filtration, LinearIdeal, QuotientRing, VerifyReport};
use koszul_core::lattice::{incomparable_products, poset_ideals, HibiRing};
use koszul_core::poly::{parse_polynomial, Polynomial};
use koszul_core::{
    DistributiveLattice, Error, Field, Graph, Monomial, MonomialOrder, Rational, Ring,
};

type Q = Rational;

/// Environment variable capping the S-pairs of a single Gröbner computation.
pub const GB_LIMIT_VAR: &str = "KOSZUL_GB_LIMIT";

#[derive(Parser, Debug)]
#[command(
    name = "koszul",
    version,
    about = "Gröbner bases, binomial edge ideals, Hibi rings and Koszul filtrations"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Re-validate combinatorial formulas with general Gröbner computations.
    #[arg(long, global = true)]
    certify: bool,
    /// Seed for randomized inputs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Reduced Gröbner basis of an ideal file.
    Gb {
        ideal: PathBuf,
        /// `revlex:a>b>c`, `lex:a>b>c` or `elim:{t,u}:then:<order>`; default revlex
        #[arg(long)]
        order: Option<String>,
    },
    /// The colon ideal I : f.
    Colon {
        ideal: PathBuf,
        /// A polynomial in the ring of the ideal file.
        poly: String,
        /// `revlex:a>b>c`, `lex:a>b>c` or `elim:{t,u}:then:<order>`; default revlex
        #[arg(long)]
        order: Option<String>,
    },
    /// Whether a labeled graph is closed; also searches for a closed relabeling.
    Closed {
        #[arg(required_unless_present = "random")]
        graph: Option<PathBuf>,
        /// Use a random graph on this many vertices instead of a file.
        #[arg(long, conflicts_with = "graph")]
        random: Option<usize>,
    },
    /// Binomial edge ideal of a graph.
    Bei {
        graph: PathBuf,
        #[command(flatten)]
        mode: BeiMode,
        /// Write the filtration to this file, with a companion ideal file.
        #[arg(long, requires = "filtration")]
        emit: Option<PathBuf>,
    },
    /// Verify a filtration file.
    KoszulVerify {
        filtration: PathBuf,
        /// Also report members whose removal keeps the family verified.
        #[arg(long)]
        minimality: bool,
    },
    /// Hibi ring of a distributive lattice given by a poset or lattice file.
    Hibi {
        lattice: PathBuf,
        #[command(flatten)]
        mode: HibiMode,
    },
    /// Toric ideal of a list of monomials.
    Toric {
        monomials: PathBuf,
        /// `revlex:a>b>c`, `lex:a>b>c` or `elim:{t,u}:then:<order>`; default revlex
        #[arg(long)]
        order: Option<String>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BeiMode {
    /// Closedness of the given labeling
    #[arg(long)]
    check_closed: bool,
    /// Whether J_G has a quadratic reduced basis for revlex with y > x
    #[arg(long)]
    quadratic_gb: bool,
    /// (J_G, x_n, ..., x_{i+1}) : x_i
    #[arg(long, value_name = "I")]
    colon: Option<usize>,
    /// Linear quotients of x_n, ..., x_1 modulo J_G
    #[arg(long)]
    linear_quotients: bool,
    /// Build and verify the Koszul filtration of a closed graph
    #[arg(long)]
    filtration: bool,
    /// Necessary condition for c-universal Koszulness
    #[arg(long)]
    c_universal: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct HibiMode {
    /// List the poset ideals of the lattice
    #[arg(long)]
    ideals: bool,
    /// Join-meet ideal and whether its Hibi-order basis is quadratic
    #[arg(long)]
    joinmeet: bool,
    /// Verify the family of all poset ideals as a Koszul filtration
    #[arg(long)]
    filtration: bool,
    /// Poset ideals I ⊂ J differing in one element, as comma-separated names or `0`.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    colon: Option<Vec<String>>,
    /// Verify the family of upsets as a Koszul filtration
    #[arg(long)]
    upsets: bool,
    /// Check a family file of poset ideals containing every cogenerated ideal
    #[arg(long, value_name = "FAMILY")]
    reduced: Option<PathBuf>,
}

/// Machine-readable outcome of one invocation.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    pub certificates: Vec<CertificateOut>,
    pub failures: Vec<FailureOut>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificateOut {
    pub claim: String,
    pub witness: String,
    /// Outcome of an independent re-check, when one was run.
    pub checked: Option<bool>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FailureOut {
    pub subject: Option<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Report,
    /// Usage or help text from argument parsing, printed verbatim.
    pub usage: Option<String>,
    pub json: bool,
}

impl Outcome {
    /// The text `main` prints to stdout.
    pub fn render(&self) -> String {
        if let Some(u) = &self.usage {
            return u.clone();
        }
        if self.json {
            let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
            s.push('\n');
            s
        } else {
            render_text(&self.report)
        }
    }
}

struct Ctx {
    certify: bool,
    seed: u64,
    report: Report,
}

impl Ctx {
    fn fail(&mut self, subject: Option<String>, reason: impl Into<String>) {
        self.report.failures.push(FailureOut {
            subject,
            reason: reason.into(),
        });
    }

    fn cert(&mut self, claim: String, witness: String, checked: Option<bool>) {
        if checked == Some(false) {
            self.fail(
                Some(claim.clone()),
                format!("re-check failed for {witness}"),
            );
        }
        self.report.certificates.push(CertificateOut {
            claim,
            witness,
            checked,
        });
    }

    fn input(&mut self, key: &str, value: impl Into<String>) {
        self.report.inputs.insert(key.into(), value.into());
    }
}

/// Failures that are mathematical statements rather than bad input.
#[derive(Debug)]
enum Fault {
    Input(String),
    Math(Option<String>, String),
}

impl From<Error> for Fault {
    fn from(e: Error) -> Self {
        match e {
            Error::NotClosed { .. } => Fault::Math(None, e.to_string()),
            _ => Fault::Input(e.to_string()),
        }
    }
}

type Res<T> = std::result::Result<T, Fault>;

/// Runs one invocation; `argv` includes the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let empty = Report {
        command: String::new(),
        inputs: BTreeMap::new(),
        result: Value::Null,
        certificates: vec![],
        failures: vec![],
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                report: empty,
                usage: Some(e.render().to_string()),
                json: false,
            };
        }
    };
    let mut ctx = Ctx {
        certify: cli.certify,
        seed: cli.seed.unwrap_or(0),
        report: Report {
            command: command_name(&cli.cmd).into(),
            ..empty
        },
    };
    if cli.certify {
        ctx.input("certify", "true");
    }
    let code = match configure_limit().and_then(|_| dispatch(&mut ctx, &cli.cmd)) {
        Ok(()) if ctx.report.failures.is_empty() => 0,
        Ok(()) => 1,
        Err(Fault::Math(subject, reason)) => {
            ctx.fail(subject, reason);
            1
        }
        Err(Fault::Input(reason)) => {
            ctx.fail(None, reason);
            2
        }
    };
    Outcome {
        code,
        report: ctx.report,
        usage: None,
        json: cli.json,
    }
}

fn configure_limit() -> Res<()> {
    match std::env::var(GB_LIMIT_VAR) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| Fault::Input(format!("{GB_LIMIT_VAR}: not a count: `{v}`")))?;
            set_spair_limit(Some(n));
        }
        Err(_) => set_spair_limit(None),
    }
    Ok(())
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Gb { .. } => "gb",
        Cmd::Colon { .. } => "colon",
        Cmd::Closed { .. } => "closed",
        Cmd::Bei { .. } => "bei",
        Cmd::KoszulVerify { .. } => "koszul-verify",
        Cmd::Hibi { .. } => "hibi",
        Cmd::Toric { .. } => "toric",
    }
}

fn dispatch(ctx: &mut Ctx, cmd: &Cmd) -> Res<()> {
    match cmd {
        Cmd::Gb { ideal, order } => gb(ctx, ideal, order.as_deref()),
        Cmd::Colon { ideal, poly, order } => colon(ctx, ideal, poly, order.as_deref()),
        Cmd::Closed { graph, random } => closed(ctx, graph.as_deref(), *random),
        Cmd::Bei { graph, mode, emit } => bei(ctx, graph, mode, emit.as_deref()),
        Cmd::KoszulVerify {
            filtration,
            minimality,
        } => koszul_verify(ctx, filtration, *minimality),
        Cmd::Hibi { lattice, mode } => hibi(ctx, lattice, mode),
        Cmd::Toric { monomials, order } => toric(ctx, monomials, order.as_deref()),
    }
}

fn read(ctx: &mut Ctx, key: &str, path: &Path) -> Res<String> {
    ctx.input(key, path.display().to_string());
    std::fs::read_to_string(path).map_err(|e| Fault::Input(format!("{}: {e}", path.display())))
}

/// Prefixes parse errors with the file they came from.
fn in_file<T>(path: &Path, r: koszul_core::Result<T>) -> Res<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => Fault::Input(format!("{}: {e}", path.display())),
        other => other.into(),
    })
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn basis_strings(ideal: &IdealHandle<Q>, ord: &MonomialOrder) -> Res<Vec<String>> {
    Ok(strings(ideal.groebner(ord)?.elements()))
}

fn order_for(ctx: &mut Ctx, ring: &Ring, spec: Option<&str>) -> Res<MonomialOrder> {
    match spec {
        Some(s) => {
            ctx.input("order", s);
            Ok(parse_order(ring, s)?)
        }
        None => Ok(ring.default_order()),
    }
}

fn gb(ctx: &mut Ctx, path: &Path, order: Option<&str>) -> Res<()> {
    let text = read(ctx, "ideal", path)?;
    let file = in_file(path, parse_ideal::<Q>(&text))?;
    let ord = order_for(ctx, &file.ring, order)?;
    let ideal = file.ideal()?;
    let gb = ideal.groebner(&ord)?;
    ctx.report.result = json!({
        "ring": file.ring.names(),
        "order": ord.to_spec(&file.ring),
        "basis": strings(gb.elements()),
        "max_degree": gb.max_degree(),
    });
    Ok(())
}

fn colon(ctx: &mut Ctx, path: &Path, poly: &str, order: Option<&str>) -> Res<()> {
    let text = read(ctx, "ideal", path)?;
    ctx.input("poly", poly);
    let file = in_file(path, parse_ideal::<Q>(&text))?;
    let ord = order_for(ctx, &file.ring, order)?;
    let ideal = file.ideal()?;
    let f: Polynomial<Q> = parse_polynomial(&file.ring, poly)?;
    let fast = f.is_linear_form() && ideal.is_homogeneous();
    let (c, method) = if fast {
        (colon_by_linear_form(&ideal, &f)?, "linear-form")
    } else {
        (colon_general(&ideal, &f)?, "intersection")
    };
    if fast && ctx.certify {
        let general = colon_general(&ideal, &f)?;
        let eq = ideal_equal(&c, &general, &ord)?;
        ctx.cert(
            format!("I : {f} via the revlex shortcut"),
            "I ∩ (f) divided by f".into(),
            Some(eq),
        );
    }
    ctx.report.result = json!({
        "order": ord.to_spec(&file.ring),
        "method": method,
        "basis": basis_strings(&c, &ord)?,
    });
    Ok(())
}

fn random_graph(n: usize, seed: u64) -> Res<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

fn load_graph(ctx: &mut Ctx, path: &Path) -> Res<Graph> {
    let text = read(ctx, "graph", path)?;
    in_file(path, parse_graph(&text))
}

fn closedness(ctx: &mut Ctx, g: &Graph) -> Res<Value> {
    let violation = g.closedness_violation();
    let relabel = g.find_closed_labeling()?;
    if let Some((i, j, k)) = violation {
        ctx.fail(
            Some(format!("triple ({i},{j},{k})")),
            format!("edges {{{i},{j}}} and {{{i},{k}}} present, {{{j},{k}}} absent"),
        );
    }
    if ctx.certify {
        let e: EdgeRingContext<Q> = build_context(g)?;
        let (closed, quadratic) = e.closed_iff_quadratic()?;
        let lq = e.has_linear_quotients_x()?;
        ctx.cert(
            format!("closed = {closed}"),
            format!("quadratic Gröbner basis = {quadratic}, linear quotients = {lq}"),
            Some(closed == quadratic && closed == lq),
        );
    }
    Ok(json!({
        "n": g.n(),
        "edges": g.edges(),
        "closed": violation.is_none(),
        "violation": violation.map(|(i, j, k)| vec![i, j, k]),
        "closed_relabeling": relabel,
    }))
}

fn closed(ctx: &mut Ctx, path: Option<&Path>, random: Option<usize>) -> Res<()> {
    let g = match (path, random) {
        (Some(p), _) => load_graph(ctx, p)?,
        (None, Some(n)) => {
            ctx.input("random", n.to_string());
            ctx.input("seed", ctx.seed.to_string());
            random_graph(n, ctx.seed)?
        }
        (None, None) => return Err(Fault::Input("no graph given".into())),
    };
    ctx.report.result = closedness(ctx, &g)?;
    Ok(())
}

fn member_text(m: &LinearIdeal<Q>) -> String {
    if m.is_zero() {
        "0".into()
    } else {
        format!("({})", strings(m.generators()).join(", "))
    }
}

/// Reports a verification run; with `certify` every certificate is re-checked
/// through general colon computations.
fn verification(ctx: &mut Ctx, f: &Filtration<Q>, rep: &VerifyReport<Q>) -> Res<Value> {
    let members = f.members();
    for c in &rep.certificates {
        let checked = if ctx.certify {
            Some(f.recheck(c)?)
        } else {
            None
        };
        ctx.cert(
            format!("member {} = {}", c.member, member_text(&members[c.member])),
            format!(
                "member {} + ({}), colon = member {}",
                c.smaller, c.form, c.colon
            ),
            checked,
        );
    }
    for fl in &rep.failures {
        ctx.fail(fl.member.map(|m| format!("member {m}")), fl.reason.clone());
    }
    Ok(json!({
        "verified": rep.ok,
        "members": members.iter().map(member_text).collect::<Vec<_>>(),
    }))
}

fn bei(ctx: &mut Ctx, path: &Path, mode: &BeiMode, emit: Option<&Path>) -> Res<()> {
    let g = load_graph(ctx, path)?;
    if mode.check_closed {
        ctx.report.result = closedness(ctx, &g)?;
        return Ok(());
    }
    let e: EdgeRingContext<Q> = build_context(&g)?;
    let order = e.revlex().to_spec(e.ring());
    if mode.quadratic_gb {
        let gb = e.ideal().groebner(e.revlex())?;
        let quadratic = gb.max_degree() <= 2;
        if !quadratic {
            ctx.fail(None, format!("basis has degree {}", gb.max_degree()));
        }
        ctx.report.result = json!({
            "order": order,
            "quadratic": quadratic,
            "basis": strings(gb.elements()),
        });
    } else if let Some(i) = mode.colon {
        ctx.input("colon", i.to_string());
        let xc = e.colon_x_sequence(i)?;
        if xc.certified == Some(false) {
            ctx.fail(
                Some(format!("i = {i}")),
                "colon differs from the neighbor formula",
            );
        }
        ctx.report.result = json!({
            "i": i,
            "order": order,
            "colon": basis_strings(&xc.computed, e.revlex())?,
            "formula": xc.formula.as_ref().map(|f| strings(f.generators())),
            "certified": xc.certified,
        });
    } else if mode.linear_quotients {
        let lq = e.has_linear_quotients_x()?;
        if !lq {
            ctx.fail(None, "some colon needs a nonlinear generator");
        }
        ctx.report.result = json!({ "linear_quotients": lq });
    } else if mode.filtration {
        let f = e.build_koszul_filtration()?;
        let rep = f.verify()?;
        let mut result = verification(ctx, &f, &rep)?;
        if ctx.certify {
            certify_colon_formula(ctx, &e)?;
        }
        if let Some(out) = emit {
            let files = emit_filtration(&e, &f, out)?;
            result["emitted"] = json!(files);
        }
        ctx.report.result = result;
    } else if mode.c_universal {
        let cu = e.c_universal_necessary()?;
        if let Some((i, j, k, b)) = &cu.witness {
            ctx.fail(
                Some(format!("J_G : x{i}")),
                format!(
                    "contains {b} (edges {}, {}, no {})",
                    edge(*i, *j),
                    edge(*i, *k),
                    edge(*j, *k)
                ),
            );
        } else if !cu.holds {
            ctx.fail(None, "a colon by a variable is not generated by variables");
        }
        if cu.full_check == Some(false) && cu.witness.is_none() {
            ctx.fail(None, "the subset family is not a Koszul filtration");
        }
        ctx.report.result = json!({
            "holds": cu.holds,
            "witness": cu.witness.as_ref().map(|(i, j, k, b)| json!({
                "i": i, "j": j, "k": k, "binomial": b.to_string(),
            })),
            "full_check": cu.full_check,
        });
    }
    Ok(())
}

fn edge(a: usize, b: usize) -> String {
    format!("{{{},{}}}", a.min(b), a.max(b))
}

/// The colon identity and the regularity claims behind the `y`-families.
fn certify_colon_formula(ctx: &mut Ctx, e: &EdgeRingContext<Q>) -> Res<()> {
    for k in 1..e.n() {
        let c = match e.casetwo_colon(k) {
            Ok(c) => c,
            Err(Error::Hypothesis(_)) => continue,
            Err(err) => return Err(err.into()),
        };
        ctx.cert(
            format!("k = {k}: colon by y{} (l = {}, i = {})", k + 1, c.ell, c.i),
            "elimination colon against the interval formula".into(),
            Some(c.equal),
        );
        for s in k + 2..=c.ell {
            let reg = e.casetwo_regular(k, s)?;
            ctx.cert(
                format!("k = {k}: y{s} regular"),
                "colon by y equals the ideal".into(),
                Some(reg),
            );
        }
    }
    Ok(())
}

fn emit_filtration(e: &EdgeRingContext<Q>, f: &Filtration<Q>, out: &Path) -> Res<Vec<String>> {
    let ideal_path = out.with_extension("ideal");
    if ideal_path == out {
        return Err(Fault::Input(format!(
            "{}: emit target must not end in .ideal",
            out.display()
        )));
    }
    let ideal_name = ideal_path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let write = |p: &Path, s: String| {
        std::fs::write(p, s).map_err(|err| Fault::Input(format!("{}: {err}", p.display())))
    };
    write(&ideal_path, format_ideal(e.ring(), e.ideal().generators()))?;
    write(out, format_filtration(f, &ideal_name))?;
    Ok(vec![
        out.display().to_string(),
        ideal_path.display().to_string(),
    ])
}

fn koszul_verify(ctx: &mut Ctx, path: &Path, minimality: bool) -> Res<()> {
    let text = read(ctx, "filtration", path)?;
    let file = in_file(path, parse_filtration_file(&text))?;
    let qpath = path
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .join(&file.quotient);
    let qtext = read(ctx, "quotient", &qpath)?;
    let ideal_file = in_file(&qpath, parse_ideal::<Q>(&qtext))?;
    let ord = match &file.order {
        Some(s) => in_file(path, parse_order(&ideal_file.ring, s))?,
        None => ideal_file.ring.default_order(),
    };
    let host = QuotientRing::new(ideal_file.ideal()?, ord)?;
    let f = in_file(path, build_filtration(&host, &file))?;
    let rep = f.verify()?;
    let mut result = verification(ctx, &f, &rep)?;
    result["order"] = json!(host.order().to_spec(host.ring()));
    if minimality && rep.ok {
        let m = f.minimality_probe()?;
        result["removable"] = json!(m.removable);
        result["fully_minimal"] = json!(m.fully_minimal);
    }
    ctx.report.result = result;
    Ok(())
}

fn parse_ideal_arg(l: &DistributiveLattice, s: &str) -> Res<koszul_core::PosetIdeal> {
    let fam = koszul_core::io::parse_family(l, s)?;
    match fam.as_slice() {
        [one] => Ok(*one),
        _ => Err(Fault::Input(format!("`{s}`: expected one poset ideal"))),
    }
}

fn hibi(ctx: &mut Ctx, path: &Path, mode: &HibiMode) -> Res<()> {
    let text = read(ctx, "lattice", path)?;
    let l = in_file(path, parse_lattice(&text))?;
    let h: HibiRing<Q> = HibiRing::new(&l)?;
    let order = h.host().order().to_spec(h.ring());
    if mode.ideals {
        let ideals: Vec<String> = poset_ideals(&l).iter().map(|&s| l.describe(s)).collect();
        ctx.report.result = json!({ "elements": l.names(), "poset_ideals": ideals });
    } else if mode.joinmeet {
        let gb = h.ideal().groebner(h.host().order())?;
        let ini = initial_ideal(h.ideal(), h.host().order())?;
        let expected = incomparable_products::<Q>(&l, h.ring())?;
        let eq = ideal_equal(&ini, &expected, h.host().order())?;
        ctx.cert(
            "initial ideal = incomparable products".into(),
            format!("reduced basis under {order}"),
            Some(eq),
        );
        ctx.report.result = json!({
            "order": order,
            "generators": strings(h.ideal().generators()),
            "basis": strings(gb.elements()),
            "quadratic": gb.max_degree() <= 2,
        });
    } else if mode.filtration || mode.upsets {
        let f = if mode.upsets {
            h.upset_filtration()?
        } else {
            h.koszul_filtration()?
        };
        let rep = f.verify()?;
        if mode.filtration && ctx.certify {
            certify_covers(ctx, &h)?;
        }
        let mut result = verification(ctx, &f, &rep)?;
        result["order"] = json!(order);
        ctx.report.result = result;
    } else if let Some(pair) = &mode.colon {
        ctx.input("colon", pair.join(" | "));
        let i = parse_ideal_arg(&l, &pair[0])?;
        let j = parse_ideal_arg(&l, &pair[1])?;
        let c = h.colon_cover(i, j, false)?;
        if !c.equal {
            ctx.fail(None, "colon differs from the cogenerated ideal");
        }
        if ctx.certify {
            let g = h.colon_cover(i, j, true)?;
            ctx.cert(
                format!("colon by {}", l.name(c.a)),
                "elimination colon".into(),
                Some(g.equal && ideal_equal(&g.colon, &c.colon, h.host().order())?),
            );
        }
        ctx.report.result = json!({
            "element": l.name(c.a),
            "cogenerated": l.describe(c.h),
            "colon": basis_strings(&c.colon, h.host().order())?,
            "equal": c.equal,
        });
    } else if let Some(fpath) = &mode.reduced {
        let ftext = read(ctx, "family", fpath)?;
        let fam = in_file(fpath, koszul_core::io::parse_family(&l, &ftext))?;
        let r = h.reduced_family_check(&fam)?;
        let missing: Vec<String> = r
            .missing_cogenerated
            .iter()
            .map(|&a| {
                if a == l.len() {
                    "L".to_string()
                } else {
                    l.describe(koszul_core::lattice::cogenerated_ideal(&l, a))
                }
            })
            .collect();
        for m in &missing {
            ctx.fail(Some(m.clone()), "required ideal missing from the family");
        }
        for s in &r.unreachable {
            ctx.fail(Some(l.describe(*s)), "no member one element smaller");
        }
        if r.verified == Some(false) {
            ctx.fail(None, "induced filtration does not verify");
        }
        ctx.report.result = json!({
            "holds": r.holds,
            "members": fam.len(),
            "missing": missing,
            "unreachable": r.unreachable.iter().map(|&s| l.describe(s)).collect::<Vec<_>>(),
            "verified": r.verified,
        });
    }
    Ok(())
}

/// Every covering pair of poset ideals, through elimination.
fn certify_covers(ctx: &mut Ctx, h: &HibiRing<Q>) -> Res<()> {
    let l = h.lattice();
    let ideals = poset_ideals(l);
    for &j in &ideals {
        for &i in &ideals {
            if i.is_subset(&j) && i.len() + 1 == j.len() {
                let c = h.colon_cover(i, j, true)?;
                ctx.cert(
                    format!("{} : {}", l.describe(i), l.name(c.a)),
                    format!("cogenerated ideal {}", l.describe(c.h)),
                    Some(c.equal),
                );
            }
        }
    }
    Ok(())
}

/// A prefix whose indexed names avoid those of `ring`.
fn fresh_prefix(ring: &Ring, m: usize) -> String {
    ["x", "z", "u", "w", "v"]
        .iter()
        .map(|p| p.to_string())
        .chain((0..).map(|k| format!("s{k}_")))
        .find(|p| (1..=m).all(|i| ring.index_of(&format!("{p}{i}")).is_err()))
        .expect("unbounded prefixes")
}

fn toric(ctx: &mut Ctx, path: &Path, order: Option<&str>) -> Res<()> {
    let text = read(ctx, "monomials", path)?;
    let file = in_file(path, parse_ideal::<Q>(&text))?;
    let mut images: Vec<Monomial> = Vec::new();
    for g in &file.generators {
        match g.terms() {
            [(m, c)] if *c == Q::from_i64(1) => images.push(m.clone()),
            _ => return Err(Fault::Input(format!("`{g}` is not a monic monomial"))),
        }
    }
    let source = Ring::indexed(&fresh_prefix(&file.ring, images.len()), images.len());
    let kernel: IdealHandle<Q> = kernel_of_monomial_map(&source, &file.ring, &images)?;
    let ord = order_for(ctx, &source, order)?;
    let gb = kernel.groebner(&ord)?;
    let seq: Vec<usize> = ord.priority().into_iter().rev().collect();
    let lq = has_linear_quotients(&kernel, &seq)?;
    ctx.report.result = json!({
        "variables": source.names(),
        "images": strings(&file.generators),
        "order": ord.to_spec(&source),
        "basis": strings(gb.elements()),
        "max_degree": gb.max_degree(),
        "quadratic": is_quadratic_gb(&kernel, &ord)?,
        "linear_quotients": lq,
    });
    Ok(())
}

/// Indented `key: value` rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = format!("command: {}\n", r.command);
    for (k, v) in &r.inputs {
        let _ = writeln!(out, "{k}: {v}");
    }
    if !r.result.is_null() {
        out.push_str("result:\n");
        render_value(&mut out, &r.result, 1);
    }
    if !r.certificates.is_empty() {
        let _ = writeln!(out, "certificates: {}", r.certificates.len());
        for c in &r.certificates {
            let tag = match c.checked {
                Some(true) => " [checked]",
                Some(false) => " [FAILED]",
                None => "",
            };
            let _ = writeln!(out, "  {}: {}{tag}", c.claim, c.witness);
        }
    }
    if !r.failures.is_empty() {
        let _ = writeln!(out, "failures: {}", r.failures.len());
        for f in &r.failures {
            match &f.subject {
                Some(s) => {
                    let _ = writeln!(out, "  {s}: {}", f.reason);
                }
                None => {
                    let _ = writeln!(out, "  {}", f.reason);
                }
            }
        }
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) && a.len() <= 8 => {
            let parts: Vec<String> = a.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_value(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render_value(out, x, depth + 1);
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", scalar(v).unwrap_or_default());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_print_smaller_end_first() {
        assert_eq!(edge(4, 2), "{2,4}");
        assert_eq!(edge(1, 3), "{1,3}");
    }

    #[test]
    fn fresh_prefix_skips_taken_names() {
        let ring = Ring::new(["x1", "x2", "z1"]).unwrap();
        assert_eq!(fresh_prefix(&ring, 2), "u");
        let ring = Ring::new(["t1", "t2"]).unwrap();
        assert_eq!(fresh_prefix(&ring, 10), "x");
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_graph(7, 3).unwrap();
        assert_eq!(a, random_graph(7, 3).unwrap());
        assert_eq!(a.n(), 7);
    }

    #[test]
    fn nested_values_render_indented() {
        let r = Report {
            command: "demo".into(),
            inputs: BTreeMap::from([("graph".to_string(), "g.graph".to_string())]),
            result: json!({"flag": true, "list": [1, 2], "rows": [{"a": null}]}),
            certificates: vec![CertificateOut {
                claim: "c".into(),
                witness: "w".into(),
                checked: Some(false),
            }],
            failures: vec![FailureOut {
                subject: None,
                reason: "bad".into(),
            }],
        };
        let text = render_text(&r);
        assert!(text.starts_with("command: demo\ngraph: g.graph\nresult:\n"));
        assert!(text.contains("  flag: true\n  list: [1, 2]\n  rows:\n    -\n      a: none\n"));
        assert!(text.contains("  c: w [FAILED]\n"));
        assert!(text.ends_with("failures: 1\n  bad\n"));
    }
}
