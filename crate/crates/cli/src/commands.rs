use clap::{Parser, Subcommand, ValueEnum};
use nalgebra::DMatrix;
use serde_json::{json, Value};

use sbl::blob::{check_blob_relations, compose_blob, enumerate_blob, loop_weight, BlobDiagram};
use sbl::brauer::{check_relations, compose, GeneratorKind, GeneratorSet};
use sbl::cellrep::{
    det_table, eval_at, gram_det, gram_matrix, rank, spin_hamiltonian, verify_chebyshev,
    verify_det_table, verify_printed_matrices, verify_ranks, verify_spin_tl, CellModule, Lambda,
};
use sbl::chains::{
    enumerate_li_chain, li_chain_decompose, verify_chain_basis_theorem, verify_module_closure,
};
use sbl::iso::{phi, psi, psi_inv, verify_phi_functor, verify_psi_bijection, verify_theta};
use sbl::pairpart::{enumerate, Filter, Limits};
use sbl::report::Report;
use sbl::suite::property_suite;
use sbl::{Error, PairPartition, Rational};

use crate::output::{Format, Output};

#[derive(Parser, Debug)]
#[command(
    name = "sbl",
    version,
    about = "Exact diagram calculus for Brauer, blob and short Brauer categories"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    csv: bool,
    /// Cap on the size of enumerated sets and closures.
    #[arg(long, global = true)]
    max_diagrams: Option<usize>,
    /// Cap on the number of points in exhaustive enumerations
    /// (overrides SBL_MAX_POINTS).
    #[arg(long, global = true)]
    max_points: Option<usize>,
    /// Abort with exit code 3 after this many seconds.
    #[arg(long, global = true)]
    pub timeout_s: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else if let Command::Gram { out: Some(f), .. } = &self.command {
            *f
        } else {
            self.format
        }
    }

    fn limits(&self) -> Limits {
        let mut l = Limits::from_env();
        if let Some(p) = self.max_points {
            l.max_points = p;
        }
        if let Some(d) = self.max_diagrams {
            l.max_diagrams = d;
        }
        l
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SetKind {
    #[value(name = "J")]
    All,
    Noncrossing,
    Lichain,
    Blob,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Theta,
    Phi,
    Psi,
    Relations,
    ChainBasis,
    ModuleClosure,
    Printed,
    Dets,
    Chebyshev,
    Ranks,
    Spin,
    Properties,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IsoOp {
    Psi,
    PsiInv,
    Phi,
    Chains,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or count a diagram set.
    Enumerate {
        #[arg(long, value_enum, default_value = "J")]
        set: SetKind,
        /// Top vertices.
        #[arg(long)]
        m: usize,
        /// Bottom vertices.
        #[arg(long)]
        n: usize,
        /// Chain count for `--set lichain`.
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Print only the size.
        #[arg(long)]
        count: bool,
    },
    /// Compose two diagram literals, e.g. "J(3,5): (4',2)(3,5')(1,3')(1',2')".
    Compose {
        a: String,
        b: String,
        /// Evaluate the loop weight at this loop parameter.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<Rational>,
        /// Blobbed loop parameter for blob diagrams.
        #[arg(long, allow_hyphen_values = true)]
        deltap: Option<Rational>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        /// Smaller sizes for `verify all` and `verify properties`.
        #[arg(long)]
        small: bool,
    },
    /// Gram matrix of a cell module.
    Gram {
        #[arg(long)]
        n: usize,
        /// Cell label such as `4+`, `2-` or `1`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Lambda,
        /// Also report the rank at this value of the loop parameter.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<Rational>,
        /// Same as `--format`.
        #[arg(long, value_enum)]
        out: Option<Format>,
    },
    /// Check the tabulated determinant factorizations.
    Dets {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Spin-chain representation of the Temperley-Lieb generators.
    Spin {
        #[arg(long)]
        n: usize,
        /// Print the spectrum of H at this real q.
        #[arg(long)]
        eval_q: Option<f64>,
        #[arg(long, default_value_t = sbl::cellrep::DEFAULT_MAX_SITES)]
        max_sites: usize,
    },
    /// The blob/chain isomorphism on a single diagram.
    Iso {
        #[arg(value_enum)]
        op: IsoOp,
        literal: String,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
}

pub enum Failure {
    Usage(String),
    Limit(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Limit(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res = std::result::Result<Output, Failure>;

pub fn run(cli: &Cli) -> Res {
    let limits = cli.limits();
    match &cli.command {
        Command::Enumerate {
            set,
            m,
            n,
            i,
            count,
        } => enumerate_cmd(*set, *m, *n, *i, *count, &limits),
        Command::Compose {
            a,
            b,
            delta,
            deltap,
        } => compose_cmd(a, b, delta.as_ref(), deltap.as_ref()),
        Command::Verify {
            target,
            n,
            m,
            q,
            i,
            small,
        } => verify_cmd(
            *target,
            Sizes {
                n: *n,
                m: *m,
                q: *q,
                i: *i,
            },
            *small,
            &limits,
        ),
        Command::Gram {
            n, lambda, delta, ..
        } => gram_cmd(*n, *lambda, delta.as_ref(), &limits),
        Command::Dets { max_n } => dets_cmd(*max_n, &limits),
        Command::Spin {
            n,
            eval_q,
            max_sites,
        } => spin_cmd(*n, *eval_q, *max_sites),
        Command::Iso { op, literal, i } => iso_cmd(*op, literal, *i),
    }
}

fn enumerate_cmd(set: SetKind, m: usize, n: usize, i: usize, count: bool, limits: &Limits) -> Res {
    let items: Vec<String> = match set {
        SetKind::All => enumerate(m, n, Filter::All, limits)?
            .iter()
            .map(|p| p.to_string())
            .collect(),
        SetKind::Noncrossing => enumerate(m, n, Filter::NonCrossing, limits)?
            .iter()
            .map(|p| p.to_string())
            .collect(),
        SetKind::Lichain => enumerate_li_chain(m, n, i, limits)?
            .iter()
            .map(|p| p.to_string())
            .collect(),
        SetKind::Blob => enumerate_blob(m, n, limits)?
            .iter()
            .map(|b| b.to_string())
            .collect(),
    };
    if count {
        let mut out = Output::new(&["count"], json!({ "count": items.len() }));
        out.row(vec![items.len().to_string()]);
        out.table = Some((Vec::new(), out.rows.clone()));
        return Ok(out);
    }
    let mut out = Output::new(
        &["#", "diagram"],
        json!({ "count": items.len(), "diagrams": items }),
    );
    for (k, d) in items.iter().enumerate() {
        out.row(vec![(k + 1).to_string(), d.clone()]);
    }
    Ok(out)
}

fn weight_at(
    plain: usize,
    blobbed: usize,
    delta: Option<&Rational>,
    deltap: Option<&Rational>,
) -> Option<String> {
    let d = delta?;
    let dp = if blobbed > 0 { deltap? } else { d };
    Some(loop_weight(plain, blobbed).eval(d, dp).to_string())
}

fn compose_cmd(a: &str, b: &str, delta: Option<&Rational>, deltap: Option<&Rational>) -> Res {
    let blob = a.trim_start().starts_with("bB") || b.trim_start().starts_with("bB");
    let (result, plain, blobbed) = if blob {
        let x: BlobDiagram = a.parse()?;
        let y: BlobDiagram = b.parse()?;
        let (r, p, q) = compose_blob(&x, &y)?;
        (r.to_string(), p, q)
    } else {
        let x: PairPartition = a.parse()?;
        let y: PairPartition = b.parse()?;
        let (r, loops) = compose(&x, &y)?;
        (r.to_string(), loops, 0)
    };
    let weight = loop_weight(plain, blobbed).to_string();
    let value = weight_at(plain, blobbed, delta, deltap);
    let mut out = Output::new(
        &["diagram", "loops", "blobbed_loops", "weight"],
        json!({ "diagram": result, "loops": plain, "blobbed_loops": blobbed, "weight": weight, "value": value }),
    );
    out.row(vec![result, plain.to_string(), blobbed.to_string(), weight]);
    if let Some(v) = value {
        out.notes.push(format!("weight value = {v}"));
    }
    Ok(out)
}

#[derive(Clone, Copy)]
struct Sizes {
    n: Option<usize>,
    m: Option<usize>,
    q: Option<usize>,
    i: Option<usize>,
}

fn relations(n: usize) -> sbl::Result<Vec<Report>> {
    let mut out = Vec::new();
    for kind in [
        GeneratorKind::Brauer,
        GeneratorKind::TemperleyLieb,
        GeneratorKind::Coxeter { l: 2, m: 1 },
    ] {
        let mut r = check_relations(&GeneratorSet::new(kind, n))?;
        r.name = format!("{kind:?} relations n={n}");
        out.push(r);
    }
    out.push(check_blob_relations(n)?);
    Ok(out)
}

fn reports_for(target: Target, s: Sizes, small: bool, l: &Limits) -> sbl::Result<Vec<Report>> {
    let n = s.n.unwrap_or(3);
    Ok(match target {
        Target::Theta => vec![verify_theta(n, l)?],
        Target::Phi => vec![verify_phi_functor(
            s.m.unwrap_or(n),
            n,
            s.q.unwrap_or(n),
            l,
        )?],
        Target::Psi => vec![verify_psi_bijection(s.m.unwrap_or(n), n, l)?],
        Target::Relations => relations(n)?,
        Target::ChainBasis => vec![verify_chain_basis_theorem(
            s.i.unwrap_or(1),
            s.m.unwrap_or(n),
            l,
        )?],
        Target::ModuleClosure => vec![verify_module_closure(
            s.i.unwrap_or(1),
            s.m.unwrap_or(n),
            n,
            l,
        )?],
        Target::Printed => vec![verify_printed_matrices(l)?],
        Target::Dets => vec![verify_det_table(s.n.unwrap_or(6), l)?],
        Target::Chebyshev => vec![verify_chebyshev(s.n.unwrap_or(10), l)?],
        Target::Ranks => vec![verify_ranks(l)?],
        Target::Spin => vec![verify_spin_tl(
            s.n.unwrap_or(5),
            sbl::cellrep::DEFAULT_MAX_SITES,
        )?],
        Target::Properties => vec![property_suite(small, l)?],
        Target::All => {
            let top = if small { 3 } else { 4 };
            let mut v = Vec::new();
            for n in 1..=top {
                v.push(verify_theta(n, l)?);
                v.push(verify_psi_bijection(n, n, l)?);
            }
            for m in 0..=3usize {
                for n in (0..=3usize).filter(|n| (m + n) % 2 == 0) {
                    for q in (0..=3usize).filter(|q| (n + q) % 2 == 0) {
                        v.push(verify_phi_functor(m, n, q, l)?);
                    }
                }
            }
            for n in 2..=top {
                v.extend(relations(n)?);
            }
            for m in 2..=top + 1 {
                v.push(verify_chain_basis_theorem(1, m, l)?);
            }
            for m in 3..=top {
                v.push(verify_chain_basis_theorem(2, m, l)?);
            }
            v.push(verify_printed_matrices(l)?);
            v.push(verify_det_table(if small { 5 } else { 6 }, l)?);
            v.push(verify_chebyshev(if small { 8 } else { 10 }, l)?);
            v.push(verify_ranks(l)?);
            for n in 2..=top + 1 {
                v.push(verify_spin_tl(n, sbl::cellrep::DEFAULT_MAX_SITES)?);
            }
            v.push(property_suite(small, l)?);
            v
        }
    })
}

fn verify_cmd(target: Target, s: Sizes, small: bool, l: &Limits) -> Res {
    let reports = reports_for(target, s, small, l)?;
    let mut out = Output::new(&["suite", "checked", "failures", "result"], json!(reports));
    for r in &reports {
        let result = if r.passed() { "PASS" } else { "FAIL" };
        out.row(vec![
            r.name.clone(),
            r.checked.to_string(),
            r.failures.len().to_string(),
            result.into(),
        ]);
        if !r.passed() {
            out.ok = false;
            out.failures
                .extend(r.failures.iter().map(|f| format!("{}: {f}", r.name)));
        }
        if target != Target::All {
            for c in &r.checks {
                out.notes.push(format!(
                    "  [{}] {}",
                    if c.pass { "ok" } else { "FAIL" },
                    c.label
                ));
            }
            for (k, v) in &r.sizes {
                out.notes.push(format!("  {k} = {v}"));
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    out.notes
        .push(format!("{passed}/{} suites pass", reports.len()));
    Ok(out)
}

fn gram_cmd(n: usize, lambda: Lambda, delta: Option<&Rational>, l: &Limits) -> Res {
    let module = CellModule::new(n, lambda, l)?;
    let g = gram_matrix(&module)?;
    let det = gram_det(&g)?;
    let at = delta.map(|d| (d.to_string(), rank(&g.eval_at(d))));
    let cells: Vec<Vec<String>> = (0..g.rows())
        .map(|i| g.row(i).iter().map(|p| p.to_string()).collect())
        .collect();
    let basis: Vec<String> = module.basis.iter().map(|h| h.to_string()).collect();
    let json = json!({
        "n": n,
        "lambda": lambda.to_string(),
        "dim": module.dim(),
        "basis": basis,
        "matrix": cells,
        "det": det.to_string(),
        "rank": at.as_ref().map(|(d, r)| json!({ "delta": d, "rank": r })),
    });
    let headers: Vec<String> = (1..=g.rows()).map(|k| format!("b{k}")).collect();
    let mut out = Output::new(&[], json);
    out.headers = headers;
    out.rows = cells;
    for (k, b) in basis.iter().enumerate() {
        out.notes.push(format!("b{} = {b}", k + 1));
    }
    out.notes.push(format!("det = {det}"));
    if let Some((d, r)) = at {
        out.notes.push(format!("rank at x={d} = {r}"));
    }
    Ok(out)
}

fn dets_cmd(max_n: usize, l: &Limits) -> Res {
    let rows = det_table(max_n, l)?;
    let mut out = Output::new(&["n", "m", "sign", "dim", "det", "match"], json!(rows));
    let mut table = Vec::new();
    for r in &rows {
        table.push(vec![
            r.name.clone(),
            r.dim.to_string(),
            r.factored.clone(),
            r.matches.to_string(),
        ]);
        let lambda: Lambda = r.lambda.parse()?;
        let sign = match lambda.sign {
            sbl::cellrep::Sign::Plus => "+",
            sbl::cellrep::Sign::Minus => "-",
            sbl::cellrep::Sign::None => "",
        };
        out.row(vec![
            r.n.to_string(),
            lambda.m.to_string(),
            sign.into(),
            r.dim.to_string(),
            r.computed.clone(),
            r.matches.to_string(),
        ]);
        if !r.matches {
            out.ok = false;
            out.failures.push(format!(
                "{}: computed {} expected {}",
                r.name, r.computed, r.expected
            ));
        }
    }
    let matched = rows.iter().filter(|r| r.matches).count();
    out.table = Some((
        ["det", "dim", "factorization", "match"]
            .map(String::from)
            .to_vec(),
        table,
    ));
    out.notes.push(format!(
        "{matched}/{} determinants match the expanded factorizations",
        rows.len()
    ));
    Ok(out)
}

fn spin_cmd(n: usize, eval_q: Option<f64>, max_sites: usize) -> Res {
    let report = verify_spin_tl(n, max_sites)?;
    let h = spin_hamiltonian(n, max_sites)?;
    let spectrum = eval_q.map(|q| {
        let dim = h.rows();
        let m = DMatrix::from_row_slice(dim, dim, &eval_at(&h, q));
        let mut vals: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        vals
    });
    let json = json!({
        "n": n,
        "dim": h.rows(),
        "trace": h.trace().to_string(),
        "relations": report,
        "eval_q": eval_q,
        "spectrum": spectrum,
    });
    let mut out = Output::new(&["relation", "result"], json);
    for c in &report.checks {
        out.row(vec![
            c.label.clone(),
            if c.pass { "ok" } else { "FAIL" }.into(),
        ]);
    }
    out.ok = report.passed();
    out.failures = report.failures.clone();
    out.notes
        .push(format!("dim = {}, trace H = {}", h.rows(), h.trace()));
    if let (Some(q), Some(vals)) = (eval_q, &spectrum) {
        let shown: Vec<String> = vals
            .iter()
            .map(|v| format!("{:.6}", if v.abs() < 1e-9 { 0.0 } else { *v }))
            .collect();
        out.notes
            .push(format!("spectrum of H at q={q}: {}", shown.join(" ")));
    }
    Ok(out)
}

fn iso_cmd(op: IsoOp, literal: &str, i: usize) -> Res {
    let (kind, result): (&str, Value) = match op {
        IsoOp::Psi => ("psi", json!(psi(&literal.parse()?)?.to_string())),
        IsoOp::PsiInv => ("psi-inv", json!(psi_inv(&literal.parse()?)?.to_string())),
        IsoOp::Phi => ("phi", json!(phi(&literal.parse()?)?.to_string())),
        IsoOp::Chains => {
            let p: PairPartition = literal.parse()?;
            match li_chain_decompose(&p, i)? {
                Some(d) => ("chains", json!(d.to_string().lines().collect::<Vec<_>>())),
                None => ("chains", json!(format!("not L{i}-chain"))),
            }
        }
    };
    let mut out = Output::new(&["input", kind], json!({ "input": literal, kind: result }));
    let text = match &result {
        Value::String(s) => s.clone(),
        Value::Array(a) => a
            .iter()
            .filter_map(|v| v.as_str())
            .collect::<Vec<_>>()
            .join("; "),
        v => v.to_string(),
    };
    out.row(vec![literal.to_string(), text]);
    Ok(out)
}
