//! Command-line driver.
//!
//! Subcommands load algebra files, compute invariants (radical, integrals,
//! center, coradical, primitives, low-degree cohomology), run the seven-way
//! semisimplicity report and the extension chain, construct catalog objects,
//! and sweep whole instance suites.
//!
//! Exit codes: 0 on success, 1 on a mathematical failure (axiom violations,
//! a failed suite, a structural obstruction), 2 on IO or parse problems.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hopfcheck::algebra::{AlgebraKind, StructuredAlgebra};
use hopfcheck::cohomology::{complex_slice, h2};
use hopfcheck::construct::{
    adjoin_cocycle_element, group_algebra, group_dual, restricted_enveloping, CocycleExtensionSpec,
    MAX_CONSTRUCTED_DIM,
};
use hopfcheck::format::{
    load_algebra, load_cocycle, load_group, load_lie, report_document, report_json, save_algebra,
    suite_json,
};
use hopfcheck::groups::GroupTable;
use hopfcheck::invariants::{center, coradical, integrals, jacobson_radical, primitive_space};
use hopfcheck::linalg::{is_prime, Subspace};
use hopfcheck::masuoka::{build_extension_chain, masuoka_report, run_suite, SuiteSpec};
use hopfcheck::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hopfcheck",
    version,
    about = "Exact structure-constant computations for finite-dimensional Hopf algebras over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of the file's declared kind; exit 1 listing any violation
    Check { file: PathBuf },
    /// Jacobson radical of the underlying algebra
    Radical { file: PathBuf },
    /// Left and right integral spaces and whether the counit vanishes on them
    Integrals { file: PathBuf },
    /// Center of the underlying algebra
    Center { file: PathBuf },
    /// Coradical, the sum of all simple subcoalgebras
    Coradical { file: PathBuf },
    /// Space of primitive elements
    Primitives { file: PathBuf },
    /// Dimension of the Hochschild cohomology of the trivial module, with representatives in low degree
    Cohomology {
        file: PathBuf,
        /// Cochain degree (1, 2 or 3)
        #[arg(long)]
        degree: usize,
    },
    /// The seven-way semisimplicity report
    Masuoka {
        file: PathBuf,
        /// Emit the report as canonical JSON
        #[arg(long)]
        json: bool,
    },
    /// Chain of Hopf subalgebras K = F_0 < F_1 < ... < H grown by cocycle-twisted generators
    Chain { file: PathBuf },
    /// Construct a catalog object and write it as an algebra file
    Build {
        #[command(subcommand)]
        target: BuildTarget,
    },
    /// Adjoin a generator z with coproduct defect a chosen 2-cocycle and a p-polynomial relation
    Extend {
        file: PathBuf,
        /// Index into the H^2 representatives of the base
        #[arg(long, conflicts_with = "cocycle_file")]
        cocycle: Option<usize>,
        /// Cocycle tensor read from a cocycle/1 file
        #[arg(long)]
        cocycle_file: Option<PathBuf>,
        /// Relation z^(p^l) + c_{l-1} z^(p^(l-1)) + ... + c_0 z + a = 0,
        /// written as the comma-separated residues "l,c_{l-1},...,c_0,a"
        #[arg(long)]
        relation: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Construct a catalog of instances and re-verify the equivalence on each
    Suite {
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 16)]
        max_group_order: usize,
        /// Emit the full suite report as canonical JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BuildTarget {
    /// Dual of a group algebra: functions on G with pointwise product
    GroupDual {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        p: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Group algebra kG
    GroupAlgebra {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        p: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Restricted enveloping algebra u(g) of a restricted Lie algebra
    RestrictedEnv {
        /// Restricted Lie algebra data in the lie/1 format
        #[arg(long)]
        lie: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// Catalog name such as c6, c2xc2, d4, q8, sd16, heis3
    #[arg(long)]
    group: Option<String>,
    /// Cayley table file in the group/1 format
    #[arg(long)]
    cayley: Option<PathBuf>,
}

impl GroupSource {
    fn table(&self) -> Result<GroupTable> {
        match (&self.group, &self.cayley) {
            (Some(name), None) => GroupTable::from_catalog(name).map_err(|e| match e {
                // A typo in a catalog name is an input problem, not a math one.
                Error::UnknownGroup(n) => Error::Parse(format!("unknown catalog group '{n}'")),
                other => other,
            }),
            (None, Some(path)) => load_group(path),
            _ => unreachable!("clap enforces exactly one group source"),
        }
    }
}

/// Dying quietly on a closed pipe keeps `hopfcheck ... | head` usable.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { file } => return cmd_check(&file),
        Command::Radical { file } => {
            let h = load_validated(&file)?;
            need_algebra(&h)?;
            print_subspace("radical", &h, &jacobson_radical(&h));
        }
        Command::Integrals { file } => {
            let h = load_validated(&file)?;
            need_bialgebra(&h)?;
            let ints = integrals(&h)?;
            print_subspace("left integral space", &h, &ints.left);
            println!("eps on left integrals: {}", eps_word(ints.eps_left_nonzero));
            print_subspace("right integral space", &h, &ints.right);
            println!("eps on right integrals: {}", eps_word(ints.eps_right_nonzero));
        }
        Command::Center { file } => {
            let h = load_validated(&file)?;
            need_algebra(&h)?;
            print_subspace("center", &h, &center(&h));
        }
        Command::Coradical { file } => {
            let h = load_validated(&file)?;
            need_coalgebra(&h)?;
            print_subspace("coradical", &h, &coradical(&h)?);
        }
        Command::Primitives { file } => {
            let h = load_validated(&file)?;
            need_bialgebra(&h)?;
            print_subspace("primitive space", &h, &primitive_space(&h));
        }
        Command::Cohomology { file, degree } => {
            let h = load_validated(&file)?;
            need_bialgebra(&h)?;
            cmd_cohomology(&h, degree)?;
        }
        Command::Masuoka { file, json } => {
            let h = load_algebra(&file)?;
            let report = masuoka_report(&h)?;
            if json {
                print!("{}", report_json(&report));
            } else {
                print_report(&report);
            }
        }
        Command::Chain { file } => {
            let h = load_validated(&file)?;
            need_hopf(&h)?;
            cmd_chain(&h)?;
        }
        Command::Build { target } => cmd_build(target)?,
        Command::Extend { file, cocycle, cocycle_file, relation, output } => {
            cmd_extend(&file, cocycle, cocycle_file.as_deref(), &relation, &output)?;
        }
        Command::Suite { p, max_group_order, json } => return cmd_suite(p, max_group_order, json),
    }
    Ok(ExitCode::SUCCESS)
}

/// Parse failures exit 2; a file whose tensors break its declared axioms is a
/// mathematical failure and exits 1.
fn load_validated(path: &Path) -> Result<StructuredAlgebra> {
    let h = load_algebra(path)?;
    let violations = h.validate();
    if violations.is_empty() {
        Ok(h)
    } else {
        Err(Error::AxiomViolations(violations))
    }
}

fn need_algebra(h: &StructuredAlgebra) -> Result<()> {
    if h.kind.has_algebra() {
        Ok(())
    } else {
        Err(Error::MissingAlgebra)
    }
}

fn need_coalgebra(h: &StructuredAlgebra) -> Result<()> {
    if h.kind.has_coalgebra() {
        Ok(())
    } else {
        Err(Error::MissingCoalgebra)
    }
}

fn need_bialgebra(h: &StructuredAlgebra) -> Result<()> {
    need_algebra(h)?;
    need_coalgebra(h)
}

fn need_hopf(h: &StructuredAlgebra) -> Result<()> {
    need_bialgebra(h)?;
    if h.kind == AlgebraKind::Hopf {
        Ok(())
    } else {
        Err(Error::MissingAntipode)
    }
}

fn eps_word(nonzero: bool) -> &'static str {
    if nonzero {
        "nonzero"
    } else {
        "zero"
    }
}

/// Renders a coefficient vector against the basis labels, "f0 + 2*x1" style.
fn format_element(labels: &[String], v: &[u64]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(i, &c)| if c == 1 { labels[i].clone() } else { format!("{c}*{}", labels[i]) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Renders a tensor-square vector with (x) as the tensor sign, "x(x)x" style.
fn format_tensor(labels: &[String], v: &[u64]) -> String {
    let n = labels.len();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(t, &c)| {
            let pure = format!("{}(x){}", labels[t / n], labels[t % n]);
            if c == 1 {
                pure
            } else {
                format!("{c}*{pure}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn print_subspace(name: &str, h: &StructuredAlgebra, s: &Subspace) {
    println!("{name} dimension {}", s.dim());
    for row in s.basis_rows() {
        println!("  {}", format_element(&h.labels, &row));
    }
}

fn cmd_check(file: &Path) -> Result<ExitCode> {
    let h = load_algebra(file)?;
    let violations = h.validate();
    if violations.is_empty() {
        println!("ok: {} of dimension {} over F_{}", h.kind, h.dim, h.p);
        Ok(ExitCode::SUCCESS)
    } else {
        for v in &violations {
            println!("violation: {v}");
        }
        println!("{} violation(s) in a declared {}", violations.len(), h.kind);
        Ok(ExitCode::from(1))
    }
}

fn cmd_cohomology(h: &StructuredAlgebra, degree: usize) -> Result<()> {
    if degree == 2 {
        // The dedicated degree-2 path also picks representative cocycles.
        let classes = h2(h);
        println!("dim H^{degree} = {}", classes.dim());
        for rep in &classes.representatives {
            println!("representative: {}", format_tensor(&h.labels, rep));
        }
    } else {
        let slice = complex_slice(h, degree)?;
        println!("dim H^{degree} = {}", slice.cohomology_dim());
        if degree == 1 {
            // d0 = 0, so kernel elements are honest representatives.
            for row in slice.d_out.kernel().basis_rows() {
                println!("representative: {}", format_element(&h.labels, &row));
            }
        }
    }
    Ok(())
}

fn print_report(report: &hopfcheck::masuoka::MasuokaReport) {
    let doc = report_document(report);
    println!("p = {}, dim = {}, dim K = {}", report.p, report.dim, report.k_dim);
    let rows = [
        ("semisimple", doc.semisimple),
        ("eps_right_integral", doc.eps_right_integral),
        ("eps_left_integral", doc.eps_left_integral),
        ("K_semisimple", doc.k_semisimple),
        ("g_abelian_spans", doc.g_abelian_spans),
        ("eps_right_integral_K", doc.eps_right_integral_k),
        ("eps_left_integral_K", doc.eps_left_integral_k),
    ];
    for (name, value) in rows {
        println!("  {name:<22} {value}");
    }
    println!("agreement = {}", doc.agreement);
    println!(
        "commutative = {}, connected = {}, dim is a power of p = {}",
        doc.commutative, doc.connected, doc.dim_is_p_power
    );
    for line in &doc.diagnostics {
        println!("note: {line}");
    }
}

fn cmd_chain(h: &StructuredAlgebra) -> Result<()> {
    let chain = build_extension_chain(h)?;
    let dims: Vec<String> = chain.layer_dims().iter().map(|d| d.to_string()).collect();
    println!("chain of Hopf subalgebras, dimensions {}", dims.join(" -> "));
    println!("F_0 = K has dimension {}", chain.layers[0].dim());
    for (i, step) in chain.steps.iter().enumerate() {
        let cert = if step.essential_certified {
            "certified essential"
        } else {
            "essentiality not certified"
        };
        println!("step {}: index {}, {}", i + 1, step.index, cert);
        println!("  z = {}", format_element(&h.labels, &step.z.coords));
        println!("  cocycle = {}", format_tensor(&h.labels, &step.cocycle));
    }
    Ok(())
}

fn check_build_modulus(p: u64) -> Result<()> {
    if !is_prime(p) {
        Err(Error::Parse("modulus not prime".into()))
    } else if p > 251 {
        Err(Error::Parse(format!(
            "modulus {p} too large; residues are stored in bytes, so p <= 251"
        )))
    } else {
        Ok(())
    }
}

fn cmd_build(target: BuildTarget) -> Result<()> {
    let (h, output) = match target {
        BuildTarget::GroupDual { source, p, output } => {
            check_build_modulus(p)?;
            let g = checked_order(source.table()?)?;
            (group_dual(p, &g), output)
        }
        BuildTarget::GroupAlgebra { source, p, output } => {
            check_build_modulus(p)?;
            let g = checked_order(source.table()?)?;
            (group_algebra(p, &g), output)
        }
        BuildTarget::RestrictedEnv { lie, output } => {
            let g = load_lie(&lie)?;
            (restricted_enveloping(&g)?, output)
        }
    };
    save_algebra(&h, &output)?;
    println!("wrote {}: {} of dimension {} over F_{}", output.display(), h.kind, h.dim, h.p);
    Ok(())
}

fn checked_order(g: GroupTable) -> Result<GroupTable> {
    if g.order() > MAX_CONSTRUCTED_DIM {
        Err(Error::DimensionTooLarge(g.order(), MAX_CONSTRUCTED_DIM))
    } else {
        Ok(g)
    }
}

/// Parses "l,c_{l-1},...,c_0,a" into the low-to-high coefficient list for
/// z^(p^l) + sum c_i z^(p^i) + a = 0 and the scalar constant a.
fn parse_relation(s: &str, p: u64) -> Result<(Vec<u64>, u64)> {
    let nums: Vec<u64> = s
        .split(',')
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| {
                Error::Parse(format!("relation term '{}' is not a nonnegative integer", t.trim()))
            })
        })
        .collect::<Result<_>>()?;
    let Some((&l, rest)) = nums.split_first() else {
        return Err(Error::Parse("relation must start with the degree l".into()));
    };
    let l = l as usize;
    if l == 0 {
        return Err(Error::Parse("relation degree l must be at least 1".into()));
    }
    if rest.len() != l + 1 {
        return Err(Error::Parse(format!(
            "relation of degree l = {l} needs {} coefficients after l (c_{{l-1}},...,c_0,a), got {}",
            l + 1,
            rest.len()
        )));
    }
    let lower: Vec<u64> = rest[..l].iter().rev().map(|&c| c % p).collect();
    Ok((lower, rest[l] % p))
}

fn cmd_extend(
    file: &Path,
    cocycle: Option<usize>,
    cocycle_file: Option<&Path>,
    relation: &str,
    output: &Path,
) -> Result<()> {
    let base = load_validated(file)?;
    need_hopf(&base)?;
    let n = base.dim;
    let u = match (cocycle, cocycle_file) {
        (Some(index), None) => {
            let classes = h2(&base);
            classes.representatives.get(index).cloned().ok_or_else(|| {
                Error::Parse(format!(
                    "cocycle index {index} out of range; H^2 has dimension {}",
                    classes.dim()
                ))
            })?
        }
        (None, Some(path)) => {
            let c = load_cocycle(path)?;
            if c.p != base.p {
                return Err(Error::ModulusMismatch(base.p, c.p));
            }
            if c.dim != n {
                return Err(Error::DimensionMismatch { expected: n, got: c.dim });
            }
            c.tensor
        }
        _ => return Err(Error::Parse("pass exactly one of --cocycle and --cocycle-file".into())),
    };
    let (lower, a) = parse_relation(relation, base.p)?;
    let constant: Vec<u64> = base.unit_vec().iter().map(|&c| c * a % base.p).collect();
    let ext = adjoin_cocycle_element(&CocycleExtensionSpec { base, cocycle: u, lower, constant })?;
    save_algebra(&ext.algebra, output)?;
    println!(
        "wrote {}: {} of dimension {} over F_{}",
        output.display(),
        ext.algebra.kind,
        ext.algebra.dim,
        ext.algebra.p
    );
    println!("z = {}", format_element(&ext.algebra.labels, &ext.z.coords));
    Ok(())
}

fn cmd_suite(p: u64, max_group_order: usize, json: bool) -> Result<ExitCode> {
    check_build_modulus(p)?;
    let report = run_suite(&SuiteSpec::new(p, max_group_order));
    if json {
        print!("{}", suite_json(&report));
    } else {
        for inst in &report.instances {
            let tag = if inst.passed() { "PASS" } else { "FAIL" };
            println!("{tag} {} (dim {})", inst.name, inst.dim);
            if let Some(err) = &inst.error {
                let expected = if inst.expected_invalid { " as expected" } else { "" };
                println!("     rejected{expected}: {err}");
            }
            for check in inst.checks.iter().filter(|c| !c.passed) {
                println!("     failed {}: {}", check.name, check.detail);
            }
        }
        println!(
            "{} instance(s) at p = {}, max group order {}, {} rejected Lie datum(s)",
            report.instances.len(),
            report.p,
            report.max_group_order,
            report.rejected_lie_data
        );
        println!("suite {}", if report.passed() { "passed" } else { "failed" });
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
