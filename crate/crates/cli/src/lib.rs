//! Command-line front end for `ramsey-core`.
//!
//! Algebra arguments are either a path to an algebra file or a catalog
//! entry such as `predecessor-trunc(5)` or `dlimit-rule`. Reports are
//! line-oriented and deterministic.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ramsey_core::algebra::{
    count_orderly_terms, enumerate_orderly_terms, enumerate_subalgebras, idempotents, Element,
    FiniteAlgebra, Interpretation, RuleAlgebra, Signature, SubalgebraOptions, DEFAULT_SUBSET_LIMIT,
};
use ramsey_core::constructions::{
    catalog_spec, check_congruence, check_homomorphism, congruence_closure, diagonal_window,
    isomorphism_search, new_entry_positions, product, quotient, rule_product, CatalogAlgebra,
    OnePointExtensions, DEFAULT_EXTENSION_ENTRY_LIMIT, DEFAULT_ISO_LIMIT, DEFAULT_PRODUCT_LIMIT,
};
use ramsey_core::decision::{
    decide_finite, decide_finite_via_all_subalgebras, decide_unary_finite, is_ramsey,
    search_unary_rule, RamseyStatus, DEFAULT_MAX_DEPTH,
};
use ramsey_core::reduction::{
    check_reduction, enumerate_reductions, fr_prefix, homogeneity_check, reduction_count,
    Homogeneity, DEFAULT_REDUCTION_LIMIT,
};
use ramsey_core::regression;
use ramsey_core::text::{
    parse_algebra, parse_map, parse_partition, parse_predicate, parse_reduction, parse_sequence,
    write_algebra, write_map, write_partition, write_reduction,
};
use ramsey_core::topology::{
    clopen_ramsey_lift, fixed_point_density, proper_cover_conclusion, Density, TopologyBasis,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ramsey", version, about = "Decide and explore Ramsey algebras")]
pub struct Cli {
    /// Write the report to a file instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct TermBounds {
    #[arg(long, default_value_t = 3)]
    pub max_width: usize,
    #[arg(long, default_value_t = 3)]
    pub max_size: usize,
}

#[derive(clap::Args, Debug, Clone)]
pub struct ReductionGuard {
    #[arg(long, default_value_t = DEFAULT_REDUCTION_LIMIT)]
    pub limit: u128,
    /// Ignore the enumeration limit.
    #[arg(long)]
    pub force: bool,
}

impl ReductionGuard {
    fn limit(&self) -> u128 {
        if self.force {
            u128::MAX
        } else {
            self.limit
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
pub struct SubsetGuard {
    #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT)]
    pub subset_limit: usize,
    /// Enumerate every closed subset regardless of the universe size.
    #[arg(long)]
    pub force: bool,
}

impl SubsetGuard {
    fn options(&self) -> SubalgebraOptions {
        SubalgebraOptions {
            limit: self.subset_limit,
            singletons_only: false,
            force: self.force,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide the Ramsey property.
    Check {
        algebra: String,
        /// Starting element for rule algebras.
        #[arg(long, default_value_t = 0)]
        start: Element,
        /// Search from the diagonal window of this width in the product of
        /// copies of a unary rule algebra.
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Use the literal check over every subalgebra.
        #[arg(long)]
        all_subalgebras: bool,
        #[command(flatten)]
        guard: SubsetGuard,
    },
    /// List the subalgebra universes.
    Subalgebras {
        algebra: String,
        /// Only the singly generated ones.
        #[arg(long)]
        singletons: bool,
        #[command(flatten)]
        guard: SubsetGuard,
    },
    /// List the idempotent elements.
    Idempotents { algebra: String },
    /// Direct product of finite algebras.
    Product {
        #[arg(required = true, num_args = 2..)]
        algebras: Vec<String>,
        /// Annotate each element with its coordinates.
        #[arg(long)]
        decode: bool,
        #[arg(long, default_value_t = DEFAULT_PRODUCT_LIMIT)]
        limit: usize,
    },
    /// Quotient by a congruence given as a partition file.
    Quotient {
        algebra: String,
        partition: PathBuf,
        /// Also write the projection map here.
        #[arg(long)]
        projection: Option<PathBuf>,
    },
    /// Check whether a partition is a congruence.
    CongruenceCheck { algebra: String, partition: PathBuf },
    /// The least congruence identifying the given pairs.
    CongruenceClose {
        algebra: String,
        /// A pair `a,b` to identify; repeatable.
        #[arg(long = "pair", value_parser = parse_pair)]
        pairs: Vec<(Element, Element)>,
    },
    /// Check a homomorphism given as a map file.
    HomCheck {
        source: String,
        target: String,
        map: PathBuf,
    },
    /// Search for an isomorphism.
    Iso {
        first: String,
        second: String,
        #[arg(long, default_value_t = DEFAULT_ISO_LIMIT)]
        limit: usize,
    },
    /// One-point extensions.
    Extend {
        algebra: String,
        /// Write the extension with this index.
        #[arg(long)]
        index: Option<u128>,
        /// Decide every extension and report how many are Ramsey.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = DEFAULT_EXTENSION_ENTRY_LIMIT)]
        entry_limit: usize,
    },
    /// Orderly terms over the signature of an algebra.
    Terms {
        algebra: String,
        #[command(flatten)]
        bounds: TermBounds,
        /// Print counts per width and size instead of the terms.
        #[arg(long)]
        count: bool,
    },
    /// Values of terms on subsequences of a sequence prefix.
    Fr {
        algebra: String,
        sequence: PathBuf,
        #[command(flatten)]
        bounds: TermBounds,
        #[command(flatten)]
        guard: ReductionGuard,
    },
    /// Check a reduction witness, or enumerate reductions.
    Reduce {
        algebra: String,
        sequence: PathBuf,
        /// Witness file to check.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Output length for enumeration.
        #[arg(long, default_value_t = 1)]
        out_len: usize,
        /// Print every reduction rather than the count.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        bounds: TermBounds,
        #[command(flatten)]
        guard: ReductionGuard,
    },
    /// Split the term values of a prefix by a subset predicate.
    Homog {
        algebra: String,
        sequence: PathBuf,
        /// Predicate such as `evens`, `interval 2 5` or `mod 3 0,1`.
        #[arg(long)]
        set: String,
        #[command(flatten)]
        bounds: TermBounds,
        #[command(flatten)]
        guard: ReductionGuard,
    },
    /// The subalgebra topology.
    Topology {
        algebra: String,
        #[command(flatten)]
        guard: SubsetGuard,
    },
    /// Run the bundled regression checks.
    VerifyPaper {
        /// Run only this check; repeatable.
        #[arg(long = "criterion")]
        criteria: Vec<usize>,
    },
}

fn parse_pair(s: &str) -> Result<(Element, Element), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `a,b`, found `{s}`"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<Element>()
            .map_err(|_| format!("`{}` is not a natural number", t.trim()))
    };
    Ok((num(a)?, num(b)?))
}

/// A finished command: the report text and the exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    fn new(text: String, code: i32) -> Self {
        Report { text, code }
    }

    fn ok(text: String) -> Self {
        Report::new(text, EXIT_OK)
    }
}

type Outcome = Result<Report, String>;

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

enum Loaded {
    Finite(FiniteAlgebra),
    Rule(RuleAlgebra),
}

fn load(spec: &str) -> Result<Loaded, String> {
    let path = Path::new(spec);
    if path.exists() {
        let text = read(path)?;
        return parse_algebra(&text)
            .map(Loaded::Finite)
            .map_err(|e| format!("{spec}: {e}"));
    }
    match catalog_spec(spec) {
        Ok(CatalogAlgebra::Finite(a)) => Ok(Loaded::Finite(a)),
        Ok(CatalogAlgebra::Rule(r)) => Ok(Loaded::Rule(r)),
        Err(e) => Err(format!(
            "`{spec}` is neither a readable file nor a catalog entry ({e})"
        )),
    }
}

fn load_finite(spec: &str) -> Result<FiniteAlgebra, String> {
    match load(spec)? {
        Loaded::Finite(a) => Ok(a),
        Loaded::Rule(r) => Err(format!(
            "`{}` is a rule algebra; this command needs a finite one",
            r.name()
        )),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn interpretation(loaded: &Loaded) -> &dyn Interpretation<Value = Element> {
    match loaded {
        Loaded::Finite(a) => a,
        Loaded::Rule(r) => r,
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn status_code(status: RamseyStatus) -> i32 {
    match status {
        RamseyStatus::Ramsey => EXIT_OK,
        RamseyStatus::NotRamsey => EXIT_NEGATIVE,
        RamseyStatus::Unknown => EXIT_UNKNOWN,
    }
}

/// Parses arguments, runs the command and returns the report. Argument
/// errors become input errors, except help and version requests.
pub fn run_args<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            Report::new(e.render().to_string(), code)
        }
    }
}

/// Runs a parsed command. Input errors are reported as `error: ..` with
/// exit status 3.
pub fn run(cli: &Cli) -> Report {
    match execute(&cli.command) {
        Ok(report) => report,
        Err(message) => Report::new(format!("error: {message}\n"), EXIT_INPUT),
    }
}

pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Check {
            algebra,
            start,
            window,
            max_depth,
            all_subalgebras,
            guard,
        } => check(
            algebra,
            *start,
            *window,
            *max_depth,
            *all_subalgebras,
            guard,
        ),
        Command::Subalgebras {
            algebra,
            singletons,
            guard,
        } => {
            let alg = load_finite(algebra)?;
            let opts = SubalgebraOptions {
                singletons_only: *singletons,
                ..guard.options()
            };
            let subs = enumerate_subalgebras(&alg, opts).map_err(fail)?;
            let mut out = format!("subalgebras {}\n", subs.len());
            for u in subs {
                writeln!(out, "{u}").unwrap();
            }
            Ok(Report::ok(out))
        }
        Command::Idempotents { algebra } => {
            let alg = load_finite(algebra)?;
            Ok(Report::ok(format!("idempotents {}\n", idempotents(&alg))))
        }
        Command::Product {
            algebras,
            decode,
            limit,
        } => {
            let factors = algebras
                .iter()
                .map(|a| load_finite(a))
                .collect::<Result<Vec<_>, _>>()?;
            let (p, index) = product(&factors, *limit).map_err(fail)?;
            let mut out = write_algebra(&p);
            if *decode {
                for e in 0..p.size() {
                    writeln!(out, "# {e} = ({})", join(index.decode(e))).unwrap();
                }
            }
            Ok(Report::ok(out))
        }
        Command::Quotient {
            algebra,
            partition,
            projection,
        } => {
            let alg = load_finite(algebra)?;
            let part = parse_partition(&read(partition)?, alg.size()).map_err(fail)?;
            let (q, rho) = quotient(&alg, &part).map_err(fail)?;
            if let Some(path) = projection {
                fs::write(path, write_map(&rho)).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(Report::ok(write_algebra(&q)))
        }
        Command::CongruenceCheck { algebra, partition } => {
            let alg = load_finite(algebra)?;
            let part = parse_partition(&read(partition)?, alg.size()).map_err(fail)?;
            Ok(match check_congruence(&alg, &part).map_err(fail)? {
                None => Report::ok("congruence true\n".into()),
                Some(v) => Report::new(format!("congruence false\nviolation {v}\n"), EXIT_NEGATIVE),
            })
        }
        Command::CongruenceClose { algebra, pairs } => {
            let alg = load_finite(algebra)?;
            let part = congruence_closure(&alg, pairs).map_err(fail)?;
            Ok(Report::ok(write_partition(&part)))
        }
        Command::HomCheck {
            source,
            target,
            map,
        } => {
            let src = load_finite(source)?;
            let dst = load_finite(target)?;
            let h = parse_map(&read(map)?, src.size(), dst.size()).map_err(fail)?;
            let c = check_homomorphism(&src, &dst, &h).map_err(fail)?;
            let mut out = format!(
                "homomorphism {}\nsurjective {}\n",
                c.homomorphism, c.surjective
            );
            if let Some((symbol, args)) = &c.violation {
                writeln!(
                    out,
                    "violation {} ({})",
                    src.signature().name(*symbol),
                    join(args)
                )
                .unwrap();
            }
            let code = if c.homomorphism {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            };
            Ok(Report::new(out, code))
        }
        Command::Iso {
            first,
            second,
            limit,
        } => {
            let a = load_finite(first)?;
            let b = load_finite(second)?;
            Ok(match isomorphism_search(&a, &b, *limit).map_err(fail)? {
                Some(m) => Report::ok(format!("iso {}", write_map(&m))),
                None => Report::new("iso none\n".into(), EXIT_NEGATIVE),
            })
        }
        Command::Extend {
            algebra,
            index,
            check,
            entry_limit,
        } => extend(algebra, *index, *check, *entry_limit),
        Command::Terms {
            algebra,
            bounds,
            count,
        } => terms(algebra, bounds, *count),
        Command::Fr {
            algebra,
            sequence,
            bounds,
            guard,
        } => {
            let loaded = load(algebra)?;
            let src = parse_sequence(&read(sequence)?).map_err(fail)?;
            let fr = fr_prefix(
                interpretation(&loaded),
                &src,
                bounds.max_width,
                bounds.max_size,
                guard.limit(),
            )
            .map_err(fail)?;
            Ok(Report::ok(format!("fr {} {}\n", fr.len(), join(&fr))))
        }
        Command::Reduce {
            algebra,
            sequence,
            witness,
            out_len,
            list,
            bounds,
            guard,
        } => reduce(
            algebra,
            sequence,
            witness.as_deref(),
            *out_len,
            *list,
            bounds,
            guard,
        ),
        Command::Homog {
            algebra,
            sequence,
            set,
            bounds,
            guard,
        } => {
            let loaded = load(algebra)?;
            let src = parse_sequence(&read(sequence)?).map_err(fail)?;
            let x = parse_predicate(set).map_err(fail)?;
            let r = homogeneity_check(
                interpretation(&loaded),
                &src,
                &x,
                bounds.max_width,
                bounds.max_size,
                guard.limit(),
            )
            .map_err(fail)?;
            let out = format!(
                "fr {}\nin {}\nout {}\nverdict {}\n",
                join(&r.fr),
                join(&r.in_x),
                join(&r.out_x),
                r.verdict
            );
            let code = if r.verdict == Homogeneity::Mixed {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            };
            Ok(Report::new(out, code))
        }
        Command::Topology { algebra, guard } => topology(algebra, guard),
        Command::VerifyPaper { criteria } => verify(criteria),
    }
}

fn check(
    algebra: &str,
    start: Element,
    window: Option<usize>,
    max_depth: usize,
    all_subalgebras: bool,
    guard: &SubsetGuard,
) -> Outcome {
    match load(algebra)? {
        Loaded::Finite(alg) => {
            if window.is_some() {
                return Err("--window applies to rule algebras".into());
            }
            let verdict = if all_subalgebras {
                decide_finite_via_all_subalgebras(&alg, guard.options()).map_err(fail)?
            } else if alg.is_unary() {
                decide_unary_finite(&alg).map_err(fail)?
            } else {
                decide_finite(&alg)
            };
            Ok(Report::new(
                verdict.render(alg.signature()),
                status_code(verdict.status()),
            ))
        }
        Loaded::Rule(rule) => match window {
            None => {
                let outcome = search_unary_rule(&rule, start, max_depth).map_err(fail)?;
                let text = outcome.render(rule.signature(), &start);
                Ok(Report::new(text, status_code(outcome.status())))
            }
            Some(width) => {
                let w = rule_product(std::slice::from_ref(&rule), width).map_err(fail)?;
                let diag = diagonal_window(width);
                let outcome =
                    search_unary_rule(&w.algebra, diag.clone(), max_depth).map_err(fail)?;
                let text = outcome.render(w.algebra.signature(), &diag);
                Ok(Report::new(text, status_code(outcome.status())))
            }
        },
    }
}

fn extend(algebra: &str, index: Option<u128>, check: bool, entry_limit: usize) -> Outcome {
    let alg = load_finite(algebra)?;
    let entries: usize = new_entry_positions(&alg).iter().map(Vec::len).sum();
    let ext = OnePointExtensions::new(&alg, entry_limit).map_err(fail)?;
    let total = ext.total();
    if let Some(i) = index {
        if i >= total {
            return Err(format!(
                "extension index {i} is out of range (there are {total})"
            ));
        }
        let e = ext.into_iter().nth(i as usize).expect("index below total");
        return Ok(Report::ok(write_algebra(&e)));
    }
    let mut out = format!("entries {entries}\nextensions {total}\n");
    let mut code = EXIT_OK;
    if check {
        let mut ramsey = 0u128;
        ext.for_each(|e| {
            if is_ramsey(e) {
                ramsey += 1;
            }
        });
        writeln!(out, "ramsey {ramsey}").unwrap();
        if ramsey < total {
            code = EXIT_NEGATIVE;
        }
    }
    Ok(Report::new(out, code))
}

fn signature_of(loaded: &Loaded) -> &Signature {
    interpretation(loaded).signature()
}

fn terms(algebra: &str, bounds: &TermBounds, count: bool) -> Outcome {
    let loaded = load(algebra)?;
    let sig = signature_of(&loaded);
    let mut out = String::new();
    if count {
        for w in 1..=bounds.max_width {
            for s in 0..=bounds.max_size {
                let c = count_orderly_terms(sig, w, s);
                if c > 0 {
                    writeln!(out, "width {w} size {s} count {c}").unwrap();
                }
            }
        }
    } else {
        for t in enumerate_orderly_terms(sig, bounds.max_width, bounds.max_size).map_err(fail)? {
            writeln!(out, "{}", t.display(sig)).unwrap();
        }
    }
    Ok(Report::ok(out))
}

fn reduce(
    algebra: &str,
    sequence: &Path,
    witness: Option<&Path>,
    out_len: usize,
    list: bool,
    bounds: &TermBounds,
    guard: &ReductionGuard,
) -> Outcome {
    let loaded = load(algebra)?;
    let alg = interpretation(&loaded);
    let sig = alg.signature();
    let src = parse_sequence(&read(sequence)?).map_err(fail)?;
    if let Some(path) = witness {
        let w = parse_reduction(&read(path)?, sig).map_err(fail)?;
        return Ok(match check_reduction(alg, &src, &w).map_err(fail)? {
            None => Report::ok(format!("reduction accepted\noutput {}\n", join(&w.output))),
            Some(v) => Report::new(
                format!("reduction rejected\nviolation {v}\n"),
                EXIT_NEGATIVE,
            ),
        });
    }
    let total = reduction_count(sig, src.len(), out_len, bounds.max_width, bounds.max_size);
    let mut out = format!("reductions {total}\n");
    if list {
        let all = enumerate_reductions(
            alg,
            &src,
            out_len,
            bounds.max_width,
            bounds.max_size,
            guard.limit(),
        )
        .map_err(fail)?;
        for w in all {
            out.push('\n');
            out.push_str(&write_reduction(&w, sig));
        }
    }
    Ok(Report::ok(out))
}

fn topology(algebra: &str, guard: &SubsetGuard) -> Outcome {
    let alg = load_finite(algebra)?;
    let opts = guard.options();
    let basis = TopologyBasis::new(&alg, opts).map_err(fail)?;
    let mut out = String::new();
    for u in basis.basic_opens() {
        writeln!(out, "open {u}").unwrap();
    }
    for a in 0..alg.size() {
        writeln!(
            out,
            "smallest {a} {}",
            basis.smallest_open(a).map_err(fail)?
        )
        .unwrap();
    }
    for u in basis.nontrivial_clopens() {
        writeln!(out, "clopen {u}").unwrap();
    }
    let density = if alg.is_unary() {
        match fixed_point_density(&alg).map_err(fail)? {
            Density::Dense => "dense".to_string(),
            Density::NotDense { point } => format!("not-dense {point}"),
        }
    } else {
        "n/a".to_string()
    };
    writeln!(out, "density {density}").unwrap();
    match clopen_ramsey_lift(&alg, opts).map_err(fail)? {
        Some(u) => writeln!(out, "lift {u}").unwrap(),
        None => out.push_str("lift none\n"),
    }
    match proper_cover_conclusion(&alg, opts).map_err(fail)? {
        Some(r) => writeln!(out, "cover ramsey {r}").unwrap(),
        None => out.push_str("cover none\n"),
    }
    Ok(Report::ok(out))
}

fn verify(criteria: &[usize]) -> Outcome {
    let ids: Vec<usize> = if criteria.is_empty() {
        regression::CHECKS.iter().map(|c| c.0).collect()
    } else {
        criteria.to_vec()
    };
    let mut out = String::new();
    let mut failed = 0;
    for &id in &ids {
        let outcome = regression::run(id).ok_or_else(|| format!("no check with number {id}"))?;
        if !outcome.passed {
            failed += 1;
        }
        writeln!(out, "{outcome}").unwrap();
    }
    writeln!(
        out,
        "summary {} of {} passed",
        ids.len() - failed,
        ids.len()
    )
    .unwrap();
    Ok(Report::new(
        out,
        if failed == 0 { EXIT_OK } else { EXIT_NEGATIVE },
    ))
}

/// Writes the report to `output` or standard output and returns the exit
/// status.
pub fn emit(report: &Report, output: Option<&Path>) -> i32 {
    let to_stderr = report.code == EXIT_INPUT;
    match output {
        Some(path) if !to_stderr => {
            if let Err(e) = fs::write(path, &report.text) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        _ if to_stderr => eprint!("{}", report.text),
        _ => print!("{}", report.text),
    }
    report.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_line(args: &[&str]) -> Report {
        run_args(std::iter::once("ramsey").chain(args.iter().copied()))
    }

    #[test]
    fn catalog_checks() {
        let r = run_line(&["check", "predecessor-trunc(3)"]);
        assert_eq!(r.code, EXIT_OK);
        assert!(r
            .text
            .starts_with("verdict Ramsey\ncert 0 x0 0\ncert 1 p(x0) 0\n"));
        let r = run_line(&["check", "swap2"]);
        assert_eq!(
            (r.code, r.text.lines().next()),
            (EXIT_NEGATIVE, Some("verdict NotRamsey"))
        );
        assert_eq!(run_line(&["check", "z-shift-rule"]).code, EXIT_NEGATIVE);
        assert_eq!(
            run_line(&["check", "predecessor-rule", "--start", "5"]).code,
            EXIT_OK
        );
    }

    #[test]
    fn windows() {
        let r = run_line(&[
            "check",
            "predecessor-rule",
            "--window",
            "6",
            "--max-depth",
            "4",
        ]);
        assert_eq!(r.code, EXIT_UNKNOWN);
        assert!(r.text.contains("depth 4"));
        assert_eq!(
            run_line(&["check", "predecessor-rule", "--window", "6"]).code,
            EXIT_OK
        );
    }

    #[test]
    fn input_errors() {
        let r = run_line(&["check", "no-such-thing"]);
        assert_eq!(r.code, EXIT_INPUT);
        assert!(r.text.starts_with("error: "));
        assert_eq!(run_line(&["frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run_line(&["subalgebras", "dlimit-rule"]).code, EXIT_INPUT);
        assert_eq!(run_line(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("2, 3"), Ok((2, 3)));
        assert!(parse_pair("2").is_err());
        let r = run_line(&["congruence-close", "zmod(4)", "--pair", "0,2"]);
        assert_eq!(r.text, "partition 2\nblock 0 2\nblock 1 3\n");
    }

    #[test]
    fn small_reports() {
        assert_eq!(
            run_line(&["idempotents", "dlimit-trunc(2)"]).text,
            "idempotents {0, 1, 2}\n"
        );
        assert_eq!(run_line(&["iso", "swap2", "swap2"]).text, "iso map 0 1\n");
        let r = run_line(&["extend", "swap2", "--check"]);
        assert_eq!(r.text, "entries 1\nextensions 3\nramsey 0\n");
        assert_eq!(r.code, EXIT_NEGATIVE);
        let r = run_line(&["terms", "zmod(2)", "--max-width", "3", "--count"]);
        assert_eq!(
            r.text,
            "width 1 size 0 count 1\nwidth 2 size 1 count 1\nwidth 3 size 2 count 2\n"
        );
    }
}
