use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ontobias::detectors::{BiasType, RuleConfig};
use ontobias::obda::{load_table_dir, MappingSpec, Obda};
use ontobias::ofn::{self, ParserOptions};
use ontobias::owl::OntologyModel;
use ontobias::reasoner::{self, Explanation, Fact, ReasonerError};
use ontobias::report;

#[derive(Parser)]
#[command(name = "ontobias", version, about = "Audit OWL ontologies for bias")]
struct Cli {
    /// Reject undeclared entities and unknown constructs instead of warning.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every detector over the files and print a report.
    Audit {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Rule configuration (TOML); built-in rules when omitted.
        #[arg(long, env = "ONTOBIAS_CONFIG")]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Exit with status 2 if any finding has one of these bias types.
        #[arg(long, value_delimiter = ',')]
        fail_on: Vec<BiasType>,
    },
    /// Classify a file and show derivations.
    Reason {
        file: PathBuf,
        #[arg(long, conflicts_with = "explain")]
        check_unsat: bool,
        /// Explain SUB ⊑ SUP.
        #[arg(long, num_args = 2, value_names = ["SUB", "SUP"])]
        explain: Option<Vec<String>>,
    },
    /// Answer a class query over mapped tables.
    Obda {
        file: PathBuf,
        #[arg(long)]
        mappings: PathBuf,
        #[arg(long)]
        tables: PathBuf,
        /// Class IRI, prefixed name, local name or label.
        #[arg(long)]
        class: String,
        /// Show what the class hierarchy adds over the class's own mapping.
        #[arg(long)]
        diff: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    #[value(alias = "markdown")]
    Md,
}

fn main() -> ExitCode {
    // usage errors exit 1; status 2 is reserved for --fail-on
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let options = if cli.strict { ParserOptions::strict() } else { ParserOptions::default() };
    let result = match cli.command {
        Command::Audit { files, config, format, fail_on } => {
            audit(&files, config.as_deref(), format, &fail_on, &options)
        }
        Command::Reason { file, check_unsat, explain } => {
            reason(&file, check_unsat, explain.as_deref(), &options).map(|()| ExitCode::SUCCESS)
        }
        Command::Obda { file, mappings, tables, class, diff } => {
            obda(&file, &mappings, &tables, &class, diff, &options).map(|()| ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(1)
    })
}

fn load(path: &Path, options: &ParserOptions) -> Result<OntologyModel> {
    let parsed = ofn::parse_file(path, options)?;
    for d in &parsed.diagnostics {
        eprintln!("{}:{d}", path.display());
    }
    Ok(parsed.model)
}

fn audit(
    files: &[PathBuf],
    config: Option<&Path>,
    format: Format,
    fail_on: &[BiasType],
    options: &ParserOptions,
) -> Result<ExitCode> {
    let config = match config {
        Some(path) => RuleConfig::load(path)?,
        None => RuleConfig::default(),
    };
    let audit = report::audit(files, options, &config)?;
    for onto in &audit.ontologies {
        for d in &onto.diagnostics {
            eprintln!("{}:{d}", onto.label());
        }
    }
    match format {
        Format::Json => print!("{}", audit.to_json()),
        Format::Md => print!("{}", audit.to_markdown()),
    }
    let failing = audit.findings().filter(|f| fail_on.contains(&f.bias_type)).count();
    if failing > 0 {
        eprintln!("{failing} finding(s) of a --fail-on type");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn print_explanation(model: &OntologyModel, explanation: &Explanation) {
    for &i in &explanation.axioms {
        let axiom = &model.axioms()[i];
        let line = axiom.line().map(|l| format!("line {l}")).unwrap_or_else(|| format!("#{i}"));
        println!("  [{line}] {}", ofn::render_axiom(&axiom.kind, model.prefixes()));
    }
}

fn reason(file: &Path, check_unsat: bool, explain: Option<&[String]>, options: &ParserOptions) -> Result<()> {
    let model = load(file, options)?;
    let index = reasoner::classify(&model);
    if let Some([sub, sup]) = explain {
        let sub = model.find_class(sub)?;
        let sup = model.find_class(sup)?;
        let fact = Fact::Subsumption(sub, sup);
        match index.explain(&fact) {
            Ok(explanation) => {
                println!("{fact}");
                print_explanation(&model, &explanation);
            }
            Err(ReasonerError::NotDerivable(_)) => println!("not entailed: {fact}"),
            Err(e) => return Err(e.into()),
        }
        return Ok(());
    }
    let unsat = index.unsatisfiable_classes();
    if check_unsat {
        if unsat.is_empty() {
            println!("none");
        }
        for class in unsat {
            let explanation = index.explain(&Fact::Unsatisfiable(class.clone()))?;
            println!("{} ({} axioms)", class.local_name(), explanation.axioms.len());
            print_explanation(&model, &explanation);
        }
        return Ok(());
    }
    let census = model.profile_stats();
    println!(
        "{} classes, {} derived subsumptions, {} unsatisfiable",
        census.classes,
        index.subsumption_count(),
        unsat.len()
    );
    for class in index.classes() {
        let ancestors: BTreeSet<&str> =
            index.ancestors(class)?.into_iter().filter(|a| *a != class).map(|a| a.local_name()).collect();
        if !ancestors.is_empty() {
            println!("{} ⊑ {}", class.local_name(), ancestors.into_iter().collect::<Vec<_>>().join(", "));
        }
    }
    Ok(())
}

fn obda(file: &Path, mappings: &Path, tables: &Path, class: &str, diff: bool, options: &ParserOptions) -> Result<()> {
    let model = load(file, options)?;
    let index = reasoner::classify(&model);
    let spec = MappingSpec::load(mappings)?;
    let tables = load_table_dir(tables)?;
    let obda = Obda::new(&model, &index, &spec, &tables)?;
    let class = model.find_class(class).with_context(|| "query class")?;
    if !diff {
        for individual in obda.answer(&class, true)? {
            println!("{individual}");
        }
        return Ok(());
    }
    let d = obda.deduction_diff(&class)?;
    println!("class: {}", class.local_name());
    println!("mapped directly: {}", d.flat.iter().cloned().collect::<Vec<_>>().join(", "));
    println!("with subclasses: {}", d.closure.iter().cloned().collect::<Vec<_>>().join(", "));
    if d.difference.is_empty() {
        println!("no deduced extras");
    }
    for individual in &d.difference {
        println!("deduced: {individual}");
        for p in d.provenance.get(individual).into_iter().flatten() {
            let entry = &spec.entries[p.mapping];
            println!("  mapped as {} from {}", entry.class, entry.source);
            for &i in &p.axioms {
                let axiom = &model.axioms()[i];
                let line = axiom.line().map(|l| format!("line {l}")).unwrap_or_else(|| format!("#{i}"));
                println!("  [{line}] {}", ofn::render_axiom(&axiom.kind, model.prefixes()));
            }
        }
    }
    Ok(())
}
