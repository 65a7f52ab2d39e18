//! Command-line surface: structure-file checkers, constructors and
//! generators.
//!
//! Exit codes: 0 on pass, 1 on an axiom or construction failure, 2 on a
//! parse or shape error.

use clap::{Parser, Subcommand, ValueEnum};
use hopfheap::catalog::{
    gen_group_algebra, gen_heap_from_group, gen_sweedler, linearize_heap, GroupName, GroupTable,
};
use hopfheap::galois::{ehresmann_hopf, ehresmann_iso_left_translations, galois_from_heap};
use hopfheap::heap::heap_from_hopf;
use hopfheap::translations::{build_translations, Side};
use hopfheap::{CheckReport, GaloisCoObject, HopfHeap};
use hopfheap_cli::format::{self, FormatError, GaloisFile, StructureFile};
use hopfheap_cli::reportfile::ReportFile;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "hopfheap",
    version,
    about = "Exact checks and constructions for Hopf heap structure files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf heap axioms of a heap file
    CheckHeap {
        path: PathBuf,
        /// Write a machine-readable report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the bialgebra and antipode axioms of a Hopf file
    CheckHopf {
        path: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check the Hopf-Galois co-object conditions of a pair file
    CheckGalois {
        path: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build the translation Hopf algebra of a heap file
    Translations {
        path: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
        /// Output pair file: the heap coalgebra, the translation Hopf
        /// algebra, and its action
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compute the Grunspan map of a heap file
    Grunspan {
        path: PathBuf,
        /// Write the matrix here
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build the Ehresmann Hopf algebra of a heap file and verify the
    /// isomorphism with the left translations
    Ehresmann {
        path: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the full heap / Galois co-object round-trip check
    Roundtrip {
        path: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write catalog structure files
    Generate {
        #[command(subcommand)]
        what: GenerateCommand,
    },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// A group algebra as a Hopf file
    GroupAlgebra {
        /// One of C2, C3, C4, C5, C6, V4, S3
        #[arg(long)]
        group: String,
        /// Q or `Fp:<p>`
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The Sweedler Hopf algebra as a Hopf file
    Sweedler {
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// A linearized heap file
    Heap {
        /// One of C2, C3, C4, C5, C6, V4, S3, or sweedler
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Serialize, Deserialize)]
struct ThetaFile {
    field: hopfheap_cli::format::FieldSpecFile,
    dim: usize,
    theta: Vec<Vec<String>>,
    is_identity: bool,
}

enum CliError {
    /// Parse or shape problem: exit 2.
    Parse(String),
    /// Mathematical construction failure on well-formed input: exit 1.
    Math(String),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let (result, report_path, command_name, input) = dispatch(cli);
    match result {
        Ok(code) => code,
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            if let Some(path) = report_path {
                let report = ReportFile::error(&command_name, &input, msg);
                let _ = std::fs::write(path, format::write_json(&report));
            }
            2
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            if let Some(path) = report_path {
                let report = ReportFile::error(&command_name, &input, msg);
                let _ = std::fs::write(path, format::write_json(&report));
            }
            1
        }
    }
}

fn dispatch(cli: Cli) -> (Result<i32, CliError>, Option<PathBuf>, String, String) {
    match cli.command {
        Command::CheckHeap { path, report } => {
            let input = path.display().to_string();
            (
                cmd_check_heap(&path, report.as_deref()),
                report.clone(),
                "check-heap".into(),
                input,
            )
        }
        Command::CheckHopf { path, report } => {
            let input = path.display().to_string();
            (
                cmd_check_hopf(&path, report.as_deref()),
                report.clone(),
                "check-hopf".into(),
                input,
            )
        }
        Command::CheckGalois { path, report } => {
            let input = path.display().to_string();
            (
                cmd_check_galois(&path, report.as_deref()),
                report.clone(),
                "check-galois".into(),
                input,
            )
        }
        Command::Translations {
            path,
            side,
            output,
            report,
        } => {
            let input = path.display().to_string();
            (
                cmd_translations(&path, side, &output, report.as_deref()),
                report.clone(),
                "translations".into(),
                input,
            )
        }
        Command::Grunspan {
            path,
            output,
            report,
        } => {
            let input = path.display().to_string();
            (
                cmd_grunspan(&path, output.as_deref(), report.as_deref()),
                report.clone(),
                "grunspan".into(),
                input,
            )
        }
        Command::Ehresmann {
            path,
            output,
            report,
        } => {
            let input = path.display().to_string();
            (
                cmd_ehresmann(&path, &output, report.as_deref()),
                report.clone(),
                "ehresmann".into(),
                input,
            )
        }
        Command::Roundtrip { path, report } => {
            let input = path.display().to_string();
            (
                cmd_roundtrip(&path, report.as_deref()),
                report.clone(),
                "roundtrip".into(),
                input,
            )
        }
        Command::Generate { what } => (cmd_generate(what), None, "generate".into(), String::new()),
    }
}

fn read_structure(path: &Path) -> Result<StructureFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn read_galois(path: &Path) -> Result<GaloisFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn emit_report(
    command: &str,
    path: &Path,
    report_path: Option<&Path>,
    check: &CheckReport,
    details: Option<serde_json::Value>,
) -> Result<(), CliError> {
    if let Some(rp) = report_path {
        let mut file = ReportFile::from_check(command, &path.display().to_string(), check);
        if let Some(d) = details {
            file = file.with_details(d);
        }
        write_file(rp, &format::write_json(&file))?;
    }
    Ok(())
}

fn verdict(check: &CheckReport) -> i32 {
    println!("{check}");
    if check.passed() {
        0
    } else {
        1
    }
}

/// Loads a heap file and runs the coalgebra and heap axiom checks, returning
/// the first failing report.
fn load_checked_heap(path: &Path) -> Result<(HopfHeap, CheckReport), CliError> {
    let heap = read_structure(path)?.to_heap()?;
    let coalgebra_report = heap.coalgebra.check();
    if !coalgebra_report.passed() {
        return Ok((heap, coalgebra_report));
    }
    let report = heap.check();
    Ok((heap, report))
}

fn cmd_check_heap(path: &Path, report_path: Option<&Path>) -> Result<i32, CliError> {
    let (_, check) = load_checked_heap(path)?;
    emit_report("check-heap", path, report_path, &check, None)?;
    Ok(verdict(&check))
}

fn cmd_check_hopf(path: &Path, report_path: Option<&Path>) -> Result<i32, CliError> {
    let hopf = read_structure(path)?.to_hopf()?;
    let check = hopf.check();
    emit_report("check-hopf", path, report_path, &check, None)?;
    Ok(verdict(&check))
}

fn cmd_check_galois(path: &Path, report_path: Option<&Path>) -> Result<i32, CliError> {
    let galois = read_galois(path)?.to_galois()?;
    let mut check = galois.module_coalgebra().check();
    if check.passed() {
        check = galois.hopf().check();
    }
    if check.passed() {
        check = galois.check();
    }
    emit_report("check-galois", path, report_path, &check, None)?;
    Ok(verdict(&check))
}

fn cmd_translations(
    path: &Path,
    side: SideArg,
    output: &Path,
    report_path: Option<&Path>,
) -> Result<i32, CliError> {
    let (heap, check) = load_checked_heap(path)?;
    if !check.passed() {
        emit_report("translations", path, report_path, &check, None)?;
        return Ok(verdict(&check));
    }
    let side = match side {
        SideArg::Right => Side::Right,
        SideArg::Left => Side::Left,
    };
    let trans = build_translations(&heap, side).map_err(|e| CliError::Math(e.to_string()))?;
    let pair = GaloisCoObject::new(
        heap.coalgebra.clone(),
        trans.hopf().clone(),
        trans.action().clone(),
    )
    .map_err(|e| CliError::Math(e.to_string()))?;
    write_file(output, &format::write_json(&format::from_galois(&pair)))?;
    println!("translation Hopf algebra dimension: {}", trans.dim());
    let check = CheckReport::pass("translations");
    emit_report(
        "translations",
        path,
        report_path,
        &check,
        Some(serde_json::json!({ "dimension": trans.dim() })),
    )?;
    Ok(0)
}

fn cmd_grunspan(
    path: &Path,
    output: Option<&Path>,
    report_path: Option<&Path>,
) -> Result<i32, CliError> {
    let (heap, check) = load_checked_heap(path)?;
    if !check.passed() {
        emit_report("grunspan", path, report_path, &check, None)?;
        return Ok(verdict(&check));
    }
    let theta = heap
        .grunspan_map()
        .map_err(|e| CliError::Math(e.to_string()))?;
    let rows: Vec<Vec<String>> = (0..theta.rows())
        .map(|i| {
            theta
                .row(i)
                .iter()
                .map(|s| s.to_canonical_string())
                .collect()
        })
        .collect();
    let is_identity = theta.is_identity();
    println!(
        "grunspan map: {}",
        if is_identity {
            "identity"
        } else {
            "not the identity"
        }
    );
    for row in &rows {
        println!("  [{}]", row.join(", "));
    }
    if let Some(out) = output {
        let file = ThetaFile {
            field: format::field_to_file(heap.field()),
            dim: heap.dim(),
            theta: rows.clone(),
            is_identity,
        };
        write_file(out, &format::write_json(&file))?;
    }
    let check = CheckReport::pass("grunspan");
    emit_report(
        "grunspan",
        path,
        report_path,
        &check,
        Some(serde_json::json!({ "is_identity": is_identity, "theta": rows })),
    )?;
    Ok(0)
}

fn cmd_ehresmann(path: &Path, output: &Path, report_path: Option<&Path>) -> Result<i32, CliError> {
    let (heap, check) = load_checked_heap(path)?;
    if !check.passed() {
        emit_report("ehresmann", path, report_path, &check, None)?;
        return Ok(verdict(&check));
    }
    let galois = galois_from_heap(&heap).map_err(|e| CliError::Math(e.to_string()))?;
    let ehresmann = ehresmann_hopf(&galois).map_err(|e| CliError::Math(e.to_string()))?;
    let left = build_translations(&heap, Side::Left).map_err(|e| CliError::Math(e.to_string()))?;
    ehresmann_iso_left_translations(&ehresmann, &left)
        .map_err(|e| CliError::Math(e.to_string()))?;
    let mut file = format::from_hopf(&ehresmann.hopf);
    file.quotient_of = Some(path.display().to_string());
    write_file(output, &format::write_json(&file))?;
    println!(
        "Ehresmann Hopf algebra dimension {}; isomorphism with the left translation Hopf algebra verified",
        ehresmann.dim()
    );
    let check = CheckReport::pass("ehresmann");
    emit_report(
        "ehresmann",
        path,
        report_path,
        &check,
        Some(serde_json::json!({ "dimension": ehresmann.dim(), "left_iso_verified": true })),
    )?;
    Ok(0)
}

fn cmd_roundtrip(path: &Path, report_path: Option<&Path>) -> Result<i32, CliError> {
    let (heap, check) = load_checked_heap(path)?;
    if !check.passed() {
        emit_report("roundtrip", path, report_path, &check, None)?;
        return Ok(verdict(&check));
    }
    let check =
        hopfheap::galois::roundtrip_check(&heap, &[]).map_err(|e| CliError::Math(e.to_string()))?;
    emit_report("roundtrip", path, report_path, &check, None)?;
    Ok(verdict(&check))
}

fn cmd_generate(what: GenerateCommand) -> Result<i32, CliError> {
    match what {
        GenerateCommand::GroupAlgebra {
            group,
            field,
            output,
        } => {
            let name = GroupName::parse(&group)
                .ok_or_else(|| CliError::Parse(format!("unknown group {group:?}")))?;
            let field = format::field_from_flag(&field)?;
            let hopf = gen_group_algebra(name, field);
            write_file(&output, &format::write_json(&format::from_hopf(&hopf)))?;
            println!(
                "wrote group algebra {} over {field} (dim {})",
                name.as_str(),
                hopf.dim()
            );
        }
        GenerateCommand::Sweedler { field, output } => {
            let field = format::field_from_flag(&field)?;
            let hopf = gen_sweedler(field)
                .map_err(|e| CliError::Parse(e.to_string()))?
                .with_solved_antipode()
                .ok_or_else(|| CliError::Math("Sweedler antipode solve failed".into()))?;
            write_file(&output, &format::write_json(&format::from_hopf(&hopf)))?;
            println!("wrote Sweedler Hopf algebra over {field} (dim 4)");
        }
        GenerateCommand::Heap {
            group,
            field,
            output,
        } => {
            let field = format::field_from_flag(&field)?;
            let heap = if group.eq_ignore_ascii_case("sweedler") {
                let hopf = gen_sweedler(field)
                    .map_err(|e| CliError::Parse(e.to_string()))?
                    .with_solved_antipode()
                    .ok_or_else(|| CliError::Math("Sweedler antipode solve failed".into()))?;
                heap_from_hopf(&hopf).map_err(|e| CliError::Math(e.to_string()))?
            } else {
                let name = GroupName::parse(&group)
                    .ok_or_else(|| CliError::Parse(format!("unknown group {group:?}")))?;
                linearize_heap(&gen_heap_from_group(&GroupTable::for_name(name)), field)
            };
            write_file(&output, &format::write_json(&format::from_heap(&heap)))?;
            println!("wrote heap over {field} (dim {})", heap.dim());
        }
    }
    Ok(0)
}
