//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error (unknown
//! system, malformed marks, invalid alpha, bad flag combination).

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::d21a::{self, D21Params};
use crate::equivalence::classify;
use crate::error::{Error, Result};
use crate::grading::{analyze, GradingSpec};
use crate::render;
use crate::rootdata::diagram;
use crate::rootdata::{Algebra, RootSystem};
use crate::verify;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Root system listing
    Roots,
    /// Classification of length-3 and length-5 gradings
    Classify,
    /// One grading given by marks on the simple roots
    Grading,
    /// G0-module components of one grading
    Modules,
    /// Relation skeleton of one grading
    Relations,
    /// Structure table of D(2,1;alpha)
    D21a,
    /// Dynkin diagram
    Diagram,
    /// Full check against the embedded reference tables
    Verify,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemArg {
    One(Algebra),
    All,
}

impl SystemArg {
    fn systems(&self) -> Vec<Algebra> {
        match self {
            SystemArg::One(a) => vec![*a],
            SystemArg::All => Algebra::ALL.to_vec(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gqs", version, about = "Z-gradings of the exceptional Lie (super)algebras")]
pub struct Args {
    pub command: Command,
    /// Algebra identifier (G2, F4, E6, E7, E8, D21A, G3, F4S) or `all`
    pub system: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Comma-separated marks on the simple roots, e.g. `-1,0,1`
    #[arg(long, allow_hyphen_values = true)]
    pub marks: Option<String>,
    /// Parameter of D(2,1;alpha) as an integer or `p/q`
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Use the extended diagram
    #[arg(long)]
    pub extended: bool,
    /// Write output to a file instead of stdout
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub system: Option<SystemArg>,
    pub format: Format,
    pub marks: Option<Vec<i32>>,
    pub alpha: Option<D21Params>,
    pub extended: bool,
    pub output: Option<PathBuf>,
}

pub fn parse_marks(s: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i32>()
                .map_err(|_| Error::Usage(format!("malformed marks `{s}`")))
        })
        .collect()
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

impl RunConfig {
    pub fn from_args(args: Args) -> Result<RunConfig> {
        use Command::*;
        let system = match args.system.as_deref() {
            None => None,
            Some(s) if s.eq_ignore_ascii_case("all") => Some(SystemArg::All),
            Some(s) => Some(SystemArg::One(s.parse()?)),
        };
        let needs_one = matches!(args.command, Grading | Modules | Relations);
        match (&system, args.command) {
            (None, Roots | Classify | Diagram | Grading | Modules | Relations) => {
                return Err(usage(format!("{:?} needs a system", args.command).to_lowercase()))
            }
            (Some(SystemArg::All), _) if needs_one => return Err(usage("marks need a single system")),
            (Some(SystemArg::One(a)), D21a) if *a != Algebra::D21A => {
                return Err(usage("d21a only applies to D21A"))
            }
            (Some(_), Verify) => return Err(usage("verify takes no system")),
            _ => {}
        }
        if args.marks.is_some() != needs_one {
            return Err(usage(if needs_one {
                "--marks is required for grading, modules and relations"
            } else {
                "--marks is only valid with grading, modules and relations"
            }));
        }
        if args.alpha.is_some() && args.command != D21a {
            return Err(usage("--alpha is only valid with d21a"));
        }
        if args.format == Format::Dot && args.command != Diagram {
            return Err(usage("--format dot is only valid with diagram"));
        }
        if args.extended && args.command != Diagram {
            return Err(usage("--extended is only valid with diagram"));
        }
        let marks = args.marks.as_deref().map(parse_marks).transpose()?;
        let alpha = args.alpha.as_deref().map(str::parse).transpose()?;
        Ok(RunConfig {
            command: args.command,
            system,
            format: args.format,
            marks,
            alpha,
            extended: args.extended,
            output: args.output,
        })
    }
}

/// Output text and exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> Result<RunOutput> {
    Ok(RunOutput { text, code: 0 })
}

pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    let systems = cfg.system.as_ref().map(SystemArg::systems).unwrap_or_default();
    match cfg.command {
        Command::Roots => {
            let mut out = String::new();
            if cfg.format == Format::Json && systems.len() > 1 {
                let all: Vec<_> = systems
                    .iter()
                    .map(|&a| render::RootSystemJson::from_system(RootSystem::shared(a)))
                    .collect();
                return ok(render::json_text(&all)?);
            }
            for (n, &a) in systems.iter().enumerate() {
                let sys = RootSystem::shared(a);
                if n > 0 && cfg.format == Format::Text {
                    out.push('\n');
                }
                out.push_str(&match cfg.format {
                    Format::Json => render::roots_json(sys)?,
                    // header row only once
                    Format::Tsv if n > 0 => render::roots_tsv(sys).split_once('\n').map_or(String::new(), |x| x.1.to_string()),
                    Format::Tsv => render::roots_tsv(sys),
                    _ => render::roots_text(sys),
                });
            }
            ok(out)
        }
        Command::Classify => {
            let mut entries = Vec::new();
            for a in systems {
                entries.extend(classify(a)?);
            }
            ok(match cfg.format {
                Format::Json => render::classification_json(&entries)?,
                Format::Tsv => render::classification_tsv(&entries),
                _ => render::classification_text(&entries),
            })
        }
        Command::Grading | Command::Modules | Command::Relations => {
            let spec = GradingSpec::new(systems[0], cfg.marks.clone().unwrap_or_default())
                .map_err(|e| usage(e.to_string()))?;
            let g = analyze(&spec);
            ok(match (cfg.command, cfg.format) {
                (Command::Grading, Format::Json) => render::grading_json(&g)?,
                (Command::Grading, Format::Tsv) => render::grading_tsv(&g),
                (Command::Grading, _) => render::grading_text(&g),
                (Command::Modules, Format::Json) => render::modules_json(&g)?,
                (Command::Modules, Format::Tsv) => render::modules_tsv(&g),
                (Command::Modules, _) => render::modules_text(&g),
                (_, Format::Json) => render::relations_json(&g)?,
                (_, Format::Tsv) => render::relations_tsv(&g),
                _ => render::relations_text(&g),
            })
        }
        Command::D21a => {
            let params = match &cfg.alpha {
                Some(p) => p.clone(),
                None => "1".parse()?,
            };
            let t = d21a::build(&params)?;
            ok(match cfg.format {
                Format::Json => render::d21a_json(&t)?,
                Format::Tsv => render::d21a_tsv(&t),
                _ => render::d21a_text(&t),
            })
        }
        Command::Diagram => {
            let mut out = String::new();
            let mut all = Vec::new();
            for a in systems {
                let sys = RootSystem::shared(a);
                let d = diagram(sys, cfg.extended);
                match cfg.format {
                    Format::Dot => out.push_str(&render::diagram_dot(&d)),
                    Format::Json => all.push(d),
                    _ => {
                        out.push_str(&format!("{}{}\n", a.display_name(), if cfg.extended { " (extended)" } else { "" }));
                        out.push_str(&render::diagram_text(&d, sys));
                    }
                }
            }
            if cfg.format == Format::Json {
                out = if all.len() == 1 {
                    render::json_text(&all[0])?
                } else {
                    render::json_text(&all)?
                };
            }
            ok(out)
        }
        Command::Verify => {
            let r = verify::verify_all();
            let text = match cfg.format {
                Format::Json => render::json_text(&r)?,
                Format::Tsv => render::verify_tsv(&r),
                _ => render::verify_text(&r),
            };
            Ok(RunOutput { text, code: r.exit_code() })
        }
    }
}

/// Parses `argv`, runs, writes output and returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let output = args.output.clone();
    let result = RunConfig::from_args(args).and_then(|cfg| run(&cfg));
    match result {
        Ok(out) => {
            let written = match &output {
                Some(path) => std::fs::write(path, &out.text).map_err(Error::from),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("gqs: {e}");
                    2
                }
            }
        }
        Err(e) => {
            eprintln!("gqs: {e}");
            2
        }
    }
}
