use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wedderburn::arith::FieldSpec;
use wedderburn::berman::{auto_subgroup, prime_index_subgroups, split, Setting};
use wedderburn::catalog::{catalog, from_json};
use wedderburn::ftheory::{f_char_table, f_classes, pcis, Context};
use wedderburn::group::Group;
use wedderburn::report;
use wedderburn::structure::simple_module_and_commutant;
use wedderburn::verify::{verify_all, Level};
use wedderburn::{Error, Result};

#[derive(Parser)]
#[command(name = "wedderburn", version, about = "Semisimple structure of group algebras F[G]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes
    Classes(Common),
    /// F-conjugacy classes
    Fclasses(Common),
    /// Absolutely irreducible characters
    Chartable(Common),
    /// F-character table
    Fchartable(Common),
    /// Primitive central idempotents of F[G]
    Pcis(Common),
    /// Wedderburn data of each component
    Wedderburn(WithPci),
    /// Splitting of the pcis of a normal subgroup of prime index
    Berman(WithSubgroup),
    /// Induced characters from a normal subgroup of prime index
    Induce(WithSubgroup),
    /// Oracles and invariant checks
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// Catalog group: NAME followed by integer parameters
    #[arg(long, num_args = 1.., value_name = "NAME [PARAMS]", conflicts_with = "group", required_unless_present = "group")]
    catalog: Option<Vec<String>>,
    /// Group description file
    #[arg(long, value_name = "FILE.json")]
    group: Option<PathBuf>,
    /// Q, Q(zeta_m) or GF(q)
    #[arg(long, default_value = "Q")]
    field: String,
    /// Seed for the randomized steps; WEDDERBURN_SEED overrides it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WithPci {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    pci: PciChoice,
}

#[derive(Args)]
struct PciChoice {
    /// Only this pci
    #[arg(long, conflicts_with = "all")]
    pci: Option<usize>,
    /// Every pci (the default)
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct WithSubgroup {
    #[command(flatten)]
    common: Common,
    /// `auto` or an index into the normal subgroups of prime index
    #[arg(long, default_value = "auto")]
    subgroup: String,
    #[command(flatten)]
    pci: PciChoice,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = VerifyLevel::Full)]
    level: VerifyLevel,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Fast,
    Full,
}

impl Common {
    fn seed(&self) -> Result<u64> {
        match std::env::var("WEDDERBURN_SEED") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("WEDDERBURN_SEED `{v}` is not an integer"))),
            Err(_) => Ok(self.seed),
        }
    }

    fn group(&self) -> Result<Group> {
        if let Some(path) = &self.group {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            return from_json(&text);
        }
        let spec = self.catalog.as_ref().expect("clap enforces a group source");
        let params = spec[1..]
            .iter()
            .map(|p| {
                p.parse::<i64>()
                    .map_err(|_| Error::BadParams(format!("`{p}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        catalog(&spec[0], &params)
    }

    fn context(&self) -> Result<(Context, u64)> {
        let field: FieldSpec = self.field.parse()?;
        let seed = self.seed()?;
        Ok((Context::new(self.group()?, &field, seed)?, seed))
    }

    fn emit(&self, v: &Value) -> Result<()> {
        let text = match self.format {
            Format::Json => serde_json::to_string_pretty(v).expect("serializable") + "\n",
            Format::Csv => report::to_csv(v),
            Format::Pretty => report::to_pretty(v),
        };
        match &self.out {
            Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn selected(choice: &PciChoice, count: usize) -> Result<Vec<usize>> {
    match choice.pci {
        Some(i) if i < count => Ok(vec![i]),
        Some(i) => Err(Error::BadParams(format!("pci {i} out of range 0..{count}"))),
        None => Ok((0..count).collect()),
    }
}

fn setting(a: &WithSubgroup) -> Result<Setting> {
    let (ctx, seed) = a.common.context()?;
    let (p, sub) = if a.subgroup == "auto" {
        auto_subgroup(&ctx.group).ok_or_else(|| Error::BadParams("no normal subgroup of prime index".into()))?
    } else {
        let i: usize = a
            .subgroup
            .parse()
            .map_err(|_| Error::BadParams(format!("subgroup `{}`", a.subgroup)))?;
        prime_index_subgroups(&ctx.group)
            .into_iter()
            .nth(i)
            .ok_or_else(|| Error::BadParams(format!("no subgroup with index {i}")))?
    };
    Setting::new(&ctx, p, sub, seed)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Classes(c) => {
            let (ctx, _) = c.context()?;
            c.emit(&report::classes(&ctx.group, &ctx.table))?;
        }
        Command::Fclasses(c) => {
            let (ctx, _) = c.context()?;
            c.emit(&report::fclasses(&ctx.group, &f_classes(&ctx)?))?;
        }
        Command::Chartable(c) => {
            let (ctx, _) = c.context()?;
            c.emit(&report::chartable(&ctx.table))?;
        }
        Command::Fchartable(c) => {
            let (ctx, _) = c.context()?;
            let fc = f_classes(&ctx)?;
            c.emit(&report::fchartable(&f_char_table(&ctx, &fc)?))?;
        }
        Command::Pcis(c) => {
            let (ctx, _) = c.context()?;
            c.emit(&Value::Array(pcis(&ctx)?.iter().map(report::pci).collect()))?;
        }
        Command::Wedderburn(a) => {
            let (ctx, seed) = a.common.context()?;
            let list = pcis(&ctx)?;
            let out = selected(&a.pci, list.len())?
                .into_iter()
                .map(|i| simple_module_and_commutant(&ctx, &list[i], seed).map(|w| report::component(&w)))
                .collect::<Result<Vec<_>>>()?;
            a.common.emit(&Value::Array(out))?;
        }
        Command::Berman(a) => {
            let s = setting(a)?;
            let out = selected(&a.pci, s.h_pcis.len())?
                .into_iter()
                .map(|i| split(&s, i).map(|r| report::berman(&s, &r)))
                .collect::<Result<Vec<_>>>()?;
            a.common
                .emit(&json!({"subgroup": report::subgroup(&s), "reports": out}))?;
        }
        Command::Induce(a) => {
            let s = setting(a)?;
            let only = match a.pci.pci {
                Some(_) => Some(selected(&a.pci, s.h_pcis.len())?[0]),
                None => None,
            };
            a.common
                .emit(&json!({"subgroup": report::subgroup(&s), "induced": report::induce_table(&s, only)}))?;
        }
        Command::Verify(a) => {
            let (ctx, seed) = a.common.context()?;
            let level = match a.level {
                VerifyLevel::Fast => Level::Fast,
                VerifyLevel::Full => Level::Full,
            };
            let (v, ok) = verify_all(&ctx, seed, level)?;
            a.common.emit(&v)?;
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            let err = json!({"kind": "VerificationFailed", "message": "some checks failed; see the report"});
            eprintln!("{err}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{}", json!({"kind": e.kind(), "message": e.to_string()}));
            ExitCode::from(1)
        }
    }
}
