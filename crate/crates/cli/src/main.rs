//! `coind-lab`: certify spec files, run the constructions, and verify the
//! adjunctions from the command line.
//!
//! Object references are either catalog names (`D4`, `Q8`, `Z2xZ4`, …) or
//! `path/to/spec.json:name`. Topological groups additionally accept
//! `D4/discrete` and `D4/indiscrete`. Exit codes: 0 verified, 1 a check
//! failed, 2 usage, parse, validation or budget error.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::rc::Rc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;

use coind_core::action::{certify_filtered, FilteredAction, GroupAction, ScfAction};
use coind_core::coinduction::{coinduce, t_infinity};
use coind_core::filtration::{lower_central_series, validate_scf, Filtration, ScfCertificate};
use coind_core::group::{catalog, enumerate_homomorphisms, GroupRef, Subgroup};
use coind_core::harness::instances::{conjugation_through, describe, Rand};
use coind_core::harness::spec_file::SpecMorphism;
use coind_core::harness::{
    oracle_max_subfiltration, parse_spec, run_suite, verify_scf_adjunction, verify_top_adjunction,
    Record, Report, SpecFile, SUITES,
};
use coind_core::topology::{check_continuous_automorphisms, t_top_infinity, TopGroup};
use coind_core::{Budget, Error, Result};

#[derive(Parser)]
#[command(
    name = "coind-lab",
    version,
    about = "Co-induction workbench for finite groups and finite topological groups"
)]
struct Cli {
    /// Largest source order for homomorphism enumeration (group-order limit becomes at least 2N).
    #[arg(long, global = true, value_name = "N")]
    budget: Option<usize>,
    /// Seed for sampled checks and randomized suites.
    #[arg(long, global = true, default_value_t = 0, value_name = "S")]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and certify every object in a spec file.
    Validate { spec: PathBuf },
    /// Lower central series of a group.
    Lcs { group: String },
    /// Transport tower and its limit for a point (`file.json:name`).
    TInfinity { point: String },
    /// Co-induce a point over `E_*` along `α: E → B`.
    Coinduce { alpha: String, point: String },
    /// Check the filtered adjunction for `α`, a point `X` over `B_*` and `Y` over `E_*`.
    VerifyAdjunction { alpha: String, x: String, y: String },
    /// Continuity tower of an action of topological groups.
    TopCoinduce {
        b: String,
        g: String,
        action: String,
    },
    /// Check the topological universal property; without an action, every
    /// conjugation-through-a-homomorphism action by continuous automorphisms.
    VerifyTop {
        b: String,
        g: String,
        action: Option<String>,
    },
    /// Compare the transport limit with the exhaustive maximum.
    Oracle { point: String },
    /// Run a seeded suite (`all` runs every suite).
    Suite { name: String },
}

/// Parsed spec files, loaded once per invocation.
#[derive(Default)]
struct Files(HashMap<String, Rc<SpecFile>>);

impl Files {
    fn split<'a>(&mut self, reference: &'a str) -> Result<Option<(Rc<SpecFile>, &'a str)>> {
        let Some((path, name)) = reference
            .rsplit_once(':')
            .filter(|(p, n)| !p.is_empty() && !n.is_empty())
        else {
            return Ok(None);
        };
        if let Some(spec) = self.0.get(path) {
            return Ok(Some((spec.clone(), name)));
        }
        let spec = Rc::new(parse_spec(path).map_err(|e| e.in_file(path))?);
        self.0.insert(path.to_string(), spec.clone());
        Ok(Some((spec, name)))
    }

    fn group(&mut self, reference: &str) -> Result<GroupRef> {
        match self.split(reference)? {
            Some((spec, name)) => spec.group(name).cloned(),
            None => catalog(reference).ok_or_else(|| Error::Unresolved {
                kind: "catalog group",
                name: reference.to_string(),
            }),
        }
    }

    fn point(&mut self, reference: &str) -> Result<FilteredAction> {
        let (spec, name) = self.split(reference)?.ok_or_else(|| {
            Error::Usage(format!(
                "points are referenced as file.json:name, got `{reference}`"
            ))
        })?;
        spec.point(name).cloned()
    }

    fn morphism(&mut self, reference: &str) -> Result<SpecMorphism> {
        let (spec, name) = self.split(reference)?.ok_or_else(|| {
            Error::Usage(format!(
                "morphisms are referenced as file.json:name, got `{reference}`"
            ))
        })?;
        spec.morphism(name).cloned()
    }

    fn topgroup(&mut self, reference: &str) -> Result<TopGroup> {
        if let Some((spec, name)) = self.split(reference)? {
            return spec.topgroup(name).cloned();
        }
        let (group, kind) = reference.split_once('/').unwrap_or((reference, "discrete"));
        let g = self.group(group)?;
        match kind {
            "discrete" => Ok(TopGroup::discrete(&g)),
            "indiscrete" => Ok(TopGroup::indiscrete(&g)),
            other => Err(Error::Usage(format!(
                "unknown topology `{other}` (discrete, indiscrete)"
            ))),
        }
    }

    fn action(&mut self, reference: &str, b: &GroupRef, g: &GroupRef) -> Result<GroupAction> {
        let action = match reference {
            "trivial" => GroupAction::trivial(b, g),
            "conjugation" if b == g => GroupAction::conjugation(g),
            "conjugation" => {
                return Err(Error::Usage(
                    "conjugation needs the actor to equal the target".into(),
                ))
            }
            _ => {
                let (spec, name) = self.split(reference)?.ok_or_else(|| {
                    Error::Usage(format!(
                        "actions are `trivial`, `conjugation` or file.json:name, got `{reference}`"
                    ))
                })?;
                spec.action(name)?.clone()
            }
        };
        if action.actor() != b || action.target() != g {
            return Err(Error::Usage(format!(
                "action `{reference}` does not act by the given groups"
            )));
        }
        Ok(action)
    }
}

trait InFile {
    fn in_file(self, path: &str) -> Error;
}

impl InFile for Error {
    fn in_file(self, path: &str) -> Error {
        match self {
            e @ Error::Parse { .. } | e @ Error::InObject { .. } => Error::InObject {
                object: path.to_string(),
                source: Box::new(e),
            },
            e => e,
        }
    }
}

fn orders(f: &Filtration) -> String {
    let o: Vec<String> = f.orders().iter().map(|x| x.to_string()).collect();
    o.join(", ")
}

fn levels(f: &Filtration) -> String {
    format!("{:?}", f.to_element_sets())
}

fn certify(point: FilteredAction, what: &str) -> Result<ScfAction> {
    certify_filtered(point)
        .map_err(|e| Error::Usage(format!("{what} is not an action of filtrations: {e}")))
}

fn validate(path: &PathBuf, budget: &Budget) -> Result<Report> {
    let spec = parse_spec(path).map_err(|e| e.in_file(&path.display().to_string()))?;
    let mut report = Report::new("validate", 0, budget);
    let mut record = Record::new("0000", path.display().to_string());
    record.count("groups", spec.groups.len());
    record.count("filtrations", spec.filtrations.len());
    record.count("actions", spec.actions.len());
    record.count("morphisms", spec.morphisms.len());
    record.count("points", spec.points.len());
    record.count("topologies", spec.topologies.len());
    record.count("topgroups", spec.topgroups.len());
    record.pass("certified");
    for (name, f) in &spec.filtrations {
        record.note(format!("filtration {name}: orders {}", orders(f)));
    }
    report.push(record);
    Ok(report)
}

fn lcs(files: &mut Files, group: &str, budget: &Budget) -> Result<Report> {
    let g = files.group(group)?;
    if g.order() > budget.group_order {
        return Err(Error::BudgetExceeded {
            what: "group order",
            needed: g.order() as u128,
            limit: budget.group_order as u128,
        });
    }
    let series = lower_central_series(&g);
    let mut report = Report::new("lcs", 0, budget);
    let mut record = Record::new("0000", group);
    record.count("length", series.len());
    record.note(format!("orders {}", orders(&series)));
    record.note(format!("levels {}", levels(&series)));
    record.pass("strongly-central");
    report.push(record);
    Ok(report)
}

fn t_infinity_cmd(files: &mut Files, point: &str, budget: &Budget) -> Result<Report> {
    let a = files.point(point)?;
    let tower = t_infinity(&a)?;
    let mut report = Report::new("t-infinity", 0, budget);
    let mut record = Record::new("0000", point);
    record.count("tower_length", tower.len());
    record.count("iterations", tower.iterations());
    for (k, level) in tower.levels().iter().enumerate() {
        record.note(format!("t^{k}: orders {}", orders(level)));
    }
    let limit = tower.limit().target_filtration();
    record.note(format!("limit levels {}", levels(limit)));
    record.pass("limit-certified");
    report.push(record);
    Ok(report)
}

/// `B_*` for a morphism: its declared target filtration, or `B` at every level.
fn target_filtration(alpha: &SpecMorphism) -> Result<ScfCertificate> {
    match &alpha.target_filtration {
        Some(f) => Ok(f.clone()),
        None => validate_scf(&Filtration::constant(Subgroup::whole(alpha.hom.target()))),
    }
}

fn coinduce_cmd(files: &mut Files, alpha: &str, point: &str, budget: &Budget) -> Result<Report> {
    let m = files.morphism(alpha)?;
    let y = certify(files.point(point)?, point)?;
    let b_f = target_filtration(&m)?;
    let co = coinduce(&m.hom, &b_f, &y, budget)?;
    let mut report = Report::new("coinduce", 0, budget);
    let mut record = Record::new("0000", format!("{alpha} {point}"));
    record.count("carrier", co.maps().carrier().order());
    record.count("tower_length", co.tower().len());
    record.count(
        "limit_order",
        co.point().target_filtration().level(1).order(),
    );
    record.note(format!("construction {:?}", co.maps().construction()));
    record.note(format!(
        "pointwise orders {}",
        orders(co.pointwise_filtration())
    ));
    record.note(format!(
        "limit orders {}",
        orders(co.point().target_filtration())
    ));
    record.pass("limit-certified");
    report.push(record);
    Ok(report)
}

fn verify_adjunction(
    files: &mut Files,
    alpha: &str,
    x: &str,
    y: &str,
    seed: u64,
    budget: &Budget,
) -> Result<Report> {
    let m = files.morphism(alpha)?;
    let x_point = certify(files.point(x)?, x)?;
    let y_point = certify(files.point(y)?, y)?;
    let mut rng = Rand::seed_from_u64(seed);
    let mut report = Report::new("verify-adjunction", seed, budget);
    let mut record = Record::new(
        "0000",
        format!(
            "α={alpha} X={x}{} Y={y}{}",
            describe(x_point.target_filtration()),
            describe(y_point.target_filtration())
        ),
    );
    verify_scf_adjunction(&m.hom, &x_point, &y_point, &mut record, &mut rng, budget)?;
    report.push(record);
    Ok(report)
}

fn top_coinduce(
    files: &mut Files,
    b: &str,
    g: &str,
    action: &str,
    budget: &Budget,
) -> Result<Report> {
    let (bt, gt) = (files.topgroup(b)?, files.topgroup(g)?);
    let act = files.action(action, bt.group(), gt.group())?;
    let tower = t_top_infinity(&bt, &gt, &act)?;
    let mut report = Report::new("top-coinduce", 0, budget);
    let mut record = Record::new("0000", format!("B={b} G={g} {action}"));
    record.count("tower_length", tower.len());
    record.count("limit_order", tower.limit_subgroup().order());
    for (k, level) in tower.levels().iter().enumerate() {
        record.note(format!(
            "level {k}: order {}, neighbourhoods {:?}",
            level.subgroup.order(),
            level.neighbourhoods_in_parent()
        ));
    }
    record.note(format!("limit elements {:?}", tower.limit_embedding()));
    record.pass("joint-continuity");
    report.push(record);
    Ok(report)
}

fn verify_top(
    files: &mut Files,
    b: &str,
    g: &str,
    action: Option<&str>,
    budget: &Budget,
) -> Result<Report> {
    let (bt, gt) = (files.topgroup(b)?, files.topgroup(g)?);
    let actions: Vec<(String, GroupAction)> = match action {
        Some(a) => vec![(a.to_string(), files.action(a, bt.group(), gt.group())?)],
        None => {
            let mut out = vec![(
                "trivial".to_string(),
                GroupAction::trivial(bt.group(), gt.group()),
            )];
            for (k, psi) in enumerate_homomorphisms(bt.group(), gt.group(), budget)?
                .iter()
                .enumerate()
            {
                let act = conjugation_through(psi)?;
                if check_continuous_automorphisms(&act, &gt).is_ok()
                    && !out.iter().any(|(_, a)| a == &act)
                {
                    out.push((
                        format!("conjugation through hom {k} {:?}", psi.table()),
                        act,
                    ));
                }
            }
            out
        }
    };
    let mut report = Report::new("verify-top", 0, budget);
    for (k, (name, act)) in actions.iter().enumerate() {
        let mut record = Record::new(format!("{k:04}"), format!("B={b} G={g} {name}"));
        verify_top_adjunction(&bt, &gt, act, &mut record, budget)?;
        report.push(record);
    }
    Ok(report)
}

fn oracle(files: &mut Files, point: &str, budget: &Budget) -> Result<Report> {
    let a = files.point(point)?;
    let tower = t_infinity(&a)?;
    let limit = tower.limit().target_filtration();
    let max = oracle_max_subfiltration(&a, 3, 8)?;
    let mut report = Report::new("oracle", 0, budget);
    let mut record = Record::new("0000", point);
    record.note(format!("limit  {}", levels(limit)));
    record.note(format!("oracle {}", levels(&max)));
    record.check("limit-equals-oracle", limit.filtration() == &max, || {
        format!("limit {}, oracle {}", levels(limit), levels(&max))
    });
    report.push(record);
    Ok(report)
}

fn suites(name: &str, seed: u64, budget: &Budget) -> Result<Vec<Report>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, seed, budget)).collect()
    } else {
        Ok(vec![run_suite(name, seed, budget)?])
    }
}

fn run(cli: &Cli) -> Result<Vec<Report>> {
    let budget = cli.budget.map(Budget::with_hom_order).unwrap_or_default();
    let mut files = Files::default();
    let one = |r: Result<Report>| r.map(|r| vec![r]);
    match &cli.command {
        Command::Validate { spec } => one(validate(spec, &budget)),
        Command::Lcs { group } => one(lcs(&mut files, group, &budget)),
        Command::TInfinity { point } => one(t_infinity_cmd(&mut files, point, &budget)),
        Command::Coinduce { alpha, point } => one(coinduce_cmd(&mut files, alpha, point, &budget)),
        Command::VerifyAdjunction { alpha, x, y } => one(verify_adjunction(
            &mut files, alpha, x, y, cli.seed, &budget,
        )),
        Command::TopCoinduce { b, g, action } => {
            one(top_coinduce(&mut files, b, g, action, &budget))
        }
        Command::VerifyTop { b, g, action } => {
            one(verify_top(&mut files, b, g, action.as_deref(), &budget))
        }
        Command::Oracle { point } => one(oracle(&mut files, point, &budget)),
        Command::Suite { name } => suites(name, cli.seed, &budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reports = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                Error::InternalFault(_) => 1,
                _ => 2,
            });
        }
    };
    let text: String = reports
        .iter()
        .map(|r| match cli.format {
            Format::Human => r.render_human(),
            Format::Machine => r.render_machine(),
        })
        .collect();
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
