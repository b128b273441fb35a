//! Subcommand parsing and dispatch.
//!
//! Exit codes: 0 when every check passes or a query is answered, 1 when a
//! check fails or a counterexample is found, 2 on input errors.

use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use doxa_core::beliefs::{audit_axioms, check_axiom_correspondence, check_b1, check_b1_per_measure, AxiomReport, B1Outcome, CredalSet};
use doxa_core::decisions::{agreement_check, satisfies_gstp, GstpOutcome, GstpReport};
use doxa_core::frames::{check_relation_properties, check_structure_properties, verify_frame_theorems};
use doxa_core::games::{C1Mode, C1Outcome, TheoremStatus};
use doxa_core::group::{group_relation, is_common_information, verify_group_proposition};
use doxa_core::rational::format_rational;
use doxa_core::search::{
    enumerate_relations, random_relations, search_agreement_counterexample, SearchConfig, PRNG_ID,
};
use doxa_core::{blindspots, info_from_relation, Check, Event, InfoStructure, Outcome, Relation, Report, StateSpace};
use serde_json::{json, Value};

use crate::dot::{export_dot, DotOptions};
use crate::files::{load_any, load_game, load_model, to_json, Form, Game, Input, InputError, Model};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "doxa", version, about = "Verify finite belief structures with exact arithmetic")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormArg {
    Relation,
    Info,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Serial/transitive/Euclidean and viable/inclusive/mutual, with the correspondence checks.
    CheckFrame {
        file: String,
        #[arg(long)]
        player: Option<String>,
    },
    /// Rewrite a model file with every player as a relation or as an info map.
    Convert {
        file: String,
        #[arg(long, value_enum)]
        to: FormArg,
    },
    /// States no state can access.
    Blindspots {
        file: String,
        #[arg(long)]
        player: Option<String>,
    },
    /// Group information sets and the group-relation checks.
    GroupInfo {
        file: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Whether an event contains the group information set at a state.
    CommonInfo {
        file: String,
        /// Comma-separated state labels.
        #[arg(long, allow_hyphen_values = true)]
        event: String,
        #[arg(long)]
        at: String,
    },
    /// The generalized sure-thing principle for the model's decision function.
    Gstp {
        file: String,
        #[arg(long)]
        player: Option<String>,
    },
    /// Agreement hypotheses and conclusion at a state.
    Agree {
        file: String,
        /// Defaults to the file's `actual` state.
        #[arg(long)]
        at: Option<String>,
    },
    /// Audit N, K, D, 4, 5 for each player's belief operator.
    Axioms {
        file: String,
        #[arg(long)]
        player: Option<String>,
    },
    /// Blindspot/credal consistency, and for game files type/measure consistency.
    CredalCheck {
        file: String,
        /// Require every single measure to vanish exactly on the blindspots.
        #[arg(long)]
        per_measure: bool,
        /// For game files: one measure must match each type on every profile at once.
        #[arg(long)]
        per_type: bool,
    },
    /// Write the model file of a game's induced extension.
    Extend { file: String },
    /// KD45 audit; for game files, with the theorem's hypotheses.
    Kd45 { file: String },
    /// Type probability grading the access from one state to another.
    Degree {
        file: String,
        #[arg(long)]
        player: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// List or count relations on `w1..wn`.
    Enumerate {
        #[arg(long)]
        states: usize,
        /// Keep only relations whose information structure is divisible.
        #[arg(long)]
        divisible: bool,
        #[arg(long)]
        count: bool,
        /// Draw this many random relations instead of enumerating.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for agreement failures when blindspots differ.
    SearchCounterexample {
        #[arg(long, default_value_t = 1)]
        min_states: usize,
        #[arg(long, default_value_t = 3)]
        max_states: usize,
        /// Restrict to equal blindspots; the theorem says nothing is found.
        #[arg(long)]
        equal_blindspots: bool,
        /// Skip the built-in two-state witness.
        #[arg(long)]
        no_builtin: bool,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Graphviz rendering of the relations.
    Dot {
        file: String,
        #[arg(long)]
        player: Option<String>,
        #[arg(long)]
        merged: bool,
        /// Label edges with type probabilities (game files).
        #[arg(long)]
        degrees: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(InputError),
    Usage(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<doxa_core::Error> for Failure {
    fn from(e: doxa_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CommandResult = Result<(i32, String), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Invocation { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Invocation { code, stdout, stderr: String::new() },
        Err(Failure::Input(e)) => Invocation { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") },
        Err(Failure::Usage(e)) => Invocation { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn exit(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn player_index(players: &[String], name: &str) -> Result<usize, Failure> {
    players.iter().position(|p| p == name).ok_or_else(|| usage(format!("unknown player `{name}`")))
}

fn selected(players: &[String], player: &Option<String>) -> Result<Vec<usize>, Failure> {
    match player {
        Some(name) => Ok(vec![player_index(players, name)?]),
        None => Ok((0..players.len()).collect()),
    }
}

fn state_index(space: &StateSpace, label: &str) -> Result<usize, Failure> {
    space.index_of(label).map_err(|e| usage(e.to_string()))
}

fn parse_event(space: &StateSpace, text: &str) -> Result<Event, Failure> {
    let labels: Vec<&str> = text.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
    space.event(&labels).map_err(|e| usage(e.to_string()))
}

fn render_labels(space: &StateSpace, e: &Event) -> Vec<String> {
    space.event_labels(e).into_iter().map(String::from).collect()
}

fn report_json(report: &Report) -> Value {
    Value::Array(
        report
            .lines
            .iter()
            .map(|l| match &l.outcome {
                Outcome::Pass => json!({"name": l.name, "outcome": "pass"}),
                Outcome::Fail { witness } => json!({"name": l.name, "outcome": "fail", "witness": witness}),
                Outcome::HypothesisNotMet { reason } => {
                    json!({"name": l.name, "outcome": "hypothesis-not-met", "reason": reason})
                }
            })
            .collect(),
    )
}

fn json_out(value: Value) -> String {
    to_json(&value)
}

fn dispatch(cli: &Cli) -> CommandResult {
    let json = cli.json;
    match &cli.command {
        Command::CheckFrame { file, player } => check_frame(&load_model(file)?, player, json),
        Command::Convert { file, to } => {
            let form = match to {
                FormArg::Relation => Form::Relation,
                FormArg::Info => Form::Info,
            };
            Ok((EXIT_OK, to_json(&load_model(file)?.to_file(Some(form)))))
        }
        Command::Blindspots { file, player } => blindspots_cmd(&load_model(file)?, player, json),
        Command::GroupInfo { file, at } => group_info_cmd(&load_model(file)?, at, json),
        Command::CommonInfo { file, event, at } => {
            let model = load_model(file)?;
            let space = model.space();
            let e = parse_event(space, event)?;
            let state = state_index(space, at)?;
            let common = is_common_information(&model.profile, &e, state);
            let group = group_relation(&model.profile).successors(state).clone();
            let outside = &group - &e;
            let text = if json {
                json_out(json!({
                    "state": at,
                    "event": render_labels(space, &e),
                    "group_information": render_labels(space, &group),
                    "common_information": common,
                    "outside": render_labels(space, &outside),
                }))
            } else {
                let mut out = format!("group information at {at}: {}\n", space.render(&group));
                match outside.first() {
                    None => writeln!(out, "{} is common information at {at}", space.render(&e)).unwrap(),
                    Some(v) => writeln!(
                        out,
                        "{} is not common information at {at}: {} is reachable but outside",
                        space.render(&e),
                        space.label(v)
                    )
                    .unwrap(),
                }
                out
            };
            Ok((exit(common), text))
        }
        Command::Gstp { file, player } => gstp_cmd(&load_model(file)?, player, json),
        Command::Agree { file, at } => agree_cmd(&load_model(file)?, at, json),
        Command::Axioms { file, player } => axioms_cmd(&load_model(file)?, player, json),
        Command::CredalCheck { file, per_measure, per_type } => match load_any(file)? {
            Input::Model(model) => credal_model(&model, *per_measure, json),
            Input::Game(game) => credal_game(&game, *per_measure, *per_type, json),
        },
        Command::Extend { file } => Ok((EXIT_OK, to_json(&load_game(file)?.to_model().to_file(None)))),
        Command::Kd45 { file } => match load_any(file)? {
            Input::Model(model) => kd45_model(&model, json),
            Input::Game(game) => kd45_game(&game, json),
        },
        Command::Degree { file, player, from, to } => {
            let game = load_game(file)?;
            let p = player_index(game.players(), player)?;
            let a = state_index(game.space(), from)?;
            let b = state_index(game.space(), to)?;
            let degree = format_rational(&game.model.accessibility_degree(p, a, b)?);
            let text = if json {
                json_out(json!({"player": player, "from": from, "to": to, "degree": degree}))
            } else {
                format!("{degree}\n")
            };
            Ok((EXIT_OK, text))
        }
        Command::Enumerate { states, divisible, count, random, seed } => {
            enumerate_cmd(*states, *divisible, *count, *random, *seed, json)
        }
        Command::SearchCounterexample { min_states, max_states, equal_blindspots, no_builtin, budget } => {
            let config = SearchConfig {
                include_builtin: !no_builtin,
                min_n: *min_states,
                max_n: *max_states,
                equal_blindspots: *equal_blindspots,
                budget: *budget,
            };
            search_cmd(&config, json)
        }
        Command::Dot { file, player, merged, degrees } => {
            let (model, game) = match load_any(file)? {
                Input::Model(model) => (model, None),
                Input::Game(game) => (game.to_model(), Some(game)),
            };
            if *degrees && game.is_none() {
                return Err(usage("--degrees needs a game file"));
            }
            let player = player.as_ref().map(|p| player_index(model.players(), p)).transpose()?;
            let options = DotOptions { player, merged: *merged };
            let extension = if *degrees { game.as_ref().map(|g| &g.model) } else { None };
            Ok((EXIT_OK, export_dot(&model.profile, &options, extension)))
        }
    }
}

fn triple(space: &StateSpace, (a, b, c): (usize, usize, usize)) -> String {
    format!("({}, {}, {})", space.label(a), space.label(b), space.label(c))
}

fn flag<W>(check: &Check<W>, show: impl Fn(&W) -> String) -> String {
    match check.witness() {
        None => "yes".into(),
        Some(w) => format!("no, witness {}", show(w)),
    }
}

fn check_frame(model: &Model, player: &Option<String>, json: bool) -> CommandResult {
    let space = model.space();
    let mut ok = true;
    let mut text = String::new();
    let mut items = Vec::new();
    for p in selected(model.players(), player)? {
        let rel = model.relation(p);
        let r = check_relation_properties(&rel);
        let s = check_structure_properties(&info_from_relation(&rel));
        let report = verify_frame_theorems(&rel);
        ok &= report.all_passed();
        let state = |w: &usize| space.label(*w).to_string();
        let tri = |w: &(usize, usize, usize)| triple(space, *w);
        if json {
            items.push(json!({
                "player": model.players()[p],
                "serial": r.serial.holds(), "transitive": r.transitive.holds(), "euclidean": r.euclidean.holds(),
                "viable": s.viable.holds(), "inclusive": s.inclusive.holds(), "mutual": s.mutual.holds(),
                "divisible": s.divisible, "partitional": s.partitional,
                "checks": report_json(&report),
            }));
            continue;
        }
        writeln!(text, "player {}", model.players()[p]).unwrap();
        writeln!(text, "  serial: {}", flag(&r.serial, state)).unwrap();
        writeln!(text, "  transitive: {}", flag(&r.transitive, tri)).unwrap();
        writeln!(text, "  euclidean: {}", flag(&r.euclidean, tri)).unwrap();
        writeln!(text, "  viable: {}", flag(&s.viable, state)).unwrap();
        writeln!(text, "  inclusive: {}", flag(&s.inclusive, tri)).unwrap();
        writeln!(text, "  mutual: {}", flag(&s.mutual, tri)).unwrap();
        writeln!(text, "  divisible: {}", if s.divisible { "yes" } else { "no" }).unwrap();
        writeln!(text, "  partitional: {}", if s.partitional { "yes" } else { "no" }).unwrap();
        write!(text, "{report}").unwrap();
    }
    if json {
        text = json_out(Value::Array(items));
    }
    Ok((exit(ok), text))
}

fn blindspots_cmd(model: &Model, player: &Option<String>, json: bool) -> CommandResult {
    let space = model.space();
    let chosen = selected(model.players(), player)?;
    let sets: Vec<Event> = chosen.iter().map(|&p| blindspots(model.profile.structure(p))).collect();
    let text = if json {
        json_out(Value::Object(
            chosen
                .iter()
                .zip(&sets)
                .map(|(&p, b)| (model.players()[p].clone(), json!(render_labels(space, b))))
                .collect(),
        ))
    } else {
        let show = |b: &Event| if b.is_empty() { "(none)".to_string() } else { space.event_labels(b).join(", ") };
        if player.is_some() {
            format!("{}\n", show(&sets[0]))
        } else {
            chosen.iter().zip(&sets).map(|(&p, b)| format!("{}: {}\n", model.players()[p], show(b))).collect()
        }
    };
    Ok((EXIT_OK, text))
}

fn group_info_cmd(model: &Model, at: &Option<String>, json: bool) -> CommandResult {
    let space = model.space();
    let group = group_relation(&model.profile);
    let states = match at {
        Some(label) => vec![state_index(space, label)?],
        None => (0..space.len()).collect(),
    };
    let report = verify_group_proposition(&model.profile);
    let text = if json {
        let sets: serde_json::Map<String, Value> = states
            .iter()
            .map(|&s| (space.label(s).to_string(), json!(render_labels(space, group.successors(s)))))
            .collect();
        json_out(json!({"group_information": sets, "checks": report_json(&report)}))
    } else {
        let mut out = String::new();
        for &s in &states {
            writeln!(out, "{}: {}", space.label(s), space.render(group.successors(s))).unwrap();
        }
        write!(out, "{report}").unwrap();
        out
    };
    Ok((exit(report.all_passed()), text))
}

fn gstp_line(space: &StateSpace, report: &GstpReport) -> String {
    match &report.outcome {
        GstpOutcome::Pass => format!("holds ({} scan)", report.mode),
        GstpOutcome::Counterexample { subset, decision, union_decision } => format!(
            "fails on {}: each case decides {decision}, the union decides {union_decision}",
            space.render(subset)
        ),
    }
}

fn gstp_cmd(model: &Model, player: &Option<String>, json: bool) -> CommandResult {
    let f = model.decision.as_ref().ok_or_else(|| usage("the model has no decision function"))?;
    let space = model.space();
    let mut ok = true;
    let mut text = String::new();
    let mut items = Vec::new();
    for p in selected(model.players(), player)? {
        let report = satisfies_gstp(f, model.profile.structure(p))?;
        ok &= report.passed();
        if json {
            let mut item = json!({"player": model.players()[p], "mode": report.mode.to_string(), "holds": report.passed()});
            if let GstpOutcome::Counterexample { subset, decision, union_decision } = &report.outcome {
                item["subset"] = json!(render_labels(space, subset));
                item["decision"] = json!(decision.to_string());
                item["union_decision"] = json!(union_decision.to_string());
            }
            items.push(item);
        } else {
            writeln!(text, "player {}: {}", model.players()[p], gstp_line(space, &report)).unwrap();
        }
    }
    if json {
        text = json_out(Value::Array(items));
    }
    Ok((exit(ok), text))
}

fn agree_cmd(model: &Model, at: &Option<String>, json: bool) -> CommandResult {
    let f = model.decision.as_ref().ok_or_else(|| usage("the model has no decision function"))?;
    let space = model.space();
    let state = match at {
        Some(label) => state_index(space, label)?,
        None => model.actual.ok_or_else(|| usage("give --at or an `actual` state in the file"))?,
    };
    let r = agreement_check(&model.profile, f, state)?;
    let players = model.players();
    let ok = r.hypotheses_hold() && r.all_equal;
    if json {
        let value = json!({
            "state": space.label(state),
            "decisions": players.iter().zip(&r.decisions).map(|(p, d)| json!({"player": p, "decision": d.to_string()})).collect::<Vec<_>>(),
            "divisible": r.divisible,
            "equal_blindspots": r.equal_blindspots,
            "gstp": r.gstp.iter().map(GstpReport::passed).collect::<Vec<_>>(),
            "group_information": render_labels(space, &r.group_info),
            "common_information": r.common_information,
            "all_equal": r.all_equal,
            "hypotheses_hold": r.hypotheses_hold(),
            "theorem_violated": r.theorem_violated(),
        });
        return Ok((exit(ok), json_out(value)));
    }
    let mut out = format!("at {}\n", space.label(state));
    for (p, d) in players.iter().zip(&r.decisions) {
        writeln!(out, "  d[{p}] = {d}").unwrap();
    }
    let mut hyp = Report::new();
    hyp.check(
        "hypothesis divisible",
        r.divisible.iter().position(|d| !d).map(|p| format!("player {} is not divisible", players[p])),
    );
    hyp.check(
        "hypothesis equal-blindspots",
        r.blindspot_witness.map(|(a, b)| {
            let show = |p: usize| space.render(&blindspots(model.profile.structure(p)));
            format!("player {} has {}, player {} has {}", players[a], show(a), players[b], show(b))
        }),
    );
    hyp.check(
        "hypothesis sure-thing principle",
        r.gstp
            .iter()
            .position(|g| !g.passed())
            .map(|p| format!("player {}: {}", players[p], gstp_line(space, &r.gstp[p]))),
    );
    hyp.check(
        "hypothesis common information",
        r.common_information_witness.map(|(p, v)| {
            format!("{} is reachable but player {} decides differently there", space.label(v), players[p])
        }),
    );
    write!(out, "{hyp}").unwrap();
    for line in hyp.failures() {
        let name = line.name.trim_start_matches("hypothesis ");
        writeln!(out, "hypothesis {name} violated").unwrap();
    }
    let verdict = if r.all_equal {
        "decisions agree"
    } else if r.hypotheses_hold() {
        "decisions differ although every hypothesis holds"
    } else {
        "decisions differ"
    };
    writeln!(out, "{verdict}").unwrap();
    Ok((exit(ok), out))
}

fn axiom_lines(space: &StateSpace, audit: &AxiomReport) -> Vec<(&'static str, Option<String>)> {
    let single = |c: &Check<Event>| c.witness().map(|e| format!("fails for E = {}", space.render(e)));
    vec![
        ("N", audit.n.witness().map(|_| "fails: B(Ω) ≠ Ω".to_string())),
        ("K", audit.k.witness().map(|(e, f)| format!("fails for E = {}, F = {}", space.render(e), space.render(f)))),
        ("D", single(&audit.d)),
        ("4", single(&audit.four)),
        ("5", single(&audit.five)),
    ]
}

fn axioms_cmd(model: &Model, player: &Option<String>, json: bool) -> CommandResult {
    let space = model.space();
    let mut ok = true;
    let mut text = String::new();
    let mut items = Vec::new();
    for p in selected(model.players(), player)? {
        let info = model.profile.structure(p);
        let audit = audit_axioms(info);
        let report = check_axiom_correspondence(info);
        ok &= report.all_passed();
        let lines = axiom_lines(space, &audit);
        if json {
            let axioms: serde_json::Map<String, Value> = lines
                .iter()
                .map(|(name, w)| (name.to_string(), json!({"holds": w.is_none(), "witness": w})))
                .collect();
            items.push(json!({
                "player": model.players()[p],
                "mode": audit.mode.to_string(),
                "axioms": axioms,
                "kd45": audit.is_kd45(),
                "checks": report_json(&report),
            }));
            continue;
        }
        writeln!(text, "player {} ({} audit)", model.players()[p], audit.mode).unwrap();
        for (name, w) in &lines {
            writeln!(text, "  {name}: {}", w.as_deref().unwrap_or("holds")).unwrap();
        }
        writeln!(text, "  KD45: {}", if audit.is_kd45() { "yes" } else { "no" }).unwrap();
        write!(text, "{report}").unwrap();
    }
    if json {
        text = json_out(Value::Array(items));
    }
    Ok((exit(ok), text))
}

fn b1_text(space: &StateSpace, outcome: &B1Outcome) -> Option<String> {
    match outcome {
        B1Outcome::Pass => None,
        B1Outcome::Violation { state, measure, direction } => Some(match measure {
            Some(m) => format!("{} under measure {m} ({direction})", space.label(*state)),
            None => format!("{} ({direction})", space.label(*state)),
        }),
    }
}

fn credal_report(
    space: &StateSpace,
    players: &[String],
    structures: &[InfoStructure],
    credal: &[Option<CredalSet>],
    per_measure: bool,
) -> Result<(Report, bool), Failure> {
    if credal.iter().all(Option::is_none) {
        return Err(usage("the file has no credal sets"));
    }
    let mut report = Report::new();
    let mut ok = true;
    for (p, name) in players.iter().enumerate() {
        let Some(set) = &credal[p] else {
            report.not_met(format!("player {name}: B1"), "no credal set");
            continue;
        };
        let joint = check_b1(set, &structures[p])?;
        let strict = check_b1_per_measure(set, &structures[p])?;
        ok &= if per_measure { strict.passed() } else { joint.passed() };
        report.check(format!("player {name}: B1"), b1_text(space, &joint));
        report.check(format!("player {name}: B1 per measure"), b1_text(space, &strict));
    }
    Ok((report, ok))
}

fn credal_model(model: &Model, per_measure: bool, json: bool) -> CommandResult {
    let (report, ok) = credal_report(model.space(), model.players(), model.profile.structures(), &model.credal, per_measure)?;
    let text = if json { json_out(report_json(&report)) } else { report.to_string() };
    Ok((exit(ok), text))
}

fn credal_game(game: &Game, per_measure: bool, per_type: bool, json: bool) -> CommandResult {
    let model = game.to_model();
    let (mut report, mut ok) = credal_report(game.space(), game.players(), model.profile.structures(), &game.credal, per_measure)?;
    let mode = if per_type { C1Mode::PerType } else { C1Mode::PerProfile };
    for (p, name) in game.players().iter().enumerate() {
        let Some(set) = &game.credal[p] else {
            report.not_met(format!("player {name}: C1"), "no credal set");
            continue;
        };
        let c1 = game.model.check_c1_for(p, set, mode)?;
        ok &= c1.passed();
        report.check(format!("player {name}: C1"), c1_text(game, &c1));
    }
    let text = if json { json_out(report_json(&report)) } else { report.to_string() };
    Ok((exit(ok), text))
}

fn c1_text(game: &Game, outcome: &C1Outcome) -> Option<String> {
    match outcome {
        C1Outcome::Pass => None,
        C1Outcome::Violation { player, type_index, profile } => Some(match profile {
            Some(b) => format!(
                "no measure gives ⟦{}⟧ the probability type {type_index} assigns",
                game.model.game().opponent_key(*player, *b)
            ),
            None => format!("no single measure matches type {type_index}"),
        }),
    }
}

fn kd45_model(model: &Model, json: bool) -> CommandResult {
    let space = model.space();
    let mut ok = true;
    let mut report = Report::new();
    for (p, name) in model.players().iter().enumerate() {
        let audit = audit_axioms(model.profile.structure(p));
        ok &= audit.is_kd45();
        for (axiom, w) in axiom_lines(space, &audit) {
            report.check(format!("player {name}: {axiom}"), w);
        }
    }
    let text = if json { json_out(report_json(&report)) } else { report.to_string() };
    Ok((exit(ok), text))
}

fn kd45_game(game: &Game, json: bool) -> CommandResult {
    let Some(credals) = game.credal.iter().cloned().collect::<Option<Vec<_>>>() else {
        let mut ok = true;
        let mut report = Report::new();
        for (p, name) in game.players().iter().enumerate() {
            let audit = audit_axioms(&info_from_relation(&game.model.relation_from_types(p)));
            ok &= audit.is_kd45();
            report.not_met(format!("player {name}: hypotheses"), "no credal set for every player");
            for (axiom, w) in axiom_lines(game.space(), &audit) {
                report.check(format!("player {name}: {axiom}"), w);
            }
        }
        let text = if json { json_out(report_json(&report)) } else { report.to_string() };
        return Ok((exit(ok), text));
    };
    let theorem = game.model.verify_extension_theorem(&credals)?;
    let report = theorem.to_report(&game.model);
    let ok = theorem.players.iter().all(|p| p.axioms.is_kd45());
    let status = |s: TheoremStatus| match s {
        TheoremStatus::Verified => "verified",
        TheoremStatus::HypothesisNotMet => "hypothesis not met",
        TheoremStatus::ConclusionFailed => "conclusion failed",
    };
    let text = if json {
        let players: Vec<Value> = theorem
            .players
            .iter()
            .map(|p| {
                json!({
                    "player": game.players()[p.player],
                    "status": status(p.status),
                    "kd45": p.axioms.is_kd45(),
                    "mode": p.axioms.mode.to_string(),
                })
            })
            .collect();
        json_out(json!({"players": players, "checks": report_json(&report)}))
    } else {
        let mut out = report.to_string();
        for p in &theorem.players {
            writeln!(out, "player {}: {}", game.players()[p.player], status(p.status)).unwrap();
        }
        out
    };
    Ok((exit(ok), text))
}

fn render_relation(rel: &Relation) -> String {
    let space = rel.space();
    let pairs: Vec<String> = rel.pairs().map(|(a, b)| format!("({}, {})", space.label(a), space.label(b))).collect();
    format!("{{{}}}", pairs.join(", "))
}

fn enumerate_cmd(n: usize, divisible: bool, count: bool, random: Option<usize>, seed: u64, json: bool) -> CommandResult {
    let keep = |r: &Relation| !divisible || check_structure_properties(&info_from_relation(r)).divisible;
    let relations: Box<dyn Iterator<Item = Relation>> = match random {
        Some(k) => Box::new(random_relations(&StateSpace::numbered(n)?, k, seed).into_iter()),
        None => Box::new(enumerate_relations(n)?),
    };
    let mut out = String::new();
    if random.is_some() && !json {
        writeln!(out, "# generator {PRNG_ID}, seed {seed}").unwrap();
    }
    let mut total = 0usize;
    let mut listed = Vec::new();
    for r in relations.filter(|r| keep(r)) {
        total += 1;
        if count {
            continue;
        }
        if json {
            let space = r.space();
            listed.push(json!(r.pairs().map(|(a, b)| [space.label(a), space.label(b)]).collect::<Vec<_>>()));
        } else {
            writeln!(out, "{}", render_relation(&r)).unwrap();
        }
    }
    if json {
        let mut value = json!({"states": n, "count": total});
        if random.is_some() {
            value["generator"] = json!(PRNG_ID);
            value["seed"] = json!(seed);
        }
        if !count {
            value["relations"] = Value::Array(listed);
        }
        out = json_out(value);
    } else if count {
        writeln!(out, "{total}").unwrap();
    }
    Ok((EXIT_OK, out))
}

fn search_cmd(config: &SearchConfig, json: bool) -> CommandResult {
    let found = search_agreement_counterexample(config)?;
    let Some(cx) = found else {
        let text = if json {
            json_out(json!({"found": false}))
        } else {
            "no counterexample found\n".to_string()
        };
        return Ok((EXIT_OK, text));
    };
    let instance = &cx.instance;
    let model = Model {
        profile: instance.profile.clone(),
        forms: vec![Form::Info; instance.profile.players().len()],
        credal: vec![None; instance.profile.players().len()],
        decision: Some(instance.decision.clone()),
        actual: Some(instance.state),
    };
    let file = model.to_file(None);
    let decisions: Vec<String> = cx.result.decisions.iter().map(ToString::to_string).collect();
    let text = if json {
        json_out(json!({"found": true, "decisions": decisions, "model": serde_json::to_value(&file).expect("serializable")}))
    } else {
        let mut out = String::new();
        let space = model.space();
        writeln!(out, "counterexample on {} states at {}", space.len(), space.label(instance.state)).unwrap();
        for (p, d) in model.players().iter().zip(&decisions) {
            writeln!(out, "  d[{p}] = {d}").unwrap();
        }
        for (p, name) in model.players().iter().enumerate() {
            writeln!(out, "  blindspots of {name}: {}", space.render(&blindspots(model.profile.structure(p)))).unwrap();
        }
        out.push_str(&to_json(&file));
        out
    };
    Ok((EXIT_CHECK_FAILED, text))
}
