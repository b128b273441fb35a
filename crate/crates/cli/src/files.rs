//! JSON model and game files.
//!
//! Probabilities and decision values are strings (`"1/2"`, `"1"`), never
//! floats. Serialization normalizes: rationals in lowest terms, pairs and
//! sets in state order, zero weights omitted.

use std::collections::{BTreeMap, HashMap};

use doxa_core::beliefs::CredalSet;
use doxa_core::decisions::{DecisionFunction, DecisionValue};
use doxa_core::games::{EpistemicExtension, ExtensionModel, StrategicGame, TypeAssignment};
use doxa_core::rational::{format_rational, parse_rational};
use doxa_core::{info_from_relation, relation_from_info, Event, InfoStructure, Measure, Profile, Rational, Relation, StateSpace};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on induced extension spaces, overridden by `DOXA_MAX_STATES`.
pub const MAX_STATES_ENV: &str = "DOXA_MAX_STATES";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("{file}:{line}:{column}: {message}")]
    Parse { file: String, line: usize, column: usize, message: String },
    #[error("{path}: {constraint}")]
    Validation { path: String, constraint: String },
    #[error("{file}: {message}")]
    Io { file: String, message: String },
}

fn invalid(path: impl Into<String>, constraint: impl ToString) -> InputError {
    InputError::Validation { path: path.into(), constraint: constraint.to_string() }
}

/// The size cap for extension spaces, from the environment or the default.
pub fn max_states() -> Result<usize, InputError> {
    match std::env::var(MAX_STATES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| invalid(MAX_STATES_ENV, format!("expected a state count, found `{v}`"))),
        Err(_) => Ok(doxa_core::games::DEFAULT_MAX_STATES),
    }
}

pub fn read_file(path: &str) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::Io { file: path.into(), message: e.to_string() })
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, file: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Parse {
        file: file.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// A measure as `state label → probability`; omitted states have weight zero.
pub type MeasureFile = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum DecisionFile {
    Posterior { prior: MeasureFile, target: Vec<String> },
    Table {
        entries: Vec<TableEntry>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        default: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub event: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub states: Vec<String>,
    pub players: Vec<String>,
    /// Accessibility pairs `[from, to]` per player.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub relations: BTreeMap<String, Vec<(String, String)>>,
    /// Information sets per player and state.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub info: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub credal: BTreeMap<String, Vec<MeasureFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision: Option<DecisionFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Relation,
    Info,
}

/// A validated model file.
#[derive(Debug, Clone)]
pub struct Model {
    pub profile: Profile,
    pub forms: Vec<Form>,
    pub credal: Vec<Option<CredalSet>>,
    pub decision: Option<DecisionFunction>,
    pub actual: Option<usize>,
}

fn state(space: &StateSpace, label: &str, path: &str) -> Result<usize, InputError> {
    space.index_of(label).map_err(|e| invalid(path, e))
}

fn event(space: &StateSpace, labels: &[String], path: &str) -> Result<Event, InputError> {
    let mut e = space.empty_event();
    for (k, l) in labels.iter().enumerate() {
        e.insert(state(space, l, &format!("{path}[{k}]"))?);
    }
    Ok(e)
}

fn rational(text: &str, path: &str) -> Result<Rational, InputError> {
    parse_rational(text).map_err(|e| invalid(path, e))
}

fn measure(space: &StateSpace, file: &MeasureFile, path: &str) -> Result<Measure, InputError> {
    let mut weights = vec![Rational::zero(); space.len()];
    for (label, p) in file {
        let at = format!("{path}.{label}");
        weights[state(space, label, &at)?] = rational(p, &at)?;
    }
    Measure::new(space, weights).map_err(|e| invalid(path, e))
}

fn measure_file(m: &Measure) -> MeasureFile {
    let space = m.space();
    (0..space.len())
        .filter(|&s| !m.weight(s).is_zero())
        .map(|s| (space.label(s).to_string(), format_rational(m.weight(s))))
        .collect()
}

/// Strings that parse as rationals are numeric decisions; others are labels.
pub fn decision_value(text: &str) -> DecisionValue {
    match parse_rational(text) {
        Ok(r) => DecisionValue::Rational(r),
        Err(_) => DecisionValue::Label(text.to_string()),
    }
}

fn check_players(players: &[String], keys: impl Iterator<Item = String>, field: &str) -> Result<(), InputError> {
    for key in keys {
        if !players.contains(&key) {
            return Err(invalid(format!("{field}.{key}"), "unknown player"));
        }
    }
    Ok(())
}

fn credal_sets(
    space: &StateSpace,
    players: &[String],
    credal: &BTreeMap<String, Vec<MeasureFile>>,
) -> Result<Vec<Option<CredalSet>>, InputError> {
    check_players(players, credal.keys().cloned(), "credal")?;
    players
        .iter()
        .map(|p| {
            credal
                .get(p)
                .map(|list| {
                    let path = format!("credal.{p}");
                    let measures = list
                        .iter()
                        .enumerate()
                        .map(|(k, m)| measure(space, m, &format!("{path}[{k}]")))
                        .collect::<Result<Vec<_>, _>>()?;
                    CredalSet::new(measures).map_err(|e| invalid(&path, e))
                })
                .transpose()
        })
        .collect()
}

fn credal_files(players: &[String], credal: &[Option<CredalSet>]) -> BTreeMap<String, Vec<MeasureFile>> {
    players
        .iter()
        .zip(credal)
        .filter_map(|(p, c)| c.as_ref().map(|c| (p.clone(), c.measures().iter().map(measure_file).collect())))
        .collect()
}

pub fn parse_model(text: &str, file: &str) -> Result<Model, InputError> {
    parse_json::<ModelFile>(text, file)?.validate()
}

pub fn load_model(path: &str) -> Result<Model, InputError> {
    parse_model(&read_file(path)?, path)
}

impl ModelFile {
    pub fn validate(&self) -> Result<Model, InputError> {
        let space = StateSpace::new(self.states.clone()).map_err(|e| invalid("states", e))?;
        if self.players.is_empty() {
            return Err(invalid("players", "at least one player is required"));
        }
        check_players(&self.players, self.relations.keys().cloned(), "relations")?;
        check_players(&self.players, self.info.keys().cloned(), "info")?;
        let mut structures = Vec::with_capacity(self.players.len());
        let mut forms = Vec::with_capacity(self.players.len());
        for p in &self.players {
            match (self.relations.get(p), self.info.get(p)) {
                (Some(pairs), None) => {
                    let mut rel = Relation::empty(&space);
                    let mut rows = rel.rows().to_vec();
                    for (k, (a, b)) in pairs.iter().enumerate() {
                        let at = format!("relations.{p}[{k}]");
                        let a = state(&space, a, &format!("{at}[0]"))?;
                        let b = state(&space, b, &format!("{at}[1]"))?;
                        rows[a].insert(b);
                    }
                    rel = Relation::from_rows(&space, rows).map_err(|e| invalid(format!("relations.{p}"), e))?;
                    structures.push(info_from_relation(&rel));
                    forms.push(Form::Relation);
                }
                (None, Some(map)) => {
                    let mut sets = vec![None; space.len()];
                    for (label, set) in map {
                        let at = format!("info.{p}.{label}");
                        let s = state(&space, label, &at)?;
                        sets[s] = Some(event(&space, set, &at)?);
                    }
                    let sets = sets
                        .into_iter()
                        .enumerate()
                        .map(|(s, e)| e.ok_or_else(|| invalid(format!("info.{p}.{}", space.label(s)), "missing information set")))
                        .collect::<Result<Vec<_>, _>>()?;
                    structures.push(InfoStructure::new(&space, sets).map_err(|e| invalid(format!("info.{p}"), e))?);
                    forms.push(Form::Info);
                }
                (Some(_), Some(_)) => return Err(invalid(format!("players.{p}"), "give a relation or an info map, not both")),
                (None, None) => return Err(invalid(format!("players.{p}"), "missing relation or info map")),
            }
        }
        let profile = Profile::new(self.players.clone(), structures).map_err(|e| invalid("players", e))?;
        let credal = credal_sets(&space, &self.players, &self.credal)?;
        let decision = self.decision.as_ref().map(|d| decision_function(&space, d)).transpose()?;
        let actual = self.actual.as_ref().map(|a| state(&space, a, "actual")).transpose()?;
        Ok(Model { profile, forms, credal, decision, actual })
    }
}

fn decision_function(space: &StateSpace, file: &DecisionFile) -> Result<DecisionFunction, InputError> {
    match file {
        DecisionFile::Posterior { prior, target } => {
            let prior = measure(space, prior, "decision.posterior.prior")?;
            let target = event(space, target, "decision.posterior.target")?;
            DecisionFunction::posterior(prior, target).map_err(|e| invalid("decision.posterior", e))
        }
        DecisionFile::Table { entries, default } => {
            let mut map = HashMap::new();
            for (k, entry) in entries.iter().enumerate() {
                let at = format!("decision.table.entries[{k}]");
                let e = event(space, &entry.event, &format!("{at}.event"))?;
                if map.insert(e, decision_value(&entry.value)).is_some() {
                    return Err(invalid(at, "event listed twice"));
                }
            }
            let default = default.as_deref().map(decision_value);
            DecisionFunction::table(space, map, default).map_err(|e| invalid("decision.table", e))
        }
    }
}

fn labels(space: &StateSpace, e: &Event) -> Vec<String> {
    space.event_labels(e).into_iter().map(String::from).collect()
}

fn decision_file(f: &DecisionFunction) -> DecisionFile {
    match f {
        DecisionFunction::Posterior { prior, target } => DecisionFile::Posterior {
            prior: measure_file(prior),
            target: labels(prior.space(), target),
        },
        DecisionFunction::Table { space, entries, default } => {
            let mut sorted: Vec<(&Event, &DecisionValue)> = entries.iter().collect();
            sorted.sort_by_key(|(e, _)| e.iter().collect::<Vec<_>>());
            DecisionFile::Table {
                entries: sorted
                    .into_iter()
                    .map(|(e, v)| TableEntry { event: labels(space, e), value: v.to_string() })
                    .collect(),
                default: default.as_ref().map(ToString::to_string),
            }
        }
    }
}

impl Model {
    pub fn space(&self) -> &StateSpace {
        self.profile.space()
    }

    pub fn players(&self) -> &[String] {
        self.profile.players()
    }

    pub fn relation(&self, player: usize) -> Relation {
        relation_from_info(self.profile.structure(player))
    }

    /// Normalized file, every player written in `form` (or as read, if `None`).
    pub fn to_file(&self, form: Option<Form>) -> ModelFile {
        let space = self.space();
        let mut relations = BTreeMap::new();
        let mut info = BTreeMap::new();
        for (i, p) in self.players().iter().enumerate() {
            let structure = self.profile.structure(i);
            match form.unwrap_or(self.forms[i]) {
                Form::Relation => {
                    let pairs = self
                        .relation(i)
                        .pairs()
                        .map(|(a, b)| (space.label(a).to_string(), space.label(b).to_string()))
                        .collect();
                    relations.insert(p.clone(), pairs);
                }
                Form::Info => {
                    let sets = (0..space.len())
                        .map(|s| (space.label(s).to_string(), labels(space, structure.set(s))))
                        .collect();
                    info.insert(p.clone(), sets);
                }
            }
        }
        ModelFile {
            states: space.labels().to_vec(),
            players: self.players().to_vec(),
            relations,
            info,
            credal: credal_files(self.players(), &self.credal),
            decision: self.decision.as_ref().map(decision_file),
            actual: self.actual.map(|a| space.label(a).to_string()),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("file types always serialize");
    text.push('\n');
    text
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub players: Vec<String>,
    pub actions: BTreeMap<String, Vec<String>>,
    /// Per player, full action profile key → payoff. Omitted tables are all zero.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub payoffs: BTreeMap<String, BTreeMap<String, String>>,
    /// Per player, a list of types; each maps opponent profile keys to probabilities.
    pub types: BTreeMap<String, Vec<BTreeMap<String, String>>>,
    /// Credal sets over the induced state space.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub credal: BTreeMap<String, Vec<MeasureFile>>,
}

/// A validated game file with its induced state space.
#[derive(Debug, Clone)]
pub struct Game {
    pub model: ExtensionModel,
    pub credal: Vec<Option<CredalSet>>,
}

pub fn parse_game(text: &str, file: &str) -> Result<Game, InputError> {
    parse_json::<GameFile>(text, file)?.validate(max_states()?)
}

pub fn load_game(path: &str) -> Result<Game, InputError> {
    parse_game(&read_file(path)?, path)
}

impl GameFile {
    pub fn validate(&self, max_states: usize) -> Result<Game, InputError> {
        let players = &self.players;
        if players.is_empty() {
            return Err(invalid("players", "at least one player is required"));
        }
        check_players(players, self.actions.keys().cloned(), "actions")?;
        check_players(players, self.payoffs.keys().cloned(), "payoffs")?;
        check_players(players, self.types.keys().cloned(), "types")?;
        let actions = players
            .iter()
            .map(|p| self.actions.get(p).cloned().ok_or_else(|| invalid(format!("actions.{p}"), "missing action list")))
            .collect::<Result<Vec<_>, _>>()?;
        let shape = StrategicGame::without_payoffs(players.clone(), actions.clone()).map_err(|e| invalid("actions", e))?;
        let mut payoffs = vec![vec![Rational::zero(); shape.profile_count()]; players.len()];
        for (i, p) in players.iter().enumerate() {
            let Some(table) = self.payoffs.get(p) else { continue };
            let mut seen = vec![false; shape.profile_count()];
            for (key, value) in table {
                let at = format!("payoffs.{p}.{key}");
                let k = shape.parse_profile_key(key).map_err(|e| invalid(&at, e))?;
                payoffs[i][k] = rational(value, &at)?;
                seen[k] = true;
            }
            if let Some(k) = seen.iter().position(|s| !s) {
                return Err(invalid(format!("payoffs.{p}"), format!("missing payoff for profile `{}`", shape.profile_key(k))));
            }
        }
        let game = StrategicGame::new(players.clone(), actions, payoffs).map_err(|e| invalid("payoffs", e))?;
        let mut types = Vec::with_capacity(players.len());
        for (i, p) in players.iter().enumerate() {
            let list = self.types.get(p).ok_or_else(|| invalid(format!("types.{p}"), "missing type list"))?;
            let mut parsed = Vec::with_capacity(list.len());
            for (k, t) in list.iter().enumerate() {
                let mut probs = vec![Rational::zero(); game.opponent_count(i)];
                for (key, value) in t {
                    let at = format!("types.{p}[{k}].{key}");
                    let b = game.parse_opponent_key(i, key).map_err(|e| invalid(&at, e))?;
                    probs[b] = rational(value, &at)?;
                }
                parsed.push(probs);
            }
            types.push(parsed);
        }
        let extension = EpistemicExtension::new(game, TypeAssignment::new(types)).map_err(|e| invalid("types", e))?;
        let model = extension.build_state_space(max_states).map_err(|e| invalid("types", e))?;
        let credal = credal_sets(model.space(), players, &self.credal)?;
        Ok(Game { model, credal })
    }
}

impl Game {
    pub fn space(&self) -> &StateSpace {
        self.model.space()
    }

    pub fn players(&self) -> &[String] {
        self.model.game().players()
    }

    /// The induced model: type-generated relations plus the credal sets.
    pub fn to_model(&self) -> Model {
        let n = self.players().len();
        let structures = (0..n).map(|i| info_from_relation(&self.model.relation_from_types(i))).collect();
        Model {
            profile: Profile::new(self.players().to_vec(), structures).expect("extension players are valid"),
            forms: vec![Form::Relation; n],
            credal: self.credal.clone(),
            decision: None,
            actual: None,
        }
    }

    pub fn to_file(&self) -> GameFile {
        let game = self.model.game();
        let players = game.players();
        let mut actions = BTreeMap::new();
        let mut payoffs = BTreeMap::new();
        let mut types = BTreeMap::new();
        for (i, p) in players.iter().enumerate() {
            actions.insert(p.clone(), game.actions(i).to_vec());
            let table = game.payoff_table(i);
            if table.iter().any(|v| !v.is_zero()) {
                let entries = (0..game.profile_count()).map(|k| (game.profile_key(k), format_rational(&table[k]))).collect();
                payoffs.insert(p.clone(), entries);
            }
            let list = self
                .model
                .extension()
                .types()
                .of(i)
                .iter()
                .map(|t| {
                    (0..t.len())
                        .filter(|&b| !t[b].is_zero())
                        .map(|b| (game.opponent_key(i, b), format_rational(&t[b])))
                        .collect()
                })
                .collect();
            types.insert(p.clone(), list);
        }
        GameFile { players: players.to_vec(), actions, payoffs, types, credal: credal_files(players, &self.credal) }
    }
}

/// Which kind of file a JSON document is, judged by its fields.
#[derive(Debug, Clone)]
pub enum Input {
    Model(Model),
    Game(Game),
}

pub fn load_any(path: &str) -> Result<Input, InputError> {
    let text = read_file(path)?;
    let value: serde_json::Value = parse_json(&text, path)?;
    if value.get("actions").is_some() {
        parse_game(&text, path).map(Input::Game)
    } else {
        parse_model(&text, path).map(Input::Model)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FORWARD: &str = r#"{"states": ["w1", "w2"], "players": ["1"], "relations": {"1": [["w1", "w2"], ["w2", "w2"]]}}"#;

    #[test]
    fn forward_parses() {
        let model = parse_model(FORWARD, "forward.json").unwrap();
        let space = model.space();
        assert_eq!(model.profile.structure(0).set(0), &space.event(&["w2"]).unwrap());
        assert_eq!(doxa_core::blindspots(model.profile.structure(0)), space.event(&["w1"]).unwrap());
    }

    #[test]
    fn validation_errors_name_the_path() {
        let bad_label = FORWARD.replace(r#"["w2", "w2"]"#, r#"["w2", "w9"]"#);
        match parse_model(&bad_label, "m").unwrap_err() {
            InputError::Validation { path, .. } => assert_eq!(path, "relations.1[1][1]"),
            other => panic!("unexpected {other:?}"),
        }
        let bad_sum = r#"{"states": ["w1", "w2"], "players": ["1"], "relations": {"1": [["w1", "w2"]]},
            "credal": {"1": [{"w2": "9/10"}]}}"#;
        match parse_model(bad_sum, "m").unwrap_err() {
            InputError::Validation { path, constraint } => {
                assert_eq!(path, "credal.1[0]");
                assert!(constraint.contains("9/10"), "{constraint}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_model("{", "m"), Err(InputError::Parse { .. })));
        let both = r#"{"states": ["a"], "players": ["1"], "relations": {"1": []}, "info": {"1": {"a": []}}}"#;
        assert!(matches!(parse_model(both, "m"), Err(InputError::Validation { .. })));
    }

    #[test]
    fn model_round_trip_is_stable() {
        let text = r#"{"states": ["w1", "w2"], "players": ["a", "b"],
            "relations": {"a": [["w2", "w2"], ["w1", "w2"], ["w1", "w2"]]},
            "info": {"b": {"w1": ["w1"], "w2": ["w1"]}},
            "credal": {"a": [{"w2": "2/2", "w1": "0"}]},
            "decision": {"table": {"entries": [{"event": ["w2"], "value": "2/4"}, {"event": ["w1"], "value": "buy"}], "default": "0"}},
            "actual": "w1"}"#;
        let once = to_json(&parse_model(text, "m").unwrap().to_file(None));
        let twice = to_json(&parse_model(&once, "m").unwrap().to_file(None));
        assert_eq!(once, twice);
        assert!(once.contains("\"1/2\""));
        assert!(!once.contains("2/2"));
        let flipped = to_json(&parse_model(&once, "m").unwrap().to_file(Some(Form::Info)));
        assert!(!flipped.contains("relations"));
    }

    #[test]
    fn game_files() {
        let text = r#"{"players": ["1", "2"], "actions": {"1": ["U", "D"], "2": ["L", "R"]},
            "types": {"1": [{"L": "1"}], "2": [{"U": "1/2", "D": "1/2"}]}}"#;
        let game = parse_game(text, "g").unwrap();
        assert_eq!(game.space().len(), 4);
        let once = to_json(&game.to_file());
        assert_eq!(once, to_json(&parse_game(&once, "g").unwrap().to_file()));

        let bad = text.replace(r#""1/2", "D""#, r#""1/2", "X""#);
        assert!(matches!(parse_game(&bad, "g"), Err(InputError::Validation { .. })));
        let partial = text.replace(r#""types""#, r#""payoffs": {"1": {"U,L": "1"}}, "types""#);
        match parse_game(&partial, "g").unwrap_err() {
            InputError::Validation { constraint, .. } => assert!(constraint.contains("U,R")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(GameFile::validate(&serde_json::from_str(text).unwrap(), 3).is_err());
    }
}
