//! Strategic games, types, and the belief structures they induce.
//!
//! An epistemic extension adds to each player a finite list of types, each a
//! probability vector over the opponents' action profiles. The induced state
//! space is every (action profile, type profile) pair, and a player considers
//! `ω′` possible at `ω` when their type at `ω` gives positive probability to
//! the opponents' actions at `ω′`.

use std::collections::HashSet;

use num_traits::Zero;

use crate::beliefs::{
    audit_axioms_with, check_b1, check_b1_per_measure, AuditConfig, AxiomReport, B1Outcome,
    CredalSet,
};
use crate::error::{Error, Result};
use crate::frames::{
    check_relation_properties, check_structure_properties, info_from_relation, Relation,
    RelationProperties, StructureProperties,
};
use crate::rational::{format_rational, validate_distribution, Rational};
use crate::report::Report;
use crate::space::{Event, StateSpace};

/// Default cap on the number of induced states.
pub const DEFAULT_MAX_STATES: usize = 4096;

/// Mixed-radix index over `radices`, first position most significant.
fn encode(digits: impl IntoIterator<Item = usize>, radices: impl IntoIterator<Item = usize>) -> usize {
    digits.into_iter().zip(radices).fold(0, |acc, (d, r)| acc * r + d)
}

fn decode(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; radices.len()];
    for k in (0..radices.len()).rev() {
        digits[k] = index % radices[k];
        index /= radices[k];
    }
    digits
}

/// `⟨N, {A^i}, {u^i}⟩` with exact payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategicGame {
    players: Vec<String>,
    actions: Vec<Vec<String>>,
    /// `payoffs[i][profile_index]`.
    payoffs: Vec<Vec<Rational>>,
}

impl StrategicGame {
    pub fn new(players: Vec<String>, actions: Vec<Vec<String>>, payoffs: Vec<Vec<Rational>>) -> Result<Self> {
        if players.is_empty() {
            return Err(Error::NoPlayers);
        }
        let mut seen = HashSet::new();
        for p in &players {
            if !seen.insert(p) {
                return Err(Error::DuplicatePlayer(p.clone()));
            }
        }
        if actions.len() != players.len() {
            return Err(Error::LengthMismatch { expected: players.len(), found: actions.len() });
        }
        for (p, list) in players.iter().zip(&actions) {
            if list.is_empty() {
                return Err(Error::NoActions(p.clone()));
            }
            let mut seen = HashSet::new();
            for a in list {
                if !seen.insert(a) {
                    return Err(Error::DuplicateAction { player: p.clone(), action: a.clone() });
                }
            }
        }
        let game = StrategicGame { players, actions, payoffs: Vec::new() };
        if payoffs.len() != game.players.len() {
            return Err(Error::LengthMismatch { expected: game.players.len(), found: payoffs.len() });
        }
        for table in &payoffs {
            if table.len() != game.profile_count() {
                return Err(Error::LengthMismatch { expected: game.profile_count(), found: table.len() });
            }
        }
        Ok(StrategicGame { payoffs, ..game })
    }

    /// A game whose payoffs are all zero.
    pub fn without_payoffs(players: Vec<String>, actions: Vec<Vec<String>>) -> Result<Self> {
        let count = actions.iter().map(Vec::len).product();
        let payoffs = vec![vec![Rational::zero(); count]; players.len()];
        StrategicGame::new(players, actions, payoffs)
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn player_index(&self, name: &str) -> Result<usize> {
        self.players.iter().position(|p| p == name).ok_or_else(|| Error::UnknownPlayer(name.into()))
    }

    pub fn actions(&self, player: usize) -> &[String] {
        &self.actions[player]
    }

    fn radices(&self) -> Vec<usize> {
        self.actions.iter().map(Vec::len).collect()
    }

    fn opponent_radices(&self, player: usize) -> Vec<usize> {
        (0..self.players.len()).filter(|&j| j != player).map(|j| self.actions[j].len()).collect()
    }

    /// `|A|`.
    pub fn profile_count(&self) -> usize {
        self.actions.iter().map(Vec::len).product()
    }

    pub fn profile_index(&self, profile: &[usize]) -> usize {
        encode(profile.iter().copied(), self.radices())
    }

    pub fn profile_at(&self, index: usize) -> Vec<usize> {
        decode(index, &self.radices())
    }

    /// `|A^{-i}|`.
    pub fn opponent_count(&self, player: usize) -> usize {
        self.opponent_radices(player).iter().product()
    }

    /// Index of `a^{-i}` for a full action profile `a`.
    pub fn opponent_index(&self, player: usize, profile: &[usize]) -> usize {
        encode(
            profile.iter().enumerate().filter(|&(j, _)| j != player).map(|(_, &a)| a),
            self.opponent_radices(player),
        )
    }

    /// Opponents' actions (players in order, owner omitted) for an opponent index.
    pub fn opponent_profile_at(&self, player: usize, index: usize) -> Vec<usize> {
        decode(index, &self.opponent_radices(player))
    }

    /// Comma-joined opponent action labels, owner omitted.
    pub fn opponent_key(&self, player: usize, index: usize) -> String {
        let opponents = (0..self.players.len()).filter(|&j| j != player);
        opponents
            .zip(self.opponent_profile_at(player, index))
            .map(|(j, a)| self.actions[j][a].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_opponent_key(&self, player: usize, key: &str) -> Result<usize> {
        let parts: Vec<&str> = if key.is_empty() { Vec::new() } else { key.split(',').collect() };
        let opponents: Vec<usize> = (0..self.players.len()).filter(|&j| j != player).collect();
        if parts.len() != opponents.len() {
            return Err(Error::UnknownProfile(key.to_string()));
        }
        let mut digits = Vec::with_capacity(parts.len());
        for (&j, part) in opponents.iter().zip(&parts) {
            let a = self.actions[j]
                .iter()
                .position(|x| x == part.trim())
                .ok_or_else(|| Error::UnknownProfile(key.to_string()))?;
            digits.push(a);
        }
        Ok(encode(digits, self.opponent_radices(player)))
    }

    /// Comma-joined labels of a full action profile.
    pub fn profile_key(&self, index: usize) -> String {
        self.profile_at(index)
            .iter()
            .enumerate()
            .map(|(j, &a)| self.actions[j][a].as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_profile_key(&self, key: &str) -> Result<usize> {
        let parts: Vec<&str> = key.split(',').collect();
        if parts.len() != self.players.len() {
            return Err(Error::UnknownProfile(key.to_string()));
        }
        let mut digits = Vec::with_capacity(parts.len());
        for (j, part) in parts.iter().enumerate() {
            let a = self.actions[j]
                .iter()
                .position(|x| x == part.trim())
                .ok_or_else(|| Error::UnknownProfile(key.to_string()))?;
            digits.push(a);
        }
        Ok(self.profile_index(&digits))
    }

    /// `u^i(a)`.
    pub fn payoff(&self, player: usize, profile: &[usize]) -> &Rational {
        &self.payoffs[player][self.profile_index(profile)]
    }

    pub fn payoff_table(&self, player: usize) -> &[Rational] {
        &self.payoffs[player]
    }
}

/// `types[i][k][b]`: probability that type `k` of player `i` gives to opponent profile `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeAssignment {
    types: Vec<Vec<Vec<Rational>>>,
}

impl TypeAssignment {
    pub fn new(types: Vec<Vec<Vec<Rational>>>) -> Self {
        TypeAssignment { types }
    }

    pub fn of(&self, player: usize) -> &[Vec<Rational>] {
        &self.types[player]
    }
}

/// A strategic game together with each player's finite type list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpistemicExtension {
    game: StrategicGame,
    types: TypeAssignment,
}

impl EpistemicExtension {
    pub fn new(game: StrategicGame, types: TypeAssignment) -> Result<Self> {
        if types.types.len() != game.players.len() {
            return Err(Error::LengthMismatch { expected: game.players.len(), found: types.types.len() });
        }
        for (i, list) in types.types.iter().enumerate() {
            let player = &game.players[i];
            if list.is_empty() {
                return Err(Error::NoTypes(player.clone()));
            }
            let width = game.opponent_count(i);
            for (k, t) in list.iter().enumerate() {
                if t.len() != width {
                    return Err(Error::LengthMismatch { expected: width, found: t.len() });
                }
                validate_distribution(t).map_err(|e| match e {
                    Error::NotAPmf(msg) => Error::NotAPmf(format!("player {player} type {k}: {msg}")),
                    other => other,
                })?;
                if list[..k].contains(t) {
                    return Err(Error::DuplicateType { player: player.clone(), index: k });
                }
            }
        }
        Ok(EpistemicExtension { game, types })
    }

    pub fn game(&self) -> &StrategicGame {
        &self.game
    }

    pub fn types(&self) -> &TypeAssignment {
        &self.types
    }

    /// `|A| · |T|`.
    pub fn state_count(&self) -> usize {
        self.game.profile_count() * self.types.types.iter().map(Vec::len).product::<usize>()
    }

    /// Enumerates `Ω = A × T`, action profile major, then type profile.
    pub fn build_state_space(&self, max_states: usize) -> Result<ExtensionModel> {
        let states = self.state_count();
        if states > max_states {
            return Err(Error::SizeLimit { states, cap: max_states });
        }
        let type_radices: Vec<usize> = self.types.types.iter().map(Vec::len).collect();
        let type_count: usize = type_radices.iter().product();
        let mut list = Vec::with_capacity(states);
        let mut labels = Vec::with_capacity(states);
        for a in 0..self.game.profile_count() {
            let actions = self.game.profile_at(a);
            for t in 0..type_count {
                let types = decode(t, &type_radices);
                let types_part: Vec<String> = types.iter().map(usize::to_string).collect();
                labels.push(format!("{}|{}", self.game.profile_key(a), types_part.join(",")));
                list.push(ExtensionState { actions: actions.clone(), types });
            }
        }
        let space = StateSpace::new(labels)?;
        Ok(ExtensionModel { ext: self.clone(), space, states: list })
    }
}

/// A state `(a, t)`: one action and one type index per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionState {
    pub actions: Vec<usize>,
    pub types: Vec<usize>,
}

/// An extension with its enumerated state space.
#[derive(Debug, Clone)]
pub struct ExtensionModel {
    ext: EpistemicExtension,
    space: StateSpace,
    states: Vec<ExtensionState>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum C1Mode {
    /// For each type and opponent profile, some measure matches.
    #[default]
    PerProfile,
    /// For each type, one measure matches every opponent profile.
    PerType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum C1Outcome {
    Pass,
    /// `profile` is absent in per-type mode, where no single profile is to blame.
    Violation { player: usize, type_index: usize, profile: Option<usize> },
}

impl C1Outcome {
    pub fn passed(&self) -> bool {
        *self == C1Outcome::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremStatus {
    /// Hypotheses hold and every conclusion holds.
    Verified,
    HypothesisNotMet,
    /// Hypotheses hold but a conclusion fails.
    ConclusionFailed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayerTheoremReport {
    pub player: usize,
    /// The hypothesis: every measure vanishes exactly on the blindspots.
    pub b1: B1Outcome,
    /// The weaker joint reading, reported for information.
    pub b1_joint: B1Outcome,
    pub c1: C1Outcome,
    pub relation: RelationProperties,
    pub structure: StructureProperties,
    pub axioms: AxiomReport,
    pub status: TheoremStatus,
}

impl PlayerTheoremReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.b1.passed() && self.c1.passed()
    }

    pub fn conclusions_hold(&self) -> bool {
        self.relation.serial.holds()
            && self.relation.transitive.holds()
            && self.relation.euclidean.holds()
            && self.structure.divisible
            && self.axioms.is_kd45()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTheoremReport {
    pub players: Vec<PlayerTheoremReport>,
}

impl ExtensionTheoremReport {
    pub fn all_verified(&self) -> bool {
        self.players.iter().all(|p| p.status == TheoremStatus::Verified)
    }

    pub fn any_conclusion_failed(&self) -> bool {
        self.players.iter().any(|p| p.status == TheoremStatus::ConclusionFailed)
    }
}

impl ExtensionModel {
    pub fn extension(&self) -> &EpistemicExtension {
        &self.ext
    }

    pub fn game(&self) -> &StrategicGame {
        &self.ext.game
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn states(&self) -> &[ExtensionState] {
        &self.states
    }

    fn check_player(&self, player: usize) -> Result<()> {
        if player < self.ext.game.players.len() {
            Ok(())
        } else {
            Err(Error::UnknownPlayer(player.to_string()))
        }
    }

    /// Opponent profile index of `state` from `player`'s point of view.
    pub fn opponent_coordinate(&self, player: usize, state: usize) -> usize {
        self.ext.game.opponent_index(player, &self.states[state].actions)
    }

    /// The type (probability vector) `player` holds at `state`.
    pub fn type_at(&self, player: usize, state: usize) -> &[Rational] {
        &self.ext.types.types[player][self.states[state].types[player]]
    }

    /// `⟦a^{-i}⟧`.
    pub fn event_of_opponent_profile(&self, player: usize, profile: usize) -> Result<Event> {
        self.check_player(player)?;
        if profile >= self.ext.game.opponent_count(player) {
            return Err(Error::UnknownProfile(profile.to_string()));
        }
        let n = self.space.len();
        Ok(Event::from_indices(n, (0..n).filter(|&s| self.opponent_coordinate(player, s) == profile)))
    }

    pub fn event_of_opponent_key(&self, player: usize, key: &str) -> Result<Event> {
        self.check_player(player)?;
        let profile = self.ext.game.parse_opponent_key(player, key)?;
        self.event_of_opponent_profile(player, profile)
    }

    /// `⟦t^i⟧`: states where `player` has type `type_index`.
    pub fn event_of_type(&self, player: usize, type_index: usize) -> Result<Event> {
        self.check_player(player)?;
        if type_index >= self.ext.types.types[player].len() {
            return Err(Error::UnknownProfile(format!("type {type_index}")));
        }
        let n = self.space.len();
        Ok(Event::from_indices(n, (0..n).filter(|&s| self.states[s].types[player] == type_index)))
    }

    /// `ω ⤳ ω′` iff the type at `ω` gives positive probability to the opponents' actions at `ω′`.
    pub fn relation_from_types(&self, player: usize) -> Relation {
        let n = self.space.len();
        // the row only depends on the type, and membership only on the opponent coordinate
        let opponents: Vec<usize> = (0..n).map(|s| self.opponent_coordinate(player, s)).collect();
        let rows_by_type: Vec<Event> = self.ext.types.types[player]
            .iter()
            .map(|t| Event::from_indices(n, (0..n).filter(|&s| !t[opponents[s]].is_zero())))
            .collect();
        let rows = (0..n).map(|s| rows_by_type[self.states[s].types[player]].clone()).collect();
        Relation::from_rows(&self.space, rows).expect("rows built over this space")
    }

    /// The degree `t^i(b^{-i})` to which `to` is accessible from `from`.
    pub fn accessibility_degree(&self, player: usize, from: usize, to: usize) -> Result<Rational> {
        self.check_player(player)?;
        self.space.check_index(from)?;
        self.space.check_index(to)?;
        Ok(self.type_at(player, from)[self.opponent_coordinate(player, to)].clone())
    }

    /// States whose opponent coordinate gets zero from every type of `player`.
    pub fn type_blindspots(&self, player: usize) -> Event {
        let n = self.space.len();
        let types = &self.ext.types.types[player];
        Event::from_indices(
            n,
            (0..n).filter(|&s| {
                let b = self.opponent_coordinate(player, s);
                types.iter().all(|t| t[b].is_zero())
            }),
        )
    }

    /// Checks that every type's probabilities are matched by some measure's
    /// mass on the corresponding opponent-profile events.
    pub fn check_c1(&self, credals: &[CredalSet], mode: C1Mode) -> Result<C1Outcome> {
        if credals.len() != self.ext.game.players.len() {
            return Err(Error::LengthMismatch { expected: self.ext.game.players.len(), found: credals.len() });
        }
        for (player, credal) in credals.iter().enumerate() {
            let outcome = self.check_c1_for(player, credal, mode)?;
            if !outcome.passed() {
                return Ok(outcome);
            }
        }
        Ok(C1Outcome::Pass)
    }

    /// C1 for a single player's credal set.
    pub fn check_c1_for(&self, player: usize, credal: &CredalSet, mode: C1Mode) -> Result<C1Outcome> {
        self.check_player(player)?;
        if *credal.space() != self.space {
            return Err(Error::SpaceMismatch);
        }
        let profiles = self.ext.game.opponent_count(player);
        let events: Vec<Event> = (0..profiles)
            .map(|b| self.event_of_opponent_profile(player, b))
            .collect::<Result<_>>()?;
        // masses[m][b] = ρ_m(⟦b⟧)
        let masses: Vec<Vec<Rational>> = credal
            .measures()
            .iter()
            .map(|m| events.iter().map(|e| m.mass(e)).collect())
            .collect();
        for (k, t) in self.ext.types.types[player].iter().enumerate() {
            let violation = match mode {
                C1Mode::PerProfile => (0..profiles)
                    .find(|&b| !masses.iter().any(|row| row[b] == t[b]))
                    .map(Some),
                C1Mode::PerType => (!masses.iter().any(|row| row.as_slice() == t.as_slice())).then_some(None),
            };
            if let Some(profile) = violation {
                return Ok(C1Outcome::Violation { player, type_index: k, profile });
            }
        }
        Ok(C1Outcome::Pass)
    }

    pub fn verify_extension_theorem(&self, credals: &[CredalSet]) -> Result<ExtensionTheoremReport> {
        self.verify_extension_theorem_with(credals, &AuditConfig::default())
    }

    /// Checks the hypotheses per player (zero mass exactly on blindspots, and
    /// type/measure consistency), then the conclusions: the type-induced
    /// relation is serial, transitive and Euclidean, its information structure
    /// is divisible, and the belief operator is KD45.
    pub fn verify_extension_theorem_with(
        &self,
        credals: &[CredalSet],
        audit: &AuditConfig,
    ) -> Result<ExtensionTheoremReport> {
        if credals.len() != self.ext.game.players.len() {
            return Err(Error::LengthMismatch { expected: self.ext.game.players.len(), found: credals.len() });
        }
        let mut players = Vec::with_capacity(credals.len());
        for (player, credal) in credals.iter().enumerate() {
            let rel = self.relation_from_types(player);
            let info = info_from_relation(&rel);
            let b1 = check_b1_per_measure(credal, &info)?;
            let b1_joint = check_b1(credal, &info)?;
            let c1 = self.check_c1_for(player, credal, C1Mode::PerProfile)?;
            let mut report = PlayerTheoremReport {
                player,
                b1,
                b1_joint,
                c1,
                relation: check_relation_properties(&rel),
                structure: check_structure_properties(&info),
                axioms: audit_axioms_with(&info, audit),
                status: TheoremStatus::Verified,
            };
            report.status = if !report.hypotheses_hold() {
                TheoremStatus::HypothesisNotMet
            } else if report.conclusions_hold() {
                TheoremStatus::Verified
            } else {
                TheoremStatus::ConclusionFailed
            };
            players.push(report);
        }
        Ok(ExtensionTheoremReport { players })
    }
}

impl ExtensionTheoremReport {
    /// Flattens into named check lines, labeling players by name.
    pub fn to_report(&self, model: &ExtensionModel) -> Report {
        let mut report = Report::new();
        let space = model.space();
        for p in &self.players {
            let name = &model.game().players()[p.player];
            let prefix = format!("player {name}: ");
            let b1_line = |o: &B1Outcome| match o {
                B1Outcome::Pass => None,
                B1Outcome::Violation { state, direction, .. } => {
                    Some(format!("{} ({direction})", space.label(*state)))
                }
            };
            report.check(format!("{prefix}hypothesis B1"), b1_line(&p.b1));
            report.check(
                format!("{prefix}hypothesis C1"),
                match &p.c1 {
                    C1Outcome::Pass => None,
                    C1Outcome::Violation { type_index, profile, .. } => Some(match profile {
                        Some(b) => format!(
                            "type {type_index} gives {} to {}, no measure matches",
                            format_rational(&model.ext.types.types[p.player][*type_index][*b]),
                            model.game().opponent_key(p.player, *b)
                        ),
                        None => format!("type {type_index} has no matching measure"),
                    }),
                },
            );
            let conclusions = [
                ("serial", p.relation.serial.holds()),
                ("transitive", p.relation.transitive.holds()),
                ("euclidean", p.relation.euclidean.holds()),
                ("divisible", p.structure.divisible),
                ("N", p.axioms.n.holds()),
                ("K", p.axioms.k.holds()),
                ("D", p.axioms.d.holds()),
                ("4", p.axioms.four.holds()),
                ("5", p.axioms.five.holds()),
            ];
            for (what, holds) in conclusions {
                let name = format!("{prefix}{what}");
                if holds {
                    report.pass(name);
                } else if p.hypotheses_hold() {
                    report.fail(name, "conclusion fails although the hypotheses hold");
                } else {
                    report.not_met(name, "fails, and B1 or C1 does not hold");
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::blindspots;
    use crate::measure::Measure;
    use crate::rational::ratio;

    fn s(x: &str) -> String {
        x.to_string()
    }

    /// Player 1 (U/D) with one type t(L) = 1; player 2 (L/R) with one type s(U) = s(D) = 1/2.
    pub(crate) fn four_state() -> EpistemicExtension {
        let game = StrategicGame::without_payoffs(
            vec![s("1"), s("2")],
            vec![vec![s("U"), s("D")], vec![s("L"), s("R")]],
        )
        .unwrap();
        let types = TypeAssignment::new(vec![
            vec![vec![ratio(1, 1), ratio(0, 1)]],
            vec![vec![ratio(1, 2), ratio(1, 2)]],
        ]);
        EpistemicExtension::new(game, types).unwrap()
    }

    fn four_state_credals(model: &ExtensionModel) -> Vec<CredalSet> {
        let l = model.event_of_opponent_key(0, "L").unwrap();
        vec![
            CredalSet::new(vec![Measure::uniform_on(model.space(), &l).unwrap()]).unwrap(),
            CredalSet::new(vec![Measure::uniform(model.space())]).unwrap(),
        ]
    }

    #[test]
    fn state_space_sizes() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        assert_eq!(model.space().labels(), ["U,L|0,0", "U,R|0,0", "D,L|0,0", "D,R|0,0"]);

        let single = EpistemicExtension::new(
            StrategicGame::without_payoffs(vec![s("a")], vec![vec![s("x")]]).unwrap(),
            TypeAssignment::new(vec![vec![vec![ratio(1, 1)]]]),
        )
        .unwrap();
        assert_eq!(single.build_state_space(10).unwrap().space().len(), 1);

        let game = four_state().game().clone();
        let two_types = TypeAssignment::new(vec![
            vec![vec![ratio(1, 1), ratio(0, 1)]],
            vec![vec![ratio(1, 2), ratio(1, 2)], vec![ratio(1, 1), ratio(0, 1)]],
        ]);
        let ext = EpistemicExtension::new(game, two_types).unwrap();
        assert_eq!(ext.build_state_space(DEFAULT_MAX_STATES).unwrap().space().len(), 8);
        assert_eq!(ext.build_state_space(7).unwrap_err(), Error::SizeLimit { states: 8, cap: 7 });
    }

    #[test]
    fn opponent_profile_events() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        let space = model.space();
        assert_eq!(model.event_of_opponent_key(0, "L").unwrap(), space.event(&["U,L|0,0", "D,L|0,0"]).unwrap());
        assert_eq!(model.event_of_opponent_key(1, "U").unwrap(), space.event(&["U,L|0,0", "U,R|0,0"]).unwrap());
        assert!(matches!(model.event_of_opponent_key(0, "Q"), Err(Error::UnknownProfile(_))));

        let single = EpistemicExtension::new(
            StrategicGame::without_payoffs(vec![s("a"), s("b")], vec![vec![s("x"), s("y")], vec![s("z")]]).unwrap(),
            TypeAssignment::new(vec![vec![vec![ratio(1, 1)]], vec![vec![ratio(1, 2), ratio(1, 2)]]]),
        )
        .unwrap()
        .build_state_space(100)
        .unwrap();
        assert!(single.event_of_opponent_key(0, "z").unwrap().is_full());
    }

    #[test]
    fn type_induced_relations() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        let space = model.space();
        let r1 = model.relation_from_types(0);
        let l_states = space.event(&["U,L|0,0", "D,L|0,0"]).unwrap();
        for w in 0..4 {
            assert_eq!(r1.successors(w), &l_states);
        }
        let info1 = info_from_relation(&r1);
        assert_eq!(blindspots(&info1), space.event(&["U,R|0,0", "D,R|0,0"]).unwrap());
        assert_eq!(blindspots(&info1), model.type_blindspots(0));

        let r2 = model.relation_from_types(1);
        assert_eq!(r2, Relation::full(space));
        assert!(blindspots(&info_from_relation(&r2)).is_empty());
        assert!(check_relation_properties(&r1).serial.holds());
    }

    #[test]
    fn degrees() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        let idx = |l: &str| model.space().index_of(l).unwrap();
        assert_eq!(model.accessibility_degree(0, idx("U,R|0,0"), idx("D,L|0,0")).unwrap(), ratio(1, 1));
        assert_eq!(model.accessibility_degree(0, idx("U,L|0,0"), idx("D,R|0,0")).unwrap(), ratio(0, 1));
        assert!(!model.relation_from_types(0).contains(idx("U,L|0,0"), idx("D,R|0,0")));
        for w in 0..4 {
            assert_eq!(model.accessibility_degree(1, w, idx("U,R|0,0")).unwrap(), ratio(1, 2));
        }
        assert!(model.accessibility_degree(5, 0, 0).is_err());
    }

    #[test]
    fn c1_examples() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        let credals = four_state_credals(&model);
        assert!(model.check_c1(&credals, C1Mode::PerProfile).unwrap().passed());
        assert!(model.check_c1(&credals, C1Mode::PerType).unwrap().passed());

        let uniform = CredalSet::new(vec![Measure::uniform(model.space())]).unwrap();
        let broken = vec![uniform.clone(), uniform];
        assert_eq!(
            model.check_c1(&broken, C1Mode::PerProfile).unwrap(),
            C1Outcome::Violation { player: 0, type_index: 0, profile: Some(0) }
        );
    }

    #[test]
    fn per_type_mode_is_stricter() {
        // each measure matches the type on one opponent profile, none on all three
        let game = StrategicGame::without_payoffs(
            vec![s("1"), s("2")],
            vec![vec![s("U")], vec![s("L"), s("M"), s("R")]],
        )
        .unwrap();
        let types = TypeAssignment::new(vec![
            vec![vec![ratio(1, 2), ratio(1, 4), ratio(1, 4)]],
            vec![vec![ratio(1, 1)]],
        ]);
        let model = EpistemicExtension::new(game, types).unwrap().build_state_space(100).unwrap();
        let sp = model.space();
        let m = |w: [(i64, i64); 3]| Measure::new(sp, w.iter().map(|&(p, q)| ratio(p, q)).collect()).unwrap();
        let piecewise = CredalSet::new(vec![
            m([(1, 2), (1, 2), (0, 1)]),
            m([(0, 1), (1, 4), (3, 4)]),
            m([(3, 4), (0, 1), (1, 4)]),
        ])
        .unwrap();
        let other = CredalSet::new(vec![Measure::uniform(sp)]).unwrap();
        let sets = vec![piecewise, other.clone()];
        assert!(model.check_c1(&sets, C1Mode::PerProfile).unwrap().passed());
        assert_eq!(
            model.check_c1(&sets, C1Mode::PerType).unwrap(),
            C1Outcome::Violation { player: 0, type_index: 0, profile: None }
        );
        let exact = CredalSet::new(vec![m([(1, 2), (1, 4), (1, 4)])]).unwrap();
        assert!(model.check_c1(&[exact, other], C1Mode::PerType).unwrap().passed());
    }

    #[test]
    fn four_state_theorem() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        let report = model.verify_extension_theorem(&four_state_credals(&model)).unwrap();
        assert!(report.all_verified(), "{:#?}", report);
        assert!(report.to_report(&model).all_passed());
    }

    #[test]
    fn broken_credal_fails_b1_hypothesis() {
        let model = four_state().build_state_space(DEFAULT_MAX_STATES).unwrap();
        let uniform = CredalSet::new(vec![Measure::uniform(model.space())]).unwrap();
        let report = model.verify_extension_theorem(&[uniform.clone(), uniform]).unwrap();
        let p1 = &report.players[0];
        assert_eq!(p1.status, TheoremStatus::HypothesisNotMet);
        assert!(!p1.b1.passed() && !p1.b1_joint.passed());
        // seriality needs no hypothesis
        assert!(p1.relation.serial.holds());
        assert_eq!(report.players[1].status, TheoremStatus::Verified);
        assert!(!report.any_conclusion_failed());
    }

    /// Two types with disjoint supports satisfy the joint reading of the
    /// blindspot condition and C1, yet the induced relation is not transitive.
    #[test]
    fn joint_b1_reading_admits_intransitive_relation() {
        let game = StrategicGame::without_payoffs(vec![s("1"), s("2")], vec![vec![s("U")], vec![s("L"), s("R")]]).unwrap();
        let types = TypeAssignment::new(vec![
            vec![vec![ratio(1, 1), ratio(0, 1)], vec![ratio(0, 1), ratio(1, 1)]],
            vec![vec![ratio(1, 1)]],
        ]);
        let model = EpistemicExtension::new(game, types).unwrap().build_state_space(100).unwrap();
        let sp = model.space();
        let l = model.event_of_opponent_key(0, "L").unwrap();
        let r = model.event_of_opponent_key(0, "R").unwrap();
        let p1 = CredalSet::new(vec![Measure::uniform_on(sp, &l).unwrap(), Measure::uniform_on(sp, &r).unwrap()]).unwrap();
        let p2 = CredalSet::new(vec![Measure::uniform(sp)]).unwrap();
        let report = model.verify_extension_theorem(&[p1, p2]).unwrap();
        let first = &report.players[0];
        assert!(first.b1_joint.passed());
        assert!(first.c1.passed());
        assert!(!first.relation.transitive.holds());
        assert!(!first.b1.passed());
        assert_eq!(first.status, TheoremStatus::HypothesisNotMet);
    }

    #[test]
    fn validation_errors() {
        let game = four_state().game().clone();
        let bad_sum = TypeAssignment::new(vec![vec![vec![ratio(9, 10), ratio(0, 1)]], vec![vec![ratio(1, 2), ratio(1, 2)]]]);
        assert!(matches!(EpistemicExtension::new(game.clone(), bad_sum), Err(Error::NotAPmf(_))));
        let dup = TypeAssignment::new(vec![
            vec![vec![ratio(1, 1), ratio(0, 1)], vec![ratio(1, 1), ratio(0, 1)]],
            vec![vec![ratio(1, 2), ratio(1, 2)]],
        ]);
        assert!(matches!(EpistemicExtension::new(game.clone(), dup), Err(Error::DuplicateType { .. })));
        let none = TypeAssignment::new(vec![vec![], vec![vec![ratio(1, 2), ratio(1, 2)]]]);
        assert!(matches!(EpistemicExtension::new(game, none), Err(Error::NoTypes(_))));
        assert!(StrategicGame::without_payoffs(vec![s("1")], vec![vec![]]).is_err());
        assert!(StrategicGame::new(vec![s("1")], vec![vec![s("a")]], vec![vec![]]).is_err());
    }

    #[test]
    fn payoffs_and_keys() {
        let game = StrategicGame::new(
            vec![s("1"), s("2")],
            vec![vec![s("U"), s("D")], vec![s("L"), s("R")]],
            vec![
                vec![ratio(3, 1), ratio(0, 1), ratio(5, 1), ratio(1, 1)],
                vec![ratio(3, 1), ratio(5, 1), ratio(0, 1), ratio(1, 1)],
            ],
        )
        .unwrap();
        assert_eq!(game.payoff(0, &[1, 0]), &ratio(5, 1));
        assert_eq!(game.profile_key(2), "D,L");
        assert_eq!(game.parse_profile_key("D,L").unwrap(), 2);
        assert_eq!(game.opponent_key(1, 1), "D");
        assert_eq!(game.parse_opponent_key(0, "R").unwrap(), 1);
    }
}
