//! Player profiles, the group accessibility relation and common information.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::frames::{
    check_relation_properties, check_structure_properties, relation_from_info, InfoStructure,
    Relation,
};
use crate::report::Report;
use crate::space::{Event, StateSpace};

/// One information structure per player, all over the same space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    space: StateSpace,
    players: Vec<String>,
    structures: Vec<InfoStructure>,
}

impl Profile {
    pub fn new(players: Vec<String>, structures: Vec<InfoStructure>) -> Result<Self> {
        if players.is_empty() {
            return Err(Error::NoPlayers);
        }
        if players.len() != structures.len() {
            return Err(Error::LengthMismatch { expected: players.len(), found: structures.len() });
        }
        let mut seen = HashSet::new();
        for p in &players {
            if !seen.insert(p.as_str()) {
                return Err(Error::DuplicatePlayer(p.clone()));
            }
        }
        let space = structures[0].space().clone();
        if structures.iter().any(|s| *s.space() != space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(Profile { space, players, structures })
    }

    /// Players named `1..=k`.
    pub fn numbered(structures: Vec<InfoStructure>) -> Result<Self> {
        let players = (1..=structures.len()).map(|i| i.to_string()).collect();
        Profile::new(players, structures)
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn structures(&self) -> &[InfoStructure] {
        &self.structures
    }

    pub fn structure(&self, player: usize) -> &InfoStructure {
        &self.structures[player]
    }

    pub fn player_index(&self, name: &str) -> Result<usize> {
        self.players
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownPlayer(name.to_string()))
    }
}

/// Transitive closure of the union of the players' relations.
pub fn group_relation(profile: &Profile) -> Relation {
    let mut rel = Relation::empty(&profile.space);
    for info in &profile.structures {
        rel = rel.union(&relation_from_info(info)).expect("profile shares one space");
    }
    transitive_closure(&rel)
}

/// Least transitive superset, by repeated squaring `R ← R ∪ R∘R`.
pub fn transitive_closure(rel: &Relation) -> Relation {
    let mut current = rel.clone();
    loop {
        let next = current.union(&current.compose(&current)).expect("same space");
        if next == current {
            return current;
        }
        current = next;
    }
}

/// `I^N(ω)`.
pub fn group_info(profile: &Profile, state: usize) -> Event {
    group_relation(profile).successors(state).clone()
}

/// `E` is common information at `ω` iff `I^N(ω) ⊆ E`.
pub fn is_common_information(profile: &Profile, event: &Event, state: usize) -> bool {
    group_info(profile, state).is_subset(event)
}

/// `ω₀ ⤳^{i₁} ω₁ ⤳^{i₂} … ⤳^{i_k} ω_k`, with player indices into the profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub players: Vec<usize>,
    pub states: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.players.len()
    }

    pub fn is_empty(&self) -> bool {
        self.players.is_empty()
    }

    /// Every link is an edge of the named player's relation.
    pub fn is_valid(&self, profile: &Profile) -> bool {
        self.states.len() == self.players.len() + 1
            && self.players.iter().enumerate().all(|(m, &p)| {
                p < profile.structures.len()
                    && profile.structures[p].set(self.states[m]).contains(self.states[m + 1])
            })
    }
}

/// Shortest chain of at least one link from `from` to `to`, or `None` when
/// `to` is not group-accessible from `from`. Ties go to the lower player,
/// then the lower state.
pub fn find_chain(profile: &Profile, from: usize, to: usize) -> Option<Chain> {
    let n = profile.space.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut queue = VecDeque::new();
    let expand = |node: usize, parent: &mut Vec<Option<(usize, usize)>>, queue: &mut VecDeque<usize>| {
        for (p, info) in profile.structures.iter().enumerate() {
            for next in info.set(node).iter() {
                if parent[next].is_none() {
                    parent[next] = Some((node, p));
                    queue.push_back(next);
                }
            }
        }
    };
    expand(from, &mut parent, &mut queue);
    while let Some(node) = queue.pop_front() {
        if node == to {
            break;
        }
        expand(node, &mut parent, &mut queue);
    }
    parent[to]?;

    let mut states = vec![to];
    let mut players = Vec::new();
    let mut cursor = to;
    loop {
        let (prev, p) = parent[cursor].expect("reached states have parents");
        players.push(p);
        states.push(prev);
        if prev == from {
            break;
        }
        cursor = prev;
    }
    states.reverse();
    players.reverse();
    Some(Chain { players, states })
}

/// Checks the group-information proposition on every state of `profile`.
///
/// Containment of individual information and closure under every player's
/// image are unconditional. The fixed point `I^N(ω) = I^i(I^N(ω))` is only
/// claimed when every structure is divisible and all images `I^i(Ω)` agree;
/// otherwise its line is reported as hypothesis-not-met.
pub fn verify_group_proposition(profile: &Profile) -> Report {
    let space = &profile.space;
    let n = space.len();
    let group = group_relation(profile);
    let mut report = Report::new();

    let props = check_relation_properties(&group);
    let contains_all = profile
        .structures
        .iter()
        .position(|s| !relation_from_info(s).is_subset(&group))
        .map(|p| format!("player {} not contained", profile.players[p]));
    report.check(
        "group relation is transitive",
        props.transitive.witness().map(|&(a, b, c)| {
            format!("{} → {} → {}", space.label(a), space.label(b), space.label(c))
        }),
    );
    report.check("group relation contains every player", contains_all);

    let mut chains = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let chain = find_chain(profile, a, b);
            let ok = match &chain {
                Some(c) => {
                    group.contains(a, b)
                        && c.is_valid(profile)
                        && c.states.first() == Some(&a)
                        && c.states.last() == Some(&b)
                }
                None => !group.contains(a, b),
            };
            if !ok {
                chains = Some(format!("pair ({}, {})", space.label(a), space.label(b)));
                break 'outer;
            }
        }
    }
    report.check("chains witness group accessibility", chains);

    let mut contained = None;
    let mut closed = None;
    for w in 0..n {
        let gi = group.successors(w);
        for (p, info) in profile.structures.iter().enumerate() {
            if contained.is_none() && !info.set(w).is_subset(gi) {
                contained = Some(format!("player {} at {}", profile.players[p], space.label(w)));
            }
            if closed.is_none() && !info.image(gi).is_subset(gi) {
                closed = Some(format!("player {} at {}", profile.players[p], space.label(w)));
            }
        }
    }
    report.check("individual information within group information", contained);
    report.check("group information closed under each player", closed);

    let fixed_point = "group information is a fixed point";
    let cross = "covered states see themselves across players";
    match fixed_point_hypothesis(profile) {
        Err(reason) => {
            report.not_met(fixed_point, reason.clone());
            report.not_met(cross, reason);
        }
        Ok(()) => {
            let mut witness = None;
            'outer: for w in 0..n {
                let gi = group.successors(w);
                for (p, info) in profile.structures.iter().enumerate() {
                    if info.image(gi) != *gi {
                        witness =
                            Some(format!("player {} at {}", profile.players[p], space.label(w)));
                        break 'outer;
                    }
                }
            }
            report.check(fixed_point, witness);
            let mut witness = None;
            for a in &profile.structures {
                for b in &profile.structures {
                    witness = witness.or_else(|| crate::frames::cross_membership(a, b));
                }
            }
            report.check(cross, witness);
        }
    }
    report
}

/// Divisible structures with pairwise equal images.
fn fixed_point_hypothesis(profile: &Profile) -> std::result::Result<(), String> {
    for (p, info) in profile.structures.iter().enumerate() {
        if !check_structure_properties(info).divisible {
            return Err(format!("player {} is not divisible", profile.players[p]));
        }
    }
    let first = profile.structures[0].full_image();
    for (p, info) in profile.structures.iter().enumerate().skip(1) {
        if info.full_image() != first {
            return Err(format!(
                "I^{}(Ω) = {} differs from I^{}(Ω) = {}",
                profile.players[p],
                profile.space.render(&info.full_image()),
                profile.players[0],
                profile.space.render(&first)
            ));
        }
    }
    Ok(())
}
