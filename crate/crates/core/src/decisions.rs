//! Informational decision functions, the generalized sure-thing principle,
//! and the agreement check.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frames::{blindspots, check_structure_properties, InfoStructure};
use crate::group::{group_relation, Profile};
use crate::measure::Measure;
use crate::rational::{format_rational, Rational};
use crate::space::{Event, StateSpace};

/// A decision: an exact rational or an opaque label. Equality is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DecisionValue {
    Rational(Rational),
    Label(String),
}

impl fmt::Display for DecisionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionValue::Rational(r) => f.write_str(&format_rational(r)),
            DecisionValue::Label(l) => f.write_str(l),
        }
    }
}

impl From<Rational> for DecisionValue {
    fn from(r: Rational) -> Self {
        DecisionValue::Rational(r)
    }
}

/// A map from events to decisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionFunction {
    /// Explicit entries, with an optional fallback for unlisted events.
    Table {
        space: StateSpace,
        entries: HashMap<Event, DecisionValue>,
        default: Option<DecisionValue>,
    },
    /// `E ↦ prior(target | E)`.
    Posterior { prior: Measure, target: Event },
}

impl DecisionFunction {
    pub fn table(
        space: &StateSpace,
        entries: HashMap<Event, DecisionValue>,
        default: Option<DecisionValue>,
    ) -> Result<Self> {
        if entries.keys().any(|e| e.universe() != space.len()) {
            return Err(Error::SpaceMismatch);
        }
        Ok(DecisionFunction::Table { space: space.clone(), entries, default })
    }

    pub fn constant(space: &StateSpace, value: DecisionValue) -> Self {
        DecisionFunction::Table { space: space.clone(), entries: HashMap::new(), default: Some(value) }
    }

    pub fn posterior(prior: Measure, target: Event) -> Result<Self> {
        if target.universe() != prior.space().len() {
            return Err(Error::SpaceMismatch);
        }
        Ok(DecisionFunction::Posterior { prior, target })
    }

    pub fn space(&self) -> &StateSpace {
        match self {
            DecisionFunction::Table { space, .. } => space,
            DecisionFunction::Posterior { prior, .. } => prior.space(),
        }
    }

    /// `f(E)`.
    pub fn evaluate(&self, event: &Event) -> Result<DecisionValue> {
        match self {
            DecisionFunction::Table { space, entries, default } => entries
                .get(event)
                .or(default.as_ref())
                .cloned()
                .ok_or_else(|| Error::UndefinedAt(space.render(event))),
            DecisionFunction::Posterior { prior, target } => {
                let given = prior.mass(event);
                if given.is_zero() {
                    return Err(Error::ZeroProbabilityConditioning(prior.space().render(event)));
                }
                Ok(DecisionValue::Rational(prior.mass(&(target & event)) / given))
            }
        }
    }
}

/// `f(E)`; see [`DecisionFunction::evaluate`].
pub fn evaluate(f: &DecisionFunction, event: &Event) -> Result<DecisionValue> {
    f.evaluate(event)
}

/// How much of the subset lattice a scan covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanMode {
    /// Every subset.
    Exhaustive,
    /// Every family of distinct information cells; exact for GSTP.
    CellFamilies,
    /// Seeded random sample; not a proof.
    Sampled { samples: usize, seed: u64 },
}

impl fmt::Display for ScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanMode::Exhaustive => f.write_str("exhaustive"),
            ScanMode::CellFamilies => f.write_str("cell-families"),
            ScanMode::Sampled { samples, seed } => write!(f, "sampled ({samples} samples, seed {seed})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GstpConfig {
    /// Scan every subset up to this many states.
    pub exhaustive_max_states: usize,
    /// Above the exhaustive limit, scan all cell families up to this many distinct cells.
    pub max_cells_for_families: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for GstpConfig {
    fn default() -> Self {
        GstpConfig { exhaustive_max_states: 12, max_cells_for_families: 16, samples: 100_000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GstpOutcome {
    Pass,
    /// `f(I(ν)) = decision` for every `ν ∈ subset`, yet the union gets `union_decision`.
    Counterexample { subset: Event, decision: DecisionValue, union_decision: DecisionValue },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GstpReport {
    pub mode: ScanMode,
    pub outcome: GstpOutcome,
}

impl GstpReport {
    pub fn passed(&self) -> bool {
        self.outcome == GstpOutcome::Pass
    }
}

pub fn satisfies_gstp(f: &DecisionFunction, info: &InfoStructure) -> Result<GstpReport> {
    satisfies_gstp_with(f, info, &GstpConfig::default())
}

/// Checks the generalized sure-thing principle for `f` against `info`.
pub fn satisfies_gstp_with(
    f: &DecisionFunction,
    info: &InfoStructure,
    config: &GstpConfig,
) -> Result<GstpReport> {
    let space = info.space();
    if *f.space() != *space {
        return Err(Error::SpaceMismatch);
    }
    let n = space.len();
    let at = |subset: &Event, e: Error| Error::AtSubset { subset: space.render(subset), source: Box::new(e) };

    let cells = info.cells();
    let mut cell_values = Vec::with_capacity(cells.len());
    for cell in cells {
        let value = f.evaluate(&cell.set).map_err(|e| {
            at(&Event::singleton(n, cell.holders.first().expect("cells have holders")), e)
        })?;
        cell_values.push(value);
    }
    let mut cell_of = vec![0usize; n];
    for (k, cell) in cells.iter().enumerate() {
        for s in cell.holders.iter() {
            cell_of[s] = k;
        }
    }

    let mut cache: HashMap<Event, DecisionValue> = HashMap::new();
    // `family` is a set of cell indices; the antecedent holds iff their values agree.
    let mut check = |family: &[usize], subset: &Event| -> Result<Option<GstpOutcome>> {
        let d = &cell_values[family[0]];
        if family.iter().any(|&k| cell_values[k] != *d) {
            return Ok(None);
        }
        let mut union = space.empty_event();
        for &k in family {
            union.union_with(&cells[k].set);
        }
        let value = match cache.get(&union) {
            Some(v) => v.clone(),
            None => {
                let v = f.evaluate(&union).map_err(|e| at(subset, e))?;
                cache.insert(union, v.clone());
                v
            }
        };
        Ok((value != *d).then(|| GstpOutcome::Counterexample {
            subset: subset.clone(),
            decision: d.clone(),
            union_decision: value,
        }))
    };

    let mut family = Vec::new();
    if n <= config.exhaustive_max_states && n < 64 {
        for mask in 1u64..(1u64 << n) {
            let subset = Event::from_mask(n, mask);
            family.clear();
            family.extend(subset.iter().map(|s| cell_of[s]));
            family.sort_unstable();
            family.dedup();
            if let Some(outcome) = check(&family, &subset)? {
                return Ok(GstpReport { mode: ScanMode::Exhaustive, outcome });
            }
        }
        return Ok(GstpReport { mode: ScanMode::Exhaustive, outcome: GstpOutcome::Pass });
    }

    let holders_of = |family: &[usize]| {
        let mut s = space.empty_event();
        for &k in family {
            s.union_with(&cells[k].holders);
        }
        s
    };

    if cells.len() <= config.max_cells_for_families {
        for mask in 1u64..(1u64 << cells.len()) {
            family.clear();
            family.extend((0..cells.len()).filter(|k| mask >> k & 1 == 1));
            if let Some(outcome) = check(&family, &holders_of(&family))? {
                return Ok(GstpReport { mode: ScanMode::CellFamilies, outcome });
            }
        }
        return Ok(GstpReport { mode: ScanMode::CellFamilies, outcome: GstpOutcome::Pass });
    }

    let mode = ScanMode::Sampled { samples: config.samples, seed: config.seed };
    for a in 0..cells.len() {
        for b in a..cells.len() {
            family.clear();
            family.push(a);
            if b != a {
                family.push(b);
            }
            if let Some(outcome) = check(&family, &holders_of(&family))? {
                return Ok(GstpReport { mode, outcome });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.samples {
        let subset = Event::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        if subset.is_empty() {
            continue;
        }
        family.clear();
        family.extend(subset.iter().map(|s| cell_of[s]));
        family.sort_unstable();
        family.dedup();
        if let Some(outcome) = check(&family, &subset)? {
            return Ok(GstpReport { mode, outcome });
        }
    }
    Ok(GstpReport { mode, outcome: GstpOutcome::Pass })
}

/// Everything the agreement theorem looks at, for one profile, function and state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementResult {
    pub state: usize,
    /// `d^i = f(I^i(ω))`, per player.
    pub decisions: Vec<DecisionValue>,
    pub divisible: Vec<bool>,
    pub equal_blindspots: bool,
    /// First pair of players whose blindspot sets differ.
    pub blindspot_witness: Option<(usize, usize)>,
    pub gstp: Vec<GstpReport>,
    /// `E^i = { ν | f(I^i(ν)) = d^i }`, per player.
    pub decision_events: Vec<Event>,
    pub group_info: Event,
    pub common_information: bool,
    /// `(player, ν)` with `ν ∈ I^N(ω) ∖ E^i`.
    pub common_information_witness: Option<(usize, usize)>,
    pub all_equal: bool,
}

impl AgreementResult {
    pub fn hypotheses_hold(&self) -> bool {
        self.divisible.iter().all(|&d| d)
            && self.equal_blindspots
            && self.gstp.iter().all(GstpReport::passed)
            && self.common_information
    }

    /// True only if every hypothesis holds and the decisions still differ.
    pub fn theorem_violated(&self) -> bool {
        self.hypotheses_hold() && !self.all_equal
    }
}

/// Evaluates the agreement theorem's hypotheses and conclusion at `state`.
pub fn agreement_check(profile: &Profile, f: &DecisionFunction, state: usize) -> Result<AgreementResult> {
    agreement_check_with(profile, f, state, &GstpConfig::default())
}

pub fn agreement_check_with(
    profile: &Profile,
    f: &DecisionFunction,
    state: usize,
    gstp_config: &GstpConfig,
) -> Result<AgreementResult> {
    let space = profile.space();
    space.check_index(state)?;
    if *f.space() != *space {
        return Err(Error::SpaceMismatch);
    }
    let n = space.len();
    let players = profile.players();
    let wrap = |p: usize, s: usize, e: Error| Error::AtPlayerState {
        player: players[p].clone(),
        state: space.label(s).to_string(),
        source: Box::new(e),
    };

    let mut decisions = Vec::with_capacity(players.len());
    let mut decision_events = Vec::with_capacity(players.len());
    let mut divisible = Vec::with_capacity(players.len());
    let mut gstp = Vec::with_capacity(players.len());
    for (p, info) in profile.structures().iter().enumerate() {
        let mut values = Vec::with_capacity(n);
        for nu in 0..n {
            values.push(f.evaluate(info.set(nu)).map_err(|e| wrap(p, nu, e))?);
        }
        let d = values[state].clone();
        decision_events.push(Event::from_indices(n, (0..n).filter(|&nu| values[nu] == d)));
        decisions.push(d);
        divisible.push(check_structure_properties(info).divisible);
        gstp.push(satisfies_gstp_with(f, info, gstp_config).map_err(|e| wrap(p, state, e))?);
    }

    let blind: Vec<Event> = profile.structures().iter().map(blindspots).collect();
    let mut blindspot_witness = None;
    'outer: for a in 0..blind.len() {
        for b in a + 1..blind.len() {
            if blind[a] != blind[b] {
                blindspot_witness = Some((a, b));
                break 'outer;
            }
        }
    }

    let group_info = group_relation(profile).successors(state).clone();
    let common_information_witness = decision_events
        .iter()
        .enumerate()
        .find_map(|(p, e)| (&group_info - e).first().map(|nu| (p, nu)));
    let all_equal = decisions.windows(2).all(|w| w[0] == w[1]);

    Ok(AgreementResult {
        state,
        decisions,
        divisible,
        equal_blindspots: blindspot_witness.is_none(),
        blindspot_witness,
        gstp,
        decision_events,
        group_info,
        common_information: common_information_witness.is_none(),
        common_information_witness,
        all_equal,
    })
}
