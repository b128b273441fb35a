//! Exhaustive enumeration, seeded instance generation and counterexample search.
//!
//! Every generator is a pure function of its configuration: the same seed
//! yields the same stream on every machine. The generator is
//! [`PRNG_ID`], seeded through `SeedableRng::seed_from_u64`.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::beliefs::{check_b1_per_measure, CredalSet};
use crate::decisions::{agreement_check, AgreementResult, DecisionFunction};
use crate::error::{Error, Result};
use crate::frames::{blindspots, check_structure_properties, info_from_relation, InfoStructure, Relation};
use crate::games::{C1Mode, EpistemicExtension, ExtensionModel, StrategicGame, TypeAssignment};
use crate::group::{group_info, Profile};
use crate::measure::Measure;
use crate::rational::{integer, ratio, Rational};
use crate::space::{Event, StateSpace};

/// Name and version of the pseudo-random generator behind every stream.
pub const PRNG_ID: &str = "rand_chacha-0.3/ChaCha8Rng";

/// Largest `n` accepted by [`enumerate_relations`].
pub const MAX_ENUMERATION_STATES: usize = 5;

/// Largest `n` accepted by [`enumerate_divisible_structures`].
pub const MAX_DIVISIBLE_ENUMERATION_STATES: usize = 6;

/// How a generator chooses the blindspot set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BlindspotSpec {
    /// No blindspots: the structure is partitional.
    #[default]
    Empty,
    /// A random proper subset of the states.
    Random,
    /// Exactly these state indices.
    Exactly(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub players: usize,
    pub seed: u64,
    pub blindspots: BlindspotSpec,
    /// Attempts before a rejection loop gives up.
    pub max_retries: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { n: 4, players: 2, seed: 0, blindspots: BlindspotSpec::Random, max_retries: 1000 }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All `2^(n²)` relations on `w1..wn`, in binary-counting order over the pair
/// matrix (bit `i·n + j` is the pair `(wi+1, wj+1)`).
pub fn enumerate_relations(n: usize) -> Result<impl Iterator<Item = Relation>> {
    if n > MAX_ENUMERATION_STATES {
        return Err(Error::CapExceeded { requested: n, cap: MAX_ENUMERATION_STATES });
    }
    let space = StateSpace::numbered(n)?;
    let total = 1u64 << (n * n);
    Ok((0..total).map(move |bits| Relation::from_matrix_bits(&space, bits)))
}

/// A relation on `w1..wn` with every pair present independently with
/// probability `density`.
pub fn random_relation<R: Rng + ?Sized>(rng: &mut R, space: &StateSpace, density: f64) -> Relation {
    let n = space.len();
    let rows = (0..n).map(|_| Event::from_indices(n, (0..n).filter(|_| rng.gen_bool(density)))).collect();
    Relation::from_rows(space, rows).expect("rows sized to the space")
}

/// Relations with a density drawn per relation, so sparse and dense ones both appear.
pub fn random_relations(space: &StateSpace, count: usize, seed: u64) -> Vec<Relation> {
    let mut rng = rng_for(seed);
    (0..count)
        .map(|_| {
            let density = rng.gen_range(0.0..1.0);
            random_relation(&mut rng, space, density)
        })
        .collect()
}

/// Builds the divisible structure whose cells are `blocks` and whose
/// blindspots point at `blocks[targets[k]]` for the `k`-th blindspot.
fn canonical_structure(space: &StateSpace, blocks: &[Event], blind: &Event, targets: &[usize]) -> InfoStructure {
    let n = space.len();
    let mut sets = vec![Event::empty(n); n];
    for block in blocks {
        for s in block.iter() {
            sets[s] = block.clone();
        }
    }
    for (k, s) in blind.iter().enumerate() {
        sets[s] = blocks[targets[k]].clone();
    }
    InfoStructure::new(space, sets).expect("sets sized to the space")
}

fn resolve_blindspots<R: Rng + ?Sized>(rng: &mut R, n: usize, spec: &BlindspotSpec) -> Result<Event> {
    match spec {
        BlindspotSpec::Empty => Ok(Event::empty(n)),
        BlindspotSpec::Random => {
            let keep = rng.gen_range(0..n);
            let mut b = Event::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.3)));
            b.remove(keep);
            Ok(b)
        }
        BlindspotSpec::Exactly(states) => {
            let mut b = Event::empty(n);
            for &s in states {
                if s >= n {
                    return Err(Error::StateOutOfRange { index: s, size: n });
                }
                b.insert(s);
            }
            if b.is_full() {
                return Err(Error::InvalidBlindspotSet);
            }
            Ok(b)
        }
    }
}

/// Random divisible structure with blindspot set exactly `blind`.
///
/// The non-blindspot states are split into blocks by assigning each a random
/// block label, and each blindspot is sent to a uniformly chosen block. This
/// covers every divisible structure but is not uniform over them.
pub fn random_divisible_with<R: Rng + ?Sized>(rng: &mut R, space: &StateSpace, blind: &Event) -> Result<InfoStructure> {
    let n = space.len();
    if blind.is_full() {
        return Err(Error::InvalidBlindspotSet);
    }
    let rest: Vec<usize> = (0..n).filter(|&s| !blind.contains(s)).collect();
    let labels: Vec<usize> = rest.iter().map(|_| rng.gen_range(0..rest.len())).collect();
    let mut blocks: Vec<Event> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for (s, label) in rest.iter().zip(&labels) {
        match seen.iter().position(|l| l == label) {
            Some(k) => blocks[k].insert(*s),
            None => {
                seen.push(*label);
                blocks.push(Event::singleton(n, *s));
            }
        }
    }
    let targets: Vec<usize> = blind.iter().map(|_| rng.gen_range(0..blocks.len())).collect();
    Ok(canonical_structure(space, &blocks, blind, &targets))
}

pub fn random_divisible_structure(config: &GeneratorConfig) -> Result<InfoStructure> {
    let space = StateSpace::numbered(config.n)?;
    let mut rng = rng_for(config.seed);
    let blind = resolve_blindspots(&mut rng, config.n, &config.blindspots)?;
    random_divisible_with(&mut rng, &space, &blind)
}

/// `config.players` divisible structures sharing one blindspot set, hence one image.
pub fn random_divisible_profile<R: Rng + ?Sized>(rng: &mut R, config: &GeneratorConfig) -> Result<Profile> {
    let space = StateSpace::numbered(config.n)?;
    let blind = resolve_blindspots(rng, config.n, &config.blindspots)?;
    let structures = (0..config.players.max(1))
        .map(|_| random_divisible_with(rng, &space, &blind))
        .collect::<Result<Vec<_>>>()?;
    Profile::numbered(structures)
}

/// Set partitions of `items` in restricted-growth order.
fn set_partitions(n: usize, items: &[usize]) -> Vec<Vec<Event>> {
    fn go(n: usize, items: &[usize], k: usize, blocks: &mut Vec<Event>, out: &mut Vec<Vec<Event>>) {
        if k == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].insert(items[k]);
            go(n, items, k + 1, blocks, out);
            blocks[b].remove(items[k]);
        }
        blocks.push(Event::singleton(n, items[k]));
        go(n, items, k + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(n, items, 0, &mut Vec::new(), &mut out);
    out
}

/// Every divisible structure on `w1..wn` exactly once, in canonical order:
/// blindspot mask ascending, then the partition of the other states in
/// restricted-growth order, then the blindspots' target blocks counted in
/// mixed radix.
pub fn enumerate_divisible_structures(n: usize) -> Result<Vec<InfoStructure>> {
    if n > MAX_DIVISIBLE_ENUMERATION_STATES {
        return Err(Error::CapExceeded { requested: n, cap: MAX_DIVISIBLE_ENUMERATION_STATES });
    }
    let space = StateSpace::numbered(n)?;
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) - 1 {
        let blind = Event::from_mask(n, mask);
        let rest: Vec<usize> = (0..n).filter(|&s| !blind.contains(s)).collect();
        let b = blind.count();
        for blocks in set_partitions(n, &rest) {
            let m = blocks.len();
            let combos = m.pow(b as u32);
            for code in 0..combos {
                let mut targets = vec![0; b];
                let mut c = code;
                for t in targets.iter_mut().rev() {
                    *t = c % m;
                    c /= m;
                }
                out.push(canonical_structure(&space, &blocks, &blind, &targets));
            }
        }
    }
    Ok(out)
}

/// A profile, a decision function and a state at which to test agreement.
#[derive(Debug, Clone)]
pub struct AgreementInstance {
    pub profile: Profile,
    pub decision: DecisionFunction,
    pub state: usize,
}

impl AgreementInstance {
    pub fn check(&self) -> Result<AgreementResult> {
        agreement_check(&self.profile, &self.decision, self.state)
    }
}

fn random_prior<R: Rng + ?Sized>(rng: &mut R, space: &StateSpace) -> Measure {
    let raw: Vec<i64> = (0..space.len()).map(|_| rng.gen_range(1..=6)).collect();
    let total: i64 = raw.iter().sum();
    Measure::new(space, raw.iter().map(|&w| ratio(w, total)).collect()).expect("positive weights summing to one")
}

/// An instance satisfying every agreement hypothesis: divisible structures,
/// equal blindspots, the sure-thing principle, and decisions that are common
/// information.
///
/// Structures share a blindspot set and the prior is strictly positive, so
/// the first three hold by construction. The target event is either random
/// (rejected until the decisions are common information) or built around the
/// group information set at the chosen state, which forces it.
pub fn random_agreement_instance<R: Rng + ?Sized>(rng: &mut R, config: &GeneratorConfig) -> Result<AgreementInstance> {
    for _ in 0..config.max_retries.max(1) {
        let profile = random_divisible_profile(rng, config)?;
        let space = profile.space().clone();
        let n = space.len();
        let state = rng.gen_range(0..n);
        let random_target = Event::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        let target = match rng.gen_range(0..3) {
            0 => random_target,
            1 => &group_info(&profile, state) | &random_target,
            _ => &random_target - &group_info(&profile, state),
        };
        let decision = DecisionFunction::posterior(random_prior(rng, &space), target)?;
        let instance = AgreementInstance { profile, decision, state };
        if instance.check()?.hypotheses_hold() {
            return Ok(instance);
        }
    }
    Err(Error::GenerationExhausted(config.max_retries.max(1)))
}

/// `count` instances from one seeded stream.
pub fn agreement_instances(config: &GeneratorConfig, count: usize) -> Result<Vec<AgreementInstance>> {
    let mut rng = rng_for(config.seed);
    (0..count).map(|_| random_agreement_instance(&mut rng, config)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Report the built-in two-state witness before searching.
    pub include_builtin: bool,
    pub min_n: usize,
    pub max_n: usize,
    /// Only consider structure pairs with equal blindspots.
    pub equal_blindspots: bool,
    /// Upper bound on agreement checks performed.
    pub budget: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { include_builtin: true, min_n: 1, max_n: 3, equal_blindspots: false, budget: 1_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub instance: AgreementInstance,
    pub result: AgreementResult,
}

/// Player 1 sees only `w2` everywhere and player 2 only `w1`; uniform prior,
/// target `{w2}`. Posteriors at `w1` are 1 and 0.
pub fn mirrored_instance() -> AgreementInstance {
    let space = StateSpace::numbered(2).expect("two states");
    let first = InfoStructure::from_labels(&space, &[vec!["w2"], vec!["w2"]]).expect("valid");
    let second = InfoStructure::from_labels(&space, &[vec!["w1"], vec!["w1"]]).expect("valid");
    let profile = Profile::numbered(vec![first, second]).expect("valid");
    let target = space.event(&["w2"]).expect("valid");
    let decision = DecisionFunction::posterior(Measure::uniform(&space), target).expect("valid");
    AgreementInstance { profile, decision, state: 0 }
}

fn is_witness(result: &AgreementResult, equal_blindspots: bool) -> bool {
    let others = result.divisible.iter().all(|&d| d)
        && result.gstp.iter().all(|g| g.passed())
        && result.common_information;
    others && result.equal_blindspots == equal_blindspots && !result.all_equal
}

/// Looks for two-player instances with divisible structures, the sure-thing
/// principle and common information whose decisions differ.
///
/// Candidates are scanned by increasing `n`, then structure pair, target mask
/// and state in canonical order, with a uniform prior; the first witness is
/// returned. With `equal_blindspots` set every hypothesis of the agreement
/// theorem holds, so no witness can exist.
pub fn search_agreement_counterexample(config: &SearchConfig) -> Result<Option<Counterexample>> {
    if config.include_builtin && !config.equal_blindspots {
        let instance = mirrored_instance();
        let result = instance.check()?;
        if is_witness(&result, false) {
            return Ok(Some(Counterexample { instance, result }));
        }
    }
    let mut spent = 0usize;
    for n in config.min_n.max(1)..=config.max_n {
        let structures = enumerate_divisible_structures(n)?;
        let blind: Vec<Event> = structures.iter().map(blindspots).collect();
        let space = structures[0].space().clone();
        let prior = Measure::uniform(&space);
        for (a, first) in structures.iter().enumerate() {
            for (b, second) in structures.iter().enumerate() {
                if (blind[a] == blind[b]) != config.equal_blindspots {
                    continue;
                }
                let profile = Profile::numbered(vec![first.clone(), second.clone()])?;
                for mask in 0..1u64 << n {
                    let decision = DecisionFunction::posterior(prior.clone(), Event::from_mask(n, mask))?;
                    for state in 0..n {
                        if spent >= config.budget {
                            return Ok(None);
                        }
                        spent += 1;
                        let result = agreement_check(&profile, &decision, state)?;
                        if is_witness(&result, config.equal_blindspots) {
                            let instance = AgreementInstance { profile, decision, state };
                            return Ok(Some(Counterexample { instance, result }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionConfig {
    pub seed: u64,
    pub max_players: usize,
    pub max_actions: usize,
    pub max_types: usize,
    /// Cap on `|A| · |T|`.
    pub max_states: usize,
    pub max_retries: usize,
}

impl Default for ExtensionConfig {
    fn default() -> Self {
        ExtensionConfig { seed: 0, max_players: 3, max_actions: 3, max_types: 3, max_states: 64, max_retries: 1000 }
    }
}

/// A generated extension with one credal set per player.
#[derive(Debug, Clone)]
pub struct ExtensionInstance {
    pub extension: EpistemicExtension,
    pub model: ExtensionModel,
    pub credals: Vec<CredalSet>,
}

fn random_type<R: Rng + ?Sized>(rng: &mut R, width: usize, support: &[usize]) -> Vec<Rational> {
    let raw: Vec<i64> = support.iter().map(|_| rng.gen_range(1..=5)).collect();
    let total: i64 = raw.iter().sum();
    let mut t = vec![Rational::zero(); width];
    for (&b, &w) in support.iter().zip(&raw) {
        t[b] = ratio(w, total);
    }
    t
}

fn draw_extension<R: Rng + ?Sized>(rng: &mut R, config: &ExtensionConfig) -> Result<Option<EpistemicExtension>> {
    let players = rng.gen_range(2..=config.max_players.max(2));
    let names: Vec<String> = (1..=players).map(|i| i.to_string()).collect();
    let actions: Vec<Vec<String>> = (0..players)
        .map(|_| (0..rng.gen_range(1..=config.max_actions.max(1))).map(|a| format!("a{a}")).collect())
        .collect();
    let game = StrategicGame::without_payoffs(names, actions)?;
    let mut types = Vec::with_capacity(players);
    for i in 0..players {
        let width = game.opponent_count(i);
        let mut profiles: Vec<usize> = (0..width).collect();
        profiles.shuffle(rng);
        let support = &profiles[..rng.gen_range(1..=width)];
        // every type of a player shares one support; a singleton support allows one type
        let wanted = if support.len() == 1 { 1 } else { rng.gen_range(1..=config.max_types.max(1)) };
        let mut list: Vec<Vec<Rational>> = Vec::new();
        for _ in 0..wanted * 4 {
            if list.len() == wanted {
                break;
            }
            let t = random_type(rng, width, support);
            if !list.contains(&t) {
                list.push(t);
            }
        }
        types.push(list);
    }
    let extension = EpistemicExtension::new(game, TypeAssignment::new(types))?;
    Ok((extension.state_count() <= config.max_states).then_some(extension))
}

/// Measures witnessing each positive type probability, plus one covering measure.
///
/// For a type `t` and opponent profile `b` with `t(b) > 0`, the measure puts
/// mass `t(b)` uniformly on `⟦b⟧` and the rest uniformly on the other
/// accessible states, so it is positive exactly off the blindspots.
fn witness_credal(model: &ExtensionModel, player: usize) -> Result<CredalSet> {
    let space = model.space();
    let accessible = model.type_blindspots(player).complement();
    let mut measures = vec![Measure::uniform_on(space, &accessible)?];
    for t in model.extension().types().of(player) {
        for (b, p) in t.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let inside = model.event_of_opponent_profile(player, b)?;
            let outside = &accessible - &inside;
            let rest = Rational::one() - p;
            let mut weights = vec![Rational::zero(); space.len()];
            let inside_share = p / integer(inside.count() as i64);
            for s in inside.iter() {
                weights[s] = inside_share.clone();
            }
            if !outside.is_empty() {
                let outside_share = &rest / integer(outside.count() as i64);
                for s in outside.iter() {
                    weights[s] = outside_share.clone();
                }
            }
            measures.push(Measure::new(space, weights)?);
        }
    }
    CredalSet::new(measures)
}

/// Random extension whose credal sets satisfy both hypotheses of the
/// type-induced belief theorem: every measure vanishes exactly on the
/// blindspots, and each type probability is matched by some measure.
///
/// Both hypotheses together force all of a player's types to share one
/// support, so the generator draws that support first.
pub fn random_extension_instance<R: Rng + ?Sized>(rng: &mut R, config: &ExtensionConfig) -> Result<ExtensionInstance> {
    for _ in 0..config.max_retries.max(1) {
        let Some(extension) = draw_extension(rng, config)? else { continue };
        let model = extension.build_state_space(config.max_states)?;
        let players = model.game().players().len();
        let credals = (0..players).map(|i| witness_credal(&model, i)).collect::<Result<Vec<_>>>()?;
        let b1 = (0..players).all(|i| {
            let info = info_from_relation(&model.relation_from_types(i));
            check_b1_per_measure(&credals[i], &info).map(|o| o.passed()).unwrap_or(false)
        });
        if b1 && model.check_c1(&credals, C1Mode::PerProfile)?.passed() {
            return Ok(ExtensionInstance { extension, model, credals });
        }
    }
    Err(Error::GenerationExhausted(config.max_retries.max(1)))
}

pub fn extension_instances(config: &ExtensionConfig, count: usize) -> Result<Vec<ExtensionInstance>> {
    let mut rng = rng_for(config.seed);
    (0..count).map(|_| random_extension_instance(&mut rng, config)).collect()
}

/// Divisible structures among all relations on `n` states, by brute force.
pub fn count_divisible_relations(n: usize) -> Result<usize> {
    Ok(enumerate_relations(n)?
        .filter(|r| check_structure_properties(&info_from_relation(r)).divisible)
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::relation_from_info;

    #[test]
    fn relation_counts() {
        assert_eq!(enumerate_relations(1).unwrap().count(), 2);
        assert_eq!(enumerate_relations(2).unwrap().count(), 16);
        assert_eq!(count_divisible_relations(2).unwrap(), 4);
        assert!(matches!(enumerate_relations(6).err(), Some(Error::CapExceeded { requested: 6, cap: 5 })));
        let first: Vec<_> = enumerate_relations(2).unwrap().take(3).map(|r| r.pairs().collect::<Vec<_>>()).collect();
        assert_eq!(first, vec![vec![], vec![(0, 0)], vec![(0, 1)]]);
    }

    #[test]
    fn divisible_enumeration_matches_brute_force() {
        for n in 1..=3 {
            let listed = enumerate_divisible_structures(n).unwrap();
            assert_eq!(listed.len(), count_divisible_relations(n).unwrap(), "n = {n}");
            let mut relations: Vec<Relation> = listed.iter().map(relation_from_info).collect();
            relations.dedup();
            assert_eq!(relations.len(), listed.len());
            assert!(listed.iter().all(|s| check_structure_properties(s).divisible));
        }
    }

    #[test]
    fn divisible_generator_examples() {
        let config = |n, b: BlindspotSpec, seed| GeneratorConfig { n, seed, blindspots: b, ..Default::default() };
        let forward = random_divisible_structure(&config(2, BlindspotSpec::Exactly(vec![0]), 7)).unwrap();
        let space = forward.space().clone();
        assert_eq!(forward.sets(), [space.event(&["w2"]).unwrap(), space.event(&["w2"]).unwrap()]);

        let one = random_divisible_structure(&config(1, BlindspotSpec::Empty, 3)).unwrap();
        assert_eq!(one.set(0), &Event::full(1));

        let mut seen = std::collections::HashSet::new();
        for seed in 0..50 {
            let s = random_divisible_structure(&config(2, BlindspotSpec::Empty, seed)).unwrap();
            assert!(check_structure_properties(&s).partitional);
            seen.insert(s.sets().to_vec());
        }
        assert_eq!(seen.len(), 2);

        let err = random_divisible_structure(&config(2, BlindspotSpec::Exactly(vec![0, 1]), 0));
        assert_eq!(err.unwrap_err(), Error::InvalidBlindspotSet);
    }

    #[test]
    fn divisible_generator_hits_requested_blindspots() {
        let mut rng = rng_for(11);
        for n in 1..=7 {
            let space = StateSpace::numbered(n).unwrap();
            for _ in 0..30 {
                let blind = resolve_blindspots(&mut rng, n, &BlindspotSpec::Random).unwrap();
                let s = random_divisible_with(&mut rng, &space, &blind).unwrap();
                assert!(check_structure_properties(&s).divisible);
                assert_eq!(blindspots(&s), blind);
            }
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let config = GeneratorConfig { n: 5, seed: 42, ..Default::default() };
        let a = agreement_instances(&config, 5).unwrap();
        let b = agreement_instances(&config, 5).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.profile, y.profile);
            assert_eq!(x.decision, y.decision);
            assert_eq!(x.state, y.state);
        }
        let space = StateSpace::numbered(4).unwrap();
        assert_eq!(random_relations(&space, 10, 3), random_relations(&space, 10, 3));
        let e1 = extension_instances(&ExtensionConfig { seed: 9, ..Default::default() }, 3).unwrap();
        let e2 = extension_instances(&ExtensionConfig { seed: 9, ..Default::default() }, 3).unwrap();
        for (x, y) in e1.iter().zip(&e2) {
            assert_eq!(x.extension, y.extension);
            assert_eq!(x.credals, y.credals);
        }
    }

    #[test]
    fn agreement_instances_satisfy_hypotheses() {
        let config = GeneratorConfig { n: 4, players: 3, seed: 5, ..Default::default() };
        for instance in agreement_instances(&config, 20).unwrap() {
            let result = instance.check().unwrap();
            assert!(result.hypotheses_hold());
            assert!(result.all_equal);
        }
        let shared = GeneratorConfig { n: 3, blindspots: BlindspotSpec::Empty, ..Default::default() };
        assert!(agreement_instances(&shared, 3).is_ok());
    }

    #[test]
    fn builtin_counterexample_comes_first() {
        let found = search_agreement_counterexample(&SearchConfig::default()).unwrap().unwrap();
        assert_eq!(found.instance.profile.space().len(), 2);
        assert_eq!(found.result.decisions[0].to_string(), "1");
        assert_eq!(found.result.decisions[1].to_string(), "0");
        assert!(!found.result.equal_blindspots);
    }

    #[test]
    fn search_finds_witness_at_three_states() {
        let config = SearchConfig { include_builtin: false, min_n: 3, max_n: 3, ..Default::default() };
        let found = search_agreement_counterexample(&config).unwrap().unwrap();
        let result = found.instance.check().unwrap();
        assert_eq!(found.instance.profile.space().len(), 3);
        assert!(!result.equal_blindspots && result.common_information && !result.all_equal);
    }

    #[test]
    fn equal_blindspots_search_finds_nothing() {
        let config = SearchConfig { equal_blindspots: true, max_n: 3, ..Default::default() };
        assert!(search_agreement_counterexample(&config).unwrap().is_none());
    }

    #[test]
    fn extension_instances_satisfy_hypotheses() {
        for inst in extension_instances(&ExtensionConfig { seed: 1, ..Default::default() }, 10).unwrap() {
            let report = inst.model.verify_extension_theorem(&inst.credals).unwrap();
            assert!(report.players.iter().all(|p| p.hypotheses_hold()));
            assert!(report.all_verified());
        }
    }
}
