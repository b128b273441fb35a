//! The belief operator `BE = { ω | I(ω) ⊆ E }`, its modal-axiom audit, and
//! credal sets with the blindspot/zero-mass consistency condition.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decisions::ScanMode;
use crate::error::{Error, Result};
use crate::frames::{blindspots, check_structure_properties, InfoStructure};
use crate::measure::Measure;
use crate::report::{Check, Report};
use crate::space::{Event, StateSpace};

/// States whose information set lies inside `event`.
pub fn believes(info: &InfoStructure, event: &Event) -> Event {
    let mut out = info.space().empty_event();
    for cell in info.cells() {
        if cell.set.is_subset(event) {
            out.union_with(&cell.holders);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditConfig {
    pub exhaustive_max_states: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { exhaustive_max_states: 8, samples: 100_000, seed: 0 }
    }
}

/// N, K, D, 4 and 5, each with the first failing event (or pair) when false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// `BΩ = Ω`.
    pub n: Check<()>,
    /// `B(E ∪ F) ∩ B¬E ⊆ BF`.
    pub k: Check<(Event, Event)>,
    /// `BE ⊆ ¬B¬E`.
    pub d: Check<Event>,
    /// `BE ⊆ BBE`.
    pub four: Check<Event>,
    /// `¬BE ⊆ B¬BE`.
    pub five: Check<Event>,
    pub mode: ScanMode,
}

impl AxiomReport {
    pub fn is_kd45(&self) -> bool {
        self.n.holds() && self.k.holds() && self.d.holds() && self.four.holds() && self.five.holds()
    }
}

pub fn audit_axioms(info: &InfoStructure) -> AxiomReport {
    audit_axioms_with(info, &AuditConfig::default())
}

pub fn audit_axioms_with(info: &InfoStructure, config: &AuditConfig) -> AxiomReport {
    let n = info.space().len();
    if n <= config.exhaustive_max_states && n <= 16 {
        audit_exhaustive(info)
    } else {
        audit_sampled(info, config)
    }
}

fn audit_exhaustive(info: &InfoStructure) -> AxiomReport {
    let n = info.space().len();
    let size = 1usize << n;
    let full = (size - 1) as u64;
    let b: Vec<u64> = (0..size as u64)
        .map(|m| believes(info, &Event::from_mask(n, m)).as_mask().expect("small space"))
        .collect();
    let ev = |m: u64| Event::from_mask(n, m);
    let sub = |a: u64, c: u64| a & !c == 0;

    let n_ax = if b[full as usize] == full { Check::Holds } else { Check::Fails(()) };
    let mut k = Check::Holds;
    'outer: for e in 0..=full {
        let not_e = b[(full & !e) as usize];
        for f in 0..=full {
            if !sub(b[(e | f) as usize] & not_e, b[f as usize]) {
                k = Check::Fails((ev(e), ev(f)));
                break 'outer;
            }
        }
    }
    let first = |bad: &dyn Fn(u64) -> bool| Check::from_witness((0..=full).find(|&e| bad(e)).map(ev));
    let d = first(&|e| !sub(b[e as usize], full & !b[(full & !e) as usize]));
    let four = first(&|e| !sub(b[e as usize], b[b[e as usize] as usize]));
    let five = first(&|e| {
        let not_be = full & !b[e as usize];
        !sub(not_be, b[not_be as usize])
    });
    AxiomReport { n: n_ax, k, d, four, five, mode: ScanMode::Exhaustive }
}

/// Events built from unions of distinct information cells, their
/// complements, `∅`, `Ω`, plus seeded random events.
fn sample_events(info: &InfoStructure, config: &AuditConfig, rng: &mut ChaCha8Rng) -> Vec<Event> {
    let space = info.space();
    let n = space.len();
    let cells = info.cells();
    let mut events = vec![space.empty_event(), space.full_event()];
    if cells.len() <= 12 {
        for mask in 1u64..(1u64 << cells.len()) {
            let mut e = space.empty_event();
            for (k, cell) in cells.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    e.union_with(&cell.set);
                }
            }
            events.push(e);
        }
    } else {
        for a in cells {
            for c in cells {
                events.push(&a.set | &c.set);
            }
        }
    }
    let generated = events.len();
    for i in 0..generated {
        let c = events[i].complement();
        events.push(c);
    }
    for s in 0..n {
        events.push(Event::singleton(n, s));
    }
    for _ in 0..config.samples {
        events.push(Event::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5))));
    }
    events
}

fn audit_sampled(info: &InfoStructure, config: &AuditConfig) -> AxiomReport {
    let space = info.space();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let events = sample_events(info, config, &mut rng);
    let b = |e: &Event| believes(info, e);

    let n_ax = if b(&space.full_event()).is_full() { Check::Holds } else { Check::Fails(()) };
    let mut d = None;
    let mut four = None;
    let mut five = None;
    for e in &events {
        let be = b(e);
        if d.is_none() && !be.is_subset(&b(&e.complement()).complement()) {
            d = Some(e.clone());
        }
        if four.is_none() && !be.is_subset(&b(&be)) {
            four = Some(e.clone());
        }
        let not_be = be.complement();
        if five.is_none() && !not_be.is_subset(&b(&not_be)) {
            five = Some(e.clone());
        }
    }

    let k_holds = |e: &Event, f: &Event| (&b(&(e | f)) & &b(&e.complement())).is_subset(&b(f));
    let mut k = None;
    let structured = events.len().min(64);
    'outer: for e in &events[..structured] {
        for f in &events[..structured] {
            if !k_holds(e, f) {
                k = Some((e.clone(), f.clone()));
                break 'outer;
            }
        }
    }
    if k.is_none() {
        for _ in 0..config.samples {
            let e = &events[rng.gen_range(0..events.len())];
            let f = &events[rng.gen_range(0..events.len())];
            if !k_holds(e, f) {
                k = Some((e.clone(), f.clone()));
                break;
            }
        }
    }

    AxiomReport {
        n: n_ax,
        k: Check::from_witness(k),
        d: Check::from_witness(d),
        four: Check::from_witness(four),
        five: Check::from_witness(five),
        mode: ScanMode::Sampled { samples: config.samples, seed: config.seed },
    }
}

/// Cross-checks the axiom audit against the structure properties:
/// D iff viable, 4 iff inclusive, 5 iff mutual; N and K always.
pub fn check_axiom_correspondence(info: &InfoStructure) -> Report {
    check_axiom_correspondence_with(info, &AuditConfig::default())
}

pub fn check_axiom_correspondence_with(info: &InfoStructure, config: &AuditConfig) -> Report {
    let axioms = audit_axioms_with(info, config);
    let props = check_structure_properties(info);
    let space = info.space();
    let mut report = Report::new();
    report.check("N holds", (!axioms.n.holds()).then(|| "BΩ ≠ Ω".to_string()));
    report.check(
        "K holds",
        axioms
            .k
            .witness()
            .map(|(e, f)| format!("E = {}, F = {}", space.render(e), space.render(f))),
    );
    let iff = |axiom: bool, prop: bool, w: Option<&Event>| {
        (axiom != prop).then(|| {
            format!(
                "axiom {axiom}, property {prop}{}",
                w.map(|e| format!(" (E = {})", space.render(e))).unwrap_or_default()
            )
        })
    };
    report.check("D iff viable", iff(axioms.d.holds(), props.viable.holds(), axioms.d.witness()));
    report.check(
        "4 iff inclusive",
        iff(axioms.four.holds(), props.inclusive.holds(), axioms.four.witness()),
    );
    report.check(
        "5 iff mutual",
        iff(axioms.five.holds(), props.mutual.holds(), axioms.five.witness()),
    );
    report
}

/// A nonempty, deduplicated set of probability measures over one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CredalSet {
    space: StateSpace,
    measures: Vec<Measure>,
}

impl CredalSet {
    pub fn new(measures: Vec<Measure>) -> Result<Self> {
        let first = measures.first().ok_or(Error::EmptyCredalSet)?;
        let space = first.space().clone();
        let mut unique: Vec<Measure> = Vec::with_capacity(measures.len());
        for m in measures {
            if *m.space() != space {
                return Err(Error::SpaceMismatch);
            }
            if !unique.contains(&m) {
                unique.push(m);
            }
        }
        Ok(CredalSet { space, measures: unique })
    }

    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn measures(&self) -> &[Measure] {
        &self.measures
    }

    /// States given positive mass by at least one measure.
    pub fn support_union(&self) -> Event {
        let mut out = self.space.empty_event();
        for m in &self.measures {
            out.union_with(&m.support());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B1Direction {
    /// A blindspot that some measure gives positive mass.
    BlindspotWithPositiveMass,
    /// An accessible state that gets zero mass (from every measure, or from the
    /// reported one in the per-measure reading).
    AccessibleWithZeroMass,
}

impl fmt::Display for B1Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            B1Direction::BlindspotWithPositiveMass => "blindspot-with-positive-mass",
            B1Direction::AccessibleWithZeroMass => "accessible-with-zero-mass",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum B1Outcome {
    Pass,
    /// `measure` is set by the per-measure check only.
    Violation { state: usize, measure: Option<usize>, direction: B1Direction },
}

impl B1Outcome {
    pub fn passed(&self) -> bool {
        *self == B1Outcome::Pass
    }
}

/// Blindspot iff every measure gives the state zero mass.
pub fn check_b1(credal: &CredalSet, info: &InfoStructure) -> Result<B1Outcome> {
    if credal.space != *info.space() {
        return Err(Error::SpaceMismatch);
    }
    let blind = blindspots(info);
    let charged = credal.support_union();
    for s in 0..credal.space.len() {
        match (blind.contains(s), charged.contains(s)) {
            (true, true) => {
                return Ok(B1Outcome::Violation {
                    state: s,
                    measure: None,
                    direction: B1Direction::BlindspotWithPositiveMass,
                })
            }
            (false, false) => {
                return Ok(B1Outcome::Violation {
                    state: s,
                    measure: None,
                    direction: B1Direction::AccessibleWithZeroMass,
                })
            }
            _ => {}
        }
    }
    Ok(B1Outcome::Pass)
}

/// Stricter reading: every single measure is zero exactly on the blindspots.
pub fn check_b1_per_measure(credal: &CredalSet, info: &InfoStructure) -> Result<B1Outcome> {
    if credal.space != *info.space() {
        return Err(Error::SpaceMismatch);
    }
    let blind = blindspots(info);
    for s in 0..credal.space.len() {
        for (k, m) in credal.measures.iter().enumerate() {
            let zero = m.weight(s).is_zero();
            if zero != blind.contains(s) {
                let direction = if zero {
                    B1Direction::AccessibleWithZeroMass
                } else {
                    B1Direction::BlindspotWithPositiveMass
                };
                return Ok(B1Outcome::Violation { state: s, measure: Some(k), direction });
            }
        }
    }
    Ok(B1Outcome::Pass)
}
