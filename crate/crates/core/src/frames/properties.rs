use super::{InfoStructure, Relation};
use crate::report::Check;

/// Serial / transitive / Euclidean flags with lexicographically first witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationProperties {
    /// Witness: a state with no successor.
    pub serial: Check<usize>,
    /// Witness `(a, b, c)`: `a ⤳ b`, `b ⤳ c`, not `a ⤳ c`.
    pub transitive: Check<(usize, usize, usize)>,
    /// Witness `(a, b, c)`: `a ⤳ b`, `a ⤳ c`, not `b ⤳ c`.
    pub euclidean: Check<(usize, usize, usize)>,
}

/// Viable / inclusive / mutual flags, plus the derived divisible and partitional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureProperties {
    /// Witness: a state with an empty information set.
    pub viable: Check<usize>,
    /// Witness `(w, v, x)`: `v ∈ I(w)`, `x ∈ I(v)`, `x ∉ I(w)`.
    pub inclusive: Check<(usize, usize, usize)>,
    /// Witness `(w, v, x)`: `v, x ∈ I(w)`, `x ∉ I(v)`.
    pub mutual: Check<(usize, usize, usize)>,
    pub divisible: bool,
    /// Divisible and `I(Ω) = Ω`.
    pub partitional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub relation: RelationProperties,
    pub structure: StructureProperties,
}

pub fn check_relation_properties(rel: &Relation) -> RelationProperties {
    let n = rel.space().len();
    let serial = (0..n).find(|&a| rel.successors(a).is_empty());

    let mut transitive = None;
    'outer: for a in 0..n {
        for b in rel.successors(a).iter() {
            if let Some(c) = (rel.successors(b) - rel.successors(a)).first() {
                transitive = Some((a, b, c));
                break 'outer;
            }
        }
    }

    let mut euclidean = None;
    'outer: for a in 0..n {
        let row = rel.successors(a);
        for b in row.iter() {
            if let Some(c) = (row - rel.successors(b)).first() {
                euclidean = Some((a, b, c));
                break 'outer;
            }
        }
    }

    RelationProperties {
        serial: Check::from_witness(serial),
        transitive: Check::from_witness(transitive),
        euclidean: Check::from_witness(euclidean),
    }
}

pub fn check_structure_properties(info: &InfoStructure) -> StructureProperties {
    let n = info.space().len();
    let viable = (0..n).find(|&w| info.set(w).is_empty());

    let mut inclusive = None;
    'outer: for w in 0..n {
        for v in info.set(w).iter() {
            if let Some(x) = (info.set(v) - info.set(w)).first() {
                inclusive = Some((w, v, x));
                break 'outer;
            }
        }
    }

    let mut mutual = None;
    'outer: for w in 0..n {
        for v in info.set(w).iter() {
            for x in info.set(w).iter() {
                if !info.set(v).contains(x) {
                    mutual = Some((w, v, x));
                    break 'outer;
                }
            }
        }
    }

    let divisible = viable.is_none() && inclusive.is_none() && mutual.is_none();
    let partitional = divisible && info.full_image().is_full();
    StructureProperties {
        viable: Check::from_witness(viable),
        inclusive: Check::from_witness(inclusive),
        mutual: Check::from_witness(mutual),
        divisible,
        partitional,
    }
}

impl StructureProperties {
    pub fn is_divisible(&self) -> bool {
        self.divisible
    }
}

impl PropertyReport {
    pub fn of_relation(rel: &Relation) -> Self {
        PropertyReport {
            relation: check_relation_properties(rel),
            structure: check_structure_properties(&super::info_from_relation(rel)),
        }
    }
}
