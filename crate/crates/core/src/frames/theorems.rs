use super::{
    blindspots, check_relation_properties, check_structure_properties, info_from_relation,
    relation_from_info, InfoStructure, Relation,
};
use crate::report::Report;

/// Checks the relation/structure correspondence and the blindspot
/// propositions on one relation. A failed line means an implementation bug.
pub fn verify_frame_theorems(rel: &Relation) -> Report {
    let space = rel.space();
    let label = |i: usize| space.label(i).to_string();
    let info = info_from_relation(rel);
    let rp = check_relation_properties(rel);
    let sp = check_structure_properties(&info);
    let mut report = Report::new();

    let iff = |a: bool, b: bool, what: &str| {
        (a != b).then(|| format!("{what}: relation says {a}, structure says {b}"))
    };
    report.check("serial iff viable", iff(rp.serial.holds(), sp.viable.holds(), "serial/viable"));
    report.check(
        "transitive iff inclusive",
        iff(rp.transitive.holds(), sp.inclusive.holds(), "transitive/inclusive"),
    );
    report.check(
        "euclidean iff mutual",
        iff(rp.euclidean.holds(), sp.mutual.holds(), "euclidean/mutual"),
    );

    let back = relation_from_info(&info);
    report.check(
        "relation round trip",
        (back != *rel).then(|| format!("{rel:?} became {back:?}")),
    );
    report.check(
        "structure round trip",
        (info_from_relation(&back) != info).then(|| "information sets changed".to_string()),
    );

    let blind = blindspots(&info);
    let covered = info.full_image();
    let law = if !blind.is_disjoint(&covered) {
        Some(format!("{} is both covered and blind", label((&blind & &covered).first().unwrap())))
    } else if !(&blind | &covered).is_full() {
        Some(format!("{} is neither", label((&blind | &covered).complement().first().unwrap())))
    } else {
        None
    };
    report.check("image and blindspots partition the space", law);

    if !sp.divisible {
        for name in [
            "divisible cells are disjoint or equal",
            "self-exclusion iff blindspot",
            "accessible states share the cell",
            "covered states see themselves",
        ] {
            report.not_met(name, "structure is not divisible");
        }
        return report;
    }

    report.check("divisible cells are disjoint or equal", disjoint_or_equal(&info));

    let n = space.len();
    let self_exclusion = (0..n)
        .find(|&w| !info.set(w).contains(w) != blind.contains(w))
        .map(|w| format!("state {}", label(w)));
    report.check("self-exclusion iff blindspot", self_exclusion);

    let mut shared = None;
    'outer: for w in 0..n {
        for v in info.set(w).iter() {
            if !info.set(v).contains(v) || info.set(v) != info.set(w) {
                shared = Some(format!("{} ∈ I({})", label(v), label(w)));
                break 'outer;
            }
        }
    }
    report.check("accessible states share the cell", shared);
    report.check("covered states see themselves", cross_membership(&info, &info));
    report
}

pub(crate) fn disjoint_or_equal(info: &InfoStructure) -> Option<String> {
    let cells = info.cells();
    for (i, a) in cells.iter().enumerate() {
        for b in &cells[i + 1..] {
            if !a.set.is_disjoint(&b.set) {
                let space = info.space();
                return Some(format!("{} overlaps {}", space.render(&a.set), space.render(&b.set)));
            }
        }
    }
    None
}

/// For divisible `a`, `b` with equal images: every `ν ∈ I_a(Ω)` has `ν ∈ I_b(ν)`.
pub(crate) fn cross_membership(a: &InfoStructure, b: &InfoStructure) -> Option<String> {
    a.full_image()
        .iter()
        .find(|&v| !b.set(v).contains(v))
        .map(|v| format!("{} ∉ I({})", a.space().label(v), a.space().label(v)))
}
