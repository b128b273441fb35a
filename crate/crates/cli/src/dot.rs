//! Graphviz export of accessibility relations.

use std::fmt::Write;

use doxa_core::games::ExtensionModel;
use doxa_core::rational::format_rational;
use doxa_core::{blindspots, relation_from_info, Profile};

#[derive(Debug, Clone, Default)]
pub struct DotOptions {
    /// Only this player; all players otherwise.
    pub player: Option<usize>,
    /// One graph with player-labeled edges instead of one graph per player.
    pub merged: bool,
}

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the profile; `degrees` adds type probabilities as edge labels.
pub fn export_dot(profile: &Profile, options: &DotOptions, degrees: Option<&ExtensionModel>) -> String {
    let space = profile.space();
    let n = space.len();
    let players: Vec<usize> = match options.player {
        Some(p) => vec![p],
        None => (0..profile.players().len()).collect(),
    };
    let degree = |p: usize, a: usize, b: usize| {
        degrees.map(|m| format_rational(&m.accessibility_degree(p, a, b).expect("indices come from the model")))
    };
    let mut out = String::new();
    if options.merged {
        let blind: Vec<_> = players.iter().map(|&p| blindspots(profile.structure(p))).collect();
        writeln!(out, "digraph merged {{").unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for s in 0..n {
            let who: Vec<&str> = players
                .iter()
                .zip(&blind)
                .filter(|(_, b)| b.contains(s))
                .map(|(&p, _)| profile.players()[p].as_str())
                .collect();
            if who.is_empty() {
                writeln!(out, "  {};", quote(space.label(s))).unwrap();
            } else {
                let note = quote(&format!("blindspot for {}", who.join(", ")));
                writeln!(out, "  {} [style=dashed, xlabel={note}];", quote(space.label(s))).unwrap();
            }
        }
        for &p in &players {
            let name = &profile.players()[p];
            for (a, b) in relation_from_info(profile.structure(p)).pairs() {
                let label = match degree(p, a, b) {
                    Some(d) => format!("{name}: {d}"),
                    None => name.clone(),
                };
                writeln!(out, "  {} -> {} [label={}];", quote(space.label(a)), quote(space.label(b)), quote(&label)).unwrap();
            }
        }
        writeln!(out, "}}").unwrap();
        return out;
    }
    for &p in &players {
        let blind = blindspots(profile.structure(p));
        writeln!(out, "digraph {} {{", quote(&profile.players()[p])).unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for s in 0..n {
            if blind.contains(s) {
                writeln!(out, "  {} [style=dashed, xlabel=\"blindspot\"];", quote(space.label(s))).unwrap();
            } else {
                writeln!(out, "  {};", quote(space.label(s))).unwrap();
            }
        }
        for (a, b) in relation_from_info(profile.structure(p)).pairs() {
            match degree(p, a, b) {
                Some(d) => writeln!(out, "  {} -> {} [label={}];", quote(space.label(a)), quote(space.label(b)), quote(&d)),
                None => writeln!(out, "  {} -> {};", quote(space.label(a)), quote(space.label(b))),
            }
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
    }
    out
}
