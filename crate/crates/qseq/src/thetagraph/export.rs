//! Text exports of a built graph.
//!
//! DOT: one node per projective point, node id and `label` are the hex
//! residue or "inf", `style=filled` with `fillcolor=lightblue` for the
//! A side and `fillcolor=lightsalmon` for the B side; edges on cycles
//! carry `style=bold, color=red`, tree edges are unstyled.
//!
//! JSON: `{n, l, modulus: {hex, text}, points: [...]}` where each point
//! has `point`, `successor`, `membership` ("A"/"B"), `periodic`,
//! `level` and `children`, in vertex-index order with infinity last.

use std::fmt::Write as _;

use serde::Serialize;

use super::{Membership, ThetaGraph};

#[derive(Serialize)]
struct ModulusJson {
    hex: String,
    text: String,
}

#[derive(Serialize)]
struct PointJson {
    point: String,
    successor: String,
    membership: &'static str,
    periodic: bool,
    level: u32,
    children: Vec<String>,
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    l: u32,
    modulus: ModulusJson,
    points: Vec<PointJson>,
}

impl ThetaGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph theta_n{} {{", self.n()).unwrap();
        writeln!(out, "  node [shape=circle, style=filled];").unwrap();
        for v in 0..self.point_count() {
            let color = match self.membership(v) {
                Membership::A => "lightblue",
                Membership::B => "lightsalmon",
            };
            writeln!(
                out,
                "  \"{0}\" [label=\"{0}\", fillcolor=\"{1}\"];",
                self.label(v),
                color
            )
            .unwrap();
        }
        for v in 0..self.point_count() {
            let styling = if self.is_periodic(v) {
                " [style=bold, color=red]"
            } else {
                ""
            };
            writeln!(
                out,
                "  \"{}\" -> \"{}\"{};",
                self.label(v),
                self.label(self.successor_index(v)),
                styling
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json_string(&self) -> String {
        let points = (0..self.point_count())
            .map(|v| PointJson {
                point: self.label(v),
                successor: self.label(self.successor_index(v)),
                membership: match self.membership(v) {
                    Membership::A => "A",
                    Membership::B => "B",
                },
                periodic: self.is_periodic(v),
                level: self.level(v),
                children: self
                    .children(v)
                    .iter()
                    .map(|&c| self.label(c as usize))
                    .collect(),
            })
            .collect();
        let graph = GraphJson {
            n: self.n(),
            l: self.l(),
            modulus: ModulusJson {
                hex: self.modulus().to_hex_string(),
                text: self.modulus().to_string(),
            },
            points,
        };
        serde_json::to_string_pretty(&graph).expect("serializable")
    }
}
