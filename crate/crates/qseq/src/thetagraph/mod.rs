//! The functional graph of alpha -> alpha + 1/alpha on the projective
//! line over a binary field of degree n, with the machinery to verify
//! its structural properties at desk scale.
//!
//! Vertices are the 2^n + 1 projective points. Each vertex carries its
//! trace-based set membership (equal traces of alpha and 1/alpha, plus 0
//! and infinity, on the A side), a periodic flag, the tree level
//! (distance to the nearest cycle vertex), and its tree children.

mod export;
mod field;

pub use field::{smallest_irreducible, Field, FieldElem, ProjPoint};

use std::collections::VecDeque;

use thiserror::Error;

use crate::gf2poly::BitPoly;

/// Enumeration cap: graphs have 2^n + 1 vertices.
pub const MAX_GRAPH_DEGREE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaGraphError {
    #[error("graph degree {n} exceeds the enumeration cap {cap}")]
    DegreeTooLarge { n: usize, cap: usize },
    #[error("bad modulus {modulus}: {reason}")]
    BadModulus {
        modulus: BitPoly,
        reason: &'static str,
    },
}

/// Which side of the trace partition a vertex is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    A,
    B,
}

impl std::fmt::Display for Membership {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Membership::A => write!(f, "A"),
            Membership::B => write!(f, "B"),
        }
    }
}

/// The functional graph for one field. Vertex indices are residue bit
/// patterns, with the point at infinity last.
#[derive(Debug, Clone)]
pub struct ThetaGraph {
    field: Field,
    l: u32,
    successor: Vec<u32>,
    membership: Vec<Membership>,
    periodic: Vec<bool>,
    level: Vec<u32>,
    children: Vec<Vec<u32>>,
}

/// One verified property with its counterexamples, if any.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Result of `verify_structure`: the pass/fail checks plus the observed
/// tree depths of the B-side components, which the theory makes no
/// claim about and which are reported as-is.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub checks: Vec<CheckOutcome>,
    pub b_tree_depths: Vec<u32>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Enumerates the graph for degree n. With no modulus given, the
/// hex-smallest irreducible of degree n is used, which pins the vertex
/// labelling across runs.
pub fn build_graph(n: usize, modulus: Option<BitPoly>) -> Result<ThetaGraph, ThetaGraphError> {
    if n == 0 || n > MAX_GRAPH_DEGREE {
        return Err(ThetaGraphError::DegreeTooLarge {
            n,
            cap: MAX_GRAPH_DEGREE,
        });
    }
    let field = match modulus {
        None => Field::new(n)?,
        Some(m) => {
            if m.degree() != Some(n) {
                return Err(ThetaGraphError::BadModulus {
                    modulus: m,
                    reason: "degree does not match the requested n",
                });
            }
            Field::with_modulus(m)?
        }
    };

    let order = 1usize << n;
    let size = order + 1;
    let inf = order as u32;

    let mut successor = vec![0u32; size];
    let mut membership = vec![Membership::A; size];
    successor[0] = inf;
    successor[inf as usize] = inf;
    for bits in 1..order as u64 {
        let alpha = field.elem_from_bits(bits);
        let inv = field.inv(&alpha).expect("nonzero element");
        successor[bits as usize] = field.add(&alpha, &inv).to_bits() as u32;
        membership[bits as usize] = if field.trace(&alpha) == field.trace(&inv) {
            Membership::A
        } else {
            Membership::B
        };
    }

    // Cycle vertices are the ones that survive repeated removal of
    // in-degree-zero vertices.
    let mut in_degree = vec![0u32; size];
    for &v in &successor {
        in_degree[v as usize] += 1;
    }
    let mut queue: VecDeque<u32> = (0..size as u32)
        .filter(|&v| in_degree[v as usize] == 0)
        .collect();
    let mut periodic = vec![true; size];
    while let Some(v) = queue.pop_front() {
        periodic[v as usize] = false;
        let next = successor[v as usize] as usize;
        in_degree[next] -= 1;
        if in_degree[next] == 0 {
            queue.push_back(next as u32);
        }
    }

    // Tree edges run from a vertex to its non-periodic preimages.
    let mut children = vec![Vec::new(); size];
    for v in 0..size {
        if !periodic[v] {
            children[successor[v] as usize].push(v as u32);
        }
    }

    // Levels by breadth-first search away from the cycles.
    let mut level = vec![0u32; size];
    let mut queue: VecDeque<u32> = (0..size as u32).filter(|&v| periodic[v as usize]).collect();
    while let Some(v) = queue.pop_front() {
        for &c in &children[v as usize] {
            level[c as usize] = level[v as usize] + 1;
            queue.push_back(c);
        }
    }

    Ok(ThetaGraph {
        field,
        l: n.trailing_zeros(),
        successor,
        membership,
        periodic,
        level,
        children,
    })
}

impl ThetaGraph {
    pub fn n(&self) -> usize {
        self.field.n()
    }

    /// The exponent of the 2-part of n; trees on the A side have depth
    /// exactly l+2.
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn modulus(&self) -> &BitPoly {
        self.field.modulus()
    }

    /// Number of vertices, 2^n + 1.
    pub fn point_count(&self) -> usize {
        self.successor.len()
    }

    pub fn infinity_index(&self) -> usize {
        self.point_count() - 1
    }

    pub fn point_at(&self, index: usize) -> ProjPoint {
        if index == self.infinity_index() {
            ProjPoint::Infinity
        } else {
            ProjPoint::Finite(self.field.elem_from_bits(index as u64))
        }
    }

    pub fn index_of(&self, point: &ProjPoint) -> usize {
        match point {
            ProjPoint::Infinity => self.infinity_index(),
            ProjPoint::Finite(e) => e.to_bits() as usize,
        }
    }

    /// Vertex label for exports and reports: the residue in hex, or
    /// "inf".
    pub fn label(&self, index: usize) -> String {
        if index == self.infinity_index() {
            "inf".to_string()
        } else {
            BitPoly::from_u64(index as u64).to_hex_string()
        }
    }

    pub fn successor_index(&self, index: usize) -> usize {
        self.successor[index] as usize
    }

    pub fn membership(&self, index: usize) -> Membership {
        self.membership[index]
    }

    pub fn is_periodic(&self, index: usize) -> bool {
        self.periodic[index]
    }

    pub fn level(&self, index: usize) -> u32 {
        self.level[index]
    }

    pub fn children(&self, index: usize) -> &[u32] {
        &self.children[index]
    }

    /// Indices of all vertices on the A side.
    pub fn a_side_count(&self) -> usize {
        self.membership
            .iter()
            .filter(|m| matches!(m, Membership::A))
            .count()
    }

    /// Depth of the tree hanging off one vertex: the maximum level
    /// reachable through tree edges.
    fn tree_depth(&self, root: usize) -> u32 {
        let mut depth = 0;
        let mut stack = vec![root as u32];
        while let Some(v) = stack.pop() {
            depth = depth.max(self.level[v as usize]);
            stack.extend_from_slice(&self.children[v as usize]);
        }
        depth
    }

    /// Checks the structural claims the sequence construction rests on:
    /// in-degrees (two or zero arrows, counting the double preimage at
    /// vertex 0 with multiplicity, and the set-wise reading where vertex
    /// 0 is the lone exception), component homogeneity with respect to
    /// the trace partition, and the A-side tree shape (depth exactly
    /// l+2, two children at every non-zero level below that, vertex 0
    /// excepted).
    pub fn verify_structure(&self) -> StructureReport {
        let size = self.point_count();
        let mut checks = Vec::new();

        let mut in_set = vec![0u32; size];
        for &v in &self.successor {
            in_set[v as usize] += 1;
        }

        // Preimages of a finite vertex b are the roots of x^2 + bx + 1,
        // which has a repeated root exactly when b = 0 (the derivative
        // is the constant b). So vertex 0 counts its preimages twice.
        let mut mult = CheckOutcome {
            name: "in_degree_multiplicity",
            checked: size,
            counterexamples: Vec::new(),
        };
        for (v, &count) in in_set.iter().enumerate() {
            let with_mult = if v == 0 { 2 * count } else { count };
            if with_mult != 0 && with_mult != 2 {
                mult.counterexamples.push(format!(
                    "{}: in-degree {} with multiplicity",
                    self.label(v),
                    with_mult
                ));
            }
        }
        checks.push(mult);

        let mut setwise = CheckOutcome {
            name: "in_degree_setwise",
            checked: size,
            counterexamples: Vec::new(),
        };
        for (v, &count) in in_set.iter().enumerate() {
            let ok = if v == 0 {
                count == 1
            } else {
                count == 0 || count == 2
            };
            if !ok {
                setwise
                    .counterexamples
                    .push(format!("{}: set-wise in-degree {count}", self.label(v)));
            }
        }
        checks.push(setwise);

        // Weak connectivity via union-find over the successor edges.
        let mut parent: Vec<u32> = (0..size as u32).collect();
        fn find(parent: &mut [u32], v: u32) -> u32 {
            let mut root = v;
            while parent[root as usize] != root {
                root = parent[root as usize];
            }
            let mut cur = v;
            while parent[cur as usize] != root {
                let next = parent[cur as usize];
                parent[cur as usize] = root;
                cur = next;
            }
            root
        }
        for v in 0..size as u32 {
            let a = find(&mut parent, v);
            let b = find(&mut parent, self.successor[v as usize]);
            if a != b {
                parent[a as usize] = b;
            }
        }
        let mut homogeneity = CheckOutcome {
            name: "component_homogeneity",
            checked: 0,
            counterexamples: Vec::new(),
        };
        let mut component_side: Vec<Option<Membership>> = vec![None; size];
        let mut mixed: Vec<u32> = Vec::new();
        for v in 0..size as u32 {
            let root = find(&mut parent, v) as usize;
            match component_side[root] {
                None => {
                    component_side[root] = Some(self.membership[v as usize]);
                    homogeneity.checked += 1;
                }
                Some(side) => {
                    if side != self.membership[v as usize] && !mixed.contains(&(root as u32)) {
                        mixed.push(root as u32);
                    }
                }
            }
        }
        for root in mixed {
            homogeneity.counterexamples.push(format!(
                "component of {} mixes both sides",
                self.label(root as usize)
            ));
        }
        checks.push(homogeneity);

        let want_depth = self.l + 2;
        let mut depth_check = CheckOutcome {
            name: "tree_depth",
            checked: 0,
            counterexamples: Vec::new(),
        };
        let mut b_tree_depths = Vec::new();
        for v in 0..size {
            if !self.periodic[v] {
                continue;
            }
            let depth = self.tree_depth(v);
            match self.membership[v] {
                Membership::A => {
                    depth_check.checked += 1;
                    if depth != want_depth {
                        depth_check.counterexamples.push(format!(
                            "tree at {} has depth {depth}, expected {want_depth}",
                            self.label(v)
                        ));
                    }
                }
                Membership::B => {
                    if !b_tree_depths.contains(&depth) {
                        b_tree_depths.push(depth);
                    }
                }
            }
        }
        b_tree_depths.sort_unstable();
        checks.push(depth_check);

        let mut two_children = CheckOutcome {
            name: "two_children",
            checked: 0,
            counterexamples: Vec::new(),
        };
        for v in 0..size {
            if self.membership[v] != Membership::A || self.periodic[v] {
                continue;
            }
            let lvl = self.level[v];
            if lvl == 0 || lvl >= want_depth {
                continue;
            }
            two_children.checked += 1;
            let found = self.children[v].len();
            // The lone set-wise exception: the preimage of 0 is the
            // double root 1 of x^2 + 1.
            let want = if v == 0 { 1 } else { 2 };
            if found != want {
                two_children.counterexamples.push(format!(
                    "{} at level {lvl} has {found} children, expected {want}",
                    self.label(v)
                ));
            }
        }
        checks.push(two_children);

        StructureReport {
            checks,
            b_tree_depths,
        }
    }
}
