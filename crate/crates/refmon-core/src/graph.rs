//! Graphs of atom sets in the type A, B and D intersection lattices.
//!
//! An atom `(v_i - v_j)^⊥` is a plain edge, `(v_i + v_j)^⊥` a double edge and
//! `v_i^⊥` a loop at `i`. A circuit is odd when it has an odd number of double
//! edges. Independence and minimal dependence are then read off the shape of
//! the graph.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::lattice::{for_each_subset, Lattice, Payload};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    /// `t_i = t_j`
    Plain(u8, u8),
    /// `t_i = -t_j`
    Double(u8, u8),
    /// `t_i = 0`
    Loop(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    /// Every component is a tree.
    Forest,
    /// Independent; some component is a tree with one loop, none has an odd circuit.
    B1,
    /// Independent; some component has a unique odd circuit.
    B2,
    EvenCircuit,
    /// An odd circuit with a loop at one of its vertices.
    OddCircuitWithLoop,
    /// Two odd circuits meeting in a single vertex.
    TwoOddCircuits,
    /// A line whose two ends each carry a loop or an odd circuit.
    Line,
    /// Dependent but not minimally so.
    Dependent,
}

impl GraphClass {
    pub fn is_independent(self) -> bool {
        matches!(self, GraphClass::Forest | GraphClass::B1 | GraphClass::B2)
    }

    pub fn is_minimally_dependent(self) -> bool {
        matches!(
            self,
            GraphClass::EvenCircuit | GraphClass::OddCircuitWithLoop | GraphClass::TwoOddCircuits | GraphClass::Line
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomGraph {
    pub n: usize,
    pub edges: Vec<Edge>,
}

struct Component {
    vertices: usize,
    edges: usize,
    loops: usize,
    balanced: bool,
}

/// Decodes a hyperplane atom of a type A/B/D lattice.
pub fn atom_edge(p: &Payload) -> Option<Edge> {
    let Payload::Sub(v) = p else { return None };
    if let Some(i) = v.iter().position(|&x| x == 0) {
        return (v.iter().filter(|&&x| x == 0).count() == 1).then_some(Edge::Loop(i as u8 + 1));
    }
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return Some(Edge::Plain(i as u8 + 1, j as u8 + 1));
            }
            if v[i] == -v[j] {
                return Some(Edge::Double(i as u8 + 1, j as u8 + 1));
            }
        }
    }
    None
}

impl AtomGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Self {
        AtomGraph { n, edges }
    }

    /// Graph of a set of atoms (0-based atom numbers) of a geometric lattice.
    pub fn from_atoms(l: &Lattice, atoms: &[usize]) -> Result<Self> {
        if !l.kind().is_geometric() {
            return Err(Error::UnsupportedKind(format!("no atom graph for {}", l.kind())));
        }
        let edges = atoms
            .iter()
            .map(|&a| atom_edge(l.payload(l.atom(a))).ok_or_else(|| Error::NotAdmissible(format!("{} is not an atom", l.render(l.atom(a))))))
            .collect::<Result<Vec<_>>>()?;
        Ok(AtomGraph { n: l.kind().ground(), edges })
    }

    fn ends(e: Edge) -> (usize, usize) {
        match e {
            Edge::Plain(i, j) | Edge::Double(i, j) => (i as usize, j as usize),
            Edge::Loop(i) => (i as usize, i as usize),
        }
    }

    /// Components spanned by the edges (isolated vertices are skipped).
    fn components(&self) -> Vec<Component> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &e in &self.edges {
            let (i, j) = Self::ends(e);
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
        // parity labelling, ignoring loops
        let mut label: Vec<Option<bool>> = vec![None; n + 1];
        let mut touched = vec![false; n + 1];
        for &e in &self.edges {
            let (i, j) = Self::ends(e);
            touched[i] = true;
            touched[j] = true;
        }
        let mut unbalanced = vec![false; n + 1];
        for start in 1..=n {
            if !touched[start] || label[start].is_some() {
                continue;
            }
            label[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &e in &self.edges {
                    let (i, j, odd) = match e {
                        Edge::Plain(i, j) => (i as usize, j as usize, false),
                        Edge::Double(i, j) => (i as usize, j as usize, true),
                        Edge::Loop(_) => continue,
                    };
                    let w = if i == u {
                        j
                    } else if j == u {
                        i
                    } else {
                        continue;
                    };
                    let want = label[u].unwrap() ^ odd;
                    match label[w] {
                        None => {
                            label[w] = Some(want);
                            stack.push(w);
                        }
                        Some(l) if l != want => {
                            let r = find(&mut parent, u);
                            unbalanced[r] = true;
                        }
                        _ => {}
                    }
                }
            }
        }
        let mut out = Vec::new();
        for root in 1..=n {
            if !touched[root] || find(&mut parent, root) != root {
                continue;
            }
            let mut c = Component { vertices: 0, edges: 0, loops: 0, balanced: !unbalanced[root] };
            for v in 1..=n {
                if touched[v] && find(&mut parent, v) == root {
                    c.vertices += 1;
                }
            }
            for &e in &self.edges {
                if find(&mut parent, Self::ends(e).0) == root {
                    c.edges += 1;
                    if matches!(e, Edge::Loop(_)) {
                        c.loops += 1;
                    }
                }
            }
            out.push(c);
        }
        out
    }

    pub fn is_independent(&self) -> bool {
        self.components().iter().all(|c| {
            c.edges + 1 == c.vertices || (c.edges == c.vertices && (c.loops == 1 || (c.loops == 0 && !c.balanced)))
        })
    }

    /// Rank of the join of the atoms: `n` minus the number of balanced,
    /// loop-free components (isolated vertices included).
    pub fn rank(&self) -> usize {
        let comps = self.components();
        let touched: usize = comps.iter().map(|c| c.vertices).sum();
        let free = comps.iter().filter(|c| c.balanced && c.loops == 0).count() + (self.n - touched);
        self.n - free
    }

    fn without(&self, i: usize) -> AtomGraph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        AtomGraph { n: self.n, edges }
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for &e in &self.edges {
            match e {
                Edge::Loop(i) => deg[i as usize] += 1,
                Edge::Plain(i, j) | Edge::Double(i, j) => {
                    deg[i as usize] += 1;
                    deg[j as usize] += 1;
                }
            }
        }
        deg
    }

    pub fn classify(&self) -> GraphClass {
        let comps = self.components();
        if self.is_independent() {
            return if comps.iter().any(|c| c.edges == c.vertices && c.loops == 0) {
                GraphClass::B2
            } else if comps.iter().any(|c| c.loops > 0) {
                GraphClass::B1
            } else {
                GraphClass::Forest
            };
        }
        let minimal = (0..self.edges.len()).all(|i| self.without(i).is_independent());
        if !minimal || comps.len() != 1 {
            return GraphClass::Dependent;
        }
        let c = &comps[0];
        let deg = self.degrees();
        if c.edges == c.vertices && c.loops == 0 {
            return GraphClass::EvenCircuit;
        }
        match c.loops {
            2 => GraphClass::Line,
            1 => {
                let at = self.edges.iter().find_map(|&e| if let Edge::Loop(i) = e { Some(i as usize) } else { None }).unwrap();
                if deg[at] == 3 {
                    GraphClass::OddCircuitWithLoop
                } else {
                    GraphClass::Line
                }
            }
            _ => {
                if deg.contains(&4) {
                    GraphClass::TwoOddCircuits
                } else {
                    GraphClass::Line
                }
            }
        }
    }
}

/// Minimally dependent atom sets of a type A/B/D lattice, found by
/// classifying the graph of every atom set of size at most `rank + 1`.
pub fn minimally_dependent_sets(l: &Lattice) -> Result<Vec<Vec<usize>>> {
    if !l.kind().is_geometric() {
        return Err(Error::UnsupportedKind(format!("{} is not geometric; use brute force", l.kind())));
    }
    let edges: Vec<Edge> = (0..l.natoms()).map(|a| atom_edge(l.payload(l.atom(a))).unwrap()).collect();
    let n = l.kind().ground();
    let mut out = Vec::new();
    for k in 1..=(l.height() + 1).min(l.natoms()) {
        for_each_subset(l.natoms(), k, |s| {
            let g = AtomGraph::new(n, s.iter().map(|&a| edges[a]).collect());
            if g.classify().is_minimally_dependent() {
                out.push(s.to_vec());
            }
        });
    }
    Ok(out)
}
