//! Concrete reflection monoids `M(W, S)`.
//!
//! An element is a pair `(X, g)` of a lattice element and a group element,
//! standing for the partial symmetry `g` restricted to `X`; two pairs are
//! equal when their `X` agree and the `g` lie in one coset `W_X g` of the
//! pointwise isotropy group. Multiplication is
//! `(X, g)(Y, h) = (X ∨ Y·g⁻¹, gh)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::{hyperplane_orbit_reps, CoxeterType, Group, SignedPerm};
use crate::lattice::{for_each_subset, Lattice, LatticeKind, Payload};
use crate::partial_map::{closure_by, EnumeratedMonoid};
use crate::subspace;
use crate::{Error, Result};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemKind {
    /// Coordinate subspaces `X(J)` under a Weyl group.
    Boolean(CoxeterType, usize),
    /// The intersection lattice of the reflecting hyperplanes.
    Arrangement(CoxeterType, usize),
    /// Intervals `E_{≥J}` of the cross-polytope face poset under all signed
    /// permutations (`even = false`) or the even ones.
    Octa { even: bool, ell: usize },
    /// Intervals of the permutohedron face poset under the symmetric group
    /// on `n` letters.
    Permutohedron(usize),
}

impl SystemKind {
    pub fn check(self) -> Result<()> {
        let bad = |msg: String| Err(Error::OutOfRange(msg));
        match self {
            SystemKind::Boolean(ty, n) | SystemKind::Arrangement(ty, n) => {
                let lo = if ty == CoxeterType::D { 3 } else { 2 };
                if n < lo || n > 6 {
                    return bad(format!("type {} system needs {lo} <= n <= 6, got {n}", ty.letter()));
                }
            }
            SystemKind::Octa { ell, .. } => {
                if !(2..=5).contains(&ell) {
                    return bad(format!("octahedral system needs 2 <= ell <= 5, got {ell}"));
                }
            }
            SystemKind::Permutohedron(n) => {
                if !(2..=5).contains(&n) {
                    return bad(format!("permutohedral system needs 2 <= n <= 5, got {n}"));
                }
            }
        }
        Ok(())
    }

    pub fn coxeter_type(self) -> CoxeterType {
        match self {
            SystemKind::Boolean(ty, _) | SystemKind::Arrangement(ty, _) => ty,
            SystemKind::Octa { even: false, .. } => CoxeterType::B,
            SystemKind::Octa { even: true, .. } => CoxeterType::D,
            SystemKind::Permutohedron(_) => CoxeterType::A,
        }
    }

    /// Degree of the (signed) permutation group.
    pub fn degree(self) -> usize {
        match self {
            SystemKind::Boolean(_, n) | SystemKind::Arrangement(_, n) | SystemKind::Permutohedron(n) => n,
            SystemKind::Octa { ell, .. } => ell,
        }
    }

    pub fn lattice_kind(self) -> LatticeKind {
        match self {
            SystemKind::Boolean(_, n) => LatticeKind::Boolean(n),
            SystemKind::Arrangement(CoxeterType::A, n) => LatticeKind::Partition(n),
            SystemKind::Arrangement(CoxeterType::B, n) => LatticeKind::CoupledT(n),
            SystemKind::Arrangement(CoxeterType::D, n) => LatticeKind::CoupledTo(n),
            SystemKind::Octa { ell, .. } => LatticeKind::Octa(ell),
            SystemKind::Permutohedron(n) => LatticeKind::Permutohedron(n - 1),
        }
    }

    pub fn name(self) -> String {
        match self {
            SystemKind::Boolean(ty, n) => format!("boolean-{}({n})", ty.letter()),
            SystemKind::Arrangement(ty, n) => format!("arrangement-{}({n})", ty.letter()),
            SystemKind::Octa { even, ell } => format!("octahedral-{}({ell})", if even { "even" } else { "signed" }),
            SystemKind::Permutohedron(n) => format!("permutohedral({n})"),
        }
    }
}

/// True when `g` fixes every point of the subspace (or every element of the
/// interval) that lattice element `p` stands for.
pub fn fixes_pointwise(p: &Payload, g: &SignedPerm) -> bool {
    match p {
        Payload::Subset(y) => y.iter().all(|&j| g.apply(j as i8) == j as i8),
        Payload::Sub(v) => subspace::fixed_pointwise(v, g),
        Payload::Signed(Some(j)) => j.iter().all(|&x| g.apply(x) == x),
        Payload::Signed(None) | Payload::Orient(Some(_)) => g.is_identity(),
        Payload::Orient(None) => true,
        Payload::Poly(_) => false,
    }
}

#[derive(Debug, Clone)]
pub struct System {
    kind: SystemKind,
    group: Group,
    lattice: Lattice,
    /// `act[x * |W| + g]`: index of `x·g`.
    act: Vec<u32>,
    stab: Vec<Vec<u32>>,
    /// `coset[x * |W| + g]`: number of the coset `W_x g` among those of `x`.
    coset: Vec<u32>,
    offset: Vec<usize>,
    elem_x: Vec<u32>,
    elem_g: Vec<u32>,
    /// Atom orbit representative and BFS witness for every atom.
    atom_rep: Vec<usize>,
    atom_witness: Vec<usize>,
}

impl System {
    pub fn new(kind: SystemKind) -> Result<System> {
        kind.check()?;
        let group = Group::coxeter(kind.coxeter_type(), kind.degree())?;
        let lattice = Lattice::new(kind.lattice_kind())?;
        let (nl, nw) = (lattice.len(), group.order());
        let mut act = vec![0u32; nl * nw];
        for x in 0..nl {
            for g in 0..nw {
                act[x * nw + g] = lattice.act(x, group.elem(g))? as u32;
            }
        }
        let stab: Vec<Vec<u32>> = (0..nl)
            .map(|x| (0..nw).filter(|&g| fixes_pointwise(lattice.payload(x), group.elem(g))).map(|g| g as u32).collect())
            .collect();
        let unset = u32::MAX;
        let mut coset = vec![unset; nl * nw];
        let mut offset = Vec::with_capacity(nl + 1);
        let mut elem_x = Vec::new();
        let mut elem_g = Vec::new();
        let mut total = 0usize;
        for x in 0..nl {
            offset.push(total);
            let mut next = 0u32;
            for h in 0..nw {
                if coset[x * nw + h] != unset {
                    continue;
                }
                for &w in &stab[x] {
                    coset[x * nw + group.mul(w as usize, h)] = next;
                }
                elem_x.push(x as u32);
                elem_g.push(h as u32);
                next += 1;
            }
            total += next as usize;
            if total > DEFAULT_CAP {
                return Err(Error::CapExceeded(DEFAULT_CAP));
            }
        }
        offset.push(total);
        let mut sys = System {
            kind,
            group,
            lattice,
            act,
            stab,
            coset,
            offset,
            elem_x,
            elem_g,
            atom_rep: Vec::new(),
            atom_witness: Vec::new(),
        };
        sys.compute_atom_orbits();
        Ok(sys)
    }

    fn compute_atom_orbits(&mut self) {
        let na = self.lattice.natoms();
        let mut rep = vec![usize::MAX; na];
        let mut witness = vec![0usize; na];
        for a in 0..na {
            if rep[a] != usize::MAX {
                continue;
            }
            for &w in self.group.bfs_order() {
                let b = self.atom_act(a, w as usize);
                if rep[b] == usize::MAX {
                    rep[b] = a;
                    witness[b] = w as usize;
                }
            }
        }
        self.atom_rep = rep;
        self.atom_witness = witness;
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn order(&self) -> usize {
        self.elem_x.len()
    }

    /// `x·g` on lattice indices.
    pub fn act(&self, x: usize, g: usize) -> usize {
        self.act[x * self.group.order() + g] as usize
    }

    /// Atom number of `a·g`.
    pub fn atom_act(&self, a: usize, g: usize) -> usize {
        self.act(self.lattice.atom(a), g) - 1
    }

    /// Pointwise isotropy group `W_x`.
    pub fn isotropy(&self, x: usize) -> &[u32] {
        &self.stab[x]
    }

    pub fn element(&self, x: usize, g: usize) -> usize {
        self.offset[x] + self.coset[x * self.group.order() + g] as usize
    }

    /// `(lattice index, canonical group index)` of a monoid element.
    pub fn decode(&self, e: usize) -> (usize, usize) {
        (self.elem_x[e] as usize, self.elem_g[e] as usize)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Unit for generator position `j`.
    pub fn unit(&self, j: usize) -> usize {
        self.element(0, self.group.gen_index(j))
    }

    /// Partial identity on lattice element `x`.
    pub fn idempotent(&self, x: usize) -> usize {
        self.element(x, 0)
    }

    pub fn multiply(&self, e1: usize, e2: usize) -> usize {
        let (x, g) = self.decode(e1);
        let (y, h) = self.decode(e2);
        let z = self.lattice.join(x, self.act(y, self.group.inv(g)));
        self.element(z, self.group.mul(g, h))
    }

    pub fn evaluate(&self, images: &[usize], word: &[usize]) -> usize {
        word.iter().fold(self.identity(), |acc, &i| self.multiply(acc, images[i]))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.multiply(e, e) == e
    }

    pub fn idempotent_count(&self) -> usize {
        self.lattice.len()
    }

    pub fn unit_count(&self) -> usize {
        self.group.order()
    }

    /// Breadth-first closure of the given elements (ids into this system).
    pub fn closure(&self, gens: &[usize], cap: usize) -> Result<EnumeratedMonoid<usize>> {
        closure_by(self.identity(), gens, cap, |a, b| self.multiply(*a, *b))
    }

    /// Reflections `t` (group indices) whose hyperplane contains `x`.
    pub fn fixed_hyperplane_atoms(&self, x: usize) -> Vec<usize> {
        self.group.reflections().into_iter().filter(|&t| self.stab[x].binary_search(&(t as u32)).is_ok()).collect()
    }

    /// `(e, s)` with `s` a hyperplane orbit representative (generator
    /// position) and `e` minimal among the elements fixed pointwise by `s`.
    pub fn iso_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for s in hyperplane_orbit_reps(self.kind.coxeter_type(), self.kind.degree())? {
            let sg = self.group.gen_index(s) as u32;
            let fixed: Vec<usize> = (0..self.lattice.len()).filter(|&x| self.stab[x].binary_search(&sg).is_ok()).collect();
            for &x in &fixed {
                if !fixed.iter().any(|&y| y != x && self.lattice.leq(y, x)) {
                    out.push((x, s));
                }
            }
        }
        Ok(out)
    }

    /// Atom orbit representatives (`O_1`), first in atom order.
    pub fn atom_orbit_reps(&self) -> Vec<usize> {
        (0..self.lattice.natoms()).filter(|&a| self.atom_rep[a] == a).collect()
    }

    /// `(a', w)` with `a = a'·w`, `a'` the representative of `a`'s orbit and
    /// `w` the first element in breadth-first order doing this.
    pub fn atom_witness(&self, a: usize) -> (usize, usize) {
        (self.atom_rep[a], self.atom_witness[a])
    }

    /// Orbit representatives of `k`-sets of atoms satisfying `keep` (which
    /// must be invariant under the group). Each representative is the
    /// lexicographically least sorted atom tuple in its orbit.
    pub fn orbit_reps_k(&self, k: usize, mut keep: impl FnMut(&[usize]) -> bool) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut img = Vec::with_capacity(k);
        for_each_subset(self.lattice.natoms(), k, |s| {
            if seen.contains(s) {
                return;
            }
            for g in 0..self.group.order() {
                img.clear();
                img.extend(s.iter().map(|&a| self.atom_act(a, g)));
                img.sort_unstable();
                seen.insert(img.clone());
            }
            if keep(s) {
                out.push(s.to_vec());
            }
        });
        out
    }

    /// Atoms whose join is `x`, chosen greedily in atom order.
    pub fn greedy_basis(&self, x: usize) -> Vec<usize> {
        let mut basis = Vec::new();
        let mut acc = self.lattice.bottom();
        for a in self.lattice.atoms_below(x) {
            if acc == x {
                break;
            }
            let next = self.lattice.join(acc, self.lattice.atom(a));
            if next != acc {
                basis.push(a);
                acc = next;
            }
        }
        basis
    }
}
