//! Symbolic generic vectors for coordinate, partition and coupled-partition
//! subspaces of `R^n`.
//!
//! A subspace of the form used here is described by one generic point: each
//! coordinate is `0` or `±L` for a symbol `L`. Coordinates sharing a symbol are
//! equal up to the recorded sign. The canonical form numbers symbols by first
//! appearance and makes each first appearance positive.

use alloc::vec;
use alloc::vec::Vec;

use crate::coxeter::SignedPerm;

/// Relabels symbols by first appearance with positive first occurrence.
pub fn canonical(raw: &[i8]) -> Vec<i8> {
    let mut map: Vec<(i8, i8)> = Vec::new(); // (|old|, new signed)
    let mut out = Vec::with_capacity(raw.len());
    for &x in raw {
        if x == 0 {
            out.push(0);
            continue;
        }
        let a = x.abs();
        let sign = x.signum();
        let new = match map.iter().find(|m| m.0 == a) {
            Some(&(_, v)) => v,
            None => {
                let v = (map.len() as i8 + 1) * sign;
                map.push((a, v));
                v
            }
        };
        // `new` carries the first occurrence's sign, so this makes it positive
        out.push(new * sign);
    }
    out
}

struct Dsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    zero: Vec<bool>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), parity: vec![false; n], zero: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let p = self.parent[x];
        let (r, pp) = self.find(p);
        self.parent[x] = r;
        self.parity[x] ^= pp;
        (r, self.parity[x])
    }

    /// Records `t_a = ±t_b` (`odd` means `t_a = -t_b`).
    fn union(&mut self, a: usize, b: usize, odd: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != odd {
                self.zero[ra] = true;
            }
            return;
        }
        self.parent[rb] = ra;
        self.parity[rb] = pa ^ pb ^ odd;
        self.zero[ra] |= self.zero[rb];
    }

    fn add_constraints(&mut self, v: &[i8]) {
        let mut first: Vec<Option<usize>> = vec![None; v.len() + 1];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                let (r, _) = self.find(i);
                self.zero[r] = true;
                continue;
            }
            let a = x.unsigned_abs() as usize;
            match first[a] {
                None => first[a] = Some(i),
                Some(j) => self.union(j, i, (v[j] < 0) != (x < 0)),
            }
        }
    }
}

/// Intersection of the two subspaces.
pub fn meet(x: &[i8], y: &[i8]) -> Vec<i8> {
    let n = x.len();
    let mut d = Dsu::new(n);
    d.add_constraints(x);
    d.add_constraints(y);
    let mut raw = vec![0i8; n];
    for (i, slot) in raw.iter_mut().enumerate() {
        let (r, p) = d.find(i);
        if !d.zero[r] {
            let l = r as i8 + 1;
            *slot = if p { -l } else { l };
        }
    }
    canonical(&raw)
}

/// Image of the subspace under the signed permutation, before relabelling.
pub fn act_raw(x: &[i8], g: &SignedPerm) -> Vec<i8> {
    let mut out = vec![0i8; x.len()];
    for (i, &v) in x.iter().enumerate() {
        let t = g.apply(i as i8 + 1);
        out[t.unsigned_abs() as usize - 1] = if t > 0 { v } else { -v };
    }
    out
}

pub fn act(x: &[i8], g: &SignedPerm) -> Vec<i8> {
    canonical(&act_raw(x, g))
}

/// True when `g` fixes every point of the subspace.
pub fn fixed_pointwise(x: &[i8], g: &SignedPerm) -> bool {
    act_raw(x, g) == x
}

pub fn dim(x: &[i8]) -> usize {
    x.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as usize
}

/// Coordinates forced to zero.
pub fn zero_set(x: &[i8]) -> Vec<usize> {
    (0..x.len()).filter(|&i| x[i] == 0).map(|i| i + 1).collect()
}

pub fn whole(n: usize) -> Vec<i8> {
    (1..=n as i8).collect()
}

/// Coordinate subspace spanned by `v_j`, `j ∈ J` (1-based).
pub fn coordinate(n: usize, j: &[u8]) -> Vec<i8> {
    let raw: Vec<i8> = (1..=n as u8).map(|i| if j.contains(&i) { i as i8 } else { 0 }).collect();
    canonical(&raw)
}

/// `(v_i - v_j)^⊥`: `t_i = t_j`.
pub fn diff_hyperplane(n: usize, i: usize, j: usize) -> Vec<i8> {
    let mut raw = whole(n);
    raw[j - 1] = i as i8;
    canonical(&raw)
}

/// `(v_i + v_j)^⊥`: `t_i = -t_j`.
pub fn sum_hyperplane(n: usize, i: usize, j: usize) -> Vec<i8> {
    let mut raw = whole(n);
    raw[j - 1] = -(i as i8);
    canonical(&raw)
}

/// `v_i^⊥`: `t_i = 0`.
pub fn coord_hyperplane(n: usize, i: usize) -> Vec<i8> {
    let mut raw = whole(n);
    raw[i - 1] = 0;
    canonical(&raw)
}
