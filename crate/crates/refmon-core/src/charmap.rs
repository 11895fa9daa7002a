//! Characteristic maps: orbits of the symmetric group on `X = {1..ℓ}` acting
//! diagonally on `k`-tuples of subsets of `X`.
//!
//! A tuple `(J_1..J_k)` gives `f(I) = |⋂_{i∈I} J_i|` for nonempty `I ⊆ Y =
//! {1..k}` and `f(∅) = |⋃ J_i|`. The Möbius transform `f*(I)` counts the points
//! lying in exactly the sets indexed by `I`. Maps are stored by bitmask of `I`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharMap {
    k: usize,
    ell: usize,
    /// `f[mask]` for every `mask ⊆ Y`.
    f: Vec<u32>,
}

fn check(ell: usize, k: usize) -> Result<()> {
    if k == 0 || k > 6 || ell > 16 {
        return Err(Error::OutOfRange(format!("characteristic maps need 1 <= k <= 6, ell <= 16 (k={k}, ell={ell})")));
    }
    Ok(())
}

/// Nonempty subsets of `Y` in the filling order: larger sets first, sets of
/// one size ordered lexicographically by their complements in `Y`.
pub fn box_order(k: usize) -> Vec<u32> {
    let full = (1u32 << k) - 1;
    let members = |m: u32| -> Vec<u32> { (0..k as u32).filter(|i| m >> i & 1 == 1).collect() };
    let mut masks: Vec<u32> = (1..=full).collect();
    masks.sort_by(|&a, &b| {
        b.count_ones().cmp(&a.count_ones()).then_with(|| members(full & !a).cmp(&members(full & !b)))
    });
    masks
}

impl CharMap {
    /// Builds a map from its values `f(I)`, checking it is characteristic.
    pub fn from_values(k: usize, ell: usize, f: Vec<u32>) -> Result<Self> {
        check(ell, k)?;
        if f.len() != 1 << k {
            return Err(Error::OutOfRange(format!("need {} values, got {}", 1 << k, f.len())));
        }
        let m = CharMap { k, ell, f };
        if m.f.iter().any(|&v| v as usize > ell) {
            return Err(Error::NotAdmissible("value exceeds ell".into()));
        }
        let star = m.star_signed();
        if star.iter().any(|&v| v < 0) || star[0] != 0 {
            return Err(Error::NotAdmissible("not a characteristic map".into()));
        }
        Ok(m)
    }

    /// From `f*` on nonempty subsets (index = mask); `f*(∅)` is forced to 0.
    pub fn from_star(k: usize, ell: usize, star: &[u32]) -> Result<Self> {
        check(ell, k)?;
        let full = 1usize << k;
        let mut f = vec![0u32; full];
        for (i, fi) in f.iter_mut().enumerate() {
            *fi = (1..full).filter(|&j| j & i == i).map(|j| star[j]).sum();
        }
        CharMap::from_values(k, ell, f)
    }

    /// Characteristic map of a tuple of subsets of `{1..ell}`.
    pub fn of_tuple(ell: usize, tuple: &[Vec<u8>]) -> Result<Self> {
        let k = tuple.len();
        check(ell, k)?;
        let mut f = vec![0u32; 1 << k];
        for x in 1..=ell as u8 {
            let mask = tuple.iter().enumerate().filter(|(_, j)| j.contains(&x)).fold(0usize, |m, (i, _)| m | 1 << i);
            for (i, fi) in f.iter_mut().enumerate().skip(1) {
                if mask & i == i {
                    *fi += 1;
                }
            }
            if mask != 0 {
                f[0] += 1;
            }
        }
        CharMap::from_values(k, ell, f)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `f(I)` for `I` given as a bitmask over `Y`.
    pub fn value(&self, mask: usize) -> u32 {
        self.f[mask]
    }

    pub fn values(&self) -> &[u32] {
        &self.f
    }

    fn star_signed(&self) -> Vec<i64> {
        let full = 1usize << self.k;
        (0..full)
            .map(|i| {
                (0..full)
                    .filter(|&j| j & i == i)
                    .map(|j| {
                        let sign = if (j & !i).count_ones() % 2 == 0 { 1 } else { -1 };
                        sign * self.f[j] as i64
                    })
                    .sum()
            })
            .collect()
    }

    /// `f*(I) = Σ_{J ⊇ I} (-1)^{|J∖I|} f(J)`.
    pub fn star(&self) -> Vec<u32> {
        self.star_signed().into_iter().map(|v| v as u32).collect()
    }

    /// The values along the filling order: `f*` of each box.
    pub fn boxes(&self) -> Vec<u32> {
        let star = self.star();
        box_order(self.k).into_iter().map(|m| star[m as usize]).collect()
    }

    /// Canonical tuple: the boxes are filled with consecutive points of
    /// `{1..ℓ}` in the filling order and `J_i` is the union of the boxes whose
    /// label contains `i`. Components may coincide.
    pub fn realize(&self) -> Vec<Vec<u8>> {
        let star = self.star();
        let mut tuple = vec![Vec::new(); self.k];
        let mut next = 1u8;
        for m in box_order(self.k) {
            for _ in 0..star[m as usize] {
                for (i, j) in tuple.iter_mut().enumerate() {
                    if m >> i & 1 == 1 {
                        j.push(next);
                    }
                }
                next += 1;
            }
        }
        tuple
    }

    pub fn has_distinct_components(&self) -> bool {
        let t = self.realize();
        (0..t.len()).all(|i| (i + 1..t.len()).all(|j| t[i] != t[j]))
    }
}

/// All characteristic maps `B_Y → [0, ℓ]` with `|Y| = k`, sorted by their box
/// vectors.
pub fn char_maps(ell: usize, k: usize) -> Result<Vec<CharMap>> {
    check(ell, k)?;
    let nbox = (1usize << k) - 1;
    let order = box_order(k);
    let mut out = Vec::new();
    let mut boxes = vec![0u32; nbox];
    // odometer over box vectors with sum <= ell
    loop {
        let mut star = vec![0u32; 1 << k];
        for (b, &m) in order.iter().enumerate() {
            star[m as usize] = boxes[b];
        }
        out.push(CharMap::from_star(k, ell, &star)?);
        let mut i = nbox;
        loop {
            if i == 0 {
                out.sort_by_key(|m| m.boxes());
                return Ok(out);
            }
            i -= 1;
            boxes[i] += 1;
            if boxes.iter().sum::<u32>() as usize <= ell {
                break;
            }
            boxes[i] = 0;
        }
    }
}
