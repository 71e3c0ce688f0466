//! The ε/ι action on the subset basis of Λ*(ℝⁿ).
//!
//! Every generator, and every word in generators, maps a basis vector to
//! ± one basis vector, so words are stored as signed permutations.

use std::collections::BTreeMap;

use super::CliffordError;
use crate::ring::RatXi;

pub const MAX_DIM: usize = 8;

/// Column `S` maps to `sign · e_{target}`; `sign == 0` marks a zero column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPerm {
    cols: Vec<(u32, i8)>,
}

/// (−1)^{#{j ∈ S : j < i}}.
fn koszul(set: u32, i: usize) -> i8 {
    if (set & ((1u32 << i) - 1)).count_ones() % 2 == 1 {
        -1
    } else {
        1
    }
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { cols: (0..1u32 << n).map(|s| (s, 1)).collect() }
    }

    /// Exterior multiplication by e_i* (0-based `i`).
    pub fn epsilon(n: usize, i: usize) -> Self {
        let cols = (0..1u32 << n)
            .map(|s| if s >> i & 1 == 1 { (0, 0) } else { (s | 1 << i, koszul(s, i)) })
            .collect();
        SignedPerm { cols }
    }

    /// Interior multiplication by e_i (0-based `i`).
    pub fn iota(n: usize, i: usize) -> Self {
        let cols = (0..1u32 << n)
            .map(|s| if s >> i & 1 == 1 { (s & !(1 << i), koszul(s, i)) } else { (0, 0) })
            .collect();
        SignedPerm { cols }
    }

    /// `x + σ y` for operators that act on disjoint column sets.
    fn combine(x: &SignedPerm, y: &SignedPerm, sigma: i8) -> SignedPerm {
        let cols = x
            .cols
            .iter()
            .zip(&y.cols)
            .map(|(&(tx, sx), &(ty, sy))| match (sx, sy) {
                (0, _) => (ty, sy * sigma),
                (_, 0) => (tx, sx),
                _ => panic!("columns overlap"),
            })
            .collect();
        SignedPerm { cols }
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &SignedPerm) -> SignedPerm {
        let cols = o
            .cols
            .iter()
            .map(|&(t, s)| {
                if s == 0 {
                    (0, 0)
                } else {
                    let (t2, s2) = self.cols[t as usize];
                    (t2, s * s2)
                }
            })
            .collect();
        SignedPerm { cols }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn trace(&self) -> i64 {
        self.cols
            .iter()
            .enumerate()
            .filter(|(s, (t, _))| *s as u32 == *t)
            .map(|(_, (_, sign))| *sign as i64)
            .sum()
    }

    pub fn column(&self, s: u32) -> (u32, i8) {
        self.cols[s as usize]
    }
}

/// c(e_i) = ε − ι and c̄(e_i) = ε + ι for i = 1..n, plus the identity.
#[derive(Clone, Debug)]
pub struct Generators {
    pub n: usize,
    pub c: Vec<SignedPerm>,
    pub cbar: Vec<SignedPerm>,
    pub id: SignedPerm,
}

pub fn generators(n: usize) -> Result<Generators, CliffordError> {
    if n > MAX_DIM {
        return Err(CliffordError::DimensionTooLarge(n));
    }
    if n == 0 {
        return Err(CliffordError::DimensionTooSmall(n));
    }
    let mut c = Vec::with_capacity(n);
    let mut cbar = Vec::with_capacity(n);
    for i in 0..n {
        let e = SignedPerm::epsilon(n, i);
        let io = SignedPerm::iota(n, i);
        c.push(SignedPerm::combine(&e, &io, -1));
        cbar.push(SignedPerm::combine(&e, &io, 1));
    }
    Ok(Generators { n, c, cbar, id: SignedPerm::identity(n) })
}

impl Generators {
    /// c_{S} c̄_{T} with indices in increasing order.
    pub fn word(&self, cmask: u32, cbmask: u32) -> SignedPerm {
        let mut acc = self.id.clone();
        for i in 0..self.n {
            if cmask >> i & 1 == 1 {
                acc = acc.compose(&self.c[i]);
            }
        }
        for i in 0..self.n {
            if cbmask >> i & 1 == 1 {
                acc = acc.compose(&self.cbar[i]);
            }
        }
        acc
    }
}

/// Dense-indexed sparse matrix on Λ*(ℝⁿ) with ξₙ-rational entries.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExteriorMatrix {
    pub dim: usize,
    pub entries: BTreeMap<(u32, u32), RatXi>,
}

impl ExteriorMatrix {
    pub fn zero(dim: usize) -> Self {
        ExteriorMatrix { dim, entries: BTreeMap::new() }
    }

    pub fn add_perm(&mut self, p: &SignedPerm, coeff: &RatXi) {
        for s in 0..p.dim() as u32 {
            let (t, sign) = p.column(s);
            if sign == 0 {
                continue;
            }
            let v = if sign > 0 { coeff.clone() } else { -coeff };
            let slot = self.entries.entry((t, s)).or_default();
            *slot = &*slot + &v;
            if slot.is_zero() {
                self.entries.remove(&(t, s));
            }
        }
    }

    pub fn mul(&self, o: &ExteriorMatrix) -> ExteriorMatrix {
        let mut out = ExteriorMatrix::zero(self.dim);
        for (&(r, k), a) in &self.entries {
            for (&(_, c), b) in o.entries.range((k, 0)..=(k, u32::MAX)) {
                let slot = out.entries.entry((r, c)).or_default();
                *slot = &*slot + &(a * b);
            }
        }
        out.entries.retain(|_, v| !v.is_zero());
        out
    }

    pub fn trace(&self) -> RatXi {
        self.entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .fold(RatXi::zero(), |acc, (_, v)| &acc + v)
    }
}
