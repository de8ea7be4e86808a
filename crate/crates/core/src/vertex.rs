//! Vertex labels and two-sided vertex sets.
//!
//! Vertices carry the 1-based labels `u_1..u_h` and `v_1..v_h` where `h = n/2`.
//! Internally a [`VertexSet`] stores one 64-bit mask per side, bit `i - 1`
//! standing for index `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    U,
    V,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

/// A side-tagged, 1-based vertex label. Orders as `u_1 < .. < u_h < v_1 < ..`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub const fn u(index: usize) -> Self {
        VertexId { side: Side::U, index }
    }

    pub const fn v(index: usize) -> Self {
        VertexId { side: Side::V, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::U => write!(f, "u{}", self.index),
            Side::V => write!(f, "v{}", self.index),
        }
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadVertexLabel(s.to_string());
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('u') | Some('U') => Side::U,
            Some('v') | Some('V') => Side::V,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = rest.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(VertexId { side, index })
    }
}

/// A subset of `U ∪ V`, stored as one bit-mask per side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    u_mask: u64,
    v_mask: u64,
}

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet { u_mask: 0, v_mask: 0 }
    }

    pub const fn from_masks(u_mask: u64, v_mask: u64) -> Self {
        VertexSet { u_mask, v_mask }
    }

    /// Every vertex of a graph with `half` vertices per side.
    pub fn full(half: usize) -> Self {
        let m = low_bits(half);
        VertexSet { u_mask: m, v_mask: m }
    }

    pub fn u_mask(&self) -> u64 {
        self.u_mask
    }

    pub fn v_mask(&self) -> u64 {
        self.v_mask
    }

    pub fn side_mask(&self, side: Side) -> u64 {
        match side {
            Side::U => self.u_mask,
            Side::V => self.v_mask,
        }
    }

    /// `S ∩ U` or `S ∩ V`.
    pub fn restrict(&self, side: Side) -> VertexSet {
        match side {
            Side::U => VertexSet::from_masks(self.u_mask, 0),
            Side::V => VertexSet::from_masks(0, self.v_mask),
        }
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let bit = bit_of(v.index);
        let mask = self.mask_mut(v.side);
        let fresh = *mask & bit == 0;
        *mask |= bit;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let bit = bit_of(v.index);
        let mask = self.mask_mut(v.side);
        let present = *mask & bit != 0;
        *mask &= !bit;
        present
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index >= 1 && v.index <= 64 && self.side_mask(v.side) & bit_of(v.index) != 0
    }

    pub fn len(&self) -> usize {
        (self.u_mask.count_ones() + self.v_mask.count_ones()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.u_mask == 0 && self.v_mask == 0
    }

    /// The side all members lie on, if the set is nonempty and one-sided.
    pub fn single_side(&self) -> Option<Side> {
        match (self.u_mask != 0, self.v_mask != 0) {
            (true, false) => Some(Side::U),
            (false, true) => Some(Side::V),
            _ => None,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_masks(self.u_mask | other.u_mask, self.v_mask | other.v_mask)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_masks(self.u_mask & other.u_mask, self.v_mask & other.v_mask)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_masks(self.u_mask & !other.u_mask, self.v_mask & !other.v_mask)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Members in ascending order: all of `U` by index, then all of `V`.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        bits(self.u_mask)
            .map(VertexId::u)
            .chain(bits(self.v_mask).map(VertexId::v))
    }

    /// Packs the set into one word: `U` in bits 0..64, `V` in bits 64..128.
    pub(crate) fn to_flat(self) -> u128 {
        (self.u_mask as u128) | ((self.v_mask as u128) << 64)
    }

    pub(crate) fn from_flat(flat: u128) -> Self {
        VertexSet::from_masks(flat as u64, (flat >> 64) as u64)
    }

    fn mask_mut(&mut self, side: Side) -> &mut u64 {
        match side {
            Side::U => &mut self.u_mask,
            Side::V => &mut self.v_mask,
        }
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = VertexSet::empty();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn low_bits(count: usize) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

fn bit_of(index: usize) -> u64 {
    assert!((1..=64).contains(&index), "vertex index {index} outside 1..=64");
    1u64 << (index - 1)
}

/// 1-based indices of the set bits, ascending.
fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let tz = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(tz + 1)
    })
}
