//! Basis blades as packed index sets.
//!
//! A blade is a subset of the generators {e1, …, en} stored as a 16-bit
//! mask: bit i set means generator i+1 is a factor. The empty set is the
//! algebra unit. Grade is the popcount; all reordering signs reduce to
//! counting index inversions between two disjoint masks, which is what
//! [`cross_inversions`] does with shift/popcount loops.

use crate::error::AlgebraError;

/// Validated algebra dimension (number of generators, 1..=16).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dim(u8);

impl Dim {
    pub const MAX: u8 = 16;

    pub fn new(n: usize) -> Result<Dim, AlgebraError> {
        if (1..=Self::MAX as usize).contains(&n) {
            Ok(Dim(n as u8))
        } else {
            Err(AlgebraError::DimOutOfRange(n))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Number of basis blades, 2^n.
    pub fn blade_count(self) -> usize {
        1usize << self.0
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// One basis blade, canonically the ascending product of its generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Blade(pub u16);

impl Blade {
    /// The empty blade: the algebra unit Id.
    pub const UNIT: Blade = Blade(0);

    /// Pseudoscalar e_{1..n}.
    pub fn top(dim: Dim) -> Blade {
        Blade(((1u32 << dim.get()) - 1) as u16)
    }

    /// Single generator, 1-based index.
    pub fn generator(dim: Dim, index: usize) -> Result<Blade, AlgebraError> {
        if index >= 1 && index <= dim.get() as usize {
            Ok(Blade(1 << (index - 1)))
        } else {
            Err(AlgebraError::BadGenerator {
                index,
                dim: dim.get(),
            })
        }
    }

    /// Blade from strictly ascending 1-based generator indices.
    pub fn from_indices(dim: Dim, indices: &[usize]) -> Result<Blade, AlgebraError> {
        let mut mask = 0u16;
        let mut prev = 0usize;
        for &i in indices {
            if i <= prev {
                return Err(AlgebraError::UnsortedIndices);
            }
            if i > dim.get() as usize {
                return Err(AlgebraError::BadGenerator {
                    index: i,
                    dim: dim.get(),
                });
            }
            mask |= 1 << (i - 1);
            prev = i;
        }
        Ok(Blade(mask))
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    /// Set difference (factors of self not in other).
    pub fn minus(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }

    pub fn contains(self, other: Blade) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn fits(self, dim: Dim) -> bool {
        Blade::top(dim).contains(self)
    }

    /// All submasks, the blade itself and the empty blade included.
    pub fn subsets(self) -> Subsets {
        subsets(self)
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i + 1)
            }
        })
    }

    /// Canonical text label: "e" + ascending digits for dims up to 9,
    /// braced index list ("e{1,12}") beyond that, "1" for the unit.
    pub fn label(self, dim: Dim) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut s = String::from("e");
        if dim.get() <= 9 {
            for i in self.indices() {
                s.push_str(&i.to_string());
            }
        } else {
            s.push('{');
            let mut first = true;
            for i in self.indices() {
                if !first {
                    s.push(',');
                }
                s.push_str(&i.to_string());
                first = false;
            }
            s.push('}');
        }
        s
    }
}

/// All basis blades of a dimension, ascending by mask.
pub fn blades(dim: Dim) -> impl Iterator<Item = Blade> {
    (0..dim.blade_count() as u32).map(|m| Blade(m as u16))
}

/// Number of pairs (i in a, j in b) with i > j — the inversion count of
/// the concatenated index word (a, b) relative to ascending order.
pub fn cross_inversions(a: Blade, b: Blade) -> u32 {
    let mut count = 0;
    let mut m = a.0;
    while m != 0 {
        let i = m.trailing_zeros();
        count += (b.0 & ((1u16 << i) - 1)).count_ones();
        m &= m - 1;
    }
    count
}

/// Sign of e_a ∧ e_b relative to the canonical blade e_{a∪b}:
/// 0 on overlap, otherwise (−1)^cross_inversions.
pub fn wedge_sign(a: Blade, b: Blade) -> i8 {
    if a.0 & b.0 != 0 {
        0
    } else if cross_inversions(a, b) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Enumerates all 2^grade submasks of a blade (every ordered split
/// (s, blade∖s) appears exactly once). Order is descending by mask.
pub fn subsets(of: Blade) -> Subsets {
    Subsets {
        mask: of.0,
        next: Some(of.0),
    }
}

pub struct Subsets {
    mask: u16,
    next: Option<u16>,
}

impl Iterator for Subsets {
    type Item = Blade;

    fn next(&mut self) -> Option<Blade> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Blade(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> Dim {
        Dim::new(n).unwrap()
    }

    #[test]
    fn dim_bounds() {
        assert!(Dim::new(0).is_err());
        assert!(Dim::new(17).is_err());
        assert!(Dim::new(1).is_ok());
        assert!(Dim::new(16).is_ok());
    }

    #[test]
    fn generator_masks() {
        assert_eq!(Blade::generator(d(3), 1).unwrap(), Blade(0b001));
        assert_eq!(Blade::generator(d(3), 3).unwrap(), Blade(0b100));
        assert!(Blade::generator(d(3), 4).is_err());
        assert!(Blade::generator(d(3), 0).is_err());
    }

    #[test]
    fn from_indices_requires_ascending() {
        assert_eq!(Blade::from_indices(d(4), &[1, 3]).unwrap(), Blade(0b101));
        assert!(Blade::from_indices(d(4), &[3, 1]).is_err());
        assert!(Blade::from_indices(d(4), &[2, 2]).is_err());
        assert_eq!(Blade::from_indices(d(4), &[]).unwrap(), Blade::UNIT);
    }

    #[test]
    fn inversion_counts() {
        // merging (3),(1,2): pairs (3,1),(3,2)
        assert_eq!(cross_inversions(Blade(0b100), Blade(0b011)), 2);
        assert_eq!(cross_inversions(Blade(0b011), Blade(0b100)), 0);
        assert_eq!(wedge_sign(Blade(0b100), Blade(0b011)), 1);
        assert_eq!(wedge_sign(Blade(0b010), Blade(0b001)), -1);
        assert_eq!(wedge_sign(Blade(0b010), Blade(0b010)), 0);
    }

    #[test]
    fn subset_enumeration_is_complete() {
        let all: Vec<u16> = subsets(Blade(0b1011)).map(|b| b.0).collect();
        assert_eq!(all.len(), 8);
        let mut sorted = all.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert!(sorted.iter().all(|m| m & !0b1011 == 0));
    }

    #[test]
    fn labels() {
        assert_eq!(Blade(0b011).label(d(3)), "e12");
        assert_eq!(Blade::UNIT.label(d(3)), "1");
        let wide = Dim::new(12).unwrap();
        assert_eq!(Blade(0b1000_0000_0001).label(wide), "e{1,12}");
    }
}
