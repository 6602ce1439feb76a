use std::fmt;

use crate::error::{Error, Result};

/// A set of players encoded as a bitmask.
///
/// Player `i` (1-based) lives in bit `i - 1`, so the mask doubles as the
/// index into every dense table of this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    /// Builds a coalition from 1-based player ids. Duplicates are rejected.
    pub fn from_players<I>(players: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0u32;
        for player in players {
            if player == 0 || player > crate::MAX_PLAYERS {
                return Err(Error::PlayerOutOfRange {
                    player,
                    players: crate::MAX_PLAYERS,
                });
            }
            let bit = 1u32 << (player - 1);
            if mask & bit != 0 {
                return Err(Error::Overlap(Coalition(bit), Coalition(mask)));
            }
            mask |= bit;
        }
        Ok(Coalition(mask))
    }

    /// The grand coalition `N = {1, …, n}`.
    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= crate::MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(player: usize) -> Self {
        debug_assert!((1..=crate::MAX_PLAYERS).contains(&player));
        Coalition(1 << (player - 1))
    }

    #[inline]
    pub const fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Cardinality.
    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, player: usize) -> bool {
        player >= 1 && player <= 32 && self.0 & (1 << (player - 1)) != 0
    }

    #[inline]
    pub const fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    /// Complement within `{1, …, n}`.
    pub fn complement(self, n: usize) -> Coalition {
        Coalition::grand(n).difference(self)
    }

    /// Checks that the coalition only names players of an `n`-player game.
    pub fn check(self, n: usize) -> Result<()> {
        if (self.0 as u64) >> n != 0 {
            Err(Error::CoalitionOutOfRange {
                mask: self.0,
                players: n,
            })
        } else {
            Ok(())
        }
    }

    /// Members as 1-based ids in increasing order.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bit + 1)
            }
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            within: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, player) in self.players().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{player}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the submasks of a fixed mask.
#[derive(Debug, Clone)]
pub struct Subsets {
    within: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.within {
            None
        } else {
            // next submask in increasing order
            Some(((cur | !self.within).wrapping_add(1)) & self.within)
        };
        Some(Coalition(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn players_round_trip() {
        let s = Coalition::from_players([3, 1]).unwrap();
        assert_eq!(s.mask(), 0b101);
        assert_eq!(s.players().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(Coalition::EMPTY.to_string(), "{}");
    }

    #[test]
    fn rejects_bad_players() {
        assert!(Coalition::from_players([0]).is_err());
        assert!(Coalition::from_players([2, 2]).is_err());
        assert!(Coalition::from_mask(0b1000).check(3).is_err());
        assert!(Coalition::from_mask(0b111).check(3).is_ok());
    }

    #[test]
    fn subsets_enumerates_all_submasks_in_order() {
        let s = Coalition::from_mask(0b1011);
        let got: Vec<u32> = s.subsets().map(Coalition::mask).collect();
        assert_eq!(got, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn grand_coalition_of_26() {
        assert_eq!(Coalition::grand(26).len(), 26);
        assert_eq!(Coalition::from_mask(0b110).complement(3), Coalition::from_mask(1));
    }
}
