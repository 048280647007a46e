//! Coalitions as bitmasks over player indices.
//!
//! Players are indexed `0..n-1` internally and rendered 1-based externally.
//! The textual key format is the comma-joined sorted list of 1-based ids,
//! e.g. `"1,3"`; `"N"` is accepted as an alias for the grand coalition and
//! `""` denotes the empty coalition.

use std::fmt;

/// Upper bound on the player count. Keeps `2^n` lattice scans in memory.
pub const MAX_PLAYERS: usize = 16;

/// A set of players encoded as a bitmask (player `i` at bit `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    pub fn singleton(player: usize) -> Self {
        Coalition(1 << player)
    }

    /// The grand coalition over `n` players.
    pub fn grand(n: usize) -> Self {
        Coalition((1u32 << n) - 1)
    }

    /// Builds a coalition from 0-based player indices.
    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        Coalition(players.into_iter().fold(0, |m, p| m | (1 << p)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, player: usize) -> bool {
        self.0 & (1 << player) != 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset_of(self, other: Coalition) -> bool {
        other.is_subset_of(self)
    }

    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    /// Set difference `self \ other`.
    pub fn difference(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub fn without(self, player: usize) -> Coalition {
        Coalition(self.0 & !(1 << player))
    }

    /// `true` for singletons and the grand coalition; the empty coalition is
    /// not counted here.
    pub fn is_trivial(self, n: usize) -> bool {
        self.len() == 1 || self == Coalition::grand(n)
    }

    /// 0-based member indices in ascending order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32u32).filter(move |i| mask & (1 << i) != 0).map(|i| i as usize)
    }

    /// All `2^n` coalitions in ascending mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0u32..(1 << n)).map(Coalition)
    }

    /// Non-trivial coalitions: neither empty, singleton nor grand.
    pub fn non_trivial(n: usize) -> impl Iterator<Item = Coalition> {
        let grand = Coalition::grand(n);
        Coalition::all(n).filter(move |c| c.len() >= 2 && *c != grand)
    }

    /// All subsets of `self`, including the empty set and `self` itself.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, sub: 0, done: false }
    }

    /// Proper subsets of `self` (everything except `self`).
    pub fn proper_subsets(self) -> impl Iterator<Item = Coalition> {
        let me = self;
        self.subsets().filter(move |s| *s != me)
    }

    /// External key: comma-joined sorted 1-based ids, `""` for the empty set.
    pub fn key(self) -> String {
        self.members()
            .map(|p| (p + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses an external key. `"N"` means the grand coalition; ids must be
    /// 1-based, strictly increasing and at most `n`.
    pub fn parse_key(key: &str, n: usize) -> std::result::Result<Coalition, KeyError> {
        if key == "N" {
            return Ok(Coalition::grand(n));
        }
        if key.is_empty() {
            return Ok(Coalition::EMPTY);
        }
        let mut mask = 0u32;
        let mut last = 0usize;
        for (pos, part) in key.split(',').enumerate() {
            let id: usize = part
                .trim()
                .parse()
                .map_err(|_| KeyError::BadPlayerId { position: pos, token: part.to_string() })?;
            if id == 0 || id > n {
                return Err(KeyError::PlayerOutOfRange { position: pos, id, n });
            }
            if id <= last {
                return Err(KeyError::NotSortedStrict { position: pos, id });
            }
            last = id;
            mask |= 1 << (id - 1);
        }
        Ok(Coalition(mask))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.key())
    }
}

/// Subset iterator via the standard submask walk.
pub struct Subsets {
    mask: u32,
    sub: u32,
    done: bool,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        if self.done {
            return None;
        }
        let current = self.sub;
        if self.sub == self.mask {
            self.done = true;
        } else {
            self.sub = (self.sub.wrapping_sub(self.mask)) & self.mask;
        }
        Some(Coalition(current))
    }
}

/// Parse failure for an external coalition key, with position info.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KeyError {
    #[error("entry {position}: {token:?} is not a player id")]
    BadPlayerId { position: usize, token: String },
    #[error("entry {position}: player id {id} out of range 1..={n}")]
    PlayerOutOfRange { position: usize, id: usize, n: usize },
    #[error("entry {position}: id {id} breaks the required strictly increasing order")]
    NotSortedStrict { position: usize, id: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_walk_covers_the_lattice() {
        let s = Coalition::from_players([0, 2, 3]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        for t in &subs {
            assert!(t.is_subset_of(s));
        }
        assert!(subs.contains(&Coalition::EMPTY));
        assert!(subs.contains(&s));
    }

    #[test]
    fn empty_subsets() {
        let subs: Vec<_> = Coalition::EMPTY.subsets().collect();
        assert_eq!(subs, vec![Coalition::EMPTY]);
    }

    #[test]
    fn keys_round_trip() {
        let c = Coalition::from_players([0, 2]);
        assert_eq!(c.key(), "1,3");
        assert_eq!(Coalition::parse_key("1,3", 3).unwrap(), c);
        assert_eq!(Coalition::parse_key("N", 3).unwrap(), Coalition::grand(3));
        assert_eq!(Coalition::parse_key("", 3).unwrap(), Coalition::EMPTY);
    }

    #[test]
    fn unsorted_key_rejected_with_position() {
        let err = Coalition::parse_key("3,1", 3).unwrap_err();
        assert_eq!(err, KeyError::NotSortedStrict { position: 1, id: 1 });
        let err = Coalition::parse_key("1,1", 3).unwrap_err();
        assert!(matches!(err, KeyError::NotSortedStrict { position: 1, .. }));
    }

    #[test]
    fn out_of_range_key_rejected() {
        assert!(matches!(
            Coalition::parse_key("1,4", 3),
            Err(KeyError::PlayerOutOfRange { position: 1, id: 4, n: 3 })
        ));
        assert!(matches!(Coalition::parse_key("0", 3), Err(KeyError::PlayerOutOfRange { .. })));
        assert!(matches!(Coalition::parse_key("1,x", 3), Err(KeyError::BadPlayerId { .. })));
    }

    #[test]
    fn non_trivial_enumeration() {
        let pairs: Vec<_> = Coalition::non_trivial(3).collect();
        assert_eq!(
            pairs,
            vec![
                Coalition::from_players([0, 1]),
                Coalition::from_players([0, 2]),
                Coalition::from_players([1, 2]),
            ]
        );
        assert_eq!(Coalition::non_trivial(2).count(), 0);
        assert_eq!(Coalition::non_trivial(4).count(), 10);
    }
}
