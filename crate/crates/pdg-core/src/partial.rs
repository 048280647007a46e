//! Known-coalition families and the partial games they induce.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::coalition::Coalition;
use crate::cost::CostProfile;
use crate::error::{GameError, Result};
use crate::game::{check_player_count, FullGame, Rational};

/// A family of coalitions whose worths are known. Always contains the empty
/// coalition, every singleton and the grand coalition; anything beyond that
/// base is legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownFamily {
    n: usize,
    members: BTreeSet<Coalition>,
}

impl KnownFamily {
    /// The base family: empty coalition, singletons and the grand coalition.
    pub fn base(n: usize) -> KnownFamily {
        let mut members = BTreeSet::new();
        members.insert(Coalition::EMPTY);
        for i in 0..n {
            members.insert(Coalition::singleton(i));
        }
        members.insert(Coalition::grand(n));
        KnownFamily { n, members }
    }

    /// Every coalition of the lattice.
    pub fn full(n: usize) -> KnownFamily {
        KnownFamily { n, members: Coalition::all(n).collect() }
    }

    /// Validates an arbitrary member set: it must include the base family
    /// and stay inside the lattice.
    pub fn new(n: usize, members: BTreeSet<Coalition>) -> Result<KnownFamily> {
        check_player_count(n)?;
        let base = KnownFamily::base(n);
        if !base.members.is_subset(&members) {
            return Err(GameError::BadKnownFamily);
        }
        if members.iter().any(|s| s.mask() >= 1 << n) {
            return Err(GameError::BadKnownFamily);
        }
        Ok(KnownFamily { n, members })
    }

    /// The family plus one more coalition.
    pub fn with(&self, s: Coalition) -> KnownFamily {
        let mut members = self.members.clone();
        members.insert(s);
        KnownFamily { n: self.n, members }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, s: Coalition) -> bool {
        self.members.contains(&s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Members in ascending bitmask order.
    pub fn iter(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.members.iter().copied()
    }

    /// Members sorted by cardinality, then bitmask — the evaluation order of
    /// the dividend recursion.
    pub fn by_size(&self) -> Vec<Coalition> {
        let mut sorted: Vec<Coalition> = self.members.iter().copied().collect();
        sorted.sort_by_key(|s| (s.len(), s.mask()));
        sorted
    }
}

/// A game whose worth is known exactly on a [`KnownFamily`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGame {
    known: KnownFamily,
    worth: BTreeMap<Coalition, Rational>,
}

impl PartialGame {
    /// Validates a worth map whose domain must be exactly the known family.
    pub fn new(known: KnownFamily, worth: BTreeMap<Coalition, Rational>) -> Result<PartialGame> {
        let n = known.n();
        for s in worth.keys() {
            if !known.contains(*s) {
                return Err(GameError::UnexpectedCoalition(*s));
            }
        }
        for s in known.iter() {
            match worth.get(&s) {
                None => return Err(GameError::MissingCoalition(s)),
                Some(w) => {
                    if s.is_empty() && !w.is_zero() {
                        return Err(GameError::NonzeroEmptyWorth);
                    }
                    if w < &Rational::zero() {
                        return Err(GameError::NegativeWorth(s));
                    }
                }
            }
        }
        if worth[&Coalition::grand(n)].is_zero() {
            return Err(GameError::ZeroGrandWorth);
        }
        Ok(PartialGame { known, worth })
    }

    pub fn n(&self) -> usize {
        self.known.n()
    }

    pub fn known(&self) -> &KnownFamily {
        &self.known
    }

    /// The known worth of `s`, or `None` when `s` is outside the family.
    pub fn worth(&self, s: Coalition) -> Option<&Rational> {
        self.worth.get(&s)
    }

    pub fn grand_worth(&self) -> &Rational {
        &self.worth[&Coalition::grand(self.n())]
    }
}

/// Restricts a full game to a known family.
pub fn restrict(game: &FullGame, known: &KnownFamily) -> Result<PartialGame> {
    if game.n() != known.n() {
        return Err(GameError::DimensionMismatch(game.n(), known.n()));
    }
    let worth = known.iter().map(|s| (s, game.worth(s).clone())).collect();
    PartialGame::new(known.clone(), worth)
}

/// The known family after `k` examinations: the base family plus the first
/// `k` coalitions of the examination order.
pub fn stage_family(profile: &CostProfile, k: usize) -> Result<KnownFamily> {
    if k > profile.num_stages() {
        return Err(GameError::StageOutOfRange { got: k, max: profile.num_stages() });
    }
    let mut family = KnownFamily::base(profile.n());
    for s in &profile.order()[..k] {
        family = family.with(*s);
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::fixtures::{example_costs, example_game};
    use crate::game::rat;

    #[test]
    fn base_family_contents() {
        let family = KnownFamily::base(3);
        assert_eq!(family.len(), 5);
        assert!(family.contains(Coalition::EMPTY));
        assert!(family.contains(Coalition::singleton(2)));
        assert!(family.contains(Coalition::grand(3)));
        assert!(!family.contains(Coalition::from_players([0, 2])));
    }

    #[test]
    fn family_requires_base() {
        let mut members: BTreeSet<Coalition> = KnownFamily::base(3).iter().collect();
        members.remove(&Coalition::singleton(1));
        assert_eq!(KnownFamily::new(3, members), Err(GameError::BadKnownFamily));
    }

    #[test]
    fn stage_families_grow_along_the_order() {
        let profile = example_costs();
        let k0 = stage_family(&profile, 0).unwrap();
        assert_eq!(k0, KnownFamily::base(3));
        let k1 = stage_family(&profile, 1).unwrap();
        assert!(k1.contains(Coalition::from_players([0, 2])));
        assert!(!k1.contains(Coalition::from_players([1, 2])));
        let k3 = stage_family(&profile, 3).unwrap();
        assert_eq!(k3, KnownFamily::full(3));
        assert_eq!(
            stage_family(&profile, 4),
            Err(GameError::StageOutOfRange { got: 4, max: 3 })
        );
    }

    #[test]
    fn restriction_keeps_known_worths_only() {
        let game = example_game();
        let pg = restrict(&game, &KnownFamily::base(3)).unwrap();
        assert_eq!(pg.worth(Coalition::singleton(0)), Some(&rat(5)));
        assert_eq!(pg.worth(Coalition::from_players([0, 2])), None);
        assert_eq!(pg.grand_worth(), &rat(20));

        let full = restrict(&game, &KnownFamily::full(3)).unwrap();
        for s in Coalition::all(3) {
            assert_eq!(full.worth(s), Some(game.worth(s)));
        }
    }

    #[test]
    fn size_order_puts_small_coalitions_first() {
        let family = KnownFamily::base(3).with(Coalition::from_players([0, 2]));
        let order = family.by_size();
        assert_eq!(order[0], Coalition::EMPTY);
        assert_eq!(order[4], Coalition::from_players([0, 2]));
        assert_eq!(order[5], Coalition::grand(3));
    }
}
