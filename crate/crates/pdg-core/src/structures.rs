//! Structural predicates used by the axiom systems: partnership,
//! zero-coalition, p-type coalition and carrier.

use num_traits::Zero;

use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::game::FullGame;
use crate::partial::PartialGame;

/// `S` is a partnership of `v` when every coalition that does not contain
/// all of `S` has zero worth. Quantifies over the full lattice, so it takes
/// the full game rather than a restriction.
pub fn is_partnership(game: &FullGame, s: Coalition) -> bool {
    let n = game.n();
    Coalition::all(n)
        .filter(|t| !t.is_superset_of(s))
        .all(|t| game.worth(t).is_zero())
}

/// `S` is a zero-coalition when every known subset of `S` has zero worth.
pub fn is_zero_coalition(pg: &PartialGame, s: Coalition) -> bool {
    s.subsets()
        .filter_map(|t| pg.worth(t))
        .all(|w| w.is_zero())
}

/// `P` is a p-type coalition when removing `P` never changes a known worth:
/// for every known `S` missing part of `P`, either `S∖P` is known with the
/// same worth as `S`, or `S∖P` is unknown and `S` is a zero-coalition.
pub fn is_p_type(pg: &PartialGame, p: Coalition) -> bool {
    if p.is_empty() {
        return false;
    }
    pg.known().iter().all(|s| {
        if p.difference(s).is_empty() {
            return true;
        }
        let remainder = s.difference(p);
        match pg.worth(remainder) {
            Some(w) => w == pg.worth(s).expect("known coalition"),
            None => is_zero_coalition(pg, s),
        }
    })
}

/// `S` is a carrier of the partial game when every known coalition's worth
/// is decided by its intersection with `S`. The definition compares worths
/// at `T ∩ S`, so that intersection must itself be known; an unknown
/// intersection counts as "not a carrier".
pub fn is_carrier(pg: &PartialGame, s: Coalition) -> Result<bool> {
    if pg.worth(s).is_none() {
        return Err(GameError::CoalitionNotKnown(s));
    }
    Ok(pg.known().iter().all(|t| {
        match pg.worth(t.intersection(s)) {
            Some(w) => w == pg.worth(t).expect("known coalition"),
            None => false,
        }
    }))
}
