//! Harsanyi dividends on a known family, plus the incremental engine that
//! carries them from one examination stage to the next.

use num_traits::Zero;

use crate::coalition::Coalition;
use crate::game::{FullGame, Rational};
use crate::partial::PartialGame;

/// Dividends for every coalition; zero outside the known family. For every
/// known `S`, the dividends of the subsets of `S` sum to the known worth of
/// `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividendMap {
    n: usize,
    values: Vec<Rational>,
}

impl DividendMap {
    pub(crate) fn from_vec(n: usize, values: Vec<Rational>) -> DividendMap {
        debug_assert_eq!(values.len(), 1 << n);
        DividendMap { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: Coalition) -> &Rational {
        &self.values[s.mask() as usize]
    }

    /// All dividends, indexed by coalition bitmask.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Evaluates the dividend recursion over the known family in subset-size
/// order: `d(S) = v(S) − Σ_{T ⊊ S} d(T)` for known `S`, zero elsewhere.
pub fn harsanyi_dividends(pg: &PartialGame) -> DividendMap {
    let n = pg.n();
    let mut d = vec![Rational::zero(); 1 << n];
    for s in pg.known().by_size() {
        if s.is_empty() {
            continue;
        }
        let mut below = Rational::zero();
        for t in s.proper_subsets() {
            below += &d[t.mask() as usize];
        }
        d[s.mask() as usize] = pg.worth(s).expect("known coalition") - below;
    }
    DividendMap::from_vec(n, d)
}

/// Dividends maintained incrementally along an examination order, starting
/// from the base family. Adding a coalition `U` only disturbs the dividends
/// of known supersets of `U`: for any other known `W`, no subset of `W`
/// gained a dividend, so `W`'s recursion is untouched.
pub(crate) struct StagedDividends {
    n: usize,
    d: Vec<Rational>,
    known: Vec<bool>,
}

impl StagedDividends {
    /// Base-family dividends: each singleton carries its own worth and the
    /// grand coalition the remaining surplus.
    pub(crate) fn new(game: &FullGame) -> StagedDividends {
        let n = game.n();
        let mut d = vec![Rational::zero(); 1 << n];
        let mut singletons = Rational::zero();
        for i in 0..n {
            let w = game.worth(Coalition::singleton(i)).clone();
            singletons += &w;
            d[1 << i] = w;
        }
        let grand = Coalition::grand(n);
        d[grand.mask() as usize] = game.worth(grand) - singletons;
        let mut known = vec![false; 1 << n];
        known[0] = true;
        for i in 0..n {
            known[1 << i] = true;
        }
        known[grand.mask() as usize] = true;
        StagedDividends { n, d, known }
    }

    pub(crate) fn get(&self, s: Coalition) -> &Rational {
        &self.d[s.mask() as usize]
    }

    /// Adds `u` to the family and returns the dividend changes as
    /// `(coalition, delta)` pairs in ascending-size order. The first entry is
    /// `u` itself; the rest are previously known supersets of `u`.
    pub(crate) fn add(&mut self, game: &FullGame, u: Coalition) -> Vec<(Coalition, Rational)> {
        let u_mask = u.mask() as usize;
        debug_assert!(!self.known[u_mask], "coalition examined twice");

        let mut below = Rational::zero();
        for t in u.proper_subsets() {
            below += &self.d[t.mask() as usize];
        }
        let mut deltas: Vec<(Coalition, Rational)> = vec![(u, game.worth(u) - below)];

        // Known strict supersets of u, smallest first: walk subsets of the
        // complement and re-attach u.
        let rest = Coalition::grand(self.n).difference(u);
        let mut supersets: Vec<Coalition> = rest
            .subsets()
            .map(|extra| u.union(extra))
            .filter(|w| *w != u && self.known[w.mask() as usize])
            .collect();
        supersets.sort_by_key(|w| (w.len(), w.mask()));

        for w in supersets {
            let mut delta = Rational::zero();
            for (t, dt) in &deltas {
                if t.is_subset_of(w) {
                    delta -= dt;
                }
            }
            deltas.push((w, delta));
        }

        for (s, delta) in &deltas {
            self.d[s.mask() as usize] += delta;
        }
        self.known[u_mask] = true;
        deltas
    }
}
