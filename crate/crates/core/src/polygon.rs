//! Chain-minimum computation over the points `(e_j, r_j)`.
//!
//! A chain selects indices `1 = i_0 < i_1 < ... < i_l = N` and costs
//! `sum_j (r_{i_j} - r_{i_{j+1}}) (e_{i_j} + e_{i_{j+1}})`, twice the area
//! swept against the r-axis. The minimum S over all chains is computed two
//! ways: exhaustive enumeration (the oracle) and the lower convex hull of
//! the point set (the fast path). Both are exact.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rat::Rat;
use crate::seq::{ESequence, RSequence};

/// Default ceiling for exhaustive enumeration (2^(N-2) chains).
pub const DEFAULT_BRUTEFORCE_CAP: usize = 20;

/// Strictly increasing 1-based index list from 1 to N.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Chain(pub Vec<usize>);

impl Chain {
    pub fn new(indices: Vec<usize>) -> Self {
        Chain(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn validate_for(&self, n: usize) -> Result<(), Error> {
        if self.0.len() < 2 {
            return Err(Error::InvalidChain(format!(
                "chain must have at least 2 indices, got {}",
                self.0.len()
            )));
        }
        if self.0[0] != 1 {
            return Err(Error::InvalidChain(format!("chain must start at 1, starts at {}", self.0[0])));
        }
        if *self.0.last().unwrap() != n {
            return Err(Error::InvalidChain(format!(
                "chain must end at {n}, ends at {}",
                self.0.last().unwrap()
            )));
        }
        for w in self.0.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidChain(format!("indices not increasing at {} -> {}", w[0], w[1])));
            }
        }
        Ok(())
    }
}

/// Exact chain minimum together with a witness chain achieving it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChainMinimum {
    pub value: Rat,
    pub witness: Chain,
}

fn check_pair(e: &ESequence, r: &RSequence) -> Result<usize, Error> {
    if e.len() != r.len() {
        return Err(crate::seq::InstanceReject::LengthMismatch { e_len: e.len(), r_len: r.len() }.into());
    }
    e.check()?;
    r.check()?;
    let n = e.len();
    if n < 2 {
        return Err(Error::SequenceTooShort { n, min: 2 });
    }
    Ok(n)
}

/// Cost of one segment `a -> b`: `(r_a - r_b)(e_a + e_b)`.
fn segment_cost(e: &ESequence, r: &RSequence, a: usize, b: usize) -> Rat {
    let width = Rat::from_int(BigInt::from(e.at1(a)) + BigInt::from(e.at1(b)));
    (r.at1(a) - r.at1(b)) * width
}

/// Exact cost of an explicit chain.
pub fn chain_cost(e: &ESequence, r: &RSequence, chain: &Chain) -> Result<Rat, Error> {
    if e.len() != r.len() {
        return Err(crate::seq::InstanceReject::LengthMismatch { e_len: e.len(), r_len: r.len() }.into());
    }
    chain.validate_for(e.len())?;
    Ok(chain
        .indices()
        .windows(2)
        .map(|w| segment_cost(e, r, w[0], w[1]))
        .sum())
}

struct Enumeration<'a> {
    e: &'a ESequence,
    r: &'a RSequence,
    n: usize,
    chain: Vec<usize>,
    best: Option<(Rat, Vec<usize>)>,
}

impl Enumeration<'_> {
    // Depth-first in lexicographic order over index lists; only a strict
    // improvement replaces the incumbent, so the first minimum found is the
    // lexicographically smallest witness. Since r is nonincreasing every
    // segment cost is >= 0, and a prefix already at or above the incumbent
    // can be cut without affecting the result.
    fn explore(&mut self, last: usize, cost: Rat) {
        if let Some((best, _)) = &self.best {
            if &cost >= best {
                return;
            }
        }
        if last == self.n {
            self.best = Some((cost, self.chain.clone()));
            return;
        }
        for next in last + 1..=self.n {
            let extended = &cost + &segment_cost(self.e, self.r, last, next);
            self.chain.push(next);
            self.explore(next, extended);
            self.chain.pop();
        }
    }
}

/// Exhaustive minimum over all `2^(N-2)` chains, with the lexicographically
/// smallest witness. Errors when `N` exceeds `cap`.
pub fn min_chain_bruteforce(e: &ESequence, r: &RSequence, cap: usize) -> Result<ChainMinimum, Error> {
    let n = check_pair(e, r)?;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut search = Enumeration { e, r, n, chain: vec![1], best: None };
    search.explore(1, Rat::zero());
    let (value, witness) = search.best.expect("at least the full chain is enumerated");
    Ok(ChainMinimum { value, witness: Chain(witness) })
}

/// Cross product `(a - o) x (b - o)` of hull candidate points
/// `(e as integer, r as rational)`.
fn cross(o: (i64, &Rat), a: (i64, &Rat), b: (i64, &Rat)) -> Rat {
    let ax = Rat::from_int(BigInt::from(a.0) - BigInt::from(o.0));
    let bx = Rat::from_int(BigInt::from(b.0) - BigInt::from(o.0));
    let ay = a.1 - o.1;
    let by = b.1 - o.1;
    ax * by - bx * ay
}

/// Chain minimum via the lower convex hull of the points `(e_j, r_j)`,
/// traversed in index order from point 1 to point N.
///
/// At each abscissa only the lowest point matters; the start point 1 is kept
/// even when a lower point shares its abscissa, since vertical moves at
/// `e = 0` cost nothing. Collinear interior points are dropped from the
/// witness. Agrees with [`min_chain_bruteforce`] on the value, not
/// necessarily on the witness.
pub fn min_chain_hull(e: &ESequence, r: &RSequence) -> Result<ChainMinimum, Error> {
    let n = check_pair(e, r)?;

    // Lowest point per abscissa: r is nonincreasing, so that is the last
    // index carrying each e-value.
    let mut reps: Vec<usize> = Vec::new();
    for i in 1..=n {
        if i == n || e.at1(i + 1) != e.at1(i) {
            reps.push(i);
        }
    }

    // Monotone chain over strictly increasing abscissas.
    let mut hull: Vec<usize> = Vec::new();
    for &i in &reps {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let turn = cross(
                (e.at1(o), r.at1(o)),
                (e.at1(a), r.at1(a)),
                (e.at1(i), r.at1(i)),
            );
            if turn.is_positive() {
                break;
            }
            hull.pop();
        }
        hull.push(i);
    }

    if hull[0] != 1 {
        hull.insert(0, 1);
    }
    let witness = Chain(hull);
    let value = chain_cost(e, r, &witness)?;
    debug_assert!(!value.is_negative());
    Ok(ChainMinimum { value, witness })
}
