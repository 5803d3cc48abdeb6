//! Generic initial ideals via random coordinate changes.
//!
//! A change is sampled from a seeded ChaCha8 stream, the initial ideal of the
//! transformed ideal is computed for two independent seeds, and the result is
//! accepted only when both samples give the same Borel-fixed monomial ideal.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger_with_caps, Caps, GroebnerBasis, Ideal};
use crate::linear::LinearChange;
use crate::monomial::TermOrder;
use crate::monomial_ideal::MonomialIdeal;

const RESAMPLE_CAP: usize = 1000;

/// Seed offset between retry rounds.
const ROUND_STRIDE: u64 = 0x9E37_79B9;

/// A dense `(n+1) x (n+1)` change with entries uniform in `[1, bound]`,
/// resampled from the same stream until it is invertible.
pub fn random_change<F: Field>(seed: u64, n: usize, bound: u64) -> LinearChange<F> {
    assert!(bound >= 2, "entry bound must be at least 2");
    let dim = n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_CAP {
        let entries: Vec<Vec<F>> = (0..dim)
            .map(|_| (0..dim).map(|_| F::from_i64(rng.gen_range(1..=bound) as i64)).collect())
            .collect();
        if let Ok(change) = LinearChange::new(entries) {
            return change;
        }
    }
    panic!("no invertible change after {} samples", RESAMPLE_CAP);
}

/// Entry bound used when none is given: 99 over prime fields, 9 over the rationals.
pub fn default_bound<F: Field>() -> u64 {
    if F::characteristic() == 0 {
        9
    } else {
        99
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GinOptions {
    pub seeds: (u64, u64),
    pub bound: Option<u64>,
    pub rounds: usize,
    pub caps: Caps,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seeds: (1, 2),
            bound: None,
            rounds: 3,
            caps: Caps::default(),
        }
    }
}

#[derive(Clone)]
pub struct GinResult<F> {
    /// The generic initial ideal, by minimal generators.
    pub gin: MonomialIdeal,
    pub order: TermOrder,
    /// Seed pair of the accepted round.
    pub seeds: (u64, u64),
    pub bound: u64,
    /// Number of independent samples that produced `gin`.
    pub agreement: usize,
    pub borel_fixed: bool,
    /// Change of the first accepted sample; the frame later computations reuse.
    pub change: LinearChange<F>,
    /// Reduced Gröbner basis of the transformed ideal in that frame.
    pub basis: GroebnerBasis<F>,
}

impl<F: Field> std::fmt::Debug for GinResult<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GinResult")
            .field("gin", &self.gin)
            .field("order", &self.order)
            .field("seeds", &self.seeds)
            .field("bound", &self.bound)
            .finish()
    }
}

impl<F: Field> GinResult<F> {
    /// The transformed ideal `g(I)` whose initial ideal is the gin.
    pub fn generic_ideal(&self) -> Ideal<F> {
        self.basis.to_ideal()
    }

    pub fn max_degree(&self) -> u32 {
        self.gin.max_degree().unwrap_or(0)
    }
}

struct Sample<F> {
    change: LinearChange<F>,
    basis: GroebnerBasis<F>,
}

fn sample<F: Field>(ideal: &Ideal<F>, order: TermOrder, seed: u64, bound: u64, caps: Caps) -> Result<Sample<F>> {
    let change = random_change::<F>(seed, ideal.nvars() - 1, bound);
    let moved = ideal.apply_change(&change)?;
    let basis = buchberger_with_caps(&moved, order, caps)?;
    Ok(Sample { change, basis })
}

/// `Gin_order(I)` under the two-sample agreement protocol.
pub fn gin<F: Field>(ideal: &Ideal<F>, order: TermOrder, opts: &GinOptions) -> Result<GinResult<F>> {
    let mut bound = opts.bound.unwrap_or_else(default_bound::<F>);
    let (mut s1, mut s2) = opts.seeds;
    for round in 0..opts.rounds {
        if round > 0 {
            s1 = s1.wrapping_add(ROUND_STRIDE);
            s2 = s2.wrapping_add(ROUND_STRIDE);
            bound *= 2;
        }
        // a seed pair that yields one matrix twice is not two samples
        let mut second = s2;
        while second == s1
            || random_change::<F>(second, ideal.nvars() - 1, bound) == random_change::<F>(s1, ideal.nvars() - 1, bound)
        {
            second = second.wrapping_add(1);
        }
        let (a, b) = std::thread::scope(|scope| {
            let h = scope.spawn(|| sample(ideal, order, second, bound, opts.caps));
            let a = sample(ideal, order, s1, bound, opts.caps);
            (a, h.join().expect("gin worker panicked"))
        });
        let (a, b) = (a?, b?);
        let gin_a = a.basis.initial_ideal();
        let gin_b = b.basis.initial_ideal();
        let borel = gin_a.is_borel_fixed();
        if gin_a == gin_b && borel {
            return Ok(GinResult {
                gin: gin_a,
                order,
                seeds: (s1, second),
                bound,
                agreement: 2,
                borel_fixed: true,
                change: a.change,
                basis: a.basis,
            });
        }
    }
    Err(Error::GinInstability { rounds: opts.rounds })
}

/// `M(I)`: the largest degree of a minimal generator of the graded-lex gin.
pub fn m_invariant<F: Field>(ideal: &Ideal<F>, opts: &GinOptions) -> Result<u32> {
    let g = gin(ideal, TermOrder::GradedLex, opts)?;
    g.gin.regularity_borel()
}
