//! Random generation of valid contexts and defining sets, for property tests
//! and fuzzing. Everything is driven by a caller-supplied RNG, so seeded runs
//! are reproducible.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::arith::{divisors, gcd};
use crate::cosets::{CosetContext, DefiningSet};

/// Prime powers up to 32, handy q values for randomized tests.
pub const SMALL_PRIME_POWERS: [u64; 15] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

/// A random valid context: q from the small prime powers (capped by `max_q`),
/// r a divisor of q + 1, n coprime to q with rn <= max_rn.
pub fn random_context(rng: &mut impl Rng, max_q: u64, max_rn: u64) -> CosetContext {
    loop {
        let qs: Vec<u64> = SMALL_PRIME_POWERS
            .iter()
            .copied()
            .filter(|&q| q <= max_q)
            .collect();
        let q = *qs.choose(rng).expect("max_q at least 2");
        let rs = divisors(q + 1);
        let r = *rs.choose(rng).unwrap();
        if r > max_rn {
            continue;
        }
        let n = rng.random_range(1..=max_rn / r);
        if gcd(n, q) != 1 {
            continue;
        }
        return CosetContext::new(q, n, r).unwrap();
    }
}

/// A random context in the singleton-coset regime: rn divides q^2 - 1, so
/// ord_{rn}(q^2) = 1 and parity-check matrices exist.
pub fn random_m1_context(rng: &mut impl Rng, max_q: u64, max_n: u64) -> CosetContext {
    let qs: Vec<u64> = SMALL_PRIME_POWERS
        .iter()
        .copied()
        .filter(|&q| q <= max_q)
        .collect();
    let q = *qs.choose(rng).expect("max_q at least 2");
    let r = *divisors(q + 1).choose(rng).unwrap();
    let ns: Vec<u64> = divisors((q * q - 1) / r)
        .into_iter()
        .filter(|&n| n <= max_n)
        .collect();
    let n = *ns.choose(rng).unwrap(); // 1 always qualifies
    let ctx = CosetContext::new(q, n, r).unwrap();
    debug_assert_eq!(ctx.order_q2(), 1);
    ctx
}

/// A random union of cosets inside Omega: each coset of the context is
/// included independently with the given density.
pub fn random_defining_set(rng: &mut impl Rng, ctx: CosetContext, density: f64) -> DefiningSet {
    let mut elems: Vec<u64> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for x in ctx.omega() {
        if seen.contains(&x) {
            continue;
        }
        let coset = ctx.coset(x);
        for &e in coset.elems() {
            seen.insert(e);
        }
        if rng.random_bool(density) {
            elems.extend_from_slice(coset.elems());
        }
    }
    DefiningSet::from_elements(ctx, elems).expect("union of whole cosets")
}
