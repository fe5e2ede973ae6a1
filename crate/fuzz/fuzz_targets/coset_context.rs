//! Context construction validates untrusted numeric input; on acceptance the
//! basic coset structure must hold without panics.

#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;

#[derive(Arbitrary, Debug)]
struct Input {
    q: u16,
    n: u16,
    r: u8,
    s: u32,
}

fuzz_target!(|input: Input| {
    let (q, n, r) = (input.q as u64, input.n as u64, input.r as u64);
    // Keep orbit enumeration desk-sized.
    if n.saturating_mul(r.max(1)) > 50_000 {
        return;
    }
    let Ok(ctx) = eaqmds::CosetContext::new(q, n, r) else {
        return;
    };
    assert_eq!(ctx.omega().len() as u64, ctx.n());

    let c = ctx.coset(input.s as u64);
    assert_eq!(c.rep(), *c.elems().iter().min().unwrap());
    assert_eq!(ctx.order_q2() % c.len() as u64, 0);

    // The skew map is an involution on cosets.
    let partner = ctx.skew_partner(&c);
    assert_eq!(ctx.skew_partner(&partner), c);
    assert_eq!(ctx.is_skew_symmetric(&c), partner == c);
});
