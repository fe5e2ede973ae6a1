//! Defining sets are built from untrusted residue lists; acceptance implies
//! coset closure, and every derived quantity (decomposition, dual, distance
//! bound) must stay internally consistent without panics.

#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;

#[derive(Arbitrary, Debug)]
struct Input {
    q: u8,
    n: u16,
    r: u8,
    elems: Vec<u16>,
}

fuzz_target!(|input: Input| {
    let (q, n, r) = (input.q as u64, input.n as u64, input.r as u64);
    if n.saturating_mul(r.max(1)) > 20_000 || input.elems.len() > 256 {
        return;
    }
    let Ok(ctx) = eaqmds::CosetContext::new(q, n, r) else {
        return;
    };
    let elems = input.elems.iter().map(|&e| e as u64);
    let Ok(t) = eaqmds::DefiningSet::from_elements(ctx, elems) else {
        return;
    };

    let dec = t.decompose();
    assert_eq!(dec.ebits(), t.ebit_count());
    let mut union = dec.elements_ss();
    union.extend(dec.elements_sas());
    assert_eq!(&union, t.elements());

    let dual = eaqmds::hermitian_dual_defining_set(&t);
    assert_eq!(dual.len() + t.len(), ctx.n() as usize);
    assert_eq!(eaqmds::hermitian_dual_defining_set(&dual), t);
    assert_eq!(eaqmds::is_dual_containing(&t), t.ebit_count() == 0);

    let delta = eaqmds::bch_bound(&t);
    assert!(delta >= 1 && delta <= ctx.n() + 1);
    assert!(delta as usize <= t.len() + 1);
});
