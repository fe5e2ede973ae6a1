//! q^2-cyclotomic cosets modulo rn, the exponent set Omega = {1 + ir}, and the
//! decomposition of a defining set into its skew-symmetric part (which counts
//! required ebits) and the rest. Pure modular arithmetic; no field objects.

use std::collections::BTreeSet;

use crate::arith::{gcd, mul_mod, multiplicative_order};
use crate::error::{Error, Result};

/// Parameters shared by every coset computation: a prime power `q`, a code
/// length `n` coprime to `q`, and the order `r` of the constacyclic unit,
/// required to divide `q + 1`. Residues live modulo `rn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CosetContext {
    q: u64,
    n: u64,
    r: u64,
    rn: u64,
    /// Multiplicative order of q^2 modulo rn.
    ord: u64,
}

impl CosetContext {
    pub fn new(q: u64, n: u64, r: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidContext(format!("q = {q} must be at least 2")));
        }
        if n == 0 || r == 0 {
            return Err(Error::InvalidContext("n and r must be positive".into()));
        }
        let g = gcd(n, q);
        if g != 1 {
            return Err(Error::InvalidContext(format!(
                "gcd(n, q) = gcd({n}, {q}) = {g}, expected 1"
            )));
        }
        let q_plus_1 = q
            .checked_add(1)
            .ok_or_else(|| Error::InvalidContext("q + 1 overflows".into()))?;
        if q_plus_1 % r != 0 {
            return Err(Error::InvalidContext(format!(
                "r = {r} does not divide q + 1 = {q_plus_1}"
            )));
        }
        let rn = r
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidContext("rn overflows".into()))?;
        let ord = if rn == 1 {
            1
        } else {
            multiplicative_order(mul_mod(q, q, rn), rn).ok_or_else(|| {
                Error::InternalInvariant("q^2 not invertible modulo rn".into())
            })?
        };
        Ok(CosetContext { q, n, r, rn, ord })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn rn(&self) -> u64 {
        self.rn
    }

    /// ord_{rn}(q^2): every coset size divides this.
    pub fn order_q2(&self) -> u64 {
        self.ord
    }

    /// The exponent list [1 + ir mod rn for i in 0..n], in index order.
    pub fn omega(&self) -> Vec<u64> {
        (0..self.n).map(|i| (1 + i * self.r) % self.rn).collect()
    }

    /// Whether `x` is one of the residues 1 + ir mod rn.
    pub fn in_omega(&self, x: u64) -> bool {
        x < self.rn && x % self.r == 1 % self.r
    }

    /// Residue 1 + ri mod rn for a signed index i.
    pub fn residue_for_index(&self, i: i64) -> u64 {
        let v = 1i128 + self.r as i128 * i as i128;
        v.rem_euclid(self.rn as i128) as u64
    }

    /// Index i in 0..n with 1 + ri = x mod rn; inverse of `residue_for_index`
    /// on Omega.
    pub fn index_for_residue(&self, x: u64) -> u64 {
        debug_assert!(self.in_omega(x));
        ((x + self.rn - 1) % self.rn) / self.r
    }

    /// The q^2-cyclotomic coset containing `s` (reduced mod rn).
    pub fn coset(&self, s: u64) -> Coset {
        let s = s % self.rn;
        let q2 = mul_mod(self.q, self.q, self.rn);
        let mut elems = Vec::new();
        let mut cur = s;
        loop {
            elems.push(cur);
            cur = mul_mod(cur, q2, self.rn);
            if cur == s {
                break;
            }
        }
        elems.sort_unstable();
        debug_assert!(self.ord % elems.len() as u64 == 0);
        Coset { elems }
    }

    /// The coset C_{1+ri}.
    pub fn coset_of_index(&self, i: i64) -> Coset {
        self.coset(self.residue_for_index(i))
    }

    /// The involution x -> rn - qx mod rn that pairs a defining set with the
    /// exponents of its Hermitian dual.
    pub fn skew_map(&self, x: u64) -> u64 {
        let qx = mul_mod(self.q, x % self.rn, self.rn);
        (self.rn - qx) % self.rn
    }

    /// Whether rn - q*s mod rn lands back inside C_s.
    pub fn is_skew_symmetric(&self, c: &Coset) -> bool {
        c.contains(self.skew_map(c.rep()))
    }

    /// The coset of rn - q*s mod rn; applying this twice returns the original
    /// coset (q^2 stabilizes cosets).
    pub fn skew_partner(&self, c: &Coset) -> Coset {
        self.coset(self.skew_map(c.rep()))
    }
}

/// A q^2-cyclotomic coset, stored sorted; the canonical representative is the
/// minimum element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coset {
    elems: Vec<u64>,
}

impl Coset {
    pub fn rep(&self) -> u64 {
        self.elems[0]
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a coset always contains its seed
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }
}

/// A union of whole cosets inside Omega: the exponents at which a generator
/// polynomial vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    ctx: CosetContext,
    cosets: Vec<Coset>,
    elements: BTreeSet<u64>,
}

impl DefiningSet {
    pub fn empty(ctx: CosetContext) -> Self {
        DefiningSet {
            ctx,
            cosets: Vec::new(),
            elements: BTreeSet::new(),
        }
    }

    /// The full exponent set Omega (closed under q^2 because q^2 = 1 mod r).
    pub fn full(ctx: CosetContext) -> Self {
        Self::from_elements(ctx, ctx.omega()).expect("Omega is coset-closed")
    }

    /// Builds a defining set from residues (canonicalized mod rn). Every
    /// residue must lie in Omega and the union must be closed under
    /// multiplication by q^2.
    pub fn from_elements(ctx: CosetContext, elems: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in elems {
            let e = e % ctx.rn();
            if !ctx.in_omega(e) {
                return Err(Error::NotInOmega { elem: e });
            }
            set.insert(e);
        }
        let mut cosets = Vec::new();
        let mut seen = BTreeSet::new();
        for &e in &set {
            if seen.contains(&e) {
                continue;
            }
            let c = ctx.coset(e);
            for &x in c.elems() {
                if !set.contains(&x) {
                    return Err(Error::NotCosetClosed { elem: e });
                }
                seen.insert(x);
            }
            cosets.push(c);
        }
        cosets.sort();
        Ok(DefiningSet {
            ctx,
            cosets,
            elements: set,
        })
    }

    /// Builds the union of cosets C_{1+ri} over the given signed indices.
    pub fn from_indices(ctx: CosetContext, indices: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut elems = Vec::new();
        for i in indices {
            let c = ctx.coset_of_index(i);
            elems.extend_from_slice(c.elems());
        }
        Self::from_elements(ctx, elems)
    }

    pub fn ctx(&self) -> &CosetContext {
        &self.ctx
    }

    pub fn elements(&self) -> &BTreeSet<u64> {
        &self.elements
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// Number of elements (= degree of the generator polynomial).
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.contains(&(x % self.ctx.rn()))
    }

    /// Splits the set into T_ss = T intersect T^{-q} and T_sas = T minus
    /// T_ss, lifted to whole cosets. The number of required ebits equals the
    /// element count of T_ss.
    pub fn decompose(&self) -> Decomposition {
        let ss_elems: BTreeSet<u64> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| self.elements.contains(&self.ctx.skew_map(x)))
            .collect();
        let mut t_ss = Vec::new();
        let mut t_sas = Vec::new();
        for c in &self.cosets {
            let inside = c.elems().iter().filter(|x| ss_elems.contains(x)).count();
            // T_ss is a union of whole cosets: membership is q^2-invariant.
            assert!(
                inside == 0 || inside == c.len(),
                "skew-symmetric part split a coset"
            );
            if inside == c.len() {
                t_ss.push(c.clone());
            } else {
                t_sas.push(c.clone());
            }
        }
        // Partner pairs inside T_ss are complete: the skew map fixes T_ss.
        for c in &t_ss {
            let partner = self.ctx.skew_partner(c);
            assert!(
                t_ss.binary_search(&partner).is_ok(),
                "skew partner missing from T_ss"
            );
        }
        let ebits = ss_elems.len();
        Decomposition { t_ss, t_sas, ebits }
    }

    /// |T_ss| counted in elements: the optimal number of ebits.
    pub fn ebit_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|&&x| self.elements.contains(&self.ctx.skew_map(x)))
            .count()
    }
}

/// The partition T = T_ss u T_sas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    t_ss: Vec<Coset>,
    t_sas: Vec<Coset>,
    ebits: usize,
}

impl Decomposition {
    pub fn t_ss(&self) -> &[Coset] {
        &self.t_ss
    }

    pub fn t_sas(&self) -> &[Coset] {
        &self.t_sas
    }

    /// Element-wise size of T_ss.
    pub fn ebits(&self) -> usize {
        self.ebits
    }

    pub fn elements_ss(&self) -> BTreeSet<u64> {
        self.t_ss
            .iter()
            .flat_map(|c| c.elems().iter().copied())
            .collect()
    }

    pub fn elements_sas(&self) -> BTreeSet<u64> {
        self.t_sas
            .iter()
            .flat_map(|c| c.elems().iter().copied())
            .collect()
    }
}
