//! Constacyclic codes from defining sets: generator polynomial over GF(q^2),
//! parity-check matrix in the singleton-coset regime, Hermitian-dual defining
//! set, dual-containing test, and the consecutive-root distance bound.

use crate::arith::prime_power;
use crate::cosets::{CosetContext, DefiningSet};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::poly::Poly;

/// An eta-constacyclic code of length n over GF(q^2), built from a defining
/// set T: the generator polynomial is the product of (x - omega^j) over j in
/// T, where omega has order rn and omega^n = eta.
///
/// The working field is the splitting field GF(q^(2*ord)) with
/// ord = ord_{rn}(q^2); when every coset is a singleton (ord = 1) this is
/// GF(q^2) itself. Coset closure of T guarantees the generator coefficients
/// land in the GF(q^2) subfield either way, and construction verifies it.
#[derive(Clone, Debug)]
pub struct ConstacyclicCode {
    ctx: CosetContext,
    field: FiniteField,
    eta: FieldElement,
    omega: FieldElement,
    defining_set: DefiningSet,
    gen_poly: Poly,
}

impl ConstacyclicCode {
    /// Builds the code, verifying that the generator polynomial has degree
    /// |T|, has coefficients fixed by the Frobenius x -> x^(q^2), and divides
    /// x^n - eta exactly.
    pub fn build(t: &DefiningSet) -> Result<Self> {
        let ctx = *t.ctx();
        let (p, l) = prime_power(ctx.q()).ok_or(Error::NotPrimePower { q: ctx.q() })?;
        let degree = 2 * l as usize * ctx.order_q2() as usize;
        let field = FiniteField::new(p, degree)?;
        let omega = field.element_of_order(ctx.rn())?;
        let eta = omega.pow(ctx.n());
        if !eta.pow(ctx.r()).is_one() {
            return Err(Error::InternalInvariant(
                "constacyclic unit does not have order r".into(),
            ));
        }

        let mut gen_poly = Poly::one(field.clone());
        for &j in t.elements() {
            gen_poly = gen_poly.mul(&Poly::linear_from_root(&omega.pow(j)));
        }
        if gen_poly.degree() != Some(t.len()) {
            return Err(Error::InternalInvariant(
                "generator degree differs from |T|".into(),
            ));
        }
        let q2 = ctx.q() * ctx.q();
        for c in gen_poly.coeffs() {
            if &c.pow(q2) != c {
                return Err(Error::InternalInvariant(
                    "generator coefficient escapes GF(q^2)".into(),
                ));
            }
        }
        let ambient = Poly::power_minus_constant(ctx.n() as usize, &eta);
        let (_, rem) = ambient.div_rem(&gen_poly);
        if !rem.is_zero() {
            return Err(Error::InternalInvariant(
                "generator does not divide x^n - eta".into(),
            ));
        }

        Ok(ConstacyclicCode {
            ctx,
            field,
            eta,
            omega,
            defining_set: t.clone(),
            gen_poly,
        })
    }

    pub fn ctx(&self) -> &CosetContext {
        &self.ctx
    }

    /// The working field containing omega (GF(q^2) when ord_{rn}(q^2) = 1).
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn eta(&self) -> &FieldElement {
        &self.eta
    }

    pub fn omega(&self) -> &FieldElement {
        &self.omega
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn gen_poly(&self) -> &Poly {
        &self.gen_poly
    }

    /// Dimension n - |T| of the classical code.
    pub fn dim(&self) -> u64 {
        self.ctx.n() - self.defining_set.len() as u64
    }

    /// The |T| x n evaluation matrix H[j][k] = omega^(j*k), rows in ascending
    /// residue order. Only the singleton-coset regime keeps the entries in
    /// GF(q^2); anything else is refused rather than silently expanded.
    pub fn parity_check_matrix(&self) -> Result<ParityCheckMatrix> {
        if self.ctx.order_q2() != 1 {
            return Err(Error::Unsupported(format!(
                "parity-check matrix needs singleton cosets, but ord_rn(q^2) = {}",
                self.ctx.order_q2()
            )));
        }
        let n = self.ctx.n() as usize;
        let row_exponents: Vec<u64> = self.defining_set.elements().iter().copied().collect();
        let mut entries = Vec::with_capacity(row_exponents.len() * n);
        for &j in &row_exponents {
            for k in 0..n as u64 {
                entries.push(self.omega.pow(j * k));
            }
        }
        Ok(ParityCheckMatrix {
            field: self.field.clone(),
            row_exponents,
            n,
            entries,
        })
    }
}

/// Dense row-major evaluation matrix over GF(q^2); every codeword evaluates
/// to zero against every row, and the rows are independent.
#[derive(Clone, Debug)]
pub struct ParityCheckMatrix {
    field: FiniteField,
    row_exponents: Vec<u64>,
    n: usize,
    entries: Vec<FieldElement>,
}

impl ParityCheckMatrix {
    /// Assembles a matrix from parts without the defining-set provenance;
    /// test support for deliberately malformed inputs.
    #[cfg(test)]
    pub(crate) fn from_raw_parts(
        field: FiniteField,
        row_exponents: Vec<u64>,
        n: usize,
        entries: Vec<FieldElement>,
    ) -> Self {
        assert_eq!(entries.len(), row_exponents.len() * n);
        ParityCheckMatrix {
            field,
            row_exponents,
            n,
            entries,
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.row_exponents.len()
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// The defining-set residues indexing the rows, ascending.
    pub fn row_exponents(&self) -> &[u64] {
        &self.row_exponents
    }

    pub fn entry(&self, i: usize, k: usize) -> &FieldElement {
        &self.entries[i * self.n + k]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }
}

/// Exponent set of the Hermitian dual: Omega minus T^(-q), where
/// T^(-q) = {rn - qx mod rn : x in T}.
pub fn hermitian_dual_defining_set(t: &DefiningSet) -> DefiningSet {
    let ctx = *t.ctx();
    let image: std::collections::BTreeSet<u64> =
        t.elements().iter().map(|&x| ctx.skew_map(x)).collect();
    let rest = ctx.omega().into_iter().filter(|x| !image.contains(x));
    // Omega is closed under the skew map (r divides q+1), so the complement
    // stays inside Omega and remains coset-closed.
    DefiningSet::from_elements(ctx, rest).expect("dual exponent set is coset-closed")
}

/// Whether T and T^(-q) are disjoint, the dual-containing criterion. Always
/// equals `t.ebit_count() == 0`.
pub fn is_dual_containing(t: &DefiningSet) -> bool {
    t.elements()
        .iter()
        .all(|&x| !t.contains(t.ctx().skew_map(x)))
}

/// Distance bound from consecutive roots: 1 plus the longest cyclic run of
/// indices i (mod n) with 1 + ri in T. The code's minimum distance is at
/// least the returned value.
pub fn bch_bound(t: &DefiningSet) -> u64 {
    let ctx = t.ctx();
    let n = ctx.n();
    let mut indices: Vec<u64> = t
        .elements()
        .iter()
        .map(|&x| ctx.index_for_residue(x))
        .collect();
    indices.sort_unstable();
    if indices.is_empty() {
        return 1;
    }
    if indices.len() as u64 == n {
        return n + 1;
    }
    let mut best = 1u64;
    let mut run = 1u64;
    for w in indices.windows(2) {
        if w[1] == w[0] + 1 {
            run += 1;
        } else {
            run = 1;
        }
        best = best.max(run);
    }
    // A run through index 0 wraps around from n - 1.
    if indices[0] == 0 && *indices.last().unwrap() == n - 1 {
        let mut prefix = 1u64;
        while (prefix as usize) < indices.len() && indices[prefix as usize] == prefix {
            prefix += 1;
        }
        let mut suffix = 1u64;
        while (suffix as usize) < indices.len()
            && indices[indices.len() - 1 - suffix as usize] == n - 1 - suffix
        {
            suffix += 1;
        }
        best = best.max(prefix + suffix);
    }
    best + 1
}
