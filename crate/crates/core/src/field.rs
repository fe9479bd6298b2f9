//! Arithmetic in GF(q^2) for an odd prime power q = p^e.
//!
//! Elements are polynomials over Z_p reduced modulo a monic irreducible
//! polynomial of degree 2e. Both the modulus and the multiplicative generator
//! theta are chosen deterministically, so every downstream artifact is
//! reproducible: the modulus is the lexicographically smallest monic
//! irreducible of degree 2e (coefficient vectors compared constant term
//! first), and theta is the first element in the same coefficient order whose
//! multiplicative order is exactly q^2 - 1.

use crate::arith::{factorize, odd_prime_power};
use crate::error::{Error, Result};

/// An element of GF(q^2): `coeffs[i]` multiplies x^i, all residues mod p.
/// The vector always has length 2e.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// A concrete model of GF(q^2) together with the chosen generator.
#[derive(Debug, Clone)]
pub struct FieldParams {
    p: u64,
    e: u32,
    q: u64,
    n: u64,
    /// Monic modulus of degree 2e, constant term first (length 2e + 1).
    modulus: Vec<u64>,
    theta: FieldElement,
    /// Distinct primes dividing n = q^2 - 1, for order tests.
    n_primes: Vec<u64>,
}

impl FieldParams {
    /// Builds GF(q^2) with the deterministic modulus and the first generator.
    pub fn new(q: u64) -> Result<Self> {
        Self::with_generator_index(q, 0)
    }

    /// Same as [`FieldParams::new`] but selects the `index`-th generator
    /// (0-based) in lexicographic coefficient order.
    pub fn with_generator_index(q: u64, index: usize) -> Result<Self> {
        let (p, e) = odd_prime_power(q).ok_or(Error::NotOddPrimePower { q })?;
        let modulus = smallest_irreducible(p, e);
        Self::assemble(p, e, q, modulus, index)
    }

    /// Builds GF(q^2) over a caller-supplied modulus, scanning for the
    /// `index`-th generator. The modulus must be monic of degree 2e with
    /// canonical coefficients and irreducible over Z_p.
    pub fn with_modulus(q: u64, modulus: &[u64], index: usize) -> Result<Self> {
        let (p, e) = odd_prime_power(q).ok_or(Error::NotOddPrimePower { q })?;
        validate_modulus(p, e, modulus)?;
        Self::assemble(p, e, q, modulus.to_vec(), index)
    }

    /// Builds GF(q^2) from an explicit modulus and generator, validating both.
    pub fn from_parts(p: u64, e: u32, modulus: Vec<u64>, theta: FieldElement) -> Result<Self> {
        let q = p.checked_pow(e).ok_or(Error::InvalidField("p^e overflows u64".into()))?;
        if odd_prime_power(q) != Some((p, e)) {
            return Err(Error::NotOddPrimePower { q });
        }
        validate_modulus(p, e, &modulus)?;
        let n = q * q - 1;
        let n_primes: Vec<u64> = factorize(n).into_iter().map(|(r, _)| r).collect();
        let ctx = FieldParams { p, e, q, n, modulus, theta: theta.clone(), n_primes };
        if theta.coeffs.len() != 2 * e as usize || theta.coeffs.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("theta has a malformed coefficient vector".into()));
        }
        if !ctx.is_generator(&theta) {
            return Err(Error::InvalidField(format!(
                "theta does not have multiplicative order {n}"
            )));
        }
        Ok(ctx)
    }

    fn assemble(p: u64, e: u32, q: u64, modulus: Vec<u64>, index: usize) -> Result<Self> {
        let n = q * q - 1;
        let n_primes: Vec<u64> = factorize(n).into_iter().map(|(r, _)| r).collect();
        let mut ctx = FieldParams {
            p,
            e,
            q,
            n,
            modulus,
            theta: FieldElement { coeffs: vec![0; 2 * e as usize] },
            n_primes,
        };
        ctx.theta = ctx.find_generator(index)?;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Order of the multiplicative group, q^2 - 1.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn theta(&self) -> &FieldElement {
        &self.theta
    }

    fn deg(&self) -> usize {
        2 * self.e as usize
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.deg()] }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.deg()];
        coeffs[0] = 1;
        FieldElement { coeffs }
    }

    /// The polynomial x as a field element.
    pub fn x(&self) -> FieldElement {
        let mut coeffs = vec![0; self.deg()];
        coeffs[1] = 1;
        FieldElement { coeffs }
    }

    /// Checked construction of an element from canonical coefficients.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.deg() || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidField(format!(
                "element needs {} coefficients below {}",
                self.deg(),
                self.p
            )));
        }
        Ok(FieldElement { coeffs: coeffs.to_vec() })
    }

    /// All q^2 elements in lexicographic coefficient order
    /// (constant term most significant).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let deg = self.deg();
        let total = self.q * self.q;
        (0..total).map(move |idx| FieldElement { coeffs: lex_coeffs(idx, deg, self.p) })
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    /// Schoolbook product reduced modulo the field polynomial.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let deg = self.deg();
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                prod[i + j] += ai * bj;
            }
        }
        for c in prod.iter_mut() {
            *c %= self.p;
        }
        // x^(2e) = -(f_0 + f_1 x + ... + f_(2e-1) x^(2e-1)) under the monic modulus.
        for i in (deg..prod.len()).rev() {
            let c = prod[i] % self.p;
            prod[i] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..deg {
                let fj = self.modulus[j];
                prod[i - deg + j] = (prod[i - deg + j] + c * ((self.p - fj) % self.p)) % self.p;
            }
        }
        prod.truncate(deg);
        FieldElement { coeffs: prod }
    }

    /// Square-and-multiply power; `pow(a, 0) = 1` for every `a`, including zero.
    pub fn pow(&self, a: &FieldElement, mut k: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Membership in the subfield F_q, by the Frobenius fixed-point test
    /// z^q = z. For e = 1 this coincides with the degree-1 coefficient
    /// vanishing, but the power test covers every e uniformly.
    pub fn in_subfield(&self, z: &FieldElement) -> bool {
        self.pow(z, self.q) == *z
    }

    /// Multiplicative order of `z`, or `None` for zero.
    pub fn element_order(&self, z: &FieldElement) -> Option<u64> {
        if z.is_zero() {
            return None;
        }
        debug_assert_eq!(self.pow(z, self.n), self.one());
        let mut order = self.n;
        for (r, _) in factorize(self.n) {
            while order.is_multiple_of(r) && self.pow(z, order / r) == self.one() {
                order /= r;
            }
        }
        Some(order)
    }

    fn is_generator(&self, z: &FieldElement) -> bool {
        if z.is_zero() || self.pow(z, self.n) != self.one() {
            return false;
        }
        self.n_primes.iter().all(|&r| self.pow(z, self.n / r) != self.one())
    }

    /// The `index`-th element (0-based) of lex coefficient order whose
    /// multiplicative order is exactly q^2 - 1.
    fn find_generator(&self, index: usize) -> Result<FieldElement> {
        let mut seen = 0usize;
        for cand in self.elements() {
            if self.is_generator(&cand) {
                if seen == index {
                    return Ok(cand);
                }
                seen += 1;
            }
        }
        Err(Error::GeneratorNotFound { index })
    }
}

/// Coefficient vector of the `idx`-th point of the lex order on Z_p^len,
/// where index 0 of the vector is the most significant digit.
fn lex_coeffs(idx: u64, len: usize, p: u64) -> Vec<u64> {
    let mut coeffs = vec![0u64; len];
    let mut rest = idx;
    for i in (0..len).rev() {
        coeffs[i] = rest % p;
        rest /= p;
    }
    coeffs
}

/// Remainder of `f` divided by monic `g`, both constant term first.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    debug_assert_eq!(g[dg], 1);
    while rem.len() > dg {
        let c = *rem.last().unwrap() % p;
        let shift = rem.len() - 1 - dg;
        if c != 0 {
            for (i, &gi) in g.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + c * ((p - gi % p) % p)) % p;
            }
        }
        debug_assert_eq!(rem.last(), Some(&0));
        rem.pop();
    }
    rem
}

/// A monic polynomial of degree 2e is reducible iff some monic polynomial of
/// degree at most e divides it; trial division settles that exactly.
fn is_irreducible(modulus: &[u64], p: u64, e: u32) -> bool {
    for d in 1..=e as usize {
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        for idx in 0..p.pow(d as u32) {
            divisor[..d].copy_from_slice(&lex_coeffs(idx, d, p));
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree 2e over Z_p.
fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    let deg = 2 * e as usize;
    let mut cand = vec![0u64; deg + 1];
    cand[deg] = 1;
    for idx in 0..p.pow(deg as u32) {
        cand[..deg].copy_from_slice(&lex_coeffs(idx, deg, p));
        if is_irreducible(&cand, p, e) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials of degree {deg} exist over Z_{p}");
}

fn validate_modulus(p: u64, e: u32, modulus: &[u64]) -> Result<()> {
    let deg = 2 * e as usize;
    if modulus.len() != deg + 1 || modulus[deg] != 1 {
        return Err(Error::InvalidField(format!("modulus must be monic of degree {deg}")));
    }
    if modulus.iter().any(|&c| c >= p) {
        return Err(Error::InvalidField(format!("modulus coefficients must lie below p = {p}")));
    }
    if !is_irreducible(modulus, p, e) {
        return Err(Error::InvalidField("modulus is reducible".into()));
    }
    Ok(())
}

/// Renders a coefficient vector as a readable polynomial in x.
pub fn poly_string(coeffs: &[u64]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{i}"),
            (_, _) => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
