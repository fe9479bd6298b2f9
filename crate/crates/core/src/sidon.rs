//! Bose-Chowla Sidon sets in Z_{q^2 - 1}.
//!
//! For a generator theta of GF(q^2)*, the set A = { a : theta^a - theta lies
//! in the subfield F_q } has exactly q elements and is a Sidon set: all
//! pairwise sums are distinct. The verifier here is an occupancy scan over
//! the sums themselves, so it certifies the property without leaning on any
//! of the algebra used to build the set.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::field::FieldParams;

/// A subset of Z_n with n = q^2 - 1, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidonSet {
    q: u64,
    n: u64,
    elements: Vec<u64>,
    t_even: u64,
}

impl SidonSet {
    /// Builds A(q, theta) by walking the powers of theta, one multiplication
    /// per exponent.
    pub fn bose_chowla(ctx: &FieldParams) -> Result<Self> {
        let n = ctx.n();
        let theta = ctx.theta().clone();
        let mut elements = Vec::with_capacity(ctx.q() as usize);
        let mut power = ctx.one();
        for a in 0..n {
            if a > 0 {
                power = ctx.mul(&power, &theta);
            }
            if ctx.in_subfield(&ctx.sub(&power, &theta)) {
                elements.push(a);
            }
        }
        // The walk must close: theta^(n-1) * theta = 1.
        assert_eq!(ctx.mul(&power, &theta), ctx.one());
        if elements.len() as u64 != ctx.q() {
            return Err(Error::SizeMismatch {
                q: ctx.q(),
                expected: ctx.q(),
                got: elements.len() as u64,
            });
        }
        Ok(Self::from_raw_parts(ctx.q(), elements))
    }

    /// Wraps raw residues without verifying the Sidon property; the oracle
    /// tests feed adversarial sets through this.
    pub fn from_raw_parts(q: u64, mut elements: Vec<u64>) -> Self {
        let n = q * q - 1;
        elements.sort_unstable();
        elements.dedup();
        assert!(elements.iter().all(|&a| a < n), "residues must lie in Z_{n}");
        let t_even = elements.iter().filter(|&&a| a % 2 == 0).count() as u64;
        SidonSet { q, n, elements, t_even }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Sorted canonical residues in [0, n).
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// t: how many elements are even as canonical residues.
    pub fn even_count(&self) -> u64 {
        self.t_even
    }

    /// Brute-force Sidon check: every unordered pair sum (repeats allowed)
    /// must land on a distinct residue.
    pub fn is_sidon(&self) -> bool {
        self.sidon_scan().0
    }

    /// The occupancy scan plus its work counter (sums inspected).
    pub fn sidon_scan(&self) -> (bool, u64) {
        let mut seen = vec![false; self.n as usize];
        let mut work = 0u64;
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i..] {
                work += 1;
                let s = ((a + b) % self.n) as usize;
                if seen[s] {
                    return (false, work);
                }
                seen[s] = true;
            }
        }
        (true, work)
    }

    /// Difference set A - A with its complement, verified against the exact
    /// description: the missing residues are s(q + 1) for s = 1 .. q - 2.
    pub fn difference_set(&self) -> Result<DifferenceSet> {
        let n = self.n as usize;
        let mut present = vec![false; n];
        for &a in &self.elements {
            for &b in &self.elements {
                present[((a + self.n - b) % self.n) as usize] = true;
            }
        }
        let missing: Vec<u64> =
            (0..self.n).filter(|&d| !present[d as usize]).collect();
        let expected: Vec<u64> = (1..=self.q.saturating_sub(2)).map(|s| s * (self.q + 1)).collect();
        if missing != expected {
            return Err(Error::LemmaViolation(format!(
                "difference set of A(q={}) misses {:?}, expected multiples {:?}",
                self.q, missing, expected
            )));
        }
        let size = self.n - missing.len() as u64;
        if size != self.q * (self.q - 1) + 1 {
            return Err(Error::LemmaViolation(format!(
                "|A - A| = {size}, expected q(q-1)+1 = {}",
                self.q * (self.q - 1) + 1
            )));
        }
        Ok(DifferenceSet { present, missing })
    }

    /// One decimal residue per line.
    pub fn write_residues<W: Write>(&self, mut w: W) -> io::Result<()> {
        for &a in &self.elements {
            writeln!(w, "{a}")?;
        }
        Ok(())
    }
}

/// Membership table for A - A in Z_n, plus the sorted complement.
#[derive(Debug, Clone)]
pub struct DifferenceSet {
    present: Vec<bool>,
    missing: Vec<u64>,
}

impl DifferenceSet {
    pub fn contains(&self, d: u64) -> bool {
        self.present[d as usize]
    }

    pub fn size(&self) -> u64 {
        (self.present.len() - self.missing.len()) as u64
    }

    pub fn missing(&self) -> &[u64] {
        &self.missing
    }
}
