//! The graph G(q, theta) on vertex set Z_{q^2 - 1}: i ~ j iff i + j lands in
//! the Sidon set A and i != j.
//!
//! Structure certified at build time: vertex i has degree q, except the
//! "absolute" vertices with 2i in A, which have degree q - 1. Absolute points
//! come in t antipodal pairs {i, i + n/2}, and the edge total is
//! q^3/2 - q/2 - t. Because A is Sidon, two distinct vertices share at most
//! one neighbor, so the graph has no 4-cycles.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::sidon::SidonSet;

/// The constructed graph: sorted adjacency lists plus the absolute-point
/// table, with the generating Sidon set kept alongside.
#[derive(Debug, Clone)]
pub struct BoseChowlaGraph {
    a: SidonSet,
    adj: Vec<Vec<u32>>,
    absolute: Vec<bool>,
    edges: u64,
}

impl BoseChowlaGraph {
    /// Builds the adjacency structure in O(n q) and verifies the degree law,
    /// the absolute-point count, and the edge formula before returning.
    pub fn build(a: SidonSet) -> Result<Self> {
        let n = a.n();
        if n > u32::MAX as u64 {
            return Err(Error::InvariantViolation(format!(
                "vertex count {n} exceeds the u32 vertex id range"
            )));
        }
        let n_us = n as usize;
        let q = a.q();

        let mut member = vec![false; n_us];
        for &elem in a.elements() {
            member[elem as usize] = true;
        }
        let absolute: Vec<bool> = (0..n).map(|i| member[((2 * i) % n) as usize]).collect();

        // Neighbors of i are (a - i) mod n over a in A. Splitting sorted A at
        // i gives two already-sorted runs: a >= i maps into [0, n - i) and
        // a < i wraps into [n - i, n), so their concatenation is sorted.
        let mut adj: Vec<Vec<u32>> = Vec::with_capacity(n_us);
        for i in 0..n {
            let split = a.elements().partition_point(|&elem| elem < i);
            let mut nbrs = Vec::with_capacity(q as usize);
            for &elem in &a.elements()[split..] {
                let j = elem - i;
                if j != i {
                    nbrs.push(j as u32);
                }
            }
            for &elem in &a.elements()[..split] {
                let j = elem + n - i;
                if j != i {
                    nbrs.push(j as u32);
                }
            }
            adj.push(nbrs);
        }

        // Symmetry plus the absence of self-loops, checked edge by edge.
        let mut degree_sum: u64 = 0;
        for (i, nbrs) in adj.iter().enumerate() {
            debug_assert!(nbrs.windows(2).all(|w| w[0] < w[1]));
            for &j in nbrs {
                if j as usize == i {
                    return Err(Error::InvariantViolation(format!("self-loop at vertex {i}")));
                }
                if adj[j as usize].binary_search(&(i as u32)).is_err() {
                    return Err(Error::InvariantViolation(format!(
                        "edge {i} -> {j} has no mirror"
                    )));
                }
            }
            degree_sum += nbrs.len() as u64;

            let expected = if absolute[i] { q - 1 } else { q };
            if nbrs.len() as u64 != expected {
                return Err(Error::InvariantViolation(format!(
                    "vertex {i} has degree {}, expected {expected}",
                    nbrs.len()
                )));
            }
        }

        let t = a.even_count();
        let absolute_count = absolute.iter().filter(|&&b| b).count() as u64;
        if absolute_count != 2 * t {
            return Err(Error::InvariantViolation(format!(
                "{absolute_count} absolute points, expected 2t = {}",
                2 * t
            )));
        }

        debug_assert_eq!(degree_sum % 2, 0);
        let edges = degree_sum / 2;
        let expected_edges = (q * q * q - q) / 2 - t;
        if edges != expected_edges {
            return Err(Error::InvariantViolation(format!(
                "{edges} edges, expected q^3/2 - q/2 - t = {expected_edges}"
            )));
        }

        Ok(BoseChowlaGraph { a, adj, absolute, edges })
    }

    /// Wraps pre-assembled parts without checking them; oracle tests use this
    /// to feed hypothetical graphs through the scanners.
    pub fn from_unchecked_parts(a: SidonSet, adj: Vec<Vec<u32>>, absolute: Vec<bool>) -> Self {
        let edges = adj.iter().map(|nbrs| nbrs.len() as u64).sum::<u64>() / 2;
        BoseChowlaGraph { a, adj, absolute, edges }
    }

    pub fn n(&self) -> u64 {
        self.adj.len() as u64
    }

    pub fn q(&self) -> u64 {
        self.a.q()
    }

    pub fn sidon(&self) -> &SidonSet {
        &self.a
    }

    pub fn edge_count(&self) -> u64 {
        self.edges
    }

    pub fn degree(&self, i: u32) -> usize {
        self.adj[i as usize].len()
    }

    /// Sorted neighbor list of `i`.
    pub fn neighbors(&self, i: u32) -> &[u32] {
        &self.adj[i as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn is_absolute(&self, i: u32) -> bool {
        self.absolute[i as usize]
    }

    pub fn absolute_count(&self) -> u64 {
        self.absolute.iter().filter(|&&b| b).count() as u64
    }

    /// Sorted intersection of two neighbor lists. In a 4-cycle-free graph the
    /// result has at most one entry.
    pub fn common_neighbors(&self, i: u32, j: u32) -> Result<Vec<u32>> {
        if i == j {
            return Err(Error::SameVertex { v: i });
        }
        let (mut xs, mut ys) = (self.neighbors(i).iter(), self.neighbors(j).iter());
        let mut out = Vec::new();
        let (mut x, mut y) = (xs.next(), ys.next());
        while let (Some(&a), Some(&b)) = (x, y) {
            match a.cmp(&b) {
                std::cmp::Ordering::Less => x = xs.next(),
                std::cmp::Ordering::Greater => y = ys.next(),
                std::cmp::Ordering::Equal => {
                    out.push(a);
                    x = xs.next();
                    y = ys.next();
                }
            }
        }
        Ok(out)
    }

    /// The t antipodal pairs (i, i + n/2) of absolute points, listed by their
    /// smaller member in increasing order.
    pub fn absolute_pairs(&self) -> Result<Vec<(u32, u32)>> {
        let n = self.n();
        let half = (n / 2) as u32;
        let mut pairs = Vec::new();
        for i in 0..half {
            if self.absolute[i as usize] {
                let partner = i + half;
                if !self.absolute[partner as usize] {
                    return Err(Error::PairingViolation { vertex: i });
                }
                pairs.push((i, partner));
            }
        }
        if 2 * pairs.len() as u64 != self.absolute_count() {
            // Some absolute point in the upper half lacks its lower partner.
            let orphan = (half..n as u32)
                .find(|&j| self.absolute[j as usize] && !self.absolute[(j - half) as usize])
                .unwrap_or(half);
            return Err(Error::PairingViolation { vertex: orphan });
        }
        Ok(pairs)
    }

    /// Largest number of absolute points adjacent to any single vertex.
    pub fn max_absolute_adjacency(&self) -> u64 {
        self.adj
            .iter()
            .map(|nbrs| nbrs.iter().filter(|&&j| self.absolute[j as usize]).count() as u64)
            .max()
            .unwrap_or(0)
    }

    /// Edge-list export: a `# sidon-c4 ...` header, then one `u v` line per
    /// edge with u < v, ascending.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# sidon-c4 q={} n={} m={}", self.q(), self.n(), self.edges)?;
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if (i as u32) < j {
                    writeln!(w, "{i} {j}")?;
                }
            }
        }
        Ok(())
    }
}
