//! Brute-force oracle: scan every subset of the proper diagonals and keep
//! the sets satisfying `A = nc(nc(A))`.
//!
//! The subsets are encoded as bit masks over the diagonal list, with a
//! precomputed crossing mask per diagonal, so one `nc` step is a handful of
//! word operations.  The search space is `2^(n(n-3)/2)` subsets, which is why
//! the entry points enforce a vertex limit; the point of this module is an
//! independently simple reference to test the structured generators against,
//! not throughput.

use std::collections::BTreeMap;

use crate::diagram::{all_proper_diagonals, Diagonal, Diagram};
use crate::error::{Error, Result};

/// Default vertex limit for the brute-force scan.
pub const BRUTE_FORCE_DEFAULT_LIMIT: u32 = 8;
/// Absolute vertex cap; beyond this the masks would need more than 64 bits
/// and the scan would be hopeless anyway.
pub const BRUTE_FORCE_HARD_CAP: u32 = 9;

struct CrossTable {
    n_vertices: u32,
    diagonals: Vec<Diagonal>,
    crossers: Vec<u64>,
}

impl CrossTable {
    fn new(n_vertices: u32) -> Self {
        let diagonals = all_proper_diagonals(n_vertices);
        debug_assert!(diagonals.len() <= 64);
        let crossers = diagonals
            .iter()
            .map(|d| {
                let mut mask = 0u64;
                for (j, other) in diagonals.iter().enumerate() {
                    if d.crosses(other) {
                        mask |= 1 << j;
                    }
                }
                mask
            })
            .collect();
        CrossTable {
            n_vertices,
            diagonals,
            crossers,
        }
    }

    fn nc_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for (i, &crossers) in self.crossers.iter().enumerate() {
            if crossers & mask == 0 {
                out |= 1 << i;
            }
        }
        out
    }

    fn is_ptolemy_mask(&self, mask: u64) -> bool {
        self.nc_mask(self.nc_mask(mask)) == mask
    }

    fn decode(&self, mask: u64) -> Diagram {
        let diagonals = self
            .diagonals
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, d)| *d)
            .collect();
        Diagram::from_sorted_unchecked(self.n_vertices, diagonals)
    }
}

fn check_limits(n_vertices: u32, limit: u32) -> Result<()> {
    if n_vertices < 2 {
        return Err(Error::PolygonTooSmall(n_vertices));
    }
    if limit > BRUTE_FORCE_HARD_CAP {
        return Err(Error::BruteForceCap {
            limit,
            cap: BRUTE_FORCE_HARD_CAP,
        });
    }
    if n_vertices > limit {
        return Err(Error::EnumerationLimit { n_vertices, limit });
    }
    Ok(())
}

/// Iterator over the Ptolemy diagrams found by the subset scan, in mask
/// order (which is not the structured enumeration order).
pub struct BruteForce {
    table: CrossTable,
    next_mask: u64,
    end: u64,
}

impl Iterator for BruteForce {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.table.is_ptolemy_mask(mask) {
                return Some(self.table.decode(mask));
            }
        }
        None
    }
}

/// Scans all diagonal subsets of an `n_vertices`-gon, up to the default
/// vertex limit of [`BRUTE_FORCE_DEFAULT_LIMIT`].
pub fn brute_force_ptolemy(n_vertices: u32) -> Result<BruteForce> {
    brute_force_ptolemy_with_limit(n_vertices, BRUTE_FORCE_DEFAULT_LIMIT)
}

/// Subset scan with an explicit vertex limit, capped at
/// [`BRUTE_FORCE_HARD_CAP`].
pub fn brute_force_ptolemy_with_limit(n_vertices: u32, limit: u32) -> Result<BruteForce> {
    check_limits(n_vertices, limit)?;
    let table = CrossTable::new(n_vertices);
    let end = 1u64 << table.diagonals.len();
    Ok(BruteForce {
        table,
        next_mask: 0,
        end,
    })
}

/// Region-class tally over the brute-force scan.
pub fn brute_force_tally(
    n_vertices: u32,
    limit: u32,
) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    #[cfg(feature = "parallel")]
    {
        brute_force_tally_par(n_vertices, limit)
    }
    #[cfg(not(feature = "parallel"))]
    {
        brute_force_tally_seq(n_vertices, limit)
    }
}

pub fn brute_force_tally_seq(
    n_vertices: u32,
    limit: u32,
) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    let mut tally = BTreeMap::new();
    for diagram in brute_force_ptolemy_with_limit(n_vertices, limit)? {
        let class = diagram.stats().expect("scan keeps Ptolemy diagrams").class();
        *tally.entry(class).or_insert(0) += 1;
    }
    Ok(tally)
}

#[cfg(feature = "parallel")]
pub fn brute_force_tally_par(
    n_vertices: u32,
    limit: u32,
) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    use rayon::prelude::*;

    check_limits(n_vertices, limit)?;
    let table = CrossTable::new(n_vertices);
    let end = 1u64 << table.diagonals.len();
    let tally = (0..end)
        .into_par_iter()
        .fold(BTreeMap::new, |mut local: BTreeMap<(u32, u32, u32), u64>, mask| {
            if table.is_ptolemy_mask(mask) {
                let class = table
                    .decode(mask)
                    .stats()
                    .expect("scan keeps Ptolemy diagrams")
                    .class();
                *local.entry(class).or_insert(0) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, merge_tallies);
    Ok(tally)
}

#[cfg(feature = "parallel")]
fn merge_tallies(
    mut into: BTreeMap<(u32, u32, u32), u64>,
    from: BTreeMap<(u32, u32, u32), u64>,
) -> BTreeMap<(u32, u32, u32), u64> {
    for (class, count) in from {
        *into.entry(class).or_insert(0) += count;
    }
    into
}
