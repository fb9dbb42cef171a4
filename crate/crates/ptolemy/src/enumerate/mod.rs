//! Generators for Ptolemy diagram sets: the full family, the rotation- and
//! perpendicular-fixed subfamilies, and a brute-force subset scan kept as an
//! independent oracle.  Tally helpers aggregate any of these by region
//! class, in parallel when the `parallel` feature is on.

mod brute;
mod invariant;
mod stream;

use std::collections::BTreeMap;

pub use brute::{
    brute_force_ptolemy, brute_force_ptolemy_with_limit, brute_force_tally, brute_force_tally_seq,
    BruteForce, BRUTE_FORCE_DEFAULT_LIMIT, BRUTE_FORCE_HARD_CAP,
};
#[cfg(feature = "parallel")]
pub use brute::brute_force_tally_par;
pub use invariant::{
    enumerate_invariant, enumerate_perp_invariant, InvariantStream, PerpInvariantStream,
};
pub use stream::{base_partitions, enumerate_all, BasePartition, DiagramStream};

use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// Class and symmetry constraints for selecting diagrams out of a stream.
///
/// Unset fields match everything.  At most one of `rotation_order` and
/// `perp_power` may be set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub triangles: Option<u32>,
    pub cliques: Option<u32>,
    pub empty_cells: Option<u32>,
    pub rotation_order: Option<u32>,
    pub perp_power: Option<u32>,
}

impl EnumFilter {
    pub fn validate(&self, n_vertices: u32) -> Result<()> {
        if let (Some(_), Some(_)) = (self.rotation_order, self.perp_power) {
            return Err(Error::InvalidQuery(
                "rotation order and perpendicular power are mutually exclusive".into(),
            ));
        }
        if let Some(order) = self.rotation_order {
            if order < 2 || !n_vertices.is_multiple_of(order) {
                return Err(Error::InvalidRotationOrder { order, n_vertices });
            }
        }
        if let Some(power) = self.perp_power {
            if power < 1 {
                return Err(Error::InvalidPerpPower);
            }
        }
        Ok(())
    }

    pub fn matches(&self, diagram: &Diagram) -> Result<bool> {
        let stats = diagram.stats()?;
        if self.triangles.is_some_and(|t| stats.triangles != t)
            || self.cliques.is_some_and(|c| stats.cliques != c)
            || self.empty_cells.is_some_and(|e| stats.empty_cells != e)
        {
            return Ok(false);
        }
        if let Some(order) = self.rotation_order {
            let steps = diagram.n_vertices() / order;
            if !diagram.is_fixed_by_rotation(steps as i64) {
                return Ok(false);
            }
        }
        if let Some(power) = self.perp_power {
            if diagram.perp_iterated(power) != *diagram {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Region-class tally of all diagrams of the `(n + 1)`-gon.
pub fn stats_tally(n: u32) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    stats_tally_where(n, |_| true)
}

/// Region-class tally over the diagrams selected by `keep`.
pub fn stats_tally_where<F>(n: u32, keep: F) -> Result<BTreeMap<(u32, u32, u32), u64>>
where
    F: Fn(&Diagram) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        stats_tally_where_par(n, keep)
    }
    #[cfg(not(feature = "parallel"))]
    {
        stats_tally_where_seq(n, keep)
    }
}

pub fn stats_tally_where_seq<F>(n: u32, keep: F) -> Result<BTreeMap<(u32, u32, u32), u64>>
where
    F: Fn(&Diagram) -> bool,
{
    let mut tally = BTreeMap::new();
    for diagram in enumerate_all(n)? {
        if keep(&diagram) {
            let class = class_of(&diagram);
            *tally.entry(class).or_insert(0) += 1;
        }
    }
    Ok(tally)
}

/// Parallel tally: the base-region partitions are independent subtrees, so
/// they are farmed out as rayon work items.
#[cfg(feature = "parallel")]
pub fn stats_tally_where_par<F>(n: u32, keep: F) -> Result<BTreeMap<(u32, u32, u32), u64>>
where
    F: Fn(&Diagram) -> bool + Sync,
{
    use rayon::prelude::*;

    let parts = base_partitions(n)?;
    let tally = parts
        .par_iter()
        .map(|part| {
            let mut local: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
            for diagram in part.diagrams() {
                if keep(&diagram) {
                    *local.entry(class_of(&diagram)).or_insert(0) += 1;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut into, from| {
            for (class, count) in from {
                *into.entry(class).or_insert(0) += count;
            }
            into
        });
    Ok(tally)
}

fn class_of(diagram: &Diagram) -> (u32, u32, u32) {
    diagram
        .stats()
        .expect("generated diagrams are Ptolemy")
        .class()
}

/// Tally of the diagrams fixed by a rotation of the given order, produced by
/// the direct generator rather than by filtering.
pub fn invariant_tally(n: u32, order: u32) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    let mut tally = BTreeMap::new();
    for diagram in enumerate_invariant(n, order)? {
        *tally.entry(class_of(&diagram)).or_insert(0) += 1;
    }
    Ok(tally)
}

/// Tally of the diagrams fixed by the `power`-th perpendicular iterate.
pub fn perp_invariant_tally(n: u32, power: u32) -> Result<BTreeMap<(u32, u32, u32), u64>> {
    let mut tally = BTreeMap::new();
    for diagram in enumerate_perp_invariant(n, power)? {
        *tally.entry(class_of(&diagram)).or_insert(0) += 1;
    }
    Ok(tally)
}
