//! Direct generator for the diagrams fixed by a rotation of given order.
//!
//! A diagram fixed by the rotation through `n / d` vertices (order `d >= 2`)
//! has a distinguished central piece containing the polygon's centre: a
//! diameter (only for `d = 2`), a central triangle (only for `d = 3`), or a
//! region with `s >= 4` vertices, filled or empty.  The central vertex set is
//! a union of rotation orbits, so `d` divides `s`, and the `s / d` central
//! vertices falling in one sector of length `n / d` cut that sector into gaps
//! `(g_1, ..., g_q)`, a composition of `n / d`.  Each gap carries an
//! arbitrary Ptolemy diagram of a `(g_j + 1)`-gon, repeated around by the
//! rotation.  Finally the pattern is anchored by the position `v` of vertex
//! `0` inside the first gap.  The map from parameter tuples
//! `(s, filling, composition, sub-diagrams, v)` to fixed diagrams is a
//! bijection, so the stream below emits every fixed diagram exactly once.

use super::stream::{enumerate_all, DiagramStream};
use crate::diagram::{Diagonal, Diagram};
use crate::error::{Error, Result};

/// Compositions of `r` into `q` positive parts, cut points ascending.
struct Compositions {
    r: u32,
    q: u32,
    cuts: Vec<u32>,
    started: bool,
}

impl Compositions {
    fn new(r: u32, q: u32) -> Self {
        debug_assert!(q >= 1 && q <= r);
        Compositions {
            r,
            q,
            cuts: (1..q).collect(),
            started: false,
        }
    }

    fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::with_capacity(self.q as usize);
        let mut prev = 0;
        for &c in &self.cuts {
            parts.push(c - prev);
            prev = c;
        }
        parts.push(self.r - prev);
        parts
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if !self.started {
            self.started = true;
            return Some(self.parts());
        }
        let k = self.cuts.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.cuts[i] < self.r - (k - i) as u32 {
                self.cuts[i] += 1;
                for j in i + 1..k {
                    self.cuts[j] = self.cuts[j - 1] + 1;
                }
                return Some(self.parts());
            }
        }
        None
    }
}

fn fill_options(size: u32) -> Vec<Option<bool>> {
    if size <= 3 {
        vec![None]
    } else {
        vec![Some(true), Some(false)]
    }
}

struct Machine {
    n_vertices: u32,
    order: u32,
    sector: u32,
    sizes: Vec<u32>,
    size_idx: usize,
    fills: Vec<Option<bool>>,
    fill_idx: usize,
    comps: Compositions,
    comp: Vec<u32>,
    factors: Vec<DiagramStream>,
    subs: Vec<Diagram>,
    point: u32,
    live: bool,
}

impl Machine {
    fn new(n_vertices: u32, order: u32) -> Self {
        let sector = n_vertices / order;
        let sizes: Vec<u32> = (1..=sector).map(|t| t * order).collect();
        let size = sizes[0];
        let fills = fill_options(size);
        let mut comps = Compositions::new(sector, size / order);
        let comp = comps.next().unwrap();
        let mut machine = Machine {
            n_vertices,
            order,
            sector,
            sizes,
            size_idx: 0,
            fills,
            fill_idx: 0,
            comps,
            comp,
            factors: Vec::new(),
            subs: Vec::new(),
            point: 1,
            live: true,
        };
        machine.reset_tuple();
        machine
    }

    fn sub_stream(gap: u32) -> DiagramStream {
        enumerate_all(gap).expect("gap is positive")
    }

    fn reset_tuple(&mut self) {
        self.factors = self.comp.iter().map(|&g| Machine::sub_stream(g)).collect();
        self.subs = self
            .factors
            .iter_mut()
            .map(|f| f.next().expect("diagram set is nonempty"))
            .collect();
    }

    /// Advances the rightmost sub-diagram factor, resetting those after it.
    fn advance_tuple(&mut self) -> bool {
        for idx in (0..self.comp.len()).rev() {
            if let Some(sub) = self.factors[idx].next() {
                self.subs[idx] = sub;
                for j in idx + 1..self.comp.len() {
                    self.factors[j] = Machine::sub_stream(self.comp[j]);
                    self.subs[j] = self.factors[j].next().expect("diagram set is nonempty");
                }
                return true;
            }
        }
        false
    }

    /// Moves to the next parameter tuple: point, then sub-diagrams, then
    /// composition, then filling, then central size.
    fn advance(&mut self) -> bool {
        if self.point < self.comp[0] {
            self.point += 1;
            return true;
        }
        self.point = 1;
        if self.advance_tuple() {
            return true;
        }
        if let Some(comp) = self.comps.next() {
            self.comp = comp;
            self.reset_tuple();
            return true;
        }
        self.fill_idx += 1;
        if self.fill_idx >= self.fills.len() {
            self.size_idx += 1;
            if self.size_idx >= self.sizes.len() {
                return false;
            }
            self.fills = fill_options(self.sizes[self.size_idx]);
            self.fill_idx = 0;
        }
        self.comps = Compositions::new(self.sector, self.sizes[self.size_idx] / self.order);
        self.comp = self.comps.next().unwrap();
        self.reset_tuple();
        true
    }

    fn assemble(&self) -> Diagram {
        let n = self.n_vertices;
        let q = self.comp.len();
        let offset = n - self.point;
        let mut chords: Vec<Diagonal> = Vec::new();
        let mut centrals: Vec<u32> = Vec::with_capacity(self.order as usize * q);
        for copy in 0..self.order {
            let mut pos = offset + copy * self.sector;
            for j in 0..q {
                centrals.push(pos % n);
                for diag in self.subs[j].diagonals() {
                    let (u, w) = diag.endpoints();
                    chords.push(Diagonal::from_parts((pos + u) % n, (pos + w) % n));
                }
                pos += self.comp[j];
            }
        }
        centrals.sort_unstable();

        let size = self.sizes[self.size_idx];
        debug_assert_eq!(centrals.len() as u32, size);
        if size == 2 {
            chords.push(Diagonal::from_parts(centrals[0], centrals[1]));
        } else {
            let s = centrals.len();
            for i in 0..s {
                let (u, w, gap) = if i + 1 < s {
                    (centrals[i], centrals[i + 1], centrals[i + 1] - centrals[i])
                } else {
                    (centrals[s - 1], centrals[0], n - centrals[s - 1] + centrals[0])
                };
                if gap >= 2 {
                    chords.push(Diagonal::from_parts(u, w));
                }
            }
            if self.fills[self.fill_idx] == Some(true) {
                for i in 0..s {
                    for j in i + 2..s {
                        if i == 0 && j == s - 1 {
                            continue;
                        }
                        chords.push(Diagonal::from_parts(centrals[i], centrals[j]));
                    }
                }
            }
        }
        chords.sort_unstable();
        Diagram::from_sorted_unchecked(n, chords)
    }
}

enum Inner {
    Degenerate { pending: bool },
    Machine(Box<Machine>),
}

/// Lazy iterator over the diagrams fixed by a rotation of a given order.
pub struct InvariantStream {
    inner: Inner,
}

impl Iterator for InvariantStream {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        match &mut self.inner {
            Inner::Degenerate { pending } => {
                if *pending {
                    *pending = false;
                    Some(Diagram::degenerate())
                } else {
                    None
                }
            }
            Inner::Machine(machine) => {
                if !machine.live {
                    return None;
                }
                let out = machine.assemble();
                machine.live = machine.advance();
                Some(out)
            }
        }
    }
}

/// The diagrams of the `(n + 1)`-gon fixed by the rotation through
/// `(n + 1) / order` vertices, each exactly once.
///
/// `order` must divide `n + 1` and be at least 2.  Unlike filtering the full
/// enumeration, the cost is proportional to the fixed diagrams themselves.
pub fn enumerate_invariant(n: u32, order: u32) -> Result<InvariantStream> {
    if n < 1 {
        return Err(Error::PolygonTooSmall(n + 1));
    }
    let n_vertices = n + 1;
    if order < 2 || !n_vertices.is_multiple_of(order) {
        return Err(Error::InvalidRotationOrder { order, n_vertices });
    }
    if n_vertices == 2 {
        return Ok(InvariantStream {
            inner: Inner::Degenerate { pending: true },
        });
    }
    Ok(InvariantStream {
        inner: Inner::Machine(Box::new(Machine::new(n_vertices, order))),
    })
}

/// The diagrams of the `(n + 1)`-gon fixed by the `power`-th iterate of the
/// perpendicular map, by filtering the full enumeration.
pub struct PerpInvariantStream {
    all: DiagramStream,
    power: u32,
}

impl Iterator for PerpInvariantStream {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        let power = self.power;
        self.all.by_ref().find(|d| d.perp_iterated(power) == *d)
    }
}

pub fn enumerate_perp_invariant(n: u32, power: u32) -> Result<PerpInvariantStream> {
    if power < 1 {
        return Err(Error::InvalidPerpPower);
    }
    Ok(PerpInvariantStream {
        all: enumerate_all(n)?,
        power,
    })
}
