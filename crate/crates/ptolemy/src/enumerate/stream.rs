//! Depth-first generator over all Ptolemy diagrams of a polygon.
//!
//! Every Ptolemy diagram decomposes uniquely: the crossing-free elements
//! dissect the polygon into regions, each region with four or more vertices
//! is either a clique (all internal diagonals present) or an empty cell, and
//! the diagram is the union of the dissection with the clique internals.
//! Conversely any such dissection-plus-colouring yields a Ptolemy diagram,
//! so the generator walks exactly that tree of choices.
//!
//! The recursion is over intervals `[lo, hi]` of the vertex cycle, seeded
//! with `[0, n-1]` (the base edge read the other way around).  For each
//! interval the region glued onto the edge `{lo, hi}` is chosen: a triangle
//! `{lo, v, hi}`, or a larger region picked as a vertex subset, filled or
//! empty.  The region's boundary chords split the remainder into independent
//! sub-intervals, recursively resolved left to right.

use crate::diagram::{Diagonal, Diagram};
use crate::error::{Error, Result};

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: u32,
    indices: Vec<u32>,
    started: bool,
}

impl Combinations {
    fn new(n: u32, k: u32) -> Self {
        debug_assert!(k >= 1 && k <= n);
        Combinations {
            n,
            indices: (0..k).collect(),
            started: false,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if !self.started {
            self.started = true;
            return Some(self.indices.clone());
        }
        let k = self.indices.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.indices[i] < self.n - (k - i) as u32 {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                return Some(self.indices.clone());
            }
        }
        None
    }
}

/// One way to attach a base region to the edge `{lo, hi}` of an interval.
///
/// `middles` lists the region vertices strictly between `lo` and `hi`; one
/// middle vertex means a triangle, two or more a region coloured by `filled`.
#[derive(Clone, Debug)]
struct Choice {
    middles: Vec<u32>,
    filled: bool,
}

enum Stage {
    Triangle { v: u32 },
    Big { filled: bool, size: u32, combs: Combinations },
    Done,
}

/// Streams the choices for one interval: triangles by apex, then cliques by
/// size, then empty cells by size, subsets in lexicographic order throughout.
struct ChoiceIter {
    lo: u32,
    hi: u32,
    stage: Stage,
}

impl ChoiceIter {
    fn new(lo: u32, hi: u32) -> Self {
        debug_assert!(hi >= lo + 2);
        ChoiceIter {
            lo,
            hi,
            stage: Stage::Triangle { v: lo + 1 },
        }
    }

    /// Yields nothing; pins a stream to an externally applied choice.
    fn exhausted() -> Self {
        ChoiceIter {
            lo: 0,
            hi: 2,
            stage: Stage::Done,
        }
    }

    fn big_stage(&self, filled: bool, size: u32) -> Option<Stage> {
        if size > self.hi - self.lo + 1 {
            return None;
        }
        Some(Stage::Big {
            filled,
            size,
            combs: Combinations::new(self.hi - self.lo - 1, size - 2),
        })
    }
}

impl Iterator for ChoiceIter {
    type Item = Choice;

    fn next(&mut self) -> Option<Choice> {
        loop {
            match &mut self.stage {
                Stage::Triangle { v } => {
                    if *v < self.hi {
                        let middles = vec![*v];
                        *v += 1;
                        return Some(Choice {
                            middles,
                            filled: false,
                        });
                    }
                    self.stage = self.big_stage(true, 4).unwrap_or(Stage::Done);
                }
                Stage::Big {
                    filled,
                    size,
                    combs,
                } => {
                    let filled = *filled;
                    let size = *size;
                    if let Some(indices) = combs.next() {
                        let lo = self.lo;
                        return Some(Choice {
                            middles: indices.iter().map(|i| lo + 1 + i).collect(),
                            filled,
                        });
                    }
                    self.stage = match self.big_stage(filled, size + 1) {
                        Some(stage) => stage,
                        None if filled => self.big_stage(false, 4).unwrap_or(Stage::Done),
                        None => Stage::Done,
                    };
                }
                Stage::Done => return None,
            }
        }
    }
}

struct Frame {
    lo: u32,
    hi: u32,
    choices: ChoiceIter,
    chords_mark: usize,
    pending_mark: usize,
}

enum Phase {
    Fresh,
    Running,
    Finished,
}

/// Lazy iterator over every Ptolemy diagram of the polygon, in the fixed
/// depth-first order described at module level.  Each `next` call resumes
/// the suspended search.
pub struct DiagramStream {
    n_vertices: u32,
    chords: Vec<Diagonal>,
    pending: Vec<(u32, u32)>,
    frames: Vec<Frame>,
    phase: Phase,
    // Set when a seeded top-level choice awaits its first descent.
    primed: bool,
}

impl DiagramStream {
    fn new(n_vertices: u32) -> Self {
        DiagramStream {
            n_vertices,
            chords: Vec::new(),
            pending: Vec::new(),
            frames: Vec::new(),
            phase: Phase::Fresh,
            primed: false,
        }
    }

    /// Stream restricted to one top-level choice, already applied.
    fn seeded(n_vertices: u32, choice: &Choice) -> Self {
        let mut stream = DiagramStream::new(n_vertices);
        stream.phase = Phase::Running;
        stream.primed = true;
        stream.apply(0, n_vertices - 1, choice);
        stream.frames.push(Frame {
            lo: 0,
            hi: n_vertices - 1,
            choices: ChoiceIter::exhausted(),
            chords_mark: 0,
            pending_mark: 0,
        });
        stream
    }

    fn apply(&mut self, lo: u32, hi: u32, choice: &Choice) {
        let region_len = choice.middles.len() + 2;
        let mut verts = Vec::with_capacity(region_len);
        verts.push(lo);
        verts.extend_from_slice(&choice.middles);
        verts.push(hi);

        for w in verts.windows(2) {
            if w[1] - w[0] >= 2 {
                self.chords.push(Diagonal::from_parts(w[0], w[1]));
            }
        }
        if choice.filled {
            for i in 0..region_len {
                for j in i + 2..region_len {
                    if i == 0 && j == region_len - 1 {
                        continue;
                    }
                    self.chords.push(Diagonal::from_parts(verts[i], verts[j]));
                }
            }
        }
        // Push sub-intervals right to left so the leftmost resolves first.
        for w in verts.windows(2).rev() {
            if w[1] - w[0] >= 2 {
                self.pending.push((w[0], w[1]));
            }
        }
    }

    fn emit(&self) -> Diagram {
        let mut diagonals = self.chords.clone();
        diagonals.sort_unstable();
        Diagram::from_sorted_unchecked(self.n_vertices, diagonals)
    }

    /// Resolves all pending intervals with their first choice, then emits.
    fn descend(&mut self) -> Diagram {
        while let Some((lo, hi)) = self.pending.pop() {
            let mut choices = ChoiceIter::new(lo, hi);
            let chords_mark = self.chords.len();
            let pending_mark = self.pending.len();
            let choice = choices.next().expect("interval admits a triangle");
            self.apply(lo, hi, &choice);
            self.frames.push(Frame {
                lo,
                hi,
                choices,
                chords_mark,
                pending_mark,
            });
        }
        self.emit()
    }

    /// Rewinds to the deepest frame with an untried choice and applies it.
    fn backtrack(&mut self) -> bool {
        loop {
            let (next_choice, lo, hi, chords_mark, pending_mark) = match self.frames.last_mut() {
                None => return false,
                Some(frame) => (
                    frame.choices.next(),
                    frame.lo,
                    frame.hi,
                    frame.chords_mark,
                    frame.pending_mark,
                ),
            };
            self.chords.truncate(chords_mark);
            self.pending.truncate(pending_mark);
            match next_choice {
                Some(choice) => {
                    self.apply(lo, hi, &choice);
                    return true;
                }
                None => {
                    self.frames.pop();
                    self.pending.push((lo, hi));
                }
            }
        }
    }
}

impl Iterator for DiagramStream {
    type Item = Diagram;

    fn next(&mut self) -> Option<Diagram> {
        match self.phase {
            Phase::Finished => None,
            Phase::Fresh => {
                self.phase = Phase::Running;
                if self.n_vertices == 2 {
                    self.phase = Phase::Finished;
                    return Some(Diagram::degenerate());
                }
                self.pending.push((0, self.n_vertices - 1));
                Some(self.descend())
            }
            Phase::Running => {
                if self.primed {
                    self.primed = false;
                    return Some(self.descend());
                }
                if self.backtrack() {
                    Some(self.descend())
                } else {
                    self.phase = Phase::Finished;
                    None
                }
            }
        }
    }
}

/// All Ptolemy diagrams of the `(n + 1)`-gon, lazily.
///
/// The order is deterministic: triangles on the base edge by apex, then
/// filled regions by size, then empty regions, recursing leftmost-first with
/// the rightmost unresolved interval varying fastest.
pub fn enumerate_all(n: u32) -> Result<DiagramStream> {
    if n < 1 {
        return Err(Error::PolygonTooSmall(n + 1));
    }
    Ok(DiagramStream::new(n + 1))
}

/// The top-level split of the diagram set: one partition per choice of base
/// region on the edge `{n, 0}`.  Concatenating the partitions' streams in
/// order reproduces [`enumerate_all`] exactly; the partitions are mutually
/// disjoint, which makes them natural units for parallel traversal.
#[derive(Clone, Debug)]
pub enum BasePartition {
    /// The 2-gon admits only the diagram with no diagonals.
    Degenerate,
    /// Diagrams whose base region has the given vertices.
    Region {
        n_vertices: u32,
        vertices: Vec<u32>,
        filled: bool,
    },
}

impl BasePartition {
    /// Streams this partition's diagrams, in the global enumeration order.
    pub fn diagrams(&self) -> DiagramStream {
        match self {
            BasePartition::Degenerate => DiagramStream::new(2),
            BasePartition::Region {
                n_vertices,
                vertices,
                filled,
            } => {
                let choice = Choice {
                    middles: vertices[1..vertices.len() - 1].to_vec(),
                    filled: *filled,
                };
                DiagramStream::seeded(*n_vertices, &choice)
            }
        }
    }
}

/// The base-region partitions for the `(n + 1)`-gon, in enumeration order.
pub fn base_partitions(n: u32) -> Result<Vec<BasePartition>> {
    if n < 1 {
        return Err(Error::PolygonTooSmall(n + 1));
    }
    if n == 1 {
        return Ok(vec![BasePartition::Degenerate]);
    }
    let n_vertices = n + 1;
    let parts = ChoiceIter::new(0, n)
        .map(|choice| {
            let mut vertices = Vec::with_capacity(choice.middles.len() + 2);
            vertices.push(0);
            vertices.extend_from_slice(&choice.middles);
            vertices.push(n);
            BasePartition::Region {
                n_vertices,
                vertices,
                filled: choice.filled,
            }
        })
        .collect();
    Ok(parts)
}
