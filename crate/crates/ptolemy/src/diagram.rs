//! Diagrams of pairwise distinct proper diagonals on a convex polygon.
//!
//! A polygon with `n` vertices is labeled `0..n` counterclockwise; the edge
//! from `n-1` back to `0` is the distinguished base edge. A *Ptolemy diagram*
//! is a diagonal set `A` with `A = nc(nc(A))`, where [`Diagram::nc`] collects
//! every proper diagonal that crosses no element of `A`. Equivalently, the
//! non-crossing diagonals of `A` dissect the polygon into regions, and every
//! region with at least four vertices carries either all of its internal
//! diagonals (a clique) or none of them (an empty cell).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered pair of distinct polygon vertices, stored with `a < b`.
///
/// Whether the pair is a *proper* diagonal (endpoints non-adjacent on the
/// cycle) depends on the polygon size; see [`Diagonal::is_proper_for`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: u32,
    b: u32,
}

impl Diagonal {
    /// Normalizes the endpoint order. Fails only if the endpoints coincide.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateDiagonal { a });
        }
        Ok(Self {
            a: a.min(b),
            b: a.max(b),
        })
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    /// True iff the endpoints are in range and non-adjacent on the cycle
    /// `0, 1, ..., n_vertices-1, 0`.
    pub fn is_proper_for(&self, n_vertices: u32) -> bool {
        self.b < n_vertices && self.b - self.a != 1 && self.b - self.a != n_vertices - 1
    }

    /// Strict crossing in the interior of the polygon. Diagonals sharing an
    /// endpoint never cross; otherwise they cross iff exactly one endpoint of
    /// `other` lies strictly between the endpoints of `self` on the cycle.
    ///
    /// Both diagonals must belong to the same polygon; the test itself only
    /// reads vertex labels.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b) = (self.a, self.b);
        let (c, d) = (other.a, other.b);
        if a == c || a == d || b == c || b == d {
            return false;
        }
        (a < c && c < b) != (a < d && d < b)
    }

    /// Endpoints known to be distinct.
    pub(crate) fn from_parts(a: u32, b: u32) -> Diagonal {
        debug_assert_ne!(a, b);
        Diagonal {
            a: a.min(b),
            b: a.max(b),
        }
    }

    fn rotated(&self, shift: u32, n_vertices: u32) -> Diagonal {
        let a = (self.a + shift) % n_vertices;
        let b = (self.b + shift) % n_vertices;
        Diagonal {
            a: a.min(b),
            b: a.max(b),
        }
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// All proper diagonals of a polygon, in lexicographic endpoint order.
pub fn all_proper_diagonals(n_vertices: u32) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for a in 0..n_vertices {
        for b in a + 2..n_vertices {
            if !(a == 0 && b == n_vertices - 1) {
                out.push(Diagonal { a, b });
            }
        }
    }
    out
}

/// How a region of the dissection is filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionKind {
    Triangle,
    /// Four or more vertices, all internal diagonals present.
    Clique,
    /// Four or more vertices, no internal diagonal present.
    EmptyCell,
}

/// One region of the dissection cut out by the non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    vertices: Vec<u32>,
    kind: RegionKind,
}

impl Region {
    /// The region's vertices in cyclic order (ascending polygon labels).
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }
}

/// Region tally of a Ptolemy diagram on a polygon with `n + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionStats {
    /// One less than the number of polygon vertices.
    pub n: u32,
    pub triangles: u32,
    pub cliques: u32,
    pub empty_cells: u32,
}

impl RegionStats {
    /// The `(triangles, cliques, empty_cells)` class key.
    pub fn class(&self) -> (u32, u32, u32) {
        (self.triangles, self.cliques, self.empty_cells)
    }
}

/// A set of pairwise distinct proper diagonals on a convex polygon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct Diagram {
    n_vertices: u32,
    // sorted, no duplicates
    diagonals: Vec<Diagonal>,
}

impl Diagram {
    pub fn new<I>(n_vertices: u32, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = Diagonal>,
    {
        if n_vertices < 2 {
            return Err(Error::PolygonTooSmall(n_vertices));
        }
        let mut diagonals: Vec<Diagonal> = diagonals.into_iter().collect();
        diagonals.sort();
        for pair in diagonals.windows(2) {
            if pair[0] == pair[1] {
                let (a, b) = pair[0].endpoints();
                return Err(Error::DuplicateDiagonal { a, b });
            }
        }
        for d in &diagonals {
            if !d.is_proper_for(n_vertices) {
                let (a, b) = d.endpoints();
                return Err(Error::NotAProperDiagonal { a, b, n_vertices });
            }
        }
        Ok(Self {
            n_vertices,
            diagonals,
        })
    }

    /// The diagram on the 2-gon. It has no proper diagonals and no regions.
    pub fn degenerate() -> Self {
        Self {
            n_vertices: 2,
            diagonals: Vec::new(),
        }
    }

    pub fn empty(n_vertices: u32) -> Result<Self> {
        Self::new(n_vertices, [])
    }

    /// Builds from diagonals already sorted, deduplicated and proper.
    pub(crate) fn from_sorted_unchecked(n_vertices: u32, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(diagonals.iter().all(|d| d.is_proper_for(n_vertices)));
        Self {
            n_vertices,
            diagonals,
        }
    }

    pub fn n_vertices(&self) -> u32 {
        self.n_vertices
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    /// Every proper diagonal of the polygon that crosses no element of the
    /// diagram. Elements of the diagram itself are retained exactly when they
    /// cross no other element.
    pub fn nc(&self) -> Diagram {
        let keep: Vec<Diagonal> = all_proper_diagonals(self.n_vertices)
            .into_iter()
            .filter(|d| self.diagonals.iter().all(|e| !d.crosses(e)))
            .collect();
        Diagram::from_sorted_unchecked(self.n_vertices, keep)
    }

    /// A diagram is Ptolemy iff it is fixed by applying [`Diagram::nc`] twice.
    pub fn is_ptolemy(&self) -> bool {
        *self == self.nc().nc()
    }

    /// The elements of the diagram crossing no other element. These dissect
    /// the polygon into the regions returned by [`Diagram::regions`].
    pub fn skeleton(&self) -> Diagram {
        let keep: Vec<Diagonal> = self
            .diagonals
            .iter()
            .filter(|d| self.diagonals.iter().all(|e| !d.crosses(e)))
            .copied()
            .collect();
        Diagram::from_sorted_unchecked(self.n_vertices, keep)
    }

    /// The regions of the skeleton dissection, each classified as triangle,
    /// clique or empty cell. Fails on diagrams that are not Ptolemy: a region
    /// holding some but not all of its internal diagonals is reported as
    /// [`Error::MixedRegion`]. The 2-gon has no regions.
    pub fn regions(&self) -> Result<Vec<Region>> {
        let n = self.n_vertices;
        if n == 2 {
            return Ok(Vec::new());
        }
        let skeleton = self.skeleton();

        // chord partners per vertex, ascending
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n as usize];
        for d in skeleton.diagonals() {
            let (a, b) = d.endpoints();
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }

        let mut regions = Vec::new();
        let mut accounted = skeleton.diagonals().len();
        // each stack entry is a sub-polygon on the vertex interval [lo, hi],
        // closed off by the chord (or base edge) lo-hi
        let mut stack = vec![(0u32, n - 1)];
        while let Some((lo, hi)) = stack.pop() {
            let mut verts = vec![lo];
            let mut cur = lo;
            while cur < hi {
                // the region edge at cur is the chord jumping as far as the
                // interval allows; the closing chord lo-hi itself is the edge
                // we entered through
                let mut next = cur + 1;
                for &w in adj[cur as usize].iter().rev() {
                    if w <= cur {
                        break;
                    }
                    if w <= hi && !(cur == lo && w == hi) {
                        next = next.max(w);
                        break;
                    }
                }
                verts.push(next);
                cur = next;
            }
            for pair in verts.windows(2) {
                if pair[1] - pair[0] >= 2 {
                    stack.push((pair[0], pair[1]));
                }
            }
            regions.push(self.classify_region(verts, &mut accounted)?);
        }

        if accounted != self.diagonals.len() {
            return Err(Error::UnaccountedDiagonals);
        }
        regions.sort_by(|r, s| r.vertices.cmp(&s.vertices));
        Ok(regions)
    }

    fn classify_region(&self, vertices: Vec<u32>, accounted: &mut usize) -> Result<Region> {
        let s = vertices.len();
        debug_assert!(s >= 3);
        if s == 3 {
            return Ok(Region {
                vertices,
                kind: RegionKind::Triangle,
            });
        }
        let mut total = 0usize;
        let mut present = 0usize;
        for i in 0..s {
            for j in i + 2..s {
                if i == 0 && j == s - 1 {
                    continue;
                }
                total += 1;
                let d = Diagonal {
                    a: vertices[i],
                    b: vertices[j],
                };
                if self.contains(&d) {
                    present += 1;
                }
            }
        }
        let kind = if present == total {
            *accounted += total;
            RegionKind::Clique
        } else if present == 0 {
            RegionKind::EmptyCell
        } else {
            return Err(Error::MixedRegion {
                region: vertices,
                present,
                total,
            });
        };
        Ok(Region { vertices, kind })
    }

    /// Region tally. The 2-gon counts as `n = 1` with no regions.
    pub fn stats(&self) -> Result<RegionStats> {
        let mut stats = RegionStats {
            n: self.n_vertices - 1,
            triangles: 0,
            cliques: 0,
            empty_cells: 0,
        };
        for region in self.regions()? {
            match region.kind {
                RegionKind::Triangle => stats.triangles += 1,
                RegionKind::Clique => stats.cliques += 1,
                RegionKind::EmptyCell => stats.empty_cells += 1,
            }
        }
        Ok(stats)
    }

    /// Relabels every vertex `i` to `i + steps` modulo the vertex count.
    /// Negative steps rotate the other way.
    pub fn rotate(&self, steps: i64) -> Diagram {
        let n = self.n_vertices;
        let shift = steps.rem_euclid(n as i64) as u32;
        let mut diagonals: Vec<Diagonal> = self
            .diagonals
            .iter()
            .map(|d| d.rotated(shift, n))
            .collect();
        diagonals.sort_unstable();
        Diagram::from_sorted_unchecked(n, diagonals)
    }

    pub fn is_fixed_by_rotation(&self, steps: i64) -> bool {
        *self == self.rotate(steps)
    }

    /// The perpendicular diagram: [`Diagram::nc`] followed by one rotation
    /// step. On Ptolemy diagrams this is a bijection whose square is rotation
    /// by two steps.
    pub fn perp(&self) -> Diagram {
        self.nc().rotate(1)
    }

    /// `perp` applied `times` times, literally.
    pub fn perp_iterated(&self, times: u32) -> Diagram {
        let mut out = self.clone();
        for _ in 0..times {
            out = out.perp();
        }
        out
    }

    /// Canonical text form `<n_vertices>:<a-b>,<c-d>,...` with the diagonals
    /// in sorted order, e.g. `6:0-3,1-3` or `2:` for the degenerate diagram.
    pub fn canonical_encoding(&self) -> String {
        let body: Vec<String> = self.diagonals.iter().map(|d| d.to_string()).collect();
        format!("{}:{}", self.n_vertices, body.join(","))
    }

    /// Parses the [`Diagram::canonical_encoding`] format.
    pub fn parse(text: &str) -> Result<Diagram> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {text:?}")))?;
        let n_vertices: u32 = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {head:?}")))?;
        let mut diagonals = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (x, y) = part
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad diagonal {part:?}")))?;
            let a: u32 = x
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {x:?}")))?;
            let b: u32 = y
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {y:?}")))?;
            diagonals.push(Diagonal::new(a, b)?);
        }
        Diagram::new(n_vertices, diagonals)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_encoding())
    }
}

/// JSON shape: `{"n": 6, "diagonals": [[0, 3], [1, 3]]}`.
#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: u32,
    diagonals: Vec<[u32; 2]>,
}

impl From<Diagram> for DiagramRepr {
    fn from(d: Diagram) -> Self {
        DiagramRepr {
            n: d.n_vertices,
            diagonals: d
                .diagonals
                .iter()
                .map(|d| {
                    let (a, b) = d.endpoints();
                    [a, b]
                })
                .collect(),
        }
    }
}

impl TryFrom<DiagramRepr> for Diagram {
    type Error = Error;

    fn try_from(repr: DiagramRepr) -> Result<Self> {
        let mut diagonals = Vec::with_capacity(repr.diagonals.len());
        for [a, b] in repr.diagonals {
            diagonals.push(Diagonal::new(a, b)?);
        }
        Diagram::new(repr.n, diagonals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u32, b: u32) -> Diagonal {
        Diagonal::new(a, b).unwrap()
    }

    fn hexagon(pairs: &[(u32, u32)]) -> Diagram {
        Diagram::new(6, pairs.iter().map(|&(a, b)| d(a, b))).unwrap()
    }

    #[test]
    fn crossing_is_strict_interleaving() {
        assert!(d(0, 2).crosses(&d(1, 4)));
        assert!(d(1, 4).crosses(&d(0, 2)));
        // shared endpoint
        assert!(!d(0, 2).crosses(&d(2, 4)));
        assert!(!d(1, 4).crosses(&d(2, 4)));
        // nested
        assert!(!d(1, 4).crosses(&d(2, 3)));
        // disjoint side by side
        assert!(!d(0, 2).crosses(&d(3, 5)));
        assert!(!d(0, 2).crosses(&d(0, 2)));
    }

    #[test]
    fn proper_diagonal_excludes_polygon_edges() {
        assert!(!d(0, 1).is_proper_for(6));
        assert!(!d(0, 5).is_proper_for(6));
        assert!(d(0, 2).is_proper_for(6));
        assert!(d(0, 4).is_proper_for(6));
        assert!(!d(0, 6).is_proper_for(6));
        assert_eq!(all_proper_diagonals(4), vec![d(0, 2), d(1, 3)]);
        assert!(all_proper_diagonals(3).is_empty());
        assert!(all_proper_diagonals(2).is_empty());
    }

    #[test]
    fn diagram_construction_validates() {
        assert!(Diagram::new(1, []).is_err());
        assert!(Diagram::new(6, [d(0, 1)]).is_err());
        assert!(Diagram::new(6, [d(0, 5)]).is_err());
        assert!(Diagram::new(6, [d(0, 3), d(3, 0)]).is_err());
        assert!(Diagonal::new(2, 2).is_err());
        assert!(Diagram::new(6, [d(0, 3), d(1, 4)]).is_ok());
    }

    #[test]
    fn degenerate_diagram_is_ptolemy_with_no_regions() {
        let deg = Diagram::degenerate();
        assert!(deg.is_ptolemy());
        assert!(deg.regions().unwrap().is_empty());
        assert_eq!(
            deg.stats().unwrap(),
            RegionStats {
                n: 1,
                triangles: 0,
                cliques: 0,
                empty_cells: 0
            }
        );
        assert_eq!(deg.canonical_encoding(), "2:");
    }

    #[test]
    fn triangle_has_one_region() {
        let t = Diagram::empty(3).unwrap();
        assert!(t.is_ptolemy());
        let stats = t.stats().unwrap();
        assert_eq!((stats.n, stats.class()), (2, (1, 0, 0)));
    }

    #[test]
    fn nc_of_single_hexagon_diameter() {
        let got = hexagon(&[(0, 3)]).nc();
        let want = hexagon(&[(0, 3), (0, 2), (1, 3), (3, 5), (0, 4)]);
        assert_eq!(got, want);
    }

    #[test]
    fn square_ptolemy_census() {
        let all = [
            (Diagram::empty(4).unwrap(), (0, 0, 1)),
            (Diagram::new(4, [d(0, 2)]).unwrap(), (2, 0, 0)),
            (Diagram::new(4, [d(1, 3)]).unwrap(), (2, 0, 0)),
            (Diagram::new(4, [d(0, 2), d(1, 3)]).unwrap(), (0, 1, 0)),
        ];
        for (diagram, class) in all {
            assert!(diagram.is_ptolemy());
            assert_eq!(diagram.stats().unwrap().class(), class);
        }
    }

    #[test]
    fn fan_triangulation_regions() {
        let a = hexagon(&[(0, 3), (1, 3), (3, 5)]);
        assert!(a.is_ptolemy());
        let regions = a.regions().unwrap();
        let verts: Vec<&[u32]> = regions.iter().map(|r| r.vertices()).collect();
        assert_eq!(
            verts,
            vec![&[0, 1, 3][..], &[0, 3, 5], &[1, 2, 3], &[3, 4, 5]]
        );
        assert!(regions.iter().all(|r| r.kind() == RegionKind::Triangle));
        assert_eq!(a.stats().unwrap().class(), (4, 0, 0));
    }

    #[test]
    fn diameter_splits_hexagon_into_empty_cells() {
        let a = hexagon(&[(0, 3)]);
        assert!(a.is_ptolemy());
        assert_eq!(a.stats().unwrap().class(), (0, 0, 2));
    }

    #[test]
    fn full_clique_is_one_region() {
        let diagonals = all_proper_diagonals(6);
        let a = Diagram::new(6, diagonals).unwrap();
        assert!(a.is_ptolemy());
        assert_eq!(a.stats().unwrap().class(), (0, 1, 0));
        assert!(a.skeleton().diagonals().is_empty());
    }

    #[test]
    fn crossing_pair_is_not_ptolemy() {
        let a = hexagon(&[(0, 3), (1, 4)]);
        assert!(!a.is_ptolemy());
        assert!(matches!(a.regions(), Err(Error::MixedRegion { .. })));
        assert!(a.stats().is_err());
    }

    #[test]
    fn skeleton_keeps_only_crossing_free_elements() {
        let a = hexagon(&[(0, 2), (0, 3), (2, 5)]);
        assert_eq!(a.skeleton(), hexagon(&[(0, 2)]));
    }

    #[test]
    fn rotation_wraps_and_accepts_negative_steps() {
        let a = hexagon(&[(0, 3), (1, 3)]);
        assert_eq!(a.rotate(6), a);
        assert_eq!(a.rotate(-1), a.rotate(5));
        assert_eq!(a.rotate(2), hexagon(&[(2, 5), (3, 5)]));
        assert_eq!(a.rotate(7).rotate(-7), a);
    }

    #[test]
    fn stats_are_rotation_invariant() {
        let a = hexagon(&[(0, 2), (2, 5)]);
        let base = a.stats().unwrap().class();
        for steps in 0..6 {
            assert_eq!(a.rotate(steps).stats().unwrap().class(), base);
        }
    }

    #[test]
    fn perp_of_empty_hexagon_is_full_clique() {
        let empty = Diagram::empty(6).unwrap();
        let clique = Diagram::new(6, all_proper_diagonals(6)).unwrap();
        assert_eq!(empty.perp(), clique);
        assert_eq!(clique.perp(), empty.rotate(1));
    }

    #[test]
    fn perp_squared_is_double_rotation() {
        for a in [
            hexagon(&[(0, 3)]),
            hexagon(&[(0, 2), (2, 4), (0, 4)]),
            Diagram::empty(6).unwrap(),
        ] {
            assert!(a.is_ptolemy());
            assert_eq!(a.perp_iterated(2), a.rotate(2));
        }
    }

    #[test]
    fn encoding_round_trips() {
        let a = hexagon(&[(0, 3), (1, 3)]);
        assert_eq!(a.canonical_encoding(), "6:0-3,1-3");
        assert_eq!(Diagram::parse("6:0-3,1-3").unwrap(), a);
        assert_eq!(Diagram::parse("2:").unwrap(), Diagram::degenerate());
        assert!(Diagram::parse("6").is_err());
        assert!(Diagram::parse("6:0").is_err());
        assert!(Diagram::parse("6:0-1").is_err());
        assert!(Diagram::parse("x:0-2").is_err());
    }

    #[test]
    fn json_round_trips() {
        let a = hexagon(&[(0, 3), (1, 3)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"n":6,"diagonals":[[0,3],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), a);
        assert!(serde_json::from_str::<Diagram>(r#"{"n":6,"diagonals":[[0,1]]}"#).is_err());
    }

    #[test]
    fn nc_is_antitone() {
        let small = hexagon(&[(0, 3)]);
        let big = hexagon(&[(0, 3), (1, 3)]);
        let nc_small = small.nc();
        for d in big.nc().diagonals() {
            assert!(nc_small.contains(d));
        }
    }
}
