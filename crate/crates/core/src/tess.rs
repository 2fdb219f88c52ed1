//! Farey-type tessellations of the disc, stored as finite diffs against the
//! Farey tessellation.
//!
//! The modified region is remembered as the set of Farey triangles it covers
//! (the *footprint*); inside, an explicit triangulation is kept. Everything
//! outside is implicit Farey, so adjacency queries out there are O(1) mediant
//! arithmetic.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::TessError;
use crate::rational::{cyclic_less, is_farey_edge, mediant_of_lifts, ExtendedRational, Lift};

/// Unordered pair of distinct vertices, stored in the cyclic order from 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(ExtendedRational, ExtendedRational);

impl Edge {
    pub fn new(x: ExtendedRational, y: ExtendedRational) -> Self {
        assert!(x != y, "edge endpoints must be distinct");
        if x <= y {
            Edge(x, y)
        } else {
            Edge(y, x)
        }
    }

    pub fn endpoints(&self) -> (&ExtendedRational, &ExtendedRational) {
        (&self.0, &self.1)
    }

    pub fn contains(&self, v: &ExtendedRational) -> bool {
        &self.0 == v || &self.1 == v
    }

    pub fn other(&self, v: &ExtendedRational) -> &ExtendedRational {
        if &self.0 == v {
            &self.1
        } else {
            &self.0
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

/// Three distinct vertices, stored counterclockwise starting from the least
/// vertex in the cyclic order from 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle(ExtendedRational, ExtendedRational, ExtendedRational);

impl Triangle {
    pub fn new(a: ExtendedRational, b: ExtendedRational, c: ExtendedRational) -> Self {
        assert!(
            a != b && b != c && a != c,
            "triangle vertices must be distinct"
        );
        let mut v = [a, b, c];
        v.sort();
        let [a, b, c] = v;
        Triangle(a, b, c)
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(&self) -> [&ExtendedRational; 3] {
        [&self.0, &self.1, &self.2]
    }

    pub fn contains(&self, v: &ExtendedRational) -> bool {
        &self.0 == v || &self.1 == v || &self.2 == v
    }

    pub fn edges(&self) -> [Edge; 3] {
        [
            Edge::new(self.0.clone(), self.1.clone()),
            Edge::new(self.1.clone(), self.2.clone()),
            Edge::new(self.0.clone(), self.2.clone()),
        ]
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.contains(&e.0) && self.contains(&e.1)
    }

    /// The vertex opposite the given edge.
    pub fn apex(&self, e: &Edge) -> &ExtendedRational {
        self.vertices()
            .into_iter()
            .find(|v| !e.contains(v))
            .expect("edge must belong to the triangle")
    }

    /// The corner counterclockwise-next from `v`.
    pub fn next_corner_ccw(&self, v: &ExtendedRational) -> &ExtendedRational {
        if v == &self.0 {
            &self.1
        } else if v == &self.1 {
            &self.2
        } else {
            &self.0
        }
    }

    /// The corner clockwise-next from `v`.
    pub fn next_corner_cw(&self, v: &ExtendedRational) -> &ExtendedRational {
        if v == &self.0 {
            &self.2
        } else if v == &self.1 {
            &self.0
        } else {
            &self.1
        }
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0, self.1, self.2)
    }
}

/// Orientation side relative to an oriented edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn flipped(self) -> Self {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
}

/// The two Farey neighbours (triangle apexes) of a Farey edge, as
/// (right-of-`x`→`y`, left-of-`x`→`y`).
pub fn farey_apexes(
    x: &ExtendedRational,
    y: &ExtendedRational,
) -> (ExtendedRational, ExtendedRational) {
    debug_assert!(is_farey_edge(x, y));
    let (lx, ly) = (x.lift(), y.lift());
    let sum = mediant_of_lifts(&lx, &ly).expect("distinct points");
    let neg = Lift(-ly.0.clone(), -ly.1.clone());
    let diff = mediant_of_lifts(&lx, &neg).expect("distinct points");
    if cyclic_less(x, &sum, y) {
        (sum, diff)
    } else {
        (diff, sum)
    }
}

/// Whether the three vertices span a triangle of the Farey tessellation.
pub fn is_farey_triangle(t: &Triangle) -> bool {
    let [a, b, c] = t.vertices();
    is_farey_edge(a, b) && is_farey_edge(b, c) && is_farey_edge(a, c)
}

/// The middle vertex of a Farey triangle: the unique vertex that is the
/// mediant of the other two (equivalently, of maximal `|num| + den`).
pub fn farey_middle(t: &Triangle) -> ExtendedRational {
    debug_assert!(is_farey_triangle(t));
    let [a, b, c] = t.vertices();
    let (sa, sb, sc) = (a.size(), b.size(), c.size());
    if sa >= sb && sa >= sc {
        a.clone()
    } else if sb >= sa && sb >= sc {
        b.clone()
    } else {
        c.clone()
    }
}

/// The Farey triangle with the given middle vertex. `None` for 0 and ∞,
/// which are not middle vertices of any Farey triangle.
pub fn farey_triangle_with_middle(m: &ExtendedRational) -> Option<Triangle> {
    if m.is_zero() || m.is_infinity() {
        return None;
    }
    // Descend the Stern-Brocot tree toward m.
    let (mut a, mut b) = if m.is_negative() {
        (
            ExtendedRational::neg_infinity_lift(),
            ExtendedRational::zero().lift(),
        )
    } else {
        (
            ExtendedRational::zero().lift(),
            ExtendedRational::infinity().lift(),
        )
    };
    loop {
        let mid_lift = Lift(&a.0 + &b.0, &a.1 + &b.1);
        let mid = ExtendedRational::reduce(mid_lift.0.clone(), mid_lift.1.clone()).ok()?;
        if &mid == m {
            let pa = ExtendedRational::reduce(a.0, a.1).ok()?;
            let pb = ExtendedRational::reduce(b.0, b.1).ok()?;
            return Some(Triangle::new(pa, mid, pb));
        }
        let pa = ExtendedRational::reduce(a.0.clone(), a.1.clone()).ok()?;
        if cyclic_less(&pa, m, &mid) {
            b = mid_lift;
        } else {
            a = mid_lift;
        }
    }
}

/// A Farey-type tessellation: Farey outside the support polygon, an explicit
/// triangulation inside.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tessellation {
    /// Farey triangles covered by the support polygon; empty for the Farey
    /// tessellation itself. Minimal after normalization.
    footprint: BTreeSet<Triangle>,
    /// Triangulation of the support polygon.
    interior: BTreeSet<Triangle>,
    /// Edges strictly inside the support polygon (derived).
    interior_edges: BTreeSet<Edge>,
    /// Farey edges on the boundary of the support polygon (derived).
    support: BTreeSet<Edge>,
    /// Edge → incident interior triangles (derived).
    by_edge: BTreeMap<Edge, Vec<Triangle>>,
}

impl Tessellation {
    /// The Farey tessellation.
    pub fn standard_farey() -> Self {
        Self::assemble(BTreeSet::new(), BTreeSet::new()).expect("empty diff is valid")
    }

    /// Builds the caches from a footprint and an interior triangulation and
    /// normalizes: any footprint triangle reproduced verbatim by the interior
    /// is handed back to the implicit Farey exterior.
    pub fn assemble(
        footprint: BTreeSet<Triangle>,
        interior: BTreeSet<Triangle>,
    ) -> Result<Self, TessError> {
        let redundant: BTreeSet<Triangle> =
            footprint.intersection(&interior).cloned().collect();
        let footprint: BTreeSet<Triangle> =
            footprint.difference(&redundant).cloned().collect();
        let interior: BTreeSet<Triangle> =
            interior.difference(&redundant).cloned().collect();
        if footprint.len() != interior.len() {
            return Err(TessError::BadInterior);
        }
        let support = boundary_edges(&footprint);
        let mut vertices: BTreeSet<&ExtendedRational> = BTreeSet::new();
        for t in &footprint {
            vertices.extend(t.vertices());
        }
        let mut by_edge: BTreeMap<Edge, Vec<Triangle>> = BTreeMap::new();
        for t in &interior {
            if !t.vertices().into_iter().all(|v| vertices.contains(v)) {
                return Err(TessError::BadInterior);
            }
            for e in t.edges() {
                by_edge.entry(e).or_default().push(t.clone());
            }
        }
        let mut interior_edges = BTreeSet::new();
        for (e, ts) in &by_edge {
            match ts.len() {
                1 => {
                    if !support.contains(e) {
                        return Err(TessError::BadInterior);
                    }
                }
                2 => {
                    interior_edges.insert(e.clone());
                }
                _ => return Err(TessError::BadInterior),
            }
        }
        for e in &support {
            if !by_edge.contains_key(e) {
                return Err(TessError::BadInterior);
            }
        }
        Ok(Self {
            footprint,
            interior,
            interior_edges,
            support,
            by_edge,
        })
    }

    pub fn footprint(&self) -> &BTreeSet<Triangle> {
        &self.footprint
    }

    pub fn interior_triangles(&self) -> &BTreeSet<Triangle> {
        &self.interior
    }

    pub fn interior_edges(&self) -> &BTreeSet<Edge> {
        &self.interior_edges
    }

    pub fn support(&self) -> &BTreeSet<Edge> {
        &self.support
    }

    pub fn is_standard_farey(&self) -> bool {
        self.footprint.is_empty()
    }

    /// All triangles of the tessellation incident to a vertex of the support
    /// region, plus the interior ones; used by walkers that must enumerate
    /// "near the support".
    pub fn is_interior_triangle(&self, t: &Triangle) -> bool {
        self.interior.contains(t)
    }

    /// Whether a Farey triangle survives in this tessellation (lies outside
    /// the modified region).
    pub fn is_exterior_farey_triangle(&self, t: &Triangle) -> bool {
        is_farey_triangle(t) && !self.footprint.contains(t)
    }

    pub fn contains_edge(&self, x: &ExtendedRational, y: &ExtendedRational) -> bool {
        if x == y {
            return false;
        }
        let e = Edge::new(x.clone(), y.clone());
        if self.interior_edges.contains(&e) || self.support.contains(&e) {
            return true;
        }
        if !is_farey_edge(x, y) {
            return false;
        }
        // A Farey edge is gone iff both adjacent Farey triangles were
        // destroyed.
        let (r, l) = farey_apexes(x, y);
        let tr = Triangle::new(x.clone(), y.clone(), r);
        let tl = Triangle::new(x.clone(), y.clone(), l);
        !(self.footprint.contains(&tr) && self.footprint.contains(&tl))
    }

    /// The triangle adjacent to the oriented edge `from → to` on the given
    /// side.
    pub fn triangle_beside(
        &self,
        from: &ExtendedRational,
        to: &ExtendedRational,
        side: Side,
    ) -> Result<Triangle, TessError> {
        let apex = self.third_vertex(from, to, side)?;
        Ok(Triangle::new(from.clone(), to.clone(), apex))
    }

    /// The apex of the triangle adjacent to `from → to` on the given side:
    /// table lookup inside the polygon, mediant arithmetic outside.
    pub fn third_vertex(
        &self,
        from: &ExtendedRational,
        to: &ExtendedRational,
        side: Side,
    ) -> Result<ExtendedRational, TessError> {
        if !self.contains_edge(from, to) {
            return Err(TessError::MissingEdge(from.clone(), to.clone()));
        }
        let e = Edge::new(from.clone(), to.clone());
        if let Some(ts) = self.by_edge.get(&e) {
            for t in ts {
                let w = t.apex(&e);
                let on_right = cyclic_less(from, w, to);
                if (side == Side::Right) == on_right {
                    return Ok(w.clone());
                }
            }
            // Boundary edge: fall through, the other side is Farey.
        }
        let (r, l) = farey_apexes(from, to);
        let w = match side {
            Side::Right => r,
            Side::Left => l,
        };
        debug_assert!(
            !self
                .footprint
                .contains(&Triangle::new(from.clone(), to.clone(), w.clone())),
            "exterior query hit the footprint; caches are inconsistent"
        );
        Ok(w)
    }

    /// Flips the edge: replaces it by the other diagonal of the quadrilateral
    /// formed by its two adjacent triangles. Returns the new tessellation and
    /// the new edge. The support grows minimally when the edge lies in the
    /// Farey exterior and shrinks again wherever the result agrees with
    /// Farey.
    pub fn flip(&self, e: &Edge) -> Result<(Tessellation, Edge), TessError> {
        let (u, v) = e.endpoints();
        let wr = self.third_vertex(u, v, Side::Right)?;
        let wl = self.third_vertex(u, v, Side::Left)?;
        let mut footprint = self.footprint.clone();
        let mut interior = self.interior.clone();
        let old_r = Triangle::new(u.clone(), v.clone(), wr.clone());
        let old_l = Triangle::new(u.clone(), v.clone(), wl.clone());
        for t in [&old_r, &old_l] {
            if !interior.contains(t) {
                footprint.insert(t.clone());
                interior.insert(t.clone());
            }
        }
        interior.remove(&old_r);
        interior.remove(&old_l);
        interior.insert(Triangle::new(u.clone(), wr.clone(), wl.clone()));
        interior.insert(Triangle::new(wr.clone(), v.clone(), wl.clone()));
        let new_edge = Edge::new(wr, wl);
        Ok((Self::assemble(footprint, interior)?, new_edge))
    }
}

/// Farey edges with exactly one incident triangle in the set.
fn boundary_edges(triangles: &BTreeSet<Triangle>) -> BTreeSet<Edge> {
    let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
    for t in triangles {
        for e in t.edges() {
            *count.entry(e).or_default() += 1;
        }
    }
    count
        .into_iter()
        .filter_map(|(e, c)| (c == 1).then_some(e))
        .collect()
}

/// Structural equality of normalized diffs.
pub fn tess_equal(a: &Tessellation, b: &Tessellation) -> bool {
    a.footprint == b.footprint && a.interior == b.interior
}

impl fmt::Debug for Tessellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_standard_farey() {
            write!(f, "Tessellation(farey)")
        } else {
            write!(
                f,
                "Tessellation(footprint: {:?}, interior: {:?})",
                self.footprint, self.interior
            )
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TessWire {
    support: Vec<Edge>,
    interior_edges: Vec<Edge>,
    interior_triangles: Vec<Triangle>,
}

impl Serialize for Tessellation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TessWire {
            support: self.support.iter().cloned().collect(),
            interior_edges: self.interior_edges.iter().cloned().collect(),
            interior_triangles: self.interior.iter().cloned().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tessellation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = TessWire::deserialize(d)?;
        let footprint = farey_fill(&wire.support).map_err(D::Error::custom)?;
        Tessellation::assemble(footprint, wire.interior_triangles.into_iter().collect())
            .map_err(D::Error::custom)
    }
}

const FILL_CAP: usize = 4096;

/// Recovers the footprint from its boundary edges by filling inward. The
/// side containing the region is found by backtracking over the (few)
/// connected components.
fn farey_fill(boundary_list: &[Edge]) -> Result<BTreeSet<Triangle>, TessError> {
    let boundary: BTreeSet<Edge> = boundary_list.iter().cloned().collect();
    if boundary.is_empty() {
        return Ok(BTreeSet::new());
    }
    for e in &boundary {
        let (x, y) = e.endpoints();
        if !is_farey_edge(x, y) {
            return Err(TessError::BadSupport);
        }
    }
    fill_search(&boundary, boundary.clone(), BTreeSet::new()).ok_or(TessError::BadSupport)
}

fn fill_search(
    boundary: &BTreeSet<Edge>,
    remaining: BTreeSet<Edge>,
    acc: BTreeSet<Triangle>,
) -> Option<BTreeSet<Triangle>> {
    let seed = match remaining.iter().next() {
        None => {
            return (boundary_edges(&acc) == *boundary).then_some(acc);
        }
        Some(e) => e.clone(),
    };
    let (x, y) = seed.endpoints();
    let (r, l) = farey_apexes(x, y);
    for apex in [r, l] {
        let start = Triangle::new(x.clone(), y.clone(), apex);
        if let Some(comp) = fill_component(start, boundary) {
            if comp.is_disjoint(&acc) {
                let comp_boundary = boundary_edges(&comp);
                let mut next_remaining = remaining.clone();
                for e in &comp_boundary {
                    next_remaining.remove(e);
                }
                let mut next_acc = acc.clone();
                next_acc.extend(comp.iter().cloned());
                if let Some(result) = fill_search(boundary, next_remaining, next_acc) {
                    return Some(result);
                }
            }
        }
    }
    None
}

/// Flood-fills Farey triangles from `start`, not crossing boundary edges.
/// `None` if the region exceeds the cap (i.e. we flooded the exterior).
fn fill_component(start: Triangle, boundary: &BTreeSet<Edge>) -> Option<BTreeSet<Triangle>> {
    let mut comp = BTreeSet::new();
    let mut queue = vec![start];
    while let Some(t) = queue.pop() {
        if comp.contains(&t) {
            continue;
        }
        if comp.len() >= FILL_CAP {
            return None;
        }
        comp.insert(t.clone());
        for e in t.edges() {
            if boundary.contains(&e) {
                continue;
            }
            let (ex, ey) = e.endpoints();
            let (er_, el_) = farey_apexes(ex, ey);
            for w in [er_, el_] {
                let nb = Triangle::new(ex.clone(), ey.clone(), w);
                if nb != t {
                    queue.push(nb);
                }
            }
        }
    }
    Some(comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::er;

    fn inf() -> ExtendedRational {
        ExtendedRational::infinity()
    }

    #[test]
    fn farey_contains() {
        let t = Tessellation::standard_farey();
        assert!(t.contains_edge(&er(0, 1), &inf()));
        assert!(!t.contains_edge(&er(1, 3), &er(2, 3)));
    }

    #[test]
    fn farey_root_triangles() {
        let t = Tessellation::standard_farey();
        assert_eq!(
            t.triangle_beside(&er(0, 1), &inf(), Side::Right).unwrap(),
            Triangle::new(er(0, 1), er(1, 1), inf())
        );
        assert_eq!(
            t.triangle_beside(&er(0, 1), &inf(), Side::Left).unwrap(),
            Triangle::new(er(0, 1), er(-1, 1), inf())
        );
    }

    #[test]
    fn third_vertex_examples() {
        let t = Tessellation::standard_farey();
        assert_eq!(
            t.third_vertex(&er(0, 1), &inf(), Side::Right).unwrap(),
            er(1, 1)
        );
        assert_eq!(
            t.third_vertex(&er(0, 1), &inf(), Side::Left).unwrap(),
            er(-1, 1)
        );
        assert_eq!(
            t.third_vertex(&er(1, 1), &er(2, 1), Side::Right).unwrap(),
            er(3, 2)
        );
    }

    #[test]
    fn missing_edge_rejected() {
        let t = Tessellation::standard_farey();
        assert!(matches!(
            t.third_vertex(&er(1, 3), &er(2, 3), Side::Right),
            Err(TessError::MissingEdge(_, _))
        ));
    }

    #[test]
    fn flip_root_edge() {
        let t = Tessellation::standard_farey();
        let (t2, new_edge) = t.flip(&Edge::new(er(0, 1), inf())).unwrap();
        assert_eq!(new_edge, Edge::new(er(-1, 1), er(1, 1)));
        assert!(t2.contains_edge(&er(-1, 1), &er(1, 1)));
        assert!(!t2.contains_edge(&er(0, 1), &inf()));
        let (t3, back) = t2.flip(&new_edge).unwrap();
        assert_eq!(back, Edge::new(er(0, 1), inf()));
        assert!(tess_equal(&t3, &t));
        assert!(t3.is_standard_farey());
    }

    #[test]
    fn flip_generic_edge() {
        // quadrilateral around {1,2} is (1, 3/2, 2, ∞); new edge {3/2, ∞}
        let t = Tessellation::standard_farey();
        let (t2, new_edge) = t.flip(&Edge::new(er(1, 1), er(2, 1))).unwrap();
        assert_eq!(new_edge, Edge::new(er(3, 2), inf()));
        assert!(!t2.contains_edge(&er(1, 1), &er(2, 1)));
    }

    #[test]
    fn flip_changes_exactly_one_edge_two_triangles() {
        let t = Tessellation::standard_farey();
        let e = Edge::new(er(0, 1), er(1, 1));
        let (t2, ne) = t.flip(&e).unwrap();
        let (a, b) = e.endpoints();
        assert!(!t2.contains_edge(a, b));
        let (c, d) = ne.endpoints();
        assert!(t2.contains_edge(c, d));
        for (a, b) in [
            (er(0, 1), er(1, 2)),
            (er(1, 2), er(1, 1)),
            (er(1, 1), inf()),
            (er(0, 1), inf()),
        ] {
            assert!(t2.contains_edge(&a, &b));
        }
        assert_eq!(t2.interior_triangles().len(), 2);
    }

    #[test]
    fn pentagon_of_flips() {
        // Five flips inside the pentagon (0, 1, 2, ∞, -1) return to Farey.
        let t0 = Tessellation::standard_farey();
        let seq = [
            Edge::new(er(1, 1), inf()),
            Edge::new(er(0, 1), inf()),
            Edge::new(er(0, 1), er(2, 1)),
            Edge::new(er(2, 1), er(-1, 1)),
            Edge::new(er(1, 1), er(-1, 1)),
        ];
        let mut t = t0.clone();
        for e in &seq {
            t = t.flip(e).unwrap().0;
        }
        assert!(tess_equal(&t, &t0));
    }

    #[test]
    fn json_round_trip() {
        let t = Tessellation::standard_farey()
            .flip(&Edge::new(er(0, 1), inf()))
            .unwrap()
            .0;
        let json = serde_json::to_string(&t).unwrap();
        let back: Tessellation = serde_json::from_str(&json).unwrap();
        assert!(tess_equal(&t, &back));
    }

    #[test]
    fn json_round_trip_two_components() {
        let t = Tessellation::standard_farey()
            .flip(&Edge::new(er(0, 1), inf()))
            .unwrap()
            .0
            .flip(&Edge::new(er(7, 1), er(8, 1)))
            .unwrap()
            .0;
        let json = serde_json::to_string(&t).unwrap();
        let back: Tessellation = serde_json::from_str(&json).unwrap();
        assert!(tess_equal(&t, &back));
    }

    #[test]
    fn exterior_stays_farey_after_random_flips() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut t = Tessellation::standard_farey();
        let mut live_edges: Vec<Edge> = vec![Edge::new(er(0, 1), inf())];
        for _ in 0..12 {
            let e = live_edges[rng.gen_range(0..live_edges.len())].clone();
            let (x, y) = e.endpoints();
            if !t.contains_edge(x, y) {
                continue;
            }
            let (t2, ne) = t.flip(&e).unwrap();
            t = t2;
            live_edges.push(ne);
            live_edges.extend(t.support().iter().cloned());
        }
        for e in t.support() {
            let (x, y) = e.endpoints();
            assert!(is_farey_edge(x, y));
        }
    }

    #[test]
    fn farey_middle_examples() {
        assert_eq!(
            farey_middle(&Triangle::new(er(0, 1), er(1, 1), inf())),
            er(1, 1)
        );
        assert_eq!(
            farey_middle(&Triangle::new(er(0, 1), er(-1, 1), inf())),
            er(-1, 1)
        );
        assert_eq!(
            farey_middle(&Triangle::new(er(0, 1), er(1, 2), er(1, 1))),
            er(1, 2)
        );
        assert_eq!(
            farey_middle(&Triangle::new(er(-1, 1), er(-2, 1), inf())),
            er(-2, 1)
        );
    }

    #[test]
    fn triangle_with_middle_inverts_middle() {
        for m in [er(1, 1), er(-1, 1), er(1, 2), er(-5, 3), er(7, 2), er(22, 7)] {
            let t = farey_triangle_with_middle(&m).unwrap();
            assert!(is_farey_triangle(&t));
            assert_eq!(farey_middle(&t), m);
        }
        assert!(farey_triangle_with_middle(&er(0, 1)).is_none());
        assert!(farey_triangle_with_middle(&inf()).is_none());
    }
}
