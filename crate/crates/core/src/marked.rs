//! Marked tessellations (tessellation plus a distinguished oriented edge),
//! the two elementary moves generating the Ptolemy-Thompson group `T`, and
//! extraction of the vertex function as an exact piecewise-`PSL(2,Z)` map.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

use crate::error::MarkedError;
use crate::matrix::SL2ZMatrix;
use crate::ppsl2z::{Arc, PPSL2ZMap};
use crate::rational::{ExtendedRational, Lift};
use crate::tess::{tess_equal, Edge, Side, Tessellation};

/// Default bound on the Stern-Brocot descent depth when extracting vertex
/// functions.
pub const DEFAULT_DEPTH_BOUND: usize = 64;

/// Generators of the Ptolemy-Thompson group and their inverses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TLetter {
    Alpha,
    AlphaInv,
    Beta,
    BetaInv,
}

impl TLetter {
    pub fn inverse(self) -> Self {
        match self {
            TLetter::Alpha => TLetter::AlphaInv,
            TLetter::AlphaInv => TLetter::Alpha,
            TLetter::Beta => TLetter::BetaInv,
            TLetter::BetaInv => TLetter::Beta,
        }
    }
}

impl fmt::Debug for TLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TLetter::Alpha => "a",
            TLetter::AlphaInv => "a'",
            TLetter::Beta => "b",
            TLetter::BetaInv => "b'",
        };
        write!(f, "{s}")
    }
}

/// A word in the free group on α, β; leftmost letter acts last.
pub type TWord = Vec<TLetter>;

/// Inverse of a word: reverse and invert letters.
pub fn tword_inverse(w: &[TLetter]) -> TWord {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// A tessellation with a distinguished oriented edge.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedTessellation {
    tess: Tessellation,
    doe: (ExtendedRational, ExtendedRational),
}

impl MarkedTessellation {
    /// The Farey tessellation with the oriented edge 0 → ∞.
    pub fn standard() -> Self {
        MarkedTessellation {
            tess: Tessellation::standard_farey(),
            doe: (ExtendedRational::zero(), ExtendedRational::infinity()),
        }
    }

    pub fn new(
        tess: Tessellation,
        doe: (ExtendedRational, ExtendedRational),
    ) -> Result<Self, MarkedError> {
        if !tess.contains_edge(&doe.0, &doe.1) {
            return Err(MarkedError::DoeNotAnEdge(doe.0, doe.1));
        }
        Ok(MarkedTessellation { tess, doe })
    }

    pub fn tess(&self) -> &Tessellation {
        &self.tess
    }

    pub fn doe(&self) -> (&ExtendedRational, &ExtendedRational) {
        (&self.doe.0, &self.doe.1)
    }

    /// Flip the d.o.e. and orient the new diagonal as the counterclockwise
    /// rotation of the old one: in the quadrilateral (start, right-apex,
    /// end, left-apex) the new edge runs right-apex → left-apex.
    pub fn apply_alpha(&self) -> Self {
        let (u, v) = (&self.doe.0, &self.doe.1);
        let wr = self
            .tess
            .third_vertex(u, v, Side::Right)
            .expect("d.o.e. is an edge");
        let wl = self
            .tess
            .third_vertex(u, v, Side::Left)
            .expect("d.o.e. is an edge");
        let (tess, _) = self
            .tess
            .flip(&Edge::new(u.clone(), v.clone()))
            .expect("d.o.e. is an edge");
        MarkedTessellation {
            tess,
            doe: (wr, wl),
        }
    }

    /// Inverse move implemented directly: flip and rotate the arrow
    /// clockwise instead.
    pub fn apply_alpha_inv(&self) -> Self {
        let (u, v) = (&self.doe.0, &self.doe.1);
        let wr = self
            .tess
            .third_vertex(u, v, Side::Right)
            .expect("d.o.e. is an edge");
        let wl = self
            .tess
            .third_vertex(u, v, Side::Left)
            .expect("d.o.e. is an edge");
        let (tess, _) = self
            .tess
            .flip(&Edge::new(u.clone(), v.clone()))
            .expect("d.o.e. is an edge");
        MarkedTessellation {
            tess,
            doe: (wl, wr),
        }
    }

    /// Step the d.o.e. around the triangle to its left: if that triangle is
    /// (start, end, apex), the new d.o.e. runs end → apex. The tessellation
    /// is unchanged.
    pub fn apply_beta(&self) -> Self {
        let (u, v) = (&self.doe.0, &self.doe.1);
        let w = self
            .tess
            .third_vertex(u, v, Side::Left)
            .expect("d.o.e. is an edge");
        MarkedTessellation {
            tess: self.tess.clone(),
            doe: (v.clone(), w),
        }
    }

    /// Inverse move implemented directly: the d.o.e. (s, t) arose from a
    /// step on (u, s), where u is the apex left of s → t.
    pub fn apply_beta_inv(&self) -> Self {
        let (s, t) = (&self.doe.0, &self.doe.1);
        let u = self
            .tess
            .third_vertex(s, t, Side::Left)
            .expect("d.o.e. is an edge");
        MarkedTessellation {
            tess: self.tess.clone(),
            doe: (u, s.clone()),
        }
    }

    pub fn apply_letter(&self, letter: TLetter) -> Self {
        match letter {
            TLetter::Alpha => self.apply_alpha(),
            TLetter::AlphaInv => self.apply_alpha_inv(),
            TLetter::Beta => self.apply_beta(),
            TLetter::BetaInv => self.apply_beta_inv(),
        }
    }

    /// Applies a word right-to-left (rightmost letter first).
    pub fn apply_tword(&self, word: &[TLetter]) -> Self {
        let mut m = self.clone();
        for letter in word.iter().rev() {
            m = m.apply_letter(*letter);
        }
        m
    }

    /// The vertex function `j ↦ τ_j`: indices follow the mediant recursion
    /// seeded by the d.o.e. (0 = start, ∞ = end, 1 = right apex, −1 = left
    /// apex), values are the actual tessellation vertices.
    pub fn vertex_function(&self) -> Result<PPSL2ZMap, MarkedError> {
        self.vertex_function_with_depth(DEFAULT_DEPTH_BOUND)
    }

    pub fn vertex_function_with_depth(&self, depth: usize) -> Result<PPSL2ZMap, MarkedError> {
        let map = self.extract_vertex_map(depth)?;
        self.certify_vertex_map(&map, depth)?;
        Ok(map)
    }

    fn extract_vertex_map(&self, depth_bound: usize) -> Result<PPSL2ZMap, MarkedError> {
        struct Branch {
            // Index edge, as cone lifts (plus-combinations span the subtree).
            ia: Lift,
            ic: Lift,
            // Geometric oriented edge; the subtree hangs on its right.
            gx: ExtendedRational,
            gy: ExtendedRational,
            depth: usize,
        }

        let (u, v) = (&self.doe.0, &self.doe.1);
        let mut queue = VecDeque::new();
        queue.push_back(Branch {
            ia: ExtendedRational::zero().lift(),
            ic: ExtendedRational::infinity().lift(),
            gx: u.clone(),
            gy: v.clone(),
            depth: 0,
        });
        queue.push_back(Branch {
            ia: ExtendedRational::neg_infinity_lift(),
            ic: ExtendedRational::zero().lift(),
            gx: v.clone(),
            gy: u.clone(),
            depth: 0,
        });
        let mut pieces: Vec<(Arc, SL2ZMatrix)> = Vec::new();
        while let Some(branch) = queue.pop_front() {
            if branch.depth > depth_bound {
                return Err(MarkedError::DepthExceeded { depth: depth_bound });
            }
            if self.subtree_is_farey(&branch.gx, &branch.gy) {
                // The rest of this branch is one integral matrix: index cone
                // lifts map linearly onto geometric cone lifts.
                let (lx, ly) = geometric_cone_lifts(&self.tess, &branch.gx, &branch.gy);
                let g = matrix_from_correspondence(&branch.ia, &branch.ic, &lx, &ly);
                let lo = ExtendedRational::reduce(branch.ia.0.clone(), branch.ia.1.clone())
                    .expect("cone lift is a point");
                let hi = ExtendedRational::reduce(branch.ic.0.clone(), branch.ic.1.clone())
                    .expect("cone lift is a point");
                pieces.push((Arc { lo, hi }, g));
                continue;
            }
            let mid = Lift(&branch.ia.0 + &branch.ic.0, &branch.ia.1 + &branch.ic.1);
            let w = self
                .tess
                .third_vertex(&branch.gx, &branch.gy, Side::Right)
                .expect("branch edges are edges");
            queue.push_back(Branch {
                ia: branch.ia.clone(),
                ic: mid.clone(),
                gx: branch.gx.clone(),
                gy: w.clone(),
                depth: branch.depth + 1,
            });
            queue.push_back(Branch {
                ia: mid,
                ic: branch.ic,
                gx: w,
                gy: branch.gy,
                depth: branch.depth + 1,
            });
        }
        PPSL2ZMap::new(pieces).map_err(|_| MarkedError::DepthExceeded { depth: depth_bound })
    }

    /// True iff the region on the right of `x → y` (away from the d.o.e.
    /// root) carries no trace of the modified footprint.
    fn subtree_is_farey(&self, x: &ExtendedRational, y: &ExtendedRational) -> bool {
        use crate::rational::cyclic_less;
        // The subtree lives in the closed arc from x counterclockwise to y;
        // a footprint triangle meets it iff all its vertices lie in that arc.
        let in_arc = |p: &ExtendedRational| p == x || p == y || cyclic_less(x, p, y);
        !self
            .tess
            .footprint()
            .iter()
            .any(|t| t.vertices().into_iter().all(in_arc))
    }

    fn certify_vertex_map(&self, map: &PPSL2ZMap, depth: usize) -> Result<(), MarkedError> {
        let mut samples: Vec<ExtendedRational> = Vec::new();
        for (arc, _) in map.pieces() {
            if arc.is_full() {
                samples.push(ExtendedRational::zero());
                samples.push(ExtendedRational::one());
                samples.push(ExtendedRational::infinity());
                continue;
            }
            samples.push(arc.lo.clone());
            // Two interior points of the piece, by mediant descent from its
            // endpoints.
            let (lo, hi) = (arc.lo.lift(), lift_ccw_from(&arc.lo, &arc.hi));
            let mid = Lift(&lo.0 + &hi.0, &lo.1 + &hi.1);
            let quarter = Lift(&lo.0 + &mid.0, &lo.1 + &mid.1);
            for l in [mid, quarter] {
                if let Ok(p) = ExtendedRational::reduce(l.0, l.1) {
                    samples.push(p);
                }
            }
        }
        for index in samples {
            let got = map.eval(&index);
            let want = self.vertex_at(&index, depth)?;
            if got != want {
                return Err(MarkedError::CertificationFailed { index, got, want });
            }
        }
        Ok(())
    }

    /// Slow-path evaluation of the vertex function by direct mediant
    /// recursion; the independent oracle for the piecewise form.
    pub fn vertex_at(
        &self,
        index: &ExtendedRational,
        depth_bound: usize,
    ) -> Result<ExtendedRational, MarkedError> {
        use crate::rational::cyclic_less;
        let (u, v) = (&self.doe.0, &self.doe.1);
        if index.is_zero() {
            return Ok(u.clone());
        }
        if index.is_infinity() {
            return Ok(v.clone());
        }
        let (mut ia, mut ic, mut gx, mut gy) = if index.is_negative() {
            (
                ExtendedRational::neg_infinity_lift(),
                ExtendedRational::zero().lift(),
                v.clone(),
                u.clone(),
            )
        } else {
            (
                ExtendedRational::zero().lift(),
                ExtendedRational::infinity().lift(),
                u.clone(),
                v.clone(),
            )
        };
        for _ in 0..=depth_bound {
            let mid_lift = Lift(&ia.0 + &ic.0, &ia.1 + &ic.1);
            let mid = ExtendedRational::reduce(mid_lift.0.clone(), mid_lift.1.clone())
                .expect("cone lift is a point");
            let w = self
                .tess
                .third_vertex(&gx, &gy, Side::Right)
                .expect("recursion stays on edges");
            if &mid == index {
                return Ok(w);
            }
            let lo = ExtendedRational::reduce(ia.0.clone(), ia.1.clone())
                .expect("cone lift is a point");
            if cyclic_less(&lo, index, &mid) {
                ic = mid_lift;
                gy = w;
            } else {
                ia = mid_lift;
                gx = w;
            }
        }
        Err(MarkedError::DepthExceeded { depth: depth_bound })
    }
}

/// Cone lifts of the geometric edge `x → y` whose plus-combinations exhaust
/// the Farey subtree on its right.
fn geometric_cone_lifts(
    tess: &Tessellation,
    x: &ExtendedRational,
    y: &ExtendedRational,
) -> (Lift, Lift) {
    let w = tess
        .third_vertex(x, y, Side::Right)
        .expect("cone root is an edge");
    // Choose signs so that lift(x) + lift(y) = ±lift(w).
    let (lx, ly, lw) = (x.lift(), y.lift(), w.lift());
    for (sx, sy) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
        let cand = Lift(&lx.0 * sx + &ly.0 * sy, &lx.1 * sx + &ly.1 * sy);
        if cand == lw || cand == Lift(-lw.0.clone(), -lw.1.clone()) {
            return (Lift(&lx.0 * sx, &lx.1 * sx), Lift(&ly.0 * sy, &ly.1 * sy));
        }
    }
    unreachable!("apex of a Farey edge is a mediant of some lifts")
}

/// The matrix sending lift `a ↦ x`, `c ↦ y`, normalized into `SL(2,Z)`.
fn matrix_from_correspondence(a: &Lift, c: &Lift, x: &Lift, y: &Lift) -> SL2ZMatrix {
    // [x y] = G [a c]  =>  G = [x y] · [a c]^{-1}, det [a c] = ±1.
    let det = &a.0 * &c.1 - &c.0 * &a.1;
    let (inv_col1, inv_col2) = if det == 1.into() {
        (
            Lift(c.1.clone(), -a.1.clone()),
            Lift(-c.0.clone(), a.0.clone()),
        )
    } else {
        (
            Lift(-c.1.clone(), a.1.clone()),
            Lift(c.0.clone(), -a.0.clone()),
        )
    };
    let col1 = Lift(
        &x.0 * &inv_col1.0 + &y.0 * &inv_col1.1,
        &x.1 * &inv_col1.0 + &y.1 * &inv_col1.1,
    );
    let col2 = Lift(
        &x.0 * &inv_col2.0 + &y.0 * &inv_col2.1,
        &x.1 * &inv_col2.0 + &y.1 * &inv_col2.1,
    );
    SL2ZMatrix::from_columns(&col1, &col2).expect("cone correspondence is unimodular")
}

/// A lift of `hi` suitable for mediant descent inside the arc `[lo, hi)`.
fn lift_ccw_from(lo: &ExtendedRational, hi: &ExtendedRational) -> Lift {
    if hi.is_infinity() && lo.is_negative() {
        ExtendedRational::neg_infinity_lift()
    } else if hi.is_infinity() {
        hi.lift()
    } else if hi < lo {
        // The arc wraps past ∞; negate the lift so mediants stay inside.
        let l = hi.lift();
        Lift(-l.0, -l.1)
    } else {
        hi.lift()
    }
}

pub fn marked_equal(a: &MarkedTessellation, b: &MarkedTessellation) -> bool {
    a.doe == b.doe && tess_equal(&a.tess, &b.tess)
}

impl fmt::Debug for MarkedTessellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MarkedTessellation(doe: {} -> {}, {:?})",
            self.doe.0, self.doe.1, self.tess
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::er;
    use crate::words::parse_tword;

    fn inf() -> ExtendedRational {
        ExtendedRational::infinity()
    }

    fn standard() -> MarkedTessellation {
        MarkedTessellation::standard()
    }

    #[test]
    fn standard_marked_shape() {
        let m = standard();
        assert_eq!(m.doe(), (&er(0, 1), &inf()));
        assert!(m.tess().is_standard_farey());
        assert!(marked_equal(&m, &m));
    }

    #[test]
    fn alpha_on_standard() {
        let m = standard().apply_alpha();
        assert_eq!(m.doe(), (&er(1, 1), &er(-1, 1)));
        assert!(m.tess().contains_edge(&er(1, 1), &er(-1, 1)));
        assert!(!m.tess().contains_edge(&er(0, 1), &inf()));
    }

    #[test]
    fn alpha_order_four() {
        let mut m = standard();
        for _ in 0..4 {
            m = m.apply_alpha();
        }
        assert!(marked_equal(&m, &standard()));
        assert!(!marked_equal(&standard().apply_alpha(), &standard()));
    }

    #[test]
    fn alpha_squared_reverses_doe() {
        let m = standard().apply_alpha().apply_alpha();
        assert!(tess_equal(m.tess(), standard().tess()));
        assert_eq!(m.doe(), (&inf(), &er(0, 1)));
    }

    #[test]
    fn beta_on_standard() {
        let m = standard().apply_beta();
        assert_eq!(m.doe(), (&inf(), &er(-1, 1)));
        assert!(tess_equal(m.tess(), standard().tess()));
    }

    #[test]
    fn beta_order_three_on_random_reachables() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let letters = [
            TLetter::Alpha,
            TLetter::AlphaInv,
            TLetter::Beta,
            TLetter::BetaInv,
        ];
        for _ in 0..50 {
            let len = rng.gen_range(0..10);
            let word: TWord = (0..len).map(|_| letters[rng.gen_range(0..4)]).collect();
            let m = standard().apply_tword(&word);
            let b3 = m.apply_beta().apply_beta().apply_beta();
            assert!(marked_equal(&b3, &m));
            // direct inverse moves agree with the low powers
            assert!(marked_equal(
                &m.apply_beta_inv(),
                &m.apply_beta().apply_beta()
            ));
            assert!(marked_equal(
                &m.apply_alpha_inv(),
                &m.apply_alpha().apply_alpha().apply_alpha()
            ));
        }
    }

    #[test]
    fn relators_act_trivially() {
        for relator in crate::words::t_relators() {
            let m = standard().apply_tword(&relator);
            assert!(marked_equal(&m, &standard()), "relator failed");
        }
    }

    #[test]
    fn pentagon_word() {
        let w = parse_tword("(b a)^5").unwrap();
        assert!(marked_equal(&standard().apply_tword(&w), &standard()));
    }

    #[test]
    fn freeness_witnesses() {
        assert!(!marked_equal(
            &standard().apply_tword(&[TLetter::Alpha]),
            &standard()
        ));
        assert!(!marked_equal(
            &standard().apply_tword(&[TLetter::Beta]),
            &standard()
        ));
    }

    #[test]
    fn vertex_function_of_standard_is_identity() {
        let f = standard().vertex_function().unwrap();
        assert!(f.is_identity());
    }

    #[test]
    fn vertex_function_of_alpha() {
        let f = standard().apply_alpha().vertex_function().unwrap();
        assert_eq!(f.eval(&er(0, 1)), er(1, 1));
        assert_eq!(f.eval(&inf()), er(-1, 1));
        assert_eq!(f.eval(&er(1, 1)), inf());
        assert_eq!(f.eval(&er(-1, 1)), er(0, 1));
    }

    #[test]
    fn vertex_function_against_oracle_on_random_words() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let letters = [
            TLetter::Alpha,
            TLetter::AlphaInv,
            TLetter::Beta,
            TLetter::BetaInv,
        ];
        for _ in 0..25 {
            let len = rng.gen_range(0..8);
            let word: TWord = (0..len).map(|_| letters[rng.gen_range(0..4)]).collect();
            let m = standard().apply_tword(&word);
            let f = m.vertex_function().unwrap();
            for _ in 0..12 {
                let num = rng.gen_range(-24i64..24);
                let den = rng.gen_range(0i64..24);
                if let Ok(j) = ExtendedRational::reduce(num, den) {
                    assert_eq!(f.eval(&j), m.vertex_at(&j, 64).unwrap());
                }
            }
        }
    }

    #[test]
    fn vertex_functions_antihomomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let letters = [
            TLetter::Alpha,
            TLetter::AlphaInv,
            TLetter::Beta,
            TLetter::BetaInv,
        ];
        for _ in 0..10 {
            let mut gen = |n: usize| -> TWord {
                (0..n).map(|_| letters[rng.gen_range(0..4)]).collect()
            };
            let g = gen(4);
            let h = gen(4);
            let mut gh = g.clone();
            gh.extend(h.iter().copied());
            let fg = standard().apply_tword(&g).vertex_function().unwrap();
            let fh = standard().apply_tword(&h).vertex_function().unwrap();
            let fgh = standard().apply_tword(&gh).vertex_function().unwrap();
            assert_eq!(fgh, fh.compose(&fg));
        }
    }

    #[test]
    fn vertex_function_preserves_cyclic_order() {
        use crate::rational::cyclic_less;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        let m = standard().apply_tword(&[TLetter::Beta, TLetter::Alpha, TLetter::Alpha]);
        let f = m.vertex_function().unwrap();
        for _ in 0..200 {
            let mut pick = || -> Option<ExtendedRational> {
                ExtendedRational::reduce(rng.gen_range(-30i64..30), rng.gen_range(0i64..30)).ok()
            };
            let (a, b, c) = match (pick(), pick(), pick()) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => continue,
            };
            if a == b || b == c || a == c {
                continue;
            }
            assert_eq!(
                cyclic_less(&a, &b, &c),
                cyclic_less(&f.eval(&a), &f.eval(&b), &f.eval(&c))
            );
        }
    }
}
