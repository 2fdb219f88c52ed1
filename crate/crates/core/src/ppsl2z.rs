//! Piecewise-`PSL(2,Z)` circular-order-preserving bijections of `Q ∪ {∞}`.
//!
//! A map is a finite list of arcs partitioning `RP^1`, each carrying one
//! matrix. Canonical form: arcs listed counterclockwise starting from the arc
//! containing 0, adjacent pieces with equal matrices merged. A single-piece
//! map covers the whole circle and is anchored at 0.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::PieceError;
use crate::matrix::SL2ZMatrix;
use crate::rational::{cyclic_less, ExtendedRational};

/// Half-open arc `[lo, hi)` in the counterclockwise cyclic order. `lo == hi`
/// encodes the full circle and is only allowed in single-piece maps.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub lo: ExtendedRational,
    pub hi: ExtendedRational,
}

impl Arc {
    pub fn full() -> Self {
        Arc {
            lo: ExtendedRational::zero(),
            hi: ExtendedRational::zero(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &ExtendedRational) -> bool {
        if self.is_full() || x == &self.lo {
            return true;
        }
        if x == &self.hi {
            return false;
        }
        cyclic_less(&self.lo, x, &self.hi)
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PPSL2ZMap {
    pieces: Vec<(Arc, SL2ZMatrix)>,
}

impl PPSL2ZMap {
    pub fn identity() -> Self {
        Self::from_matrix(SL2ZMatrix::identity())
    }

    pub fn from_matrix(m: SL2ZMatrix) -> Self {
        PPSL2ZMap {
            pieces: vec![(Arc::full(), m)],
        }
    }

    /// Builds a map from pieces, validating that the arcs partition the
    /// circle, the matrices agree at every breakpoint, and the induced map is
    /// a cyclic-order-preserving bijection.
    pub fn new(pieces: Vec<(Arc, SL2ZMatrix)>) -> Result<Self, PieceError> {
        if pieces.is_empty() {
            return Err(PieceError::Empty);
        }
        if pieces.len() == 1 {
            let (arc, m) = pieces.into_iter().next().unwrap();
            if !arc.is_full() {
                return Err(PieceError::NotAPartition { at: arc.hi });
            }
            return Ok(Self::from_matrix(m));
        }
        let mut pieces = pieces;
        sort_pieces(&mut pieces);
        let n = pieces.len();
        for i in 0..n {
            let (arc, m) = &pieces[i];
            if arc.is_full() {
                return Err(PieceError::DegenerateArc);
            }
            let (next_arc, next_m) = &pieces[(i + 1) % n];
            if arc.hi != next_arc.lo {
                return Err(PieceError::NotAPartition {
                    at: arc.hi.clone(),
                });
            }
            let left = m.apply(&arc.hi);
            let right = next_m.apply(&next_arc.lo);
            if left != right {
                return Err(PieceError::Discontinuous {
                    at: arc.hi.clone(),
                    left,
                    right,
                });
            }
        }
        // Breakpoint images must make exactly one counterclockwise turn:
        // distinct, with exactly one descent in the linear order. Each piece
        // maps its arc onto the arc between consecutive images, so this rules
        // out higher-degree covers.
        let images: Vec<_> = pieces.iter().map(|(a, m)| m.apply(&a.lo)).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                if images[i] == images[j] {
                    return Err(PieceError::NotBijective);
                }
            }
        }
        let descents = (0..n)
            .filter(|&i| images[(i + 1) % n] < images[i])
            .count();
        if descents != 1 {
            return Err(PieceError::NotBijective);
        }
        Ok(Self { pieces }.merged())
    }

    /// Merges adjacent pieces with equal matrices; assumes sorted pieces.
    fn merged(mut self) -> Self {
        let mut out: Vec<(Arc, SL2ZMatrix)> = Vec::with_capacity(self.pieces.len());
        for (arc, m) in self.pieces.drain(..) {
            match out.last_mut() {
                Some((prev, pm)) if *pm == m && prev.hi == arc.lo => prev.hi = arc.hi,
                _ => out.push((arc, m)),
            }
        }
        // wraparound merge
        while out.len() > 1 {
            let first_m = out[0].1.clone();
            let last = out.last().unwrap();
            if last.1 == first_m && last.0.hi == out[0].0.lo {
                let lo = out.pop().unwrap().0.lo;
                out[0].0.lo = lo;
            } else {
                break;
            }
        }
        if out.len() == 1 {
            return Self::from_matrix(out.pop().unwrap().1);
        }
        let mut map = Self { pieces: out };
        map.rotate_to_zero();
        map
    }

    /// Rotates the piece list so that the arc containing 0 comes first.
    fn rotate_to_zero(&mut self) {
        let zero = ExtendedRational::zero();
        if let Some(i) = self.pieces.iter().position(|(a, _)| a.contains(&zero)) {
            self.pieces.rotate_left(i);
        }
    }

    pub fn pieces(&self) -> &[(Arc, SL2ZMatrix)] {
        &self.pieces
    }

    pub fn is_identity(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].1.is_identity()
    }

    /// The matrix in force at `x`.
    pub fn matrix_at(&self, x: &ExtendedRational) -> &SL2ZMatrix {
        for (arc, m) in &self.pieces {
            if arc.contains(x) {
                return m;
            }
        }
        unreachable!("piece arcs partition the circle")
    }

    pub fn eval(&self, x: &ExtendedRational) -> ExtendedRational {
        self.matrix_at(x).apply(x)
    }

    /// `(self ∘ other)(x) = self(other(x))`. Breakpoints of `self` are pulled
    /// back through `other`.
    pub fn compose(&self, other: &Self) -> Self {
        let other_inv = other.invert();
        let mut cuts: Vec<ExtendedRational> = Vec::new();
        for (arc, _) in &other.pieces {
            if !arc.is_full() {
                cuts.push(arc.lo.clone());
            }
        }
        for (arc, _) in &self.pieces {
            if !arc.is_full() {
                cuts.push(other_inv.eval(&arc.lo));
            }
        }
        cuts.sort();
        cuts.dedup();
        if cuts.is_empty() {
            cuts.push(ExtendedRational::zero());
        }
        let n = cuts.len();
        let mut pieces = Vec::with_capacity(n);
        for i in 0..n {
            let lo = cuts[i].clone();
            let hi = cuts[(i + 1) % n].clone();
            let inner = other.matrix_at(&lo);
            let outer = self.matrix_at(&inner.apply(&lo));
            let arc = if n == 1 { Arc::full() } else { Arc { lo, hi } };
            pieces.push((arc, outer.compose(inner)));
        }
        Self { pieces }.merged()
    }

    pub fn invert(&self) -> Self {
        if self.pieces.len() == 1 {
            return Self::from_matrix(self.pieces[0].1.inverse());
        }
        let mut pieces: Vec<(Arc, SL2ZMatrix)> = self
            .pieces
            .iter()
            .map(|(arc, m)| {
                (
                    Arc {
                        lo: m.apply(&arc.lo),
                        hi: m.apply(&arc.hi),
                    },
                    m.inverse(),
                )
            })
            .collect();
        sort_pieces(&mut pieces);
        Self { pieces }.merged()
    }

    /// Breakpoints of the canonical form (empty for a single global matrix).
    pub fn breakpoints(&self) -> Vec<ExtendedRational> {
        if self.pieces.len() == 1 {
            return Vec::new();
        }
        self.pieces.iter().map(|(a, _)| a.lo.clone()).collect()
    }
}

fn sort_pieces(pieces: &mut [(Arc, SL2ZMatrix)]) {
    pieces.sort_by(|(a, _), (b, _)| a.lo.cmp(&b.lo));
    // The Ord on ExtendedRational is exactly the cyclic order from 0, so the
    // list is now counterclockwise; rotate_to_zero happens in merged().
}

impl fmt::Debug for PPSL2ZMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PPSL2ZMap{:?}", self.pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::er;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sample_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<ExtendedRational> {
        let mut pts = Vec::with_capacity(n);
        for _ in 0..n {
            let num = rng.gen_range(-50i64..50);
            let den = rng.gen_range(0i64..50);
            if let Ok(x) = ExtendedRational::reduce(num, den) {
                pts.push(x);
            }
        }
        pts
    }

    /// The vertex function of the tessellation obtained by flipping the edge
    /// {0, ∞}: sends 0→1, 1→∞, ∞→−1, −1→0, in four pieces.
    fn four_piece() -> PPSL2ZMap {
        let inf = ExtendedRational::infinity();
        PPSL2ZMap::new(vec![
            (
                Arc { lo: er(0, 1), hi: er(1, 1) },
                SL2ZMatrix::new(0, 1, -1, 1).unwrap(),
            ),
            (
                Arc { lo: er(1, 1), hi: inf.clone() },
                SL2ZMatrix::new(1, 0, -1, 1).unwrap(),
            ),
            (
                Arc { lo: inf, hi: er(-1, 1) },
                SL2ZMatrix::new(1, 1, -1, 0).unwrap(),
            ),
            (
                Arc { lo: er(-1, 1), hi: er(0, 1) },
                SL2ZMatrix::new(1, 1, 0, 1).unwrap(),
            ),
        ])
        .unwrap()
    }

    #[test]
    fn four_piece_is_the_expected_bijection() {
        let f = four_piece();
        let inf = ExtendedRational::infinity();
        assert_eq!(f.eval(&er(0, 1)), er(1, 1));
        assert_eq!(f.eval(&er(1, 1)), inf);
        assert_eq!(f.eval(&inf), er(-1, 1));
        assert_eq!(f.eval(&er(-1, 1)), er(0, 1));
        assert_eq!(f.eval(&er(1, 2)), er(2, 1));
    }

    #[test]
    fn identity_laws() {
        let f = four_piece();
        let id = PPSL2ZMap::identity();
        assert_eq!(f.compose(&id), f);
        assert_eq!(id.compose(&f), f);
        assert_eq!(f.invert().invert(), f);
        assert!(f.compose(&f.invert()).is_identity());
    }

    #[test]
    fn compose_matches_pointwise() {
        let f = four_piece();
        let g = f.invert().compose(&PPSL2ZMap::from_matrix(
            SL2ZMatrix::new(1, 1, 0, 1).unwrap(),
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for x in sample_points(&mut rng, 100) {
            assert_eq!(f.compose(&g).eval(&x), f.eval(&g.eval(&x)));
        }
    }

    #[test]
    fn associativity_on_samples() {
        let f = four_piece();
        let g = f.invert();
        let h = PPSL2ZMap::from_matrix(SL2ZMatrix::new(2, 1, 1, 1).unwrap());
        let lhs = f.compose(&g).compose(&h);
        let rhs = f.compose(&g.compose(&h));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for x in sample_points(&mut rng, 100) {
            assert_eq!(lhs.eval(&x), rhs.eval(&x));
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn equality_iff_pointwise_agreement() {
        let f = four_piece();
        let g = f.clone();
        assert_eq!(f, g);
        let h = PPSL2ZMap::identity();
        assert_ne!(f, h);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut seen_difference = false;
        for x in sample_points(&mut rng, 1000) {
            if f.eval(&x) != h.eval(&x) {
                seen_difference = true;
            }
        }
        assert!(seen_difference);
    }

    #[test]
    fn order_preserving() {
        let f = four_piece();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let pts = sample_points(&mut rng, 60);
        for w in pts.chunks(3) {
            if let [a, b, c] = w {
                if a != b && b != c && a != c {
                    assert_eq!(
                        cyclic_less(a, b, c),
                        cyclic_less(&f.eval(a), &f.eval(b), &f.eval(c))
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_discontinuous() {
        let m1 = SL2ZMatrix::new(1, 1, 0, 1).unwrap();
        let m2 = SL2ZMatrix::identity();
        let r = PPSL2ZMap::new(vec![
            (
                Arc {
                    lo: er(0, 1),
                    hi: ExtendedRational::infinity(),
                },
                m1,
            ),
            (
                Arc {
                    lo: ExtendedRational::infinity(),
                    hi: er(0, 1),
                },
                m2,
            ),
        ]);
        assert!(matches!(r, Err(PieceError::Discontinuous { .. })));
    }
}
