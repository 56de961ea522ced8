//! Graded pieces of the unipotent fundamental group of mixed-elliptic curves.
//!
//! The weight-graded pieces `U[k]` of the fundamental group of an affine
//! curve with `h1` class `h` satisfy the free-Lie recursion
//! `[U[k]] = [h^⊗k] - pr_{-k}[Sym(⊕_{i<k} U[i])]`; projective curves remove
//! one Tate class at level 2 and one twisted `h1` at level 3.

use std::collections::BTreeMap;

use k0ring::{mul, power, sym_power, IrrClass, K0Class};
use thiserror::Error;

/// Errors from shape validation and uncovered levels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FundGrpError {
    /// Mixed-elliptic shapes require `h1 = g·[M_{1,0}]` with `g ≥ 1`.
    #[error("h1 class must be a positive multiple of [M_{{1,0}}]")]
    NotMixedElliptic,
    /// Projective shapes need genus at least 2.
    #[error("projective shape requires genus at least 2")]
    GenusTooSmall,
    /// The projective quotient is only specified through level 3.
    #[error("projective pieces are only defined for levels 1..=3")]
    LevelNotCovered,
}

/// The shape of the curve: affine with a given `h1` class, or smooth
/// projective of genus `g` (so `h1 = g·[M_{1,0}]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveShape {
    /// An affine (punctured) curve with the given `h1` class.
    Affine(K0Class),
    /// A smooth projective curve of the given genus.
    Projective(u32),
}

impl CurveShape {
    /// An affine mixed-elliptic curve of genus `g`.
    pub fn affine_mixed_elliptic(g: u32) -> CurveShape {
        CurveShape::Affine(K0Class::irr(1, 0).scale(g as i64))
    }

    /// The `h1` class of the shape.
    pub fn h1_class(&self) -> K0Class {
        match self {
            CurveShape::Affine(h1) => h1.clone(),
            CurveShape::Projective(g) => K0Class::irr(1, 0).scale(*g as i64),
        }
    }

    /// The genus when the shape is mixed-elliptic, i.e. `h1 = g·[M_{1,0}]`.
    pub fn mixed_elliptic_genus(&self) -> Result<u32, FundGrpError> {
        let h1 = self.h1_class();
        let g = h1.mult_of(&IrrClass::new(1, 0));
        if g >= 1 && h1 == K0Class::irr(1, 0).scale(g) {
            Ok(g as u32)
        } else {
            Err(FundGrpError::NotMixedElliptic)
        }
    }

    /// The graded pieces of this shape through level `n`.
    pub fn graded_pieces(&self, n: u32) -> Result<GradedLieClass, FundGrpError> {
        match self {
            CurveShape::Affine(h1) => Ok(affine_graded_pieces(h1, n)),
            CurveShape::Projective(g) => projective_graded_pieces(*g, n),
        }
    }
}

/// The classes `[U[k]]` of the graded pieces, indexed by level.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedLieClass {
    pieces: BTreeMap<u32, K0Class>,
}

impl GradedLieClass {
    /// The class at one level (zero when absent).
    pub fn piece(&self, k: u32) -> K0Class {
        self.pieces.get(&k).cloned().unwrap_or_else(K0Class::zero)
    }

    /// The stored `(level, class)` pairs in level order.
    pub fn pieces(&self) -> impl Iterator<Item = (&u32, &K0Class)> {
        self.pieces.iter()
    }

    /// The deepest level stored.
    pub fn max_level(&self) -> u32 {
        self.pieces.keys().next_back().copied().unwrap_or(0)
    }

    /// The class `[U_n] = Σ_{k≤n} [U[k]]` of the level-`n` quotient.
    pub fn truncated_sum(&self, n: u32) -> K0Class {
        self.pieces
            .iter()
            .filter(|(k, _)| **k <= n)
            .fold(K0Class::zero(), |acc, (_, c)| acc.add(c))
    }
}

/// All multiplicity vectors `(n_1, …, n_{k-1})` with `Σ i·n_i = k`, in
/// lexicographic order. These index the nontrivial partitions of `k`.
fn partition_vectors(k: u32) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, part: u32, remaining: u32, max_part: u32, out: &mut Vec<Vec<u32>>) {
        if part > max_part {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for count in 0..=(remaining / part) {
            prefix.push(count);
            extend(prefix, part + 1, remaining - part * count, max_part, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 {
        extend(&mut Vec::new(), 1, k, k - 1, &mut out);
    }
    out
}

/// The level-`k` part of the symmetric algebra on the lower pieces:
/// `Σ over partitions Σ i·n_i = k of Π_j Sym^(n_j)(U[j])`.
pub fn sym_partition_term(pieces: &GradedLieClass, k: u32) -> K0Class {
    let mut out = K0Class::zero();
    for counts in partition_vectors(k) {
        let mut term = K0Class::one();
        for (idx, &n) in counts.iter().enumerate() {
            if n == 0 {
                continue;
            }
            let level = idx as u32 + 1;
            let sym = sym_power(&pieces.piece(level), n)
                .expect("graded pieces are genuine representations");
            term = mul(&term, &sym);
        }
        out = out.add(&term);
    }
    out
}

/// The affine graded pieces through level `n` by the free-Lie recursion.
pub fn affine_graded_pieces(h1: &K0Class, n: u32) -> GradedLieClass {
    let mut out = GradedLieClass::default();
    for k in 1..=n {
        let piece = if k == 1 {
            h1.clone()
        } else {
            power(h1, k).sub(&sym_partition_term(&out, k))
        };
        out.pieces.insert(k, piece);
    }
    out
}

/// The projective graded pieces for genus `g ≥ 2`, defined through level 3:
/// the affine values minus `[M_{0,1}]` at level 2 and minus `g·[M_{1,1}]`
/// at level 3.
pub fn projective_graded_pieces(g: u32, n: u32) -> Result<GradedLieClass, FundGrpError> {
    if g < 2 {
        return Err(FundGrpError::GenusTooSmall);
    }
    if n > 3 {
        return Err(FundGrpError::LevelNotCovered);
    }
    let h1 = K0Class::irr(1, 0).scale(g as i64);
    let mut out = affine_graded_pieces(&h1, n);
    if let Some(piece) = out.pieces.get_mut(&2) {
        *piece = piece.sub(&K0Class::irr(0, 1));
    }
    if let Some(piece) = out.pieces.get_mut(&3) {
        *piece = piece.sub(&K0Class::irr(1, 1).scale(g as i64));
    }
    Ok(out)
}

/// The quadratic piece `[U_Q] = [U[1]] + m·[M_{0,1}]`, where `m` is the
/// multiplicity of `[M_{0,1}]` in `[U[2]]` for the given shape.
pub fn quadratic_chabauty_piece(shape: &CurveShape) -> Result<K0Class, FundGrpError> {
    let pieces = shape.graded_pieces(2)?;
    let m = pieces.piece(2).mult_of(&IrrClass::new(0, 1));
    Ok(pieces
        .piece(1)
        .add(&K0Class::irr(0, 1).scale(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> K0Class {
        s.parse().unwrap()
    }

    #[test]
    fn partition_counts() {
        // Partitions of k with all parts < k.
        assert_eq!(partition_vectors(1).len(), 0);
        assert_eq!(partition_vectors(2).len(), 1);
        assert_eq!(partition_vectors(3).len(), 2);
        assert_eq!(partition_vectors(4).len(), 4);
        assert_eq!(partition_vectors(5).len(), 6);
        // Lexicographic on (n_1, n_2, …).
        assert_eq!(partition_vectors(3), vec![vec![1, 1], vec![3, 0]]);
    }

    #[test]
    fn sym_partition_examples() {
        let mut pieces = GradedLieClass::default();
        pieces.pieces.insert(1, class("[M_{1,0}]"));
        pieces.pieces.insert(2, class("[M_{0,1}]"));
        assert_eq!(sym_partition_term(&pieces, 3), class("[M_{3,0}] + [M_{1,1}]"));
        assert_eq!(sym_partition_term(&pieces, 1), K0Class::zero());
    }

    #[test]
    fn punctured_elliptic_pieces() {
        let got = affine_graded_pieces(&class("[M_{1,0}]"), 4);
        assert_eq!(got.piece(1), class("[M_{1,0}]"));
        assert_eq!(got.piece(2), class("[M_{0,1}]"));
        assert_eq!(got.piece(3), class("[M_{1,1}]"));
        assert_eq!(got.piece(4), class("[M_{2,1}]"));
    }

    #[test]
    fn level_four_partition_term_for_punctured_elliptic() {
        let pieces = affine_graded_pieces(&class("[M_{1,0}]"), 3);
        assert_eq!(
            sym_partition_term(&pieces, 4),
            class("[M_{4,0}] + 2[M_{2,1}] + 2[M_{0,2}]")
        );
    }

    #[test]
    fn affine_genus_two_pieces() {
        let got = affine_graded_pieces(&class("2[M_{1,0}]"), 3);
        assert_eq!(got.piece(2), class("[M_{2,0}] + 3[M_{0,1}]"));
        assert_eq!(got.piece(3), class("2[M_{3,0}] + 6[M_{1,1}]"));
    }

    #[test]
    fn projective_pieces() {
        let got = projective_graded_pieces(2, 3).unwrap();
        assert_eq!(got.piece(1), class("2[M_{1,0}]"));
        assert_eq!(got.piece(2), class("[M_{2,0}] + 2[M_{0,1}]"));
        assert_eq!(got.piece(3), class("2[M_{3,0}] + 4[M_{1,1}]"));

        let got = projective_graded_pieces(4, 3).unwrap();
        assert_eq!(got.piece(2), class("6[M_{2,0}] + 9[M_{0,1}]"));
        assert_eq!(got.piece(3), class("20[M_{3,0}] + 40[M_{1,1}]"));

        assert_eq!(projective_graded_pieces(1, 3), Err(FundGrpError::GenusTooSmall));
        assert_eq!(projective_graded_pieces(2, 4), Err(FundGrpError::LevelNotCovered));
    }

    #[test]
    fn quadratic_piece() {
        assert_eq!(
            quadratic_chabauty_piece(&CurveShape::Projective(2)).unwrap(),
            class("2[M_{1,0}] + 2[M_{0,1}]")
        );
        assert_eq!(
            quadratic_chabauty_piece(&CurveShape::Projective(4)).unwrap(),
            class("4[M_{1,0}] + 9[M_{0,1}]")
        );
        // For the punctured elliptic curve the quadratic piece is all of U_2.
        let affine = CurveShape::affine_mixed_elliptic(1);
        let u2 = affine.graded_pieces(2).unwrap().truncated_sum(2);
        assert_eq!(quadratic_chabauty_piece(&affine).unwrap(), u2);
        assert_eq!(u2, class("[M_{1,0}] + [M_{0,1}]"));
    }

    #[test]
    fn shape_validation() {
        let shape = CurveShape::Affine(class("[M_{2,0}]"));
        assert_eq!(shape.mixed_elliptic_genus(), Err(FundGrpError::NotMixedElliptic));
        assert_eq!(
            CurveShape::affine_mixed_elliptic(3).mixed_elliptic_genus(),
            Ok(3)
        );
        assert_eq!(CurveShape::Projective(2).mixed_elliptic_genus(), Ok(2));
    }
}
