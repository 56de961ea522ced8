//! Independent derivation of the closed forms: set up the coefficients
//! `phi_lam^w` as unknowns and solve the Hopf-map and equivariance
//! constraints weight by weight.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use shuffle::Letter::{E0, E1, Pi0, Sigma0, Tau};
use shuffle::{
    gl2_act, shuffle_product, Alphabet, Coeff, GL2Element, Letter, ShuffleElem, Word,
};

use crate::error::CocycleError;
use crate::wpoly::{WMonomial, WPolynomial};

/// A scalar polynomial in `w1, w2, w3`: the value of one coefficient
/// `phi_lam^w` across the whole solution family.
pub type WScalar = BTreeMap<WMonomial, Coeff>;

fn ws_add_assign(acc: &mut WScalar, other: &WScalar) {
    for (m, c) in other {
        let cur = acc.remove(m).unwrap_or_else(Coeff::zero) + c;
        if !cur.is_zero() {
            acc.insert(*m, cur);
        }
    }
}

fn ws_scale(c: &Coeff, p: &WScalar) -> WScalar {
    if c.is_zero() {
        return WScalar::new();
    }
    p.iter().map(|(m, v)| (*m, c * v)).collect()
}

fn ws_mul(p: &WScalar, q: &WScalar) -> WScalar {
    let mut out = WScalar::new();
    for ((m1, c1), (m2, c2)) in p.iter().flat_map(|t1| q.iter().map(move |t2| (t1, t2))) {
        let m = (m1.0 + m2.0, m1.1 + m2.1, m1.2 + m2.2);
        let cur = out.remove(&m).unwrap_or_else(Coeff::zero) + c1 * c2;
        if !cur.is_zero() {
            out.insert(m, cur);
        }
    }
    out
}

/// The torus character of a word: the bidegree by which the diagonal
/// element `diag(x1, x2)` scales it.
fn torus_character(w: &Word) -> (u32, u32) {
    let mut ch = (0, 0);
    for &l in w.letters() {
        let (a, b) = match l {
            Letter::E0 | Letter::Pi0 => (1, 0),
            Letter::E1 | Letter::Pi1 => (0, 1),
            Letter::Tau => (1, 1),
            Letter::Sigma0 => (2, 1),
            Letter::Sigma1 => (1, 2),
        };
        ch.0 += a;
        ch.1 += b;
    }
    ch
}

/// A reduced row echelon form over the rationals, maintained incrementally,
/// with right-hand sides valued in `Q[w1, w2, w3]`.
///
/// A pivot entry at column `c` stores the rest of the row `x_c + r·x = b`
/// with the unit pivot coefficient removed.
struct Rref {
    weight: u32,
    pivots: BTreeMap<usize, (BTreeMap<usize, Coeff>, WScalar)>,
}

impl Rref {
    fn new(weight: u32) -> Rref {
        Rref {
            weight,
            pivots: BTreeMap::new(),
        }
    }

    /// Reduces one equation `row·x = rhs` against the current pivots and
    /// absorbs it, keeping the form fully reduced.
    fn insert(
        &mut self,
        mut row: BTreeMap<usize, Coeff>,
        mut rhs: WScalar,
    ) -> Result<(), CocycleError> {
        row.retain(|_, c| !c.is_zero());
        loop {
            let Some(c) = row.keys().find(|c| self.pivots.contains_key(*c)).copied() else {
                break;
            };
            let f = row.remove(&c).expect("found above");
            let (pr, pb) = &self.pivots[&c];
            let (pr, pb) = (pr.clone(), pb.clone());
            for (cc, vv) in &pr {
                let cur = row.remove(cc).unwrap_or_else(Coeff::zero) - &f * vv;
                if !cur.is_zero() {
                    row.insert(*cc, cur);
                }
            }
            ws_add_assign(&mut rhs, &ws_scale(&-f, &pb));
        }
        if row.is_empty() {
            if rhs.is_empty() {
                return Ok(());
            }
            return Err(CocycleError::InconsistentSystem {
                weight: self.weight,
            });
        }
        let c0 = *row.keys().next().expect("nonempty");
        let f = row.remove(&c0).expect("leading entry");
        let row: BTreeMap<usize, Coeff> = row.iter().map(|(c, v)| (*c, v / &f)).collect();
        let rhs = ws_scale(&(Coeff::one() / f), &rhs);
        for (pr, pb) in self.pivots.values_mut() {
            let Some(f2) = pr.remove(&c0) else { continue };
            for (cc, vv) in &row {
                let cur = pr.remove(cc).unwrap_or_else(Coeff::zero) - &f2 * vv;
                if !cur.is_zero() {
                    pr.insert(*cc, cur);
                }
            }
            ws_add_assign(pb, &ws_scale(&-f2, &rhs));
        }
        self.pivots.insert(c0, (row, rhs));
        Ok(())
    }

    fn free_columns(&self, ncols: usize) -> Vec<usize> {
        (0..ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    /// Evaluates the solution once the free columns have been assigned.
    fn solve(&self, ncols: usize, free: &BTreeMap<usize, WScalar>) -> Vec<WScalar> {
        let mut sol = vec![WScalar::new(); ncols];
        for (c, v) in free {
            sol[*c] = v.clone();
        }
        for (c, (pr, pb)) in &self.pivots {
            let mut v = pb.clone();
            for (cc, vv) in pr {
                ws_add_assign(&mut v, &ws_scale(&-vv.clone(), &sol[*cc]));
            }
            sol[*c] = v;
        }
        sol
    }
}

/// A solved family of weight-preserving equivariant cocycle coefficients,
/// linear in one parameter per weight slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleFamily {
    max_weight: u32,
    parameters: Vec<WMonomial>,
    phi: BTreeMap<(Word, Word), WScalar>,
}

impl CocycleFamily {
    /// The largest weight slice solved.
    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    /// The free parameters of the family, one per weight, in the
    /// normalization `w1 = phi_e0^pi0`, `w2 = phi_e0e1^tau`,
    /// `w3 = phi_e0e1e0^sigma0`.
    pub fn parameters(&self) -> &[WMonomial] {
        &self.parameters
    }

    /// The coefficient `phi_lam^w` as a polynomial in the parameters.
    pub fn phi(&self, lam: &Word, w: &Word) -> WScalar {
        self.phi.get(&(lam.clone(), w.clone())).cloned().unwrap_or_default()
    }

    /// Reassembles the full evaluation of a source word from the solved
    /// coefficients.
    pub fn closed_form(&self, lam: &Word) -> WPolynomial {
        if lam.is_empty() {
            return WPolynomial::one();
        }
        let mut out = WPolynomial::zero();
        for ((l, w), val) in &self.phi {
            if l != lam {
                continue;
            }
            for (m, c) in val {
                out.add_term(*m, ShuffleElem::term(w.clone(), c.clone()));
            }
        }
        out
    }
}

/// Solves for all weight-preserving maps that commute with deconcatenation
/// and the shuffle product and are equivariant for the group generators,
/// one weight slice at a time up to `max_weight ≤ 3`.
///
/// Each slice must contribute exactly one new parameter; anything else is
/// reported as an error rather than patched over.
pub fn solve_equivariant_cocycles(max_weight: u32) -> Result<CocycleFamily, CocycleError> {
    if max_weight > 3 {
        return Err(CocycleError::WeightTooLarge { weight: max_weight });
    }
    let parameters = [(1, 0, 0), (0, 1, 0), (0, 0, 1)];
    let distinguished = [
        (vec![E0], vec![Pi0]),
        (vec![E0, E1], vec![Tau]),
        (vec![E0, E1, E0], vec![Sigma0]),
    ];
    let mut phi: BTreeMap<(Word, Word), WScalar> = BTreeMap::new();
    for n in 1..=max_weight {
        let lams = Word::all_of_weight(Alphabet::E, n);
        let ws = Word::all_of_weight(Alphabet::A, n);
        let unknowns: Vec<(Word, Word)> = lams
            .iter()
            .flat_map(|l| ws.iter().map(move |w| (l.clone(), w.clone())))
            .filter(|(l, w)| torus_character(l) == torus_character(w))
            .collect();
        let idx: BTreeMap<&(Word, Word), usize> =
            unknowns.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let col_of = |l: &Word, w: &Word| idx.get(&(l.clone(), w.clone())).copied();
        let mut rref = Rref::new(n);

        // Compatibility with deconcatenation: for every proper split of the
        // target word, the coefficient is determined by lower weights.
        for lam in &lams {
            for w in &ws {
                for (u, v) in w.splits() {
                    if u.is_empty() || v.is_empty() {
                        continue;
                    }
                    let mut rhs = WScalar::new();
                    for (pre, suf) in lam.splits() {
                        if pre.weight() != u.weight() || suf.weight() != v.weight() {
                            continue;
                        }
                        if let (Some(pu), Some(pv)) =
                            (phi.get(&(pre, u.clone())), phi.get(&(suf, v.clone())))
                        {
                            ws_add_assign(&mut rhs, &ws_mul(pu, pv));
                        }
                    }
                    let mut row = BTreeMap::new();
                    if let Some(c) = col_of(lam, w) {
                        row.insert(c, Coeff::one());
                    }
                    rref.insert(row, rhs)?;
                }
            }
        }

        // Multiplicativity for the shuffle product, with both factors of
        // lower weight (so the right-hand side is already solved).
        for m1 in 1..n {
            let m2 = n - m1;
            if m1 > m2 {
                continue;
            }
            for a in Word::all_of_weight(Alphabet::E, m1) {
                for b in Word::all_of_weight(Alphabet::E, m2) {
                    let lhs = shuffle_product(
                        &ShuffleElem::from_word(a.clone()),
                        &ShuffleElem::from_word(b.clone()),
                    )
                    .expect("same alphabet");
                    let mut rhs_by_word: BTreeMap<Word, WScalar> = BTreeMap::new();
                    for ((_, wa), pa) in phi.iter().filter(|((l, _), _)| l == &a) {
                        for ((_, wb), pb) in phi.iter().filter(|((l, _), _)| l == &b) {
                            let prod = ws_mul(pa, pb);
                            let sh = shuffle_product(
                                &ShuffleElem::from_word(wa.clone()),
                                &ShuffleElem::from_word(wb.clone()),
                            )
                            .expect("same alphabet");
                            for (w, c) in sh.terms() {
                                ws_add_assign(
                                    rhs_by_word.entry(w.clone()).or_default(),
                                    &ws_scale(c, &prod),
                                );
                            }
                        }
                    }
                    for w in &ws {
                        let mut row: BTreeMap<usize, Coeff> = BTreeMap::new();
                        for (lam, c) in lhs.terms() {
                            if let Some(col) = col_of(lam, w) {
                                let cur =
                                    row.remove(&col).unwrap_or_else(Coeff::zero) + c;
                                row.insert(col, cur);
                            }
                        }
                        let rhs = rhs_by_word.get(w).cloned().unwrap_or_default();
                        rref.insert(row, rhs)?;
                    }
                }
            }
        }

        // Equivariance under the swap and the unipotent; the torus is
        // already built in through the character matching of the unknowns.
        for g in [GL2Element::S, GL2Element::N] {
            let target_images: Vec<ShuffleElem> = ws
                .iter()
                .map(|w2| gl2_act(&g, &ShuffleElem::from_word(w2.clone())))
                .collect();
            for lam in &lams {
                let source_image = gl2_act(&g, &ShuffleElem::from_word(lam.clone()));
                for w in &ws {
                    let mut row: BTreeMap<usize, Coeff> = BTreeMap::new();
                    for (l2, c) in source_image.terms() {
                        if let Some(col) = col_of(l2, w) {
                            let cur = row.remove(&col).unwrap_or_else(Coeff::zero) + c;
                            row.insert(col, cur);
                        }
                    }
                    for (w2, image) in ws.iter().zip(&target_images) {
                        if let Some(col) = col_of(lam, w2) {
                            let c = image.coeff_of(w);
                            if !c.is_zero() {
                                let cur = row.remove(&col).unwrap_or_else(Coeff::zero) - c;
                                row.insert(col, cur);
                            }
                        }
                    }
                    rref.insert(row, WScalar::new())?;
                }
            }
        }

        let free = rref.free_columns(unknowns.len());
        if free.len() != 1 {
            return Err(CocycleError::KernelDimension {
                weight: n,
                found: free.len(),
            });
        }
        let pm = parameters[(n - 1) as usize];
        let seed = BTreeMap::from([(free[0], WScalar::from([(pm, Coeff::one())]))]);
        let sol = rref.solve(unknowns.len(), &seed);

        // Rescale and shear the slice so the distinguished coordinate is
        // exactly the new parameter.
        let (dl, dw) = &distinguished[(n - 1) as usize];
        let d_pair = (
            Word::new(dl.clone()).expect("fixed word"),
            Word::new(dw.clone()).expect("fixed word"),
        );
        let di = *idx.get(&d_pair).expect("distinguished pair has matching character");
        let mut d_val = sol[di].clone();
        let Some(ker_d) = d_val.remove(&pm) else {
            return Err(CocycleError::NormalizationFailed { weight: n });
        };
        for (u, v) in unknowns.iter().zip(&sol) {
            let mut val = v.clone();
            let ker = val.remove(&pm).unwrap_or_else(Coeff::zero);
            let ratio = ker / &ker_d;
            let mut shift = ws_scale(&-ratio.clone(), &d_val);
            if !ratio.is_zero() {
                shift.insert(pm, ratio);
            }
            ws_add_assign(&mut val, &shift);
            if !val.is_empty() {
                phi.insert(u.clone(), val);
            }
        }
    }
    Ok(CocycleFamily {
        max_weight,
        parameters: parameters[..max_weight as usize].to_vec(),
        phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use shuffle::coeff;

    #[test]
    fn rref_solves_a_two_by_two_system() {
        let mut r = Rref::new(1);
        let w1 = (1, 0, 0);
        r.insert(
            BTreeMap::from([(0, coeff(1)), (1, coeff(1))]),
            WScalar::from([(w1, coeff(1))]),
        )
        .unwrap();
        r.insert(BTreeMap::from([(0, coeff(1)), (1, coeff(-1))]), WScalar::new())
            .unwrap();
        assert!(r.free_columns(2).is_empty());
        let half = WScalar::from([(w1, shuffle::coeff_ratio(1, 2))]);
        assert_eq!(r.solve(2, &BTreeMap::new()), vec![half.clone(), half]);
    }

    #[test]
    fn rref_detects_inconsistency() {
        let mut r = Rref::new(2);
        r.insert(BTreeMap::from([(0, coeff(1))]), WScalar::new()).unwrap();
        let clash = r.insert(
            BTreeMap::from([(0, coeff(1))]),
            WScalar::from([((1, 0, 0), coeff(1))]),
        );
        assert_eq!(clash, Err(CocycleError::InconsistentSystem { weight: 2 }));
    }

    #[test]
    fn weight_one_slice_is_kronecker() {
        let fam = solve_equivariant_cocycles(1).unwrap();
        assert_eq!(fam.parameters(), &[(1, 0, 0)]);
        for (i, e) in [(0, Letter::E0), (1, Letter::E1)] {
            for (j, pi) in [(0, Letter::Pi0), (1, Letter::Pi1)] {
                let got = fam.phi(&Word::letter(e), &Word::letter(pi));
                let want = if i == j {
                    WScalar::from([((1, 0, 0), coeff(1))])
                } else {
                    WScalar::new()
                };
                assert_eq!(got, want, "phi_e{i}^pi{j}");
            }
        }
    }

    #[test]
    fn rejects_untabulated_weight() {
        assert_eq!(
            solve_equivariant_cocycles(4),
            Err(CocycleError::WeightTooLarge { weight: 4 })
        );
    }
}
