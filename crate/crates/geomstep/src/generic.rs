//! Order-free elimination: set up unknown coefficients on a list of
//! `J`-monomials and solve for every combination that evaluates to zero.

use std::collections::BTreeMap;

use cocycle::{WMonomial, WPolynomial};
use num_traits::{One, Zero};
use shuffle::{shuffle_product, Alphabet, Coeff, ShuffleElem, Word};

use crate::element::CKElement;
use crate::error::GeomError;
use crate::monomial::JMonomial;

/// Solves the ansatz `Σ γ_m · m = 0` (under evaluation) with unknown
/// `γ_m` of weight at most `coeff_weight_bound`, returning a basis of the
/// solution space as denominator-free elements.
///
/// The constraint system is graded: rows only couple coefficient words of
/// equal weight, because in any evaluation the word weight of a term
/// matches the weight of its `w`-monomial. Each weight is therefore solved
/// separately and the bases concatenated, so every returned element has
/// coefficients of one homogeneous weight.
pub fn generic_eliminate(
    monomials: &[JMonomial],
    coeff_weight_bound: u32,
) -> Result<Vec<CKElement>, GeomError> {
    if monomials.is_empty() {
        return Err(GeomError::EmptyMonomialList);
    }
    let evaluations = monomials
        .iter()
        .map(|m| m.evaluate())
        .collect::<Result<Vec<_>, _>>()?;
    let mut basis = Vec::new();
    for weight in 0..=coeff_weight_bound {
        basis.extend(solve_stratum(monomials, &evaluations, weight)?);
    }
    Ok(basis)
}

/// Solves the homogeneous stratum where every `γ_m` has the given weight.
fn solve_stratum(
    monomials: &[JMonomial],
    evaluations: &[WPolynomial],
    weight: u32,
) -> Result<Vec<CKElement>, GeomError> {
    let words = Word::all_of_weight(Alphabet::A, weight);
    let ncols = monomials.len() * words.len();

    // One row per (w-monomial, target word); the entry at column (m, u) is
    // the coefficient of the target word in u ⧢ (that part of eval(m)).
    let mut rows: BTreeMap<(WMonomial, Word), BTreeMap<usize, Coeff>> = BTreeMap::new();
    for (mi, p) in evaluations.iter().enumerate() {
        for (mu, e) in p.terms() {
            for (pw, c) in e.terms() {
                for (ui, u) in words.iter().enumerate() {
                    let col = mi * words.len() + ui;
                    let sh = shuffle_product(
                        &ShuffleElem::from_word(u.clone()),
                        &ShuffleElem::from_word(pw.clone()),
                    )?;
                    for (v, cv) in sh.terms() {
                        let row = rows.entry((*mu, v.clone())).or_default();
                        let cur = row.remove(&col).unwrap_or_else(Coeff::zero) + c * cv;
                        if !cur.is_zero() {
                            row.insert(col, cur);
                        }
                    }
                }
            }
        }
    }

    // Forward elimination only; the system is homogeneous, so no
    // inconsistency can arise and back-substitution is deferred to the
    // kernel extraction.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Coeff>> = BTreeMap::new();
    for (_, mut row) in rows {
        loop {
            let Some((&lead, _)) = row.first_key_value() else {
                break;
            };
            let Some(pivot_row) = pivots.get(&lead) else {
                let f = row.remove(&lead).expect("leading entry");
                let normalized: BTreeMap<usize, Coeff> =
                    row.iter().map(|(c, v)| (*c, v / &f)).collect();
                pivots.insert(lead, normalized);
                break;
            };
            let f = row.remove(&lead).expect("leading entry");
            for (c, v) in pivot_row {
                let cur = row.remove(c).unwrap_or_else(Coeff::zero) - &f * v;
                if !cur.is_zero() {
                    row.insert(*c, cur);
                }
            }
        }
    }

    // Kernel basis: one solution per free column, solved bottom-up.
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains_key(c)) {
        let mut x: BTreeMap<usize, Coeff> = BTreeMap::from([(free, Coeff::one())]);
        for (p, row) in pivots.iter().rev() {
            let mut acc = Coeff::zero();
            for (c, v) in row {
                if let Some(xc) = x.get(c) {
                    acc += v * xc;
                }
            }
            if !acc.is_zero() {
                x.insert(*p, -acc);
            }
        }
        let mut coeffs: BTreeMap<JMonomial, ShuffleElem> = BTreeMap::new();
        for (col, value) in x {
            let (mi, ui) = (col / words.len(), col % words.len());
            let entry = coeffs.entry(monomials[mi]).or_insert_with(ShuffleElem::zero);
            entry.add_term(words[ui].clone(), value);
        }
        out.push(CKElement::new(coeffs));
    }
    Ok(out)
}
