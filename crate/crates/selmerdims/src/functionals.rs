//! Linear extensions of the dimension formulas and the finiteness check.

use k0ring::K0Class;

use crate::context::SelmerContext;
use crate::dims::{d_s, l_local};
use crate::error::SelmerError;

fn linear<F>(x: &K0Class, mut per_term: F) -> Result<i64, SelmerError>
where
    F: FnMut(u32, i32) -> Result<i64, SelmerError>,
{
    let mut total = 0i64;
    for (irr, &mult) in x.terms() {
        total += mult * per_term(irr.a, irr.b)?;
    }
    Ok(total)
}

/// The global dimension functional `d` with `S` empty, extended linearly
/// over the terms of `x`.
pub fn d_functional(x: &K0Class, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    let plain = ctx.without_s();
    linear(x, |a, b| d_s(a, b, &plain))
}

/// The local dimension functional `l`, extended linearly over the terms
/// of `x`.
pub fn l_functional(x: &K0Class, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    linear(x, |a, b| l_local(a, b, ctx))
}

/// The difference functional `c = l - d` with `S` empty.
pub fn c_functional(x: &K0Class, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    Ok(l_functional(x, ctx)? - d_functional(x, ctx)?)
}

/// The `S`-level global dimension functional `d^S`, extended linearly over
/// the terms of `x`.
pub fn d_s_functional(x: &K0Class, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    linear(x, |a, b| d_s(a, b, ctx))
}

/// The `S`-level difference functional `c^S = l - d^S`.
pub fn c_s_functional(x: &K0Class, ctx: &SelmerContext) -> Result<i64, SelmerError> {
    Ok(l_functional(x, ctx)? - d_s_functional(x, ctx)?)
}

/// Evaluates the finiteness inequality for the quotient with class `x`:
/// returns `(c^S(x) > 0, c^S(x))`. A positive margin means the method
/// predicts a finite locus at this level; with `S` empty the margin is the
/// plain `c(x)`.
pub fn check_finiteness(x: &K0Class, ctx: &SelmerContext) -> Result<(bool, i64), SelmerError> {
    let margin = c_s_functional(x, ctx)?;
    Ok((margin > 0, margin))
}

/// One row of a dimension table: an irreducible term with its multiplicity
/// and the per-copy values of `d^S`, `l`, and `c^S = l - d^S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermDims {
    /// Symmetric-power index of the term.
    pub a: u32,
    /// Twist index of the term.
    pub b: i32,
    /// Multiplicity of the term in the class.
    pub mult: i64,
    /// The `S`-level global dimension of one copy.
    pub d: i64,
    /// The local dimension of one copy.
    pub l: i64,
    /// The difference `l - d` for one copy.
    pub c: i64,
}

/// A dimension table for a class: one row per term plus multiplicity-weighted
/// totals and the finiteness verdict on the total difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    /// Per-term rows in the term order of the class.
    pub rows: Vec<TermDims>,
    /// The total `d^S` value, weighted by multiplicities.
    pub total_d: i64,
    /// The total `l` value, weighted by multiplicities.
    pub total_l: i64,
    /// The total `c^S` value, weighted by multiplicities.
    pub total_c: i64,
    /// Whether the total difference is positive.
    pub finite: bool,
}

/// Tabulates `d^S`, `l`, and `c^S` for every term of `x` and totals them.
pub fn dimension_report(x: &K0Class, ctx: &SelmerContext) -> Result<DimensionReport, SelmerError> {
    let mut rows = Vec::new();
    let (mut total_d, mut total_l) = (0i64, 0i64);
    for (irr, &mult) in x.terms() {
        let d = d_s(irr.a, irr.b, ctx)?;
        let l = l_local(irr.a, irr.b, ctx)?;
        rows.push(TermDims {
            a: irr.a,
            b: irr.b,
            mult,
            d,
            l,
            c: l - d,
        });
        total_d += mult * d;
        total_l += mult * l;
    }
    let total_c = total_l - total_d;
    Ok(DimensionReport {
        rows,
        total_d,
        total_l,
        total_c,
        finite: total_c > 0,
    })
}
