//! The p-adic special-value sum built from a symbol table and a unit root.
//!
//! The measure of a unit index `a` at level `n` is
//! `μ(a) = φ(a·p^{−n})·α^{−n} − α^{−n−1}·φ(a·p^{−n+1})`, with the unit
//! root `α` passed explicitly rather than read from ambient state, and
//! the special value is the sum of `a·μ(a)` over `a` in `[0, p^prec)`
//! coprime to `p`. Exact scalars enter the arithmetic at the relative
//! precision of `α`, so all precision bookkeeping is driven by the
//! lifted root.

use crate::error::PadicError;
use crate::frobenius::{hensel_unit_root, FrobeniusData};
use crate::padic::{rational_valuation, PadicNumber, Rational};
use crate::symbols::{term_range, ModularSymbolTable};
use num_bigint::BigInt;
use std::thread;

/// Ranges at most this long are summed on the calling thread.
const SEQUENTIAL_CUTOFF: u64 = 4096;

/// Injects an exact scalar at the relative precision `rel`, placing its
/// absolute precision at `valuation + rel` so products against a unit of
/// relative precision `rel` lose nothing.
fn embed_exact(p: u64, rel: i64, q: &Rational) -> PadicNumber {
    match rational_valuation(p, q) {
        None => PadicNumber::zero(p, rel).expect("prime was validated upstream"),
        Some(v) => PadicNumber::from_rational(p, v + rel, q).expect("prime was validated upstream"),
    }
}

/// The measure `μ(a) = φ(a·p^{−n})·α^{−n} − α^{−n−1}·φ(a·p^{−n+1})`.
pub fn mu(
    a: u64,
    p: u64,
    n: u32,
    phi: &ModularSymbolTable,
    alpha: &PadicNumber,
) -> Result<PadicNumber, PadicError> {
    if alpha.prime() != p {
        return Err(PadicError::PrimeMismatch {
            expected: p,
            found: alpha.prime(),
        });
    }
    if n == 0 {
        return Err(PadicError::InvalidPrecision { prec: 0 });
    }
    if a % p == 0 {
        return Err(PadicError::NotCoprime { a, p });
    }
    let deep_arg = Rational::new(BigInt::from(a), BigInt::from(p).pow(n));
    let shallow_arg = Rational::new(BigInt::from(a), BigInt::from(p).pow(n - 1));
    let deep_value = phi.evaluate(&deep_arg)?.clone();
    let shallow_value = phi.evaluate(&shallow_arg)?.clone();
    let rel = alpha.relative_precision();
    let exponent = i64::from(n);
    let deep = embed_exact(p, rel, &deep_value) * alpha.pow(-exponent)?;
    let shallow = alpha.pow(-exponent - 1)? * embed_exact(p, rel, &shallow_value);
    Ok(deep - shallow)
}

/// Sums `a·μ(a)` over the coprime indices of `[lo, hi)`, ascending;
/// `None` when the range holds no coprime index.
fn partial_sum(
    lo: u64,
    hi: u64,
    p: u64,
    prec: u32,
    phi: &ModularSymbolTable,
    alpha: &PadicNumber,
) -> Result<Option<PadicNumber>, PadicError> {
    let rel = alpha.relative_precision();
    let mut acc: Option<PadicNumber> = None;
    for a in lo..hi {
        if a % p == 0 {
            continue;
        }
        let weight = embed_exact(p, rel, &Rational::from(BigInt::from(a)));
        let term = weight * mu(a, p, prec, phi, alpha)?;
        acc = Some(match acc {
            None => term,
            Some(sum) => sum + term,
        });
    }
    Ok(acc)
}

/// The special-value sum `Σ a·μ(a, p, prec, φ, α)` over `a` in
/// `[0, p^prec)` coprime to `p`, with `α` the Hensel lift of the unit
/// root of `x² − a_p·x + p` at precision `prec`.
///
/// Coverage of the table is verified before any term is evaluated. Long
/// ranges are split into contiguous chunks summed in parallel; chunk
/// results are combined in ascending order, so the outcome is identical
/// to the sequential left-to-right sum.
pub fn mazur_stickelberger_sum(
    fd: &FrobeniusData,
    phi: &ModularSymbolTable,
    prec: u32,
) -> Result<PadicNumber, PadicError> {
    let p = fd.prime();
    phi.check_coverage(p, prec)?;
    let alpha = hensel_unit_root(fd, prec)?;
    let range = term_range(p, prec)?;

    if range <= SEQUENTIAL_CUTOFF {
        return Ok(partial_sum(0, range, p, prec, phi, &alpha)?
            .expect("the index 1 always contributes"));
    }

    let workers = thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8) as u64;
    let chunk = range.div_ceil(workers);
    let partials = thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let lo = w * chunk;
            let hi = ((w + 1) * chunk).min(range);
            let alpha = &alpha;
            handles.push(scope.spawn(move || partial_sum(lo, hi.max(lo), p, prec, phi, alpha)));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("summation worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;

    let mut acc: Option<PadicNumber> = None;
    for part in partials.into_iter().flatten() {
        acc = Some(match acc {
            None => part,
            Some(sum) => sum + part,
        });
    }
    Ok(acc.expect("the index 1 always contributes"))
}

/// Whether `x` is distinguishable from zero at its stated precision.
pub fn is_nonzero_at_precision(x: &PadicNumber) -> bool {
    x.is_nonzero_at_precision()
}
