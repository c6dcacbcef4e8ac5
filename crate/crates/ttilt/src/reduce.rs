//! Central-radical quotients and opposite algebras, which leave the
//! two-term silting poset unchanged.

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::hasse::{hasse_enumerate, HasseOptions, Verdict};

#[derive(Clone, Debug)]
pub struct ReductionStep {
    /// Basis of center ∩ radical that was killed.
    pub killed: Vec<Elem>,
    pub killed_text: Vec<String>,
    /// Dimension after the quotient.
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub original: Algebra,
    pub steps: Vec<ReductionStep>,
    pub reduced: Algebra,
}

/// Quotient by the whole of center ∩ radical until it vanishes.
pub fn central_radical_reduce(alg: &Algebra) -> Result<ReductionTrace> {
    let mut cur = alg.clone();
    let mut steps = Vec::new();
    loop {
        let killed = cur.center_radical_basis();
        if killed.is_empty() {
            break;
        }
        let next = cur.quotient(&killed)?;
        if next.dim() >= cur.dim() {
            break;
        }
        let killed_text = killed.iter().map(|z| cur.format_elem(z)).collect();
        steps.push(ReductionStep { killed, killed_text, dim: next.dim() });
        cur = next;
    }
    Ok(ReductionTrace { original: alg.clone(), steps, reduced: cur })
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub left: Verdict,
    pub right: Verdict,
    pub pass: bool,
}

fn finite_pair(a: &Algebra, b: &Algebra, opts: &HasseOptions) -> Result<(Verdict, Verdict)> {
    let (_, va) = hasse_enumerate(a, opts)?;
    let (_, vb) = hasse_enumerate(b, opts)?;
    for (alg, v) in [(a, &va), (b, &vb)] {
        if !v.is_finite() {
            return Err(Error::UndecidedEither(format!("{}: {}", alg.name, v.kind())));
        }
    }
    Ok((va, vb))
}

/// Enumerate the algebra and its full reduction; count and type must agree.
pub fn verify_reduction(alg: &Algebra, opts: &HasseOptions) -> Result<(ReductionTrace, ComparisonReport)> {
    let trace = central_radical_reduce(alg)?;
    let (left, right) = finite_pair(alg, &trace.reduced, opts)?;
    let pass = left == right;
    Ok((trace, ComparisonReport { left, right, pass }))
}

/// Enumerate `Λ` and `Λ^op`. Types are stored as `(min, max)`, so equality
/// already allows the swap `H(m,n) <-> H(n,m)`.
pub fn compare_opposite(alg: &Algebra, opts: &HasseOptions) -> Result<ComparisonReport> {
    let op = alg.opposite()?;
    let (left, right) = finite_pair(alg, &op, opts)?;
    let pass = match (&left, &right) {
        (Verdict::Finite { count: a, .. }, Verdict::Finite { count: b, .. }) => a == b,
        _ => false,
    };
    Ok(ComparisonReport { left, right, pass })
}
