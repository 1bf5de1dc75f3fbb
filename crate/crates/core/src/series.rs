//! Series through their partial sums: closed forms for polynomial terms,
//! the convergence trichotomy, generalized sums as quotient scalars, the
//! bounds and shift invariance of the limit functional, and the computation
//! showing that no shift-invariant extension of the limit reaches `ν(n) = n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{Poly, Rat, RatFun};
use crate::quotient::Scalar;
use crate::report::Report;
use crate::seqrep::{BSeqVerdict, RSeq};
use crate::sets::FilterDescriptor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesVerdict {
    ConvergentSum(Rat),
    BoundedDivergent,
    UnboundedDivergent,
}

impl fmt::Display for SeriesVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesVerdict::ConvergentSum(c) => write!(f, "ConvergentSum({c})"),
            SeriesVerdict::BoundedDivergent => f.write_str("BoundedDivergent"),
            SeriesVerdict::UnboundedDivergent => f.write_str("UnboundedDivergent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("NonPolynomialTerms")]
    NonPolynomialTerms,
    #[error("SelfCheckFailed at n={0}")]
    SelfCheckFailed(u64),
}

/// `x(n) = s(0) + ... + s(n)` in closed form.
///
/// On each residue class past the last exception the partial sums are a
/// polynomial of degree at most `d + 1`, `d` the largest branch degree. That
/// polynomial is interpolated from `d + 2` directly summed points and then
/// compared with direct sums at `2(d + 2)` further points of the class; any
/// disagreement is a hard error. Earlier indices become exceptions.
pub fn partial_sums(s: &RSeq) -> Result<RSeq, SeriesError> {
    if !s.branches().iter().all(RatFun::is_polynomial) {
        return Err(SeriesError::NonPolynomialTerms);
    }
    let m = s.modulus();
    let d = s.branches().iter().filter_map(|f| f.num().degree()).max().unwrap_or(0) as u64;
    let fit = d + 2;
    let check = 2 * (d + 2);
    let start = s.max_exception().map_or(0, |k| k + 1);
    let end = start + m * (fit + check);

    let mut direct = Vec::with_capacity(end as usize);
    let mut acc = Rat::zero();
    for n in 0..end {
        acc += &s.eval(n);
        direct.push(acc.clone());
    }

    let mut branches = vec![RatFun::zero(); m as usize];
    for (r, branch) in branches.iter_mut().enumerate() {
        let first = start + (r as u64 + m - start % m) % m;
        let class = |j: u64| first + j * m;
        let points: Vec<(Rat, Rat)> = (0..fit)
            .map(|j| (Rat::from(class(j)), direct[class(j) as usize].clone()))
            .collect();
        let p = Poly::interpolate(&points);
        if let Some(bad) = (fit..fit + check).map(class).find(|&n| p.eval_at(n) != direct[n as usize]) {
            return Err(SeriesError::SelfCheckFailed(bad));
        }
        *branch = RatFun::from_poly(p);
    }
    let exceptions: BTreeMap<u64, Rat> = (0..start).map(|n| (n, direct[n as usize].clone())).collect();
    Ok(RSeq::new(m, branches, exceptions).expect("polynomial branches have no poles"))
}

pub fn classify_series(s: &RSeq) -> Result<SeriesVerdict, SeriesError> {
    Ok(match partial_sums(s)?.classify_bounded() {
        BSeqVerdict::Convergent(c) => SeriesVerdict::ConvergentSum(c),
        BSeqVerdict::BoundedDivergent => SeriesVerdict::BoundedDivergent,
        BSeqVerdict::Unbounded => SeriesVerdict::UnboundedDivergent,
    })
}

/// The value of the series `Σ s(n)` in the quotient algebra of `filter`: the
/// class of its partial sums.
pub fn generalized_sum(s: &RSeq, filter: &FilterDescriptor) -> Result<Scalar, SeriesError> {
    Ok(Scalar::new(partial_sums(s)?, filter.clone()))
}

/// The four computed facts behind the impossibility of a shift-invariant
/// extension of the limit to a space containing `ν(n) = n`:
/// (i) `ν` is unbounded; (ii) `ν⁺ − ν` is the constant sequence 1;
/// (iii) its limit is 1; (iv) in the Fréchet quotient the classes of `ν⁺`
/// and `ν` differ by `embed(1) ≠ 0`. A functional `L#` that is linear,
/// shift-invariant and extends the limit would give
/// `0 = L#(ν⁺) − L#(ν) = L#(ν⁺ − ν) = 1`.
pub fn shift_invariance_impossibility() -> Report {
    let mut report = Report::new("shift-impossibility");
    let nu = RSeq::identity();
    let diff = nu.shift().sub(&nu);

    let v = nu.classify_bounded();
    report.record(
        "i-nu-unbounded",
        format!("verdict={v:?}"),
        (v != BSeqVerdict::Unbounded).then(|| format!("verdict={v:?}")),
    );
    report.record(
        "ii-shift-difference",
        format!("shift(n) - n = {diff}"),
        (diff != RSeq::one()).then(|| diff.to_string()),
    );
    let lim = diff.limit();
    report.record(
        "iii-limit",
        format!("L(shift(n) - n) = {}", lim.as_ref().map_or("-".into(), Rat::to_string)),
        (lim != Ok(Rat::one())).then(|| format!("{lim:?}")),
    );

    let fr = FilterDescriptor::Frechet;
    let a = Scalar::new(nu.shift(), fr.clone()).sub(&Scalar::new(nu, fr.clone())).expect("same filter");
    let one = Scalar::one(fr.clone());
    let ok = a.scalar_eq(&one).expect("same filter") && !a.is_zero();
    report.record(
        "iv-quotient-difference",
        format!("[shift(n)] - [n] = {}", a.canonical_rep()),
        (!ok).then(|| a.canonical_rep().to_string()),
    );
    if report.passed() {
        report.pass("conclusion", "shift-invariant extension of L to n would force 0 = 1");
    }
    report
}

/// Bounds `inf x ≤ L(x) ≤ sup x` and shift invariance `L(x⁺) = L(x)` on
/// convergent samples.
pub fn banach_bounds_check(samples: &[RSeq]) -> Report {
    let mut report = Report::new("banach-bounds");
    let mut bounds = None;
    let mut shift = None;
    for x in samples {
        let Ok(l) = x.limit() else {
            bounds.get_or_insert_with(|| format!("not convergent: {x}"));
            continue;
        };
        let (inf, sup) = (x.inf_val(), x.sup_val());
        let within = matches!((&inf, &sup), (Ok(i), Ok(s)) if *i <= l && l <= *s);
        if !within {
            bounds.get_or_insert_with(|| format!("{x}: inf={inf:?} L={l} sup={sup:?}"));
        }
        let ls = x.shift().limit();
        if ls.as_ref() != Ok(&l) {
            shift.get_or_insert_with(|| format!("{x}: L={l} L(shift)={ls:?}"));
        }
    }
    report.record("bounds", format!("samples={}", samples.len()), bounds);
    report.record("shift-invariance", format!("samples={}", samples.len()), shift);
    report
}

/// Verdict predicted from the terms alone: all branches zero gives a finite
/// sum; all branches constant with zero sum over a period gives bounded
/// periodic partial sums; anything else grows without bound.
fn verdict_from_terms(s: &RSeq) -> SeriesVerdict {
    let consts: Option<Vec<Rat>> = s.branches().iter().map(RatFun::as_constant).collect();
    match consts {
        Some(c) if c.iter().all(Rat::is_zero) => {
            SeriesVerdict::ConvergentSum(s.exceptions().values().cloned().sum())
        }
        Some(c) if c.iter().cloned().sum::<Rat>().is_zero() => SeriesVerdict::BoundedDivergent,
        _ => SeriesVerdict::UnboundedDivergent,
    }
}

/// Closed forms against running sums up to `upto`, and the convergence
/// trichotomy against a verdict read off the terms.
pub fn partial_sums_check(samples: &[RSeq], upto: u64) -> Report {
    let mut report = Report::new("partial-sums");
    let mut closed = None;
    let mut trichotomy = None;
    let mut points = 0u64;
    for s in samples {
        let x = match partial_sums(s) {
            Ok(x) => x,
            Err(e) => {
                closed.get_or_insert_with(|| format!("{s}: {e}"));
                continue;
            }
        };
        let mut acc = Rat::zero();
        for n in 0..=upto {
            acc += &s.eval(n);
            points += 1;
            if x.eval(n) != acc {
                closed.get_or_insert_with(|| format!("{s} at n={n}"));
                break;
            }
        }
        let got = classify_series(s).expect("closed form exists");
        let want = verdict_from_terms(s);
        if got != want {
            trichotomy.get_or_insert_with(|| format!("{s}: got {got} expected {want}"));
        }
    }
    report.record("closed-form", format!("series={} points={points}", samples.len()), closed);
    report.record("trichotomy", format!("series={}", samples.len()), trichotomy);
    report
}
