//! The correspondence between filters on the naturals and ideals of the
//! sequence algebra: an ideal is the set of sequences whose zero set belongs
//! to a filter, and the filter of an ideal is the family of its zero sets.
//! Ideals are represented by their filters.

use crate::exactnum::Rat;
use crate::report::Report;
use crate::seqrep::RSeq;
use crate::sets::{FilterDescriptor, SetDescriptor};

/// The ideal `{x : Z(x) ∈ F}` of a filter `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealDescriptor {
    pub filter: FilterDescriptor,
}

impl IdealDescriptor {
    pub fn of_filter(filter: FilterDescriptor) -> IdealDescriptor {
        IdealDescriptor { filter }
    }

    pub fn contains(&self, x: &RSeq) -> bool {
        in_ideal(x, self)
    }
}

pub fn in_ideal(x: &RSeq, ideal: &IdealDescriptor) -> bool {
    ideal.filter.contains(&x.zero_set())
}

/// A sequence whose zero set is exactly `set`: the indicator of its complement.
pub fn realize_zero_set(set: &SetDescriptor) -> RSeq {
    RSeq::indicator(&set.complement())
}

/// Check `F_{I_F} = F` on sample sets: `J` is the zero set of a member of
/// `I_F` exactly when `J ∈ F`. Membership on the left is decided through the
/// realizing sequence, which also has to reproduce `J` as its zero set.
pub fn roundtrip_filter(filter: &FilterDescriptor, samples: &[SetDescriptor]) -> Report {
    let mut report = Report::new(format!("galois-roundtrip[{filter}]"));
    let ideal = IdealDescriptor::of_filter(filter.clone());
    let mut members = 0usize;
    let mut mismatch = None;
    let mut bad_zero_set = None;
    for j in samples {
        let x = realize_zero_set(j);
        if bad_zero_set.is_none() && x.zero_set() != *j {
            bad_zero_set = Some(j.to_string());
        }
        let lhs = in_ideal(&x, &ideal);
        let rhs = filter.contains(j);
        members += usize::from(rhs);
        if lhs != rhs && mismatch.is_none() {
            mismatch = Some(format!("{j} via-ideal={lhs} in-filter={rhs}"));
        }
    }
    report.record("zero-set-realized", format!("sets={}", samples.len()), bad_zero_set);
    report.record(
        "filter-of-ideal-of-filter",
        format!("sets={} members={members}", samples.len()),
        mismatch,
    );
    report
}

/// Check the ideal laws of `I_F` on sample sequences: closure under sums,
/// absorption of arbitrary products, invariance under nonzero scaling,
/// `0 ∈ I` and `1 ∉ I`.
pub fn ideal_closure_check(ideal: &IdealDescriptor, samples: &[RSeq]) -> Report {
    let mut report = Report::new(format!("ideal-closure[{}]", ideal.filter));
    let members: Vec<&RSeq> = samples.iter().filter(|x| ideal.contains(x)).collect();

    let mut witness = None;
    let mut checked = 0usize;
    'sum: for (i, x) in members.iter().enumerate() {
        for y in &members[i..] {
            checked += 1;
            if !ideal.contains(&x.add(y)) {
                witness = Some(format!("({x}) + ({y})"));
                break 'sum;
            }
        }
    }
    report.record("sum", format!("pairs={checked} members={}", members.len()), witness);

    let mut witness = None;
    let mut checked = 0usize;
    'abs: for x in &members {
        for y in samples {
            checked += 1;
            if !ideal.contains(&x.mul(y)) {
                witness = Some(format!("({x}) * ({y})"));
                break 'abs;
            }
        }
    }
    report.record("absorption", format!("pairs={checked}"), witness);

    let scales = [Rat::from(-1), Rat::from(2), Rat::new(1, 3), Rat::new(-7, 2)];
    let witness = samples.iter().find_map(|x| {
        let inside = ideal.contains(x);
        scales
            .iter()
            .find(|c| ideal.contains(&x.scalar_mul(c)) != inside)
            .map(|c| format!("{c} * ({x})"))
    });
    report.record("nonzero-scaling", format!("samples={}", samples.len()), witness);

    report.record(
        "contains-zero",
        "",
        (!ideal.contains(&RSeq::zero())).then(|| "0".to_string()),
    );
    report.record(
        "proper",
        "",
        ideal.contains(&RSeq::one()).then(|| "1".to_string()),
    );
    report
}

/// Check that `F ⊆ G` (as membership predicates on `sets`) carries over to
/// `I_F ⊆ I_G` on `seqs`.
pub fn monotonicity_check(
    coarse: &FilterDescriptor,
    fine: &FilterDescriptor,
    sets: &[SetDescriptor],
    seqs: &[RSeq],
) -> Report {
    let mut report = Report::new(format!("galois-monotone[{coarse} <= {fine}]"));
    let nested = sets.iter().all(|s| !coarse.contains(s) || fine.contains(s));
    if !nested {
        report.pass("premise", "filters not nested on samples; implication vacuous");
        return report;
    }
    let (ic, ig) = (
        IdealDescriptor::of_filter(coarse.clone()),
        IdealDescriptor::of_filter(fine.clone()),
    );
    let witness = seqs
        .iter()
        .find(|x| ic.contains(x) && !ig.contains(x))
        .map(|x| x.to_string());
    report.record("ideals-nested", format!("seqs={}", seqs.len()), witness);
    report
}
