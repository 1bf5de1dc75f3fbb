//! Decidable subsets of the naturals and the filters built from them.
//!
//! A [`SetDescriptor`] is an eventually periodic set: a union of residue
//! classes modulo `m`, with finitely many points added (`plus`) and removed
//! (`minus`). This is exactly the class of zero sets of representable
//! sequences, so it is closed under everything the ideal/filter
//! correspondence needs.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("EmptyGenerator: a principal filter needs a nonempty generating set")]
    EmptyGenerator,
    #[error("InvalidModulus: modulus must be positive")]
    InvalidModulus,
}

/// Eventually periodic subset of the naturals, kept in normal form: minimal
/// modulus, `plus` disjoint from the residue classes, `minus` inside them.
/// Two descriptors are equal as sets iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetDescriptor {
    modulus: u64,
    residues: Vec<bool>,
    plus: BTreeSet<u64>,
    minus: BTreeSet<u64>,
}

impl SetDescriptor {
    /// Build from a residue pattern and pointwise overrides. Overrides that
    /// agree with the pattern are dropped; later overrides win.
    pub fn from_parts(
        modulus: u64,
        residues: Vec<bool>,
        overrides: impl IntoIterator<Item = (u64, bool)>,
    ) -> Result<SetDescriptor, SetError> {
        if modulus == 0 || residues.len() as u64 != modulus {
            return Err(SetError::InvalidModulus);
        }
        let modulus = minimal_period(&residues);
        let residues = residues[..modulus].to_vec();
        let mut set = SetDescriptor {
            modulus: modulus as u64,
            residues,
            plus: BTreeSet::new(),
            minus: BTreeSet::new(),
        };
        for (n, member) in overrides {
            set.plus.remove(&n);
            set.minus.remove(&n);
            match (set.in_base(n), member) {
                (false, true) => {
                    set.plus.insert(n);
                }
                (true, false) => {
                    set.minus.insert(n);
                }
                _ => {}
            }
        }
        Ok(set)
    }

    pub fn empty() -> SetDescriptor {
        SetDescriptor::finite(std::iter::empty())
    }

    pub fn all() -> SetDescriptor {
        SetDescriptor::from_parts(1, vec![true], []).unwrap()
    }

    pub fn finite(points: impl IntoIterator<Item = u64>) -> SetDescriptor {
        SetDescriptor::from_parts(1, vec![false], points.into_iter().map(|n| (n, true))).unwrap()
    }

    /// Everything except the given points.
    pub fn cofinite(missing: impl IntoIterator<Item = u64>) -> SetDescriptor {
        SetDescriptor::from_parts(1, vec![true], missing.into_iter().map(|n| (n, false))).unwrap()
    }

    /// The residue class `{n : n = r mod m}`.
    pub fn residue_class(r: u64, m: u64) -> Result<SetDescriptor, SetError> {
        if m == 0 {
            return Err(SetError::InvalidModulus);
        }
        let mut residues = vec![false; m as usize];
        residues[(r % m) as usize] = true;
        SetDescriptor::from_parts(m, residues, [])
    }

    pub fn evens() -> SetDescriptor {
        SetDescriptor::residue_class(0, 2).unwrap()
    }

    pub fn odds() -> SetDescriptor {
        SetDescriptor::residue_class(1, 2).unwrap()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[bool] {
        &self.residues
    }

    pub fn plus(&self) -> &BTreeSet<u64> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeSet<u64> {
        &self.minus
    }

    fn in_base(&self, n: u64) -> bool {
        self.residues[(n % self.modulus) as usize]
    }

    pub fn contains(&self, n: u64) -> bool {
        if self.plus.contains(&n) {
            true
        } else if self.minus.contains(&n) {
            false
        } else {
            self.in_base(n)
        }
    }

    /// Largest explicitly listed point, if any.
    pub fn max_finite_entry(&self) -> Option<u64> {
        self.plus.iter().chain(self.minus.iter()).max().copied()
    }

    /// Window past which membership is purely periodic: `4 * modulus` plus the
    /// largest listed point. Used for pointwise cross-checks.
    pub fn check_window(&self, other: &SetDescriptor) -> u64 {
        let l = self.modulus.lcm(&other.modulus);
        4 * l + self.max_finite_entry().max(other.max_finite_entry()).map_or(0, |m| m + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty() && self.residues.iter().all(|r| !r)
    }

    pub fn is_finite(&self) -> bool {
        self.residues.iter().all(|r| !r)
    }

    pub fn is_cofinite(&self) -> bool {
        self.residues.iter().all(|&r| r)
    }

    pub fn is_all(&self) -> bool {
        self.is_cofinite() && self.minus.is_empty()
    }

    /// Points of a finite set, ascending. `None` when the set is infinite.
    pub fn finite_points(&self) -> Option<Vec<u64>> {
        self.is_finite().then(|| self.plus.iter().copied().collect())
    }

    pub fn complement(&self) -> SetDescriptor {
        SetDescriptor {
            modulus: self.modulus,
            residues: self.residues.iter().map(|r| !r).collect(),
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    fn combine(&self, other: &SetDescriptor, op: impl Fn(bool, bool) -> bool) -> SetDescriptor {
        let m = self.modulus.lcm(&other.modulus);
        let residues = (0..m).map(|r| op(self.in_base(r), other.in_base(r))).collect();
        let points: BTreeSet<u64> = self
            .plus
            .iter()
            .chain(&self.minus)
            .chain(&other.plus)
            .chain(&other.minus)
            .copied()
            .collect();
        let overrides = points.into_iter().map(|n| (n, op(self.contains(n), other.contains(n))));
        SetDescriptor::from_parts(m, residues, overrides).unwrap()
    }

    pub fn union(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a && !b)
    }

    /// `self ⊇ other`.
    pub fn is_superset(&self, other: &SetDescriptor) -> bool {
        other.difference(self).is_empty()
    }

    /// Members below `bound`, ascending.
    pub fn members_below(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }
}

/// Smallest period `d` dividing `pattern.len()` with `pattern[r] == pattern[r % d]`.
fn minimal_period(pattern: &[bool]) -> usize {
    let m = pattern.len();
    (1..=m)
        .filter(|d| m.is_multiple_of(*d))
        .find(|&d| (0..m).all(|r| pattern[r] == pattern[r % d]))
        .unwrap_or(m)
}

fn write_points(f: &mut fmt::Formatter<'_>, pts: &BTreeSet<u64>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for SetDescriptor {
    /// Set grammar: `r mod m` classes joined by `|`, `~{..}` for removed
    /// points, `|{..}` for added points, `all` and `{}` for the extremes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes: Vec<u64> = (0..self.modulus).filter(|&r| self.in_base(r)).collect();
        let mut wrote = false;
        if classes.len() as u64 == self.modulus {
            if self.minus.is_empty() {
                write!(f, "all")?;
            } else {
                write!(f, "~")?;
                write_points(f, &self.minus)?;
            }
            wrote = true;
        } else if !classes.is_empty() {
            let base = classes
                .iter()
                .map(|r| format!("{r} mod {}", self.modulus))
                .collect::<Vec<_>>()
                .join("|");
            if self.minus.is_empty() {
                write!(f, "{base}")?;
            } else {
                write!(f, "({base})&~")?;
                write_points(f, &self.minus)?;
            }
            wrote = true;
        }
        if !self.plus.is_empty() || !wrote {
            if wrote {
                write!(f, "|")?;
            }
            write_points(f, &self.plus)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetDescriptor({self})")
    }
}

/// A decidable filter on the naturals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FilterDescriptor {
    /// All cofinite sets.
    Frechet,
    /// All supersets of a fixed nonempty set.
    Principal(SetDescriptor),
}

impl FilterDescriptor {
    pub fn principal(generator: SetDescriptor) -> Result<FilterDescriptor, SetError> {
        if generator.is_empty() {
            Err(SetError::EmptyGenerator)
        } else {
            Ok(FilterDescriptor::Principal(generator))
        }
    }

    pub fn contains(&self, set: &SetDescriptor) -> bool {
        filter_contains(self, set)
    }

    /// `F ⊆ G` as families of sets. Exact for this descriptor class.
    pub fn is_coarser_than(&self, other: &FilterDescriptor) -> bool {
        match (self, other) {
            (FilterDescriptor::Frechet, FilterDescriptor::Frechet) => true,
            // a cofinite set missing one point of the generator is not a superset
            (FilterDescriptor::Frechet, FilterDescriptor::Principal(_)) => false,
            (FilterDescriptor::Principal(s), FilterDescriptor::Frechet) => s.is_cofinite(),
            (FilterDescriptor::Principal(s), FilterDescriptor::Principal(t)) => s.is_superset(t),
        }
    }
}

impl fmt::Display for FilterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterDescriptor::Frechet => write!(f, "frechet"),
            FilterDescriptor::Principal(s) => write!(f, "principal:{s}"),
        }
    }
}

impl fmt::Debug for FilterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn filter_contains(filter: &FilterDescriptor, set: &SetDescriptor) -> bool {
    match filter {
        FilterDescriptor::Frechet => set.is_cofinite(),
        FilterDescriptor::Principal(s) => set.is_superset(s),
    }
}

/// Check the three filter conditions on a sample family of sets:
/// the empty set is excluded while the filter is nonempty; members are closed
/// under pairwise intersection; members are closed under supersets (both
/// supersets found among the samples and unions with each sample).
pub fn check_filter_axioms(filter: &FilterDescriptor, samples: &[SetDescriptor]) -> Report {
    let mut report = Report::new(format!("filter-axioms[{filter}]"));

    let empty_in = filter.contains(&SetDescriptor::empty());
    let all_in = filter.contains(&SetDescriptor::all());
    let witness = match (empty_in, all_in) {
        (false, true) => None,
        (true, _) => Some("{} is a member".to_string()),
        (false, false) => Some("all is not a member".to_string()),
    };
    report.record("cond1-proper-nonempty", "", witness);

    let members: Vec<&SetDescriptor> = samples.iter().filter(|s| filter.contains(s)).collect();

    let mut checked = 0usize;
    let mut witness = None;
    'pairs: for (i, a) in members.iter().enumerate() {
        for b in &members[i..] {
            checked += 1;
            if !filter.contains(&a.intersect(b)) {
                witness = Some(format!("({a})&({b})"));
                break 'pairs;
            }
        }
    }
    report.record("cond2-intersection", format!("pairs={checked}"), witness);

    let mut checked = 0usize;
    let mut witness = None;
    'sup: for a in &members {
        for b in samples {
            checked += 1;
            if b.is_superset(a) && !filter.contains(b) {
                witness = Some(format!("{b} contains member {a}"));
                break 'sup;
            }
            let up = a.union(b);
            if !filter.contains(&up) {
                witness = Some(format!("{up} contains member {a}"));
                break 'sup;
            }
        }
    }
    report.record("cond3-upward", format!("pairs={checked} members={}", members.len()), witness);
    report
}
