//! Representable rational sequences.
//!
//! An [`RSeq`] is a total function from the naturals to the rationals given
//! by a modulus `m`, one rational function per residue class mod `m`, and a
//! finite table of overriding values. The class is closed under the pointwise
//! ring operations and the shift, and every zero set is an eventually periodic
//! set, which keeps ideal membership decidable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::exactnum::{eventual_sign, integer_roots_nonneg, limit_at_infinity, ExtendedRat, Poly, Rat, RatFun};
use crate::sets::SetDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeqError {
    #[error("UndeclaredPole index={0}")]
    UndeclaredPole(u64),
    #[error("InvalidModulus")]
    InvalidModulus,
    #[error("NotConvergent")]
    NotConvergent,
    #[error("UnboundedSequence")]
    UnboundedSequence,
}

/// Boundedness/convergence verdict for a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BSeqVerdict {
    Convergent(Rat),
    BoundedDivergent,
    Unbounded,
}

/// A representable sequence in canonical form.
///
/// Invariants: every natural pole of a branch within its own residue class is
/// listed in `exceptions`; no exception repeats its branch value; the modulus
/// is the least period of the branch table. Structural equality therefore
/// coincides with pointwise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RSeq {
    modulus: u64,
    branches: Vec<RatFun>,
    exceptions: BTreeMap<u64, Rat>,
}

impl RSeq {
    /// Checked constructor: fails with `UndeclaredPole` if some branch has a
    /// natural pole in its residue class that is not overridden.
    pub fn new(modulus: u64, branches: Vec<RatFun>, exceptions: BTreeMap<u64, Rat>) -> Result<RSeq, SeqError> {
        if modulus == 0 || branches.len() as u64 != modulus {
            return Err(SeqError::InvalidModulus);
        }
        for (r, f) in branches.iter().enumerate() {
            for p in f.natural_poles() {
                if p % modulus == r as u64 && !exceptions.contains_key(&p) {
                    return Err(SeqError::UndeclaredPole(p));
                }
            }
        }
        Ok(RSeq::canonical(modulus, branches, exceptions))
    }

    /// Single branch with overrides.
    pub fn from_ratfun(f: RatFun, exceptions: BTreeMap<u64, Rat>) -> Result<RSeq, SeqError> {
        RSeq::new(1, vec![f], exceptions)
    }

    pub fn from_poly(p: Poly) -> RSeq {
        RSeq::canonical(1, vec![RatFun::from_poly(p)], BTreeMap::new())
    }

    fn canonical(modulus: u64, mut branches: Vec<RatFun>, mut exceptions: BTreeMap<u64, Rat>) -> RSeq {
        exceptions.retain(|&k, v| branches[(k % modulus) as usize].eval_at(k).as_ref() != Some(v));
        let m = branches.len();
        let period = (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| (d..m).all(|r| branches[r] == branches[r % d]))
            .unwrap_or(m);
        branches.truncate(period);
        RSeq {
            modulus: period as u64,
            branches,
            exceptions,
        }
    }

    pub fn constant(c: Rat) -> RSeq {
        RSeq::canonical(1, vec![RatFun::constant(c)], BTreeMap::new())
    }

    pub fn zero() -> RSeq {
        RSeq::constant(Rat::zero())
    }

    pub fn one() -> RSeq {
        RSeq::constant(Rat::one())
    }

    /// `n ↦ n`.
    pub fn identity() -> RSeq {
        RSeq::from_poly(Poly::identity())
    }

    /// Characteristic function of `set`.
    pub fn indicator(set: &SetDescriptor) -> RSeq {
        let m = set.modulus();
        let branches = set
            .residues()
            .iter()
            .map(|&r| if r { RatFun::one() } else { RatFun::zero() })
            .collect();
        let exceptions = set
            .plus()
            .iter()
            .map(|&n| (n, Rat::one()))
            .chain(set.minus().iter().map(|&n| (n, Rat::zero())))
            .collect();
        RSeq::canonical(m, branches, exceptions)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn branches(&self) -> &[RatFun] {
        &self.branches
    }

    pub fn exceptions(&self) -> &BTreeMap<u64, Rat> {
        &self.exceptions
    }

    pub fn branch_for(&self, n: u64) -> &RatFun {
        &self.branches[(n % self.modulus) as usize]
    }

    pub fn max_exception(&self) -> Option<u64> {
        self.exceptions.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.modulus == 1 && self.branches[0].is_zero() && self.exceptions.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.modulus == 1 && self.exceptions.is_empty() {
            self.branches[0].as_constant()
        } else {
            None
        }
    }

    pub fn eval(&self, n: u64) -> Rat {
        match self.exceptions.get(&n) {
            Some(v) => v.clone(),
            None => self
                .branch_for(n)
                .eval_at(n)
                .expect("representable sequence has an undeclared pole"),
        }
    }

    /// Replace values at the given indices.
    pub fn with_overrides(&self, overrides: impl IntoIterator<Item = (u64, Rat)>) -> RSeq {
        let mut exceptions = self.exceptions.clone();
        exceptions.extend(overrides);
        RSeq::canonical(self.modulus, self.branches.clone(), exceptions)
    }

    fn zip_with(&self, other: &RSeq, f: impl Fn(&RatFun, &RatFun) -> RatFun, g: impl Fn(&Rat, &Rat) -> Rat) -> RSeq {
        let m = self.modulus.lcm(&other.modulus);
        let branches = (0..m)
            .map(|r| f(self.branch_for(r), other.branch_for(r)))
            .collect();
        let keys: BTreeSet<u64> = self.exceptions.keys().chain(other.exceptions.keys()).copied().collect();
        let exceptions = keys
            .into_iter()
            .map(|k| (k, g(&self.eval(k), &other.eval(k))))
            .collect();
        RSeq::canonical(m, branches, exceptions)
    }

    fn map_branches(&self, f: impl Fn(&RatFun) -> RatFun, g: impl Fn(&Rat) -> Rat) -> RSeq {
        let branches = self.branches.iter().map(f).collect();
        let exceptions = self.exceptions.iter().map(|(&k, v)| (k, g(v))).collect();
        RSeq::canonical(self.modulus, branches, exceptions)
    }

    pub fn add(&self, other: &RSeq) -> RSeq {
        self.zip_with(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(&self, other: &RSeq) -> RSeq {
        self.zip_with(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn mul(&self, other: &RSeq) -> RSeq {
        self.zip_with(other, |a, b| a * b, |a, b| a * b)
    }

    pub fn neg(&self) -> RSeq {
        self.map_branches(|f| -f, |v| -v)
    }

    pub fn scalar_mul(&self, c: &Rat) -> RSeq {
        self.map_branches(|f| f.scale(c), |v| v * c)
    }

    pub fn pow(&self, exp: u32) -> RSeq {
        let mut acc = RSeq::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// `n ↦ x(n + 1)`.
    pub fn shift(&self) -> RSeq {
        let m = self.modulus;
        let branches = (0..m).map(|r| self.branch_for(r + 1).shift_by(1)).collect();
        let exceptions = self
            .exceptions
            .iter()
            .filter(|(&k, _)| k > 0)
            .map(|(&k, v)| (k - 1, v.clone()))
            .collect();
        RSeq::canonical(m, branches, exceptions)
    }

    /// Pointwise pseudo-inverse: `1/x(n)` where `x(n) != 0`, and `0` on the zero set.
    pub fn pseudo_inverse(&self) -> RSeq {
        let m = self.modulus;
        let mut keys: BTreeSet<u64> = self.exceptions.keys().copied().collect();
        let branches = self
            .branches
            .iter()
            .enumerate()
            .map(|(r, f)| {
                if f.is_zero() {
                    return RatFun::zero();
                }
                let roots = integer_roots_nonneg(f.num()).expect("nonzero numerator");
                keys.extend(roots.into_iter().filter(|p| p % m == r as u64));
                f.recip().expect("nonzero branch")
            })
            .collect();
        let exceptions = keys
            .into_iter()
            .map(|k| (k, self.eval(k).recip().unwrap_or_default()))
            .collect();
        RSeq::canonical(m, branches, exceptions)
    }

    /// `Z(x) = {n : x(n) = 0}`, exactly.
    pub fn zero_set(&self) -> SetDescriptor {
        let m = self.modulus;
        let mut residues = Vec::with_capacity(m as usize);
        let mut overrides = Vec::new();
        for (r, f) in self.branches.iter().enumerate() {
            residues.push(f.is_zero());
            if !f.is_zero() {
                let roots = integer_roots_nonneg(f.num()).expect("nonzero numerator");
                overrides.extend(roots.into_iter().filter(|p| p % m == r as u64).map(|p| (p, true)));
            }
        }
        overrides.extend(self.exceptions.iter().map(|(&k, v)| (k, v.is_zero())));
        SetDescriptor::from_parts(m, residues, overrides).expect("modulus is positive")
    }

    /// Limit of each branch along its residue class, in residue order.
    pub fn branch_limits(&self) -> Vec<ExtendedRat> {
        self.branches.iter().map(limit_at_infinity).collect()
    }

    pub fn classify_bounded(&self) -> BSeqVerdict {
        let limits = self.branch_limits();
        if limits.iter().any(ExtendedRat::is_infinite) {
            return BSeqVerdict::Unbounded;
        }
        let first = limits[0].clone();
        if limits.iter().all(|l| *l == first) {
            BSeqVerdict::Convergent(first.finite().unwrap().clone())
        } else {
            BSeqVerdict::BoundedDivergent
        }
    }

    pub fn limit(&self) -> Result<Rat, SeqError> {
        match self.classify_bounded() {
            BSeqVerdict::Convergent(c) => Ok(c),
            _ => Err(SeqError::NotConvergent),
        }
    }

    /// Index past which every branch is monotone along its residue class and
    /// no exception remains, advanced by one full period so each class has a
    /// representative at or beyond the monotone tail.
    fn monotone_horizon(&self) -> u64 {
        let m = self.modulus;
        let mut t = self.max_exception().map_or(0, |k| k + 1);
        for f in &self.branches {
            let step = &f.shift_by(m) - f;
            t = t.max(eventual_sign(&step).1);
        }
        t + m
    }

    fn extreme(&self, pick_max: bool) -> Result<Rat, SeqError> {
        let limits = self.branch_limits();
        if limits.iter().any(ExtendedRat::is_infinite) {
            return Err(SeqError::UnboundedSequence);
        }
        let horizon = self.monotone_horizon();
        let candidates = (0..horizon)
            .map(|n| self.eval(n))
            .chain(limits.into_iter().map(|l| l.finite().unwrap().clone()));
        let best = if pick_max { candidates.max() } else { candidates.min() };
        Ok(best.expect("at least one candidate"))
    }

    /// Exact supremum of the values; may be a limit that is never attained.
    pub fn sup_val(&self) -> Result<Rat, SeqError> {
        self.extreme(true)
    }

    pub fn inf_val(&self) -> Result<Rat, SeqError> {
        self.extreme(false)
    }

    /// Residue groups sharing a branch, for rendering.
    fn branch_groups(&self) -> Vec<(SetDescriptor, &RatFun)> {
        let mut groups: Vec<(Vec<bool>, &RatFun)> = Vec::new();
        for (r, f) in self.branches.iter().enumerate() {
            match groups.iter_mut().find(|(_, g)| *g == f) {
                Some((mask, _)) => mask[r] = true,
                None => {
                    let mut mask = vec![false; self.branches.len()];
                    mask[r] = true;
                    groups.push((mask, f));
                }
            }
        }
        groups
            .into_iter()
            .map(|(mask, f)| (SetDescriptor::from_parts(self.modulus, mask, []).unwrap(), f))
            .collect()
    }

    fn is_indicator(&self) -> bool {
        let zero_or_one = |v: &Rat| v.is_zero() || v.is_one();
        self.branches
            .iter()
            .all(|f| f.as_constant().as_ref().is_some_and(zero_or_one))
            && self.exceptions.values().all(zero_or_one)
    }
}

fn needs_parens(s: &str) -> bool {
    !(s == "n" || s.chars().all(|c| c.is_ascii_digit()))
}

impl fmt::Display for RSeq {
    /// Renders in the expression grammar so that parsing and evaluating the
    /// output reproduces the same sequence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        if self.is_indicator() {
            return write!(f, "ind({})", self.zero_set().complement());
        }
        let body = if self.modulus == 1 {
            self.branches[0].to_string()
        } else {
            let terms: Vec<String> = self
                .branch_groups()
                .into_iter()
                .filter(|(_, g)| !g.is_zero())
                .map(|(set, g)| {
                    if g.as_constant().is_some_and(|c| c.is_one()) {
                        format!("ind({set})")
                    } else {
                        let s = g.to_string();
                        if needs_parens(&s) {
                            format!("ind({set})*({s})")
                        } else {
                            format!("ind({set})*{s}")
                        }
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        };
        if self.exceptions.is_empty() {
            return write!(f, "{body}");
        }
        let exc = self
            .exceptions
            .iter()
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "({body}) except {{{exc}}}")
    }
}

impl fmt::Debug for RSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RSeq({self})")
    }
}
