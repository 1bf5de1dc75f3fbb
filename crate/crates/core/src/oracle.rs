//! Exhaustive verification over a finite index set `Λ = {0, .., λ-1}` and a
//! prime field `F_p`. Every ideal of `F_p^Λ` and every filter on `Λ` is
//! enumerated, both Galois maps are computed by listing, and the roundtrip,
//! monotonicity, maximal/field and prime/domain statements are checked
//! instance by instance.
//!
//! Vectors are indices `0..p^λ` read as base-`p` digit strings; sets of
//! vectors are `u128` bitmasks. Subsets of `Λ` are `λ`-bit masks and
//! families of subsets are `u32` bitmasks indexed by those masks.

use std::fmt;

use crate::report::Report;

/// Largest candidate space the subset scan will walk.
pub const SUBSET_SCAN_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("ConfigTooLarge")]
    ConfigTooLarge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteConfig {
    lambda: u32,
    p: u32,
}

impl FiniteConfig {
    /// `lambda` in `2..=4`, `p` in `{2, 3}`.
    pub fn new(lambda: u32, p: u32) -> Result<FiniteConfig, OracleError> {
        if (2..=4).contains(&lambda) && (p == 2 || p == 3) {
            Ok(FiniteConfig { lambda, p })
        } else {
            Err(OracleError::ConfigTooLarge)
        }
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn field_order(&self) -> u32 {
        self.p
    }

    /// `|F_p^Λ|`.
    pub fn ring_size(&self) -> usize {
        self.p.pow(self.lambda) as usize
    }

    fn subset_count(&self) -> usize {
        1 << self.lambda
    }
}

impl fmt::Display for FiniteConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{},lambda={}", self.p, self.lambda)
    }
}

/// Precomputed arithmetic of `F_p^Λ`.
struct Ring {
    cfg: FiniteConfig,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
    zero_set: Vec<u32>,
    one: usize,
}

impl Ring {
    fn new(cfg: FiniteConfig) -> Ring {
        let (n, p, l) = (cfg.ring_size(), cfg.p as usize, cfg.lambda as usize);
        let digits = |v: usize| -> Vec<usize> { (0..l).map(|i| v / p.pow(i as u32) % p).collect() };
        let pack = |d: &[usize]| -> u8 { d.iter().rev().fold(0, |acc, &x| acc * p + x) as u8 };
        let table = |op: fn(usize, usize, usize) -> usize| -> Vec<Vec<u8>> {
            (0..n)
                .map(|a| {
                    let da = digits(a);
                    (0..n)
                        .map(|b| {
                            let db = digits(b);
                            let dc: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| op(x, y, p)).collect();
                            pack(&dc)
                        })
                        .collect()
                })
                .collect()
        };
        let add = table(|x, y, p| (x + y) % p);
        let mul = table(|x, y, p| (x * y) % p);
        let zero_set = (0..n)
            .map(|v| digits(v).iter().enumerate().filter(|(_, &d)| d == 0).fold(0u32, |m, (i, _)| m | 1 << i))
            .collect();
        let one = pack(&vec![1; l]) as usize;
        Ring { cfg, add, mul, zero_set, one }
    }

    fn n(&self) -> usize {
        self.cfg.ring_size()
    }

    fn members(mask: u128) -> impl Iterator<Item = usize> {
        (0..128).filter(move |&i| mask >> i & 1 == 1)
    }

    fn is_ideal(&self, mask: u128) -> bool {
        if mask & 1 == 0 || mask >> self.one & 1 == 1 {
            return false;
        }
        let members: Vec<usize> = Ring::members(mask).collect();
        for &x in &members {
            for &y in &members {
                if mask >> self.add[x][y] & 1 == 0 {
                    return false;
                }
            }
            for r in 0..self.n() {
                if mask >> self.mul[x][r] & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn principal(&self, x: usize) -> u128 {
        (0..self.n()).fold(0u128, |m, r| m | 1 << self.mul[x][r])
    }

    fn sum(&self, a: u128, b: u128) -> u128 {
        let mut out = 0u128;
        for x in Ring::members(a) {
            for y in Ring::members(b) {
                out |= 1 << self.add[x][y];
            }
        }
        out
    }

    fn vanishing_on(&self, s: u32) -> u128 {
        (0..self.n()).filter(|&v| self.zero_set[v] & s == s).fold(0u128, |m, v| m | 1 << v)
    }

    fn is_filter(&self, fam: u32) -> bool {
        let k = self.cfg.subset_count();
        let full = (k - 1) as u32;
        if fam == 0 || fam & 1 == 1 {
            return false;
        }
        let sets: Vec<u32> = (0..k as u32).filter(|&s| fam >> s & 1 == 1).collect();
        let intersections = sets.iter().all(|&a| sets.iter().all(|&b| fam >> (a & b) & 1 == 1));
        let upward = sets.iter().all(|&a| (0..=full).filter(|&b| b & a == a).all(|b| fam >> b & 1 == 1));
        intersections && upward
    }
}

/// A proper ideal of `F_p^Λ`, as the set of its elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteIdeal {
    pub members: u128,
}

impl FiniteIdeal {
    pub fn len(&self) -> u32 {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members >> v & 1 == 1
    }

    pub fn is_subset(&self, other: &FiniteIdeal) -> bool {
        self.members & !other.members == 0
    }
}

/// A filter on `Λ`, as the family of its member sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteFilter {
    pub members: u32,
}

impl FiniteFilter {
    pub fn contains(&self, set: u32) -> bool {
        self.members >> set & 1 == 1
    }

    pub fn is_subset(&self, other: &FiniteFilter) -> bool {
        self.members & !other.members == 0
    }

    /// Intersection of all members; a filter on a finite set is principal on it.
    pub fn minimal_set(&self) -> u32 {
        (0..32u32).filter(|&s| self.contains(s)).fold(u32::MAX, |acc, s| acc & s)
    }
}

fn fmt_subset(s: u32) -> String {
    let items: Vec<String> = (0..32).filter(|i| s >> i & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// All proper ideals, sorted by member mask.
///
/// Candidate subsets are scanned directly when there are at most
/// [`SUBSET_SCAN_LIMIT`] of them. Otherwise ideals are generated as sums of
/// principal ideals, closed under pairwise sums until no new ideal appears;
/// every ideal of a finite commutative ring arises this way.
pub fn enumerate_ideals(cfg: &FiniteConfig) -> Result<Vec<FiniteIdeal>, OracleError> {
    let ring = Ring::new(*cfg);
    let n = ring.n();
    let mut found: Vec<u128> = if n <= 16 {
        (0..1u128 << n).filter(|&m| ring.is_ideal(m)).collect()
    } else {
        let mut all: std::collections::BTreeSet<u128> = (0..n).map(|x| ring.principal(x)).collect();
        let mut frontier: Vec<u128> = all.iter().copied().collect();
        while !frontier.is_empty() {
            let snapshot: Vec<u128> = all.iter().copied().collect();
            let mut next = Vec::new();
            for &a in &frontier {
                for &b in &snapshot {
                    let s = ring.sum(a, b);
                    if all.insert(s) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        all.into_iter().filter(|&m| m >> ring.one & 1 == 0).collect()
    };
    found.sort_unstable();
    Ok(found.into_iter().map(|members| FiniteIdeal { members }).collect())
}

/// All filters on `Λ`, sorted by family mask.
pub fn enumerate_filters(cfg: &FiniteConfig) -> Result<Vec<FiniteFilter>, OracleError> {
    let ring = Ring::new(*cfg);
    let families = 1u64 << cfg.subset_count();
    if families > SUBSET_SCAN_LIMIT {
        return Err(OracleError::ConfigTooLarge);
    }
    Ok((0..families as u32)
        .filter(|&f| ring.is_filter(f))
        .map(|members| FiniteFilter { members })
        .collect())
}

/// `F_I = {Z(x) : x ∈ I}`.
pub fn map_filter_of_ideal(ideal: &FiniteIdeal, cfg: &FiniteConfig) -> FiniteFilter {
    let ring = Ring::new(*cfg);
    filter_of_ideal(&ring, ideal)
}

/// `I_F = {x : Z(x) ∈ F}`.
pub fn map_ideal_of_filter(filter: &FiniteFilter, cfg: &FiniteConfig) -> FiniteIdeal {
    let ring = Ring::new(*cfg);
    ideal_of_filter(&ring, filter)
}

fn filter_of_ideal(ring: &Ring, ideal: &FiniteIdeal) -> FiniteFilter {
    FiniteFilter {
        members: Ring::members(ideal.members).fold(0u32, |m, x| m | 1 << ring.zero_set[x]),
    }
}

fn ideal_of_filter(ring: &Ring, filter: &FiniteFilter) -> FiniteIdeal {
    FiniteIdeal {
        members: (0..ring.n()).filter(|&x| filter.contains(ring.zero_set[x])).fold(0u128, |m, x| m | 1 << x),
    }
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(|t| bad(&t))
}

/// Both roundtrips, that both maps land in ideals/filters, both monotonicity
/// implications, the cardinality `2^λ - 1` of both lattices, and the
/// description of every ideal as vanishing on a nonempty set and every filter
/// as principal.
pub fn verify_galois(cfg: &FiniteConfig) -> Result<Report, OracleError> {
    let ring = Ring::new(*cfg);
    let ideals = enumerate_ideals(cfg)?;
    let filters = enumerate_filters(cfg)?;
    let expected = (1usize << cfg.lambda) - 1;
    let mut report = Report::new(format!("oracle-galois[{cfg}]"));

    report.record(
        "ideal-count",
        format!("ideals={}", ideals.len()),
        (ideals.len() != expected).then(|| format!("ideals={} expected={expected}", ideals.len())),
    );
    report.record(
        "filter-count",
        format!("filters={}", filters.len()),
        (filters.len() != expected).then(|| format!("filters={} expected={expected}", filters.len())),
    );
    let full = (cfg.subset_count() - 1) as u32;
    report.record(
        "ideals-vanish-on-nonempty-set",
        format!("checked={}", ideals.len()),
        first_failure(&ideals, |i| {
            (!(1..=full).any(|s| ring.vanishing_on(s) == i.members)).then(|| format!("{:#x}", i.members))
        }),
    );
    report.record(
        "filters-principal",
        format!("checked={}", filters.len()),
        first_failure(&filters, |f| {
            let s = f.minimal_set();
            let principal = (0..=full).filter(|&k| k & s == s).fold(0u32, |m, k| m | 1 << k);
            (principal != f.members).then(|| format!("{:#x}", f.members))
        }),
    );
    report.record(
        "filter-of-ideal-is-filter",
        format!("checked={}", ideals.len()),
        first_failure(&ideals, |i| {
            let f = filter_of_ideal(&ring, i);
            (!ring.is_filter(f.members)).then(|| format!("{:#x}", i.members))
        }),
    );
    report.record(
        "ideal-of-filter-is-ideal",
        format!("checked={}", filters.len()),
        first_failure(&filters, |f| {
            let i = ideal_of_filter(&ring, f);
            (!ring.is_ideal(i.members)).then(|| format!("{:#x}", f.members))
        }),
    );
    report.record(
        "roundtrip-ideal",
        format!("checked={}", ideals.len()),
        first_failure(&ideals, |i| {
            (ideal_of_filter(&ring, &filter_of_ideal(&ring, i)) != **i).then(|| format!("{:#x}", i.members))
        }),
    );
    report.record(
        "roundtrip-filter",
        format!("checked={}", filters.len()),
        first_failure(&filters, |f| {
            (filter_of_ideal(&ring, &ideal_of_filter(&ring, f)) != **f).then(|| format!("{:#x}", f.members))
        }),
    );

    let mut pairs = 0usize;
    let mut witness = None;
    for a in &ideals {
        for b in &ideals {
            if a.is_subset(b) {
                pairs += 1;
                if !filter_of_ideal(&ring, a).is_subset(&filter_of_ideal(&ring, b)) && witness.is_none() {
                    witness = Some(format!("{:#x} <= {:#x}", a.members, b.members));
                }
            }
        }
    }
    report.record("monotone-ideal-to-filter", format!("comparable-pairs={pairs}"), witness);

    let mut pairs = 0usize;
    let mut witness = None;
    for f in &filters {
        for g in &filters {
            if f.is_subset(g) {
                pairs += 1;
                if !ideal_of_filter(&ring, f).is_subset(&ideal_of_filter(&ring, g)) && witness.is_none() {
                    witness = Some(format!("{:#x} <= {:#x}", f.members, g.members));
                }
            }
        }
    }
    report.record("monotone-filter-to-ideal", format!("comparable-pairs={pairs}"), witness);

    let images: std::collections::BTreeSet<FiniteFilter> = ideals.iter().map(|i| filter_of_ideal(&ring, i)).collect();
    let onto = images.len() == filters.len() && filters.iter().all(|f| images.contains(f));
    report.record(
        "bijection",
        format!("ideals={} filters={}", ideals.len(), filters.len()),
        (!onto).then(|| format!("image={} filters={}", images.len(), filters.len())),
    );
    Ok(report)
}

/// Per-ideal structure of the quotient ring `F_p^Λ / I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientFacts {
    pub ideal: FiniteIdeal,
    pub vanishing_set: u32,
    pub maximal: bool,
    pub prime: bool,
    pub classes: usize,
    pub field: bool,
    pub zero_divisor: Option<(usize, usize)>,
}

fn quotient_facts(ring: &Ring, ideal: &FiniteIdeal, ideals: &[FiniteIdeal]) -> QuotientFacts {
    let n = ring.n();
    let vanishing_set = filter_of_ideal(ring, ideal).minimal_set();
    let maximal = !ideals.iter().any(|j| j != ideal && ideal.is_subset(j));
    let prime = (0..n).all(|x| {
        (0..n).all(|y| !ideal.contains(ring.mul[x][y] as usize) || ideal.contains(x) || ideal.contains(y))
    });
    // coset of x, identified by its smallest element
    let class_of = |x: usize| -> usize {
        Ring::members(ideal.members).map(|i| ring.add[x][i] as usize).min().expect("0 in ideal")
    };
    let reps: Vec<usize> = (0..n).filter(|&x| class_of(x) == x).collect();
    let one = class_of(ring.one);
    let nonzero: Vec<usize> = reps.iter().copied().filter(|&x| x != 0).collect();
    let field = nonzero
        .iter()
        .all(|&x| nonzero.iter().any(|&y| class_of(ring.mul[x][y] as usize) == one));
    let zero_divisor = nonzero
        .iter()
        .flat_map(|&x| nonzero.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| class_of(ring.mul[x][y] as usize) == 0);
    QuotientFacts {
        ideal: *ideal,
        vanishing_set,
        maximal,
        prime,
        classes: reps.len(),
        field,
        zero_divisor,
    }
}

/// Maximal ⟺ quotient is a field, prime ⟺ quotient has no zero divisors,
/// maximal ⟹ prime, and `|quotient| = p^|S|` for the vanishing set `S`,
/// each decided for every enumerated ideal by scanning the quotient tables.
pub fn verify_maximal_prime(cfg: &FiniteConfig) -> Result<Report, OracleError> {
    let ring = Ring::new(*cfg);
    let ideals = enumerate_ideals(cfg)?;
    let facts: Vec<QuotientFacts> = ideals.iter().map(|i| quotient_facts(&ring, i, &ideals)).collect();
    let mut report = Report::new(format!("oracle-maximal-prime[{cfg}]"));
    let describe = |q: &QuotientFacts| format!("S={}", fmt_subset(q.vanishing_set));

    for q in &facts {
        let zd = q.zero_divisor.map_or("none".to_string(), |(x, y)| format!("{x}*{y}"));
        report.pass(
            format!("ideal{}", fmt_subset(q.vanishing_set)),
            format!(
                "classes={} maximal={} prime={} field={} zero-divisor={zd}",
                q.classes, q.maximal, q.prime, q.field
            ),
        );
    }
    report.record(
        "maximal-iff-field",
        format!("ideals={} maximal={}", facts.len(), facts.iter().filter(|q| q.maximal).count()),
        first_failure(&facts, |q| (q.maximal != q.field).then(|| describe(q))),
    );
    report.record(
        "prime-iff-no-zero-divisors",
        format!("ideals={} prime={}", facts.len(), facts.iter().filter(|q| q.prime).count()),
        first_failure(&facts, |q| (q.prime != q.zero_divisor.is_none()).then(|| describe(q))),
    );
    report.record(
        "maximal-implies-prime",
        format!("ideals={}", facts.len()),
        first_failure(&facts, |q| (q.maximal && !q.prime).then(|| describe(q))),
    );
    report.record(
        "quotient-cardinality",
        format!("ideals={}", facts.len()),
        first_failure(&facts, |q| {
            let expected = (cfg.p as usize).pow(q.vanishing_set.count_ones());
            (q.classes != expected).then(|| format!("{} classes={} expected={expected}", describe(q), q.classes))
        }),
    );
    Ok(report)
}
