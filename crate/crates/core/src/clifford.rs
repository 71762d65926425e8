//! Combinatorics of the classification of simple Dunkl-Opdam modules over
//! `H_p`: pairs χ = (charged multisegment, ℓ-multipartition), the order-p
//! action α, orbits and stabilizers, simple counts, and the G(2,2,n)
//! splitting rule.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::arith::CycloField;
use crate::error::{CoreError, Result};
use crate::groups::GPNElement;
use crate::report::{CheckResult, Counterexample, Report};

/// An element of `(ℚ/ℤ) ⊕ ℤκ̄`: a fractional part in `[0,1)` plus a
/// multiple of the generic symbol κ̄.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge {
    frac: Ratio<i64>,
    pub kmult: i64,
}

impl Charge {
    pub fn new(frac: Ratio<i64>, kmult: i64) -> Charge {
        Charge { frac: frac - frac.floor(), kmult }
    }

    pub fn rational(num: i64, den: i64) -> Charge {
        Charge::new(Ratio::new(num, den), 0)
    }

    pub fn frac(&self) -> Ratio<i64> {
        self.frac
    }

    pub fn shift(&self, by: Ratio<i64>) -> Charge {
        Charge::new(self.frac + by, self.kmult)
    }

    pub fn plus_kappa(&self, k: i64) -> Charge {
        Charge { frac: self.frac, kmult: self.kmult + k }
    }
}

impl fmt::Debug for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kmult {
            0 => write!(f, "{}", self.frac),
            1 => write!(f, "{}+k", self.frac),
            k => write!(f, "{}{:+}k", self.frac, k),
        }
    }
}

/// `(q, q+κ̄, …, q+(g-1)κ̄)`, stored by its first entry and length.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChargedSegment {
    pub start: Charge,
    pub len: usize,
}

impl ChargedSegment {
    pub fn new(start: Charge, len: usize) -> Result<ChargedSegment> {
        if len == 0 {
            return Err(CoreError::InvalidParameters("segments are nonempty".into()));
        }
        Ok(ChargedSegment { start, len })
    }

    pub fn entries(&self) -> Vec<Charge> {
        (0..self.len as i64).map(|j| self.start.plus_kappa(j)).collect()
    }

    pub fn shift(&self, by: Ratio<i64>) -> ChargedSegment {
        ChargedSegment { start: self.start.shift(by), len: self.len }
    }
}

impl fmt::Debug for ChargedSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.entries().iter().map(|c| format!("{c:?}")).collect();
        write!(f, "({})", e.join(","))
    }
}

pub type Partition = Vec<u32>;

/// χ = (Q, ξ) with Q a multiset of segments (kept sorted) and ξ an
/// ℓ-multipartition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexPair {
    segments: Vec<ChargedSegment>,
    pub xi: Vec<Partition>,
}

impl IndexPair {
    pub fn new(mut segments: Vec<ChargedSegment>, xi: Vec<Partition>) -> IndexPair {
        segments.sort();
        IndexPair { segments, xi }
    }

    pub fn segments(&self) -> &[ChargedSegment] {
        &self.segments
    }

    pub fn size(&self) -> usize {
        self.segments.iter().map(|s| s.len).sum::<usize>() + self.xi.iter().flatten().map(|&x| x as usize).sum::<usize>()
    }
}

impl fmt::Debug for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xi: Vec<String> = self
            .xi
            .iter()
            .map(|p| if p.is_empty() { "∅".into() } else { format!("({})", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")) })
            .collect();
        write!(f, "{{{:?}; ({})}}", self.segments, xi.join(","))
    }
}

fn check_lp(ell: u32, p: u32) -> Result<()> {
    if ell == 0 || p == 0 || !ell.is_multiple_of(p) {
        return Err(CoreError::InvalidParameters(format!("p={p} must divide l={ell}")));
    }
    Ok(())
}

/// α: shift every segment by `-1/p` and rotate ξ left by ℓ/p.
pub fn alpha_act(chi: &IndexPair, ell: u32, p: u32) -> Result<IndexPair> {
    check_lp(ell, p)?;
    if chi.xi.len() != ell as usize {
        return Err(CoreError::InconsistentLength { expected: ell as usize, got: chi.xi.len() });
    }
    let by = Ratio::new(-1, p as i64);
    let segments = chi.segments.iter().map(|s| s.shift(by)).collect();
    let mut xi = chi.xi.clone();
    xi.rotate_left((ell / p) as usize);
    Ok(IndexPair::new(segments, xi))
}

/// The α-orbit of χ (starting at χ) and `p_χ`, its size.
pub fn orbit_and_stabilizer(chi: &IndexPair, ell: u32, p: u32) -> Result<(Vec<IndexPair>, u32)> {
    let mut orbit = vec![chi.clone()];
    let mut cur = alpha_act(chi, ell, p)?;
    while cur != *chi {
        orbit.push(cur.clone());
        cur = alpha_act(&cur, ell, p)?;
    }
    let size = orbit.len() as u32;
    Ok((orbit, size))
}

/// Partitions of m in decreasing lexicographic order.
pub fn partitions(m: u32) -> Vec<Partition> {
    fn rec(m: u32, max: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=m.min(max)).rev() {
            prefix.push(part);
            rec(m - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// ℓ-multipartitions of m.
pub fn multipartitions(m: u32, ell: u32) -> Vec<Vec<Partition>> {
    let mut out: Vec<(u32, Vec<Partition>)> = vec![(0, Vec::new())];
    for _ in 0..ell {
        let mut next = Vec::new();
        for (used, tuple) in &out {
            for k in 0..=m - used {
                for part in partitions(k) {
                    let mut t = tuple.clone();
                    t.push(part);
                    next.push((used + k, t));
                }
            }
        }
        out = next;
    }
    out.into_iter().filter(|(used, _)| *used == m).map(|(_, t)| t).collect()
}

/// Multisegments of total size m whose segments start in `universe`.
pub fn multisegments(m: usize, universe: &[Charge]) -> Vec<Vec<ChargedSegment>> {
    let mut segs = Vec::new();
    for &c in universe {
        for len in 1..=m {
            segs.push(ChargedSegment { start: c, len });
        }
    }
    segs.sort();
    // multisets as nondecreasing index sequences
    fn rec(segs: &[ChargedSegment], from: usize, left: usize, prefix: &mut Vec<ChargedSegment>, out: &mut Vec<Vec<ChargedSegment>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in from..segs.len() {
            if segs[i].len <= left {
                prefix.push(segs[i]);
                rec(segs, i, left - segs[i].len, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&segs, 0, m, &mut Vec::new(), &mut out);
    out
}

/// `{j/(pℓ) : 0 ≤ j < pℓ}`, the default α-closed charge universe.
pub fn default_universe(ell: u32, p: u32) -> Vec<Charge> {
    let d = (ell * p) as i64;
    (0..d).map(|j| Charge::rational(j, d)).collect()
}

/// All pairs of size n with segment starts in `universe`; `None` restricts
/// to Q = ∅ (category 𝒪).
pub fn index_pairs(n: usize, ell: u32, universe: Option<&[Charge]>) -> Vec<IndexPair> {
    let mut out = Vec::new();
    let max_q = if universe.is_some() { n } else { 0 };
    for q in 0..=max_q {
        let segsets = match universe {
            Some(u) => multisegments(q, u),
            None => vec![Vec::new()],
        };
        for segs in &segsets {
            for xi in multipartitions((n - q) as u32, ell) {
                out.push(IndexPair::new(segs.clone(), xi));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct OrbitEntry {
    pub representative: IndexPair,
    pub orbit: Vec<IndexPair>,
    pub p_chi: u32,
    /// `p / p_χ` simple modules
    pub simples: u32,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub orbits: Vec<OrbitEntry>,
    pub total: u64,
}

/// Σ over α-orbits of `p/p_χ`. With `universe = None` only Q = ∅ is
/// enumerated (category 𝒪). The universe must be closed under `-1/p`.
pub fn count_simples(n: usize, ell: u32, p: u32, universe: Option<&[Charge]>) -> Result<Census> {
    check_lp(ell, p)?;
    if let Some(u) = universe {
        let set: BTreeSet<Charge> = u.iter().copied().collect();
        if u.iter().any(|c| !set.contains(&c.shift(Ratio::new(-1, p as i64)))) {
            return Err(CoreError::UniverseNotClosed);
        }
    }
    let mut seen: BTreeSet<IndexPair> = BTreeSet::new();
    let mut orbits = Vec::new();
    let mut total = 0u64;
    for chi in index_pairs(n, ell, universe) {
        if seen.contains(&chi) {
            continue;
        }
        let (orbit, p_chi) = orbit_and_stabilizer(&chi, ell, p)?;
        seen.extend(orbit.iter().cloned());
        let simples = p / p_chi;
        total += simples as u64;
        orbits.push(OrbitEntry { representative: chi, orbit, p_chi, simples });
    }
    Ok(Census { orbits, total })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    RemainsSimple,
    SplitsInTwo,
}

/// Restriction of a G(2,1,n) simple to G(2,2,n): it splits iff `ξ^(1) = ξ^(2)`
/// and Q is invariant under the shift by 1/2.
pub fn g22n_restriction(chi: &IndexPair) -> Result<Restriction> {
    if chi.xi.len() != 2 {
        return Err(CoreError::InconsistentLength { expected: 2, got: chi.xi.len() });
    }
    let shifted: Vec<ChargedSegment> = chi.segments.iter().map(|s| s.shift(Ratio::new(1, 2))).collect();
    let shifted = IndexPair::new(shifted, Vec::new());
    let same_q = shifted.segments == chi.segments;
    Ok(if chi.xi[0] == chi.xi[1] && same_q { Restriction::SplitsInTwo } else { Restriction::RemainsSimple })
}

/// In the group algebra of G(ℓ,1,n), α scales `t^a w` by `ζ_p^{Σa}`. Checks
/// that α is multiplicative on group elements, that α^p = 1, that its fixed
/// group elements are exactly G(ℓ,p,n), and that each `t_1^j` is a unit in
/// the `ζ_p^j`-eigenspace (so the eigenspace products contain 1).
pub fn morita_unit_check(ell: u32, p: u32, n: usize) -> Result<bool> {
    check_lp(ell, p)?;
    let field = CycloField::get(ell);
    let zp = |k: i64| field.zeta_pow(k * (ell / p) as i64);
    let alpha = |g: &GPNElement| zp(g.texp.iter().map(|&a| a as i64).sum());
    let all = GPNElement::all(ell, 1, n);
    for g in &all {
        for h in all.iter().step_by(all.len().div_ceil(24)) {
            let gh = g.mul(h)?;
            if alpha(&gh) != &alpha(g) * &alpha(h) {
                return Ok(false);
            }
        }
        if alpha(g).pow(p) != field.one() {
            return Ok(false);
        }
        let fixed = alpha(g) == field.one();
        let member = GPNElement::new(ell, p, &g.texp.iter().map(|&a| a as i64).collect::<Vec<_>>(), g.perm.clone())?.is_member();
        if fixed != member {
            return Ok(false);
        }
    }
    for j in 0..p as i64 {
        let t = GPNElement::t_power(ell, 1, n, 1, j);
        let tinv = GPNElement::t_power(ell, 1, n, 1, -j);
        if alpha(&t) != zp(j) || !t.mul(&tinv)?.is_identity() || alpha(&tinv) != zp(-j) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cex(input: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Counterexample {
    Counterexample { input: input.into(), lhs: lhs.into(), rhs: rhs.into() }
}

/// Which bullet of the G(2,2,2) family list a pair with Q ≠ ∅ belongs to.
fn g222_family(chi: &IndexPair) -> &'static str {
    let segs = chi.segments();
    match segs {
        [s] if s.len == 1 => "(a) with ((1),∅)",
        [s] if s.len == 2 => "(a,a+k)",
        [a, b] if a.start.shift(Ratio::new(1, 2)) == b.start => "(a),(a+1/2)",
        [_, _] => "(a),(b)",
        _ => "other",
    }
}

/// Census checks for (ℓ,p,n): α has order dividing p, stabilizers divide p,
/// the orbit count agrees with the per-pair sum `Σ_χ p/p_χ²`, the G(2,2,n)
/// splitting rule agrees with stabilizers, the Morita units exist, and for
/// G(2,2,2) the category-𝒪 count and families match the worked example.
pub fn verify_clifford(ell: u32, p: u32, n: usize) -> Result<Report> {
    check_lp(ell, p)?;
    let universe = default_universe(ell, p);
    let pairs = index_pairs(n, ell, Some(&universe));
    let mut checks = Vec::new();

    checks.push(CheckResult::timed(|| {
        for chi in &pairs {
            let mut cur = chi.clone();
            for _ in 0..p {
                cur = alpha_act(&cur, ell, p).expect("valid");
            }
            let (_, p_chi) = orbit_and_stabilizer(chi, ell, p).expect("valid");
            if cur != *chi || !p.is_multiple_of(p_chi) {
                return CheckResult::fail("clifford.alpha_order", cex(format!("{chi:?}"), format!("{cur:?}"), format!("p_chi={p_chi}")));
            }
        }
        CheckResult::pass("clifford.alpha_order").with_note(format!("{} pairs", pairs.len()))
    }));

    for (id, uni) in [("clifford.count.category_o", None), ("clifford.count.all", Some(universe.as_slice()))] {
        let census = count_simples(n, ell, p, uni)?;
        // each pair contributes (p/p_χ)/p_χ, which sums to p/p_χ over its orbit
        let mut per_pair = Ratio::new(0i64, 1);
        for chi in index_pairs(n, ell, uni) {
            let (_, p_chi) = orbit_and_stabilizer(&chi, ell, p)?;
            per_pair += Ratio::new(p as i64, (p_chi * p_chi) as i64);
        }
        let ok = per_pair == Ratio::from_integer(census.total as i64);
        checks.push(
            CheckResult::from_bool(id, ok, || cex("census", census.total.to_string(), per_pair.to_string()))
                .with_note(format!("{} simples in {} orbits", census.total, census.orbits.len())),
        );
    }

    if ell == 2 {
        let id = "clifford.g22n_restriction";
        let bad = pairs.iter().find(|chi| {
            let splits = g22n_restriction(chi).expect("bipartition") == Restriction::SplitsInTwo;
            let fixed = alpha_act(chi, 2, 2).expect("valid") == **chi;
            splits != fixed
        });
        checks.push(match bad {
            None => CheckResult::pass(id),
            Some(chi) => CheckResult::fail(id, cex(format!("{chi:?}"), "restriction rule", "stabilizer")),
        });
    }

    checks.push(CheckResult::from_bool("clifford.morita_units", morita_unit_check(ell, p, n)?, || {
        cex(format!("G({ell},1,{n})"), "false", "true")
    }));

    if (ell, p, n) == (2, 2, 2) {
        checks.push(g222_category_o()?);
        checks.push(g222_families(&universe)?);
    }
    Ok(Report::new(checks))
}

/// Category 𝒪 of G(2,2,2): 4 simples, two from the free orbits of
/// ((2),∅) and ((1,1),∅), two from the fixed bipartition ((1),(1)).
fn g222_category_o() -> Result<CheckResult> {
    let census = count_simples(2, 2, 2, None)?;
    let expect = [
        (IndexPair::new(vec![], vec![vec![2], vec![]]), 1, 2),
        (IndexPair::new(vec![], vec![vec![1, 1], vec![]]), 1, 2),
        (IndexPair::new(vec![], vec![vec![1], vec![1]]), 2, 1),
    ];
    let pattern: Vec<(String, u32)> =
        census.orbits.iter().map(|o| (format!("{:?}", o.representative), o.simples)).collect();
    let matched = expect.iter().all(|(chi, simples, size)| {
        census.orbits.iter().any(|o| o.orbit.contains(chi) && o.simples == *simples && o.orbit.len() == *size)
    });
    let ok = census.total == 4 && census.orbits.len() == 3 && matched;
    Ok(CheckResult::from_bool("clifford.g222.category_o", ok, || {
        cex("G(2,2,2) category O", format!("{} {:?}", census.total, pattern), format!("4 {expect:?}"))
    })
    .with_note(format!("{} simples: {:?}", census.total, pattern)))
}

/// The Q ≠ ∅ families of G(2,2,2): every orbit has the size and simple
/// count of its bullet, and the identified representatives are the
/// half-shifts.
fn g222_families(universe: &[Charge]) -> Result<CheckResult> {
    let census = count_simples(2, 2, 2, Some(universe))?;
    let half = Ratio::new(1, 2);
    for o in census.orbits.iter().filter(|o| !o.representative.segments().is_empty()) {
        let chi = &o.representative;
        let family = g222_family(chi);
        let shifted: Vec<ChargedSegment> = chi.segments().iter().map(|s| s.shift(half)).collect();
        let partner = IndexPair::new(shifted, {
            let mut xi = chi.xi.clone();
            xi.rotate_left(1);
            xi
        });
        let (want_simples, want_orbit) = match family {
            "(a),(a+1/2)" => (2, 1),
            "(a) with ((1),∅)" | "(a,a+k)" | "(a),(b)" => (1, 2),
            _ => (0, 0),
        };
        let mixed_xi = family == "(a) with ((1),∅)" && chi.xi.iter().all(|p| p.len() <= 1);
        let ok = o.simples == want_simples
            && o.orbit.len() == want_orbit
            && o.orbit.contains(&partner)
            && (family != "(a) with ((1),∅)" || mixed_xi);
        if !ok {
            return Ok(CheckResult::fail(
                "clifford.g222.families",
                cex(format!("{chi:?} [{family}]"), format!("simples={} orbit={:?}", o.simples, o.orbit), format!("simples={want_simples} partner={partner:?}")),
            ));
        }
    }
    let by_family = |f: &str| census.orbits.iter().filter(|o| !o.representative.segments().is_empty() && g222_family(&o.representative) == f).map(|o| o.simples).sum::<u32>();
    let note = ["(a) with ((1),∅)", "(a,a+k)", "(a),(b)", "(a),(a+1/2)"]
        .iter()
        .map(|f| format!("{f}: {}", by_family(f)))
        .collect::<Vec<_>>()
        .join("; ");
    Ok(CheckResult::pass("clifford.g222.families").with_note(note))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(a: &[u32], b: &[u32]) -> Vec<Partition> {
        vec![a.to_vec(), b.to_vec()]
    }

    #[test]
    fn alpha_examples() {
        let chi = IndexPair::new(vec![], bip(&[2], &[]));
        assert_eq!(alpha_act(&chi, 2, 2).unwrap().xi, bip(&[], &[2]));
        assert_eq!(alpha_act(&chi, 2, 1).unwrap(), chi);
        let seg = ChargedSegment::new(Charge::rational(0, 1), 1).unwrap();
        let chi = IndexPair::new(vec![seg], bip(&[], &[]));
        assert_eq!(alpha_act(&chi, 2, 2).unwrap().segments()[0].start, Charge::rational(1, 2));
    }

    #[test]
    fn stabilizers() {
        let sym = IndexPair::new(vec![], bip(&[1], &[1]));
        assert_eq!(orbit_and_stabilizer(&sym, 2, 2).unwrap().1, 1);
        let asym = IndexPair::new(vec![], bip(&[2], &[]));
        assert_eq!(orbit_and_stabilizer(&asym, 2, 2).unwrap().1, 2);
        assert_eq!(orbit_and_stabilizer(&asym, 2, 1).unwrap().1, 1);
    }

    #[test]
    fn category_o_counts() {
        assert_eq!(count_simples(2, 2, 2, None).unwrap().total, 4);
        assert_eq!(count_simples(2, 2, 1, None).unwrap().total, 5);
    }

    #[test]
    fn restriction_examples() {
        let half = |j: i64| ChargedSegment::new(Charge::rational(j, 2), 1).unwrap();
        assert_eq!(g22n_restriction(&IndexPair::new(vec![], bip(&[1], &[1]))).unwrap(), Restriction::SplitsInTwo);
        assert_eq!(g22n_restriction(&IndexPair::new(vec![], bip(&[2], &[]))).unwrap(), Restriction::RemainsSimple);
        let pair = IndexPair::new(vec![half(0), half(1)], bip(&[], &[]));
        assert_eq!(g22n_restriction(&pair).unwrap(), Restriction::SplitsInTwo);
    }

    #[test]
    fn universe_must_be_closed() {
        let u = vec![Charge::rational(0, 1)];
        assert!(matches!(count_simples(1, 2, 2, Some(&u)), Err(CoreError::UniverseNotClosed)));
    }

    #[test]
    fn morita_units() {
        for (l, p, n) in [(2, 1, 2), (2, 2, 2), (4, 2, 2)] {
            assert!(morita_unit_check(l, p, n).unwrap());
        }
    }

    #[test]
    fn g222_suite_passes() {
        let r = verify_clifford(2, 2, 2).unwrap();
        let bad: Vec<_> = r.failures().map(|c| (c.id.clone(), c.counterexample.clone())).collect();
        assert!(bad.is_empty(), "{bad:?}");
        assert!(r.get("clifford.g222.category_o").is_some());
    }

    #[test]
    fn multipartition_counts() {
        // bipartitions of 2: 5; of 3: 10
        assert_eq!(multipartitions(2, 2).len(), 5);
        assert_eq!(multipartitions(3, 2).len(), 10);
        assert_eq!(partitions(4).len(), 5);
    }
}
