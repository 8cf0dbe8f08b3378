//! Anti-Sidorenko checks: exhaustive, pinned, family scans and the
//! blowup falsifier.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::counting::{baseline, Counter, Mode, PinnedPattern, Prepared};
use crate::digraph::{Digraph, FillStrategy, Tournament};
use crate::enumerate::{check_guard, fold_codes, EXHAUSTIVE_LIMIT};
use crate::format::write_trn;
use crate::scalar::{int_pow, inv_pow2};
use crate::Rational;

use super::{
    two_block_tournament, CurvePoint, Property, PropertyError, PropertyReport, Regime,
    TwoBlockParams, Verdict,
};

/// Largest host size for pinned checks (every anchor of every tournament).
pub const STRONG_ANTI_LIMIT: usize = 6;

fn one() -> Rational {
    Rational::from_integer(1.into())
}

fn ratio(value: u128, bound: &Rational) -> Rational {
    Rational::from_integer(value.into()) / bound
}

/// Injective `r`-tuples over `0..n`, lexicographic.
fn injective_tuples(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                go(n, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

#[derive(Debug, Clone, Copy)]
struct Extreme {
    value: u128,
    code: u64,
    anchor: usize,
}

#[derive(Debug, Clone, Copy, Default)]
struct Span {
    max: Option<Extreme>,
    min: Option<Extreme>,
}

impl Span {
    fn see(&mut self, e: Extreme) {
        if self.max.map_or(true, |m| e.value > m.value) {
            self.max = Some(e);
        }
        if self.min.map_or(true, |m| e.value < m.value) {
            self.min = Some(e);
        }
    }

    /// `self` covers lower codes, so it wins ties.
    fn merge(self, other: Span) -> Span {
        let mut out = self;
        if let Some(e) = other.max {
            if out.max.map_or(true, |m| e.value > m.value) {
                out.max = Some(e);
            }
        }
        if let Some(e) = other.min {
            if out.min.map_or(true, |m| e.value < m.value) {
                out.min = Some(e);
            }
        }
        out
    }
}

/// Labeled counts over every tournament on `n` vertices and every anchor.
fn scan_all(
    prep: &Prepared,
    n: usize,
    anchors: &[Vec<usize>],
    budget: u64,
) -> Result<Span, PropertyError> {
    Ok(fold_codes(
        n,
        Span::default,
        |span, host, code| {
            for (i, a) in anchors.iter().enumerate() {
                let value = prep.count(host, a, Mode::Labeled, budget, None)?;
                span.see(Extreme { value, code, anchor: i });
            }
            Ok(())
        },
        Span::merge,
    )?)
}

fn exhaustive(
    d: &Digraph,
    pinned: &[usize],
    n_max: usize,
    property: Property,
    counter: &Counter,
) -> Result<PropertyReport, PropertyError> {
    let prep = Prepared::pinned(d, pinned);
    let mut report = PropertyReport::new(d, "", property, Regime::Exhaustive { n_max });
    if !pinned.is_empty() {
        report.pinned = Some(pinned.to_vec());
    }
    let anti = property != Property::SidorenkoRatioScan;
    let mut extremal: Option<Rational> = None;
    for n in 1..=n_max {
        let anchors = injective_tuples(n, pinned.len());
        if anchors.is_empty() {
            continue;
        }
        let bound = baseline(n, d.n() - pinned.len(), d.edge_count());
        let span = scan_all(&prep, n, &anchors, counter.budget())?;
        let (hi, lo) = (span.max.expect("nonempty"), span.min.expect("nonempty"));
        let point = CurvePoint::new(n, ratio(hi.value, &bound), ratio(lo.value, &bound));
        if anti {
            if extremal.as_ref().map_or(true, |x| point.max_ratio > *x) {
                extremal = Some(point.max_ratio.clone());
            }
            if point.max_ratio > one() && !report.is_violated() {
                let t = Tournament::from_code(n, hi.code)?;
                report.verdict = Verdict::ViolatedBy { n };
                report.witness = Some(write_trn(&t));
                report.witness_anchor = Some(anchors[hi.anchor].clone());
                report.witness_ratio = Some(point.max_ratio.clone());
            }
        } else if n >= d.n() && extremal.as_ref().map_or(true, |x| point.min_ratio < *x) {
            extremal = Some(point.min_ratio.clone());
        }
        report.curve.push(point);
    }
    if let Some(x) = extremal {
        report.set_extremal(x);
    }
    if !report.is_violated() {
        report.verdict = if anti {
            Verdict::HoldsUpTo { n_max }
        } else {
            Verdict::Scanned { n_max }
        };
    }
    Ok(report)
}

/// `N_L(D, T) <= 2^{-e} n^v` over every tournament with `n <= n_max`.
///
/// The extremal ratio is the largest `N_L / bound` seen; on a violation the
/// witness is the worst host at the smallest violating `n`.
pub fn check_anti_exhaustive(
    d: &Digraph,
    n_max: usize,
    counter: &Counter,
) -> Result<PropertyReport, PropertyError> {
    check_guard(n_max, EXHAUSTIVE_LIMIT)?;
    exhaustive(d, &[], n_max, Property::AntiSidorenkoUpTo, counter)
}

/// Pinned bound `2^{-e} n^{v - |I|}` for every tournament with
/// `n <= n_max` and every injective anchor of `I`.
pub fn check_strong_anti(
    p: &PinnedPattern,
    n_max: usize,
    counter: &Counter,
) -> Result<PropertyReport, PropertyError> {
    check_guard(n_max, STRONG_ANTI_LIMIT)?;
    let pinned = p.pinned().to_vec();
    let mut report = exhaustive(p.pattern(), &pinned, n_max, Property::StrongAntiUpTo, counter)?;
    if pinned.is_empty() {
        report.pinned = Some(Vec::new());
    }
    Ok(report)
}

/// Smallest `N_L / bound` per `n` over all tournaments. The extremal ratio
/// is the minimum over `n >= v(D)`; no verdict is drawn.
pub fn sidorenko_ratio_scan(
    d: &Digraph,
    n_max: usize,
    counter: &Counter,
) -> Result<PropertyReport, PropertyError> {
    check_guard(n_max, EXHAUSTIVE_LIMIT)?;
    let mut report = exhaustive(d, &[], n_max, Property::SidorenkoRatioScan, counter)?;
    report
        .notes
        .push("Sidorenko-side ratios are reported, not judged: the bound holds only up to 1 - o(1)".into());
    Ok(report)
}

/// Whether `N_L(D, T)` depends only on `n`, for every `n <= n_max`.
pub fn check_impartial(
    d: &Digraph,
    n_max: usize,
    counter: &Counter,
) -> Result<PropertyReport, PropertyError> {
    let imp = counter.impartial_upto(d, n_max)?;
    let mut report = PropertyReport::new(d, "", Property::Impartial, Regime::Exhaustive { n_max });
    let mut extremal: Option<Rational> = None;
    for (n, c) in &imp.constants {
        if *n == 0 {
            continue;
        }
        let r = Rational::from_integer(c.clone().into()) / baseline(*n, d.n(), d.edge_count());
        report.curve.push(CurvePoint::new(*n, r.clone(), r.clone()));
        report.notes.push(format!("n={n}: N_L={c}"));
        if extremal.as_ref().map_or(true, |x| r > *x) {
            extremal = Some(r);
        }
    }
    if let Some(x) = extremal {
        report.set_extremal(x);
    }
    match imp.witness {
        Some(w) => {
            report.verdict = Verdict::ViolatedBy { n: w.n };
            report.witness = Some(write_trn(&w.first));
            report.witness_alt = Some(write_trn(&w.second));
            report.notes.push(format!(
                "n={}: N_L={} in the first host, {} in the second",
                w.n, w.first_count, w.second_count
            ));
        }
        None => report.verdict = Verdict::HoldsUpTo { n_max },
    }
    Ok(report)
}

/// Host families for ratio scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostFamily {
    /// `TT_n`.
    Transitive,
    /// Balanced blowup of `base` with `n / v(base)` copies per vertex,
    /// completed by `fill`.
    Blowup { base: Digraph, fill: FillStrategy },
    /// Two-block random tournaments with block fraction `c`.
    TwoBlock { c: Rational, seed: u64 },
}

impl HostFamily {
    pub fn name(&self) -> &'static str {
        match self {
            HostFamily::Transitive => "transitive",
            HostFamily::Blowup { .. } => "blowup",
            HostFamily::TwoBlock { .. } => "two-block",
        }
    }

    fn params(&self) -> String {
        match self {
            HostFamily::Transitive => String::new(),
            HostFamily::Blowup { base, fill } => {
                format!("base v={} e={}, fill={fill:?}", base.n(), base.edge_count())
            }
            HostFamily::TwoBlock { c, seed } => format!("c={c}, seed={seed}"),
        }
    }

    pub fn host(&self, n: usize) -> Result<Tournament, PropertyError> {
        match self {
            HostFamily::Transitive => Ok(Tournament::transitive(n)),
            HostFamily::Blowup { base, fill } => {
                let k = base.n();
                if k == 0 || n == 0 || n % k != 0 {
                    return Err(PropertyError::Precondition(format!(
                        "blowup hosts need n to be a positive multiple of {k}, got {n}"
                    )));
                }
                Ok(base.blowup(n / k)?.fill_to_tournament(*fill))
            }
            HostFamily::TwoBlock { c, seed } => {
                let p = TwoBlockParams::new(n, c.clone(), *seed)?;
                Ok(two_block_tournament(&p))
            }
        }
    }
}

/// Labeled ratio on one host of `family` per `n` in `ns`. Every size is
/// scanned so the curve is complete; the verdict cites the first violation.
pub fn check_anti_on_family(
    d: &Digraph,
    family: &HostFamily,
    ns: &[usize],
    counter: &Counter,
) -> Result<PropertyReport, PropertyError> {
    let mut params = family.params();
    if !params.is_empty() {
        params.push_str(", ");
    }
    let _ = write!(params, "n={ns:?}");
    let regime = Regime::Family {
        name: family.name().into(),
        params,
    };
    let mut report = PropertyReport::new(d, "", Property::AntiSidorenkoUpTo, regime);
    let mut extremal: Option<Rational> = None;
    for &n in ns {
        let t = family.host(n)?;
        let r = counter.labeled(d, &t)?.ratio;
        if extremal.as_ref().map_or(true, |x| r > *x) {
            extremal = Some(r.clone());
        }
        if r > one() && !report.is_violated() {
            report.verdict = Verdict::ViolatedBy { n };
            report.witness = Some(write_trn(&t));
            report.witness_ratio = Some(r.clone());
        }
        report.curve.push(CurvePoint::new(n, r.clone(), r));
    }
    if let Some(x) = extremal {
        report.set_extremal(x);
    }
    if !report.is_violated() {
        report.verdict = Verdict::HoldsUpTo {
            n_max: ns.iter().copied().max().unwrap_or(0),
        };
    }
    Ok(report)
}

/// A filled balanced blowup whose density clears `k^{-k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupFalsifier {
    pub host: Tournament,
    pub m: usize,
    pub density: Rational,
    /// `k^{-k}`.
    pub floor: Rational,
    /// `2^{-e}`.
    pub baseline: Rational,
}

impl BlowupFalsifier {
    /// Density above the random baseline: the anti bound fails on `host`.
    pub fn violates_anti(&self) -> bool {
        self.density > self.baseline
    }
}

/// [`falsify_by_blowup_with`] at `m = 2`, the smallest blowup that is not
/// the pattern itself.
pub fn falsify_by_blowup(
    d: &Digraph,
    counter: &Counter,
) -> Result<Option<BlowupFalsifier>, PropertyError> {
    falsify_by_blowup_with(d, 2, counter)
}

/// When `e >= k log2 k` (checked as `2^e >= k^k`), blows `D` up `m` times,
/// fills lexicographically and returns the host with its exact density.
///
/// The identity block map alone gives `m^k` homomorphisms out of
/// `(mk)^k` maps, so the density is at least `k^{-k}` for every `m`; that
/// is asserted. Since `k^{-k} >= 2^{-e}`, the host breaks the anti bound
/// unless both are equal.
pub fn falsify_by_blowup_with(
    d: &Digraph,
    m: usize,
    counter: &Counter,
) -> Result<Option<BlowupFalsifier>, PropertyError> {
    let (k, e) = (d.n(), d.edge_count());
    if k == 0 || BigUint::from(2u32).pow(e) < BigUint::from(k).pow(k) {
        return Ok(None);
    }
    let host = d.blowup(m)?.fill_to_tournament(FillStrategy::Lexicographic);
    let density = counter.density(d, &host)?;
    let floor = int_pow(k, k).recip();
    assert!(density >= floor, "blowup density below k^-k");
    Ok(Some(BlowupFalsifier {
        host,
        m,
        density,
        floor,
        baseline: inv_pow2(e),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::VertexSet;
    use crate::constructions::{directed_cycle, directed_path, star, subset_bipartite, transitive_tournament};

    fn rat(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn tuples() {
        assert_eq!(injective_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(injective_tuples(3, 2).len(), 6);
        assert!(injective_tuples(1, 2).is_empty());
    }

    #[test]
    fn exhaustive_examples() {
        let c = Counter::default();
        let p2 = check_anti_exhaustive(&directed_path(2), 6, &c).unwrap();
        assert_eq!(p2.verdict, Verdict::HoldsUpTo { n_max: 6 });
        let c3 = check_anti_exhaustive(&directed_cycle(3).unwrap(), 6, &c).unwrap();
        assert_eq!(c3.verdict, Verdict::HoldsUpTo { n_max: 6 });
        let edge = check_anti_exhaustive(&directed_path(1), 5, &c).unwrap();
        assert_eq!(edge.extremal_ratio, rat(4, 5));
        assert_eq!(edge.curve[2].max_ratio, rat(2, 3));
        assert_eq!(edge.curve[2].min_ratio, rat(2, 3));
        assert!(check_anti_exhaustive(&directed_path(1), 8, &c).is_err());
    }

    #[test]
    fn pinned_violation_reverifies() {
        // An edge pinned at its tail counts out-degrees: n - 1 > n / 2 at n = 3.
        let c = Counter::default();
        let p = PinnedPattern::new(directed_path(1), VertexSet::from_members(2, [0])).unwrap();
        let r = check_strong_anti(&p, 4, &c).unwrap();
        assert_eq!(r.verdict, Verdict::ViolatedBy { n: 3 });
        assert_eq!(r.witness_ratio, Some(rat(4, 3)));
        assert_eq!(r.curve[1].max_ratio, rat(1, 1));
        r.reverify(&c).unwrap();
        let back = PropertyReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        back.reverify(&c).unwrap();
    }

    #[test]
    fn family_examples() {
        let c = Counter::default();
        let ns: Vec<usize> = (4..=14).collect();
        let r = check_anti_on_family(&star(2, 0).unwrap(), &HostFamily::Transitive, &ns, &c).unwrap();
        assert_eq!(r.verdict, Verdict::ViolatedBy { n: 12 });
        // n(n-1)(n-2)/3 against n^3/4.
        assert_eq!(r.witness_ratio, Some(rat(4 * 11 * 10, 3 * 144)));
        r.reverify(&c).unwrap();
        assert_eq!(r.curve.len(), ns.len());

        let ns: Vec<usize> = (3..=30).collect();
        let r = check_anti_on_family(&star(1, 1).unwrap(), &HostFamily::Transitive, &ns, &c).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsUpTo { n_max: 30 });

        let tt7 = transitive_tournament(7);
        let fam = HostFamily::Blowup {
            base: tt7.clone(),
            fill: FillStrategy::Lexicographic,
        };
        let r = check_anti_on_family(&tt7, &fam, &[14], &c).unwrap();
        assert_eq!(r.verdict, Verdict::ViolatedBy { n: 14 });
        assert!(fam.host(15).is_err());
    }

    #[test]
    fn blowup_falsifier() {
        let c = Counter::default();
        let tt7 = transitive_tournament(7);
        let f = falsify_by_blowup(&tt7, &c).unwrap().unwrap();
        assert_eq!(f.host.n(), 14);
        assert!(f.density >= f.floor);
        assert!(f.floor > f.baseline);
        assert!(f.violates_anti());
        assert!(falsify_by_blowup(&directed_path(2), &c).unwrap().is_none());
        let (sb, _) = subset_bipartite(2).unwrap();
        assert!(falsify_by_blowup(&sb, &c).unwrap().is_none());
        // Any completion of the blowup works.
        for seed in 0..3 {
            let host = tt7.blowup(2).unwrap().fill_to_tournament(FillStrategy::SeededRandom(seed));
            assert!(c.density(&tt7, &host).unwrap() >= f.floor);
        }
    }

    #[test]
    fn strong_anti_examples() {
        let c = Counter::default();
        let s = star(1, 1).unwrap();
        let p = PinnedPattern::new(s.clone(), VertexSet::from_members(3, [0])).unwrap();
        let r = check_strong_anti(&p, 5, &c).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsUpTo { n_max: 5 });
        assert_eq!(r.pinned, Some(vec![0]));
        let free = check_strong_anti(&PinnedPattern::unpinned(s.clone()), 5, &c).unwrap();
        let plain = check_anti_exhaustive(&s, 5, &c).unwrap();
        assert_eq!((free.verdict, free.extremal_ratio), (plain.verdict, plain.extremal_ratio));
        assert!(check_strong_anti(&p, 7, &c).is_err());
    }

    #[test]
    fn impartial_report() {
        let c = Counter::default();
        let r = check_impartial(&directed_path(2), 4, &c).unwrap();
        assert_eq!(r.verdict, Verdict::ViolatedBy { n: 3 });
        r.reverify(&c).unwrap();
        let r = check_impartial(&directed_path(1), 5, &c).unwrap();
        assert_eq!(r.verdict, Verdict::HoldsUpTo { n_max: 5 });
    }

    #[test]
    fn sidorenko_scan_draws_no_verdict() {
        let c = Counter::default();
        let r = sidorenko_ratio_scan(&star(2, 0).unwrap(), 5, &c).unwrap();
        assert_eq!(r.verdict, Verdict::Scanned { n_max: 5 });
        // Σ d+(d+ - 1) is smallest on the cyclic triangle (0) and on the
        // regular 5-tournament (10, against 125/4).
        assert_eq!(r.curve[2].min_ratio, rat(0, 1));
        assert_eq!(r.curve[4].min_ratio, rat(8, 25));
        assert_eq!(r.extremal_ratio, rat(0, 1));
    }
}
