//! Edge labels on covering edges and checks of the good and EL properties.
//!
//! Four schemes are supported:
//!
//! * inverse standard: the swapped value pair;
//! * feasible: `(Y(dst), swap)`;
//! * hit feasible: `(Y(dst), hits_c(dst), swap)`;
//! * ranked hit feasible: `(Y(dst), hits permuted by p)`.
//!
//! Swaps are compared in dictionary order on `(a, b)` with the larger pair
//! preferred, so the greedy search favours swaps among late-accessed
//! elements. Feasible beats infeasible and more hits beat fewer.
//! Ranked labels carry the swap as a tiebreak that only
//! [`compare`] consults; [`compare_value`] and the property checks ignore it.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;

use crate::bruhat::{build_graph, successors, CoverMode, CoveringEdge};
use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};
use crate::trace_cache::{hit_vector, TraceSpec};

/// Largest `m` accepted by [`check_good`].
pub const GOOD_CHECK_CAP: usize = 5;
/// Largest `m` accepted by [`check_el`].
pub const EL_CHECK_CAP: usize = 4;

/// Must-precede constraints: `(a, b)` means `a` is accessed before `b` in
/// the re-traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilitySpec {
    m: usize,
    constraints: BTreeSet<(usize, usize)>,
}

impl FeasibilitySpec {
    pub fn new(m: usize, constraints: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSize(0));
        }
        let constraints: BTreeSet<_> = constraints.into_iter().collect();
        for &(a, b) in &constraints {
            for v in [a, b] {
                if v == 0 || v > m {
                    return Err(Error::OutOfRange { value: v, m });
                }
            }
            if a == b {
                return Err(Error::SelfConstraint(a, b));
            }
        }
        let spec = FeasibilitySpec { m, constraints };
        if !spec.is_acyclic() {
            return Err(Error::CyclicConstraints);
        }
        Ok(spec)
    }

    /// No constraints: every re-traversal is feasible.
    pub fn unconstrained(m: usize) -> Self {
        FeasibilitySpec {
            m,
            constraints: BTreeSet::new(),
        }
    }

    /// Parses one `a b` pair per line; `#` starts a comment.
    pub fn parse(m: usize, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
            match parsed.as_deref() {
                Some(&[a, b]) => pairs.push((a, b)),
                _ => {
                    return Err(Error::Parse(format!(
                        "constraints line {}: expected \"a b\", got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        FeasibilitySpec::new(m, pairs)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn constraints(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.constraints.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    fn is_acyclic(&self) -> bool {
        let mut indegree = vec![0usize; self.m + 1];
        let mut next: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(a, b) in &self.constraints {
            indegree[b] += 1;
            next.entry(a).or_default().push(b);
        }
        let mut queue: VecDeque<usize> = (1..=self.m).filter(|&v| indegree[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = queue.pop_front() {
            visited += 1;
            for &w in next.get(&v).into_iter().flatten() {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        visited == self.m
    }
}

/// `Y(τ)`: whether `τ` honours every constraint.
pub fn feasible(tau: &Permutation, spec: &FeasibilitySpec) -> bool {
    if spec.is_empty() {
        return true;
    }
    let pos = tau.inverse();
    spec.constraints().all(|(a, b)| pos.at(a) < pos.at(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelScheme {
    InverseStandard,
    Feasible(FeasibilitySpec),
    HitFeasible { c: usize, feasibility: FeasibilitySpec },
    /// `order` ranks the cache sizes: hits are read at `order(1), order(2), ...`.
    RankedHitFeasible { order: Permutation, feasibility: FeasibilitySpec },
}

impl LabelScheme {
    pub fn feasibility(&self) -> Option<&FeasibilitySpec> {
        match self {
            LabelScheme::InverseStandard => None,
            LabelScheme::Feasible(f)
            | LabelScheme::HitFeasible { feasibility: f, .. }
            | LabelScheme::RankedHitFeasible { feasibility: f, .. } => Some(f),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LabelScheme::InverseStandard => "std",
            LabelScheme::Feasible(_) => "feasible",
            LabelScheme::HitFeasible { .. } => "hit",
            LabelScheme::RankedHitFeasible { .. } => "ranked",
        }
    }

    /// Checks the scheme's parameters against `S_m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        if let Some(f) = self.feasibility() {
            if f.m() != m {
                return Err(Error::Scheme(format!(
                    "constraints are over {} elements, permutations over {m}",
                    f.m()
                )));
            }
        }
        match self {
            LabelScheme::HitFeasible { c, .. } if *c == 0 || *c > m => {
                Err(Error::CacheSize { c: *c, m })
            }
            LabelScheme::RankedHitFeasible { order, .. } if order.m() != m => {
                Err(Error::Scheme(format!(
                    "rank order has {} entries, expected {m}",
                    order.m()
                )))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeLabel {
    Std(Transposition),
    Feas {
        feasible: bool,
        swap: Transposition,
    },
    HitFeas {
        feasible: bool,
        hits: usize,
        swap: Transposition,
    },
    Ranked {
        feasible: bool,
        ranked_hits: Vec<usize>,
        /// Tiebreak only; not part of the label value.
        swap: Transposition,
    },
}

impl EdgeLabel {
    fn kind(&self) -> &'static str {
        match self {
            EdgeLabel::Std(_) => "std",
            EdgeLabel::Feas { .. } => "feasible",
            EdgeLabel::HitFeas { .. } => "hit",
            EdgeLabel::Ranked { .. } => "ranked",
        }
    }

    pub fn swap(&self) -> Transposition {
        match self {
            EdgeLabel::Std(swap)
            | EdgeLabel::Feas { swap, .. }
            | EdgeLabel::HitFeas { swap, .. }
            | EdgeLabel::Ranked { swap, .. } => *swap,
        }
    }

    /// `Y(dst)`; always true for the standard label.
    pub fn is_feasible(&self) -> bool {
        match self {
            EdgeLabel::Std(_) => true,
            EdgeLabel::Feas { feasible, .. }
            | EdgeLabel::HitFeas { feasible, .. }
            | EdgeLabel::Ranked { feasible, .. } => *feasible,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Std(t) => write!(f, "{t}"),
            EdgeLabel::Feas { feasible, swap } => write!(f, "({}, {swap})", u8::from(*feasible)),
            EdgeLabel::HitFeas {
                feasible,
                hits,
                swap,
            } => write!(f, "({}, {hits}, {swap})", u8::from(*feasible)),
            EdgeLabel::Ranked {
                feasible,
                ranked_hits,
                ..
            } => write!(f, "({}, ({}))", u8::from(*feasible), ranked_hits.iter().join(",")),
        }
    }
}

pub fn label(scheme: &LabelScheme, edge: &CoveringEdge) -> Result<EdgeLabel> {
    let m = edge.dst.m();
    scheme.validate(m)?;
    let swap = edge.swap;
    let y = || scheme.feasibility().is_none_or(|f| feasible(&edge.dst, f));
    Ok(match scheme {
        LabelScheme::InverseStandard => EdgeLabel::Std(swap),
        LabelScheme::Feasible(_) => EdgeLabel::Feas { feasible: y(), swap },
        LabelScheme::HitFeasible { c, .. } => EdgeLabel::HitFeas {
            feasible: y(),
            hits: hit_vector(&TraceSpec::new(edge.dst.clone())).at(*c),
            swap,
        },
        LabelScheme::RankedHitFeasible { order, .. } => {
            let h = hit_vector(&TraceSpec::new(edge.dst.clone()));
            EdgeLabel::Ranked {
                feasible: y(),
                ranked_hits: order.image().iter().map(|&c| h.at(c)).collect(),
                swap,
            }
        }
    })
}

fn kind_mismatch(x: &EdgeLabel, y: &EdgeLabel) -> Error {
    Error::Scheme(format!("cannot compare {} label with {} label", x.kind(), y.kind()))
}

/// Orders label values as defined by their scheme, without any tiebreak.
pub fn compare_value(x: &EdgeLabel, y: &EdgeLabel) -> Result<Ordering> {
    use EdgeLabel::*;
    Ok(match (x, y) {
        (Std(s), Std(t)) => s.cmp(t),
        (Feas { feasible: f1, swap: s1 }, Feas { feasible: f2, swap: s2 }) => {
            f1.cmp(f2).then(s1.cmp(s2))
        }
        (
            HitFeas { feasible: f1, hits: h1, swap: s1 },
            HitFeas { feasible: f2, hits: h2, swap: s2 },
        ) => f1.cmp(f2).then(h1.cmp(h2)).then(s1.cmp(s2)),
        (
            Ranked { feasible: f1, ranked_hits: r1, .. },
            Ranked { feasible: f2, ranked_hits: r2, .. },
        ) => f1.cmp(f2).then_with(|| r1.cmp(r2)),
        _ => return Err(kind_mismatch(x, y)),
    })
}

/// The total order used to pick a successor: [`compare_value`], with ranked
/// ties broken by the swap.
pub fn compare(x: &EdgeLabel, y: &EdgeLabel) -> Result<Ordering> {
    let ord = compare_value(x, y)?;
    Ok(match (x, y) {
        (EdgeLabel::Ranked { swap: s1, .. }, EdgeLabel::Ranked { swap: s2, .. }) => {
            ord.then(s1.cmp(s2))
        }
        _ => ord,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<W> {
    pub holds: bool,
    pub witnesses: Vec<W>,
}

impl<W> Report<W> {
    fn from_witnesses(witnesses: Vec<W>) -> Self {
        Report {
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Two distinct successors of `source` carrying equal label values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodWitness {
    pub source: Permutation,
    pub first: Permutation,
    pub second: Permutation,
    pub label: EdgeLabel,
}

/// An interval `[bottom, top]` violating the EL conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElWitness {
    pub bottom: Permutation,
    pub top: Permutation,
    pub chains: usize,
    /// Chains whose labels are weakly increasing.
    pub increasing: usize,
    /// Whether some increasing chain is strictly smaller than every other
    /// chain in dictionary order.
    pub increasing_is_minimal: bool,
}

/// Scans every node's out-edges for repeated label values.
pub fn check_good(scheme: &LabelScheme, m: usize, mode: CoverMode) -> Result<Report<GoodWitness>> {
    if m > GOOD_CHECK_CAP {
        return Err(Error::CapExceeded {
            m,
            cap: GOOD_CHECK_CAP,
        });
    }
    scheme.validate(m)?;
    let mut witnesses = Vec::new();
    for sigma in Permutation::all(m)? {
        let edges = successors(&sigma, mode);
        let labels = edges
            .iter()
            .map(|e| label(scheme, e))
            .collect::<Result<Vec<_>>>()?;
        for (i, j) in (0..edges.len()).tuple_combinations() {
            if compare_value(&labels[i], &labels[j])? == Ordering::Equal {
                witnesses.push(GoodWitness {
                    source: sigma.clone(),
                    first: edges[i].dst.clone(),
                    second: edges[j].dst.clone(),
                    label: labels[i].clone(),
                });
            }
        }
    }
    Ok(Report::from_witnesses(witnesses))
}

/// Enumerates the saturated chains of every interval `[x, y]`, `x < y`, and
/// checks that exactly one is weakly increasing and that it is the unique
/// lexicographic minimum.
pub fn check_el(scheme: &LabelScheme, m: usize, mode: CoverMode) -> Result<Report<ElWitness>> {
    if m > EL_CHECK_CAP {
        return Err(Error::CapExceeded {
            m,
            cap: EL_CHECK_CAP,
        });
    }
    scheme.validate(m)?;
    let graph = build_graph(m, mode)?;
    let nodes = graph.nodes();
    let out: Vec<Vec<(usize, EdgeLabel)>> = nodes
        .iter()
        .map(|p| {
            graph
                .out_edges(p)
                .iter()
                .map(|e| Ok((graph.index_of(&e.dst).expect("node"), label(scheme, e)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut witnesses = Vec::new();
    for (x, bottom) in nodes.iter().enumerate() {
        let mut chains: Vec<Vec<Vec<EdgeLabel>>> = vec![Vec::new(); nodes.len()];
        let mut path = Vec::new();
        collect_chains(x, &out, &mut path, &mut chains);
        for (y, found) in chains.iter().enumerate() {
            if y == x || found.is_empty() {
                continue;
            }
            if let Some(w) = judge_interval(found)? {
                let (chains, increasing, increasing_is_minimal) = w;
                witnesses.push(ElWitness {
                    bottom: bottom.clone(),
                    top: nodes[y].clone(),
                    chains,
                    increasing,
                    increasing_is_minimal,
                });
            }
        }
    }
    Ok(Report::from_witnesses(witnesses))
}

fn collect_chains(
    at: usize,
    out: &[Vec<(usize, EdgeLabel)>],
    path: &mut Vec<EdgeLabel>,
    chains: &mut [Vec<Vec<EdgeLabel>>],
) {
    if !path.is_empty() {
        chains[at].push(path.clone());
    }
    for (next, l) in &out[at] {
        path.push(l.clone());
        collect_chains(*next, out, path, chains);
        path.pop();
    }
}

fn lex_cmp(a: &[EdgeLabel], b: &[EdgeLabel]) -> Result<Ordering> {
    for (x, y) in a.iter().zip(b) {
        let o = compare_value(x, y)?;
        if o != Ordering::Equal {
            return Ok(o);
        }
    }
    Ok(a.len().cmp(&b.len()))
}

/// `None` when the interval satisfies both conditions, otherwise
/// `(chains, increasing, increasing_is_minimal)`.
fn judge_interval(chains: &[Vec<EdgeLabel>]) -> Result<Option<(usize, usize, bool)>> {
    let mut increasing = Vec::new();
    for (k, c) in chains.iter().enumerate() {
        let mut weakly_up = true;
        for w in c.windows(2) {
            if compare_value(&w[0], &w[1])? == Ordering::Greater {
                weakly_up = false;
                break;
            }
        }
        if weakly_up {
            increasing.push(k);
        }
    }
    let mut increasing_is_minimal = false;
    for &k in &increasing {
        let mut strictly_least = true;
        for (j, other) in chains.iter().enumerate() {
            if j != k && lex_cmp(&chains[k], other)? != Ordering::Less {
                strictly_least = false;
                break;
            }
        }
        if strictly_least {
            increasing_is_minimal = true;
            break;
        }
    }
    Ok(if increasing.len() == 1 && increasing_is_minimal {
        None
    } else {
        Some((chains.len(), increasing.len(), increasing_is_minimal))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::covers;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    fn edge(src: &[usize], dst: &[usize]) -> CoveringEdge {
        let src = p(src);
        let dst = p(dst);
        assert!(covers(&src, &dst, CoverMode::Bruhat).unwrap());
        successors(&src, CoverMode::Bruhat)
            .into_iter()
            .find(|e| e.dst == dst)
            .unwrap()
    }

    #[test]
    fn feasibility_examples() {
        let none = FeasibilitySpec::unconstrained(3);
        for s in Permutation::all(3).unwrap() {
            assert!(feasible(&s, &none));
        }
        let one_two = FeasibilitySpec::new(3, [(1, 2)]).unwrap();
        assert!(!feasible(&Permutation::reverse(3).unwrap(), &one_two));
        assert!(feasible(&p(&[3, 1, 2]), &one_two));
    }

    #[test]
    fn feasibility_spec_validation() {
        assert_eq!(FeasibilitySpec::new(3, [(1, 1)]), Err(Error::SelfConstraint(1, 1)));
        assert!(matches!(FeasibilitySpec::new(3, [(1, 4)]), Err(Error::OutOfRange { .. })));
        assert_eq!(
            FeasibilitySpec::new(3, [(1, 2), (2, 3), (3, 1)]),
            Err(Error::CyclicConstraints)
        );
        assert_eq!(FeasibilitySpec::new(2, [(1, 2), (2, 1)]), Err(Error::CyclicConstraints));
        assert!(FeasibilitySpec::new(4, [(1, 2), (1, 3), (2, 4), (3, 4)]).is_ok());
    }

    #[test]
    fn feasibility_agrees_with_brute_force() {
        let spec = FeasibilitySpec::new(4, [(1, 3), (4, 2)]).unwrap();
        for s in Permutation::all(4).unwrap() {
            let order = s.image();
            let before = |a: usize, b: usize| {
                order.iter().position(|&x| x == a) < order.iter().position(|&x| x == b)
            };
            assert_eq!(feasible(&s, &spec), before(1, 3) && before(4, 2));
        }
    }

    #[test]
    fn constraints_file() {
        let text = "# a before b\n1 3\n\n  2 4  # trailing\n";
        let spec = FeasibilitySpec::parse(4, text).unwrap();
        assert_eq!(spec.constraints().collect::<Vec<_>>(), vec![(1, 3), (2, 4)]);
        assert!(FeasibilitySpec::parse(4, "1 2 3\n").is_err());
        assert!(FeasibilitySpec::parse(4, "1 x\n").is_err());
        assert!(FeasibilitySpec::parse(4, "").unwrap().is_empty());
    }

    #[test]
    fn label_examples() {
        let e = edge(&[1, 2, 3, 4], &[2, 1, 3, 4]);
        assert_eq!(label(&LabelScheme::InverseStandard, &e).unwrap(), EdgeLabel::Std(t(1, 2)));

        let hit = LabelScheme::HitFeasible {
            c: 1,
            feasibility: FeasibilitySpec::unconstrained(3),
        };
        let e = edge(&[1, 2, 3], &[1, 3, 2]);
        assert_eq!(
            label(&hit, &e).unwrap(),
            EdgeLabel::HitFeas { feasible: true, hits: 0, swap: t(2, 3) }
        );

        let ranked = LabelScheme::RankedHitFeasible {
            order: Permutation::identity(3).unwrap(),
            feasibility: FeasibilitySpec::unconstrained(3),
        };
        let e = edge(&[1, 2, 3], &[2, 1, 3]);
        assert_eq!(
            label(&ranked, &e).unwrap(),
            EdgeLabel::Ranked { feasible: true, ranked_hits: vec![0, 1, 3], swap: t(1, 2) }
        );
        // p reorders the cache sizes
        let reversed = LabelScheme::RankedHitFeasible {
            order: Permutation::reverse(3).unwrap(),
            feasibility: FeasibilitySpec::unconstrained(3),
        };
        match label(&reversed, &e).unwrap() {
            EdgeLabel::Ranked { ranked_hits, .. } => assert_eq!(ranked_hits, vec![3, 1, 0]),
            other => panic!("{other:?}"),
        }

        let feas = LabelScheme::Feasible(FeasibilitySpec::new(3, [(1, 2)]).unwrap());
        assert_eq!(
            label(&feas, &e).unwrap(),
            EdgeLabel::Feas { feasible: false, swap: t(1, 2) }
        );
    }

    #[test]
    fn label_parameter_errors() {
        let e = edge(&[1, 2, 3], &[2, 1, 3]);
        let bad_c = LabelScheme::HitFeasible { c: 4, feasibility: FeasibilitySpec::unconstrained(3) };
        assert!(label(&bad_c, &e).is_err());
        let bad_order = LabelScheme::RankedHitFeasible {
            order: Permutation::identity(4).unwrap(),
            feasibility: FeasibilitySpec::unconstrained(3),
        };
        assert!(label(&bad_order, &e).is_err());
        let bad_m = LabelScheme::Feasible(FeasibilitySpec::unconstrained(4));
        assert!(label(&bad_m, &e).is_err());
    }

    #[test]
    fn compare_examples() {
        let std = |a, b| EdgeLabel::Std(t(a, b));
        assert_eq!(compare(&std(2, 3), &std(1, 4)).unwrap(), Ordering::Greater);
        assert_eq!(compare(&std(1, 4), &std(1, 2)).unwrap(), Ordering::Greater);
        assert_eq!(
            compare(
                &EdgeLabel::Feas { feasible: true, swap: t(1, 2) },
                &EdgeLabel::Feas { feasible: false, swap: t(3, 4) }
            )
            .unwrap(),
            Ordering::Greater
        );
        let r = |h: Vec<usize>, s| EdgeLabel::Ranked { feasible: true, ranked_hits: h, swap: s };
        assert_eq!(
            compare(&r(vec![1, 1, 3], t(1, 2)), &r(vec![0, 2, 3], t(2, 3))).unwrap(),
            Ordering::Greater
        );
        // ranked ties: value equal, tiebreak decides
        let (x, y) = (r(vec![0, 1, 3], t(1, 2)), r(vec![0, 1, 3], t(2, 3)));
        assert_eq!(compare_value(&x, &y).unwrap(), Ordering::Equal);
        assert_eq!(compare(&x, &y).unwrap(), Ordering::Less);
        assert!(compare(&std(1, 2), &x).is_err());
    }

    fn all_schemes(m: usize) -> Vec<LabelScheme> {
        let f = FeasibilitySpec::new(m, [(1, 2)]).unwrap();
        let mut out = vec![LabelScheme::InverseStandard, LabelScheme::Feasible(f.clone())];
        for c in 1..=m {
            out.push(LabelScheme::HitFeasible { c, feasibility: f.clone() });
        }
        out.push(LabelScheme::RankedHitFeasible {
            order: Permutation::identity(m).unwrap(),
            feasibility: f.clone(),
        });
        out.push(LabelScheme::RankedHitFeasible {
            order: "2,4,1,3".parse().unwrap(),
            feasibility: f,
        });
        out
    }

    #[test]
    fn compare_is_total_order_on_s4_labels() {
        for scheme in all_schemes(4) {
            let mut labels = Vec::new();
            for s in Permutation::all(4).unwrap() {
                for e in successors(&s, CoverMode::Bruhat) {
                    labels.push(label(&scheme, &e).unwrap());
                }
            }
            labels.sort_by(|a, b| compare(a, b).unwrap());
            labels.dedup();
            for a in &labels {
                assert_eq!(compare(a, a).unwrap(), Ordering::Equal);
                for b in &labels {
                    let ab = compare(a, b).unwrap();
                    assert_eq!(ab.reverse(), compare(b, a).unwrap());
                    if a != b {
                        assert_ne!(ab, Ordering::Equal, "{a:?} vs {b:?}");
                    }
                }
            }
            // sorted order is consistent, which with antisymmetry gives transitivity
            for w in labels.windows(3) {
                assert_eq!(compare(&w[0], &w[2]).unwrap(), Ordering::Less);
            }
        }
    }

    #[test]
    fn good_inverse_standard() {
        for m in 1..=5 {
            for mode in [CoverMode::Weak, CoverMode::Bruhat] {
                let r = check_good(&LabelScheme::InverseStandard, m, mode).unwrap();
                assert!(r.holds, "m={m} {mode:?}");
            }
        }
        assert!(check_good(&LabelScheme::InverseStandard, 6, CoverMode::Weak).is_err());
    }

    #[test]
    fn good_ranked_counterexample() {
        let ranked = LabelScheme::RankedHitFeasible {
            order: Permutation::identity(3).unwrap(),
            feasibility: FeasibilitySpec::unconstrained(3),
        };
        let r = check_good(&ranked, 3, CoverMode::Weak).unwrap();
        assert!(!r.holds);
        let w = &r.witnesses[0];
        assert_eq!(w.source, Permutation::identity(3).unwrap());
        assert_eq!(w.first, p(&[2, 1, 3]));
        assert_eq!(w.second, p(&[1, 3, 2]));
        assert_eq!(
            w.label,
            EdgeLabel::Ranked { feasible: true, ranked_hits: vec![0, 1, 3], swap: t(1, 2) }
        );
    }

    #[test]
    fn trivial_sizes() {
        for scheme in [
            LabelScheme::InverseStandard,
            LabelScheme::HitFeasible { c: 1, feasibility: FeasibilitySpec::unconstrained(1) },
        ] {
            assert!(check_good(&scheme, 1, CoverMode::Weak).unwrap().holds);
            assert!(check_el(&scheme, 1, CoverMode::Bruhat).unwrap().holds);
        }
        // a single cover is always a lone increasing chain
        assert!(check_el(&LabelScheme::InverseStandard, 2, CoverMode::Weak).unwrap().holds);
    }

    #[test]
    fn el_inverse_standard_bruhat() {
        for m in 1..=4 {
            let r = check_el(&LabelScheme::InverseStandard, m, CoverMode::Bruhat).unwrap();
            assert!(r.holds, "m={m}: {:?}", r.witnesses.first());
        }
        assert!(check_el(&LabelScheme::InverseStandard, 5, CoverMode::Bruhat).is_err());
    }

    #[test]
    fn judge_interval_cases() {
        let s = |a, b| EdgeLabel::Std(t(a, b));
        // one increasing chain that is also the smallest
        assert_eq!(judge_interval(&[vec![s(1, 2), s(2, 3)], vec![s(2, 3), s(1, 2)]]).unwrap(), None);
        // two increasing chains
        assert_eq!(
            judge_interval(&[vec![s(1, 2), s(2, 3)], vec![s(1, 3), s(2, 3)]]).unwrap(),
            Some((2, 2, true))
        );
        // no increasing chain
        assert_eq!(
            judge_interval(&[vec![s(2, 3), s(1, 2)], vec![s(3, 4), s(1, 4)]]).unwrap(),
            Some((2, 0, false))
        );
    }
}
