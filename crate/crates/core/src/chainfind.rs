//! Greedy construction of saturated chains toward the sawtooth order.

use std::fmt;

use crate::bruhat::{covers, successors, CoverMode};
use crate::error::{Error, Result};
use crate::labeling::{compare, feasible, label, EdgeLabel, FeasibilitySpec, LabelScheme};
use crate::perm::Permutation;
use crate::trace_cache::{hit_vector, HitVector, TraceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// The head is the reverse permutation.
    ReachedMaximum,
    /// No (feasible) successor remains.
    Stuck,
    /// Stopped by the caller's step budget.
    StepLimit,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::ReachedMaximum => "reached-maximum",
            Termination::Stuck => "stuck",
            Termination::StepLimit => "step-limit",
        }
    }
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub steps: Vec<Permutation>,
    /// `labels[k]` labels the edge `steps[k] -> steps[k + 1]`.
    pub labels: Vec<EdgeLabel>,
    pub terminated: Termination,
    pub mode: CoverMode,
    /// Number of edge labels computed while searching.
    pub label_evaluations: usize,
}

impl Chain {
    pub fn start(&self) -> &Permutation {
        &self.steps[0]
    }

    pub fn head(&self) -> &Permutation {
        self.steps.last().expect("chain is never empty")
    }

    /// Number of covering edges walked.
    pub fn transitions(&self) -> usize {
        self.steps.len() - 1
    }
}

/// Walks up from `start`, at each node taking the successor edge with the
/// largest label under [`compare`].
///
/// When the scheme carries constraints, edges into infeasible permutations
/// are discarded before comparing.
pub fn chain_find(
    start: &Permutation,
    scheme: &LabelScheme,
    mode: CoverMode,
    max_steps: Option<usize>,
) -> Result<Chain> {
    let m = start.m();
    scheme.validate(m)?;
    let constraints = scheme.feasibility();
    if let Some(f) = constraints {
        if !feasible(start, f) {
            return Err(Error::InfeasibleStart(start.to_string()));
        }
    }

    let top_rank = m * (m - 1) / 2;
    let mut rank = start.length();
    let mut steps = vec![start.clone()];
    let mut labels = Vec::new();
    let mut label_evaluations = 0;

    let terminated = loop {
        if rank == top_rank {
            break Termination::ReachedMaximum;
        }
        if max_steps.is_some_and(|limit| labels.len() >= limit) {
            break Termination::StepLimit;
        }
        let head = steps.last().expect("non-empty");
        let mut best: Option<(EdgeLabel, Permutation)> = None;
        for edge in successors(head, mode) {
            if constraints.is_some_and(|f| !feasible(&edge.dst, f)) {
                continue;
            }
            let l = label(scheme, &edge)?;
            label_evaluations += 1;
            let better = match &best {
                None => true,
                Some((b, _)) => compare(&l, b)?.is_gt(),
            };
            if better {
                best = Some((l, edge.dst));
            }
        }
        match best {
            Some((l, next)) => {
                labels.push(l);
                steps.push(next);
                rank += 1;
            }
            None => break Termination::Stuck,
        }
    };

    Ok(Chain {
        steps,
        labels,
        terminated,
        mode,
        label_evaluations,
    })
}

/// Greedy recommendation for a constrained re-traversal: the head of the
/// chain grown from the identity, with its hit vector.
///
/// The result is the greedy chain's end point. It is not certified optimal.
pub fn best_feasible(
    spec: &FeasibilitySpec,
    scheme: &LabelScheme,
    mode: CoverMode,
) -> Result<(Permutation, HitVector)> {
    let scheme = with_feasibility(scheme, spec)?;
    let chain = chain_find(&Permutation::identity(spec.m())?, &scheme, mode, None)?;
    let head = chain.head().clone();
    let hits = hit_vector(&TraceSpec::new(head.clone()));
    Ok((head, hits))
}

fn with_feasibility(scheme: &LabelScheme, spec: &FeasibilitySpec) -> Result<LabelScheme> {
    Ok(match scheme {
        LabelScheme::InverseStandard => {
            return Err(Error::Scheme(
                "the inverse standard labeling carries no feasibility".into(),
            ))
        }
        LabelScheme::Feasible(_) => LabelScheme::Feasible(spec.clone()),
        LabelScheme::HitFeasible { c, .. } => LabelScheme::HitFeasible {
            c: *c,
            feasibility: spec.clone(),
        },
        LabelScheme::RankedHitFeasible { order, .. } => LabelScheme::RankedHitFeasible {
            order: order.clone(),
            feasibility: spec.clone(),
        },
    })
}

/// Recomputes the label of every edge of `chain`.
pub fn replay_labels(chain: &Chain, scheme: &LabelScheme) -> Result<Vec<EdgeLabel>> {
    chain
        .steps
        .windows(2)
        .map(|w| {
            if !covers(&w[0], &w[1], chain.mode)? {
                return Err(Error::NotCover {
                    src: w[0].to_string(),
                    dst: w[1].to_string(),
                });
            }
            let edge = successors(&w[0], chain.mode)
                .into_iter()
                .find(|e| e.dst == w[1])
                .expect("cover is a successor");
            label(scheme, &edge)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Transposition;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn standard_chain_from_identity_s4() {
        let c = chain_find(
            &Permutation::identity(4).unwrap(),
            &LabelScheme::InverseStandard,
            CoverMode::Weak,
            None,
        )
        .unwrap();
        let want = [
            p(&[1, 2, 3, 4]),
            p(&[1, 2, 4, 3]),
            p(&[1, 4, 2, 3]),
            p(&[1, 4, 3, 2]),
            p(&[4, 1, 3, 2]),
            p(&[4, 3, 1, 2]),
            p(&[4, 3, 2, 1]),
        ];
        assert_eq!(c.steps, want);
        assert_eq!(c.terminated, Termination::ReachedMaximum);
        assert_eq!(c.labels.len(), 6);
        assert_eq!(c.labels[0], EdgeLabel::Std(Transposition::new(3, 4).unwrap()));
    }

    #[test]
    fn reverse_start_is_maximal() {
        for scheme in [
            LabelScheme::InverseStandard,
            LabelScheme::HitFeasible { c: 2, feasibility: FeasibilitySpec::unconstrained(3) },
        ] {
            let c = chain_find(&Permutation::reverse(3).unwrap(), &scheme, CoverMode::Bruhat, None)
                .unwrap();
            assert_eq!(c.steps.len(), 1);
            assert_eq!(c.terminated, Termination::ReachedMaximum);
            assert!(replay_labels(&c, &scheme).unwrap().is_empty());
        }
    }

    #[test]
    fn constrained_chain_respects_constraint() {
        let spec = FeasibilitySpec::new(3, [(1, 3)]).unwrap();
        for mode in [CoverMode::Weak, CoverMode::Bruhat] {
            let c = chain_find(
                &Permutation::identity(3).unwrap(),
                &LabelScheme::Feasible(spec.clone()),
                mode,
                None,
            )
            .unwrap();
            assert!(c.steps.iter().all(|s| feasible(s, &spec)));
            assert_eq!(c.terminated, Termination::Stuck);
            assert!(c.labels.iter().all(EdgeLabel::is_feasible));
        }
    }

    #[test]
    fn infeasible_start_rejected() {
        let spec = FeasibilitySpec::new(3, [(1, 3)]).unwrap();
        let err = chain_find(
            &Permutation::reverse(3).unwrap(),
            &LabelScheme::Feasible(spec),
            CoverMode::Weak,
            None,
        );
        assert!(matches!(err, Err(Error::InfeasibleStart(_))));
    }

    #[test]
    fn step_limit() {
        let c = chain_find(
            &Permutation::identity(5).unwrap(),
            &LabelScheme::InverseStandard,
            CoverMode::Weak,
            Some(3),
        )
        .unwrap();
        assert_eq!(c.transitions(), 3);
        assert_eq!(c.terminated, Termination::StepLimit);
        let zero = chain_find(
            &Permutation::identity(5).unwrap(),
            &LabelScheme::InverseStandard,
            CoverMode::Weak,
            Some(0),
        )
        .unwrap();
        assert_eq!(zero.steps.len(), 1);
    }

    #[test]
    fn bad_scheme_parameters() {
        let scheme = LabelScheme::HitFeasible { c: 0, feasibility: FeasibilitySpec::unconstrained(3) };
        assert!(chain_find(&Permutation::identity(3).unwrap(), &scheme, CoverMode::Weak, None).is_err());
    }

    #[test]
    fn best_feasible_extremes() {
        for m in 1..=6 {
            let hit = LabelScheme::HitFeasible { c: 1, feasibility: FeasibilitySpec::unconstrained(m) };
            let (head, hits) = best_feasible(&FeasibilitySpec::unconstrained(m), &hit, CoverMode::Weak).unwrap();
            assert!(head.is_reverse());
            assert_eq!(hits.0, (1..=m).collect::<Vec<_>>());

            let line = FeasibilitySpec::new(m, (1..m).map(|i| (i, i + 1))).unwrap();
            let (head, hits) = best_feasible(&line, &LabelScheme::Feasible(line.clone()), CoverMode::Weak).unwrap();
            assert!(head.is_identity());
            let mut want = vec![0; m];
            want[m - 1] = m;
            assert_eq!(hits.0, want);
        }
        assert!(best_feasible(
            &FeasibilitySpec::unconstrained(3),
            &LabelScheme::InverseStandard,
            CoverMode::Weak
        )
        .is_err());
    }

    #[test]
    fn best_feasible_one_before_two() {
        let spec = FeasibilitySpec::new(3, [(1, 2)]).unwrap();
        let (head, hits) = best_feasible(&spec, &LabelScheme::Feasible(spec.clone()), CoverMode::Weak).unwrap();
        assert_eq!(head, p(&[3, 1, 2]));
        assert_eq!(hits.0, vec![1, 1, 3]);
        // every feasible σ ∈ S_3 is dominated
        for s in Permutation::all(3).unwrap().into_iter().filter(|s| feasible(s, &spec)) {
            assert!(hits.dominates(&hit_vector(&TraceSpec::new(s))));
        }
    }

    #[test]
    fn replay_hand_built_chain() {
        let scheme = LabelScheme::HitFeasible { c: 1, feasibility: FeasibilitySpec::unconstrained(3) };
        let chain = Chain {
            steps: vec![p(&[1, 2, 3]), p(&[1, 3, 2]), p(&[3, 1, 2])],
            labels: vec![],
            terminated: Termination::StepLimit,
            mode: CoverMode::Weak,
            label_evaluations: 0,
        };
        let t = |a, b| Transposition::new(a, b).unwrap();
        assert_eq!(
            replay_labels(&chain, &scheme).unwrap(),
            vec![
                EdgeLabel::HitFeas { feasible: true, hits: 0, swap: t(2, 3) },
                EdgeLabel::HitFeas { feasible: true, hits: 1, swap: t(1, 3) },
            ]
        );
        let broken = Chain {
            steps: vec![p(&[1, 2, 3]), p(&[3, 2, 1])],
            ..chain
        };
        assert!(matches!(replay_labels(&broken, &scheme), Err(Error::NotCover { .. })));
    }

    #[test]
    fn replay_matches_search() {
        let scheme = LabelScheme::RankedHitFeasible {
            order: "2,1,3,4".parse().unwrap(),
            feasibility: FeasibilitySpec::unconstrained(4),
        };
        for mode in [CoverMode::Weak, CoverMode::Bruhat] {
            let c = chain_find(&Permutation::identity(4).unwrap(), &scheme, mode, None).unwrap();
            assert_eq!(replay_labels(&c, &scheme).unwrap(), c.labels);
        }
    }
}
