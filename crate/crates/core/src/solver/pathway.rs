//! The stepwise unlinking pathway `T(2,2k) -> T(2,2k-1) -> ... -> trefoil
//! -> Hopf link -> unknot -> unlink`, annotated with what is known about
//! each band surgery.

use serde::Serialize;

use super::solve_trefoil_hopf;
use crate::fraction::TangleFraction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum StepStatus {
    /// Characterized here: `U` solves `N(U + 0) = from`, `N(U + 1/w) = to`.
    Solved {
        u: TangleFraction,
        w: i64,
        closed_form: String,
    },
    /// Characterized in the cited work.
    External {
        citation: String,
    },
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathwayStep {
    pub from: String,
    pub to: String,
    #[serde(flatten)]
    pub status: StepStatus,
}

fn stage(c: i64) -> String {
    match c {
        3 => "trefoil".into(),
        2 => "Hopf".into(),
        1 => "unknot".into(),
        0 => "unlink".into(),
        _ => format!("T(2,{c})"),
    }
}

/// One step per crossing removed, `2k` steps in all.
pub fn pathway_check(k: i64) -> Vec<PathwayStep> {
    assert!(k >= 1, "k must be positive");
    (1..=2 * k)
        .rev()
        .map(|c| {
            let status = match c {
                3 => StepStatus::Solved {
                    u: solve_trefoil_hopf(-1),
                    w: -1,
                    closed_form: "U = 3/(-3w-2)".into(),
                },
                2 => StepStatus::External {
                    citation: "Thompson/HS".into(),
                },
                1 => StepStatus::External {
                    citation: "Sc".into(),
                },
                4 => StepStatus::External {
                    citation: "HS".into(),
                },
                _ => StepStatus::Open,
            };
            PathwayStep {
                from: stage(c),
                to: stage(c - 1),
                status,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solved(steps: &[PathwayStep]) -> usize {
        steps
            .iter()
            .filter(|s| matches!(s.status, StepStatus::Solved { .. }))
            .count()
    }

    #[test]
    fn step_counts() {
        let one = pathway_check(1);
        assert_eq!(one.len(), 2);
        assert_eq!(
            (one[0].from.as_str(), one[1].to.as_str()),
            ("Hopf", "unlink")
        );
        assert_eq!(solved(&one), 0);
        let two = pathway_check(2);
        assert_eq!(two.len(), 4);
        assert_eq!(two[0].from, "T(2,4)");
        assert!(matches!(two[0].status, StepStatus::External { .. }));
        let three = pathway_check(3);
        assert_eq!(three.len(), 6);
        assert_eq!(solved(&three), 1);
        assert_eq!(three[1].to, "T(2,4)");
        assert_eq!(three[0].status, StepStatus::Open);
    }

    #[test]
    fn solved_step_is_u_three() {
        let s = &pathway_check(2)[1];
        assert_eq!((s.from.as_str(), s.to.as_str()), ("trefoil", "Hopf"));
        let StepStatus::Solved { u, .. } = &s.status else {
            panic!()
        };
        assert_eq!(*u, TangleFraction::integer(3));
    }
}
