//! Literal checking of the circuit axioms (C0)-(C3).

use crate::signed_set::SignedSet;

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Per-axiom validation results. The input is taken as a set of
/// representatives and closed under negation, so (C1) holds by
/// construction and is reported as such.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> String {
        self.checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
            .unwrap_or_else(|| "no failure".to_string())
    }
}

/// Validates (C0) no empty circuit, (C2) incomparable supports, and (C3)
/// weak elimination, on the negation closure of `reps`. For a (C3)
/// failure the witnessing `X`, `Y`, `e` are reported.
pub fn validate_axioms(reps: &[SignedSet]) -> ValidationReport {
    let mut checks = Vec::new();

    let c0 = reps.iter().find(|c| c.is_empty());
    checks.push(AxiomCheck {
        name: "C0",
        passed: c0.is_none(),
        witness: c0.map(|_| "empty circuit".to_string()),
    });

    checks.push(AxiomCheck {
        name: "C1",
        passed: true,
        witness: None,
    });

    let mut c2_witness = None;
    'outer: for (i, x) in reps.iter().enumerate() {
        for y in reps.iter().skip(i + 1) {
            let (sx, sy) = (x.support(), y.support());
            if sx & !sy == 0 || sy & !sx == 0 {
                // Comparable supports with distinct (canonical) circuits.
                c2_witness = Some(format!("{:?} vs {:?}", x, y));
                break 'outer;
            }
        }
    }
    checks.push(AxiomCheck {
        name: "C2",
        passed: c2_witness.is_none(),
        witness: c2_witness,
    });

    let all: Vec<SignedSet> = reps.iter().flat_map(|c| [*c, c.neg()]).collect();
    let mut c3_witness = None;
    'search: for x in &all {
        for y in &all {
            if *x == y.neg() {
                continue;
            }
            let elim = x.plus & y.minus;
            if elim == 0 {
                continue;
            }
            for e in crate::signed_set::bits(elim) {
                let pbound = (x.plus | y.plus) & !(1u64 << e);
                let mbound = (x.minus | y.minus) & !(1u64 << e);
                let found = all
                    .iter()
                    .any(|z| z.plus & !pbound == 0 && z.minus & !mbound == 0);
                if !found {
                    c3_witness = Some(format!("X={:?} Y={:?} e={}", x, y, e));
                    break 'search;
                }
            }
        }
    }
    checks.push(AxiomCheck {
        name: "C3",
        passed: c3_witness.is_none(),
        witness: c3_witness,
    });

    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_set::mask;

    #[test]
    fn empty_list_passes() {
        assert!(validate_axioms(&[]).passed());
    }

    #[test]
    fn same_support_violates_c2() {
        let reps = vec![
            SignedSet::new(mask(&[0]), mask(&[1])),
            SignedSet::new(mask(&[0, 1]), 0),
        ];
        let report = validate_axioms(&reps);
        assert!(!report.passed());
        let c2 = report.checks.iter().find(|c| c.name == "C2").unwrap();
        assert!(!c2.passed);
    }

    #[test]
    fn missing_elimination_violates_c3() {
        // Two crossing circuits on {0,1,2} with no eliminating third.
        let reps = vec![
            SignedSet::new(mask(&[0, 1]), mask(&[2])),
            SignedSet::new(mask(&[0, 2]), mask(&[1])),
        ];
        let report = validate_axioms(&reps);
        let c3 = report.checks.iter().find(|c| c.name == "C3").unwrap();
        assert!(!c3.passed);
        assert!(c3.witness.is_some());
    }
}
