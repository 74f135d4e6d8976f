//! Cross-verification suites: every construction in the library checked
//! against an independent route, at configurable exhaustive depth.
//!
//! Random samples use a fixed seed so output is deterministic for fixed
//! inputs and flags.

use num::{BigInt, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bijection::{
    enumerate_cycle_trees, is_valid_cycle_tree, perm_to_tree, tree_to_perm,
};
use crate::coeff::{coeff_int, Coeff};
use crate::error::{Error, Result};
use crate::lagrange::{fixed_point_sequence, lagrange_revert_reciprocal, CountSequence};
use crate::partitions::{factorial, partitions_freq};
use crate::perm::{
    avoids_barred_direct, avoids_barred_recursive, condition_i_permutations,
    count_avoiders, for_each_standard_permutation, lrmax_decompose, CheckMethod, Permutation,
};
use crate::report::VerificationReport;
use crate::series::{
    agreement_unique_solution, eigensequence, functional_sqrt, left_shift, revert_reciprocal,
    revert_reciprocal_modified, self_composition, series_compose, series_revert, TruncatedSeries,
};
use crate::tree::{
    enumerate_trees, tree_count_by_outdegree, weighted_tree_count, OutdegreeSequence,
    WeightedMode,
};

/// Which suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Series,
    Counts,
    Bijection,
    Trees,
    Agreement,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Series => "series",
            Suite::Counts => "counts",
            Suite::Bijection => "bijection",
            Suite::Trees => "trees",
            Suite::Agreement => "agreement",
        }
    }

    /// Depth used when no --max-n is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::All => 0, // sub-suites use their own defaults
            Suite::Series => 15,
            Suite::Counts => 8,
            Suite::Bijection => 6,
            Suite::Trees => 8,
            Suite::Agreement => 15,
        }
    }

    /// Largest accepted --max-n; beyond this the request is rejected.
    pub fn max_bound(self) -> usize {
        match self {
            Suite::All => 20,
            Suite::Series => 25,
            Suite::Counts => 10,
            Suite::Bijection => 8,
            Suite::Trees => 10,
            Suite::Agreement => 20,
        }
    }
}

/// Run a suite (or all of them). For `All`, an explicit max_n is clamped
/// to each sub-suite's bound; for a single suite it must lie within the
/// bound.
pub fn run(suite: Suite, max_n: Option<usize>) -> Result<Vec<VerificationReport>> {
    match suite {
        Suite::All => {
            let subs = [
                Suite::Series,
                Suite::Counts,
                Suite::Bijection,
                Suite::Trees,
                Suite::Agreement,
            ];
            let mut reports = Vec::new();
            for sub in subs {
                let n = max_n
                    .map(|m| m.min(sub.max_bound()))
                    .unwrap_or_else(|| sub.default_max_n());
                reports.push(run_single(sub, n.max(1)));
            }
            Ok(reports)
        }
        _ => {
            let n = max_n.unwrap_or_else(|| suite.default_max_n());
            if n > suite.max_bound() {
                return Err(Error::LimitExceeded {
                    what: "suite max_n",
                    limit: suite.max_bound(),
                    requested: n,
                });
            }
            Ok(vec![run_single(suite, n.max(1))])
        }
    }
}

fn run_single(suite: Suite, n: usize) -> VerificationReport {
    match suite {
        Suite::Series => series_suite(n),
        Suite::Counts => counts_suite(n),
        Suite::Bijection => bijection_suite(n),
        Suite::Trees => trees_suite(n),
        Suite::Agreement => agreement_suite(n),
        Suite::All => unreachable!("All is expanded in run()"),
    }
}

fn seeded(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xE15E_0000 ^ salt)
}

fn random_int_series<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
    TruncatedSeries::new((0..order).map(|_| coeff_int(rng.gen_range(-9..=9))).collect())
}

fn random_unital_int_series<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![coeff_int(1)];
    coeffs.extend((1..order).map(|_| coeff_int(rng.gen_range(-9..=9))));
    TruncatedSeries::new(coeffs)
}

fn random_invertible_series<R: Rng>(rng: &mut R, order: usize) -> TruncatedSeries {
    let mut coeffs: Vec<Coeff> = (0..order)
        .map(|_| Coeff::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=3))))
        .collect();
    while coeffs[0].is_zero() {
        coeffs[0] = coeff_int(rng.gen_range(1..=9));
    }
    TruncatedSeries::new(coeffs)
}

fn series_suite(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("series");

    report.run_check("revert-compose-round-trip-30-random", || {
        let mut rng = seeded(1);
        let id = TruncatedSeries::identity(n);
        let mut ok = 0;
        for _ in 0..30 {
            let f = random_invertible_series(&mut rng, n);
            let g = series_revert(&f, n).expect("leading term nonzero");
            if series_compose(&f, &g, n).unwrap() == id && series_compose(&g, &f, n).unwrap() == id
            {
                ok += 1;
            }
        }
        ("30 exact identities".into(), format!("{ok} exact identities"))
    });

    report.run_check("revert-reciprocal-unital-30-random", || {
        let mut rng = seeded(2);
        let mut ok = 0;
        for _ in 0..30 {
            let a = random_int_series(&mut rng, n);
            if revert_reciprocal(&a, n).unwrap().is_unital() {
                ok += 1;
            }
        }
        ("30 unital outputs".into(), format!("{ok} unital outputs"))
    });

    report.run_check("lagrange-route-matches-series-route", || {
        let mut rng = seeded(3);
        let order = n.min(crate::lagrange::PARTITION_ENVELOPE);
        let mut ok = 0;
        for _ in 0..20 {
            let values: Vec<i64> = (0..order).map(|_| rng.gen_range(-9..=9)).collect();
            let cs = CountSequence::from_integers(&values);
            let ts = TruncatedSeries::from_integers(&values);
            let lag = lagrange_revert_reciprocal(&cs, order).unwrap();
            let ser = revert_reciprocal(&ts, order).unwrap();
            if lag.to_series() == ser {
                ok += 1;
            }
        }
        ("20 agreements".into(), format!("{ok} agreements"))
    });

    report.run_check("eigensequence-is-transform-fixed-point", || {
        let e = eigensequence(n);
        let b = revert_reciprocal(&e, n).unwrap();
        (render_series(&e), render_series(&b))
    });

    report.run_check("self-composition-equals-left-shift", || {
        let e = eigensequence(n + 1);
        let lhs = self_composition(&e, n).unwrap();
        let rhs = left_shift(&e).unwrap();
        (render_series(&rhs), render_series(&lhs))
    });

    report.run_check("modified-transform-shifts-eigensequence", || {
        let e = eigensequence(n + 1);
        let lhs = revert_reciprocal_modified(&e, n).unwrap();
        let rhs = left_shift(&e).unwrap();
        (render_series(&rhs), render_series(&lhs))
    });

    report.run_check("functional-sqrt-round-trip-100-random", || {
        let mut rng = seeded(4);
        let mut ok = 0;
        for _ in 0..100 {
            let a = random_unital_int_series(&mut rng, 15);
            let b = self_composition(&a, 15).unwrap();
            if functional_sqrt(&b, 15).unwrap() == a {
                ok += 1;
            }
        }
        ("100 recoveries".into(), format!("{ok} recoveries"))
    });

    report
}

fn counts_suite(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("counts");
    let exhaustive_agreement = n.min(8);

    report.run_check("direct-and-recursive-checkers-agree", || {
        let mut disagreements = 0u64;
        for m in 0..=exhaustive_agreement {
            for_each_standard_permutation(m, |w| {
                let p = Permutation::new(w.to_vec()).unwrap();
                if avoids_barred_direct(&p) != avoids_barred_recursive(&p) {
                    disagreements += 1;
                }
            });
        }
        (
            format!("0 disagreements through length {exhaustive_agreement}"),
            format!("{disagreements} disagreements through length {exhaustive_agreement}"),
        )
    });

    report.run_check("brute-counts-match-fixed-point", || {
        let fp = fixed_point_sequence(n + 2).unwrap();
        let expected: Vec<String> = (0..=n).map(|m| fp.term(m + 1).to_string()).collect();
        let actual: Vec<String> = (0..=n)
            .map(|m| count_avoiders(m, CheckMethod::Direct, n).unwrap().to_string())
            .collect();
        (expected.join(","), actual.join(","))
    });

    report.run_check("first-counts-are-1-2-6-23-104-531", || {
        let frozen = [1u64, 2, 6, 23, 104, 531];
        let upto = n.min(6);
        let expected: Vec<String> = frozen[..upto].iter().map(|v| v.to_string()).collect();
        let actual: Vec<String> = (1..=upto)
            .map(|m| count_avoiders(m, CheckMethod::Recursive, upto).unwrap().to_string())
            .collect();
        (expected.join(","), actual.join(","))
    });

    report.run_check("prepending-a-new-maximum-preserves-avoidance", || {
        let upto = n.min(7);
        let mut violations = 0u64;
        for m in 0..=upto {
            for_each_standard_permutation(m, |w| {
                let p = Permutation::new(w.to_vec()).unwrap();
                let mut extended = vec![m as u32 + 1];
                extended.extend_from_slice(w);
                let q = Permutation::new(extended).unwrap();
                if avoids_barred_direct(&p) != avoids_barred_direct(&q) {
                    violations += 1;
                }
            });
        }
        (
            format!("0 violations through length {upto}"),
            format!("{violations} violations through length {upto}"),
        )
    });

    report
}

fn bijection_suite(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("bijection");

    report.run_check("forward-round-trip-all-block-increasing", || {
        let mut total = 0u64;
        let mut failures = 0u64;
        for m in 0..=n {
            for p in condition_i_permutations(m) {
                total += 1;
                let t = match perm_to_tree(&p) {
                    Ok(t) => t,
                    Err(_) => {
                        failures += 1;
                        continue;
                    }
                };
                if !is_valid_cycle_tree(&t)
                    || t.edge_count() != m
                    || tree_to_perm(&t).map(|q| q != p).unwrap_or(true)
                {
                    failures += 1;
                }
            }
        }
        (
            format!("0 failures over {total} words"),
            format!("{failures} failures over {total} words"),
        )
    });

    report.run_check("cardinality-matches-factorial-weighted-count", || {
        let weights = CountSequence::new((1..=n.max(1)).map(|k| factorial(k - 1)).collect());
        let expected: Vec<String> = (0..=n)
            .map(|m| {
                weighted_tree_count(m, &weights, WeightedMode::Formula)
                    .unwrap()
                    .to_string()
            })
            .collect();
        let actual: Vec<String> = (0..=n)
            .map(|m| condition_i_permutations(m).len().to_string())
            .collect();
        (expected.join(","), actual.join(","))
    });

    report.run_check("every-cycle-tree-has-a-unique-preimage", || {
        let upto = n.min(7);
        let mut total = 0u64;
        let mut failures = 0u64;
        for m in 0..=upto {
            let mut seen = std::collections::HashSet::new();
            for t in enumerate_cycle_trees(m).unwrap() {
                total += 1;
                match tree_to_perm(&t) {
                    Ok(p) => {
                        if !seen.insert(p.to_string())
                            || !p.is_standard()
                            || p.len() != m
                            || perm_to_tree(&p).map(|back| back != t).unwrap_or(true)
                        {
                            failures += 1;
                        }
                    }
                    Err(_) => failures += 1,
                }
            }
        }
        (
            format!("0 failures over {total} trees"),
            format!("{failures} failures over {total} trees"),
        )
    });

    report.run_check("reference-decomposition-and-cycles", || {
        let p: Permutation = "3 1 2 5 4 11 7 6 8 12 14 13 10 9".parse().unwrap();
        let d = lrmax_decompose(&p).unwrap();
        let t = perm_to_tree(&p).unwrap();
        let back = tree_to_perm(&t).unwrap();
        let expected = "a=[3, 2, 4, 1, 4] b=[3, 2, 6, 1, 2] \
                        cycles=[[4, 3, 2, 1], [1], [4, 2, 1, 3], [2, 1], [3, 1, 2]] round-trip=ok";
        let actual = format!(
            "a={:?} b={:?} cycles={:?} round-trip={}",
            d.segment_lengths(),
            d.max_gaps(),
            t.preorder_cycles(),
            if back == p { "ok" } else { "mismatch" }
        );
        (expected.to_string(), actual)
    });

    report
}

fn trees_suite(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("trees");

    report.run_check("census-formula-matches-enumeration", || {
        let mut mismatches = 0u64;
        let mut censuses = 0u64;
        for m in 0..=n {
            let mut observed: std::collections::HashMap<Vec<usize>, u64> =
                std::collections::HashMap::new();
            for t in enumerate_trees(m).unwrap() {
                *observed
                    .entry(t.outdegree_census().counts().to_vec())
                    .or_default() += 1;
            }
            // every valid census comes from a partition of m
            for p in partitions_freq(m) {
                censuses += 1;
                let mut r = vec![m + 1 - p.part_count()];
                r.extend_from_slice(p.freqs());
                let formula =
                    tree_count_by_outdegree(&OutdegreeSequence::new(r.clone()).unwrap());
                let seen = observed.get(&r).copied().unwrap_or(0);
                if formula != BigInt::from(seen) {
                    mismatches += 1;
                }
            }
        }
        (
            format!("0 mismatches over {censuses} censuses"),
            format!("{mismatches} mismatches over {censuses} censuses"),
        )
    });

    report.run_check("tree-totals-are-catalan", || {
        // independent recurrence oracle
        let mut catalan = vec![BigInt::one()];
        for m in 0..n {
            let mut next = BigInt::zero();
            for i in 0..=m {
                next += &catalan[i] * &catalan[m - i];
            }
            catalan.push(next);
        }
        let expected: Vec<String> = catalan.iter().map(|c| c.to_string()).collect();
        let actual: Vec<String> = (0..=n)
            .map(|m| enumerate_trees(m).unwrap().count().to_string())
            .collect();
        (expected.join(","), actual.join(","))
    });

    report.run_check("weighted-modes-agree-on-random-weights", || {
        let mut rng = seeded(5);
        let upto = n.min(8);
        let mut mismatches = 0u64;
        for _ in 0..5 {
            let values: Vec<i64> = (0..upto.max(1)).map(|_| rng.gen_range(-9..=9)).collect();
            let w = CountSequence::from_integers(&values);
            for m in 0..=upto {
                let by_enum = weighted_tree_count(m, &w, WeightedMode::Enumerate).unwrap();
                let by_formula = weighted_tree_count(m, &w, WeightedMode::Formula).unwrap();
                if by_enum != by_formula {
                    mismatches += 1;
                }
            }
        }
        ("0 mismatches".into(), format!("{mismatches} mismatches"))
    });

    report.run_check("fixed-point-weights-reproduce-next-term", || {
        let fp = fixed_point_sequence(21).unwrap();
        let mut mismatches = 0u64;
        for m in 0..=19 {
            let w = CountSequence::new(fp.terms()[..m.max(1)].to_vec());
            let count = weighted_tree_count(m, &w, WeightedMode::Formula).unwrap();
            if count != *fp.term(m + 1) {
                mismatches += 1;
            }
        }
        (
            "0 mismatches through 19 edges".into(),
            format!("{mismatches} mismatches through 19 edges"),
        )
    });

    report
}

fn agreement_suite(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("agreement");

    report.run_check("agreement-solution-matches-eigensequence", || {
        let solved = agreement_unique_solution(n);
        let expected = render_series(&eigensequence(n));
        match solved {
            Ok(s) => (expected, render_series(&s)),
            Err(e) => (expected, format!("error: {e}")),
        }
    });

    report.run_check("perturbed-prefixes-make-transforms-differ", || {
        let mut rng = seeded(6);
        let base = eigensequence(15);
        let mut differing = 0;
        for _ in 0..100 {
            let mut coeffs = base.clone().into_coeffs();
            let idx = rng.gen_range(0..15);
            let mut delta = 0i64;
            while delta == 0 {
                delta = rng.gen_range(-9..=9);
            }
            coeffs[idx] += coeff_int(delta);
            let a = TruncatedSeries::new(coeffs);
            let lhs = self_composition(&a, 15).unwrap();
            let rhs = revert_reciprocal_modified(&a, 15).unwrap();
            if lhs != rhs {
                differing += 1;
            }
        }
        ("100 of 100 differ".into(), format!("{differing} of 100 differ"))
    });

    report
}

fn render_series(s: &TruncatedSeries) -> String {
    let parts: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_depth() {
        for report in run(Suite::All, Some(4)).unwrap() {
            assert!(report.passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            run(Suite::Counts, Some(11)),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(run(Suite::Counts, Some(6)).is_ok());
    }
}
