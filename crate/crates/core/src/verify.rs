//! Exhaustive verification suites with structured reports.
//!
//! Each suite walks every input up to its bound and records, per check, the
//! number of cases, skips, failures and the first counterexample in input
//! order. Reports are deterministic for any worker count.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::counting::{count_avoiders_with, gf_coefficients, srt_count_formula, DEFAULT_AVOIDER_CAP};
use crate::diagram::{Diagram, Partition};
use crate::eg::{gamma, gamma_star};
use crate::error::{invalid, Result};
use crate::jdt::iterate_promotion;
use crate::lifting::{fact1_holds, fact2_holds, fact3_holds, inject_traced, lift_full, lift_once};
use crate::par::map_ordered;
use crate::perm::{count_reduced_words, Permutation};
use crate::tableau::{
    count_brt, count_srt, enumerate_srt, hook_length_count, standard_fillings, Tableau, TableauDoc,
    DEFAULT_BRT_CAP_LENGTH,
};

const FILLING_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BrtWords,
    MainTheorem,
    PromotionOrder,
    GammaBijection,
    GammaReversal,
    LiftingFacts,
    InjectSuffix,
    Formula,
    Avoiders,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::BrtWords,
        Suite::MainTheorem,
        Suite::PromotionOrder,
        Suite::GammaBijection,
        Suite::GammaReversal,
        Suite::LiftingFacts,
        Suite::InjectSuffix,
        Suite::Formula,
        Suite::Avoiders,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BrtWords => "brt-words",
            Suite::MainTheorem => "main-theorem",
            Suite::PromotionOrder => "promotion-order",
            Suite::GammaBijection => "gamma-bijection",
            Suite::GammaReversal => "gamma-reversal",
            Suite::LiftingFacts => "lifting-facts",
            Suite::InjectSuffix => "inject-suffix",
            Suite::Formula => "formula",
            Suite::Avoiders => "avoiders",
        }
    }

    /// Largest `n` used when no bound is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::MainTheorem | Suite::Formula => 6,
            Suite::Avoiders => 8,
            _ => 5,
        }
    }

    pub fn run(self, bounds: &Bounds, workers: usize) -> Result<VerificationReport> {
        let checks = match self {
            Suite::BrtWords => brt_words(bounds, workers),
            Suite::MainTheorem => main_theorem(bounds, workers),
            Suite::PromotionOrder => promotion_order(bounds, workers)?,
            Suite::GammaBijection => gamma_bijection(bounds, workers)?,
            Suite::GammaReversal => gamma_reversal(bounds, workers)?,
            Suite::LiftingFacts => lifting_facts(bounds, workers),
            Suite::InjectSuffix => inject_suffix(bounds, workers),
            Suite::Formula => formula(bounds, workers),
            Suite::Avoiders => avoiders(bounds, workers)?,
        };
        Ok(VerificationReport {
            suite: self.name().to_string(),
            bounds: bounds.clone(),
            checks,
            elapsed_ms: None,
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_n: usize,
    /// Longest permutation whose balanced fillings are brute-forced.
    pub cap_length: usize,
}

impl Bounds {
    pub fn for_suite(suite: Suite, max_n: Option<usize>, cap_length: Option<usize>) -> Bounds {
        Bounds {
            max_n: max_n.unwrap_or(suite.default_max_n()),
            cap_length: cap_length.unwrap_or(DEFAULT_BRT_CAP_LENGTH),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableau: Option<TableauDoc>,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn new(w: Option<&Permutation>, t: Option<&Tableau>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Counterexample {
            permutation: w.map(|w| w.word().to_vec()),
            tableau: t.map(|t| t.to_doc(w.map(|w| w.size()), w)),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub skipped: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn new(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            cases: 0,
            skipped: 0,
            failures: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.cases += 1,
            Outcome::Skip => self.skipped += 1,
            Outcome::Fail(c) => {
                self.cases += 1;
                self.failures += 1;
                if self.counterexample.is_none() {
                    self.counterexample = Some(*c);
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub bounds: Bounds,
    pub checks: Vec<Check>,
    /// Wall time; left out unless the caller fills it in.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} (max-n {}, cap-length {}): {}",
            self.suite,
            self.bounds.max_n,
            self.bounds.cap_length,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            write!(
                f,
                "  {} {}: {} cases",
                if c.passed() { "ok  " } else { "FAIL" },
                c.name,
                c.cases
            )?;
            if c.skipped > 0 {
                write!(f, ", {} skipped", c.skipped)?;
            }
            if c.failures > 0 {
                write!(f, ", {} failed", c.failures)?;
            }
            writeln!(f)?;
            if let Some(ce) = &c.counterexample {
                if let Some(p) = &ce.permutation {
                    let p: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                    writeln!(f, "       permutation {}", p.join(","))?;
                }
                if let Some(t) = &ce.tableau {
                    writeln!(f, "       tableau {}", t.to_json())?;
                }
                writeln!(f, "       expected {}", ce.expected)?;
                writeln!(f, "       actual   {}", ce.actual)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug)]
enum Outcome {
    Pass,
    Skip,
    Fail(Box<Counterexample>),
}

impl Outcome {
    fn check(ok: bool, fail: impl FnOnce() -> Counterexample) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(Box::new(fail()))
        }
    }
}

/// Folds per-item outcome rows into one check per column.
fn fold<const K: usize>(names: [String; K], rows: Vec<[Outcome; K]>) -> Vec<Check> {
    let mut checks = names.map(Check::new);
    for row in rows {
        for (check, outcome) in checks.iter_mut().zip(row) {
            check.record(outcome);
        }
    }
    // bounds below the first applicable n produce empty rows
    checks
        .into_iter()
        .filter(|c| c.cases + c.skipped > 0)
        .collect()
}

fn perms(n: usize) -> Vec<Permutation> {
    Permutation::all(n).collect()
}

fn brt_words(b: &Bounds, workers: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=b.max_n {
        let rows = map_ordered(&perms(n), workers, |w| {
            if w.length() > b.cap_length {
                return [Outcome::Skip];
            }
            let words = count_reduced_words(w);
            [match count_brt(w, b.cap_length) {
                Ok(brt) => Outcome::check(brt == words, || {
                    Counterexample::new(Some(w), None, format!("|BRT| = |R| = {words}"), format!("|BRT| = {brt}"))
                }),
                Err(e) => Outcome::Fail(Box::new(Counterexample::new(Some(w), None, words, e))),
            }]
        });
        out.extend(fold([format!("|BRT(w)| = |R(w)| on S_{n}")], rows));
    }
    out
}

fn main_theorem(b: &Bounds, workers: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=b.max_n {
        let rows = map_ordered(&perms(n), workers, |w| {
            let srt = count_srt(w);
            let words = count_reduced_words(w);
            let avoids = w.is_equality_class();
            let inequality = Outcome::check(srt <= words, || {
                Counterexample::new(Some(w), None, format!("|SRT| <= {words}"), format!("|SRT| = {srt}"))
            });
            let equality = Outcome::check((srt == words) == avoids, || {
                let relation = if avoids { "=" } else { "<" };
                Counterexample::new(
                    Some(w),
                    None,
                    format!("|SRT| {relation} |R| = {words}"),
                    format!("|SRT| = {srt}"),
                )
            });
            [inequality, equality]
        });
        out.extend(fold(
            [
                format!("|SRT(w)| <= |R(w)| on S_{n}"),
                format!("equality iff pattern avoidance on S_{n}"),
            ],
            rows,
        ));
    }
    out
}

fn formula(b: &Bounds, workers: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=b.max_n {
        let rows = map_ordered(&perms(n), workers, |w| {
            if !w.is_equality_class() {
                return [Outcome::Skip];
            }
            let srt = count_srt(w);
            let words = count_reduced_words(w);
            [match srt_count_formula(w) {
                Ok(f) => Outcome::check(f == srt && f == words, || {
                    Counterexample::new(Some(w), None, format!("|SRT| = {srt}, |R| = {words}"), format!("formula = {f}"))
                }),
                Err(e) => Outcome::Fail(Box::new(Counterexample::new(Some(w), None, srt, e))),
            }]
        });
        out.extend(fold([format!("formula = |SRT(w)| = |R(w)| on avoiders in S_{n}")], rows));
    }
    out
}

/// All standard tableaux of the staircase `(n-1, …, 1)`.
fn staircase_tableaux(n: usize) -> Result<Vec<Tableau>> {
    standard_fillings(&Diagram::young(&Partition::staircase(n)), FILLING_CAP)
}

fn count_check(name: String, expected: &BigUint, actual: usize) -> Check {
    let mut check = Check::new(name);
    check.record(Outcome::check(BigUint::from(actual) == *expected, || {
        Counterexample::new(None, None, expected, actual)
    }));
    check
}

fn promotion_order(b: &Bounds, workers: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=b.max_n {
        let tableaux = staircase_tableaux(n)?;
        let expected = hook_length_count(&Partition::staircase(n));
        out.push(count_check(format!("|SYT(δ_{n})| = hook-length count"), &expected, tableaux.len()));
        let rows = map_ordered(&tableaux, workers, |t| {
            let l = t.len();
            let transposed = t.transpose();
            [false, true].map(|dual| match iterate_promotion(t, l, dual) {
                Ok(steps) => {
                    let last = &steps.last().expect("L ≥ 1").tableau;
                    Outcome::check(*last == transposed, || {
                        Counterexample::new(None, Some(t), &transposed, last)
                    })
                }
                Err(e) => Outcome::Fail(Box::new(Counterexample::new(None, Some(t), &transposed, e))),
            })
        });
        out.extend(fold(
            [
                format!("∂^L(T) = T^t on SYT(δ_{n})"),
                format!("(∂*)^L(T) = T^t on SYT(δ_{n})"),
            ],
            rows,
        ));
    }
    Ok(out)
}

fn gamma_bijection(b: &Bounds, workers: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=b.max_n {
        let w0 = Permutation::longest(n);
        let tableaux = staircase_tableaux(n)?;
        let words = map_ordered(&tableaux, workers, gamma);
        let rows: Vec<[Outcome; 1]> = tableaux
            .iter()
            .zip(&words)
            .map(|(t, word)| {
                [match word {
                    Ok(word) => Outcome::check(word.is_reduced() && word.evaluate() == w0, || {
                        Counterexample::new(Some(&w0), Some(t), "a reduced word of w_0", word)
                    }),
                    Err(e) => Outcome::Fail(Box::new(Counterexample::new(Some(&w0), Some(t), "a reduced word of w_0", e))),
                }]
            })
            .collect();
        out.extend(fold([format!("Γ(T) ∈ R(w_0) on SYT(δ_{n})")], rows));
        let distinct: BTreeSet<Vec<usize>> = words
            .iter()
            .filter_map(|w| w.as_ref().ok().map(|w| w.letters.clone()))
            .collect();
        out.push(count_check(
            format!("Γ is injective on SYT(δ_{n})"),
            &BigUint::from(tableaux.len()),
            distinct.len(),
        ));
        out.push(count_check(
            format!("|Γ(SYT(δ_{n}))| = |R(w_0)|"),
            &count_reduced_words(&w0),
            distinct.len(),
        ));
        out.push(count_check(
            format!("|R(w_0)| = hook-length count for δ_{n}"),
            &hook_length_count(&Partition::staircase(n)),
            tableaux.len(),
        ));
    }
    Ok(out)
}

fn gamma_reversal(b: &Bounds, workers: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=b.max_n {
        let tableaux = staircase_tableaux(n)?;
        let rows = map_ordered(&tableaux, workers, |t| {
            [match (gamma(t), gamma_star(t)) {
                (Ok(g), Ok(s)) => {
                    let reversed = g.reversed();
                    Outcome::check(s == reversed, || Counterexample::new(None, Some(t), &reversed, &s))
                }
                (Err(e), _) | (_, Err(e)) => Outcome::Fail(Box::new(Counterexample::new(None, Some(t), "Γ and Γ* defined", e))),
            }]
        });
        out.extend(fold([format!("Γ*(T) = reverse(Γ(T)) on SYT(δ_{n})")], rows));
    }
    Ok(out)
}

fn lifting_facts(b: &Bounds, workers: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=b.max_n {
        // standardness of a lift fails for decomposable w, e.g. 2143
        let candidates: Vec<Permutation> = perms(n)
            .into_iter()
            .filter(|w| w.is_indecomposable() && w.first_ascent().is_some())
            .collect();
        let per_w = map_ordered(&candidates, workers, lift_rows);
        let mut pairs = Vec::new();
        let mut injective = Vec::new();
        for (rows, inj) in per_w {
            pairs.extend(rows);
            injective.push([inj]);
        }
        out.extend(fold(
            [
                format!("η_i(T) ∈ SRT(w s_i) on S_{n}"),
                format!("fact 1 on S_{n}"),
                format!("fact 2 on S_{n}"),
                format!("fact 3 on S_{n}"),
            ],
            pairs,
        ));
        out.extend(fold([format!("η_i injective on SRT(w), S_{n}")], injective));
    }
    out
}

/// Per `T ∈ SRT(w)`: the lift, then the three facts; and per `w`: injectivity.
fn lift_rows(w: &Permutation) -> (Vec<[Outcome; 4]>, Outcome) {
    let tableaux = match enumerate_srt(w, FILLING_CAP) {
        Ok(t) => t,
        Err(e) => {
            let fail = || Outcome::Fail(Box::new(Counterexample::new(Some(w), None, "SRT(w)", &e)));
            return (vec![[fail(), Outcome::Skip, Outcome::Skip, Outcome::Skip]], fail());
        }
    };
    let mut images = HashSet::new();
    let mut broken = false;
    let mut rows = Vec::with_capacity(tableaux.len());
    for t in &tableaux {
        let fail = |expected: &str, actual: String| {
            Outcome::Fail(Box::new(Counterexample::new(Some(w), Some(t), expected, actual)))
        };
        let row = match lift_once(w, t) {
            Ok((_, next, step)) => {
                images.insert(next.clone());
                let fact1 = Outcome::check(fact1_holds(&step), || {
                    Counterexample::new(Some(w), Some(t), "no cell below the added cell in its column", &next)
                });
                let fact2 = Outcome::check(fact2_holds(&step), || {
                    Counterexample::new(Some(w), Some(t), "label right of the added cell is larger", &next)
                });
                // later steps may break; those pairs are reported at their own w
                let fact3 = match lift_full(w, t) {
                    Ok((trace, _)) => Outcome::check(fact3_holds(&trace), || {
                        Counterexample::new(
                            Some(w),
                            Some(t),
                            "north-east steps in adjacent rows",
                            format!("suffix {:?}", trace.suffix),
                        )
                    }),
                    Err(_) => Outcome::Skip,
                };
                [Outcome::Pass, fact1, fact2, fact3]
            }
            Err(e) => {
                broken = true;
                [fail("a standard filling of D(w s_i)", e.to_string()), Outcome::Skip, Outcome::Skip, Outcome::Skip]
            }
        };
        rows.push(row);
    }
    let injective = if broken {
        Outcome::Skip
    } else {
        Outcome::check(images.len() == tableaux.len(), || {
            Counterexample::new(Some(w), None, format!("{} distinct images", tableaux.len()), images.len())
        })
    };
    (rows, injective)
}

fn inject_suffix(b: &Bounds, workers: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=b.max_n {
        let candidates: Vec<Permutation> = perms(n)
            .into_iter()
            .filter(|w| w.is_indecomposable() && !w.is_dominant())
            .collect();
        let per_w = map_ordered(&candidates, workers, inject_rows);
        let mut pairs = Vec::new();
        let mut whole = Vec::new();
        for (rows, w_checks) in per_w {
            pairs.extend(rows);
            whole.push(w_checks);
        }
        out.extend(fold([format!("Ω(η(T)) ends with the lift suffix on S_{n}")], pairs));
        out.extend(fold(
            [
                format!("ζ∘Ω∘η is injective into R(w) on S_{n}"),
                format!("image is a strict subset of R(w) iff a pattern occurs, on S_{n}"),
            ],
            whole,
        ));
    }
    out
}

/// Per `T`: the suffix property; per `w`: injectivity and strictness,
/// skipped when some `T` has no image.
fn inject_rows(w: &Permutation) -> (Vec<[Outcome; 1]>, [Outcome; 2]) {
    let tableaux = match enumerate_srt(w, FILLING_CAP) {
        Ok(t) => t,
        Err(e) => {
            let fail = Outcome::Fail(Box::new(Counterexample::new(Some(w), None, "SRT(w)", e)));
            return (vec![[fail]], [Outcome::Skip, Outcome::Skip]);
        }
    };
    let mut image = BTreeSet::new();
    let mut rows = Vec::with_capacity(tableaux.len());
    let mut complete = true;
    for t in &tableaux {
        let fail = |expected: &str, actual: String| {
            Outcome::Fail(Box::new(Counterexample::new(Some(w), Some(t), expected, actual)))
        };
        rows.push([match inject_traced(w, t) {
            Ok(run) if run.word.evaluate() == *w && run.word.is_reduced() => {
                image.insert(run.word.letters);
                Outcome::Pass
            }
            Ok(run) => {
                complete = false;
                fail("a reduced word of w", run.word.to_string())
            }
            Err(e) => {
                complete = false;
                fail("Ω(η(T)) ending with the suffix", e.to_string())
            }
        }]);
    }
    if !complete {
        return (rows, [Outcome::Skip, Outcome::Skip]);
    }
    let injective = Outcome::check(image.len() == tableaux.len(), || {
        Counterexample::new(Some(w), None, format!("{} distinct words", tableaux.len()), image.len())
    });
    let words = count_reduced_words(w);
    let strict = BigUint::from(image.len()) < words;
    let has_pattern = !w.is_equality_class();
    let strictness = Outcome::check(strict == has_pattern, || {
        Counterexample::new(
            Some(w),
            None,
            format!("image {} |R(w)| = {words}", if has_pattern { "<" } else { "=" }),
            format!("image size {}", image.len()),
        )
    });
    (rows, [injective, strictness])
}

fn avoiders(b: &Bounds, workers: usize) -> Result<Vec<Check>> {
    // values of the series expansion through x^6
    const KNOWN: [u64; 6] = [1, 2, 6, 20, 69, 243];
    let series = gf_coefficients(b.max_n)?;
    let mut agree = Check::new(format!("brute-force a_n = series a_n for n <= {}", b.max_n));
    let mut known = Check::new("a_1..a_6 = 1, 2, 6, 20, 69, 243");
    for n in 1..=b.max_n {
        let brute = count_avoiders_with(n, DEFAULT_AVOIDER_CAP, workers)?;
        agree.record(Outcome::check(BigUint::from(brute) == series[n - 1], || {
            Counterexample::new(None, None, format!("a_{n} = {}", series[n - 1]), format!("a_{n} = {brute}"))
        }));
        if n <= KNOWN.len() {
            known.record(Outcome::check(brute == KNOWN[n - 1], || {
                Counterexample::new(None, None, format!("a_{n} = {}", KNOWN[n - 1]), format!("a_{n} = {brute}"))
            }));
        }
    }
    Ok(vec![agree, known])
}

/// Runs every suite with its default bound unless `max_n` overrides it.
pub fn run_all(max_n: Option<usize>, cap_length: Option<usize>, workers: usize) -> Result<Vec<VerificationReport>> {
    Suite::ALL
        .into_iter()
        .map(|s| s.run(&Bounds::for_suite(s, max_n, cap_length), workers))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_bounds_pass_and_are_worker_independent() {
        for s in Suite::ALL {
            let b = Bounds { max_n: 4, cap_length: 6 };
            let serial = s.run(&b, 1).unwrap();
            assert!(serial.passed(), "{serial}");
            assert_eq!(s.run(&b, 3).unwrap(), serial);
        }
    }

    #[test]
    fn counterexample_is_first_failure() {
        let mut c = Check::new("x");
        c.record(Outcome::Pass);
        c.record(Outcome::Fail(Box::new(Counterexample::new(None, None, 1, 2))));
        c.record(Outcome::Skip);
        c.record(Outcome::Fail(Box::new(Counterexample::new(None, None, 3, 4))));
        assert_eq!((c.cases, c.skipped, c.failures), (3, 1, 2));
        assert_eq!(c.counterexample.unwrap().expected, "1");
    }

    #[test]
    fn brt_cap_skips_long_permutations() {
        let report = Suite::BrtWords.run(&Bounds { max_n: 4, cap_length: 3 }, 1).unwrap();
        assert!(report.passed());
        assert_eq!(report.checks[3].skipped, 24 - 15);
    }
}
