//! Lifting a standard Rothe tableau along first ascents until the
//! permutation becomes dominant, and the resulting injection of
//! `SRT(w)` into the reduced words of `w`.
//!
//! One lift at the first ascent `i` of `w`:
//!
//! 1. open the vacancy `(i, w_i)` and slide outward; it must end at `(1,1)`;
//! 2. put 0 at `(1,1)` and add 1 to every label;
//! 3. move the row `i + 1` cells right of column `w_i` up into row `i`.
//!
//! The result is a standard filling of `D(w s_i)`.

use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram};
use crate::eg::{omega_traced, zeta, OmegaRun};
use crate::error::{invalid, violation, Result};
use crate::jdt::{run_slide, JdtPath, SlideDirection};
use crate::perm::{Permutation, ReducedWord};
use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftStep {
    /// First ascent of `input`.
    pub ascent: usize,
    /// `(i, w_i)`.
    pub added: Cell,
    pub path: JdtPath,
    pub input: Permutation,
    pub output: Permutation,
    #[serde(skip)]
    pub tableau: Tableau,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftTrace {
    pub steps: Vec<LiftStep>,
    /// `i_1, …, i_k`.
    pub suffix: Vec<usize>,
    /// The dominant permutation `w s_{i_1} ⋯ s_{i_k}`.
    pub target: Permutation,
}

fn check_srt(w: &Permutation, t: &Tableau) -> Result<()> {
    if !t.has_shape(&Diagram::rothe(w)) {
        return Err(invalid(format!("{t} is not a filling of D({w})")));
    }
    if !t.is_standard()? {
        return Err(invalid(format!("{t} is not a standard filling of D({w})")));
    }
    Ok(())
}

fn lift_unchecked(w: &Permutation, t: &Tableau) -> Result<(Permutation, Tableau, LiftStep)> {
    let i = w
        .first_ascent()
        .ok_or_else(|| invalid(format!("{w} has no ascent")))?;
    let wi = w.at(i);
    let added = Cell::new(i, wi);
    let mut labels = t.labels().clone();
    let path = run_slide(&mut labels, added, SlideDirection::Outward, |_| {});
    if path.last() != Cell::new(1, 1) {
        return Err(violation(format!(
            "lifting {w} at {added}: outward slide ended at {} instead of (1,1)",
            path.last()
        )));
    }
    let labels = labels
        .into_iter()
        .map(|(c, v)| {
            let c = if c.row == i + 1 && c.col > wi {
                Cell::new(i, c.col)
            } else {
                c
            };
            (c, v + 1)
        })
        .chain(std::iter::once((Cell::new(1, 1), 1)))
        .collect();
    let lifted = Tableau::from_map(labels);
    let output = w.mul_right(i)?;
    if !lifted.has_shape(&Diagram::rothe(&output)) || !lifted.is_standard()? {
        return Err(violation(format!(
            "lifting {w} at {added} produced {lifted}, not a standard filling of D({output})"
        )));
    }
    let step = LiftStep {
        ascent: i,
        added,
        path,
        input: w.clone(),
        output: output.clone(),
        tableau: lifted.clone(),
    };
    Ok((output, lifted, step))
}

/// `η_i` at the first ascent `i` of `w`.
pub fn lift_once(w: &Permutation, t: &Tableau) -> Result<(Permutation, Tableau, LiftStep)> {
    check_srt(w, t)?;
    lift_unchecked(w, t)
}

/// Lifts at first ascents until the Lehmer code is weakly decreasing.
pub fn lift_full(w: &Permutation, t: &Tableau) -> Result<(LiftTrace, Tableau)> {
    check_srt(w, t)?;
    let n = w.size();
    let max_steps = n * (n - 1) / 2 - w.length();
    let mut current = (w.clone(), t.clone());
    let mut steps = Vec::new();
    while !current.0.lehmer_code().is_weakly_decreasing() {
        if steps.len() == max_steps {
            return Err(violation(format!("lifting {w} did not reach a dominant permutation")));
        }
        let (next_w, next_t, step) = lift_unchecked(&current.0, &current.1)?;
        steps.push(step);
        current = (next_w, next_t);
    }
    let trace = LiftTrace {
        suffix: steps.iter().map(|s| s.ascent).collect(),
        steps,
        target: current.0,
    };
    Ok((trace, current.1))
}

/// Everything computed by [`inject_to_reduced_word`].
#[derive(Debug, Clone)]
pub struct InjectionRun {
    pub trace: LiftTrace,
    pub lifted: Tableau,
    pub omega: OmegaRun,
    pub word: ReducedWord,
}

pub fn inject_traced(w: &Permutation, t: &Tableau) -> Result<InjectionRun> {
    let (trace, lifted) = lift_full(w, t)?;
    let omega = omega_traced(&lifted)?;
    if !omega.word.ends_with(&trace.suffix) {
        return Err(violation(format!(
            "Ω = {} does not end with the lift suffix {:?}",
            omega.word, trace.suffix
        )));
    }
    let word = zeta(&omega.word, &trace.suffix, w)?;
    Ok(InjectionRun {
        trace,
        lifted,
        omega,
        word,
    })
}

/// `ζ ∘ Ω ∘ η`: a reduced word of `w` determined by `T ∈ SRT(w)`.
pub fn inject_to_reduced_word(w: &Permutation, t: &Tableau) -> Result<ReducedWord> {
    inject_traced(w, t).map(|r| r.word)
}

/// No cell of column `w_i` below row `i` survives the lift.
pub fn fact1_holds(step: &LiftStep) -> bool {
    let (i, col) = (step.added.row, step.added.col);
    !step
        .tableau
        .labels()
        .keys()
        .any(|c| c.col == col && c.row > i)
}

/// After the lift, the label at `(i, w_i + 1)` exceeds those at `(i, w_i)`
/// and `(i + 1, w_i - 1)`, whenever those cells exist.
pub fn fact2_holds(step: &LiftStep) -> bool {
    let (i, col) = (step.added.row, step.added.col);
    let t = &step.tableau;
    let Some(right) = t.get(Cell::new(i, col + 1)) else {
        return true;
    };
    let corner_ok = t.get(Cell::new(i, col)).is_none_or(|v| right > v);
    let below_ok = if col > 1 {
        t.get(Cell::new(i + 1, col - 1)).is_none_or(|v| right > v)
    } else {
        true
    };
    corner_ok && below_ok
}

/// Whenever a lift's added cell lies strictly north-east of the previous
/// one, the rows are adjacent and the columns increase.
pub fn fact3_holds(trace: &LiftTrace) -> bool {
    trace.steps.windows(2).all(|pair| {
        let (a, b) = (pair[0].added, pair[1].added);
        let north_east = b.row < a.row && b.col > a.col;
        !north_east || (a.row == b.row + 1 && a.col < b.col)
    })
}
