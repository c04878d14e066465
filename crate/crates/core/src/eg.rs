//! Staircase packing and the promotion-driven word maps: `Γ` reads the
//! columns of the cells vacated by repeated promotion, `Γ*` the rows of
//! the cells where repeated dual-promotion ends, and `Ω` keeps the tail of
//! `Γ(T⁺)` for a packed Young tableau.

use std::collections::BTreeMap;

use crate::diagram::{staircase_envelope, Cell, Diagram};
use crate::error::{invalid, violation, Result};
use crate::jdt::{iterate_promotion, PromotionStep};
use crate::perm::{evaluate_word, Permutation, ReducedWord};
use crate::tableau::Tableau;

/// `T⁺` and the set `S` of cells added to reach the enclosing staircase.
/// The added cells receive `n+1, …, L` in row-major order.
pub fn pack_plus(t: &Tableau) -> Result<(Tableau, Diagram)> {
    let lambda = t
        .shape()
        .as_young()
        .ok_or_else(|| invalid(format!("{t} does not have a Young shape")))?;
    let plus = Diagram::young(&staircase_envelope(&lambda));
    let mut labels: BTreeMap<Cell, u32> = t.labels().clone();
    let mut next = t.len() as u32;
    let mut added = Vec::new();
    for &c in plus.cells() {
        if let std::collections::btree_map::Entry::Vacant(slot) = labels.entry(c) {
            next += 1;
            slot.insert(next);
            added.push(c);
        }
    }
    Ok((Tableau::from_map(labels), Diagram::from_cells(added)))
}

/// Promotion run behind `Γ` or `Γ*`.
#[derive(Debug, Clone)]
pub struct WordTrace {
    pub word: ReducedWord,
    pub steps: Vec<PromotionStep>,
}

impl WordTrace {
    pub fn cells(&self) -> Vec<Cell> {
        self.steps.iter().map(|s| s.cell).collect()
    }
}

fn staircase_order(t: &Tableau) -> Result<usize> {
    t.shape()
        .as_young()
        .and_then(|l| l.staircase_order())
        .ok_or_else(|| invalid(format!("{t} does not have a staircase shape")))
}

pub fn gamma_traced(t: &Tableau) -> Result<WordTrace> {
    let m = staircase_order(t)?;
    let steps = iterate_promotion(t, t.len(), false)?;
    let letters = steps.iter().map(|s| s.cell.col).collect();
    Ok(WordTrace {
        word: ReducedWord::new(letters, m)?,
        steps,
    })
}

pub fn gamma_star_traced(t: &Tableau) -> Result<WordTrace> {
    let m = staircase_order(t)?;
    let steps = iterate_promotion(t, t.len(), true)?;
    let letters = steps.iter().map(|s| s.cell.row).collect();
    Ok(WordTrace {
        word: ReducedWord::new(letters, m)?,
        steps,
    })
}

/// `Γ(T)` for a standard staircase tableau.
pub fn gamma(t: &Tableau) -> Result<ReducedWord> {
    gamma_traced(t).map(|g| g.word)
}

/// `Γ*(T)` for a standard staircase tableau.
pub fn gamma_star(t: &Tableau) -> Result<ReducedWord> {
    gamma_star_traced(t).map(|g| g.word)
}

/// Everything computed on the way to `Ω(T)`.
#[derive(Debug, Clone)]
pub struct OmegaRun {
    pub word: ReducedWord,
    /// Lives in `S_N` where the packed staircase has `N - 1` columns.
    pub perm: Permutation,
    pub packed: Tableau,
    pub added: Diagram,
    pub gamma: WordTrace,
}

pub fn omega_traced(t: &Tableau) -> Result<OmegaRun> {
    if !t.is_standard()? {
        return Err(invalid(format!("{t} is not standard")));
    }
    let (packed, added) = pack_plus(t)?;
    let gamma = gamma_traced(&packed)?;
    let big_n = gamma.word.n;
    let head = gamma.word.len() - t.len();
    let mut perm = Permutation::longest(big_n);
    for &a in &gamma.word.letters[..head] {
        perm = perm.mul_left(a)?;
    }
    let word = ReducedWord::new(gamma.word.letters[head..].to_vec(), big_n)?;
    if word.evaluate() != perm || perm.length() != word.len() {
        return Err(violation(format!("{word} is not a reduced word for {perm}")));
    }
    if !Diagram::rothe(&perm).same_cells(&t.shape()) {
        return Err(violation(format!("D({perm}) differs from the shape of {t}")));
    }
    Ok(OmegaRun {
        word,
        perm,
        packed,
        added,
        gamma,
    })
}

/// `Ω(T)` and the permutation it is a reduced word for.
pub fn omega(t: &Tableau) -> Result<(ReducedWord, Permutation)> {
    omega_traced(t).map(|o| (o.word, o.perm))
}

/// Strips `suffix` from a reduced word of `w · s_{i_1} ⋯ s_{i_k}`, giving a
/// reduced word of `w`.
pub fn zeta(word: &ReducedWord, suffix: &[usize], w: &Permutation) -> Result<ReducedWord> {
    if !word.ends_with(suffix) {
        return Err(violation(format!("{word} does not end with {suffix:?}")));
    }
    let prefix = &word.letters[..word.len() - suffix.len()];
    let n = word.n.max(w.size());
    let value = evaluate_word(prefix, n)?;
    if value != w.padded(n) || prefix.len() != w.length() {
        return Err(violation(format!(
            "{prefix:?} is not a reduced word for {w}"
        )));
    }
    ReducedWord::new(prefix.to_vec(), w.size())
        .map_err(|_| violation(format!("{prefix:?} uses generators outside S_{}", w.size())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Partition;

    fn rows(r: &[&[u32]]) -> Tableau {
        Tableau::from_rows(r)
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn staircase_5() -> Tableau {
        rows(&[&[1, 3, 5, 6], &[2, 4, 10], &[7, 8], &[9]])
    }

    fn young_9() -> Tableau {
        rows(&[&[1, 2, 5, 6, 9], &[3, 4], &[7], &[8]])
    }

    #[test]
    fn packing() {
        let (plus, added) = pack_plus(&young_9()).unwrap();
        assert_eq!(
            plus,
            rows(&[
                &[1, 2, 5, 6, 9],
                &[3, 4, 10, 11],
                &[7, 12, 13],
                &[8, 14],
                &[15]
            ])
        );
        assert_eq!(added.len(), 6);
        let stair = rows(&[&[1, 2], &[3]]);
        let (plus, added) = pack_plus(&stair).unwrap();
        assert_eq!(plus, stair);
        assert!(added.is_empty());
        assert!(pack_plus(&Tableau::from_cells([(Cell::new(2, 2), 1)]).unwrap()).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&rows(&[&[1]])).unwrap().letters, vec![1]);
        let g = gamma_traced(&staircase_5()).unwrap();
        assert_eq!(g.word.letters, vec![3, 1, 2, 1, 4, 3, 2, 4, 1, 3]);
        let cells: Vec<(usize, usize)> = g.cells().iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(
            cells,
            vec![(2, 3), (4, 1), (3, 2), (4, 1), (1, 4), (2, 3), (3, 2), (1, 4), (4, 1), (2, 3)]
        );
        assert_eq!(g.word.evaluate(), Permutation::longest(5));
        let (plus, _) = pack_plus(&young_9()).unwrap();
        assert_eq!(
            gamma(&plus).unwrap().letters,
            vec![1, 2, 3, 2, 4, 3, 5, 1, 2, 4, 3, 2, 1, 4, 2]
        );
        assert!(gamma(&young_9()).is_err());
    }

    #[test]
    fn gamma_star_examples() {
        assert_eq!(gamma_star(&rows(&[&[1]])).unwrap().letters, vec![1]);
        let g = gamma_star_traced(&staircase_5()).unwrap();
        assert_eq!(g.word.letters, vec![3, 1, 4, 2, 3, 4, 1, 2, 1, 3]);
        let cells: Vec<(usize, usize)> = g.cells().iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(
            cells,
            vec![(3, 2), (1, 4), (4, 1), (2, 3), (3, 2), (4, 1), (1, 4), (2, 3), (1, 4), (3, 2)]
        );
        assert_eq!(g.word, gamma(&staircase_5()).unwrap().reversed());
    }

    #[test]
    fn omega_examples() {
        let (word, perm) = omega(&rows(&[&[1]])).unwrap();
        assert_eq!(word.letters, vec![1]);
        assert_eq!(perm, p("21"));
        let run = omega_traced(&young_9()).unwrap();
        assert_eq!(run.word.letters, vec![5, 1, 2, 4, 3, 2, 1, 4, 2]);
        assert_eq!(run.perm, p("632415"));
        assert_eq!(run.gamma.word.letters[..6], [1, 2, 3, 2, 4, 3]);
        // the head letters are the columns of the added cells, largest label first
        let mut by_label: Vec<Cell> = run.added.cells().iter().copied().collect();
        by_label.sort_by_key(|&c| std::cmp::Reverse(run.packed.get(c).unwrap()));
        let cols: Vec<usize> = by_label.iter().map(|c| c.col).collect();
        assert_eq!(run.gamma.word.letters[..6], cols[..]);
    }

    #[test]
    fn omega_of_empty_tableau() {
        let (word, perm) = omega(&Tableau::empty()).unwrap();
        assert!(word.is_empty());
        assert!(perm.is_identity());
    }

    #[test]
    fn zeta_examples() {
        let w = p("2143");
        let r = ReducedWord::new(vec![1, 3], 4).unwrap();
        assert_eq!(zeta(&r, &[], &w).unwrap(), r);
        let word = ReducedWord::new(vec![5, 1, 2, 4, 3, 2, 1, 4, 2], 6).unwrap();
        let target = p("632415").mul_right(2).unwrap().mul_right(4).unwrap();
        assert_eq!(zeta(&word, &[4, 2], &target).unwrap().letters, vec![5, 1, 2, 4, 3, 2, 1]);
        assert!(zeta(&word, &[2, 4], &target).is_err());
        assert!(zeta(&word, &[4, 2], &p("632415")).is_err());
    }

    #[test]
    fn staircase_shape_is_required() {
        let lambda = Partition::new(vec![2, 2]).unwrap();
        let t = rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(t.shape().as_young(), Some(lambda));
        assert!(gamma(&t).is_err());
        assert!(gamma_star(&t).is_err());
    }
}
