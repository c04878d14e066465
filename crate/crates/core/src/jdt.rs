//! Jeu de taquin slides on arbitrary cell sets, promotion and
//! dual-promotion.
//!
//! A slide moves a single vacancy through the filling. Neighbours are the
//! cells currently present in the shape, so slides also run inside Rothe
//! diagrams that are not skew shapes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::Cell;
use crate::error::{invalid, violation, Result};
use crate::tableau::Tableau;

/// The cells visited by the vacancy, starting with the initial one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JdtPath {
    pub cells: Vec<Cell>,
}

impl JdtPath {
    pub fn first(&self) -> Cell {
        self.cells[0]
    }

    pub fn last(&self) -> Cell {
        *self.cells.last().expect("paths are never empty")
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }
}

impl fmt::Display for JdtPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" -> "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlideDirection {
    /// Vacancy moves left/up, pulling in the larger neighbour.
    Outward,
    /// Vacancy moves right/down, pulling in the smaller neighbour.
    Inward,
}

fn next_source(labels: &BTreeMap<Cell, u32>, empty: Cell, dir: SlideDirection) -> Option<Cell> {
    let (a, b) = match dir {
        SlideDirection::Outward => (empty.left(), empty.up()),
        SlideDirection::Inward => (Some(empty.right()), Some(empty.down())),
    };
    let a = a.and_then(|c| labels.get(&c).map(|&v| (c, v)));
    let b = b.and_then(|c| labels.get(&c).map(|&v| (c, v)));
    match (a, b) {
        (None, None) => None,
        (Some((c, _)), None) | (None, Some((c, _))) => Some(c),
        (Some((ca, va)), Some((cb, vb))) => Some(match dir {
            SlideDirection::Outward => {
                if va > vb {
                    ca
                } else {
                    cb
                }
            }
            SlideDirection::Inward => {
                if va < vb {
                    ca
                } else {
                    cb
                }
            }
        }),
    }
}

pub(crate) fn run_slide(
    labels: &mut BTreeMap<Cell, u32>,
    start: Cell,
    dir: SlideDirection,
    mut observe: impl FnMut(&BTreeMap<Cell, u32>),
) -> JdtPath {
    let mut empty = start;
    let mut cells = vec![start];
    observe(labels);
    while let Some(src) = next_source(labels, empty, dir) {
        let v = labels.remove(&src).expect("source is present");
        labels.insert(empty, v);
        empty = src;
        cells.push(src);
        observe(labels);
    }
    JdtPath { cells }
}

fn check_start(t: &Tableau, c: Cell) -> Result<()> {
    if t.get(c).is_some() {
        return Err(invalid(format!("slide start {c} is occupied")));
    }
    if c.row == 0 || c.col == 0 {
        return Err(invalid(format!("slide start {c} is not 1-based")));
    }
    if !t.is_empty() && !t.labels().keys().any(|&d| d.is_adjacent(c)) {
        return Err(invalid(format!("slide start {c} touches no cell of the shape")));
    }
    Ok(())
}

/// Slides the vacancy at `c` until no neighbour on the slide side remains.
/// The returned filling occupies `c` and vacates the last path cell.
pub fn slide(t: &Tableau, c: Cell, dir: SlideDirection) -> Result<(Tableau, JdtPath)> {
    check_start(t, c)?;
    let mut labels = t.labels().clone();
    let path = run_slide(&mut labels, c, dir, |_| {});
    Ok((Tableau::from_map(labels), path))
}

pub fn outward_slide(t: &Tableau, c: Cell) -> Result<(Tableau, JdtPath)> {
    slide(t, c, SlideDirection::Outward)
}

pub fn inward_slide(t: &Tableau, c: Cell) -> Result<(Tableau, JdtPath)> {
    slide(t, c, SlideDirection::Inward)
}

/// Every intermediate filling of a slide (vacancy excluded), starting
/// with the input and ending with the result.
pub fn slide_states(t: &Tableau, c: Cell, dir: SlideDirection) -> Result<Vec<Tableau>> {
    check_start(t, c)?;
    let mut labels = t.labels().clone();
    let mut states = Vec::new();
    run_slide(&mut labels, c, dir, |l| states.push(Tableau::from_map(l.clone())));
    Ok(states)
}

/// One application of promotion or dual-promotion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromotionStep {
    pub tableau: Tableau,
    /// Deleted cell for promotion, last path cell for dual-promotion.
    pub cell: Cell,
    pub path: JdtPath,
}

fn check_young_standard(t: &Tableau) -> Result<()> {
    if t.is_empty() {
        return Err(invalid("promotion needs a non-empty tableau"));
    }
    if t.shape().as_young().is_none() {
        return Err(invalid(format!("{t} does not have a Young shape")));
    }
    if !t.is_standard()? {
        return Err(invalid(format!("{t} is not standard")));
    }
    Ok(())
}

/// `∂`: delete `n`, slide outward to `(1,1)`, fill it with 0, add 1.
pub fn promotion_step(t: &Tableau) -> Result<PromotionStep> {
    check_young_standard(t)?;
    let n = t.len() as u32;
    let deleted = t.cell_of(n).expect("bijective labels");
    let mut labels = t.labels().clone();
    labels.remove(&deleted);
    let path = run_slide(&mut labels, deleted, SlideDirection::Outward, |_| {});
    if path.last() != Cell::new(1, 1) {
        return Err(violation(format!(
            "outward slide from {deleted} ended at {} instead of (1,1)",
            path.last()
        )));
    }
    for v in labels.values_mut() {
        *v += 1;
    }
    labels.insert(Cell::new(1, 1), 1);
    Ok(PromotionStep {
        tableau: Tableau::from_map(labels),
        cell: deleted,
        path,
    })
}

/// `∂*`: delete 1, slide inward, put `n + 1` in the final vacancy,
/// subtract 1.
pub fn dual_promotion_step(t: &Tableau) -> Result<PromotionStep> {
    check_young_standard(t)?;
    let n = t.len() as u32;
    let start = t.cell_of(1).expect("bijective labels");
    let mut labels = t.labels().clone();
    labels.remove(&start);
    let path = run_slide(&mut labels, start, SlideDirection::Inward, |_| {});
    for v in labels.values_mut() {
        *v -= 1;
    }
    labels.insert(path.last(), n);
    Ok(PromotionStep {
        tableau: Tableau::from_map(labels),
        cell: path.last(),
        path,
    })
}

pub fn promotion(t: &Tableau) -> Result<(Tableau, Cell)> {
    promotion_step(t).map(|s| (s.tableau, s.cell))
}

pub fn dual_promotion(t: &Tableau) -> Result<(Tableau, Cell)> {
    dual_promotion_step(t).map(|s| (s.tableau, s.cell))
}

/// `k` successive promotions (or dual-promotions), recording each step.
pub fn iterate_promotion(t: &Tableau, k: usize, dual: bool) -> Result<Vec<PromotionStep>> {
    let mut steps: Vec<PromotionStep> = Vec::with_capacity(k);
    for _ in 0..k {
        let current = steps.last().map_or(t, |s| &s.tableau);
        let step = if dual {
            dual_promotion_step(current)?
        } else {
            promotion_step(current)?
        };
        steps.push(step);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn c(r: usize, col: usize) -> Cell {
        Cell::new(r, col)
    }

    fn rows(r: &[&[u32]]) -> Tableau {
        Tableau::from_rows(r)
    }

    #[test]
    fn single_cell_slides() {
        let t = rows(&[&[1]]);
        let (out, path) = outward_slide(&t, c(1, 2)).unwrap();
        assert_eq!(out, Tableau::from_cells([(c(1, 2), 1)]).unwrap());
        assert_eq!(path.cells, vec![c(1, 2), c(1, 1)]);

        let (out, path) = inward_slide(&Tableau::empty(), c(1, 1)).unwrap();
        assert!(out.is_empty());
        assert_eq!(path.cells, vec![c(1, 1)]);
    }

    #[test]
    fn promotion_outward_path() {
        let t = rows(&[&[1, 3, 4], &[2, 5, 9], &[6, 8], &[7]]);
        let (_, path) = outward_slide(&t, c(3, 3)).unwrap();
        assert_eq!(path.cells, vec![c(3, 3), c(2, 3), c(2, 2), c(1, 2), c(1, 1)]);
    }

    #[test]
    fn dual_promotion_inward_path_and_round_trip() {
        let full = rows(&[&[1, 2, 5], &[3, 4, 6], &[7, 9, 10], &[8]]);
        let mut labels = full.labels().clone();
        labels.remove(&c(1, 1));
        let t = Tableau::from_map(labels);
        let (out, path) = inward_slide(&t, c(1, 1)).unwrap();
        assert_eq!(path.cells, vec![c(1, 1), c(1, 2), c(2, 2), c(2, 3), c(3, 3)]);
        let (back, back_path) = outward_slide(&out, c(3, 3)).unwrap();
        assert_eq!(back, t);
        let mut reversed = back_path.cells.clone();
        reversed.reverse();
        assert_eq!(reversed, path.cells);
    }

    #[test]
    fn promotion_example() {
        let t = rows(&[&[1, 3, 4], &[2, 5, 9], &[6, 8, 10], &[7]]);
        let (p, deleted) = promotion(&t).unwrap();
        assert_eq!(p, rows(&[&[1, 2, 5], &[3, 4, 6], &[7, 9, 10], &[8]]));
        assert_eq!(deleted, c(3, 3));
        // dual promotion undoes the promotion above
        let (d, last) = dual_promotion(&p).unwrap();
        assert_eq!(d, t);
        assert_eq!(last, c(3, 3));
        assert_eq!(promotion(&d).unwrap().0, p);
    }

    #[test]
    fn single_cell_promotions() {
        let t = rows(&[&[1]]);
        assert_eq!(promotion(&t).unwrap(), (t.clone(), c(1, 1)));
        assert_eq!(dual_promotion(&t).unwrap(), (t.clone(), c(1, 1)));
    }

    #[test]
    fn promotion_rejects_bad_input() {
        let skew = Tableau::from_cells([(c(1, 2), 1)]).unwrap();
        assert!(matches!(promotion(&skew), Err(Error::InvalidInput(_))));
        assert!(matches!(promotion(&Tableau::empty()), Err(Error::InvalidInput(_))));
        assert!(matches!(dual_promotion(&rows(&[&[2, 1]])), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn slide_start_validation() {
        let t = rows(&[&[1, 2]]);
        assert!(outward_slide(&t, c(1, 2)).is_err());
        assert!(outward_slide(&t, c(3, 3)).is_err());
    }

    #[test]
    fn intermediate_states_stay_standard() {
        let t = rows(&[&[1, 3, 4], &[2, 5, 9], &[6, 8], &[7]]);
        let states = slide_states(&t, c(3, 3), SlideDirection::Outward).unwrap();
        assert_eq!(states.len(), 5);
        for s in &states {
            assert!(s.increases_along_rows_and_columns(), "{s}");
        }
    }
}
