//! Finite cell sets in matrix coordinates (1-based, row 1 on top):
//! Rothe diagrams, Young shapes, hooks and connected components.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Cell {
        Cell { row, col }
    }

    pub fn left(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn up(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    pub fn down(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn transpose(self) -> Cell {
        Cell::new(self.col, self.row)
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Cell {
        Cell::new(row, col)
    }
}

/// A weakly decreasing sequence of positive parts (zeros are dropped).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(invalid(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn staircase(m: usize) -> Partition {
        Partition {
            parts: (1..m).rev().collect(),
        }
    }

    pub fn nonzero_parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i`, 1-based, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `(m-1, …, 1)` form, returning `m`.
    pub fn staircase_order(&self) -> Option<usize> {
        let m = self.parts.len() + 1;
        (*self == Partition::staircase(m)).then_some(m)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// Every partition whose diagram fits inside a `rows × cols` box.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).unwrap());
            if prefix.len() == rows {
                return;
            }
            for p in 1..=max {
                prefix.push(p);
                rec(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Smallest staircase `(m-1, …, 1)` containing `λ`.
pub fn staircase_envelope(lambda: &Partition) -> Partition {
    let m = (1..=lambda.num_rows())
        .map(|i| lambda.part(i) + i)
        .max()
        .unwrap_or(1);
    Partition::staircase(m)
}

/// A set of cells inside an `n × n` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    ambient_n: usize,
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new(ambient_n: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Diagram> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if let Some(c) = cells
            .iter()
            .find(|c| c.row == 0 || c.col == 0 || c.row > ambient_n || c.col > ambient_n)
        {
            return Err(invalid(format!("cell {c} lies outside the {ambient_n}x{ambient_n} grid")));
        }
        Ok(Diagram { ambient_n, cells })
    }

    /// Builds a diagram from cells, sizing the grid to the smallest square
    /// that holds them.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Diagram {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        let ambient_n = cells.iter().map(|c| c.row.max(c.col)).max().unwrap_or(0);
        Diagram { ambient_n, cells }
    }

    /// `D(w)`: cells `(i, j)` with `j < w_i` and `w^{-1}(j) > i`.
    pub fn rothe(w: &Permutation) -> Diagram {
        let inv = w.inverse();
        let n = w.size();
        let cells = (1..=n)
            .flat_map(|i| (1..w.at(i)).map(move |j| Cell::new(i, j)))
            .filter(|c| inv.at(c.col) > c.row)
            .collect();
        Diagram { ambient_n: n, cells }
    }

    pub fn young(lambda: &Partition) -> Diagram {
        Diagram::from_cells(
            (1..=lambda.num_rows()).flat_map(|i| (1..=lambda.part(i)).map(move |j| Cell::new(i, j))),
        )
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
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

    pub fn same_cells(&self, other: &Diagram) -> bool {
        self.cells == other.cells
    }

    /// The partition `λ` if the cells are exactly the Young diagram of `λ`.
    pub fn as_young(&self) -> Option<Partition> {
        let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &self.cells {
            *rows.entry(c.row).or_default() += 1;
        }
        let mut parts = Vec::with_capacity(rows.len());
        for (expected, (&row, &count)) in (1..).zip(&rows) {
            if row != expected {
                return None;
            }
            parts.push(count);
        }
        let lambda = Partition::new(parts).ok()?;
        (Diagram::young(&lambda).cells == self.cells).then_some(lambda)
    }

    /// `H_{i,j}(D)`: the row arm right to left ending at `c`, then the
    /// column leg top to bottom. Gaps are skipped.
    pub fn hook(&self, c: Cell) -> Result<Vec<Cell>> {
        if !self.contains(c) {
            return Err(invalid(format!("cell {c} is not in the diagram")));
        }
        let mut hook: Vec<Cell> = self
            .cells
            .iter()
            .filter(|d| d.row == c.row && d.col >= c.col)
            .rev()
            .copied()
            .collect();
        hook.extend(self.cells.iter().filter(|d| d.col == c.col && d.row > c.row));
        Ok(hook)
    }

    /// Number of hook cells strictly right of `c`.
    pub fn arm(&self, c: Cell) -> usize {
        self.cells
            .iter()
            .filter(|d| d.row == c.row && d.col > c.col)
            .count()
    }

    /// Edge-connected components ordered by their minimal cell.
    pub fn connected_components(&self) -> Vec<Diagram> {
        let mut seen: BTreeSet<Cell> = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                component.insert(c);
                let neighbours = [c.left(), c.up(), Some(c.right()), Some(c.down())];
                for d in neighbours.into_iter().flatten() {
                    if self.contains(d) && seen.insert(d) {
                        queue.push_back(d);
                    }
                }
            }
            components.push(Diagram {
                ambient_n: self.ambient_n,
                cells: component,
            });
        }
        components
    }

    /// `D(w s_i)` from `D(w)` for an ascent `i`: add `(i, w_i)` and lift the
    /// row `i + 1` cells right of column `w_i` into row `i`.
    pub fn update_after_right_mult(&self, w: &Permutation, i: usize) -> Result<Diagram> {
        if i == 0 || i >= w.size() || w.at(i) > w.at(i + 1) {
            return Err(invalid(format!("{i} is not an ascent of {w}")));
        }
        let wi = w.at(i);
        let mut cells: BTreeSet<Cell> = self
            .cells
            .iter()
            .map(|&c| {
                if c.row == i + 1 && c.col > wi {
                    Cell::new(i, c.col)
                } else {
                    c
                }
            })
            .collect();
        cells.insert(Cell::new(i, wi));
        Ok(Diagram {
            ambient_n: self.ambient_n,
            cells,
        })
    }

    pub fn transpose(&self) -> Diagram {
        Diagram {
            ambient_n: self.ambient_n,
            cells: self.cells.iter().map(|c| c.transpose()).collect(),
        }
    }

    /// Translates so the bounding box starts at `(1, 1)`.
    pub fn normalized(&self) -> Diagram {
        let r0 = self.cells.iter().map(|c| c.row).min().unwrap_or(1);
        let c0 = self.cells.iter().map(|c| c.col).min().unwrap_or(1);
        Diagram::from_cells(
            self.cells
                .iter()
                .map(|c| Cell::new(c.row + 1 - r0, c.col + 1 - c0)),
        )
    }

    pub fn rows(&self) -> BTreeSet<usize> {
        self.cells.iter().map(|c| c.row).collect()
    }

    pub fn cols(&self) -> BTreeSet<usize> {
        self.cells.iter().map(|c| c.col).collect()
    }

    /// One grid row per line: `·` for a dot of `dots`, `□` for a cell and a
    /// space otherwise.
    pub fn render(&self, dots: Option<&Permutation>) -> String {
        let n = self.ambient_n.max(dots.map_or(0, |w| w.size()));
        let mut out = String::new();
        for i in 1..=n {
            for j in 1..=n {
                let ch = if dots.is_some_and(|w| w.at(i) == j) {
                    '·'
                } else if self.contains(Cell::new(i, j)) {
                    '□'
                } else {
                    ' '
                };
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> BTreeSet<Cell> {
        list.iter().map(|&c| c.into()).collect()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rothe_examples() {
        assert!(Diagram::rothe(&Permutation::identity(4)).is_empty());
        let d = Diagram::rothe(&p("426315"));
        assert_eq!(
            d.cells(),
            &cells(&[(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (3, 5), (4, 1)])
        );
        assert_eq!(Diagram::rothe(&p("2413")).cells(), &cells(&[(1, 1), (2, 1), (2, 3)]));
    }

    #[test]
    fn young_recognition() {
        assert_eq!(Diagram::from_cells([]).as_young(), Some(part(&[])));
        assert_eq!(Diagram::rothe(&p("642315")).as_young(), Some(part(&[5, 3, 1, 1])));
        assert_eq!(Diagram::rothe(&p("426315")).as_young(), None);
        // a shape not starting at row 1
        assert_eq!(Diagram::from_cells([Cell::new(2, 1)]).as_young(), None);
    }

    #[test]
    fn hooks() {
        let single = Diagram::from_cells([Cell::new(2, 3)]);
        assert_eq!(single.hook(Cell::new(2, 3)).unwrap(), vec![Cell::new(2, 3)]);
        let d = Diagram::rothe(&p("426315"));
        let h: Vec<(usize, usize)> = d
            .hook(Cell::new(1, 1))
            .unwrap()
            .iter()
            .map(|c| (c.row, c.col))
            .collect();
        assert_eq!(h, vec![(1, 3), (1, 2), (1, 1), (2, 1), (3, 1), (4, 1)]);
        let h: Vec<(usize, usize)> = d
            .hook(Cell::new(3, 1))
            .unwrap()
            .iter()
            .map(|c| (c.row, c.col))
            .collect();
        assert_eq!(h, vec![(3, 5), (3, 3), (3, 1), (4, 1)]);
        assert!(d.hook(Cell::new(2, 2)).is_err());
    }

    #[test]
    fn components() {
        assert!(Diagram::from_cells([]).connected_components().is_empty());
        let comps = Diagram::rothe(&p("2143")).connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].cells(), &cells(&[(1, 1)]));
        assert_eq!(comps[1].cells(), &cells(&[(3, 3)]));
        let comps = Diagram::rothe(&p("426315")).connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(
            comps[0].cells(),
            &cells(&[(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (4, 1)])
        );
        assert_eq!(comps[1].cells(), &cells(&[(3, 3)]));
        assert_eq!(comps[2].cells(), &cells(&[(3, 5)]));
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase_envelope(&part(&[1])), part(&[1]));
        assert_eq!(staircase_envelope(&part(&[5, 2, 1, 1])), part(&[5, 4, 3, 2, 1]));
        assert_eq!(staircase_envelope(&part(&[3, 3])), part(&[4, 3, 2, 1]));
        assert_eq!(staircase_envelope(&part(&[])), part(&[]));
        assert_eq!(part(&[3, 2, 1]).staircase_order(), Some(4));
        assert_eq!(part(&[3, 1]).staircase_order(), None);
    }

    #[test]
    fn right_multiplication_update() {
        let w = p("426315");
        let d = Diagram::rothe(&w).update_after_right_mult(&w, 2).unwrap();
        assert!(d.same_cells(&Diagram::rothe(&p("462315"))));
        let id = Permutation::identity(3);
        let d = Diagram::rothe(&id).update_after_right_mult(&id, 1).unwrap();
        assert_eq!(d.cells(), &cells(&[(1, 1)]));
        let w = p("246153");
        let d = Diagram::rothe(&w).update_after_right_mult(&w, 1).unwrap();
        assert!(d.same_cells(&Diagram::rothe(&p("426153"))));
        assert!(Diagram::rothe(&w).update_after_right_mult(&w, 3).is_err());
    }

    #[test]
    fn transposes() {
        assert!(Diagram::from_cells([]).transpose().is_empty());
        let delta = Diagram::young(&Partition::staircase(5));
        assert!(delta.transpose().same_cells(&delta));
        assert_eq!(
            Diagram::rothe(&p("2413")).transpose().cells(),
            &cells(&[(1, 1), (1, 2), (3, 2)])
        );
    }

    #[test]
    fn render_matches_dot_rule() {
        let text = Diagram::rothe(&p("2413")).render(Some(&p("2413")));
        assert_eq!(text, "□·  \n□ □·\n·   \n  · \n");
    }

    #[test]
    fn partitions_in_box() {
        // C(4+4, 4) partitions fit in a 4x4 box
        assert_eq!(Partition::all_in_box(4, 4).len(), 70);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }
}
