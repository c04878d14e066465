//! Fillings of diagrams: standard and balanced labellings, their
//! enumeration, hook-length counting and the tableau wire format.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, Diagram, Partition};
use crate::error::{invalid, Error, Result};
use crate::perm::Permutation;

/// A labelling of a finite cell set by integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau {
    labels: BTreeMap<Cell, u32>,
}

impl Tableau {
    pub fn empty() -> Tableau {
        Tableau::default()
    }

    pub fn from_cells(entries: impl IntoIterator<Item = (Cell, u32)>) -> Result<Tableau> {
        let mut labels = BTreeMap::new();
        for (c, v) in entries {
            if c.row == 0 || c.col == 0 {
                return Err(invalid(format!("cell {c} is not 1-based")));
            }
            if labels.insert(c, v).is_some() {
                return Err(invalid(format!("cell {c} is labelled twice")));
            }
        }
        Ok(Tableau { labels })
    }

    pub(crate) fn from_map(labels: BTreeMap<Cell, u32>) -> Tableau {
        Tableau { labels }
    }

    /// Left-justified rows starting at `(1, 1)`.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Tableau {
        let labels = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.as_ref()
                    .iter()
                    .enumerate()
                    .map(move |(j, &v)| (Cell::new(i + 1, j + 1), v))
            })
            .collect();
        Tableau { labels }
    }

    /// Parses `"1,3,6/2/4,.,7,.,8/5"`: rows separated by `/`, entries by
    /// commas or spaces, `.` marking a column with no cell. The `i`-th row
    /// is row `i`, so an empty row leaves a gap row.
    pub fn parse_rows(s: &str) -> Result<Tableau> {
        let mut entries = Vec::new();
        for (i, row) in s.trim().split('/').enumerate() {
            let tokens = row
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty());
            for (j, t) in tokens.enumerate() {
                if t == "." || t == "·" {
                    continue;
                }
                let v = t
                    .parse::<u32>()
                    .map_err(|_| invalid(format!("bad tableau entry {t:?}")))?;
                entries.push((Cell::new(i + 1, j + 1), v));
            }
        }
        Tableau::from_cells(entries)
    }

    pub fn labels(&self) -> &BTreeMap<Cell, u32> {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.labels.get(&c).copied()
    }

    pub fn cell_of(&self, label: u32) -> Option<Cell> {
        self.labels
            .iter()
            .find_map(|(&c, &v)| (v == label).then_some(c))
    }

    pub fn shape(&self) -> Diagram {
        Diagram::from_cells(self.labels.keys().copied())
    }

    pub fn has_shape(&self, d: &Diagram) -> bool {
        self.labels.len() == d.len() && self.labels.keys().all(|&c| d.contains(c))
    }

    /// Fails unless the labels are exactly `1..=len`.
    pub fn check_bijective(&self) -> Result<()> {
        let n = self.labels.len();
        let mut seen = vec![false; n + 1];
        for &v in self.labels.values() {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(invalid(format!(
                    "labels are not a bijection onto 1..={n} (saw {v})"
                )));
            }
            seen[v] = true;
        }
        Ok(())
    }

    /// Rows increase left to right and columns top to bottom, comparing
    /// consecutive cells of the shape across gaps.
    pub fn is_standard(&self) -> Result<bool> {
        self.check_bijective()?;
        Ok(self.increases_along_rows_and_columns())
    }

    pub(crate) fn increases_along_rows_and_columns(&self) -> bool {
        let mut last_in_col: HashMap<usize, u32> = HashMap::new();
        let mut prev: Option<(Cell, u32)> = None;
        // BTreeMap order is row-major, so each row is visited left to right
        // and each column top to bottom.
        for (&c, &v) in &self.labels {
            if let Some((pc, pv)) = prev {
                if pc.row == c.row && pv >= v {
                    return false;
                }
            }
            if let Some(&above) = last_in_col.get(&c.col) {
                if above >= v {
                    return false;
                }
            }
            last_in_col.insert(c.col, v);
            prev = Some((c, v));
        }
        true
    }

    /// Every cell's label is the `(a+1)`-th smallest in its hook, where `a`
    /// counts the hook cells strictly right of it.
    pub fn is_balanced(&self) -> Result<bool> {
        self.check_bijective()?;
        let shape = self.shape();
        for (&c, &v) in &self.labels {
            let hook = shape.hook(c)?;
            let smaller = hook.iter().filter(|&&d| self.labels[&d] < v).count();
            if smaller != shape.arm(c) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn transpose(&self) -> Tableau {
        Tableau {
            labels: self.labels.iter().map(|(c, &v)| (c.transpose(), v)).collect(),
        }
    }

    pub fn map_labels(&self, f: impl Fn(u32) -> u32) -> Tableau {
        Tableau {
            labels: self.labels.iter().map(|(&c, &v)| (c, f(v))).collect(),
        }
    }

    /// Row lists for a left-justified shape; `None` marks gaps.
    pub fn grid_rows(&self) -> Vec<Vec<Option<u32>>> {
        let rows = self.labels.keys().map(|c| c.row).max().unwrap_or(0);
        let mut grid = vec![Vec::new(); rows];
        for (&c, &v) in &self.labels {
            let row = &mut grid[c.row - 1];
            if row.len() < c.col {
                row.resize(c.col, None);
            }
            row[c.col - 1] = Some(v);
        }
        grid
    }

    /// Entries of each row, ignoring columns.
    pub fn row_entries(&self) -> Vec<Vec<u32>> {
        self.grid_rows()
            .into_iter()
            .map(|r| r.into_iter().flatten().collect())
            .collect()
    }

    pub fn render(&self) -> String {
        let width = self
            .labels
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in self.grid_rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|v| match v {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_doc(&self, n: Option<usize>, perm: Option<&Permutation>) -> TableauDoc {
        let extent = self
            .labels
            .keys()
            .map(|c| c.row.max(c.col))
            .max()
            .unwrap_or(0);
        let n = n.or(perm.map(|w| w.size())).unwrap_or(extent);
        TableauDoc {
            n,
            perm: perm.map(|w| w.word().to_vec()),
            cells: self
                .labels
                .iter()
                .map(|(c, &v)| [c.row, c.col, v as usize])
                .collect(),
        }
    }

    pub fn to_json(&self, perm: Option<&Permutation>) -> String {
        serde_json::to_string(&self.to_doc(None, perm)).expect("tableau serialises")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .grid_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.map_or(".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}

/// Serialized tableau: `{"n":…,"perm":[…],"cells":[[row,col,entry],…]}`
/// with cells in row-major order. `perm` is omitted when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    pub cells: Vec<[usize; 3]>,
}

impl TableauDoc {
    pub fn parse(json: &str) -> Result<TableauDoc> {
        serde_json::from_str(json).map_err(|e| invalid(format!("bad tableau document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serialises")
    }

    pub fn permutation(&self) -> Result<Option<Permutation>> {
        match &self.perm {
            None => Ok(None),
            Some(word) => {
                let w = Permutation::new(word.clone())?;
                if w.size() != self.n {
                    return Err(invalid(format!("perm has size {} but n = {}", w.size(), self.n)));
                }
                Ok(Some(w))
            }
        }
    }

    pub fn tableau(&self) -> Result<Tableau> {
        let mut entries = Vec::with_capacity(self.cells.len());
        for &[row, col, v] in &self.cells {
            if row == 0 || col == 0 || row > self.n || col > self.n {
                return Err(invalid(format!("cell ({row},{col}) lies outside n = {}", self.n)));
            }
            let v = u32::try_from(v).map_err(|_| invalid(format!("entry {v} too large")))?;
            entries.push((Cell::new(row, col), v));
        }
        Tableau::from_cells(entries)
    }
}

/// Nearest cell left in the same row and nearest cell above in the same
/// column, as indices into the row-major cell list.
fn predecessor_indices(cells: &[Cell]) -> Vec<Vec<usize>> {
    cells
        .iter()
        .map(|&c| {
            let left = cells
                .iter()
                .enumerate()
                .filter(|(_, d)| d.row == c.row && d.col < c.col)
                .max_by_key(|(_, d)| d.col)
                .map(|(i, _)| i);
            let up = cells
                .iter()
                .enumerate()
                .filter(|(_, d)| d.col == c.col && d.row < c.row)
                .max_by_key(|(_, d)| d.row)
                .map(|(i, _)| i);
            left.into_iter().chain(up).collect()
        })
        .collect()
}

/// Standard fillings of `shape`, assigning `1, 2, …` in turn to the
/// row-major first available cell whose row and column predecessors are
/// already labelled.
pub fn standard_fillings(shape: &Diagram, cap: usize) -> Result<Vec<Tableau>> {
    let cells: Vec<Cell> = shape.cells().iter().copied().collect();
    let preds = predecessor_indices(&cells);
    let mut labels = vec![0u32; cells.len()];
    let mut out = Vec::new();
    fill_standard(&cells, &preds, &mut labels, 1, cap, &mut out)?;
    Ok(out)
}

fn fill_standard(
    cells: &[Cell],
    preds: &[Vec<usize>],
    labels: &mut [u32],
    next: u32,
    cap: usize,
    out: &mut Vec<Tableau>,
) -> Result<()> {
    if next as usize > cells.len() {
        if out.len() == cap {
            return Err(Error::ResourceCap(format!(
                "more than {cap} standard fillings"
            )));
        }
        out.push(Tableau {
            labels: cells.iter().copied().zip(labels.iter().copied()).collect(),
        });
        return Ok(());
    }
    for k in 0..cells.len() {
        if labels[k] == 0 && preds[k].iter().all(|&p| labels[p] != 0) {
            labels[k] = next;
            fill_standard(cells, preds, labels, next + 1, cap, out)?;
            labels[k] = 0;
        }
    }
    Ok(())
}

/// Number of standard fillings of `shape`, by memoized counting over the
/// sets of already-labelled cells.
pub fn count_standard_fillings(shape: &Diagram) -> BigUint {
    let cells: Vec<Cell> = shape.cells().iter().copied().collect();
    assert!(cells.len() <= 64, "diagrams above 64 cells are not supported");
    let pred_masks: Vec<u64> = predecessor_indices(&cells)
        .iter()
        .map(|ps| ps.iter().fold(0u64, |m, &p| m | (1 << p)))
        .collect();
    let full = if cells.len() == 64 {
        u64::MAX
    } else {
        (1u64 << cells.len()) - 1
    };
    let mut memo: HashMap<u64, BigUint> = HashMap::new();
    count_ideals(0, full, &pred_masks, &mut memo)
}

fn count_ideals(filled: u64, full: u64, preds: &[u64], memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if filled == full {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&filled) {
        return c.clone();
    }
    let mut total = BigUint::default();
    for (k, &pm) in preds.iter().enumerate() {
        let bit = 1u64 << k;
        if filled & bit == 0 && pm & filled == pm {
            total += count_ideals(filled | bit, full, preds, memo);
        }
    }
    memo.insert(filled, total.clone());
    total
}

pub fn enumerate_srt(w: &Permutation, cap: usize) -> Result<Vec<Tableau>> {
    standard_fillings(&Diagram::rothe(w), cap)
}

pub fn count_srt(w: &Permutation) -> BigUint {
    count_standard_fillings(&Diagram::rothe(w))
}

/// Default largest `ℓ(w)` for which balanced fillings are brute-forced.
pub const DEFAULT_BRT_CAP_LENGTH: usize = 10;

/// Balanced fillings of `shape`, by backtracking over bijective fillings
/// in row-major cell order. A hook is tested as soon as its last cell is
/// filled, which rejects exactly the fillings the final test would.
pub fn balanced_fillings(shape: &Diagram, cap_length: usize) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    balanced_search(shape, cap_length, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

pub fn count_balanced_fillings(shape: &Diagram, cap_length: usize) -> Result<BigUint> {
    let mut count = 0u64;
    balanced_search(shape, cap_length, &mut |_| count += 1)?;
    Ok(BigUint::from(count))
}

struct HookCheck {
    corner: usize,
    members: Vec<usize>,
    arm: usize,
}

fn balanced_search(shape: &Diagram, cap_length: usize, visit: &mut dyn FnMut(&Tableau)) -> Result<()> {
    let cells: Vec<Cell> = shape.cells().iter().copied().collect();
    if cells.len() > cap_length {
        return Err(Error::ResourceCap(format!(
            "{} cells exceeds the balanced-filling cap of {cap_length}",
            cells.len()
        )));
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // checks_at[k]: hooks whose last row-major cell is k
    let mut checks_at: Vec<Vec<HookCheck>> = (0..cells.len()).map(|_| Vec::new()).collect();
    for (k, &c) in cells.iter().enumerate() {
        let members: Vec<usize> = shape.hook(c)?.iter().map(|d| index[d]).collect();
        let last = *members.iter().max().unwrap();
        checks_at[last].push(HookCheck {
            corner: k,
            members,
            arm: shape.arm(c),
        });
    }
    let mut labels = vec![0u32; cells.len()];
    let mut used = vec![false; cells.len() + 1];
    balanced_rec(&cells, &checks_at, &mut labels, &mut used, 0, visit);
    Ok(())
}

fn balanced_rec(
    cells: &[Cell],
    checks_at: &[Vec<HookCheck>],
    labels: &mut [u32],
    used: &mut [bool],
    k: usize,
    visit: &mut dyn FnMut(&Tableau),
) {
    if k == cells.len() {
        let t = Tableau {
            labels: cells.iter().copied().zip(labels.iter().copied()).collect(),
        };
        visit(&t);
        return;
    }
    for v in 1..=cells.len() {
        if used[v] {
            continue;
        }
        labels[k] = v as u32;
        let ok = checks_at[k].iter().all(|h| {
            let corner = labels[h.corner];
            h.members.iter().filter(|&&m| labels[m] < corner).count() == h.arm
        });
        if ok {
            used[v] = true;
            balanced_rec(cells, checks_at, labels, used, k + 1, visit);
            used[v] = false;
        }
    }
    labels[k] = 0;
}

pub fn enumerate_brt(w: &Permutation, cap_length: usize) -> Result<Vec<Tableau>> {
    balanced_fillings(&Diagram::rothe(w), cap_length)
}

pub fn count_brt(w: &Permutation, cap_length: usize) -> Result<BigUint> {
    count_balanced_fillings(&Diagram::rothe(w), cap_length)
}

/// `f^λ = |λ|! / ∏ hook lengths`.
pub fn hook_length_count(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut numerator = BigUint::one();
    for k in 2..=lambda.size() {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::one();
    for i in 1..=lambda.num_rows() {
        for j in 1..=lambda.part(i) {
            let hook = (lambda.part(i) - j) + (conj.part(j) - i) + 1;
            denominator *= BigUint::from(hook);
        }
    }
    numerator / denominator
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(r: usize, col: usize) -> Cell {
        Cell::new(r, col)
    }

    fn srt_426315() -> Tableau {
        Tableau::from_cells([
            (c(1, 1), 1),
            (c(2, 1), 2),
            (c(3, 1), 4),
            (c(4, 1), 5),
            (c(1, 2), 3),
            (c(1, 3), 6),
            (c(3, 3), 7),
            (c(3, 5), 8),
        ])
        .unwrap()
    }

    fn brt_426315() -> Tableau {
        Tableau::from_cells([
            (c(1, 1), 3),
            (c(1, 2), 4),
            (c(1, 3), 2),
            (c(2, 1), 1),
            (c(3, 1), 7),
            (c(3, 3), 8),
            (c(3, 5), 6),
            (c(4, 1), 5),
        ])
        .unwrap()
    }

    /// Sort the hook labels, lay them back along the hook order and check
    /// that every corner keeps its label.
    fn balanced_by_resorting(t: &Tableau) -> bool {
        let shape = t.shape();
        t.labels().iter().all(|(&cell, &v)| {
            let hook = shape.hook(cell).unwrap();
            let mut sorted: Vec<u32> = hook.iter().map(|d| t.get(*d).unwrap()).collect();
            sorted.sort_unstable();
            let at = hook.iter().position(|&d| d == cell).unwrap();
            sorted[at] == v
        })
    }

    fn all_fillings(shape: &Diagram) -> Vec<Tableau> {
        let cells: Vec<Cell> = shape.cells().iter().copied().collect();
        let mut labels: Vec<u32> = (1..=cells.len() as u32).collect();
        let mut out = Vec::new();
        heap_permute(&mut labels, cells.len(), &mut |ls| {
            out.push(Tableau::from_cells(cells.iter().copied().zip(ls.iter().copied())).unwrap());
        });
        out
    }

    fn heap_permute(a: &mut [u32], k: usize, f: &mut dyn FnMut(&[u32])) {
        if k <= 1 {
            f(a);
            return;
        }
        for i in 0..k {
            heap_permute(a, k - 1, f);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }

    #[test]
    fn standardness() {
        let t = srt_426315();
        assert!(t.is_standard().unwrap());
        // exchanging the labels of (1,2) and (2,1) keeps every row and column increasing
        let mut swapped = t.labels().clone();
        swapped.insert(c(1, 2), 2);
        swapped.insert(c(2, 1), 3);
        assert!(Tableau::from_map(swapped).is_standard().unwrap());
        let mut swapped = t.labels().clone();
        swapped.insert(c(1, 1), 2);
        swapped.insert(c(2, 1), 1);
        assert!(!Tableau::from_map(swapped).is_standard().unwrap());
        assert!(Tableau::from_rows(&[[1]]).is_standard().unwrap());
        assert!(Tableau::from_rows(&[[1, 1]]).is_standard().is_err());
    }

    #[test]
    fn balance() {
        assert!(brt_426315().is_balanced().unwrap());
        assert!(!srt_426315().is_balanced().unwrap());
        assert!(Tableau::from_rows(&[[1]]).is_balanced().unwrap());
        assert!(Tableau::from_rows(&[[0]]).is_balanced().is_err());
    }

    #[test]
    fn balance_characterisations_agree_on_s4() {
        for w in Permutation::all(4) {
            for t in all_fillings(&Diagram::rothe(&w)) {
                assert_eq!(t.is_balanced().unwrap(), balanced_by_resorting(&t), "{w} {t}");
            }
        }
    }

    #[test]
    fn srt_examples() {
        let id = Permutation::identity(3);
        let srt = enumerate_srt(&id, 10).unwrap();
        assert_eq!(srt, vec![Tableau::empty()]);
        assert_eq!(count_srt(&id), BigUint::one());
        let srt = enumerate_srt(&p("2413"), 10).unwrap();
        assert_eq!(
            srt,
            vec![Tableau::from_cells([(c(1, 1), 1), (c(2, 1), 2), (c(2, 3), 3)]).unwrap()]
        );
        assert_eq!(count_srt(&p("4321")), BigUint::from(16u32));
        assert_eq!(enumerate_srt(&p("4321"), 100).unwrap().len(), 16);
        assert!(matches!(enumerate_srt(&p("4321"), 15), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn srt_count_matches_brute_force() {
        for n in 1..=5 {
            for w in Permutation::all(n).filter(|w| w.length() <= 7) {
                let shape = Diagram::rothe(&w);
                let brute = all_fillings(&shape)
                    .iter()
                    .filter(|t| t.is_standard().unwrap())
                    .count();
                assert_eq!(count_srt(&w), BigUint::from(brute), "{w}");
                assert_eq!(enumerate_srt(&w, usize::MAX).unwrap().len(), brute);
            }
        }
    }

    #[test]
    fn brt_examples() {
        assert_eq!(count_brt(&Permutation::identity(2), 10).unwrap(), BigUint::one());
        let brt = enumerate_brt(&p("2413"), 10).unwrap();
        assert_eq!(brt.len(), 2);
        assert!(brt.iter().all(|t| t.get(c(2, 1)) == Some(3)));
        assert_eq!(count_brt(&p("321"), 10).unwrap(), BigUint::from(2u32));
        assert!(matches!(count_brt(&p("4321"), 5), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn brt_pruning_matches_final_test() {
        for w in Permutation::all(4) {
            let shape = Diagram::rothe(&w);
            let brute: Vec<Tableau> = {
                let mut v: Vec<Tableau> = all_fillings(&shape)
                    .into_iter()
                    .filter(balanced_by_resorting)
                    .collect();
                v.sort_by_key(|t| t.labels().values().copied().collect::<Vec<_>>());
                v
            };
            let mut found = enumerate_brt(&w, 10).unwrap();
            found.sort_by_key(|t| t.labels().values().copied().collect::<Vec<_>>());
            assert_eq!(found, brute, "{w}");
        }
    }

    #[test]
    fn hook_lengths() {
        let part = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(hook_length_count(&part(&[1])), BigUint::one());
        assert_eq!(hook_length_count(&part(&[3, 2, 1])), BigUint::from(16u32));
        assert_eq!(hook_length_count(&part(&[3, 1, 1])), BigUint::from(6u32));
        assert_eq!(hook_length_count(&part(&[])), BigUint::one());
        assert_eq!(hook_length_count(&part(&[4, 3, 2, 1])), BigUint::from(768u32));
    }

    #[test]
    fn transposition() {
        assert_eq!(Tableau::empty().transpose(), Tableau::empty());
        let t = Tableau::from_rows(&[vec![1, 2], vec![3]]);
        assert_eq!(t.transpose(), Tableau::from_rows(&[vec![1, 3], vec![2]]));
        let staircase_5 = Tableau::from_rows(&[vec![1, 3, 5, 6], vec![2, 4, 10], vec![7, 8], vec![9]]);
        assert_eq!(staircase_5.transpose().transpose(), staircase_5);
    }

    #[test]
    fn wire_format() {
        let t = Tableau::from_cells([(c(1, 1), 1), (c(2, 1), 2), (c(2, 3), 3)]).unwrap();
        let json = t.to_json(Some(&p("2413")));
        assert_eq!(json, r#"{"n":4,"perm":[2,4,1,3],"cells":[[1,1,1],[2,1,2],[2,3,3]]}"#);
        let doc = TableauDoc::parse(&json).unwrap();
        assert_eq!(doc.tableau().unwrap(), t);
        assert_eq!(doc.permutation().unwrap(), Some(p("2413")));
        let bare = Tableau::from_rows(&[[1, 2]]).to_json(None);
        assert_eq!(bare, r#"{"n":2,"cells":[[1,1,1],[1,2,2]]}"#);
        assert!(TableauDoc::parse(r#"{"n":1,"cells":[[2,1,1]]}"#)
            .unwrap()
            .tableau()
            .is_err());
    }

    #[test]
    fn row_parsing_and_rendering() {
        let gapped = Tableau::parse_rows("1,3,6/2/4,.,7,.,8/5").unwrap();
        assert_eq!(Tableau::parse_rows(&gapped.to_string()).unwrap(), gapped);
        assert_eq!(gapped.get(Cell::new(3, 5)), Some(8));
        assert!(Tableau::parse_rows("1,x").is_err());
        let t = Tableau::parse_rows("1,3,4/2,5,9/6,8,10/7").unwrap();
        assert_eq!(t.row_entries(), vec![vec![1, 3, 4], vec![2, 5, 9], vec![6, 8, 10], vec![7]]);
        assert_eq!(t.to_string(), "1,3,4/2,5,9/6,8,10/7");
        assert_eq!(srt_426315().render(), "1 3 6\n2\n4 . 7 . 8\n5\n");
    }
}
