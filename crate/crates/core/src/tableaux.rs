//! Semistandard Young tableaux with bounded entries.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Frame, FramedPartition, Partition};

/// A semistandard filling of a Young diagram: rows weakly increase to the
/// east, columns strictly increase to the south, entries lie in
/// `1..=max_entry`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssyt {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    max_entry: u32,
}

/// Checks the semistandard conditions for `rows` on `shape`.
///
/// Returns an error when the row lengths do not match the shape, and
/// `Ok(false)` when they match but a condition fails.
pub fn is_semistandard(shape: &Partition, rows: &[Vec<u32>], max_entry: u32) -> Result<bool> {
    if rows.len() != shape.length()
        || rows
            .iter()
            .zip(shape.parts())
            .any(|(r, &p)| r.len() != p as usize)
    {
        return Err(Error::ShapeMismatch(format!(
            "row lengths {:?} do not match shape ({shape})",
            rows.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    let in_range = rows.iter().flatten().all(|&e| (1..=max_entry).contains(&e));
    let rows_weak = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_strict = rows.windows(2).all(|pair| {
        pair[1]
            .iter()
            .zip(&pair[0])
            .all(|(below, above)| below > above)
    });
    Ok(in_range && rows_weak && cols_strict)
}

impl Ssyt {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>, max_entry: u32) -> Result<Self> {
        if !is_semistandard(&shape, &rows, max_entry)? {
            return Err(Error::NotSemistandard);
        }
        Ok(Self {
            shape,
            rows,
            max_entry,
        })
    }

    /// The tableau of shape `shape` with every box of row `i` filled by `i`.
    pub fn minimal(shape: Partition, max_entry: u32) -> Result<Self> {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| vec![i as u32 + 1; p as usize])
            .collect();
        Self::new(shape, rows, max_entry)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    /// Sum of all entries.
    pub fn weight(&self) -> u64 {
        self.rows.iter().flatten().map(|&e| e as u64).sum()
    }

    pub fn columns(&self) -> ColumnWord {
        let cols = (1..=self.shape.width())
            .map(|j| {
                (0..self.shape.col_len(j) as usize)
                    .map(|i| self.rows[i][j as usize - 1])
                    .collect()
            })
            .collect();
        ColumnWord(cols)
    }

    /// King's column complement. Column `j` of the result holds, in
    /// increasing order, the values of `1..=r` missing from column `c + 1 - j`
    /// of `self`; its shape is the complement of `self.shape()` in the frame.
    pub fn king_complement(&self, frame: Frame) -> Result<Ssyt> {
        if self.max_entry != frame.rows() {
            return Err(Error::EntryBoundMismatch {
                expected: frame.rows(),
                found: self.max_entry,
            });
        }
        let shape = FramedPartition::new(self.shape.clone(), frame)?
            .complement()
            .partition()
            .clone();
        let r = frame.rows();
        let cols = self.columns().0;
        let mut rows: Vec<Vec<u32>> = shape
            .parts()
            .iter()
            .map(|&p| Vec::with_capacity(p as usize))
            .collect();
        for j in 1..=frame.cols() {
            let source = cols
                .get((frame.cols() - j) as usize)
                .map(Vec::as_slice)
                .unwrap_or(&[]);
            let missing = (1..=r).filter(|v| source.binary_search(v).is_err());
            for (i, v) in missing.enumerate() {
                rows[i].push(v);
            }
        }
        Ssyt::new(shape, rows, r)
    }
}

/// Rows separated by `/`, e.g. `111/22/3`; entries above 9 are bracketed.
impl fmt::Display for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            for &e in row {
                if e < 10 {
                    write!(f, "{e}")?;
                } else {
                    write!(f, "[{e}]")?;
                }
            }
        }
        Ok(())
    }
}

/// Entries of a tableau read column by column, each column north to south.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnWord(pub Vec<Vec<u32>>);

/// Lazily enumerates `SSYT` of a shape with entries in `1..=max_entry`, in
/// lexicographic order of the row reading word (rows north to south, each
/// west to east).
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> SsytIter {
    SsytIter::new(shape.clone(), max_entry)
}

/// Backtracking iterator behind [`enumerate_ssyt`].
#[derive(Debug, Clone)]
pub struct SsytIter {
    shape: Partition,
    max_entry: u32,
    /// Boxes `(row, col)` in reading order, 0-based.
    cells: Vec<(usize, usize)>,
    /// Per-box upper bound so the column below can still be filled.
    caps: Vec<u32>,
    rows: Vec<Vec<u32>>,
    /// Number of boxes currently filled.
    depth: usize,
    done: bool,
}

impl SsytIter {
    fn new(shape: Partition, max_entry: u32) -> Self {
        let cells: Vec<(usize, usize)> = shape
            .cells()
            .map(|c| (c.row as usize - 1, c.col as usize - 1))
            .collect();
        let caps = cells
            .iter()
            .map(|&(i, j)| {
                let below = shape.col_len(j as u32 + 1) as usize - i - 1;
                max_entry.saturating_sub(below as u32)
            })
            .collect();
        let rows = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
        let done = shape.length() > max_entry as usize;
        Self {
            shape,
            max_entry,
            cells,
            caps,
            rows,
            depth: 0,
            done,
        }
    }

    fn lower_bound(&self, k: usize) -> u32 {
        let (i, j) = self.cells[k];
        let left = if j > 0 { self.rows[i][j - 1] } else { 1 };
        let above = if i > 0 { self.rows[i - 1][j] + 1 } else { 1 };
        left.max(above).max(1)
    }

    /// Fills boxes `depth..` with their least admissible values. Returns
    /// false if some box has no admissible value.
    fn fill_from_depth(&mut self) -> bool {
        while self.depth < self.cells.len() {
            let lo = self.lower_bound(self.depth);
            if lo > self.caps[self.depth] {
                return false;
            }
            let (i, j) = self.cells[self.depth];
            self.rows[i][j] = lo;
            self.depth += 1;
        }
        true
    }

    /// Moves to the next filling in reading order by bumping the last box
    /// that can still grow.
    fn advance(&mut self) -> bool {
        loop {
            if self.depth == 0 {
                return false;
            }
            self.depth -= 1;
            let (i, j) = self.cells[self.depth];
            if self.rows[i][j] < self.caps[self.depth] {
                self.rows[i][j] += 1;
                self.depth += 1;
                if self.fill_from_depth() {
                    return true;
                }
            }
        }
    }
}

impl Iterator for SsytIter {
    type Item = Ssyt;

    fn next(&mut self) -> Option<Ssyt> {
        if self.done {
            return None;
        }
        let found = if self.depth == 0 && !self.cells.is_empty() {
            self.fill_from_depth() || self.advance()
        } else if self.cells.is_empty() {
            // The empty shape has exactly one filling.
            self.done = true;
            true
        } else {
            self.advance()
        };
        if !found {
            self.done = true;
            return None;
        }
        if self.cells.is_empty() {
            return Some(Ssyt {
                shape: self.shape.clone(),
                rows: vec![],
                max_entry: self.max_entry,
            });
        }
        Some(Ssyt {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
            max_entry: self.max_entry,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rows(text: &str) -> Vec<Vec<u32>> {
        text.split('/')
            .map(|r| r.chars().map(|c| c.to_digit(10).unwrap()).collect())
            .collect()
    }

    /// Every map from boxes to `1..=max`, filtered by the semistandard test.
    fn brute_force(shape: &Partition, max: u32) -> Vec<Vec<Vec<u32>>> {
        let n = shape.size();
        let mut out = Vec::new();
        let mut word = vec![1u32; n];
        loop {
            let mut it = word.iter().copied();
            let filled: Vec<Vec<u32>> = shape
                .parts()
                .iter()
                .map(|&len| it.by_ref().take(len as usize).collect())
                .collect();
            if is_semistandard(shape, &filled, max).unwrap() {
                out.push(filled);
            }
            let mut k = n;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if word[k] < max {
                    word[k] += 1;
                    word[k + 1..].iter_mut().for_each(|w| *w = 1);
                    break;
                }
            }
        }
    }

    #[test]
    fn semistandard_checks() {
        assert!(is_semistandard(&p(&[3, 2, 1]), &rows("111/22/3"), 3).unwrap());
        assert!(!is_semistandard(&p(&[1, 1]), &rows("1/1"), 2).unwrap());
        assert!(!is_semistandard(&p(&[2]), &rows("21"), 2).unwrap());
        assert!(!is_semistandard(&p(&[2]), &rows("13"), 2).unwrap());
        assert!(is_semistandard(&p(&[2]), &rows("1"), 2).is_err());
        assert!(is_semistandard(&p(&[2]), &rows("11/2"), 2).is_err());
        assert_eq!(
            Ssyt::new(p(&[2]), rows("21"), 2),
            Err(Error::NotSemistandard)
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ssyt(&p(&[3, 2, 1]), 3).count(), 8);
        assert_eq!(enumerate_ssyt(&p(&[1, 1, 1]), 2).count(), 0);
        let two: Vec<String> = enumerate_ssyt(&p(&[2]), 2).map(|t| t.to_string()).collect();
        assert_eq!(two, vec!["11", "12", "22"]);
        let empty: Vec<Ssyt> = enumerate_ssyt(&Partition::empty(), 3).collect();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].weight(), 0);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (shape, max) in [
            (p(&[2, 1]), 3),
            (p(&[2, 2]), 3),
            (p(&[3, 1, 1]), 3),
            (p(&[2, 2, 1]), 4),
            (p(&[4]), 3),
        ] {
            let got: Vec<Vec<Vec<u32>>> = enumerate_ssyt(&shape, max)
                .map(|t| t.rows().to_vec())
                .collect();
            let want = brute_force(&shape, max);
            // Brute force walks the reading word in lexicographic order too.
            assert_eq!(got, want, "shape {shape}, max {max}");
        }
    }

    #[test]
    fn enumeration_is_distinct_and_semistandard() {
        let shape = p(&[3, 2, 2]);
        let all: Vec<Ssyt> = enumerate_ssyt(&shape, 4).collect();
        let distinct: HashSet<&Ssyt> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all
            .iter()
            .all(|t| is_semistandard(&shape, t.rows(), 4).unwrap()));
    }

    #[test]
    fn weights() {
        assert_eq!(
            Ssyt::new(p(&[3, 2, 1]), rows("111/22/3"), 3)
                .unwrap()
                .weight(),
            10
        );
        assert_eq!(Ssyt::new(p(&[2]), rows("22"), 2).unwrap().weight(), 4);
        assert_eq!(p(&[3, 2, 1]).min_weight(), 10);
        assert_eq!(Partition::empty().min_weight(), 0);
        let min = enumerate_ssyt(&p(&[2, 2]), 2)
            .map(|t| t.weight())
            .min()
            .unwrap();
        assert_eq!(min, 6);
        assert_eq!(p(&[2, 2]).min_weight(), 6);
    }

    #[test]
    fn king_complement_examples() {
        let frame = Frame::new(2, 2).unwrap();
        let t = Ssyt::new(p(&[2, 1]), rows("11/2"), 2).unwrap();
        let tc = t.king_complement(frame).unwrap();
        assert_eq!(tc.shape(), &p(&[1]));
        assert_eq!(tc.rows(), &[vec![2]]);
        assert_eq!(t.weight() + tc.weight(), 6);

        let frame = Frame::new(3, 2).unwrap();
        let full = Ssyt::minimal(p(&[2, 2, 2]), 3).unwrap();
        let tc = full.king_complement(frame).unwrap();
        assert!(tc.shape().is_empty());
        assert_eq!(tc.weight(), 0);

        let empty = Ssyt::minimal(Partition::empty(), 3).unwrap();
        let tc = empty.king_complement(frame).unwrap();
        assert_eq!(tc, full);
    }

    #[test]
    fn king_complement_errors() {
        let t = Ssyt::new(p(&[2, 1]), rows("11/2"), 2).unwrap();
        assert_eq!(
            t.king_complement(Frame::new(3, 2).unwrap()),
            Err(Error::EntryBoundMismatch {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            t.king_complement(Frame::new(2, 1).unwrap()),
            Err(Error::DoesNotFit)
        );
    }

    #[test]
    fn columns() {
        let t = Ssyt::new(p(&[3, 2, 1]), rows("112/23/3"), 3).unwrap();
        assert_eq!(
            t.columns(),
            ColumnWord(vec![vec![1, 2, 3], vec![1, 3], vec![2]])
        );
    }
}
