//! Partitions, the rectangular frame that holds them, and the hook and
//! distance statistics of every box in the frame.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multiset::NatMultiset;

/// Largest accepted frame side, so every entry `r + c - 1` fits easily in `u32`.
pub const MAX_FRAME_SIDE: u32 = 10_000;

/// A box of the frame. Rows count from the north, columns from the west,
/// both starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The `rows x cols` rectangle of boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    rows: u32,
    cols: u32,
}

impl Frame {
    pub fn new(rows: u32, cols: u32) -> Result<Self> {
        if !(1..=MAX_FRAME_SIDE).contains(&rows) || !(1..=MAX_FRAME_SIDE).contains(&cols) {
            return Err(Error::InvalidFrame {
                rows,
                cols,
                max: MAX_FRAME_SIDE,
            });
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    /// Number of boxes, `rows * cols`.
    pub fn area(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.rows).contains(&cell.row) && (1..=self.cols).contains(&cell.col)
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> {
        let cols = self.cols;
        (1..=self.rows).flat_map(move |row| (1..=cols).map(move |col| Cell { row, col }))
    }

    /// Largest possible hook length or distance, `rows + cols - 1`.
    pub fn max_entry(&self) -> u32 {
        self.rows + self.cols - 1
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Parses `RxC`, e.g. `6x8`.
impl FromStr for Frame {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseFrame(s.to_string());
        let (r, c) = s.trim().split_once(['x', 'X']).ok_or_else(err)?;
        let rows = r.trim().parse().map_err(|_| err())?;
        let cols = c.trim().parse().map_err(|_| err())?;
        Frame::new(rows, cols)
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `parts`. Zeros are rejected anywhere, including at the end;
    /// use [`Partition::from_padded`] to strip trailing zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroPart { index });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing { index });
        }
        Ok(Self { parts })
    }

    /// Like [`Partition::new`] but for signed input, rejecting negative parts.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .enumerate()
            .map(|(index, &p)| {
                if p < 0 {
                    Err(Error::NegativePart { index })
                } else {
                    u32::try_from(p).map_err(|_| Error::ParsePartition(p.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Accepts a weakly decreasing sequence with trailing zeros and drops them.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part in row `row` (1-based), 0 past the last part.
    pub fn row_len(&self, row: u32) -> u32 {
        row.checked_sub(1)
            .and_then(|i| self.parts.get(i as usize))
            .copied()
            .unwrap_or(0)
    }

    /// Number of boxes in column `col` (1-based), i.e. the conjugate part.
    pub fn col_len(&self, col: u32) -> u32 {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count() as u32
    }

    /// Whether the box lies in the Young diagram.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Boxes of the Young diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |col| Cell::new(i as u32 + 1, col)))
    }

    pub fn fits(&self, frame: Frame) -> bool {
        self.length() <= frame.rows() as usize && self.width() <= frame.cols()
    }

    /// Whether adding `cell` to the diagram gives the diagram of a partition.
    pub fn is_addable(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row as usize <= self.length() + 1
            && cell.col == self.row_len(cell.row) + 1
            && (cell.row == 1 || self.row_len(cell.row - 1) >= cell.col)
    }

    /// The partition whose diagram is this one plus `cell`.
    pub fn add_box(&self, cell: Cell) -> Result<Partition> {
        if !self.is_addable(cell) {
            return Err(Error::NotAddable(cell));
        }
        let mut parts = self.parts.clone();
        match parts.get_mut(cell.row as usize - 1) {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Ok(Partition { parts })
    }

    /// `sum_i i * part_i`, the least weight of a semistandard filling.
    pub fn min_weight(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as u64 + 1) * p as u64)
            .sum()
    }
}

/// Comma-separated parts as accepted by the command line.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses comma-separated parts; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::ParsePartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_signed(&parts)
    }
}

/// The hook-length sets built from an addable box `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Sets {
    /// Hook lengths in `λ` of the boxes west of `(a, b)` in row `a`.
    pub west_in_row: NatMultiset,
    /// Hook lengths in `λ'` of the boxes south of `(a, b)` in column `b`.
    pub south_in_col: NatMultiset,
    /// Hook lengths in `λ` of the boxes north of `(a, b)` in column `b`.
    pub north_in_col: NatMultiset,
    /// Hook lengths in `λ'` of the boxes east of `(a, b)` in row `a`.
    pub east_in_row: NatMultiset,
}

/// A partition together with a frame it fits in.
///
/// Hooks and distances of boxes outside the diagram depend on the frame,
/// so every such statistic lives here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FramedPartition {
    partition: Partition,
    frame: Frame,
}

impl FramedPartition {
    pub fn new(partition: Partition, frame: Frame) -> Result<Self> {
        if !partition.fits(frame) {
            return Err(Error::DoesNotFit);
        }
        Ok(Self { partition, frame })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.partition.contains(cell)
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.frame.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutsideFrame(cell))
        }
    }

    /// The hook on `cell`: for a box of the diagram, itself plus the diagram
    /// boxes strictly south and strictly east; for a box outside, itself plus
    /// the outside boxes strictly north and strictly west.
    pub fn hook_boxes(&self, cell: Cell) -> Result<Vec<Cell>> {
        self.check_cell(cell)?;
        let lambda = &self.partition;
        let mut hook = vec![cell];
        if lambda.contains(cell) {
            hook.extend((cell.col + 1..=lambda.row_len(cell.row)).map(|j| Cell::new(cell.row, j)));
            hook.extend((cell.row + 1..=lambda.col_len(cell.col)).map(|i| Cell::new(i, cell.col)));
        } else {
            hook.extend((lambda.row_len(cell.row) + 1..cell.col).map(|j| Cell::new(cell.row, j)));
            hook.extend((lambda.col_len(cell.col) + 1..cell.row).map(|i| Cell::new(i, cell.col)));
        }
        Ok(hook)
    }

    pub fn hook_length(&self, cell: Cell) -> Result<u32> {
        self.check_cell(cell)?;
        Ok(self.hook_length_unchecked(cell))
    }

    fn hook_length_unchecked(&self, cell: Cell) -> u32 {
        let lambda = &self.partition;
        let (arm, leg) = (lambda.row_len(cell.row), lambda.col_len(cell.col));
        if lambda.contains(cell) {
            (arm - cell.col) + (leg - cell.row) + 1
        } else {
            (cell.col - arm - 1) + (cell.row - leg - 1) + 1
        }
    }

    /// Boxes on a monotone walk to the south-west corner (inside the
    /// diagram) or to the north-east corner (outside it).
    pub fn distance(&self, cell: Cell) -> Result<u32> {
        self.check_cell(cell)?;
        Ok(self.distance_unchecked(cell))
    }

    fn distance_unchecked(&self, cell: Cell) -> u32 {
        if self.partition.contains(cell) {
            self.frame.rows() - cell.row + cell.col
        } else {
            cell.row + self.frame.cols() - cell.col
        }
    }

    /// Hook lengths in every box, row-major.
    pub fn hook_lengths(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.frame
            .cells()
            .map(|c| (c, self.hook_length_unchecked(c)))
    }

    /// Distances of every box, row-major.
    pub fn distances(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.frame.cells().map(|c| (c, self.distance_unchecked(c)))
    }

    /// Boxes that can be added while staying in the frame, by increasing row.
    pub fn addable_boxes(&self) -> Vec<Cell> {
        let lambda = &self.partition;
        (1..=self.frame.rows().min(lambda.length() as u32 + 1))
            .map(|row| Cell::new(row, lambda.row_len(row) + 1))
            .filter(|&cell| cell.col <= self.frame.cols() && lambda.is_addable(cell))
            .collect()
    }

    /// The framed partition with `cell` added to the diagram.
    pub fn add_box(&self, cell: Cell) -> Result<FramedPartition> {
        self.check_cell(cell)?;
        let partition = self.partition.add_box(cell)?;
        Ok(FramedPartition {
            partition,
            frame: self.frame,
        })
    }

    /// The partition whose diagram is the complement of this one in the
    /// frame, rotated by a half turn.
    pub fn complement(&self) -> FramedPartition {
        let (rows, cols) = (self.frame.rows(), self.frame.cols());
        let parts = (1..=rows)
            .rev()
            .map(|i| cols - self.partition.row_len(i))
            .collect();
        let partition =
            Partition::from_padded(parts).expect("complement parts are weakly decreasing");
        FramedPartition {
            partition,
            frame: self.frame,
        }
    }

    /// Hook sets around the addable box `(a, b)`, mixing hooks of `λ` and of
    /// `λ' = λ + (a, b)`.
    pub fn lemma2_sets(&self, addbox: Cell) -> Result<Lemma2Sets> {
        let grown = self.add_box(addbox)?;
        let Cell { row: a, col: b } = addbox;
        let r = self.frame.rows();
        let c = self.frame.cols();
        let hooks = |fp: &FramedPartition, cells: &mut dyn Iterator<Item = Cell>| -> NatMultiset {
            cells.map(|cell| fp.hook_length_unchecked(cell)).collect()
        };
        Ok(Lemma2Sets {
            west_in_row: hooks(self, &mut (1..b).map(|j| Cell::new(a, j))),
            south_in_col: hooks(&grown, &mut (a + 1..=r).map(|i| Cell::new(i, b))),
            north_in_col: hooks(self, &mut (1..a).map(|i| Cell::new(i, b))),
            east_in_row: hooks(&grown, &mut (b + 1..=c).map(|j| Cell::new(a, j))),
        })
    }
}
