//! Fillings of the whole frame: the hook/distance and distance/hook
//! tableaux, and the hook/hook tableau around an addable box.

use crate::error::{Error, Result};
use crate::multiset::NatMultiset;
use crate::partition::{Cell, Frame, FramedPartition};

/// Which statistic goes inside and which outside the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableauKind {
    HookDistance,
    DistanceHook,
    HookHook,
}

impl TableauKind {
    pub fn name(self) -> &'static str {
        match self {
            TableauKind::HookDistance => "hook-distance",
            TableauKind::DistanceHook => "distance-hook",
            TableauKind::HookHook => "hook-hook",
        }
    }
}

/// A positive entry in every box of a frame, except possibly one hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectTableau {
    frame: Frame,
    entries: Vec<Option<u32>>,
    inside: Vec<bool>,
    hole: Option<Cell>,
}

impl RectTableau {
    /// Builds a tableau from row-major rows. `None` marks the hole; at most one
    /// is allowed. The inside mask must be left-justified with weakly
    /// decreasing row lengths, and every entry must lie in `1..=r+c-1`.
    pub fn from_rows(
        frame: Frame,
        entries: Vec<Vec<Option<u32>>>,
        inside: Vec<Vec<bool>>,
    ) -> Result<Self> {
        let (rows, cols) = (frame.rows() as usize, frame.cols() as usize);
        let entries_ok = entries.len() == rows && entries.iter().all(|r| r.len() == cols);
        let inside_ok = inside.len() == rows && inside.iter().all(|r| r.len() == cols);
        if !entries_ok || !inside_ok {
            return Err(Error::ShapeMismatch(format!("grid is not {frame}")));
        }
        let mut prev = cols;
        for row in &inside {
            let len = row.iter().take_while(|&&b| b).count();
            if row[len..].iter().any(|&b| b) || len > prev {
                return Err(Error::ShapeMismatch(
                    "inside mask is not a Young diagram".into(),
                ));
            }
            prev = len;
        }
        let entries: Vec<Option<u32>> = entries.into_iter().flatten().collect();
        let mut holes = frame
            .cells()
            .zip(&entries)
            .filter(|(_, e)| e.is_none())
            .map(|(c, _)| c);
        let hole = holes.next();
        if holes.next().is_some() {
            return Err(Error::ShapeMismatch("more than one hole".into()));
        }
        if entries
            .iter()
            .flatten()
            .any(|&e| e == 0 || e > frame.max_entry())
        {
            return Err(Error::ShapeMismatch(format!(
                "entry outside 1..={}",
                frame.max_entry()
            )));
        }
        Ok(Self {
            frame,
            entries,
            inside: inside.into_iter().flatten().collect(),
            hole,
        })
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn hole(&self) -> Option<Cell> {
        self.hole
    }

    fn index(&self, cell: Cell) -> Option<usize> {
        self.frame
            .contains(cell)
            .then(|| (cell.row as usize - 1) * self.frame.cols() as usize + cell.col as usize - 1)
    }

    /// Entry at `cell`; `None` outside the frame or at the hole.
    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.index(cell).and_then(|k| self.entries[k])
    }

    pub fn is_inside(&self, cell: Cell) -> bool {
        self.index(cell).is_some_and(|k| self.inside[k])
    }

    /// Rows of entries, north to south.
    pub fn rows(&self) -> impl Iterator<Item = &[Option<u32>]> {
        self.entries.chunks(self.frame.cols() as usize)
    }

    /// Rows of the inside mask, north to south.
    pub fn inside_rows(&self) -> impl Iterator<Item = &[bool]> {
        self.inside.chunks(self.frame.cols() as usize)
    }

    /// Multiset of all entries. Fails on a tableau with a hole.
    pub fn entry_multiset(&self) -> Result<NatMultiset> {
        if let Some(hole) = self.hole {
            return Err(Error::TableauHasHole(hole));
        }
        Ok(self.entries.iter().flatten().copied().collect())
    }
}

impl FramedPartition {
    fn tableau_with(&self, entry: impl Fn(Cell, bool) -> Option<u32>) -> RectTableau {
        let frame = self.frame();
        let inside: Vec<bool> = frame.cells().map(|c| self.contains(c)).collect();
        let entries = frame
            .cells()
            .zip(&inside)
            .map(|(c, &ins)| entry(c, ins))
            .collect();
        RectTableau {
            frame,
            entries,
            inside,
            hole: None,
        }
    }

    /// Hook lengths inside the diagram, distances outside.
    pub fn hook_distance_tableau(&self) -> RectTableau {
        self.tableau_with(|c, inside| {
            Some(
                if inside {
                    self.hook_length(c)
                } else {
                    self.distance(c)
                }
                .expect("cell in frame"),
            )
        })
    }

    /// Distances inside the diagram, hook lengths outside.
    pub fn distance_hook_tableau(&self) -> RectTableau {
        self.tableau_with(|c, inside| {
            Some(
                if inside {
                    self.distance(c)
                } else {
                    self.hook_length(c)
                }
                .expect("cell in frame"),
            )
        })
    }

    /// Hook lengths of `λ` inside its diagram and hook lengths of
    /// `λ + addbox` outside the larger diagram, with no entry at `addbox`.
    /// The inside mask is the diagram of `λ`.
    pub fn hook_hook_tableau(&self, addbox: Cell) -> Result<RectTableau> {
        let grown = self.add_box(addbox)?;
        let mut t = self.tableau_with(|c, inside| {
            if c == addbox {
                None
            } else if inside {
                self.hook_length(c).ok()
            } else {
                grown.hook_length(c).ok()
            }
        });
        t.hole = Some(addbox);
        Ok(t)
    }

    /// Builds the tableau of the given kind; `addbox` is required for
    /// [`TableauKind::HookHook`] and ignored otherwise.
    pub fn tableau(&self, kind: TableauKind, addbox: Option<Cell>) -> Result<RectTableau> {
        match kind {
            TableauKind::HookDistance => Ok(self.hook_distance_tableau()),
            TableauKind::DistanceHook => Ok(self.distance_hook_tableau()),
            TableauKind::HookHook => {
                let cell = addbox
                    .ok_or_else(|| Error::ShapeMismatch("hook-hook needs an added box".into()))?;
                self.hook_hook_tableau(cell)
            }
        }
    }
}
