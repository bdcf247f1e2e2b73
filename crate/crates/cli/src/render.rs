//! Text, LaTeX and JSON renderings of a [`RectTableau`].

use hooktab::{Frame, Partition, RectTableau, TableauKind};
use serde::{Deserialize, Serialize};

/// Glyph for the box that has no entry.
pub const HOLE: &str = "·";

fn digits(n: u32) -> usize {
    n.to_string().len()
}

/// Fixed-width grid. Entries are right-aligned to the width of `r + c - 1`;
/// boxes of the diagram carry a `*` suffix. When the diagram is empty the
/// suffix column is dropped. Trailing spaces are trimmed.
pub fn ascii(t: &RectTableau) -> String {
    let width = digits(t.frame().max_entry());
    let any_inside = t.inside_rows().flatten().any(|&b| b);
    let mut out = String::new();
    for (row, inside) in t.rows().zip(t.inside_rows()) {
        let cells: Vec<String> = row
            .iter()
            .zip(inside)
            .map(|(e, &ins)| {
                let value = e.map_or_else(|| HOLE.to_string(), |v| v.to_string());
                let marker = match (any_inside, ins) {
                    (false, _) => "",
                    (true, true) => "*",
                    (true, false) => " ",
                };
                format!("{value:>width$}{marker}")
            })
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// A `tabular` environment; diagram boxes are shaded with `\cellcolor`
/// (needs `\usepackage[table]{xcolor}`), the hole is left blank.
pub fn latex(t: &RectTableau, partition: &Partition, kind: TableauKind) -> String {
    let cols = t.frame().cols() as usize;
    let mut out = format!(
        "% {} tableau of ({partition}) in {}; shaded boxes lie in the diagram\n",
        kind.name(),
        t.frame()
    );
    out.push_str(&format!(
        "\\begin{{tabular}}{{|{}}}\n\\hline\n",
        "c|".repeat(cols)
    ));
    for (row, inside) in t.rows().zip(t.inside_rows()) {
        let cells: Vec<String> = row
            .iter()
            .zip(inside)
            .map(|(e, &ins)| {
                let value = e.map(|v| v.to_string()).unwrap_or_default();
                if ins {
                    format!("\\cellcolor{{lightgray}}{value}")
                } else {
                    value
                }
            })
            .collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    pub r: u32,
    pub c: u32,
}

impl From<Frame> for FrameJson {
    fn from(f: Frame) -> Self {
        Self {
            r: f.rows(),
            c: f.cols(),
        }
    }
}

/// JSON form of a rendered tableau; the hole is `null` in `grid`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridJson {
    pub frame: FrameJson,
    pub partition: Vec<u32>,
    pub which: String,
    pub grid: Vec<Vec<Option<u32>>>,
    pub inside: Vec<Vec<bool>>,
}

impl GridJson {
    pub fn new(t: &RectTableau, partition: &Partition, kind: TableauKind) -> Self {
        Self {
            frame: t.frame().into(),
            partition: partition.parts().to_vec(),
            which: kind.name().to_string(),
            grid: t.rows().map(<[_]>::to_vec).collect(),
            inside: t.inside_rows().map(<[_]>::to_vec).collect(),
        }
    }

    /// Rebuilds the tableau the JSON describes.
    pub fn to_tableau(&self) -> hooktab::Result<RectTableau> {
        let frame = Frame::new(self.frame.r, self.frame.c)?;
        RectTableau::from_rows(frame, self.grid.clone(), self.inside.clone())
    }
}

pub fn json(t: &RectTableau, partition: &Partition, kind: TableauKind) -> String {
    let mut s =
        serde_json::to_string(&GridJson::new(t, partition, kind)).expect("plain data serializes");
    s.push('\n');
    s
}
