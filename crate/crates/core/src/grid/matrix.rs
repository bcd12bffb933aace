use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell as (row, column), with row 0 the top row of the displayed matrix.
pub type Cell = (usize, usize);

/// A {-1, 0, 1} matrix. Row 0 is the top row, as matrices are usually drawn.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

/// Per-column and per-row directions with `entry(r, c) = col[c] * row[r]`
/// on every nonzero cell. `col[c] = 1` means points in column c move right
/// as they are placed later; `row[r] = 1` means they move up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub col: Vec<i8>,
    pub row: Vec<i8>,
}

impl GridMatrix {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::format("", "empty matrix"));
        }
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in &rows {
            if row.len() != ncols {
                return Err(Error::format(
                    format!("{row:?}"),
                    format!("row has {} entries, expected {ncols}", row.len()),
                ));
            }
            for &e in row {
                if !(-1..=1).contains(&e) {
                    return Err(Error::format(e.to_string(), "entries must be -1, 0 or 1"));
                }
                entries.push(e);
            }
        }
        Ok(GridMatrix { rows: nrows, cols: ncols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, (r, c): Cell) -> i8 {
        self.entries[r * self.cols + c]
    }

    /// Nonzero cells in row-major order.
    pub fn nonzero_cells(&self) -> Vec<Cell> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .filter(|&cell| self.get(cell) != 0)
            .collect()
    }

    pub fn rc_cell(&self, (r, c): Cell) -> Cell {
        (self.rows - 1 - r, self.cols - 1 - c)
    }

    /// Half-turn rotation. Segments keep their slope under a half turn, so
    /// entries move but keep their values.
    pub fn rc(&self) -> GridMatrix {
        let entries = self.entries.iter().rev().copied().collect();
        GridMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn is_rc(&self) -> bool {
        self.rc() == *self
    }

    /// The doubled matrix with the same standard figure: 1 becomes
    /// `[[0,1],[1,0]]`, -1 becomes `[[-1,0],[0,-1]]`, 0 becomes a zero block.
    pub fn refine_x2(&self) -> GridMatrix {
        let cols = 2 * self.cols;
        let mut entries = vec![0i8; 4 * self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let (tl, tr, bl, br) = match self.get((r, c)) {
                    1 => (0, 1, 1, 0),
                    -1 => (-1, 0, 0, -1),
                    _ => (0, 0, 0, 0),
                };
                entries[(2 * r) * cols + 2 * c] = tl;
                entries[(2 * r) * cols + 2 * c + 1] = tr;
                entries[(2 * r + 1) * cols + 2 * c] = bl;
                entries[(2 * r + 1) * cols + 2 * c + 1] = br;
            }
        }
        GridMatrix { rows: 2 * self.rows, cols, entries }
    }

    /// Keeps only the listed cells.
    pub fn restrict(&self, keep: &[Cell]) -> GridMatrix {
        let mut entries = vec![0i8; self.entries.len()];
        for &(r, c) in keep {
            entries[r * self.cols + c] = self.get((r, c));
        }
        GridMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// A consistent orientation, found by propagating the constraint
    /// `col[c] * row[r] = entry` along nonzero cells. `None` when the
    /// constraints conflict (some cycle has an odd number of -1 entries).
    pub fn orientation(&self) -> Option<Orientation> {
        let mut col = vec![0i8; self.cols];
        let mut row = vec![0i8; self.rows];
        let cells = self.nonzero_cells();
        for start in 0..self.cols {
            if col[start] != 0 {
                continue;
            }
            col[start] = 1;
            // alternate between propagating from columns and from rows
            let mut queue = vec![(true, start)];
            while let Some((is_col, idx)) = queue.pop() {
                for &(r, c) in &cells {
                    let e = self.get((r, c));
                    if is_col && c == idx {
                        let want = e * col[c];
                        if row[r] == 0 {
                            row[r] = want;
                            queue.push((false, r));
                        } else if row[r] != want {
                            return None;
                        }
                    } else if !is_col && r == idx {
                        let want = e * row[r];
                        if col[c] == 0 {
                            col[c] = want;
                            queue.push((true, c));
                        } else if col[c] != want {
                            return None;
                        }
                    }
                }
            }
        }
        for r in row.iter_mut().filter(|r| **r == 0) {
            *r = 1;
        }
        Some(Orientation { col, row })
    }
}

impl FromStr for GridMatrix {
    type Err = Error;

    /// Rows separated by `;`, entries by `,`, e.g. `-1,1;1,-1`. Surrounding
    /// brackets are optional.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(&text);
        if body.is_empty() {
            return Err(Error::format(s, "empty matrix"));
        }
        let rows = body
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| match e {
                        "1" | "+1" => Ok(1),
                        "0" | "-0" => Ok(0),
                        "-1" => Ok(-1),
                        other => Err(Error::format(other, "entries must be -1, 0 or 1")),
                    })
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GridMatrix::new(rows)
    }
}

impl fmt::Display for GridMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ";")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get((r, c)))?;
            }
        }
        Ok(())
    }
}
