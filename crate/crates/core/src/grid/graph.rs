use serde::{Deserialize, Serialize};

use super::matrix::{Cell, GridMatrix};
use crate::error::{Error, Result};

/// Graph on the nonzero cells; two cells are adjacent when they share a row
/// or column with no nonzero cell between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellGraph {
    pub vertices: Vec<Cell>,
    /// Index pairs into `vertices`, smaller index first.
    pub edges: Vec<(usize, usize)>,
}

impl CellGraph {
    pub fn new(a: &GridMatrix) -> Self {
        let vertices = a.nonzero_cells();
        let index = |cell: Cell| vertices.binary_search(&cell).expect("nonzero cell");
        let mut edges = Vec::new();
        for r in 0..a.rows() {
            let in_row: Vec<Cell> = (0..a.cols()).map(|c| (r, c)).filter(|&x| a.get(x) != 0).collect();
            for w in in_row.windows(2) {
                edges.push((index(w[0]), index(w[1])));
            }
        }
        for c in 0..a.cols() {
            let in_col: Vec<Cell> = (0..a.rows()).map(|r| (r, c)).filter(|&x| a.get(x) != 0).collect();
            for w in in_col.windows(2) {
                edges.push((index(w[0]), index(w[1])));
            }
        }
        edges.sort_unstable();
        CellGraph { vertices, edges }
    }

    /// Connected components as sorted vertex-index lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(x, y) in &self.edges {
                    let other = if x == v {
                        y
                    } else if y == v {
                        x
                    } else {
                        continue;
                    };
                    if comp[other] == usize::MAX {
                        comp[other] = id;
                        members.push(other);
                        stack.push(other);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertices.len()
    }
}

/// Outcome of checking the two cell-graph conditions on an rc-invariant
/// matrix: (i) the cell graph is a forest, and (ii) rc sends every
/// component to a different component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingReport {
    /// The matrix examined: the input, or its refinement when the input had
    /// an odd number of rows or columns.
    pub matrix: GridMatrix,
    pub refined: bool,
    pub graph: CellGraph,
    pub components: Vec<Vec<Cell>>,
    /// `rc_partner[i]` is the component that rc maps component i onto.
    pub rc_partner: Vec<usize>,
    pub forest: bool,
    pub components_paired: bool,
}

pub fn rc_component_pairing(a: &GridMatrix) -> Result<PairingReport> {
    if !a.is_rc() {
        return Err(Error::Domain(format!("matrix {a} is not invariant under rc")));
    }
    let refined = a.rows() % 2 == 1 || a.cols() % 2 == 1;
    let matrix = if refined { a.refine_x2() } else { a.clone() };
    let graph = CellGraph::new(&matrix);
    let comp_idx = graph.components();
    let mut owner = vec![0usize; graph.vertices.len()];
    for (id, members) in comp_idx.iter().enumerate() {
        for &v in members {
            owner[v] = id;
        }
    }
    let rc_partner: Vec<usize> = comp_idx
        .iter()
        .map(|members| {
            let image = matrix.rc_cell(graph.vertices[members[0]]);
            owner[graph.vertices.binary_search(&image).expect("rc-invariant matrix")]
        })
        .collect();
    let components_paired = rc_partner.iter().enumerate().all(|(i, &j)| i != j);
    let components = comp_idx
        .iter()
        .map(|members| members.iter().map(|&v| graph.vertices[v]).collect())
        .collect();
    Ok(PairingReport {
        forest: graph.is_forest(),
        matrix,
        refined,
        graph,
        components,
        rc_partner,
        components_paired,
    })
}

/// Splits an rc-invariant matrix whose components pair off under rc into
/// `A_X` (one component from each pair) and `A_Y = rc(A_X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub matrix: GridMatrix,
    pub x: GridMatrix,
    pub y: GridMatrix,
}

/// From each rc pair, the component with the lexicographically smaller cell
/// goes to `A_X`.
pub fn split_xy(a: &GridMatrix) -> Result<Split> {
    let report = rc_component_pairing(a)?;
    if !report.components_paired {
        return Err(Error::Domain(format!(
            "rc maps a component of the cell graph of {a} onto itself"
        )));
    }
    let keep: Vec<Cell> = report
        .components
        .iter()
        .enumerate()
        .filter(|&(i, _)| i < report.rc_partner[i])
        .flat_map(|(_, cells)| cells.iter().copied())
        .collect();
    let x = report.matrix.restrict(&keep);
    let y = x.rc();
    let x_cells = x.nonzero_cells();
    let y_cells = y.nonzero_cells();
    debug_assert!(x_cells
        .iter()
        .all(|&(r, c)| y_cells.iter().all(|&(r2, c2)| r != r2 && c != c2)));
    Ok(Split { matrix: report.matrix, x, y })
}
