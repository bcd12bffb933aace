//! Drawings on the standard figure of a matrix.
//!
//! With a consistent orientation fixed, a word w_1 … w_n over the nonzero
//! cells is drawn by putting its i-th point on the segment of cell w_i at
//! distance proportional to i from the segment's base end. The permutations
//! drawn this way are exactly the geometric grid class, and the drawings
//! with their cell labels are exactly its gridded permutations. Matrices
//! without a consistent orientation are drawn through their refinement,
//! which has the same figure.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::graph::Split;
use super::matrix::{Cell, GridMatrix, Orientation};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation together with the cell each entry is drawn in, listed by
/// position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GriddedPermutation {
    pub perm: Permutation,
    pub cells: Vec<Cell>,
}

impl GriddedPermutation {
    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Image under the half-turn of the matrix `a`.
    pub fn rc(&self, a: &GridMatrix) -> GriddedPermutation {
        GriddedPermutation {
            perm: self.perm.reverse_complement(),
            cells: self.cells.iter().rev().map(|&cell| a.rc_cell(cell)).collect(),
        }
    }

    pub fn is_centrosymmetric(&self, a: &GridMatrix) -> bool {
        self.rc(a) == *self
    }
}

/// A matrix prepared for drawing: the matrix actually drawn on (the input
/// or its refinement) and its orientation.
#[derive(Clone, Debug)]
struct Drawer {
    drawn: GridMatrix,
    orientation: Orientation,
    cells: Vec<Cell>,
    refined: bool,
}

impl Drawer {
    fn new(a: &GridMatrix) -> Self {
        let (drawn, orientation, refined) = match a.orientation() {
            Some(o) => (a.clone(), o, false),
            None => {
                let r = a.refine_x2();
                let o = r.orientation().expect("refined matrices always orient");
                (r, o, true)
            }
        };
        let cells = drawn.nonzero_cells();
        Drawer { drawn, orientation, cells, refined }
    }

    /// Integer coordinates of the points of a word of cell indices. Each cell
    /// spans `scale` units; point i sits at offset 2i (or scale - 2i) inside
    /// its cell, so coordinates never collide, even with the rotated copy.
    fn points(&self, word: &[usize]) -> Vec<(i64, i64)> {
        let scale = 2 * word.len() as i64 + 1;
        let rows = self.drawn.rows();
        word.iter()
            .enumerate()
            .map(|(i, &w)| {
                let (r, c) = self.cells[w];
                let t = 2 * (i as i64 + 1);
                let xo = if self.orientation.col[c] == 1 { t } else { scale - t };
                let yo = if self.orientation.row[r] == 1 { t } else { scale - t };
                (c as i64 * scale + xo, (rows - 1 - r) as i64 * scale + yo)
            })
            .collect()
    }

    fn perm_of(&self, word: &[usize]) -> Permutation {
        let mut pts = self.points(word);
        pts.sort_unstable();
        let ys: Vec<i64> = pts.iter().map(|p| p.1).collect();
        Permutation::standardize(&ys)
    }

    fn gridded_of(&self, word: &[usize]) -> GriddedPermutation {
        let pts = self.points(word);
        let mut order: Vec<usize> = (0..word.len()).collect();
        order.sort_unstable_by_key(|&i| pts[i].0);
        let ys: Vec<i64> = order.iter().map(|&i| pts[i].1).collect();
        let cells = order
            .iter()
            .map(|&i| {
                let (r, c) = self.cells[word[i]];
                if self.refined {
                    (r / 2, c / 2)
                } else {
                    (r, c)
                }
            })
            .collect();
        GriddedPermutation { perm: Permutation::standardize(&ys), cells }
    }

    /// Calls `visit` on every word of length n whose first letter is `first`
    /// (or on every word, when `first` is `None`).
    fn for_each_word(&self, n: usize, first: Option<usize>, visit: &mut impl FnMut(&[usize])) {
        let k = self.cells.len();
        let mut word = Vec::with_capacity(n);
        if let Some(f) = first {
            word.push(f);
        }
        fn rec(k: usize, n: usize, word: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
            if word.len() == n {
                visit(word);
                return;
            }
            for w in 0..k {
                word.push(w);
                rec(k, n, word, visit);
                word.pop();
            }
        }
        rec(k, n, &mut word, visit);
    }

    fn first_letters(&self, n: usize) -> Vec<Option<usize>> {
        if n == 0 || self.cells.is_empty() {
            vec![None]
        } else {
            (0..self.cells.len()).map(Some).collect()
        }
    }

    /// A word drawing `target`, found by depth-first search over words. A
    /// prefix is abandoned once its points no longer form a pattern of
    /// `target`.
    fn find_word(&self, target: &Permutation) -> Option<Vec<usize>> {
        fn rec(d: &Drawer, target: &Permutation, word: &mut Vec<usize>) -> bool {
            if word.len() == target.len() {
                return d.perm_of(word) == *target;
            }
            for w in 0..d.cells.len() {
                word.push(w);
                // coordinates depend on the final length, but the pattern of
                // a prefix does not
                if target.contains(&d.perm_of(word)) && rec(d, target, word) {
                    return true;
                }
                word.pop();
            }
            false
        }
        let mut word = Vec::with_capacity(target.len());
        if target.is_empty() || rec(self, target, &mut word) {
            Some(word)
        } else {
            None
        }
    }
}

fn geom_set(drawer: &Drawer, n: usize, parallel: bool) -> HashSet<Permutation> {
    let collect = |first: &Option<usize>| {
        let mut set = HashSet::new();
        drawer.for_each_word(n, *first, &mut |w| {
            set.insert(drawer.perm_of(w));
        });
        set
    };
    if n > 0 && drawer.cells.is_empty() {
        return HashSet::new();
    }
    let firsts = drawer.first_letters(n);
    if parallel {
        firsts.par_iter().map(collect).reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
    } else {
        firsts.iter().map(collect).fold(HashSet::new(), |mut a, b| {
            a.extend(b);
            a
        })
    }
}

/// Members of `Geom(a)` of size n, in lexicographic order.
pub fn enumerate_geom(a: &GridMatrix, n: usize) -> Vec<Permutation> {
    let drawer = Drawer::new(a);
    let mut out: Vec<Permutation> = geom_set(&drawer, n, true).into_iter().collect();
    out.sort_unstable();
    out
}

/// All gridded permutations of size n on `a`, sorted.
pub fn enumerate_gridded(a: &GridMatrix, n: usize) -> Vec<GriddedPermutation> {
    let drawer = Drawer::new(a);
    if n > 0 && drawer.cells.is_empty() {
        return Vec::new();
    }
    let sets: Vec<BTreeSet<GriddedPermutation>> = drawer
        .first_letters(n)
        .par_iter()
        .map(|first| {
            let mut set = BTreeSet::new();
            drawer.for_each_word(n, *first, &mut |w| {
                set.insert(drawer.gridded_of(w));
            });
            set
        })
        .collect();
    let mut all: BTreeSet<GriddedPermutation> = BTreeSet::new();
    for s in sets {
        all.extend(s);
    }
    all.into_iter().collect()
}

/// The griddings of one permutation on `a`.
pub fn griddings_of(a: &GridMatrix, p: &Permutation) -> Vec<GriddedPermutation> {
    let drawer = Drawer::new(a);
    let mut found = BTreeSet::new();
    let mut word = Vec::with_capacity(p.len());
    fn rec(d: &Drawer, target: &Permutation, word: &mut Vec<usize>, found: &mut BTreeSet<GriddedPermutation>) {
        if word.len() == target.len() {
            let g = d.gridded_of(word);
            if g.perm == *target {
                found.insert(g);
            }
            return;
        }
        for w in 0..d.cells.len() {
            word.push(w);
            if target.contains(&d.perm_of(word)) {
                rec(d, target, word, found);
            }
            word.pop();
        }
    }
    if p.is_empty() {
        found.insert(GriddedPermutation { perm: Permutation::empty(), cells: Vec::new() });
    } else if !drawer.cells.is_empty() {
        rec(&drawer, p, &mut word, &mut found);
    }
    found.into_iter().collect()
}

/// Result of looking for a gridding fixed by rc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CentroGridding {
    Found(GriddedPermutation),
    /// In the class, but every gridding is moved by rc.
    NoneFound,
    NotMember,
}

impl CentroGridding {
    pub fn found(&self) -> bool {
        matches!(self, CentroGridding::Found(_))
    }
}

pub fn has_centrosymmetric_gridding(p: &Permutation, a: &GridMatrix) -> Result<CentroGridding> {
    if !a.is_rc() {
        return Err(Error::Domain(format!("matrix {a} is not invariant under rc")));
    }
    if !p.is_centrosymmetric() {
        return Err(Error::Domain(format!("{p} is not centrosymmetric")));
    }
    let griddings = griddings_of(a, p);
    if griddings.is_empty() {
        return Ok(CentroGridding::NotMember);
    }
    Ok(griddings
        .into_iter()
        .find(|g| g.is_centrosymmetric(a))
        .map_or(CentroGridding::NoneFound, CentroGridding::Found))
}

/// Combines a gridding on `A_X` with one on `A_Y` into a gridding on the
/// whole matrix. Since no row or column holds cells of both parts, the
/// relative order of the two point sets is fixed by the cells alone.
pub fn merge_griddings(
    split: &Split,
    gx: &GriddedPermutation,
    gy: &GriddedPermutation,
) -> GriddedPermutation {
    let rows = split.matrix.rows();
    // (column, position within its own part) orders positions, (row from
    // bottom, value within its own part) orders values
    let mut pts: Vec<((usize, usize), (usize, u32), Cell)> = Vec::with_capacity(gx.len() + gy.len());
    for g in [gx, gy] {
        for (i, (&v, &(r, c))) in g.perm.values().iter().zip(&g.cells).enumerate() {
            pts.push(((c, i), (rows - 1 - r, v), (r, c)));
        }
    }
    pts.sort_unstable_by_key(|p| p.0);
    let ys: Vec<(usize, u32)> = pts.iter().map(|p| p.1).collect();
    GriddedPermutation {
        perm: Permutation::standardize(&ys),
        cells: pts.iter().map(|p| p.2).collect(),
    }
}

/// Draws σ on `a`, adds the half-turn image of the drawing, and returns the
/// resulting centrosymmetric permutation of size 2|σ|. `None` when σ is not
/// in `Geom(a)` or `a` is not rc-invariant.
pub fn double_drawing(a: &GridMatrix, sigma: &Permutation) -> Option<Permutation> {
    if !a.is_rc() {
        return None;
    }
    let drawer = Drawer::new(a);
    let word = drawer.find_word(sigma)?;
    let scale = 2 * word.len() as i64 + 1;
    let width = drawer.drawn.cols() as i64 * scale;
    let height = drawer.drawn.rows() as i64 * scale;
    let mut pts = drawer.points(&word);
    let rotated: Vec<(i64, i64)> = pts.iter().map(|&(x, y)| (width - x, height - y)).collect();
    pts.extend(rotated);
    pts.sort_unstable();
    let xs_distinct = pts.windows(2).all(|w| w[0].0 != w[1].0);
    let ys: Vec<i64> = pts.iter().map(|p| p.1).collect();
    let ys_distinct = ys.iter().collect::<HashSet<_>>().len() == ys.len();
    if !(xs_distinct && ys_distinct) {
        return None;
    }
    Some(Permutation::standardize(&ys))
}

/// |Geom(a)^rc_{2n}| for n = 1..=max_n, by filtering the drawn class.
pub fn centro_geom_counts(a: &GridMatrix, max_n: usize) -> Result<Vec<u64>> {
    if !a.is_rc() {
        return Err(Error::Domain(format!("matrix {a} is not invariant under rc")));
    }
    Ok((1..=max_n)
        .map(|n| {
            enumerate_geom(a, 2 * n)
                .iter()
                .filter(|q| q.is_centrosymmetric())
                .count() as u64
        })
        .collect())
}

/// Largest number of griddings of a single permutation of size n.
pub fn max_griddings(a: &GridMatrix, n: usize) -> usize {
    let mut per_perm: HashMap<Permutation, usize> = HashMap::new();
    for g in enumerate_gridded(a, n) {
        *per_perm.entry(g.perm).or_default() += 1;
    }
    per_perm.values().copied().max().unwrap_or(0)
}

/// Centrosymmetric members of size m, split by whether some gridding is
/// itself centrosymmetric: `(with, without)`.
pub fn centro_gridding_split(a: &GridMatrix, m: usize) -> Result<(u64, u64)> {
    if !a.is_rc() {
        return Err(Error::Domain(format!("matrix {a} is not invariant under rc")));
    }
    let mut has: HashMap<Permutation, bool> = HashMap::new();
    for g in enumerate_gridded(a, m) {
        if g.perm.is_centrosymmetric() {
            let centro = g.is_centrosymmetric(a);
            *has.entry(g.perm).or_default() |= centro;
        }
    }
    let with = has.values().filter(|&&b| b).count() as u64;
    Ok((with, has.len() as u64 - with))
}

/// One size of the comparison between the directly enumerated gridding
/// count of a split matrix and the two candidate formulas built from `A_X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriddingCountRow {
    pub n: usize,
    pub direct: u64,
    /// Σ_k |G#_k(A_X)| · |G#_{n-k}(A_Y)|
    pub convolution: u64,
    /// Σ_k |G#_k(A_X)|²
    pub squares: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriddingCountReport {
    pub matrix: GridMatrix,
    pub rows: Vec<GriddingCountRow>,
}

impl GriddingCountReport {
    pub fn convolution_matches(&self) -> bool {
        self.rows.iter().all(|r| r.direct == r.convolution)
    }

    pub fn squares_match(&self) -> bool {
        self.rows.iter().all(|r| r.direct == r.squares)
    }
}

pub fn gridding_count_formulas(a: &GridMatrix, max_n: usize) -> Result<GriddingCountReport> {
    let split = super::graph::split_xy(a)?;
    let count = |m: &GridMatrix, n: usize| enumerate_gridded(m, n).len() as u64;
    let gx: Vec<u64> = (0..=max_n).map(|k| count(&split.x, k)).collect();
    let gy: Vec<u64> = (0..=max_n).map(|k| count(&split.y, k)).collect();
    let rows = (0..=max_n)
        .map(|n| GriddingCountRow {
            n,
            direct: count(&split.matrix, n),
            convolution: (0..=n).map(|k| gx[k] * gy[n - k]).sum(),
            squares: (0..=n).map(|k| gx[k] * gx[k]).sum(),
        })
        .collect();
    Ok(GriddingCountReport { matrix: split.matrix, rows })
}

/// One size of the map g ↦ merge(g, rc(g)) from `A_X`-gridded permutations
/// of size n to centrosymmetric gridded permutations of size 2n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRow {
    pub n: usize,
    pub x_gridded: u64,
    pub centro_gridded: u64,
    /// The image is exactly the centrosymmetric gridded set, without repeats.
    pub bijective: bool,
}

pub fn centro_gridded_bijection(a: &GridMatrix, max_n: usize) -> Result<Vec<BijectionRow>> {
    let split = super::graph::split_xy(a)?;
    let full = &split.matrix;
    Ok((0..=max_n)
        .map(|n| {
            let xs = enumerate_gridded(&split.x, n);
            let centro: BTreeSet<GriddedPermutation> = enumerate_gridded(full, 2 * n)
                .into_iter()
                .filter(|g| g.is_centrosymmetric(full))
                .collect();
            let image: BTreeSet<GriddedPermutation> =
                xs.iter().map(|g| merge_griddings(&split, g, &g.rc(full))).collect();
            BijectionRow {
                n,
                x_gridded: xs.len() as u64,
                centro_gridded: centro.len() as u64,
                bijective: image.len() == xs.len() && image == centro,
            }
        })
        .collect())
}

/// A geometric grid class used as a [`ClassSpec`](crate::class::ClassSpec)
/// leaf. Membership is answered from a per-size cache of the drawn class.
#[derive(Clone)]
pub struct GeomClass {
    matrix: GridMatrix,
    cache: Arc<Mutex<HashMap<usize, Arc<HashSet<Permutation>>>>>,
}

impl GeomClass {
    pub fn new(matrix: GridMatrix) -> Self {
        GeomClass { matrix, cache: Arc::default() }
    }

    pub fn matrix(&self) -> &GridMatrix {
        &self.matrix
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let n = p.len();
        // the set is built sequentially while the lock is held; a parallel
        // build could let this thread steal another membership query and
        // block on its own lock
        let set = {
            let mut cache = self.cache.lock().expect("geom cache poisoned");
            cache
                .entry(n)
                .or_insert_with(|| Arc::new(geom_set(&Drawer::new(&self.matrix), n, false)))
                .clone()
        };
        set.contains(p)
    }
}

impl fmt::Debug for GeomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("GeomClass").field(&self.matrix.to_string()).finish()
    }
}

impl PartialEq for GeomClass {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::split_xy;
    use crate::perm::p;

    fn m(s: &str) -> GridMatrix {
        s.parse().unwrap()
    }

    const X: &str = "-1,1;1,-1";

    #[test]
    fn single_increasing_cell() {
        for n in 0..=5 {
            assert_eq!(enumerate_geom(&m("1"), n), vec![Permutation::identity(n)]);
            assert_eq!(enumerate_gridded(&m("1"), n).len(), 1);
        }
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(enumerate_geom(&m("1,0;0,1"), 2), vec![p("12"), p("21")]);
        let gridded = enumerate_gridded(&m("1,0;0,1"), 2);
        assert_eq!(gridded.len(), 3);
        assert_eq!(gridded.iter().filter(|g| g.perm == p("12")).count(), 2);
        assert_eq!(enumerate_gridded(&m(X), 1).len(), 4);
    }

    #[test]
    fn one_increasing_then_decreasing() {
        // Geom(1 -1): an increasing run followed by a decreasing run
        for n in 0..=6 {
            let expected: Vec<Permutation> = crate::perm::all_permutations(n)
                .into_iter()
                .filter(|q| {
                    let v = q.values();
                    let peak = v.iter().position(|&x| x as usize == n).unwrap_or(0);
                    v.windows(2).enumerate().all(|(i, w)| (w[0] < w[1]) == (i < peak))
                })
                .collect();
            assert_eq!(enumerate_geom(&m("1,-1"), n), expected, "n={n}");
        }
    }

    #[test]
    fn refinement_preserves_class() {
        for s in [X, "1,0;0,1", "1,-1", "1,1;0,1", "1,1;1,-1", "-1,1;1,0"] {
            for n in 0..=5 {
                assert_eq!(enumerate_geom(&m(s), n), enumerate_geom(&m(s).refine_x2(), n), "{s} n={n}");
            }
        }
    }

    #[test]
    fn rc_invariant_matrices_draw_rc_closed_classes() {
        for s in [X, "1,0;0,1", "1,1;1,1", "0,1;1,0"] {
            for n in 0..=5 {
                let members = enumerate_geom(&m(s), n);
                for q in &members {
                    assert!(members.binary_search(&q.reverse_complement()).is_ok(), "{s} {q}");
                }
            }
        }
    }

    #[test]
    fn geometric_classes_are_down_sets() {
        for s in [X, "1,-1", "1,1;0,1", "1,1;1,-1"] {
            for n in 1..=5 {
                let smaller = enumerate_geom(&m(s), n - 1);
                for q in enumerate_geom(&m(s), n) {
                    for i in 0..n {
                        assert!(smaller.binary_search(&q.delete_at(i)).is_ok(), "{s} {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn x_class_corner_property() {
        for n in 1..=6 {
            for q in enumerate_geom(&m(X), n) {
                let ends = [q.at(1), q.at(n)];
                assert!(ends.iter().any(|&v| v == 1 || v as usize == n), "{q}");
            }
        }
    }

    #[test]
    fn centrosymmetric_gridding_examples() {
        let diag = m("1,0;0,1");
        assert_eq!(has_centrosymmetric_gridding(&p("12"), &diag).unwrap(), CentroGridding::NoneFound);
        assert!(has_centrosymmetric_gridding(&p("21"), &diag).unwrap().found());
        assert_eq!(has_centrosymmetric_gridding(&p("2413"), &m(X)).unwrap(), CentroGridding::NotMember);
        assert!(has_centrosymmetric_gridding(&p("312"), &diag).is_err());
        assert!(has_centrosymmetric_gridding(&p("12"), &m("1,-1")).is_err());
    }

    #[test]
    fn merge_examples() {
        let split = split_xy(&m("1,0;0,1")).unwrap();
        let gx = GriddedPermutation { perm: p("12"), cells: vec![(0, 0), (0, 0)] };
        let empty = GriddedPermutation { perm: Permutation::empty(), cells: vec![] };
        assert_eq!(merge_griddings(&split, &gx, &empty), gx);
        let one_x = GriddedPermutation { perm: p("1"), cells: vec![(0, 0)] };
        let one_y = GriddedPermutation { perm: p("1"), cells: vec![(1, 1)] };
        assert_eq!(
            merge_griddings(&split, &one_x, &one_y),
            GriddedPermutation { perm: p("21"), cells: vec![(0, 0), (1, 1)] }
        );
    }

    #[test]
    fn doubling_builds_centrosymmetric_members() {
        for s in [X, "1,0;0,1", "1,1;1,1"] {
            let a = m(s);
            for n in 0..=4 {
                let members: HashSet<Permutation> = enumerate_geom(&a, 2 * n).into_iter().collect();
                for sigma in enumerate_geom(&a, n) {
                    let rho = double_drawing(&a, &sigma).expect("member has a drawing");
                    assert_eq!(rho.len(), 2 * n);
                    assert!(rho.is_centrosymmetric(), "{s} {sigma} -> {rho}");
                    assert!(rho.contains(&sigma));
                    assert!(members.contains(&rho), "{s} {rho}");
                }
            }
        }
        assert_eq!(double_drawing(&m(X), &p("2413")), None);
    }

    #[test]
    fn gridding_counts_are_polynomial() {
        // monitored growth of the maximum number of griddings
        let counts: Vec<usize> = (1..=6).map(|n| max_griddings(&m(X), n)).collect();
        assert!(counts.windows(2).all(|w| w[1] <= 4 * w[0].max(1)), "{counts:?}");
        assert!(counts[5] <= 7usize.pow(4));
    }

    #[test]
    fn gridding_count_candidates() {
        let r = gridding_count_formulas(&m("1,0;0,1"), 5).unwrap();
        assert!(r.convolution_matches());
        let r = gridding_count_formulas(&m("1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"), 4).unwrap();
        assert!(r.convolution_matches());
        assert!(!r.squares_match());
        assert_eq!((r.rows[1].direct, r.rows[1].squares), (4, 5));
        assert!(gridding_count_formulas(&m(X), 3).is_err());
    }

    #[test]
    fn centro_gridded_bijection_examples() {
        for row in centro_gridded_bijection(&m("1,0;0,1"), 4).unwrap() {
            assert_eq!((row.x_gridded, row.centro_gridded), (1, 1));
            assert!(row.bijective);
        }
        for s in ["1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1", "1,0,0;0,0,0;0,0,1", "0,-1;-1,0"] {
            for row in centro_gridded_bijection(&m(s), 3).unwrap() {
                assert!(row.bijective, "{s} {row:?}");
            }
        }
    }

    #[test]
    fn geom_class_membership_cache() {
        let g = GeomClass::new(m(X));
        assert!(g.contains(&p("132")));
        assert!(!g.contains(&p("2413")));
        assert!(g.contains(&Permutation::empty()));
    }
}
