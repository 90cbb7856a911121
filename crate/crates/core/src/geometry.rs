//! Strips of equilateral triangles on the unit triangular lattice.
//!
//! With basis `e1 = (1, 0)`, `e2 = (1/2, √3/2)` and `p = x·e1 + y·e2`, the
//! up cell `(x, y)` has corners `p, p+e1, p+e2` and the down cell has corners
//! `p+e1, p+e1+e2, p+e2`. Every decision here is made on integer cell
//! coordinates; real coordinates only appear when rendering.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::sequences::enumerate::{canonical_keys, check_range};
use crate::sequences::{packed, Sign, SignSequence};
use crate::{ExactCount, Execution, Result};

/// Default upper bound on `n` for [`printable_class_count`].
pub const DEFAULT_PRINTABLE_LIMIT: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeCell {
    pub x: i32,
    pub y: i32,
    pub orient: Orientation,
}

impl LatticeCell {
    pub const fn up(x: i32, y: i32) -> Self {
        LatticeCell { x, y, orient: Orientation::Up }
    }

    pub const fn down(x: i32, y: i32) -> Self {
        LatticeCell { x, y, orient: Orientation::Down }
    }

    /// Edge neighbours, in counter-clockwise order of the shared edges.
    pub fn neighbours(&self) -> [LatticeCell; 3] {
        let (x, y) = (self.x, self.y);
        match self.orient {
            Orientation::Up => [Self::down(x, y - 1), Self::down(x, y), Self::down(x - 1, y)],
            Orientation::Down => [Self::up(x + 1, y), Self::up(x, y + 1), Self::up(x, y)],
        }
    }

    pub fn is_adjacent(&self, other: &LatticeCell) -> bool {
        self.neighbours().contains(other)
    }

    /// Corners in lattice coordinates `(a, b)` meaning `a·e1 + b·e2`,
    /// counter-clockwise.
    pub fn corners(&self) -> [(i32, i32); 3] {
        let (x, y) = (self.x, self.y);
        match self.orient {
            Orientation::Up => [(x, y), (x + 1, y), (x, y + 1)],
            Orientation::Down => [(x + 1, y), (x + 1, y + 1), (x, y + 1)],
        }
    }

    /// The neighbour on the left or right when entering from `from`.
    fn exit(&self, from: &LatticeCell, side: ExitSide) -> LatticeCell {
        let nb = self.neighbours();
        let k = nb.iter().position(|c| c == from).expect("entered from a neighbour");
        match side {
            ExitSide::Right => nb[(k + 1) % 3],
            ExitSide::Left => nb[(k + 2) % 3],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExitSide {
    Left,
    Right,
}

impl ExitSide {
    fn opposite(self) -> Self {
        match self {
            ExitSide::Left => ExitSide::Right,
            ExitSide::Right => ExitSide::Left,
        }
    }
}

/// Walks `count` cells from `up(0, 0)`. `same(i)` says whether expanded signs
/// `i` and `i - 1` (0-based) agree. Cell `j + 1` (1-based, `j >= 2`) keeps
/// going straight when signs `j` and `j - 1` agree and turns by reusing the
/// previous exit side when they differ.
fn walk(count: usize, same: impl Fn(usize) -> bool, mut visit: impl FnMut(LatticeCell) -> bool) {
    // A virtual predecessor to the west fixes the first exit as "left".
    let mut prev = LatticeCell::down(-1, 0);
    let mut cur = LatticeCell::up(0, 0);
    let mut side = ExitSide::Left;
    if count == 0 || !visit(cur) {
        return;
    }
    for j in 1..count {
        if j >= 2 && same(j - 1) {
            side = side.opposite();
        }
        let next = cur.exit(&prev, side);
        prev = cur;
        cur = next;
        if !visit(cur) {
            return;
        }
    }
}

/// The sign sequence repeated three times.
pub fn expand_signs(signs: &SignSequence) -> Vec<Sign> {
    signs.entries().repeat(3)
}

/// The unfolded net: `3n` cells, or `3n + 1` with the glue triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleStrip {
    cells: Vec<LatticeCell>,
    expanded_signs: Vec<Sign>,
}

impl TriangleStrip {
    pub fn cells(&self) -> &[LatticeCell] {
        &self.cells
    }

    pub fn expanded_signs(&self) -> &[Sign] {
        &self.expanded_signs
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Whether two of the first `3n` cells coincide. The glue triangle is
    /// not considered.
    pub fn overlaps(&self) -> bool {
        let faces = self.expanded_signs.len();
        let mut seen = HashSet::with_capacity(faces);
        !self.cells[..faces].iter().all(|c| seen.insert(*c))
    }
}

/// Lays the strip of a valid sign sequence on the lattice.
pub fn lay_strip(signs: &SignSequence, glue: bool) -> Result<TriangleStrip> {
    signs.validate()?;
    let expanded = expand_signs(signs);
    let count = expanded.len() + usize::from(glue);
    let mut cells = Vec::with_capacity(count);
    walk(count, |j| expanded[j] == expanded[j - 1], |c| {
        cells.push(c);
        true
    });
    Ok(TriangleStrip { cells, expanded_signs: expanded })
}

/// Which window of the periodic strip is tested and which orbit members
/// count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PrintabilityRule {
    /// Include the glue triangle in the overlap test.
    pub with_glue: bool,
    /// Only lay out the canonical representative instead of trying every
    /// member of the orbit.
    pub canonical_only: bool,
}

/// A class is printable when some member of its orbit lays out a `3n`
/// triangle strip with no two triangles in the same cell.
pub fn is_printable(signs: &SignSequence) -> Result<bool> {
    signs.validate()?;
    for image in signs.orbit() {
        if !lay_strip(&image, false)?.overlaps() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Reusable occupancy grid stamped with a generation counter, so clearing
/// between strips is O(1).
#[derive(Debug)]
pub(crate) struct OverlapGrid {
    stamps: Vec<u32>,
    epoch: u32,
    radius: i32,
    width: usize,
}

impl OverlapGrid {
    /// A grid that holds any strip of up to `3 * faces + 1` cells.
    pub(crate) fn new(faces: usize) -> Self {
        let radius = 3 * faces as i32 + 2;
        let width = 2 * radius as usize + 1;
        OverlapGrid { stamps: vec![0; width * width * 2], epoch: 0, radius, width }
    }

    fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamps.fill(0);
            self.epoch = 1;
        }
    }

    /// Marks a cell; false if it was already marked since the last reset.
    #[inline]
    fn mark(&mut self, c: LatticeCell) -> bool {
        let ix = (c.x + self.radius) as usize;
        let iy = (c.y + self.radius) as usize;
        let slot = (ix * self.width + iy) * 2 + usize::from(c.orient == Orientation::Down);
        if self.stamps[slot] == self.epoch {
            return false;
        }
        self.stamps[slot] = self.epoch;
        true
    }
}

/// Overlap-free layout of the packed sequence `x` with the given window.
fn lays_flat(x: u64, n: usize, with_glue: bool, grid: &mut OverlapGrid) -> bool {
    grid.reset();
    let count = 3 * n + usize::from(with_glue);
    let bit = |j: usize| (x >> (n - 1 - j % n)) & 1;
    let mut placed = 0;
    walk(count, |j| bit(j) == bit(j - 1), |c| {
        let fresh = grid.mark(c);
        placed += usize::from(fresh);
        fresh
    });
    placed == count
}

/// Fast printability test on a packed sequence. The layout depends only on
/// which neighbouring signs agree, so inversion is skipped and only the
/// shifts of `x` and of its reversal are tried.
pub(crate) fn printable_packed(x: u64, n: usize, rule: PrintabilityRule, grid: &mut OverlapGrid) -> bool {
    if rule.canonical_only {
        return lays_flat(x, n, rule.with_glue, grid);
    }
    let rev = packed::reverse(x, n);
    (0..n).any(|r| {
        lays_flat(packed::rotate(x, r, n), n, rule.with_glue, grid)
            || lays_flat(packed::rotate(rev, r, n), n, rule.with_glue, grid)
    })
}

/// Number of classes with `n` faces that have a printable strip.
pub fn printable_class_count(n: usize) -> Result<ExactCount> {
    printable_class_count_with(n, DEFAULT_PRINTABLE_LIMIT, PrintabilityRule::default(), Execution::default())
}

pub fn printable_class_count_with(
    n: usize,
    limit: usize,
    rule: PrintabilityRule,
    execution: Execution,
) -> Result<ExactCount> {
    check_range(n, limit)?;
    let keys = canonical_keys(n, execution);
    let flags = crate::par::map_with_scratch(
        execution,
        &keys,
        || OverlapGrid::new(n + 1),
        |grid, &x| printable_packed(x, n, rule, grid),
    );
    Ok(BigUint::from(flags.into_iter().filter(|&p| p).count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::enumerate_classes;

    fn seq(v: &[i64]) -> SignSequence {
        SignSequence::from_values(v).unwrap()
    }

    #[test]
    fn adjacency_is_symmetric_and_alternating() {
        for x in -3..3 {
            for y in -3..3 {
                for c in [LatticeCell::up(x, y), LatticeCell::down(x, y)] {
                    for nb in c.neighbours() {
                        assert_ne!(nb.orient, c.orient);
                        assert!(nb.neighbours().contains(&c));
                        // Adjacent cells share exactly one edge.
                        let shared = c.corners().iter().filter(|p| nb.corners().contains(p)).count();
                        assert_eq!(shared, 2);
                    }
                }
            }
        }
        assert_eq!(
            LatticeCell::up(0, 0).neighbours(),
            [LatticeCell::down(0, -1), LatticeCell::down(0, 0), LatticeCell::down(-1, 0)]
        );
    }

    #[test]
    fn expansion() {
        assert_eq!(expand_signs(&seq(&[1, 1, 1])), vec![Sign::Plus; 9]);
        let e = expand_signs(&seq(&[1, 1, -1, -1]));
        assert_eq!(e.len(), 12);
        assert!((0..8).all(|i| e[i] == e[i + 4]));
    }

    #[test]
    fn trihexaflexagon_is_a_straight_row() {
        let strip = lay_strip(&seq(&[1, 1, 1]), false).unwrap();
        let expected: Vec<LatticeCell> = (0..9)
            .map(|j| if j % 2 == 0 { LatticeCell::up(j / 2, 0) } else { LatticeCell::down(j / 2, 0) })
            .collect();
        assert_eq!(strip.cells(), expected.as_slice());
        assert!(!strip.overlaps());
        assert_eq!(lay_strip(&seq(&[1, 1, 1]), true).unwrap().len(), 10);
    }

    #[test]
    fn classic_hexaflexagons_lay_flat() {
        let strip = lay_strip(&seq(&[1, 1, 1, -1, -1, -1]), false).unwrap();
        assert_eq!(strip.len(), 18);
        assert!(!strip.overlaps());
        assert!(is_printable(&seq(&[1, 1, -1, -1])).unwrap());
        assert!(is_printable(&seq(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn seven_face_example_overlaps() {
        let s = seq(&[1, 1, 1, 1, -1, 1, -1]);
        assert!(lay_strip(&s, false).unwrap().overlaps());
        assert!(!is_printable(&s).unwrap());
    }

    #[test]
    fn invalid_input_is_rejected() {
        assert!(lay_strip(&seq(&[1, -1, 1, -1]), false).is_err());
        assert!(is_printable(&seq(&[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn strip_invariants_hold_exhaustively() {
        for n in 3..=14 {
            for record in enumerate_classes(n).unwrap() {
                for s in record.sequence.orbit().take(n) {
                    let strip = lay_strip(&s, true).unwrap();
                    assert_eq!(strip.len(), 3 * n + 1);
                    for w in strip.cells().windows(2) {
                        assert!(w[0].is_adjacent(&w[1]));
                        assert_ne!(w[0].orient, w[1].orient);
                    }
                }
            }
        }
    }

    #[test]
    fn runs_are_straight() {
        // Cells spanned by a run of equal expanded signs share one lattice row
        // direction: all corners lie between two parallel lattice lines.
        for n in 3..=10 {
            for record in enumerate_classes(n).unwrap() {
                let strip = lay_strip(&record.sequence, false).unwrap();
                let e = strip.expanded_signs();
                let mut start = 0;
                for j in 1..=e.len() {
                    if j == e.len() || e[j] != e[j - 1] {
                        // Cells start..=j (the run's triangles plus the next)
                        // lie in a band: one of the three lattice line
                        // families is constant across their shared edges.
                        let cells = &strip.cells()[start..=j.min(strip.len() - 1)];
                        assert!(in_one_band(cells), "n={n} {}", record.sequence);
                        start = j;
                    }
                }
            }
        }
    }

    /// Whether all cells lie in one band between adjacent parallel lattice
    /// lines of some direction.
    fn in_one_band(cells: &[LatticeCell]) -> bool {
        let families: [fn(&LatticeCell) -> i32; 3] = [|c| c.y, |c| c.x, |c| {
            // Lines x + y = const; up cells lie in band x + y, down in x + y + 1.
            c.x + c.y + i32::from(c.orient == Orientation::Down)
        }];
        families.iter().any(|f| cells.iter().all(|c| f(c) == f(&cells[0])))
    }

    #[test]
    fn fast_route_agrees_with_reference() {
        let mut grid = OverlapGrid::new(12);
        for n in 3..=11 {
            for record in enumerate_classes(n).unwrap() {
                let x = packed::pack(&record.sequence);
                let fast = printable_packed(x, n, PrintabilityRule::default(), &mut grid);
                assert_eq!(fast, is_printable(&record.sequence).unwrap(), "{}", record.sequence);
                let canonical = PrintabilityRule { canonical_only: true, ..Default::default() };
                assert_eq!(
                    printable_packed(x, n, canonical, &mut grid),
                    !lay_strip(&record.sequence, false).unwrap().overlaps()
                );
            }
        }
    }

    #[test]
    fn printability_ignores_reversal_and_inversion() {
        for n in 3..=12 {
            for record in enumerate_classes(n).unwrap() {
                let s = record.sequence.as_sequence();
                let p = is_printable(s).unwrap();
                assert_eq!(is_printable(&s.invert()).unwrap(), p);
                assert_eq!(is_printable(&s.reverse()).unwrap(), p);
                // Inversion does not even move a cell.
                assert_eq!(lay_strip(s, true).unwrap().cells(), lay_strip(&s.invert(), true).unwrap().cells());
            }
        }
    }

    #[test]
    fn small_printable_counts() {
        let expected = [(3, 1u32), (4, 1), (5, 1), (6, 3), (7, 2), (8, 5), (12, 21)];
        for (n, hp) in expected {
            assert_eq!(printable_class_count(n).unwrap(), BigUint::from(hp), "n={n}");
        }
        assert!(printable_class_count(27).is_err());
    }
}
