//! Label sequences and the top/bottom face labels of each strip triangle.
//!
//! The construction starts from the path `1, 2, 3` (all `+`). Extending at
//! path position `i` inserts a node carrying the next unused label and the
//! negated sign of node `i` just before it, and negates node `i`. The sign
//! projection therefore follows [`SignSequence::extend`].
//!
//! Triangle `j` of the strip (1-based) gets the label-sequence entry
//! `((j - 1) mod n) + 1` on its top side when `j` is odd and on its bottom
//! side when `j` is even; the other side carries that label minus one, with
//! `0` read as `n`.

use std::collections::HashSet;

use crate::sequences::{ExtensionHistory, Sign, SignSequence};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternNode {
    pub label: u32,
    pub sign: Sign,
}

/// Cyclic path of `(label, sign)` nodes. Labels are a permutation of `1..=n`
/// and the signs form a valid sign sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternPath {
    nodes: Vec<PatternNode>,
}

impl PatternPath {
    pub fn new(nodes: Vec<PatternNode>) -> Result<Self> {
        let n = nodes.len();
        let mut seen = HashSet::new();
        for node in &nodes {
            if node.label == 0 || node.label as usize > n || !seen.insert(node.label) {
                return Err(Error::BadLabel { label: node.label, n });
            }
        }
        let path = PatternPath { nodes };
        path.signs()?.validate()?;
        Ok(path)
    }

    pub fn nodes(&self) -> &[PatternNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn labels(&self) -> Vec<u32> {
        self.nodes.iter().map(|n| n.label).collect()
    }

    /// The sign projection.
    pub fn signs(&self) -> Result<SignSequence> {
        SignSequence::new(self.nodes.iter().map(|n| n.sign).collect())
    }

    /// Starts the path at node `offset` (0-based), keeping labels.
    pub fn rotated(&self, offset: usize) -> PatternPath {
        let mut nodes = self.nodes.clone();
        let len = nodes.len();
        nodes.rotate_left(offset % len);
        PatternPath { nodes }
    }

    fn inverted(&self) -> PatternPath {
        let nodes = self.nodes.iter().map(|n| PatternNode { label: n.label, sign: -n.sign }).collect();
        PatternPath { nodes }
    }

    /// Renames faces cyclically so the first node carries label 1.
    fn relabelled_from_one(&self) -> PatternPath {
        let n = self.nodes.len() as u32;
        let first = self.nodes[0].label;
        let nodes = self
            .nodes
            .iter()
            .map(|node| PatternNode { label: (node.label + n - first) % n + 1, sign: node.sign })
            .collect();
        PatternPath { nodes }
    }
}

/// Replays an extension history on the labelled path.
pub fn build_pattern(history: &ExtensionHistory) -> PatternPath {
    let mut nodes: Vec<PatternNode> =
        (1..=3).map(|label| PatternNode { label, sign: Sign::Plus }).collect();
    for &position in history.steps() {
        let i = position - 1;
        let flipped = -nodes[i].sign;
        let label = nodes.len() as u32 + 1;
        nodes[i].sign = flipped;
        nodes.insert(i, PatternNode { label, sign: flipped });
    }
    PatternPath { nodes }
}

/// A pattern whose sign projection is exactly `signs`.
///
/// Built from [`SignSequence::reduction_history`], then rotated (and
/// sign-flipped, which leaves the strip unchanged) to line up with `signs`,
/// and finally renamed cyclically so that the path starts at face 1.
pub fn pattern_for(signs: &SignSequence) -> Result<PatternPath> {
    let base = build_pattern(&signs.reduction_history()?);
    let n = signs.len();
    for candidate in [base.clone(), base.inverted()] {
        for r in 0..n {
            let rotated = candidate.rotated(r);
            if rotated.signs()? == *signs {
                return Ok(rotated.relabelled_from_one());
            }
        }
    }
    unreachable!("reduction history replays to a rotation or inversion of its input")
}

/// Which face of the printed strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Front,
    Back,
}

/// Per-triangle labels; `top` is printed on the front, `bottom` on the back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripLabels {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl StripLabels {
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn side(&self, side: Side) -> &[u32] {
        match side {
            Side::Front => &self.top,
            Side::Back => &self.bottom,
        }
    }
}

/// Labels for `3n` triangles, or `3n + 1` with the glue triangle.
pub fn strip_labels(pattern: &PatternPath, glue: bool) -> StripLabels {
    let n = pattern.len();
    let count = 3 * n + usize::from(glue);
    let mut top = Vec::with_capacity(count);
    let mut bottom = Vec::with_capacity(count);
    for j in 1..=count {
        let primary = pattern.nodes[(j - 1) % n].label;
        let secondary = if primary == 1 { n as u32 } else { primary - 1 };
        if j % 2 == 1 {
            top.push(primary);
            bottom.push(secondary);
        } else {
            top.push(secondary);
            bottom.push(primary);
        }
    }
    StripLabels { top, bottom }
}
