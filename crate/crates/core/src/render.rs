//! SVG nets and CSV count tables.

use std::collections::HashMap;
use std::fmt::Write;

use crate::geometry::{printable_class_count_with, PrintabilityRule, TriangleStrip};
use crate::labeling::{Side, StripLabels};
use crate::{hexaflexagon_count, Error, ExactCount, Execution, Result};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Default edge length in SVG user units.
pub const DEFAULT_SCALE: f64 = 40.0;

fn cartesian((a, b): (i32, i32)) -> (f64, f64) {
    (f64::from(a) + 0.5 * f64::from(b), f64::from(b) * SQRT3_2)
}

fn fmt_num(v: f64) -> String {
    // Adding zero turns -0.0 into 0.0.
    format!("{:.3}", v + 0.0)
}

/// Renders one side of a labelled strip as an SVG 1.1 document.
///
/// The front shows the top labels. The back shows the bottom labels with
/// the geometry mirrored left to right, so both sides line up when printed
/// double-sided. Edges between consecutive triangles are dashed fold lines,
/// all other edges are solid cut lines.
pub fn render_strip(strip: &TriangleStrip, labels: &StripLabels, side: Side, scale: f64) -> Result<String> {
    if labels.len() != strip.len() {
        return Err(Error::LengthMismatch { what: "strip labels", expected: strip.len(), actual: labels.len() });
    }
    let mirror = if side == Side::Back { -1.0 } else { 1.0 };
    let to_page = |p: (i32, i32)| {
        let (x, y) = cartesian(p);
        (mirror * x * scale, -y * scale)
    };

    let cells = strip.cells();
    let corners: Vec<[(f64, f64); 3]> =
        cells.iter().map(|c| c.corners().map(to_page)).collect();
    let margin = scale / 2.0;
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in corners.iter().flatten() {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let shift = |(x, y): (f64, f64)| (x - min_x + margin, y - min_y + margin);
    let width = max_x - min_x + 2.0 * margin;
    let height = max_y - min_y + 2.0 * margin;

    let n = strip.expanded_signs().len() / 3;
    let signs: String = strip.expanded_signs()[..n].iter().map(|s| s.symbol()).collect();
    let side_name = match side {
        Side::Front => "front",
        Side::Back => "back",
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = fmt_num(width),
        h = fmt_num(height)
    );
    let _ = writeln!(out, "<title>hexaflexagon {signs} ({side_name})</title>");

    out.push_str("<g id=\"faces\" fill=\"#ffffff\" stroke=\"none\">\n");
    for (i, tri) in corners.iter().enumerate() {
        let points: Vec<String> = tri
            .iter()
            .map(|&p| {
                let (x, y) = shift(p);
                format!("{},{}", fmt_num(x), fmt_num(y))
            })
            .collect();
        let _ = writeln!(out, "<polygon id=\"t{}\" points=\"{}\"/>", i + 1, points.join(" "));
    }
    out.push_str("</g>\n");

    // Each lattice edge once, in strip order, tagged fold or cut.
    let mut owner: HashMap<((i32, i32), (i32, i32)), usize> = HashMap::new();
    let mut cuts = String::new();
    let mut folds = String::new();
    for (i, cell) in cells.iter().enumerate() {
        let c = cell.corners();
        for e in 0..3 {
            let (a, b) = (c[e], c[(e + 1) % 3]);
            let key = (a.min(b), a.max(b));
            if owner.contains_key(&key) {
                continue;
            }
            owner.insert(key, i);
            let neighbour_in_strip = [i.checked_sub(1), Some(i + 1)]
                .into_iter()
                .flatten()
                .filter(|&j| j < cells.len())
                .any(|j| {
                    let d = cells[j].corners();
                    d.contains(&a) && d.contains(&b)
                });
            let (x1, y1) = shift(to_page(a));
            let (x2, y2) = shift(to_page(b));
            let line = format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                fmt_num(x1),
                fmt_num(y1),
                fmt_num(x2),
                fmt_num(y2)
            );
            if neighbour_in_strip {
                folds.push_str(&line);
            } else {
                cuts.push_str(&line);
            }
        }
    }
    let stroke = fmt_num(scale / 40.0);
    let _ = writeln!(out, "<g id=\"cuts\" stroke=\"#000000\" stroke-width=\"{stroke}\" fill=\"none\">");
    out.push_str(&cuts);
    out.push_str("</g>\n");
    let _ = writeln!(
        out,
        "<g id=\"folds\" stroke=\"#000000\" stroke-width=\"{stroke}\" stroke-dasharray=\"{} {}\" fill=\"none\">",
        fmt_num(scale / 10.0),
        fmt_num(scale / 13.0)
    );
    out.push_str(&folds);
    out.push_str("</g>\n");

    let _ = writeln!(
        out,
        "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">",
        fmt_num(scale * 0.3)
    );
    for (i, (tri, label)) in corners.iter().zip(labels.side(side)).enumerate() {
        let cx = tri.iter().map(|p| p.0).sum::<f64>() / 3.0;
        let cy = tri.iter().map(|p| p.1).sum::<f64>() / 3.0;
        let (x, y) = shift((cx, cy));
        let _ = writeln!(out, "<text id=\"l{}\" x=\"{}\" y=\"{}\">{label}</text>", i + 1, fmt_num(x), fmt_num(y));
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

/// One row of a count table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: u32,
    pub classes: ExactCount,
    pub printable: Option<ExactCount>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// `H(n)` for `min..=max`, plus `H_p(n)` when `printable` is set.
    pub fn build(min: u32, max: u32, printable: Option<(usize, Execution)>) -> Result<CountTable> {
        let mut rows = Vec::new();
        for n in min..=max {
            let classes = hexaflexagon_count(n)?;
            let printable = match printable {
                Some((limit, exec)) => {
                    Some(printable_class_count_with(n as usize, limit, PrintabilityRule::default(), exec)?)
                }
                None => None,
            };
            rows.push(CountRow { n, classes, printable });
        }
        Ok(CountTable { rows })
    }
}

/// CSV with header `n,H,Hp`. The `Hp` column is left out when no row has
/// a printable count.
pub fn render_table(table: &CountTable) -> Result<String> {
    if table.rows.is_empty() {
        return Err(Error::EmptyTable);
    }
    let with_printable = table.rows.iter().any(|r| r.printable.is_some());
    let mut out = String::from(if with_printable { "n,H,Hp\n" } else { "n,H\n" });
    for row in &table.rows {
        let _ = write!(out, "{},{}", row.n, row.classes);
        if with_printable {
            out.push(',');
            if let Some(p) = &row.printable {
                let _ = write!(out, "{p}");
            }
        }
        out.push('\n');
    }
    Ok(out)
}
