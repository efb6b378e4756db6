//! Plain-text, SVG and TikZ figure emission for snake graphs, their lattice
//! paths, and the lambda/mu shading. All output is a pure function of the
//! input, so repeated runs are byte-identical.

use std::fmt::Write as _;

use crate::partition::Partition;
use crate::snake::{SnakeGraph, SnakePath};

const UNIT: usize = 30;
const GAP: usize = 20;

/// One `#` per tile, rows printed top-down.
pub fn ascii_snake(g: &SnakeGraph) -> String {
    let (xmax, ymax) = g.top_right_cell();
    let mut rows = vec![vec![b' '; xmax + 1]; ymax + 1];
    for &(x, y) in g.cells() {
        rows[y][x] = b'#';
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        let line = String::from_utf8(row.clone()).expect("ascii");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The lambda grid with the mu cells dotted out; the remaining `#` cells are
/// exactly the snake (the skew shape lambda/mu).
pub fn ascii_snake_shaded(lam: &Partition, mu: &Partition) -> String {
    let mut out = String::new();
    for (i, &len) in lam.parts().iter().enumerate() {
        let shaded = mu.part(i);
        for x in 0..len {
            out.push(if x < shaded { '.' } else { '#' });
        }
        out.push('\n');
    }
    out
}

/// Cells of a partition in snake-grid coordinates (rows top-down map to
/// decreasing `y`).
fn partition_cells(p: &Partition, grid_height: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &len) in p.parts().iter().enumerate() {
        let y = grid_height - 1 - i;
        for x in 0..len {
            cells.push((x, y));
        }
    }
    cells
}

/// SVG small multiples: one panel for the snake itself (optionally with the
/// lambda grid and gray mu shading), then one panel per path.
pub fn svg_snake(
    g: &SnakeGraph,
    shade: Option<(&Partition, &Partition)>,
    paths: &[SnakePath],
) -> String {
    let (xmax, ymax) = g.top_right_cell();
    let (w, h) = (xmax + 1, ymax + 1);
    let panel_w = w * UNIT;
    let panel_h = h * UNIT;
    let panels = 1 + paths.len();
    let total_w = panels * panel_w + (panels - 1) * GAP + 2 * GAP;
    let total_h = panel_h + 2 * GAP;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total_w}\" height=\"{total_h}\" viewBox=\"0 0 {total_w} {total_h}\">"
    );
    let cell_rect = |out: &mut String, x: usize, y: usize, fill: &str| {
        let px = x * UNIT;
        let py = (ymax - y) * UNIT;
        let _ = writeln!(
            out,
            "  <rect x=\"{px}\" y=\"{py}\" width=\"{UNIT}\" height=\"{UNIT}\" fill=\"{fill}\" stroke=\"#444444\"/>"
        );
    };
    for panel in 0..panels {
        let tx = GAP + panel * (panel_w + GAP);
        let _ = writeln!(out, " <g transform=\"translate({tx},{GAP})\">");
        if panel == 0 {
            if let Some((lam, mu)) = shade {
                for (x, y) in partition_cells(lam, h) {
                    cell_rect(&mut out, x, y, "#ffffff");
                }
                for (x, y) in partition_cells(mu, h) {
                    cell_rect(&mut out, x, y, "#cccccc");
                }
            } else {
                for &(x, y) in g.cells() {
                    cell_rect(&mut out, x, y, "#ffffff");
                }
            }
        } else {
            for &(x, y) in g.cells() {
                cell_rect(&mut out, x, y, "#ffffff");
            }
            let path = &paths[panel - 1];
            let pts: Vec<String> = path
                .vertices()
                .iter()
                .map(|&(x, y)| format!("{},{}", x * UNIT, (h - y) * UNIT))
                .collect();
            let _ = writeln!(
                out,
                "  <polyline points=\"{}\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"4\"/>",
                pts.join(" ")
            );
        }
        let _ = writeln!(out, " </g>");
    }
    out.push_str("</svg>\n");
    out
}

/// TikZ small multiples with the same layout as [`svg_snake`].
pub fn tikz_snake(
    g: &SnakeGraph,
    shade: Option<(&Partition, &Partition)>,
    paths: &[SnakePath],
) -> String {
    let (xmax, ymax) = g.top_right_cell();
    let (w, h) = (xmax + 1, ymax + 1);
    let mut out = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    let panels = 1 + paths.len();
    for panel in 0..panels {
        let shift_x = panel * (w + 1);
        let _ = writeln!(out, " \\begin{{scope}}[shift={{({shift_x},0)}}]");
        if panel == 0 {
            if let Some((lam, mu)) = shade {
                for (x, y) in partition_cells(mu, h) {
                    let _ = writeln!(
                        out,
                        "  \\fill[gray, opacity=0.5] ({x},{y}) rectangle ({},{});",
                        x + 1,
                        y + 1
                    );
                }
                for (x, y) in partition_cells(lam, h) {
                    let _ = writeln!(out, "  \\draw ({x},{y}) rectangle ({},{});", x + 1, y + 1);
                }
            } else {
                for &(x, y) in g.cells() {
                    let _ = writeln!(out, "  \\draw ({x},{y}) rectangle ({},{});", x + 1, y + 1);
                }
            }
        } else {
            for &(x, y) in g.cells() {
                let _ = writeln!(out, "  \\draw ({x},{y}) rectangle ({},{});", x + 1, y + 1);
            }
            let path = &paths[panel - 1];
            let pts: Vec<String> = path
                .vertices()
                .iter()
                .map(|&(x, y)| format!("({x},{y})"))
                .collect();
            let _ = writeln!(
                out,
                "  \\draw[red, line width=1.2] {};",
                pts.join(" -- ")
            );
        }
        out.push_str(" \\end{scope}\n");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
