//! Deterministic text and SVG pictures of triangles, slice partitions, and
//! cones.
//!
//! The triangle pictures use the staggered array layout: the diagonal
//! entries `c_{ii}` across the top row, each longer interval one row lower
//! and shifted half a cell, down to `c_{1n}` alone at the bottom. The
//! interval `[i,j]` sits at abscissa `i + j − (n+1)` and depth `j − i`.
//! Slice pictures place the slice number of each interval at the same
//! coordinates; component panels keep only one component's portions and mark
//! everything else with `o`.
//!
//! All output is a pure function of the input — SVG files are reproducible
//! byte for byte.

use thiserror::Error;

use crate::ar::{components_of, slices_for};
use crate::cone::ConeSpec;
use crate::crystal::Triangle;
use crate::linmap::root_label;
use crate::quiver::{QuiverA, RootInterval};

/// Output flavor of the renderers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// Monospace text.
    Text,
    /// Standalone SVG, deterministic byte for byte.
    Svg,
}

/// Rendering errors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RenderError {
    /// Component index out of range for the quiver.
    #[error("component {index} does not exist: quiver has {count} components")]
    NoSuchComponent {
        /// The requested 1-based index.
        index: usize,
        /// How many components the quiver has.
        count: usize,
    },
}

/// One placed cell of the staggered grid: row depth `j − i`, column
/// `2i + (j−i) − 2`, and its content.
struct Cell {
    depth: usize,
    col: usize,
    text: String,
}

/// Lay out one string per interval of rank `n` in the staggered triangle
/// grid.
fn grid_cells(n: usize, cell: impl Fn(RootInterval) -> String) -> (Vec<Cell>, usize) {
    let mut cells = Vec::with_capacity(n * (n + 1) / 2);
    let mut width = 1;
    for depth in 0..n {
        for i in 1..=n - depth {
            let text = cell(RootInterval::new(i, i + depth));
            width = width.max(text.len());
            cells.push(Cell {
                depth,
                col: 2 * i + depth - 2,
                text,
            });
        }
    }
    (cells, width)
}

/// Render grid cells (plus optional footer line) as text. Columns are half
/// a cell wide, so consecutive rows interleave like the printed figures.
fn grid_text(n: usize, cells: &[Cell], width: usize, footer: Option<&str>) -> String {
    let half = (width + 1).div_ceil(2);
    let mut lines = vec![String::new(); n];
    for c in cells {
        let pos = c.col * half;
        let line = &mut lines[c.depth];
        while line.len() < pos {
            line.push(' ');
        }
        line.push_str(&c.text);
    }
    if let Some(f) = footer {
        lines.push(f.to_owned());
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Shared SVG skeleton: place prepared (x, y, text) runs on a light canvas.
fn svg_document(rows: &[(usize, usize, String)], width_px: usize, height_px: usize) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width_px}\" height=\"{height_px}\" \
         viewBox=\"0 0 {width_px} {height_px}\">\n"
    ));
    out.push_str(
        "<style>text{font-family:\"DejaVu Sans Mono\",monospace;font-size:15px;fill:#1c1c2e}</style>\n",
    );
    out.push_str(&format!(
        "<rect width=\"{width_px}\" height=\"{height_px}\" fill=\"#fdfdf8\"/>\n"
    ));
    for (x, y, text) in rows {
        out.push_str(&format!(
            "<text x=\"{x}\" y=\"{y}\">{}</text>\n",
            xml_escape(text)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Render grid cells as SVG using the text layout's character metrics.
fn grid_svg(cells: &[Cell], width: usize, footer: Option<&str>) -> String {
    const CHAR_W: usize = 9;
    const ROW_H: usize = 26;
    const MARGIN: usize = 20;
    let half = (width + 1).div_ceil(2);
    let mut rows = Vec::with_capacity(cells.len() + 1);
    let mut max_x = 0;
    let mut max_depth = 0;
    for c in cells {
        let x = MARGIN + c.col * half * CHAR_W;
        let y = MARGIN + 15 + c.depth * ROW_H;
        max_x = max_x.max(x + c.text.len() * CHAR_W);
        max_depth = max_depth.max(c.depth);
        rows.push((x, y, c.text.clone()));
    }
    let mut height = MARGIN * 2 + 15 + max_depth * ROW_H;
    if let Some(f) = footer {
        let y = MARGIN + 15 + (max_depth + 1) * ROW_H;
        max_x = max_x.max(MARGIN + f.len() * CHAR_W);
        height += ROW_H;
        rows.push((MARGIN, y, f.to_owned()));
    }
    svg_document(&rows, max_x + MARGIN, height)
}

fn grid_render(
    n: usize,
    fmt: RenderFormat,
    footer: Option<&str>,
    cell: impl Fn(RootInterval) -> String,
) -> String {
    let (cells, width) = grid_cells(n, cell);
    match fmt {
        RenderFormat::Text => grid_text(n, &cells, width, footer),
        RenderFormat::Svg => grid_svg(&cells, width, footer),
    }
}

/// The labeled triangle array of rank `n`: which coordinate sits where.
///
/// ```
/// use canbase::render::{triangle_labels, RenderFormat};
///
/// let top = triangle_labels(2, RenderFormat::Text);
/// assert_eq!(top, "c_1_1 c_2_2\n   c_1_2\n");
/// ```
#[must_use]
pub fn triangle_labels(n: usize, fmt: RenderFormat) -> String {
    grid_render(n, fmt, None, root_label)
}

/// A triangle's entries in the staggered array layout.
#[must_use]
pub fn triangle_values(t: &Triangle, fmt: RenderFormat) -> String {
    grid_render(t.n(), fmt, None, |r| t.get(r.lo(), r.hi()).to_string())
}

/// The slice numbers of all intervals, in the array layout.
#[must_use]
pub fn slice_numbers(q: &QuiverA, fmt: RenderFormat) -> String {
    let slices = slices_for(q);
    grid_render(q.rank(), fmt, None, |r| slices.slice_of(r).to_string())
}

/// One component's occupancy panel: intervals in the component's slice
/// portions show their slice number, everything else shows `o`.
///
/// # Errors
/// [`RenderError::NoSuchComponent`] when `index` (1-based) exceeds the
/// component count.
pub fn component_panel(
    q: &QuiverA,
    index: usize,
    fmt: RenderFormat,
) -> Result<String, RenderError> {
    let comps = components_of(q);
    if index == 0 || index > comps.len() {
        return Err(RenderError::NoSuchComponent {
            index,
            count: comps.len(),
        });
    }
    let comp = comps[index - 1];
    let slices = slices_for(q);
    let footer = format!("Component {index}");
    Ok(grid_render(q.rank(), fmt, Some(&footer), |r| {
        let z = slices.slice_of(r);
        if slices.portion(z, &comp).contains(&r) {
            z.to_string()
        } else {
            "o".to_owned()
        }
    }))
}

/// A cone as a labeled inequality listing.
#[must_use]
pub fn cone_listing(cone: &ConeSpec, title: &str, fmt: RenderFormat) -> String {
    let mut lines = vec![format!("{title}: {} rows", cone.rows().len())];
    for row in cone.rows() {
        lines.push(format!(
            "  {}  ({})",
            row.inequality(cone.coord_labels()),
            row.label
        ));
    }
    match fmt {
        RenderFormat::Text => {
            let mut out = lines.join("\n");
            out.push('\n');
            out
        }
        RenderFormat::Svg => {
            const CHAR_W: usize = 9;
            const ROW_H: usize = 26;
            const MARGIN: usize = 20;
            let rows: Vec<(usize, usize, String)> = lines
                .iter()
                .enumerate()
                .map(|(i, l)| (MARGIN, MARGIN + 15 + i * ROW_H, l.clone()))
                .collect();
            let width = MARGIN * 2 + CHAR_W * lines.iter().map(String::len).max().unwrap_or(0);
            let height = MARGIN * 2 + 15 + ROW_H * (lines.len() - 1);
            svg_document(&rows, width, height)
        }
    }
}
