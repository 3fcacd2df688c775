//! ASCII and SVG renderings of a path.
//!
//! Both renderings are pure functions of the path and the spec, built from
//! integer arithmetic only, so their byte output is stable across runs and
//! platforms and can be pinned by golden files.

use std::collections::HashSet;
use std::fmt::Write;

use pathforge::{band_of, to_checkmarks, Band, Path};

/// What to draw and how.
#[derive(Debug, Clone, Copy)]
pub struct RenderSpec {
    pub svg: bool,
    pub show_bands: bool,
    pub show_peaks: bool,
    pub show_checkmarks: bool,
    /// SVG pixels per lattice unit; ignored by the ASCII renderer.
    pub cell_size: u32,
}

pub fn render(path: &Path, spec: &RenderSpec) -> String {
    if spec.svg {
        render_svg(path, spec)
    } else {
        render_ascii(path, spec)
    }
}

/// Vertex grid: one column per vertex, one row per height, `*` for path
/// vertices (`^` for peaks when requested). Band letters and the checkmark
/// pair are appended as annotation lines.
fn render_ascii(path: &Path, spec: &RenderSpec) -> String {
    let heights = path.heights();
    let peaks: HashSet<usize> = if spec.show_peaks {
        path.turns().peaks.into_iter().collect()
    } else {
        HashSet::new()
    };

    let mut lines = Vec::new();
    for h in (path.min_height()..=path.max_height()).rev() {
        let row: String = heights
            .iter()
            .enumerate()
            .map(|(i, &hi)| {
                if hi != h {
                    ' '
                } else if peaks.contains(&i) {
                    '^'
                } else {
                    '*'
                }
            })
            .collect();
        lines.push(row.trim_end().to_string());
    }

    if spec.show_bands {
        let letters: String = path
            .word()
            .steps()
            .iter()
            .enumerate()
            .map(|(j, &s)| match band_of(s, heights[j]) {
                Band::Odd => 'a',
                Band::Even => 'b',
            })
            .collect();
        lines.push(format!("bands: {letters}"));
    }
    if spec.show_checkmarks {
        lines.push(format!("checkmarks: {}", to_checkmarks(path)));
    }

    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn render_svg(path: &Path, spec: &RenderSpec) -> String {
    let n = path.half_len() as i64;
    let len = path.len() as i64;
    let heights = path.heights();
    let cell = i64::from(spec.cell_size);
    let margin = 2 * cell;

    // With the bounding box shown the canvas covers the whole square;
    // otherwise just the path's own strip (axis included).
    let (top, bottom) = if spec.show_checkmarks {
        (n, -n)
    } else {
        (path.max_height().max(0), path.min_height().min(0))
    };
    let width = len * cell + 2 * margin;
    let height = (top - bottom) * cell + 2 * margin;
    let x = |i: i64| margin + i * cell;
    let y = |h: i64| margin + (top - h) * cell;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );

    if spec.show_bands {
        // shade the odd bands, only across the strip the path actually spans
        for level in path.min_height()..path.max_height() {
            if level.rem_euclid(2) == 0 {
                let _ = writeln!(
                    svg,
                    "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{cell}\" fill=\"#e0e0e0\"/>",
                    x(0),
                    y(level + 1),
                    len * cell
                );
            }
        }
    }

    // emphasized baseline
    let _ = writeln!(
        svg,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" stroke-width=\"2\"/>",
        x(0),
        y(0),
        x(len),
        y(0)
    );

    if spec.show_checkmarks {
        let _ = writeln!(
            svg,
            "  <polygon points=\"{},{} {},{} {},{} {},{}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>",
            x(0), y(0), x(n), y(n), x(len), y(0), x(n), y(-n)
        );
    }

    let points: Vec<String> = heights
        .iter()
        .enumerate()
        .map(|(i, &h)| format!("{},{}", x(i as i64), y(h)))
        .collect();
    let stroke = (cell / 8).max(1);
    let _ = writeln!(
        svg,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{stroke}\" stroke-linejoin=\"round\" stroke-linecap=\"round\"/>",
        points.join(" ")
    );

    if spec.show_peaks {
        let radius = (cell / 6).max(2);
        for i in path.turns().peaks {
            let _ = writeln!(
                svg,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"#000000\"/>",
                x(i as i64),
                y(heights[i])
            );
        }
    }

    if spec.show_checkmarks {
        let pair = to_checkmarks(path);
        let font = (cell / 2).max(8);
        let nw_labels = pair.nw().arrow_labels();
        let sw_labels = pair.sw().arrow_labels();
        // north-west labels sit above-left of the box vertices (k-1, k-1);
        // south-west labels below-left of (k, -k); marked ones get a tick
        for k in 1..=n {
            let marked = nw_labels.contains(&(k as usize));
            let _ = writeln!(
                svg,
                "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{font}\" text-anchor=\"end\"{}>{}</text>",
                x(k - 1) - cell / 4,
                y(k - 1) - cell / 4,
                if marked { " font-weight=\"bold\" fill=\"#000000\"" } else { " fill=\"#999999\"" },
                if marked { format!("{k}\u{2713}") } else { k.to_string() }
            );
        }
        for k in 1..n {
            let marked = sw_labels.contains(&(k as usize));
            let _ = writeln!(
                svg,
                "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{font}\" text-anchor=\"end\"{}>{}</text>",
                x(k) - cell / 4,
                y(-k) + cell / 2 + cell / 4,
                if marked { " font-weight=\"bold\" fill=\"#000000\"" } else { " fill=\"#999999\"" },
                if marked { format!("{k}\u{2713}") } else { k.to_string() }
            );
        }
    }

    svg.push_str("</svg>\n");
    svg
}
