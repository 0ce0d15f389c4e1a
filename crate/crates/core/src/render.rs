//! SVG drawings of involution plots and lattice paths.

use std::fmt::Write;

use crate::paths::{LatticePath, Step};
use crate::perm::Permutation;

const CELL: usize = 20;
const MARGIN: usize = 20;

fn header(w: usize, h: usize) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    )
}

/// The plot of `p`: the polyline through `(i, p(i))` with the diagonal
/// dashed. The y axis points up.
pub fn plot_svg(p: &Permutation) -> String {
    let n = p.len();
    let size = 2 * MARGIN + n.saturating_sub(1) * CELL;
    let x = |i: usize| MARGIN + (i - 1) * CELL;
    let y = |v: usize| size - MARGIN - (v - 1) * CELL;
    let mut s = header(size, size);
    let _ = writeln!(
        s,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>",
        x(1),
        y(1),
        x(n),
        y(n)
    );
    let points: Vec<String> = (1..=n)
        .map(|i| format!("{},{}", x(i), y(p.image(i))))
        .collect();
    let _ = writeln!(
        s,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\"/>",
        points.join(" ")
    );
    for i in 1..=n {
        let _ = writeln!(
            s,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\"/>",
            x(i),
            y(p.image(i))
        );
    }
    s.push_str("</svg>\n");
    s
}

/// A lattice path drawn with unit diagonal steps; labels other than 1 are
/// printed above their down steps.
pub fn path_svg(m: &LatticePath) -> String {
    let heights = m.heights().unwrap_or_else(|| vec![0; m.len() + 1]);
    let top = heights.iter().copied().max().unwrap_or(0);
    let w = 2 * MARGIN + m.len() * CELL;
    let h = 2 * MARGIN + top * CELL;
    let x = |i: usize| MARGIN + i * CELL;
    let y = |k: usize| h - MARGIN - k * CELL;
    let mut s = header(w, h);
    let points: Vec<String> = heights
        .iter()
        .enumerate()
        .map(|(i, &k)| format!("{},{}", x(i), y(k)))
        .collect();
    let _ = writeln!(
        s,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\"/>",
        points.join(" ")
    );
    for (i, &k) in heights.iter().enumerate() {
        let _ = writeln!(s, "  <circle cx=\"{}\" cy=\"{}\" r=\"2\"/>", x(i), y(k));
    }
    let mut labels = m.labels().iter();
    for (i, step) in m.steps().iter().enumerate() {
        if *step == Step::Down {
            let l = labels.next().copied().unwrap_or(1);
            if l != 1 {
                let _ = writeln!(
                    s,
                    "  <text x=\"{}\" y=\"{}\" font-size=\"10\">{l}</text>",
                    x(i) + CELL / 2,
                    y(heights[i]) - 4
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
