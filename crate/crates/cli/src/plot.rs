//! Sampling and rendering of the affine chart (x, y, 1-x-y) of a curve:
//! the quadratic in y is solved per sample, branches with negative
//! discriminant give empty cells, and samples where the leading
//! coefficient ax+1 vanishes are skipped as poles.

/// One sampled column; `y1` carries the +sqrt branch, `y2` the -sqrt one.
#[derive(Debug, Clone, Copy)]
pub struct PlotRow {
    pub x: f64,
    pub y1: Option<f64>,
    pub y2: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct PlotData {
    pub a: f64,
    pub rows: Vec<PlotRow>,
    pub poles: usize,
}

const POLE_EPS: f64 = 1e-9;

pub fn sample_curve(a: f64, xmin: f64, xmax: f64, samples: usize) -> PlotData {
    let mut rows = Vec::with_capacity(samples);
    let mut poles = 0;
    let step = (xmax - xmin) / (samples - 1) as f64;
    for i in 0..samples {
        let x = xmin + step * i as f64;
        let c2 = a * x + 1.0;
        if c2.abs() < POLE_EPS {
            poles += 1;
            continue;
        }
        let c1 = c2 * (x - 1.0);
        let c0 = x * x - x;
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc < 0.0 {
            rows.push(PlotRow {
                x,
                y1: None,
                y2: None,
            });
            continue;
        }
        let root = disc.sqrt();
        rows.push(PlotRow {
            x,
            y1: Some((-c1 + root) / (2.0 * c2)),
            y2: Some((-c1 - root) / (2.0 * c2)),
        });
    }
    PlotData { a, rows, poles }
}

/// CSV with columns x,y1,y2; cells are empty where no real branch exists.
pub fn to_csv(data: &PlotData) -> String {
    let mut out = String::from("x,y1,y2\n");
    let cell = |v: Option<f64>| v.map(|y| y.to_string()).unwrap_or_default();
    for row in &data.rows {
        out.push_str(&format!("{},{},{}\n", row.x, cell(row.y1), cell(row.y2)));
    }
    out
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 40.0;

struct Frame {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
}

impl Frame {
    fn sx(&self, x: f64) -> f64 {
        MARGIN + (x - self.xmin) / (self.xmax - self.xmin) * (WIDTH - 2.0 * MARGIN)
    }

    fn sy(&self, y: f64) -> f64 {
        // screen y grows downward
        HEIGHT - MARGIN - (y - self.ymin) / (self.ymax - self.ymin) * (HEIGHT - 2.0 * MARGIN)
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.xmin && x <= self.xmax && y >= self.ymin && y <= self.ymax
    }
}

fn polylines(rows: &[PlotRow], branch: impl Fn(&PlotRow) -> Option<f64>) -> Vec<Vec<(f64, f64)>> {
    let mut runs = Vec::new();
    let mut current: Vec<(f64, f64)> = Vec::new();
    for row in rows {
        match branch(row) {
            Some(y) if y.is_finite() => current.push((row.x, y)),
            _ => {
                if current.len() > 1 {
                    runs.push(std::mem::take(&mut current));
                } else {
                    current.clear();
                }
            }
        }
    }
    if current.len() > 1 {
        runs.push(current);
    }
    runs
}

/// SVG rendering: one polyline per connected branch run, the coordinate
/// axes when visible, and the three affine torsion vertices overlaid as
/// markers.
pub fn to_svg(data: &PlotData) -> String {
    let xs: Vec<f64> = data.rows.iter().map(|r| r.x).collect();
    let ys: Vec<f64> = data
        .rows
        .iter()
        .flat_map(|r| [r.y1, r.y2])
        .flatten()
        .filter(|y| y.is_finite())
        .collect();
    let (xmin, xmax) = match (xs.first(), xs.last()) {
        (Some(&lo), Some(&hi)) if hi > lo => (lo, hi),
        _ => (-1.0, 1.0),
    };
    let (ymin, ymax) = if ys.is_empty() {
        (-1.0, 1.0)
    } else {
        let lo = ys.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let pad = ((hi - lo) * 0.05).max(0.1);
        (lo - pad, hi + pad)
    };
    let frame = Frame {
        xmin,
        xmax,
        ymin,
        ymax,
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"20\" font-family=\"monospace\" font-size=\"14\">curve family member a = {}</text>\n",
        MARGIN, data.a
    ));
    // axes
    if frame.xmin <= 0.0 && frame.xmax >= 0.0 {
        let sx = frame.sx(0.0);
        svg.push_str(&format!(
            "  <line x1=\"{sx}\" y1=\"{MARGIN}\" x2=\"{sx}\" y2=\"{}\" stroke=\"#cccccc\"/>\n",
            HEIGHT - MARGIN
        ));
    }
    if frame.ymin <= 0.0 && frame.ymax >= 0.0 {
        let sy = frame.sy(0.0);
        svg.push_str(&format!(
            "  <line x1=\"{MARGIN}\" y1=\"{sy}\" x2=\"{}\" y2=\"{sy}\" stroke=\"#cccccc\"/>\n",
            WIDTH - MARGIN
        ));
    }
    for (color, branch) in [
        ("#1f77b4", 0usize),
        ("#d62728", 1usize),
    ] {
        let pick = |r: &PlotRow| if branch == 0 { r.y1 } else { r.y2 };
        for run in polylines(&data.rows, pick) {
            let pts: Vec<String> = run
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", frame.sx(x), frame.sy(y)))
                .collect();
            svg.push_str(&format!(
                "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                pts.join(" ")
            ));
        }
    }
    // torsion vertices of the affine chart: A = (1,0), B = (0,1), C = (0,0)
    for (x, y, label) in [(1.0, 0.0, "A"), (0.0, 1.0, "B"), (0.0, 0.0, "C")] {
        if frame.contains(x, y) {
            let (sx, sy) = (frame.sx(x), frame.sy(y));
            svg.push_str(&format!(
                "  <circle cx=\"{sx:.2}\" cy=\"{sy:.2}\" r=\"4\" fill=\"black\"/>\n"
            ));
            svg.push_str(&format!(
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\">{label}</text>\n",
                sx + 6.0,
                sy - 6.0
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}
