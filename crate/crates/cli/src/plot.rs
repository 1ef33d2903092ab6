use std::fmt::Write as _;
use std::path::Path;

use crate::{write_file, CliError, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 24.0;
const BOTTOM: f64 = 56.0;
const TICKS: usize = 5;
const PALETTE: [&str; 8] = [
    "#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#b7950b",
];

/// A parsed CSV table: header names and rows of numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

fn parse_cell(s: &str) -> Option<f64> {
    match s.trim() {
        "inf" => Some(f64::INFINITY),
        "-inf" => Some(f64::NEG_INFINITY),
        "nan" => Some(f64::NAN),
        other => other.parse().ok(),
    }
}

/// Parses a CSV produced by the sweep or critical commands. `#` lines are
/// metadata and skipped.
pub fn parse_table(text: &str) -> Result<Table> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let columns: Vec<String> = reader
        .headers()
        .map_err(|e| CliError::Invalid(format!("bad CSV header: {e}")))?
        .iter()
        .map(str::to_string)
        .collect();
    if columns.len() < 2 {
        return Err(CliError::Invalid("CSV needs an x column and at least one data column".into()));
    }
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Invalid(format!("bad CSV row {}: {e}", i + 1)))?;
        let row: Option<Vec<f64>> = record.iter().map(parse_cell).collect();
        let row = row.ok_or_else(|| CliError::Invalid(format!("non-numeric cell in row {}", i + 1)))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Invalid("CSV has no data rows".into()));
    }
    Ok(Table { columns, rows })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tick_label(v: f64, span: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if span >= 0.1 && v.abs() < 1e4 {
        format!("{v:.2}")
    } else if span >= 0.001 && v.abs() < 1e4 {
        format!("{v:.4}")
    } else {
        format!("{v:.2e}")
    }
}

fn finite_range(values: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    values.filter(|v| v.is_finite()).fold(None, |acc, v| match acc {
        None => Some((v, v)),
        Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
    })
}

fn padded((lo, hi): (f64, f64)) -> (f64, f64) {
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 0.5, hi + 0.5)
    }
}

/// A line chart with the first column on the x axis and one polyline per
/// remaining column. Non-finite points are left out.
pub fn render_svg(table: &Table) -> Result<String> {
    let x_range = finite_range(table.rows.iter().map(|r| r[0]))
        .ok_or_else(|| CliError::Invalid("x column has no finite values".into()))?;
    let y_range = finite_range(table.rows.iter().flat_map(|r| r[1..].iter().copied()))
        .ok_or_else(|| CliError::Invalid("data columns have no finite values".into()))?;
    let (x0, x1) = padded(x_range);
    let (y0, y1) = padded(y_range);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| TOP + (y1 - y) / (y1 - y0) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let xv = x0 + f * (x1 - x0);
        let yv = y0 + f * (y1 - y0);
        let (px, py) = (sx(xv), sy(yv));
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            TOP + plot_h + 19.0,
            tick_label(xv, x1 - x0)
        );
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/>"#,
            LEFT - 5.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            LEFT - 8.0,
            py + 4.0,
            tick_label(yv, y1 - y0)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 14.0,
        escape(&table.columns[0])
    );
    let y_label = if table.columns.len() == 2 {
        escape(&table.columns[1])
    } else {
        "value".to_string()
    };
    let _ = writeln!(
        svg,
        r#"<text transform="translate(18 {:.2}) rotate(-90)" text-anchor="middle">{y_label}</text>"#,
        TOP + plot_h / 2.0
    );

    for (k, name) in table.columns.iter().enumerate().skip(1) {
        let color = PALETTE[(k - 1) % PALETTE.len()];
        let points: Vec<String> = table
            .rows
            .iter()
            .filter(|r| r[0].is_finite() && r[k].is_finite())
            .map(|r| format!("{:.2},{:.2}", sx(r[0]), sy(r[k])))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            points.join(" ")
        );
        let ly = TOP + 10.0 + 18.0 * (k - 1) as f64;
        let lx = WIDTH - RIGHT + 12.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
            lx + 20.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 26.0,
            ly + 4.0,
            escape(name)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Reads `csv_path` and writes the chart to `out_svg`.
pub fn cmd_plot(csv_path: &Path, out_svg: &Path) -> Result<()> {
    let text = std::fs::read_to_string(csv_path).map_err(|e| CliError::io(csv_path, e))?;
    let svg = render_svg(&parse_table(&text)?)?;
    write_file(out_svg, &svg)
}
