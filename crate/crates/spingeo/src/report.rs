//! Coverage output: CSV rows and a single SVG of the `(chi, c)` plane.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use spingeo_core::geography::{RegionReport, Status};
use spingeo_core::grp::AbelianType;

pub const CSV_HEADER: [&str; 7] = ["c", "chi", "sigma", "e", "group", "status", "recipe-id"];

#[derive(Serialize)]
struct Row<'a> {
    c: i64,
    chi: i64,
    sigma: i64,
    e: i64,
    group: &'a str,
    status: String,
    #[serde(rename = "recipe-id")]
    recipe_id: &'a str,
}

pub fn write_csv<W: io::Write>(
    out: W,
    report: &RegionReport,
    group: &AbelianType,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let g = group.to_string();
    if report.rows.is_empty() {
        w.write_record(CSV_HEADER)?;
    }
    for r in &report.rows {
        w.serialize(Row {
            c: r.point.c,
            chi: r.point.chi,
            sigma: r.point.sigma(),
            e: r.point.e(),
            group: &g,
            status: r.status.to_string(),
            recipe_id: &r.recipe_id,
        })?;
    }
    w.flush()?;
    Ok(())
}

fn color(s: Status) -> &'static str {
    match s {
        Status::NegativeStrip => "#1f77b4",
        Status::WedgeSearch => "#2ca02c",
        Status::Exception => "#d62728",
    }
}

const W: f64 = 640.0;
const H: f64 = 480.0;
const PAD: f64 = 48.0;

/// Plots lattice points by status with the lines `c = 8 chi` and
/// `c = (219/25) chi`.
pub fn svg(report: &RegionReport, c_max: i64, chi_max: i64, group: &AbelianType) -> String {
    let sx = (W - 2.0 * PAD) / chi_max.max(1) as f64;
    let sy = (H - 2.0 * PAD) / c_max.max(1) as f64;
    let x = |chi: f64| PAD + chi * sx;
    let y = |c: f64| H - PAD - c * sy;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        x(0.0),
        y(0.0),
        x(chi_max as f64),
        y(0.0)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        x(0.0),
        y(0.0),
        x(0.0),
        y(c_max as f64)
    );
    // clip each boundary line to the plotted box
    for (id, num, den, label) in [
        ("line-8", 8.0, 1.0, "c = 8χ"),
        ("line-219-25", 219.0, 25.0, "c = (219/25)χ"),
    ] {
        let slope = num / den;
        let chi_end = (chi_max as f64).min(c_max as f64 / slope);
        let _ = writeln!(
            s,
            r#"<line id="{id}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="gray" stroke-dasharray="4 3"><title>{label}</title></line>"#,
            x(0.0),
            y(0.0),
            x(chi_end),
            y(chi_end * slope)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" fill="gray">{label}</text>"#,
            x(chi_end) - 70.0,
            y(chi_end * slope) - 4.0
        );
    }
    for r in &report.rows {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.2}" cy="{:.2}" r="2" fill="{}"><title>({}, {}) {}</title></circle>"#,
            x(r.point.chi as f64),
            y(r.point.c as f64),
            color(r.status),
            r.point.c,
            r.point.chi,
            r.status
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{PAD}" y="20" font-size="13">pi1 = {group}; horizontal chi, vertical c</text>"#
    );
    for (i, st) in [
        Status::NegativeStrip,
        Status::WedgeSearch,
        Status::Exception,
    ]
    .into_iter()
    .enumerate()
    {
        let ly = 20.0 + 14.0 * (i as f64 + 1.0);
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="4" fill="{}"/>"#,
            W - 130.0,
            ly - 4.0,
            color(st)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{ly}" font-size="11">{st} ({})</text>"#,
            W - 120.0,
            report.count(st)
        );
    }
    s.push_str("</svg>\n");
    s
}
