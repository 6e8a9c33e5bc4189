//! File outputs: contour CSV, diagnostics JSON, and a plain SVG plot.

use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};
use slitmap_core::shape::Diagnostics;
use slitmap_core::surface::{Sheet, Side};
use slitmap_core::InclusionContour;

/// `xi,side,x,y` rows, floats with 17 significant digits.
pub fn export_contour(contour: &InclusionContour, path: &Path) -> std::io::Result<()> {
    let mut out = String::from("xi,side,x,y\n");
    for p in &contour.points {
        let side = match p.side {
            Side::Plus => "+",
            Side::Minus => "-",
        };
        out.push_str(&format!("{:.16e},{side},{:.16e},{:.16e}\n", p.xi, p.x, p.y));
    }
    std::fs::write(path, out)
}

/// Diagnostics as JSON with the fixed report schema.
pub fn diagnostics_json(diag: &Diagnostics) -> Value {
    let p = &diag.params;
    let params = json!({
        "kappa": p.kappa,
        "tau1_hat": p.tau1_hat,
        "tau1_inf_hat": p.tau1_inf_hat,
        "m": p.m,
        "n0_star": p.n0_star,
        "n1": p.n1,
        "b0": p.b0,
        "xi0": p.xi0,
        "zeta0": [p.zeta0.re, p.zeta0.im],
        "quad_order": p.quad_order,
        "n_points": p.n_points,
        "tol": p.tol,
    });
    let mut root = Map::new();
    root.insert("params".into(), params);
    if let Some(s) = &diag.summary {
        root.insert(
            "derived".into(),
            json!({
                "k": s.k,
                "K": s.big_k,
                "b1": s.b1,
                "zeta1": [s.zeta1.re, s.zeta1.im],
                "sheet1": match s.sheet1 { Sheet::Upper => "upper", Sheet::Lower => "lower" },
                "n_a": s.n_a,
                "n_b": s.n_b,
                "X_inf": s.x_inf,
                "M": s.m_consts,
            }),
        );
        root.insert(
            "contour".into(),
            json!({
                "diameter": s.diameter,
                "signed_area": s.signed_area,
                "centroid": [s.centroid.0, s.centroid.1],
                "min_abs_y": s.min_abs_y,
                "half_plane_sign": s.half_plane_sign,
            }),
        );
    }
    let mut residuals = Map::new();
    for slot in &diag.residuals {
        residuals.insert(slot.name.into(), json!(slot.value));
    }
    root.insert("residuals".into(), Value::Object(residuals));
    if !diag.warnings.is_empty() {
        root.insert("warnings".into(), json!(diag.warnings));
    }
    if let Some(f) = &diag.failure {
        root.insert("failure".into(), json!(f));
    }
    root.insert("pass".into(), json!(diag.pass));
    Value::Object(root)
}

pub fn export_diagnostics(diag: &Diagnostics, path: &Path) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(&diagnostics_json(diag)).expect("serializable");
    text.push('\n');
    std::fs::write(path, text)
}

/// One closed polyline per contour plus the physical x-axis, y flipped
/// to screen coordinates, viewBox fitted with a 10% margin.
pub fn export_svg(contours: &[(String, &InclusionContour)], path: &Path) -> std::io::Result<()> {
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = 0.0f64; // always include the half-plane boundary
    let mut max_y = 0.0f64;
    for (_, c) in contours {
        for p in &c.points {
            min_x = min_x.min(p.x);
            max_x = max_x.max(p.x);
            min_y = min_y.min(p.y);
            max_y = max_y.max(p.y);
        }
    }
    if !min_x.is_finite() {
        min_x = -1.0;
        max_x = 1.0;
    }
    let margin = 0.1 * ((max_x - min_x).max(max_y - min_y).max(1e-9));
    let (x0, y0) = (min_x - margin, min_y - margin);
    let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    // flip y: screen v = (max_y + margin) - y
    let flip = max_y + margin;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0:.6} 0 {w:.6} {h:.6}\">\n"
    ));
    let _ = y0;
    svg.push_str(&format!(
        "  <line x1=\"{x0:.6}\" y1=\"{ax:.6}\" x2=\"{x1:.6}\" y2=\"{ax:.6}\" stroke=\"black\" stroke-width=\"{sw:.6}\"/>\n",
        x1 = x0 + w,
        ax = flip,
        sw = 0.002 * w
    ));
    for (label, c) in contours {
        let mut points = String::new();
        for p in &c.points {
            points.push_str(&format!("{:.6},{:.6} ", p.x, flip - p.y));
        }
        svg.push_str(&format!(
            "  <polyline id=\"{label}\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{sw:.6}\"/>\n",
            points.trim_end(),
            sw = 0.002 * w
        ));
    }
    svg.push_str("</svg>\n");
    let mut f = std::fs::File::create(path)?;
    f.write_all(svg.as_bytes())
}
