//! Quad meshes from parameter grids, and the OBJ / CSV writers.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::{FundamentalForms, MinimalityReport, ParametricSurface};
use crate::Vec3;

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    pub vertices: Vec<Vec3>,
    /// 0-based vertex indices, counter-clockwise in parameter space.
    pub faces: Vec<[usize; 4]>,
    pub generator: String,
}

impl Mesh {
    pub fn validate(&self) -> Result<()> {
        if let Some(index) = self
            .vertices
            .iter()
            .position(|v| !v.iter().all(|c| c.is_finite()))
        {
            return Err(Error::NonFiniteVertex { index });
        }
        let n = self.vertices.len();
        if let Some(f) = self.faces.iter().find(|f| f.iter().any(|&i| i >= n)) {
            return Err(Error::InvalidParams(format!(
                "face {f:?} references a vertex beyond {n}"
            )));
        }
        Ok(())
    }
}

/// Samples `surface` on its `nu × nv` grid (row-major, `u` outer) and connects
/// neighbouring samples into quads.
pub fn tessellate(
    surface: &ParametricSurface,
    nu: usize,
    nv: usize,
    generator: &str,
) -> Result<Mesh> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidParams(format!(
            "tessellation needs at least 2x2 samples, got {nu}x{nv}"
        )));
    }
    let grid = surface.domain().grid(nu, nv);
    let mut vertices = Vec::with_capacity(grid.len());
    for &(u, v) in &grid {
        // Rejects degenerate points with their location.
        FundamentalForms::from_jet(&surface.jet(u, v), u, v)?;
        vertices.push(surface.point(u, v));
    }
    let mut faces = Vec::with_capacity((nu - 1) * (nv - 1));
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            faces.push([
                i * nv + j,
                i * nv + j + 1,
                (i + 1) * nv + j + 1,
                (i + 1) * nv + j,
            ]);
        }
    }
    let mesh = Mesh {
        vertices,
        faces,
        generator: generator.to_owned(),
    };
    mesh.validate()?;
    Ok(mesh)
}

/// `printf("%.{digits}g")`-style formatting; `-0` prints as `0`.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Writes OBJ text: a `# weighted-minimal <generator>` comment, `v` lines with
/// 9 significant digits, then `f` lines with 1-based indices.
pub fn write_obj<W: Write>(mesh: &Mesh, out: &mut W) -> Result<()> {
    mesh.validate()?;
    writeln!(out, "# weighted-minimal {}", mesh.generator)?;
    for v in &mesh.vertices {
        writeln!(
            out,
            "v {} {} {}",
            format_significant(v.x, 9),
            format_significant(v.y, 9),
            format_significant(v.z, 9)
        )?;
    }
    for f in &mesh.faces {
        writeln!(out, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1)?;
    }
    Ok(())
}

pub fn export_obj(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    mesh.validate()?;
    let mut w = create(path.as_ref())?;
    write_obj(mesh, &mut w)?;
    w.flush()?;
    Ok(())
}

pub const REPORT_HEADER: &str = "u,v,x,y,z,H,Hphi";

/// Writes the report grid as CSV with 12 significant digits, in grid order.
pub fn write_report_csv<W: Write>(report: &MinimalityReport, out: &mut W) -> Result<()> {
    writeln!(out, "{REPORT_HEADER}")?;
    for r in &report.records {
        let fields = [r.u, r.v, r.point.x, r.point.y, r.point.z, r.h, r.h_phi];
        let row: Vec<String> = fields.iter().map(|&x| format_significant(x, 12)).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn export_report_csv(report: &MinimalityReport, path: impl AsRef<Path>) -> Result<()> {
    let mut w = create(path.as_ref())?;
    write_report_csv(report, &mut w)?;
    w.flush()?;
    Ok(())
}
