//! Signal file formats.
//!
//! - CSV vectors: one value per line, `#` starts a comment, scientific
//!   notation accepted; output uses shortest round-trip decimal formatting.
//! - PGM images: P2 (ASCII) and P5 (binary) with maxval up to 255; output
//!   keeps the input's subformat, clamping to `[0, 255]` and rounding
//!   half-away-from-zero.
//! - XDH hypermatrices: magic `XDH1`, little-endian u32 order, that many
//!   little-endian u64 axis ranges, then the values as little-endian IEEE
//!   f64 in lexicographic order. Bit-exact round trip.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use xdproj::{Hyper64, Hypermatrix, Mat64, MixedVector, Vec64};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Vector(Vec64),
    Image { pixels: Mat64, binary: bool },
    Hyper(Hyper64),
}

impl Payload {
    pub fn order(&self) -> usize {
        match self {
            Payload::Vector(_) => 1,
            Payload::Image { .. } => 2,
            Payload::Hyper(h) => h.order(),
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        match self {
            Payload::Vector(x) => vec![x.dim()],
            Payload::Image { pixels, .. } => vec![pixels.rows(), pixels.cols()],
            Payload::Hyper(h) => h.dims().to_vec(),
        }
    }

    pub fn to_hypermatrix(&self) -> Hyper64 {
        match self {
            Payload::Vector(x) => {
                Hypermatrix::new(vec![x.dim()], x.as_slice().to_vec()).expect("valid vector")
            }
            Payload::Image { pixels, .. } => Hypermatrix::from_matrix(pixels),
            Payload::Hyper(h) => h.clone(),
        }
    }
}

fn parse_err(path: &Path, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{}: {msg}", path.display()))
}

pub fn read_signal(path: &Path) -> Result<Payload, CliError> {
    let bytes =
        fs::read(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    if bytes.starts_with(b"XDH1") {
        return parse_xdh(path, &bytes).map(Payload::Hyper);
    }
    if bytes.len() >= 3
        && (bytes.starts_with(b"P2") || bytes.starts_with(b"P5"))
        && bytes[2].is_ascii_whitespace()
    {
        return parse_pgm(path, &bytes);
    }
    let text = std::str::from_utf8(&bytes).map_err(|_| parse_err(path, "not valid UTF-8 text"))?;
    parse_csv_vector(path, text).map(Payload::Vector)
}

pub fn write_signal(path: &Path, payload: &Payload) -> Result<(), CliError> {
    let bytes = match payload {
        Payload::Vector(x) => render_csv_vector(x).into_bytes(),
        Payload::Image { pixels, binary } => render_pgm(pixels, *binary),
        Payload::Hyper(h) => render_xdh(h),
    };
    fs::write(path, bytes)
        .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))
}

// ---- CSV ----------------------------------------------------------------

fn stripped_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(no, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((no + 1, line))
        }
    })
}

fn parse_csv_vector(path: &Path, text: &str) -> Result<Vec64, CliError> {
    let mut values = Vec::new();
    for (lineno, line) in stripped_lines(text) {
        let v: f64 = line
            .parse()
            .map_err(|_| parse_err(path, format!("line {lineno}: invalid number {line:?}")))?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(parse_err(path, "no values"));
    }
    MixedVector::new(values).map_err(|e| parse_err(path, e))
}

fn render_csv_vector(x: &Vec64) -> String {
    let mut out = String::new();
    for v in x.as_slice() {
        writeln!(out, "{v}").expect("string write");
    }
    out
}

/// Comma-separated matrix rows, used by `analyze`.
pub fn read_csv_matrix(path: &Path) -> Result<Mat64, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in stripped_lines(&text) {
        let mut row = Vec::new();
        for field in line.split(',') {
            let field = field.trim();
            let v: f64 = field
                .parse()
                .map_err(|_| parse_err(path, format!("line {lineno}: invalid number {field:?}")))?;
            row.push(v);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(path, "no rows"));
    }
    xdproj::DenseMatrix::from_rows(&rows).map_err(|e| parse_err(path, e))
}

// ---- PGM ----------------------------------------------------------------

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_separators(&mut self) {
        loop {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if self.pos < self.bytes.len() && self.bytes[self.pos] == b'#' {
                while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                return;
            }
        }
    }

    fn token(&mut self) -> Option<&'a [u8]> {
        self.skip_separators();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            Some(&self.bytes[start..self.pos])
        }
    }

    fn number(&mut self, what: &str, path: &Path) -> Result<usize, CliError> {
        let tok = self
            .token()
            .ok_or_else(|| parse_err(path, format!("missing {what}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_err(path, format!("invalid {what}")))
    }
}

fn parse_pgm(path: &Path, bytes: &[u8]) -> Result<Payload, CliError> {
    let mut cur = Cursor { bytes, pos: 0 };
    let magic = cur.token().expect("sniffed magic");
    let binary = magic == b"P5";
    let width = cur.number("width", path)?;
    let height = cur.number("height", path)?;
    let maxval = cur.number("maxval", path)?;
    if maxval == 0 || maxval > 255 {
        return Err(parse_err(path, format!("unsupported maxval {maxval}")));
    }
    let count = width
        .checked_mul(height)
        .ok_or_else(|| parse_err(path, "image size overflow"))?;
    let mut pixels: Vec<f64> = Vec::with_capacity(count);
    if binary {
        // A single whitespace byte separates the header from the raster.
        if cur.pos >= bytes.len() || !bytes[cur.pos].is_ascii_whitespace() {
            return Err(parse_err(path, "missing raster separator"));
        }
        cur.pos += 1;
        let raster = &bytes[cur.pos..];
        if raster.len() != count {
            return Err(parse_err(
                path,
                format!("expected {count} raster bytes, found {}", raster.len()),
            ));
        }
        pixels.extend(raster.iter().map(|&b| f64::from(b)));
    } else {
        for _ in 0..count {
            let v = cur.number("pixel", path)?;
            if v > 255 {
                return Err(parse_err(path, format!("pixel value {v} out of range")));
            }
            pixels.push(v as f64);
        }
        cur.skip_separators();
        if cur.pos != bytes.len() {
            return Err(parse_err(path, "trailing data after raster"));
        }
    }
    let pixels = Mat64::new(height, width, pixels).map_err(|e| parse_err(path, e))?;
    Ok(Payload::Image { pixels, binary })
}

/// Clamp to `[0, 255]`, then round half-away-from-zero.
fn quantize(v: f64) -> u8 {
    v.clamp(0.0, 255.0).round() as u8
}

fn render_pgm(pixels: &Mat64, binary: bool) -> Vec<u8> {
    let header = format!(
        "{}\n{} {}\n255\n",
        if binary { "P5" } else { "P2" },
        pixels.cols(),
        pixels.rows()
    );
    let mut out = header.into_bytes();
    if binary {
        out.extend(pixels.data().iter().map(|&v| quantize(v)));
    } else {
        for i in 0..pixels.rows() {
            let row: Vec<String> = (0..pixels.cols())
                .map(|j| quantize(pixels.get(i, j)).to_string())
                .collect();
            out.extend(row.join(" ").into_bytes());
            out.push(b'\n');
        }
    }
    out
}

// ---- XDH ----------------------------------------------------------------

fn parse_xdh(path: &Path, bytes: &[u8]) -> Result<Hyper64, CliError> {
    if bytes.len() < 8 {
        return Err(parse_err(path, "truncated header"));
    }
    let order = u32::from_le_bytes(bytes[4..8].try_into().expect("4 bytes")) as usize;
    let dims_end = 8 + 8 * order;
    if order == 0 || bytes.len() < dims_end {
        return Err(parse_err(path, "truncated dimension list"));
    }
    let mut dims = Vec::with_capacity(order);
    let mut count: usize = 1;
    for k in 0..order {
        let raw = u64::from_le_bytes(bytes[8 + 8 * k..16 + 8 * k].try_into().expect("8 bytes"));
        let d = usize::try_from(raw).map_err(|_| parse_err(path, "dimension too large"))?;
        count = count
            .checked_mul(d.max(1))
            .ok_or_else(|| parse_err(path, "size overflow"))?;
        dims.push(d);
    }
    let expected = dims_end
        .checked_add(count.checked_mul(8).ok_or_else(|| parse_err(path, "size overflow"))?)
        .ok_or_else(|| parse_err(path, "size overflow"))?;
    if bytes.len() != expected {
        return Err(parse_err(
            path,
            format!("expected {expected} bytes, found {}", bytes.len()),
        ));
    }
    let values: Vec<f64> = bytes[dims_end..]
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
        .collect();
    Hypermatrix::new(dims, values).map_err(|e| parse_err(path, e))
}

fn render_xdh(h: &Hyper64) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + 8 * h.order() + 8 * h.len());
    out.extend_from_slice(b"XDH1");
    out.extend_from_slice(&(h.order() as u32).to_le_bytes());
    for &d in h.dims() {
        out.extend_from_slice(&(d as u64).to_le_bytes());
    }
    for &v in h.data() {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}
