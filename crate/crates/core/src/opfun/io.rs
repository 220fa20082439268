//! Matrix Market coordinate files and plain-text vectors.
//!
//! Matrices: `%%MatrixMarket matrix coordinate {complex|real} general`,
//! 1-based indices. The storage is picked from the sparsity pattern:
//! diagonal, tridiagonal, else dense. Vectors: one entry per line as
//! `re [im]`; blank lines and lines starting with `%` or `#` are skipped.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use super::operator::{DenseMatrix, OperatorRep, Storage};
use crate::{Error, Result};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn io_err(e: std::io::Error) -> Error {
    parse_err(0, format!("I/O error: {e}"))
}

fn parse_f64(tok: &str, line: usize) -> Result<f64> {
    tok.parse::<f64>()
        .map_err(|_| parse_err(line, format!("not a number: {tok:?}")))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("not an index: {tok:?}")))
}

pub fn read_matrix_market<R: BufRead>(reader: R) -> Result<OperatorRep> {
    let mut lines = reader.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let header = header.map_err(io_err)?;
    let fields: Vec<String> = header
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if fields.len() < 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" {
        return Err(parse_err(1, "missing %%MatrixMarket matrix header"));
    }
    if fields[2] != "coordinate" {
        return Err(parse_err(1, format!("unsupported format {:?}", fields[2])));
    }
    let complex = match fields[3].as_str() {
        "complex" => true,
        "real" => false,
        other => return Err(parse_err(1, format!("unsupported field {other:?}"))),
    };
    if fields[4] != "general" {
        return Err(parse_err(
            1,
            format!("unsupported symmetry {:?}", fields[4]),
        ));
    }

    let mut size = None;
    let mut entries = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.map_err(io_err)?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        let tok: Vec<&str> = t.split_whitespace().collect();
        match size {
            None => {
                if tok.len() != 3 {
                    return Err(parse_err(lineno, "expected `rows cols nnz`"));
                }
                let rows = parse_usize(tok[0], lineno)?;
                let cols = parse_usize(tok[1], lineno)?;
                let nnz = parse_usize(tok[2], lineno)?;
                if rows != cols || rows == 0 {
                    return Err(parse_err(
                        lineno,
                        format!("need a nonempty square matrix, got {rows}x{cols}"),
                    ));
                }
                size = Some((rows, nnz));
            }
            Some((n, _)) => {
                let want = if complex { 4 } else { 3 };
                if tok.len() != want {
                    return Err(parse_err(lineno, format!("expected {want} fields")));
                }
                let i = parse_usize(tok[0], lineno)?;
                let j = parse_usize(tok[1], lineno)?;
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(parse_err(lineno, format!("index ({i}, {j}) out of range")));
                }
                let re = parse_f64(tok[2], lineno)?;
                let im = if complex {
                    parse_f64(tok[3], lineno)?
                } else {
                    0.0
                };
                entries.push((i - 1, j - 1, Complex64::new(re, im), lineno));
            }
        }
    }
    let (n, nnz) = size.ok_or_else(|| parse_err(0, "missing size line"))?;
    if entries.len() != nnz {
        return Err(parse_err(
            0,
            format!("expected {nnz} entries, found {}", entries.len()),
        ));
    }

    let zero = Complex64::new(0.0, 0.0);
    let max_band = entries.iter().map(|e| e.0.abs_diff(e.1)).max().unwrap_or(0);
    let mut dense = DenseMatrix::zeros(n);
    for &(i, j, z, lineno) in &entries {
        if dense.get(i, j) != zero {
            return Err(parse_err(
                lineno,
                format!("duplicate entry ({}, {})", i + 1, j + 1),
            ));
        }
        dense.set(i, j, z);
    }
    match max_band {
        0 => OperatorRep::diagonal((0..n).map(|i| dense.get(i, i)).collect()),
        1 if n > 1 => OperatorRep::tridiagonal(
            (0..n - 1).map(|i| dense.get(i + 1, i)).collect(),
            (0..n).map(|i| dense.get(i, i)).collect(),
            (0..n - 1).map(|i| dense.get(i, i + 1)).collect(),
        ),
        _ => Ok(OperatorRep::dense(dense)),
    }
}

pub fn write_matrix_market<W: Write>(a: &OperatorRep, mut w: W) -> Result<()> {
    let mut entries = Vec::new();
    match a.storage() {
        Storage::Diagonal(d) => {
            entries.extend(d.iter().enumerate().map(|(i, &z)| (i, i, z)));
        }
        Storage::Tridiagonal(t) => {
            let n = t.dim();
            for i in 0..n {
                if i > 0 {
                    entries.push((i, i - 1, t.sub()[i - 1]));
                }
                entries.push((i, i, t.diag()[i]));
                if i + 1 < n {
                    entries.push((i, i + 1, t.sup()[i]));
                }
            }
        }
        Storage::Dense(m) => {
            let n = m.dim();
            for i in 0..n {
                for j in 0..n {
                    let z = m.get(i, j);
                    if z.re != 0.0 || z.im != 0.0 {
                        entries.push((i, j, z));
                    }
                }
            }
        }
    }
    let n = a.dim();
    writeln!(w, "%%MatrixMarket matrix coordinate complex general").map_err(io_err)?;
    writeln!(w, "{n} {n} {}", entries.len()).map_err(io_err)?;
    for (i, j, z) in entries {
        writeln!(w, "{} {} {:e} {:e}", i + 1, j + 1, z.re, z.im).map_err(io_err)?;
    }
    Ok(())
}

pub fn read_vector<R: BufRead>(reader: R) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(io_err)?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') || t.starts_with('#') {
            continue;
        }
        let tok: Vec<&str> = t.split_whitespace().collect();
        let z = match tok.as_slice() {
            [re] => Complex64::new(parse_f64(re, lineno)?, 0.0),
            [re, im] => Complex64::new(parse_f64(re, lineno)?, parse_f64(im, lineno)?),
            _ => return Err(parse_err(lineno, "expected `re [im]`")),
        };
        out.push(z);
    }
    if out.is_empty() {
        return Err(parse_err(0, "empty vector"));
    }
    Ok(out)
}

pub fn write_vector<W: Write>(v: &[Complex64], mut w: W) -> Result<()> {
    for z in v {
        writeln!(w, "{:e} {:e}", z.re, z.im).map_err(io_err)?;
    }
    Ok(())
}
