//! Reading observations and writing completed matrices.
//!
//! Observations come as MatrixMarket coordinate files (1-based) or as CSV
//! triplets with header `i,j,value` (0-based). Completed matrices are written
//! densely, as headerless CSV or MatrixMarket array files. Every file is
//! written to a temporary sibling and renamed into place.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::types::{ObservedMatrix, UnitVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    MatrixMarket,
    CsvTriplets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    DenseCsv,
    MatrixMarketArray,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mm" | "matrix-market" | "mtx" => Ok(Self::MatrixMarket),
            "csv" | "csv-triplets" => Ok(Self::CsvTriplets),
            _ => Err(format!("unknown input format `{s}`")),
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" | "dense-csv" => Ok(Self::DenseCsv),
            "mm" | "matrix-market" | "mtx" => Ok(Self::MatrixMarketArray),
            _ => Err(format!("unknown output format `{s}`")),
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Loads observations. CSV triplets infer the shape from the largest indices;
/// use [`load_observed_with_shape`] to declare it.
pub fn load_observed(path: impl AsRef<Path>, format: InputFormat) -> Result<ObservedMatrix> {
    load_observed_with_shape(path, format, None)
}

/// Loads observations; `shape` is only consulted for CSV triplets.
pub fn load_observed_with_shape(
    path: impl AsRef<Path>,
    format: InputFormat,
    shape: Option<(usize, usize)>,
) -> Result<ObservedMatrix> {
    let path = path.as_ref();
    let reader = open(path)?;
    match format {
        InputFormat::MatrixMarket => parse_matrix_market(reader),
        InputFormat::CsvTriplets => parse_csv_triplets(reader, shape),
    }
}

/// Parses a `coordinate real general` (or `integer`) MatrixMarket stream.
pub fn parse_matrix_market(reader: impl BufRead) -> Result<ObservedMatrix> {
    let mut lines = reader.lines().enumerate();
    let banner = match lines.next() {
        Some((_, line)) => line.map_err(|e| parse_err(1, e.to_string()))?,
        None => return Err(parse_err(1, "empty file")),
    };
    let banner_lc = banner.to_ascii_lowercase();
    let fields: Vec<_> = banner_lc.split_whitespace().collect();
    if fields.len() != 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" {
        return Err(parse_err(1, "missing %%MatrixMarket matrix banner"));
    }
    if fields[2] != "coordinate" {
        return Err(parse_err(
            1,
            format!("expected coordinate format, got `{}`", fields[2]),
        ));
    }
    if !matches!(fields[3], "real" | "integer" | "double") {
        return Err(parse_err(1, format!("unsupported field `{}`", fields[3])));
    }
    if fields[4] != "general" {
        return Err(parse_err(
            1,
            format!("unsupported symmetry `{}`", fields[4]),
        ));
    }

    let mut shape = None;
    let mut triplets = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match shape {
            None => {
                let rows: usize = parse_num(toks.next(), lineno, "row count")?;
                let cols: usize = parse_num(toks.next(), lineno, "column count")?;
                let nnz: usize = parse_num(toks.next(), lineno, "entry count")?;
                shape = Some((rows, cols, nnz));
            }
            Some((rows, cols, _)) => {
                let i: usize = parse_num(toks.next(), lineno, "row index")?;
                let j: usize = parse_num(toks.next(), lineno, "column index")?;
                let v: f64 = parse_num(toks.next(), lineno, "value")?;
                if i == 0 || j == 0 {
                    return Err(parse_err(lineno, "MatrixMarket indices are 1-based"));
                }
                if i > rows || j > cols {
                    return Err(Error::OutOfRange {
                        row: i - 1,
                        col: j - 1,
                        rows,
                        cols,
                    });
                }
                triplets.push((i - 1, j - 1, v));
            }
        }
    }
    let (rows, cols, nnz) = shape.ok_or_else(|| parse_err(1, "missing size line"))?;
    if triplets.len() != nnz {
        return Err(parse_err(
            0,
            format!("size line declares {nnz} entries, found {}", triplets.len()),
        ));
    }
    ObservedMatrix::new(rows, cols, triplets)
}

/// Parses `i,j,value` triplets with 0-based indices.
pub fn parse_csv_triplets(
    reader: impl Read,
    shape: Option<(usize, usize)>,
) -> Result<ObservedMatrix> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    if header.iter().collect::<Vec<_>>() != ["i", "j", "value"] {
        return Err(parse_err(1, "expected header `i,j,value`"));
    }
    let mut triplets = Vec::new();
    for (idx, record) in rdr.records().enumerate() {
        let lineno = idx + 2;
        let record = record.map_err(|e| parse_err(lineno, e.to_string()))?;
        if record.len() != 3 {
            return Err(parse_err(lineno, "expected three fields"));
        }
        let i: usize = parse_num(record.get(0), lineno, "row index")?;
        let j: usize = parse_num(record.get(1), lineno, "column index")?;
        let v: f64 = parse_num(record.get(2), lineno, "value")?;
        triplets.push((i, j, v));
    }
    let (rows, cols) = match shape {
        Some(shape) => shape,
        None => triplets
            .iter()
            .fold((0, 0), |(m, n), &(i, j, _)| (m.max(i + 1), n.max(j + 1))),
    };
    ObservedMatrix::new(rows, cols, triplets)
}

/// Writes `contents` to a temporary file next to `path`, then renames it.
pub fn write_atomic(path: impl AsRef<Path>, contents: &[u8]) -> Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(contents).map_err(|e| Error::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// Renders the dense matrix `u wᵀ`.
pub fn render_completed(u: &[f64], w: &[f64], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::DenseCsv => {
            for ui in u {
                let row: Vec<String> = w.iter().map(|wj| (ui * wj).to_string()).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        OutputFormat::MatrixMarketArray => {
            out.push_str("%%MatrixMarket matrix array real general\n");
            let _ = writeln!(out, "{} {}", u.len(), w.len());
            for wj in w {
                for ui in u {
                    let _ = writeln!(out, "{}", ui * wj);
                }
            }
        }
    }
    out
}

/// Writes the completed matrix `u wᵀ`.
pub fn save_completed(
    u: &UnitVector,
    w: &[f64],
    path: impl AsRef<Path>,
    format: OutputFormat,
) -> Result<()> {
    write_atomic(path, render_completed(u.as_slice(), w, format).as_bytes())
}

/// A dense row-major matrix read back from disk.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl DenseMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }
}

/// Reads a file written by [`save_completed`].
pub fn load_dense(path: impl AsRef<Path>, format: OutputFormat) -> Result<DenseMatrix> {
    let path = path.as_ref();
    let reader = open(path)?;
    match format {
        OutputFormat::DenseCsv => {
            let mut rdr = csv::ReaderBuilder::new()
                .has_headers(false)
                .trim(csv::Trim::All)
                .from_reader(reader);
            let mut data = Vec::new();
            let mut cols = None;
            let mut rows = 0;
            for (idx, record) in rdr.records().enumerate() {
                let record = record.map_err(|e| parse_err(idx + 1, e.to_string()))?;
                if *cols.get_or_insert(record.len()) != record.len() {
                    return Err(parse_err(idx + 1, "ragged row"));
                }
                for field in record.iter() {
                    data.push(parse_num(Some(field), idx + 1, "value")?);
                }
                rows += 1;
            }
            Ok(DenseMatrix {
                rows,
                cols: cols.unwrap_or(0),
                data,
            })
        }
        OutputFormat::MatrixMarketArray => {
            let mut values = Vec::new();
            let mut shape = None;
            for (idx, line) in reader.lines().enumerate() {
                let line = line.map_err(|e| parse_err(idx + 1, e.to_string()))?;
                let line = line.trim();
                if line.is_empty() || line.starts_with('%') {
                    continue;
                }
                if shape.is_none() {
                    let mut toks = line.split_whitespace();
                    let rows: usize = parse_num(toks.next(), idx + 1, "row count")?;
                    let cols: usize = parse_num(toks.next(), idx + 1, "column count")?;
                    shape = Some((rows, cols));
                } else {
                    values.push(parse_num::<f64>(Some(line), idx + 1, "value")?);
                }
            }
            let (rows, cols) = shape.ok_or_else(|| parse_err(1, "missing size line"))?;
            if values.len() != rows * cols {
                return Err(parse_err(0, "value count does not match the size line"));
            }
            let mut data = vec![0.0; rows * cols];
            for (k, v) in values.into_iter().enumerate() {
                data[(k % rows) * cols + k / rows] = v;
            }
            Ok(DenseMatrix { rows, cols, data })
        }
    }
}

/// Reads one real per line (blank lines and `#` comments skipped) and
/// normalizes the result.
pub fn load_vector(path: impl AsRef<Path>) -> Result<UnitVector> {
    let path = path.as_ref();
    let mut v = Vec::new();
    for (idx, line) in open(path)?.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        v.push(parse_num::<f64>(Some(line), idx + 1, "value")?);
    }
    UnitVector::normalize(v)
}
