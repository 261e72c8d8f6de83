//! Point and graph text formats.
//!
//! Points: one point per line, coordinates separated by whitespace and/or
//! commas, `#` starts a comment line. Graphs: either a full `n × n` weight
//! matrix (zero diagonal) or an edge list of `i j w` lines covering every
//! pair.

use std::io::{BufRead, Write};

use dispersion_core::{PointSet, WeightedCompleteGraph};

use crate::error::{CliError, Result};

fn tokens(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

/// `(line number, fields)` for every non-blank, non-comment line.
fn data_rows(reader: impl BufRead) -> Result<Vec<(usize, Vec<String>)>> {
    let mut rows = Vec::new();
    for (no, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        rows.push((no + 1, tokens(trimmed).map(str::to_owned).collect()));
    }
    Ok(rows)
}

fn parse_number(line: usize, field: &str) -> Result<f64> {
    let v: f64 = field.parse().map_err(|_| CliError::Parse {
        line,
        msg: format!("not a number: {field:?}"),
    })?;
    if !v.is_finite() {
        return Err(CliError::Parse {
            line,
            msg: format!("non-finite value {field:?}"),
        });
    }
    Ok(v)
}

pub fn parse_points(reader: impl BufRead) -> Result<PointSet<f64>> {
    let rows = data_rows(reader)?;
    let Some((_, first)) = rows.first() else {
        return Err(CliError::Parse {
            line: 0,
            msg: "no data rows".into(),
        });
    };
    let dim = first.len();
    let mut coords = Vec::with_capacity(rows.len() * dim);
    for (line, fields) in &rows {
        if fields.len() != dim {
            return Err(CliError::Parse {
                line: *line,
                msg: format!("expected {dim} coordinates, found {}", fields.len()),
            });
        }
        for f in fields {
            coords.push(parse_number(*line, f)?);
        }
    }
    Ok(PointSet::new(dim, coords)?)
}

pub fn parse_points_str(text: &str) -> Result<PointSet<f64>> {
    parse_points(text.as_bytes())
}

/// Writes one point per line using the shortest round-trip decimal form.
pub fn write_points(points: &PointSet<f64>, mut out: impl Write) -> Result<()> {
    for p in points.iter() {
        let line: Vec<String> = p.iter().map(|c| format!("{c:?}")).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    /// Square matrix with a zero diagonal, else edge list.
    Auto,
    Matrix,
    Edges,
}

pub fn parse_graph(
    reader: impl BufRead,
    format: GraphFormat,
) -> Result<WeightedCompleteGraph<f64>> {
    let rows = data_rows(reader)?;
    if rows.is_empty() {
        return Err(CliError::Parse {
            line: 0,
            msg: "no data rows".into(),
        });
    }
    let format = match format {
        GraphFormat::Auto => {
            let n = rows.len();
            let square = rows.iter().all(|(_, f)| f.len() == n);
            let zero_diagonal = square
                && rows
                    .iter()
                    .enumerate()
                    .all(|(i, (line, f))| parse_number(*line, &f[i]).is_ok_and(|v| v == 0.0));
            if square && zero_diagonal {
                GraphFormat::Matrix
            } else {
                GraphFormat::Edges
            }
        }
        other => other,
    };
    match format {
        GraphFormat::Matrix => parse_matrix(&rows),
        _ => parse_edges(&rows),
    }
}

pub fn parse_graph_str(text: &str, format: GraphFormat) -> Result<WeightedCompleteGraph<f64>> {
    parse_graph(text.as_bytes(), format)
}

fn parse_matrix(rows: &[(usize, Vec<String>)]) -> Result<WeightedCompleteGraph<f64>> {
    let n = rows.len();
    let mut weights = Vec::with_capacity(n * n);
    for (line, fields) in rows {
        if fields.len() != n {
            return Err(CliError::Parse {
                line: *line,
                msg: format!("expected {n} entries, found {}", fields.len()),
            });
        }
        for f in fields {
            weights.push(parse_number(*line, f)?);
        }
    }
    Ok(WeightedCompleteGraph::new(n, weights)?)
}

fn parse_edges(rows: &[(usize, Vec<String>)]) -> Result<WeightedCompleteGraph<f64>> {
    let mut edges = Vec::with_capacity(rows.len());
    for (line, fields) in rows {
        let line = *line;
        if fields.len() != 3 {
            return Err(CliError::Parse {
                line,
                msg: format!("expected `i j w`, found {} fields", fields.len()),
            });
        }
        let index = |f: &str| -> Result<usize> {
            f.parse().map_err(|_| CliError::Parse {
                line,
                msg: format!("bad vertex index {f:?}"),
            })
        };
        let (i, j, w) = (
            index(&fields[0])?,
            index(&fields[1])?,
            parse_number(line, &fields[2])?,
        );
        if i == j {
            return Err(CliError::Parse {
                line,
                msg: format!("self-loop on vertex {i}"),
            });
        }
        if w <= 0.0 {
            return Err(CliError::Parse {
                line,
                msg: format!("weight {w} is not positive"),
            });
        }
        edges.push((line, i, j, w));
    }
    let n = edges
        .iter()
        .map(|&(_, i, j, _)| i.max(j))
        .max()
        .unwrap_or(0)
        + 1;
    let mut weights: Vec<Option<f64>> = vec![None; n * n];
    for &(line, i, j, w) in &edges {
        for (a, b) in [(i, j), (j, i)] {
            match weights[a * n + b] {
                Some(old) if old != w => {
                    return Err(CliError::Parse {
                        line,
                        msg: format!("conflicting weights for pair ({i}, {j})"),
                    })
                }
                _ => weights[a * n + b] = Some(w),
            }
        }
    }
    let mut full = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            full[i * n + j] = weights[i * n + j].ok_or_else(|| CliError::Parse {
                line: 0,
                msg: format!("edge list misses pair ({}, {})", i.min(j), i.max(j)),
            })?;
        }
    }
    Ok(WeightedCompleteGraph::new(n, full)?)
}
