//! Text formats for graphs.
//!
//! Edge lists: first line `n`, then one `i j` pair per line, 1-based,
//! whitespace separated. `#` starts a comment that runs to end of line and
//! blank lines are skipped.
//!
//! graph6: the usual bit-packed upper triangle with ASCII offset 63.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found `{s}`"),
            })
        };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse {
                        line,
                        message: "first line must hold only the vertex count".into(),
                    });
                }
                n = Some(number(fields[0])?);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected `i j`, found {} fields", fields.len()),
                    });
                }
                let (i, j) = (number(fields[0])?, number(fields[1])?);
                // validate here so the error carries the line number
                Graph::from_edge_list(count, &[(i, j)]).map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })?;
                pairs.push((i, j));
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::from_edge_list(n, &pairs).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", j, i));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let err = |position: usize, message: &str| Error::Graph6 {
        position,
        message: message.to_string(),
    };
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(pos, "byte outside the printable range 63..=126"));
        }
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(1, "graphs with more than 258047 vertices are not supported"));
            }
            if bytes.len() < 4 {
                return Err(err(bytes.len(), "truncated vertex count"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let body = &bytes[body_start..];
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() != bytes_needed {
        return Err(err(
            body_start + body.len().min(bytes_needed),
            &format!("expected {bytes_needed} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &pairs).map_err(|e| err(0, &e.to_string()))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
