//! Plain-text poset files: a header line `n=<dim>` followed by one point per
//! line in `0`/`1` form, `a^1` first. Blank lines and `#` comments are skipped.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::{Point, Subposet};

pub fn parse_poset(text: &str) -> Result<Subposet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n=<dim>` header".into(),
    })?;
    let dim: usize = header
        .strip_prefix("n=")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| Error::Parse {
            line: header_line,
            message: format!("expected `n=<dim>`, found {header:?}"),
        })?;
    let mut s = Subposet::empty(dim).map_err(|e| Error::Parse {
        line: header_line,
        message: e.to_string(),
    })?;

    let mut seen = HashSet::new();
    for (line, raw) in lines {
        let p = Point::parse(raw).map_err(|e| Error::Parse {
            line,
            message: match e {
                Error::Parse { message, .. } => message,
                other => other.to_string(),
            },
        })?;
        if p.dim() != dim {
            return Err(Error::Parse {
                line,
                message: format!("point {raw:?} has {} coordinates, header says {dim}", p.dim()),
            });
        }
        if !seen.insert(p) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate point {raw}"),
            });
        }
        s.insert(p);
    }
    Ok(s)
}

pub fn write_poset(s: &Subposet) -> String {
    let mut out = format!("n={}\n", s.dim());
    for p in s.iter() {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
