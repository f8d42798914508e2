//! Parameter grids such as `k=1..4;n=1..10;variant=sin-pi-k,cos-2pi-k`.
//!
//! Entries are separated by `;`, values by `,`, and `a..b` is an inclusive
//! integer range. Expansion is in lexicographic order of the parameter
//! names, the first name varying slowest.

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    /// Sorted by name.
    pub axes: Vec<(String, Vec<String>)>,
}

fn expand_value(name: &str, item: &str) -> Result<Vec<String>, CliError> {
    let Some((lo, hi)) = item.split_once("..") else {
        return Ok(vec![item.to_string()]);
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| CliError::Usage(format!("range bounds for {name} must be integers: {item:?}")))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(CliError::Usage(format!("empty range for {name}: {item:?}")));
    }
    Ok((lo..=hi).map(|v| v.to_string()).collect())
}

impl Grid {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut axes: Vec<(String, Vec<String>)> = Vec::new();
        for entry in text.split(';').map(str::trim).filter(|e| !e.is_empty()) {
            let (name, values) = entry
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("grid entry {entry:?} is not name=values")))?;
            let name = name.trim().to_string();
            if axes.iter().any(|(n, _)| *n == name) {
                return Err(CliError::Usage(format!("parameter {name} appears twice in the grid")));
            }
            let mut expanded = Vec::new();
            for item in values.split(',').map(str::trim) {
                if item.is_empty() {
                    return Err(CliError::Usage(format!("empty value in grid entry {entry:?}")));
                }
                expanded.extend(expand_value(&name, item)?);
            }
            axes.push((name, expanded));
        }
        if axes.is_empty() {
            return Err(CliError::Usage("empty grid".into()));
        }
        axes.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Grid { axes })
    }

    /// Every point of the grid as `(name, value)` pairs, in row order.
    pub fn points(&self) -> Vec<Vec<(&str, &str)>> {
        let mut out: Vec<Vec<(&str, &str)>> = vec![Vec::new()];
        for (name, values) in &self.axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    values.iter().map(move |v| {
                        let mut p = prefix.clone();
                        p.push((name.as_str(), v.as_str()));
                        p
                    })
                })
                .collect();
        }
        out
    }
}
