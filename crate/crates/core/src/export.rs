//! JSON interchange format for multi-component codes.
//!
//! ```json
//! {"q":2,"n":6,"k":2,"d":2,"N":"21",
//!  "components":[{"j":0,"width":4,"size":"16"}, ...],
//!  "codewords":[[[1,0,0,0,0,0],[0,1,0,0,0,0]], ...]}
//! ```
//!
//! Sizes are decimal strings. `codewords` is optional; each entry is the
//! `k x n` reduced row echelon basis of one subspace, in enumeration order.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::construct::{component_count, CodeParams, MultiComponentCode};
use crate::error::{Error, Result};
use crate::galois::Gf;
use crate::linalg::{min_injection_distance, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub j: usize,
    pub width: usize,
    pub size: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeExport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    #[serde(rename = "N")]
    pub size: String,
    pub components: Vec<ComponentEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<Vec<Vec<u32>>>>,
}

impl CodeExport {
    /// Header of `code`, plus its codewords when `cap` is given. Fails with
    /// [`Error::CapExceeded`] if the code has more than `cap` codewords.
    pub fn from_code(code: &MultiComponentCode, codeword_cap: Option<u64>) -> Result<Self> {
        let p = code.params();
        let components = code
            .components()
            .iter()
            .map(|c| ComponentEntry {
                j: c.index,
                width: c.width,
                size: c.size.to_string(),
            })
            .collect();
        let codewords = match codeword_cap {
            Some(cap) => Some(code.codewords(cap)?.map(|s| s.basis().to_rows()).collect()),
            None => None,
        };
        Ok(CodeExport {
            q: p.q,
            n: p.n,
            k: p.k,
            d: p.d,
            size: code.size().to_string(),
            components,
            codewords,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("export is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn params(&self) -> Result<CodeParams> {
        CodeParams::new(self.q, self.n, self.k, self.d)
    }
}

/// Outcome of re-checking an export against its own header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportCheck {
    /// Number of distinct well-formed codewords.
    pub distinct: usize,
    /// Entries that are not `k x n` bases of a `k`-dimensional subspace.
    pub malformed: usize,
    pub duplicates: usize,
    pub min_distance: Option<usize>,
    pub cardinality_ok: bool,
    pub min_distance_ok: bool,
    pub components_ok: bool,
}

impl ExportCheck {
    pub fn passed(&self) -> bool {
        self.cardinality_ok && self.min_distance_ok && self.components_ok
    }
}

fn parse_size(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::Format(format!("{s:?} is not a decimal integer")))
}

fn to_subspace(field: &Arc<Gf>, p: &CodeParams, rows: &[Vec<u32>]) -> Option<Subspace> {
    if rows.len() != p.k {
        return None;
    }
    let m = Matrix::from_rows(Arc::clone(field), rows).ok()?;
    if m.cols() != p.n {
        return None;
    }
    let s = m.row_space();
    (s.dim() == p.k).then_some(s)
}

/// Recomputes cardinality, minimum injection distance and the component
/// partition of an export's codewords and compares them with its header.
///
/// A header claiming `d > k` is checked against `d = k` shapes and always
/// fails the distance check, since no two `k`-dimensional subspaces are
/// further apart than `k`.
pub fn check_export(export: &CodeExport, cap: u64) -> Result<ExportCheck> {
    let (p, overstated) = match export.params() {
        Ok(p) => (p, false),
        Err(e) if export.d > export.k => (
            CodeParams::new(export.q, export.n, export.k, export.k).map_err(|_| e)?,
            true,
        ),
        Err(e) => return Err(e),
    };
    let declared = parse_size(&export.size)?;
    let words = export
        .codewords
        .as_ref()
        .ok_or_else(|| Error::Format("export has no codewords".into()))?;
    if words.len() as u64 > cap {
        return Err(Error::cap_exceeded(words.len() as u64, cap));
    }
    let field = Arc::new(Gf::with_order(p.q)?);

    let mut seen = HashSet::new();
    let mut distinct = Vec::new();
    let mut malformed = 0;
    let mut duplicates = 0;
    for rows in words {
        match to_subspace(&field, &p, rows) {
            None => malformed += 1,
            Some(s) => {
                if seen.insert(s.clone()) {
                    distinct.push(s);
                } else {
                    duplicates += 1;
                }
            }
        }
    }
    let cardinality_ok =
        malformed == 0 && duplicates == 0 && BigUint::from(distinct.len()) == declared;

    let min_distance = if distinct.len() >= 2 {
        Some(min_injection_distance(&distinct, cap)?)
    } else {
        None
    };
    let min_distance_ok = !overstated && min_distance == Some(p.d);

    let count = component_count(&p);
    let mut per_component = vec![0usize; count];
    let mut stray = false;
    for s in &distinct {
        let piv = s.pivots();
        let first = piv[0];
        let is_shifted_identity = first % p.d == 0
            && first / p.d < count
            && piv.iter().enumerate().all(|(i, &c)| c == first + i);
        if is_shifted_identity {
            per_component[first / p.d] += 1;
        } else {
            stray = true;
        }
    }
    let header_ok = export.components.len() == count
        && export.components.iter().enumerate().all(|(j, c)| {
            c.j == j
                && c.width == p.n - p.k - j * p.d
                && parse_size(&c.size).ok() == Some(BigUint::from(per_component[j]))
        });
    let components_ok = !overstated && !stray && header_ok;

    Ok(ExportCheck {
        distinct: distinct.len(),
        malformed,
        duplicates,
        min_distance,
        cardinality_ok,
        min_distance_ok,
        components_ok,
    })
}
