//! Lower bounds on the maximum size of constant dimension codes and
//! parameter-sweep tables comparing them with a single lifted MRD code.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::construct::{component_count, size_formula, CodeParams};
use crate::error::Result;
use crate::galois::ceil_pow;
use crate::mrd::singleton_bound;

/// Size of the lifting of one MRD code in GF(q)^{k x (n-k)}:
/// `q^((n-k)(k-d+1))`.
pub fn lifted_size(params: &CodeParams) -> BigUint {
    let CodeParams { q, n, k, d } = *params;
    ceil_pow(q, (n - k) as i64 * (k as i64 - d as i64 + 1))
}

/// Lower bound on `A_q(n, d, k)` achieved by the multi-component code.
///
/// Summed per component from the MRD size bound of each `k x (n-k-jd)`
/// block, independently of the two-series form in [`size_formula`].
pub fn lower_bound_aq(params: &CodeParams) -> Result<BigUint> {
    params.validate()?;
    let CodeParams { q, n, k, d } = *params;
    Ok((0..component_count(params))
        .map(|j| singleton_bound(q, k, n - k - j * d, d))
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub params: CodeParams,
    pub lifted_size: BigUint,
    pub multi_size: BigUint,
    /// `multi_size / lifted_size` rounded half up to four decimals.
    pub ratio: String,
}

/// Which distances a table covers for each `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DRule {
    /// Every `1 <= d <= k`.
    All,
    /// Only `d = k`.
    EqualK,
}

/// `num / den` in decimal with `places` digits after the point, rounded
/// half up, computed exactly.
pub fn ratio_decimal(num: &BigUint, den: &BigUint, places: u32) -> String {
    let scale = BigUint::from(10u32).pow(places);
    let twice = num * &scale * 2u32 + den;
    let scaled = twice.div_floor(&(den * 2u32));
    let (int, frac) = scaled.div_rem(&scale);
    if places == 0 {
        return int.to_string();
    }
    format!(
        "{int}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

/// Rows in lexicographic `(q, n, k, d)` order. Cells that are not valid
/// code parameters are skipped.
pub fn bound_table(
    q_list: &[u64],
    n_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
    d_rule: DRule,
) -> Vec<BoundRow> {
    let mut qs = q_list.to_vec();
    qs.sort_unstable();
    qs.dedup();
    let mut rows = Vec::new();
    for &q in &qs {
        for n in n_range.clone() {
            for k in k_range.clone() {
                let ds = match d_rule {
                    DRule::All => 1..=k,
                    DRule::EqualK => k..=k,
                };
                for d in ds {
                    let Ok(params) = CodeParams::new(q, n, k, d) else {
                        continue;
                    };
                    let lifted = lifted_size(&params);
                    let multi = size_formula(&params).expect("validated");
                    rows.push(BoundRow {
                        params,
                        ratio: ratio_decimal(&multi, &lifted, 4),
                        lifted_size: lifted,
                        multi_size: multi,
                    });
                }
            }
        }
    }
    rows
}

pub const CSV_HEADER: &str = "q,n,k,d,lifted_size,multi_size,ratio";

pub fn render_csv(rows: &[BoundRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let p = r.params;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            p.q, p.n, p.k, p.d, r.lifted_size, r.multi_size, r.ratio
        );
    }
    out
}

pub fn render_markdown(rows: &[BoundRow]) -> String {
    let mut out = String::from("| q | n | k | d | lifted_size | multi_size | ratio |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for r in rows {
        let p = r.params;
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            p.q, p.n, p.k, p.d, r.lifted_size, r.multi_size, r.ratio
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, n: usize, k: usize, d: usize) -> CodeParams {
        CodeParams::new(q, n, k, d).unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(
            lower_bound_aq(&params(2, 6, 3, 2)).unwrap(),
            BigUint::from(65u32)
        );
        // 2^20 + 2^16 + 2^12 + 2^8 + 2^3 + 1: the j=4 block is a 3x2 code of size 8
        assert_eq!(
            lower_bound_aq(&params(2, 13, 3, 2)).unwrap(),
            BigUint::from(1_118_473u32)
        );
        assert_eq!(
            lower_bound_aq(&params(3, 6, 2, 2)).unwrap(),
            BigUint::from(91u32)
        );
        let bad = CodeParams {
            q: 2,
            n: 3,
            k: 2,
            d: 1,
        };
        assert!(lower_bound_aq(&bad).is_err());
    }

    #[test]
    fn ratio_rounding() {
        let r = |a: u32, b: u32| ratio_decimal(&BigUint::from(a), &BigUint::from(b), 4);
        assert_eq!(r(65, 64), "1.0156");
        assert_eq!(r(9, 8), "1.1250");
        assert_eq!(r(1, 3), "0.3333");
        assert_eq!(r(2, 3), "0.6667");
        // 1.00005 rounds up
        assert_eq!(r(20001, 20000), "1.0001");
        assert_eq!(
            ratio_decimal(&BigUint::from(7u32), &BigUint::from(2u32), 0),
            "4"
        );
    }

    #[test]
    fn table_examples() {
        let rows = bound_table(&[2], 6..=7, 2..=2, DRule::EqualK);
        let sizes: Vec<_> = rows.iter().map(|r| r.multi_size.to_string()).collect();
        assert_eq!(sizes, ["21", "41"]);

        let rows = bound_table(&[2], 6..=6, 3..=3, DRule::EqualK);
        assert_eq!(rows[0].lifted_size, BigUint::from(8u32));
        assert_eq!(rows[0].multi_size, BigUint::from(9u32));
        assert_eq!(rows[0].ratio, "1.1250");
    }

    #[test]
    fn table_order_and_skipping() {
        let rows = bound_table(&[3, 2, 6, 2], 0..=6, 1..=3, DRule::All);
        let keys: Vec<_> = rows.iter().map(|r| r.params).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(keys.iter().all(|p| p.q != 6 && p.n >= 2 * p.k));
        assert!(rows.iter().all(|r| r.multi_size > r.lifted_size));
    }

    #[test]
    fn renderers() {
        let rows = bound_table(&[2], 6..=6, 3..=3, DRule::All);
        let csv = render_csv(&rows);
        assert_eq!(
            csv,
            "q,n,k,d,lifted_size,multi_size,ratio\n\
             2,6,3,1,512,585,1.1426\n\
             2,6,3,2,64,65,1.0156\n\
             2,6,3,3,8,9,1.1250\n"
        );
        assert_eq!(render_csv(&[]), "q,n,k,d,lifted_size,multi_size,ratio\n");
        let md = render_markdown(&rows);
        assert!(md.contains("| 2 | 6 | 3 | 2 | 64 | 65 | 1.0156 |"));
        assert_eq!(md.lines().count(), 5);
    }
}
