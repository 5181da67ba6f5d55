//! Lifted MRD codes and their multi-component unions.
//!
//! Component `j` of a code with parameters `(q, n, k, d)` is the set of row
//! spaces of `[0_{k x jd} | I_k | M]` where `M` runs over an MRD code in
//! GF(q)^{k x (n-k-jd)} with minimum rank distance `d`, for
//! `j = 0 ..= (n-k)/d`. Members of different components have different
//! pivot columns, and components `j < j'` overlap in at most `k - d`
//! dimensions, so the union keeps minimum injection distance `d`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::galois::{ceil_pow, prime_power, Gf, MAX_BASE_ORDER};
use crate::linalg::{min_injection_distance, Matrix, Subspace};
use crate::mrd::MrdCode;

/// Parameters of a constant dimension code: `k`-dimensional subspaces of
/// GF(q)^n with minimum injection distance `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeParams {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl CodeParams {
    pub fn new(q: u64, n: usize, k: usize, d: usize) -> Result<Self> {
        let p = CodeParams { q, n, k, d };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if prime_power(self.q).is_none() {
            return Err(Error::NotPrimePower(self.q));
        }
        if self.q > MAX_BASE_ORDER {
            return Err(Error::InvalidParams(format!(
                "q={} exceeds {MAX_BASE_ORDER}",
                self.q
            )));
        }
        if self.d < 1 || self.d > self.k {
            return Err(Error::InvalidParams(format!(
                "need 1 <= d <= k, got d={} k={}",
                self.d, self.k
            )));
        }
        if self.n < 2 * self.k {
            return Err(Error::InvalidParams(format!(
                "need n >= 2k, got n={} k={}",
                self.n, self.k
            )));
        }
        Ok(())
    }
}

/// Row space of `[I_k | a]`.
pub fn lift(a: &Matrix) -> Subspace {
    shifted_lift(a, 0)
}

/// Row space of `[0_{k x shift} | I_k | a]`, which is already in reduced
/// row echelon form.
pub fn shifted_lift(a: &Matrix, shift: usize) -> Subspace {
    let k = a.rows();
    let w = a.cols();
    let n = shift + k + w;
    let mut entries = vec![0u32; k * n];
    for r in 0..k {
        let row = &mut entries[r * n..(r + 1) * n];
        row[shift + r] = 1;
        row[shift + k..].copy_from_slice(a.row(r));
    }
    let basis = Matrix::new(Arc::clone(a.field()), k, n, entries).expect("digits come from a");
    Subspace::from_rref_unchecked(basis)
}

/// The lifting of an MRD code with `k` rows into GF(q)^n.
#[derive(Debug, Clone)]
pub struct LiftedCode {
    pub subspaces: Vec<Subspace>,
    /// `q^((n-k)(k-d+1))`.
    pub declared_size: BigUint,
}

pub fn lift_code(mrd: &MrdCode, n: usize, cap: u64) -> Result<LiftedCode> {
    let k = mrd.rows();
    if n < k || mrd.cols() != n - k {
        return Err(Error::ShapeMismatch(format!(
            "a {k}x{} code does not lift into dimension {n}",
            mrd.cols()
        )));
    }
    let d = mrd.params().d as i64;
    let declared_size = ceil_pow(mrd.params().q, (n - k) as i64 * (k as i64 - d + 1));
    let subspaces = mrd.codewords(cap)?.map(|a| lift(&a)).collect();
    Ok(LiftedCode {
        subspaces,
        declared_size,
    })
}

pub fn component_count(params: &CodeParams) -> usize {
    (params.n - params.k) / params.d + 1
}

#[derive(Debug)]
pub struct ComponentCode {
    pub index: usize,
    /// Number of leading zero columns, `index * d`.
    pub shift: usize,
    /// Width of the MRD codewords, `n - k - shift`.
    pub width: usize,
    pub mrd: MrdCode,
    pub size: BigUint,
}

impl ComponentCode {
    pub fn pivots(&self) -> std::ops::Range<usize> {
        self.shift..self.shift + self.mrd.rows()
    }

    pub fn codewords(&self, cap: u64) -> Result<impl Iterator<Item = Subspace> + '_> {
        let shift = self.shift;
        Ok(self
            .mrd
            .codewords(cap)?
            .map(move |a| shifted_lift(&a, shift)))
    }
}

#[derive(Debug)]
pub struct MultiComponentCode {
    params: CodeParams,
    field: Arc<Gf>,
    components: Vec<ComponentCode>,
    size: BigUint,
}

impl MultiComponentCode {
    pub fn build(params: CodeParams) -> Result<Self> {
        params.validate()?;
        let field = Arc::new(Gf::with_order(params.q)?);
        let CodeParams { n, k, d, .. } = params;
        let components = (0..component_count(&params))
            .map(|j| {
                let shift = j * d;
                let width = n - k - shift;
                let mrd = MrdCode::build_over(Arc::clone(&field), k, width, d)?;
                let size = mrd.size();
                Ok(ComponentCode {
                    index: j,
                    shift,
                    width,
                    mrd,
                    size,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let size = components.iter().map(|c| &c.size).sum();
        Ok(MultiComponentCode {
            params,
            field,
            components,
            size,
        })
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn components(&self) -> &[ComponentCode] {
        &self.components
    }

    /// Sum of the component sizes.
    pub fn size(&self) -> &BigUint {
        &self.size
    }

    /// All codewords, component by component.
    pub fn codewords(&self, cap: u64) -> Result<impl Iterator<Item = Subspace> + '_> {
        if self.size > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                size: self.size.clone(),
                cap,
            });
        }
        let mut parts = Vec::with_capacity(self.components.len());
        for c in &self.components {
            parts.push(c.codewords(cap)?);
        }
        Ok(parts.into_iter().flatten())
    }

    /// Recounts the code from its enumerated codewords.
    pub fn verify(&self, cap: u64) -> Result<VerifyReport> {
        if self.size > BigUint::from(cap) {
            return Err(Error::cap_exceeded(self.size.clone(), cap));
        }
        let mut owner: HashMap<Subspace, usize> = HashMap::new();
        let mut components_disjoint = true;
        for c in &self.components {
            let expected: Vec<usize> = c.pivots().collect();
            for word in c.codewords(cap)? {
                // canonicalize again rather than trusting the lift
                let canon = word.basis().row_space();
                if canon.dim() != self.params.k || canon.pivots() != expected {
                    components_disjoint = false;
                }
                if let Some(&j) = owner.get(&canon) {
                    if j != c.index {
                        components_disjoint = false;
                    }
                } else {
                    owner.insert(canon, c.index);
                }
            }
        }
        let distinct: Vec<Subspace> = owner.into_keys().collect();
        let cardinality = BigUint::from(distinct.len());
        let min_distance = min_injection_distance(&distinct, cap)?;
        Ok(VerifyReport {
            cardinality,
            min_distance,
            components_disjoint,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub cardinality: BigUint,
    pub min_distance: usize,
    pub components_disjoint: bool,
}

/// Size of the multi-component code, summed as two series: the components
/// with `n - di >= 2k` contribute `q^((k-d+1)(n-k-di))`, the rest
/// contribute `q^(k(n-k+1-d(i+1)))`, read as 1 for a negative exponent.
pub fn size_formula(params: &CodeParams) -> Result<BigUint> {
    params.validate()?;
    let CodeParams { q, n, k, d } = *params;
    let (n, k, d) = (n as i64, k as i64, d as i64);
    let split = (n - 2 * k) / d;
    let last = (n - k) / d;
    let wide: BigUint = (0..=split)
        .map(|i| ceil_pow(q, (k - d + 1) * (n - k - d * i)))
        .sum();
    let narrow: BigUint = (split + 1..=last)
        .map(|i| ceil_pow(q, k * (n - k + 1 - d * (i + 1))))
        .sum();
    Ok(wide + narrow)
}

/// Closed form of [`size_formula`] for `d = k`:
/// `(q^n - q^(r+k)) / (q^k - 1) + 1` with `r = n mod k`.
pub fn size_closed_form_kd(q: u64, n: usize, k: usize) -> Result<BigUint> {
    CodeParams::new(q, n, k, k)?;
    let r = n % k;
    let qb = BigUint::from(q);
    let num = qb.pow(n as u32) - qb.pow((r + k) as u32);
    let den = qb.pow(k as u32) - 1u32;
    debug_assert!((&num % &den) == BigUint::default());
    Ok(num / den + 1u32)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::linalg::{injection_distance, intersection_dim, DEFAULT_VERIFY_CAP};
    use crate::mrd::MrdParams;

    fn params(q: u64, n: usize, k: usize, d: usize) -> CodeParams {
        CodeParams::new(q, n, k, d).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            CodeParams::new(2, 5, 3, 2),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            CodeParams::new(2, 6, 3, 4),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            CodeParams::new(2, 6, 3, 0),
            Err(Error::InvalidParams(_))
        ));
        assert_eq!(
            CodeParams::new(10, 6, 3, 2).unwrap_err(),
            Error::NotPrimePower(10)
        );
    }

    #[test]
    fn lift_examples() {
        let f = Arc::new(Gf::with_order(2).unwrap());
        let z = lift(&Matrix::zeros(Arc::clone(&f), 2, 2));
        assert_eq!(
            z.basis().to_rows(),
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]
        );
        let i = lift(&Matrix::identity(Arc::clone(&f), 2));
        assert_eq!(
            i.basis().to_rows(),
            vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]
        );
        assert_ne!(z, i);
    }

    #[test]
    fn shifted_lift_examples() {
        let f = Arc::new(Gf::with_order(2).unwrap());
        let a = Matrix::from_rows(Arc::clone(&f), &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(shifted_lift(&a, 0), lift(&a));

        let empty = Matrix::zeros(Arc::clone(&f), 2, 0);
        let s = shifted_lift(&empty, 2);
        assert_eq!(
            s.basis().to_rows(),
            vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
        );

        let col = Matrix::from_rows(Arc::clone(&f), &[vec![1], vec![0]]).unwrap();
        let s = shifted_lift(&col, 2);
        assert_eq!(s.ambient_dim(), 5);
        assert_eq!(s.pivots(), vec![2, 3]);
        assert_eq!(
            s.basis().to_rows(),
            vec![vec![0, 0, 1, 0, 1], vec![0, 0, 0, 1, 0]]
        );
        assert_eq!(s, s.basis().row_space());
    }

    #[test]
    fn lift_code_examples() {
        for (q, n, k, d, size, dist) in
            [(2, 4, 2, 2, 4, 2), (2, 4, 2, 1, 16, 1), (3, 4, 2, 2, 9, 2)]
        {
            let mrd = MrdCode::build(MrdParams::new(q, k, n - k, d)).unwrap();
            let lifted = lift_code(&mrd, n, DEFAULT_VERIFY_CAP).unwrap();
            assert_eq!(lifted.declared_size, big(size));
            assert_eq!(lifted.subspaces.len() as u64, size);
            assert_eq!(
                min_injection_distance(&lifted.subspaces, DEFAULT_VERIFY_CAP).unwrap(),
                dist
            );
        }
        let mrd = MrdCode::build(MrdParams::new(2, 2, 2, 2)).unwrap();
        assert!(matches!(
            lift_code(&mrd, 5, 100),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn component_count_examples() {
        assert_eq!(component_count(&params(2, 6, 2, 2)), 3);
        assert_eq!(component_count(&params(2, 7, 3, 2)), 3);
        assert_eq!(component_count(&params(2, 6, 3, 3)), 2);
    }

    #[test]
    fn structural_sizes() {
        let sizes = |p: CodeParams| -> Vec<BigUint> {
            MultiComponentCode::build(p)
                .unwrap()
                .components()
                .iter()
                .map(|c| c.size.clone())
                .collect()
        };
        assert_eq!(sizes(params(2, 6, 2, 2)), vec![big(16), big(4), big(1)]);
        assert_eq!(sizes(params(2, 7, 3, 2)), vec![big(256), big(8), big(1)]);
        assert_eq!(sizes(params(2, 6, 3, 3)), vec![big(8), big(1)]);
        let code = MultiComponentCode::build(params(2, 6, 3, 3)).unwrap();
        assert_eq!(*code.size(), big(9));
    }

    #[test]
    fn size_formula_examples() {
        assert_eq!(size_formula(&params(2, 6, 3, 2)).unwrap(), big(65));
        assert_eq!(size_formula(&params(2, 8, 3, 2)).unwrap(), big(1089));
        assert_eq!(size_formula(&params(2, 6, 2, 2)).unwrap(), big(21));
        let bad = CodeParams {
            q: 2,
            n: 5,
            k: 3,
            d: 2,
        };
        assert!(size_formula(&bad).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(size_closed_form_kd(2, 6, 2).unwrap(), big(21));
        assert_eq!(size_closed_form_kd(2, 7, 2).unwrap(), big(41));
        assert_eq!(size_closed_form_kd(2, 20, 5).unwrap(), big(33825));
        assert!(size_closed_form_kd(2, 5, 3).is_err());
    }

    #[test]
    fn enumeration_is_distinct_and_ordered() {
        let code = MultiComponentCode::build(params(2, 6, 2, 2)).unwrap();
        let words: Vec<_> = code.codewords(DEFAULT_VERIFY_CAP).unwrap().collect();
        assert_eq!(words.len(), 21);
        let set: HashSet<_> = words.iter().cloned().collect();
        assert_eq!(set.len(), 21);
        // trivial last component: <e5, e6>
        let last = words.last().unwrap();
        assert_eq!(
            last.basis().to_rows(),
            vec![vec![0, 0, 0, 0, 1, 0], vec![0, 0, 0, 0, 0, 1]]
        );
        assert!(words[..16].iter().all(|w| w.pivots() == vec![0, 1]));
        assert!(words[16..20].iter().all(|w| w.pivots() == vec![2, 3]));
        assert!(matches!(code.codewords(20), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn spread_case_intersects_trivially() {
        let code = MultiComponentCode::build(params(2, 6, 3, 3)).unwrap();
        let words: Vec<_> = code.codewords(DEFAULT_VERIFY_CAP).unwrap().collect();
        assert_eq!(words.len(), 9);
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                assert_eq!(intersection_dim(u, v).unwrap(), 0);
            }
        }
    }

    #[test]
    fn verify_examples() {
        for (q, n, k, d, size) in [(2, 6, 2, 2, 21u64), (2, 6, 3, 3, 9)] {
            let code = MultiComponentCode::build(params(q, n, k, d)).unwrap();
            let report = code.verify(DEFAULT_VERIFY_CAP).unwrap();
            assert_eq!(
                report,
                VerifyReport {
                    cardinality: big(size),
                    min_distance: d,
                    components_disjoint: true
                }
            );
        }
    }

    #[test]
    fn adjacent_components_overlap_in_at_most_k_minus_d() {
        let p = params(2, 7, 3, 2);
        let code = MultiComponentCode::build(p).unwrap();
        let comps: Vec<Vec<Subspace>> = code
            .components()
            .iter()
            .map(|c| c.codewords(DEFAULT_VERIFY_CAP).unwrap().collect())
            .collect();
        for pair in comps.windows(2) {
            for u in &pair[0] {
                for v in &pair[1] {
                    assert!(intersection_dim(u, v).unwrap() <= p.k - p.d);
                    assert!(injection_distance(u, v).unwrap() >= p.d);
                }
            }
        }
    }

    #[test]
    fn large_parameters_build_without_enumerating() {
        let code = MultiComponentCode::build(params(2, 100, 10, 5)).unwrap();
        assert_eq!(*code.size(), size_formula(&code.params()).unwrap());
        assert_eq!(code.components().len(), 19);
    }
}
