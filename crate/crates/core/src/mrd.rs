//! Maximum rank distance codes in GF(q)^{k x w}.
//!
//! Codes are Gabidulin codes. With `m* = max(k, w)`, `l = min(k, w)` and
//! `kappa = l - d + 1`, a message `(f_0, .., f_{kappa-1})` over GF(q^m*)
//! is the linearized polynomial `f(x) = sum_t f_t x^(q^t)`. It is evaluated
//! at `g_i = a^i` for `i < l`, where `a` is the polynomial-basis generator,
//! and each symbol `f(g_i)` is expanded over GF(q) into a row of the
//! codeword (or a column when `k > w`). The result has `q^(m* kappa)`
//! codewords and minimum rank distance `d`. When `kappa <= 0` the code is
//! the single zero matrix.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::galois::{ceil_pow, FieldElement, FieldSpec, Gf};
use crate::linalg::{rank_distance, Matrix};

/// Upper bound on the size of a rank-metric code in GF(q)^{rows x cols}
/// with minimum distance `d`: `q^(max(rows, cols) (min(rows, cols) - d + 1))`,
/// or 1 when the exponent is not positive.
pub fn singleton_bound(q: u64, rows: usize, cols: usize, d: usize) -> BigUint {
    let big = rows.max(cols) as i64;
    let small = rows.min(cols) as i64;
    ceil_pow(q, big * (small - d as i64 + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MrdParams {
    pub q: u64,
    pub rows: usize,
    pub cols: usize,
    pub d: usize,
}

impl MrdParams {
    pub fn new(q: u64, rows: usize, cols: usize, d: usize) -> Self {
        MrdParams { q, rows, cols, d }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 1 || self.d > self.rows {
            return Err(Error::InvalidParams(format!(
                "need 1 <= d <= rows, got d={} rows={}",
                self.d, self.rows
            )));
        }
        Ok(())
    }
}

/// How expanded symbols are laid out in a codeword matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `k <= w`: symbol `i` becomes row `i`.
    Rows,
    /// `k > w`: symbol `i` becomes column `i`.
    Columns,
}

struct Encoder {
    field: Arc<FieldSpec>,
    eval_points: Vec<FieldElement>,
    // frobenius[i][t] = eval_points[i]^(q^t)
    frobenius: Vec<Vec<FieldElement>>,
}

pub struct MrdCode {
    params: MrdParams,
    base: Arc<Gf>,
    ext_degree: usize,
    length: usize,
    msg_dim: usize,
    orientation: Orientation,
    encoder: OnceLock<Encoder>,
}

impl std::fmt::Debug for MrdCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MrdCode")
            .field("params", &self.params)
            .field("ext_degree", &self.ext_degree)
            .field("length", &self.length)
            .field("msg_dim", &self.msg_dim)
            .field("orientation", &self.orientation)
            .finish()
    }
}

impl MrdCode {
    pub fn build(params: MrdParams) -> Result<Self> {
        params.validate()?;
        let base = Arc::new(Gf::with_order(params.q)?);
        Self::build_over(base, params.rows, params.cols, params.d)
    }

    /// Builds over an existing base field, so several codes can share it.
    pub fn build_over(base: Arc<Gf>, rows: usize, cols: usize, d: usize) -> Result<Self> {
        let params = MrdParams::new(u64::from(base.order()), rows, cols, d);
        params.validate()?;
        let ext_degree = rows.max(cols);
        let length = rows.min(cols);
        let msg_dim = (length + 1).saturating_sub(d);
        let orientation = if rows <= cols {
            Orientation::Rows
        } else {
            Orientation::Columns
        };
        Ok(MrdCode {
            params,
            base,
            ext_degree,
            length,
            msg_dim,
            orientation,
            encoder: OnceLock::new(),
        })
    }

    pub fn params(&self) -> MrdParams {
        self.params
    }

    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }

    pub fn rows(&self) -> usize {
        self.params.rows
    }

    pub fn cols(&self) -> usize {
        self.params.cols
    }

    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    /// Number of evaluation points.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of GF(q^m*) symbols in a message; 0 for the one-word code.
    pub fn msg_dim(&self) -> usize {
        self.msg_dim
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_trivial(&self) -> bool {
        self.msg_dim == 0
    }

    pub fn size(&self) -> BigUint {
        if self.is_trivial() {
            BigUint::one()
        } else {
            BigUint::from(self.base.order()).pow((self.ext_degree * self.msg_dim) as u32)
        }
    }

    /// The extension field GF(q^m*); built on first use.
    pub fn field(&self) -> Result<Arc<FieldSpec>> {
        if self.is_trivial() {
            return Err(Error::TrivialCode);
        }
        Ok(Arc::clone(&self.encoder().field))
    }

    pub fn eval_points(&self) -> Result<&[FieldElement]> {
        if self.is_trivial() {
            return Err(Error::TrivialCode);
        }
        Ok(&self.encoder().eval_points)
    }

    fn encoder(&self) -> &Encoder {
        self.encoder.get_or_init(|| {
            let field = FieldSpec::extension(Arc::clone(&self.base), self.ext_degree)
                .expect("extension degree is positive");
            let q = u64::from(self.base.order());
            let eval_points: Vec<_> = (0..self.length).map(|i| field.basis_element(i)).collect();
            let frobenius = eval_points
                .iter()
                .map(|g| {
                    let mut powers = Vec::with_capacity(self.msg_dim);
                    let mut cur = g.clone();
                    for _ in 0..self.msg_dim {
                        let next = cur.pow(q);
                        powers.push(std::mem::replace(&mut cur, next));
                    }
                    powers
                })
                .collect();
            Encoder {
                field,
                eval_points,
                frobenius,
            }
        })
    }

    pub fn zero_codeword(&self) -> Matrix {
        Matrix::zeros(Arc::clone(&self.base), self.params.rows, self.params.cols)
    }

    /// Evaluates the message polynomial at the evaluation points and
    /// expands the symbols over GF(q).
    pub fn encode(&self, message: &[FieldElement]) -> Result<Matrix> {
        if self.is_trivial() {
            return Err(Error::TrivialCode);
        }
        if message.len() != self.msg_dim {
            return Err(Error::LengthMismatch {
                expected: self.msg_dim,
                got: message.len(),
            });
        }
        let enc = self.encoder();
        if message.iter().any(|f| **f.spec() != *enc.field) {
            return Err(Error::SpecMismatch);
        }
        let mut out = self.zero_codeword();
        for (i, powers) in enc.frobenius.iter().enumerate() {
            let mut symbol = enc.field.zero();
            for (f, g) in message.iter().zip(powers) {
                symbol = symbol.checked_add(&f.checked_mul(g)?)?;
            }
            for (j, &digit) in symbol.expand().iter().enumerate() {
                match self.orientation {
                    Orientation::Rows => out.set(i, j, digit),
                    Orientation::Columns => out.set(j, i, digit),
                }
            }
        }
        Ok(out)
    }

    /// Message whose `kappa * m*` base field digits are `digits`, symbol
    /// `t` taking digits `t*m* .. (t+1)*m*`.
    pub fn message_from_digits(&self, digits: &[u32]) -> Result<Vec<FieldElement>> {
        let field = self.field()?;
        let m = self.ext_degree;
        if digits.len() != m * self.msg_dim {
            return Err(Error::LengthMismatch {
                expected: m * self.msg_dim,
                got: digits.len(),
            });
        }
        digits.chunks(m).map(|c| field.element(c)).collect()
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        let size = self.size();
        if size > BigUint::from(cap) {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(())
    }

    /// All codewords in message-counter order: digit 0 of the counter is
    /// the constant coordinate of `f_0` and moves fastest.
    pub fn codewords(&self, cap: u64) -> Result<Codewords<'_>> {
        self.check_cap(cap)?;
        Ok(Codewords {
            code: self,
            digits: vec![0; self.ext_degree * self.msg_dim],
            done: false,
        })
    }

    /// Minimum rank over nonzero codewords; equals the minimum distance
    /// because the code is linear.
    pub fn min_rank_distance(&self, cap: u64) -> Result<usize> {
        if self.is_trivial() {
            return Err(Error::TrivialCode);
        }
        let words: Vec<Matrix> = self.codewords(cap)?.collect();
        Ok(words
            .par_iter()
            .filter(|w| !w.is_zero())
            .map(Matrix::rank)
            .min()
            .expect("nontrivial code has a nonzero word"))
    }

    /// Minimum rank distance over all pairs of codewords.
    pub fn min_rank_distance_pairwise(&self, cap: u64) -> Result<usize> {
        if self.is_trivial() {
            return Err(Error::TrivialCode);
        }
        let words: Vec<Matrix> = self.codewords(cap)?.collect();
        Ok((0..words.len())
            .into_par_iter()
            .filter_map(|i| {
                words[i + 1..]
                    .iter()
                    .map(|b| rank_distance(&words[i], b).expect("same shape"))
                    .min()
            })
            .min()
            .expect("at least two codewords"))
    }

    pub fn size_u64(&self) -> Option<u64> {
        self.size().to_u64()
    }
}

pub struct Codewords<'a> {
    code: &'a MrdCode,
    digits: Vec<u32>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        if self.code.is_trivial() {
            self.done = true;
            return Some(self.code.zero_codeword());
        }
        let msg = self
            .code
            .message_from_digits(&self.digits)
            .expect("counter digits are in range");
        let word = self.code.encode(&msg).expect("message has the right shape");
        let q = self.code.base.order();
        self.done = true;
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < q {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 1 << 16;

    fn code(q: u64, k: usize, w: usize, d: usize) -> MrdCode {
        MrdCode::build(MrdParams::new(q, k, w, d)).unwrap()
    }

    #[test]
    fn singleton_bound_examples() {
        assert_eq!(singleton_bound(2, 3, 4, 2), BigUint::from(256u32));
        assert_eq!(singleton_bound(2, 3, 1, 2), BigUint::one());
        assert_eq!(singleton_bound(3, 2, 2, 2), BigUint::from(9u32));
        assert_eq!(singleton_bound(2, 3, 0, 2), BigUint::one());
    }

    #[test]
    fn build_examples() {
        assert_eq!(code(2, 2, 2, 2).size(), BigUint::from(4u32));
        let t = code(2, 3, 1, 2);
        assert!(t.is_trivial());
        assert_eq!(t.size(), BigUint::one());
        assert_eq!(code(2, 2, 4, 2).size(), BigUint::from(16u32));
        assert_eq!(code(2, 3, 1, 2).orientation(), Orientation::Columns);
    }

    #[test]
    fn build_rejects_bad_distance() {
        assert!(matches!(
            MrdCode::build(MrdParams::new(2, 2, 3, 3)),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            MrdCode::build(MrdParams::new(2, 2, 3, 0)),
            Err(Error::InvalidParams(_))
        ));
        assert_eq!(
            MrdCode::build(MrdParams::new(6, 2, 3, 1)).unwrap_err(),
            Error::NotPrimePower(6)
        );
    }

    #[test]
    fn encode_identity_polynomial() {
        let c = code(2, 2, 2, 2);
        let f = c.field().unwrap();
        let m = c.encode(&[f.one()]).unwrap();
        assert_eq!(m, Matrix::identity(Arc::clone(c.base()), 2));
        let z = c.encode(&[f.zero()]).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn encode_errors() {
        let c = code(2, 2, 3, 1);
        let f = c.field().unwrap();
        assert_eq!(
            c.encode(&[f.one()]).unwrap_err(),
            Error::LengthMismatch {
                expected: 2,
                got: 1
            }
        );
        let other = FieldSpec::new(3, 3).unwrap();
        assert_eq!(
            c.encode(&[other.one(), other.one()]).unwrap_err(),
            Error::SpecMismatch
        );
        let t = code(2, 3, 1, 2);
        assert_eq!(t.encode(&[]).unwrap_err(), Error::TrivialCode);
    }

    #[test]
    fn encode_is_linear() {
        let c = code(3, 2, 3, 1);
        let f = c.field().unwrap();
        let all = f.elements(1000).unwrap();
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(7) {
                let x = c.encode(&[a.clone(), b.clone()]).unwrap();
                let y = c.encode(&[b.clone(), a.clone()]).unwrap();
                let sum = c
                    .encode(&[a.checked_add(b).unwrap(), b.checked_add(a).unwrap()])
                    .unwrap();
                assert_eq!(x.checked_add(&y).unwrap(), sum);
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let t: Vec<_> = code(2, 3, 1, 2).codewords(1).unwrap().collect();
        assert_eq!(t.len(), 1);
        assert!(t[0].is_zero());
        assert_eq!((t[0].rows(), t[0].cols()), (3, 1));

        let words: Vec<_> = code(2, 3, 3, 3).codewords(CAP).unwrap().collect();
        assert_eq!(words.len(), 8);
        assert!(words[0].is_zero());
        assert!(words[1..].iter().all(|w| w.rank() == 3));

        assert!(matches!(
            code(2, 2, 4, 1).codewords(255),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn empty_width_code() {
        let c = code(2, 2, 0, 1);
        assert!(c.is_trivial());
        let words: Vec<_> = c.codewords(1).unwrap().collect();
        assert_eq!((words[0].rows(), words[0].cols()), (2, 0));
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(code(2, 2, 2, 2).min_rank_distance(CAP).unwrap(), 2);
        assert_eq!(code(2, 2, 3, 1).min_rank_distance(CAP).unwrap(), 1);
        assert_eq!(code(3, 2, 2, 2).min_rank_distance(CAP).unwrap(), 2);
        assert_eq!(code(3, 2, 2, 2).min_rank_distance_pairwise(CAP).unwrap(), 2);
        assert_eq!(
            code(2, 3, 1, 2).min_rank_distance(CAP).unwrap_err(),
            Error::TrivialCode
        );
    }

    #[test]
    fn columns_orientation_distance() {
        // 4x2 codes expand symbols into columns
        let c = code(2, 4, 2, 2);
        assert_eq!(c.orientation(), Orientation::Columns);
        assert_eq!(c.size(), singleton_bound(2, 4, 2, 2));
        assert_eq!(c.min_rank_distance_pairwise(CAP).unwrap(), 2);
    }

    #[test]
    fn prime_power_base() {
        let c = code(4, 2, 3, 2);
        assert_eq!(c.size(), BigUint::from(64u32));
        assert_eq!(c.min_rank_distance_pairwise(CAP).unwrap(), 2);
    }
}
