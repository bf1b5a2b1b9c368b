//! Exact scalars over the Gaussian rationals and deterministic linear algebra.
//!
//! The ground field everywhere in this crate is `Q(i)`: complex numbers whose
//! real and imaginary parts are arbitrary-precision rationals. Values are kept
//! in canonical form by construction (rationals in lowest terms with positive
//! denominator), so equality is plain structural equality and every computation
//! is exact.
//!
//! Linear algebra is dense and deterministic. Reduced row echelon form always
//! chooses the leftmost available pivot column and, within it, the topmost
//! remaining row, so solution bases come out byte-identical across runs. Affine
//! systems are returned as a [`SolutionSpace`]: one particular solution plus a
//! homogeneous basis in reduced echelon form (the canonical basis of the
//! nullspace).

use num::bigint::BigInt;
use num::complex::Complex;
use num::rational::Ratio;
use num::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = Ratio<BigInt>;

/// Element of the ground field `Q(i)`: a complex number with rational parts.
pub type Scalar = Complex<Rational>;

/// Errors from scalar arithmetic, parsing, and linear-algebra entry points.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    /// Division by the zero scalar.
    #[error("division by zero")]
    DivisionByZero,
    /// Operand shapes do not line up (matrix/vector sizes, ragged rows, ...).
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A scalar literal could not be parsed.
    #[error("cannot parse {input:?} as a scalar: {reason}")]
    Parse { input: String, reason: String },
}

// ---------------------------------------------------------------------------
// Scalar construction helpers
// ---------------------------------------------------------------------------

/// The rational `p/q` as a [`Rational`]. Panics if `q == 0` (programmer error).
pub fn rational(p: i64, q: i64) -> Rational {
    Ratio::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a [`Scalar`].
pub fn int(n: i64) -> Scalar {
    Scalar::new(Ratio::from_integer(BigInt::from(n)), Rational::zero())
}

/// The rational `p/q` as a [`Scalar`]. Panics if `q == 0` (programmer error).
pub fn rat(p: i64, q: i64) -> Scalar {
    Scalar::new(rational(p, q), Rational::zero())
}

/// The purely imaginary scalar `(p/q)·i`. Panics if `q == 0`.
pub fn imag(p: i64, q: i64) -> Scalar {
    Scalar::new(Rational::zero(), rational(p, q))
}

/// Division with an explicit zero-divisor check.
pub fn checked_div(a: &Scalar, b: &Scalar) -> Result<Scalar, NumError> {
    if b.is_zero() {
        Err(NumError::DivisionByZero)
    } else {
        Ok(a.clone() / b.clone())
    }
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

/// Parse a rational literal: `p` or `p/q` with an optional leading sign.
///
/// The unicode minus sign `−` is accepted and normalized. A zero denominator
/// is a parse error.
pub fn parse_rational(text: &str) -> Result<Rational, NumError> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    parse_rational_clean(&cleaned, text)
}

fn parse_rational_clean(cleaned: &str, original: &str) -> Result<Rational, NumError> {
    let err = |reason: &str| NumError::Parse {
        input: original.to_string(),
        reason: reason.to_string(),
    };
    if cleaned.is_empty() {
        return Err(err("empty rational"));
    }
    let mut parts = cleaned.splitn(2, '/');
    let numer_txt = parts.next().unwrap();
    let numer = BigInt::from_str(numer_txt).map_err(|_| err("invalid integer numerator"))?;
    let denom = match parts.next() {
        None => BigInt::one(),
        Some(d) => BigInt::from_str(d).map_err(|_| err("invalid integer denominator"))?,
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Ratio::new(numer, denom))
}

/// Canonical text for a rational: `p` when the denominator is `1`, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a scalar literal over `Q(i)`.
///
/// Accepted forms: a rational (`-4`, `1/2`), a pure imaginary part (`2*i`,
/// `2i`, `i`, `-i`, `-2/5*i`), or a sum `re±im*i` (`1+2*i`, `1/3-2/5*i`,
/// `0+2*i`). Whitespace is ignored and the unicode minus sign is accepted.
pub fn parse_scalar(text: &str) -> Result<Scalar, NumError> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let err = |reason: &str| NumError::Parse {
        input: text.to_string(),
        reason: reason.to_string(),
    };
    if cleaned.is_empty() {
        return Err(err("empty scalar"));
    }
    // The imaginary part, when present, is the trailing summand; locate the
    // sign that separates it from the real part. A separating sign always
    // follows a digit (a completed real part), which rules out leading signs
    // and denominator signs such as the one in "3/-6".
    let mut split_at = None;
    let mut prev_is_digit = false;
    for (idx, c) in cleaned.char_indices() {
        if (c == '+' || c == '-') && prev_is_digit {
            split_at = Some(idx);
        }
        prev_is_digit = c.is_ascii_digit();
    }
    match split_at {
        Some(idx) => {
            let (re_txt, im_txt) = cleaned.split_at(idx);
            if !im_txt.ends_with('i') {
                return Err(err("trailing summand must be an imaginary part"));
            }
            let re = parse_rational_clean(re_txt, text)?;
            let im = parse_imag_part(im_txt, text)?;
            Ok(Scalar::new(re, im))
        }
        None => {
            if cleaned.ends_with('i') {
                let im = parse_imag_part(&cleaned, text)?;
                Ok(Scalar::new(Rational::zero(), im))
            } else {
                let re = parse_rational_clean(&cleaned, text)?;
                Ok(Scalar::new(re, Rational::zero()))
            }
        }
    }
}

/// Parse an imaginary summand `[sign][coeff][*]i` into its coefficient.
fn parse_imag_part(part: &str, original: &str) -> Result<Rational, NumError> {
    let err = |reason: &str| NumError::Parse {
        input: original.to_string(),
        reason: reason.to_string(),
    };
    let body = part.strip_suffix('i').ok_or_else(|| err("expected imaginary part"))?;
    let body = body.strip_suffix('*').unwrap_or(body);
    match body {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        other => parse_rational_clean(other, original),
    }
}

/// Canonical text for a scalar.
///
/// `0` for zero; `p[/q]` for reals; `p[/q]*i` for pure imaginaries; otherwise
/// `re+im*i` or `re-im*i` with the imaginary sign folded into the separator.
pub fn format_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        return format_rational(&s.re);
    }
    let im_body = format!("{}*i", format_rational(&s.im.abs()));
    if s.re.is_zero() {
        if s.im.is_negative() {
            format!("-{im_body}")
        } else {
            im_body
        }
    } else {
        let sign = if s.im.is_negative() { '-' } else { '+' };
        format!("{}{}{}", format_rational(&s.re), sign, im_body)
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense row-major matrix over `Q(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    /// Build from a non-empty list of equal-length rows.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix, NumError> {
        let cols = rows
            .first()
            .map(|r| r.len())
            .ok_or_else(|| NumError::DimensionMismatch("from_rows needs at least one row".into()))?;
        Matrix::from_rows_cols(rows, cols)
    }

    /// Build from a (possibly empty) list of rows of the given width.
    pub fn from_rows_cols(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix, NumError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(NumError::DimensionMismatch(format!(
                    "ragged rows: expected width {cols}, found {}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`. Panics when out of bounds (programmer error).
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }

    /// Overwrite the entry at `(i, j)`. Panics when out of bounds.
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        self.data[i * self.cols + j] = value;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Scalar] {
        assert!(i < self.rows, "matrix row out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// All entries, row-major.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Matrix–vector product. The vector length must equal `cols`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, NumError> {
        if v.len() != self.cols {
            return Err(NumError::DimensionMismatch(format!(
                "matrix has {} columns but vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, vj) in v.iter().enumerate() {
                    if !self.get(i, j).is_zero() && !vj.is_zero() {
                        acc += self.get(i, j).clone() * vj.clone();
                    }
                }
                acc
            })
            .collect())
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, NumError> {
        if self.cols != rhs.rows {
            return Err(NumError::DimensionMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.get(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let r = rhs.get(k, j);
                    if r.is_zero() {
                        continue;
                    }
                    let sum = out.get(i, j).clone() + lik.clone() * r.clone();
                    out.set(i, j, sum);
                }
            }
        }
        Ok(out)
    }

    /// Transposed matrix.
    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Deterministic pivoting: columns are scanned left to right and the first
    /// (topmost) remaining row with a nonzero entry becomes the pivot row.
    /// Pivots are normalized to `1` and eliminated above and below.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let Some(pivot_row) = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != next_row {
                for j in 0..m.cols {
                    let a = m.get(next_row, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(next_row, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = Scalar::one() / m.get(next_row, col).clone();
            for j in 0..m.cols {
                let v = m.get(next_row, j).clone() * inv.clone();
                m.set(next_row, j, v);
            }
            for r in 0..m.rows {
                if r == next_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(next_row, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    /// Rank (number of pivots in the reduced row echelon form).
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse matrix, or `None` when the matrix is not square or singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a list of vectors: the canonical basis of their
/// span (nonzero RREF rows). All vectors must share the same length.
pub fn rref_rows(rows: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, NumError> {
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_rows(rows.to_vec())?;
    let (red, pivots) = m.rref();
    Ok((0..pivots.len()).map(|i| red.row(i).to_vec()).collect())
}

// ---------------------------------------------------------------------------
// Solution spaces
// ---------------------------------------------------------------------------

/// The full solution set of an affine linear system `A·x = b`.
///
/// When consistent, the set is `particular + span(basis)`; the basis is the
/// canonical (reduced-echelon) basis of the homogeneous nullspace of `A` and
/// the particular solution is the one with all free variables set to zero.
/// When inconsistent, `particular` is `None` and the basis still describes the
/// nullspace of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    /// Length of the unknown vector.
    pub ambient_dim: usize,
    /// A particular solution, or `None` when the system has no solution.
    pub particular: Option<Vec<Scalar>>,
    /// Canonical basis of the homogeneous solution space, in reduced echelon form.
    pub basis: Vec<Vec<Scalar>>,
}

impl SolutionSpace {
    /// Whether the underlying system has at least one solution.
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    /// Dimension of the solution set, or `None` when inconsistent.
    pub fn dim(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.basis.len())
    }

    /// The point `particular + Σ coeffs[k] · basis[k]`.
    pub fn element(&self, coeffs: &[Scalar]) -> Result<Vec<Scalar>, NumError> {
        let particular = self.particular.as_ref().ok_or_else(|| {
            NumError::DimensionMismatch("cannot sample an inconsistent system".into())
        })?;
        if coeffs.len() != self.basis.len() {
            return Err(NumError::DimensionMismatch(format!(
                "expected {} coefficients, found {}",
                self.basis.len(),
                coeffs.len()
            )));
        }
        let mut out = particular.clone();
        for (c, vec) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(vec) {
                *o = o.clone() + c.clone() * v.clone();
            }
        }
        Ok(out)
    }

    /// Whether `v` lies in the solution set.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool, NumError> {
        if v.len() != self.ambient_dim {
            return Err(NumError::DimensionMismatch(format!(
                "expected vector of length {}, found {}",
                self.ambient_dim,
                v.len()
            )));
        }
        let Some(particular) = self.particular.as_ref() else {
            return Ok(false);
        };
        let mut w: Vec<Scalar> = v
            .iter()
            .zip(particular)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        for row in &self.basis {
            let lead = match row.iter().position(|c| !c.is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if w[lead].is_zero() {
                continue;
            }
            let coeff = w[lead].clone();
            for (wi, ri) in w.iter_mut().zip(row) {
                *wi = wi.clone() - coeff.clone() * ri.clone();
            }
        }
        Ok(w.iter().all(Scalar::is_zero))
    }
}

/// Solve the affine system `A·x = b` exactly.
///
/// `b` must have one entry per row of `A`. The result carries the canonical
/// particular solution (free variables zero) and the canonical nullspace
/// basis; an inconsistent system is reported via `particular = None`.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<SolutionSpace, NumError> {
    if b.len() != a.rows() {
        return Err(NumError::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has length {}",
            a.rows(),
            b.len()
        )));
    }
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, bi.clone());
    }
    let (red, pivots) = aug.rref();
    let consistent = pivots.iter().all(|&p| p < n);
    let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < n).collect();

    let mut is_pivot = vec![false; n];
    for &p in &coeff_pivots {
        is_pivot[p] = true;
    }
    let raw_basis: Vec<Vec<Scalar>> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (row, &p) in coeff_pivots.iter().enumerate() {
                v[p] = -red.get(row, free).clone();
            }
            v
        })
        .collect();
    let basis = rref_rows(&raw_basis)?;

    let particular = if consistent {
        let mut x = vec![Scalar::zero(); n];
        for (row, &p) in coeff_pivots.iter().enumerate() {
            x[p] = red.get(row, n).clone();
        }
        Some(x)
    } else {
        None
    };

    Ok(SolutionSpace {
        ambient_dim: n,
        particular,
        basis,
    })
}

/// The nullspace of `A` as a [`SolutionSpace`] (particular solution zero).
pub fn nullspace(a: &Matrix) -> Result<SolutionSpace, NumError> {
    let zeros = vec![Scalar::zero(); a.rows()];
    solve_affine(a, &zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats_reals() {
        for (text, canonical) in [
            ("0", "0"),
            ("-4", "-4"),
            ("1/2", "1/2"),
            ("2/4", "1/2"),
            ("-6/4", "-3/2"),
            ("+5", "5"),
            ("3/-6", "-1/2"),
        ] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&s), canonical, "input {text:?}");
        }
    }

    #[test]
    fn parses_and_formats_imaginaries() {
        for (text, canonical) in [
            ("i", "1*i"),
            ("-i", "-1*i"),
            ("2*i", "2*i"),
            ("2i", "2*i"),
            ("0+2*i", "2*i"),
            ("-2/4*i", "-1/2*i"),
            ("1+2*i", "1+2*i"),
            ("1-2*i", "1-2*i"),
            ("1/3-2/5*i", "1/3-2/5*i"),
            ("-1-i", "-1-1*i"),
            ("\u{2212}3\u{2212}2*i", "-3-2*i"),
            (" 1 + 2*i ", "1+2*i"),
        ] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&s), canonical, "input {text:?}");
        }
    }

    #[test]
    fn rejects_malformed_scalars() {
        for text in ["", "abc", "1+2", "1/0", "2**i", "1+2*i+3", "3*i+1", "1/=2"] {
            assert!(parse_scalar(text).is_err(), "input {text:?} should fail");
        }
    }

    #[test]
    fn checked_div_flags_zero() {
        assert_eq!(
            checked_div(&int(1), &int(0)),
            Err(NumError::DivisionByZero)
        );
        assert_eq!(checked_div(&int(3), &imag(1, 1)).unwrap(), imag(-3, 1));
    }

    #[test]
    fn solve_affine_matches_frozen_examples() {
        // One equation x + y = 0: line through the origin.
        let a = Matrix::from_rows(vec![vec![int(1), int(1)]]).unwrap();
        let sol = solve_affine(&a, &[int(0)]).unwrap();
        assert_eq!(sol.particular, Some(vec![int(0), int(0)]));
        assert_eq!(sol.basis, vec![vec![int(1), int(-1)]]);

        // Nullspace of [1 i]: canonical basis vector [1, i].
        let a = Matrix::from_rows(vec![vec![int(1), imag(1, 1)]]).unwrap();
        let null = nullspace(&a).unwrap();
        assert_eq!(null.basis, vec![vec![int(1), imag(1, 1)]]);
        assert!(null.contains(&[imag(-1, 1), int(1)]).unwrap());

        // Inconsistent system x = 0, x = 1.
        let a = Matrix::from_rows(vec![vec![int(1)], vec![int(1)]]).unwrap();
        let sol = solve_affine(&a, &[int(0), int(1)]).unwrap();
        assert!(!sol.is_consistent());
        assert_eq!(sol.dim(), None);
    }

    #[test]
    fn solve_affine_checks_shapes() {
        let a = Matrix::from_rows(vec![vec![int(1), int(2)]]).unwrap();
        assert!(matches!(
            solve_affine(&a, &[int(1), int(2)]),
            Err(NumError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rref_is_deterministic_and_idempotent() {
        let a = Matrix::from_rows(vec![
            vec![int(0), int(2), int(4)],
            vec![int(1), int(1), int(1)],
            vec![int(1), int(3), int(5)],
        ])
        .unwrap();
        let (r1, p1) = a.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
        assert_eq!(p1, vec![0, 1]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn inverse_round_trips() {
        let m = Matrix::from_rows(vec![
            vec![int(1), imag(1, 1)],
            vec![int(0), rat(1, 2)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(2));

        let singular = Matrix::from_rows(vec![
            vec![int(1), int(2)],
            vec![int(2), int(4)],
        ])
        .unwrap();
        assert!(singular.inverse().is_none());
    }
}
