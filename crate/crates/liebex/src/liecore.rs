//! Basis-indexed Lie algebras, Lie coalgebras, Lie bialgebras, and their
//! exact law checkers.
//!
//! All structures are stored through structure constants relative to a named
//! ordered basis, so every axiom becomes a finite family of scalar identities.
//! Checkers never answer just yes/no: they return a [`VerdictReport`] listing
//! each violated law instance together with the exact residual vector, in a
//! deterministic order (laws in a fixed sequence, index tuples ascending).
//!
//! Structures are plain data and may hold axiom-violating tables on purpose —
//! that is what makes the checkers testable. Constructors enforce only shape
//! invariants (matching spaces, table sizes); the dedicated `from_skew_entries`
//! constructors additionally build antisymmetry in by construction.

use crate::exactnum::{format_scalar, Matrix, Scalar};
use num::Zero;
use std::fmt;

/// Shape-level construction error (mismatched spaces, bad table sizes, ...).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("shape mismatch: {0}")]
pub struct ShapeError(pub String);

// ---------------------------------------------------------------------------
// Spaces and vectors
// ---------------------------------------------------------------------------

/// A finite-dimensional vector space with a named, ordered basis.
///
/// Spaces are compared by content: two spaces with the same name and the same
/// basis labels are the same space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSpace {
    /// Human-readable space name (used in reports).
    pub name: String,
    /// Basis labels; the dimension is the length and is always at least 1.
    pub basis: Vec<String>,
}

impl BasisSpace {
    /// Build a space; the basis must be non-empty with distinct labels.
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Result<BasisSpace, ShapeError> {
        if basis.is_empty() {
            return Err(ShapeError("a BasisSpace needs at least one basis label".into()));
        }
        for (i, label) in basis.iter().enumerate() {
            if basis[..i].contains(label) {
                return Err(ShapeError(format!("duplicate basis label `{label}`")));
            }
        }
        Ok(BasisSpace {
            name: name.into(),
            basis,
        })
    }

    /// Dimension of the space.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A vector expressed in the basis of a [`BasisSpace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    /// The space the coordinates refer to.
    pub space: BasisSpace,
    /// One coordinate per basis element.
    pub coords: Vec<Scalar>,
}

impl Vector {
    /// Build a vector; the coordinate count must match the dimension.
    pub fn new(space: BasisSpace, coords: Vec<Scalar>) -> Result<Vector, ShapeError> {
        if coords.len() != space.dim() {
            return Err(ShapeError(format!(
                "vector in {} needs {} coordinates, found {}",
                space.name,
                space.dim(),
                coords.len()
            )));
        }
        Ok(Vector { space, coords })
    }

    /// The zero vector.
    pub fn zero(space: BasisSpace) -> Vector {
        let coords = vec![Scalar::zero(); space.dim()];
        Vector { space, coords }
    }

    /// The `k`-th basis vector.
    pub fn basis(space: BasisSpace, k: usize) -> Vector {
        let mut v = Vector::zero(space);
        v.coords[k] = Scalar::one();
        v
    }

    /// Whether all coordinates vanish.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

use num::One;

// ---------------------------------------------------------------------------
// Tensors
// ---------------------------------------------------------------------------

/// An element of `L ⊗ R` for two basis spaces, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    /// Space of the first tensor leg.
    pub left: BasisSpace,
    /// Space of the second tensor leg.
    pub right: BasisSpace,
    coeffs: Vec<Scalar>,
}

impl Tensor2 {
    /// The zero tensor in `left ⊗ right`.
    pub fn zero(left: BasisSpace, right: BasisSpace) -> Tensor2 {
        let coeffs = vec![Scalar::zero(); left.dim() * right.dim()];
        Tensor2 {
            left,
            right,
            coeffs,
        }
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.left.dim() && j < self.right.dim());
        i * self.right.dim() + j
    }

    /// Coefficient of `e_i ⊗ f_j`.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j)]
    }

    /// Overwrite the coefficient of `e_i ⊗ f_j`.
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        let k = self.idx(i, j);
        self.coeffs[k] = value;
    }

    /// Add `value` to the coefficient of `e_i ⊗ f_j`.
    pub fn add_to(&mut self, i: usize, j: usize, value: Scalar) {
        let k = self.idx(i, j);
        self.coeffs[k] = self.coeffs[k].clone() + value;
    }

    /// All coefficients, row-major over (left, right).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Sum of two tensors. Panics when the spaces differ (programmer error).
    pub fn plus(&self, other: &Tensor2) -> Tensor2 {
        assert!(
            self.left == other.left && self.right == other.right,
            "tensor space mismatch in plus"
        );
        let mut out = self.clone();
        for (o, v) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = o.clone() + v.clone();
        }
        out
    }

    /// Difference of two tensors. Panics when the spaces differ.
    pub fn minus(&self, other: &Tensor2) -> Tensor2 {
        self.plus(&other.neg())
    }

    /// Negated tensor.
    pub fn neg(&self) -> Tensor2 {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = -o.clone();
        }
        out
    }

    /// Tensor scaled by `c`.
    pub fn scaled(&self, c: &Scalar) -> Tensor2 {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = o.clone() * c.clone();
        }
        out
    }

    /// The flip `u ⊗ v ↦ v ⊗ u` into `right ⊗ left`.
    pub fn twist(&self) -> Tensor2 {
        let mut out = Tensor2::zero(self.right.clone(), self.left.clone());
        for i in 0..self.left.dim() {
            for j in 0..self.right.dim() {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Apply a linear substitution to the left leg: `e_u ↦ Σ f(u)[w] e'_w`.
    pub fn map_left<F: Fn(usize) -> Vec<Scalar>>(&self, to: &BasisSpace, f: F) -> Tensor2 {
        let mut out = Tensor2::zero(to.clone(), self.right.clone());
        for u in 0..self.left.dim() {
            let image = f(u);
            debug_assert_eq!(image.len(), to.dim());
            for j in 0..self.right.dim() {
                let c = self.get(u, j);
                if c.is_zero() {
                    continue;
                }
                for (w, iw) in image.iter().enumerate() {
                    if !iw.is_zero() {
                        out.add_to(w, j, c.clone() * iw.clone());
                    }
                }
            }
        }
        out
    }

    /// Apply a linear substitution to the right leg.
    pub fn map_right<F: Fn(usize) -> Vec<Scalar>>(&self, to: &BasisSpace, f: F) -> Tensor2 {
        let mut out = Tensor2::zero(self.left.clone(), to.clone());
        for v in 0..self.right.dim() {
            let image = f(v);
            debug_assert_eq!(image.len(), to.dim());
            for i in 0..self.left.dim() {
                let c = self.get(i, v);
                if c.is_zero() {
                    continue;
                }
                for (w, iw) in image.iter().enumerate() {
                    if !iw.is_zero() {
                        out.add_to(i, w, c.clone() * iw.clone());
                    }
                }
            }
        }
        out
    }

    /// Replace the right leg by a rank-2 expansion: `u ⊗ e_v ↦ u ⊗ f(v)` with
    /// `f(v) ∈ a ⊗ b`, producing an element of `left ⊗ a ⊗ b`.
    pub fn expand_right<F: Fn(usize) -> Tensor2>(
        &self,
        a: &BasisSpace,
        b: &BasisSpace,
        f: F,
    ) -> Tensor3 {
        let mut out = Tensor3::zero(self.left.clone(), a.clone(), b.clone());
        for v in 0..self.right.dim() {
            let t = f(v);
            debug_assert!(t.left == *a && t.right == *b);
            if t.is_zero() {
                continue;
            }
            for i in 0..self.left.dim() {
                let c = self.get(i, v);
                if c.is_zero() {
                    continue;
                }
                for p in 0..a.dim() {
                    for q in 0..b.dim() {
                        let w = t.get(p, q);
                        if !w.is_zero() {
                            out.add_to(i, p, q, c.clone() * w.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// Replace the left leg by a rank-2 expansion: `e_u ⊗ v ↦ f(u) ⊗ v` with
    /// `f(u) ∈ a ⊗ b`, producing an element of `a ⊗ b ⊗ right`.
    pub fn expand_left<F: Fn(usize) -> Tensor2>(
        &self,
        a: &BasisSpace,
        b: &BasisSpace,
        f: F,
    ) -> Tensor3 {
        let mut out = Tensor3::zero(a.clone(), b.clone(), self.right.clone());
        for u in 0..self.left.dim() {
            let t = f(u);
            debug_assert!(t.left == *a && t.right == *b);
            if t.is_zero() {
                continue;
            }
            for j in 0..self.right.dim() {
                let c = self.get(u, j);
                if c.is_zero() {
                    continue;
                }
                for p in 0..a.dim() {
                    for q in 0..b.dim() {
                        let w = t.get(p, q);
                        if !w.is_zero() {
                            out.add_to(p, q, j, c.clone() * w.clone());
                        }
                    }
                }
            }
        }
        out
    }
}

/// An element of `A ⊗ B ⊗ C` for three basis spaces, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    /// Space of the first leg.
    pub s1: BasisSpace,
    /// Space of the second leg.
    pub s2: BasisSpace,
    /// Space of the third leg.
    pub s3: BasisSpace,
    coeffs: Vec<Scalar>,
}

impl Tensor3 {
    /// The zero tensor in `s1 ⊗ s2 ⊗ s3`.
    pub fn zero(s1: BasisSpace, s2: BasisSpace, s3: BasisSpace) -> Tensor3 {
        let coeffs = vec![Scalar::zero(); s1.dim() * s2.dim() * s3.dim()];
        Tensor3 { s1, s2, s3, coeffs }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.s1.dim() && j < self.s2.dim() && k < self.s3.dim());
        (i * self.s2.dim() + j) * self.s3.dim() + k
    }

    /// Coefficient of `e_i ⊗ f_j ⊗ g_k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j, k)]
    }

    /// Add `value` to the coefficient of `e_i ⊗ f_j ⊗ g_k`.
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = self.coeffs[n].clone() + value;
    }

    /// All coefficients, row-major over (s1, s2, s3).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Sum of two tensors. Panics when the spaces differ (programmer error).
    pub fn plus(&self, other: &Tensor3) -> Tensor3 {
        assert!(
            self.s1 == other.s1 && self.s2 == other.s2 && self.s3 == other.s3,
            "tensor space mismatch in plus"
        );
        let mut out = self.clone();
        for (o, v) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = o.clone() + v.clone();
        }
        out
    }

    /// Difference of two tensors. Panics when the spaces differ.
    pub fn minus(&self, other: &Tensor3) -> Tensor3 {
        self.plus(&other.neg())
    }

    /// Negated tensor.
    pub fn neg(&self) -> Tensor3 {
        let mut out = self.clone();
        for o in out.coeffs.iter_mut() {
            *o = -o.clone();
        }
        out
    }

    /// The flip of the first two legs `u ⊗ v ⊗ w ↦ v ⊗ u ⊗ w`.
    pub fn twist12(&self) -> Tensor3 {
        let mut out = Tensor3::zero(self.s2.clone(), self.s1.clone(), self.s3.clone());
        for i in 0..self.s1.dim() {
            for j in 0..self.s2.dim() {
                for k in 0..self.s3.dim() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.add_to(j, i, k, c.clone());
                    }
                }
            }
        }
        out
    }

    /// Apply a linear substitution to one leg (0, 1, or 2).
    pub fn map_leg<F: Fn(usize) -> Vec<Scalar>>(
        &self,
        leg: usize,
        to: &BasisSpace,
        f: F,
    ) -> Tensor3 {
        let (s1, s2, s3) = match leg {
            0 => (to.clone(), self.s2.clone(), self.s3.clone()),
            1 => (self.s1.clone(), to.clone(), self.s3.clone()),
            2 => (self.s1.clone(), self.s2.clone(), to.clone()),
            _ => panic!("tensor leg out of range"),
        };
        let mut out = Tensor3::zero(s1, s2, s3);
        for i in 0..self.s1.dim() {
            for j in 0..self.s2.dim() {
                for k in 0..self.s3.dim() {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let source = [i, j, k][leg];
                    let image = f(source);
                    debug_assert_eq!(image.len(), to.dim());
                    for (w, iw) in image.iter().enumerate() {
                        if iw.is_zero() {
                            continue;
                        }
                        let mut t = [i, j, k];
                        t[leg] = w;
                        out.add_to(t[0], t[1], t[2], c.clone() * iw.clone());
                    }
                }
            }
        }
        out
    }
}

/// The flip `u ⊗ v ↦ v ⊗ u`.
pub fn twist(t: &Tensor2) -> Tensor2 {
    t.twist()
}

/// The flip of the first two legs of a rank-3 tensor.
pub fn twist12(t: &Tensor3) -> Tensor3 {
    t.twist12()
}

/// Whether `t` is antisymmetric (`t = −twist(t)`) on a single space.
pub fn is_wedge(t: &Tensor2) -> bool {
    t.left == t.right && t.plus(&t.twist()).is_zero()
}

// ---------------------------------------------------------------------------
// Structure maps
// ---------------------------------------------------------------------------

/// A linear map between two basis spaces, stored as a `to.dim × from.dim`
/// matrix whose `j`-th column is the image of the `j`-th basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    /// Domain space.
    pub from: BasisSpace,
    /// Codomain space.
    pub to: BasisSpace,
    matrix: Matrix,
}

impl LinearMap {
    /// Build a map; the matrix must be `to.dim × from.dim`.
    pub fn new(from: BasisSpace, to: BasisSpace, matrix: Matrix) -> Result<LinearMap, ShapeError> {
        if matrix.rows() != to.dim() || matrix.cols() != from.dim() {
            return Err(ShapeError(format!(
                "linear map {} → {} needs a {}×{} matrix, found {}×{}",
                from.name,
                to.name,
                to.dim(),
                from.dim(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearMap { from, to, matrix })
    }

    /// The zero map.
    pub fn zero(from: BasisSpace, to: BasisSpace) -> LinearMap {
        let matrix = Matrix::zeros(to.dim(), from.dim());
        LinearMap { from, to, matrix }
    }

    /// The identity map on `space`.
    pub fn identity(space: BasisSpace) -> LinearMap {
        let matrix = Matrix::identity(space.dim());
        LinearMap {
            from: space.clone(),
            to: space,
            matrix,
        }
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Image of the `j`-th basis vector, as codomain coordinates.
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.to.dim()).map(|i| self.matrix.get(i, j).clone()).collect()
    }

    /// Apply to coordinates in the domain basis. Panics on length mismatch.
    pub fn apply(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.matrix
            .mul_vec(coords)
            .expect("linear map applied to coordinates of the wrong length")
    }

    /// Composition `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, ShapeError> {
        if inner.to != self.from {
            return Err(ShapeError(format!(
                "cannot compose: inner codomain {} is not outer domain {}",
                inner.to.name, self.from.name
            )));
        }
        let matrix = self
            .matrix
            .mul(&inner.matrix)
            .map_err(|e| ShapeError(e.to_string()))?;
        Ok(LinearMap {
            from: inner.from.clone(),
            to: self.to.clone(),
            matrix,
        })
    }

    /// Inverse map, when the matrix is square and invertible.
    pub fn inverse(&self) -> Option<LinearMap> {
        let matrix = self.matrix.inverse()?;
        Some(LinearMap {
            from: self.to.clone(),
            to: self.from.clone(),
            matrix,
        })
    }
}

/// A bilinear map `left × right → target`, stored as structure constants:
/// `m(e_i, f_j) = Σ_k c[i][j][k] · g_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearMap {
    /// Space of the first argument.
    pub left: BasisSpace,
    /// Space of the second argument.
    pub right: BasisSpace,
    /// Space of the value.
    pub target: BasisSpace,
    coeffs: Vec<Scalar>,
}

impl BilinearMap {
    /// The zero map.
    pub fn zero(left: BasisSpace, right: BasisSpace, target: BasisSpace) -> BilinearMap {
        let coeffs = vec![Scalar::zero(); left.dim() * right.dim() * target.dim()];
        BilinearMap {
            left,
            right,
            target,
            coeffs,
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.left.dim() && j < self.right.dim() && k < self.target.dim());
        (i * self.right.dim() + j) * self.target.dim() + k
    }

    /// Structure constant `c[i][j][k]`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j, k)]
    }

    /// Overwrite the structure constant `c[i][j][k]`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = value;
    }

    /// Add `value` to the structure constant `c[i][j][k]`.
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = self.coeffs[n].clone() + value;
    }

    /// All structure constants, row-major over (left, right, target).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Whether the map is identically zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Value on a pair of basis vectors, as target coordinates.
    pub fn apply_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.target.dim())
            .map(|k| self.get(i, j, k).clone())
            .collect()
    }

    /// Bilinear extension to arbitrary coordinate vectors.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert!(
            u.len() == self.left.dim() && v.len() == self.right.dim(),
            "bilinear map applied to coordinates of the wrong length"
        );
        let mut out = vec![Scalar::zero(); self.target.dim()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui.clone() * vj.clone();
                for (k, o) in out.iter_mut().enumerate() {
                    let s = self.get(i, j, k);
                    if !s.is_zero() {
                        *o = o.clone() + c.clone() * s.clone();
                    }
                }
            }
        }
        out
    }
}

/// A cobracket-shaped map `space → space ⊗ space`, stored as
/// `δ(e_i) = Σ_{j,k} d[i][j][k] · e_j ⊗ e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobracketMap {
    /// The space the cobracket lives on.
    pub space: BasisSpace,
    coeffs: Vec<Scalar>,
}

impl CobracketMap {
    /// The zero cobracket.
    pub fn zero(space: BasisSpace) -> CobracketMap {
        let n = space.dim();
        CobracketMap {
            space,
            coeffs: vec![Scalar::zero(); n * n * n],
        }
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.space.dim();
        debug_assert!(i < n && j < n && k < n);
        (i * n + j) * n + k
    }

    /// Structure constant `d[i][j][k]`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j, k)]
    }

    /// Overwrite the structure constant `d[i][j][k]`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = value;
    }

    /// Add `value` to the structure constant `d[i][j][k]`.
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.idx(i, j, k);
        self.coeffs[n] = self.coeffs[n].clone() + value;
    }

    /// All structure constants, row-major over (input, left leg, right leg).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Whether the cobracket is identically zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// `δ(e_i)` as a tensor.
    pub fn of_basis(&self, i: usize) -> Tensor2 {
        let mut t = Tensor2::zero(self.space.clone(), self.space.clone());
        let n = self.space.dim();
        for j in 0..n {
            for k in 0..n {
                let c = self.get(i, j, k);
                if !c.is_zero() {
                    t.set(j, k, c.clone());
                }
            }
        }
        t
    }

    /// Linear extension to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Tensor2 {
        assert_eq!(
            v.len(),
            self.space.dim(),
            "cobracket applied to coordinates of the wrong length"
        );
        let mut t = Tensor2::zero(self.space.clone(), self.space.clone());
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            t = t.plus(&self.of_basis(i).scaled(vi));
        }
        t
    }
}

/// A linear map `from → left ⊗ right` into a tensor square of possibly
/// different spaces, stored as `T(e_x) = Σ_{i,j} t[x][i][j] · e_i ⊗ f_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorMap {
    /// Domain space.
    pub from: BasisSpace,
    /// Space of the first tensor leg of the value.
    pub left: BasisSpace,
    /// Space of the second tensor leg of the value.
    pub right: BasisSpace,
    coeffs: Vec<Scalar>,
}

impl TensorMap {
    /// The zero map.
    pub fn zero(from: BasisSpace, left: BasisSpace, right: BasisSpace) -> TensorMap {
        let coeffs = vec![Scalar::zero(); from.dim() * left.dim() * right.dim()];
        TensorMap {
            from,
            left,
            right,
            coeffs,
        }
    }

    fn idx(&self, x: usize, i: usize, j: usize) -> usize {
        debug_assert!(x < self.from.dim() && i < self.left.dim() && j < self.right.dim());
        (x * self.left.dim() + i) * self.right.dim() + j
    }

    /// Structure constant `t[x][i][j]`.
    pub fn get(&self, x: usize, i: usize, j: usize) -> &Scalar {
        &self.coeffs[self.idx(x, i, j)]
    }

    /// Overwrite the structure constant `t[x][i][j]`.
    pub fn set(&mut self, x: usize, i: usize, j: usize, value: Scalar) {
        let n = self.idx(x, i, j);
        self.coeffs[n] = value;
    }

    /// Add `value` to the structure constant `t[x][i][j]`.
    pub fn add_to(&mut self, x: usize, i: usize, j: usize, value: Scalar) {
        let n = self.idx(x, i, j);
        self.coeffs[n] = self.coeffs[n].clone() + value;
    }

    /// All structure constants, row-major over (input, left leg, right leg).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Whether the map is identically zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Value on the `x`-th basis vector, as a tensor.
    pub fn of_basis(&self, x: usize) -> Tensor2 {
        let mut t = Tensor2::zero(self.left.clone(), self.right.clone());
        for i in 0..self.left.dim() {
            for j in 0..self.right.dim() {
                let c = self.get(x, i, j);
                if !c.is_zero() {
                    t.set(i, j, c.clone());
                }
            }
        }
        t
    }

    /// Linear extension to a coordinate vector in the domain.
    pub fn apply(&self, v: &[Scalar]) -> Tensor2 {
        assert_eq!(
            v.len(),
            self.from.dim(),
            "tensor map applied to coordinates of the wrong length"
        );
        let mut t = Tensor2::zero(self.left.clone(), self.right.clone());
        for (x, vx) in v.iter().enumerate() {
            if vx.is_zero() {
                continue;
            }
            t = t.plus(&self.of_basis(x).scaled(vx));
        }
        t
    }
}

// ---------------------------------------------------------------------------
// Lie structures
// ---------------------------------------------------------------------------

/// One strictly-upper bracket entry: `[e_i, e_j] = Σ c · e_k`, given as
/// `(i, j, [(k, c), …])` with `i < j`.
pub type SkewEntry = (usize, usize, Vec<(usize, Scalar)>);

/// A candidate Lie algebra: a space with a bracket table. The bracket need not
/// satisfy the axioms — run [`check_lie_algebra`] for an exact verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    /// Underlying space.
    pub space: BasisSpace,
    /// Bracket structure constants (both argument spaces and the target equal `space`).
    pub bracket: BilinearMap,
}

impl LieAlgebra {
    /// Build from a space and a bracket table on that space.
    pub fn new(space: BasisSpace, bracket: BilinearMap) -> Result<LieAlgebra, ShapeError> {
        if bracket.left != space || bracket.right != space || bracket.target != space {
            return Err(ShapeError(format!(
                "bracket spaces must all equal {}",
                space.name
            )));
        }
        Ok(LieAlgebra { space, bracket })
    }

    /// The abelian Lie algebra (zero bracket).
    pub fn abelian(space: BasisSpace) -> LieAlgebra {
        let bracket = BilinearMap::zero(space.clone(), space.clone(), space.clone());
        LieAlgebra { space, bracket }
    }

    /// Build from strictly-upper entries: for each `(i, j, value)` with
    /// `i < j`, sets `[e_i, e_j] = value` and `[e_j, e_i] = −value`; the
    /// diagonal is zero. Antisymmetry therefore holds by construction.
    pub fn from_skew_entries(
        space: BasisSpace,
        entries: &[SkewEntry],
    ) -> Result<LieAlgebra, ShapeError> {
        let n = space.dim();
        let mut bracket = BilinearMap::zero(space.clone(), space.clone(), space.clone());
        for (i, j, terms) in entries {
            if *i >= *j || *j >= n {
                return Err(ShapeError(format!(
                    "skew entry ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            for (k, c) in terms {
                if *k >= n {
                    return Err(ShapeError(format!("target index {k} out of range")));
                }
                bracket.add_to(*i, *j, *k, c.clone());
                bracket.add_to(*j, *i, *k, -c.clone());
            }
        }
        Ok(LieAlgebra { space, bracket })
    }

    /// `[e_i, e_j]` as target coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.bracket.apply_basis(i, j)
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.bracket.apply(u, v)
    }

    /// Dimension of the underlying space.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A candidate Lie coalgebra: a space with a cobracket table. Run
/// [`check_lie_coalgebra`] for an exact verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCoalgebra {
    /// Underlying space.
    pub space: BasisSpace,
    /// Cobracket structure constants on `space`.
    pub cobracket: CobracketMap,
}

impl LieCoalgebra {
    /// Build from a space and a cobracket table on that space.
    pub fn new(space: BasisSpace, cobracket: CobracketMap) -> Result<LieCoalgebra, ShapeError> {
        if cobracket.space != space {
            return Err(ShapeError(format!(
                "cobracket space must equal {}",
                space.name
            )));
        }
        Ok(LieCoalgebra { space, cobracket })
    }

    /// The trivial coalgebra (zero cobracket).
    pub fn trivial(space: BasisSpace) -> LieCoalgebra {
        let cobracket = CobracketMap::zero(space.clone());
        LieCoalgebra { space, cobracket }
    }

    /// Dimension of the underlying space.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A candidate Lie bialgebra: compatible-looking algebra and coalgebra data on
/// one space. Run [`check_lie_bialgebra`] for an exact verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieBialgebra {
    /// The bracket half.
    pub algebra: LieAlgebra,
    /// The cobracket half (on the same space).
    pub coalgebra: LieCoalgebra,
}

impl LieBialgebra {
    /// Pair an algebra and a coalgebra; their spaces must coincide.
    pub fn new(algebra: LieAlgebra, coalgebra: LieCoalgebra) -> Result<LieBialgebra, ShapeError> {
        if algebra.space != coalgebra.space {
            return Err(ShapeError(format!(
                "algebra space {} and coalgebra space {} differ",
                algebra.space.name, coalgebra.space.name
            )));
        }
        Ok(LieBialgebra { algebra, coalgebra })
    }

    /// Underlying space.
    pub fn space(&self) -> &BasisSpace {
        &self.algebra.space
    }

    /// Dimension of the underlying space.
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Bracket structure constants.
    pub fn bracket(&self) -> &BilinearMap {
        &self.algebra.bracket
    }

    /// Cobracket structure constants.
    pub fn cobracket(&self) -> &CobracketMap {
        &self.coalgebra.cobracket
    }
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

/// One violated law instance: the law label, the basis index tuple it was
/// evaluated at, and the exact residual vector (never all-zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Label of the violated law (e.g. `jacobi`, `LE3`, `CLE2`).
    pub law: String,
    /// Basis indices the law was instantiated at.
    pub at: Vec<usize>,
    /// Residual coordinates in the law's component space, row-major.
    pub residual: Vec<Scalar>,
}

/// The exact outcome of a law check: empty means every law holds identically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerdictReport {
    /// All violations, laws in checker order, index tuples ascending.
    pub violations: Vec<Violation>,
}

impl VerdictReport {
    /// Whether no law was violated.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Record a residual if it is nonzero.
    pub fn push_residual(&mut self, law: &str, at: Vec<usize>, residual: Vec<Scalar>) {
        if residual.iter().any(|c| !c.is_zero()) {
            self.violations.push(Violation {
                law: law.to_string(),
                at,
                residual,
            });
        }
    }

    /// Append all violations of another report.
    pub fn absorb(&mut self, other: VerdictReport) {
        self.violations.extend(other.violations);
    }

    /// Labels of all violated laws, deduplicated, in first-seen order.
    pub fn violated_laws(&self) -> Vec<String> {
        let mut seen = Vec::new();
        for v in &self.violations {
            if !seen.contains(&v.law) {
                seen.push(v.law.clone());
            }
        }
        seen
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid: all laws hold identically");
        }
        writeln!(f, "{} violated law instance(s):", self.violations.len())?;
        for v in &self.violations {
            let at: Vec<String> = v.at.iter().map(|i| i.to_string()).collect();
            let nonzero: Vec<String> = v
                .residual
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{}: {}", i, format_scalar(c)))
                .collect();
            writeln!(f, "  {} @ ({}): {{{}}}", v.law, at.join(","), nonzero.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

/// Check the Lie algebra axioms exactly.
///
/// Laws: `alternating` (`[x,x] = 0`, checked as the diagonal residual per
/// basis index plus the symmetric sum per pair `i < j`) and `jacobi`
/// (`[a,[b,c]] − [[a,b],c] − [b,[a,c]]` on all ordered basis triples).
pub fn check_lie_algebra(alg: &LieAlgebra) -> VerdictReport {
    let mut report = VerdictReport::default();
    let n = alg.dim();
    for i in 0..n {
        report.push_residual("alternating", vec![i, i], alg.bracket_basis(i, i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let sym: Vec<Scalar> = alg
                .bracket_basis(i, j)
                .into_iter()
                .zip(alg.bracket_basis(j, i))
                .map(|(a, b)| a + b)
                .collect();
            report.push_residual("alternating", vec![i, j], sym);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let bc = alg.bracket_basis(b, c);
                let ab = alg.bracket_basis(a, b);
                let ac = alg.bracket_basis(a, c);
                let unit_a = unit(n, a);
                let unit_b = unit(n, b);
                let unit_c = unit(n, c);
                let lhs = alg.bracket_vec(&unit_a, &bc);
                let r1 = alg.bracket_vec(&ab, &unit_c);
                let r2 = alg.bracket_vec(&unit_b, &ac);
                let residual: Vec<Scalar> = lhs
                    .into_iter()
                    .zip(r1)
                    .zip(r2)
                    .map(|((l, x), y)| l - x - y)
                    .collect();
                report.push_residual("jacobi", vec![a, b, c], residual);
            }
        }
    }
    report
}

/// Check the Lie coalgebra axioms exactly.
///
/// Laws: `co-antisymmetry` (`δ + twist∘δ = 0` per basis index) and
/// `co-jacobi` (`(I⊗δ)δ − τ₁₂(I⊗δ)δ − (δ⊗I)δ` per basis index, residual in
/// the third tensor power).
pub fn check_lie_coalgebra(co: &LieCoalgebra) -> VerdictReport {
    let mut report = VerdictReport::default();
    let n = co.dim();
    let space = &co.space;
    let delta = &co.cobracket;
    for i in 0..n {
        let t = delta.of_basis(i);
        report.push_residual(
            "co-antisymmetry",
            vec![i],
            t.plus(&t.twist()).coeffs().to_vec(),
        );
    }
    for i in 0..n {
        let t = delta.of_basis(i);
        let id_delta = t.expand_right(space, space, |v| delta.of_basis(v));
        let delta_id = t.expand_left(space, space, |u| delta.of_basis(u));
        let residual = id_delta
            .minus(&id_delta.twist12())
            .minus(&delta_id)
            .coeffs()
            .to_vec();
        report.push_residual("co-jacobi", vec![i], residual);
    }
    report
}

/// Check the Lie bialgebra axioms exactly: both halves plus the `cocycle`
/// compatibility `a.δ(b) − b.δ(a) − δ([a,b])` on all ordered basis pairs,
/// where `a.(u⊗v) = [a,u]⊗v + u⊗[a,v]`.
pub fn check_lie_bialgebra(bi: &LieBialgebra) -> VerdictReport {
    let mut report = check_lie_algebra(&bi.algebra);
    report.absorb(check_lie_coalgebra(&bi.coalgebra));
    let n = bi.dim();
    let delta = bi.cobracket();
    for a in 0..n {
        for b in 0..n {
            let unit_a = unit(n, a);
            let unit_b = unit(n, b);
            let lhs = adjoint_act_tensor_coords(&bi.algebra, &unit_a, &delta.of_basis(b));
            let rhs = adjoint_act_tensor_coords(&bi.algebra, &unit_b, &delta.of_basis(a));
            let bracket_ab = bi.algebra.bracket_basis(a, b);
            let delta_bracket = delta.apply(&bracket_ab);
            let residual = lhs.minus(&rhs).minus(&delta_bracket).coeffs().to_vec();
            report.push_residual("cocycle", vec![a, b], residual);
        }
    }
    report
}

/// The adjoint action of `a` on a tensor over the algebra's space:
/// `a.(u⊗v) = [a,u]⊗v + u⊗[a,v]`, extended bilinearly.
pub fn adjoint_act_tensor(alg: &LieAlgebra, a: &Vector, t: &Tensor2) -> Tensor2 {
    assert!(a.space == alg.space, "adjoint actor lives in the wrong space");
    adjoint_act_tensor_coords(alg, &a.coords, t)
}

/// Coordinate-level version of [`adjoint_act_tensor`].
pub fn adjoint_act_tensor_coords(alg: &LieAlgebra, a: &[Scalar], t: &Tensor2) -> Tensor2 {
    assert!(
        t.left == alg.space && t.right == alg.space,
        "adjoint action on a tensor over the wrong space"
    );
    let first = t.map_left(&alg.space, |u| alg.bracket_vec(a, &unit(alg.dim(), u)));
    let second = t.map_right(&alg.space, |v| alg.bracket_vec(a, &unit(alg.dim(), v)));
    first.plus(&second)
}

/// The `k`-th coordinate unit vector of length `n`.
pub fn unit(n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[k] = Scalar::one();
    v
}

pub(crate) fn vadd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub(crate) fn vsub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub(crate) fn vneg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x.clone()).collect()
}
