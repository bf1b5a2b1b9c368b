//! Codimension-one extending structures, described by flag data.
//!
//! When the complement space is a line `V = span{t}`, a general extending
//! datum collapses: antisymmetry forces the pairing `f`, the bracket `{·,·}`
//! and the cobracket `δ_V` to vanish, and the four remaining maps are
//! captured by finite data on the base `g` alone — a functional `α : g → k`
//! (with `t ◁ a = α(a)·t`), a linear map `D : g → g` (with `t ▷ a = D(a)`),
//! a vector `A ∈ g` (with `Δ_E(t) = A ⊗ t`) and an antisymmetric tensor
//! `B ∈ g ⊗ g` (with `Δ_V(t) = B`). Such a quadruple `(α, D, A, B)` is a
//! *flag datum*. [`check_flag_datum`] lists the exact conditions under which
//! its bi-product is a Lie bialgebra, and [`flag_to_bidatum`] /
//! [`bidatum_to_flag`] translate to and from the general machinery so the two
//! condition systems can be compared verbatim.
//!
//! Two flag data over the same base produce isomorphic bi-products by an
//! isomorphism fixing `g` exactly when they are related by a witness pair
//! `(U, β)` with `U ∈ g` and `β ≠ 0`; [`flag_equivalent`] finds such a
//! witness when one exists, and [`flag_transform`] pushes a datum forward
//! along a witness. Crucially, `α` and `A` are invariants of this relation,
//! and for a fixed `(α, A)` the remaining conditions are *linear* in
//! `(D, B)`: the solutions form a vector space ([`solve_db`]) on which the
//! witnesses act affinely through a linear map of `U` and a rescaling by
//! `β`. The isomorphism classes with a fixed `(α, A)` are therefore the
//! projectivization of that solution space modulo the `U`-action — a finite
//! union of parameterized cells plus the class of the trivial datum —
//! computed exactly by [`classify_codim_one`].

use crate::exactnum::{checked_div, nullspace, rref_rows, solve_affine, Matrix, Scalar, SolutionSpace};
use crate::extension::{
    AlgExtendingDatum, BiExtendingDatum, CoalgExtendingDatum, ExtendError,
};
use crate::liecore::{
    adjoint_act_tensor_coords, unit, vadd, vsub, BasisSpace, BilinearMap, CobracketMap,
    LieAlgebra, LieBialgebra, Tensor2, Tensor3, TensorMap, VerdictReport,
};
use num::{One, Zero};

// ---------------------------------------------------------------------------
// Flag data
// ---------------------------------------------------------------------------

/// An extending datum of codimension one, in condensed form.
///
/// The quadruple describes the extension of `base` by a line `span{t}`:
/// `t ◁ a = α(a)·t`, `t ▷ a = D(a)`, `Δ_E(t) = A ⊗ t` and `Δ_V(t) = B`.
/// Constructors validate shapes only; run [`check_flag_datum`] for the
/// structural conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagDatum {
    /// The base Lie bialgebra `g`.
    pub base: LieBialgebra,
    /// The functional `α : g → k`, one coordinate per basis element.
    pub alpha: Vec<Scalar>,
    /// The map `D : g → g`; column `j` is `D(e_j)`.
    pub d: Matrix,
    /// The vector `A ∈ g`.
    pub a_vec: Vec<Scalar>,
    /// The tensor `B ∈ g ⊗ g` (antisymmetric for a valid datum).
    pub b: Tensor2,
}

impl FlagDatum {
    /// Build a flag datum, validating only shapes.
    pub fn new(
        base: LieBialgebra,
        alpha: Vec<Scalar>,
        d: Matrix,
        a_vec: Vec<Scalar>,
        b: Tensor2,
    ) -> Result<FlagDatum, ExtendError> {
        let n = base.dim();
        if alpha.len() != n {
            return Err(ExtendError::Shape(format!(
                "alpha needs {n} coordinates, found {}",
                alpha.len()
            )));
        }
        if d.rows() != n || d.cols() != n {
            return Err(ExtendError::Shape(format!(
                "D must be a {n}×{n} matrix, found {}×{}",
                d.rows(),
                d.cols()
            )));
        }
        if a_vec.len() != n {
            return Err(ExtendError::Shape(format!(
                "A needs {n} coordinates, found {}",
                a_vec.len()
            )));
        }
        if b.left != *base.space() || b.right != *base.space() {
            return Err(ExtendError::Shape(format!(
                "B must live in {0} ⊗ {0}",
                base.space().name
            )));
        }
        Ok(FlagDatum {
            base,
            alpha,
            d,
            a_vec,
            b,
        })
    }

    /// The trivial flag datum (all four pieces zero; always valid).
    pub fn zero(base: LieBialgebra) -> FlagDatum {
        let n = base.dim();
        let g = base.space().clone();
        FlagDatum {
            alpha: vec![Scalar::zero(); n],
            d: Matrix::zeros(n, n),
            a_vec: vec![Scalar::zero(); n],
            b: Tensor2::zero(g.clone(), g),
            base,
        }
    }

    /// Dimension of the base.
    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

// ---------------------------------------------------------------------------
// Small coordinate helpers
// ---------------------------------------------------------------------------

fn vscale(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

fn dot(alpha: &[Scalar], v: &[Scalar]) -> Scalar {
    alpha
        .iter()
        .zip(v)
        .fold(Scalar::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

fn column(m: &Matrix, j: usize) -> Vec<Scalar> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

/// The rank-one tensor `u ⊗ v` in `space ⊗ space`.
fn outer(space: &BasisSpace, u: &[Scalar], v: &[Scalar]) -> Tensor2 {
    let mut t = Tensor2::zero(space.clone(), space.clone());
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            t.add_to(i, j, ui.clone() * vj.clone());
        }
    }
    t
}

/// The tensor `u ⊗ t` in `space ⊗ t.left ⊗ t.right`.
fn vec_outer_tensor(space: &BasisSpace, u: &[Scalar], t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero(space.clone(), t.left.clone(), t.right.clone());
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for j in 0..t.left.dim() {
            for k in 0..t.right.dim() {
                out.add_to(i, j, k, ui.clone() * t.get(j, k).clone());
            }
        }
    }
    out
}

/// The tensor `t ⊗ u` in `t.left ⊗ t.right ⊗ space`.
fn tensor_outer_vec(space: &BasisSpace, t: &Tensor2, u: &[Scalar]) -> Tensor3 {
    let mut out = Tensor3::zero(t.left.clone(), t.right.clone(), space.clone());
    for i in 0..t.left.dim() {
        for j in 0..t.right.dim() {
            if t.get(i, j).is_zero() {
                continue;
            }
            for (k, uk) in u.iter().enumerate() {
                out.add_to(i, j, k, t.get(i, j).clone() * uk.clone());
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Condition system
// ---------------------------------------------------------------------------

/// `D([a,b]) − [D(a),b] − [a,D(b)] − α(a)·D(b) + α(b)·D(a)`.
fn twisted_derivation_residual(
    alg: &LieAlgebra,
    alpha: &[Scalar],
    d: &Matrix,
    a: usize,
    b: usize,
) -> Vec<Scalar> {
    let n = alg.dim();
    let da = column(d, a);
    let db = column(d, b);
    let lhs = d
        .mul_vec(&alg.bracket_basis(a, b))
        .expect("D is square of the base dimension");
    let mut r = vsub(&lhs, &alg.bracket_vec(&da, &unit(n, b)));
    r = vsub(&r, &alg.bracket_vec(&unit(n, a), &db));
    r = vsub(&r, &vscale(&db, &alpha[a]));
    vadd(&r, &vscale(&da, &alpha[b]))
}

/// `[e_a, A] − (I ⊗ α) δ_g(e_a)`.
fn coupling_residual(base: &LieBialgebra, alpha: &[Scalar], a_vec: &[Scalar], a: usize) -> Vec<Scalar> {
    let n = base.dim();
    let da = base.cobracket().of_basis(a);
    let contracted: Vec<Scalar> = (0..n)
        .map(|i| {
            (0..n).fold(Scalar::zero(), |acc, j| {
                acc + da.get(i, j).clone() * alpha[j].clone()
            })
        })
        .collect();
    vsub(&base.algebra.bracket_vec(&unit(n, a), a_vec), &contracted)
}

/// `(I − τ₁₂)(A ⊗ B) + B ⊗ A + (I − τ₁₂)(I ⊗ δ_g)(B) − (δ_g ⊗ I)(B)`.
fn cobracket_compat_residual(base: &LieBialgebra, a_vec: &[Scalar], b: &Tensor2) -> Tensor3 {
    let g = base.space();
    let dg = base.cobracket();
    let a_b = vec_outer_tensor(g, a_vec, b);
    let b_a = tensor_outer_vec(g, b, a_vec);
    let delta_right = b.expand_right(g, g, |j| dg.of_basis(j));
    a_b.minus(&a_b.twist12())
        .plus(&b_a)
        .plus(&delta_right)
        .minus(&delta_right.twist12())
        .minus(&b.expand_left(g, g, |i| dg.of_basis(i)))
}

/// `D(e_a) ⊗ A − A ⊗ D(e_a) + α(e_a)·B + e_a.B + δ_g(D(e_a))
///  − (D ⊗ I) δ_g(e_a) − (I ⊗ D) δ_g(e_a)`.
fn derivation_compat_residual(
    base: &LieBialgebra,
    alpha: &[Scalar],
    a_vec: &[Scalar],
    d: &Matrix,
    b: &Tensor2,
    a: usize,
) -> Tensor2 {
    let g = base.space();
    let n = base.dim();
    let dg = base.cobracket();
    let da = column(d, a);
    let delta_a = dg.of_basis(a);
    outer(g, &da, a_vec)
        .minus(&outer(g, a_vec, &da))
        .plus(&b.scaled(&alpha[a]))
        .plus(&adjoint_act_tensor_coords(&base.algebra, &unit(n, a), b))
        .plus(&dg.apply(&da))
        .minus(&delta_a.map_left(g, |u| column(d, u)))
        .minus(&delta_a.map_right(g, |u| column(d, u)))
}

/// Check the condition system for a flag datum.
///
/// For a valid base these are exactly the conditions under which the
/// bi-product of the corresponding codimension-one extending datum is a Lie
/// bialgebra; [`flag_to_bidatum`] followed by the general bi-extension
/// checker accepts or rejects in lockstep with this function. The laws:
///
/// * `wedge` — `B` is antisymmetric;
/// * `alpha-on-brackets` — `α([a, b]) = 0`;
/// * `twisted-derivation` — `D([a,b]) = [D(a),b] + [a,D(b)] + α(a)D(b)
///   − α(b)D(a)`;
/// * `coclosed` — `δ_g(A) = 0`;
/// * `coupling` — `[a, A] = (I ⊗ α) δ_g(a)`;
/// * `cobracket-compat` — `(I − τ₁₂)(A ⊗ B) + B ⊗ A + (I − τ₁₂)(I ⊗ δ_g)(B)
///   = (δ_g ⊗ I)(B)`;
/// * `derivation-compat` — `D(a) ⊗ A − A ⊗ D(a) + α(a)B + a.B + δ_g(D(a))
///   = (D ⊗ I) δ_g(a) + (I ⊗ D) δ_g(a)`.
pub fn check_flag_datum(fd: &FlagDatum) -> VerdictReport {
    let mut report = VerdictReport::default();
    let alg = &fd.base.algebra;
    let n = fd.dim();

    report.push_residual("wedge", vec![], fd.b.plus(&fd.b.twist()).coeffs().to_vec());

    for a in 0..n {
        for b in 0..n {
            report.push_residual(
                "alpha-on-brackets",
                vec![a, b],
                vec![dot(&fd.alpha, &alg.bracket_basis(a, b))],
            );
            report.push_residual(
                "twisted-derivation",
                vec![a, b],
                twisted_derivation_residual(alg, &fd.alpha, &fd.d, a, b),
            );
        }
    }

    report.push_residual(
        "coclosed",
        vec![],
        fd.base.cobracket().apply(&fd.a_vec).coeffs().to_vec(),
    );
    for a in 0..n {
        report.push_residual(
            "coupling",
            vec![a],
            coupling_residual(&fd.base, &fd.alpha, &fd.a_vec, a),
        );
    }

    report.push_residual(
        "cobracket-compat",
        vec![],
        cobracket_compat_residual(&fd.base, &fd.a_vec, &fd.b)
            .coeffs()
            .to_vec(),
    );
    for a in 0..n {
        report.push_residual(
            "derivation-compat",
            vec![a],
            derivation_compat_residual(&fd.base, &fd.alpha, &fd.a_vec, &fd.d, &fd.b, a)
                .coeffs()
                .to_vec(),
        );
    }

    report
}

// ---------------------------------------------------------------------------
// Translation to and from general extending data
// ---------------------------------------------------------------------------

/// The general extending datum encoded by a flag datum.
///
/// The complement line is labeled `V = span{t}`. The translation is exact:
/// the resulting datum satisfies the general condition system if and only if
/// the flag datum satisfies [`check_flag_datum`].
pub fn flag_to_bidatum(fd: &FlagDatum) -> BiExtendingDatum {
    let g = fd.base.space().clone();
    let v = BasisSpace::new("V", vec!["t".into()]).expect("a line has one basis label");
    let n = fd.dim();

    let mut lact = BilinearMap::zero(v.clone(), g.clone(), v.clone());
    let mut ract = BilinearMap::zero(v.clone(), g.clone(), g.clone());
    for a in 0..n {
        lact.set(0, a, 0, fd.alpha[a].clone());
        for k in 0..n {
            ract.set(0, a, k, fd.d.get(k, a).clone());
        }
    }
    let f = BilinearMap::zero(v.clone(), v.clone(), g.clone());
    let vbracket = BilinearMap::zero(v.clone(), v.clone(), v.clone());
    let alg = AlgExtendingDatum::new(fd.base.algebra.clone(), v.clone(), lact, ract, f, vbracket)
        .expect("flag maps have the right shapes");

    let mut delta_e = TensorMap::zero(v.clone(), g.clone(), v.clone());
    let mut delta_v = TensorMap::zero(v.clone(), g.clone(), g.clone());
    for i in 0..n {
        delta_e.set(0, i, 0, fd.a_vec[i].clone());
        for j in 0..n {
            delta_v.set(0, i, j, fd.b.get(i, j).clone());
        }
    }
    let cobracket_v = CobracketMap::zero(v.clone());
    let coalg = CoalgExtendingDatum::new(fd.base.coalgebra.clone(), v, delta_e, delta_v, cobracket_v)
        .expect("flag maps have the right shapes");

    BiExtendingDatum::new(fd.base.clone(), alg, coalg).expect("halves share base and complement")
}

/// Condense a codimension-one extending datum into a flag datum.
///
/// The complement must be a line and the maps `f`, `{·,·}` and `δ_V` must be
/// stored as zero — any valid codimension-one datum has this form, but an
/// arbitrary invalid one need not, and such a datum has no flag counterpart
/// ([`ExtendError::Shape`]).
pub fn bidatum_to_flag(d: &BiExtendingDatum) -> Result<FlagDatum, ExtendError> {
    let n = d.base.dim();
    if d.v_space().dim() != 1 {
        return Err(ExtendError::Shape(format!(
            "flag data describe a one-dimensional complement, found dimension {}",
            d.v_space().dim()
        )));
    }
    if !d.alg.f.is_zero() || !d.alg.vbracket.is_zero() || !d.coalg.cobracket_v.is_zero() {
        return Err(ExtendError::Shape(
            "f, {·,·} and δ_V must vanish on a line; this datum stores nonzero values".into(),
        ));
    }
    let alpha: Vec<Scalar> = (0..n).map(|a| d.alg.lact.get(0, a, 0).clone()).collect();
    let mut dm = Matrix::zeros(n, n);
    for a in 0..n {
        for k in 0..n {
            dm.set(k, a, d.alg.ract.get(0, a, k).clone());
        }
    }
    let a_vec: Vec<Scalar> = (0..n).map(|i| d.coalg.delta_e.get(0, i, 0).clone()).collect();
    let b = d.coalg.delta_v.of_basis(0);
    FlagDatum::new(d.base.clone(), alpha, dm, a_vec, b)
}

// ---------------------------------------------------------------------------
// Ambient coordinates for the linear structure
// ---------------------------------------------------------------------------

/// Dimension of the `(D, B)` coordinate space: `n² + n(n−1)/2`.
pub fn flag_ambient_dim(n: usize) -> usize {
    n * n + n * (n - 1) / 2
}

/// The index pairs `(i, j)` with `i < j`, in lexicographic order; the wedge
/// coordinate at pair `(i, j)` is the coefficient of `e_i ⊗ e_j` (equally,
/// of `e_i ∧ e_j = e_i ⊗ e_j − e_j ⊗ e_i`) in an antisymmetric tensor.
pub fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Flatten `(D, B)` into ambient coordinates: the `n²` entries of `D` in
/// row-major order, then the wedge coordinates of `B` at [`wedge_pairs`].
///
/// Only the upper coordinates of `B` are read, so the packing is lossless
/// precisely on antisymmetric tensors.
pub fn pack_db(d: &Matrix, b: &Tensor2) -> Vec<Scalar> {
    let n = d.rows();
    let mut z: Vec<Scalar> = d.entries().to_vec();
    z.reserve(n * (n - 1) / 2);
    for (i, j) in wedge_pairs(n) {
        z.push(b.get(i, j).clone());
    }
    z
}

/// Rebuild `(D, B)` from ambient coordinates; `B` comes out antisymmetric.
pub fn unpack_db(space: &BasisSpace, z: &[Scalar]) -> Result<(Matrix, Tensor2), ExtendError> {
    let n = space.dim();
    if z.len() != flag_ambient_dim(n) {
        return Err(ExtendError::Shape(format!(
            "expected {} ambient coordinates, found {}",
            flag_ambient_dim(n),
            z.len()
        )));
    }
    let mut d = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            d.set(i, j, z[i * n + j].clone());
        }
    }
    let mut b = Tensor2::zero(space.clone(), space.clone());
    for (p, (i, j)) in wedge_pairs(n).into_iter().enumerate() {
        let c = z[n * n + p].clone();
        b.set(i, j, c.clone());
        b.set(j, i, -c);
    }
    Ok((d, b))
}

/// Residuals of the three condition families that are linear in `(D, B)`
/// once `(α, A)` is fixed, concatenated in a deterministic row order:
/// `twisted-derivation` for pairs `a < b`, then `derivation-compat` per
/// basis element, then `cobracket-compat`.
fn db_residual(
    base: &LieBialgebra,
    alpha: &[Scalar],
    a_vec: &[Scalar],
    d: &Matrix,
    b: &Tensor2,
) -> Vec<Scalar> {
    let n = base.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            rows.extend(twisted_derivation_residual(&base.algebra, alpha, d, i, j));
        }
    }
    for a in 0..n {
        rows.extend(
            derivation_compat_residual(base, alpha, a_vec, d, b, a)
                .coeffs()
                .iter()
                .cloned(),
        );
    }
    rows.extend(cobracket_compat_residual(base, a_vec, b).coeffs().iter().cloned());
    rows
}

/// The space of all `(D, B)` completing `(α, A)` to a valid flag datum.
///
/// The conditions involving `D` and `B` are homogeneous linear once
/// `(α, A)` is fixed, so the completions form a vector subspace of the
/// ambient coordinate space (see [`pack_db`]); the result is its canonical
/// basis. The conditions on `(α, A)` alone (`alpha-on-brackets`, `coclosed`,
/// `coupling`) are *not* imposed here — pair this with [`resolve_alpha`] and
/// a coclosed `A`, as [`classify_codim_one`] does.
pub fn solve_db(
    base: &LieBialgebra,
    alpha: &[Scalar],
    a_vec: &[Scalar],
) -> Result<SolutionSpace, ExtendError> {
    let n = base.dim();
    if alpha.len() != n || a_vec.len() != n {
        return Err(ExtendError::Shape(format!(
            "alpha and A need {n} coordinates each, found {} and {}",
            alpha.len(),
            a_vec.len()
        )));
    }
    let ambient = flag_ambient_dim(n);
    let g = base.space();
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(ambient);
    for u in 0..ambient {
        let mut z = vec![Scalar::zero(); ambient];
        z[u] = Scalar::one();
        let (d, b) = unpack_db(g, &z).expect("unit vector has the ambient length");
        columns.push(db_residual(base, alpha, a_vec, &d, &b));
    }
    let rows = columns[0].len();
    let mut m = Matrix::zeros(rows, ambient);
    for (u, col) in columns.iter().enumerate() {
        for (r, value) in col.iter().enumerate() {
            m.set(r, u, value.clone());
        }
    }
    nullspace(&m).map_err(|e| ExtendError::Shape(e.to_string()))
}

// ---------------------------------------------------------------------------
// Scalar data: the spaces of admissible α and A
// ---------------------------------------------------------------------------

/// The functionals vanishing on all brackets: `{α : α([a, b]) = 0}`.
pub fn alpha_space(alg: &LieAlgebra) -> SolutionSpace {
    let n = alg.dim();
    let mut m = Matrix::zeros(n * n, n);
    for a in 0..n {
        for b in 0..n {
            let br = alg.bracket_basis(a, b);
            for (u, c) in br.iter().enumerate() {
                m.set(a * n + b, u, c.clone());
            }
        }
    }
    nullspace(&m).expect("row lengths agree")
}

/// The coclosed vectors: `{A : δ_g(A) = 0}`.
pub fn a_space(base: &LieBialgebra) -> SolutionSpace {
    let n = base.dim();
    let mut m = Matrix::zeros(n * n, n);
    for u in 0..n {
        let t = base.cobracket().of_basis(u);
        for i in 0..n {
            for j in 0..n {
                m.set(i * n + j, u, t.get(i, j).clone());
            }
        }
    }
    nullspace(&m).expect("row lengths agree")
}

/// All functionals `α` compatible with a given `A`: the affine solution set
/// of `alpha-on-brackets` together with `coupling`, `[a, A] = (I ⊗ α) δ_g(a)`.
///
/// An inconsistent result means no flag datum at all has this `A`; a
/// positive-dimensional result means `A` leaves `α` underdetermined.
pub fn resolve_alpha(base: &LieBialgebra, a_vec: &[Scalar]) -> Result<SolutionSpace, ExtendError> {
    let n = base.dim();
    if a_vec.len() != n {
        return Err(ExtendError::Shape(format!(
            "A needs {n} coordinates, found {}",
            a_vec.len()
        )));
    }
    let alg = &base.algebra;
    let mut m = Matrix::zeros(n * n + n * n, n);
    let mut rhs = vec![Scalar::zero(); n * n + n * n];
    for a in 0..n {
        for b in 0..n {
            let br = alg.bracket_basis(a, b);
            for (u, c) in br.iter().enumerate() {
                m.set(a * n + b, u, c.clone());
            }
        }
    }
    for a in 0..n {
        let da = base.cobracket().of_basis(a);
        let lhs = alg.bracket_vec(&unit(n, a), a_vec);
        for (k, lk) in lhs.iter().enumerate() {
            let row = n * n + a * n + k;
            for u in 0..n {
                m.set(row, u, da.get(k, u).clone());
            }
            rhs[row] = lk.clone();
        }
    }
    solve_affine(&m, &rhs).map_err(|e| ExtendError::Shape(e.to_string()))
}

// ---------------------------------------------------------------------------
// Equivalence of flag data
// ---------------------------------------------------------------------------

/// The ambient vector of the infinitesimal witness action at `(α, A)`:
/// `U ↦ ([U, ·] − α(·)·U, δ_g(U) + U ⊗ A − A ⊗ U)`.
///
/// Adding this vector to a solution of [`solve_db`] produces an equivalent
/// solution (witness `(U, 1)`); its span is the orbit of the trivial datum.
pub fn equivalence_action(
    base: &LieBialgebra,
    alpha: &[Scalar],
    a_vec: &[Scalar],
    u: &[Scalar],
) -> Vec<Scalar> {
    let n = base.dim();
    let g = base.space();
    let mut l = Matrix::zeros(n, n);
    for (a, alpha_a) in alpha.iter().enumerate() {
        let mut col = base.algebra.bracket_vec(u, &unit(n, a));
        col = vsub(&col, &vscale(u, alpha_a));
        for (k, ck) in col.iter().enumerate() {
            l.set(k, a, ck.clone());
        }
    }
    let m = base
        .cobracket()
        .apply(u)
        .plus(&outer(g, u, a_vec))
        .minus(&outer(g, a_vec, u));
    pack_db(&l, &m)
}

/// Push a flag datum forward along a witness `(U, β)`, `β ≠ 0`.
///
/// The result `fd′` is the unique flag datum with
/// `D(a) = [U, a] + β·D′(a) − α(a)·U` and
/// `B = δ_g(U) + β·B′ + U ⊗ A − A ⊗ U`; it shares `(α, A)` with the input,
/// and the translation commutes with the general datum transform along the
/// pair `(p, q) = (U, β)`. A zero `β` is rejected
/// ([`ExtendError::SingularQ`]).
pub fn flag_transform(fd: &FlagDatum, u: &[Scalar], beta: &Scalar) -> Result<FlagDatum, ExtendError> {
    let n = fd.dim();
    if u.len() != n {
        return Err(ExtendError::Shape(format!(
            "U needs {n} coordinates, found {}",
            u.len()
        )));
    }
    let beta_inv = checked_div(&Scalar::one(), beta).map_err(|_| ExtendError::SingularQ)?;
    let g = fd.base.space();
    let mut d = Matrix::zeros(n, n);
    for (a, alpha_a) in fd.alpha.iter().enumerate() {
        let mut col = vsub(&column(&fd.d, a), &fd.base.algebra.bracket_vec(u, &unit(n, a)));
        col = vadd(&col, &vscale(u, alpha_a));
        for (k, ck) in col.iter().enumerate() {
            d.set(k, a, ck.clone() * beta_inv.clone());
        }
    }
    let b = fd
        .b
        .minus(&fd.base.cobracket().apply(u))
        .minus(&outer(g, u, &fd.a_vec))
        .plus(&outer(g, &fd.a_vec, u))
        .scaled(&beta_inv);
    Ok(FlagDatum {
        base: fd.base.clone(),
        alpha: fd.alpha.clone(),
        d,
        a_vec: fd.a_vec.clone(),
        b,
    })
}

/// Decide whether two flag data over one base are equivalent, returning a
/// witness `(U, β)` with `β ≠ 0` when they are.
///
/// The witness satisfies `D₁(a) = [U, a] + β·D₂(a) − α(a)·U` and
/// `B₁ = δ_g(U) + β·B₂ + U ⊗ A − A ⊗ U` — equivalently,
/// `flag_transform(fd1, U, β) = fd2` — and corresponds to the triangular
/// isomorphism `a + x ↦ a + x·U + β·x` between the two bi-products. Since
/// `α` and `A` are invariants, data disagreeing there are never equivalent.
pub fn flag_equivalent(
    fd1: &FlagDatum,
    fd2: &FlagDatum,
) -> Result<Option<(Vec<Scalar>, Scalar)>, ExtendError> {
    if fd1.base != fd2.base {
        return Err(ExtendError::Shape(
            "equivalence compares flag data over one Lie bialgebra".into(),
        ));
    }
    if fd1.alpha != fd2.alpha || fd1.a_vec != fd2.a_vec {
        return Ok(None);
    }
    let n = fd1.dim();
    let alg = &fd1.base.algebra;
    let dg = fd1.base.cobracket();
    // Unknowns: U₀ … U₍ₙ₋₁₎, then β.
    let rows = n * n + n * n;
    let mut m = Matrix::zeros(rows, n + 1);
    let mut rhs = vec![Scalar::zero(); rows];
    for a in 0..n {
        for k in 0..n {
            let row = a * n + k;
            for uu in 0..n {
                let mut c = alg.bracket_basis(uu, a)[k].clone();
                if uu == k {
                    c -= fd1.alpha[a].clone();
                }
                m.set(row, uu, c);
            }
            m.set(row, n, fd2.d.get(k, a).clone());
            rhs[row] = fd1.d.get(k, a).clone();
        }
    }
    for i in 0..n {
        for j in 0..n {
            let row = n * n + i * n + j;
            for uu in 0..n {
                let mut c = dg.of_basis(uu).get(i, j).clone();
                if uu == i {
                    c += fd1.a_vec[j].clone();
                }
                if uu == j {
                    c -= fd1.a_vec[i].clone();
                }
                m.set(row, uu, c);
            }
            m.set(row, n, fd2.b.get(i, j).clone());
            rhs[row] = fd1.b.get(i, j).clone();
        }
    }
    let sol = solve_affine(&m, &rhs).map_err(|e| ExtendError::Shape(e.to_string()))?;
    let Some(particular) = sol.particular else {
        return Ok(None);
    };
    // Any solution works as a witness as long as its β-coordinate is nonzero.
    let chosen = if !particular[n].is_zero() {
        particular
    } else if let Some(shift) = sol.basis.iter().find(|v| !v[n].is_zero()) {
        vadd(&particular, shift)
    } else {
        return Ok(None);
    };
    let beta = chosen[n].clone();
    Ok(Some((chosen[..n].to_vec(), beta)))
}

// ---------------------------------------------------------------------------
// Structure certificates
// ---------------------------------------------------------------------------

/// The derivations of the base: `{D : D([a,b]) = [D(a),b] + [a,D(b)]}`,
/// in row-major matrix coordinates.
pub fn derivation_space(alg: &LieAlgebra) -> SolutionSpace {
    let n = alg.dim();
    let zeros = vec![Scalar::zero(); n];
    let pairs: Vec<(usize, usize)> = wedge_pairs(n);
    let mut m = Matrix::zeros(pairs.len() * n, n * n);
    for u in 0..n * n {
        let mut d = Matrix::zeros(n, n);
        d.set(u / n, u % n, Scalar::one());
        for (p, &(a, b)) in pairs.iter().enumerate() {
            let res = twisted_derivation_residual(alg, &zeros, &d, a, b);
            for (k, c) in res.into_iter().enumerate() {
                m.set(p * n + k, u, c);
            }
        }
    }
    nullspace(&m).expect("row lengths agree")
}

/// The span of the adjoint maps `ad(e_u) = [e_u, ·]`, in the same row-major
/// coordinates as [`derivation_space`].
pub fn inner_derivation_space(alg: &LieAlgebra) -> SolutionSpace {
    let n = alg.dim();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|u| {
            let mut flat = vec![Scalar::zero(); n * n];
            for a in 0..n {
                for (k, c) in alg.bracket_basis(u, a).into_iter().enumerate() {
                    flat[k * n + a] = c;
                }
            }
            flat
        })
        .collect();
    let basis = rref_rows(&rows).expect("row lengths agree");
    SolutionSpace {
        ambient_dim: n * n,
        particular: Some(vec![Scalar::zero(); n * n]),
        basis,
    }
}

/// The center: `{z : [z, a] = 0 for all a}`.
pub fn center_space(alg: &LieAlgebra) -> SolutionSpace {
    let n = alg.dim();
    let mut m = Matrix::zeros(n * n, n);
    for a in 0..n {
        for k in 0..n {
            for u in 0..n {
                m.set(a * n + k, u, alg.bracket_basis(u, a)[k].clone());
            }
        }
    }
    nullspace(&m).expect("row lengths agree")
}

/// The invariant wedges: antisymmetric tensors killed by every `e_a.(·)`,
/// in the wedge coordinates of [`wedge_pairs`].
pub fn invariant_wedge_space(alg: &LieAlgebra) -> SolutionSpace {
    let n = alg.dim();
    let pairs = wedge_pairs(n);
    let mut m = Matrix::zeros(n * n * n, pairs.len());
    for (u, &(i, j)) in pairs.iter().enumerate() {
        let mut b = Tensor2::zero(alg.space.clone(), alg.space.clone());
        b.set(i, j, Scalar::one());
        b.set(j, i, -Scalar::one());
        for a in 0..n {
            let acted = adjoint_act_tensor_coords(alg, &unit(n, a), &b);
            for (r, c) in acted.coeffs().iter().enumerate() {
                m.set(a * n * n + r, u, c.clone());
            }
        }
    }
    nullspace(&m).expect("row lengths agree")
}

/// Dimension of the derived subalgebra `[g, g]`.
pub fn derived_dim(alg: &LieAlgebra) -> usize {
    let n = alg.dim();
    let rows: Vec<Vec<Scalar>> = wedge_pairs(n)
        .into_iter()
        .map(|(a, b)| alg.bracket_basis(a, b))
        .collect();
    rref_rows(&rows).expect("row lengths agree").len()
}

/// Numeric invariants of a base algebra that pre-determine parts of the
/// codimension-one classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCertificate {
    /// Dimension of the base.
    pub dim: usize,
    /// Dimension of the derived subalgebra `[g, g]`.
    pub derived_dim: usize,
    /// Dimension of the center.
    pub center_dim: usize,
    /// Dimension of the derivation algebra.
    pub derivation_dim: usize,
    /// Dimension of the inner derivations `ad(g)`.
    pub inner_derivation_dim: usize,
    /// Dimension of the invariant wedges `(∧²g)^g`.
    pub invariant_wedge_dim: usize,
}

impl StructureCertificate {
    /// Whether every valid flag datum must have `α = 0` and `A = 0`:
    /// a perfect base kills `α` (it vanishes on brackets), and the coupling
    /// condition then forces `A` into the center.
    pub fn forces_trivial_invariants(&self) -> bool {
        self.derived_dim == self.dim && self.center_dim == 0
    }

    /// Whether the classification collapses to the single trivial class:
    /// on top of [`Self::forces_trivial_invariants`], every derivation inner
    /// and no invariant wedge means every solution at `(0, 0)` is
    /// `(ad(U), δ_g(U))` — exactly the orbit of the trivial datum.
    pub fn forces_single_class(&self) -> bool {
        self.forces_trivial_invariants()
            && self.derivation_dim == self.inner_derivation_dim
            && self.invariant_wedge_dim == 0
    }
}

/// Compute all invariants of [`StructureCertificate`] for a base algebra.
pub fn structure_certificate(alg: &LieAlgebra) -> StructureCertificate {
    StructureCertificate {
        dim: alg.dim(),
        derived_dim: derived_dim(alg),
        center_dim: center_space(alg).basis.len(),
        derivation_dim: derivation_space(alg).basis.len(),
        inner_derivation_dim: inner_derivation_space(alg).basis.len(),
        invariant_wedge_dim: invariant_wedge_space(alg).basis.len(),
    }
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// The pivot scan order for cell decompositions: strictly upper-triangular
/// entries of `D` first (row-major), then the diagonal, then strictly lower,
/// then the wedge coordinates of `B`.
///
/// The order decides which coefficient of a cell representative gets
/// normalized to `1`; leading with the off-diagonal action entries
/// reproduces the familiar normal forms (rotation-like `D` matrices with
/// unit upper entry) rather than rescalings of their diagonals.
pub fn scan_order(n: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(flag_ambient_dim(n));
    for i in 0..n {
        for j in (i + 1)..n {
            order.push(i * n + j);
        }
    }
    for i in 0..n {
        order.push(i * n + i);
    }
    for i in 1..n {
        for j in 0..i {
            order.push(i * n + j);
        }
    }
    for p in 0..n * (n - 1) / 2 {
        order.push(n * n + p);
    }
    order
}

/// One cell of isomorphism classes at a fixed `(α, A)`.
///
/// The classes in the cell are exactly the data
/// `representative + Σ tᵢ · parameter_basis[i]` for tuples of scalars `tᵢ`,
/// one class per tuple: the representative is normalized so that its leading
/// coordinate (at `pivot`, in the scan order) is `1`, and two distinct
/// parameter tuples are never equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagCell {
    /// Ambient index of the normalized leading coordinate.
    pub pivot: usize,
    /// Ambient coordinates of the cell representative.
    pub representative: Vec<Scalar>,
    /// Ambient indices of the free coordinates parameterizing the cell.
    pub parameters: Vec<usize>,
    /// Ambient vectors the parameters multiply.
    pub parameter_basis: Vec<Vec<Scalar>>,
}

/// The classification output for one sample vector `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleOutcome {
    /// No flag datum exists with this `A`: it is not coclosed, or no `α`
    /// satisfies the coupling condition.
    NoExtension {
        /// Whether `δ_g(A) = 0` held.
        a_coclosed: bool,
        /// Whether some `α` satisfied the coupling system.
        alpha_consistent: bool,
    },
    /// The isomorphism classes at this `A`, relative to the resolved `α`.
    Classified {
        /// The canonical compatible functional (free coordinates zero).
        alpha: Vec<Scalar>,
        /// Dimension of the space of compatible `α` beyond the canonical one.
        alpha_freedom: usize,
        /// All `(D, B)` solutions at `(α, A)`.
        db_space: SolutionSpace,
        /// Dimension of the witness orbit of the trivial datum.
        action_dim: usize,
        /// The nonzero classes, cell by cell. The class of the trivial datum
        /// `(D, B) = (0, 0)` is always present and is not listed.
        cells: Vec<FlagCell>,
    },
}

/// The classification of codimension-one extensions at one sample `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleClassification {
    /// The sampled vector `A`.
    pub a_vec: Vec<Scalar>,
    /// What the classification found at this sample.
    pub outcome: SampleOutcome,
}

/// The full classification report over a list of samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagClassification {
    /// The space of coclosed vectors the samples should come from.
    pub a_space: SolutionSpace,
    /// Structural invariants of the base algebra.
    pub certificate: StructureCertificate,
    /// Per-sample classifications, in input order.
    pub samples: Vec<SampleClassification>,
}

/// Subtract from `v` its components along a reduced-echelon basis.
fn reduce_against(v: &[Scalar], rref_basis: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut w = v.to_vec();
    for row in rref_basis {
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        if w[p].is_zero() {
            continue;
        }
        let c = w[p].clone();
        for (wi, ri) in w.iter_mut().zip(row) {
            *wi = wi.clone() - c.clone() * ri.clone();
        }
    }
    w
}

/// Decompose a complement of the witness orbit into cells along the scan
/// order: one cell per reduced-echelon pivot, parameterized by the later
/// pivots.
fn cells_from_complement(c_basis: &[Vec<Scalar>], scan: &[usize]) -> Vec<FlagCell> {
    if c_basis.is_empty() {
        return Vec::new();
    }
    let permuted: Vec<Vec<Scalar>> = c_basis
        .iter()
        .map(|v| scan.iter().map(|&p| v[p].clone()).collect())
        .collect();
    let reduced = rref_rows(&permuted).expect("complement vectors share a length");
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| {
            r.iter()
                .position(|c| !c.is_zero())
                .expect("reduced basis rows are nonzero")
        })
        .collect();
    let unpermute = |r: &[Scalar]| {
        let mut v = vec![Scalar::zero(); r.len()];
        for (pos, &amb) in scan.iter().enumerate() {
            v[amb] = r[pos].clone();
        }
        v
    };
    (0..reduced.len())
        .map(|i| FlagCell {
            pivot: scan[pivots[i]],
            representative: unpermute(&reduced[i]),
            parameters: pivots[i + 1..].iter().map(|&p| scan[p]).collect(),
            parameter_basis: reduced[i + 1..].iter().map(|r| unpermute(r)).collect(),
        })
        .collect()
}

/// Classify all codimension-one extensions of `base` at the given sample
/// vectors `A`, up to isomorphisms fixing the base.
///
/// Per sample: check `A` is coclosed and resolve `α` from the coupling
/// system ([`resolve_alpha`]); solve for all `(D, B)` ([`solve_db`]); quotient
/// by the witness action ([`equivalence_action`]) and decompose the quotient
/// into projective cells along [`scan_order`]. The class of the trivial datum
/// is always present on top of the listed cells. Samples where `α` stays
/// underdetermined are classified at the canonical resolution, with the
/// leftover freedom recorded in
/// [`alpha_freedom`](SampleOutcome::Classified::alpha_freedom).
pub fn classify_codim_one(
    base: &LieBialgebra,
    samples: &[Vec<Scalar>],
) -> Result<FlagClassification, ExtendError> {
    let n = base.dim();
    let scan = scan_order(n);
    let mut out = Vec::with_capacity(samples.len());
    for a_vec in samples {
        if a_vec.len() != n {
            return Err(ExtendError::Shape(format!(
                "sample A needs {n} coordinates, found {}",
                a_vec.len()
            )));
        }
        let a_coclosed = base.cobracket().apply(a_vec).is_zero();
        let alpha_sol = resolve_alpha(base, a_vec)?;
        if !a_coclosed || !alpha_sol.is_consistent() {
            out.push(SampleClassification {
                a_vec: a_vec.clone(),
                outcome: SampleOutcome::NoExtension {
                    a_coclosed,
                    alpha_consistent: alpha_sol.is_consistent(),
                },
            });
            continue;
        }
        let alpha = alpha_sol.particular.expect("consistent system");
        let db_space = solve_db(base, &alpha, a_vec)?;
        let action_rows: Vec<Vec<Scalar>> = (0..n)
            .map(|u| equivalence_action(base, &alpha, a_vec, &unit(n, u)))
            .collect();
        debug_assert!(action_rows.iter().all(|row| {
            db_space.contains(row).expect("ambient lengths agree")
        }));
        let w = rref_rows(&action_rows).expect("row lengths agree");
        let action_dim = w.len();
        let complement_raw: Vec<Vec<Scalar>> = db_space
            .basis
            .iter()
            .map(|v| reduce_against(v, &w))
            .collect();
        let complement = rref_rows(&complement_raw).expect("row lengths agree");
        let cells = cells_from_complement(&complement, &scan);
        out.push(SampleClassification {
            a_vec: a_vec.clone(),
            outcome: SampleOutcome::Classified {
                alpha,
                alpha_freedom: alpha_sol.basis.len(),
                db_space,
                action_dim,
                cells,
            },
        });
    }
    Ok(FlagClassification {
        a_space: a_space(base),
        certificate: structure_certificate(&base.algebra),
        samples: out,
    })
}
