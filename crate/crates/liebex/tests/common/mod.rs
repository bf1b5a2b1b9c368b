//! Shared fixtures and randomized generators for the integration tests.
//!
//! Everything here is deterministic given the seed, so failures reproduce.
//! The scalar pool is deliberately small ({0, ±1, ±1/2, ±i}) to keep the
//! arithmetic readable in failure reports while still exercising the complex
//! and fractional paths.

#![allow(dead_code)]

use liebex::exactnum::{imag, int, rat, Scalar};
use liebex::extension::BiExtendingDatum;
use liebex::flag::{self, FlagDatum};
use liebex::liecore::{
    BasisSpace, CobracketMap, LieAlgebra, LieBialgebra, LieCoalgebra,
};
use liebex::special::{BicrossedSumDatum, DoubleCrossSumDatum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// The nonzero test scalars: ±1, ±1/2, ±i.
pub fn nonzero_pool() -> Vec<Scalar> {
    vec![int(1), int(-1), rat(1, 2), rat(-1, 2), imag(1, 1), imag(-1, 1)]
}

/// A uniformly random nonzero pool scalar.
pub fn random_nonzero(rng: &mut StdRng) -> Scalar {
    let pool = nonzero_pool();
    pool[rng.gen_range(0..pool.len())].clone()
}

/// Zero with probability `1 − p_nonzero`, otherwise a random pool scalar.
pub fn sparse_scalar(rng: &mut StdRng, p_nonzero: f64) -> Scalar {
    if rng.gen_bool(p_nonzero) {
        random_nonzero(rng)
    } else {
        int(0)
    }
}

// ---------------------------------------------------------------------------
// Base catalog
// ---------------------------------------------------------------------------

/// The three-dimensional nilpotent base with its standard cobracket:
/// `[x, y] = h`, `δ(x) = y ∧ h`, `δ(y) = h ∧ x`, `δ(h) = 0`.
pub fn heisenberg() -> LieBialgebra {
    let space = BasisSpace::new("h3", vec!["x".into(), "y".into(), "h".into()]).unwrap();
    let algebra =
        LieAlgebra::from_skew_entries(space.clone(), &[(0, 1, vec![(2, int(1))])]).unwrap();
    let mut d = CobracketMap::zero(space.clone());
    d.set(0, 1, 2, int(1));
    d.set(0, 2, 1, int(-1));
    d.set(1, 2, 0, int(1));
    d.set(1, 0, 2, int(-1));
    let coalgebra = LieCoalgebra::new(space, d).unwrap();
    LieBialgebra::new(algebra, coalgebra).unwrap()
}

/// `sl₂` with the trivial cobracket: `[e,f] = h`, `[e,h] = −2e`, `[f,h] = 2f`.
pub fn sl2_trivial() -> LieBialgebra {
    let space = BasisSpace::new("sl2", vec!["e".into(), "f".into(), "h".into()]).unwrap();
    let algebra = LieAlgebra::from_skew_entries(
        space.clone(),
        &[
            (0, 1, vec![(2, int(1))]),
            (0, 2, vec![(0, int(-2))]),
            (1, 2, vec![(1, int(2))]),
        ],
    )
    .unwrap();
    let coalgebra = LieCoalgebra::trivial(space);
    LieBialgebra::new(algebra, coalgebra).unwrap()
}

/// The abelian bialgebra of dimension `n` (zero bracket, zero cobracket).
pub fn abelian(n: usize) -> LieBialgebra {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let space = BasisSpace::new(format!("ab{n}"), labels).unwrap();
    LieBialgebra::new(
        LieAlgebra::abelian(space.clone()),
        LieCoalgebra::trivial(space),
    )
    .unwrap()
}

/// Zero bracket with the two-dimensional cobracket `δ(e1) = e1 ∧ e2`.
pub fn abelian2_cobracket() -> LieBialgebra {
    let space = BasisSpace::new("ab2c", vec!["e1".into(), "e2".into()]).unwrap();
    let mut d = CobracketMap::zero(space.clone());
    d.set(0, 0, 1, int(1));
    d.set(0, 1, 0, int(-1));
    LieBialgebra::new(
        LieAlgebra::abelian(space.clone()),
        LieCoalgebra::new(space, d).unwrap(),
    )
    .unwrap()
}

/// The two-dimensional solvable algebra `[e1, e2] = e1` with trivial cobracket.
pub fn solvable2() -> LieBialgebra {
    let space = BasisSpace::new("sv2", vec!["e1".into(), "e2".into()]).unwrap();
    let algebra =
        LieAlgebra::from_skew_entries(space.clone(), &[(0, 1, vec![(0, int(1))])]).unwrap();
    LieBialgebra::new(algebra, LieCoalgebra::trivial(space)).unwrap()
}

/// All catalog bases (each a valid Lie bialgebra of dimension ≤ 3).
pub fn base_catalog() -> Vec<LieBialgebra> {
    vec![
        heisenberg(),
        sl2_trivial(),
        abelian(1),
        abelian(2),
        abelian(3),
        abelian2_cobracket(),
        solvable2(),
    ]
}

/// A complement space with `m` basis labels `t1 … tm`.
pub fn v_space(m: usize) -> BasisSpace {
    let labels = (1..=m).map(|i| format!("t{i}")).collect();
    BasisSpace::new("V", labels).unwrap()
}

// ---------------------------------------------------------------------------
// Random extending data
// ---------------------------------------------------------------------------

/// A datum over `base` with every coefficient drawn sparsely at random.
///
/// With `skewed` the alternating-shaped components (`f`, `{·,·}`, `Δ_V`,
/// `δ_V`) are antisymmetrized afterwards, so the datum survives the shallow
/// antisymmetry laws and exercises the deeper compatibility conditions.
pub fn random_bidatum(
    rng: &mut StdRng,
    base: &LieBialgebra,
    m: usize,
    p_nonzero: f64,
    skewed: bool,
) -> BiExtendingDatum {
    let n = base.dim();
    let mut d = BiExtendingDatum::zero(base.clone(), v_space(m));
    for x in 0..m {
        for a in 0..n {
            for k in 0..m {
                d.alg.lact.set(x, a, k, sparse_scalar(rng, p_nonzero));
            }
            for k in 0..n {
                d.alg.ract.set(x, a, k, sparse_scalar(rng, p_nonzero));
            }
        }
    }
    for x in 0..m {
        for y in 0..m {
            for k in 0..n {
                d.alg.f.set(x, y, k, sparse_scalar(rng, p_nonzero));
            }
            for k in 0..m {
                d.alg.vbracket.set(x, y, k, sparse_scalar(rng, p_nonzero));
            }
        }
    }
    for x in 0..m {
        for i in 0..n {
            for j in 0..m {
                d.coalg.delta_e.set(x, i, j, sparse_scalar(rng, p_nonzero));
            }
            for j in 0..n {
                d.coalg.delta_v.set(x, i, j, sparse_scalar(rng, p_nonzero));
            }
        }
        for i in 0..m {
            for j in 0..m {
                d.coalg.cobracket_v.set(x, i, j, sparse_scalar(rng, p_nonzero));
            }
        }
    }
    if skewed {
        skew_symmetrize(&mut d);
    }
    d
}

/// Antisymmetrize the alternating-shaped components in place.
pub fn skew_symmetrize(d: &mut BiExtendingDatum) {
    let n = d.base.dim();
    let m = d.v_space().dim();
    for x in 0..m {
        for y in 0..=x {
            for k in 0..n {
                if x == y {
                    d.alg.f.set(x, y, k, int(0));
                } else {
                    let c = -d.alg.f.get(x, y, k).clone();
                    d.alg.f.set(y, x, k, c);
                }
            }
            for k in 0..m {
                if x == y {
                    d.alg.vbracket.set(x, y, k, int(0));
                } else {
                    let c = -d.alg.vbracket.get(x, y, k).clone();
                    d.alg.vbracket.set(y, x, k, c);
                }
            }
        }
    }
    for x in 0..m {
        for i in 0..n {
            for j in 0..=i {
                if i == j {
                    d.coalg.delta_v.set(x, i, j, int(0));
                } else {
                    let c = -d.coalg.delta_v.get(x, i, j).clone();
                    d.coalg.delta_v.set(x, j, i, c);
                }
            }
        }
        for i in 0..m {
            for j in 0..=i {
                if i == j {
                    d.coalg.cobracket_v.set(x, i, j, int(0));
                } else {
                    let c = -d.coalg.cobracket_v.get(x, i, j).clone();
                    d.coalg.cobracket_v.set(x, j, i, c);
                }
            }
        }
    }
}

/// Add a random nonzero value to one random coefficient of one random
/// component map — the "near-valid" mutation.
pub fn mutate_datum(rng: &mut StdRng, d: &mut BiExtendingDatum) {
    let n = d.base.dim();
    let m = d.v_space().dim();
    let c = random_nonzero(rng);
    match rng.gen_range(0..7) {
        0 => {
            let (x, a, k) = (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..m));
            d.alg.lact.add_to(x, a, k, c);
        }
        1 => {
            let (x, a, k) = (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..n));
            d.alg.ract.add_to(x, a, k, c);
        }
        2 => {
            let (x, y, k) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..n));
            d.alg.f.add_to(x, y, k, c);
        }
        3 => {
            let (x, y, k) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
            d.alg.vbracket.add_to(x, y, k, c);
        }
        4 => {
            let (x, i, j) = (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..m));
            d.coalg.delta_e.add_to(x, i, j, c);
        }
        5 => {
            let (x, i, j) = (rng.gen_range(0..m), rng.gen_range(0..n), rng.gen_range(0..n));
            d.coalg.delta_v.add_to(x, i, j, c);
        }
        _ => {
            let (x, i, j) = (rng.gen_range(0..m), rng.gen_range(0..m), rng.gen_range(0..m));
            d.coalg.cobracket_v.add_to(x, i, j, c);
        }
    }
}

// ---------------------------------------------------------------------------
// Valid extending data
// ---------------------------------------------------------------------------

/// A guaranteed-valid datum, rotating through independent constructions:
/// zero datums over catalog bases, direct sums with a structured complement,
/// flag-derived data, and adjoint-action bicrossed/double cross sums.
pub fn valid_bidatum(rng: &mut StdRng, idx: usize) -> BiExtendingDatum {
    match idx % 6 {
        0 => {
            let bases = base_catalog();
            let base = bases[rng.gen_range(0..bases.len())].clone();
            BiExtendingDatum::zero(base, v_space(1 + idx % 2))
        }
        1 => {
            // Direct sum with the solvable plane: [t1, t2] = t1, δ_V = 0.
            let bases = base_catalog();
            let base = bases[rng.gen_range(0..bases.len())].clone();
            let mut d = BiExtendingDatum::zero(base, v_space(2));
            d.alg.vbracket.set(0, 1, 0, int(1));
            d.alg.vbracket.set(1, 0, 0, int(-1));
            d
        }
        2 => {
            // Direct sum with the coplane: zero bracket, δ_V(t1) = t1 ∧ t2.
            let bases = base_catalog();
            let base = bases[rng.gen_range(0..bases.len())].clone();
            let mut d = BiExtendingDatum::zero(base, v_space(2));
            d.coalg.cobracket_v.set(0, 0, 1, int(1));
            d.coalg.cobracket_v.set(0, 1, 0, int(-1));
            d
        }
        3 => flag::flag_to_bidatum(&valid_flag_datum(rng, &heisenberg())),
        4 => {
            // Adjoint action: t ▷ a = [u, a] over the nilpotent base.
            let base = heisenberg();
            let trivial_line = LieBialgebra::new(
                LieAlgebra::abelian(v_space(1)),
                LieCoalgebra::trivial(v_space(1)),
            )
            .unwrap();
            let mut datum = BicrossedSumDatum::zero(base.clone(), trivial_line);
            let u: Vec<Scalar> = (0..3).map(|_| sparse_scalar(rng, 0.7)).collect();
            for a in 0..3 {
                for (k, c) in base.algebra.bracket_vec(&u, &liebex::liecore::unit(3, a))
                    .into_iter()
                    .enumerate()
                {
                    datum.ract.set(0, a, k, c);
                }
            }
            datum.to_bidatum()
        }
        _ => {
            let base = heisenberg();
            let trivial_line = LieBialgebra::new(
                LieAlgebra::abelian(v_space(1)),
                LieCoalgebra::trivial(v_space(1)),
            )
            .unwrap();
            let mut datum = DoubleCrossSumDatum::zero(base.clone(), trivial_line);
            let u: Vec<Scalar> = (0..3).map(|_| sparse_scalar(rng, 0.7)).collect();
            for a in 0..3 {
                for (k, c) in base.algebra.bracket_vec(&u, &liebex::liecore::unit(3, a))
                    .into_iter()
                    .enumerate()
                {
                    datum.ract.set(0, a, k, c);
                }
            }
            datum.to_bidatum()
        }
    }
}

// ---------------------------------------------------------------------------
// Flag data
// ---------------------------------------------------------------------------

/// A flag datum with every coordinate drawn sparsely at random (`B` is
/// antisymmetrized); mostly invalid — pair with [`valid_flag_datum`].
pub fn random_flag_datum(rng: &mut StdRng, base: &LieBialgebra, p_nonzero: f64) -> FlagDatum {
    let n = base.dim();
    let mut fd = FlagDatum::zero(base.clone());
    for a in 0..n {
        fd.alpha[a] = sparse_scalar(rng, p_nonzero);
        fd.a_vec[a] = sparse_scalar(rng, p_nonzero);
        for k in 0..n {
            fd.d.set(k, a, sparse_scalar(rng, p_nonzero));
        }
    }
    for (i, j) in flag::wedge_pairs(n) {
        let c = sparse_scalar(rng, p_nonzero);
        fd.b.set(i, j, c.clone());
        fd.b.set(j, i, -c);
    }
    fd
}

/// A guaranteed-valid flag datum over `base`: sample an admissible `A` from
/// the coclosed space, resolve a compatible `α` (falling back to `A = 0`
/// when none exists), and draw a random solution of the linear completion
/// problem at that pair.
pub fn valid_flag_datum(rng: &mut StdRng, base: &LieBialgebra) -> FlagDatum {
    let n = base.dim();
    let a_sp = flag::a_space(base);
    let coeffs: Vec<Scalar> = (0..a_sp.basis.len())
        .map(|_| sparse_scalar(rng, 0.6))
        .collect();
    let mut a_vec = a_sp.element(&coeffs).unwrap();
    let mut alpha_sol = flag::resolve_alpha(base, &a_vec).unwrap();
    if !alpha_sol.is_consistent() {
        a_vec = vec![int(0); n];
        alpha_sol = flag::resolve_alpha(base, &a_vec).unwrap();
    }
    let alpha_coeffs: Vec<Scalar> = (0..alpha_sol.basis.len())
        .map(|_| sparse_scalar(rng, 0.5))
        .collect();
    let alpha = alpha_sol.element(&alpha_coeffs).unwrap();
    let db = flag::solve_db(base, &alpha, &a_vec).unwrap();
    let db_coeffs: Vec<Scalar> = (0..db.basis.len())
        .map(|_| sparse_scalar(rng, 0.6))
        .collect();
    let z = db.element(&db_coeffs).unwrap();
    let (d, b) = flag::unpack_db(base.space(), &z).unwrap();
    FlagDatum::new(base.clone(), alpha, d, a_vec, b).unwrap()
}

/// A random witness `(U, β)` with `β ≠ 0`.
pub fn random_witness(rng: &mut StdRng, n: usize) -> (Vec<Scalar>, Scalar) {
    let u = (0..n).map(|_| sparse_scalar(rng, 0.7)).collect();
    (u, random_nonzero(rng))
}
