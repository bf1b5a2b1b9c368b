//! On-disk JSON formats for bialgebras, extending data, and flag data,
//! with conversions to and from the library structures.
//!
//! Conventions shared by every format:
//!
//! * all basis indices in files are **1-based**;
//! * scalars are strings in the canonical text form of [`liebex::exactnum`]
//!   (`"0"`, `"3/2"`, `"-1*i"`, `"1/2-3*i"`, …);
//! * absent tables mean zero maps;
//! * the `bracket` table of a bialgebra file is stored upper-triangularly
//!   (keys `"i,j"` with `i < j`) and antisymmetry is implied, while every
//!   datum table is stored verbatim, one key per basis argument tuple.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use liebex::exactnum::{format_scalar, parse_scalar, Matrix, Scalar};
use liebex::extension::{AlgExtendingDatum, BiExtendingDatum, CoalgExtendingDatum};
use liebex::flag::{wedge_pairs, FlagDatum};
use liebex::liecore::{
    BasisSpace, BilinearMap, CobracketMap, LieAlgebra, LieBialgebra, LieCoalgebra, Tensor2,
    TensorMap,
};

use crate::CliError;

/// One `c · e_k` term of a vector-valued table entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    /// 1-based index of the target basis vector.
    pub k: usize,
    /// Coefficient, in canonical scalar text.
    pub c: String,
}

/// One `c · e_j ⊗ e_k` term of a tensor-valued table entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairTerm {
    /// 1-based index of the left tensor factor.
    pub j: usize,
    /// 1-based index of the right tensor factor.
    pub k: usize,
    /// Coefficient, in canonical scalar text.
    pub c: String,
}

/// A table of vector-valued entries, keyed by argument indices (`"x"` or
/// `"x,a"`, 1-based).
pub type Table = BTreeMap<String, Vec<Term>>;

/// A table of tensor-valued entries, keyed by argument index (1-based).
pub type PairTable = BTreeMap<String, Vec<PairTerm>>;

/// A Lie bialgebra file: named basis, upper-triangular bracket table,
/// verbatim cobracket table. Either table may be absent (zero map).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bracket: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cobracket: PairTable,
}

/// The base of a datum or flag file: either the name of a bundled example
/// or an inline bialgebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseRef {
    /// Name of a bundled example (see `liebex corpus list`).
    Name(String),
    /// A full inline bialgebra.
    Inline(BialgebraFile),
}

/// An extending-datum file: a base bialgebra, a complement basis, and the
/// seven structure tables. Every table is optional and stored verbatim.
///
/// Index conventions per table (`x`, `y` run over the complement `V`;
/// `a` runs over the base `g`):
///
/// * `lact` (`◁ : V × g → V`): keys `"x,a"`, terms in `V`;
/// * `ract` (`▷ : V × g → g`): keys `"x,a"`, terms in `g`;
/// * `f` (`V × V → g`): keys `"x,y"`, terms in `g`;
/// * `vbracket` (`{·,·} : V × V → V`): keys `"x,y"`, terms in `V`;
/// * `delta_e` (`Δ_E : V → g ⊗ V`): keys `"x"`, pair terms `(j ∈ g, k ∈ V)`;
/// * `delta_v` (`Δ_V : V → g ⊗ g`): keys `"x"`, pair terms in `g ⊗ g`;
/// * `cobracket_v` (`δ_V : V → V ⊗ V`): keys `"x"`, pair terms in `V ⊗ V`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub name: String,
    pub base: BaseRef,
    pub v_basis: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lact: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ract: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub f: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vbracket: Table,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub delta_e: PairTable,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub delta_v: PairTable,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cobracket_v: PairTable,
}

/// A codimension-one (flag) datum file over a base bialgebra of dimension
/// `n`: a functional `alpha` (length `n`), a matrix `D` (`n` rows of `n`
/// entries, column `j` holding `D(e_j)`), a vector `A` (length `n`), and an
/// antisymmetric tensor `B` stored by its upper wedge coordinates (keys
/// `"j,k"` with `j < k`, value = coefficient of `e_j ⊗ e_k`; the mirrored
/// coefficient of `e_k ⊗ e_j` is implied). Absent pieces are zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagFile {
    pub name: String,
    pub base: BaseRef,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alpha: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty", rename = "D")]
    pub d: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty", rename = "A")]
    pub a: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", rename = "B")]
    pub b: BTreeMap<String, String>,
}

/// The raw pieces of a parsed datum file, before they are committed to one
/// of the datum shapes. The special builders consume individual tables.
#[derive(Debug, Clone)]
pub struct DatumParts {
    pub base: LieBialgebra,
    pub v_space: BasisSpace,
    pub lact: BilinearMap,
    pub ract: BilinearMap,
    pub f: BilinearMap,
    pub vbracket: BilinearMap,
    pub delta_e: TensorMap,
    pub delta_v: TensorMap,
    pub cobracket_v: CobracketMap,
}

impl DatumParts {
    /// Assemble the full bi-extending datum.
    pub fn into_bidatum(self) -> Result<BiExtendingDatum, CliError> {
        let alg = AlgExtendingDatum::new(
            self.base.algebra.clone(),
            self.v_space.clone(),
            self.lact,
            self.ract,
            self.f,
            self.vbracket,
        )
        .map_err(shape)?;
        let coalg = CoalgExtendingDatum::new(
            self.base.coalgebra.clone(),
            self.v_space,
            self.delta_e,
            self.delta_v,
            self.cobracket_v,
        )
        .map_err(shape)?;
        BiExtendingDatum::new(self.base, alg, coalg).map_err(shape)
    }

    /// The complement's own bialgebra `(V, vbracket, cobracket_v)`.
    pub fn v_bialgebra(&self) -> Result<LieBialgebra, CliError> {
        let algebra = LieAlgebra::new(self.v_space.clone(), self.vbracket.clone()).map_err(shape)?;
        let coalgebra =
            LieCoalgebra::new(self.v_space.clone(), self.cobracket_v.clone()).map_err(shape)?;
        LieBialgebra::new(algebra, coalgebra).map_err(shape)
    }
}

fn shape(e: impl std::fmt::Display) -> CliError {
    CliError::Shape(e.to_string())
}

fn parse_coeff(text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|e| CliError::Shape(format!("bad scalar `{text}`: {e}")))
}

fn index1(what: &str, k: usize, dim: usize) -> Result<usize, CliError> {
    if k >= 1 && k <= dim {
        Ok(k - 1)
    } else {
        Err(CliError::Shape(format!(
            "{what} index {k} out of range 1..={dim}"
        )))
    }
}

fn pair_key(key: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Shape(format!("bad table key `{key}`: expected `i,j` (1-based)"));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.parse().map_err(|_| bad())?;
    let j: usize = b.parse().map_err(|_| bad())?;
    Ok((i, j))
}

fn single_key(key: &str) -> Result<usize, CliError> {
    key.parse()
        .map_err(|_| CliError::Shape(format!("bad table key `{key}`: expected a 1-based index")))
}

// ---------------------------------------------------------------------------
// Bialgebra files
// ---------------------------------------------------------------------------

/// Build the library bialgebra a file describes.
pub fn bialgebra_from_file(file: &BialgebraFile) -> Result<LieBialgebra, CliError> {
    let space = BasisSpace::new(file.name.clone(), file.basis.clone()).map_err(shape)?;
    let n = space.dim();

    let mut bracket = BilinearMap::zero(space.clone(), space.clone(), space.clone());
    for (key, terms) in &file.bracket {
        let (i, j) = pair_key(key)?;
        if i >= j {
            return Err(CliError::Shape(format!(
                "bracket key `{key}` must be strictly upper-triangular (i < j); \
                 the lower half is implied by antisymmetry"
            )));
        }
        let i = index1("bracket left", i, n)?;
        let j = index1("bracket right", j, n)?;
        for t in terms {
            let k = index1("bracket target", t.k, n)?;
            let c = parse_coeff(&t.c)?;
            bracket.add_to(i, j, k, c.clone());
            bracket.add_to(j, i, k, -c);
        }
    }

    let mut cobracket = CobracketMap::zero(space.clone());
    for (key, terms) in &file.cobracket {
        let x = index1("cobracket", single_key(key)?, n)?;
        for t in terms {
            let j = index1("cobracket left factor", t.j, n)?;
            let k = index1("cobracket right factor", t.k, n)?;
            cobracket.add_to(x, j, k, parse_coeff(&t.c)?);
        }
    }

    let algebra = LieAlgebra::new(space.clone(), bracket).map_err(shape)?;
    let coalgebra = LieCoalgebra::new(space, cobracket).map_err(shape)?;
    LieBialgebra::new(algebra, coalgebra).map_err(shape)
}

/// Write a bialgebra as a file. Fails if the bracket table is not
/// antisymmetric (such a table cannot be stored upper-triangularly).
pub fn bialgebra_to_file(bi: &LieBialgebra) -> Result<BialgebraFile, CliError> {
    let n = bi.dim();
    let bracket_map = bi.bracket();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let sum = bracket_map.get(i, j, k).clone() + bracket_map.get(j, i, k).clone();
                if !sum.is_zero() {
                    return Err(CliError::Shape(format!(
                        "the bracket table is not antisymmetric at ({}, {}); \
                         it cannot be written upper-triangularly",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
    }

    let mut bracket = Table::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let terms: Vec<Term> = (0..n)
                .filter(|&k| !bracket_map.get(i, j, k).is_zero())
                .map(|k| Term {
                    k: k + 1,
                    c: format_scalar(bracket_map.get(i, j, k)),
                })
                .collect();
            if !terms.is_empty() {
                bracket.insert(format!("{},{}", i + 1, j + 1), terms);
            }
        }
    }

    let cobracket_map = bi.cobracket();
    let mut cobracket = PairTable::new();
    for x in 0..n {
        let mut terms = Vec::new();
        for j in 0..n {
            for k in 0..n {
                if !cobracket_map.get(x, j, k).is_zero() {
                    terms.push(PairTerm {
                        j: j + 1,
                        k: k + 1,
                        c: format_scalar(cobracket_map.get(x, j, k)),
                    });
                }
            }
        }
        if !terms.is_empty() {
            cobracket.insert((x + 1).to_string(), terms);
        }
    }

    Ok(BialgebraFile {
        name: bi.space().name.clone(),
        basis: bi.space().basis.clone(),
        bracket,
        cobracket,
    })
}

// ---------------------------------------------------------------------------
// Datum files
// ---------------------------------------------------------------------------

fn read_bilinear(
    table: &Table,
    what: &str,
    left: &BasisSpace,
    right: &BasisSpace,
    target: &BasisSpace,
) -> Result<BilinearMap, CliError> {
    let mut map = BilinearMap::zero(left.clone(), right.clone(), target.clone());
    for (key, terms) in table {
        let (x, a) = pair_key(key)?;
        let x = index1(&format!("{what} left"), x, left.dim())?;
        let a = index1(&format!("{what} right"), a, right.dim())?;
        for t in terms {
            let k = index1(&format!("{what} target"), t.k, target.dim())?;
            map.add_to(x, a, k, parse_coeff(&t.c)?);
        }
    }
    Ok(map)
}

fn read_tensor(
    table: &PairTable,
    what: &str,
    from: &BasisSpace,
    left: &BasisSpace,
    right: &BasisSpace,
) -> Result<TensorMap, CliError> {
    let mut map = TensorMap::zero(from.clone(), left.clone(), right.clone());
    for (key, terms) in table {
        let x = index1(&format!("{what} argument"), single_key(key)?, from.dim())?;
        for t in terms {
            let j = index1(&format!("{what} left factor"), t.j, left.dim())?;
            let k = index1(&format!("{what} right factor"), t.k, right.dim())?;
            map.add_to(x, j, k, parse_coeff(&t.c)?);
        }
    }
    Ok(map)
}

fn read_vcobracket(table: &PairTable, v: &BasisSpace) -> Result<CobracketMap, CliError> {
    let mut map = CobracketMap::zero(v.clone());
    for (key, terms) in table {
        let x = index1("cobracket_v argument", single_key(key)?, v.dim())?;
        for t in terms {
            let j = index1("cobracket_v left factor", t.j, v.dim())?;
            let k = index1("cobracket_v right factor", t.k, v.dim())?;
            map.add_to(x, j, k, parse_coeff(&t.c)?);
        }
    }
    Ok(map)
}

/// Parse a datum file into its raw tables, resolving the base reference.
pub fn datum_parts_from_file(file: &DatumFile) -> Result<DatumParts, CliError> {
    let base = crate::resolve_base(&file.base)?;
    for label in &file.v_basis {
        if base.space().basis.contains(label) {
            return Err(CliError::Shape(format!(
                "complement label `{label}` collides with a base basis label"
            )));
        }
    }
    let v_space = BasisSpace::new("V", file.v_basis.clone()).map_err(shape)?;
    let g = base.space().clone();

    Ok(DatumParts {
        lact: read_bilinear(&file.lact, "lact", &v_space, &g, &v_space)?,
        ract: read_bilinear(&file.ract, "ract", &v_space, &g, &g)?,
        f: read_bilinear(&file.f, "f", &v_space, &v_space, &g)?,
        vbracket: read_bilinear(&file.vbracket, "vbracket", &v_space, &v_space, &v_space)?,
        delta_e: read_tensor(&file.delta_e, "delta_e", &v_space, &g, &v_space)?,
        delta_v: read_tensor(&file.delta_v, "delta_v", &v_space, &g, &g)?,
        cobracket_v: read_vcobracket(&file.cobracket_v, &v_space)?,
        base,
        v_space,
    })
}

/// Parse a datum file all the way to a bi-extending datum.
pub fn datum_from_file(file: &DatumFile) -> Result<BiExtendingDatum, CliError> {
    datum_parts_from_file(file)?.into_bidatum()
}

fn bilinear_to_table(map: &BilinearMap, left: usize, right: usize, target: usize) -> Table {
    let mut table = Table::new();
    for x in 0..left {
        for a in 0..right {
            let terms: Vec<Term> = (0..target)
                .filter(|&k| !map.get(x, a, k).is_zero())
                .map(|k| Term {
                    k: k + 1,
                    c: format_scalar(map.get(x, a, k)),
                })
                .collect();
            if !terms.is_empty() {
                table.insert(format!("{},{}", x + 1, a + 1), terms);
            }
        }
    }
    table
}

fn pair_terms<F: Fn(usize, usize) -> Scalar>(rows: usize, cols: usize, get: F) -> Vec<PairTerm> {
    let mut terms = Vec::new();
    for j in 0..rows {
        for k in 0..cols {
            let c = get(j, k);
            if !c.is_zero() {
                terms.push(PairTerm {
                    j: j + 1,
                    k: k + 1,
                    c: format_scalar(&c),
                });
            }
        }
    }
    terms
}

/// Write a bi-extending datum as a file with an inline base.
pub fn datum_to_file(name: &str, d: &BiExtendingDatum) -> Result<DatumFile, CliError> {
    let n = d.base.dim();
    let m = d.v_space().dim();

    let mut delta_e = PairTable::new();
    let mut delta_v = PairTable::new();
    let mut cobracket_v = PairTable::new();
    for x in 0..m {
        let te = pair_terms(n, m, |j, k| d.coalg.delta_e.get(x, j, k).clone());
        if !te.is_empty() {
            delta_e.insert((x + 1).to_string(), te);
        }
        let tv = pair_terms(n, n, |j, k| d.coalg.delta_v.get(x, j, k).clone());
        if !tv.is_empty() {
            delta_v.insert((x + 1).to_string(), tv);
        }
        let tc = pair_terms(m, m, |j, k| d.coalg.cobracket_v.get(x, j, k).clone());
        if !tc.is_empty() {
            cobracket_v.insert((x + 1).to_string(), tc);
        }
    }

    Ok(DatumFile {
        name: name.to_string(),
        base: BaseRef::Inline(bialgebra_to_file(&d.base)?),
        v_basis: d.v_space().basis.clone(),
        lact: bilinear_to_table(&d.alg.lact, m, n, m),
        ract: bilinear_to_table(&d.alg.ract, m, n, n),
        f: bilinear_to_table(&d.alg.f, m, m, n),
        vbracket: bilinear_to_table(&d.alg.vbracket, m, m, m),
        delta_e,
        delta_v,
        cobracket_v,
    })
}

// ---------------------------------------------------------------------------
// Flag files
// ---------------------------------------------------------------------------

fn parse_dense(values: &[String], what: &str, n: usize) -> Result<Vec<Scalar>, CliError> {
    if values.is_empty() {
        return Ok(vec![Scalar::zero(); n]);
    }
    if values.len() != n {
        return Err(CliError::Shape(format!(
            "{what} needs {n} entries, found {}",
            values.len()
        )));
    }
    values.iter().map(|s| parse_coeff(s)).collect()
}

/// Parse a flag file into a flag datum, resolving the base reference.
pub fn flag_from_file(file: &FlagFile) -> Result<FlagDatum, CliError> {
    let base = crate::resolve_base(&file.base)?;
    let n = base.dim();
    let space = base.space().clone();

    let alpha = parse_dense(&file.alpha, "alpha", n)?;
    let a_vec = parse_dense(&file.a, "A", n)?;

    let d = if file.d.is_empty() {
        Matrix::zeros(n, n)
    } else {
        if file.d.len() != n {
            return Err(CliError::Shape(format!(
                "D needs {n} rows, found {}",
                file.d.len()
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, row) in file.d.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::Shape(format!(
                    "D row {} needs {n} entries, found {}",
                    i + 1,
                    row.len()
                )));
            }
            let parsed: Result<Vec<Scalar>, CliError> =
                row.iter().map(|s| parse_coeff(s)).collect();
            rows.push(parsed?);
        }
        Matrix::from_rows(rows).map_err(shape)?
    };

    let mut b = Tensor2::zero(space.clone(), space);
    for (key, value) in &file.b {
        let (j, k) = pair_key(key)?;
        if j >= k {
            return Err(CliError::Shape(format!(
                "B key `{key}` must be strictly upper wedge coordinates (j < k); \
                 the mirrored entry is implied"
            )));
        }
        let j = index1("B left factor", j, n)?;
        let k = index1("B right factor", k, n)?;
        let c = parse_coeff(value)?;
        b.add_to(j, k, c.clone());
        b.add_to(k, j, -c);
    }

    FlagDatum::new(base, alpha, d, a_vec, b).map_err(shape)
}

/// Write a flag datum as a file with an inline base.
pub fn flag_to_file(name: &str, fd: &FlagDatum) -> Result<FlagFile, CliError> {
    let n = fd.base.dim();
    let mut b = BTreeMap::new();
    for (j, k) in wedge_pairs(n) {
        let c = fd.b.get(j, k);
        if !c.is_zero() {
            b.insert(format!("{},{}", j + 1, k + 1), format_scalar(c));
        }
    }
    Ok(FlagFile {
        name: name.to_string(),
        base: BaseRef::Inline(bialgebra_to_file(&fd.base)?),
        alpha: fd.alpha.iter().map(format_scalar).collect(),
        d: (0..n)
            .map(|i| (0..n).map(|j| format_scalar(fd.d.get(i, j))).collect())
            .collect(),
        a: fd.a_vec.iter().map(format_scalar).collect(),
        b,
    })
}
