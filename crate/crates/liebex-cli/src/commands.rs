//! Implementations of the CLI subcommands.
//!
//! Every command returns its full stdout text on success; mathematical
//! rejections come back as [`CliError::Domain`] carrying the rendered
//! verdict, so the binary can print it and exit 1.

use std::path::Path;

use num::Zero;
use serde_json::{json, Value};

use liebex::exactnum::{format_scalar, parse_scalar, Matrix, Scalar, SolutionSpace};
use liebex::extension::{
    check_alg_extending, check_bi_extending, check_coalg_extending, extract_datum,
    unified_biproduct, unified_coproduct, unified_product, ExtendError,
};
use liebex::flag::{
    a_space, check_flag_datum, classify_codim_one, flag_equivalent, resolve_alpha, solve_db,
    unpack_db, wedge_pairs, FlagCell, FlagDatum, SampleOutcome, StructureCertificate,
};
use liebex::liecore::{
    check_lie_algebra, check_lie_bialgebra, check_lie_coalgebra, BilinearMap, LieAlgebra,
    LieBialgebra, LieCoalgebra, Tensor2, TensorMap, VerdictReport,
};
use liebex::special::{
    bicrossed_sum, crossed_biproduct, doublecross_sum, BicrossedSumDatum, CrossedBiDatum,
    DoubleCrossSumDatum,
};

use crate::files::{
    bialgebra_from_file, bialgebra_to_file, datum_parts_from_file, datum_to_file, flag_from_file,
    BialgebraFile, DatumFile, DatumParts, FlagFile,
};
use crate::{corpus, load_text_arg, parse_json, read_text};
use crate::{BuildArgs, BuildCmd, CheckKind, CliError, Format};

// ---------------------------------------------------------------------------
// Shared rendering helpers
// ---------------------------------------------------------------------------

fn fmt_scalars(coords: &[Scalar]) -> String {
    coords
        .iter()
        .map(format_scalar)
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_indices(at: &[usize]) -> String {
    at.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn fmt_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("({})", fmt_scalars(m.row(i))))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn fmt_wedge(b: &Tensor2, n: usize) -> String {
    let entries: Vec<String> = wedge_pairs(n)
        .into_iter()
        .filter(|&(j, k)| !b.get(j, k).is_zero())
        .map(|(j, k)| format!("({},{}): {}", j + 1, k + 1, format_scalar(b.get(j, k))))
        .collect();
    if entries.is_empty() {
        "0".to_string()
    } else {
        format!("{{{}}}", entries.join(", "))
    }
}

fn json_scalars(coords: &[Scalar]) -> Value {
    Value::from(coords.iter().map(format_scalar).collect::<Vec<_>>())
}

fn json_matrix(m: &Matrix) -> Value {
    Value::from(
        (0..m.rows())
            .map(|i| m.row(i).iter().map(format_scalar).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )
}

fn json_wedge(b: &Tensor2, n: usize) -> Value {
    let mut map = serde_json::Map::new();
    for (j, k) in wedge_pairs(n) {
        if !b.get(j, k).is_zero() {
            map.insert(
                format!("{},{}", j + 1, k + 1),
                Value::from(format_scalar(b.get(j, k))),
            );
        }
    }
    Value::Object(map)
}

fn pretty(doc: &Value) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("JSON rendering cannot fail");
    text.push('\n');
    text
}

/// The human-readable name of a packed `(D, B)` ambient coordinate.
fn ambient_label(n: usize, idx: usize) -> String {
    if idx < n * n {
        format!("D[{},{}]", idx / n + 1, idx % n + 1)
    } else {
        let (j, k) = wedge_pairs(n)[idx - n * n];
        format!("B[{},{}]", j + 1, k + 1)
    }
}

fn parse_coord(text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|e| CliError::Shape(format!("bad scalar `{text}`: {e}")))
}

/// Parse `--A`/`--alpha` style arguments: `0` or comma-separated coordinates.
fn parse_vector_arg(arg: &str, n: usize, what: &str) -> Result<Vec<Scalar>, CliError> {
    let arg = arg.trim();
    if arg == "0" {
        return Ok(vec![Scalar::zero(); n]);
    }
    let coords: Vec<Scalar> = arg
        .split(',')
        .map(|t| parse_coord(t.trim()))
        .collect::<Result<_, _>>()?;
    if coords.len() != n {
        return Err(CliError::Shape(format!(
            "{what} needs {n} comma-separated coordinates (or `0`), found {}",
            coords.len()
        )));
    }
    Ok(coords)
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn render_sections(sections: &[(&str, VerdictReport)], format: Format) -> Result<String, CliError> {
    let total: usize = sections.iter().map(|(_, r)| r.violations.len()).sum();
    match format {
        Format::Text => {
            if total == 0 {
                return Ok("ok\n".to_string());
            }
            let mut out = format!("invalid: {total} violation(s)\n");
            for (section, report) in sections {
                for v in &report.violations {
                    out.push_str(&format!(
                        "  [{section}] {} @ ({}): residual ({})\n",
                        v.law,
                        fmt_indices(&v.at),
                        fmt_scalars(&v.residual)
                    ));
                }
            }
            Err(CliError::Domain(out))
        }
        Format::Machine => {
            let violations: Vec<Value> = sections
                .iter()
                .flat_map(|(section, report)| {
                    report.violations.iter().map(move |v| {
                        json!({
                            "section": section,
                            "law": v.law,
                            "at": v.at.iter().map(|i| i + 1).collect::<Vec<_>>(),
                            "residual": v.residual.iter().map(format_scalar).collect::<Vec<_>>(),
                        })
                    })
                })
                .collect();
            let text = pretty(&json!({ "valid": total == 0, "violations": violations }));
            if total == 0 {
                Ok(text)
            } else {
                Err(CliError::Domain(text))
            }
        }
    }
}

/// `liebex check <input> <kind>`.
pub fn check(input: &str, kind: CheckKind, format: Format) -> Result<String, CliError> {
    let text = load_text_arg(input)?;
    let sections: Vec<(&str, VerdictReport)> = match kind {
        CheckKind::Algebra | CheckKind::Coalgebra | CheckKind::Bialgebra => {
            let file: BialgebraFile = parse_json(&text, "bialgebra file")?;
            let bi = bialgebra_from_file(&file)?;
            match kind {
                CheckKind::Algebra => vec![("algebra", check_lie_algebra(&bi.algebra))],
                CheckKind::Coalgebra => vec![("coalgebra", check_lie_coalgebra(&bi.coalgebra))],
                _ => vec![("bialgebra", check_lie_bialgebra(&bi))],
            }
        }
        CheckKind::AlgDatum | CheckKind::CoalgDatum | CheckKind::BiDatum => {
            let file: DatumFile = parse_json(&text, "datum file")?;
            let d = datum_parts_from_file(&file)?.into_bidatum()?;
            match kind {
                CheckKind::AlgDatum => vec![
                    ("base algebra", check_lie_algebra(&d.base.algebra)),
                    ("datum", check_alg_extending(&d.alg)),
                ],
                CheckKind::CoalgDatum => vec![
                    ("base coalgebra", check_lie_coalgebra(&d.base.coalgebra)),
                    ("datum", check_coalg_extending(&d.coalg)),
                ],
                _ => vec![
                    ("base bialgebra", check_lie_bialgebra(&d.base)),
                    ("datum", check_bi_extending(&d)),
                ],
            }
        }
        CheckKind::Flag => {
            let file: FlagFile = parse_json(&text, "flag file")?;
            let fd = flag_from_file(&file)?;
            vec![
                ("base bialgebra", check_lie_bialgebra(&fd.base)),
                ("datum", check_flag_datum(&fd)),
            ]
        }
    };
    render_sections(&sections, format)
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

fn extend_err(e: ExtendError) -> CliError {
    match e {
        ExtendError::InvalidDatum(report) => {
            match render_sections(&[("datum", report)], Format::Text) {
                Err(err) => err,
                Ok(_) => unreachable!("an invalid datum has at least one violation"),
            }
        }
        other => CliError::Shape(other.to_string()),
    }
}

fn require_zero_bilinear(map: &BilinearMap, table: &str, verb: &str) -> Result<(), CliError> {
    if map.coeffs().iter().any(|c| !c.is_zero()) {
        return Err(CliError::Shape(format!(
            "a {verb} datum must not have a `{table}` table; remove it or use `build biproduct`"
        )));
    }
    Ok(())
}

fn require_zero_tensor(map: &TensorMap, table: &str, verb: &str) -> Result<(), CliError> {
    if map.coeffs().iter().any(|c| !c.is_zero()) {
        return Err(CliError::Shape(format!(
            "a {verb} datum must not have a `{table}` table; remove it or use `build biproduct`"
        )));
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(value: &T, out: Option<&Path>) -> Result<String, CliError> {
    let mut text =
        serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    text.push('\n');
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| CliError::Shape(format!("cannot write {}: {e}", path.display())))?;
            Ok(format!("wrote {}\n", path.display()))
        }
        None => Ok(text),
    }
}

fn assemble(cmd: &BuildCmd, parts: DatumParts) -> Result<LieBialgebra, CliError> {
    match cmd {
        BuildCmd::Product(_) => {
            let d = parts.into_bidatum()?;
            let algebra = unified_product(&d.alg).map_err(extend_err)?;
            let space = algebra.space.clone();
            LieBialgebra::new(algebra, LieCoalgebra::trivial(space))
                .map_err(|e| CliError::Shape(e.to_string()))
        }
        BuildCmd::Coproduct(_) => {
            let d = parts.into_bidatum()?;
            let coalgebra = unified_coproduct(&d.coalg).map_err(extend_err)?;
            let space = coalgebra.space.clone();
            LieBialgebra::new(LieAlgebra::abelian(space), coalgebra)
                .map_err(|e| CliError::Shape(e.to_string()))
        }
        BuildCmd::Biproduct(_) => {
            let d = parts.into_bidatum()?;
            unified_biproduct(&d).map_err(extend_err)
        }
        BuildCmd::Crossed(_) => {
            require_zero_bilinear(&parts.lact, "lact", "crossed")?;
            let v_bi = parts.v_bialgebra()?;
            let d = CrossedBiDatum::new(
                parts.base,
                v_bi,
                parts.ract,
                parts.f,
                parts.delta_e,
                parts.delta_v,
            )
            .map_err(|e| CliError::Shape(e.to_string()))?;
            crossed_biproduct(&d).map_err(extend_err)
        }
        BuildCmd::Bicrossed(_) => {
            require_zero_bilinear(&parts.lact, "lact", "bicrossed")?;
            require_zero_bilinear(&parts.f, "f", "bicrossed")?;
            require_zero_tensor(&parts.delta_v, "delta_v", "bicrossed")?;
            let v_bi = parts.v_bialgebra()?;
            let d = BicrossedSumDatum::new(parts.base, v_bi, parts.ract, parts.delta_e)
                .map_err(|e| CliError::Shape(e.to_string()))?;
            bicrossed_sum(&d).map_err(extend_err)
        }
        BuildCmd::Doublecross(_) => {
            require_zero_bilinear(&parts.f, "f", "double cross")?;
            require_zero_tensor(&parts.delta_e, "delta_e", "double cross")?;
            require_zero_tensor(&parts.delta_v, "delta_v", "double cross")?;
            let v_bi = parts.v_bialgebra()?;
            let d = DoubleCrossSumDatum::new(parts.base, v_bi, parts.lact, parts.ract)
                .map_err(|e| CliError::Shape(e.to_string()))?;
            doublecross_sum(&d).map_err(extend_err)
        }
    }
}

/// `liebex build <verb> <datum> [--out path]`.
pub fn build(cmd: &BuildCmd) -> Result<String, CliError> {
    let args: &BuildArgs = match cmd {
        BuildCmd::Product(a)
        | BuildCmd::Coproduct(a)
        | BuildCmd::Biproduct(a)
        | BuildCmd::Crossed(a)
        | BuildCmd::Bicrossed(a)
        | BuildCmd::Doublecross(a) => a,
    };
    let text = read_text(&args.datum)?;
    let file: DatumFile = parse_json(&text, "datum file")?;
    let parts = datum_parts_from_file(&file)?;
    let product = assemble(cmd, parts)?;
    let mut out_file = bialgebra_to_file(&product)?;
    out_file.name = file.name.clone();
    emit_json(&out_file, args.out.as_deref())
}

// ---------------------------------------------------------------------------
// extract
// ---------------------------------------------------------------------------

/// `liebex extract <input> --sub i,j,… [--out path]`.
pub fn extract(input: &str, sub: &[usize], out: Option<&Path>) -> Result<String, CliError> {
    let text = load_text_arg(input)?;
    let file: BialgebraFile = parse_json(&text, "bialgebra file")?;
    let bi = bialgebra_from_file(&file)?;
    if sub.contains(&0) {
        return Err(CliError::Shape(
            "sub indices are 1-based; 0 is not a valid index".to_string(),
        ));
    }
    let zero_based: Vec<usize> = sub.iter().map(|&i| i - 1).collect();
    let d = extract_datum(&bi, &zero_based).map_err(|e| match e {
        ExtendError::NotASubBialgebra(msg) => {
            CliError::Domain(format!("not a complemented sub-bialgebra: {msg}\n"))
        }
        other => CliError::Shape(other.to_string()),
    })?;

    // Re-verify before writing anything: the induced sub-structure must be a
    // bialgebra in its own right and the datum must satisfy its conditions
    // (both can fail when the input file itself violates the bialgebra laws).
    let sections = [
        ("sub-bialgebra", check_lie_bialgebra(&d.base)),
        ("extracted datum", check_bi_extending(&d)),
    ];
    render_sections(&sections, Format::Text)?;

    let name = format!(
        "{}-sub-{}",
        file.name,
        sub.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("-")
    );
    let datum_file = datum_to_file(&name, &d)?;
    emit_json(&datum_file, out)
}

// ---------------------------------------------------------------------------
// flag solve
// ---------------------------------------------------------------------------

fn load_bialgebra_arg(arg: &str) -> Result<LieBialgebra, CliError> {
    let text = load_text_arg(arg)?;
    let file: BialgebraFile = parse_json(&text, "bialgebra file")?;
    bialgebra_from_file(&file)
}

fn load_flag_arg(arg: &str) -> Result<FlagDatum, CliError> {
    let text = load_text_arg(arg)?;
    let file: FlagFile = parse_json(&text, "flag file")?;
    flag_from_file(&file)
}

/// The scalar-layer laws `(alpha, A)` must satisfy on their own, obtained by
/// checking the flag datum whose completion `(D, B)` is zero: exactly the
/// functional, coclosure, and coupling conditions can fire there.
fn scalar_layer_report(bi: &LieBialgebra, alpha: &[Scalar], a_vec: &[Scalar]) -> VerdictReport {
    let n = bi.dim();
    let space = bi.space().clone();
    let probe = FlagDatum::new(
        bi.clone(),
        alpha.to_vec(),
        Matrix::zeros(n, n),
        a_vec.to_vec(),
        Tensor2::zero(space.clone(), space),
    )
    .expect("zero completion always has the right shape");
    check_flag_datum(&probe)
}

/// `liebex flag solve <base> --A … [--alpha …]`.
pub fn flag_solve(
    base_arg: &str,
    a_arg: &str,
    alpha_arg: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let bi = load_bialgebra_arg(base_arg)?;
    let n = bi.dim();
    let a_vec = parse_vector_arg(a_arg, n, "A")?;
    let (alpha, resolved, freedom) = match alpha_arg {
        Some(s) => (parse_vector_arg(s, n, "alpha")?, false, None),
        None => {
            let sol = resolve_alpha(&bi, &a_vec).map_err(|e| CliError::Shape(e.to_string()))?;
            if !sol.is_consistent() {
                return Err(CliError::Domain(
                    "no functional alpha is compatible with this A: \
                     the coupling system is inconsistent\n"
                        .to_string(),
                ));
            }
            let freedom = sol.basis.len();
            (
                sol.particular.expect("consistent spaces carry a particular"),
                true,
                Some(freedom),
            )
        }
    };

    let scalar_report = scalar_layer_report(&bi, &alpha, &a_vec);
    let admissible = scalar_report.is_valid();
    let space = solve_db(&bi, &alpha, &a_vec).map_err(|e| CliError::Shape(e.to_string()))?;
    let dim = space.dim().unwrap_or(0);

    match format {
        Format::Text => {
            let mut out = format!("base: {} (dim {n})\n", bi.space().name);
            out.push_str(&format!("A = ({})\n", fmt_scalars(&a_vec)));
            let marker = match freedom {
                Some(f) => format!(" [resolved; freedom {f}]"),
                None => String::new(),
            };
            out.push_str(&format!("alpha = ({}){marker}\n", fmt_scalars(&alpha)));
            if admissible {
                out.push_str("admissible: yes\n");
            } else {
                let laws = scalar_report.violated_laws().join(", ");
                out.push_str(&format!(
                    "admissible: no ({laws}); no flag datum exists at this pair\n"
                ));
            }
            out.push_str(&format!("completion space dimension: {dim}\n"));
            for (idx, vec) in space.basis.iter().enumerate() {
                let (d, b) = unpack_db(bi.space(), vec)
                    .expect("solution vectors have the ambient length");
                out.push_str(&format!(
                    "  {}: D = {}  B = {}\n",
                    idx + 1,
                    fmt_matrix(&d),
                    fmt_wedge(&b, n)
                ));
            }
            Ok(out)
        }
        Format::Machine => {
            let basis: Vec<Value> = space
                .basis
                .iter()
                .map(|vec| {
                    let (d, b) = unpack_db(bi.space(), vec)
                        .expect("solution vectors have the ambient length");
                    json!({ "D": json_matrix(&d), "B": json_wedge(&b, n) })
                })
                .collect();
            Ok(pretty(&json!({
                "base": bi.space().name,
                "dim": n,
                "A": json_scalars(&a_vec),
                "alpha": json_scalars(&alpha),
                "alpha_resolved": resolved,
                "alpha_freedom": freedom,
                "admissible": admissible,
                "violated": scalar_report.violated_laws(),
                "dimension": dim,
                "basis": basis,
            })))
        }
    }
}

// ---------------------------------------------------------------------------
// flag equiv
// ---------------------------------------------------------------------------

/// `liebex flag equiv <first> <second>`.
pub fn flag_equiv(first: &str, second: &str, format: Format) -> Result<String, CliError> {
    let fd1 = load_flag_arg(first)?;
    let fd2 = load_flag_arg(second)?;
    for (which, fd) in [("first", &fd1), ("second", &fd2)] {
        let report = check_flag_datum(fd);
        if !report.is_valid() {
            let header = format!("the {which} flag datum is not valid\n");
            return match render_sections(&[("datum", report)], Format::Text) {
                Err(CliError::Domain(body)) => Err(CliError::Domain(header + &body)),
                _ => unreachable!("an invalid report renders as a domain error"),
            };
        }
    }
    let witness = flag_equivalent(&fd1, &fd2).map_err(|e| CliError::Shape(e.to_string()))?;
    let labels = fd1.base.space().basis.join(", ");
    match witness {
        Some((u, beta)) => match format {
            Format::Text => Ok(format!(
                "equivalent\nU = ({}) in basis ({labels})\nbeta = {}\n",
                fmt_scalars(&u),
                format_scalar(&beta)
            )),
            Format::Machine => Ok(pretty(&json!({
                "equivalent": true,
                "U": json_scalars(&u),
                "beta": format_scalar(&beta),
            }))),
        },
        None => {
            let reason = if fd1.alpha != fd2.alpha {
                ("alpha", "the alpha invariants differ".to_string())
            } else if fd1.a_vec != fd2.a_vec {
                ("A", "the A invariants differ".to_string())
            } else {
                (
                    "class",
                    "the invariants match but no witness exists; \
                     the data lie in different classes"
                        .to_string(),
                )
            };
            match format {
                Format::Text => Err(CliError::Domain(format!(
                    "not equivalent: {}\n",
                    reason.1
                ))),
                Format::Machine => Err(CliError::Domain(pretty(&json!({
                    "equivalent": false,
                    "reason": reason.0,
                })))),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// flag classify
// ---------------------------------------------------------------------------

fn parse_sample(token: &str, coclosed: &SolutionSpace, n: usize) -> Result<Vec<Scalar>, CliError> {
    let token = token.trim();
    if token == "0" {
        return Ok(vec![Scalar::zero(); n]);
    }
    if token.contains(':') {
        let coords: Vec<Scalar> = token
            .split(':')
            .map(|t| parse_coord(t.trim()))
            .collect::<Result<_, _>>()?;
        if coords.len() != n {
            return Err(CliError::Shape(format!(
                "sample `{token}` needs {n} `:`-joined coordinates, found {}",
                coords.len()
            )));
        }
        return Ok(coords);
    }
    let c = parse_coord(token)?;
    if coclosed.basis.len() != 1 {
        return Err(CliError::Shape(format!(
            "scalar samples need a one-dimensional coclosed space, but this base has \
             dimension {}; pass `:`-joined coordinates instead",
            coclosed.basis.len()
        )));
    }
    Ok(coclosed.basis[0].iter().map(|e| e * &c).collect())
}

fn certificate_json(c: &StructureCertificate) -> Value {
    json!({
        "dim": c.dim,
        "derived": c.derived_dim,
        "center": c.center_dim,
        "derivations": c.derivation_dim,
        "inner_derivations": c.inner_derivation_dim,
        "invariant_wedge": c.invariant_wedge_dim,
        "single_class_forced": c.forces_single_class(),
    })
}

fn cell_text(cell: &FlagCell, bi: &LieBialgebra, idx: usize) -> String {
    let n = bi.dim();
    let (d, b) =
        unpack_db(bi.space(), &cell.representative).expect("representatives have ambient length");
    let params = if cell.parameters.is_empty() {
        "none".to_string()
    } else {
        cell.parameters
            .iter()
            .map(|&p| ambient_label(n, p))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!(
        "  family {} at {}\n    representative: D = {}  B = {}\n    parameters: {params}\n",
        idx + 1,
        ambient_label(n, cell.pivot),
        fmt_matrix(&d),
        fmt_wedge(&b, n)
    )
}

fn cell_json(cell: &FlagCell, bi: &LieBialgebra) -> Value {
    let n = bi.dim();
    let (d, b) =
        unpack_db(bi.space(), &cell.representative).expect("representatives have ambient length");
    let directions: Vec<Value> = cell
        .parameter_basis
        .iter()
        .map(|vec| {
            let (pd, pb) =
                unpack_db(bi.space(), vec).expect("parameter directions have ambient length");
            json!({ "D": json_matrix(&pd), "B": json_wedge(&pb, n) })
        })
        .collect();
    json!({
        "pivot": ambient_label(n, cell.pivot),
        "representative": { "D": json_matrix(&d), "B": json_wedge(&b, n) },
        "parameters": cell.parameters.iter().map(|&p| ambient_label(n, p)).collect::<Vec<_>>(),
        "parameter_directions": directions,
    })
}

/// `liebex flag classify <base> [--samples …]`.
pub fn flag_classify(
    base_arg: &str,
    samples_arg: Option<&str>,
    format: Format,
) -> Result<String, CliError> {
    let bi = load_bialgebra_arg(base_arg)?;
    let n = bi.dim();
    let coclosed = a_space(&bi);

    let samples: Vec<Vec<Scalar>> = match samples_arg {
        None => vec![vec![Scalar::zero(); n]],
        Some(s) => s
            .split(',')
            .map(|token| parse_sample(token, &coclosed, n))
            .collect::<Result<_, _>>()?,
    };
    for (idx, v) in samples.iter().enumerate() {
        let member = coclosed
            .contains(v)
            .map_err(|e| CliError::Shape(e.to_string()))?;
        if !member {
            return Err(CliError::Domain(format!(
                "sample {} = ({}) is not coclosed, so no flag datum can use it\n",
                idx + 1,
                fmt_scalars(v)
            )));
        }
    }

    let cls =
        classify_codim_one(&bi, &samples).map_err(|e| CliError::Shape(e.to_string()))?;

    match format {
        Format::Text => {
            let mut out = format!("base: {} (dim {n})\n", bi.space().name);
            out.push_str(&format!(
                "coclosed space dimension: {}\n",
                cls.a_space.basis.len()
            ));
            for (i, v) in cls.a_space.basis.iter().enumerate() {
                out.push_str(&format!("  direction {}: ({})\n", i + 1, fmt_scalars(v)));
            }
            let c = &cls.certificate;
            out.push_str(&format!(
                "certificate: dim {}, derived {}, center {}, derivations {}, \
                 inner derivations {}, invariant wedge {}\n",
                c.dim,
                c.derived_dim,
                c.center_dim,
                c.derivation_dim,
                c.inner_derivation_dim,
                c.invariant_wedge_dim
            ));
            out.push_str(&format!(
                "single class forced: {}\n",
                if c.forces_single_class() { "yes" } else { "no" }
            ));
            for sample in &cls.samples {
                out.push_str(&format!("\nsample A = ({})\n", fmt_scalars(&sample.a_vec)));
                match &sample.outcome {
                    SampleOutcome::NoExtension {
                        a_coclosed,
                        alpha_consistent,
                    } => {
                        let mut reasons = Vec::new();
                        if !a_coclosed {
                            reasons.push("A is not coclosed");
                        }
                        if !alpha_consistent {
                            reasons.push("no compatible alpha exists");
                        }
                        out.push_str(&format!(
                            "  no extension exists: {}\n",
                            reasons.join("; ")
                        ));
                    }
                    SampleOutcome::Classified {
                        alpha,
                        alpha_freedom,
                        db_space,
                        action_dim,
                        cells,
                    } => {
                        out.push_str(&format!(
                            "  alpha = ({}) (freedom {alpha_freedom})\n",
                            fmt_scalars(alpha)
                        ));
                        out.push_str(&format!(
                            "  completion space dimension: {}\n",
                            db_space.dim().unwrap_or(0)
                        ));
                        out.push_str(&format!("  orbit dimension: {action_dim}\n"));
                        if cells.is_empty() {
                            out.push_str("  classes: only the zero datum\n");
                        } else {
                            out.push_str(&format!(
                                "  families beyond the zero class: {}\n",
                                cells.len()
                            ));
                            for (i, cell) in cells.iter().enumerate() {
                                out.push_str(&cell_text(cell, &bi, i));
                            }
                        }
                    }
                }
            }
            Ok(out)
        }
        Format::Machine => {
            let samples: Vec<Value> = cls
                .samples
                .iter()
                .map(|sample| match &sample.outcome {
                    SampleOutcome::NoExtension {
                        a_coclosed,
                        alpha_consistent,
                    } => json!({
                        "A": json_scalars(&sample.a_vec),
                        "outcome": "no-extension",
                        "a_coclosed": a_coclosed,
                        "alpha_consistent": alpha_consistent,
                    }),
                    SampleOutcome::Classified {
                        alpha,
                        alpha_freedom,
                        db_space,
                        action_dim,
                        cells,
                    } => json!({
                        "A": json_scalars(&sample.a_vec),
                        "outcome": "classified",
                        "alpha": json_scalars(alpha),
                        "alpha_freedom": alpha_freedom,
                        "completion_dimension": db_space.dim().unwrap_or(0),
                        "orbit_dimension": action_dim,
                        "families": cells.iter().map(|c| cell_json(c, &bi)).collect::<Vec<_>>(),
                    }),
                })
                .collect();
            Ok(pretty(&json!({
                "base": bi.space().name,
                "dim": n,
                "coclosed": {
                    "dimension": cls.a_space.basis.len(),
                    "basis": cls.a_space.basis.iter()
                        .map(|v| json_scalars(v)).collect::<Vec<_>>(),
                },
                "certificate": certificate_json(&cls.certificate),
                "samples": samples,
            })))
        }
    }
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

/// `liebex corpus list`.
pub fn corpus_list() -> String {
    let mut out = String::new();
    for entry in corpus::ENTRIES {
        out.push_str(&format!("{} ({})\n", entry.name, entry.kind.label()));
    }
    out
}

/// `liebex corpus show <name>`.
pub fn corpus_show(name: &str) -> Result<String, CliError> {
    match corpus::find(name) {
        Some(entry) => Ok(entry.text.to_string()),
        None => Err(CliError::Shape(format!(
            "no bundled example is named `{name}`"
        ))),
    }
}
