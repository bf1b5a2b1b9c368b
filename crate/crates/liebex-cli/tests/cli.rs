//! End-to-end tests of the `liebex` binary: exit codes, report formats,
//! file round trips, and byte determinism of generated output.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_liebex")
}

/// Run the binary; return `(exit code, stdout, stderr)`.
fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(bin())
        .args(args)
        .output()
        .expect("the binary runs");
    (
        output.status.code().expect("no signal"),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

fn write_file(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("temp files are writable");
    path
}

const BICROSSED_DEMO: &str = r#"{
  "name": "bicrossed-demo",
  "base": "heisenberg",
  "v_basis": ["t"],
  "ract": { "1,1": [{ "k": 3, "c": "1" }] },
  "delta_e": { "1": [{ "j": 3, "k": 1, "c": "1" }] }
}"#;

const CROSSED_DEMO: &str = r#"{
  "name": "crossed-demo",
  "base": "heisenberg",
  "v_basis": ["t"],
  "delta_e": { "1": [{ "j": 3, "k": 1, "c": "1" }] },
  "delta_v": { "1": [
    { "j": 1, "k": 3, "c": "-1" },
    { "j": 2, "k": 3, "c": "1" },
    { "j": 3, "k": 1, "c": "1" },
    { "j": 3, "k": 2, "c": "-1" }
  ] }
}"#;

#[test]
fn every_bundled_example_checks_clean() {
    let (code, stdout, _) = run(&["corpus", "list"]);
    assert_eq!(code, 0);
    for line in stdout.lines() {
        let (name, kind) = line.split_once(' ').expect("listing format");
        let kind = match kind {
            "(bialgebra)" => "bialgebra",
            "(flag)" => "flag",
            other => panic!("unexpected corpus kind {other}"),
        };
        let (code, stdout, stderr) = run(&["check", name, kind]);
        assert_eq!(code, 0, "{name}: {stdout}{stderr}");
        assert_eq!(stdout, "ok\n");
    }
}

#[test]
fn the_reference_solve_has_dimension_five() {
    let (code, stdout, _) = run(&["flag", "solve", "heisenberg", "--A", "0", "--alpha", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("completion space dimension: 5"), "{stdout}");
    assert!(stdout.contains("admissible: yes"), "{stdout}");

    let (code, stdout, _) = run(&[
        "flag", "solve", "heisenberg", "--A", "0", "--alpha", "0", "--format", "machine",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("machine output is JSON");
    assert_eq!(doc["dimension"], 5);
    assert_eq!(doc["admissible"], true);
    assert_eq!(doc["basis"].as_array().expect("basis array").len(), 5);
}

#[test]
fn lower_triangular_bracket_keys_are_shape_errors() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_file(
        dir.path(),
        "bad.json",
        r#"{"name":"bad","basis":["a","b"],"bracket":{"2,1":[{"k":1,"c":"1"}]}}"#,
    );
    let (code, _, stderr) = run(&["check", path.to_str().expect("utf-8 path"), "bialgebra"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("upper-triangular"), "{stderr}");
}

#[test]
fn invalid_structures_exit_one_and_name_the_law() {
    let dir = tempfile::tempdir().expect("tempdir");
    // [e1,e2] = e3, [e1,e3] = e1 violates the Jacobi identity.
    let algebra = write_file(
        dir.path(),
        "nonjacobi.json",
        r#"{"name":"nonjacobi","basis":["e1","e2","e3"],
            "bracket":{"1,2":[{"k":3,"c":"1"}],"1,3":[{"k":1,"c":"1"}]}}"#,
    );
    let (code, stdout, _) = run(&["check", algebra.to_str().expect("utf-8"), "algebra"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("invalid:"), "{stdout}");
    assert!(stdout.contains("jacobi"), "{stdout}");

    // A flag datum whose vector is not coclosed.
    let flag = write_file(
        dir.path(),
        "badflag.json",
        r#"{"name":"badflag","base":"heisenberg","A":["1","0","0"]}"#,
    );
    let (code, stdout, _) = run(&["check", flag.to_str().expect("utf-8"), "flag"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("coclosed"), "{stdout}");
}

#[test]
fn extraction_and_reassembly_round_trip_through_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let datum = dir.path().join("datum.json");
    let rebuilt = dir.path().join("rebuilt.json");

    let (code, stdout, _) = run(&[
        "extract",
        "heisenberg",
        "--sub",
        "3",
        "--out",
        datum.to_str().expect("utf-8"),
    ]);
    assert_eq!(code, 0, "{stdout}");

    let (code, _, _) = run(&[
        "build",
        "biproduct",
        datum.to_str().expect("utf-8"),
        "--out",
        rebuilt.to_str().expect("utf-8"),
    ]);
    assert_eq!(code, 0);
    let (code, stdout, _) = run(&["check", rebuilt.to_str().expect("utf-8"), "bialgebra"]);
    assert_eq!(code, 0, "{stdout}");

    // Extracting the same sub from the rebuilt bialgebra (where `h` now sits
    // first) recovers the identical structure tables.
    let (code, second, _) = run(&["extract", rebuilt.to_str().expect("utf-8"), "--sub", "1"]);
    assert_eq!(code, 0);
    let first: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&datum).expect("read")).expect("JSON");
    let second: serde_json::Value = serde_json::from_str(&second).expect("JSON");
    for table in ["lact", "ract", "f", "vbracket", "delta_e", "delta_v", "cobracket_v"] {
        assert_eq!(first.get(table), second.get(table), "table {table}");
    }
    assert_eq!(first["v_basis"], second["v_basis"]);
}

#[test]
fn rejected_subs_name_the_obstruction() {
    let (code, stdout, _) = run(&["extract", "heisenberg", "--sub", "1"]);
    assert_eq!(code, 1);
    assert!(
        stdout.contains("cobracket of x has a component in y ⊗ h"),
        "{stdout}"
    );

    let (code, _, stderr) = run(&["extract", "heisenberg", "--sub", "1,2,3"]);
    assert_eq!(code, 2, "improper subsets are shape errors");
    assert!(stderr.contains("proper"), "{stderr}");
}

#[test]
fn generated_output_is_byte_deterministic() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = write_file(dir.path(), "bicrossed.json", BICROSSED_DEMO);
    let args = ["build", "biproduct", path.to_str().expect("utf-8")];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);

    let classify = [
        "flag", "classify", "heisenberg", "--samples", "0,1", "--format", "machine",
    ];
    let (code, first, _) = run(&classify);
    assert_eq!(code, 0);
    let (_, second, _) = run(&classify);
    assert_eq!(first, second);
}

#[test]
fn special_builders_match_the_general_assembly_and_guard_their_slots() {
    let dir = tempfile::tempdir().expect("tempdir");
    let bicrossed = write_file(dir.path(), "bicrossed.json", BICROSSED_DEMO);
    let crossed = write_file(dir.path(), "crossed.json", CROSSED_DEMO);

    for (path, verb) in [(&bicrossed, "bicrossed"), (&crossed, "crossed")] {
        let path = path.to_str().expect("utf-8");
        let (code, special, _) = run(&["build", verb, path]);
        assert_eq!(code, 0, "{verb}");
        let (code, general, _) = run(&["build", "biproduct", path]);
        assert_eq!(code, 0);
        assert_eq!(special, general, "{verb} sum equals the bi-product");

        let out: serde_json::Value = serde_json::from_str(&special).expect("JSON");
        let checked = write_file(dir.path(), "out.json", &special);
        let (code, _, _) = run(&["check", checked.to_str().expect("utf-8"), "bialgebra"]);
        assert_eq!(code, 0, "{verb} output is a valid bialgebra: {out}");
    }

    // `delta_e` is not part of a double cross datum.
    let (code, _, stderr) = run(&[
        "build",
        "doublecross",
        bicrossed.to_str().expect("utf-8"),
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("delta_e"), "{stderr}");

    // A crossed datum may not act on the complement.
    let with_lact = write_file(
        dir.path(),
        "withlact.json",
        r#"{"name":"w","base":"heisenberg","v_basis":["t"],
            "lact":{"1,3":[{"k":1,"c":"1"}]}}"#,
    );
    let (code, _, stderr) = run(&["build", "crossed", with_lact.to_str().expect("utf-8")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("lact"), "{stderr}");
}

#[test]
fn datum_checks_cover_both_sides() {
    let dir = tempfile::tempdir().expect("tempdir");
    let good = write_file(dir.path(), "good.json", BICROSSED_DEMO);
    for kind in ["alg-datum", "coalg-datum", "bi-datum"] {
        let (code, stdout, stderr) = run(&["check", good.to_str().expect("utf-8"), kind]);
        assert_eq!(code, 0, "{kind}: {stdout}{stderr}");
    }

    // f(t,t) = h is not antisymmetric, so the bracket side must fail.
    let bad = write_file(
        dir.path(),
        "bad.json",
        r#"{"name":"bad","base":"heisenberg","v_basis":["t"],
            "f":{"1,1":[{"k":3,"c":"1"}]}}"#,
    );
    let (code, stdout, _) = run(&["check", bad.to_str().expect("utf-8"), "alg-datum"]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("invalid:"), "{stdout}");
}

#[test]
fn solve_reports_inadmissible_scalar_layers() {
    // alpha = x* fails the coupling condition at A = h.
    let (code, stdout, _) = run(&[
        "flag", "solve", "heisenberg", "--A", "0,0,1", "--alpha", "1,0,0",
    ]);
    assert_eq!(code, 0, "solve answers the linear question regardless");
    assert!(stdout.contains("admissible: no"), "{stdout}");
    assert!(stdout.contains("coupling"), "{stdout}");
}

#[test]
fn equivalence_verdicts_and_witnesses_come_back_through_files() {
    // The two bundled representatives carry different invariants.
    let (code, stdout, _) = run(&["flag", "equiv", "heisenberg-flag-a", "heisenberg-flag-b"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("A invariants differ"), "{stdout}");

    // A transformed copy of a representative is recognized with a witness.
    let dir = tempfile::tempdir().expect("tempdir");
    let moved = {
        let entry = liebex_cli::corpus::find("heisenberg-flag-b").expect("bundled");
        let file: liebex_cli::files::FlagFile =
            serde_json::from_str(entry.text).expect("bundled flag parses");
        let fd = liebex_cli::files::flag_from_file(&file).expect("bundled flag is well-formed");
        let u = [
            liebex::exactnum::int(1),
            liebex::exactnum::int(2),
            liebex::exactnum::rat(-1, 2),
        ];
        let beta = liebex::exactnum::rat(3, 1);
        let moved = liebex::flag::flag_transform(&fd, &u, &beta).expect("transform applies");
        liebex_cli::files::flag_to_file("moved", &moved).expect("serializable")
    };
    let path = write_file(
        dir.path(),
        "moved.json",
        &serde_json::to_string_pretty(&moved).expect("JSON"),
    );
    let (code, stdout, stderr) = run(&[
        "flag",
        "equiv",
        "heisenberg-flag-b",
        path.to_str().expect("utf-8"),
    ]);
    assert_eq!(code, 0, "{stdout}{stderr}");
    assert!(stdout.starts_with("equivalent"), "{stdout}");
    assert!(stdout.contains("beta"), "{stdout}");
}

#[test]
fn corpus_show_prints_files_verbatim() {
    let (code, stdout, _) = run(&["corpus", "show", "heisenberg"]);
    assert_eq!(code, 0);
    let on_disk = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/heisenberg.json"),
    )
    .expect("corpus file exists");
    assert_eq!(stdout, on_disk);

    let (code, _, stderr) = run(&["corpus", "show", "nosuch"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("nosuch"), "{stderr}");
}

#[test]
fn unknown_inputs_are_shape_errors() {
    let (code, _, stderr) = run(&["check", "nosuch-input", "bialgebra"]);
    assert_eq!(code, 2);
    assert!(
        stderr.contains("neither a readable file nor a bundled example"),
        "{stderr}"
    );

    let (code, _, stderr) = run(&["flag", "classify", "heisenberg", "--samples", "1,oops"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bad scalar"), "{stderr}");
}

#[test]
fn classification_samples_accept_scalars_and_full_vectors() {
    // `1` and `0:0:1` name the same coclosed vector over the Heisenberg base.
    let (code, scalar_form, _) = run(&["flag", "classify", "heisenberg", "--samples", "1"]);
    assert_eq!(code, 0);
    let (code, vector_form, _) = run(&["flag", "classify", "heisenberg", "--samples", "0:0:1"]);
    assert_eq!(code, 0);
    assert_eq!(scalar_form, vector_form);
    assert!(scalar_form.contains("sample A = (0, 0, 1)"), "{scalar_form}");

    // Scalar samples require a one-dimensional coclosed space.
    let (code, _, stderr) = run(&["flag", "classify", "sl2-trivial", "--samples", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("one-dimensional"), "{stderr}");
}
