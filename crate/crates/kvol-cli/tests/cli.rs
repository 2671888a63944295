//! End-to-end checks of the binary: exit codes, report formats, determinism,
//! and the scene-file surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn kvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kvol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

/// Writes the shared scene fixture to a per-process temp file.
fn scene_file() -> PathBuf {
    let path = std::env::temp_dir().join(format!("kvol-cli-test-{}.toml", std::process::id()));
    let text = r#"
version = 1

[tuples.slab]
vectors = [[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]
frame = "plane"

[tuples.doubled]
vectors = [[2.0, 0.0, 2.0], [0.0, 2.0, 2.0]]

[tuples.collapsed]
vectors = [[1.0, 2.0, 3.0], [2.0, 4.0, 6.0]]

[matrices.pair]
rows = [[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]

[matrices.stretch]
rows = [[2.0, 0.0], [0.0, 2.0]]

[subspaces.plane]
origin = [0.0, 0.0, 0.0]
spanning = [[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]

[subspaces.lifted]
origin = [0.0, 0.0, 5.0]
spanning = [[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]

[subspaces.xz]
origin = [0.0, 0.0, 0.0]
spanning = [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]

[regions.disk_a]
subspace = "plane"
shape = "disk"
params = [0.0, 0.0, 1.0]

[regions.square_b]
subspace = "plane"
shape = "box"
params = [0.0, 0.0, 1.0, 1.0]

[regions.square_lifted]
subspace = "lifted"
shape = "box"
params = [0.0, 0.0, 1.0, 1.0]

[regions.square_xz]
subspace = "xz"
shape = "box"
params = [0.0, 0.0, 1.0, 1.0]
"#;
    std::fs::write(&path, text).expect("temp scene written");
    path
}

#[test]
fn de_gua_unit_legs() {
    let output = kvol(&["check", "de-gua", "--legs", "1,1,1"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("7.5000000000000000e-1"), "stdout: {text}");
    assert!(text.ends_with("result: PASS\n"));
}

#[test]
fn random_campaign_machine_format_is_exactly_five_fields() {
    let output = kvol(&[
        "check",
        "pythagoras",
        "--random",
        "--trials",
        "1000",
        "--seed",
        "42",
        "--format",
        "machine",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5, "stdout: {text}");
    assert_eq!(lines[0], "kind=pythagoras");
    assert_eq!(lines[1], "seed=42");
    assert_eq!(lines[2], "trials=1000");
    assert!(lines[3].starts_with("max_residual="));
    assert_eq!(lines[4], "pass=true");
    let max_residual: f64 = lines[3]["max_residual=".len()..].parse().unwrap();
    assert!(max_residual <= 1e-8);
}

#[test]
fn identical_seed_means_byte_identical_report() {
    let args = [
        "check", "product", "--random", "--trials", "25", "--seed", "7",
    ];
    let first = kvol(&args);
    let second = kvol(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let different = kvol(&[
        "check", "product", "--random", "--trials", "25", "--seed", "8",
    ]);
    assert_ne!(first.stdout, different.stdout);
}

#[test]
fn env_var_supplies_the_default_seed() {
    let via_env = Command::new(env!("CARGO_BIN_EXE_kvol"))
        .args([
            "check", "scaling", "--random", "--trials", "5", "--format", "machine",
        ])
        .env("KVOL_SEED", "1234")
        .output()
        .unwrap();
    let via_flag = kvol(&[
        "check", "scaling", "--random", "--trials", "5", "--seed", "1234", "--format", "machine",
    ]);
    assert_eq!(via_env.stdout, via_flag.stdout);
}

#[test]
fn volume_prints_both_routes() {
    let scene = scene_file();
    let output = kvol(&[
        "volume",
        "--scene",
        scene.to_str().unwrap(),
        "--name",
        "slab",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(
        text.contains("volume_gram: 1.7320508075688772e0"),
        "stdout: {text}"
    );
    assert!(text.contains("volume_coordinate: 1.7320508075688772e0"));
}

#[test]
fn volume_of_dependent_tuple_is_zero() {
    let scene = scene_file();
    let output = kvol(&[
        "volume",
        "--scene",
        scene.to_str().unwrap(),
        "--name",
        "collapsed",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("volume_gram: 0.0000000000000000e0"));
}

#[test]
fn unknown_scene_entry_exits_2() {
    let scene = scene_file();
    let output = kvol(&[
        "volume",
        "--scene",
        scene.to_str().unwrap(),
        "--name",
        "missing",
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stdout(&output).is_empty(), "report must not reach stdout");
    assert!(stderr(&output).contains("missing"));
}

#[test]
fn malformed_scene_exits_2() {
    let path = std::env::temp_dir().join(format!("kvol-cli-bad-{}.toml", std::process::id()));
    std::fs::write(&path, "version = 1\n[tuples.x\n").unwrap();
    let output = kvol(&["volume", "--scene", path.to_str().unwrap(), "--name", "x"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("malformed scene file"));
}

#[test]
fn scene_checks_run_all_kinds() {
    let scene = scene_file();
    let scene = scene.to_str().unwrap();

    let bc = kvol(&[
        "check",
        "binet-cauchy",
        "--scene",
        scene,
        "--a",
        "pair",
        "--b",
        "pair",
    ]);
    assert_eq!(bc.status.code(), Some(0));
    assert!(stdout(&bc).contains("3.0000000000000000e0"));

    let product = kvol(&[
        "check", "product", "--scene", scene, "--a", "slab", "--b", "doubled",
    ]);
    assert_eq!(product.status.code(), Some(0));

    let pythagoras = kvol(&["check", "pythagoras", "--scene", scene, "--a", "slab"]);
    assert_eq!(pythagoras.status.code(), Some(0));

    let scaling = kvol(&[
        "check", "scaling", "--scene", scene, "--map", "stretch", "--a", "slab", "--u", "plane",
        "--w", "plane",
    ]);
    assert_eq!(scaling.status.code(), Some(0));
}

#[test]
fn failed_check_exits_1() {
    let output = kvol(&["check", "de-gua", "--legs", "1,1,1", "--tolerance", "1e-18"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("result: FAIL"));
}

#[test]
fn non_spanning_tuples_exit_1() {
    let scene = scene_file();
    let output = kvol(&[
        "check",
        "product",
        "--scene",
        scene.to_str().unwrap(),
        "--a",
        "slab",
        "--b",
        "pair_is_not_a_tuple",
    ]);
    assert_eq!(output.status.code(), Some(2), "unknown entry is usage");

    // A genuine hypothesis violation: tuples spanning different planes.
    let path = std::env::temp_dir().join(format!("kvol-cli-span-{}.toml", std::process::id()));
    std::fs::write(
        &path,
        r#"
version = 1
[tuples.a]
vectors = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]
[tuples.b]
vectors = [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]
"#,
    )
    .unwrap();
    let output = kvol(&[
        "check",
        "product",
        "--scene",
        path.to_str().unwrap(),
        "--a",
        "a",
        "--b",
        "b",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("span"));
}

#[test]
fn measure_sweep_passes_and_translated_plane_matches() {
    let scene = scene_file();
    let scene = scene.to_str().unwrap();
    let base = kvol(&[
        "measure",
        "--scene",
        scene,
        "--region-a",
        "disk_a",
        "--region-b",
        "square_b",
        "--resolution",
        "5",
        "--refine",
        "3",
    ]);
    assert_eq!(base.status.code(), Some(0), "stderr: {}", stderr(&base));
    let text = stdout(&base);
    assert!(text.contains("resolution 5:"));
    assert!(text.contains("resolution 7:"));
    assert!(text.contains("term {1,2}"));
    assert!(text.ends_with("result: PASS\n"));

    // Same sweep against the region in the lifted parallel plane: identical
    // numbers by translation invariance, so only the echoed command differs.
    let lifted = kvol(&[
        "measure",
        "--scene",
        scene,
        "--region-a",
        "disk_a",
        "--region-b",
        "square_lifted",
        "--resolution",
        "5",
        "--refine",
        "3",
    ]);
    assert_eq!(lifted.status.code(), Some(0));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("command:") && !l.starts_with("region B:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&text), strip(&stdout(&lifted)));
}

#[test]
fn measure_rejects_non_parallel_subspaces() {
    let scene = scene_file();
    let output = kvol(&[
        "measure",
        "--scene",
        scene.to_str().unwrap(),
        "--region-a",
        "disk_a",
        "--region-b",
        "square_xz",
        "--resolution",
        "4",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).is_empty());
    assert!(stderr(&output).contains("parallel or identical"));
}

#[test]
fn measure_machine_format() {
    let scene = scene_file();
    let output = kvol(&[
        "measure",
        "--scene",
        scene.to_str().unwrap(),
        "--region-a",
        "square_b",
        "--region-b",
        "square_b",
        "--resolution",
        "4",
        "--refine",
        "2",
        "--format",
        "machine",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "kind=measure");
    assert_eq!(lines[2], "trials=2");
    assert_eq!(lines[4], "pass=true");
}

#[test]
fn usage_errors_exit_2() {
    let no_source = kvol(&["check", "product"]);
    assert_eq!(no_source.status.code(), Some(2));

    let bad_kind = kvol(&["check", "frobnicate"]);
    assert_eq!(bad_kind.status.code(), Some(2));

    let bad_trials = kvol(&["check", "product", "--random", "--trials", "0"]);
    assert_eq!(bad_trials.status.code(), Some(2));
}
