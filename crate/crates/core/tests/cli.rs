use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bredim(args: &[&str], stdin: &str) -> Run {
    bredim_env(args, stdin, &[])
}

fn bredim_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bredim"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    cmd.env_remove("BREDIM_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

const K3: &str = "3 3\n0 1\n1 2\n0 2\n";
const TWO_THREE: &str = "vertex a rank=2\nvertex b rank=3\nedge a b finite\nacylindrical = true\n";

#[test]
fn braid_gd() {
    let r = bredim(&["dims", "braid", "--n", "4", "--k", "1"], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.starts_with("gd = 4\n"));
    assert!(r.stdout.lines().any(|l| l.starts_with("cite: ")));
}

#[test]
fn raag_cd_of_triangle() {
    let r = bredim(&["raag", "cd", "-"], K3);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("cd = 3\n"));
}

#[test]
fn saturate_divides_by_gcd() {
    let r = bredim(&["lattice", "saturate", "-"], "2 1\n2 4\n");
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().nth(1), Some("1 2"));
}

#[test]
fn lattice_subcommands_from_files() {
    let dir = std::env::temp_dir().join(format!("bredim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let l = dir.join("l.txt");
    let z = dir.join("z.txt");
    std::fs::write(&l, "2 2\n2 0\n1 3\n").unwrap();
    std::fs::write(&z, "2 2\n1 0\n0 1\n").unwrap();
    let (l, z) = (l.to_str().unwrap(), z.to_str().unwrap());

    let r = bredim(&["lattice", "index", l, z], "");
    assert!(r.stdout.contains("index = 6"), "{}", r.stdout);
    let r = bredim(&["lattice", "snf", l], "");
    assert!(r.stdout.contains("invariant_factors = 1 6"), "{}", r.stdout);
    let r = bredim(&["lattice", "hnf", z], "");
    assert!(r.stdout.contains("rank = 2"));
    let r = bredim(&["lattice", "commensurable", l, z], "");
    assert!(r.stdout.contains("commensurable = true"));
    let r = bredim(&["lattice", "map-auto", "-"], "2 1\n1 0\n2 1\n0 1\n");
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("A:\n0 1\n1 0\n"), "{}", r.stdout);
    let r = bredim(&["lattice", "complement", "-"], "2 1\n1 2\n");
    assert_eq!(r.code, 0);
    // non-saturated input is a validation error
    let r = bredim(&["lattice", "complement", "-"], "2 1\n2 0\n");
    assert_eq!(r.code, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn missing_file_is_input_error() {
    let r = bredim(&["lattice", "hnf", "/nonexistent/bredim.txt"], "");
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error: "));
}

#[test]
fn raag_subcommands() {
    let r = bredim(&["raag", "cliques", "-"], K3);
    assert!(r.stdout.contains("counts = 1 3 3 1"), "{}", r.stdout);
    let r = bredim(&["raag", "gd", "--k", "2", "-"], K3);
    assert!(r.stdout.starts_with("gd = 5\n"));
    let r = bredim(&["raag", "salvetti", "--cohomology", "-"], K3);
    assert!(r.stdout.contains("H^2 = Z^3"));
    let dimacs = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
    let r = bredim(&["raag", "cd", "-"], dimacs);
    assert!(r.stdout.starts_with("cd = 3\n"), "{}", r.stderr);
}

#[test]
fn derivation_tree_in_both_formats() {
    let r = bredim(&["dims", "derive-zn", "--n", "3", "--k", "2", "--tree"], "");
    assert!(r.stdout.starts_with("gd <= 5\n"));
    assert!(r.stdout.contains("derivation:\n  [lw-pushout]"));
    assert!(r.stdout.contains("sound = true"));
    let r = bredim(
        &[
            "--format",
            "structured",
            "dims",
            "derive-zn",
            "--n",
            "3",
            "--k",
            "2",
            "--tree",
        ],
        "",
    );
    assert!(r.stdout.contains("\ngd.upper=5\n"));
    assert!(r.stdout.contains("\ntree.0.rule=lw-pushout\n"));
}

#[test]
fn other_dims_formulas() {
    assert!(bredim(&["dims", "vab", "--n", "3", "--k", "2"], "")
        .stdout
        .starts_with("gd = 5\n"));
    assert!(
        bredim(&["dims", "braid", "--n", "5", "--k", "2", "--pure"], "")
            .stdout
            .starts_with("gd = 6\n")
    );
    assert!(bredim(&["dims", "out-fn", "--n", "3", "--k", "1"], "")
        .stdout
        .starts_with("gd >= "));
    assert!(
        bredim(&["dims", "out-diamonds", "--d", "2", "--k", "1"], "")
            .stdout
            .starts_with("gd >= ")
    );
}

#[test]
fn graph_of_groups_subcommands() {
    let r = bredim(&["gog", "gd", "--k", "2", "-"], TWO_THREE);
    assert!(r.stdout.contains("gd = 5"), "{}", r.stdout);
    let r = bredim(&["gog", "bounds", "--k", "1", "-"], TWO_THREE);
    assert!(r.stdout.contains("gd = 4"));
    let r = bredim(&["gog", "census", "--k", "1", "-"], TWO_THREE);
    assert!(r.stdout.contains("well_formed = true"));
    // k = 0 only gets bounds, not an exact value
    let r = bredim(&["gog", "gd", "--k", "0", "-"], TWO_THREE);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("exact = false"));
}

#[test]
fn exit_codes() {
    assert_eq!(bredim(&["raag", "cd", "-"], "2 1\n0 0\n").code, 2);
    assert_eq!(
        bredim(
            &["gog", "gd", "--k", "1", "-"],
            "vertex a rank=2\nvertex b rank=2\nedge a b rank=4\n"
        )
        .code,
        2
    );
    assert_eq!(bredim(&["dims", "vab", "--n", "2", "--k", "2"], "").code, 3);
    assert_eq!(
        bredim(&["dims", "braid", "--n", "4", "--k", "3"], "").code,
        3
    );
    assert_eq!(bredim(&["frobnicate"], "").code, 64);
    assert_eq!(bredim(&["lattice"], "").code, 64);
    let help = bredim(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify"));
    assert!(!help.stdout.contains("inject"));
}

#[test]
fn structured_output_is_deterministic() {
    let args = [
        "--format",
        "structured",
        "raag",
        "salvetti",
        "--cohomology",
        "-",
    ];
    let a = bredim(&args, K3);
    let b = bredim(&args, K3);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("\ninputs=sha256:"));
    let c = bredim(&args, "3 2\n0 1\n1 2\n");
    assert_ne!(a.stdout.lines().nth(1), c.stdout.lines().nth(1));
}

#[test]
fn verify_passes_and_is_reproducible() {
    let a = bredim(&["verify", "lattice"], "");
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert!(a
        .stdout
        .contains("lattice.saturation-vs-box-oracle = pass instances="));
    assert_eq!(a.stdout, bredim(&["verify", "lattice"], "").stdout);
    let seeded = bredim_env(&["verify", "dims"], "", &[("BREDIM_SEED", "7")]);
    assert!(seeded.stdout.starts_with("seed = 7\n"));
    let flag = bredim_env(
        &["verify", "dims", "--seed", "9"],
        "",
        &[("BREDIM_SEED", "7")],
    );
    assert!(flag.stdout.starts_with("seed = 9\n"));
}

#[test]
fn verify_all_aggregates() {
    let r = bredim(&["verify", "all"], "");
    assert_eq!(r.code, 0, "{}", r.stdout);
    for suite in ["lattice.", "raag.", "homology.", "dims."] {
        assert!(r.stdout.contains(suite));
    }
    assert!(r.stdout.ends_with("result = pass\n"));
}

#[test]
fn injected_faults_fail_verify() {
    for (suite, fault) in [
        ("lattice", "saturation-identity"),
        ("lattice", "index-off-by-one"),
        ("raag", "clique-undercount"),
        ("homology", "drop-torsion"),
        ("dims", "vab-off-by-one"),
        ("lattice", "identity-automorphism"),
    ] {
        let r = bredim(&["verify", suite, "--inject-fault", fault], "");
        assert_eq!(r.code, 1, "{fault} was not caught:\n{}", r.stdout);
        assert!(r.stdout.contains("result = FAIL"));
    }
}
