use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weighted-minimal"))
}

fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const CYLINDRICAL: &str = r#"{
  "density": {"kind": "ez"},
  "surface": {"family": "cylindrical", "A": 1, "b": 0.6, "c": 0.8},
  "grid": [50, 50]
}"#;

const UNIT_DIRECTOR: &str = r#"{
  "density": {"kind": "ez"},
  "surface": {"family": "cylindrical", "A": 1, "b": 1, "c": 0}
}"#;

const HELICOID: &str = r#"{
  "density": {"kind": "ez"},
  "surface": {"family": "helicoid", "pitch": 1}
}"#;

fn run(args: &[&str]) -> i32 {
    let mut argv = vec!["weighted-minimal"];
    argv.extend_from_slice(args);
    weighted_minimal::cli::run(argv)
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write_config(dir.path(), "good.json", CYLINDRICAL);
    let bad = write_config(dir.path(), "bad.json", HELICOID);
    assert_eq!(run(&["verify", "--config", good.to_str().unwrap()]), 0);
    assert_eq!(run(&["verify", "--config", bad.to_str().unwrap()]), 1);

    let out = bin()
        .args(["verify", "--config"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max |Hphi| = 3.5355339"));
}

#[test]
fn config_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let unknown = write_config(
        dir.path(),
        "unknown.json",
        r#"{"density":{"kind":"ez"},"surface":{"family":"helicoid","pitch":1},"colour":"red"}"#,
    );
    let vertical = write_config(
        dir.path(),
        "vertical.json",
        r#"{"density":{"kind":"ez"},"surface":{"family":"cylindrical","A":1,"b":0,"c":1}}"#,
    );
    let missing = dir.path().join("missing.json");
    for cfg in [&unknown, &vertical, &missing] {
        assert_eq!(
            run(&["verify", "--config", cfg.to_str().unwrap()]),
            2,
            "{cfg:?}"
        );
    }
    assert_eq!(run(&["frobnicate"]), 2);
    assert_eq!(run(&["gauss", "--family", "sphere", "--bracket", "2,3"]), 2);
    assert_eq!(run(&["gauss", "--family", "sphere", "--bracket", "1"]), 2);
}

#[test]
fn help_on_every_subcommand() {
    for sub in ["generate", "verify", "ode", "sweep", "gauss"] {
        let out = bin().args([sub, "--help"]).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{sub}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("Usage"));
    }
}

#[test]
fn gauss_prints_radius() {
    let out = bin()
        .args(["gauss", "--family", "cylinder", "--bracket", "0.5,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1.000000000\n");
    let out = bin()
        .args(["gauss", "--family", "sphere", "--bracket", "0.5,2"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1.414213562\n");
}

#[test]
fn generate_is_byte_reproducible() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", UNIT_DIRECTOR);
    let (a, b) = (dir.path().join("a.obj"), dir.path().join("b.obj"));
    for out in [&a, &b] {
        let status = bin()
            .args(["generate", "--config"])
            .arg(&cfg)
            .arg("--obj")
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap());
    let text = String::from_utf8(text).unwrap();
    assert!(text.starts_with("# weighted-minimal "));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 2500);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2401);
}

#[test]
fn verify_csv_is_byte_reproducible() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", CYLINDRICAL);
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for out in [&a, &b] {
        assert_eq!(
            run(&[
                "verify",
                "--config",
                cfg.to_str().unwrap(),
                "--csv",
                out.to_str().unwrap()
            ]),
            0
        );
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("u,v,x,y,z,H,Hphi"));
    assert_eq!(lines.count(), 2500);
}

#[test]
fn ode_subcommand() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("ode.csv");
    let code = run(&[
        "ode",
        "--A",
        "0.25",
        "--b",
        "0.8",
        "--c",
        "-0.6",
        "--u-end",
        "-1",
        "--step",
        "1e-3",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("u,x,y,z,x_closed,y_closed,z_closed,delta_position"));
    assert_eq!(text.lines().count(), 1002);
    assert_eq!(run(&["ode", "--A", "1", "--b", "0.6", "--c", "0.6"]), 2);
}

#[test]
fn sweep_rows() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), "c.json", CYLINDRICAL);
    let csv = dir.path().join("sweep.csv");
    let code = run(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--param",
        "A",
        "--values",
        "0.25,1,4",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "A,max_abs_Hphi");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("0.25,"));
    assert_eq!(
        run(&[
            "sweep",
            "--config",
            cfg.to_str().unwrap(),
            "--param",
            "radius",
            "--values",
            "1"
        ]),
        2
    );
}
