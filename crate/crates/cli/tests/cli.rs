use std::process::{Command, Output};

use fellow_core::SCurve;

fn fellow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fellow"))
        .args(args)
        .env_remove("FELLOW_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fellow(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn ball_census() {
    assert_eq!(stdout(&["ball", "--group", "z2", "--radius", "2"]), "13\n");
    assert_eq!(
        stdout(&["ball", "-g", "z", "-r", "3", "--spheres"]),
        "r,count\n0,1\n1,2\n2,2\n3,2\n"
    );
    assert_eq!(stdout(&["ball", "-g", "lamp", "-r", "1"]), "6\n");
}

#[test]
fn normal_forms() {
    assert_eq!(
        stdout(&["nf", "--group", "bs", "--p", "1", "--q", "2", "--word", "taT"]),
        "aa\n"
    );
    assert_eq!(stdout(&["bs", "nf", "taT", "--p", "1", "--q", "2"]), "aa\n");
    assert_eq!(stdout(&["bs", "mul", "aa", "t"]), "ta\n");
    assert_eq!(stdout(&["nf", "-g", "z2", "--word", "bAbaa"]), "abb\n");
    assert_eq!(
        stdout(&[
            "nf",
            "-g",
            "z2",
            "--word",
            "ab",
            "--transform",
            "first-way",
            "--loop",
            "aA"
        ]),
        "aAaAaAaAab\n"
    );
    assert_eq!(
        stdout(&["lamp", "nf", "--lamps", "1,0", "--pos", "0,0"]),
        "acA\n"
    );
    assert_eq!(stdout(&["lamp", "nf"]), "\n");
    assert_eq!(stdout(&["lamp", "spiral", "1"]), "1,0\n");
    assert_eq!(stdout(&["lamp", "spiral", "0"]), "0,0\n");
}

#[test]
fn check_exit_codes() {
    let pass = fellow(&[
        "check",
        "--group",
        "lamp",
        "--mode",
        "prefix-closed",
        "--radius",
        "5",
    ]);
    assert_eq!(pass.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&pass.stdout), "PASS\n");

    let fail = fellow(&[
        "check",
        "-g",
        "z2",
        "-m",
        "quasigeodesic",
        "--constant",
        "0.5",
        "-r",
        "2",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert_eq!(
        String::from_utf8_lossy(&fail.stdout),
        "VIOLATION n=2 word=aa\n"
    );

    let first = fellow(&[
        "check",
        "-g",
        "z2",
        "-m",
        "quasiregular:2",
        "-r",
        "3",
        "--transform",
        "first-way",
        "--loop",
        "abAB",
    ]);
    assert_eq!(first.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["ball", "-g", "q", "-r", "1"][..],
        &["nf", "-g", "z2", "--word", "abx"],
        &["check", "-g", "z", "-m", "sideways", "-r", "1"],
        &["transform", "second-way", "-g", "z2"],
        &["transform", "first-way", "-g", "z2", "--loop", "ab"],
        &["bs", "nf", "a", "--p", "2", "--q", "2"],
        &["bs", "mul", "tT", "a"],
        &["lamp", "nf", "--pos", "1"],
    ] {
        assert_eq!(fellow(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_fellow"))
        .args(["ball", "-g", "z2", "-r", "5"])
        .env("FELLOW_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget of 10"));
    let flag = Command::new(env!("CARGO_BIN_EXE_fellow"))
        .args(["ball", "-g", "z2", "-r", "5", "--budget", "1000"])
        .env("FELLOW_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&flag.stdout), "61\n");
}

#[test]
fn scurve_is_deterministic_and_round_trips() {
    let args = ["scurve", "-g", "bs", "--p", "2", "--q", "3", "-r", "4"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let curve = SCurve::from_csv(&first).unwrap();
    assert_eq!(curve.group, "BS(2,3)");
    assert_eq!(curve.radius, 4);
    assert_eq!(curve.generators, vec!["a", "t"]);
    assert_eq!(curve.to_csv(), first);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.csv");
    let out = fellow(&[
        "scurve",
        "-g",
        "z2",
        "-r",
        "3",
        "--output",
        path.to_str().unwrap(),
        "--fit",
        "const",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("fit const: C = 1.000000"));
    let written = SCurve::from_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written.values, vec![0, 2, 2, 2, 2]);
}

#[test]
fn transform_census_lists_every_element() {
    let text = stdout(&["transform", "qpc-closure", "-g", "z", "--c", "1", "-r", "3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# provider=Z+qpc(1)"));
    assert_eq!(lines.next(), Some("element,normal_form"));
    assert_eq!(lines.count(), 7);
    let second = stdout(&[
        "transform",
        "second-way",
        "-g",
        "z2",
        "--loop",
        "bB",
        "-r",
        "1",
    ]);
    assert!(second.contains("\"1,0\",abB\n"), "{second}");
}

#[test]
fn families() {
    assert_eq!(
        stdout(&["family", "bs", "--m", "1"]),
        "w=aaaa\nw_t=taa\nn=2\nd=1\n"
    );
    let lamp = stdout(&["family", "lamp", "--m", "2"]);
    assert!(lamp.ends_with("claimed=6\nd=6\n"), "{lamp}");
}
