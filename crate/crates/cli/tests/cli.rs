use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbontangle"))
        .args(args)
        .output()
        .unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn data_files_pass() {
    for (target, file) in [
        ("hopf", "z2.json"),
        ("hopf", "z3.json"),
        ("hopf", "s3.json"),
        ("yd", "s3_transpositions_yd.json"),
        ("yd", "s3_adjoint_yd.json"),
        ("ribbon", "jones_ribbon.json"),
        ("ribbon", "s3_transpositions_ribbon.json"),
    ] {
        let o = run(&["check", target, &data(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn broken_algebra_names_a_witness() {
    let o = run(&["check", "hopf", &data("broken.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("associativity: FAIL at basis (g1,g2,g3)"));
}

#[test]
fn documented_examples() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["eval", "--datum", "jones", "--tangle", "cup_l ; cap_r"],
            "v^-1 + v\n",
        ),
        (
            &[
                "eval",
                "--datum",
                "jones",
                "--braid",
                "1 1 1",
                "--normalize",
            ],
            "-v^-9 + v^-5 + v^-3 + v^-1\n",
        ),
        (
            &["eval", "--datum", "s3-transpositions", "--braid", "1 1 1"],
            "9\n",
        ),
        (
            &[
                "oracle",
                "count-homs",
                "--group",
                "s3",
                "--class",
                "transpositions",
                "--braid",
                "1 1 1",
            ],
            "9\n",
        ),
        (
            &[
                "oracle",
                "count-homs",
                "--group",
                "s3",
                "--class",
                "transpositions",
                "--braid",
                "",
            ],
            "3\n",
        ),
        (
            &["oracle", "kauffman", "--braid", "1 1 1"],
            "-v^-9 + v^-5 + v^-3 + v^-1\n",
        ),
    ];
    for (args, expected) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn datum_files_match_builtins() {
    let a = run(&[
        "eval",
        "--datum",
        &data("jones_ribbon.json"),
        "--braid",
        "1 -2 1 -2",
        "--normalize",
    ]);
    let b = run(&[
        "eval",
        "--datum",
        "jones",
        "--braid",
        "1 -2 1 -2",
        "--normalize",
    ]);
    assert_eq!(stdout(&a), "v^-5 + v^5\n");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn open_tangle_prints_a_matrix() {
    let o = run(&["eval", "--datum", "s3-transpositions", "--tangle", "x++"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = run(&["eval", "--datum", "jones", "--tangle", "x++", "--normalize"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["check", "hopf", "/nonexistent/file.json"][..],
        &["eval", "--datum", "jones", "--tangle", "id+ ; cap_l"],
        &["eval", "--datum", "jones", "--tangle", "x+*"],
        &["eval", "--datum", "jones", "--braid", "1 x"],
        &["eval", "--datum", "no-such-thing", "--braid", "1"],
        &["eval", "--datum", "jones"],
        &["check", "hopf", "--builtin", "jones"],
        &[
            "oracle",
            "count-homs",
            "--group",
            "s3",
            "--class",
            "odd",
            "--braid",
            "1",
        ],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn uncertified_datum_exits_1_unless_unsafe() {
    let text = std::fs::read_to_string(data("s3_transpositions_ribbon.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    // drop one entry of the braiding
    doc["braid"].as_array_mut().unwrap().pop();
    let path = std::env::temp_dir().join(format!("ribbontangle-bad-{}.json", std::process::id()));
    std::fs::write(&path, doc.to_string()).unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["eval", "--datum", p, "--braid", "1 1 1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = run(&["check", "ribbon", p]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["eval", "--datum", p, "--braid", "1 1 1", "--unsafe"]);
    assert_eq!(o.status.code(), Some(0));
    let _ = std::fs::remove_file(path);
}

#[test]
fn batch_keeps_input_order() {
    let path = std::env::temp_dir().join(format!("ribbontangle-words-{}.txt", std::process::id()));
    std::fs::write(&path, "# knots\n1 1 1\n\n1 -2 1 -2\n1 1\n").unwrap();
    let o = run(&[
        "eval",
        "--datum",
        "s3-transpositions",
        "--batch",
        path.to_str().unwrap(),
        "--jobs",
        "3",
    ]);
    assert_eq!(stdout(&o), "1 1 1\t9\n1 -2 1 -2\t3\n1 1\t3\n");
    let _ = std::fs::remove_file(path);
}
