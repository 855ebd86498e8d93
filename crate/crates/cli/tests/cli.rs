use std::process::{Command, Output};

fn tabula(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tabula"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn drank_catalan() {
    let o = tabula(&["drank", "--r", "1", "--nmax", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 2 5 14 42\n");
}

#[test]
fn drank_kv_records() {
    let o = tabula(&["drank", "--r", "2", "--nmax", "4", "--format", "kv"]);
    assert_eq!(
        stdout(&o),
        "r=2 n=1 rank=2\nr=2 n=2 rank=6\nr=2 n=3 rank=20\nr=2 n=4 rank=70\n"
    );
}

#[test]
fn trace_of_e1() {
    let o = tabula(&[
        "trace",
        "--n",
        "2",
        "--verlinde",
        "3",
        "1 * n=2 | 1-2:1 3-4:1",
    ]);
    assert!(o.status.success());
    assert!(
        stdout(&o).lines().any(|l| l == "tau: v^-1 + v^-3"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn identity_multiplication_is_byte_identical() {
    let x = "-v^2 + 3 * n=3 | 1-2:2 3-4:1 5-6:1\nv^-1 * n=3 | 1-6:1 2-5:0 3-4:2";
    let shown = stdout(&tabula(&[
        "mul",
        "--n",
        "3",
        "--verlinde",
        "3",
        "n=3 | 1-6:0 2-5:0 3-4:0",
        "n=3 | 1-2:0 3-4:0 5-6:0",
    ]));
    assert!(!shown.is_empty());
    let echo = stdout(&tabula(&[
        "star",
        "--n",
        "3",
        "--verlinde",
        "3",
        &stdout(&tabula(&["star", "--n", "3", "--verlinde", "3", x])),
    ]));
    let prod = stdout(&tabula(&[
        "mul",
        "--n",
        "3",
        "--verlinde",
        "3",
        "n=3 | 1-6:0 2-5:0 3-4:0",
        x,
    ]));
    assert_eq!(prod, echo);
    assert_eq!(
        prod,
        stdout(&tabula(&[
            "mul",
            "--n",
            "3",
            "--verlinde",
            "3",
            x,
            "n=3 | 1-6:0 2-5:0 3-4:0"
        ]))
    );
}

#[test]
fn element_from_file() {
    let dir = std::env::temp_dir().join(format!("tabula-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.txt");
    std::fs::write(&path, "1 * n=2 | 1-2:1 3-4:1\n").unwrap();
    let o = tabula(&[
        "omega",
        "--n",
        "2",
        "--verlinde",
        "3",
        path.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "1 * n=2 | 1-2:1 3-4:1\n");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(tabula(&["drank", "--r", "1"]).status.code(), Some(2));
    assert_eq!(
        tabula(&["tlbasis", "--type", "Q", "--rank", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tabula(&[
            "mul",
            "--n",
            "2",
            "--verlinde",
            "3",
            "n=2 | 1-3:0 2-4:0",
            "n=2 | 1-4:0 2-3:0"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        tabula(&["trace", "--n", "2", "--verlinde", "2", "n=2 | 1-2:2 3-4:0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_tabula"))
        .args(["basis", "--n", "3", "--verlinde", "2"])
        .env("TABULA_MAX_EXHAUSTIVE", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = tabula(&["basis", "--n", "3", "--verlinde", "2", "--format", "kv"]);
    assert!(stdout(&o).ends_with("count=40\n"));
}

#[test]
fn verlinde_round_trips_through_algebra_file() {
    let text = stdout(&tabula(&["verlinde", "4"]));
    let dir = std::env::temp_dir().join(format!("tabula-alg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("v4.txt");
    std::fs::write(&path, &text).unwrap();
    let a = stdout(&tabula(&[
        "dbasis",
        "--n",
        "2",
        "--algebra",
        path.to_str().unwrap(),
    ]));
    let b = stdout(&tabula(&["dbasis", "--n", "2", "--verlinde", "4"]));
    assert_eq!(a, b);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn group_commands_succeed() {
    let o = tabula(&["tlbasis", "--type", "B", "--rank", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rank: 24"));
    let o = tabula(&[
        "embed",
        "--type",
        "H",
        "--rank",
        "3",
        "--variant",
        "H",
        "--format",
        "kv",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o)
        .ends_with("wc=44 images=44 relations_ok=true homomorphism_ok=true bijection_ok=true\n"));
    let o = tabula(&["conjecture", "--type", "I2(5)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verdict: pass"));
    let o = tabula(&["axioms", "--n", "2", "--verlinde", "2", "--format", "kv"]);
    assert!(o.status.success());
}

#[test]
fn output_is_deterministic() {
    let args = ["embed", "--type", "B", "--rank", "3", "--variant", "B"];
    assert_eq!(tabula(&args).stdout, tabula(&args).stdout);
}
