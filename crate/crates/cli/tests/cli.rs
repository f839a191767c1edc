use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_debruijn-mis"))
        .args(args)
        .env_remove("BRUIJN_MIS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn count_table_ends_with_42() {
    let o = run(&["count", "--d-max", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().ends_with(" 42"));
}

#[test]
fn count_csv_and_diameter_two() {
    let o = run(&["count", "--d-max", "2", "--out", "csv"]);
    assert_eq!(
        stdout(&o),
        "d,k,b_dk,one_loop_orbits,two_loop_orbits,a_d\n1,0,1,1,0,1\n2,0,3,2,1,6\n"
    );
    assert_eq!(stdout(&run(&["count", "--D", "2", "--d", "5"])), "20\n");
    assert_eq!(
        run(&["count", "--D", "2", "--d", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn oracle_diameter_five() {
    assert_eq!(
        stdout(&run(&["oracle", "--d", "2", "--D", "5", "--count-only"])),
        "44\n"
    );
    assert_eq!(
        stdout(&run(&["oracle", "--d", "1", "--D", "5", "--count-only"])),
        "1\n"
    );
}

#[test]
fn witness_code_verification() {
    let dir = TempDir::new().unwrap();
    let code = write(&dir, "code.txt", "# d=2 kind=code\n100\n110\n");
    let set = write(&dir, "set.txt", "# d=2 kind=with-loops\n100\n110\n");
    let o = run(&["verify", &code]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("independent: no"));
    let o = run(&["verify", &set]);
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "invalid");
    let o = run(&["verify", &set, "--out", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["error"], "dependent");
}

#[test]
fn decompose_construct_round_trip() {
    let dir = TempDir::new().unwrap();
    // Any member of the population, stripped of its trace.
    let line = stdout(&run(&["enumerate", "--d", "4"]))
        .lines()
        .nth(250)
        .unwrap()
        .to_string();
    let mut doc: serde_json::Value = serde_json::from_str(&line).unwrap();
    doc.as_object_mut().unwrap().remove("trace");
    let set = write(&dir, "s.json", &doc.to_string());
    let trace = dir.path().join("t.json");
    let o = run(&["decompose", &set, "--out", trace.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let built = run(&["construct", trace.to_str().unwrap()]);
    assert!(built.status.success());
    assert_eq!(fs::read_to_string(&trace).unwrap(), stdout(&built));
    let o = run(&["verify", trace.to_str().unwrap()]);
    assert!(stdout(&o).contains("trace reproduces the set"));
}

#[test]
fn enumerate_output_is_stable_and_complete() {
    let a = run(&["enumerate", "--d", "3"]);
    let b = run(&["enumerate", "--d", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 42);
    assert_eq!(
        stdout(&run(&["enumerate", "--d", "4", "--orbits-only"]))
            .lines()
            .count(),
        22
    );
    assert_eq!(
        stdout(&run(&["enumerate", "--d", "3", "--loopless"]))
            .lines()
            .count(),
        42
    );
}

#[test]
fn bijection_both_ways() {
    let dir = TempDir::new().unwrap();
    let set = write(&dir, "s.txt", "# d=2\n000\n101\n111\n");
    let lmis = dir.path().join("l.json");
    let o = run(&[
        "bijection",
        &set,
        "--to",
        "loopless",
        "--out",
        lmis.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        fs::read_to_string(&lmis).unwrap(),
        "{\"d\":2,\"D\":3,\"kind\":\"loop-less\",\"words\":[[0,1,1],[1,0,0]]}\n"
    );
    let back = run(&["bijection", lmis.to_str().unwrap(), "--to", "mis"]);
    assert_eq!(
        stdout(&back),
        "{\"d\":2,\"D\":3,\"kind\":\"with-loops\",\"words\":[[0,0,0],[1,0,1],[1,1,1]]}\n"
    );
    assert_eq!(
        run(&["bijection", &set, "--to", "mis"]).status.code(),
        Some(2)
    );
}

#[test]
fn stabilizer_and_transport() {
    let dir = TempDir::new().unwrap();
    let first = write(&dir, "a.txt", "# d=2\n000\n010\n011\n");
    let second = write(&dir, "b.txt", "# d=2\n111\n101\n100\n");
    let third = write(&dir, "c.txt", "# d=2\n000\n010\n110\n");
    let o = run(&["stabilizer", &first]);
    assert_eq!(
        stdout(&o),
        "stabilizer: trivial group (order 1)\nfrom trace: trivial group (order 1)\n"
    );
    assert_eq!(
        stdout(&run(&["transport", &first, &second])),
        "{\"perm\":[1,0]}\n"
    );
    assert_eq!(run(&["transport", &first, &third]).status.code(), Some(1));
}

#[test]
fn comma_free_codes() {
    assert_eq!(
        stdout(&run(&["commafree", "--d", "2", "--classical"])),
        "{\"d\":2,\"D\":3,\"kind\":\"code\",\"words\":[[0,1,0],[0,1,1]],\"provenance\":\"classical\"}\n"
    );
    assert_eq!(
        stdout(&run(&["commafree", "--d", "3", "--all"]))
            .lines()
            .count(),
        42
    );
    assert!(stdout(&run(&["commafree", "--d", "3"])).contains("classes under relabelling: 10"));
}

#[test]
fn graph_export_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let set = write(&dir, "s.txt", "# d=2\n000\n010\n011\n");
    let a = run(&[
        "graph",
        "--d",
        "2",
        "--keep-self-loops",
        "--highlight",
        &set,
        "--bold-theta",
    ]);
    let b = run(&[
        "graph",
        "--d",
        "2",
        "--keep-self-loops",
        "--highlight",
        &set,
        "--bold-theta",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let dot = stdout(&a);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("fillcolor").count(), 3);
    let edges = stdout(&run(&[
        "graph",
        "--d",
        "2",
        "--keep-self-loops",
        "--out",
        "edgelist",
    ]));
    assert_eq!(edges.lines().filter(|l| !l.is_empty()).count(), 16);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(&["count", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/file"]).status.code(), Some(2));
    let bad = write(&dir, "bad.txt", "0x0\n");
    assert_eq!(run(&["verify", &bad]).status.code(), Some(1));
    let o = run(&["enumerate", "--d", "7"]);
    assert_eq!(o.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "budget-exceeded");
    let o = Command::new(env!("CARGO_BIN_EXE_debruijn-mis"))
        .args(["oracle", "--d", "3", "--count-only"])
        .env("BRUIJN_MIS_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn selftest_quick_passes() {
    let o = run(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);
    assert!(Path::new(env!("CARGO_BIN_EXE_debruijn-mis")).exists());
}
