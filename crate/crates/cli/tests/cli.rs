use std::process::{Command, Output};

use serde_json::Value;

fn apsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apsum"))
        .args(args)
        .env_remove("APSUM_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = apsum(&all);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn apery_table_format_lists_the_worked_example() {
    let o = apsum(&["apery", "--a", "11", "--d", "2", "--format", "table"]);
    assert!(o.status.success());
    let phis: Vec<u64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(phis, [0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75]);
}

#[test]
fn table_csv_is_a_bare_matrix() {
    let o = apsum(&["table", "--a", "11", "--d", "2", "--format", "csv"]);
    assert!(o.status.success());
    let rows: Vec<Vec<u64>> = stdout(&o)
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.len() == 11));
    assert_eq!(rows[0], [0, 24, 48, 39, 63, 87, 56, 80, 104, 95, 75]);
    assert_eq!(rows[1][0], 11);
}

#[test]
fn ideal_verify_passes() {
    let o = apsum(&["ideal", "verify", "--a", "23", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("dimension 23"));
    let v = json(&["ideal", "verify", "--a", "23", "--d", "1"]);
    assert_eq!(v["payload"]["dimension"], 23);
    assert_eq!(v["payload"]["pass"], true);
    assert_eq!(v["payload"]["minimal"], true);
}

#[test]
fn envelope_fields() {
    let v = json(&["frobenius", "--a", "17", "--d", "35"]);
    assert_eq!(v["command"], "frobenius");
    assert_eq!(v["seed"]["a"], 17);
    assert_eq!(v["seed"]["d"], 35);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["toolVersion"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["payload"]["frobenius"], 696);
}

#[test]
fn exit_codes() {
    // usage error
    assert_eq!(apsum(&["apery", "--a", "11"]).status.code(), Some(2));
    assert_eq!(apsum(&["nonsense"]).status.code(), Some(2));
    // domain errors
    let o = apsum(&["pf", "--a", "12", "--d", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["code"], "notCoprime");
    assert_eq!(
        apsum(&["ideal", "list", "--a", "9", "--d", "2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        apsum(&["order", "--a", "11", "--d", "2", "--s", "13"])
            .status
            .code(),
        Some(3)
    );
    // stable under repetition
    for _ in 0..2 {
        assert_eq!(
            apsum(&["cone", "--a", "11", "--d", "2"]).status.code(),
            Some(0)
        );
    }
}

#[test]
fn oracle_flags_agree_with_closed_forms() {
    let v = json(&["apery", "--a", "37", "--d", "4", "--oracle"]);
    assert_eq!(v["payload"]["closedFormAgrees"], true);
    let closed = json(&["pf", "--a", "37", "--d", "4"]);
    let oracle = json(&["pf", "--a", "37", "--d", "4", "--oracle"]);
    assert_eq!(closed["payload"]["pf"], oracle["payload"]["pf"]);
    assert_eq!(oracle["payload"]["sourcePath"], "oracle");
}

#[test]
fn table_and_json_carry_the_same_numbers() {
    let v = json(&["hilbert", "--a", "11", "--d", "2"]);
    assert_eq!(
        v["payload"]["coefficients"],
        serde_json::json!([1, 4, 4, 2])
    );
    let o = apsum(&["hilbert", "--a", "11", "--d", "2"]);
    assert_eq!(stdout(&o).trim(), "(1 + 4x + 4x^2 + 2x^3) / (1 - x)");

    let v = json(&["cone", "--a", "11", "--d", "2"]);
    let t: Vec<u64> =
        serde_json::from_value(v["payload"]["decomposition"]["tCounts"].clone()).unwrap();
    let csv = stdout(&apsum(&[
        "cone", "--a", "11", "--d", "2", "--format", "csv",
    ]));
    let from_csv: Vec<u64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(t, from_csv);
    assert_eq!(v["payload"]["properties"]["buchsbaum"], true);
}

#[test]
fn catalog_json_shape() {
    let v = json(&["ideal", "list", "--a", "11", "--d", "2"]);
    let gens = v["payload"].as_array().unwrap();
    assert_eq!(gens.len(), 8);
    assert_eq!(gens[7]["label"], "extra");
    assert_eq!(gens[7]["lhs"], serde_json::json!([0, 3, 2, 0, 0]));
    assert_eq!(gens[7]["rhs"], serde_json::json!([0, 0, 0, 0, 2]));
    let aug = json(&["ideal", "list", "--a", "21", "--d", "1", "--augmented"]);
    assert_eq!(aug["payload"].as_array().unwrap().len(), 12);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pf.json");
    let o = apsum(&[
        "pf",
        "--a",
        "11",
        "--d",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["payload"]["pf"], serde_json::json!([64, 76, 84, 93]));
}

#[test]
fn sweep_checkpoint_is_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.jsonl");
    let two = dir.path().join("two.jsonl");
    let run = |path: &std::path::Path, jobs: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_apsum"))
            .args([
                "sweep",
                "gamma6",
                "--a",
                "16..30",
                "--d",
                "1..4",
                "--checkpoint",
            ])
            .arg(path)
            .env("APSUM_JOBS", jobs)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        String::from_utf8(o.stdout).unwrap()
    };
    run(&one, "1");
    run(&two, "4");
    let a = std::fs::read(&one).unwrap();
    assert_eq!(a, std::fs::read(&two).unwrap());
    assert_eq!(a.iter().filter(|&&b| b == b'\n').count(), 15 * 4);

    // cut the file mid-record and resume
    std::fs::write(&two, &a[..a.len() / 2]).unwrap();
    let summary = run(&two, "2");
    assert!(summary.contains("resumed"), "{summary}");
    assert!(
        summary.contains("dropped corrupt checkpoint line"),
        "{summary}"
    );
    assert_eq!(std::fs::read(&two).unwrap(), a);
}

#[test]
fn sweep_unique_reports_counts() {
    let v = json(&[
        "sweep", "unique", "--m", "5", "--a", "11..20", "--d", "1..3", "--jobs", "2",
    ]);
    assert_eq!(v["payload"]["counts"]["violation"], 0);
    assert_eq!(v["payload"]["perSeed"].as_array().unwrap().len(), 30);
    assert!(v["seed"].is_null());
}
