use std::fs;
use std::process::{Command, Output};

fn rydberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rydberg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<csv::StringRecord> {
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    r.records().map(|r| r.unwrap()).collect()
}

fn value_of(o: &Output) -> f64 {
    csv_rows(&stdout(o))[0][8].parse().unwrap()
}

fn spec_file(dir: &tempfile::TempDir, text: &str) -> String {
    let path = dir.path().join("grid.spec");
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn ground_state_shannon() {
    let o = rydberg(&["entropy", "--n", "1", "--kind", "shannon"]);
    assert!(o.status.success());
    let want = 3.0 + std::f64::consts::PI.ln();
    assert!((value_of(&o) - want).abs() < 1e-10);
}

#[test]
fn invalid_state_exits_with_two() {
    let o = rydberg(&["entropy", "--n", "2", "--l", "2", "--p", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("l ≤ n−1"));
    assert_eq!(rydberg(&["entropy", "--n", "3", "--p", "-1"]).status.code(), Some(2));
    assert_eq!(rydberg(&["entropy", "--n", "3"]).status.code(), Some(2));
    assert_eq!(rydberg(&["figure", "q"]).status.code(), Some(2));
    assert_eq!(rydberg(&["constants", "--cosine", "2", "0"]).status.code(), Some(2));
}

#[test]
fn missed_tolerance_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let spec = spec_file(&dir, "n = 30\np = 0.75\nrel_tol = 1e-14\nabs_tol = 1e-300\nmax_depth = 1\n");
    let o = rydberg(&["sweep", &spec]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("did not reach"));
}

#[test]
fn both_methods_and_regimes() {
    let o = rydberg(&["entropy", "--n", "50", "--p", "2", "--method", "both", "--format", "json-lines"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["method"], "exact");
    assert_eq!(lines[1]["method"], "asympt");
    assert_eq!(lines[1]["regime"], "cosine-bessel");
    let (e, a) = (lines[0]["value"].as_f64().unwrap(), lines[1]["value"].as_f64().unwrap());
    assert!((e - a).abs() < 1.0);
}

#[test]
fn csv_and_json_agree() {
    let args = ["entropy", "--n", "7", "--l", "3", "--m", "-2", "--Z", "3", "--p", "0.5", "--p", "2.5"];
    let csv_out = rydberg(&args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "jsonl"]);
    let json_out = rydberg(&json_args);
    let rows = csv_rows(&stdout(&csv_out));
    let objs: Vec<serde_json::Value> = stdout(&json_out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    for (row, obj) in rows.iter().zip(&objs) {
        let v: f64 = row[8].parse().unwrap();
        assert_eq!(v.to_bits(), obj["value"].as_f64().unwrap().to_bits());
        assert_eq!(&row[2], obj["m"].to_string().as_str());
    }
}

#[test]
fn tighter_tolerance_does_not_move_the_answer_much() {
    let loose = value_of(&rydberg(&["entropy", "--n", "40", "--p", "0.75", "--rel-tol", "1e-4"]));
    let tight = value_of(&rydberg(&["entropy", "--n", "40", "--p", "0.75", "--rel-tol", "1e-12"]));
    assert!((loose - tight).abs() < 1e-3 * tight.abs());
}

#[test]
fn sweeps_from_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = rydberg(&["sweep", &spec_file(&dir, "n = 1..3\nkind = shannon\n")]);
    assert!(o.status.success());
    assert_eq!(csv_rows(&stdout(&o)).len(), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("config-sha256"));

    let o = rydberg(&["sweep", &spec_file(&dir, "n = 2, 3\np = 1\n")]);
    let rows = csv_rows(&stdout(&o));
    assert!(rows.iter().all(|r| &r[5] == "shannon" && r[10].contains("Shannon")));

    let text = "n = 20, 50, 100, 200\np = 0.75\nmethod = both\nrel_tol = 1e-8\n";
    let spec = spec_file(&dir, text);
    let seq = rydberg(&["sweep", &spec, "--jobs", "1"]);
    let par = rydberg(&["sweep", &spec, "--jobs", "3"]);
    assert_eq!(csv_rows(&stdout(&seq)).len(), 8);
    assert_eq!(seq.stdout, par.stdout);
    assert_eq!(rydberg(&["sweep", &spec, "--jobs", "0"]).status.code(), Some(2));

    let o = rydberg(&["sweep", &spec_file(&dir, "n = 1\np = 2\nbogus = 1\n")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn constants() {
    let o = rydberg(&["constants", "--cosine", "1", "1"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(&rows[0][0], "cosine");
    assert!((rows[0][4].parse::<f64>().unwrap() - 1.0).abs() < 1e-13);

    let o = rydberg(&["constants", "--bessel", "1", "3", "-1"]);
    let v: f64 = csv_rows(&stdout(&o))[0][4].parse().unwrap();
    assert!((v - 0.053_512_296_895_202_691).abs() < 1e-10);
    assert_eq!(rydberg(&["constants", "--airy", "3", "--cosine", "1", "1"]).status.code(), Some(2));
}

#[test]
fn figures() {
    let o = rydberg(&["figure", "z"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 103);
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(r.headers().unwrap().len(), 4);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.dat");
    let o = rydberg(&["figure", "n", "--plot-format", "gnuplot", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with('#'));
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect();
    assert_eq!(data.len(), 9);
    assert!(data.iter().all(|l| l.split_whitespace().count() == 4));
    assert_eq!(rydberg(&["figure", "n", "--method", "both"]).status.code(), Some(2));
}
