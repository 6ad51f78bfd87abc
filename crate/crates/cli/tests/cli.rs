use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn offdiag(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_offdiag"))
        .current_dir(dir)
        .env_remove("OFFDIAG_OUT")
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = offdiag(dir, args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let mut reader = csv::Reader::from_path(path).unwrap();
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn column(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn hydrogen_report() {
    let dir = tempfile::tempdir().unwrap();
    ok(dir.path(), &["report", "--system", "hydrogenic", "--z", "1", "--out", "o"]);
    let (header, rows) = read_csv(&dir.path().join("o/report.csv"));
    assert_eq!(rows.len(), 1);
    let row = &rows[0];
    assert!((num(&row[column(&header, "s_f")]) - 9.14149).abs() < 1e-5);
    assert!((num(&row[column(&header, "s_b")]) - 7.34038).abs() < 1e-5);
    assert!((num(&row[column(&header, "s_f_plus_s_b")]) - 16.4818684172).abs() < 1e-9);
    assert_eq!(row[column(&header, "status")], "ok");
}

#[test]
fn oscillator_report_is_symmetric_at_unit_frequency() {
    let dir = tempfile::tempdir().unwrap();
    ok(dir.path(), &["report", "--system", "oscillator", "--omega", "1", "--out", "o"]);
    let (header, rows) = read_csv(&dir.path().join("o/report.csv"));
    let f = num(&rows[0][column(&header, "s_f")]);
    let b = num(&rows[0][column(&header, "s_b")]);
    assert!((f - b).abs() < 1e-9);
}

#[test]
fn helium_report_signs_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    ok(dir.path(), &["report", "--system", "helium", "--z", "2", "--out", "o"]);
    let (header, rows) = read_csv(&dir.path().join("o/report.csv"));
    let get = |name| num(&rows[0][column(&header, name)]);
    assert!(get("i_f") > 0.0 && get("i_b") > 0.0);
    assert!(get("i_r") > 0.0 && get("i_p") > 0.0);
    assert!(get("delta_s_f") < 0.0 && get("delta_s_b") > 0.0);
    assert!((get("s_f") - 11.05133).abs() < 1e-5);
    assert!((get("s_b2") - 12.21472).abs() < 1e-5);
    let cache = fs::read_to_string(dir.path().join("o/params.txt")).unwrap();
    assert!(cache.starts_with("# Z Z1 Z2 E converged"));
    assert_eq!(cache.lines().count(), 2);
}

#[test]
fn hydrogenic_sweep_has_constant_sum() {
    let dir = tempfile::tempdir().unwrap();
    ok(dir.path(), &["sweep", "--system", "hydrogenic", "--z-range", "1:4", "--out", "s"]);
    let (header, rows) = read_csv(&dir.path().join("s/sweep_hydrogenic.csv"));
    assert_eq!(rows.len(), 4);
    let sum = column(&header, "s_f_plus_s_b");
    for row in &rows {
        assert!((num(&row[sum]) - 16.4818684172).abs() < 1e-9);
    }
}

#[test]
fn non_interacting_sweep_has_no_correlation() {
    let dir = tempfile::tempdir().unwrap();
    ok(dir.path(), &["sweep", "--system", "helium-NI", "--z-range", "2:3", "--out", "s"]);
    let (header, rows) = read_csv(&dir.path().join("s/sweep_helium-NI.csv"));
    assert_eq!(rows.len(), 2);
    for name in ["i_f", "i_b", "i_r", "i_p"] {
        for row in &rows {
            assert!(num(&row[column(&header, name)]).abs() < 1e-8, "{name}");
        }
    }
}

#[test]
fn curves_have_expected_shape() {
    let dir = tempfile::tempdir().unwrap();
    ok(dir.path(), &["curves", "--figures", "fig1,fig4,fig8", "--out", "c"]);

    let (header, rows) = read_csv(&dir.path().join("c/fig1.csv"));
    assert_eq!(header, ["k", "F_Z2", "F_Z3", "F_Z4"]);
    assert_eq!(rows.len(), 400);
    assert_eq!(rows[0][1..], ["1", "1", "1"]);

    let (header, rows) = read_csv(&dir.path().join("c/fig4.csv"));
    assert_eq!(header, ["s", "B_Z2", "B_NI_Z2", "B_Z3", "B_Z4"]);
    let last = rows.iter().find(|r| num(&r[0]) > 3.0).unwrap();
    assert!(num(&last[1]) > num(&last[2]));

    let (header, rows) = read_csv(&dir.path().join("c/fig8.csv"));
    assert_eq!(header, ["k1", "k2", "F"]);
    assert_eq!(rows.len(), 200 * 200);
    assert_eq!(rows[0], ["0", "0", "1"]);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out| ["sweep", "--system", "helium", "--z-range", "2:3", "--out", out];
    ok(dir.path(), &args("a"));
    ok(dir.path(), &args("b"));
    let a = fs::read(dir.path().join("a/sweep_helium.csv")).unwrap();
    let b = fs::read(dir.path().join("b/sweep_helium.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn environment_sets_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_offdiag"))
        .current_dir(dir.path())
        .env("OFFDIAG_OUT", "from_env")
        .args(["report", "--system", "hydrogenic", "--z", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("from_env/report.csv").exists());
}

#[test]
fn config_file_is_read() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("run.toml"),
        "system = \"oscillator\"\nomega_range = \"1:2:0.5\"\noutput_dir = \"cfg\"\n",
    )
    .unwrap();
    ok(dir.path(), &["--config", "run.toml", "sweep"]);
    let (_, rows) = read_csv(&dir.path().join("cfg/sweep_oscillator.csv"));
    assert_eq!(rows.len(), 3);
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.toml"), "sytem = \"helium\"\n").unwrap();
    let out = offdiag(dir.path(), &["--config", "bad.toml", "report"]);
    assert!(!out.status.success());
}

#[test]
fn bad_arguments_fail() {
    let dir = tempfile::tempdir().unwrap();
    let empty = offdiag(dir.path(), &["sweep", "--system", "hydrogenic", "--z-range", "5:1"]);
    assert!(!empty.status.success());
    let figure = offdiag(dir.path(), &["curves", "--figures", "fig99"]);
    assert!(!figure.status.success());
    assert!(String::from_utf8_lossy(&figure.stderr).contains("unknown figure"));
}
