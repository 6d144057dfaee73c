use std::path::Path;
use std::process::{Command, Output};

fn cminor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cminor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

/// A generic 13x13 rational matrix as "p/q" strings.
fn matrix_json() -> String {
    let g = cminor_verify::generic_matrix(&mut cminor_verify::rng(1), 13);
    serde_json::to_string(&g.matrix).unwrap()
}

#[test]
fn built_region_feeds_poly_and_matches_the_minor() {
    let dir = tempfile::tempdir().unwrap();
    let o = cminor(&["region", "build", "--q", "4,2", "--ks", "2", "--n", "13"]);
    assert!(o.status.success());
    let region = write(dir.path(), "tad.json", &stdout(&o));
    let m = write(dir.path(), "m.json", &matrix_json());
    let p = cminor(&["poly", "--region", &region, "--matrix", &m]);
    let c = cminor(&["minor", "--matrix", &m, "--con", "1,5,2"]);
    assert!(p.status.success() && c.status.success(), "{}", String::from_utf8_lossy(&p.stderr));
    assert_eq!(stdout(&p), stdout(&c));
    let rc = cminor(&["minor", "--matrix", &m, "--rows", "1,2", "--cols", "6,5"]);
    assert_eq!(stdout(&rc), stdout(&c));
}

#[test]
fn identity_off_diagonal_block_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let rows: Vec<String> = (0..13)
        .map(|i| format!("[{}]", (0..13).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(",")))
        .collect();
    let id = write(dir.path(), "id13.json", &format!("[{}]", rows.join(",")));
    let o = cminor(&["minor", "--matrix", &id, "--con", "1,5,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn semicontiguous_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.json", &matrix_json());
    let spec = write(dir.path(), "s.json", r#"{"a":1,"b":6,"ks":[1,1],"ts":[1],"n":13,"side":"SM"}"#);
    let o = cminor(&["minor", "--matrix", &m, "--sm", &spec]);
    let r = cminor(&["minor", "--matrix", &m, "--rows", "1,2", "--cols", "8,6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), stdout(&r));
    let wrong = write(dir.path(), "w.json", r#"{"a":1,"b":6,"ks":[1,1],"ts":[1],"n":9,"side":"SM"}"#);
    assert_eq!(cminor(&["minor", "--matrix", &m, "--sm", &wrong]).status.code(), Some(1));
}

#[test]
fn tilings_render_and_symbolic_poly() {
    let dir = tempfile::tempdir().unwrap();
    let ad = write(dir.path(), "ad.json", &stdout(&cminor(&["region", "build", "--ad", "0,0,3"])));
    assert_eq!(stdout(&cminor(&["tilings", "--region", &ad])).trim(), "64");
    let ad1 = write(dir.path(), "ad1.json", &stdout(&cminor(&["region", "build", "--ad", "0,0,1"])));
    let listed = stdout(&cminor(&["tilings", "--region", &ad1, "--list"]));
    assert_eq!(listed.lines().count(), 2);
    let sym = cminor(&["poly", "--region", &ad1, "--symbolic"]);
    assert!(sym.status.success() && !stdout(&sym).trim().is_empty());
    let ascii = stdout(&cminor(&["render", "--region", &ad, "--ascii", "--n", "3"]));
    assert!(ascii.contains('=') && ascii.contains('o'));
    let svg = stdout(&cminor(&["render", "--region", &ad, "--svg"]));
    assert!(svg.starts_with("<svg") && svg.matches("<rect").count() == 24);
    assert_eq!(cminor(&["render", "--region", &ad]).status.code(), Some(1));
}

#[test]
fn network_commands() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.json", r#"{"n":3,"interior":1,"edges":[[1,4,"1"],[2,4,"1"],[3,4,"1"]]}"#);
    let o = cminor(&["network", "response", "--net", &star]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(r#""2/3""#) && stdout(&o).contains(r#""-1/3""#));
    let wc = stdout(&cminor(&["network", "wellconnected", "--net", &star, "--method", "both"]));
    assert!(wc.contains(r#""minors":true"#) && wc.contains(r#""paths":true"#));
    let path = write(dir.path(), "path.json", r#"{"n":3,"interior":0,"edges":[[1,2,"1"],[2,3,"1"]]}"#);
    let o = cminor(&["network", "wellconnected", "--net", &path, "--method", "minors"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""minors":false"#));
    let broken = write(dir.path(), "bad.json", r#"{"n":2,"interior":0,"edges":[[1,5,"1"]]}"#);
    assert_eq!(cminor(&["network", "response", "--net", &broken]).status.code(), Some(1));
}

#[test]
fn verify_streams_reports() {
    let o = cminor(&["verify", "condense", "--seed", "7", "--count", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l["equal"] == true));
    assert!(String::from_utf8_lossy(&o.stderr).contains("all"));

    let t = cminor(&["verify", "thm2", "--seed", "3", "--n", "6", "--k-max", "2", "--t-max", "1", "--jobs", "2"]);
    assert_eq!(t.status.code(), Some(0));
    assert_eq!(stdout(&t).lines().count(), 4 * 36);
    let again = cminor(&["verify", "thm2", "--seed", "3", "--n", "6", "--k-max", "2", "--t-max", "1"]);
    let cases = |o: &Output| {
        stdout(o)
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["case"].clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(cases(&t), cases(&again));
}

#[test]
fn missing_files_and_bad_bounds_exit_one() {
    assert_eq!(cminor(&["poly", "--region", "/nonexistent.json", "--symbolic"]).status.code(), Some(1));
    assert_eq!(cminor(&["verify", "thm2", "--s-min", "3", "--s-max", "2"]).status.code(), Some(1));
}
