mod common;

use std::process::{Command, Output};

use common::*;
use mlv::cli::{Report, SCHEMA_VERSION};
use mlv::registry::{table_entries, Status};
use serde_json::Value;

fn mlv(args: &[&str]) -> Output {
    Command::new(mlv_bin())
        .args(args)
        .env_remove(mlv::quad::MAX_LEVEL_ENV)
        .output()
        .expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn report(o: &Output) -> Report {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn eval_examples() {
    let o = mlv(&["eval", "gamma", "0.5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("1.77245385090551"), "{}", stdout(&o));

    let o = mlv(&["eval", "hurwitz_zeta", "2", "1"]);
    assert!(stdout(&o).starts_with("1.64493406684822"));

    let o = mlv(&["eval", "ml", "0.5", "1", "-1"]);
    // A positive real part has no sign, so the first '+' separates the parts.
    let v: f64 = stdout(&o).split('+').next().unwrap().parse().unwrap();
    assert_close_f(v, ml_half_neg(1.0), 1e-12);

    let o = mlv(&["eval", "lerch_phi", "0.5", "1", "1"]);
    assert!(stdout(&o).starts_with("1.38629436111989"));
}

#[test]
fn eval_errors() {
    // Pole: exit 2 with a message naming it.
    let o = mlv(&["eval", "gamma", "0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
    assert_eq!(code(&mlv(&["eval", "nosuch", "1"])), 2);
    assert_eq!(code(&mlv(&["eval", "gamma"])), 2);
    assert_eq!(code(&mlv(&["eval", "gamma", "abc"])), 2);
    assert_eq!(code(&mlv(&["frobnicate"])), 2);
}

#[test]
fn verify_exit_codes_and_report() {
    let o = mlv(&["verify", "DI-PI24"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r.schema_version, SCHEMA_VERSION);
    assert_eq!(r.config.command, "verify");
    assert_eq!(r.summary.total, r.results.len());
    assert_eq!(r.summary.pass, r.summary.total);
    // Round trip through the typed report preserves every field.
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);

    // Floats are 17-significant-digit strings.
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let re = v["results"][0]["lhs"]["re"].as_str().unwrap();
    let mantissa = re.trim_start_matches('-').split('e').next().unwrap();
    assert_eq!(mantissa.replace('.', "").len(), 17, "{re}");

    // The misprinted table row fails: exit 1.
    let o = mlv(&["verify", "TB-ZETA"]);
    assert_eq!(code(&o), 1);
    let r = report(&o);
    assert!(r.summary.fail > 0);
    assert!(r.results.iter().all(|x| x.status == Status::Fail));

    assert_eq!(code(&mlv(&["verify", "NO-SUCH"])), 2);
    assert_eq!(code(&mlv(&["verify"])), 2);
    assert_eq!(code(&mlv(&["verify", "DI-PI24", "--all"])), 2);
}

#[test]
fn verify_with_params_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("pi24.txt");
    std::fs::write(&good, "# the spec example\nm = 0.5\nk = -2\nb = 0.6\n").unwrap();
    let o = mlv(&["verify", "DI-PI24", "--params", good.to_str().unwrap(), "--tol", "1e-5"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&o);
    assert_eq!(r.results.len(), 1);
    assert_eq!(r.config.tol, Some(1e-5));

    // Out of domain: exit 2 and a domain-violation result.
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "b = 2.5\n").unwrap();
    let o = mlv(&["verify", "DI-PI24", "--params", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert_eq!(report(&o).results[0].status, Status::DomainViolation);

    let garbled = dir.path().join("garbled.txt");
    std::fs::write(&garbled, "b: 0.5\n").unwrap();
    assert_eq!(code(&mlv(&["verify", "DI-PI24", "--params", garbled.to_str().unwrap()])), 2);
    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&mlv(&["verify", "DI-PI24", "--params", missing.to_str().unwrap()])), 2);
}

#[test]
fn quad_tol_is_echoed() {
    let o = mlv(&["verify", "GM-C414", "--quad-tol", "1e-7"]);
    assert_eq!(code(&o), 0);
    let c = report(&o).config;
    assert_eq!(c.outer_rel_tol, 1e-7);
    assert_eq!(c.rel_tol, 1e-7 / 100.0);
    assert_eq!(code(&mlv(&["verify", "GM-C414", "--quad-tol", "1e-20"])), 2);
}

#[test]
fn verify_all_is_deterministic() {
    let a = mlv(&["verify", "--all"]);
    let b = mlv(&["verify", "--all"]);
    // Only TB-ZETA fails, so the run exits 1.
    assert_eq!(code(&a), 1);
    let va: Value = serde_json::from_slice(&a.stdout).unwrap();
    let vb: Value = serde_json::from_slice(&b.stdout).unwrap();
    let ra = serde_json::to_string(&va["results"]).unwrap();
    let rb = serde_json::to_string(&vb["results"]).unwrap();
    assert_eq!(ra, rb);
    let r = report(&a);
    let ids: Vec<&str> = r.results.iter().map(|x| x.id.as_str()).collect();
    let mut expected = Vec::new();
    for s in mlv::registry::catalog() {
        expected.extend(std::iter::repeat(s.id).take(s.default_samples.len()));
    }
    assert_eq!(ids, expected);
    assert_eq!(r.summary.total, r.summary.pass + r.summary.fail + r.summary.errors);
}

#[test]
fn sweep_commands() {
    let o = mlv(&["sweep", "DI-PI24", "--param", "b", "--values", "0.3,0.5,0.8"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert!(r.deviation.unwrap() < 1e-4);
    assert_eq!(r.results.len(), 3);

    let o = mlv(&[
        "sweep", "DI-PHI-INV", "--param", "b", "--values", "0.4,0.6,0.9",
        "--set", "m=0.3333333333333333", "--set", "a=i", "--set", "k=1",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(report(&o).deviation.unwrap() < 1e-4);

    let o = mlv(&["sweep", "DI-PI24", "--param", "b", "--values", "0.3,0.5", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("id,param,value_re"));
    assert!(lines[3].starts_with("max_deviation,"));

    // The right-hand side depends on m: not sweepable.
    let o = mlv(&["sweep", "DI-PHI-INV", "--param", "m", "--values", "0.2,0.3", "--set", "a=i", "--set", "k=1"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&mlv(&["sweep", "DI-PI24", "--param", "q", "--values", "1"])), 2);
}

#[test]
fn table_output() {
    let o = mlv(&["table", "--format", "csv"]);
    assert_eq!(code(&o), 1, "the misprinted row fails");
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "id");
    assert_eq!(&headers[1], "closed_form");
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), table_entries().len());
    for (row, spec) in rows.iter().zip(table_entries()) {
        assert_eq!(&row[0], spec.id);
    }

    let o = mlv(&["table"]);
    let r = report(&o);
    assert_eq!(r.labels.len(), r.results.len());
    let o = mlv(&["table", "--format", "text"]);
    assert!(stdout(&o).contains("DI-PI24"));
}

#[test]
fn plot_ml_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ml.csv");
    let o = mlv(&["plot-ml", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["b", "u", "value"]);
    let mut rows = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let (b, u, v): (f64, f64, f64) = (rec[0].parse().unwrap(), rec[1].parse().unwrap(), rec[2].parse().unwrap());
        rows += 1;
        if u == 0.0 {
            assert_eq!(v, 1.0);
        }
        if b == 1.0 {
            assert_close_f(v, (-u).exp(), 1e-12);
        }
        if b == 0.5 && u == 10.0 {
            let spectral = mlv::mittag::ml_neg_spectral(0.5, 10.0).unwrap();
            assert_close_f(v, spectral, 1e-10);
            assert_close_f(v, ml_half_neg(10.0), 1e-12);
        }
    }
    assert_eq!(rows, 4 * 101);

    let o = mlv(&["plot-ml", "--b", "0.5", "--u", "1:2", "--points", "3"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert_eq!(code(&mlv(&["plot-ml", "--b", "0", "--points", "3"])), 2);
    assert_eq!(code(&mlv(&["plot-ml", "--u", "5", "--points", "3"])), 2);
}

#[test]
fn unwritable_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain");
    std::fs::write(&file, "").unwrap();
    // A path below a regular file cannot be created.
    let target = file.join("ml.csv");
    let o = mlv(&["plot-ml", "--points", "3", "--out", target.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn list_catalog() {
    let o = mlv(&["list"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let arr = v.as_array().expect("list emits an array");
    assert_eq!(arr.len(), mlv::registry::catalog().len());
    assert_eq!(arr[0]["id"], mlv::registry::catalog()[0].id);
    let o = mlv(&["list", "--format", "text"]);
    assert!(stdout(&o).contains("GM-C414"));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let rc = mlv::cli::run(["mlv", "eval", "gamma", "0.5"], &mut out, &mut err);
    assert_eq!(rc, 0);
    assert_eq!(out, mlv(&["eval", "gamma", "0.5"]).stdout);
}
