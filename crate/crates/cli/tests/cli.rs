//! Functional tests of the kgscan binary: exit codes, output schemas,
//! per-row error handling and configuration precedence.

use kg_coulomb_cli::scan::{ScanRecord, CSV_HEADER};
use std::process::{Command, Output};

fn kgscan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kgscan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8(output.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

#[test]
fn state_reports_all_sections() {
    let out = kgscan(&["state", "--Z", "68", "--n", "4", "--l", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for needle in [
        "klein-gordon parameters:",
        "energies:",
        "moments",
        "entropic power",
        "fisher",
    ] {
        assert!(text.contains(needle), "missing section {needle:?}");
    }
    // 4P has finite Fisher information in both theories.
    assert!(!text.contains("undefined"), "{text}");
}

#[test]
fn state_marks_undefined_fisher_for_s_states() {
    let out = kgscan(&["state", "--Z", "68", "--n", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("undefined"));
}

#[test]
fn invalid_quantum_numbers_exit_with_code_2() {
    let out = kgscan(&["state", "--Z", "68", "--n", "2", "--l", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("0 <= l <= n - 1"), "stderr: {err}");
}

#[test]
fn unknown_measure_exits_with_code_2() {
    let out = kgscan(&[
        "scan", "--axis", "n", "--range", "1:3:1", "--family", "sstate", "--Z", "10",
        "--measures", "entropy",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn supercritical_state_exits_with_code_3() {
    let out = kgscan(&["state", "--Z", "137.2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("supercritical"));
}

#[test]
fn unattainable_tolerance_exits_with_code_4() {
    let out = kgscan(&["state", "--Z", "68", "--n", "1", "--tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("did not converge"));
}

#[test]
fn scan_rows_parse_back_with_full_fidelity() {
    let out = kgscan(&[
        "scan", "--axis", "n", "--range", "1:5:1", "--family", "circular", "--Z", "68",
        "--measures", "centroid,variance",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 1 + 5 * 2);
    for line in &lines[1..] {
        let record = ScanRecord::from_csv_line(line).unwrap();
        assert_eq!(record.to_csv_line(), *line);
        assert!(record.converged);
        assert!(record.ratio.unwrap() < 1.0);
    }
}

#[test]
fn json_mode_emits_one_record_per_line() {
    let out = kgscan(&[
        "scan", "--axis", "m", "--range", "0:2:1", "--Z", "68", "--n", "3", "--l", "2",
        "--measures", "fisher", "--format", "json",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    for line in &lines {
        let record: ScanRecord = serde_json::from_str(line).unwrap();
        assert_eq!(record.measure, "fisher");
        assert!(record.value_kg.is_some());
        assert!(record.ratio.unwrap() < 1.0);
    }
}

#[test]
fn supercritical_grid_rows_are_reported_and_skipped() {
    let out = kgscan(&[
        "scan", "--axis", "Z", "--range", "60:75:5", "--n", "1", "--l", "0", "--measures",
        "centroid",
    ]);
    assert!(out.status.success(), "scan must continue past bad rows");
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 5);
    let records: Vec<ScanRecord> = lines[1..]
        .iter()
        .map(|l| ScanRecord::from_csv_line(l).unwrap())
        .collect();
    assert!(records[0].value_kg.is_some() && records[0].converged);
    assert!(records[1].value_kg.is_some() && records[1].converged);
    for bad in &records[2..] {
        assert!(bad.value_kg.is_none());
        assert!(bad.value_sch.is_some());
        assert!(bad.ratio.is_none());
        assert!(!bad.converged);
    }
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.matches("supercritical").count(), 2);
}

#[test]
fn fisher_is_undefined_only_for_kg_s_states() {
    let out = kgscan(&[
        "scan", "--axis", "n", "--range", "1:3:1", "--family", "sstate", "--Z", "68",
        "--measures", "fisher",
    ]);
    assert!(out.status.success());
    for line in &stdout_lines(&out)[1..] {
        let record = ScanRecord::from_csv_line(line).unwrap();
        assert!(record.value_kg.is_none(), "KG S-state Fisher must be absent");
        assert!(record.value_sch.is_some(), "Schrödinger Fisher is defined");
        assert!(record.converged, "defined absence is not a failure");
    }
}

#[test]
fn no_nan_or_inf_ever_reaches_the_output() {
    let out = kgscan(&[
        "scan", "--axis", "n", "--range", "1:6:1", "--family", "circular", "--Z", "68",
        "--tol", "1e-6",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("NaN") && !text.contains("inf"), "{text}");
    for line in text.lines().skip(1) {
        let record = ScanRecord::from_csv_line(line).unwrap();
        for v in [record.value_kg, record.value_sch, record.ratio].into_iter().flatten() {
            assert!(v.is_finite());
        }
    }
}

#[test]
fn config_file_fills_defaults_but_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.conf");
    std::fs::write(&path, "Z = 20\nmass = 273.132054\nmeasures = centroid\n").unwrap();

    let from_config = kgscan(&[
        "scan", "--config", path.to_str().unwrap(), "--axis", "n", "--range", "1:2:1",
        "--family", "sstate",
    ]);
    assert!(from_config.status.success());
    let records: Vec<ScanRecord> = stdout_lines(&from_config)[1..]
        .iter()
        .map(|l| ScanRecord::from_csv_line(l).unwrap())
        .collect();
    assert!(records.iter().all(|r| r.z == 20.0 && r.measure == "centroid"));

    let flag_wins = kgscan(&[
        "scan", "--config", path.to_str().unwrap(), "--axis", "n", "--range", "1:2:1",
        "--family", "sstate", "--Z", "68",
    ]);
    let records: Vec<ScanRecord> = stdout_lines(&flag_wins)[1..]
        .iter()
        .map(|l| ScanRecord::from_csv_line(l).unwrap())
        .collect();
    assert!(records.iter().all(|r| r.z == 68.0));
}

#[test]
fn bad_config_key_exits_with_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.conf");
    std::fs::write(&path, "charge = 68\n").unwrap();
    let out = kgscan(&[
        "scan", "--config", path.to_str().unwrap(), "--axis", "n", "--range", "1:2:1",
        "--Z", "68", "--family", "sstate",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn density_profile_has_requested_size_and_compression() {
    let out = kgscan(&[
        "density-profile", "--Z", "68", "--n", "1", "--points", "500",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "r,d_kg,d_sch");
    assert_eq!(lines.len(), 501);
    let rows: Vec<(f64, f64, f64)> = lines[1..]
        .iter()
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            (f[0], f[1], f[2])
        })
        .collect();
    assert!(rows.windows(2).all(|w| w[0].0 < w[1].0));
    // Relativistic compression: the KG density dominates at small radii.
    assert!(rows[0].1 > rows[0].2);
    // Coarse trapezoid normalization of both columns with the r^2 weight.
    for column in [1usize, 2] {
        let mut integral = 0.0;
        for w in rows.windows(2) {
            let f0 = if column == 1 { w[0].1 } else { w[0].2 };
            let f1 = if column == 1 { w[1].1 } else { w[1].2 };
            integral +=
                0.5 * (f0 * w[0].0 * w[0].0 + f1 * w[1].0 * w[1].0) * (w[1].0 - w[0].0);
        }
        assert!(
            (integral - 1.0).abs() < 0.01,
            "column {column} integrates to {integral}"
        );
    }
}

#[test]
fn density_profile_row_count_matches_any_requested_size() {
    let out = kgscan(&[
        "density-profile", "--Z", "20", "--n", "3", "--l", "1", "--points", "37",
        "--spacing", "linear",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_lines(&out).len(), 38);
}
