use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .env_remove("SKEIN_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn sixj_methods_agree_and_symbolic_carries_a_certificate() {
    let out = skein(&["sixj", "7/10", "8/5", "23/10", "+", "-", "--cross-validate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "skein-kernel/1");
    assert_eq!(v["cross_validation"]["agree"], true);
    let values = &v["cross_validation"]["values"];
    assert_eq!(values["closed"], values["oracle"]);
    assert_eq!(values["closed"], values["symbolic"]);

    let out = skein(&["sixj", "7/10", "8/5", "23/10", "-1", "+1", "--method", "symbolic"]);
    let cert = &json(&out)["certificate"];
    let theta1 = cert["theta1"].as_i64().unwrap();
    assert_eq!(cert["predicted_f1"].as_i64().unwrap(), 7 * theta1 - 2 * 3 + 5);
    assert_eq!(cert["r_nonzero"], true);
}

#[test]
fn sixj_in_approx_mode_renders_complex_pairs() {
    let out = skein(&["sixj", "7/10", "8/5", "23/10", "+", "-", "--mode", "approx", "--cross-validate"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["value"].as_array().unwrap().len() == 2);
}

#[test]
fn bad_inputs_exit_with_code_two() {
    for args in [
        vec!["sixj", "7/10", "8/5", "23/10", "x", "-"],
        vec!["sixj", "1", "9/20", "-1/4", "+", "-"],
        vec!["sixj", "3/10", "9/20", "-1/4", "+", "-"],
        vec!["sixj", "7/10", "8/5", "23/10", "+", "-", "-N", "4"],
        vec!["rep", "--genus", "2", "--omega", "/definitely/missing.json", "--curve", "beta_1"],
        vec!["irreducible", "--genus", "2", "--omega", "/definitely/missing.json"],
        vec!["frobnicate"],
    ] {
        let out = skein(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn inadmissible_omega_exits_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("omega.json");
    std::fs::write(&bad, r#"{"omega": ["1/3", "1/3", "1/5"]}"#).unwrap();
    let out = skein(&["rep", "--genus", "2", "--omega", bad.to_str().unwrap(), "--curve", "beta_1", "--no-cache"]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn pants_curve_is_diagonal_and_transverse_curve_is_sparse() {
    let omega = fixture("omega_g2.json");
    let omega = omega.to_str().unwrap();
    let out = skein(&["rep", "--genus", "2", "--omega", omega, "--curve", "gamma_e1", "--no-cache"]);
    let v = json(&out);
    assert_eq!((v["rows"].as_u64(), v["cols"].as_u64()), (Some(27), Some(27)));
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e[0] == e[1]));
    assert_eq!(v["basis"]["size"], 27);

    let g2 = fixture("genus2.json");
    let out = skein(&["rep", "--fixture", g2.to_str().unwrap(), "--omega", omega, "--curve", "beta_2", "--no-cache"]);
    assert!(json(&out)["max_nonzeros_per_column"].as_u64().unwrap() <= 4);

    let out = skein(&["rep", "--genus", "2", "--omega", omega, "--curve", "beta_1", "--format", "csv", "--no-cache"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("row,col,value\n"));
}

#[test]
fn repeat_runs_hit_the_disk_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let omega = fixture("omega_g2.json");
    let args = ["rep", "--genus", "2", "--omega", omega.to_str().unwrap(), "--curve", "beta_1", "--cache-dir", cache];
    let first = json(&skein(&args));
    let second = json(&skein(&args));
    assert!(first["cache"]["computed"].as_u64().unwrap() > 0);
    assert_eq!(second["cache"]["computed"], 0);
    assert!(second["cache"]["disk_hits"].as_u64().unwrap() > 0);
    assert!(second["cache"]["spot_checked"].as_u64().unwrap() > 0);
    assert_eq!(first["entries"], second["entries"]);
    // the cache root can also come from the environment
    let out = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(&args[..7])
        .env("SKEIN_CACHE_DIR", cache)
        .output()
        .unwrap();
    assert!(json(&out)["cache"]["disk_hits"].as_u64().unwrap() > 0);
}

#[test]
fn tampered_cache_entries_are_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let omega = fixture("omega_g2.json");
    let args = ["rep", "--genus", "2", "--omega", omega.to_str().unwrap(), "--curve", "beta_1", "--cache-dir", cache];
    assert_eq!(skein(&args).status.code(), Some(0));
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        doc["value"]["coefficients"][0] = Value::String("12345".into());
        std::fs::write(&path, doc.to_string()).unwrap();
    }
    let out = skein(&args);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn genus_two_irreducibility_passes() {
    let omega = fixture("omega_g2.json");
    let out = skein(&["irreducible", "--genus", "2", "--omega", omega.to_str().unwrap(), "--words", "--no-cache"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["certificates"]["burnside"]["dimension"], 729);
    assert_eq!(v["certificates"]["burnside_words"]["dimension"], 729);
    assert_eq!(v["certificates"]["yset"]["nonstructural_zeros"], 0);
    assert_eq!(v["certificates"]["yset"]["zero_in_yset"], true);

    // the literal condition 0 not in Y(omega) never holds
    let strict = skein(&["irreducible", "--genus", "2", "--omega", omega.to_str().unwrap(), "--strict", "--no-cache"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn genus_one_classification() {
    let out = skein(&["genus1", "0", "1/2", "-N", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let c = &json(&out)["classification"];
    assert_eq!(c["class"], "central");
    assert_eq!((c["plus"]["dimension"].as_u64(), c["minus"]["dimension"].as_u64()), (Some(3), Some(2)));
    assert_eq!(c["image_dimension"], 13);

    let out = skein(&["genus1", "1/7", "2/9", "-N", "3"]);
    let c = &json(&out)["classification"];
    assert_eq!(c["class"], "generic");
    assert_eq!(c["shadow_verified"], true);
}

#[test]
fn verify_reports_each_criterion() {
    let out = skein(&["verify", "1,6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ids: Vec<u64> = v["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, vec![1, 6]);

    let out = skein(&["verify", "valuations"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["criteria"][0]["known_deviation"], true);
    assert_eq!(skein(&["verify", "nonsense"]).status.code(), Some(2));
}
