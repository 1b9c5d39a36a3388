use std::process::Command;

fn heptagon(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_heptagon")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

#[test]
fn spectrum_table_shows_totals_and_zero_momentum_row() {
    let (code, out, _) = heptagon(&["spectrum", "--numeric"]);
    assert_eq!(code, 0);
    assert!(out.lines().last().unwrap().starts_with("total: 128 levels"));
    let row: Vec<&str> = out
        .lines()
        .find(|l| l.split_whitespace().take(3).collect::<Vec<_>>() == ["0", "2", "+1"])
        .expect("k=0 r'=2 ν=+1 row")
        .split_whitespace()
        .collect();
    assert_eq!(&row[3..], ["2..5", "4", "-2", "-2.00000000000000"]);
}

#[test]
fn spectrum_json_round_trips() {
    let (code, out, _) = heptagon(&["spectrum", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 35);
    let spectrum = heptagon::model::full_spectrum().unwrap();
    for (json, rec) in records.iter().zip(&spectrum) {
        let e = heptagon::model::spectrum::energy_from_json(&json["energy"]).unwrap();
        assert_eq!(e, rec.energy_exact);
    }
    let total: u64 = records.iter().map(|r| r["multiplicity"].as_u64().unwrap()).sum();
    assert_eq!(total, 128);
}

#[test]
fn verify_sections() {
    let (code, out, _) = heptagon(&["verify", "--section", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));
    let (code, out, _) = heptagon(&["verify", "--section", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("is a nonsquare")).count(), 63);
}

#[test]
fn galois_permutations() {
    let (code, out, _) = heptagon(&["galois", r#"{"eps":[[1,1,1],[1,1,1]],"l":1}"#]);
    assert_eq!((code, out.trim()), (0, "identity permutation"));

    let (_, out, _) = heptagon(&["galois", r#"{"eps":[[1,1,1],[1,1,1]],"l":2}"#]);
    for rp in [2, 3] {
        for nu in ["+1", "-1"] {
            let cycle = format!("(k=-3 r'={rp} ν={nu} → k=1 r'={rp} ν={nu} → k=2 r'={rp} ν={nu})");
            assert!(out.contains(&cycle), "{out}");
        }
    }

    let (_, out, _) = heptagon(&["galois", r#"{"eps":[[-1,1,1],[1,1,1]],"l":1}"#]);
    let energies: Vec<&str> = out
        .split("subfields:")
        .next()
        .unwrap()
        .lines()
        .filter(|l| l.starts_with("  ("))
        .map(str::trim)
        .collect();
    assert_eq!(
        energies,
        ["(k=-1 r'=2 ν=+1 → k=-1 r'=2 ν=-1)", "(k=1 r'=2 ν=+1 → k=1 r'=2 ν=-1)"]
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(heptagon(&["galois", "{not json"]).0, 2);
    assert_eq!(heptagon(&["galois", r#"{"eps":[[1,1,1],[1,1,1]],"l":7}"#]).0, 2);
    assert_eq!(heptagon(&["verify", "--section", "8"]).0, 2);
    assert_eq!(heptagon(&["spectrum", "--format", "xml"]).0, 2);
    assert_eq!(heptagon(&["nonsense"]).0, 2);
}

#[test]
fn export_writes_labelled_matrices() {
    let path = std::env::temp_dir().join(format!("heptagon-export-{}.json", std::process::id()));
    let (code, _, err) = heptagon(&["export", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_reader(std::fs::File::open(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["spectrum"].as_array().unwrap().len(), 35);
    let h3 = v["matrices"]
        .as_array()
        .unwrap()
        .iter()
        .find(|m| m["name"] == "H_3" && m["k"] == 1)
        .unwrap();
    assert_eq!(h3["row_labels"].as_array().unwrap().len(), 5);
    assert_eq!(h3["entries"][0][0]["field"], "Q(w7)");
}
