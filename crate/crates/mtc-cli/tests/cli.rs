use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn mtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtc")).args(args).current_dir(root()).output().expect("run mtc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_bundled_data() {
    for f in ["data/z_e6.json", "data/z_haagerup.json"] {
        let o = mtc(&["verify", "--data", f]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
        let out = stdout(&o);
        assert!(out.lines().filter(|l| l.starts_with("AXIOM")).all(|l| l.contains(" PASS")));
        assert!(out.contains("SUMMARY") && out.contains("fail=0"));
    }
}

#[test]
fn malformed_input_exits_2() {
    let dir = std::env::temp_dir().join(format!("mtc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let empty = dir.join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let full = std::fs::read_to_string(root().join("data/z_e6.json")).unwrap();
    let truncated = dir.join("truncated.json");
    std::fs::write(&truncated, &full[..full.len() / 2]).unwrap();
    for p in [&empty, &truncated, &dir.join("missing.json")] {
        let o = mtc(&["verify", "--data", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{}", p.display());
    }
    assert_eq!(mtc(&["verify"]).status.code(), Some(2));
    assert_eq!(mtc(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn exclude_prints_both_lists() {
    let o = mtc(&["exclude", "--report"]);
    let out = stdout(&o);
    assert!(out.contains("c = 24 (printed): (A6,7), (A24,1), (B12,2), (C4,10), (D24,1)"));
    assert!(out.contains("rank 12 self-dual (printed): (A1,11), (B8,2), (C11,1), (D5,2), (E7,3), (G2,5)"));
    // the computed lists disagree with the printed ones, so this is a FAIL run
    assert_eq!(o.status.code(), Some(1));
    assert!(out.contains("CHECK lie/c24-solutions FAIL"));
}

#[test]
fn coset_d35_a7() {
    let o = mtc(&["coset", "--g", "D35", "--k", "2", "--p", "A7", "--chi", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("c(2) = 24, c(1) = 0"));
    assert!(out.contains("θ_μ = e^(2πi·9/28)"));
    assert!(mtc(&["coset", "--g", "D35", "--k", "2", "--p", "A7", "--chi", "9"]).status.code() == Some(1));
}

#[test]
fn fusion_json_is_a_tensor() {
    let o = mtc(&["fusion", "--data", "data/z_e6.json", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let n = v["data"]["N"].as_array().unwrap();
    assert_eq!(n.len(), 10);
    assert!(n.iter().all(|m| m.as_array().unwrap().len() == 10));
    assert_eq!(v["report"]["summary"]["fail"], 0);
}

#[test]
fn fusion_power_tower() {
    let o = mtc(&["fusion", "--data", "data/z_e6.json", "--object", "X4", "--power", "3"]);
    let out = stdout(&o);
    assert!(out.contains("X4^2 = 1+X4+V"));
    assert!(out.contains("X4^3 = 1+3X4+U+2V"));
}

#[test]
fn subcats_and_sl2z() {
    let out = stdout(&mtc(&["subcats", "--data", "data/z_haagerup.json"]));
    assert!(out.contains("2 fusion subcategories") && out.contains("prime: true"));
    let o = mtc(&["sl2z", "--data", "data/z_e6.json", "--relations"]);
    assert_eq!(o.status.code(), Some(0));
    let o = mtc(&["sl2z", "--data", "data/z_haagerup.json", "--psl2", "39"]);
    assert_eq!(o.status.code(), Some(0));
    let o = mtc(&["sl2z", "--data", "data/z_e6.json", "--closure", "--cap", "10"]);
    assert!(stdout(&o).contains("UNDETERMINED"));
}

#[test]
fn braid_and_center() {
    let out = stdout(&mtc(&["braid-eigs", "--data", "data/z_haagerup.json", "--object", "mu1", "--target", "mu2"]));
    assert!(out.contains("Hom(mu2, mu1^3): dim 7"));
    let o = mtc(&["center-e6", "--braid-eigs", "X4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("projective-order PASS 12") && out.contains("infinite image"));
}

#[test]
fn all_is_deterministic_across_exec_modes() {
    let a = mtc(&["--all"]);
    let b = mtc(&["--all", "--sequential"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(a.status.code(), Some(1));
    let out = stdout(&a);
    assert!(out.contains("CRITERIA pass=9 fail=1 [9]"), "{out}");
}
