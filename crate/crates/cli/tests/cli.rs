use std::process::{Command, Output};

fn tga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tga"))
        .args(args)
        .env("TGA_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn shaped_z4_left_has_one_survivor() {
    let o = tga(&["classify", "--group", "Z4", "--basis", "left", "--mode", "shaped"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("1 survivors"), "{s}");
    assert!(s.contains("|  1 |  1 |  1 |  1 | -1 |"), "{s}");
    assert!(s.contains("|  2 |  1 | -1 | -1 |  1 |"), "{s}");
}

#[test]
fn odd_order_group_reports_zero_divisor() {
    let o = tga(&["classify", "--group", "Z3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["survivor_count"], 0);
    assert_eq!(v["odd_order_witness"]["verified"], true);
}

#[test]
fn tesseranion_kappa() {
    let o = tga(&["cohomology", "--algebra", "tes", "--show", "kappa"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["kappa"], serde_json::json!([1, -1, 1, 1]));
}

#[test]
fn quaternions_separable() {
    let o = tga(&["cohomology", "--algebra", "quat", "--check", "separable"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("true"), "{s}");
}

#[test]
fn degree_six_identity_dimension() {
    let o = tga(&["identities", "--algebra", "tes", "--pattern", "6"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["dimension"], 34);
}

#[test]
fn encryption_known_vector() {
    let o = tga(&["encrypt", "--p", "257", "--key", "1,1,0,0", "--msg", "5,6,7,8"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let cipher = s.lines().next().unwrap().trim().to_string();
    assert!(String::from_utf8_lossy(&o.stderr).contains("round trip: ok"));
    let d = tga(&["encrypt", "--p", "257", "--key", "1,1,0,0", "--cipher", &cipher]);
    assert!(d.status.success());
    assert_eq!(stdout(&d).lines().next().unwrap().trim(), "5,6,7,8");
}

#[test]
fn vanishing_key_norm_is_rejected() {
    // 1 + 16^2 = 257
    let o = tga(&["encrypt", "--p", "257", "--key", "1,0,16,0", "--msg", "1,2,3,4"]);
    assert!(!o.status.success());
}

#[test]
fn triangle_small_run() {
    let o = tga(&["norms", "--check", "triangle", "--samples", "100", "--j", "2", "--n", "2"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["triangle"][0]["report"]["violations"], 0);
}

#[test]
fn deformation_family_one() {
    let o = tga(&["deform", "--family", "1", "--k", "4", "--checks", "neccons,inverse-iso"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["neccons"]["passes"], true);
    assert_eq!(v["inverse-iso"]["holds"], true);
}

#[test]
fn bad_flag_is_usage_error() {
    let o = tga(&["classify", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tga(&["cohomology", "--check", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn accept_subset() {
    let o = tga(&["accept", "--only", "2,14"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.contains("[PASS]")).count(), 2, "{s}");
}
