use std::process::{Command, Output};

fn fcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcl"))
        .args(args)
        .env_remove("FCL_CONFIG")
        .env_remove("FCL_NETWORK")
        .env_remove("FCL_FIXTURES")
        .env_remove("FCL_PRECISION")
        .output()
        .expect("run fcl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = fcl(&a);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn catalan_moments_json() {
    let o = fcl(&["moments", "w - w^2", "--order", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"s":["1","1","2","5","14","42"]}"#);
}

#[test]
fn hankel_from_r() {
    let v = json(&["hankel", "--from-r", "w/(1-w)^2", "--order", "5"]);
    assert_eq!(v["status"], "negative");
    assert_eq!(v["order"], 5);
    assert_eq!(v["minor"], "-3374");
}

#[test]
fn darkmatter_criticals() {
    let o = fcl(&["criticals", "w*(1-w^2)", "--range", "0:3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("critical t = 1 (DegreeDrop)"), "{out}");
    assert!(out.contains("Yes/(0,1)") && out.contains("No/(1,3)"), "{out}");
    let v = json(&["criticals", "w*(1-w^2)", "--range", "0:3"]);
    assert_eq!(v["criticals"][0]["exact"], "1");
    assert_eq!(v["intervals"][1]["verdict"], "No");
}

#[test]
fn exit_codes() {
    assert_eq!(fcl(&["moments", "w^(1/2)"]).status.code(), Some(2));
    assert_eq!(fcl(&["moments", "w +"]).status.code(), Some(2));
    assert_eq!(fcl(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(fcl(&["moments", "1 + w"]).status.code(), Some(1));
    assert_eq!(fcl(&["dist", "wigner", "-1"]).status.code(), Some(1));
    assert_eq!(fcl(&["oeis-fetch", "A0"]).status.code(), Some(2));
    assert_eq!(fcl(&["oeis-fetch", "A999999", "--network", "off"]).status.code(), Some(1));
    let e = String::from_utf8_lossy(&fcl(&["moments", "w +\n*"]).stderr).into_owned();
    assert!(e.contains("line 2, column 1"), "{e}");
}

#[test]
fn c2_boundary_certified() {
    let o = fcl(&["euler", "2", "--ck", "--precision", "32"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rr0 at C_2: Yes"));
    let v = json(&["euler", "1", "--ck"]);
    assert_eq!(v["c_k"]["exact"], "27/8");
}

#[test]
fn exact_outputs_are_strings() {
    let v = json(&["charpoly", "w*(1+w^2)/(1+9*w^2)"]);
    assert_eq!(v["chi"]["coeffs"], serde_json::json!(["1", "0", "-6", "0", "9"]));
    assert_eq!(v["real_rooted"], true);
    let v = json(&["moments", "w/(1-w/2)", "--order", "3"]);
    assert_eq!(v["s"], serde_json::json!(["1", "-1/2", "1/4", "-1/8"]));
    let v = json(&["moments", "w/(1-w/2)", "--order", "2", "--approx", "3"]);
    assert_eq!(v["s"], serde_json::json!(["1.000", "-0.500", "0.250"]));
}

#[test]
fn element_operations() {
    assert_eq!(json(&["power", "w - w^2", "2"])["f"], "w*(1 - w)/(1 + w)");
    assert_eq!(json(&["translate", "w", "1"])["f"], "w/(1 + w)");
    let c = json(&["compose", "w - w^2", "w"]);
    assert_eq!(c["f"], "w*(1 - w)");
    let s = json(&["convolve", "w - w^2", "w - w^2"]);
    assert_eq!(s["f"], json(&["power", "w - w^2", "2"])["f"]);
    assert_eq!(json(&["dilate", "w - w^2", "2"])["f"], "w*(1 - 2*w)");
    assert_eq!(json(&["rr0", "w*(1-w^2)", "--t", "2"])["rr0"], false);
    assert_eq!(json(&["rr", "w*(1-w^2)", "--t", "2"])["rr"], false);
    assert_eq!(json(&["singular", "w*(1+w^2)/(1+9*w^2)"])["singular"], true);
}

#[test]
fn nset_and_fid() {
    let v = json(&["nset", "w*(1-w)*(1-w+w^2)"]);
    let members: Vec<&str> = v["real_members"].as_array().unwrap().iter().map(|m| m["exact"].as_str().unwrap()).collect();
    assert_eq!(members, ["3/16", "1/4"]);
    assert_eq!(v["nonreal_pair_count"], 0);
    assert_eq!(json(&["fid", "w/(1+w)^2", "--order", "4"])["status"], "positive_so_far");
}

#[test]
fn families() {
    assert_eq!(json(&["dist", "mp", "1", "1"])["f"], "w*(1 - w)");
    assert_eq!(json(&["dist", "dirac", "-1"])["f"], "w/(1 - w)");
    assert!(json(&["dist", "levy", "0", "1", "1:1"])["f"].is_string());
    assert_eq!(fcl(&["dist", "levy", "-1", "1", "--", "-2:1"]).status.code(), Some(0));
    assert_eq!(json(&["dist", "wigner", "1"])["f"], "w/(1 + w^2)");
    assert!(json(&["dist", "catalog"]).as_array().unwrap().len() > 50);
    assert_eq!(json(&["deconv", "wmp", "1", "1/2"])["chi_check"], true);
    assert_eq!(json(&["deconv", "mpmp", "1", "2", "1/3"])["chi_check"], true);
    assert_eq!(json(&["monotone", "w-w", "1", "1"])["chi_check"], true);
    assert_eq!(json(&["monotone", "dirac-mp", "1", "2", "1"])["identity_check"], true);
    assert_eq!(json(&["fuss", "2"])["moments_match"], true);
    assert_eq!(json(&["euler", "3"])["e"], serde_json::json!(["1", "4", "1"]));
    assert_eq!(fcl(&["monotone", "w-w", "1"]).status.code(), Some(2));
}

#[test]
fn oeis_commands() {
    let v = json(&["oeis-match", "w*(1-w^2)"]);
    assert_eq!(v[0]["a_number"], "A001764");
    assert_eq!(v[0]["transform"], "aerated");
    let v = json(&["oeis-fetch", "A000108"]);
    assert_eq!(v["terms"][5], "42");
}

#[test]
fn regions_and_density_csv() {
    let o = fcl(&["region", "cg", "--n", "5", "--csv"]);
    let out = stdout(&o);
    assert!(out.starts_with("curve,kappa3,kappa4\n"));
    assert_eq!(out.lines().count(), 21);
    assert_eq!(json(&["region", "cg", "--at", "1/4:1/48"])["inside"], true);
    assert_eq!(json(&["region", "cg", "--at", "1:0"])["inside"], false);
    let o = fcl(&["region", "lb", "--b", "1", "--n", "3", "--csv"]);
    assert!(stdout(&o).starts_with("c,d\n"));
    let o = fcl(&["region", "deg3", "--c", "0", "--range", "-2:2", "--n", "5", "--csv"]);
    assert!(stdout(&o).starts_with("a,b\n"));
    assert_eq!(json(&["region", "r4", "1", "0"])["in_dist"], true);
    assert_eq!(json(&["region", "r3", "3", "1"])["rr0"], true);
    let o = fcl(&["density", "w/(1+w^2)", "--range", "-1:1", "--n", "3", "--csv"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "x,f");
    let f0: f64 = lines[2].split(',').nth(1).unwrap().parse().unwrap();
    assert!((f0 - 1.0 / std::f64::consts::PI).abs() < 1e-6);
}

#[test]
fn config_file_and_env() {
    let dir = std::env::temp_dir().join(format!("fcl-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("fcl.conf");
    std::fs::write(&conf, "network = off\nprecision = 1\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_fcl"))
        .args(["oeis-fetch", "A999999"])
        .env("FCL_CONFIG", &conf)
        .env("FCL_NETWORK", "off")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    std::fs::write(&conf, "colour = red\n").unwrap();
    assert_eq!(fcl(&["--config", conf.to_str().unwrap(), "moments", "w"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn expr_round_trip() {
    let v = json(&["expr", "w*(1-w)/(1+w)^3"]);
    assert_eq!(v["ast"], "w*(1 - w)/(1 + w)^3");
    assert_eq!(json(&["expr", v["ast"].as_str().unwrap()])["ast"], v["ast"]);
}
