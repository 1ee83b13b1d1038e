use std::path::PathBuf;
use std::process::Command;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_tanglekit"))
        .args(args)
        .env_remove("TANGLEKIT_CROSSING_CAP")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = run(&all);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}\n{err}"));
    (code, v)
}

fn instances(v: &Value) -> Vec<Value> {
    let fams = if v["results"].is_array() {
        &v["results"]
    } else {
        &v["results"]["families"]
    };
    fams.as_array()
        .unwrap()
        .iter()
        .flat_map(|f| f["instances"].as_array().unwrap().clone())
        .collect()
}

fn golden() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/golden")
}

#[test]
fn band_solve_case_four_verifies() {
    let (code, v) = json(&[
        "band-solve",
        "--m",
        "2",
        "--n",
        "2",
        "--w",
        "-1",
        "--k",
        "3",
        "--lk",
        "-3",
        "--verify",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "tanglekit.report/1");
    let fams = v["results"].as_array().unwrap();
    assert_eq!(fams.len(), 1);
    assert_eq!(fams[0]["theorem_case"], "band (4) k=m+n-1");
    let inst = instances(&v);
    assert_eq!(inst[0]["U_expr"], "(-1/3 + -1/3) o (-1,2,0)");
    assert_eq!(inst[0]["verified"], "verified");
}

#[test]
fn psi_solve_without_solution_exits_one() {
    let (code, v) = json(&["psi-solve", "--k", "3", "--product", "7_2"]);
    assert_eq!(code, 1);
    assert_eq!(v["reason"], "no solution");
    let (code, v) = json(&["psi-solve", "--k", "5", "--product", "11a343", "--verify"]);
    assert_eq!(code, 0);
    let inst = instances(&v);
    assert_eq!(inst.len(), 1);
    assert_eq!(inst[0]["U_fraction"], "-1/7");
    assert_eq!(inst[0]["verified"], "verified");
}

#[test]
fn eval_circle_product() {
    let (code, out, _) = run(&["eval", "(6/1) o (1,0)"]);
    assert_eq!(code, 0);
    assert!(out.contains("fraction: 6/7"), "{out}");
    let (code, v) = json(&["eval", "(-1/3 + -1/3)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["rational"], false);
    assert_eq!(run(&["eval", "-6/5"]).0, 0);
}

#[test]
fn move_equivalence_verb() {
    let (code, v) = json(&["move-equiv", "--p", "-1/3", "--r", "-4/3", "--to", "9/14"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["zero_form"], "(0, 9/5)");
    assert_eq!(v["results"]["compared_with"]["h"], -1);
    let (_, v) = json(&["move-equiv", "--p", "0", "--r", "2", "--to", "3"]);
    assert_eq!(v["results"]["compared_with"]["equivalent"], false);
    assert_eq!(run(&["move-equiv", "--p", "-1/3", "--r", "-1/3"]).0, 2);
}

#[test]
fn classify_and_closure() {
    let (code, v) = json(&["classify", "((-1/3 + -1/3) o (-1,2,0) + 0)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["link"], "b(15,4) 7_4");
    let (code, v) = json(&["classify", "6"]);
    assert_eq!(code, 0);
    let lks: Vec<i64> = v["results"]["orientations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["linking_number"].as_i64().unwrap())
        .collect();
    assert!(lks.contains(&3) && lks.contains(&-3));
    let (code, out, _) = run(&["closure", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("# crossings 3 free_loops 0"), "{out}");
}

#[test]
fn solve_verbs() {
    let (code, v) = json(&[
        "solve",
        "--substrate",
        "6",
        "--tw",
        "-25/6",
        "--product",
        "b(11,6)",
        "--verify",
    ]);
    assert_eq!(code, 0);
    assert_eq!(instances(&v)[0]["U_fraction"], "6/1");
    let (code, v) = json(&[
        "solve",
        "--k",
        "4",
        "--product",
        "9_5",
        "--h-min",
        "0",
        "--h-max",
        "0",
    ]);
    assert_eq!(code, 0);
    assert!(instances(&v).iter().all(|i| i["U_fraction"] == "8/1"));
    assert_eq!(run(&["solve", "--product", "7_2"]).0, 2);
    assert_eq!(run(&["solve", "--k", "3", "--product", "6/1"]).0, 2);
}

#[test]
fn xer_products_defaults_to_w_minus_one() {
    let (code, v) = json(&["xer-products", "--k", "5", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["input"]["w"], -1);
    let us: Vec<String> = instances(&v)
        .iter()
        .map(|i| i["U_expr"].as_str().unwrap().to_string())
        .collect();
    assert!(us.contains(&"(-1/5 + -1/5)".to_string()), "{us:?}");
    assert!(instances(&v).iter().all(|i| i["verified"] == "verified"));
    let (code, v) = json(&["xer-products", "--trefoil-hopf", "--w", "0", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(instances(&v)[0]["U_fraction"], "-3/2");
    assert_eq!(instances(&v)[0]["verified"], "verified");
    assert_eq!(run(&["xer-products", "--k", "0"]).0, 2);
}

#[test]
fn band_solve_outcomes() {
    let (code, v) = json(&[
        "band-solve",
        "--m",
        "2",
        "--n",
        "2",
        "--w",
        "0",
        "--k",
        "3",
        "--lk",
        "3",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "obstructed");
    assert_eq!(v["results"]["oracle"]["verdict"], "obstructed");
    let (code, v) = json(&[
        "band-solve",
        "--m",
        "2",
        "--n",
        "2",
        "--w",
        "0",
        "--k",
        "2",
        "--lk",
        "2",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "unknown");
    let (code, v) = json(&[
        "band-solve",
        "--m",
        "0",
        "--n",
        "2",
        "--w",
        "0",
        "--k",
        "3",
        "--lk",
        "-3",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["reason"], "unsupported");
    assert_eq!(
        run(&[
            "band-solve",
            "--m",
            "3",
            "--n",
            "3",
            "--w",
            "0",
            "--k",
            "2",
            "--lk",
            "-2"
        ])
        .0,
        1
    );
    assert_eq!(
        run(&["band-solve", "--m", "2", "--n", "2", "--w", "0", "--k", "3"]).0,
        2
    );
}

#[test]
fn gamma_pathway_verify() {
    let (_, v) = json(&["gamma", "--m", "1", "--n", "-1", "--p", "5", "--q", "8"]);
    assert_eq!(v["results"]["unknot"], true);
    let (_, v) = json(&["gamma", "--m", "2", "--n", "2", "--p", "1", "--q", "2"]);
    assert_eq!(v["results"]["unknot"], false);
    assert_eq!(
        run(&["gamma", "--m", "0", "--n", "2", "--p", "1", "--q", "2"]).0,
        2
    );

    let (code, v) = json(&["pathway", "--k", "3"]);
    assert_eq!(code, 0);
    let steps = v["results"].as_array().unwrap();
    assert_eq!(steps.len(), 6);
    assert_eq!(steps.iter().filter(|s| s["status"] == "solved").count(), 1);

    let hopf = [
        "verify",
        "--u",
        "3",
        "--p",
        "0",
        "--r",
        "-1",
        "--substrate",
        "trefoil",
    ];
    let (code, _) = json(&[&hopf[..], &["--product", "T(2,2,lk=1)", "--coherent"]].concat());
    assert_eq!(code, 0);
    let (code, v) = json(&[&hopf[..], &["--product", "5_2"]].concat());
    assert_eq!(code, 1);
    assert_eq!(v["status"], "failed");
}

#[test]
fn crossing_cap_exceeded_exits_three() {
    let (code, v) = json(&["classify", "15/4", "--cap", "3"]);
    assert_eq!(code, 3);
    assert_eq!(v["reason"], "cap-exceeded");
    let (code, v) = json(&["xer-products", "--k", "3", "--verify", "--cap", "4"]);
    assert_eq!(code, 0);
    assert!(instances(&v)
        .iter()
        .all(|i| i["verified"] == "cap-exceeded: unverified"));
}

#[test]
fn golden_corpus() {
    let g = golden();
    let (code, v) = json(&["report", "--corpus", g.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    assert!(v["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "pass"));

    let dir = std::env::temp_dir().join(format!("tanglekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let d = dir.to_str().unwrap();
    assert_eq!(run(&["report", "--corpus", d]).0, 2);
    assert_eq!(run(&["report", "--corpus", d, "--bless"]).0, 0);
    assert_eq!(run(&["report", "--corpus", d]).0, 0);
    let f = dir.join("psi_6cat.json");
    let text = std::fs::read_to_string(&f).unwrap().replace("-1/3", "-1/5");
    std::fs::write(&f, text).unwrap();
    let (code, v) = json(&["report", "--corpus", d]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "drift");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["xer-products", "--k", "4", "--verify"][..],
        &["classify", "(-1/3 + -1/5) + -1"],
        &["psi-solve", "--k", "4", "--product", "9_5"],
    ] {
        let a = json(args).1;
        let b = json(args).1;
        assert_eq!(a.to_string(), b.to_string());
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["eval", "(1/2 +"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["eval", "1", "--bogus"]).0, 2);
    assert_eq!(run(&["psi-solve", "--k", "3", "--product", "b(4,2)"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn fuzzed_argv_only_uses_contract_codes() {
    let verbs = [
        "eval",
        "closure",
        "classify",
        "move-equiv",
        "solve",
        "band-solve",
        "xer-products",
        "psi-solve",
        "gamma",
        "pathway",
        "verify",
        "report",
        "bogus",
    ];
    let flags = [
        "--m",
        "--n",
        "--w",
        "--k",
        "--lk",
        "--p",
        "--q",
        "--r",
        "--to",
        "--tw",
        "--u",
        "--substrate",
        "--product",
        "--verify",
        "--trefoil-hopf",
        "--h-min",
        "--h-max",
        "--denominator",
        "--corpus",
        "--cap",
        "--format",
        "--coherent",
    ];
    let values = [
        "0",
        "1",
        "-1",
        "2",
        "-3",
        "7",
        "1/0",
        "0/0",
        "-4/3",
        "9/5",
        "7_2",
        "7_4*",
        "b(15,4)",
        "T(2,6,lk=-3)",
        "(1/2 + -1/3)",
        "(3) o (1,2,0)",
        "((",
        "json",
        "text",
        "/nonexistent",
        "99999999999999999999",
        "x",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..150 {
        let mut argv = vec![verbs.choose(&mut rng).unwrap().to_string()];
        for _ in 0..rng.gen_range(0..6) {
            if rng.gen_bool(0.6) {
                argv.push(flags.choose(&mut rng).unwrap().to_string());
            }
            argv.push(values.choose(&mut rng).unwrap().to_string());
        }
        if argv.iter().any(|a| a == "--cap") {
            continue;
        }
        let args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let (code, _, err) = run(&args);
        assert!((0..=3).contains(&code), "{argv:?} -> {code}\n{err}");
        assert!(!err.contains("panicked"), "{argv:?}\n{err}");
    }
}
