use std::process::{Command, Output};

fn bellgamma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellgamma"))
        .args(args)
        .env_remove("BELLGAMMA_DIGITS")
        .output()
        .expect("spawn bellgamma")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_rows(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = bellgamma(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn approx_examples() {
    for (a, mu, n, p, q) in [("3", "1", "2", "13/2", "11"), ("2", "1", "1", "1", "2"), ("3", "2", "1", "18", "2")] {
        let v = json_rows(&["approx", "--a", a, "--mu", mu, "--n", n]);
        let row = &v[0];
        let (num, den) = p.split_once('/').unwrap_or((p, "1"));
        assert_eq!(row["p_num"], num, "a={a} mu={mu} n={n}");
        assert_eq!(row["p_den"], den);
        assert_eq!(row["q"], q);
    }
    let o = bellgamma(&["approx", "--a", "3", "--mu", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("13/2") && text.contains("11"), "{text}");
}

#[test]
fn table_rows_decrease() {
    let o = bellgamma(&["table", "--a", "3", "--mu", "1", "--n", "10:100:10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a,mu,n,p_num,p_den,q,err_log10,predicted_log10");
    assert_eq!(lines.len(), 11);
    let errs: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(6).unwrap().parse().unwrap())
        .collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
}

#[test]
fn first_a2_row_is_gamma() {
    let v = json_rows(&["table", "--a", "2", "--mu", "1", "--n", "0:2"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    let e = v[0]["err_log10"].as_f64().unwrap();
    let gamma = 0.577_215_664_901_532_9_f64;
    assert!((e - gamma.log10()).abs() < 1e-5, "{e}");
}

#[test]
fn output_is_deterministic_and_out_file_matches() {
    let args = ["table", "--a", "4", "--mu", "2", "--n", "5:40:5"];
    let first = bellgamma(&args);
    let second = bellgamma(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = bellgamma(&with_out);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(bellgamma(&["approx", "--a", "9", "--mu", "1", "--n", "3"]).status.code(), Some(2));
    assert_eq!(bellgamma(&["approx", "--a", "3", "--mu", "3", "--n", "3"]).status.code(), Some(2));
    assert_eq!(bellgamma(&["table", "--a", "3", "--mu", "1", "--n", "9:1"]).status.code(), Some(2));
    assert_eq!(bellgamma(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bellgamma(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        bellgamma(&["approx", "--a", "3", "--mu", "1", "--n", "100", "--digits", "20"]).status.code(),
        Some(3)
    );
}

#[test]
fn digits_env_is_read() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_bellgamma"))
            .args(["constants", "--zmax", "2"])
            .env("BELLGAMMA_DIGITS", v)
            .output()
            .unwrap()
    };
    let short = run("20");
    let long = run("60");
    assert!(short.status.success() && long.status.success());
    let width = |o: &Output| stdout(o).lines().next().unwrap().len();
    assert!(width(&long) > width(&short) + 30);
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        ["verify", "--suite", "lemma1", "--a", "4", "--nmax", "20"],
        ["verify", "--suite", "integrality", "--a", "5", "--nmax", "100"],
    ] {
        let o = bellgamma(&args);
        let text = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{text}");
        assert!(!text.is_empty());
        assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    }
}

#[test]
fn asymptotics_and_roots() {
    let o = bellgamma(&["asymptotics", "--a", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("theorem-linear-form: 3/2*n^(1/2)"), "{text}");

    let o = bellgamma(&["roots", "--a", "3", "--u", "-1", "--n", "1e6", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.to_string().contains("re"));
}
