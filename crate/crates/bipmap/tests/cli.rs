use std::process::{Command, Output};

use bipmap::dto::{CensusTable, ClosedForm, KernelDump, Report, SeriesDump, Sign, Status};

fn bipmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipmap")).args(args).output().expect("run bipmap")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_rows() {
    let o = bipmap(&["census", "--n", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "g=1, mu=[3], count=2"));
    let o = bipmap(&["census", "--n", "3", "--format", "csv"]);
    assert!(stdout(&o).lines().any(|l| l == "1,[3],2"));
    let o = bipmap(&["census", "--n", "4"]);
    let t: CensusTable = serde_json::from_slice(&o.stdout).unwrap();
    // transitive pairs in S_4
    assert_eq!(t.labelled.iter().map(|r| r.count).sum::<u64>(), 426);
    assert!(t.labelled.iter().all(|r| r.mu.windows(2).all(|w| w[0] >= w[1])));
    assert_eq!(serde_json::from_str::<CensusTable>(&serde_json::to_string(&t).unwrap()).unwrap(), t);
}

#[test]
fn worker_count_does_not_change_output() {
    let a = Command::new(env!("CARGO_BIN_EXE_bipmap")).args(["census", "--n", "5"]).env("BIPMAP_WORKERS", "1").output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_bipmap")).args(["census", "--n", "5"]).env("BIPMAP_WORKERS", "3").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(bipmap(&["census", "--n", "x"]).status.code(), Some(2));
    assert_eq!(bipmap(&["census", "--n", "9"]).status.code(), Some(2));
    assert_eq!(bipmap(&["series", "--g", "1", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(bipmap(&["verify", "--suite", "everything"]).status.code(), Some(2));
    assert_eq!(bipmap(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn structural_failure_exits_1() {
    // L_1 has logarithms, so no rational fit exists
    let o = bipmap(&["closed-form", "--g", "1", "--target", "L", "--method", "fit"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("logarithmic"));
}

#[test]
fn genus_one_closed_form() {
    let o = bipmap(&["closed-form", "--g", "1", "--target", "F"]);
    assert_eq!(o.status.code(), Some(0));
    let c: ClosedForm = serde_json::from_slice(&o.stdout).unwrap();
    let t = c.terms.iter().find(|t| t.alpha.is_empty() && t.beta.is_empty() && (t.a, t.b, t.c) == (1, 0, Some(5))).unwrap();
    assert_eq!(t.sign, Some(Sign::Plus));
    assert_eq!((t.coeff_num.as_str(), t.coeff_den.as_str()), ("1", "2"));
    assert_eq!(c.terms.len(), 10);
    let back = c.to_f().unwrap();
    assert_eq!(ClosedForm::from_f(&back), c);
    let fitted: ClosedForm = serde_json::from_slice(&bipmap(&["closed-form", "--g", "1", "--method", "fit"]).stdout).unwrap();
    assert_eq!(fitted, c);
    let tex = stdout(&bipmap(&["closed-form", "--g", "1", "--format", "latex"]));
    assert!(tex.contains("\\frac{1}{32}"));
}

#[test]
fn genus_one_unrooted_has_logs() {
    let c: ClosedForm = serde_json::from_slice(&bipmap(&["closed-form", "--g", "1", "--target", "L"]).stdout).unwrap();
    assert!(c.terms.is_empty());
    assert_eq!(c.log_eta.unwrap().0, bipmap_core::rational::qf(1, 24));
    assert_eq!(c.log_zeta.unwrap().0, bipmap_core::rational::qf(1, 8));
}

#[test]
fn series_dump() {
    let o = bipmap(&["series", "--g", "2", "--target", "L", "--N", "6"]);
    let d: SeriesDump = serde_json::from_slice(&o.stdout).unwrap();
    let t = d.terms.iter().find(|t| t.order == 5 && t.mu == [5]).unwrap();
    assert_eq!(t.coeff.0, bipmap_core::rational::qf(8, 5));
    let csv = stdout(&bipmap(&["series", "--g", "0", "--N", "3", "--format", "csv"]));
    assert!(csv.starts_with("order,cat,mu,coeff\n"));
    let zu: SeriesDump = serde_json::from_slice(&bipmap(&["series", "--g", "1", "--chart", "zu", "--N", "8"]).stdout).unwrap();
    assert!(zu.terms.iter().all(|t| !t.mu.contains(&1)));
}

#[test]
fn kernel_dump() {
    let o = bipmap(&["kernel", "--K", "3"]);
    let d: KernelDump = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(d.n_degree, 4);
    assert!(d.antisymmetric && d.palindromic);
    assert_eq!(serde_json::from_str::<KernelDump>(&serde_json::to_string(&d).unwrap()).unwrap(), d);
    let text = stdout(&bipmap(&["kernel", "--format", "text"]));
    assert!(text.starts_with("K = 4\n"));
}

#[test]
fn verify_single_suites_deterministic() {
    let run = |seed: &str| {
        let o = bipmap(&["verify", "--suite", "genus0,kernel", "--seed", seed]);
        assert_eq!(o.status.code(), Some(0));
        let r: Report = serde_json::from_slice(&o.stdout).unwrap();
        assert!(r.checks.iter().all(|c| c.status == Status::Pass));
        r.checks.into_iter().map(|c| (c.name, c.status, c.detail)).collect::<Vec<_>>()
    };
    assert_eq!(run("7"), run("7"));
}
