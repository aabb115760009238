use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn gburn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gburn"))
        .args(args)
        .env_remove("GBURN_THREADS")
        .env_remove("GBURN_MEMORY_CAP")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn core_fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name);
    p.to_string_lossy().into_owned()
}

/// CSV cells other than the time columns.
fn untimed(row: &str) -> Vec<String> {
    row.split(',')
        .enumerate()
        .filter(|(i, _)| ![5, 6, 8, 10].contains(i))
        .map(|(_, c)| c.to_string())
        .collect()
}

#[test]
fn solve_karate_csv_row() {
    let out = gburn(&["solve", &core_fixture("karate.txt"), "--strategy", "grp", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "name,n,m,l,s0,t_bff,t_bfs,gr_size,gr_time,grp_size,grp_time");
    assert_eq!(untimed(lines[1]), ["karate", "34", "78", "2", "4", "3", "3"]);
    let cells: Vec<&str> = lines[1].split(',').collect();
    for t in [5, 6, 8, 10] {
        let (whole, frac) = cells[t].split_once('.').unwrap();
        assert!(whole.parse::<u64>().is_ok() && frac.len() == 3, "{}", cells[t]);
    }
}

#[test]
fn solve_report_and_gr_csv() {
    let out = gburn(&["solve", "gen:grid:10", "--strategy", "gr"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("length: 7"), "{text}");
    assert!(text.contains("bounds: l = 4, h = 7, s0 = 8"));

    let out = gburn(&["solve", "gen:grid:10", "--strategy", "gr", "--csv", "--name", "10x10"]);
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    assert_eq!(untimed(&row), ["10x10", "100", "180", "4", "8", "7", "-"]);
}

#[test]
fn seeded_rows_are_reproducible() {
    let run = || {
        let out = gburn(&["solve", "gen:grid:8", "--tie", "seed:42", "--csv", "--threads", "1"]);
        assert!(out.status.success());
        untimed(stdout(&out).lines().nth(1).unwrap())
    };
    assert_eq!(run(), run());
}

#[test]
fn exact_path() {
    let out = gburn(&["exact", "gen:path:25"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("b=5"));
}

#[test]
fn exact_budget_exit_code() {
    let out = gburn(&["exact", "gen:grid:6", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("known bounds"));
}

#[test]
fn validate_and_simulate_p4() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = dir.path().join("p4.txt");
    fs::write(&p4, "0 1\n1 2\n2 3\n").unwrap();
    let p4 = p4.to_str().unwrap();

    let out = gburn(&["validate", p4, "--seq", "1,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "true\n");

    let seq = dir.path().join("seq.txt");
    fs::write(&seq, "0,1\n").unwrap();
    let out = gburn(&["validate", p4, "--seq", seq.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("false\nvertex 2 is not burned"), "{text}");

    let out = gburn(&["simulate", p4, "--seq", "v1,v3"]);
    assert_eq!(stdout(&out), "1: 1\n2: 0 2 3\ncomplete: true\n");

    let out = gburn(&["validate", p4, "--seq", "1,7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn emit_matches_golden_and_decodes() {
    let dir = tempfile::tempdir().unwrap();
    let lp = dir.path().join("m.lp");
    let out = gburn(&["emit-ilp", "gen:path:4", "--model", "cmcp", "--param", "2", "--out", lp.to_str().unwrap()]);
    assert!(out.status.success());
    let golden = fs::read_to_string(core_fixture("p4-cmcp-2.lp")).unwrap();
    assert_eq!(fs::read_to_string(&lp).unwrap(), golden);

    let sol = dir.path().join("m.sol");
    fs::write(&sol, "# objective 4\nx_1_4 1\nx_2_2 1\nb_1 1\nb_2 1\nb_3 1\nb_4 1\n").unwrap();
    let out = gburn(&["decode", "gen:path:4", "--model", "cmcp", "--param", "2", "--sol", sol.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("sequence: 1,3\n"));

    fs::write(&sol, "x_1_1 1\nx_2_1 1\n").unwrap();
    let out = gburn(&["decode", "gen:path:4", "--model", "cmcp", "--param", "2", "--sol", sol.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let out = gburn(&["emit-ilp", &core_fixture("karate.txt"), "--model", "prop", "--param", "4"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("\\ burning prop model: n = 34, U = 4"));
}

#[test]
fn gen_writes_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("g.txt");
    let out = gburn(&["gen", "grid", "--k", "3", "--out", f.to_str().unwrap()]);
    assert!(out.status.success());
    let text = fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("9 12\n0 1\n0 3\n"));
    let out = gburn(&["exact", f.to_str().unwrap(), "--format", "fixture"]);
    assert_eq!(stdout(&out).lines().next(), Some("b=3"));

    let out = gburn(&["gen", "cycle", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_survives_failures() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("broken.txt"), "0 1\n2 3\n").unwrap();
    let manifest = dir.path().join("m.manifest");
    fs::write(
        &manifest,
        "# test\nk ".to_string() + &core_fixture("karate.txt") + "\nbroken broken.txt\nmissing nowhere.txt\ng gen:grid:4\n",
    )
    .unwrap();
    let csv = dir.path().join("out.csv");
    let out = gburn(&["bench", manifest.to_str().unwrap(), "--out", csv.to_str().unwrap(), "--threads", "1"]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(untimed(rows[1]), ["k", "34", "78", "2", "4", "3", "3"]);
    assert_eq!(rows[2], "broken,-,-,-,-,-,-,-,-,-,-");
    assert_eq!(rows[3], "missing,-,-,-,-,-,-,-,-,-,-");
    assert!(rows[4].starts_with("g,16,24,"));

    fs::write(&manifest, "only-a-name\n").unwrap();
    let out = gburn(&["bench", manifest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_time_limit_leaves_dashes() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.manifest");
    fs::write(&manifest, "big gen:grid:40\n").unwrap();
    let out = gburn(&["bench", manifest.to_str().unwrap(), "--strategy", "grp", "--time-limit", "0.001"]);
    assert!(out.status.success());
    let row = stdout(&out).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("big,1600,3120,"));
    assert!(row.ends_with(",-,-,-,-"), "{row}");
}

#[test]
fn invalid_arguments_exit_1() {
    assert_eq!(gburn(&["solve", "gen:grid:3", "--tie", "random"]).status.code(), Some(1));
    assert_eq!(gburn(&["solve", "gen:star:3"]).status.code(), Some(1));
    assert_eq!(gburn(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gburn(&["--help"]).status.code(), Some(0));
}

#[test]
fn disconnected_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("two.txt");
    fs::write(&f, "0 1\n1 2\n5 6\n").unwrap();
    let f = f.to_str().unwrap();
    let out = gburn(&["exact", f]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
    let out = gburn(&["exact", f, "--largest-component"]);
    assert_eq!(stdout(&out).lines().next(), Some("b=2"));
}

#[test]
fn env_overrides() {
    let out = Command::new(env!("CARGO_BIN_EXE_gburn"))
        .args(["solve", "gen:grid:6", "--csv"])
        .env("GBURN_MEMORY_CAP", "0")
        .env("GBURN_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let on_demand = untimed(stdout(&out).lines().nth(1).unwrap());
    let full = untimed(stdout(&gburn(&["solve", "gen:grid:6", "--csv"])).lines().nth(1).unwrap());
    assert_eq!(on_demand, full);
}
