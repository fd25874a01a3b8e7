use std::path::Path;
use std::process::{Command, Output};

fn freeq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeq"))
        .args(args)
        .output()
        .expect("run freeq")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn assert_golden(args: &[&str], name: &str) {
    let o = freeq(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), golden(name), "{args:?}");
}

#[test]
fn structured_goldens() {
    assert_golden(&["solve", "--w", "xxyy", "--u", "aabb"], "solve_xxyy_aabb.txt");
    assert_golden(&["solve", "--w", "XYxy", "--u", "ABab"], "solve_commutator.txt");
    assert_golden(&["solve", "--w", "xxyy", "--u", "aaaa"], "solve_xxyy_aaaa.txt");
    assert_golden(&["solve", "--w", "xxyy", "--u", "1"], "solve_xxyy_trivial.txt");
    assert_golden(&["solve", "--w", "xyxy", "--u", "abab"], "solve_power.txt");
    assert_golden(&["solve", "--w", "xxyyy", "--u", "aabbb"], "solve_rigid.txt");
    assert_golden(&["classify", "--w", "xYxy"], "classify_xYxy.txt");
    assert_golden(&["brute", "--w", "XYxy", "--u", "ABab", "--ball", "2"], "brute_commutator_2.txt");
    assert_golden(&["certify", "--w", "xxyy", "--u", "aabb", "--ball", "6"], "certify_xxyy_aabb_6.txt");
    assert_golden(&["demo-two-level", "--n", "1", "--m", "0", "--verify"], "demo_1_0.txt");
}

#[test]
fn structured_output_is_deterministic() {
    for args in [
        &["solve", "--w", "XYxy", "--u", "ABab"][..],
        &["certify", "--w", "XYxy", "--u", "ABab", "--ball", "4"][..],
        &["brute", "--w", "xxyy", "--u", "aaaa", "--ball", "5", "--jobs", "3"][..],
        &["gen", "--w", "xYxy", "--u", "aBab", "--sweep", "1"][..],
    ] {
        let a = freeq(args);
        let b = freeq(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let serial = freeq(&["brute", "--w", "XYxy", "--u", "ABab", "--ball", "4", "--jobs", "1"]);
    let parallel = freeq(&["brute", "--w", "XYxy", "--u", "ABab", "--ball", "4", "--jobs", "4"]);
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn verify_prints_rank() {
    let o = freeq(&["verify", "--w", "XYxy", "--u", "ABab", "--pair", "a,b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true rank=2\n");
    let o = freeq(&["verify", "--w", "xxyy", "--u", "aaaa", "--pair", "aaa,A"]);
    assert_eq!(stdout(&o), "true rank=1\n");
    let o = freeq(&["verify", "--w", "xxyy", "--u", "aabb", "--pair", "b,a"]);
    assert_eq!(stdout(&o), "false rank=2\n");
}

#[test]
fn gen_round_trips_through_verify() {
    let instances = [
        ("xxyy", "aabb"),
        ("XYxy", "ABab"),
        ("xxyyy", "aabbb"),
        ("xxyy", "aaaa"),
        ("xxyy", "1"),
        ("xyxy", "abab"),
        ("xY", "ab"),
    ];
    for (w, u) in instances {
        let o = freeq(&["gen", "--w", w, "--u", u, "--sweep", "1"]);
        assert_eq!(o.status.code(), Some(0), "{w}={u}: {}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        let lines: Vec<&str> = text.lines().filter_map(|l| l.strip_prefix("solution: ")).collect();
        assert!(!lines.is_empty(), "{w}={u}");
        for pair in lines {
            let v = freeq(&["verify", "--w", w, "--u", u, "--pair", pair]);
            assert!(stdout(&v).starts_with("true "), "{w}={u}: {pair}");
        }
    }
    let o = freeq(&["gen", "--w", "xxyy", "--u", "aabb", "--param", "item2:i=1,n=-1,m=2", "--param", "item1:n=3"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("solution: ")).count(), 2);
}

#[test]
fn demo_family() {
    let o = freeq(&["demo-two-level", "--n", "-2", "--m", "3", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified: true\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(freeq(&["solve", "--w", "xq", "--u", "a"]).status.code(), Some(1));
    assert_eq!(freeq(&["solve", "--w", "xx", "--u", "aa"]).status.code(), Some(1));
    assert_eq!(freeq(&["solve", "--w", "xy", "--u", "c"]).status.code(), Some(1));
    assert_eq!(freeq(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(freeq(&["solve", "--w", "xy"]).status.code(), Some(1));
    assert_eq!(freeq(&["solve", "--w", "xy", "--u", "a", "--orbit-cap", "0"]).status.code(), Some(1));
    assert_eq!(freeq(&["gen", "--w", "xxyy", "--u", "aabb", "--param", "primitive:z=a"]).status.code(), Some(1));
    assert_eq!(freeq(&["--help"]).status.code(), Some(0));
    let o = freeq(&["classify", "--w", "xxyy", "--hnn-budget", "1"]);
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
    assert!(stdout(&o).contains("case: Unresolved"));
    for w in ["xxyy", "xxyyy"] {
        let o = freeq(&["solve", "--w", w, "--u", "ab", "--orbit-cap", "2"]);
        assert_eq!(o.status.code(), Some(2), "{w}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("formula: unresolved"));
    }
}

#[test]
fn output_file_and_human_format() {
    let dir = std::env::temp_dir().join(format!("freeq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.txt");
    let o = freeq(&["solve", "--w", "XYxy", "--u", "ABab", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("solve_commutator.txt"));
    std::fs::remove_dir_all(&dir).unwrap();
    let o = freeq(&["solve", "--w", "XYxy", "--u", "ABab", "--format", "human"]);
    assert!(stdout(&o).contains("minimal rank 2 solution"));
}
