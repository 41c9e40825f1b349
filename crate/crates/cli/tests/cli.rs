use std::io::Write;
use std::process::{Command, Output, Stdio};

use kpsi_core::QSymElement;

const V: &str = r#"{"n":3,"covers":[[3,2],[1,2]]}"#;
const FENCE: &str = r#"{"n":5,"covers":[[1,4],[2,4],[2,5],[3,5]]}"#;
const TWO_CHAINS: &str = r#"{"n":5,"covers":[[1,2],[3,4],[4,5]]}"#;
const FIVE: &str = r#"{"n":5,"covers":[[1,3],[3,5],[2,4],[1,4],[2,5]]}"#;

fn kpsi(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kpsi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(s) = stdin {
        pipe.write_all(s.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = kpsi(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(args: &[&str], stdin: Option<&str>) -> i32 {
    kpsi(args, stdin).status.code().unwrap()
}

#[test]
fn kpw_in_each_basis() {
    assert_eq!(ok(&["kpw", "-"], Some(V)), "-1*psi[3] + 2*psi[1,1,1]");
    assert_eq!(
        ok(&["kpw", "-", "--basis", "L"], Some(V)),
        "1*L[1,2] + 1*L[2,1]"
    );
    assert_eq!(
        ok(
            &["kpw", "-", "--basis", "L"],
            Some(r#"{"n":1,"covers":[]}"#)
        ),
        "1*L[1]"
    );
    let m = ok(&["kpw", "-", "--basis", "M", "--verify"], Some(FIVE));
    assert!(m.contains("M["));
}

#[test]
fn kpw_lists_pointed_partitions() {
    let out = ok(&["kpw", "-", "--list"], Some(V));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "-1*psi[3] + 2*psi[1,1,1]");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines.iter().filter(|l| l.starts_with("- ")).count(), 2);
}

#[test]
fn kpw_json_parses_back() {
    let out = ok(&["kpw", "-", "--format", "json"], Some(FIVE));
    let f = QSymElement::from_json(&out).unwrap();
    let text: QSymElement = ok(&["kpw", "-"], Some(FIVE)).parse().unwrap();
    assert!(f.same_representation(&text));
}

#[test]
fn ktilde_keeps_shortest_terms() {
    assert_eq!(
        ok(&["ktilde", "-", "--verify"], Some(FIVE)),
        "1*psi[1,4] + 1*psi[2,3]"
    );
}

#[test]
fn zigzag_counts() {
    assert_eq!(ok(&["zigzag", "-", "--verify"], Some(FENCE)), "8");
    assert_eq!(ok(&["zigzag", "-"], Some(r#"{"n":1,"covers":[]}"#)), "1");
    assert_eq!(ok(&["zigzag", "-"], Some(r#"{"n":2,"covers":[]}"#)), "0");
    let listed = ok(&["zigzag", "-", "--list"], Some(FENCE));
    assert_eq!(listed.lines().count(), 9);
}

#[test]
fn irreducibility_verdicts() {
    let fence = ok(&["irreducible", "-"], Some(FENCE));
    assert!(fence.starts_with("irreducible\n"), "{fence}");
    let chains = ok(&["irreducible", "-"], Some(TWO_CHAINS));
    assert!(chains.starts_with("reducible [2,3]"), "{chains}");
}

#[test]
fn series_parallel_classes() {
    let out = ok(&["sp-distinguish", "4"], None);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        [
            "n=1 classes=1 distinct=1",
            "n=2 classes=2 distinct=2",
            "n=3 classes=5 distinct=5",
            "n=4 classes=15 distinct=15",
        ]
    );
}

#[test]
fn murnaghan_nakayama() {
    assert_eq!(
        ok(&["mn", "-", "--verify"], Some(r#"{"lambda":[2,1]}"#)),
        "-1*psi[3] + 2*psi[1,1,1]"
    );
    assert_eq!(ok(&["mn", "-"], Some(r#"{"lambda":[1]}"#)), "1*psi[1]");
    assert_eq!(
        ok(
            &["mn", "-", "--min1"],
            Some(r#"{"lambda":[6,3,3,2],"mu":[2,2,1]}"#)
        ),
        "-1"
    );
    let chi = ok(&["mn", "-", "--chi"], Some(r#"{"lambda":[2,1]}"#));
    assert!(chi.lines().any(|l| l == "chi[3] = -1"), "{chi}");
    assert!(chi.lines().any(|l| l == "chi[1,1,1] = 2"), "{chi}");
    assert_eq!(
        ok(&["mn", "-", "--p"], Some(r#"{"lambda":[2,1]}"#)),
        "1/3*p[1,1,1] - 1/3*p[3]"
    );
}

#[test]
fn algebra_commands() {
    assert_eq!(
        ok(&["convert", "M[2]", "--to", "psi", "--verify"], None),
        "2*psi[2]"
    );
    assert_eq!(
        ok(&["functional", "max1", "psi[3,4,2,1]", "--verify"], None),
        "4/189"
    );
    assert_eq!(ok(&["functional", "min1", "psi[3,4,2,1]"], None), "0");
    let w = ok(&["auto", "omegarho", "psi[3,4,2,1]", "--verify"], None);
    assert!(w.contains("-4/189*psi[10]"), "{w}");
    assert_eq!(
        ok(&["product", "psi[1]", "psi[2]", "--verify"], None),
        "1*psi[1,2] + 1*psi[2,1]"
    );
    assert_eq!(
        ok(&["coproduct", "psi[2,1]", "--graded", "[2,1]"], None),
        "1*psi[2] ⊗ psi[1]"
    );
    let d = ok(&["coproduct", "L[2,1]", "--verify"], None);
    assert_eq!(d.matches('⊗').count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["convert", "M[2", "--to", "psi"], None), 2);
    assert_eq!(code(&["kpw", "/nonexistent/poset.json"], None), 2);
    assert_eq!(code(&["kpw", "-"], Some("{not json")), 2);
    assert_eq!(code(&["nonsense"], None), 2);
    assert_eq!(code(&["sp-distinguish", "8", "--guard", "7"], None), 3);
    assert_eq!(code(&["zigzag", "-"], Some(V)), 4);
    assert_eq!(code(&["functional", "min1", "psi[1] + psi[2]"], None), 4);
}
