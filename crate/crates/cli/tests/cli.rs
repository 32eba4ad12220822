use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forestbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const CLAW: &str = "4 3\n0 1\n0 2\n0 3\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn bound_values() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4", K4);
    let claw = write(&dir, "claw", CLAW);
    let c5 = write(&dir, "c5", C5);

    let o = run(&["bound", s(&k4), "flin"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("bound=2/1 "));

    let o = run(&["bound", s(&claw), "fkeps:k=2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("eps=1/6"), "{out}");
    assert!(out.contains("bound=3/1 "), "{out}");

    let o = run(&["bound", s(&c5), "star"]);
    let out = stdout(&o);
    assert!(out.contains("eps=1/10"), "{out}");
    assert!(out.contains("bound=3/1 "), "{out}");
}

#[test]
fn construct_then_verify() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5", C5);
    let k4 = write(&dir, "k4", K4);
    let cert = dir.path().join("c5.cert");

    let o = run(&["construct", s(&c5), "--class", "star", "--out", s(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict=pass size=3"));

    let o = run(&["verify", s(&c5), s(&cert)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict=pass"));

    // Wrong graph for this certificate.
    assert_eq!(run(&["verify", s(&k4), s(&cert)]).status.code(), Some(3));

    // Tampered: add a vertex that closes the cycle.
    let text = fs::read_to_string(&cert).unwrap();
    let bad: String = text
        .lines()
        .map(|l| {
            if l.starts_with("vertices=") {
                "vertices=0 1 2 3 4".into()
            } else {
                l.to_string()
            }
        })
        .map(|l| {
            if l.starts_with("size=") {
                "size=5".into()
            } else {
                l
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let bad_cert = write(&dir, "bad.cert", &bad);
    assert_eq!(
        run(&["verify", s(&c5), s(&bad_cert)]).status.code(),
        Some(2)
    );
}

#[test]
fn labeled_construction() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g");
    let p = dir.path().join("p");
    let o = run(&["gen", "fig1:p3ab", "--partition-out", s(&p)]);
    assert_eq!(o.status.code(), Some(0));
    fs::write(&g, o.stdout).unwrap();
    let o = run(&["construct", s(&g), "--class", "abc", "--partition", s(&p)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict=pass size=2 bound=2/1"));

    assert_eq!(
        run(&["construct", s(&g), "--class", "abc"]).status.code(),
        Some(3)
    );
}

#[test]
fn config_errors_exit_3() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4", K4);
    let broken = write(&dir, "broken", "3 1\n0 7\n");
    assert_eq!(run(&["bound", s(&k4), "bogus"]).status.code(), Some(3));
    assert_eq!(run(&["bound", s(&broken), "flin"]).status.code(), Some(3));
    assert_eq!(
        run(&["bound", "/nonexistent/graph", "flin"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["gen", "nosuch:n=3"]).status.code(), Some(3));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(3));
    assert_eq!(run(&["harness", "nosuch"]).status.code(), Some(3));
}

#[test]
fn gen_and_exact() {
    let o = run(&["gen", "hnk:n=2,k=2"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "h", &stdout(&o));
    assert!(stdout(&o).starts_with("8 "));
    let o = run(&["exact", s(&g), "--class", "caterpillar:k=2"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).starts_with("alpha=6"));

    let a = stdout(&run(&["gen", "gnp:n=20,p=0.3,seed=9"]));
    let b = stdout(&run(&["gen", "gnp:n=20,p=0.3,seed=9"]));
    assert_eq!(a, b);
}

#[test]
fn harness_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for (out, threads) in [(&a, "1"), (&b, "4")] {
        let o = Command::new(env!("CARGO_BIN_EXE_forestbound"))
            .args([
                "harness",
                "random-bounds",
                "--seed",
                "5",
                "--count",
                "20",
                "--out",
                s(out),
            ])
            .env("FORESTBOUND_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
    }
    let a = fs::read_to_string(a).unwrap();
    assert_eq!(a, fs::read_to_string(b).unwrap());
    assert!(a.starts_with("suite=random-bounds seed=5 "));
    assert!(a.contains("failures=0"));
}
