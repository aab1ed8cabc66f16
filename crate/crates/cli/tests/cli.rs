use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use octa_core::fixtures;
use octa_core::io::{parse_xpc, write_off};

fn octa(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octa"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn octa")
}

fn write_fixture(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn subdivide_octahedron_with_full_verification() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "octahedron.off", &write_off(&fixtures::octahedron()));
    let o = octa(
        &[
            "subdivide",
            "octahedron.off",
            "--out",
            "o.xpc",
            "--verify",
            "full",
            "--report",
            "r.tsv",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = parse_xpc(&std::fs::read_to_string(dir.path().join("o.xpc")).unwrap()).unwrap();
    assert_eq!(c.cells().len(), 92);
    let report = std::fs::read_to_string(dir.path().join("r.tsv")).unwrap();
    for line in report.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 3, "{line}");
        assert_eq!(fields[1], "pass", "{line}");
    }
    assert!(report.contains("pairwise_intersection\tpass"));

    let v = octa(
        &["verify", "o.xpc", "--against", "octahedron.off", "--level", "full"],
        dir.path(),
    );
    assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
}

#[test]
fn unbalanced_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "tetrahedron.off", &write_off(&fixtures::tetrahedron()));
    let o = octa(&["subdivide", "tetrahedron.off"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotBalanced"));
}

#[test]
fn malformed_input_exits_1_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "malformed.off", "OFF\n4 4 0\n0 0 0\n1 0 0\n0 1 zero\n");
    let o = octa(&["subdivide", "malformed.off"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
    let missing = octa(&["subdivide", "nope.off"], dir.path());
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn search_cap_from_environment_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "hex.off", &write_off(&fixtures::bipyramid(3)));
    let o = Command::new(env!("CARGO_BIN_EXE_octa"))
        .args(["subdivide", "hex.off"])
        .current_dir(dir.path())
        .env("OCTA_SEARCH_CAP", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert!(stderr(&o).contains("SearchExhausted"));
}

#[test]
fn references() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["schlegel24", "tetra23"] {
        let out = format!("{name}.xpc");
        let o = octa(&["ref", name, "--out", &out], dir.path());
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let c = parse_xpc(&std::fs::read_to_string(dir.path().join(&out)).unwrap()).unwrap();
        assert_eq!(c.cells().len(), 23);
        assert_eq!(c.boundary().len(), 8);
    }
    let c = parse_xpc(&std::fs::read_to_string(dir.path().join("schlegel24.xpc")).unwrap()).unwrap();
    assert_eq!(c.type_census(), [8, 8, 6, 1]);
    assert_eq!(octa(&["ref", "nosuch"], dir.path()).status.code(), Some(1));
}

#[test]
fn tetra23_is_not_proper_against_the_tetrahedron() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "tetrahedron.off", &write_off(&fixtures::tetrahedron()));
    assert_eq!(
        octa(&["ref", "tetra23", "--out", "t.xpc"], dir.path()).status.code(),
        Some(0)
    );
    let v = octa(&["verify", "t.xpc", "--against", "tetrahedron.off"], dir.path());
    assert_eq!(v.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&v.stdout).contains("proper\tfail"));
    // on its own the complex is valid
    assert_eq!(
        octa(&["verify", "t.xpc", "--level", "full"], dir.path()).status.code(),
        Some(0)
    );
}

#[test]
fn swapped_pairing_is_named() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        octa(&["ref", "schlegel24", "--out", "s.xpc"], dir.path()).status.code(),
        Some(0)
    );
    let text = std::fs::read_to_string(dir.path().join("s.xpc")).unwrap();
    let cells_at = text.lines().position(|l| l.starts_with("cells")).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut t: Vec<&str> = lines[cells_at + 1].split(' ').collect();
    t.swap(1, 2);
    lines[cells_at + 1] = t.join(" ");
    // drop the boundary block, which no longer matches
    let b = lines.iter().position(|l| l.starts_with("boundary")).unwrap();
    lines.truncate(b);
    std::fs::write(dir.path().join("bad.xpc"), lines.join("\n") + "\n").unwrap();
    let v = octa(&["verify", "bad.xpc"], dir.path());
    assert_eq!(v.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&v.stdout).contains("cells_certified\tfail\tis_cross_polytope fails for cells 0"));
}

#[test]
fn gen_bipyramids() {
    let dir = tempfile::tempdir().unwrap();
    for (k, f0) in [(2, 6), (3, 8), (5, 12)] {
        let out = format!("b{k}.off");
        assert_eq!(
            octa(
                &["gen", "bipyramid2k", "--k", &k.to_string(), "--out", &out],
                dir.path()
            )
            .status
            .code(),
            Some(0)
        );
        let p = octa_core::io::parse_off(&std::fs::read_to_string(dir.path().join(&out)).unwrap()).unwrap();
        assert_eq!(p.vertices().len(), f0);
        assert!(octa_core::three_color(&p).is_ok());
    }
    assert_eq!(
        octa(&["gen", "bipyramid2k", "--k", "1"], dir.path()).status.code(),
        Some(1)
    );
    assert_eq!(octa(&["gen", "prism", "--k", "3"], dir.path()).status.code(), Some(1));
}

#[test]
fn export_obj() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        octa(&["ref", "schlegel24", "--out", "s.xpc"], dir.path()).status.code(),
        Some(0)
    );
    let o = octa(&["export", "s.xpc", "--out", "s.obj"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let obj = std::fs::read_to_string(dir.path().join("s.obj")).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 8 * 23);
    write_fixture(dir.path(), "junk.xpc", "xpc 1\nvertices two\n");
    let bad = octa(&["export", "junk.xpc", "--out", "j.obj"], dir.path());
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("line 2"));
}

#[test]
fn usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(octa(&[], dir.path()).status.code(), Some(1));
    assert_eq!(octa(&["subdivide"], dir.path()).status.code(), Some(1));
    assert_eq!(octa(&["--help"], dir.path()).status.code(), Some(0));
}
