use std::process::{Command, Output};

use multilift::export::CodeExport;

fn multilift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multilift"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn build_writes_all_codewords() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("code.json");
    let o = multilift(&[
        "build",
        "--q",
        "2",
        "--n",
        "6",
        "--k",
        "2",
        "--d",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "N=21\n");
    let export = CodeExport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(export.size, "21");
    assert_eq!(export.codewords.as_ref().unwrap().len(), 21);
    let sizes: Vec<_> = export.components.iter().map(|c| c.size.as_str()).collect();
    assert_eq!(sizes, ["16", "4", "1"]);

    let o = multilift(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "cardinality=OK min_distance=OK components=OK\n");
}

#[test]
fn build_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = multilift(&[
            "build",
            "--q",
            "3",
            "--n",
            "6",
            "--k",
            "2",
            "--d",
            "2",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn header_only_export_cannot_be_verified() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let o = multilift(&[
        "build",
        "--q",
        "2",
        "--n",
        "40",
        "--k",
        "4",
        "--d",
        "2",
        "--header-only",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let export = CodeExport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(export.codewords.is_none());
    assert_eq!(export.components.len(), 19);

    let o = multilift(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn verify_cap_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = multilift(&[
        "build",
        "--q",
        "2",
        "--n",
        "7",
        "--k",
        "3",
        "--d",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = multilift(&["verify", "--in", path.to_str().unwrap(), "--cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr(&o).lines().count(), 1);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"q\":2").unwrap();
    let o = multilift(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "));

    let o = multilift(&[
        "verify",
        "--in",
        dir.path().join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));

    let o = multilift(&["size", "--q", "2", "--n", "6", "--k", "2", "--d", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn size_and_mrd() {
    let o = multilift(&["size", "--q", "2", "--n", "20", "--k", "5", "--d", "5"]);
    assert_eq!(stdout(&o), "N=33825 closed_form=33825\n");
    let o = multilift(&[
        "mrd", "--q", "3", "--rows", "2", "--cols", "3", "--d", "2", "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "bound=27 min_rank_distance=2\n");
}

#[test]
fn table_csv_and_markdown() {
    let o = multilift(&[
        "table", "--q", "2", "--n-max", "6", "--k-max", "2", "--d-rule", "k",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "q,n,k,d,lifted_size,multi_size,ratio\n\
         2,2,1,1,2,3,1.5000\n\
         2,3,1,1,4,7,1.7500\n\
         2,4,1,1,8,15,1.8750\n\
         2,4,2,2,4,5,1.2500\n\
         2,5,1,1,16,31,1.9375\n\
         2,5,2,2,8,9,1.1250\n\
         2,6,1,1,32,63,1.9688\n\
         2,6,2,2,16,21,1.3125\n"
    );
    let o = multilift(&[
        "table", "--q", "3,2", "--n-max", "4", "--k-max", "2", "--format", "md",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("| q | n | k | d |"));
    assert!(text.contains("| 3 | 4 | 2 | 1 | 81 | 91 | 1.1235 |"));
}
