use std::io::Write;

use chowk::cli::run;

fn chowk(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["chowk"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn basis_lists_canonical_order() {
    let (code, out, _) = chowk(&["basis", "--dim", "4"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out
        .lines()
        .skip(2)
        .map(|l| l.split_whitespace().last().unwrap())
        .collect();
    assert_eq!(rows, ["1", "e[1]", "e[3]", "e[1,3]"]);

    let (code, out, _) = chowk(&["basis", "--dim", "4", "--json"]);
    assert_eq!(code, 0);
    assert!(out.starts_with(r#"{"schema":1,"verb":"basis""#), "{out}");
    assert!(out.contains(r#""basis":[[],[1],[3],[1,3]]"#), "{out}");
}

#[test]
fn split_cdim_is_zero() {
    assert_eq!(
        chowk(&["cdim", "--dim", "6", "--J", "1,3,5"]),
        (0, "0\n".into(), String::new())
    );
    assert_eq!(chowk(&["cdim", "--dim", "6", "--J", ""]).1, "9\n");
}

#[test]
fn verify_projectors() {
    let (code, out, _) = chowk(&["verify", "--suite", "projectors", "--max-dim", "9"]);
    assert_eq!(code, 0);
    assert_eq!(out, "OK: 9 contexts, 61 projector systems checked\n");
}

#[test]
fn vanishing_index_warns() {
    let (code, out, err) = chowk(&["mul", "--dim", "6", "e[4]", "e[1]"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0\n");
    assert_eq!(err, "warning: index 4 vanishes in Ch_K\n");
}

#[test]
fn class_computations() {
    assert_eq!(
        chowk(&["mul", "--dim", "6", "e[1]", "e[3,5]"]).1,
        "e[1,3,5]\n"
    );
    assert_eq!(
        chowk(&["mul", "--dim", "6", "[[1]]", "[[3,5]]"]).1,
        "e[1,3,5]\n"
    );
    assert_eq!(chowk(&["deg", "--dim", "4", "e[1,3]"]).1, "1\n");
    assert_eq!(chowk(&["sq", "--dim", "8", "--i", "2", "e[3]"]).1, "e[5]\n");
    assert_eq!(chowk(&["xcycle", "--dim", "4", "1"]).1, "1×e[1] + e[1]×1\n");
    assert_eq!(
        chowk(&["compare-q", "--dim", "6", "--J", "5"]).1,
        "{0,2,4,5}\n"
    );
    let (code, out, _) = chowk(&["decompose", "--dim", "4", "--J", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"schema\":1,\"verb\":\"decompose\",\"copies\":[0,1],\"tate\":[0,3],\"poincare_check\":true,\"indecomposable\":false}\n"
    );
}

#[test]
fn compose_from_json() {
    let (code, out, _) = chowk(&["compose", "--dim", "4", "[[[1,3],[]]]", "[[[1,3],[]]]"]);
    assert_eq!(code, 0);
    assert_eq!(out, "e[1,3]×1\n");
    assert_eq!(
        chowk(&["compose", "--dim", "4", "[[[],[1,3]]]", "[[[1,3],[]]]"]).1,
        "0\n"
    );
}

#[test]
fn class_from_file() {
    let path = std::env::temp_dir().join(format!("chowk-cli-{}.json", std::process::id()));
    std::fs::File::create(&path)
        .unwrap()
        .write_all(b"[[1,3],[5]]")
        .unwrap();
    let (code, out, _) = chowk(&["deg", "--dim", "6", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!((code, out.as_str()), (0, "0\n"));
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["cdim", "--dim", "6", "--J", "2"][..],
        &["cdim", "--dim", "0", "--J", ""],
        &["mul", "--dim", "6", "e[2,2]", "1"],
        &["sq", "--dim", "6", "--i", "-1", "e[1]"],
        &["jinv", "--dim", "6", "--witt", "0,2,1,3"],
        &["reduce", "--dim", "2"],
        &["verify", "--suite", "nope"],
        &["verify", "--max-dim", "40"],
        &["theta", "--dim", "4", "--J", "1", "--L", "3"],
        &["deg", "--dim", "4", "--file", "/nonexistent/class.json"],
        &["frobnicate"],
        &["basis", "--dim", "4", "--nope"],
    ] {
        let (code, out, err) = chowk(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_succeeds() {
    let (code, out, _) = chowk(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "verify",
            "--suite",
            "all",
            "--max-dim",
            "6",
            "--seed",
            "3",
            "--json",
        ][..],
        &["theta", "--dim", "6", "--J", "3,5", "--json"],
        &["jinv", "--dim", "7", "--witt", "0,1,3", "--json"],
    ] {
        let first = chowk(args);
        assert_eq!(first.0, 0, "{args:?}: {}", first.2);
        assert_eq!(first, chowk(args));
    }
}
