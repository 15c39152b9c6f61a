mod common;

use common::cli::{check, run, CASES};

#[test]
fn golden_outputs() {
    let failures: Vec<String> = CASES.iter().filter_map(|c| check(c).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_repeatable() {
    for args in [
        &["verify", "all", "8"][..],
        &["render", "2,3", "--svg"],
        &["identity", "all", "12"],
    ] {
        assert_eq!(run(args, None).stdout, run(args, None).stdout);
    }
}

#[test]
fn codec_round_trip_through_cli() {
    for text in ["3,1,1", "2,2,1", "5", "1", "1,2,1,1", "4,1,3,2"] {
        let word = run(&["codec", "encode", text], None);
        assert_eq!(word.exit, 0);
        let word = String::from_utf8(word.stdout).unwrap();
        let word = word.trim_end_matches('\n');
        let board = (word.len() + 1).to_string();
        let back = run(&["codec", "decode", word, "--board", &board], None);
        assert_eq!(String::from_utf8(back.stdout).unwrap(), format!("{text}\n"));
    }
}

#[test]
fn bound_knob_from_environment() {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_fibcomp"))
        .args(["verify", "prop1", "21"])
        .env("FIBCOMP_MAX_N", "21")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 19);
    assert!(
        stdout.ends_with("prop1 n=21 pass target=17711 from-n-minus-2=6765 from-n-minus-1=10946\n")
    );
}

#[test]
fn batch_mode_reports_worst_exit() {
    let outcome = run(&["codec", "conjugate"], Some("2,3\n-\n3,1,1\n"));
    assert_eq!(outcome.exit, 1);
    assert_eq!(
        String::from_utf8(outcome.stdout).unwrap(),
        "1,2,1,1\n1,1,3\n"
    );
    let outcome = run(&["codec", "encode"], Some("2,3\nbad\n"));
    assert_eq!(outcome.exit, 2);
}
