//! Golden-file cases for the `fibcomp` binary.

#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case {
        name,
        args,
        stdin: None,
        exit,
    }
}

pub const CASES: &[Case] = &[
    case("enumerate_min2_5", &["enumerate", "min2", "5"], 0),
    case("enumerate_odd_2", &["enumerate", "odd", "2"], 0),
    case("enumerate_all_0", &["enumerate", "all", "0"], 0),
    case("enumerate_odd_5", &["enumerate", "odd", "5"], 0),
    case(
        "enumerate_all_5_range",
        &["enumerate", "all", "5", "--rank-range", "3..9"],
        0,
    ),
    case(
        "enumerate_parts12_6_limit",
        &["enumerate", "parts12", "6", "--limit", "4"],
        0,
    ),
    case("enumerate_bad_class", &["enumerate", "even", "5"], 2),
    case(
        "enumerate_bad_flag",
        &["enumerate", "all", "5", "--rank-range", "9..3"],
        2,
    ),
    case("count_parts12_5", &["count", "parts12", "5"], 0),
    case("count_odd_5", &["count", "odd", "5"], 0),
    case("count_all_0", &["count", "all", "0"], 0),
    case("count_all_100", &["count", "all", "100"], 0),
    case("count_bad_n", &["count", "all", "-3"], 2),
    case("codec_encode_2_2_1", &["codec", "encode", "2,2,1"], 0),
    case("codec_encode_3_1_1", &["codec", "encode", "3,1,1"], 0),
    case("codec_conjugate_2_3", &["codec", "conjugate", "2,3"], 0),
    case("codec_conjugate_3_1_1", &["codec", "conjugate", "3,1,1"], 0),
    case(
        "codec_decode_jjjj",
        &["codec", "decode", "JJJJ", "--board", "5"],
        0,
    ),
    case(
        "codec_decode_empty",
        &["codec", "decode", "", "--board", "1"],
        0,
    ),
    case(
        "codec_decode_board_mismatch",
        &["codec", "decode", "JJ", "--board", "5"],
        2,
    ),
    case("codec_encode_parse_error", &["codec", "encode", "3,x"], 2),
    case("codec_conjugate_empty", &["codec", "conjugate", "-"], 1),
    Case {
        name: "codec_encode_batch",
        args: &["codec", "encode"],
        stdin: Some("3,1,1\n2,2,1\n5\n"),
        exit: 0,
    },
    Case {
        name: "codec_decode_batch",
        args: &["codec", "decode"],
        stdin: Some("JJCC\nJCJC\nJJJJ\n"),
        exit: 0,
    },
    case(
        "map_thm4_fwd_odd",
        &["map", "thm4", "fwd", "from-odd", "1,3,1", "--n", "5"],
        0,
    ),
    case(
        "map_thm4_bwd",
        &["map", "thm4", "bwd", "1,1,1,2", "--n", "5"],
        0,
    ),
    case(
        "map_prop1_below_range",
        &["map", "prop1", "fwd", "from-n-minus-1", "1", "--n", "2"],
        1,
    ),
    case(
        "map_prop2_fwd",
        &["map", "prop2", "fwd", "from-n-minus-2", "3,1", "--n", "6"],
        0,
    ),
    case(
        "map_prop3_bwd",
        &["map", "prop3", "bwd", "2,2,3", "--n", "7"],
        0,
    ),
    case(
        "map_bad_payload",
        &["map", "prop3", "fwd", "from-n-minus-2", "1,4", "--n", "7"],
        1,
    ),
    case(
        "map_bad_tag",
        &["map", "prop1", "fwd", "from-odd", "1", "--n", "3"],
        1,
    ),
    Case {
        name: "map_thm4_fwd_batch",
        args: &["map", "thm4", "fwd", "from-min2", "--n", "5"],
        stdin: Some("5\n3,2\n2,3\n"),
        exit: 0,
    },
    case("verify_thm4_12", &["verify", "thm4", "12"], 0),
    case("verify_all_10", &["verify", "all", "10"], 0),
    case("verify_prop3_3", &["verify", "prop3", "3"], 2),
    case("verify_over_bound", &["verify", "prop1", "21"], 2),
    case("identity_eq1_10", &["identity", "eq1", "10"], 0),
    case("identity_eq4_20", &["identity", "eq4", "20"], 0),
    case("identity_pow2_5", &["identity", "pow2", "5"], 0),
    case("identity_all_6", &["identity", "all", "6"], 0),
    case(
        "render_3_1_1_cutjoin",
        &["render", "3,1,1", "--ascii", "--annotate", "cutjoin"],
        0,
    ),
    case("render_1", &["render", "1", "--ascii"], 0),
    case(
        "render_2_3_svg",
        &["render", "2,3", "--svg", "--shade", "even-gray"],
        0,
    ),
    case(
        "render_2_2_1_svg_lengths",
        &[
            "render",
            "2,2,1",
            "--svg",
            "--shade",
            "even-gray",
            "--annotate",
            "lengths",
        ],
        0,
    ),
    case("render_empty", &["render", "-"], 1),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Outcome {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub exit: i32,
}

pub fn run(args: &[&str], stdin: Option<&str>) -> Outcome {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fibcomp"))
        .args(args)
        .env_remove("FIBCOMP_MAX_N")
        .env_remove("FIBCOMP_DEFAULT_NMAX")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("failed to spawn fibcomp");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(input) = stdin {
            pipe.write_all(input.as_bytes()).unwrap();
        }
    }
    let output = child.wait_with_output().unwrap();
    Outcome {
        stdout: output.stdout,
        stderr: output.stderr,
        exit: output.status.code().unwrap_or(-1),
    }
}

/// Runs a case and compares stdout with its golden file. Setting
/// `FIBCOMP_BLESS=1` rewrites the golden files instead.
pub fn check(case: &Case) -> Result<(), String> {
    let outcome = run(case.args, case.stdin);
    let path = golden_dir().join(format!("{}.stdout", case.name));
    if std::env::var_os("FIBCOMP_BLESS").is_some() {
        std::fs::write(&path, &outcome.stdout).unwrap();
    }
    if outcome.exit != case.exit {
        return Err(format!(
            "{}: exit {} (expected {}), stderr: {}",
            case.name,
            outcome.exit,
            case.exit,
            String::from_utf8_lossy(&outcome.stderr)
        ));
    }
    let expected = std::fs::read(&path)
        .map_err(|e| format!("{}: cannot read {}: {e}", case.name, path.display()))?;
    if outcome.stdout != expected {
        return Err(format!(
            "{}: stdout differs from golden file\n--- expected\n{}\n--- actual\n{}",
            case.name,
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&outcome.stdout)
        ));
    }
    if case.exit != 0 && outcome.stderr.is_empty() {
        return Err(format!(
            "{}: failure without a diagnostic on stderr",
            case.name
        ));
    }
    Ok(())
}
