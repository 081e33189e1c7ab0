#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// A recorded CLI invocation. Arguments starting with `@` name files
/// under `tests/golden/inputs`.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args }
}

pub const CASES: &[Case] = &[
    case(
        "compare_surf3p2_relation",
        &["compare", "--group", "surf3p2", "c^2", "a b a^-1 b^-1"],
    ),
    case("compare_klein", &["compare", "--group", "klein", "1", "y"]),
    case(
        "compare_figure8",
        &["compare", "--group", "bundle:figure8", "b", "1"],
    ),
    case(
        "compare_free2",
        &["compare", "--group", "free2-lex", "x[0,0]^-1", "1"],
    ),
    case(
        "compare_free_indexed",
        &[
            "compare",
            "--group",
            "free-indexed-lex",
            "x[1,0]",
            "x[0,0] x[1,0] x[0,0]^-1",
        ],
    ),
    case(
        "compare_z2_lex",
        &["compare", "--group", "z2-lex", "(0,5)", "(1,-5)"],
    ),
    case(
        "compare_json_surf3p2",
        &[
            "compare",
            "--json",
            "--group",
            "surf3p2",
            "a c a^-1 c^-1",
            "1",
        ],
    ),
    case(
        "compare_json_figure8",
        &[
            "compare",
            "--json",
            "--group",
            "bundle:figure8",
            "a b a^-1 b^-1",
            "1",
        ],
    ),
    case(
        "compare_json_figure8_t",
        &[
            "compare",
            "--json",
            "--group",
            "bundle:figure8",
            "t^-1",
            "a^5",
        ],
    ),
    case(
        "compare_json_z2_eigen",
        &[
            "compare", "--json", "--group", "z2-eigen", "--matrix", "2,1;1,1", "(0,1)", "(1,0)",
        ],
    ),
    case(
        "compare_json_klein",
        &["compare", "--json", "--group", "klein", "x y x^-1", "1"],
    ),
    case(
        "compare_parse_error",
        &["compare", "--group", "klein", "x q", "1"],
    ),
    case(
        "compare_syntax_error",
        &["compare", "--group", "surf3p2", "a^", "1"],
    ),
    case(
        "compare_unknown_group",
        &["compare", "--group", "braid", "a", "1"],
    ),
    case(
        "compare_uncertified_bundle",
        &[
            "compare",
            "--group",
            "bundle",
            "--monodromy",
            "a b;a^-1;b^-1;b a",
            "a",
            "1",
        ],
    ),
    case(
        "compare_uncertified_matrix",
        &[
            "compare", "--group", "z2-eigen", "--matrix", "0,-1;1,0", "a", "1",
        ],
    ),
    case("levitt_fib", &["levitt", "2,1;1,1"]),
    case("levitt_fib_json", &["levitt", "--json", "2,1;1,1"]),
    case("levitt_period6", &["levitt", "1,-1;1,0"]),
    case("levitt_period6_json", &["levitt", "--json", "1,-1;1,0"]),
    case("levitt_minus_identity", &["levitt", "-1,0;0,-1"]),
    case("levitt_parabolic_json", &["levitt", "--json", "1,1;0,1"]),
    case("levitt_reflection", &["levitt", "1,1;1,0"]),
    case("levitt_bad_det", &["levitt", "2,0;0,1"]),
    case("levitt_bad_syntax", &["levitt", "1,2,3"]),
    case("sort_klein", &["sort", "--group", "klein", "@klein.txt"]),
    case(
        "sort_free2",
        &["sort", "--group", "free2-lex", "@free2.txt"],
    ),
    case("sort_empty", &["sort", "--group", "surf3p2", "@empty.txt"]),
    case(
        "sort_surf3p2",
        &["sort", "--group", "surf3p2", "@surf3p2.txt"],
    ),
    case(
        "sort_figure8",
        &["sort", "--group", "bundle:figure8", "@figure8.txt"],
    ),
    case("sort_bad_line", &["sort", "--group", "klein", "@bad.txt"]),
    case(
        "fuzz_surf3p2_right_inv",
        &[
            "fuzz",
            "--group",
            "surf3p2",
            "--laws",
            "right-inv",
            "--samples",
            "300",
            "--seed",
            "7",
        ],
    ),
    case(
        "fuzz_klein_right_inv",
        &[
            "fuzz",
            "--group",
            "klein",
            "--laws",
            "right-inv",
            "--samples",
            "300",
            "--seed",
            "7",
        ],
    ),
    case(
        "fuzz_klein_left_inv",
        &[
            "fuzz",
            "--group",
            "klein",
            "--laws",
            "left-inv",
            "--samples",
            "300",
            "--seed",
            "7",
        ],
    ),
    case(
        "fuzz_free2_default",
        &[
            "fuzz",
            "--group",
            "free2-lex",
            "--samples",
            "300",
            "--seed",
            "1",
        ],
    ),
    case(
        "fuzz_free_indexed_default",
        &[
            "fuzz",
            "--group",
            "free-indexed-lex",
            "--samples",
            "200",
            "--seed",
            "2",
        ],
    ),
    case(
        "fuzz_z2_eigen_endo",
        &[
            "fuzz",
            "--group",
            "z2-eigen",
            "--matrix",
            "2,1;1,1",
            "--laws",
            "endo-inv,conj-inv",
            "--samples",
            "300",
            "--seed",
            "3",
        ],
    ),
    case(
        "fuzz_figure8",
        &[
            "fuzz",
            "--group",
            "bundle:figure8",
            "--samples",
            "40",
            "--seed",
            "4",
        ],
    ),
    case(
        "fuzz_klein_endo_unavailable",
        &[
            "fuzz",
            "--group",
            "klein",
            "--laws",
            "endo-inv",
            "--samples",
            "10",
        ],
    ),
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the real binary; returns the transcript stored in golden files.
pub fn transcript(case: &Case) -> String {
    let inputs = golden_dir().join("inputs");
    let args: Vec<String> = case
        .args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(f) => inputs.join(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_biorder"))
        .args(&args)
        .output()
        .expect("binary runs");
    format!(
        "$ biorder {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        case.args
            .iter()
            .map(|a| shell_quote(a))
            .collect::<Vec<_>>()
            .join(" "),
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    )
}

fn shell_quote(a: &str) -> String {
    if let Some(f) = a.strip_prefix('@') {
        return format!("tests/golden/inputs/{f}");
    }
    if a.chars()
        .all(|c| c.is_ascii_alphanumeric() || "-_:,.^".contains(c))
    {
        a.to_string()
    } else {
        format!("'{a}'")
    }
}

pub fn golden_path(case: &Case) -> PathBuf {
    golden_dir().join(format!("{}.txt", case.name))
}

/// Compares against the stored file; with `BIORDER_BLESS=1` rewrites it.
pub fn check_golden(case: &Case) -> Result<(), String> {
    let got = transcript(case);
    let path = golden_path(case);
    if std::env::var_os("BIORDER_BLESS").is_some() {
        std::fs::write(&path, &got).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| {
        format!(
            "{}: {e} (run with BIORDER_BLESS=1 to create)",
            path.display()
        )
    })?;
    if got == want {
        Ok(())
    } else {
        Err(format!(
            "{} differs:\n--- want\n{want}\n--- got\n{got}",
            case.name
        ))
    }
}

/// The stdout section of a transcript.
pub fn stdout_of(transcript: &str) -> &str {
    let start = transcript.find("--- stdout\n").expect("stdout marker") + "--- stdout\n".len();
    let end = transcript.find("--- stderr\n").expect("stderr marker");
    &transcript[start..end]
}
