//! Acceptance check for the command-line reports: repeated invocations must
//! produce byte-identical output.

use std::process::Command;

fn stdout_of(args: &[&str]) -> Vec<u8> {
    let output = Command::new(env!("CARGO_BIN_EXE_golden-tonnetz"))
        .args(args)
        .output()
        .expect("binary spawns");
    assert!(
        output.status.success(),
        "`{}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&output.stderr)
    );
    output.stdout
}

/// [criterion 11] `verify`, `lattice`, and `render` are deterministic: two
/// runs of the same invocation produce the same bytes.
#[test]
fn criterion_11_reports_are_deterministic() {
    let invocations: [&[&str]; 4] = [
        &["verify"],
        &["verify", "--json"],
        &["lattice", "--extent", "10x6"],
        &[
            "render",
            "--extent",
            "6x4",
            "--highlight-scale",
            "C-maj",
            "--highlight-triad",
            "Cmaj",
        ],
    ];
    for args in invocations {
        let first = stdout_of(args);
        let second = stdout_of(args);
        assert!(!first.is_empty(), "`{}` wrote no output", args.join(" "));
        assert_eq!(
            first,
            second,
            "two runs of `{}` differ",
            args.join(" ")
        );
    }
    println!("[criterion 11] PASS — verify, lattice, and render emit byte-identical output across repeated runs");
}
