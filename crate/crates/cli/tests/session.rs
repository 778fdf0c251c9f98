use std::io::Write;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use serde_json::Value;
use tracemod::Error;
use tracemod_cli::parse::{Pos, Statement};
use tracemod_cli::{exit, parse_session, run, Format, Options, Outcome};

fn json_options() -> Options {
    Options { format: Format::Json, ..Options::default() }
}

/// Runs a session and returns the exit code, the JSON records and stderr.
fn run_json(source: &str, options: &Options) -> (i32, Vec<Value>, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(source, options, &mut out, &mut err);
    let records = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    (code, records, String::from_utf8(err).unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

const HYPERSURFACE: &str = "ring R = Q[x,y]/(x^2*y^2); ideal I = (x^5, x*y^7) in R; trace(I);";

#[test]
fn parses_statements() {
    let s = parse_session(HYPERSURFACE).unwrap();
    assert_eq!(s.statements.len(), 3);
    assert!(matches!(s.statements[2].statement, Statement::Op { .. }));
    assert_eq!(s.statements[2].text, "trace(I)");
    assert!(parse_session("").unwrap().statements.is_empty());
    assert!(parse_session("  # only a comment\n").unwrap().statements.is_empty());
}

#[test]
fn weights_and_modules_parse() {
    let s = parse_session(
        "ring S = Q[a:3, b:4, c:5]/(b^2 - a*c, c^2 - a^2*b, b*c - a^3);\n\
         module M = coker [[a, b], [c, 0]] in S;\n\
         check lemma-2.3 on S pairs=10 ambients=ring window=-1..2;",
    )
    .unwrap();
    assert_eq!(s.statements.len(), 3);
}

#[test]
fn diagnostics_carry_positions() {
    let d = parse_session("ideal I = (x) in R;").unwrap_err();
    assert_eq!(d.message, "unknown ring R");
    assert_eq!(d.pos, Pos { line: 1, column: 18 });

    let d = parse_session("ring R = Q[x];\nring R = Q[y];").unwrap_err();
    assert_eq!(d.pos.line, 2);
    assert!(d.message.contains("already defined"));

    let d = parse_session("ring R = Q[x];\ntrace(J);").unwrap_err();
    assert_eq!((d.pos, d.message.as_str()), (Pos { line: 2, column: 7 }, "unknown identifier J"));

    let d = parse_session("ring R = Q[x]; ideal I = (x) in R; grade(I, I);").unwrap_err();
    assert!(d.message.starts_with("arity mismatch"));

    let d = parse_session("ring R = Q[x]; ideal I = (x) in R; ext(1, I);").unwrap_err();
    assert!(d.message.starts_with("arity mismatch"));

    let d = parse_session("ring R = Q[x,y];\nideal I = (x, y +* 2) in R;").unwrap_err();
    assert_eq!(d.pos.line, 2);
    assert_eq!(d.pos.column, 18);

    let d = parse_session("ring R = F4[x];").unwrap_err();
    assert!(d.message.contains("not a prime"));

    let d = parse_session("ring R = Q[x]; check nonsense on R;").unwrap_err();
    assert!(d.message.contains("unknown check"));

    let d = parse_session("ring R = Q[x]; check oracle on R colour=red;").unwrap_err();
    assert!(d.message.contains("unknown option"));

    let d = parse_session("ring R = Q[x]; ring S = Q[x]; ideal I = (x) in R; ideal J = (x) in S; hom(I, J);").unwrap_err();
    assert!(d.message.contains("different rings"));

    let d = parse_session("ring R = Q[x] trace(R);").unwrap_err();
    assert!(d.message.contains("expected `;`"));
}

#[test]
fn hypersurface_trace() {
    let (code, records, _) = run_json(HYPERSURFACE, &json_options());
    assert_eq!(code, exit::OK);
    let r = &records[0];
    assert_eq!(r["op"], "trace");
    assert_eq!(strings(&r["generators"]), ["x^2", "x*y^2"]);
    assert_eq!(r["proper"], true);
    assert_eq!(r["trace_ideal"], false);
    assert!(r.get("disagreement").is_none());
}

#[test]
fn node_operations() {
    let source = "ring R = F5[x,y]/(x*y);\n\
                  ideal I = (x, y) in R;\n\
                  ideal J = (y) in R;\n\
                  rigid(I); rigid(J); ann(J); hom(J, R/J); free(J); grade(J);";
    let (code, records, _) = run_json(source, &json_options());
    assert_eq!(code, exit::OK);
    assert_eq!((records[0]["rigid"].as_bool(), records[0]["free"].as_bool()), (Some(false), Some(false)));
    assert_eq!((records[1]["rigid"].as_bool(), records[1]["free"].as_bool()), (Some(true), Some(false)));
    assert_eq!(strings(&records[2]["generators"]), ["x"]);
    assert_eq!(records[3]["zero"], true);
    assert_eq!(records[4]["free"], false);
    assert_eq!(records[5]["grade"], 0);
}

#[test]
fn artinian_operations() {
    let source = "ring R = F3[x]/(x^4);\n\
                  ideal I = (x^2) in R;\n\
                  gorenstein(R); socle(R); ext(1, R/I, R); syzygy(1, I); cosyzygy(1, I); syzygy(-1, I); trace(I, R);";
    let (code, records, err) = run_json(source, &json_options());
    assert_eq!(code, exit::OK, "{err}");
    assert_eq!(records[0]["gorenstein"], true);
    assert_eq!(strings(&records[1]["generators"]), ["x^3"]);
    assert_eq!(records[1]["dimension"], 1);
    assert_eq!(records[2]["zero"], true);
    // (x^2) is self-syzygetic in k[x]/(x^4).
    assert_eq!(records[3]["dimension"], 2);
    assert_eq!(records[4]["dimension"], 2);
    assert_eq!(records[4]["presentation"], records[5]["presentation"]);
    assert_eq!(strings(&records[6]["generators"]), ["x^2"]);
}

#[test]
fn checks_report_and_pass() {
    let source = "ring R = F2[x,y]/(x^2, y^2); check thm-3.9 on R;";
    let (code, records, _) = run_json(source, &json_options());
    assert_eq!(code, exit::OK);
    assert_eq!(records[0]["check_id"], "syzygy-rigidity");
    assert_eq!(records[0]["verdict"], "pass");
    assert!(records[0]["instances_tested"].as_u64().unwrap() > 0);
}

#[test]
fn checks_take_options_and_flags() {
    let source = "ring R = F3[x]/(x^4); ideal I = (x^2) in R; check prop-3.2 on R ideals=I seed=5;";
    let (code, records, _) = run_json(source, &json_options());
    assert_eq!(code, exit::OK);
    assert_eq!(records[0]["instances_tested"], 1);
    assert_eq!(records[0]["seed"], 5);

    let source = "ring R = F2[x,y]/(x^2, y^2); check syzygy-rigidity on R random=3 window=0..1;";
    let options = Options { seed: 9, ext_bound: 3, ..json_options() };
    let (_, records, _) = run_json(source, &options);
    assert_eq!(records[0]["seed"], 9);
    assert_eq!(records[0]["bounds"]["ext_bound"], 3);
    assert_eq!(records[0]["bounds"]["random_count"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(run_json("ring R = Q[x]", &json_options()).0, exit::PARSE);
    let bad = "ring R = F2[x]/(x^2); check oracle on R window=3;";
    assert_eq!(run_json(bad, &json_options()).0, exit::PARSE);
    let capped = Options { dim_cap: 2, ..json_options() };
    let (code, _, err) = run_json("ring R = F2[x,y]/(x^2, y^2); check thm-3.9 on R;", &capped);
    assert_eq!(code, exit::CAP);
    assert!(err.contains("dimension cap 2 exceeded"));
    let (code, _, err) = run_json("ring R = Q[x]/(x^2); ideal Z = () in R; grade(Z);", &json_options());
    assert_eq!(code, exit::OTHER);
    assert!(err.contains("grade(Z)"));

    let mut o = Outcome { counterexamples: 2, ..Outcome::default() };
    assert_eq!(o.exit_code(), exit::COUNTEREXAMPLE);
    o.disagreements = 1;
    assert_eq!(o.exit_code(), exit::DISAGREEMENT);
    o.error = Some(("x".into(), Error::DegreeCapExceeded(4)));
    assert_eq!(o.exit_code(), exit::CAP);
}

#[test]
fn text_format() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(HYPERSURFACE, &Options::default(), &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "trace(I): generators=(x^2, x*y^2) proper=true trace_ideal=false\n");
}

#[test]
fn binary_reads_stdin_and_files() {
    let bin = env!("CARGO_BIN_EXE_tracemod");
    let mut child = Command::new(bin)
        .args(["--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(HYPERSURFACE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(strings(&v["generators"]), ["x^2", "x*y^2"]);

    let dir = std::env::temp_dir().join(format!("tracemod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.tm");
    std::fs::write(&path, "ring R = Q[x];\nideal I = (y) in R;\n").unwrap();
    let out = Command::new(bin).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 12"));
    std::fs::remove_dir_all(dir).unwrap();
}

fn poly_text() -> impl Strategy<Value = String> {
    let term = (1i32..4, 0u32..3, 0u32..3).prop_map(|(c, a, b)| format!("{c}*x^{a}*y^{b}"));
    proptest::collection::vec(term, 1..4).prop_map(|ts| ts.join(" + "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn printed_ideals_parse_back_equal(gens in proptest::collection::vec(poly_text(), 1..3)) {
        let ring = "ring R = F5[x,y]/(x^3, y^3);";
        let first = format!("{ring} ideal I = ({}) in R; gb(I); trace(I);", gens.join(", "));
        let (code, records, _) = run_json(&first, &json_options());
        prop_assert_eq!(code, exit::OK);
        for r in &records {
            let printed = strings(&r["generators"]).join(", ");
            let second = format!("{ring} ideal I = ({}) in R; ideal P = ({printed}) in R; gb(I); gb(P);", gens.join(", "));
            let (_, again, _) = run_json(&second, &json_options());
            if r["op"] == "gb" {
                prop_assert_eq!(&again[0]["generators"], &again[1]["generators"]);
            }
            prop_assert_eq!(&again[1]["generators"], &r["generators"]);
        }
    }
}
