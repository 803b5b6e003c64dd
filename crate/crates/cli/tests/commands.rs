use std::path::PathBuf;

use rectangularity::fixtures::{b3, c4, e4, i3, t5a, t5b, x4};
use rectangularity::isotopy::apply_isotopy;
use rectangularity::{Groupoid, IsotopyTriple, Permutation};
use rectangularity_cli::format::{parse_graph_pair, parse_table, render_partial, render_table};
use rectangularity_cli::run;

struct Output {
    status: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rectangularity").chain(args.iter().copied());
    let status = run(argv, &mut out, &mut err);
    Output {
        status,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn file(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-commands");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn table_file(name: &str, g: &Groupoid) -> String {
    file(name, &render_table(g, 0))
}

#[test]
fn check_rectangular_on_x4() {
    let x = table_file("x4.tbl", &x4());
    let o = cli(&["check", "--property", "rectangular", &x]);
    assert_eq!((o.status, o.out.as_str()), (0, "true\n"));
}

#[test]
fn check_reports_witnesses() {
    let i = table_file("i3.tbl", &i3());
    let o = cli(&["check", "--property", "rectangular", &i]);
    assert_eq!(o.status, 1);
    assert!(o.out.starts_with("false\nwitness: symbol "), "{}", o.out);

    let x = table_file("x4-assoc.tbl", &x4());
    let o = cli(&["check", "--property", "associative", &x]);
    assert_eq!(o.status, 1);
    assert_eq!(o.out, "false\nwitness: (0, 0, 2)\n");
    // 0*0 = 0, 0*2 = 1, but (0*0)*2 = 1 and 0*(0*2) = 0
    let g = x4();
    assert_ne!(g.op(g.op(0, 0), 2), g.op(0, g.op(0, 2)));

    let o = cli(&["--one-based", "check", "--property", "associative", &x]);
    assert_eq!(o.out, "false\nwitness: (1, 1, 3)\n");
}

#[test]
fn check_p1_and_idempotent() {
    let c = table_file("c4-p1.tbl", &c4());
    assert_eq!(cli(&["check", "--property", "p1", &c]).status, 0);
    assert_eq!(cli(&["check", "--property", "central", &c]).status, 1);
    let e = table_file("e4.tbl", &e4());
    assert_eq!(cli(&["check", "--property", "central", &e]).out, "true\n");
    let i = table_file("i3-idem.tbl", &i3());
    assert_eq!(
        cli(&["check", "--property", "idempotent", &i]).out,
        "true\n"
    );
    let o = cli(&["check", "--property", "p1", &i]);
    assert_eq!(o.status, 1);
    assert!(o.out.contains("share a row and a column"));
}

#[test]
fn check_graph_and_matrix_pairs() {
    let x = table_file("x4-gp.tbl", &x4());
    let gp = cli(&["convert", "--from", "groupoid", "--to", "graphpair", &x]);
    assert_eq!(gp.status, 0);
    let gp_file = file("x4.gp", &gp.out);
    assert_eq!(cli(&["check", "--property", "p2", &gp_file]).out, "true\n");
    assert_eq!(cli(&["check", "--property", "p4", &gp_file]).out, "true\n");

    let bad = file("bad.gp", "2\n11\n11\n\n11\n11\n");
    let o = cli(&["check", "--property", "p2", &bad]);
    assert_eq!(
        (o.status, o.out.as_str()),
        (1, "false\nwitness: 2 red-green paths from 0 to 0\n")
    );
    let o = cli(&["check", "--property", "p4", &bad]);
    assert_eq!(
        (o.status, o.out.as_str()),
        (1, "false\nwitness: (AB)(0, 0) = 2\n")
    );
}

#[test]
fn check_partial_arrays() {
    let b = file("b3.par", &render_partial(&b3(), 0));
    assert_eq!(
        cli(&["check", "--property", "partial-latin", &b]).out,
        "true\n"
    );
    assert_eq!(cli(&["check", "--property", "blackburn", &b]).out, "true\n");
    let o = cli(&["check", "--property", "partial-p1", &b]);
    assert_eq!((o.status, o.out.as_str()), (1, "false\n"));
}

#[test]
fn convert_round_trips() {
    let x = table_file("x4-conv.tbl", &x4());
    let m = cli(&["convert", "--from", "groupoid", "--to", "matrices", &x]);
    let m_file = file("x4.mat", &m.out);
    let back = cli(&["convert", "--from", "matrices", "--to", "groupoid", &m_file]);
    assert_eq!(back.status, 0);
    assert_eq!(parse_table(&back.out).unwrap(), x4());
    let gp = parse_graph_pair(&m.out).unwrap();
    assert_eq!(gp.order(), 4);

    let bad = file("bad-conv.gp", "2\n11\n11\n\n11\n11\n");
    let o = cli(&["convert", "--from", "graphpair", "--to", "groupoid", &bad]);
    assert_eq!(o.status, 1);
    assert!(o.err.contains("red-green paths"));
}

#[test]
fn one_based_display_only() {
    let x = table_file("x4-one.tbl", &x4());
    let o = cli(&[
        "--one-based",
        "convert",
        "--from",
        "groupoid",
        "--to",
        "groupoid",
        &x,
    ]);
    assert_eq!(o.out, "4\n1 1 2 2\n3 3 4 4\n3 3 4 4\n1 1 2 2\n");
    let j = cli(&[
        "--one-based",
        "enumerate",
        "--class",
        "rectangular",
        "--order",
        "1",
        "--emit",
        "json",
    ]);
    assert!(j.out.contains("\"tables\":[[0]]"), "{}", j.out);
}

#[test]
fn enumerate_central_nine() {
    let o = cli(&[
        "enumerate",
        "--class",
        "central",
        "--order",
        "9",
        "--up-to",
        "iso",
        "--emit",
        "count",
    ]);
    assert_eq!((o.status, o.out.as_str()), (0, "6\n"));
}

#[test]
fn enumerate_outputs_do_not_depend_on_jobs() {
    let args = [
        "enumerate",
        "--class",
        "rectangular",
        "--order",
        "3",
        "--up-to",
        "iso",
        "--emit",
        "tables",
    ];
    let one = cli(&[&["--jobs", "1"], &args[..]].concat());
    let three = cli(&[&["--jobs", "3"], &args[..]].concat());
    assert_eq!(one.status, 0);
    assert_eq!(one.out, three.out);
    assert_eq!(one.out.split("\n\n").count(), 49);
}

#[test]
fn enumerate_counts_and_json() {
    let count = |extra: &[&str]| {
        let o = cli(&[&["enumerate"], extra].concat());
        assert_eq!(o.status, 0, "{}", o.err);
        o.out
    };
    assert_eq!(
        count(&[
            "--class",
            "rectangular",
            "--order",
            "2",
            "--up-to",
            "labeled"
        ]),
        "6\n"
    );
    assert_eq!(count(&["--class", "rectangular", "--order", "2"]), "5\n");
    assert_eq!(
        count(&[
            "--class",
            "rectangular",
            "--order",
            "3",
            "--up-to",
            "isotopy"
        ]),
        "9\n"
    );
    assert_eq!(
        count(&["--class", "band-blowups", "--order", "2", "--m", "2"]),
        "12\n"
    );

    let json = count(&[
        "--class",
        "rectangular",
        "--order",
        "2",
        "--up-to",
        "labeled",
        "--emit",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["class"], "rectangular");
    assert_eq!(v["mode"], "labeled");
    assert_eq!(v["count"], 6);
    assert_eq!(v["tables"].as_array().unwrap().len(), 6);
    assert_eq!(v["tables"][0], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn capacity_and_usage_exit_codes() {
    let o = cli(&["enumerate", "--class", "central", "--order", "16"]);
    assert_eq!(o.status, 3);
    assert!(o.err.contains("bound"));
    assert_eq!(
        cli(&["enumerate", "--class", "rectangular", "--order", "5"]).status,
        3
    );
    assert_eq!(cli(&["frobnicate"]).status, 2);
    assert_eq!(cli(&["check", "--property", "shiny", "x"]).status, 2);
    assert_eq!(cli(&["check", "--wat", "--property", "p1", "x"]).status, 2);
    assert_eq!(
        cli(&["enumerate", "--class", "band-blowups", "--order", "2"]).status,
        2
    );
    assert_eq!(
        cli(&[
            "enumerate",
            "--class",
            "central",
            "--order",
            "4",
            "--up-to",
            "labeled"
        ])
        .status,
        2
    );
    let help = cli(&["--help"]);
    assert_eq!(help.status, 0);
    assert!(help.out.contains("enumerate"));
}

#[test]
fn malformed_and_missing_files() {
    let bad = file("range.tbl", "2\n0 0\n0 2\n");
    let o = cli(&["check", "--property", "rectangular", &bad]);
    assert_eq!(o.status, 2);
    assert!(o.err.contains("line 3, column 3"), "{}", o.err);
    let o = cli(&["check", "--property", "rectangular", "/nonexistent/table"]);
    assert_eq!(o.status, 2);
}

#[test]
fn isotopy_of_t5_pair() {
    let a = table_file("t5a.tbl", &t5a());
    let b = table_file("t5b.tbl", &t5b());
    let o = cli(&["isotopy", &a, &b]);
    assert_eq!(o.status, 0);
    let perm = |line: &str| {
        let images = line
            .split_once(": ")
            .unwrap()
            .1
            .split(' ')
            .map(|x| x.parse().unwrap())
            .collect();
        Permutation::new(images).unwrap()
    };
    let lines: Vec<&str> = o.out.lines().collect();
    assert_eq!(lines.len(), 3);
    let t = IsotopyTriple::new(perm(lines[0]), perm(lines[1]), perm(lines[2])).unwrap();
    assert_eq!(apply_isotopy(&t5a(), &t).unwrap(), t5b());

    let x = table_file("x4-iso.tbl", &x4());
    let c = table_file("c4-iso.tbl", &c4());
    let o = cli(&["isotopy", &x, &c]);
    assert_eq!((o.status, o.out.as_str()), (1, "none\n"));
}

#[test]
fn transversal_command() {
    let x = table_file("x4-tr.tbl", &x4());
    let o = cli(&["transversal", &x]);
    assert_eq!(
        (o.status, o.out.as_str()),
        (0, "(0, 0) (1, 1) (2, 2) (3, 3)\n")
    );
    let k = table_file(
        "const.tbl",
        &Groupoid::from_rows(&[[0, 0], [0, 0]]).unwrap(),
    );
    let o = cli(&["transversal", &k]);
    assert_eq!((o.status, o.out.as_str()), (1, "none\n"));
}

#[test]
fn constructions() {
    let o = cli(&["construct", "evans", "--m", "2"]);
    assert_eq!(o.out, "4\n0 0 1 1\n2 2 3 3\n0 0 1 1\n2 2 3 3\n");
    let o = cli(&["construct", "band", "--n", "1", "--m", "2"]);
    assert_eq!(o.out, "2\n0 1\n0 1\n");
    let o = cli(&["construct", "constant", "--order", "2", "--element", "1"]);
    assert_eq!(o.out, "2\n1 1\n1 1\n");
    assert_eq!(
        cli(&["construct", "constant", "--order", "2", "--element", "2"]).status,
        1
    );

    let band = table_file(
        "band22.tbl",
        &rectangularity::construct::rectangular_band(2, 2).unwrap(),
    );
    for kind in ["blowup", "left-ext", "right-ext"] {
        let o = cli(&["construct", kind, "--element", "0", &band]);
        assert_eq!(o.status, 0, "{kind}: {}", o.err);
        let g = parse_table(&o.out).unwrap();
        assert_eq!(g.order(), 5);
        assert!(rectangularity::properties::is_rectangular(&g), "{kind}");
    }
    let one = table_file("one.tbl", &Groupoid::trivial());
    let o = cli(&[
        "construct",
        "left-split",
        &band,
        &one,
        "--f",
        "0,0,0,0",
        "--g",
        "3",
    ]);
    assert_eq!(o.status, 0, "{}", o.err);
    assert_eq!(parse_table(&o.out).unwrap().order(), 5);
    let o = cli(&[
        "construct",
        "right-split",
        &band,
        &one,
        "--f",
        "0,0,0",
        "--g",
        "3",
    ]);
    assert_eq!(o.status, 1);

    let ps = file("sys.ps", "4\n0 1 | 0 2 / 1 3\n2 3 | 0 2 / 1 3\n");
    let o = cli(&["construct", "partition", &ps]);
    assert_eq!(o.status, 0, "{}", o.err);
    let gp_file = file("sys.gp", &o.out);
    assert_eq!(cli(&["check", "--property", "p2", &gp_file]).out, "true\n");

    let f = cli(&[
        "construct",
        "factorization",
        "--cyclic",
        "6",
        "--h",
        "0,3",
        "--k",
        "0,1,2",
    ]);
    let c = cli(&[
        "construct",
        "coset",
        "--cyclic",
        "6",
        "--h",
        "0,3",
        "--t",
        "0,1,2",
    ]);
    assert_eq!(f.status, 0);
    assert_eq!(f.out, c.out);
    let s3 = cli(&[
        "construct",
        "factorization",
        "--symmetric",
        "3",
        "--h",
        "0,1",
        "--k",
        "0,3,4",
    ]);
    assert!(s3.status <= 1);
    assert_eq!(
        cli(&[
            "construct",
            "factorization",
            "--cyclic",
            "6",
            "--h",
            "0,3",
            "--k",
            "0,3,2"
        ])
        .status,
        1
    );
    assert_eq!(
        cli(&["construct", "factorization", "--h", "0", "--k", "0"]).status,
        2
    );
}
