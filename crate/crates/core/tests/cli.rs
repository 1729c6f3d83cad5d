use shinsym::cli::run;

fn shinsym(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("shinsym").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = shinsym(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn expand_and_convert() {
    assert_eq!(ok(&["expand", "--basis", "H", "sh[3,2]"]), "H[3,2] - H[4,1]\n");
    assert_eq!(ok(&["convert", "--to", "H", "sh[4,1]"]), "H[4,1] - H[5]\n");
    assert_eq!(ok(&["expand", "--basis", "F", "sh*[2,3]"]), "F[1,2,2] + F[2,3]\n");
    assert_eq!(ok(&["expand", "--basis", "H", "-2 sh[1]"]), "-2 H[1]\n");
}

#[test]
fn jacobi_trudi_has_four_signed_terms() {
    let out = ok(&["jacobi-trudi", "--family", "sh", "1,3,4"]);
    assert_eq!(out, "H[1,3,4] - H[1,4,3] - H[3,1,4] + H[4,1,3]\n");
}

#[test]
fn products_and_pieri() {
    let six = "sh[2,3,1,2] + sh[2,3,2,1] + sh[2,3,3] + sh[2,4,1,1] + sh[2,4,2] + sh[2,5,1]\n";
    assert_eq!(ok(&["multiply", "--basis", "sh", "sh[2,3,1]", "H[2]"]), six);
    assert_eq!(ok(&["pieri", "[2,3,1]", "2"]), six);
    assert_eq!(ok(&["beth", "2", "H[3,1]"]), "H[2,3,1] - H[3,2,1]\n");
    assert_eq!(ok(&["pair", "sh[2,1]", "sh*[2,1]"]), "1\n");
}

#[test]
fn skew_commands() {
    assert_eq!(
        ok(&["skew", "--family", "rsh", "--basis", "F", "[1,3,2]", "[1,2]"]),
        "F[1,1,1] + F[1,2] + F[2,1]\n"
    );
    assert!(ok(&["skew2", "[2,1,3]", "[1,2,1]"]).contains("-M[1,1]"));
    let out = ok(&["coproduct", "--index", "[2,1]", "--formula", "skew2"]);
    assert!(out.contains("note: nonzero term for uncontained index [2]"));
}

#[test]
fn tableaux_and_posets() {
    assert_eq!(ok(&["tableaux", "[3,4]", "--content", "1,2,1,1,2", "--count"]), "3\n");
    assert_eq!(ok(&["tableaux", "[2,3]", "--standard", "--count"]), "2\n");
    assert_eq!(ok(&["strips", "[3]", "2"]).lines().count(), 3);
    let chains = ok(&["poset-chains", "[2,1]", "[3,4,1]"]);
    assert!(chains.contains("[2,1] < [3,1] < [3,1,1] < [3,2,1] < [3,3,1] < [3,4,1]"));
}

#[test]
fn json_output_is_parseable_and_stable() {
    let a = ok(&["--json", "expand", "--basis", "H", "sh[3,2]"]);
    let b = ok(&["expand", "--json", "--basis", "H", "sh[3,2]"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["algebra"], "NSym");
    assert_eq!(v["terms"][1]["coeff"], "-1");
    assert_eq!(v["terms"][1]["index"], serde_json::json!([4, 1]));

    let t: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "tableaux", "[2,3]", "--standard"])).unwrap();
    assert_eq!(t[0]["shape"]["kind"], "straight");
    assert_eq!(t[0]["family"], "shin");

    let m: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "transition-matrix", "--from", "sh", "--to", "H", "--degree", "2"]))
            .unwrap();
    assert_eq!(m["entries"], serde_json::json!([["1", "-1"], ["0", "1"]]));
}

#[test]
fn verify_reports() {
    let out = ok(&["verify", "--identity", "duality", "--max-degree", "5"]);
    assert!(out.starts_with("duality: ok"));
    let json = ok(&["--json", "verify", "--identity", "involutions", "--max-degree", "3"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["failure_count"], 0);
    assert!(ok(&["verify", "--list"]).contains("jt-vs-pieri"));
}

#[test]
fn exit_codes() {
    assert_eq!(shinsym(&["expand", "--basis", "X", "sh[1]"]).0, 2);
    assert_eq!(shinsym(&["expand", "--basis", "H", "sh[0,1]"]).0, 2);
    assert_eq!(shinsym(&["expand", "--basis", "H", "zz[1]"]).0, 2);
    assert_eq!(shinsym(&["multiply", "H[1]", "M[1]"]).0, 2);
    assert_eq!(shinsym(&["verify", "--identity", "unknown"]).0, 2);
    assert_eq!(shinsym(&["frobnicate"]).0, 2);
    assert_eq!(shinsym(&["jacobi-trudi", "2,2,4"]).0, 1);
    assert_eq!(shinsym(&["pieri", "--family", "sh", "--side", "left", "[1]", "1"]).0, 1);
    assert_eq!(shinsym(&["--help"]).0, 0);
}
