//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::process::ExitCode;

use shinsym::algebra::{convert, multiply, Basis, Element};
use shinsym::cli::verify::{find, run_identity, VerifyReport};
use shinsym::composition::{Composition, WeakComposition};
use shinsym::schur::{beth, jacobi_trudi, pieri, skew, skew_ii, Generator, Side};
use shinsym::tableau::{count_k, Family};
use shinsym::{comp, Result};

struct Outcome {
    passed: bool,
    detail: String,
}

fn el(s: &str) -> Element {
    s.parse().unwrap_or_else(|e| panic!("bad literal {s}: {e}"))
}

fn goldens() -> Result<Vec<(String, String, String)>> {
    let mut checks = Vec::new();
    let mut eq = |label: &str, got: &Element, want: &str| {
        let ok = *got == el(want);
        checks.push((label.to_string(), got.to_string(), if ok { got.to_string() } else { want.to_string() }));
    };

    eq("sh[3,2] in H", &convert(&el("sh[3,2]"), Basis::H)?, "H[3,2] - H[4,1]");
    eq("sh[4,1] in H", &convert(&el("sh[4,1]"), Basis::H)?, "H[4,1] - H[5]");

    let six = "sh[2,3,1,2] + sh[2,3,2,1] + sh[2,3,3] + sh[2,4,1,1] + sh[2,4,2] + sh[2,5,1]";
    let product = convert(&multiply(&el("sh[2,3,1]"), &el("H[2]"))?, Basis::Sh)?;
    eq("sh[2,3,1] H[2] by product", &product, six);
    eq("sh[2,3,1] H[2] by Pieri", &pieri(Family::Shin, &comp![2, 3, 1], 2, Side::Right, Generator::H)?, six);

    let sh134 = "H[1,3,4] - H[1,4,3] - H[3,1,4] + H[4,1,3]";
    eq("sh[1,3,4] in H", &convert(&el("sh[1,3,4]"), Basis::H)?, sh134);
    eq("sh[1,3,4] by determinant", &jacobi_trudi(Family::Shin, &comp![1, 3, 4])?, sh134);
    eq(
        "sh[2,2,4] in H",
        &convert(&el("sh[2,2,4]"), Basis::H)?,
        "H[2,2,4] - H[2,4,2] - H[3,1,4] + H[4,3,1] + H[5,1,2] - H[5,2,1]",
    );

    eq("beth_2(H[3,1])", &beth(2, &el("H[3,1]"))?, "H[2,3,1] - H[3,2,1]");
    eq(
        "beth_2(sh[3,1] in H)",
        &beth(2, &convert(&el("sh[3,1]"), Basis::H)?)?,
        "H[2,3,1] - H[3,2,1] - H[2,4] + H[4,2]",
    );

    let f_expansions = [
        ("sh*[2,3]", "F[2,3] + F[1,2,2]"),
        ("rsh*[2,3]", "F[1,2,1,1] + F[2,2,1]"),
        ("fsh*[3,2]", "F[3,2] + F[2,2,1]"),
        ("bsh*[3,2]", "F[1,1,2,1] + F[1,2,2]"),
        ("fsh*[1,2,1]", "F[1,2,1] + F[2,1,1]"),
        ("bsh*[1,2,1]", "F[2,2] + F[1,3]"),
        ("bsh*[2,1]", "F[1,2]"),
        ("sh*[3,1]", "F[2,2] + F[1,3] + F[3,1]"),
        ("rsh*[3,1]", "F[3,1] + F[1,2,1] + F[1,1,2]"),
    ];
    for (x, want) in f_expansions {
        eq(&format!("{x} in F"), &convert(&el(x), Basis::F)?, want);
    }

    eq(
        "rsh*[1,3,2]/[1,2] in F",
        &convert(&skew(Family::RowStrict, &comp![1, 3, 2], &comp![1, 2])?, Basis::F)?,
        "F[2,1] + F[1,2] + F[1,1,1]",
    );

    let s2 = skew_ii(Family::Shin, &comp![2, 1, 3], &comp![1, 2, 1])?;
    let k = s2.coeff(Basis::M, &comp![1, 1]);
    checks.push(("sh*[2,1,3]//[1,2,1] at M[1,1]".into(), k.to_string(), "-1".into()));

    let content = WeakComposition::new(vec![1, 2, 1, 1, 2]);
    let kk = count_k(Family::Shin, &comp![3, 4], &content)?;
    checks.push(("K(shin, [3,4], [1,2,1,1,2])".into(), kk.to_string(), "3".into()));

    let a = comp![3, 2];
    let p = shinsym::composition::Partition::try_from(a.clone())?;
    let ops: [(&str, Composition, Composition); 4] = [
        ("complement of [3,2]", a.complement(), comp![1, 1, 2, 1]),
        ("reverse of [3,2]", a.reverse(), comp![2, 3]),
        ("transpose of [3,2]", a.transpose(), comp![1, 2, 1, 1]),
        ("conjugate of [3,2]", p.conjugate().into_composition(), comp![2, 2, 1]),
    ];
    for (label, got, want) in ops {
        checks.push((label.into(), got.to_string(), want.to_string()));
    }
    Ok(checks)
}

fn criterion_goldens() -> Outcome {
    match goldens() {
        Ok(checks) => {
            let bad: Vec<String> = checks
                .iter()
                .filter(|(_, got, want)| got != want)
                .map(|(label, got, want)| format!("{label}: got {got}, expected {want}"))
                .collect();
            Outcome {
                passed: bad.is_empty(),
                detail: if bad.is_empty() {
                    format!("{} golden values", checks.len())
                } else {
                    bad.join("; ")
                },
            }
        }
        Err(e) => Outcome {
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn identities(list: &[(&str, usize)]) -> Outcome {
    let reports: Vec<VerifyReport> = list
        .iter()
        .map(|&(name, degree)| run_identity(&find(name).expect("registered identity"), Some(degree), 0))
        .collect();
    let passed = reports.iter().all(VerifyReport::passed);
    let detail = reports
        .iter()
        .map(|r| {
            let mut s = format!("{} ≤{}: {} cases", r.identity, r.max_degree, r.cases);
            if !r.passed() {
                s.push_str(&format!(", {} failures", r.failure_count));
                if let Some(f) = r.failures.first() {
                    s.push_str(&format!(" (first: {} -- {})", f.input, f.detail));
                }
            }
            s
        })
        .collect::<Vec<_>>()
        .join("; ");
    Outcome { passed, detail }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 7] = [
        ("golden examples", criterion_goldens),
        ("oracle triangle", || identities(&[("jt-vs-pieri", 8)])),
        ("duality sweep", || identities(&[("duality", 7)])),
        ("involution suite", || {
            identities(&[
                ("involutions", 6),
                ("involution-products", 6),
                ("involution-duality", 6),
                ("involution-transport", 6),
                ("skew-transport", 6),
            ])
        }),
        ("Hopf suite", || {
            identities(&[("antipode-axiom", 6), ("antipode-shin", 6), ("coproduct-formulas", 6)])
        }),
        ("Schur bridge", || identities(&[("chi", 7), ("schur-detect", 7), ("lr", 6)])),
        ("tableau suites", || {
            identities(&[("standard-sets", 7), ("flip", 7), ("poset-chains", 7), ("reverse-hooks", 7)])
        }),
    ];
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|(_, f)| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    let mut all = true;
    for (i, ((name, _), o)) in criteria.iter().zip(&outcomes).enumerate() {
        all &= o.passed;
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} ({})", i + 1, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
