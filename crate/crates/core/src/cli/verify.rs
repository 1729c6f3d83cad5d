//! Exhaustive (and, where noted, seeded random) checks of the identities the
//! library is expected to satisfy.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{
    antipode, convert, coproduct, counit, involution, multiply, pair, perp, rperp, Algebra, Basis, Element,
    Involution,
};
use crate::composition::{compositions, partitions, Composition, DescentSet, Partition, WeakComposition};
use crate::error::{Error, Result};
use crate::schur::{
    beth, beth_chain, chi, coproduct_formula, jacobi_trudi, lr_coefficient, nsym_basis, pieri, qsym_basis,
    ribbon_multiply, schur_detect, skew, skew_ii, structure_coeffs, CoproductVariant, Generator, PieriRecursion,
    Side, SymBasis, SymElement,
};
use crate::tableau::{
    chain_to_tableau, count_k, count_k_shape, enumerate_standard, enumerate_tableaux, maximal_chains, Family, Shape,
    Tableau,
};

const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub description: String,
    pub min_degree: usize,
    pub max_degree: usize,
    pub cases: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{}: {status} ({} cases, degrees {}..={}, {} ms)",
            self.identity, self.cases, self.min_degree, self.max_degree, self.wall_time_ms
        )?;
        writeln!(f, "  {}", self.description)?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for fl in &self.failures {
            writeln!(f, "  failure: {} -- {}", fl.input, fl.detail)?;
        }
        if self.failure_count > self.failures.len() {
            writeln!(f, "  ... {} more failures", self.failure_count - self.failures.len())?;
        }
        Ok(())
    }
}

/// State threaded through one identity check.
pub struct Run {
    pub max_degree: usize,
    rng: ChaCha8Rng,
    cases: usize,
    failure_count: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Run {
    fn new(max_degree: usize, seed: u64) -> Self {
        Run {
            max_degree,
            rng: ChaCha8Rng::seed_from_u64(seed),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, input: String, detail: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure { input, detail });
        }
    }

    fn check(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(input(), "condition does not hold".into());
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, input: impl FnOnce() -> String, got: &T, want: &T) {
        self.cases += 1;
        if got != want {
            self.fail(input(), format!("got {got}, expected {want}"));
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }
}

type CheckFn = fn(&mut Run) -> Result<()>;

pub struct Identity {
    pub name: &'static str,
    pub description: &'static str,
    pub min_degree: usize,
    pub default_max_degree: usize,
    check: CheckFn,
}

/// Every registered identity, in a fixed order.
pub fn identities() -> Vec<Identity> {
    macro_rules! id {
        ($name:expr, $min:expr, $max:expr, $f:expr, $desc:expr) => {
            Identity {
                name: $name,
                description: $desc,
                min_degree: $min,
                default_max_degree: $max,
                check: $f,
            }
        };
    }
    vec![
        id!("compositions", 0, 9, check_compositions,
            "complement, reverse, transpose and conjugate are involutions; transpose = complement∘reverse = reverse∘complement; set and comp are inverse; 2^(n-1) compositions in strictly increasing canonical order"),
        id!("refinement-order", 1, 7, check_refinement,
            "refinement is reflexive, antisymmetric and transitive, and finer compositions are longer"),
        id!("ssyt", 1, 7, check_ssyt,
            "shin-tableaux of partition shape are counted like semistandard Young tableaux (independent generator)"),
        id!("standard-sets", 1, 7, check_standard_sets,
            "standard shin and row-strict tableaux coincide with complementary descent sets; likewise flipped and backward"),
        id!("flip", 1, 7, check_flip,
            "flip is a bijection from standard shin (row-strict) tableaux to standard flipped (backward) tableaux that reverses descent compositions, on straight and skew shapes"),
        id!("standardize", 1, 6, check_standardize,
            "standardization yields a standard tableau whose descent composition is refined by the flattened content"),
        id!("poset-chains", 0, 7, check_chains,
            "saturated chains from β to α in the shin poset biject with standard skew shin-tableaux of shape α/β (|β| ≤ 3)"),
        id!("removal-condition", 1, 7, check_removal_condition,
            "the row-index legality condition of skew and skew-II shapes holds exactly when standard tableaux of the matching families exist"),
        id!("round-trip", 0, 7, check_round_trip,
            "converting between any two bases of one algebra and back is the identity"),
        id!("duality", 0, 7, check_duality,
            "the pairing is the Kronecker delta on (H,M), (R,F) and the four Schur-like dual pairs"),
        id!("kl-counts", 1, 6, check_kl_counts,
            "H- and R-expansions of each Schur-like basis have tableau-count coefficients (K and L numbers)"),
        id!("involutions", 0, 6, check_involutions,
            "psi, rho and omega square to the identity and omega = psi∘rho = rho∘psi"),
        id!("involution-products", 0, 6, check_involution_products,
            "psi is multiplicative on NSym, rho and omega are anti-multiplicative on NSym, all three are multiplicative on QSym"),
        id!("involution-duality", 0, 6, check_involution_duality,
            "the pairing is invariant under psi, rho and omega"),
        id!("involution-transport", 0, 6, check_involution_transport,
            "psi(H_a)=E_a, rho(H_a)=H_a^r, omega(H_a)=E_a^r; psi, rho, omega send sh_a to rsh_a, fsh_a^r, bsh_a^r and sh*_a to rsh*_a, fsh*_a^r, bsh*_a^r"),
        id!("skew-transport", 0, 6, check_skew_transport,
            "psi(sh*_a/b) = rsh*_a/b, rho(sh*_a/b) = fsh*_(a^r//b^r), omega(sh*_a/b) = bsh*_(a^r//b^r)"),
        id!("perp-adjoint", 0, 6, check_perp_adjoint,
            "<h g, f> = <g, perp(h,f)> and <g h, f> = <g, rperp(h,f)> on seeded random elements"),
        id!("antipode-axiom", 0, 6, check_antipode_axiom,
            "sum S(x1) x2 = sum x1 S(x2) = counit(x) 1 for x = H_n and x = M_a"),
        id!("antipode-shin", 0, 6, check_antipode_shin,
            "S(sh_a) = (-1)^|a| bsh_(a^r)"),
        id!("coproduct-formulas", 0, 6, check_coproduct_formulas,
            "the coproduct of X*_a equals sum X*_b ⊗ X*_(a/b) and sum X*_(a//b) ⊗ X*_b for every family"),
        id!("jt-vs-pieri", 0, 8, check_triangle,
            "Kostka inversion, the Pieri recursion and the determinantal formula give the same H-expansion of sh (Pieri recursion on every composition, determinant on strictly increasing ones)"),
        id!("beth", 1, 8, check_beth,
            "creation operators: beth_m(sh_a) = sh_(m,a) for 0 < m < a_1, and sh_b = beth_b1 ... beth_bk (1) for strictly increasing b"),
        id!("jt-families", 1, 7, check_jt_families,
            "determinantal formulas for rsh (E, increasing), fsh (H, decreasing) and bsh (E, decreasing)"),
        id!("pieri-families", 1, 6, check_pieri_families,
            "the four Pieri rules agree with the generic product"),
        id!("ribbon", 0, 7, check_ribbon,
            "ribbon multiplication by tableaux agrees with the generic product for all four families (|a| ≤ 4, |b| ≤ 3)"),
        id!("reverse-hooks", 1, 7, check_reverse_hooks,
            "sh*_a = F_a exactly when a = (1^k, m)"),
        id!("skew-counts", 0, 6, check_skew_counts,
            "M-coefficients of skew and skew-II functions count skew (sh, rsh) and skew-II (fsh, bsh) tableaux"),
        id!("chi", 0, 7, check_chi,
            "chi(sh_l) = s_l, chi(sh_a) = 0 for non-partitions, and chi is multiplicative on seeded random pairs of degree ≤ 4"),
        id!("schur-detect", 0, 7, check_schur_detect,
            "sh*_l = s_l, rsh*_l = s_l', fsh*_(l^r) = s_l and bsh*_(l^r) = s_l' inside QSym"),
        id!("lr", 0, 6, check_lr,
            "shin structure coefficients on partitions are Littlewood-Richardson coefficients and vanish at partitions when an input is not a partition"),
    ]
}

pub fn find(name: &str) -> Result<Identity> {
    identities()
        .into_iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Runs one identity up to `max_degree` (or its default).
pub fn run_identity(identity: &Identity, max_degree: Option<usize>, seed: u64) -> VerifyReport {
    let max = max_degree.unwrap_or(identity.default_max_degree);
    let start = Instant::now();
    let mut run = Run::new(max, seed);
    if let Err(e) = (identity.check)(&mut run) {
        run.fail("internal".into(), e.to_string());
    }
    VerifyReport {
        identity: identity.name.to_string(),
        description: identity.description.to_string(),
        min_degree: identity.min_degree,
        max_degree: max,
        cases: run.cases,
        failure_count: run.failure_count,
        failures: run.failures,
        notes: run.notes,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

fn comps_upto(min: usize, max: usize) -> impl Iterator<Item = Composition> {
    (min..=max).flat_map(compositions)
}

fn sign(n: usize) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn in_h(x: &Element) -> Result<Element> {
    convert(x, x.algebra().canonical())
}

fn check_compositions(run: &mut Run) -> Result<()> {
    for n in 0..=run.max_degree {
        let all = compositions(n);
        let expected = if n == 0 { 1 } else { 1usize << (n - 1) };
        run.eq(|| format!("n={n}"), &all.len(), &expected);
        run.check(all.windows(2).all(|w| w[0] < w[1]), || format!("order of compositions of {n}"));
        for a in &all {
            run.eq(|| format!("complement {a}"), &a.complement().complement(), a);
            run.eq(|| format!("reverse {a}"), &a.reverse().reverse(), a);
            run.eq(|| format!("transpose {a}"), &a.transpose().transpose(), a);
            run.eq(|| format!("transpose {a}"), &a.transpose(), &a.complement().reverse());
            run.eq(|| format!("transpose {a}"), &a.transpose(), &a.reverse().complement());
            let set = a.descent_set();
            run.eq(|| format!("set/comp {a}"), &set.to_composition(), a);
            let again = DescentSet::new(n.max(1), set.elements().to_vec())?;
            run.check(n == 0 || again == set, || format!("comp/set {a}"));
        }
        for l in partitions(n) {
            run.eq(|| format!("conjugate {l}"), &l.conjugate().conjugate(), &l);
        }
    }
    Ok(())
}

fn check_refinement(run: &mut Run) -> Result<()> {
    for n in 1..=run.max_degree {
        let all = compositions(n);
        for a in &all {
            run.check(a.refines(a)?, || format!("reflexive {a}"));
            for b in &all {
                let ab = a.refines(b)?;
                if ab {
                    run.check(a.len() >= b.len(), || format!("length {a} {b}"));
                    if b.refines(a)? {
                        run.eq(|| format!("antisymmetry {a} {b}"), a, b);
                    }
                    for c in &all {
                        if b.refines(c)? {
                            run.check(a.refines(c)?, || format!("transitivity {a} {b} {c}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Counts semistandard Young tableaux of shape `lambda` with the given content
/// by filling boxes in row-major order.
fn ssyt_count(lambda: &[usize], content: &[usize]) -> u64 {
    fn rec(lambda: &[usize], cells: &[(usize, usize)], pos: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (r, c) = cells[pos];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            left[v - 1] -= 1;
            grid[r][c] = v;
            total += rec(lambda, cells, pos + 1, grid, left);
            grid[r][c] = 0;
            left[v - 1] += 1;
        }
        total
    }
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
    rec(lambda, &cells, 0, &mut grid, &mut content.to_vec())
}

fn check_ssyt(run: &mut Run) -> Result<()> {
    for n in 1..=run.max_degree {
        for l in partitions(n) {
            for mu in compositions(n) {
                let got = count_k(Family::Shin, l.as_composition(), &WeakComposition::from(&mu))?;
                run.eq(|| format!("shape {l} content {mu}"), &got, &ssyt_count(l.parts(), mu.parts()));
            }
        }
    }
    Ok(())
}

fn check_standard_sets(run: &mut Run) -> Result<()> {
    for a in comps_upto(1, run.max_degree) {
        let n = a.size();
        let shape = Shape::Straight(a.clone());
        for (x, y) in [(Family::Shin, Family::RowStrict), (Family::Flipped, Family::Backward)] {
            let xs: BTreeSet<Vec<Vec<usize>>> = enumerate_standard(&shape, x).iter().map(|t| t.rows().to_vec()).collect();
            let ys: BTreeSet<Vec<Vec<usize>>> = enumerate_standard(&shape, y).iter().map(|t| t.rows().to_vec()).collect();
            run.check(xs == ys, || format!("{x} vs {y} on {a}"));
            for rows in &xs {
                let dx = Tableau::new(shape.clone(), x, rows.clone())?.descents()?;
                let dy = Tableau::new(shape.clone(), y, rows.clone())?.descents()?;
                let mut union: Vec<usize> = dx.iter().chain(&dy).copied().collect();
                union.sort_unstable();
                run.eq(
                    || format!("{x}/{y} descents of {rows:?}"),
                    &format!("{union:?}"),
                    &format!("{:?}", (1..n).collect::<Vec<_>>()),
                );
            }
        }
    }
    Ok(())
}

fn check_flip(run: &mut Run) -> Result<()> {
    let mut shapes: Vec<Shape> = comps_upto(1, run.max_degree).map(Shape::Straight).collect();
    for a in comps_upto(2, run.max_degree.min(6)) {
        for b in comps_upto(1, 2) {
            if b.contained_in(&a) && b.size() < a.size() {
                shapes.push(Shape::skew(a.clone(), b)?);
            }
        }
    }
    for shape in shapes {
        for fam in [Family::Shin, Family::RowStrict] {
            let source = enumerate_standard(&shape, fam);
            let mut images = BTreeSet::new();
            let mut target_shape = None;
            for t in &source {
                let f = t.flip()?;
                run.check(f.is_valid() && f.is_standard(), || format!("flip of {t:?} is a valid tableau"));
                run.eq(
                    || format!("descents of flip({:?})", t.rows()),
                    &f.descent_composition()?,
                    &t.descent_composition()?.reverse(),
                );
                run.eq(|| format!("flip twice {:?}", t.rows()), &f.flip()?, t);
                target_shape = Some(f.shape().clone());
                images.insert(f.rows().to_vec());
            }
            if let Some(ts) = target_shape {
                let target: BTreeSet<_> = enumerate_standard(&ts, fam.flipped()).iter().map(|t| t.rows().to_vec()).collect();
                run.check(images == target, || format!("flip is onto for {fam} {shape}"));
            }
        }
    }
    Ok(())
}

fn check_standardize(run: &mut Run) -> Result<()> {
    for a in comps_upto(1, run.max_degree) {
        let shape = Shape::Straight(a.clone());
        for content in compositions(a.size()) {
            for fam in Family::ALL {
                for t in enumerate_tableaux(&shape, fam, &WeakComposition::from(&content))? {
                    let s = t.standardize();
                    run.check(s.is_valid() && s.is_standard(), || format!("standardize {fam} {:?}", t.rows()));
                    let co = s.descent_composition()?;
                    run.check(t.content().flatten().refines(&co)?, || format!("content refines descents {fam} {:?}", t.rows()));
                }
            }
        }
    }
    Ok(())
}

fn check_chains(run: &mut Run) -> Result<()> {
    for a in comps_upto(0, run.max_degree) {
        for b in comps_upto(0, 3.min(a.size())) {
            if !b.contained_in(&a) {
                continue;
            }
            let chains = maximal_chains(&b, &a)?;
            let shape = Shape::skew(a.clone(), b.clone())?;
            let standard: BTreeSet<_> = enumerate_standard(&shape, Family::Shin).iter().map(|t| t.rows().to_vec()).collect();
            run.eq(|| format!("chains {b} -> {a}"), &chains.len(), &standard.len());
            let images: BTreeSet<_> = chains
                .iter()
                .map(|c| chain_to_tableau(c).map(|t| t.rows().to_vec()))
                .collect::<Result<_>>()?;
            run.check(images == standard, || format!("chain tableaux {b} -> {a}"));
        }
    }
    Ok(())
}

fn check_removal_condition(run: &mut Run) -> Result<()> {
    for a in comps_upto(1, run.max_degree) {
        for b in comps_upto(1, a.size() - 1) {
            if b.contained_in(&a) {
                let shape = Shape::skew(a.clone(), b.clone())?;
                for fam in [Family::Shin, Family::RowStrict] {
                    let exists = !enumerate_standard(&shape, fam).is_empty();
                    run.eq(|| format!("{fam} on {shape}"), &exists, &shape.satisfies_removal_condition());
                }
            }
            if b.reverse().contained_in(&a.reverse()) {
                let shape = Shape::skew_ii(a.clone(), b.clone())?;
                for fam in [Family::Flipped, Family::Backward] {
                    let exists = !enumerate_standard(&shape, fam).is_empty();
                    run.eq(|| format!("{fam} on {shape}"), &exists, &shape.satisfies_removal_condition());
                }
            }
        }
    }
    Ok(())
}

fn check_round_trip(run: &mut Run) -> Result<()> {
    for alg in [Algebra::NSym, Algebra::QSym] {
        for &from in alg.bases() {
            for &to in alg.bases() {
                for a in comps_upto(0, run.max_degree) {
                    let x = Element::basis(from, a.clone());
                    let back = convert(&convert(&x, to)?, from)?;
                    run.eq(|| format!("{x} via {to}"), &back, &x);
                }
            }
        }
    }
    Ok(())
}

const DUAL_PAIRS: [(Basis, Basis); 6] = [
    (Basis::H, Basis::M),
    (Basis::R, Basis::F),
    (Basis::Sh, Basis::ShStar),
    (Basis::Rsh, Basis::RshStar),
    (Basis::Fsh, Basis::FshStar),
    (Basis::Bsh, Basis::BshStar),
];

fn check_duality(run: &mut Run) -> Result<()> {
    for (x, y) in DUAL_PAIRS {
        for n in 0..=run.max_degree {
            let all = compositions(n);
            let xs: Vec<Element> = all.iter().map(|a| Element::basis(x, a.clone())).collect();
            let ys: Vec<Element> = all.iter().map(|a| Element::basis(y, a.clone())).collect();
            for (i, xa) in xs.iter().enumerate() {
                for (j, yb) in ys.iter().enumerate() {
                    let want = if i == j { BigInt::one() } else { BigInt::zero() };
                    run.eq(|| format!("<{xa}, {yb}>"), &pair(xa, yb)?, &want);
                }
            }
        }
    }
    Ok(())
}

fn check_kl_counts(run: &mut Run) -> Result<()> {
    for fam in Family::ALL {
        let basis = Basis::nsym_of(fam);
        for n in 1..=run.max_degree {
            let all = compositions(n);
            let mut l: BTreeMap<(Composition, Composition), u64> = BTreeMap::new();
            for a in &all {
                for t in enumerate_standard(&Shape::Straight(a.clone()), fam) {
                    *l.entry((a.clone(), t.descent_composition()?)).or_default() += 1;
                }
            }
            for b in &all {
                let h = convert(&Element::basis(Basis::H, b.clone()), basis)?;
                let r = convert(&Element::basis(Basis::R, b.clone()), basis)?;
                for a in &all {
                    let k = count_k(fam, a, &WeakComposition::from(b))?;
                    run.eq(|| format!("H{b} in {basis}{a}"), &h.coeff(basis, a), &BigInt::from(k));
                    let lc = l.get(&(a.clone(), b.clone())).copied().unwrap_or(0);
                    run.eq(|| format!("R{b} in {basis}{a}"), &r.coeff(basis, a), &BigInt::from(lc));
                }
            }
        }
    }
    Ok(())
}

fn check_involutions(run: &mut Run) -> Result<()> {
    use Involution::*;
    for alg in [Algebra::NSym, Algebra::QSym] {
        for &b in alg.bases() {
            for a in comps_upto(0, run.max_degree) {
                let x = Element::basis(b, a);
                for w in Involution::ALL {
                    let twice = involution(w, &involution(w, &x)?)?;
                    run.eq(|| format!("{w}^2 on {x}"), &twice, &x);
                }
                let omega = in_h(&involution(Omega, &x)?)?;
                let psi_rho = in_h(&involution(Psi, &involution(Rho, &x)?)?)?;
                let rho_psi = in_h(&involution(Rho, &involution(Psi, &x)?)?)?;
                run.eq(|| format!("omega = psi rho on {x}"), &omega, &psi_rho);
                run.eq(|| format!("omega = rho psi on {x}"), &omega, &rho_psi);
            }
        }
    }
    Ok(())
}

fn product_pairs(max: usize) -> Vec<(Composition, Composition)> {
    let mut out = Vec::new();
    for a in comps_upto(0, max) {
        for b in comps_upto(0, max - a.size()) {
            out.push((a.clone(), b));
        }
    }
    out
}

fn check_involution_products(run: &mut Run) -> Result<()> {
    for (a, b) in product_pairs(run.max_degree) {
        for (basis, anti) in [(Basis::Sh, true), (Basis::F, false)] {
            let x = Element::basis(basis, a.clone());
            let y = Element::basis(basis, b.clone());
            let xy = multiply(&x, &y)?;
            for w in Involution::ALL {
                let lhs = in_h(&involution(w, &xy)?)?;
                let (wx, wy) = (involution(w, &x)?, involution(w, &y)?);
                let reversed = anti && w != Involution::Psi;
                let rhs = in_h(&if reversed { multiply(&wy, &wx)? } else { multiply(&wx, &wy)? })?;
                run.eq(|| format!("{w}({x} {y})"), &lhs, &rhs);
            }
        }
    }
    Ok(())
}

fn check_involution_duality(run: &mut Run) -> Result<()> {
    for n in 0..=run.max_degree {
        let all = compositions(n);
        for a in &all {
            let x = Element::basis(Basis::Sh, a.clone());
            let images: Vec<Element> = Involution::ALL.iter().map(|&w| involution(w, &x)).collect::<Result<_>>()?;
            for b in &all {
                let y = Element::basis(Basis::F, b.clone());
                let base = pair(&x, &y)?;
                for (w, wx) in Involution::ALL.iter().zip(&images) {
                    run.eq(|| format!("<{w} {x}, {w} {y}>"), &pair(wx, &involution(*w, &y)?)?, &base);
                }
            }
        }
    }
    Ok(())
}

fn check_involution_transport(run: &mut Run) -> Result<()> {
    use Involution::*;
    for a in comps_upto(0, run.max_degree) {
        let r = a.reverse();
        let cases = [
            (Psi, Basis::H, Basis::E, a.clone()),
            (Rho, Basis::H, Basis::H, r.clone()),
            (Omega, Basis::H, Basis::E, r.clone()),
            (Psi, Basis::Sh, Basis::Rsh, a.clone()),
            (Rho, Basis::Sh, Basis::Fsh, r.clone()),
            (Omega, Basis::Sh, Basis::Bsh, r.clone()),
            (Psi, Basis::ShStar, Basis::RshStar, a.clone()),
            (Rho, Basis::ShStar, Basis::FshStar, r.clone()),
            (Omega, Basis::ShStar, Basis::BshStar, r.clone()),
        ];
        for (w, from, to, idx) in cases {
            let x = Element::basis(from, a.clone());
            let got = convert(&involution(w, &x)?, to)?;
            run.eq(|| format!("{w}({x})"), &got, &Element::basis(to, idx));
        }
    }
    Ok(())
}

fn check_skew_transport(run: &mut Run) -> Result<()> {
    for a in comps_upto(0, run.max_degree) {
        for b in comps_upto(0, a.size()) {
            if !b.contained_in(&a) {
                continue;
            }
            let s = skew(Family::Shin, &a, &b)?;
            let (ar, br) = (a.reverse(), b.reverse());
            run.eq(
                || format!("psi(sh*{a}/{b})"),
                &involution(Involution::Psi, &s)?,
                &skew(Family::RowStrict, &a, &b)?,
            );
            run.eq(
                || format!("rho(sh*{a}/{b})"),
                &involution(Involution::Rho, &s)?,
                &skew_ii(Family::Flipped, &ar, &br)?,
            );
            run.eq(
                || format!("omega(sh*{a}/{b})"),
                &involution(Involution::Omega, &s)?,
                &skew_ii(Family::Backward, &ar, &br)?,
            );
        }
    }
    Ok(())
}

fn random_element(rng: &mut ChaCha8Rng, algebra: Algebra, max_degree: usize) -> Element {
    let bases = algebra.bases();
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(0..=max_degree);
        let all = compositions(n);
        let c = all[rng.gen_range(0..all.len())].clone();
        let b = bases[rng.gen_range(0..bases.len())];
        terms.push((b, c, BigInt::from(rng.gen_range(-3i64..=3))));
    }
    Element::from_terms(algebra, terms).expect("terms from one algebra")
}

fn check_perp_adjoint(run: &mut Run) -> Result<()> {
    let small = 3.min(run.max_degree);
    for _ in 0..150 {
        let h = random_element(&mut run.rng, Algebra::NSym, small);
        let g = random_element(&mut run.rng, Algebra::NSym, small);
        let f = random_element(&mut run.rng, Algebra::QSym, run.max_degree);
        run.eq(
            || format!("h={h}; g={g}; f={f} (left)"),
            &pair(&multiply(&h, &g)?, &f)?,
            &pair(&g, &perp(&h, &f)?)?,
        );
        run.eq(
            || format!("h={h}; g={g}; f={f} (right)"),
            &pair(&multiply(&g, &h)?, &f)?,
            &pair(&g, &rperp(&h, &f)?)?,
        );
    }
    Ok(())
}

fn antipode_sides(x: &Element) -> Result<(Element, Element)> {
    let alg = x.algebra();
    let mut left = Element::zero(alg);
    let mut right = Element::zero(alg);
    for ((b1, c1), (b2, c2), k) in coproduct(x)?.terms() {
        let x1 = Element::term(*b1, c1.clone(), k.clone());
        let x2 = Element::basis(*b2, c2.clone());
        left = left.try_add(&in_h(&multiply(&antipode(&x1)?, &x2)?)?)?;
        right = right.try_add(&in_h(&multiply(&x1, &antipode(&x2)?)?)?)?;
    }
    Ok((left, right))
}

fn check_antipode_axiom(run: &mut Run) -> Result<()> {
    let mut inputs: Vec<Element> = (0..=run.max_degree)
        .map(|n| Element::basis(Basis::H, if n == 0 { Composition::empty() } else { Composition::new(vec![n]).unwrap() }))
        .collect();
    inputs.extend(comps_upto(0, run.max_degree).map(|a| Element::basis(Basis::M, a)));
    for x in inputs {
        let unit = Element::one(x.algebra()).scale(&counit(&x)?);
        let (left, right) = antipode_sides(&x)?;
        run.eq(|| format!("S(x1) x2 for {x}"), &left, &unit);
        run.eq(|| format!("x1 S(x2) for {x}"), &right, &unit);
    }
    Ok(())
}

fn check_antipode_shin(run: &mut Run) -> Result<()> {
    for a in comps_upto(0, run.max_degree) {
        let x = Element::basis(Basis::Sh, a.clone());
        let want = Element::basis(Basis::Bsh, a.reverse()).scale(&sign(a.size()));
        run.eq(|| format!("S({x})"), &in_h(&antipode(&x)?)?, &in_h(&want)?);
        let y = Element::basis(Basis::ShStar, a.clone());
        let want = Element::basis(Basis::BshStar, a.reverse()).scale(&sign(a.size()));
        run.eq(|| format!("S({y})"), &in_h(&antipode(&y)?)?, &in_h(&want)?);
    }
    Ok(())
}

fn check_coproduct_formulas(run: &mut Run) -> Result<()> {
    let mut uncontained = 0;
    for fam in Family::ALL {
        let star = Basis::qsym_of(fam);
        for a in comps_upto(0, run.max_degree) {
            let direct = coproduct(&qsym_basis(fam, a.clone()))?.convert(star, star)?;
            for v in [CoproductVariant::Skew, CoproductVariant::SkewII] {
                let f = coproduct_formula(fam, &a, v)?;
                run.eq(|| format!("{v:?} coproduct of {star}{a}"), &f.tensor, &direct);
                for b in &f.uncontained {
                    uncontained += 1;
                    if uncontained <= 10 {
                        run.note(format!("{fam} {v:?}: nonzero term for {a} with uncontained {b}"));
                    }
                }
            }
        }
    }
    run.note(format!("nonzero terms with uncontained index: {uncontained}"));
    Ok(())
}

fn check_triangle(run: &mut Run) -> Result<()> {
    let mut rec = PieriRecursion::new();
    for a in comps_upto(0, run.max_degree) {
        let by_inversion = convert(&Element::basis(Basis::Sh, a.clone()), Basis::H)?;
        run.eq(|| format!("Pieri recursion for sh{a}"), &rec.shin(&a), &by_inversion);
        if a.is_strictly_increasing() {
            run.eq(|| format!("determinant for sh{a}"), &jacobi_trudi(Family::Shin, &a)?, &by_inversion);
        }
    }
    Ok(())
}

fn check_beth(run: &mut Run) -> Result<()> {
    for a in comps_upto(1, run.max_degree) {
        let first = a.first().unwrap();
        for m in 1..first {
            if a.size() + m > run.max_degree {
                break;
            }
            let x = convert(&Element::basis(Basis::Sh, a.clone()), Basis::H)?;
            let want = convert(&Element::basis(Basis::Sh, a.prepend(m)), Basis::H)?;
            run.eq(|| format!("beth_{m}(sh{a})"), &beth(m, &x)?, &want);
        }
        if a.is_strictly_increasing() {
            let want = convert(&Element::basis(Basis::Sh, a.clone()), Basis::H)?;
            run.eq(|| format!("beth chain {a}"), &beth_chain(&a)?, &want);
        }
    }
    Ok(())
}

fn check_jt_families(run: &mut Run) -> Result<()> {
    for fam in Family::ALL {
        let generator = if fam.strict_rows() { Basis::E } else { Basis::H };
        for a in comps_upto(1, run.max_degree) {
            let ok = if fam.increasing_rows() { a.is_strictly_increasing() } else { a.is_strictly_decreasing() };
            if !ok {
                continue;
            }
            let want = convert(&nsym_basis(fam, a.clone()), generator)?;
            run.eq(|| format!("determinant for {fam} {a}"), &jacobi_trudi(fam, &a)?, &want);
        }
    }
    Ok(())
}

fn check_pieri_families(run: &mut Run) -> Result<()> {
    let rules = [
        (Family::Shin, Side::Right, Generator::H),
        (Family::RowStrict, Side::Right, Generator::E),
        (Family::Flipped, Side::Left, Generator::H),
        (Family::Backward, Side::Left, Generator::E),
    ];
    for (fam, side, gen) in rules {
        let basis = Basis::nsym_of(fam);
        let gen_basis = if gen == Generator::H { Basis::H } else { Basis::E };
        for a in comps_upto(0, run.max_degree - 1) {
            for r in 1..=run.max_degree - a.size() {
                let x = nsym_basis(fam, a.clone());
                let g = Element::basis(gen_basis, Composition::new(vec![r])?);
                let generic = match side {
                    Side::Right => multiply(&x, &g)?,
                    Side::Left => convert(&multiply(&g, &x)?, basis)?,
                };
                run.eq(|| format!("Pieri {fam} {a} r={r}"), &pieri(fam, &a, r, side, gen)?, &generic);
            }
        }
    }
    Ok(())
}

fn check_ribbon(run: &mut Run) -> Result<()> {
    for fam in Family::ALL {
        let basis = Basis::nsym_of(fam);
        for a in comps_upto(0, 4.min(run.max_degree)) {
            for b in comps_upto(1, 3.min(run.max_degree.saturating_sub(a.size()))) {
                let x = nsym_basis(fam, a.clone());
                let r = Element::basis(Basis::R, b.clone());
                let generic = if fam.increasing_rows() { multiply(&x, &r)? } else { multiply(&r, &x)? };
                run.eq(
                    || format!("ribbon {fam} {a} {b}"),
                    &ribbon_multiply(fam, &a, &b)?,
                    &convert(&generic, basis)?,
                );
            }
        }
    }
    Ok(())
}

fn check_reverse_hooks(run: &mut Run) -> Result<()> {
    for a in comps_upto(1, run.max_degree) {
        let f = convert(&Element::basis(Basis::ShStar, a.clone()), Basis::F)?;
        let equal = f == Element::basis(Basis::F, a.clone());
        run.eq(|| format!("sh*{a} = F{a}"), &equal, &a.is_reverse_hook());
    }
    Ok(())
}

fn check_skew_counts(run: &mut Run) -> Result<()> {
    for a in comps_upto(0, run.max_degree) {
        for b in comps_upto(0, a.size()) {
            let rest = compositions(a.size() - b.size());
            if b.contained_in(&a) {
                let shape = Shape::skew(a.clone(), b.clone())?;
                for fam in [Family::Shin, Family::RowStrict] {
                    let s = skew(fam, &a, &b)?;
                    for g in &rest {
                        let k = count_k_shape(fam, &shape, &WeakComposition::from(g))?;
                        run.eq(|| format!("{fam} {shape} content {g}"), &s.coeff(Basis::M, g), &BigInt::from(k));
                    }
                }
            }
            if b.reverse().contained_in(&a.reverse()) {
                let shape = Shape::skew_ii(a.clone(), b.clone())?;
                for fam in [Family::Flipped, Family::Backward] {
                    let s = skew_ii(fam, &a, &b)?;
                    for g in &rest {
                        let k = count_k_shape(fam, &shape, &WeakComposition::from(g))?;
                        run.eq(|| format!("{fam} {shape} content {g}"), &s.coeff(Basis::M, g), &BigInt::from(k));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_chi(run: &mut Run) -> Result<()> {
    for a in comps_upto(0, run.max_degree) {
        let got = chi(&Element::basis(Basis::Sh, a.clone()))?.to_basis(SymBasis::Schur);
        let want = if a.is_partition() {
            SymElement::term(SymBasis::Schur, Partition::try_from(a.clone())?, 1)
        } else {
            SymElement::zero(SymBasis::Schur)
        };
        run.eq(|| format!("chi(sh{a})"), &got, &want);
    }
    let small = 4.min(run.max_degree);
    for _ in 0..40 {
        let x = random_element(&mut run.rng, Algebra::NSym, small / 2);
        let y = random_element(&mut run.rng, Algebra::NSym, small - small / 2);
        let lhs = chi(&multiply(&x, &y)?)?.to_basis(SymBasis::Schur);
        let rhs = chi(&x)?.multiply(&chi(&y)?);
        run.eq(|| format!("chi({x} * {y})"), &lhs, &rhs);
    }
    Ok(())
}

fn check_schur_detect(run: &mut Run) -> Result<()> {
    let mut literal_backward = 0;
    let mut total = 0;
    for n in 0..=run.max_degree {
        for l in partitions(n) {
            let lc = l.as_composition().clone();
            let s = SymElement::term(SymBasis::Schur, l.clone(), 1);
            let sc = SymElement::term(SymBasis::Schur, l.conjugate(), 1);
            let cases = [
                (Basis::ShStar, lc.clone(), &s),
                (Basis::RshStar, lc.clone(), &sc),
                (Basis::FshStar, lc.reverse(), &s),
                (Basis::BshStar, lc.reverse(), &sc),
            ];
            for (b, idx, want) in cases {
                let got = schur_detect(&Element::basis(b, idx.clone()))?;
                run.check(got.as_ref() == Some(want), || format!("{b}{idx} = {want}"));
            }
            total += 1;
            if schur_detect(&Element::basis(Basis::BshStar, lc.clone()))?.as_ref() == Some(&sc) {
                literal_backward += 1;
            }
        }
    }
    run.note(format!(
        "bsh* indexed by the partition itself equals s of the conjugate for {literal_backward} of {total} partitions"
    ));
    Ok(())
}

fn check_lr(run: &mut Run) -> Result<()> {
    for (b, g) in product_pairs(run.max_degree) {
        let coeffs = structure_coeffs(Family::Shin, &b, &g)?;
        let by_alpha: BTreeMap<Composition, BigInt> = coeffs.into_iter().map(|c| (c.alpha, c.value)).collect();
        let both = b.is_partition() && g.is_partition();
        for l in partitions(b.size() + g.size()) {
            let got = by_alpha.get(l.as_composition()).cloned().unwrap_or_default();
            let want = if both {
                lr_coefficient(&l, &Partition::try_from(b.clone())?, &Partition::try_from(g.clone())?)
            } else {
                BigInt::zero()
            };
            run.eq(|| format!("C^{l}_({b},{g})"), &got, &want);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ssyt_oracle_small() {
        assert_eq!(ssyt_count(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(ssyt_count(&[2, 2], &[1, 1, 1, 1]), 2);
        assert_eq!(ssyt_count(&[2], &[1, 1]), 1);
    }

    #[test]
    fn names_are_unique() {
        let names: BTreeSet<_> = identities().iter().map(|i| i.name).collect();
        assert_eq!(names.len(), identities().len());
        assert!(matches!(find("nope"), Err(Error::UnknownIdentity(_))));
    }
}
