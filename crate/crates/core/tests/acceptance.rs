//! Acceptance runner: one PASS/FAIL line per criterion, items 1-4 once per field.
//!
//! Known failures are printed as FAIL with their reason but do not change the
//! exit status; any other failure does.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use ginlex::curve::{
    curve_invariants, examples::projected_rnc, genus_bound_pi3, pi3_bound_holds, predicted_m, project_to_p3,
    tangent_dim_at,
};
use ginlex::groebner::oracle_hilbert_function;
use ginlex::ideal_file::parse_ideal_file;
use ginlex::partial_elim::decomposition_check;
use ginlex::{
    buchberger, curve_report, gin, ideals_equal, Field, Gf32003, GinOptions, GinResult, Ideal, MonomialIdeal,
    PartialElimLadder, Rational, ReportOptions, TermOrder, Verdict,
};

const GLEX: TermOrder = TermOrder::GradedLex;

// Gins as printed, in the printed variable names.
const PRINTED_K1_CONCA_SIDMAN: &[&str] = &[
    "y^4",
    "y^3z^2",
    "y^2z^5",
    "yz^8",
    "z^{15}",
    "y^2z^4t",
    "y^3zt^2",
    "y^2z^3t^2",
    "yz^7t^2",
    "y^3t^3",
    "y^2z^2t^4",
    "yz^6t^4",
    "y^2zt^5",
    "yz^5t^6",
    "y^2t^7",
    "yz^4t^8",
    "yz^3t^{10}",
];
const PRINTED_QUARTIC_QUADRIC: &[&str] = &[
    "x^2", "xy^3", "y^8", "xy^2z^2", "xyz^5", "xz^{12}", "xy^2zt^2", "xyz^4t^2", "xy^2t^4", "xyz^3t^4", "xyz^2t^6",
    "xyzt^8", "xyt^{10}",
];
const PRINTED_RNC4_SECANT: &[&str] = &["x_1^2", "x_1x_2", "x_2^4", "x_1x_3^2"];
const PRINTED_RNC5_SECANT_GENERIC: &[&str] = &[
    "x_2^3",
    "x_2^2x_3",
    "x_2x_3^3",
    "x_3^5",
    "x_2^2x_4",
    "x_2x_3x_4^2",
    "x_2x_4^5",
    "x_2x_3x_4x_5",
    "x_2x_3x_5^2",
];
const PRINTED_RNC5_TWO_SECANTS: &[&str] = &["x_2^2", "x_2x_3^2", "x_3^5", "x_2x_3x_4", "x_2x_4^4", "x_2x_3x_5^2"];

const XYZT: &[&str] = &["x", "y", "z", "t"];
const YZT: &[&str] = &["y", "z", "t"];
const X1_X4: &[&str] = &["x_1", "x_2", "x_3", "x_4"];
const X2_X5: &[&str] = &["x_2", "x_3", "x_4", "x_5"];

/// Exponent vector of a printed monomial such as `xy^2z^2`, `yz^{10}` or
/// `x_2x_3x_4^2`; `vars` lists the printed names in index order.
fn printed_exponents(m: &str, vars: &[&str]) -> Vec<u32> {
    let mut e = vec![0u32; vars.len()];
    let chars: Vec<char> = m.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let mut name = chars[k].to_string();
        k += 1;
        if k < chars.len() && chars[k] == '_' {
            name.push('_');
            k += 1;
            while k < chars.len() && chars[k].is_ascii_digit() {
                name.push(chars[k]);
                k += 1;
            }
        }
        let mut pow = 1;
        if k < chars.len() && chars[k] == '^' {
            k += 1;
            let braced = chars[k] == '{';
            if braced {
                k += 1;
            }
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            pow = chars[start..k].iter().collect::<String>().parse().unwrap();
            if braced {
                k += 1;
            }
        }
        let idx = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable {name} in {m}"));
        e[idx] += pow;
    }
    e
}

fn printed_set(list: &[&str], vars: &[&str]) -> BTreeSet<Vec<u32>> {
    list.iter().map(|m| printed_exponents(m, vars)).collect()
}

fn exponent_set(j: &MonomialIdeal) -> BTreeSet<Vec<u32>> {
    j.generators().iter().map(|m| m.exponents().to_vec()).collect()
}

fn has(j: &MonomialIdeal, e: &[u32]) -> bool {
    exponent_set(j).contains(e)
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn load<F: Field>(name: &str) -> Ideal<F> {
    let text = std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_ideal_file(&text).unwrap().ideal().unwrap()
}

struct Check {
    name: &'static str,
    ok: bool,
    detail: String,
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        ok,
        detail: detail.into(),
    }
}

#[derive(Default)]
struct Runner {
    passed: usize,
    failed: Vec<String>,
    known: Vec<String>,
}

impl Runner {
    /// Reports one criterion. `known` names a sub-check whose failure is documented.
    fn report(
        &mut self,
        id: &str,
        title: &str,
        elapsed: Duration,
        budget: Option<Duration>,
        mut checks: Vec<Check>,
        known: Option<&str>,
    ) {
        if let Some(b) = budget {
            checks.push(check(
                "runtime",
                elapsed < b,
                format!("{:.1}s < {}s", elapsed.as_secs_f64(), b.as_secs()),
            ));
        }
        let failing: Vec<&Check> = checks.iter().filter(|c| !c.ok).collect();
        let unexpected: Vec<&&Check> = failing.iter().filter(|c| Some(c.name) != known).collect();
        let status = if failing.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("{status} {id:<8} {title} ({:.1}s)", elapsed.as_secs_f64());
        if failing.is_empty() {
            let summary: Vec<String> = checks
                .iter()
                .filter(|c| !c.detail.is_empty())
                .map(|c| c.detail.clone())
                .collect();
            if !summary.is_empty() {
                line.push_str(&format!(": {}", summary.join("; ")));
            }
        } else {
            let parts: Vec<String> = failing.iter().map(|c| format!("{} [{}]", c.name, c.detail)).collect();
            line.push_str(&format!(": failed {}", parts.join("; ")));
            if unexpected.is_empty() {
                line.push_str(" (known failure, documented)");
            }
        }
        println!("{line}");
        if failing.is_empty() {
            self.passed += 1;
        } else if unexpected.is_empty() {
            self.known.push(id.to_string());
        } else {
            self.failed.push(id.to_string());
        }
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn gin_glex<F: Field>(i: &Ideal<F>) -> GinResult<F> {
    gin(i, GLEX, &GinOptions::default()).expect("gin")
}

fn points<F: Field>(p: &[i64]) -> Vec<Vec<F>> {
    vec![p.iter().map(|&c| F::from_i64(c)).collect()]
}

fn item1<F: Field>(r: &mut Runner, tag: &str) {
    let t = Instant::now();
    let i: Ideal<F> = load("conca_sidman.id");
    let rep = curve_report(&i, &points(&[0, 0, 0, 1]), &ReportOptions::default()).unwrap();
    let g = gin_glex(&i);
    let ladder = PartialElimLadder::from_basis(&g.basis).unwrap();
    let k1 = &ladder.level(1).unwrap().initial;
    let k1_gin = gin_glex(&ladder.level(1).unwrap().ideal).gin;
    let printed = printed_set(PRINTED_K1_CONCA_SIDMAN, YZT);
    let checks = vec![
        check("M", rep.m_actual == 16, format!("M={}", rep.m_actual)),
        check(
            "Gin(K1)",
            exponent_set(&k1_gin) == printed && exponent_set(k1) == printed,
            format!("Gin(K1)={} printed monomials", printed.len()),
        ),
        check("z^15", has(&k1_gin, &[0, 15, 0]), "x2^15 in Gin(K1)"),
        check("M = 1 + M(K1)", k1_gin.max_degree() == Some(15), ""),
        check(
            "predicted_M",
            predicted_m(9, 10) == 19 && rep.m_predicted == 19,
            format!("predicted_M={}", rep.m_predicted),
        ),
        check(
            "verdict",
            rep.verdict == Verdict::HypothesisViolated,
            rep.verdict.as_str(),
        ),
        check(
            "tangent",
            rep.tangent_dims == vec![3],
            format!("tan dim {:?}", rep.tangent_dims),
        ),
    ];
    r.report(
        &format!("1[{tag}]"),
        "Conca-Sidman curve",
        t.elapsed(),
        secs(60),
        checks,
        None,
    );
}

fn item2<F: Field>(r: &mut Runner, tag: &str) {
    let t = Instant::now();
    let i: Ideal<F> = load("ex_quartic_quadric.id");
    let inv = curve_invariants(&i).unwrap();
    let g = gin_glex(&i);
    let m = g.gin.regularity_borel().unwrap();
    let tan = tangent_dim_at(&i, &points::<F>(&[0, 0, 0, 1])[0]).unwrap();
    let checks = vec![
        check(
            "invariants",
            (inv.degree, inv.genus) == (8, 9),
            format!("(d,g)=({},{})", inv.degree, inv.genus),
        ),
        check("M", m == 13, format!("M={m}")),
        check(
            "gin",
            exponent_set(&g.gin) == printed_set(PRINTED_QUARTIC_QUADRIC, XYZT),
            "gin = 13 printed monomials",
        ),
        check("x0*x2^12", has(&g.gin, &[1, 0, 12, 0]), "x0*x2^12 present"),
        check("tangent", tan == 2, format!("tan dim {tan}")),
    ];
    r.report(
        &format!("2[{tag}]"),
        "quartic-quadric complete intersection",
        t.elapsed(),
        secs(60),
        checks,
        None,
    );
}

fn item3<F: Field>(r: &mut Runner, tag: &str) {
    let t = Instant::now();
    let i: Ideal<F> = load("ex_cubic_cubic.id");
    let rep = curve_report(&i, &points(&[0, 0, 0, 1]), &ReportOptions::default()).unwrap();
    let checks = vec![
        check(
            "invariants",
            (rep.degree, rep.genus) == (9, 10),
            format!("(d,g)=({},{})", rep.degree, rep.genus),
        ),
        check("M", rep.m_actual == 19, format!("M={}", rep.m_actual)),
        check("x0*x2^18", has(&rep.gin, &[1, 0, 18, 0]), "x0*x2^18 present"),
        check(
            "tangent",
            rep.tangent_dims == vec![2],
            format!("tan dim {:?}", rep.tangent_dims),
        ),
    ];
    r.report(
        &format!("3[{tag}]"),
        "reconstructed cubic-cubic example",
        t.elapsed(),
        secs(120),
        checks,
        None,
    );
}

fn item4<F: Field>(r: &mut Runner, tag: &str) {
    type Case = (
        &'static str,
        &'static str,
        &'static str,
        &'static [(i64, i64, i64)],
        (u64, i64),
        u32,
        &'static [&'static str],
        &'static [&'static str],
        [u32; 4],
    );
    let cases: [Case; 3] = [
        (
            "4a",
            "RNC4 via a secant center",
            "rnc4_secant.id",
            &[(0, 1, 1)],
            (4, 1),
            4,
            PRINTED_RNC4_SECANT,
            X1_X4,
            [0, 4, 0, 0],
        ),
        (
            "4b",
            "RNC5 via a secant and a generic center",
            "rnc5_secant.id",
            &[(0, 1, 1)],
            (5, 1),
            6,
            PRINTED_RNC5_SECANT_GENERIC,
            X2_X5,
            [1, 0, 5, 0],
        ),
        (
            "4c",
            "RNC5 via two secant centers",
            "rnc5_two_secants.id",
            &[(0, 1, 1), (2, 3, 1)],
            (5, 2),
            5,
            PRINTED_RNC5_TWO_SECANTS,
            X2_X5,
            [1, 0, 4, 0],
        ),
    ];
    for (id, title, file, secants, inv, m_expected, printed, vars, witness) in cases {
        let t = Instant::now();
        let i: Ideal<F> = load(file);
        let built = projected_rnc::<F>(if id == "4a" { 4 } else { 5 }, secants).unwrap();
        let rep = curve_report(&i, &[], &ReportOptions::default()).unwrap();
        let printed = printed_set(printed, vars);
        let w = witness.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        let checks = vec![
            check("shipped ideal", ideals_equal(&i, &built).unwrap(), ""),
            check(
                "invariants",
                (rep.degree, rep.genus) == inv,
                format!("(d,g)=({},{})", rep.degree, rep.genus),
            ),
            check("M", rep.m_actual == m_expected, format!("M={}", rep.m_actual)),
            check("witness", has(&rep.gin, &witness), format!("[{w}] present")),
            check(
                "printed gin",
                exponent_set(&rep.gin) == printed,
                format!(
                    "{} printed vs computed {}",
                    printed.len(),
                    rep.gin.canonical_strings().join(",")
                ),
            ),
        ];
        let known = (id == "4b").then_some("printed gin");
        r.report(&format!("{id}[{tag}]"), title, t.elapsed(), secs(120), checks, known);
    }
}

/// A shipped curve with its gin and ladder in the P^3 frame.
struct Shipped<F> {
    file: &'static str,
    ideal: Ideal<F>,
    frame: Ideal<F>,
    gin: GinResult<F>,
    ladder: PartialElimLadder<F>,
}

const SHIPPED: &[(&str, i64)] = &[
    ("twisted_cubic.id", 1),
    ("elliptic_quartic.id", 2),
    ("conca_sidman.id", 18),
    ("ex_quartic_quadric.id", 12),
    ("ex_cubic_cubic.id", 18),
    ("rnc4_secant.id", 2),
    ("rnc5_secant.id", 5),
    ("rnc5_two_secants.id", 4),
];

fn shipped() -> Vec<Shipped<Gf32003>> {
    SHIPPED
        .iter()
        .map(|&(file, _)| {
            let ideal: Ideal<Gf32003> = load(file);
            let opts = ReportOptions::default();
            let frame = project_to_p3(&ideal, opts.projection_seed, opts.projection_bound)
                .unwrap()
                .0;
            let gin = gin_glex(&frame);
            let ladder = PartialElimLadder::from_basis(&gin.basis).unwrap();
            Shipped {
                file,
                ideal,
                frame,
                gin,
                ladder,
            }
        })
        .collect()
}

fn item5(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let mut checks = Vec::new();
    let mut values = Vec::new();
    for (c, &(_, stated)) in curves.iter().zip(SHIPPED) {
        let inv = curve_invariants(&c.frame).unwrap();
        let formula = choose2(inv.degree as i64 - 1) - inv.genus;
        let actual = c.ladder.locus_degree(1) as i64;
        values.push(actual.to_string());
        checks.push(check(
            c.file,
            actual == formula && actual == stated,
            format!("{actual} vs {formula}"),
        ));
    }
    checks.push(check("values", true, format!("deg K1 = {}", values.join(", "))));
    checks.retain(|c| !c.ok || c.name == "values");
    r.report(
        "5",
        "degree of the K1 locus equals C(d-1,2) - genus",
        t.elapsed(),
        None,
        checks,
        None,
    );
}

fn item6(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let mut checks = Vec::new();
    let mut total = 0;
    for c in curves {
        let m_max = c.gin.max_degree() + 2;
        let bad: Vec<u32> = (0..=m_max)
            .filter(|&m| !decomposition_check(&c.frame, &c.ladder, m))
            .collect();
        total += m_max as usize + 1;
        checks.push(check(c.file, bad.is_empty(), format!("failing m {bad:?}")));
    }
    checks.retain(|c| !c.ok);
    checks.push(check("count", true, format!("{total} (curve, m) pairs")));
    r.report(
        "6",
        "H(R/I,m) = sum_i H(R/K_i, m-i) for m <= M+2",
        t.elapsed(),
        None,
        checks,
        None,
    );
}

fn item7(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let mut checks = Vec::new();
    let mut pairs = Vec::new();
    for c in curves {
        let m = c.gin.gin.regularity_borel().unwrap();
        let via = c.ladder.m_via_ladder();
        pairs.push(format!("{via}"));
        checks.push(check(c.file, m == via, format!("M={m}, ladder={via}")));
    }
    checks.retain(|c| !c.ok);
    checks.push(check("values", true, format!("M = {}", pairs.join(", "))));
    r.report("7", "max_i (M(K_i) + i) = M(I)", t.elapsed(), None, checks, None);
}

fn item8(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let mut checks = Vec::new();
    let mut levels = 0;
    for c in curves {
        levels += c.ladder.levels.len();
        let recipes = c.ladder.certify_generic();
        checks.push(check(
            c.file,
            recipes.is_ok() && c.ladder.all_borel_fixed(),
            format!("{recipes:?}"),
        ));
        // the gin's x0-slices are the initial ideals of the levels
        for l in &c.ladder.levels {
            let slice = c.gin.gin.x0_slice(l.index);
            checks.push(check(c.file, slice == l.initial, format!("slice {}", l.index)));
        }
    }
    checks.retain(|c| !c.ok);
    checks.push(check("count", true, format!("{levels} levels, all Borel-fixed")));
    r.report(
        "8",
        "d0 <= i and d0 = i recipes agree in the gin frame",
        t.elapsed(),
        None,
        checks,
        None,
    );
}

fn item9(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let mut checks = Vec::new();
    let mut total = 0;
    for c in curves {
        let own_gin = if c.ideal.nvars() == c.frame.nvars() {
            c.gin.gin.clone()
        } else {
            gin_glex(&c.ideal).gin
        };
        let initial = buchberger(&c.ideal, GLEX).unwrap().initial_ideal();
        let top = own_gin.regularity_borel().unwrap() + 3;
        let bad: Vec<u32> = (0..=top)
            .filter(|&m| {
                let h = initial.hilbert_function(m);
                h != oracle_hilbert_function(&c.ideal, m) || h != own_gin.hilbert_function(m)
            })
            .collect();
        total += top as usize + 1;
        checks.push(check(c.file, bad.is_empty(), format!("failing m {bad:?}")));
    }
    checks.retain(|c| !c.ok);
    checks.push(check("count", true, format!("{total} (ideal, m) pairs up to M+3")));
    r.report(
        "9",
        "Groebner, rank-oracle and gin Hilbert functions agree",
        t.elapsed(),
        None,
        checks,
        None,
    );
}

fn item10(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let mut checks = Vec::new();
    for c in curves {
        let gens = c.ideal.generators().to_vec();
        let n = gens.len();
        for order in [GLEX, TermOrder::GradedRevLex] {
            let reference = buchberger(&c.ideal, order).unwrap();
            for shift in 0..n {
                let mut perm = gens.clone();
                perm.rotate_left(shift);
                if shift % 2 == 1 {
                    perm.reverse();
                }
                let again = buchberger(&Ideal::new(c.ideal.nvars(), perm).unwrap(), order).unwrap();
                checks.push(check(c.file, again == reference, format!("permutation {shift}")));
            }
        }
        let first = gin_glex(&c.frame);
        let text = |g: &GinResult<Gf32003>| format!("{}\n{:?}", g.gin.canonical_strings().join("\n"), g.basis.basis());
        checks.push(check(c.file, text(&first) == text(&c.gin), "repeated gin"));
    }
    checks.retain(|c| !c.ok);
    r.report(
        "10",
        "generator permutations and repeated gins are identical",
        t.elapsed(),
        None,
        checks,
        None,
    );
}

/// Castelnuovo's bound for curves in P^3 from the general formula
/// `m(m-1)(r-1)/2 + m*eps` with `d - 1 = m(r-1) + eps`.
fn castelnuovo_pi3(d: i64) -> i64 {
    let m = (d - 1) / 2;
    let eps = d - 1 - 2 * m;
    m * (m - 1) + m * eps
}

fn item11(r: &mut Runner, curves: &[Shipped<Gf32003>]) {
    let t = Instant::now();
    let case_split = |d: u64, g: i64| -> i64 {
        match (d, g) {
            (3, 0) => 3,
            (4, 0) | (4, 1) => 4,
            _ => 1 + choose2(d as i64 - 1) - g,
        }
    };
    let mut pairs: BTreeSet<(u64, i64)> = [(3, 0), (4, 0), (4, 1)].into_iter().collect();
    for c in curves {
        let inv = curve_invariants(&c.frame).unwrap();
        pairs.insert((inv.degree, inv.genus));
    }
    let mut checks: Vec<Check> = pairs
        .iter()
        .map(|&(d, g)| {
            check(
                "predicted_M",
                predicted_m(d, g) == case_split(d, g),
                format!("({d},{g})->{}", predicted_m(d, g)),
            )
        })
        .collect();
    for d in 5..=50u64 {
        let pi = castelnuovo_pi3(d as i64);
        let ok = genus_bound_pi3(d) as i64 == pi && pi3_bound_holds(d) && pi <= 1 + choose2(d as i64 - 1) - d as i64;
        checks.push(check("pi bound", ok, format!("d={d}")));
    }
    let summary: Vec<String> = checks
        .iter()
        .filter(|c| c.name == "predicted_M")
        .map(|c| c.detail.clone())
        .collect();
    checks.retain(|c| !c.ok);
    checks.push(check("pairs", true, summary.join(" ")));
    checks.push(check("bound", true, "pi(d,3) <= 1+C(d-1,2)-d for d=5..50"));
    r.report(
        "11",
        "predicted_M case split and the genus bound",
        t.elapsed(),
        None,
        checks,
        None,
    );
}

fn main() {
    let start = Instant::now();
    let mut r = Runner::default();
    item1::<Gf32003>(&mut r, "gf");
    item1::<Rational>(&mut r, "qq");
    item2::<Gf32003>(&mut r, "gf");
    item2::<Rational>(&mut r, "qq");
    item3::<Gf32003>(&mut r, "gf");
    item3::<Rational>(&mut r, "qq");
    item4::<Gf32003>(&mut r, "gf");
    item4::<Rational>(&mut r, "qq");
    let curves = shipped();
    item5(&mut r, &curves);
    item6(&mut r, &curves);
    item7(&mut r, &curves);
    item8(&mut r, &curves);
    item9(&mut r, &curves);
    item10(&mut r, &curves);
    item11(&mut r, &curves);
    println!(
        "acceptance: {} passed, {} known failure(s) {:?}, {} unexpected failure(s) {:?} in {:.1}s",
        r.passed,
        r.known.len(),
        r.known,
        r.failed.len(),
        r.failed,
        start.elapsed().as_secs_f64()
    );
    if !r.failed.is_empty() {
        std::process::exit(1);
    }
}
