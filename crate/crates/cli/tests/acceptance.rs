//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact (zero tolerance): polynomials are compared as
//! sparse maps of big-integer coefficients and evaluations as big rationals.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use eqschub::{
    billey_evaluate, billey_restrict, billey_restrict_with_word, positivity_certificate,
    restriction_table, structure_constants, verify_product_identity, y_structure_constants,
    Basis, Convention, Monomial, ProductCheck, RestrictionTable, RootPolynomial, RootSystem,
    RootVector, StructureTable, WeylElement,
};

const FINITE: [(&str, usize); 4] = [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24)];
const NU_SAMPLES: usize = 100;
const NU_SEED: u64 = 0x5eed_2024;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn system(name: &str) -> Result<RootSystem, String> {
    RootSystem::builtin(name).map_err(err)
}

/// A restriction table over the whole finite group with every x- and y-basis
/// structure table.
struct FiniteSweep {
    rs: RootSystem,
    table: RestrictionTable,
    x: Vec<StructureTable>,
    y: Vec<StructureTable>,
}

fn finite_sweep(name: &str) -> Result<FiniteSweep, String> {
    let rs = system(name)?;
    let top = rs.longest_element().map_err(err)?.length();
    let table = restriction_table(&rs, top).map_err(err)?;
    let elems = table.range().elements().to_vec();
    let mut x = Vec::new();
    let mut y = Vec::new();
    for u in &elems {
        for v in &elems {
            x.push(structure_constants(&table, u, v).map_err(err)?);
            y.push(y_structure_constants(&table, u, v).map_err(err)?);
        }
    }
    Ok(FiniteSweep { rs, table, x, y })
}

struct AffineSweep {
    low: RestrictionTable,
    high: RestrictionTable,
    x_low: Vec<StructureTable>,
    x_high: Vec<StructureTable>,
}

fn affine_sweep() -> Result<AffineSweep, String> {
    let rs = system("AffineA1")?;
    let low = restriction_table(&rs, 6).map_err(err)?;
    let high = restriction_table(&rs, 8).map_err(err)?;
    let short: Vec<WeylElement> = low
        .range()
        .elements()
        .iter()
        .filter(|w| w.length() <= 3)
        .cloned()
        .collect();
    let mut x_low = Vec::new();
    let mut x_high = Vec::new();
    for u in &short {
        for v in &short {
            x_low.push(structure_constants(&low, u, v).map_err(err)?);
            x_high.push(structure_constants(&high, u, v).map_err(err)?);
        }
    }
    Ok(AffineSweep {
        low,
        high,
        x_low,
        x_high,
    })
}

fn nonneg_coefficients(p: &RootPolynomial) -> bool {
    p.terms().all(|(_, c)| !c.is_negative())
}

fn label(st: &StructureTable) -> String {
    format!("{} {} u={} v={}", st.system, st.basis, st.u, st.v)
}

fn monomial_poly(n: usize, m: &Monomial) -> RootPolynomial {
    let mut p = RootPolynomial::one(n);
    for (i, &e) in m.exponents().iter().enumerate() {
        for _ in 0..e {
            p = &p * &RootPolynomial::var(n, i);
        }
    }
    p
}

// ---------------------------------------------------------------- criterion 1

fn criterion_1() -> Check {
    let start = Instant::now();
    let rs = system("A1")?;
    let table = restriction_table(&rs, 2).map_err(err)?;
    let e = rs.identity();
    let s = rs.simple_reflection(0);
    let alpha = RootPolynomial::var(1, 0);

    let xs = structure_constants(&table, &s, &s).map_err(err)?;
    ensure(xs.value(&s) == Some(&alpha), || {
        format!("a^s_ss = {:?}, expected a1", xs.value(&s).map(|p| p.to_string()))
    })?;
    let ye = y_structure_constants(&table, &e, &e).map_err(err)?;
    let minus_alpha = alpha.negate_variables();
    ensure(ye.value(&e) == Some(&minus_alpha), || {
        format!("b^e_ee = {:?}, expected -a1", ye.value(&e).map(|p| p.to_string()))
    })?;

    let zero = RootPolynomial::zero(1);
    let one = RootPolynomial::one(1);
    let mut others = 0;
    for u in [&e, &s] {
        for v in [&e, &s] {
            for (basis, st) in [
                (Basis::X, structure_constants(&table, u, v).map_err(err)?),
                (Basis::Y, y_structure_constants(&table, u, v).map_err(err)?),
            ] {
                for (w, p) in &st.values {
                    let special = (basis == Basis::X && *u == s && *v == s && *w == s)
                        || (basis == Basis::Y && *u == e && *v == e && *w == e);
                    if !special {
                        ensure(*p == zero || *p == one, || {
                            format!("{} at w={w} is {p}, expected 0 or 1", label(&st))
                        })?;
                        others += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}, limit 1s")
    })?;
    Ok(format!(
        "a^s_ss = a1, b^e_ee = -a1, {others} other constants in {{0,1}}"
    ))
}

// ---------------------------------------------------------------- criterion 2

fn criterion_2(sweeps: &[FiniteSweep]) -> Check {
    let mut notes = Vec::new();
    let mut literal_positive = 0usize;
    let mut literal_example = None;
    for (sw, (name, order)) in sweeps.iter().zip(FINITE) {
        ensure(sw.table.range().len() == order, || {
            format!("{name}: |W| = {}, expected {order}", sw.table.range().len())
        })?;
        for st in &sw.x {
            ensure(positivity_certificate(st).passed(), || {
                format!("{}: certificate failed", label(st))
            })?;
            for (w, p) in &st.values {
                ensure(nonneg_coefficients(p), || {
                    format!("{} at w={w}: {p} has a negative coefficient", label(st))
                })?;
            }
        }
        for st in &sw.y {
            ensure(positivity_certificate(st).passed(), || {
                format!("{}: certificate failed", label(st))
            })?;
            for (w, p) in &st.values {
                // Nonpositive in the sense of monomials in the -alpha_i.
                ensure(nonneg_coefficients(&p.negate_variables()), || {
                    format!("{} at w={w}: {p} is not a nonnegative sum in -a_i", label(st))
                })?;
                if !p.is_zero() && p.terms().all(|(_, c)| c.is_positive()) {
                    literal_positive += 1;
                    literal_example
                        .get_or_insert_with(|| format!("{} at w={w}: {p}", label(st)));
                }
            }
        }
        notes.push(format!("{name} {}+{}", sw.x.len(), sw.y.len()));
    }
    let mut msg = format!(
        "pairs x+y: {}; x values nonneg in a_i, y values nonneg in -a_i",
        notes.join(", ")
    );
    if let Some(ex) = literal_example {
        msg.push_str(&format!(
            "; note: {literal_positive} even-degree y values have positive a_i coefficients, e.g. {ex}"
        ));
    }
    Ok(msg)
}

// ---------------------------------------------------------------- criterion 3

fn criterion_3(aff: &AffineSweep) -> Check {
    let start = Instant::now();
    for (lo, hi) in aff.x_low.iter().zip(&aff.x_high) {
        ensure(positivity_certificate(lo).passed(), || {
            format!("{}: certificate failed", label(lo))
        })?;
        for (w, p) in &lo.values {
            ensure(nonneg_coefficients(p), || {
                format!("{} at w={w}: {p} has a negative coefficient", label(lo))
            })?;
        }
        ensure(lo.values == hi.values, || {
            format!("{}: values change between bounds 6 and 8", label(lo))
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} pairs with l(u), l(v) <= 3; stable from bound {} to {}",
        aff.x_low.len(),
        aff.low.bound(),
        aff.high.bound()
    ))
}

// ---------------------------------------------------------------- criterion 4

fn perturbed(st: &StructureTable) -> Option<StructureTable> {
    let idx = st.values.iter().position(|(_, p)| !p.is_zero())?;
    let mut out = st.clone();
    let (m, _) = out.values[idx].1.terms().next()?;
    let bump = monomial_poly(st.rank, m);
    out.values[idx].1 = &out.values[idx].1 + &bump;
    Some(out)
}

fn check_identity(t: &RestrictionTable, st: &StructureTable, mutate: bool) -> Result<bool, String> {
    let check = verify_product_identity(t, st).map_err(err)?;
    ensure(check.holds(), || format!("{}: identity fails", label(st)))?;
    if !mutate {
        return Ok(false);
    }
    match perturbed(st) {
        Some(bad) => match verify_product_identity(t, &bad).map_err(err)? {
            ProductCheck::FailsAt(_) => Ok(true),
            ProductCheck::Holds => Err(format!("{}: mutation went undetected", label(st))),
        },
        None => Ok(false),
    }
}

fn criterion_4(sweeps: &[FiniteSweep], aff: &AffineSweep) -> Check {
    let mut verified = 0;
    let mut mutants = 0;

    let a1 = system("A1")?;
    let t1 = restriction_table(&a1, 2).map_err(err)?;
    for u in t1.range().elements() {
        for v in t1.range().elements() {
            for st in [
                structure_constants(&t1, u, v).map_err(err)?,
                y_structure_constants(&t1, u, v).map_err(err)?,
            ] {
                verified += 1;
                mutants += check_identity(&t1, &st, true)? as usize;
            }
        }
    }
    for sw in sweeps {
        // Mutate every x table; y tables are mutated on a stride to bound runtime.
        for st in &sw.x {
            verified += 1;
            mutants += check_identity(&sw.table, st, true)? as usize;
        }
        for (i, st) in sw.y.iter().enumerate() {
            verified += 1;
            mutants += check_identity(&sw.table, st, i % 7 == 0)? as usize;
        }
    }
    for st in &aff.x_low {
        verified += 1;
        mutants += check_identity(&aff.low, st, true)? as usize;
    }
    for st in &aff.x_high {
        verified += 1;
        mutants += check_identity(&aff.high, st, false)? as usize;
    }
    Ok(format!(
        "identity holds for {verified} tables; {mutants}/{mutants} single-coefficient mutants rejected"
    ))
}

// ---------------------------------------------------------------- criterion 5

fn element(rs: &RootSystem, word: &[usize]) -> WeylElement {
    rs.element_from_word(word).expect("valid word")
}

/// Every word of length `l(v)` that evaluates to `v`.
fn brute_reduced_words(rs: &RootSystem, v: &WeylElement) -> Vec<Vec<usize>> {
    let n = rs.rank();
    let len = v.length();
    let mut out = Vec::new();
    let total = n.pow(len as u32);
    for code in 0..total {
        let mut c = code;
        let word: Vec<usize> = (0..len)
            .map(|_| {
                let d = c % n;
                c /= n;
                d
            })
            .collect();
        if element(rs, &word) == *v {
            out.push(word);
        }
    }
    out
}

/// `u <= v` by searching the subwords of one reduced word of `v`.
fn brute_bruhat(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> bool {
    let word = v.word();
    (0u32..1 << word.len()).any(|mask| {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, &i)| i)
            .collect();
        sub.len() == u.length() && element(rs, &sub) == *u
    })
}

fn simple_root(n: usize, i: usize) -> RootVector {
    let mut c = vec![0; n];
    c[i] = 1;
    RootVector::from_integers(&c)
}

/// Inversion roots `s_{i1}...s_{i(j-1)}(alpha_{ij})` of a reduced word.
fn brute_inversion_product(rs: &RootSystem, word: &[usize]) -> RootPolynomial {
    let n = rs.rank();
    let mut prod = RootPolynomial::one(n);
    for (j, &i) in word.iter().enumerate() {
        let mut beta = simple_root(n, i);
        for &k in word[..j].iter().rev() {
            beta = rs.reflect(k, &beta);
        }
        prod = &prod * &beta.to_polynomial().expect("integral root");
    }
    prod
}

/// `omega_i - v(omega_i)`, via `s_j(omega_i) = omega_i - [i = j] alpha_j`;
/// needs no fundamental weights, so it also covers singular Cartan matrices.
fn weight_difference(rs: &RootSystem, i: usize, v: &WeylElement) -> RootPolynomial {
    let n = rs.rank();
    let zero = RootVector::from_integers(&vec![0; n]);
    let mut d = zero.clone();
    for &j in v.word().iter().rev() {
        d = rs.reflect(j, &d);
        if j == i {
            d = d.sub(&zero.sub(&simple_root(n, j)));
        }
    }
    d.to_polynomial().expect("integral weight difference")
}

fn criterion_5() -> Check {
    let mut pairs = 0;
    for name in ["A2", "B2", "G2", "AffineA1"] {
        let rs = system(name)?;
        let range = rs.enumerate_upto(5).map_err(err)?;
        let table = eqschub::table_on_range(&rs, range.clone()).map_err(err)?;
        for v in range.elements() {
            let words = brute_reduced_words(&rs, v);
            ensure(!words.is_empty(), || format!("{name}: no reduced word for {v}"))?;
            for w in range.elements() {
                pairs += 1;
                let val = billey_restrict(&rs, w, v);
                ensure(table.get(w, v).map_err(err)? == &val, || {
                    format!("{name} xi^{w}({v}): table differs from direct evaluation")
                })?;
                ensure(val.is_zero() != brute_bruhat(&rs, w, v), || {
                    format!("{name} xi^{w}({v}) = {val}: support differs from Bruhat order")
                })?;
                ensure(val.is_homogeneous_of_degree(w.length() as u32), || {
                    format!("{name} xi^{w}({v}) = {val}: not homogeneous of degree l(w)")
                })?;
                for word in &words {
                    ensure(billey_restrict_with_word(&rs, w, word) == val, || {
                        format!("{name} xi^{w}({v}) depends on the reduced word {word:?}")
                    })?;
                }
                if w == v {
                    ensure(val == brute_inversion_product(&rs, v.word()), || {
                        format!("{name} xi^{v}({v}) = {val}: not the inversion product")
                    })?;
                }
                if w.length() == 1 {
                    let i = w.word()[0];
                    let expected = weight_difference(&rs, i, v);
                    ensure(val == expected, || {
                        format!("{name} xi^{w}({v}) = {val}, expected w{} - v(w{}) = {expected}", i + 1, i + 1)
                    })?;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs (w, v) on A2, B2, G2, AffineA1 up to length 5"))
}

// ---------------------------------------------------------------- criterion 6

fn random_point(rng: &mut StdRng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| {
            let p: i64 = rng.random_range(1..=50);
            let q: i64 = rng.random_range(1..=50);
            BigRational::new(p.into(), q.into())
        })
        .collect()
}

fn criterion_6(sweeps: &[FiniteSweep]) -> Check {
    let mut rng = StdRng::seed_from_u64(NU_SEED);
    let mut evaluations = 0usize;
    for sw in sweeps {
        let n = sw.rs.rank();
        let points: Vec<Vec<BigRational>> =
            (0..NU_SAMPLES).map(|_| random_point(&mut rng, n)).collect();
        for st in &sw.x {
            for nu in &points {
                let ev = billey_evaluate(st, nu).map_err(err)?;
                for (w, x) in &ev.values {
                    evaluations += 1;
                    ensure(!x.is_negative(), || {
                        format!("{} at w={w}, nu={nu:?}: value {x} < 0", label(st))
                    })?;
                }
                let back = ev.relabel_inverse(&sw.rs).relabel_inverse(&sw.rs);
                ensure(back == ev, || format!("{}: relabel does not round-trip", label(st)))?;
            }
        }

        // Table transport: KK -> Billey -> KK is the identity.
        let billey = sw.table.convert_convention(Convention::Billey);
        let back = billey.convert_convention(Convention::KK);
        ensure(
            sw.table.entries().eq(back.entries()),
            || format!("{}: convention conversion does not round-trip", sw.rs.name()),
        )?;

        // In the Billey labelling the relabelled constants expand the products:
        // xi_B^{u'}(z) xi_B^{v'}(z) = sum_w p^{u'v'}_{w'} xi_B^{w'}(z).
        for st in &sw.x {
            let ev = billey_evaluate(st, &points[0]).map_err(err)?.relabel_inverse(&sw.rs);
            ensure(ev.u == sw.rs.inverse(&st.u) && ev.v == sw.rs.inverse(&st.v), || {
                format!("{}: relabel maps (u, v) wrongly", label(st))
            })?;
            let p: Vec<(WeylElement, &RootPolynomial)> = st
                .values
                .iter()
                .map(|(w, a)| (sw.rs.inverse(w), a))
                .collect();
            for z in billey.range().elements() {
                let lhs = billey.get(&ev.u, z).map_err(err)? * billey.get(&ev.v, z).map_err(err)?;
                let mut rhs = RootPolynomial::zero(n);
                for (w, a) in &p {
                    if !a.is_zero() {
                        rhs = &rhs + &(*a * billey.get(w, z).map_err(err)?);
                    }
                }
                ensure(lhs == rhs, || {
                    format!("{}: transported expansion fails at z={z}", label(st))
                })?;
            }
        }
    }
    Ok(format!(
        "{evaluations} evaluations at {NU_SAMPLES} random positive nu per system are >= 0; index transport round-trips"
    ))
}

// ---------------------------------------------------------------- criterion 7

/// Polynomials in x_1..x_n with integer coefficients, keyed by exponent vector.
type XPoly = BTreeMap<Vec<u32>, i64>;

fn xpoly_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Divided difference `(f - s_i f) / (x_i - x_{i+1})`, term by term.
fn divided_difference(f: &XPoly, i: usize) -> XPoly {
    let mut out = XPoly::new();
    for (e, &c) in f {
        let (a, b) = (e[i], e[i + 1]);
        let (hi, lo, sign) = if a >= b { (a, b, 1) } else { (b, a, -1) };
        for k in 0..hi - lo {
            let mut m = e.clone();
            m[i] = hi - 1 - k;
            m[i + 1] = lo + k;
            *out.entry(m).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

struct SchubertOracle {
    n: usize,
    memo: HashMap<Vec<usize>, XPoly>,
}

impl SchubertOracle {
    fn new(n: usize) -> Self {
        SchubertOracle {
            n,
            memo: HashMap::new(),
        }
    }

    /// One-line notation of `s_{i1} o ... o s_{ik}`.
    fn permutation(&self, word: &[usize]) -> Vec<usize> {
        let mut p: Vec<usize> = (1..=self.n).collect();
        for &i in word {
            p.swap(i, i + 1);
        }
        p
    }

    fn schubert(&mut self, perm: &[usize]) -> XPoly {
        if let Some(p) = self.memo.get(perm) {
            return p.clone();
        }
        let poly = match (0..self.n - 1).find(|&i| perm[i] < perm[i + 1]) {
            None => {
                let e: Vec<u32> = (0..self.n).map(|j| (self.n - 1 - j) as u32).collect();
                XPoly::from([(e, 1)])
            }
            Some(i) => {
                let mut up = perm.to_vec();
                up.swap(i, i + 1);
                let above = self.schubert(&up);
                divided_difference(&above, i)
            }
        };
        self.memo.insert(perm.to_vec(), poly.clone());
        poly
    }

    /// Coefficient of `S_w` in `f`: apply the divided differences of a
    /// reduced word of `w` (last letter first), then set every x_i to 0.
    fn coefficient(&self, f: &XPoly, w_word: &[usize]) -> i64 {
        let mut g = f.clone();
        for &i in w_word.iter().rev() {
            g = divided_difference(&g, i);
        }
        g.get(&vec![0; self.n]).copied().unwrap_or(0)
    }
}

fn criterion_7(sweeps: &[FiniteSweep]) -> Check {
    let start = Instant::now();
    let mut compared = 0;
    let mut nonzero = 0;
    for sw in sweeps.iter().filter(|s| matches!(s.rs.name(), "A2" | "A3")) {
        let mut oracle = SchubertOracle::new(sw.rs.rank() + 1);
        for st in &sw.x {
            let su = oracle.schubert(&oracle.permutation(st.u.word()));
            let sv = oracle.schubert(&oracle.permutation(st.v.word()));
            let product = xpoly_mul(&su, &sv);
            let degree = st.u.length() + st.v.length();
            for (w, p) in &st.values {
                let expected = if w.length() == degree {
                    oracle.coefficient(&product, w.word())
                } else {
                    0
                };
                let got = p.constant_term().to_i64().ok_or("constant term overflow")?;
                ensure(got == expected, || {
                    format!("{} at w={w}: constant term {got}, oracle {expected}", label(st))
                })?;
                compared += 1;
                nonzero += (expected != 0) as usize;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{compared} constant terms on A2, A3 match Schubert-polynomial products ({nonzero} nonzero)"
    ))
}

// ---------------------------------------------------------------- criterion 8

struct Run {
    stdout: Vec<u8>,
    stderr: String,
}

fn eqschub(args: &[&str]) -> Result<Run, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_eqschub"))
        .args(args)
        .env_remove("EQSCHUB_CACHE")
        .output()
        .map_err(err)?;
    if !out.status.success() {
        return Err(format!(
            "eqschub {} exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(Run {
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    })
}

fn criterion_8() -> Check {
    let dir = tempfile::tempdir().map_err(err)?;
    let cache = dir.path().join("sweep.jsonl");
    let cache_arg = cache.to_str().ok_or("non-utf8 temp path")?.to_string();
    let cases: [&[&str]; 5] = [
        &["--type", "A2", "sweep", "--max-length", "3"],
        &["--type", "B2", "sweep", "--max-length", "4", "--basis", "y"],
        &["--type", "G2", "sweep", "--max-length", "6", "--format", "json"],
        &["--type", "A3", "sweep", "--max-length", "6", "--format", "csv"],
        &["--type", "AffineA1", "sweep", "--max-length", "6", "--format", "json"],
    ];
    let mut runs = 0;
    for case in cases {
        let mut with = |jobs: &str, cached: bool| {
            let mut args: Vec<&str> = case.to_vec();
            args.extend(["--jobs", jobs]);
            if cached {
                args.extend(["--cache", cache_arg.as_str()]);
            }
            runs += 1;
            eqschub(&args)
        };
        let first = with("1", false)?;
        ensure(first.stderr.contains("pairs"), || "wall time missing on stderr".into())?;
        let again = with("1", false)?;
        let wide = with("4", false)?;
        ensure(first.stdout == again.stdout, || format!("{case:?}: reruns differ"))?;
        ensure(first.stdout == wide.stdout, || format!("{case:?}: --jobs 1 and 4 differ"))?;

        let _ = fs::remove_file(&cache);
        let cold1 = with("1", true)?;
        let bytes1 = fs::read(&cache).map_err(err)?;
        fs::remove_file(&cache).map_err(err)?;
        let cold4 = with("4", true)?;
        let bytes4 = fs::read(&cache).map_err(err)?;
        let warm = with("3", true)?;
        ensure(bytes1 == bytes4, || format!("{case:?}: cache files differ across --jobs"))?;
        ensure(fs::read(&cache).map_err(err)? == bytes4, || {
            format!("{case:?}: a warm run rewrote the cache")
        })?;
        ensure(cold1.stdout == cold4.stdout && cold4.stdout == warm.stdout, || {
            format!("{case:?}: cached outputs differ")
        })?;
    }
    Ok(format!("{runs} sweep runs byte-identical across reruns, --jobs 1/3/4 and warm caches"))
}

// ---------------------------------------------------------------------- main

fn report(n: usize, title: &str, start: Instant, outcome: Check) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("criterion {n} [{title}]: PASS ({secs:.2}s) {detail}");
            true
        }
        Err(detail) => {
            println!("criterion {n} [{title}]: FAIL ({secs:.2}s) {detail}");
            false
        }
    }
}

fn main() {
    let mut ok = true;

    let t = Instant::now();
    ok &= report(1, "SL2 ground truth", t, criterion_1());

    let t = Instant::now();
    let sweeps: Result<Vec<FiniteSweep>, String> =
        FINITE.iter().map(|(name, _)| finite_sweep(name)).collect();
    let affine = affine_sweep();
    let (sweeps, affine) = match (sweeps, affine) {
        (Ok(s), Ok(a)) => (s, a),
        (s, a) => {
            let why = [s.err(), a.err()].into_iter().flatten().collect::<Vec<_>>().join("; ");
            for (n, title) in [
                (2, "finite positivity"),
                (3, "Kac-Moody positivity"),
                (4, "product identity"),
                (6, "positive evaluations"),
                (7, "ordinary cohomology"),
            ] {
                report(n, title, t, Err(format!("sweep failed: {why}")));
            }
            let t = Instant::now();
            report(5, "localization", t, criterion_5());
            let t = Instant::now();
            report(8, "determinism", t, criterion_8());
            std::process::exit(1);
        }
    };
    ok &= report(2, "finite positivity", t, criterion_2(&sweeps));

    let t = Instant::now();
    ok &= report(3, "Kac-Moody positivity", t, criterion_3(&affine));

    let t = Instant::now();
    ok &= report(4, "product identity", t, criterion_4(&sweeps, &affine));

    let t = Instant::now();
    ok &= report(5, "localization", t, criterion_5());

    let t = Instant::now();
    ok &= report(6, "positive evaluations", t, criterion_6(&sweeps));

    let t = Instant::now();
    ok &= report(7, "ordinary cohomology", t, criterion_7(&sweeps));

    let t = Instant::now();
    ok &= report(8, "determinism", t, criterion_8());

    if !ok {
        std::process::exit(1);
    }
}
