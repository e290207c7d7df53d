//! Seeded randomized property suites.
//!
//! Each suite draws a fixed corpus from a ChaCha8 stream, so reports are
//! reproducible byte for byte.

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{DistanceCaps, LinearCode};
use crate::error::Result;
use crate::linalg;
use crate::matrix::Matrix;
use crate::mpc::MatrixProductSpec;
use crate::oracle::{self, CodewordSet, DEFAULT_CAP};
use crate::ring::Ring;
use crate::torsion::{self, DistanceClaim, TorsionVariant};

pub const SUITE_NAMES: &[&str] = &["howell", "dual-algebra", "theorem-2", "torsion"];

const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} cases, {} checks, {} failures",
            self.name,
            self.cases,
            self.checks,
            self.failures.len()
        )?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for x in self.failures.iter().take(MAX_LISTED_FAILURES) {
            writeln!(f, "  FAIL: {x}")?;
        }
        if self.failures.len() > MAX_LISTED_FAILURES {
            writeln!(f, "  ... {} more", self.failures.len() - MAX_LISTED_FAILURES)?;
        }
        Ok(())
    }
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn value<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(self, name: &str, cases: usize, notes: Vec<String>) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            cases,
            checks: self.checks,
            failures: self.failures,
            notes,
        }
    }
}

pub fn run_suite(name: &str) -> Option<SuiteReport> {
    let report = match name {
        "howell" => howell_suite(),
        "dual-algebra" => dual_algebra_suite(),
        "theorem-2" => theorem2_suite(),
        "torsion" => torsion_suite(),
        _ => return None,
    };
    Some(report)
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITE_NAMES
        .iter()
        .map(|n| run_suite(n).expect("known suite"))
        .collect()
}

fn rng_for(name: &str) -> ChaCha8Rng {
    let seed = name
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed)
}

fn z(m: u64) -> Ring {
    Ring::new(m).expect("valid modulus")
}

fn divisors(m: u64) -> Vec<u64> {
    (1..m).filter(|&d| m.is_multiple_of(d)).collect()
}

fn random_vector(rng: &mut ChaCha8Rng, ring: Ring, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(0..ring.modulus())).collect()
}

/// Up to `max_gens` generators, each scaled by a random divisor of `m` half
/// the time, so non-free codes show up often.
fn random_code(rng: &mut ChaCha8Rng, ring: Ring, n: usize, max_gens: usize) -> LinearCode {
    let divs = divisors(ring.modulus());
    let k = rng.gen_range(0..=max_gens);
    let rows: Vec<Vec<u64>> = (0..k)
        .map(|_| {
            let d = if rng.gen_bool(0.5) { 1 } else { divs[rng.gen_range(0..divs.len())] };
            random_vector(rng, ring, n).into_iter().map(|v| ring.mul(v, d)).collect()
        })
        .collect();
    LinearCode::from_residue_rows(ring, n, &rows).expect("row width n")
}

fn random_matrix(rng: &mut ChaCha8Rng, ring: Ring, rows: usize, cols: usize) -> Matrix {
    let data: Vec<Vec<u64>> = (0..rows).map(|_| random_vector(rng, ring, cols)).collect();
    Matrix::from_residue_rows(ring, cols, &data).expect("row width")
}

fn all_square_matrices(ring: Ring, s: usize) -> Vec<Matrix> {
    oracle::all_vectors(ring, s * s)
        .map(|v| {
            let rows: Vec<Vec<u64>> = v.chunks(s).map(<[u64]>::to_vec).collect();
            Matrix::from_residue_rows(ring, s, &rows).expect("square")
        })
        .collect()
}

fn span(c: &LinearCode) -> Result<CodewordSet> {
    oracle::brute_span(c.ring(), c.len(), &c.generators(), DEFAULT_CAP)
}

fn enumerable(ring: Ring, n: usize) -> bool {
    (ring.modulus() as f64).powi(n as i32) <= DEFAULT_CAP as f64
}

fn show(c: &LinearCode) -> String {
    format!("{} {:?}", c.ring(), c.generators())
}

fn howell_suite() -> SuiteReport {
    let mut rng = rng_for("howell");
    let mut t = Tally::new();
    let mut cases = 0;

    for &m in &[6u64, 8, 12] {
        let ring = z(m);
        for _ in 0..350 {
            cases += 1;
            let n = rng.gen_range(1..=4);
            let a = random_code(&mut rng, ring, n, 3);
            // Half the partners share a's span by construction.
            let b = if rng.gen_bool(0.5) {
                let mut rows = a.generators();
                let mix = random_vector(&mut rng, ring, rows.len());
                let combo = a.generator_matrix().left_apply(&mix).expect("arity");
                rows.push(combo);
                rows.reverse();
                LinearCode::from_residue_rows(ring, n, &rows).expect("width")
            } else {
                random_code(&mut rng, ring, n, 3)
            };
            let (Some(sa), Some(sb)) = (t.value(span(&a), || show(&a)), t.value(span(&b), || show(&b))) else {
                continue;
            };
            t.check((sa == sb) == (a.howell() == b.howell()), || {
                format!("span equality vs Howell identity: {} / {}", show(&a), show(&b))
            });
            t.check(BigUint::from(sa.len()) == *a.cardinality(), || {
                format!("cardinality of {}", show(&a))
            });
            let again = linalg::howell_form(a.generator_matrix());
            t.check(&again == a.howell(), || format!("Howell not idempotent on {}", show(&a)));
        }
    }

    for &m in &[4u64, 6, 9] {
        let ring = z(m);
        for _ in 0..60 {
            cases += 1;
            let rows = rng.gen_range(0..=3);
            let cols = rng.gen_range(1..=4);
            let mat = random_matrix(&mut rng, ring, rows, cols);
            let k = linalg::right_kernel(&mat);
            let fast = oracle::brute_span(ring, cols, &k.row_vecs(), DEFAULT_CAP);
            let brute: CodewordSet = oracle::all_vectors(ring, cols)
                .filter(|x| (0..rows).all(|i| oracle::dot(ring, mat.row(i), x) == 0))
                .collect();
            if let Some(fast) = t.value(fast, || format!("kernel span of\n{mat}")) {
                t.check(fast == brute, || format!("right kernel incomplete for\n{mat}"));
            }
        }
    }

    let ring = z(30);
    for _ in 0..150 {
        cases += 1;
        let s = rng.gen_range(1..=4);
        let a = random_matrix(&mut rng, ring, s, s);
        let b = random_matrix(&mut rng, ring, s, s);
        let ab = a.mul(&b).expect("square");
        let lhs = linalg::det(&ab).expect("square");
        let rhs = linalg::det(&a).expect("square") * linalg::det(&b).expect("square");
        t.check(lhs == rhs, || format!("det(AB) != det(A)det(B) for\n{a}and\n{b}"));
    }

    for &m in &[6u64, 8] {
        let ring = z(m);
        for _ in 0..120 {
            cases += 1;
            let s = rng.gen_range(1..=4);
            let l = rng.gen_range(s..=4);
            let a = random_matrix(&mut rng, ring, s, l);
            let inv = linalg::right_inverse(&a);
            t.check(linalg::is_frr(&a) == inv.is_some(), || format!("FRR vs right inverse for\n{a}"));
            if let Some(r) = inv {
                t.check(a.mul(&r).expect("shape") == Matrix::identity(ring, s), || {
                    format!("bad right inverse for\n{a}")
                });
            }
            if s == l {
                let ns = linalg::is_nonsingular(&a).expect("square");
                t.check(ns == linalg::is_frr(&a) && ns == linalg::inverse(&a).is_ok(), || {
                    format!("square equivalences for\n{a}")
                });
            }
        }
    }

    for &m in &[4u64, 8, 9, 25] {
        let ring = z(m);
        for _ in 0..60 {
            cases += 1;
            let s = rng.gen_range(1..=4);
            let l = rng.gen_range(s..=4);
            let a = random_matrix(&mut rng, ring, s, l);
            let up = linalg::is_nsc(&a);
            let down = a.reduce_mod_gamma().and_then(|r| linalg::is_nsc(&r));
            t.check(matches!((up, down), (Ok(x), Ok(y)) if x == y), || {
                format!("NSC differs from NSC of reduction for\n{a}")
            });
        }
    }

    t.finish("howell", cases, Vec::new())
}

fn dual_algebra_suite() -> SuiteReport {
    let mut rng = rng_for("dual-algebra");
    let mut t = Tally::new();
    let mut cases = 0;
    let mut brute_checked = 0;

    for &m in &[4u64, 6, 8, 9, 30] {
        let ring = z(m);
        for _ in 0..110 {
            cases += 1;
            let n = rng.gen_range(1..=4);
            let c = random_code(&mut rng, ring, n, 3);
            let d = random_code(&mut rng, ring, n, 3);
            let cd = c.dual();
            t.check(cd.dual() == c, || format!("double dual of {}", show(&c)));
            let total = BigUint::from(m).pow(n as u32);
            t.check(c.cardinality() * cd.cardinality() == total, || {
                format!("|C||C^perp| != m^n for {}", show(&c))
            });
            let sum = c.sum(&d).expect("same ambient");
            let meet = cd.intersect(&d.dual()).expect("same ambient");
            t.check(sum.dual() == meet, || {
                format!("(C+D)^perp vs meet of duals: {} / {}", show(&c), show(&d))
            });
            t.check(c.hull() == cd.hull(), || format!("hull asymmetry for {}", show(&c)));

            if enumerable(ring, n) {
                brute_checked += 1;
                let gens = c.generators();
                if let (Some(brute), Some(fast)) = (
                    t.value(oracle::brute_dual(ring, n, &gens, DEFAULT_CAP), || show(&c)),
                    t.value(span(&cd), || show(&cd)),
                ) {
                    t.check(brute == fast, || format!("dual differs from oracle for {}", show(&c)));
                }
                if let (Some(sc), Some(sd), Some(sm)) = (
                    t.value(span(&c), || show(&c)),
                    t.value(span(&d), || show(&d)),
                    t.value(span(&c.intersect(&d).expect("same ambient")), || show(&c)),
                ) {
                    let brute_meet: CodewordSet = sc.intersection(&sd).cloned().collect();
                    t.check(brute_meet == sm, || {
                        format!("intersection differs from oracle: {} / {}", show(&c), show(&d))
                    });
                    t.check(BigUint::from(sc.len()) == *c.cardinality(), || {
                        format!("cardinality differs from oracle for {}", show(&c))
                    });
                }
            }
        }
    }

    let notes = vec![format!("{brute_checked} codes cross-checked against enumeration")];
    t.finish("dual-algebra", cases, notes)
}

/// Matrices drawn to make the various conditions fire.
fn theorem2_matrix(rng: &mut ChaCha8Rng, ring: Ring, pools: &Theorem2Pools) -> Matrix {
    let units: Vec<u64> = ring.elements().filter(|&a| ring.is_unit(a)).collect();
    let unit = |rng: &mut ChaCha8Rng| units[rng.gen_range(0..units.len())];
    let pick = |rng: &mut ChaCha8Rng, pool: &[Matrix]| -> Option<Matrix> {
        (!pool.is_empty()).then(|| pool[rng.gen_range(0..pool.len())].clone())
    };
    let m = ring.modulus();
    let chosen = match rng.gen_range(0..7) {
        0 => Some(random_matrix(rng, ring, 2, 2)),
        1 => {
            let mut a = Matrix::zeros(ring, 2, 2);
            a.set(0, 0, rng.gen_range(0..m));
            a.set(1, 1, rng.gen_range(0..m));
            Some(a)
        }
        2 => {
            let mut a = Matrix::identity(ring, 2);
            a.set(0, 0, unit(rng));
            a.set(1, 1, unit(rng));
            a.set(0, 1, rng.gen_range(0..m));
            Some(a)
        }
        3 => {
            let mut a = Matrix::identity(ring, 2);
            a.set(0, 0, unit(rng));
            a.set(1, 1, unit(rng));
            a.set(1, 0, rng.gen_range(0..m));
            Some(a)
        }
        4 => pick(rng, &pools.aat_diag),
        5 => pick(rng, &pools.aat_adiag),
        _ => pick(rng, &pools.orthogonal),
    };
    chosen.unwrap_or_else(|| random_matrix(rng, ring, 2, 2))
}

struct Theorem2Pools {
    aat_diag: Vec<Matrix>,
    aat_adiag: Vec<Matrix>,
    orthogonal: Vec<Matrix>,
}

impl Theorem2Pools {
    fn new(ring: Ring) -> Self {
        let all = all_square_matrices(ring, 2);
        let nonsingular = |a: &Matrix| linalg::is_nonsingular(a).expect("square");
        Theorem2Pools {
            aat_diag: all.iter().filter(|a| linalg::aat_diagonal_units(a).is_some()).cloned().collect(),
            aat_adiag: all
                .iter()
                .filter(|a| linalg::aat_antidiagonal_units(a).is_some())
                .cloned()
                .collect(),
            orthogonal: all
                .iter()
                .filter(|a| {
                    nonsingular(a) && linalg::partition_blocks(a, 1).expect("split").is_some()
                })
                .cloned()
                .collect(),
        }
    }
}

fn theorem2_suite() -> SuiteReport {
    let mut rng = rng_for("theorem-2");
    let mut t = Tally::new();
    let mut cases = 0;
    let mut fired = [0usize; 7];
    let mut orth_cases = 0;
    let mut orth_strict = 0;
    let mut provenance = [0usize; 3];

    // Z_5 admits antidiagonal A A^t at s = 2; Z_4 and Z_6 do not.
    for (m, count) in [(4u64, 130), (6, 130), (5, 40)] {
        let ring = z(m);
        let pools = Theorem2Pools::new(ring);
        for _ in 0..count {
            cases += 1;
            let n = rng.gen_range(1..=2);
            let c1 = random_code(&mut rng, ring, n, 2);
            let c2 = match rng.gen_range(0..4) {
                0 => c1.clone(),
                1 => c1.sum(&random_code(&mut rng, ring, n, 1)).expect("same ambient"),
                2 => c1.intersect(&random_code(&mut rng, ring, n, 2)).expect("same ambient"),
                _ => random_code(&mut rng, ring, n, 2),
            };
            let a = theorem2_matrix(&mut rng, ring, &pools);
            let spec = MatrixProductSpec::new(vec![c1.clone(), c2.clone()], a.clone()).expect("valid spec");
            let ctx = || format!("A =\n{a}C1 = {}, C2 = {}", show(&c1), show(&c2));
            let built = spec.build();
            let primal = built.generators();
            let len = 2 * n;

            let brute_dual = t.value(oracle::brute_dual(ring, len, &primal, DEFAULT_CAP), ctx);
            let fast_dual = built.dual();
            if let (Some(bd), Some(fd)) = (&brute_dual, t.value(span(&fast_dual), ctx)) {
                t.check(*bd == fd, || format!("kernel dual vs oracle: {}", ctx()));
            }
            let nonsingular = linalg::is_nonsingular(&a).expect("square");
            if nonsingular {
                if let Some(th) = t.value(spec.dual_by_theorem(), ctx) {
                    t.check(th == fast_dual, || format!("dual identity: {}", ctx()));
                }
                if let Some(Some(r)) = t.value(spec.lemma4_reduce(), ctx) {
                    t.check(r == built, || format!("identity reduction: {}", ctx()));
                }
            }
            if linalg::aat_diagonal_units(&a).is_some() || spec.dual_push_by_shape() {
                t.check(fast_dual == spec.pushed_dual(), || format!("dual push by shape: {}", ctx()));
            }

            let direct = built.hull();
            if let Some((h, prov)) = t.value(spec.hull(), ctx) {
                provenance[prov as usize] += 1;
                t.check(h == direct, || format!("hull via {prov:?} differs: {}", ctx()));
            }
            if let Some(bh) = t.value(oracle::brute_hull(ring, len, &primal, DEFAULT_CAP), ctx) {
                if let Some(fh) = t.value(span(&direct), ctx) {
                    t.check(bh == fh, || format!("hull vs oracle: {}", ctx()));
                }
            }

            if let Some(report) = t.value(spec.conditions(), ctx) {
                for (k, f) in report.numbered().iter().enumerate() {
                    fired[k] += *f as usize;
                }
                t.check(report.mpc_lcd == direct.is_zero(), || format!("LCD flag: {}", ctx()));
                t.check(report.consistent(), || format!("condition verdict: {report:?} {}", ctx()));
            }

            if nonsingular && linalg::partition_blocks(&a, 1).expect("split").is_some() {
                orth_cases += 1;
                if let Some(ok) = t.value(spec.orth_hull_bound(1, &c1, &c2), ctx) {
                    t.check(ok, || format!("orthogonal hull bound: {}", ctx()));
                    let inv = linalg::inverse(&a).expect("nonsingular");
                    let bound = crate::mpc::product_code(&[c1.hull(), c2.hull()], &inv.transpose());
                    orth_strict += (bound != direct) as usize;
                }
            }
        }
    }

    let flags: Vec<String> = fired.iter().enumerate().map(|(k, c)| format!("{}:{c}", k + 1)).collect();
    let notes = vec![
        format!("condition flags fired {}", flags.join(" ")),
        format!(
            "hull provenance dual-push {} identity {} direct {}",
            provenance[0], provenance[1], provenance[2]
        ),
        format!("orthogonal bound checked {orth_cases}, strict {orth_strict}"),
    ];
    t.finish("theorem-2", cases, notes)
}

struct FieldPools {
    diag: Vec<Matrix>,
    adiag: Vec<Matrix>,
    upper: Vec<Matrix>,
    lower: Vec<Matrix>,
    nonsingular: Vec<Matrix>,
}

impl FieldPools {
    fn new(field: Ring, s: usize) -> Self {
        let all: Vec<Matrix> = all_square_matrices(field, s)
            .into_iter()
            .filter(|a| linalg::is_nonsingular(a).expect("square"))
            .collect();
        let of = |f: &dyn Fn(&Matrix) -> bool| all.iter().filter(|a| f(a)).cloned().collect::<Vec<_>>();
        FieldPools {
            diag: of(&|a| linalg::aat_diagonal_units(a).is_some()),
            adiag: of(&|a| linalg::aat_antidiagonal_units(a).is_some()),
            upper: of(&|a| a.is_upper_triangular()),
            lower: of(&|a| a.is_lower_triangular()),
            nonsingular: all,
        }
    }
}

fn torsion_suite() -> SuiteReport {
    let mut rng = rng_for("torsion");
    let mut t = Tally::new();
    let mut cases = 0;
    let mut lcd_inputs = 0;
    let mut converse = 0;
    let mut constructions = [0usize; 4];
    let mut exact_checked = 0;
    let caps = DistanceCaps {
        enum_cap: 1 << 20,
        weight_cap: 3,
    };

    let pools = |p: u64| [FieldPools::new(z(p), 2), FieldPools::new(z(p), 3)];
    let f2 = pools(2);
    let f3 = pools(3);

    for &m in &[4u64, 8, 9] {
        let ring = z(m);
        let chain = ring.chain().expect("prime power");
        let e = chain.e;
        let field_pools = if chain.p == 2 { &f2 } else { &f3 };
        for _ in 0..110 {
            cases += 1;
            let n = rng.gen_range(1..=4);
            let c = random_code(&mut rng, ring, n, 3);
            let ctx = || show(&c);

            let Some(family) = t.value(torsion::torsion_family(&c), ctx) else {
                continue;
            };
            for i in 0..e {
                if enumerable(ring, n) {
                    let q = torsion::quotient_by_gamma_power(&c, i).expect("valid index");
                    let brute = oracle::brute_quotient(ring, n, &c.generators(), i, DEFAULT_CAP);
                    if let (Some(b), Some(f)) = (t.value(brute, ctx), t.value(span(&q), ctx)) {
                        t.check(b == f, || format!("quotient {i} vs oracle for {}", ctx()));
                    }
                }
                if let Some(ok) = t.value(torsion::tor_dual_identity_check(&c, i), ctx) {
                    t.check(ok, || format!("dual identity at {i} for {}", ctx()));
                }
                if let Some(ok) = t.value(torsion::tor_hull_inclusion_check(&c, i), ctx) {
                    t.check(ok, || format!("hull inclusion at {i} for {}", ctx()));
                }
            }

            let all_lcd = family.members().iter().all(LinearCode::is_lcd);
            if !c.is_lcd() {
                converse += all_lcd as usize;
                continue;
            }
            lcd_inputs += 1;
            t.check(all_lcd, || format!("LCD not inherited by torsion codes of {}", ctx()));

            for variant in [
                TorsionVariant::Diagonal,
                TorsionVariant::Antidiagonal,
                TorsionVariant::Repeated,
                TorsionVariant::Triangular,
            ] {
                let pool = &field_pools[rng.gen_range(0..2)];
                let s = pool.nonsingular[0].rows();
                let mut idx: Vec<u32> = (0..s).map(|_| rng.gen_range(0..e)).collect();
                let a = match variant {
                    TorsionVariant::Diagonal => {
                        if rng.gen_bool(0.5) {
                            idx.sort_unstable_by(|x, y| y.cmp(x));
                        }
                        &pool.diag
                    }
                    TorsionVariant::Antidiagonal => {
                        for j in 0..s / 2 {
                            idx[s - 1 - j] = idx[j];
                        }
                        &pool.adiag
                    }
                    TorsionVariant::Repeated => {
                        let first = idx[0];
                        idx.iter_mut().for_each(|x| *x = first);
                        &pool.nonsingular
                    }
                    TorsionVariant::Triangular => {
                        if rng.gen_bool(0.5) {
                            idx.sort_unstable();
                            &pool.upper
                        } else {
                            idx.sort_unstable_by(|x, y| y.cmp(x));
                            &pool.lower
                        }
                    }
                };
                if a.is_empty() {
                    continue;
                }
                let a = &a[rng.gen_range(0..a.len())];
                let what = || format!("variant {} indices {idx:?} A =\n{a}C = {}", variant.number(), ctx());
                let Some(out) = t.value(torsion::torsion_lcd_mpc(&c, &idx, a, variant, caps), what) else {
                    continue;
                };
                constructions[variant.number() as usize - 1] += 1;
                t.check(out.code.hull().is_zero(), || format!("not LCD: {}", what()));
                if let DistanceClaim::Exact(b) = out.claim {
                    let limit = BigUint::from(1u64 << 20);
                    if *out.code.cardinality() <= limit {
                        exact_checked += 1;
                        let d = out.code.min_distance(caps).expect("within cap").and_then(|d| d.exact());
                        t.check(d == b.code, || format!("distance {d:?} vs claim {:?}: {}", b.code, what()));
                    }
                    let dual = out.code.dual();
                    if *dual.cardinality() <= limit {
                        let d = dual.min_distance(caps).expect("within cap").and_then(|d| d.exact());
                        t.check(d == b.dual, || {
                            format!("dual distance {d:?} vs claim {:?}: {}", b.dual, what())
                        });
                    }
                }
            }
        }
    }

    let notes = vec![
        format!("{lcd_inputs} LCD inputs"),
        format!(
            "constructions by variant 1:{} 2:{} 3:{} 4:{}",
            constructions[0], constructions[1], constructions[2], constructions[3]
        ),
        format!("{exact_checked} exact distance claims enumerated"),
        format!("{converse} non-LCD codes with all torsion codes LCD"),
    ];
    t.finish("torsion", cases, notes)
}
