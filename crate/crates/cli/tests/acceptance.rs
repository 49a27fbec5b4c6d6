//! End-to-end acceptance run. Prints one line per criterion and exits nonzero
//! on any failure other than the documented even-genus H1 gap.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use lefschetz::{
    cokernel, conjugate_word, fiber_sum, filling_report, korkmaz_curves, korkmaz_word,
    meyer_cocycle, plumbing_boundary_h1, smith_normal_form, twist_power_matrix, twisted_relator,
    word_matrix, AbelianGroup, Base, Fibration, HomologyClass, IntegerMatrix, Letter,
    PlumbingGraph, Surface, SymplecticMatrix, TwistWord,
};
use lefschetz_cli::{commands, ParseOptions, WordFile};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, &'static str, bool, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Check {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:?}, budget {budget:?}"))
}

fn z(rank: usize, torsion: &[u64]) -> AbelianGroup {
    AbelianGroup::from_cyclic_orders(rank, torsion.iter().map(|&t| BigInt::from(t)))
}

// 1. W_g and W_g(n) act trivially on homology.
fn relator_identity() -> Check {
    let start = Instant::now();
    for g in 2..=8 {
        ensure(word_matrix(&korkmaz_word(g).unwrap()).is_identity(), || format!("W_{g}"))?;
        for n in 0..=6 {
            ensure(word_matrix(&twisted_relator(g, n).unwrap()).is_identity(), || {
                format!("W_{g}({n})")
            })?;
        }
    }
    within(start, Duration::from_secs(1))
}

// 2. H1(X_g(n)) = Z^{g-2} ⊕ Z_n.
fn h1_closed_form(genera: &[usize]) -> Check {
    let start = Instant::now();
    let mut bad = Vec::new();
    for &g in genera {
        for n in 1..=6u64 {
            let got = Fibration::twisted_korkmaz(g, n).unwrap().h1().unwrap();
            let want = z(g - 2, &[n]);
            if got != want {
                bad.push(format!("g={g} n={n}: got {got}, expected {want}"));
            }
        }
    }
    ensure(bad.is_empty(), || bad[..bad.len().min(3)].join("; ") + " ...")?;
    within(start, Duration::from_secs(1))
}

// 3. Disk-base H1 of S_g(n) equals sphere-base H1 of X_g(n).
fn filling_homology() -> Check {
    for g in [2, 3, 4, 5, 6, 7] {
        for n in 1..=6 {
            let disk = Fibration::stein_filling(g, n).unwrap().h1().unwrap();
            let sphere = Fibration::twisted_korkmaz(g, n).unwrap().h1().unwrap();
            ensure(disk == sphere, || format!("g={g} n={n}: {disk} vs {sphere}"))?;
        }
    }
    Ok(())
}

// 4. Signatures.
fn signatures() -> Check {
    let start = Instant::now();
    let sigma = |f: Fibration| f.signature().unwrap();
    for g in [3, 5] {
        ensure(sigma(Fibration::korkmaz(g).unwrap()) == -8, || format!("σ(W_{g})"))?;
        for n in 1..=3 {
            let s = sigma(Fibration::twisted_korkmaz(g, n).unwrap());
            ensure(s == -16, || format!("σ(W_{g}({n})) = {s}"))?;
        }
    }
    ensure(sigma(Fibration::korkmaz(2).unwrap()) == -4, || "σ(W_2)".into())?;
    for n in 1..=3 {
        let s = sigma(Fibration::twisted_korkmaz(2, n).unwrap());
        ensure(s == -8, || format!("σ(W_2({n})) = {s}"))?;
    }
    within(start, Duration::from_secs(30))
}

// 5. Euler characteristics.
fn euler_characteristics() -> Check {
    for g in 2..=8 {
        let chi = Fibration::over_disk(&korkmaz_word(g).unwrap(), 1).unwrap().euler_characteristic();
        let want = if g % 2 == 1 { 11 } else { 5 };
        ensure(chi == want, || format!("g={g}: χ(W_g over disk) = {chi}"))?;
    }
    for g in [3, 5, 7] {
        for n in 1..=3 {
            let r = commands::paper(g, n).map_err(|e| e.to_string())?;
            let want = 2 * g as i64 + 21;
            ensure(r.chi == Some(want), || format!("g={g} n={n}: chi {:?}", r.chi))?;
            ensure(
                r.notes.iter().any(|s| s.contains("counting only the") && s.contains("gives 11")),
                || format!("g={g} n={n}: discrepancy note missing"),
            )?;
        }
    }
    Ok(())
}

// 6. Boundary plumbing and distinct fillings.
fn plumbing_and_distinctness() -> Check {
    for g in 2..=8 {
        let h = plumbing_boundary_h1(&PlumbingGraph::stein_boundary(g)).unwrap();
        ensure(h == AbelianGroup::free(2 * g), || format!("M_{g}: {h}"))?;
        let groups: Vec<AbelianGroup> = (1..=6).map(|n| filling_report(g, n).unwrap().h1).collect();
        for i in 0..groups.len() {
            for j in i + 1..groups.len() {
                ensure(groups[i] != groups[j], || format!("g={g}: n={} and n={} agree", i + 1, j + 1))?;
            }
        }
    }
    Ok(())
}

// ---- oracles over i128, independent of the library's arithmetic ----

fn to_i128(m: &IntegerMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(|x| i128::try_from(x).unwrap()).collect()).collect()
}

fn mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

fn transpose(a: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

fn form_j(dim: usize) -> Vec<Vec<i128>> {
    let mut j = vec![vec![0; dim]; dim];
    for i in (0..dim).step_by(2) {
        j[i][i + 1] = 1;
        j[i + 1][i] = -1;
    }
    j
}

/// `x ↦ x + e⟨x, c⟩c` written out entrywise.
fn transvection(c: &[i128], e: i128) -> Vec<Vec<i128>> {
    let dim = c.len();
    let j = form_j(dim);
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|col| {
                    // ⟨e_col, c⟩ = Σ_k J[col][k] c_k
                    let pair: i128 = (0..dim).map(|k| j[col][k] * c[k]).sum();
                    i128::from(r == col) + e * pair * c[r]
                })
                .collect()
        })
        .collect()
}

fn random_class(r: &mut ChaCha8Rng, s: Surface, bound: i64) -> HomologyClass {
    let v: Vec<i64> = (0..s.dimension()).map(|_| r.gen_range(-bound..=bound)).collect();
    HomologyClass::from_i64(s, &v).unwrap()
}

fn random_twist_product(r: &mut ChaCha8Rng, s: Surface, len: usize) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(s);
    for _ in 0..len {
        let c = random_class(r, s, 1);
        let e = if r.gen_bool(0.5) { 1 } else { -1 };
        m = twist_power_matrix(&c, e).compose(&m).unwrap();
    }
    m
}

// 7a. Smith normal form.
fn snf_suite() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..1000 {
        let (rows, cols) = (r.gen_range(1..=8), r.gen_range(1..=8));
        let a = IntegerMatrix::from_fn(rows, cols, |_, _| BigInt::from(r.gen_range(-20i64..=20)));
        let snf = smith_normal_form(&a);
        ensure(&(&snf.u * &a) * &snf.v == snf.d, || format!("trial {trial}: UAV != D"))?;
        for m in [&snf.u, &snf.v] {
            ensure(m.determinant().unwrap().abs().is_one(), || format!("trial {trial}: not unimodular"))?;
        }
        ensure(snf.d.is_diagonal(), || format!("trial {trial}: D not diagonal"))?;
        let f = snf.invariant_factors();
        for w in f.windows(2) {
            let ok = !w[0].is_negative()
                && if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            ensure(ok, || format!("trial {trial}: chain broken at {w:?}"))?;
        }
    }
    Ok(())
}

// 7b. Cokernel under column permutation and negation.
fn cokernel_suite() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..500 {
        let (rows, cols) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let a = IntegerMatrix::from_fn(rows, cols, |_, _| BigInt::from(r.gen_range(-9i64..=9)));
        let mut order: Vec<usize> = (0..cols).collect();
        order.shuffle(&mut r);
        let signs: Vec<i64> = (0..cols).map(|_| if r.gen_bool(0.5) { 1 } else { -1 }).collect();
        let b = IntegerMatrix::from_fn(rows, cols, |i, j| a.get(i, order[j]) * signs[j]);
        ensure(cokernel(&a) == cokernel(&b), || format!("trial {trial}"))?;
    }
    Ok(())
}

// 7c. Meyer cocycle identity and normalization.
fn meyer_suite() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..200 {
        let s = Surface::new(1 + trial % 3).unwrap();
        let lens: Vec<usize> = (0..3).map(|_| r.gen_range(1..=4)).collect();
        let a = random_twist_product(&mut r, s, lens[0]);
        let b = random_twist_product(&mut r, s, lens[1]);
        let c = random_twist_product(&mut r, s, lens[2]);
        let ab = a.compose(&b).unwrap();
        let bc = b.compose(&c).unwrap();
        let lhs = meyer_cocycle(&a, &b).unwrap() + meyer_cocycle(&ab, &c).unwrap();
        let rhs = meyer_cocycle(&a, &bc).unwrap() + meyer_cocycle(&b, &c).unwrap();
        ensure(lhs == rhs, || format!("trial {trial}: {lhs} != {rhs}"))?;
        let id = SymplecticMatrix::identity(s);
        ensure(meyer_cocycle(&id, &a).unwrap() == 0, || format!("trial {trial}: τ(I, A) != 0"))?;
    }
    Ok(())
}

// 7d. Twist matrices: symplectic, equal to the transvection formula, conjugation-equivariant.
fn twist_suite() -> Check {
    let mut r = ChaCha8Rng::seed_from_u64(10);
    for trial in 0..500 {
        let s = Surface::new(1 + trial % 4).unwrap();
        let dim = s.dimension();
        let c = random_class(&mut r, s, 4);
        let e: i64 = *[-2, -1, 1, 2, 3].choose(&mut r).unwrap();
        let t = twist_power_matrix(&c, e);
        let ci: Vec<i128> = c.coords().iter().map(|x| i128::try_from(x).unwrap()).collect();
        let ti = to_i128(t.matrix());
        ensure(ti == transvection(&ci, e as i128), || format!("trial {trial}: formula"))?;
        let j = form_j(dim);
        ensure(mul(&mul(&transpose(&ti), &j), &ti) == j, || format!("trial {trial}: not symplectic"))?;

        let len = r.gen_range(0..5);
        let f = random_twist_product(&mut r, s, len);
        let fc = f.apply(&c).unwrap();
        let moved = twist_power_matrix(&fc, e);
        let conj = f.compose(&t).unwrap().compose(&f.inverse()).unwrap();
        ensure(moved == conj, || format!("trial {trial}: f t_c f^-1 != t_f(c)"))?;

        let w = TwistWord::new(s, vec![Letter::new(c.clone(), e, false).unwrap()]).unwrap();
        let cw = conjugate_word(&w, &f).unwrap();
        ensure(word_matrix(&cw) == conj, || format!("trial {trial}: conjugate_word"))?;
    }
    Ok(())
}

// 7e. σ is additive under self fiber sum.
fn additivity_suite() -> Check {
    for g in [2, 3] {
        let x = Fibration::korkmaz(g).unwrap();
        let sigma = x.signature().unwrap();
        let a1 = HomologyClass::a(x.surface(), 1);
        for p in [0i64, 1, 3] {
            let sum = fiber_sum(&x, &x, &twist_power_matrix(&a1, p)).unwrap();
            let s = sum.signature().unwrap();
            ensure(s == 2 * sigma, || format!("g={g} f=t_a1^{p}: {s} != 2·{sigma}"))?;
        }
    }
    Ok(())
}

// 8. CLI.
fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cli() -> Check {
    for g in 2..=8 {
        let mut words = vec![(korkmaz_word(g).unwrap(), Base::Sphere)];
        words.extend((0..=6).map(|n| (twisted_relator(g, n).unwrap(), Base::Disk)));
        for c in korkmaz_curves(g).unwrap().curves() {
            words.push((TwistWord::new(c.class.surface(), vec![c.letter()]).unwrap(), Base::Disk));
        }
        for (word, base) in words {
            let wf = WordFile {
                base,
                section_square: Some(-1),
                word,
                warnings: vec![],
            };
            let back = WordFile::parse(&wf.to_text(), ParseOptions { strict: true }).map_err(|e| e.to_string())?;
            ensure(back == wf, || format!("g={g}: round trip changed the word"))?;
        }
    }

    let bin = env!("CARGO_BIN_EXE_lefschetz");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    for args in [
        vec!["paper", "--genus", "3", "--twist-power", "5", "--json"],
        vec!["paper", "--genus", "4", "--sweep", "1..4", "--json"],
        vec!["word", &fixture("w3_atlas.txt"), "--json"],
    ] {
        let (a, b) = (run(&args), run(&args));
        ensure(a.stdout == b.stdout && !a.stdout.is_empty(), || format!("{args:?}: JSON not byte-stable"))?;
    }

    let cases: [(&[&str], i32); 8] = [
        (&["word", &fixture("w3_atlas.txt")], 0),
        (&["verify", &fixture("w3_sphere.txt")], 0),
        (&["paper", "--genus", "3", "--twist-power", "-2"], 1),
        (&["word", "/nonexistent/word.txt"], 1),
        (&["word", &fixture("short_class.txt")], 2),
        (&["word", "--strict", &fixture("zero_class.txt")], 2),
        (&["word", &fixture("sphere_not_relator.txt")], 3),
        (&["verify", &fixture("single_a.txt")], 3),
    ];
    for (args, want) in cases {
        let got = run(args).status.code();
        ensure(got == Some(want), || format!("{args:?}: exit {got:?}, expected {want}"))?;
    }
    Ok(())
}

fn main() {
    // (id, description, known to be unattainable)
    let criteria: Vec<Criterion> = vec![
        ("1", "relator identity, g 2..8, n 0..6, < 1 s", false, relator_identity),
        ("2a", "H1(X_g(n)) = Z^{g-2} ⊕ Z_n, g odd", false, || h1_closed_form(&[3, 5, 7])),
        ("2b", "H1(X_g(n)) = Z^{g-2} ⊕ Z_n, g even", true, || h1_closed_form(&[2, 4, 6])),
        ("3", "filling H1 equals closed H1", false, filling_homology),
        ("4", "signatures -8 / -16 / -4 / -8, < 30 s", false, signatures),
        ("5", "Euler characteristics 11 / 5 / 2g+21 with note", false, euler_characteristics),
        ("6", "boundary H1 = Z^{2g}; distinct H1 across n", false, plumbing_and_distinctness),
        ("7a", "SNF on 1000 random matrices", false, snf_suite),
        ("7b", "cokernel invariance", false, cokernel_suite),
        ("7c", "Meyer cocycle identity, 200 triples", false, meyer_suite),
        ("7d", "twist matrices, 500 cases", false, twist_suite),
        ("7e", "σ additivity under self fiber sum", false, additivity_suite),
        ("8", "CLI round trip, stable JSON, exit codes", false, cli),
    ];

    let mut unexpected = 0;
    for (id, what, known_gap, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  criterion {id:<3} {what} ({secs:.2}s)"),
            Err(why) => {
                let tag = if known_gap { " [known gap, see README]" } else { "" };
                println!("FAIL  criterion {id:<3} {what} ({secs:.2}s): {why}{tag}");
                if !known_gap {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} acceptance criteria failed");
        std::process::exit(1);
    }
}
