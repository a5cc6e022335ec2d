//! Acceptance criteria 1 to 9, one PASS/FAIL line each.

use std::process::Command;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ribbontangle::eval::moves::MOVE_PAIRS;
use ribbontangle::eval::{builtin, jones_datum, Builtin, Functor, JonesModule};
use ribbontangle::hopf::{
    check_derived_antipode_identities, check_hopf, group_algebra, FiniteGroup, HopfData,
};
use ribbontangle::linmap::LinMap;
use ribbontangle::oracle::{count_meridian_homs, kauffman_bracket};
use ribbontangle::ribbon::{certify_ribbon, RibbonDatum, RibbonYDData};
use ribbontangle::ring::{LaurentHalf, Rational, Ring};
use ribbontangle::tangle::{braid_closure, parse_tangle, BraidWord};
use ribbontangle::yd::{check_yd, YDData};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group_yd(name: &str) -> RibbonYDData<Rational> {
    match builtin(name).expect("builtin") {
        Builtin::Group(g) => g,
        Builtin::Jones(_) => unreachable!(),
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let choices = [(-2, 1), (-1, 1), (1, 1), (2, 1), (1, 2), (-3, 2)];
    let (p, q) = choices[rng.gen_range(0..choices.len())];
    Rational::new(p, q)
}

/// Adds a nonzero amount to one entry of `m`.
fn bump(m: &LinMap<Rational>, rng: &mut ChaCha8Rng) -> LinMap<Rational> {
    let (r, c) = (
        rng.gen_range(0..m.cod_rank()),
        rng.gen_range(0..m.dom_rank()),
    );
    let delta = LinMap::from_entries(m.cod_rank(), m.dom_rank(), [(r, c, small_rational(rng))])
        .expect("in range");
    m.add(&delta).expect("same shape")
}

fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n) as i64;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("valid")
}

fn named_links() -> Vec<(&'static str, BraidWord)> {
    [
        ("unknot", "", 1),
        ("right trefoil", "1 1 1", 2),
        ("left trefoil", "-1 -1 -1", 2),
        ("figure-eight", "1 -2 1 -2", 3),
        ("hopf link", "1 1", 2),
    ]
    .into_iter()
    .map(|(name, w, n)| (name, BraidWord::parse(w, Some(n)).expect("valid")))
    .collect()
}

fn hopf_report(h: &HopfData<Rational>) -> bool {
    check_hopf(h).all_passed() && check_derived_antipode_identities(h).all_passed()
}

fn criterion_1() -> Outcome {
    let groups: Vec<_> = ["z2", "z3", "s3"]
        .iter()
        .map(|g| group_algebra(&FiniteGroup::by_name(g).unwrap()))
        .collect();
    for h in &groups {
        ensure(hopf_report(h), || {
            format!("rank {} group algebra rejected", h.rank())
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut rejected = 0;
    for _ in 0..50 {
        let mut h = groups[rng.gen_range(0..groups.len())].clone();
        match rng.gen_range(0..6) {
            0 => h.mul = bump(&h.mul, &mut rng),
            1 => h.unit = bump(&h.unit, &mut rng),
            2 => h.comul = bump(&h.comul, &mut rng),
            3 => h.counit = bump(&h.counit, &mut rng),
            4 => h.antipode = bump(&h.antipode, &mut rng),
            _ => h.antipode_inv = bump(&h.antipode_inv, &mut rng),
        }
        let report = check_hopf(&h);
        if !report.all_passed() && report.failures().all(|e| !e.to_string().is_empty()) {
            rejected += 1;
        }
    }
    ensure(rejected == 50, || {
        format!("{} of 50 perturbations accepted", 50 - rejected)
    })?;
    Ok("z2, z3, s3 pass; 50/50 perturbations rejected".into())
}

fn criterion_2() -> Outcome {
    let data = [group_yd("s3-all").yd, group_yd("s3-transpositions").yd];
    for d in &data {
        let r = check_yd(d);
        ensure(r.all_passed(), || format!("{r}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut rejected = 0;
    for _ in 0..50 {
        let d = &data[rng.gen_range(0..data.len())];
        let (mut action, mut coaction) = (d.action.clone(), d.coaction.clone());
        if rng.gen_bool(0.5) {
            action = bump(&action, &mut rng);
        } else {
            coaction = bump(&coaction, &mut rng);
        }
        let p = YDData::new(d.hopf().clone(), d.labels().to_vec(), action, coaction).unwrap();
        if !check_yd(&p).all_passed() {
            rejected += 1;
        }
    }
    ensure(rejected == 50, || {
        format!("{} of 50 perturbations accepted", 50 - rejected)
    })?;
    Ok("adjoint and transposition modules pass; 50/50 perturbations rejected".into())
}

const REQUIRED_RIBBON_CHECKS: [&str; 16] = [
    "snake ev_X/coev_X on X",
    "snake ev_X/coev_X on X*",
    "snake ev_X*/coev_X* on X*",
    "snake ev_X*/coev_X* on X",
    "braiding inverse left",
    "braiding inverse right",
    "yang-baxter",
    "ribbon condition",
    "reidemeister II (x++ then xi++)",
    "reidemeister II (x+- then xi-+)",
    "reidemeister II (x-+ then xi+-)",
    "reidemeister II (x-- then xi--)",
    "negative right curl inverts positive",
    "negative left curl inverts positive",
    "ribbon condition on X*",
    "twist on X* is the dual twist",
];

fn certified<R: Ring>(d: &RibbonDatum<R>, what: &str) -> Result<usize, String> {
    let r = certify_ribbon(d);
    for name in REQUIRED_RIBBON_CHECKS {
        ensure(r.get(name).is_some(), || {
            format!("{what}: no `{name}` check")
        })?;
    }
    ensure(r.all_passed(), || {
        let lines: Vec<String> = r.failures().map(|e| e.to_string()).collect();
        format!("{what}: {}", lines.join("; "))
    })?;
    Ok(r.entries.len())
}

fn criterion_3() -> Outcome {
    let n = certified(&jones_datum(), "jones")?;
    let g = group_yd("s3-transpositions");
    certified(&g.datum(), "s3-transpositions")?;
    let r = g.check_ribbon_conditions();
    ensure(r.all_passed(), || format!("twist conditions: {r}"))?;
    Ok(format!(
        "{n} checks each for jones and s3-transpositions; twist conditions hold"
    ))
}

/// Twist of `X ⊗ X` against `ψ∘ψ∘(θ ⊗ θ)`.
fn twist_tensor_law<R: Ring>(d: &RibbonDatum<R>) -> Result<usize, String> {
    let c = d.right_curl();
    let lhs = d.tensor_square().right_curl();
    let psi2 = d.braid.compose(&d.braid).unwrap();
    let rhs = psi2.compose(&c.tensor(&c)).unwrap();
    ensure(lhs == rhs, || "twist tensor law fails".into())?;
    Ok(lhs.dom_rank())
}

fn criterion_4() -> Outcome {
    let g = group_yd("s3-transpositions").datum();
    certified(&g.tensor_square(), "s3 tensor square")?;
    certified(&g.dual(), "s3 dual")?;
    certified(&RibbonDatum::<Rational>::unit(), "unit")?;
    let j = jones_datum();
    certified(&j.tensor_square(), "jones tensor square")?;
    certified(&j.dual(), "jones dual")?;
    let a = twist_tensor_law(&g)?;
    let b = twist_tensor_law(&j)?;
    Ok(format!(
        "tensor square, dual, unit certify; twist law exact at {a}x{a} and {b}x{b}"
    ))
}

fn criterion_5() -> Outcome {
    let f = Functor::new(jones_datum()).map_err(|e| e.to_string())?;
    let engine =
        |b: &BraidWord| -> LaurentHalf { f.framed_invariant(&braid_closure(b), true).unwrap() };
    let mut links = named_links();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        links.push(("random", random_braid(&mut rng, 4, 8)));
    }
    for (name, b) in &links {
        let oracle = kauffman_bracket(b).map_err(|e| e.to_string())?.value;
        let value = engine(b);
        ensure(value == oracle, || {
            format!("{name} {b}: engine {value}, oracle {oracle}")
        })?;
    }
    let right = engine(&links[1].1);
    let left = engine(&links[2].1);
    ensure(left == right.mirror(), || {
        format!("mirror: {left} vs {right}")
    })?;
    Ok(format!(
        "{} closures agree with the state sum; mirror holds",
        links.len()
    ))
}

fn criterion_6() -> Outcome {
    let g = FiniteGroup::symmetric(3);
    let subset = g.named_class("transpositions").unwrap();
    let f = Functor::new(group_yd("s3-transpositions").datum()).map_err(|e| e.to_string())?;
    let mut links = named_links();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        links.push(("random", random_braid(&mut rng, 4, 8)));
    }
    let mut values = Vec::new();
    for (name, b) in &links {
        let count = count_meridian_homs(&g, &subset, b).map_err(|e| e.to_string())?;
        let value = f.framed_invariant(&braid_closure(b), true).unwrap();
        ensure(value == Rational::from_i64(count as i64), || {
            format!("{name} {b}: engine {value}, oracle {count}")
        })?;
        values.push(count);
    }
    Ok(format!(
        "{} closures agree; unknot {}, trefoil {}, figure-eight {}, hopf link {}",
        links.len(),
        values[0],
        values[1],
        values[3],
        values[4]
    ))
}

fn criterion_7() -> Outcome {
    for name in ["s3-transpositions", "s3-all", "z3-nontrivial"] {
        let r = group_yd(name);
        let dual = r.derive_dual_yd().map_err(|e| format!("{name}: {e}"))?;
        let report = check_yd(&dual);
        ensure(report.all_passed(), || format!("{name}: {report}"))?;
        let (gname, class) = name.split_once('-').unwrap();
        let g = FiniteGroup::by_name(gname).unwrap();
        let subset = g.named_class(class).unwrap();
        let m = subset.len();
        let pos = |s: usize| subset.iter().position(|&t| t == s).unwrap();
        let action: Vec<usize> = (0..g.order() * m)
            .map(|k| pos(g.conjugate(k / m, subset[k % m])))
            .collect();
        let coaction: Vec<usize> = (0..m).map(|j| g.inv(subset[j]) * m + j).collect();
        ensure(dual.action == LinMap::from_basis_map(m, &action), || {
            format!("{name}: dual action differs from conjugation")
        })?;
        ensure(
            dual.coaction == LinMap::from_basis_map(g.order() * m, &coaction),
            || format!("{name}: dual coaction differs from h ↦ h⁻¹ ⊗ h*"),
        )?;
    }
    let j = jones_datum();
    let report = JonesModule::new().check(&j.pivotal.gamma(), &j);
    ensure(report.all_passed(), || {
        format!("jones generators: {report}")
    })?;
    Ok("group duals match closed forms; jones checked on generators only".into())
}

fn criterion_8() -> Outcome {
    fn run<R: Ring>(f: &Functor<R>, what: &str) -> Result<(), String> {
        for (name, lhs, rhs) in MOVE_PAIRS {
            let (l, r) = (parse_tangle(lhs).unwrap(), parse_tangle(rhs).unwrap());
            ensure(f.evaluate(&l) == f.evaluate(&r), || {
                format!("{what}: {name}")
            })?;
        }
        Ok(())
    }
    run(&Functor::new(jones_datum()).unwrap(), "jones")?;
    run(
        &Functor::new(group_yd("s3-transpositions").datum()).unwrap(),
        "s3-transpositions",
    )?;
    Ok(format!(
        "{} move pairs equal under both data",
        MOVE_PAIRS.len()
    ))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ribbontangle");
    let batch = std::env::temp_dir().join(format!("ribbontangle-batch-{}.txt", std::process::id()));
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let words: Vec<String> = (0..12)
        .map(|_| random_braid(&mut rng, 3, 6).to_string())
        .collect();
    std::fs::write(&batch, words.join("\n")).unwrap();
    let batch = batch.to_str().unwrap().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec![
            "eval",
            "--datum",
            "jones",
            "--braid",
            "1 -2 1 -2",
            "--normalize",
        ],
        vec!["eval", "--datum", "s3-transpositions", "--braid", "1 1 1"],
        vec!["eval", "--datum", "jones", "--tangle", "x+- ; xi-+"],
        vec!["eval", "--datum", "jones", "--batch", &batch, "--jobs", "4"],
        vec!["check", "ribbon", "--builtin", "jones"],
        vec!["check", "yd", "--builtin", "s3-all"],
        vec!["oracle", "kauffman", "--braid", "1 -2 1 -2"],
        vec![
            "oracle",
            "count-homs",
            "--group",
            "s3",
            "--class",
            "transpositions",
            "--braid",
            "1 1 1",
        ],
    ];
    for args in &runs {
        let outputs: Vec<_> = (0..3)
            .map(|_| Command::new(bin).args(args).output().unwrap())
            .collect();
        ensure(outputs[0].status.success(), || {
            format!("{args:?} exited with {}", outputs[0].status)
        })?;
        ensure(
            outputs.windows(2).all(|w| w[0].stdout == w[1].stdout),
            || format!("{args:?} output differs between runs"),
        )?;
    }
    let serial = Command::new(bin)
        .args(["eval", "--datum", "jones", "--batch", &batch, "--jobs", "1"])
        .output()
        .unwrap();
    let parallel = Command::new(bin)
        .args(["eval", "--datum", "jones", "--batch", &batch, "--jobs", "4"])
        .output()
        .unwrap();
    ensure(serial.stdout == parallel.stdout, || {
        "batch output depends on --jobs".into()
    })?;
    let _ = std::fs::remove_file(&batch);
    Ok(format!(
        "{} invocations byte-identical over 3 runs",
        runs.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("hopf certification", criterion_1),
        ("yetter-drinfeld certification", criterion_2),
        ("ribbon certification", criterion_3),
        ("closure under tensor, dual, unit", criterion_4),
        ("jones agreement", criterion_5),
        ("coloring count agreement", criterion_6),
        ("dual module", criterion_7),
        ("move invariance", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
                failed += 1;
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
