//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{all_spolys_reduce, macaulay_quotient_dim};
use detsing::detvar::{expected_codimension, ProjectivePoint};
use detsing::grobner::{buchberger, ideal_dimension, quotient_dimension, Ideal, MonomialOrder, QuotientDim};
use detsing::indexcalc::{defect, phn_from_radial, radial_from_decomposition, RadialDecomposition, SingularPointRecord};
use detsing::polyalg::{parse_polynomial, Monomial, Polynomial, Rational, Vars};
use detsing::topo::{chi_bouquet, chi_cw, chi_smoothing, le_greuel_check, BouquetDescriptor, LeGreuel, MilnorData};
use serde_json::Value;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn detsing(args: &[&str]) -> (i32, Value, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_detsing")).arg("--json").args(args).output().expect("binary runs");
    let elapsed = start.elapsed();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), v, elapsed)
}

fn criterion_1() -> Check {
    let (code, v, elapsed) = detsing(&["verify", &fixture("twisted_cubic.json")]);
    ensure!(code == 0, "exit code {}", code);
    let mut indices: Vec<i64> = v["ledger"]["entries"]
        .as_array()
        .ok_or("no ledger")?
        .iter()
        .map(|e| e["index"].as_i64().unwrap_or(i64::MIN))
        .collect();
    indices.sort();
    ensure!(indices == [1, 1, 3], "indices {:?}", indices);
    let id = &v["identity"];
    ensure!(id["result"] == "verified", "result {}", id["result"]);
    ensure!(id["lhs"] == 5 && id["rhs"] == 5 && id["chi_X"] == 3 && id["defect_sum"] == 2, "identity {}", id);
    ensure!(elapsed < Duration::from_secs(5), "took {:?}", elapsed);
    Ok(format!("1 + 1 + 3 = 3 + (1 + 1), exit 0, {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn criterion_2() -> Check {
    let (code, v, _) = detsing(&["euler", &fixture("twisted_cubic_chi_unknown.json")]);
    ensure!(code == 0, "euler exit code {}", code);
    ensure!(v["identity"]["unknown"] == "chi_X" && v["identity"]["value"] == 3, "euler gave {}", v["identity"]);
    let (code, v, _) = detsing(&["index", &fixture("twisted_cubic_vertex_unknown.json"), "--at", "[0:0:0:0:1]"]);
    ensure!(code == 0, "index exit code {}", code);
    ensure!(
        v["identity"]["unknown"] == "index@[0:0:0:0:1]" && v["identity"]["value"] == 3,
        "index gave {}",
        v["identity"]
    );
    Ok("chi(X) = 3 from the vertex index, vertex index 3 from chi(X)".into())
}

fn criterion_3() -> Check {
    let (code, v, _) = detsing(&["analyze", &fixture("twisted_cubic.json")]);
    ensure!(code == 0, "exit code {}", code);
    let c = &v["classification"];
    ensure!(c["codimension"] == 2 && expected_codimension(2, 3, 2) == 2, "codimension {}", c["codimension"]);
    ensure!(c["determinantal"] == true, "not determinantal");
    ensure!(c["dim"] == 2, "dim {}", c["dim"]);
    ensure!(c["isolated_singularity"] == true, "not isolated");
    ensure!(c["singular_points"] == serde_json::json!(["[0:0:0:0:1]"]), "points {}", c["singular_points"]);
    ensure!(
        c["smoothable"] == true && c["germ_ambient_dim"] == 4 && c["smoothability_bound"] == 6,
        "smoothability {} {} {}",
        c["smoothable"],
        c["germ_ambient_dim"],
        c["smoothability_bound"]
    );
    Ok("codim 2, d = 2, isolated at [0:0:0:0:1], smoothable (4 < 6)".into())
}

fn codim2(d: usize, mu: u64) -> SingularPointRecord {
    SingularPointRecord {
        point: "[0:0:0:0:1]".parse().unwrap(),
        n: 2,
        p: 3,
        t: 2,
        d,
        germ_ambient: d + 2,
        smoothable: true,
        mu: Some(mu),
        chi_smoothing: None,
        chi_lower_stratum: None,
    }
}

fn criterion_4() -> Check {
    let mut checked = 0;
    for mu in 0..=100u64 {
        let d2 = defect(&codim2(2, mu)).map_err(|e| e.to_string())?;
        ensure!(d2 == 1 + mu as i64, "d = 2, mu = {}: defect {}", mu, d2);
        let d3 = defect(&codim2(3, mu)).map_err(|e| e.to_string())?;
        ensure!(d3 == mu as i64, "d = 3, mu = {}: defect {}", mu, d3);
        checked += 2;
    }
    for n in 2..=3usize {
        for chi in -50..=50i64 {
            let rec = SingularPointRecord {
                point: ProjectivePoint::coordinate(7, 6),
                n,
                p: n + 1,
                t: n,
                d: 4,
                germ_ambient: 6,
                smoothable: false,
                mu: None,
                chi_smoothing: Some(chi),
                chi_lower_stratum: Some(1),
            };
            let got = defect(&rec).map_err(|e| e.to_string())?;
            ensure!(got == chi + 2, "P6, n = {}, chi = {}: defect {}", n, chi, got);
            checked += 1;
        }
    }
    Ok(format!("{} defect identities", checked))
}

fn criterion_5() -> Check {
    let mut holds = 0;
    for k in 0..50u64 {
        let d = if k % 2 == 0 { 2 } else { 3 };
        let mu = k % 7;
        let slice = (k * 3) % 11;
        // threefolds alternate between the defaulted and an explicit b2 = 1
        let explicit_b2 = d == 3 && k % 4 == 1;
        let b2 = if d == 3 { 1 } else { 0 };
        let violate = k % 5 == 0 || k % 5 == 3;
        let shift = if violate { 1 + (k % 3) } else { 0 };
        let m_d = mu + slice + b2 + shift;
        let mut m = MilnorData::codim2(d, mu).with_polar(m_d, slice);
        if explicit_b2 {
            m = m.with_b2(1);
        }
        let expected = if violate {
            LeGreuel::Violated { lhs: m_d as i64, rhs: (mu + slice + b2) as i64 }
        } else {
            LeGreuel::Holds
        };
        let got = le_greuel_check(&m);
        ensure!(got == expected, "instance {}: {:?}, expected {:?}", k, got, expected);
        holds += (!violate) as usize;
    }
    Ok(format!("50 instances ({} hold, {} violated)", holds, 50 - holds))
}

fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect()
}

fn ideal(v: &Vars, gens: &[&str]) -> Ideal {
    Ideal::new(v, gens.iter().map(|s| parse_polynomial(s, v).unwrap()))
}

/// Deterministic zero-dimensional ideals: `x_i^{a_i}` plus lower-degree terms, and one extra generator.
fn generated_ideals(count: usize) -> Vec<Ideal> {
    let v = vars(&["x", "y", "z"]);
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = move |m: u64| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % m
    };
    let shapes = [[1u32, 1, 2], [2, 2, 1], [1, 2, 3], [2, 2, 3], [1, 3, 2], [2, 3, 2]];
    let mut out = Vec::new();
    for _ in 0..count {
        let a = shapes[next(shapes.len() as u64) as usize];
        let random_poly = |maxdeg: u32, next: &mut dyn FnMut(u64) -> u64| {
            let terms: Vec<(Monomial, Rational)> = (0..1 + next(3))
                .map(|_| {
                    let e: Vec<u32> = (0..3).map(|_| next(maxdeg as u64 + 1) as u32).collect();
                    (Monomial::new(e), Rational::from_integer((next(7) as i64 - 3).into()))
                })
                .filter(|(m, _)| m.degree() <= maxdeg)
                .collect();
            Polynomial::from_terms(&v, terms)
        };
        let mut gens = Vec::new();
        for (i, &ai) in a.iter().enumerate() {
            let low = random_poly(1, &mut next);
            let below = Polynomial::from_terms(&v, low.terms().filter(|(m, _)| m.degree() < ai).map(|(m, c)| (m.clone(), c.clone())));
            gens.push(&Polynomial::var(&v, i).pow(ai) + &below);
        }
        gens.push(random_poly(2, &mut next));
        out.push(Ideal::new(&v, gens));
    }
    out
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let xy = vars(&["x", "y"]);
    let xyz = vars(&["x", "y", "z"]);
    let chart = vars(&["x0", "x1", "x2", "x3"]);
    let mut corpus = vec![
        ideal(&xy, &["x^2", "y^3"]),
        ideal(&xy, &["x^2 + y^2 - 1", "x - y"]),
        ideal(&xy, &["x*y - 1", "x^2 + y^2 - 4"]),
        ideal(&xy, &["x^3", "x*y", "y^2"]),
        ideal(&xyz, &["x^2", "y^2", "z^3"]),
        ideal(&xyz, &["x", "y", "z"]),
        // lower minors of the twisted cubic in the vertex chart
        ideal(&chart, &["x0", "x1", "x2", "x1", "x2", "x3"]),
    ];
    corpus.extend(generated_ideals(40));
    let mut bases = 0;
    for i in &corpus {
        let want = macaulay_quotient_dim(i);
        ensure!(want <= 12, "oracle dimension {} > 12", want);
        let n = i.vars().len();
        for o in [MonomialOrder::grevlex(n), MonomialOrder::lex(n), MonomialOrder::grlex(n)] {
            let got = quotient_dimension(i, &o).map_err(|e| e.to_string())?;
            ensure!(got == QuotientDim::Finite(want), "{:?}: {} vs oracle {}", i.generators(), got, want);
            let gb = buchberger(i, &o).map_err(|e| e.to_string())?;
            ensure!(all_spolys_reduce(&gb), "S-pair check failed for {:?}", i.generators());
            bases += 1;
        }
    }
    let tc = ideal(&chart, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
    let o = MonomialOrder::grevlex(4);
    let dim = ideal_dimension(&tc, &o).map_err(|e| e.to_string())?;
    ensure!(dim == 2, "twisted cubic dimension {}", dim);
    let gb = buchberger(&tc, &o).map_err(|e| e.to_string())?;
    let mut got: Vec<String> = gb.polynomials().iter().map(|p| p.monic().to_string()).collect();
    let mut want: Vec<String> = tc.generators().iter().map(|p| p.monic().to_string()).collect();
    got.sort();
    want.sort();
    ensure!(got == want, "twisted cubic basis {:?}", got);
    ensure!(all_spolys_reduce(&gb), "twisted cubic S-pair check");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    Ok(format!("{} ideals, {} bases checked, {:.1} s", corpus.len(), bases, elapsed.as_secs_f64()))
}

fn criterion_7() -> Check {
    let mut count = 0;
    let mut frontier: Vec<Vec<u32>> = vec![vec![]];
    let mut all = vec![vec![]];
    for _ in 0..6 {
        let mut next = Vec::new();
        for dims in &frontier {
            for k in dims.last().copied().unwrap_or(1)..=4 {
                let mut d = dims.clone();
                d.push(k);
                all.push(d.clone());
                next.push(d);
            }
        }
        frontier = next;
    }
    for dims in all {
        let b = BouquetDescriptor::new(dims);
        ensure!(chi_bouquet(&b) == chi_cw(&b.cw_model()), "{:?}", b.sphere_dimensions);
        count += 1;
    }
    for mu in 0..=20u64 {
        let s2 = chi_smoothing(&MilnorData::codim2(2, mu)).map_err(|e| e.to_string())?;
        ensure!(s2 == chi_bouquet(&BouquetDescriptor::spheres(2, mu as usize)), "d = 2, mu = {}", mu);
        let mut dims = vec![2];
        dims.extend(std::iter::repeat(3).take(mu as usize));
        let s3 = chi_smoothing(&MilnorData::codim2(3, mu)).map_err(|e| e.to_string())?;
        ensure!(s3 == chi_bouquet(&BouquetDescriptor::new(dims)), "d = 3, mu = {}", mu);
    }
    Ok(format!("{} bouquets, 42 smoothings", count))
}

fn criterion_8() -> Check {
    let rad = radial_from_decomposition(&RadialDecomposition::default());
    ensure!(rad == 1, "radial index {}", rad);
    for d in [2usize, 3] {
        for mu in 0..=20u64 {
            let rec = codim2(d, mu);
            let chi = rec.resolve_chi_smoothing().map_err(|e| e.to_string())?;
            let phn = phn_from_radial(rad, d, chi);
            let want = defect(&rec).map_err(|e| e.to_string())?;
            ensure!(phn == want, "d = {}, mu = {}: {} vs {}", d, mu, phn, want);
        }
    }
    Ok("42 radial forms".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("twisted-cubic end-to-end verify", criterion_1),
        ("index recovery both directions", criterion_2),
        ("classification regression", criterion_3),
        ("formula-layer defect identities", criterion_4),
        ("polar multiplicity identity checker", criterion_5),
        ("Groebner kernel oracle equivalence", criterion_6),
        ("Euler-calculus oracle", criterion_7),
        ("radial special case", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {}: {}", k + 1, name, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {}: {}", k + 1, name, why);
            }
        }
    }
    if failed > 0 {
        println!("{} of {} criteria failed", failed, criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
