use std::sync::Arc;

use heegner_core::eisenstein::{theta_series_rank10, vv_eisenstein};
use heegner_core::exactmath::{int, rat};
use heegner_core::schubert::{
    box_partitions, divisor_degree_projective, divisor_degree_segre,
    kernel_gr36, kernel_p5, lr_multiply, reduction_degree, RingClass,
};
use heegner_core::vvmf::{assemble_theta, basis_weight11, dim_formula, numeric_modularity_check, solve_psi, w_prime_rep};
use heegner_core::{DiscriminantForm, EvenLattice, Mp2Element, Result, WeilRep};
use num_bigint::BigInt;
use num_complex::Complex64;
use serde_json::json;

use crate::output::{Format, Record};
use crate::Failure;

pub const SUITES: &[&str] = &["milgram", "weil", "eisenstein", "dimension", "theta", "modularity", "schubert", "degrees"];

struct Check {
    name: String,
    pass: bool,
    /// floating-point residual for numeric checks
    residual: Option<f64>,
}

fn check(name: impl Into<String>, outcome: Result<bool>) -> Check {
    let name = name.into();
    match outcome {
        Ok(pass) => Check { name, pass, residual: None },
        Err(e) => Check { name: format!("{name} ({e})"), pass: false, residual: None },
    }
}

fn residual_check(name: &str, outcome: Result<f64>, tol: f64) -> Check {
    match outcome {
        Ok(r) => Check { name: name.into(), pass: r < tol, residual: Some(r) },
        Err(e) => Check { name: format!("{name} ({e})"), pass: false, residual: None },
    }
}

fn rep(lat: &EvenLattice, dual: bool) -> Result<WeilRep> {
    Ok(WeilRep::new(Arc::new(DiscriminantForm::new(lat)?), dual))
}

fn milgram() -> Vec<Check> {
    let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).expect("A2 is even");
    let lattices = [
        ("W", EvenLattice::w()),
        ("-W", EvenLattice::w_prime()),
        ("U", EvenLattice::u()),
        ("E8", EvenLattice::e8()),
        ("A2+A2", EvenLattice::direct_sum(&[a2.clone(), a2])),
    ];
    lattices
        .iter()
        .map(|(n, l)| check(format!("Gauss-Milgram for {n}"), rep(l, false).and_then(|r| r.milgram_holds())))
        .collect()
}

fn weil() -> Vec<Check> {
    let r = w_prime_rep();
    let mut sample = Vec::new();
    for c in (-9..=9).step_by(3) {
        for d in -7i64..=7 {
            let found = (-12i64..=12).flat_map(|a| (-12i64..=12).map(move |b| (a, b))).find(|&(a, b)| a * d - b * c == 1);
            if let Some((a, b)) = found {
                for sign in [1, -1] {
                    sample.push(Mp2Element::new(a, b, c, d, sign).expect("determinant one"));
                }
            }
        }
    }
    let closed = sample.iter().try_fold(true, |ok, g| Ok(ok && r.gamma0_formula(g)? == *r.matrix(g)));
    let s = Mp2Element::s();
    let t = Mp2Element::t();
    let st3 = s.compose(&t).pow(3);
    vec![
        check(format!("closed form on {} elements of Gamma0(3)", sample.len()), closed),
        check("rho(S)^2 = rho(S^2)", Ok(*r.matrix(&s.pow(2)) == r.matrix(&s).pow(2))),
        check("rho((ST)^3) = rho(S^2)", Ok(*r.matrix(&st3) == *r.matrix(&s.pow(2)))),
    ]
}

fn eisenstein() -> Vec<Check> {
    let r = w_prime_rep();
    let e5 = vv_eisenstein(&r, 5, 4);
    let display = e5.as_ref().map_err(Clone::clone).and_then(|e| {
        let v0: Vec<_> = (0..4).map(|n| e.coefficient(0, &int(n))).collect::<Result<_>>()?;
        let v1: Vec<_> = [1, 4, 7].iter().map(|&n| e.coefficient(1, &rat(n, 3))).collect::<Result<_>>()?;
        Ok(v0 == [2, 492, 7200, 39372].map(int) && v1 == [6, 1446, 14412].map(int) && e.component(1) == e.component(2))
    });
    let oracle = e5.as_ref().map_err(Clone::clone).and_then(|e| {
        let theta = theta_series_rank10(e.form_arc(), 4)?;
        Ok(e.components() == theta.scale(&int(2)).components())
    });
    vec![check("E5 matches the reference coefficients", display), check("E5 = 2 theta(W + E8)", oracle)]
}

fn dimension() -> Vec<Check> {
    [(3, 1), (5, 1), (11, 2)]
        .iter()
        .map(|&(k, d)| check(format!("dim M_{k} = {d}"), dim_formula(k).map(|x| x == d)))
        .collect()
}

fn theta() -> Vec<Check> {
    let theta = solve_psi(3).and_then(|p| assemble_theta(&p));
    let expect = [(6, 192), (8, 3402), (12, 196272), (14, 917568)];
    let mut out = vec![check("constant term -2", theta.as_ref().map(|t| t.constant_term() == int(-2)).map_err(Clone::clone))];
    for (d, n) in expect {
        let ok = theta.as_ref().map(|t| t.degree(d) == Some(&BigInt::from(n))).map_err(Clone::clone);
        out.push(check(format!("deg(C_{d}) = {n}"), ok));
    }
    out
}

fn modularity() -> Vec<Check> {
    let r = w_prime_rep();
    let s = Mp2Element::s();
    let i = Complex64::new(0.0, 1.0);
    let f0 = basis_weight11(30).and_then(|(f0, _)| numeric_modularity_check(&f0, &r, &s, i, 1e-6));
    let psi = solve_psi(30).and_then(|p| numeric_modularity_check(&p, &r, &s, i, 1e-6));
    vec![residual_check("S-transformation of F0 at i", f0, 1e-6), residual_check("S-transformation of Psi at i", psi, 1e-6)]
}

fn schubert() -> Vec<Check> {
    let s1 = RingClass::schubert(&[1]);
    let parts = box_partitions(3, 3);
    let pairing = parts.iter().all(|l| {
        parts.iter().all(|m| {
            let comp = (0..3).all(|i| l[i] + m[2 - i] == 3);
            lr_multiply(&RingClass::schubert(l), &RingClass::schubert(m)).degree() == comp as i128
        })
    });
    let rows: Vec<RingClass> = (1..=3u8).map(|a| RingClass::schubert(&[a])).collect();
    let assoc = rows.iter().all(|x| {
        rows.iter().all(|y| rows.iter().all(|z| lr_multiply(&lr_multiply(x, y), z) == lr_multiply(x, &lr_multiply(y, z))))
    });
    vec![
        check("s1^9 = 42 s333", Ok(s1.pow(9) == RingClass::schubert(&[3, 3, 3]).scale(42))),
        check("Poincare pairing on 20 classes", Ok(pairing)),
        check("LR associativity on row classes", Ok(assoc)),
    ]
}

fn degrees() -> Vec<Check> {
    let theta = solve_psi(2).and_then(|p| assemble_theta(&p));
    let mut out = Vec::new();
    for (d, n, k) in [(6u64, 192, kernel_p5()), (8, 3402, kernel_gr36())] {
        let n = BigInt::from(n);
        let k_deg = if d == 6 { 5 } else { 9 };
        let paths = [
            ("modular", theta.as_ref().map(|t| t.degree(d).cloned().unwrap_or_default()).map_err(Clone::clone)),
            ("projective bundle", divisor_degree_projective(d)),
            ("Segre series", divisor_degree_segre(d)),
            ("closed reduction polynomial", Ok(reduction_degree(&k, k_deg))),
        ];
        for (name, v) in paths {
            out.push(check(format!("deg(C_{d}) = {n} via {name}"), v.map(|v| v == n)));
        }
    }
    out
}

pub fn verify(suite: &str, format: Format) -> std::result::Result<(), Failure> {
    let names: Vec<&'static str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => SUITES.iter().copied().filter(|n| *n == s).collect(),
        s => return Err(Failure::Usage(format!("unknown suite '{s}'; expected one of all, {}", SUITES.join(", ")))),
    };
    let mut results: Vec<(&'static str, Vec<Check>)> = Vec::new();
    for name in names {
        let checks = match name {
            "milgram" => milgram(),
            "weil" => weil(),
            "eisenstein" => eisenstein(),
            "dimension" => dimension(),
            "theta" => theta(),
            "modularity" => modularity(),
            "schubert" => schubert(),
            "degrees" => degrees(),
            _ => unreachable!(),
        };
        results.push((name, checks));
    }
    let all_pass = results.iter().all(|(_, c)| c.iter().all(|x| x.pass));
    match format {
        Format::Json => {
            let mut record = Record::new("verify").param("suite", suite).param("format", "json");
            record.provenance = results.iter().map(|(n, _)| *n).collect();
            record.result = json!({
                "pass": all_pass,
                "suites": results.iter().map(|(n, cs)| json!({
                    "suite": n,
                    "checks": cs.iter().map(|c| {
                        let mut v = json!({"property": c.name, "pass": c.pass});
                        if let Some(r) = c.residual {
                            v["float_residual"] = json!(format!("{r:.3e}"));
                        }
                        v
                    }).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", record.to_json());
        }
        Format::Csv => {
            println!("suite,property,pass");
            for (n, cs) in &results {
                for c in cs {
                    println!("{n},\"{}\",{}", c.name.replace('"', "'"), c.pass);
                }
            }
        }
        Format::Plain => {
            for (n, cs) in &results {
                for c in cs {
                    let tag = if c.pass { "PASS" } else { "FAIL" };
                    match c.residual {
                        Some(r) => println!("{tag} [{n}] {} (float residual {r:.3e})", c.name),
                        None => println!("{tag} [{n}] {}", c.name),
                    }
                }
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Verification(format!("suite '{suite}' has failing properties")))
    }
}
