use heegner_core::eisenstein::vv_eisenstein;
use heegner_core::exactmath::rat;
use heegner_core::fqm::heegner_index;
use heegner_core::schubert::{divisor_degree_projective, divisor_degree_segre};
use heegner_core::vvmf::{assemble_theta, dim_formula, solve_psi, w_prime_rep};
use heegner_core::{Rational, VectorForm};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::{fraction_parts, render_series, Format, Record};
use crate::{Failure, Method};

fn emit(record: &Record, format: Format, plain: impl FnOnce() -> String, csv: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", record.to_json()),
        Format::Plain => print!("{}", plain()),
        Format::Csv => print!("{}", csv()),
    }
}

fn require_terms(terms: i64) -> Result<(), Failure> {
    if terms < 1 {
        return Err(Failure::Usage(format!("--terms must be at least 1, got {terms}")));
    }
    Ok(())
}

/// `Psi` known below `q^terms`; the basis itself needs at least two steps.
fn psi_to(terms: i64) -> Result<VectorForm, Failure> {
    let psi = solve_psi(terms.max(2))?;
    let prec = Rational::from_integer(terms.into());
    Ok(psi.map(psi.weight().clone(), |c| c.truncate(&prec).expect("integer precision"))?)
}

pub fn theta(terms: i64, format: Format) -> Result<(), Failure> {
    require_terms(terms)?;
    let theta = assemble_theta(&psi_to(terms)?)?;
    let rows: Vec<(u64, Rational, BigInt)> =
        theta.degrees.iter().map(|(&d, deg)| (d, rat(d as i64, 6), deg.clone())).collect();

    let mut record = Record::new("theta").param("terms", terms).param("format", format!("{format:?}").to_lowercase());
    record.provenance = vec!["vv_eisenstein", "rankin_cohen", "solve_psi", "assemble_theta"];
    record.result = json!({
        "constant_term": theta.constant_term().to_string(),
        "prec": theta.theta.prec().to_string(),
        "series": theta.theta.terms().map(|(e, c)| json!({"exponent": e.to_string(), "coefficient": c.to_string()})).collect::<Vec<_>>(),
        "degrees": rows.iter().map(|(d, e, deg)| json!({"d": d.to_string(), "exponent": e.to_string(), "degree": deg.to_string()})).collect::<Vec<_>>(),
    });
    emit(
        &record,
        format,
        || {
            let mut s = format!("Theta(q) = {} + O(q^{})\n", render_series(theta.theta.terms()), terms);
            s.push_str(&format!("{:>4}  {:>8}  {}\n", "d", "exponent", "deg(C_d)"));
            for (d, e, deg) in &rows {
                s.push_str(&format!("{d:>4}  {:>8}  {deg}\n", e.to_string()));
            }
            s
        },
        || {
            let mut s = String::from("d,exp_num,exp_den,deg\n");
            for (d, e, deg) in &rows {
                let (n, m) = fraction_parts(e);
                s.push_str(&format!("{d},{n},{m},{deg}\n"));
            }
            s
        },
    );
    Ok(())
}

pub fn eisenstein(k: u32, terms: i64, format: Format) -> Result<(), Failure> {
    require_terms(terms)?;
    let rep = w_prime_rep();
    let e = vv_eisenstein(&rep, k, terms)?;
    let mut record = Record::new("eisenstein").param("k", k).param("terms", terms).param("format", format!("{format:?}").to_lowercase());
    record.provenance = vec!["local_euler_factor", "l_value_ratio", "vv_eisenstein"];
    record.result = json!({
        "weight": e.weight().to_string(),
        "prec": e.prec().to_string(),
        "components": e.components().iter().enumerate().map(|(g, c)| json!({
            "gamma": g.to_string(),
            "q": e.form().qvalue(g).to_string(),
            "terms": c.terms().map(|(x, a)| json!({"exponent": x.to_string(), "coefficient": a.to_string()})).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    emit(
        &record,
        format,
        || {
            let mut s = format!("E_{k} (type rho*, known below q^{terms})\n");
            for (g, c) in e.components().iter().enumerate() {
                s.push_str(&format!("v{g}: {}\n", render_series(c.terms())));
            }
            s
        },
        || {
            let mut s = String::from("component,exp_num,exp_den,coeff\n");
            for (g, c) in e.components().iter().enumerate() {
                for (x, a) in c.terms() {
                    let (n, m) = fraction_parts(&x);
                    s.push_str(&format!("{g},{n},{m},{a}\n"));
                }
            }
            s
        },
    );
    Ok(())
}

pub fn dim(k: u32, format: Format) -> Result<(), Failure> {
    let d = dim_formula(k)?;
    let mut record = Record::new("dim").param("k", k).param("format", format!("{format:?}").to_lowercase());
    record.provenance = vec!["dim_formula"];
    record.result = json!({ "dim": d.to_string() });
    emit(&record, format, || format!("{d}\n"), || format!("k,dim\n{k},{d}\n"));
    Ok(())
}

fn modular_degree(d: u64) -> Result<BigInt, Failure> {
    heegner_index(d)?;
    let prec = (d / 6 + 1) as i64;
    let theta = assemble_theta(&psi_to(prec)?)?;
    theta
        .degree(d)
        .cloned()
        .ok_or_else(|| Failure::Verification(format!("deg(C_{d}) missing at prec {prec}")))
}

pub fn degree(d: u64, method: Method, format: Format) -> Result<(), Failure> {
    let methods: Vec<(&'static str, Method)> = match method {
        Method::All => vec![("modular", Method::Modular), ("schubert", Method::Schubert), ("segre", Method::Segre)],
        m => vec![(method_name(m), m)],
    };
    if methods.iter().any(|(_, m)| !matches!(m, Method::Modular)) && d != 6 && d != 8 {
        return Err(Failure::Usage(format!("the Schubert and Segre paths exist for d in {{6, 8}}, got {d}")));
    }
    let mut values = Vec::new();
    for (name, m) in &methods {
        let v = match m {
            Method::Modular => modular_degree(d)?,
            Method::Schubert => divisor_degree_projective(d)?,
            Method::Segre => divisor_degree_segre(d)?,
            Method::All => unreachable!(),
        };
        values.push((*name, v));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut record = Record::new("degree")
        .param("d", d)
        .param("method", method_name(method))
        .param("format", format!("{format:?}").to_lowercase());
    record.provenance = values.iter().map(|(n, _)| *n).collect();
    record.result = json!({
        "paths": values.iter().map(|(n, v)| (n.to_string(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>(),
        "agree": agree,
    });
    emit(
        &record,
        format,
        || {
            let mut s = String::new();
            for (n, v) in &values {
                s.push_str(&format!("deg(C_{d}) = {v}  [{n}]\n"));
            }
            if values.len() > 1 {
                s.push_str(if agree { "all paths agree\n" } else { "PATHS DISAGREE\n" });
            }
            s
        },
        || {
            let mut s = String::from("method,deg\n");
            for (n, v) in &values {
                s.push_str(&format!("{n},{v}\n"));
            }
            s
        },
    );
    if agree {
        Ok(())
    } else {
        Err(Failure::Verification(format!("methods disagree on deg(C_{d})")))
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Modular => "modular",
        Method::Schubert => "schubert",
        Method::Segre => "segre",
        Method::All => "all",
    }
}
