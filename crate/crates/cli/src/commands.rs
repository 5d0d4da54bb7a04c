use std::fmt::Display;
use std::fs;

use wigner_sumrules::hydrogenic::{
    cg_spherical_parabolic, expval_parabolic, expval_parabolic_via_basis_change, expval_spherical,
    expval_spherical_negative, l2_parabolic_n1n2_form, l2_parabolic_quadratic_form, l2k_parabolic,
    l2k_parabolic_bruteforce, l4_parabolic_conjectured, l4_parabolic_printed, marxer_reflect,
    parabolic_k4_printed_prefactor, quasiclassical_probability, quasiclassical_probability_m0,
    table_polynomial, xi_moment, Charge, Method, Orbital, ParabolicOrbital, SphericalOrbital,
};
use wigner_sumrules::sumrule::{
    sumrule_bruteforce, sumrule_closed, sumrule_operator, sumrule_permutation, SumRuleQuery,
};
use wigner_sumrules::verify::{self, Bounds, Suite};
use wigner_sumrules::wigner::{clebsch_gordan, sixj, threej};
use wigner_sumrules::{HalfInt, Rational};

use crate::output::OutputRecord;
use crate::{
    AngularMethod, Cli, Command, Expval, ExpvalMethod, Failure, ParabolicState, SumruleMethod, TableCoords,
    XiMethod,
};

type Outcome = Result<(), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn named<T: Display>(names: &[&'static str], values: &[T]) -> Vec<(&'static str, String)> {
    names.iter().zip(values).map(|(n, v)| (*n, v.to_string())).collect()
}

fn emit(rec: OutputRecord, json: bool) -> Outcome {
    rec.emit(json)?;
    if rec.mismatch() {
        return Err(Failure::Mismatch);
    }
    Ok(())
}

pub(crate) fn run(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        &Command::ThreeJ { j1, j2, j3, m1, m2, m3 } => {
            let v = [j1, j2, j3, m1, m2, m3];
            let value = threej(v[0], v[1], v[2], v[3], v[4], v[5])?;
            emit(OutputRecord::new("3j", named(&["j1", "j2", "j3", "m1", "m2", "m3"], &v), value), json)
        }
        &Command::SixJ { j1, j2, j3, j4, j5, j6 } => {
            let v = [j1, j2, j3, j4, j5, j6];
            let value = sixj(v)?;
            emit(OutputRecord::new("6j", named(&["j1", "j2", "j3", "j4", "j5", "j6"], &v), value), json)
        }
        &Command::Cg { j1, m1, j2, m2, j, m } => {
            let v = [j1, m1, j2, m2, j, m];
            let value = clebsch_gordan(v[0], v[1], v[2], v[3], v[4], v[5])?;
            emit(OutputRecord::new("cg", named(&["j1", "m1", "j2", "m2", "j", "m"], &v), value), json)
        }
        &Command::Sumrule { k, j1, m1, j2, m2, method } => sumrule(k, &[j1, m1, j2, m2], method, json),
        Command::Expval { coords } => expval(coords, json),
        Command::Xi { n, n1, m, z, k, method } => {
            let z = Charge::new(z.clone())?;
            let args = vec![
                ("n", n.to_string()),
                ("n1", n1.to_string()),
                ("m", m.to_string()),
                ("Z", z.value().to_string()),
                ("k", k.to_string()),
            ];
            let rec = xi_moment(*n, *n1, *m, &z, *k, Method::Recurrence)?.coefficient().to_string();
            let mut out = OutputRecord::new("xi", args, &rec);
            match method {
                XiMethod::Recurrence => {}
                XiMethod::Explicit => {
                    out.value = xi_moment(*n, *n1, *m, &z, *k, Method::Explicit)?.coefficient().to_string();
                }
                XiMethod::All => {
                    let exp = xi_moment(*n, *n1, *m, &z, *k, Method::Explicit)?.coefficient().to_string();
                    out = out.with_methods(vec![("recurrence", rec), ("explicit", exp)]);
                }
            }
            emit(out, json)
        }
        Command::Overlap { n, q, m, l } => {
            ParabolicOrbital::from_electric(*n, *q, *m)?;
            let ls: Vec<u32> = match l {
                Some(l) => vec![*l],
                None => (m.unsigned_abs()..*n).collect(),
            };
            for l in ls {
                let value = cg_spherical_parabolic(*n, *q, *m, l)?;
                let args = vec![("n", n.to_string()), ("q", q.to_string()), ("m", m.to_string()), ("l", l.to_string())];
                emit(OutputRecord::new("overlap", args, value), json)?;
            }
            Ok(())
        }
        Command::Angular { state, k, method } => angular(state, *k, *method, json),
        Command::Table { coords } => table(coords, json),
        Command::Quasiclassical { n, m, q, l } => {
            let mut args = vec![("n", n.to_string()), ("m", m.to_string()), ("q", q.to_string())];
            let value = match l {
                Some(l) => {
                    args.push(("l", l.to_string()));
                    quasiclassical_probability(*n, *m, *q, *l)?
                }
                None if *m == 0 => quasiclassical_probability_m0(*n, *q)?,
                None => return usage("l is required unless m = 0"),
            };
            emit(OutputRecord::new("quasiclassical", args, value), json)
        }
        Command::Verify { suite, max_j, max_n, max_k, out } => {
            let suite: Suite = suite.parse()?;
            if max_j.twice() <= 0 || *max_n == 0 || *max_k == 0 {
                return usage("verify bounds must be positive");
            }
            let bounds = Bounds { max_j: *max_j, max_n: *max_n, max_k: *max_k };
            let reports = verify::run(suite, &bounds);
            let mut text = String::new();
            for r in &reports {
                text += &r.to_string();
            }
            if json {
                for r in &reports {
                    let args = vec![
                        ("suite", r.suite.to_string()),
                        ("max_j", max_j.to_string()),
                        ("max_n", max_n.to_string()),
                        ("max_k", max_k.to_string()),
                    ];
                    let value = format!("{} passed, {} failed, {} warnings", r.passed(), r.failed(), r.warnings.len());
                    let mut rec = OutputRecord::new("verify", args, value);
                    rec.verdict = Some(if r.is_ok() { "OK" } else { "FAIL" }.to_string());
                    rec.emit(true)?;
                }
            } else {
                print!("{text}");
            }
            if let Some(path) = out {
                fs::write(path, &text)?;
            }
            if reports.iter().all(|r| r.is_ok()) {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}

fn sumrule(k: u32, v: &[HalfInt], method: SumruleMethod, json: bool) -> Outcome {
    let q = SumRuleQuery::new(k, v[0], v[1], v[2], v[3])?;
    let mut args = vec![("k", k.to_string())];
    args.extend(named(&["j1", "m1", "j2", "m2"], v));
    let closed = || -> Result<Rational, Failure> {
        if k > 3 {
            return usage(format!("closed forms exist for k <= 3, got k = {k}"));
        }
        Ok(sumrule_closed(k, v[0], v[1], v[2], v[3])?)
    };
    let value = match method {
        SumruleMethod::Operator | SumruleMethod::All => sumrule_operator(&q),
        SumruleMethod::Closed => closed()?,
        SumruleMethod::Bruteforce => sumrule_bruteforce(&q),
        SumruleMethod::Permutation => sumrule_permutation(&q)?,
    };
    let mut rec = OutputRecord::new("sumrule", args, &value);
    if method == SumruleMethod::All {
        let mut methods = vec![("operator", value.to_string()), ("bruteforce", sumrule_bruteforce(&q).to_string())];
        if k <= 3 {
            methods.push(("closed", closed()?.to_string()));
        }
        if let Ok(p) = sumrule_permutation(&q) {
            methods.push(("permutation", p.to_string()));
        }
        rec = rec.with_methods(methods);
    }
    emit(rec, json)
}

fn parabolic_state(s: &ParabolicState) -> Result<ParabolicOrbital, Failure> {
    let orb = match (s.n1, s.n2, s.q) {
        (Some(n1), Some(n2), None) => match s.n {
            Some(n) => ParabolicOrbital::new(n, n1, n2, s.m)?,
            None => ParabolicOrbital::from_parabolic(n1, n2, s.m),
        },
        (None, None, Some(q)) => match s.n {
            Some(n) => ParabolicOrbital::from_electric(n, q, s.m)?,
            None => return usage("--q needs --n"),
        },
        _ => return usage("give either --n1 and --n2, or --n and --q"),
    };
    Ok(orb)
}

fn parabolic_args(o: &ParabolicOrbital) -> Vec<(&'static str, String)> {
    vec![
        ("n", o.n().to_string()),
        ("n1", o.n1().to_string()),
        ("n2", o.n2().to_string()),
        ("m", o.m().to_string()),
    ]
}

fn expval(coords: &Expval, json: bool) -> Outcome {
    match coords {
        Expval::Spherical { n, l, z, p, method, negative } => {
            let orb = SphericalOrbital::new(*n, *l)?;
            let z = Charge::new(z.clone())?;
            let mut args = vec![("n", n.to_string()), ("l", l.to_string()), ("Z", z.value().to_string()), ("p", p.to_string())];
            if *negative {
                if *method != ExpvalMethod::Recurrence {
                    return usage("--negative has a single method");
                }
                args.push(("power", format!("-{}", p + 2)));
                let value = expval_spherical_negative(&orb, &z, *p)?;
                return emit(OutputRecord::new("expval-spherical", args, value), json);
            }
            let rec = expval_spherical(&orb, &z, *p, Method::Recurrence);
            let value = match method {
                ExpvalMethod::Recurrence | ExpvalMethod::All => rec.clone(),
                ExpvalMethod::Explicit => expval_spherical(&orb, &z, *p, Method::Explicit),
                ExpvalMethod::Reflection => marxer_reflect(&orb, &z, *p)?,
                ExpvalMethod::Basis => return usage("--method basis applies to parabolic states"),
            };
            let mut out = OutputRecord::new("expval-spherical", args, value);
            if *method == ExpvalMethod::All {
                let mut methods = vec![
                    ("recurrence", rec.to_string()),
                    ("explicit", expval_spherical(&orb, &z, *p, Method::Explicit).to_string()),
                ];
                if let Ok(r) = marxer_reflect(&orb, &z, *p) {
                    methods.push(("reflection", r.to_string()));
                }
                out = out.with_methods(methods);
            }
            emit(out, json)
        }
        Expval::Parabolic { state, z, p, method } => {
            let orb = parabolic_state(state)?;
            let z = Charge::new(z.clone())?;
            let mut args = parabolic_args(&orb);
            args.push(("Z", z.value().to_string()));
            args.push(("p", p.to_string()));
            let direct = expval_parabolic(&orb, &z, *p);
            let value = match method {
                ExpvalMethod::Recurrence | ExpvalMethod::All => direct.clone(),
                ExpvalMethod::Basis => expval_parabolic_via_basis_change(&orb, &z, *p),
                ExpvalMethod::Explicit | ExpvalMethod::Reflection => {
                    return usage("parabolic states support --method recurrence, basis or all")
                }
            };
            let mut out = OutputRecord::new("expval-parabolic", args, value);
            if *method == ExpvalMethod::All {
                out = out.with_methods(vec![
                    ("composition", direct.to_string()),
                    ("basis", expval_parabolic_via_basis_change(&orb, &z, *p).to_string()),
                ]);
            }
            emit(out, json)
        }
    }
}

fn angular(state: &ParabolicState, k: u32, method: AngularMethod, json: bool) -> Outcome {
    let orb = parabolic_state(state)?;
    let mut args = parabolic_args(&orb);
    args.push(("k", k.to_string()));
    let sum = l2k_parabolic(&orb, k)?;
    let value = match method {
        AngularMethod::Sumrule | AngularMethod::All => sum.clone(),
        AngularMethod::Bruteforce => l2k_parabolic_bruteforce(&orb, k),
    };
    let mut out = OutputRecord::new("angular", args, value);
    if method == AngularMethod::All {
        let mut methods = vec![("sumrule", sum.to_string()), ("bruteforce", l2k_parabolic_bruteforce(&orb, k).to_string())];
        if k == 1 {
            methods.push(("quadratic-form", l2_parabolic_quadratic_form(&orb).to_string()));
            methods.push(("n1n2-form", l2_parabolic_n1n2_form(&orb).to_string()));
        } else {
            methods.push(("corrected-form", l4_parabolic_conjectured(&orb).to_string()));
            let printed = l4_parabolic_printed(&orb);
            if printed != sum {
                eprintln!("warning: printed <L^4> polynomial gives {printed}, sum rule gives {sum}");
            }
        }
        out = out.with_methods(methods);
    }
    emit(out, json)
}

fn table(coords: &TableCoords, json: bool) -> Outcome {
    match coords {
        TableCoords::Spherical { n, l, z, k } => {
            let orb = SphericalOrbital::new(*n, *l)?;
            let z = Charge::new(z.clone())?;
            let value = table_polynomial(&Orbital::Spherical(orb), *k, &z)?;
            let args = vec![("n", n.to_string()), ("l", l.to_string()), ("Z", z.value().to_string()), ("k", k.to_string())];
            emit(OutputRecord::new("table-spherical", args, value), json)
        }
        TableCoords::Parabolic { state, z, k, printed_prefactor } => {
            let orb = parabolic_state(state)?;
            let z = Charge::new(z.clone())?;
            let mut args = parabolic_args(&orb);
            args.push(("Z", z.value().to_string()));
            args.push(("k", k.to_string()));
            let value = if *printed_prefactor {
                if *k != 4 {
                    return usage("--printed-prefactor applies to k = 4 only");
                }
                args.push(("prefactor", "printed".to_string()));
                parabolic_k4_printed_prefactor(&orb, &z)
            } else {
                table_polynomial(&Orbital::Parabolic(orb), *k, &z)?
            };
            emit(OutputRecord::new("table-parabolic", args, value), json)
        }
    }
}
