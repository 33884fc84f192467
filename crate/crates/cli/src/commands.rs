use std::fmt::{self, Display, Write as _};
use std::fs;

use num_bigint::BigInt;
use serde_json::{json, Value};

use mzl_core::algebra::json::{AnySeries, CoeffJson};
use mzl_core::algebra::{BigRational, EPolynomial, LaurentClass, Ring, SeriesPrefix};
use mzl_core::claim::{expand_determinant, genus_of_term, irrationality_witness, verify_claim};
use mzl_core::hodge::HodgeDiamond;
use mzl_core::rationality::{
    check_global, hankel_window, implication_chain_probe, reconstruct_certificate, RationalCertificate, CSV_HEADER,
};
use mzl_core::zeta::{invert_l, specialize, sym_coefficients, SpecializationMap, ZetaPrefix};

use crate::{Format, InputArgs, SeriesArgs};

/// L-powers always checked by `witness`.
const WITNESS_SHIFTS: [usize; 3] = [0, 1, 5];

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }

    fn verdict(stdout: String, holds: bool) -> Self {
        Self { stdout, code: if holds { 0 } else { 1 } }
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(mzl_core::Error),
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Io { .. } => 3,
            Self::Core(mzl_core::Error::InsufficientPrefix { .. }) => 4,
            Self::Core(_) => 2,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Core(e) => write!(f, "{e}"),
            Self::Io { path, source } => write!(f, "cannot read {path}: {source}"),
        }
    }
}

impl From<mzl_core::Error> for CliError {
    fn from(e: mzl_core::Error) -> Self {
        Self::Core(e)
    }
}

type CliResult = Result<Output, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Core(mzl_core::Error::InvalidParams(msg.into()))
}

pub fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected a:b, got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

pub fn parse_point(s: &str) -> Result<(i64, i64), String> {
    let (u, v) = s.split_once(',').ok_or_else(|| format!("expected U,V, got {s:?}"))?;
    let u = u.trim().parse().map_err(|_| format!("bad U in {s:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("bad V in {s:?}"))?;
    Ok((u, v))
}

fn read_json(path: &str) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })?;
    serde_json::from_str(&text).map_err(|e| CliError::Core(mzl_core::Error::Parse(format!("{path}: {e}"))))
}

fn read_diamond(path: &str) -> Result<HodgeDiamond, CliError> {
    Ok(HodgeDiamond::from_json(&read_json(path)?)?)
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_quote(s: impl Display) -> String {
    format!("\"{}\"", s.to_string().replace('"', "\"\""))
}

fn zeta_prefix(diamond: &str, terms: usize) -> Result<ZetaPrefix, CliError> {
    if terms == 0 {
        return Err(invalid("--terms must be at least 1"));
    }
    Ok(sym_coefficients(&read_diamond(diamond)?, terms - 1))
}

/// A zeta prefix after the optional L-inversion and specialization.
enum Realized {
    Poly(ZetaPrefix),
    Laurent(ZetaPrefix<LaurentClass>),
    Rational(HodgeDiamond, SeriesPrefix<BigRational>),
}

fn realize(diamond: &str, terms: usize, lpow: Option<i64>, eval: Option<(i64, i64)>) -> Result<Realized, CliError> {
    let z = zeta_prefix(diamond, terms)?;
    let r = match (lpow, eval) {
        (None, None) => Realized::Poly(z),
        (Some(n), None) => Realized::Laurent(invert_l(&z, n)),
        (None, Some((u, v))) => {
            Realized::Rational(z.source.clone(), specialize(&z.coeffs, &SpecializationMap::new(u, v))?)
        }
        (Some(n), Some((u, v))) => {
            let inv = invert_l(&z, n);
            Realized::Rational(z.source, specialize(&inv.coeffs, &SpecializationMap::new(u, v))?)
        }
    };
    Ok(r)
}

fn coeffs_csv<R: Ring + Display>(coeffs: &SeriesPrefix<R>) -> String {
    let mut out = String::from("n,coeff\n");
    for (n, c) in coeffs.coeffs().iter().enumerate() {
        writeln!(out, "{n},{}", csv_quote(c)).expect("string write");
    }
    out
}

pub fn zeta_coeffs(args: &SeriesArgs, fmt: Format) -> CliResult {
    let realized = realize(&args.diamond, args.terms, args.invert_l, args.eval)?;
    let out = match (realized, fmt) {
        (Realized::Poly(z), Format::Json) => render(&z.to_json()),
        (Realized::Laurent(z), Format::Json) => render(&z.to_json()),
        (Realized::Rational(d, s), Format::Json) => render(&ZetaPrefix { source: d, coeffs: s }.to_json()),
        (Realized::Poly(z), Format::Csv) => coeffs_csv(&z.coeffs),
        (Realized::Laurent(z), Format::Csv) => coeffs_csv(&z.coeffs),
        (Realized::Rational(_, s), Format::Csv) => coeffs_csv(&s),
    };
    Ok(Output::ok(out))
}

fn hankel_out<R: CoeffJson + Display>(s: &SeriesPrefix<R>, window: usize, fmt: Format) -> Result<String, CliError> {
    let report = hankel_window(s, window)?;
    Ok(match fmt {
        Format::Json => render(&report.to_json()),
        Format::Csv => format!("{CSV_HEADER}\n{}", report.csv_rows()),
    })
}

pub fn zeta_hankel(args: &SeriesArgs, window: usize, fmt: Format) -> CliResult {
    let out = match realize(&args.diamond, args.terms, args.invert_l, args.eval)? {
        Realized::Poly(z) => hankel_out(&z.coeffs, window, fmt)?,
        Realized::Laurent(z) => hankel_out(&z.coeffs, window, fmt)?,
        Realized::Rational(_, s) => hankel_out(&s, window, fmt)?,
    };
    Ok(Output::ok(out))
}

fn load_input(input: &InputArgs) -> Result<AnySeries, CliError> {
    match (&input.series, &input.diamond) {
        (Some(path), None) => {
            if input.invert_l.is_some() || input.eval.is_some() {
                return Err(invalid("--invert-L and --eval apply to --diamond input only"));
            }
            Ok(AnySeries::from_json(&read_json(path)?)?)
        }
        (None, Some(d)) => Ok(match realize(d, input.terms, input.invert_l, input.eval)? {
            Realized::Poly(z) => AnySeries::Poly(z.coeffs),
            Realized::Laurent(z) => AnySeries::Laurent(z.coeffs),
            Realized::Rational(_, s) => AnySeries::Q(s),
        }),
        _ => Err(invalid("exactly one of --series or --diamond is required")),
    }
}

pub fn reconstruct(input: &InputArgs, max_deg: usize, fmt: Format) -> CliResult {
    let series = match load_input(input)? {
        AnySeries::Z(s) => s.map(|c| BigRational::from_integer(c.clone())),
        AnySeries::Q(s) => s,
        other => {
            return Err(invalid(format!(
                "reconstruction works over Q; got a {} series (pass --eval U,V to specialize)",
                other.ring_tag()
            )))
        }
    };
    if series.order() < 2 * max_deg {
        return Err(CliError::Core(mzl_core::Error::InsufficientPrefix {
            needed: 2 * max_deg,
            available: series.order(),
        }));
    }
    let cert = reconstruct_certificate(&series, max_deg);
    let found = cert.is_some();
    let out = match fmt {
        Format::Json => render(&json!({
            "K": series.order(),
            "max_deg": max_deg,
            "certificate": cert.as_ref().map(RationalCertificate::to_json),
        })),
        Format::Csv => {
            let mut out = String::from("poly,k,coeff\n");
            if let Some(c) = &cert {
                for (name, p) in [("g", &c.g), ("h", &c.h)] {
                    for (k, a) in p.coeffs().iter().enumerate() {
                        writeln!(out, "{name},{k},{}", csv_quote(a)).expect("string write");
                    }
                }
            }
            out
        }
    };
    Ok(Output::verdict(out, found))
}

fn check_typed<R: CoeffJson>(series: &SeriesPrefix<R>, cert: &Value) -> Result<(bool, usize), CliError> {
    let cert = RationalCertificate::<R>::from_json(cert)?;
    let holds = check_global(series, &cert)?;
    Ok((holds, series.order().min(cert.verified_to)))
}

pub fn check(input: &InputArgs, cert_path: &str, fmt: Format) -> CliResult {
    let series = load_input(input)?;
    let cert = read_json(cert_path)?;
    let (holds, through) = match &series {
        AnySeries::Z(s) => check_typed(s, &cert)?,
        AnySeries::Q(s) => check_typed(s, &cert)?,
        AnySeries::Poly(s) => check_typed(s, &cert)?,
        AnySeries::Laurent(s) => check_typed(s, &cert)?,
    };
    let out = match fmt {
        Format::Json => render(&json!({"ring": series.ring_tag(), "holds": holds, "checked_through": through})),
        Format::Csv => format!("ring,holds,checked_through\n{},{holds},{through}\n", series.ring_tag()),
    };
    Ok(Output::verdict(out, holds))
}

pub fn probe(seed: u64, samples: usize, fmt: Format) -> CliResult {
    let report = implication_chain_probe(seed, samples)?;
    let out = match fmt {
        Format::Json => render(&report.to_json()),
        Format::Csv => {
            let mut out = String::from("index,deg_g,deg_h,K,stable_offset,offset_bound,holds\n");
            for (i, inst) in report.instances.iter().enumerate() {
                let stable = inst.stable_offset.map_or(String::new(), |n| n.to_string());
                writeln!(
                    out,
                    "{i},{},{},{},{stable},{},{}",
                    inst.deg_g,
                    inst.deg_h,
                    inst.prefix_order,
                    inst.offset_bound,
                    inst.holds()
                )
                .expect("string write");
            }
            out
        }
    };
    Ok(Output::verdict(out, report.failures() == 0))
}

pub fn claim_verify(pg: u64, n: usize, (a, b): (u64, u64), fmt: Format) -> CliResult {
    let report = verify_claim(pg, n, a..=b)?;
    let out = match fmt {
        Format::Json => render(&report.to_json()),
        Format::Csv => format!("m,sigma,genus\n{}", report.csv_rows()),
    };
    Ok(Output::verdict(out, report.separated()))
}

pub fn claim_expand(n: usize, m: u64, pg: Option<u64>, fmt: Format) -> CliResult {
    let mut terms = expand_determinant(n, m);
    if let Some(p) = pg {
        for t in &mut terms {
            t.genus_product = Some(genus_of_term(p, t));
        }
    }
    let out = match fmt {
        Format::Json => render(&json!({
            "n": n,
            "m": m,
            "pg": pg,
            "terms": terms.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("sigma,sign,exponents,genus\n");
            for t in &terms {
                let exps = t.exponents.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
                let genus = t.genus_product.as_ref().map_or(String::new(), BigInt::to_string);
                writeln!(out, "{},{},{exps},{genus}", t.sigma_one_line(), t.sign).expect("string write");
            }
            out
        }
    };
    Ok(Output::ok(out))
}

pub fn witness(diamond: &str, n: usize, (a, b): (u64, u64), extra: Option<usize>, fmt: Format) -> CliResult {
    let x = read_diamond(diamond)?;
    let mut shifts = WITNESS_SHIFTS.to_vec();
    if let Some(l) = extra {
        if !shifts.contains(&l) {
            shifts.push(l);
        }
    }
    let report = irrationality_witness(&x, n, a..=b, &shifts)?;
    let out = match fmt {
        Format::Json => render(&report.to_json()),
        Format::Csv => format!("m,identity_genus,collisions,lpow_invariant,holds\n{}", report.csv_rows()),
    };
    Ok(Output::verdict(out, report.holds()))
}

pub fn genus(diamond: &str, stable: usize, fmt: Format) -> CliResult {
    let x = read_diamond(diamond)?;
    let gp = x.genus_polynomial();
    let holds = x.stable_invariance_check(stable);
    let out = match fmt {
        Format::Json => render(&json!({
            "diamond": x.to_json(),
            "genus_polynomial": gp.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "pg": gp.geometric_genus().to_string(),
            "e_polynomial": EPolynomial::to_json(&x.e_polynomial()),
            "euler_characteristic": x.euler_characteristic().to_string(),
            "stable_invariance": {"n": stable, "holds": holds},
        })),
        Format::Csv => {
            let mut out = String::from("i,h_i0\n");
            for (i, c) in gp.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}").expect("string write");
            }
            out
        }
    };
    Ok(Output::verdict(out, holds))
}
