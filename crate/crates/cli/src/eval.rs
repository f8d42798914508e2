//! One evaluation per (kind, params): the library value, an independent
//! oracle where one is cheap, and the stated limit for the limit integrals.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use harmonia::exactq::{rational_to_f64, Parity, Variant};
use harmonia::fourier::{self, FourierSpec, Trig};
use harmonia::harmonic;
use harmonia::oracle;
use harmonia::quad::QuadSpec;
use harmonia::zeta::{self, ZetaRepresentation};

use crate::CliError;

/// Largest `n` for which the literal sums are used as oracles.
const DIRECT_LIMIT: f64 = 1e6;
const EULER_TERMS: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    H,
    C,
    S,
    ZetaOdd,
    EulerSum,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Corollary1,
    GenfunEven,
    GenfunOdd,
    ZetaGenfunEven,
    ZetaGenfunOdd,
}

impl Kind {
    pub const ALL: [Kind; 14] = [
        Kind::H,
        Kind::C,
        Kind::S,
        Kind::ZetaOdd,
        Kind::EulerSum,
        Kind::Theorem1,
        Kind::Theorem2,
        Kind::Theorem3,
        Kind::Theorem4,
        Kind::Corollary1,
        Kind::GenfunEven,
        Kind::GenfunOdd,
        Kind::ZetaGenfunEven,
        Kind::ZetaGenfunOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::H => "h",
            Kind::C => "c",
            Kind::S => "s",
            Kind::ZetaOdd => "zeta-odd",
            Kind::EulerSum => "euler-sum",
            Kind::Theorem1 => "theorem1",
            Kind::Theorem2 => "theorem2",
            Kind::Theorem3 => "theorem3",
            Kind::Theorem4 => "theorem4",
            Kind::Corollary1 => "corollary1",
            Kind::GenfunEven => "genfun-even",
            Kind::GenfunOdd => "genfun-odd",
            Kind::ZetaGenfunEven => "zeta-genfun-even",
            Kind::ZetaGenfunOdd => "zeta-genfun-odd",
        }
    }

    /// Parameters the kind reads; anything else is a usage error.
    fn accepts(self) -> &'static [&'static str] {
        match self {
            Kind::H => &["k", "n", "variant"],
            Kind::C | Kind::S => &["k", "m", "n"],
            Kind::ZetaOdd => &["k", "rep"],
            Kind::EulerSum => &["k", "parity", "r"],
            Kind::Theorem1 | Kind::Theorem2 => &["k", "m", "n"],
            Kind::Theorem3 | Kind::Corollary1 => &["k", "n"],
            Kind::Theorem4 => &["k", "n", "parity"],
            Kind::GenfunEven | Kind::GenfunOdd => &["n", "x"],
            Kind::ZetaGenfunEven | Kind::ZetaGenfunOdd => &["x"],
        }
    }

    /// Whether the kind is one of the limit integrals the `limits` command sweeps.
    pub fn is_limit_integral(self) -> bool {
        matches!(
            self,
            Kind::Theorem1 | Kind::Theorem2 | Kind::Theorem3 | Kind::Theorem4 | Kind::Corollary1
        )
    }
}

impl FromStr for Kind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NArg {
    Finite(f64),
    Infinite,
}

impl FromStr for NArg {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" => Ok(NArg::Infinite),
            other => other
                .parse::<f64>()
                .map(NArg::Finite)
                .map_err(|_| CliError::Usage(format!("bad value for n: {s:?}"))),
        }
    }
}

pub fn parse_parity(s: &str) -> Result<Parity, CliError> {
    match s {
        "even" | "2k" => Ok(Parity::Even),
        "odd" | "2k+1" => Ok(Parity::Odd),
        other => Err(CliError::Usage(format!("parity must be even or odd, got {other:?}"))),
    }
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

#[derive(Debug, Clone, Default)]
pub struct Params {
    pub k: Option<u32>,
    pub n: Option<NArg>,
    pub m: Option<f64>,
    pub r: Option<u32>,
    pub x: Option<f64>,
    pub variant: Option<Variant>,
    pub rep: Option<ZetaRepresentation>,
    pub parity: Option<Parity>,
}

fn parse_num<T: FromStr>(name: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("bad value for {name}: {value:?}")))
}

impl Params {
    /// Set a parameter from its textual form, as used by table grids.
    pub fn set(&mut self, name: &str, value: &str) -> Result<(), CliError> {
        match name {
            "k" => self.k = Some(parse_num(name, value)?),
            "n" => self.n = Some(value.parse()?),
            "m" => self.m = Some(parse_num(name, value)?),
            "r" => self.r = Some(parse_num(name, value)?),
            "x" => self.x = Some(parse_num(name, value)?),
            "variant" => self.variant = Some(value.parse().map_err(CliError::usage)?),
            "rep" => self.rep = Some(value.parse().map_err(CliError::usage)?),
            "parity" => self.parity = Some(parse_parity(value)?),
            other => return Err(CliError::Usage(format!("unknown parameter {other:?}"))),
        }
        Ok(())
    }

    fn present(&self) -> Vec<&'static str> {
        let mut names = Vec::new();
        let flags = [
            ("k", self.k.is_some()),
            ("m", self.m.is_some()),
            ("n", self.n.is_some()),
            ("parity", self.parity.is_some()),
            ("r", self.r.is_some()),
            ("rep", self.rep.is_some()),
            ("variant", self.variant.is_some()),
            ("x", self.x.is_some()),
        ];
        for (name, set) in flags {
            if set {
                names.push(name);
            }
        }
        names
    }

    fn check_for(&self, kind: Kind) -> Result<(), CliError> {
        let accepted = kind.accepts();
        for name in self.present() {
            if !accepted.contains(&name) {
                return Err(CliError::Usage(format!("kind {} does not take --{name}", kind.name())));
            }
        }
        Ok(())
    }

    fn k(&self) -> Result<u32, CliError> {
        self.k.ok_or_else(|| CliError::Usage("missing --k".into()))
    }

    fn m(&self) -> Result<f64, CliError> {
        self.m.ok_or_else(|| CliError::Usage("missing --m".into()))
    }

    fn r(&self) -> Result<u32, CliError> {
        self.r.ok_or_else(|| CliError::Usage("missing --r".into()))
    }

    fn x(&self) -> Result<f64, CliError> {
        self.x.ok_or_else(|| CliError::Usage("missing --x".into()))
    }

    fn parity(&self) -> Result<Parity, CliError> {
        self.parity.ok_or_else(|| CliError::Usage("missing --parity".into()))
    }

    fn n_arg(&self) -> Result<NArg, CliError> {
        self.n.ok_or_else(|| CliError::Usage("missing --n".into()))
    }

    fn n_finite(&self) -> Result<f64, CliError> {
        match self.n_arg()? {
            NArg::Finite(n) => Ok(n),
            NArg::Infinite => Err(CliError::Usage("n = inf is only meaningful for c and s".into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Int(u64),
    Num(f64),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Num(v) => write!(f, "{}", crate::output::fmt_num(*v)),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub kind: Kind,
    pub params: BTreeMap<&'static str, ParamValue>,
    pub value: f64,
    pub err_estimate: Option<f64>,
    pub oracle: Option<f64>,
    pub limit: Option<f64>,
}

impl Record {
    pub fn discrepancy(&self) -> Option<f64> {
        self.oracle.map(|o| (self.value - o).abs())
    }
}

fn integer_n(n: f64) -> Option<u64> {
    (n >= 1.0 && n <= DIRECT_LIMIT && n.fract() == 0.0).then_some(n as u64)
}

fn record_params(kind: Kind, p: &Params) -> BTreeMap<&'static str, ParamValue> {
    let mut out = BTreeMap::new();
    for &name in kind.accepts() {
        let value = match name {
            "k" => p.k.map(|v| ParamValue::Int(v.into())),
            "r" => p.r.map(|v| ParamValue::Int(v.into())),
            "m" => p.m.map(ParamValue::Num),
            "x" => p.x.map(ParamValue::Num),
            "n" => p.n.map(|n| match n {
                NArg::Infinite => ParamValue::Text("inf".into()),
                NArg::Finite(v) if v.fract() == 0.0 && v >= 0.0 && v <= 9.0e15 => {
                    ParamValue::Int(v as u64)
                }
                NArg::Finite(v) => ParamValue::Num(v),
            }),
            "variant" => p.variant.map(|v| ParamValue::Text(v.name().into())),
            "rep" => p.rep.map(|r| ParamValue::Text(r.name().into())),
            "parity" => p.parity.map(|q| ParamValue::Text(parity_name(q).into())),
            _ => None,
        };
        if let Some(v) = value {
            out.insert(name, v);
        }
    }
    out
}

/// Evaluate one kind. Defaults (`variant = sin-pi-k`, `rep = tan`) are
/// filled in before the parameters are recorded.
pub fn evaluate(kind: Kind, params: &Params, spec: &QuadSpec) -> Result<Record, CliError> {
    params.check_for(kind)?;
    let mut p = params.clone();
    if kind == Kind::H && p.variant.is_none() {
        p.variant = Some(Variant::SinPiK);
    }
    if kind == Kind::ZetaOdd && p.rep.is_none() {
        p.rep = Some(ZetaRepresentation::Tan);
    }
    let mut rec = Record {
        kind,
        params: record_params(kind, &p),
        value: f64::NAN,
        err_estimate: None,
        oracle: None,
        limit: None,
    };
    match kind {
        Kind::H => {
            let (k, n) = (p.k()?, p.n_finite()?);
            let eval = harmonic::h_integral(k, n, p.variant.unwrap_or(Variant::SinPiK), spec)?;
            rec.value = eval.value;
            rec.err_estimate = Some(eval.quad.err_estimate);
            rec.oracle = integer_n(n).map(|n| {
                if k == 0 {
                    // H_0(n) = 0 here, unlike the term count
                    0.0
                } else {
                    rational_to_f64(&oracle::direct_harmonic(k, n))
                }
            });
        }
        Kind::C | Kind::S => {
            let trig = if kind == Kind::C { Trig::Cos } else { Trig::Sin };
            let (k, m) = (p.k()?, p.m()?);
            match p.n_arg()? {
                NArg::Infinite => {
                    let fs = FourierSpec::limit(m, k, trig);
                    rec.value = fourier::limit_closed_form(&fs, spec)?;
                    rec.oracle = fourier::bernoulli_fourier_value(&fs).ok();
                }
                NArg::Finite(n) => {
                    let n_int = integer_n(n).ok_or_else(|| {
                        CliError::Usage(format!("n must be a positive integer for {}, got {n}", kind.name()))
                    })?;
                    let fs = FourierSpec::partial(m, k, trig, n_int);
                    rec.value = fourier::partial_sum(&fs, spec)?;
                    rec.oracle = Some(oracle::direct_trig_sum(m, k, n_int, trig));
                }
            }
        }
        Kind::ZetaOdd => {
            let k = p.k()?;
            rec.value = zeta::zeta_odd(k, p.rep.unwrap_or(ZetaRepresentation::Tan), spec)?;
            rec.oracle = Some(oracle::zeta_series(f64::from(2 * k + 1))?.value);
        }
        Kind::EulerSum => {
            let (k, r) = (p.k()?, p.r()?);
            match p.parity()? {
                Parity::Even => {
                    rec.value = zeta::euler_sum_even_orders(k, r, spec)?;
                    rec.oracle = Some(if k == 0 {
                        0.0
                    } else {
                        oracle::euler_sum_direct(2 * k, 2 * r + 1, EULER_TERMS)?.value
                    });
                }
                Parity::Odd => {
                    rec.value = zeta::euler_sum_odd_orders(k, r, spec)?;
                    rec.oracle = Some(oracle::euler_sum_direct(2 * k + 1, 2 * r, EULER_TERMS)?.value);
                }
            }
        }
        Kind::Theorem1 => {
            let (k, m, n) = (p.k()?, p.m()?, p.n_finite()?);
            rec.value = fourier::theorem1_integral(k, m, n, spec)?;
            rec.limit = Some(if k == 0 && m == 1.0 { 1.0 } else { m / 2.0 });
        }
        Kind::Theorem2 => {
            let (k, m, n) = (p.k()?, p.m()?, p.n_finite()?);
            rec.value = fourier::theorem2_integral(k, m, n, spec)?;
            rec.limit = Some(m * m.ln() / PI);
        }
        Kind::Theorem3 => {
            rec.value = harmonic::theorem3_integral(p.k()?, p.n_finite()?, spec)?;
            rec.limit = Some(1.0);
        }
        Kind::Theorem4 => {
            let (k, power) = (p.k()?, p.parity()?);
            rec.value = harmonic::theorem4_integral(k, p.n_finite()?, power, spec)?;
            rec.limit = Some(if k == 0 && power == Parity::Even { -1.0 } else { -0.5 });
        }
        Kind::Corollary1 => {
            rec.value = fourier::corollary1_integral(p.k()?, p.n_finite()?, spec)?;
            rec.limit = Some(0.0);
        }
        Kind::GenfunEven | Kind::GenfunOdd => {
            let (n, x) = (p.n_finite()?, p.x()?);
            // sum_k H_{2k}(n) x^{2k} = sum_{j<=n} x^2 / (j^2 - x^2), and the
            // odd analogue with x j in the numerator
            let even = kind == Kind::GenfunEven;
            rec.value = if even {
                harmonic::genfun_even(n, x, spec)?
            } else {
                harmonic::genfun_odd(n, x, spec)?
            };
            rec.oracle = integer_n(n).map(|n| {
                (1..=n)
                    .map(|j| {
                        let jf = j as f64;
                        let top = if even { x * x } else { x * jf };
                        top / (jf * jf - x * x)
                    })
                    .collect::<harmonia::CompensatedSum>()
                    .value()
            });
        }
        Kind::ZetaGenfunEven => {
            let x = p.x()?;
            rec.value = zeta::zeta_genfun_even(x)?;
            rec.oracle = Some(zeta_genfun_even_direct(x));
        }
        Kind::ZetaGenfunOdd => {
            let x = p.x()?;
            rec.value = zeta::zeta_genfun_odd(x, spec)?;
            if x.abs() < 1.0 && x != 0.0 {
                let a = oracle::digamma(1.0 + x)?.value;
                let b = oracle::digamma(1.0 - x)?.value;
                rec.oracle = Some(-x * oracle::EULER_GAMMA - 0.5 * x * (a + b));
            } else if x == 0.0 {
                rec.oracle = Some(0.0);
            }
        }
    }
    Ok(rec)
}

/// `sum_{j>=1} x^2 / (j^2 - x^2)` with the tail replaced by its leading term.
fn zeta_genfun_even_direct(x: f64) -> f64 {
    let terms = 100_000u64;
    let mut acc: harmonia::CompensatedSum = (1..=terms)
        .rev()
        .map(|j| {
            let jf = j as f64;
            x * x / (jf * jf - x * x)
        })
        .collect();
    acc.add(x * x / (terms as f64 + 0.5));
    acc.value()
}
