mod config;
mod expr;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use fcl_core::density::{density_grid, DEFAULT_EPS};
use fcl_core::distlib::{
    catalog, deconv_mpmp, deconv_wmp, dirac, dirac_monotone, from_levy, fuss_chi, fuss_chi_check, fuss_f, fuss_moment,
    monotone_family, mp, wigner, CatalogFamily, DiracTarget, LevyData, MonotoneKind,
};
use fcl_core::euler::{chi_t_factored, ck_candidates_digits, euler_table, nk_classf};
use fcl_core::exactalg::{decimal, render_rat, AlgebraicReal, Poly, Rat};
use fcl_core::oeis::{match_series, Fetcher, FixtureStore, Source};
use fcl_core::posdef::{fid_check, is_moment_positive_up_to, HankelStatus, HankelVerdict};
use fcl_core::spectra::{
    boundary_flags, cg_boundary, cg_region, char_pencil, char_poly, char_poly_t, critical_ts, deg3_boundary, deg3_rr0,
    is_rr, is_rr0, lb_curve, n_set, r3_poly_rr0, r4_c0_classify, CriticalKind, Rr0Verdict,
};
use fcl_core::{ClassF, FclError, RatFun};

use config::{parse_bool, Config, Overrides};
use expr::{classf_of, parse_expr};

#[derive(Parser)]
#[command(name = "fcl", version, about = "Exact calculus on rational F-functions F(w) = w P(w) / Q(w)")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV where the output is a table.
    #[arg(long, global = true)]
    csv: bool,
    /// Series length, Hankel order or sample count, depending on the command.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Parameter or x range as lo:hi.
    #[arg(long, global = true, allow_hyphen_values = true)]
    range: Option<String>,
    /// Decimal digits for algebraic certificates.
    #[arg(long, global = true)]
    precision: Option<usize>,
    /// Extra fixture directory.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    /// on/off.
    #[arg(long, global = true, value_parser = parse_onoff)]
    network: Option<bool>,
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// key=value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Render rationals as decimals with this many digits.
    #[arg(long, global = true)]
    approx: Option<usize>,
    /// Read the expression as R(w) and build F from it.
    #[arg(long, global = true)]
    from_r: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_onoff(s: &str) -> Result<bool, String> {
    parse_bool(s).ok_or_else(|| format!("expected on or off, got {s:?}"))
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an expression and print its normal form.
    Expr {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Moments s_0..s_N (N = --order, default 10).
    Moments {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Free cumulants r_1..r_N.
    Cumulants {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Characteristic polynomial, optionally of the free power F^t.
    Charpoly {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// chi_t = A + t B of the free-power flow.
    Chart {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Real-rootedness of chi.
    Rr0 {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Whether N(F) is real.
    Rr {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// The set N(F) of z with a multiple root of w P - z Q.
    Nset {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Singularity and degree-drop flags.
    Singular {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Hankel minors of the moments up to --order (default 8).
    Hankel {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Hankel minors of the cumulants r_2, r_3, ...
    Fid {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Free additive convolution.
    Convolve {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Free power F^t.
    Power {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// F2(F1(w)), the monotone convolution mu1 |> mu2.
    Compose {
        #[arg(allow_hyphen_values = true)]
        f2: String,
        #[arg(allow_hyphen_values = true)]
        f1: String,
    },
    /// Push-forward under x -> x + u
    Translate {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        u: String,
    },
    /// Push-forward under x -> c x
    Dilate {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Critical t of the free-power flow on --range (default 0:10).
    Criticals {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Density table on --range (default -3:3).
    Density {
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Grid points.
        #[arg(long, default_value_t = 201)]
        n: usize,
        /// Decreasing eps schedule.
        #[arg(long, value_delimiter = ',')]
        eps: Vec<f64>,
    },
    /// Eulerian rows and the class element N_k.
    Euler {
        k: usize,
        /// Locate the critical C_k on (0, hi) with hi from --range.
        #[arg(long)]
        ck: bool,
    },
    /// R = (1 + w^2)^r - 1.
    Fuss { r: u32 },
    /// Named constructors: wigner t | mp v t | dirac u | levy u c0 [a:c ...] | catalog.
    /// Put atoms with a negative location after `--`.
    Dist {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// wmp u x | mpmp u v x.
    Deconv {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// w-mp t v s | mp-w v s t | mp-mp u s v t | w-w s t | dirac-w u t | dirac-mp u v t.
    Monotone {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// Match the moments (order from --order, default 12) against fixtures.
    OeisMatch {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = 6)]
        min_overlap: usize,
    },
    /// Look up a fixture: bundled, then cache, then network.
    OeisFetch { a_number: String },
    /// Region data.
    Region {
        #[command(subcommand)]
        which: RegionCmd,
    },
}

#[derive(Subcommand)]
enum RegionCmd {
    /// Boundary of D1 u D2 in the (kappa3, kappa4) plane.
    Cg {
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Membership test at k3:k4.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// The singular curve L(b) of w / (1 + b w^2 + c w^3 + d w^4).
    Lb {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 41)]
        n: usize,
    },
    /// Discriminant curve of w (1 + a w + b w^2 + c w^3) for fixed c, over a in --range.
    Deg3 {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, default_value_t = 101)]
        n: usize,
        /// Membership test at a:b.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Classify w / (1 + b w^2 + d w^4).
    R4 {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// rr0 of R = u w + b w^2 + c w^3.
    R3 {
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
}

enum CliError {
    Usage(String),
    Lib(FclError),
}

impl From<FclError> for CliError {
    fn from(e: FclError) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a command produced.
struct Report {
    json: Value,
    text: String,
    csv: Option<String>,
    unknown: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Report {
        Report { json, text, csv: None, unknown: false }
    }
}

struct Ctx {
    cli_order: Option<usize>,
    range: Option<String>,
    approx: Option<usize>,
    from_r: bool,
    config: Config,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Integer, `p/q` or decimal, read exactly.
fn parse_num(s: &str) -> CliResult<Rat> {
    let t = s.trim();
    if let Some(r) = fcl_core::exactalg::parse_rat(t) {
        return Ok(r);
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t),
    };
    if let Some((i, f)) = body.split_once('.') {
        if !i.is_empty() || !f.is_empty() {
            let digits = format!("{i}{f}");
            if digits.chars().all(|c| c.is_ascii_digit()) {
                let n: num::BigInt = digits.parse().map_err(|_| usage(format!("bad number {s:?}")))?;
                let d = num::BigInt::from(10).pow(f.len() as u32);
                let r = Rat::new(n, d);
                return Ok(if neg { -r } else { r });
            }
        }
    }
    Err(usage(format!("bad number {s:?}")))
}

fn parse_pair(s: &str, what: &str) -> CliResult<(Rat, Rat)> {
    let (a, b) = s.split_once(':').ok_or_else(|| usage(format!("{what} must be lo:hi, got {s:?}")))?;
    Ok((parse_num(a)?, parse_num(b)?))
}

impl Ctx {
    fn order(&self, default: usize) -> usize {
        self.cli_order.unwrap_or(default)
    }

    fn range(&self, lo: i64, hi: i64) -> CliResult<(Rat, Rat)> {
        match &self.range {
            Some(s) => {
                let (a, b) = parse_pair(s, "--range")?;
                if a >= b {
                    return Err(usage("--range needs lo < hi"));
                }
                Ok((a, b))
            }
            None => Ok((Rat::from_integer(lo.into()), Rat::from_integer(hi.into()))),
        }
    }

    fn ratfun(&self, s: &str) -> CliResult<RatFun> {
        let e = parse_expr(s).map_err(|e| usage(e.to_string()))?;
        Ok(e.eval()?)
    }

    fn f(&self, s: &str) -> CliResult<ClassF> {
        let r = self.ratfun(s)?;
        if self.from_r {
            Ok(ClassF::from_r(&r)?)
        } else {
            Ok(classf_of(&r)?)
        }
    }

    fn f_at(&self, s: &str, t: &Option<String>) -> CliResult<ClassF> {
        let f = self.f(s)?;
        Ok(match t {
            Some(t) => f.free_power(&parse_num(t)?),
            None => f,
        })
    }

    fn rat(&self, r: &Rat) -> Value {
        Value::String(self.rat_str(r))
    }

    fn rat_str(&self, r: &Rat) -> String {
        match self.approx {
            Some(d) => decimal(r, d),
            None => render_rat(r),
        }
    }

    fn rats(&self, v: &[Rat]) -> Value {
        Value::Array(v.iter().map(|r| self.rat(r)).collect())
    }

    fn poly(&self, p: &Poly) -> Value {
        json!({ "expr": p.to_string(), "coeffs": self.rats(p.coeffs()) })
    }

    fn alg(&self, a: &AlgebraicReal) -> Value {
        let mut v = json!({
            "poly": { "expr": a.poly().display_var("x"), "coeffs": self.rats(a.poly().coeffs()) },
            "lo": render_rat(a.lo()),
            "hi": render_rat(a.hi()),
        });
        if let Some(r) = a.as_rational() {
            v["exact"] = Value::String(render_rat(r));
        }
        if let Some(d) = self.approx {
            v["approx"] = Value::String(a.approx(d));
        }
        v
    }

    fn alg_str(&self, a: &AlgebraicReal) -> String {
        match a.as_rational() {
            Some(r) => render_rat(r),
            None => format!("root of {} in [{}, {}] ~ {}", a.poly().display_var("x"), render_rat(a.lo()), render_rat(a.hi()), a.approx(12)),
        }
    }

    fn classf(&self, f: &ClassF) -> Value {
        json!({ "f": f.to_expr(), "p": self.poly(f.p()), "q": self.poly(f.q()) })
    }

    fn store(&self) -> CliResult<FixtureStore> {
        let mut store = FixtureStore::bundled();
        if let Some(dir) = &self.config.fixtures {
            store.load_dir(dir)?;
        }
        Ok(store)
    }
}

fn join(v: &[Rat]) -> String {
    v.iter().map(render_rat).collect::<Vec<_>>().join(", ")
}

fn element_report(ctx: &Ctx, f: &ClassF) -> Report {
    Report::new(ctx.classf(f), format!("F = {}", f.to_expr()))
}

fn hankel_report(ctx: &Ctx, v: &HankelVerdict, label: &str) -> Report {
    let status = match &v.status {
        HankelStatus::PositiveSoFar(k) => json!({ "status": "positive_so_far", "order": k }),
        HankelStatus::NegativeAt(k, d) => json!({ "status": "negative", "order": k, "minor": ctx.rat(d) }),
    };
    let mut json = status;
    json["minors"] = ctx.rats(&v.minors);
    let mut text = format!("{label}: {}\n", v.status);
    for (k, m) in v.minors.iter().enumerate() {
        let _ = writeln!(text, "  order {k}: {}", render_rat(m));
    }
    Report::new(json, text.trim_end().to_string())
}

fn verdict_name(v: Rr0Verdict) -> &'static str {
    match v {
        Rr0Verdict::Yes => "Yes",
        Rr0Verdict::No => "No",
        Rr0Verdict::Unknown => "Unknown",
    }
}

fn kind_name(k: CriticalKind) -> &'static str {
    match k {
        CriticalKind::MultipleRoot => "MultipleRoot",
        CriticalKind::DegreeDrop => "DegreeDrop",
        CriticalKind::Both => "Both",
    }
}

fn params(p: &[String], n: usize, what: &str) -> CliResult<Vec<Rat>> {
    if p.len() != n {
        return Err(usage(format!("{what} takes {n} parameter(s), got {}", p.len())));
    }
    p.iter().map(|s| parse_num(s)).collect()
}

fn run(ctx: &Ctx, cmd: &Cmd) -> CliResult<Report> {
    Ok(match cmd {
        Cmd::Expr { f } => {
            let e = parse_expr(f).map_err(|e| usage(e.to_string()))?;
            let r = e.eval()?;
            let mut json = json!({ "ast": e.to_string(), "num": ctx.poly(r.num()), "den": ctx.poly(r.den()) });
            let mut text = format!("{e}\n= ({}) / ({})", r.num(), r.den());
            if let Ok(fc) = classf_of(&r) {
                json["class_f"] = Value::String(fc.to_expr());
                let _ = write!(text, "\nF = {}", fc.to_expr());
            }
            Report::new(json, text)
        }
        Cmd::Moments { f } => {
            let s = ctx.f(f)?.moments(ctx.order(10))?;
            let mut r = Report::new(json!({ "s": ctx.rats(&s.terms) }), format!("s = [{}]", join(&s.terms)));
            r.csv = Some(series_csv("s", &s.terms));
            r
        }
        Cmd::Cumulants { f } => {
            let c = ctx.f(f)?.cumulants(ctx.order(10));
            let t = &c.terms[1..];
            let mut r = Report::new(json!({ "r": ctx.rats(t) }), format!("r_1.. = [{}]", join(t)));
            r.csv = Some(series_csv("r", &c.terms).replacen("0,0\n", "", 1));
            r
        }
        Cmd::Charpoly { f, t } => {
            let f = ctx.f_at(f, t)?;
            let chi = char_poly(&f);
            let rr = is_rr0(&f);
            Report::new(
                json!({ "chi": ctx.poly(&chi), "degree": chi.deg(), "real_rooted": rr }),
                format!("chi = {chi}\nreal-rooted: {rr}"),
            )
        }
        Cmd::Chart { f } => {
            let f = ctx.f(f)?;
            let (a, b) = char_pencil(&f);
            let chi_t = char_poly_t(&f);
            Report::new(
                json!({ "chi_t": chi_t.display("w", "t"), "a": ctx.poly(&a), "b": ctx.poly(&b) }),
                format!("chi_t = {}\nA = {a}\nB = {b}", chi_t.display("w", "t")),
            )
        }
        Cmd::Rr0 { f, t } => {
            let v = is_rr0(&ctx.f_at(f, t)?);
            Report::new(json!({ "rr0": v }), format!("rr0: {v}"))
        }
        Cmd::Rr { f, t } => {
            let v = is_rr(&ctx.f_at(f, t)?)?;
            Report::new(json!({ "rr": v }), format!("rr: {v}"))
        }
        Cmd::Nset { f } => {
            let n = n_set(&ctx.f(f)?)?;
            let members: Vec<Value> = n.real_members.iter().map(|a| ctx.alg(a)).collect();
            let names: Vec<String> = n.real_members.iter().map(|a| ctx.alg_str(a)).collect();
            Report::new(
                json!({
                    "z_poly": { "expr": n.z_poly.display_var("z"), "coeffs": ctx.rats(n.z_poly.coeffs()) },
                    "real_members": members,
                    "nonreal_pair_count": n.nonreal_pair_count,
                    "all_real": n.all_real(),
                }),
                format!(
                    "eliminant: {}\nreal members: {{{}}}\nnonreal pairs: {}",
                    n.z_poly.display_var("z"),
                    names.join(", "),
                    n.nonreal_pair_count
                ),
            )
        }
        Cmd::Singular { f } => {
            let b = boundary_flags(&ctx.f(f)?);
            Report::new(
                json!({
                    "singular": b.singular,
                    "degree": b.degree,
                    "generic_degree": b.generic_degree,
                    "degree_drop": b.degree_drop,
                }),
                format!(
                    "singular: {}\ndegree: {} (generic {})\ndegree drop: {}",
                    b.singular, b.degree, b.generic_degree, b.degree_drop
                ),
            )
        }
        Cmd::Hankel { f } => hankel_report(ctx, &is_moment_positive_up_to(&ctx.f(f)?, ctx.order(8))?, "moments"),
        Cmd::Fid { f } => hankel_report(ctx, &fid_check(&ctx.f(f)?, ctx.order(8))?, "cumulants"),
        Cmd::Convolve { f, g } => element_report(ctx, &ctx.f(f)?.boxplus(&ctx.f(g)?)),
        Cmd::Power { f, t } => element_report(ctx, &ctx.f(f)?.free_power(&parse_num(t)?)),
        Cmd::Compose { f2, f1 } => element_report(ctx, &ClassF::compose(&ctx.f(f2)?, &ctx.f(f1)?)),
        Cmd::Translate { f, u } => element_report(ctx, &ctx.f(f)?.translate(&parse_num(u)?)),
        Cmd::Dilate { f, c } => element_report(ctx, &ctx.f(f)?.dilate(&parse_num(c)?)?),
        Cmd::Criticals { f } => {
            let f = ctx.f(f)?;
            let (lo, hi) = ctx.range(0, 10)?;
            let rep = critical_ts(&f, &lo, &hi)?;
            criticals_report(ctx, &rep)
        }
        Cmd::Density { f, n, eps } => {
            let f = ctx.f(f)?;
            let (lo, hi) = ctx.range(-3, 3)?;
            let eps = if eps.is_empty() { DEFAULT_EPS.to_vec() } else { eps.clone() };
            let t = density_grid(&f, fcl_core::exactalg::rat_to_f64(&lo), fcl_core::exactalg::rat_to_f64(&hi), *n, &eps)?;
            let csv = t.to_csv();
            let mut r = Report::new(
                json!({
                    "xs": t.xs,
                    "fs": t.fs,
                    "eps_used": t.eps_used,
                    "mass_estimate": t.mass_estimate,
                    "clamped": t.clamped,
                }),
                format!("{}# mass {} (eps {}, clamped {})", csv, t.mass_estimate, t.eps_used, t.clamped),
            );
            r.csv = Some(csv);
            r
        }
        Cmd::Euler { k, ck } => euler_report(ctx, *k, *ck)?,
        Cmd::Fuss { r } => {
            let f = fuss_f(*r)?;
            let n = ctx.order(10);
            let even: Vec<Rat> = (0..=n).map(|m| fuss_moment(*r, 2 * m)).collect::<Result<_, _>>()?;
            let s = f.moments(2 * n)?;
            let matches = (0..=n).all(|m| s.terms[2 * m] == even[m]);
            let chi = fuss_chi(*r);
            let check = fuss_chi_check(*r)?;
            Report::new(
                json!({
                    "f": f.to_expr(),
                    "chi": ctx.poly(&chi),
                    "chi_check": check,
                    "even_moments": ctx.rats(&even),
                    "moments_match": matches,
                }),
                format!(
                    "F = {}\nchi = {chi} (check {check})\neven moments = [{}] (match {matches})",
                    f.to_expr(),
                    join(&even)
                ),
            )
        }
        Cmd::Dist { name, params: p } => dist_report(ctx, name, p)?,
        Cmd::Deconv { kind, params: p } => {
            let rec = match kind.as_str() {
                "wmp" | "w-mp" => {
                    let v = params(p, 2, "deconv wmp")?;
                    deconv_wmp(&v[0], &v[1])?
                }
                "mpmp" | "mp-mp" => {
                    let v = params(p, 3, "deconv mpmp")?;
                    deconv_mpmp(&v[0], &v[1], &v[2])?
                }
                _ => return Err(usage(format!("unknown deconvolution {kind:?}; use wmp or mpmp"))),
            };
            Report::new(
                json!({
                    "f": rec.f.to_expr(),
                    "r": rec.r.to_string(),
                    "chi": ctx.poly(&rec.chi),
                    "chi_expected": ctx.poly(&rec.chi_expected),
                    "chi_check": rec.chi_factored_check,
                }),
                format!(
                    "F = {}\nR = {}\nchi = {}\nexpected = {}\ncheck: {}",
                    rec.f.to_expr(),
                    rec.r,
                    rec.chi,
                    rec.chi_expected,
                    rec.chi_factored_check
                ),
            )
        }
        Cmd::Monotone { kind, params: p } => monotone_report(ctx, kind, p)?,
        Cmd::OeisMatch { f, min_overlap } => {
            let s = ctx.f(f)?.moments(ctx.order(12))?;
            let m = match_series(&ctx.store()?, &s, *min_overlap)?;
            let rows: Vec<Value> = m
                .iter()
                .map(|x| json!({ "a_number": x.a_number, "transform": x.transform, "skip": x.skip, "overlap": x.overlap }))
                .collect();
            let text = if m.is_empty() {
                "no match".to_string()
            } else {
                m.iter()
                    .map(|x| format!("{} {} (skip {}, {} terms)", x.a_number, x.transform, x.skip, x.overlap))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Report::new(Value::Array(rows), text)
        }
        Cmd::OeisFetch { a_number } => {
            let fetcher = Fetcher::new(ctx.config.cache_dir.clone(), ctx.config.network);
            let fx = fetcher.fetch(&ctx.store()?, a_number)?;
            let source = match fx.source {
                Source::Bundled => "bundled".to_string(),
                Source::Fetched(ts) => format!("fetched at {ts}"),
            };
            let terms: Vec<String> = fx.terms.iter().map(|t| t.to_string()).collect();
            Report::new(
                serde_json::from_str(&fx.to_json()).expect("fixture json"),
                format!("{} (offset {}, {source}): {}", fx.a_number, fx.offset, terms.join(", ")),
            )
        }
        Cmd::Region { which } => region_report(ctx, which)?,
    })
}

fn series_csv(name: &str, v: &[Rat]) -> String {
    let mut s = format!("n,{name}\n");
    for (i, x) in v.iter().enumerate() {
        let _ = writeln!(s, "{i},{}", render_rat(x));
    }
    s
}

fn criticals_report(ctx: &Ctx, rep: &fcl_core::spectra::CriticalReport) -> Report {
    let crit: Vec<Value> = rep
        .criticals
        .iter()
        .zip(&rep.kinds)
        .map(|(c, k)| {
            let mut v = ctx.alg(c);
            v["kind"] = Value::String(kind_name(*k).into());
            v
        })
        .collect();
    let mut ends: Vec<String> = vec![render_rat(&rep.t_lo)];
    ends.extend(rep.criticals.iter().map(|c| match c.as_rational() {
        Some(r) => render_rat(r),
        None => format!("~{}", c.approx(8)),
    }));
    ends.push(render_rat(&rep.t_hi));
    let mut intervals = Vec::new();
    let mut text = String::new();
    for (c, k) in rep.criticals.iter().zip(&rep.kinds) {
        let _ = writeln!(text, "critical t = {} ({})", ctx.alg_str(c), kind_name(*k));
    }
    for (i, v) in rep.rr0_verdicts.iter().enumerate() {
        intervals.push(json!({
            "lo": ends[i],
            "hi": ends[i + 1],
            "sample": ctx.rat(&rep.samples[i]),
            "verdict": verdict_name(*v),
        }));
        let _ = writeln!(text, "{}/({},{})", verdict_name(*v), ends[i], ends[i + 1]);
    }
    let mut r = Report::new(json!({ "criticals": crit, "intervals": intervals }), text.trim_end().into());
    r.unknown = rep.rr0_verdicts.contains(&Rr0Verdict::Unknown);
    r
}

fn euler_report(ctx: &Ctx, k: usize, ck: bool) -> CliResult<Report> {
    let table = euler_table(k)?;
    let mut json = json!({
        "k": k,
        "e": ctx.rats(&table.e_row),
        "e_tilde": ctx.rats(&table.e_tilde_row),
    });
    let mut text = format!("E_{k} = [{}]\nE~_{k} = [{}]", join(&table.e_row), join(&table.e_tilde_row));
    let mut unknown = false;
    if k >= 1 {
        let f = nk_classf(k)?;
        let fac = chi_t_factored(k)?;
        json["nk"] = Value::String(f.to_expr());
        json["chi_t_factored"] = Value::Bool(fac.rhs_factor_check);
        let _ = write!(text, "\nN_{k} = {}\nchi_t factorization: {}", f.to_expr(), fac.rhs_factor_check);
    }
    if ck {
        let (_, hi) = ctx.range(0, 10)?;
        let rep = ck_candidates_digits(k, &hi, ctx.config.precision)?;
        let _ = write!(text, "\n{}", criticals_report(ctx, &rep.report).text);
        match (&rep.candidate, rep.boundary_verdict) {
            (Some(c), Some(v)) => {
                json["c_k"] = ctx.alg(c);
                json["boundary_verdict"] = Value::String(verdict_name(v).into());
                unknown = v == Rr0Verdict::Unknown;
                let _ = write!(text, "\nC_{k} = {} (rr0 at C_{k}: {})", ctx.alg_str(c), verdict_name(v));
            }
            _ => {
                json["c_k"] = Value::Null;
                let _ = write!(text, "\nno candidate below {}", render_rat(&hi));
            }
        }
    }
    Ok(Report { json, text, csv: None, unknown })
}

fn dist_report(ctx: &Ctx, name: &str, p: &[String]) -> CliResult<Report> {
    let f = match name {
        "wigner" => wigner(&params(p, 1, "wigner")?[0])?,
        "mp" => {
            let v = params(p, 2, "mp")?;
            mp(&v[0], &v[1])?
        }
        "dirac" => dirac(&params(p, 1, "dirac")?[0]),
        "levy" => {
            if p.len() < 2 {
                return Err(usage("levy takes u c0 [a:c ...]"));
            }
            let atoms = p[2..].iter().map(|s| parse_pair(s, "atom")).collect::<CliResult<Vec<_>>>()?;
            from_levy(&LevyData::new(parse_num(&p[0])?, parse_num(&p[1])?, atoms)?)
        }
        "catalog" => {
            let rows: Vec<Value> = catalog()
                .iter()
                .map(|e| {
                    let fam = match &e.family {
                        CatalogFamily::Mp { s, u, v } => json!({ "mp": [render_rat(s), render_rat(u), render_rat(v)] }),
                        CatalogFamily::Wigner { s, u } => json!({ "wigner": [render_rat(s), render_rat(u)] }),
                    };
                    json!({ "a_number": e.a_number, "family": fam, "skip": e.skip, "aerated": e.aerated, "f": e.classf().to_expr() })
                })
                .collect();
            let text = catalog().iter().map(|e| format!("{} {}", e.a_number, e.classf().to_expr())).collect::<Vec<_>>().join("\n");
            return Ok(Report::new(Value::Array(rows), text));
        }
        _ => return Err(usage(format!("unknown distribution {name:?}"))),
    };
    Ok(element_report(ctx, &f))
}

fn monotone_report(ctx: &Ctx, kind: &str, p: &[String]) -> CliResult<Report> {
    let k = kind.to_ascii_lowercase();
    if k == "dirac-w" || k == "dirac-mp" {
        let (target, n) = if k == "dirac-w" { (DiracTarget::Wigner, 2) } else { (DiracTarget::Mp, 3) };
        let v = params(p, n, kind)?;
        let rec = dirac_monotone(&v[0], target, &v[1..])?;
        return Ok(Report::new(
            json!({
                "f": rec.f.to_expr(),
                "decomposition": rec.decomposition.to_string(),
                "identity_check": rec.identity_check,
            }),
            format!("F = {}\nR = {}\nidentity: {}", rec.f.to_expr(), rec.decomposition, rec.identity_check),
        ));
    }
    let mk = MonotoneKind::parse(kind).ok_or_else(|| usage(format!("unknown monotone kind {kind:?}")))?;
    let v = params(p, mk.arity(), kind)?;
    let rec = monotone_family(mk, &v)?;
    let (dec, dec_text) = match &rec.decomposition {
        Ok(d) => (Value::String(d.to_string()), d.to_string()),
        Err(e) => (json!({ "error": e.to_string() }), format!("not real: {e}")),
    };
    Ok(Report::new(
        json!({
            "f": rec.f.to_expr(),
            "chi": ctx.poly(&rec.chi),
            "chi_expected": ctx.poly(&rec.chi_expected),
            "chi_check": rec.chi_check,
            "decomposition": dec,
            "identity_check": rec.identity_check,
        }),
        format!(
            "F = {}\nchi = {} (check {})\nR = {dec_text}\nidentity: {}",
            rec.f.to_expr(),
            rec.chi,
            rec.chi_check,
            rec.identity_check
        ),
    ))
}

fn points_csv(header: &str, pts: &[(f64, f64)]) -> String {
    let mut s = format!("{header}\n");
    for (x, y) in pts {
        let _ = writeln!(s, "{x},{y}");
    }
    s
}

fn region_report(ctx: &Ctx, which: &RegionCmd) -> CliResult<Report> {
    Ok(match which {
        RegionCmd::Cg { n, at } => {
            if let Some(at) = at {
                let (k3, k4) = parse_pair(at, "--at")?;
                let inside = cg_region(&k3, &k4);
                return Ok(Report::new(json!({ "inside": inside }), format!("inside: {inside}")));
            }
            let curves = cg_boundary(*n);
            let names = ["d1_left", "d1_right", "d2_left", "d2_right"];
            let mut csv = String::from("curve,kappa3,kappa4\n");
            for (name, c) in names.iter().zip(&curves) {
                for (x, y) in c {
                    let _ = writeln!(csv, "{name},{x},{y}");
                }
            }
            let json: serde_json::Map<String, Value> =
                names.iter().zip(&curves).map(|(n, c)| (n.to_string(), json!(c))).collect();
            let mut r = Report::new(Value::Object(json), csv.trim_end().to_string());
            r.csv = Some(csv);
            r
        }
        RegionCmd::Lb { b, n } => {
            let pts = lb_curve(&parse_num(b)?, *n)?;
            let mut csv = String::from("c,d\n");
            for (c, d) in &pts {
                let _ = writeln!(csv, "{},{}", ctx.rat_str(c), ctx.rat_str(d));
            }
            let json: Vec<Value> = pts.iter().map(|(c, d)| json!([ctx.rat(c), ctx.rat(d)])).collect();
            let mut r = Report::new(Value::Array(json), csv.trim_end().to_string());
            r.csv = Some(csv);
            r
        }
        RegionCmd::Deg3 { c, n, at } => {
            let c = parse_num(c)?;
            if let Some(at) = at {
                let (a, b) = parse_pair(at, "--at")?;
                let v = deg3_rr0(&a, &b, &c);
                return Ok(Report::new(json!({ "rr0": v }), format!("rr0: {v}")));
            }
            let (lo, hi) = ctx.range(-3, 3)?;
            let pts = deg3_boundary(&c, &lo, &hi, *n);
            let csv = points_csv("a,b", &pts);
            let mut r = Report::new(json!(pts), csv.trim_end().to_string());
            r.csv = Some(csv);
            r
        }
        RegionCmd::R4 { b, d } => {
            let c = r4_c0_classify(&parse_num(b)?, &parse_num(d)?)?;
            Report::new(
                json!({ "in_dist": c.in_dist, "in_rr0": c.in_rr0, "on_rr_balloon_top": c.on_rr_balloon_top }),
                format!("in dist: {}\nin rr0: {}\non balloon top: {}", c.in_dist, c.in_rr0, c.on_rr_balloon_top),
            )
        }
        RegionCmd::R3 { b, c } => {
            let v = r3_poly_rr0(&parse_num(b)?, &parse_num(c)?)?;
            Report::new(json!({ "rr0": v }), format!("rr0: {v}"))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let overrides = Overrides {
        config: cli.config.clone(),
        cache_dir: cli.cache_dir.clone(),
        network: cli.network,
        precision: cli.precision,
        fixtures: cli.fixtures.clone(),
    };
    let config = match config::resolve(&overrides, &|k| std::env::var(k).ok()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx { cli_order: cli.order, range: cli.range.clone(), approx: cli.approx, from_r: cli.from_r, config };
    match run(&ctx, &cli.cmd) {
        Ok(r) => {
            if cli.json {
                println!("{}", r.json);
            } else if cli.csv {
                match &r.csv {
                    Some(csv) => print!("{csv}"),
                    None => {
                        eprintln!("error: this command has no CSV form");
                        return ExitCode::from(2);
                    }
                }
            } else {
                println!("{}", r.text);
            }
            ExitCode::from(if r.unknown { 3 } else { 0 })
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e @ FclError::Parse { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
