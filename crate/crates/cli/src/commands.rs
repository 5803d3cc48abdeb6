use std::fmt::{self, Write as _};
use std::path::Path;

use ginlex::curve::examples::projected_rnc;
use ginlex::groebner::oracle_hilbert_function;
use ginlex::ideal_file::{order_name, parse_field_choice, parse_ideal_file, IdealFile};
use ginlex::monomial::default_names;
use ginlex::partial_elim::generic_from_basis;
use ginlex::{
    buchberger, curve_report, gin, Error, Field, FieldChoice, GinOptions, GinResult, Ideal, MonomialIdeal,
    PartialElimLadder, ReportOptions, TermOrder,
};
use serde::Serialize;

use crate::{Cli, Command, GinArgs, OrderArg};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Lib { path: Option<String>, error: Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Lib { error, .. } => match error {
                Error::Parse { .. }
                | Error::UnknownVariable(_)
                | Error::UnsupportedField(_)
                | Error::Invalid(_)
                | Error::PointNotOnScheme
                | Error::CenterOnVariety
                | Error::LandedOnCurve => 2,
                Error::NotHomogeneous { .. } => 3,
                Error::GinInstability { .. } => 4,
                Error::NotACurve { .. } => 5,
                Error::ResourceCap(_) => 6,
                _ => 1,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(msg) => write!(f, "{}", msg),
            CliError::Lib {
                path: Some(path),
                error: Error::Parse { line, column, message },
            } => write!(f, "{}:{}:{}: {}", path, line, column, message),
            CliError::Lib {
                path: Some(path),
                error,
            } => write!(f, "{}: {}", path, error),
            CliError::Lib { path: None, error } => write!(f, "{}", error),
        }
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Lib { path: None, error }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Input {
    file: IdealFile,
    field: FieldChoice,
}

fn load(path: &Path, field: Option<FieldChoice>) -> CliResult<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
    let file = parse_ideal_file(&text).map_err(|error| CliError::Lib {
        path: Some(path.display().to_string()),
        error,
    })?;
    let field = field.unwrap_or(file.field);
    Ok(Input { file, field })
}

fn order_of(arg: Option<OrderArg>, default: TermOrder) -> TermOrder {
    match arg {
        Some(OrderArg::Glex) => TermOrder::GradedLex,
        Some(OrderArg::Grevlex) => TermOrder::GradedRevLex,
        None => default,
    }
}

fn gin_options(args: &GinArgs) -> GinOptions {
    let defaults = GinOptions::default();
    let first = args.seed.unwrap_or(defaults.seeds.0);
    let second = args.seed2.unwrap_or(if args.seed.is_some() {
        first.wrapping_add(1)
    } else {
        defaults.seeds.1
    });
    let mut caps = defaults.caps;
    if let Some(d) = args.max_degree {
        caps.max_degree = d;
    }
    GinOptions {
        seeds: (first, second),
        bound: args.bound,
        caps,
        ..defaults
    }
}

fn parse_integers(text: &str, what: &str) -> CliResult<Vec<i64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::Invalid(format!("{} `{}` must be comma-separated integers", what, text)).into())
        })
        .collect()
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let field = cli.field.as_deref().map(parse_field_choice).transpose()?;
    match &cli.command {
        Command::Gb { file, order } => {
            let input = load(file, field)?;
            with_input(&input, |d| d.gb(order_of(*order, input.file.order)))
        }
        Command::Gin { file, gin, order } => {
            let input = load(file, field)?;
            let order = order_of(*order, input.file.order);
            with_input(&input, |d| d.gin(order, &gin_options(gin)))
        }
        Command::Pei {
            file,
            level,
            generic,
            no_change,
            gin,
        } => {
            let input = load(file, field)?;
            with_input(&input, |d| d.pei(*level, *generic, *no_change, &gin_options(gin)))
        }
        Command::Hilbert { file, upto, oracle } => {
            let input = load(file, field)?;
            with_input(&input, |d| d.hilbert(*upto, *oracle))
        }
        Command::Report {
            file,
            tangent_points,
            json,
            gin,
        } => {
            let input = load(file, field)?;
            let points = tangent_points
                .iter()
                .map(|p| parse_integers(p, "tangent point"))
                .collect::<CliResult<Vec<_>>>()?;
            let opts = ReportOptions {
                gin: gin_options(gin),
                ..ReportOptions::default()
            };
            with_input(&input, |d| d.report(&points, &opts, *json))
        }
        Command::Rnc { dim, secants } => {
            let secants = secants
                .iter()
                .map(|s| match parse_integers(s, "secant")?.as_slice() {
                    &[s1, s2, t] => Ok((s1, s2, t)),
                    _ => Err(Error::Invalid(format!("secant `{}` must be s1,s2,t", s)).into()),
                })
                .collect::<CliResult<Vec<_>>>()?;
            let field = field.unwrap_or_default();
            ginlex::with_field!(field, F => rnc::<F>(*dim, &secants, field),
                unsupported => Err(Error::UnsupportedField(field.to_string()).into()))
        }
    }
}

/// Calls `body` with the file's ideal over the selected field.
fn with_input(input: &Input, body: impl FnOnce(&dyn Dispatch) -> CliResult<String>) -> CliResult<String> {
    ginlex::with_field!(input.field, F => {
        let ideal = input.file.ideal::<F>()?;
        body(&Loaded::<F> { ideal, input })
    }, unsupported => Err(Error::UnsupportedField(input.field.to_string()).into()))
}

struct Loaded<'a, F> {
    ideal: Ideal<F>,
    input: &'a Input,
}

impl<F> Loaded<'_, F> {
    fn names(&self) -> &[String] {
        &self.input.file.names
    }
}

/// Subcommands on a loaded ideal, object-safe so the field type stays inside `with_input`.
trait Dispatch {
    fn gb(&self, order: TermOrder) -> CliResult<String>;
    fn gin(&self, order: TermOrder, opts: &GinOptions) -> CliResult<String>;
    fn pei(&self, level: u32, generic: bool, no_change: bool, opts: &GinOptions) -> CliResult<String>;
    fn hilbert(&self, upto: u32, oracle: bool) -> CliResult<String>;
    fn report(&self, points: &[Vec<i64>], opts: &ReportOptions, json: bool) -> CliResult<String>;
}

fn monomial_list(j: &MonomialIdeal, names: &[String]) -> Vec<String> {
    let mut gens = j.generators().to_vec();
    gens.sort_by(|a, b| b.exponents().cmp(a.exponents()));
    gens.iter().map(|m| m.format_with(names)).collect()
}

fn gin_header(out: &mut String, g: &GinResult<impl Field>) {
    let _ = writeln!(
        out,
        "# gin {}, seeds {} {}, bound {}",
        order_name(g.order),
        g.seeds.0,
        g.seeds.1,
        g.bound
    );
}

#[derive(Serialize)]
struct Witnesses {
    power_witness: bool,
    mixed_witness: bool,
}

#[derive(Serialize)]
struct ReportJson {
    degree: u64,
    genus: i64,
    #[serde(rename = "M")]
    m: u32,
    #[serde(rename = "predicted_M")]
    predicted_m: i64,
    gin: Vec<String>,
    k1_degree: u128,
    k1_degree_formula: i64,
    witnesses: Witnesses,
    tangent_dims: Vec<usize>,
    verdict: &'static str,
}

impl<F: Field> Dispatch for Loaded<'_, F> {
    fn gb(&self, order: TermOrder) -> CliResult<String> {
        let basis = buchberger(&self.ideal, order)?;
        let file = IdealFile::from_ideal(&basis.to_ideal(), self.names().to_vec(), self.input.field, order);
        Ok(format!(
            "# reduced Gröbner basis, {} elements\n{}",
            basis.len(),
            file.write()
        ))
    }

    fn gin(&self, order: TermOrder, opts: &GinOptions) -> CliResult<String> {
        let g = gin(&self.ideal, order, opts)?;
        let mut out = String::new();
        gin_header(&mut out, &g);
        for m in g.gin.canonical_strings() {
            out.push_str(&m);
            out.push('\n');
        }
        Ok(out)
    }

    fn pei(&self, level: u32, generic: bool, no_change: bool, opts: &GinOptions) -> CliResult<String> {
        let mut out = String::new();
        let basis = if no_change {
            let _ = writeln!(out, "# coordinates of the input");
            buchberger(&self.ideal, TermOrder::GradedLex)?
        } else {
            let g = gin(&self.ideal, TermOrder::GradedLex, opts)?;
            gin_header(&mut out, &g);
            g.basis
        };
        if generic {
            generic_from_basis(&basis, level)?;
        }
        let ladder = PartialElimLadder::from_basis(&basis)?;
        let bar_names = self.names()[1..].to_vec();
        let _ = writeln!(out, "# K_{} in {}", level, bar_names.join(" "));
        match ladder.level(level) {
            None => {
                let _ = writeln!(out, "# initial ideal: 0");
                out.push_str(
                    &IdealFile::from_ideal(
                        &Ideal::<F>::zero(bar_names.len()),
                        bar_names,
                        self.input.field,
                        TermOrder::GradedLex,
                    )
                    .write(),
                );
            }
            Some(l) => {
                let _ = writeln!(
                    out,
                    "# initial ideal: {}",
                    monomial_list(&l.initial, &bar_names).join(", ")
                );
                let _ = writeln!(out, "# hilbert polynomial: {}", l.hilbert.polynomial_string());
                let _ = writeln!(out, "# locus degree: {}", ladder.locus_degree(level));
                let _ = writeln!(out, "# saturated: {}", ladder.is_saturated(level)?);
                let file =
                    IdealFile::from_ideal(&l.basis.to_ideal(), bar_names, self.input.field, TermOrder::GradedLex);
                out.push_str(&file.write());
            }
        }
        Ok(out)
    }

    fn hilbert(&self, upto: u32, oracle: bool) -> CliResult<String> {
        let initial = buchberger(&self.ideal, self.input.file.order)?.initial_ideal();
        let row = |h: &dyn Fn(u32) -> u128| (0..=upto).map(|m| h(m).to_string()).collect::<Vec<_>>().join(",");
        let mut out = row(&|m| initial.hilbert_function(m));
        out.push('\n');
        if oracle {
            out.push_str(&row(&|m| oracle_hilbert_function(&self.ideal, m)));
            out.push('\n');
        }
        Ok(out)
    }

    fn report(&self, points: &[Vec<i64>], opts: &ReportOptions, json: bool) -> CliResult<String> {
        let points: Vec<Vec<F>> = points
            .iter()
            .map(|p| p.iter().map(|&c| F::from_i64(c)).collect())
            .collect();
        let r = curve_report(&self.ideal, &points, opts)?;
        let gin = r.gin.canonical_strings();
        if json {
            let obj = ReportJson {
                degree: r.degree,
                genus: r.genus,
                m: r.m_actual,
                predicted_m: r.m_predicted,
                gin,
                k1_degree: r.k1_degree,
                k1_degree_formula: r.k1_degree_formula,
                witnesses: Witnesses {
                    power_witness: r.power_witness,
                    mixed_witness: r.mixed_witness,
                },
                tangent_dims: r.tangent_dims,
                verdict: r.verdict.as_str(),
            };
            let mut text = serde_json::to_string_pretty(&obj).map_err(|e| CliError::Io(e.to_string()))?;
            text.push('\n');
            return Ok(text);
        }
        let mut out = String::new();
        let _ = writeln!(out, "ambient_dim: {}", r.ambient_dim);
        let _ = writeln!(out, "projections: {}", r.projections);
        let _ = writeln!(out, "degree: {}", r.degree);
        let _ = writeln!(out, "genus: {}", r.genus);
        let _ = writeln!(out, "M: {}", r.m_actual);
        let _ = writeln!(out, "predicted_M: {}", r.m_predicted);
        let _ = writeln!(out, "M_via_ladder: {}", r.m_via_ladder);
        let _ = writeln!(out, "k1_degree: {}", r.k1_degree);
        let _ = writeln!(out, "k1_degree_formula: {}", r.k1_degree_formula);
        let _ = writeln!(out, "power_witness: {}", r.power_witness);
        let _ = writeln!(out, "mixed_witness: {}", r.mixed_witness);
        let dims: Vec<String> = r.tangent_dims.iter().map(|t| t.to_string()).collect();
        let _ = writeln!(out, "tangent_dims: {}", dims.join(", "));
        let _ = writeln!(out, "gin: {}", gin.join(", "));
        let _ = writeln!(out, "verdict: {}", r.verdict.as_str());
        Ok(out)
    }
}

fn rnc<F: Field>(dim: usize, secants: &[(i64, i64, i64)], field: FieldChoice) -> CliResult<String> {
    let ideal = projected_rnc::<F>(dim, secants)?;
    let mut out = String::new();
    let _ = writeln!(out, "# rational normal curve of degree {} in P^{}", dim, dim);
    for (s1, s2, t) in secants {
        let _ = writeln!(out, "# projected from p({}) + {} p({})", s1, t, s2);
    }
    let names = default_names(ideal.nvars());
    out.push_str(&IdealFile::from_ideal(&ideal, names, field, TermOrder::GradedLex).write());
    Ok(out)
}
