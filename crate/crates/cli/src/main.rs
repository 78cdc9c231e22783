use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slackmat::io::{self, Document};
use slackmat::recognition;
use slackmat::verification::{self, Witness};
use slackmat::{combinatorial, cone, linalg, polytope};
use slackmat::{Certificate, ConeH, ConeV, Matrix, PolytopeH, PolytopeV};

#[derive(Parser)]
#[command(name = "slackmat", version, about = "Exact slack matrix recognition")]
struct Cli {
    /// Suppress the verdict line on standard output.
    #[arg(short, long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Write the yes/no certificate to this file.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Also run an independent decision procedure and fail on disagreement.
    #[arg(long)]
    oracle: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReconstructKind {
    Cone,
    Polytope,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a matrix is a slack matrix of a polyhedral cone.
    CheckCone(CheckArgs),
    /// Decide whether a matrix is a slack matrix of a polytope.
    CheckPolytope(CheckArgs),
    /// Build a realization of a slack matrix.
    Reconstruct {
        file: PathBuf,
        #[arg(long)]
        out_v: PathBuf,
        #[arg(long)]
        out_h: PathBuf,
        #[arg(long, value_enum, default_value = "polytope")]
        kind: ReconstructKind,
    },
    /// Print the slack matrix of a V-/H-representation pair.
    Slack {
        #[arg(long)]
        vrep: PathBuf,
        #[arg(long)]
        hrep: PathBuf,
    },
    /// Decide whether a V-polytope equals an H-polyhedron containing it.
    Verify {
        #[arg(long)]
        vrep: PathBuf,
        #[arg(long)]
        hrep: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Cross-check against vertex enumeration of the H-polyhedron.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the 0/1 incidence pattern of a nonnegative matrix.
    Incidence { file: PathBuf },
    /// Decide whether a square matrix is a slack matrix of a polygon.
    PolygonCheck { file: PathBuf },
    /// Realize a matrix and its transpose as slack matrices of polar polytopes.
    PolarRealize {
        file: PathBuf,
        #[arg(long)]
        out_v: Option<PathBuf>,
        #[arg(long)]
        out_h: Option<PathBuf>,
        #[arg(long)]
        out_polar: Option<PathBuf>,
    },
    /// Check a certificate against a matrix.
    #[command(hide = true)]
    VerifyCert {
        matrix: PathBuf,
        certificate: PathBuf,
    },
}

/// A failure that is not a verdict: bad input, I/O, or an oracle mismatch.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

struct Output {
    quiet: bool,
}

impl Output {
    fn line(&self, s: impl AsRef<str>) {
        if !self.quiet {
            println!("{}", s.as_ref());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output { quiet: cli.quiet };
    match run(cli.command, &out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("slackmat: error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &Output) -> Outcome {
    match command {
        Command::CheckCone(args) => check(&args, false, out),
        Command::CheckPolytope(args) => check(&args, true, out),
        Command::Reconstruct {
            file,
            out_v,
            out_h,
            kind,
        } => reconstruct(&file, &out_v, &out_h, kind, out),
        Command::Slack { vrep, hrep } => slack(&vrep, &hrep, out),
        Command::Verify {
            vrep,
            hrep,
            certificate,
            oracle,
        } => verify(&vrep, &hrep, certificate.as_deref(), oracle, out),
        Command::Incidence { file } => {
            let m = read_matrix(&file)?;
            let pattern = combinatorial::incidence_matrix(&m)?;
            out.line(io::serialize(&Document::Matrix(pattern.to_matrix())).trim_end());
            Ok(true)
        }
        Command::PolygonCheck { file } => {
            let m = read_matrix(&file)?;
            match combinatorial::polygon_slack_check(&m) {
                Ok(verdict) => {
                    out.line(format!("POLYGON-SLACK {}", yes_no(verdict)));
                    Ok(verdict)
                }
                Err(slackmat::Error::NotApplicable(why)) => {
                    out.line("POLYGON-SLACK not-applicable");
                    eprintln!("slackmat: {why}");
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::PolarRealize {
            file,
            out_v,
            out_h,
            out_polar,
        } => polar_realize(&file, out_v, out_h, out_polar, out),
        Command::VerifyCert {
            matrix,
            certificate,
        } => {
            let m = read_matrix(&matrix)?;
            let valid = match read(&certificate)? {
                Document::Certificate(Certificate::Yes(y)) => {
                    recognition::verify_yes_certificate(&m, &y)
                }
                Document::Certificate(Certificate::No(n)) => {
                    recognition::verify_no_certificate(&m, &n)
                }
                other => return Err(unexpected(&certificate, "CERT", &other)),
            };
            out.line(format!("CERT {}", if valid { "valid" } else { "invalid" }));
            Ok(valid)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    io::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn unexpected(path: &Path, wanted: &str, doc: &Document) -> Failure {
    Failure(format!(
        "{}: expected a {wanted} document, found {}",
        path.display(),
        doc.kind()
    ))
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    match read(path)? {
        Document::Matrix(m) => Ok(m),
        other => Err(unexpected(path, "MATRIX", &other)),
    }
}

fn write(path: &Path, doc: &Document) -> Result<(), Failure> {
    fs::write(path, io::serialize(doc)).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn check(args: &CheckArgs, polytope: bool, out: &Output) -> Outcome {
    let m = read_matrix(&args.file)?;
    let result = if polytope {
        recognition::is_polytope_slack(&m)?
    } else {
        recognition::is_cone_slack(&m)?
    };
    let verdict = result.verdict();
    if args.oracle {
        let other = if polytope {
            if linalg::rank(&m) < 2 {
                false
            } else {
                recognition::affine_criterion_check(&m)?
            }
        } else {
            recognition::cone_check_via_polytope(&m)?
        };
        if other != verdict {
            return Err(Failure(format!(
                "oracle disagreement: primary says {}, oracle says {}",
                yes_no(verdict),
                yes_no(other)
            )));
        }
    }
    if let Some(path) = &args.certificate {
        write(path, &Document::Certificate(result.certificate.clone()))?;
    }
    let label = if polytope {
        "POLYTOPE-SLACK"
    } else {
        "CONE-SLACK"
    };
    let rank = linalg::rank(&m);
    match result.no() {
        None if polytope => out.line(format!("{label} yes rank={rank} dim={}", rank - 1)),
        None => out.line(format!("{label} yes rank={rank}")),
        Some(no) => out.line(format!("{label} no reason={}", no.reason())),
    }
    Ok(verdict)
}

fn reconstruct(
    file: &Path,
    out_v: &Path,
    out_h: &Path,
    kind: ReconstructKind,
    out: &Output,
) -> Outcome {
    let m = read_matrix(file)?;
    let result = match kind {
        ReconstructKind::Cone => recognition::is_cone_slack(&m)?,
        ReconstructKind::Polytope => recognition::is_polytope_slack(&m)?,
    };
    let yes = match &result.certificate {
        Certificate::Yes(y) => y,
        Certificate::No(no) => {
            out.line(format!("NOT-SLACK reason={}", no.reason()));
            return Ok(false);
        }
    };
    let (v, h) = match (kind, &yes.polytope) {
        (ReconstructKind::Polytope, Some((v, h))) => (
            Document::PolytopeV(v.clone()),
            Document::PolytopeH(h.clone()),
        ),
        _ => (
            Document::ConeV(ConeV::from_rows(&yes.a)),
            Document::ConeH(ConeH::from_columns(&yes.b)),
        ),
    };
    write(out_v, &v)?;
    write(out_h, &h)?;
    out.line(format!("RECONSTRUCTED rank={}", linalg::rank(&m)));
    Ok(true)
}

fn slack(vrep: &Path, hrep: &Path, out: &Output) -> Outcome {
    let computed = match (read(vrep)?, read(hrep)?) {
        (Document::PolytopeV(v), Document::PolytopeH(h)) => polytope::slack_of_polytope(&v, &h),
        (Document::ConeV(v), Document::ConeH(h)) => {
            if v.dim != h.dim {
                return Err(Failure(format!(
                    "dimension mismatch: {} vs {}",
                    v.dim, h.dim
                )));
            }
            let mut generators = v.rays.clone();
            for l in &v.lineality {
                generators.push(l.clone());
                generators.push(l.iter().map(|x| -x).collect());
            }
            let a = Matrix::from_rows(v.dim, generators)?;
            cone::slack_of_cone(&a, &h.normal_matrix().transpose())
        }
        (v, h) => {
            return Err(Failure(format!(
                "expected POLY_V/POLY_H or CONE_V/CONE_H, found {}/{}",
                v.kind(),
                h.kind()
            )))
        }
    };
    match computed {
        Ok(s) => {
            out.line(io::serialize(&Document::Matrix(s)).trim_end());
            Ok(true)
        }
        Err(
            e @ (slackmat::Error::NotContained { .. }
            | slackmat::Error::NotRepresentationPair { .. }),
        ) => {
            out.line("NOT-CONTAINED");
            eprintln!("slackmat: {e}");
            Ok(false)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(
    vrep: &Path,
    hrep: &Path,
    certificate: Option<&Path>,
    oracle: bool,
    out: &Output,
) -> Outcome {
    let q: PolytopeV = match read(vrep)? {
        Document::PolytopeV(v) => v,
        other => return Err(unexpected(vrep, "POLY_V", &other)),
    };
    let p: PolytopeH = match read(hrep)? {
        Document::PolytopeH(h) => h,
        other => return Err(unexpected(hrep, "POLY_H", &other)),
    };
    let result = verification::verify_polytope_equality(&q, &p)?;
    let equal = result.equal();
    if oracle && vertex_sets_equal(&q, &p)? != equal {
        return Err(Failure(
            "oracle disagreement with vertex enumeration".to_string(),
        ));
    }
    if let (Some(path), Some(Witness::Certificate(c))) = (certificate, &result.witness) {
        write(path, &Document::Certificate(Certificate::No(c.clone())))?;
    }
    if equal {
        out.line("EQUAL");
    } else {
        out.line(format!("NOT-EQUAL reason={}", result.reason));
    }
    Ok(equal)
}

/// `P = conv(Q)` by enumerating the vertices of a bounded `P` and comparing
/// with the vertices of `Q`.
fn vertex_sets_equal(q: &PolytopeV, p: &PolytopeH) -> Result<bool, Failure> {
    if !p.is_bounded() {
        return Ok(false);
    }
    let mut pv = p.vertices()?.points;
    let mut qv = q.vertices();
    pv.sort();
    qv.sort();
    Ok(pv == qv)
}

fn polar_realize(
    file: &Path,
    out_v: Option<PathBuf>,
    out_h: Option<PathBuf>,
    out_polar: Option<PathBuf>,
    out: &Output,
) -> Outcome {
    let m = read_matrix(file)?;
    let r = match recognition::polar_realization(&m) {
        Ok(r) => r,
        Err(slackmat::Error::NotPolytopeSlack) => {
            out.line("POLAR-REALIZATION no");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(path) = out_v {
        write(&path, &Document::PolytopeV(r.polytope.clone()))?;
    }
    if let Some(path) = out_h {
        write(&path, &Document::PolytopeH(r.hrep.clone()))?;
    }
    if let Some(path) = out_polar {
        write(&path, &Document::PolytopeV(r.polar.clone()))?;
    }
    out.line(format!(
        "POLAR-REALIZATION yes scale={} dim={}",
        r.scale, r.polytope.dim
    ));
    Ok(true)
}
