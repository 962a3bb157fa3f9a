use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matroid_core::conversions::{convert, convert_with};
use matroid_core::families::{bicircular, phi, phi_r, separation_family, uniform};
use matroid_core::harness::{
    default_range, format_csv, format_table, run_family_range, run_separation_suite,
};
use matroid_core::reductions::{
    detect_minor_exhaustive, detect_minor_fixed, encode_bipartite, find_independent_set,
    find_subgraph, intersect3_bases, intersect3_bruteforce, isomorphic, reduce_3dm,
    reduce_independent_set, reduce_subgraph_iso, MinorWitness, TripleSystem,
};
use matroid_core::{
    encode_from_oracle, parse, serialize, validate, Description, DescriptionKind, FamilyId,
    FamilyTag, MatroidView, MultiGraph, SubsetMask,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(name = "matroid", version, about = "Matroid descriptions, conversions and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a description to another kind.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        to: DescriptionKind,
        /// Decode and re-encode by classifying every subset.
        #[arg(long)]
        force_exhaustive: bool,
        /// Write here instead of stdout; the plan then goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a description against the matroid axioms for its kind.
    Validate { file: PathBuf },
    /// Generate a description.
    Gen {
        #[command(subcommand)]
        what: GenTarget,
        /// Kind of description to emit.
        #[arg(long = "as", global = true, default_value = "bases")]
        kind: DescriptionKind,
        #[arg(short = 'o', long = "out", global = true)]
        out: Option<PathBuf>,
    },
    /// Look for a minor of HOST isomorphic to PATTERN.
    Minor {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, value_enum, default_value_t = MinorAlgorithm::Circuits)]
        algorithm: MinorAlgorithm,
        /// Exit with status 1 when no minor exists.
        #[arg(long)]
        strict: bool,
    },
    /// Test two descriptions for isomorphism, or print the bipartite-graph
    /// encoding of one.
    Iso {
        #[arg(required_unless_present = "encode", num_args = 2, value_names = ["A", "B"])]
        files: Vec<PathBuf>,
        #[arg(long, conflicts_with = "files")]
        encode: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
    /// Look for a common independent set of size K in three matroids.
    Intersect3 {
        m1: PathBuf,
        m2: PathBuf,
        m3: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_enum, default_value_t = IntersectAlgorithm::Bases)]
        algorithm: IntersectAlgorithm,
        #[arg(long)]
        strict: bool,
    },
    /// Build the matroid instances of a reduction.
    Reduce {
        #[command(subcommand)]
        what: ReduceTarget,
        #[arg(long, global = true, default_value = ".")]
        out_dir: PathBuf,
        /// Solve both sides by brute force and check that they agree.
        #[arg(long, global = true)]
        verify: bool,
    },
    /// Tabulate description sizes of the separating families.
    Sizes {
        #[arg(long)]
        family: Option<FamilyTag>,
        /// Inclusive parameter range, e.g. `3..6`.
        #[arg(long, value_parser = parse_range)]
        n_range: Option<(usize, usize)>,
        /// Write the CSV here instead of after the table.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    /// U_{R,N}.
    Uniform { r: usize, n: usize },
    /// A member of a separating family.
    Family { tag: FamilyTag, n: usize },
    /// The rank-3 matroid Φ(G).
    Phi { graph: PathBuf },
    /// Φ_R(G).
    Phir { graph: PathBuf, r: usize },
    /// The bicircular matroid of a graph.
    Bicircular { graph: PathBuf },
}

#[derive(Subcommand)]
enum ReduceTarget {
    /// 3-dimensional matching to 3-matroid intersection.
    #[command(name = "3dm")]
    ThreeDm { file: PathBuf },
    /// Subgraph isomorphism to minor isomorphism.
    Subgraph { g: PathBuf, h: PathBuf },
    /// Independent set to uniform-minor detection.
    Indepset {
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'r')]
        r: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MinorAlgorithm {
    Circuits,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum IntersectAlgorithm {
    Bases,
    Exhaustive,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

type CliResult<T> = Result<T, String>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn load_description(path: &Path) -> CliResult<Description> {
    parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_view(path: &Path) -> CliResult<MatroidView> {
    let d = load_description(path)?;
    MatroidView::from_description(&d).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> CliResult<MultiGraph> {
    read(path)?
        .parse()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn bits(m: SubsetMask, n: usize) -> String {
    if n == 0 {
        "-".to_string()
    } else {
        m.to_bitstring(n)
    }
}

fn describe_witness(w: &MinorWitness, n: usize) -> String {
    let kept: Vec<usize> = w.kept(n).iter().collect();
    let pairs: Vec<String> = kept
        .iter()
        .zip(&w.iso)
        .map(|(e, f)| format!("{e}->{f}"))
        .collect();
    format!(
        "contract {}\ndelete {}\nmap {}\n",
        bits(w.x, n),
        bits(w.y, n),
        pairs.join(" ")
    )
}

fn decision(found: bool, strict: bool) -> u8 {
    if found || !strict {
        0
    } else {
        EXIT_NEGATIVE
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Convert {
            input,
            to,
            force_exhaustive,
            out,
        } => {
            let desc = load_description(&input)?;
            let conv = convert_with(&desc, to, force_exhaustive).map_err(err)?;
            let plan_line = format!("plan: {}", conv.plan);
            if out.is_some() {
                println!("{plan_line}");
            } else {
                eprintln!("{plan_line}");
            }
            emit(out.as_deref(), &serialize(&conv.output))?;
            Ok(0)
        }
        Command::Validate { file } => {
            let desc = match parse(&read(&file)?) {
                Ok(d) => d,
                Err(e) => {
                    println!("{}: {e}", file.display());
                    return Ok(EXIT_INVALID);
                }
            };
            let report = validate(&desc);
            print!("{report}");
            Ok(if report.is_valid() { 0 } else { EXIT_INVALID })
        }
        Command::Gen { what, kind, out } => {
            let view = match what {
                GenTarget::Uniform { r, n } => uniform(r, n),
                GenTarget::Family { tag, n } => separation_family(FamilyId::new(tag, n)),
                GenTarget::Phi { graph } => phi(&load_graph(&graph)?),
                GenTarget::Phir { graph, r } => phi_r(&load_graph(&graph)?, r),
                GenTarget::Bicircular { graph } => bicircular(&load_graph(&graph)?),
            }
            .map_err(err)?;
            emit(out.as_deref(), &serialize(&encode_from_oracle(&view, kind)))?;
            Ok(0)
        }
        Command::Minor {
            host,
            pattern,
            algorithm,
            strict,
        } => {
            let host_desc = load_description(&host)?;
            let pattern_view = load_view(&pattern)?;
            let n = host_desc.n();
            let found = match algorithm {
                MinorAlgorithm::Circuits => {
                    let host_desc = match host_desc.kind() {
                        DescriptionKind::Circuits | DescriptionKind::Hyperplanes => host_desc,
                        _ => {
                            let conv = convert(&host_desc, DescriptionKind::Circuits).map_err(err)?;
                            eprintln!("host converted: {}", conv.plan);
                            conv.output
                        }
                    };
                    detect_minor_fixed(&host_desc, &pattern_view).map_err(err)?
                }
                MinorAlgorithm::Exhaustive => {
                    let host_view = MatroidView::from_description(&host_desc).map_err(err)?;
                    detect_minor_exhaustive(&host_view, &pattern_view).map_err(err)?
                }
            };
            match &found {
                Some(w) => print!("{}", describe_witness(w, n)),
                None => println!("none"),
            }
            Ok(decision(found.is_some(), strict))
        }
        Command::Iso {
            files,
            encode,
            strict,
        } => {
            if let Some(path) = encode {
                let enc = encode_bipartite(&load_description(&path)?);
                print!("{}", enc.graph);
                return Ok(0);
            }
            let a = load_view(&files[0])?;
            let b = load_view(&files[1])?;
            let found = isomorphic(&a, &b);
            match &found {
                Some(map) => {
                    println!("isomorphic");
                    let pairs: Vec<String> =
                        map.iter().enumerate().map(|(e, f)| format!("{e}->{f}")).collect();
                    println!("map {}", pairs.join(" "));
                }
                None => println!("not isomorphic"),
            }
            Ok(decision(found.is_some(), strict))
        }
        Command::Intersect3 {
            m1,
            m2,
            m3,
            k,
            algorithm,
            strict,
        } => {
            let descs = [m1, m2, m3]
                .iter()
                .map(|p| load_description(p))
                .collect::<CliResult<Vec<_>>>()?;
            let n = descs[0].n();
            let found = match algorithm {
                IntersectAlgorithm::Bases => {
                    let bases = descs
                        .iter()
                        .map(|d| convert(d, DescriptionKind::Bases).map(|c| c.output))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(err)?;
                    intersect3_bases(&bases[0], &bases[1], &bases[2], k).map_err(err)?
                }
                IntersectAlgorithm::Exhaustive => {
                    let views = descs
                        .iter()
                        .map(MatroidView::from_description)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(err)?;
                    intersect3_bruteforce(&views[0], &views[1], &views[2], k).map_err(err)?
                }
            };
            match found {
                Some(a) => println!("{}", bits(a, n)),
                None => println!("none"),
            }
            Ok(decision(found.is_some(), strict))
        }
        Command::Reduce {
            what,
            out_dir,
            verify,
        } => reduce(what, &out_dir, verify),
        Command::Sizes {
            family,
            n_range,
            csv,
        } => {
            let reports = match family {
                Some(tag) => {
                    let range = n_range.map_or_else(|| default_range(tag), |(a, b)| a..=b);
                    run_family_range(tag, range)
                }
                None => run_separation_suite(),
            }
            .map_err(err)?;
            print!("{}", format_table(&reports));
            let csv_text = format_csv(&reports);
            match csv {
                Some(p) => write(&p, &csv_text)?,
                None => print!("\n{csv_text}"),
            }
            Ok(0)
        }
    }
}

fn save(dir: &Path, name: &str, desc: &Description) -> CliResult<()> {
    let path = dir.join(name);
    write(&path, &serialize(desc))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn agreement(graph_side: bool, matroid_side: bool) -> u8 {
    if graph_side == matroid_side {
        println!("agree: yes");
        0
    } else {
        println!("agree: NO");
        EXIT_INVALID
    }
}

fn reduce(what: ReduceTarget, dir: &Path, verify: bool) -> CliResult<u8> {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    match what {
        ReduceTarget::ThreeDm { file } => {
            let instance: TripleSystem = read(&file)?
                .parse()
                .map_err(|e| format!("{}: {e}", file.display()))?;
            let red = reduce_3dm(&instance).map_err(err)?;
            for i in 0..3 {
                save(dir, &format!("m{}.circuits", i + 1), &red.circuits[i])?;
                save(dir, &format!("m{}.hyperplanes", i + 1), &red.hyperplanes[i])?;
            }
            for (coord, j) in &red.empty_classes {
                println!("side {} element {j} lies in no triple", coord + 1);
            }
            println!("target size {}", red.target);
            if !verify {
                return Ok(0);
            }
            let matching = instance.find_matching().is_some();
            let views = red.views().map_err(err)?;
            let brute = intersect3_bruteforce(&views[0], &views[1], &views[2], red.target)
                .map_err(err)?
                .is_some();
            let bases = red.bases().map_err(err)?;
            let via_bases = intersect3_bases(&bases[0], &bases[1], &bases[2], red.target)
                .map_err(err)?
                .is_some();
            println!("matching: {}", yes_no(matching));
            println!("common independent set (exhaustive): {}", yes_no(brute));
            println!("common independent set (bases): {}", yes_no(via_bases));
            let code = agreement(matching, brute);
            Ok(if brute == via_bases { code } else { EXIT_INVALID })
        }
        ReduceTarget::Subgraph { g, h } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let (pg, ph) = reduce_subgraph_iso(&g, &h).map_err(err)?;
            save(dir, "phi_g.independent", &pg)?;
            save(dir, "phi_h.independent", &ph)?;
            if !verify {
                return Ok(0);
            }
            let graph_side = find_subgraph(&g, &h).is_some();
            let host = MatroidView::from_description(&pg).map_err(err)?;
            let pattern = MatroidView::from_description(&ph).map_err(err)?;
            let matroid_side = detect_minor_exhaustive(&host, &pattern).map_err(err)?.is_some();
            println!("subgraph: {}", yes_no(graph_side));
            println!("minor: {}", yes_no(matroid_side));
            Ok(agreement(graph_side, matroid_side))
        }
        ReduceTarget::Indepset { graph, k, r } => {
            let g = load_graph(&graph)?;
            let inst = reduce_independent_set(&g, k, r).map_err(err)?;
            save(dir, "phir.independent", &inst.host)?;
            println!("target U({},{})", inst.rank, inst.size);
            if !verify {
                return Ok(0);
            }
            if inst.size < inst.rank {
                return Err(format!(
                    "k + m*t = {} is below r = {}; the equivalence needs k + m*t >= r",
                    inst.size, inst.rank
                ));
            }
            let graph_side = find_independent_set(&g, k).is_some();
            let host = MatroidView::from_description(&inst.host).map_err(err)?;
            let pattern = inst.pattern().map_err(err)?;
            let matroid_side = detect_minor_exhaustive(&host, &pattern).map_err(err)?.is_some();
            println!("independent set: {}", yes_no(graph_side));
            println!("uniform minor: {}", yes_no(matroid_side));
            Ok(agreement(graph_side, matroid_side))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
