//! Command-line front end. Subcommands read poset/sggi JSON from files or
//! stdin (`-`) and write JSON to stdout, so pipelines compose:
//!
//! ```text
//! polycov make "pyramid(toroid44(3))" | polycov mon --report
//! ```
//!
//! Exit status: 0 on success (a failed validation is a reported result, not
//! an error), 1 on domain errors, 2 on usage errors.

use crate::constructors::parse_construction;
use crate::covers::{self, Caps, StageGroup};
use crate::error::{Error, Result};
use crate::monodromy::{is_regular, monodromy};
use crate::poset::Polytope;
use crate::reconstruct;
use crate::sggi::{IntersectionReport, Sggi};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::io::Read;

#[derive(Parser)]
#[command(
    name = "polycov",
    about = "Monodromy groups, string C-groups, and finite regular covers of abstract polytopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Enumeration cap (elements touched by exhaustive passes);
    /// POLYCOV_CAP also overrides the default
    #[arg(long)]
    cap: Option<u64>,
    /// Domain-point cap for explicit permutation representations
    #[arg(long)]
    domain_cap: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let mut caps = Caps::from_env();
        if let Some(c) = self.cap {
            caps.enumeration = c;
        }
        if let Some(d) = self.domain_cap {
            caps.domain = d;
        }
        caps
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope from a construction expression
    /// (polygon/simplex/hypercube/toroid44/pyramid/dual, nested)
    Make { expr: String },
    /// Check axioms A, B, C and report violations
    Validate {
        #[arg(default_value = "-")]
        poset: String,
        #[arg(long)]
        json: bool,
    },
    /// List all flags in canonical order, as arrays of face ids
    Flags {
        #[arg(default_value = "-")]
        poset: String,
    },
    /// Monodromy group of a polytope (sggi JSON; --report for analysis)
    Mon {
        #[arg(default_value = "-")]
        poset: String,
        /// Emit order, type, C-group status and witnesses instead of the raw group
        #[arg(long)]
        report: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Regular cover of an sggi (or of a polytope's monodromy group)
    Cover {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Extend a string C-group to one rank higher (type gains a 4)
    Extend {
        #[arg(default_value = "-")]
        sggi: String,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Mix two same-rank sggis
    Mix {
        sggi_a: String,
        #[arg(default_value = "-")]
        sggi_b: String,
    },
    /// Coset geometry of an sggi, as a poset
    Reconstruct {
        #[arg(default_value = "-")]
        sggi: String,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Verified flag-level covering map between two polytopes
    Covermap { poset_r: String, poset_q: String },
    /// Reverse the partial order
    Dual {
        #[arg(default_value = "-")]
        poset: String,
    },
}

pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own message; usage problems exit 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    }
}

fn read_poset(path: &str) -> Result<Polytope> {
    Polytope::from_json(&read_input(path)?)
}

fn read_sggi(path: &str) -> Result<Sggi> {
    Sggi::from_json(&read_input(path)?)
}

/// Accept either an sggi or a poset (whose monodromy group is then used).
fn read_sggi_or_poset(path: &str) -> Result<Sggi> {
    let text = read_input(path)?;
    match Sggi::from_json(&text) {
        Ok(s) => Ok(s),
        Err(sggi_err) => match Polytope::from_json(&text) {
            Ok(q) => monodromy(&q),
            Err(poset_err) => Err(Error::Parse(format!(
                "input is neither an sggi ({sggi_err}) nor a poset ({poset_err})"
            ))),
        },
    }
}

#[derive(Serialize)]
struct MonReport {
    flags: usize,
    order: String,
    schlafli: Vec<u64>,
    /// Always true for a group built by `monodromy`, reported for pipelines
    /// that archive the output.
    sggi: bool,
    regular: bool,
    string_c_group: Option<bool>,
    intersection: IntersectionReport,
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Make { expr } => {
            let q = parse_construction(&expr)?;
            println!("{}", q.to_json());
            Ok(())
        }
        Command::Validate { poset, json } => {
            let q = read_poset(&poset)?;
            let report = q.validate();
            if json {
                println!("{}", serde_json::to_string_pretty(report)?);
            } else if report.passed {
                println!("passed");
            } else {
                println!("failed");
                for v in &report.violations {
                    println!("  axiom {:?}: {} [{}]", v.axiom, v.detail, v.faces.join(", "));
                }
            }
            Ok(())
        }
        Command::Flags { poset } => {
            let q = read_poset(&poset)?;
            let flags = q.flags()?;
            let ids: Vec<Vec<&str>> = flags.iter().map(|f| f.ids(&q)).collect();
            println!("{}", serde_json::to_string_pretty(&ids)?);
            Ok(())
        }
        Command::Mon {
            poset,
            report,
            json,
            caps,
        } => {
            let q = read_poset(&poset)?;
            let m = monodromy(&q)?;
            if !report {
                println!("{}", m.to_json());
                return Ok(());
            }
            let caps = caps.caps();
            let intersection = m.intersection_condition(caps.enumeration)?;
            let string_c_group = if intersection.capped_pairs.is_empty() {
                Some(intersection.passed)
            } else if intersection.witness.is_some() {
                Some(false)
            } else {
                None
            };
            let rep = MonReport {
                flags: m.degree(),
                order: m.order().to_string(),
                schlafli: m.schlafli_type()?.periods,
                sggi: true,
                regular: is_regular(&q)?,
                string_c_group,
                intersection,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!("flags: {}", rep.flags);
                println!("order: {}", rep.order);
                println!(
                    "schlafli type: {{{}}}",
                    rep.schlafli
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                println!("sggi: {}", rep.sggi);
                println!("regular: {}", rep.regular);
                match rep.string_c_group {
                    Some(b) => println!("string C-group: {b}"),
                    None => println!("string C-group: undecided (cap exceeded)"),
                }
                if let Some(w) = &rep.intersection.witness {
                    println!(
                        "witness: I={:?} J={:?} intersection order {} vs expected {}",
                        w.left, w.right, w.intersection_order, w.expected_order
                    );
                }
            }
            Ok(())
        }
        Command::Cover { input, json, caps } => {
            let s = read_sggi_or_poset(&input)?;
            let caps = caps.caps();
            let outcome = covers::regular_cover(&s, &caps)?;
            let r = &outcome.report;
            if json {
                println!("{}", serde_json::to_string_pretty(r)?);
            } else {
                println!("start prefix rank: {}", r.start_prefix_rank);
                for st in &r.stages {
                    println!(
                        "stage i={}: {} order={} type={} facets={}",
                        st.index,
                        match st.mode {
                            covers::StageMode::Explicit => "explicit",
                            covers::StageMode::Symbolic => "symbolic",
                        },
                        st.order,
                        st.schlafli,
                        st.facet_count
                    );
                }
                let bound = if r.final_is_bound { " (bound)" } else { "" };
                println!("final order{bound}: {}", r.final_order);
                println!("final type{bound}: {}", r.final_schlafli);
                println!("certified: {}", r.certified);
            }
            Ok(())
        }
        Command::Extend { sggi, caps } => {
            let s = read_sggi(&sggi)?;
            let caps = caps.caps();
            match covers::extend_2k(&s, &caps)? {
                StageGroup::Explicit(e) => println!("{}", e.to_json()),
                StageGroup::Symbolic(sym) => {
                    println!("{}", serde_json::to_string_pretty(&sym)?)
                }
            }
            Ok(())
        }
        Command::Mix { sggi_a, sggi_b } => {
            let a = read_sggi(&sggi_a)?;
            let b = read_sggi(&sggi_b)?;
            println!("{}", covers::mix(&a, &b)?.to_json());
            Ok(())
        }
        Command::Reconstruct { sggi, caps } => {
            let s = read_sggi(&sggi)?;
            let caps = caps.caps();
            let q = reconstruct::polytope_from_group(&s, caps.enumeration)?;
            println!("{}", q.to_json());
            Ok(())
        }
        Command::Covermap { poset_r, poset_q } => {
            let r = read_poset(&poset_r)?;
            let q = read_poset(&poset_q)?;
            let fr = r.flags()?;
            let fq = q.flags()?;
            let map = reconstruct::covering_map(&r, &q, &fr[0], &fq[0])?;
            #[derive(Serialize)]
            struct MapOut {
                map: Vec<u32>,
            }
            println!("{}", serde_json::to_string_pretty(&MapOut { map: map.map })?);
            Ok(())
        }
        Command::Dual { poset } => {
            let q = read_poset(&poset)?;
            println!("{}", q.dual()?.to_json());
            Ok(())
        }
    }
}
