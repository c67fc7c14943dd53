//! Command-line front end: load and save families, run the partition and
//! bound verifications, enumerate maximal shifted families, and apply the
//! shift closure.
//!
//! Exit status: 0 when every executed check passed, 1 when a check failed
//! (a witness is printed), 2 on usage or input errors.

mod format;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use ifam_core::{
    brute_force_maximal, enumerate_maximal_shifted, identity_product, identity_star, is_shifted,
    partition, shift_closure, type_bounds_report, verify_ekr, verify_hm, Error, SetFamily,
    MAX_ENUMERATION_GROUND, MAX_GENERATOR_UNIFORMITY, MAX_ORACLE_VERTICES,
};
use render::{pass_fail, render_verification, yes_no, Report};

fn caps_help() -> String {
    format!(
        "Scale caps:\n  \
         enumeration ground set:  n <= {MAX_ENUMERATION_GROUND}\n  \
         generator uniformity:    k <= {MAX_GENERATOR_UNIFORMITY}\n  \
         oracle candidate sets:   C(n, k) <= {MAX_ORACLE_VERTICES}"
    )
}

#[derive(Parser)]
#[command(
    name = "ifam",
    version,
    about = "Intersecting k-uniform set families: shifting, canonical partition, \
             extremal bounds, and maximal-family enumeration",
    after_help = caps_help()
)]
struct Cli {
    /// Emit line-oriented key=value output
    #[arg(long, global = true)]
    machine: bool,
    /// Omit the timestamp line, making reports byte-reproducible
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split each family in a file into its type classes and print the
    /// counting report
    Partition {
        /// Family file to read
        #[arg(long)]
        input: PathBuf,
    },
    /// Verify an extremal bound or the counting identities
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Enumerate all maximal shifted intersecting families (or all maximal
    /// ones with --oracle)
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Write the families here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Use the brute-force clique oracle and compare its shifted
        /// families against the generator path
        #[arg(long)]
        oracle: bool,
        /// With --oracle, write only the shifted families
        #[arg(long)]
        shifted_only: bool,
    },
    /// Apply the shift closure to each family in a file
    Shift {
        /// Family file to read
        #[arg(long)]
        input: PathBuf,
        /// Write the shifted families here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Maximum size of an intersecting family: C(n-1, k-1), star unique for
    /// n > 2k
    Ekr {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Maximum size without a common element:
    /// C(n-1, k-1) - C(n-k-1, k-1) + 1
    Hm {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Exact sweeps of the two counting identities
    Identities {
        #[arg(long, default_value_t = 20)]
        k_max: u32,
    },
}

struct Outcome {
    ok: bool,
    /// Family blocks destined for stdout when no output path was given.
    payload: Option<String>,
}

impl Outcome {
    fn checks(ok: bool) -> Self {
        Outcome { ok, payload: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Report::new(cli.machine, !cli.no_timestamp);
    match run(cli.command, &mut out) {
        Ok(outcome) => {
            print!("{}", out.emit());
            if let Some(payload) = outcome.payload {
                println!();
                print!("{payload}");
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut Report) -> anyhow::Result<Outcome> {
    match command {
        Command::Partition { input } => cmd_partition(&input, out),
        Command::Verify { target } => match target {
            VerifyTarget::Ekr { n, k } => {
                let report = verify_ekr(n, k)?;
                out.kv("command", "verify.ekr");
                render_verification(out, &report);
                Ok(Outcome::checks(report.passed()))
            }
            VerifyTarget::Hm { n, k } => {
                let report = verify_hm(n, k)?;
                out.kv("command", "verify.hm");
                render_verification(out, &report);
                Ok(Outcome::checks(report.passed()))
            }
            VerifyTarget::Identities { k_max } => cmd_verify_identities(k_max, out),
        },
        Command::Enumerate {
            n,
            k,
            output,
            oracle,
            shifted_only,
        } => cmd_enumerate(n, k, output.as_deref(), oracle, shifted_only, out),
        Command::Shift { input, output } => cmd_shift(&input, output.as_deref(), out),
    }
}

fn read_families(input: &Path) -> anyhow::Result<Vec<SetFamily>> {
    let text =
        fs::read_to_string(input).with_context(|| format!("cannot read {}", input.display()))?;
    let families = format::parse_families(&text)
        .with_context(|| format!("cannot parse {}", input.display()))?;
    if families.is_empty() {
        bail!("{} contains no families", input.display());
    }
    Ok(families)
}

fn cmd_partition(input: &Path, out: &mut Report) -> anyhow::Result<Outcome> {
    let families = read_families(input)?;
    out.kv("command", "partition");
    let mut all_ok = true;
    for (idx, family) in families.iter().enumerate() {
        out.blank();
        out.kv("family", idx + 1);
        out.kv("n", family.ground_size());
        out.kv("k", family.uniformity());
        out.kv("size", family.len());
        let intersecting = family.is_intersecting();
        let shifted = is_shifted(family);
        out.kv("intersecting", yes_no(intersecting));
        out.kv("shifted", yes_no(shifted));
        let mut family_ok = intersecting && shifted;

        match partition(family) {
            Err(Error::UntypedMember(witness)) => {
                out.kv("typeless_witness", witness);
                family_ok = false;
            }
            Err(other) => return Err(other.into()),
            Ok(parts) => {
                for (i, class) in parts.classes().iter().enumerate() {
                    let key = |suffix: &str| format!("type.{i}.{suffix}");
                    out.kv(&key("size"), class.len());
                    out.kv(&key("projected"), parts.projection(i as u32).len());
                    out.text(format!("  members: {class}"));
                    out.text(format!("  projection: {}", parts.projection(i as u32)));
                }
                if family.ground_size() >= 2 * family.uniformity() {
                    let bounds = type_bounds_report(family)?;
                    for row in &bounds.rows {
                        let key = |suffix: &str| format!("type.{}.{suffix}", row.level);
                        match &row.projected_cap {
                            Some(cap) => out.kv(&key("projected_cap"), cap),
                            None => out.kv(&key("projected_cap"), "none"),
                        }
                        out.kv(&key("projected_ok"), yes_no(row.projected_ok));
                        out.kv(&key("member_cap"), &row.member_cap);
                        out.kv(&key("member_ok"), yes_no(row.member_ok));
                    }
                    out.kv("projected_sum", bounds.projected_sum);
                    out.kv("projected_sum_cap", &bounds.projected_sum_cap);
                    out.kv("projected_sum_ok", yes_no(bounds.projected_sum_ok));
                    family_ok &= bounds.all_ok();
                } else {
                    out.kv("bounds", "skipped (requires n >= 2k)");
                }
            }
        }
        out.kv("family_result", pass_fail(family_ok));
        all_ok &= family_ok;
    }
    out.blank();
    out.kv("result", pass_fail(all_ok));
    Ok(Outcome::checks(all_ok))
}

fn cmd_verify_identities(k_max: u32, out: &mut Report) -> anyhow::Result<Outcome> {
    if k_max == 0 || k_max > 64 {
        bail!("--k-max must lie between 1 and 64, got {k_max}");
    }
    out.kv("command", "verify.identities");
    out.kv("k_max", k_max);
    let mut star_checked = 0u32;
    let mut product_checked = 0u32;
    let mut classification_runs = 0u32;
    let mut failures: Vec<String> = Vec::new();
    for k in 1..=k_max {
        let r = identity_star(k)?;
        star_checked += 1;
        if !r.holds() {
            failures.push(format!("star identity at k={k}: {} != {}", r.lhs, r.rhs));
        }
    }
    for k in 1..=k_max {
        for n in (2 * k)..=(3 * k + 20) {
            let r = identity_product(n, k)?;
            product_checked += 1;
            if r.classification.is_some() {
                classification_runs += 1;
            }
            if !r.holds() {
                failures.push(format!("product identity at n={n}, k={k}"));
            }
        }
    }
    out.kv("star_checked", star_checked);
    out.kv("product_checked", product_checked);
    out.kv("classification_runs", classification_runs);
    out.kv("failures", failures.len());
    for (idx, failure) in failures.iter().enumerate() {
        out.kv(&format!("failure_{}", idx + 1), failure);
    }
    out.kv("result", pass_fail(failures.is_empty()));
    Ok(Outcome::checks(failures.is_empty()))
}

fn cmd_enumerate(
    n: u32,
    k: u32,
    output: Option<&Path>,
    oracle: bool,
    shifted_only: bool,
    out: &mut Report,
) -> anyhow::Result<Outcome> {
    out.kv("command", "enumerate");
    out.kv("n", n);
    out.kv("k", k);
    let (families, ok) = if oracle {
        let listed = brute_force_maximal(n, k, shifted_only)?;
        let shifted_oracle = if shifted_only {
            listed.clone()
        } else {
            brute_force_maximal(n, k, true)?
        };
        let generator_path = enumerate_maximal_shifted(n, k)?;
        let matches = shifted_oracle == generator_path;
        out.kv("mode", "oracle");
        out.kv("shifted_only", yes_no(shifted_only));
        out.kv("oracle_match", yes_no(matches));
        out.text(format!("generator path == oracle: {}", yes_no(matches)));
        (listed, matches)
    } else {
        out.kv("mode", "generators");
        (enumerate_maximal_shifted(n, k)?, true)
    };
    out.kv("count", families.len());
    let blocks = format::render_families(&families);
    let payload = match output {
        Some(path) => {
            fs::write(path, &blocks).with_context(|| format!("cannot write {}", path.display()))?;
            out.kv("output", path.display());
            None
        }
        None => {
            out.kv("output", "stdout");
            Some(blocks)
        }
    };
    out.kv("result", pass_fail(ok));
    Ok(Outcome { ok, payload })
}

fn cmd_shift(input: &Path, output: Option<&Path>, out: &mut Report) -> anyhow::Result<Outcome> {
    let families = read_families(input)?;
    out.kv("command", "shift");
    let mut all_ok = true;
    let mut shifted_families = Vec::with_capacity(families.len());
    for (idx, family) in families.iter().enumerate() {
        out.blank();
        out.kv("family", idx + 1);
        let closed = shift_closure(family);
        let size_preserved = closed.len() == family.len();
        out.kv("size", family.len());
        out.kv("size_preserved", yes_no(size_preserved));
        if family.is_intersecting() {
            out.kv("intersecting_preserved", yes_no(closed.is_intersecting()));
            all_ok &= closed.is_intersecting();
        } else {
            out.kv("intersecting_preserved", "n/a (input not intersecting)");
        }
        out.kv("already_shifted", yes_no(&closed == family));
        out.kv("output_shifted", yes_no(is_shifted(&closed)));
        all_ok &= size_preserved && is_shifted(&closed);
        shifted_families.push(closed);
    }
    let blocks = format::render_families(&shifted_families);
    let payload = match output {
        Some(path) => {
            fs::write(path, &blocks).with_context(|| format!("cannot write {}", path.display()))?;
            out.blank();
            out.kv("output", path.display());
            None
        }
        None => {
            out.blank();
            out.kv("output", "stdout");
            Some(blocks)
        }
    };
    out.kv("result", pass_fail(all_ok));
    Ok(Outcome {
        ok: all_ok,
        payload,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use render::family_label;

    #[test]
    fn family_labels() {
        assert_eq!(family_label(&SetFamily::star(7, 3).unwrap()), "star(7,3)");
        assert_eq!(
            family_label(&SetFamily::hilton_milner(7, 3).unwrap()),
            "hm(7,3)"
        );
        assert_eq!(
            family_label(&SetFamily::k3_special(7).unwrap()),
            "k3-special(7)"
        );
        let other = SetFamily::new(7, 3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(family_label(&other), "size-1");
    }
}
