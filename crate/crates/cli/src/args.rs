use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "aqlam", version, about = "Rationality reports for compact forms and A_q(lambda) modules")]
pub struct Cli {
    /// Read descriptors (one JSON object, an array, or JSON lines) from a file.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compact forms of simple types without quaternionic irreducibles.
    ClassifyForms {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Frobenius-Schur indicator of an irreducible of a compact form.
    Fs {
        #[arg(long = "type")]
        cartan_type: Option<String>,
        #[arg(long, default_value = "sc")]
        form: String,
        /// Highest weight in fundamental-weight coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        /// Also run the invariant-counting oracle.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Rational model of a module over a quadratic field, or a certificate that none exists.
    Descend {
        /// Name of a module from the built-in suite.
        #[arg(long)]
        curated: Option<String>,
    },
    /// Ramified places of the quaternion algebra (a, b) over Q.
    LocalGlobal {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Invariants and field of definition of A_q(lambda).
    AqReport {
        #[arg(long = "type")]
        cartan_type: Option<String>,
        #[arg(long, default_value = "sc")]
        form: String,
        /// compact, equal_rank_inner, complex, gl_n_real or gl_n_complex.
        #[arg(long, default_value = "compact")]
        form_kind: String,
        /// 1-based simple roots marked noncompact.
        #[arg(long, value_delimiter = ',')]
        marks: Vec<usize>,
        /// 1-based simple roots of the Levi; empty for the Borel.
        #[arg(long, value_delimiter = ',')]
        levi: Vec<usize>,
        /// Coordinates of lambda; integers or p/q.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<String>,
        /// K realizes the full Weyl group.
        #[arg(long)]
        full_weyl: bool,
        #[arg(long)]
        include_center: bool,
        #[arg(long)]
        semi_admissible: Option<bool>,
        #[arg(long)]
        quasi_split: Option<bool>,
        /// Case-list row asserted for the group.
        #[arg(long = "case")]
        declared_case: Option<String>,
    },
    /// Kostant terms and c_q of a finite-dimensional irreducible.
    Character {
        #[arg(long = "type")]
        cartan_type: Option<String>,
        /// 1-based simple roots of the Levi; empty for the Borel.
        #[arg(long, value_delimiter = ',')]
        levi: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
    /// Regenerate the computable golden tables and diff them.
    Verify {
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
}
