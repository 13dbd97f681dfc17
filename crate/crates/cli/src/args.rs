use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "morphic",
    version,
    about = "Words, morphisms and their fixed points"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a prefix of the fixed point of a morphism
    Gen(GenArgs),
    /// Class P membership, conjugates, symmetry points, characteristic polynomial
    Analyze(AnalyzeArgs),
    /// List one level of the stabilizer of the fixed point of a->aca,b->cab,c->b
    Stab(StabArgs),
    /// Run every named check and report pass or fail
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Morphism literal such as "a->aca,b->cab,c->b"
    pub morphism: String,
    /// First letter of the fixed point
    #[arg(long)]
    pub seed: char,
    /// Number of letters to print
    #[arg(long)]
    pub n: usize,
    /// Declared alphabet, in order (inferred from the literal by default)
    #[arg(long)]
    pub alphabet: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Morphism literal such as "a->abba,b->baab"
    pub morphism: String,
    /// Class P decomposition and class P conjugates
    #[arg(long)]
    pub classp: bool,
    /// Every conjugate with its shift word
    #[arg(long)]
    pub conjugates: bool,
    /// Points of symmetry of every image
    #[arg(long)]
    pub symmetry: bool,
    /// Characteristic polynomial of the incidence matrix
    #[arg(long)]
    pub charpoly: bool,
    /// Longest shift word tried when enumerating conjugates
    #[arg(long, default_value_t = 20)]
    pub cap: usize,
    /// Declared alphabet, in order (inferred from the literal by default)
    #[arg(long)]
    pub alphabet: Option<String>,
    /// Also print intermediate data
    #[arg(long)]
    pub verbose: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

impl AnalyzeArgs {
    /// With no analysis selected, all of them run.
    pub fn all(&self) -> bool {
        !(self.classp || self.conjugates || self.symmetry || self.charpoly)
    }
}

#[derive(Debug, Args)]
pub struct StabArgs {
    /// Level
    #[arg(long)]
    pub k: usize,
    /// Also factor each element over the level-1 elements
    #[arg(long)]
    pub verbose: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest k for checks on powers of gamma and on p_k
    #[arg(long, default_value_t = 6, value_parser = positive)]
    pub kmax: usize,
    /// Largest stabilizer level swept for class P conjugates
    #[arg(long, default_value_t = 5, value_parser = positive)]
    pub stab_kmax: usize,
    /// How far into the fixed point factors are searched
    #[arg(long, default_value_t = 100_000, value_parser = positive)]
    pub prefix_bound: usize,
    /// Longest word in the exhaustive primitivity check
    #[arg(long, default_value_t = 12, value_parser = positive)]
    pub primitivity_maxlen: usize,
    /// Print witnesses of passing checks too
    #[arg(long)]
    pub verbose: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Swap the first two images of the named fixture before running
    #[arg(long, hide = true)]
    pub corrupt_fixture: Option<String>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}
