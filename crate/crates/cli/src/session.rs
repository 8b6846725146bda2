//! Session grammar:
//!
//! ```text
//! session   := statement (";" statement)*
//! statement := "ring" field "[" names "]" | "ideal" "(" polys ")" | command flags*
//! field     := "Q" | "F" prime
//! ```

use std::fmt;

use clap::{Args, Parser, Subcommand};
use jetforge_core::algebra::{parse_poly, Field, Poly, PolyRing, RingRef};

/// A located problem in the session text. Lines and columns start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for Diagnostic {}

fn locate(text: &str, offset: usize, message: impl Into<String>) -> Diagnostic {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
    Diagnostic {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Parser, Debug, Clone)]
#[command(name = "jetforge", no_binary_name = true, disable_help_subcommand = true)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    /// Indented JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Critical pairs the Gröbner engine may process per basis.
    #[arg(long, global = true)]
    pub max_pairs: Option<u64>,
    /// Search-space cap for point enumeration.
    #[arg(long, global = true)]
    pub max_points: Option<u64>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct DatumArgs {
    /// Asserted codimension; defaults to the number of generators.
    #[arg(long)]
    pub codim: Option<usize>,
    /// Do not assert that the variety is integral.
    #[arg(long)]
    pub not_integral: bool,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Jet equations F_0..F_m of every generator.
    Jets {
        #[arg(long)]
        m: usize,
        /// Build the equations through the derivation D instead of substitution.
        #[arg(long)]
        derivation: bool,
    },
    /// Krull dimension of the ideal.
    Dim,
    /// Dimension of the fiber of pi_m over a point.
    Fiber {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<String>,
        #[arg(long)]
        m: usize,
    },
    /// Certify irreducibility of X_m.
    Irreducible {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        datum: DatumArgs,
    },
    /// Certify pure dimensionality of X_m.
    Puredim {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        datum: DatumArgs,
    },
    /// dim X_m and dim pi_m^{-1}(X_sing) for m = 0..=max-m.
    Table {
        #[arg(long)]
        max_m: usize,
        #[command(flatten)]
        datum: DatumArgs,
    },
    /// Log canonical threshold estimate of a hypersurface.
    Lct {
        #[arg(long)]
        max_m: usize,
        /// Periodicity of the jet dimensions, if known; makes the estimate exact.
        #[arg(long)]
        period: Option<usize>,
    },
    /// Stratum analysis of x_1^d_1 + ... + x_n^d_n.
    Diagonal {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// Discrepancy conditions on resolution data from a JSON file.
    Rescheck {
        #[arg(long)]
        file: String,
    },
    /// Jet certification of the toric variety of a Nakajima ladder (JSON file).
    Toric {
        #[arg(long)]
        file: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Jet nilpotent-cone checks for a built-in algebra or a JSON datum.
    Nilcone {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        degree_bound: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Prime for the randomized checks.
        #[arg(long, default_value_t = 101)]
        prime: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Field for the exact Gröbner computations.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Exact number of F_q-points.
    Count {
        #[arg(long)]
        q: u32,
    },
    /// Dimension guess from point counts.
    Dimest {
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u32>,
    },
    /// Fiber dimensions against N m - floor(m/a) for a hypersurface.
    Multbound {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<String>,
        #[arg(long)]
        max_m: usize,
    },
    /// dim pi_{2m}^{-1}(x) against dim X + m dim T_x X.
    Tangent {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<String>,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        datum: DatumArgs,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Jets { .. } => "jets",
            Command::Dim => "dim",
            Command::Fiber { .. } => "fiber",
            Command::Irreducible { .. } => "irreducible",
            Command::Puredim { .. } => "puredim",
            Command::Table { .. } => "table",
            Command::Lct { .. } => "lct",
            Command::Diagonal { .. } => "diagonal",
            Command::Rescheck { .. } => "rescheck",
            Command::Toric { .. } => "toric",
            Command::Nilcone { .. } => "nilcone",
            Command::Count { .. } => "count",
            Command::Dimest { .. } => "dimest",
            Command::Multbound { .. } => "multbound",
            Command::Tangent { .. } => "tangent",
        }
    }

    /// Whether the command reads the declared ring and ideal.
    pub fn needs_ideal(&self) -> bool {
        !matches!(
            self,
            Command::Diagonal { .. } | Command::Rescheck { .. } | Command::Toric { .. } | Command::Nilcone { .. }
        )
    }
}

#[derive(Debug, Clone)]
pub struct Session {
    pub ring: Option<RingRef>,
    pub generators: Vec<Poly>,
    pub invocation: Invocation,
    /// The command statement as written.
    pub command_text: String,
}

/// Parses `Q` or `F<p>`.
pub fn parse_field(text: &str) -> Result<Field, String> {
    let text = text.trim();
    if text == "Q" {
        return Ok(Field::Rational);
    }
    let digits = text.strip_prefix('F').ok_or_else(|| format!("unknown field `{text}`, expected Q or F<p>"))?;
    let p: u32 = digits.parse().map_err(|_| format!("bad modulus `{digits}`"))?;
    Field::prime(p).map_err(|_| format!("modulus {p} is not a prime below 2^31"))
}

/// Byte spans of the `;`-separated statements, trimmed.
fn statements(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(';') {
        let lead = piece.len() - piece.trim_start().len();
        let body = piece.trim();
        if !body.is_empty() {
            out.push((start + lead, body));
        }
        start += piece.len() + 1;
    }
    out
}

fn keyword<'a>(body: &'a str, word: &str) -> Option<&'a str> {
    let rest = body.strip_prefix(word)?;
    (rest.is_empty() || rest.starts_with(char::is_whitespace) || rest.starts_with(['[', '('])).then_some(rest)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Byte offset of a subslice within `text`.
fn offset_in(text: &str, sub: &str) -> usize {
    sub.as_ptr() as usize - text.as_ptr() as usize
}

fn parse_ring(text: &str, rest: &str) -> Result<RingRef, Diagnostic> {
    let base = offset_in(text, rest);
    let Some(open) = rest.find('[') else {
        return Err(locate(text, base, "expected `Field[variables]` after `ring`"));
    };
    let field_text = &rest[..open];
    let lead = field_text.len() - field_text.trim_start().len();
    let field = parse_field(field_text).map_err(|m| locate(text, base + lead, m))?;
    let Some(close) = rest.find(']') else {
        return Err(locate(text, base + open, "unclosed `[`"));
    };
    if !rest[close + 1..].trim().is_empty() {
        return Err(locate(text, base + close + 1, "unexpected input after `]`"));
    }
    let mut names = Vec::new();
    let inner = &rest[open + 1..close];
    if !inner.trim().is_empty() {
        let mut offset = base + open + 1;
        for name in inner.split(',') {
            let lead = name.len() - name.trim_start().len();
            let n = name.trim();
            if !is_identifier(n) {
                return Err(locate(text, offset + lead, format!("bad variable name `{n}`")));
            }
            if names.iter().any(|x: &String| x == n) {
                return Err(locate(text, offset + lead, format!("duplicate variable `{n}`")));
            }
            names.push(n.to_string());
            offset += name.len() + 1;
        }
    }
    PolyRing::new(names, field).map_err(|e| locate(text, base, e.to_string()))
}

fn parse_ideal(text: &str, rest: &str, ring: &RingRef) -> Result<Vec<Poly>, Diagnostic> {
    let base = offset_in(text, rest);
    let trimmed = rest.trim_start();
    let open = base + rest.len() - trimmed.len();
    if !trimmed.starts_with('(') {
        return Err(locate(text, open, "expected `(` after `ideal`"));
    }
    let mut depth = 0usize;
    let mut pieces = Vec::new();
    let mut piece_start = open + 1;
    let mut close = None;
    for (i, c) in trimmed.char_indices() {
        let abs = open + i;
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    pieces.push((piece_start, &text[piece_start..abs]));
                    close = Some(abs);
                    break;
                }
            }
            ',' if depth == 1 => {
                pieces.push((piece_start, &text[piece_start..abs]));
                piece_start = abs + 1;
            }
            _ => {}
        }
    }
    let Some(close) = close else {
        return Err(locate(text, open, "unclosed `(`"));
    };
    let after = &text[close + 1..base + rest.len()];
    if !after.trim().is_empty() {
        return Err(locate(text, close + 1, "unexpected input after `)`"));
    }
    if pieces.len() == 1 && pieces[0].1.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut gens = Vec::new();
    for (start, src) in pieces {
        if src.trim().is_empty() {
            return Err(locate(text, start, "empty generator"));
        }
        let p = parse_poly(ring, src).map_err(|e| locate(text, start + e.offset, e.message))?;
        if !p.is_zero() {
            gens.push(p);
        }
    }
    Ok(gens)
}

/// Splits flags on whitespace; double quotes group.
fn tokens(body: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut any = false;
    for c in body.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        out.push(cur);
    }
    out
}

pub fn parse_input(text: &str) -> Result<Session, Diagnostic> {
    let mut ring: Option<RingRef> = None;
    let mut generators = None;
    let mut command: Option<(Invocation, String)> = None;
    for (at, body) in statements(text) {
        if command.is_some() {
            return Err(locate(text, at, "statements after the command"));
        }
        if let Some(rest) = keyword(body, "ring") {
            if ring.is_some() {
                return Err(locate(text, at, "ring declared twice"));
            }
            ring = Some(parse_ring(text, rest)?);
        } else if let Some(rest) = keyword(body, "ideal") {
            let Some(r) = &ring else {
                return Err(locate(text, at, "`ideal` before any `ring` declaration"));
            };
            if generators.is_some() {
                return Err(locate(text, at, "ideal declared twice"));
            }
            generators = Some(parse_ideal(text, rest, r)?);
        } else {
            let inv = Invocation::try_parse_from(tokens(body)).map_err(|e| {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("bad command").trim_start_matches("error: ").to_string();
                locate(text, at, first)
            })?;
            command = Some((inv, body.to_string()));
        }
    }
    let Some((invocation, command_text)) = command else {
        return Err(locate(text, text.len(), "missing command"));
    };
    if invocation.command.needs_ideal() && ring.is_none() {
        return Err(locate(text, 0, format!("`{}` needs a `ring` declaration", invocation.command.name())));
    }
    Ok(Session {
        ring,
        generators: generators.unwrap_or_default(),
        invocation,
        command_text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_offsets() {
        let s = statements(" ring Q[x] ;\n ideal (x);");
        assert_eq!(s, vec![(1, "ring Q[x]"), (14, "ideal (x)")]);
    }

    #[test]
    fn quoted_tokens() {
        assert_eq!(tokens(r#"fiber --point "0, 1" --m 2"#), ["fiber", "--point", "0, 1", "--m", "2"]);
    }

    #[test]
    fn fields() {
        assert_eq!(parse_field("F7"), Ok(Field::Prime(7)));
        assert!(parse_field("F8").is_err());
        assert!(parse_field("R").is_err());
    }
}
