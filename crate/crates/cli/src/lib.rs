//! Command line support for the double-chain embedders: JSON formats, SVG
//! rendering, instance generation and exhaustive sweeps.

pub mod format;
pub mod svg;
pub mod sweep;

use double_chain::chains::{generate_double_chain, parse_colors, periodic_coloring_16, Color, Coloring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::format::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ColoringSpec {
    /// Shuffled equitable coloring; the seed fixes it.
    RandomEquitable,
    /// `c1` repeats BBWWWWBBBBBBWWWW; `c2` evens out the classes.
    Periodic16,
    /// Given by `--c1` and `--c2`.
    Explicit,
    /// `c1` all black, `c2` all white.
    MonochromaticChains,
}

/// Builds an instance on the standard double-chain of the given sizes.
pub fn generate_instance(
    n1: usize,
    n2: usize,
    spec: ColoringSpec,
    seed: u64,
    explicit: Option<(&str, &str)>,
) -> Result<Instance, String> {
    let dc = generate_double_chain(n1, n2).map_err(|e| e.to_string())?;
    let coloring = match spec {
        ColoringSpec::RandomEquitable => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let extra = if rng.random_bool(0.5) { Color::Black } else { Color::White };
            let n = n1 + n2;
            let mut c: Vec<Color> =
                (0..n).map(|i| if i + 1 == n && n % 2 == 1 { extra } else if i % 2 == 0 { Color::Black } else { Color::White }).collect();
            c.shuffle(&mut rng);
            Coloring::new(c[..n1].to_vec(), c[n1..].to_vec())
        }
        ColoringSpec::Periodic16 => {
            let c1 = periodic_coloring_16(n1);
            let mut black = c1.iter().filter(|&&c| c == Color::Black).count() as i64;
            let mut white = n1 as i64 - black;
            let c2 = (0..n2)
                .map(|_| {
                    if black <= white {
                        black += 1;
                        Color::Black
                    } else {
                        white += 1;
                        Color::White
                    }
                })
                .collect();
            Coloring::new(c1, c2)
        }
        ColoringSpec::Explicit => {
            let (a, b) = explicit.ok_or("explicit coloring needs --c1 and --c2")?;
            Coloring::new(parse_colors(a).map_err(|e| e.to_string())?, parse_colors(b).map_err(|e| e.to_string())?)
        }
        ColoringSpec::MonochromaticChains => Coloring::new(vec![Color::Black; n1], vec![Color::White; n2]),
    };
    coloring.check_fits(&dc).map_err(|e| e.to_string())?;
    Ok(Instance { dc, coloring })
}
