//! Sweep all reduced fractions 0 < alpha < beta <= 1/2 with denominators up
//! to a bound (45 by default, the bound from the rationality case analysis)
//! and report every pair whose sine ratio is exactly rational.
//!
//!     cargo run --release -p ngonsurf --example sine_ratio_sweep [max_den]

use std::time::Instant;

use ngonsurf::exactnum::{rat, sine_ratio_rational, Rational};

fn main() {
    let max_den: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(45);
    let start = Instant::now();

    let mut fractions: Vec<Rational> = Vec::new();
    for den in 2..=max_den {
        for num in 1..den {
            let f = rat(num, den);
            if *f.denom() == den.into() && f <= rat(1, 2) {
                fractions.push(f);
            }
        }
    }
    fractions.sort();
    println!(
        "testing {} fractions, {} ordered pairs",
        fractions.len(),
        fractions.len() * (fractions.len() - 1) / 2
    );

    let mut hits = Vec::new();
    for (i, alpha) in fractions.iter().enumerate() {
        for beta in &fractions[i + 1..] {
            if let Some(q) = sine_ratio_rational(alpha, beta).unwrap() {
                hits.push((alpha.clone(), beta.clone(), q));
            }
        }
    }

    for (a, b, q) in &hits {
        println!("sin(pi {a}) / sin(pi {b}) = {q}");
    }
    println!(
        "{} rational ratio(s) found in {:.2?}",
        hits.len(),
        start.elapsed()
    );
}
