//! Littlewood-Richardson coefficients by LR-tableau enumeration.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partition::Partition;

type Key = (Partition, Partition, Partition);

fn memo() -> &'static RwLock<HashMap<Key, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `c^λ_{μν}`: the number of semistandard fillings of `λ/μ` with content
/// `ν` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(lambda == nu);
    }
    if nu.is_empty() {
        return u64::from(lambda == mu);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = memo().read().expect("lr memo").get(&key) {
        return v;
    }
    let v = count_tableaux(lambda, mu, nu);
    memo().write().expect("lr memo").insert(key, v);
    v
}

struct Search<'a> {
    /// Skew cells in reading order: rows top to bottom, right to left.
    cells: Vec<(usize, usize)>,
    lambda: &'a Partition,
    mu: &'a Partition,
    content: Vec<usize>,
    grid: Vec<Vec<u8>>,
    used: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        // Weakly increasing rows: the right neighbour (already filled) bounds
        // this entry from above.
        let mut hi = self.content.len();
        if c + 1 < self.lambda.part(r) {
            hi = hi.min(self.grid[r][c + 1] as usize);
        }
        // Strictly increasing columns.
        let lo = if r > 0 && c >= self.mu.part(r - 1) { self.grid[r - 1][c] as usize + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            let i = v - 1;
            if self.used[i] == self.content[i] {
                continue;
            }
            if i > 0 && self.used[i] + 1 > self.used[i - 1] {
                continue;
            }
            self.used[i] += 1;
            self.grid[r][c] = v as u8;
            total += self.run(idx + 1);
            self.used[i] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

fn count_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut s = Search {
        cells,
        lambda,
        mu,
        content: nu.parts().to_vec(),
        grid: (0..lambda.len()).map(|r| vec![0u8; lambda.part(r)]).collect(),
        used: vec![0; nu.len()],
    };
    s.run(0)
}

/// `(s_{λ/ν}, s_{μ/ν̄}) = Σ_η c^λ_{ν,η} c^μ_{ν̄,η}`.
pub fn skew_schur_pairing(lambda: &Partition, nu: &Partition, mu: &Partition, nu_bar: &Partition) -> u64 {
    if nu.size() > lambda.size() || nu_bar.size() > mu.size() {
        return 0;
    }
    if lambda.size() - nu.size() != mu.size() - nu_bar.size() {
        return 0;
    }
    lambda
        .subpartitions_removing(nu.size())
        .iter()
        .filter(|eta| mu.contains(eta))
        .map(|eta| {
            let a = lr_coefficient(lambda, nu, eta);
            if a == 0 {
                0
            } else {
                a * lr_coefficient(mu, nu_bar, eta)
            }
        })
        .sum()
}

/// Multiplicity of `V_{(ν, ν̄)}` in `V_λ ⊗ V_μ^*` for `gl_n`, `n` large.
pub fn gl_mixed_multiplicity(lambda: &Partition, mu: &Partition, nu: &Partition, nu_bar: &Partition) -> u64 {
    skew_schur_pairing(lambda, nu, mu, nu_bar)
}

/// `Σ_{ζ,σ,τ} c^λ_{ζσ} c^μ_{ζτ} c^ν_{στ}`: the multiplicity of `V_ν` in
/// `V_λ ⊗ V_μ` for orthogonal groups of large rank.
pub fn osp_multiplicity(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // |σ| + |τ| = |ν| and |λ| − |σ| = |μ| − |τ| fix |σ|.
    let twice = lambda.size() as i64 - mu.size() as i64 + nu.size() as i64;
    if twice < 0 || twice % 2 != 0 || twice / 2 > nu.size() as i64 {
        return 0;
    }
    let s = (twice / 2) as usize;
    if s > lambda.size() {
        return 0;
    }
    let sigmas: Vec<Partition> = Partition::all_of_size(s).into_iter().filter(|x| nu.contains(x)).collect();
    let taus: Vec<Partition> = Partition::all_of_size(nu.size() - s).into_iter().filter(|x| nu.contains(x)).collect();
    let mut total = 0;
    for zeta in lambda.subpartitions_removing(s) {
        if !mu.contains(&zeta) {
            continue;
        }
        for sigma in &sigmas {
            let a = lr_coefficient(lambda, &zeta, sigma);
            if a == 0 {
                continue;
            }
            for tau in &taus {
                let b = lr_coefficient(nu, sigma, tau);
                if b != 0 {
                    total += a * b * lr_coefficient(mu, &zeta, tau);
                }
            }
        }
    }
    total
}
