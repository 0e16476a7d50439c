use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hilbert::{
    box_membership_test, coatom_from_antilinear, dual_covering_counterexample, random,
    verify_point_biorthogonality, BoxVerdict, GRSubspace, GaussianRational,
};
use crate::report::Verdict;

use super::Outcome;

pub const PERP_SAMPLES: usize = 100;
pub const PAIR_SAMPLES: usize = 50;
pub const ANTILINEAR_MAPS: usize = 5;
pub const PAIRS_PER_MAP: usize = 100;

pub fn perp_involution(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Outcome {
    for i in 0..PERP_SAMPLES {
        let v = random::subspace(rng, m * n);
        let p = v.perp();
        if p.perp() != v || v.dim() + p.dim() != m * n {
            return Outcome::new(Verdict::Fail, format!("sample {i} dim {}", v.dim()));
        }
    }
    Outcome::pass(format!("subspaces {PERP_SAMPLES}"))
}

pub fn point_biorthogonality(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Outcome {
    for i in 0..PAIR_SAMPLES {
        if !verify_point_biorthogonality(&random::pair(rng, m, n)) {
            return Outcome::new(Verdict::Fail, format!("sample {i}"));
        }
    }
    Outcome::pass(format!("pairs {PAIR_SAMPLES}"))
}

pub fn antilinear_agreement(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Result<Outcome> {
    for k in 0..ANTILINEAR_MAPS {
        let coatom = coatom_from_antilinear(&random::antilinear(rng, m, n))?;
        for i in 0..PAIRS_PER_MAP {
            let pair = random::pair(rng, m, n);
            if coatom.contains(&pair) != coatom.predicted(&pair) {
                return Ok(Outcome::new(Verdict::Fail, format!("map {k} pair {i}")));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "maps {ANTILINEAR_MAPS} pairs {PAIRS_PER_MAP}"
    )))
}

pub fn box_membership(v: &GRSubspace, m: usize, n: usize) -> Result<Outcome> {
    let verdict = box_membership_test(v, m, n)?;
    let w = format!("dim {} verdict {verdict}", v.dim());
    Ok(Outcome::new(
        match verdict {
            BoxVerdict::InBox => Verdict::Pass,
            BoxVerdict::Not => Verdict::Fail,
            BoxVerdict::Unknown => Verdict::Unknown,
        },
        w,
    ))
}

pub fn dual_covering_failure(m: usize, n: usize) -> Result<Outcome> {
    let r = dual_covering_counterexample::<GaussianRational>(m, n)?;
    let w = format!(
        "coatom {} closed {} disjoint {} top {} chain {}",
        r.x_is_coatom, r.r_closed, r.disjoint, r.join_is_top, r.strict_chain
    );
    Ok(Outcome::new(Verdict::from_bool(r.passes()), w))
}
