use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{EPolynomial, Ring, SeriesPrefix, UniPoly};
use crate::error::Result;
use crate::zeta::{Specialize, SpecializationMap};

use super::certificate::{check_global, RationalCertificate};
use super::hankel::determinantal_test;
use super::pointwise::{pointwise_test, PointwiseVerdict};

/// Fixed integer points used to sample homomorphisms `Z[u, v] -> Q`.
pub const PROBE_POINTS: [(i64, i64); 5] = [(1, 1), (2, 3), (3, 5), (5, 2), (-1, 2)];

/// Outcome of running one globally rational series through the chain
/// global => determinantal => pointwise.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainInstance {
    pub deg_g: usize,
    pub deg_h: usize,
    pub prefix_order: usize,
    pub global: bool,
    /// Smallest `n` with the `(deg g + 1)`-window vanishing at every `i > n`.
    pub stable_offset: Option<i64>,
    /// `max(-1, deg h - deg g)`: vanishing must hold for every `i > deg h - deg g`.
    pub offset_bound: i64,
    pub pointwise: bool,
}

impl ChainInstance {
    pub fn determinantal(&self) -> bool {
        self.stable_offset.is_some_and(|n| n <= self.offset_bound)
    }

    pub fn holds(&self) -> bool {
        self.global && self.determinantal() && self.pointwise
    }

    pub fn to_json(&self) -> Value {
        json!({
            "deg_g": self.deg_g,
            "deg_h": self.deg_h,
            "K": self.prefix_order,
            "global": self.global,
            "stable_offset": self.stable_offset,
            "offset_bound": self.offset_bound,
            "determinantal": self.determinantal(),
            "pointwise": self.pointwise,
            "holds": self.holds(),
        })
    }
}

/// Expands `h/g` to order `2(deg g + deg h) + 2` and runs all three tests.
pub fn chain_check<R: Specialize>(g: &UniPoly<R>, h: &UniPoly<R>) -> Result<ChainInstance> {
    let deg_g = g.degree().unwrap_or(0);
    let deg_h = h.degree().unwrap_or(0);
    let order = 2 * (deg_g + deg_h) + 2;
    let f = SeriesPrefix::from_quotient(h, g, order)?;
    let cert = RationalCertificate::new(g.clone(), h.clone(), order);
    let global = check_global(&f, &cert)?;
    let reports = determinantal_test(&f, deg_g + 1)?;
    let stable_offset = reports[deg_g].first_stable_offset;
    let maps: Vec<SpecializationMap> = PROBE_POINTS.iter().map(|&(u, v)| SpecializationMap::new(u, v)).collect();
    let pw = pointwise_test(&f, &maps, deg_g)?;
    let mut pointwise = true;
    for (entry, map) in pw.entries.iter().zip(&maps) {
        let PointwiseVerdict::Rational(found) = &entry.verdict else {
            pointwise = false;
            continue;
        };
        let expected = RationalCertificate::new(g.try_map(|c| c.specialize(map))?, h.try_map(|c| c.specialize(map))?, order);
        pointwise &= found.same_function(&expected);
    }
    Ok(ChainInstance {
        deg_g,
        deg_h,
        prefix_order: order,
        global,
        stable_offset,
        offset_bound: (deg_h as i64 - deg_g as i64).max(-1),
        pointwise,
    })
}

fn random_coeff(rng: &mut ChaCha8Rng) -> EPolynomial {
    let n = rng.gen_range(1..=3);
    EPolynomial::from_terms((0..n).map(|_| (rng.gen_range(0..=1u32), rng.gen_range(0..=1u32), rng.gen_range(-3i64..=3))))
}

fn random_nonzero_coeff(rng: &mut ChaCha8Rng) -> EPolynomial {
    loop {
        let c = random_coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random `(g, h)` over `Z[u, v]` with `g(0) = 1`, `deg g <= 3`,
/// `deg h <= 3`, both degrees exact.
pub fn random_certificate(rng: &mut ChaCha8Rng) -> (UniPoly<EPolynomial>, UniPoly<EPolynomial>) {
    let dg = rng.gen_range(0..=3);
    let dh = rng.gen_range(0..=3);
    let mut g = vec![EPolynomial::one()];
    for i in 1..=dg {
        g.push(if i == dg { random_nonzero_coeff(rng) } else { random_coeff(rng) });
    }
    let h: Vec<EPolynomial> =
        (0..=dh).map(|i| if i == dh { random_nonzero_coeff(rng) } else { random_coeff(rng) }).collect();
    (UniPoly::new(g), UniPoly::new(h))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    pub seed: u64,
    pub instances: Vec<ChainInstance>,
}

impl ChainReport {
    pub fn failures(&self) -> usize {
        self.instances.iter().filter(|i| !i.holds()).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "samples": self.instances.len(),
            "failures": self.failures(),
            "instances": self.instances.iter().map(ChainInstance::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Seeded sample of globally rational series over `Z[u, v]`; every
/// instance must satisfy the implication chain.
pub fn implication_chain_probe(seed: u64, samples: usize) -> Result<ChainReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..samples).map(|_| random_certificate(&mut rng)).collect();
    let instances = pairs.iter().map(|(g, h)| chain_check(g, h)).collect::<Result<_>>()?;
    Ok(ChainReport { seed, instances })
}
