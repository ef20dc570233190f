//! Seeded generation of random rationals, sequences and descriptors.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use wrm_core::{BoundaryPair, GroupElement, Rational, RecurrenceParams, SequenceSpec, WrmDescriptor};

pub type TrialRng = ChaCha8Rng;

/// Seed used when neither `--seed` nor `$WRM_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x5EED_2024_0F0F_1234;

pub fn rng_for(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-trial seed, stable across runs and independent of scheduling.
pub fn trial_seed(master: u64, suite: &str, trial: u64) -> u64 {
    // FNV-1a over the suite name
    let salt = suite
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    mix(mix(master ^ salt).wrapping_add(trial))
}

/// Draws rationals `p/q` with `p ∈ [-num_bound, num_bound]`, `q ∈ [1, den_bound]`,
/// counting every sample rejected for violating a hypothesis.
pub struct Sampler<'a> {
    pub rng: &'a mut TrialRng,
    pub num_bound: i64,
    pub den_bound: i64,
    pub rejections: u64,
}

impl<'a> Sampler<'a> {
    pub fn new(rng: &'a mut TrialRng, num_bound: i64, den_bound: i64) -> Self {
        Sampler { rng, num_bound, den_bound, rejections: 0 }
    }

    pub fn rational(&mut self) -> Rational {
        let p = self.rng.gen_range(-self.num_bound..=self.num_bound);
        let q = self.rng.gen_range(1..=self.den_bound);
        Rational::new(p, q).expect("denominator is positive")
    }

    /// Resamples until `accept` holds.
    pub fn rational_where(&mut self, accept: impl Fn(&Rational) -> bool) -> Rational {
        loop {
            let r = self.rational();
            if accept(&r) {
                return r;
            }
            self.rejections += 1;
        }
    }

    pub fn nonzero(&mut self) -> Rational {
        self.rational_where(|r| !r.is_zero())
    }

    pub fn size(&mut self, max_n: usize) -> usize {
        self.rng.gen_range(1..=max_n)
    }

    pub fn index(&mut self, below: usize) -> usize {
        self.rng.gen_range(0..below)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn element(&mut self) -> GroupElement {
        let v = self.nonzero();
        GroupElement::new(v, self.rational()).expect("v is nonzero")
    }

    pub fn params(&mut self) -> RecurrenceParams {
        RecurrenceParams::new(self.rational(), self.rational(), self.rational())
    }

    /// Parameters with `y + x z != 0`.
    pub fn nonsingular_params(&mut self) -> RecurrenceParams {
        loop {
            let p = self.params();
            if !p.weight().is_zero() {
                return p;
            }
            self.rejections += 1;
        }
    }

    /// A random generator of any kind. Explicit lists get exactly `n` entries.
    pub fn sequence_spec(&mut self, n: usize) -> SequenceSpec {
        match self.rng.gen_range(0..5) {
            0 => SequenceSpec::Geometric { c: self.rational(), q: self.rational() },
            1 => SequenceSpec::Arithmetic { a: self.rational(), d: self.rational() },
            2 => SequenceSpec::Constant(self.rational()),
            3 => SequenceSpec::Delta(self.rng.gen_range(0..n)),
            _ => SequenceSpec::Explicit((0..n).map(|_| self.rational()).collect()),
        }
    }

    /// Random boundary specs sharing their first term.
    pub fn boundary_specs(&mut self, n: usize) -> (SequenceSpec, SequenceSpec) {
        let alpha = self.sequence_spec(n);
        let gamma = alpha.eval(n).expect("specs are generated with n entries").first().clone();
        let beta = with_first_term(self.sequence_spec(n), &gamma, n);
        (alpha, beta)
    }

    pub fn descriptor(&mut self, params: RecurrenceParams, n: usize) -> (WrmDescriptor, String) {
        let (alpha, beta) = self.boundary_specs(n);
        let d = WrmDescriptor::from_specs(params.clone(), &alpha, &beta, n)
            .expect("boundary specs share their first term");
        let label = format!("params={params} alpha={alpha} beta={beta} n={n}");
        (d, label)
    }
}

/// Adjusts `spec` so its first term is `gamma`, keeping its kind when possible.
pub fn with_first_term(spec: SequenceSpec, gamma: &Rational, n: usize) -> SequenceSpec {
    match spec {
        SequenceSpec::Geometric { q, .. } => SequenceSpec::Geometric { c: gamma.clone(), q },
        SequenceSpec::Arithmetic { d, .. } => SequenceSpec::Arithmetic { a: gamma.clone(), d },
        SequenceSpec::Constant(_) => SequenceSpec::Constant(gamma.clone()),
        SequenceSpec::Delta(0) if gamma.is_one() => SequenceSpec::Delta(0),
        SequenceSpec::Delta(k) if k > 0 && gamma.is_zero() => SequenceSpec::Delta(k),
        other => {
            let mut values = other.eval(n).expect("generated specs cover n").entries().to_vec();
            values[0] = gamma.clone();
            SequenceSpec::Explicit(values)
        }
    }
}

pub fn boundary_from(alpha: &SequenceSpec, beta: &SequenceSpec, n: usize) -> BoundaryPair {
    BoundaryPair::from_specs(alpha, beta, n).expect("specs share their first term")
}
