//! Seeded Monte-Carlo channel simulation. Per-trial sub-seeds come from a
//! splitmix64 stream over the master seed, so trials are independent of
//! execution order and every run with the same flags is byte-identical.

use qbch_core::ilrs;
use qbch_core::qbch::{BlockWord, QuasiBchSpec};
use qbch_core::wb;

use crate::DecoderKind;

/// The splitmix64 generator: 64-bit state, one output per step.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw below `n` (desk-scale moduli; the residue bias is far
    /// below anything the measurements resolve).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub decoder: DecoderKind,
    pub errors: usize,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
    pub failures: u64,
    pub miscorrections: u64,
}

impl SimReport {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    pub fn render(&self) -> String {
        format!(
            "decoder={} errors={} trials={} seed={}\n\
             successes      {}\n\
             failures       {}\n\
             miscorrections {}\n\
             success_rate   {:.4}\n",
            self.decoder.name(),
            self.errors,
            self.trials,
            self.seed,
            self.successes,
            self.failures,
            self.miscorrections,
            self.success_rate(),
        )
    }
}

/// One trial: random message, random error of exactly `errors` blocks
/// (distinct uniform positions, uniform nonzero blocks), decode, classify.
fn run_trial(
    spec: &QuasiBchSpec,
    eig: &ilrs::EigenData,
    decoder: DecoderKind,
    errors: usize,
    rng: &mut SplitMix64,
) -> (bool, bool) {
    let msg: Vec<u64> = (0..spec.dim()).map(|_| rng.below(spec.q())).collect();
    let sent = spec.encode(&msg).expect("message shape fixed");

    let mut positions: Vec<usize> = (0..spec.m()).collect();
    for i in 0..errors {
        let j = i + rng.below((spec.m() - i) as u64) as usize;
        positions.swap(i, j);
    }
    let mut err_symbols = vec![0u64; spec.length()];
    for &pos in &positions[..errors] {
        loop {
            let block: Vec<u64> = (0..spec.ell()).map(|_| rng.below(spec.q())).collect();
            if block.iter().any(|&s| s != 0) {
                err_symbols[pos * spec.ell()..(pos + 1) * spec.ell()].copy_from_slice(&block);
                break;
            }
        }
    }
    let error = BlockWord::new(spec.q(), spec.ell(), err_symbols).expect("valid error word");
    let received = sent.add(&error).expect("same shape");

    let outcome = match decoder {
        DecoderKind::Wb => wb::decode(spec, &received),
        DecoderKind::Ilrs => ilrs::decode_with(eig, spec, &received),
        DecoderKind::Collab => ilrs::decode_collaborative_with(eig, spec, &received),
    };
    match outcome {
        Ok(word) if word == sent => (true, false),
        Ok(_) => (false, true),
        Err(_) => (false, false),
    }
}

/// Runs `trials` independent seeded trials and tallies the outcomes.
pub fn simulate(
    spec: &QuasiBchSpec,
    decoder: DecoderKind,
    errors: usize,
    trials: u64,
    seed: u64,
) -> SimReport {
    let eig = ilrs::diagonalize(spec).expect("valid spec diagonalizes");
    let mut master = SplitMix64::new(seed);
    let mut report = SimReport {
        decoder,
        errors,
        trials,
        seed,
        successes: 0,
        failures: 0,
        miscorrections: 0,
    };
    for _ in 0..trials {
        let trial_seed = master.next_u64();
        let mut rng = SplitMix64::new(trial_seed);
        let (success, miscorrection) = run_trial(spec, &eig, decoder, errors, &mut rng);
        if success {
            report.successes += 1;
        } else if miscorrection {
            report.miscorrections += 1;
        } else {
            report.failures += 1;
        }
    }
    report
}
