use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{int, ratio, Coeff};
use crate::fliess::PiecewiseConstantSignal;
use crate::group::SeriesPair;
use crate::series::Series;
use crate::word::{Letter, Word};

/// Seeded generator of small sparse test objects at truncation `n`.
///
/// Series carry up to four terms with coefficients in `{a/b : |a| <= 3, b <= 2}`,
/// which keeps exact arithmetic cheap while still exercising cancellation.
pub struct Sampler {
    rng: ChaCha8Rng,
    n: usize,
}

impl Sampler {
    pub fn new(seed: u64, n: usize) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), n }
    }

    pub fn trunc(&self) -> usize {
        self.n
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn word(&mut self, max_len: usize) -> Word {
        let len = self.rng.gen_range(0..=max_len);
        Word::from_letters((0..len).map(|_| Letter::ALL[self.rng.gen_range(0..2)]))
    }

    fn coefficient(&mut self) -> Coeff {
        ratio(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=2))
    }

    pub fn series(&mut self) -> Series {
        let mut c = Series::zero(self.n);
        for _ in 0..self.rng.gen_range(0..=4) {
            let w = self.word(self.n);
            let k = self.coefficient();
            c.add_term(w, k);
        }
        c
    }

    pub fn nonzero_series(&mut self) -> Series {
        loop {
            let c = self.series();
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// A group element: the left component has constant term in `{1, 2, -1}`.
    pub fn group_pair(&mut self) -> SeriesPair {
        let k = [1, 2, -1][self.rng.gen_range(0..3)];
        self.pair_with_constant(int(k))
    }

    /// A group element whose left constant term is 1.
    pub fn normalized_pair(&mut self) -> SeriesPair {
        self.pair_with_constant(int(1))
    }

    fn pair_with_constant(&mut self, k: Coeff) -> SeriesPair {
        let mut left = self.series().proper_part();
        left.add_term(Word::empty(), k);
        SeriesPair::new(left, self.series()).expect("same truncation")
    }

    /// An arbitrary tangent vector.
    pub fn tangent(&mut self) -> SeriesPair {
        SeriesPair::new(self.series(), self.series()).expect("same truncation")
    }

    /// A series of relative degree `r in 1..=3` together with `r`.
    pub fn with_relative_degree(&mut self) -> (usize, Series) {
        let n = self.n;
        let r = self.rng.gen_range(1..=3usize.min(n));
        let mut c = Series::zero(n);
        for (w, a) in self.series().terms() {
            c.add_term(Word::x0_pow(w.len()), a.clone());
        }
        c.add_term(Word::linear(r), int(self.rng.gen_range(1..=3)));
        let prefix = Word::x0_pow(r - 1);
        for (w, a) in self.series().terms() {
            if !w.is_empty() && *w != Word::letter(Letter::X1) {
                c.add_term(prefix.concat(w), a.clone());
            }
        }
        (r, c.with_trunc(n))
    }

    /// A signal on `[0, T]` with up to three pieces of length `k/4`.
    pub fn signal(&mut self) -> PiecewiseConstantSignal {
        let mut bps = vec![int(0)];
        let mut vals = vec![];
        for _ in 0..self.rng.gen_range(1..=3) {
            let last = bps.last().expect("nonempty").clone();
            bps.push(last + ratio(self.rng.gen_range(1..=4), 4));
            vals.push(ratio(self.rng.gen_range(-4..=4), 2));
        }
        PiecewiseConstantSignal::new(bps, vals).expect("increasing breakpoints")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let mut a = Sampler::new(7, 5);
        let mut b = Sampler::new(7, 5);
        for _ in 0..20 {
            assert_eq!(a.group_pair(), b.group_pair());
        }
    }

    #[test]
    fn shapes() {
        let mut s = Sampler::new(1, 5);
        for _ in 0..50 {
            assert!(s.group_pair().is_in_group());
            assert!(s.normalized_pair().is_normalized());
            assert!(!s.nonzero_series().is_zero());
            let (r, c) = s.with_relative_degree();
            assert_eq!(crate::reldeg::relative_degree(&c).value(), Some(r));
        }
    }
}
