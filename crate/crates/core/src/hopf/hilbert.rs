use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::word::Letter;

/// Graded dimension counts at one degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertRow {
    pub degree: usize,
    pub p_a: BigUint,
    pub p_b: BigUint,
    pub p: BigUint,
    pub dim_h: BigUint,
    pub closed_p_a: BigUint,
    pub closed_p_b: BigUint,
    pub closed_dim_h: BigUint,
}

impl HilbertRow {
    pub fn consistent(&self) -> bool {
        self.p_a == self.closed_p_a && self.p_b == self.closed_p_b && self.dim_h == self.closed_dim_h
    }
}

/// Rows for degrees `0..=max_degree`.
///
/// `p_{a,k}` and `p_{b,k}` count coordinate maps of degree `k` by listing
/// words, and `dim H_k` counts multisets of those generators one generator
/// at a time. The `closed_*` columns expand `X/(1-X-X²)`,
/// `(X+X²)/(1-X-X²)` and `∏ (1-X^j)^{-p_j}` as power series. Word listing
/// is exponential in `k`.
pub fn hilbert_dimensions(max_degree: usize) -> Vec<HilbertRow> {
    let mut words_of_weight = vec![0u64; max_degree + 1];
    count_words(0, max_degree, &mut words_of_weight);

    // b_η has degree wt(η) for η nonempty; a_η has degree wt(η) + 1.
    let p_b: Vec<BigUint> = (0..=max_degree)
        .map(|k| if k == 0 { BigUint::zero() } else { words_of_weight[k].into() })
        .collect();
    let p_a: Vec<BigUint> = (0..=max_degree)
        .map(|k| if k == 0 { BigUint::zero() } else { words_of_weight[k - 1].into() })
        .collect();
    let p: Vec<BigUint> = p_a.iter().zip(&p_b).map(|(a, b)| a + b).collect();
    let dim_h = multiset_counts(&p, max_degree);

    let closed_p_a = rational_series(&[0, 1], max_degree);
    let closed_p_b = rational_series(&[0, 1, 1], max_degree);
    let closed_p: Vec<BigUint> = closed_p_a.iter().zip(&closed_p_b).map(|(a, b)| a + b).collect();
    let closed_dim_h = euler_product(&closed_p, max_degree);

    (0..=max_degree)
        .map(|k| HilbertRow {
            degree: k,
            p_a: p_a[k].clone(),
            p_b: p_b[k].clone(),
            p: p[k].clone(),
            dim_h: dim_h[k].clone(),
            closed_p_a: closed_p_a[k].clone(),
            closed_p_b: closed_p_b[k].clone(),
            closed_dim_h: closed_dim_h[k].clone(),
        })
        .collect()
}

/// Visits every word of weight `<= max`, tallying by weight.
fn count_words(weight: usize, max: usize, tally: &mut [u64]) {
    tally[weight] += 1;
    for l in Letter::ALL {
        let w = weight + if l == Letter::X0 { 2 } else { 1 };
        if w <= max {
            count_words(w, max, tally);
        }
    }
}

/// Coefficients of `∏_j (1-X^j)^{-p_j}`, adding one generator at a time.
fn multiset_counts(p: &[BigUint], max: usize) -> Vec<BigUint> {
    let mut dp = vec![BigUint::zero(); max + 1];
    dp[0] = BigUint::one();
    for (j, count) in p.iter().enumerate().skip(1) {
        let mut remaining = count.clone();
        while !remaining.is_zero() {
            for k in j..=max {
                let add = dp[k - j].clone();
                dp[k] += add;
            }
            remaining -= 1u32;
        }
    }
    dp
}

/// Power-series coefficients of `num(X) / (1 - X - X²)`.
fn rational_series(num: &[u64], max: usize) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(max + 1);
    for k in 0..=max {
        let mut v = BigUint::from(num.get(k).copied().unwrap_or(0));
        if k >= 1 {
            v += &out[k - 1];
        }
        if k >= 2 {
            v += &out[k - 2];
        }
        out.push(v);
    }
    out
}

/// `∏_j (1-X^j)^{-p_j} = ∏_j Σ_m C(p_j+m-1, m) X^{jm}`
fn euler_product(p: &[BigUint], max: usize) -> Vec<BigUint> {
    let mut acc = vec![BigUint::zero(); max + 1];
    acc[0] = BigUint::one();
    for (j, pj) in p.iter().enumerate().skip(1) {
        if pj.is_zero() {
            continue;
        }
        // C(p+m-1, m) built incrementally
        let mut factor = vec![BigUint::zero(); max / j + 1];
        factor[0] = BigUint::one();
        for m in 1..factor.len() {
            factor[m] = &factor[m - 1] * (pj + BigUint::from(m - 1)) / BigUint::from(m);
        }
        let mut next = vec![BigUint::zero(); max + 1];
        for (k, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (m, f) in factor.iter().enumerate() {
                let d = k + j * m;
                if d > max {
                    break;
                }
                next[d] += a * f;
            }
        }
        acc = next;
    }
    acc
}
