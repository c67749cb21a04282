use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::algebra::{CoordinateMap, HopfElement, HopfMonomial, Kind, TensorSum};
use crate::coeff::Coeff;
use crate::series::unshuffle;
use crate::word::Letter;

/// `Δ̃ h` with each left leg kept as a coordinate map.
///
/// `b_∅` must survive as a left leg until `θ_k` lifts it, so the rows are
/// not collapsed into a [`TensorSum`] during the recursion.
pub(crate) type TildeRows = BTreeMap<(CoordinateMap, HopfMonomial), Coeff>;

/// Insert-only memo tables shared by every coproduct and antipode call.
#[derive(Default)]
pub(crate) struct HopfCache {
    tilde: RwLock<HashMap<CoordinateMap, Arc<TildeRows>>>,
    full: RwLock<HashMap<CoordinateMap, Arc<TensorSum>>>,
    pub(crate) antipode: RwLock<HashMap<CoordinateMap, Arc<HopfElement>>>,
}

pub(crate) fn cache() -> &'static HopfCache {
    static CACHE: OnceLock<HopfCache> = OnceLock::new();
    CACHE.get_or_init(HopfCache::default)
}

/// Looks up `key`, computing it without holding any lock on a miss. A
/// concurrent computation of the same key yields the same value, so the
/// first insert wins.
pub(crate) fn memo<K, V>(table: &RwLock<HashMap<K, Arc<V>>>, key: &K, compute: impl FnOnce() -> V) -> Arc<V>
where
    K: Clone + Eq + Hash,
{
    if let Some(v) = table.read().expect("memo lock").get(key) {
        return Arc::clone(v);
    }
    let v = Arc::new(compute());
    let mut guard = table.write().expect("memo lock");
    Arc::clone(guard.entry(key.clone()).or_insert(v))
}

fn mult(m: u64) -> Coeff {
    Coeff::from_integer(BigInt::from(m))
}

fn add_row(rows: &mut TildeRows, g: CoordinateMap, m: HopfMonomial, k: Coeff) {
    use std::collections::btree_map::Entry;
    match rows.entry((g, m)) {
        Entry::Vacant(v) => {
            v.insert(k);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += k;
        }
    }
}

/// `Δ_ш^{h̃} h_η`: the unshuffle of `η` lifted to `(kind(h), ξ) ⊗ (h̃, ν)`.
pub fn shuffle_coproduct(h: &CoordinateMap, right_kind: Kind) -> TensorSum {
    let mut out = TensorSum::zero();
    for (xi, nu, m) in unshuffle(&h.word).terms() {
        out.add_term(
            HopfMonomial::generator(CoordinateMap::new(h.kind, xi.clone())),
            HopfMonomial::generator(CoordinateMap::new(right_kind, nu.clone())),
            mult(m),
        );
    }
    out
}

pub(crate) fn tilde_rows(h: &CoordinateMap) -> Arc<TildeRows> {
    memo(&cache().tilde, h, || compute_tilde(h))
}

fn compute_tilde(h: &CoordinateMap) -> TildeRows {
    let mut out = TildeRows::new();
    let Some((first, rest)) = h.word.split_first() else {
        add_row(&mut out, h.clone(), HopfMonomial::unit(), Coeff::one());
        return out;
    };
    if first == Letter::X0 {
        let base = tilde_rows(&CoordinateMap::new(h.kind, rest.clone()));
        for ((g, m), k) in base.iter() {
            add_row(&mut out, g.theta(Letter::X0), m.clone(), k.clone());
        }
    }
    // θ_1 applied through Δ_ш^b for x1, through Δ_ш^a for x0
    let right_kind = match first {
        Letter::X1 => Kind::B,
        Letter::X0 => Kind::A,
    };
    for (xi, nu, mu) in unshuffle(&rest).terms() {
        let right = HopfMonomial::generator(CoordinateMap::new(right_kind, nu.clone()));
        let inner = tilde_rows(&CoordinateMap::new(h.kind, xi.clone()));
        for ((g, m), k) in inner.iter() {
            add_row(&mut out, g.theta(Letter::X1), m * &right, k * mult(mu));
        }
    }
    out.retain(|_, k| !num_traits::Zero::is_zero(k));
    out
}

/// `Δ̃ h`, the right coaction dual to the mixed composition.
pub fn tilde_coproduct(h: &CoordinateMap) -> TensorSum {
    let mut out = TensorSum::zero();
    for ((g, m), k) in tilde_rows(h).iter() {
        out.add_term(HopfMonomial::generator(g.clone()), m.clone(), k.clone());
    }
    out
}

/// `Δ h`, the coproduct dual to the group product.
pub fn full_coproduct(h: &CoordinateMap) -> Arc<TensorSum> {
    memo(&cache().full, h, || compute_full(h))
}

fn compute_full(h: &CoordinateMap) -> TensorSum {
    let mut out = TensorSum::zero();
    for (xi, nu, m) in unshuffle(&h.word).terms() {
        let right = HopfMonomial::generator(CoordinateMap::new(h.kind, nu.clone()));
        let left = tilde_coproduct(&CoordinateMap::b(xi.clone()));
        out += &left.mul_right(&right).scale(&mult(m));
    }
    if h.kind == Kind::A {
        out += &tilde_coproduct(h);
    }
    out
}

/// `Δ' h = Δ h - h ⊗ 1 - 1 ⊗ h`.
pub fn reduced_coproduct(h: &CoordinateMap) -> TensorSum {
    let full = full_coproduct(h);
    full.as_ref() - &TensorSum::primitive_part(&HopfElement::generator(h.clone()))
}

/// Multiplicative extension of `Δ` with `Δ 1 = 1 ⊗ 1`.
pub fn coproduct_on_element(e: &HopfElement) -> TensorSum {
    let mut out = TensorSum::zero();
    for (m, k) in e.terms() {
        let mut t = TensorSum::unit();
        for (h, p) in m.factors() {
            let d = full_coproduct(h);
            for _ in 0..p {
                t = &t * d.as_ref();
            }
        }
        out += &t.scale(k);
    }
    out
}

/// Counit: the coefficient of the unit monomial.
pub fn counit(e: &HopfElement) -> Coeff {
    e.constant_term()
}
