use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::word::{Letter, Word};

/// Which component of the pair a coordinate map reads.
///
/// `B` reads the left series and sorts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    B,
    A,
}

impl Kind {
    pub fn symbol(self) -> char {
        match self {
            Kind::B => 'b',
            Kind::A => 'a',
        }
    }
}

/// A coordinate map `b_η` or `a_η`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordinateMap {
    pub kind: Kind,
    pub word: Word,
}

impl CoordinateMap {
    pub fn new(kind: Kind, word: Word) -> Self {
        CoordinateMap { kind, word }
    }

    pub fn b(word: Word) -> Self {
        Self::new(Kind::B, word)
    }

    pub fn a(word: Word) -> Self {
        Self::new(Kind::A, word)
    }

    /// `2·|η|_{x0} + |η|_{x1}`, plus one for `a`.
    pub fn degree(&self) -> usize {
        self.word.weight() + usize::from(self.kind == Kind::A)
    }

    /// `b_∅`, identified with the algebra unit.
    pub fn is_unit(&self) -> bool {
        self.kind == Kind::B && self.word.is_empty()
    }

    /// `θ_k h_η = h_{x_k η}`
    pub fn theta(&self, l: Letter) -> Self {
        CoordinateMap {
            kind: self.kind,
            word: self.word.prepend(l),
        }
    }

    /// All coordinate maps other than `b_∅` whose word has length `<= max_len`.
    pub fn all_up_to(max_len: usize) -> Vec<CoordinateMap> {
        let words = Word::all_up_to(max_len);
        let mut out: Vec<_> = words
            .iter()
            .filter(|w| !w.is_empty())
            .map(|w| CoordinateMap::b(w.clone()))
            .collect();
        out.extend(words.into_iter().map(CoordinateMap::a));
        out
    }

    /// All coordinate maps other than `b_∅` of degree `1..=max_degree`,
    /// sorted by degree.
    pub fn all_of_degree_up_to(max_degree: usize) -> Vec<CoordinateMap> {
        let mut out: Vec<_> = CoordinateMap::all_up_to(max_degree)
            .into_iter()
            .filter(|h| h.degree() <= max_degree)
            .collect();
        out.sort_by_key(|h| h.degree());
        out
    }
}

/// A commutative monomial: coordinate maps with positive exponents.
///
/// `b_∅` never appears as a factor; the empty monomial is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HopfMonomial {
    factors: BTreeMap<CoordinateMap, u32>,
}

impl HopfMonomial {
    pub fn unit() -> Self {
        HopfMonomial::default()
    }

    pub fn generator(h: CoordinateMap) -> Self {
        let mut m = HopfMonomial::unit();
        m.push(h, 1);
        m
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (CoordinateMap, u32)>) -> Self {
        let mut m = HopfMonomial::unit();
        for (h, k) in factors {
            m.push(h, k);
        }
        m
    }

    fn push(&mut self, h: CoordinateMap, k: u32) {
        if k > 0 && !h.is_unit() {
            *self.factors.entry(h).or_insert(0) += k;
        }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// The single generator when this monomial is linear.
    pub fn as_generator(&self) -> Option<&CoordinateMap> {
        match self.factors.iter().next() {
            Some((h, 1)) if self.factors.len() == 1 => Some(h),
            _ => None,
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (&CoordinateMap, u32)> {
        self.factors.iter().map(|(h, &k)| (h, k))
    }

    pub fn total_factors(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(h, &k)| h.degree() * k as usize).sum()
    }

    /// Length of the longest word among the factors.
    pub fn max_word_len(&self) -> usize {
        self.factors.keys().map(|h| h.word.len()).max().unwrap_or(0)
    }

    fn flattened(&self) -> impl Iterator<Item = &CoordinateMap> {
        self.factors
            .iter()
            .flat_map(|(h, &k)| std::iter::repeat_n(h, k as usize))
    }

    fn rank(&self) -> u8 {
        match self.total_factors() {
            0 => 0,
            1 => 1,
            _ => 2,
        }
    }
}

/// Unit first, then linear monomials, then the rest; ties broken by the
/// sorted factor lists compared lexicographically.
impl Ord for HopfMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.flattened().cmp(other.flattened()))
    }
}

impl PartialOrd for HopfMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &HopfMonomial {
    type Output = HopfMonomial;
    fn mul(self, rhs: &HopfMonomial) -> HopfMonomial {
        let mut out = self.clone();
        for (h, &k) in &rhs.factors {
            out.push(h.clone(), k);
        }
        out
    }
}

/// An element of the free commutative algebra `H`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HopfElement {
    terms: BTreeMap<HopfMonomial, Coeff>,
}

impl HopfElement {
    pub fn zero() -> Self {
        HopfElement::default()
    }

    pub fn one() -> Self {
        HopfElement::monomial(HopfMonomial::unit(), Coeff::one())
    }

    pub fn monomial(m: HopfMonomial, k: Coeff) -> Self {
        let mut e = HopfElement::zero();
        e.add_term(m, k);
        e
    }

    pub fn generator(h: CoordinateMap) -> Self {
        HopfElement::monomial(HopfMonomial::generator(h), Coeff::one())
    }

    pub fn add_term(&mut self, m: HopfMonomial, k: Coeff) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HopfMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &HopfMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> Coeff {
        self.coeff(&HopfMonomial::unit())
    }

    /// Degree of every term, if they agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(HopfMonomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, k: &Coeff) -> HopfElement {
        let mut out = HopfElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul_monomial(&self, m: &HopfMonomial) -> HopfElement {
        let mut out = HopfElement::zero();
        for (n, c) in &self.terms {
            out.add_term(n * m, c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> HopfElement {
        let mut out = HopfElement::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl AddAssign<&HopfElement> for HopfElement {
    fn add_assign(&mut self, rhs: &HopfElement) {
        for (m, k) in &rhs.terms {
            self.add_term(m.clone(), k.clone());
        }
    }
}

impl Add for &HopfElement {
    type Output = HopfElement;
    fn add(self, rhs: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &HopfElement {
    type Output = HopfElement;
    fn sub(self, rhs: &HopfElement) -> HopfElement {
        self + &(-rhs)
    }
}

impl Neg for &HopfElement {
    type Output = HopfElement;
    fn neg(self) -> HopfElement {
        self.scale(&-Coeff::one())
    }
}

impl Mul for &HopfElement {
    type Output = HopfElement;
    fn mul(self, rhs: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m * n, a * b);
            }
        }
        out
    }
}

/// A finite sum of `left ⊗ right` monomial pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSum {
    terms: BTreeMap<(HopfMonomial, HopfMonomial), Coeff>,
}

impl TensorSum {
    pub fn zero() -> Self {
        TensorSum::default()
    }

    /// `1 ⊗ 1`
    pub fn unit() -> Self {
        TensorSum::term(HopfMonomial::unit(), HopfMonomial::unit(), Coeff::one())
    }

    pub fn term(left: HopfMonomial, right: HopfMonomial, k: Coeff) -> Self {
        let mut t = TensorSum::zero();
        t.add_term(left, right, k);
        t
    }

    /// `x ⊗ 1 + 1 ⊗ x`
    pub fn primitive_part(x: &HopfElement) -> Self {
        let mut t = TensorSum::zero();
        for (m, k) in x.terms() {
            t.add_term(m.clone(), HopfMonomial::unit(), k.clone());
            t.add_term(HopfMonomial::unit(), m.clone(), k.clone());
        }
        t
    }

    pub fn add_term(&mut self, left: HopfMonomial, right: HopfMonomial, k: Coeff) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HopfMonomial, &HopfMonomial, &Coeff)> {
        self.terms.iter().map(|((l, r), k)| (l, r, k))
    }

    pub fn coeff(&self, left: &HopfMonomial, right: &HopfMonomial) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn scale(&self, k: &Coeff) -> TensorSum {
        let mut out = TensorSum::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r.clone(), c * k);
        }
        out
    }

    /// `(id ⊗ ·m)`: multiplies every right leg by `m`.
    pub fn mul_right(&self, m: &HopfMonomial) -> TensorSum {
        let mut out = TensorSum::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r * m, c.clone());
        }
        out
    }

    /// `μ(left ⊗ right)`, collapsing the tensor into `H`.
    pub fn multiply_legs(&self) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l * r, c.clone());
        }
        out
    }

    /// Applies `f ⊗ g` leg-wise and multiplies the images.
    pub fn map_legs(
        &self,
        mut f: impl FnMut(&HopfMonomial) -> HopfElement,
        mut g: impl FnMut(&HopfMonomial) -> HopfElement,
    ) -> HopfElement {
        let mut out = HopfElement::zero();
        for ((l, r), c) in &self.terms {
            out += &(&f(l) * &g(r)).scale(c);
        }
        out
    }
}

impl AddAssign<&TensorSum> for TensorSum {
    fn add_assign(&mut self, rhs: &TensorSum) {
        for ((l, r), k) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), k.clone());
        }
    }
}

impl Sub for &TensorSum {
    type Output = TensorSum;
    fn sub(self, rhs: &TensorSum) -> TensorSum {
        let mut out = self.clone();
        out += &rhs.scale(&-Coeff::one());
        out
    }
}

/// Leg-wise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
impl Mul for &TensorSum {
    type Output = TensorSum;
    fn mul(self, rhs: &TensorSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for ((l1, r1), a) in &self.terms {
            for ((l2, r2), b) in &rhs.terms {
                out.add_term(l1 * l2, r1 * r2, a * b);
            }
        }
        out
    }
}
