use std::cmp::Ordering;

use num_complex::Complex;

use super::rep::LieRep;
use crate::error::{Error, Result};
use crate::scalar::{czero, Real};

/// A linear functional on `L`, stored as its values `f(x_1)..f(x_n)` on the
/// generator basis. Characters additionally vanish on `[L, L]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<R: Real = f64> {
    pub values: Vec<Complex<R>>,
}

impl<R: Real> Character<R> {
    pub fn new(values: Vec<Complex<R>>) -> Self {
        Self { values }
    }

    pub fn zero(n: usize) -> Self {
        Self { values: vec![czero(); n] }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self { values: values.iter().map(|&v| Complex::new(R::lit(v), R::zero())).collect() }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `f(v)` for `v` in coefficient coordinates (bilinear, no conjugation).
    pub fn apply(&self, coords: &[Complex<R>]) -> Complex<R> {
        self.values.iter().zip(coords).fold(czero(), |acc, (f, v)| acc + *f * *v)
    }

    /// Sup-norm distance between coordinate vectors.
    pub fn distance(&self, other: &Self) -> R {
        self.values.iter().zip(&other.values).map(|(a, b)| (*a - *b).norm()).fold(R::zero(), R::max)
    }

    pub fn sup_norm(&self) -> R {
        self.values.iter().map(|v| v.norm()).fold(R::zero(), R::max)
    }

    /// Concatenation `(f, g)`, a functional on a direct product.
    pub fn concat(&self, other: &Self) -> Self {
        Self { values: self.values.iter().chain(&other.values).copied().collect() }
    }

    /// Largest `|f([x_i, x_j])|` over basis brackets.
    pub fn derived_defect(&self, rep: &LieRep<R>) -> R {
        rep.bracket_vectors().iter().map(|b| self.apply(b).norm()).fold(R::zero(), R::max)
    }

    /// Canonical order: lexicographic over coordinates, real part before
    /// imaginary part, treating differences within `eps` as ties.
    pub fn canonical_cmp(&self, other: &Self, eps: R) -> Ordering {
        for (a, b) in self.values.iter().zip(&other.values) {
            for (x, y) in [(a.re, b.re), (a.im, b.im)] {
                if (x - y).abs() > eps {
                    return x.partial_cmp(&y).unwrap_or(Ordering::Equal);
                }
            }
        }
        self.dim().cmp(&other.dim())
    }
}

/// `f` vanishes on `[L, L]` up to `eps_cluster * max(1, |f|)`.
pub fn is_character<R: Real>(rep: &LieRep<R>, f: &Character<R>) -> bool {
    f.dim() == rep.dim() && f.derived_defect(rep) <= rep.tolerances().eps_cluster * f.sup_norm().max(R::one())
}

/// Validating form of [`is_character`].
pub fn check_character<R: Real>(rep: &LieRep<R>, f: &Character<R>) -> Result<()> {
    if f.dim() != rep.dim() {
        return Err(Error::input(format!("character has {} values, algebra has dimension {}", f.dim(), rep.dim())));
    }
    if f.values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::input("character has non-finite values"));
    }
    if !is_character(rep, f) {
        return Err(Error::input(format!(
            "functional does not vanish on the derived algebra (defect {:.3e})",
            f.derived_defect(rep).as_f64()
        )));
    }
    Ok(())
}

/// Finite set of characters, deduplicated at a cluster radius and kept in
/// canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterSet<R: Real = f64> {
    items: Vec<Character<R>>,
    radius: R,
}

impl<R: Real> CharacterSet<R> {
    pub fn new(radius: R) -> Self {
        Self { items: Vec::new(), radius }
    }

    pub fn from_characters(radius: R, chars: impl IntoIterator<Item = Character<R>>) -> Self {
        let mut s = Self::new(radius);
        for f in chars {
            s.insert(f);
        }
        s
    }

    /// Adds `f` unless an element within the radius is already present.
    /// Returns whether the set grew.
    pub fn insert(&mut self, f: Character<R>) -> bool {
        if self.contains(&f) {
            return false;
        }
        let r = self.radius;
        let pos = self.items.partition_point(|g| g.canonical_cmp(&f, r) == Ordering::Less);
        self.items.insert(pos, f);
        true
    }

    pub fn contains(&self, f: &Character<R>) -> bool {
        self.items.iter().any(|g| g.dim() == f.dim() && g.distance(f) <= self.radius)
    }

    /// Closest element and its distance.
    pub fn nearest(&self, f: &Character<R>) -> Option<(&Character<R>, R)> {
        self.items.iter().map(|g| (g, g.distance(f))).min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Character<R>> {
        self.items.iter()
    }

    pub fn radius(&self) -> R {
        self.radius
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for f in other.iter() {
            out.insert(f.clone());
        }
        out
    }

    /// Mutual containment at the cluster radius.
    pub fn same_as(&self, other: &Self) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.iter().all(|f| other.contains(f))
    }

    /// Elements of `self` not present in `other`.
    pub fn difference(&self, other: &Self) -> Vec<Character<R>> {
        self.iter().filter(|f| !other.contains(f)).cloned().collect()
    }

    pub fn map(&self, f: impl Fn(&Character<R>) -> Character<R>) -> Self {
        Self::from_characters(self.radius, self.iter().map(f))
    }
}

impl<'a, R: Real> IntoIterator for &'a CharacterSet<R> {
    type Item = &'a Character<R>;
    type IntoIter = std::slice::Iter<'a, Character<R>>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
