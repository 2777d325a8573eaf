//! Elements of the Weyl algebra `Q(i)<x, Dx>` in normal form (all powers of
//! `x` to the left of all powers of `Dx`).

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binomial, falling_factorial, GaussianRational, Polynomial, Rational};

/// `sum c_{a,b} x^a Dx^b`, keyed by `(a, b)`. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct WeylElement {
    terms: BTreeMap<(u32, u32), GaussianRational>,
}

/// Normal form of `Dx^b x^c = sum_k C(b,k) [c]_k x^(c-k) Dx^(b-k)`.
fn d_pow_times_x_pow(b: u32, c: u32) -> Vec<((u32, u32), BigInt)> {
    (0..=b.min(c))
        .map(|k| {
            let coeff = binomial(b as u64, k as u64) * falling_factorial(c as i64, k);
            ((c - k, b - k), coeff)
        })
        .collect()
}

impl WeylElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(GaussianRational::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(GaussianRational::one(), 1, 0)
    }

    pub fn dx() -> Self {
        Self::monomial(GaussianRational::one(), 0, 1)
    }

    /// `c x^a Dx^b`.
    pub fn monomial(c: GaussianRational, a: u32, b: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(a, b, &c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), GaussianRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in terms {
            out.add_term(a, b, &c);
        }
        out
    }

    /// `p(x) Dx^b`.
    pub fn from_poly_coeff(p: &Polynomial, b: u32) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(a, c)| ((a as u32, b), c.clone())),
        )
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> GaussianRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
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

    /// Highest power of `Dx` (the order as a differential operator).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    /// Highest power of `x`.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    /// The polynomial coefficient of `Dx^b`.
    pub fn coeff_poly(&self, b: u32) -> Polynomial {
        let deg = self
            .terms
            .keys()
            .filter(|&&(_, bb)| bb == b)
            .map(|&(a, _)| a)
            .max();
        let Some(deg) = deg else {
            return Polynomial::zero();
        };
        Polynomial::new((0..=deg).map(|a| self.coeff(a, b)).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Image under the Fourier isomorphism `x -> i Dx`, `Dx -> i x`,
    /// brought back to normal form.
    pub fn fourier(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            // x^a Dx^b -> i^(a+b) Dx^a x^b
            let c = c * GaussianRational::i_pow((a + b) as i64);
            for ((aa, bb), k) in d_pow_times_x_pow(a, b) {
                out.add_term(aa, bb, &c.scale(&Rational::from_integer(k)));
            }
        }
        out
    }

    /// Substitution `x -> -x`, `Dx -> -Dx`.
    pub fn reflect(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a, b), if (a + b) % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Left multiplication by `x^k`.
    pub fn mul_x_pow(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + k, b), c.clone())).collect(),
        }
    }

    /// The coefficient of the highest `x` power inside the highest `Dx`
    /// power; the normalization anchor for canonical forms.
    pub fn leading_coefficient(&self) -> Option<GaussianRational> {
        let b = self.order()?;
        let a = self
            .terms
            .keys()
            .filter(|&&(_, bb)| bb == b)
            .map(|&(a, _)| a)
            .max()?;
        Some(self.coeff(a, b))
    }

    /// Representative of `{ s * self : s != 0 }`: Gaussian-integer
    /// coefficients with unit integer content and a positive integer
    /// leading coefficient.
    pub fn canonical(&self) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lc) => {
                let s = super::canonical_scalar(self.terms.values(), &lc);
                self.scale(&s)
            }
        }
    }

    pub fn equals_up_to_scalar(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<'a, 'b> Add<&'b WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &'b WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl<'a> Neg for &'a WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl<'a, 'b> Sub<&'b WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &'b WeylElement) -> WeylElement {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    /// `x^a Dx^b * x^c Dx^d = x^a (Dx^b x^c) Dx^d`, with `Dx^b x^c` expanded by
    /// the Leibniz rule `Dx x = x Dx + 1`.
    fn mul(self, rhs: &'b WeylElement) -> WeylElement {
        let mut out = WeylElement::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &rhs.terms {
                let prod = c1 * c2;
                for ((aa, bb), k) in d_pow_times_x_pow(b, c) {
                    out.add_term(a + aa, bb + d, &prod.scale(&Rational::from_integer(k)));
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<WeylElement> for WeylElement {
            type Output = WeylElement;
            fn $method(self, rhs: WeylElement) -> WeylElement {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `weyl_mul`: normal-form product.
pub fn weyl_mul(u: &WeylElement, v: &WeylElement) -> WeylElement {
    u * v
}

/// `fourier`: image under `x -> i Dx`, `Dx -> i x`.
pub fn fourier(w: &WeylElement) -> WeylElement {
    w.fourier()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn commutation_rule() {
        let x = WeylElement::x();
        let d = WeylElement::dx();
        // Dx x = x Dx + 1
        assert_eq!(&d * &x, &(&x * &d) + &WeylElement::one());
        // x x = x^2
        assert_eq!(&x * &x, WeylElement::monomial(g(1), 2, 0));
        // Dx^2 x = x Dx^2 + 2 Dx
        let d2 = &d * &d;
        assert_eq!(
            &d2 * &x,
            WeylElement::from_terms([((1, 2), g(1)), ((0, 1), g(2))])
        );
    }

    #[test]
    fn fourier_of_generators() {
        let i = GaussianRational::i();
        assert_eq!(WeylElement::x().fourier(), WeylElement::monomial(i.clone(), 0, 1));
        assert_eq!(WeylElement::dx().fourier(), WeylElement::monomial(i, 1, 0));
        // F(x Dx + 1) = i Dx * i x + 1 = -(x Dx + 1) + 1 = -x Dx
        let w = &(&WeylElement::dx() * &WeylElement::x()) + &WeylElement::zero();
        assert_eq!(w.fourier(), WeylElement::monomial(g(-1), 1, 1));
    }

    #[test]
    fn fourier_twice_reflects() {
        let w = WeylElement::from_terms([((2, 1), g(3)), ((0, 3), GaussianRational::i()), ((1, 0), g(-5))]);
        assert_eq!(w.fourier().fourier(), w.reflect());
    }

    #[test]
    fn canonical_scalar_class() {
        let w = WeylElement::from_terms([((2, 1), g(6)), ((0, 0), g(4))]);
        let c = w.canonical();
        assert_eq!(c, WeylElement::from_terms([((2, 1), g(3)), ((0, 0), g(2))]));
        assert!(w.scale(&GaussianRational::new(crate::algebra::rat(-2, 7), crate::algebra::rat(1, 3))).equals_up_to_scalar(&w));
        assert_eq!(w.leading_coefficient(), Some(g(6)));
        assert_eq!(w.order(), Some(1));
        assert_eq!(w.x_degree(), Some(2));
    }
}
