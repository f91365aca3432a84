use std::ops::{Add, Mul, Neg, Sub};

use super::Eisenstein;
use crate::scalar::Coeff;

impl<T: Coeff> Add for &Eisenstein<T> {
    type Output = Eisenstein<T>;

    fn add(self, rhs: &Eisenstein<T>) -> Eisenstein<T> {
        Eisenstein {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
            prec: self.prec.min(rhs.prec),
        }
    }
}

impl<T: Coeff> Sub for &Eisenstein<T> {
    type Output = Eisenstein<T>;

    fn sub(self, rhs: &Eisenstein<T>) -> Eisenstein<T> {
        Eisenstein {
            a: self.a.clone() - rhs.a.clone(),
            b: self.b.clone() - rhs.b.clone(),
            prec: self.prec.min(rhs.prec),
        }
    }
}

impl<T: Coeff> Mul for &Eisenstein<T> {
    type Output = Eisenstein<T>;

    /// `(a + bθ)(c + dθ) = (ac − bd) + (ad + bc − bd)θ`
    fn mul(self, rhs: &Eisenstein<T>) -> Eisenstein<T> {
        let bd = self.b.clone() * rhs.b.clone();
        Eisenstein {
            a: self.a.clone() * rhs.a.clone() - bd.clone(),
            b: self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.a.clone() - bd,
            prec: self.prec.min(rhs.prec),
        }
    }
}

impl<T: Coeff> Neg for &Eisenstein<T> {
    type Output = Eisenstein<T>;

    fn neg(self) -> Eisenstein<T> {
        Eisenstein {
            a: -self.a.clone(),
            b: -self.b.clone(),
            prec: self.prec,
        }
    }
}

impl<T: Coeff> Neg for Eisenstein<T> {
    type Output = Eisenstein<T>;

    fn neg(self) -> Eisenstein<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Eisenstein<T> {
            type Output = Eisenstein<T>;

            fn $m(self, rhs: Eisenstein<T>) -> Eisenstein<T> {
                (&self).$m(&rhs)
            }
        }

        impl<T: Coeff> $tr<&Eisenstein<T>> for Eisenstein<T> {
            type Output = Eisenstein<T>;

            fn $m(self, rhs: &Eisenstein<T>) -> Eisenstein<T> {
                (&self).$m(rhs)
            }
        }

        impl<T: Coeff> $tr<Eisenstein<T>> for &Eisenstein<T> {
            type Output = Eisenstein<T>;

            fn $m(self, rhs: Eisenstein<T>) -> Eisenstein<T> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
