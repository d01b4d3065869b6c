//! Two-qubit Pauli observables as exact integer matrices.

use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex;

use crate::error::{Error, Result};

type Gaussian = Complex<i32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn matrix(self) -> [[Gaussian; 2]; 2] {
        let re = |x| Complex::new(x, 0);
        let im = |x| Complex::new(0, x);
        match self {
            Pauli::I => [[re(1), re(0)], [re(0), re(1)]],
            Pauli::X => [[re(0), re(1)], [re(1), re(0)]],
            Pauli::Y => [[re(0), im(-1)], [im(1), re(0)]],
            Pauli::Z => [[re(1), re(0)], [re(0), re(-1)]],
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Exact 4x4 integer matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat4(pub [[i32; 4]; 4]);

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);

    pub fn apply(&self, v: &[i32; 4]) -> [i32; 4] {
        let mut out = [0; 4];
        for (i, row) in self.0.iter().enumerate() {
            out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    pub fn transpose(&self) -> Mat4 {
        let mut t = [[0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t[j][i] = x;
            }
        }
        Mat4(t)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn commutes_with(&self, other: &Mat4) -> bool {
        *self * *other == *other * *self
    }

    /// `Some(+1)` or `Some(-1)` when the matrix is plus or minus the identity.
    pub fn identity_sign(&self) -> Option<i8> {
        if *self == Mat4::IDENTITY {
            Some(1)
        } else if *self == -Mat4::IDENTITY {
            Some(-1)
        } else {
            None
        }
    }
}

impl Mul for Mat4 {
    type Output = Mat4;

    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = [[0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Mat4(out)
    }
}

impl Neg for Mat4 {
    type Output = Mat4;

    fn neg(self) -> Mat4 {
        Mat4(self.0.map(|row| row.map(|x| -x)))
    }
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A tensor product `first ⊗ second`, qubit 1 being the more significant
/// index. Only products with real entries are representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliObservable {
    pub label: (Pauli, Pauli),
    pub matrix: Mat4,
}

impl PauliObservable {
    pub fn new(first: Pauli, second: Pauli) -> Result<Self> {
        let (a, b) = (first.matrix(), second.matrix());
        let mut m = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let z = a[i / 2][j / 2] * b[i % 2][j % 2];
                if z.im != 0 {
                    return Err(Error::Consistency(format!(
                        "{}{} has imaginary entries",
                        first.symbol(),
                        second.symbol()
                    )));
                }
                m[i][j] = z.re;
            }
        }
        Ok(Self {
            label: (first, second),
            matrix: Mat4(m),
        })
    }

    pub fn commutes_with(&self, other: &PauliObservable) -> bool {
        self.matrix.commutes_with(&other.matrix)
    }

    /// Eigenvalue of `v` if it is an eigenvector with eigenvalue +1 or -1.
    pub fn eigenvalue(&self, v: &[i32; 4]) -> Option<i8> {
        let image = self.matrix.apply(v);
        if image == *v {
            Some(1)
        } else if image == v.map(|x| -x) {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Display for PauliObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label.0.symbol(), self.label.1.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Pauli::*;

    fn obs(a: Pauli, b: Pauli) -> PauliObservable {
        PauliObservable::new(a, b).unwrap()
    }

    #[test]
    fn yy_is_real() {
        let yy = obs(Y, Y);
        assert_eq!(
            yy.matrix.0,
            [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]
        );
        assert!(PauliObservable::new(Y, I).is_err());
    }

    #[test]
    fn squares_to_identity() {
        for (a, b) in [
            (Z, I),
            (I, Z),
            (Z, Z),
            (X, I),
            (I, X),
            (X, X),
            (Z, X),
            (X, Z),
            (Y, Y),
        ] {
            let o = obs(a, b);
            assert_eq!(o.matrix * o.matrix, Mat4::IDENTITY, "{o}");
            assert!(o.matrix.is_symmetric());
        }
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(obs(X, I).eigenvalue(&[1, 1, 1, 1]), Some(1));
        assert_eq!(obs(Z, I).eigenvalue(&[2, 0, 0, 0]), Some(1));
        assert_eq!(obs(Z, X).eigenvalue(&[1, -1, -1, -1]), Some(-1));
        assert_eq!(obs(X, I).eigenvalue(&[2, 0, 0, 0]), None);
    }

    #[test]
    fn anticommuting_pair() {
        assert!(!obs(Z, I).commutes_with(&obs(X, I)));
        assert!(obs(Z, Z).commutes_with(&obs(X, X)));
    }
}
