use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliObservable};

use super::{PeresSystem, RayId};

/// Three commuting observables and the four rays that are their common
/// eigenvectors (one row of the ray table).
#[derive(Debug, Clone, Copy)]
pub struct Triad {
    pub observables: [PauliObservable; 3],
    pub rays: [RayId; 4],
}

/// The six triads, in table order.
pub fn table_triads() -> Result<Vec<Triad>> {
    use Pauli::*;
    let rows: [[(Pauli, Pauli); 3]; 6] = [
        [(Z, I), (I, Z), (Z, Z)],
        [(X, I), (I, X), (X, X)],
        [(Z, X), (X, Z), (Y, Y)],
        [(Z, I), (I, X), (Z, X)],
        [(X, I), (I, Z), (X, Z)],
        [(Z, Z), (X, X), (Y, Y)],
    ];
    rows.iter()
        .enumerate()
        .map(|(row, labels)| {
            let mut observables = Vec::with_capacity(3);
            for &(a, b) in labels {
                observables.push(PauliObservable::new(a, b)?);
            }
            let first = row as u8 * 4 + 1;
            Ok(Triad {
                observables: [observables[0], observables[1], observables[2]],
                rays: [0, 1, 2, 3].map(|k| RayId::new(first + k).expect("row ids are valid")),
            })
        })
        .collect()
}

/// Eigenvalues of one ray under the three observables of its triad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSignature {
    pub ray: RayId,
    pub observables: [String; 3],
    pub eigenvalues: [i8; 3],
}

#[derive(Debug, Clone)]
pub struct EigenReport {
    pub signatures: Vec<EigenSignature>,
    /// Number of (observable, ray) equations checked.
    pub equations: usize,
}

/// Checks every tabulated ray against each observable of its triad by
/// exact matrix-vector products, and that each triad commutes.
pub fn verify_eigenstates(system: &PeresSystem) -> Result<EigenReport> {
    let mut signatures = Vec::new();
    let mut equations = 0;
    for triad in table_triads()? {
        let [a, b, c] = &triad.observables;
        if !(a.commutes_with(b) && a.commutes_with(c) && b.commutes_with(c)) {
            return Err(Error::Consistency(format!(
                "triad {a} {b} {c} does not commute"
            )));
        }
        for &ray in &triad.rays {
            let v = system.ray(ray).components;
            let mut eigenvalues = [0i8; 3];
            for (k, obs) in triad.observables.iter().enumerate() {
                eigenvalues[k] = obs.eigenvalue(&v).ok_or_else(|| {
                    Error::Consistency(format!("ray {ray} is not an eigenvector of {obs}"))
                })?;
                equations += 1;
            }
            signatures.push(EigenSignature {
                ray,
                observables: triad.observables.map(|o| o.to_string()),
                eigenvalues,
            });
        }
    }
    Ok(EigenReport {
        signatures,
        equations,
    })
}
