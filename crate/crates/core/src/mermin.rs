//! The Peres-Mermin square built from the nine two-qubit observables of the
//! ray table.
//!
//! Values use the 0/1 convention: eigenvalue +1 is written 0 and -1 is
//! written 1, so each row or column constraint says the cell values sum, mod
//! 2, to the bit of that line's product sign.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::geometry::table_triads;
use crate::pauli::PauliObservable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    fn index(self) -> usize {
        self.row * 3 + self.col
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.col + 1)
    }
}

/// A row or column of the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridLine {
    Row(usize),
    Col(usize),
}

impl GridLine {
    /// Rows first, then columns.
    pub const ALL: [GridLine; 6] = [
        GridLine::Row(0),
        GridLine::Row(1),
        GridLine::Row(2),
        GridLine::Col(0),
        GridLine::Col(1),
        GridLine::Col(2),
    ];

    pub fn cells(self) -> [Position; 3] {
        match self {
            GridLine::Row(r) => [0, 1, 2].map(|c| Position::new(r, c)),
            GridLine::Col(c) => [0, 1, 2].map(|r| Position::new(r, c)),
        }
    }

    pub fn contains(self, p: Position) -> bool {
        self.cells().contains(&p)
    }

    fn slot(self) -> usize {
        match self {
            GridLine::Row(r) => r,
            GridLine::Col(c) => 3 + c,
        }
    }
}

impl fmt::Display for GridLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridLine::Row(r) => write!(f, "row {}", r + 1),
            GridLine::Col(c) => write!(f, "column {}", c + 1),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PmSquare {
    pub grid: [[PauliObservable; 3]; 3],
    /// Product of each row, as +1 or -1 times the identity.
    pub row_signs: [i8; 3],
    pub col_signs: [i8; 3],
}

impl PmSquare {
    pub fn cell(&self, p: Position) -> &PauliObservable {
        &self.grid[p.row][p.col]
    }

    pub fn sign(&self, line: GridLine) -> i8 {
        match line {
            GridLine::Row(r) => self.row_signs[r],
            GridLine::Col(c) => self.col_signs[c],
        }
    }

    /// Right-hand sides in 0/1 form, in `GridLine::ALL` order.
    pub fn parities(&self) -> [bool; 6] {
        GridLine::ALL.map(|l| self.sign(l) < 0)
    }

    pub fn odd_lines(&self) -> Vec<GridLine> {
        GridLine::ALL
            .into_iter()
            .filter(|&l| self.sign(l) < 0)
            .collect()
    }
}

fn product_sign(cells: [&PauliObservable; 3]) -> Option<i8> {
    (cells[0].matrix * cells[1].matrix * cells[2].matrix).identity_sign()
}

/// The nine distinct observables of the ray table, in order of appearance.
pub fn table_observables() -> Result<Vec<PauliObservable>> {
    let mut seen: Vec<PauliObservable> = Vec::new();
    for triad in table_triads()? {
        for obs in triad.observables {
            if !seen.contains(&obs) {
                seen.push(obs);
            }
        }
    }
    Ok(seen)
}

/// Places the nine observables in a 3x3 grid with every row and column
/// mutually commuting and multiplying to plus or minus the identity. The
/// search fills cells in reading order, trying observables in table order,
/// and returns the first arrangement found.
pub fn build_pm_square() -> Result<PmSquare> {
    let observables = table_observables()?;
    if observables.len() != 9 {
        return Err(Error::Consistency(format!(
            "{} distinct observables, expected 9",
            observables.len()
        )));
    }

    fn fits(obs: &[PauliObservable], placed: &[usize], candidate: usize) -> bool {
        let k = placed.len();
        let (row, col) = (k / 3, k % 3);
        let c = &obs[candidate];
        let row_ok = (0..col).all(|j| c.commutes_with(&obs[placed[row * 3 + j]]));
        let col_ok = (0..row).all(|i| c.commutes_with(&obs[placed[i * 3 + col]]));
        if !(row_ok && col_ok) {
            return false;
        }
        if col == 2 {
            let cells = [&obs[placed[row * 3]], &obs[placed[row * 3 + 1]], c];
            if product_sign(cells).is_none() {
                return false;
            }
        }
        if row == 2 {
            let cells = [&obs[placed[col]], &obs[placed[3 + col]], c];
            if product_sign(cells).is_none() {
                return false;
            }
        }
        true
    }

    fn search(obs: &[PauliObservable], placed: &mut Vec<usize>) -> bool {
        if placed.len() == 9 {
            return true;
        }
        for candidate in 0..obs.len() {
            if placed.contains(&candidate) || !fits(obs, placed, candidate) {
                continue;
            }
            placed.push(candidate);
            if search(obs, placed) {
                return true;
            }
            placed.pop();
        }
        false
    }

    let mut placed = Vec::with_capacity(9);
    if !search(&observables, &mut placed) {
        return Err(Error::Consistency("no commuting arrangement exists".into()));
    }
    let grid: [[PauliObservable; 3]; 3] =
        std::array::from_fn(|r| std::array::from_fn(|c| observables[placed[r * 3 + c]]));
    let sign_of = |line: GridLine| {
        let [a, b, c] = line.cells();
        product_sign([
            &grid[a.row][a.col],
            &grid[b.row][b.col],
            &grid[c.row][c.col],
        ])
        .expect("checked during search")
    };
    Ok(PmSquare {
        row_signs: [0, 1, 2].map(|r| sign_of(GridLine::Row(r))),
        col_signs: [0, 1, 2].map(|c| sign_of(GridLine::Col(c))),
        grid,
    })
}

/// Number of 0/1 fillings of the nine cells meeting every constraint that
/// is present; `None` drops a constraint.
pub fn count_satisfying(parities: [Option<bool>; 6]) -> usize {
    (0u16..512)
        .filter(|&values| {
            GridLine::ALL.iter().zip(parities).all(|(line, rhs)| {
                let Some(rhs) = rhs else { return true };
                let sum = line
                    .cells()
                    .iter()
                    .filter(|p| values >> p.index() & 1 == 1)
                    .count();
                (sum % 2 == 1) == rhs
            })
        })
        .count()
}

/// Satisfying fillings of the square's own constraints.
pub fn exhaustive_unsat(square: &PmSquare) -> usize {
    count_satisfying(square.parities().map(Some))
}

/// Sum of all six constraints over GF(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraicContradiction {
    /// Cells with odd total coefficient on the left-hand side.
    pub lhs_cells: u16,
    pub rhs: bool,
}

impl AlgebraicContradiction {
    /// `0 = 1`: the summed left side vanishes while the right side is 1.
    pub fn is_contradiction(&self) -> bool {
        self.lhs_cells == 0 && self.rhs
    }
}

pub fn algebraic_contradiction(square: &PmSquare) -> AlgebraicContradiction {
    let mut lhs_cells = 0u16;
    let mut rhs = false;
    for line in GridLine::ALL {
        for p in line.cells() {
            lhs_cells ^= 1 << p.index();
        }
        rhs ^= square.sign(line) < 0;
    }
    AlgebraicContradiction { lhs_cells, rhs }
}

/// GF(2)-affine expression in the seed symbols a, b, c, d.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AffineExpr {
    pub constant: bool,
    /// Bit `k` is the coefficient of symbol `k` (a = 0).
    pub coefficients: u8,
}

impl AffineExpr {
    pub const SYMBOLS: [char; 4] = ['a', 'b', 'c', 'd'];

    pub fn symbol(k: usize) -> Self {
        Self {
            constant: false,
            coefficients: 1 << k,
        }
    }

    pub fn constant(bit: bool) -> Self {
        Self {
            constant: bit,
            coefficients: 0,
        }
    }

    pub fn eval(&self, values: [bool; 4]) -> bool {
        (0..4).fold(self.constant, |acc, k| {
            acc ^ (self.coefficients >> k & 1 == 1 && values[k])
        })
    }
}

impl Add for AffineExpr {
    type Output = AffineExpr;

    fn add(self, rhs: AffineExpr) -> AffineExpr {
        AffineExpr {
            constant: self.constant ^ rhs.constant,
            coefficients: self.coefficients ^ rhs.coefficients,
        }
    }
}

impl fmt::Display for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = (0..4)
            .filter(|k| self.coefficients >> k & 1 == 1)
            .map(|k| Self::SYMBOLS[k].to_string())
            .collect();
        if self.constant {
            terms.push("1".into());
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub cell: Position,
    pub expr: AffineExpr,
    pub line: GridLine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropagationTrace {
    pub seeds: [(Position, AffineExpr); 4],
    pub steps: Vec<TraceStep>,
    /// Constraint through the first seed cell held back to close the loop.
    pub closing_line: GridLine,
    pub contradiction_cell: Position,
    /// The first seed cell as re-derived through `closing_line`.
    pub final_expr: AffineExpr,
}

impl PropagationTrace {
    /// Whether substituting `values` for a, b, c, d makes the start cell's
    /// seed and re-derived values disagree.
    pub fn contradicts(&self, values: [bool; 4]) -> bool {
        self.seeds[0].1.eval(values) != self.final_expr.eval(values)
    }
}

/// The top-left 2x2 block.
pub const DEFAULT_SEED: [Position; 4] = [
    Position::new(0, 0),
    Position::new(0, 1),
    Position::new(1, 0),
    Position::new(1, 1),
];

/// Seeds four cells with a, b, c, d and fills the rest one constraint at a
/// time, keeping back the first row or column through the first seed cell.
/// Once every cell is known, that held-back constraint re-derives the first
/// seed cell.
pub fn transitivity_trace(square: &PmSquare, seed: [Position; 4]) -> Result<PropagationTrace> {
    let mut known: [Option<AffineExpr>; 9] = [None; 9];
    for (k, p) in seed.iter().enumerate() {
        if p.row > 2 || p.col > 2 {
            return Err(Error::InvalidSeed("cell outside the 3x3 grid"));
        }
        if known[p.index()].is_some() {
            return Err(Error::InvalidSeed("repeated seed cell"));
        }
        known[p.index()] = Some(AffineExpr::symbol(k));
    }
    let start = seed[0];
    let closing_line = GridLine::ALL
        .into_iter()
        .find(|l| l.contains(start))
        .expect("every cell lies on a row");
    let parities = square.parities();

    let mut used = [false; 6];
    used[closing_line.slot()] = true;
    let mut steps = Vec::new();
    while known.iter().any(Option::is_none) {
        let mut progressed = false;
        for line in GridLine::ALL {
            if used[line.slot()] {
                continue;
            }
            let cells = line.cells();
            let unknown: Vec<Position> = cells
                .iter()
                .copied()
                .filter(|p| known[p.index()].is_none())
                .collect();
            match unknown[..] {
                [] => {
                    return Err(Error::InvalidSeed(
                        "a constraint is fixed by the seed alone",
                    ))
                }
                [target] => {
                    let expr = cells
                        .iter()
                        .filter(|&&p| p != target)
                        .fold(AffineExpr::constant(parities[line.slot()]), |acc, p| {
                            acc + known[p.index()].expect("known cell")
                        });
                    known[target.index()] = Some(expr);
                    used[line.slot()] = true;
                    steps.push(TraceStep {
                        cell: target,
                        expr,
                        line,
                    });
                    progressed = true;
                    break;
                }
                _ => {}
            }
        }
        if !progressed {
            return Err(Error::PropagationStalled {
                known: known.iter().flatten().count(),
            });
        }
    }

    let final_expr = closing_line.cells().iter().filter(|&&p| p != start).fold(
        AffineExpr::constant(parities[closing_line.slot()]),
        |acc, p| acc + known[p.index()].expect("all cells known"),
    );
    let seeds = std::array::from_fn(|k| (seed[k], AffineExpr::symbol(k)));
    if final_expr == AffineExpr::symbol(0) {
        return Err(Error::Consistency("the constraints are consistent".into()));
    }
    Ok(PropagationTrace {
        seeds,
        steps,
        closing_line,
        contradiction_cell: start,
        final_expr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Pauli::{self, *};

    fn labels(sq: &PmSquare) -> [[(Pauli, Pauli); 3]; 3] {
        sq.grid.map(|row| row.map(|o| o.label))
    }

    #[test]
    fn first_arrangement() {
        let sq = build_pm_square().unwrap();
        assert_eq!(
            labels(&sq),
            [
                [(Z, I), (I, Z), (Z, Z)],
                [(I, X), (X, I), (X, X)],
                [(Z, X), (X, Z), (Y, Y)],
            ]
        );
    }

    #[test]
    fn exactly_one_odd_line() {
        let sq = build_pm_square().unwrap();
        assert_eq!(sq.odd_lines(), vec![GridLine::Col(2)]);
        let plus = GridLine::ALL.iter().filter(|&&l| sq.sign(l) == 1).count();
        assert_eq!(plus, 5);
    }

    #[test]
    fn rows_and_columns_commute() {
        let sq = build_pm_square().unwrap();
        for line in GridLine::ALL {
            let [a, b, c] = line.cells().map(|p| *sq.cell(p));
            assert!(a.commutes_with(&b) && a.commutes_with(&c) && b.commutes_with(&c));
        }
    }

    #[test]
    fn counting() {
        let sq = build_pm_square().unwrap();
        assert_eq!(exhaustive_unsat(&sq), 0);
        let mut relaxed = sq.parities().map(Some);
        let odd = GridLine::Col(2).slot();
        relaxed[odd] = None;
        assert_eq!(count_satisfying(relaxed), 16);
        for pos in 0..6 {
            let mut rhs = [Some(false); 6];
            rhs[pos] = Some(true);
            assert_eq!(count_satisfying(rhs), 0, "odd constraint at {pos}");
        }
        assert_eq!(count_satisfying([Some(false); 6]), 16);
    }

    #[test]
    fn six_constraints_sum_to_zero_equals_one() {
        let sq = build_pm_square().unwrap();
        let c = algebraic_contradiction(&sq);
        assert_eq!(c.lhs_cells, 0);
        assert!(c.rhs);
        assert!(c.is_contradiction());
    }

    #[test]
    fn default_trace_returns_a_plus_one() {
        let sq = build_pm_square().unwrap();
        let t = transitivity_trace(&sq, DEFAULT_SEED).unwrap();
        assert_eq!(t.final_expr.to_string(), "a + 1");
        assert_eq!(t.contradiction_cell, Position::new(0, 0));
        assert_eq!(t.closing_line, GridLine::Row(0));
        assert!(t.steps.len() <= 5);
        for bits in 0u8..16 {
            let values = [0, 1, 2, 3].map(|k| bits >> k & 1 == 1);
            assert!(t.contradicts(values));
        }
    }

    #[test]
    fn bad_seeds() {
        let sq = build_pm_square().unwrap();
        let dup = [Position::new(0, 0); 4];
        assert!(matches!(
            transitivity_trace(&sq, dup),
            Err(Error::InvalidSeed(_))
        ));
        let full_row = [
            Position::new(1, 0),
            Position::new(1, 1),
            Position::new(1, 2),
            Position::new(0, 0),
        ];
        assert!(transitivity_trace(&sq, full_row).is_err());
    }

    #[test]
    fn affine_display_and_eval() {
        let e = AffineExpr::symbol(0) + AffineExpr::symbol(2) + AffineExpr::constant(true);
        assert_eq!(e.to_string(), "a + c + 1");
        assert!(e.eval([false, false, false, false]));
        assert!(!e.eval([true, false, false, false]));
        assert_eq!(AffineExpr::default().to_string(), "0");
    }
}
